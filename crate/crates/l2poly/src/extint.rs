//! Integers extended with `+inf` and `-inf`.
//!
//! `+inf` marks an absent difference constraint, `-inf` an absent lower
//! bound.  The derived ordering is total: `NegInf < Finite(_) < PosInf`.

use std::fmt;
use std::ops::{Add, Neg};

use num::BigInt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    NegInf,
    Finite(BigInt),
    PosInf,
}

impl ExtInt {
    pub fn zero() -> Self {
        ExtInt::Finite(BigInt::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Minimum of a collection; `+inf` when the collection is empty.
    pub fn min_of<I: IntoIterator<Item = ExtInt>>(items: I) -> ExtInt {
        items.into_iter().fold(ExtInt::PosInf, |acc, x| acc.min(x))
    }

    /// Maximum of a collection; `-inf` when the collection is empty.
    pub fn max_of<I: IntoIterator<Item = ExtInt>>(items: I) -> ExtInt {
        items.into_iter().fold(ExtInt::NegInf, |acc, x| acc.max(x))
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(BigInt::from(v))
    }
}

impl From<BigInt> for ExtInt {
    fn from(v: BigInt) -> Self {
        ExtInt::Finite(v)
    }
}

/// Addition with absorbing infinities.
///
/// Panics on `+inf + -inf`: that combination is a programming error and
/// must never be formed silently.
impl Add for &ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: &ExtInt) -> ExtInt {
        use ExtInt::*;
        match (self, rhs) {
            (PosInf, NegInf) | (NegInf, PosInf) => {
                panic!("ExtInt: +inf + -inf is undefined")
            }
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: ExtInt) -> ExtInt {
        &self + &rhs
    }
}

impl Neg for &ExtInt {
    type Output = ExtInt;

    fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::PosInf => ExtInt::NegInf,
            ExtInt::Finite(v) => ExtInt::Finite(-v),
        }
    }
}

impl Neg for ExtInt {
    type Output = ExtInt;

    fn neg(self) -> ExtInt {
        -&self
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::PosInf => write!(f, "+inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: i64) -> ExtInt {
        ExtInt::from(v)
    }

    #[test]
    fn ordering_is_total() {
        assert!(ExtInt::NegInf < fin(-100));
        assert!(fin(-100) < fin(3));
        assert!(fin(3) < ExtInt::PosInf);
    }

    #[test]
    fn absorbing_addition() {
        assert_eq!(&ExtInt::PosInf + &fin(5), ExtInt::PosInf);
        assert_eq!(&ExtInt::NegInf + &fin(5), ExtInt::NegInf);
        assert_eq!(&fin(2) + &fin(3), fin(5));
    }

    #[test]
    #[should_panic(expected = "undefined")]
    fn opposite_infinities_panic() {
        let _ = &ExtInt::PosInf + &ExtInt::NegInf;
    }

    #[test]
    fn empty_folds() {
        assert_eq!(ExtInt::min_of(std::iter::empty()), ExtInt::PosInf);
        assert_eq!(ExtInt::max_of(std::iter::empty()), ExtInt::NegInf);
    }

    #[test]
    fn add_assoc_comm_on_samples() {
        let samples = [ExtInt::NegInf, fin(-4), fin(0), fin(7), ExtInt::PosInf];
        for a in &samples {
            for b in &samples {
                // skip the undefined combination
                if (a == &ExtInt::PosInf && b == &ExtInt::NegInf)
                    || (a == &ExtInt::NegInf && b == &ExtInt::PosInf)
                {
                    continue;
                }
                assert_eq!(a + b, b + a);
                for c in &samples {
                    let left_defined = !matches!(
                        (a + b, c),
                        (ExtInt::PosInf, ExtInt::NegInf) | (ExtInt::NegInf, ExtInt::PosInf)
                    );
                    let bc_defined = !matches!(
                        (b, c),
                        (ExtInt::PosInf, ExtInt::NegInf) | (ExtInt::NegInf, ExtInt::PosInf)
                    );
                    if left_defined && bc_defined {
                        let right_defined = !matches!(
                            (a, &(b + c)),
                            (ExtInt::PosInf, ExtInt::NegInf) | (ExtInt::NegInf, ExtInt::PosInf)
                        );
                        if right_defined {
                            assert_eq!(&(a + b) + c, a + &(b + c));
                        }
                    }
                }
            }
        }
    }
}
