//! Integer linear inequalities `<a, x> <= b` over named variables.
//!
//! Variables carry a block letter and a 1-based index (`x3`, `y1`), so an
//! elimination order like "y1, y2, ..." is meaningful and auditable.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, Signed, Zero};

use crate::{Error, Result};

/// A named variable: block letter plus 1-based index.
///
/// Ordering is by block then index, so `x1 < x2 < ... < y1 < y2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    block: u8,
    index: u32,
}

impl Var {
    pub fn new(block: char, index: usize) -> Self {
        debug_assert!(block.is_ascii_lowercase());
        Var {
            block: block as u8,
            index: index as u32,
        }
    }

    pub fn x(index: usize) -> Self {
        Var::new('x', index)
    }

    pub fn y(index: usize) -> Self {
        Var::new('y', index)
    }

    pub fn block(&self) -> char {
        self.block as char
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.block as char, self.index)
    }
}

/// One inequality `<a, x> <= b` with integer coefficients.
///
/// Zero coefficients are never stored; a row with an empty coefficient map
/// is the constant inequality `0 <= b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearInequality {
    coeffs: BTreeMap<Var, BigInt>,
    rhs: BigInt,
}

impl LinearInequality {
    pub fn new(coeffs: impl IntoIterator<Item = (Var, BigInt)>, rhs: BigInt) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LinearInequality { coeffs, rhs }
    }

    /// The difference bound `to - from <= bound`.
    pub fn difference(to: Var, from: Var, bound: BigInt) -> Self {
        LinearInequality::new([(to, BigInt::from(1)), (from, BigInt::from(-1))], bound)
    }

    pub fn constant(rhs: BigInt) -> Self {
        LinearInequality {
            coeffs: BTreeMap::new(),
            rhs,
        }
    }

    pub fn coeff(&self, v: &Var) -> BigInt {
        self.coeffs.get(v).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Var, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mentions(&self, v: &Var) -> bool {
        self.coeffs.contains_key(v)
    }

    /// `ca * self + cb * other`, the elimination step combination.
    pub fn combine(&self, ca: &BigInt, other: &LinearInequality, cb: &BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        for (v, c) in &self.coeffs {
            coeffs.insert(*v, c * ca);
        }
        for (v, c) in &other.coeffs {
            let entry = coeffs.entry(*v).or_insert_with(BigInt::zero);
            *entry += c * cb;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LinearInequality {
            coeffs,
            rhs: &self.rhs * ca + &other.rhs * cb,
        }
    }

    /// The negation `<a, x> > b`, returned as `<-a, x> <= -b` (strict).
    pub fn negated(&self) -> Self {
        LinearInequality {
            coeffs: self.coeffs.iter().map(|(v, c)| (*v, -c)).collect(),
            rhs: -&self.rhs,
        }
    }

    /// Drops the variable, as if it were pinned to zero.
    pub fn with_var_zeroed(&self, v: &Var) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.remove(v);
        LinearInequality {
            coeffs,
            rhs: self.rhs.clone(),
        }
    }

    /// `<a, point>` where `point` assigns values positionally to `vars`.
    pub fn lhs_at(&self, vars: &[Var], point: &[BigInt]) -> Result<BigInt> {
        if vars.len() != point.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: point.len(),
            });
        }
        let mut acc = BigInt::zero();
        for (v, c) in &self.coeffs {
            let pos = vars
                .iter()
                .position(|w| w == v)
                .ok_or(Error::UnknownVariable(*v))?;
            acc += c * &point[pos];
        }
        Ok(acc)
    }

    /// True iff the (non-strict) inequality holds at the point.
    pub fn holds_at(&self, vars: &[Var], point: &[BigInt]) -> Result<bool> {
        Ok(self.lhs_at(vars, point)? <= self.rhs)
    }

    fn dense(&self, vars: &[Var]) -> Vec<BigInt> {
        vars.iter().map(|v| self.coeff(v)).collect()
    }

    /// Renders positives first, then negatives: `+x2 +x4 -x1 -x3 <= 15`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.coeffs.iter().filter(|(_, c)| c.is_positive()) {
            if !out.is_empty() {
                out.push(' ');
            }
            if *c == BigInt::from(1) {
                out.push_str(&format!("+{v}"));
            } else {
                out.push_str(&format!("+{c}{v}"));
            }
        }
        for (v, c) in self.coeffs.iter().filter(|(_, c)| c.is_negative()) {
            if !out.is_empty() {
                out.push(' ');
            }
            if *c == BigInt::from(-1) {
                out.push_str(&format!("-{v}"));
            } else {
                out.push_str(&format!("-{}{v}", c.magnitude()));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} <= {}", self.rhs)
    }
}

/// An ordered system of inequalities over a declared variable list.
///
/// Strict rows (`<a, x> < b`) exist only inside feasibility and redundancy
/// tests; systems built from instance data are entirely non-strict.
/// `lattice_scoped` selects the integer-lattice reading for gcd tightening
/// in [`InequalitySystem::canonicalize`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InequalitySystem {
    variables: Vec<Var>,
    rows: Vec<LinearInequality>,
    strict: Vec<bool>,
    lattice_scoped: bool,
}

impl InequalitySystem {
    pub fn new(variables: Vec<Var>, rows: Vec<LinearInequality>) -> Self {
        let strict = vec![false; rows.len()];
        let sys = InequalitySystem {
            variables,
            rows,
            strict,
            lattice_scoped: false,
        };
        sys.debug_check();
        sys
    }

    pub fn with_lattice_scope(mut self, lattice_scoped: bool) -> Self {
        self.lattice_scoped = lattice_scoped;
        self
    }

    fn debug_check(&self) {
        debug_assert!(self
            .rows
            .iter()
            .flat_map(|r| r.coeffs.keys())
            .all(|v| self.variables.contains(v)));
    }

    pub fn variables(&self) -> &[Var] {
        &self.variables
    }

    pub fn rows(&self) -> &[LinearInequality] {
        &self.rows
    }

    pub fn is_strict(&self, row: usize) -> bool {
        self.strict[row]
    }

    pub fn lattice_scoped(&self) -> bool {
        self.lattice_scoped
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn push(&mut self, row: LinearInequality) {
        self.push_with_strictness(row, false);
    }

    pub fn push_with_strictness(&mut self, row: LinearInequality, strict: bool) {
        debug_assert!(row.coeffs.keys().all(|v| self.variables.contains(v)));
        self.rows.push(row);
        self.strict.push(strict);
    }

    pub fn remove_row(&mut self, idx: usize) -> (LinearInequality, bool) {
        let row = self.rows.remove(idx);
        let strict = self.strict.remove(idx);
        (row, strict)
    }

    /// Iterates `(row, strict)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&LinearInequality, bool)> {
        self.rows.iter().zip(self.strict.iter().copied())
    }

    /// True iff the point (positional over `variables`) satisfies every row,
    /// honoring strict flags.
    pub fn contains_point(&self, point: &[BigInt]) -> Result<bool> {
        for (row, strict) in self.iter() {
            let lhs = row.lhs_at(&self.variables, point)?;
            let ok = if strict { lhs < *row.rhs() } else { lhs <= *row.rhs() };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical form: gcd-scaled rows, dominated duplicates merged, rows
    /// sorted by dense coefficient vector then right-hand side.  Idempotent.
    ///
    /// A row is divided by the gcd `g` of its coefficients when `g` also
    /// divides the right-hand side.  Otherwise the right-hand side is
    /// floor-divided only under the lattice reading; a polyhedron-scoped
    /// system keeps the row unscaled.
    pub fn canonicalize(&self) -> Self {
        let mut variables = self.variables.clone();
        variables.sort_unstable();
        variables.dedup();

        let mut scaled: Vec<(LinearInequality, bool)> = Vec::with_capacity(self.rows.len());
        for (row, strict) in self.iter() {
            scaled.push((scale_row(row, self.lattice_scoped), strict));
        }

        // Dominance merge: identical coefficient vectors keep the smaller
        // right-hand side; at equal bounds the strict row is tighter.
        let mut best: BTreeMap<Vec<(Var, BigInt)>, (LinearInequality, bool)> = BTreeMap::new();
        for (row, strict) in scaled {
            let key: Vec<(Var, BigInt)> =
                row.coeffs.iter().map(|(v, c)| (*v, c.clone())).collect();
            match best.get(&key) {
                Some((kept, kept_strict)) => {
                    let tighter = row.rhs < kept.rhs
                        || (row.rhs == kept.rhs && strict && !kept_strict);
                    if tighter {
                        best.insert(key, (row, strict));
                    }
                }
                None => {
                    best.insert(key, (row, strict));
                }
            }
        }

        let mut merged: Vec<(LinearInequality, bool)> = best.into_values().collect();
        merged.sort_by(|(a, sa), (b, sb)| {
            a.dense(&variables)
                .cmp(&b.dense(&variables))
                .then_with(|| a.rhs.cmp(&b.rhs))
                .then_with(|| sa.cmp(sb))
        });

        let (rows, strict): (Vec<_>, Vec<_>) = merged.into_iter().unzip();
        InequalitySystem {
            variables,
            rows,
            strict,
            lattice_scoped: self.lattice_scoped,
        }
    }

    /// Replaces the variable list, dropping `v`; rows must not mention it.
    pub(crate) fn without_variable(&self, v: &Var) -> Vec<Var> {
        self.variables.iter().copied().filter(|w| w != v).collect()
    }
}

fn scale_row(row: &LinearInequality, lattice_scoped: bool) -> LinearInequality {
    if row.coeffs.is_empty() {
        return row.clone();
    }
    let mut g = BigInt::zero();
    for c in row.coeffs.values() {
        g = g.gcd(c);
    }
    if g <= BigInt::from(1) {
        return row.clone();
    }
    let coeffs: BTreeMap<Var, BigInt> = row
        .coeffs
        .iter()
        .map(|(v, c)| (*v, c / &g))
        .collect();
    if (&row.rhs % &g).is_zero() {
        LinearInequality {
            coeffs,
            rhs: &row.rhs / &g,
        }
    } else if lattice_scoped {
        LinearInequality {
            coeffs,
            rhs: row.rhs.div_floor(&g),
        }
    } else {
        row.clone()
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, strict) in self.iter() {
            let text = row.render();
            if strict {
                writeln!(f, "{}", text.replacen("<=", "<", 1))?;
            } else {
                writeln!(f, "{text}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn row(pairs: &[(Var, i64)], rhs: i64) -> LinearInequality {
        LinearInequality::new(pairs.iter().map(|(v, c)| (*v, big(*c))), big(rhs))
    }

    #[test]
    fn gcd_scaling() {
        // 2x1 - 2x2 <= 4  ->  x1 - x2 <= 2
        let sys = InequalitySystem::new(
            vec![Var::x(1), Var::x(2)],
            vec![row(&[(Var::x(1), 2), (Var::x(2), -2)], 4)],
        );
        let canon = sys.canonicalize();
        assert_eq!(canon.rows()[0], row(&[(Var::x(1), 1), (Var::x(2), -1)], 2));
    }

    #[test]
    fn gcd_scaling_respects_scope() {
        // 2x1 <= 3: unscaled for the polyhedron reading, x1 <= 1 on the lattice
        let mk = |lattice| {
            InequalitySystem::new(vec![Var::x(1)], vec![row(&[(Var::x(1), 2)], 3)])
                .with_lattice_scope(lattice)
                .canonicalize()
        };
        assert_eq!(mk(false).rows()[0], row(&[(Var::x(1), 2)], 3));
        assert_eq!(mk(true).rows()[0], row(&[(Var::x(1), 1)], 1));
    }

    #[test]
    fn dominance_merge() {
        // {x1 <= 3, x1 <= 5} -> {x1 <= 3}
        let sys = InequalitySystem::new(
            vec![Var::x(1)],
            vec![row(&[(Var::x(1), 1)], 5), row(&[(Var::x(1), 1)], 3)],
        );
        let canon = sys.canonicalize();
        assert_eq!(canon.len(), 1);
        assert_eq!(canon.rows()[0], row(&[(Var::x(1), 1)], 3));
    }

    #[test]
    fn canonicalize_idempotent() {
        let sys = InequalitySystem::new(
            vec![Var::x(2), Var::x(1)],
            vec![
                row(&[(Var::x(1), 1), (Var::x(2), -1)], 7),
                row(&[(Var::x(2), 2)], 4),
                row(&[(Var::x(1), 1), (Var::x(2), -1)], 9),
            ],
        );
        let once = sys.canonicalize();
        assert_eq!(once, once.canonicalize());
    }

    #[test]
    fn evaluate_rows() {
        let vars = vec![Var::x(1), Var::x(2), Var::x(3), Var::x(4)];
        // x2 + x4 - x1 - x3 <= 15 holds at the origin
        let long = row(
            &[
                (Var::x(1), -1),
                (Var::x(2), 1),
                (Var::x(3), -1),
                (Var::x(4), 1),
            ],
            15,
        );
        let origin = vec![big(0), big(0), big(0), big(0)];
        assert!(long.holds_at(&vars, &origin).unwrap());

        // x1 - x3 <= 17 fails at (18,0,0,0)
        let diff = row(&[(Var::x(1), 1), (Var::x(3), -1)], 17);
        let pt = vec![big(18), big(0), big(0), big(0)];
        assert!(!diff.holds_at(&vars, &pt).unwrap());

        // dimension mismatch is an error
        assert!(diff.holds_at(&vars, &[big(0)]).is_err());
    }

    #[test]
    fn render_orders_positives_first() {
        let long = row(
            &[
                (Var::x(1), -1),
                (Var::x(2), 1),
                (Var::x(3), -1),
                (Var::x(4), 1),
            ],
            15,
        );
        assert_eq!(long.render(), "+x2 +x4 -x1 -x3 <= 15");
        assert_eq!(LinearInequality::constant(big(-1)).render(), "0 <= -1");
    }
}
