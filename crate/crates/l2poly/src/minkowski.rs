//! Descriptions of sums `P = P1 + P2` of two L-convex polyhedra.
//!
//! The combined system over `(x, y)` encodes `y in P1` and `x - y in P2`
//! (the `z` block is substituted away at build time).  Projecting out the
//! `y` block with exact elimination yields the inequality description of
//! `P`; every surviving row has coefficient vector `chi_J - chi_I` for a
//! disjoint pair with `|I| = |J|`, which is asserted on every run.
//! Restricting the one-dimension-up construction to a zero slack
//! coordinate yields the corresponding description for sums of
//! box-bounded systems, where row shapes satisfy `|I| - |J|` in
//! `{-1, 0, 1}` instead.

use num::BigInt;

use crate::fm::{self, EliminationTrace};
use crate::index_set::IndexSet;
use crate::ineq::{InequalitySystem, LinearInequality, Var};
use crate::lconvex::{GammaSystem, LnatSystem};
use crate::{Error, Result};

/// A sum instance: two validated difference-bound systems of equal
/// dimension.
#[derive(Clone, Debug)]
pub struct L2Instance {
    g1: GammaSystem,
    g2: GammaSystem,
}

impl L2Instance {
    pub fn new(g1: GammaSystem, g2: GammaSystem) -> Result<Self> {
        if g1.n() != g2.n() {
            return Err(Error::DimensionMismatch {
                expected: g1.n(),
                got: g2.n(),
            });
        }
        Ok(L2Instance { g1, g2 })
    }

    pub fn n(&self) -> usize {
        self.g1.n()
    }

    pub fn g1(&self) -> &GammaSystem {
        &self.g1
    }

    pub fn g2(&self) -> &GammaSystem {
        &self.g2
    }
}

/// Which balance rule the recovered index pairs must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeRule {
    /// `|I| = |J|`: rows of a plain sum description.
    EqualSizes,
    /// `|I| - |J|` in `{-1, 0, 1}`: rows of a sliced description.
    SizesWithinOne,
}

impl ShapeRule {
    fn check(&self, minus: &IndexSet, plus: &IndexSet) -> Result<()> {
        let ok = match self {
            ShapeRule::EqualSizes => minus.len() == plus.len(),
            ShapeRule::SizesWithinOne => {
                let d = minus.len() as i64 - plus.len() as i64;
                (-1..=1).contains(&d)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeViolation(format!(
                "index sets {minus} and {plus} break the balance rule {self:?}"
            )))
        }
    }
}

/// One output inequality `x(plus) - x(minus) <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescribedRow {
    /// Indices with coefficient `-1` (the set `I`).
    pub minus: IndexSet,
    /// Indices with coefficient `+1` (the set `J`).
    pub plus: IndexSet,
    pub bound: BigInt,
    /// Set when the row is implied by the others; only present in
    /// keep-redundant output.
    pub redundant: bool,
}

impl DescribedRow {
    pub fn inequality(&self) -> LinearInequality {
        let coeffs = self
            .plus
            .iter()
            .map(|j| (Var::x(j), BigInt::from(1)))
            .chain(self.minus.iter().map(|i| (Var::x(i), BigInt::from(-1))));
        LinearInequality::new(coeffs, self.bound.clone())
    }
}

/// A full description: rows in listing order (by size of the positive
/// set, then the positive set, then the negative set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Description {
    n: usize,
    rows: Vec<DescribedRow>,
}

impl L2Description {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[DescribedRow] {
        &self.rows
    }

    /// The rows as an inequality system over `x1..xn`.
    pub fn system(&self) -> InequalitySystem {
        let vars: Vec<Var> = (1..=self.n).map(Var::x).collect();
        let rows = self.rows.iter().map(|r| r.inequality()).collect();
        InequalitySystem::new(vars, rows)
    }

    /// Renders one row per line in listing order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.inequality().render());
            out.push('\n');
        }
        out
    }
}

fn x_vars(n: usize) -> Vec<Var> {
    (1..=n).map(Var::x).collect()
}

/// Recovers the `(minus, plus)` pair of every row; rejects rows whose
/// coefficients leave `{-1, +1}` or whose sets break the shape rule.
fn pairs_of_system(
    sys: &InequalitySystem,
    n: usize,
    shape: ShapeRule,
) -> Result<Vec<(IndexSet, IndexSet, BigInt)>> {
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let mut out = Vec::with_capacity(sys.len());
    for row in sys.rows() {
        if row.is_constant() {
            return Err(Error::ShapeViolation(format!(
                "constant row `{}` survived filtering",
                row.render()
            )));
        }
        let mut minus = Vec::new();
        let mut plus = Vec::new();
        for (v, c) in row.coeffs() {
            if v.block() != 'x' || v.index() == 0 || v.index() > n {
                return Err(Error::ShapeViolation(format!(
                    "unexpected variable {v} in output row"
                )));
            }
            if *c == one {
                plus.push(v.index());
            } else if *c == minus_one {
                minus.push(v.index());
            } else {
                return Err(Error::ShapeViolation(format!(
                    "coefficient {c} on {v} outside -1..=1"
                )));
            }
        }
        let minus = IndexSet::from_sorted(minus);
        let plus = IndexSet::from_sorted(plus);
        shape.check(&minus, &plus)?;
        out.push((minus, plus, row.rhs().clone()));
    }
    Ok(out)
}

fn listing_order(rows: &mut [DescribedRow]) {
    rows.sort_by(|a, b| {
        (a.plus.len(), &a.plus, &a.minus)
            .cmp(&(b.plus.len(), &b.plus, &b.minus))
            .then_with(|| a.bound.cmp(&b.bound))
    });
}

/// Marks the rows of `full` that the exact filter removed, keeping either
/// everything (`keep_redundant`) or the irredundant subset, and converts
/// them to listed pairs.
pub(crate) fn assemble_description(
    full: &InequalitySystem,
    n: usize,
    shape: ShapeRule,
    keep_redundant: bool,
) -> Result<L2Description> {
    let full = full.canonicalize();
    let kept = fm::remove_redundant(&full)?;
    let mut rows = Vec::new();
    for (minus, plus, bound) in pairs_of_system(&full, n, shape)? {
        let row = DescribedRow {
            minus,
            plus,
            bound,
            redundant: false,
        };
        let redundant = !kept.rows().contains(&row.inequality());
        if redundant && !keep_redundant {
            continue;
        }
        rows.push(DescribedRow { redundant, ..row });
    }
    listing_order(&mut rows);
    Ok(L2Description { n, rows })
}

/// The system over `(x, y)` whose projection onto `x` is `P1 + P2`:
/// difference bounds of the first summand on `y`, and bounds of the
/// second summand written on `x - y`.
pub fn build_combined_system(inst: &L2Instance) -> InequalitySystem {
    let n = inst.n();
    let mut vars = x_vars(n);
    vars.extend((1..=n).map(Var::y));
    let mut sys = InequalitySystem::new(vars, Vec::new());
    for (i, j, bound) in inst.g1().edges() {
        sys.push(LinearInequality::difference(Var::y(j), Var::y(i), bound));
    }
    for (a, b, bound) in inst.g2().edges() {
        // second-summand edge (a, b): y_a - y_b + x_b - x_a <= bound
        sys.push(LinearInequality::new(
            [
                (Var::y(a), BigInt::from(1)),
                (Var::y(b), BigInt::from(-1)),
                (Var::x(b), BigInt::from(1)),
                (Var::x(a), BigInt::from(-1)),
            ],
            bound,
        ));
    }
    sys
}

/// The elimination route: project the combined system onto `x`, filter
/// exactly, and recover the `(I, J)` pair of every surviving row.
pub fn l2_describe_fm(inst: &L2Instance) -> Result<L2Description> {
    l2_describe_fm_opts(inst, false).map(|(d, _)| d)
}

pub fn l2_describe_fm_opts(
    inst: &L2Instance,
    keep_redundant: bool,
) -> Result<(L2Description, EliminationTrace)> {
    let combined = build_combined_system(inst);
    let keep = x_vars(inst.n());
    let (projected, trace) = fm::project(&combined, &keep)?;
    let desc = assemble_description(&projected, inst.n(), ShapeRule::EqualSizes, keep_redundant)?;
    Ok((desc, trace))
}

/// Pins the last coordinate of an `(n+1)`-dimensional description to zero
/// and re-filters, yielding a description over `x1..xn` whose rows obey
/// the near-balanced shape rule.
pub fn slice_last_coordinate(
    desc: &L2Description,
    keep_redundant: bool,
) -> Result<L2Description> {
    let n1 = desc.n();
    if n1 < 2 {
        return Err(Error::InvalidInstance(
            "need at least 2 coordinates to slice".into(),
        ));
    }
    let n = n1 - 1;
    let slack = Var::x(n1);
    let mut sliced = InequalitySystem::new(x_vars(n), Vec::new());
    for row in desc.system().rows() {
        let pinned = row.with_var_zeroed(&slack);
        if pinned.is_constant() {
            // a pure slack bound; feasibility of the slice is checked below
            if pinned.rhs() < &BigInt::ZERO {
                return Err(Error::Infeasible);
            }
            continue;
        }
        sliced.push(pinned);
    }
    let sliced = sliced.canonicalize();
    if !fm::feasible(&sliced) {
        return Err(Error::Infeasible);
    }
    assemble_description(&sliced, n, ShapeRule::SizesWithinOne, keep_redundant)
}

/// Description of a sum of two box-bounded systems via the slack-coordinate
/// embedding: embed both summands one dimension up, describe the sum, and
/// slice the extra coordinate back to zero.
pub fn lnat2_describe(s1: &LnatSystem, s2: &LnatSystem) -> Result<L2Description> {
    lnat2_describe_opts(s1, s2, false)
}

pub fn lnat2_describe_opts(
    s1: &LnatSystem,
    s2: &LnatSystem,
    keep_redundant: bool,
) -> Result<L2Description> {
    if s1.n() != s2.n() {
        return Err(Error::DimensionMismatch {
            expected: s1.n(),
            got: s2.n(),
        });
    }
    let inst = L2Instance::new(s1.lnat_to_l(), s2.lnat_to_l())?;
    let embedded = l2_describe_fm(&inst)?;
    slice_last_coordinate(&embedded, keep_redundant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::ExtInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ring4() -> L2Instance {
        let g1 = GammaSystem::from_edges(
            4,
            &[
                (1, 2, big(3)),
                (2, 3, big(5)),
                (3, 4, big(8)),
                (4, 1, big(7)),
            ],
            false,
        )
        .unwrap();
        let g2 = GammaSystem::from_edges(
            4,
            &[
                (3, 1, big(2)),
                (1, 4, big(1)),
                (3, 2, big(3)),
                (2, 4, big(5)),
                (4, 3, big(2)),
            ],
            false,
        )
        .unwrap();
        L2Instance::new(g1, g2).unwrap()
    }

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_sorted(ix.to_vec())
    }

    #[test]
    fn combined_system_rows() {
        let sys = build_combined_system(&ring4());
        assert_eq!(sys.len(), 9);
        // second-summand edge (3,1) becomes y3 - y1 + x1 - x3 <= 2
        let expected = LinearInequality::new(
            [
                (Var::y(3), big(1)),
                (Var::y(1), big(-1)),
                (Var::x(1), big(1)),
                (Var::x(3), big(-1)),
            ],
            big(2),
        );
        assert!(sys.rows().contains(&expected));
    }

    #[test]
    fn eliminating_first_y_pairs_across_summands() {
        let sys = build_combined_system(&ring4());
        let (out, step) = fm::eliminate_variable(&sys, &Var::y(1)).unwrap();
        // ring edge (4,1) against second-summand edge (3,1):
        // y3 - y4 + x1 - x3 <= 7 + 2
        let expected = LinearInequality::new(
            [
                (Var::y(3), big(1)),
                (Var::y(4), big(-1)),
                (Var::x(1), big(1)),
                (Var::x(3), big(-1)),
            ],
            big(9),
        );
        assert!(out.rows().contains(&expected));
        assert_eq!((step.pos, step.neg), (2, 2));
        assert_eq!(step.generated, 4);
        assert_eq!(step.max_scale, big(1));
    }

    #[test]
    fn ring4_description_has_the_published_rows() {
        let desc = l2_describe_fm(&ring4()).unwrap();
        let rows: Vec<(IndexSet, IndexSet, BigInt)> = desc
            .rows()
            .iter()
            .map(|r| (r.minus.clone(), r.plus.clone(), r.bound.clone()))
            .collect();
        let expected: Vec<(IndexSet, IndexSet, BigInt)> = vec![
            (set(&[3]), set(&[1]), big(17)),
            (set(&[4]), set(&[1]), big(11)),
            (set(&[1]), set(&[2]), big(9)),
            (set(&[3]), set(&[2]), big(21)),
            (set(&[4]), set(&[2]), big(15)),
            (set(&[1]), set(&[3]), big(11)),
            (set(&[2]), set(&[3]), big(12)),
            (set(&[4]), set(&[3]), big(17)),
            (set(&[1]), set(&[4]), big(17)),
            (set(&[2]), set(&[4]), big(18)),
            (set(&[3]), set(&[4]), big(11)),
            (set(&[1, 3]), set(&[2, 4]), big(15)),
        ];
        let mut expected_sorted: Vec<_> = expected
            .into_iter()
            .map(|(minus, plus, bound)| DescribedRow {
                minus,
                plus,
                bound,
                redundant: false,
            })
            .collect();
        listing_order(&mut expected_sorted);
        let expected: Vec<(IndexSet, IndexSet, BigInt)> = expected_sorted
            .into_iter()
            .map(|r| (r.minus, r.plus, r.bound))
            .collect();
        assert_eq!(rows, expected);
        // the long row renders last
        assert_eq!(
            desc.rows().last().unwrap().inequality().render(),
            "+x2 +x4 -x1 -x3 <= 15"
        );
    }

    #[test]
    fn empty_second_summand_leaves_x_unconstrained() {
        let n = 3;
        let g1 = GammaSystem::from_edges(n, &[(1, 2, big(4))], false).unwrap();
        let free = GammaSystem::from_matrix(
            vec![
                vec![ExtInt::zero(), ExtInt::PosInf, ExtInt::PosInf],
                vec![ExtInt::PosInf, ExtInt::zero(), ExtInt::PosInf],
                vec![ExtInt::PosInf, ExtInt::PosInf, ExtInt::zero()],
            ],
            false,
        )
        .unwrap();
        let inst = L2Instance::new(g1, free).unwrap();
        let desc = l2_describe_fm(&inst).unwrap();
        assert!(desc.rows().is_empty());
    }

    #[test]
    fn one_dimensional_sum_has_no_rows() {
        let free = GammaSystem::from_matrix(vec![vec![ExtInt::zero()]], false).unwrap();
        let inst = L2Instance::new(free.clone(), free).unwrap();
        let desc = l2_describe_fm(&inst).unwrap();
        assert!(desc.rows().is_empty());
    }

    #[test]
    fn box_sum_is_the_sum_box() {
        // [0,1]^2 + [2,5]x[-1,0] = [2,6]x[-1,1]
        let boxsys = |alpha: [i64; 2], beta: [i64; 2]| {
            LnatSystem::new(
                vec![ExtInt::from(alpha[0]), ExtInt::from(alpha[1])],
                vec![ExtInt::from(beta[0]), ExtInt::from(beta[1])],
                vec![
                    vec![ExtInt::zero(), ExtInt::PosInf],
                    vec![ExtInt::PosInf, ExtInt::zero()],
                ],
            )
            .unwrap()
        };
        let desc = lnat2_describe(&boxsys([0, 0], [1, 1]), &boxsys([2, -1], [5, 0])).unwrap();
        let got: Vec<String> = desc.rows().iter().map(|r| r.inequality().render()).collect();
        assert_eq!(
            got,
            vec![
                "-x1 <= -2",
                "-x2 <= 1",
                "+x1 <= 6",
                "+x2 <= 1",
            ]
        );
    }

    #[test]
    fn singleton_sum_pins_equalities() {
        let point = |p: [i64; 2]| {
            LnatSystem::new(
                vec![ExtInt::from(p[0]), ExtInt::from(p[1])],
                vec![ExtInt::from(p[0]), ExtInt::from(p[1])],
                vec![
                    vec![ExtInt::zero(), ExtInt::PosInf],
                    vec![ExtInt::PosInf, ExtInt::zero()],
                ],
            )
            .unwrap()
        };
        let desc = lnat2_describe(&point([1, 2]), &point([3, -5])).unwrap();
        let got: Vec<String> = desc.rows().iter().map(|r| r.inequality().render()).collect();
        assert_eq!(
            got,
            vec![
                "-x1 <= -4",
                "-x2 <= 3",
                "+x1 <= 4",
                "+x2 <= -3",
            ]
        );
    }
}
