//! The graph route to sum descriptions.
//!
//! For summand graphs `G1`, `G2` with shortest-path lengths
//! `lambda(i, j; Gk)`, the bound on `x(J) - x(I)` is
//! `lambda(I, J; G1) + lambda(I, J; G2)`, where the set value is the
//! cheapest way to connect `I` to `J` by `|I|` paths covering both sets.
//! That optimum decomposes into source-to-sink shortest paths, so it is a
//! minimum-cost assignment over the pairwise distances, solved here by
//! exhaustive permutation search (set sizes stay at desk scale).
//!
//! The alternate-cycle form walks simple directed cycles that alternate
//! between edges of the transitive closure of `G1` and reversed edges of
//! the transitive closure of `G2`; each cycle contributes one inequality.

use itertools::Itertools;
use num::BigInt;

use crate::extint::ExtInt;
use crate::index_set::IndexSet;
use crate::ineq::{InequalitySystem, LinearInequality, Var};
use crate::lconvex::LnatSystem;
use crate::minkowski::{
    assemble_description, slice_last_coordinate, L2Description, L2Instance, ShapeRule,
};
use crate::{Error, Result};

/// All-pairs shortest-path lengths of a summand graph; equals the
/// triangle closure of the generating system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Vec<ExtInt>>,
}

impl DistanceMatrix {
    pub fn from_gamma(g: &crate::lconvex::GammaSystem) -> Self {
        let closure = g.triangle_closure();
        DistanceMatrix {
            n: g.n(),
            dist: closure.matrix().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `lambda(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &ExtInt {
        &self.dist[i - 1][j - 1]
    }
}

/// Shortest-path length between two distinct vertices.
pub fn lambda_pair(dist: &DistanceMatrix, i: usize, j: usize) -> Result<ExtInt> {
    if i == j {
        return Err(Error::NotDisjoint);
    }
    if i == 0 || i > dist.n() || j == 0 || j > dist.n() {
        return Err(Error::InvalidInstance(format!(
            "vertex pair ({i},{j}) outside 1..={}",
            dist.n()
        )));
    }
    Ok(dist.get(i, j).clone())
}

/// Minimum total length of `|I|` paths connecting `I` to `J` and covering
/// both: the best assignment of sources to sinks under `dist`.
pub fn lambda_set(dist: &DistanceMatrix, from: &IndexSet, to: &IndexSet) -> Result<ExtInt> {
    lambda_set_matching(dist, from, to).map(|(v, _)| v)
}

/// Like [`lambda_set`], also returning one optimal source-sink matching
/// when the value is finite.
pub fn lambda_set_matching(
    dist: &DistanceMatrix,
    from: &IndexSet,
    to: &IndexSet,
) -> Result<(ExtInt, Option<Vec<(usize, usize)>>)> {
    if from.len() != to.len() {
        return Err(Error::SizeMismatch(from.len(), to.len()));
    }
    if !from.is_disjoint(to) {
        return Err(Error::NotDisjoint);
    }
    if from.is_empty() {
        return Ok((ExtInt::zero(), Some(Vec::new())));
    }
    let sources: Vec<usize> = from.iter().collect();
    let sinks: Vec<usize> = to.iter().collect();
    let mut best = ExtInt::PosInf;
    let mut best_matching = None;
    for perm in sinks.iter().permutations(sinks.len()) {
        let mut total = ExtInt::zero();
        for (s, t) in sources.iter().zip(perm.iter()) {
            total = &total + dist.get(*s, **t);
            if !total.is_finite() {
                break;
            }
        }
        if total < best {
            best_matching = Some(
                sources
                    .iter()
                    .zip(perm.iter())
                    .map(|(s, t)| (*s, **t))
                    .collect(),
            );
            best = total;
        }
    }
    if best.is_finite() {
        Ok((best, best_matching))
    } else {
        Ok((ExtInt::PosInf, None))
    }
}

/// The bound `lambda(I, J; G1) + lambda(I, J; G2)` of the row
/// `x(J) - x(I)`.
pub fn gamma_ij(inst: &L2Instance, from: &IndexSet, to: &IndexSet) -> Result<ExtInt> {
    let d1 = DistanceMatrix::from_gamma(inst.g1());
    let d2 = DistanceMatrix::from_gamma(inst.g2());
    gamma_ij_with(&d1, &d2, from, to)
}

pub fn gamma_ij_with(
    d1: &DistanceMatrix,
    d2: &DistanceMatrix,
    from: &IndexSet,
    to: &IndexSet,
) -> Result<ExtInt> {
    let a = lambda_set(d1, from, to)?;
    let b = lambda_set(d2, from, to)?;
    Ok(&a + &b)
}

/// A simple alternate directed cycle `(i1, j1, ..., im, jm)`: edges
/// `(i_r, j_r)` live in the closure of the first graph and `(j_r,
/// i_{r+1})` in the reversed closure of the second (`i_{m+1} = i1`).
/// All `2m` vertices are distinct; the canonical rotation puts the
/// smallest source first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternateCycle {
    verts: Vec<usize>,
}

impl AlternateCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn m(&self) -> usize {
        self.verts.len() / 2
    }

    /// Sources `i_1, .., i_m`.
    pub fn sources(&self) -> IndexSet {
        IndexSet::new(self.verts.iter().step_by(2).copied(), usize::MAX).expect("valid by construction")
    }

    /// Sinks `j_1, .., j_m`.
    pub fn sinks(&self) -> IndexSet {
        IndexSet::new(self.verts.iter().skip(1).step_by(2).copied(), usize::MAX)
            .expect("valid by construction")
    }
}

/// One enumerated cycle with its length and the induced inequality data.
#[derive(Clone, Debug)]
pub struct CycleRow {
    pub cycle: AlternateCycle,
    pub value: BigInt,
    /// `I`: the sources, carrying coefficient `-1`.
    pub minus: IndexSet,
    /// `J`: the sinks, carrying coefficient `+1`.
    pub plus: IndexSet,
}

impl CycleRow {
    pub fn inequality(&self) -> LinearInequality {
        let coeffs = self
            .plus
            .iter()
            .map(|j| (Var::x(j), BigInt::from(1)))
            .chain(self.minus.iter().map(|i| (Var::x(i), BigInt::from(-1))));
        LinearInequality::new(coeffs, self.value.clone())
    }
}

/// Enumerates every canonical simple alternate cycle with finite length,
/// for `m = 1 ..= max_m` (clamped to `n/2`, beyond which none exist).
pub fn enumerate_alternate_cycles(
    d1: &DistanceMatrix,
    d2: &DistanceMatrix,
    max_m: usize,
) -> Vec<CycleRow> {
    let n = d1.n();
    let max_m = max_m.min(n / 2);
    let mut out = Vec::new();
    let mut verts: Vec<usize> = Vec::new();
    let mut used = vec![false; n + 1];
    for m in 1..=max_m {
        for first in 1..=n {
            verts.push(first);
            used[first] = true;
            extend_cycle(d1, d2, m, &mut verts, &mut used, &mut out);
            used[first] = false;
            verts.pop();
        }
    }
    out
}

fn extend_cycle(
    d1: &DistanceMatrix,
    d2: &DistanceMatrix,
    m: usize,
    verts: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<CycleRow>,
) {
    let n = d1.n();
    if verts.len() == 2 * m {
        // close the cycle: reversed-closure edge from the last sink to i1
        let value = cycle_value(d1, d2, verts);
        if let ExtInt::Finite(value) = value {
            let cycle = AlternateCycle {
                verts: verts.clone(),
            };
            let minus = cycle.sources();
            let plus = cycle.sinks();
            out.push(CycleRow {
                cycle,
                value,
                minus,
                plus,
            });
        }
        return;
    }
    let picking_source = verts.len() % 2 == 0;
    for v in 1..=n {
        if used[v] {
            continue;
        }
        if picking_source {
            // canonical rotation: the first source is the smallest
            if v < verts[0] {
                continue;
            }
            // reversed-closure edge (previous sink, v) needs lambda2(v, sink)
            let sink = *verts.last().unwrap();
            if !d2.get(v, sink).is_finite() {
                continue;
            }
        } else {
            let source = *verts.last().unwrap();
            if !d1.get(source, v).is_finite() {
                continue;
            }
        }
        verts.push(v);
        used[v] = true;
        extend_cycle(d1, d2, m, verts, used, out);
        used[v] = false;
        verts.pop();
    }
}

/// `sum_r (lambda1(i_r, j_r) + lambda2(i_{r+1}, j_r))`.
fn cycle_value(d1: &DistanceMatrix, d2: &DistanceMatrix, verts: &[usize]) -> ExtInt {
    let m = verts.len() / 2;
    let mut total = ExtInt::zero();
    for r in 0..m {
        let i = verts[2 * r];
        let j = verts[2 * r + 1];
        let i_next = verts[(2 * r + 2) % (2 * m)];
        total = &total + d1.get(i, j);
        total = &total + d2.get(i_next, j);
        if !total.is_finite() {
            return ExtInt::PosInf;
        }
    }
    total
}

/// Which graph formula generates the candidate rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescribeMode {
    /// One row per disjoint equal-size pair `(I, J)` with finite bound.
    Pairs,
    /// One row per simple alternate directed cycle.
    Cycles,
}

/// Pairs mode enumerates all `(I, J)` pairs, which is exponential in `n`:
/// the route refuses dimensions past this guard.
pub const PAIRS_MODE_MAX_N: usize = 10;

/// The graph route: generate candidate rows by the chosen mode, then
/// filter exactly.  Describes the same polyhedron as the elimination
/// route.
pub fn l2_describe_graph(inst: &L2Instance, mode: DescribeMode) -> Result<L2Description> {
    l2_describe_graph_opts(inst, mode, false)
}

pub fn l2_describe_graph_opts(
    inst: &L2Instance,
    mode: DescribeMode,
    keep_redundant: bool,
) -> Result<L2Description> {
    let n = inst.n();
    let d1 = DistanceMatrix::from_gamma(inst.g1());
    let d2 = DistanceMatrix::from_gamma(inst.g2());
    let vars: Vec<Var> = (1..=n).map(Var::x).collect();
    let mut sys = InequalitySystem::new(vars, Vec::new());
    match mode {
        DescribeMode::Pairs => {
            if n > PAIRS_MODE_MAX_N {
                return Err(Error::InvalidInstance(format!(
                    "pairs mode is capped at n = {PAIRS_MODE_MAX_N}, got {n}"
                )));
            }
            for (minus, plus) in disjoint_equal_pairs(n) {
                let bound = gamma_ij_with(&d1, &d2, &minus, &plus)?;
                if let ExtInt::Finite(bound) = bound {
                    let coeffs = plus
                        .iter()
                        .map(|j| (Var::x(j), BigInt::from(1)))
                        .chain(minus.iter().map(|i| (Var::x(i), BigInt::from(-1))));
                    sys.push(LinearInequality::new(coeffs, bound));
                }
            }
        }
        DescribeMode::Cycles => {
            for row in enumerate_alternate_cycles(&d1, &d2, n / 2) {
                sys.push(row.inequality());
            }
        }
    }
    assemble_description(&sys, n, ShapeRule::EqualSizes, keep_redundant)
}

/// All ordered pairs of disjoint nonempty subsets of `1..=n` with equal
/// sizes up to `n/2`, in deterministic order.
pub fn disjoint_equal_pairs(n: usize) -> Vec<(IndexSet, IndexSet)> {
    let mut out = Vec::new();
    for m in 1..=n / 2 {
        for minus in (1..=n).combinations(m) {
            let rest: Vec<usize> = (1..=n).filter(|v| !minus.contains(v)).collect();
            for plus in rest.iter().copied().combinations(m) {
                out.push((
                    IndexSet::from_sorted(minus.clone()),
                    IndexSet::from_sorted(plus),
                ));
            }
        }
    }
    out
}

/// The graph route for sums of box-bounded systems, via the
/// slack-coordinate embedding and a final slice.
pub fn lnat2_describe_graph(
    s1: &LnatSystem,
    s2: &LnatSystem,
    mode: DescribeMode,
    keep_redundant: bool,
) -> Result<L2Description> {
    if s1.n() != s2.n() {
        return Err(Error::DimensionMismatch {
            expected: s1.n(),
            got: s2.n(),
        });
    }
    let inst = L2Instance::new(s1.lnat_to_l(), s2.lnat_to_l())?;
    let embedded = l2_describe_graph(&inst, mode)?;
    slice_last_coordinate(&embedded, keep_redundant)
}

/// Why a redundant row is implied by the rest, when one of the two known
/// mechanisms applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedundancyMechanism {
    /// Single-pair row whose bound splits over an intermediate vertex in
    /// both graphs: `gamma(i,j) = gamma(i,k) + gamma(k,j)`.
    Concatenation,
    /// Multi-pair row whose optimal path systems decompose across the same
    /// partition in both graphs: `gamma(I,J) = gamma(I1,J1) + gamma(I2,J2)`.
    Splitting,
    Unexplained,
}

impl RedundancyMechanism {
    pub fn label(&self) -> &'static str {
        match self {
            RedundancyMechanism::Concatenation => "concatenation",
            RedundancyMechanism::Splitting => "splitting",
            RedundancyMechanism::Unexplained => "unexplained",
        }
    }
}

/// Labels redundant description rows with the mechanism that explains
/// them.  Distance matrices are computed once per instance.
pub struct Explainer {
    n: usize,
    d1: DistanceMatrix,
    d2: DistanceMatrix,
    /// Dimension of the pre-slice instance when explaining sliced rows.
    sliced_from: Option<usize>,
}

impl Explainer {
    pub fn new(inst: &L2Instance) -> Self {
        Explainer {
            n: inst.n(),
            d1: DistanceMatrix::from_gamma(inst.g1()),
            d2: DistanceMatrix::from_gamma(inst.g2()),
            sliced_from: None,
        }
    }

    /// Explains rows of a sliced description against the embedded
    /// instance one dimension up.
    pub fn for_lnat_pair(s1: &LnatSystem, s2: &LnatSystem) -> Result<Self> {
        let inst = L2Instance::new(s1.lnat_to_l(), s2.lnat_to_l())?;
        let mut e = Explainer::new(&inst);
        e.sliced_from = Some(inst.n());
        Ok(e)
    }

    fn bound(&self, minus: &IndexSet, plus: &IndexSet) -> ExtInt {
        gamma_ij_with(&self.d1, &self.d2, minus, plus).unwrap_or(ExtInt::PosInf)
    }

    /// The mechanism explaining the row `x(plus) - x(minus) <= bound`,
    /// assuming the exact filter already established redundancy.
    pub fn explain(&self, minus: &IndexSet, plus: &IndexSet) -> RedundancyMechanism {
        let (minus, plus) = match self.sliced_from {
            None => (minus.clone(), plus.clone()),
            Some(n1) => {
                // rebalance with the slack coordinate before explaining
                let mut mi: Vec<usize> = minus.iter().collect();
                let mut pl: Vec<usize> = plus.iter().collect();
                if mi.len() + 1 == pl.len() {
                    mi.push(n1);
                } else if pl.len() + 1 == mi.len() {
                    pl.push(n1);
                }
                (IndexSet::from_sorted(mi), IndexSet::from_sorted(pl))
            }
        };
        let total = self.bound(&minus, &plus);
        if !total.is_finite() {
            return RedundancyMechanism::Unexplained;
        }
        if minus.len() == 1 {
            let i = minus.iter().next().unwrap();
            let j = plus.iter().next().unwrap();
            for k in 1..=self.n {
                if k == i || k == j {
                    continue;
                }
                let left = self.bound(&IndexSet::singleton(i), &IndexSet::singleton(k));
                let right = self.bound(&IndexSet::singleton(k), &IndexSet::singleton(j));
                if left.is_finite() && right.is_finite() && &left + &right == total {
                    return RedundancyMechanism::Concatenation;
                }
            }
            return RedundancyMechanism::Unexplained;
        }
        // proper bipartitions of (minus, plus) into balanced halves
        let mi: Vec<usize> = minus.iter().collect();
        let pl: Vec<usize> = plus.iter().collect();
        for take in 1..mi.len() {
            for mi1 in mi.iter().copied().combinations(take) {
                for pl1 in pl.iter().copied().combinations(take) {
                    let mi2: Vec<usize> =
                        mi.iter().copied().filter(|v| !mi1.contains(v)).collect();
                    let pl2: Vec<usize> =
                        pl.iter().copied().filter(|v| !pl1.contains(v)).collect();
                    let a = self.bound(
                        &IndexSet::from_sorted(mi1.clone()),
                        &IndexSet::from_sorted(pl1.clone()),
                    );
                    let b = self.bound(
                        &IndexSet::from_sorted(mi2),
                        &IndexSet::from_sorted(pl2),
                    );
                    if a.is_finite() && b.is_finite() && &a + &b == total {
                        return RedundancyMechanism::Splitting;
                    }
                }
            }
        }
        RedundancyMechanism::Unexplained
    }
}

/// Which graph to export.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    G1,
    G2,
    Closure1,
    Closure2,
    /// Closure of the first graph plus the reversed closure of the second,
    /// distinguished by edge style.
    Union,
}

/// Renders the chosen graph in DOT syntax with edge labels carrying the
/// lengths.  Deterministic output.
pub fn to_dot(inst: &L2Instance, kind: GraphKind) -> String {
    let n = inst.n();
    let name = match kind {
        GraphKind::G1 => "g1",
        GraphKind::G2 => "g2",
        GraphKind::Closure1 => "closure1",
        GraphKind::Closure2 => "closure2",
        GraphKind::Union => "union",
    };
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=n {
        out.push_str(&format!("  {v};\n"));
    }
    let plain = |out: &mut String, edges: Vec<(usize, usize, BigInt)>| {
        for (i, j, w) in edges {
            out.push_str(&format!("  {i} -> {j} [label=\"{w}\"];\n"));
        }
    };
    match kind {
        GraphKind::G1 => plain(&mut out, inst.g1().edges()),
        GraphKind::G2 => plain(&mut out, inst.g2().edges()),
        GraphKind::Closure1 => plain(&mut out, inst.g1().triangle_closure().edges()),
        GraphKind::Closure2 => plain(&mut out, inst.g2().triangle_closure().edges()),
        GraphKind::Union => {
            for (i, j, w) in inst.g1().triangle_closure().edges() {
                out.push_str(&format!(
                    "  {i} -> {j} [label=\"{w}\", style=solid];\n"
                ));
            }
            // reversed closure of the second graph: edge (j, i) with the
            // length of the i -> j path
            for (i, j, w) in inst.g2().triangle_closure().edges() {
                out.push_str(&format!(
                    "  {j} -> {i} [label=\"{w}\", style=dashed];\n"
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lconvex::GammaSystem;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn fin(v: i64) -> ExtInt {
        ExtInt::from(v)
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
    fn pair_distances_in_second_graph() {
        let d2 = DistanceMatrix::from_gamma(ring4().g2());
        assert_eq!(lambda_pair(&d2, 2, 3).unwrap(), fin(7)); // 2 -> 4 -> 3
        assert_eq!(lambda_pair(&d2, 4, 1).unwrap(), fin(4)); // 4 -> 3 -> 1
        assert_eq!(lambda_pair(&d2, 1, 3).unwrap(), fin(3)); // 1 -> 4 -> 3
        assert!(lambda_pair(&d2, 3, 3).is_err());
    }

    #[test]
    fn set_values_match_published_matchings() {
        let inst = ring4();
        let d1 = DistanceMatrix::from_gamma(inst.g1());
        let d2 = DistanceMatrix::from_gamma(inst.g2());
        let i13 = set(&[1, 3]);
        let j24 = set(&[2, 4]);
        assert_eq!(lambda_set(&d1, &i13, &j24).unwrap(), fin(11)); // 1->2, 3->4
        assert_eq!(lambda_set(&d2, &i13, &j24).unwrap(), fin(4)); // 1->4, 3->2
        let i24 = set(&[2, 4]);
        let j13 = set(&[1, 3]);
        assert_eq!(lambda_set(&d2, &i24, &j13).unwrap(), fin(11)); // 4->3->1, 2->4->3
        // singleton reduces to the pair distance
        assert_eq!(
            lambda_set(&d2, &set(&[2]), &set(&[3])).unwrap(),
            lambda_pair(&d2, 2, 3).unwrap()
        );
        // size mismatch and overlap are rejected
        assert!(lambda_set(&d1, &set(&[1]), &j24).is_err());
        assert!(lambda_set(&d1, &set(&[1, 2]), &set(&[2, 3])).is_err());
    }

    #[test]
    fn summed_bounds() {
        let inst = ring4();
        let g = |mi: &[usize], pl: &[usize]| {
            gamma_ij(&inst, &set(mi), &set(pl)).unwrap()
        };
        assert_eq!(g(&[3], &[1]), fin(17)); // 15 + 2
        assert_eq!(g(&[2], &[3]), fin(12)); // 5 + 7
        assert_eq!(g(&[4], &[1]), fin(11)); // 7 + 4
        assert_eq!(g(&[2], &[1]), fin(29)); // 20 + 9
        assert_eq!(g(&[1, 3], &[2, 4]), fin(15)); // 11 + 4
        assert_eq!(g(&[2, 4], &[1, 3]), fin(23)); // 12 + 11
    }

    #[test]
    fn cycle_enumeration_on_ring4() {
        let inst = ring4();
        let d1 = DistanceMatrix::from_gamma(inst.g1());
        let d2 = DistanceMatrix::from_gamma(inst.g2());
        let rows = enumerate_alternate_cycles(&d1, &d2, 2);
        // the quad cycle 1 -> 2 -> 3 -> 4 carries the long row at 15
        let quad = rows
            .iter()
            .find(|r| r.cycle.vertices() == [1, 2, 3, 4])
            .expect("quad cycle present");
        assert_eq!(quad.value, big(15));
        assert_eq!(quad.inequality().render(), "+x2 +x4 -x1 -x3 <= 15");
        // the two-vertex cycle (2, 1) carries the loose bound 29
        let pair = rows
            .iter()
            .find(|r| r.cycle.vertices() == [2, 1])
            .expect("pair cycle present");
        assert_eq!(pair.value, big(29));
        // every cycle is simple and canonically rotated
        for r in &rows {
            let mut vs = r.cycle.vertices().to_vec();
            vs.sort_unstable();
            vs.dedup();
            assert_eq!(vs.len(), r.cycle.vertices().len());
            let sources: Vec<usize> = r.cycle.vertices().iter().step_by(2).copied().collect();
            assert!(sources.iter().all(|s| *s >= sources[0]));
        }
    }

    #[test]
    fn two_vertex_graphs_yield_single_pair_cycles() {
        let g1 = GammaSystem::from_edges(2, &[(1, 2, big(4))], false).unwrap();
        let g2 = GammaSystem::from_edges(2, &[(1, 2, big(1))], false).unwrap();
        let d1 = DistanceMatrix::from_gamma(&g1);
        let d2 = DistanceMatrix::from_gamma(&g2);
        let rows = enumerate_alternate_cycles(&d1, &d2, 1);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].cycle.vertices(), [1, 2]);
        assert_eq!(rows[0].value, big(5));
    }

    #[test]
    fn redundancy_mechanisms_on_ring4() {
        let e = Explainer::new(&ring4());
        assert_eq!(
            e.explain(&set(&[2]), &set(&[1])),
            RedundancyMechanism::Concatenation
        );
        assert_eq!(
            e.explain(&set(&[2, 4]), &set(&[1, 3])),
            RedundancyMechanism::Splitting
        );
    }

    #[test]
    fn dot_export_shapes() {
        let inst = ring4();
        let dot = to_dot(&inst, GraphKind::G1);
        assert!(dot.starts_with("digraph g1 {"));
        assert_eq!(dot.matches("->").count(), 4);
        for w in ["3", "5", "8", "7"] {
            assert!(dot.contains(&format!("label=\"{w}\"")));
        }
        let closure = to_dot(&inst, GraphKind::Closure1);
        assert_eq!(closure.matches("->").count(), 12);
        let union = to_dot(&inst, GraphKind::Union);
        assert_eq!(union.matches("style=solid").count(), 12);
        assert_eq!(union.matches("style=dashed").count(), 12);
    }
}
