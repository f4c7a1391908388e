//! Difference-constraint descriptions of L-convex and L♮-convex sets.
//!
//! A `GammaSystem` holds the bounds `gamma_ij` of the polyhedron
//! `{x | x_j - x_i <= gamma_ij}`; it is nonempty exactly when the weighted
//! digraph with edge lengths `gamma_ij` has no negative cycle, which the
//! constructor verifies.  An `LnatSystem` adds per-coordinate bounds
//! `alpha_i <= x_i <= beta_i` and embeds into a `GammaSystem` one
//! dimension up through an extra slack coordinate.

use num::BigInt;

use crate::extint::ExtInt;
use crate::oracle::PointSet;
use crate::{Error, Result};

/// Witness of an infeasible difference-constraint system: a vertex cycle
/// (1-based) whose edge lengths sum to a negative value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCycle {
    pub cycle: Vec<usize>,
    pub length: BigInt,
}

impl From<NegativeCycle> for Error {
    fn from(w: NegativeCycle) -> Error {
        Error::NegativeCycle {
            cycle: w.cycle,
            length: w.length,
        }
    }
}

/// Finds a negative cycle in the complete weighted digraph given by an
/// extended-integer matrix (`+inf` entries mean "no edge"), if any exists.
///
/// Runs Bellman-Ford from a virtual source; a cycle in the predecessor
/// graph after `n` rounds is a negative cycle.
pub fn detect_negative_cycle(matrix: &[Vec<ExtInt>]) -> Option<NegativeCycle> {
    let n = matrix.len();
    // negative self-loop
    for (i, row) in matrix.iter().enumerate() {
        if let Some(v) = row[i].finite() {
            if *v < BigInt::ZERO {
                return Some(NegativeCycle {
                    cycle: vec![i + 1],
                    length: v.clone(),
                });
            }
        }
    }

    let edges: Vec<(usize, usize, &BigInt)> = matrix
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(move |(j, _)| i != *j)
                .filter_map(move |(j, w)| w.finite().map(|w| (i, j, w)))
        })
        .collect();

    let mut dist: Vec<BigInt> = vec![BigInt::ZERO; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let mut changed = false;
        for &(i, j, w) in &edges {
            let cand = &dist[i] + w;
            if cand < dist[j] {
                dist[j] = cand;
                pred[j] = Some(i);
                changed = true;
            }
        }
        if !changed {
            return None;
        }
    }
    // A relaxation survived n rounds, so the predecessor graph contains a
    // cycle and every such cycle is negative.
    let mut mark = vec![usize::MAX; n];
    for start in 0..n {
        if mark[start] != usize::MAX {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        loop {
            if mark[v] == start {
                // v seen on this walk: the tail of `path` from v is a cycle
                let pos = path.iter().position(|&u| u == v).unwrap();
                let mut cycle: Vec<usize> = path[pos..].to_vec();
                // path was collected backwards along predecessors
                cycle.reverse();
                let mut length = BigInt::ZERO;
                for k in 0..cycle.len() {
                    let a = cycle[k];
                    let b = cycle[(k + 1) % cycle.len()];
                    length += matrix[a][b]
                        .finite()
                        .expect("cycle edge must be finite");
                }
                debug_assert!(length < BigInt::ZERO);
                return Some(NegativeCycle {
                    cycle: cycle.iter().map(|v| v + 1).collect(),
                    length,
                });
            }
            if mark[v] != usize::MAX {
                break; // ran into an older walk, no cycle this time
            }
            mark[v] = start;
            path.push(v);
            match pred[v] {
                Some(u) => v = u,
                None => break,
            }
        }
    }
    unreachable!("relaxation after n rounds implies a predecessor cycle")
}

/// All-pairs shortest path lengths of an extended-integer matrix.
/// Fails with the witness when a negative cycle exists.
pub fn closure_of(matrix: &[Vec<ExtInt>]) -> Result<Vec<Vec<ExtInt>>> {
    if let Some(w) = detect_negative_cycle(matrix) {
        return Err(w.into());
    }
    let n = matrix.len();
    let mut d = matrix.to_vec();
    for i in 0..n {
        if ExtInt::zero() < d[i][i] {
            d[i][i] = ExtInt::zero();
        }
    }
    for k in 0..n {
        for i in 0..n {
            if !d[i][k].is_finite() {
                continue;
            }
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    Ok(d)
}

/// The difference-bound description of an L-convex polyhedron.
///
/// Entries are `gamma_ij` in `Z ∪ {+inf}` with a zero diagonal; storage is
/// 0-based but the public accessors are 1-based like everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSystem {
    n: usize,
    gamma: Vec<Vec<ExtInt>>,
    lattice_scoped: bool,
}

impl GammaSystem {
    /// Validates the matrix: square, zero diagonal, entries in
    /// `Z ∪ {+inf}`, and no negative cycle.
    pub fn from_matrix(matrix: Vec<Vec<ExtInt>>, lattice_scoped: bool) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if matrix[i][i] != ExtInt::zero() {
                return Err(Error::InvalidInstance(format!(
                    "diagonal entry ({},{}) must be 0",
                    i + 1,
                    i + 1
                )));
            }
            if row.iter().any(|e| *e == ExtInt::NegInf) {
                return Err(Error::InvalidInstance(
                    "gamma entries must lie in Z ∪ {+inf}".into(),
                ));
            }
        }
        if let Some(w) = detect_negative_cycle(&matrix) {
            return Err(w.into());
        }
        Ok(GammaSystem {
            n,
            gamma: matrix,
            lattice_scoped,
        })
    }

    /// Builds from finite edges `(i, j, bound)` (1-based, meaning
    /// `x_j - x_i <= bound`); duplicate edges keep the smaller bound.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize, BigInt)],
        lattice_scoped: bool,
    ) -> Result<Self> {
        let mut matrix = vec![vec![ExtInt::PosInf; n]; n];
        for i in 0..n {
            matrix[i][i] = ExtInt::zero();
        }
        for (i, j, bound) in edges {
            if *i == 0 || *i > n || *j == 0 || *j > n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({i},{j}) outside 1..={n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidInstance(format!("self-loop on {i}")));
            }
            let e = ExtInt::Finite(bound.clone());
            if e < matrix[i - 1][j - 1] {
                matrix[i - 1][j - 1] = e;
            }
        }
        GammaSystem::from_matrix(matrix, lattice_scoped)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lattice_scoped(&self) -> bool {
        self.lattice_scoped
    }

    /// The bound on `x_j - x_i` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &ExtInt {
        &self.gamma[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<ExtInt>] {
        &self.gamma
    }

    /// Finite off-diagonal entries as `(i, j, bound)` triples, row-major.
    pub fn edges(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    if let Some(b) = self.get(i, j).finite() {
                        out.push((i, j, b.clone()));
                    }
                }
            }
        }
        out
    }

    /// All-pairs shortest paths; describes the same polyhedron, satisfies
    /// the triangle inequality, and is idempotent.
    pub fn triangle_closure(&self) -> GammaSystem {
        let d = closure_of(&self.gamma).expect("validated at construction");
        GammaSystem {
            n: self.n,
            gamma: d,
            lattice_scoped: self.lattice_scoped,
        }
    }

    /// True iff every difference constraint holds at the point.
    pub fn membership(&self, x: &[BigInt]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if let Some(b) = self.gamma[i][j].finite() {
                    if (&x[j] - &x[i]).gt(b) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Tightest difference bounds of a finite point set:
/// `gamma_ij = max {x_j - x_i | x in S}`.  Always free of negative cycles.
pub fn gamma_from_points(points: &PointSet, lattice_scoped: bool) -> Result<GammaSystem> {
    let n = points.dim();
    if points.is_empty() {
        return Err(Error::InvalidInstance("empty point set".into()));
    }
    let mut matrix = vec![vec![ExtInt::NegInf; n]; n];
    for p in points.iter() {
        for i in 0..n {
            for j in 0..n {
                let d = ExtInt::from(p[j] - p[i]);
                if d > matrix[i][j] {
                    matrix[i][j] = d;
                }
            }
        }
    }
    GammaSystem::from_matrix(matrix, lattice_scoped)
}

/// Difference bounds plus box bounds: the description of an L♮-convex set.
///
/// Validity means the extended matrix over the coordinate set enlarged by
/// one slack index (carrying `-alpha` and `beta` as edge lengths) has no
/// negative cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LnatSystem {
    n: usize,
    alpha: Vec<ExtInt>,
    beta: Vec<ExtInt>,
    gamma: Vec<Vec<ExtInt>>,
}

impl LnatSystem {
    pub fn new(alpha: Vec<ExtInt>, beta: Vec<ExtInt>, gamma: Vec<Vec<ExtInt>>) -> Result<Self> {
        let n = alpha.len();
        if beta.len() != n || gamma.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: beta.len().min(gamma.len()),
            });
        }
        if alpha.iter().any(|a| *a == ExtInt::PosInf) {
            return Err(Error::InvalidInstance(
                "alpha entries must lie in Z ∪ {-inf}".into(),
            ));
        }
        if beta.iter().any(|b| *b == ExtInt::NegInf) {
            return Err(Error::InvalidInstance(
                "beta entries must lie in Z ∪ {+inf}".into(),
            ));
        }
        for i in 0..n {
            if alpha[i] > beta[i] {
                return Err(Error::InvalidInstance(format!(
                    "alpha_{} > beta_{}",
                    i + 1,
                    i + 1
                )));
            }
        }
        let sys = LnatSystem {
            n,
            alpha,
            beta,
            gamma,
        };
        let extended = sys.extended_matrix();
        for (i, row) in extended.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    got: row.len(),
                });
            }
            if extended[i][i] != ExtInt::zero() {
                return Err(Error::InvalidInstance("diagonal must be 0".into()));
            }
            if row.iter().any(|e| *e == ExtInt::NegInf) {
                return Err(Error::InvalidInstance(
                    "gamma entries must lie in Z ∪ {+inf}".into(),
                ));
            }
        }
        if let Some(w) = detect_negative_cycle(&extended) {
            return Err(w.into());
        }
        Ok(sys)
    }

    /// The tightest description of a finite nonempty point set:
    /// componentwise min/max bounds and pairwise difference maxima.
    /// The described set contains `S`, with equality iff `S` is L♮-convex.
    pub fn from_points(points: &PointSet) -> Result<Self> {
        let n = points.dim();
        if points.is_empty() {
            return Err(Error::InvalidInstance("empty point set".into()));
        }
        let mut alpha = vec![ExtInt::PosInf; n];
        let mut beta = vec![ExtInt::NegInf; n];
        for p in points.iter() {
            for i in 0..n {
                let v = ExtInt::from(p[i]);
                if v < alpha[i] {
                    alpha[i] = v.clone();
                }
                if v > beta[i] {
                    beta[i] = v;
                }
            }
        }
        let gamma = gamma_from_points(points, true)?;
        LnatSystem::new(alpha, beta, gamma.gamma)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &[ExtInt] {
        &self.alpha
    }

    pub fn beta(&self) -> &[ExtInt] {
        &self.beta
    }

    /// The bound on `x_j - x_i` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &ExtInt {
        &self.gamma[i - 1][j - 1]
    }

    /// Finite off-diagonal difference bounds as `(i, j, bound)` triples.
    pub fn edges(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    if let Some(b) = self.gamma[i][j].finite() {
                        out.push((i + 1, j + 1, b.clone()));
                    }
                }
            }
        }
        out
    }

    /// The matrix over `n + 1` indices with the slack coordinate last:
    /// `m[i][n] = -alpha_i`, `m[n][j] = beta_j`.
    fn extended_matrix(&self) -> Vec<Vec<ExtInt>> {
        let n = self.n;
        let mut m = vec![vec![ExtInt::PosInf; n + 1]; n + 1];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.gamma[i][j].clone();
            }
            m[i][n] = -&self.alpha[i];
            m[n][i] = self.beta[i].clone();
        }
        m[n][n] = ExtInt::zero();
        m
    }

    /// True iff the bounds and all difference constraints hold.
    pub fn membership(&self, x: &[BigInt]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        for i in 0..self.n {
            let v = ExtInt::Finite(x[i].clone());
            if v < self.alpha[i] || self.beta[i] < v {
                return Ok(false);
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if let Some(b) = self.gamma[i][j].finite() {
                    if (&x[j] - &x[i]).gt(b) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Embeds into dimension `n + 1`: the slice of the result at
    /// `x_{n+1} = 0` is exactly the set described by `self`.
    pub fn lnat_to_l(&self) -> GammaSystem {
        GammaSystem::from_matrix(self.extended_matrix(), false)
            .expect("validated at construction")
    }
}

/// Recovers box and difference bounds from an (n+1)-dimensional system by
/// closing it and reading the edges through the last coordinate:
/// `alpha_i = -closure(i, n+1)`, `beta_i = closure(n+1, i)`.
/// Describes the slice at `x_{n+1} = 0` exactly.
pub fn l_to_lnat_restrict(g: &GammaSystem) -> Result<LnatSystem> {
    let n1 = g.n();
    if n1 < 2 {
        return Err(Error::InvalidInstance(
            "need at least 2 coordinates to restrict".into(),
        ));
    }
    let n = n1 - 1;
    let closure = g.triangle_closure();
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for i in 1..=n {
        alpha.push(-closure.get(i, n1));
        beta.push(closure.get(n1, i).clone());
    }
    let mut gamma = vec![vec![ExtInt::PosInf; n]; n];
    for i in 0..n {
        for j in 0..n {
            gamma[i][j] = closure.get(i + 1, j + 1).clone();
        }
    }
    LnatSystem::new(alpha, beta, gamma).map_err(|e| match e {
        Error::NegativeCycle { .. } => Error::EmptySlice,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn fin(v: i64) -> ExtInt {
        ExtInt::from(v)
    }

    /// The first summand used throughout: a directed 4-ring with lengths
    /// 3, 5, 8, 7.
    pub(crate) fn ring4_first() -> GammaSystem {
        GammaSystem::from_edges(
            4,
            &[
                (1, 2, BigInt::from(3)),
                (2, 3, BigInt::from(5)),
                (3, 4, BigInt::from(8)),
                (4, 1, BigInt::from(7)),
            ],
            false,
        )
        .unwrap()
    }

    /// The second summand: five edges on four vertices.
    pub(crate) fn ring4_second() -> GammaSystem {
        GammaSystem::from_edges(
            4,
            &[
                (3, 1, BigInt::from(2)),
                (1, 4, BigInt::from(1)),
                (3, 2, BigInt::from(3)),
                (2, 4, BigInt::from(5)),
                (4, 3, BigInt::from(2)),
            ],
            false,
        )
        .unwrap()
    }

    /// Brute-force shortest simple path, the independent oracle for the
    /// Floyd-Warshall closure.
    fn shortest_simple_path(g: &GammaSystem, from: usize, to: usize) -> ExtInt {
        fn rec(
            g: &GammaSystem,
            cur: usize,
            to: usize,
            used: &mut Vec<bool>,
            acc: &BigInt,
            best: &mut ExtInt,
        ) {
            if cur == to {
                let cand = ExtInt::Finite(acc.clone());
                if cand < *best {
                    *best = cand;
                }
                return;
            }
            for next in 1..=g.n() {
                if used[next] || next == cur {
                    continue;
                }
                if let Some(w) = g.get(cur, next).finite() {
                    used[next] = true;
                    rec(g, next, to, used, &(acc + w), best);
                    used[next] = false;
                }
            }
        }
        let mut best = ExtInt::PosInf;
        let mut used = vec![false; g.n() + 1];
        used[from] = true;
        rec(g, from, to, &mut used, &BigInt::ZERO, &mut best);
        best
    }

    #[test]
    fn closure_matches_path_enumeration_on_ring4() {
        let g = ring4_first();
        let closure = g.triangle_closure();
        // spot values
        assert_eq!(*closure.get(3, 1), fin(15));
        assert_eq!(*closure.get(2, 3), fin(5));
        assert_eq!(*closure.get(2, 1), fin(20));
        assert_eq!(*closure.get(1, 4), fin(16));
        assert_eq!(*closure.get(2, 4), fin(13));
        assert_eq!(*closure.get(4, 2), fin(10));
        assert_eq!(*closure.get(4, 3), fin(15));
        assert_eq!(*closure.get(3, 2), fin(18));
        assert_eq!(*closure.get(1, 3), fin(8));
        // full cross-check against the simple-path oracle
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    assert_eq!(*closure.get(i, j), shortest_simple_path(&g, i, j));
                }
            }
        }
    }

    #[test]
    fn closure_fixes_triangle_closed_input() {
        let g = ring4_first().triangle_closure();
        assert_eq!(g, g.triangle_closure());
    }

    #[test]
    fn closure_is_entrywise_nonincreasing() {
        let g = ring4_second();
        let c = g.triangle_closure();
        for i in 1..=4 {
            for j in 1..=4 {
                assert!(c.get(i, j) <= g.get(i, j));
            }
        }
    }

    #[test]
    fn negative_cycle_two_vertices() {
        let m = vec![
            vec![ExtInt::zero(), fin(-1)],
            vec![fin(0), ExtInt::zero()],
        ];
        let w = detect_negative_cycle(&m).unwrap();
        assert_eq!(w.length, BigInt::from(-1));
        assert_eq!(w.cycle.len(), 2);
        assert!(w.cycle.contains(&1) && w.cycle.contains(&2));
    }

    #[test]
    fn no_negative_cycle_in_second_summand_or_nonnegative_matrices() {
        assert!(detect_negative_cycle(ring4_second().matrix()).is_none());
        let m = vec![
            vec![ExtInt::zero(), fin(2), ExtInt::PosInf],
            vec![fin(0), ExtInt::zero(), fin(7)],
            vec![fin(1), ExtInt::PosInf, ExtInt::zero()],
        ];
        assert!(detect_negative_cycle(&m).is_none());
    }

    #[test]
    fn membership_on_ring4() {
        let g = ring4_first();
        let at = |v: &[i64]| {
            let x: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
            g.membership(&x).unwrap()
        };
        // tight chain along the ring edges
        assert!(at(&[0, 3, 8, 16]));
        // x2 - x1 = 4 > 3
        assert!(!at(&[0, 4, 0, 0]));
        // origin passes any system with nonnegative bounds
        assert!(at(&[0, 0, 0, 0]));
    }

    #[test]
    fn gamma_from_points_cases() {
        // diagonal set
        let s = PointSet::new(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        let g = gamma_from_points(&s, true).unwrap();
        assert_eq!(*g.get(1, 2), fin(0));
        assert_eq!(*g.get(2, 1), fin(0));

        // singleton
        let s = PointSet::new(3, vec![vec![2, 5, -1]]).unwrap();
        let g = gamma_from_points(&s, true).unwrap();
        assert_eq!(*g.get(1, 2), fin(3));
        assert_eq!(*g.get(2, 3), fin(-6));
        assert_eq!(*g.get(3, 1), fin(3));

        // the four-point sum set
        let s = PointSet::new(
            3,
            vec![vec![0, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]],
        )
        .unwrap();
        let g = gamma_from_points(&s, true).unwrap();
        assert_eq!(*g.get(2, 1), fin(0));
        assert_eq!(*g.get(1, 2), fin(1));
        assert_eq!(*g.get(3, 2), fin(1));
        assert_eq!(*g.get(2, 3), fin(0));
        assert_eq!(*g.get(1, 3), fin(1));
        assert_eq!(*g.get(3, 1), fin(1));
    }

    #[test]
    fn interval_embedding() {
        // n = 1, bounds [0, 2]: slack edges carry -alpha and beta
        let s = LnatSystem::new(
            vec![fin(0)],
            vec![fin(2)],
            vec![vec![ExtInt::zero()]],
        )
        .unwrap();
        let g = s.lnat_to_l();
        assert_eq!(g.n(), 2);
        assert_eq!(*g.get(1, 2), fin(0)); // -alpha_1
        assert_eq!(*g.get(2, 1), fin(2)); // beta_1
    }

    #[test]
    fn restrict_inverts_embedding() {
        let s = LnatSystem::new(
            vec![fin(0), fin(-1)],
            vec![fin(2), fin(3)],
            vec![
                vec![ExtInt::zero(), fin(2)],
                vec![fin(1), ExtInt::zero()],
            ],
        )
        .unwrap();
        let back = l_to_lnat_restrict(&s.lnat_to_l()).unwrap();
        // same point set on a window around the bounds
        let w = oracle::Window::new(vec![-2, -3], vec![4, 5]).unwrap();
        let a = oracle::lnat_points_in(&s, &w).unwrap();
        let b = oracle::lnat_points_in(&back, &w).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn restrict_of_singleton_bounds() {
        let s = LnatSystem::new(
            vec![fin(0), fin(0)],
            vec![fin(0), fin(0)],
            vec![
                vec![ExtInt::zero(), ExtInt::PosInf],
                vec![ExtInt::PosInf, ExtInt::zero()],
            ],
        )
        .unwrap();
        let back = l_to_lnat_restrict(&s.lnat_to_l()).unwrap();
        let w = oracle::Window::new(vec![-1, -1], vec![1, 1]).unwrap();
        let pts = oracle::lnat_points_in(&back, &w).unwrap();
        assert_eq!(pts, PointSet::new(2, vec![vec![0, 0]]).unwrap());
    }

    #[test]
    fn alpha_above_beta_rejected() {
        let r = LnatSystem::new(vec![fin(1)], vec![fin(0)], vec![vec![ExtInt::zero()]]);
        assert!(r.is_err());
    }
}
