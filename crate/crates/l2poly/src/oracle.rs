//! Brute-force ground truth on finite integer point sets.
//!
//! Everything here enumerates: Minkowski sums point by point, windowed
//! enumeration of inequality systems, and the convexity-class predicates
//! checked straight from their definitions.  Enumeration is capped and
//! fails loudly rather than sampling; the point arithmetic is plain `i64`,
//! which the cap keeps far from overflow.

use std::collections::BTreeSet;

use num::BigInt;

use crate::extint::ExtInt;
use crate::ineq::InequalitySystem;
use crate::lconvex::{detect_negative_cycle, GammaSystem, LnatSystem};
use crate::minkowski::L2Instance;
use crate::{Error, Result};

/// Default lattice-point budget for a single enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// A finite, duplicate-free set of integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: BTreeSet<Vec<i64>>,
}

impl PointSet {
    pub fn new(n: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let points: BTreeSet<Vec<i64>> = points.into_iter().collect();
        for p in &points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
        }
        Ok(PointSet { n, points })
    }

    pub fn empty(n: usize) -> Self {
        PointSet {
            n,
            points: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }

    pub fn insert(&mut self, p: Vec<i64>) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p.len(),
            });
        }
        self.points.insert(p);
        Ok(())
    }

    /// Componentwise minimum over the set, `None` when empty.
    pub fn coord_min(&self) -> Option<Vec<i64>> {
        self.fold_coords(i64::min)
    }

    /// Componentwise maximum over the set, `None` when empty.
    pub fn coord_max(&self) -> Option<Vec<i64>> {
        self.fold_coords(i64::max)
    }

    fn fold_coords(&self, f: fn(i64, i64) -> i64) -> Option<Vec<i64>> {
        let mut it = self.points.iter();
        let mut acc = it.next()?.clone();
        for p in it {
            for (a, b) in acc.iter_mut().zip(p) {
                *a = f(*a, *b);
            }
        }
        Some(acc)
    }

    /// The tightest window containing the set, `None` when empty.
    pub fn bounding_window(&self) -> Option<Window> {
        Some(Window::new(self.coord_min()?, self.coord_max()?).expect("min <= max"))
    }

    /// Shifts every point by `-p_n * 1` so the last coordinate is zero.
    pub fn normalize_last_zero(&self) -> PointSet {
        let points = self.points.iter().map(|p| {
            let last = *p.last().expect("nonzero dimension");
            p.iter().map(|c| c - last).collect()
        });
        PointSet {
            n: self.n,
            points: points.collect(),
        }
    }
}

/// An axis-aligned integer box used as enumeration domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidInstance("window has lo > hi".into()));
        }
        Ok(Window { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    /// Grows the box by `slack` in every direction.
    pub fn expand(&self, slack: i64) -> Window {
        Window {
            lo: self.lo.iter().map(|v| v - slack).collect(),
            hi: self.hi.iter().map(|v| v + slack).collect(),
        }
    }

    /// Pins one coordinate (1-based) to a fixed value.
    pub fn pin(&self, coord: usize, value: i64) -> Window {
        let mut w = self.clone();
        w.lo[coord - 1] = value;
        w.hi[coord - 1] = value;
        w
    }

    pub fn volume(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| (b - a + 1) as u128)
            .product()
    }

    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let volume = self.volume();
        if volume > cap as u128 {
            return Err(Error::VolumeCap { volume, cap });
        }
        Ok(())
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(v, (a, b))| a <= v && v <= b)
    }

    /// Iterates all lattice points in lexicographic order.  Check the cap
    /// first; the iterator itself is unguarded.
    pub fn iter_points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let dim = self.dim();
        let mut cur = self.lo.clone();
        let mut done = false;
        let mut first = true;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            if first {
                first = false;
                return Some(cur.clone());
            }
            // odometer step
            for k in (0..dim).rev() {
                if cur[k] < self.hi[k] {
                    cur[k] += 1;
                    for (idx, c) in cur.iter_mut().enumerate().skip(k + 1) {
                        *c = self.lo[idx];
                    }
                    return Some(cur.clone());
                }
            }
            done = true;
            None
        })
    }
}

/// Pointwise Minkowski sum `{x + y | x in a, y in b}`.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let mut out = PointSet::empty(a.dim());
    for p in a.iter() {
        for q in b.iter() {
            out.insert(p.iter().zip(q).map(|(x, y)| x + y).collect())?;
        }
    }
    Ok(out)
}

/// All window points satisfying every row of the system.  Window
/// coordinates map positionally onto the system's variable list.
pub fn enumerate(sys: &InequalitySystem, w: &Window, cap: u64) -> Result<PointSet> {
    if sys.variables().len() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.variables().len(),
            got: w.dim(),
        });
    }
    w.check_cap(cap)?;
    let mut out = PointSet::empty(w.dim());
    for p in w.iter_points() {
        let as_big: Vec<BigInt> = p.iter().map(|&c| BigInt::from(c)).collect();
        if sys.contains_point(&as_big)? {
            out.insert(p)?;
        }
    }
    Ok(out)
}

/// Direct evaluation of a box-plus-differences description over its own
/// bound window.  Requires finite bounds.
pub fn lnat_points(s: &LnatSystem, cap: u64) -> Result<PointSet> {
    let n = s.n();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let a = s.alpha()[i]
            .finite()
            .ok_or_else(|| Error::InvalidInstance("unbounded below".into()))?;
        let b = s.beta()[i]
            .finite()
            .ok_or_else(|| Error::InvalidInstance("unbounded above".into()))?;
        lo.push(i64::try_from(a).map_err(|_| {
            Error::InvalidInstance("bound exceeds the enumeration domain".into())
        })?);
        hi.push(i64::try_from(b).map_err(|_| {
            Error::InvalidInstance("bound exceeds the enumeration domain".into())
        })?);
    }
    let w = Window::new(lo, hi)?;
    w.check_cap(cap)?;
    lnat_points_in(s, &w)
}

/// Window points satisfying the box and difference constraints, checked
/// by direct arithmetic (independent of the inequality-system path).
pub fn lnat_points_in(s: &LnatSystem, w: &Window) -> Result<PointSet> {
    if w.dim() != s.n() {
        return Err(Error::DimensionMismatch {
            expected: s.n(),
            got: w.dim(),
        });
    }
    let n = s.n();
    let mut out = PointSet::empty(n);
    'point: for p in w.iter_points() {
        for i in 0..n {
            let v = ExtInt::from(p[i]);
            if v < s.alpha()[i] || s.beta()[i] < v {
                continue 'point;
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if i != j && ExtInt::from(p[j - 1] - p[i - 1]) > *s.get(i, j) {
                    continue 'point;
                }
            }
        }
        out.insert(p)?;
    }
    Ok(out)
}

/// True iff the set equals the integer box spanned by its componentwise
/// extremes.  Empty sets are not boxes.
pub fn is_box(s: &PointSet) -> bool {
    let (Some(lo), Some(hi)) = (s.coord_min(), s.coord_max()) else {
        return false;
    };
    let w = Window::new(lo, hi).expect("min <= max");
    if w.volume() != s.len() as u128 {
        return false;
    }
    let full = w.iter_points().all(|p| s.contains(&p));
    full
}

fn join(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn meet(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

/// Closure under componentwise max/min together with invariance under
/// all-ones shifts.
///
/// Without `modulo_one` the conditions are checked literally, so any
/// finite nonempty set fails the shift condition.  With `modulo_one` the
/// set must hold one representative per shift class, normalized to a zero
/// last coordinate; the check then runs over the implied saturation.
pub fn is_l_convex(s: &PointSet, modulo_one: bool) -> Result<bool> {
    if s.is_empty() || s.dim() == 0 {
        return Ok(false);
    }
    if !modulo_one {
        let shifted_in = |p: &[i64], d: i64| {
            let q: Vec<i64> = p.iter().map(|c| c + d).collect();
            s.contains(&q)
        };
        for p in s.iter() {
            if !shifted_in(p, 1) || !shifted_in(p, -1) {
                return Ok(false);
            }
        }
        for p in s.iter() {
            for q in s.iter() {
                if !s.contains(&join(p, q)) || !s.contains(&meet(p, q)) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    if s.iter().any(|p| *p.last().unwrap() != 0) {
        return Err(Error::InvalidInstance(
            "representatives must have last coordinate 0".into(),
        ));
    }
    let in_saturation = |p: &[i64]| {
        let last = *p.last().unwrap();
        let norm: Vec<i64> = p.iter().map(|c| c - last).collect();
        s.contains(&norm)
    };
    for p in s.iter() {
        for q in s.iter() {
            // only shifts near the coordinate differences matter; far
            // shifts make one point dominate the other
            let diffs: Vec<i64> = p.iter().zip(q).map(|(a, b)| a - b).collect();
            let lo = diffs.iter().min().unwrap() - 1;
            let hi = diffs.iter().max().unwrap() + 1;
            for mu in lo..=hi {
                let shifted: Vec<i64> = q.iter().map(|c| c + mu).collect();
                if !in_saturation(&join(p, &shifted)) || !in_saturation(&meet(p, &shifted)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Round-trip membership test: derive the tightest box-plus-differences
/// description from the set and compare the described points with the set.
pub fn is_lnat_convex(s: &PointSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let n = s.dim();
    if n == 0 {
        return false;
    }
    let lo = s.coord_min().unwrap();
    let hi = s.coord_max().unwrap();
    // tightest difference bounds, computed directly
    let mut gamma = vec![vec![i64::MIN; n]; n];
    for p in s.iter() {
        for i in 0..n {
            for j in 0..n {
                gamma[i][j] = gamma[i][j].max(p[j] - p[i]);
            }
        }
    }
    let w = Window::new(lo, hi).expect("min <= max");
    let mut described = 0usize;
    'point: for p in w.iter_points() {
        for i in 0..n {
            for j in 0..n {
                if i != j && p[j] - p[i] > gamma[i][j] {
                    continue 'point;
                }
            }
        }
        described += 1;
        if !s.contains(&p) {
            return false;
        }
    }
    described == s.len()
}

/// The exchange directions `{-e1, e1-e2, ..., e_{n-1}-e_n, e_n}`.
fn exchange_directions(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut first = vec![0i64; n];
    first[0] = -1;
    out.push(first);
    for i in 0..n - 1 {
        let mut d = vec![0i64; n];
        d[i] = 1;
        d[i + 1] = -1;
        out.push(d);
    }
    let mut last = vec![0i64; n];
    last[n - 1] = 1;
    out.push(last);
    out
}

/// Exchange condition over the direction family: whenever `z + d` and
/// `z + d'` lie in the set for distinct directions, so do `z` and
/// `z + d + d'`.  Checked exhaustively over every base point that can
/// reach the set by one direction step.
pub fn is_multimodular(s: &PointSet) -> bool {
    if s.is_empty() || s.dim() == 0 {
        return false;
    }
    let n = s.dim();
    let dirs = exchange_directions(n);
    for p in s.iter() {
        for (a, da) in dirs.iter().enumerate() {
            let z: Vec<i64> = p.iter().zip(da).map(|(c, d)| c - d).collect();
            for (b, db) in dirs.iter().enumerate() {
                if a == b {
                    continue;
                }
                let zdb: Vec<i64> = z.iter().zip(db).map(|(c, d)| c + d).collect();
                if !s.contains(&zdb) {
                    continue;
                }
                let zsum: Vec<i64> = z
                    .iter()
                    .zip(da.iter().zip(db))
                    .map(|(c, (x, y))| c + x + y)
                    .collect();
                if !s.contains(&z) || !s.contains(&zsum) {
                    return false;
                }
            }
        }
    }
    true
}

/// Applies the unimodular bidiagonal change of coordinates: forward maps
/// `y` to its difference vector (`x_1 = y_1`, `x_i = y_i - y_{i-1}`),
/// inverse maps `x` to its prefix sums.
pub fn d_transform(s: &PointSet, inverse: bool) -> PointSet {
    let n = s.dim();
    let points = s.iter().map(|p| {
        if inverse {
            let mut acc = 0i64;
            p.iter()
                .map(|c| {
                    acc += c;
                    acc
                })
                .collect()
        } else {
            let mut prev = 0i64;
            p.iter()
                .map(|c| {
                    let v = c - prev;
                    prev = *c;
                    v
                })
                .collect()
        }
    });
    PointSet::new(n, points).expect("dimension preserved")
}

/// Necessary condition for a bounded sum of two lattice-closed summands:
/// the componentwise maximum and minimum of the set belong to it.
pub fn has_unique_max_min(s: &PointSet) -> bool {
    let (Some(lo), Some(hi)) = (s.coord_min(), s.coord_max()) else {
        return false;
    };
    s.contains(&lo) && s.contains(&hi)
}

/// Exact membership of `x` in the sum described by the instance, decided
/// by feasibility of the difference constraints on the first summand
/// after pinning `x`: a negative cycle in the pinned graph means `x` is
/// outside.  Independent of both description routes.
pub fn l2_member(inst: &L2Instance, x: &[i64]) -> Result<bool> {
    let n = inst.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let mut m = vec![vec![ExtInt::PosInf; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ExtInt::zero();
    }
    for (i, j, w) in inst.g1().edges() {
        let e = ExtInt::Finite(w);
        if e < m[i - 1][j - 1] {
            m[i - 1][j - 1] = e;
        }
    }
    for (a, b, w) in inst.g2().edges() {
        // y_a - y_b <= w + x_a - x_b: edge b -> a
        let e = ExtInt::Finite(w + x[a - 1] - x[b - 1]);
        if e < m[b - 1][a - 1] {
            m[b - 1][a - 1] = e;
        }
    }
    Ok(detect_negative_cycle(&m).is_none())
}

/// One representative per all-ones shift class of the sum, normalized to
/// a zero last coordinate.  Requires the closures to bound every
/// coordinate difference, otherwise the representative set is infinite.
pub fn l2_representatives(inst: &L2Instance, cap: u64) -> Result<PointSet> {
    let reps1 = gamma_representatives(inst.g1(), cap)?;
    let reps2 = gamma_representatives(inst.g2(), cap)?;
    Ok(minkowski_sum(&reps1, &reps2)?.normalize_last_zero())
}

/// Representatives (last coordinate zero) of one difference-bound system.
pub fn gamma_representatives(g: &GammaSystem, cap: u64) -> Result<PointSet> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInstance("zero-dimensional system".into()));
    }
    let closure = g.triangle_closure();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for i in 1..n {
        // x_i - x_n within [-closure(i, n), closure(n, i)]
        let a = closure.get(i, n).finite().ok_or_else(|| {
            Error::InvalidInstance("representatives are unbounded".into())
        })?;
        let b = closure.get(n, i).finite().ok_or_else(|| {
            Error::InvalidInstance("representatives are unbounded".into())
        })?;
        lo[i - 1] = -i64::try_from(a)
            .map_err(|_| Error::InvalidInstance("bound exceeds the enumeration domain".into()))?;
        hi[i - 1] = i64::try_from(b)
            .map_err(|_| Error::InvalidInstance("bound exceeds the enumeration domain".into()))?;
    }
    let w = Window::new(lo, hi)?;
    w.check_cap(cap)?;
    let mut out = PointSet::empty(n);
    'point: for p in w.iter_points() {
        for i in 1..=n {
            for j in 1..=n {
                if i != j && ExtInt::from(p[j - 1] - p[i - 1]) > *g.get(i, j) {
                    continue 'point;
                }
            }
        }
        out.insert(p)?;
    }
    Ok(out)
}

/// Outcome of an executable consistency check of one of the structure
/// statements: both hypotheses, the conclusion, and a witness when the
/// implication fails (which would indicate an implementation bug).
#[derive(Clone, Debug)]
pub struct PropositionReport {
    /// The sum-decomposition hypothesis, verified from the given data.
    pub hypothesis_sum: bool,
    /// The second hypothesis (box-plus-difference convexity,
    /// multimodularity, or the paired-intersection shape).
    pub hypothesis_other: bool,
    pub conclusion: bool,
    pub witness: Option<PointSet>,
}

impl PropositionReport {
    pub fn consistent(&self) -> bool {
        !(self.hypothesis_sum && self.hypothesis_other) || self.conclusion
    }

    fn from_parts(
        hypothesis_sum: bool,
        hypothesis_other: bool,
        conclusion: bool,
        points: &PointSet,
    ) -> Self {
        let witness = if hypothesis_sum && hypothesis_other && !conclusion {
            Some(points.clone())
        } else {
            None
        };
        PropositionReport {
            hypothesis_sum,
            hypothesis_other,
            conclusion,
            witness,
        }
    }
}

/// "A sum of two difference-bound sets that is also box-plus-difference
/// convex is itself a single difference-bound set", checked on shift-class
/// representatives.  The two hypotheses and the conclusion run on
/// independent code paths.
pub fn check_l_from_sum_and_lnat(inst: &L2Instance, cap: u64) -> Result<PropositionReport> {
    let reps = l2_representatives(inst, cap)?;
    // decomposition verified: the description's slice at last coordinate
    // zero must enumerate exactly the representatives
    let desc = crate::minkowski::l2_describe_fm(inst)?;
    let window = reps
        .bounding_window()
        .ok_or(Error::InvalidInstance("empty sum".into()))?
        .expand(1)
        .pin(inst.n(), 0);
    window.check_cap(cap)?;
    let described = enumerate(&desc.system(), &window, cap)?;
    let hypothesis_sum = described == reps;

    // box-plus-difference convexity of a shift-invariant set reduces to
    // the difference-description round trip on representatives
    let hypothesis_other = lconvex_round_trip_on_reps(&reps)?;
    let conclusion = is_l_convex(&reps, true)?;
    Ok(PropositionReport::from_parts(
        hypothesis_sum,
        hypothesis_other,
        conclusion,
        &reps,
    ))
}

/// Description round trip for a set given by shift-class representatives:
/// tightest difference bounds, then re-enumeration of representatives.
fn lconvex_round_trip_on_reps(reps: &PointSet) -> Result<bool> {
    if reps.is_empty() {
        return Ok(false);
    }
    let n = reps.dim();
    let mut gamma = vec![vec![i64::MIN; n]; n];
    for p in reps.iter() {
        for i in 0..n {
            for j in 0..n {
                gamma[i][j] = gamma[i][j].max(p[j] - p[i]);
            }
        }
    }
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for i in 0..n - 1 {
        lo[i] = -gamma[i][n - 1];
        hi[i] = gamma[n - 1][i];
    }
    let w = Window::new(lo, hi)?;
    let mut described = PointSet::empty(n);
    'point: for p in w.iter_points() {
        for i in 0..n {
            for j in 0..n {
                if i != j && p[j] - p[i] > gamma[i][j] {
                    continue 'point;
                }
            }
        }
        described.insert(p)?;
    }
    Ok(described == *reps)
}

/// "A sum of two box-plus-difference sets that is also multimodular is a
/// box."
pub fn check_box_from_sum_and_multimodular(
    s1: &LnatSystem,
    s2: &LnatSystem,
    cap: u64,
) -> Result<PropositionReport> {
    let (sum, hypothesis_sum) = verified_lnat_sum(s1, s2, cap)?;
    let hypothesis_other = is_multimodular(&sum);
    let conclusion = is_box(&sum);
    Ok(PropositionReport::from_parts(
        hypothesis_sum,
        hypothesis_other,
        conclusion,
        &sum,
    ))
}

/// "A sum of two box-plus-difference sets that is also an intersection of
/// two paired-bound systems is a box."  The intersection side is accepted
/// as a description whose rows must all bound sums `x(I)` of coordinates,
/// and must enumerate to the same set.
pub fn check_box_from_sum_and_paired_bounds(
    s1: &LnatSystem,
    s2: &LnatSystem,
    intersection: &InequalitySystem,
    cap: u64,
) -> Result<PropositionReport> {
    let (sum, hypothesis_sum) = verified_lnat_sum(s1, s2, cap)?;
    let shape_ok = intersection.rows().iter().all(|row| {
        let mut coeffs = row.coeffs().map(|(_, c)| c.clone());
        match coeffs.next() {
            None => false,
            Some(first) => coeffs.all(|c| c == first),
        }
    });
    let window = sum
        .bounding_window()
        .ok_or(Error::InvalidInstance("empty sum".into()))?
        .expand(1);
    let same_set = shape_ok && enumerate(intersection, &window, cap)? == sum;
    let hypothesis_other = shape_ok && same_set;
    let conclusion = is_box(&sum);
    Ok(PropositionReport::from_parts(
        hypothesis_sum,
        hypothesis_other,
        conclusion,
        &sum,
    ))
}

/// The pointwise sum together with its verification against the sliced
/// description route.
fn verified_lnat_sum(s1: &LnatSystem, s2: &LnatSystem, cap: u64) -> Result<(PointSet, bool)> {
    let p1 = lnat_points(s1, cap)?;
    let p2 = lnat_points(s2, cap)?;
    let sum = minkowski_sum(&p1, &p2)?;
    let desc = crate::minkowski::lnat2_describe(s1, s2)?;
    let window = sum
        .bounding_window()
        .ok_or(Error::InvalidInstance("empty sum".into()))?
        .expand(1);
    let described = enumerate(&desc.system(), &window, cap)?;
    let verified = described == sum;
    Ok((sum, verified))
}
