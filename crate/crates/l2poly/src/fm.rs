//! Exact Fourier-Motzkin elimination over integer inequality systems.
//!
//! Eliminating a variable pairs every row where it appears positively with
//! every row where it appears negatively, cross-scaling by the gcd of the
//! two coefficients so all arithmetic stays integral.  The projection is
//! exact for the real reading of a system; for the lattice reading it can
//! over-approximate whenever a scale factor exceeded 1, which the trace
//! records.

use num::{BigInt, Integer, Signed, Zero};

use crate::ineq::{InequalitySystem, LinearInequality, Var};
use crate::{Error, Result};

/// Bookkeeping for one eliminated variable.
#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub var: Var,
    /// Rows where the variable appears with positive / negative / zero
    /// coefficient.
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
    /// `pos * neg`, the number of combined rows before any filtering.
    pub generated: usize,
    /// Rows discarded by canonicalization and exact redundancy filtering
    /// right after this step.
    pub discarded: usize,
    /// Largest cross-scaling factor used; 1 means every pairing stayed in
    /// the plain-addition regime, so the lattice reading is exact.
    pub max_scale: BigInt,
}

#[derive(Clone, Debug, Default)]
pub struct EliminationTrace {
    pub steps: Vec<EliminationStep>,
}

impl EliminationTrace {
    /// True when no pairing ever needed a scale factor above 1.
    pub fn lattice_exact(&self) -> bool {
        self.steps.iter().all(|s| s.max_scale == BigInt::from(1))
    }
}

/// Eliminates one variable, returning the projected system and the step
/// record.  Rows free of the variable are kept verbatim; no redundancy
/// filtering happens here, so tautological and contradictory constant
/// rows survive for feasibility checks.
pub fn eliminate_variable(
    sys: &InequalitySystem,
    v: &Var,
) -> Result<(InequalitySystem, EliminationStep)> {
    if !sys.variables().contains(v) {
        return Err(Error::UnknownVariable(*v));
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for (idx, (row, _)) in sys.iter().enumerate() {
        let c = row.coeff(v);
        if c.is_positive() {
            pos.push(idx);
        } else if c.is_negative() {
            neg.push(idx);
        } else {
            zero.push(idx);
        }
    }

    let mut out = InequalitySystem::new(sys.without_variable(v), Vec::new())
        .with_lattice_scope(sys.lattice_scoped());
    for &idx in &zero {
        out.push_with_strictness(sys.rows()[idx].clone(), sys.is_strict(idx));
    }

    let mut max_scale = BigInt::from(1);
    for &i in &pos {
        for &k in &neg {
            let a = sys.rows()[i].coeff(v);
            let b = -sys.rows()[k].coeff(v); // positive magnitude
            let g = a.gcd(&b);
            let ci = &b / &g; // multiplies row i
            let ck = &a / &g; // multiplies row k
            if ci > max_scale {
                max_scale = ci.clone();
            }
            if ck > max_scale {
                max_scale = ck.clone();
            }
            let combined = sys.rows()[i].combine(&ci, &sys.rows()[k], &ck);
            debug_assert!(combined.coeff(v).is_zero());
            let strict = sys.is_strict(i) || sys.is_strict(k);
            out.push_with_strictness(combined, strict);
        }
    }

    let step = EliminationStep {
        var: *v,
        pos: pos.len(),
        neg: neg.len(),
        zero: zero.len(),
        generated: pos.len() * neg.len(),
        discarded: 0,
        max_scale,
    };
    Ok((out, step))
}

/// A constant row that cannot hold: `0 <= b` with `b < 0`, or strictly
/// `0 < b` with `b <= 0`.
fn constant_row_violated(row: &LinearInequality, strict: bool) -> bool {
    row.is_constant()
        && if strict {
            !row.rhs().is_positive()
        } else {
            row.rhs().is_negative()
        }
}

/// Real feasibility, decided by eliminating every variable and checking
/// the residual constant rows.  Variables are eliminated greedily by
/// smallest pairing count; the answer does not depend on the order.
pub fn feasible(sys: &InequalitySystem) -> bool {
    let mut cur = sys.canonicalize();
    loop {
        for (row, strict) in cur.iter() {
            if constant_row_violated(row, strict) {
                return false;
            }
        }
        let occupied: Vec<Var> = cur
            .variables()
            .iter()
            .copied()
            .filter(|v| cur.rows().iter().any(|r| r.mentions(v)))
            .collect();
        let Some(next) = occupied.iter().min_by_key(|v| {
            let pos = cur
                .rows()
                .iter()
                .filter(|r| r.coeff(v).is_positive())
                .count();
            let neg = cur
                .rows()
                .iter()
                .filter(|r| r.coeff(v).is_negative())
                .count();
            (pos * neg, **v)
        }) else {
            return true; // only satisfied constant rows remain
        };
        let (next_sys, _) = eliminate_variable(&cur, next).expect("variable is present");
        // dominance-merging keeps the row count in check between rounds
        cur = next_sys.canonicalize();
        cur = drop_satisfied_constants(cur);
    }
}

fn drop_satisfied_constants(sys: InequalitySystem) -> InequalitySystem {
    let mut out = InequalitySystem::new(sys.variables().to_vec(), Vec::new())
        .with_lattice_scope(sys.lattice_scoped());
    for (row, strict) in sys.iter() {
        if row.is_constant() && !constant_row_violated(row, strict) {
            continue;
        }
        out.push_with_strictness(row.clone(), strict);
    }
    out
}

/// True iff `sys` (with one occurrence of `row` removed, when present)
/// implies `row` over the reals: adjoining the strict negation
/// `<a, x> > b` makes the system infeasible.
pub fn is_redundant(row: &LinearInequality, sys: &InequalitySystem) -> bool {
    let mut test = sys.clone();
    if let Some(idx) = test.rows().iter().position(|r| r == row) {
        test.remove_row(idx);
    }
    test.push_with_strictness(row.negated(), true);
    !feasible(&test)
}

/// True iff every row of `target` is implied by `sys`.  Implication is
/// taken over the union of the two variable spaces.
pub fn implies(sys: &InequalitySystem, target: &InequalitySystem) -> bool {
    let mut vars = sys.variables().to_vec();
    for v in target.variables() {
        if !vars.contains(v) {
            vars.push(*v);
        }
    }
    target.rows().iter().all(|row| {
        let mut test = InequalitySystem::new(vars.clone(), Vec::new())
            .with_lattice_scope(sys.lattice_scoped());
        for (r, s) in sys.iter() {
            test.push_with_strictness(r.clone(), s);
        }
        test.push_with_strictness(row.negated(), true);
        !feasible(&test)
    })
}

/// Greedy exact filtering: walks the canonical row order and drops every
/// row implied by the remaining ones, committing removals immediately.
/// Deterministic; any two outputs for input systems with the same solution
/// set mutually imply each other.
pub fn remove_redundant(sys: &InequalitySystem) -> Result<InequalitySystem> {
    if !feasible(sys) {
        return Err(Error::Infeasible);
    }
    let mut cur = sys.canonicalize();
    let mut idx = 0;
    while idx < cur.len() {
        let mut test = cur.clone();
        let (row, _) = test.remove_row(idx);
        test.push_with_strictness(row.negated(), true);
        if !feasible(&test) {
            cur.remove_row(idx);
        } else {
            idx += 1;
        }
    }
    Ok(cur)
}

/// Iterated elimination of every variable outside `keep`, ascending by
/// name, with canonicalization and exact redundancy filtering after each
/// round.  An infeasible input projects to the canonical witness system
/// `{0 <= -1}` over the kept variables.
pub fn project(
    sys: &InequalitySystem,
    keep: &[Var],
) -> Result<(InequalitySystem, EliminationTrace)> {
    let (projected, trace, _) = project_with_stages(sys, keep)?;
    Ok((projected, trace))
}

/// Like [`project`], additionally returning, for every eliminated
/// variable, the system as it stood just before that elimination.  The
/// stages let a caller reconstruct a witness for any point of the
/// projection by back-substitution.
pub fn project_with_stages(
    sys: &InequalitySystem,
    keep: &[Var],
) -> Result<(InequalitySystem, EliminationTrace, Vec<(Var, InequalitySystem)>)> {
    for v in keep {
        if !sys.variables().contains(v) {
            return Err(Error::UnknownVariable(*v));
        }
    }
    let mut eliminate: Vec<Var> = sys
        .variables()
        .iter()
        .copied()
        .filter(|v| !keep.contains(v))
        .collect();
    eliminate.sort_unstable();

    let mut trace = EliminationTrace::default();
    let mut stages = Vec::with_capacity(eliminate.len());
    let mut cur = sys.canonicalize();
    for v in eliminate {
        stages.push((v, cur.clone()));
        let (next, mut step) = eliminate_variable(&cur, &v)?;
        let before = next.len();
        let filtered = match remove_redundant(&next.canonicalize()) {
            Ok(f) => f,
            Err(Error::Infeasible) => {
                let mut vars = keep.to_vec();
                vars.sort_unstable();
                let witness = InequalitySystem::new(
                    vars,
                    vec![LinearInequality::constant(BigInt::from(-1))],
                )
                .with_lattice_scope(sys.lattice_scoped());
                step.discarded = before;
                trace.steps.push(step);
                return Ok((witness, trace, stages));
            }
            Err(e) => return Err(e),
        };
        step.discarded = before - filtered.len();
        trace.steps.push(step);
        cur = filtered;
    }
    Ok((cur.canonicalize(), trace, stages))
}
