//! Deciding horns in `K(M, n)` by solving their constraint systems.
//!
//! Every system is first run through unit propagation: an equation with a
//! single unknown whose solution is unique fixes that unknown, and an
//! equation with no solution ends the run with a propagation certificate.
//! Over `ℕ`-like monoids an equation whose residual right-hand side is the
//! identity also forces all of its unknowns to the identity.
//!
//! What is left afterwards is handled by the monoid's capabilities:
//! - groups: a Smith normal form of the coefficient matrix, using inverses
//!   and division by the diagonal entries;
//! - `ℕ`: backtracking where every unknown is bounded by the smallest
//!   residual right-hand side among the equations it occurs in (sound,
//!   since summands never exceed their sum);
//! - other finite monoids: backtracking over all elements.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::constraints::{build_constraints, ConstraintSystem};
use super::{is_filler, Certificate, FillerCount, FillerResult, HornProblem, SearchBound, Step, StepKind};
use crate::em::{EmSimplex, EmSpace};
use crate::error::{Error, Result};
use crate::monoid::{Elem, Monoid};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Added to every per-variable bound in the `ℕ` search. The bounds are
    /// already sound; a positive slack only re-checks that claim.
    pub nat_bound_slack: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemOutcome {
    Solved(Vec<Elem>),
    Unsolvable(Certificate),
}

type Values = Vec<Option<Elem>>;

/// Decides a horn in `K(M, n)`.
pub fn solve_em(space: &EmSpace, p: &HornProblem<EmSimplex>) -> Result<FillerResult<EmSimplex>> {
    solve_em_with(space, p, SolveOptions::default())
}

pub fn solve_em_with(space: &EmSpace, p: &HornProblem<EmSimplex>, opts: SolveOptions) -> Result<FillerResult<EmSimplex>> {
    let sys = build_constraints(space, p)?;
    match solve_system(&sys, space.monoid(), opts)? {
        SystemOutcome::Solved(coords) => {
            let y = EmSimplex { level: p.n, coords };
            if !is_filler(space, p, &y)? {
                return Err(Error::Internal(format!("solver produced {} which does not fill the horn", space.format_simplex(&y))));
            }
            Ok(FillerResult::Filler(y))
        }
        SystemOutcome::Unsolvable(c) => Ok(FillerResult::NoFiller(c)),
    }
}

pub fn solve_system(sys: &ConstraintSystem, monoid: &Monoid, opts: SolveOptions) -> Result<SystemOutcome> {
    let mut values: Values = vec![None; sys.variables.len()];
    let mut steps = Vec::new();
    if !propagate(sys, monoid, &mut values, Some(&mut steps))? {
        return Ok(SystemOutcome::Unsolvable(Certificate { steps, exhausted: None }));
    }
    if values.iter().all(Option::is_some) {
        return Ok(SystemOutcome::Solved(values.into_iter().map(Option::unwrap).collect()));
    }
    let caps = monoid.capabilities();
    if caps.group {
        return Ok(match eliminate(sys, monoid, &values)? {
            Eliminated::Solved { solution, .. } => SystemOutcome::Solved(solution),
            Eliminated::Contradiction(step) => {
                steps.push(step);
                SystemOutcome::Unsolvable(Certificate { steps, exhausted: None })
            }
        });
    }
    if !caps.free_natural && !caps.finite {
        return Err(Error::Undecidable(format!("no solver for horns over {}", monoid.name())));
    }
    let mut found = None;
    search(sys, monoid, values.clone(), opts, &mut |solution| {
        found = Some(solution);
        false
    })?;
    if let Some(solution) = found {
        return Ok(SystemOutcome::Solved(solution));
    }
    let unknowns: Vec<usize> = (0..values.len()).filter(|&v| values[v].is_none()).collect();
    let exhausted = if caps.free_natural {
        let bounds = unknowns
            .iter()
            .map(|&v| {
                let b = nat_bound(sys, monoid, &values, v).unwrap_or_else(|| monoid.identity());
                let b = monoid.op(&b, &Elem::from(opts.nat_bound_slack));
                (sys.variable_name(v), b)
            })
            .collect();
        SearchBound::PerVariable { bounds }
    } else {
        SearchBound::FiniteMonoid { order: monoid.order().unwrap_or(0), unknowns: unknowns.len() }
    };
    Ok(SystemOutcome::Unsolvable(Certificate { steps, exhausted: Some(exhausted) }))
}

/// Number of fillers of a horn in `K(M, n)`, up to `limit`.
pub fn count_em_fillers(space: &EmSpace, p: &HornProblem<EmSimplex>, limit: usize) -> Result<FillerCount> {
    let sys = build_constraints(space, p)?;
    let monoid = space.monoid();
    let mut values: Values = vec![None; sys.variables.len()];
    if !propagate(&sys, monoid, &mut values, None)? {
        return Ok(FillerCount::Exactly(0));
    }
    let caps = monoid.capabilities();
    if caps.group && !caps.finite {
        return Ok(match eliminate(&sys, monoid, &values)? {
            Eliminated::Contradiction(_) => FillerCount::Exactly(0),
            Eliminated::Solved { free: 0, .. } => FillerCount::Exactly(1),
            Eliminated::Solved { .. } => FillerCount::Infinite,
        });
    }
    if !caps.free_natural && !caps.finite {
        return Err(Error::Undecidable(format!("cannot count fillers over {}", monoid.name())));
    }
    let mut count = 0usize;
    search(&sys, monoid, values.clone(), SolveOptions::default(), &mut |_| {
        count += 1;
        count < limit
    })?;
    if !caps.finite && count > 0 {
        // An unknown in no equation is free to take any of infinitely many values.
        let unconstrained = (0..values.len()).any(|v| values[v].is_none() && !sys.equations.iter().any(|eq| eq.variables.contains(&v)));
        if unconstrained {
            return Ok(FillerCount::Infinite);
        }
    }
    Ok(if count >= limit { FillerCount::AtLeast(limit) } else { FillerCount::Exactly(count) })
}

/// Unit propagation to a fixed point. Returns `false` on a contradiction,
/// which is then the last entry of `log`.
fn propagate(sys: &ConstraintSystem, monoid: &Monoid, values: &mut Values, mut log: Option<&mut Vec<Step>>) -> Result<bool> {
    let caps = monoid.capabilities();
    let mut record = |step: Step| {
        if let Some(log) = log.as_deref_mut() {
            log.push(step);
        }
    };
    loop {
        let mut changed = false;
        for eq in &sys.equations {
            let unknowns: Vec<usize> = eq.variables.iter().copied().filter(|&v| values[v].is_none()).collect();
            let known = monoid.sum(eq.variables.iter().filter_map(|&v| values[v].as_ref()));
            let rendered = || sys.render_partial(monoid, &unknowns, &known, &eq.rhs);
            match unknowns.len() {
                0 => {
                    if known != eq.rhs {
                        record(contradiction(sys, None, rendered()));
                        return Ok(false);
                    }
                }
                1 => {
                    let v = unknowns[0];
                    let solutions = if caps.group || caps.free_natural {
                        monoid.solve_value(&known, &eq.rhs)?.into_iter().collect()
                    } else {
                        monoid.solve_value_all(&known, &eq.rhs)?
                    };
                    match solutions.len() {
                        0 => {
                            record(contradiction(sys, Some(v), rendered()));
                            return Ok(false);
                        }
                        1 => {
                            record(assign(sys, v, rendered(), &solutions[0]));
                            values[v] = solutions.into_iter().next();
                            changed = true;
                        }
                        // Several solutions: not forced, left to the search.
                        _ => {}
                    }
                }
                _ if caps.free_natural => match monoid.checked_sub(&eq.rhs, &known) {
                    None => {
                        record(contradiction(sys, None, rendered()));
                        return Ok(false);
                    }
                    Some(r) if monoid.is_identity(&r) => {
                        let text = rendered();
                        for &v in &unknowns {
                            record(assign(sys, v, text.clone(), &r));
                            values[v] = Some(r.clone());
                        }
                        changed = true;
                    }
                    Some(_) => {}
                },
                _ => {}
            }
        }
        if !changed {
            return Ok(true);
        }
    }
}

fn assign(sys: &ConstraintSystem, v: usize, equation: alloc::string::String, value: &Elem) -> Step {
    Step { kind: StepKind::Assign, variable: Some(sys.variable_name(v)), equation, value: Some(value.clone()) }
}

fn contradiction(sys: &ConstraintSystem, v: Option<usize>, equation: alloc::string::String) -> Step {
    Step { kind: StepKind::Contradiction, variable: v.map(|v| sys.variable_name(v)), equation, value: None }
}

/// Largest value `v` can take over `ℕ`: the smallest residual right-hand side
/// among equations containing it. `None` if it occurs in no equation.
fn nat_bound(sys: &ConstraintSystem, monoid: &Monoid, values: &Values, v: usize) -> Option<Elem> {
    sys.equations
        .iter()
        .filter(|eq| eq.variables.contains(&v))
        .filter_map(|eq| {
            let known = monoid.sum(eq.variables.iter().filter_map(|&u| values[u].as_ref()));
            monoid.checked_sub(&eq.rhs, &known)
        })
        .min()
}

/// Depth-first search with propagation at every node, branching on the
/// lowest unassigned variable in ascending value order. `visit` returns
/// `false` to stop. Returns `false` if stopped.
fn search(
    sys: &ConstraintSystem,
    monoid: &Monoid,
    mut values: Values,
    opts: SolveOptions,
    visit: &mut dyn FnMut(Vec<Elem>) -> bool,
) -> Result<bool> {
    if !propagate(sys, monoid, &mut values, None)? {
        return Ok(true);
    }
    let Some(v) = values.iter().position(Option::is_none) else {
        return Ok(visit(values.into_iter().map(Option::unwrap).collect()));
    };
    let domain: Vec<Elem> = match monoid.elements() {
        Some(all) => all,
        None => match nat_bound(sys, monoid, &values, v) {
            // Occurs in no equation: the identity is as good as anything.
            None => vec![monoid.identity()],
            Some(b) => {
                let top = b.value() + opts.nat_bound_slack;
                let top = u64::try_from(&top).map_err(|_| Error::Undecidable("search bound exceeds u64".to_string()))?;
                (0..=top).map(Elem::from).collect()
            }
        },
    };
    for x in domain {
        let mut next = values.clone();
        next[v] = Some(x);
        if !search(sys, monoid, next, opts, visit)? {
            return Ok(false);
        }
    }
    Ok(true)
}

enum Eliminated {
    Solved { solution: Vec<Elem>, free: usize },
    Contradiction(Step),
}

/// Solves the residual linear system over an abelian group through a Smith
/// normal form `U·A·V = D` of its 0/1 coefficient matrix: `A·x = b` becomes
/// `D·y = U·b` with `x = V·y`. Free coordinates of `y` are set to the identity.
fn eliminate(sys: &ConstraintSystem, monoid: &Monoid, values: &Values) -> Result<Eliminated> {
    let unknowns: Vec<usize> = (0..values.len()).filter(|&v| values[v].is_none()).collect();
    let neg = |x: &Elem| monoid.inverse(x).ok_or_else(|| Error::NotAGroup { monoid: monoid.name() });
    let mut matrix: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<Elem> = Vec::new();
    for eq in &sys.equations {
        let row: Vec<i64> = unknowns.iter().map(|u| eq.variables.iter().filter(|&&v| v == *u).count() as i64).collect();
        if row.iter().all(|&c| c == 0) {
            continue;
        }
        let known = monoid.sum(eq.variables.iter().filter_map(|&v| values[v].as_ref()));
        matrix.push(row);
        rhs.push(monoid.op(&eq.rhs, &neg(&known)?));
    }
    let snf = SmithForm::new(matrix, unknowns.len())?;
    let scale = |k: i64, x: &Elem| monoid.times(k, x).ok_or_else(|| Error::NotAGroup { monoid: monoid.name() });
    // U·b
    let mut ub = Vec::with_capacity(rhs.len());
    for row in &snf.u {
        let mut acc = monoid.identity();
        for (&k, b) in row.iter().zip(&rhs) {
            if k != 0 {
                acc = monoid.op(&acc, &scale(k, b)?);
            }
        }
        ub.push(acc);
    }
    let mut y = vec![monoid.identity(); unknowns.len()];
    for (t, c) in ub.iter().enumerate() {
        let d = snf.diagonal.get(t).copied().unwrap_or(0);
        if d == 0 {
            if !monoid.is_identity(c) {
                let equation = format!("{}={}", monoid.format_element(&monoid.identity()), monoid.format_element(c));
                return Ok(Eliminated::Contradiction(Step { kind: StepKind::Contradiction, variable: None, equation, value: None }));
            }
            continue;
        }
        match monoid.solve_multiple(d, c)? {
            Some(v) => y[t] = v,
            None => {
                let equation = format!("{d}·y{t}={}", monoid.format_element(c));
                return Ok(Eliminated::Contradiction(Step { kind: StepKind::Contradiction, variable: None, equation, value: None }));
            }
        }
    }
    let mut solution: Vec<Elem> = values.iter().map(|v| v.clone().unwrap_or_else(|| monoid.identity())).collect();
    for (i, &var) in unknowns.iter().enumerate() {
        let mut acc = monoid.identity();
        for (&k, yj) in snf.v[i].iter().zip(&y) {
            if k != 0 {
                acc = monoid.op(&acc, &scale(k, yj)?);
            }
        }
        solution[var] = acc;
    }
    Ok(Eliminated::Solved { solution, free: unknowns.len() - snf.rank() })
}

/// `U·A·V = diag(d₀, d₁, …)` with `U`, `V` unimodular.
struct SmithForm {
    u: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
    diagonal: Vec<i64>,
}

impl SmithForm {
    fn new(mut a: Vec<Vec<i64>>, cols: usize) -> Result<Self> {
        let rows = a.len();
        let overflow = || Error::Undecidable("coefficient overflow during elimination".to_string());
        let mut u: Vec<Vec<i64>> = (0..rows).map(|i| (0..rows).map(|j| i64::from(i == j)).collect()).collect();
        let mut v: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();
        // row_i -= q·row_t, mirrored in U.
        let row_op = |a: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, i: usize, t: usize, q: i64| -> Result<()> {
            for m in [a, u] {
                let src = m[t].clone();
                for (x, s) in m[i].iter_mut().zip(src) {
                    *x = x.checked_sub(q.checked_mul(s).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
            Ok(())
        };
        // col_j -= q·col_t, mirrored in V.
        let col_op = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, j: usize, t: usize, q: i64| -> Result<()> {
            for m in [a, v] {
                for row in m.iter_mut() {
                    row[j] = row[j].checked_sub(q.checked_mul(row[t]).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
            Ok(())
        };
        let mut diagonal = Vec::new();
        for t in 0..rows.min(cols) {
            loop {
                // Smallest nonzero entry of the remaining block becomes the pivot.
                let Some((pi, pj)) = (t..rows)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].unsigned_abs())
                else {
                    return Ok(Self { u, v, diagonal });
                };
                a.swap(t, pi);
                u.swap(t, pi);
                for m in [&mut a, &mut v] {
                    for row in m.iter_mut() {
                        row.swap(t, pj);
                    }
                }
                let p = a[t][t];
                let mut clean = true;
                for i in t + 1..rows {
                    let q = a[i][t] / p;
                    if q != 0 {
                        row_op(&mut a, &mut u, i, t, q)?;
                    }
                    clean &= a[i][t] == 0;
                }
                for j in t + 1..cols {
                    let q = a[t][j] / p;
                    if q != 0 {
                        col_op(&mut a, &mut v, j, t, q)?;
                    }
                    clean &= a[t][j] == 0;
                }
                if clean {
                    break;
                }
            }
            diagonal.push(a[t][t]);
        }
        Ok(Self { u, v, diagonal })
    }

    fn rank(&self) -> usize {
        self.diagonal.len()
    }
}
