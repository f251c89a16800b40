//! Horn filling.
//!
//! A horn `Λᵏ[n] → X` is given by its faces `xᵢ` for `i ≠ k`. This module
//! checks that such data is compatible, decides whether it extends to an
//! `n`-simplex, and explains negative answers with a [`Certificate`].
//!
//! Deciders:
//! - [`solve_em`]: constraint propagation plus search or elimination, for
//!   `K(M, n)`.
//! - [`moore_filler`]: the constructive filler available in any simplicial group.
//! - [`brute_force_filler`]: exhaustive scan, the oracle for the other two.

mod brute;
mod constraints;
mod counterexample;
mod moore;
mod solve;
mod sweep;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

pub use brute::{brute_force_count, brute_force_filler};
pub use constraints::{build_constraints, ConstraintSystem, Equation};
pub use counterexample::{nat_two_counterexample, CounterexampleReport};
pub use moore::moore_filler;
pub use solve::{count_em_fillers, solve_em, solve_em_with, solve_system, SolveOptions, SystemOutcome};
pub use sweep::{sweep, sweep_kan, sweep_quasicategory, HornKind, SweepConfig, SweepOutcome, SweepReport};

use crate::em::{EmSimplex, EmSpace};
use crate::error::{Error, Result};
use crate::monoid::{Elem, Monoid};
use crate::sset::{Simplex, TruncatedSimplicialSet};

/// Faces `xᵢ` (`i ≠ k`) of a prospective map `Λᵏ[n] → X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornProblem<S> {
    pub n: usize,
    pub k: usize,
    pub faces: BTreeMap<usize, S>,
}

impl<S> HornProblem<S> {
    pub fn new(n: usize, k: usize, faces: impl IntoIterator<Item = (usize, S)>) -> Self {
        Self { n, k, faces: faces.into_iter().collect() }
    }

    pub fn is_inner(&self) -> bool {
        0 < self.k && self.k < self.n
    }
}

/// Outcome of [`validate_horn`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    /// `dᵢ(xⱼ) ≠ dⱼ₋₁(xᵢ)` for this pair `i < j`.
    Incompatible { i: usize, j: usize },
}

impl Compatibility {
    pub fn is_compatible(self) -> bool {
        self == Compatibility::Compatible
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Assign,
    Contradiction,
}

/// One step of a propagation chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub variable: Option<String>,
    /// The equation as it stood when the step was taken, e.g. `b+3=1`.
    pub equation: String,
    pub value: Option<Elem>,
}

/// What an exhausted search covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchBound {
    /// Every simplex of the target level was tried.
    WholeLevel { candidates: usize },
    /// Every simplex with coordinates of magnitude at most `bound` was tried.
    Values { bound: u64, candidates: usize },
    /// Backtracking over the listed variables, each up to its bound
    /// (inclusive). For `ℕ` the bounds are implied by the equations, so
    /// exhaustion is a proof.
    PerVariable { bounds: Vec<(String, Elem)> },
    /// Backtracking over every element of a finite monoid for each unknown.
    FiniteMonoid { order: usize, unknowns: usize },
}

/// Why no filler exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<Step>,
    /// `None` when the steps end in a contradiction on their own.
    pub exhausted: Option<SearchBound>,
}

impl Certificate {
    pub fn exhausted(bound: SearchBound) -> Self {
        Self { steps: Vec::new(), exhausted: Some(bound) }
    }

    /// The equation of the final contradiction step, if the certificate is a
    /// propagation chain.
    pub fn final_equation(&self) -> Option<&str> {
        match self.steps.last() {
            Some(s) if s.kind == StepKind::Contradiction => Some(&s.equation),
            _ => None,
        }
    }

    pub fn is_propagation(&self) -> bool {
        self.exhausted.is_none() && self.final_equation().is_some()
    }

    /// Like `Display`, with values rendered by `monoid` and the monoid named
    /// in the contradiction.
    pub fn render(&self, monoid: &Monoid) -> String {
        let mut out = String::new();
        for s in &self.steps {
            match (s.kind, &s.variable, &s.value) {
                (StepKind::Assign, Some(v), Some(x)) => {
                    out += &format!("{v} := {}   (from {})\n", monoid.format_element(x), s.equation);
                }
                (StepKind::Assign, _, _) => out += &format!("{}\n", s.equation),
                (StepKind::Contradiction, _, _) => out += &format!("{}: no solution in {}\n", s.equation, monoid.name()),
            }
        }
        if let Some(b) = &self.exhausted {
            out += &format!("exhausted search over {b}: no solution in {}\n", monoid.name());
        }
        out
    }
}

impl fmt::Display for SearchBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchBound::WholeLevel { candidates } => write!(f, "all {candidates} candidate simplices"),
            SearchBound::Values { bound, candidates } => {
                write!(f, "all {candidates} candidate simplices with coordinates bounded by {bound}")
            }
            SearchBound::PerVariable { bounds } => {
                f.write_str("every assignment with ")?;
                for (i, (v, b)) in bounds.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}≤{b}")?;
                }
                Ok(())
            }
            SearchBound::FiniteMonoid { order, unknowns } => {
                write!(f, "all {order}^{unknowns} assignments of the remaining unknowns")
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match (s.kind, &s.variable, &s.value) {
                (StepKind::Assign, Some(v), Some(x)) => writeln!(f, "{v} := {x}   (from {})", s.equation)?,
                (StepKind::Assign, _, _) => writeln!(f, "{}", s.equation)?,
                (StepKind::Contradiction, _, _) => writeln!(f, "{}: no solution", s.equation)?,
            }
        }
        if let Some(b) = &self.exhausted {
            writeln!(f, "exhausted search over {b}: no solution")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillerResult<S> {
    Filler(S),
    NoFiller(Certificate),
}

impl<S> FillerResult<S> {
    pub fn is_filler(&self) -> bool {
        matches!(self, FillerResult::Filler(_))
    }

    pub fn filler(&self) -> Option<&S> {
        match self {
            FillerResult::Filler(s) => Some(s),
            FillerResult::NoFiller(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            FillerResult::Filler(_) => None,
            FillerResult::NoFiller(c) => Some(c),
        }
    }
}

/// How many fillers a horn has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FillerCount {
    Exactly(usize),
    /// Counting stopped at the limit.
    AtLeast(usize),
    Infinite,
}

/// A simplicial object in which horns can be posed and decided.
pub trait HornTarget {
    type Simplex: Clone + PartialEq + fmt::Debug;

    fn dim_bound(&self) -> usize;

    /// Errors unless `x` is a simplex of this target at `level`.
    fn check_simplex(&self, level: usize, x: &Self::Simplex) -> Result<()>;

    fn face_of(&self, level: usize, i: usize, x: &Self::Simplex) -> Result<Self::Simplex>;

    /// The simplices at `level` in canonical order; infinite levels are cut
    /// down to coordinates bounded by `bound`, or `None` without one.
    fn candidates(&self, level: usize, bound: Option<u64>) -> Option<Vec<Self::Simplex>>;

    /// Whether `level` is finite, so that enumeration is exhaustive.
    fn is_finite_level(&self, level: usize) -> bool;

    /// Decides the horn with the target's preferred procedure.
    fn decide(&self, p: &HornProblem<Self::Simplex>) -> Result<FillerResult<Self::Simplex>>;

    /// Counts fillers, stopping at `limit`.
    fn count_fillers(&self, p: &HornProblem<Self::Simplex>, limit: usize) -> Result<FillerCount>;

    fn describe(&self, x: &Self::Simplex) -> String;
}

impl HornTarget for EmSpace {
    type Simplex = EmSimplex;

    fn dim_bound(&self) -> usize {
        EmSpace::dim_bound(self)
    }

    fn check_simplex(&self, level: usize, x: &EmSimplex) -> Result<()> {
        if x.level != level {
            return Err(Error::LevelMismatch { expected: level, found: x.level });
        }
        self.simplex(level, x.coords.clone()).map(|_| ())
    }

    fn face_of(&self, level: usize, i: usize, x: &EmSimplex) -> Result<EmSimplex> {
        self.face(level, i, x)
    }

    fn candidates(&self, level: usize, bound: Option<u64>) -> Option<Vec<EmSimplex>> {
        self.level_elements(level, bound)
    }

    fn is_finite_level(&self, level: usize) -> bool {
        self.monoid().is_finite() || self.generators(level).is_empty()
    }

    fn decide(&self, p: &HornProblem<EmSimplex>) -> Result<FillerResult<EmSimplex>> {
        solve_em(self, p)
    }

    fn count_fillers(&self, p: &HornProblem<EmSimplex>, limit: usize) -> Result<FillerCount> {
        count_em_fillers(self, p, limit)
    }

    fn describe(&self, x: &EmSimplex) -> String {
        self.format_simplex(x)
    }
}

impl HornTarget for TruncatedSimplicialSet {
    type Simplex = Simplex;

    fn dim_bound(&self) -> usize {
        TruncatedSimplicialSet::dim_bound(self)
    }

    fn check_simplex(&self, level: usize, x: &Simplex) -> Result<()> {
        if level > self.dim_bound() {
            return Err(Error::LevelOutOfRange { level, bound: self.dim_bound() });
        }
        self.position(level, x)
            .map(|_| ())
            .ok_or_else(|| Error::UnknownSimplex { level, simplex: x.to_string() })
    }

    fn face_of(&self, level: usize, i: usize, x: &Simplex) -> Result<Simplex> {
        self.face(level, i, x).cloned()
    }

    fn candidates(&self, level: usize, _bound: Option<u64>) -> Option<Vec<Simplex>> {
        (level <= self.dim_bound()).then(|| self.level(level).to_vec())
    }

    fn is_finite_level(&self, _level: usize) -> bool {
        true
    }

    fn decide(&self, p: &HornProblem<Simplex>) -> Result<FillerResult<Simplex>> {
        brute_force_filler(self, p, None)
    }

    fn count_fillers(&self, p: &HornProblem<Simplex>, limit: usize) -> Result<FillerCount> {
        brute_force_count(self, p, None, limit)
    }

    fn describe(&self, x: &Simplex) -> String {
        x.to_string()
    }
}

/// Checks that the faces are indexed by exactly `[n] ∖ {k}`, live at level
/// `n − 1` of the target, and that `n` is within the truncation.
pub fn check_horn_shape<T: HornTarget + ?Sized>(target: &T, p: &HornProblem<T::Simplex>) -> Result<()> {
    if p.n == 0 {
        return Err(Error::InvalidHorn("horns need n ≥ 1".to_string()));
    }
    if p.k > p.n {
        return Err(Error::InvalidHorn(format!("omitted face {} is outside [{}]", p.k, p.n)));
    }
    if p.n > target.dim_bound() {
        return Err(Error::LevelOutOfRange { level: p.n, bound: target.dim_bound() });
    }
    for i in (0..=p.n).filter(|&i| i != p.k) {
        if !p.faces.contains_key(&i) {
            return Err(Error::InvalidHorn(format!("face {i} is missing")));
        }
    }
    for (&i, x) in &p.faces {
        if i == p.k || i > p.n {
            return Err(Error::InvalidHorn(format!("unexpected face {i} for Λ^{}[{}]", p.k, p.n)));
        }
        target.check_simplex(p.n - 1, x).map_err(|e| Error::InvalidHorn(format!("face {i}: {e}")))?;
    }
    Ok(())
}

/// Whether the faces define a map `Λᵏ[n] → X`: `dᵢ(xⱼ) = dⱼ₋₁(xᵢ)` for all
/// `i < j` different from `k`. Malformed data is an error rather than an
/// incompatibility.
pub fn validate_horn<T: HornTarget + ?Sized>(target: &T, p: &HornProblem<T::Simplex>) -> Result<Compatibility> {
    check_horn_shape(target, p)?;
    if p.n < 2 {
        return Ok(Compatibility::Compatible);
    }
    let level = p.n - 1;
    for (&j, xj) in &p.faces {
        for (&i, xi) in p.faces.range(..j) {
            if target.face_of(level, i, xj)? != target.face_of(level, j - 1, xi)? {
                return Ok(Compatibility::Incompatible { i, j });
            }
        }
    }
    Ok(Compatibility::Compatible)
}

/// Whether `y` restricts to the given faces.
pub fn is_filler<T: HornTarget + ?Sized>(target: &T, p: &HornProblem<T::Simplex>, y: &T::Simplex) -> Result<bool> {
    for (&i, x) in &p.faces {
        if target.face_of(p.n, i, y)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Calls `visit` on every compatible horn `Λᵏ[n] → target` whose faces are
/// drawn from `target.candidates(n − 1, bound)`, in lexicographic order of the
/// face tuple. Returns the number of horns visited.
pub fn for_each_compatible_horn<T, F>(target: &T, n: usize, k: usize, bound: Option<u64>, mut visit: F) -> Result<usize>
where
    T: HornTarget + ?Sized,
    F: FnMut(HornProblem<T::Simplex>) -> Result<ControlFlow<()>>,
{
    if n == 0 || k > n {
        return Err(Error::InvalidHorn(format!("no horn Λ^{k}[{n}]")));
    }
    if n > target.dim_bound() {
        return Err(Error::LevelOutOfRange { level: n, bound: target.dim_bound() });
    }
    let level = n - 1;
    let candidates = target.candidates(level, bound).ok_or(Error::NotEnumerable { level })?;
    let faces_of: Vec<Vec<T::Simplex>> = if level == 0 {
        Vec::new()
    } else {
        candidates
            .iter()
            .map(|c| (0..=level).map(|t| target.face_of(level, t, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?
    };
    let indices: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(indices.len());
    let mut visited = 0usize;
    enumerate_faces(&candidates, &faces_of, &indices, &mut chosen, &mut |chosen| {
        visited += 1;
        let faces = indices.iter().zip(chosen).map(|(&i, &c)| (i, candidates[c].clone()));
        match visit(HornProblem::new(n, k, faces))? {
            ControlFlow::Continue(()) => Ok(true),
            ControlFlow::Break(()) => Ok(false),
        }
    })?;
    Ok(visited)
}

/// Backtracking over face choices; `emit` returns `false` to stop.
fn enumerate_faces<S: PartialEq>(
    candidates: &[S],
    faces_of: &[Vec<S>],
    indices: &[usize],
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    let pos = chosen.len();
    if pos == indices.len() {
        return emit(chosen);
    }
    let j = indices[pos];
    'candidate: for c in 0..candidates.len() {
        if !faces_of.is_empty() {
            for (q, &ci) in chosen.iter().enumerate() {
                let i = indices[q];
                if faces_of[c][i] != faces_of[ci][j - 1] {
                    continue 'candidate;
                }
            }
        }
        chosen.push(c);
        let keep_going = enumerate_faces(candidates, faces_of, indices, chosen, emit)?;
        chosen.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a compatible horn one face at a time, letting `pick(m)` choose
/// among the `m` candidates that agree with the faces chosen so far. `None`
/// when some face has no compatible candidate left.
pub fn sample_compatible_horn<T: HornTarget + ?Sized>(
    target: &T,
    n: usize,
    k: usize,
    bound: Option<u64>,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Result<Option<HornProblem<T::Simplex>>> {
    if n == 0 || k > n {
        return Err(Error::InvalidHorn(format!("no horn Λ^{k}[{n}]")));
    }
    let level = n - 1;
    let candidates = target.candidates(level, bound).ok_or(Error::NotEnumerable { level })?;
    let mut faces: BTreeMap<usize, T::Simplex> = BTreeMap::new();
    for j in (0..=n).filter(|&j| j != k) {
        let mut fitting = Vec::new();
        for c in &candidates {
            let mut ok = true;
            for (&i, xi) in &faces {
                if level > 0 && target.face_of(level, i, c)? != target.face_of(level, j - 1, xi)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                fitting.push(c);
            }
        }
        if fitting.is_empty() {
            return Ok(None);
        }
        let choice = pick(fitting.len()) % fitting.len();
        faces.insert(j, fitting[choice].clone());
    }
    Ok(Some(HornProblem { n, k, faces }))
}

/// Faces of `y` at every `i ≠ k`: the horn that `y` fills.
pub fn horn_of<T: HornTarget + ?Sized>(target: &T, n: usize, k: usize, y: &T::Simplex) -> Result<HornProblem<T::Simplex>> {
    let faces = (0..=n).filter(|&i| i != k).map(|i| target.face_of(n, i, y).map(|x| (i, x)));
    Ok(HornProblem { n, k, faces: faces.collect::<Result<_>>()? })
}
