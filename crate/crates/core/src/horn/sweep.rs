//! Exhaustive horn-filling sweeps up to a dimension bound.

use core::ops::ControlFlow;

use super::{for_each_compatible_horn, Certificate, FillerCount, FillerResult, HornProblem, HornTarget};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HornKind {
    /// `0 < k < n`: the quasi-category condition.
    Inner,
    /// Every `0 ≤ k ≤ n`: the Kan condition.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub kind: HornKind,
    /// Horns `Λᵏ[n]` with `1 ≤ n ≤ max_dim` are checked.
    pub max_dim: usize,
    /// Coordinate bound for enumerating faces in infinite levels.
    pub bound: Option<u64>,
    /// Also require every horn to have exactly one filler.
    pub check_uniqueness: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepOutcome<S> {
    /// Every horn had a filler. `bounded_evidence` is set when some face
    /// level was infinite and only bounded faces were tried.
    Passed { bounded_evidence: bool },
    MissingFiller { problem: HornProblem<S>, certificate: Certificate },
    NonUniqueFiller { problem: HornProblem<S>, count: FillerCount },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport<S> {
    pub kind: HornKind,
    pub max_dim: usize,
    pub bound: Option<u64>,
    pub horns_checked: usize,
    pub outcome: SweepOutcome<S>,
}

impl<S> SweepReport<S> {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, SweepOutcome::Passed { .. })
    }
}

/// Checks horns in order of `n`, then `k`, then the lexicographic order of
/// their faces, and stops at the first failure.
pub fn sweep<T: HornTarget + ?Sized>(target: &T, cfg: SweepConfig) -> Result<SweepReport<T::Simplex>> {
    if cfg.max_dim > target.dim_bound() {
        return Err(Error::LevelOutOfRange { level: cfg.max_dim, bound: target.dim_bound() });
    }
    let mut horns_checked = 0;
    let mut bounded_evidence = false;
    let mut failure = None;
    'dims: for n in 1..=cfg.max_dim {
        let ks = match cfg.kind {
            HornKind::Inner => 1..n,
            HornKind::All => 0..n + 1,
        };
        if !ks.is_empty() && !target.is_finite_level(n - 1) {
            bounded_evidence = true;
        }
        for k in ks {
            for_each_compatible_horn(target, n, k, cfg.bound, |p| {
                horns_checked += 1;
                match target.decide(&p)? {
                    FillerResult::NoFiller(certificate) => {
                        failure = Some(SweepOutcome::MissingFiller { problem: p, certificate });
                        return Ok(ControlFlow::Break(()));
                    }
                    FillerResult::Filler(_) if cfg.check_uniqueness => {
                        let count = target.count_fillers(&p, 2)?;
                        if count != FillerCount::Exactly(1) {
                            failure = Some(SweepOutcome::NonUniqueFiller { problem: p, count });
                            return Ok(ControlFlow::Break(()));
                        }
                    }
                    FillerResult::Filler(_) => {}
                }
                Ok(ControlFlow::Continue(()))
            })?;
            if failure.is_some() {
                break 'dims;
            }
        }
    }
    let outcome = failure.unwrap_or(SweepOutcome::Passed { bounded_evidence });
    Ok(SweepReport { kind: cfg.kind, max_dim: cfg.max_dim, bound: cfg.bound, horns_checked, outcome })
}

pub fn sweep_quasicategory<T: HornTarget + ?Sized>(target: &T, max_dim: usize, bound: Option<u64>) -> Result<SweepReport<T::Simplex>> {
    sweep(target, SweepConfig { kind: HornKind::Inner, max_dim, bound, check_uniqueness: false })
}

pub fn sweep_kan<T: HornTarget + ?Sized>(target: &T, max_dim: usize, bound: Option<u64>) -> Result<SweepReport<T::Simplex>> {
    sweep(target, SweepConfig { kind: HornKind::All, max_dim, bound, check_uniqueness: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::em::EmSpace;
    use crate::monoid::{Elem, Monoid};
    use crate::sset;
    use alloc::vec;

    #[test]
    fn nat_two_fails_at_the_first_inner_three_horn() {
        let space = EmSpace::new(Monoid::nat(), 2, 3);
        let report = sweep_quasicategory(&space, 3, Some(3)).unwrap();
        let SweepOutcome::MissingFiller { problem, certificate } = report.outcome else { panic!("{:?}", report.outcome) };
        assert_eq!((problem.n, problem.k), (3, 1));
        let faces: vec::Vec<_> = problem.faces.values().map(|x| x.coords[0].clone()).collect();
        assert_eq!(faces, [Elem::from(0), Elem::from(0), Elem::from(1)]);
        // b+c = 0 forces c = 0 before c = 1 is read.
        assert_eq!(certificate.final_equation(), Some("0=1"));
    }

    #[test]
    fn simplex_and_boundary() {
        assert!(sweep_quasicategory(&sset::standard_simplex(2, 3), 3, None).unwrap().passed());
        let report = sweep_quasicategory(&sset::boundary(2, 3), 3, None).unwrap();
        assert!(matches!(report.outcome, SweepOutcome::MissingFiller { ref problem, .. } if problem.n == 2));
    }

    #[test]
    fn nerve_of_bool_has_unique_inner_fillers() {
        let nerve = EmSpace::new(Monoid::boolean(), 1, 4);
        let cfg = SweepConfig { kind: HornKind::Inner, max_dim: 4, bound: None, check_uniqueness: true };
        let report = sweep(&nerve, cfg).unwrap();
        assert_eq!(report.outcome, SweepOutcome::Passed { bounded_evidence: false });
        // Outer horns of a non-group nerve fail.
        assert!(!sweep_kan(&nerve, 2, None).unwrap().passed());
    }

    #[test]
    fn bounded_evidence_is_flagged() {
        let space = EmSpace::new(Monoid::int_group(), 1, 2);
        let report = sweep_kan(&space, 2, Some(2)).unwrap();
        assert_eq!(report.outcome, SweepOutcome::Passed { bounded_evidence: true });
        assert!(sweep_kan(&space, 3, Some(1)).is_err());
    }
}
