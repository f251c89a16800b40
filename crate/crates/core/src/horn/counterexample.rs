//! The inner horn `Λ¹[3] → K(ℕ, 2)` with faces `(f₀, 1, 3)`, which has no
//! filler, next to the same horn over `ℤ`, which does.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::constraints::build_constraints;
use super::{solve_em, validate_horn, Certificate, FillerResult, HornProblem};
use crate::em::{EmSimplex, EmSpace};
use crate::error::{Error, Result};
use crate::monoid::{Elem, Monoid};

#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub space: EmSpace,
    pub horn: HornProblem<EmSimplex>,
    /// The constraint system, rendered.
    pub equations: Vec<String>,
    pub certificate: Certificate,
    /// The filler of the same horn in `K(ℤ, 2)`.
    pub integer_filler: EmSimplex,
}

/// Builds the horn for the given `f₀ ∈ ℕ` and confirms it has no filler.
pub fn nat_two_counterexample(f0: Elem) -> Result<CounterexampleReport> {
    let space = EmSpace::new(Monoid::nat(), 2, 3);
    let faces = |s: &EmSpace| -> Result<HornProblem<EmSimplex>> {
        let x = |v: Elem| s.simplex(2, vec![v]);
        Ok(HornProblem::new(3, 1, [(0, x(f0.clone())?), (2, x(Elem::from(1))?), (3, x(Elem::from(3))?)]))
    };
    let horn = faces(&space)?;
    if !validate_horn(&space, &horn)?.is_compatible() {
        return Err(Error::Internal("the counterexample horn is incompatible".into()));
    }
    let sys = build_constraints(&space, &horn)?;
    let equations = sys.equations.iter().map(|eq| sys.render(space.monoid(), eq)).collect();
    let certificate = match solve_em(&space, &horn)? {
        FillerResult::NoFiller(c) => c,
        FillerResult::Filler(y) => {
            return Err(Error::Internal(format!("expected no filler, found {}", space.format_simplex(&y))));
        }
    };
    let integers = EmSpace::new(Monoid::int_group(), 2, 3);
    let integer_filler = match solve_em(&integers, &faces(&integers)?)? {
        FillerResult::Filler(y) => y,
        FillerResult::NoFiller(_) => return Err(Error::Internal("the horn has no filler over ℤ".into())),
    };
    Ok(CounterexampleReport { space, horn, equations, certificate, integer_filler })
}

impl CounterexampleReport {
    pub fn render_text(&self) -> String {
        let m = self.space.monoid();
        let mut out = String::new();
        let faces: Vec<String> = self.horn.faces.iter().map(|(i, x)| format!("x{i}={}", self.space.format_simplex(x))).collect();
        let _ = writeln!(out, "horn Λ^{}[{}] → K({},2): {}", self.horn.k, self.horn.n, m.name(), faces.join(", "));
        out.push_str("equations:\n");
        for eq in &self.equations {
            let _ = writeln!(out, "  {eq}");
        }
        out.push_str(&self.certificate.render(m));
        let _ = writeln!(out, "no filler in K({},2)", m.name());
        let _ = writeln!(out, "over ℤ the same horn is filled by {}", format_integers(&self.integer_filler));
        out
    }
}

fn format_integers(x: &EmSimplex) -> String {
    let parts: Vec<String> = x.coords.iter().map(|c| format!("{c}")).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_instance() {
        let r = nat_two_counterexample(Elem::from(0)).unwrap();
        assert_eq!(r.equations, ["a=0", "b+c=1", "c=3"]);
        assert_eq!(r.certificate.final_equation(), Some("b+3=1"));
        assert!(r.certificate.is_propagation());
        assert_eq!(r.integer_filler.coords, [Elem::from(0), Elem::from(-2), Elem::from(3)]);
        let text = r.render_text();
        assert!(text.contains("b+3=1: no solution in ℕ"), "{text}");
    }

    #[test]
    fn any_f0() {
        for f0 in [1, 7, 1000] {
            let r = nat_two_counterexample(Elem::from(f0)).unwrap();
            assert_eq!(r.certificate.final_equation(), Some("b+3=1"));
            assert_eq!(r.integer_filler.coords[0], Elem::from(f0));
        }
        assert!(nat_two_counterexample(Elem::from(-1)).is_err());
    }
}
