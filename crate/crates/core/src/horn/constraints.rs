use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{check_horn_shape, HornProblem};
use crate::delta::MonotoneMap;
use crate::em::{EmSimplex, EmSpace};
use crate::error::Result;
use crate::monoid::{Elem, Monoid};

/// `⊕ { x_h : h ∈ variables } = rhs`, read off coordinate `generator` of face `face`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub face: usize,
    /// Position in `Gen(n − 1)`.
    pub generator: usize,
    /// Positions in `Gen(n)`, ascending.
    pub variables: Vec<usize>,
    pub rhs: Elem,
}

/// The subset-sum system whose solutions are exactly the fillers of a horn
/// in `K(M, n)`. Variables are the coordinates of the unknown `n`-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub variables: Vec<MonotoneMap>,
    pub equations: Vec<Equation>,
}

impl ConstraintSystem {
    /// `a`, `b`, `c`, … while they last, then `x26`, `x27`, ….
    pub fn variable_name(&self, v: usize) -> String {
        if self.variables.len() <= 26 {
            String::from((b'a' + v as u8) as char)
        } else {
            format!("x{v}")
        }
    }

    /// Renders `eq` with some variables already known: unknowns first, then
    /// the sum of the known part when it is not the identity.
    pub fn render_partial(&self, monoid: &Monoid, unknowns: &[usize], known: &Elem, rhs: &Elem) -> String {
        let mut lhs: Vec<String> = unknowns.iter().map(|&v| self.variable_name(v)).collect();
        if lhs.is_empty() || !monoid.is_identity(known) {
            lhs.push(monoid.format_element(known));
        }
        format!("{}={}", lhs.join("+"), monoid.format_element(rhs))
    }

    pub fn render(&self, monoid: &Monoid, eq: &Equation) -> String {
        self.render_partial(monoid, &eq.variables, &monoid.identity(), &eq.rhs)
    }
}

/// One equation per face `i ≠ k` and generator `g ∈ Gen(n−1)`: the
/// coordinates `x_h` with `h∘δᵢ = g` must sum to `(xᵢ)_g`. Ordered by face,
/// then generator.
pub fn build_constraints(space: &EmSpace, p: &HornProblem<EmSimplex>) -> Result<ConstraintSystem> {
    check_horn_shape(space, p)?;
    let n = p.n;
    let mut equations = Vec::new();
    for (&i, face) in &p.faces {
        for (g, rhs) in face.coords.iter().enumerate() {
            equations.push(Equation { face: i, generator: g, variables: space.face_preimages(n, i, g), rhs: rhs.clone() });
        }
    }
    Ok(ConstraintSystem { variables: space.generators(n).to_vec(), equations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(v: i64) -> Elem {
        Elem::from(v)
    }

    fn render_all(sys: &ConstraintSystem, m: &Monoid) -> Vec<String> {
        sys.equations.iter().map(|eq| sys.render(m, eq)).collect()
    }

    fn horn(space: &EmSpace, k: usize, faces: [(usize, i64); 3]) -> HornProblem<EmSimplex> {
        HornProblem::new(3, k, faces.map(|(i, v)| (i, space.simplex(2, vec![e(v)]).unwrap())))
    }

    #[test]
    fn inner_horn_one_three() {
        let space = EmSpace::new(Monoid::nat(), 2, 3);
        let sys = build_constraints(&space, &horn(&space, 1, [(0, 4), (2, 1), (3, 3)])).unwrap();
        assert_eq!(render_all(&sys, space.monoid()), ["a=4", "b+c=1", "c=3"]);
    }

    #[test]
    fn inner_horn_two_three() {
        let space = EmSpace::new(Monoid::nat(), 2, 3);
        let sys = build_constraints(&space, &horn(&space, 2, [(0, 4), (1, 6), (3, 3)])).unwrap();
        assert_eq!(render_all(&sys, space.monoid()), ["a=4", "a+b=6", "c=3"]);
    }

    #[test]
    fn two_dimensional_horn_is_empty() {
        let space = EmSpace::new(Monoid::nat(), 2, 3);
        let p = HornProblem::new(2, 1, [(0, space.identity_simplex(1)), (2, space.identity_simplex(1))]);
        let sys = build_constraints(&space, &p).unwrap();
        assert_eq!(sys.variables.len(), 1);
        assert!(sys.equations.is_empty());
    }

    #[test]
    fn rendering() {
        let space = EmSpace::new(Monoid::nat(), 2, 3);
        let sys = build_constraints(&space, &horn(&space, 1, [(0, 0), (2, 1), (3, 3)])).unwrap();
        let m = space.monoid();
        assert_eq!(sys.render_partial(m, &[1], &e(3), &e(1)), "b+3=1");
        assert_eq!(sys.render_partial(m, &[], &e(3), &e(1)), "3=1");
        assert_eq!(sys.render_partial(m, &[2], &e(0), &e(3)), "c=3");
    }
}
