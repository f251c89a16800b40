//! The Eilenberg–MacLane simplicial monoid `K(M, n)`.
//!
//! Level `k` is the reduced free `M`-module on the pointed set `Sⁿ[k]`: one
//! copy of `M` for every monotone surjection `[k] → [n]`, the basepoint
//! contributing nothing. A simplex is therefore a dense coefficient vector
//! indexed by `Gen(k)` in canonical (lexicographic) order.
//!
//! Operators are induced from `Sⁿ` by pushing coefficients forward: the
//! coordinate on a generator `h` moves to `h∘θ` when that composite is still
//! surjective, and is dropped into the basepoint otherwise.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::delta::{self, MonotoneMap};
use crate::error::{Error, Result};
use crate::monoid::{Elem, Monoid};
use crate::sset::IdentityViolation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmSpace {
    monoid: Monoid,
    degree: usize,
    dim_bound: usize,
    generators: Vec<Vec<MonotoneMap>>,
    /// `faces[k][i][h]`: position in `Gen(k−1)` of `h∘δᵢ`, or `None` for the basepoint.
    faces: Vec<Vec<Vec<Option<usize>>>>,
    /// `degeneracies[k][j][h]`: position in `Gen(k+1)` of `h∘σⱼ`.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

/// An element of `K(M, n)[level]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmSimplex {
    pub level: usize,
    pub coords: Vec<Elem>,
}

impl EmSpace {
    pub fn new(monoid: Monoid, degree: usize, dim_bound: usize) -> Self {
        let generators: Vec<Vec<MonotoneMap>> =
            (0..=dim_bound).map(|k| delta::enumerate_surjections(k, degree)).collect();
        let position = |k: usize, m: &MonotoneMap| generators[k].binary_search(m).ok();
        let mut faces = Vec::with_capacity(dim_bound + 1);
        let mut degeneracies = Vec::with_capacity(dim_bound + 1);
        for k in 0..=dim_bound {
            let mut rows = Vec::new();
            if k > 0 {
                for i in 0..=k {
                    let d = delta::coface(k, i).unwrap();
                    rows.push(
                        generators[k]
                            .iter()
                            .map(|h| {
                                let c = delta::compose(&d, h).unwrap();
                                if c.is_surjective() {
                                    position(k - 1, &c)
                                } else {
                                    None
                                }
                            })
                            .collect(),
                    );
                }
            }
            faces.push(rows);
            let mut rows = Vec::new();
            if k < dim_bound {
                for j in 0..=k {
                    let s = delta::codegeneracy(k, j).unwrap();
                    // Precomposing a surjection with a surjection stays surjective.
                    rows.push(
                        generators[k]
                            .iter()
                            .map(|h| position(k + 1, &delta::compose(&s, h).unwrap()).unwrap())
                            .collect(),
                    );
                }
            }
            degeneracies.push(rows);
        }
        Self { monoid, degree, dim_bound, generators, faces, degeneracies }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    /// `Gen(k)`: the monotone surjections `[k] → [n]`, in canonical order.
    pub fn generators(&self, k: usize) -> &[MonotoneMap] {
        &self.generators[k]
    }

    /// `K(M,n)` written as its level-`k` monoid, e.g. `ℕ⟨0012⟩⊕ℕ⟨0112⟩⊕ℕ⟨0122⟩`.
    pub fn level_description(&self, k: usize) -> String {
        if self.generators[k].is_empty() {
            return String::from("*");
        }
        let name = self.monoid.name();
        let parts: Vec<String> = self.generators[k].iter().map(|g| format!("{name}⟨{g}⟩")).collect();
        parts.join("⊕")
    }

    fn check_level(&self, k: usize) -> Result<()> {
        if k > self.dim_bound {
            return Err(Error::LevelOutOfRange { level: k, bound: self.dim_bound });
        }
        Ok(())
    }

    /// Validates shape and membership of a coefficient vector.
    pub fn simplex(&self, k: usize, coords: Vec<Elem>) -> Result<EmSimplex> {
        self.check_level(k)?;
        let expected = self.generators[k].len();
        if coords.len() != expected {
            return Err(Error::CoordinateCount { level: k, expected, found: coords.len() });
        }
        for c in &coords {
            self.monoid.check(c)?;
        }
        Ok(EmSimplex { level: k, coords })
    }

    fn check_simplex(&self, k: usize, x: &EmSimplex) -> Result<()> {
        self.check_level(k)?;
        if x.level != k {
            return Err(Error::LevelMismatch { expected: k, found: x.level });
        }
        let expected = self.generators[k].len();
        if x.coords.len() != expected {
            return Err(Error::CoordinateCount { level: k, expected, found: x.coords.len() });
        }
        Ok(())
    }

    /// The monoid identity of level `k`: every coordinate is the identity.
    pub fn identity_simplex(&self, k: usize) -> EmSimplex {
        EmSimplex { level: k, coords: vec![self.monoid.identity(); self.generators[k].len()] }
    }

    /// `value` on generator `h`, identity elsewhere.
    pub fn unit(&self, k: usize, h: usize, value: Elem) -> EmSimplex {
        let mut x = self.identity_simplex(k);
        x.coords[h] = value;
        x
    }

    /// `dᵢ : K[k] → K[k−1]`. Coordinate `g` of the result is the sum of the
    /// coordinates `x_h` over generators with `h∘δᵢ = g`.
    pub fn face(&self, k: usize, i: usize, x: &EmSimplex) -> Result<EmSimplex> {
        self.check_simplex(k, x)?;
        if k == 0 || i > k {
            return Err(Error::IndexOutOfRange { what: "face", index: i, max: k });
        }
        let mut out = self.identity_simplex(k - 1);
        for (h, target) in self.faces[k][i].iter().enumerate() {
            if let Some(g) = *target {
                out.coords[g] = self.monoid.op(&out.coords[g], &x.coords[h]);
            }
        }
        Ok(out)
    }

    /// `sⱼ : K[k] → K[k+1]`. `h ↦ h∘σⱼ` is injective, so each coordinate of
    /// the result is a single coefficient or the identity.
    pub fn degeneracy(&self, k: usize, j: usize, x: &EmSimplex) -> Result<EmSimplex> {
        self.check_simplex(k, x)?;
        if k >= self.dim_bound {
            return Err(Error::LevelOutOfRange { level: k + 1, bound: self.dim_bound });
        }
        if j > k {
            return Err(Error::IndexOutOfRange { what: "degeneracy", index: j, max: k });
        }
        let mut out = self.identity_simplex(k + 1);
        for (h, &target) in self.degeneracies[k][j].iter().enumerate() {
            out.coords[target] = x.coords[h].clone();
        }
        Ok(out)
    }

    /// Levelwise monoid operation.
    pub fn add(&self, k: usize, x: &EmSimplex, y: &EmSimplex) -> Result<EmSimplex> {
        self.check_simplex(k, x)?;
        self.check_simplex(k, y)?;
        let coords = x.coords.iter().zip(&y.coords).map(|(a, b)| self.monoid.op(a, b)).collect();
        Ok(EmSimplex { level: k, coords })
    }

    /// Generators `h ∈ Gen(k)` with `h∘δᵢ = Gen(k−1)[g]`, ascending.
    pub fn face_preimages(&self, k: usize, i: usize, g: usize) -> Vec<usize> {
        self.faces[k][i].iter().enumerate().filter(|(_, t)| **t == Some(g)).map(|(h, _)| h).collect()
    }

    /// Every level-`k` simplex with coordinates drawn from
    /// `monoid.bounded_elements(bound)` (all elements when the monoid is
    /// finite), in lexicographic order. `None` for an infinite monoid without
    /// a bound.
    pub fn level_elements(&self, k: usize, bound: Option<u64>) -> Option<Vec<EmSimplex>> {
        let values = match (self.monoid.elements(), bound) {
            (Some(all), _) => all,
            (None, Some(b)) => {
                let mut v = self.monoid.bounded_elements(b);
                v.sort();
                v
            }
            (None, None) => return None,
        };
        let width = self.generators.get(k)?.len();
        let mut out = Vec::new();
        let mut digits = vec![0usize; width];
        loop {
            out.push(EmSimplex { level: k, coords: digits.iter().map(|&d| values[d].clone()).collect() });
            // Odometer, last coordinate fastest.
            let mut pos = width;
            loop {
                if pos == 0 {
                    return Some(out);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < values.len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    /// Evaluates every simplicial identity that starts at `x` (a level-`k`
    /// simplex) and stays within the truncation. Returns the first failure.
    pub fn identity_violation(&self, k: usize, x: &EmSimplex) -> Result<Option<IdentityViolation>> {
        let fail = |identity, i, j| Some(IdentityViolation { identity, level: k, simplex: self.format_simplex(x), i, j });
        if k >= 2 {
            for j in 1..=k {
                for i in 0..j {
                    if self.face(k - 1, i, &self.face(k, j, x)?)? != self.face(k - 1, j - 1, &self.face(k, i, x)?)? {
                        return Ok(fail("d_i d_j = d_{j-1} d_i", i, j));
                    }
                }
            }
        }
        if k + 2 <= self.dim_bound {
            for j in 0..=k {
                for i in 0..=j {
                    if self.degeneracy(k + 1, i, &self.degeneracy(k, j, x)?)? != self.degeneracy(k + 1, j + 1, &self.degeneracy(k, i, x)?)? {
                        return Ok(fail("s_i s_j = s_{j+1} s_i", i, j));
                    }
                }
            }
        }
        if k < self.dim_bound {
            for j in 0..=k {
                let y = self.degeneracy(k, j, x)?;
                for i in 0..=k + 1 {
                    let rhs = if i < j {
                        self.degeneracy(k - 1, j - 1, &self.face(k, i, x)?)?
                    } else if i == j || i == j + 1 {
                        x.clone()
                    } else {
                        self.degeneracy(k - 1, j, &self.face(k, i - 1, x)?)?
                    };
                    if self.face(k + 1, i, &y)? != rhs {
                        return Ok(fail("d_i s_j", i, j));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Checks that every face and degeneracy out of level `k` preserves `x ⊕ y`
    /// and the identity. Returns the failing operator and index.
    pub fn homomorphism_violation(&self, k: usize, x: &EmSimplex, y: &EmSimplex) -> Result<Option<(&'static str, usize)>> {
        let sum = self.add(k, x, y)?;
        let id = self.identity_simplex(k);
        for i in 0..=k {
            if k >= 1 {
                let split = self.add(k - 1, &self.face(k, i, x)?, &self.face(k, i, y)?)?;
                if self.face(k, i, &sum)? != split || self.face(k, i, &id)? != self.identity_simplex(k - 1) {
                    return Ok(Some(("face", i)));
                }
            }
            if k < self.dim_bound {
                let split = self.add(k + 1, &self.degeneracy(k, i, x)?, &self.degeneracy(k, i, y)?)?;
                if self.degeneracy(k, i, &sum)? != split || self.degeneracy(k, i, &id)? != self.identity_simplex(k + 1) {
                    return Ok(Some(("degeneracy", i)));
                }
            }
        }
        Ok(None)
    }

    /// `(a,b,c)` with elements rendered by the monoid.
    pub fn format_simplex(&self, x: &EmSimplex) -> String {
        let parts: Vec<String> = x.coords.iter().map(|c| self.monoid.format_element(c)).collect();
        format!("({})", parts.join(","))
    }
}

/// `K(M, 1)` read as the nerve of `M`: a `k`-simplex is a tuple
/// `(m₁, …, mₖ)`, where `mₜ` labels the edge `t−1 → t`.
///
/// The edge `t−1 → t` corresponds to the surjection `[k] → [1]` whose first
/// `1` sits at position `t`; in canonical order those appear with `t`
/// decreasing, so tuple position `t−1` is coordinate `k − t`.
#[derive(Clone, Debug)]
pub struct NerveView {
    space: EmSpace,
}

/// A simplex where the classical nerve formula and `K(M,1)` disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveMismatch {
    pub operator: &'static str,
    pub level: usize,
    pub index: usize,
    pub tuple: Vec<Elem>,
}

impl NerveView {
    pub fn new(monoid: Monoid, dim_bound: usize) -> Self {
        Self { space: EmSpace::new(monoid, 1, dim_bound) }
    }

    pub fn space(&self) -> &EmSpace {
        &self.space
    }

    pub fn to_em(&self, tuple: &[Elem]) -> EmSimplex {
        EmSimplex { level: tuple.len(), coords: tuple.iter().rev().cloned().collect() }
    }

    pub fn from_em(&self, x: &EmSimplex) -> Vec<Elem> {
        x.coords.iter().rev().cloned().collect()
    }

    /// `d₀` drops `m₁`, `dₖ` drops `mₖ`, inner `dᵢ` multiplies `mᵢ` and `mᵢ₊₁`.
    pub fn classical_face(&self, i: usize, tuple: &[Elem]) -> Vec<Elem> {
        let k = tuple.len();
        assert!(k >= 1 && i <= k, "face d{i} on a {k}-simplex");
        let mut out = tuple.to_vec();
        if i == 0 {
            out.remove(0);
        } else if i == k {
            out.pop();
        } else {
            let merged = self.space.monoid.op(&tuple[i - 1], &tuple[i]);
            out[i - 1] = merged;
            out.remove(i);
        }
        out
    }

    /// `sⱼ` inserts the identity as the edge `j → j+1`.
    pub fn classical_degeneracy(&self, j: usize, tuple: &[Elem]) -> Vec<Elem> {
        let mut out = tuple.to_vec();
        out.insert(j, self.space.monoid.identity());
        out
    }

    /// Compares the classical formulas with the operators of `K(M,1)` on every
    /// simplex up to `max_level`. Needs a finite monoid.
    pub fn find_mismatch(&self, max_level: usize) -> Result<Option<NerveMismatch>> {
        let max_level = max_level.min(self.space.dim_bound);
        for k in 0..=max_level {
            let all = self.space.level_elements(k, None).ok_or(Error::NotEnumerable { level: k })?;
            for x in all {
                let tuple = self.from_em(&x);
                if k >= 1 {
                    for i in 0..=k {
                        if self.space.face(k, i, &x)? != self.to_em(&self.classical_face(i, &tuple)) {
                            return Ok(Some(NerveMismatch { operator: "face", level: k, index: i, tuple }));
                        }
                    }
                }
                if k < self.space.dim_bound {
                    for j in 0..=k {
                        if self.space.degeneracy(k, j, &x)? != self.to_em(&self.classical_degeneracy(j, &tuple)) {
                            return Ok(Some(NerveMismatch { operator: "degeneracy", level: k, index: j, tuple }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}
