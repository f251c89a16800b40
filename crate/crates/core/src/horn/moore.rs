//! The filler that exists for every horn in a simplicial group.
//!
//! Starting from the identity, the faces are corrected one at a time: first
//! `i = 0, …, k−1` using `sᵢ`, then `i = n, …, k+1` using `sᵢ₋₁`. Each step
//! fixes face `i` without disturbing the faces already fixed.

use alloc::format;

use super::{validate_horn, Compatibility, FillerResult, HornProblem};
use crate::em::{EmSimplex, EmSpace};
use crate::error::{Error, Result};

pub fn moore_filler(space: &EmSpace, p: &HornProblem<EmSimplex>) -> Result<FillerResult<EmSimplex>> {
    let m = space.monoid();
    if !m.is_group() {
        return Err(Error::NotAGroup { monoid: m.name() });
    }
    if let Compatibility::Incompatible { i, j } = validate_horn(space, p)? {
        return Err(Error::InvalidHorn(format!("faces {i} and {j} do not agree")));
    }
    let n = p.n;
    let negate = |x: &EmSimplex| -> Result<EmSimplex> {
        let coords = x.coords.iter().map(|c| m.inverse(c).ok_or_else(|| Error::NotAGroup { monoid: m.name() })).collect::<Result<_>>()?;
        Ok(EmSimplex { level: x.level, coords })
    };
    // w ← w − s_j(dᵢ w) + s_j(xᵢ)
    let correct = |w: EmSimplex, i: usize, j: usize| -> Result<EmSimplex> {
        let current = space.degeneracy(n - 1, j, &space.face(n, i, &w)?)?;
        let wanted = space.degeneracy(n - 1, j, &p.faces[&i])?;
        space.add(n, &space.add(n, &w, &negate(&current)?)?, &wanted)
    };
    let mut w = space.identity_simplex(n);
    for i in 0..p.k {
        w = correct(w, i, i)?;
    }
    for i in (p.k + 1..=n).rev() {
        w = correct(w, i, i - 1)?;
    }
    if !super::is_filler(space, p, &w)? {
        return Err(Error::Internal(format!("Moore construction gave {}, which is not a filler", space.format_simplex(&w))));
    }
    Ok(FillerResult::Filler(w))
}
