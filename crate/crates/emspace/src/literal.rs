//! Literals for simplices of `K(M, n)`.
//!
//! A simplex is `level:k [v1,v2,...]` and a horn face is `i:[v1,v2,...]`.
//! Values are listed in the canonical generator order that `emspace
//! enumerate` prints, so in `K(ℕ,2)` the literal `level:3 [1,2,3]` puts `1`
//! on `0012`, `2` on `0112` and `3` on `0122`.

use emspace_core::{Elem, EmSimplex, EmSpace, Monoid};

use crate::{Error, Result};

/// `[v1,v2,...]`, possibly empty.
pub fn parse_values(s: &str, monoid: &Monoid) -> Result<Vec<Elem>> {
    value_list(s, monoid).map_err(|m| Error::literal(s, m))
}

fn value_list(s: &str, monoid: &Monoid) -> Result<Vec<Elem>, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or("expected a bracketed list like [1,2]")?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|v| monoid.parse_element(v).map_err(|e| e.to_string())).collect()
}

/// `level:k [v1,...]`.
pub fn parse_simplex(s: &str, space: &EmSpace) -> Result<EmSimplex> {
    let rest = s.trim().strip_prefix("level:").ok_or_else(|| Error::literal(s, "expected `level:k [v1,...]`"))?;
    let split = rest.find('[').ok_or_else(|| Error::literal(s, "missing value list"))?;
    let level: usize = rest[..split].trim().parse().map_err(|_| Error::literal(s, "level is not a natural number"))?;
    if level > space.dim_bound() {
        return Err(Error::literal(s, format!("level {level} is above the truncation {}", space.dim_bound())));
    }
    let values = value_list(&rest[split..], space.monoid()).map_err(|m| Error::literal(s, m))?;
    space.simplex(level, values).map_err(|e| Error::literal(s, e.to_string()))
}

/// `i:[v1,...]`, a face at `level`.
pub fn parse_face(s: &str, space: &EmSpace, level: usize) -> Result<(usize, EmSimplex)> {
    let (i, values) = s.trim().split_once(':').ok_or_else(|| Error::literal(s, "expected `i:[v1,...]`"))?;
    let i: usize = i.trim().parse().map_err(|_| Error::literal(s, "face index is not a natural number"))?;
    let values = value_list(values, space.monoid()).map_err(|m| Error::literal(s, m))?;
    let x = space.simplex(level, values).map_err(|e| Error::literal(s, e.to_string()))?;
    Ok((i, x))
}

/// `n,k` for the horn `Λᵏ[n]`.
pub fn parse_horn(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::literal(s, "expected `n,k`");
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?))
}

/// `0012:1 0112:2 0122:3`, or `*` on a level with no generators.
pub fn format_named(space: &EmSpace, x: &EmSimplex) -> String {
    let gens = space.generators(x.level);
    if gens.is_empty() {
        return "*".to_string();
    }
    let parts: Vec<String> = gens.iter().zip(&x.coords).map(|(g, c)| format!("{g}:{}", space.monoid().format_element(c))).collect();
    parts.join(" ")
}
