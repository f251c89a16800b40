//! Finite simplicial sets truncated at an explicit dimension bound.
//!
//! Simplices are identified by the monotone maps themselves, plus a reserved
//! basepoint for quotients such as `Sⁿ = Δ[n]/∂Δ[n]`. Face and degeneracy
//! tables are stored explicitly; operators that would leave the truncation are
//! simply absent.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::delta::{self, MonotoneMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simplex {
    Basepoint,
    Map(MonotoneMap),
}

impl Simplex {
    pub fn as_map(&self) -> Option<&MonotoneMap> {
        match self {
            Simplex::Basepoint => None,
            Simplex::Map(m) => Some(m),
        }
    }
}

impl From<MonotoneMap> for Simplex {
    fn from(m: MonotoneMap) -> Self {
        Simplex::Map(m)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplex::Basepoint => f.write_str("*"),
            Simplex::Map(m) => m.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
    dim_bound: usize,
    levels: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
    /// `faces[k][i][x]`: index at level `k − 1` of `dᵢ` of simplex `x` at level `k`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[k][j][x]`: index at level `k + 1`; empty at the top level.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

/// A simplicial identity that failed on a concrete simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: &'static str,
    pub level: usize,
    pub simplex: String,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails for i={}, j={} on {} at level {}",
            self.identity, self.i, self.j, self.simplex, self.level
        )
    }
}

impl TruncatedSimplicialSet {
    /// Builds a simplicial set from explicit tables, checking that every
    /// table has the right shape and points at an existing simplex.
    ///
    /// `faces[k]` must have `k + 1` rows for `k ≥ 1` (and none for `k = 0`);
    /// `degeneracies[k]` must have `k + 1` rows for `k < D` (and none at `D`).
    pub fn from_tables(
        levels: Vec<Vec<Simplex>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSimplicialSet("a simplicial set needs at least level 0".to_string()));
        }
        let dim_bound = levels.len() - 1;
        if faces.len() != levels.len() || degeneracies.len() != levels.len() {
            return Err(Error::LevelMismatch { expected: levels.len(), found: faces.len().min(degeneracies.len()) });
        }
        for k in 0..=dim_bound {
            let face_rows = if k == 0 { 0 } else { k + 1 };
            let degen_rows = if k == dim_bound { 0 } else { k + 1 };
            check_rows(&faces[k], face_rows, levels[k].len(), k.checked_sub(1).map(|l| levels[l].len()))?;
            check_rows(&degeneracies[k], degen_rows, levels[k].len(), levels.get(k + 1).map(Vec::len))?;
        }
        let index = levels
            .iter()
            .map(|level| level.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect::<BTreeMap<_, _>>())
            .collect::<Vec<_>>();
        for (k, idx) in index.iter().enumerate() {
            if idx.len() != levels[k].len() {
                return Err(Error::InvalidSimplicialSet(alloc::format!("duplicate simplex at level {k}")));
            }
        }
        Ok(Self { dim_bound, levels, index, faces, degeneracies })
    }

    /// Builds tables from a contravariant action `(θ, x) ↦ θ*x`, where `θ` is
    /// a coface or codegeneracy of the right shape. Panics if the action leaves
    /// the given levels.
    fn from_action(levels: Vec<Vec<Simplex>>, act: impl Fn(&MonotoneMap, &Simplex) -> Simplex) -> Self {
        let dim_bound = levels.len() - 1;
        let lookup = |level: usize, s: &Simplex| -> usize {
            levels[level].binary_search(s).unwrap_or_else(|_| panic!("operator image {s} missing from level {level}"))
        };
        let mut faces = Vec::with_capacity(dim_bound + 1);
        let mut degeneracies = Vec::with_capacity(dim_bound + 1);
        for k in 0..=dim_bound {
            let mut rows = Vec::new();
            if k > 0 {
                for i in 0..=k {
                    let d = delta::coface(k, i).unwrap();
                    rows.push(levels[k].iter().map(|x| lookup(k - 1, &act(&d, x))).collect());
                }
            }
            faces.push(rows);
            let mut rows = Vec::new();
            if k < dim_bound {
                for j in 0..=k {
                    let s = delta::codegeneracy(k, j).unwrap();
                    rows.push(levels[k].iter().map(|x| lookup(k + 1, &act(&s, x))).collect());
                }
            }
            degeneracies.push(rows);
        }
        Self::from_tables(levels, faces, degeneracies).expect("operator tables built from an action are well formed")
    }

    /// The sub-simplicial set of `Δ[n]` whose `k`-simplices are the maps
    /// `[k] → [n]` accepted by `keep`. The predicate must define a subobject.
    fn sub_of_standard(n: usize, dim_bound: usize, keep: impl Fn(&MonotoneMap) -> bool) -> Self {
        let levels = (0..=dim_bound)
            .map(|k| delta::enumerate_monotone(k, n).into_iter().filter(|m| keep(m)).map(Simplex::Map).collect())
            .collect();
        Self::from_action(levels, |theta, x| match x {
            Simplex::Map(m) => Simplex::Map(delta::compose(theta, m).unwrap()),
            Simplex::Basepoint => Simplex::Basepoint,
        })
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn level(&self, k: usize) -> &[Simplex] {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    pub fn position(&self, k: usize, s: &Simplex) -> Option<usize> {
        self.index.get(k)?.get(s).copied()
    }

    fn locate(&self, k: usize, s: &Simplex) -> Result<usize> {
        if k > self.dim_bound {
            return Err(Error::LevelOutOfRange { level: k, bound: self.dim_bound });
        }
        self.position(k, s).ok_or_else(|| Error::UnknownSimplex { level: k, simplex: s.to_string() })
    }

    pub fn face(&self, k: usize, i: usize, s: &Simplex) -> Result<&Simplex> {
        let x = self.locate(k, s)?;
        if k == 0 || i > k {
            return Err(Error::IndexOutOfRange { what: "face", index: i, max: k });
        }
        Ok(&self.levels[k - 1][self.faces[k][i][x]])
    }

    pub fn degeneracy(&self, k: usize, j: usize, s: &Simplex) -> Result<&Simplex> {
        let x = self.locate(k, s)?;
        if k >= self.dim_bound {
            return Err(Error::LevelOutOfRange { level: k + 1, bound: self.dim_bound });
        }
        if j > k {
            return Err(Error::IndexOutOfRange { what: "degeneracy", index: j, max: k });
        }
        Ok(&self.levels[k + 1][self.degeneracies[k][j][x]])
    }

    /// Index-level face lookup, for callers iterating over [`Self::level`].
    pub fn face_index(&self, k: usize, i: usize, x: usize) -> usize {
        self.faces[k][i][x]
    }

    pub fn degeneracy_index(&self, k: usize, j: usize, x: usize) -> usize {
        self.degeneracies[k][j][x]
    }

    /// Checks every simplicial identity whose both sides lie inside the
    /// truncation, on every simplex.
    pub fn check_identities(&self) -> core::result::Result<(), IdentityViolation> {
        let d = |k: usize, i: usize, x: usize| self.faces[k][i][x];
        let s = |k: usize, j: usize, x: usize| self.degeneracies[k][j][x];
        let fail = |identity, level: usize, x: usize, i, j| IdentityViolation {
            identity,
            level,
            simplex: self.levels[level][x].to_string(),
            i,
            j,
        };
        for k in 0..=self.dim_bound {
            for x in 0..self.levels[k].len() {
                if k >= 2 {
                    for j in 1..=k {
                        for i in 0..j {
                            if d(k - 1, i, d(k, j, x)) != d(k - 1, j - 1, d(k, i, x)) {
                                return Err(fail("d_i d_j = d_{j-1} d_i", k, x, i, j));
                            }
                        }
                    }
                }
                if k + 2 <= self.dim_bound {
                    for j in 0..=k {
                        for i in 0..=j {
                            if s(k + 1, i, s(k, j, x)) != s(k + 1, j + 1, s(k, i, x)) {
                                return Err(fail("s_i s_j = s_{j+1} s_i", k, x, i, j));
                            }
                        }
                    }
                }
                if k < self.dim_bound {
                    for j in 0..=k {
                        let y = s(k, j, x);
                        for i in 0..=k + 1 {
                            let lhs = d(k + 1, i, y);
                            let rhs = if i < j {
                                s(k - 1, j - 1, d(k, i, x))
                            } else if i == j || i == j + 1 {
                                x
                            } else {
                                s(k - 1, j, d(k, i - 1, x))
                            };
                            if lhs != rhs {
                                return Err(fail("d_i s_j", k, x, i, j));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The quotient `self / sub`: simplices of `sub` collapse to a basepoint.
    pub fn quotient(&self, sub: &TruncatedSimplicialSet) -> Result<Self> {
        if sub.dim_bound != self.dim_bound {
            return Err(Error::LevelMismatch { expected: self.dim_bound, found: sub.dim_bound });
        }
        for k in 0..=self.dim_bound {
            if self.position(k, &Simplex::Basepoint).is_some() {
                return Err(Error::InvalidSimplicialSet("cannot collapse into a set that already has a basepoint".to_string()));
            }
            for s in sub.level(k) {
                self.locate(k, s)?;
            }
        }
        let collapse = |k: usize, x: usize| -> Simplex {
            let s = &self.levels[k][x];
            if sub.position(k, s).is_some() {
                Simplex::Basepoint
            } else {
                s.clone()
            }
        };
        let levels: Vec<Vec<Simplex>> = (0..=self.dim_bound)
            .map(|k| {
                let mut level: Vec<Simplex> = (0..self.levels[k].len()).map(|x| collapse(k, x)).collect();
                level.sort();
                level.dedup();
                level
            })
            .collect();
        let pos = |k: usize, s: &Simplex| levels[k].binary_search(s).unwrap();
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        for k in 0..=self.dim_bound {
            // Each quotient simplex has a representative in `self`; the basepoint
            // maps to the basepoint under every operator.
            let rep = |t: &Simplex| -> Option<usize> {
                match t {
                    Simplex::Basepoint => None,
                    s => self.position(k, s),
                }
            };
            let image = |table: &Vec<usize>, target: usize, t: &Simplex| -> usize {
                match rep(t) {
                    None => pos(target, &Simplex::Basepoint),
                    Some(x) => pos(target, &collapse(target, table[x])),
                }
            };
            faces.push(if k == 0 {
                Vec::new()
            } else {
                self.faces[k].iter().map(|row| levels[k].iter().map(|t| image(row, k - 1, t)).collect()).collect()
            });
            degeneracies.push(
                self.degeneracies[k].iter().map(|row| levels[k].iter().map(|t| image(row, k + 1, t)).collect()).collect(),
            );
        }
        Self::from_tables(levels, faces, degeneracies)
    }
}

fn check_rows(rows: &[Vec<usize>], expected_rows: usize, len: usize, target_len: Option<usize>) -> Result<()> {
    if rows.len() != expected_rows {
        return Err(Error::LevelMismatch { expected: expected_rows, found: rows.len() });
    }
    for row in rows {
        if row.len() != len {
            return Err(Error::LevelMismatch { expected: len, found: row.len() });
        }
        let bound = target_len.unwrap_or(0);
        if let Some(&bad) = row.iter().find(|&&t| t >= bound) {
            return Err(Error::IndexOutOfRange { what: "table target", index: bad, max: bound.saturating_sub(1) });
        }
    }
    Ok(())
}

/// The textual dump: one line `k: s s …` per level, simplices in canonical order.
impl fmt::Display for TruncatedSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, level) in self.levels.iter().enumerate() {
            write!(f, "{k}:")?;
            for s in level {
                write!(f, " {s}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `Δ[n]` truncated at `dim_bound`: level `k` is every monotone map `[k] → [n]`.
pub fn standard_simplex(n: usize, dim_bound: usize) -> TruncatedSimplicialSet {
    TruncatedSimplicialSet::sub_of_standard(n, dim_bound, |_| true)
}

/// `∂Δ[n]`: the non-surjective simplices of `Δ[n]`.
pub fn boundary(n: usize, dim_bound: usize) -> TruncatedSimplicialSet {
    TruncatedSimplicialSet::sub_of_standard(n, dim_bound, |m| !m.is_surjective())
}

/// `Λᵏ[n]`: simplices of `Δ[n]` lying in some face other than the `k`-th,
/// i.e. those whose image together with `k` still misses a vertex.
pub fn horn(n: usize, k: usize, dim_bound: usize) -> TruncatedSimplicialSet {
    TruncatedSimplicialSet::sub_of_standard(n, dim_bound, |m| (0..=n).any(|v| v != k && !m.hits(v)))
}

/// `Sⁿ = Δ[n]/∂Δ[n]`: a basepoint plus the monotone surjections `[k] → [n]`.
pub fn sphere(n: usize, dim_bound: usize) -> TruncatedSimplicialSet {
    let levels = (0..=dim_bound)
        .map(|k| {
            let mut level = alloc::vec![Simplex::Basepoint];
            level.extend(delta::enumerate_surjections(k, n).into_iter().map(Simplex::Map));
            level
        })
        .collect();
    TruncatedSimplicialSet::from_action(levels, sphere_action)
}

/// The operator action on `Sⁿ`: `θ*x = x∘θ` if that is still surjective, else `*`.
pub fn sphere_action(theta: &MonotoneMap, x: &Simplex) -> Simplex {
    match x {
        Simplex::Basepoint => Simplex::Basepoint,
        Simplex::Map(m) => {
            let c = delta::compose(theta, m).unwrap();
            if c.is_surjective() {
                Simplex::Map(c)
            } else {
                Simplex::Basepoint
            }
        }
    }
}

/// A levelwise assignment `X → Y`: `images[k][x]` is the image of the `x`-th
/// simplex of `X` at level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMap {
    pub images: Vec<Vec<Simplex>>,
}

impl LevelMap {
    pub fn identity(x: &TruncatedSimplicialSet) -> Self {
        Self { images: x.levels.clone() }
    }

    pub fn from_fn(x: &TruncatedSimplicialSet, f: impl Fn(usize, &Simplex) -> Simplex) -> Self {
        Self { images: x.levels.iter().enumerate().map(|(k, l)| l.iter().map(|s| f(k, s)).collect()).collect() }
    }
}

/// Whether `f` commutes with every face and degeneracy of `x` and `y`.
pub fn simplicial_map_check(f: &LevelMap, x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> Result<bool> {
    if f.images.len() != x.levels.len() || x.dim_bound != y.dim_bound {
        return Err(Error::LevelMismatch { expected: x.levels.len(), found: f.images.len() });
    }
    let mut image_idx = Vec::with_capacity(f.images.len());
    for (k, level) in f.images.iter().enumerate() {
        if level.len() != x.levels[k].len() {
            return Err(Error::LevelMismatch { expected: x.levels[k].len(), found: level.len() });
        }
        image_idx.push(level.iter().map(|s| y.locate(k, s)).collect::<Result<Vec<_>>>()?);
    }
    for k in 0..=x.dim_bound {
        for s in 0..x.levels[k].len() {
            let fs = image_idx[k][s];
            if k > 0 {
                for i in 0..=k {
                    if image_idx[k - 1][x.faces[k][i][s]] != y.faces[k][i][fs] {
                        return Ok(false);
                    }
                }
            }
            if k < x.dim_bound {
                for j in 0..=k {
                    if image_idx[k + 1][x.degeneracies[k][j][s]] != y.degeneracies[k][j][fs] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
