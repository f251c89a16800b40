//! The simplex category `Δ`: order-preserving maps `[m] → [n]`.
//!
//! Maps are plain immutable values. Lists of maps are always returned in
//! lexicographic order of their value sequences, and every coordinate vector
//! elsewhere in the crate indexes in that order.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An order-preserving map `[dom] → [cod]`, stored as its value sequence
/// `α(0) α(1) … α(dom)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    // Field order matters for the derived `Ord`: maps with equal codomain
    // compare lexicographically by values.
    cod: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    /// Builds a map from its values, checking monotonicity and range.
    pub fn new(values: Vec<usize>, cod: usize) -> Result<Self> {
        if values.is_empty()
            || values.windows(2).any(|w| w[0] > w[1])
            || values.iter().any(|&v| v > cod)
        {
            return Err(Error::NotMonotone { values, cod });
        }
        Ok(Self { cod, values })
    }

    /// Parses the digit-string form (`"0012"`), or the comma-separated form
    /// used when the codomain exceeds `[9]`.
    pub fn parse(s: &str, cod: usize) -> Result<Self> {
        let bad = || Error::NotMonotone { values: Vec::new(), cod };
        let values = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(values, cod)
    }

    pub fn identity(n: usize) -> Self {
        Self { cod: n, values: (0..=n).collect() }
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_surjective(&self) -> bool {
        // Monotone: surjective iff it starts at 0, ends at cod and never skips.
        self.values[0] == 0
            && *self.values.last().unwrap() == self.cod
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Number of distinct values taken.
    pub fn image_len(&self) -> usize {
        1 + self.values.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// Whether `v` lies in the image.
    pub fn hits(&self, v: usize) -> bool {
        self.values.binary_search(&v).is_ok()
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cod <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// `f` followed by `g`, i.e. `g ∘ f` in the usual notation.
pub fn compose(f: &MonotoneMap, g: &MonotoneMap) -> Result<MonotoneMap> {
    if f.cod != g.dom() {
        return Err(Error::CompositionMismatch { left_cod: f.cod, right_dom: g.dom() });
    }
    Ok(MonotoneMap { cod: g.cod, values: f.values.iter().map(|&v| g.values[v]).collect() })
}

/// The coface `δᵢ : [n−1] → [n]`, the injection missing `i`.
pub fn coface(n: usize, i: usize) -> Result<MonotoneMap> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { what: "coface dimension", index: 0, max: usize::MAX });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { what: "coface", index: i, max: n });
    }
    Ok(MonotoneMap { cod: n, values: (0..=n).filter(|&v| v != i).collect() })
}

/// The codegeneracy `σⱼ : [n+1] → [n]`, hitting `j` twice.
pub fn codegeneracy(n: usize, j: usize) -> Result<MonotoneMap> {
    if j > n {
        return Err(Error::IndexOutOfRange { what: "codegeneracy", index: j, max: n });
    }
    let values = (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect();
    Ok(MonotoneMap { cod: n, values })
}

/// Unique factorization `f = mono ∘ epi` with `epi` surjective onto
/// `[|image| − 1]` and `mono` strictly increasing.
pub fn epi_mono_factorize(f: &MonotoneMap) -> (MonotoneMap, MonotoneMap) {
    let mut image: Vec<usize> = Vec::with_capacity(f.values.len());
    let mut epi = Vec::with_capacity(f.values.len());
    for &v in &f.values {
        if image.last() != Some(&v) {
            image.push(v);
        }
        epi.push(image.len() - 1);
    }
    let top = image.len() - 1;
    (MonotoneMap { cod: top, values: epi }, MonotoneMap { cod: f.cod, values: image })
}

/// All monotone maps `[m] → [n]`, lexicographically. There are `C(m+n+1, n)`.
pub fn enumerate_monotone(m: usize, n: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::with_capacity(binomial(m + n + 1, n) as usize);
    let mut values = Vec::with_capacity(m + 1);
    fill_monotone(m + 1, n, 0, &mut values, &mut |vals| {
        out.push(MonotoneMap { cod: n, values: vals.to_vec() });
    });
    out
}

/// All monotone surjections `[m] → [n]`, lexicographically. There are `C(m, n)`.
pub fn enumerate_surjections(m: usize, n: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    if n > m {
        return out;
    }
    // A surjection is determined by the n positions where it steps up by one.
    let mut steps = Vec::with_capacity(n);
    choose(1, m, n, &mut steps, &mut |steps| {
        let mut values = Vec::with_capacity(m + 1);
        let mut cur = 0;
        for p in 0..=m {
            if steps.binary_search(&p).is_ok() {
                cur += 1;
            }
            values.push(cur);
        }
        out.push(MonotoneMap { cod: n, values });
    });
    // Earlier steps give lexicographically larger value sequences.
    out.reverse();
    out
}

fn fill_monotone(len: usize, n: usize, lo: usize, acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if acc.len() == len {
        emit(acc);
        return;
    }
    for v in lo..=n {
        acc.push(v);
        fill_monotone(len, n, v, acc, emit);
        acc.pop();
    }
}

/// k-subsets of `lo..=hi` in lexicographic order.
fn choose(lo: usize, hi: usize, k: usize, acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    let need = k - acc.len();
    let start = acc.last().map_or(lo, |&p| p + 1);
    let mut p = start;
    while p + need <= hi + 1 {
        acc.push(p);
        choose(lo, hi, k, acc, emit);
        acc.pop();
        p += 1;
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn map(s: &str, cod: usize) -> MonotoneMap {
        MonotoneMap::parse(s, cod).unwrap()
    }

    fn digits(maps: &[MonotoneMap]) -> Vec<alloc::string::String> {
        maps.iter().map(|m| m.to_string()).collect()
    }

    /// All sequences of length m+1 over 0..=n, filtered, in lexicographic order.
    fn brute_force(m: usize, n: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = (n + 1).pow(m as u32 + 1);
        for mut code in 0..total {
            let mut vals = vec![0; m + 1];
            for slot in vals.iter_mut().rev() {
                *slot = code % (n + 1);
                code /= n + 1;
            }
            if vals.windows(2).all(|w| w[0] <= w[1]) && keep(&vals) {
                out.push(vals);
            }
        }
        out
    }

    #[test]
    fn compose_examples() {
        let id2 = MonotoneMap::identity(2);
        assert_eq!(compose(&map("0012", 2), &id2).unwrap(), map("0012", 2));
        let d0 = coface(3, 0).unwrap();
        assert_eq!(compose(&d0, &map("0122", 2)).unwrap(), map("122", 2));
        let d1 = coface(3, 1).unwrap();
        assert_eq!(compose(&d1, &map("0112", 2)).unwrap(), map("012", 2));
    }

    #[test]
    fn compose_rejects_mismatch() {
        let err = compose(&map("012", 2), &map("0012", 2)).unwrap_err();
        assert_eq!(err, Error::CompositionMismatch { left_cod: 2, right_dom: 3 });
    }

    #[test]
    fn coface_and_codegeneracy_examples() {
        assert_eq!(coface(2, 1).unwrap().to_string(), "02");
        assert_eq!(coface(3, 0).unwrap().to_string(), "123");
        assert_eq!(coface(3, 3).unwrap().to_string(), "012");
        assert!(coface(2, 3).is_err());
        assert!(coface(0, 0).is_err());
        assert_eq!(codegeneracy(1, 0).unwrap().to_string(), "001");
        assert_eq!(codegeneracy(1, 1).unwrap().to_string(), "011");
        assert_eq!(codegeneracy(2, 1).unwrap().to_string(), "0112");
        assert!(codegeneracy(1, 2).is_err());
    }

    #[test]
    fn surjective_injective_examples() {
        let f = map("0012", 2);
        assert!(f.is_surjective() && !f.is_injective());
        assert!(!map("122", 2).is_surjective());
        let id = map("012", 2);
        assert!(id.is_surjective() && id.is_injective());
    }

    #[test]
    fn factorization_examples() {
        let f = map("0012", 2);
        assert_eq!(epi_mono_factorize(&f), (f.clone(), MonotoneMap::identity(2)));
        let (epi, mono) = epi_mono_factorize(&map("022", 2));
        assert_eq!((epi, mono), (map("011", 1), map("02", 2)));
        let id = MonotoneMap::identity(2);
        assert_eq!(epi_mono_factorize(&id), (id.clone(), id));
    }

    #[test]
    fn surjection_enumeration_examples() {
        assert_eq!(digits(&enumerate_surjections(3, 2)), ["0012", "0112", "0122"]);
        assert_eq!(digits(&enumerate_surjections(2, 2)), ["012"]);
        let expected: Vec<_> = brute_force(4, 2, |v| v[0] == 0 && v[4] == 2 && v.windows(2).all(|w| w[1] - w[0] <= 1))
            .into_iter()
            .map(|v| MonotoneMap::new(v, 2).unwrap())
            .collect();
        assert_eq!(digits(&expected), ["00012", "00112", "00122", "01112", "01122", "01222"]);
        assert_eq!(enumerate_surjections(4, 2), expected);
        assert!(enumerate_surjections(1, 2).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 0..=8 {
            for n in 0..=3 {
                let all = enumerate_monotone(m, n);
                let brute: Vec<_> = brute_force(m, n, |_| true);
                assert_eq!(all.iter().map(|f| f.values().to_vec()).collect::<Vec<_>>(), brute);
                assert_eq!(all.len() as u64, binomial(m + n + 1, n));
                let surj: Vec<_> = all.iter().filter(|f| f.is_surjective()).cloned().collect();
                assert_eq!(enumerate_surjections(m, n), surj);
                assert_eq!(surj.len() as u64, binomial(m, n));
            }
        }
    }

    #[test]
    fn cosimplicial_identities() {
        // δ_j ∘ δ_i = δ_i ∘ δ_{j-1} for i < j, as maps [n-1] → [n+1].
        for n in 1..=6 {
            for j in 1..=n + 1 {
                for i in 0..j {
                    let lhs = compose(&coface(n, i).unwrap(), &coface(n + 1, j).unwrap()).unwrap();
                    let rhs = compose(&coface(n, j - 1).unwrap(), &coface(n + 1, i).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn factorization_round_trip_and_uniqueness() {
        for m in 0..=5 {
            for n in 0..=5 {
                for f in enumerate_monotone(m, n) {
                    let (epi, mono) = epi_mono_factorize(&f);
                    assert!(epi.is_surjective() && mono.is_injective());
                    assert_eq!(compose(&epi, &mono).unwrap(), f);
                    let r = f.image_len() - 1;
                    let pairs = enumerate_surjections(m, r)
                        .into_iter()
                        .flat_map(|e| enumerate_monotone(r, n).into_iter().map(move |g| (e.clone(), g)))
                        .filter(|(e, g)| g.is_injective() && compose(e, g).unwrap() == f)
                        .count();
                    assert_eq!(pairs, 1);
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        let maps: Vec<Vec<Vec<MonotoneMap>>> =
            (0..=4).map(|a| (0..=4).map(|b| enumerate_monotone(a, b)).collect()).collect();
        for a in 0..=4 {
            for b in 0..=4 {
                for c in 0..=4 {
                    for d in 0..=4 {
                        for f in &maps[a][b] {
                            for g in &maps[b][c] {
                                let fg = compose(f, g).unwrap();
                                for h in &maps[c][d] {
                                    let l = compose(&fg, h).unwrap();
                                    let r = compose(f, &compose(g, h).unwrap()).unwrap();
                                    assert_eq!(l, r);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let wide = MonotoneMap::new(vec![0, 5, 11], 11).unwrap();
        assert_eq!(wide.to_string(), "0,5,11");
        assert_eq!(MonotoneMap::parse("0,5,11", 11).unwrap(), wide);
        assert!(MonotoneMap::parse("021", 2).is_err());
        assert!(MonotoneMap::parse("013", 2).is_err());
    }
}
