//! Commutative monoids with the capability flags the horn solvers dispatch on.
//!
//! Elements of every instance are carried as arbitrary-precision integers:
//! the value itself for `ℕ` and `ℤ`, a residue for `ℤ/m`, `0` for the trivial
//! monoid and a row index for table monoids. An [`Elem`] only has meaning
//! relative to the [`Monoid`] that produced it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(BigInt);

impl Elem {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
}

impl From<i64> for Elem {
    fn from(v: i64) -> Self {
        Elem(BigInt::from(v))
    }
}

impl From<i32> for Elem {
    fn from(v: i32) -> Self {
        Elem(BigInt::from(v))
    }
}

impl From<u64> for Elem {
    fn from(v: u64) -> Self {
        Elem(BigInt::from(v))
    }
}

impl From<BigInt> for Elem {
    fn from(v: BigInt) -> Self {
        Elem(v)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Why a Cayley table was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableViolation {
    #[error("the element list is empty")]
    Empty,
    #[error("element name {0:?} appears twice")]
    DuplicateName(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, expected: usize, found: usize },
    #[error("entry {entry} at ({row}, {col}) is not an element index")]
    EntryOutOfRange { row: usize, col: usize, entry: usize },
    #[error("not associative: ({a}{b}){c} != {a}({b}{c})", a = .0, b = .1, c = .2)]
    NotAssociative(String, String, String),
    #[error("not commutative: {0}{1} != {1}{0}")]
    NotCommutative(String, String),
    #[error("no identity element")]
    NoIdentity,
}

impl From<TableViolation> for Error {
    fn from(v: TableViolation) -> Self {
        Error::InvalidTable(v.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    /// Elements can be enumerated.
    pub finite: bool,
    /// Every element has an inverse.
    pub group: bool,
    /// `ℕ`-like: cancellative, conical, with partial subtraction and an order.
    pub free_natural: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Table {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Nat,
    Int,
    Cyclic(u64),
    Trivial,
    Table(Table),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    kind: Kind,
}

impl Monoid {
    /// `(ℕ, +, 0)`.
    pub fn nat() -> Self {
        Self { kind: Kind::Nat }
    }

    /// `(ℤ, +, 0)`.
    pub fn int_group() -> Self {
        Self { kind: Kind::Int }
    }

    /// `ℤ/m`; `m` must be positive.
    pub fn cyclic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTable("cyclic modulus must be positive".to_string()));
        }
        Ok(Self { kind: Kind::Cyclic(m) })
    }

    pub fn trivial() -> Self {
        Self { kind: Kind::Trivial }
    }

    /// `{0, 1}` under saturating addition (logical or).
    pub fn boolean() -> Self {
        Self::from_table(alloc::vec!["0".into(), "1".into()], alloc::vec![alloc::vec![0, 1], alloc::vec![1, 1]])
            .expect("boolean table is a commutative monoid")
            .with_name("Bool")
    }

    /// A finite monoid from its Cayley table: `table[a][b]` is the index of
    /// `a ⊕ b`. Associativity, commutativity and the identity law are checked
    /// exhaustively.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> core::result::Result<Self, TableViolation> {
        let n = names.len();
        if n == 0 {
            return Err(TableViolation::Empty);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(TableViolation::DuplicateName(name.clone()));
            }
        }
        if table.len() != n {
            return Err(TableViolation::NotSquare { row: table.len().min(n), expected: n, found: table.len() });
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(TableViolation::NotSquare { row, expected: n, found: entries.len() });
            }
            if let Some((col, &entry)) = entries.iter().enumerate().find(|(_, &e)| e >= n) {
                return Err(TableViolation::EntryOutOfRange { row, col, entry });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if table[a][b] != table[b][a] {
                    return Err(TableViolation::NotCommutative(names[a].clone(), names[b].clone()));
                }
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(TableViolation::NotAssociative(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x)).ok_or(TableViolation::NoIdentity)?;
        let inverses = (0..n).map(|a| (0..n).find(|&b| table[a][b] == identity)).collect::<Option<Vec<_>>>();
        Ok(Self { kind: Kind::Table(Table { name: "M".to_string(), names, table, identity, inverses }) })
    }

    /// Renames a table monoid; other instances keep their fixed names.
    pub fn with_name(mut self, name: &str) -> Self {
        if let Kind::Table(t) = &mut self.kind {
            t.name = name.to_string();
        }
        self
    }

    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Nat => "ℕ".to_string(),
            Kind::Int => "ℤ".to_string(),
            Kind::Cyclic(m) => format!("ℤ/{m}"),
            Kind::Trivial => "1".to_string(),
            Kind::Table(t) => t.name.clone(),
        }
    }

    pub fn capabilities(&self) -> Capabilities {
        match &self.kind {
            Kind::Nat => Capabilities { finite: false, group: false, free_natural: true },
            Kind::Int => Capabilities { finite: false, group: true, free_natural: false },
            Kind::Cyclic(m) => Capabilities { finite: true, group: true, free_natural: *m == 1 },
            Kind::Trivial => Capabilities { finite: true, group: true, free_natural: true },
            Kind::Table(t) => Capabilities { finite: true, group: t.inverses.is_some(), free_natural: t.names.len() == 1 },
        }
    }

    /// Whether elements are named by a Cayley table rather than integers.
    pub fn is_table(&self) -> bool {
        matches!(self.kind, Kind::Table(_))
    }

    pub fn is_finite(&self) -> bool {
        self.capabilities().finite
    }

    pub fn is_group(&self) -> bool {
        self.capabilities().group
    }

    pub fn is_free_natural(&self) -> bool {
        self.capabilities().free_natural
    }

    pub fn identity(&self) -> Elem {
        match &self.kind {
            Kind::Table(t) => Elem::from(t.identity as u64),
            _ => Elem(BigInt::zero()),
        }
    }

    pub fn is_identity(&self, a: &Elem) -> bool {
        *a == self.identity()
    }

    pub fn contains(&self, a: &Elem) -> bool {
        let v = &a.0;
        match &self.kind {
            Kind::Nat => !v.is_negative(),
            Kind::Int => true,
            Kind::Cyclic(m) => !v.is_negative() && *v < BigInt::from(*m),
            Kind::Trivial => v.is_zero(),
            Kind::Table(t) => !v.is_negative() && *v < BigInt::from(t.names.len()),
        }
    }

    /// Errors unless `a` belongs to this monoid.
    pub fn check(&self, a: &Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ForeignElement { element: a.to_string(), monoid: self.name() })
        }
    }

    pub fn op(&self, a: &Elem, b: &Elem) -> Elem {
        match &self.kind {
            Kind::Nat | Kind::Int => Elem(&a.0 + &b.0),
            Kind::Cyclic(m) => Elem((&a.0 + &b.0) % BigInt::from(*m)),
            Kind::Trivial => Elem(BigInt::zero()),
            Kind::Table(t) => Elem::from(t.table[index(a)][index(b)] as u64),
        }
    }

    /// `⊕` over an iterator; the empty sum is the identity.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Elem>) -> Elem {
        items.into_iter().fold(self.identity(), |acc, x| self.op(&acc, x))
    }

    /// The inverse of `a`, if it has one.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match &self.kind {
            Kind::Nat => a.0.is_zero().then(|| a.clone()),
            Kind::Int => Some(Elem(-&a.0)),
            Kind::Cyclic(m) => {
                let m = BigInt::from(*m);
                Some(Elem((&m - &a.0) % &m))
            }
            Kind::Trivial => Some(a.clone()),
            Kind::Table(t) => {
                let a = index(a);
                (0..t.names.len()).find(|&b| t.table[a][b] == t.identity).map(|b| Elem::from(b as u64))
            }
        }
    }

    /// `a ⊖ b` for `ℕ`-like monoids: the unique `x` with `x ⊕ b = a`, when `b ≤ a`.
    pub fn checked_sub(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        match &self.kind {
            Kind::Nat => (b.0 <= a.0).then(|| Elem(&a.0 - &b.0)),
            Kind::Trivial => Some(self.identity()),
            Kind::Cyclic(1) => Some(self.identity()),
            Kind::Table(t) if t.names.len() == 1 => Some(self.identity()),
            _ => None,
        }
    }

    /// `k · a`. Negative `k` needs an inverse of `a`.
    pub fn times(&self, k: i64, a: &Elem) -> Option<Elem> {
        let base = if k < 0 { self.inverse(a)? } else { a.clone() };
        let mut k = k.unsigned_abs();
        match &self.kind {
            Kind::Nat | Kind::Int => Some(Elem(base.0 * BigInt::from(k))),
            Kind::Cyclic(m) => Some(Elem((base.0 * BigInt::from(k)) % BigInt::from(*m))),
            _ => {
                let mut acc = self.identity();
                let mut pow = base;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = self.op(&acc, &pow);
                    }
                    pow = self.op(&pow, &pow);
                    k >>= 1;
                }
                Some(acc)
            }
        }
    }

    /// Some `x` with `d · x = c`, for groups.
    pub fn solve_multiple(&self, d: i64, c: &Elem) -> Result<Option<Elem>> {
        if !self.is_group() {
            return Err(Error::NotAGroup { monoid: self.name() });
        }
        if d == 1 {
            return Ok(Some(c.clone()));
        }
        if d == -1 {
            return Ok(self.inverse(c));
        }
        match &self.kind {
            Kind::Int => {
                let d = BigInt::from(d);
                if d.is_zero() {
                    return Ok(c.0.is_zero().then(|| self.identity()));
                }
                Ok((&c.0 % &d).is_zero().then(|| Elem(&c.0 / &d)))
            }
            _ => {
                let all = self.elements().ok_or_else(|| Error::Undecidable(format!("cannot divide in {}", self.name())))?;
                Ok(all.into_iter().find(|x| self.times(d, x).as_ref() == Some(c)))
            }
        }
    }

    /// Number of elements, for finite monoids.
    pub fn order(&self) -> Option<usize> {
        match &self.kind {
            Kind::Nat | Kind::Int => None,
            Kind::Cyclic(m) => usize::try_from(*m).ok(),
            Kind::Trivial => Some(1),
            Kind::Table(t) => Some(t.names.len()),
        }
    }

    /// All elements in canonical order, for finite monoids.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        let n = self.order()?;
        Some((0..n as u64).map(Elem::from).collect())
    }

    /// The elements of magnitude at most `bound`: `0..=B` for `ℕ`,
    /// `-B..=B` for `ℤ`, everything for finite monoids.
    pub fn bounded_elements(&self, bound: u64) -> Vec<Elem> {
        match &self.kind {
            Kind::Nat => (0..=bound).map(Elem::from).collect(),
            Kind::Int => {
                let b = bound as i64;
                let mut out: Vec<Elem> = (0..=b).map(Elem::from).collect();
                out.extend((1..=b).map(|v| Elem::from(-v)));
                out
            }
            _ => self.elements().unwrap(),
        }
    }

    /// Solves `a ⊕ x = b`. Groups give `a⁻¹ ⊕ b`; `ℕ`-like monoids give
    /// `b ⊖ a`; other finite monoids give the first solution in canonical
    /// order.
    pub fn solve_value(&self, a: &Elem, b: &Elem) -> Result<Option<Elem>> {
        let caps = self.capabilities();
        if caps.group {
            let inv = self.inverse(a).ok_or_else(|| Error::Internal(format!("{a} has no inverse")))?;
            Ok(Some(self.op(&inv, b)))
        } else if caps.free_natural {
            Ok(self.checked_sub(b, a))
        } else if caps.finite {
            Ok(self.elements().unwrap().into_iter().find(|x| self.op(a, x) == *b))
        } else {
            Err(Error::Undecidable(format!("cannot solve a ⊕ x = b in {}", self.name())))
        }
    }

    /// Every solution of `a ⊕ x = b`, in canonical order. Needs a finite,
    /// group or `ℕ`-like monoid (the latter two have at most one solution).
    pub fn solve_value_all(&self, a: &Elem, b: &Elem) -> Result<Vec<Elem>> {
        match self.elements() {
            Some(all) => Ok(all.into_iter().filter(|x| self.op(a, x) == *b).collect()),
            None => Ok(self.solve_value(a, b)?.into_iter().collect()),
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = || Error::ParseElement { input: s.to_string(), monoid: self.name() };
        let e = match &self.kind {
            Kind::Table(t) => {
                let i = t.names.iter().position(|n| n == s).ok_or_else(bad)?;
                Elem::from(i as u64)
            }
            _ => Elem(s.parse::<BigInt>().map_err(|_| bad())?),
        };
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(bad())
        }
    }

    pub fn format_element(&self, a: &Elem) -> String {
        match &self.kind {
            Kind::Table(t) => t.names.get(index(a)).cloned().unwrap_or_else(|| format!("?{a}")),
            _ => a.to_string(),
        }
    }

    /// Exhaustive law check for finite monoids: identity, commutativity,
    /// associativity, closure. Returns the first offending triple.
    pub fn check_laws(&self) -> core::result::Result<(), (Elem, Elem, Elem)> {
        let Some(all) = self.elements() else { return Ok(()) };
        let e = self.identity();
        for a in &all {
            if self.op(&e, a) != *a {
                return Err((e.clone(), a.clone(), e.clone()));
            }
            for b in &all {
                if self.op(a, b) != self.op(b, a) || !self.contains(&self.op(a, b)) {
                    return Err((a.clone(), b.clone(), e.clone()));
                }
                for c in &all {
                    if self.op(&self.op(a, b), c) != self.op(a, &self.op(b, c)) {
                        return Err((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn index(a: &Elem) -> usize {
    match a.0.to_biguint() {
        Some(v) if a.0.sign() != Sign::Minus => v.to_usize().unwrap_or(usize::MAX),
        _ => usize::MAX,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn e(v: i64) -> Elem {
        Elem::from(v)
    }

    fn finite_instances() -> Vec<Monoid> {
        vec![
            Monoid::trivial(),
            Monoid::cyclic(1).unwrap(),
            Monoid::cyclic(2).unwrap(),
            Monoid::cyclic(4).unwrap(),
            Monoid::cyclic(6).unwrap(),
            Monoid::boolean(),
            // {0, 1, 2} under truncated addition (2 absorbs).
            Monoid::from_table(
                vec!["0".into(), "1".into(), "2".into()],
                vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
            )
            .unwrap(),
        ]
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Monoid::nat().op(&e(1), &e(3)), e(4));
        assert_eq!(Monoid::cyclic(4).unwrap().op(&e(3), &e(3)), e(2));
        let b = Monoid::boolean();
        assert!(!b.is_group());
        assert_eq!(b.op(&e(1), &e(1)), e(1));
        assert!(Monoid::cyclic(0).is_err());
    }

    #[test]
    fn solve_value_examples() {
        assert_eq!(Monoid::nat().solve_value(&e(3), &e(1)).unwrap(), None);
        assert_eq!(Monoid::nat().solve_value(&e(3), &e(7)).unwrap(), Some(e(4)));
        assert_eq!(Monoid::int_group().solve_value(&e(3), &e(1)).unwrap(), Some(e(-2)));
        let b = Monoid::boolean();
        assert_eq!(b.solve_value(&e(1), &e(0)).unwrap(), None);
        assert_eq!(b.solve_value(&e(1), &e(1)).unwrap(), Some(e(0)));
        assert_eq!(b.solve_value_all(&e(1), &e(1)).unwrap(), vec![e(0), e(1)]);
    }

    #[test]
    fn table_rejections_name_the_violation() {
        let names = || vec!["x".to_string(), "y".to_string()];
        // Left projection: associative but not commutative.
        let err = Monoid::from_table(names(), vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, TableViolation::NotCommutative(..)));
        // x⊕x = y, x⊕y = x, y⊕y = x: commutative, not associative.
        let err = Monoid::from_table(names(), vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, TableViolation::NotAssociative("x".into(), "x".into(), "y".into()));
        // Constant table: no identity.
        let err = Monoid::from_table(names(), vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, TableViolation::NoIdentity);
        let err = Monoid::from_table(names(), vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(err, TableViolation::NotSquare { .. }));
        let err = Monoid::from_table(names(), vec![vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, TableViolation::EntryOutOfRange { entry: 2, .. }));
    }

    #[test]
    fn finite_laws_hold_exhaustively() {
        for m in finite_instances() {
            assert_eq!(m.check_laws(), Ok(()), "{}", m.name());
        }
    }

    #[test]
    fn group_inverses_and_solve_soundness() {
        for m in finite_instances() {
            let all = m.elements().unwrap();
            for a in &all {
                if m.is_group() {
                    assert_eq!(m.op(a, &m.inverse(a).unwrap()), m.identity());
                }
                for b in &all {
                    let brute: Vec<_> = all.iter().filter(|x| m.op(a, x) == *b).cloned().collect();
                    match m.solve_value(a, b).unwrap() {
                        Some(x) => {
                            assert_eq!(m.op(a, &x), *b);
                            assert_eq!(Some(&x), brute.first());
                        }
                        None => {
                            assert!(brute.is_empty());
                            assert!(!m.is_group());
                        }
                    }
                    assert_eq!(m.solve_value_all(a, b).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn table_group_detection() {
        let z3 = Monoid::from_table(
            vec!["e".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap();
        assert!(z3.is_group());
        assert_eq!(z3.format_element(&z3.inverse(&e(1)).unwrap()), "b");
        assert_eq!(z3.parse_element("a").unwrap(), e(1));
        assert!(z3.parse_element("c").is_err());
        assert_eq!(z3.times(-1, &e(1)), Some(e(2)));
        assert_eq!(z3.times(4, &e(1)), Some(e(1)));
    }

    #[test]
    fn division_in_groups() {
        let z = Monoid::int_group();
        assert_eq!(z.solve_multiple(2, &e(6)).unwrap(), Some(e(3)));
        assert_eq!(z.solve_multiple(-3, &e(6)).unwrap(), Some(e(-2)));
        assert_eq!(z.solve_multiple(2, &e(5)).unwrap(), None);
        let z6 = Monoid::cyclic(6).unwrap();
        assert_eq!(z6.solve_multiple(2, &e(4)).unwrap(), Some(e(2)));
        assert_eq!(z6.solve_multiple(2, &e(3)).unwrap(), None);
        assert!(Monoid::nat().solve_multiple(2, &e(4)).is_err());
    }

    #[test]
    fn parsing_respects_membership() {
        assert!(Monoid::nat().parse_element("-1").is_err());
        assert_eq!(Monoid::int_group().parse_element("-7").unwrap(), e(-7));
        assert!(Monoid::cyclic(4).unwrap().parse_element("4").is_err());
        assert_eq!(Monoid::trivial().parse_element("0").unwrap(), e(0));
        assert!(Monoid::nat().parse_element("x").is_err());
    }

    #[test]
    fn times_matches_repeated_addition() {
        let m = Monoid::cyclic(6).unwrap();
        for k in -7i64..=7 {
            let mut acc = e(0);
            for _ in 0..k.unsigned_abs() {
                acc = m.op(&acc, &e(if k < 0 { 1 } else { 5 }));
            }
            // 5 is the inverse of 1 in ℤ/6, so k·5 == (−k)·1.
            assert_eq!(m.times(k, &e(5)), Some(acc), "k={k}");
        }
        assert_eq!(Monoid::nat().times(-1, &e(2)), None);
    }

    fn big() -> impl Strategy<Value = i64> {
        -1_000_000_000_000i64..1_000_000_000_000
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn integer_laws(a in big(), b in big(), c in big()) {
            let m = Monoid::int_group();
            let (a, b, c) = (e(a), e(b), e(c));
            prop_assert_eq!(m.op(&m.op(&a, &b), &c), m.op(&a, &m.op(&b, &c)));
            prop_assert_eq!(m.op(&a, &b), m.op(&b, &a));
            prop_assert_eq!(m.op(&a, &m.identity()), a.clone());
            prop_assert_eq!(m.op(&a, &m.inverse(&a).unwrap()), m.identity());
        }

        #[test]
        fn natural_laws(a in 0i64..1_000_000_000_000, b in 0i64..1_000_000_000_000, c in 0i64..1_000_000_000_000) {
            let m = Monoid::nat();
            let (a, b, c) = (e(a), e(b), e(c));
            prop_assert_eq!(m.op(&m.op(&a, &b), &c), m.op(&a, &m.op(&b, &c)));
            prop_assert_eq!(m.op(&a, &b), m.op(&b, &a));
            prop_assert_eq!(m.op(&a, &m.identity()), a.clone());
            if m.op(&a, &b) == m.identity() {
                prop_assert!(m.is_identity(&a) && m.is_identity(&b));
            }
            match m.checked_sub(&a, &b) {
                Some(d) => prop_assert_eq!(m.op(&d, &b), a.clone()),
                None => prop_assert!(b.value() > a.value()),
            }
            match m.solve_value(&a, &b).unwrap() {
                Some(x) => prop_assert_eq!(m.op(&a, &x), b.clone()),
                None => prop_assert!(b.value() < a.value()),
            }
        }

        #[test]
        fn no_overflow_near_i64_limits(a in (i64::MAX - 1000)..i64::MAX, b in (i64::MAX - 1000)..i64::MAX) {
            let m = Monoid::nat();
            let s = m.op(&e(a), &e(b));
            prop_assert!(s.to_i64().is_none());
            prop_assert_eq!(m.checked_sub(&s, &e(b)), Some(e(a)));
        }
    }
}
