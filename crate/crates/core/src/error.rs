use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose a map into [{left_cod}] with a map out of [{right_dom}]")]
    CompositionMismatch { left_cod: usize, right_dom: usize },

    #[error("values {values:?} do not form a monotone map into [{cod}]")]
    NotMonotone { values: alloc::vec::Vec<usize>, cod: usize },

    #[error("{what} index {index} out of range 0..={max}")]
    IndexOutOfRange { what: &'static str, index: usize, max: usize },

    #[error("level {level} outside the truncation 0..={bound}")]
    LevelOutOfRange { level: usize, bound: usize },

    #[error("simplex {simplex} is not present at level {level}")]
    UnknownSimplex { level: usize, simplex: String },

    #[error("level {level} simplex needs {expected} coordinates, got {found}")]
    CoordinateCount { level: usize, expected: usize, found: usize },

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("element {element} does not belong to {monoid}")]
    ForeignElement { element: String, monoid: String },

    #[error("cannot parse {input:?} as an element of {monoid}")]
    ParseElement { input: String, monoid: String },

    #[error("invalid monoid table: {0}")]
    InvalidTable(String),

    #[error("undecidable here: {0}")]
    Undecidable(String),

    #[error("{monoid} is not a group")]
    NotAGroup { monoid: String },

    #[error("level {level} of the target cannot be enumerated")]
    NotEnumerable { level: usize },

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),

    #[error("invalid horn: {0}")]
    InvalidHorn(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}
