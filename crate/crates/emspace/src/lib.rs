//! The std side of `emspace-core`: finite monoid table files, simplex and
//! face literals, certificate JSON, and the `emspace` command line.

pub mod cli;
mod error;
pub mod json;
pub mod literal;
pub mod spec;
pub mod table;

pub use error::{Error, Result};
