//! The `--monoid` flag: `nat`, `int`, `cyclic:m`, `trivial`, `bool` or
//! `table:<path>`.

use std::path::Path;

use emspace_core::Monoid;

use crate::table;
use crate::{Error, Result};

pub fn parse_monoid(spec: &str) -> Result<Monoid> {
    let spec = spec.trim();
    match spec {
        "nat" | "N" => return Ok(Monoid::nat()),
        "int" | "Z" => return Ok(Monoid::int_group()),
        "trivial" => return Ok(Monoid::trivial()),
        "bool" => return Ok(Monoid::boolean()),
        _ => {}
    }
    if let Some(m) = spec.strip_prefix("cyclic:") {
        let m: u64 = m.parse().map_err(|_| Error::MonoidSpec(spec.to_string()))?;
        return Ok(Monoid::cyclic(m)?);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        return table::load(Path::new(path));
    }
    Err(Error::MonoidSpec(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specs() {
        assert_eq!(parse_monoid("nat").unwrap().name(), "ℕ");
        assert_eq!(parse_monoid("int").unwrap().name(), "ℤ");
        assert_eq!(parse_monoid("cyclic:6").unwrap().name(), "ℤ/6");
        assert_eq!(parse_monoid("trivial").unwrap().order(), Some(1));
        assert!(!parse_monoid("bool").unwrap().is_group());
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(parse_monoid("rat"), Err(Error::MonoidSpec(_))));
        assert!(matches!(parse_monoid("cyclic:x"), Err(Error::MonoidSpec(_))));
        assert!(matches!(parse_monoid("cyclic:0"), Err(Error::Core(_))));
        assert!(matches!(parse_monoid("table:/no/such/file"), Err(Error::Table { .. })));
    }
}
