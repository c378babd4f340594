use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::{Error, Result};

/// Resource limits. Every field has a default and can be overridden from a
/// JSON file (missing keys keep their defaults).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Largest field size `q`.
    pub field_size: u64,
    /// Largest ambient dimension of a coordinate space.
    pub ambient_dim: usize,
    /// Largest number of cosets Todd–Coxeter may define.
    pub coset: usize,
    /// Largest group order accepted by constructors.
    pub group_order: usize,
    /// Largest group order for which group-algebra invariants are computed.
    pub algebra_order: usize,
    /// Largest number of elements enumerated in a kernel-size or
    /// power-span computation.
    pub enumeration: u64,
    /// Largest number of elementary abelian subgroups visited.
    pub elem_abelian: usize,
    /// Largest group order for the elementary abelian direct factor search.
    pub direct_factor_order: usize,
    /// Largest number of generator assignments tried by isomorphism search.
    pub iso_search: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            field_size: 81,
            ambient_dim: 2187,
            coset: 100_000,
            group_order: 2187,
            algebra_order: 256,
            enumeration: 1 << 24,
            elem_abelian: 1_000_000,
            direct_factor_order: 64,
            iso_search: 10_000_000,
        }
    }
}

impl Caps {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_override_keeps_defaults() {
        let caps = Caps::from_json(r#"{"coset": 10}"#).unwrap();
        assert_eq!(caps.coset, 10);
        assert_eq!(caps.field_size, 81);
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(Caps::from_json(r#"{"cosets": 10}"#).is_err());
    }
}
