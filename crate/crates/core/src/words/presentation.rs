use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use super::{parse_word, Word};
use crate::{Error, Result};

/// Generators and relators; each relator is set equal to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    generators: Vec<String>,
    relators: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !valid_name(g) {
                return Err(Error::parse(0, format!("invalid generator name `{g}`")));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(m) = r.max_gen() {
                if m as usize >= generators.len() {
                    return Err(Error::UnknownGenerator(format!("#{m}")));
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Builds a presentation from generator names and relator strings in the
    /// word language of [`parse_word`].
    pub fn parse<S: AsRef<str>>(generators: &[S], relators: &[S]) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word(r.as_ref(), &gens))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, rels)
    }

    /// Reads `{"generators": [...], "relators": [...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(text)?;
        Self::parse(&file.generators, &file.relators)
    }

    pub fn to_json(&self) -> String {
        let file = PresentationFile {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.display(&self.generators))
                .collect(),
        };
        serde_json::to_string_pretty(&file).unwrap()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.generators)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Free product with `other` followed by commutator relators between the
    /// two generator sets, i.e. a presentation of the direct product.
    /// Clashing names from `other` get the suffix `_{tag}`.
    pub fn direct_product(&self, other: &Presentation, tag: usize) -> Result<Self> {
        let offset = self.generators.len() as u32;
        let mut gens = self.generators.clone();
        for g in &other.generators {
            let mut name = g.clone();
            while gens.contains(&name) {
                name = format!("{name}_{tag}");
            }
            gens.push(name);
        }
        let shift = |w: &Word| {
            Word::from_letters(w.letters().iter().map(|l| {
                let mut l = *l;
                l.gen += offset;
                l
            }))
        };
        let mut rels = self.relators.clone();
        rels.extend(other.relators.iter().map(shift));
        for i in 0..offset {
            for j in 0..other.generators.len() as u32 {
                rels.push(Word::commutator(&Word::gen(i), &Word::gen(offset + j)));
            }
        }
        Self::new(gens, rels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let text = r#"{"generators": ["a","b"], "relators": ["a^4", "b^2", "[b,a]*a^-2"]}"#;
        let p = Presentation::from_json(text).unwrap();
        assert_eq!(p.generators(), &["a", "b"]);
        assert_eq!(p.relators().len(), 3);
        let again = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            Presentation::parse(&["a", "a"], &[]),
            Err(Error::DuplicateGenerator("a".into()))
        );
        assert!(Presentation::parse(&["1a"], &[]).is_err());
        assert_eq!(
            Presentation::parse(&["a"], &["b"]),
            Err(Error::UnknownGenerator("b".into()))
        );
    }

    #[test]
    fn direct_product_renames() {
        let c2 = Presentation::parse(&["a"], &["a^2"]).unwrap();
        let p = c2.direct_product(&c2, 2).unwrap();
        assert_eq!(p.generators(), &["a", "a_2"]);
        assert_eq!(p.relators().len(), 3);
    }
}
