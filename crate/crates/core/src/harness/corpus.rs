//! JSON corpus of named `(I, J)` pairs.
//!
//! ```json
//! { "entries": [
//!   { "name": "triangle", "ring": ["x", "y", "z"],
//!     "I": ["x*y", "y*z", "z*x"], "J": ["x", "y", "z"],
//!     "expected": { "height": 2, "equigenerated": true } }
//! ] }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::parse::{parse_generators, IdealSpec};
use crate::error::{Error, Result};
use crate::monomial::RingContext;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Hypothesis values the engine must reproduce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equigenerated: Option<bool>,
}

impl Corpus {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("corpus: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

impl CorpusEntry {
    pub fn to_spec(&self) -> Result<IdealSpec> {
        let at = |e: Error| Error::Parse(format!("entry `{}`: {e}", self.name));
        let ring = RingContext::new(self.ring.iter().cloned()).map_err(at)?;
        if self.i.is_empty() || self.j.is_empty() {
            return Err(at(Error::Parse("I and J need at least one generator".into())));
        }
        let i = parse_generators(&self.i.join(","), &ring).map_err(at)?;
        let j = parse_generators(&self.j.join(","), &ring).map_err(at)?;
        Ok(IdealSpec { ring, i, j: Some(j) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries() {
        let corpus = Corpus::from_json(
            r#"{"entries": [{"name": "t", "ring": ["x","y","z"], "I": ["x*y","y*z","z*x"],
                "J": ["x","y","z"], "expected": {"height": 2}}]}"#,
        )
        .unwrap();
        let entry = &corpus.entries[0];
        assert_eq!(entry.expected.unwrap().height, Some(2));
        assert_eq!(entry.expected.unwrap().equigenerated, None);
        let spec = entry.to_spec().unwrap();
        assert_eq!(spec.i.gens().len(), 3);
    }

    #[test]
    fn bad_entries() {
        assert!(Corpus::from_json("{").is_err());
        let corpus = Corpus::from_json(
            r#"{"entries": [{"name": "t", "ring": ["x"], "I": ["y"], "J": ["x"]}]}"#,
        )
        .unwrap();
        let err = corpus.entries[0].to_spec().unwrap_err();
        assert!(err.to_string().contains("entry `t`"));
        let corpus =
            Corpus::from_json(r#"{"entries": [{"name": "e", "ring": ["x"], "I": [], "J": ["x"]}]}"#)
                .unwrap();
        assert!(corpus.entries[0].to_spec().is_err());
    }
}
