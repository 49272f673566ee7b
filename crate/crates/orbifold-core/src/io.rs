use thiserror::Error;

use crate::types::Orbifold2;

/// Failure to read an orbifold document.
#[derive(Debug, Error)]
#[error("cannot parse orbifold document: {0}")]
pub struct ParseError(#[from] serde_json::Error);

impl Orbifold2 {
    /// Reads the JSON document form
    /// `{"orientable", "genus", "cone_points", "circles": [[{"kind", "corner"?}]]}`.
    pub fn from_json(text: &str) -> Result<Orbifold2, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline; `from_json` then `to_json`
    /// reproduces the same bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("orbifold serializes");
        s.push('\n');
        s
    }
}
