//! JSON form of sign systems: `{"ground": [...], "covectors": ["+-0", ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::{ElementSet, Sign, SignVector};
use crate::system::SignSystem;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    ground: Vec<String>,
    covectors: Vec<String>,
}

pub(crate) fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// 1-based line and column of byte offset `at` in `text`.
fn position(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
        + 1;
    (line, column)
}

/// Byte offset of the `index`-th string literal after the `covectors` key,
/// pointing just past its opening quote.
fn locate_covector(text: &str, index: usize) -> Option<usize> {
    let key = text.find("\"covectors\"")?;
    let mut i = key + "\"covectors\"".len();
    let bytes = text.as_bytes();
    let mut seen = 0;
    while i < bytes.len() {
        if bytes[i] == b'"' {
            if seen == index {
                return Some(i + 1);
            }
            seen += 1;
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                if bytes[i] == b'\\' {
                    i += 1;
                }
                i += 1;
            }
        }
        i += 1;
    }
    None
}

impl SignSystem {
    pub fn from_json(text: &str) -> Result<SignSystem> {
        let file: SystemFile = serde_json::from_str(text).map_err(parse_error)?;
        let n = file.ground.len();
        let mut covectors = Vec::with_capacity(file.covectors.len());
        for (i, s) in file.covectors.iter().enumerate() {
            let start = locate_covector(text, i);
            let at = |k: usize| {
                start.map_or((0, 0), |st| {
                    let off = s.char_indices().nth(k).map_or(s.len(), |(b, _)| b);
                    position(text, st + off)
                })
            };
            if let Some((k, c)) = s
                .chars()
                .enumerate()
                .find(|(_, c)| Sign::from_char(*c).is_none())
            {
                let (line, column) = at(k);
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("covector {i}: invalid sign character {c:?}"),
                });
            }
            let len = s.chars().count();
            if len != n {
                let (line, column) = at(len.min(n));
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("covector {i}: length {len}, ground set has {n} elements"),
                });
            }
            covectors.push(SignVector::parse(s)?);
        }
        SignSystem::new(file.ground, covectors)
    }

    /// Ground labels and covectors in ground order; deleted elements vanish.
    pub fn to_json(&self) -> String {
        let file = SystemFile {
            ground: self.ground_labels().iter().map(|s| s.to_string()).collect(),
            covectors: self
                .covectors()
                .iter()
                .map(|x| self.format_vector(x))
                .collect(),
        };
        serde_json::to_string_pretty(&file).unwrap_or_default()
    }

    /// Re-indexes the system onto its ground set alone.
    pub fn compacted(&self) -> SignSystem {
        let ground = self.ground();
        let labels: Vec<String> = ground.iter().map(|e| self.label(e).to_string()).collect();
        let covectors = self
            .covectors()
            .iter()
            .map(|x| SignVector::from_signs(&ground.iter().map(|e| x.get(e)).collect::<Vec<_>>()))
            .collect();
        SignSystem::from_parts(labels.into(), ElementSet::full(ground.len()), covectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn round_trip() {
        for name in crate::catalog::NAMES {
            let m = catalog(name).unwrap();
            assert_eq!(SignSystem::from_json(&m.to_json()).unwrap(), m);
        }
    }

    #[test]
    fn deleted_elements_are_not_written() {
        let m = catalog("om-hexagon")
            .unwrap()
            .delete(ElementSet::singleton(1))
            .unwrap();
        let back = SignSystem::from_json(&m.to_json()).unwrap();
        assert_eq!(back.ground_labels(), ["1", "3"]);
        assert_eq!(back, m.compacted());
        assert_eq!(back, m);
    }

    #[test]
    fn bad_sign_reports_its_position() {
        let text = "{\n  \"ground\": [\"1\", \"2\"],\n  \"covectors\": [\"00\", \"+x\"]\n}";
        match SignSystem::from_json(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 25)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn length_mismatch_reports_its_position() {
        let text = r#"{"ground": ["1", "2"], "covectors": ["+++"]}"#;
        match SignSystem::from_json(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!((line, column), (1, 41));
                assert!(message.contains("length 3"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_come_from_the_json_parser() {
        assert!(matches!(
            SignSystem::from_json("{\"ground\": [}"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SignSystem::from_json(r#"{"ground": [], "covectors": [], "extra": 1}"#),
            Err(Error::Parse { .. })
        ));
    }
}
