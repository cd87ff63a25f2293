//! Line-delimited melody files.
//!
//! One JSON object per line, with a `name` and exactly one of `pitches`
//! (integers, C4 = 0) or `note_names` (strings such as `"Bb3"`). Blank
//! lines and lines starting with `#` are skipped. See `docs/format.md`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::melody::{Melody, Pitch};
use crate::notation::parse_note;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MelodyRecord {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pitches: Option<Vec<Pitch>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note_names: Option<Vec<String>>,
}

impl MelodyRecord {
    pub fn to_melody(&self) -> std::result::Result<Melody, String> {
        match (&self.pitches, &self.note_names) {
            (Some(p), None) => Ok(Melody::named(&self.name, p.clone())),
            (None, Some(names)) => names
                .iter()
                .map(|n| parse_note(n))
                .collect::<Result<Vec<_>>>()
                .map(|p| Melody::named(&self.name, p))
                .map_err(|e| e.to_string()),
            (Some(_), Some(_)) => Err("record has both pitches and note_names".into()),
            (None, None) => Err("record needs pitches or note_names".into()),
        }
    }
}

impl From<&Melody> for MelodyRecord {
    fn from(m: &Melody) -> Self {
        MelodyRecord {
            name: m.label(),
            pitches: Some(m.pitches().to_vec()),
            note_names: None,
        }
    }
}

/// Melodies read from a file, plus one diagnostic per rejected line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedMelodies {
    pub melodies: Vec<Melody>,
    pub diagnostics: Vec<Error>,
}

/// Parses file contents. With `fail_fast` the first bad line is returned as
/// the error; otherwise bad lines are collected as diagnostics.
pub fn parse_melodies(text: &str, fail_fast: bool) -> Result<ParsedMelodies> {
    let mut out = ParsedMelodies::default();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parsed = serde_json::from_str::<MelodyRecord>(trimmed)
            .map_err(|e| e.to_string())
            .and_then(|r| r.to_melody());
        match parsed {
            Ok(m) => out.melodies.push(m),
            Err(message) => {
                let e = Error::Record {
                    line: idx + 1,
                    message,
                };
                if fail_fast {
                    return Err(e);
                }
                out.diagnostics.push(e);
            }
        }
    }
    Ok(out)
}

pub fn parse_melody_file(path: impl AsRef<Path>, fail_fast: bool) -> Result<ParsedMelodies> {
    let text = fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_melodies(&text, fail_fast)
}

pub fn to_jsonl(melodies: &[Melody]) -> String {
    melodies
        .iter()
        .map(|m| serde_json::to_string(&MelodyRecord::from(m)).expect("record serializes") + "\n")
        .collect()
}
