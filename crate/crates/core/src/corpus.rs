//! Melodies bundled with the crate.

use crate::io::parse_melodies;
use crate::melody::Melody;

pub const ANTHEMS_JSONL: &str = include_str!("../data/anthems.jsonl");
pub const ROWS_JSONL: &str = include_str!("../data/rows.jsonl");
pub const EXAMPLES_JSONL: &str = include_str!("../data/examples.jsonl");

/// Number of national anthems at the start of [`anthems`]; Twinkle and Kojo follow.
pub const ANTHEM_COUNT: usize = 10;

fn load(text: &str) -> Vec<Melody> {
    parse_melodies(text, true)
        .expect("bundled data is well formed")
        .melodies
}

/// Ten national anthem phrases, then "Twinkle" and "Kojo".
pub fn anthems() -> Vec<Melody> {
    load(ANTHEMS_JSONL)
}

/// Symmetric twelve-tone rows.
pub fn rows() -> Vec<Melody> {
    load(ROWS_JSONL)
}

/// Short worked examples (Jupiter, Paganini, the Fréchet examples, ...).
pub fn examples() -> Vec<Melody> {
    load(EXAMPLES_JSONL)
}

pub fn find<'a>(melodies: &'a [Melody], name: &str) -> Option<&'a Melody> {
    melodies.iter().find(|m| m.name() == Some(name))
}
