//! Regenerates the numeric tables (slope rankings, censuses, Fréchet
//! distances, anthem slopes) as CSV files.

use std::fs;
use std::path::Path;

use crate::cluster::{distance_matrix, WindowPolicy};
use crate::corpus::{anthems, ANTHEM_COUNT};
use crate::enumerate::{census, family, rank, RankedMelody};
use crate::error::Result;
use crate::frechet::tdfd;
use crate::melody::{Melody, Pitch};
use crate::notation::NoteName;
use crate::slope::slope_of_melody;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub file_name: String,
    pub csv: String,
}

/// The C major scale degrees C..B.
const SCALE: [Pitch; 7] = [0, 2, 4, 5, 7, 9, 11];

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn letters(m: &Melody) -> String {
    let names: Vec<String> = m
        .pitches()
        .iter()
        .map(|&p| NoteName::from_pitch(p).pitch_class())
        .collect();
    format!("({})", names.join(","))
}

fn ordinal(n: usize) -> String {
    let suffix = match (n % 10, n % 100) {
        (1, r) if r != 11 => "st",
        (2, r) if r != 12 => "nd",
        (3, r) if r != 13 => "rd",
        _ => "th",
    };
    format!("{n}{suffix}")
}

fn table(file_name: &str, rows: Vec<Vec<String>>) -> Table {
    Table {
        file_name: file_name.to_string(),
        csv: csv_string(rows),
    }
}

fn ranking_rows(entries: &[RankedMelody], negative: bool, decimals: u32) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "ranking".into(),
        "melody".into(),
        "note_names".into(),
        "slope".into(),
    ]];
    for e in entries {
        let rank = if negative {
            format!("-{}", ordinal(e.rank))
        } else {
            ordinal(e.rank)
        };
        rows.push(vec![
            rank,
            e.melody.to_string(),
            letters(&e.melody),
            e.slope.display(decimals),
        ]);
    }
    rows
}

fn tdfd_rows(
    a: &Melody,
    b: &Melody,
    ts: std::ops::RangeInclusive<i64>,
) -> Result<Vec<Vec<String>>> {
    let r = tdfd(a, b, None)?;
    let mut rows = vec![vec!["t".to_string(), "distance".to_string()]];
    for t in ts {
        let d = match r.at(t) {
            Some(d) => d.display(3),
            None => {
                let w = crate::frechet::Window::new(t, t);
                tdfd(a, b, Some(w))?.display(3)
            }
        };
        rows.push(vec![t.to_string(), d]);
    }
    Ok(rows)
}

/// Every reproducible table, in file-name order. The output is deterministic.
pub fn all_tables() -> Result<Vec<Table>> {
    let mut out = Vec::new();

    let m4 = family(0, &SCALE[1..4])?;
    let mut rows = vec![vec!["melody".into(), "note_names".into(), "slope".into()]];
    for m in m4.melodies() {
        rows.push(vec![
            m.to_string(),
            letters(m),
            slope_of_melody(m)?.display(3),
        ]);
    }
    out.push(table("table01.csv", rows));

    let m5 = rank(&family(0, &SCALE[1..5])?, 3)?;
    out.push(table("table02.csv", ranking_rows(&m5.top, false, 3)));
    out.push(table("table03.csv", ranking_rows(&m5.bottom, true, 3)));

    let m6 = rank(&family(0, &SCALE[1..6])?, 3)?;
    out.push(table("table04.csv", ranking_rows(&m6.top, false, 5)));
    out.push(table("table05.csv", ranking_rows(&m6.bottom, true, 5)));

    let mut rows = vec![vec![
        "constituent".into(),
        "positive".into(),
        "negative".into(),
        "zero".into(),
    ]];
    for size in 5..=7 {
        let c = census(&family(0, &SCALE[1..size])?)?;
        let names: Vec<String> = SCALE[..size]
            .iter()
            .map(|&p| NoteName::from_pitch(p).pitch_class())
            .collect();
        rows.push(vec![
            format!("{{{}}}", names.join(",")),
            c.positive.to_string(),
            c.negative.to_string(),
            c.zero.to_string(),
        ]);
    }
    out.push(table("table06.csv", rows));

    let scale5 = Melody::new([0, 2, 4, 5, 7]);
    out.push(table(
        "table09.csv",
        tdfd_rows(&scale5, &Melody::new([2, 9, 7, 6, 4]), -5..=1)?,
    ));
    out.push(table(
        "table10.csv",
        tdfd_rows(&scale5, &Melody::new([0, 4, 7, 12]), -5..=1)?,
    ));

    let a4 = Melody::new([0, 2, 4]);
    let mut rows = vec![vec!["a".into(), "b".into(), "t".into(), "distance".into()]];
    for b in permutations_of_024() {
        let r = tdfd(&a4, &b, None)?;
        rows.push(vec![
            a4.to_string(),
            b.to_string(),
            r.t_star.to_string(),
            r.display(3),
        ]);
    }
    out.push(table("table11.csv", rows));

    let corpus = anthems();
    let mut rows = vec![vec![
        "no".into(),
        "name".into(),
        "anthem".into(),
        "slope".into(),
    ]];
    for (i, m) in corpus.iter().enumerate().take(ANTHEM_COUNT) {
        rows.push(vec![
            (i + 1).to_string(),
            m.label(),
            m.to_string(),
            slope_of_melody(m)?.display(3),
        ]);
    }
    out.push(table("table12.csv", rows));

    let dm = distance_matrix(&corpus[..ANTHEM_COUNT], WindowPolicy::default())?;
    let (austria, hungary) = (
        dm.index_of("Austria").expect("bundled"),
        dm.index_of("Hungary").expect("bundled"),
    );
    out.push(table(
        "table13.csv",
        tdfd_rows(&corpus[austria], &corpus[hungary], 4..=10)?,
    ));

    Ok(out)
}

fn permutations_of_024() -> Vec<Melody> {
    use itertools::Itertools;
    [0, 2, 4]
        .into_iter()
        .permutations(3)
        .map(Melody::new)
        .collect()
}

pub fn write_tables(dir: impl AsRef<Path>) -> Result<Vec<Table>> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let tables = all_tables()?;
    for t in &tables {
        fs::write(dir.join(&t.file_name), &t.csv)?;
    }
    Ok(tables)
}
