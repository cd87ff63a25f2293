//! Melodies as integer pitch sequences and their M-graphs.
//!
//! Pitches count semitones from middle C (C4 = 0), so B♭3 is -2 and C5 is 12.
//! The M-graph of `(a1, ..., an)` is the point sequence
//! `(a1, a2), (a2, a3), ..., (a(n-1), an)` with an edge between consecutive points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Pitch = i64;

/// A lattice point of an M-graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn squared_distance(self, other: Point) -> i64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn shifted(self, t: i64) -> Point {
        Point::new(self.x + t, self.y + t)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Melody {
    pitches: Vec<Pitch>,
    name: Option<String>,
}

impl Melody {
    pub fn new(pitches: impl Into<Vec<Pitch>>) -> Self {
        Melody {
            pitches: pitches.into(),
            name: None,
        }
    }

    pub fn named(name: impl Into<String>, pitches: impl Into<Vec<Pitch>>) -> Self {
        Melody {
            pitches: pitches.into(),
            name: Some(name.into()),
        }
    }

    pub fn pitches(&self) -> &[Pitch] {
        &self.pitches
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or the pitch tuple when the melody is anonymous.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format_tuple(&self.pitches),
        }
    }

    pub fn len(&self) -> usize {
        self.pitches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pitches.is_empty()
    }

    pub(crate) fn require_len(&self, required: usize) -> Result<()> {
        if self.pitches.len() < required {
            Err(Error::MelodyTooShort {
                len: self.pitches.len(),
                required,
            })
        } else {
            Ok(())
        }
    }

    /// Returns the melody shifted by `t` semitones.
    pub fn transpose(&self, t: i64) -> Melody {
        Melody {
            pitches: self.pitches.iter().map(|p| p + t).collect(),
            name: self.name.as_ref().map(|n| match t {
                0 => n.clone(),
                t if t > 0 => format!("{n}+{t}"),
                t => format!("{n}{t}"),
            }),
        }
    }

    pub fn invert(&self) -> Melody {
        Melody {
            pitches: self.pitches.iter().map(|p| -p).collect(),
            name: self.name.as_ref().map(|n| format!("{n}^i")),
        }
    }

    pub fn retrograde(&self) -> Melody {
        Melody {
            pitches: self.pitches.iter().rev().copied().collect(),
            name: self.name.as_ref().map(|n| format!("{n}^r")),
        }
    }

    /// Pitches of `self` followed by those of `other`.
    pub fn concat(&self, other: &Melody) -> Melody {
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        };
        let mut pitches = self.pitches.clone();
        pitches.extend_from_slice(&other.pitches);
        Melody { pitches, name }
    }

    pub fn m_graph(&self) -> Result<MGraph> {
        self.require_len(2)?;
        Ok(MGraph {
            points: self
                .pitches
                .windows(2)
                .map(|w| Point::new(w[0], w[1]))
                .collect(),
        })
    }

    pub fn has_repetition(&self) -> Option<Pitch> {
        let mut seen = self.pitches.clone();
        seen.sort_unstable();
        seen.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }
}

impl fmt::Display for Melody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.pitches))
    }
}

pub(crate) fn format_tuple(pitches: &[Pitch]) -> String {
    let inner: Vec<String> = pitches.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Vertex sequence of the M-graph; edges join consecutive points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MGraph {
    points: Vec<Point>,
}

impl MGraph {
    /// Builds a graph from points that already satisfy the chain property.
    /// Returns `None` when a point's second coordinate differs from the next point's first.
    pub fn from_points(points: Vec<Point>) -> Option<MGraph> {
        if points.is_empty() || points.windows(2).any(|w| w[0].y != w[1].x) {
            return None;
        }
        Some(MGraph { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    /// The melody this graph was built from.
    pub fn melody(&self) -> Melody {
        let mut pitches: Vec<Pitch> = self.points.iter().map(|p| p.x).collect();
        if let Some(last) = self.points.last() {
            pitches.push(last.y);
        }
        Melody::new(pitches)
    }
}
