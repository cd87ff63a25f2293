//! Reflective symmetry of M-graphs.
//!
//! A melody has a reflective symmetry when some line maps the i-th M-graph
//! point onto the i-th point from the end, for every i. For melodies without
//! repeated pitches this reduces to arithmetic on the pitches:
//!
//! * even length `2n` is addressed as `(x_{-n}, ..., x_{-1}, x_1, ..., x_n)`,
//!   so storage index `k` holds `x_{-(n-k)}` for `k < n` and `x_{k-n+1}`
//!   otherwise. For `n >= 3` the melody is symmetric iff `x_{-i} + x_i` is
//!   constant, with axis `y = -x + x_{-1} + x_1`.
//! * length 4 has two families: `x_2 = -x_{-2} + x_{-1} + x_1` (case I, same
//!   axis as above) and `x_2 = x_{-2} - x_{-1} + x_1` (case II, a sloped axis
//!   bisecting the right angle at the middle point).
//! * odd length `2n + 1` is addressed around a centre `x_0`; it is symmetric
//!   iff `x_{-i} + x_i = 2 x_0` for all i, with axis `y = -x + 2 x_0`.
//!
//! [`geometric_oracle`] finds the axis from perpendicular bisectors instead
//! and is used to cross-check the arithmetic route.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::melody::{MGraph, Melody, Point};
use crate::numeric::{integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RPoint { x, y }
    }
}

impl From<Point> for RPoint {
    fn from(p: Point) -> Self {
        RPoint::new(integer(p.x as i128), integer(p.y as i128))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    /// `y = slope * x + intercept`
    Sloped {
        slope: Rational,
        intercept: Rational,
    },
    /// `x = at`
    Vertical { at: Rational },
}

impl Line {
    pub fn sloped(slope: Rational, intercept: Rational) -> Self {
        Line::Sloped { slope, intercept }
    }

    pub fn vertical(at: Rational) -> Self {
        Line::Vertical { at }
    }

    /// The anti-diagonal `y = -x + c`.
    pub fn anti_diagonal(c: i128) -> Self {
        Line::sloped(integer(-1), integer(c))
    }

    pub fn contains(&self, p: RPoint) -> bool {
        match *self {
            Line::Sloped { slope, intercept } => p.y == slope * p.x + intercept,
            Line::Vertical { at } => p.x == at,
        }
    }

    /// Line through `a x + b y = c`; `None` when `a = b = 0`.
    fn from_general(a: Rational, b: Rational, c: Rational) -> Option<Line> {
        if !b.is_zero() {
            Some(Line::sloped(-a / b, c / b))
        } else if !a.is_zero() {
            Some(Line::vertical(c / a))
        } else {
            None
        }
    }

    /// Shifts the line by `(t, t)`.
    pub fn translated(&self, t: i128) -> Line {
        let t = integer(t);
        match *self {
            Line::Sloped { slope, intercept } => Line::sloped(slope, intercept + t - slope * t),
            Line::Vertical { at } => Line::vertical(at + t),
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Sloped { slope, intercept } => {
                let slope_part = if *slope == integer(-1) {
                    "-x".to_string()
                } else if slope.is_one() {
                    "x".to_string()
                } else if slope.is_zero() {
                    String::new()
                } else {
                    format!("{slope}x")
                };
                match (slope_part.is_empty(), intercept.is_zero()) {
                    (true, _) => write!(f, "y = {intercept}"),
                    (false, true) => write!(f, "y = {slope_part}"),
                    (false, false) if *intercept < Rational::zero() => {
                        write!(f, "y = {slope_part} - {}", -intercept)
                    }
                    (false, false) => write!(f, "y = {slope_part} + {intercept}"),
                }
            }
            Line::Vertical { at } => write!(f, "x = {at}"),
        }
    }
}

/// Mirror image of `p` across `l`.
pub fn reflect_point(l: &Line, p: RPoint) -> RPoint {
    match *l {
        Line::Sloped {
            slope: a,
            intercept: b,
        } => {
            let one = Rational::one();
            let two = integer(2);
            let norm = one + a * a;
            RPoint::new(
                ((one - a * a) * p.x + two * a * p.y - two * a * b) / norm,
                (two * a * p.x - (one - a * a) * p.y + two * b) / norm,
            )
        }
        Line::Vertical { at } => RPoint::new(integer(2) * at - p.x, p.y),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryCase {
    EvenGeneral,
    Even4CaseI,
    Even4CaseII,
    Odd,
}

impl SymmetryCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryCase::EvenGeneral => "even_general",
            SymmetryCase::Even4CaseI => "even4_case_I",
            SymmetryCase::Even4CaseII => "even4_case_II",
            SymmetryCase::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    axis: Option<Line>,
    case: Option<SymmetryCase>,
}

impl SymmetryReport {
    fn symmetric(axis: Line, case: SymmetryCase) -> Self {
        SymmetryReport {
            axis: Some(axis),
            case: Some(case),
        }
    }

    fn asymmetric() -> Self {
        SymmetryReport {
            axis: None,
            case: None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.axis.is_some()
    }

    pub fn axis(&self) -> Option<&Line> {
        self.axis.as_ref()
    }

    pub fn case(&self) -> Option<SymmetryCase> {
        self.case
    }
}

/// Decides reflective symmetry of a melody without repeated pitches.
pub fn detect_symmetry(m: &Melody) -> Result<SymmetryReport> {
    m.require_len(4)?;
    if let Some(pitch) = m.has_repetition() {
        return Err(Error::RepetitionUnsupported { pitch });
    }
    let p: Vec<i128> = m.pitches().iter().map(|&x| x as i128).collect();
    let len = p.len();
    if len == 4 {
        return Ok(detect_length4(m, [p[0], p[1], p[2], p[3]]));
    }
    let half = len / 2;
    if len.is_multiple_of(2) {
        // x_{-i} + x_i for i = 1..=half
        let target = p[half - 1] + p[half];
        let symmetric = (1..=half).all(|i| p[half - i] + p[half + i - 1] == target);
        Ok(if symmetric {
            SymmetryReport::symmetric(Line::anti_diagonal(target), SymmetryCase::EvenGeneral)
        } else {
            SymmetryReport::asymmetric()
        })
    } else {
        let centre = p[half];
        let symmetric = (1..=half).all(|i| p[half - i] + p[half + i] == 2 * centre);
        Ok(if symmetric {
            SymmetryReport::symmetric(Line::anti_diagonal(2 * centre), SymmetryCase::Odd)
        } else {
            SymmetryReport::asymmetric()
        })
    }
}

fn detect_length4(m: &Melody, [xm2, xm1, x1, x2]: [i128; 4]) -> SymmetryReport {
    if x2 == -xm2 + xm1 + x1 {
        return SymmetryReport::symmetric(Line::anti_diagonal(xm1 + x1), SymmetryCase::Even4CaseI);
    }
    if x2 == xm2 - xm1 + x1 {
        let den = xm2 - 2 * xm1 + x1;
        if den != 0 {
            let slope = Rational::new(xm2 - x1, den);
            let intercept = -Rational::new((xm1 - x1) * (xm2 + x1), den);
            return SymmetryReport::symmetric(
                Line::sloped(slope, intercept),
                SymmetryCase::Even4CaseII,
            );
        }
        // unreachable without repetition (it forces x_2 = x_{-1}); kept for completeness
        let graph = m.m_graph().expect("length checked");
        return match geometric_oracle(&graph) {
            Some(axis) => SymmetryReport::symmetric(axis, SymmetryCase::Even4CaseII),
            None => SymmetryReport::asymmetric(),
        };
    }
    SymmetryReport::asymmetric()
}

/// Whether the first three M-graph points of a length-4 melody form an
/// isosceles right triangle with the right angle at the middle point.
pub fn isoceles_right_check(m: &Melody) -> Result<bool> {
    if m.len() != 4 {
        return Err(Error::MelodyTooShort {
            len: m.len(),
            required: 4,
        });
    }
    let g = m.m_graph()?;
    let [p1, p2, p3] = [g.points()[0], g.points()[1], g.points()[2]];
    let u = (p2.x - p1.x, p2.y - p1.y);
    let v = (p3.x - p2.x, p3.y - p2.y);
    let dot = u.0 * v.0 + u.1 * v.1;
    Ok(dot == 0 && u.0 * u.0 + u.1 * u.1 == v.0 * v.0 + v.1 * v.1)
}

/// Searches for the line whose reflection reverses the point sequence.
///
/// Each pair of mirrored points that differ pins the line to their
/// perpendicular bisector; points mirrored onto themselves must lie on it.
/// Returns `None` when no line, or more than one line, qualifies.
pub fn geometric_oracle(g: &MGraph) -> Option<Line> {
    reversing_axis(g.points())
}

/// [`geometric_oracle`] for an arbitrary point sequence.
pub fn reversing_axis(pts: &[Point]) -> Option<Line> {
    let n = pts.len();
    let mut axis: Option<Line> = None;
    let mut fixed: Vec<Point> = Vec::new();
    for i in 0..n.div_ceil(2) {
        let (p, q) = (pts[i], pts[n - 1 - i]);
        if p == q {
            fixed.push(p);
            continue;
        }
        let a = integer((q.x - p.x) as i128);
        let b = integer((q.y - p.y) as i128);
        let c = Rational::new((q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) as i128, 2);
        let bisector = Line::from_general(a, b, c)?;
        match axis {
            None => axis = Some(bisector),
            Some(l) if l != bisector => return None,
            Some(_) => {}
        }
    }
    fixed.sort_unstable();
    fixed.dedup();
    let axis = match axis {
        Some(l) => l,
        // only fixed points: a line is determined by two of them
        None => {
            if fixed.len() < 2 {
                return None;
            }
            let (p, q) = (fixed[0], fixed[1]);
            let a = integer((q.y - p.y) as i128);
            let b = integer((p.x - q.x) as i128);
            let c = a * integer(p.x as i128) + b * integer(p.y as i128);
            Line::from_general(a, b, c)?
        }
    };
    fixed
        .iter()
        .all(|&p| axis.contains(p.into()))
        .then_some(axis)
}
