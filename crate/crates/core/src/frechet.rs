//! Discrete Fréchet distance and its minimum over transpositions.
//!
//! The dynamic program runs on exact squared distances between lattice
//! points; a square root is taken only when a distance is displayed.

use std::fmt;

use crate::error::{Error, Result};
use crate::melody::{Melody, Point};
use crate::numeric::{format_sqrt, round_half_away, Rational};

/// Semitone slack on either side of the mean-difference centre.
pub const DEFAULT_WINDOW_RADIUS: i64 = 12;

/// Index pairs `(a_i, b_i)`, 1-based, of a monotone walk through two sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coupling {
    pairs: Vec<(usize, usize)>,
}

impl Coupling {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Coupling { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Starts at (1,1), ends at (n,m), and every step advances each index by 0 or 1
    /// with at least one of them moving.
    pub fn is_valid(&self, n: usize, m: usize) -> bool {
        if self.pairs.first() != Some(&(1, 1)) || self.pairs.last() != Some(&(n, m)) {
            return false;
        }
        self.pairs.windows(2).all(|w| {
            let da = w[1].0.wrapping_sub(w[0].0);
            let db = w[1].1.wrapping_sub(w[0].1);
            da <= 1 && db <= 1 && da + db > 0
        })
    }

    /// Largest squared distance between coupled points.
    pub fn max_squared_link(&self, p: &[Point], q: &[Point]) -> i64 {
        self.pairs
            .iter()
            .map(|&(i, j)| p[i - 1].squared_distance(q[j - 1]))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfdResult {
    pub squared_distance: i64,
    pub coupling: Coupling,
}

impl DfdResult {
    pub fn distance(&self) -> f64 {
        (self.squared_distance as f64).sqrt()
    }

    pub fn display(&self, decimals: u32) -> String {
        format_sqrt(self.squared_distance, decimals)
    }
}

/// Discrete Fréchet distance between two point sequences, with an optimal coupling.
///
/// Ties during coupling recovery prefer the diagonal predecessor, then the one
/// that advanced `p`, then the one that advanced `q`.
pub fn dfd(p: &[Point], q: &[Point]) -> Result<DfdResult> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptyInput("point sequence"));
    }
    let (n, m) = (p.len(), q.len());
    let mut table = vec![0i64; n * m];
    let at = |i: usize, j: usize| i * m + j;
    for i in 0..n {
        for j in 0..m {
            let d = p[i].squared_distance(q[j]);
            let reach = match (i, j) {
                (0, 0) => d,
                (0, _) => table[at(0, j - 1)],
                (_, 0) => table[at(i - 1, 0)],
                _ => table[at(i - 1, j - 1)]
                    .min(table[at(i - 1, j)])
                    .min(table[at(i, j - 1)]),
            };
            table[at(i, j)] = d.max(reach);
        }
    }

    let mut pairs = vec![(n, m)];
    let (mut i, mut j) = (n - 1, m - 1);
    while (i, j) != (0, 0) {
        let mut best: Option<(i64, usize, usize)> = None;
        let candidates = [
            (i > 0 && j > 0).then(|| (i - 1, j - 1)),
            (i > 0).then(|| (i - 1, j)),
            (j > 0).then(|| (i, j - 1)),
        ];
        for (ci, cj) in candidates.into_iter().flatten() {
            let v = table[at(ci, cj)];
            if best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, ci, cj));
            }
        }
        let (_, ci, cj) = best.expect("a predecessor exists away from the origin");
        i = ci;
        j = cj;
        pairs.push((i + 1, j + 1));
    }
    pairs.reverse();

    Ok(DfdResult {
        squared_distance: table[at(n - 1, m - 1)],
        coupling: Coupling::new(pairs),
    })
}

/// Fréchet distance between the M-graph vertex sequences of two melodies.
pub fn dfd_melody(a: &Melody, b: &Melody) -> Result<DfdResult> {
    dfd(a.m_graph()?.points(), b.m_graph()?.points())
}

/// Inclusive range of transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn around(centre: i64, radius: i64) -> Self {
        Window::new(centre - radius, centre + radius)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `mean(a) − mean(b)`, the natural first guess for the best transposition.
pub fn mean_difference_hint(a: &Melody, b: &Melody) -> Result<Rational> {
    Ok(mean(a)? - mean(b)?)
}

fn mean(m: &Melody) -> Result<Rational> {
    if m.is_empty() {
        return Err(Error::EmptyInput("melody"));
    }
    let total: i128 = m.pitches().iter().map(|&x| x as i128).sum();
    Ok(Rational::new(total, m.len() as i128))
}

/// The mean-difference hint rounded to the nearest semitone, plus or minus an octave.
pub fn default_window(a: &Melody, b: &Melody) -> Result<Window> {
    let centre = round_half_away(&mean_difference_hint(a, b)?) as i64;
    Ok(Window::around(centre, DEFAULT_WINDOW_RADIUS))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransposedDistance {
    pub t: i64,
    pub squared_distance: i64,
}

impl TransposedDistance {
    pub fn distance(&self) -> f64 {
        (self.squared_distance as f64).sqrt()
    }

    pub fn display(&self, decimals: u32) -> String {
        format_sqrt(self.squared_distance, decimals)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdfdResult {
    pub window: Window,
    pub t_star: i64,
    pub squared_distance: i64,
    pub per_t: Vec<TransposedDistance>,
}

impl TdfdResult {
    pub fn distance(&self) -> f64 {
        (self.squared_distance as f64).sqrt()
    }

    pub fn display(&self, decimals: u32) -> String {
        format_sqrt(self.squared_distance, decimals)
    }

    pub fn at(&self, t: i64) -> Option<&TransposedDistance> {
        self.per_t.iter().find(|r| r.t == t)
    }
}

/// Minimum of `dfd(a, b + t)` over the window (default: [`default_window`]).
/// The smallest minimizing `t` wins ties.
pub fn tdfd(a: &Melody, b: &Melody, window: Option<Window>) -> Result<TdfdResult> {
    let pa = a.m_graph()?;
    let pb = b.m_graph()?;
    let window = match window {
        Some(w) => w,
        None => default_window(a, b)?,
    };
    if window.is_empty() {
        return Err(Error::EmptyWindow {
            lo: window.lo,
            hi: window.hi,
        });
    }
    let mut per_t = Vec::with_capacity((window.hi - window.lo + 1) as usize);
    let mut shifted = pb.points().to_vec();
    for t in window.lo..=window.hi {
        for (s, p) in shifted.iter_mut().zip(pb.points()) {
            *s = p.shifted(t);
        }
        let r = dfd(pa.points(), &shifted)?;
        per_t.push(TransposedDistance {
            t,
            squared_distance: r.squared_distance,
        });
    }
    let best = per_t
        .iter()
        .min_by_key(|r| (r.squared_distance, r.t))
        .copied()
        .expect("window is non-empty");
    Ok(TdfdResult {
        window,
        t_star: best.t,
        squared_distance: best.squared_distance,
        per_t,
    })
}
