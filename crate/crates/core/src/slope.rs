//! Least-squares slope of M-graphs in exact rational arithmetic.
//!
//! For points `(x_i, y_i)`, `i = 1..N`, the fitted slope is
//!
//! ```text
//!     N Σ x_i y_i − Σ x_i Σ y_i
//!     -------------------------
//!      N Σ x_i² − (Σ x_i)²
//! ```
//!
//! For a melody `(x_1, ..., x_{n+1})` the M-graph has `N = n` points with
//! `y_i = x_{i+1}`; [`numerator`] and [`denominator`] return the unreduced
//! integer parts of that quotient.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::melody::{Melody, Point};
use crate::numeric::{format_rational, integer, to_f64, Rational, Sign};

/// A slope in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalSlope(Rational);

impl RationalSlope {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DegenerateSlope);
        }
        Ok(RationalSlope(Rational::new(num, den)))
    }

    pub fn num(&self) -> i128 {
        *self.0.numer()
    }

    pub fn den(&self) -> i128 {
        *self.0.denom()
    }

    pub fn value(&self) -> Rational {
        self.0
    }

    pub fn sign(&self) -> Sign {
        Sign::of(&self.0)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }

    /// Fixed-point rendering, half away from zero.
    pub fn display(&self, decimals: u32) -> String {
        format_rational(&self.0, decimals)
    }
}

impl From<Rational> for RationalSlope {
    fn from(r: Rational) -> Self {
        RationalSlope(r)
    }
}

impl fmt::Display for RationalSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den() == 1 {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

/// Unreduced numerator and denominator of the least-squares slope.
fn fit_parts(points: &[Point]) -> (i128, i128) {
    let n = points.len() as i128;
    let (mut sx, mut sy, mut sxy, mut sxx) = (0i128, 0i128, 0i128, 0i128);
    for p in points {
        let (x, y) = (p.x as i128, p.y as i128);
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
    }
    (n * sxy - sx * sy, n * sxx - sx * sx)
}

pub fn slope_of_points(points: &[Point]) -> Result<RationalSlope> {
    let (num, den) = fit_parts(points);
    RationalSlope::new(num, den)
}

pub fn slope_of_melody(m: &Melody) -> Result<RationalSlope> {
    m.require_len(3)?;
    slope_of_points(m.m_graph()?.points())
}

pub fn slope_sign(m: &Melody) -> Result<Sign> {
    Ok(slope_of_melody(m)?.sign())
}

/// `N(x) = n Σ_{i≤n} x_i x_{i+1} − Σ_{i≤n} x_i Σ_{i≥2} x_i`.
pub fn numerator(m: &Melody) -> Result<i128> {
    m.require_len(3)?;
    Ok(fit_parts(m.m_graph()?.points()).0)
}

/// `D(x) = n Σ_{i≤n} x_i² − (Σ_{i≤n} x_i)²`.
pub fn denominator(m: &Melody) -> Result<i128> {
    m.require_len(3)?;
    Ok(fit_parts(m.m_graph()?.points()).1)
}

/// `D(retrograde) − D` in factored form:
/// `(x_{n+1} − x_1)((n+1)(x_{n+1} + x_1) − 2 Σ x_i)`.
pub fn retrograde_denominator_shift(m: &Melody) -> Result<i128> {
    m.require_len(3)?;
    let p = m.pitches();
    let first = p[0] as i128;
    let last = p[p.len() - 1] as i128;
    let total: i128 = p.iter().map(|&x| x as i128).sum();
    let len = p.len() as i128;
    Ok((last - first) * (len * (last + first) - 2 * total))
}

/// True when the retrograde has the same slope denominator:
/// the melody starts and ends on the same pitch, or its endpoint sum
/// times its length equals twice its pitch sum.
pub fn retrograde_keeps_denominator(m: &Melody) -> Result<bool> {
    m.require_len(3)?;
    let p = m.pitches();
    let first = p[0] as i128;
    let last = p[p.len() - 1] as i128;
    let total: i128 = p.iter().map(|&x| x as i128).sum();
    Ok(first == last || p.len() as i128 * (last + first) == 2 * total)
}

/// Slopes of the length-3 submelodies, `s_k = y_{k+1} / y_k` where
/// `y_k = x_{k+1} − x_k`. An entry is `None` when `y_k = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSlopeSequence {
    values: Vec<Option<Rational>>,
}

impl LocalSlopeSequence {
    /// A sequence with every entry defined.
    pub fn from_values(values: impl IntoIterator<Item = Rational>) -> Self {
        LocalSlopeSequence {
            values: values.into_iter().map(Some).collect(),
        }
    }

    pub fn values(&self) -> &[Option<Rational>] {
        &self.values
    }

    pub fn is_defined(&self, k: usize) -> bool {
        matches!(self.values.get(k), Some(Some(_)))
    }

    pub fn all_defined(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn local_slopes(m: &Melody) -> Result<LocalSlopeSequence> {
    m.require_len(3)?;
    let diffs: Vec<i128> = m
        .pitches()
        .windows(2)
        .map(|w| (w[1] - w[0]) as i128)
        .collect();
    let values = diffs
        .windows(2)
        .map(|d| (d[0] != 0).then(|| Rational::new(d[1], d[0])))
        .collect();
    Ok(LocalSlopeSequence { values })
}

/// Recovers the whole-melody slope from its local slopes.
///
/// With `y_1 = 1` and `y_{k+1} = s_k y_k` the melody `(0, y_1, y_1 + y_2, ...)`
/// has the same slope as any source melody producing these local slopes.
/// The rational differences are scaled to integers before fitting.
pub fn slope_from_locals(s: &LocalSlopeSequence) -> Result<RationalSlope> {
    if s.is_empty() {
        return Err(Error::EmptyInput("local slope sequence"));
    }
    let mut diffs = Vec::with_capacity(s.len() + 1);
    let mut y = Rational::one();
    diffs.push(y);
    for (k, v) in s.values.iter().enumerate() {
        let sk = v.ok_or(Error::LocalSlopeUndefined { index: k + 1 })?;
        y *= sk;
        diffs.push(y);
    }
    let lcm = diffs
        .iter()
        .fold(1i128, |acc, d| num_integer::lcm(acc, *d.denom()));
    let mut pitch = Rational::zero();
    let mut pitches = vec![0i64];
    for d in &diffs {
        pitch += d * integer(lcm);
        pitches.push(pitch.to_integer() as i64);
    }
    slope_of_melody(&Melody::new(pitches))
}
