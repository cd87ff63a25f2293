//! Exact rationals and fixed-point rendering.

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i128>;

pub fn rational(num: i128, den: i128) -> Rational {
    Ratio::new(num, den)
}

pub fn integer(n: i128) -> Rational {
    Ratio::from_integer(n)
}

/// Renders `r` with `decimals` digits after the point, rounding half away from zero.
pub fn format_rational(r: &Rational, decimals: u32) -> String {
    let scale = 10i128.pow(decimals);
    let num = r.numer().abs() * scale;
    let den = *r.denom();
    let mut q = num / den;
    if 2 * (num % den) >= den {
        q += 1;
    }
    let negative = r.is_negative() && q != 0;
    render_scaled(q, decimals, negative)
}

/// Renders `sqrt(squared)` with `decimals` digits, rounding half away from zero.
/// Exact: uses integer square roots only.
pub fn format_sqrt(squared: i64, decimals: u32) -> String {
    assert!(squared >= 0, "square root of a negative value");
    let scale = 10i128.pow(2 * decimals);
    let x = squared as i128 * scale;
    let r = x.sqrt();
    // sqrt(x) >= r + 1/2  <=>  x >= r^2 + r + 1 for integers
    let q = if x > r * r + r { r + 1 } else { r };
    render_scaled(q, decimals, false)
}

fn render_scaled(q: i128, decimals: u32, negative: bool) -> String {
    let sign = if negative { "-" } else { "" };
    if decimals == 0 {
        return format!("{sign}{q}");
    }
    let scale = 10i128.pow(decimals);
    format!(
        "{sign}{}.{:0width$}",
        q / scale,
        q % scale,
        width = decimals as usize
    )
}

/// Nearest integer, halves away from zero.
pub fn round_half_away(r: &Rational) -> i128 {
    let num = r.numer().abs();
    let den = *r.denom();
    let mut q = num / den;
    if 2 * (num % den) >= den {
        q += 1;
    }
    if r.is_negative() {
        -q
    } else {
        q
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
            Sign::Zero => "zero",
        }
    }
}
