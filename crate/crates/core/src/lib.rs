//! Analysis of melodies through their M-graphs: the planar point sequence of
//! consecutive pitch pairs.
//!
//! * [`slope`]: exact least-squares slope and its behaviour under
//!   transposition, inversion and retrograde.
//! * [`symmetry`]: detection of reflective symmetry, with a geometric oracle.
//! * [`frechet`]: discrete Fréchet distance and its minimum over transpositions.
//! * [`cluster`]: all-pairs distance matrices and group-average clustering.
//! * [`enumerate`]: permutation families, slope rankings and sign censuses.

pub mod cluster;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod frechet;
pub mod io;
pub mod melody;
pub mod notation;
pub mod numeric;
pub mod slope;
pub mod symmetry;
pub mod tables;

pub use error::{Error, Result};
pub use melody::{MGraph, Melody, Pitch, Point};
pub use numeric::{Rational, Sign};
pub use slope::RationalSlope;
