//! Exhaustive permutation families and their slope statistics.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::melody::{Melody, Pitch};
use crate::numeric::Sign;
use crate::slope::{slope_of_melody, RationalSlope};

/// Every melody that starts on `first` and then plays each pitch of the
/// remaining set exactly once, in lexicographic order of the tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationFamily {
    first: Pitch,
    rest: Vec<Pitch>,
    melodies: Vec<Melody>,
}

impl PermutationFamily {
    pub fn first(&self) -> Pitch {
        self.first
    }

    /// Remaining pitches, ascending.
    pub fn rest(&self) -> &[Pitch] {
        &self.rest
    }

    pub fn melodies(&self) -> &[Melody] {
        &self.melodies
    }

    pub fn len(&self) -> usize {
        self.melodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.melodies.is_empty()
    }

    fn slopes(&self) -> Result<Vec<RationalSlope>> {
        self.melodies.iter().map(slope_of_melody).collect()
    }
}

pub fn family(first: Pitch, rest: &[Pitch]) -> Result<PermutationFamily> {
    if rest.is_empty() {
        return Err(Error::EmptyInput("remaining pitch set"));
    }
    if rest.contains(&first) {
        return Err(Error::FamilyOverlap(first));
    }
    let rest: Vec<Pitch> = rest.iter().copied().sorted_unstable().dedup().collect();
    let melodies = rest
        .iter()
        .copied()
        .permutations(rest.len())
        .map(|tail| {
            let mut pitches = Vec::with_capacity(tail.len() + 1);
            pitches.push(first);
            pitches.extend(tail);
            Melody::new(pitches)
        })
        .collect();
    Ok(PermutationFamily {
        first,
        rest,
        melodies,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlopeCensus {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl SlopeCensus {
    pub fn total(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

pub fn census(f: &PermutationFamily) -> Result<SlopeCensus> {
    let mut c = SlopeCensus::default();
    for s in f.slopes()? {
        match s.sign() {
            Sign::Positive => c.positive += 1,
            Sign::Negative => c.negative += 1,
            Sign::Zero => c.zero += 1,
        }
    }
    Ok(c)
}

/// Members of the family whose slope is exactly zero.
pub fn zero_slope_melodies(f: &PermutationFamily) -> Result<Vec<Melody>> {
    let slopes = f.slopes()?;
    Ok(f.melodies
        .iter()
        .zip(slopes)
        .filter(|(_, s)| s.sign() == Sign::Zero)
        .map(|(m, _)| m.clone())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedMelody {
    /// 1-based; equal slopes share a rank and the following rank is skipped.
    pub rank: usize,
    pub melody: Melody,
    pub slope: RationalSlope,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    /// Largest slopes first.
    pub top: Vec<RankedMelody>,
    /// Smallest slopes first.
    pub bottom: Vec<RankedMelody>,
}

/// Melodies ranked within `k` places from either end. Ties at the cut-off
/// are all kept, so a list may hold more than `k` entries.
pub fn rank(f: &PermutationFamily, k: usize) -> Result<Ranking> {
    if k > f.len() {
        return Err(Error::RankTooDeep { k, size: f.len() });
    }
    let scored: Vec<(Melody, RationalSlope)> =
        f.melodies.iter().cloned().zip(f.slopes()?).collect();

    let take = |descending: bool| -> Vec<RankedMelody> {
        let mut order: Vec<&(Melody, RationalSlope)> = scored.iter().collect();
        // stable sort keeps generation order within ties
        if descending {
            order.sort_by_key(|x| std::cmp::Reverse(x.1));
        } else {
            order.sort_by_key(|x| x.1);
        }
        let mut out: Vec<RankedMelody> = Vec::new();
        for (pos, (m, s)) in order.into_iter().enumerate() {
            let rank = match out.last() {
                Some(prev) if prev.slope == *s => prev.rank,
                _ => pos + 1,
            };
            if rank > k {
                break;
            }
            out.push(RankedMelody {
                rank,
                melody: m.clone(),
                slope: *s,
            });
        }
        out
    };

    Ok(Ranking {
        top: take(true),
        bottom: take(false),
    })
}
