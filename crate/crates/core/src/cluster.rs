//! All-pairs transposed Fréchet distances and group-average clustering.

use std::fmt;

use crate::error::{Error, Result};
use crate::frechet::{tdfd, Window, DEFAULT_WINDOW_RADIUS};
use crate::melody::Melody;
use crate::numeric::{format_sqrt, round_half_away};

/// How the transposition window is chosen for each pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowPolicy {
    /// Centre on the rounded mean difference, extend `radius` each way.
    MeanHint { radius: i64 },
    /// Search the same window for every pair.
    Fixed(Window),
}

impl Default for WindowPolicy {
    fn default() -> Self {
        WindowPolicy::MeanHint {
            radius: DEFAULT_WINDOW_RADIUS,
        }
    }
}

impl WindowPolicy {
    fn window_for(&self, a: &Melody, b: &Melody) -> Result<Window> {
        Ok(match *self {
            WindowPolicy::MeanHint { radius } => {
                let hint = crate::frechet::mean_difference_hint(a, b)?;
                Window::around(round_half_away(&hint) as i64, radius)
            }
            WindowPolicy::Fixed(w) => w,
        })
    }
}

/// Symmetric matrix of transposed Fréchet distances, kept as exact squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    squared: Vec<Vec<i64>>,
    t_star: Vec<Vec<i64>>,
}

impl DistanceMatrix {
    /// Builds a matrix from precomputed squared distances. `t_star` defaults to zero.
    pub fn from_squared(labels: Vec<String>, squared: Vec<Vec<i64>>) -> Self {
        let n = labels.len();
        assert!(
            squared.len() == n && squared.iter().all(|r| r.len() == n),
            "matrix must be square with one row per label"
        );
        DistanceMatrix {
            labels,
            squared,
            t_star: vec![vec![0; n]; n],
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn squared(&self, i: usize, j: usize) -> i64 {
        self.squared[i][j]
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        (self.squared[i][j] as f64).sqrt()
    }

    /// Transposition of melody `j` that best matches melody `i`.
    pub fn t_star(&self, i: usize, j: usize) -> i64 {
        self.t_star[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The pair with the smallest distance, lowest indices first on ties.
    pub fn nearest_pair(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .min_by_key(|&(i, j)| (self.squared[i][j], i, j))
    }

    /// Comma-separated matrix with a header row of labels; distances at `decimals`.
    pub fn to_csv(&self, decimals: u32) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (i, label) in self.labels.iter().enumerate() {
            let mut row = vec![label.clone()];
            row.extend((0..self.len()).map(|j| format_sqrt(self.squared[i][j], decimals)));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }
}

/// Transposed Fréchet distance for every pair of melodies.
pub fn distance_matrix(ms: &[Melody], policy: WindowPolicy) -> Result<DistanceMatrix> {
    if ms.len() < 2 {
        return Err(Error::EmptyInput("at least two melodies are required"));
    }
    let n = ms.len();
    let labels: Vec<String> = ms.iter().map(Melody::label).collect();
    let mut squared = vec![vec![0i64; n]; n];
    let mut t_star = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let r = policy
                .window_for(&ms[i], &ms[j])
                .and_then(|w| tdfd(&ms[i], &ms[j], Some(w)))
                .map_err(|e| Error::Pair {
                    a: labels[i].clone(),
                    b: labels[j].clone(),
                    source: Box::new(e),
                })?;
            squared[i][j] = r.squared_distance;
            squared[j][i] = r.squared_distance;
            t_star[i][j] = r.t_star;
            // dfd(b, a - t) = dfd(a, b + t)
            t_star[j][i] = -r.t_star;
        }
    }
    Ok(DistanceMatrix {
        labels,
        squared,
        t_star,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Merge {
    /// Leaf indices of the two merged clusters, each sorted ascending.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Mean leaf-to-leaf distance between the two clusters.
    pub distance: f64,
}

impl Merge {
    pub fn members(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        all.sort_unstable();
        all
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MergeTree {
    leaves: Vec<String>,
    merges: Vec<Merge>,
}

impl MergeTree {
    pub fn leaves(&self) -> &[String] {
        &self.leaves
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn labels_of(&self, members: &[usize]) -> Vec<&str> {
        members.iter().map(|&i| self.leaves[i].as_str()).collect()
    }

    /// Index of the first merge whose result contains every leaf in `leaves`.
    pub fn first_merge_containing(&self, leaves: &[usize]) -> Option<usize> {
        self.merges.iter().position(|m| {
            let members = m.members();
            leaves.iter().all(|l| members.contains(l))
        })
    }
}

impl fmt::Display for MergeTree {
    /// One line per merge: `step,distance,left members,right members`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "step,distance,left,right")?;
        for (step, m) in self.merges.iter().enumerate() {
            writeln!(
                f,
                "{},{:.3},{},{}",
                step + 1,
                m.distance,
                self.labels_of(&m.left).join("|"),
                self.labels_of(&m.right).join("|"),
            )?;
        }
        Ok(())
    }
}

/// Group-average (UPGMA) agglomerative clustering.
///
/// Linkage between two clusters is the mean of the leaf-level distances over
/// all cross pairs. On equal linkage the pair whose smallest member labels
/// are lexicographically smallest is merged first, with leaf index as the
/// last resort, so the tree does not depend on input order when labels are
/// unique.
pub fn upgma(dm: &DistanceMatrix) -> MergeTree {
    let mut clusters: Vec<Vec<usize>> = (0..dm.len()).map(|i| vec![i]).collect();
    let mut merges = Vec::with_capacity(dm.len().saturating_sub(1));
    let key = |c: &[usize]| {
        c.iter()
            .map(|&i| (dm.labels[i].as_str(), i))
            .min()
            .expect("clusters are non-empty")
    };
    while clusters.len() > 1 {
        // (linkage, tie-break key, cluster positions)
        type Candidate<'a> = (f64, [(&'a str, usize); 2], usize, usize);
        let mut best: Option<Candidate> = None;
        for a in 0..clusters.len() {
            for b in a + 1..clusters.len() {
                let link = average_linkage(dm, &clusters[a], &clusters[b]);
                let mut pair = [key(&clusters[a]), key(&clusters[b])];
                pair.sort_unstable();
                let better = match &best {
                    None => true,
                    Some((d, p, _, _)) => link < *d || (link == *d && pair < *p),
                };
                if better {
                    best = Some((link, pair, a, b));
                }
            }
        }
        let (distance, _, a, b) = best.expect("at least two clusters remain");
        let right = clusters.remove(b);
        let left = clusters[a].clone();
        merges.push(Merge {
            left: left.clone(),
            right: right.clone(),
            distance,
        });
        let merged = &mut clusters[a];
        merged.extend(right);
        merged.sort_unstable();
        clusters.sort_by_key(|c| c[0]);
    }
    MergeTree {
        leaves: dm.labels.clone(),
        merges,
    }
}

/// Summed in sorted order so equal multisets of distances give equal means.
fn average_linkage(dm: &DistanceMatrix, a: &[usize], b: &[usize]) -> f64 {
    let mut ds: Vec<f64> = a
        .iter()
        .flat_map(|&i| b.iter().map(move |&j| dm.distance(i, j)))
        .collect();
    ds.sort_by(f64::total_cmp);
    ds.iter().sum::<f64>() / ds.len() as f64
}
