//! Deterministic graph families: textbook fixtures, the extremal graphs for
//! the triangle-free bound, graphs meeting Γ = n - γ + 1, and seeded random
//! corpora.
//!
//! Random graphs use ChaCha8 (`rand_chacha` 0.3) seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Pairs `(u, v)` with `u < v` are visited
//! in lexicographic order and each becomes an edge iff the next `u64` drawn is
//! below `floor(p * 2^64)` (always, for `p = 1`). The stream is therefore
//! identical across platforms for a given `(n, p, seed)`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{tree_atom, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// C_n for n >= 3; smaller n give the path on n vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// K_{t,t} minus a matching of size t - 1, with its Grundy (t+1)-coloring.
///
/// X = `0..t` is colored t+1, t-1, ..., 1 and Y = `t..2t` is colored
/// t, t-1, ..., 1. The removed matching joins x_i and y_i for i >= 2 (equal
/// colors), so x_1 (color t+1) and y_1 (color t) stay adjacent.
pub fn extremal_even(t: usize) -> Result<(Graph, Coloring)> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("extremal_even needs t >= 2, got {t}")));
    }
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if i == j && i > 0 {
                continue;
            }
            edges.push((i, t + j));
        }
    }
    let mut colors: Vec<usize> = (0..t).map(|i| if i == 0 { t + 1 } else { t - i }).collect();
    colors.extend((0..t).map(|j| t - j));
    Ok((build(2 * t, &edges), Coloring::new(colors)?))
}

/// The odd-order extremal graph on 2t + 1 vertices, with its Grundy coloring.
///
/// Starts from [`extremal_even`], adds `w = 2t` of color 1 to X, deletes the
/// edge between the color-1 vertex of X and the color-2 vertex of Y, and
/// joins `w` to that color-2 vertex.
pub fn extremal_odd(t: usize) -> Result<(Graph, Coloring)> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!("extremal_odd needs t >= 3, got {t}")));
    }
    let (even, coloring) = extremal_even(t)?;
    let x_color_one = t - 1;
    let y_color_two = t + t - 2;
    let w = 2 * t;
    let mut edges: Vec<_> = even
        .edges()
        .filter(|&e| e != (x_color_one, y_color_two))
        .collect();
    edges.push((w, y_color_two));
    let mut colors = coloring.colors().to_vec();
    colors.push(1);
    Ok((build(2 * t + 1, &edges), Coloring::new(colors)?))
}

/// A clique Q on `q` vertices plus an independent set D of `d <= q` vertices
/// with Γ = q + 1 and γ = d.
///
/// D-vertex `q + i` is joined to Q-vertex `i`; the Q-vertices `d..q` left
/// over are joined to the first D-vertex so that D dominates. Distinct
/// D-vertices have disjoint closed neighborhoods, which forces γ = d.
pub fn prop_gamma_equality(q: usize, d: usize) -> Result<Graph> {
    if q == 0 || d == 0 || d > q {
        return Err(Error::InvalidParameter(format!(
            "prop_gamma_equality needs 1 <= d <= q, got q = {q}, d = {d}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            edges.push((u, v));
        }
    }
    for i in 0..d {
        edges.push((i, q + i));
    }
    for i in d..q {
        edges.push((i, q));
    }
    Ok(build(q + d, &edges))
}

/// The triangle with one pendant vertex per corner, K_3 ∘ K_1.
pub fn corona_triangle() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

fn edge_threshold(p: f64) -> Result<Option<u64>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    // None means "always".
    Ok(if p >= 1.0 {
        None
    } else {
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    })
}

fn sample(rng: &mut ChaCha8Rng, n: usize, threshold: Option<u64>) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let draw = rng.next_u64();
            if threshold.is_none_or(|t| draw < t) {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

/// Erdős–Rényi G(n, p) sample, deterministic in `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let threshold = edge_threshold(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample(&mut rng, n, threshold))
}

/// G(n, p) samples drawn from one seeded stream until one has girth at least
/// `min_girth`, giving up after `max_attempts` samples.
pub fn random_with_min_girth(
    n: usize,
    p: f64,
    min_girth: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<Graph> {
    let threshold = edge_threshold(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let g = sample(&mut rng, n, threshold);
        if g.girth().finite().is_none_or(|girth| girth >= min_girth) {
            return Ok(g);
        }
    }
    Err(Error::AttemptsExhausted {
        attempts: max_attempts,
    })
}

/// A named, parameterized family member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    ExtremalEven { t: usize },
    ExtremalOdd { t: usize },
    PropGammaEquality { q: usize, d: usize },
    TreeAtom { k: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Petersen,
    Random { n: usize, p: f64, seed: u64 },
    RandomGirth { n: usize, p: f64, gmin: usize, seed: u64, max_attempts: usize },
}

/// Invariants known in closed form for a family member.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedInvariants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grundy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_partition_number: Option<usize>,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            GeneratorSpec::ExtremalEven { t } => extremal_even(t)?.0,
            GeneratorSpec::ExtremalOdd { t } => extremal_odd(t)?.0,
            GeneratorSpec::PropGammaEquality { q, d } => prop_gamma_equality(q, d)?,
            GeneratorSpec::TreeAtom { k } => tree_atom(k)?,
            GeneratorSpec::Cycle { n } => cycle(n),
            GeneratorSpec::Path { n } => path(n),
            GeneratorSpec::Complete { n } => complete(n),
            GeneratorSpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            GeneratorSpec::Petersen => petersen(),
            GeneratorSpec::Random { n, p, seed } => random_graph(n, p, seed)?,
            GeneratorSpec::RandomGirth {
                n,
                p,
                gmin,
                seed,
                max_attempts,
            } => random_with_min_girth(n, p, gmin, seed, max_attempts)?,
        })
    }

    /// Values that hold by construction for the structured families.
    pub fn expected(&self) -> ExpectedInvariants {
        let e = |n, grundy, gamma| ExpectedInvariants {
            n: Some(n),
            grundy: Some(grundy),
            gamma: Some(gamma),
            star_partition_number: Some(gamma),
        };
        match *self {
            GeneratorSpec::ExtremalEven { t } => e(2 * t, t + 1, 2),
            GeneratorSpec::ExtremalOdd { t } => e(2 * t + 1, t + 1, 3),
            GeneratorSpec::PropGammaEquality { q, d } => e(q + d, q + 1, d),
            GeneratorSpec::TreeAtom { k } if k >= 1 => ExpectedInvariants {
                n: 1usize.checked_shl(k as u32 - 1),
                grundy: Some(k),
                ..Default::default()
            },
            GeneratorSpec::Complete { n } if n >= 1 => e(n, n, 1),
            GeneratorSpec::Petersen => e(10, 4, 3),
            GeneratorSpec::Cycle { n } | GeneratorSpec::Path { n } => ExpectedInvariants {
                n: Some(n),
                ..Default::default()
            },
            GeneratorSpec::CompleteBipartite { a, b } => ExpectedInvariants {
                n: Some(a + b),
                ..Default::default()
            },
            GeneratorSpec::Random { n, .. } | GeneratorSpec::RandomGirth { n, .. } => ExpectedInvariants {
                n: Some(n),
                ..Default::default()
            },
            _ => ExpectedInvariants::default(),
        }
    }
}
