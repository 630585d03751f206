//! Upper bounds on Γ(G) and the per-graph report that checks them.
//!
//! Every bound is reported as a real right-hand side. Satisfaction and
//! tightness are decided in floating point, except when the slack is within
//! `1e-6` of zero; those cases are settled by an exact integer comparison of
//! the bound rearranged into polynomial form.

use std::cmp::Ordering;
use std::time::Duration;

use num_bigint::BigUint;
use serde::Serialize;

use crate::coloring::{grundy_number_with, GrundyOptions, GrundyWitness};
use crate::domination::domination_number_exact;
use crate::error::Result;
use crate::graph::{Girth, Graph};

/// Bumped whenever report fields or TSV columns change.
pub const SCHEMA_VERSION: u32 = 1;

/// Absolute tolerance for real-valued comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// Below this |slack| the exact comparison decides.
pub const EXACT_FALLBACK_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Γ ≤ Δ + 1.
    Delta,
    /// Γ ≤ n − γ + 1.
    NMinusGamma,
    /// Γ ≤ (n − γ + 4) / 2 for triangle-free graphs.
    TriangleFree,
    /// Γ ≤ ((g − 1)/2) n^(2/(g − 1)) for odd girth g.
    OddGirthN,
    /// Γ ≤ ((g − 1)/2) (n − γ)^(2/(g − 1)) + 1 for odd girth g.
    OddGirth,
    /// Γ ≤ log2(n − γ) + 2 for odd girth g with Δ ≤ (g − 1)/2.
    Log,
    /// Γ ≤ ((g − 2)/2) ((n − γ)/2)^(2/(g − 2)) + 2 for even girth g.
    EvenGirth,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::Delta,
        BoundKind::NMinusGamma,
        BoundKind::TriangleFree,
        BoundKind::OddGirthN,
        BoundKind::OddGirth,
        BoundKind::Log,
        BoundKind::EvenGirth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Delta => "delta",
            BoundKind::NMinusGamma => "n_minus_gamma",
            BoundKind::TriangleFree => "triangle_free",
            BoundKind::OddGirthN => "odd_girth_n",
            BoundKind::OddGirth => "odd_girth",
            BoundKind::Log => "log",
            BoundKind::EvenGirth => "even_girth",
        }
    }
}

/// The graph parameters the bounds are functions of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    pub n: usize,
    pub gamma: usize,
    pub girth: Girth,
    pub max_degree: usize,
    pub triangle_free: bool,
}

impl Parameters {
    pub fn of(g: &Graph, gamma: usize) -> Self {
        Parameters {
            n: g.n(),
            gamma,
            girth: g.girth(),
            max_degree: g.max_degree(),
            triangle_free: g.is_triangle_free(),
        }
    }
}

/// Right-hand side of `kind`, or the reason it does not apply.
pub fn evaluate(kind: BoundKind, p: &Parameters) -> std::result::Result<f64, String> {
    let n = p.n as f64;
    let slack_base = (p.n - p.gamma) as f64;
    let odd_girth = match p.girth {
        Girth::Finite(g) if g % 2 == 1 => Some(g),
        _ => None,
    };
    match kind {
        BoundKind::Delta => Ok(p.max_degree as f64 + 1.0),
        BoundKind::NMinusGamma => Ok(slack_base + 1.0),
        BoundKind::TriangleFree => {
            if p.triangle_free {
                Ok((slack_base + 4.0) / 2.0)
            } else {
                Err("graph contains a triangle".into())
            }
        }
        BoundKind::OddGirthN | BoundKind::OddGirth | BoundKind::Log => {
            let g = odd_girth.ok_or_else(|| format!("girth {} is not odd and finite", p.girth))?;
            let half = ((g - 1) / 2) as f64;
            match kind {
                BoundKind::OddGirthN => Ok(half * n.powf(1.0 / half)),
                BoundKind::OddGirth => {
                    if p.n == p.gamma {
                        Ok(1.0)
                    } else {
                        Ok(half * slack_base.powf(1.0 / half) + 1.0)
                    }
                }
                _ => {
                    if p.max_degree > (g - 1) / 2 {
                        Err(format!(
                            "max degree {} exceeds (g - 1)/2 = {}",
                            p.max_degree,
                            (g - 1) / 2
                        ))
                    } else if p.n == p.gamma {
                        Err("n = gamma, log of zero".into())
                    } else {
                        Ok(slack_base.log2() + 2.0)
                    }
                }
            }
        }
        BoundKind::EvenGirth => match p.girth {
            Girth::Finite(g) if g % 2 == 0 => {
                let half = ((g - 2) / 2) as f64;
                Ok(half * (slack_base / 2.0).powf(1.0 / half) + 2.0)
            }
            other => Err(format!("girth {other} is not even and finite")),
        },
    }
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

/// Exact comparison of `grundy` against the bound's right-hand side:
/// `Less` means strictly below, `Equal` tight, `Greater` violated.
/// `None` when the bound does not apply.
pub fn compare_exact(kind: BoundKind, p: &Parameters, grundy: usize) -> Option<Ordering> {
    evaluate(kind, p).ok()?;
    let rest = p.n - p.gamma;
    Some(match kind {
        BoundKind::Delta => grundy.cmp(&(p.max_degree + 1)),
        BoundKind::NMinusGamma => grundy.cmp(&(rest + 1)),
        BoundKind::TriangleFree => (2 * grundy).cmp(&(rest + 4)),
        BoundKind::OddGirthN => {
            // Γ ≤ h n^(1/h)  <=>  Γ^h ≤ h^h n
            let h = (p.girth.finite()? - 1) / 2;
            big(grundy).pow(h as u32).cmp(&(big(h).pow(h as u32) * big(p.n)))
        }
        BoundKind::OddGirth => {
            // Γ - 1 ≤ h (n - γ)^(1/h)  <=>  (Γ - 1)^h ≤ h^h (n - γ)
            let h = (p.girth.finite()? - 1) / 2;
            if grundy == 0 {
                Ordering::Less
            } else if rest == 0 {
                grundy.cmp(&1)
            } else {
                big(grundy - 1).pow(h as u32).cmp(&(big(h).pow(h as u32) * big(rest)))
            }
        }
        BoundKind::Log => {
            // Γ - 2 ≤ log2(n - γ)  <=>  2^(Γ - 2) ≤ n - γ
            if grundy < 2 {
                Ordering::Less
            } else {
                (BigUint::from(1u32) << (grundy - 2)).cmp(&big(rest))
            }
        }
        BoundKind::EvenGirth => {
            // Γ - 2 ≤ h ((n - γ)/2)^(1/h)  <=>  2 (Γ - 2)^h ≤ h^h (n - γ)
            let h = (p.girth.finite()? - 2) / 2;
            if grundy < 2 {
                Ordering::Less
            } else {
                (big(2) * big(grundy - 2).pow(h as u32)).cmp(&(big(h).pow(h as u32) * big(rest)))
            }
        }
    })
}

/// Largest Grundy value in `0..=cap` the bound allows, for a graph with the
/// given `n`, `γ` and girth (odd/even girth bounds only need these).
pub fn largest_admissible_grundy(
    kind: BoundKind,
    n: usize,
    gamma: usize,
    girth: usize,
    cap: usize,
) -> Option<usize> {
    let p = Parameters {
        n,
        gamma,
        girth: Girth::Finite(girth),
        max_degree: 0,
        triangle_free: girth > 3,
    };
    (0..=cap)
        .rev()
        .find(|&k| compare_exact(kind, &p, k).is_some_and(|o| o != Ordering::Greater))
}

pub fn bound_delta(g: &Graph) -> f64 {
    g.max_degree() as f64 + 1.0
}

pub fn bound_n_minus_gamma(g: &Graph, gamma: usize) -> f64 {
    (g.n() - gamma) as f64 + 1.0
}

pub fn bound_triangle_free(g: &Graph, gamma: usize) -> std::result::Result<f64, String> {
    evaluate(BoundKind::TriangleFree, &Parameters::of(g, gamma))
}

pub fn bound_odd_girth_n(g: &Graph) -> std::result::Result<f64, String> {
    evaluate(BoundKind::OddGirthN, &Parameters::of(g, 0))
}

pub fn bound_odd_girth(g: &Graph, gamma: usize) -> std::result::Result<f64, String> {
    evaluate(BoundKind::OddGirth, &Parameters::of(g, gamma))
}

pub fn bound_log(g: &Graph, gamma: usize) -> std::result::Result<f64, String> {
    evaluate(BoundKind::Log, &Parameters::of(g, gamma))
}

pub fn bound_even_girth(g: &Graph, gamma: usize) -> std::result::Result<f64, String> {
    evaluate(BoundKind::EvenGirth, &Parameters::of(g, gamma))
}

/// A partition V = Q ∪ D with G[Q] complete on Γ − 1 vertices and D an
/// independent dominating set of size γ, if one exists.
pub fn find_equality_partition(
    g: &Graph,
    gamma: usize,
    grundy: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    if grundy == 0 || n != grundy - 1 + gamma {
        return None;
    }
    let q = grundy - 1;
    let adj = g.adjacency_masks().ok()?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn extend(adj: &[u64], full: u64, clique: u64, candidates: u64, q: usize) -> Option<u64> {
        if clique.count_ones() as usize == q {
            let rest = full & !clique;
            let mut dominated = rest;
            let mut bits = rest;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if adj[v] & rest != 0 {
                    return None;
                }
                dominated |= adj[v];
            }
            return (dominated == full).then_some(clique);
        }
        let mut bits = candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let found = extend(adj, full, clique | (1u64 << v), bits & adj[v], q);
            if found.is_some() {
                return found;
            }
        }
        None
    }

    let clique = extend(&adj, full, 0, full, q)?;
    let to_vec = |mask: u64| (0..n).filter(|&v| mask & (1u64 << v) != 0).collect::<Vec<_>>();
    Some((to_vec(clique), to_vec(full & !clique)))
}

/// Whether V(G) splits into a (Γ − 1)-clique and an independent dominating
/// set of size γ.
pub fn equality_characterization_holds(g: &Graph, gamma: usize, grundy: &GrundyWitness) -> bool {
    find_equality_partition(g, gamma, grundy.k).is_some()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Applicability {
    Applicable,
    Inapplicable { reason: String },
    /// The bound applies but Γ is only bracketed, so no verdict is drawn.
    Unknown { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub bound: BoundKind,
    pub applicability: Applicability,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "six_places")]
    pub slack: Option<f64>,
    pub equality: bool,
}

fn six_places<S: serde::Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64((v * 1e6).round() / 1e6),
        None => s.serialize_none(),
    }
}

/// The odd-girth bound against its n-based predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Improvement {
    pub odd_girth_rhs: f64,
    pub odd_girth_n_rhs: f64,
    /// ((g−1)/2)(n−γ)^(2/(g−1)) < ((g−1)/2) n^(2/(g−1)).
    pub scaled_term_smaller: bool,
    /// odd_girth_rhs < odd_girth_n_rhs + 1.
    pub within_offset: bool,
    /// odd_girth_rhs < odd_girth_n_rhs.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub girth: Girth,
    pub delta_max: usize,
    pub triangle_free: bool,
    pub grundy: usize,
    pub grundy_exact: bool,
    pub grundy_upper: usize,
    pub entries: Vec<BoundEntry>,
    /// Γ = n − γ + 1 (only meaningful when `grundy_exact`).
    pub n_minus_gamma_tight: bool,
    /// Whether the clique/independent-dominating split exists.
    pub equality_partition: Option<bool>,
    /// (n + 2)/2, the older triangle-free bound, for comparison.
    pub n_plus_two_half_rhs: Option<f64>,
    /// n − 2Δ + 2 ≤ γ, when the triangle-free bound beats Δ + 1.
    pub triangle_free_beats_delta: Option<bool>,
    pub improvement: Option<Improvement>,
    pub anomalies: Vec<String>,
}

impl BoundReport {
    pub fn entry(&self, kind: BoundKind) -> &BoundEntry {
        self.entries
            .iter()
            .find(|e| e.bound == kind)
            .expect("every bound has an entry")
    }

    pub fn applicable(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.applicability, Applicability::Applicable))
    }

    pub const TSV_HEADER: &'static str =
        "graph_id\tn\tm\tgirth\tdelta\tgamma\tgrundy\texact\tbound\tapplicable\trhs\tslack\ttight";

    /// One row per bound, in [`BoundReport::TSV_HEADER`] column order.
    pub fn tsv_rows(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                let applicable = match e.applicability {
                    Applicability::Applicable => "yes",
                    Applicability::Inapplicable { .. } => "no",
                    Applicability::Unknown { .. } => "unknown",
                };
                let rhs = e.rhs.map(|r| format!("{r:.6}")).unwrap_or_else(|| "-".into());
                let slack = e.slack.map(|s| format!("{s:.6}")).unwrap_or_else(|| "-".into());
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    self.graph_id,
                    self.n,
                    self.m,
                    self.girth,
                    self.delta_max,
                    self.gamma,
                    self.grundy,
                    self.grundy_exact,
                    e.bound.name(),
                    applicable,
                    rhs,
                    slack,
                    e.equality
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub budget: Option<Duration>,
}

/// Decides satisfied/tight for an exact Γ against a computed rhs.
fn verdict(kind: BoundKind, p: &Parameters, grundy: usize, rhs: f64) -> (bool, bool) {
    let slack = rhs - grundy as f64;
    if slack.abs() < EXACT_FALLBACK_SLACK {
        match compare_exact(kind, p, grundy) {
            Some(Ordering::Less) => (true, false),
            Some(Ordering::Equal) => (true, true),
            Some(Ordering::Greater) => (false, false),
            None => (slack >= -TOLERANCE, slack.abs() <= TOLERANCE),
        }
    } else {
        (slack >= -TOLERANCE, false)
    }
}

/// Builds the report for a known γ and Grundy result.
pub fn report_from(g: &Graph, graph_id: &str, gamma: usize, grundy: &GrundyWitness) -> BoundReport {
    let p = Parameters::of(g, gamma);
    let mut anomalies = Vec::new();
    let entries: Vec<BoundEntry> = BoundKind::ALL
        .iter()
        .map(|&kind| match evaluate(kind, &p) {
            Err(reason) => BoundEntry {
                bound: kind,
                applicability: Applicability::Inapplicable { reason },
                rhs: None,
                satisfied: None,
                slack: None,
                equality: false,
            },
            Ok(rhs) if !grundy.exact => {
                let upper_ok = verdict(kind, &p, grundy.upper_bound, rhs).0;
                let lower_ok = verdict(kind, &p, grundy.k, rhs).0;
                if !lower_ok {
                    anomalies.push(format!(
                        "{}: lower bound {} on the Grundy number exceeds {rhs}",
                        kind.name(),
                        grundy.k
                    ));
                }
                BoundEntry {
                    bound: kind,
                    applicability: Applicability::Unknown {
                        reason: format!("Grundy number only bracketed in [{}, {}]", grundy.k, grundy.upper_bound),
                    },
                    rhs: Some(rhs),
                    satisfied: if upper_ok { Some(true) } else if !lower_ok { Some(false) } else { None },
                    slack: None,
                    equality: false,
                }
            }
            Ok(rhs) => {
                let (satisfied, equality) = verdict(kind, &p, grundy.k, rhs);
                if !satisfied {
                    anomalies.push(format!(
                        "{}: Grundy number {} exceeds bound {rhs}",
                        kind.name(),
                        grundy.k
                    ));
                }
                BoundEntry {
                    bound: kind,
                    applicability: Applicability::Applicable,
                    rhs: Some(rhs),
                    satisfied: Some(satisfied),
                    slack: Some(rhs - grundy.k as f64),
                    equality,
                }
            }
        })
        .collect();

    let n_minus_gamma_tight = grundy.exact && grundy.k == g.n() - gamma + 1;
    let equality_partition = if grundy.exact && g.n() <= 64 {
        let holds = find_equality_partition(g, gamma, grundy.k).is_some();
        if holds != n_minus_gamma_tight {
            anomalies.push(format!(
                "equality partition exists = {holds} but Γ = n − γ + 1 is {n_minus_gamma_tight}"
            ));
        }
        Some(holds)
    } else {
        None
    };

    let improvement = match (evaluate(BoundKind::OddGirth, &p), evaluate(BoundKind::OddGirthN, &p)) {
        (Ok(odd_girth_rhs), Ok(odd_girth_n_rhs)) if gamma >= 1 && g.n() > gamma => {
            let h = ((p.girth.finite().expect("odd girth is finite") - 1) / 2) as f64;
            let scaled = odd_girth_rhs - 1.0;
            Some(Improvement {
                odd_girth_rhs,
                odd_girth_n_rhs,
                scaled_term_smaller: scaled < h * (g.n() as f64).powf(1.0 / h),
                within_offset: odd_girth_rhs < odd_girth_n_rhs + 1.0,
                strict: odd_girth_rhs < odd_girth_n_rhs,
            })
        }
        _ => None,
    };

    BoundReport {
        schema_version: SCHEMA_VERSION,
        graph_id: graph_id.to_string(),
        n: g.n(),
        m: g.m(),
        gamma,
        girth: p.girth,
        delta_max: p.max_degree,
        triangle_free: p.triangle_free,
        grundy: grundy.k,
        grundy_exact: grundy.exact,
        grundy_upper: grundy.upper_bound,
        entries,
        n_minus_gamma_tight,
        equality_partition,
        n_plus_two_half_rhs: p.triangle_free.then(|| (g.n() as f64 + 2.0) / 2.0),
        triangle_free_beats_delta: p
            .triangle_free
            .then(|| g.n() + 2 <= 2 * p.max_degree + gamma),
        improvement,
        anomalies,
    }
}

/// Computes γ and Γ exactly and checks every bound.
///
/// The Grundy solver runs without the domination-based bounds so that the
/// check does not rely on what it is checking.
pub fn check_all(g: &Graph, graph_id: &str) -> Result<BoundReport> {
    check_all_with(g, graph_id, &CheckOptions::default())
}

pub fn check_all_with(g: &Graph, graph_id: &str, options: &CheckOptions) -> Result<BoundReport> {
    let gamma = domination_number_exact(g)?.gamma;
    let grundy = grundy_number_with(
        g,
        &GrundyOptions {
            use_domination_bounds: false,
            budget: options.budget,
        },
    )?;
    Ok(report_from(g, graph_id, gamma, &grundy))
}
