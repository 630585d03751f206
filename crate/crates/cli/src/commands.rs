use std::io::{BufWriter, Write};
use std::time::Duration;

use anyhow::{Context, Result};
use clap::Subcommand;
use rayon::prelude::*;
use serde::Serialize;

use grundy_lab::bounds::{check_all_with, Applicability, BoundReport, CheckOptions, SCHEMA_VERSION};
use grundy_lab::coloring::{grundy_number_bruteforce_with_limit, grundy_number_with, GrundyOptions};
use grundy_lab::domination::{
    domination_number_bruteforce, domination_number_exact, star_partition_number_exact,
    star_partition_search, StarPartition,
};
use grundy_lab::generators::{ExpectedInvariants, GeneratorSpec};
use grundy_lab::io::serialize_graph6;
use grundy_lab::witness::{
    closed_form_counts, count_identities, depth_for_girth, witness_star_partition, witness_tree,
    CountIdentity, WitnessDump,
};
use grundy_lab::{Girth, Graph};

use crate::input::{load, Item};
use crate::{Format, GlobalOpts};

#[derive(Subcommand, Debug, Clone)]
pub enum Family {
    /// K_{t,t} minus a (t-1)-matching: Γ = t + 1, γ = 2.
    ExtremalEven {
        #[arg(long)]
        t: usize,
    },
    /// The odd-order companion on 2t + 1 vertices: Γ = t + 1, γ = 3.
    ExtremalOdd {
        #[arg(long)]
        t: usize,
    },
    /// A q-clique with d private pendant vertices: Γ = q + 1, γ = d.
    PropGamma {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        d: usize,
    },
    /// The tree k-atom on 2^(k-1) vertices.
    Atom {
        #[arg(long)]
        k: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Bipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Petersen,
    /// G(n, p) samples; the i-th uses seed `--seed + i`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// G(n, p) samples with girth at least `gmin` (forests included).
    RandomGirth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        gmin: usize,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 10_000)]
        max_attempts: usize,
    },
}

impl Family {
    fn specs(&self, seed: u64) -> Vec<GeneratorSpec> {
        use GeneratorSpec as S;
        match *self {
            Family::ExtremalEven { t } => vec![S::ExtremalEven { t }],
            Family::ExtremalOdd { t } => vec![S::ExtremalOdd { t }],
            Family::PropGamma { q, d } => vec![S::PropGammaEquality { q, d }],
            Family::Atom { k } => vec![S::TreeAtom { k }],
            Family::Cycle { n } => vec![S::Cycle { n }],
            Family::Path { n } => vec![S::Path { n }],
            Family::Complete { n } => vec![S::Complete { n }],
            Family::Bipartite { a, b } => vec![S::CompleteBipartite { a, b }],
            Family::Petersen => vec![S::Petersen],
            Family::Random { n, p, count } => (0..count)
                .map(|i| S::Random {
                    n,
                    p,
                    seed: seed.wrapping_add(i),
                })
                .collect(),
            Family::RandomGirth {
                n,
                p,
                gmin,
                count,
                max_attempts,
            } => (0..count)
                .map(|i| S::RandomGirth {
                    n,
                    p,
                    gmin,
                    seed: seed.wrapping_add(i),
                    max_attempts,
                })
                .collect(),
        }
    }
}

/// Runs `f` over `items` on a pool of the configured size and returns the
/// results in input order.
fn run_parallel<T, F>(opts: &GlobalOpts, items: &[Item], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Item) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .context("building the worker pool")?;
    Ok(pool.install(|| items.par_iter().map(&f).collect()))
}

fn budget(opts: &GlobalOpts) -> Duration {
    Duration::from_millis(opts.budget_ms)
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    schema_version: u32,
    graph_id: &'a str,
    error: &'a str,
}

fn error_line(format: Format, graph_id: &str, error: &str) -> String {
    match format {
        Format::Json => json(&ErrorRecord {
            schema_version: SCHEMA_VERSION,
            graph_id,
            error,
        }),
        Format::Tsv => format!("#error\t{graph_id}\t{}", error.replace(['\t', '\n'], " ")),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn emit(lines: impl IntoIterator<Item = String>) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for line in lines {
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct InvariantsRecord<'a> {
    schema_version: u32,
    graph_id: &'a str,
    n: usize,
    m: usize,
    degrees: Vec<usize>,
    girth: Girth,
    triangle_free: bool,
    gamma: usize,
    dominating_set: Vec<usize>,
    s: usize,
    star_partition: StarPartition,
    grundy: usize,
    grundy_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    grundy_upper: Option<usize>,
    grundy_colors: &'a [usize],
}

pub const INVARIANTS_TSV_HEADER: &str = "graph_id\tn\tm\tgirth\tdelta\ttriangle_free\tgamma\ts\tgrundy\texact";

fn invariants_line(opts: &GlobalOpts, id: &str, g: &Graph) -> grundy_lab::Result<String> {
    let dom = domination_number_exact(g)?;
    let (s, star_partition) = star_partition_number_exact(g)?;
    let grundy = grundy_number_with(
        g,
        &GrundyOptions {
            use_domination_bounds: true,
            budget: Some(budget(opts)),
        },
    )?;
    Ok(match opts.format {
        Format::Json => json(&InvariantsRecord {
            schema_version: SCHEMA_VERSION,
            graph_id: id,
            n: g.n(),
            m: g.m(),
            degrees: g.degrees(),
            girth: g.girth(),
            triangle_free: g.is_triangle_free(),
            gamma: dom.gamma,
            dominating_set: dom.set,
            s,
            star_partition,
            grundy: grundy.k,
            grundy_exact: grundy.exact,
            grundy_upper: (!grundy.exact).then_some(grundy.upper_bound),
            grundy_colors: grundy.coloring.colors(),
        }),
        Format::Tsv => format!(
            "{id}\t{}\t{}\t{}\t{}\t{}\t{}\t{s}\t{}\t{}",
            g.n(),
            g.m(),
            g.girth(),
            g.max_degree(),
            g.is_triangle_free(),
            dom.gamma,
            grundy.k,
            grundy.exact
        ),
    })
}

pub fn invariants(opts: &GlobalOpts) -> Result<bool> {
    let items = load(&opts.input)?;
    let results = run_parallel(opts, &items, |item| match &item.graph {
        Ok(g) => invariants_line(opts, &item.id, g).map_err(|e| e.to_string()),
        Err(e) => Err(e.clone()),
    })?;
    let mut ok = true;
    let mut lines = Vec::new();
    if opts.format == Format::Tsv {
        lines.push(INVARIANTS_TSV_HEADER.to_string());
    }
    for (item, result) in items.iter().zip(results) {
        lines.push(result.unwrap_or_else(|e| {
            ok = false;
            error_line(opts.format, &item.id, &e)
        }));
    }
    emit(lines)?;
    Ok(ok)
}

#[derive(Serialize, Default)]
struct BoundsSummary {
    graphs: usize,
    errors: usize,
    applicable: usize,
    satisfied: usize,
    tight: usize,
    unknown: usize,
    anomalies: usize,
}

#[derive(Serialize)]
struct SummaryRecord<T> {
    schema_version: u32,
    summary: T,
}

pub fn check_bounds(opts: &GlobalOpts) -> Result<bool> {
    let items = load(&opts.input)?;
    let options = CheckOptions {
        budget: Some(budget(opts)),
    };
    let results: Vec<std::result::Result<BoundReport, String>> = run_parallel(opts, &items, |item| {
        let g = item.graph.as_ref().map_err(|e| e.clone())?;
        check_all_with(g, &item.id, &options).map_err(|e| e.to_string())
    })?;

    let mut summary = BoundsSummary::default();
    let mut lines = Vec::new();
    if opts.format == Format::Tsv {
        lines.push(BoundReport::TSV_HEADER.to_string());
    }
    for (item, result) in items.iter().zip(results) {
        let report = match result {
            Ok(r) => r,
            Err(e) => {
                summary.errors += 1;
                lines.push(error_line(opts.format, &item.id, &e));
                continue;
            }
        };
        summary.graphs += 1;
        for e in &report.entries {
            match e.applicability {
                Applicability::Applicable => {
                    summary.applicable += 1;
                    summary.satisfied += usize::from(e.satisfied == Some(true));
                    summary.tight += usize::from(e.equality);
                }
                Applicability::Unknown { .. } => summary.unknown += 1,
                Applicability::Inapplicable { .. } => {}
            }
        }
        summary.anomalies += report.anomalies.len();
        match opts.format {
            Format::Json => lines.push(json(&report)),
            Format::Tsv => {
                lines.extend(report.tsv_rows());
                lines.extend(
                    report
                        .anomalies
                        .iter()
                        .map(|a| format!("#anomaly\t{}\t{a}", report.graph_id)),
                );
            }
        }
    }
    let ok = summary.errors == 0 && summary.anomalies == 0;
    lines.push(match opts.format {
        Format::Json => json(&SummaryRecord {
            schema_version: SCHEMA_VERSION,
            summary: &summary,
        }),
        Format::Tsv => format!(
            "# summary graphs={} errors={} applicable={} satisfied={} tight={} unknown={} anomalies={}",
            summary.graphs,
            summary.errors,
            summary.applicable,
            summary.satisfied,
            summary.tight,
            summary.unknown,
            summary.anomalies
        ),
    });
    emit(lines)?;
    Ok(ok)
}

#[derive(Serialize)]
struct SidecarEntry<'a> {
    index: usize,
    graph6: &'a str,
    spec: &'a GeneratorSpec,
    expected: ExpectedInvariants,
}

pub fn generate(opts: &GlobalOpts, family: &Family, sidecar: Option<&str>) -> Result<bool> {
    let specs = family.specs(opts.seed);
    let mut lines = Vec::with_capacity(specs.len());
    for spec in &specs {
        let g = spec.build().with_context(|| format!("building {spec:?}"))?;
        lines.push(serialize_graph6(&g)?);
    }
    if let Some(path) = sidecar {
        let entries: Vec<SidecarEntry> = specs
            .iter()
            .zip(&lines)
            .enumerate()
            .map(|(index, (spec, graph6))| SidecarEntry {
                index,
                graph6,
                spec,
                expected: spec.expected(),
            })
            .collect();
        let text = serde_json::to_string_pretty(&entries)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {path}"))?;
    }
    emit(lines)?;
    Ok(true)
}

#[derive(Serialize)]
struct OracleCheck {
    name: &'static str,
    solver: usize,
    oracle: usize,
}

#[derive(Serialize)]
struct OracleRecord<'a> {
    schema_version: u32,
    graph_id: &'a str,
    n: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    checks: Vec<OracleCheck>,
}

fn oracle_checks(g: &Graph, nmax: usize) -> grundy_lab::Result<Vec<OracleCheck>> {
    let mut checks = Vec::new();
    let solver = grundy_number_with(g, &GrundyOptions::default())?;
    let brute = grundy_number_bruteforce_with_limit(g, nmax)?;
    checks.push(OracleCheck {
        name: "grundy",
        solver: solver.k,
        oracle: brute.k,
    });
    let dom = domination_number_exact(g)?;
    let gamma = domination_number_bruteforce(g)?.gamma;
    checks.push(OracleCheck {
        name: "gamma",
        solver: dom.gamma,
        oracle: gamma,
    });
    if g.n() >= 2 && g.is_connected() {
        // The unrestricted search knows nothing about γ.
        let searched = star_partition_search(g, None)?.len();
        checks.push(OracleCheck {
            name: "star_partition_vs_gamma",
            solver: searched,
            oracle: gamma,
        });
        checks.push(OracleCheck {
            name: "star_partition",
            solver: star_partition_number_exact(g)?.0,
            oracle: searched,
        });
    }
    Ok(checks)
}

pub fn oracle(opts: &GlobalOpts) -> Result<bool> {
    let items = load(&opts.input)?;
    let results = run_parallel(opts, &items, |item| {
        let g = item.graph.as_ref().map_err(|e| e.clone())?;
        if g.n() > opts.nmax {
            return Ok((g.n(), None));
        }
        oracle_checks(g, opts.nmax)
            .map(|c| (g.n(), Some(c)))
            .map_err(|e| e.to_string())
    })?;

    let (mut checked, mut skipped, mut divergences, mut errors) = (0usize, 0usize, 0usize, 0usize);
    let mut lines = Vec::new();
    if opts.format == Format::Tsv {
        lines.push("graph_id\tn\tstatus\tcheck\tsolver\toracle".to_string());
    }
    for (item, result) in items.iter().zip(results) {
        let (n, checks) = match result {
            Ok(r) => r,
            Err(e) => {
                errors += 1;
                lines.push(error_line(opts.format, &item.id, &e));
                continue;
            }
        };
        let (status, reason, checks) = match checks {
            None => {
                skipped += 1;
                ("skipped", Some(format!("n = {n} exceeds --nmax {}", opts.nmax)), Vec::new())
            }
            Some(checks) => {
                checked += 1;
                if checks.iter().any(|c| c.solver != c.oracle) {
                    divergences += 1;
                    ("divergence", None, checks)
                } else {
                    ("ok", None, checks)
                }
            }
        };
        match opts.format {
            Format::Json => lines.push(json(&OracleRecord {
                schema_version: SCHEMA_VERSION,
                graph_id: &item.id,
                n,
                status,
                reason,
                checks,
            })),
            Format::Tsv => {
                if checks.is_empty() {
                    lines.push(format!("{}\t{n}\t{status}\t-\t-\t-", item.id));
                }
                for c in checks {
                    lines.push(format!("{}\t{n}\t{status}\t{}\t{}\t{}", item.id, c.name, c.solver, c.oracle));
                }
            }
        }
    }
    #[derive(Serialize)]
    struct OracleSummary {
        checked: usize,
        skipped: usize,
        divergences: usize,
        errors: usize,
    }
    let summary = OracleSummary {
        checked,
        skipped,
        divergences,
        errors,
    };
    lines.push(match opts.format {
        Format::Json => json(&SummaryRecord {
            schema_version: SCHEMA_VERSION,
            summary: &summary,
        }),
        Format::Tsv => format!(
            "# summary checked={checked} skipped={skipped} divergences={divergences} errors={errors}"
        ),
    });
    emit(lines)?;
    Ok(divergences == 0 && errors == 0)
}

#[derive(Serialize)]
struct WitnessRecord {
    schema_version: u32,
    #[serde(flatten)]
    counts: CountIdentity,
    in_proof_range: bool,
    constructed_vertices: usize,
    constructed_parts: usize,
    matches: bool,
    star_partition: StarPartition,
    witness: WitnessDump,
}

pub fn witness(opts: &GlobalOpts, k: usize, g: usize, dot: bool, any_k: bool) -> Result<bool> {
    let in_proof_range = count_identities(k, g).is_ok();
    let counts = if any_k {
        closed_form_counts(k, g)?
    } else {
        count_identities(k, g).context("use --any-k to build outside this range")?
    };
    let w = witness_tree(k, depth_for_girth(g), g.is_multiple_of(2))?;
    let partition = witness_star_partition(&w, g)?;
    let matches = counts.v_h == w.graph.n() as u128 && counts.s_prime == partition.len() as u128;
    let line = if dot {
        w.to_dot(Some(&partition)).trim_end().to_string()
    } else {
        match opts.format {
            Format::Json => json(&WitnessRecord {
                schema_version: SCHEMA_VERSION,
                in_proof_range,
                constructed_vertices: w.graph.n(),
                constructed_parts: partition.len(),
                matches,
                star_partition: partition,
                witness: w.dump(),
                counts,
            }),
            Format::Tsv => format!(
                "k\tg\tv_h\ts_prime\tuncovered\tconstructed_vertices\tconstructed_parts\tmatches\n{k}\t{g}\t{}\t{}\t{}\t{}\t{}\t{matches}",
                counts.v_h,
                counts.s_prime,
                counts.uncovered,
                w.graph.n(),
                partition.len()
            ),
        }
    };
    emit([line])?;
    Ok(matches)
}
