//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use grundy_lab::bounds::{check_all, Applicability, BoundKind, BoundReport};
use grundy_lab::coloring::{grundy_number_bruteforce_with_limit, grundy_number_exact, tree_atom};
use grundy_lab::domination::{
    domination_number_bruteforce, domination_number_exact, is_star_partition,
    star_partition_from_dominating_set, star_partition_number_exact, star_partition_search,
};
use grundy_lab::generators::{
    complete, complete_bipartite, corona_triangle, cycle, extremal_even, extremal_odd, path,
    petersen, prop_gamma_equality, random_graph,
};
use grundy_lab::witness::{
    closed_form_counts, count_identities, depth_for_girth, witness_star_partition, witness_tree,
};
use grundy_lab::{Girth, Graph};

const RANDOM_SAMPLES: u64 = 10_000;
const PROBABILITIES: [f64; 5] = [0.15, 0.3, 0.5, 0.7, 0.85];

type Outcome = Result<String, String>;

/// The `i`-th graph of a seeded corpus with `1 <= n <= nmax`.
fn corpus_graph(stream: u64, i: u64, nmax: u64) -> Graph {
    let n = 1 + (i % nmax) as usize;
    let p = PROBABILITIES[(i / nmax) as usize % PROBABILITIES.len()];
    random_graph(n, p, stream.wrapping_mul(1_000_003).wrapping_add(i)).unwrap()
}

/// Every labelled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn oracle_equivalence() -> Outcome {
    let check = |g: &Graph, label: &str| -> Result<(), String> {
        let brute = grundy_number_bruteforce_with_limit(g, 8).map_err(|e| e.to_string())?.k;
        let fast = grundy_number_exact(g).map_err(|e| e.to_string())?;
        if !fast.exact || fast.k != brute {
            return Err(format!("{label}: Γ solver {} vs orderings {brute} on {g:?}", fast.k));
        }
        let gamma_brute = domination_number_bruteforce(g).map_err(|e| e.to_string())?.gamma;
        let gamma = domination_number_exact(g).map_err(|e| e.to_string())?.gamma;
        if gamma != gamma_brute {
            return Err(format!("{label}: γ solver {gamma} vs subsets {gamma_brute} on {g:?}"));
        }
        Ok(())
    };
    let mut exhaustive = 0usize;
    for n in 0..=6 {
        for g in all_graphs(n) {
            check(&g, "exhaustive")?;
            exhaustive += 1;
        }
    }
    for i in 0..RANDOM_SAMPLES {
        check(&corpus_graph(1, i, 8), &format!("random #{i}"))?;
    }
    Ok(format!(
        "{exhaustive} graphs on <= 6 vertices, {RANDOM_SAMPLES} random graphs on <= 8 vertices, 0 divergences"
    ))
}

fn star_partitions_equal_domination() -> Outcome {
    let mut checked = 0u64;
    let mut i = 0u64;
    while checked < RANDOM_SAMPLES {
        let g = corpus_graph(2, i, 10);
        i += 1;
        if g.n() < 2 || !g.is_connected() {
            continue;
        }
        let dom = domination_number_exact(&g).map_err(|e| e.to_string())?;
        let searched = star_partition_search(&g, None).map_err(|e| e.to_string())?;
        if !is_star_partition(&g, &searched) || searched.len() != dom.gamma {
            return Err(format!("s = {} but γ = {} on {g:?}", searched.len(), dom.gamma));
        }
        let (s, _) = star_partition_number_exact(&g).map_err(|e| e.to_string())?;
        if s != dom.gamma {
            return Err(format!("star_partition_number_exact = {s}, γ = {} on {g:?}", dom.gamma));
        }
        let built = star_partition_from_dominating_set(&g, &dom.set).map_err(|e| e.to_string())?;
        if !is_star_partition(&g, &built) || built.len() > dom.gamma {
            return Err(format!("partition from {:?} invalid on {g:?}", dom.set));
        }
        checked += 1;
    }
    Ok(format!("{checked} connected graphs on <= 10 vertices with δ >= 1, 0 violations"))
}

/// Named structured graphs used by the soundness and improvement sweeps.
fn structured_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for t in 2..=6 {
        out.push((format!("extremal_even({t})"), extremal_even(t).unwrap().0));
    }
    for t in 3..=6 {
        out.push((format!("extremal_odd({t})"), extremal_odd(t).unwrap().0));
    }
    for k in 1..=7 {
        out.push((format!("tree_atom({k})"), tree_atom(k).unwrap()));
    }
    for g in 5..=13 {
        let doubled = g % 2 == 0;
        for k in 3..=6 {
            if let Ok(w) = witness_tree(k, depth_for_girth(g), doubled) {
                if w.graph.n() <= 40 {
                    out.push((format!("witness(k={k},g={g})"), w.graph));
                }
            }
        }
    }
    for n in 1..=12 {
        out.push((format!("path({n})"), path(n)));
        out.push((format!("complete({n})"), complete(n)));
        if n >= 3 {
            out.push((format!("cycle({n})"), cycle(n)));
        }
    }
    for a in 1..=5 {
        for b in a..=5 {
            out.push((format!("bipartite({a},{b})"), complete_bipartite(a, b)));
        }
    }
    out.push(("petersen".into(), petersen()));
    out.push(("corona_triangle".into(), corona_triangle()));
    out
}

fn random_soundness_corpus() -> impl Iterator<Item = (String, Graph)> {
    (0..RANDOM_SAMPLES).map(|i| (format!("random3#{i}"), corpus_graph(3, i, 14)))
}

fn report_problems(r: &BoundReport) -> Option<String> {
    if !r.grundy_exact {
        return Some(format!("{}: Grundy number not exact", r.graph_id));
    }
    if !r.anomalies.is_empty() {
        return Some(format!("{}: {}", r.graph_id, r.anomalies.join("; ")));
    }
    r.entries
        .iter()
        .find(|e| matches!(e.applicability, Applicability::Applicable) && e.satisfied != Some(true))
        .map(|e| format!("{}: {} violated", r.graph_id, e.bound.name()))
}

fn bound_soundness(reports: &[BoundReport]) -> Outcome {
    let mut applications = 0usize;
    for r in reports {
        if let Some(problem) = report_problems(r) {
            return Err(problem);
        }
        applications += r.applicable().count();
    }
    Ok(format!(
        "{} graphs, {applications} applicable bound checks, 0 anomalies",
        reports.len()
    ))
}

fn tightness() -> Outcome {
    let check = |name: String, g: &Graph, t: usize, gamma_expected: usize| -> Result<(), String> {
        let r = check_all(g, &name).map_err(|e| e.to_string())?;
        let tf = r.entry(BoundKind::TriangleFree);
        if r.grundy != t + 1 || !r.grundy_exact || r.gamma != gamma_expected {
            return Err(format!("{name}: Γ = {}, γ = {}", r.grundy, r.gamma));
        }
        // Exact integer form of Γ = (n - γ + 4) / 2.
        if 2 * r.grundy != r.n - r.gamma + 4 || !tf.equality {
            return Err(format!("{name}: triangle-free bound not tight"));
        }
        Ok(())
    };
    for t in 2..=6 {
        check(format!("extremal_even({t})"), &extremal_even(t).unwrap().0, t, 2)?;
    }
    for t in 3..=6 {
        check(format!("extremal_odd({t})"), &extremal_odd(t).unwrap().0, t, 3)?;
    }
    Ok("extremal_even t=2..6 and extremal_odd t=3..6 meet (n-γ+4)/2 exactly".into())
}

fn equality_biconditional(small_reports: &[BoundReport]) -> Outcome {
    let mut holds = 0usize;
    for r in small_reports {
        if let Some(problem) = report_problems(r) {
            return Err(problem);
        }
        let partition = r.equality_partition.ok_or(format!("{}: not evaluated", r.graph_id))?;
        if partition != (r.grundy == r.n - r.gamma + 1) {
            return Err(format!("{}: partition {partition}, Γ = {}, n - γ + 1 = {}", r.graph_id, r.grundy, r.n - r.gamma + 1));
        }
        holds += partition as usize;
    }
    let mut families = 0;
    for q in 2..=5 {
        for d in 1..=q.min(4) {
            let g = prop_gamma_equality(q, d).unwrap();
            let r = check_all(&g, "prop_gamma_equality").map_err(|e| e.to_string())?;
            if r.equality_partition != Some(true) || r.grundy != r.n - r.gamma + 1 {
                return Err(format!("prop_gamma_equality({q},{d}): Γ = {}, γ = {}", r.grundy, r.gamma));
            }
            families += 1;
        }
    }
    Ok(format!(
        "{} random graphs on <= 10 vertices ({holds} with equality), {families} equality family members, 0 mismatches",
        small_reports.len()
    ))
}

fn count_identities_grid() -> Outcome {
    let mut cases = 0;
    let mut verify = |k: usize, g: usize, identity: grundy_lab::witness::CountIdentity| -> Result<(), String> {
        let w = witness_tree(k, depth_for_girth(g), g.is_multiple_of(2)).map_err(|e| e.to_string())?;
        let p = witness_star_partition(&w, g).map_err(|e| e.to_string())?;
        if w.graph.n() as u128 != identity.v_h || p.len() as u128 != identity.s_prime {
            return Err(format!(
                "k={k} g={g}: built {}/{}, closed form {}/{}",
                w.graph.n(),
                p.len(),
                identity.v_h,
                identity.s_prime
            ));
        }
        if !is_star_partition(&w.graph, &p) {
            return Err(format!("k={k} g={g}: invalid star partition"));
        }
        cases += 1;
        Ok(())
    };
    for g in 5..=13 {
        let kmin = if g % 2 == 1 { (g + 3) / 2 } else { (g + 2) / 2 + 1 };
        for k in kmin..=12 {
            verify(k, g, count_identities(k, g).map_err(|e| e.to_string())?)?;
        }
    }
    for (k, g, v_h, s_prime) in [(4, 7, 8, 4), (4, 5, 7, 3), (5, 8, 16, 8), (5, 6, 14, 6)] {
        let c = closed_form_counts(k, g).map_err(|e| e.to_string())?;
        if (c.v_h, c.s_prime) != (v_h, s_prime) {
            return Err(format!("spot k={k} g={g}: {}/{}", c.v_h, c.s_prime));
        }
        verify(k, g, c)?;
    }
    Ok(format!("{cases} (k, g) cases including 4 spot values, all exact"))
}

fn known_values() -> Outcome {
    let expect = |name: &str, g: &Graph, grundy: Option<usize>, gamma: Option<usize>| -> Result<(), String> {
        let got = grundy_number_exact(g).map_err(|e| e.to_string())?.k;
        let dom = domination_number_exact(g).map_err(|e| e.to_string())?.gamma;
        if grundy.is_some_and(|x| x != got) || gamma.is_some_and(|x| x != dom) {
            return Err(format!("{name}: Γ = {got}, γ = {dom}"));
        }
        Ok(())
    };
    let pet = petersen();
    if pet.girth() != Girth::Finite(5) {
        return Err("petersen girth".into());
    }
    expect("petersen", &pet, Some(4), Some(3))?;
    expect("P4", &path(4), Some(3), Some(2))?;
    expect("C4", &cycle(4), Some(2), None)?;
    expect("C6", &cycle(6), Some(3), Some(2))?;
    for n in 1..=10 {
        expect(&format!("K{n}"), &complete(n), Some(n), Some(1))?;
    }
    for k in 1..=10 {
        let atom = tree_atom(k).map_err(|e| e.to_string())?;
        if atom.n() != 1 << (k - 1) {
            return Err(format!("tree_atom({k}) has {} vertices", atom.n()));
        }
        if k <= 7 {
            expect(&format!("tree_atom({k})"), &atom, Some(k), None)?;
        }
    }
    Ok("Petersen, P4, C4, C6, K1..K10, tree atoms k <= 10 all match".into())
}

fn improvement(reports: &[BoundReport]) -> Outcome {
    let (mut eligible, mut strict) = (0usize, 0usize);
    for r in reports {
        let odd = matches!(r.girth, Girth::Finite(g) if g % 2 == 1);
        if !odd || r.gamma < 2 {
            continue;
        }
        let imp = r
            .improvement
            .ok_or(format!("{}: no improvement record", r.graph_id))?;
        if !imp.scaled_term_smaller || !imp.within_offset {
            return Err(format!(
                "{}: odd girth rhs {} vs n-based odd-girth rhs {}",
                r.graph_id, imp.odd_girth_rhs, imp.odd_girth_n_rhs
            ));
        }
        eligible += 1;
        strict += imp.strict as usize;
    }
    Ok(format!(
        "{eligible} graphs with odd girth and γ >= 2: n-γ term below the n term in all, \
         odd-girth rhs strictly below n-based odd-girth rhs in {strict}"
    ))
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |id: u32, name: &str, start: Instant, outcome: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail} [{secs:.1}s]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {id} ({name}): {detail} [{secs:.1}s]");
            }
        }
    };

    let t = Instant::now();
    report(1, "oracle equivalence", t, oracle_equivalence());
    let t = Instant::now();
    report(2, "star partition number equals γ", t, star_partitions_equal_domination());

    let t = Instant::now();
    let mut reports = Vec::new();
    let mut build_error = None;
    for (name, g) in structured_corpus().into_iter().chain(random_soundness_corpus()) {
        match check_all(&g, &name) {
            Ok(r) => reports.push(r),
            Err(e) => {
                build_error = Some(format!("{name}: {e}"));
                break;
            }
        }
    }
    let sweep = match build_error {
        Some(e) => Err(e),
        None => bound_soundness(&reports),
    };
    report(3, "bound soundness", t, sweep);

    let t = Instant::now();
    report(4, "extremal tightness", t, tightness());

    let t = Instant::now();
    let small: Result<Vec<_>, String> = (0..RANDOM_SAMPLES)
        .map(|i| check_all(&corpus_graph(5, i, 10), &format!("random5#{i}")).map_err(|e| e.to_string()))
        .collect();
    report(5, "equality characterization", t, small.and_then(|s| equality_biconditional(&s)));

    let t = Instant::now();
    report(6, "count identities", t, count_identities_grid());
    let t = Instant::now();
    report(7, "known values", t, known_values());
    let t = Instant::now();
    report(8, "odd-girth improvement", t, improvement(&reports));

    if failures == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
