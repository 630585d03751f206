//! First-Fit colorings, Grundy-coloring validation and the exact Grundy number.
//!
//! The exact solver uses the characterization of full Grundy colorings as
//! sequences of maximal independent sets: color class `C_1` is a maximal
//! independent set of `G`, `C_2` one of `G - C_1`, and so on. The best
//! continuation after removing some classes depends only on the set of
//! vertices left, so the search is a memoized recursion over remaining-vertex
//! bitmasks, cut off by upper bounds on the Grundy number of the remainder.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds;
use crate::domination;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph, MAX_BITSET_VERTICES};

/// A vertex coloring with colors `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Wraps a per-vertex color vector. Colors must be positive.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} has color 0; colors are 1-based"
            )));
        }
        let num_colors = colors.iter().copied().max().unwrap_or(0);
        Ok(Coloring { colors, num_colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// `C_1, ..., C_k`, each sorted ascending.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }
}

/// A claimed value of Γ(G) with a Grundy coloring attaining its lower end.
///
/// When `exact` is false the solver ran out of budget: `k` is a proven lower
/// bound (witnessed by `coloring`) and `upper_bound` a proven upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyWitness {
    pub k: usize,
    pub coloring: Coloring,
    pub ordering: Option<Vec<usize>>,
    pub exact: bool,
    pub upper_bound: usize,
}

#[derive(Serialize)]
struct WitnessRecord<'a> {
    k: usize,
    colors: &'a [usize],
    ordering: Option<&'a [usize]>,
    exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_bound: Option<usize>,
}

impl Serialize for GrundyWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessRecord {
            k: self.k,
            colors: self.coloring.colors(),
            ordering: self.ordering.as_deref(),
            exact: self.exact,
            upper_bound: (!self.exact).then_some(self.upper_bound),
        }
        .serialize(s)
    }
}

fn check_permutation(n: usize, ordering: &[usize]) -> Result<()> {
    if ordering.len() != n {
        return Err(Error::NotAPermutation {
            n,
            reason: format!("length {} != {n}", ordering.len()),
        });
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("vertex {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation {
                n,
                reason: format!("vertex {v} repeated"),
            });
        }
    }
    Ok(())
}

/// Greedy coloring along `ordering`: each vertex takes the least positive
/// color missing from its already-colored neighbors.
pub fn first_fit(g: &Graph, ordering: &[usize]) -> Result<Coloring> {
    check_permutation(g.n(), ordering)?;
    let mut colors = vec![0usize; g.n()];
    let mut used = Vec::new();
    for &v in ordering {
        used.clear();
        used.resize(g.degree(v) + 2, false);
        for &u in g.neighbors(v) {
            let c = colors[u];
            if c != 0 && c < used.len() {
                used[c] = true;
            }
        }
        colors[v] = (1..used.len()).find(|&c| !used[c]).expect("degree + 1 colors suffice");
    }
    Coloring::new(colors)
}

/// Why `colors` fails to be a Grundy coloring of `g`, or `None` if it is one.
pub fn grundy_defect(g: &Graph, colors: &[usize]) -> Option<String> {
    if colors.len() != g.n() {
        return Some(format!("{} colors for {} vertices", colors.len(), g.n()));
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Some(format!("vertex {v} is uncolored"));
    }
    for v in g.vertices() {
        let c = colors[v];
        let mut seen = vec![false; c];
        for &u in g.neighbors(v) {
            let cu = colors[u];
            if cu == c {
                return Some(format!("adjacent vertices {v} and {u} share color {c}"));
            }
            if cu < c {
                seen[cu] = true;
            }
        }
        if let Some(missing) = (1..c).find(|&i| !seen[i]) {
            return Some(format!(
                "vertex {v} has color {c} but no neighbor of color {missing}"
            ));
        }
    }
    None
}

/// Proper, and every vertex of color `j` sees every color below `j`.
pub fn is_grundy_coloring(g: &Graph, coloring: &Coloring) -> bool {
    grundy_defect(g, coloring.colors()).is_none()
}

/// Default vertex limit for [`grundy_number_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 9;

/// Γ(G) as the maximum of FF(G, σ) over every ordering σ.
///
/// Orderings are enumerated as a prefix tree so shared prefixes are colored
/// once. Refuses graphs larger than `limit` vertices.
pub fn grundy_number_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<GrundyWitness> {
    let n = g.n();
    // Colors index a u128 mask below.
    let limit = limit.min(127);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    struct Search<'a> {
        g: &'a Graph,
        colors: Vec<usize>,
        prefix: Vec<usize>,
        used: Vec<bool>,
        best: usize,
        best_ordering: Vec<usize>,
    }
    impl Search<'_> {
        fn run(&mut self, max_so_far: usize) {
            let n = self.g.n();
            if self.prefix.len() == n {
                if max_so_far > self.best || self.best_ordering.is_empty() {
                    self.best = max_so_far;
                    self.best_ordering = self.prefix.clone();
                }
                return;
            }
            for v in 0..n {
                if self.used[v] {
                    continue;
                }
                let mut mask = 0u128;
                for &u in self.g.neighbors(v) {
                    mask |= 1u128 << self.colors[u];
                }
                let c = (!(mask | 1)).trailing_zeros() as usize;
                self.used[v] = true;
                self.colors[v] = c;
                self.prefix.push(v);
                self.run(max_so_far.max(c));
                self.prefix.pop();
                self.colors[v] = 0;
                self.used[v] = false;
            }
        }
    }
    let mut search = Search {
        g,
        colors: vec![0; n],
        prefix: Vec::with_capacity(n),
        used: vec![false; n],
        best: 0,
        best_ordering: Vec::new(),
    };
    search.run(0);
    let ordering = search.best_ordering;
    let coloring = first_fit(g, &ordering)?;
    debug_assert_eq!(coloring.num_colors(), search.best);
    Ok(GrundyWitness {
        k: search.best,
        coloring,
        ordering: Some(ordering),
        exact: true,
        upper_bound: search.best,
    })
}

pub fn grundy_number_bruteforce(g: &Graph) -> Result<GrundyWitness> {
    grundy_number_bruteforce_with_limit(g, BRUTEFORCE_LIMIT)
}

/// Knobs for [`grundy_number_with`].
#[derive(Debug, Clone, Copy)]
pub struct GrundyOptions {
    /// Tighten the initial upper bound with n - γ + 1 and the triangle-free
    /// and girth bounds (needs an exact γ). Disable to keep the search
    /// independent of those bounds, e.g. when the bounds themselves are the
    /// object of a check.
    pub use_domination_bounds: bool,
    /// Give up after this long and return a bracketed result.
    pub budget: Option<Duration>,
}

impl Default for GrundyOptions {
    fn default() -> Self {
        GrundyOptions {
            use_domination_bounds: true,
            budget: None,
        }
    }
}

/// Exact Γ(G) with default options (all bounds, no budget).
pub fn grundy_number_exact(g: &Graph) -> Result<GrundyWitness> {
    grundy_number_with(g, &GrundyOptions::default())
}

/// Exact Γ(G), or a bracketed result if `options.budget` runs out.
pub fn grundy_number_with(g: &Graph, options: &GrundyOptions) -> Result<GrundyWitness> {
    let n = g.n();
    let adj = g.adjacency_masks()?;
    if n == 0 {
        return Ok(GrundyWitness {
            k: 0,
            coloring: Coloring::new(Vec::new())?,
            ordering: Some(Vec::new()),
            exact: true,
            upper_bound: 0,
        });
    }
    let full = if n == MAX_BITSET_VERTICES { u64::MAX } else { (1u64 << n) - 1 };

    let (heuristic_ordering, heuristic_k) = heuristic_lower_bound(g)?;

    let mut solver = Solver {
        adj,
        triangle_free: g.is_triangle_free(),
        memo: HashMap::new(),
        deadline: options.budget.map(|b| Instant::now() + b),
        nodes: 0,
        aborted: false,
    };
    let mut upper = solver.upper_bound(full);
    if options.use_domination_bounds {
        let gamma = domination::domination_number_exact(g)?.gamma;
        upper = upper.min(domination_upper_bound(g, gamma));
    }

    let mut best = heuristic_k;
    let mut best_class: Option<u64> = None;
    if best < upper {
        for class in solver.maximal_independent_sets(full) {
            let rest = full & !class;
            if solver.upper_bound(rest) < best {
                continue;
            }
            match solver.solve(rest) {
                Some(value) if 1 + value > best => {
                    best = 1 + value;
                    best_class = Some(class);
                    if best >= upper {
                        break;
                    }
                }
                Some(_) => {}
                None => break,
            }
        }
    }

    let ordering = match best_class {
        None => heuristic_ordering,
        Some(class) => {
            let mut ordering = Vec::with_capacity(n);
            push_bits(&mut ordering, class);
            for next in solver.classes(full & !class) {
                push_bits(&mut ordering, next);
            }
            ordering
        }
    };
    let coloring = first_fit(g, &ordering)?;
    if coloring.num_colors() != best {
        return Err(Error::Internal(format!(
            "witness ordering yields {} colors, search claimed {best}",
            coloring.num_colors()
        )));
    }
    let exact = !solver.aborted || best >= upper;
    Ok(GrundyWitness {
        k: best,
        coloring,
        ordering: Some(ordering),
        exact,
        upper_bound: if exact { best } else { upper },
    })
}

/// min over the bounds that need γ: n - γ + 1, and the triangle-free, odd-
/// and even-girth bounds where they apply, each rounded down exactly.
fn domination_upper_bound(g: &Graph, gamma: usize) -> usize {
    let n = g.n();
    let mut upper = n - gamma + 1;
    if g.is_triangle_free() {
        upper = upper.min((n - gamma + 4) / 2);
    }
    if let Girth::Finite(girth) = g.girth() {
        let kind = if girth % 2 == 1 {
            bounds::BoundKind::OddGirth
        } else {
            bounds::BoundKind::EvenGirth
        };
        if let Some(k) = bounds::largest_admissible_grundy(kind, n, gamma, girth, n) {
            upper = upper.min(k);
        }
    }
    upper
}

fn push_bits(out: &mut Vec<usize>, mut mask: u64) {
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
}

/// Best First-Fit count over a handful of cheap orderings.
fn heuristic_lower_bound(g: &Graph) -> Result<(Vec<usize>, usize)> {
    let n = g.n();
    let natural: Vec<usize> = (0..n).collect();
    let mut by_degree = natural.clone();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut candidates = vec![natural.clone(), by_degree.clone()];
    candidates.push(natural.iter().rev().copied().collect());
    candidates.push(by_degree.iter().rev().copied().collect());
    let mut best: Option<(Vec<usize>, usize)> = None;
    for ordering in candidates {
        let k = first_fit(g, &ordering)?.num_colors();
        if best.as_ref().is_none_or(|(_, b)| k > *b) {
            best = Some((ordering, k));
        }
    }
    Ok(best.expect("at least one candidate ordering"))
}

struct Solver {
    adj: Vec<u64>,
    triangle_free: bool,
    /// remaining set -> (Γ of the induced subgraph, first class of an optimal
    /// Grundy coloring of it, or 0 if the set is disconnected). Only
    /// completed searches are stored.
    memo: HashMap<u64, (usize, u64)>,
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
}

impl Solver {
    fn degree_in(&self, v: usize, set: u64) -> usize {
        (self.adj[v] & set).count_ones() as usize
    }

    /// Cheap upper bound on Γ(G[set]).
    ///
    /// A vertex of color k has degree at least k - 1 and a neighbor of color
    /// k - 1, whose degree is at least k - 2; so k <= min(d(v) + 1, d(u) + 2)
    /// for some edge uv. Also n - γ + 1 and, for triangle-free graphs,
    /// (n - γ + 4) / 2 with the lower bound γ >= ceil(n / (Δ + 1)).
    fn upper_bound(&self, set: u64) -> usize {
        if set == 0 {
            return 0;
        }
        let size = set.count_ones() as usize;
        let mut max_degree = 0;
        let mut edge_bound = 1;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let dv = self.degree_in(v, set);
            max_degree = max_degree.max(dv);
            let mut nbrs = self.adj[v] & set;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                let du = self.degree_in(u, set);
                edge_bound = edge_bound.max((dv + 1).min(du + 2));
            }
        }
        let gamma_lb = size.div_ceil(max_degree + 1);
        let mut bound = edge_bound.min(size - gamma_lb + 1);
        if self.triangle_free {
            bound = bound.min((size - gamma_lb + 4) / 2);
        }
        bound
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    /// Γ(G[set]); `None` if the budget ran out.
    fn solve(&mut self, set: u64) -> Option<usize> {
        if set == 0 {
            return Some(0);
        }
        if let Some(&(value, _)) = self.memo.get(&set) {
            return Some(value);
        }
        if self.out_of_time() {
            return None;
        }
        let independent = {
            let mut bits = set;
            let mut ok = true;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.adj[v] & set != 0 {
                    ok = false;
                    break;
                }
            }
            ok
        };
        if independent {
            self.memo.insert(set, (1, set));
            return Some(1);
        }
        // Γ of a disjoint union is the largest Γ of its parts.
        let components = self.components(set);
        if components.len() > 1 {
            let mut best = 0;
            for c in components {
                best = best.max(self.solve(c)?);
            }
            self.memo.insert(set, (best, 0));
            return Some(best);
        }
        let upper = self.upper_bound(set);
        let mut best = 0;
        let mut best_class = 0;
        for class in self.maximal_independent_sets(set) {
            let rest = set & !class;
            if self.upper_bound(rest) < best {
                continue;
            }
            let value = 1 + self.solve(rest)?;
            if value > best {
                best = value;
                best_class = class;
                if best >= upper {
                    break;
                }
            }
        }
        self.memo.insert(set, (best, best_class));
        Some(best)
    }

    fn components(&self, set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = set;
        while left != 0 {
            let mut component = left & left.wrapping_neg();
            let mut frontier = component;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & set & !component;
                component |= new;
                frontier |= new;
            }
            out.push(component);
            left &= !component;
        }
        out
    }

    /// Color classes of an optimal Grundy coloring of G[set], color 1 first,
    /// read back from the memo of a completed [`Solver::solve`].
    fn classes(&self, set: u64) -> Vec<u64> {
        if set == 0 {
            return Vec::new();
        }
        let (_, first) = self.memo[&set];
        if first == 0 {
            // Disconnected: overlay the components' colorings class by class.
            let mut merged: Vec<u64> = Vec::new();
            for c in self.components(set) {
                for (i, class) in self.classes(c).into_iter().enumerate() {
                    if i == merged.len() {
                        merged.push(0);
                    }
                    merged[i] |= class;
                }
            }
            return merged;
        }
        let mut out = vec![first];
        out.extend(self.classes(set & !first));
        out
    }

    /// All maximal independent sets of G[set], via Bron-Kerbosch with
    /// pivoting on the complement graph.
    fn maximal_independent_sets(&self, set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(set, 0, set, 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, set: u64, current: u64, candidates: u64, excluded: u64, out: &mut Vec<u64>) {
        if candidates == 0 {
            if excluded == 0 {
                out.push(current);
            }
            return;
        }
        // Pivot: the vertex with the most non-neighbors among the candidates.
        let mut pivot_cover = 0u64;
        let mut best = None;
        let mut bits = candidates | excluded;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let non_nbrs = candidates & !self.adj[u] & !(1u64 << u);
            let count = non_nbrs.count_ones();
            if best.is_none_or(|b| count > b) {
                best = Some(count);
                pivot_cover = self.adj[u] | (1u64 << u);
            }
        }
        let mut candidates = candidates;
        let mut excluded = excluded;
        let mut branch = candidates & pivot_cover;
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            let bit = 1u64 << v;
            let keep = set & !self.adj[v] & !bit;
            self.bron_kerbosch(set, current | bit, candidates & keep, excluded & keep, out);
            candidates &= !bit;
            excluded |= bit;
        }
    }
}

/// Vertex limit for [`tree_atom`] (2^20 vertices).
pub const TREE_ATOM_MAX_K: usize = 21;

/// The tree k-atom T_k on 2^(k-1) vertices.
///
/// T_1 is a single vertex; T_{k+1} attaches a new leaf to every vertex of
/// T_k. Vertices of T_k keep their ids in T_{k+1}, the leaf attached to `v`
/// gets id `v + 2^(k-1)`.
pub fn tree_atom(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("tree atom needs k >= 1".into()));
    }
    if k > TREE_ATOM_MAX_K {
        return Err(Error::TooLarge {
            n: 1usize.checked_shl(k as u32 - 1).unwrap_or(usize::MAX),
            limit: 1 << (TREE_ATOM_MAX_K - 1),
        });
    }
    let mut edges = Vec::new();
    let mut size = 1usize;
    for _ in 1..k {
        for v in 0..size {
            edges.push((v, v + size));
        }
        size *= 2;
    }
    Graph::from_edges(size, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn first_fit_on_paths() {
        let p4 = path(4);
        let c = first_fit(&p4, &[0, 3, 1, 2]).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 1]);
        assert_eq!(c.num_colors(), 3);
        let c = first_fit(&p4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2]);
        assert_eq!(first_fit(&complete(3), &[2, 0, 1]).unwrap().num_colors(), 3);
    }

    #[test]
    fn first_fit_rejects_non_permutations() {
        let p4 = path(4);
        assert!(matches!(first_fit(&p4, &[0, 1, 1, 2]), Err(Error::NotAPermutation { .. })));
        assert!(matches!(first_fit(&p4, &[0, 1, 2]), Err(Error::NotAPermutation { .. })));
        assert!(matches!(first_fit(&p4, &[0, 1, 2, 4]), Err(Error::NotAPermutation { .. })));
    }

    #[test]
    fn grundy_validation() {
        let c6 = cycle(6);
        assert!(is_grundy_coloring(&c6, &Coloring::new(vec![1, 2, 3, 1, 2, 3]).unwrap()));
        let p4 = path(4);
        assert!(is_grundy_coloring(&p4, &Coloring::new(vec![1, 2, 1, 2]).unwrap()));
        let bad = Coloring::new(vec![1, 3, 1, 2]).unwrap();
        assert!(!is_grundy_coloring(&p4, &bad));
        assert!(grundy_defect(&p4, bad.colors()).unwrap().contains("no neighbor of color 2"));
        assert!(grundy_defect(&p4, &[1, 1, 2, 1]).unwrap().contains("share color"));
        assert!(grundy_defect(&p4, &[1, 2]).is_some());
        assert!(grundy_defect(&p4, &[1, 0, 1, 2]).is_some());
        assert!(Coloring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn bruteforce_values() {
        assert_eq!(grundy_number_bruteforce(&path(4)).unwrap().k, 3);
        assert_eq!(grundy_number_bruteforce(&cycle(4)).unwrap().k, 2);
        assert_eq!(grundy_number_bruteforce(&cycle(6)).unwrap().k, 3);
        for n in 1..=6 {
            assert_eq!(grundy_number_bruteforce(&complete(n)).unwrap().k, n);
        }
        assert!(matches!(
            grundy_number_bruteforce(&petersen()),
            Err(Error::TooLarge { n: 10, limit: 9 })
        ));
        assert_eq!(grundy_number_bruteforce_with_limit(&petersen(), 10).unwrap().k, 4);
    }

    #[test]
    fn exact_values() {
        let check = |g: &Graph, k: usize| {
            let w = grundy_number_exact(g).unwrap();
            assert_eq!(w.k, k, "{g:?}");
            assert!(w.exact);
            assert!(is_grundy_coloring(g, &w.coloring));
            let ordering = w.ordering.as_ref().unwrap();
            assert_eq!(first_fit(g, ordering).unwrap().num_colors(), k);
        };
        check(&petersen(), 4);
        check(&cycle(6), 3);
        check(&path(4), 3);
        check(&cycle(4), 2);
        check(&complete(7), 7);
        check(&complete_bipartite(3, 3), 2);
        check(&Graph::empty(3), 1);
        let mut k33_minus = Vec::new();
        for x in 0..3 {
            for y in 3..6 {
                if !(x == 1 && y == 4) && !(x == 2 && y == 5) {
                    k33_minus.push((x, y));
                }
            }
        }
        check(&Graph::from_edges(6, &k33_minus).unwrap(), 4);
    }

    #[test]
    fn exact_without_domination_bounds_agrees() {
        let options = GrundyOptions {
            use_domination_bounds: false,
            budget: None,
        };
        for g in [petersen(), cycle(7), tree_atom(5).unwrap()] {
            assert_eq!(
                grundy_number_with(&g, &options).unwrap().k,
                grundy_number_exact(&g).unwrap().k
            );
        }
    }

    #[test]
    fn tiny_budget_brackets() {
        let options = GrundyOptions {
            use_domination_bounds: false,
            budget: Some(Duration::ZERO),
        };
        let g = crate::generators::random_graph(40, 0.5, 1).unwrap();
        let w = grundy_number_with(&g, &options).unwrap();
        assert!(w.k <= w.upper_bound);
        assert!(is_grundy_coloring(&g, &w.coloring));
        if !w.exact {
            let json = serde_json::to_value(&w).unwrap();
            assert_eq!(json["exact"], false);
            assert!(json["upper_bound"].is_u64());
        }
    }

    #[test]
    fn witness_json() {
        let w = grundy_number_exact(&path(4)).unwrap();
        let json = serde_json::to_value(&w).unwrap();
        assert_eq!(json["k"], 3);
        assert_eq!(json["exact"], true);
        assert_eq!(json["colors"].as_array().unwrap().len(), 4);
        assert!(json["ordering"].is_array());
        assert!(json.get("upper_bound").is_none());
    }

    #[test]
    fn tree_atoms() {
        assert_eq!(tree_atom(1).unwrap(), Graph::empty(1));
        assert_eq!(tree_atom(2).unwrap(), complete(2));
        let t3 = tree_atom(3).unwrap();
        let mut degrees = t3.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
        assert!(t3.is_connected());
        assert_eq!(tree_atom(5).unwrap().n(), 16);
        assert_eq!(tree_atom(5).unwrap().m(), 15);
        assert!(tree_atom(0).is_err());
        assert!(matches!(tree_atom(TREE_ATOM_MAX_K + 1), Err(Error::TooLarge { .. })));
        for k in 1..=6 {
            assert_eq!(grundy_number_exact(&tree_atom(k).unwrap()).unwrap().k, k);
        }
    }
}
