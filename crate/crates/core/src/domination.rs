//! Dominating sets, star partitions, and the exact solvers for γ(G) and s(G).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One part of a star partition: an apex and the vertices it dominates
/// inside the part. `members` is sorted and contains the apex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StarPart {
    pub apex: usize,
    pub members: Vec<usize>,
}

/// A partition of V(G) into parts that each contain an apex adjacent to all
/// other vertices of the part. Singleton parts are stars with no leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StarPartition {
    pub parts: Vec<StarPart>,
}

impl StarPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn apexes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.apex).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationWitness {
    pub gamma: usize,
    /// Sorted ascending.
    pub set: Vec<usize>,
}

fn check_vertices(g: &Graph, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= g.n()) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: g.n() }),
        None => Ok(()),
    }
}

/// Every vertex outside `set` has a neighbor in `set`.
pub fn is_dominating_set(g: &Graph, set: &[usize]) -> Result<bool> {
    check_vertices(g, set)?;
    let mut dominated = vec![false; g.n()];
    for &d in set {
        dominated[d] = true;
        for &u in g.neighbors(d) {
            dominated[u] = true;
        }
    }
    Ok(dominated.into_iter().all(|b| b))
}

fn closed_masks(g: &Graph) -> Result<Vec<u64>> {
    Ok(g.adjacency_masks()?
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | (1u64 << v))
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Exact γ(G) by branch and bound (n <= 64).
///
/// Branches on the undominated vertex with the fewest allowed dominators.
/// Once a dominator has been tried, later sibling branches forbid it. The
/// bound is the larger of `ceil(undominated / max coverage)` and a greedy
/// packing of undominated vertices with pairwise disjoint dominator sets.
pub fn domination_number_exact(g: &Graph) -> Result<DominationWitness> {
    let closed = closed_masks(g)?;
    let n = g.n();
    let full = full_mask(n);

    // Greedy start: repeatedly take the vertex covering most undominated ones.
    let mut greedy = 0u64;
    let mut dominated = 0u64;
    while dominated != full {
        let v = (0..n)
            .max_by_key(|&v| ((closed[v] & !dominated).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty graph while undominated vertices remain");
        greedy |= 1u64 << v;
        dominated |= closed[v];
    }

    struct Search<'a> {
        closed: &'a [u64],
        full: u64,
        best: u64,
    }
    impl Search<'_> {
        fn run(&mut self, chosen: u64, dominated: u64, forbidden: u64) {
            if dominated == self.full {
                if chosen.count_ones() < self.best.count_ones() {
                    self.best = chosen;
                }
                return;
            }
            let undominated = self.full & !dominated;
            let allowed = !forbidden;
            let mut max_cover = 0;
            let mut bits = allowed & self.full;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                max_cover = max_cover.max((self.closed[u] & undominated).count_ones());
            }
            if max_cover == 0 {
                return;
            }
            let mut by_options: Vec<(u32, u64)> = Vec::with_capacity(undominated.count_ones() as usize);
            let mut bits = undominated;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let options = self.closed[v] & allowed;
                if options == 0 {
                    return;
                }
                by_options.push((options.count_ones(), options));
            }
            by_options.sort_unstable_by_key(|&(count, _)| count);
            let mut packed = 0u32;
            let mut packed_union = 0u64;
            for &(_, options) in &by_options {
                if options & packed_union == 0 {
                    packed += 1;
                    packed_union |= options;
                }
            }
            let need = undominated.count_ones().div_ceil(max_cover).max(packed);
            if chosen.count_ones() + need >= self.best.count_ones() {
                return;
            }
            let pick_options = by_options[0].1;
            // An option whose coverage is contained in another option's can
            // be swapped for it in any solution, so it need not be tried.
            let cover = |u: usize| self.closed[u] & undominated;
            let all: Vec<usize> = mask_to_vec(pick_options);
            let mut options: Vec<usize> = all
                .iter()
                .copied()
                .filter(|&u| {
                    !all.iter().any(|&w| {
                        w != u && cover(u) & !cover(w) == 0 && (cover(w) != cover(u) || w < u)
                    })
                })
                .collect();
            options.sort_by_key(|&u| std::cmp::Reverse(cover(u).count_ones()));
            let mut forbidden = forbidden;
            for u in options {
                self.run(chosen | (1u64 << u), dominated | self.closed[u], forbidden);
                forbidden |= 1u64 << u;
            }
        }
    }
    let mut search = Search {
        closed: &closed,
        full,
        best: greedy,
    };
    search.run(0, 0, 0);
    let set = mask_to_vec(search.best);
    Ok(DominationWitness {
        gamma: set.len(),
        set,
    })
}

/// Largest n accepted by [`domination_number_bruteforce`].
pub const DOMINATION_BRUTEFORCE_LIMIT: usize = 24;

/// γ(G) as the minimum over all 2^n vertex subsets. Among minimum sets the
/// one with the smallest bitmask is returned.
pub fn domination_number_bruteforce(g: &Graph) -> Result<DominationWitness> {
    let n = g.n();
    if n > DOMINATION_BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: DOMINATION_BRUTEFORCE_LIMIT,
        });
    }
    let closed = closed_masks(g)?;
    let full = full_mask(n);
    let mut best: Option<u64> = None;
    for subset in 0..=full {
        if best.is_some_and(|b| subset.count_ones() >= b.count_ones()) {
            continue;
        }
        let mut dominated = 0;
        let mut bits = subset;
        while bits != 0 {
            dominated |= closed[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if dominated == full {
            best = Some(subset);
        }
    }
    let set = mask_to_vec(best.expect("V(G) dominates itself"));
    Ok(DominationWitness {
        gamma: set.len(),
        set,
    })
}

/// Turns a dominating set into a star partition with at most |D| parts.
///
/// Dominators are taken in ascending order; the part of `u` is `u` together
/// with its neighbors outside `D` not claimed by an earlier part. A part may
/// end up as the singleton `{u}`.
pub fn star_partition_from_dominating_set(g: &Graph, dominating: &[usize]) -> Result<StarPartition> {
    if !is_dominating_set(g, dominating)? {
        return Err(Error::NotDominating(format!(
            "{dominating:?} is not a dominating set"
        )));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::InvalidParameter(format!("vertex {v} is isolated")));
    }
    Ok(stars_around(g, dominating))
}

fn stars_around(g: &Graph, dominating: &[usize]) -> StarPartition {
    let mut dominators = dominating.to_vec();
    dominators.sort_unstable();
    dominators.dedup();
    let mut claimed = vec![false; g.n()];
    for &u in &dominators {
        claimed[u] = true;
    }
    let parts = dominators
        .iter()
        .map(|&u| {
            let mut members = vec![u];
            for &w in g.neighbors(u) {
                if !claimed[w] {
                    claimed[w] = true;
                    members.push(w);
                }
            }
            members.sort_unstable();
            StarPart { apex: u, members }
        })
        .collect();
    StarPartition { parts }
}

/// What is wrong with `partition` as a star partition of `g`, if anything.
pub fn star_partition_defect(g: &Graph, partition: &StarPartition) -> Option<String> {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, part) in partition.parts.iter().enumerate() {
        if !part.members.contains(&part.apex) {
            return Some(format!("part {i}: apex {} is not a member", part.apex));
        }
        for &v in &part.members {
            if v >= g.n() {
                return Some(format!("part {i}: vertex {v} out of range"));
            }
            if owner[v] != usize::MAX {
                return Some(format!("vertex {v} lies in parts {} and {i}", owner[v]));
            }
            owner[v] = i;
            if v != part.apex && !g.has_edge(part.apex, v) {
                return Some(format!(
                    "part {i}: apex {} is not adjacent to member {v}",
                    part.apex
                ));
            }
        }
    }
    owner
        .iter()
        .position(|&o| o == usize::MAX)
        .map(|v| format!("vertex {v} is in no part"))
}

pub fn is_star_partition(g: &Graph, partition: &StarPartition) -> bool {
    star_partition_defect(g, partition).is_none()
}

/// Minimum star partition found by direct search over partitions.
///
/// The search assigns the lowest unassigned vertex either to an existing part
/// whose apex is adjacent to it, to a new part headed by one of its
/// unassigned neighbors, or to a new part it heads itself. `stop_at`, if
/// given, ends the search as soon as a partition of that size is found; pass
/// a proven lower bound only.
pub fn star_partition_search(g: &Graph, stop_at: Option<usize>) -> Result<StarPartition> {
    let adj = g.adjacency_masks()?;
    let n = g.n();
    struct Search<'a> {
        adj: &'a [u64],
        max_degree: usize,
        /// part index of each assigned vertex
        part_of: Vec<usize>,
        apexes: Vec<usize>,
        best: Vec<usize>,
        best_apexes: Vec<usize>,
        best_len: usize,
        stop_at: usize,
        done: bool,
    }
    impl Search<'_> {
        fn run(&mut self, unassigned: u64, apex_mask: u64) {
            if self.done {
                return;
            }
            if unassigned == 0 {
                if self.apexes.len() < self.best_len {
                    self.best_len = self.apexes.len();
                    self.best = self.part_of.clone();
                    self.best_apexes = self.apexes.clone();
                    if self.best_len <= self.stop_at {
                        self.done = true;
                    }
                }
                return;
            }
            // Unassigned vertices with no apex neighbor need new parts.
            let mut stranded = 0u32;
            let mut bits = unassigned;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.adj[v] & apex_mask == 0 {
                    stranded += 1;
                }
            }
            let need = (stranded as usize).div_ceil(self.max_degree + 1);
            if self.apexes.len() + need >= self.best_len {
                return;
            }

            let v = unassigned.trailing_zeros() as usize;
            let bit = 1u64 << v;
            let rest = unassigned & !bit;

            // Join an existing part.
            let mut joinable = self.adj[v] & apex_mask;
            while joinable != 0 {
                let apex = joinable.trailing_zeros() as usize;
                joinable &= joinable - 1;
                self.part_of[v] = self.part_of[apex];
                self.run(rest, apex_mask);
            }

            // Join a new part headed by an unassigned neighbor.
            let mut heads: Vec<usize> = mask_to_vec(self.adj[v] & rest);
            heads.sort_by_key(|&u| std::cmp::Reverse((self.adj[u] & rest).count_ones()));
            for u in heads {
                let part = self.apexes.len();
                self.apexes.push(u);
                self.part_of[u] = part;
                self.part_of[v] = part;
                self.run(rest & !(1u64 << u), apex_mask | (1u64 << u));
                self.apexes.pop();
            }

            // Head a new part.
            let part = self.apexes.len();
            self.apexes.push(v);
            self.part_of[v] = part;
            self.run(rest, apex_mask | bit);
            self.apexes.pop();
        }
    }
    let mut search = Search {
        adj: &adj,
        max_degree: g.max_degree(),
        part_of: vec![usize::MAX; n],
        apexes: Vec::new(),
        best: (0..n).collect(),
        best_apexes: (0..n).collect(),
        best_len: n,
        stop_at: stop_at.unwrap_or(0),
        done: false,
    };
    if n > 0 && n > search.stop_at {
        search.run(full_mask(n), 0);
    }
    let mut parts: Vec<StarPart> = search
        .best_apexes
        .iter()
        .map(|&apex| StarPart {
            apex,
            members: Vec::new(),
        })
        .collect();
    for v in 0..n {
        parts[search.best[v]].members.push(v);
    }
    parts.sort_by_key(|p| p.apex);
    Ok(StarPartition { parts })
}

/// Exact s(G) with a witness.
///
/// The apexes of any star partition dominate G, so s(G) >= γ(G); the stars
/// around a minimum dominating set (isolated vertices as singletons) reach
/// it. [`star_partition_search`] computes s(G) without this argument.
pub fn star_partition_number_exact(g: &Graph) -> Result<(usize, StarPartition)> {
    let dom = domination_number_exact(g)?;
    let partition = stars_around(g, &dom.set);
    if partition.len() != dom.gamma || star_partition_defect(g, &partition).is_some() {
        return Err(Error::Internal(format!(
            "stars around a minimum dominating set give {} parts, γ = {}",
            partition.len(),
            dom.gamma
        )));
    }
    Ok((dom.gamma, partition))
}
