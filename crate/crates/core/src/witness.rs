//! Leveled demand trees behind the girth bounds, their star partitions, and
//! the binomial counts the bounds are derived from.
//!
//! A vertex of color `j` in a Grundy coloring needs neighbors of colors
//! `1..j`. Starting from a vertex of the top color `k` and expanding these
//! demands level by level gives a tree whose level `i + 1` is indexed by the
//! `i`-subsets of `{1, ..., k-1}`. The doubled variant starts from an edge
//! whose ends have colors `k` and `k - 1`; both ends then demand colors
//! `1..k-1`, giving twice the subsets of `{1, ..., k-2}` per level.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::domination::{StarPart, StarPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-count limit for [`witness_tree`].
pub const WITNESS_MAX_VERTICES: u128 = 1 << 22;

/// Largest Grundy parameter accepted; keeps every binomial within `u128`.
pub const WITNESS_MAX_K: usize = 100;

fn check_k(k: usize) -> Result<()> {
    if k > WITNESS_MAX_K {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds {WITNESS_MAX_K}")));
    }
    Ok(())
}

/// Exact binomial coefficient; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step.
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// A demand tree with its levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeveledWitness {
    pub graph: Graph,
    /// 1-based level of each vertex.
    pub level_of: Vec<usize>,
    pub demanded_color: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    /// The level-1 vertices: one root, or two adjacent roots when doubled.
    pub roots: Vec<usize>,
    pub depth: usize,
    pub k: usize,
    pub doubled: bool,
}

impl LeveledWitness {
    /// Vertex ids per level, level 1 first.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.depth];
        for (v, &l) in self.level_of.iter().enumerate() {
            levels[l - 1].push(v);
        }
        levels
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.parent[u] == Some(v))
            .collect()
    }

    fn child_colors(&self, v: usize) -> std::ops::Range<usize> {
        let c = self.demanded_color[v];
        // In the doubled tree the top root already sees color k - 1 on the
        // other root.
        if self.doubled && self.parent[v].is_none() && c == self.k {
            1..self.k - 1
        } else {
            1..c
        }
    }

    /// JSON-ready description: levels, per-vertex colors and parents.
    pub fn dump(&self) -> WitnessDump {
        WitnessDump {
            k: self.k,
            depth: self.depth,
            doubled: self.doubled,
            roots: self.roots.clone(),
            levels: self.levels(),
            vertices: (0..self.graph.n())
                .map(|v| WitnessVertex {
                    id: v,
                    level: self.level_of[v],
                    demanded_color: self.demanded_color[v],
                    parent: self.parent[v],
                })
                .collect(),
        }
    }

    /// Graphviz rendering; vertices are labelled with their demanded color
    /// and each level is drawn on one rank. Parts of `partition`, if given,
    /// become clusters.
    pub fn to_dot(&self, partition: Option<&StarPartition>) -> String {
        let mut s = String::from("graph H {\n  node [shape=circle];\n");
        for v in 0..self.graph.n() {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", self.demanded_color[v]);
        }
        for (i, level) in self.levels().iter().enumerate() {
            let ids: Vec<String> = level.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "  {{ rank=same; /* L{} */ {} }}", i + 1, ids.join("; "));
        }
        if let Some(p) = partition {
            for (i, part) in p.parts.iter().enumerate() {
                let ids: Vec<String> = part.members.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    s,
                    "  subgraph cluster_{i} {{ color=red; {}; }}",
                    ids.join("; ")
                );
                let _ = writeln!(s, "  {} [style=bold];", part.apex);
            }
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessVertex {
    pub id: usize,
    pub level: usize,
    pub demanded_color: usize,
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDump {
    pub k: usize,
    pub depth: usize,
    pub doubled: bool,
    pub roots: Vec<usize>,
    pub levels: Vec<Vec<usize>>,
    pub vertices: Vec<WitnessVertex>,
}

/// Closed-form level sizes: `C(k-1, i)` for level `i + 1`, or `2 C(k-2, i)`
/// when doubled.
pub fn level_sizes_closed_form(k: usize, depth: usize, doubled: bool) -> Vec<u128> {
    (0..depth as u64)
        .map(|i| {
            if doubled {
                2 * binomial(k as u64 - 2, i)
            } else {
                binomial(k as u64 - 1, i)
            }
        })
        .collect()
}

/// Builds the demand tree with `depth` levels.
///
/// Requires `k >= 2` (`k >= 3` when doubled) and `depth >= 1`. Level 1 holds
/// the root(s); every vertex of demanded color `j` gets children demanding
/// `1, ..., j-1`. Within a level, vertices are numbered by descending
/// demanded color, then by parent id.
pub fn witness_tree(k: usize, depth: usize, doubled: bool) -> Result<LeveledWitness> {
    let min_k = if doubled { 3 } else { 2 };
    if k < min_k || depth == 0 {
        return Err(Error::InvalidParameter(format!(
            "witness tree needs k >= {min_k} and depth >= 1, got k = {k}, depth = {depth}"
        )));
    }
    check_k(k)?;
    if depth > WITNESS_MAX_K + 1 {
        return Err(Error::InvalidParameter(format!("depth = {depth} exceeds {}", WITNESS_MAX_K + 1)));
    }
    let total: u128 = level_sizes_closed_form(k, depth, doubled).iter().sum();
    if total > WITNESS_MAX_VERTICES {
        return Err(Error::TooLarge {
            n: usize::try_from(total).unwrap_or(usize::MAX),
            limit: WITNESS_MAX_VERTICES as usize,
        });
    }

    let mut w = LeveledWitness {
        graph: Graph::empty(0),
        level_of: Vec::new(),
        demanded_color: Vec::new(),
        parent: Vec::new(),
        roots: Vec::new(),
        depth,
        k,
        doubled,
    };
    let mut edges = Vec::new();
    let root_colors: &[usize] = if doubled { &[k, k - 1] } else { &[k] };
    for (i, &c) in root_colors.iter().enumerate() {
        w.roots.push(i);
        w.level_of.push(1);
        w.demanded_color.push(c);
        w.parent.push(None);
    }
    if doubled {
        edges.push((0, 1));
    }

    let mut frontier = w.roots.clone();
    for level in 2..=depth {
        let mut next: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&p| w.child_colors(p).map(move |c| (c, p)))
            .collect();
        next.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        frontier.clear();
        for (color, parent) in next {
            let id = w.level_of.len();
            w.level_of.push(level);
            w.demanded_color.push(color);
            w.parent.push(Some(parent));
            edges.push((parent, id));
            frontier.push(id);
        }
    }
    w.graph = Graph::from_edges(w.level_of.len(), &edges)?;
    Ok(w)
}

/// Residue class of the girth that selects the star-partition pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GirthCase {
    #[serde(rename = "g=1 mod 4")]
    OneMod4,
    #[serde(rename = "g=3 mod 4")]
    ThreeMod4,
    #[serde(rename = "g=0 mod 4")]
    ZeroMod4,
    #[serde(rename = "g=2 mod 4")]
    TwoMod4,
}

impl GirthCase {
    pub fn of(girth: usize) -> Self {
        match girth % 4 {
            0 => GirthCase::ZeroMod4,
            1 => GirthCase::OneMod4,
            2 => GirthCase::TwoMod4,
            _ => GirthCase::ThreeMod4,
        }
    }

    pub fn doubled(self) -> bool {
        matches!(self, GirthCase::ZeroMod4 | GirthCase::TwoMod4)
    }
}

/// Number of levels of the demand tree used for girth `g`.
pub fn depth_for_girth(girth: usize) -> usize {
    if girth % 2 == 1 {
        girth.div_ceil(2)
    } else {
        girth / 2
    }
}

/// Star partition of the demand tree for girth `g >= 5`.
///
/// * g ≡ 3, 0 (mod 4): every vertex on an odd level heads a star with its
///   children.
/// * g ≡ 1, 2 (mod 4): each root forms a star with its color-1 child; every
///   other vertex on an even level heads a star with its children.
pub fn witness_star_partition(w: &LeveledWitness, girth: usize) -> Result<StarPartition> {
    if girth < 5 {
        return Err(Error::InvalidParameter(format!("girth must be >= 5, got {girth}")));
    }
    let case = GirthCase::of(girth);
    let depth = depth_for_girth(girth);
    if w.depth != depth || w.doubled != case.doubled() {
        return Err(Error::InvalidParameter(format!(
            "girth {girth} needs a {} tree of depth {depth}, got {} depth {}",
            if case.doubled() { "doubled" } else { "single-root" },
            if w.doubled { "doubled" } else { "single-root" },
            w.depth
        )));
    }
    let odd_apexes = matches!(case, GirthCase::ThreeMod4 | GirthCase::ZeroMod4);
    let mut parts = Vec::new();
    let mut absorbed = vec![false; w.graph.n()];
    if !odd_apexes {
        for &r in &w.roots {
            let partner = w
                .children(r)
                .into_iter()
                .find(|&c| w.demanded_color[c] == 1)
                .expect("roots demand color 1 when depth >= 2");
            absorbed[partner] = true;
            parts.push(StarPart {
                apex: r,
                members: vec![r.min(partner), r.max(partner)],
            });
        }
    }
    for v in 0..w.graph.n() {
        let on_apex_level = (w.level_of[v] % 2 == 1) == odd_apexes;
        if !on_apex_level || absorbed[v] || (!odd_apexes && w.parent[v].is_none()) {
            continue;
        }
        let mut members = w.children(v);
        members.push(v);
        members.sort_unstable();
        parts.push(StarPart { apex: v, members });
    }
    parts.sort_by_key(|p| p.apex);
    Ok(StarPartition { parts })
}

/// Closed-form |V(H)| and |S'| for a (k, g) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountIdentity {
    pub k: usize,
    pub g: usize,
    pub case: GirthCase,
    pub v_h: u128,
    pub s_prime: u128,
    /// `v_h - s_prime`, the amount the bound argument charges to n - γ.
    pub uncovered: u128,
}

/// Evaluates the counting formulas for Grundy parameter `k` and girth `g`,
/// restricted to the range the girth bounds argue over: `g >= 5` with
/// `k >= (g + 3) / 2` (odd g) or `k > (g + 2) / 2` (even g).
pub fn count_identities(k: usize, g: usize) -> Result<CountIdentity> {
    if g >= 5 && g % 2 == 1 && 2 * k < g + 3 {
        return Err(Error::InvalidParameter(format!(
            "odd girth {g} needs k >= (g + 3) / 2 = {}, got {k}",
            (g + 3) / 2
        )));
    }
    if g >= 5 && g.is_multiple_of(2) && 2 * k <= g + 2 {
        return Err(Error::InvalidParameter(format!(
            "even girth {g} needs k > (g + 2) / 2 = {}, got {k}",
            (g + 2) / 2
        )));
    }
    closed_form_counts(k, g)
}

/// The counting formulas for any `g >= 5` and any `k` the demand tree can be
/// built for (`k >= 2`, or `k >= 3` for even g). Levels past the tree's
/// natural height contribute zero terms, as in the construction.
pub fn closed_form_counts(k: usize, g: usize) -> Result<CountIdentity> {
    if g < 5 {
        return Err(Error::InvalidParameter(format!("girth must be >= 5, got {g}")));
    }
    check_k(k)?;
    let case = GirthCase::of(g);
    let min_k = if case.doubled() { 3 } else { 2 };
    if k < min_k {
        return Err(Error::InvalidParameter(format!("girth {g} needs k >= {min_k}, got {k}")));
    }
    let (k64, g64) = (k as u64, g as u64);
    let (v_h, s_prime) = if g % 2 == 1 {
        let v_h = (0..=(g64 - 1) / 2).map(|i| binomial(k64 - 1, i)).sum();
        let s_prime = match case {
            GirthCase::ThreeMod4 => (0..=(g64 - 3) / 4).map(|i| binomial(k64 - 1, 2 * i)).sum(),
            _ => (1..=(g64 - 1) / 4).map(|i| binomial(k64 - 1, 2 * i - 1)).sum(),
        };
        (v_h, s_prime)
    } else {
        let v_h: u128 = 2 * (0..=(g64 - 2) / 2).map(|i| binomial(k64 - 2, i)).sum::<u128>();
        let s_prime = match case {
            GirthCase::ZeroMod4 => 2 * (0..=(g64 - 4) / 4).map(|i| binomial(k64 - 2, 2 * i)).sum::<u128>(),
            _ => 2 * (1..=(g64 - 2) / 4).map(|i| binomial(k64 - 2, 2 * i - 1)).sum::<u128>(),
        };
        (v_h, s_prime)
    };
    Ok(CountIdentity {
        k,
        g,
        case,
        v_h,
        s_prime,
        uncovered: v_h - s_prime,
    })
}

/// Checks `(a / b)^b <= C(a, b)` exactly, as `a^b <= b^b C(a, b)`.
pub fn binomial_lower_bound_check(a: u64, b: u64) -> Result<bool> {
    if b == 0 || b > a {
        return Err(Error::InvalidParameter(format!("need 1 <= b <= a, got a = {a}, b = {b}")));
    }
    let exp = u32::try_from(b).map_err(|_| Error::InvalidParameter(format!("b = {b} too large")))?;
    let mut c = BigUint::from(1u32);
    for i in 0..b {
        c = c * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    let lhs = BigUint::from(a).pow(exp);
    let rhs = BigUint::from(b).pow(exp) * c;
    Ok(lhs <= rhs)
}

/// Canonical string of an unrooted tree (AHU encoding rooted at the center,
/// minimized over the two centers when there are two). `None` if `g` is not
/// a tree.
pub fn tree_canonical_form(g: &Graph) -> Option<String> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 || !g.is_connected() {
        return None;
    }
    let mut degree = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in g.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    fn encode(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(g, u, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(g, c, usize::MAX)).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tree_atom;
    use crate::domination::is_star_partition;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn small_trees() {
        let w = witness_tree(4, 4, false).unwrap();
        assert_eq!(w.graph.n(), 8);
        assert_eq!(w.levels().iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
        assert_eq!(
            tree_canonical_form(&w.graph),
            tree_canonical_form(&tree_atom(4).unwrap())
        );

        let star = witness_tree(4, 2, false).unwrap();
        assert_eq!(star.graph.n(), 4);
        assert_eq!(star.demanded_color, vec![4, 3, 2, 1]);
        assert_eq!(star.graph.degree(0), 3);

        let doubled = witness_tree(5, 3, true).unwrap();
        assert_eq!(doubled.graph.n(), 14);
        assert_eq!(doubled.roots, vec![0, 1]);
        assert!(doubled.graph.has_edge(0, 1));
        assert_eq!(
            doubled.levels().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![2, 6, 6]
        );

        assert!(witness_tree(1, 3, false).is_err());
        assert!(witness_tree(2, 3, true).is_err());
        assert!(witness_tree(4, 0, false).is_err());
        assert!(matches!(witness_tree(40, 40, false), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn level_ordering() {
        let w = witness_tree(4, 3, false).unwrap();
        let levels = w.levels();
        let colors: Vec<usize> = levels[2].iter().map(|&v| w.demanded_color[v]).collect();
        assert_eq!(colors, vec![2, 1, 1]);
        let parents: Vec<usize> = levels[2].iter().map(|&v| w.parent[v].unwrap()).collect();
        // Level 2 is [3, 2, 1] as ids [1, 2, 3]; the color-3 vertex (id 1)
        // demands 1 and 2, the color-2 vertex (id 2) demands 1.
        assert_eq!(parents, vec![1, 1, 2]);
    }

    #[test]
    fn star_partitions_match_counts() {
        for (k, g, v_h, s_prime) in [(4, 7, 8, 4), (4, 5, 7, 3), (5, 8, 16, 8), (5, 6, 14, 6)] {
            let c = closed_form_counts(k, g).unwrap();
            assert_eq!((c.v_h, c.s_prime), (v_h, s_prime), "k={k} g={g}");
            assert_eq!(c.uncovered, v_h - s_prime);
            let w = witness_tree(k, depth_for_girth(g), g % 2 == 0).unwrap();
            let p = witness_star_partition(&w, g).unwrap();
            assert_eq!(w.graph.n() as u128, v_h);
            assert_eq!(p.len() as u128, s_prime);
            assert!(is_star_partition(&w.graph, &p));
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(count_identities(4, 6).is_err());
        assert!(count_identities(4, 9).is_err());
        assert!(count_identities(4, 3).is_err());
        let w = witness_tree(4, 3, false).unwrap();
        assert!(witness_star_partition(&w, 7).is_err());
        assert!(witness_star_partition(&w, 6).is_err());
        assert!(witness_star_partition(&w, 5).is_ok());
    }

    #[test]
    fn binomial_inequality() {
        assert!(binomial_lower_bound_check(6, 3).unwrap());
        assert!(binomial_lower_bound_check(7, 7).unwrap());
        assert!(binomial_lower_bound_check(5, 2).unwrap());
        assert!(binomial_lower_bound_check(3, 0).is_err());
        assert!(binomial_lower_bound_check(3, 4).is_err());
        for a in 1..=30 {
            for b in 1..=a {
                assert!(binomial_lower_bound_check(a, b).unwrap());
            }
        }
    }

    #[test]
    fn canonical_forms() {
        assert!(tree_canonical_form(&crate::generators::cycle(4)).is_none());
        let p4 = crate::generators::path(4);
        let relabelled = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_form(&p4), tree_canonical_form(&relabelled));
        let star = crate::generators::complete_bipartite(1, 3);
        assert_ne!(tree_canonical_form(&p4), tree_canonical_form(&star));
    }

    #[test]
    fn dump_and_dot() {
        let w = witness_tree(4, 4, false).unwrap();
        let json = serde_json::to_value(w.dump()).unwrap();
        assert_eq!(json["levels"].as_array().unwrap().len(), 4);
        assert_eq!(json["vertices"][0]["parent"], serde_json::Value::Null);
        let p = witness_star_partition(&w, 7).unwrap();
        let dot = w.to_dot(Some(&p));
        assert!(dot.starts_with("graph H {"));
        assert_eq!(dot.matches("subgraph cluster_").count(), 4);
    }
}
