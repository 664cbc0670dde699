//! Orientations, shortcuts and exhaustive orientation searches.
//!
//! An orientation is semi-transitive when it is acyclic and has no shortcut:
//! no arc `s -> t` together with a directed path from `s` to `t` whose vertex
//! set contains a non-adjacent pair. A graph is word-representable iff it has
//! a semi-transitive orientation, which is what [`oracle_word_representable`]
//! decides by search.
//!
//! Orientations are limited to graphs with at most 64 vertices so that
//! reachability fits in one `u64` per vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

const MAX_ORIENTED: usize = 64;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Size caps for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Orientation searches refuse graphs with more vertices.
    pub max_vertices: usize,
    /// Orientation searches refuse graphs with more edges.
    pub max_edges: usize,
    /// Certificate search refuses a Y side larger than this (labelings are
    /// enumerated by brute force).
    pub max_labeling_side: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 12,
            max_edges: 66,
            max_labeling_side: 9,
        }
    }
}

impl SearchLimits {
    pub fn check_graph(&self, g: &SimpleGraph) -> Result<()> {
        if g.n() > self.max_vertices.min(MAX_ORIENTED) {
            return Err(Error::CapExceeded {
                what: "vertices",
                value: g.n(),
                cap: self.max_vertices.min(MAX_ORIENTED),
            });
        }
        let m = g.edge_count();
        if m > self.max_edges {
            return Err(Error::CapExceeded {
                what: "edges",
                value: m,
                cap: self.max_edges,
            });
        }
        Ok(())
    }
}

/// A direction for every edge of a base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: SimpleGraph,
    out: Vec<u64>,
}

impl Orientation {
    /// Builds an orientation from a list of arcs; every edge of `base` must
    /// appear exactly once and no arc may be a non-edge.
    pub fn from_arcs(base: SimpleGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = base.n();
        if n > MAX_ORIENTED {
            return Err(Error::CapExceeded {
                what: "vertices",
                value: n,
                cap: MAX_ORIENTED,
            });
        }
        let mut out = vec![0u64; n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if !base.adjacent(u, v) {
                return Err(Error::InvalidOrientation(format!(
                    "{u} -> {v} is not an edge"
                )));
            }
            if out[u] & bit(v) != 0 || out[v] & bit(u) != 0 {
                return Err(Error::InvalidOrientation(format!(
                    "edge {{{u}, {v}}} oriented twice"
                )));
            }
            out[u] |= bit(v);
        }
        let oriented: usize = out.iter().map(|m| m.count_ones() as usize).sum();
        if oriented != base.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} of {} edges oriented",
                oriented,
                base.edge_count()
            )));
        }
        Ok(Orientation { base, out })
    }

    /// Every edge points from the endpoint earlier in `order` to the later one.
    pub fn from_order(base: SimpleGraph, order: &[usize]) -> Self {
        let n = base.n();
        assert!(n <= MAX_ORIENTED && order.len() == n);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u64; n];
        for (u, v) in base.edges() {
            if pos[u] < pos[v] {
                out[u] |= bit(v);
            } else {
                out[v] |= bit(u);
            }
        }
        Orientation { base, out }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        (0..self.n())
            .filter(|&u| self.out[u] & bit(v) != 0)
            .fold(0, |m, u| m | bit(u))
    }

    /// Arcs sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| bits(self.out[u]).map(move |v| (u, v)))
            .collect()
    }

    pub fn reversed(&self) -> Orientation {
        let arcs: Vec<_> = self.arcs().into_iter().map(|(u, v)| (v, u)).collect();
        Orientation::from_arcs(self.base.clone(), &arcs).expect("reversal keeps every edge")
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<u32> = (0..n).map(|v| self.in_mask(v).count_ones()).collect();
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop() {
            order.push(u);
            for v in bits(self.out[u]) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// `u -> v` and `v -> z` always imply `u -> z`.
    pub fn is_transitive(&self) -> bool {
        (0..self.n()).all(|u| bits(self.out[u]).all(|v| self.out[v] & !self.out[u] == 0))
    }

    // Strict descendants of each vertex; requires acyclicity.
    fn descendants(&self) -> Result<Vec<u64>> {
        let order = self.topological_order().ok_or(Error::NotAcyclic)?;
        let mut desc = vec![0u64; self.n()];
        for &u in order.iter().rev() {
            let mut d = 0;
            for v in bits(self.out[u]) {
                d |= bit(v) | desc[v];
            }
            desc[u] = d;
        }
        Ok(desc)
    }

    /// True iff some arc `s -> t` has an `s`..`t` path through a non-adjacent
    /// pair. Errors on cyclic input.
    pub fn has_shortcut(&self) -> Result<bool> {
        let desc = self.descendants()?;
        let n = self.n();
        for s in 0..n {
            for t in bits(self.out[s]) {
                // u, v non-adjacent with s ~> u ~> v ~> t (reflexive at the ends)
                let from_s = desc[s] | bit(s);
                for u in bits(from_s) {
                    let cand = desc[u] & !self.base.mask(u);
                    for v in bits(cand) {
                        if v == t || desc[v] & bit(t) != 0 {
                            return Ok(true);
                        }
                    }
                }
            }
        }
        Ok(false)
    }

    /// The lexicographically least shortcut path (compared as vertex
    /// sequences), or `None` when the orientation is shortcut-free.
    pub fn find_shortcut(&self) -> Result<Option<ShortcutWitness>> {
        let desc = self.descendants()?;
        if !self.has_shortcut()? {
            return Ok(None);
        }
        let adj: Vec<u64> = (0..self.n()).map(|v| self.base.mask(v)).collect();
        for s in 0..self.n() {
            let targets = self.out[s];
            if targets == 0 {
                continue;
            }
            let mut walk = ShortcutWalk {
                orient: self,
                desc: &desc,
                adj: &adj,
                targets,
                path: vec![s],
            };
            if walk.dfs(bit(s), true) {
                return Ok(Some(ShortcutWitness::from_path(walk.path, &self.base)));
            }
        }
        unreachable!("has_shortcut found a shortcut the path walk did not")
    }

    pub fn is_semi_transitive(&self) -> bool {
        matches!(self.has_shortcut(), Ok(false))
    }

    /// Lines `u -> v`, one per arc.
    pub fn to_text(&self) -> String {
        self.arcs()
            .iter()
            .map(|(u, v)| format!("{u} -> {v}\n"))
            .collect()
    }
}

struct ShortcutWalk<'a> {
    orient: &'a Orientation,
    desc: &'a [u64],
    adj: &'a [u64],
    targets: u64,
    path: Vec<usize>,
}

impl ShortcutWalk<'_> {
    fn dfs(&mut self, set: u64, clique: bool) -> bool {
        let u = *self.path.last().unwrap();
        for v in bits(self.orient.out[u]) {
            let set2 = set | bit(v);
            let clique2 = clique && set & !self.adj[v] == 0;
            self.path.push(v);
            if self.targets & bit(v) != 0 && !clique2 {
                return true;
            }
            if self.completable(set2, clique2, v) && self.dfs(set2, clique2) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    // Whether the current path can be extended from `u` into a shortcut.
    fn completable(&self, set: u64, clique: bool, u: usize) -> bool {
        let reach = self.desc[u];
        let targets = self.targets & reach;
        if targets == 0 {
            return false;
        }
        if !clique {
            return true;
        }
        let to_target = |q: usize| (self.desc[q] | bit(q)) & targets != 0;
        for q in bits(reach) {
            if !to_target(q) {
                continue;
            }
            if set & !self.adj[q] != 0 {
                return true;
            }
        }
        for q1 in bits(reach) {
            for q2 in bits(self.desc[q1] & !self.adj[q1]) {
                if to_target(q2) {
                    return true;
                }
            }
        }
        false
    }
}

/// A directed path whose endpoints are joined by an arc while two of its
/// vertices are non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutWitness {
    pub path: Vec<usize>,
    pub shortcut_edge: (usize, usize),
    pub missing_pair: (usize, usize),
}

impl ShortcutWitness {
    fn from_path(path: Vec<usize>, g: &SimpleGraph) -> Self {
        let mut missing = None;
        'outer: for i in 0..path.len() {
            for j in i + 1..path.len() {
                if !g.adjacent(path[i], path[j]) {
                    missing = Some((path[i], path[j]));
                    break 'outer;
                }
            }
        }
        ShortcutWitness {
            shortcut_edge: (path[0], *path.last().unwrap()),
            missing_pair: missing.expect("shortcut path has a non-adjacent pair"),
            path,
        }
    }

    /// Checks the witness against an orientation.
    pub fn validate(&self, o: &Orientation) -> bool {
        let p = &self.path;
        let n = o.n();
        if p.len() < 4 || p.iter().any(|&v| v >= n) {
            return false;
        }
        let arcs_ok = p.windows(2).all(|w| o.has_arc(w[0], w[1]));
        let (s, t) = self.shortcut_edge;
        let (a, b) = self.missing_pair;
        arcs_ok
            && s == p[0]
            && t == *p.last().unwrap()
            && o.has_arc(s, t)
            && p.contains(&a)
            && p.contains(&b)
            && a != b
            && !o.base().adjacent(a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    SemiTransitive,
    Transitive,
}

/// Result of an exhaustive orientation search.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub orientation: Option<Orientation>,
    /// Number of prefix extensions accepted during the search.
    pub nodes: u64,
}

// Acyclic orientations are enumerated through their greedy (lexicographically
// least) topological orders: a vertex is appended only if no smaller vertex
// could have been placed at any earlier position it was already available
// at. Every acyclic orientation is visited exactly once. When a vertex `t` is
// appended it is a sink among the placed vertices, so every shortcut of the
// placed subgraph that `t` completes has `t` as its sink and is checked then.
struct OrderSearch {
    n: usize,
    adj: Vec<u64>,
    target: Target,
    order: Vec<usize>,
    placed: u64,
    anc: Vec<u64>,
    nodes: u64,
}

impl OrderSearch {
    fn new(g: &SimpleGraph, target: Target) -> Self {
        let n = g.n();
        OrderSearch {
            n,
            adj: (0..n).map(|v| g.mask(v)).collect(),
            target,
            order: Vec::with_capacity(n),
            placed: 0,
            anc: vec![0; n],
            nodes: 0,
        }
    }

    fn canonical(&self, t: usize) -> bool {
        for &p in self.order.iter().rev() {
            if self.adj[t] & bit(p) != 0 {
                break;
            }
            if p > t {
                return false;
            }
        }
        true
    }

    fn accepts(&self, t: usize, preds: u64, anc_t: u64) -> bool {
        match self.target {
            Target::Transitive => anc_t == preds,
            Target::SemiTransitive => {
                for v in bits(anc_t | bit(t)) {
                    let anc_v = if v == t { anc_t } else { self.anc[v] };
                    for u in bits(anc_v & !self.adj[v]) {
                        if (self.anc[u] | bit(u)) & preds != 0 {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn run(&mut self) -> bool {
        if self.order.len() == self.n {
            return true;
        }
        for t in 0..self.n {
            if self.placed & bit(t) != 0 || !self.canonical(t) {
                continue;
            }
            let preds = self.adj[t] & self.placed;
            let anc_t = bits(preds).fold(0, |m, p| m | bit(p) | self.anc[p]);
            if !self.accepts(t, preds, anc_t) {
                continue;
            }
            self.nodes += 1;
            self.anc[t] = anc_t;
            self.placed |= bit(t);
            self.order.push(t);
            if self.run() {
                return true;
            }
            self.order.pop();
            self.placed &= !bit(t);
        }
        false
    }
}

fn search(g: &SimpleGraph, limits: &SearchLimits, target: Target) -> Result<SearchOutcome> {
    limits.check_graph(g)?;
    let mut s = OrderSearch::new(g, target);
    let found = s.run();
    Ok(SearchOutcome {
        orientation: found.then(|| Orientation::from_order(g.clone(), &s.order)),
        nodes: s.nodes,
    })
}

/// Exhaustive search for a semi-transitive orientation, with search statistics.
pub fn search_semi_transitive(g: &SimpleGraph, limits: &SearchLimits) -> Result<SearchOutcome> {
    search(g, limits, Target::SemiTransitive)
}

/// First semi-transitive orientation in search order, if any.
pub fn find_semi_transitive(g: &SimpleGraph, limits: &SearchLimits) -> Result<Option<Orientation>> {
    Ok(search_semi_transitive(g, limits)?.orientation)
}

/// First transitive orientation in search order; present iff `g` is a
/// comparability graph.
pub fn find_transitive(g: &SimpleGraph, limits: &SearchLimits) -> Result<Option<Orientation>> {
    Ok(search(g, limits, Target::Transitive)?.orientation)
}

pub fn oracle_word_representable(g: &SimpleGraph, limits: &SearchLimits) -> Result<bool> {
    Ok(find_semi_transitive(g, limits)?.is_some())
}
