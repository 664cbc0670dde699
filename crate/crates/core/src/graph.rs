//! Simple graphs and the co-bipartite data model.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Upper bound on the number of clique partitions [`decompose`] returns.
pub const DECOMPOSITION_CAP: usize = 64;

/// Undirected simple graph on vertices `0..n`, one adjacency bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<u64>>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![vec![0; words_for(n)]; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range ids or loops; use [`try_add_edge`](Self::try_add_edge)
    /// for untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.adj[u][v / 64] |= 1 << (v % 64);
        self.adj[v][u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v / 64] &= !(1 << (v % 64));
        self.adj[v][u / 64] &= !(1 << (u % 64));
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency of `v` as a single word. Only valid for graphs with at most
    /// 64 vertices.
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v][0]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = Self::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = Self::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A graph with a partition of its vertices into two cliques.
///
/// `x` is the side whose vertices get ordered and classified; `y` is the side
/// carrying the labeling `y[0] -> 1, y[1] -> 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoBipartite {
    graph: SimpleGraph,
    x: Vec<usize>,
    y: Vec<usize>,
}

impl CoBipartite {
    pub fn new(graph: SimpleGraph, x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        let n = graph.n();
        let mut seen = vec![false; n];
        for &v in x.iter().chain(y.iter()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} in neither side"
            )));
        }
        if !graph.is_clique(&x) {
            return Err(Error::InvalidPartition("X is not a clique".into()));
        }
        if !graph.is_clique(&y) {
            return Err(Error::InvalidPartition("Y is not a clique".into()));
        }
        Ok(CoBipartite { graph, x, y })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// Same graph with the Y side relabeled in the given order.
    pub fn with_y_order(&self, y: Vec<usize>) -> Result<Self> {
        Self::new(self.graph.clone(), self.x.clone(), y)
    }

    pub fn matrix(&self) -> BipartiteMatrix {
        build_matrix(self)
    }
}

/// Cross adjacency: rows are X vertices, columns Y vertices in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    bits: Vec<Vec<bool>>,
}

impl BipartiteMatrix {
    pub fn row_vertices(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_vertices(&self) -> &[usize] {
        &self.cols
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.bits
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i][j]
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn row_of(&self, vertex: usize) -> Option<usize> {
        self.rows.iter().position(|&v| v == vertex)
    }

    pub fn col_of(&self, vertex: usize) -> Option<usize> {
        self.cols.iter().position(|&v| v == vertex)
    }
}

pub fn build_matrix(cb: &CoBipartite) -> BipartiteMatrix {
    let bits =
        cb.x.iter()
            .map(|&u| cb.y.iter().map(|&v| cb.graph.adjacent(u, v)).collect())
            .collect();
    BipartiteMatrix {
        rows: cb.x.clone(),
        cols: cb.y.clone(),
        bits,
    }
}

/// Shape of a 0/1 row, with 1-based column positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowShape {
    /// Ones exactly on `x..=y`, not all columns.
    Interval {
        x: usize,
        y: usize,
    },
    /// Ones exactly on `1..=x` and `y..=n`, with a gap between.
    CoInterval {
        x: usize,
        y: usize,
    },
    Full,
    Empty,
    Irregular,
}

impl RowShape {
    /// Inverse of [`row_shape`]; `None` for `Irregular`.
    pub fn expand(self, n: usize) -> Option<Vec<bool>> {
        let row = match self {
            RowShape::Interval { x, y } => (1..=n).map(|j| x <= j && j <= y).collect(),
            RowShape::CoInterval { x, y } => (1..=n).map(|j| j <= x || j >= y).collect(),
            RowShape::Full => vec![true; n],
            RowShape::Empty => vec![false; n],
            RowShape::Irregular => return None,
        };
        Some(row)
    }
}

pub fn row_shape(row: &[bool]) -> RowShape {
    let n = row.len();
    let ones = row.iter().filter(|&&b| b).count();
    if ones == 0 {
        return RowShape::Empty;
    }
    if ones == n {
        return RowShape::Full;
    }
    // maximal runs of ones, 1-based inclusive
    let mut runs = Vec::new();
    let mut j = 0;
    while j < n {
        if row[j] {
            let start = j;
            while j < n && row[j] {
                j += 1;
            }
            runs.push((start + 1, j));
        } else {
            j += 1;
        }
    }
    match runs.as_slice() {
        [(x, y)] => RowShape::Interval { x: *x, y: *y },
        [(1, x), (y, end)] if *end == n => RowShape::CoInterval { x: *x, y: *y },
        _ => RowShape::Irregular,
    }
}

/// All partitions of the vertices into two cliques, up to swapping sides,
/// at most [`DECOMPOSITION_CAP`] of them.
///
/// Partitions correspond to proper 2-colourings of the complement. Complement
/// components are taken in order of their minimum vertex; the side holding
/// vertex 0 is `X`, and the choices for later components are enumerated in
/// binary counting order. Each `Y` is initially labeled by ascending id. An
/// empty result means the graph is not co-bipartite.
pub fn decompose(g: &SimpleGraph) -> Vec<CoBipartite> {
    let n = g.n();
    let comp = g.complement();
    let mut color = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in comp.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    members.push(v);
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Vec::new();
                }
            }
        }
        components.push(members);
    }
    if n == 0 {
        return vec![CoBipartite {
            graph: g.clone(),
            x: Vec::new(),
            y: Vec::new(),
        }];
    }
    let free = components.len() - 1;
    let total: u128 = 1u128 << free.min(100);
    let mut out = Vec::new();
    let mut combo: u128 = 0;
    while combo < total && out.len() < DECOMPOSITION_CAP {
        let mut x = Vec::new();
        let mut y = Vec::new();
        for (ci, members) in components.iter().enumerate() {
            let flip = ci > 0 && (combo >> (ci - 1)) & 1 == 1;
            for &v in members {
                if (color[v] == 0) != flip {
                    x.push(v);
                } else {
                    y.push(v);
                }
            }
        }
        x.sort_unstable();
        y.sort_unstable();
        out.push(CoBipartite {
            graph: g.clone(),
            x,
            y,
        });
        combo += 1;
    }
    out
}

/// Co-bipartite graph with `X = 0..m`, `Y = m..m+n` and cross adjacency
/// given by `rows[i][j]` (X vertex `i`, Y vertex `m + j`).
pub fn cobipartite_from_rows(m: usize, n: usize, rows: &[Vec<bool>]) -> CoBipartite {
    let mut g = SimpleGraph::new(m + n);
    for u in 0..m {
        for v in u + 1..m {
            g.add_edge(u, v);
        }
    }
    for u in m..m + n {
        for v in u + 1..m + n {
            g.add_edge(u, v);
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            if b {
                g.add_edge(i, m + j);
            }
        }
    }
    CoBipartite {
        graph: g,
        x: (0..m).collect(),
        y: (m..m + n).collect(),
    }
}

/// `K_n □ K_2`: two copies of `K_n` joined by the identity matching.
pub fn gen_cartesian_kn_k2(n: usize) -> CoBipartite {
    let rows: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    cobipartite_from_rows(n, n, &rows)
}

/// `K_{m+n}` split as `K_m` and `K_n`.
pub fn gen_complete_cobip(m: usize, n: usize) -> CoBipartite {
    cobipartite_from_rows(m, n, &vec![vec![true; n]; m])
}

/// Each cross pair is an edge with probability `p`, drawn from a ChaCha8
/// stream seeded with `seed`.
pub fn gen_random_cobip(m: usize, n: usize, p: f64, seed: u64) -> Result<CoBipartite> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<bool>> = (0..m)
        .map(|_| (0..n).map(|_| rng.gen_bool(p)).collect())
        .collect();
    Ok(cobipartite_from_rows(m, n, &rows))
}
