//! Independent oracles shared by the integration tests. Nothing here calls the
//! search code under test.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use wordrep::graph::cobipartite_from_rows;
use wordrep::{CoBipartite, SimpleGraph, VertexClass};

/// Every simple directed path from `s` to `t`, as vertex lists.
fn paths(arcs: &[Vec<usize>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(arcs: &[Vec<usize>], path: &mut Vec<usize>, t: usize, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for &v in &arcs[u] {
            if !path.contains(&v) {
                path.push(v);
                go(arcs, path, t, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(arcs, &mut vec![s], t, &mut out);
    out
}

fn has_cycle(n: usize, arcs: &[Vec<usize>]) -> bool {
    // Kahn
    let mut indeg = vec![0; n];
    for a in arcs {
        for &v in a {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &v in &arcs[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen < n
}

/// Semi-transitivity straight from the definition: acyclic, and no arc
/// `s -> t` with a longer directed `s`-`t` path whose vertices contain a
/// non-adjacent pair.
pub fn naive_semi_transitive(g: &SimpleGraph, arcs_list: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut arcs = vec![Vec::new(); n];
    for &(u, v) in arcs_list {
        arcs[u].push(v);
    }
    if has_cycle(n, &arcs) {
        return false;
    }
    for &(s, t) in arcs_list {
        for p in paths(&arcs, s, t) {
            if p.len() < 3 {
                continue;
            }
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if !g.adjacent(p[i], p[j]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Tries all `2^|E|` orientations.
pub fn brute_force_representable(g: &SimpleGraph) -> bool {
    let edges = g.edges();
    assert!(edges.len() <= 20, "too many edges for brute force");
    (0u32..1 << edges.len()).any(|mask| {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        naive_semi_transitive(g, &arcs)
    })
}

/// Searches for a `k`-uniform word representing `g`. Words are built left
/// to right; an adjacent pair is cut as soon as its restriction repeats a
/// letter, and non-adjacent pairs are checked on completion. Rotations of
/// uniform words represent the same graph, so the word starts with vertex 0.
pub fn find_uniform_word(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    struct S<'a> {
        g: &'a SimpleGraph,
        k: usize,
        count: Vec<usize>,
        last: Vec<Option<usize>>,
        word: Vec<usize>,
    }
    impl S<'_> {
        fn ok_to_place(&self, x: usize) -> bool {
            // the previous occurrence of any adjacent letter pair must differ
            (0..self.g.n()).all(|y| {
                y == x
                    || !self.g.adjacent(x, y)
                    || match (self.last[x], self.last[y]) {
                        (Some(px), Some(py)) => py > px,
                        (Some(_), None) => false,
                        _ => true,
                    }
            })
        }
        fn complete_ok(&self) -> bool {
            let n = self.g.n();
            for x in 0..n {
                for y in x + 1..n {
                    let r: Vec<usize> = self
                        .word
                        .iter()
                        .copied()
                        .filter(|&l| l == x || l == y)
                        .collect();
                    let alt = r.windows(2).all(|w| w[0] != w[1]);
                    if alt != self.g.adjacent(x, y) {
                        return false;
                    }
                }
            }
            true
        }
        fn run(&mut self) -> bool {
            let n = self.g.n();
            if self.word.len() == n * self.k {
                return self.complete_ok();
            }
            for x in 0..n {
                if self.count[x] == self.k || !self.ok_to_place(x) {
                    continue;
                }
                if self.word.is_empty() && x != 0 {
                    continue;
                }
                let saved = self.last[x];
                self.count[x] += 1;
                self.last[x] = Some(self.word.len());
                self.word.push(x);
                if self.run() {
                    return true;
                }
                self.word.pop();
                self.last[x] = saved;
                self.count[x] -= 1;
            }
            false
        }
    }
    let n = g.n();
    let mut s = S {
        g,
        k,
        count: vec![0; n],
        last: vec![None; n],
        word: Vec::new(),
    };
    s.run().then_some(s.word)
}

/// Certificate parts built to satisfy conditions 1 to 5 by construction:
/// Type A, Type C and Type B blocks with separately sorted endpoints.
#[derive(Debug, Clone)]
pub struct GeneratedCertificate {
    pub cb: CoBipartite,
    pub classes: Vec<VertexClass>,
}

// Sorting both endpoint lists separately keeps `x <= y` (or `x < y`) for
// every pair and makes the sequence monotone in both coordinates.
fn sorted_intervals(raw: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut xs: Vec<usize> = raw.iter().map(|p| p.0.min(p.1)).collect();
    let mut ys: Vec<usize> = raw.iter().map(|p| p.0.max(p.1)).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    xs.into_iter().zip(ys).collect()
}

/// `n` labels; `b`, `a`, `c` give raw endpoint pairs in `1..=n`. B intervals
/// are kept as drawn, A intervals are shifted to dominate every B interval,
/// and C pairs failing the cross conditions are dropped.
pub fn generated_certificate(
    n: usize,
    b: &[(usize, usize)],
    a: &[(usize, usize)],
    c: &[(usize, usize)],
) -> GeneratedCertificate {
    let b = sorted_intervals(b);
    let (bx, by) = b
        .iter()
        .fold((1, 1), |(mx, my), &(x, y)| (mx.max(x), my.max(y)));
    let a: Vec<(usize, usize)> = sorted_intervals(a)
        .into_iter()
        .map(|(x, y)| {
            let x = x.max(bx);
            (x, y.max(by).max(x))
        })
        .collect();
    let a = sorted_intervals(&a);
    let c_raw: Vec<(usize, usize)> = c
        .iter()
        .filter(|p| p.0 != p.1)
        .map(|&(p, q)| (p.min(q), p.max(q)))
        .filter(|&(xc, yc)| a.iter().chain(b.iter()).all(|&(x, y)| x <= yc && xc <= y))
        .collect();
    let c = sorted_intervals(&c_raw);
    let classes: Vec<VertexClass> = a
        .iter()
        .map(|&(x, y)| VertexClass::TypeA { x, y })
        .chain(c.iter().map(|&(x, y)| VertexClass::TypeC { x, y }))
        .chain(b.iter().map(|&(x, y)| VertexClass::TypeB { x, y }))
        .collect();
    let rows: Vec<Vec<bool>> = classes.iter().map(|cl| cl.expand(n)).collect();
    GeneratedCertificate {
        cb: cobipartite_from_rows(classes.len(), n, &rows),
        classes,
    }
}

pub fn edge_set(g: &SimpleGraph) -> BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}
