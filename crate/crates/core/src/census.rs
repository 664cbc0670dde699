//! Corpus generation and the recognition-versus-oracle sweep.
//!
//! The exhaustive corpus holds every cross matrix with `1 <= m <= n` and
//! `m + n <= max_vertices`, one per class under row permutation, column
//! permutation and (for square matrices) transposition. The random corpus adds
//! seeded instances. [`sweep`] runs both deciders on every instance in
//! parallel and records where they disagree.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builder::construct_word;
use crate::error::Result;
use crate::graph::{cobipartite_from_rows, decompose, gen_random_cobip, CoBipartite};
use crate::ordering::{find_ordering, recognize_with, ConditionSet};
use crate::orient::{search_semi_transitive, SearchLimits};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Exhaustive,
    Random { seed: u64, p: f64 },
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: usize,
    pub source: Source,
    pub cb: CoBipartite,
}

fn rows_from_masks(masks: &[u16], n: usize) -> Vec<Vec<bool>> {
    masks
        .iter()
        .map(|&r| (0..n).map(|j| r >> j & 1 == 1).collect())
        .collect()
}

fn transpose(masks: &[u16], n: usize) -> Vec<u16> {
    (0..n)
        .map(|j| {
            masks
                .iter()
                .enumerate()
                .fold(0u16, |acc, (i, &r)| acc | ((r >> j & 1) << i))
        })
        .collect()
}

// Smallest sorted row list over all column permutations.
fn canonical(masks: &[u16], perm_tables: &[Vec<u16>]) -> Vec<u16> {
    perm_tables
        .iter()
        .map(|t| {
            let mut rows: Vec<u16> = masks.iter().map(|&r| t[r as usize]).collect();
            rows.sort_unstable();
            rows
        })
        .min()
        .unwrap_or_default()
}

fn perm_tables(n: usize) -> Vec<Vec<u16>> {
    (0..n)
        .permutations(n)
        .map(|p| {
            (0..1u32 << n)
                .map(|r| (0..n).fold(0u16, |acc, j| acc | (((r >> j) & 1) as u16) << p[j]))
                .collect()
        })
        .collect()
}

/// Canonical matrices (as row bitmasks) of shape `m x n`.
pub fn canonical_matrices(m: usize, n: usize) -> Vec<Vec<u16>> {
    let tables = perm_tables(n);
    let mut seen = BTreeSet::new();
    for rows in (0..1u16 << n).combinations_with_replacement(m) {
        let mut key = canonical(&rows, &tables);
        if m == n {
            key = key.min(canonical(&transpose(&rows, n), &tables));
        }
        seen.insert(key);
    }
    seen.into_iter().collect()
}

pub fn exhaustive_corpus(max_vertices: usize) -> Vec<CoBipartite> {
    let mut out = Vec::new();
    for total in 2..=max_vertices {
        for m in 1..=total / 2 {
            let n = total - m;
            for masks in canonical_matrices(m, n) {
                out.push(cobipartite_from_rows(m, n, &rows_from_masks(&masks, n)));
            }
        }
    }
    out
}

/// `count` random instances with `4 <= m + n <= max_vertices`, drawn from a
/// ChaCha8 stream seeded with `seed`. Each instance records its own seed.
pub fn random_corpus(
    count: usize,
    max_vertices: usize,
    seed: u64,
) -> Result<Vec<(Source, CoBipartite)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = max_vertices.max(4);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(4..=hi);
            let m = rng.gen_range(1..size);
            let p = (rng.gen_range(0.2..0.9f64) * 100.0).round() / 100.0;
            let s: u64 = rng.gen();
            Ok((
                Source::Random { seed: s, p },
                gen_random_cobip(m, size - m, p, s)?,
            ))
        })
        .collect()
}

pub fn corpus(
    max_exhaustive: usize,
    random: usize,
    max_random: usize,
    seed: u64,
) -> Result<Vec<Instance>> {
    let exhaustive = exhaustive_corpus(max_exhaustive)
        .into_iter()
        .map(|cb| (Source::Exhaustive, cb));
    Ok(exhaustive
        .chain(random_corpus(random, max_random, seed)?)
        .enumerate()
        .map(|(id, (source, cb))| Instance { id, source, cb })
        .collect())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceReport {
    pub id: usize,
    pub source: Source,
    pub m: usize,
    pub n: usize,
    pub rows: Vec<String>,
    pub oracle: bool,
    pub oracle_nodes: u64,
    pub recognized: bool,
    /// Recognition with the literal condition 6.
    pub recognized_literal: bool,
    /// Whether the constructed word verified, for recognised instances.
    pub word_verified: Option<bool>,
    /// Number of clique partitions tried.
    pub partitions: usize,
    /// Number of those partitions admitting a certificate.
    pub partitions_recognized: usize,
}

impl InstanceReport {
    /// Recognised under one clique partition but not under another.
    pub fn partition_dependent(&self) -> bool {
        self.partitions_recognized > 0 && self.partitions_recognized < self.partitions
    }

    pub fn agrees(&self) -> bool {
        self.oracle == self.recognized
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub total: usize,
    pub representable: usize,
    pub disagreements: usize,
    pub literal_disagreements: usize,
    pub construction_failures: usize,
    pub partition_dependent: usize,
    pub instances: Vec<InstanceReport>,
}

impl SweepReport {
    pub fn non_representable(&self) -> impl Iterator<Item = &InstanceReport> {
        self.instances.iter().filter(|r| !r.oracle)
    }
}

pub fn check_instance(inst: &Instance, limits: &SearchLimits) -> Result<InstanceReport> {
    let g = inst.cb.graph();
    let oracle = search_semi_transitive(g, limits)?;
    let parts = decompose(g);
    let mut first = None;
    let mut partitions_recognized = 0;
    for cb in &parts {
        if let Some(cert) = find_ordering(cb, limits)? {
            partitions_recognized += 1;
            first.get_or_insert((cb, cert));
        }
    }
    let literal = recognize_with(g, limits, ConditionSet::Literal)?;
    let word_verified = first
        .as_ref()
        .map(|(cb, cert)| construct_word(cb, cert).is_ok_and(|w| w.uniformity() == Ok(Some(3))));
    let m = inst.cb.matrix();
    Ok(InstanceReport {
        id: inst.id,
        source: inst.source.clone(),
        m: m.m(),
        n: m.n(),
        rows: m
            .rows()
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect(),
        oracle: oracle.orientation.is_some(),
        oracle_nodes: oracle.nodes,
        recognized: first.is_some(),
        recognized_literal: literal.is_some(),
        word_verified,
        partitions: parts.len(),
        partitions_recognized,
    })
}

pub fn sweep(instances: &[Instance], limits: &SearchLimits) -> Result<SweepReport> {
    let reports: Vec<InstanceReport> = instances
        .par_iter()
        .map(|inst| check_instance(inst, limits))
        .collect::<Result<_>>()?;
    Ok(SweepReport {
        total: reports.len(),
        representable: reports.iter().filter(|r| r.oracle).count(),
        disagreements: reports.iter().filter(|r| !r.agrees()).count(),
        literal_disagreements: reports
            .iter()
            .filter(|r| r.oracle != r.recognized_literal)
            .count(),
        construction_failures: reports
            .iter()
            .filter(|r| r.word_verified == Some(false))
            .count(),
        partition_dependent: reports.iter().filter(|r| r.partition_dependent()).count(),
        instances: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        // 1 x 1: empty or full
        assert_eq!(canonical_matrices(1, 1).len(), 2);
        // 1 x 2: by number of ones
        assert_eq!(canonical_matrices(1, 2).len(), 3);
        // 2 x 2: bipartite graphs on 2+2 vertices up to swapping sides
        assert_eq!(canonical_matrices(2, 2).len(), 6);
    }

    #[test]
    fn random_corpus_is_seeded() {
        let a = random_corpus(5, 10, 3).unwrap();
        let b = random_corpus(5, 10, 3).unwrap();
        assert_eq!(a.len(), 5);
        for ((sa, ga), (sb, gb)) in a.iter().zip(&b) {
            assert_eq!(sa, sb);
            assert_eq!(ga, gb);
        }
    }
}
