//! Fixed benchmark instances shared by the criterion benches.

use wordrep::graph::{gen_cartesian_kn_k2, gen_random_cobip};
use wordrep::CoBipartite;

/// Seeded random co-bipartite instances with `m + n = size`.
pub fn random_instances(size: usize, count: usize, seed: u64) -> Vec<CoBipartite> {
    (0..count as u64)
        .map(|i| {
            let m = size / 2;
            gen_random_cobip(m, size - m, 0.6, seed.wrapping_add(i)).expect("valid parameters")
        })
        .collect()
}

/// `K_n x K_2` for each `n` in the range.
pub fn prisms(range: std::ops::RangeInclusive<usize>) -> Vec<CoBipartite> {
    range.map(gen_cartesian_kn_k2).collect()
}
