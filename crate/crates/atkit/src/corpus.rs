//! Seeded random corpora filtered by class certificates, and an
//! isomorphism-free enumeration of small connected graphs for exhaustive
//! property runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convexity::{find_asteroidal_triple, BetweennessOracle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pipeline::{find_bad_claw, find_claw};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFilter {
    Any,
    AtFree,
    ClawFreeAtFree,
    BadClawFreeAtFree,
}

impl CorpusFilter {
    pub fn parse(s: &str) -> Option<CorpusFilter> {
        match s {
            "any" => Some(CorpusFilter::Any),
            "atfree" => Some(CorpusFilter::AtFree),
            "clawfree-atfree" => Some(CorpusFilter::ClawFreeAtFree),
            "badclawfree-atfree" => Some(CorpusFilter::BadClawFreeAtFree),
            _ => None,
        }
    }

    fn accepts(self, g: &Graph) -> bool {
        match self {
            CorpusFilter::Any => true,
            CorpusFilter::AtFree => find_asteroidal_triple(g).is_none(),
            CorpusFilter::ClawFreeAtFree => {
                find_claw(g).is_none() && find_asteroidal_triple(g).is_none()
            }
            CorpusFilter::BadClawFreeAtFree => {
                let oracle = BetweennessOracle::build(g);
                oracle.asteroidal_triple().is_none() && find_bad_claw(g, &oracle).is_none()
            }
        }
    }
}

/// Deterministic seeded stream of connected graphs passing the filter's
/// certificates. Fails with `FilterTooRestrictive` when the acceptance
/// rate drops below one in ten thousand.
pub fn generate_corpus(
    seed: u64,
    n_range: std::ops::RangeInclusive<usize>,
    count: usize,
    filter: CorpusFilter,
) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts % 20_000 == 0 && out.len() * 10_000 < attempts {
            return Err(Error::FilterTooRestrictive {
                attempts,
                accepted: out.len(),
            });
        }
        let n = rng.gen_range(*n_range.start()..=*n_range.end());
        let p = rng.gen_range(0.2..0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_index_edges(n, &edges).expect("generated edges are simple");
        if g.n() > 0 && g.is_connected() && filter.accepts(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn canonical_form(n: usize, mask: u64, perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for perm in perms {
        let mut relabeled = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_index(n, i, j) & 1 == 1 {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    relabeled |= 1 << pair_index(n, a, b);
                }
            }
        }
        best = best.min(relabeled);
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_index(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges).expect("mask edges are simple")
}

/// All connected graphs on exactly `n` vertices, one per isomorphism
/// class, by vertex augmentation: every connected graph has a non-cut
/// vertex, so extending the (n-1)-vertex classes by one vertex with every
/// nonempty neighbourhood covers everything.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 8, "enumeration is sized for n <= 8");
    let mut classes: Vec<u64> = vec![0]; // K1
    for k in 2..=n {
        let perms = permutations(k);
        let mut next: Vec<u64> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &base in &classes {
            // Lift the (k-1)-vertex mask into k-vertex indexing.
            let mut lifted = 0u64;
            for i in 0..k - 1 {
                for j in i + 1..k - 1 {
                    if base >> pair_index(k - 1, i, j) & 1 == 1 {
                        lifted |= 1 << pair_index(k, i, j);
                    }
                }
            }
            for nbrs in 1u64..(1u64 << (k - 1)) {
                let mut mask = lifted;
                for i in 0..k - 1 {
                    if nbrs >> i & 1 == 1 {
                        mask |= 1 << pair_index(k, i, k - 1);
                    }
                }
                let canon = canonical_form(k, mask, &perms);
                if seen.insert(canon) {
                    next.push(canon);
                }
            }
        }
        classes = next;
    }
    classes.sort_unstable();
    classes.into_iter().map(|m| mask_to_graph(n, m)).collect()
}
