//! Two-sweep recognisers/orderers for claw-free and bad-claw-free AT-free
//! graphs, plus claw and bad-claw detection and the layer/distance lemma
//! checks that certify them.

use crate::convexity::BetweennessOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{bfs, bfs_plus, lbfs, Ordering};

/// An induced `K_{1,3}`: three independent prongs around a base. When
/// `bad` is set, the middle prong lies between the outer two in the
/// domination betweenness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClawWitness {
    pub base: usize,
    pub prongs: (usize, usize, usize),
    pub bad: bool,
}

impl ClawWitness {
    pub fn to_error(&self, g: &Graph) -> Error {
        let names = [
            g.name(self.prongs.0).to_string(),
            g.name(self.prongs.1).to_string(),
            g.name(self.prongs.2).to_string(),
        ];
        if self.bad {
            Error::BadClawPresent {
                base: g.name(self.base).to_string(),
                prongs: names,
            }
        } else {
            Error::NotClawFree {
                base: g.name(self.base).to_string(),
                prongs: names,
            }
        }
    }
}

fn claws(g: &Graph) -> impl Iterator<Item = ClawWitness> + '_ {
    (0..g.n()).flat_map(move |base| {
        let nbrs = g.neighbors(base);
        let mut found = Vec::new();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                for k in j + 1..nbrs.len() {
                    let (a, b, c) = (nbrs[i], nbrs[j], nbrs[k]);
                    if !g.has_edge(a, b) && !g.has_edge(b, c) && !g.has_edge(a, c) {
                        found.push(ClawWitness {
                            base,
                            prongs: (a, b, c),
                            bad: false,
                        });
                    }
                }
            }
        }
        found.into_iter()
    })
}

/// Least induced claw, if any.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    claws(g).next()
}

/// Least claw whose prongs, in some arrangement `(a, z, b)`, satisfy the
/// betweenness `(a, z, b)`; the witness lists the middle prong second.
pub fn find_bad_claw(g: &Graph, oracle: &BetweennessOracle) -> Option<ClawWitness> {
    for claw in claws(g) {
        let (p, q, r) = claw.prongs;
        for (a, z, b) in [(p, q, r), (p, r, q), (q, p, r)] {
            if oracle.is_between(a, z, b) {
                return Some(ClawWitness {
                    base: claw.base,
                    prongs: (a.min(b), z, a.max(b)),
                    bad: true,
                });
            }
        }
    }
    None
}

/// Result of a two-sweep pipeline: the returned order and the first sweep
/// that located its start vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSweep {
    pub order: Ordering,
    pub first_sweep: Ordering,
}

/// Double-BFS pipeline for claw-free AT-free graphs: sweep 1 from the
/// canonical-first vertex ends in an admissible vertex; sweep 2 from there
/// is an AT-free, monotone dominating pair, bilateral AT-free order.
/// `certify` additionally runs the (non-linear) asteroidal triple check.
pub fn clawfree_atfree_order(
    g: &Graph,
    oracle: &BetweennessOracle,
    certify: bool,
) -> Result<TwoSweep> {
    g.check_connected()?;
    if let Some(claw) = find_claw(g) {
        return Err(claw.to_error(g));
    }
    if certify {
        if let Some((a, b, c)) = oracle.asteroidal_triple() {
            return Err(Error::NotAtFree {
                triple: [
                    g.name(a).to_string(),
                    g.name(b).to_string(),
                    g.name(c).to_string(),
                ],
            });
        }
    }
    let first_sweep = bfs(g, 0)?;
    // The second sweep starts in the admissible end-vertex of the first;
    // breaking ties against the first sweep is what makes the result
    // bilateral, not just AT-free (a plain BFS can order a layer so that
    // a middle vertex lands before both of its outer partners).
    let order = bfs_plus(g, &first_sweep)?;
    Ok(TwoSweep { order, first_sweep })
}

/// Double-LBFS pipeline for bad-claw-free AT-free graphs: the LBFS
/// end-vertex is admissible even without the claw-free layer structure.
/// `certify` runs the polynomial bad-claw scan before sweeping.
pub fn badclawfree_atfree_order(
    g: &Graph,
    oracle: &BetweennessOracle,
    certify: bool,
) -> Result<TwoSweep> {
    g.check_connected()?;
    if certify {
        if let Some(claw) = find_bad_claw(g, oracle) {
            return Err(claw.to_error(g));
        }
    }
    let first_sweep = lbfs(g, 0)?;
    let order = lbfs(g, first_sweep.last())?;
    Ok(TwoSweep { order, first_sweep })
}

/// Checks that `L^0` and every layer `L^i`, `i >= 2`, induce cliques.
/// `Ok(None)` means they do; otherwise the least non-adjacent witness pair.
pub fn layers_are_cliques(g: &Graph, s: usize) -> Result<Option<(usize, usize)>> {
    let ld = g.bfs_layers(s)?;
    for (i, layer) in ld.layers.iter().enumerate() {
        if i == 1 {
            continue;
        }
        for (a_idx, &a) in layer.iter().enumerate() {
            for &b in &layer[a_idx + 1..] {
                if !g.has_edge(a, b) {
                    return Ok(Some((a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// Distance monotonicity for a dominating pair `(s, t)`: non-adjacent
/// `u, v` with `dist(s,u) < dist(s,v)` must satisfy
/// `dist(t,u) >= dist(t,v)`. `Ok(None)` means it holds.
pub fn lemma3_check(g: &Graph, s: usize, t: usize) -> Result<Option<(usize, usize)>> {
    if !crate::verify::is_dominating_pair(g, s, t).holds {
        return Err(Error::NotDominatingPair(
            g.name(s).to_string(),
            g.name(t).to_string(),
        ));
    }
    let from_s = g.bfs_layers(s)?;
    let from_t = g.bfs_layers(t)?;
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u == v || g.has_edge(u, v) {
                continue;
            }
            if from_s.layer_of(u) < from_s.layer_of(v) && from_t.layer_of(u) < from_t.layer_of(v) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}
