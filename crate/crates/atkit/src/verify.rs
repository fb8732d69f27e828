//! Ground-truth predicates over orderings and graphs: AT-free / bilateral /
//! monotone dominating pair order checks, BFS and LBFS validity, the spine
//! property, and permutation-level brute-force existence oracles.

use crate::convexity::BetweennessOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{Ordering, SearchKind};

/// Default cap for the permutation / subset brute-force oracles,
/// overridable per call (the CLI reads `ATKIT_BRUTE_CAP`).
pub const DEFAULT_BRUTE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    BetweennessTriple,
    DominatingPair,
    BfsValidity,
    LbfsValidity,
    Spine,
    CliqueLayer,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::BetweennessTriple => "betweenness-triple",
            ViolationKind::DominatingPair => "dominating-pair",
            ViolationKind::BfsValidity => "bfs-validity",
            ViolationKind::LbfsValidity => "lbfs-validity",
            ViolationKind::Spine => "spine",
            ViolationKind::CliqueLayer => "clique-layer",
        }
    }
}

/// A witness explaining why a predicate failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
    pub position: Option<usize>,
}

fn check_permutation(n: usize, tau: &Ordering) -> Result<()> {
    if tau.seq().len() != n {
        return Err(Error::PermutationMismatch);
    }
    Ok(())
}

/// `None` iff every betweenness middle precedes one of its outer
/// elements, equivalently every prefix of `tau` is convex. Returns the
/// least violating triple `(x, y, z)` otherwise.
pub fn is_atfree_order(oracle: &BetweennessOracle, tau: &Ordering) -> Option<Violation> {
    let n = oracle.graph().n();
    check_permutation(n, tau).expect("ordering must match the graph");
    for y in 0..n {
        for x in 0..n {
            if x == y {
                continue;
            }
            for z in x + 1..n {
                if z == y || !oracle.is_between(x, y, z) {
                    continue;
                }
                if tau.position(y) > tau.position(x) && tau.position(y) > tau.position(z) {
                    return Some(Violation {
                        kind: ViolationKind::BetweennessTriple,
                        witness: vec![x, y, z],
                        position: Some(tau.position(y)),
                    });
                }
            }
        }
    }
    None
}

/// `None` iff every betweenness middle lies strictly between its outer
/// elements in `tau` (in either outer order).
pub fn is_bilateral_atfree_order(oracle: &BetweennessOracle, tau: &Ordering) -> Option<Violation> {
    let n = oracle.graph().n();
    check_permutation(n, tau).expect("ordering must match the graph");
    for y in 0..n {
        for x in 0..n {
            if x == y {
                continue;
            }
            for z in x + 1..n {
                if z == y || !oracle.is_between(x, y, z) {
                    continue;
                }
                let (px, py, pz) = (tau.position(x), tau.position(y), tau.position(z));
                let between = (px < py && py < pz) || (pz < py && py < px);
                if !between {
                    return Some(Violation {
                        kind: ViolationKind::BetweennessTriple,
                        witness: vec![x, y, z],
                        position: Some(py),
                    });
                }
            }
        }
    }
    None
}

/// Outcome of a dominating pair check; on failure the witness is a vertex
/// `w` together with an `s`-`t` path avoiding it (absent when `s` and `t`
/// are in different components, which counts as non-dominating).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomPairCheck {
    pub holds: bool,
    pub witness: Option<(usize, Vec<usize>)>,
}

/// True iff every `s`-`t` path dominates the graph: no vertex `w` outside
/// `N[s] + N[t]` leaves `s` and `t` co-connected in `G - N[w]`.
pub fn is_dominating_pair(g: &Graph, s: usize, t: usize) -> DomPairCheck {
    assert!(s != t);
    if !g.unreachable_from(s).is_empty() {
        // Disconnected graph: only meaningful within s's component.
        let mut seen = vec![false; g.n()];
        mark_component(g, s, &mut seen);
        if !seen[t] {
            return DomPairCheck {
                holds: false,
                witness: None,
            };
        }
    }
    for w in 0..g.n() {
        if w == s || w == t || g.has_edge(w, s) || g.has_edge(w, t) {
            continue;
        }
        if let Some(path) = g.path_avoiding(s, t, w) {
            return DomPairCheck {
                holds: false,
                witness: Some((w, path.vertices)),
            };
        }
    }
    DomPairCheck {
        holds: true,
        witness: None,
    }
}

fn mark_component(g: &Graph, s: usize, seen: &mut [bool]) {
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
}

/// `None` iff `(v_1, v_i)` is a dominating pair of the induced prefix
/// graph for every `i`; otherwise the least failing prefix length.
pub fn is_monotone_dp_order(g: &Graph, tau: &Ordering) -> Option<Violation> {
    check_permutation(g.n(), tau).expect("ordering must match the graph");
    for i in 2..=g.n() {
        let mut verts: Vec<usize> = tau.seq()[..i].to_vec();
        verts.sort_unstable();
        let prefix = g.induced(&verts);
        let s = prefix.vertex(g.name(tau.start())).unwrap();
        let t = prefix.vertex(g.name(tau.seq()[i - 1])).unwrap();
        if !is_dominating_pair(&prefix, s, t).holds {
            return Some(Violation {
                kind: ViolationKind::DominatingPair,
                witness: vec![tau.start(), tau.seq()[i - 1]],
                position: Some(i),
            });
        }
    }
    None
}

/// BFS validity by the first-neighbour-position criterion: every non-start
/// vertex has a neighbour before it, and the sequence of first-neighbour
/// positions is non-decreasing along `tau`.
pub fn is_bfs_order(g: &Graph, tau: &Ordering) -> Option<Violation> {
    check_permutation(g.n(), tau).expect("ordering must match the graph");
    let n = g.n();
    let mut first_nbr = vec![usize::MAX; n];
    for i in 1..n {
        let v = tau.seq()[i];
        let f = g.neighbors(v).iter().map(|&u| tau.position(u)).min();
        match f {
            Some(p) if p < i => first_nbr[i] = p,
            _ => {
                return Some(Violation {
                    kind: ViolationKind::BfsValidity,
                    witness: vec![v],
                    position: Some(i),
                })
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        if first_nbr[i] > first_nbr[i + 1] {
            return Some(Violation {
                kind: ViolationKind::BfsValidity,
                witness: vec![tau.seq()[i], tau.seq()[i + 1]],
                position: Some(i + 1),
            });
        }
    }
    None
}

/// LBFS validity by constrained replay: at each step the next vertex must
/// carry a lexicographically largest label; the witness is the step and a
/// better-labelled vertex.
pub fn is_lbfs_order(g: &Graph, tau: &Ordering) -> Option<Violation> {
    check_permutation(g.n(), tau).expect("ordering must match the graph");
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    for step in 0..n {
        let v = tau.seq()[step];
        if step > 0 {
            for u in 0..n {
                if !visited[u] && labels[u] > labels[v] {
                    return Some(Violation {
                        kind: ViolationKind::LbfsValidity,
                        witness: vec![v, u],
                        position: Some(step),
                    });
                }
            }
        }
        visited[v] = true;
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - 1 - step);
            }
        }
    }
    None
}

/// Spine check outcome; the witness is an ordered dominating pair `(s, t)`
/// for which no neighbour of `t` re-forms a dominating pair with `s` in
/// `s`'s component of `G - t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn has_spine_property(g: &Graph) -> SpineCheck {
    // The property presupposes a dominating pair: a connected graph on two
    // or more vertices without any dominating pair (e.g. the net graph)
    // does not have it. Without this clause the hereditary version would
    // wrongly accept such graphs even though they contain an asteroidal
    // triple.
    if g.n() >= 2 {
        let any_pair = (0..g.n())
            .any(|s| (s + 1..g.n()).any(|t| is_dominating_pair(g, s, t).holds));
        if !any_pair {
            return SpineCheck {
                holds: false,
                witness: None,
            };
        }
    }
    for s in 0..g.n() {
        for t in 0..g.n() {
            if s == t || g.has_edge(s, t) || !is_dominating_pair(g, s, t).holds {
                continue;
            }
            // Component of G - t containing s.
            let verts: Vec<usize> = (0..g.n()).filter(|&v| v != t).collect();
            let without_t = g.induced(&verts);
            let s_new = without_t.vertex(g.name(s)).unwrap();
            let mut seen = vec![false; without_t.n()];
            mark_component(&without_t, s_new, &mut seen);
            let comp: Vec<usize> = (0..without_t.n()).filter(|&v| seen[v]).collect();
            let comp_graph = without_t.induced(&comp);
            let s_comp = comp_graph.vertex(g.name(s)).unwrap();
            let ok = g.neighbors(t).iter().any(|&tp| {
                match comp_graph.vertex(g.name(tp)) {
                    Ok(tp_new) => is_dominating_pair(&comp_graph, s_comp, tp_new).holds,
                    Err(_) => false,
                }
            });
            if !ok {
                return SpineCheck {
                    holds: false,
                    witness: Some((s, t)),
                };
            }
        }
    }
    SpineCheck {
        holds: true,
        witness: None,
    }
}

/// Spine property for every connected induced subgraph; exponential in the
/// vertex count, hence the cap.
pub fn spine_property_hereditary(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    for bits in 1u64..(1u64 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        let h = g.induced(&verts);
        if !h.is_connected() {
            continue;
        }
        if !has_spine_property(&h).holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First prefix length whose induced subgraph is disconnected, if any.
pub fn first_disconnected_prefix(g: &Graph, tau: &Ordering) -> Option<usize> {
    for i in 2..=g.n() {
        let mut verts: Vec<usize> = tau.seq()[..i].to_vec();
        verts.sort_unstable();
        if !g.induced(&verts).is_connected() {
            return Some(i);
        }
    }
    None
}

/// Betweenness triples of the oracle's graph as `(x, y, z)` with `x < z`.
fn betweenness_triples(oracle: &BetweennessOracle) -> Vec<(usize, usize, usize)> {
    let n = oracle.graph().n();
    let mut triples = Vec::new();
    for y in 0..n {
        for x in 0..n {
            if x == y {
                continue;
            }
            for z in x + 1..n {
                if z != y && oracle.is_between(x, y, z) {
                    triples.push((x, y, z));
                }
            }
        }
    }
    triples
}

/// Brute-force search for a bilateral AT-free ordering. Enumerates
/// permutations in lexicographic order with middle-placement pruning.
pub fn exists_bilateral_order_bruteforce(
    g: &Graph,
    oracle: &BetweennessOracle,
    cap: usize,
) -> Result<Option<Ordering>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let triples = betweenness_triples(oracle);
    let mut placed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    if search_bilateral(n, &triples, &mut placed, &mut seq) {
        return Ok(Some(Ordering::new(seq, n, SearchKind::External)?));
    }
    Ok(None)
}

fn search_bilateral(
    n: usize,
    triples: &[(usize, usize, usize)],
    placed: &mut [bool],
    seq: &mut Vec<usize>,
) -> bool {
    if seq.len() == n {
        return true;
    }
    'next: for v in 0..n {
        if placed[v] {
            continue;
        }
        // A triple's pattern is decided when its middle is placed: exactly
        // one outer element may precede it.
        for &(x, y, z) in triples {
            if v == y {
                let before = placed[x] as usize + placed[z] as usize;
                if before != 1 {
                    continue 'next;
                }
            }
        }
        placed[v] = true;
        seq.push(v);
        if search_bilateral(n, triples, placed, seq) {
            return true;
        }
        seq.pop();
        placed[v] = false;
    }
    false
}

/// Brute-force search for any AT-free ordering (no search constraint).
pub fn exists_atfree_order_bruteforce(
    g: &Graph,
    oracle: &BetweennessOracle,
    cap: usize,
) -> Result<Option<Ordering>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let triples = betweenness_triples(oracle);
    let mut placed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    if search_atfree(n, &triples, &mut placed, &mut seq) {
        return Ok(Some(Ordering::new(seq, n, SearchKind::External)?));
    }
    Ok(None)
}

fn search_atfree(
    n: usize,
    triples: &[(usize, usize, usize)],
    placed: &mut [bool],
    seq: &mut Vec<usize>,
) -> bool {
    if seq.len() == n {
        return true;
    }
    'next: for v in 0..n {
        if placed[v] {
            continue;
        }
        // Violated iff a middle lands after both outers.
        for &(x, y, z) in triples {
            if v == y && placed[x] && placed[z] {
                continue 'next;
            }
        }
        placed[v] = true;
        seq.push(v);
        if search_atfree(n, triples, placed, seq) {
            return true;
        }
        seq.pop();
        placed[v] = false;
    }
    false
}

/// Brute-force search for a permutation that is both a valid BFS order and
/// an AT-free order; the independent oracle for the convexity BFS result.
pub fn exists_atfree_bfs_order_bruteforce(
    g: &Graph,
    oracle: &BetweennessOracle,
    cap: usize,
) -> Result<Option<Ordering>> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    g.check_connected()?;
    let triples = betweenness_triples(oracle);
    for s in 0..n {
        let mut placed = vec![false; n];
        let mut first_nbr = vec![usize::MAX; n];
        placed[s] = true;
        let mut seq = vec![s];
        for &w in g.neighbors(s) {
            first_nbr[w] = 0;
        }
        if search_bfs_atfree(g, &triples, &mut placed, &mut first_nbr, &mut seq) {
            return Ok(Some(Ordering::new(seq, n, SearchKind::External)?));
        }
    }
    Ok(None)
}

fn search_bfs_atfree(
    g: &Graph,
    triples: &[(usize, usize, usize)],
    placed: &mut [bool],
    first_nbr: &mut [usize],
    seq: &mut Vec<usize>,
) -> bool {
    let n = g.n();
    if seq.len() == n {
        return true;
    }
    // Valid BFS choices: undiscovered-excluded vertices minimising the
    // position of their first discovered neighbour.
    let best = (0..n)
        .filter(|&v| !placed[v] && first_nbr[v] != usize::MAX)
        .map(|v| first_nbr[v])
        .min();
    let Some(best) = best else { return false };
    'next: for v in 0..n {
        if placed[v] || first_nbr[v] != best {
            continue;
        }
        for &(x, y, z) in triples {
            if v == y && placed[x] && placed[z] {
                continue 'next;
            }
        }
        placed[v] = true;
        let pos = seq.len();
        seq.push(v);
        let mut touched = Vec::new();
        for &w in g.neighbors(v) {
            if !placed[w] && first_nbr[w] == usize::MAX {
                first_nbr[w] = pos;
                touched.push(w);
            }
        }
        if search_bfs_atfree(g, triples, placed, first_nbr, seq) {
            return true;
        }
        for w in touched {
            first_nbr[w] = usize::MAX;
        }
        seq.pop();
        placed[v] = false;
    }
    false
}
