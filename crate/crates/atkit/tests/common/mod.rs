//! Independent brute-force oracles for cross-checking the library: direct
//! chordless-path enumeration for the betweenness relation and a naive
//! fixed-point closure for convex hulls. Deliberately shares no code with
//! the component-based implementations under test.

#![allow(dead_code)]

use atkit::graph::Graph;
use atkit::search::{Ordering, SearchKind};

/// True iff a chordless `from`-`to` path exists that avoids the closed
/// neighbourhood of `avoid`, found by exhaustive simple-path search.
pub fn exists_chordless_path_avoiding(g: &Graph, from: usize, to: usize, avoid: usize) -> bool {
    if from == avoid
        || to == avoid
        || from == to
        || g.has_edge(from, avoid)
        || g.has_edge(to, avoid)
    {
        return false;
    }
    let mut path = vec![from];
    extend_chordless(g, to, avoid, &mut path)
}

fn extend_chordless(g: &Graph, to: usize, avoid: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    if last == to {
        return true;
    }
    for &w in g.neighbors(last) {
        if w == avoid || g.has_edge(w, avoid) || path.contains(&w) {
            continue;
        }
        // Chordless prefixes only: the new vertex may touch just the tail.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        if extend_chordless(g, to, avoid, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Betweenness by the path definition: a chordless x-y path avoiding z and
/// a chordless y-z path avoiding x.
pub fn brute_is_between(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    exists_chordless_path_avoiding(g, x, y, z) && exists_chordless_path_avoiding(g, y, z, x)
}

/// The full relation as a lookup table indexed by (x, y, z).
pub fn brute_relation(g: &Graph) -> Vec<Vec<Vec<bool>>> {
    let n = g.n();
    let mut rel = vec![vec![vec![false; n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != y && y != z && x != z {
                    rel[x][y][z] = brute_is_between(g, x, y, z);
                }
            }
        }
    }
    rel
}

/// Naive convex hull: add middles of member pairs until a fixed point.
pub fn naive_hull(rel: &[Vec<Vec<bool>>], n: usize, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in seed {
        inside[v] = true;
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            if !inside[a] {
                continue;
            }
            for c in 0..n {
                if c == a || !inside[c] {
                    continue;
                }
                for b in 0..n {
                    if !inside[b] && b != a && b != c && rel[a][b][c] {
                        inside[b] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return (0..n).filter(|&v| inside[v]).collect();
        }
    }
}

/// Asteroidal triple by the textbook definition, independent of the
/// component machinery: an independent triple where each pair is joined by
/// a path avoiding the closed neighbourhood of the third.
pub fn brute_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c) {
                    continue;
                }
                if path_avoiding_exists(g, a, b, c)
                    && path_avoiding_exists(g, a, c, b)
                    && path_avoiding_exists(g, b, c, a)
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn path_avoiding_exists(g: &Graph, u: usize, w: usize, z: usize) -> bool {
    // Reachability inside G - N[z] by plain DFS.
    if u == z || w == z || g.has_edge(u, z) || g.has_edge(w, z) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(v) = stack.pop() {
        if v == w {
            return true;
        }
        for &x in g.neighbors(v) {
            if !seen[x] && x != z && !g.has_edge(x, z) {
                seen[x] = true;
                stack.push(x);
            }
        }
    }
    false
}

/// Build an ordering over `g` from vertex names, panicking on mistakes.
pub fn ord(g: &Graph, names: &[&str]) -> Ordering {
    Ordering::from_names(g, names).expect("test ordering must be a permutation")
}

/// Build an ordering directly from canonical indices.
pub fn ord_idx(g: &Graph, seq: &[usize]) -> Ordering {
    Ordering::new(seq.to_vec(), g.n(), SearchKind::External)
        .expect("test ordering must be a permutation")
}
