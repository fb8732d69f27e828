//! Domination betweenness, domination intervals, convex hulls,
//! admissibility, and asteroidal triple detection.
//!
//! The betweenness relation is evaluated through component co-membership:
//! a chordless `x`-`y` path avoiding `z` exists iff `x` and `y` lie in one
//! component of `G - N[z]` (any avoiding path shortens to a chordless one).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Precomputed per-vertex component structure of `G - N[z]`, giving O(1)
/// betweenness queries after an O(n(n+m)) build.
#[derive(Debug, Clone)]
pub struct BetweennessOracle<'a> {
    g: &'a Graph,
    comp: Vec<Vec<Option<usize>>>,
}

impl<'a> BetweennessOracle<'a> {
    pub fn build(g: &'a Graph) -> Self {
        let comp = (0..g.n()).map(|z| g.components_avoiding(z)).collect();
        BetweennessOracle { g, comp }
    }

    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    /// True iff `a` and `b` share a component of `G - N[c]`, i.e. some
    /// `a`-`b` path avoids `c`.
    pub fn co_avoiding(&self, a: usize, b: usize, c: usize) -> bool {
        match (self.comp[c][a], self.comp[c][b]) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// `(x, y, z)` in the domination betweenness relation. Arguments must
    /// be distinct.
    pub fn is_between(&self, x: usize, y: usize, z: usize) -> bool {
        assert!(x != y && y != z && x != z, "betweenness needs distinct vertices");
        let res = self.co_avoiding(x, y, z) && self.co_avoiding(y, z, x);
        debug_assert!(
            !res
                || (!self.g.has_edge(x, y) && !self.g.has_edge(y, z) && !self.g.has_edge(x, z)),
            "betweenness must imply an independent triple"
        );
        res
    }

    /// The domination interval `I(x, z)`, ascending.
    pub fn interval(&self, x: usize, z: usize) -> Vec<usize> {
        assert!(x != z);
        (0..self.g.n())
            .filter(|&y| y != x && y != z && self.is_between(x, y, z))
            .collect()
    }

    /// Least fixed point of the interval-closure rule containing `members`.
    pub fn convex_hull(&self, members: &[usize]) -> ConvexSet {
        let mut mask = vec![false; self.g.n()];
        for &v in members {
            mask[v] = true;
        }
        self.close(&mut mask);
        ConvexSet {
            members: (0..self.g.n()).filter(|&v| mask[v]).collect(),
            certified: true,
        }
    }

    fn close(&self, mask: &mut [bool]) {
        loop {
            let mut changed = false;
            let inside: Vec<usize> = (0..mask.len()).filter(|&v| mask[v]).collect();
            for (i, &a) in inside.iter().enumerate() {
                for &c in &inside[i + 1..] {
                    for b in 0..mask.len() {
                        if !mask[b] && self.is_between(a, b, c) {
                            mask[b] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    pub fn is_convex(&self, members: &[usize]) -> bool {
        let mut mask = vec![false; self.g.n()];
        for &v in members {
            mask[v] = true;
        }
        let inside: Vec<usize> = members.to_vec();
        for (i, &a) in inside.iter().enumerate() {
            for &c in &inside[i + 1..] {
                for b in 0..mask.len() {
                    if !mask[b] && self.is_between(a, b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Convex set whose complement is also convex.
    pub fn is_halfspace(&self, members: &[usize]) -> bool {
        let inside: Vec<bool> = {
            let mut m = vec![false; self.g.n()];
            for &v in members {
                m[v] = true;
            }
            m
        };
        let complement: Vec<usize> = (0..self.g.n()).filter(|&v| !inside[v]).collect();
        self.is_convex(members) && self.is_convex(&complement)
    }

    /// Vertices that are the middle of no betweenness triple.
    pub fn admissible_vertices(&self) -> Vec<usize> {
        let n = self.g.n();
        (0..n)
            .filter(|&y| {
                !(0..n).any(|x| {
                    x != y
                        && (x + 1..n).any(|z| z != y && self.is_between(x, y, z))
                })
            })
            .collect()
    }

    /// Least asteroidal triple, if any: an independent triple where each
    /// pair is joined by a path avoiding the third.
    pub fn asteroidal_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.g.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.g.has_edge(a, b) || self.g.has_edge(b, c) || self.g.has_edge(a, c) {
                        continue;
                    }
                    if self.co_avoiding(a, b, c)
                        && self.co_avoiding(b, c, a)
                        && self.co_avoiding(a, c, b)
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Checks transitivity of the betweenness relation. Returns the least
    /// violating 4-tuple `(w, x, y, z)` where `(w,x,y)` and `(x,y,z)` hold
    /// but `(w,x,z)` does not, or `None` if transitive.
    pub fn transitivity_violation(&self) -> Option<[usize; 4]> {
        let n = self.g.n();
        for w in 0..n {
            for x in 0..n {
                if x == w {
                    continue;
                }
                for y in 0..n {
                    if y == w || y == x || !self.is_between(w, x, y) {
                        continue;
                    }
                    for z in 0..n {
                        if z == x || z == y {
                            continue;
                        }
                        // The relation is strict, so a conclusion triple with
                        // z = w is never a member.
                        if self.is_between(x, y, z)
                            && !(z != w && self.is_between(w, x, z))
                        {
                            return Some([w, x, y, z]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Anti-exchange check: for every convex `X` and `p, q` outside it,
    /// `q in conv(X+p)` must rule out `p in conv(X+q)`. Exhaustive over all
    /// subsets up to `max_exhaustive` vertices; larger graphs fall back to
    /// a seeded sample of subsets.
    pub fn anti_exchange(&self, max_exhaustive: usize, seed: u64) -> AntiExchangeOutcome {
        let n = self.g.n();
        if n <= max_exhaustive && n <= 63 {
            for bits in 0u64..(1u64 << n) {
                let members: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
                if !self.is_convex(&members) {
                    continue;
                }
                if let Some(w) = self.anti_exchange_violation(&members) {
                    return AntiExchangeOutcome {
                        holds: false,
                        sampled: false,
                        witness: Some(w),
                    };
                }
            }
            AntiExchangeOutcome {
                holds: true,
                sampled: false,
                witness: None,
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..512 {
                let sample: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                let members = self.convex_hull(&sample).members;
                if let Some(w) = self.anti_exchange_violation(&members) {
                    return AntiExchangeOutcome {
                        holds: false,
                        sampled: true,
                        witness: Some(w),
                    };
                }
            }
            AntiExchangeOutcome {
                holds: true,
                sampled: true,
                witness: None,
            }
        }
    }

    fn anti_exchange_violation(&self, members: &[usize]) -> Option<(usize, usize, Vec<usize>)> {
        let n = self.g.n();
        let mut inside = vec![false; n];
        for &v in members {
            inside[v] = true;
        }
        let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
        let hulls: Vec<Vec<bool>> = outside
            .iter()
            .map(|&p| {
                let mut mask = inside.clone();
                mask[p] = true;
                self.close(&mut mask);
                mask
            })
            .collect();
        for (i, &p) in outside.iter().enumerate() {
            for (j, &q) in outside.iter().enumerate() {
                if p == q {
                    continue;
                }
                if hulls[i][q] && hulls[j][p] {
                    return Some((p, q, members.to_vec()));
                }
            }
        }
        None
    }
}

/// A vertex set closed under interval membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexSet {
    pub members: Vec<usize>,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiExchangeOutcome {
    pub holds: bool,
    pub sampled: bool,
    /// `(p, q, X)` with `q in conv(X+p)` and `p in conv(X+q)`.
    pub witness: Option<(usize, usize, Vec<usize>)>,
}

/// Least asteroidal triple of `g`, if any.
pub fn find_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    BetweennessOracle::build(g).asteroidal_triple()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_between_paths() {
        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        assert!(o.is_between(0, 2, 4));
        assert!(!o.is_between(0, 1, 2));

        let p7 = Graph::path(7);
        let o = BetweennessOracle::build(&p7);
        assert!(o.is_between(0, 3, 6));
    }

    #[test]
    fn c5_relation_is_empty() {
        let c5 = Graph::cycle(5);
        let o = BetweennessOracle::build(&c5);
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    if x != y && y != z && x != z {
                        assert!(!o.is_between(x, y, z));
                    }
                }
            }
        }
        assert_eq!(o.admissible_vertices(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn fig3_bad_claw_triple() {
        let g = crate::io::fig3();
        let o = BetweennessOracle::build(&g);
        let (a, z, b) = (
            g.vertex("a").unwrap(),
            g.vertex("z").unwrap(),
            g.vertex("b").unwrap(),
        );
        assert!(o.is_between(a, z, b));
        assert_eq!(o.asteroidal_triple(), None);
    }

    #[test]
    fn intervals() {
        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        assert_eq!(o.interval(0, 4), vec![2]);

        let p7 = Graph::path(7);
        let o = BetweennessOracle::build(&p7);
        assert_eq!(o.interval(0, 6), vec![2, 3, 4]);

        let c5 = Graph::cycle(5);
        let o = BetweennessOracle::build(&c5);
        assert_eq!(o.interval(0, 2), Vec::<usize>::new());
    }

    #[test]
    fn hulls_and_convexity() {
        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        assert_eq!(o.convex_hull(&[0, 4]).members, vec![0, 2, 4]);
        assert_eq!(o.convex_hull(&[]).members, Vec::<usize>::new());
        assert_eq!(o.convex_hull(&[0, 1, 2, 3, 4]).members, vec![0, 1, 2, 3, 4]);
        assert!(o.is_convex(&[0, 1]));
        assert!(!o.is_convex(&[0, 4]));
        assert!(o.is_convex(&[2]));

        let p7 = Graph::path(7);
        let o = BetweennessOracle::build(&p7);
        assert_eq!(o.convex_hull(&[0, 6]).members, vec![0, 2, 3, 4, 6]);
    }

    #[test]
    fn halfspaces() {
        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        assert!(o.is_halfspace(&[0, 1]));
        // {1,3,5} and its complement {2,4} are both interval-closed, so this
        // is a halfspace; confirmed by the brute-force closure oracle.
        assert!(o.is_halfspace(&[0, 2, 4]));
        assert!(o.is_halfspace(&[]));
    }

    #[test]
    fn admissible_sets() {
        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        assert_eq!(o.admissible_vertices(), vec![0, 1, 3, 4]);

        let p7 = Graph::path(7);
        let o = BetweennessOracle::build(&p7);
        assert_eq!(o.admissible_vertices(), vec![0, 1, 5, 6]);
    }

    #[test]
    fn asteroidal_triples() {
        assert_eq!(find_asteroidal_triple(&Graph::cycle(6)), Some((0, 2, 4)));
        assert_eq!(find_asteroidal_triple(&Graph::path(5)), None);
        assert_eq!(find_asteroidal_triple(&crate::io::fig3()), None);
    }

    #[test]
    fn transitivity() {
        let p7 = Graph::path(7);
        assert_eq!(BetweennessOracle::build(&p7).transitivity_violation(), None);
        let c6 = Graph::cycle(6);
        // (0,2,4) and (2,4,0) are both in the relation, but the conclusion
        // (0,2,0) is degenerate and therefore not.
        assert_eq!(
            BetweennessOracle::build(&c6).transitivity_violation(),
            Some([0, 2, 4, 0])
        );
        let c5 = Graph::cycle(5);
        assert_eq!(BetweennessOracle::build(&c5).transitivity_violation(), None);
    }

    #[test]
    fn anti_exchange_examples() {
        let p5 = Graph::path(5);
        assert!(BetweennessOracle::build(&p5).anti_exchange(8, 1).holds);
        let c6 = Graph::cycle(6);
        let out = BetweennessOracle::build(&c6).anti_exchange(8, 1);
        assert!(!out.holds);
        assert!(!out.sampled);
        assert!(out.witness.is_some());
        let c5 = Graph::cycle(5);
        assert!(BetweennessOracle::build(&c5).anti_exchange(8, 1).holds);
    }
}
