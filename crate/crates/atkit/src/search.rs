//! Search engines: BFS, BFS+, LBFS, LBFS+, the convexity tie-break BFS in
//! both readings, and the pendant-path augmentation.
//!
//! All engines are deterministic: ties fall back to ascending canonical
//! index (or descending prior-order value for the `+` sweeps).

use std::collections::VecDeque;

use crate::convexity::BetweennessOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Bfs,
    BfsPlus,
    Lbfs,
    LbfsPlus,
    BfsConv,
    BfsConvMinHull,
    External,
}

impl SearchKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchKind::Bfs => "bfs",
            SearchKind::BfsPlus => "bfs_plus",
            SearchKind::Lbfs => "lbfs",
            SearchKind::LbfsPlus => "lbfs_plus",
            SearchKind::BfsConv => "bfs_conv",
            SearchKind::BfsConvMinHull => "bfs_conv_minhull",
            SearchKind::External => "external",
        }
    }
}

/// A permutation of the vertex set with positional lookup, tagged with the
/// search that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    seq: Vec<usize>,
    pos: Vec<usize>,
    kind: SearchKind,
}

impl Ordering {
    pub fn new(seq: Vec<usize>, n: usize, kind: SearchKind) -> Result<Ordering> {
        if seq.len() != n {
            return Err(Error::PermutationMismatch);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::PermutationMismatch);
            }
            pos[v] = i;
        }
        Ok(Ordering { seq, pos, kind })
    }

    /// Builds an externally supplied ordering from vertex names.
    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Ordering> {
        let seq = names
            .iter()
            .map(|s| g.vertex(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ordering::new(seq, g.n(), SearchKind::External)
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// 0-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn start(&self) -> usize {
        self.seq[0]
    }

    pub fn last(&self) -> usize {
        *self.seq.last().unwrap()
    }

    pub fn kind(&self) -> SearchKind {
        self.kind
    }

    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.seq.iter().map(|&v| g.name(v)).collect()
    }

    pub fn display(&self, g: &Graph) -> String {
        self.names(g).join(" ")
    }
}

/// Per-step diagnostics of a convexity-guided run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub steps: Vec<TraceStep>,
    /// First step at which no queued vertex kept the prefix convex; the
    /// engine falls back to plain BFS from there on. A set failure
    /// certifies the graph is not AT-free.
    pub failure: Option<ConvexFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub chosen: usize,
    /// Queue snapshot at the start of the step.
    pub eligible: Vec<usize>,
    /// Rejected queue candidates before the chosen one, each with the
    /// violating pair: `z` lies in `I(u, candidate)`.
    pub rejected: Vec<Rejection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rejection {
    pub candidate: usize,
    pub inner: usize,
    pub outer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexFailure {
    pub step: usize,
    pub queue: Vec<usize>,
}

impl ConvexFailure {
    pub fn to_error(&self, g: &Graph) -> Error {
        Error::ConvexChoiceUnavailable {
            step: self.step,
            queue: self.queue.iter().map(|&v| g.name(v).to_string()).collect(),
        }
    }
}

fn check_start(g: &Graph, s: usize) -> Result<()> {
    if s >= g.n() {
        return Err(Error::InvalidVertex(s.to_string()));
    }
    g.check_connected()
}

/// Plain BFS; neighbours are queued in ascending canonical order.
pub fn bfs(g: &Graph, s: usize) -> Result<Ordering> {
    check_start(g, s)?;
    bfs_with_insertion(g, s, |v| v, SearchKind::Bfs)
}

/// BFS+ sweep: starts at the prior order's last vertex and queues
/// neighbours highest-prior-value first.
pub fn bfs_plus(g: &Graph, prior: &Ordering) -> Result<Ordering> {
    if prior.seq.len() != g.n() {
        return Err(Error::PermutationMismatch);
    }
    g.check_connected()?;
    let n = g.n();
    bfs_with_insertion(g, prior.last(), |v| n - 1 - prior.position(v), SearchKind::BfsPlus)
}

fn bfs_with_insertion(
    g: &Graph,
    s: usize,
    key: impl Fn(usize) -> usize,
    kind: SearchKind,
) -> Result<Ordering> {
    let mut queue = VecDeque::from([s]);
    let mut discovered = vec![false; g.n()];
    discovered[s] = true;
    let mut seq = Vec::with_capacity(g.n());
    while let Some(v) = queue.pop_front() {
        seq.push(v);
        let mut fresh: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !discovered[w])
            .collect();
        fresh.sort_by_key(|&w| key(w));
        for w in fresh {
            discovered[w] = true;
            queue.push_back(w);
        }
    }
    Ordering::new(seq, g.n(), kind)
}

/// Lexicographic BFS; ties broken by ascending canonical index.
pub fn lbfs(g: &Graph, s: usize) -> Result<Ordering> {
    check_start(g, s)?;
    lbfs_with_tiebreak(g, s, |v| v, SearchKind::Lbfs)
}

/// LBFS+ sweep: starts at the prior order's last vertex; within a slice of
/// tied vertices the highest prior value is chosen first.
pub fn lbfs_plus(g: &Graph, prior: &Ordering) -> Result<Ordering> {
    if prior.seq.len() != g.n() {
        return Err(Error::PermutationMismatch);
    }
    g.check_connected()?;
    let n = g.n();
    lbfs_with_tiebreak(g, prior.last(), |v| n - 1 - prior.position(v), SearchKind::LbfsPlus)
}

fn lbfs_with_tiebreak(
    g: &Graph,
    s: usize,
    key: impl Fn(usize) -> usize,
    kind: SearchKind,
) -> Result<Ordering> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for step in 0..n {
        let v = if step == 0 {
            s
        } else {
            let mut best: Option<usize> = None;
            for u in 0..n {
                if visited[u] {
                    continue;
                }
                best = match best {
                    None => Some(u),
                    Some(b) => {
                        let better = match labels[u].cmp(&labels[b]) {
                            std::cmp::Ordering::Greater => true,
                            std::cmp::Ordering::Less => false,
                            std::cmp::Ordering::Equal => key(u) < key(b),
                        };
                        Some(if better { u } else { b })
                    }
                };
            }
            best.unwrap()
        };
        visited[v] = true;
        seq.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - 1 - step);
            }
        }
    }
    Ordering::new(seq, n, kind)
}

/// The convexity tie-break BFS: a FIFO of discovered vertices, taking at
/// each step the earliest queued vertex whose addition keeps the visited
/// prefix convex. When no queued vertex qualifies the trace records the
/// failure and the run continues as plain BFS.
pub fn bfs_conv(
    g: &Graph,
    s: usize,
    oracle: &BetweennessOracle,
) -> Result<(Ordering, SearchTrace)> {
    check_start(g, s)?;
    let n = g.n();
    let mut queue: Vec<usize> = vec![s];
    let mut discovered = vec![false; n];
    discovered[s] = true;
    let mut in_prefix = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);
    let mut failure: Option<ConvexFailure> = None;

    for step in 1..=n {
        let eligible = queue.clone();
        let mut rejected = Vec::new();
        let mut choice: Option<usize> = None;
        if failure.is_none() {
            for (i, &v) in queue.iter().enumerate() {
                match convexity_conflict(oracle, &seq, &in_prefix, v) {
                    None => {
                        choice = Some(i);
                        break;
                    }
                    Some((u, z)) => rejected.push(Rejection {
                        candidate: v,
                        inner: u,
                        outer: z,
                    }),
                }
            }
            if choice.is_none() {
                failure = Some(ConvexFailure {
                    step,
                    queue: queue.clone(),
                });
            }
        }
        // Fallback (and post-failure) choice: plain BFS front.
        let idx = choice.unwrap_or(0);
        let v = queue.remove(idx);
        in_prefix[v] = true;
        seq.push(v);
        steps.push(TraceStep {
            chosen: v,
            eligible,
            rejected,
        });
        for &w in g.neighbors(v) {
            if !discovered[w] {
                discovered[w] = true;
                queue.push(w);
            }
        }
    }
    let order = Ordering::new(seq, n, SearchKind::BfsConv)?;
    Ok((order, SearchTrace { steps, failure }))
}

/// First `(u, z)` with `u` in the prefix, `z` outside it, and
/// `z in I(u, v)`; `None` means `prefix + v` stays convex.
fn convexity_conflict(
    oracle: &BetweennessOracle,
    prefix: &[usize],
    in_prefix: &[bool],
    v: usize,
) -> Option<(usize, usize)> {
    let n = in_prefix.len();
    let mut inside: Vec<usize> = prefix.to_vec();
    inside.sort_unstable();
    for &u in &inside {
        for z in 0..n {
            if in_prefix[z] || z == v || z == u {
                continue;
            }
            if oracle.is_between(u, z, v) {
                return Some((u, z));
            }
        }
    }
    None
}

/// The minimal-hull reading of the convexity tie-break: among valid BFS
/// choices, take a vertex minimising `|conv(S + v)|`. Never fails.
pub fn bfs_conv_minhull(
    g: &Graph,
    s: usize,
    oracle: &BetweennessOracle,
) -> Result<(Ordering, SearchTrace)> {
    check_start(g, s)?;
    let n = g.n();
    let mut queue: Vec<usize> = vec![s];
    let mut discovery_step = vec![usize::MAX; n];
    discovery_step[s] = 0;
    let mut seq = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);

    for _step in 1..=n {
        let eligible_mark = queue.iter().map(|&v| discovery_step[v]).min().unwrap();
        let eligible: Vec<usize> = queue
            .iter()
            .copied()
            .filter(|&v| discovery_step[v] == eligible_mark)
            .collect();
        let mut best: Option<(usize, usize)> = None; // (hull size, vertex)
        for &v in &eligible {
            let mut members = seq.clone();
            members.push(v);
            let size = oracle.convex_hull(&members).members.len();
            best = match best {
                None => Some((size, v)),
                Some((bs, bv)) => {
                    if size < bs || (size == bs && v < bv) {
                        Some((size, v))
                    } else {
                        Some((bs, bv))
                    }
                }
            };
        }
        let (_, v) = best.unwrap();
        let idx = queue.iter().position(|&x| x == v).unwrap();
        queue.remove(idx);
        seq.push(v);
        steps.push(TraceStep {
            chosen: v,
            eligible,
            rejected: Vec::new(),
        });
        for &w in g.neighbors(v) {
            if discovery_step[w] == usize::MAX {
                discovery_step[w] = seq.len();
                queue.push(w);
            }
        }
    }
    let order = Ordering::new(seq, n, SearchKind::BfsConvMinHull)?;
    Ok((order, SearchTrace {
        steps,
        failure: None,
    }))
}

/// Result of the pendant-path augmentation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedRun {
    /// The final ordering over the original graph.
    pub order: Ordering,
    /// The full ordering of the augmented graph, as vertex names.
    pub augmented_order: Vec<String>,
}

/// Attaches a fresh three-vertex pendant path to the admissible start `s`,
/// runs the convexity BFS from the path's free end, and strips the path
/// from the front. On AT-free inputs the result is both an AT-free order
/// and a monotone dominating pair order.
pub fn bfs_conv_augmented(
    g: &Graph,
    s: usize,
    oracle: &BetweennessOracle,
) -> Result<AugmentedRun> {
    check_start(g, s)?;
    if !oracle.admissible_vertices().contains(&s) {
        return Err(Error::NotAdmissible(g.name(s).to_string()));
    }
    let fresh: Vec<String> = ["v1", "v2", "v3"]
        .iter()
        .map(|base| {
            let mut name = base.to_string();
            while g.vertex(&name).is_ok() {
                name.push('\'');
            }
            name
        })
        .collect();
    let mut edges: Vec<(String, String)> = vec![
        (fresh[0].clone(), fresh[1].clone()),
        (fresh[1].clone(), fresh[2].clone()),
        (fresh[2].clone(), g.name(s).to_string()),
    ];
    for &(u, v) in g.edges() {
        edges.push((g.name(u).to_string(), g.name(v).to_string()));
    }
    let edge_refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let aug = Graph::from_named_edges(&edge_refs).expect("augmented graph is simple");
    let aug_oracle = BetweennessOracle::build(&aug);
    let (aug_order, trace) = bfs_conv(&aug, 0, &aug_oracle)?;
    if let Some(failure) = &trace.failure {
        return Err(failure.to_error(&aug));
    }
    // The pendant path forces the first three visits.
    debug_assert_eq!(&aug_order.seq()[..3], &[0, 1, 2]);
    let seq: Vec<usize> = aug_order.seq()[3..]
        .iter()
        .map(|&v| g.vertex(aug.name(v)).expect("augmented vertex maps back"))
        .collect();
    Ok(AugmentedRun {
        order: Ordering::new(seq, g.n(), SearchKind::BfsConv)?,
        augmented_order: aug_order.names(&aug).iter().map(|s| s.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{fig1, fig2g, fig3, fig4};

    fn named(g: &Graph, o: &Ordering) -> Vec<String> {
        o.names(g).iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn bfs_examples() {
        let g = fig1();
        let o = bfs(&g, 0).unwrap();
        assert_eq!(named(&g, &o), ["1", "2", "3", "4", "5", "6", "7", "8"]);

        let p5 = Graph::path(5);
        let o = bfs(&p5, 2).unwrap();
        assert_eq!(o.seq(), &[2, 1, 3, 0, 4]);

        let c5 = Graph::cycle(5);
        let o = bfs(&c5, 0).unwrap();
        assert_eq!(o.seq(), &[0, 1, 4, 2, 3]);
    }

    #[test]
    fn bfs_plus_fig4_rows() {
        let g = fig4();
        let tau1 = Ordering::from_names(
            &g,
            &["1", "2", "3", "a'", "4", "5", "a", "6", "7", "z'", "b'", "b", "z"],
        )
        .unwrap();
        let tau2 = bfs_plus(&g, &tau1).unwrap();
        assert_eq!(
            named(&g, &tau2),
            ["z", "7", "6", "3", "b", "a", "1", "2", "5", "4", "a'", "b'", "z'"]
        );
        let tau3 = bfs_plus(&g, &tau2).unwrap();
        assert_eq!(
            named(&g, &tau3),
            ["z'", "4", "5", "2", "b'", "a'", "1", "3", "a", "6", "7", "b", "z"]
        );
    }

    #[test]
    fn bfs_plus_p3() {
        let g = Graph::path(3);
        let tau = Ordering::from_names(&g, &["1", "2", "3"]).unwrap();
        let o = bfs_plus(&g, &tau).unwrap();
        assert_eq!(o.seq(), &[2, 1, 0]);
    }

    #[test]
    fn lbfs_examples() {
        let p5 = Graph::path(5);
        assert_eq!(lbfs(&p5, 0).unwrap().seq(), &[0, 1, 2, 3, 4]);

        let c5 = Graph::cycle(5);
        assert_eq!(lbfs(&c5, 0).unwrap().seq(), &[0, 1, 4, 2, 3]);

        // The deterministic run from 1 on the bad-claw fixture must itself
        // be a valid LBFS order, whatever the tie-breaks produce.
        let g = fig3();
        let o = lbfs(&g, 0).unwrap();
        assert!(crate::verify::is_lbfs_order(&g, &o).is_none());
    }

    #[test]
    fn lbfs_plus_fig3_rows() {
        let g = fig3();
        let tau1 = Ordering::from_names(&g, &["1", "2", "4", "z", "3", "b", "a", "c"]).unwrap();
        let tau2 = lbfs_plus(&g, &tau1).unwrap();
        assert_eq!(named(&g, &tau2), ["c", "a", "b", "z", "4", "3", "2", "1"]);
        let tau3 = lbfs_plus(&g, &tau2).unwrap();
        assert_eq!(named(&g, &tau3), ["1", "2", "3", "4", "z", "b", "a", "c"]);
    }

    #[test]
    fn lbfs_plus_p3() {
        let g = Graph::path(3);
        let tau = Ordering::from_names(&g, &["1", "2", "3"]).unwrap();
        assert_eq!(lbfs_plus(&g, &tau).unwrap().seq(), &[2, 1, 0]);
    }

    #[test]
    fn bfs_conv_fig1_and_fig2() {
        let g = fig1();
        let o = BetweennessOracle::build(&g);
        let (order, trace) = bfs_conv(&g, 0, &o).unwrap();
        assert_eq!(named(&g, &order), ["1", "2", "3", "4", "5", "6", "7", "8"]);
        assert!(trace.failure.is_none());

        let g = fig2g();
        let o = BetweennessOracle::build(&g);
        let (order, trace) = bfs_conv(&g, 0, &o).unwrap();
        assert_eq!(named(&g, &order), ["1", "2", "3", "4", "5"]);
        assert!(trace.failure.is_none());
    }

    #[test]
    fn bfs_conv_c6_fails_at_step_3() {
        let g = Graph::cycle(6);
        let o = BetweennessOracle::build(&g);
        let (_, trace) = bfs_conv(&g, 0, &o).unwrap();
        let failure = trace.failure.expect("C6 has no convex BFS prefix order");
        assert_eq!(failure.step, 3);
        assert_eq!(failure.queue, vec![5, 2]);
        // Justifications: 4 in I(2,6) and 5 in I(1,3), 1-based.
        let step = &trace.steps[2];
        assert_eq!(step.rejected.len(), 2);
        assert_eq!(
            (step.rejected[0].candidate, step.rejected[0].inner, step.rejected[0].outer),
            (5, 1, 3)
        );
        assert_eq!(
            (step.rejected[1].candidate, step.rejected[1].inner, step.rejected[1].outer),
            (2, 0, 4)
        );
    }

    #[test]
    fn bfs_conv_minhull_examples() {
        let g = fig1();
        let o = BetweennessOracle::build(&g);
        let (order, _) = bfs_conv_minhull(&g, 0, &o).unwrap();
        assert_eq!(named(&g, &order), ["1", "2", "3", "4", "5", "6", "7", "8"]);

        let p5 = Graph::path(5);
        let o = BetweennessOracle::build(&p5);
        let (order, _) = bfs_conv_minhull(&p5, 2, &o).unwrap();
        assert_eq!(order.seq(), &[2, 1, 3, 0, 4]);
        assert!(crate::verify::is_atfree_order(&o, &order).is_none());

        // Completes on C6 even though no AT-free order exists.
        let c6 = Graph::cycle(6);
        let o = BetweennessOracle::build(&c6);
        let (order, _) = bfs_conv_minhull(&c6, 0, &o).unwrap();
        assert!(crate::verify::is_atfree_order(&o, &order).is_some());
    }

    #[test]
    fn augmented_fig2() {
        let g = fig2g();
        let o = BetweennessOracle::build(&g);
        let run = bfs_conv_augmented(&g, 0, &o).unwrap();
        assert_eq!(named(&g, &run.order), ["1", "2", "3", "5", "4"]);
        assert_eq!(
            run.augmented_order,
            ["v1", "v2", "v3", "1", "2", "3", "5", "4"]
        );
    }

    #[test]
    fn augmented_p5() {
        let g = Graph::path(5);
        let o = BetweennessOracle::build(&g);
        let run = bfs_conv_augmented(&g, 0, &o).unwrap();
        assert_eq!(run.order.seq(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn augmented_rejects_inadmissible_start() {
        let g = fig2g();
        let o = BetweennessOracle::build(&g);
        let three = g.vertex("3").unwrap();
        let admissible = o.admissible_vertices();
        let run = bfs_conv_augmented(&g, three, &o);
        if admissible.contains(&three) {
            assert!(run.is_ok());
        } else {
            assert_eq!(run, Err(Error::NotAdmissible("3".into())));
        }
    }

    #[test]
    fn searches_reject_disconnected() {
        let g = Graph::from_index_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(bfs(&g, 0), Err(Error::DisconnectedGraph { .. })));
        assert!(matches!(lbfs(&g, 0), Err(Error::DisconnectedGraph { .. })));
    }
}
