//! Immutable simple undirected graphs with named vertices, plus the
//! distance/component primitives the search and convexity layers consume.
//!
//! Vertices carry opaque string names; a canonical index `0..n-1` is
//! assigned in introduction order and all deterministic tie-breaking in
//! this crate refers to that index.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from named edges. Vertices are introduced in order of
    /// first appearance, which fixes their canonical indices.
    pub fn from_named_edges(pairs: &[(&str, &str)]) -> Result<Graph> {
        let mut g = Graph {
            names: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            edges: Vec::new(),
        };
        for (line, (a, b)) in pairs.iter().enumerate() {
            let u = g.intern(a);
            let v = g.intern(b);
            if u == v {
                return Err(Error::SelfLoop {
                    line: line + 1,
                    vertex: a.to_string(),
                });
            }
            if g.adj[u].contains(&v) {
                return Err(Error::DuplicateEdge {
                    line: line + 1,
                    edge: format!("{a} {b}"),
                });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edges.push((u, v));
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds a graph on `n` vertices named `1..n` from index pairs.
    pub fn from_index_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph {
            names: (1..=n).map(|i| i.to_string()).collect(),
            index: (1..=n).map(|i| (i.to_string(), i - 1)).collect(),
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        };
        for (line, &(u, v)) in pairs.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop {
                    line: line + 1,
                    vertex: g.names[u].clone(),
                });
            }
            if g.adj[u].contains(&v) {
                return Err(Error::DuplicateEdge {
                    line: line + 1,
                    edge: format!("{} {}", g.names[u], g.names[v]),
                });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edges.push((u, v));
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// The path graph `P_n` with vertices `1..n` along the path.
    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_index_edges(n, &pairs).expect("path edges are simple")
    }

    /// The cycle graph `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        pairs.push((n - 1, 0));
        Graph::from_index_edges(n, &pairs).expect("cycle edges are simple")
    }

    fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adj.push(Vec::new());
        i
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Resolves a vertex name to its canonical index.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidVertex(name.to_string()))
    }

    /// Neighbours of `v` in ascending canonical order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in insertion order, as stored.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_from(0).is_empty()
    }

    /// Vertices unreachable from `s`.
    pub fn unreachable_from(&self, s: usize) -> Vec<usize> {
        if self.n() == 0 {
            return Vec::new();
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n()).filter(|&v| !seen[v]).collect()
    }

    pub(crate) fn check_connected(&self) -> Result<()> {
        let unreachable = self.unreachable_from(0);
        if unreachable.is_empty() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph {
                unreachable: unreachable.iter().map(|&v| self.names[v].clone()).collect(),
            })
        }
    }

    /// Induced subgraph on `verts` (ascending canonical indices). Vertex
    /// `i` of the result corresponds to `verts[i]`; names are preserved.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            old_to_new[v] = i;
        }
        let mut g = Graph {
            names: verts.iter().map(|&v| self.names[v].clone()).collect(),
            index: verts
                .iter()
                .enumerate()
                .map(|(i, &v)| (self.names[v].clone(), i))
                .collect(),
            adj: vec![Vec::new(); verts.len()],
            edges: Vec::new(),
        };
        for &(u, v) in &self.edges {
            let (nu, nv) = (old_to_new[u], old_to_new[v]);
            if nu != usize::MAX && nv != usize::MAX {
                g.adj[nu].push(nv);
                g.adj[nv].push(nu);
                g.edges.push((nu, nv));
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g
    }

    /// Partitions `V \ N[z]` into connected components of the induced
    /// subgraph. `None` marks removed vertices (the closed neighbourhood of
    /// `z`); component ids are numbered by least contained canonical index.
    pub fn components_avoiding(&self, z: usize) -> Vec<Option<usize>> {
        let mut removed = vec![false; self.n()];
        removed[z] = true;
        for &w in &self.adj[z] {
            removed[w] = true;
        }
        let mut comp = vec![None; self.n()];
        let mut next_id = 0usize;
        for v in 0..self.n() {
            if removed[v] || comp[v].is_some() {
                continue;
            }
            let id = next_id;
            next_id += 1;
            comp[v] = Some(id);
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &w in &self.adj[x] {
                    if !removed[w] && comp[w].is_none() {
                        comp[w] = Some(id);
                        stack.push(w);
                    }
                }
            }
        }
        comp
    }

    /// BFS distance layers from `s`. Fails on disconnected input, naming
    /// the unreachable vertices.
    pub fn bfs_layers(&self, s: usize) -> Result<LayerDecomposition> {
        let unreachable = self.unreachable_from(s);
        if !unreachable.is_empty() {
            return Err(Error::DisconnectedGraph {
                unreachable: unreachable.iter().map(|&v| self.names[v].clone()).collect(),
            });
        }
        let mut layer_of = vec![usize::MAX; self.n()];
        layer_of[s] = 0;
        let mut layers = vec![vec![s]];
        loop {
            let last = layers.last().unwrap();
            let mut next = Vec::new();
            for &v in last {
                for &w in &self.adj[v] {
                    if layer_of[w] == usize::MAX {
                        layer_of[w] = layers.len();
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            layers.push(next);
        }
        Ok(LayerDecomposition {
            source: s,
            layers,
            layer_of,
        })
    }

    /// A chordless `u`-`w` path avoiding `z`, when one exists. The witness
    /// is the lexicographically least (by canonical index) shortest path
    /// inside `G - N[z]`; shortest paths in an induced subgraph are
    /// chordless within it.
    pub fn path_avoiding(&self, u: usize, w: usize, z: usize) -> Option<Path> {
        assert!(u != w && u != z && w != z, "u, w, z must be distinct");
        let comp = self.components_avoiding(z);
        match (comp[u], comp[w]) {
            (Some(a), Some(b)) if a == b => {}
            _ => return None,
        }
        // Distances from w inside the allowed set, then a greedy walk from
        // u always stepping to the least-index neighbour one closer to w.
        let mut dist = vec![usize::MAX; self.n()];
        dist[w] = 0;
        let mut queue = std::collections::VecDeque::from([w]);
        while let Some(v) = queue.pop_front() {
            for &x in &self.adj[v] {
                if comp[x] == comp[w] && dist[x] == usize::MAX {
                    dist[x] = dist[v] + 1;
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != w {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&x| comp[x] == comp[w] && dist[x] + 1 == dist[cur])
                .expect("co-component vertices are connected");
            path.push(next);
            cur = next;
        }
        debug_assert!(is_chordless(self, &path));
        Some(Path {
            vertices: path,
            chordless: true,
        })
    }
}

fn is_chordless(g: &Graph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            if g.has_edge(path[i], path[j]) {
                return false;
            }
        }
    }
    true
}

/// BFS distance layers `L^0(s), ..., L^k(s)` from a source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
    layer_of: Vec<usize>,
}

impl LayerDecomposition {
    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    /// `ecc_G(source)`: the largest layer index.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }
}

/// A path as a vertex sequence; `chordless` asserts no edge joins
/// non-consecutive path vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub chordless: bool,
}
