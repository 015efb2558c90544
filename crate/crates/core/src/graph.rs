//! Simple undirected graphs with canonical edge indices.
//!
//! Vertices are `0..n`. Edges are stored as `(min, max)` pairs sorted
//! lexicographically, so edge `i` is the `i`-th pair in that order no matter
//! how the graph was built. Every coloring in the crate is indexed by these
//! edge ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// `(neighbor, edge id)` pairs, sorted by neighbor.
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a simple graph from vertex pairs in any order and orientation.
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.m(),
            })
        }
    }

    /// `(neighbor, edge)` pairs at `v`, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.is_regular(3)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edges_share_vertex(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Edges at line-graph distance 1 or 2 from `e`, in increasing order.
    pub fn edges_within_two(&self, e: EdgeId) -> Vec<EdgeId> {
        let (u, v) = self.edges[e];
        let mut out = Vec::new();
        for x in [u, v] {
            for &(w, f) in &self.adj[x] {
                out.push(f);
                for &(_, g) in &self.adj[w] {
                    out.push(g);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out.retain(|&f| f != e);
        out
    }

    /// Distance between two edges in the line graph, saturated at `cap + 1`.
    ///
    /// 0 means the same edge, 1 a shared endpoint, 2 a third edge touching
    /// both. Any value greater than `cap` is reported as `cap + 1`.
    pub fn edge_distance(&self, e1: EdgeId, e2: EdgeId, cap: usize) -> Result<usize> {
        self.check_edge(e1)?;
        self.check_edge(e2)?;
        if e1 == e2 {
            return Ok(0);
        }
        let mut dist = vec![usize::MAX; self.m()];
        dist[e1] = 0;
        let mut queue = VecDeque::from([e1]);
        while let Some(e) = queue.pop_front() {
            let d = dist[e];
            if d >= cap {
                break;
            }
            let (a, b) = self.edges[e];
            for x in [a, b] {
                for &(_, f) in &self.adj[x] {
                    if dist[f] == usize::MAX {
                        dist[f] = d + 1;
                        if f == e2 {
                            return Ok(d + 1);
                        }
                        queue.push_back(f);
                    }
                }
            }
        }
        Ok(cap + 1)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// All bridges, by edge id, in increasing order.
    pub fn bridges(&self) -> Vec<EdgeId> {
        // iterative lowpoint DFS
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, edge used to enter, next adjacency position)
            let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, parent_edge, pos) = *top;
                if pos < self.adj[v].len() {
                    top.2 += 1;
                    let (w, f) = self.adj[v][pos];
                    if Some(f) == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(f), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(&(p, _, _)), Some(f)) = (stack.last(), parent_edge) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(f);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Subgraph on the same vertex set keeping only the listed edges.
    ///
    /// Returns the subgraph and, for each of its edges, the id of the
    /// corresponding edge in `self`.
    pub fn edge_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let kept: Vec<EdgeId> = (0..self.m()).filter(|&e| keep(e)).collect();
        let sub = Graph::new(self.n, kept.iter().map(|&e| self.edges[e]))
            .expect("subgraph of a simple graph is simple");
        // both lists are in canonical order, so positions line up
        (sub, kept)
    }
}
