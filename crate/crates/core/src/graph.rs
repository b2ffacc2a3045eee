//! Simple undirected graphs on `0..n` with sorted adjacency lists.

use std::collections::VecDeque;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::OrbitPartition;
use crate::perm::Permutation;

/// An s-arc `(v0, …, vs)`: consecutive vertices adjacent, no immediate
/// backtracking.
pub type SArc = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n() > 0 && self.regular_degree() == Some(3)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn components(&self) -> OrbitPartition {
        let mut uf = crate::group::UnionFind::new(self.n());
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.into_partition()
    }

    /// `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                // no shorter cycle through root can appear beyond this depth
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Number of triangles through `v`.
    pub fn triangles_at(&self, v: usize) -> usize {
        let nb = &self.adj[v];
        let mut count = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if self.has_edge(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Graph on the blocks of `p`; blocks are adjacent when some edge joins
    /// them. Edges inside a block are dropped.
    pub fn quotient_graph(&self, p: &OrbitPartition) -> Result<Graph> {
        if p.degree() != self.n() {
            return Err(Error::InvalidPartition(format!(
                "partition of {} points for a graph on {} vertices",
                p.degree(),
                self.n()
            )));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (p.block_of(u), p.block_of(v)))
            .filter(|(a, b)| a != b)
            .collect();
        Graph::from_edges(p.len(), &edges)
    }

    /// `X[B]` with vertices renumbered in increasing order; the second value
    /// maps new indices to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            new_index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_index[w] != usize::MAX)
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();
        Ok((Graph::from_sorted_adjacency(adj), keep))
    }

    /// Counts s-arcs by dynamic programming over arcs.
    pub fn count_s_arcs(&self, s: usize) -> u64 {
        if s == 0 {
            return self.n() as u64;
        }
        // f[v][i] = number of k-arcs starting with the arc v -> adj[v][i]
        let mut f: Vec<Vec<u64>> = self.adj.iter().map(|l| vec![1; l.len()]).collect();
        for _ in 1..s {
            let next = self
                .adj
                .iter()
                .enumerate()
                .map(|(u, list)| {
                    list.iter()
                        .map(|&v| {
                            self.adj[v]
                                .iter()
                                .zip(&f[v])
                                .filter(|(&w, _)| w != u)
                                .map(|(_, &c)| c)
                                .sum()
                        })
                        .collect()
                })
                .collect();
            f = next;
        }
        f.iter().flatten().sum()
    }

    /// Every s-arc, in lexicographic order.
    pub fn s_arcs(&self, s: usize) -> Vec<SArc> {
        let mut out = Vec::new();
        let mut walk = Vec::with_capacity(s + 1);
        for v in 0..self.n() {
            walk.push(v);
            self.extend_arcs(s, &mut walk, &mut out);
            walk.pop();
        }
        out
    }

    fn extend_arcs(&self, s: usize, walk: &mut Vec<usize>, out: &mut Vec<SArc>) {
        if walk.len() == s + 1 {
            out.push(walk.clone());
            return;
        }
        let last = walk[walk.len() - 1];
        let prev = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
        for &w in &self.adj[last] {
            if Some(w) != prev {
                walk.push(w);
                self.extend_arcs(s, walk, out);
                walk.pop();
            }
        }
    }

    /// The lexicographically first s-arc, if any.
    pub fn first_s_arc(&self, s: usize) -> Option<SArc> {
        let mut walk = Vec::new();
        for v in 0..self.n() {
            walk.clear();
            walk.push(v);
            while walk.len() < s + 1 {
                let last = walk[walk.len() - 1];
                let prev = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
                match self.adj[last].iter().find(|&&w| Some(w) != prev) {
                    Some(&w) => walk.push(w),
                    None => break,
                }
            }
            if walk.len() == s + 1 {
                return Some(walk);
            }
        }
        None
    }

    pub fn is_s_arc(&self, arc: &[usize]) -> bool {
        arc.windows(2).all(|w| self.has_edge(w[0], w[1]))
            && arc.windows(3).all(|w| w[0] != w[2])
    }

    /// Whether `p` maps edges to edges. For a bijection on a finite graph
    /// this is equivalent to preserving adjacency in both directions.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n()
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    /// The image graph: vertex `v` becomes `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: p.degree(),
            });
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        Graph::from_edges(self.n(), &edges)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_sorted_adjacency(adj)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// The 3-cube `Q3`.
    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in [1, 2, 4] {
                if u & bit == 0 {
                    edges.push((u, u | bit));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    /// Generalized Petersen graph `GP(n, k)`: outer cycle `0..n`, spokes
    /// `i ~ n+i`, inner edges `n+i ~ n+(i+k mod n)`.
    pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
        if n < 3 || k == 0 || 2 * k >= n {
            return Err(Error::InvalidParameter(format!(
                "GP(n, k) needs n >= 3 and 1 <= k < n/2, got ({n}, {k})"
            )));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, n + i));
            edges.push((n + i, n + (i + k) % n));
        }
        Graph::from_edges(2 * n, &edges)
    }

    pub fn petersen() -> Graph {
        Graph::generalized_petersen(5, 2).unwrap()
    }

    /// `C_n[2K_1]`: `x_i ↦ 2i`, `y_i ↦ 2i+1`, and each of `x_i, y_i` is
    /// joined to both of `x_{i+1}, y_{i+1}`.
    pub fn lexicographic_cycle_2k1(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "C_n[2K1] needs n >= 3, got {n}"
            )));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            for a in [2 * i, 2 * i + 1] {
                for b in [2 * j, 2 * j + 1] {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(2 * n, &edges)
    }

    /// Edge-list text: optional `#` comment lines, then `n m`, then one
    /// `u v` line per edge.
    pub fn to_edge_list(&self, comments: &[&str]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&format!("{} {}\n", self.n(), self.edge_count()));
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.edge_count() != m {
            return Err(Error::Parse {
                line: hline,
                message: "repeated edges".into(),
            });
        }
        Ok(g)
    }

    pub fn read_edge_list(path: &Path) -> Result<Graph> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Graph::parse_edge_list(&text)
    }

    pub fn write_edge_list(&self, path: &Path, comments: &[&str]) -> Result<()> {
        fs::write(path, self.to_edge_list(comments)).map_err(|e| Error::io(path, e))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let ident: String = name
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        let mut out = format!("graph {ident} {{\n");
        for v in 0..self.n() {
            if self.adj[v].is_empty() {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse { line, message };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| bad(format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(bad("trailing tokens".into()));
    }
    Ok(pair)
}
