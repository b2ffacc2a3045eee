//! Automorphism groups, canonical forms and isomorphism testing by
//! equitable-partition refinement and individualization.
//!
//! The search runs in two passes. The first follows the leftmost path of
//! the search tree and, working upwards from its leaf, looks for
//! automorphisms that move each individualized vertex; orbits of the
//! generators found so far prune the candidates. The second pass looks for
//! the least leaf under the key (refinement traces, relabeled edge list),
//! skipping children that are equivalent under the stabilizer of the
//! current prefix.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::group::{OrbitPartition, PermutationGroup, UnionFind};
use crate::perm::Permutation;

pub const DEFAULT_VERTEX_BOUND: usize = 1024;

/// Version tag at the start of every certificate string.
pub const CERTIFICATE_VERSION: &str = "cf1";

type Trace = Vec<u64>;

/// Ordered partition of the vertex set. Cells are contiguous ranges of
/// `lab`; `start[i]` is the first position of the cell holding position
/// `i` and `end[s]` is one past the last position of the cell starting
/// at `s`.
#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<usize>,
    inv: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Cells ordered by the vertex invariant.
    fn from_invariant<K: Ord + Clone>(keys: &[K]) -> Self {
        let n = keys.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
        let mut inv = vec![0; n];
        let mut start = vec![0; n];
        let mut end = vec![0; n];
        let mut cells = 0;
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && keys[lab[e]] == keys[lab[s]] {
                e += 1;
            }
            start[s..e].fill(s);
            end[s] = e;
            cells += 1;
            s = e;
        }
        for (i, &v) in lab.iter().enumerate() {
            inv[v] = i;
        }
        Partition {
            lab,
            inv,
            start,
            end,
            cells,
        }
    }

    fn n(&self) -> usize {
        self.lab.len()
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.n() {
            out.push(s);
            s = self.end[s];
        }
        out
    }

    /// First cell of least size above one.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let e = self.end[s];
            let size = e - s;
            if size > 1 && best.is_none_or(|(bs, be)| size < be - bs) {
                best = Some((s, e));
                if size == 2 {
                    break;
                }
            }
            s = e;
        }
        best
    }

    /// Moves `v` to the front of its cell and makes it a singleton.
    /// Returns the start of the singleton cell.
    fn individualize(&mut self, v: usize) -> usize {
        let i = self.inv[v];
        let s = self.start[i];
        let e = self.end[s];
        debug_assert!(e - s > 1);
        let u = self.lab[s];
        self.lab.swap(s, i);
        self.inv[v] = s;
        self.inv[u] = i;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for j in s + 1..e {
            self.start[j] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, starting from the given splitter cells. Every step is recorded
    /// in `trace` in terms that do not depend on vertex names.
    fn refine(&mut self, g: &Graph, splitters: &[usize], trace: &mut Trace) {
        let n = self.n();
        let mut count = vec![0u32; n];
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut touched: Vec<usize> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        while let Some(sc) = queue.pop_front() {
            in_queue[sc] = false;
            if self.is_discrete() {
                break;
            }
            let se = self.end[sc];
            for i in sc..se {
                for &w in g.neighbors(self.lab[i]) {
                    if count[w] == 0 {
                        touched.push(w);
                    }
                    count[w] += 1;
                }
            }
            touched_cells.clear();
            touched_cells.extend(touched.iter().map(|&w| self.start[self.inv[w]]));
            touched_cells.sort_unstable();
            touched_cells.dedup();
            for &cs in &touched_cells {
                let ce = self.end[cs];
                if ce - cs == 1 {
                    continue;
                }
                let mut verts = self.lab[cs..ce].to_vec();
                verts.sort_by_key(|&v| count[v]);
                let lo = count[verts[0]];
                let hi = count[verts[verts.len() - 1]];
                trace.push(sc as u64);
                trace.push(cs as u64);
                if lo == hi {
                    trace.push(lo as u64);
                    continue;
                }
                for (k, &v) in verts.iter().enumerate() {
                    self.lab[cs + k] = v;
                    self.inv[v] = cs + k;
                }
                let mut f = cs;
                let mut fragments = Vec::new();
                for k in cs + 1..=ce {
                    if k == ce || count[self.lab[k]] != count[self.lab[f]] {
                        fragments.push((f, k));
                        f = k;
                    }
                }
                for &(fs, fe) in &fragments {
                    trace.push(count[self.lab[fs]] as u64);
                    trace.push((fe - fs) as u64);
                    self.end[fs] = fe;
                    for j in fs..fe {
                        self.start[j] = fs;
                    }
                    if !in_queue[fs] {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
                self.cells += fragments.len() - 1;
            }
            for &w in &touched {
                count[w] = 0;
            }
            touched.clear();
        }
        trace.push(u64::MAX);
        trace.push(self.cells as u64);
    }

    /// The map sending the vertex at each position of `self` to the vertex
    /// at the same position of `other`.
    fn map_to(&self, other: &Partition) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.lab.iter().enumerate() {
            images[v] = other.lab[i];
        }
        Permutation::from_images_unchecked(images)
    }

    /// Relabeling that gives the vertex at position `i` the new name `i`.
    fn labeling(&self) -> Permutation {
        Permutation::from_images_unchecked(self.inv.clone())
    }
}

/// Per-vertex invariant used for the initial partition.
fn vertex_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>, usize) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd, g.triangles_at(v))
}

fn root(g: &Graph) -> (Partition, Trace) {
    let keys: Vec<_> = (0..g.n()).map(|v| vertex_invariant(g, v)).collect();
    let mut p = Partition::from_invariant(&keys);
    let mut trace = Trace::new();
    for s in p.cell_starts() {
        trace.push(s as u64);
        trace.push((p.end[s] - s) as u64);
    }
    let splitters = p.cell_starts();
    p.refine(g, &splitters, &mut trace);
    (p, trace)
}

fn child(g: &Graph, p: &Partition, v: usize) -> (Partition, Trace) {
    let mut q = p.clone();
    let s = q.individualize(v);
    let mut trace = vec![s as u64, (p.end[s] - s) as u64];
    q.refine(g, &[s], &mut trace);
    (q, trace)
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.n() > bound {
        return Err(Error::GraphTooLarge { n: g.n(), bound });
    }
    Ok(())
}

/// `Aut(X)` as generators, the group they generate and its vertex orbits.
#[derive(Clone, Debug)]
pub struct AutomorphismResult {
    pub generators: Vec<Permutation>,
    pub group: PermutationGroup,
    pub orbits: OrbitPartition,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

impl AutomorphismResult {
    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }
}

struct AutSearch<'a> {
    g: &'a Graph,
    /// Partitions along the leftmost path; `path[k]` is at depth `k`.
    path: Vec<Partition>,
    traces: Vec<Trace>,
    nodes: u64,
}

impl AutSearch<'_> {
    /// Looks below `p` (at `depth`) for a leaf equivalent to the leftmost
    /// leaf, i.e. one whose position map is an automorphism.
    fn find_equivalent_leaf(&mut self, p: &Partition, depth: usize) -> Option<Permutation> {
        self.nodes += 1;
        if p.is_discrete() {
            let leaf = self.path.last().unwrap();
            let map = leaf.map_to(p);
            return self.g.is_automorphism(&map).then_some(map);
        }
        if depth + 1 >= self.path.len() {
            return None;
        }
        let (s, e) = p.target_cell()?;
        let mut cell: Vec<usize> = p.lab[s..e].to_vec();
        cell.sort_unstable();
        for w in cell {
            let (q, trace) = child(self.g, p, w);
            if trace != self.traces[depth + 1] {
                continue;
            }
            if let Some(map) = self.find_equivalent_leaf(&q, depth + 1) {
                return Some(map);
            }
        }
        None
    }
}

pub fn automorphism_group(g: &Graph) -> Result<AutomorphismResult> {
    automorphism_group_bounded(g, DEFAULT_VERTEX_BOUND)
}

pub fn automorphism_group_bounded(g: &Graph, bound: usize) -> Result<AutomorphismResult> {
    check_bound(g, bound)?;
    let n = g.n();
    let (p0, t0) = root(g);
    let mut search = AutSearch {
        g,
        path: vec![p0],
        traces: vec![t0],
        nodes: 1,
    };
    // leftmost path, always individualizing the least vertex
    let mut chosen = Vec::new();
    let mut targets = Vec::new();
    while let Some((s, e)) = search.path.last().unwrap().target_cell() {
        let p = search.path.last().unwrap();
        let v = *p.lab[s..e].iter().min().unwrap();
        let mut cell = p.lab[s..e].to_vec();
        cell.sort_unstable();
        let (q, t) = child(g, p, v);
        chosen.push(v);
        targets.push(cell);
        search.path.push(q);
        search.traces.push(t);
        search.nodes += 1;
    }
    let mut generators: Vec<Permutation> = Vec::new();
    for k in (0..chosen.len()).rev() {
        let v = chosen[k];
        let mut failed: Vec<usize> = Vec::new();
        for &w in &targets[k] {
            if w == v {
                continue;
            }
            let mut uf = UnionFind::new(n);
            for gen in &generators {
                for x in 0..n {
                    uf.union(x, gen.apply(x));
                }
            }
            let rw = uf.find(w);
            if rw == uf.find(v) || failed.iter().any(|&f| uf.find(f) == rw) {
                continue;
            }
            let node = search.path[k].clone();
            let (q, trace) = child(g, &node, w);
            search.nodes += 1;
            let found = if trace == search.traces[k + 1] {
                search.find_equivalent_leaf(&q, k + 1)
            } else {
                None
            };
            match found {
                Some(map) => generators.push(map),
                None => failed.push(w),
            }
        }
    }
    let orbits = OrbitPartition::from_generators(n, &generators);
    let group = PermutationGroup::new(n, generators.clone())?;
    Ok(AutomorphismResult {
        generators,
        group,
        orbits,
        nodes: search.nodes,
    })
}

/// A canonical relabeling of a graph.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Sends each original vertex to its canonical name.
    pub labeling: Permutation,
    pub graph: Graph,
    pub certificate: String,
}

/// `cf1 n m | u-v u-v …` over the sorted edge list.
pub fn certificate_of(g: &Graph) -> String {
    let mut s = format!("{CERTIFICATE_VERSION} {} {} |", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

struct Best {
    traces: Vec<Trace>,
    edges: Vec<(usize, usize)>,
    labeling: Permutation,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<Best>,
}

impl CanonSearch<'_> {
    /// Order of the traces seen so far against the best leaf's traces, as
    /// far as both are defined; a longer sequence agreeing on the common
    /// part compares greater.
    fn compare_to_best(&self, traces: &[Trace]) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(b) => {
                for (t, bt) in traces.iter().zip(&b.traces) {
                    match t.cmp(bt) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                if traces.len() > b.traces.len() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
        }
    }

    fn visit(&mut self, p: &Partition, traces: &mut Vec<Trace>, stab: &PermutationGroup) {
        if self.compare_to_best(traces) == Ordering::Greater {
            return;
        }
        if p.is_discrete() {
            let labeling = p.labeling();
            let mut edges: Vec<(usize, usize)> = self
                .g
                .edges()
                .into_iter()
                .map(|(u, v)| {
                    let (a, b) = (labeling.apply(u), labeling.apply(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            let better = match &self.best {
                None => true,
                Some(b) => (traces.as_slice(), &edges).cmp(&(b.traces.as_slice(), &b.edges)) == Ordering::Less,
            };
            if better {
                self.best = Some(Best {
                    traces: traces.clone(),
                    edges,
                    labeling,
                });
            }
            return;
        }
        let (s, e) = p.target_cell().expect("non-discrete partition has a target cell");
        let mut cell = p.lab[s..e].to_vec();
        cell.sort_unstable();
        let orbits = OrbitPartition::from_generators(p.n(), stab.generators());
        let mut seen_orbits: Vec<usize> = Vec::new();
        for w in cell {
            let o = orbits.block_of(w);
            if seen_orbits.contains(&o) {
                continue;
            }
            seen_orbits.push(o);
            let (q, trace) = child(self.g, p, w);
            traces.push(trace);
            if self.compare_to_best(traces) != Ordering::Greater {
                let sub = if stab.is_trivial() {
                    stab.clone()
                } else {
                    stab.point_stabilizer(w).expect("w is a vertex")
                };
                self.visit(&q, traces, &sub);
            }
            traces.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let aut = automorphism_group(g)?;
    canonical_form_with(g, &aut)
}

/// Canonical form using a previously computed automorphism group of `g`.
pub fn canonical_form_with(g: &Graph, aut: &AutomorphismResult) -> Result<CanonicalForm> {
    check_bound(g, DEFAULT_VERTEX_BOUND)?;
    let (p0, t0) = root(g);
    let mut search = CanonSearch { g, best: None };
    let mut traces = vec![t0];
    search.visit(&p0, &mut traces, &aut.group);
    let best = search.best.expect("the search reaches at least one leaf");
    let graph = g.relabel(&best.labeling)?;
    let certificate = certificate_of(&graph);
    Ok(CanonicalForm {
        labeling: best.labeling,
        graph,
        certificate,
    })
}

/// Cheap isomorphism invariants used to screen pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub girth: Girth,
    pub s_arcs: Vec<u64>,
}

pub fn invariants(g: &Graph) -> GraphInvariants {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    GraphInvariants {
        n: g.n(),
        m: g.edge_count(),
        degrees,
        girth: g.girth(),
        s_arcs: (1..=3).map(|s| g.count_s_arcs(s)).collect(),
    }
}

/// An isomorphism `x → y`, checked edge by edge, or `None`.
pub fn are_isomorphic(x: &Graph, y: &Graph) -> Result<Option<Permutation>> {
    check_bound(x, DEFAULT_VERTEX_BOUND)?;
    check_bound(y, DEFAULT_VERTEX_BOUND)?;
    if invariants(x) != invariants(y) {
        return Ok(None);
    }
    let cx = canonical_form(x)?;
    let cy = canonical_form(y)?;
    Ok(isomorphism_from_forms(x, y, &cx, &cy))
}

/// Combines two canonical forms into an isomorphism when they agree.
pub fn isomorphism_from_forms(
    x: &Graph,
    y: &Graph,
    cx: &CanonicalForm,
    cy: &CanonicalForm,
) -> Option<Permutation> {
    if cx.certificate != cy.certificate {
        return None;
    }
    let map = cx.labeling.then(&cy.labeling.inverse());
    let ok = x.n() == y.n()
        && x.edge_count() == y.edge_count()
        && x.edges().iter().all(|&(u, v)| y.has_edge(map.apply(u), map.apply(v)));
    assert!(ok, "equal certificates must give an isomorphism");
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::xn2::x_n_2;

    fn shuffled(g: &Graph, seed: u64) -> (Graph, Permutation) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut images: Vec<usize> = (0..g.n()).collect();
        images.shuffle(&mut rng);
        let p = Permutation::from_images(images).unwrap();
        (g.relabel(&p).unwrap(), p)
    }

    #[test]
    fn small_orders() {
        assert_eq!(automorphism_group(&Graph::complete(4)).unwrap().order(), 24);
        assert_eq!(automorphism_group(&Graph::cycle(6).unwrap()).unwrap().order(), 12);
        assert_eq!(automorphism_group(&Graph::cube()).unwrap().order(), 48);
        assert_eq!(automorphism_group(&Graph::petersen()).unwrap().order(), 120);
        assert_eq!(automorphism_group(&Graph::path(4)).unwrap().order(), 2);
        assert_eq!(automorphism_group(&Graph::empty(5)).unwrap().order(), 120);
        assert_eq!(automorphism_group(&Graph::empty(0)).unwrap().order(), 1);
        let k3 = Graph::complete(3);
        assert_eq!(automorphism_group(&k3.disjoint_union(&k3)).unwrap().order(), 72);
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [Graph::petersen(), Graph::cube(), x_n_2(4).unwrap()] {
            let aut = automorphism_group(&g).unwrap();
            for gen in &aut.generators {
                assert!(g.is_automorphism(gen));
            }
            assert!(aut.is_vertex_transitive());
        }
    }

    #[test]
    fn x_n_2_orders() {
        for n in 3..8u32 {
            let aut = automorphism_group(&x_n_2(n as usize).unwrap()).unwrap();
            assert_eq!(aut.order(), (1u64 << n) * 2 * n as u64);
        }
    }

    #[test]
    fn path_is_not_vertex_transitive() {
        let aut = automorphism_group(&Graph::path(4)).unwrap();
        assert!(!aut.is_vertex_transitive());
        assert_eq!(aut.orbits.blocks(), &[vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            automorphism_group_bounded(&Graph::cube(), 7),
            Err(Error::GraphTooLarge { n: 8, bound: 7 })
        ));
    }

    #[test]
    fn certificates_are_relabeling_invariant() {
        for g in [Graph::petersen(), Graph::cube(), x_n_2(5).unwrap(), Graph::path(6)] {
            let c = canonical_form(&g).unwrap();
            for seed in 0..5 {
                let (h, _) = shuffled(&g, seed);
                assert_eq!(canonical_form(&h).unwrap().certificate, c.certificate);
            }
            assert!(c.certificate.starts_with("cf1 "));
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = canonical_form(&Graph::petersen()).unwrap();
        assert_eq!(canonical_form(&c.graph).unwrap().certificate, c.certificate);
    }

    #[test]
    fn distinct_graphs_distinct_certificates() {
        let c6 = Graph::cycle(6).unwrap();
        let k3 = Graph::complete(3);
        let two_k3 = k3.disjoint_union(&k3);
        assert_ne!(
            canonical_form(&c6).unwrap().certificate,
            canonical_form(&two_k3).unwrap().certificate
        );
        assert_eq!(are_isomorphic(&c6, &two_k3).unwrap(), None);
    }

    #[test]
    fn isomorphism_found_for_relabeling() {
        let g = Graph::generalized_petersen(8, 3).unwrap();
        let (h, _) = shuffled(&g, 7);
        let map = are_isomorphic(&g, &h).unwrap().unwrap();
        assert_eq!(g.relabel(&map).unwrap(), h);
    }

    #[test]
    fn invariant_screen_rejects_early() {
        let a = Graph::generalized_petersen(8, 3).unwrap();
        let b = Graph::cube().disjoint_union(&Graph::cube());
        assert_eq!(are_isomorphic(&a, &b).unwrap(), None);
    }
}
