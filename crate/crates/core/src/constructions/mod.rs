//! Graph families built from groups: Cayley graphs, coset graphs,
//! bi-Cayley graphs, `X(n,2)`, the order-60/84 catalogue and the bundled
//! Foster census graphs.

pub mod bicayley;
pub mod catalogue;
pub mod foster;
pub mod xn2;

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{PermutationGroup, DEFAULT_ENUMERATION_BOUND};
use crate::perm::Permutation;

/// A permutation group together with an indexed list of its elements.
/// Index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    group: PermutationGroup,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl FiniteGroup {
    /// Indexes elements in stabilizer-chain enumeration order.
    pub fn new(group: PermutationGroup) -> Result<Self> {
        let elements: Vec<Permutation> = group.elements_bounded(DEFAULT_ENUMERATION_BOUND)?.collect();
        Self::with_elements(group, elements)
    }

    /// Uses a caller-supplied element order; validated to list every element
    /// exactly once with the identity first.
    pub fn with_elements(group: PermutationGroup, elements: Vec<Permutation>) -> Result<Self> {
        let order = group.order();
        if elements.len() as u64 != order {
            return Err(Error::InvalidParameter(format!(
                "element list has {} entries for a group of order {order}",
                elements.len()
            )));
        }
        if !elements.first().is_some_and(Permutation::is_identity) {
            return Err(Error::InvalidParameter("element 0 must be the identity".into()));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if !group.contains(e)? {
                return Err(Error::InvalidParameter(format!("element {i} is not in the group")));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("element {i} is listed twice")));
            }
        }
        Ok(FiniteGroup {
            group,
            elements,
            index,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub(crate) fn require_index(&self, p: &Permutation) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::InvalidParameter(format!("{} is not in the group", p.cycle_string())))
    }

    /// Index of `x · y` (x acts first).
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].then(&self.elements[y])]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.index[&self.elements[x].inverse()]
    }

    /// Indices of the generators of the underlying permutation group.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.group
            .generators()
            .iter()
            .map(|g| self.index[g])
            .collect()
    }

    /// The subgroup generated by the given elements.
    pub fn subgroup(&self, subset: &[usize]) -> PermutationGroup {
        let gens = subset.iter().map(|&i| self.elements[i].clone()).collect();
        PermutationGroup::new(self.group.degree(), gens).expect("elements share the degree")
    }

    /// Whether `subset` is closed under inverses.
    pub fn is_inverse_closed(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&s| subset.contains(&self.inverse(s)))
    }

    /// The right regular representation: `R(x)` maps `g` to `g·x`.
    pub fn right_regular(&self) -> PermutationGroup {
        let gens = self
            .generator_indices()
            .into_iter()
            .map(|x| self.right_multiplication(x))
            .collect();
        PermutationGroup::new(self.order(), gens).unwrap()
    }

    pub fn right_multiplication(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order()).map(|g| self.mul(g, x)).collect())
    }
}

/// `Cay(G, S)`: vertices are element indices, edges `{g, s·g}`.
pub fn cayley_graph(g: &FiniteGroup, s: &[usize]) -> Result<Graph> {
    if s.iter().any(|&x| x >= g.order()) {
        return Err(Error::InvalidConnectionSet("index out of range".into()));
    }
    if s.contains(&0) {
        return Err(Error::InvalidConnectionSet("contains the identity".into()));
    }
    if !g.is_inverse_closed(s) {
        return Err(Error::InvalidConnectionSet("not closed under inverses".into()));
    }
    let mut edges = Vec::with_capacity(g.order() * s.len());
    for x in 0..g.order() {
        for &y in s {
            edges.push((x, g.mul(y, x)));
        }
    }
    Graph::from_edges(g.order(), &edges)
}

/// `{h1 · a · h2 : h1, h2 ∈ H}` as sorted element indices of `G`.
pub fn double_coset(g: &FiniteGroup, h: &PermutationGroup, a: &Permutation) -> Result<Vec<usize>> {
    let ai = g.require_index(a)?;
    let hs = subgroup_indices(g, h)?;
    let mut out: Vec<usize> = hs
        .iter()
        .flat_map(|&h1| hs.iter().map(move |&h2| (h1, h2)))
        .map(|(h1, h2)| g.mul(g.mul(h1, ai), h2))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Element indices of a subgroup `H ≤ G`.
pub fn subgroup_indices(g: &FiniteGroup, h: &PermutationGroup) -> Result<Vec<usize>> {
    if !h.is_subgroup_of(g.group()) {
        return Err(Error::NotASubgroup("H is not contained in G".into()));
    }
    let mut out: Vec<usize> = h.elements()?.map(|x| g.index[&x]).collect();
    out.sort_unstable();
    Ok(out)
}

/// Right cosets `Hg` of a subgroup, numbered in breadth-first order from
/// `H` along the generators of `G`.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    subgroup: Vec<usize>,
    representatives: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(g: &FiniteGroup, h: &PermutationGroup) -> Result<Self> {
        let subgroup = subgroup_indices(g, h)?;
        let gens = g.generator_indices();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut representatives = Vec::new();
        let mut queue = VecDeque::new();
        let assign = |rep: usize, coset_of: &mut Vec<usize>, reps: &mut Vec<usize>| {
            let c = reps.len();
            reps.push(rep);
            for &x in &subgroup {
                coset_of[g.mul(x, rep)] = c;
            }
            c
        };
        assign(0, &mut coset_of, &mut representatives);
        queue.push_back(0);
        while let Some(c) = queue.pop_front() {
            let rep = representatives[c];
            for &x in &gens {
                let y = g.mul(rep, x);
                if coset_of[y] == usize::MAX {
                    let d = assign(y, &mut coset_of, &mut representatives);
                    queue.push_back(d);
                }
            }
        }
        debug_assert!(coset_of.iter().all(|&c| c != usize::MAX));
        Ok(CosetSpace {
            subgroup,
            representatives,
            coset_of,
        })
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// The coset containing element `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Right multiplication by element `x` as a permutation of the cosets.
    pub fn action(&self, g: &FiniteGroup, x: usize) -> Permutation {
        Permutation::from_images_unchecked(
            self.representatives
                .iter()
                .map(|&r| self.coset_of[g.mul(r, x)])
                .collect(),
        )
    }
}

/// `Cos(G, H, D)` with the coset space and the action of `G`.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    pub space: CosetSpace,
    /// `|D| / |H|`.
    pub valency: usize,
    /// Set when `D` meets `H`: the corresponding loops were dropped, so the
    /// graph is not a simple cover of the nominal valency.
    pub degenerate: bool,
    /// `G` acting on the cosets by right multiplication.
    pub action: PermutationGroup,
}

/// Builds `Cos(G, H, D)`: vertices `[G:H]`, edges `{Hg, Hdg}` for `d ∈ D`.
pub fn coset_graph(g: &FiniteGroup, h: &PermutationGroup, d: &[usize]) -> Result<CosetGraph> {
    let space = CosetSpace::new(g, h)?;
    let mut d: Vec<usize> = d.to_vec();
    d.sort_unstable();
    d.dedup();
    if d.iter().any(|&x| x >= g.order()) {
        return Err(Error::InvalidConnectionSet("index out of range".into()));
    }
    if !g.is_inverse_closed(&d) {
        return Err(Error::InvalidConnectionSet("D is not closed under inverses".into()));
    }
    let hgens: Vec<usize> = h.generators().iter().map(|x| g.index[x]).collect();
    let closed = d.iter().all(|&x| {
        hgens
            .iter()
            .all(|&y| d.binary_search(&g.mul(y, x)).is_ok() && d.binary_search(&g.mul(x, y)).is_ok())
    });
    if !closed {
        return Err(Error::InvalidConnectionSet(
            "D is not a union of double cosets of H".into(),
        ));
    }
    let mut degenerate = false;
    let mut edges = Vec::new();
    for (c, &r) in space.representatives.iter().enumerate() {
        for &x in &d {
            let t = space.coset_of[g.mul(x, r)];
            if t == c {
                degenerate = true;
            } else {
                edges.push((c, t));
            }
        }
    }
    let graph = Graph::from_edges(space.len(), &edges)?;
    let action_gens = g
        .generator_indices()
        .into_iter()
        .map(|x| space.action(g, x))
        .collect();
    let action = PermutationGroup::new(space.len(), action_gens)?;
    Ok(CosetGraph {
        graph,
        valency: d.len() / space.subgroup.len(),
        degenerate,
        action,
        space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let gen = Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap();
        FiniteGroup::new(PermutationGroup::new(n, vec![gen]).unwrap()).unwrap()
    }

    fn power_index(g: &FiniteGroup, k: i64) -> usize {
        g.index_of(&g.group().generators()[0].pow(k)).unwrap()
    }

    #[test]
    fn finite_group_indexing() {
        let s3 = FiniteGroup::new(PermutationGroup::symmetric(3)).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.element(0).is_identity());
        for x in 0..6 {
            assert_eq!(s3.mul(x, s3.inverse(x)), 0);
            assert_eq!(s3.index_of(s3.element(x)), Some(x));
        }
    }

    #[test]
    fn cayley_cycle() {
        let z6 = cyclic(6);
        let s = [power_index(&z6, 1), power_index(&z6, -1)];
        let c6 = cayley_graph(&z6, &s).unwrap();
        assert!(c6.is_connected());
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(c6.girth(), crate::graph::Girth::Finite(6));
        for r in z6.right_regular().generators() {
            assert!(c6.is_automorphism(r));
        }
    }

    #[test]
    fn cayley_disconnected_when_s_does_not_generate() {
        let z6 = cyclic(6);
        let s = [power_index(&z6, 2), power_index(&z6, 4)];
        let g = cayley_graph(&z6, &s).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn cayley_rejects_bad_sets() {
        let z6 = cyclic(6);
        assert!(cayley_graph(&z6, &[0]).is_err());
        assert!(cayley_graph(&z6, &[power_index(&z6, 1)]).is_err());
    }

    #[test]
    fn double_cosets_trivial_cases() {
        let s4 = FiniteGroup::new(PermutationGroup::symmetric(4)).unwrap();
        let h = PermutationGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let hidx = subgroup_indices(&s4, &h).unwrap();
        assert_eq!(double_coset(&s4, &h, &Permutation::identity(4)).unwrap(), hidx);
        let a = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let trivial = PermutationGroup::trivial(4);
        assert_eq!(double_coset(&s4, &trivial, &a).unwrap(), vec![s4.index_of(&a).unwrap()]);
        assert!(double_coset(&s4, &h, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn coset_space_sizes() {
        let s4 = FiniteGroup::new(PermutationGroup::symmetric(4)).unwrap();
        let h = s4.group().point_stabilizer(0).unwrap();
        let space = CosetSpace::new(&s4, &h).unwrap();
        assert_eq!(space.len(), 4);
        assert_eq!(space.representatives()[0], 0);
        for x in 0..s4.order() {
            let c = space.coset_of(x);
            let rep = space.representatives()[c];
            // x and rep lie in the same right coset: x · rep^-1 ∈ H
            assert!(h.contains(s4.element(s4.mul(x, s4.inverse(rep)))).unwrap());
        }
    }

    #[test]
    fn coset_graph_of_point_stabilizer_is_complete() {
        // S4 acting on 4 points; D = the non-trivial double coset
        let s4 = FiniteGroup::new(PermutationGroup::symmetric(4)).unwrap();
        let h = s4.group().point_stabilizer(0).unwrap();
        let hidx = subgroup_indices(&s4, &h).unwrap();
        let d: Vec<usize> = (0..24).filter(|x| !hidx.contains(x)).collect();
        let cg = coset_graph(&s4, &h, &d).unwrap();
        assert_eq!(cg.graph, Graph::complete(4));
        assert_eq!(cg.valency, 3);
        assert!(!cg.degenerate);
        assert!(cg.action.is_transitive());
        for x in cg.action.generators() {
            assert!(cg.graph.is_automorphism(x));
        }
    }

    #[test]
    fn coset_graph_degenerate_identity_double_coset() {
        let s4 = FiniteGroup::new(PermutationGroup::symmetric(4)).unwrap();
        let h = PermutationGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let d = subgroup_indices(&s4, &h).unwrap();
        let cg = coset_graph(&s4, &h, &d).unwrap();
        assert!(cg.degenerate);
        assert_eq!(cg.valency, 1);
        assert_eq!(cg.graph.edge_count(), 0);
    }

    #[test]
    fn coset_graph_validation() {
        let s4 = FiniteGroup::new(PermutationGroup::symmetric(4)).unwrap();
        let h = PermutationGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let t = s4.index_of(&Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap()).unwrap();
        // not inverse-closed
        assert!(coset_graph(&s4, &h, &[t]).is_err());
        // inverse-closed but not a union of double cosets
        assert!(coset_graph(&s4, &h, &[t, s4.inverse(t)]).is_err());
        let outside = PermutationGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        let a4 = FiniteGroup::new(s4.group().derived_subgroup()).unwrap();
        assert!(CosetSpace::new(&a4, &outside).is_err());
    }
}
