//! Bi-Cayley graphs `BiCay(H, R, L, S)` and their standard automorphisms.
//!
//! Vertex `h_0` (right part) is `index(h)` and `h_1` (left part) is
//! `|H| + index(h)`.

use std::collections::VecDeque;

use crate::constructions::FiniteGroup;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Largest `|H|` for which `Aut(H)` is searched exhaustively.
pub const AUT_H_BOUND: usize = 512;
/// Largest number of generator-image tuples tried in that search.
const IMAGE_TUPLE_BOUND: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct BiCayleySpec {
    group: FiniteGroup,
    r: Vec<usize>,
    l: Vec<usize>,
    s: Vec<usize>,
}

fn normalized(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl BiCayleySpec {
    pub fn new(group: FiniteGroup, r: &[usize], l: &[usize], s: &[usize]) -> Result<Self> {
        let (r, l, s) = (normalized(r), normalized(l), normalized(s));
        let n = group.order();
        for (name, set) in [("R", &r), ("L", &l), ("S", &s)] {
            if set.iter().any(|&x| x >= n) {
                return Err(Error::InvalidBiCayley(format!("{name} has an index out of range")));
            }
        }
        for (name, set) in [("R", &r), ("L", &l)] {
            if set.contains(&0) {
                return Err(Error::InvalidBiCayley(format!("{name} contains the identity")));
            }
            if !group.is_inverse_closed(set) {
                return Err(Error::InvalidBiCayley(format!("{name} is not closed under inverses")));
            }
        }
        if s.is_empty() {
            return Err(Error::InvalidBiCayley("S is empty".into()));
        }
        Ok(BiCayleySpec { group, r, l, s })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn r(&self) -> &[usize] {
        &self.r
    }

    pub fn l(&self) -> &[usize] {
        &self.l
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn vertex_map(&self) -> BiCayleyVertexMap {
        BiCayleyVertexMap {
            order: self.group.order(),
        }
    }

    /// Same group, with `R, L, S` replaced by their images under `alpha`.
    pub fn image_under(&self, alpha: &GroupAutomorphism) -> Result<BiCayleySpec> {
        BiCayleySpec::new(
            self.group.clone(),
            &alpha.image_set(&self.r),
            &alpha.image_set(&self.l),
            &alpha.image_set(&self.s),
        )
    }
}

/// `h_0 ↦ index(h)`, `h_1 ↦ |H| + index(h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiCayleyVertexMap {
    order: usize,
}

impl BiCayleyVertexMap {
    pub fn right(&self, h: usize) -> usize {
        h
    }

    pub fn left(&self, h: usize) -> usize {
        self.order + h
    }

    /// `(element index, part)` with part 0 for the right part.
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v % self.order, v / self.order)
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.order
    }
}

/// Right edges `{h_0, (rh)_0}`, left edges `{h_1, (lh)_1}`, spokes
/// `{h_0, (sh)_1}`.
pub fn bicayley_graph(spec: &BiCayleySpec) -> Result<Graph> {
    let g = &spec.group;
    let vm = spec.vertex_map();
    let mut edges = Vec::new();
    for h in 0..g.order() {
        for &x in &spec.r {
            edges.push((vm.right(h), vm.right(g.mul(x, h))));
        }
        for &x in &spec.l {
            edges.push((vm.left(h), vm.left(g.mul(x, h))));
        }
        for &x in &spec.s {
            edges.push((vm.right(h), vm.left(g.mul(x, h))));
        }
    }
    Graph::from_edges(vm.vertex_count(), &edges)
}

/// `R(H)`: `R(g)` maps `h_i` to `(hg)_i`.
pub fn bicayley_right_regular(spec: &BiCayleySpec) -> PermutationGroup {
    let gens = spec
        .group
        .generator_indices()
        .into_iter()
        .map(|x| right_element(spec, x))
        .collect();
    PermutationGroup::new(2 * spec.group.order(), gens).unwrap()
}

/// The single permutation `R(x)`.
pub fn right_element(spec: &BiCayleySpec, x: usize) -> Permutation {
    let g = &spec.group;
    let n = g.order();
    let images = (0..2 * n).map(|v| (v / n) * n + g.mul(v % n, x)).collect();
    Permutation::from_images_unchecked(images)
}

/// A group automorphism stored as a map on element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    images: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(order: usize) -> Self {
        GroupAutomorphism {
            images: (0..order).collect(),
        }
    }

    /// Extends `generators[k] ↦ images[k]` to a homomorphism and checks that
    /// it is well defined and bijective.
    pub fn from_generator_images(group: &FiniteGroup, images: &[Permutation]) -> Result<Self> {
        let gens = group.generator_indices();
        if images.len() != gens.len() {
            return Err(Error::NotAnAutomorphism(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let targets = images
            .iter()
            .map(|p| group.require_index(p))
            .collect::<Result<Vec<_>>>()?;
        Self::extend(group, &gens, &targets)
            .ok_or_else(|| Error::NotAnAutomorphism("images do not extend to an automorphism".into()))
    }

    fn extend(group: &FiniteGroup, gens: &[usize], targets: &[usize]) -> Option<Self> {
        let n = group.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, &t) in gens.iter().zip(targets) {
                let y = group.mul(x, g);
                let img = group.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push_back(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        let mut seen = vec![false; n];
        for &m in &map {
            if m == usize::MAX || std::mem::replace(&mut seen[m], true) {
                return None;
            }
        }
        Some(GroupAutomorphism { images: map })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image_set(&self, set: &[usize]) -> Vec<usize> {
        normalized(&set.iter().map(|&x| self.images[x]).collect::<Vec<_>>())
    }

    /// `self` then `other`.
    pub fn then(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> u64 {
        Permutation::from_images_unchecked(self.images.clone()).order()
    }
}

/// Every automorphism of `H`, found by trying all order-preserving images
/// of the generators. The identity comes first.
pub fn group_automorphisms(group: &FiniteGroup) -> Result<Vec<GroupAutomorphism>> {
    if group.order() > AUT_H_BOUND {
        return Err(Error::BoundExceeded {
            order: group.order() as u64,
            bound: AUT_H_BOUND as u64,
        });
    }
    let gens = group.generator_indices();
    let orders: Vec<u64> = group.elements().iter().map(Permutation::order).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..group.order()).filter(|&x| orders[x] == orders[g]).collect())
        .collect();
    let tuples: u64 = candidates.iter().map(|c| c.len() as u64).product();
    if tuples > IMAGE_TUPLE_BOUND {
        return Err(Error::BoundExceeded {
            order: tuples,
            bound: IMAGE_TUPLE_BOUND,
        });
    }
    let mut out = vec![GroupAutomorphism::identity(group.order())];
    let mut choice = vec![0usize; gens.len()];
    loop {
        let targets: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if targets != gens {
            if let Some(a) = GroupAutomorphism::extend(group, &gens, &targets) {
                out.push(a);
            }
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `δ_α`: `h_0 ↦ (h^α)_1`, `h_1 ↦ (h^α)_0`.
pub fn delta_map(spec: &BiCayleySpec, alpha: &GroupAutomorphism) -> Permutation {
    let n = spec.group.order();
    let images = (0..2 * n)
        .map(|v| (1 - v / n) * n + alpha.apply(v % n))
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `σ_α`: `h_i ↦ (h^α)_i`.
pub fn sigma_map(spec: &BiCayleySpec, alpha: &GroupAutomorphism) -> Permutation {
    let n = spec.group.order();
    let images = (0..2 * n).map(|v| (v / n) * n + alpha.apply(v % n)).collect();
    Permutation::from_images_unchecked(images)
}

/// The set `I` of part-swapping maps and the group `F` of part-preserving
/// maps induced by automorphisms of `H`.
#[derive(Clone, Debug)]
pub struct BiCayleyAutomorphisms {
    /// `(α, δ_α)` with `R^α = L`, `L^α = R`, `S^α = S^{-1}`.
    pub i: Vec<(GroupAutomorphism, Permutation)>,
    /// `σ_α` for `α` with `R^α = R`, `L^α = L`, `S^α = S`.
    pub f_maps: Vec<Permutation>,
    pub f: PermutationGroup,
}

/// Computes `I` and `F`, verifying each map against the graph.
pub fn compute_i_f(spec: &BiCayleySpec, graph: &Graph) -> Result<BiCayleyAutomorphisms> {
    let g = &spec.group;
    let s_inv = normalized(&spec.s.iter().map(|&x| g.inverse(x)).collect::<Vec<_>>());
    let mut i = Vec::new();
    let mut f_maps = Vec::new();
    for alpha in group_automorphisms(g)? {
        let (r, l, s) = (alpha.image_set(&spec.r), alpha.image_set(&spec.l), alpha.image_set(&spec.s));
        if r == spec.l && l == spec.r && s == s_inv {
            let d = delta_map(spec, &alpha);
            if !graph.is_automorphism(&d) {
                return Err(Error::InvalidBiCayley("a map in I is not a graph automorphism".into()));
            }
            i.push((alpha.clone(), d));
        }
        if r == spec.r && l == spec.l && s == spec.s {
            let sig = sigma_map(spec, &alpha);
            if !graph.is_automorphism(&sig) {
                return Err(Error::InvalidBiCayley("a map in F is not a graph automorphism".into()));
            }
            f_maps.push(sig);
        }
    }
    let f = PermutationGroup::from_generators_reduced(2 * g.order(), &f_maps)?;
    Ok(BiCayleyAutomorphisms { i, f_maps, f })
}
