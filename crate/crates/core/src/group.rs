//! Permutation groups given by generators, backed by a lazily built
//! stabilizer chain (base and strong generating set).
//!
//! The chain is built by a deterministic Schreier–Sims procedure. New base
//! points are always the smallest point moved by the generator that forced
//! the extension, so chains and element enumeration order are reproducible.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements any brute-force enumeration visits.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// A partition of `{0, …, n-1}` into blocks, sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn singletons(n: usize) -> Self {
        OrbitPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// Validates that `blocks` are disjoint, non-empty and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b.first().copied());
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "point {v} lies in two blocks"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("point {v} is not covered")));
        }
        Ok(OrbitPartition { blocks, block_of })
    }

    /// Orbits of the group generated by `gens`, by union-find.
    pub fn from_generators(n: usize, gens: &[Permutation]) -> Self {
        let mut uf = UnionFind::new(n);
        for g in gens {
            for v in 0..n {
                uf.union(v, g.apply(v));
            }
        }
        uf.into_partition()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    /// Whether `g` maps every block onto some block.
    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        self.blocks.iter().all(|b| {
            let target = self.block_of[g.apply(b[0])];
            b.iter().all(|&v| self.block_of[g.apply(v)] == target)
                && self.blocks[target].len() == b.len()
        })
    }

    /// Whether `g` maps every block onto itself.
    pub fn is_closed_under(&self, g: &Permutation) -> bool {
        (0..self.degree()).all(|v| self.block_of[g.apply(v)] == self.block_of[v])
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so roots are block minima
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub(crate) fn into_partition(mut self) -> OrbitPartition {
        let n = self.parent.len();
        let mut index_of_root = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        for (v, slot) in block_of.iter_mut().enumerate() {
            let r = self.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = blocks.len();
                blocks.push(Vec::new());
            }
            *slot = index_of_root[r];
            blocks[index_of_root[r]].push(v);
        }
        OrbitPartition { blocks, block_of }
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            generators: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        let old_len = self.orbit.len();
        for idx in 0..old_len {
            let b = self.orbit[idx];
            let c = g.apply(b);
            if self.transversal[c].is_none() {
                let u = self.transversal[b].as_ref().unwrap().then(&g);
                self.transversal[c] = Some(u);
                self.orbit.push(c);
            }
        }
        self.generators.push(g);
        let mut idx = old_len;
        while idx < self.orbit.len() {
            let b = self.orbit[idx];
            for s in &self.generators {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().then(s);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            idx += 1;
        }
    }
}

/// Base, strong generators and transversals of a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Orbit lengths of the successive stabilizers on their base points.
    pub fn transversal_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Strong generators fixing the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> &[Permutation] {
        self.levels
            .get(level)
            .map(|l| l.generators.as_slice())
            .unwrap_or(&[])
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// The coset representative mapping the base point of `level` to `point`.
    pub fn representative(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].transversal[point].as_ref()
    }

    /// Sifts `g` starting at `from`. Returns the residue and the level at
    /// which sifting stopped (`depth()` when it ran through every level).
    pub fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        strip_levels(&self.levels, g, from)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Images of the base points, which determine an element uniquely.
    pub fn base_images(&self, g: &Permutation) -> Vec<usize> {
        self.levels.iter().map(|l| g.apply(l.base)).collect()
    }

    /// Drops the first `k` levels: the chain of the pointwise stabilizer of
    /// the first `k` base points.
    fn suffix(&self, k: usize) -> StabilizerChain {
        StabilizerChain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
        }
    }

    pub fn iter_elements(&self) -> ElementIter<'_> {
        ElementIter::new(self)
    }
}

fn strip_levels(levels: &[Level], g: &Permutation, from: usize) -> (Permutation, usize) {
    let mut h = g.clone();
    for (l, level) in levels.iter().enumerate().skip(from) {
        let beta = h.apply(level.base);
        match &level.transversal[beta] {
            None => return (h, l),
            Some(u) => h = h.then(&u.inverse()),
        }
    }
    (h, levels.len())
}

/// Incremental deterministic Schreier–Sims.
pub(crate) struct ChainBuilder {
    degree: usize,
    levels: Vec<Level>,
    tested: Vec<HashSet<(usize, usize)>>,
}

impl ChainBuilder {
    pub(crate) fn new(degree: usize, base_prefix: &[usize]) -> Self {
        let mut b = ChainBuilder {
            degree,
            levels: Vec::new(),
            tested: Vec::new(),
        };
        for &p in base_prefix {
            b.push_level(p);
        }
        b
    }

    pub(crate) fn from_chain(chain: StabilizerChain) -> Self {
        // pairs already verified when `chain` was completed
        let tested = chain
            .levels
            .iter()
            .map(|l| {
                l.orbit
                    .iter()
                    .flat_map(|&b| (0..l.generators.len()).map(move |i| (b, i)))
                    .collect()
            })
            .collect();
        ChainBuilder {
            degree: chain.degree,
            levels: chain.levels,
            tested,
        }
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level::new(self.degree, base));
        self.tested.push(HashSet::new());
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (h, j) = strip_levels(&self.levels, g, 0);
        j == self.levels.len() && h.is_identity()
    }

    fn insert_unchecked(&mut self, g: &Permutation) {
        if self.levels.iter().all(|l| g.fixes(l.base)) {
            let b = g.first_moved_point().expect("identity has no moved point");
            self.push_level(b);
        }
        for l in 0..self.levels.len() {
            self.levels[l].add_generator(g.clone());
            if !g.fixes(self.levels[l].base) {
                break;
            }
        }
    }

    /// Adds `g` and completes the chain. Returns false if `g` was already
    /// a member.
    pub(crate) fn add_generator(&mut self, g: &Permutation) -> bool {
        if g.is_identity() || self.contains(g) {
            return false;
        }
        self.insert_unchecked(g);
        self.complete();
        true
    }

    pub(crate) fn add_generators(&mut self, gens: &[Permutation]) {
        for g in gens {
            if !g.is_identity() {
                self.insert_unchecked(g);
            }
        }
        self.complete();
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.find_failing_schreier_generator(lvl) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h
                            .first_moved_point()
                            .expect("non-trivial residue moves a point");
                        self.push_level(b);
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_generator(h.clone());
                    }
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&mut self, lvl: usize) -> Option<(Permutation, usize)> {
        let mut oi = 0;
        while oi < self.levels[lvl].orbit.len() {
            let b = self.levels[lvl].orbit[oi];
            let ngens = self.levels[lvl].generators.len();
            for si in 0..ngens {
                if !self.tested[lvl].insert((b, si)) {
                    continue;
                }
                let level = &self.levels[lvl];
                let s = &level.generators[si];
                let ub = level.transversal[b].as_ref().unwrap();
                let uc = level.transversal[s.apply(b)].as_ref().unwrap();
                let y = ub.then(s).then(&uc.inverse());
                if y.is_identity() {
                    continue;
                }
                let (h, j) = strip_levels(&self.levels, &y, lvl + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
            oi += 1;
        }
        None
    }

    pub(crate) fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub(crate) fn build(self) -> StabilizerChain {
        StabilizerChain {
            degree: self.degree,
            levels: self.levels,
        }
    }
}

/// Streams every element of a group exactly once as a product of
/// transversal elements, deepest level first.
pub struct ElementIter<'a> {
    chain: &'a StabilizerChain,
    index: Vec<usize>,
    // partial[l] = u_{k-1} · … · u_l for the current index
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> ElementIter<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        let k = chain.levels.len();
        let id = Permutation::identity(chain.degree);
        ElementIter {
            chain,
            index: vec![0; k],
            partial: vec![id; k],
            done: false,
        }
    }

    fn recompute_from(&mut self, top: usize) {
        let k = self.chain.levels.len();
        for l in (0..=top).rev() {
            let level = &self.chain.levels[l];
            let u = level.transversal[level.orbit[self.index[l]]].as_ref().unwrap();
            self.partial[l] = if l + 1 < k {
                self.partial[l + 1].then(u)
            } else {
                u.clone()
            };
        }
    }
}

impl Iterator for ElementIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let k = self.chain.levels.len();
        if k == 0 {
            self.done = true;
            return Some(Permutation::identity(self.chain.degree));
        }
        let out = self.partial[0].clone();
        // odometer: level 0 fastest
        let mut l = 0;
        loop {
            if l == k {
                self.done = true;
                break;
            }
            self.index[l] += 1;
            if self.index[l] < self.chain.levels[l].orbit.len() {
                self.recompute_from(l);
                break;
            }
            self.index[l] = 0;
            l += 1;
        }
        Some(out)
    }
}

/// A permutation group on `{0, …, degree-1}` given by generators.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap());
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        PermutationGroup::new(n, gens).unwrap()
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermutationGroup {
            degree,
            generators,
            chain: lock,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| self.build_chain_with_base(&[]))
    }

    fn build_chain_with_base(&self, prefix: &[usize]) -> StabilizerChain {
        let mut b = ChainBuilder::new(self.degree, prefix);
        b.add_generators(&self.generators);
        b.build()
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn orbits(&self) -> OrbitPartition {
        OrbitPartition::from_generators(self.degree, &self.generators)
    }

    pub fn orbit(&self, v: usize) -> Result<Vec<usize>> {
        self.check_point(v)?;
        let mut seen = vec![false; self.degree];
        seen[v] = true;
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        Ok(out)
    }

    fn check_point(&self, v: usize) -> Result<()> {
        if v >= self.degree {
            Err(Error::PointOutOfRange {
                point: v,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    /// The subgroup fixing `v`.
    pub fn point_stabilizer(&self, v: usize) -> Result<PermutationGroup> {
        self.pointwise_stabilizer(&[v])
    }

    /// The subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = self.chain_with_base(points);
        let k = points.len();
        let stab = chain.suffix(k);
        let gens = stab.strong_generators(0).to_vec();
        Ok(PermutationGroup::from_parts(self.degree, gens, stab))
    }

    /// A chain whose base starts with `prefix` (a base change by rebuilding).
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabilizerChain {
        let current = self.chain();
        if current.base().starts_with(prefix) {
            return current.clone();
        }
        let mut b = ChainBuilder::new(self.degree, prefix);
        b.add_generators(&self.generators);
        let chain = b.build();
        debug_assert_eq!(chain.order(), current.order());
        chain
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Every point stabilizer is trivial, i.e. every orbit has length |G|.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits()
            .blocks()
            .iter()
            .all(|b| b.len() as u64 == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u64
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && self
                .generators
                .iter()
                .all(|g| other.chain().contains(g))
    }

    /// Whether `self` is a normal subgroup of `other`.
    pub fn is_normal_in(&self, other: &PermutationGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.chain().contains(&h.conjugate_by(g)))
            })
    }

    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// The smallest subgroup of `self` containing `seeds` and closed under
    /// conjugation by the generators of `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermutationGroup> {
        for s in seeds {
            if s.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: s.degree(),
                });
            }
        }
        let mut builder = ChainBuilder::new(self.degree, &[]);
        let mut gens = Vec::new();
        let mut queue: VecDeque<Permutation> = seeds.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if builder.add_generator(&x) {
                for g in &self.generators {
                    queue.push_back(x.conjugate_by(g));
                }
                gens.push(x);
            }
        }
        Ok(PermutationGroup::from_parts(self.degree, gens, builder.build()))
    }

    /// Normal closure of the commutators of all generator pairs.
    pub fn derived_subgroup(&self) -> PermutationGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
            .expect("commutators share the group degree")
    }

    /// `G, G', G'', …` until the series stabilizes.
    pub fn derived_series(&self) -> Vec<PermutationGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            let trivial = next.order() == 1;
            series.push(next);
            if trivial {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// Every element exactly once, refusing groups above `bound`.
    pub fn elements_bounded(&self, bound: u64) -> Result<ElementIter<'_>> {
        let order = self.order();
        if order > bound {
            return Err(Error::BoundExceeded { order, bound });
        }
        Ok(self.chain().iter_elements())
    }

    pub fn elements(&self) -> Result<ElementIter<'_>> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    fn check_subgroup(&self, h: &PermutationGroup) -> Result<()> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: h.degree,
            });
        }
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(
                "a generator of H does not lie in G".into(),
            ));
        }
        Ok(())
    }

    fn filter_subgroup<F>(&self, h: &PermutationGroup, keep: F) -> Result<PermutationGroup>
    where
        F: Fn(&Permutation) -> bool,
    {
        self.check_subgroup(h)?;
        let mut builder = ChainBuilder::new(self.degree, &[]);
        let mut gens = Vec::new();
        for g in self.elements()? {
            if !builder.contains(&g) && keep(&g) {
                builder.add_generator(&g);
                gens.push(g);
            }
        }
        Ok(PermutationGroup::from_parts(self.degree, gens, builder.build()))
    }

    /// `N_G(H)` by exhaustive filtering of the elements of `G`.
    pub fn normalizer(&self, h: &PermutationGroup) -> Result<PermutationGroup> {
        let hchain = h.chain();
        self.filter_subgroup(h, |g| {
            h.generators.iter().all(|x| hchain.contains(&x.conjugate_by(g)))
        })
    }

    /// `C_G(H)` by exhaustive filtering of the elements of `G`.
    pub fn centralizer(&self, h: &PermutationGroup) -> Result<PermutationGroup> {
        self.filter_subgroup(h, |g| h.generators.iter().all(|x| g.then(x) == x.then(g)))
    }

    /// Adds generators, returning the enlarged group.
    pub fn with_generators(&self, extra: &[Permutation]) -> Result<PermutationGroup> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        PermutationGroup::new(self.degree, gens)
    }

    /// Builds the group generated by `gens`, dropping generators that are
    /// already implied by earlier ones.
    pub fn from_generators_reduced(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let mut builder = ChainBuilder::new(degree, &[]);
        let mut kept = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if builder.add_generator(g) {
                kept.push(g.clone());
            }
        }
        Ok(PermutationGroup::from_parts(degree, kept, builder.build()))
    }

    /// `⟨self, extra⟩`, continuing the existing chain instead of starting over.
    pub fn extended(&self, extra: &[Permutation]) -> PermutationGroup {
        let mut builder = ChainBuilder::from_chain(self.chain().clone());
        let mut gens = self.generators.clone();
        for g in extra {
            if builder.add_generator(g) {
                gens.push(g.clone());
            }
        }
        debug_assert!(builder.order() >= self.order());
        PermutationGroup::from_parts(self.degree, gens, builder.build())
    }
}
