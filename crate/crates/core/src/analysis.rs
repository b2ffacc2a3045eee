//! Decision procedures on graphs with known automorphism groups:
//! transitivity, s-regularity, the Cayley test by regular-subgroup search,
//! certification reports and the normal-quotient checker.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::automorphisms::{automorphism_group, AutomorphismResult};
use crate::constructions::foster::{foster_graph, FosterGraph};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph, SArc};
use crate::group::{OrbitPartition, PermutationGroup, DEFAULT_ENUMERATION_BOUND};
use crate::perm::Permutation;

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Largest s tried; cubic graphs are never s-regular beyond this.
pub const S_CAP: u32 = 5;

pub fn is_vertex_transitive(aut: &AutomorphismResult) -> bool {
    aut.is_vertex_transitive()
}

/// Orbit of the arc `(0, first neighbour)` under `group`, as a count.
fn arc_orbit_size(g: &Graph, group: &PermutationGroup) -> usize {
    orbit_of_arc(group, &[0, g.neighbors(0)[0]])
}

/// Size of the orbit of a vertex sequence under the generators of `group`.
fn orbit_of_arc(group: &PermutationGroup, arc: &[usize]) -> usize {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([arc.to_vec()]);
    let mut queue = VecDeque::from([arc.to_vec()]);
    while let Some(a) = queue.pop_front() {
        for gen in group.generators() {
            let b: Vec<usize> = a.iter().map(|&v| gen.apply(v)).collect();
            if seen.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    seen.len()
}

/// Whether `group` is transitive on the arcs (ordered adjacent pairs).
pub fn is_arc_transitive_under(g: &Graph, group: &PermutationGroup) -> bool {
    if g.edge_count() == 0 {
        return false;
    }
    group.is_transitive() && arc_orbit_size(g, group) == 2 * g.edge_count()
}

pub fn is_arc_transitive(g: &Graph, aut: &AutomorphismResult) -> bool {
    is_arc_transitive_under(g, &aut.group)
}

/// The `s` for which `group` acts regularly on the s-arcs of a cubic
/// graph, or `None` when it is not arc-transitive.
pub fn s_regularity_under(g: &Graph, group: &PermutationGroup) -> Result<Option<u32>> {
    if !g.is_cubic() {
        return Err(Error::NotCubic(format!(
            "s-regularity needs a cubic graph, degrees are {:?}",
            {
                let mut d = g.degrees();
                d.sort_unstable();
                d.dedup();
                d
            }
        )));
    }
    if !g.is_connected() || !is_arc_transitive_under(g, group) {
        return Ok(None);
    }
    let order = group.order();
    for s in 1..=S_CAP {
        let count = g.count_s_arcs(s as usize);
        if order > count {
            continue;
        }
        if order < count {
            return Err(Error::Inconsistent(format!(
                "group of order {order} is transitive on {}-arcs but smaller than the {count} {s}-arcs",
                s - 1
            )));
        }
        let arc: SArc = g.first_s_arc(s as usize).expect("cubic graphs have s-arcs");
        let orbit = orbit_of_arc(group, &arc) as u64;
        if orbit != count {
            return Err(Error::Inconsistent(format!(
                "|G| equals the number of {s}-arcs but one orbit has {orbit} of {count}"
            )));
        }
        return Ok(Some(s));
    }
    Err(Error::ArcTransitivityCap(S_CAP))
}

pub fn s_regularity(g: &Graph, aut: &AutomorphismResult) -> Result<Option<u32>> {
    s_regularity_under(g, &aut.group)
}

/// Outcome of a regular-subgroup search.
#[derive(Clone, Debug)]
pub struct RegularSearch {
    pub witness: Option<PermutationGroup>,
    /// Partial subgroups (closures) examined.
    pub explored: u64,
}

struct RegularSearchState {
    n: usize,
    /// Fixed-point-free elements sending 0 to each point.
    candidates: Vec<Vec<Permutation>>,
    base: Vec<usize>,
    visited: HashSet<Vec<usize>>,
    explored: u64,
}

/// A semiregular subgroup, each element stored under its image of 0.
#[derive(Clone)]
struct Partial {
    by_image0: Vec<Option<Permutation>>,
    gens: Vec<Permutation>,
    size: usize,
}

impl RegularSearchState {
    /// `⟨U, g⟩` if it stays semiregular and its order divides `n`.
    fn extend(&self, u: &Partial, g: &Permutation) -> Option<Partial> {
        let mut next = u.clone();
        next.gens.push(g.clone());
        let mut queue: Vec<Permutation> = u.by_image0.iter().flatten().cloned().collect();
        // new products only arise from g, but closing over all generators
        // keeps the routine simple
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i].clone();
            i += 1;
            for s in &next.gens {
                let y = x.then(s);
                let v = y.apply(0);
                match &next.by_image0[v] {
                    Some(existing) => {
                        if *existing != y {
                            return None;
                        }
                    }
                    None => {
                        if !y.is_fixed_point_free() {
                            return None;
                        }
                        next.by_image0[v] = Some(y.clone());
                        next.size += 1;
                        if next.size > self.n {
                            return None;
                        }
                        queue.push(y);
                    }
                }
            }
        }
        self.n.is_multiple_of(next.size).then_some(next)
    }

    fn key(&self, u: &Partial) -> Vec<usize> {
        u.by_image0
            .iter()
            .flatten()
            .flat_map(|x| self.base.iter().map(move |&b| x.apply(b)))
            .collect()
    }

    fn search(&mut self, u: &Partial) -> Option<Partial> {
        let v = u.by_image0.iter().position(Option::is_none)?;
        for k in 0..self.candidates[v].len() {
            let g = self.candidates[v][k].clone();
            self.explored += 1;
            let Some(next) = self.extend(u, &g) else { continue };
            if next.size == self.n {
                return Some(next);
            }
            if !self.visited.insert(self.key(&next)) {
                continue;
            }
            if let Some(found) = self.search(&next) {
                return Some(found);
            }
        }
        None
    }
}

/// Searches `A` for a subgroup acting regularly on its `n` points.
/// Exhaustive: `None` means no such subgroup exists.
pub fn find_regular_subgroup(a: &PermutationGroup, n: usize) -> Result<RegularSearch> {
    find_regular_subgroup_bounded(a, n, DEFAULT_ENUMERATION_BOUND)
}

pub fn find_regular_subgroup_bounded(a: &PermutationGroup, n: usize, bound: u64) -> Result<RegularSearch> {
    if a.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: a.degree(),
        });
    }
    let order = a.order();
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    if n <= 1 {
        return Ok(RegularSearch {
            witness: Some(PermutationGroup::trivial(n)),
            explored: 0,
        });
    }
    if !a.is_transitive() || !order.is_multiple_of(n as u64) {
        return Ok(RegularSearch {
            witness: None,
            explored: 0,
        });
    }
    let chain = a.chain_with_base(&[0]);
    let stabilizer = a.point_stabilizer(0)?;
    let stab_elements: Vec<Permutation> = stabilizer.elements_bounded(bound)?.collect();
    let mut candidates = vec![Vec::new(); n];
    for (v, list) in candidates.iter_mut().enumerate().skip(1) {
        let u = chain.representative(0, v).expect("A is transitive");
        let mut c: Vec<Permutation> = stab_elements
            .iter()
            .map(|h| h.then(u))
            .filter(Permutation::is_fixed_point_free)
            .collect();
        c.sort_by_cached_key(|x| (std::cmp::Reverse(x.order()), x.images().to_vec()));
        *list = c;
    }
    let mut state = RegularSearchState {
        n,
        candidates,
        base: chain.base(),
        visited: HashSet::new(),
        explored: 0,
    };
    let mut start = Partial {
        by_image0: vec![None; n],
        gens: Vec::new(),
        size: 1,
    };
    start.by_image0[0] = Some(Permutation::identity(n));
    let found = state.search(&start);
    let witness = match found {
        Some(p) => Some(PermutationGroup::from_generators_reduced(n, &p.gens)?),
        None => None,
    };
    Ok(RegularSearch {
        witness,
        explored: state.explored,
    })
}

/// Checks a claimed regular subgroup from scratch.
pub fn validate_regular_witness(g: &Graph, aut: &PermutationGroup, witness: &PermutationGroup) -> Result<()> {
    let n = g.n();
    let fail = |why: &str| Err(Error::Inconsistent(format!("regular witness rejected: {why}")));
    if witness.degree() != n {
        return fail("wrong degree");
    }
    if witness.order() != n as u64 {
        return fail("order differs from the number of vertices");
    }
    if !witness.is_transitive() {
        return fail("not transitive");
    }
    if witness.point_stabilizer(0)?.order() != 1 {
        return fail("non-trivial stabilizer");
    }
    for x in witness.generators() {
        if !g.is_automorphism(x) || !aut.contains(x)? {
            return fail("generator is not an automorphism");
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CayleyVerdict {
    /// A regular subgroup of `Aut(X)`, given by generators.
    Cayley { witness: Vec<String>, source: String },
    /// The regular-subgroup search was exhausted.
    NonCayley { explored: u64 },
    /// `Aut(X)` is not transitive, so no regular subgroup can exist.
    NotVertexTransitive,
}

impl CayleyVerdict {
    pub fn is_cayley(&self) -> bool {
        matches!(self, CayleyVerdict::Cayley { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub format_version: u32,
    pub graph_id: String,
    pub order: usize,
    pub valency: Option<usize>,
    pub girth: Girth,
    pub connected: bool,
    pub vertex_transitive: bool,
    pub arc_transitive: bool,
    pub s_regularity: Option<u32>,
    pub aut_order: u64,
    pub aut_solvable: bool,
    pub cayley_verdict: CayleyVerdict,
}

impl CertificationReport {
    /// Vertex-transitive and not Cayley.
    pub fn is_vnc(&self) -> bool {
        self.vertex_transitive && matches!(self.cayley_verdict, CayleyVerdict::NonCayley { .. })
    }
}

#[derive(Clone, Debug, Default)]
pub struct CertifyOptions {
    /// Generators of a claimed regular subgroup, tried before searching.
    pub regular_hint: Option<Vec<Permutation>>,
    /// Cap on `|Aut|` for the exhaustive regular-subgroup search.
    pub search_bound: Option<u64>,
}

pub fn certify(g: &Graph, id: &str) -> Result<CertificationReport> {
    let aut = automorphism_group(g)?;
    certify_with(g, id, &aut, &CertifyOptions::default())
}

pub fn certify_with(
    g: &Graph,
    id: &str,
    aut: &AutomorphismResult,
    options: &CertifyOptions,
) -> Result<CertificationReport> {
    let n = g.n();
    let vertex_transitive = aut.is_vertex_transitive();
    let arc_transitive = is_arc_transitive(g, aut);
    let s = if g.is_cubic() && g.is_connected() {
        s_regularity(g, aut)?
    } else {
        None
    };
    let cayley_verdict = if !vertex_transitive {
        CayleyVerdict::NotVertexTransitive
    } else if let Some(hint) = &options.regular_hint {
        let w = PermutationGroup::new(n, hint.clone())?;
        validate_regular_witness(g, &aut.group, &w)?;
        CayleyVerdict::Cayley {
            witness: hint.iter().map(ToString::to_string).collect(),
            source: "hint".into(),
        }
    } else {
        let bound = options.search_bound.unwrap_or(DEFAULT_ENUMERATION_BOUND);
        let res = find_regular_subgroup_bounded(&aut.group, n, bound)?;
        match res.witness {
            Some(w) => {
                validate_regular_witness(g, &aut.group, &w)?;
                CayleyVerdict::Cayley {
                    witness: w.generators().iter().map(ToString::to_string).collect(),
                    source: "search".into(),
                }
            }
            None => CayleyVerdict::NonCayley {
                explored: res.explored,
            },
        }
    };
    let report = CertificationReport {
        format_version: REPORT_FORMAT_VERSION,
        graph_id: id.to_string(),
        order: n,
        valency: g.regular_degree(),
        girth: g.girth(),
        connected: g.is_connected(),
        vertex_transitive,
        arc_transitive,
        s_regularity: s,
        aut_order: aut.order(),
        aut_solvable: aut.group.is_solvable(),
        cayley_verdict,
    };
    debug_assert!(!report.arc_transitive || report.vertex_transitive || n == 0);
    Ok(report)
}

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn check(name: &str, holds: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        holds,
        detail,
    }
}

/// Hypotheses and conclusions of the normal-quotient statement on one
/// instance. Conclusions are evaluated whether or not the hypotheses hold;
/// `implied` records whether they are claimed to hold.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub hypotheses: Vec<Check>,
    pub implied: bool,
    pub conclusions: Vec<Check>,
    pub n_orbits: usize,
    pub kernel_order: u64,
    #[serde(skip)]
    pub quotient: Graph,
    #[serde(skip)]
    pub orbits: OrbitPartition,
}

impl QuotientReport {
    /// Every conclusion holds whenever the hypotheses do.
    pub fn consistent(&self) -> bool {
        !self.implied || self.conclusions.iter().all(|c| c.holds)
    }

    pub fn conclusion(&self, name: &str) -> Option<&Check> {
        self.conclusions.iter().find(|c| c.name == name)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Check> {
        self.hypotheses.iter().find(|c| c.name == name)
    }
}

/// The permutation induced on the blocks of `p` by `g`, if `g` permutes them.
pub fn induced_on_blocks(p: &OrbitPartition, g: &Permutation) -> Option<Permutation> {
    if !p.is_invariant_under(g) {
        return None;
    }
    let images = p.blocks().iter().map(|b| p.block_of(g.apply(b[0]))).collect();
    Some(Permutation::from_images(images).expect("block images form a bijection"))
}

pub fn check_quotient_theorem(x: &Graph, g: &PermutationGroup, n: &PermutationGroup) -> Result<QuotientReport> {
    let in_aut = g.generators().iter().all(|s| x.is_automorphism(s));
    let normal = n.is_normal_in(g);
    let arc_transitive = x.edge_count() > 0 && is_arc_transitive_under(x, g);
    let orbits = n.orbits();
    let hypotheses = vec![
        check("G <= Aut(X)", in_aut, format!("{} generators", g.generators().len())),
        check("N normal in G", normal, format!("|N| = {}, |G| = {}", n.order(), g.order())),
        check("G arc-transitive", arc_transitive, format!("{} arcs", 2 * x.edge_count())),
        check("N has more than two orbits", orbits.len() > 2, format!("{} orbits", orbits.len())),
        check("X cubic and connected", x.is_cubic() && x.is_connected(), String::new()),
    ];
    let implied = hypotheses.iter().all(|h| h.holds);

    let mut kernel = PermutationGroup::trivial(x.n());
    let mut induced = Vec::new();
    let mut invariant = true;
    for s in g.generators() {
        match induced_on_blocks(&orbits, s) {
            Some(p) => induced.push(p),
            None => invariant = false,
        }
    }
    if invariant {
        let ks: Vec<Permutation> = g.elements()?.filter(|e| orbits.is_closed_under(e)).collect();
        kernel = PermutationGroup::from_generators_reduced(x.n(), &ks)?;
    }
    let quotient = x.quotient_graph(&orbits)?;
    let semiregular = n.is_semiregular();
    let kernel_is_n = invariant && kernel.order() == n.order() && n.is_subgroup_of(&kernel);
    let quotient_cubic = quotient.is_cubic();
    let s_x = if x.is_cubic() { s_regularity_under(x, g).ok().flatten() } else { None };
    let s_q = if invariant && quotient_cubic {
        let q_group = PermutationGroup::new(quotient.n(), induced)?;
        s_regularity_under(&quotient, &q_group).ok().flatten()
    } else {
        None
    };
    let conclusions = vec![
        check("N semiregular", semiregular, format!("|N| = {}", n.order())),
        check(
            "N is the kernel of G on the N-orbits",
            kernel_is_n,
            format!("kernel order {}", kernel.order()),
        ),
        check(
            "X_N cubic",
            quotient_cubic,
            format!("{} vertices, degrees {:?}", quotient.n(), quotient.regular_degree()),
        ),
        check(
            "G/N s-regular on X_N with the same s",
            s_x.is_some() && s_x == s_q,
            format!("s(X) = {s_x:?}, s(X_N) = {s_q:?}"),
        ),
    ];
    Ok(QuotientReport {
        hypotheses,
        implied,
        conclusions,
        n_orbits: orbits.len(),
        kernel_order: kernel.order(),
        quotient,
        orbits,
    })
}

/// Normal subgroups worth feeding to the quotient checker: each central
/// involution, and the normal closure of one element of each given prime
/// order. Duplicates are removed.
pub fn probe_normal_subgroups(g: &PermutationGroup, primes: &[u64]) -> Result<Vec<(String, PermutationGroup)>> {
    let mut out: Vec<(String, PermutationGroup)> = Vec::new();
    let push = |label: String, h: PermutationGroup, out: &mut Vec<(String, PermutationGroup)>| {
        if !out.iter().any(|(_, k)| k.same_group(&h)) {
            out.push((label, h));
        }
    };
    let mut first_of_order: Vec<Option<Permutation>> = vec![None; primes.len()];
    for e in g.elements()? {
        let o = e.order();
        if o == 2 && g.generators().iter().all(|s| e.then(s) == s.then(&e)) {
            let h = PermutationGroup::new(g.degree(), vec![e.clone()])?;
            push("central involution".into(), h, &mut out);
        }
        for (slot, &p) in first_of_order.iter_mut().zip(primes) {
            if o == p && slot.is_none() {
                *slot = Some(e.clone());
            }
        }
    }
    for (slot, &p) in first_of_order.iter().zip(primes) {
        if let Some(e) = slot {
            let h = g.normal_closure(std::slice::from_ref(e))?;
            push(format!("normal closure of an element of order {p}"), h, &mut out);
        }
    }
    Ok(out)
}

/// `|N_G(H) / C_G(H)|`, which must divide `|Aut(H)|`.
pub fn normalizer_centralizer_index(g: &PermutationGroup, h: &PermutationGroup) -> Result<u64> {
    let nz = g.normalizer(h)?;
    let cz = g.centralizer(h)?;
    if !cz.is_normal_in(&nz) {
        return Err(Error::Inconsistent("centralizer is not normal in the normalizer".into()));
    }
    Ok(nz.order() / cz.order())
}

/// Expected arc-regularity of the bundled census graphs.
pub const FOSTER_S: [(&str, u32); 4] = [("F024", 2), ("F060", 2), ("F084", 2), ("F204", 4)];

/// A census graph together with its verified automorphism data.
#[derive(Clone, Debug)]
pub struct VerifiedFoster {
    pub foster: FosterGraph,
    pub aut: AutomorphismResult,
    pub s: u32,
}

/// Gate check for census data: the graph must be s-regular with the
/// recorded s, so `|Aut| = n·3·2^(s-1)`.
pub fn verify_foster(foster: FosterGraph) -> Result<VerifiedFoster> {
    let expected = FOSTER_S
        .iter()
        .find(|(n, _)| *n == foster.name)
        .map(|&(_, s)| s)
        .ok_or_else(|| Error::UnknownGraph(foster.name.clone()))?;
    let aut = automorphism_group(&foster.graph)?;
    let invalid = |reason: String| Error::InvalidData {
        name: foster.name.clone(),
        reason,
    };
    let s = s_regularity(&foster.graph, &aut)
        .map_err(|e| invalid(e.to_string()))?
        .ok_or_else(|| invalid("not arc-transitive".into()))?;
    if s != expected {
        return Err(invalid(format!("{s}-regular, expected {expected}-regular")));
    }
    let n = foster.graph.n() as u64;
    if aut.order() != n * 3 * (1 << (s - 1)) {
        return Err(invalid(format!("|Aut| = {}", aut.order())));
    }
    Ok(VerifiedFoster { foster, aut, s })
}

pub fn verified_foster_graph(name: &str) -> Result<VerifiedFoster> {
    verify_foster(foster_graph(name)?)
}
