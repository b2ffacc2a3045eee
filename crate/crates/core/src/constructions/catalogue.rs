//! The sporadic coset graphs `NC^0 … NC^8` and the bi-Cayley family
//! `NC^9(p)`.

use serde::Serialize;

use crate::constructions::bicayley::{bicayley_graph, BiCayleySpec, GroupAutomorphism};
use crate::constructions::{coset_graph, double_coset, CosetGraph, FiniteGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

type Cycles = &'static [&'static [usize]];

/// One row of the generator table. Cycles use 1-based points.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub index: usize,
    pub prime: usize,
    pub degree: usize,
    pub group_name: &'static str,
    pub h: &'static [Cycles],
    pub a: Cycles,
    pub b: Cycles,
}

pub const TABLE: [TableRow; 9] = [
    TableRow {
        index: 0,
        prime: 5,
        degree: 7,
        group_name: "S5",
        h: &[&[&[1, 3], &[2, 5]]],
        a: &[&[1, 2, 4, 5, 3]],
        b: &[&[2, 5]],
    },
    TableRow {
        index: 1,
        prime: 5,
        degree: 7,
        group_name: "A5 x Z2",
        h: &[&[&[2, 3], &[4, 5]]],
        a: &[&[2, 5], &[3, 4], &[6, 7]],
        b: &[&[1, 2], &[3, 4], &[6, 7]],
    },
    TableRow {
        index: 2,
        prime: 5,
        degree: 7,
        group_name: "A5 x Z2",
        h: &[&[&[2, 3], &[4, 5]]],
        a: &[&[1, 2, 4, 5, 3]],
        b: &[&[2, 4], &[3, 5], &[6, 7]],
    },
    TableRow {
        index: 3,
        prime: 5,
        degree: 7,
        group_name: "A5 x Z2",
        h: &[&[&[2, 3], &[4, 5]]],
        a: &[&[1, 3, 5, 4, 2], &[6, 7]],
        b: &[&[2, 4], &[3, 5]],
    },
    TableRow {
        index: 4,
        prime: 5,
        degree: 7,
        group_name: "S5 x Z2",
        h: &[&[&[1, 3]], &[&[4, 5]]],
        a: &[&[1, 3, 2], &[4, 5]],
        b: &[&[1, 5, 3, 4], &[6, 7]],
    },
    TableRow {
        index: 5,
        prime: 5,
        degree: 7,
        group_name: "S5 x Z2",
        h: &[&[&[1, 3], &[6, 7]], &[&[4, 5], &[6, 7]]],
        a: &[&[2, 5]],
        b: &[&[1, 4, 3, 5], &[6, 7]],
    },
    TableRow {
        index: 6,
        prime: 5,
        degree: 7,
        group_name: "S5 x Z2",
        h: &[&[&[1, 3], &[6, 7]], &[&[4, 5], &[6, 7]]],
        a: &[&[2, 4]],
        b: &[&[1, 4], &[3, 5], &[6, 7]],
    },
    TableRow {
        index: 7,
        prime: 7,
        degree: 8,
        group_name: "PGL(2,7)",
        h: &[&[&[1, 7], &[2, 4], &[3, 8]], &[&[1, 4], &[2, 7], &[5, 6]]],
        a: &[&[1, 8, 4], &[2, 7, 3]],
        b: &[&[1, 4, 2, 7], &[3, 6, 8, 5]],
    },
    TableRow {
        index: 8,
        prime: 7,
        degree: 8,
        group_name: "PGL(2,7)",
        h: &[
            &[&[1, 6], &[2, 4], &[3, 7], &[5, 8]],
            &[&[1, 4], &[2, 6], &[3, 8], &[5, 7]],
        ],
        a: &[&[1, 3, 5, 2, 6, 7, 8, 4]],
        b: &[&[1, 5, 2, 3], &[4, 8, 6, 7]],
    },
];

/// The groups and elements of one table row, converted to 0-based points.
#[derive(Clone, Debug)]
pub struct CosetData {
    pub g: FiniteGroup,
    pub h: PermutationGroup,
    pub a: Permutation,
    pub b: Permutation,
}

impl TableRow {
    pub fn name(&self) -> String {
        format!("NC{}", self.index)
    }

    pub fn data(&self) -> Result<CosetData> {
        let perm = |c: Cycles| Permutation::from_cycles_1based(self.degree, c);
        let hgens = self.h.iter().map(|c| perm(c)).collect::<Result<Vec<_>>>()?;
        let (a, b) = (perm(self.a)?, perm(self.b)?);
        let mut ggens = hgens.clone();
        ggens.push(a.clone());
        ggens.push(b.clone());
        let g = FiniteGroup::new(PermutationGroup::new(self.degree, ggens)?)?;
        let h = PermutationGroup::new(self.degree, hgens)?;
        Ok(CosetData { g, h, a, b })
    }
}

impl CosetData {
    /// `HaH ∪ HbH`.
    pub fn connection_set(&self) -> Result<Vec<usize>> {
        let mut d = double_coset(&self.g, &self.h, &self.a)?;
        d.extend(double_coset(&self.g, &self.h, &self.b)?);
        d.sort_unstable();
        d.dedup();
        Ok(d)
    }

    pub fn build(&self) -> Result<CosetGraph> {
        coset_graph(&self.g, &self.h, &self.connection_set()?)
    }
}

pub fn nc_row(i: usize) -> Result<&'static TableRow> {
    TABLE
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("catalogue index {i} is not in 0..=8")))
}

/// `NC^i` for `i ∈ 0..=8` with its coset-space data.
pub fn nc_coset_graph(i: usize) -> Result<CosetGraph> {
    nc_row(i)?.data()?.build()
}

pub fn nc_catalogue(i: usize) -> Result<Graph> {
    Ok(nc_coset_graph(i)?.graph)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_pow(base: usize, exp: usize, m: usize) -> usize {
    let mut r = 1 % m;
    for _ in 0..exp {
        r = r * base % m;
    }
    r
}

/// Smallest element of multiplicative order 4 modulo `p`.
pub fn smallest_order_four(p: usize) -> Result<usize> {
    check_nc9_prime(p)?;
    Ok((2..p)
        .find(|&x| mod_pow(x, 2, p) == p - 1)
        .expect("p = 1 mod 4 has a square root of -1"))
}

fn check_nc9_prime(p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if p % 4 != 1 {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not 1 mod 4; NC9 exists only for primes p = 1 (mod 4)"
        )));
    }
    Ok(())
}

/// `NC^9(p)` with the data needed to rebuild its automorphisms.
#[derive(Clone, Debug)]
pub struct Nc9 {
    pub p: usize,
    pub lambda: usize,
    pub spec: BiCayleySpec,
    pub graph: Graph,
    /// `a ↔ b`, `c ↦ c^λ`.
    pub alpha: GroupAutomorphism,
    /// Element indices of `a`, `b`, `c` in `H`.
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// `H = S3 × Z_p` on `3 + p` points: `a = (0 1)`, `b = (1 2)`, `c` a
/// `p`-cycle on the remaining points. Element `s·c^k` has index
/// `rank(s)·p + k`, where S3 is ranked by its images in lexicographic order.
pub fn s3_times_zp(p: usize) -> Result<FiniteGroup> {
    let n = 3 + p;
    let a = Permutation::from_cycles(n, &[&[0, 1]])?;
    let b = Permutation::from_cycles(n, &[&[1, 2]])?;
    let cyc: Vec<usize> = (3..n).collect();
    let c = Permutation::from_cycles(n, &[&cyc])?;
    let group = PermutationGroup::new(n, vec![a.clone(), b.clone(), c.clone()])?;
    let mut s3: Vec<Permutation> = PermutationGroup::new(n, vec![a, b])?
        .elements()?
        .collect();
    s3.sort_by(|x, y| x.images()[..3].cmp(&y.images()[..3]));
    let mut elements = Vec::with_capacity(6 * p);
    for s in &s3 {
        for k in 0..p {
            elements.push(s.then(&c.pow(k as i64)));
        }
    }
    FiniteGroup::with_elements(group, elements)
}

pub fn nc9(p: usize) -> Result<Nc9> {
    nc9_with_lambda(p, smallest_order_four(p)?)
}

/// `BiCay(H, {ac, ac^-1}, {bc^λ, bc^-λ}, {1})` for any `λ` of order 4.
pub fn nc9_with_lambda(p: usize, lambda: usize) -> Result<Nc9> {
    check_nc9_prime(p)?;
    if lambda >= p || mod_pow(lambda, 2, p) != p - 1 {
        return Err(Error::InvalidParameter(format!(
            "{lambda} does not have order 4 modulo {p}"
        )));
    }
    let h = s3_times_zp(p)?;
    let gens = h.group().generators().to_vec();
    let (a, b, c) = (&gens[0], &gens[1], &gens[2]);
    let idx = |x: Permutation| h.require_index(&x);
    let l = lambda as i64;
    let r_set = [idx(a.then(c))?, idx(a.then(&c.inverse()))?];
    let l_set = [idx(b.then(&c.pow(l)))?, idx(b.then(&c.pow(-l)))?];
    let alpha = GroupAutomorphism::from_generator_images(&h, &[b.clone(), a.clone(), c.pow(l)])?;
    let (ai, bi, ci) = (idx(a.clone())?, idx(b.clone())?, idx(c.clone())?);
    let spec = BiCayleySpec::new(h, &r_set, &l_set, &[0])?;
    let graph = bicayley_graph(&spec)?;
    Ok(Nc9 {
        p,
        lambda,
        spec,
        graph,
        alpha,
        a: ai,
        b: bi,
        c: ci,
    })
}

/// Machine-readable description of every named graph.
#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub constructor: String,
    pub parameters: serde_json::Value,
}

pub fn manifest() -> Vec<ManifestEntry> {
    let mut out = Vec::new();
    for row in &TABLE {
        let to_text = |c: Cycles| Permutation::from_cycles_1based(row.degree, c).unwrap().cycle_string();
        out.push(ManifestEntry {
            name: row.name(),
            constructor: "coset_graph".into(),
            parameters: serde_json::json!({
                "group": row.group_name,
                "degree": row.degree,
                "points": "0-based",
                "H": row.h.iter().map(|c| to_text(c)).collect::<Vec<_>>(),
                "a": to_text(row.a),
                "b": to_text(row.b),
                "D": "HaH u HbH",
                "order": 12 * row.prime,
            }),
        });
    }
    out.push(ManifestEntry {
        name: "NC9".into(),
        constructor: "bicayley_graph".into(),
        parameters: serde_json::json!({
            "H": "S3 x Z_p",
            "R": "{ac, ac^-1}",
            "L": "{bc^lambda, bc^-lambda}",
            "S": "{1}",
            "p": "prime, p = 1 (mod 4)",
            "lambda": "smallest element of order 4 mod p",
            "order": "12p",
        }),
    });
    for (name, n) in crate::constructions::foster::FOSTER_NAMES {
        out.push(ManifestEntry {
            name: name.to_string(),
            constructor: "foster_graph".into(),
            parameters: serde_json::json!({
                "file": format!("{name}.edges"),
                "order": n,
            }),
        });
    }
    out.push(ManifestEntry {
        name: "X<n>".into(),
        constructor: "x_n_2".into(),
        parameters: serde_json::json!({ "n": ">= 2", "order": "4n" }),
    });
    out.push(ManifestEntry {
        name: "petersen".into(),
        constructor: "generalized_petersen".into(),
        parameters: serde_json::json!({ "n": 5, "k": 2 }),
    });
    out
}

pub fn manifest_json() -> String {
    let mut s = serde_json::to_string_pretty(&manifest()).unwrap();
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn table_orders() {
        let expected_g = [120, 120, 120, 120, 240, 240, 240, 336, 336];
        let expected_h: [usize; 9] = [2, 2, 2, 2, 4, 4, 4, 4, 4];
        for (i, row) in TABLE.iter().enumerate() {
            let data = row.data().unwrap();
            assert_eq!(data.g.order(), expected_g[i], "NC{i}");
            assert_eq!(data.h.order(), expected_h[i] as u64, "NC{i}");
            let d = data.connection_set().unwrap();
            assert_eq!(d.len() / expected_h[i], 3, "NC{i}");
        }
    }

    #[test]
    fn table_graphs_are_cubic_and_connected() {
        for i in 0..9 {
            let cg = nc_coset_graph(i).unwrap();
            let n = if i <= 6 { 60 } else { 84 };
            assert_eq!(cg.graph.n(), n);
            assert!(cg.graph.is_cubic());
            assert!(cg.graph.is_connected());
            assert_eq!(cg.valency, 3);
            assert!(!cg.degenerate);
            assert!(cg.action.is_transitive());
            for g in cg.action.generators() {
                assert!(cg.graph.is_automorphism(g));
            }
        }
        assert!(nc_catalogue(9).is_err());
    }

    #[test]
    fn table_girths() {
        let expected = [5, 6, 5, 9, 3, 6, 6, 3, 4];
        for (i, &g) in expected.iter().enumerate() {
            assert_eq!(nc_catalogue(i).unwrap().girth(), Girth::Finite(g), "NC{i}");
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = nc_catalogue(0).unwrap();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list(&[])).unwrap(), g);
    }

    #[test]
    fn lambda_selection() {
        assert_eq!(smallest_order_four(5).unwrap(), 2);
        assert_eq!(smallest_order_four(13).unwrap(), 5);
        assert_eq!(smallest_order_four(17).unwrap(), 4);
        assert_eq!(smallest_order_four(29).unwrap(), 12);
        assert!(smallest_order_four(7).is_err());
        assert!(smallest_order_four(9).is_err());
    }

    #[test]
    fn s3_times_zp_indexing() {
        let h = s3_times_zp(5).unwrap();
        assert_eq!(h.order(), 30);
        assert!(h.element(0).is_identity());
        let c = &h.group().generators()[2];
        assert_eq!(h.index_of(c), Some(1));
    }

    #[test]
    fn nc9_small_cases() {
        for p in [5, 13] {
            let x = nc9(p).unwrap();
            assert_eq!(x.graph.n(), 12 * p);
            assert!(x.graph.is_cubic());
            assert!(x.graph.is_connected());
            assert!(x.graph.girth().finite().unwrap() > 4);
            assert_eq!(x.alpha.order(), 4);
        }
        assert_eq!(nc9(5).unwrap().graph.girth(), Girth::Finite(8));
        assert!(nc9(7).is_err());
        assert!(nc9_with_lambda(5, 4).is_err());
    }

    #[test]
    fn manifest_file_is_current() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalogue.json");
        let expected = manifest_json();
        if std::env::var_os("VNC_BLESS").is_some() {
            std::fs::write(path, &expected).unwrap();
        }
        let on_disk = std::fs::read_to_string(path).unwrap_or_default();
        assert_eq!(on_disk, expected, "rerun with VNC_BLESS=1 to refresh {path}");
    }
}
