//! Properties of the constructed families: labeling independence,
//! bi-Cayley isomorphisms and the Cayley test on every named graph.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use vnc_core::analysis::{
    certify, certify_with, find_regular_subgroup, s_regularity, validate_regular_witness, verified_foster_graph,
    CayleyVerdict, CertifyOptions,
};
use vnc_core::automorphisms::{are_isomorphic, automorphism_group, canonical_form};
use vnc_core::constructions::bicayley::{bicayley_graph, group_automorphisms};
use vnc_core::constructions::catalogue::{nc9, nc9_with_lambda, nc_catalogue, smallest_order_four};
use vnc_core::constructions::xn2::{x_n_2, x_n_2_regular_group};
use vnc_core::{Graph, Permutation};

fn shuffled(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut images: Vec<usize> = (0..g.n()).collect();
    images.shuffle(rng);
    g.relabel(&Permutation::from_images(images).unwrap()).unwrap()
}

fn named_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (0..9).map(|i| (format!("NC{i}"), nc_catalogue(i).unwrap())).collect();
    out.push(("NC9(5)".into(), nc9(5).unwrap().graph));
    out.push(("F084".into(), verified_foster_graph("F084").unwrap().foster.graph));
    out
}

#[test]
fn certificates_survive_random_relabeling() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, g) in named_graphs() {
        let cert = canonical_form(&g).unwrap().certificate;
        for _ in 0..100 {
            assert_eq!(canonical_form(&shuffled(&g, &mut rng)).unwrap().certificate, cert, "{name}");
        }
    }
}

#[test]
fn automorphism_order_is_labeling_independent() {
    let mut rng = StdRng::seed_from_u64(7);
    for (name, g) in named_graphs() {
        let order = automorphism_group(&g).unwrap().order();
        for _ in 0..10 {
            assert_eq!(automorphism_group(&shuffled(&g, &mut rng)).unwrap().order(), order, "{name}");
        }
    }
}

#[test]
fn bicayley_image_under_group_automorphism_is_isomorphic() {
    let mut rng = StdRng::seed_from_u64(11);
    for p in [5, 13] {
        let d = nc9(p).unwrap();
        let auts = group_automorphisms(d.spec.group()).unwrap();
        for _ in 0..5 {
            let alpha = &auts[rng.gen_range(0..auts.len())];
            let image = bicayley_graph(&d.spec.image_under(alpha).unwrap()).unwrap();
            let iso = are_isomorphic(&d.graph, &image).unwrap().expect("isomorphic");
            assert_eq!(d.graph.relabel(&iso).unwrap(), image);
        }
    }
}

#[test]
fn nc9_lambda_choice_does_not_matter() {
    for p in [5, 13, 17] {
        let l = smallest_order_four(p).unwrap();
        let a = nc9_with_lambda(p, l).unwrap().graph;
        let b = nc9_with_lambda(p, p - l).unwrap().graph;
        assert!(are_isomorphic(&a, &b).unwrap().is_some(), "p = {p}");
    }
}

#[test]
fn cayley_verdict_matches_search_and_witnesses_validate() {
    for (name, g) in named_graphs()
        .into_iter()
        .chain([("F024".to_string(), verified_foster_graph("F024").unwrap().foster.graph)])
        .chain([("F060".to_string(), verified_foster_graph("F060").unwrap().foster.graph)])
    {
        let aut = automorphism_group(&g).unwrap();
        let report = certify_with(&g, &name, &aut, &CertifyOptions::default()).unwrap();
        let search = find_regular_subgroup(&aut.group, g.n()).unwrap();
        assert_eq!(report.cayley_verdict.is_cayley(), search.witness.is_some(), "{name}");
        if let Some(w) = &search.witness {
            validate_regular_witness(&g, &aut.group, w).unwrap();
            assert_eq!(w.order(), g.n() as u64);
            assert!(w.is_transitive());
            assert_eq!(w.point_stabilizer(0).unwrap().order(), 1);
        }
        assert!(!report.arc_transitive || report.vertex_transitive);
    }
}

#[test]
fn stabilizer_order_matches_arc_regularity() {
    for name in ["F024", "F060", "F084", "F204"] {
        let v = verified_foster_graph(name).unwrap();
        let expected = 3 * (1u64 << (v.s - 1));
        for x in 0..v.foster.graph.n() {
            assert_eq!(v.aut.group.point_stabilizer(x).unwrap().order(), expected, "{name} at {x}");
        }
    }
    let petersen = Graph::petersen();
    let aut = automorphism_group(&petersen).unwrap();
    assert_eq!(s_regularity(&petersen, &aut).unwrap(), Some(3));
    for x in 0..10 {
        assert_eq!(aut.group.point_stabilizer(x).unwrap().order(), 12);
    }
}

#[test]
fn x_n_2_is_cayley_for_n_up_to_21() {
    for n in 3..=21 {
        let x = x_n_2(n).unwrap();
        let aut = automorphism_group(&x).unwrap();
        // beyond n = 10 the exhaustive search is slow in debug builds
        let opts = CertifyOptions {
            regular_hint: (n > 10).then(|| x_n_2_regular_group(n).unwrap().generators().to_vec()),
            search_bound: None,
        };
        let report = certify_with(&x, "X", &aut, &opts).unwrap();
        assert!(report.cayley_verdict.is_cayley(), "n = {n}");
        assert_eq!(report.girth.finite(), Some(4));
        assert_eq!(report.aut_order, (1u64 << n) * 2 * n as u64);
    }
}

#[test]
fn nc9_reports() {
    for p in [5, 13, 17] {
        let r = certify(&nc9(p).unwrap().graph, "nc9").unwrap();
        assert!(r.is_vnc());
        assert!(!r.arc_transitive);
        assert_eq!(r.aut_order, 24 * p as u64);
        assert!(r.aut_solvable);
        assert!(matches!(r.cayley_verdict, CayleyVerdict::NonCayley { explored } if explored > 0));
    }
}
