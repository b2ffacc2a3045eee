//! Automorphism counts against exhaustive enumeration of all n! bijections.

use proptest::prelude::*;
use vnc_core::automorphisms::{are_isomorphic, automorphism_group, canonical_form};
use vnc_core::constructions::xn2::x_n_2;
use vnc_core::{Graph, Permutation};

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_force_aut_order(g: &Graph) -> u64 {
    let edges = g.edges();
    all_permutations(g.n())
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .count() as u64
}

fn corpus() -> Vec<(&'static str, Graph, u64)> {
    let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
    vec![
        ("K4", Graph::complete(4), 24),
        ("C6", Graph::cycle(6).unwrap(), 12),
        ("cube", Graph::cube(), 48),
        ("2K3", two_k3, 72),
        ("P4", Graph::path(4), 2),
        ("X(2,2)", x_n_2(2).unwrap(), 48),
    ]
}

#[test]
fn small_corpus_matches_enumeration() {
    for (name, g, known) in corpus() {
        let brute = brute_force_aut_order(&g);
        if known > 0 {
            assert_eq!(brute, known, "{name}");
        }
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), brute, "{name}");
        for s in &aut.generators {
            assert!(g.is_automorphism(s), "{name}");
        }
    }
}

fn cert(g: &Graph) -> String {
    canonical_form(g).unwrap().certificate
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_match_enumeration(g in random_graph()) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), brute_force_aut_order(&g));
    }

    #[test]
    fn isomorphism_agrees_with_enumeration(g in random_graph(), h in random_graph()) {
        let brute = g.n() == h.n()
            && g.edge_count() == h.edge_count()
            && all_permutations(g.n()).into_iter().any(|p| {
                g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v]))
            });
        let found = are_isomorphic(&g, &h).unwrap();
        prop_assert_eq!(found.is_some(), brute);
        prop_assert_eq!(cert(&g) == cert(&h), brute);
        if let Some(p) = found {
            prop_assert_eq!(g.relabel(&p).unwrap(), h);
        }
    }

    #[test]
    fn relabeling_preserves_certificate(g in random_graph(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut images: Vec<usize> = (0..g.n()).collect();
        images.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let p = Permutation::from_images(images).unwrap();
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(cert(&h), cert(&g));
        let q = are_isomorphic(&g, &h).unwrap().expect("relabeled copy is isomorphic");
        prop_assert_eq!(g.relabel(&q).unwrap(), h);
    }
}
