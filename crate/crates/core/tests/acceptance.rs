//! Acceptance battery: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use vnc_core::analysis::{
    certify, certify_with, check_quotient_theorem, validate_regular_witness, verified_foster_graph, CayleyVerdict,
    CertifyOptions,
};
use vnc_core::automorphisms::{are_isomorphic, automorphism_group, canonical_form};
use vnc_core::constructions::catalogue::{nc9, nc_catalogue};
use vnc_core::constructions::xn2::{x_n_2, x_n_2_regular_group};
use vnc_core::verify::{bicayley_checks, nc9_quotient_groups};
use vnc_core::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t <= limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn catalogue() -> Outcome {
    let start = Instant::now();
    for i in 0..9 {
        let g = nc_catalogue(i).map_err(err)?;
        let r = certify(&g, &format!("NC{i}")).map_err(err)?;
        let n = if i <= 6 { 60 } else { 84 };
        ensure!(r.connected && r.valency == Some(3) && r.order == n, "NC{i}: {r:?}");
        ensure!(r.vertex_transitive && !r.arc_transitive, "NC{i}: transitivity {r:?}");
        ensure!(matches!(r.cayley_verdict, CayleyVerdict::NonCayley { .. }), "NC{i}: {:?}", r.cayley_verdict);
        ensure!(!r.aut_solvable, "NC{i}: Aut solvable");
    }
    within(start, Duration::from_secs(120), "catalogue")?;
    Ok(format!("9 graphs in {:?}", start.elapsed()))
}

fn nc9_family() -> Outcome {
    let start = Instant::now();
    for p in [5usize, 13, 17, 29] {
        let g = nc9(p).map_err(err)?.graph;
        let r = certify(&g, "nc9").map_err(err)?;
        ensure!(r.connected && r.valency == Some(3) && r.order == 12 * p, "p={p}: {r:?}");
        ensure!(r.vertex_transitive && !r.arc_transitive && r.is_vnc(), "p={p}: {r:?}");
        ensure!(r.aut_order == 24 * p as u64, "p={p}: |Aut| = {}", r.aut_order);
        ensure!(r.aut_solvable, "p={p}: Aut not solvable");
        ensure!(r.girth.finite().is_some_and(|g| g > 4), "p={p}: girth {}", r.girth);
    }
    within(start, Duration::from_secs(300), "NC9 family")?;
    Ok(format!("p in {{5,13,17,29}} in {:?}", start.elapsed()))
}

fn class_count(graphs: &[Graph]) -> Result<usize, String> {
    let mut certs = BTreeSet::new();
    for g in graphs {
        certs.insert(canonical_form(g).map_err(err)?.certificate);
    }
    Ok(certs.len())
}

fn non_isomorphism() -> Outcome {
    let mut sixty: Vec<Graph> = (0..7).map(nc_catalogue).collect::<Result<_, _>>().map_err(err)?;
    sixty.push(nc9(5).map_err(err)?.graph);
    let k60 = class_count(&sixty)?;
    ensure!(k60 == 8, "order 60: {k60} classes");
    let eighty_four = vec![
        nc_catalogue(7).map_err(err)?,
        nc_catalogue(8).map_err(err)?,
        verified_foster_graph("F084").map_err(err)?.foster.graph,
    ];
    let k84 = class_count(&eighty_four)?;
    ensure!(k84 == 3, "order 84: {k84} classes");
    Ok("8 classes of order 60, 3 of order 84".into())
}

fn foster() -> Outcome {
    let expected = [("F024", 2, 144, true), ("F060", 2, 360, true), ("F084", 2, 504, false), ("F204", 4, 4896, false)];
    for (name, s, order, cayley) in expected {
        let v = verified_foster_graph(name).map_err(err)?;
        let r = certify_with(&v.foster.graph, name, &v.aut, &CertifyOptions::default()).map_err(err)?;
        ensure!(r.s_regularity == Some(s), "{name}: s = {:?}", r.s_regularity);
        ensure!(r.aut_order == order, "{name}: |Aut| = {}", r.aut_order);
        ensure!(r.cayley_verdict.is_cayley() == cayley, "{name}: {:?}", r.cayley_verdict);
    }
    Ok("s and |Aut| exact; F024, F060 Cayley; F084, F204 not".into())
}

fn x_family() -> Outcome {
    for n in [3usize, 15, 21] {
        let x = x_n_2(n).map_err(err)?;
        let aut = automorphism_group(&x).map_err(err)?;
        let r = x_n_2_regular_group(n).map_err(err)?;
        ensure!(r.order() == 4 * n as u64, "n={n}: order {}", r.order());
        validate_regular_witness(&x, &aut.group, &r).map_err(err)?;
        for s in r.generators() {
            ensure!(aut.group.contains(s).map_err(err)?, "n={n}: generator outside Aut");
        }
        ensure!(x.girth().finite() == Some(4), "n={n}: girth {}", x.girth());
    }
    Ok("<alpha, beta, gamma> regular in Aut for n = 3, 15, 21".into())
}

fn bicayley() -> Outcome {
    let d = nc9(5).map_err(err)?;
    for c in bicayley_checks(&d).map_err(err)? {
        ensure!(c.holds, "{}: {}", c.name, c.detail);
    }
    Ok("I non-empty, delta order 4, normalizer equality".into())
}

fn brute_force_order(g: &Graph) -> u64 {
    fn go(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let k = image.len();
        if k == g.n() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            // adjacency to already placed vertices must be preserved
            if (0..k).any(|u| g.has_edge(u, k) != g.has_edge(image[u], v)) {
                continue;
            }
            used[v] = true;
            image.push(v);
            total += go(g, image, used);
            image.pop();
            used[v] = false;
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let corpus = [
        ("K4", Graph::complete(4), 24),
        ("C6", Graph::cycle(6).map_err(err)?, 12),
        ("cube", Graph::cube(), 48),
        ("2K3", Graph::complete(3).disjoint_union(&Graph::complete(3)), 72),
        ("P4", Graph::path(4), 2),
        ("X(2,2)", x_n_2(2).map_err(err)?, 48),
    ];
    for (name, g, known) in corpus {
        let brute = brute_force_order(&g);
        let ours = automorphism_group(&g).map_err(err)?.order();
        ensure!(brute == known && ours == brute, "{name}: ours {ours}, enumeration {brute}");
    }
    within(start, Duration::from_secs(10), "oracle")?;
    Ok(format!("6 graphs in {:?}", start.elapsed()))
}

fn petersen() -> Outcome {
    let r = certify(&Graph::petersen(), "petersen").map_err(err)?;
    ensure!(r.vertex_transitive && r.is_vnc(), "{r:?}");
    Ok("vertex-transitive, non-Cayley".into())
}

fn quotient() -> Outcome {
    let d = nc9(5).map_err(err)?;
    let (g, n) = nc9_quotient_groups(&d).map_err(err)?;
    let rep = check_quotient_theorem(&d.graph, &g, &n).map_err(err)?;
    ensure!(rep.consistent(), "conclusion failed under its hypotheses: {rep:?}");
    let semiregular = rep.conclusion("N semiregular").is_some_and(|c| c.holds);
    ensure!(semiregular, "N not semiregular");
    let c12 = Graph::cycle(12).map_err(err)?;
    ensure!(are_isomorphic(&rep.quotient, &c12).map_err(err)?.is_some(), "quotient is not C12");
    let failed: Vec<&str> = rep.hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
    Ok(format!("quotient C12; N semiregular; failing hypotheses {failed:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("catalogue certification", catalogue),
        ("NC9 family", nc9_family),
        ("pairwise non-isomorphism", non_isomorphism),
        ("census graph verification", foster),
        ("X(n,2) family", x_family),
        ("bi-Cayley machinery", bicayley),
        ("oracle equivalence", oracle),
        ("Petersen sanity anchor", petersen),
        ("quotient checker", quotient),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
