//! The bi-Cayley family NC9(p) and the maps delta_alpha and sigma_alpha.
use vnc_core::automorphisms::automorphism_group;
use vnc_core::constructions::bicayley::{bicayley_right_regular, compute_i_f, delta_map};
use vnc_core::constructions::catalogue::nc9;

fn main() -> vnc_core::Result<()> {
    let p: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let d = nc9(p)?;
    let x = &d.graph;
    println!("NC9({p}) with lambda = {}: {} vertices, girth {}", d.lambda, x.n(), x.girth());

    let fi = compute_i_f(&d.spec, x)?;
    let delta = delta_map(&d.spec, &d.alpha);
    println!("|I| = {}, |F| = {}, delta_alpha has order {}", fi.i.len(), fi.f.order(), delta.order());

    let rh = bicayley_right_regular(&d.spec);
    let g = rh.extended(std::slice::from_ref(&delta));
    let aut = automorphism_group(x)?;
    println!("|<R(H), delta>| = {}, transitive: {}, |Aut| = {}", g.order(), g.is_transitive(), aut.order());
    Ok(())
}
