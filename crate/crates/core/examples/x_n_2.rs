//! X(n,2) as a Cayley graph of the dihedral group <alpha, beta, gamma>.
use vnc_core::analysis::validate_regular_witness;
use vnc_core::automorphisms::automorphism_group;
use vnc_core::constructions::xn2::{x_n_2, x_n_2_as_cayley, x_n_2_regular_group};

fn main() -> vnc_core::Result<()> {
    for n in [3, 15, 21] {
        let x = x_n_2(n)?;
        let aut = automorphism_group(&x)?;
        let r = x_n_2_regular_group(n)?;
        validate_regular_witness(&x, &aut.group, &r)?;
        let (cay, map) = x_n_2_as_cayley(n)?;
        println!(
            "X({n},2): {} vertices, girth {}, |Aut| = {}, regular subgroup of order {}, Cayley relabeling ok: {}",
            x.n(),
            x.girth(),
            aut.order(),
            r.order(),
            cay.relabel(&map)? == x
        );
    }
    Ok(())
}
