//! Automorphism groups and canonical certificates.
use vnc_core::automorphisms::{are_isomorphic, automorphism_group, canonical_form};
use vnc_core::{Graph, Permutation};

fn main() -> vnc_core::Result<()> {
    let petersen = Graph::petersen();
    let aut = automorphism_group(&petersen)?;
    println!("Petersen: |Aut| = {}, {} generators, {} search nodes", aut.order(), aut.generators.len(), aut.nodes);

    let shuffle: Permutation = "10: 3 7 1 9 0 5 2 8 6 4".parse()?;
    let copy = petersen.relabel(&shuffle)?;
    let (a, b) = (canonical_form(&petersen)?, canonical_form(&copy)?);
    println!("certificates equal after relabeling: {}", a.certificate == b.certificate);
    println!("{}", a.certificate);

    let gp = Graph::generalized_petersen(5, 1)?;
    println!("Petersen vs prism: {:?}", are_isomorphic(&petersen, &gp)?.map(|p| p.to_string()));
    Ok(())
}
