//! Census graphs: arc-regularity and the normal-quotient checker.
use vnc_core::analysis::{check_quotient_theorem, probe_normal_subgroups, verified_foster_graph};

fn main() -> vnc_core::Result<()> {
    for name in ["F024", "F060", "F084", "F204"] {
        let v = verified_foster_graph(name)?;
        let x = &v.foster.graph;
        println!("{name}: {}-regular, |Aut| = {}, girth {}", v.s, v.aut.order(), x.girth());
        for (label, n) in probe_normal_subgroups(&v.aut.group, &[3, 5, 7, 17])? {
            if n.is_trivial() || n.orbits().len() <= 2 || n.order() == v.aut.order() {
                continue;
            }
            let rep = check_quotient_theorem(x, &v.aut.group, &n)?;
            println!(
                "  {label}: |N| = {}, quotient on {} vertices, valency {:?}, consistent {}",
                n.order(),
                rep.quotient.n(),
                rep.quotient.regular_degree(),
                rep.consistent()
            );
        }
    }
    Ok(())
}
