//! Builds the nine coset graphs of the catalogue and prints basic data.
use vnc_core::constructions::catalogue::{nc_coset_graph, nc_row};

fn main() -> vnc_core::Result<()> {
    for i in 0..9 {
        let row = nc_row(i)?;
        let cg = nc_coset_graph(i)?;
        let g = &cg.graph;
        println!(
            "{:<4} {:<12} |G| = {:>3}  n = {}  valency {}  girth {}  connected {}",
            row.name(),
            row.group_name,
            cg.action.order(),
            g.n(),
            cg.valency,
            g.girth(),
            g.is_connected()
        );
    }
    Ok(())
}
