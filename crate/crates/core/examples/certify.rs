//! Certification reports as JSON, one per line.
use vnc_core::analysis::certify;
use vnc_core::constructions::catalogue::{nc9, nc_catalogue};
use vnc_core::Graph;

fn main() -> vnc_core::Result<()> {
    let mut graphs = vec![("petersen".to_string(), Graph::petersen()), ("cube".into(), Graph::cube())];
    graphs.push(("NC7".into(), nc_catalogue(7)?));
    graphs.push(("NC9(13)".into(), nc9(13)?.graph));
    for (id, g) in graphs {
        let report = certify(&g, &id)?;
        println!("{}", serde_json::to_string(&report)?);
    }
    Ok(())
}
