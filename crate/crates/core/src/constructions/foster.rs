//! Cubic symmetric graphs from the Foster census, shipped as edge lists.
//!
//! Each data file starts with `#` lines naming its census identifier and
//! how it was produced. Loading checks order, connectivity and cubicity;
//! `analysis::verify_foster` additionally checks the automorphism group.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FOSTER_NAMES: [(&str, usize); 4] = [("F024", 24), ("F060", 60), ("F084", 84), ("F204", 204)];

/// Environment variable that points the CLI at another data directory.
pub const DATA_DIR_ENV: &str = "VNC_DATA_DIR";

const BUNDLED: [(&str, &str); 4] = [
    ("F024", include_str!("../../data/F024.edges")),
    ("F060", include_str!("../../data/F060.edges")),
    ("F084", include_str!("../../data/F084.edges")),
    ("F204", include_str!("../../data/F204.edges")),
];

#[derive(Clone, Debug)]
pub struct FosterGraph {
    pub name: String,
    pub graph: Graph,
    /// Header comment lines of the data file.
    pub provenance: Vec<String>,
}

fn expected_order(name: &str) -> Result<usize> {
    FOSTER_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, order)| order)
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))
}

fn load(name: &str, text: &str) -> Result<FosterGraph> {
    let order = expected_order(name)?;
    let invalid = |reason: String| Error::InvalidData {
        name: name.to_string(),
        reason,
    };
    let graph = Graph::parse_edge_list(text).map_err(|e| invalid(e.to_string()))?;
    if graph.n() != order {
        return Err(invalid(format!("{} vertices, expected {order}", graph.n())));
    }
    if !graph.is_cubic() {
        return Err(invalid("not cubic".into()));
    }
    if !graph.is_connected() {
        return Err(invalid("not connected".into()));
    }
    let provenance = text
        .lines()
        .take_while(|l| l.starts_with('#'))
        .map(|l| l.trim_start_matches('#').trim().to_string())
        .collect();
    Ok(FosterGraph {
        name: name.to_string(),
        graph,
        provenance,
    })
}

/// One of the bundled graphs `F024`, `F060`, `F084`, `F204`.
pub fn foster_graph(name: &str) -> Result<FosterGraph> {
    let text = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, t)| t)
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
    load(name, text)
}

/// Reads `<dir>/<name>.edges` instead of the bundled copy.
pub fn foster_graph_from_dir(dir: &Path, name: &str) -> Result<FosterGraph> {
    expected_order(name)?;
    let path = dir.join(format!("{name}.edges"));
    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    load(name, &text)
}
