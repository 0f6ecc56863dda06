//! JSON serialization of a trigon graph.  The file records (k, d), the graph
//! itself and the full adhesion registry; loading rebuilds from (k, d) and
//! verifies the stored graph matches, so a loaded graph is always a genuine
//! member of the family.

use serde::{Deserialize, Serialize};

use crate::{build_with_cap, Adhesion, Result, TrigonError, TrigonGraph, DEFAULT_VERTEX_CAP};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TrigonJson {
    format: u32,
    k: u32,
    d: u32,
    graph: serde_json::Value,
    registry: std::collections::BTreeMap<String, Adhesion>,
}

pub fn to_json(t: &TrigonGraph) -> String {
    let graph: serde_json::Value =
        serde_json::from_str(&graph_core::io::to_json(t.graph())).expect("graph serializes");
    let registry = t
        .registry()
        .into_iter()
        .map(|(a, adh)| (a.as_string(), adh))
        .collect();
    let doc = TrigonJson {
        format: FORMAT_VERSION,
        k: t.k(),
        d: t.d(),
        graph,
        registry,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn from_json(s: &str) -> Result<TrigonGraph> {
    from_json_with_cap(s, DEFAULT_VERTEX_CAP)
}

pub fn from_json_with_cap(s: &str, cap: u64) -> Result<TrigonGraph> {
    let doc: TrigonJson = serde_json::from_str(s)
        .map_err(|e| TrigonError::Io(format!("malformed trigon file: {e}")))?;
    if doc.format != FORMAT_VERSION {
        return Err(TrigonError::Io(format!(
            "unsupported format version {}",
            doc.format
        )));
    }
    let t = build_with_cap(doc.k, doc.d, cap)?;
    let rebuilt: serde_json::Value =
        serde_json::from_str(&graph_core::io::to_json(t.graph())).expect("graph serializes");
    if rebuilt != doc.graph {
        return Err(TrigonError::Io(
            "stored graph differs from the one rebuilt from (k, d)".into(),
        ));
    }
    Ok(t)
}
