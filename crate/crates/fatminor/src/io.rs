//! Model certificates on disk: the target graph, the branch sets keyed by
//! target vertex, the branch paths keyed by "u-v", and the fatness the
//! certificate claims.  Claims are never trusted; run the checkers.

use std::collections::BTreeMap;

use graph_core::Vertex;
use serde_json::{json, Value};

use crate::{FatError, FatModel, Result};

pub fn model_to_json(m: &FatModel, claimed_fatness: u32) -> String {
    let target: Value =
        serde_json::from_str(&graph_core::io::to_json(&m.target)).expect("graph json");
    let sets: BTreeMap<String, &Vec<Vertex>> = m
        .branch_sets
        .iter()
        .enumerate()
        .map(|(x, s)| (x.to_string(), s))
        .collect();
    let paths: BTreeMap<String, &Vec<Vertex>> = m
        .branch_paths
        .iter()
        .map(|(&(x, y), p)| (format!("{x}-{y}"), p))
        .collect();
    let doc = json!({
        "target": target,
        "branch_sets": sets,
        "branch_paths": paths,
        "claimed_fatness": claimed_fatness,
    });
    serde_json::to_string_pretty(&doc).expect("model json")
}

pub fn model_from_json(s: &str) -> Result<(FatModel, u32)> {
    let doc: Value = serde_json::from_str(s).map_err(|e| FatError::Io(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| FatError::Io("model file is not a json object".into()))?;
    let target = graph_core::io::from_json(
        &serde_json::to_string(
            obj.get("target")
                .ok_or_else(|| FatError::Io("missing field: target".into()))?,
        )
        .expect("reserialize"),
    )
    .map_err(|e| FatError::Io(e.to_string()))?;

    let mut m = FatModel::skeleton(target);

    let sets = obj
        .get("branch_sets")
        .and_then(Value::as_object)
        .ok_or_else(|| FatError::Io("missing field: branch_sets".into()))?;
    for (key, val) in sets {
        let x: usize = key
            .parse()
            .map_err(|_| FatError::Io(format!("bad branch set key: {key}")))?;
        if x >= m.branch_sets.len() {
            return Err(FatError::Io(format!(
                "branch set key {x} outside the target"
            )));
        }
        m.branch_sets[x] = vertex_list(val, "branch set")?;
    }

    let paths = obj
        .get("branch_paths")
        .and_then(Value::as_object)
        .ok_or_else(|| FatError::Io("missing field: branch_paths".into()))?;
    for (key, val) in paths {
        let (x, y) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<Vertex>().ok()?, b.parse::<Vertex>().ok()?)))
            .ok_or_else(|| FatError::Io(format!("bad branch path key: {key}")))?;
        m.branch_paths
            .insert((x.min(y), x.max(y)), vertex_list(val, "branch path")?);
    }

    let claimed = obj
        .get("claimed_fatness")
        .and_then(Value::as_u64)
        .ok_or_else(|| FatError::Io("missing field: claimed_fatness".into()))?;
    Ok((m, claimed as u32))
}

fn vertex_list(val: &Value, what: &str) -> Result<Vec<Vertex>> {
    val.as_array()
        .ok_or_else(|| FatError::Io(format!("{what} is not an array")))?
        .iter()
        .map(|v| {
            v.as_u64()
                .map(|v| v as Vertex)
                .ok_or_else(|| FatError::Io(format!("{what} contains a non-integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::Graph;

    #[test]
    fn model_json_round_trips() {
        let mut m = FatModel::skeleton(Graph::complete(2));
        m.branch_sets[0] = vec![0];
        m.branch_sets[1] = vec![3];
        m.branch_paths.insert((0, 1), vec![0, 1, 2, 3]);
        let s = model_to_json(&m, 1);
        let (back, k) = model_from_json(&s).unwrap();
        assert_eq!(k, 1);
        assert_eq!(back.branch_sets, m.branch_sets);
        assert_eq!(back.branch_paths, m.branch_paths);
        assert_eq!(back.target.edges(), m.target.edges());
    }

    #[test]
    fn bad_documents_are_rejected() {
        assert!(model_from_json("[]").is_err());
        assert!(model_from_json("{\"target\": 3}").is_err());
    }
}
