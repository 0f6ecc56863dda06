//! Fat minor models and their verification.
//!
//! A model of a target graph `J` in a host graph `G` assigns to every vertex
//! of `J` a connected branch set in `G` and to every edge of `J` a branch path
//! between the two corresponding sets.  Branch sets are pairwise disjoint and
//! branch paths are internally disjoint from each other and from every branch
//! set.  The model is `K`-fat when every pair of its parts (sets and paths)
//! that is not forced to touch, namely every pair except a path and the sets
//! at its own two ends, lies at distance at least `K` in the host.  A 0-fat
//! model is exactly a minor model in the classical sense.
//!
//! The checkers here are the ground truth for everything else in this crate:
//! the explicit builders validate their output against [`check_model`] and
//! [`check_fatness`] before returning, and [`search::search_fat_model`]
//! re-validates any model it claims to have found.

use std::collections::BTreeMap;
use std::fmt;

use graph_core::{Dist, Graph, GraphError, Vertex};
use serde::{Deserialize, Serialize};

pub mod builders;
pub mod io;
pub mod minor;
pub mod search;

pub use minor::{matching_between_pairs, minor_of, minor_of_with_cap, octahedron};
pub use search::{search_fat_model, SearchOutcome};

#[derive(Debug, thiserror::Error)]
pub enum FatError {
    #[error("branch set missing for target vertex {0}")]
    MissingBranchSet(Vertex),
    #[error("branch path missing for target edge {0}-{1}")]
    MissingBranchPath(Vertex, Vertex),
    #[error("branch path supplied for non-edge {0}-{1}")]
    ExtraBranchPath(Vertex, Vertex),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("insufficient fatness")]
    InsufficientFatness,
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("search budget exhausted")]
    Budget,
    #[error("model file: {0}")]
    Io(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Trigon(#[from] trigon::TrigonError),
}

pub type Result<T> = std::result::Result<T, FatError>;

/// A (candidate) fat minor model.  `branch_sets[x]` is the branch set of
/// target vertex `x`; `branch_paths` is keyed by target edges as ordered
/// pairs `(min, max)` and stores the full vertex sequence of each path.
///
/// The struct itself enforces nothing; run [`check_model`] against a host.
#[derive(Clone)]
pub struct FatModel {
    pub target: Graph,
    pub branch_sets: Vec<Vec<Vertex>>,
    pub branch_paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl fmt::Debug for FatModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FatModel(target n={} m={}, sets={}, paths={})",
            self.target.n(),
            self.target.m(),
            self.branch_sets.len(),
            self.branch_paths.len()
        )
    }
}

impl FatModel {
    /// Empty skeleton for a target: one empty set per vertex, no paths.
    pub fn skeleton(target: Graph) -> Self {
        let n = target.n();
        FatModel {
            target,
            branch_sets: vec![Vec::new(); n],
            branch_paths: BTreeMap::new(),
        }
    }

    pub fn set(&self, x: Vertex) -> &[Vertex] {
        &self.branch_sets[x as usize]
    }

    pub fn path(&self, x: Vertex, y: Vertex) -> Option<&[Vertex]> {
        let key = (x.min(y), x.max(y));
        self.branch_paths.get(&key).map(|p| p.as_slice())
    }

    /// All vertices used by the model, sorted and deduplicated.
    pub fn support(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.branch_sets.iter().flatten().copied().collect();
        all.extend(self.branch_paths.values().flatten().copied());
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// One part of a model: a branch set or a branch path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartId {
    Set(Vertex),
    Path(Vertex, Vertex),
}

impl fmt::Display for PartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartId::Set(x) => write!(f, "set({x})"),
            PartId::Path(x, y) => write!(f, "path({x}-{y})"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelReport {
    pub ok: bool,
    /// First violation in a fixed deterministic order, if any.
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FatnessReport {
    /// Largest `K` for which the model is `K`-fat; infinite when no pair of
    /// parts constrains it.
    pub fat_to: Dist,
    /// A pair of parts realising `fat_to`, present iff `fat_to` is below the
    /// requested fatness.
    pub violation: Option<(PartId, PartId, Dist)>,
}

fn sorted_dedup(v: &[Vertex]) -> Vec<Vertex> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Checks the two map domains and all vertex ids; these are hard errors, not
/// recorded violations, because the model does not even parse as a candidate.
fn check_shape(host: &Graph, m: &FatModel) -> Result<()> {
    if m.branch_sets.len() < m.target.n() {
        return Err(FatError::MissingBranchSet(m.branch_sets.len() as Vertex));
    }
    if m.branch_sets.len() > m.target.n() {
        return Err(FatError::InvalidModel(format!(
            "{} branch sets for a target on {} vertices",
            m.branch_sets.len(),
            m.target.n()
        )));
    }
    for (x, y) in m.target.edges() {
        if !m.branch_paths.contains_key(&(x, y)) {
            return Err(FatError::MissingBranchPath(x, y));
        }
    }
    for &(x, y) in m.branch_paths.keys() {
        if x >= y || !m.target.has_edge(x, y) {
            return Err(FatError::ExtraBranchPath(x, y));
        }
    }
    for set in &m.branch_sets {
        for &v in set {
            host.check_vertex(v)?;
        }
    }
    for path in m.branch_paths.values() {
        for &v in path {
            host.check_vertex(v)?;
        }
    }
    Ok(())
}

/// Validates a candidate model against a host graph.  Violations are checked
/// in a fixed order (sets by target vertex, then set pairs, then paths by
/// target edge, then path pairs) and the first one found is reported.
pub fn check_model(host: &Graph, m: &FatModel) -> Result<ModelReport> {
    check_shape(host, m)?;

    let fail = |msg: String| {
        Ok(ModelReport {
            ok: false,
            violation: Some(msg),
        })
    };

    let sets: Vec<Vec<Vertex>> = m.branch_sets.iter().map(|s| sorted_dedup(s)).collect();
    for (x, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return fail(format!("branch set of {x} is empty"));
        }
        if !host.is_connected(set)? {
            return fail(format!("branch set of {x} is not connected"));
        }
    }
    for x in 0..sets.len() {
        for y in (x + 1)..sets.len() {
            if let Some(v) = intersect_first(&sets[x], &sets[y]) {
                return fail(format!("branch sets of {x} and {y} share vertex {v}"));
            }
        }
    }

    let keys = m.target.edges();
    let in_set = |x: usize, v: Vertex| sets[x].binary_search(&v).is_ok();
    for &(x, y) in &keys {
        let p = &m.branch_paths[&(x, y)];
        if p.is_empty() {
            return fail(format!("branch path {x}-{y} is empty"));
        }
        if sorted_dedup(p).len() != p.len() {
            return fail(format!("branch path {x}-{y} repeats a vertex"));
        }
        for w in p.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return fail(format!(
                    "branch path {x}-{y} uses non-edge {}-{}",
                    w[0], w[1]
                ));
            }
        }
        let (a, b) = (p[0], p[p.len() - 1]);
        let straight = in_set(x as usize, a) && in_set(y as usize, b);
        let flipped = in_set(y as usize, a) && in_set(x as usize, b);
        if p.len() == 1 {
            // A single vertex cannot lie in two disjoint branch sets.
            return fail(format!("branch path {x}-{y} has a single vertex"));
        }
        if !straight && !flipped {
            return fail(format!(
                "branch path {x}-{y} does not run between the two branch sets"
            ));
        }
        for &v in &p[1..p.len() - 1] {
            for (z, set) in sets.iter().enumerate() {
                if set.binary_search(&v).is_ok() {
                    return fail(format!(
                        "branch path {x}-{y} passes through branch set of {z} at {v}"
                    ));
                }
            }
        }
        // Endpoints may only touch the two sets they connect.
        for &v in [a, b].iter() {
            for (z, set) in sets.iter().enumerate() {
                if z != x as usize && z != y as usize && set.binary_search(&v).is_ok() {
                    return fail(format!(
                        "branch path {x}-{y} ends inside branch set of {z}"
                    ));
                }
            }
        }
    }
    for i in 0..keys.len() {
        for j in (i + 1)..keys.len() {
            let (p, q) = (&m.branch_paths[&keys[i]], &m.branch_paths[&keys[j]]);
            let qset = sorted_dedup(q);
            for &v in &p[1..p.len() - 1] {
                if qset.binary_search(&v).is_ok() {
                    return fail(format!(
                        "branch paths {}-{} and {}-{} meet internally at {v}",
                        keys[i].0, keys[i].1, keys[j].0, keys[j].1
                    ));
                }
            }
            let pset = sorted_dedup(p);
            for &v in &q[1..q.len() - 1] {
                if pset.binary_search(&v).is_ok() {
                    return fail(format!(
                        "branch paths {}-{} and {}-{} meet internally at {v}",
                        keys[i].0, keys[i].1, keys[j].0, keys[j].1
                    ));
                }
            }
        }
    }

    Ok(ModelReport {
        ok: true,
        violation: None,
    })
}

fn intersect_first(a: &[Vertex], b: &[Vertex]) -> Option<Vertex> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// All parts of a model in the deterministic order used by the fatness
/// checker: sets by target vertex, then paths by target edge.
pub fn parts(m: &FatModel) -> Vec<(PartId, Vec<Vertex>)> {
    let mut out = Vec::new();
    for (x, set) in m.branch_sets.iter().enumerate() {
        out.push((PartId::Set(x as Vertex), sorted_dedup(set)));
    }
    for (&(x, y), p) in &m.branch_paths {
        out.push((PartId::Path(x, y), sorted_dedup(p)));
    }
    out
}

/// A branch path is allowed to touch the branch sets at its own two ends;
/// every other pair of parts must keep its distance.
fn exempt(a: PartId, b: PartId) -> bool {
    match (a, b) {
        (PartId::Set(z), PartId::Path(x, y)) | (PartId::Path(x, y), PartId::Set(z)) => {
            z == x || z == y
        }
        _ => false,
    }
}

/// Measures how fat a valid model actually is.  Errors if the model is not
/// valid to begin with.  The returned report carries a violating pair of
/// parts exactly when the model falls short of the requested fatness.
pub fn check_fatness(host: &Graph, m: &FatModel, k: u32) -> Result<FatnessReport> {
    let report = check_model(host, m)?;
    if !report.ok {
        return Err(FatError::InvalidModel(report.violation.unwrap()));
    }
    let parts = parts(m);
    let mut fat_to = Dist::Infinite;
    let mut worst = None;
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            if exempt(parts[i].0, parts[j].0) {
                continue;
            }
            let d = host.set_distance(&parts[i].1, &parts[j].1)?;
            if d < fat_to {
                fat_to = d;
                worst = Some((parts[i].0, parts[j].0, d));
            }
        }
    }
    let violation = match fat_to {
        Dist::Finite(f) if f < k => worst,
        _ => None,
    };
    Ok(FatnessReport { fat_to, violation })
}

/// Grows every branch set to its radius-`t` ball and trims every branch path
/// to a shortest ball-to-ball stretch.  On a `(2t+1)`-fat input the result is
/// a valid model again; if the balls collide the model cannot absorb the
/// growth and the error is `insufficient fatness`.
pub fn fatten(host: &Graph, m: &FatModel, t: u32) -> Result<FatModel> {
    let report = check_model(host, m)?;
    if !report.ok {
        return Err(FatError::InvalidModel(report.violation.unwrap()));
    }
    if t == 0 {
        return Ok(m.clone());
    }
    let mut out = FatModel::skeleton(m.target.clone());
    for (x, set) in m.branch_sets.iter().enumerate() {
        out.branch_sets[x] = host.ball(set, t)?;
    }
    for (&(x, y), p) in &m.branch_paths {
        // Orient the stored path from the x side.
        let seq: Vec<Vertex> = {
            let first_in_x = m.branch_sets[x as usize].contains(&p[0]);
            if first_in_x {
                p.clone()
            } else {
                p.iter().rev().copied().collect()
            }
        };
        let bx = &out.branch_sets[x as usize];
        let by = &out.branch_sets[y as usize];
        // Last exit from the grown x-ball, first entry into the grown y-ball
        // after it.  Everything strictly between avoids both balls.
        let i = seq
            .iter()
            .rposition(|v| bx.binary_search(v).is_ok())
            .expect("path endpoint lies in its own grown set");
        let j = match seq[i..].iter().position(|v| by.binary_search(v).is_ok()) {
            Some(off) => i + off,
            None => return Err(FatError::InsufficientFatness),
        };
        out.branch_paths.insert((x, y), seq[i..=j].to_vec());
    }
    let report = check_model(host, &out)?;
    if !report.ok {
        return Err(FatError::InsufficientFatness);
    }
    Ok(out)
}
