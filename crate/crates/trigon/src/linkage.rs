//! Linkages: pairs of disjoint paths between the source pair SS and the
//! target pair TT of a trigon, their nested/crossing classification, the
//! restriction of a root-avoiding linkage to the two child trigons, and the
//! two-path dichotomy (any two SS-TT paths are either close to each other or
//! one of them is the tree path).

use graph_core::{Dist, Path, Vertex};

use crate::{Address, Adhesion, Result, TrigonError, TrigonGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinkageClass {
    /// One path joins SO with TO, the other SI with TI.
    Nested,
    /// One path joins SO with TI, the other SI with TO.
    Crossing,
    /// Not a linkage: paths overlap, or endpoints are not an SS/TT pairing,
    /// or a path re-enters SS or TT away from its ends.
    Invalid,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dichotomy {
    /// The two paths come within distance 2 of each other.
    Close,
    /// One of the paths is the unique tree path from SO to TO.
    TreePathCase,
    /// Neither holds; never observed, and asserted absent in tests.
    Violation,
}

/// How a single path meets the four corner vertices: exactly one SS vertex
/// and one TT vertex, both of them endpoints.
fn corner_profile(adh: &Adhesion, p: &Path) -> Option<(Vertex, Vertex)> {
    let ss: Vec<Vertex> = adh.ss().into_iter().filter(|&v| p.contains(v)).collect();
    let tt: Vec<Vertex> = adh.tt().into_iter().filter(|&v| p.contains(v)).collect();
    if ss.len() != 1 || tt.len() != 1 {
        return None;
    }
    let (s, t) = (ss[0], tt[0]);
    let ends = [p.first(), p.last()];
    if !(ends.contains(&s) && ends.contains(&t)) {
        return None;
    }
    Some((s, t))
}

/// Classify a pair of paths relative to a trigon's adhesion.
pub fn classify_linkage(adh: &Adhesion, p: &Path, q: &Path) -> LinkageClass {
    let Some((ps, pt)) = corner_profile(adh, p) else {
        return LinkageClass::Invalid;
    };
    let Some((qs, qt)) = corner_profile(adh, q) else {
        return LinkageClass::Invalid;
    };
    if p.vertices().iter().any(|v| q.contains(*v)) {
        return LinkageClass::Invalid;
    }
    if ps == qs || pt == qt {
        // Disjointness makes this unreachable, but keep the check explicit.
        return LinkageClass::Invalid;
    }
    let so_path_target = if ps == adh.so { pt } else { qt };
    if so_path_target == adh.ti {
        LinkageClass::Crossing
    } else {
        LinkageClass::Nested
    }
}

impl TrigonGraph {
    /// The canonical nested linkage: the tree path SO..TO together with the
    /// bottom path SI..TI.  The two stay at distance exactly d.
    pub fn nested_linkage(&self) -> (Path, Path) {
        let tree = self.tree_path(self.so(), self.to()).expect("tree path exists");
        let mid = self.bottom_walk(2, self.n_junctions() - 1);
        debug_assert_eq!(mid[0], self.si());
        let bottom = Path::new(self.graph(), mid).expect("bottom subwalk is a path");
        (tree, bottom)
    }

    /// A crossing linkage avoiding the top root, defined for k >= 2: climb
    /// the source half's tree, descend to its TO junction and follow the
    /// bottom to TI; the partner runs along the bottom to the source half's
    /// TI junction and climbs the target half's tree towards TO.
    pub fn crossing_linkage(&self) -> Result<(Path, Path)> {
        if self.k() < 2 {
            return Err(TrigonError::Linkage(
                "crossing linkage needs height at least 2".into(),
            ));
        }
        let mid = self.n_junctions() / 2;
        let mut p = self
            .tree_path(self.so(), self.junction(mid + 1))?
            .vertices()
            .to_vec();
        p.extend(self.bottom_walk(mid + 1, self.n_junctions() - 1).into_iter().skip(1));
        let mut q = self.bottom_walk(2, mid);
        q.extend(
            self.tree_path(self.junction(mid), self.to())?
                .vertices()
                .iter()
                .skip(1),
        );
        Ok((Path::new(self.graph(), p)?, Path::new(self.graph(), q)?))
    }

    /// Restrict a linkage of the trigon at `a` that avoids that trigon's
    /// root to the two child trigons, yielding one linkage of each child.
    #[allow(clippy::type_complexity)]
    pub fn child_linkages(
        &self,
        a: &Address,
        p: &Path,
        q: &Path,
    ) -> Result<((Path, Path), (Path, Path))> {
        let adh = self.adhesion(a)?;
        if self.height_of(a)? < 2 {
            return Err(TrigonError::Linkage(
                "leaf trigons have no child trigons".into(),
            ));
        }
        if p.contains(adh.r) || q.contains(adh.r) {
            return Err(TrigonError::Linkage(
                "linkage must avoid the trigon's root".into(),
            ));
        }
        if classify_linkage(&adh, p, q) == LinkageClass::Invalid {
            return Err(TrigonError::Linkage(
                "input paths do not form a linkage of the trigon".into(),
            ));
        }
        let mut halves = Vec::with_capacity(2);
        for bit in 0..2 {
            let child = a.child(bit)?;
            let verts = self.trigon_vertices(&child)?;
            let inside = |v: Vertex| verts.binary_search(&v).is_ok();
            let mut restricted = Vec::with_capacity(2);
            for path in [p, q] {
                let seq = path.vertices();
                let hit: Vec<usize> =
                    (0..seq.len()).filter(|&i| inside(seq[i])).collect();
                if hit.is_empty() || hit[hit.len() - 1] - hit[0] + 1 != hit.len() {
                    return Err(TrigonError::Linkage(format!(
                        "restriction to child {child} is not a path"
                    )));
                }
                restricted.push(Path::new(
                    self.graph(),
                    seq[hit[0]..=hit[hit.len() - 1]].to_vec(),
                )?);
            }
            let ca = self.adhesion(&child)?;
            if classify_linkage(&ca, &restricted[0], &restricted[1]) == LinkageClass::Invalid {
                return Err(TrigonError::Linkage(format!(
                    "restriction to child {child} is not a linkage"
                )));
            }
            halves.push((restricted.remove(0), restricted.remove(0)));
        }
        let second = halves.pop().expect("two children");
        let first = halves.pop().expect("two children");
        Ok((first, second))
    }

    /// The dichotomy for two (not necessarily disjoint) SS-TT paths: they
    /// are within distance 2 of each other, or one of them is the tree path
    /// from SO to TO.  Endpoint orientation is free; inputs whose ends are
    /// not one SS and one TT vertex are rejected.
    pub fn two_path_dichotomy(&self, p: &Path, q: &Path) -> Result<Dichotomy> {
        let ss = [self.so(), self.si()];
        let tt = [self.ti(), self.to()];
        for path in [p, q] {
            let ends = [path.first(), path.last()];
            let ok = (ss.contains(&ends[0]) && tt.contains(&ends[1]))
                || (ss.contains(&ends[1]) && tt.contains(&ends[0]));
            if !ok {
                return Err(TrigonError::Linkage(
                    "input is not an SS-TT path".into(),
                ));
            }
        }
        if self.set_distance(p.vertices(), q.vertices()) <= Dist::Finite(2) {
            return Ok(Dichotomy::Close);
        }
        let tree = self.tree_path(self.so(), self.to())?;
        let mut tree_set: Vec<Vertex> = tree.vertices().to_vec();
        tree_set.sort_unstable();
        for path in [p, q] {
            let mut set: Vec<Vertex> = path.vertices().to_vec();
            set.sort_unstable();
            if set == tree_set {
                return Ok(Dichotomy::TreePathCase);
            }
        }
        Ok(Dichotomy::Violation)
    }
}
