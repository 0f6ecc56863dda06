//! The octahedron, and exact minor containment for small hosts.

use std::collections::HashSet;

use graph_core::{Graph, Vertex};

use crate::{FatError, Result};

/// K_{2,2,2}: vertices 0..6 carry labels "1".."6"; two vertices are adjacent
/// unless their labels sum to 7.  The three antipodal pairs are (1,6), (2,5),
/// (3,4); the graph is 4-regular with 12 edges.
pub fn octahedron() -> Graph {
    let mut g = Graph::new(6);
    for u in 0..6u32 {
        g.set_label(u, format!("{}", u + 1));
        for v in (u + 1)..6 {
            if (u + 1) + (v + 1) != 7 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A perfect matching between {v0, v1} and {u0, u1} along edges of `g`,
/// preferring the straight pairing.  The four vertices must be distinct.
/// In the octahedron every choice of two disjoint pairs admits one: at most
/// one of the four candidate edges is antipodal per pairing, and both
/// pairings cannot each lose an edge to the same antipodal pair.
pub fn matching_between_pairs(
    g: &Graph,
    v0: Vertex,
    v1: Vertex,
    u0: Vertex,
    u1: Vertex,
) -> Result<[(Vertex, Vertex); 2]> {
    let all = [v0, v1, u0, u1];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if all[i] == all[j] {
                return Err(FatError::Unsupported(format!(
                    "matching endpoints must be distinct, got {v0}, {v1}, {u0}, {u1}"
                )));
            }
        }
    }
    if g.has_edge(v0, u0) && g.has_edge(v1, u1) {
        return Ok([(v0, u0), (v1, u1)]);
    }
    if g.has_edge(v0, u1) && g.has_edge(v1, u0) {
        return Ok([(v0, u1), (v1, u0)]);
    }
    Err(FatError::Unsupported(format!(
        "no matching between ({v0}, {v1}) and ({u0}, {u1})"
    )))
}

pub const DEFAULT_MINOR_CAP: usize = 16;

/// Is `j` a minor of `host`?  Exact backtracking over branch set growth;
/// only meant for small hosts, hence the cap.
pub fn minor_of(j: &Graph, host: &Graph) -> Result<bool> {
    minor_of_with_cap(j, host, DEFAULT_MINOR_CAP)
}

pub fn minor_of_with_cap(j: &Graph, host: &Graph, cap: usize) -> Result<bool> {
    if host.n() > cap {
        return Err(FatError::Unsupported(format!(
            "exact minor search on {} host vertices exceeds the cap of {cap}",
            host.n()
        )));
    }
    if j.n() == 0 {
        return Ok(true);
    }
    if j.n() > host.n() || j.m() > host.m() {
        return Ok(false);
    }

    let mut st = MinorSearch {
        j,
        host,
        owner: vec![FREE; host.n()],
        seen: HashSet::new(),
    };
    Ok(st.seed(0))
}

const FREE: u8 = u8::MAX;

struct MinorSearch<'a> {
    j: &'a Graph,
    host: &'a Graph,
    /// owner[w] = target vertex whose branch set contains host vertex w.
    owner: Vec<u8>,
    seen: HashSet<Vec<u8>>,
}

impl MinorSearch<'_> {
    /// Choose one seed host vertex per target vertex, in target order.
    fn seed(&mut self, x: usize) -> bool {
        if x == self.j.n() {
            return self.grow();
        }
        for w in 0..self.host.n() {
            if self.owner[w] == FREE {
                self.owner[w] = x as u8;
                if self.seed(x + 1) {
                    return true;
                }
                self.owner[w] = FREE;
            }
        }
        false
    }

    fn realized(&self, x: Vertex, y: Vertex) -> bool {
        for w in 0..self.host.n() {
            if self.owner[w] != x as u8 {
                continue;
            }
            for &z in self.host.neighbors(w as Vertex) {
                if self.owner[z as usize] == y as u8 {
                    return true;
                }
            }
        }
        false
    }

    /// Branch sets only ever grow, so every state is visited at most once
    /// and exhaustion proves there is no model extending the current seeds.
    fn grow(&mut self) -> bool {
        let pending = self
            .j
            .edges()
            .into_iter()
            .find(|&(x, y)| !self.realized(x, y));
        let (x, y) = match pending {
            None => return true,
            Some(e) => e,
        };
        if !self.seen.insert(self.owner.clone()) {
            return false;
        }
        // The first missing edge can only appear by enlarging one of its two
        // branch sets, so branching on those free neighbours is exhaustive.
        for side in [x, y] {
            for w in 0..self.host.n() {
                if self.owner[w] != side as u8 {
                    continue;
                }
                for &z in self.host.neighbors(w as Vertex) {
                    if self.owner[z as usize] == FREE {
                        self.owner[z as usize] = side as u8;
                        if self.grow() {
                            return true;
                        }
                        self.owner[z as usize] = FREE;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_is_the_4_regular_6_vertex_graph() {
        let o = octahedron();
        assert_eq!(o.n(), 6);
        assert_eq!(o.m(), 12);
        for v in o.vertices() {
            assert_eq!(o.degree(v), 4);
        }
        // Antipodal pairs by label.
        assert!(!o.has_edge(0, 5));
        assert!(!o.has_edge(1, 4));
        assert!(!o.has_edge(2, 3));
        assert_eq!(o.label(0), Some("1"));
        assert_eq!(o.label(5), Some("6"));
    }

    #[test]
    fn every_disjoint_pair_of_pairs_has_a_matching() {
        let o = octahedron();
        let mut count = 0;
        for v0 in 0..6 {
            for v1 in 0..6 {
                for u0 in 0..6 {
                    for u1 in 0..6 {
                        let vs = [v0, v1, u0, u1];
                        let mut distinct = true;
                        for i in 0..4 {
                            for j in (i + 1)..4 {
                                distinct &= vs[i] != vs[j];
                            }
                        }
                        if !distinct {
                            assert!(matching_between_pairs(&o, v0, v1, u0, u1).is_err());
                            continue;
                        }
                        count += 1;
                        let m = matching_between_pairs(&o, v0, v1, u0, u1).unwrap();
                        for (a, b) in m {
                            assert!(o.has_edge(a, b));
                        }
                        assert_ne!(m[0].0, m[1].0);
                        assert_ne!(m[0].1, m[1].1);
                    }
                }
            }
        }
        assert_eq!(count, 360);
    }

    #[test]
    fn minor_verdicts_on_known_graphs() {
        let k4 = Graph::complete(4);
        let k5 = Graph::complete(5);
        let c6 = Graph::cycle(6);
        let o = octahedron();

        assert!(minor_of(&k4, &k4).unwrap());
        assert!(minor_of(&c6, &o).unwrap());
        assert!(minor_of(&k4, &o).unwrap());
        // The octahedron has no K5 minor (it is planar and K5 is not).
        assert!(!minor_of(&k5, &o).unwrap());
        // Q3 has 12 edges on 8 vertices, so 6 branch sets spend at least 2
        // of them internally, leaving at most 10 for the 12 octahedron edges.
        let q3 = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert!(minor_of(&k4, &q3).unwrap());
        assert!(!minor_of(&k5, &q3).unwrap());
        assert!(!minor_of(&o, &q3).unwrap());

        // Edgeless targets only need enough vertices.
        assert!(minor_of(&Graph::new(3), &Graph::path_graph(3)).unwrap());
        assert!(!minor_of(&Graph::new(4), &Graph::path_graph(3)).unwrap());

        // Cap is enforced.
        assert!(matches!(
            minor_of(&k4, &Graph::path_graph(40)),
            Err(FatError::Unsupported(_))
        ));
    }
}
