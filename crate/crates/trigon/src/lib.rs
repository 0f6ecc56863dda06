//! The recursive graph family G_{k,d} ("trigon graphs") together with the
//! structural machinery the rest of the workspace is built on: addressing of
//! nested trigons, adhesion records, the bottom path and the subdivided tree,
//! the flip symmetry, and canonical linkages.
//!
//! G_{1,d} is a 5-cycle with every edge subdivided into a path of length d
//! (so 5d vertices).  G_{k,d} glues two copies of G_{k-1,d} along a shared
//! subdivided edge and joins their apex roots to a fresh root by plain edges.
//! Instead of building that recursion literally we lay the graph out
//! directly: a single subdivided "bottom" path through junctions
//! J_1..J_{2^k+2}, one leaf root above every other junction pair with two
//! subdivided legs, and a plain binary tree of higher roots on top.  The
//! recursive gluing is kept as a test oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use graph_core::{Dist, Graph, GraphError, Path, Vertex};

mod io;
mod linkage;

pub use io::{from_json, from_json_with_cap, to_json};
pub use linkage::{classify_linkage, Dichotomy, LinkageClass};

/// Vertex budget used by [`build`]; `build_with_cap` lifts it.
pub const DEFAULT_VERTEX_CAP: u64 = 1 << 22;

#[derive(Debug, thiserror::Error)]
pub enum TrigonError {
    #[error("k and d must both be at least 1")]
    ZeroParam,
    #[error("graph would have {0} vertices, above the cap of {1}")]
    TooLarge(u128, u64),
    #[error("invalid trigon address {0:?}: {1}")]
    BadAddress(String, String),
    #[error("no tree path between vertices {0} and {1}")]
    NoTreePath(Vertex, Vertex),
    #[error("tree path endpoints must not be subdivision vertices")]
    SubdivisionEndpoint,
    #[error("linkage: {0}")]
    Linkage(String),
    #[error("trigon file: {0}")]
    Io(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, TrigonError>;

/// Address of a trigon inside G_{k,d}: a 0/1 string read root-to-leaf, where
/// 0 descends into the source half and 1 into the target half.  The empty
/// address is the whole graph.  Valid addresses have length at most k-1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Address {
    bits: Vec<u8>,
}

impl Address {
    pub fn root() -> Self {
        Address { bits: Vec::new() }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(TrigonError::BadAddress(
                format!("{bits:?}"),
                "bits must be 0 or 1".into(),
            ));
        }
        Ok(Address { bits: bits.to_vec() })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn child(&self, bit: u8) -> Result<Self> {
        let mut bits = self.bits.clone();
        bits.push(bit);
        Address::from_bits(&bits)
    }

    pub fn parent(&self) -> Option<Self> {
        if self.bits.is_empty() {
            return None;
        }
        Some(Address {
            bits: self.bits[..self.bits.len() - 1].to_vec(),
        })
    }

    /// 1-based rank among the trigons of the same height, left to right.
    pub fn index(&self) -> u64 {
        let mut v = 0u64;
        for &b in &self.bits {
            v = (v << 1) | b as u64;
        }
        v + 1
    }

    pub fn as_string(&self) -> String {
        self.bits.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            write!(f, "\u{03b5}")
        } else {
            write!(f, "{}", self.as_string())
        }
    }
}

impl FromStr for Address {
    type Err = TrigonError;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s == "\u{03b5}" {
            return Ok(Address::root());
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(TrigonError::BadAddress(
                        s.into(),
                        "addresses are strings over {0,1}".into(),
                    ))
                }
            }
        }
        Ok(Address { bits })
    }
}

/// The five adhesion vertices of a trigon.  SS = {so, si} faces the source
/// side, TT = {ti, to} the target side, and r is the trigon's root.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Adhesion {
    pub so: Vertex,
    pub si: Vertex,
    pub ti: Vertex,
    pub to: Vertex,
    pub r: Vertex,
}

impl Adhesion {
    pub fn ss(&self) -> [Vertex; 2] {
        [self.so, self.si]
    }

    pub fn tt(&self) -> [Vertex; 2] {
        [self.ti, self.to]
    }

    pub fn rtt(&self) -> [Vertex; 3] {
        [self.r, self.ti, self.to]
    }

    pub fn all(&self) -> [Vertex; 5] {
        [self.so, self.si, self.ti, self.to, self.r]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Structural role of a vertex.  `pos` fields are 0-based distances along the
/// subdivided edge, counted from the junction J_seg resp. from the leaf root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexKind {
    /// Junction J_m on the bottom path, 1-based.
    Junction { m: u64 },
    /// Interior vertex of the bottom segment between J_seg and J_{seg+1}.
    SegInterior { seg: u64, pos: u32 },
    /// Root at height h (leaf roots have h = 1), idx 1-based left to right.
    Root { h: u32, idx: u64 },
    /// Interior vertex of a leaf leg, `pos` steps below the leaf root.
    LegInterior { leaf: u64, side: Side, pos: u32 },
}

impl VertexKind {
    /// Subdivision vertices are the interiors of subdivided edges; they carry
    /// no structural label and are excluded from the tree B(G).
    pub fn is_subdivision(&self) -> bool {
        matches!(
            self,
            VertexKind::SegInterior { .. } | VertexKind::LegInterior { .. }
        )
    }
}

/// A built trigon graph with its structural tables.
pub struct TrigonGraph {
    k: u32,
    d: u32,
    g: Graph,
    junctions: Vec<Vertex>,
    /// seg_int[m-1] lists the interior of the bottom segment J_m..J_{m+1},
    /// ordered from J_m; each entry has d-1 vertices.
    seg_int: Vec<Vec<Vertex>>,
    /// leg_int[i-1][side] lists the interior of leaf i's leg, root first.
    leg_int: Vec<[Vec<Vertex>; 2]>,
    /// roots[h-1][idx-1], heights 1..=k.
    roots: Vec<Vec<Vertex>>,
    kind: Vec<VertexKind>,
    bottom: Path,
    tree: Vec<Vertex>,
}

impl fmt::Debug for TrigonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TrigonGraph(k={}, d={}, n={}, m={})",
            self.k,
            self.d,
            self.g.n(),
            self.g.m()
        )
    }
}

pub fn build(k: u32, d: u32) -> Result<TrigonGraph> {
    build_with_cap(k, d, DEFAULT_VERTEX_CAP)
}

pub fn build_with_cap(k: u32, d: u32, cap: u64) -> Result<TrigonGraph> {
    if k == 0 || d == 0 {
        return Err(TrigonError::ZeroParam);
    }
    if k >= 62 {
        return Err(TrigonError::TooLarge(u128::MAX, cap));
    }
    let n_pred = d as u128 * ((1u128 << (k + 1)) + 1);
    if n_pred > cap as u128 {
        return Err(TrigonError::TooLarge(n_pred, cap));
    }

    let n_junc = (1u64 << k) + 2;
    let n_leaves = 1u64 << (k - 1);
    let mut g = Graph::new(n_pred as usize);
    let mut kind = Vec::with_capacity(n_pred as usize);
    let mut next: Vertex = 0;
    let mut fresh = |kinds: &mut Vec<VertexKind>, vk: VertexKind| -> Vertex {
        let v = next;
        kinds.push(vk);
        next += 1;
        v
    };

    // Bottom path, left to right.
    let mut junctions = Vec::with_capacity(n_junc as usize);
    let mut seg_int = Vec::with_capacity(n_junc as usize - 1);
    junctions.push(fresh(&mut kind, VertexKind::Junction { m: 1 }));
    for m in 1..n_junc {
        let mut seg = Vec::with_capacity(d as usize - 1);
        for pos in 1..d {
            seg.push(fresh(&mut kind, VertexKind::SegInterior { seg: m, pos }));
        }
        let j = fresh(&mut kind, VertexKind::Junction { m: m + 1 });
        let mut prev = junctions[m as usize - 1];
        for &v in &seg {
            g.add_edge(prev, v)?;
            prev = v;
        }
        g.add_edge(prev, j)?;
        junctions.push(j);
        seg_int.push(seg);
    }

    // Leaf roots with their two subdivided legs.  Leaf i sits above the
    // junctions J_{2i-1} and J_{2i+2}; J_2 and J_{2^k+1} get no leg.
    let mut roots: Vec<Vec<Vertex>> = vec![Vec::new(); k as usize];
    let mut leg_int = Vec::with_capacity(n_leaves as usize);
    for i in 1..=n_leaves {
        let root = fresh(&mut kind, VertexKind::Root { h: 1, idx: i });
        roots[0].push(root);
        let mut legs: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
        for (slot, side, jm) in [(0, Side::Left, 2 * i - 1), (1, Side::Right, 2 * i + 2)] {
            let mut leg = Vec::with_capacity(d as usize - 1);
            for pos in 1..d {
                leg.push(fresh(&mut kind, VertexKind::LegInterior { leaf: i, side, pos }));
            }
            let mut prev = root;
            for &v in &leg {
                g.add_edge(prev, v)?;
                prev = v;
            }
            g.add_edge(prev, junctions[jm as usize - 1])?;
            legs[slot] = leg;
        }
        leg_int.push(legs);
    }

    // Higher roots: a plain (unsubdivided) binary tree over the leaf roots.
    for h in 2..=k {
        for idx in 1..=(1u64 << (k - h)) {
            let r = fresh(&mut kind, VertexKind::Root { h, idx });
            let below = h as usize - 2;
            g.add_edge(r, roots[below][(2 * idx - 2) as usize])?;
            g.add_edge(r, roots[below][(2 * idx - 1) as usize])?;
            roots[h as usize - 1].push(r);
        }
    }
    debug_assert_eq!(next as u128, n_pred);

    // Structural labels; the whole-graph adhesion overrides its five.
    for (m, &j) in junctions.iter().enumerate() {
        g.set_label(j, format!("J{}", m + 1));
    }
    for (h, level) in roots.iter().enumerate() {
        for (i, &r) in level.iter().enumerate() {
            g.set_label(r, format!("R{}.{}", h + 1, i + 1));
        }
    }
    g.set_label(junctions[0], "SO");
    g.set_label(junctions[1], "SI");
    g.set_label(junctions[n_junc as usize - 2], "TI");
    g.set_label(junctions[n_junc as usize - 1], "TO");
    g.set_label(roots[k as usize - 1][0], "R");

    let mut bottom = Vec::new();
    bottom.push(junctions[0]);
    for m in 1..n_junc {
        bottom.extend_from_slice(&seg_int[m as usize - 1]);
        bottom.push(junctions[m as usize]);
    }
    let bottom = Path::new(&g, bottom)?;
    let mut tree: Vec<Vertex> = kind
        .iter()
        .enumerate()
        .filter(|(_, vk)| !matches!(vk, VertexKind::SegInterior { .. }))
        .map(|(v, _)| v as Vertex)
        .collect();
    tree.sort_unstable();

    Ok(TrigonGraph {
        k,
        d,
        g,
        junctions,
        seg_int,
        leg_int,
        roots,
        kind,
        bottom,
        tree,
    })
}

impl TrigonGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn n_junctions(&self) -> u64 {
        (1 << self.k) + 2
    }

    pub fn n_leaves(&self) -> u64 {
        1 << (self.k - 1)
    }

    /// Junction J_m, 1-based from the source end.
    pub fn junction(&self, m: u64) -> Vertex {
        self.junctions[m as usize - 1]
    }

    /// Root at height h (leaf roots: h = 1), idx 1-based left to right.
    pub fn root(&self, h: u32, idx: u64) -> Vertex {
        self.roots[h as usize - 1][idx as usize - 1]
    }

    pub fn leaf_root(&self, i: u64) -> Vertex {
        self.root(1, i)
    }

    pub fn top_root(&self) -> Vertex {
        self.root(self.k, 1)
    }

    pub fn kind(&self, v: Vertex) -> VertexKind {
        self.kind[v as usize]
    }

    pub fn is_subdivision(&self, v: Vertex) -> bool {
        self.kind[v as usize].is_subdivision()
    }

    /// The junctions a leaf's legs attach to: (J_{2i-1}, J_{2i+2}).
    pub fn leaf_junctions(&self, i: u64) -> (u64, u64) {
        (2 * i - 1, 2 * i + 2)
    }

    /// Vertices of the bottom segment J_m..J_{m+1} inclusive, in order.
    pub fn bottom_segment(&self, m: u64) -> Vec<Vertex> {
        let mut out = vec![self.junction(m)];
        out.extend_from_slice(&self.seg_int[m as usize - 1]);
        out.push(self.junction(m + 1));
        out
    }

    /// Bottom walk from J_a to J_b inclusive (a <= b), in order.
    pub fn bottom_walk(&self, a: u64, b: u64) -> Vec<Vertex> {
        assert!(a <= b, "bottom_walk needs a <= b");
        let mut out = vec![self.junction(a)];
        for m in a..b {
            out.extend_from_slice(&self.seg_int[m as usize - 1]);
            out.push(self.junction(m + 1));
        }
        out
    }

    /// Leaf i's leg towards its left or right junction: root and junction
    /// included, ordered from the root down.
    pub fn leg(&self, i: u64, side: Side) -> Vec<Vertex> {
        let (jl, jr) = self.leaf_junctions(i);
        let (slot, jm) = match side {
            Side::Left => (0, jl),
            Side::Right => (1, jr),
        };
        let mut out = vec![self.leaf_root(i)];
        out.extend_from_slice(&self.leg_int[i as usize - 1][slot]);
        out.push(self.junction(jm));
        out
    }

    pub fn so(&self) -> Vertex {
        self.junction(1)
    }

    pub fn si(&self) -> Vertex {
        self.junction(2)
    }

    pub fn ti(&self) -> Vertex {
        self.junction(self.n_junctions() - 1)
    }

    pub fn to(&self) -> Vertex {
        self.junction(self.n_junctions())
    }

    pub fn validate_address(&self, a: &Address) -> Result<()> {
        if a.len() as u32 > self.k - 1 {
            return Err(TrigonError::BadAddress(
                a.as_string(),
                format!("length exceeds k-1 = {}", self.k - 1),
            ));
        }
        Ok(())
    }

    /// Height of the trigon at address `a` (the whole graph has height k).
    pub fn height_of(&self, a: &Address) -> Result<u32> {
        self.validate_address(a)?;
        Ok(self.k - a.len() as u32)
    }

    /// (height, 1-based index) coordinates of a trigon's root.
    pub fn root_coords(&self, a: &Address) -> Result<(u32, u64)> {
        let h = self.height_of(a)?;
        Ok((h, a.index()))
    }

    pub fn root_of(&self, a: &Address) -> Result<Vertex> {
        let (h, idx) = self.root_coords(a)?;
        Ok(self.root(h, idx))
    }

    /// Junction span of a trigon: its bottom runs J_start..J_end inclusive,
    /// with start = (idx-1)*2^h + 1 and end = idx*2^h + 2.
    pub fn junction_span(&self, a: &Address) -> Result<(u64, u64)> {
        let (h, idx) = self.root_coords(a)?;
        let start = (idx - 1) * (1 << h) + 1;
        Ok((start, idx * (1 << h) + 2))
    }

    pub fn adhesion(&self, a: &Address) -> Result<Adhesion> {
        let (h, idx) = self.root_coords(a)?;
        let (start, end) = self.junction_span(a)?;
        Ok(Adhesion {
            so: self.junction(start),
            si: self.junction(start + 1),
            ti: self.junction(end - 1),
            to: self.junction(end),
            r: self.root(h, idx),
        })
    }

    /// Adhesion records of every trigon, keyed by address.
    pub fn registry(&self) -> BTreeMap<Address, Adhesion> {
        let mut out = BTreeMap::new();
        let mut frontier = vec![Address::root()];
        while let Some(a) = frontier.pop() {
            out.insert(a.clone(), self.adhesion(&a).expect("address in range"));
            if (a.len() as u32) < self.k - 1 {
                frontier.push(a.child(0).expect("bit"));
                frontier.push(a.child(1).expect("bit"));
            }
        }
        out
    }

    /// Sorted vertex set of the trigon at `a`.
    pub fn trigon_vertices(&self, a: &Address) -> Result<Vec<Vertex>> {
        let (h, idx) = self.root_coords(a)?;
        let (start, end) = self.junction_span(a)?;
        let mut out = Vec::new();
        out.extend(self.bottom_walk(start, end));
        for hh in 1..=h {
            let step = 1u64 << (h - hh);
            for i in (idx - 1) * step + 1..=idx * step {
                out.push(self.root(hh, i));
            }
        }
        let leaf_lo = (idx - 1) * (1 << (h - 1)) + 1;
        let leaf_hi = idx * (1 << (h - 1));
        for i in leaf_lo..=leaf_hi {
            for slot in 0..2 {
                out.extend_from_slice(&self.leg_int[i as usize - 1][slot]);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Sorted vertex set of the exterior of the trigon at `a`: everything
    /// outside the trigon, plus its five adhesion vertices.
    pub fn exterior_vertices(&self, a: &Address) -> Result<Vec<Vertex>> {
        let inside = self.trigon_vertices(a)?;
        let adh = self.adhesion(a)?.all();
        let mut keep = vec![true; self.g.n()];
        for &v in &inside {
            keep[v as usize] = false;
        }
        for v in adh {
            keep[v as usize] = true;
        }
        Ok((0..self.g.n() as Vertex).filter(|&v| keep[v as usize]).collect())
    }

    /// The bottom path SO..TO through all junctions.
    pub fn bottom_path(&self) -> &Path {
        &self.bottom
    }

    /// Sorted vertex set of B(G): the graph minus the bottom's subdivision
    /// vertices.  It is a forest whose only nontrivial component is the
    /// subdivided tree over the junctions; SI and TI are isolated in it.
    pub fn tree_vertices(&self) -> &[Vertex] {
        &self.tree
    }

    /// The unique x-y path that is internally disjoint from the bottom path.
    /// Errors on subdivision-vertex endpoints and on pairs with no such path
    /// (e.g. from SI, which is isolated in B(G)).
    pub fn tree_path(&self, x: Vertex, y: Vertex) -> Result<Path> {
        self.g.check_vertex(x)?;
        self.g.check_vertex(y)?;
        if self.is_subdivision(x) || self.is_subdivision(y) {
            return Err(TrigonError::SubdivisionEndpoint);
        }
        if x == y {
            return Ok(Path::new(&self.g, vec![x])?);
        }
        // Internal vertices must avoid the bottom path entirely, so only
        // roots and leg interiors may appear between the endpoints.
        let allowed = |v: Vertex| {
            v == x
                || v == y
                || matches!(
                    self.kind[v as usize],
                    VertexKind::Root { .. } | VertexKind::LegInterior { .. }
                )
        };
        let mut parent: Vec<Option<Vertex>> = vec![None; self.g.n()];
        let mut seen = vec![false; self.g.n()];
        let mut queue = std::collections::VecDeque::new();
        seen[x as usize] = true;
        queue.push_back(x);
        while let Some(u) = queue.pop_front() {
            if u == y {
                break;
            }
            for &w in self.g.neighbors(u) {
                if !seen[w as usize] && allowed(w) {
                    seen[w as usize] = true;
                    parent[w as usize] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        if !seen[y as usize] {
            return Err(TrigonError::NoTreePath(x, y));
        }
        let mut seq = vec![y];
        let mut cur = y;
        while let Some(p) = parent[cur as usize] {
            seq.push(p);
            cur = p;
        }
        seq.reverse();
        Ok(Path::new(&self.g, seq)?)
    }

    /// The left-right mirror symmetry as a vertex permutation (an involutive
    /// automorphism fixing the top root and swapping SO with TO, SI with TI).
    pub fn flip(&self) -> Vec<Vertex> {
        let nj = self.n_junctions();
        let nl = self.n_leaves();
        let dd = self.d as usize;
        let mut perm = vec![0; self.g.n()];
        for (v, vk) in self.kind.iter().enumerate() {
            perm[v] = match *vk {
                VertexKind::Junction { m } => self.junction(nj + 1 - m),
                VertexKind::SegInterior { seg, pos } => {
                    self.seg_int[(nj - seg) as usize - 1][dd - 1 - pos as usize]
                }
                VertexKind::Root { h, idx } => self.root(h, (1 << (self.k - h)) + 1 - idx),
                VertexKind::LegInterior { leaf, side, pos } => {
                    let slot = match side {
                        Side::Left => 1,
                        Side::Right => 0,
                    };
                    self.leg_int[(nl - leaf) as usize][slot][pos as usize - 1]
                }
            };
        }
        perm
    }

    /// True iff no set of at most two vertices, thickened to a ball of
    /// radius `ell`, separates SS from TT.  Universally quantified over all
    /// centers; note that centers hugging SO's two subdivided edges do
    /// separate (SO has degree 2), so this is false even on large graphs.
    /// The restricted variant actually needed downstream, with one center
    /// pinned to the top root, is `check_no_root_sep`.
    pub fn check_no_small_sep(&self, ell: u32) -> bool {
        self.small_sep_witness(ell).is_none()
    }

    /// A pair of ball centers whose `ell`-balls separate SS from TT, if any.
    pub fn small_sep_witness(&self, ell: u32) -> Option<(Vertex, Vertex)> {
        let ss = [self.so(), self.si()];
        let tt = [self.ti(), self.to()];
        let n = self.g.n() as Vertex;
        for u in 0..n {
            for v in u..n {
                let ball = self.g.ball(&[u, v], ell).expect("vertices in range");
                if self.g.separates(&ball, &ss, &tt).expect("vertices in range") {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// True iff for every vertex v, the union of the `ell`-balls around v
    /// and around the top root fails to separate SS from TT.
    pub fn check_no_root_sep(&self, ell: u32) -> bool {
        let ss = [self.so(), self.si()];
        let tt = [self.ti(), self.to()];
        let r = self.top_root();
        for v in 0..self.g.n() as Vertex {
            let ball = self.g.ball(&[v, r], ell).expect("vertices in range");
            if self.g.separates(&ball, &ss, &tt).expect("vertices in range") {
                return false;
            }
        }
        true
    }

    /// Distance between two vertex sets, of the host graph.
    pub fn set_distance(&self, a: &[Vertex], b: &[Vertex]) -> Dist {
        self.g.set_distance(a, b).expect("vertices in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_graph_is_subdivided_5_cycle() {
        let t = build(1, 1).unwrap();
        assert_eq!(t.graph().n(), 5);
        assert_eq!(t.graph().m(), 5);
        for v in 0..5 {
            assert_eq!(t.graph().degree(v), 2);
        }
        let t = build(1, 3).unwrap();
        assert_eq!(t.graph().n(), 15);
        assert_eq!(t.graph().m(), 15);
    }

    #[test]
    fn sizes_match_closed_forms() {
        for k in 1..=6 {
            for d in 1..=4 {
                let t = build(k, d).unwrap();
                let n = d as u64 * ((1 << (k + 1)) + 1);
                let m = (2 * d as u64 + 1) * (1 << k) + d as u64 - 2;
                assert_eq!(t.graph().n() as u64, n, "V at k={k} d={d}");
                assert_eq!(t.graph().m() as u64, m, "E at k={k} d={d}");
            }
        }
        let t = build(2, 2).unwrap();
        assert_eq!((t.graph().n(), t.graph().m()), (18, 20));
    }

    #[test]
    fn build_rejects_bad_params() {
        assert!(matches!(build(0, 2), Err(TrigonError::ZeroParam)));
        assert!(matches!(build(2, 0), Err(TrigonError::ZeroParam)));
        match build_with_cap(5, 5, 10) {
            Err(TrigonError::TooLarge(n, 10)) => assert_eq!(n, 325),
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn adhesion_of_whole_graph() {
        let t = build(3, 2).unwrap();
        let a = t.adhesion(&Address::root()).unwrap();
        assert_eq!(a.so, t.junction(1));
        assert_eq!(a.si, t.junction(2));
        assert_eq!(a.ti, t.junction(9));
        assert_eq!(a.to, t.junction(10));
        assert_eq!(a.r, t.top_root());
        assert_eq!(t.graph().label(a.r), Some("R"));
        assert_eq!(t.graph().label(a.so), Some("SO"));
        assert_eq!(t.graph().label(a.ti), Some("TI"));
    }

    #[test]
    fn registry_links_parents_and_children() {
        let t = build(4, 2).unwrap();
        let reg = t.registry();
        assert_eq!(reg.len(), (1 << 4) - 1);
        for (a, adh) in &reg {
            let distinct: std::collections::BTreeSet<_> = adh.all().into_iter().collect();
            assert_eq!(distinct.len(), 5);
            if (a.len() as u32) < t.k() - 1 {
                let c0 = &reg[&a.child(0).unwrap()];
                let c1 = &reg[&a.child(1).unwrap()];
                assert_eq!(c0.ss(), adh.ss());
                assert_eq!(c1.tt(), adh.tt());
                assert_eq!([c1.so, c1.si], [c0.ti, c0.to]);
            }
        }
    }

    #[test]
    fn trigon_and_exterior_partition() {
        let t = build(2, 2).unwrap();
        let a: Address = "0".parse().unwrap();
        let inside = t.trigon_vertices(&a).unwrap();
        assert_eq!(inside.len(), 10);
        let ext = t.exterior_vertices(&a).unwrap();
        assert_eq!(ext.len(), 13);
        let whole = t.trigon_vertices(&Address::root()).unwrap();
        assert_eq!(whole.len(), t.graph().n());
        let ext_root = t.exterior_vertices(&Address::root()).unwrap();
        assert_eq!(ext_root.len(), 5);
    }

    #[test]
    fn tree_path_basics() {
        let t = build(3, 2).unwrap();
        let p = t.tree_path(t.top_root(), t.root(2, 1)).unwrap();
        assert_eq!(p.len(), 1);
        let q = t.tree_path(t.so(), t.to()).unwrap();
        assert_eq!(q.first(), t.so());
        assert_eq!(q.last(), t.to());
        assert!(q.contains(t.top_root()));
        assert!(matches!(
            t.tree_path(t.si(), t.to()),
            Err(TrigonError::NoTreePath(_, _))
        ));
        let sub = t.bottom_segment(1)[1];
        assert!(matches!(
            t.tree_path(sub, t.to()),
            Err(TrigonError::SubdivisionEndpoint)
        ));
    }

    #[test]
    fn flip_is_an_involutive_automorphism() {
        for (k, d) in [(1, 1), (1, 3), (2, 2), (3, 2), (4, 3)] {
            let t = build(k, d).unwrap();
            let perm = t.flip();
            assert_eq!(perm[t.so() as usize], t.to());
            assert_eq!(perm[t.si() as usize], t.ti());
            assert_eq!(perm[t.top_root() as usize], t.top_root());
            for v in 0..t.graph().n() as Vertex {
                assert_eq!(perm[perm[v as usize] as usize], v);
            }
            for (u, v) in t.graph().edges() {
                assert!(
                    t.graph().has_edge(perm[u as usize], perm[v as usize]),
                    "flip breaks edge ({u},{v}) at k={k} d={d}"
                );
            }
        }
    }

    #[test]
    fn addresses_parse_and_display() {
        let a: Address = "01".parse().unwrap();
        assert_eq!(a.bits(), &[0, 1]);
        assert_eq!(a.to_string(), "01");
        assert_eq!(Address::root().to_string(), "\u{03b5}");
        assert_eq!("\u{03b5}".parse::<Address>().unwrap(), Address::root());
        assert!("02".parse::<Address>().is_err());
        let t = build(2, 2).unwrap();
        assert!(t.validate_address(&"00".parse().unwrap()).is_err());
    }
}
