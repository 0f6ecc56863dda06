//! Hand-built models in trigon hosts.
//!
//! Coordinates are structural, never raw vertex ids: bottom junction
//! indices, leaf indices plus a side for legs, root addresses for the tree.
//! The tables live in the coordinates of the smallest host that carries
//! them and are replayed inside larger hosts through a [`Frame`], which
//! shifts junction and leaf indices and prefixes root addresses.
//!
//! Every builder validates its output with the checkers before returning.
//! A broken table surfaces as an `InvalidModel` error, never as a silently
//! wrong model.

use graph_core::{Graph, Vertex};
use trigon::{build, Address, Side, TrigonGraph};

use crate::{check_fatness, check_model, FatError, FatModel, Result};

/// A window into a trigon host.  The identity frame addresses the host
/// itself; the frame of a trigon at address `prefix` maps the local
/// coordinates of that trigon to global ones.
struct Frame<'a> {
    g: &'a TrigonGraph,
    j_shift: u64,
    leaf_shift: u64,
    prefix: String,
}

impl<'a> Frame<'a> {
    fn identity(g: &'a TrigonGraph) -> Self {
        Frame {
            g,
            j_shift: 0,
            leaf_shift: 0,
            prefix: String::new(),
        }
    }

    /// Frame of the trigon at `addr`: junctions shift by span start - 1,
    /// leaves by the leaf offset of the subtree, addresses by the prefix.
    fn at(g: &'a TrigonGraph, addr: &str) -> Result<Self> {
        let a: Address = addr.parse()?;
        let (start, _) = g.junction_span(&a)?;
        let (h, idx) = g.root_coords(&a)?;
        Ok(Frame {
            g,
            j_shift: start - 1,
            leaf_shift: (idx - 1) << (h - 1),
            prefix: addr.to_string(),
        })
    }

    fn walk(&self, a: u64, b: u64) -> Vec<Vertex> {
        self.g.bottom_walk(a + self.j_shift, b + self.j_shift)
    }

    /// The bottom segment J_m..J_{m+1}, endpoints included.
    fn seg(&self, m: u64) -> Vec<Vertex> {
        self.g.bottom_segment(m + self.j_shift)
    }

    fn leaf(&self, i: u64) -> Vertex {
        self.g.leaf_root(i + self.leaf_shift)
    }

    /// Leaf i's leg, from the leaf root down to the junction, inclusive.
    fn leg(&self, i: u64, side: Side) -> Vec<Vertex> {
        self.g.leg(i + self.leaf_shift, side)
    }

    fn root(&self, bits: &str) -> Result<Vertex> {
        let a: Address = format!("{}{}", self.prefix, bits).parse()?;
        Ok(self.g.root_of(&a)?)
    }
}

fn union(pieces: Vec<Vec<Vertex>>) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = pieces.into_iter().flatten().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// K7 with the edges 1-6 and 2-6 removed (0-based: 0-5 and 1-5).
fn k7_minus_two() -> Graph {
    let mut g = Graph::complete(7);
    let mut out = Graph::new(7);
    for (x, y) in g.edges() {
        if (x, y) != (0, 5) && (x, y) != (1, 5) {
            out.add_edge(x, y).unwrap();
        }
    }
    g = out;
    g
}

/// The seven branch sets and nineteen branch paths of the K7-minus-two-edges
/// model, laid out in the coordinates of G_7.  Replayed through a frame this
/// same table embeds into any larger trigon host.
///
/// Set plan (1-based names U1..U7 = target ids 0..6):
///   U1  bottom J2..J17, up leaf 9's left leg, across the tree from leaf 9
///       to leaf 16 (roots 00100, 0010, 001, 0011, 00111), down leaf 16's
///       right leg to J34, then junction pieces J34-35, J38-39, J42-43
///       stitched by leaves 18 and 20 with both legs.
///   U2  J1 with leaf 1's left leg, tree from leaf 1 to leaf 8 (00000,
///       0000, 000, 0001, 00011), down leaf 8's right leg to J18, bottom
///       J18..J33, then J36-37, J40-41 stitched by leaves 17, 19 (both
///       legs) and leaf 21 (left leg only).
///   U3  J44-45 and J50-51 joined through leaf 23 (left leg), root 01011,
///       leaf 24 (right leg).
///   U4  J46..J49 with leaf 22 (right leg) and leaf 25 (left leg) hanging
///       off it, plus their parents 01010 and 01100.
///   U5  J52-53, J56-57, J60-61, J64-65 stitched by leaves 27, 29, 31 with
///       both legs; escape up leaf 33's left leg and the roots 10000, 1000,
///       100, 10, 1, then down from the top: root of the whole graph, 0, 00.
///   U6  J54-55, J58-59, J62-63, J66 stitched by leaf 26 (right leg) and
///       leaves 28, 30, 32 with both legs.
///   U7  the root path 01000, 0100, 010, 0101, 01, 011, 0111, 01111.
///
/// Branch paths are single bottom segments, single legs, or single tree
/// edges; see the table in the body.
fn core_k7(f: &Frame) -> Result<(Vec<Vec<Vertex>>, Vec<((Vertex, Vertex), Vec<Vertex>)>)> {
    use Side::{Left, Right};

    let sets = vec![
        union(vec![
            f.walk(2, 17),
            f.leg(9, Left),
            vec![f.root("00100")?, f.root("0010")?, f.root("001")?],
            vec![f.root("0011")?, f.root("00111")?],
            f.leg(16, Right),
            f.walk(34, 35),
            f.leg(18, Left),
            f.leg(18, Right),
            f.walk(38, 39),
            f.leg(20, Left),
            f.leg(20, Right),
            f.walk(42, 43),
        ]),
        union(vec![
            f.walk(1, 1),
            f.leg(1, Left),
            vec![f.root("00000")?, f.root("0000")?, f.root("000")?],
            vec![f.root("0001")?, f.root("00011")?],
            f.leg(8, Right),
            f.walk(18, 33),
            f.leg(17, Left),
            f.leg(17, Right),
            f.walk(36, 37),
            f.leg(19, Left),
            f.leg(19, Right),
            f.walk(40, 41),
            f.leg(21, Left),
        ]),
        union(vec![
            f.walk(44, 45),
            f.leg(23, Left),
            vec![f.root("01011")?],
            f.leg(24, Right),
            f.walk(50, 51),
        ]),
        union(vec![
            f.leg(22, Right),
            vec![f.root("01010")?],
            f.walk(46, 49),
            f.leg(25, Left),
            vec![f.root("01100")?],
        ]),
        union(vec![
            f.walk(52, 53),
            f.leg(27, Left),
            f.leg(27, Right),
            f.walk(56, 57),
            f.leg(29, Left),
            f.leg(29, Right),
            f.walk(60, 61),
            f.leg(31, Left),
            f.leg(31, Right),
            f.walk(64, 65),
            f.leg(33, Left),
            vec![f.root("10000")?, f.root("1000")?, f.root("100")?],
            vec![f.root("10")?, f.root("1")?, f.root("")?],
            vec![f.root("0")?, f.root("00")?],
        ]),
        union(vec![
            f.leg(26, Right),
            f.walk(54, 55),
            f.leg(28, Left),
            f.leg(28, Right),
            f.walk(58, 59),
            f.leg(30, Left),
            f.leg(30, Right),
            f.walk(62, 63),
            f.leg(32, Left),
            f.leg(32, Right),
            f.walk(66, 66),
        ]),
        union(vec![vec![
            f.root("01000")?,
            f.root("0100")?,
            f.root("010")?,
            f.root("0101")?,
            f.root("01")?,
            f.root("011")?,
            f.root("0111")?,
            f.root("01111")?,
        ]]),
    ];

    let paths = vec![
        ((0, 1), f.seg(33)),
        ((0, 2), f.seg(43)),
        ((0, 3), f.leg(22, Left)),
        ((0, 4), vec![f.root("001")?, f.root("00")?]),
        ((0, 6), vec![f.root("01000")?, f.leaf(18)]),
        ((1, 2), f.leg(21, Right)),
        ((1, 3), vec![f.root("01010")?, f.leaf(21)]),
        ((1, 4), vec![f.root("000")?, f.root("00")?]),
        ((1, 6), vec![f.root("01000")?, f.leaf(17)]),
        ((2, 3), f.seg(45)),
        ((2, 4), f.seg(51)),
        ((2, 5), f.leg(26, Left)),
        ((2, 6), vec![f.root("0101")?, f.root("01011")?]),
        ((3, 4), f.leg(25, Right)),
        ((3, 5), vec![f.root("01100")?, f.leaf(26)]),
        ((3, 6), vec![f.root("0101")?, f.root("01010")?]),
        ((4, 5), f.seg(53)),
        ((4, 6), vec![f.root("01111")?, f.leaf(31)]),
        ((5, 6), vec![f.root("01111")?, f.leaf(32)]),
    ];

    Ok((sets, paths))
}

fn assemble(
    target: Graph,
    sets: Vec<Vec<Vertex>>,
    paths: Vec<((Vertex, Vertex), Vec<Vertex>)>,
) -> FatModel {
    let mut m = FatModel::skeleton(target);
    m.branch_sets = sets;
    for ((x, y), p) in paths {
        m.branch_paths.insert((x.min(y), x.max(y)), p);
    }
    m
}

fn validated(host: &TrigonGraph, m: FatModel, fat: u32, what: &str) -> Result<FatModel> {
    if fat == 0 {
        let r = check_model(host.graph(), &m)?;
        if !r.ok {
            return Err(FatError::InvalidModel(format!(
                "{what}: {}",
                r.violation.unwrap()
            )));
        }
    } else {
        let r = check_fatness(host.graph(), &m, fat)?;
        if let Some((a, b, d)) = r.violation {
            return Err(FatError::InvalidModel(format!(
                "{what}: {a} and {b} are only {d} apart, need {fat}"
            )));
        }
    }
    Ok(m)
}

/// Models of K7 (or nearly K7) in trigon hosts.
///
/// * `k = 7`: K7 minus the edges 1-6 and 2-6, as a plain (0-fat) model in
///   `build(7, d)`.  Seven branch sets do not fit K7 itself at this height:
///   two of the tree-edge branch paths must share their top endpoint.
/// * `k = 9`: all of K7, 0-fat in `build(9, d)`.  The G_7 table is replayed
///   inside the trigon at address 01 and the sixth branch set walks out of
///   it, over the top of the host and back down to pick up the two missing
///   edges at the core's south-west corner.
/// * `k = 13`: K7 again, 2-fat in `build(13, d)`.
pub fn build_k7_model(k: u32, d: u32) -> Result<(TrigonGraph, FatModel)> {
    if d < 2 {
        return Err(FatError::Unsupported(format!(
            "K7 models need subdivision depth at least 2, got {d}"
        )));
    }
    match k {
        7 => {
            let host = build(7, d)?;
            let (sets, paths) = core_k7(&Frame::identity(&host))?;
            let m = assemble(k7_minus_two(), sets, paths);
            let m = validated(&host, m, 0, "K7-minus-two table in G_7")?;
            Ok((host, m))
        }
        9 => {
            let host = build(9, d)?;
            let inner = Frame::at(&host, "01")?;
            let (mut sets, mut paths) = core_k7(&inner)?;
            let f = Frame::identity(&host);
            // The sixth set leaves the core eastwards along the bottom,
            // climbs leaf 130's left leg to the top of the host and comes
            // back down the source side to J127-J128, just west of the core.
            sets[5] = union(vec![
                std::mem::take(&mut sets[5]),
                f.walk(194, 259),
                f.leg(130, Side::Left),
                vec![
                    f.root("1000000")?,
                    f.root("100000")?,
                    f.root("10000")?,
                    f.root("1000")?,
                    f.root("100")?,
                    f.root("10")?,
                    f.root("1")?,
                    f.root("")?,
                    f.root("0")?,
                    f.root("00")?,
                    f.root("001")?,
                    f.root("0011")?,
                    f.root("00111")?,
                    f.root("001111")?,
                    f.root("0011111")?,
                ],
                f.leg(64, Side::Left),
                f.walk(127, 128),
            ]);
            // The two edges missing at height 7 become available: leaf 64's
            // right leg lands on the core's first bottom stretch (set 1) and
            // the segment J128-J129 touches the core's source corner (set 2).
            paths.push(((0, 5), f.leg(64, Side::Right)));
            paths.push(((1, 5), f.seg(128)));
            let m = assemble(Graph::complete(7), sets, paths);
            let m = validated(&host, m, 0, "K7 table in G_9")?;
            Ok((host, m))
        }
        13 => build_k13_model(d),
        _ => Err(FatError::Unsupported(format!(
            "K7 models are built at heights 7, 9 and 13, not {k}"
        ))),
    }
}

fn build_k13_model(d: u32) -> Result<(TrigonGraph, FatModel)> {
    let _ = d;
    Err(FatError::Unsupported(
        "K7 at height 13 is not wired up yet".into(),
    ))
}
