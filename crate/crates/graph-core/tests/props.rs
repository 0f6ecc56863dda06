//! Property suite for the distance/ball/separation primitives.

use graph_core::{Dist, Graph, Vertex};
use proptest::prelude::*;

/// Random graph on 1..=24 vertices with arbitrary edge set.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=24). prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|u| ((u + 1)..n as Vertex).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let chosen: Vec<(Vertex, Vertex)> = pairs
                .iter()
                .zip(mask)
                .filter_map(|(&e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &chosen).unwrap()
        })
    })
}

fn arb_graph_and_vertex() -> impl Strategy<Value = (Graph, Vertex)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.n() as Vertex;
        (Just(g), 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ball_is_monotone_and_composes((g, v) in arb_graph_and_vertex(), r in 0u32..5) {
        let b_r = g.ball(&[v], r).unwrap();
        let b_r1 = g.ball(&[v], r + 1).unwrap();
        // B(u, r) grows with r.
        prop_assert!(b_r.iter().all(|x| b_r1.contains(x)));
        // B(u, r+1) = B(B(u, r), 1).
        let b_step = g.ball(&b_r, 1).unwrap();
        prop_assert_eq!(b_r1, b_step);
    }

    #[test]
    fn triangle_inequality((g, u) in arb_graph_and_vertex(), seed in any::<u64>()) {
        let n = g.n() as Vertex;
        let v = (seed % n as u64) as Vertex;
        let w = ((seed / 7) % n as u64) as Vertex;
        let du = g.distances(&[u]).unwrap();
        let dv = g.distances(&[v]).unwrap();
        if let (Dist::Finite(a), Dist::Finite(b)) = (du[v as usize], dv[w as usize]) {
            match du[w as usize] {
                Dist::Finite(c) => prop_assert!(c <= a + b),
                Dist::Infinite => prop_assert!(false, "w unreachable but a 2-leg route exists"),
            }
        }
    }

    #[test]
    fn distance_is_symmetric((g, u) in arb_graph_and_vertex(), seed in any::<u64>()) {
        let v = (seed % g.n() as u64) as Vertex;
        let du = g.distances(&[u]).unwrap();
        let dv = g.distances(&[v]).unwrap();
        prop_assert_eq!(du[v as usize], dv[u as usize]);
    }

    #[test]
    fn separates_agrees_with_path_enumeration(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n() as u64;
        if g.n() < 3 {
            return Ok(());
        }
        let a = (seed % n) as Vertex;
        let b = ((seed / 3) % n) as Vertex;
        let x = ((seed / 11) % n) as Vertex;
        if a == b || a == x || b == x {
            return Ok(());
        }
        let sep = g.separates(&[x], &[a], &[b]).unwrap();
        // Drop x and look for a surviving a-b path.
        let verts: Vec<Vertex> = g.vertices().filter(|&v| v != x).collect();
        let (h, old) = g.induced(&verts).unwrap();
        let na = old.iter().position(|&v| v == a).unwrap() as Vertex;
        let nb = old.iter().position(|&v| v == b).unwrap() as Vertex;
        let found = h.enumerate_paths(&[na], &[nb], 100_000).unwrap();
        prop_assert_eq!(sep, found.paths.is_empty());
    }

    #[test]
    fn set_distance_matches_pairwise_min(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n() as u64;
        let a = (seed % n) as Vertex;
        let b = ((seed / 5) % n) as Vertex;
        let c = ((seed / 29) % n) as Vertex;
        let d = g.set_distance(&[a, b], &[c]).unwrap();
        let da = g.distances(&[c]).unwrap();
        let expect = da[a as usize].min(da[b as usize]);
        prop_assert_eq!(d, expect);
    }

    #[test]
    fn json_round_trip(g in arb_graph()) {
        let s = graph_core::io::to_json(&g);
        let h = graph_core::io::from_json(&s).unwrap();
        prop_assert_eq!(g, h);
    }
}
