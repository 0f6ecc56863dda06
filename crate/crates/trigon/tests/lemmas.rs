//! Empirical checks of the structural facts the downstream crates lean on:
//! the nested linkage's distance, the two-path dichotomy, the source-to-root
//! path corollary, the exterior variant, restriction of linkages to child
//! trigons, and the (non-)existence of small thickened separators.

use graph_core::{Dist, Path, Vertex};
use trigon::{build, Address, Dichotomy, LinkageClass, TrigonGraph};

fn ss_tt_paths(t: &TrigonGraph) -> Vec<Path> {
    let ss = [t.so(), t.si()];
    let tt = [t.ti(), t.to()];
    let en = t.graph().enumerate_paths(&ss, &tt, 1_000_000).unwrap();
    assert!(!en.overflow);
    en.paths
}

#[test]
fn nested_linkage_distance_is_exactly_d() {
    for k in 1..=6 {
        for d in 1..=4 {
            let t = build(k, d).unwrap();
            let (p, q) = t.nested_linkage();
            assert_eq!(
                t.set_distance(p.vertices(), q.vertices()),
                Dist::Finite(d),
                "k={k} d={d}"
            );
        }
    }
}

#[test]
fn dichotomy_has_no_violations_exhaustively() {
    for (d, expect_tree_case) in [(2, false), (3, true)] {
        let t = build(2, d).unwrap();
        let paths = ss_tt_paths(&t);
        assert_eq!(paths.len(), 8, "path census at k=2 is independent of d");
        let mut close = 0usize;
        let mut tree_case = 0usize;
        for i in 0..paths.len() {
            for j in i..paths.len() {
                match t.two_path_dichotomy(&paths[i], &paths[j]).unwrap() {
                    Dichotomy::Close => close += 1,
                    Dichotomy::TreePathCase => tree_case += 1,
                    Dichotomy::Violation => panic!("dichotomy violated at d={d} ({i},{j})"),
                }
            }
        }
        assert!(close > 0);
        assert_eq!(tree_case > 0, expect_tree_case, "d={d}");
    }
}

#[test]
fn far_ss_rtt_paths_pass_through_the_root() {
    // Any two paths from SS to {R} + TT that are more than 2 apart include
    // one through the top root.
    for d in [2, 3] {
        let t = build(2, d).unwrap();
        let adh = t.adhesion(&Address::root()).unwrap();
        let en = t
            .graph()
            .enumerate_paths(&adh.ss(), &adh.rtt(), 1_000_000)
            .unwrap();
        assert!(!en.overflow);
        assert_eq!(en.paths.len(), 8);
        let mut far_pairs = 0usize;
        for p in &en.paths {
            for q in &en.paths {
                if t.set_distance(p.vertices(), q.vertices()) > Dist::Finite(2) {
                    far_pairs += 1;
                    assert!(
                        p.contains(adh.r) || q.contains(adh.r),
                        "far pair misses the root at d={d}"
                    );
                }
            }
        }
        assert_eq!(far_pairs > 0, d >= 3, "d={d}");
    }
}

#[test]
fn far_exterior_paths_hug_the_trigon_root() {
    // Paths in the exterior of a trigon between its SS and its {R} + TT:
    // two of them more than 2 apart force one to lie within distance 1 of
    // the trigon's root.
    let t = build(3, 2).unwrap();
    let mut nontrivial = 0usize;
    for (a, adh) in t.registry() {
        let ext = t.exterior_vertices(&a).unwrap();
        let (sub, map) = t.graph().induced(&ext).unwrap();
        let loc = |v: Vertex| map.iter().position(|&x| x == v).unwrap() as Vertex;
        let ss = [loc(adh.so), loc(adh.si)];
        let rtt = [loc(adh.r), loc(adh.ti), loc(adh.to)];
        let en = sub.enumerate_paths(&ss, &rtt, 1_000_000).unwrap();
        assert!(!en.overflow);
        nontrivial += usize::from(!en.paths.is_empty());
        let back: Vec<Vec<Vertex>> = en
            .paths
            .iter()
            .map(|p| p.vertices().iter().map(|&v| map[v as usize]).collect())
            .collect();
        for p in &back {
            for q in &back {
                if t.set_distance(p, q) > Dist::Finite(2) {
                    let near_r = t.set_distance(p, &[adh.r]) <= Dist::Finite(1)
                        || t.set_distance(q, &[adh.r]) <= Dist::Finite(1);
                    assert!(near_r, "far exterior pair away from root at {a}");
                }
            }
        }
    }
    // The all-source-side trigons have isolated SS in their exterior, so
    // only four addresses contribute paths.
    assert_eq!(nontrivial, 4);
}

#[test]
fn root_avoiding_linkages_restrict_and_cross() {
    for (k, d) in [(2, 2), (3, 2)] {
        let t = build(k, d).unwrap();
        let adh = t.adhesion(&Address::root()).unwrap();
        let paths = ss_tt_paths(&t);
        let mut linkages = 0usize;
        let mut with_crossing = 0usize;
        for p in &paths {
            for q in &paths {
                if p.contains(adh.r) || q.contains(adh.r) {
                    continue;
                }
                let class = trigon::classify_linkage(&adh, p, q);
                if class == LinkageClass::Invalid {
                    continue;
                }
                linkages += 1;
                let ((p0, q0), (p1, q1)) =
                    t.child_linkages(&Address::root(), p, q).unwrap();
                let c0 = trigon::classify_linkage(
                    &t.adhesion(&"0".parse().unwrap()).unwrap(),
                    &p0,
                    &q0,
                );
                let c1 = trigon::classify_linkage(
                    &t.adhesion(&"1".parse().unwrap()).unwrap(),
                    &p1,
                    &q1,
                );
                assert_ne!(c0, LinkageClass::Invalid);
                assert_ne!(c1, LinkageClass::Invalid);
                if [class, c0, c1].contains(&LinkageClass::Crossing) {
                    with_crossing += 1;
                }
            }
        }
        assert!(linkages > 0, "k={k}");
        assert_eq!(with_crossing, linkages, "k={k}: every triple crosses somewhere");
    }
}

#[test]
fn small_separators_exist_universally_but_not_through_the_root() {
    // SO keeps degree 2 in every member of the family, so a pair of balls
    // hugging its two subdivided edges always separates; the universal
    // checker is honestly false.  The restricted variant with one center
    // pinned to the top root matches the intended statement, and its truth
    // tracks the hypothesis d > 2*ell.
    let t = build(1, 1).unwrap();
    assert!(!t.check_no_small_sep(1));

    let t = build(5, 3).unwrap();
    assert!(!t.check_no_small_sep(1));
    assert!(t.small_sep_witness(1).is_some());
    assert!(t.check_no_root_sep(1));

    let t = build(3, 2).unwrap();
    assert!(!t.check_no_small_sep(0));
    // A genuine trap beyond the trivial one swallowing SS: one center on
    // the first leaf root, one on the segment right of SI.
    let trap = [t.leaf_root(1), t.bottom_segment(2)[1]];
    let ball = t.graph().ball(&trap, 0).unwrap();
    assert!(t
        .graph()
        .separates(&ball, &[t.so(), t.si()], &[t.ti(), t.to()])
        .unwrap());
    assert!(t.check_no_root_sep(0));
    assert!(!t.check_no_root_sep(1), "d = 2 is below the 2*ell+1 threshold");

    assert!(!build(5, 2).unwrap().check_no_root_sep(1));
}

#[test]
fn adhesion_separates_every_trigon_from_its_exterior() {
    for (k, d) in [(3, 2), (4, 2), (2, 3)] {
        let t = build(k, d).unwrap();
        for (a, adh) in t.registry() {
            let inside = t.trigon_vertices(&a).unwrap();
            let interior = graph_core::difference(&inside, &adh.all());
            let outside = graph_core::difference(
                &(0..t.graph().n() as Vertex).collect::<Vec<_>>(),
                &inside,
            );
            if outside.is_empty() {
                continue;
            }
            assert!(
                t.graph().separates(&adh.all(), &interior, &outside).unwrap(),
                "adhesion fails to separate at {a}, k={k} d={d}"
            );
        }
    }
}

#[test]
fn source_half_chain_is_guarded_by_root_and_targets() {
    // For trigons sharing the whole graph's source pair, the root together
    // with the target pair already separates the trigon from the rest.
    let t = build(3, 2).unwrap();
    for addr in ["0", "00"] {
        let a: Address = addr.parse().unwrap();
        let adh = t.adhesion(&a).unwrap();
        let inside = t.trigon_vertices(&a).unwrap();
        let guard = adh.rtt();
        let interior = graph_core::difference(&inside, &guard);
        let outside = graph_core::difference(
            &(0..t.graph().n() as Vertex).collect::<Vec<_>>(),
            &inside,
        );
        assert!(t.graph().separates(&guard, &interior, &outside).unwrap());
    }
}
