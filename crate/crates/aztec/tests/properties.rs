//! Property-based checks for the structural invariants: forced-edge
//! reduction contract, split identity on randomized symmetric graphs,
//! graph equality as a translation-invariant equivalence, dyadic
//! arithmetic laws, determinant robustness, and the edge-weight
//! decomposition of matching counts.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom as _;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

use aztec::arith::{det_bareiss, det_bigint, Dyadic};
use aztec::graph::{io, AxisSpec, Color, EmbeddedPlanarGraph, GridPoint};
use aztec::matching::{count_matchings, count_matchings_bruteforce};
use aztec::symmetry::factorization_split;
use aztec::Weight;

fn random_grid_subgraph(rng: &mut ChaCha8Rng, max_v: usize) -> EmbeddedPlanarGraph {
    let target = rng.gen_range(2..=max_v);
    let mut pts = vec![GridPoint::new(0, 0)];
    let mut set: std::collections::BTreeSet<GridPoint> = pts.iter().copied().collect();
    while set.len() < target {
        let base = pts[rng.gen_range(0..pts.len())];
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let q = GridPoint::new(base.x + dx, base.y + dy);
        if set.insert(q) {
            pts.push(q);
        }
    }
    EmbeddedPlanarGraph::from_unit_points(set)
}

#[test]
fn every_constructed_edge_joins_opposite_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let g = random_grid_subgraph(&mut rng, 40);
        for e in g.edges() {
            assert_ne!(e.u.color(), e.v.color());
        }
    }
}

#[test]
fn forced_reduction_contract_on_random_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..150 {
        let g = random_grid_subgraph(&mut rng, 30);
        let whole = count_matchings_bruteforce(&g, 36).unwrap();
        let red = g.reduce_forced_edges();
        if red.feasible {
            let remainder = count_matchings_bruteforce(&red.graph, 36).unwrap();
            assert_eq!(whole, &red.factor * &remainder);
        } else {
            assert!(whole.is_zero());
        }
    }
}

#[test]
fn split_identity_on_random_mirrored_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let axis = AxisSpec::horizontal(0);
    let mut tested = 0;
    while tested < 50 {
        // random connected blob in the closed upper half plane, then its
        // mirror image; the union is symmetric about y = 0
        let mut pts: Vec<GridPoint> = vec![GridPoint::new(0, 0)];
        let mut set: std::collections::BTreeSet<GridPoint> = pts.iter().copied().collect();
        let target = rng.gen_range(4..=16);
        while set.len() < target {
            let base = pts[rng.gen_range(0..pts.len())];
            let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
            let q = GridPoint::new(base.x + dx, (base.y + dy).max(0));
            if set.insert(q) {
                pts.push(q);
            }
        }
        let mut full: std::collections::BTreeSet<GridPoint> = set.clone();
        full.extend(set.iter().map(|p| GridPoint::new(p.x, -p.y)));
        let axis_count = full.iter().filter(|p| p.y == 0).count();
        if axis_count % 2 != 0 {
            continue;
        }
        let g = EmbeddedPlanarGraph::from_unit_points(full);
        let s = factorization_split(&g, &axis).expect("mirrored graph is symmetric");
        let lhs = count_matchings(&g);
        let rhs =
            (&count_matchings(&s.plus) * &count_matchings(&s.minus)).mul_pow2(s.k as i64);
        assert_eq!(lhs, rhs, "split identity failed, k = {}", s.k);
        tested += 1;
    }
}

#[test]
fn matching_count_edge_decomposition() {
    // count(G) = w(e) count(G - endpoints) + count(G without e)
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..60 {
        let g = random_grid_subgraph(&mut rng, 20);
        let Some(e) = g.edges().first().cloned() else {
            continue;
        };
        let without_endpoints = g.delete_vertices(&[e.u, e.v]).unwrap();
        let without_edge = EmbeddedPlanarGraph::build(
            g.vertices().to_vec(),
            g.edges()
                .iter()
                .filter(|f| (f.u, f.v) != (e.u, e.v))
                .map(|f| (f.u, f.v, f.w.clone()))
                .collect(),
        )
        .unwrap();
        let total = count_matchings_bruteforce(&g, 36).unwrap();
        let forced = count_matchings_bruteforce(&without_endpoints, 36).unwrap();
        let skipped = count_matchings_bruteforce(&without_edge, 36).unwrap();
        assert_eq!(total, &(&e.w * &forced) + &skipped);
    }
}

#[test]
fn oracle_equivalence_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..60 {
        let g = random_grid_subgraph(&mut rng, 26);
        assert_eq!(
            count_matchings(&g),
            count_matchings_bruteforce(&g, 36).unwrap()
        );
    }
}

#[test]
fn determinant_invariant_under_reordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..20 {
        let n = rng.gen_range(2..=7);
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect())
            .collect();
        let base = det_bareiss(m.clone());
        for _ in 0..10 {
            let mut rows: Vec<usize> = (0..n).collect();
            let mut cols: Vec<usize> = (0..n).collect();
            rows.shuffle(&mut rng);
            cols.shuffle(&mut rng);
            let permuted: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            assert_eq!(
                det_bareiss(permuted).magnitude(),
                base.magnitude(),
                "permutation changed |det|"
            );
        }
    }
}

#[test]
fn modular_determinant_matches_bareiss_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    // above the internal cutoff the BigInt path goes through CRT
    let n = 56;
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-2i64..=2))).collect())
        .collect();
    assert_eq!(det_bigint(m.clone()), det_bareiss(m));
}

#[test]
fn triangle_is_not_diagonally_symmetric() {
    let t2 = aztec::regions::aztec_triangle(2).unwrap();
    let mut any_diag_symmetry = false;
    for offset2 in -40..=40 {
        if offset2 % 2 != 0 {
            continue;
        }
        for axis in [AxisSpec::diag_up(offset2), AxisSpec::diag_down(offset2)] {
            if let Ok(r) = t2.reflect(&axis) {
                any_diag_symmetry |= r == t2;
            }
        }
    }
    assert!(!any_diag_symmetry);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dyadic_laws(
        (am, ae) in (-(1i64 << 20)..(1 << 20), 0u32..8),
        (bm, be) in (-(1i64 << 20)..(1 << 20), 0u32..8),
        (cm, ce) in (-(1i64 << 20)..(1 << 20), 0u32..8),
    ) {
        let a = Dyadic::new(am, ae);
        let b = Dyadic::new(bm, be);
        let c = Dyadic::new(cm, ce);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // normalization is idempotent: rebuilding from parts is stable
        let renorm = Dyadic::new(a.mantissa().clone(), a.exp2());
        prop_assert_eq!(renorm, a);
    }

    #[test]
    fn graph_equal_is_translation_invariant_equivalence(
        seed in 0u64..5000,
        dx in -20i64..20,
        dy in -20i64..20,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid_subgraph(&mut rng, 12);
        let h = random_grid_subgraph(&mut rng, 12);
        // reflexive and translation-invariant
        prop_assert!(EmbeddedPlanarGraph::graph_equal(&g, &g));
        prop_assert!(EmbeddedPlanarGraph::graph_equal(&g, &g.translate(dx, dy)));
        // symmetric
        prop_assert_eq!(
            EmbeddedPlanarGraph::graph_equal(&g, &h),
            EmbeddedPlanarGraph::graph_equal(&h, &g)
        );
        // transitive through the translated copy
        if EmbeddedPlanarGraph::graph_equal(&g, &h) {
            prop_assert!(EmbeddedPlanarGraph::graph_equal(&g.translate(dx, dy), &h));
        }
    }

    #[test]
    fn graph_json_round_trip(seed in 0u64..5000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid_subgraph(&mut rng, 15);
        let s = io::to_json(&g);
        let back = io::from_json(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::to_json(&back), s);
    }
}

#[test]
fn unbalanced_always_counts_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut seen = 0;
    while seen < 40 {
        let g = random_grid_subgraph(&mut rng, 21);
        let (w, b) = g.color_counts();
        if w != b {
            assert!(count_matchings(&g).is_zero());
            seen += 1;
        }
    }
    let _ = Color::White;
    let _: Weight = Weight::one();
}
