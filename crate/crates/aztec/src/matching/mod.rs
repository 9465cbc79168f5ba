//! Exact weighted perfect-matching counting.
//!
//! The production path signs the biadjacency matrix with a Kasteleyn
//! orientation and takes an exact integer determinant (weights are scaled
//! by a common power of two first, and the power is divided back out).

mod brute;
mod kasteleyn;

pub use brute::{brute_cap, count_matchings_bruteforce, BruteError, DEFAULT_BRUTE_CAP};
pub use kasteleyn::{kasteleyn_orientation, verify_orientation, KasteleynOrientation};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::det_bigint;
use crate::graph::{Color, EmbeddedPlanarGraph};
use crate::Weight;

/// Exact total weight of the perfect matchings of `g`.
///
/// Unbalanced graphs count zero without touching the determinant.
pub fn count_matchings(g: &EmbeddedPlanarGraph) -> Weight {
    let (white, black) = g.color_counts();
    if white != black {
        return Weight::zero();
    }
    let n = white;
    if n == 0 {
        return Weight::one();
    }
    let orientation = kasteleyn_orientation(g);
    debug_assert!(verify_orientation(g, &orientation));

    let whites: Vec<_> = g
        .vertices()
        .iter()
        .copied()
        .filter(|p| p.color() == Color::White)
        .collect();
    let blacks: Vec<_> = g
        .vertices()
        .iter()
        .copied()
        .filter(|p| p.color() == Color::Black)
        .collect();
    let windex: std::collections::BTreeMap<_, _> =
        whites.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let bindex: std::collections::BTreeMap<_, _> =
        blacks.iter().enumerate().map(|(i, p)| (*p, i)).collect();

    let scale = g.edges().iter().map(|e| e.w.exp2()).max().unwrap_or(0);
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for e in g.edges() {
        let (w, b) = if e.u.color() == Color::White {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        let sign = orientation.sign_white_to_black(w, b);
        let entry = e.w.mantissa().clone() << (scale - e.w.exp2());
        m[windex[&w]][bindex[&b]] = if sign > 0 { entry } else { -entry };
    }
    let det = det_bigint(m);
    // det(scaled) = det(actual) * 2^(n * scale)
    let total_shift = (n as u64) * (scale as u64);
    Weight::new(det.abs(), u32::try_from(total_shift).expect("shift fits u32"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GridPoint;
    use num_traits::One;

    fn p(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn int(n: i64) -> Weight {
        Weight::from_int(n.into())
    }

    #[test]
    fn unit_square_counts_two() {
        let g = EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(0, 1), p(1, 1)]);
        assert_eq!(count_matchings(&g), int(2));
    }

    #[test]
    fn half_weight_edge() {
        let g = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(1, 0)],
            vec![(p(0, 0), p(1, 0), Weight::half())],
        )
        .unwrap();
        assert_eq!(count_matchings(&g), Weight::half());
    }

    #[test]
    fn empty_counts_one_and_unbalanced_zero() {
        assert!(count_matchings(&EmbeddedPlanarGraph::empty()).is_one());
        let single = EmbeddedPlanarGraph::build(vec![p(0, 0)], vec![]).unwrap();
        assert!(count_matchings(&single).is_zero());
    }

    #[test]
    fn matches_bruteforce_on_grid_block() {
        // 4x4 grid graph has 36 perfect matchings
        let pts: Vec<GridPoint> = (0..4)
            .flat_map(|x| (0..4).map(move |y| p(x, y)))
            .collect();
        let g = EmbeddedPlanarGraph::from_unit_points(pts);
        assert_eq!(count_matchings(&g), int(36));
        assert_eq!(
            count_matchings_bruteforce(&g, 36).unwrap(),
            int(36)
        );
    }

    #[test]
    fn disconnected_components_multiply() {
        let mut pts = vec![p(0, 0), p(1, 0), p(0, 1), p(1, 1)];
        pts.extend([p(5, 0), p(6, 0), p(5, 1), p(6, 1)]);
        let g = EmbeddedPlanarGraph::from_unit_points(pts);
        assert_eq!(count_matchings(&g), int(4));
    }
}
