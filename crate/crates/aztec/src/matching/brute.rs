//! Brute-force perfect-matching enumeration, the independent oracle.

use thiserror::Error;

use super::super::graph::EmbeddedPlanarGraph;
use crate::Weight;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BruteError {
    #[error("graph has {0} vertices, above the brute-force cap {1}")]
    TooLarge(usize, usize),
}

pub const DEFAULT_BRUTE_CAP: usize = 36;

/// Brute-force cap, overridable through `AZTEC_BRUTE_CAP`.
pub fn brute_cap() -> usize {
    std::env::var("AZTEC_BRUTE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

/// Exact total weight of all perfect matchings by recursive enumeration on
/// the first unmatched vertex, with forced-edge pruning.
pub fn count_matchings_bruteforce(
    g: &EmbeddedPlanarGraph,
    cap: usize,
) -> Result<Weight, BruteError> {
    let n = g.num_vertices();
    if n > cap {
        return Err(BruteError::TooLarge(n, cap));
    }
    if n % 2 != 0 {
        return Ok(Weight::zero());
    }
    let adj_map = g.adjacency();
    let index: std::collections::BTreeMap<_, _> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i))
        .collect();
    let adj: Vec<Vec<(usize, Weight)>> = g
        .vertices()
        .iter()
        .map(|p| {
            adj_map[p]
                .iter()
                .map(|(q, w)| (index[q], w.clone()))
                .collect()
        })
        .collect();
    let mut alive = vec![true; n];
    Ok(recurse(&adj, &mut alive, n))
}

fn recurse(adj: &[Vec<(usize, Weight)>], alive: &mut Vec<bool>, remaining: usize) -> Weight {
    if remaining == 0 {
        return Weight::one();
    }
    // pick: any isolated vertex kills the branch, a degree-1 vertex is
    // forced, otherwise the first alive vertex (lexicographic order)
    let mut pick = usize::MAX;
    for v in 0..adj.len() {
        if !alive[v] {
            continue;
        }
        let deg = adj[v].iter().filter(|(u, _)| alive[*u]).count();
        if deg == 0 {
            return Weight::zero();
        }
        if deg == 1 {
            pick = v;
            break;
        }
        if pick == usize::MAX {
            pick = v;
        }
    }
    let v = pick;
    let mut total = Weight::zero();
    alive[v] = false;
    let nbrs: Vec<(usize, Weight)> = adj[v]
        .iter()
        .filter(|(u, _)| alive[*u])
        .cloned()
        .collect();
    for (u, w) in nbrs {
        alive[u] = false;
        let sub = recurse(adj, alive, remaining - 2);
        total = &total + &(&w * &sub);
        alive[u] = true;
    }
    alive[v] = true;
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GridPoint;

    fn p(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn empty_graph_counts_one() {
        let g = EmbeddedPlanarGraph::empty();
        assert!(count_matchings_bruteforce(&g, 36).unwrap().is_one());
    }

    #[test]
    fn odd_graph_counts_zero() {
        let g = EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(2, 0)]);
        assert!(count_matchings_bruteforce(&g, 36).unwrap().is_zero());
    }

    #[test]
    fn unit_square_counts_two() {
        let g = EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(0, 1), p(1, 1)]);
        assert_eq!(
            count_matchings_bruteforce(&g, 36).unwrap(),
            Weight::from_int(2.into())
        );
    }

    #[test]
    fn cap_is_enforced() {
        let pts: Vec<GridPoint> = (0..40).map(|i| p(i, 0)).collect();
        let g = EmbeddedPlanarGraph::from_unit_points(pts);
        assert!(matches!(
            count_matchings_bruteforce(&g, 36),
            Err(BruteError::TooLarge(40, 36))
        ));
    }
}
