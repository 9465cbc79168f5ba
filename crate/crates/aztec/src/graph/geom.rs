//! Exact integer predicates for straight-line segments between grid points.

use super::GridPoint;

/// Sign of the cross product (b - a) x (c - a), exact in i128.
pub fn orient(a: GridPoint, b: GridPoint, c: GridPoint) -> i128 {
    let ux = (b.x - a.x) as i128;
    let uy = (b.y - a.y) as i128;
    let vx = (c.x - a.x) as i128;
    let vy = (c.y - a.y) as i128;
    ux * vy - uy * vx
}

fn collinear_between_closed(a: GridPoint, b: GridPoint, p: GridPoint) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True when `p` lies strictly inside the segment `a`-`b`.
pub fn point_in_segment_interior(p: GridPoint, a: GridPoint, b: GridPoint) -> bool {
    p != a && p != b && orient(a, b, p) == 0 && collinear_between_closed(a, b, p)
}

/// True when the two segments intersect anywhere other than a shared endpoint.
pub fn segments_conflict(p1: GridPoint, p2: GridPoint, q1: GridPoint, q2: GridPoint) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);

    // proper crossing
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    // an endpoint strictly inside the other segment
    if point_in_segment_interior(p1, q1, q2)
        || point_in_segment_interior(p2, q1, q2)
        || point_in_segment_interior(q1, p1, p2)
        || point_in_segment_interior(q2, p1, p2)
    {
        return true;
    }
    // collinear segments sharing more than one point
    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        let shared = [q1, q2]
            .iter()
            .filter(|q| **q == p1 || **q == p2)
            .count();
        let overlap = collinear_between_closed(p1, p2, q1)
            || collinear_between_closed(p1, p2, q2)
            || collinear_between_closed(q1, q2, p1);
        if overlap && shared != 1 {
            return true;
        }
        // sharing exactly one endpoint but extending over each other is
        // already caught by the interior tests above
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> GridPoint {
        GridPoint { x, y }
    }

    #[test]
    fn crossing_diagonals() {
        assert!(segments_conflict(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
    }

    #[test]
    fn shared_endpoint_ok() {
        assert!(!segments_conflict(p(0, 0), p(1, 0), p(1, 0), p(1, 1)));
    }

    #[test]
    fn collinear_overlap() {
        assert!(segments_conflict(p(0, 0), p(3, 0), p(1, 0), p(4, 0)));
        assert!(segments_conflict(p(0, 0), p(3, 0), p(0, 0), p(2, 0)));
        assert!(!segments_conflict(p(0, 0), p(1, 0), p(1, 0), p(2, 0)));
    }

    #[test]
    fn endpoint_touching_interior() {
        assert!(segments_conflict(p(0, 0), p(2, 0), p(1, 0), p(1, 5)));
        assert!(!segments_conflict(p(0, 0), p(2, 0), p(3, 1), p(4, 0)));
    }
}
