//! The embedded planar bipartite graph carrier.
//!
//! Vertices are integer lattice points; the two color classes are derived
//! from coordinate parity (white = even `x + y`). Edges are straight
//! segments with exact dyadic weights; the constructor validates
//! bipartiteness and that the straight-line drawing is crossing-free.

pub mod geom;
pub mod io;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::Weight;

/// A lattice point; ordering is lexicographic by `(x, y)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }

    pub fn color(&self) -> Color {
        if (self.x + self.y).rem_euclid(2) == 0 {
            Color::White
        } else {
            Color::Black
        }
    }
}

impl fmt::Debug for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Parity color class; white is even `x + y`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    White,
    Black,
}

/// Weighted edge with endpoints stored in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: GridPoint,
    pub v: GridPoint,
    pub w: Weight,
}

impl Edge {
    pub fn new(a: GridPoint, b: GridPoint, w: Weight) -> Self {
        if a <= b {
            Edge { u: a, v: b, w }
        } else {
            Edge { u: b, v: a, w }
        }
    }

    pub fn other(&self, p: GridPoint) -> GridPoint {
        if p == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0}-{1} joins vertices of the same color class")]
    NonBipartite(GridPoint, GridPoint),
    #[error("drawing is not planar: {0}")]
    NonPlanar(String),
    #[error("edge endpoint {0} is not a listed vertex")]
    DanglingEdge(GridPoint),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(GridPoint),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(GridPoint, GridPoint),
    #[error("degenerate edge at {0}")]
    DegenerateEdge(GridPoint),
    #[error("axis not supported: {0}")]
    UnsupportedAxis(String),
    #[error("vertex {0} not present in graph")]
    MissingVertex(GridPoint),
}

/// The symmetry axes understood by `reflect` and the factorization cut.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxisDir {
    /// y = offset2/2
    Horizontal,
    /// x = offset2/2
    Vertical,
    /// y - x = offset2/2 (slope +1)
    DiagUp,
    /// y + x = offset2/2 (slope -1)
    DiagDown,
}

/// An axis line; `offset2` stores twice the offset so half-integer axes
/// stay in integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AxisSpec {
    pub dir: AxisDir,
    pub offset2: i64,
}

impl AxisSpec {
    pub fn horizontal(offset2: i64) -> Self {
        AxisSpec { dir: AxisDir::Horizontal, offset2 }
    }

    pub fn vertical(offset2: i64) -> Self {
        AxisSpec { dir: AxisDir::Vertical, offset2 }
    }

    pub fn diag_up(offset2: i64) -> Self {
        AxisSpec { dir: AxisDir::DiagUp, offset2 }
    }

    pub fn diag_down(offset2: i64) -> Self {
        AxisSpec { dir: AxisDir::DiagDown, offset2 }
    }

    /// Mirror image of a lattice point; diagonal axes need an integer
    /// offset to map the lattice to itself.
    pub fn reflect_point(&self, p: GridPoint) -> Result<GridPoint, GraphError> {
        match self.dir {
            AxisDir::Horizontal => Ok(GridPoint::new(p.x, self.offset2 - p.y)),
            AxisDir::Vertical => Ok(GridPoint::new(self.offset2 - p.x, p.y)),
            AxisDir::DiagUp | AxisDir::DiagDown => {
                if self.offset2 % 2 != 0 {
                    return Err(GraphError::UnsupportedAxis(format!(
                        "diagonal axis with half-integer offset {}/2",
                        self.offset2
                    )));
                }
                let c = self.offset2 / 2;
                Ok(match self.dir {
                    AxisDir::DiagUp => GridPoint::new(p.y - c, p.x + c),
                    AxisDir::DiagDown => GridPoint::new(c - p.y, c - p.x),
                    _ => unreachable!(),
                })
            }
        }
    }

    /// Position along the axis (left-to-right order) and doubled signed
    /// distance from it ("above" is positive).
    pub fn pos_side(&self, p: GridPoint) -> (i64, i64) {
        match self.dir {
            AxisDir::Horizontal => (p.x, 2 * p.y - self.offset2),
            AxisDir::Vertical => (p.y, self.offset2 - 2 * p.x),
            AxisDir::DiagUp => (p.x + p.y, 2 * (p.y - p.x) - self.offset2),
            AxisDir::DiagDown => (p.x - p.y, 2 * (p.x + p.y) - self.offset2),
        }
    }

    /// Unit step along the axis in the direction of increasing position.
    pub fn direction(&self) -> (i64, i64) {
        match self.dir {
            AxisDir::Horizontal => (1, 0),
            AxisDir::Vertical => (0, 1),
            AxisDir::DiagUp => (1, 1),
            AxisDir::DiagDown => (1, -1),
        }
    }
}

/// Result of forced-edge reduction.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub graph: EmbeddedPlanarGraph,
    pub factor: Weight,
    pub feasible: bool,
}

/// Bipartite graph with integer planar coordinates and dyadic edge weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddedPlanarGraph {
    vertices: Vec<GridPoint>,
    edges: Vec<Edge>,
}

impl EmbeddedPlanarGraph {
    /// Validating constructor. Rejects non-bipartite edges, dangling
    /// endpoints, duplicates, and crossings in the straight-line drawing.
    pub fn build(
        vertices: Vec<GridPoint>,
        edges: Vec<(GridPoint, GridPoint, Weight)>,
    ) -> Result<Self, GraphError> {
        let mut vs = vertices;
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        let vset: BTreeSet<GridPoint> = vs.iter().copied().collect();
        let mut es: Vec<Edge> = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            if a == b {
                return Err(GraphError::DegenerateEdge(a));
            }
            for p in [a, b] {
                if !vset.contains(&p) {
                    return Err(GraphError::DanglingEdge(p));
                }
            }
            if a.color() == b.color() {
                return Err(GraphError::NonBipartite(a, b));
            }
            es.push(Edge::new(a, b, w));
        }
        es.sort_by_key(|e| (e.u, e.v));
        for w in es.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        let g = EmbeddedPlanarGraph { vertices: vs, edges: es };
        g.validate_planarity()?;
        Ok(g)
    }

    /// Rebuild after an isometry or a vertex/edge subset; planarity and
    /// bipartiteness are preserved by construction, so only sort.
    fn from_parts_unchecked(
        mut vertices: Vec<GridPoint>,
        mut edges: Vec<Edge>,
    ) -> Self {
        vertices.sort();
        edges.sort_by_key(|e| (e.u, e.v));
        EmbeddedPlanarGraph { vertices, edges }
    }

    /// Unit axis-parallel segments between integer points can never cross,
    /// so the quadratic sweep only runs when longer edges are present.
    fn validate_planarity(&self) -> Result<(), GraphError> {
        let all_unit = self
            .edges
            .iter()
            .all(|e| (e.u.x - e.v.x).abs() + (e.u.y - e.v.y).abs() == 1);
        if all_unit {
            return Ok(());
        }
        // vertex strictly inside an edge
        for e in &self.edges {
            for &p in &self.vertices {
                if geom::point_in_segment_interior(p, e.u, e.v) {
                    return Err(GraphError::NonPlanar(format!(
                        "vertex {} lies inside edge {}-{}",
                        p, e.u, e.v
                    )));
                }
            }
        }
        // pairwise segment conflicts, pruned by x-extent
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        let min_x = |e: &Edge| e.u.x.min(e.v.x);
        let max_x = |e: &Edge| e.u.x.max(e.v.x);
        order.sort_by_key(|&i| min_x(&self.edges[i]));
        for (idx, &i) in order.iter().enumerate() {
            let ei = &self.edges[i];
            for &j in &order[idx + 1..] {
                let ej = &self.edges[j];
                if min_x(ej) > max_x(ei) {
                    break;
                }
                if geom::segments_conflict(ei.u, ei.v, ej.u, ej.v) {
                    return Err(GraphError::NonPlanar(format!(
                        "edges {}-{} and {}-{} intersect",
                        ei.u, ei.v, ej.u, ej.v
                    )));
                }
            }
        }
        Ok(())
    }

    /// Induced graph on a set of points with unit edges of weight 1.
    pub fn from_unit_points<I: IntoIterator<Item = GridPoint>>(points: I) -> Self {
        let vset: BTreeSet<GridPoint> = points.into_iter().collect();
        let mut edges = Vec::new();
        for &p in &vset {
            for q in [GridPoint::new(p.x + 1, p.y), GridPoint::new(p.x, p.y + 1)] {
                if vset.contains(&q) {
                    edges.push(Edge::new(p, q, Weight::one()));
                }
            }
        }
        EmbeddedPlanarGraph::from_parts_unchecked(vset.into_iter().collect(), edges)
    }

    pub fn empty() -> Self {
        EmbeddedPlanarGraph { vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn vertices(&self) -> &[GridPoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, p: GridPoint) -> bool {
        self.vertices.binary_search(&p).is_ok()
    }

    pub fn adjacency(&self) -> BTreeMap<GridPoint, Vec<(GridPoint, Weight)>> {
        let mut adj: BTreeMap<GridPoint, Vec<(GridPoint, Weight)>> = BTreeMap::new();
        for v in &self.vertices {
            adj.insert(*v, Vec::new());
        }
        for e in &self.edges {
            adj.get_mut(&e.u).unwrap().push((e.v, e.w.clone()));
            adj.get_mut(&e.v).unwrap().push((e.u, e.w.clone()));
        }
        adj
    }

    /// White and black class sizes.
    pub fn color_counts(&self) -> (usize, usize) {
        let white = self
            .vertices
            .iter()
            .filter(|p| p.color() == Color::White)
            .count();
        (white, self.vertices.len() - white)
    }

    pub fn is_balanced(&self) -> bool {
        let (w, b) = self.color_counts();
        w == b
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        let vs = self
            .vertices
            .iter()
            .map(|p| GridPoint::new(p.x + dx, p.y + dy))
            .collect();
        let es = self
            .edges
            .iter()
            .map(|e| {
                Edge::new(
                    GridPoint::new(e.u.x + dx, e.u.y + dy),
                    GridPoint::new(e.v.x + dx, e.v.y + dy),
                    e.w.clone(),
                )
            })
            .collect();
        EmbeddedPlanarGraph::from_parts_unchecked(vs, es)
    }

    /// Mirror image about an axis. Weights are preserved.
    pub fn reflect(&self, axis: &AxisSpec) -> Result<Self, GraphError> {
        let mut vs = Vec::with_capacity(self.vertices.len());
        for &p in &self.vertices {
            vs.push(axis.reflect_point(p)?);
        }
        let mut es = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            es.push(Edge::new(
                axis.reflect_point(e.u)?,
                axis.reflect_point(e.v)?,
                e.w.clone(),
            ));
        }
        Ok(EmbeddedPlanarGraph::from_parts_unchecked(vs, es))
    }

    /// Exact equality after translating each graph so its lexicographically
    /// minimal vertex sits at the origin.
    pub fn graph_equal(a: &Self, b: &Self) -> bool {
        match (a.vertices.first(), b.vertices.first()) {
            (None, None) => true,
            (Some(pa), Some(pb)) => {
                let ta = a.translate(-pa.x, -pa.y);
                let tb = b.translate(-pb.x, -pb.y);
                ta == tb
            }
            _ => false,
        }
    }

    /// Remove vertices (and their incident edges); all must be present.
    pub fn delete_vertices(&self, pts: &[GridPoint]) -> Result<Self, GraphError> {
        let dead: BTreeSet<GridPoint> = pts.iter().copied().collect();
        for p in &dead {
            if !self.contains_vertex(*p) {
                return Err(GraphError::MissingVertex(*p));
            }
        }
        let vs = self
            .vertices
            .iter()
            .copied()
            .filter(|p| !dead.contains(p))
            .collect();
        let es = self
            .edges
            .iter()
            .filter(|e| !dead.contains(&e.u) && !dead.contains(&e.v))
            .cloned()
            .collect();
        Ok(EmbeddedPlanarGraph::from_parts_unchecked(vs, es))
    }

    /// Induced subgraph on a vertex subset (edges with both ends inside).
    pub fn induced(&self, keep: &BTreeSet<GridPoint>) -> Self {
        let vs = self
            .vertices
            .iter()
            .copied()
            .filter(|p| keep.contains(p))
            .collect();
        let es = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.u) && keep.contains(&e.v))
            .cloned()
            .collect();
        EmbeddedPlanarGraph::from_parts_unchecked(vs, es)
    }

    /// Repeatedly match degree-1 vertices with their unique neighbors,
    /// accumulating the forced edge weights. Degree-1 vertices are taken in
    /// lexicographic order so the result is deterministic. An isolated
    /// vertex at any point makes the instance infeasible (no perfect
    /// matching); the contract is `count(self) = factor * count(reduced)`
    /// when feasible and `count(self) = 0` otherwise.
    pub fn reduce_forced_edges(&self) -> Reduced {
        let mut adj: BTreeMap<GridPoint, BTreeMap<GridPoint, Weight>> = BTreeMap::new();
        for v in &self.vertices {
            adj.insert(*v, BTreeMap::new());
        }
        for e in &self.edges {
            adj.get_mut(&e.u).unwrap().insert(e.v, e.w.clone());
            adj.get_mut(&e.v).unwrap().insert(e.u, e.w.clone());
        }
        let mut factor = Weight::one();
        loop {
            if adj.values().any(|nbrs| nbrs.is_empty()) {
                let graph = self.restrict_to_keys(&adj);
                return Reduced { graph, factor, feasible: false };
            }
            let Some((&v, nbrs)) = adj.iter().find(|(_, nbrs)| nbrs.len() == 1) else {
                break;
            };
            let (&u, w) = nbrs.iter().next().unwrap();
            factor = &factor * w;
            for p in [v, u] {
                let gone = adj.remove(&p).unwrap();
                for q in gone.keys() {
                    if let Some(qn) = adj.get_mut(q) {
                        qn.remove(&p);
                    }
                }
            }
        }
        let graph = self.restrict_to_keys(&adj);
        Reduced { graph, factor, feasible: true }
    }

    fn restrict_to_keys(
        &self,
        adj: &BTreeMap<GridPoint, BTreeMap<GridPoint, Weight>>,
    ) -> Self {
        let keep: BTreeSet<GridPoint> = adj.keys().copied().collect();
        self.induced(&keep)
    }

    /// Connected components as vertex sets, in deterministic order.
    pub fn components(&self) -> Vec<BTreeSet<GridPoint>> {
        let adj = self.adjacency();
        let mut seen: BTreeSet<GridPoint> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(p) = stack.pop() {
                if !comp.insert(p) {
                    continue;
                }
                for (q, _) in &adj[&p] {
                    if !comp.contains(q) {
                        stack.push(*q);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            comps.push(comp);
        }
        comps
    }

    /// True when the new segment `a`-`b` can be added without breaking the
    /// drawing: it must not pass through a vertex or cross existing edges.
    pub fn segment_fits(&self, a: GridPoint, b: GridPoint) -> bool {
        for &p in &self.vertices {
            if geom::point_in_segment_interior(p, a, b) {
                return false;
            }
        }
        for e in &self.edges {
            if geom::segments_conflict(a, b, e.u, e.v) {
                return false;
            }
            if geom::point_in_segment_interior(e.u, a, b)
                || geom::point_in_segment_interior(e.v, a, b)
            {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    fn w1() -> Weight {
        Weight::one()
    }

    fn unit_square() -> EmbeddedPlanarGraph {
        EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(0, 1), p(1, 1)])
    }

    #[test]
    fn build_single_edge() {
        let g = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(1, 0)],
            vec![(p(0, 0), p(1, 0), w1())],
        )
        .unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert!(g.is_balanced());
    }

    #[test]
    fn build_rejects_same_parity() {
        let err = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(2, 0)],
            vec![(p(0, 0), p(2, 0), w1())],
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::NonBipartite(_, _)));
    }

    #[test]
    fn build_rejects_dangling() {
        let err = EmbeddedPlanarGraph::build(vec![p(0, 0)], vec![(p(0, 0), p(1, 0), w1())])
            .unwrap_err();
        assert!(matches!(err, GraphError::DanglingEdge(_)));
    }

    #[test]
    fn build_rejects_crossing() {
        // two bipartite slanted edges crossing near (1/2, 1)
        let err = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(1, 2), p(0, 2), p(1, 0)],
            vec![(p(0, 0), p(1, 2), w1()), (p(0, 2), p(1, 0), w1())],
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::NonPlanar(_)));
    }

    #[test]
    fn unit_square_is_valid_cycle() {
        let g = unit_square();
        assert_eq!(g.edges().len(), 4);
        assert!(g.is_balanced());
    }

    #[test]
    fn balance_counts() {
        let single = EmbeddedPlanarGraph::build(vec![p(0, 0)], vec![]).unwrap();
        assert!(!single.is_balanced());
        assert!(unit_square().is_balanced());
    }

    #[test]
    fn forced_reduction_of_path() {
        // path a-b-c-d collapses entirely with factor 1
        let g = EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(2, 0), p(3, 0)]);
        let r = g.reduce_forced_edges();
        assert!(r.feasible);
        assert_eq!(r.graph.num_vertices(), 0);
        assert!(r.factor.is_one());
    }

    #[test]
    fn forced_reduction_infeasible_on_isolated() {
        let g = EmbeddedPlanarGraph::build(vec![p(0, 0), p(1, 0), p(4, 0)], vec![
            (p(0, 0), p(1, 0), w1()),
        ])
        .unwrap();
        let r = g.reduce_forced_edges();
        assert!(!r.feasible);
    }

    #[test]
    fn graph_equal_translation() {
        let g = unit_square();
        let h = g.translate(5, 3);
        assert!(EmbeddedPlanarGraph::graph_equal(&g, &h));
        let path = EmbeddedPlanarGraph::from_unit_points([p(0, 0), p(1, 0), p(2, 0), p(3, 0)]);
        assert!(!EmbeddedPlanarGraph::graph_equal(&g, &path));
    }

    #[test]
    fn reflect_self_symmetric_edge() {
        let g = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(0, 1)],
            vec![(p(0, 0), p(0, 1), w1())],
        )
        .unwrap();
        // axis y = 1/2
        let r = g.reflect(&AxisSpec::horizontal(1)).unwrap();
        assert_eq!(g, r);
        // axis y = 0 fixes a horizontal edge on it
        let h = EmbeddedPlanarGraph::build(
            vec![p(0, 0), p(1, 0)],
            vec![(p(0, 0), p(1, 0), w1())],
        )
        .unwrap();
        assert_eq!(h, h.reflect(&AxisSpec::horizontal(0)).unwrap());
    }

    #[test]
    fn reflect_diag_rejects_half_integer() {
        let g = unit_square();
        assert!(g.reflect(&AxisSpec::diag_up(1)).is_err());
    }
}
