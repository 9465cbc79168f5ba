//! Executable graph transformations: the factorization cut along a
//! symmetry axis, the pendant doubling trick, and the complementation
//! parameter map.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{AxisSpec, Color, Edge, EmbeddedPlanarGraph, GraphError, GridPoint};
use crate::Weight;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("graph is not symmetric about the axis")]
    NotSymmetric,
    #[error("axis carries an odd number of vertices ({0})")]
    OddAxisCount(usize),
    #[error("side conflict: {0}")]
    SideConflict(String),
    #[error("edge {0}-{1} crosses the axis away from axis vertices")]
    AxisCrossingEdge(GridPoint, GridPoint),
    #[error("graph is not one vertex away from symmetric: {0}")]
    NotNearSymmetric(String),
    #[error("pendant vertex must take the opposite color class")]
    ParityViolation,
    #[error("no viable pendant position found")]
    NoPendantPosition,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The two halves produced by the factorization cut, with the exponent k
/// (half the number of axis vertices): count(g) = 2^k count(plus) count(minus).
#[derive(Clone, Debug)]
pub struct SplitResult {
    pub plus: EmbeddedPlanarGraph,
    pub minus: EmbeddedPlanarGraph,
    pub k: u32,
}

/// Apply the factorization cut to a graph symmetric about `axis`.
///
/// Axis vertices are labelled a, b, a, b, ... from left to right; edges
/// below white-a and black-b vertices are deleted (those vertices keep
/// their above side and join the plus half), edges above black-a and
/// white-b vertices are deleted (they keep the below side and join the
/// minus half), and every edge lying along the axis has its weight halved.
/// This pairing of colors with labels is the one under which the chain of
/// identities reproduces the expected halves exactly.
pub fn factorization_split(
    g: &EmbeddedPlanarGraph,
    axis: &AxisSpec,
) -> Result<SplitResult, SymmetryError> {
    if g.reflect(axis)? != *g {
        return Err(SymmetryError::NotSymmetric);
    }
    let mut axis_verts: Vec<GridPoint> = g
        .vertices()
        .iter()
        .copied()
        .filter(|p| axis.pos_side(*p).1 == 0)
        .collect();
    axis_verts.sort_by_key(|p| axis.pos_side(*p).0);
    if axis_verts.len() % 2 != 0 {
        return Err(SymmetryError::OddAxisCount(axis_verts.len()));
    }
    let keep_above: BTreeMap<GridPoint, bool> = axis_verts
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let label_a = idx % 2 == 0;
            let keep = match p.color() {
                Color::White => label_a,
                Color::Black => !label_a,
            };
            (p, keep)
        })
        .collect();

    let mut kept: Vec<Edge> = Vec::new();
    for e in g.edges() {
        let su = axis.pos_side(e.u).1;
        let sv = axis.pos_side(e.v).1;
        match (su == 0, sv == 0) {
            (true, true) => {
                if keep_above[&e.u] != keep_above[&e.v] {
                    return Err(SymmetryError::SideConflict(format!(
                        "axis edge {}-{} assigned to both sides",
                        e.u, e.v
                    )));
                }
                kept.push(Edge::new(e.u, e.v, e.w.halve()));
            }
            (true, false) | (false, true) => {
                let (axis_v, other_side) = if su == 0 { (e.u, sv) } else { (e.v, su) };
                if (other_side > 0) == keep_above[&axis_v] {
                    kept.push(e.clone());
                }
            }
            (false, false) => {
                if (su > 0) != (sv > 0) {
                    return Err(SymmetryError::AxisCrossingEdge(e.u, e.v));
                }
                kept.push(e.clone());
            }
        }
    }

    let cut = rebuild(g.vertices().to_vec(), kept);
    let mut plus_verts: BTreeSet<GridPoint> = BTreeSet::new();
    let mut minus_verts: BTreeSet<GridPoint> = BTreeSet::new();
    for comp in cut.components() {
        let mut side: Option<bool> = None;
        for &p in &comp {
            let s = axis.pos_side(p).1;
            let this = if s == 0 { keep_above[&p] } else { s > 0 };
            match side {
                None => side = Some(this),
                Some(prev) if prev != this => {
                    return Err(SymmetryError::SideConflict(format!(
                        "component containing {} claims both sides",
                        p
                    )))
                }
                _ => {}
            }
        }
        if side.expect("components are nonempty") {
            plus_verts.extend(comp);
        } else {
            minus_verts.extend(comp);
        }
    }
    Ok(SplitResult {
        plus: cut.induced(&plus_verts),
        minus: cut.induced(&minus_verts),
        k: u32::try_from(axis_verts.len() / 2).expect("axis count fits"),
    })
}

fn rebuild(vertices: Vec<GridPoint>, edges: Vec<Edge>) -> EmbeddedPlanarGraph {
    // endpoints and embedding are unchanged, so skip revalidation
    let keep: BTreeSet<GridPoint> = vertices.iter().copied().collect();
    let g = EmbeddedPlanarGraph::build(
        vertices,
        edges
            .into_iter()
            .map(|e| (e.u, e.v, e.w))
            .collect::<Vec<_>>(),
    )
    .expect("subgraph of a valid graph stays valid");
    debug_assert!(g.vertices().iter().all(|p| keep.contains(p)));
    g
}

/// Present vertices whose mirror image is absent (candidates for the
/// pendant restoration).
pub fn find_missing_mirrors(
    g: &EmbeddedPlanarGraph,
    axis: &AxisSpec,
) -> Result<Vec<GridPoint>, GraphError> {
    let mut out = Vec::new();
    for &p in g.vertices() {
        let q = axis.reflect_point(p)?;
        if !g.contains_vertex(q) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Restore the missing mirror `v'` of `present` (with the mirrored edges of
/// `present`) and attach a new degree-2 pendant vertex `w` adjacent to both.
/// The result is symmetric about the axis and has exactly twice as many
/// matchings as the input.
pub fn symmetrize_with_pendant(
    g: &EmbeddedPlanarGraph,
    axis: &AxisSpec,
    present: GridPoint,
    pendant_at: GridPoint,
) -> Result<EmbeddedPlanarGraph, SymmetryError> {
    if !g.contains_vertex(present) {
        return Err(SymmetryError::NotNearSymmetric(format!(
            "{present} is not a vertex"
        )));
    }
    let mirror = axis.reflect_point(present)?;
    if g.contains_vertex(mirror) {
        return Err(SymmetryError::NotNearSymmetric(format!(
            "mirror {mirror} of {present} is already present"
        )));
    }
    if mirror.color() != present.color() || pendant_at.color() == present.color() {
        return Err(SymmetryError::ParityViolation);
    }
    if g.contains_vertex(pendant_at) {
        return Err(SymmetryError::NotNearSymmetric(format!(
            "pendant position {pendant_at} is occupied"
        )));
    }

    let mut vertices = g.vertices().to_vec();
    vertices.push(mirror);
    vertices.push(pendant_at);
    let mut edges: Vec<(GridPoint, GridPoint, Weight)> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.w.clone()))
        .collect();
    for (q, w) in g.adjacency()[&present].iter() {
        edges.push((mirror, axis.reflect_point(*q)?, w.clone()));
    }
    edges.push((pendant_at, present, Weight::one()));
    edges.push((pendant_at, mirror, Weight::one()));
    let out = EmbeddedPlanarGraph::build(vertices, edges)?;
    if out.reflect(axis)? != out {
        return Err(SymmetryError::NotNearSymmetric(
            "graph is not symmetric after restoring the mirror vertex".into(),
        ));
    }
    Ok(out)
}

/// Lattice points on the axis, parametrized by an integer step.
fn axis_lattice_point(axis: &AxisSpec, tau: i64) -> Option<GridPoint> {
    match axis.dir {
        crate::graph::AxisDir::Horizontal => {
            (axis.offset2 % 2 == 0).then(|| GridPoint::new(tau, axis.offset2 / 2))
        }
        crate::graph::AxisDir::Vertical => {
            (axis.offset2 % 2 == 0).then(|| GridPoint::new(axis.offset2 / 2, tau))
        }
        crate::graph::AxisDir::DiagUp => {
            (axis.offset2 % 2 == 0).then(|| GridPoint::new(tau, tau + axis.offset2 / 2))
        }
        crate::graph::AxisDir::DiagDown => {
            (axis.offset2 % 2 == 0).then(|| GridPoint::new(tau, axis.offset2 / 2 - tau))
        }
    }
}

/// Symmetrize with an automatically chosen pendant position: walk the axis
/// lattice points outward from the foot of the restored mirror pair and
/// take the first placement that yields a valid planar bipartite graph.
pub fn symmetrize_auto(
    g: &EmbeddedPlanarGraph,
    axis: &AxisSpec,
    present: GridPoint,
) -> Result<(EmbeddedPlanarGraph, GridPoint), SymmetryError> {
    let mirror = axis.reflect_point(present)?;
    // doubled axis position of the foot of the v-v' segment
    let foot2 = axis.pos_side(present).0 + axis.pos_side(mirror).0;
    for dist in 0..=128i64 {
        for sign in [-1, 1] {
            if dist == 0 && sign > 0 {
                continue;
            }
            // candidate with doubled position foot2 + sign * dist
            let target2 = foot2 + sign * dist;
            let Some(w) = axis_pos_to_point(axis, target2) else {
                continue;
            };
            if let Ok(out) = symmetrize_with_pendant(g, axis, present, w) {
                return Ok((out, w));
            }
        }
    }
    Err(SymmetryError::NoPendantPosition)
}

/// Axis lattice point whose doubled position equals `pos2`, when one exists.
fn axis_pos_to_point(axis: &AxisSpec, pos2: i64) -> Option<GridPoint> {
    // doubled position of the tau-th lattice point
    let (base, step) = match axis.dir {
        crate::graph::AxisDir::Horizontal | crate::graph::AxisDir::Vertical => (0, 2),
        crate::graph::AxisDir::DiagUp => (axis.offset2, 4),
        crate::graph::AxisDir::DiagDown => (-axis.offset2, 4),
    };
    let num = pos2 - base;
    if num.rem_euclid(step) != 0 {
        return None;
    }
    axis_lattice_point(axis, num / step)
}

/// One complementation step on nearly-cruciform parameters (a = c):
/// (m, n, a, b, d) becomes (m+1, n-1, a+1, b-1, d-1) with exponent
/// t = n - 2a - 2, meaning M(D_{m,n}) = 2^t M(D_{m+1,n-1}).
pub fn complement_params(
    m: i64,
    n: i64,
    a: i64,
    b: i64,
    d: i64,
) -> ((i64, i64, i64, i64, i64), i64) {
    ((m + 1, n - 1, a + 1, b - 1, d - 1), n - 2 * a - 2)
}
