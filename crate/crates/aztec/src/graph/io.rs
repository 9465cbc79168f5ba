//! Stable JSON serialization of graphs.
//!
//! Format (stable key order, vertices and edges lexicographically sorted):
//! `{"vertices":[{"x":0,"y":0},...],"edges":[{"u":[x,y],"v":[x,y],
//! "w_mantissa":"<decimal>","w_exp2":k},...]}`

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{EmbeddedPlanarGraph, GraphError, GridPoint};
use crate::Weight;

#[derive(Serialize, Deserialize)]
struct VertexJson {
    x: i64,
    y: i64,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    u: [i64; 2],
    v: [i64; 2],
    w_mantissa: String,
    w_exp2: u32,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

pub fn to_json(g: &EmbeddedPlanarGraph) -> String {
    let doc = GraphJson {
        vertices: g
            .vertices()
            .iter()
            .map(|p| VertexJson { x: p.x, y: p.y })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                u: [e.u.x, e.u.y],
                v: [e.v.x, e.v.y],
                w_mantissa: e.w.mantissa().to_string(),
                w_exp2: e.w.exp2(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<EmbeddedPlanarGraph, String> {
    let doc: GraphJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| GridPoint::new(v.x, v.y))
        .collect();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        let m: BigInt = e
            .w_mantissa
            .parse()
            .map_err(|_| format!("bad mantissa {:?}", e.w_mantissa))?;
        edges.push((
            GridPoint::new(e.u[0], e.u[1]),
            GridPoint::new(e.v[0], e.v[1]),
            Weight::new(m, e.w_exp2),
        ));
    }
    EmbeddedPlanarGraph::build(vertices, edges).map_err(|e: GraphError| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_stability() {
        let g = EmbeddedPlanarGraph::from_unit_points([
            GridPoint::new(0, 0),
            GridPoint::new(1, 0),
            GridPoint::new(0, 1),
            GridPoint::new(1, 1),
        ]);
        let s1 = to_json(&g);
        let g2 = from_json(&s1).unwrap();
        assert_eq!(g, g2);
        assert_eq!(s1, to_json(&g2));
        assert!(s1.starts_with("{\"vertices\":[{\"x\":0,\"y\":0}"));
    }
}
