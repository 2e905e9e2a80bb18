//! Numeric per-entity feature vectors for the learned scorer. Both B-reps of
//! a pair are normalized against the *original* model's bounding box so the
//! encodings stay comparable across the two versions.

use alloc::vec::Vec;

use crate::brep::{lanes, BRepGraph, EntityKind, GeometrySignature, Lane, PARAMS_LEN};
use crate::geom::Vec3;
use crate::math;

/// Width of the feature vector of a face/edge/vertex.
pub const PRIMARY_FEATURES: usize = 41;
/// Width of the feature vector of a loop.
pub const LOOP_FEATURES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum FeatureError {
    #[error("normalization frame has non-positive diagonal")]
    DegenerateFrame,
}

/// Shared normalization frame: center and diagonal of the original B-rep's
/// bounding box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormFrame {
    pub center: Vec3,
    pub diagonal: f64,
}

impl NormFrame {
    pub fn new(center: Vec3, diagonal: f64) -> Result<Self, FeatureError> {
        if !(diagonal > 0.0) {
            return Err(FeatureError::DegenerateFrame);
        }
        Ok(NormFrame { center, diagonal })
    }

    pub fn of_graph(g: &BRepGraph) -> Result<Self, FeatureError> {
        NormFrame::new(g.bbox.center(), g.bbox.diagonal())
    }
}

/// Per-entity feature vectors of one graph.
#[derive(Clone, Debug)]
pub struct FeatureTable {
    pub vertices: Vec<[f64; PRIMARY_FEATURES]>,
    pub edges: Vec<[f64; PRIMARY_FEATURES]>,
    pub faces: Vec<[f64; PRIMARY_FEATURES]>,
    pub loops: Vec<[f64; LOOP_FEATURES]>,
}

impl FeatureTable {
    pub fn primary(&self, kind: EntityKind, index: usize) -> &[f64; PRIMARY_FEATURES] {
        match kind {
            EntityKind::Face => &self.faces[index],
            EntityKind::Edge => &self.edges[index],
            EntityKind::Vertex => &self.vertices[index],
        }
    }
}

/// Extract one feature vector per entity (loops included). Deterministic and
/// pure; translating both models and the frame center together leaves the
/// output unchanged up to floating-point rounding.
pub fn extract_features(g: &BRepGraph, frame: &NormFrame) -> Result<FeatureTable, FeatureError> {
    if !(frame.diagonal > 0.0) {
        return Err(FeatureError::DegenerateFrame);
    }
    let adj = g.adjacency();

    // inner/outer loop membership for edges, propagated to vertices
    let mut edge_ctx = alloc::vec![[0.0f64; 2]; g.edges.len()];
    for (ei, ls) in adj.edge_loops.iter().enumerate() {
        for &li in ls {
            if g.loops[li].outer {
                edge_ctx[ei][1] = 1.0;
            } else {
                edge_ctx[ei][0] = 1.0;
            }
        }
    }
    let mut vertex_ctx = alloc::vec![[0.0f64; 2]; g.vertices.len()];
    for (vi, es) in adj.vertex_edges.iter().enumerate() {
        for &ei in es {
            vertex_ctx[vi][0] = vertex_ctx[vi][0].max(edge_ctx[ei][0]);
            vertex_ctx[vi][1] = vertex_ctx[vi][1].max(edge_ctx[ei][1]);
        }
    }

    let faces = g
        .faces
        .iter()
        .map(|f| primary_vector(EntityKind::Face, &f.geom, [0.0, 0.0], frame))
        .collect();
    let edges = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| primary_vector(EntityKind::Edge, &e.geom, edge_ctx[i], frame))
        .collect();
    let vertices = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| primary_vector(EntityKind::Vertex, &v.geom, vertex_ctx[i], frame))
        .collect();
    let loops = g
        .loops
        .iter()
        .map(|l| {
            let inner = if l.outer { 0.0 } else { 1.0 };
            let outer = if l.outer { 1.0 } else { 0.0 };
            [inner, outer, math::ln_1p(l.edges.len() as f64)]
        })
        .collect();

    Ok(FeatureTable {
        vertices,
        edges,
        faces,
        loops,
    })
}

fn primary_vector(
    kind: EntityKind,
    geom: &GeometrySignature,
    loop_ctx: [f64; 2],
    frame: &NormFrame,
) -> [f64; PRIMARY_FEATURES] {
    let mut out = [0.0; PRIMARY_FEATURES];
    let inv = 1.0 / frame.diagonal;

    let kind_slot = match kind {
        EntityKind::Face => 0,
        EntityKind::Edge => 1,
        EntityKind::Vertex => 2,
    };
    out[kind_slot] = 1.0;

    if let Some(slot) = geom.class.one_hot_slot() {
        out[3 + slot] = 1.0;
    }

    let table = lanes(geom.class);
    let mut axis = 0usize;
    for k in 0..PARAMS_LEN {
        let v = geom.params[k];
        out[13 + k] = match table[k] {
            Lane::Pos => {
                let c = frame.center.component(axis % 3);
                axis += 1;
                (v - c) * inv
            }
            Lane::Dir => v,
            Lane::Len => v * inv,
            Lane::Raw => v,
            Lane::Zero => 0.0,
        };
        if table[k] != Lane::Pos {
            axis = 0;
        }
    }

    let c = geom.centroid - frame.center;
    out[29] = c.x * inv;
    out[30] = c.y * inv;
    out[31] = c.z * inv;

    let lo = geom.local_bbox.min - frame.center;
    let hi = geom.local_bbox.max - frame.center;
    out[32] = lo.x * inv;
    out[33] = lo.y * inv;
    out[34] = lo.z * inv;
    out[35] = hi.x * inv;
    out[36] = hi.y * inv;
    out[37] = hi.z * inv;

    out[38] = math::ln_1p(geom.measure);

    out[39] = loop_ctx[0];
    out[40] = loop_ctx[1];

    out
}
