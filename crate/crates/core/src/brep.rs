//! B-rep graph data model: topology (vertices, edges, loops, faces), per-entity
//! analytic geometry with precomputed surface/curve samples, and validation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::geom::{BBox, Vec3};
use crate::math;

/// Samples stored per face.
pub const FACE_SAMPLES: usize = 64;
/// Samples stored per edge.
pub const EDGE_SAMPLES: usize = 16;
/// Fixed width of the per-entity parameter vector.
pub const PARAMS_LEN: usize = 16;

/// Primary entity kinds. Loops are graph nodes but never match targets, so
/// they are not a kind here. The declared order (faces first) is the
/// canonical ordering used for tie-breaking throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Face,
    Edge,
    Vertex,
}

impl EntityKind {
    pub const ALL: [EntityKind; 3] = [EntityKind::Face, EntityKind::Edge, EntityKind::Vertex];

    pub fn name(self) -> &'static str {
        match self {
            EntityKind::Face => "face",
            EntityKind::Edge => "edge",
            EntityKind::Vertex => "vertex",
        }
    }
}

/// Reference to one primary entity of a B-rep graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityRef {
    pub kind: EntityKind,
    pub index: usize,
}

impl EntityRef {
    pub const fn new(kind: EntityKind, index: usize) -> Self {
        EntityRef { kind, index }
    }

    pub const fn face(index: usize) -> Self {
        EntityRef::new(EntityKind::Face, index)
    }

    pub const fn edge(index: usize) -> Self {
        EntityRef::new(EntityKind::Edge, index)
    }

    pub const fn vertex(index: usize) -> Self {
        EntityRef::new(EntityKind::Vertex, index)
    }
}

/// Analytic geometry classes. Surfaces for faces, curves for edges, `Point`
/// for vertices. `Freeform` is reserved for geometry without a parametric
/// form; it carries zero params and is compared through samples only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeomClass {
    Plane,
    Cylinder,
    Cone,
    Sphere,
    Torus,
    Line,
    Circle,
    Arc,
    Ellipse,
    Point,
    Freeform,
}

impl GeomClass {
    pub const ALL: [GeomClass; 11] = [
        GeomClass::Plane,
        GeomClass::Cylinder,
        GeomClass::Cone,
        GeomClass::Sphere,
        GeomClass::Torus,
        GeomClass::Line,
        GeomClass::Circle,
        GeomClass::Arc,
        GeomClass::Ellipse,
        GeomClass::Point,
        GeomClass::Freeform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeomClass::Plane => "plane",
            GeomClass::Cylinder => "cylinder",
            GeomClass::Cone => "cone",
            GeomClass::Sphere => "sphere",
            GeomClass::Torus => "torus",
            GeomClass::Line => "line",
            GeomClass::Circle => "circle",
            GeomClass::Arc => "arc",
            GeomClass::Ellipse => "ellipse",
            GeomClass::Point => "point",
            GeomClass::Freeform => "freeform",
        }
    }

    pub fn from_name(s: &str) -> Option<GeomClass> {
        GeomClass::ALL.iter().copied().find(|c| c.name() == s)
    }

    /// Slot in the 10-wide one-hot encoding; `Freeform` has no slot.
    pub fn one_hot_slot(self) -> Option<usize> {
        match self {
            GeomClass::Plane => Some(0),
            GeomClass::Cylinder => Some(1),
            GeomClass::Cone => Some(2),
            GeomClass::Sphere => Some(3),
            GeomClass::Torus => Some(4),
            GeomClass::Line => Some(5),
            GeomClass::Circle => Some(6),
            GeomClass::Arc => Some(7),
            GeomClass::Ellipse => Some(8),
            GeomClass::Point => Some(9),
            GeomClass::Freeform => None,
        }
    }

    pub fn is_surface(self) -> bool {
        matches!(
            self,
            GeomClass::Plane
                | GeomClass::Cylinder
                | GeomClass::Cone
                | GeomClass::Sphere
                | GeomClass::Torus
                | GeomClass::Freeform
        )
    }

    pub fn is_curve(self) -> bool {
        matches!(
            self,
            GeomClass::Line
                | GeomClass::Circle
                | GeomClass::Arc
                | GeomClass::Ellipse
                | GeomClass::Freeform
        )
    }
}

/// Meaning of a parameter lane, used for normalization and for tolerance
/// comparisons. `Dir` lanes come in unit-length triples and flip together
/// when a class has an orientation symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lane {
    /// World position component; normalized against the frame.
    Pos,
    /// Unit direction component; compared up to a global sign.
    Dir,
    /// Length or radius; scaled by the frame diagonal.
    Len,
    /// Dimensionless scalar (angles, orientation sense).
    Raw,
    /// Unused, must be zero.
    Zero,
}

/// Lane table for a class. Conventions:
/// plane `[anchor, normal]`, cylinder/cone `[axis point, axis, radius|angle, sense]`,
/// sphere `[center, radius]`, torus `[center, axis, radii]`,
/// line `[point, direction]`, circle/arc/ellipse `[center, axis, radii, angles]`,
/// point `[position]`. Anchor points are the projection of the world origin
/// onto the surface/curve axis so that identical geometry always gets
/// identical params.
pub fn lanes(class: GeomClass) -> [Lane; PARAMS_LEN] {
    use Lane::*;
    match class {
        GeomClass::Plane => [
            Pos, Pos, Pos, Dir, Dir, Dir, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
            Zero,
        ],
        GeomClass::Cylinder => [
            Pos, Pos, Pos, Dir, Dir, Dir, Len, Raw, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
        ],
        GeomClass::Cone => [
            Pos, Pos, Pos, Dir, Dir, Dir, Raw, Raw, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
        ],
        GeomClass::Sphere => [
            Pos, Pos, Pos, Len, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
            Zero,
        ],
        GeomClass::Torus => [
            Pos, Pos, Pos, Dir, Dir, Dir, Len, Len, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
        ],
        GeomClass::Line => [
            Pos, Pos, Pos, Dir, Dir, Dir, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
            Zero,
        ],
        GeomClass::Circle => [
            Pos, Pos, Pos, Dir, Dir, Dir, Len, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
            Zero,
        ],
        GeomClass::Arc => [
            Pos, Pos, Pos, Dir, Dir, Dir, Len, Raw, Raw, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
        ],
        GeomClass::Ellipse => [
            Pos, Pos, Pos, Dir, Dir, Dir, Len, Len, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
        ],
        GeomClass::Point => [
            Pos, Pos, Pos, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero, Zero,
            Zero,
        ],
        GeomClass::Freeform => [Zero; PARAMS_LEN],
    }
}

/// Per-entity geometry: class, canonical params, and points sampled uniformly
/// over the trimmed entity together with area/length weights.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometrySignature {
    pub class: GeomClass,
    pub params: [f64; PARAMS_LEN],
    pub samples: Vec<Vec3>,
    pub weights: Vec<f64>,
    /// Weighted mean of the samples.
    pub centroid: Vec3,
    /// Surface area for faces, arc length for edges, 0 for vertices.
    pub measure: f64,
    pub local_bbox: BBox,
}

impl GeometrySignature {
    /// Build a face/edge signature. The measure is defined as the sequential
    /// sum of the weights so that serialization round-trips reproduce it
    /// bitwise.
    pub fn from_samples(
        class: GeomClass,
        params: [f64; PARAMS_LEN],
        samples: Vec<Vec3>,
        weights: Vec<f64>,
    ) -> Self {
        debug_assert_eq!(samples.len(), weights.len());
        let measure: f64 = weights.iter().sum();
        let mut centroid = Vec3::ZERO;
        let mut bbox = BBox::empty();
        for (p, w) in samples.iter().zip(&weights) {
            centroid = centroid + *p * *w;
            bbox.include(*p);
        }
        centroid = centroid * (1.0 / measure);
        GeometrySignature {
            class,
            params,
            samples,
            weights,
            centroid,
            measure,
            local_bbox: bbox,
        }
    }

    /// Signature of a vertex at `p`.
    pub fn vertex(p: Vec3) -> Self {
        let mut params = [0.0; PARAMS_LEN];
        params[0] = p.x;
        params[1] = p.y;
        params[2] = p.z;
        GeometrySignature {
            class: GeomClass::Point,
            params,
            samples: alloc::vec![p],
            weights: alloc::vec![1.0],
            centroid: p,
            measure: 0.0,
            local_bbox: BBox::of_point(p),
        }
    }

    /// Spread of the sample pattern: local bbox diagonal over sqrt(#samples).
    pub fn sample_spacing(&self) -> f64 {
        self.local_bbox.diagonal() / math::sqrt(self.samples.len() as f64)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub geom: GeometrySignature,
}

impl Vertex {
    pub fn new(p: Vec3) -> Self {
        Vertex {
            geom: GeometrySignature::vertex(p),
        }
    }

    pub fn pos(&self) -> Vec3 {
        self.geom.samples[0]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub geom: GeometrySignature,
    /// Endpoint vertex indices, or `None` for a closed edge (full circle).
    pub vertices: Option<(usize, usize)>,
}

/// One step of a loop cycle: an edge index plus the direction it is
/// traversed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopEdge {
    pub edge: usize,
    pub reversed: bool,
}

/// Ordered cycle of edges bounding a face, stored counterclockwise with
/// respect to the face's outward normal.
#[derive(Clone, Debug, PartialEq)]
pub struct Loop {
    pub outer: bool,
    pub edges: Vec<LoopEdge>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Face {
    pub geom: GeometrySignature,
    pub loops: Vec<usize>,
}

/// Full topological graph of one solid, immutable after construction.
#[derive(Clone, Debug, PartialEq)]
pub struct BRepGraph {
    pub model_id: String,
    pub bbox: BBox,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub loops: Vec<Loop>,
    pub faces: Vec<Face>,
}

impl BRepGraph {
    pub fn kind_count(&self, kind: EntityKind) -> usize {
        match kind {
            EntityKind::Face => self.faces.len(),
            EntityKind::Edge => self.edges.len(),
            EntityKind::Vertex => self.vertices.len(),
        }
    }

    /// Total primary entities (faces + edges + vertices).
    pub fn primary_count(&self) -> usize {
        self.faces.len() + self.edges.len() + self.vertices.len()
    }

    pub fn signature(&self, r: EntityRef) -> &GeometrySignature {
        match r.kind {
            EntityKind::Face => &self.faces[r.index].geom,
            EntityKind::Edge => &self.edges[r.index].geom,
            EntityKind::Vertex => &self.vertices[r.index].geom,
        }
    }

    /// All primary entity refs in canonical order.
    pub fn entity_refs(&self) -> Vec<EntityRef> {
        let mut out = Vec::with_capacity(self.primary_count());
        for kind in EntityKind::ALL {
            for i in 0..self.kind_count(kind) {
                out.push(EntityRef::new(kind, i));
            }
        }
        out
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::build(self)
    }

    /// Check every structural and geometric invariant; one description per
    /// violation, empty when the graph is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let diag = self.bbox.diagonal();
        let tol = 1e-9 * diag.max(1.0);

        for (i, e) in self.edges.iter().enumerate() {
            if let Some((a, b)) = e.vertices {
                if a >= self.vertices.len() || b >= self.vertices.len() {
                    out.push(format!("edge {i}: vertex index out of range"));
                }
            }
            if !e.geom.class.is_curve() {
                out.push(format!("edge {i}: class {} is not a curve", e.geom.class.name()));
            }
            self.check_signature(&mut out, &format!("edge {i}"), &e.geom, EDGE_SAMPLES, tol);
        }

        for (i, l) in self.loops.iter().enumerate() {
            if l.edges.is_empty() {
                out.push(format!("loop {i}: empty edge cycle"));
                continue;
            }
            if l.edges.iter().any(|le| le.edge >= self.edges.len()) {
                out.push(format!("loop {i}: edge index out of range"));
                continue;
            }
            let closed_count = l
                .edges
                .iter()
                .filter(|le| self.edges[le.edge].vertices.is_none())
                .count();
            if closed_count > 0 {
                if l.edges.len() != 1 {
                    out.push(format!("loop {i}: closed edge in a multi-edge cycle"));
                }
                continue;
            }
            for k in 0..l.edges.len() {
                let cur = l.edges[k];
                let nxt = l.edges[(k + 1) % l.edges.len()];
                let (cs, ce) = self.edges[cur.edge].vertices.unwrap();
                let (ns, ne) = self.edges[nxt.edge].vertices.unwrap();
                let cur_end = if cur.reversed { cs } else { ce };
                let nxt_start = if nxt.reversed { ne } else { ns };
                if cur_end != nxt_start {
                    out.push(format!("loop {i}: cycle not closed between steps {k} and {}", (k + 1) % l.edges.len()));
                    break;
                }
            }
        }

        let mut loop_parents = alloc::vec![0usize; self.loops.len()];
        for (i, f) in self.faces.iter().enumerate() {
            if f.loops.is_empty() {
                out.push(format!("face {i}: no loops"));
            }
            let mut outer = 0;
            for &li in &f.loops {
                if li >= self.loops.len() {
                    out.push(format!("face {i}: loop index out of range"));
                    continue;
                }
                loop_parents[li] += 1;
                if self.loops[li].outer {
                    outer += 1;
                }
            }
            if !f.loops.is_empty() && outer == 0 {
                out.push(format!("face {i}: no outer loop"));
            }
            if outer > 1 {
                out.push(format!("face {i}: {outer} outer loops"));
            }
            if !f.geom.class.is_surface() {
                out.push(format!("face {i}: class {} is not a surface", f.geom.class.name()));
            }
            self.check_signature(&mut out, &format!("face {i}"), &f.geom, FACE_SAMPLES, tol);
        }
        for (li, &n) in loop_parents.iter().enumerate() {
            if n != 1 {
                out.push(format!("loop {li}: referenced by {n} faces"));
            }
        }

        for (i, v) in self.vertices.iter().enumerate() {
            if v.geom.class != GeomClass::Point {
                out.push(format!("vertex {i}: class is not point"));
            }
            if v.geom.samples.len() != 1 {
                out.push(format!("vertex {i}: expected 1 sample"));
            }
            if !self.bbox.contains(v.pos(), tol) {
                out.push(format!("vertex {i}: position outside bbox"));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.geom.samples.iter().any(|p| !self.bbox.contains(*p, tol)) {
                out.push(format!("edge {i}: sample outside bbox"));
            }
        }
        for (i, f) in self.faces.iter().enumerate() {
            if f.geom.samples.iter().any(|p| !self.bbox.contains(*p, tol)) {
                out.push(format!("face {i}: sample outside bbox"));
            }
        }

        out
    }

    fn check_signature(
        &self,
        out: &mut Vec<String>,
        path: &str,
        g: &GeometrySignature,
        expect_samples: usize,
        tol: f64,
    ) {
        if g.samples.len() != expect_samples {
            out.push(format!(
                "{path}: expected {expect_samples} samples, found {}",
                g.samples.len()
            ));
            return;
        }
        if g.weights.len() != g.samples.len() {
            out.push(format!("{path}: weights/samples length mismatch"));
            return;
        }
        if g.params.iter().any(|x| !x.is_finite())
            || g.samples.iter().any(|p| !p.x.is_finite() || !p.y.is_finite() || !p.z.is_finite())
            || !g.measure.is_finite()
        {
            out.push(format!("{path}: non-finite value"));
            return;
        }
        if g.weights.iter().any(|w| *w <= 0.0) {
            out.push(format!("{path}: non-positive sample weight"));
        }
        let sum: f64 = g.weights.iter().sum();
        if (sum - g.measure).abs() > 1e-9 * g.measure.abs().max(1.0) {
            out.push(format!("{path}: weights do not sum to measure"));
        }
        let mut c = Vec3::ZERO;
        for (p, w) in g.samples.iter().zip(&g.weights) {
            c = c + *p * *w;
        }
        c = c * (1.0 / sum);
        if c.dist(g.centroid) > tol {
            out.push(format!("{path}: centroid does not match sample mean"));
        }
        let table = lanes(g.class);
        let mut k = 0;
        while k < PARAMS_LEN {
            if table[k] == Lane::Dir {
                let d = Vec3::new(g.params[k], g.params[k + 1], g.params[k + 2]);
                if (d.norm() - 1.0).abs() > 1e-9 {
                    out.push(format!("{path}: direction params not unit length"));
                }
                k += 3;
            } else {
                if table[k] == Lane::Zero && g.params[k] != 0.0 {
                    out.push(format!("{path}: nonzero value in unused param lane {k}"));
                }
                k += 1;
            }
        }
    }
}

/// Derived adjacency tables. Index lists are sorted so that any aggregation
/// over neighbors runs in a canonical order.
#[derive(Clone, Debug)]
pub struct Adjacency {
    pub vertex_edges: Vec<Vec<usize>>,
    pub edge_loops: Vec<Vec<usize>>,
    pub edge_faces: Vec<Vec<usize>>,
    pub loop_face: Vec<usize>,
    pub face_neighbors: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn build(g: &BRepGraph) -> Self {
        let mut vertex_edges = alloc::vec![Vec::new(); g.vertices.len()];
        for (ei, e) in g.edges.iter().enumerate() {
            if let Some((a, b)) = e.vertices {
                vertex_edges[a].push(ei);
                if b != a {
                    vertex_edges[b].push(ei);
                }
            }
        }
        let mut edge_loops = alloc::vec![Vec::new(); g.edges.len()];
        for (li, l) in g.loops.iter().enumerate() {
            for le in &l.edges {
                edge_loops[le.edge].push(li);
            }
        }
        let mut loop_face = alloc::vec![usize::MAX; g.loops.len()];
        for (fi, f) in g.faces.iter().enumerate() {
            for &li in &f.loops {
                loop_face[li] = fi;
            }
        }
        let mut edge_faces = alloc::vec![Vec::new(); g.edges.len()];
        for (ei, ls) in edge_loops.iter().enumerate() {
            for &li in ls {
                let fi = loop_face[li];
                if fi != usize::MAX && !edge_faces[ei].contains(&fi) {
                    edge_faces[ei].push(fi);
                }
            }
        }
        let mut face_neighbors = alloc::vec![Vec::new(); g.faces.len()];
        for fs in &edge_faces {
            for (i, &a) in fs.iter().enumerate() {
                for &b in &fs[i + 1..] {
                    if !face_neighbors[a].contains(&b) {
                        face_neighbors[a].push(b);
                    }
                    if !face_neighbors[b].contains(&a) {
                        face_neighbors[b].push(a);
                    }
                }
            }
        }
        for v in vertex_edges.iter_mut() {
            v.sort_unstable();
            v.dedup();
        }
        for v in edge_loops.iter_mut() {
            v.sort_unstable();
        }
        for v in edge_faces.iter_mut() {
            v.sort_unstable();
        }
        for v in face_neighbors.iter_mut() {
            v.sort_unstable();
        }
        Adjacency {
            vertex_edges,
            edge_loops,
            edge_faces,
            loop_face,
            face_neighbors,
        }
    }
}
