//! Parametric construction recipe for generated solids: an axis-aligned block
//! carrying boss/hole features on its faces and chamfered block edges. The
//! B-rep graph is synthesized from the recipe analytically, so entity
//! identity through edits is tracked by construction.

use alloc::vec::Vec;

use crate::geom::Vec3;

/// One of the six block faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FaceDir {
    XNeg,
    XPos,
    YNeg,
    YPos,
    ZNeg,
    ZPos,
}

impl FaceDir {
    pub const ALL: [FaceDir; 6] = [
        FaceDir::XNeg,
        FaceDir::XPos,
        FaceDir::YNeg,
        FaceDir::YPos,
        FaceDir::ZNeg,
        FaceDir::ZPos,
    ];

    pub fn axis(self) -> usize {
        match self {
            FaceDir::XNeg | FaceDir::XPos => 0,
            FaceDir::YNeg | FaceDir::YPos => 1,
            FaceDir::ZNeg | FaceDir::ZPos => 2,
        }
    }

    pub fn positive(self) -> bool {
        matches!(self, FaceDir::XPos | FaceDir::YPos | FaceDir::ZPos)
    }

    pub fn opposite(self) -> FaceDir {
        match self {
            FaceDir::XNeg => FaceDir::XPos,
            FaceDir::XPos => FaceDir::XNeg,
            FaceDir::YNeg => FaceDir::YPos,
            FaceDir::YPos => FaceDir::YNeg,
            FaceDir::ZNeg => FaceDir::ZPos,
            FaceDir::ZPos => FaceDir::ZNeg,
        }
    }

    pub fn normal(self) -> Vec3 {
        let mut n = [0.0; 3];
        n[self.axis()] = if self.positive() { 1.0 } else { -1.0 };
        Vec3::from_array(n)
    }

    /// In-plane axes (u, v) chosen so that u x v equals the outward normal.
    pub fn uv_axes(self) -> (usize, usize) {
        match self {
            FaceDir::XNeg => (2, 1),
            FaceDir::XPos => (1, 2),
            FaceDir::YNeg => (0, 2),
            FaceDir::YPos => (2, 0),
            FaceDir::ZNeg => (1, 0),
            FaceDir::ZPos => (0, 1),
        }
    }

    pub fn index(self) -> u8 {
        FaceDir::ALL.iter().position(|d| *d == self).unwrap() as u8
    }

    pub fn from_index(i: u8) -> FaceDir {
        FaceDir::ALL[i as usize]
    }
}

/// One of the twelve block edges: direction axis plus the side flags of the
/// two remaining axes in ascending axis order (false = low side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockEdgeId {
    pub axis: u8,
    pub s1: bool,
    pub s2: bool,
}

impl BlockEdgeId {
    pub const ALL: [BlockEdgeId; 12] = {
        let mut out = [BlockEdgeId {
            axis: 0,
            s1: false,
            s2: false,
        }; 12];
        let mut i = 0;
        let mut axis = 0u8;
        while axis < 3 {
            let mut bits = 0u8;
            while bits < 4 {
                out[i] = BlockEdgeId {
                    axis,
                    s1: bits & 1 != 0,
                    s2: bits & 2 != 0,
                };
                i += 1;
                bits += 1;
            }
            axis += 1;
        }
        out
    };

    /// The two non-direction axes, ascending.
    pub fn cross_axes(self) -> (usize, usize) {
        match self.axis {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    }

    /// The two faces meeting along this edge, in canonical (sorted) order.
    pub fn adjacent_faces(self) -> (FaceDir, FaceDir) {
        let (a, b) = self.cross_axes();
        let fa = face_on(a, self.s1);
        let fb = face_on(b, self.s2);
        if fa <= fb {
            (fa, fb)
        } else {
            (fb, fa)
        }
    }

    /// Block corner at the given end (false = low along `axis`).
    pub fn corner_at(self, end: bool) -> [bool; 3] {
        let (a, b) = self.cross_axes();
        let mut c = [false; 3];
        c[self.axis as usize] = end;
        c[a] = self.s1;
        c[b] = self.s2;
        c
    }

    /// Does this edge touch the given block corner?
    pub fn touches_corner(self, c: [bool; 3]) -> bool {
        c == self.corner_at(false) || c == self.corner_at(true)
    }
}

pub fn face_on(axis: usize, positive: bool) -> FaceDir {
    match (axis, positive) {
        (0, false) => FaceDir::XNeg,
        (0, true) => FaceDir::XPos,
        (1, false) => FaceDir::YNeg,
        (1, true) => FaceDir::YPos,
        (2, false) => FaceDir::ZNeg,
        _ => FaceDir::ZPos,
    }
}

/// 2D footprint of a feature on its host face, in absolute (u, v) world
/// coordinates along the host's in-plane axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Footprint {
    Rect { hu: f64, hv: f64 },
    Circle { r: f64 },
}

impl Footprint {
    pub fn area(self) -> f64 {
        match self {
            Footprint::Rect { hu, hv } => 4.0 * hu * hv,
            Footprint::Circle { r } => crate::math::PI * r * r,
        }
    }

    /// Half-extents of the bounding rectangle.
    pub fn half_extents(self) -> (f64, f64) {
        match self {
            Footprint::Rect { hu, hv } => (hu, hv),
            Footprint::Circle { r } => (r, r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FeatureKind {
    Boss,
    Hole,
}

/// A boss extruded outward from a block face, or a circular hole cut into it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Feature {
    pub host: FaceDir,
    pub kind: FeatureKind,
    pub shape: Footprint,
    /// Footprint center in the host face's (u, v) world coordinates.
    pub center: (f64, f64),
    /// Boss height or blind-hole depth, along the host normal.
    pub extent: f64,
    /// Through-holes pierce the opposite face; `extent` is ignored.
    pub through: bool,
}

/// A 45-degree planar bevel replacing one straight block edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chamfer {
    pub edge: BlockEdgeId,
    pub offset: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Recipe {
    pub lo: Vec3,
    pub hi: Vec3,
    pub features: Vec<Feature>,
    pub chamfers: Vec<Chamfer>,
}

/// Margin (fraction of the smaller face extent) kept between footprints,
/// face borders, and chamfer cuts.
pub const REL_MARGIN: f64 = 0.05;
/// Smallest block dimension tolerated after deformations.
pub const MIN_DIM: f64 = 0.2;
/// Smallest boss height / hole depth.
pub const MIN_EXTENT: f64 = 0.05;

impl Recipe {
    pub fn block(lo: Vec3, hi: Vec3) -> Self {
        Recipe {
            lo,
            hi,
            features: Vec::new(),
            chamfers: Vec::new(),
        }
    }

    pub fn dims(&self) -> [f64; 3] {
        [
            self.hi.x - self.lo.x,
            self.hi.y - self.lo.y,
            self.hi.z - self.lo.z,
        ]
    }

    /// Coordinate of the plane of `face` along its normal axis.
    pub fn face_coord(&self, face: FaceDir) -> f64 {
        if face.positive() {
            self.hi.component(face.axis())
        } else {
            self.lo.component(face.axis())
        }
    }

    /// (u, v) extents of a face as ranges of absolute coordinates.
    pub fn face_bounds(&self, face: FaceDir) -> ((f64, f64), (f64, f64)) {
        let (ua, va) = face.uv_axes();
        (
            (self.lo.component(ua), self.hi.component(ua)),
            (self.lo.component(va), self.hi.component(va)),
        )
    }

    /// Block thickness behind a face (dimension along its normal axis).
    pub fn thickness(&self, face: FaceDir) -> f64 {
        self.dims()[face.axis()]
    }

    pub fn chamfer_on(&self, edge: BlockEdgeId) -> Option<usize> {
        self.chamfers.iter().position(|c| c.edge == edge)
    }

    /// Footprints that occupy area on `face`: hosted features plus exit
    /// openings of through-holes hosted on the opposite face. Returns
    /// (feature index, center, shape).
    pub fn face_footprints(&self, face: FaceDir) -> Vec<(usize, (f64, f64), Footprint)> {
        let mut out = Vec::new();
        for (i, f) in self.features.iter().enumerate() {
            if f.host == face {
                out.push((i, f.center, f.shape));
            } else if f.host == face.opposite() && f.through {
                // Opposite faces share one in-plane axis and swap the other;
                // express the exit footprint in this face's axes.
                let (ua, va) = face.uv_axes();
                let (hu, hv) = f.host.uv_axes();
                let c = |axis: usize| {
                    if axis == hu {
                        f.center.0
                    } else {
                        f.center.1
                    }
                };
                let center = (c(ua), c(va));
                out.push((i, center, f.shape));
            }
        }
        out
    }

    /// Validate every geometric constraint; `None` means the recipe is sound.
    pub fn check(&self) -> Option<&'static str> {
        let dims = self.dims();
        if dims.iter().any(|d| !(*d >= MIN_DIM)) {
            return Some("block dimension below minimum");
        }
        for f in &self.features {
            if f.kind == FeatureKind::Boss && f.through {
                return Some("boss cannot be through");
            }
            if let Footprint::Circle { r } = f.shape {
                if !(r > 0.0) {
                    return Some("non-positive radius");
                }
            }
            if let Footprint::Rect { hu, hv } = f.shape {
                if !(hu > 0.0 && hv > 0.0) {
                    return Some("non-positive rect extent");
                }
            }
            if !f.through {
                let t = self.thickness(f.host);
                if f.kind == FeatureKind::Hole && !(f.extent >= 0.05 * t && f.extent <= 0.85 * t) {
                    return Some("hole depth out of range");
                }
                if f.kind == FeatureKind::Boss && !(f.extent >= MIN_EXTENT) {
                    return Some("boss height below minimum");
                }
            }
            if f.through && f.kind == FeatureKind::Hole {
                if !matches!(f.shape, Footprint::Circle { .. }) {
                    return Some("through features must be circular");
                }
            }
        }
        for face in FaceDir::ALL {
            let rect = self.clear_rect(face);
            let fps = self.face_footprints(face);
            for (i, (_, c, s)) in fps.iter().enumerate() {
                let (hu, hv) = s.half_extents();
                if c.0 - hu < rect.0 .0 || c.0 + hu > rect.0 .1 || c.1 - hv < rect.1 .0
                    || c.1 + hv > rect.1 .1
                {
                    return Some("footprint outside clear area of face");
                }
                let m = self.margin(face);
                for (_, c2, s2) in &fps[i + 1..] {
                    let (hu2, hv2) = s2.half_extents();
                    let sep_u = (c.0 - c2.0).abs() - (hu + hu2);
                    let sep_v = (c.1 - c2.1).abs() - (hv + hv2);
                    if sep_u < m && sep_v < m {
                        return Some("footprints too close");
                    }
                }
            }
        }
        for (i, ch) in self.chamfers.iter().enumerate() {
            let dims = self.dims();
            let max_off = 0.2
                * dims
                    .iter()
                    .fold(f64::INFINITY, |a, d| if *d < a { *d } else { a });
            if !(ch.offset > 0.0 && ch.offset <= max_off) {
                return Some("chamfer offset out of range");
            }
            for other in &self.chamfers[i + 1..] {
                if other.edge == ch.edge {
                    return Some("duplicate chamfer edge");
                }
                for end in [false, true] {
                    if other.edge.touches_corner(ch.edge.corner_at(end)) {
                        return Some("chamfers share a block corner");
                    }
                }
            }
        }
        None
    }

    /// Region of `face` available for footprints: the face rectangle shrunk
    /// by its largest chamfer intrusion plus the separation margin.
    pub fn clear_rect(&self, face: FaceDir) -> ((f64, f64), (f64, f64)) {
        let ((u0, u1), (v0, v1)) = self.face_bounds(face);
        let mut cut: f64 = 0.0;
        for ch in &self.chamfers {
            let (fa, fb) = ch.edge.adjacent_faces();
            let touches_side = fa == face || fb == face;
            let touches_corner = ch.edge.axis as usize == face.axis();
            if touches_side || touches_corner {
                cut = cut.max(ch.offset);
            }
        }
        let m = cut + self.margin(face);
        ((u0 + m, u1 - m), (v0 + m, v1 - m))
    }

    /// Absolute separation margin used on `face`.
    pub fn margin(&self, face: FaceDir) -> f64 {
        let ((u0, u1), (v0, v1)) = self.face_bounds(face);
        REL_MARGIN * (u1 - u0).min(v1 - v0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_distinct_edges() {
        let mut all = BlockEdgeId::ALL.to_vec();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn uv_axes_right_handed() {
        for f in FaceDir::ALL {
            let (ua, va) = f.uv_axes();
            let mut u = [0.0; 3];
            u[ua] = 1.0;
            let mut v = [0.0; 3];
            v[va] = 1.0;
            let n = Vec3::from_array(u).cross(Vec3::from_array(v));
            assert_eq!(n, f.normal(), "face {f:?}");
        }
    }

    #[test]
    fn plain_block_is_valid() {
        let r = Recipe::block(Vec3::ZERO, Vec3::new(1.0, 2.0, 1.5));
        assert_eq!(r.check(), None);
    }

    #[test]
    fn adjacent_faces_of_edge() {
        let e = BlockEdgeId {
            axis: 1,
            s1: true,
            s2: true,
        };
        // axis=1 (Y): cross axes (0, 2) at high sides -> XPos, ZPos
        assert_eq!(e.adjacent_faces(), (FaceDir::XPos, FaceDir::ZPos));
    }

    #[test]
    fn through_hole_footprint_appears_on_opposite_face() {
        let mut r = Recipe::block(Vec3::ZERO, Vec3::new(2.0, 2.0, 2.0));
        r.features.push(Feature {
            host: FaceDir::ZPos,
            kind: FeatureKind::Hole,
            shape: Footprint::Circle { r: 0.2 },
            center: (1.0, 0.8),
            extent: 0.0,
            through: true,
        });
        assert_eq!(r.check(), None);
        let fps = r.face_footprints(FaceDir::ZNeg);
        assert_eq!(fps.len(), 1);
        // ZPos has (u,v) = (x,y); ZNeg has (u,v) = (y,x).
        assert_eq!(fps[0].1, (0.8, 1.0));
    }
}
