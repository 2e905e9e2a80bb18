//! Persistent entity names. A name survives every edit that keeps the entity
//! alive, so ground-truth correspondence between two synthesized models is
//! simply the intersection of their name sets.

use super::recipe::BlockEdgeId;
use crate::brep::EntityKind;

/// Name of one primary entity in a synthesized model. The derived order
/// fixes entity indexing inside each kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Name {
    // --- vertices ---
    BlockCorner { sx: bool, sy: bool, sz: bool },
    /// Bevel corner: `end` = low/high along the chamfered edge's axis,
    /// `side` = 0 on the first adjacent face, 1 on the second.
    ChamferVert { ci: u32, end: u8, side: u8 },
    FeatBaseV { fi: u32, k: u8 },
    FeatTopV { fi: u32, k: u8 },

    // --- edges ---
    BlockEdge { axis: u8, s1: bool, s2: bool },
    /// Long bevel edge lying on adjacent face 0/1.
    ChamferLong { ci: u32, side: u8 },
    /// Short bevel edge on the end face at the low/high end.
    ChamferEnd { ci: u32, end: u8 },
    /// Rect base edges k=0..4; circular base/rim circle uses k=0.
    FeatBaseE { fi: u32, k: u8 },
    FeatTopE { fi: u32, k: u8 },
    FeatVertE { fi: u32, k: u8 },
    /// Bottom circle of a blind hole.
    FeatBottomE { fi: u32 },
    /// Exit rim of a through hole on the opposite face.
    FeatExitE { fi: u32 },

    // --- faces ---
    BlockFace { dir: u8 },
    ChamferFace { ci: u32 },
    /// Rect boss sides k=0..4; cylindrical wall uses k=0.
    FeatSide { fi: u32, k: u8 },
    FeatTop { fi: u32 },
    /// Bottom disk of a blind hole.
    FeatBottom { fi: u32 },
}

impl Name {
    pub fn kind(self) -> EntityKind {
        match self {
            Name::BlockCorner { .. }
            | Name::ChamferVert { .. }
            | Name::FeatBaseV { .. }
            | Name::FeatTopV { .. } => EntityKind::Vertex,
            Name::BlockEdge { .. }
            | Name::ChamferLong { .. }
            | Name::ChamferEnd { .. }
            | Name::FeatBaseE { .. }
            | Name::FeatTopE { .. }
            | Name::FeatVertE { .. }
            | Name::FeatBottomE { .. }
            | Name::FeatExitE { .. } => EntityKind::Edge,
            Name::BlockFace { .. }
            | Name::ChamferFace { .. }
            | Name::FeatSide { .. }
            | Name::FeatTop { .. }
            | Name::FeatBottom { .. } => EntityKind::Face,
        }
    }

    pub fn block_edge(id: BlockEdgeId) -> Name {
        Name::BlockEdge {
            axis: id.axis,
            s1: id.s1,
            s2: id.s2,
        }
    }

    pub fn block_corner(c: [bool; 3]) -> Name {
        Name::BlockCorner {
            sx: c[0],
            sy: c[1],
            sz: c[2],
        }
    }
}
