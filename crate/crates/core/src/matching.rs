//! One-to-one, kind-consistent sets of entity correspondences between an
//! original and an updated B-rep.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::brep::{EntityKind, EntityRef};

/// How a pair entered the matching.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Provenance {
    /// Coincident geometry found by the bootstrap.
    Exact,
    /// Identical underlying geometry with sufficiently overlapping trims.
    Overlap,
    /// Adjacency-signature propagation.
    Propagated,
    /// Scored by the learned model; carries the score at insertion time.
    Learned(f64),
    /// Tracked synthetic ground truth.
    GroundTruth,
}

impl Provenance {
    pub fn score(&self) -> Option<f64> {
        match self {
            Provenance::Learned(s) => Some(*s),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatchPair {
    pub orig: EntityRef,
    pub upd: EntityRef,
    pub provenance: Provenance,
    /// Insertion sequence number.
    pub order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("pair kinds differ")]
    KindMismatch,
    #[error("original entity already matched")]
    OrigTaken,
    #[error("updated entity already matched")]
    UpdTaken,
    #[error("learned score outside (0, 1]")]
    BadScore,
}

/// Set of matched pairs, one-to-one on both sides, faces with faces, edges
/// with edges, vertices with vertices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Matching {
    pub orig_model: String,
    pub upd_model: String,
    pairs: Vec<MatchPair>,
    by_orig: BTreeMap<EntityRef, usize>,
    by_upd: BTreeMap<EntityRef, usize>,
}

impl Matching {
    pub fn new(orig_model: impl Into<String>, upd_model: impl Into<String>) -> Self {
        Matching {
            orig_model: orig_model.into(),
            upd_model: upd_model.into(),
            pairs: Vec::new(),
            by_orig: BTreeMap::new(),
            by_upd: BTreeMap::new(),
        }
    }

    pub fn insert(
        &mut self,
        orig: EntityRef,
        upd: EntityRef,
        provenance: Provenance,
    ) -> Result<(), MatchingError> {
        if orig.kind != upd.kind {
            return Err(MatchingError::KindMismatch);
        }
        if let Provenance::Learned(s) = provenance {
            if !(s > 0.0 && s <= 1.0) {
                return Err(MatchingError::BadScore);
            }
        }
        if self.by_orig.contains_key(&orig) {
            return Err(MatchingError::OrigTaken);
        }
        if self.by_upd.contains_key(&upd) {
            return Err(MatchingError::UpdTaken);
        }
        let order = self.pairs.len() as u32;
        self.by_orig.insert(orig, self.pairs.len());
        self.by_upd.insert(upd, self.pairs.len());
        self.pairs.push(MatchPair {
            orig,
            upd,
            provenance,
            order,
        });
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[MatchPair] {
        &self.pairs
    }

    pub fn contains_orig(&self, r: EntityRef) -> bool {
        self.by_orig.contains_key(&r)
    }

    pub fn contains_upd(&self, r: EntityRef) -> bool {
        self.by_upd.contains_key(&r)
    }

    pub fn upd_for_orig(&self, r: EntityRef) -> Option<EntityRef> {
        self.by_orig.get(&r).map(|&i| self.pairs[i].upd)
    }

    pub fn orig_for_upd(&self, r: EntityRef) -> Option<EntityRef> {
        self.by_upd.get(&r).map(|&i| self.pairs[i].orig)
    }

    pub fn kind_count(&self, kind: EntityKind) -> usize {
        self.pairs.iter().filter(|p| p.orig.kind == kind).count()
    }

    /// Pairs ordered by original ref; the canonical order for serialization
    /// and deterministic merges.
    pub fn sorted_by_orig(&self) -> Vec<MatchPair> {
        let mut v = self.pairs.clone();
        v.sort_by_key(|p| p.orig);
        v
    }

    /// Union with `other`, skipping pairs whose endpoints are already taken.
    /// Additions are applied in `other`'s orig-ref order.
    pub fn union(&self, other: &Matching) -> Matching {
        let mut out = self.clone();
        for p in other.sorted_by_orig() {
            if !out.contains_orig(p.orig) && !out.contains_upd(p.upd) {
                out.insert(p.orig, p.upd, p.provenance).expect("kind checked");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_kind_mismatch_and_double_booking() {
        let mut m = Matching::new("a", "b");
        m.insert(EntityRef::face(0), EntityRef::face(1), Provenance::Exact)
            .unwrap();
        assert_eq!(
            m.insert(EntityRef::face(1), EntityRef::edge(0), Provenance::Exact),
            Err(MatchingError::KindMismatch)
        );
        assert_eq!(
            m.insert(EntityRef::face(0), EntityRef::face(2), Provenance::Exact),
            Err(MatchingError::OrigTaken)
        );
        assert_eq!(
            m.insert(EntityRef::face(2), EntityRef::face(1), Provenance::Exact),
            Err(MatchingError::UpdTaken)
        );
    }

    #[test]
    fn learned_scores_validated() {
        let mut m = Matching::new("a", "b");
        assert_eq!(
            m.insert(
                EntityRef::face(0),
                EntityRef::face(0),
                Provenance::Learned(0.0)
            ),
            Err(MatchingError::BadScore)
        );
        m.insert(
            EntityRef::face(0),
            EntityRef::face(0),
            Provenance::Learned(1.0),
        )
        .unwrap();
    }

    #[test]
    fn union_is_conservative() {
        let mut a = Matching::new("a", "b");
        a.insert(EntityRef::face(0), EntityRef::face(0), Provenance::Exact)
            .unwrap();
        let mut b = Matching::new("a", "b");
        b.insert(EntityRef::face(1), EntityRef::face(0), Provenance::Overlap)
            .unwrap();
        b.insert(EntityRef::face(2), EntityRef::face(2), Provenance::Overlap)
            .unwrap();
        let u = a.union(&b);
        assert_eq!(u.len(), 2);
        assert!(u.contains_orig(EntityRef::face(2)));
        assert!(!u.contains_orig(EntityRef::face(1)));
    }
}
