//! Tolerance-delta candidate retrieval over points via shifted uniform grids.
//!
//! D+1 grids with cell edge (D+1)*delta, grid g translated by g*delta along
//! every axis. Any two points within `delta` of each other share a cell in at
//! least one grid: along each axis, boundaries of distinct grids are at least
//! `delta` apart, so an interval of length `delta` is split by at most one of
//! the D+1 grids per axis, leaving at least one grid intact on all axes.
//! Co-celled candidates can still be up to (D+1)*sqrt(D)*delta apart, so
//! queries filter by exact distance afterwards.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::math;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("tolerance must be positive")]
    InvalidTolerance,
    #[error("duplicate point id {0}")]
    DuplicateId(usize),
}

/// Immutable after build; queries are read-only.
#[derive(Clone, Debug)]
pub struct ShiftedGridIndex<const D: usize> {
    delta: f64,
    grids: Vec<BTreeMap<[i64; D], Vec<usize>>>,
    points: Vec<(usize, [f64; D])>,
}

impl<const D: usize> ShiftedGridIndex<D> {
    /// Build an index over `(id, point)` pairs with tolerance `delta`.
    pub fn build(points: &[(usize, [f64; D])], delta: f64) -> Result<Self, GridError> {
        if !(delta > 0.0) {
            return Err(GridError::InvalidTolerance);
        }
        {
            let mut seen: Vec<usize> = points.iter().map(|(id, _)| *id).collect();
            seen.sort_unstable();
            for w in seen.windows(2) {
                if w[0] == w[1] {
                    return Err(GridError::DuplicateId(w[0]));
                }
            }
        }
        let mut grids = Vec::with_capacity(D + 1);
        for g in 0..=D {
            let mut map: BTreeMap<[i64; D], Vec<usize>> = BTreeMap::new();
            for (slot, (_, p)) in points.iter().enumerate() {
                map.entry(Self::cell_of(p, g, delta)).or_default().push(slot);
            }
            grids.push(map);
        }
        Ok(ShiftedGridIndex {
            delta,
            grids,
            points: points.to_vec(),
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Cell coordinates of `p` in grid `g`: floor((p - g*delta)/((D+1)*delta))
    /// per axis. Points exactly on a boundary fall in the higher cell.
    fn cell_of(p: &[f64; D], g: usize, delta: f64) -> [i64; D] {
        let cell = (D + 1) as f64 * delta;
        let shift = g as f64 * delta;
        let mut out = [0i64; D];
        for k in 0..D {
            out[k] = math::floor((p[k] - shift) / cell) as i64;
        }
        out
    }

    /// All stored ids co-celled with `p` in any grid, before distance
    /// filtering. Sorted ascending, deduplicated.
    pub fn query_prefilter(&self, p: &[f64; D]) -> Vec<usize> {
        let mut slots: Vec<usize> = Vec::new();
        for (g, map) in self.grids.iter().enumerate() {
            if let Some(cell) = map.get(&Self::cell_of(p, g, self.delta)) {
                slots.extend_from_slice(cell);
            }
        }
        let mut ids: Vec<usize> = slots.into_iter().map(|s| self.points[s].0).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Ids of all stored points within `delta` of `p` (exact Euclidean
    /// distance), ascending.
    pub fn query(&self, p: &[f64; D]) -> Vec<usize> {
        let mut slots: Vec<usize> = Vec::new();
        for (g, map) in self.grids.iter().enumerate() {
            if let Some(cell) = map.get(&Self::cell_of(p, g, self.delta)) {
                slots.extend_from_slice(cell);
            }
        }
        slots.sort_unstable();
        slots.dedup();
        let limit = self.delta * self.delta;
        let mut ids: Vec<usize> = slots
            .into_iter()
            .filter(|&s| dist_sq(&self.points[s].1, p) <= limit)
            .map(|s| self.points[s].0)
            .collect();
        ids.sort_unstable();
        ids
    }
}

fn dist_sq<const D: usize>(a: &[f64; D], b: &[f64; D]) -> f64 {
    let mut acc = 0.0;
    for k in 0..D {
        let d = a[k] - b[k];
        acc += d * d;
    }
    acc
}

/// Distance between two points, exposed for tests asserting the pre-filter
/// bound.
pub fn point_dist<const D: usize>(a: &[f64; D], b: &[f64; D]) -> f64 {
    math::sqrt(dist_sq(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Stream;

    #[test]
    fn one_dimensional_cell_sharing() {
        // delta=1 in 3D: grid 0 cells have edge 4; x=0.4 and x=1.2 both floor
        // to cell 0 on the x axis.
        let pts = [(0, [0.4, 0.0, 0.0]), (1, [1.2, 0.0, 0.0])];
        let idx = ShiftedGridIndex::<3>::build(&pts, 1.0).unwrap();
        let c0 = ShiftedGridIndex::<3>::cell_of(&pts[0].1, 0, 1.0);
        let c1 = ShiftedGridIndex::<3>::cell_of(&pts[1].1, 0, 1.0);
        assert_eq!(c0, c1);
        assert_eq!(idx.query(&[0.4, 0.0, 0.0]), alloc::vec![0, 1]);
    }

    #[test]
    fn empty_index() {
        let idx = ShiftedGridIndex::<3>::build(&[], 0.5).unwrap();
        assert!(idx.query(&[0.0, 0.0, 0.0]).is_empty());
        assert_eq!(idx.grids.len(), 4);
        assert!(idx.grids.iter().all(|g| g.is_empty()));
    }

    #[test]
    fn rejects_bad_tolerance_and_duplicate_ids() {
        assert_eq!(
            ShiftedGridIndex::<3>::build(&[], 0.0).unwrap_err(),
            GridError::InvalidTolerance
        );
        let pts = [(7, [0.0; 3]), (7, [1.0; 3])];
        assert_eq!(
            ShiftedGridIndex::<3>::build(&pts, 1.0).unwrap_err(),
            GridError::DuplicateId(7)
        );
    }

    #[test]
    fn identical_point_is_returned() {
        let pts = [(3, [1.0, 2.0, 3.0])];
        let idx = ShiftedGridIndex::<3>::build(&pts, 1e-6).unwrap();
        assert_eq!(idx.query(&[1.0, 2.0, 3.0]), alloc::vec![3]);
    }

    #[test]
    fn far_point_not_returned() {
        let pts = [(0, [0.0, 0.0, 0.0])];
        let idx = ShiftedGridIndex::<3>::build(&pts, 1.0).unwrap();
        assert!(idx.query(&[10.0, 0.0, 0.0]).is_empty());
    }

    #[test]
    fn membership_is_one_cell_per_grid() {
        let mut s = Stream::new(11);
        let pts: Vec<(usize, [f64; 3])> = (0..500)
            .map(|i| (i, [s.unit(), s.unit(), s.unit()]))
            .collect();
        let idx = ShiftedGridIndex::<3>::build(&pts, 1e-3).unwrap();
        for g in &idx.grids {
            let total: usize = g.values().map(|v| v.len()).sum();
            assert_eq!(total, 500);
        }
    }

    #[test]
    fn completeness_against_brute_force() {
        let mut s = Stream::new(99);
        let delta = 0.05;
        let pts: Vec<(usize, [f64; 3])> = (0..800)
            .map(|i| (i, [s.unit(), s.unit(), s.unit()]))
            .collect();
        let idx = ShiftedGridIndex::<3>::build(&pts, delta).unwrap();
        for qi in 0..100 {
            let q = [s.unit(), s.unit(), s.unit()];
            let got = idx.query(&q);
            let want: Vec<usize> = pts
                .iter()
                .filter(|(_, p)| point_dist(p, &q) <= delta)
                .map(|(id, _)| *id)
                .collect();
            assert_eq!(got, want, "query {qi} mismatch");
        }
    }

    #[test]
    fn prefilter_bound_holds() {
        let mut s = Stream::new(5);
        let delta = 0.07;
        let pts: Vec<(usize, [f64; 3])> = (0..400)
            .map(|i| (i, [s.unit(), s.unit(), s.unit()]))
            .collect();
        let idx = ShiftedGridIndex::<3>::build(&pts, delta).unwrap();
        let bound = 4.0 * math::sqrt(3.0) * delta;
        for _ in 0..60 {
            let q = [s.unit(), s.unit(), s.unit()];
            for id in idx.query_prefilter(&q) {
                let p = pts[id].1;
                assert!(point_dist(&p, &q) <= bound + 1e-12);
            }
        }
    }
}
