//! Small 3D vector/bbox toolkit plus the deterministic low-discrepancy
//! sequences used for entity sampling.

use crate::math;

/// 3D point or vector, always world units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    #[inline]
    pub fn from_array(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }

    #[inline]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm(self) -> f64 {
        math::sqrt(self.dot(self))
    }

    #[inline]
    pub fn dist(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    #[inline]
    pub fn dist_sq(self, o: Vec3) -> f64 {
        (self - o).dot(self - o)
    }

    /// Unit vector in the same direction. Not defined for the zero vector.
    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        self * (1.0 / n)
    }

    #[inline]
    pub fn scaled(self, s: f64) -> Vec3 {
        self * s
    }

    pub fn min_with(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x.min(o.x), self.y.min(o.y), self.z.min(o.z))
    }

    pub fn max_with(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x.max(o.x), self.y.max(o.y), self.z.max(o.z))
    }

    pub fn component(self, axis: usize) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }
}

impl core::ops::Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl core::ops::Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl core::ops::Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl core::ops::Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Axis-aligned box given by two corners.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BBox {
    pub min: Vec3,
    pub max: Vec3,
}

impl BBox {
    /// Inverted empty box; grows around whatever is folded in.
    pub fn empty() -> Self {
        BBox {
            min: Vec3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY),
            max: Vec3::new(f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    pub fn of_point(p: Vec3) -> Self {
        BBox { min: p, max: p }
    }

    pub fn include(&mut self, p: Vec3) {
        self.min = self.min.min_with(p);
        self.max = self.max.max_with(p);
    }

    pub fn merge(&self, o: &BBox) -> BBox {
        BBox {
            min: self.min.min_with(o.min),
            max: self.max.max_with(o.max),
        }
    }

    pub fn diagonal(&self) -> f64 {
        (self.max - self.min).norm()
    }

    pub fn center(&self) -> Vec3 {
        (self.min + self.max) * 0.5
    }

    pub fn contains(&self, p: Vec3, tol: f64) -> bool {
        p.x >= self.min.x - tol
            && p.y >= self.min.y - tol
            && p.z >= self.min.z - tol
            && p.x <= self.max.x + tol
            && p.y <= self.max.y + tol
            && p.z <= self.max.z + tol
    }
}

/// Radical-inverse in the given base; the workhorse of the Halton sequence.
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

/// 2D Halton point (bases 2 and 3) for index `i`, in the unit square.
///
/// Index 0 maps to (0,0), so callers start at 1 to avoid the degenerate
/// corner point.
pub fn halton2(i: u64) -> (f64, f64) {
    (radical_inverse(i, 2), radical_inverse(i, 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::new(1.0, 2.0, 3.0);
        let b = Vec3::new(-2.0, 0.5, 4.0);
        let c = a.cross(b);
        assert!(c.dot(a).abs() < 1e-12);
        assert!(c.dot(b).abs() < 1e-12);
    }

    #[test]
    fn halton_stays_in_unit_square() {
        for i in 1..500 {
            let (u, v) = halton2(i);
            assert!((0.0..1.0).contains(&u));
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn bbox_grows() {
        let mut b = BBox::empty();
        b.include(Vec3::new(1.0, -1.0, 0.0));
        b.include(Vec3::new(-2.0, 3.0, 5.0));
        assert_eq!(b.min, Vec3::new(-2.0, -1.0, 0.0));
        assert_eq!(b.max, Vec3::new(1.0, 3.0, 5.0));
    }
}
