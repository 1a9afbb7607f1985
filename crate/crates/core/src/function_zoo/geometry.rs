//! Plane and 4-space points, and rectangular subdifferential descriptions.

use std::fmt;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point in 4-space, viewed as two stacked planes `(x,y)` and `(z,w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point4 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

impl Point4 {
    pub fn new(x: f64, y: f64, z: f64, w: f64) -> Self {
        Self { x, y, z, w }
    }

    pub fn from_planes(first: Point2, second: Point2) -> Self {
        Self {
            x: first.x,
            y: first.y,
            z: second.x,
            w: second.y,
        }
    }

    pub fn split(&self) -> (Point2, Point2) {
        (Point2::new(self.x, self.y), Point2::new(self.z, self.w))
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|c| c.is_finite())
    }
}

impl fmt::Display for Point4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.w)
    }
}

/// One coordinate of a rectangular subdifferential: either a singleton or
/// a closed interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SubdiffCoord {
    Single(f64),
    Range { lo: f64, hi: f64 },
}

impl SubdiffCoord {
    /// Membership with a tolerance on singleton coordinates; interval
    /// coordinates use plain closed comparisons.
    pub fn contains(&self, v: f64, tol: f64) -> bool {
        match self {
            SubdiffCoord::Single(s) => (v - s).abs() <= tol,
            SubdiffCoord::Range { lo, hi } => *lo <= v && v <= *hi,
        }
    }

    pub fn is_single(&self) -> bool {
        matches!(self, SubdiffCoord::Single(_))
    }
}

/// A subdifferential of product form: one [`SubdiffCoord`] per coordinate.
/// Membership tests are coordinate-wise.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdiffRect {
    coords: Vec<SubdiffCoord>,
}

impl SubdiffRect {
    pub fn new(coords: Vec<SubdiffCoord>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[SubdiffCoord] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn contains(&self, v: &[f64], tol: f64) -> bool {
        v.len() == self.coords.len()
            && self
                .coords
                .iter()
                .zip(v)
                .all(|(coord, value)| coord.contains(*value, tol))
    }

    /// Subdifferential of a sum of functions of independent coordinate
    /// blocks: the concatenated product.
    pub fn product(mut self, other: SubdiffRect) -> SubdiffRect {
        self.coords.extend(other.coords);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_is_coordinate_wise() {
        let rect = SubdiffRect::new(vec![
            SubdiffCoord::Single(-1.0),
            SubdiffCoord::Range { lo: -2.0, hi: 2.0 },
        ]);
        assert!(rect.contains(&[-1.0, 2.0], 1e-12));
        assert!(rect.contains(&[-1.0 + 5e-13, -2.0], 1e-12));
        assert!(!rect.contains(&[-1.0 + 1e-9, 0.0], 1e-12));
        assert!(!rect.contains(&[-1.0, 2.0 + 1e-15], 1e-12));
        assert!(!rect.contains(&[-1.0], 1e-12));
    }

    #[test]
    fn product_concatenates() {
        let a = SubdiffRect::new(vec![SubdiffCoord::Single(1.0)]);
        let b = SubdiffRect::new(vec![SubdiffCoord::Range { lo: 0.0, hi: 1.0 }]);
        let p = a.product(b);
        assert_eq!(p.dim(), 2);
        assert!(p.coords()[0].is_single());
        assert!(!p.coords()[1].is_single());
    }

    #[test]
    fn plane_splitting_round_trips() {
        let x = Point4::new(1.0, 2.0, 3.0, 4.0);
        let (a, b) = x.split();
        assert_eq!(Point4::from_planes(a, b), x);
        assert_eq!(a.norm(), (5.0f64).sqrt());
    }
}
