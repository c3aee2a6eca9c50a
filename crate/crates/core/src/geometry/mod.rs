//! Exact points, dot products, alpha-hyperplanes, and radial directions.

mod direction;
mod pts;
mod scalar;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use direction::{radial_direction, Direction};
pub use pts::{read_point_set, write_point_set};
pub use scalar::{ParseScalarError, Scalar};

/// A point in `R^d` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Scalar::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Exact dot product; errors on a dimension mismatch.
    pub fn dot(&self, other: &Point) -> Result<Scalar> {
        dot(self, other)
    }

    pub fn scale(&self, factor: &Scalar) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn add(&self, other: &Point) -> Result<Point> {
        check_dims(self, other)?;
        Ok(Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        check_dims(self, other)?;
        Ok(Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Applies a square matrix given row by row: `(Mx)_i = Σ_j m[i][j] x_j`.
    pub fn transform(&self, rows: &[Vec<Scalar>]) -> Result<Point> {
        rows.iter()
            .map(|row| {
                if row.len() != self.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: self.dim(),
                        found: row.len(),
                    });
                }
                Ok(row.iter().zip(&self.0).map(|(a, b)| a * b).sum())
            })
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_dims(p: &Point, q: &Point) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(())
}

/// Exact `Σ p_i q_i`.
pub fn dot(p: &Point, q: &Point) -> Result<Scalar> {
    check_dims(p, q)?;
    Ok(p.0.iter().zip(&q.0).map(|(a, b)| a * b).sum())
}

/// An ordered list of pairwise distinct points of a common dimension `d ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::param(format!("dimension must be at least 2, got {dim}")));
        }
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if !seen.insert(p) {
                return Err(Error::param(format!("duplicate point {p}")));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        PointSet::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.index_of(p).is_some()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Maps every point through `f`; fails if the images collide.
    pub fn map<F: FnMut(&Point) -> Point>(&self, f: F) -> Result<PointSet> {
        PointSet::new(self.dim, self.points.iter().map(f).collect())
    }

    /// Hex SHA-256 of the canonical `.pts` serialization.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut buf = Vec::new();
        write_point_set(self, &mut buf).expect("writing to a Vec cannot fail");
        hex::encode(Sha256::digest(&buf))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointSet")
            .field("dim", &self.dim)
            .field("points", &self.points)
            .finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// The level set `{x : normal · x = value}`; a line when `d = 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct AlphaHyperplane {
    normal: Point,
    value: Scalar,
}

impl AlphaHyperplane {
    pub fn new(normal: Point, value: Scalar) -> Result<Self> {
        if normal.is_origin() {
            return Err(Error::Origin("a hyperplane normal"));
        }
        Ok(AlphaHyperplane { normal, value })
    }

    pub fn normal(&self) -> &Point {
        &self.normal
    }

    pub fn value(&self) -> &Scalar {
        &self.value
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        Ok(dot(&self.normal, x)? == self.value)
    }

    /// In the plane, a point of the line together with a direction vector
    /// along it.
    pub fn parametrize_line(&self) -> Result<(Point, Point)> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim(),
            });
        }
        let a = self.normal.coord(0);
        let b = self.normal.coord(1);
        let norm2 = a * a + b * b;
        let base = self.normal.scale(&(&self.value / &norm2));
        let along = Point::new(vec![-b, a.clone()]);
        Ok((base, along))
    }
}

/// The alpha-hyperplane of a pin: all points whose dot product with `pin` is `alpha`.
pub fn alpha_hyperplane(pin: &Point, alpha: Scalar) -> Result<AlphaHyperplane> {
    AlphaHyperplane::new(pin.clone(), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn pt(coords: &[&str]) -> Point {
        Point::new(coords.iter().map(|c| q(c)).collect())
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&pt(&["1", "0"]), &pt(&["0", "1"])).unwrap(), Scalar::zero());
        for y in ["0", "1", "-7", "13/3"] {
            assert_eq!(dot(&pt(&["6", "0"]), &pt(&["8", y])).unwrap(), Scalar::from(48));
        }
        assert_eq!(dot(&pt(&["3/4", "5/16"]), &pt(&["4", "8/5"])).unwrap(), q("7/2"));
    }

    #[test]
    fn dot_dimension_mismatch() {
        let err = dot(&Point::from_ints(&[1, 2]), &Point::from_ints(&[1, 2, 3])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn alpha_lines() {
        let h = alpha_hyperplane(&Point::from_ints(&[1, 0]), Scalar::from(2)).unwrap();
        assert!(h.contains(&Point::from_ints(&[2, 17])).unwrap());
        assert!(!h.contains(&Point::from_ints(&[1, 0])).unwrap());

        let h = alpha_hyperplane(&Point::from_ints(&[0, 3]), Scalar::from(6)).unwrap();
        assert!(h.contains(&Point::from_ints(&[-5, 2])).unwrap());

        let h = alpha_hyperplane(&Point::from_ints(&[1, 1]), Scalar::one()).unwrap();
        assert!(h.contains(&Point::from_ints(&[1, 0])).unwrap());
        assert!(h.contains(&Point::from_ints(&[0, 1])).unwrap());
        assert!(!h.contains(&Point::from_ints(&[1, 1])).unwrap());

        assert!(matches!(
            alpha_hyperplane(&Point::from_ints(&[0, 0]), Scalar::one()),
            Err(Error::Origin(_))
        ));
    }

    #[test]
    fn parametrized_line_stays_on_line() {
        let h = alpha_hyperplane(&pt(&["3/4", "-2"]), q("5/3")).unwrap();
        let (base, along) = h.parametrize_line().unwrap();
        for t in [-3, 0, 1, 8] {
            let x = base.add(&along.scale(&Scalar::from(t))).unwrap();
            assert!(h.contains(&x).unwrap());
        }
    }

    #[test]
    fn point_set_rejects_duplicates_and_bad_dims() {
        let p = Point::from_ints(&[1, 0]);
        assert!(PointSet::new(2, vec![p.clone(), p.clone()]).is_err());
        assert!(PointSet::new(2, vec![Point::from_ints(&[1, 0, 0])]).is_err());
        assert!(PointSet::new(1, vec![]).is_err());
        let set = PointSet::new(2, vec![p.clone(), Point::from_ints(&[2, 0])]).unwrap();
        assert_eq!(set.index_of(&Point::from_ints(&[2, 0])), Some(1));
    }
}
