use crate::{AlphaHyperplane, Error, PointSet, Result};

/// Number of `(point, line)` pairs with the point on the line.
pub fn incidences(points: &PointSet, lines: &[AlphaHyperplane]) -> Result<usize> {
    if points.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: points.dim(),
        });
    }
    let mut total = 0;
    for line in lines {
        if line.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: line.dim(),
            });
        }
        for p in points {
            if line.contains(p)? {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// The alpha-lines `ℓ_α(p)` of every pin in `pins`.
pub fn alpha_lines(pins: &PointSet, alpha: &crate::Scalar) -> Result<Vec<AlphaHyperplane>> {
    pins.iter()
        .map(|p| AlphaHyperplane::new(p.clone(), alpha.clone()))
        .collect()
}
