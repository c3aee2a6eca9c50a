use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Point;
use crate::{Error, Result};

/// A line through the origin, stored as its primitive integer direction
/// vector with the first nonzero coordinate positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction(Vec<BigInt>);

impl Direction {
    pub fn components(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_point(&self) -> Point {
        Point::new(self.0.iter().cloned().map(Into::into).collect())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Canonical direction of the radial line through `p`.
///
/// Denominators are cleared, the integer vector is divided by the gcd of its
/// entries, and the sign is fixed so the first nonzero entry is positive.
pub fn radial_direction(p: &Point) -> Result<Direction> {
    if p.is_origin() {
        return Err(Error::Origin("a radial direction"));
    }
    let lcm = p.coords().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coords().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let flip = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    Ok(Direction(
        ints.into_iter()
            .map(|x| {
                let x = x / &gcd;
                if flip {
                    -x
                } else {
                    x
                }
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn dir(p: &[i64]) -> Vec<i64> {
        radial_direction(&Point::from_ints(p))
            .unwrap()
            .components()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(dir(&[2, 0]), vec![1, 0]);
        assert_eq!(dir(&[3, 3]), vec![1, 1]);
        assert_eq!(dir(&[-4, -6]), vec![2, 3]);
        assert_eq!(dir(&[0, -5, 10]), vec![0, 1, -2]);
        assert!(radial_direction(&Point::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn rational_multiples_share_direction() {
        let p = Point::new(vec!["3/4".parse().unwrap(), "-5/6".parse().unwrap()]);
        let base = radial_direction(&p).unwrap();
        assert_eq!(base.to_point(), Point::from_ints(&[9, -10]));
        for lambda in ["-2", "7/3", "-1/9"] {
            let scaled = p.scale(&lambda.parse::<Scalar>().unwrap());
            assert_eq!(radial_direction(&scaled).unwrap(), base);
        }
    }
}
