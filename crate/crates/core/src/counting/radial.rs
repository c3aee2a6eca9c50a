use std::collections::BTreeMap;

use serde::Serialize;

use crate::geometry::radial_direction;
use crate::{Direction, PointSet, Scalar};

/// Points bucketed by the radial line through them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadialHistogram {
    pub buckets: BTreeMap<Direction, usize>,
    pub origin_count: usize,
    pub max: usize,
    /// Direction of the first (smallest) bucket of size `max`.
    pub max_direction: Option<Direction>,
}

impl RadialHistogram {
    pub fn total(&self) -> usize {
        self.buckets.values().sum()
    }

    /// Whether no radial line holds more than `c · n^{2/3}` points, with
    /// `n` the number of non-origin points. Checked exactly as
    /// `max³ ≤ c³ n²`.
    pub fn sparse_radial_lines(&self, c: &Scalar) -> bool {
        let n = Scalar::from(self.total());
        let max = Scalar::from(self.max);
        max.pow(3) <= c.pow(3) * n.pow(2)
    }
}

pub fn radial_histogram(points: &PointSet) -> RadialHistogram {
    let mut buckets: BTreeMap<Direction, usize> = BTreeMap::new();
    let mut origin_count = 0;
    for p in points {
        match radial_direction(p) {
            Ok(d) => *buckets.entry(d).or_default() += 1,
            Err(_) => origin_count += 1,
        }
    }
    let mut max = 0;
    let mut max_direction = None;
    for (d, &c) in &buckets {
        if c > max {
            max = c;
            max_direction = Some(d.clone());
        }
    }
    RadialHistogram {
        buckets,
        origin_count,
        max,
        max_direction,
    }
}
