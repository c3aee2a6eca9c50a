use serde::Serialize;

use crate::{dot, AlphaHyperplane, Error, Point, PointSet, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeMode {
    /// `E`'s last coordinate ranges over `B` exactly as printed.
    Paper,
    /// `E`'s last coordinate ranges over a window of `q²` consecutive
    /// numerators chosen to populate as many hyperplanes as possible.
    Calibrated,
}

impl std::str::FromStr for LatticeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(LatticeMode::Paper),
            "calibrated" => Ok(LatticeMode::Calibrated),
            other => Err(Error::param(format!("unknown lattice mode `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSpec {
    pub d: usize,
    pub q: u64,
    pub mode: LatticeMode,
}

/// Largest lattice built, in points of `E` (and of `F`).
const MAX_POINTS: u64 = 1 << 20;

impl LatticeSpec {
    fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::param(format!("lattice dimension must be >= 2, got {}", self.d)));
        }
        if self.q < 2 {
            return Err(Error::param(format!("lattice q must be >= 2, got {}", self.q)));
        }
        let size = u32::try_from(self.d + 1)
            .ok()
            .and_then(|e| self.q.checked_pow(e))
            .filter(|&s| s <= MAX_POINTS);
        if size.is_none() {
            return Err(Error::param(format!(
                "lattice with d={} q={} exceeds {MAX_POINTS} points",
                self.d, self.q
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeConstruction {
    pub spec: LatticeSpec,
    /// `A = {(q+i)/(dq) : i = 1..q}`
    pub a: Vec<Scalar>,
    /// `B = {(q²+j)/(d²q²) : j = 1..q²}`, used by `F`
    pub b: Vec<Scalar>,
    /// last-coordinate values of `E` (equal to `B` in paper mode)
    pub e_last: Vec<Scalar>,
    /// first numerator of the calibrated window over the denominator `d²q²`
    pub window_start: Option<u64>,
    pub e: PointSet,
    pub f: PointSet,
    /// `h_f = {x : f·x = 1}`, one per point of `F`, in the order of `F`
    pub hyperplanes: Vec<AlphaHyperplane>,
    /// points of `E` on each `h_f`
    pub points_per_hyperplane: Vec<usize>,
    /// ordered pairs `(e, f)` with `e·f = 1`
    pub unit_pairs: usize,
    /// exact evaluations of `f·x = 1` performed at build time
    pub identity_checks: usize,
}

impl LatticeConstruction {
    pub fn populated_hyperplanes(&self) -> usize {
        self.points_per_hyperplane.iter().filter(|&&c| c > 0).count()
    }
}

/// All tuples in `{1..=q}^len`, lexicographically.
fn index_tuples(q: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=q).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Numerator over `d²q²` of `Σ c_j x_j + b` for `c_j = (q+i_j)/(dq)`,
/// `x_j = (q+i'_j)/(dq)` and `b = (q²+j)/(d²q²)`.
fn plane_numerator(q: u64, c: &[u64], x: &[u64], j: u64) -> u64 {
    c.iter().zip(x).map(|(i, ip)| (q + i) * (q + ip)).sum::<u64>() + q * q + j
}

/// Window start maximizing (populated hyperplanes, incidences), ties to the
/// lowest start.
fn calibrate(numerators: &[Vec<u64>], width: u64) -> u64 {
    let lo = numerators.iter().flatten().copied().min().expect("nonempty lattice");
    let hi = numerators.iter().flatten().copied().max().expect("nonempty lattice");
    let mut hist = vec![0usize; (hi - lo + 1) as usize];
    for &m in numerators.iter().flatten() {
        hist[(m - lo) as usize] += 1;
    }
    let mut prefix = vec![0usize; hist.len() + 1];
    for (i, h) in hist.iter().enumerate() {
        prefix[i + 1] = prefix[i] + h;
    }
    let sorted: Vec<Vec<u64>> = numerators
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.sort_unstable();
            r
        })
        .collect();
    let last_start = hi.saturating_sub(width - 1).max(lo);
    let mut best = (lo, 0usize, 0usize);
    for s in lo..=last_start {
        let end = s + width;
        let populated = sorted
            .iter()
            .filter(|row| {
                let i = row.partition_point(|&m| m < s);
                i < row.len() && row[i] < end
            })
            .count();
        let a = (s - lo) as usize;
        let b = ((end - lo) as usize).min(hist.len());
        let incidences = prefix[b] - prefix[a];
        if (populated, incidences) > (best.1, best.2) {
            best = (s, populated, incidences);
        }
    }
    best.0
}

/// Builds the lattice `E = A^{d-1} × B'` and the dual set
/// `F = {(-c/b, 1/b) : c ∈ A^{d-1}, b ∈ B}` together with the hyperplanes
/// `h_f`, checking `f·x = 1` exactly for every `f` and every
/// `x = (x', Σ c_j x'_j + b)` with `x' ∈ A^{d-1}`.
pub fn build_is_lattice(spec: LatticeSpec) -> Result<LatticeConstruction> {
    spec.validate()?;
    let LatticeSpec { d, q, mode } = spec;
    let du = d as u64;
    let a_den = du * q;
    let b_den = du * du * q * q;
    let a: Vec<Scalar> = (1..=q).map(|i| Scalar::new(q + i, a_den)).collect();
    let b: Vec<Scalar> = (1..=q * q).map(|j| Scalar::new(q * q + j, b_den)).collect();

    let tuples = index_tuples(q, d - 1);
    // F is indexed by (c tuple, j) with j fastest
    let f_params: Vec<(&Vec<u64>, u64)> = tuples.iter().flat_map(|c| (1..=q * q).map(move |j| (c, j))).collect();
    let numerators: Vec<Vec<u64>> = f_params
        .iter()
        .map(|&(c, j)| tuples.iter().map(|x| plane_numerator(q, c, x, j)).collect())
        .collect();

    let (e_last_num, window_start): (Vec<u64>, Option<u64>) = match mode {
        LatticeMode::Paper => ((1..=q * q).map(|j| q * q + j).collect(), None),
        LatticeMode::Calibrated => {
            let s = calibrate(&numerators, q * q);
            ((s..s + q * q).collect(), Some(s))
        }
    };
    let e_last: Vec<Scalar> = e_last_num.iter().map(|&m| Scalar::new(m, b_den)).collect();

    let a_point = |t: &[u64]| -> Vec<Scalar> { t.iter().map(|&i| a[(i - 1) as usize].clone()).collect() };
    let e_points: Vec<Point> = tuples
        .iter()
        .flat_map(|x| {
            let head = a_point(x);
            e_last.iter().map(move |z| {
                let mut c = head.clone();
                c.push(z.clone());
                Point::new(c)
            })
        })
        .collect();
    let f_points: Vec<Point> = f_params
        .iter()
        .map(|&(c, j)| {
            let bj = &b[(j - 1) as usize];
            let mut coords: Vec<Scalar> = a_point(c).iter().map(|cj| -(cj / bj)).collect();
            coords.push(Scalar::one() / bj);
            Point::new(coords)
        })
        .collect();

    let one = Scalar::one();
    let mut identity_checks = 0;
    for (fp, &(c, j)) in f_points.iter().zip(&f_params) {
        let cs = a_point(c);
        let bj = &b[(j - 1) as usize];
        for x in &tuples {
            let mut coords = a_point(x);
            let last: Scalar = cs.iter().zip(&coords).map(|(ci, xi)| ci * xi).sum::<Scalar>() + bj;
            coords.push(last);
            if dot(fp, &Point::new(coords))? != one {
                return Err(Error::Construction(format!("f·x = 1 fails for f = {fp}")));
            }
            identity_checks += 1;
        }
    }

    let in_window = |m: u64| e_last_num.first().is_some_and(|&lo| m >= lo && m < lo + q * q);
    let points_per_hyperplane: Vec<usize> = numerators
        .iter()
        .map(|row| row.iter().filter(|&&m| in_window(m)).count())
        .collect();
    let unit_pairs = points_per_hyperplane.iter().sum();

    let hyperplanes = f_points
        .iter()
        .map(|f| AlphaHyperplane::new(f.clone(), one.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeConstruction {
        spec,
        a,
        b,
        e_last,
        window_start,
        e: PointSet::new(d, e_points)?,
        f: PointSet::new(d, f_points)?,
        hyperplanes,
        points_per_hyperplane,
        unit_pairs,
        identity_checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: usize, q: u64, mode: LatticeMode) -> LatticeSpec {
        LatticeSpec { d, q, mode }
    }

    fn strs(xs: &[Scalar]) -> Vec<String> {
        xs.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn paper_mode_sets() {
        let l = build_is_lattice(spec(2, 2, LatticeMode::Paper)).unwrap();
        assert_eq!(strs(&l.a), vec!["3/4", "1"]);
        assert_eq!(strs(&l.b), vec!["5/16", "3/8", "7/16", "1/2"]);
        assert_eq!(l.e.len(), 8);
        assert_eq!(l.f.len(), 8);
        assert_eq!(l.identity_checks, 16);
        assert_eq!(l.window_start, None);
        // the printed ranges leave every hyperplane empty in the plane
        assert_eq!(l.unit_pairs, 0);
    }

    #[test]
    fn calibrated_mode_populates_hyperplanes() {
        let l = build_is_lattice(spec(2, 4, LatticeMode::Calibrated)).unwrap();
        assert_eq!(l.e.len(), 64);
        let rich = l.points_per_hyperplane.iter().filter(|&&c| c >= 2).count();
        assert!(2 * rich >= l.f.len());
        assert!(l.unit_pairs >= 128);
    }

    #[test]
    fn unit_pairs_match_membership() {
        let l = build_is_lattice(spec(3, 2, LatticeMode::Calibrated)).unwrap();
        for (h, &count) in l.hyperplanes.iter().zip(&l.points_per_hyperplane) {
            let members = l.e.iter().filter(|x| h.contains(x).unwrap()).count();
            assert_eq!(members, count);
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(build_is_lattice(spec(1, 3, LatticeMode::Paper)).is_err());
        assert!(build_is_lattice(spec(2, 1, LatticeMode::Paper)).is_err());
        assert!(build_is_lattice(spec(9, 40, LatticeMode::Paper)).is_err());
        assert!("calibrated".parse::<LatticeMode>().is_ok());
        assert!("other".parse::<LatticeMode>().is_err());
    }
}
