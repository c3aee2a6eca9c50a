//! Exponent formulas, log-log fitting, and comparison reports.
//!
//! Formulas are exact rationals. Floating point appears only in
//! [`loglog_fit`] and in the fitted slope of a report.

mod report;

use num_bigint::BigUint;

use crate::{Error, Result, Scalar};

pub use report::{compare_report, ComparisonReport, EmpiricalRow, ReportParams, RunRecord, DEFAULT_THRESHOLD};

fn positive(name: &str, value: u64, min: u64) -> Result<()> {
    if value < min {
        return Err(Error::param(format!("{name} must be >= {min}, got {value}")));
    }
    Ok(())
}

/// Distinct weight tuples grow at least like `n^{2k/3}`.
pub fn main1(k: u64) -> Result<Scalar> {
    positive("k", k, 1)?;
    Ok(Scalar::new(2 * k, 3u32))
}

/// Some pin sees at least `n^{2/(2d−1)}` distinct dot products.
pub fn highdim_pinned(d: u64) -> Result<Scalar> {
    positive("d", d, 2)?;
    Ok(Scalar::new(2u32, 2 * d - 1))
}

/// The column construction gives `n^{⌈(k+1)/2⌉}` copies.
pub fn kms(k: u64) -> Result<Scalar> {
    positive("k", k, 1)?;
    Ok(Scalar::from((k + 1).div_ceil(2)))
}

/// The lattice construction gives `n^{1 + k(d−1)/(d+1)}` copies.
pub fn lattice(k: u64, d: u64) -> Result<Scalar> {
    positive("k", k, 1)?;
    positive("d", d, 2)?;
    Ok(Scalar::one() + Scalar::new(k * (d - 1), d + 1))
}

/// Perfect binary trees of height `h` have at most `n^{2^h}` copies.
pub fn gprs_upper(h: u32) -> Result<Scalar> {
    if h >= 63 {
        return Err(Error::param(format!("height {h} is too large")));
    }
    Ok(Scalar::from(1u64 << h))
}

/// The larger of the lattice and column exponents.
pub fn main2_exponent(k: u64, d: u64) -> Result<Scalar> {
    Ok(lattice(k, d)?.max(kms(k)?))
}

/// Least-squares fit of `log(count)` against `log(n)`.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct FitResult {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    /// root mean square residual in log space
    pub residual: f64,
}

pub fn loglog_fit(series: &[(f64, f64)]) -> Result<FitResult> {
    if series
        .iter()
        .any(|&(n, c)| !(n > 0.0 && c > 0.0 && n.is_finite() && c.is_finite()))
    {
        return Err(Error::param("log-log fit needs positive finite sizes and counts"));
    }
    let mut ns: Vec<f64> = series.iter().map(|p| p.0).collect();
    ns.sort_by(f64::total_cmp);
    ns.dedup();
    if ns.len() < 3 {
        return Err(Error::param("log-log fit needs at least three distinct sizes"));
    }
    let logs: Vec<(f64, f64)> = series.iter().map(|&(n, c)| (n.ln(), c.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (logs
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum::<f64>()
        / len)
        .sqrt();
    Ok(FitResult {
        points: series.to_vec(),
        slope,
        intercept,
        residual,
    })
}

/// `n^{p/q}` compared through integer powers: returns `base^q` and `n^p`
/// with negative `p` folded into the reciprocal.
fn power_sides(value: &Scalar, c: &Scalar, n: u64, exponent: &Scalar) -> (Scalar, Scalar) {
    let q = u32::try_from(exponent.denom().clone()).expect("exponent denominator fits in u32");
    let p = i64::try_from(exponent.numer().clone()).expect("exponent numerator fits in i64");
    let n_pow = Scalar::from(n).pow(p.unsigned_abs() as u32);
    let n_pow = if p < 0 { Scalar::one() / n_pow } else { n_pow };
    (value.pow(q), c.pow(q) * n_pow)
}

/// `count ≥ c · n^{exponent}`, decided exactly for `c > 0`.
pub fn at_least_power(count: &BigUint, c: &Scalar, n: u64, exponent: &Scalar) -> bool {
    let (lhs, rhs) = power_sides(&Scalar::from(num_bigint::BigInt::from(count.clone())), c, n, exponent);
    lhs >= rhs
}

/// `value ≤ c · n^{exponent}`, decided exactly for `c > 0`.
pub fn at_most_power(value: &BigUint, c: &Scalar, n: u64, exponent: &Scalar) -> bool {
    let (lhs, rhs) = power_sides(&Scalar::from(num_bigint::BigInt::from(value.clone())), c, n, exponent);
    lhs <= rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn formulas() {
        assert_eq!(main1(3).unwrap(), s("2"));
        assert_eq!(highdim_pinned(2).unwrap(), s("2/3"));
        assert_eq!(highdim_pinned(3).unwrap(), s("2/5"));
        assert_eq!(kms(1).unwrap(), s("1"));
        assert_eq!(kms(2).unwrap(), s("2"));
        assert_eq!(kms(3).unwrap(), s("2"));
        assert_eq!(lattice(2, 2).unwrap(), s("5/3"));
        assert_eq!(gprs_upper(3).unwrap(), s("8"));
        for h in 1..=6u32 {
            assert_eq!(kms((1 << (h + 1)) - 2).unwrap(), gprs_upper(h).unwrap());
        }
    }

    #[test]
    fn main2_examples() {
        assert_eq!(main2_exponent(2, 2).unwrap(), s("2"));
        assert_eq!(main2_exponent(6, 2).unwrap(), s("4"));
        assert_eq!(main2_exponent(4, 4).unwrap(), s("17/5"));
        assert!(main2_exponent(0, 2).is_err());
        assert!(main2_exponent(2, 1).is_err());
    }

    #[test]
    fn fits() {
        let f = loglog_fit(&[(10.0, 100.0), (20.0, 400.0), (40.0, 1600.0)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12);
        assert!(f.residual < 1e-12);
        let f = loglog_fit(&[(3.0, 3.0), (5.0, 5.0), (9.0, 9.0), (11.0, 11.0)]).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-12);
        assert!(loglog_fit(&[(10.0, 1.0), (10.0, 2.0), (20.0, 3.0)]).is_err());
        assert!(loglog_fit(&[(10.0, 0.0), (20.0, 2.0), (30.0, 3.0)]).is_err());
    }

    #[test]
    fn exact_power_comparisons() {
        let c = s("1/4");
        // 4 ≥ (1/4) · 64^{2/3} = 4
        assert!(at_least_power(&BigUint::from(4u32), &c, 64, &s("2/3")));
        assert!(!at_least_power(&BigUint::from(3u32), &c, 64, &s("2/3")));
        assert!(at_most_power(&BigUint::from(4u32), &c, 64, &s("2/3")));
        assert!(at_least_power(&BigUint::from(1u32), &s("1"), 8, &s("-1/3")));
    }
}
