use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{at_least_power, loglog_fit};
use crate::{Error, Result, Scalar};

/// Threshold constant used when a bound check names none.
pub const DEFAULT_THRESHOLD: (u32, u32) = (1, 8);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    /// size the count is measured against
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<String>,
}

/// One measured count, optionally with an exact prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub experiment: String,
    pub params: ReportParams,
    #[serde(with = "biguint_string")]
    pub count: BigUint,
    #[serde(default, with = "opt_biguint_string", skip_serializing_if = "Option::is_none")]
    pub predicted: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalRow {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_prediction: Option<bool>,
    /// `count ≥ c · n^{exponent}`
    pub meets_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommonParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub n: Vec<u64>,
    pub q: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub experiment: String,
    pub params: CommonParams,
    pub empirical: Vec<EmpiricalRow>,
    pub predicted_exponent: String,
    pub fit_slope: Option<f64>,
    pub threshold_c: String,
    pub pass: bool,
}

impl ComparisonReport {
    pub fn to_text(&self) -> String {
        let mut rows = vec![vec![
            "n".to_string(),
            "count".to_string(),
            "predicted".to_string(),
            "match".to_string(),
            format!("≥ {}·n^{}", self.threshold_c, self.predicted_exponent),
        ]];
        for r in &self.empirical {
            rows.push(vec![
                r.n.to_string(),
                r.count.clone(),
                r.predicted.clone().unwrap_or_else(|| "-".into()),
                r.matches_prediction.map_or("-".into(), |m| m.to_string()),
                r.meets_bound.to_string(),
            ]);
        }
        let mut out = format!("experiment: {}\n", self.experiment);
        out.push_str(&crate::report::render_table(&rows));
        match self.fit_slope {
            Some(s) => out.push_str(&format!("fit slope: {s:.4}\n")),
            None => out.push_str("fit slope: -\n"),
        }
        out.push_str(&format!("pass: {}\n", self.pass));
        out
    }
}

/// Lines up a series of runs of one experiment against an exponent.
///
/// Every record must share the experiment name, `k`, `d`, and tree. A row
/// passes when its count equals the prediction (if one is given) and is at
/// least `c · n^{exponent}`; the report passes when every row does.
pub fn compare_report(records: &[RunRecord], exponent: &Scalar, c: &Scalar) -> Result<ComparisonReport> {
    let first = records
        .first()
        .ok_or_else(|| Error::param("comparison report needs at least one run"))?;
    for r in records {
        if r.experiment != first.experiment
            || r.params.k != first.params.k
            || r.params.d != first.params.d
            || r.params.tree != first.params.tree
        {
            return Err(Error::param(format!(
                "mismatched runs: `{}` {:?} vs `{}` {:?}",
                first.experiment, first.params, r.experiment, r.params
            )));
        }
    }
    if !c.is_positive() {
        return Err(Error::param("threshold constant must be positive"));
    }
    let empirical: Vec<EmpiricalRow> = records
        .iter()
        .map(|r| {
            let matches = r.predicted.as_ref().map(|p| *p == r.count);
            EmpiricalRow {
                n: r.params.n,
                q: r.params.q,
                count: r.count.to_string(),
                predicted: r.predicted.as_ref().map(ToString::to_string),
                matches_prediction: matches,
                meets_bound: at_least_power(&r.count, c, r.params.n, exponent),
            }
        })
        .collect();
    let distinct_n: BTreeSet<u64> = records.iter().map(|r| r.params.n).collect();
    let fit_slope = if distinct_n.len() >= 3 && records.iter().all(|r| r.count > BigUint::ZERO) {
        let series: Vec<(f64, f64)> = records
            .iter()
            .map(|r| {
                (
                    r.params.n as f64,
                    Scalar::from(num_bigint::BigInt::from(r.count.clone())).to_f64(),
                )
            })
            .collect();
        Some(loglog_fit(&series)?.slope)
    } else {
        None
    };
    let pass = empirical
        .iter()
        .all(|r| r.meets_bound && r.matches_prediction != Some(false));
    Ok(ComparisonReport {
        experiment: first.experiment.clone(),
        params: CommonParams {
            k: first.params.k,
            d: first.params.d,
            n: records.iter().map(|r| r.params.n).collect(),
            q: records.iter().filter_map(|r| r.params.q).collect(),
            tree: first.params.tree.clone(),
        },
        empirical,
        predicted_exponent: exponent.to_string(),
        fit_slope,
        threshold_c: c.to_string(),
        pass,
    })
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

mod opt_biguint_string {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}
