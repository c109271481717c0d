use num_bigint::BigInt;
use rayon::prelude::*;

use super::{family_polynomial, predict, Family, FamilyPrediction};
use crate::arith::integer::valuation_unchecked;
use crate::error::Error;
use crate::invariants::{full_report_with, InvariantReport, SearchConfig};
use crate::nf::build_field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub param: Vec<BigInt>,
    pub applicable: bool,
    /// Why the member was skipped or failed.
    pub reason: Option<String>,
    pub prediction: Option<FamilyPrediction>,
    pub exact: Option<InvariantReport>,
    pub pass: bool,
}

impl VerificationRow {
    /// Measured `v_2(i(K))`.
    pub fn alpha(&self) -> Option<u32> {
        self.exact.as_ref().map(|r| valuation_unchecked(&r.i_k, 2).finite().unwrap_or(0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: Family,
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn applicable(&self) -> usize {
        self.rows.iter().filter(|r| r.applicable).count()
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.applicable && r.pass).count()
    }

    pub fn discrepancies(&self) -> Vec<&VerificationRow> {
        self.rows.iter().filter(|r| r.applicable && !r.pass).collect()
    }

    pub fn is_success(&self) -> bool {
        self.discrepancies().is_empty()
    }
}

/// Parameter points for `lo..=hi`; two-parameter families take the square.
pub fn param_grid(family: Family, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    if family.arity() == 2 {
        (lo..=hi)
            .flat_map(|a| (lo..=hi).map(move |b| vec![BigInt::from(a), BigInt::from(b)]))
            .collect()
    } else {
        (lo..=hi).map(|m| vec![BigInt::from(m)]).collect()
    }
}

fn check_point(family: Family, param: &[BigInt], config: &SearchConfig) -> VerificationRow {
    let skipped = |reason: String| VerificationRow {
        param: param.to_vec(),
        applicable: false,
        reason: Some(reason),
        prediction: None,
        exact: None,
        pass: false,
    };
    let prediction = match predict(family, param) {
        Ok(p) => p,
        Err(e @ (Error::NotApplicable(_) | Error::NotAField(_) | Error::NotReduced(..))) => {
            return skipped(e.to_string())
        }
        Err(e) => return skipped(format!("prediction failed: {e}")),
    };
    let poly = match family_polynomial(family, param) {
        Ok(f) => f,
        Err(e) => return skipped(e.to_string()),
    };
    let field = match build_field(&poly) {
        Ok(k) => k,
        Err(Error::ReduciblePolynomial) => return skipped("reducible: not a field".into()),
        Err(e) => {
            return VerificationRow {
                param: param.to_vec(),
                applicable: true,
                reason: Some(format!("field construction failed: {e}")),
                prediction: Some(prediction),
                exact: None,
                pass: false,
            }
        }
    };
    match full_report_with(&field, config) {
        Ok(report) => {
            let pass = prediction.admits(&report.index_k, &report.i_k);
            VerificationRow {
                param: param.to_vec(),
                applicable: true,
                reason: None,
                prediction: Some(prediction),
                exact: Some(report),
                pass,
            }
        }
        Err(e) => VerificationRow {
            param: param.to_vec(),
            applicable: true,
            reason: Some(format!("engine failed: {e}")),
            prediction: Some(prediction),
            exact: None,
            pass: false,
        },
    }
}

/// Compares predictions with the engine at every point, in parallel.
/// Rows come back in the order of `params`.
pub fn verify_family(family: Family, params: &[Vec<BigInt>], config: &SearchConfig) -> VerificationReport {
    let rows = params.par_iter().map(|m| check_point(family, m, config)).collect();
    VerificationReport { family, rows }
}
