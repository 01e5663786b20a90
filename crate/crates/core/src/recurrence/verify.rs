use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{AnySpec, CoeffFn, RecurrenceError};
use crate::hessenberg::{DetMethod, SquareMatrix};
use crate::ring::RingValue;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub k: usize,
    pub direct: String,
    pub det: String,
    pub ok: bool,
}

/// Serializes as `{"spec": ..., "checks": [{"k", "direct", "det", "ok"}], "pass": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.checks.iter().find(|c| !c.ok).map(|c| c.k)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checks the determinant identity for every size `k ≤ max_n`.
///
/// Full-history specs are checked as `a_1 · det D_k = a_{k+1}`, fixed-order
/// ones as `det = a(k)`.
pub fn verify_spec(
    name: &str,
    spec: &AnySpec,
    max_n: usize,
    method: DetMethod,
) -> Result<VerificationReport, RecurrenceError> {
    verify_spec_with(name, spec, max_n, method, None)
}

/// Like [`verify_spec`], with `perturbation(j, i)` added to matrix entry
/// `(i, j)` for `i ≤ j` before the determinant is taken. The direct terms are
/// left alone, so any nonzero perturbation that changes a determinant shows
/// up as a mismatch.
pub fn verify_spec_with(
    name: &str,
    spec: &AnySpec,
    max_n: usize,
    method: DetMethod,
    perturbation: Option<&CoeffFn>,
) -> Result<VerificationReport, RecurrenceError> {
    if max_n == 0 {
        return Err(RecurrenceError::EmptyRequest);
    }
    let (direct, scale) = match spec {
        AnySpec::FullHistory(s) => {
            let terms = spec.eval(max_n + 1)?.into_terms();
            (terms[1..].to_vec(), Some(s.initial().clone()))
        }
        AnySpec::FixedOrder(_) => (spec.eval(max_n)?.into_terms(), None),
    };

    let checks = (1..=max_n)
        .into_par_iter()
        .map(|k| {
            let mut m = spec.matrix(k)?;
            if let Some(f) = perturbation {
                m = perturb(&m, f)?;
            }
            let mut det = method.det(&m)?;
            if let Some(a1) = &scale {
                det = a1 * &det;
            }
            let expected = &direct[k - 1];
            Ok(Check {
                k,
                direct: expected.to_string(),
                det: det.to_string(),
                ok: &det == expected,
            })
        })
        .collect::<Result<Vec<_>, RecurrenceError>>()?;

    let pass = checks.iter().all(|c| c.ok);
    Ok(VerificationReport {
        spec: name.to_string(),
        checks,
        pass,
    })
}

fn perturb(m: &SquareMatrix, f: &CoeffFn) -> Result<SquareMatrix, RecurrenceError> {
    let n = m.size();
    let mut out = m.clone();
    for col in 1..=n {
        for row in 1..=col {
            let delta = f(col, row)?;
            if !delta.is_zero() {
                let v: RingValue = m.get(row - 1, col - 1) + &delta;
                out = out.with_entry(row - 1, col - 1, v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::recurrence::{FixedOrderSpec, FullHistorySpec};

    fn fib() -> AnySpec {
        let one = RingValue::one();
        FixedOrderSpec::constant(vec![one.clone(), one.clone()], vec![one.clone(), one]).unwrap().into()
    }

    #[test]
    fn fibonacci_passes_every_method() {
        let report = verify_spec("fib", &fib(), 20, DetMethod::Fast).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks.len(), 20);
        assert_eq!(report.checks[19].direct, "6765");
        assert!(verify_spec("fib", &fib(), 8, DetMethod::Laplace).unwrap().pass);
        assert!(verify_spec("fib", &fib(), 12, DetMethod::Bareiss).unwrap().pass);
    }

    #[test]
    fn laplace_refuses_large_sizes() {
        assert!(matches!(
            verify_spec("fib", &fib(), 9, DetMethod::Laplace),
            Err(RecurrenceError::Matrix(_))
        ));
    }

    #[test]
    fn corrupted_entry_is_reported_at_first_affected_k() {
        // Touch only entry (2, 4): sizes 1..3 are unaffected.
        let hit: CoeffFn = Arc::new(|j, i| Ok(if (i, j) == (2, 4) { RingValue::one() } else { RingValue::zero() }));
        let report = verify_spec_with("fib", &fib(), 6, DetMethod::Fast, Some(&hit)).unwrap();
        assert!(!report.pass);
        assert_eq!(report.first_failure(), Some(4));
        assert!(report.checks[..3].iter().all(|c| c.ok));
    }

    #[test]
    fn full_history_scales_by_initial() {
        let spec: AnySpec = FullHistorySpec::new(RingValue::from(3), |k, i| {
            Ok(RingValue::from((k as i64 - 2 * i as i64) % 3))
        })
        .into();
        let report = verify_spec("t", &spec, 10, DetMethod::Fast).unwrap();
        assert!(report.pass, "{report:?}");
        let json = report.to_json();
        assert!(json.starts_with(r#"{"spec":"t","checks":[{"k":1,"direct":"#));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
