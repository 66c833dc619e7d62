//! Coefficientwise and pointwise checks of the q-series identities.
//!
//! Every verifier returns a [`Residual`]. In exact mode the identities hold
//! as formal power series, so a passing check has `exact_zero == true`.

mod analytic;
mod formal;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Mode, Scalar};

pub use analytic::{
    q_to_1_limit_study, rahman_substitution_probe, verify_bessel_roundtrip, verify_connection_formula,
    QLimitPoint, QLimitStudy, SubstitutionProbe,
};
pub use formal::{
    linearization_alpha_one, linearization_sides, verify_finite_sum_identity, verify_kummer_linearization,
    verify_linearization, verify_rahman_product, verify_recqgamma, LinearTerms,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub identity: String,
    pub mode: Mode,
    pub max_abs: Scalar,
    /// Relative to the larger side; positions where both sides vanish count as 0.
    pub max_rel: Scalar,
    pub order_checked: usize,
    pub exact_zero: bool,
    /// Index of the largest deviation, if any deviation is nonzero.
    pub worst_index: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Residual {
    /// Exact residuals must vanish; float residuals must be within `rel_tol`.
    pub fn passes(&self, rel_tol: f64) -> bool {
        match self.mode {
            Mode::Exact => self.exact_zero,
            Mode::Float { .. } => self.max_rel.to_f64() <= rel_tol,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Compares two equally long lists entry by entry.
pub fn compare<F: Field>(identity: &str, lhs: &[F], rhs: &[F]) -> Result<Residual> {
    if lhs.len() != rhs.len() || lhs.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{identity}: {} values against {}",
            lhs.len(),
            rhs.len()
        )));
    }
    let zero = lhs[0].zero();
    let mut max_abs = zero.clone();
    let mut max_rel = zero.clone();
    let mut worst = None;
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        let d = (l.clone() - r).abs();
        if d.is_zero() {
            continue;
        }
        let scale = l.abs().max_with(r.abs());
        let rel = d.clone() / &scale;
        if d > max_abs {
            max_abs = d;
            worst = Some(i);
        }
        max_rel = max_rel.max_with(rel);
    }
    Ok(Residual {
        identity: identity.to_string(),
        mode: zero.mode(),
        exact_zero: F::is_exact() && max_abs.is_zero(),
        max_abs: max_abs.to_scalar(),
        max_rel: max_rel.to_scalar(),
        order_checked: lhs.len() - 1,
        worst_index: worst,
        notes: Vec::new(),
    })
}

/// Drops pairs of equal upper and lower parameters. A factor `(a;q)_k` over
/// `(a;q)_k` is 1 even at `a = 1`, where both vanish for `k >= 1`.
pub(crate) fn cancel_pairs<F: Field>(upper: Vec<F>, mut lower: Vec<F>) -> (Vec<F>, Vec<F>) {
    let mut kept = Vec::new();
    for u in upper {
        match lower.iter().position(|l| *l == u) {
            Some(i) => {
                lower.remove(i);
            }
            None => kept.push(u),
        }
    }
    (kept, lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadRational;

    #[test]
    fn compare_reports_worst_entry() {
        let a: Vec<_> = [1, 2, 3].iter().map(|&n| QuadRational::from_i64(n)).collect();
        let mut b = a.clone();
        let res = compare("same", &a, &b).unwrap();
        assert!(res.exact_zero && res.passes(0.0));
        b[1] = QuadRational::from_i64(4);
        let res = compare("off", &a, &b).unwrap();
        assert!(!res.exact_zero);
        assert_eq!(res.worst_index, Some(1));
        assert_eq!(res.max_abs, Scalar::Exact(QuadRational::from_i64(2)));
        assert_eq!(res.max_rel, Scalar::Exact(QuadRational::from_rational(crate::scalar::parse_rational("1/2").unwrap())));
    }

    #[test]
    fn zero_over_zero_is_no_deviation() {
        let z = vec![QuadRational::from_i64(0); 3];
        assert!(compare("zeros", &z, &z).unwrap().exact_zero);
    }
}
