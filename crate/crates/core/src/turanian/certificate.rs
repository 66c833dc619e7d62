use serde::Serialize;

use crate::conditions::{chain_condition_a, chain_condition_b, derive_cd};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::turanian::series::{turanian_series, Family, TuranianSeries, TuranianSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    AllStrictlyNeg,
    AllStrictlyPos,
    AllNonNeg,
    AllNonPos,
    IdenticallyZero,
    Mixed,
    /// Some coefficient could not be separated from zero by its error bound.
    Inconclusive,
}

impl Verdict {
    /// Whether an observed verdict establishes this (predicted) one.
    pub fn satisfied_by(self, got: Verdict) -> bool {
        use Verdict::*;
        match self {
            AllNonNeg => matches!(got, AllNonNeg | AllStrictlyPos | IdenticallyZero),
            AllNonPos => matches!(got, AllNonPos | AllStrictlyNeg | IdenticallyZero),
            other => other == got,
        }
    }

    fn direction(self) -> Option<i32> {
        match self {
            Verdict::AllStrictlyNeg | Verdict::AllNonPos => Some(-1),
            Verdict::AllStrictlyPos | Verdict::AllNonNeg => Some(1),
            _ => None,
        }
    }

    fn strict(self) -> bool {
        matches!(self, Verdict::AllStrictlyNeg | Verdict::AllStrictlyPos)
    }
}

/// Sign of a coefficient list, with the theorem's prediction attached.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignReport {
    pub verdict: Verdict,
    pub expected: Option<Verdict>,
    pub matches_expected: bool,
    pub first_violation: Option<usize>,
    /// Smallest `sign * c_m - k r_m` in the expected direction (or
    /// `|c_m| - k r_m` without a prediction).
    pub min_margin: Scalar,
    pub order_checked: usize,
    /// First index included in the verdict.
    pub start_index: usize,
    /// The coefficient at `m = 0`, reported separately.
    pub leading: Scalar,
    pub leading_is_zero: bool,
    /// True when every radius is zero, i.e. no tolerance was involved.
    pub unconditional: bool,
    pub normalization: String,
    pub chain_case_a: Option<bool>,
    pub chain_case_b: Option<bool>,
}

/// Separation factor between a float coefficient and its error bound.
pub const FLOAT_SAFETY: i64 = 10;

/// Classifies `center[m] +- radius[m]` for `start <= m`.
///
/// Exact coefficients (zero radius) are compared with zero directly. A
/// nonzero radius must be beaten by `|center|` (exact enclosures) or by ten
/// times the radius (float roundoff) before a sign is accepted.
pub fn classify<F: Field>(
    series: &TuranianSeries<F>,
    start: usize,
    expected: Option<Verdict>,
) -> SignReport {
    let center = series.center.coeffs();
    let like = &center[0];
    let safety = if F::is_exact() { like.one() } else { like.int(FLOAT_SAFETY) };
    let signs: Vec<Option<i32>> = (start..center.len())
        .map(|m| {
            let r = series.radius[m].clone() * &safety;
            let c = &center[m];
            if r.is_zero() {
                Some(c.signum())
            } else if *c > r {
                Some(1)
            } else if *c < -r.clone() {
                Some(-1)
            } else {
                None
            }
        })
        .collect();
    let pos = signs.contains(&Some(1));
    let neg = signs.contains(&Some(-1));
    let zero = signs.contains(&Some(0));
    let unknown = signs.contains(&None);
    let verdict = match (pos, neg, zero, unknown) {
        (true, true, _, _) => Verdict::Mixed,
        (_, _, _, true) => Verdict::Inconclusive,
        (true, false, false, _) => Verdict::AllStrictlyPos,
        (true, false, true, _) => Verdict::AllNonNeg,
        (false, true, false, _) => Verdict::AllStrictlyNeg,
        (false, true, true, _) => Verdict::AllNonPos,
        (false, false, _, _) => Verdict::IdenticallyZero,
    };
    let dir = expected.and_then(Verdict::direction).or_else(|| {
        signs.iter().flatten().copied().find(|&s| s != 0)
    });
    let strict = expected.is_some_and(Verdict::strict);
    let first_violation = signs
        .iter()
        .position(|s| match (s, dir) {
            (None, _) => true,
            (Some(s), Some(d)) => *s == -d || (strict && *s == 0),
            (Some(s), None) => expected == Some(Verdict::IdenticallyZero) && *s != 0,
        })
        .map(|i| i + start);
    let mut min_margin: Option<F> = None;
    for m in start..center.len() {
        let r = series.radius[m].clone() * &safety;
        let signed = match dir {
            Some(d) if d < 0 => -center[m].clone(),
            Some(_) => center[m].clone(),
            None => center[m].abs(),
        };
        let margin = signed - &r;
        min_margin = Some(match min_margin {
            Some(old) => old.min_with(margin),
            None => margin,
        });
    }
    let min_margin = min_margin.unwrap_or_else(|| like.zero());
    SignReport {
        verdict,
        expected,
        matches_expected: expected.is_none_or(|e| e.satisfied_by(verdict)),
        first_violation,
        min_margin: min_margin.to_scalar(),
        order_checked: center.len() - 1,
        start_index: start,
        leading: center[0].to_scalar(),
        leading_is_zero: center[0].is_zero() && series.radius[0].is_zero(),
        unconditional: series.is_exact(),
        normalization: series.normalization.clone(),
        chain_case_a: None,
        chain_case_b: None,
    }
}

fn degenerate<F: Field>(spec: &TuranianSpec<F>) -> bool {
    spec.alpha.is_zero() || spec.beta.is_zero()
}

/// Negativity of the Heine `f` Turanian coefficients for `m >= 1`.
pub fn delta_sign_certificate<F: Field>(spec: &TuranianSpec<F>) -> Result<SignReport> {
    if !matches!(spec.family, Family::HeineF) {
        return Err(Error::Hypothesis("delta certificate needs the heine-f family".into()));
    }
    let expected = if degenerate(spec) {
        Verdict::IdenticallyZero
    } else {
        Verdict::AllStrictlyNeg
    };
    Ok(classify(&turanian_series(spec)?, 1, Some(expected)))
}

/// Positivity of the `f~` Turanian coefficients for `m >= 1`.
pub fn delta_tilde_sign_certificate<F: Field>(spec: &TuranianSpec<F>) -> Result<SignReport> {
    if !matches!(spec.family, Family::HeineFTilde) {
        return Err(Error::Hypothesis("delta~ certificate needs the heine-f-tilde family".into()));
    }
    let expected = if degenerate(spec) {
        Verdict::IdenticallyZero
    } else {
        Verdict::AllStrictlyPos
    };
    Ok(classify(&turanian_series(spec)?, 1, Some(expected)))
}

/// Which sign the chain conditions predict for the `g` Turanian.
pub fn predicted_g_sign<F: Field>(spec: &TuranianSpec<F>) -> Result<(Option<bool>, Option<bool>, Verdict)> {
    let Family::GNormalized { a, b } = &spec.family else {
        return Err(Error::Hypothesis("gamma certificate needs the g family".into()));
    };
    let (c, d) = derive_cd(a, b, &spec.q)?;
    let (t, s) = (c.len(), d.len());
    let case_a = (s <= t && t <= s + 1).then(|| chain_condition_a(&c, &d)).transpose()?;
    let case_b = (t <= s).then(|| chain_condition_b(&c, &d)).transpose()?;
    let expected = match (case_a == Some(true), case_b == Some(true)) {
        (true, true) => Verdict::IdenticallyZero,
        (true, false) => Verdict::AllNonPos,
        (false, true) => Verdict::AllNonNeg,
        (false, false) => {
            return Err(Error::Hypothesis(
                "neither chain condition holds; no sign is predicted".into(),
            ))
        }
    };
    Ok((case_a, case_b, expected))
}

/// Sign of the `g` Turanian coefficients for `m >= 0`, predicted by the
/// chain condition that holds. Needs `alpha` a natural number with
/// `alpha <= beta + 1`.
pub fn gamma_sign_certificate<F: Field>(spec: &TuranianSpec<F>) -> Result<SignReport> {
    let (case_a, case_b, mut expected) = predicted_g_sign(spec)?;
    match spec.alpha.as_integer() {
        Some(0) => expected = Verdict::IdenticallyZero,
        Some(k) if k > 0 => {
            if spec.alpha > spec.beta.clone() + &spec.q.one() {
                return Err(Error::Hypothesis(format!(
                    "coefficientwise claim needs alpha <= beta + 1, got alpha = {}, beta = {}",
                    spec.alpha, spec.beta
                )));
            }
        }
        _ => {
            return Err(Error::Hypothesis(format!(
                "alpha must be a natural number, got {}",
                spec.alpha
            )))
        }
    }
    if spec.beta.is_zero() && spec.alpha.as_integer() == Some(1) {
        // Delta(1, 0) vanishes identically
        expected = Verdict::IdenticallyZero;
    }
    let mut report = classify(&turanian_series(spec)?, 0, Some(expected));
    report.chain_case_a = case_a;
    report.chain_case_b = case_b;
    Ok(report)
}

/// Dispatches to the certificate of the spec's family.
pub fn certify<F: Field>(spec: &TuranianSpec<F>) -> Result<SignReport> {
    match spec.family {
        Family::HeineF => delta_sign_certificate(spec),
        Family::HeineFTilde => delta_tilde_sign_certificate(spec),
        Family::GNormalized { .. } => gamma_sign_certificate(spec),
    }
}
