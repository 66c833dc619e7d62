use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperseries::{gamma_prefactor, gamma_prefactor_shift, gamma_value, phi_eval, EvalOptions, PhiSpec};
use crate::qcore::{qgamma_ratio, QBase};
use crate::scalar::{Field, Scalar};
use crate::turanian::certificate::{certify, SignReport, Verdict};
use crate::turanian::series::{Family, TuranianSpec};

/// Which way the three-term inequality is expected to point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftPair {
    /// `v(mu+1)^2 >= v(mu) v(mu+2)`
    Direct,
    /// `v(mu+1)^2 <= v(mu) v(mu+2)`
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointInequality {
    pub holds: bool,
    /// Strict and separated from the evaluation error.
    pub strict: bool,
    /// `v(mu+1)^2 - v(mu) v(mu+2)`, negated for the inverse pair.
    pub margin: Scalar,
    pub error_bound: Scalar,
    pub middle_squared: Scalar,
    pub outer_product: Scalar,
}

/// A value together with an absolute error bound.
#[derive(Clone, Debug)]
struct Approx<F: Field> {
    value: F,
    err: F,
}

impl<F: Field> Approx<F> {
    fn mul(&self, o: &Approx<F>) -> Approx<F> {
        let err = self.value.abs() * &o.err + &(o.value.abs() * &self.err) + &(self.err.clone() * &o.err);
        Approx { value: self.value.clone() * &o.value, err }
    }

    fn scale(&self, c: &F) -> Approx<F> {
        Approx { value: self.value.clone() * c, err: self.err.clone() * &c.abs() }
    }
}

/// Series part of the family at `mu`, without any Gamma factor.
fn series_value<F: Field>(family: &Family<F>, mu: &F, x: &F, q: &QBase<F>) -> Result<Approx<F>> {
    let (spec, z) = match family {
        Family::HeineF | Family::HeineFTilde => {
            if mu.signum() <= 0 {
                return Err(Error::Domain(format!("heine f needs mu > 0, got {mu}")));
            }
            (PhiSpec::new(vec![q.zero(), q.zero()], vec![q.qpow(mu)?], q.clone())?, x.clone())
        }
        Family::GNormalized { a, b } => {
            let up = a.shifted(mu).entries().iter().map(|e| q.qpow(e)).collect::<Result<Vec<_>>>()?;
            let lo = b.shifted(mu).entries().iter().map(|e| q.qpow(e)).collect::<Result<Vec<_>>>()?;
            let spec = PhiSpec::new(up, lo, q.clone())?;
            let z = (q.q().clone() - &q.one()).powi(spec.excess()) * x;
            (spec, z)
        }
    };
    let ev = phi_eval(&spec, &z, &EvalOptions::default_for(x))?;
    // float roundoff on top of the certified tail
    let round = if F::is_exact() { x.zero() } else { ev.value.abs() * &x.epsilon() * &x.int(4 * ev.terms as i64 + 64) };
    Ok(Approx { value: ev.value, err: ev.tail_bound + &round })
}

/// Family value at `mu0 + shift`. With `relative` set (integer shifts only)
/// it is divided by the positive Gamma factor of the family at `mu0`, which
/// keeps exact mode exact.
fn family_value<F: Field>(
    family: &Family<F>,
    mu0: &F,
    shift: &F,
    relative: bool,
    x: &F,
    q: &QBase<F>,
) -> Result<Approx<F>> {
    let mu = mu0.clone() + shift;
    let s = series_value(family, &mu, x, q)?;
    let k = if relative { shift.as_integer() } else { None };
    match (family, k) {
        (Family::HeineF, _) => Ok(s),
        (Family::HeineFTilde, Some(k)) if k >= 0 => {
            Ok(s.scale(&(q.one() / &qgamma_ratio(mu0, k as usize, q)?)))
        }
        (Family::HeineFTilde, _) => Ok(s.scale(&(q.one() / &gamma_value(&mu, q)?))),
        (Family::GNormalized { a, b }, Some(k)) => Ok(s.scale(&gamma_prefactor_shift(a, b, mu0, k, q)?)),
        (Family::GNormalized { a, b }, None) => Ok(s.scale(&gamma_prefactor(a, b, &mu, q)?)),
    }
}

fn three_term<F: Field>(
    family: &Family<F>,
    mu: &F,
    h: &F,
    x: &F,
    q: &QBase<F>,
) -> Result<(Approx<F>, Approx<F>)> {
    let rel = h.as_integer().is_some_and(|k| k >= 0);
    let v0 = family_value(family, mu, &x.zero(), rel, x, q)?;
    let v1 = family_value(family, mu, h, rel, x, q)?;
    let v2 = family_value(family, mu, &(h.clone() + h), rel, x, q)?;
    Ok((v1.mul(&v1), v0.mul(&v2)))
}

/// Compares `v(mu+1)^2` with `v(mu) v(mu+2)` at a single point `x`.
pub fn turan_point_inequality<F: Field>(
    family: &Family<F>,
    mu: &F,
    x: &F,
    q: &QBase<F>,
    pair: ShiftPair,
) -> Result<PointInequality> {
    if mu.signum() < 0 {
        return Err(Error::Domain(format!("mu must be >= 0, got {mu}")));
    }
    let (mid, outer) = three_term(family, mu, &q.one(), x, q)?;
    let mut margin = mid.value.clone() - &outer.value;
    if pair == ShiftPair::Inverse {
        margin = -margin;
    }
    let err = mid.err.clone() + &outer.err;
    Ok(PointInequality {
        holds: margin >= -err.clone(),
        strict: margin > err,
        margin: margin.to_scalar(),
        error_bound: err.to_scalar(),
        middle_squared: mid.value.to_scalar(),
        outer_product: outer.value.to_scalar(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convexity {
    LogConvex,
    LogConcave,
    Equality,
    Neither,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridCheck {
    pub verdict: Convexity,
    pub expected: Convexity,
    pub holds: bool,
    /// `v(mu_i) v(mu_{i+2}) - v(mu_{i+1})^2` per interior point.
    pub margins: Vec<Scalar>,
    pub error_bounds: Vec<Scalar>,
}

/// Midpoint log-convexity (heine-f) or log-concavity (heine-f-tilde, g) of
/// `mu -> v(mu; x)` over a uniform grid.
pub fn logconcavity_grid_check<F: Field>(
    family: &Family<F>,
    mu_grid: &[F],
    x: &F,
    q: &QBase<F>,
) -> Result<GridCheck> {
    if !(x.signum() > 0 && *x < x.one()) {
        return Err(Error::Domain(format!("grid check needs 0 < x < 1, got {x}")));
    }
    if mu_grid.len() < 3 {
        return Err(Error::InsufficientGrid(format!("need at least 3 points, got {}", mu_grid.len())));
    }
    let h = mu_grid[1].clone() - &mu_grid[0];
    for w in mu_grid.windows(2) {
        let d = w[1].clone() - &w[0];
        let off = (d - &h).abs();
        let tol = if F::is_exact() { x.zero() } else { h.abs() * &x.epsilon() * &x.int(64) };
        if off > tol {
            return Err(Error::InsufficientGrid("grid must be uniform".into()));
        }
    }
    let expected = match family {
        Family::HeineF => Convexity::LogConvex,
        _ => Convexity::LogConcave,
    };
    let mut margins = Vec::new();
    let mut errs = Vec::new();
    let (mut up, mut down, mut unknown) = (false, false, false);
    for mu in &mu_grid[..mu_grid.len() - 2] {
        let (mid, outer) = three_term(family, mu, &h, x, q)?;
        let m = outer.value.clone() - &mid.value;
        let e = mid.err.clone() + &outer.err;
        if m > e {
            up = true;
        } else if m < -e.clone() {
            down = true;
        } else if !(m.is_zero() && e.is_zero()) && !h.is_zero() {
            unknown = true;
        }
        margins.push(m.to_scalar());
        errs.push(e.to_scalar());
    }
    let verdict = match (up, down, unknown) {
        (true, true, _) => Convexity::Neither,
        (_, _, true) => Convexity::Inconclusive,
        (true, false, false) => Convexity::LogConvex,
        (false, true, false) => Convexity::LogConcave,
        (false, false, false) => Convexity::Equality,
    };
    Ok(GridCheck {
        verdict,
        expected,
        holds: verdict == expected || verdict == Convexity::Equality,
        margins,
        error_bounds: errs,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShiftReduction {
    pub holds: bool,
    pub base: SignReport,
    /// `(alpha, report)` for `alpha = 1..=alpha_max` that meet the hypotheses.
    pub reports: Vec<(i64, SignReport)>,
}

/// Certifies the sign at `alpha = 1` and checks that every larger integer
/// `alpha` up to `alpha_max` has the same sign. For the g family, `alpha`
/// values beyond `beta + 1` are skipped.
pub fn integer_shift_reduction_check<F: Field>(spec: &TuranianSpec<F>, alpha_max: i64) -> Result<ShiftReduction> {
    let one = spec.q.one();
    let base = certify(&spec.with_alpha(one.clone()))?;
    let target = base.expected.unwrap_or(base.verdict);
    let mut holds = base.matches_expected;
    let mut reports = vec![(1, base.clone())];
    for k in 2..=alpha_max {
        let alpha = one.int(k);
        if matches!(spec.family, Family::GNormalized { .. }) && alpha > spec.beta.clone() + &one {
            continue;
        }
        let rep = certify(&spec.with_alpha(alpha))?;
        holds &= target.satisfied_by(rep.verdict) || rep.verdict == Verdict::IdenticallyZero;
        reports.push((k, rep));
    }
    Ok(ShiftReduction { holds, base, reports })
}
