use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperseries::{
    gamma_value, heine_f_via_bessel, phi_eval, qbessel_j1, qbessel_j2, EvalOptions, PhiSpec,
};
use crate::identities::formal::{linearization_sides, rahman_parameters};
use crate::identities::{compare, Residual};
use crate::qcore::{pochhammer_classical, qpochhammer_infinite, qpochhammer_pow, QBase};
use crate::scalar::{BigFloat, Field, Rational, Scalar};

fn require_float<F: Field>(what: &'static str) -> Result<()> {
    if F::is_exact() {
        return Err(Error::ExactUnsupported(what));
    }
    Ok(())
}

/// `J2_alpha(y)` against `(-y^2/4; q)_inf J1_alpha(y)` at each `y`, `|y| < 2`.
pub fn verify_connection_formula<F: Field>(alpha: &F, ys: &[F], q: &QBase<F>) -> Result<Residual> {
    require_float::<F>("connection formula")?;
    let opts = EvalOptions::default_for(q.q());
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for y in ys {
        let w = -(y.clone() * y) / &q.int(4);
        lhs.push(qbessel_j2(alpha, y, q, &opts)?);
        rhs.push(qpochhammer_infinite(&w, q, &opts.rel_tol)? * &qbessel_j1(alpha, y, q, &opts)?);
    }
    compare("connection-formula", &lhs, &rhs)
}

/// `_2phi_1(0,0;q^mu;x)` summed directly against its modified q-Bessel form.
pub fn verify_bessel_roundtrip<F: Field>(mu: &F, xs: &[F], q: &QBase<F>) -> Result<Residual> {
    require_float::<F>("Bessel round trip")?;
    let opts = EvalOptions::default_for(q.q());
    let spec = PhiSpec::new(vec![q.zero(), q.zero()], vec![q.qpow(mu)?], q.clone())?;
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for x in xs {
        lhs.push(phi_eval(&spec, x, &opts)?.value);
        rhs.push(heine_f_via_bessel(mu, x, q, &opts)?);
    }
    compare("bessel-roundtrip", &lhs, &rhs)
}

/// `sum_n z^n / prod_{k<n} d(k)` for a positive, increasing `d`, summed until
/// the geometric tail bound drops below `tol * |sum|`.
fn ratio_sum(z: &BigFloat, d: impl Fn(usize) -> BigFloat, tol: &BigFloat) -> Result<BigFloat> {
    const MAX_TERMS: usize = 1 << 20;
    let mut sum = z.one();
    let mut term = z.one();
    let az = z.abs();
    let half = z.ratio(1, 2);
    for n in 0..MAX_TERMS {
        let dn = d(n);
        if dn.signum() <= 0 {
            return Err(Error::Domain(format!("denominator factor {n} is not positive")));
        }
        term = term * z / &dn;
        sum = sum + &term;
        // later ratios are at most |z| / d(n+1) < 1/2, so the tail is below 2 |next|
        let r = az.clone() / &d(n + 1);
        if r < half && term.abs() * &r * &z.int(2) <= tol.clone() * &sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NotConverged { what: "q -> 1 series".into(), terms: MAX_TERMS })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QLimitPoint {
    pub q: Scalar,
    /// Both transformed q-sides against `(-1)^alpha` times the classical sides at `-x`.
    pub deviation: Residual,
    /// Left against right side of the transformed q-identity.
    pub identity_gap: Residual,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QLimitStudy {
    pub points: Vec<QLimitPoint>,
    pub decreasing: bool,
    pub strictly_decreasing: bool,
    pub warnings: Vec<String>,
}

/// Evaluates the linearization at `(q-1)x`, divided by `(q-1)^alpha`, along
/// a sequence of bases approaching 1, and measures its distance to the
/// classical identity.
///
/// Since `(q^c;q)_n / (q-1)^n -> (-1)^n (c)_n`, the limit of each side is
/// `(-1)^alpha` times the classical side evaluated at `-x`.
pub fn q_to_1_limit_study(
    mu: &Rational,
    alpha: usize,
    beta: &Rational,
    x: &Rational,
    qs: &[Rational],
    digits: u32,
) -> Result<QLimitStudy> {
    for w in qs.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Domain("q sequence must increase toward 1".into()));
        }
    }
    let like = BigFloat::with_digits(mu, digits);
    let muf = like.lift(mu);
    if muf.signum() <= 0 {
        return Err(Error::Domain(format!("mu must be positive, got {mu}")));
    }
    let betaf = like.lift(beta);
    let xf = like.lift(x);
    let tol = like.epsilon() * &like.int(16);
    let sign = if alpha % 2 == 0 { like.one() } else { -like.one() };

    let classical = linearization_sides(&muf, alpha, &betaf, |c, n| Ok(pochhammer_classical(c, n)))?;
    let f1 = |c: &BigFloat| ratio_sum(&-xf.clone(), |n| c.clone() + &like.int(n as i64), &tol);
    let mut l16 = like.zero();
    for (k, c1, c2) in &classical.products {
        l16 = l16 + &(k.clone() * &f1(c1)? * &f1(c2)?);
    }
    let mut r16 = like.zero();
    for (k, c) in &classical.singles {
        r16 = r16 + &(k.clone() * &f1(c)?);
    }
    let targets = [sign.clone() * &l16, sign * &r16];

    let mut points = Vec::new();
    let mut warnings = Vec::new();
    let floor = like.lift(&Rational::from(10)).powi(-(digits as i64) / 2);
    for qr in qs {
        let q = QBase::float_q(qr, digits)?;
        let qm1 = q.q().clone() - &q.one();
        if qm1.abs() < floor {
            warnings.push(format!("1 - q = {} is below 10^-{}; precision is exhausted", -qm1.clone(), digits / 2));
        }
        let z = qm1.clone() * &xf;
        let terms = linearization_sides(&muf, alpha, &betaf, |c, n| qpochhammer_pow(c, &q, n))?;
        let heine = |c: &BigFloat| {
            let qc = q.qpow(c)?;
            ratio_sum(&z, |n| q.one() - &(qc.clone() * &q.qpow_int(n as i64)), &tol)
        };
        let scale = qm1.powi(-(alpha as i64));
        let mut l = like.zero();
        for (k, c1, c2) in &terms.products {
            l = l + &(k.clone() * &heine(c1)? * &heine(c2)?);
        }
        let mut r = like.zero();
        for (k, c) in &terms.singles {
            r = r + &(k.clone() * &heine(c)?);
        }
        let (l, r) = (l * &scale, r * &scale);
        points.push(QLimitPoint {
            q: q.q().to_scalar(),
            deviation: compare("q-to-1 deviation", &[l.clone(), r.clone()], &targets)?,
            identity_gap: compare("linearization at (q-1)x", &[l], &[r])?,
        });
    }
    let devs: Vec<f64> = points.iter().map(|p| p.deviation.max_abs.to_f64()).collect();
    let decreasing = devs.windows(2).all(|w| w[1] <= w[0]);
    let strictly_decreasing = devs.windows(2).all(|w| w[1] < w[0]);
    Ok(QLimitStudy { points, decreasing, strictly_decreasing, warnings })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubstitutionProbe {
    pub y: Scalar,
    /// Rahman's product formula in its `J2` form, as transcribed.
    pub rahman_formula: Residual,
    /// `J2 J2 / ((-y^2/4;q)_inf^2 C)` against `e_q(z) _4phi_3(z)` at `z = -y^2/4`.
    pub candidate_y2: Residual,
    /// The same comparison at `z = -y^4/4`.
    pub candidate_y4: Residual,
    pub consistent_substitution: String,
}

fn real_power<F: Field>(w: &F, e: &F) -> Result<F> {
    match e.as_integer() {
        Some(k) => Ok(w.powi(k)),
        None => (w.try_ln()? * e).try_exp(),
    }
}

/// Decides numerically which argument turns Rahman's `J2` product formula
/// into the `_2phi_1` product identity, with `nu = alpha + 1`, `eta = beta + 1`.
/// Needs `0 < y < sqrt 2`, `y != 1`, so that both candidates lie in the unit
/// disk and differ.
pub fn rahman_substitution_probe<F: Field>(nu: &F, eta: &F, y: &F, q: &QBase<F>) -> Result<SubstitutionProbe> {
    require_float::<F>("substitution probe")?;
    let one = q.one();
    let four = q.int(4);
    let y2 = y.clone() * y;
    if y.signum() <= 0 || *y == one || y2.clone() * &y2 >= four {
        return Err(Error::Domain(format!("probe needs 0 < y < sqrt(2), y != 1, got {y}")));
    }
    let opts = EvalOptions::default_for(q.q());
    let (alpha, beta) = (nu.clone() - &one, eta.clone() - &one);
    let w = -y2.clone() / &four;
    let j2 = qbessel_j2(&alpha, y, q, &opts)? * &qbessel_j2(&beta, y, q, &opts)?;
    let pw = qpochhammer_infinite(&w, q, &opts.rel_tol)?;
    let ab = alpha.clone() + &beta;
    let c = real_power(y, &ab)?
        / &(real_power(&((one.clone() - q.q()) * &q.int(2)), &ab)? * &gamma_value(nu, q)? * &gamma_value(eta, q)?);
    let par = rahman_parameters(nu, eta, q)?;
    if par.halve_tail {
        return Err(Error::Domain("probe needs nu + eta != 1".into()));
    }
    let phi43 = PhiSpec::new(par.upper, par.lower, q.clone())?;
    let eq = PhiSpec::new(vec![q.zero()], vec![], q.clone())?;
    let rhs13 = |z: &F| -> Result<F> { Ok(phi_eval(&eq, z, &opts)?.value * &phi_eval(&phi43, z, &opts)?.value) };

    let rahman = compare("rahman-j2-form", &[j2.clone() / &pw], &[c.clone() * &phi_eval(&phi43, &w, &opts)?.value])?;
    let from_j2 = j2 / &(pw.clone() * &pw * &c);
    let z4 = -(y2.clone() * &y2) / &four;
    let cand2 = compare("substitution z = -y^2/4", &[from_j2.clone()], &[rhs13(&w)?])?;
    let cand4 = compare("substitution z = -y^4/4", &[from_j2], &[rhs13(&z4)?])?;
    let consistent = if cand2.max_rel.to_f64() < cand4.max_rel.to_f64() { "-y^2/4" } else { "-y^4/4" };
    Ok(SubstitutionProbe {
        y: y.to_scalar(),
        rahman_formula: rahman,
        candidate_y2: cand2,
        candidate_y4: cand4,
        consistent_substitution: consistent.to_string(),
    })
}
