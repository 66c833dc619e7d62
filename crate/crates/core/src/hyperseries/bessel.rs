//! Jackson's q-Bessel functions and the first modified q-Bessel function.
//! All of them carry infinite products or a q-gamma factor, so they are
//! float mode only.

use crate::error::{Error, Result};
use crate::hyperseries::families::gamma_value;
use crate::hyperseries::phi::{phi_eval, EvalOptions, PhiSpec};
use crate::qcore::{one_minus_q_pow, qpochhammer_infinite, QBase};
use crate::scalar::Field;

fn require_float<F: Field>(what: &'static str) -> Result<()> {
    if F::is_exact() {
        return Err(Error::ExactUnsupported(what));
    }
    Ok(())
}

/// `w^alpha` for `w >= 0`, or any `w` when `alpha` is an integer.
fn real_power<F: Field>(w: &F, alpha: &F) -> Result<F> {
    if let Some(k) = alpha.as_integer() {
        if w.is_zero() && k < 0 {
            return Err(Error::Domain(format!("0^{alpha}")));
        }
        return Ok(w.powi(k));
    }
    match w.signum() {
        1 => (w.try_ln()? * alpha).try_exp(),
        0 if alpha.signum() > 0 => Ok(w.zero()),
        _ => Err(Error::Domain(format!("{w}^{alpha} is not real"))),
    }
}

/// `(y/2)^alpha (q^(alpha+1); q)_inf / (q; q)_inf`.
fn jackson_prefactor<F: Field>(alpha: &F, y: &F, q: &QBase<F>, tol: &F) -> Result<F> {
    let half_y = y.clone() / &q.int(2);
    let p = real_power(&half_y, alpha)?;
    if p.is_zero() {
        return Ok(p);
    }
    let part = tol.clone() / &q.int(4);
    let qa1 = q.qpow(&(alpha.clone() + &q.one()))?;
    let num = qpochhammer_infinite(&qa1, q, &part)?;
    let den = qpochhammer_infinite(q.q(), q, &part)?;
    Ok(p * &num / &den)
}

/// `J^(1)_alpha(y) = (y/2)^alpha (q^(alpha+1);q)_inf/(q;q)_inf _2phi_1(0,0;q^(alpha+1);-y^2/4)`, `|y| < 2`.
pub fn qbessel_j1<F: Field>(alpha: &F, y: &F, q: &QBase<F>, opts: &EvalOptions<F>) -> Result<F> {
    require_float::<F>("Jackson q-Bessel J1")?;
    if y.abs() >= q.int(2) {
        return Err(Error::Domain(format!("J1 needs |y| < 2, got {y}")));
    }
    let pre = jackson_prefactor(alpha, y, q, &opts.rel_tol)?;
    if pre.is_zero() {
        return Ok(pre);
    }
    let b = q.qpow(&(alpha.clone() + &q.one()))?;
    let spec = PhiSpec::new(vec![q.zero(), q.zero()], vec![b], q.clone())?;
    let z = -(y.clone() * y) / &q.int(4);
    Ok(pre * &phi_eval(&spec, &z, opts)?.value)
}

/// `J^(2)_alpha(y) = (y/2)^alpha (q^(alpha+1);q)_inf/(q;q)_inf _0phi_1(-;q^(alpha+1);-y^2 q^(alpha+1)/4)`.
pub fn qbessel_j2<F: Field>(alpha: &F, y: &F, q: &QBase<F>, opts: &EvalOptions<F>) -> Result<F> {
    require_float::<F>("Jackson q-Bessel J2")?;
    let pre = jackson_prefactor(alpha, y, q, &opts.rel_tol)?;
    if pre.is_zero() {
        return Ok(pre);
    }
    let b = q.qpow(&(alpha.clone() + &q.one()))?;
    let z = -(y.clone() * y) * &b / &q.int(4);
    let spec = PhiSpec::new(vec![], vec![b], q.clone())?;
    Ok(pre * &phi_eval(&spec, &z, opts)?.value)
}

/// `I^(1)_nu(y; q) = (y/2)^nu / ((1-q)^nu Gamma_q(nu+1)) _2phi_1(0,0;q^(nu+1);(y/2)^2)`, `0 < y < 2`.
pub fn modified_qbessel_i1<F: Field>(
    nu: &F,
    y: &F,
    q: &QBase<F>,
    opts: &EvalOptions<F>,
) -> Result<F> {
    require_float::<F>("modified q-Bessel I1")?;
    if y.signum() <= 0 || *y >= q.int(2) {
        return Err(Error::Domain(format!("I1 needs 0 < y < 2, got {y}")));
    }
    let nu1 = nu.clone() + &q.one();
    if nu1.signum() <= 0 {
        if nu1.as_integer().is_some() {
            return Err(Error::Pole(nu1.to_string()));
        }
        return Err(Error::Domain(format!("I1 needs nu > -1, got {nu}")));
    }
    let half_y = y.clone() / &q.int(2);
    let pre = real_power(&half_y, nu)? / &(one_minus_q_pow(nu, q)? * &gamma_value(&nu1, q)?);
    let spec = PhiSpec::new(vec![q.zero(), q.zero()], vec![q.qpow(&nu1)?], q.clone())?;
    let x = half_y.clone() * &half_y;
    Ok(pre * &phi_eval(&spec, &x, opts)?.value)
}

/// `_2phi_1(0,0;q^mu;x)` rebuilt from `I^(1)_(mu-1)(2 sqrt x)`.
pub fn heine_f_via_bessel<F: Field>(
    mu: &F,
    x: &F,
    q: &QBase<F>,
    opts: &EvalOptions<F>,
) -> Result<F> {
    let s = x.try_sqrt()?;
    let nu = mu.clone() - &q.one();
    let i = modified_qbessel_i1(&nu, &(s.clone() * &q.int(2)), q, opts)?;
    let half = q.lift(&crate::scalar::Rational::from_parts(1.into(), 2u8.into()));
    let xpow = real_power(x, &(nu.clone() * &half))?;
    Ok(one_minus_q_pow(&nu, q)? * &gamma_value(mu, q)? / &xpow * &i)
}
