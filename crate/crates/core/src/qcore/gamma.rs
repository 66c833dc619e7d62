use crate::error::{Error, Result};
use crate::qcore::pochhammer::{qpochhammer_infinite, qpochhammer_pow};
use crate::qcore::QBase;
use crate::scalar::Field;

pub(crate) fn is_nonpositive_integer<F: Field>(z: &F) -> bool {
    z.as_integer().is_some_and(|n| n <= 0)
}

fn check_pole<F: Field>(z: &F) -> Result<()> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(z.to_string()));
    }
    Ok(())
}

/// `(1 - q)^e`, using integer powers whenever possible.
pub(crate) fn one_minus_q_pow<F: Field>(e: &F, q: &QBase<F>) -> Result<F> {
    let base = q.one() - q.q();
    match e.as_integer() {
        Some(k) => Ok(base.powi(k)),
        None => (base.try_ln()? * e).try_exp(),
    }
}

/// `Gamma_q(z) = (1 - q)^(1 - z) (q; q)_inf / (q^z; q)_inf` (float mode).
///
/// Each infinite product is taken to `rel_tol / 4`.
pub fn qgamma<F: Field>(z: &F, q: &QBase<F>, rel_tol: &F) -> Result<F> {
    check_pole(z)?;
    let part_tol = rel_tol.clone() / &q.int(4);
    let num = qpochhammer_infinite(q.q(), q, &part_tol)?;
    let qz = q.qpow(z)?;
    let den = qpochhammer_infinite(&qz, q, &part_tol)?;
    if den.is_zero() {
        return Err(Error::Pole(z.to_string()));
    }
    let scale = one_minus_q_pow(&(q.one() - z), q)?;
    Ok(scale * &num / &den)
}

/// `Gamma_q(x + k) / Gamma_q(x) = (q^x; q)_k / (1 - q)^k`.
///
/// Exact in exact mode whenever `q^x` is on the half-power grid.
pub fn qgamma_ratio<F: Field>(x: &F, k: usize, q: &QBase<F>) -> Result<F> {
    check_pole(x)?;
    let poch = qpochhammer_pow(x, q, k)?;
    let scale = (q.one() - q.q()).powi(k as i64);
    Ok(poch / &scale)
}
