use crate::error::{Error, Result};
use crate::qcore::pochhammer::qpochhammer_infinite;
use crate::qcore::QBase;
use crate::scalar::Field;

/// Truncated first q-exponential `sum_{k<=order} z^k / (q; q)_k`, `|z| < 1`.
pub fn q_exponential<F: Field>(z: &F, q: &QBase<F>, order: usize) -> Result<F> {
    if z.abs() >= q.one() {
        return Err(Error::Divergent(format!("e_q(z) requires |z| < 1, got z = {z}")));
    }
    let one = q.one();
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut qk = one.clone();
    for _ in 1..=order {
        qk = qk * q.q();
        term = term * z / &(one.clone() - &qk);
        sum = sum + &term;
    }
    Ok(sum)
}

/// Upper bound on the tail `sum_{k>order} |z|^k / (q; q)_k`.
///
/// For `k > order`, `(q; q)_k >= (q; q)_{order+1} (1 - q^(order+2) / (1 - q))`.
/// Only meaningful once `q^(order+2) < 1 - q`.
pub fn q_exponential_tail_bound<F: Field>(z: &F, q: &QBase<F>, order: usize) -> F {
    let one = q.one();
    let az = z.abs();
    let mut poch = one.clone();
    let mut qk = one.clone();
    for _ in 1..=order + 1 {
        qk = qk * q.q();
        poch = poch * &(one.clone() - &qk);
    }
    // For k > order: (q;q)_k >= (q;q)_inf >= (q;q)_{order+1} * (1 - sum_{j>order+1} q^j)
    let tail_q = q.qpow_int(order as i64 + 2) / &(one.clone() - q.q());
    let lower = poch * &(one.clone() - &tail_q);
    az.powi(order as i64 + 1) / &((one - &az) * &lower)
}

/// `e_q(z) = 1 / (z; q)_inf` (float mode).
pub fn q_exponential_product<F: Field>(z: &F, q: &QBase<F>, rel_tol: &F) -> Result<F> {
    if z.abs() >= q.one() {
        return Err(Error::Divergent(format!("e_q(z) requires |z| < 1, got z = {z}")));
    }
    let den = qpochhammer_infinite(z, q, rel_tol)?;
    Ok(q.one() / &den)
}
