use crate::error::{Error, Result};
use crate::qcore::QBase;
use crate::scalar::Field;

/// Hard cap on the number of factors taken in an infinite product.
pub const MAX_PRODUCT_FACTORS: usize = 1_000_000;

/// Default relative tolerance for float-mode infinite products: 1024 units
/// of roundoff at the working precision.
pub fn default_rel_tol<F: Field>(like: &F) -> F {
    like.epsilon() * &like.int(1024)
}

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`, and `1` for `n = 0`.
pub fn qpochhammer_finite<F: Field>(a: &F, q: &QBase<F>, n: usize) -> F {
    let one = q.one();
    let mut acc = one.clone();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * &(one.clone() - &term);
        term = term * q.q();
    }
    acc
}

/// `(q^e; q)_n`.
pub fn qpochhammer_pow<F: Field>(exponent: &F, q: &QBase<F>, n: usize) -> Result<F> {
    let a = q.qpow(exponent)?;
    Ok(qpochhammer_finite(&a, q, n))
}

/// `(a; q)_inf` to relative accuracy `rel_tol`.
///
/// Factors are multiplied until the tail satisfies
/// `|log prod_{k>=N} (1 - a q^k)| <= |a| q^N / ((1 - q)(1 - |a| q^N)) <= rel_tol / 4`.
/// Returns zero when a factor vanishes (`a = q^-k`).
pub fn qpochhammer_infinite<F: Field>(a: &F, q: &QBase<F>, rel_tol: &F) -> Result<F> {
    if F::is_exact() {
        return Err(Error::ExactUnsupported("infinite q-Pochhammer product"));
    }
    if rel_tol.signum() <= 0 {
        return Err(Error::Domain(format!("relative tolerance {rel_tol} must be positive")));
    }
    let one = q.one();
    if a.is_zero() {
        return Ok(one);
    }
    let one_minus_q = one.clone() - q.q();
    let quarter_tol = rel_tol.clone() / &q.int(4);
    let mut acc = one.clone();
    let mut term = a.clone();
    for _ in 0..MAX_PRODUCT_FACTORS {
        let factor = one.clone() - &term;
        if factor.is_zero() {
            return Ok(q.zero());
        }
        acc = acc * &factor;
        term = term * q.q();
        let t = term.abs();
        if t < one {
            let tail = t.clone() / &(one_minus_q.clone() * &(one.clone() - &t));
            if tail <= quarter_tol {
                return Ok(acc);
            }
        }
    }
    Err(Error::NotConverged {
        what: format!("({a}; q)_inf"),
        terms: MAX_PRODUCT_FACTORS,
    })
}

/// Rising factorial `(mu)_n = mu (mu + 1) ... (mu + n - 1)`.
pub fn pochhammer_classical<F: Field>(mu: &F, n: usize) -> F {
    let mut acc = mu.one();
    let mut x = mu.clone();
    for _ in 0..n {
        acc = acc * &x;
        x = x + &mu.one();
    }
    acc
}
