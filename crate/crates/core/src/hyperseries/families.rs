use crate::error::{Error, Result};
use crate::hyperseries::phi::{tphis_series, PhiSpec};
use crate::hyperseries::series::TruncatedSeries;
use crate::qcore::{
    default_rel_tol, is_nonpositive_integer, pochhammer_classical, qgamma, qgamma_ratio,
    qpochhammer_pow, ParamVector, QBase,
};
use crate::scalar::Field;

/// How the Gamma prefactor of a normalized series is carried.
#[derive(Clone, Debug, PartialEq)]
pub enum Normalization<F: Field> {
    /// The true prefactor. Needs float mode unless every Gamma argument is a
    /// positive integer.
    Absolute,
    /// The prefactor divided by its value at the reference shift `mu0`.
    /// `mu - mu0` must be an integer; the ratio is then a finite product.
    RelativeTo(F),
}

/// `Gamma_q(x)`, exact when `x` is a positive integer.
pub fn gamma_value<F: Field>(x: &F, q: &QBase<F>) -> Result<F> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x.to_string()));
    }
    if let Some(n) = x.as_integer() {
        return qgamma_ratio(&q.one(), (n - 1) as usize, q);
    }
    if F::is_exact() {
        return Err(Error::ExactUnsupported("q-gamma at a non-integer argument"));
    }
    qgamma(x, q, &default_rel_tol(q.q()))
}

/// `prod Gamma_q(a + mu) / prod Gamma_q(b + mu)`.
pub fn gamma_prefactor<F: Field>(
    a: &ParamVector<F>,
    b: &ParamVector<F>,
    mu: &F,
    q: &QBase<F>,
) -> Result<F> {
    // equal upper and lower parameters cancel without evaluating Gamma_q
    let mut lower: Vec<&F> = b.entries().iter().collect();
    let mut upper = Vec::new();
    for ai in a.entries() {
        match lower.iter().position(|bi| *bi == ai) {
            Some(i) => {
                lower.swap_remove(i);
            }
            None => upper.push(ai),
        }
    }
    let mut p = q.one();
    for ai in upper {
        p = p * &gamma_value(&(ai.clone() + mu), q)?;
    }
    for bi in lower {
        p = p / &gamma_value(&(bi.clone() + mu), q)?;
    }
    Ok(p)
}

/// `P(mu0 + k) / P(mu0)` for the prefactor `P` of `g`, with integer `k`:
/// `prod (q^(a+mu0); q)_k / prod (q^(b+mu0); q)_k (1-q)^(k(s-t))`.
pub fn gamma_prefactor_shift<F: Field>(
    a: &ParamVector<F>,
    b: &ParamVector<F>,
    mu0: &F,
    k: i64,
    q: &QBase<F>,
) -> Result<F> {
    if k < 0 {
        let back = gamma_prefactor_shift(a, b, &(mu0.clone() + &q.int(k)), -k, q)?;
        return Ok(q.one() / &back);
    }
    let k = k as usize;
    let mut r = q.one();
    for ai in a.entries() {
        let x = ai.clone() + mu0;
        if is_nonpositive_integer(&x) {
            return Err(Error::Pole(x.to_string()));
        }
        r = r * &qpochhammer_pow(&x, q, k)?;
    }
    for bi in b.entries() {
        let x = bi.clone() + mu0;
        if is_nonpositive_integer(&x) {
            return Err(Error::Pole(x.to_string()));
        }
        let den = qpochhammer_pow(&x, q, k)?;
        if den.is_zero() {
            return Err(Error::Pole(format!("Gamma_q({x} + {k})")));
        }
        r = r / &den;
    }
    let excess = b.len() as i64 - a.len() as i64;
    Ok(r * &(q.one() - q.q()).powi(k as i64 * excess))
}

fn integer_shift<F: Field>(mu: &F, mu0: &F) -> Result<i64> {
    (mu.clone() - mu0).as_integer().ok_or_else(|| {
        Error::OffGrid(format!(
            "relative normalization needs mu - mu0 to be an integer, got mu = {mu}, mu0 = {mu0}"
        ))
    })
}

/// Series in `x` of
/// `g(mu; x) = Gamma_q(a+mu)/Gamma_q(b+mu) _t phi_s(q^(a+mu); q^(b+mu); (q-1)^(1+s-t) x)`
/// with the argument factor folded into the coefficients.
pub fn g_series<F: Field>(
    a: &ParamVector<F>,
    b: &ParamVector<F>,
    mu: &F,
    q: &QBase<F>,
    order: usize,
    norm: &Normalization<F>,
) -> Result<TruncatedSeries<F>> {
    let upper = a
        .entries()
        .iter()
        .map(|ai| q.qpow(&(ai.clone() + mu)))
        .collect::<Result<Vec<_>>>()?;
    let lower = b
        .entries()
        .iter()
        .map(|bi| q.qpow(&(bi.clone() + mu)))
        .collect::<Result<Vec<_>>>()?;
    let spec = PhiSpec::new(upper, lower, q.clone())?;
    let phi = tphis_series(&spec, order)?;
    let prefactor = match norm {
        Normalization::Absolute => gamma_prefactor(a, b, mu, q)?,
        Normalization::RelativeTo(mu0) => {
            gamma_prefactor_shift(a, b, mu0, integer_shift(mu, mu0)?, q)?
        }
    };
    let arg = (q.q().clone() - &q.one()).powi(spec.excess());
    let mut scale = prefactor;
    let mut coeffs = Vec::with_capacity(order + 1);
    for c in phi.coeffs() {
        coeffs.push(c.clone() * &scale);
        scale = scale * &arg;
    }
    let label = format!("g(mu = {mu})");
    let mut out = TruncatedSeries::new(coeffs, label).with_validity(phi.validity());
    if let Some(note) = phi.tail_note() {
        out = out.with_tail_note(note.to_string());
    }
    Ok(out)
}

fn require_positive<F: Field>(mu: &F, what: &str) -> Result<()> {
    if mu.signum() <= 0 {
        return Err(Error::Domain(format!("{what} needs mu > 0, got {mu}")));
    }
    Ok(())
}

/// `f(mu; x) = _2 phi_1(0, 0; q^mu; x)`, coefficient `1 / ((q^mu; q)_n (q; q)_n)`.
pub fn heine_f_series<F: Field>(mu: &F, q: &QBase<F>, order: usize) -> Result<TruncatedSeries<F>> {
    require_positive(mu, "heine f")?;
    let spec = PhiSpec::new(vec![q.zero(), q.zero()], vec![q.qpow(mu)?], q.clone())?;
    Ok(tphis_series(&spec, order)?.relabel(format!("f(mu = {mu})")))
}

/// `f~(mu; x) = f(mu; x) / Gamma_q(mu)`.
///
/// With `relative = true` the common factor `1 / Gamma_q(mu)` is left out, so
/// the coefficients are those of `f`. Otherwise the factor is included,
/// which needs float mode unless `mu` is a positive integer.
pub fn heine_f_tilde_series<F: Field>(
    mu: &F,
    q: &QBase<F>,
    order: usize,
    relative: bool,
) -> Result<TruncatedSeries<F>> {
    if is_nonpositive_integer(mu) {
        return Err(Error::Pole(mu.to_string()));
    }
    let f = heine_f_series(mu, q, order)?;
    if relative {
        return Ok(f
            .relabel(format!("f~(mu = {mu}) * Gamma_q(mu)"))
            .with_tail_note("relative to the common factor 1/Gamma_q(mu)"));
    }
    let g = gamma_value(mu, q)?;
    Ok(f.scale(&(q.one() / &g)).relabel(format!("f~(mu = {mu})")))
}

/// `_2 phi_1(q, 0; q^c; x)`, coefficient `1 / (q^c; q)_n`.
pub fn heine_q0_series<F: Field>(c: &F, q: &QBase<F>, order: usize) -> Result<TruncatedSeries<F>> {
    let spec = PhiSpec::new(vec![q.q().clone(), q.zero()], vec![q.qpow(c)?], q.clone())?;
    Ok(tphis_series(&spec, order)?.relabel(format!("2phi1(q, 0; q^{c})")))
}

/// `_1 F_1(1; b; x)`, coefficient `1 / (b)_n`.
pub fn kummer_1f1_unit_top<F: Field>(b: &F, order: usize) -> Result<TruncatedSeries<F>> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(format!("1F1 lower parameter {b}")));
    }
    let coeffs = (0..=order).map(|n| b.one() / &pochhammer_classical(b, n)).collect();
    Ok(TruncatedSeries::new(coeffs, format!("1F1(1; {b})")))
}
