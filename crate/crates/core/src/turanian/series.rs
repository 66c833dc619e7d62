use crate::error::{Error, Result};
use crate::hyperseries::{
    g_series, heine_f_series, heine_f_tilde_series, Normalization, TruncatedSeries,
};
use crate::qcore::{qpochhammer_pow, ParamVector, QBase};
use crate::scalar::{round_rational, Field, Rational};

/// Series families whose Turanian is studied.
#[derive(Clone, Debug)]
pub enum Family<F: Field> {
    /// `f(mu; x) = _2phi_1(0, 0; q^mu; x)`.
    HeineF,
    /// `f(mu; x) / Gamma_q(mu)`.
    HeineFTilde,
    /// The Gamma-normalized `_t phi_s` with parameter vectors `a`, `b`.
    GNormalized { a: ParamVector<F>, b: ParamVector<F> },
}

impl<F: Field> Family<F> {
    pub fn name(&self) -> &'static str {
        match self {
            Family::HeineF => "heine-f",
            Family::HeineFTilde => "heine-f-tilde",
            Family::GNormalized { .. } => "g",
        }
    }
}

/// `Delta(alpha, beta; x) = F(mu+alpha) F(mu+beta) - F(mu) F(mu+alpha+beta)`.
#[derive(Clone, Debug)]
pub struct TuranianSpec<F: Field> {
    pub family: Family<F>,
    pub mu: F,
    pub alpha: F,
    pub beta: F,
    pub q: QBase<F>,
    pub order: usize,
}

/// Turanian coefficients as `center +- radius`. The radius is zero for
/// exact arithmetic; it is nonzero for float roundoff or when an exact
/// normalization constant is only known to lie in a rational interval.
#[derive(Clone, Debug)]
pub struct TuranianSeries<F: Field> {
    pub center: TruncatedSeries<F>,
    pub radius: Vec<F>,
    /// What the coefficients were multiplied by (always a positive factor).
    pub normalization: String,
}

impl<F: Field> TuranianSeries<F> {
    pub fn is_exact(&self) -> bool {
        self.radius.iter().all(Field::is_zero)
    }
}

impl<F: Field> TuranianSpec<F> {
    pub fn new(family: Family<F>, mu: F, alpha: F, beta: F, q: QBase<F>, order: usize) -> Self {
        TuranianSpec {
            family,
            mu,
            alpha,
            beta,
            q,
            order,
        }
    }

    /// Same spec with `alpha` and `beta` exchanged.
    pub fn swapped(&self) -> Self {
        let mut s = self.clone();
        std::mem::swap(&mut s.alpha, &mut s.beta);
        s
    }

    pub fn with_alpha(&self, alpha: F) -> Self {
        let mut s = self.clone();
        s.alpha = alpha;
        s
    }

    pub fn with_mu(&self, mu: F) -> Self {
        let mut s = self.clone();
        s.mu = mu;
        s
    }

    /// The parameter ranges on which the Turanian is defined here.
    pub fn validate(&self) -> Result<()> {
        if self.alpha.signum() < 0 || self.beta.signum() < 0 {
            return Err(Error::Hypothesis(format!(
                "alpha, beta must be >= 0, got {}, {}",
                self.alpha, self.beta
            )));
        }
        match &self.family {
            Family::HeineF | Family::HeineFTilde => {
                if self.mu.signum() <= 0 {
                    return Err(Error::Hypothesis(format!("mu must be > 0, got {}", self.mu)));
                }
            }
            Family::GNormalized { a, b } => {
                if self.mu.signum() < 0 {
                    return Err(Error::Hypothesis(format!("mu must be >= 0, got {}", self.mu)));
                }
                if let Some(bad) = a.entries().iter().chain(b.entries()).find(|x| x.signum() < 0) {
                    return Err(Error::Hypothesis(format!("parameter {bad} must be nonnegative")));
                }
            }
        }
        Ok(())
    }
}

/// Builds the Turanian of `spec` through two Cauchy products.
///
/// Exact mode never evaluates a transcendental Gamma value. For `f~` and `g`
/// the result is multiplied by a positive constant (recorded in
/// `normalization`) so that only Gamma ratios at integer distance remain.
pub fn turanian_series<F: Field>(spec: &TuranianSpec<F>) -> Result<TuranianSeries<F>> {
    spec.validate()?;
    let (mu, al, be, q, m) = (&spec.mu, &spec.alpha, &spec.beta, &spec.q, spec.order);
    let mu_a = mu.clone() + al;
    let mu_b = mu.clone() + be;
    let mu_ab = mu_a.clone() + be;
    match &spec.family {
        Family::HeineF => {
            let p1 = heine_f_series(&mu_a, q, m)?.cauchy_product(&heine_f_series(&mu_b, q, m)?);
            let p2 = heine_f_series(mu, q, m)?.cauchy_product(&heine_f_series(&mu_ab, q, m)?);
            finish(&p1, &p2, None, "none", spec)
        }
        Family::HeineFTilde if !F::is_exact() => {
            let s = |x: &F| heine_f_tilde_series(x, q, m, false);
            let p1 = s(&mu_a)?.cauchy_product(&s(&mu_b)?);
            let p2 = s(mu)?.cauchy_product(&s(&mu_ab)?);
            finish(&p1, &p2, None, "none", spec)
        }
        Family::HeineFTilde => {
            // times Gamma_q(mu+alpha) Gamma_q(mu+beta):
            // f(mu+alpha) f(mu+beta) - r f(mu) f(mu+alpha+beta)
            let p1 = heine_f_series(&mu_a, q, m)?.cauchy_product(&heine_f_series(&mu_b, q, m)?);
            let p2 = heine_f_series(mu, q, m)?.cauchy_product(&heine_f_series(&mu_ab, q, m)?);
            let norm = "Gamma_q(mu+alpha) Gamma_q(mu+beta)";
            let r = if let Some(k) = al.as_integer() {
                RatioBound::Exact(
                    qpochhammer_pow(mu, q, k as usize)? / &qpochhammer_pow(&mu_b, q, k as usize)?,
                )
            } else if let Some(k) = be.as_integer() {
                RatioBound::Exact(
                    qpochhammer_pow(mu, q, k as usize)? / &qpochhammer_pow(&mu_a, q, k as usize)?,
                )
            } else {
                gamma_ratio_enclosure(mu, al, be, q)?
            };
            finish(&p1, &p2, Some(r), norm, spec)
        }
        Family::GNormalized { a, b } if !F::is_exact() => {
            let s = |x: &F| g_series(a, b, x, q, m, &Normalization::Absolute);
            let p1 = s(&mu_a)?.cauchy_product(&s(&mu_b)?);
            let p2 = s(mu)?.cauchy_product(&s(&mu_ab)?);
            finish(&p1, &p2, None, "none", spec)
        }
        Family::GNormalized { a, b } => {
            // divide by P(mu) P(mu+beta): [P(mu+alpha)/P(mu)] phi phi - [P(mu+alpha+beta)/P(mu+beta)] phi phi
            let (shift, mu_s, mu_t, mu_st) = if let Some(k) = al.as_integer() {
                (k, &mu_a, &mu_b, &mu_ab)
            } else if let Some(k) = be.as_integer() {
                (k, &mu_b, &mu_a, &mu_ab)
            } else {
                return Err(Error::OffGrid(
                    "exact g Turanian needs alpha or beta to be an integer".into(),
                ));
            };
            let s = |x: &F| g_series(a, b, x, q, m, &Normalization::RelativeTo(x.clone()));
            let lead1 = crate::hyperseries::gamma_prefactor_shift(a, b, mu, shift, q)?;
            let lead2 = crate::hyperseries::gamma_prefactor_shift(a, b, mu_t, shift, q)?;
            let p1 = s(mu_s)?.cauchy_product(&s(mu_t)?).scale(&lead1);
            let p2 = s(mu)?.cauchy_product(&s(mu_st)?).scale(&lead2);
            let norm = if al.as_integer().is_some() {
                "1 / (P(mu) P(mu+beta)), P = Gamma_q(a+.)/Gamma_q(b+.)"
            } else {
                "1 / (P(mu) P(mu+alpha)), P = Gamma_q(a+.)/Gamma_q(b+.)"
            };
            finish(&p1, &p2, None, norm, spec)
        }
    }
}

/// The constant multiplying the second product, exact or enclosed.
enum RatioBound<F> {
    Exact(F),
    Interval(Rational, Rational),
}

const ENCLOSURE_BITS: usize = 320;

/// Encloses `Gamma_q(mu+alpha) Gamma_q(mu+beta) / (Gamma_q(mu) Gamma_q(mu+alpha+beta))`
/// `= prod_j (1-q^(mu+j))(1-q^(mu+alpha+beta+j)) / ((1-q^(mu+alpha+j))(1-q^(mu+beta+j)))`.
///
/// Every factor lies in `(0, 1)`, so the partial product over `j < N` is an
/// upper bound, and `1 - (q^(mu+N) + q^(mu+alpha+beta+N)) / (1-q)` times it
/// is a lower bound.
fn gamma_ratio_enclosure<F: Field>(mu: &F, al: &F, be: &F, q: &QBase<F>) -> Result<RatioBound<F>> {
    let one = q.one();
    let mut x0 = q.qpow(mu)?;
    let mut xa = q.qpow(&(mu.clone() + al))?;
    let mut xb = q.qpow(&(mu.clone() + be))?;
    let mut xab = q.qpow(&(mu.clone() + al + be))?;
    let bits = ENCLOSURE_BITS;
    let mut lo = Rational::ONE;
    let mut hi = Rational::ONE;
    let target = Rational::ONE / Rational::from(2).pow(bits - 16);
    let one_minus_q = one.clone() - q.q();
    for _ in 0..1_000_000 {
        let factor = (one.clone() - &x0) * &(one.clone() - &xab)
            / &((one.clone() - &xa) * &(one.clone() - &xb));
        let (f_lo, f_hi) = factor.enclose_rational(bits);
        lo = round_rational(&(lo * f_lo), bits, false);
        hi = round_rational(&(hi * f_hi), bits, true);
        x0 = x0 * q.q();
        xa = xa * q.q();
        xb = xb * q.q();
        xab = xab * q.q();
        let tail = (x0.clone() + &xab) / &one_minus_q;
        let (_, tail_hi) = tail.enclose_rational(64);
        if tail_hi < target {
            let lo = round_rational(&(lo * (Rational::ONE - tail_hi)), bits, false);
            return Ok(RatioBound::Interval(lo, hi));
        }
    }
    Err(Error::NotConverged {
        what: "Gamma ratio enclosure".into(),
        terms: 1_000_000,
    })
}

fn finish<F: Field>(
    p1: &TruncatedSeries<F>,
    p2: &TruncatedSeries<F>,
    ratio: Option<RatioBound<F>>,
    normalization: &str,
    spec: &TuranianSpec<F>,
) -> Result<TuranianSeries<F>> {
    let like = p1.coeff(0);
    let (center, mut radius) = match ratio {
        None => (p1.sub(p2), vec![like.zero(); p1.order() + 1]),
        Some(RatioBound::Exact(r)) => (p1.sub(&p2.scale(&r)), vec![like.zero(); p1.order() + 1]),
        Some(RatioBound::Interval(lo, hi)) => {
            let two = Rational::from(2);
            let mid = like.lift(&((lo.clone() + &hi) / &two));
            let half = like.lift(&((hi - lo) / two));
            let radius = p2.coeffs().iter().map(|c| c.abs() * &half).collect();
            (p1.sub(&p2.scale(&mid)), radius)
        }
    };
    if !F::is_exact() {
        // roundoff: every coefficient is a sum of at most m + 1 products of
        // values carrying O(m) roundings each, plus Gamma values to 1024 ulps
        let eps = like.epsilon();
        for (k, r) in radius.iter_mut().enumerate() {
            let mag = p1.coeff(k).abs() + &p2.coeff(k).abs();
            let ulps = like.int(4096 + 16 * (k as i64 + 1));
            *r = r.clone() + &(mag * &eps * &ulps);
        }
    }
    let label = format!(
        "Delta_{}(alpha = {}, beta = {}; mu = {})",
        spec.family.name(),
        spec.alpha,
        spec.beta,
        spec.mu
    );
    Ok(TuranianSeries {
        center: center.relabel(label),
        radius,
        normalization: normalization.to_string(),
    })
}
