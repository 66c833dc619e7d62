use crate::error::{Error, Result};
use crate::scalar::{BigFloat, Field, QuadRational, Rational};

/// The base `q` in `(0, 1)`, stored together with its square root `p`.
///
/// Every power `q^e` with `2e` an integer is computed as `p^(2e)`, so half
/// integer exponents stay exact in exact mode. When `p` itself is rational,
/// `sqrt p` is exact too and quarter-integer exponents are accepted.
#[derive(Clone, Debug)]
pub struct QBase<F: Field> {
    p: F,
    q: F,
    root: Option<F>,
    ln_q: Option<F>,
}

impl<F: Field> QBase<F> {
    /// Builds the base from its half-power `p`, `0 < p < 1`.
    pub fn from_p(p: F) -> Result<Self> {
        if p.signum() <= 0 || p >= p.one() {
            return Err(Error::Domain(format!("half-power base p = {p} must lie in (0, 1)")));
        }
        let q = p.clone() * &p;
        let ln_q = q.try_ln().ok();
        let root = p.try_sqrt().ok();
        Ok(QBase { p, q, root, ln_q })
    }

    /// Builds the base from `q`, `0 < q < 1`.
    pub fn from_q(q: F) -> Result<Self> {
        if q.signum() <= 0 || q >= q.one() {
            return Err(Error::Domain(format!("base q = {q} must lie in (0, 1)")));
        }
        let p = q.try_sqrt()?;
        let ln_q = q.try_ln().ok();
        let root = p.try_sqrt().ok();
        Ok(QBase { p, q, root, ln_q })
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn p(&self) -> &F {
        &self.p
    }

    /// A constant in the context of this base.
    pub fn lift(&self, r: &Rational) -> F {
        self.q.lift(r)
    }

    pub fn int(&self, n: i64) -> F {
        self.q.int(n)
    }

    pub fn one(&self) -> F {
        self.q.one()
    }

    pub fn zero(&self) -> F {
        self.q.zero()
    }

    /// `p^u = q^(u/2)`.
    pub fn qpow_half(&self, u: i64) -> F {
        if u % 2 == 0 {
            self.q.powi(u / 2)
        } else {
            self.p.powi(u)
        }
    }

    /// `q^k` for an integer `k`.
    pub fn qpow_int(&self, k: i64) -> F {
        self.q.powi(k)
    }

    /// `q^e`. Exact mode accepts exponents on the half-integer grid, or the
    /// quarter-integer grid when `p` is rational.
    pub fn qpow(&self, e: &F) -> Result<F> {
        let twice = e.clone() + e;
        if let Some(u) = twice.as_integer() {
            return Ok(self.qpow_half(u));
        }
        if F::is_exact() {
            if let (Some(u), Some(root)) = ((twice.clone() + &twice).as_integer(), &self.root) {
                return Ok(root.powi(u));
            }
            return Err(Error::OffGrid(format!(
                "q^({e}): exponent is not a multiple of 1/2 (or 1/4 with a rational p)"
            )));
        }
        let ln_q = self.ln_q.as_ref().ok_or(Error::ExactUnsupported("ln q"))?;
        (ln_q.clone() * e).try_exp()
    }
}

impl QBase<QuadRational> {
    /// Exact base from a rational `q`. The half-power is exact in `Q(sqrt d)`.
    pub fn exact_q(q: &Rational) -> Result<Self> {
        Self::from_q(QuadRational::from_rational(q.clone()))
    }

    /// Exact base from a rational half-power `p`, so `q = p^2`.
    pub fn exact_p(p: &Rational) -> Result<Self> {
        Self::from_p(QuadRational::from_rational(p.clone()))
    }
}

impl QBase<BigFloat> {
    pub fn float_q(q: &Rational, digits: u32) -> Result<Self> {
        Self::from_q(BigFloat::with_digits(q, digits))
    }

    pub fn float_p(p: &Rational, digits: u32) -> Result<Self> {
        Self::from_p(BigFloat::with_digits(p, digits))
    }
}
