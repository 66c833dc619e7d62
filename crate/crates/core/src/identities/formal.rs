use crate::error::{Error, Result};
use crate::hyperseries::{gamma_value, heine_f_series, heine_q0_series, kummer_1f1_unit_top, TruncatedSeries};
use crate::identities::{cancel_pairs, compare, Residual};
use crate::qcore::{is_nonpositive_integer, pochhammer_classical, qpochhammer_finite, qpochhammer_pow, QBase};
use crate::scalar::Field;

/// Parameters of the `_4 phi_3` in the Rahman-type product.
pub(crate) struct RahmanParameters<F: Field> {
    pub upper: Vec<F>,
    pub lower: Vec<F>,
    /// At `nu + eta = 1` the pair `q^((nu+eta-1)/2)` over `q^(nu+eta-1)` is
    /// `0/0`. Its limit is `1/2` in the first factor and 1 afterwards, so the
    /// pair is dropped and every coefficient past the first is halved.
    pub halve_tail: bool,
}

pub(crate) fn rahman_parameters<F: Field>(nu: &F, eta: &F, q: &QBase<F>) -> Result<RahmanParameters<F>> {
    let half = q.q().ratio(1, 2);
    let s = nu.clone() + eta - &q.one();
    let a = q.qpow(&(s.clone() * &half))?;
    let b = q.qpow(&((s.clone() + &q.one()) * &half))?;
    let halve_tail = s.is_zero();
    let mut upper = vec![b.clone(), -a.clone(), -b];
    let mut lower = vec![q.qpow(nu)?, q.qpow(eta)?];
    if !halve_tail {
        upper.insert(0, a);
        lower.push(q.qpow(&s)?);
    }
    let (upper, lower) = cancel_pairs(upper, lower);
    Ok(RahmanParameters { upper, lower, halve_tail })
}

/// Coefficients of `_4 phi_3` in the product identity, `z^0 .. z^order`.
fn rahman_coefficients<F: Field>(nu: &F, eta: &F, q: &QBase<F>, order: usize) -> Result<Vec<F>> {
    let par = rahman_parameters(nu, eta, q)?;
    let one = q.one();
    let mut out = Vec::with_capacity(order + 1);
    out.push(one.clone());
    let mut qk = one.clone();
    for k in 0..order {
        let mut r = out[k].clone();
        for u in &par.upper {
            r = r * &(one.clone() - &(u.clone() * &qk));
        }
        for l in &par.lower {
            let f = one.clone() - &(l.clone() * &qk);
            if f.is_zero() {
                return Err(Error::ParameterCollision(format!("lower parameter {l} equals q^-{k}")));
            }
            r = r / &f;
        }
        qk = qk * q.q();
        r = r / &(one.clone() - &qk);
        if k == 0 && par.halve_tail {
            r = r * &one.ratio(1, 2);
        }
        out.push(r);
    }
    Ok(out)
}

fn q_exponential_series<F: Field>(q: &QBase<F>, order: usize) -> TruncatedSeries<F> {
    let coeffs = (0..=order).map(|n| q.one() / &qpochhammer_finite(q.q(), q, n)).collect();
    TruncatedSeries::new(coeffs, "e_q")
}

const DEGENERATE_NOTE: &str = "nu + eta = 1: the 0/0 parameter pair was replaced by its limit";

/// `_2phi_1(0,0;q^nu;z) _2phi_1(0,0;q^eta;z)` against
/// `e_q(z) _4phi_3(q^((nu+eta-1)/2), q^((nu+eta)/2), -q^((nu+eta-1)/2), -q^((nu+eta)/2); q^nu, q^eta, q^(nu+eta-1); z)`
/// for the coefficients of `z^0 .. z^order`.
pub fn verify_rahman_product<F: Field>(nu: &F, eta: &F, q: &QBase<F>, order: usize) -> Result<Residual> {
    let lhs = heine_f_series(nu, q, order)?.cauchy_product(&heine_f_series(eta, q, order)?);
    let phi = TruncatedSeries::new(rahman_coefficients(nu, eta, q, order)?, "4phi3");
    let rhs = q_exponential_series(q, order).cauchy_product(&phi);
    let res = compare("rahman-product", lhs.coeffs(), rhs.coeffs())?;
    Ok(if rahman_parameters(nu, eta, q)?.halve_tail { res.with_note(DEGENERATE_NOTE) } else { res })
}

/// Both finite sums of the coefficient identity, for every `m' <= m`.
pub fn verify_finite_sum_identity<F: Field>(nu: &F, eta: &F, q: &QBase<F>, m: usize) -> Result<Residual> {
    let qq: Vec<F> = (0..=m).map(|k| qpochhammer_finite(q.q(), q, k)).collect();
    let pn: Vec<F> = (0..=m).map(|k| qpochhammer_pow(nu, q, k)).collect::<Result<_>>()?;
    let pe: Vec<F> = (0..=m).map(|k| qpochhammer_pow(eta, q, k)).collect::<Result<_>>()?;
    let coef = rahman_coefficients(nu, eta, q, m)?;
    let mut lhs = Vec::with_capacity(m + 1);
    let mut rhs = Vec::with_capacity(m + 1);
    for mm in 0..=m {
        let mut l = q.zero();
        let mut r = q.zero();
        for k in 0..=mm {
            let den = pn[k].clone() * &pe[mm - k] * &qq[k] * &qq[mm - k];
            if den.is_zero() {
                return Err(Error::ParameterCollision(format!("(q^nu;q)_{k} (q^eta;q)_{} vanishes", mm - k)));
            }
            l = l + &(q.one() / &den);
            r = r + &(coef[k].clone() / &qq[mm - k]);
        }
        lhs.push(l);
        rhs.push(r);
    }
    let res = compare("finite-sum", &lhs, &rhs)?;
    Ok(if rahman_parameters(nu, eta, q)?.halve_tail { res.with_note(DEGENERATE_NOTE) } else { res })
}

/// The two sides of the linearization identity as combinations of one
/// single-parameter family `F(c)`, with a Pochhammer-type `poch(c, n)`.
#[derive(Clone, Debug)]
pub struct LinearTerms<F: Field> {
    /// `coef * F(c1) F(c2)` on the product side.
    pub products: Vec<(F, F, F)>,
    /// `coef * F(c)` on the linear side.
    pub singles: Vec<(F, F)>,
}

pub fn linearization_sides<F: Field>(
    mu: &F,
    alpha: usize,
    beta: &F,
    mut poch: impl FnMut(&F, usize) -> Result<F>,
) -> Result<LinearTerms<F>> {
    let one = mu.one();
    let a = mu.int(alpha as i64);
    let mab = mu.clone() + &a + beta;
    let products = vec![
        (poch(&(mu.clone() + beta), alpha)?, mu.clone() + &a, mu.clone() + beta),
        (-poch(mu, alpha)?, mu.clone(), mab.clone()),
    ];
    let mut singles = Vec::with_capacity(2 * alpha);
    for j in 0..alpha {
        let jj = mu.int(j as i64);
        let c1 = mu.clone() + &one + &jj;
        let k1 = poch(&c1, alpha - 1 - j)? * &poch(&(mab.clone() - &one - &jj), 1 + j)?;
        singles.push((k1, c1));
        let c2 = mab.clone() - &jj;
        let k2 = poch(&(mu.clone() + &jj), alpha - j)? * &poch(&c2, j)?;
        singles.push((-k2, c2));
    }
    Ok(LinearTerms { products, singles })
}

fn natural<F: Field>(alpha: &F) -> Result<usize> {
    match alpha.as_integer() {
        Some(k) if k >= 0 => Ok(k as usize),
        _ => Err(Error::Hypothesis(format!("alpha must be a natural number, got {alpha}"))),
    }
}

fn assemble<F: Field>(
    terms: &LinearTerms<F>,
    mut series: impl FnMut(&F) -> Result<TruncatedSeries<F>>,
    order: usize,
    like: &F,
) -> Result<(TruncatedSeries<F>, TruncatedSeries<F>)> {
    let mut lhs = TruncatedSeries::zeros(order, like, "lhs");
    for (k, c1, c2) in &terms.products {
        lhs = lhs.add(&series(c1)?.cauchy_product(&series(c2)?).scale(k));
    }
    let mut rhs = TruncatedSeries::zeros(order, like, "rhs");
    for (k, c) in &terms.singles {
        rhs = rhs.add(&series(c)?.scale(k));
    }
    Ok((lhs, rhs))
}

/// Linearization of the product difference of `_2phi_1(q,0;q^c;x)`, checked
/// coefficientwise up to `order`. `alpha` must be a natural number.
pub fn verify_linearization<F: Field>(
    mu: &F,
    alpha: &F,
    beta: &F,
    q: &QBase<F>,
    order: usize,
) -> Result<Residual> {
    let k = natural(alpha)?;
    let terms = linearization_sides(mu, k, beta, |c, n| qpochhammer_pow(c, q, n))?;
    let (lhs, rhs) = assemble(&terms, |c| heine_q0_series(c, q, order), order, mu)?;
    compare("linearization", lhs.coeffs(), rhs.coeffs())
}

/// Right side at `alpha = 1` written out directly:
/// `(1 - q^(mu+beta)) F(mu+1) - (1 - q^mu) F(mu+beta+1)`.
pub fn linearization_alpha_one<F: Field>(
    mu: &F,
    beta: &F,
    q: &QBase<F>,
    order: usize,
) -> Result<TruncatedSeries<F>> {
    let one = q.one();
    let a = heine_q0_series(&(mu.clone() + &one), q, order)?;
    let b = heine_q0_series(&(mu.clone() + beta + &one), q, order)?;
    let ka = one.clone() - &q.qpow(&(mu.clone() + beta))?;
    let kb = one - &q.qpow(mu)?;
    Ok(a.scale(&ka).sub(&b.scale(&kb)))
}

/// The classical limit of the linearization, with `(c)_n` and `1F1(1;c;x)`.
pub fn verify_kummer_linearization<F: Field>(mu: &F, alpha: &F, beta: &F, order: usize) -> Result<Residual> {
    let k = natural(alpha)?;
    let terms = linearization_sides(mu, k, beta, |c, n| Ok(pochhammer_classical(c, n)))?;
    let (lhs, rhs) = assemble(&terms, |c| kummer_1f1_unit_top(c, order), order, mu)?;
    compare("kummer-linearization", lhs.coeffs(), rhs.coeffs())
}

/// The q-gamma summation for `m' = 0..=m`.
///
/// In exact mode both sides are multiplied by `Gamma_q(mu) Gamma_q(mu+beta)`
/// and every Gamma ratio becomes `(q^x;q)_k / (1-q)^k`, so nothing
/// transcendental is left. Float mode evaluates the Gammas directly.
pub fn verify_recqgamma<F: Field>(mu: &F, beta: &F, q: &QBase<F>, m: usize) -> Result<Residual> {
    let mb = mu.clone() + beta;
    for x in [mu, &mb] {
        if is_nonpositive_integer(x) {
            return Err(Error::Pole(x.to_string()));
        }
    }
    let one = q.one();
    let omq = one.clone() - q.q();
    let (mut lhs, mut rhs) = (Vec::with_capacity(m + 1), Vec::with_capacity(m + 1));
    if F::is_exact() {
        let pm: Vec<F> = (0..=m + 1).map(|k| qpochhammer_pow(mu, q, k)).collect::<Result<_>>()?;
        let pb: Vec<F> = (0..=m + 1).map(|k| qpochhammer_pow(&mb, q, k)).collect::<Result<_>>()?;
        for mm in 0..=m {
            let w = omq.powi(mm as i64 + 1);
            let mut l = q.zero();
            for k in 0..=mm {
                l = l + &(one.clone() / &(pm[k + 1].clone() * &pb[mm - k]))
                    - &(one.clone() / &(pm[k].clone() * &pb[mm - k + 1]));
            }
            lhs.push(l * &w);
            let r = (pb[mm + 1].clone() - &pm[mm + 1]) / &(pm[mm + 1].clone() * &pb[mm + 1]);
            rhs.push(r * &w);
        }
    } else {
        let g = |x: &F| gamma_value(x, q);
        for mm in 0..=m {
            let mut l = q.zero();
            for k in 0..=mm {
                let kk = q.int(k as i64);
                let rest = q.int((mm - k) as i64);
                l = l + &(one.clone() / &(g(&(kk.clone() + mu + &one))? * &g(&(rest.clone() + &mb))?))
                    - &(one.clone() / &(g(&(kk + mu))? * &g(&(rest + &mb + &one))?));
            }
            lhs.push(l);
            let top = qpochhammer_pow(&mb, q, mm + 1)? - &qpochhammer_pow(mu, q, mm + 1)?;
            let m1 = q.int(mm as i64 + 1);
            let den = g(&(mu.clone() + &m1))? * &g(&(mb.clone() + &m1))? * &omq.powi(mm as i64 + 1);
            rhs.push(top / &den);
        }
    }
    compare("q-gamma-summation", &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_rational, BigFloat, QuadRational, Rational};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn ex(s: &str) -> QuadRational {
        QuadRational::from_rational(r(s))
    }

    fn qe(s: &str) -> QBase<QuadRational> {
        QBase::exact_q(&r(s)).unwrap()
    }

    #[test]
    fn rahman_product_exact() {
        let res = verify_rahman_product(&ex("1"), &ex("1"), &qe("1/2"), 30).unwrap();
        assert!(res.exact_zero, "{res:?}");
        let q = QBase::exact_p(&r("3/4")).unwrap();
        let res = verify_rahman_product(&ex("3/2"), &ex("5/2"), &q, 25).unwrap();
        assert!(res.exact_zero, "{res:?}");
        let res = verify_rahman_product(&ex("1/2"), &ex("1/2"), &qe("1/4"), 12).unwrap();
        assert!(res.exact_zero && !res.notes.is_empty());
    }

    #[test]
    fn rahman_residual_symmetric() {
        let q = QBase::exact_p(&r("3/4")).unwrap();
        let a = verify_rahman_product(&ex("1/2"), &ex("2"), &q, 10).unwrap();
        let b = verify_rahman_product(&ex("2"), &ex("1/2"), &q, 10).unwrap();
        assert!(a.exact_zero);
        assert_eq!(a, b);
    }

    #[test]
    fn finite_sum_exact() {
        assert!(verify_finite_sum_identity(&ex("1"), &ex("2"), &qe("1/2"), 3).unwrap().exact_zero);
        let q = QBase::exact_p(&r("1/2")).unwrap();
        assert!(verify_finite_sum_identity(&ex("1/2"), &ex("1/2"), &q, 5).unwrap().exact_zero);
        let res = verify_finite_sum_identity(&ex("3/2"), &ex("1"), &q, 0).unwrap();
        assert!(res.exact_zero && res.order_checked == 0);
    }

    #[test]
    fn linearization_exact() {
        let q = qe("1/2");
        assert!(verify_linearization(&ex("1"), &ex("1"), &ex("1"), &q, 30).unwrap().exact_zero);
        assert!(verify_linearization(&ex("1/2"), &ex("3"), &ex("2"), &q, 30).unwrap().exact_zero);
        assert!(verify_linearization(&ex("1"), &ex("3/2"), &ex("1"), &q, 5).is_err());
        let terms = linearization_sides(&ex("1"), 1, &ex("0"), |c, n| qpochhammer_pow(c, &q, n)).unwrap();
        let (l, rr) = assemble(&terms, |c| heine_q0_series(c, &q, 8), 8, &ex("1")).unwrap();
        assert!(l.is_identically_zero() && rr.is_identically_zero());
    }

    #[test]
    fn linearization_alpha_one_paths_agree() {
        let q = qe("3/4");
        for (mu, beta) in [("1", "1"), ("1/2", "2"), ("2", "1/2")] {
            let terms = linearization_sides(&ex(mu), 1, &ex(beta), |c, n| qpochhammer_pow(c, &q, n)).unwrap();
            let (_, general) = assemble(&terms, |c| heine_q0_series(c, &q, 12), 12, &ex("1")).unwrap();
            let direct = linearization_alpha_one(&ex(mu), &ex(beta), &q, 12).unwrap();
            assert_eq!(general.coeffs(), direct.coeffs());
        }
    }

    #[test]
    fn kummer_exact() {
        assert!(verify_kummer_linearization(&ex("1"), &ex("1"), &ex("1"), 30).unwrap().exact_zero);
        assert!(verify_kummer_linearization(&ex("3/2"), &ex("2"), &ex("1/2"), 30).unwrap().exact_zero);
        let terms = linearization_sides(&ex("1"), 1, &ex("0"), |c, n| Ok(pochhammer_classical(c, n))).unwrap();
        let (l, _) = assemble(&terms, |c| kummer_1f1_unit_top(c, 6), 6, &ex("1")).unwrap();
        assert!(l.is_identically_zero());
    }

    #[test]
    fn recqgamma_exact_and_float() {
        assert!(verify_recqgamma(&ex("1"), &ex("1"), &qe("1/2"), 0).unwrap().exact_zero);
        assert!(verify_recqgamma(&ex("1/2"), &ex("3/2"), &qe("1/4"), 4).unwrap().exact_zero);
        let zero = verify_recqgamma(&ex("1/2"), &ex("0"), &qe("1/4"), 4).unwrap();
        assert!(zero.exact_zero);
        let qf = QBase::float_q(&r("1/4"), 50).unwrap();
        let mu: BigFloat = qf.lift(&r("1/2"));
        let res = verify_recqgamma(&mu, &qf.lift(&r("3/2")), &qf, 6).unwrap();
        assert!(res.max_rel.to_f64() < 1e-40, "{res:?}");
        assert!(verify_recqgamma(&ex("-1"), &ex("1"), &qe("1/2"), 2).is_err());
    }
}
