//! Adaptive composite Gauss-Legendre quadrature in the working field.

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre<F: Field>(n: usize, like: &F) -> Result<Vec<(F, F)>> {
    if n == 0 {
        return Err(Error::Domain("quadrature needs at least one node".into()));
    }
    if F::is_exact() {
        return Err(Error::ExactUnsupported("Gauss-Legendre nodes"));
    }
    let one = like.one();
    let two = like.int(2);
    let tol = like.epsilon() * &like.int(16);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = like.lift(
            &Rational::try_from(guess).map_err(|_| Error::Domain(format!("bad node guess {guess}")))?,
        );
        let mut dp = one.clone();
        for _ in 0..100 {
            // P_n and P_n' by the three-term recurrence
            let (mut p0, mut p1) = (one.clone(), x.clone());
            for k in 2..=n {
                let k_ = like.int(k as i64);
                let p2 = (x.clone() * &p1 * &like.int(2 * k as i64 - 1) - &(p0.clone() * &like.int(k as i64 - 1))) / &k_;
                p0 = p1;
                p1 = p2;
            }
            let (pn, pn1) = if n == 1 { (x.clone(), one.clone()) } else { (p1, p0) };
            dp = like.int(n as i64) * &(x.clone() * &pn - &pn1) / &(x.clone() * &x - &one);
            let step = pn / &dp;
            x = x - &step;
            if step.abs() <= tol {
                break;
            }
        }
        let w = two.clone() / &((one.clone() - &(x.clone() * &x)) * &dp * &dp);
        out.push((x, w));
    }
    Ok(out)
}

/// Quadrature settings: upper limit, absolute tolerance and rule size.
#[derive(Clone, Debug)]
pub struct QuadSpec<F: Field> {
    pub upper: F,
    pub abs_tol: F,
    pub nodes: usize,
}

fn panel<F: Field>(f: &mut impl FnMut(&F) -> Result<F>, a: &F, b: &F, rule: &[(F, F)]) -> Result<F> {
    let half = (b.clone() - a) * &a.ratio(1, 2);
    let mid = (b.clone() + a) * &a.ratio(1, 2);
    let mut s = a.zero();
    for (x, w) in rule {
        s = s + &(w.clone() * &f(&(mid.clone() + &(half.clone() * x)))?);
    }
    Ok(s * &half)
}

/// `int_a^b f` by bisection until a panel and its two halves agree to a
/// share of `abs_tol` proportional to the panel width.
pub fn integrate<F: Field>(
    mut f: impl FnMut(&F) -> Result<F>,
    a: &F,
    b: &F,
    abs_tol: &F,
    nodes: usize,
) -> Result<F> {
    const MAX_PANELS: usize = 1 << 14;
    let rule = gauss_legendre(nodes, a)?;
    let width = b.clone() - a;
    let mut stack = vec![(a.clone(), b.clone(), panel(&mut f, a, b, &rule)?)];
    let mut total = a.zero();
    let mut panels = 0;
    while let Some((lo, hi, whole)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::NotConverged { what: "adaptive quadrature".into(), terms: MAX_PANELS });
        }
        let mid = (lo.clone() + &hi) * &a.ratio(1, 2);
        let left = panel(&mut f, &lo, &mid, &rule)?;
        let right = panel(&mut f, &mid, &hi, &rule)?;
        let split = left.clone() + &right;
        let share = abs_tol.clone() * &((hi.clone() - &lo) / &width);
        if (split.clone() - &whole).abs() <= share {
            total = total + &split;
        } else {
            stack.push((mid.clone(), hi, right));
            stack.push((lo, mid, left));
        }
    }
    Ok(total)
}
