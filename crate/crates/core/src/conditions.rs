//! Which branch of the Turanian sign theorem applies to a pair of parameter
//! vectors: chain conditions on elementary symmetric polynomials, the
//! weak-supermajorization shortcut, and monotonicity of `R_{t,s}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{elementary_symmetric, weak_supermajorizes, ParamVector, QBase};
use crate::scalar::Field;

/// `c_k = q^(-a_k) - 1` and `d_k = q^(-b_k) - 1`.
pub fn derive_cd<F: Field>(
    a: &ParamVector<F>,
    b: &ParamVector<F>,
    q: &QBase<F>,
) -> Result<(Vec<F>, Vec<F>)> {
    let map = |v: &ParamVector<F>| -> Result<Vec<F>> {
        v.entries()
            .iter()
            .map(|x| {
                if x.signum() < 0 {
                    return Err(Error::Hypothesis(format!("parameter {x} must be nonnegative")));
                }
                Ok(q.qpow(&(-x.clone()))? - &q.one())
            })
            .collect()
    };
    Ok((map(a)?, map(b)?))
}

fn check_entries<F: Field>(v: &[F]) -> Result<()> {
    if let Some(bad) = v.iter().find(|x| x.signum() < 0) {
        return Err(Error::Domain(format!("chain conditions need entries >= 0, got {bad}")));
    }
    Ok(())
}

fn like<F: Field>(c: &[F], d: &[F]) -> Option<F> {
    c.first().or(d.first()).map(|x| x.one())
}

/// The chain `e_t(c)/e_s(d) <= e_(t-1)(c)/e_(s-1)(d) <= ... <= e_(t-s)(c)`
/// for any `t >= s`, by cross-multiplication.
pub(crate) fn increasing_chain<F: Field>(c: &[F], d: &[F]) -> bool {
    let (t, s) = (c.len(), d.len());
    let Some(one) = like(c, d) else { return true };
    let ec = elementary_symmetric(c, &one);
    let ed = elementary_symmetric(d, &one);
    (0..s).all(|k| ec[t - k].clone() * &ed[s - k - 1] <= ec[t - k - 1].clone() * &ed[s - k])
}

/// The mirror chain with the roles of `c` and `d` exchanged, for `t <= s`.
pub(crate) fn decreasing_chain<F: Field>(c: &[F], d: &[F]) -> bool {
    let (t, s) = (c.len(), d.len());
    let Some(one) = like(c, d) else { return true };
    let ec = elementary_symmetric(c, &one);
    let ed = elementary_symmetric(d, &one);
    (0..t).all(|k| ed[s - k].clone() * &ec[t - k - 1] <= ed[s - k - 1].clone() * &ec[t - k])
}

/// Chain condition for case (a) of the sign theorem; needs `s <= t <= s + 1`.
pub fn chain_condition_a<F: Field>(c: &[F], d: &[F]) -> Result<bool> {
    let (t, s) = (c.len(), d.len());
    if t < s || t > s + 1 {
        return Err(Error::DimensionMismatch(format!(
            "case (a) needs s <= t <= s + 1, got t = {t}, s = {s}"
        )));
    }
    check_entries(c)?;
    check_entries(d)?;
    Ok(increasing_chain(c, d))
}

/// Chain condition for case (b); needs `t <= s`.
pub fn chain_condition_b<F: Field>(c: &[F], d: &[F]) -> Result<bool> {
    let (t, s) = (c.len(), d.len());
    if t > s {
        return Err(Error::DimensionMismatch(format!("case (b) needs t <= s, got t = {t}, s = {s}")));
    }
    check_entries(c)?;
    check_entries(d)?;
    Ok(decreasing_chain(c, d))
}

/// Ratio form of the chain condition, for cross-checking. `None` if a
/// denominator vanishes.
pub fn chain_by_division<F: Field>(c: &[F], d: &[F], increasing: bool) -> Option<bool> {
    let (num, den) = if increasing { (c, d) } else { (d, c) };
    let (t, s) = (num.len(), den.len());
    let one = like(c, d)?;
    let en = elementary_symmetric(num, &one);
    let ed = elementary_symmetric(den, &one);
    let mut ratios = Vec::with_capacity(s + 1);
    for k in 0..=s {
        if ed[s - k].is_zero() {
            return None;
        }
        ratios.push(en[t - k].clone() / &ed[s - k]);
    }
    Some(ratios.windows(2).all(|w| w[0] <= w[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainCase {
    /// `Delta_g <= 0`, non-positive coefficients.
    A,
    /// `Delta_g >= 0`, non-negative coefficients.
    B,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainVerdict {
    pub applies_case_a: bool,
    pub applies_case_b: bool,
    pub via_majorization: bool,
    /// Indices into the longer vector of the majorization witness.
    pub witness_subvector: Option<Vec<usize>>,
    pub witness_case: Option<ChainCase>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Indices of a subvector `long'` with `short <_W long'`.
fn find_witness<F: Field>(short: &[F], long: &[F]) -> Result<Option<Vec<usize>>> {
    for idx in combinations(long.len(), short.len()) {
        let sub: Vec<F> = idx.iter().map(|&i| long[i].clone()).collect();
        if weak_supermajorizes(short, &sub)? {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}

/// Exhaustive search for a weak-supermajorization witness, together with
/// the chain conditions themselves. A witness without the chain it implies
/// is reported as `ImplicationViolated`.
pub fn majorization_sufficiency<F: Field>(c: &[F], d: &[F]) -> Result<ChainVerdict> {
    if let Some(bad) = c.iter().chain(d).find(|x| x.signum() <= 0) {
        return Err(Error::Domain(format!("majorization needs positive vectors, got {bad}")));
    }
    let (t, s) = (c.len(), d.len());
    let chain_a = t >= s && increasing_chain(c, d);
    let chain_b = t <= s && decreasing_chain(c, d);
    let mut verdict = ChainVerdict {
        applies_case_a: chain_a && t <= s + 1,
        applies_case_b: chain_b,
        via_majorization: false,
        witness_subvector: None,
        witness_case: None,
    };
    if t >= s {
        if let Some(idx) = find_witness(d, c)? {
            if !chain_a {
                return Err(Error::ImplicationViolated(format!(
                    "d is weakly supermajorized by c{idx:?} but the increasing chain fails"
                )));
            }
            verdict.via_majorization = true;
            verdict.witness_subvector = Some(idx);
            verdict.witness_case = Some(ChainCase::A);
            return Ok(verdict);
        }
    }
    if t <= s {
        if let Some(idx) = find_witness(c, d)? {
            if !chain_b {
                return Err(Error::ImplicationViolated(format!(
                    "c is weakly supermajorized by d{idx:?} but the decreasing chain fails"
                )));
            }
            verdict.via_majorization = true;
            verdict.witness_subvector = Some(idx);
            verdict.witness_case = Some(ChainCase::B);
        }
    }
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Constant,
    NonMonotone,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityProbe {
    pub observed: Monotonicity,
    pub predicted: Option<Monotonicity>,
}

/// `R_{t,s}(y) = prod (c_k + y) / prod (d_k + y)`.
pub fn rts<F: Field>(c: &[F], d: &[F], y: &F) -> F {
    let mut num = y.one();
    for ck in c {
        num = num * &(ck.clone() + y);
    }
    let mut den = y.one();
    for dk in d {
        den = den * &(dk.clone() + y);
    }
    num / &den
}

/// Classifies `R_{t,s}` on a grid. A step only counts as a reversal when it
/// exceeds 1024 ulps of the larger value (exact mode compares directly).
/// When a chain condition holds, the direction it predicts is enforced.
pub fn rts_monotonicity_probe<F: Field>(c: &[F], d: &[F], grid: &[F]) -> Result<MonotonicityProbe> {
    if grid.len() < 2 {
        return Err(Error::InsufficientGrid("need at least two points".into()));
    }
    if grid[0].signum() <= 0 || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InsufficientGrid("grid must be positive and strictly increasing".into()));
    }
    let vals: Vec<F> = grid.iter().map(|y| rts(c, d, y)).collect();
    let (mut up, mut down) = (false, false);
    for w in vals.windows(2) {
        let tol = w[0].abs().max_with(w[1].abs()) * &w[0].epsilon() * &w[0].int(1024);
        let step = w[1].clone() - &w[0];
        if step > tol {
            up = true;
        } else if -step > tol {
            down = true;
        }
    }
    let observed = match (up, down) {
        (false, false) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (true, true) => Monotonicity::NonMonotone,
    };
    let (t, s) = (c.len(), d.len());
    let predicted = if t >= s && increasing_chain(c, d) {
        Some(Monotonicity::Increasing)
    } else if t <= s && decreasing_chain(c, d) {
        Some(Monotonicity::Decreasing)
    } else {
        None
    };
    if let Some(p) = predicted {
        if observed != p && observed != Monotonicity::Constant {
            return Err(Error::ImplicationViolated(format!(
                "chain condition predicts {p:?} but R_t,s is {observed:?} on the grid"
            )));
        }
    }
    Ok(MonotonicityProbe { observed, predicted })
}
