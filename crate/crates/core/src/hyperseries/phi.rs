use crate::error::{Error, Result};
use crate::hyperseries::series::{TruncatedSeries, Validity};
use crate::qcore::{ParamVector, QBase};
use crate::scalar::{Field, Rational};

/// Upper parameters `a` and lower parameters `b` of `_t phi_s`, given as
/// values (for example `q^(a_1 + mu)`, or a literal `0`).
#[derive(Clone, Debug)]
pub struct PhiSpec<F: Field> {
    pub a: ParamVector<F>,
    pub b: ParamVector<F>,
    pub q: QBase<F>,
}

impl<F: Field> PhiSpec<F> {
    pub fn new(a: Vec<F>, b: Vec<F>, q: QBase<F>) -> Result<Self> {
        if a.len() > b.len() + 1 {
            return Err(Error::Hypothesis(format!(
                "_t phi_s needs t <= s + 1, got t = {}, s = {}",
                a.len(),
                b.len()
            )));
        }
        Ok(PhiSpec {
            a: ParamVector::new(a),
            b: ParamVector::new(b),
            q,
        })
    }

    pub fn t(&self) -> usize {
        self.a.len()
    }

    pub fn s(&self) -> usize {
        self.b.len()
    }

    /// `1 + s - t`, the power of `(-1)^n q^binom(n,2)`.
    pub fn excess(&self) -> i64 {
        1 + self.s() as i64 - self.t() as i64
    }

    pub fn validity(&self) -> Validity {
        if self.excess() == 0 {
            Validity::UnitDisk
        } else {
            Validity::Entire
        }
    }

    /// Ratio `c_{n+1} / c_n` of consecutive series coefficients.
    fn step(&self, n: usize, qn: &F) -> Result<F> {
        let one = self.q.one();
        let mut num = one.clone();
        for a in self.a.entries() {
            num = num * &(one.clone() - &(a.clone() * qn));
        }
        let mut den = one.clone() - &(qn.clone() * self.q.q());
        for b in self.b.entries() {
            let f = one.clone() - &(b.clone() * qn);
            if f.is_zero() {
                return Err(Error::ParameterCollision(format!(
                    "lower parameter {b} equals q^-{n}"
                )));
            }
            den = den * &f;
        }
        let e = self.excess();
        let mut r = num / &den;
        if e != 0 {
            r = r * &(-qn.clone()).powi(e);
        }
        Ok(r)
    }

    fn label(&self) -> String {
        format!("{}phi{}", self.t(), self.s())
    }
}

/// Coefficients of `_t phi_s(a; b; q; z)` in `z` up to order `order`.
pub fn tphis_series<F: Field>(spec: &PhiSpec<F>, order: usize) -> Result<TruncatedSeries<F>> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = spec.q.one();
    let mut qn = spec.q.one();
    coeffs.push(c.clone());
    for n in 0..order {
        c = c * &spec.step(n, &qn)?;
        coeffs.push(c.clone());
        qn = qn * spec.q.q();
    }
    let mut s = TruncatedSeries::new(coeffs, spec.label()).with_validity(spec.validity());
    if spec.validity() == Validity::UnitDisk {
        s = s.with_tail_note("t = s + 1: converges for |z| < 1 only");
    } else {
        s = s.with_tail_note("t <= s: coefficients decay like q^binom(n,2)");
    }
    Ok(s)
}

/// Controls for summing a series to a value.
#[derive(Clone, Debug)]
pub struct EvalOptions<F: Field> {
    pub rel_tol: F,
    pub max_terms: usize,
}

impl<F: Field> EvalOptions<F> {
    /// 1024 ulps in float mode; `2^-200` for exact values.
    pub fn default_for(like: &F) -> Self {
        let rel_tol = if F::is_exact() {
            like.lift(&(Rational::ONE / Rational::from(2).pow(200)))
        } else {
            like.epsilon() * &like.int(1024)
        };
        EvalOptions {
            rel_tol,
            max_terms: 100_000,
        }
    }
}

/// A summed value with a rigorous bound on the discarded tail.
#[derive(Clone, Debug)]
pub struct Evaluation<F: Field> {
    pub value: F,
    pub tail_bound: F,
    pub terms: usize,
}

/// Sums `_t phi_s(a; b; q; z)` until the geometric tail bound
/// `|term_N| rho / (1 - rho)` falls below `rel_tol |sum|`, where
/// `rho = prod(1 + |a| q^N) / (prod(1 - |b| q^N) (1 - q^(N+1))) q^(N e) |z|`
/// dominates every later term ratio.
pub fn phi_eval<F: Field>(spec: &PhiSpec<F>, z: &F, opts: &EvalOptions<F>) -> Result<Evaluation<F>> {
    let one = spec.q.one();
    if spec.validity() == Validity::UnitDisk && z.abs() >= one {
        return Err(Error::Divergent(format!("{} needs |z| < 1, got {z}", spec.label())));
    }
    let e = spec.excess();
    let az = z.abs();
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut qn = one.clone();
    for n in 0..opts.max_terms {
        if term.is_zero() && n > 0 {
            return Ok(Evaluation {
                value: sum,
                tail_bound: one.zero(),
                terms: n,
            });
        }
        term = term * &spec.step(n, &qn)? * z;
        sum = sum + &term;
        qn = qn * spec.q.q();
        // bound on all ratios from index n + 1 on
        let mut num = one.clone();
        for a in spec.a.entries() {
            num = num * &(one.clone() + &(a.abs() * &qn));
        }
        let mut den = one.clone() - &(qn.clone() * spec.q.q());
        let mut usable = true;
        for b in spec.b.entries() {
            let f = one.clone() - &(b.abs() * &qn);
            if f.signum() <= 0 {
                usable = false;
            }
            den = den * &f;
        }
        if !usable {
            continue;
        }
        let rho = num / &den * &qn.powi(e) * &az;
        if rho >= one {
            continue;
        }
        let tail = term.abs() * &rho / &(one.clone() - &rho);
        if tail <= opts.rel_tol.clone() * &sum.abs() || tail.is_zero() {
            return Ok(Evaluation {
                value: sum,
                tail_bound: tail,
                terms: n + 2,
            });
        }
    }
    Err(Error::NotConverged {
        what: format!("{} at z = {z}", spec.label()),
        terms: opts.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::qpochhammer_finite;
    use crate::scalar::{parse_rational, QuadRational};

    fn ex(s: &str) -> QuadRational {
        QuadRational::from_rational(parse_rational(s).unwrap())
    }

    #[test]
    fn heine_coefficient_with_zero_parameters() {
        let q = QBase::exact_q(&parse_rational("1/2").unwrap()).unwrap();
        let spec = PhiSpec::new(vec![ex("0"), ex("0")], vec![q.q().clone()], q).unwrap();
        let s = tphis_series(&spec, 3).unwrap();
        assert_eq!(s.coeff(0), &ex("1"));
        assert_eq!(s.coeff(1), &ex("4"));
        assert_eq!(s.validity(), Validity::UnitDisk);
    }

    #[test]
    fn equal_parameters_cancel() {
        let q = QBase::exact_q(&parse_rational("1/3").unwrap()).unwrap();
        let spec = PhiSpec::new(vec![q.q().clone()], vec![q.q().clone()], q.clone()).unwrap();
        let s = tphis_series(&spec, 8).unwrap();
        for n in 0..=8usize {
            let expect = q.qpow_int((n * n.saturating_sub(1) / 2) as i64)
                / &qpochhammer_finite(q.q(), &q, n)
                * &ex(if n % 2 == 0 { "1" } else { "-1" });
            assert_eq!(s.coeff(n), &expect);
        }
    }

    #[test]
    fn lower_parameter_collision_is_reported() {
        let q = QBase::exact_q(&parse_rational("1/2").unwrap()).unwrap();
        let spec = PhiSpec::new(vec![], vec![ex("4")], q).unwrap();
        assert!(matches!(tphis_series(&spec, 5), Err(Error::ParameterCollision(_))));
    }

    #[test]
    fn too_many_upper_parameters() {
        let q = QBase::exact_q(&parse_rational("1/2").unwrap()).unwrap();
        assert!(PhiSpec::new(vec![ex("0"); 3], vec![ex("1/2")], q).is_err());
    }

    #[test]
    fn evaluation_matches_long_truncation() {
        let q = QBase::float_q(&parse_rational("0.8").unwrap(), 50).unwrap();
        let b = q.qpow(&q.lift(&parse_rational("1.5").unwrap())).unwrap();
        let spec = PhiSpec::new(vec![q.zero(), q.zero()], vec![b], q.clone()).unwrap();
        let z = q.lift(&parse_rational("0.9").unwrap());
        let v = phi_eval(&spec, &z, &EvalOptions::default_for(&z)).unwrap();
        let long = tphis_series(&spec, 2000).unwrap().eval(&z).unwrap();
        let rel = ((v.value - &long) / &long).abs();
        assert!(rel.to_f64() < 1e-45, "rel = {rel}");
        assert!(v.tail_bound.to_f64() < 1e-45);
    }
}
