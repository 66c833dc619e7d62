// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Run with `cargo test --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qturan::analysis::{
    complete_monotonicity_check, laplace_representation_check, multiplicative_convexity_check, MeasureDensity, QuadSpec,
};
use qturan::conditions::{chain_by_division, chain_condition_a, chain_condition_b, majorization_sufficiency, rts_monotonicity_probe};
use qturan::hyperseries::TruncatedSeries;
use qturan::identities::{
    q_to_1_limit_study, verify_bessel_roundtrip, verify_connection_formula, verify_finite_sum_identity,
    verify_kummer_linearization, verify_linearization, verify_rahman_product, verify_recqgamma, Residual,
};
use qturan::qcore::{ParamVector, QBase};
use qturan::scalar::parse_rational;
use qturan::turanian::{certify, turan_point_inequality, turanian_series, Family, ShiftPair, TuranianSpec, Verdict};
use qturan::{BigFloat, Error, Field, QuadRational, Rational};

const DIGITS: u32 = 50;

type Outcome = Result<String, String>;

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn rs(list: &[&str]) -> Vec<Rational> {
    list.iter().map(|s| r(s)).collect()
}

fn ex(x: &Rational) -> QuadRational {
    QuadRational::from_rational(x.clone())
}

fn bf(x: &Rational) -> BigFloat {
    BigFloat::with_digits(x, DIGITS)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs the checks of an exact identity suite in parallel; all must be exactly zero.
fn exact_suite<P: Sync + std::fmt::Debug>(points: Vec<P>, f: impl Fn(&P) -> qturan::Result<Residual> + Sync) -> Outcome {
    let results: Vec<_> = points.par_iter().map(|p| (p, f(p))).collect();
    for (p, res) in &results {
        match res {
            Ok(res) if res.exact_zero => {}
            Ok(res) => return Err(format!("{p:?}: max_abs {} at index {:?}", res.max_abs, res.worst_index)),
            Err(e) => return Err(format!("{p:?}: {e}")),
        }
    }
    Ok(format!("{} instances, every coefficient exactly zero", results.len()))
}

// --------------------------------------------------------------------------
// independent rational oracles

fn qpow(q: &Rational, k: i64) -> Rational {
    let mut p = Rational::ONE;
    for _ in 0..k.unsigned_abs() {
        p = p * q;
    }
    if k < 0 {
        Rational::ONE / p
    } else {
        p
    }
}

/// `(a; q)_n`
fn poch(a: &Rational, q: &Rational, n: usize) -> Rational {
    let mut p = Rational::ONE;
    let mut qk = Rational::ONE;
    for _ in 0..n {
        p = p * (Rational::ONE - a.clone() * &qk);
        qk = qk * q;
    }
    p
}

fn cauchy(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|m| (0..=m).fold(Rational::ZERO, |s, k| s + a[k].clone() * &b[m - k]))
        .collect()
}

fn turanian_of(f: impl Fn(i64) -> Vec<Rational>, mu: i64, al: i64, be: i64, outer_weight: &Rational) -> Vec<Rational> {
    let p1 = cauchy(&f(mu + al), &f(mu + be));
    let p2 = cauchy(&f(mu), &f(mu + al + be));
    p1.iter().zip(&p2).map(|(x, y)| x.clone() - outer_weight.clone() * y).collect()
}

/// Heine `f(mu; x)` coefficients `1 / ((q;q)_n (q^mu;q)_n)` for integer `mu`.
fn heine_oracle(q: &Rational, mu: i64, order: usize) -> Vec<Rational> {
    (0..=order).map(|n| Rational::ONE / (poch(q, q, n) * poch(&qpow(q, mu), q, n))).collect()
}

/// `Gamma_q(n)` for a positive integer `n`.
fn gamma_int(q: &Rational, n: i64) -> Rational {
    let k = (n - 1) as usize;
    poch(q, q, k) / qpow(&(Rational::ONE - q), k as i64)
}

/// Coefficients of `g(mu; x)` with integer parameters, straight from the definition.
fn g_oracle(a: &[i64], b: &[i64], q: &Rational, mu: i64, order: usize) -> Vec<Rational> {
    let mut pre = Rational::ONE;
    for ai in a {
        pre = pre * gamma_int(q, ai + mu);
    }
    for bi in b {
        pre = pre / gamma_int(q, bi + mu);
    }
    let e = 1 + b.len() as i64 - a.len() as i64;
    (0..=order)
        .map(|n| {
            let mut c = pre.clone() / poch(q, q, n);
            for ai in a {
                c = c * poch(&qpow(q, ai + mu), q, n);
            }
            for bi in b {
                c = c / poch(&qpow(q, bi + mu), q, n);
            }
            let nn = n as i64;
            let sign = if (e * nn) % 2 == 0 { Rational::ONE } else { -Rational::ONE };
            c * sign * qpow(q, e * nn * (nn - 1) / 2) * qpow(&(q.clone() - Rational::ONE), e * nn)
        })
        .collect()
}

/// Checks that `lib = k * oracle` for one positive constant `k`.
fn proportional(lib: &[QuadRational], oracle: &[Rational]) -> Result<(), String> {
    let mut k: Option<QuadRational> = None;
    for (m, (l, o)) in lib.iter().zip(oracle).enumerate() {
        if o == &Rational::ZERO {
            if !l.is_zero() {
                return Err(format!("m = {m}: oracle 0, library {l}"));
            }
            continue;
        }
        let ratio = l.clone() / &ex(o);
        match &k {
            None if ratio.signum() > 0 => k = Some(ratio),
            None => return Err(format!("m = {m}: scale {ratio} is not positive")),
            Some(k) if *k != ratio => return Err(format!("m = {m}: scale {ratio} differs from {k}")),
            _ => {}
        }
    }
    Ok(())
}

// --------------------------------------------------------------------------
// 1. identity suite

fn linearization_suite() -> Outcome {
    let mut pts = Vec::new();
    for q in ["1/2", "3/4"] {
        for mu in ["1/2", "1", "2"] {
            for al in ["1", "2", "3"] {
                for be in ["0", "1/2", "1", "2"] {
                    pts.push((q, mu, al, be));
                }
            }
        }
    }
    exact_suite(pts, |(q, mu, al, be)| {
        verify_linearization(&ex(&r(mu)), &ex(&r(al)), &ex(&r(be)), &QBase::exact_q(&r(q))?, 30)
    })
}

fn half_grid() -> Vec<(&'static str, &'static str, &'static str)> {
    let mut pts = Vec::new();
    for p in ["1/2", "3/4"] {
        for nu in ["1/2", "1", "3/2", "2"] {
            for eta in ["1/2", "1", "3/2", "2"] {
                pts.push((p, nu, eta));
            }
        }
    }
    pts
}

fn finite_sum_suite() -> Outcome {
    exact_suite(half_grid(), |(p, nu, eta)| {
        verify_finite_sum_identity(&ex(&r(nu)), &ex(&r(eta)), &QBase::exact_p(&r(p))?, 20)
    })
}

fn rahman_suite() -> Outcome {
    exact_suite(half_grid(), |(p, nu, eta)| {
        verify_rahman_product(&ex(&r(nu)), &ex(&r(eta)), &QBase::exact_p(&r(p))?, 25)
    })
}

fn recqgamma_suite() -> Outcome {
    let mut pts = Vec::new();
    for q in ["1/2", "1/4"] {
        for mu in ["1/2", "1", "3/2"] {
            for be in ["1/2", "1", "3/2"] {
                pts.push((q, mu, be));
            }
        }
    }
    exact_suite(pts, |(q, mu, be)| verify_recqgamma(&ex(&r(mu)), &ex(&r(be)), &QBase::exact_q(&r(q))?, 10))
}

fn kummer_suite() -> Outcome {
    let mut pts = Vec::new();
    for mu in ["1/2", "1", "3/2"] {
        for al in ["1", "2", "3"] {
            for be in ["0", "1/2", "1"] {
                pts.push((mu, al, be));
            }
        }
    }
    exact_suite(pts, |(mu, al, be)| verify_kummer_linearization(&ex(&r(mu)), &ex(&r(al)), &ex(&r(be)), 30))
}

// --------------------------------------------------------------------------
// 2. sign suites

const ORDER: usize = 60;

fn sign_grid(family: Family<QuadRational>, qs: &[&str], mus: &[&str], alphas: &[&str], betas: &[&str]) -> Vec<TuranianSpec<QuadRational>> {
    let mut specs = Vec::new();
    for q in qs {
        let base = QBase::exact_q(&r(q)).unwrap();
        for mu in mus {
            for al in alphas {
                for be in betas {
                    specs.push(TuranianSpec::new(family.clone(), ex(&r(mu)), ex(&r(al)), ex(&r(be)), base.clone(), ORDER));
                }
            }
        }
    }
    specs
}

/// Certifies every spec against its prediction. Returns the number of
/// points, of strict verdicts, and of verdicts that went through a rational
/// enclosure of a Gamma ratio instead of exact zero-radius coefficients.
fn certify_all(specs: &[TuranianSpec<QuadRational>], want: impl Fn(Verdict) -> bool) -> Result<(usize, usize, usize), String> {
    let reports: Vec<_> = specs.par_iter().map(certify).collect();
    let (mut strict, mut enclosed) = (0, 0);
    for (spec, rep) in specs.iter().zip(reports) {
        let rep = rep.map_err(|e| format!("mu={} alpha={} beta={}: {e}", spec.mu, spec.alpha, spec.beta))?;
        enclosed += !rep.unconditional as usize;
        ensure(rep.matches_expected && want(rep.verdict), || {
            format!(
                "mu={} alpha={} beta={} q={}: {:?} (expected {:?}), first violation {:?}",
                spec.mu,
                spec.alpha,
                spec.beta,
                spec.q.q(),
                rep.verdict,
                rep.expected,
                rep.first_violation
            )
        })?;
        ensure(rep.order_checked == ORDER, || format!("checked only to m = {}", rep.order_checked))?;
        if matches!(rep.verdict, Verdict::AllStrictlyNeg | Verdict::AllStrictlyPos) {
            strict += 1;
        }
    }
    Ok((specs.len(), strict, enclosed))
}

const T23_Q: [&str; 3] = ["1/4", "1/2", "3/4"];
const T23_P: [&str; 3] = ["1/2", "1", "2"];

fn theorem2_suite() -> Outcome {
    let specs = sign_grid(Family::HeineF, &T23_Q, &T23_P, &T23_P, &T23_P);
    let (n, _, enclosed) = certify_all(&specs, |v| v == Verdict::AllStrictlyNeg)?;
    ensure(enclosed == 0, || format!("{enclosed} heine-f certificates were not exact"))?;
    // spot value from the m = 1 Cauchy term
    let q = r("1/2");
    let one = Rational::ONE;
    let inv = |k: i64| one.clone() / (one.clone() - qpow(&q, k));
    let oracle = inv(1) * (inv(2) + inv(2) - inv(1) - inv(3));
    ensure(oracle == r("-20/21"), || format!("hand expansion gives {oracle}"))?;
    let spot = turanian_series(&TuranianSpec::new(
        Family::HeineF,
        ex(&one),
        ex(&one),
        ex(&one),
        QBase::exact_q(&q).unwrap(),
        4,
    ))
    .map_err(|e| e.to_string())?;
    ensure(*spot.center.coeff(1) == ex(&oracle), || format!("delta_1 = {}", spot.center.coeff(1)))?;
    ensure(spot.center.coeff(0).is_zero(), || "delta_0 is not zero".into())?;
    // integer points against the rational oracle
    let mut crossed = 0;
    for spec in specs.iter().filter(|s| [&s.mu, &s.alpha, &s.beta].iter().all(|v| v.as_integer().is_some())) {
        let q = spec.q.q().to_rational().unwrap();
        let [mu, al, be] = [&spec.mu, &spec.alpha, &spec.beta].map(|v| v.as_integer().unwrap());
        let oracle = turanian_of(|m| heine_oracle(&q, m, ORDER), mu, al, be, &Rational::ONE);
        let lib = turanian_series(spec).map_err(|e| e.to_string())?;
        let want: Vec<QuadRational> = oracle.iter().map(ex).collect();
        ensure(lib.center.coeffs() == want.as_slice(), || format!("mu={mu} alpha={al} beta={be}: differs from oracle"))?;
        crossed += 1;
    }
    Ok(format!(
        "{n} points strictly negative for 1 <= m <= {ORDER}; delta_1 = -20/21; {crossed} integer points equal the rational oracle"
    ))
}

fn theorem3_suite() -> Outcome {
    let specs = sign_grid(Family::HeineFTilde, &T23_Q, &T23_P, &T23_P, &T23_P);
    let (n, _, enclosed) = certify_all(&specs, |v| v == Verdict::AllStrictlyPos)?;
    let mut crossed = 0;
    for spec in specs.iter().filter(|s| [&s.mu, &s.alpha, &s.beta].iter().all(|v| v.as_integer().is_some())) {
        let q = spec.q.q().to_rational().unwrap();
        let [mu, al, be] = [&spec.mu, &spec.alpha, &spec.beta].map(|v| v.as_integer().unwrap());
        // Gamma(mu+a)Gamma(mu+b) / (Gamma(mu)Gamma(mu+a+b)) at integer distance
        let w = poch(&qpow(&q, mu), &q, al as usize) / poch(&qpow(&q, mu + be), &q, al as usize);
        let oracle = turanian_of(|m| heine_oracle(&q, m, ORDER), mu, al, be, &w);
        let lib = turanian_series(spec).map_err(|e| e.to_string())?;
        proportional(&lib.center.coeffs()[1..], &oracle[1..]).map_err(|e| format!("mu={mu} alpha={al} beta={be}: {e}"))?;
        crossed += 1;
    }
    Ok(format!(
        "{n} points strictly positive for 1 <= m <= {ORDER} ({enclosed} separated from zero by a rational enclosure of the Gamma ratio, the rest exact); {crossed} integer points proportional to the oracle"
    ))
}

fn g_family(a: &[i64], b: &[i64]) -> Family<QuadRational> {
    let v = |x: &[i64]| ParamVector::nonneg(x.iter().map(|&k| QuadRational::from_i64(k)).collect()).unwrap();
    Family::GNormalized { a: v(a), b: v(b) }
}

fn example_suite(a: &[i64], b: &[i64], want: Verdict) -> Outcome {
    let base = QBase::exact_q(&r("1/2")).unwrap();
    let fam = g_family(a, b);
    let mut specs = Vec::new();
    for mu in ["0", "1/2", "1", "2"] {
        for al in 1..=3i64 {
            for be in [al - 1, al, al + 1] {
                specs.push(TuranianSpec::new(fam.clone(), ex(&r(mu)), QuadRational::from_i64(al), QuadRational::from_i64(be), base.clone(), ORDER));
            }
        }
    }
    let (n, strict, enclosed) = certify_all(&specs, |v| want.satisfied_by(v))?;
    ensure(enclosed == 0, || format!("{enclosed} g certificates were not exact"))?;
    let q = r("1/2");
    let mut crossed = 0;
    for spec in specs.iter().filter(|s| s.mu.as_integer().is_some()) {
        let [mu, al, be] = [&spec.mu, &spec.alpha, &spec.beta].map(|v| v.as_integer().unwrap());
        let oracle = turanian_of(|m| g_oracle(a, b, &q, m, ORDER), mu, al, be, &Rational::ONE);
        let bad = oracle.iter().position(|c| match want {
            Verdict::AllNonNeg => *c < Rational::ZERO,
            _ => *c > Rational::ZERO,
        });
        ensure(bad.is_none(), || format!("oracle itself violates the sign at mu={mu} alpha={al} beta={be}, m={bad:?}"))?;
        let lib = turanian_series(spec).map_err(|e| e.to_string())?;
        proportional(lib.center.coeffs(), &oracle).map_err(|e| format!("mu={mu} alpha={al} beta={be}: {e}"))?;
        crossed += 1;
    }
    Ok(format!(
        "{n} points, zero violations for 0 <= m <= {ORDER} ({strict} strict, the rest identically zero); {crossed} integer points proportional to the oracle"
    ))
}

// --------------------------------------------------------------------------
// 3. float suites

fn float_base(q: &str) -> QBase<BigFloat> {
    QBase::float_q(&r(q), DIGITS).unwrap()
}

fn g_family_f(a: &[i64], b: &[i64]) -> Family<BigFloat> {
    let v = |x: &[i64]| ParamVector::nonneg(x.iter().map(|&k| bf(&Rational::from(k))).collect()).unwrap();
    Family::GNormalized { a: v(a), b: v(b) }
}

fn point_inequality_suite() -> Outcome {
    let q = float_base("1/2");
    let floor = bf(&r("1e-30"));
    let mut count = 0;
    let mut smallest: Option<BigFloat> = None;
    for (fam, pair) in [
        (g_family_f(&[2, 3], &[1, 2]), ShiftPair::Direct),
        (g_family_f(&[1, 1, 1], &[2, 2]), ShiftPair::Inverse),
    ] {
        for mu in ["0", "1/2", "1", "2"] {
            for x in ["0.1", "0.5", "0.9"] {
                let c = turan_point_inequality(&fam, &bf(&r(mu)), &bf(&r(x)), &q, pair).map_err(|e| e.to_string())?;
                let margin = c.margin.as_float().unwrap().clone();
                ensure(c.holds && c.strict && margin > floor, || format!("{pair:?} mu={mu} x={x}: margin {}", c.margin))?;
                if smallest.as_ref().is_none_or(|s| margin < *s) {
                    smallest = Some(margin);
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} points, smallest margin {:.3e}", smallest.unwrap().to_f64()))
}

fn connection_suite() -> Outcome {
    let tol = 1e-35;
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for q in ["1/2", "4/5"] {
        let base = float_base(q);
        let ys: Vec<BigFloat> = rs(&["0.5", "1", "1.5"]).iter().map(bf).collect();
        for al in ["0", "1/2", "1"] {
            let res = verify_connection_formula(&bf(&r(al)), &ys, &base).map_err(|e| e.to_string())?;
            ensure(res.passes(tol), || format!("connection alpha={al} q={q}: max_rel {}", res.max_rel))?;
            worst = worst.max(res.max_rel.to_f64());
            n += ys.len();
        }
    }
    let base = float_base("1/2");
    let xs: Vec<BigFloat> = rs(&["0.1", "0.5", "0.9"]).iter().map(bf).collect();
    for mu in ["1/2", "1", "2"] {
        let res = verify_bessel_roundtrip(&bf(&r(mu)), &xs, &base).map_err(|e| e.to_string())?;
        ensure(res.passes(tol), || format!("round-trip mu={mu}: max_rel {}", res.max_rel))?;
        worst = worst.max(res.max_rel.to_f64());
        n += xs.len();
    }
    Ok(format!("{n} points, worst max_rel {worst:.3e} < 1e-35"))
}

/// Float coefficients of the Turanian `Delta_g(1, 2)` at `mu = 1`, `q = 1/2`.
fn example1_float(order: usize) -> Result<TruncatedSeries<BigFloat>, String> {
    let spec = TuranianSpec::new(g_family_f(&[2, 3], &[1, 2]), bf(&r("1")), bf(&r("1")), bf(&r("2")), float_base("1/2"), order);
    let s = turanian_series(&spec).map_err(|e| e.to_string())?;
    ensure(s.center.coeffs().iter().all(|c| c.signum() >= 0), || "coefficients are not all >= 0".into())?;
    Ok(s.center)
}

fn corollary1_suite() -> Outcome {
    let series = example1_float(40)?;
    let step = r("0.05");
    let ys: Vec<BigFloat> = (0..=80).map(|i| bf(&(Rational::ONE + step.clone() * Rational::from(i)))).collect();
    let tol = bf(&r("1e-40"));
    let cm = complete_monotonicity_check(|y: &BigFloat| series.eval(&(y.one() / y)), &ys, 6, &tol).map_err(|e| e.to_string())?;
    ensure(cm.passes, || format!("complete monotonicity fails at {:?}", cm.first_failure))?;
    ensure(cm.min_margin_by_order.iter().all(|m| m.to_f64() >= 0.0), || {
        format!("negative margin: {:?}", cm.min_margin_by_order.iter().map(|m| m.to_f64()).collect::<Vec<_>>())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7475_7261);
    let pairs: Vec<(BigFloat, BigFloat)> = (0..20)
        .map(|_| {
            let mut draw = || bf(&(Rational::from(rng.gen_range(1..=2000u32)) / Rational::from(1000u32)));
            (draw(), draw())
        })
        .collect();
    let mc = multiplicative_convexity_check(|x: &BigFloat| series.eval(x), &pairs, &tol).map_err(|e| e.to_string())?;
    ensure(mc.passes, || "multiplicative convexity fails".into())?;
    Ok(format!(
        "orders 1..6 on 81 points with min margins >= 0 (order 6: {:.3e}); 20 random pairs in (0, 2] convex",
        cm.min_margin_by_order[5].to_f64()
    ))
}

fn laplace_suite() -> Outcome {
    // bookkeeping first: gamma_m = 1 alone must transform to x^m
    let x = bf(&r("0.4"));
    for m in 1..=6usize {
        let mut coeffs = vec![x.zero(); m];
        coeffs[m - 1] = x.one();
        let d = MeasureDensity { atom_at_zero: x.zero(), density_coeffs: coeffs };
        let quad = QuadSpec { upper: bf(&r("60")), abs_tol: bf(&r("1e-40")), nodes: 20 };
        let res = laplace_representation_check(&d, std::slice::from_ref(&x), &quad).map_err(|e| e.to_string())?;
        let want = x.powi(m as i64);
        ensure((d.series_value(&x) - &want).abs().to_f64() < 1e-45, || format!("series value of x^{m} is off"))?;
        ensure(res.max_rel.to_f64() < 1e-30, || format!("single term m = {m}: max_rel {}", res.max_rel))?;
    }
    let series = example1_float(40)?;
    let gamma = MeasureDensity::from_series(&series);
    let quad = QuadSpec { upper: bf(&r("80")), abs_tol: bf(&r("1e-45")), nodes: 24 };
    let xs: Vec<BigFloat> = rs(&["0.3", "0.6"]).iter().map(bf).collect();
    let res = laplace_representation_check(&gamma, &xs, &quad).map_err(|e| e.to_string())?;
    ensure(res.max_rel.to_f64() < 1e-20, || format!("max_rel {}", res.max_rel))?;
    Ok(format!("closed-form oracle for m = 1..6 matched; a=(2,3), b=(1,2) at x = 0.3, 0.6: max_rel {:.3e}", res.max_rel.to_f64()))
}

fn q_limit_suite() -> Outcome {
    let study = q_to_1_limit_study(&r("1"), 1, &r("1"), &r("1/2"), &rs(&["0.9", "0.99", "0.999"]), DIGITS)
        .map_err(|e| e.to_string())?;
    let devs: Vec<f64> = study.points.iter().map(|p| p.deviation.max_abs.to_f64()).collect();
    ensure(study.strictly_decreasing, || format!("deviations {devs:?}"))?;
    Ok(format!("deviations {}", devs.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>().join(" > ")))
}

// --------------------------------------------------------------------------
// 4. structural properties over random instances

const CASES: usize = 500;

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from(rng.gen_range(-50i64..=50)) / Rational::from(rng.gen_range(1i64..=12))
}

fn cauchy_symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..CASES {
        let n = rng.gen_range(1..=12);
        let a: Vec<QuadRational> = (0..n).map(|_| ex(&rand_rational(&mut rng))).collect();
        let b: Vec<QuadRational> = (0..n).map(|_| ex(&rand_rational(&mut rng))).collect();
        let (a, b) = (TruncatedSeries::new(a, "a"), TruncatedSeries::new(b, "b"));
        ensure(a.cauchy_product(&b).coeffs() == b.cauchy_product(&a).coeffs(), || format!("case {i}"))?;
    }
    Ok(format!("{CASES} random pairs, a*b = b*a exactly"))
}

fn random_spec(rng: &mut ChaCha8Rng) -> TuranianSpec<QuadRational> {
    let half = |rng: &mut ChaCha8Rng, lo: i64| QuadRational::from_rational(Rational::from(rng.gen_range(lo..=6i64)) / Rational::from(2));
    let q = ["1/4", "1/2", "3/4", "1/3"][rng.gen_range(0..4)];
    let family = match rng.gen_range(0..3) {
        0 => Family::HeineF,
        1 => Family::HeineFTilde,
        _ => {
            let t = rng.gen_range(1..=3usize);
            let s = rng.gen_range(t.saturating_sub(1).max(1)..=3usize);
            let v = |rng: &mut ChaCha8Rng, n: usize| ParamVector::nonneg((0..n).map(|_| QuadRational::from_i64(rng.gen_range(1..=4))).collect()).unwrap();
            Family::GNormalized { a: v(rng, t), b: v(rng, s) }
        }
    };
    let (mu, mut al, be) = (half(rng, 1), half(rng, 0), half(rng, 0));
    if matches!(family, Family::GNormalized { .. }) {
        // exact g needs an integer shift
        al = QuadRational::from_i64(rng.gen_range(0..=3));
    }
    TuranianSpec::new(family, mu, al, be, QBase::exact_q(&r(q)).unwrap(), 8)
}

fn swap_symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let specs: Vec<_> = (0..CASES).map(|_| random_spec(&mut rng)).collect();
    let results: Vec<Result<(), String>> = specs
        .par_iter()
        .map(|spec| {
            let a = turanian_series(spec).map_err(|e| e.to_string())?;
            let b = turanian_series(&spec.swapped()).map_err(|e| e.to_string())?;
            // both carry the same positive normalization only when it is symmetric;
            // compare up to one positive factor
            let lhs = a.center.coeffs();
            let rhs = b.center.coeffs();
            let ratio = lhs.iter().zip(rhs).find(|(x, _)| !x.is_zero()).map(|(x, y)| y.clone() / x);
            let ok = match ratio {
                None => rhs.iter().all(Field::is_zero),
                Some(k) => k.signum() > 0 && lhs.iter().zip(rhs).all(|(x, y)| x.clone() * &k == *y),
            };
            ensure(ok, || format!("{} mu={} alpha={} beta={}", spec.family.name(), spec.mu, spec.alpha, spec.beta))
        })
        .collect();
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{CASES} random specs over all three families, Delta(a,b) = Delta(b,a)"))
}

fn delta_zero() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..CASES {
        let mut spec = random_spec(&mut rng);
        spec.family = Family::HeineF;
        let s = turanian_series(&spec).map_err(|e| e.to_string())?;
        ensure(s.center.coeff(0).is_zero(), || format!("case {i}: delta_0 = {}", s.center.coeff(0)))?;
    }
    Ok(format!("{CASES} random heine-f specs, delta_0 = 0"))
}

fn rand_positive(rng: &mut ChaCha8Rng, n: usize) -> Vec<QuadRational> {
    (0..n).map(|_| QuadRational::from_i64(rng.gen_range(1..=20))).collect()
}

fn cross_multiplication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut held_a, mut held_b) = (0, 0);
    for i in 0..CASES {
        let s = rng.gen_range(1..=3);
        let t = s + rng.gen_range(0..=1);
        let c = rand_positive(&mut rng, t);
        let d = rand_positive(&mut rng, s);
        let a = chain_condition_a(&c, &d).map_err(|e| e.to_string())?;
        ensure(Some(a) == chain_by_division(&c, &d, true), || format!("case {i} (a): {c:?} {d:?}"))?;
        held_a += a as usize;
        let b = chain_condition_b(&d, &c[..s]).map_err(|e| e.to_string())?;
        ensure(Some(b) == chain_by_division(&d, &c[..s], false), || format!("case {i} (b)"))?;
        held_b += b as usize;
    }
    Ok(format!("{CASES} random vector pairs agree (chain A held {held_a} times, chain B {held_b} times)"))
}

fn lemma1_implication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut witnesses = 0;
    for i in 0..CASES {
        let (t, s) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let c = rand_positive(&mut rng, t);
        let d = rand_positive(&mut rng, s);
        match majorization_sufficiency(&c, &d) {
            Ok(v) => witnesses += v.via_majorization as usize,
            Err(e @ Error::ImplicationViolated(_)) => return Err(format!("case {i}: {e}")),
            Err(e) => return Err(format!("case {i}: unexpected {e}")),
        }
    }
    ensure(witnesses > 0, || "no instance had a witness".into())?;
    Ok(format!("{CASES} random instances, {witnesses} with a witness, zero counterexamples"))
}

fn lemma4_implication() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let ratio = r("6/5");
    let mut y = r("1/100");
    let mut grid = Vec::new();
    for _ in 0..50 {
        grid.push(ex(&y));
        y = y * &ratio;
    }
    let mut applicable = 0;
    for i in 0..CASES {
        let s = rng.gen_range(1..=3);
        let t = s + rng.gen_range(0..=1) as usize;
        let (c, d) = if rng.gen_bool(0.5) {
            (rand_positive(&mut rng, t), rand_positive(&mut rng, s))
        } else {
            (rand_positive(&mut rng, s), rand_positive(&mut rng, t))
        };
        match rts_monotonicity_probe(&c, &d, &grid) {
            Ok(p) => applicable += p.predicted.is_some() as usize,
            Err(e) => return Err(format!("case {i}: {e}")),
        }
    }
    ensure(applicable > 0, || "no instance satisfied a chain condition".into())?;
    Ok(format!("{CASES} random instances on a 50-point geometric grid, {applicable} with a chain condition, zero counterexamples"))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1.1 linearization identity, q in {1/2,3/4}, M=30", linearization_suite),
        ("1.2 finite-sum identity, p in {1/2,3/4}, m <= 20", finite_sum_suite),
        ("1.3 Rahman product, p in {1/2,3/4}, M=25", rahman_suite),
        ("1.4 q-gamma summation, q in {1/2,1/4}, m <= 10", recqgamma_suite),
        ("1.5 Kummer linearization, M=30", kummer_suite),
        ("2.1 heine-f Turanian strictly negative", theorem2_suite),
        ("2.2 heine-f-tilde Turanian strictly positive", theorem3_suite),
        ("2.3 g with a=(2,3), b=(1,2) coefficients >= 0", || example_suite(&[2, 3], &[1, 2], Verdict::AllNonNeg)),
        ("2.4 g with a=(1,1,1), b=(2,2) coefficients <= 0", || example_suite(&[1, 1, 1], &[2, 2], Verdict::AllNonPos)),
        ("3.1 Turan point inequalities, margin > 1e-30", point_inequality_suite),
        ("3.2 connection formula and Bessel round-trip < 1e-35", connection_suite),
        ("3.3 complete monotonicity and multiplicative convexity", corollary1_suite),
        ("3.4 Laplace representation < 1e-20", laplace_suite),
        ("3.5 q -> 1 deviations strictly decrease", q_limit_suite),
        ("4.1 Cauchy product symmetry", cauchy_symmetry),
        ("4.2 Delta(alpha,beta) = Delta(beta,alpha)", swap_symmetry),
        ("4.3 delta_0 = 0", delta_zero),
        ("4.4 chain conditions: cross-multiplication = division", cross_multiplication),
        ("4.5 majorization witness implies chain condition", lemma1_implication),
        ("4.6 chain condition implies monotone R_t,s", lemma4_implication),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!("acceptance: {} failed", failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
