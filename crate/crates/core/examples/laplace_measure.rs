//! Complete monotonicity, multiplicative convexity and the Laplace
//! representation of a Turanian with nonnegative coefficients.

use qturan::analysis::{
    complete_monotonicity_check, laplace_representation_check, multiplicative_convexity_check, tau_density,
    MeasureDensity, QuadSpec,
};
use qturan::qcore::{ParamVector, QBase};
use qturan::scalar::parse_rational;
use qturan::turanian::{turanian_series, Family, TuranianSpec};
use qturan::Field;

fn main() -> qturan::Result<()> {
    let q = QBase::float_q(&parse_rational("1/2")?, 50)?;
    let int = |k| q.int(k);
    let g = Family::GNormalized { a: ParamVector::nonneg(vec![int(2), int(3)])?, b: ParamVector::nonneg(vec![int(1), int(2)])? };
    let series = turanian_series(&TuranianSpec::new(g, int(1), int(1), int(2), q.clone(), 40))?.center;

    // y -> Delta(1/y) on 1..5
    let ys: Vec<_> = (0..=80).map(|i| q.one() + &q.q().ratio(i, 20)).collect();
    let tol = q.lift(&parse_rational("1e-40")?);
    let cm = complete_monotonicity_check(|y: &_| series.eval(&(q.one() / y)), &ys, 6, &tol)?;
    println!("completely monotone to order 6: {}", cm.passes);
    for (n, m) in cm.min_margin_by_order.iter().enumerate() {
        println!("  order {}: min (-1)^n D^n = {:.3e}", n + 1, m.to_f64());
    }

    let pairs = vec![(q.q().ratio(1, 5), q.q().ratio(4, 5)), (q.q().ratio(1, 10), q.q().ratio(2, 5))];
    let mc = multiplicative_convexity_check(|x: &_| series.eval(x), &pairs, &tol)?;
    println!("multiplicatively convex on {} pairs: {}", pairs.len(), mc.passes);

    let tau = MeasureDensity::from_series(&series);
    println!("tau density at t = 1: {}", tau_density(&tau, &q.one()));
    let quad = QuadSpec { upper: q.int(80), abs_tol: q.lift(&parse_rational("1e-45")?), nodes: 24 };
    let xs = vec![q.q().ratio(3, 10), q.q().ratio(3, 5)];
    let res = laplace_representation_check(&tau, &xs, &quad)?;
    println!("Laplace transform against the series: max_rel {:.3e}", res.max_rel.to_f64());
    Ok(())
}
