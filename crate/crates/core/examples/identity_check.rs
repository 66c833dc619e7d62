//! The q-identities, checked coefficientwise in exact arithmetic and
//! pointwise in float arithmetic.

use qturan::identities::{
    q_to_1_limit_study, verify_connection_formula, verify_finite_sum_identity, verify_kummer_linearization,
    verify_linearization, verify_rahman_product, verify_recqgamma, Residual,
};
use qturan::qcore::QBase;
use qturan::scalar::parse_rational;
use qturan::{Field, QuadRational, Rational};

fn line(r: &Residual) {
    println!("{:<28} order {:>2}  exact_zero {:<5}  max_rel {}", r.identity, r.order_checked, r.exact_zero, r.max_rel);
}

fn main() -> qturan::Result<()> {
    let e = |s: &str| QuadRational::from_rational(parse_rational(s).unwrap());
    let q = QBase::exact_q(&parse_rational("1/2")?)?;
    // q = 9/16 from p = 3/4 keeps quarter powers rational
    let p = QBase::exact_p(&parse_rational("3/4")?)?;

    line(&verify_linearization(&e("1/2"), &e("3"), &e("2"), &q, 30)?);
    line(&verify_kummer_linearization(&e("3/2"), &e("2"), &e("1/2"), 30)?);
    line(&verify_finite_sum_identity(&e("1/2"), &e("3/2"), &p, 20)?);
    line(&verify_rahman_product(&e("1"), &e("3/2"), &p, 25)?);
    line(&verify_recqgamma(&e("1/2"), &e("3/2"), &QBase::exact_q(&parse_rational("1/4")?)?, 10)?);

    let qf = QBase::float_q(&parse_rational("1/2")?, 50)?;
    let ys: Vec<_> = ["0.5", "1", "1.5"].iter().map(|s| qf.lift(&parse_rational(s).unwrap())).collect();
    line(&verify_connection_formula(&qf.q().ratio(1, 2), &ys, &qf)?);

    let qs: Vec<Rational> = ["0.9", "0.99", "0.999"].iter().map(|s| parse_rational(s).unwrap()).collect();
    let one = Rational::ONE;
    let study = q_to_1_limit_study(&one, 1, &one, &parse_rational("1/2")?, &qs, 50)?;
    for pt in &study.points {
        println!("q = {:<6} distance to the classical identity {:.3e}", pt.q.to_string(), pt.deviation.max_abs.to_f64());
    }
    println!("strictly decreasing: {}", study.strictly_decreasing);
    Ok(())
}
