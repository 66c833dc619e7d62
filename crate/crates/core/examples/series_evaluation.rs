//! Truncated series for the families of the crate, pointwise sums with a
//! tail bound, and the Bessel route to Heine's function.

use qturan::hyperseries::{
    heine_f_series, heine_f_via_bessel, phi_eval, qbessel_j1, qbessel_j2, EvalOptions, PhiSpec,
};
use qturan::qcore::QBase;
use qturan::scalar::parse_rational;
use qturan::QuadRational;

fn main() -> qturan::Result<()> {
    let q = QBase::exact_q(&parse_rational("1/2")?)?;
    let f = heine_f_series(&QuadRational::from_i64(1), &q, 5)?;
    for (n, c) in f.coeffs().iter().enumerate() {
        println!("f(1; x) [x^{n}] = {c}");
    }

    let digits = 40;
    let qf = QBase::float_q(&parse_rational("1/2")?, digits)?;
    let r = |s: &str| qf.lift(&parse_rational(s).unwrap());
    let opts = EvalOptions::default_for(qf.q());

    // 2phi1(0, 0; q^mu; x) summed to full precision
    let mu = r("3/2");
    let spec = PhiSpec::new(vec![r("0"), r("0")], vec![qf.qpow(&mu)?], qf.clone())?;
    let x = r("1/4");
    let direct = phi_eval(&spec, &x, &opts)?;
    let via_bessel = heine_f_via_bessel(&mu, &x, &qf, &opts)?;
    println!("f(3/2; 1/4) = {} ({} terms, tail <= {})", direct.value, direct.terms, direct.tail_bound);
    println!("via I^(1)   = {via_bessel}");

    let (al, y) = (r("1/2"), r("1"));
    let j1 = qbessel_j1(&al, &y, &qf, &opts)?;
    let j2 = qbessel_j2(&al, &y, &qf, &opts)?;
    println!("J1 = {j1}\nJ2 = {j2}");
    Ok(())
}
