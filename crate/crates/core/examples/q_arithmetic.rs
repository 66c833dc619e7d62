//! q-Pochhammer symbols, q-Gamma and elementary symmetric polynomials in
//! both arithmetic modes.

use qturan::qcore::{
    elementary_symmetric, qgamma, qgamma_ratio, qpochhammer_finite, qpochhammer_infinite, weak_supermajorizes, QBase,
};
use qturan::scalar::parse_rational;
use qturan::{Field, QuadRational};

fn main() -> qturan::Result<()> {
    // exact: q = 1/2, and q^(1/2) lives in Q(sqrt 2)
    let q = QBase::exact_q(&parse_rational("1/2")?)?;
    let a = q.q().clone();
    for n in 0..=4 {
        println!("(q;q)_{n} = {}", qpochhammer_finite(&a, &q, n));
    }
    let half = q.qpow(&QuadRational::from_rational(parse_rational("1/2")?))?;
    println!("q^(1/2) = {half}");
    // Gamma_q(x + k) / Gamma_q(x) is a finite product, so exact
    println!("Gamma_q(7/2)/Gamma_q(1/2) = {}", qgamma_ratio(&QuadRational::from_rational(parse_rational("1/2")?), 3, &q)?);

    // float: the infinite product and Gamma_q itself
    let qf = QBase::float_q(&parse_rational("1/2")?, 40)?;
    let tol = qf.q().epsilon();
    println!("(1/2; 1/2)_inf = {}", qpochhammer_infinite(qf.q(), &qf, &tol)?);
    println!("Gamma_q(5/2)     = {}", qgamma(&qf.lift(&parse_rational("5/2")?), &qf, &tol)?);

    let c: Vec<QuadRational> = [3, 7].iter().map(|&k| QuadRational::from_i64(k)).collect();
    let d: Vec<QuadRational> = [1, 3].iter().map(|&k| QuadRational::from_i64(k)).collect();
    let e = elementary_symmetric(&c, &c[0]);
    println!("e_k(3, 7) = {:?}", e.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("(3,7) <_W (1,3): {}", weak_supermajorizes(&c, &d)?);
    Ok(())
}
