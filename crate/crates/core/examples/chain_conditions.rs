//! Which branch of the sign theorem applies to a pair of parameter vectors.

use qturan::conditions::{chain_condition_a, chain_condition_b, derive_cd, majorization_sufficiency, rts_monotonicity_probe};
use qturan::qcore::{ParamVector, QBase};
use qturan::scalar::parse_rational;
use qturan::{Field, QuadRational};

fn show(v: &[QuadRational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> qturan::Result<()> {
    let q = QBase::exact_q(&parse_rational("1/2")?)?;
    let ints = |v: &[i64]| ParamVector::nonneg(v.iter().map(|&k| QuadRational::from_i64(k)).collect());
    for (a, b) in [(vec![2, 3], vec![1, 2]), (vec![1, 1, 1], vec![2, 2])] {
        let (c, d) = derive_cd(&ints(&a)?, &ints(&b)?, &q)?;
        let (t, s) = (c.len(), d.len());
        println!("a = {a:?}, b = {b:?} -> c = ({}), d = ({})", show(&c), show(&d));
        if s <= t && t <= s + 1 {
            println!("  chain A: {}", chain_condition_a(&c, &d)?);
        }
        if t <= s {
            println!("  chain B: {}", chain_condition_b(&c, &d)?);
        }
        let m = majorization_sufficiency(&c, &d)?;
        println!("  majorization witness: {:?} ({:?})", m.witness_subvector, m.witness_case);
        let grid: Vec<_> = (1..=100).map(|k| c[0].ratio(k, 10)).collect();
        let probe = rts_monotonicity_probe(&c, &d, &grid)?;
        println!("  R_t,s on (0.1, 10]: {:?}", probe.observed);
    }
    Ok(())
}
