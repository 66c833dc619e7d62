//! Coefficient signs of generalized Turanians, certified in exact arithmetic.

use qturan::qcore::{ParamVector, QBase};
use qturan::scalar::parse_rational;
use qturan::turanian::{certify, logconcavity_grid_check, Family, TuranianSpec};
use qturan::{Field, QuadRational};

fn main() -> qturan::Result<()> {
    let q = QBase::exact_q(&parse_rational("1/2")?)?;
    let one = QuadRational::from_i64(1);
    let half = QuadRational::from_rational(parse_rational("1/2")?);

    for family in [Family::HeineF, Family::HeineFTilde] {
        let spec = TuranianSpec::new(family, one.clone(), half.clone(), one.clone(), q.clone(), 40);
        let rep = certify(&spec)?;
        println!(
            "{:>14}: {:?} for m >= {} (expected {:?}), exact = {}",
            spec.family.name(),
            rep.verdict,
            rep.start_index,
            rep.expected,
            rep.unconditional
        );
    }

    // normalized 2phi2 with a = (2, 3), b = (1, 2)
    let ints = |v: &[i64]| ParamVector::nonneg(v.iter().map(|&k| QuadRational::from_i64(k)).collect());
    let g = Family::GNormalized { a: ints(&[2, 3])?, b: ints(&[1, 2])? };
    let spec = TuranianSpec::new(g, one.clone(), one.clone(), QuadRational::from_i64(2), q.clone(), 40);
    let rep = certify(&spec)?;
    println!("g: {:?}, chain A {:?}, chain B {:?}", rep.verdict, rep.chain_case_a, rep.chain_case_b);

    // log-convexity of mu -> f(mu; x) along a grid
    let qf = QBase::float_q(&parse_rational("1/2")?, 30)?;
    let grid: Vec<_> = (1..=8).map(|k| qf.q().ratio(k, 2)).collect();
    let check = logconcavity_grid_check(&Family::HeineF, &grid, &qf.q().ratio(1, 2), &qf)?;
    println!("heine-f in mu at x = 1/2: {:?} (expected {:?})", check.verdict, check.expected);
    Ok(())
}
