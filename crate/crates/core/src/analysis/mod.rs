//! Complete monotonicity, multiplicative convexity and the Laplace
//! representation of a Turanian with nonnegative coefficients.

mod quadrature;

use serde::Serialize;

pub use quadrature::{gauss_legendre, integrate, QuadSpec};

use crate::error::{Error, Result};
use crate::hyperseries::TruncatedSeries;
use crate::identities::{compare, Residual};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub passes: bool,
    /// `min_i (-1)^n Delta^n f(y_i)` for `n = 1..=max_order`.
    pub min_margin_by_order: Vec<Scalar>,
    pub first_failure: Option<(usize, usize)>,
}

fn uniform_step<F: Field>(grid: &[F]) -> Result<F> {
    let h = grid[1].clone() - &grid[0];
    if h.signum() <= 0 {
        return Err(Error::InsufficientGrid("grid must be increasing".into()));
    }
    let slack = if F::is_exact() { h.zero() } else { h.clone() * &h.epsilon() * &h.int(1024) };
    for w in grid.windows(2) {
        if ((w[1].clone() - &w[0]) - &h).abs() > slack {
            return Err(Error::InsufficientGrid("grid must be uniform".into()));
        }
    }
    Ok(h)
}

/// Finite-difference test of complete monotonicity on a uniform grid: the
/// forward differences of order `n` must satisfy `(-1)^n Delta^n f >= 0`.
/// A difference counts as nonnegative when it exceeds `-abs_tol * 2^n`.
pub fn complete_monotonicity_check<F: Field>(
    mut f: impl FnMut(&F) -> Result<F>,
    y_grid: &[F],
    max_order: usize,
    abs_tol: &F,
) -> Result<MonotonicityReport> {
    if y_grid.len() < max_order + 1 || y_grid.len() < 2 {
        return Err(Error::InsufficientGrid(format!(
            "order {max_order} needs at least {} grid points, got {}",
            max_order + 1,
            y_grid.len()
        )));
    }
    uniform_step(y_grid)?;
    let mut diff = y_grid.iter().map(&mut f).collect::<Result<Vec<F>>>()?;
    let mut margins = Vec::with_capacity(max_order);
    let mut first_failure = None;
    let mut tol = abs_tol.clone();
    for n in 1..=max_order {
        diff = diff.windows(2).map(|w| w[1].clone() - &w[0]).collect();
        tol = tol.clone() + &tol;
        let signed: Vec<F> = diff.iter().map(|d| if n % 2 == 1 { -d.clone() } else { d.clone() }).collect();
        let mut i = 0;
        for (j, v) in signed.iter().enumerate() {
            if *v < signed[i] {
                i = j;
            }
        }
        let min = signed[i].clone();
        if min < -tol.clone() && first_failure.is_none() {
            first_failure = Some((n, i));
        }
        margins.push(min.to_scalar());
    }
    Ok(MonotonicityReport { passes: first_failure.is_none(), min_margin_by_order: margins, first_failure })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub passes: bool,
    /// `sqrt(f(x1) f(x2)) - f(sqrt(x1 x2))` per pair.
    pub margins: Vec<Scalar>,
}

/// `f(sqrt(x1 x2)) <= sqrt(f(x1) f(x2))` for every pair, up to `abs_tol`.
pub fn multiplicative_convexity_check<F: Field>(
    mut f: impl FnMut(&F) -> Result<F>,
    pairs: &[(F, F)],
    abs_tol: &F,
) -> Result<ConvexityReport> {
    let mut margins = Vec::with_capacity(pairs.len());
    let mut passes = true;
    for (x1, x2) in pairs {
        if x1.signum() <= 0 || x2.signum() <= 0 {
            return Err(Error::Domain(format!("pair ({x1}, {x2}) must be positive")));
        }
        let g = f(&(x1.clone() * x2).try_sqrt()?)?;
        let prod = f(x1)? * &f(x2)?;
        if prod.signum() < 0 {
            return Err(Error::Domain(format!("f(x1) f(x2) < 0 at ({x1}, {x2})")));
        }
        let m = prod.try_sqrt()? - &g;
        passes &= m >= -abs_tol.clone();
        margins.push(m.to_scalar());
    }
    Ok(ConvexityReport { passes, margins })
}

/// The measure `gamma_0 delta_0 + (sum_{m>=1} gamma_m t^(m-1)/(m-1)!) dt`
/// whose Laplace transform `int e^(-t/x) tau(dt)` is `sum gamma_m x^m`.
#[derive(Clone, Debug)]
pub struct MeasureDensity<F: Field> {
    pub atom_at_zero: F,
    /// `gamma_1, gamma_2, ...`
    pub density_coeffs: Vec<F>,
}

impl<F: Field> MeasureDensity<F> {
    pub fn from_series(series: &TruncatedSeries<F>) -> Self {
        let c = series.coeffs();
        MeasureDensity { atom_at_zero: c[0].clone(), density_coeffs: c[1..].to_vec() }
    }

    pub fn order(&self) -> usize {
        self.density_coeffs.len()
    }

    /// `sum gamma_m x^m` over the stored coefficients.
    pub fn series_value(&self, x: &F) -> F {
        let mut s = x.zero();
        for g in self.density_coeffs.iter().rev() {
            s = (s + g) * x;
        }
        s + &self.atom_at_zero
    }
}

/// Density of the absolutely continuous part at `t >= 0`.
pub fn tau_density<F: Field>(gamma: &MeasureDensity<F>, t: &F) -> F {
    // Horner in t, with gamma_(i+1) t^i / i! folding in 1/(i+1) on the way down
    let mut s = t.zero();
    for (i, g) in gamma.density_coeffs.iter().enumerate().rev() {
        s = s * t / &t.int(i as i64 + 1) + g;
    }
    s
}

/// `gamma_0 + int_0^T e^(-t/x) tau'(t) dt` against the series, at each `x`.
pub fn laplace_representation_check<F: Field>(
    gamma: &MeasureDensity<F>,
    x_grid: &[F],
    quad: &QuadSpec<F>,
) -> Result<Residual> {
    let mut lhs = Vec::with_capacity(x_grid.len());
    let mut rhs = Vec::with_capacity(x_grid.len());
    let mut notes = Vec::new();
    for x in x_grid {
        if x.signum() <= 0 {
            return Err(Error::Domain(format!("Laplace check needs x > 0, got {x}")));
        }
        let zero = x.zero();
        let integral = integrate(
            |t: &F| Ok((-(t.clone() / x)).try_exp()? * &tau_density(gamma, t)),
            &zero,
            &quad.upper,
            &quad.abs_tol,
            quad.nodes,
        )?;
        lhs.push(gamma.atom_at_zero.clone() + &integral);
        rhs.push(gamma.series_value(x));
        if let Some(last) = gamma.density_coeffs.last() {
            let tail = last.abs() * &x.powi(gamma.order() as i64);
            if tail > quad.abs_tol {
                notes.push(format!("at x = {x} the last series term {tail} exceeds the quadrature tolerance"));
            }
        }
    }
    let mut res = compare("laplace-representation", &lhs, &rhs)?;
    res.notes = notes;
    Ok(res)
}
