//! Truncated power series and the basic hypergeometric families built on them.

mod bessel;
mod families;
mod phi;
mod series;

pub use bessel::{heine_f_via_bessel, modified_qbessel_i1, qbessel_j1, qbessel_j2};
pub use families::{
    gamma_prefactor, gamma_prefactor_shift, gamma_value, g_series, heine_f_series,
    heine_f_tilde_series, heine_q0_series, kummer_1f1_unit_top, Normalization,
};
pub use phi::{phi_eval, tphis_series, EvalOptions, Evaluation, PhiSpec};
pub use series::{TruncatedSeries, Validity};
