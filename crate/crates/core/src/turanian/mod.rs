mod certificate;
mod inequality;
mod series;

pub use certificate::{
    certify, classify, delta_sign_certificate, delta_tilde_sign_certificate, gamma_sign_certificate,
    predicted_g_sign, SignReport, Verdict, FLOAT_SAFETY,
};
pub use inequality::{
    integer_shift_reduction_check, logconcavity_grid_check, turan_point_inequality, Convexity, GridCheck,
    PointInequality, ShiftPair, ShiftReduction,
};
pub use series::{turanian_series, Family, TuranianSeries, TuranianSpec};
