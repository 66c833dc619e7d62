//! Elementary q-objects: powers of the base, q-shifted factorials, the
//! q-gamma function, the q-exponential and symmetric polynomials.

mod gamma;
mod pochhammer;
mod qbase;
mod qexp;
mod symmetric;

pub use gamma::{qgamma, qgamma_ratio};
#[allow(unused_imports)]
pub(crate) use gamma::{is_nonpositive_integer, one_minus_q_pow};
pub use pochhammer::{
    default_rel_tol, pochhammer_classical, qpochhammer_finite, qpochhammer_infinite,
    qpochhammer_pow, MAX_PRODUCT_FACTORS,
};
pub use qbase::QBase;
pub use qexp::{q_exponential, q_exponential_product, q_exponential_tail_bound};
pub use symmetric::{elementary_symmetric, weak_supermajorizes, ParamVector};
