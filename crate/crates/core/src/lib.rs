pub mod analysis;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod hyperseries;
pub mod identities;
pub mod qcore;
pub mod scalar;
pub mod turanian;

pub use error::{Error, Result};
pub use scalar::{BigFloat, Field, Mode, QuadRational, Rational, Scalar};
