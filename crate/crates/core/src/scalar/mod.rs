//! Exact scalars: rational functions in `v = q^{1/D}` over `Q(i)`, and the
//! quadratic extension by one formal radical `C` used for reporting.

mod gauss;
mod laurent;
mod radical;
mod ratfunc;
mod text;

pub use gauss::GaussRat;
pub use laurent::Laurent;
pub use radical::{QuadraticValue, RadScalar, ScalarContext};
pub use ratfunc::Scalar;
pub use text::{parse_rad_scalar, parse_scalar, pretty_q};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = 1 in {0}")]
    PoleAtOne(String),
    #[error("scalars from different contexts")]
    ContextMismatch,
    #[error("invalid radical square: {0}")]
    InvalidRadical(String),
    #[error("exponent {num}/{den} is not a multiple of 1/D")]
    Exponent { num: i64, den: i64 },
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// `q^{num/den}` as a scalar in `v = q^{1/d}`.
pub fn q_pow(num: i64, den: i64, d: u32) -> Result<Scalar, ScalarError> {
    let scaled = num * d as i64;
    if scaled % den != 0 {
        return Err(ScalarError::Exponent { num, den });
    }
    Ok(Scalar::v_pow((scaled / den) as i32))
}
