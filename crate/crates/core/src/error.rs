use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("weight exponent must satisfy gamma > -1, got {0}")]
    InvalidWeight(f64),

    #[error("point {re}+{im}i lies outside the {region} unit disc")]
    OutsideDisc {
        re: f64,
        im: f64,
        region: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypergeometric series did not converge within {terms} terms (|x| = {abs_x})")]
    NonConvergence { terms: usize, abs_x: f64 },

    #[error("series truncation insufficient: estimated tail {est_error:e} exceeds tol * |value| = {bound:e}")]
    TruncationInsufficient { est_error: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
