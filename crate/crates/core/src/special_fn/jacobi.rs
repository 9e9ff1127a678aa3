use crate::error::{Error, Result};
use crate::special_fn::pochhammer;

/// Parameters of a Jacobi polynomial `P_n^{(α,β)}`, orthogonal for the
/// weight `(1-x)^α (1+x)^β` on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    pub degree: usize,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64, degree: usize) -> Result<Self> {
        if alpha.is_nan() || beta.is_nan() || alpha <= -1.0 || beta <= -1.0 {
            return Err(Error::InvalidParameter(format!(
                "Jacobi exponents must exceed -1, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            degree,
        })
    }
}

/// Standard Jacobi polynomial `P_n^{(α,β)}(x)` by the three-term recurrence
/// in the degree.
pub fn jacobi_eval(p: JacobiParams, x: f64) -> f64 {
    jacobi(p.alpha, p.beta, p.degree, x)
}

/// `P_n^{(α,β)}(x) / P_n^{(α,β)}(1)`. Equal to 1 at `x = 1` exactly because
/// both factors are produced by the same recurrence.
pub fn jacobi_eval_normalized(p: JacobiParams, x: f64) -> f64 {
    if p.degree == 0 {
        return 1.0;
    }
    jacobi_eval(p, x) / jacobi_eval(p, 1.0)
}

/// First derivative, `d/dx P_n^{(α,β)} = (n+α+β+1)/2 · P_{n-1}^{(α+1,β+1)}`.
pub fn jacobi_derivative(p: JacobiParams, x: f64) -> f64 {
    if p.degree == 0 {
        return 0.0;
    }
    let n = p.degree as f64;
    0.5 * (n + p.alpha + p.beta + 1.0) * jacobi(p.alpha + 1.0, p.beta + 1.0, p.degree - 1, x)
}

/// `max_{[-1,1]} |P_n^{(α,β)}| / P_n^{(α,β)}(1)`, valid when
/// `max(α, β) >= -1/2`. The maximum sits at the endpoint belonging to the
/// larger exponent, where `|P_n| = (q+1)_n / n!` with `q = max(α, β)`.
pub fn jacobi_sup_ratio(alpha: f64, beta: f64, degree: usize) -> f64 {
    let q = alpha.max(beta);
    debug_assert!(q >= -0.5);
    (1..=degree).fold(1.0, |acc, i| acc * (q + i as f64) / (alpha + i as f64))
}

pub(crate) fn jacobi(alpha: f64, beta: f64, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut prev = 1.0;
    let mut curr = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (s - 2.0);
        let a2 = (s - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (s - 2.0) * (s - 1.0) * s;
        let a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
        let next = ((a2 + a3 * x) * curr - a4 * prev) / a1;
        prev = curr;
        curr = next;
    }
    curr
}

/// `P_n^{(α,β)}(1) = (α+1)_n / n!`.
#[allow(dead_code)]
pub(crate) fn jacobi_at_one(alpha: f64, n: usize) -> f64 {
    pochhammer(alpha + 1.0, n) / pochhammer(1.0, n)
}
