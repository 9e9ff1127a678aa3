//! Scalar special functions used throughout the crate.

mod hypergeometric;
mod jacobi;
mod quadrature;

pub use hypergeometric::{gauss_2f1, gauss_2f1_derivative, HypergeoParams, DEFAULT_TOL, MAX_TERMS};
pub use jacobi::{
    jacobi_derivative, jacobi_eval, jacobi_eval_normalized, jacobi_sup_ratio, JacobiParams,
};
pub use quadrature::{gauss_jacobi_nodes, QuadNode};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// Falling factorial `a (a-1) ... (a-k+1)`.
pub fn falling_factorial(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a - i as f64))
}

/// Binomial coefficient as a float, built up multiplicatively.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `k! / (a)_k` computed as a product of ratios so that neither factor is
/// ever formed on its own. Stays finite far beyond `170!`.
pub fn factorial_over_pochhammer(a: f64, k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64 / (a + (i - 1) as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(2.5, 0), 1.0);
        assert_eq!(pochhammer(1.0, 4), 24.0);
        // 0.5 * 1.5 * 2.5
        assert_eq!(pochhammer(0.5, 3), 1.875);
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(6, 0), 1.0);
        assert_eq!(binomial(3, 4), 0.0);
        assert_eq!(binomial(10, 7), 120.0);
    }

    #[test]
    fn factorial_ratio_matches_direct_and_survives_overflow() {
        let direct = 24.0 / pochhammer(1.5, 4);
        assert!((factorial_over_pochhammer(1.5, 4) - direct).abs() < 1e-15);
        let big = factorial_over_pochhammer(0.5, 400);
        assert!(big.is_finite() && big > 0.0);
    }

    proptest! {
        #[test]
        fn pochhammer_step(a in -0.99f64..20.0, k in 0usize..30) {
            let lhs = pochhammer(a, k + 1);
            let rhs = pochhammer(a, k) * (a + k as f64);
            prop_assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(1e-300));
        }
    }
}
