use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special_fn::pochhammer;

/// Default relative tolerance for series truncation.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

/// Parameters of `₂F₁(a, b; c; x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeoParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub x: Complex64,
}

impl HypergeoParams {
    pub fn new(a: f64, b: f64, c: f64, x: impl Into<Complex64>) -> Self {
        Self {
            a,
            b,
            c,
            x: x.into(),
        }
    }
}

fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v.fract() == 0.0
}

/// Gauss hypergeometric function by direct summation inside the unit disc.
///
/// Terms are generated by the ratio `(a+j)(b+j) x / ((c+j)(j+1))`. Summation
/// stops once the terms are decreasing and the geometric estimate of the
/// remaining tail falls below `tol * |partial sum|`, or when a term vanishes
/// exactly (terminating series).
pub fn gauss_2f1(p: HypergeoParams, tol: f64) -> Result<Complex64> {
    let HypergeoParams { a, b, c, x } = p;
    if is_nonpositive_integer(c) {
        return Err(Error::InvalidParameter(format!(
            "2F1 lower parameter c = {c} is a nonpositive integer"
        )));
    }
    let abs_x = x.norm();
    if abs_x >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "2F1 series requires |x| < 1, got {abs_x}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        let ratio = (a + jf) * (b + jf) / ((c + jf) * (jf + 1.0));
        term *= x * ratio;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        sum += term;
        let rho = ratio.abs() * abs_x;
        if rho < 1.0 && term.norm() * rho / (1.0 - rho) <= tol * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        abs_x,
    })
}

/// `r`-th derivative in `x` of `₂F₁(a, b; c; x)`, via
/// `d^r/dx^r ₂F₁(a,b;c;x) = (a)_r (b)_r / (c)_r · ₂F₁(a+r, b+r; c+r; x)`.
pub fn gauss_2f1_derivative(p: HypergeoParams, r: usize, tol: f64) -> Result<Complex64> {
    let rf = r as f64;
    let scale = pochhammer(p.a, r) * pochhammer(p.b, r) / pochhammer(p.c, r);
    let shifted = HypergeoParams::new(p.a + rf, p.b + rf, p.c + rf, p.x);
    Ok(gauss_2f1(shifted, tol)? * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain partial sum with an explicit term count; independent of the
    /// adaptive stopping rule.
    fn partial_sum(a: f64, b: f64, c: f64, x: f64, terms: usize) -> f64 {
        let mut sum = 0.0;
        for j in 0..terms {
            let mut t = 1.0;
            for i in 0..j {
                let i = i as f64;
                t *= (a + i) * (b + i) / ((c + i) * (i + 1.0)) * x;
            }
            sum += t;
        }
        sum
    }

    #[test]
    fn origin_is_one() {
        for &(a, b, c) in &[(1.0, 2.0, 3.0), (-2.5, 0.3, 0.7), (10.0, 4.0, 1.5)] {
            let v = gauss_2f1(HypergeoParams::new(a, b, c, 0.0), DEFAULT_TOL).unwrap();
            assert_eq!(v, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn bergman_reduction_at_half() {
        // 2F1(2, 1; 1; 0.5) = (1 - 0.5)^-2
        let v = gauss_2f1(HypergeoParams::new(2.0, 1.0, 1.0, 0.5), DEFAULT_TOL).unwrap();
        assert!((v.re - 4.0).abs() < 4.0 * 1e-13, "{v}");
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn matches_long_partial_sum() {
        let expected = partial_sum(3.0, 1.0, 2.0, 0.3, 200);
        let v = gauss_2f1(HypergeoParams::new(3.0, 1.0, 2.0, 0.3), DEFAULT_TOL).unwrap();
        assert!((v.re - expected).abs() <= 1e-13 * expected.abs());
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
        let (b, c, x) = (1.5, 2.5, 0.7);
        let exact = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
        let v = gauss_2f1(HypergeoParams::new(-2.0, b, c, x), DEFAULT_TOL).unwrap();
        assert!((v.re - exact).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gauss_2f1(HypergeoParams::new(1.0, 1.0, -2.0, 0.1), 1e-13).is_err());
        assert!(gauss_2f1(HypergeoParams::new(1.0, 1.0, 1.0, 1.0), 1e-13).is_err());
    }

    #[test]
    fn reduction_grid() {
        // 2F1(γ+2, γ+1; γ+1; x) = (1-x)^(-γ-2). Alternating sums at x < 0
        // lose digits proportional to Σ|terms| = (1-|x|)^(-γ-2).
        for &g in &[-0.5, 0.0, 1.0, 2.5] {
            for &x in &[0.1, -0.1, 0.5, -0.5, 0.9, -0.9] {
                let v = gauss_2f1(
                    HypergeoParams::new(g + 2.0, g + 1.0, g + 1.0, x),
                    DEFAULT_TOL,
                )
                .unwrap();
                let exact = (1.0f64 - x).powf(-g - 2.0);
                let scale = (1.0f64 - x.abs()).powf(-g - 2.0);
                assert!(
                    (v.re - exact).abs() <= 1e-13 * exact + 64.0 * f64::EPSILON * scale,
                    "g={g} x={x}: {} vs {exact}",
                    v.re
                );
            }
        }
    }

    #[test]
    fn contiguous_derivative_matches_finite_difference() {
        let p = HypergeoParams::new(3.5, 1.5, 2.5, 0.3);
        let d1 = gauss_2f1_derivative(p, 1, 1e-15).unwrap().re;
        let h = 1e-5;
        let f = |x: f64| {
            gauss_2f1(HypergeoParams::new(3.5, 1.5, 2.5, x), 1e-15)
                .unwrap()
                .re
        };
        let fd = (f(0.3 + h) - f(0.3 - h)) / (2.0 * h);
        assert!((d1 - fd).abs() < 1e-8);
    }

    #[test]
    fn complex_argument_against_closed_form() {
        // 2F1(c+1, b; c; x) = (1-x)^(-b-1) (1 - (1 - b/c) x)
        let (b, c) = (2.0, 3.5);
        let x = Complex64::new(0.3, -0.4);
        let v = gauss_2f1(HypergeoParams::new(c + 1.0, b, c, x), DEFAULT_TOL).unwrap();
        let exact = (Complex64::new(1.0, 0.0) - x).powf(-b - 1.0) * (1.0 - (1.0 - b / c) * x);
        assert!((v - exact).norm() < 1e-12 * exact.norm());
    }
}
