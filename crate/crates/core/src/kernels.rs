//! Reproducing kernels of the weighted Bergman space and of the true
//! poly-Bergman spaces `A^{2,γ}_n`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc_poly::{eval_jacobi_form, norm_const, sup_bound, Orders, WeightParam};
use crate::error::{Error, Result};
use crate::special_fn::{
    binomial, factorial_over_pochhammer, falling_factorial, gauss_2f1, gauss_2f1_derivative,
    pochhammer, HypergeoParams, DEFAULT_TOL,
};

/// Parameters of a true poly-Bergman kernel evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub gamma: WeightParam,
    /// Index of the true poly-Bergman space.
    pub n: usize,
    /// Highest basis index `M` kept by the series form.
    pub truncation: usize,
    /// Relative tolerance on the series tail.
    pub tol: f64,
}

impl KernelSpec {
    pub fn new(gamma: WeightParam, n: usize, truncation: usize, tol: f64) -> Result<Self> {
        if truncation < 1 {
            return Err(Error::InvalidParameter(
                "kernel truncation must be >= 1".into(),
            ));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "kernel tolerance must be positive, got {tol}"
            )));
        }
        Ok(Self {
            gamma,
            n,
            truncation,
            tol,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    /// Closed-form evaluation; `est_error` is a zero sentinel.
    Analytic,
    /// Truncated series; `est_error` bounds the dropped tail.
    Truncated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelValue {
    pub value: Complex64,
    pub est_error: f64,
    pub kind: KernelKind,
}

/// Weighted Bergman kernel `(γ+1) / (π (1 - z w̄)^{γ+2})`, principal branch.
pub fn bergman_kernel(g: WeightParam, z: Complex64, w: Complex64) -> Complex64 {
    let gamma = g.gamma();
    let base = Complex64::new(1.0, 0.0) - z * w.conj();
    base.powf(-(gamma + 2.0)) * ((gamma + 1.0) / PI)
}

/// `K^γ_n(z,w) ≈ Σ_{m<=M} R^γ_{m,n}(z) conj(R^γ_{m,n}(w)) / d^γ_{m,n}`.
///
/// The tail `m > M` is bounded term by term with [`sup_bound`] at radii `|z|`
/// and `|w|`; the bound decays like `(|z||w|)^{m-n}`.
pub fn true_kernel_series(spec: KernelSpec, z: Complex64, w: Complex64) -> Result<KernelValue> {
    let g = spec.gamma;
    let n = spec.n;
    let mut value = Complex64::new(0.0, 0.0);
    for m in 0..=spec.truncation {
        let o = Orders::new(m, n);
        value += eval_jacobi_form(g, o, z) * eval_jacobi_form(g, o, w).conj() / norm_const(g, o);
    }
    let est_error = series_tail_bound(g, n, spec.truncation, z.norm(), w.norm());
    let bound = spec.tol * value.norm();
    if est_error > bound {
        return Err(Error::TruncationInsufficient { est_error, bound });
    }
    Ok(KernelValue {
        value,
        est_error,
        kind: KernelKind::Truncated,
    })
}

fn series_tail_bound(g: WeightParam, n: usize, truncation: usize, rz: f64, rw: f64) -> f64 {
    const CAP: usize = 1_000_000;
    let term = |m: usize| {
        let o = Orders::new(m, n);
        sup_bound(g, o, rz) * sup_bound(g, o, rw) / norm_const(g, o)
    };
    let mut tail = 0.0;
    let mut prev = term(truncation + 1);
    tail += prev;
    for m in truncation + 2..truncation + CAP {
        let t = term(m);
        tail += t;
        if t == 0.0 {
            return tail;
        }
        let rho = t / prev;
        // Beyond m = n the bound is r^{m-n} times a ratio of polynomials in
        // m whose successive quotients decrease, so rho bounds later ratios.
        if m > n + 1 && rho < 1.0 && t * rho / (1.0 - rho) <= 1e-3 * tail {
            return tail + t * rho / (1.0 - rho);
        }
        prev = t;
    }
    f64::INFINITY
}

/// `Ξ^γ_n(x) = Σ_m x^m / d^γ_{m,n}
///  = (γ+n+1)(γ+1)_n / (π n!) · ₂F₁(γ+n+2, γ+1; γ+n+1; x)`.
pub fn xi_factor(g: WeightParam, n: usize, x: Complex64) -> Result<Complex64> {
    let gamma = g.gamma();
    let nf = n as f64;
    let scale = (gamma + nf + 1.0) / (PI * factorial_over_pochhammer(gamma + 1.0, n));
    let f = gauss_2f1(
        HypergeoParams::new(gamma + nf + 2.0, gamma + 1.0, gamma + nf + 1.0, x),
        DEFAULT_TOL,
    )?;
    Ok(f * scale)
}

/// Closed form of `K^γ_n`:
///
/// ```text
/// (γ+n+1) / (π n! (γ+1)_n) · (1-|z|²)^{-γ} (1-|w|²)^{-γ}
///   · ∂_z^n ∂_w̄^n { (1-|z|²)^{γ+n} (1-|w|²)^{γ+n} ₂F₁(γ+n+2, γ+1; γ+n+1; z w̄) }
/// ```
///
/// Both derivatives are expanded by the Leibniz rule. With
/// `F = ₂F₁(·; z w̄)` the result is the finite sum over `i, l <= n` and
/// `s <= min(i, l)` of
///
/// ```text
/// C(n,i) C(n,l) C(l,s) i^{(s)} · A_{n-i}(z) B_{n-l}(w) · w̄^{i-s} z^{l-s} F^{(i+l-s)}(z w̄)
/// ```
///
/// where `A_p = (-z̄)^p (γ+n)^{(p)} (1-|z|²)^{n-p}` and `B_q` likewise in `w`,
/// the `(1-|·|²)^{-γ}` factors already absorbed. `F^{(r)}` comes from the
/// contiguous derivative identity of `₂F₁`.
pub fn true_kernel_closed(spec: KernelSpec, z: Complex64, w: Complex64) -> Result<KernelValue> {
    let gamma = spec.gamma.gamma();
    let n = spec.n;
    let nf = n as f64;
    let x = z * w.conj();
    let base = HypergeoParams::new(gamma + nf + 2.0, gamma + 1.0, gamma + nf + 1.0, x);
    let derivs = (0..=2 * n)
        .map(|r| gauss_2f1_derivative(base, r, DEFAULT_TOL))
        .collect::<Result<Vec<_>>>()?;

    let hz = 1.0 - z.norm_sqr();
    let hw = 1.0 - w.norm_sqr();
    let a: Vec<Complex64> = (0..=n)
        .map(|p| {
            (-z.conj()).powi(p as i32)
                * (falling_factorial(gamma + nf, p) * hz.powi((n - p) as i32))
        })
        .collect();
    let b: Vec<Complex64> = (0..=n)
        .map(|q| (-w).powi(q as i32) * (falling_factorial(gamma + nf, q) * hw.powi((n - q) as i32)))
        .collect();

    let wb = w.conj();
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..=n {
        for l in 0..=n {
            let outer = a[n - i] * b[n - l] * (binomial(n, i) * binomial(n, l));
            let mut inner = Complex64::new(0.0, 0.0);
            for s in 0..=i.min(l) {
                let c = binomial(l, s) * falling_factorial(i as f64, s);
                inner += wb.powi((i - s) as i32) * z.powi((l - s) as i32) * derivs[i + l - s] * c;
            }
            sum += outer * inner;
        }
    }
    let pref = (gamma + nf + 1.0) / (PI * pochhammer(1.0, n) * pochhammer(gamma + 1.0, n));
    Ok(KernelValue {
        value: sum * pref,
        est_error: 0.0,
        kind: KernelKind::Analytic,
    })
}

/// Kernel of the full poly-Bergman space of order `n+1`:
/// `Σ_{k=0}^{n} K^γ_k(z, w)`.
pub fn poly_kernel(g: WeightParam, n: usize, z: Complex64, w: Complex64) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let spec = KernelSpec {
            gamma: g,
            n: k,
            truncation: 1,
            tol: DEFAULT_TOL,
        };
        sum += true_kernel_closed(spec, z, w)?.value;
    }
    Ok(sum)
}

/// Partial sums of `Σ_m 1/d^γ_{m,n}`, the squared constant in the pointwise
/// estimate `|f(z)| <= c ‖f‖` obtained from a uniform bound on the basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundConstant {
    pub partial_sum: f64,
    pub terms: usize,
    /// Whether the full series diverges. It equals `₂F₁(γ+n+2, γ+1; γ+n+1; 1)`
    /// up to a factor, and Gauss's test requires `c - a - b = -γ - 2 > 0`.
    pub diverges: bool,
}

pub fn eval_bound_const(g: WeightParam, n: usize, truncation: usize) -> BoundConstant {
    let partial_sum = (0..=truncation)
        .map(|m| 1.0 / norm_const(g, Orders::new(m, n)))
        .sum();
    let gamma = g.gamma();
    let nf = n as f64;
    let excess = (gamma + nf + 1.0) - (gamma + nf + 2.0) - (gamma + 1.0);
    BoundConstant {
        partial_sum,
        terms: truncation + 1,
        diverges: excess <= 0.0,
    }
}
