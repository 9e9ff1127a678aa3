//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's special functions; values are built from first principles.

#![allow(dead_code)]

use std::f64::consts::PI;

use polybergman::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GAMMAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Area-uniform point with `|z| <= rmax`.
pub fn disc_point(rng: &mut ChaCha8Rng, rmax: f64) -> Complex64 {
    let r = rmax * rng.random_range(0.0f64..1.0).sqrt();
    Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
}

fn rising(a: f64, k: usize) -> f64 {
    (0..k).map(|i| a + i as f64).product()
}

fn choose(n: usize, k: usize) -> f64 {
    (1..=k).map(|i| (n + 1 - i) as f64 / i as f64).product()
}

/// Disc polynomial with `z̄` replaced by an independent variable `zeta`:
/// a polynomial of degree `n` in `zeta`, equal to `R^γ_{m,n}` on `zeta = z̄`.
pub fn bivariate(gamma: f64, m: usize, n: usize, z: Complex64, zeta: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..=m.min(n) {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * choose(m, i) * choose(n, i) * rising(1.0, i) / rising(gamma + 1.0, i);
        sum += (one - z * zeta).powu(i as u32)
            * z.powu((m - i) as u32)
            * zeta.powu((n - i) as u32)
            * c;
    }
    sum
}

/// `k`-th derivative of a holomorphic `f` at `x0` from the trapezoidal rule
/// on the Cauchy integral over `|x - x0| = rho` with `nodes` points. Exact up
/// to rounding for polynomials of degree below `nodes`.
pub fn cauchy_derivative(
    f: impl Fn(Complex64) -> Complex64,
    x0: Complex64,
    k: usize,
    rho: f64,
    nodes: usize,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for q in 0..nodes {
        let t = 2.0 * PI * q as f64 / nodes as f64;
        acc += f(x0 + Complex64::from_polar(rho, t)) * Complex64::from_polar(1.0, -(k as f64) * t);
    }
    acc * (rising(1.0, k) / (nodes as f64 * rho.powi(k as i32)))
}

/// `∂_z̄` by second-order central differences of the Wirtinger operator.
pub fn wirtinger_dbar(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let dx = (f(z + h) - f(z - h)) / (2.0 * h);
    let dy = (f(z + i * h) - f(z - i * h)) / (2.0 * h);
    (dx + i * dy) * 0.5
}

/// `∫_0^1 g(r) (1-r²)^γ 2π r dr` by tanh-sinh quadrature, which tolerates the
/// endpoint singularity for `γ < 0`.
pub fn radial_integral(gamma: f64, g: impl Fn(f64) -> f64) -> f64 {
    let h = 1.0 / 128.0;
    let mut sum = 0.0;
    let mut k = -(4.0 / h) as i64;
    while (k as f64) * h <= 4.0 {
        let t = k as f64 * h;
        let u = 0.5 * PI * t.sinh();
        let r = 1.0 / (1.0 + (-2.0 * u).exp());
        let one_minus_r = 1.0 / (1.0 + (2.0 * u).exp());
        let dr = 0.5 * PI * t.cosh() / (2.0 * u.cosh() * u.cosh());
        if one_minus_r > 0.0 && r > 0.0 && dr > 0.0 {
            let weight = (one_minus_r * (1.0 + r)).powf(gamma) * 2.0 * PI * r;
            let v = g(r) * weight * dr;
            if v.is_finite() {
                sum += v;
            }
        }
        k += 1;
    }
    sum * h
}

/// `‖R^γ_{m,n}‖²` by direct radial integration of the explicit polynomial.
pub fn norm_oracle(gamma: f64, m: usize, n: usize) -> f64 {
    radial_integral(gamma, |r| {
        let z = Complex64::new(r, 0.0);
        bivariate(gamma, m, n, z, z).norm_sqr()
    })
}
