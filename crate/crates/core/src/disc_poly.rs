//! Disc polynomials `R^γ_{m,n}(z, z̄)`.
//!
//! `R^γ_{m,n}` has degree `m` in `z` and `n` in `z̄`, satisfies
//! `R^γ_{m,n}(1) = 1`, and the family is orthogonal for
//! `dμ_γ = (1-|z|²)^γ dx dy` on the unit disc. Three evaluation routes are
//! provided and agree to rounding:
//!
//! * [`eval_jacobi_form`]: angular monomial times a normalized Jacobi
//!   polynomial in `2|z|² - 1`,
//! * [`eval_explicit_sum`]: the finite sum in powers of `1 - z z̄`,
//! * [`eval_rodrigues`]: the `n`-th `z`-derivative of `z^m (1-|z|²)^{γ+n}`,
//!   expanded by the Leibniz rule.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special_fn::{
    binomial, factorial_over_pochhammer, falling_factorial, jacobi_eval_normalized,
    jacobi_sup_ratio, pochhammer, JacobiParams,
};

/// Weight exponent `γ > -1` of `dμ_γ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct WeightParam(f64);

impl WeightParam {
    pub fn new(gamma: f64) -> Result<Self> {
        if gamma > -1.0 && gamma.is_finite() {
            Ok(Self(gamma))
        } else {
            Err(Error::InvalidWeight(gamma))
        }
    }

    #[inline]
    pub fn gamma(self) -> f64 {
        self.0
    }

    /// The weight shifted by `k`, as needed by the `∂_z̄` lowering identity.
    pub fn shifted(self, k: usize) -> Self {
        Self(self.0 + k as f64)
    }
}

impl TryFrom<f64> for WeightParam {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

impl From<WeightParam> for f64 {
    fn from(w: WeightParam) -> f64 {
        w.0
    }
}

/// Bidegree `(m, n)`: `m` in `z`, `n` in `z̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orders {
    pub m: usize,
    pub n: usize,
}

impl Orders {
    pub const fn new(m: usize, n: usize) -> Self {
        Self { m, n }
    }

    /// `m ∧ n`, the degree of the Jacobi factor.
    #[inline]
    pub fn min(self) -> usize {
        self.m.min(self.n)
    }

    /// `|m - n|`, the angular frequency.
    #[inline]
    pub fn gap(self) -> usize {
        self.m.abs_diff(self.n)
    }

    /// Signed angular frequency `m - n`.
    #[inline]
    pub fn frequency(self) -> i64 {
        self.m as i64 - self.n as i64
    }
}

/// A point of the closed unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    /// Accepts `|z| < 1`.
    pub fn interior(z: Complex64) -> Result<Self> {
        if z.norm() < 1.0 {
            Ok(Self(z))
        } else {
            Err(Error::OutsideDisc {
                re: z.re,
                im: z.im,
                region: "open",
            })
        }
    }

    /// Accepts `|z| <= 1`.
    pub fn closed(z: Complex64) -> Result<Self> {
        if z.norm() <= 1.0 {
            Ok(Self(z))
        } else {
            Err(Error::OutsideDisc {
                re: z.re,
                im: z.im,
                region: "closed",
            })
        }
    }

    #[inline]
    pub fn z(self) -> Complex64 {
        self.0
    }
}

/// Which evaluation route to use for `R^γ_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Jacobi,
    Sum,
    Rodrigues,
}

impl Representation {
    pub const ALL: [Representation; 3] = [Self::Jacobi, Self::Sum, Self::Rodrigues];

    pub fn eval(self, g: WeightParam, o: Orders, z: Complex64) -> Complex64 {
        match self {
            Self::Jacobi => eval_jacobi_form(g, o, z),
            Self::Sum => eval_explicit_sum(g, o, z),
            Self::Rodrigues => eval_rodrigues(g, o, z),
        }
    }

    /// Whether the route is defined on the unit circle itself.
    pub fn allows_boundary(self) -> bool {
        !matches!(self, Self::Rodrigues)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Jacobi => "jacobi",
            Self::Sum => "sum",
            Self::Rodrigues => "rodrigues",
        })
    }
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jacobi" => Ok(Self::Jacobi),
            "sum" | "explicit" => Ok(Self::Sum),
            "rodrigues" => Ok(Self::Rodrigues),
            other => Err(Error::InvalidParameter(format!(
                "unknown representation '{other}'"
            ))),
        }
    }
}

fn cpow(z: Complex64, k: usize) -> Complex64 {
    z.powi(k as i32)
}

/// `z^{m-k} z̄^{n-k} · P_k^{(γ,|m-n|)}(2|z|²-1) / P_k^{(γ,|m-n|)}(1)` with
/// `k = m ∧ n`. The `|z|^{-2k}` factor is cancelled symbolically, so `z = 0`
/// needs no special casing. Requires `|z| <= 1`.
pub fn eval_jacobi_form(g: WeightParam, o: Orders, z: Complex64) -> Complex64 {
    let k = o.min();
    let angular = cpow(z, o.m - k) * cpow(z.conj(), o.n - k);
    if k == 0 {
        return angular;
    }
    let p = JacobiParams {
        alpha: g.gamma(),
        beta: o.gap() as f64,
        degree: k,
    };
    angular * jacobi_eval_normalized(p, 2.0 * z.norm_sqr() - 1.0)
}

/// `m! n! Σ_j (-1)^j (1 - z z̄)^j z^{m-j} z̄^{n-j} / (j! (γ+1)_j (m-j)! (n-j)!)`.
///
/// The factorial prefactor of each term is carried as
/// `C(m,j) C(n,j) j!/(γ+1)_j`, which is the same quantity without overflow.
pub fn eval_explicit_sum(g: WeightParam, o: Orders, z: Complex64) -> Complex64 {
    let gamma = g.gamma();
    let zb = z.conj();
    let h = Complex64::new(1.0, 0.0) - z * zb;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..=o.min() {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let c =
            sign * binomial(o.m, j) * binomial(o.n, j) * factorial_over_pochhammer(gamma + 1.0, j);
        sum += h.powi(j as i32) * cpow(z, o.m - j) * cpow(zb, o.n - j) * c;
    }
    sum
}

/// `(-1)^n / (γ+1)_n · (1-|z|²)^{-γ} · ∂_z^n [ z^m (1-z z̄)^{γ+n} ]` with `z̄`
/// held fixed. The derivative is the finite Leibniz sum
/// `Σ_j C(n,j) m^{(j)} z^{m-j} (-z̄)^{n-j} (γ+n)^{(n-j)} (1-|z|²)^{γ+j}`
/// (falling factorials). Requires `|z| < 1`.
pub fn eval_rodrigues(g: WeightParam, o: Orders, z: Complex64) -> Complex64 {
    let gamma = g.gamma();
    let (m, n) = (o.m, o.n);
    let h = 1.0 - z.norm_sqr();
    let neg_zb = -z.conj();
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..=m.min(n) {
        let c = binomial(n, j)
            * falling_factorial(m as f64, j)
            * falling_factorial(gamma + n as f64, n - j);
        sum += cpow(z, m - j) * cpow(neg_zb, n - j) * (c * h.powf(gamma + j as f64));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sum * (sign / pochhammer(gamma + 1.0, n) * h.powf(-gamma))
}

/// `d^γ_{m,n} = ‖R^γ_{m,n}‖²_γ = π m! n! / ((γ+1+m+n) (γ+1)_m (γ+1)_n)`.
///
/// The ratios `m!/(γ+1)_m` are accumulated factor by factor, so large
/// orders neither overflow nor lose relative accuracy.
pub fn norm_const(g: WeightParam, o: Orders) -> f64 {
    let a = g.gamma() + 1.0;
    PI / (a + (o.m + o.n) as f64)
        * factorial_over_pochhammer(a, o.m)
        * factorial_over_pochhammer(a, o.n)
}

/// Constant `C` in `∂_z̄^k R^γ_{m,j} = C · R^{γ+k}_{m,j-k}` for `k <= j`:
/// `C = j!/(j-k)! · (γ+m+1)_k / (γ+1)_k`.
pub fn dbar_constant(g: WeightParam, m: usize, j: usize, k: usize) -> f64 {
    if k > j {
        return 0.0;
    }
    let gamma = g.gamma();
    falling_factorial(j as f64, k) * pochhammer(gamma + m as f64 + 1.0, k)
        / pochhammer(gamma + 1.0, k)
}

/// `∂_z̄^k R^γ_{m,j}(z)`. Identically zero for `k > j`.
pub fn dbar_derivative(g: WeightParam, o: Orders, k: usize, z: Complex64) -> Complex64 {
    if k > o.n {
        return Complex64::new(0.0, 0.0);
    }
    let c = dbar_constant(g, o.m, o.n, k);
    eval_jacobi_form(g.shifted(k), Orders::new(o.m, o.n - k), z) * c
}

/// Koshelev orthonormal polynomial
/// `e_{m,p}(z) = √(m+p+1) / (√π (m+p)!) · ∂_z^p ∂_z̄^m [(|z|²-1)^{m+p}]`,
/// with the derivatives applied term by term to the binomial expansion of
/// `(z z̄ - 1)^{m+p}`.
///
/// The top monomial is `z^m z̄^p`, so `e_{m,p} = √((m+p+1)/π) · R^0_{m,p}`.
pub fn koshelev_basis(m: usize, p: usize, z: Complex64) -> Complex64 {
    let total = m + p;
    let zb = z.conj();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in m.max(p)..=total {
        let sign = if (total - k).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        let c = sign
            * binomial(total, k)
            * falling_factorial(k as f64, p)
            * falling_factorial(k as f64, m);
        sum += cpow(z, k - p) * cpow(zb, k - m) * c;
    }
    let scale = ((total + 1) as f64).sqrt() / (PI.sqrt() * pochhammer(1.0, total));
    sum * scale
}

/// Zernike radial polynomial `R^{n-m}_{m+n}(r)` for `m <= n`, read off the
/// unweighted disc polynomial on the positive real axis: for `γ = 0`,
/// `R^0_{m,n}(r e^{iθ}) = e^{-i(n-m)θ} R^{n-m}_{m+n}(r)`.
pub fn zernike_radial(m: usize, n: usize, r: f64) -> Result<f64> {
    if m > n {
        return Err(Error::InvalidParameter(format!(
            "zernike_radial needs m <= n, got m={m}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::InvalidParameter(format!(
            "radius {r} outside [0, 1]"
        )));
    }
    let unweighted = WeightParam(0.0);
    Ok(eval_jacobi_form(unweighted, Orders::new(m, n), Complex64::new(r, 0.0)).re)
}

/// An upper bound for `|R^γ_{m,n}(z)|` on the circle `|z| = r`.
///
/// Uses `r^{|m-n|}` times the sup-norm of the normalized Jacobi factor. For
/// `γ >= 0` the global bound `|R^γ_{m,n}| <= 1` is also applied. For
/// `-1 < γ < 0` the global bound fails (e.g. `R^{-1/2}_{1,1}(0) = -2`).
pub fn sup_bound(g: WeightParam, o: Orders, r: f64) -> f64 {
    let local = r.powi(o.gap() as i32) * jacobi_sup_ratio(g.gamma(), o.gap() as f64, o.min());
    if g.gamma() >= 0.0 {
        local.min(1.0)
    } else {
        local
    }
}
