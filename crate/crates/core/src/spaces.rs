//! Hilbert-space layer over `L²(𝔻, (1-|z|²)^γ dx dy)`.
//!
//! Functions are expanded in the disc-polynomial basis with a product rule:
//! Gauss–Jacobi in `x = 2r² - 1` (weight `(1-x)^γ`) times the uniform rule in
//! the angle. Projections onto true poly-Bergman spaces are computed in
//! coefficient space.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::disc_poly::{eval_jacobi_form, norm_const, Orders, WeightParam};
use crate::error::{Error, Result};
use crate::special_fn::gauss_jacobi_nodes;

pub const DEFAULT_TRUNCATION: usize = 32;
pub const DEFAULT_RADIAL_NODES: usize = 64;
pub const DEFAULT_ANGULAR_NODES: usize = 128;

/// Product quadrature for `∫_𝔻 f dμ_γ`.
///
/// Nodes are stored radial-major with ascending radius and ascending angle,
/// and every sum over them runs in that order.
#[derive(Debug, Clone)]
pub struct QuadRule {
    gamma: WeightParam,
    radii: Vec<f64>,
    radial_weights: Vec<f64>,
    angular: usize,
}

impl QuadRule {
    pub fn new(gamma: WeightParam, radial_nodes: usize, angular_nodes: usize) -> Result<Self> {
        if radial_nodes == 0 || angular_nodes == 0 {
            return Err(Error::InvalidParameter(
                "quadrature node counts must be >= 1".into(),
            ));
        }
        let g = gamma.gamma();
        // r² = (1+x)/2, 1-r² = (1-x)/2, r dr = dx/4.
        let scale = 2f64.powf(-g - 2.0);
        let (radii, radial_weights) = gauss_jacobi_nodes(radial_nodes, g, 0.0)
            .into_iter()
            .map(|q| (((1.0 + q.node) / 2.0).sqrt(), scale * q.weight))
            .unzip();
        Ok(Self {
            gamma,
            radii,
            radial_weights,
            angular: angular_nodes,
        })
    }

    pub fn with_defaults(gamma: WeightParam) -> Self {
        Self::new(gamma, DEFAULT_RADIAL_NODES, DEFAULT_ANGULAR_NODES)
            .expect("default sizes are valid")
    }

    pub fn gamma(&self) -> WeightParam {
        self.gamma
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn radial_count(&self) -> usize {
        self.radii.len()
    }

    pub fn angular_count(&self) -> usize {
        self.angular
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angular
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn angle(&self, q: usize) -> f64 {
        TAU * q as f64 / self.angular as f64
    }

    /// All `(z, weight)` pairs in the fixed summation order.
    pub fn nodes(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        let dtheta = TAU / self.angular as f64;
        self.radii
            .iter()
            .zip(&self.radial_weights)
            .flat_map(move |(&r, &wr)| {
                (0..self.angular)
                    .map(move |q| (Complex64::from_polar(r, self.angle(q)), wr * dtheta))
            })
    }

    pub fn integrate<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes()
            .fold(Complex64::new(0.0, 0.0), |acc, (z, w)| acc + f(z) * w)
    }

    /// `∫_𝔻 dμ_γ` as seen by the rule; equals `π/(γ+1)` up to rounding.
    pub fn total_mass(&self) -> f64 {
        self.radial_weights.iter().sum::<f64>() * TAU
    }
}

type DiscFn = dyn Fn(Complex64) -> Complex64 + Send + Sync;

/// A function on the disc given by a pure callable, with an optional
/// declared polyanalytic order (`∂_z̄^{order+1} f = 0`).
#[derive(Clone)]
pub struct SampledFunction {
    f: Arc<DiscFn>,
    order: Option<usize>,
}

impl SampledFunction {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            f: Arc::new(f),
            order: None,
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    #[inline]
    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.f)(z)
    }

    /// The disc polynomial `R^γ_{m,n}` as a function.
    pub fn disc_polynomial(g: WeightParam, o: Orders) -> Self {
        Self::new(move |z| eval_jacobi_form(g, o, z)).with_order(o.n)
    }
}

impl fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// `⟨f, h⟩_γ = ∫ f conj(h) dμ_γ` by quadrature.
pub fn inner_product(f: &SampledFunction, h: &SampledFunction, q: &QuadRule) -> Complex64 {
    q.integrate(|z| f.eval(z) * h.eval(z).conj())
}

pub fn norm_sq(f: &SampledFunction, q: &QuadRule) -> f64 {
    q.integrate(|z| Complex64::new(f.eval(z).norm_sqr(), 0.0))
        .re
}

/// Expansion coefficients `a_{m,j}`, `0 <= m <= M`, `0 <= j <= J`, of a
/// function in the basis `R^γ_{m,j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    gamma: WeightParam,
    max_m: usize,
    max_j: usize,
    coeffs: Vec<Complex64>,
}

impl CoeffTable {
    pub fn zeros(gamma: WeightParam, max_m: usize, max_j: usize) -> Self {
        Self {
            gamma,
            max_m,
            max_j,
            coeffs: vec![Complex64::new(0.0, 0.0); (max_m + 1) * (max_j + 1)],
        }
    }

    pub fn gamma(&self) -> WeightParam {
        self.gamma
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn max_j(&self) -> usize {
        self.max_j
    }

    #[inline]
    fn index(&self, m: usize, j: usize) -> usize {
        assert!(
            m <= self.max_m && j <= self.max_j,
            "coefficient ({m}, {j}) outside table"
        );
        m * (self.max_j + 1) + j
    }

    pub fn get(&self, m: usize, j: usize) -> Complex64 {
        self.coeffs[self.index(m, j)]
    }

    pub fn set(&mut self, m: usize, j: usize, value: Complex64) {
        let i = self.index(m, j);
        self.coeffs[i] = value;
    }

    /// `((m, j), a_{m,j})` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Orders, Complex64)> + '_ {
        let cols = self.max_j + 1;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &a)| (Orders::new(i / cols, i % cols), a))
    }

    /// `Σ d^γ_{m,j} |a_{m,j}|²`, the squared norm of the represented function.
    pub fn energy(&self) -> f64 {
        self.iter()
            .map(|(o, a)| norm_const(self.gamma, o) * a.norm_sqr())
            .sum()
    }

    /// Energy carried by columns `j > n`.
    pub fn tail_energy(&self, n: usize) -> f64 {
        self.iter()
            .filter(|(o, _)| o.n > n)
            .map(|(o, a)| norm_const(self.gamma, o) * a.norm_sqr())
            .sum()
    }

    /// Keeps only column `j = n` (the `A^{2,γ}_n` component).
    pub fn true_component(&self, n: usize) -> Self {
        self.masked(|j| j == n)
    }

    /// Keeps columns `j <= n` (the order-`n+1` poly-Bergman component).
    pub fn poly_component(&self, n: usize) -> Self {
        self.masked(|j| j <= n)
    }

    fn masked(&self, keep: impl Fn(usize) -> bool) -> Self {
        let mut out = self.clone();
        for (i, a) in out.coeffs.iter_mut().enumerate() {
            if !keep(i % (self.max_j + 1)) {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        out
    }

    /// `Σ a_{m,j} R^γ_{m,j}(z)`, skipping zero coefficients.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.iter()
            .filter(|(_, a)| *a != Complex64::new(0.0, 0.0))
            .fold(Complex64::new(0.0, 0.0), |acc, (o, a)| {
                acc + a * eval_jacobi_form(self.gamma, o, z)
            })
    }

    pub fn to_function(&self) -> SampledFunction {
        let table = self.clone();
        let top = self
            .iter()
            .filter(|(_, a)| *a != Complex64::new(0.0, 0.0))
            .map(|(o, _)| o.n)
            .max()
            .unwrap_or(0);
        SampledFunction::new(move |z| table.eval(z)).with_order(top)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coefficient tables always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidParameter(format!("bad coefficient table: {e}")))
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffTableRepr {
    gamma: f64,
    #[serde(rename = "M")]
    max_m: usize,
    #[serde(rename = "J")]
    max_j: usize,
    coeffs: Vec<[f64; 2]>,
}

impl Serialize for CoeffTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffTableRepr {
            gamma: self.gamma.gamma(),
            max_m: self.max_m,
            max_j: self.max_j,
            coeffs: self.coeffs.iter().map(|a| [a.re, a.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoeffTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = CoeffTableRepr::deserialize(d)?;
        let gamma = WeightParam::new(r.gamma).map_err(D::Error::custom)?;
        let expected = (r.max_m + 1) * (r.max_j + 1);
        if r.coeffs.len() != expected {
            return Err(D::Error::custom(format!(
                "expected {expected} coefficients for M={}, J={}, got {}",
                r.max_m,
                r.max_j,
                r.coeffs.len()
            )));
        }
        Ok(Self {
            gamma,
            max_m: r.max_m,
            max_j: r.max_j,
            coeffs: r
                .coeffs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        })
    }
}

/// `a_{m,j} = ⟨f, R^γ_{m,j}⟩_γ / d^γ_{m,j}` for `m <= max_m`, `j <= max_j`.
///
/// `f` is sampled once on the rule. On each ring the angular sums
/// `Σ_q f(r e^{iθ_q}) e^{-ikθ_q}` are formed for the frequencies `k = m - j`
/// in use, then combined with the real radial profiles of the basis.
pub fn expand(f: &SampledFunction, max_m: usize, max_j: usize, q: &QuadRule) -> CoeffTable {
    expand_columns(f, max_m, max_j, 0..=max_j, q)
}

fn expand_columns(
    f: &SampledFunction,
    max_m: usize,
    max_j: usize,
    columns: std::ops::RangeInclusive<usize>,
    q: &QuadRule,
) -> CoeffTable {
    let g = q.gamma();
    let na = q.angular_count();
    let roots: Vec<Complex64> = (0..na)
        .map(|i| Complex64::from_polar(1.0, -q.angle(i)))
        .collect();
    let (j_lo, j_hi) = (*columns.start(), *columns.end());
    let k_min = -(j_hi as i64);
    let k_max = max_m as i64 - j_lo as i64;
    let dtheta = TAU / na as f64;

    let mut table = CoeffTable::zeros(g, max_m, max_j);
    let mut samples = vec![Complex64::new(0.0, 0.0); na];
    let mut fourier = vec![Complex64::new(0.0, 0.0); (k_max - k_min + 1) as usize];
    for (&r, &wr) in q.radii.iter().zip(&q.radial_weights) {
        for (i, s) in samples.iter_mut().enumerate() {
            *s = f.eval(Complex64::from_polar(r, q.angle(i)));
        }
        for (slot, k) in fourier.iter_mut().zip(k_min..=k_max) {
            let step = k.rem_euclid(na as i64) as usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, s) in samples.iter().enumerate() {
                acc += s * roots[(i * step) % na];
            }
            *slot = acc * dtheta;
        }
        for m in 0..=max_m {
            for j in j_lo..=j_hi {
                let o = Orders::new(m, j);
                let profile = eval_jacobi_form(g, o, Complex64::new(r, 0.0)).re;
                let k = (o.frequency() - k_min) as usize;
                let i = table.index(m, j);
                table.coeffs[i] += fourier[k] * (wr * profile);
            }
        }
    }
    for m in 0..=max_m {
        for j in j_lo..=j_hi {
            let i = table.index(m, j);
            table.coeffs[i] /= norm_const(g, Orders::new(m, j));
        }
    }
    table
}

/// Orthogonal projection onto `A^{2,γ}_n`: `ζ ↦ Σ_{m<=M} a_{m,n} R^γ_{m,n}(ζ)`.
pub fn project_true(f: &SampledFunction, n: usize, max_m: usize, q: &QuadRule) -> SampledFunction {
    expand_columns(f, max_m, n, n..=n, q)
        .to_function()
        .with_order(n)
}

/// Orthogonal projection onto the poly-Bergman space of order `n+1`,
/// i.e. the sum of the true projections for `k = 0..=n`.
pub fn project_poly(f: &SampledFunction, n: usize, max_m: usize, q: &QuadRule) -> SampledFunction {
    expand(f, max_m, n, q).to_function().with_order(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    /// Energy of the coefficients `a_{m,j}` with `j > n`.
    pub residual: f64,
    /// `‖f‖²_γ` by quadrature.
    pub norm_sq: f64,
}

/// Truncated test for `f ∈ A^{2,γ}` of order `n+1`: passes when the energy in
/// columns `n < j <= J` is below `tol² ‖f‖²`.
pub fn membership_test(
    f: &SampledFunction,
    n: usize,
    max_m: usize,
    max_j: usize,
    q: &QuadRule,
    tol: f64,
) -> Result<Membership> {
    if max_j <= n {
        return Err(Error::InvalidParameter(format!(
            "membership test needs J > n, got J={max_j}, n={n}"
        )));
    }
    let residual = expand(f, max_m, max_j, q).tail_energy(n);
    let norm_sq = norm_sq(f, q);
    Ok(Membership {
        member: residual < tol * tol * norm_sq,
        residual,
        norm_sq,
    })
}

/// Seeded random finite combination `Σ_{j<=order, m<=degree} c_{m,j} R^γ_{m,j}`
/// with real and imaginary parts uniform in `[-1, 1)`. Returns the function
/// together with its exact coefficients.
pub fn random_polyanalytic(
    g: WeightParam,
    order: usize,
    degree: usize,
    seed: u64,
) -> (SampledFunction, CoeffTable) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = CoeffTable::zeros(g, degree, order);
    for m in 0..=degree {
        for j in 0..=order {
            let re = rng.random_range(-1.0..1.0);
            let im = rng.random_range(-1.0..1.0);
            table.set(m, j, Complex64::new(re, im));
        }
    }
    (table.to_function().with_order(order), table)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn w(g: f64) -> WeightParam {
        WeightParam::new(g).unwrap()
    }

    const GAMMAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];

    #[test]
    fn mass_and_symmetry() {
        for &g in &GAMMAS {
            let q = QuadRule::new(w(g), 16, 16).unwrap();
            let e = PI / (g + 1.0);
            assert!((q.total_mass() - e).abs() < 1e-12 * e);
            assert!(q.integrate(|z| z).norm() < 1e-15);
            assert!(q.integrate(|z| z * z).norm() < 1e-15);
        }
        let q = QuadRule::new(w(0.0), 8, 8).unwrap();
        let v = q.integrate(|z| Complex64::new(z.norm_sqr(), 0.0));
        assert!((v.re - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn node_order_is_radial_major() {
        let q = QuadRule::new(w(0.5), 4, 3).unwrap();
        let pts: Vec<_> = q.nodes().map(|(z, _)| z).collect();
        assert_eq!(pts.len(), 12);
        for ring in pts.chunks(3) {
            assert!((ring[0].norm() - ring[2].norm()).abs() < 1e-15);
            assert_eq!(ring[0].im, 0.0);
        }
        assert!(pts[0].norm() < pts[3].norm());
    }

    #[test]
    fn angular_rule_kills_nonzero_frequencies() {
        let q = QuadRule::new(w(0.0), 2, 10).unwrap();
        for k in 1..10 {
            let v = q.integrate(|z| Complex64::from_polar(1.0, k as f64 * z.arg()));
            assert!(v.norm() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn basic_inner_products() {
        for &g in &GAMMAS {
            let q = QuadRule::new(w(g), 20, 24).unwrap();
            let one = SampledFunction::new(|_| Complex64::new(1.0, 0.0));
            let z = SampledFunction::new(|z| z);
            let zb = SampledFunction::new(|z: Complex64| z.conj());
            assert!((inner_product(&one, &one, &q).re - PI / (g + 1.0)).abs() < 1e-12);
            assert!(inner_product(&z, &zb, &q).norm() < 1e-15);
        }
    }

    #[test]
    fn expansion_identifies_basis_elements() {
        for &g in &GAMMAS {
            let q = QuadRule::new(w(g), 24, 32).unwrap();
            let f = SampledFunction::disc_polynomial(w(g), Orders::new(2, 1));
            let t = expand(&f, 6, 3, &q);
            for (o, a) in t.iter() {
                let e = if o == Orders::new(2, 1) { 1.0 } else { 0.0 };
                assert!((a - e).norm() < 1e-10, "g={g} {o:?}: {a}");
            }
            let zb2 = SampledFunction::new(|z: Complex64| z.conj() * z.conj());
            let t = expand(&zb2, 6, 3, &q);
            for (o, a) in t.iter() {
                let e = if o == Orders::new(0, 2) { 1.0 } else { 0.0 };
                assert!((a - e).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn expansion_is_linear() {
        let g = w(1.0);
        let q = QuadRule::new(g, 24, 32).unwrap();
        let f = SampledFunction::new(move |z| {
            eval_jacobi_form(g, Orders::new(1, 0), z) * 3.0
                - eval_jacobi_form(g, Orders::new(4, 3), z) * Complex64::new(0.0, 2.0)
        });
        let t = expand(&f, 6, 4, &q);
        assert!((t.get(1, 0) - 3.0).norm() < 1e-9);
        assert!((t.get(4, 3) - Complex64::new(0.0, -2.0)).norm() < 1e-9);
    }

    #[test]
    fn expand_matches_inner_product_route() {
        let g = w(0.5);
        let q = QuadRule::new(g, 12, 16).unwrap();
        let f = SampledFunction::new(|z: Complex64| {
            (z * 0.7).exp() * (Complex64::new(1.0, 0.0) + z.conj())
        });
        let t = expand(&f, 5, 3, &q);
        for (o, a) in t.iter() {
            let r = SampledFunction::disc_polynomial(g, o);
            let direct = inner_product(&f, &r, &q) / norm_const(g, o);
            assert!((a - direct).norm() < 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn projections_of_simple_inputs() {
        let g = w(0.0);
        let q = QuadRule::new(g, 24, 32).unwrap();
        let f = SampledFunction::new(|z: Complex64| z + z.conj());
        let p = project_true(&f, 0, 8, &q);
        for &z in &[Complex64::new(0.3, 0.2), Complex64::new(-0.5, 0.6)] {
            assert!((p.eval(z) - z).norm() < 1e-12);
        }
        let zb3 = SampledFunction::new(|z: Complex64| z.conj().powi(3));
        let p = project_poly(&zb3, 2, 8, &q);
        assert!(p.eval(Complex64::new(0.4, 0.1)).norm() < 1e-12);
    }

    #[test]
    fn membership_examples() {
        let g = w(1.0);
        let q = QuadRule::new(g, 24, 32).unwrap();
        let bianalytic =
            SampledFunction::new(|z: Complex64| (1.0 - z.norm_sqr()) * (z * z * 2.0 - z + 0.5));
        assert!(
            membership_test(&bianalytic, 1, 8, 4, &q, 1e-9)
                .unwrap()
                .member
        );
        assert!(
            !membership_test(&bianalytic, 0, 8, 4, &q, 1e-9)
                .unwrap()
                .member
        );
        let z3 = SampledFunction::new(|z: Complex64| z.powi(3));
        assert!(membership_test(&z3, 0, 8, 3, &q, 1e-9).unwrap().member);
        for n in 0..3 {
            let f = SampledFunction::new(move |z: Complex64| z.conj().powi(n as i32 + 1));
            let t = membership_test(&f, n, 8, n + 2, &q, 1e-9).unwrap();
            assert!(!t.member);
            assert!((t.residual - t.norm_sq).abs() < 1e-12 * t.norm_sq);
        }
        assert!(membership_test(&z3, 2, 8, 2, &q, 1e-9).is_err());
    }

    #[test]
    fn random_functions_are_reproducible() {
        let (f1, t1) = random_polyanalytic(w(0.3), 2, 5, 7);
        let (f2, t2) = random_polyanalytic(w(0.3), 2, 5, 7);
        let (_, t3) = random_polyanalytic(w(0.3), 2, 5, 8);
        assert_eq!(t1, t2);
        assert_ne!(t1, t3);
        let z = Complex64::new(0.2, -0.4);
        assert_eq!(f1.eval(z), f2.eval(z));
        assert_eq!(f1.order(), Some(2));
        let (_, t0) = random_polyanalytic(w(0.3), 0, 4, 1);
        assert_eq!(t0.max_j(), 0);
    }

    #[test]
    fn coefficient_json_layout() {
        let mut t = CoeffTable::zeros(w(0.5), 1, 1);
        t.set(0, 1, Complex64::new(2.0, -1.0));
        let s = t.to_json();
        assert_eq!(
            s,
            r#"{"gamma":0.5,"M":1,"J":1,"coeffs":[[0.0,0.0],[2.0,-1.0],[0.0,0.0],[0.0,0.0]]}"#
        );
        assert_eq!(CoeffTable::from_json(&s).unwrap(), t);
        assert!(CoeffTable::from_json(r#"{"gamma":0.5,"M":1,"J":1,"coeffs":[]}"#).is_err());
        assert!(CoeffTable::from_json(r#"{"gamma":-2,"M":0,"J":0,"coeffs":[[1,0]]}"#).is_err());
    }
}
