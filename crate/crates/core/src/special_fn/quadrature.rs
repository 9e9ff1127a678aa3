//! Gauss–Jacobi rules from the symmetric tridiagonal Jacobi matrix
//! (Golub–Welsch), with a Newton polish of the nodes.

use statrs::function::gamma::ln_gamma;

use crate::special_fn::jacobi::jacobi;

/// One node of a one-dimensional quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNode {
    pub node: f64,
    pub weight: f64,
}

/// Gauss–Jacobi rule with `n_nodes` points for the weight
/// `(1-t)^alpha (1+t)^beta` on `[-1, 1]`.
///
/// Nodes are returned strictly increasing. The rule is exact for polynomials
/// of degree `<= 2 n_nodes - 1`.
///
/// # Panics
/// If `n_nodes == 0` or either exponent is `<= -1`.
pub fn gauss_jacobi_nodes(n_nodes: usize, alpha: f64, beta: f64) -> Vec<QuadNode> {
    assert!(n_nodes >= 1, "a quadrature rule needs at least one node");
    assert!(
        alpha > -1.0 && beta > -1.0,
        "Jacobi weight must be integrable"
    );

    let n = n_nodes;
    let ab = alpha + beta;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    diag[0] = (beta - alpha) / (ab + 2.0);
    for (k, d) in diag.iter_mut().enumerate().skip(1) {
        let s = 2.0 * k as f64 + ab;
        *d = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        // k = 1 has the factor (k + α + β) cancelled against (s - 1).
        let b = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / (s * s * (s + 1.0))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off[k - 1] = b.sqrt();
    }

    let mut first = vec![0.0; n];
    first[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut off, &mut first);

    let mu0 = ((ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(ab + 2.0))
    .exp();

    let mut rule: Vec<QuadNode> = diag
        .iter()
        .zip(&first)
        .map(|(&node, &v)| QuadNode {
            node: polish(node, alpha, beta, n),
            weight: mu0 * v * v,
        })
        .collect();
    rule.sort_by(|a, b| a.node.total_cmp(&b.node));
    rule
}

fn polish(mut x: f64, alpha: f64, beta: f64, n: usize) -> f64 {
    for _ in 0..3 {
        let p = jacobi(alpha, beta, n, x);
        let dp = 0.5 * (n as f64 + alpha + beta + 1.0) * jacobi(alpha + 1.0, beta + 1.0, n - 1, x);
        if dp == 0.0 || !dp.is_finite() {
            break;
        }
        let step = p / dp;
        let next = x - step;
        if !(next > -1.0 && next < 1.0) {
            break;
        }
        x = next;
        if step.abs() <= f64::EPSILON * x.abs().max(1e-3) {
            break;
        }
    }
    x
}

/// Implicit QL iteration on a symmetric tridiagonal matrix. On return `diag`
/// holds the eigenvalues and `first` the first components of the
/// corresponding normalized eigenvectors (when it starts as `e_1`).
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64], first: &mut [f64]) {
    let n = diag.len();
    if n == 1 {
        return;
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() + dd == dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 100, "tridiagonal QL failed to converge");

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;

                let fz = first[i + 1];
                first[i + 1] = s * first[i] + c * fz;
                first[i] = c * first[i] - s * fz;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `I_j = ∫_{-1}^{1} t^j (1-t)^a dt` from integration by parts:
    /// `(j+a+1) I_j = j I_{j-1} + (-1)^j 2^(a+1)`.
    fn moment_minus(j: usize, a: f64) -> f64 {
        let edge = 2f64.powf(a + 1.0);
        let mut m = edge / (a + 1.0);
        for k in 1..=j {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            m = (k as f64 * m + sign * edge) / (k as f64 + a + 1.0);
        }
        m
    }

    #[test]
    fn single_node_legendre() {
        let r = gauss_jacobi_nodes(1, 0.0, 0.0);
        assert_eq!(r.len(), 1);
        assert!(r[0].node.abs() < 1e-15);
        assert!((r[0].weight - 2.0).abs() < 1e-14);
    }

    #[test]
    fn total_mass() {
        for &g in &[-0.9, -0.5, 0.0, 1.0, 2.5] {
            let r = gauss_jacobi_nodes(12, g, 0.0);
            let s: f64 = r.iter().map(|q| q.weight).sum();
            let e = 2f64.powf(g + 1.0) / (g + 1.0);
            assert!((s - e).abs() <= 1e-13 * e, "g={g}: {s} vs {e}");
        }
    }

    #[test]
    fn cubic_exact_with_two_nodes() {
        let r = gauss_jacobi_nodes(2, 1.0, 0.0);
        for j in 0..=3 {
            let q: f64 = r.iter().map(|n| n.weight * n.node.powi(j as i32)).sum();
            let e = moment_minus(j, 1.0);
            assert!((q - e).abs() <= 1e-13 * e.abs().max(1.0), "j={j}");
        }
    }

    #[test]
    fn exactness_up_to_degree_2n_minus_1() {
        for &n in &[1usize, 3, 8, 20, 64] {
            for &a in &[-0.9, -0.5, 0.0, 1.0, 2.5] {
                let r = gauss_jacobi_nodes(n, a, 0.0);
                for j in 0..2 * n {
                    let q: f64 = r.iter().map(|x| x.weight * x.node.powi(j as i32)).sum();
                    let e = moment_minus(j, a);
                    let scale = 2f64.powf(a + 1.0) / (a + 1.0);
                    assert!(
                        (q - e).abs() <= 1e-12 * scale,
                        "n={n} a={a} j={j}: {q} vs {e}"
                    );
                }
            }
        }
    }

    #[test]
    fn nodes_sorted_interior_and_weights_positive() {
        let r = gauss_jacobi_nodes(40, 2.5, 3.0);
        for w in r.windows(2) {
            assert!(w[0].node < w[1].node);
        }
        assert!(r
            .iter()
            .all(|q| q.node > -1.0 && q.node < 1.0 && q.weight > 0.0));
    }

    #[test]
    fn nodes_are_jacobi_zeros() {
        let r = gauss_jacobi_nodes(10, 0.5, 2.0);
        for q in &r {
            assert!(jacobi(0.5, 2.0, 10, q.node).abs() < 1e-10);
        }
    }
}
