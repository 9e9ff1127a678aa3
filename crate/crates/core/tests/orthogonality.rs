mod common;

use common::{bivariate, disc_point, norm_oracle, radial_integral, rng, GAMMAS};
use polybergman::disc_poly::{eval_explicit_sum, norm_const};
use polybergman::spaces::inner_product;
use polybergman::{Complex64, Orders, QuadRule, SampledFunction, WeightParam};

#[test]
fn radial_oracle_integrates_moments() {
    for &g in &GAMMAS {
        let mass = radial_integral(g, |_| 1.0);
        assert!(
            (mass - std::f64::consts::PI / (g + 1.0)).abs() < 1e-13,
            "{g}: {mass}"
        );
    }
}

#[test]
fn bivariate_oracle_matches_library_on_the_diagonal() {
    let mut r = rng(11);
    for &g in &GAMMAS {
        let w = WeightParam::new(g).unwrap();
        for (m, n) in [(0, 0), (3, 1), (2, 4), (5, 5)] {
            let z = disc_point(&mut r, 0.95);
            let a = bivariate(g, m, n, z, z.conj());
            let b = eval_explicit_sum(w, Orders::new(m, n), z);
            assert!((a - b).norm() < 1e-13);
        }
    }
}

#[test]
fn norm_constants_match_direct_integration() {
    for &g in &GAMMAS {
        let w = WeightParam::new(g).unwrap();
        for m in 0..=8 {
            for n in 0..=4 {
                let d = norm_const(w, Orders::new(m, n));
                let oracle = norm_oracle(g, m, n);
                assert!(
                    (d - oracle).abs() < 1e-11 * d,
                    "gamma={g} m={m} n={n}: {d} vs {oracle}"
                );
            }
        }
    }
}

#[test]
fn gram_matrix_is_diagonal() {
    for &g in &GAMMAS {
        let w = WeightParam::new(g).unwrap();
        let q = QuadRule::new(w, 16, 24).unwrap();
        let basis: Vec<(Orders, SampledFunction)> = (0..=6)
            .flat_map(|m| (0..=3).map(move |n| Orders::new(m, n)))
            .map(|o| (o, SampledFunction::disc_polynomial(w, o)))
            .collect();
        for (oa, fa) in &basis {
            for (ob, fb) in &basis {
                let v = inner_product(fa, fb, &q);
                let expected = if oa == ob { norm_const(w, *oa) } else { 0.0 };
                assert!(
                    (v - Complex64::new(expected, 0.0)).norm() <= 1e-10 * expected.max(1.0),
                    "gamma={g} {oa:?} {ob:?}: {v}"
                );
            }
        }
    }
}
