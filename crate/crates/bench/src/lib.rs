//! Fixed inputs shared by the benchmarks.

use polybergman::{Complex64, WeightParam};

pub const GAMMAS: [f64; 3] = [-0.5, 1.0, 2.5];

pub fn weight(g: f64) -> WeightParam {
    WeightParam::new(g).expect("benchmark weights are valid")
}

/// A fixed spread of interior points.
pub fn points(count: usize, rmax: f64) -> Vec<Complex64> {
    (0..count)
        .map(|i| {
            let t = (i as f64 + 0.5) / count as f64;
            Complex64::from_polar(rmax * t.sqrt(), 2.399_963_229_728_653 * i as f64)
        })
        .collect()
}
