//! Floating-point diagnostics: complex root finding for cross-validation.
//!
//! Nothing here participates in an exact decision; callers treat results as
//! advisory and flag near-tolerance cases inconclusive.

use num_complex::Complex64;

/// All complex roots of the polynomial with the given ascending coefficients,
/// by Durand-Kerner iteration with a deterministic start configuration.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| *x == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();

    // Cauchy-style radius.
    let radius = 1.0
        + monic[..n]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));

    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32 + 1) * radius / seed.norm())
        .collect();

    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &x in monic.iter().rev() {
            acc = acc * z + Complex64::new(x, 0.0);
        }
        acc
    };

    for _ in 0..200 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 * radius {
            break;
        }
    }
    roots
}
