//! Shared independent oracles for the acceptance suite. Everything here is
//! closed-form arithmetic, deliberately separate from the solver paths it
//! checks.

use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Numerically stable roots of `a z^2 + b z + c = 0` (complex coefficients),
/// returned as (large-magnitude, small-magnitude).
fn quadratic_roots(a: Complex64, b: Complex64, cc: Complex64) -> (Complex64, Complex64) {
    let mut s = (b * b - 4.0 * a * cc).sqrt();
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let big = -(b + s) / 2.0;
    (big / a, cc / big)
}

/// Resolvent of the half-plane extremal generator
/// `f(z) = z (q + conj(q) z)/(1 - z)`: the functional equation collapses to
/// `(r conj(q) - 1) z^2 + (1 + r q + w) z - w = 0`; the resolvent is the root
/// reachable from `z = 0`.
pub fn half_plane_resolvent_oracle(q: Complex64, r: f64, w: Complex64) -> Complex64 {
    let a = r * q.conj() - 1.0;
    let b = 1.0 + r * q + w;
    let cc = -w;
    if a.norm() < 1e-12 {
        return -cc / b;
    }
    let (big, small) = quadratic_roots(a, b, cc);
    if big.norm() < small.norm() {
        big
    } else {
        small
    }
}

/// Resolvent of the linear generator `f(z) = q z`.
pub fn linear_resolvent_oracle(q: Complex64, r: f64, w: Complex64) -> Complex64 {
    w / (1.0 + r * q)
}

/// Inner root of the level-set relation `u/(1+u)^2 = value` governing the
/// half-plane flow with `q = 1`; the two roots multiply to 1, so exactly one
/// lies inside the unit disk.
pub fn koebe_level_root(value: Complex64) -> Complex64 {
    let (r1, r2) = quadratic_roots(value, 2.0 * value - 1.0, value);
    if r1.norm() < 1.0 {
        r1
    } else {
        r2
    }
}

/// Deterministic polar product grid (radius-major), for test point sets that
/// are not the library's sampling grid.
pub fn polar_grid(n_radii: usize, n_angles: usize, outer: f64) -> Vec<Complex64> {
    let mut points = Vec::with_capacity(n_radii * n_angles);
    for j in 0..n_radii {
        let r = outer * (j + 1) as f64 / n_radii as f64;
        for k in 0..n_angles {
            let phi = std::f64::consts::TAU * k as f64 / n_angles as f64;
            points.push(Complex64::from_polar(r, phi));
        }
    }
    points
}
