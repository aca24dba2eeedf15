//! Pointwise resolvent evaluation: solve G_r + r f(G_r) = Id at single
//! targets, inspect solver diagnostics, and confirm the round trip.
//!
//! Run with: cargo run --example resolve_pointwise

use num_complex::Complex64;
use resolvent_lab::generator::generator_eval;
use resolvent_lab::presets;
use resolvent_lab::resolvent::{resolve, SolverConfig};

fn main() {
    let cfg = SolverConfig::default();

    // Linear generator f(z) = z: the resolvent is w / (1 + r).
    let linear = presets::linear(Complex64::new(1.0, 0.0));
    let eval = resolve(&linear, 3.0, Complex64::new(0.8, 0.0), &cfg).unwrap();
    println!("linear f, r = 3, w = 0.8:");
    println!("  G_r(w)     = {}", eval.value);
    println!("  G_r'(w)    = {}", eval.d1);
    println!(
        "  iterations = {}, residual = {:.2e}",
        eval.iterations, eval.residual
    );

    // Half-plane extremal generator f(z) = z (1+z)/(1-z).
    let koebe = presets::koebe_flow();
    let w = Complex64::new(0.5, 0.0);
    let eval = resolve(&koebe, 1.0, w, &cfg).unwrap();
    println!("\nKoebe-flow f, r = 1, w = 0.5:");
    println!("  G_r(w)     = {}  (exact: 0.2)", eval.value);
    println!("  G_r'(w)    = {}", eval.d1);
    println!("  G_r''(w)   = {}", eval.d2);

    // Round trip: w = z + r f(z) must come back to z.
    let z = Complex64::new(-0.35, 0.2);
    let r = 2.0;
    let (f, _) = generator_eval(&koebe, z).unwrap();
    let target = z + r * f;
    let back = resolve(&koebe, r, target, &cfg).unwrap().value;
    println!("\nround trip at z = {z}, r = {r}:");
    println!("  z + r f(z) = {target}");
    println!(
        "  G_r(...)   = {back}  (|error| = {:.2e})",
        (back - z).norm()
    );
}
