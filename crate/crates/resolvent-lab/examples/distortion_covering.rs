//! Distortion and covering radii: the class radii (R, R1, R2), the resolvent
//! radii (rho, rho1, rho2, rho3), analytic continuation past the unit circle,
//! and a brute-force injectivity probe.
//!
//! Run with: cargo run --example distortion_covering

use num_complex::Complex64;
use resolvent_lab::geometry::{radii_general, radii_resolvent, ClassParams};
use resolvent_lab::presets;
use resolvent_lab::resolvent::{resolve_continued, univalence_probe, SolverConfig};

fn main() {
    // Radii for the class with alpha = beta = 1: univalent in |w| < 1/2,
    // image covers |w| < 1/(2+sqrt(3)).
    let class = ClassParams::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)).unwrap();
    let rep = radii_general(&class).unwrap();
    println!("class alpha = beta = 1 ({}):", rep.branch.as_str());
    println!("  R  = {:.12}", rep.r_univ);
    println!("  R1 = {:.12}", rep.r1);
    println!(
        "  R2 = {:.12}  (1/(2+sqrt 3) = {:.12})",
        rep.r2,
        1.0 / (2.0 + 3.0f64.sqrt())
    );
    println!("  R2_alt = {:.12}", rep.r2_alt);

    // Resolvent radii for q = 1, r = 4: the resolvent extends univalently to
    // |w| < rho ~ 1.202 and maps it into |w| < rho1 ~ 0.633.
    let q = Complex64::new(1.0, 0.0);
    let r = 4.0;
    let (rho, rho1, rho2, rho3) = radii_resolvent(q, r).unwrap();
    println!("\nresolvent radii at q = 1, r = 4:");
    println!("  rho  = {rho:.12}  (> 1: continuation past the unit circle)");
    println!("  rho1 = {rho1:.12}");
    println!("  rho2 = {rho2:.12}");
    println!("  rho3 = {rho3:.12}");

    // Evaluate the continued resolvent at |w| = 1.1 > 1.
    let cfg = SolverConfig::default();
    let g = presets::koebe_flow();
    let w = Complex64::new(-1.1, 0.0);
    let eval = resolve_continued(&g, r, w, &cfg).unwrap();
    println!("\ncontinued Koebe-flow resolvent at w = {w} (rho = {rho:.4}):");
    println!(
        "  G_r(w) = {}  (|G| = {:.6} <= rho1)",
        eval.value,
        eval.value.norm()
    );
    println!("  residual = {:.2e}", eval.residual);

    // Injectivity probe on a 12 x 12 grid in the extended disk.
    let report = univalence_probe(&g, r, 0.99 * rho, 12, &cfg).unwrap();
    println!(
        "\nunivalence probe on |w| <= 0.99 rho: pass = {}, min |dG|/|dw| = {:.6}",
        report.pass, report.worst_margin
    );
}
