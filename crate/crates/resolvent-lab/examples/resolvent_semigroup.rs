//! Resolvents as generators: every G_r generates a semigroup of its own.
//! This example runs the associated checks: the half-plane bound for
//! (1+rq) G_r(z)/z, the squeezing rate kappa(r) of the flow dv/dt = -G_r(v),
//! sector survival, the uniform image bound, and the convergence of the
//! normalized resolvents to the identity.
//!
//! Run with: cargo run --example resolvent_semigroup

use num_complex::Complex64;
use resolvent_lab::grid::SamplingGrid;
use resolvent_lab::presets;
use resolvent_lab::resolvent::SolverConfig;
use resolvent_lab::semigroup::{
    check_normalized_convergence, check_resolvent_sector, check_uniform_bound,
    resolvent_generator_suite,
};

fn main() {
    let cfg = SolverConfig::default();
    let grid = SamplingGrid::new(16, 32, 1.0 - 1e-3).unwrap();
    let g = presets::koebe_flow();

    for r in [6.0, 10.0, 100.0] {
        let report = resolvent_generator_suite(&g, r, &grid, &cfg).unwrap();
        println!(
            "resolvent-generator suite r = {r}: pass = {}, kappa = {:?}",
            report.pass,
            report.param_f64("kappa")
        );
        println!(
            "  margins: half-plane power {:.3e}, kappa bound {:.3e}, real-q bound {:.3e}, flow {:.3e}",
            report.param_f64("margin_power").unwrap(),
            report.param_f64("margin_kappa").unwrap(),
            report.param_f64("margin_real_q").unwrap(),
            report.param_f64("margin_flow").unwrap()
        );
    }

    // For strongly complex q the kappa formula has no critical point and the
    // squeezing items are skipped; the sector data is still defined.
    let complex_q = Complex64::new(1.0, 1.0);
    let gc = presets::koebe_flow_for(complex_q);
    let report = resolvent_generator_suite(&gc, 10.0, &grid, &cfg).unwrap();
    println!(
        "\nq = 1+i, r = 10: pass = {}, kappa defined = {}",
        report.pass,
        report.param_f64("kappa").is_some()
    );

    let report =
        check_resolvent_sector(&gc, 10.0, Complex64::new(0.6, 0.2), 20.0, 5, &cfg).unwrap();
    println!(
        "sector survival (q = 1+i, r = 10): pass = {}, center {:.4}, half-angle {:.4}",
        report.pass,
        report.param_f64("center_arg").unwrap(),
        report.param_f64("half_angle").unwrap()
    );

    let report = check_uniform_bound(&g, &[3.0, 10.0, 100.0], &grid, &cfg).unwrap();
    println!(
        "\nuniform bound |G_r| <= 3/(1 + r Re q): pass = {}",
        report.pass
    );
    for i in 0..3 {
        println!(
            "  r = {:>5}: max |G_r| = {:.6} vs bound {:.6}",
            report.param_f64(&format!("r_{i}")).unwrap(),
            report.param_f64(&format!("max_abs_{i}")).unwrap(),
            report.param_f64(&format!("bound_{i}")).unwrap()
        );
    }

    let report =
        check_normalized_convergence(&g, &[10.0, 100.0, 1000.0, 10000.0], 0.9, &cfg).unwrap();
    println!(
        "\nnormalized resolvents (1 + r q) G_r -> Id: pass = {}",
        report.pass
    );
    for i in 0..4 {
        println!(
            "  r = {:>6}: max |(1+rq) G_r(z) - z| = {:.6e}",
            report.param_f64(&format!("r_{i}")).unwrap(),
            report.param_f64(&format!("d_{i}")).unwrap()
        );
    }
}
