//! Orders of starlikeness: the threshold root r0, the function A, orders of
//! (strong, spiral) starlikeness, the quasiconformal constant, and the grid
//! checks for disk containment of w G'/G and the atomic-measure bounds.
//!
//! Run with: cargo run --example starlike_orders

use num_complex::Complex64;
use resolvent_lab::geometry::{
    a_of_r, check_lemma_bounds, check_starlike_disk, find_r0, orders, r0_closed_form,
    spirallike_order,
};
use resolvent_lab::grid::SamplingGrid;
use resolvent_lab::presets;
use resolvent_lab::resolvent::SolverConfig;

fn main() {
    println!("r0 (bisection)   = {:.12}", find_r0());
    println!("r0 (closed form) = {:.12}", r0_closed_form());
    for x in [6.0, 10.0, 50.0, 500.0] {
        println!("A({x:>5}) = {:.9}", a_of_r(x).unwrap());
    }

    let q = Complex64::new(1.0, 0.0);
    let rep = orders(q, 10.0).unwrap();
    println!("\norders at q = 1, r = 10:");
    println!("  starlike order        = {:.9}", rep.alpha_star);
    println!("  strongly starlike     = {:.9}", rep.beta_star);
    println!("  gamma_r               = {:.9}", rep.gamma_r);
    println!("  squeezing kappa       = {:.9}", rep.kappa.unwrap());
    println!("  qc dilatation bound   = {:.9}", rep.k_qc);
    println!(
        "  analyticity sector    = center {:.6}, half-angle {:.6}",
        rep.sector_center, rep.sector_half_angle
    );

    let theta = (0.6f64).acos();
    let (alpha, estimate) = spirallike_order(q, 10.0, theta).unwrap();
    println!(
        "\nspirallike order at theta = arccos(0.6): {alpha:.9} (lower estimate {:.9})",
        estimate.unwrap()
    );

    // Disk containment of S = w G'/G over a grid, for both bundled families
    // and an atomic-measure generator.
    let cfg = SolverConfig::default();
    let grid = SamplingGrid::new(32, 128, 1.0 - 1e-3).unwrap();
    for (label, g) in [
        ("linear".to_string(), presets::linear(q)),
        ("koebe_flow".to_string(), presets::koebe_flow()),
    ] {
        let report = check_starlike_disk(&g, 10.0, &grid, &cfg).unwrap();
        println!(
            "\nstarlike disk check ({label}): pass = {}, worst margin = {:.3e}",
            report.pass, report.worst_margin
        );
        println!(
            "  min Re S = {:.6} (order {:.6}), max |arg S| = {:.6} (arcsin A = {:.6})",
            report.param_f64("min_re_s").unwrap(),
            report.param_f64("alpha_star").unwrap(),
            report.param_f64("max_abs_arg_s").unwrap(),
            report.param_f64("a").unwrap().asin(),
        );
    }

    for (label, g) in presets::atomic_fixtures() {
        let r = 10.0 / g.q().re;
        let report = check_lemma_bounds(&g, r, &grid).unwrap();
        println!(
            "measure bounds ({label}): pass = {}, worst margin = {:.3e}",
            report.pass, report.worst_margin
        );
    }
}
