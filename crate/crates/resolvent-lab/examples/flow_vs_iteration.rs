//! The semigroup flow two ways: adaptive integration of du/dt + f(u) = 0
//! versus the iterated-resolvent product, plus the squeezing estimate
//! |u(t,z)| <= |z| e^{-kappa t}.
//!
//! Run with: cargo run --example flow_vs_iteration

use num_complex::Complex64;
use resolvent_lab::grid::SamplingGrid;
use resolvent_lab::presets;
use resolvent_lab::resolvent::SolverConfig;
use resolvent_lab::semigroup::{
    check_squeezing, evolve_expo, evolve_ode, squeezing_coefficient, trajectory_csv,
    DEFAULT_SQUEEZE_TIMES,
};

fn main() {
    let g = presets::koebe_flow();
    let z = Complex64::new(0.5, 0.0);

    // Trajectory of the flow at a handful of checkpoints.
    let times = [0.25, 0.5, 1.0, 2.0, 5.0];
    let points = evolve_ode(&g, z, &times, 0.0).unwrap();
    println!("flow of the Koebe-flow generator from z = 0.5:");
    for p in &points {
        println!(
            "  t = {:>5}: u = {} (local error {:.1e})",
            p.t, p.u, p.local_error
        );
    }
    print!("\ntrajectory CSV:\n{}", trajectory_csv(&points, 0.0));

    // The iterated resolvent converges to the flow at first order in 1/n.
    let cfg = SolverConfig::default();
    let reference = evolve_ode(&g, z, &[1.0], 0.0).unwrap()[0].u;
    println!("iterated resolvent vs flow at t = 1 (reference u = {reference}):");
    let mut n = 16;
    while n <= 4096 {
        let v = evolve_expo(&g, z, 1.0, n, &cfg).unwrap();
        println!("  n = {n:>5}: |error| = {:.3e}", (v - reference).norm());
        n *= 4;
    }

    // Squeezing: kappa is the boundary-adjacent minimum of Re p.
    let linear = presets::linear(Complex64::new(1.0, 0.0));
    let kappa = squeezing_coefficient(&linear);
    let grid = SamplingGrid::new(4, 8, 0.9).unwrap();
    let report = check_squeezing(&linear, &grid, &DEFAULT_SQUEEZE_TIMES, kappa).unwrap();
    println!(
        "\nsqueezing for the linear generator (kappa = {kappa}):\n  pass = {}, margins in [{:.2e}, {:.2e}] (tight: the bound is an equality)",
        report.pass,
        report.worst_margin,
        report.param_f64("max_margin").unwrap()
    );
}
