//! Analytic extension in complex time: integrate du/ds = -e^{i phi} f(u)
//! along rays and watch which directions keep the trajectory in the disk.
//! For f(z) = q z with q = e^{i pi/4} the closed form |u| = |z| e^{-s cos(phi + pi/4)}
//! makes the admissible directions explicit: survival iff cos(phi + pi/4) > 0.
//!
//! Run with: cargo run --example complex_time_rays

use num_complex::Complex64;
use resolvent_lab::presets;
use resolvent_lab::semigroup::{check_sector, evolve_ode, SectorSpec};

fn main() {
    let q = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let g = presets::linear(q);
    let z = Complex64::new(0.5, 0.0);
    let pi = std::f64::consts::PI;

    println!("linear generator with q = e^(i pi/4), z = 0.5");
    println!("ray phase phi      outcome (s_end = 20)");
    for phi in [-pi / 2.0 + 0.02, 0.0, pi / 4.0 - 0.02, pi / 4.0 + 0.1] {
        let pts = evolve_ode(&g, z, &[20.0], phi).unwrap();
        let last = pts.last().unwrap();
        if last.escaped {
            println!("  {phi:>9.4}      escaped at s = {:.3}", last.t);
        } else {
            println!("  {phi:>9.4}      |u(20)| = {:.6}", last.u.norm());
        }
    }

    // The admissible sector for this generator is arg t in (-pi/2, pi/4):
    // rays strictly inside survive, a ray 0.1 past the sharp edge escapes.
    let inside = SectorSpec {
        center_arg: -pi / 8.0,
        half_angle: 3.0 * pi / 8.0,
    };
    let report = check_sector(&g, z, &inside, 20.0, 7).unwrap();
    println!(
        "\nsector check inside (-pi/2, pi/4): pass = {} ({} rays)",
        report.pass,
        report.param("rays").is_some() as usize * 7
    );
    println!(
        "  empirical arg p range: [{:.6}, {:.6}] (constant pi/4 = {:.6})",
        report.param_f64("inf_arg_p").unwrap(),
        report.param_f64("sup_arg_p").unwrap(),
        pi / 4.0
    );

    let outside = SectorSpec {
        center_arg: pi / 4.0 + 0.1,
        half_angle: 0.03,
    };
    let report = check_sector(&g, z, &outside, 20.0, 1).unwrap();
    println!(
        "sector check on a ray 0.1 past the edge: pass = {} (escape expected)",
        report.pass
    );
}
