//! Emit the images of circles under G_r as CSV and SVG (raw polyline markup,
//! no plotting dependency), with the distortion radii overlaid for visual
//! inspection of the inclusions.
//!
//! Run with: cargo run --example image_curves
//! Output lands in target/image_curves/.

use resolvent_lab::presets;
use resolvent_lab::render::{curves_to_csv, curves_to_svg, reference_circles, render_image_curves};
use resolvent_lab::resolvent::SolverConfig;

fn main() -> resolvent_lab::Result<()> {
    let g = presets::koebe_flow();
    let r = 10.0;
    let cfg = SolverConfig::default();

    let curves = render_image_curves(&g, r, &[0.5, 0.9, 0.99, 1.5, 2.0], 256, &cfg)?;
    let refs = reference_circles(g.q(), r);

    for curve in &curves {
        let max = curve.points.iter().map(|p| p.norm()).fold(0.0, f64::max);
        println!("image of {}: max modulus {:.6}", curve.label, max);
    }
    for rc in &refs {
        println!("reference circle {} at radius {:.6}", rc.label, rc.radius);
    }

    let dir = std::path::Path::new("target/image_curves");
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("curves.csv"), curves_to_csv(&curves))?;
    std::fs::write(dir.join("curves.svg"), curves_to_svg(&curves, &refs))?;
    println!(
        "\nwrote {}/curves.csv and {}/curves.svg",
        dir.display(),
        dir.display()
    );
    Ok(())
}
