//! Image curves of circles under the resolvent, emitted as CSV and as raw SVG
//! polyline markup (no plotting dependency, bit-stable output).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::geometry::radii_resolvent;
use crate::resolvent::{resolve_auto, SolverConfig};

/// The image under `G_r` of one circle `|z| = c`, as an ordered closed sweep.
#[derive(Debug, Clone)]
pub struct ImageCurve {
    pub label: String,
    /// Radius of the source circle.
    pub source_radius: f64,
    /// `G_r(c e^{i phi_k})`, one point per angle; the sweep closes onto the
    /// first point.
    pub points: Vec<Complex64>,
}

/// Reference circle overlaid on the plot.
#[derive(Debug, Clone)]
pub struct ReferenceCircle {
    pub label: String,
    pub radius: f64,
}

/// Evaluate the image curves of `|z| = c` for each listed radius.
///
/// Radii must stay below `rho(r)` when `r Re q > 2` (below 1 otherwise);
/// violations are rejected before any solving.
pub fn render_image_curves(
    g: &GeneratorSpec,
    r: f64,
    circle_radii: &[f64],
    angles: usize,
    cfg: &SolverConfig,
) -> Result<Vec<ImageCurve>> {
    if angles < 3 {
        return Err(Error::invalid(
            "render_image_curves",
            "need at least 3 angles",
        ));
    }
    let q = g.q();
    let limit = if r * q.re > 2.0 {
        radii_resolvent(q, r)?.0 * (1.0 - 1e-6)
    } else {
        1.0
    };
    for &c in circle_radii {
        if !(c > 0.0 && c < limit) {
            return Err(Error::out_of_range(
                "render_image_curves",
                format!("circle radius {c} must lie in (0, {limit})"),
            ));
        }
    }
    let mut curves = Vec::with_capacity(circle_radii.len());
    for &c in circle_radii {
        let mut points = Vec::with_capacity(angles);
        for k in 0..angles {
            let w = Complex64::from_polar(c, std::f64::consts::TAU * k as f64 / angles as f64);
            points.push(resolve_auto(g, r, w, cfg)?.value);
        }
        curves.push(ImageCurve {
            label: format!("|z|={c}"),
            source_radius: c,
            points,
        });
    }
    Ok(curves)
}

/// Reference circles relevant to the distortion picture: `rho1`, `rho2`,
/// `rho3`, and the uniform bound `3/(1 + r Re q)` (those that apply).
pub fn reference_circles(q: Complex64, r: f64) -> Vec<ReferenceCircle> {
    let mut refs = Vec::new();
    if r * q.re > 2.0 {
        if let Ok((_, rho1, rho2, rho3)) = radii_resolvent(q, r) {
            refs.push(ReferenceCircle {
                label: "rho1".into(),
                radius: rho1,
            });
            refs.push(ReferenceCircle {
                label: "rho2".into(),
                radius: rho2,
            });
            refs.push(ReferenceCircle {
                label: "rho3".into(),
                radius: rho3,
            });
        }
        refs.push(ReferenceCircle {
            label: "3/(1+r Re q)".into(),
            radius: 3.0 / (1.0 + r * q.re),
        });
    } else if let Ok(rho3) = crate::geometry::covering_radius_rho3(q, r) {
        refs.push(ReferenceCircle {
            label: "rho3".into(),
            radius: rho3,
        });
    }
    refs
}

/// CSV rows `label, angle_index, re, im` for every curve point.
pub fn curves_to_csv(curves: &[ImageCurve]) -> String {
    let mut out = String::from("label,angle_index,re,im\n");
    for curve in curves {
        for (k, p) in curve.points.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e}\n",
                curve.label, k, p.re, p.im
            ));
        }
    }
    out
}

fn fmt6(x: f64) -> String {
    format!("{:.6}", x)
}

/// Raw SVG with one polyline per curve and annotated reference circles.
pub fn curves_to_svg(curves: &[ImageCurve], references: &[ReferenceCircle]) -> String {
    const SIZE: f64 = 720.0;
    let mut extent = 1e-9f64;
    for c in curves {
        for p in &c.points {
            extent = extent.max(p.norm());
        }
    }
    for r in references {
        extent = extent.max(r.radius);
    }
    extent *= 1.1;
    let map = |z: Complex64| -> (f64, f64) {
        (
            SIZE / 2.0 * (1.0 + z.re / extent),
            SIZE / 2.0 * (1.0 - z.im / extent),
        )
    };
    const PALETTE: [&str; 6] = [
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
    ];

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        SIZE
    ));
    svg.push_str(&format!(
        "  <rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n",
        SIZE
    ));
    // axes
    svg.push_str(&format!(
        "  <line x1=\"0\" y1=\"{h}\" x2=\"{s}\" y2=\"{h}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
        h = fmt6(SIZE / 2.0),
        s = SIZE
    ));
    svg.push_str(&format!(
        "  <line x1=\"{h}\" y1=\"0\" x2=\"{h}\" y2=\"{s}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
        h = fmt6(SIZE / 2.0),
        s = SIZE
    ));
    for (i, rc) in references.iter().enumerate() {
        let rad = SIZE / 2.0 * rc.radius / extent;
        svg.push_str(&format!(
            "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n",
            c = fmt6(SIZE / 2.0),
            r = fmt6(rad)
        ));
        svg.push_str(&format!(
            "  <text x=\"{x}\" y=\"{y}\" font-size=\"12\" fill=\"#555555\">{label}</text>\n",
            x = fmt6(SIZE / 2.0 + rad * std::f64::consts::FRAC_1_SQRT_2 + 4.0),
            y = fmt6(SIZE / 2.0 - rad * std::f64::consts::FRAC_1_SQRT_2 - 4.0 - 12.0 * i as f64),
            label = rc.label
        ));
    }
    for (i, curve) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut pts = String::new();
        for p in curve.points.iter().chain(curve.points.first()) {
            let (x, y) = map(*p);
            pts.push_str(&format!("{},{} ", fmt6(x), fmt6(y)));
        }
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            pts.trim_end(),
            color
        ));
        svg.push_str(&format!(
            "  <text x=\"8\" y=\"{y}\" font-size=\"12\" fill=\"{color}\">{label}</text>\n",
            y = 16 + 14 * i,
            label = curve.label
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
