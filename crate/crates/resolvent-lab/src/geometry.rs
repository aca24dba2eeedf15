//! Closed-form radii and order formulas, plus grid-based geometric predicates
//! (starlike disk containment, hyperbolic convexity, measure bounds,
//! subordination-class membership).

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::{GeneratorSpec, HerglotzData};
use crate::grid::SamplingGrid;
use crate::report::{CheckReport, ParamValue};
use crate::resolvent::{resolve, SolverConfig};

/// `A(r) = 6 r (1 + r) / ((1 + r)^3 - 3 (5 r - 1))`.
///
/// The rational expression has a pole at `r = 2`; on `(r0, inf)` it decreases
/// strictly from 1 toward 0.
pub fn a_of_r(r: f64) -> Result<f64> {
    let num = 6.0 * r * (1.0 + r);
    let den = (1.0 + r).powi(3) - 3.0 * (5.0 * r - 1.0);
    if den.abs() <= 1e-12 * (1.0 + r.abs()).powi(3) {
        return Err(Error::PoleAtR { r });
    }
    Ok(num / den)
}

/// Largest root of `A(r) = 1` in closed form:
/// `1 + 2 sqrt(7) cos(arctan(3 sqrt(31) / 8) / 3)`.
pub fn r0_closed_form() -> f64 {
    1.0 + 2.0 * 7.0f64.sqrt() * ((3.0 * 31.0f64.sqrt() / 8.0).atan() / 3.0).cos()
}

/// Largest root of `A(r) = 1`, by safeguarded bisection on `[5, 7]` to 1e-12.
///
/// The closed form is evaluated alongside as a cross-check; the two routes
/// agree within 1e-9 (asserted in tests).
pub fn find_r0() -> f64 {
    let mut lo = 5.0f64; // A(5) = 1.25 > 1
    let mut hi = 7.0f64; // A(7) < 1
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if a_of_r(mid).expect("A has no pole on [5, 7]") > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    debug_assert!((root - r0_closed_form()).abs() <= 1e-9);
    root
}

/// Parameters of the half-plane subordination class: `F(0) = 0`,
/// `F'(0) = beta`, `Re((F(z)/z - beta)/alpha) > -1/2`.
#[derive(Debug, Clone, Copy)]
pub struct ClassParams {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl ClassParams {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        if !((alpha * beta.conj()).re > 0.0) {
            return Err(Error::invalid(
                "ClassParams",
                format!(
                    "Re(alpha conj(beta)) = {} must be positive",
                    (alpha * beta.conj()).re
                ),
            ));
        }
        Ok(ClassParams { alpha, beta })
    }

    /// The class containing the scaled resolvents: `alpha = 2 r Re q`,
    /// `beta = 1 + r q`.
    pub fn for_resolvent(q: Complex64, r: f64) -> Result<Self> {
        ClassParams::new(Complex64::new(2.0 * r * q.re, 0.0), 1.0 + r * q)
    }
}

/// Which case of the univalence-radius formula applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiiBranch {
    /// `Re(beta/alpha) > 3/4`.
    AboveThreeQuarters,
    /// `Re(beta/alpha) <= 3/4`.
    AtMostThreeQuarters,
}

impl RadiiBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            RadiiBranch::AboveThreeQuarters => "Re(beta/alpha) > 3/4",
            RadiiBranch::AtMostThreeQuarters => "Re(beta/alpha) <= 3/4",
        }
    }
}

/// Univalence, distortion, and covering radii for inverses of the
/// subordination class.
#[derive(Debug, Clone, Copy)]
pub struct RadiiReport {
    pub m: f64,
    /// Radius of univalence `R`.
    pub r_univ: f64,
    /// `G(D_R)` is contained in the disk of radius `R1`.
    pub r1: f64,
    /// `G(D_R)` covers the disk of radius `R2`.
    pub r2: f64,
    /// Alternative covering constant `|beta| R / (|beta|^2 + |Re beta| R)`.
    pub r2_alt: f64,
    pub branch: RadiiBranch,
}

/// Radii for the general class: `M = 1 - Re(beta/alpha)`, then
/// `R = |alpha| (1/2 - M)`, `R1 = 1` when `Re(beta/alpha) > 3/4` and
/// `R = |alpha| (1 - sqrt(M))^2`, `R1 = 1/sqrt(M) - 1` otherwise, with
/// `R2 = R R1 / (R1 |beta| + sqrt(R1^2 |beta|^2 - R^2))`.
pub fn radii_general(c: &ClassParams) -> Result<RadiiReport> {
    let ratio = c.beta / c.alpha;
    let m = 1.0 - ratio.re;
    let (r_univ, r1, branch) = if ratio.re > 0.75 {
        (
            c.alpha.norm() * (0.5 - m),
            1.0,
            RadiiBranch::AboveThreeQuarters,
        )
    } else {
        if m < 0.0 {
            return Err(Error::out_of_range(
                "radii_general",
                format!("M = {m} is negative in the sqrt branch"),
            ));
        }
        (
            c.alpha.norm() * (1.0 - m.sqrt()).powi(2),
            1.0 / m.sqrt() - 1.0,
            RadiiBranch::AtMostThreeQuarters,
        )
    };
    let b = c.beta.norm();
    let disc = (r1 * b).powi(2) - r_univ * r_univ;
    let r2 = r_univ * r1 / (r1 * b + disc.max(0.0).sqrt());
    let r2_alt = b * r_univ / (b * b + c.beta.re.abs() * r_univ);
    Ok(RadiiReport {
        m,
        r_univ,
        r1,
        r2,
        r2_alt,
        branch,
    })
}

/// Distortion/covering radii of the resolvent family, for `r Re q > 2`:
/// `rho = (sqrt(2 r Re q) - sqrt(r Re q - 1))^2` (univalent extension radius,
/// `> 1`), `rho1` (image bound), `rho2` (covering of `G_r(D_rho)`), and
/// `rho3` (covering of `G_r(D)`, valid for every `r > 0`).
pub fn radii_resolvent(q: Complex64, r: f64) -> Result<(f64, f64, f64, f64)> {
    let x = r * q.re;
    if !(x > 2.0) {
        return Err(Error::out_of_range(
            "radii_resolvent",
            format!("r Re q = {x} must exceed 2"),
        ));
    }
    let rho = (2.0 * x).sqrt() - (x - 1.0).sqrt();
    let rho = rho * rho;
    let rho1 = (2.0 * x / (x - 1.0)).sqrt() - 1.0;
    let beta = 1.0 + r * q;
    let rho2 = rho / (beta.norm() + (2.0 + x + r * r * q.norm_sqr()).sqrt());
    let rho3 = covering_radius_rho3(q, r)?;
    debug_assert!(rho >= 1.0 - 1e-12);
    Ok((rho, rho1, rho2, rho3))
}

/// `rho3 = 1 / (|1 + r q| + sqrt(|1 + r q|^2 - 1))`: the image of the whole
/// disk under `G_r` covers this disk for any `r > 0`.
pub fn covering_radius_rho3(q: Complex64, r: f64) -> Result<f64> {
    if !(r > 0.0) || !(q.re > 0.0) {
        return Err(Error::out_of_range(
            "covering_radius_rho3",
            format!("needs r > 0 and Re q > 0, got r = {r}, q = {q}"),
        ));
    }
    let b = (1.0 + r * q).norm();
    Ok(1.0 / (b + (b * b - 1.0).max(0.0).sqrt()))
}

/// Orders of starlikeness and related constants of the resolvent `G_r`,
/// valid for `r Re q > r0`.
#[derive(Debug, Clone, Copy)]
pub struct OrderReport {
    /// `A(r Re q)`, in `(0, 1)`.
    pub a: f64,
    /// The threshold root `r0` (constant).
    pub r0: f64,
    /// Order of starlikeness `1 / (1 + A)`.
    pub alpha_star: f64,
    /// Order of strong starlikeness `(2/pi) arcsin A`.
    pub beta_star: f64,
    /// `(1 - A) / (1 + A)`.
    pub gamma_r: f64,
    /// Squeezing coefficient of the semigroup generated by `G_r`. Defined by
    /// `(Re (1+rq)^{1/gamma})^{gamma} / (2^{1-gamma} |1+rq|^2)` only when
    /// `|arg(1+rq)| < pi gamma / 2`; `None` otherwise (the constrained
    /// minimum underlying the formula is unbounded below in that regime).
    pub kappa: Option<f64>,
    /// Quasiconformal dilatation bound, equal to `A`.
    pub k_qc: f64,
    /// `arg(1 + r q)`: center of the analyticity sector.
    pub sector_center: f64,
    /// `pi gamma_r / 2`: half-angle of the analyticity sector.
    pub sector_half_angle: f64,
}

/// Compute the order report for `G_r`. Fractional powers use the principal
/// branch (`arg` in `(-pi, pi]`); since `Re(1 + r q) > 0` no cut is crossed.
pub fn orders(q: Complex64, r: f64) -> Result<OrderReport> {
    let x = r * q.re;
    let r0 = find_r0();
    if !(x > r0) {
        return Err(Error::out_of_range(
            "orders",
            format!("r Re q = {x} must exceed r0 = {r0:.6}"),
        ));
    }
    let a = a_of_r(x)?;
    let gamma = (1.0 - a) / (1.0 + a);
    let beta = 1.0 + r * q;
    let center = beta.arg();
    let half = std::f64::consts::FRAC_PI_2 * gamma;
    // kappa = cos(arg(beta)/gamma)^gamma / (2^{1-gamma} |beta|), an
    // overflow-free rewriting of the defining expression for real exponents.
    let kappa = if center.abs() < half {
        let t = (center / gamma).cos();
        Some(t.powf(gamma) / (2f64.powf(1.0 - gamma) * beta.norm()))
    } else {
        None
    };
    Ok(OrderReport {
        a,
        r0,
        alpha_star: 1.0 / (1.0 + a),
        beta_star: std::f64::consts::FRAC_2_PI * a.asin(),
        gamma_r: gamma,
        kappa,
        k_qc: a,
        sector_center: center,
        sector_half_angle: half,
    })
}

/// Order of `theta`-spirallikeness of `G_r`,
/// `(cos th - A(x)) / ((1 - A(x)^2) cos th)` with `x = r Re q`, together with
/// the elementary lower estimate `x (x cos th - 6) / ((x^2 - 36) cos th)`
/// (available for `x > 6`).
///
/// Requires `x >= 6` and `|theta| <= arccos(6/x)`.
pub fn spirallike_order(q: Complex64, r: f64, theta: f64) -> Result<(f64, Option<f64>)> {
    let x = r * q.re;
    if !(x >= 6.0) {
        return Err(Error::out_of_range(
            "spirallike_order",
            format!("r Re q = {x} must be >= 6"),
        ));
    }
    let max_theta = (6.0 / x).min(1.0).acos();
    if !(theta.abs() <= max_theta + 1e-15) {
        return Err(Error::out_of_range(
            "spirallike_order",
            format!(
                "|theta| = {} exceeds arccos(6/(r Re q)) = {max_theta}",
                theta.abs()
            ),
        ));
    }
    let a = a_of_r(x)?;
    let ct = theta.cos();
    let order = (ct - a) / ((1.0 - a * a) * ct);
    let estimate = if x > 6.0 {
        let e = x * (x * ct - 6.0) / ((x * x - 36.0) * ct);
        debug_assert!(order >= e - 1e-12);
        Some(e)
    } else {
        None
    };
    Ok((order, estimate))
}

/// `w G_r'(w) / G_r(w)`, evaluated through the functional equation as
/// `(1 + r p(G)) / (1 + r (p(G) + G p'(G)))`; returns 1 at `w = 0` by
/// continuity.
pub fn starlike_functional(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    cfg: &SolverConfig,
) -> Result<Complex64> {
    if w.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let eval = resolve(g, r, w, cfg)?;
    let (p, dp) = g.herglotz().eval_raw(eval.value);
    Ok((1.0 + r * p) / (1.0 + r * (p + eval.value * dp)))
}

/// Direct route `w G_r'(w) / G_r(w)` used to cross-check the functional
/// equation path in tests.
pub fn starlike_functional_direct(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    cfg: &SolverConfig,
) -> Result<Complex64> {
    if w.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let eval = resolve(g, r, w, cfg)?;
    Ok(w * eval.d1 / eval.value)
}

const DISK_SLACK: f64 = 1e-9;

/// Disk containment of the starlike functional: for `r Re q > r0` every value
/// of `w G_r'/G_r` lies in the closed disk centered at `1/(1 - A^2)` with
/// radius `A/(1 - A^2)`. Reports the worst signed margin
/// `radius - |S(w) - center|` over the grid.
pub fn check_starlike_disk(
    g: &GeneratorSpec,
    r: f64,
    grid: &SamplingGrid,
    cfg: &SolverConfig,
) -> Result<CheckReport> {
    require_origin_null_point(g, "check_starlike_disk")?;
    let q = g.q();
    let report = orders(q, r)?;
    let a = report.a;
    let center = 1.0 / (1.0 - a * a);
    let radius = a / (1.0 - a * a);
    let points: Vec<Complex64> = grid.points().collect();
    let values: Vec<Complex64> = points
        .par_iter()
        .map(|&w| starlike_functional(g, r, w, cfg))
        .collect::<Result<_>>()?;
    let mut worst = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    let mut min_re = f64::INFINITY;
    let mut max_arg: f64 = 0.0;
    for (w, s) in points.iter().zip(values.iter()) {
        let margin = radius - (s - center).norm();
        if margin < worst {
            worst = margin;
            witness = *w;
        }
        min_re = min_re.min(s.re);
        max_arg = max_arg.max(s.arg().abs());
    }
    Ok(
        CheckReport::new("starlike_disk", worst >= -DISK_SLACK, worst, witness)
            .with_param("q_re", ParamValue::F(q.re))
            .with_param("q_im", ParamValue::F(q.im))
            .with_param("r", ParamValue::F(r))
            .with_param("a", ParamValue::F(a))
            .with_param("center", ParamValue::F(center))
            .with_param("radius", ParamValue::F(radius))
            .with_param("alpha_star", ParamValue::F(report.alpha_star))
            .with_param("beta_star", ParamValue::F(report.beta_star))
            .with_param("min_re_s", ParamValue::F(min_re))
            .with_param("max_abs_arg_s", ParamValue::F(max_arg))
            .with_param("slack", ParamValue::F(DISK_SLACK)),
    )
}

const HYPERBOLIC_SLACK: f64 = 1e-7;

/// Hyperbolic convexity of `G_r`:
/// `Re(w G''/G' + 1 + 2 w conj(G) G' / (1 - |G|^2)) >= 0` on the grid.
pub fn check_hyperbolic_convexity(
    g: &GeneratorSpec,
    r: f64,
    grid: &SamplingGrid,
    cfg: &SolverConfig,
) -> Result<CheckReport> {
    require_origin_null_point(g, "check_hyperbolic_convexity")?;
    let points: Vec<Complex64> = grid.points().collect();
    let margins: Vec<f64> = points
        .par_iter()
        .map(|&w| {
            let eval = resolve(g, r, w, cfg)?;
            let g_val = eval.value;
            let functional = w * eval.d2 / eval.d1
                + 1.0
                + 2.0 * w * g_val.conj() * eval.d1 / (1.0 - g_val.norm_sqr());
            Ok(functional.re)
        })
        .collect::<Result<_>>()?;
    let (worst, witness) = min_with_witness(&margins, &points);
    Ok(CheckReport::new(
        "hyperbolic_convexity",
        worst >= -HYPERBOLIC_SLACK,
        worst,
        witness,
    )
    .with_param("r", ParamValue::F(r))
    .with_param("slack", ParamValue::F(HYPERBOLIC_SLACK)))
}

/// Bounds from the atomic-measure estimate behind the starlike disk theorem:
/// on `|z| <= 3/(1 + r Re q)` and for every atom position `zeta`,
/// `A_r(z, zeta) <= A(r Re q)` and `|r z p'(z)| / Re(1 + r p(z)) <= A(r Re q)`.
///
/// The cutoff circle itself is appended to the sample set so the extremal
/// configuration (a single atom, approached radially) is hit exactly.
pub fn check_lemma_bounds(g: &GeneratorSpec, r: f64, grid: &SamplingGrid) -> Result<CheckReport> {
    require_origin_null_point(g, "check_lemma_bounds")?;
    let atoms = match g.herglotz() {
        HerglotzData::Atomic { atoms, .. } => atoms.clone(),
        HerglotzData::Rational { .. } => return Err(Error::VariantUnsupported),
    };
    let q = g.q();
    let x = r * q.re;
    let r0 = find_r0();
    if !(x > r0) {
        return Err(Error::out_of_range(
            "check_lemma_bounds",
            format!("r Re q = {x} must exceed r0 = {r0:.6}"),
        ));
    }
    let a = a_of_r(x)?;
    let cutoff = 3.0 / (1.0 + x);
    let mut points: Vec<Complex64> = grid.points().filter(|z| z.norm() <= cutoff).collect();
    for &phi in grid.angles() {
        points.push(Complex64::from_polar(cutoff, phi));
    }

    let mut worst = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    let mut worst_kernel = f64::INFINITY;
    let mut worst_ratio = f64::INFINITY;
    for &z in &points {
        for atom in &atoms {
            let zeta_bar_z = z * Complex64::from_polar(1.0, -atom.angle);
            let s = zeta_bar_z.norm();
            let den = 1.0 + x - 2.0 * zeta_bar_z.re + s * s * (1.0 - x);
            let kernel = 2.0 * x * s / den;
            let margin = a - kernel;
            worst_kernel = worst_kernel.min(margin);
            if margin < worst {
                worst = margin;
                witness = z;
            }
        }
        let (p, dp) = g.herglotz().eval_raw(z);
        let b_r = 1.0 + r * p.re;
        let c_r = (r * z * dp).norm();
        let margin = a - c_r / b_r;
        worst_ratio = worst_ratio.min(margin);
        if margin < worst {
            worst = margin;
            witness = z;
        }
    }
    Ok(
        CheckReport::new("lemma_bounds", worst >= -DISK_SLACK, worst, witness)
            .with_param("r", ParamValue::F(r))
            .with_param("x", ParamValue::F(x))
            .with_param("a", ParamValue::F(a))
            .with_param("cutoff", ParamValue::F(cutoff))
            .with_param("worst_kernel_margin", ParamValue::F(worst_kernel))
            .with_param("worst_ratio_margin", ParamValue::F(worst_ratio))
            .with_param("slack", ParamValue::F(DISK_SLACK)),
    )
}

/// Membership of `F` in the subordination class with parameters `(alpha,
/// beta)`: reports `min Re((F(z)/z - beta)/alpha) + 1/2` over the grid.
pub fn subordination_membership(
    f_eval: &dyn Fn(Complex64) -> Complex64,
    c: &ClassParams,
    grid: &SamplingGrid,
) -> CheckReport {
    let mut worst = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    for z in grid.points() {
        let margin = ((f_eval(z) / z - c.beta) / c.alpha).re + 0.5;
        if margin < worst {
            worst = margin;
            witness = z;
        }
    }
    CheckReport::new(
        "subordination_membership",
        worst >= -DISK_SLACK,
        worst,
        witness,
    )
    .with_param("alpha_re", ParamValue::F(c.alpha.re))
    .with_param("alpha_im", ParamValue::F(c.alpha.im))
    .with_param("beta_re", ParamValue::F(c.beta.re))
    .with_param("beta_im", ParamValue::F(c.beta.im))
    .with_param("slack", ParamValue::F(DISK_SLACK))
}

pub(crate) fn require_origin_null_point(g: &GeneratorSpec, what: &'static str) -> Result<()> {
    if g.tau().norm() != 0.0 {
        return Err(Error::out_of_range(what, "requires tau = 0"));
    }
    Ok(())
}

pub(crate) fn min_with_witness(margins: &[f64], points: &[Complex64]) -> (f64, Complex64) {
    let mut worst = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    for (m, z) in margins.iter().zip(points.iter()) {
        if *m < worst {
            worst = *m;
            witness = *z;
        }
    }
    (worst, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{Atom, SchwarzFunction};
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn linear(q: Complex64) -> GeneratorSpec {
        GeneratorSpec::vanishing_at_origin(HerglotzData::constant(q).unwrap()).unwrap()
    }

    fn half_plane(q: Complex64) -> GeneratorSpec {
        GeneratorSpec::vanishing_at_origin(
            HerglotzData::rational(q, SchwarzFunction::identity()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn a_of_r_values() {
        assert_eq!(a_of_r(0.0).unwrap(), 0.0);
        assert_relative_eq!(a_of_r(10.0).unwrap(), 660.0 / 1184.0, max_relative = 1e-15);
        assert!(matches!(a_of_r(2.0), Err(Error::PoleAtR { .. })));
        let r0 = find_r0();
        assert!(a_of_r(r0).unwrap() - 1.0 < 1e-9);
    }

    #[test]
    fn r0_two_routes_agree() {
        let bisected = find_r0();
        let closed = r0_closed_form();
        assert!((bisected - closed).abs() <= 1e-9);
        assert!((bisected - 5.92434).abs() <= 1e-4);
        assert!((a_of_r(bisected).unwrap() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn a_is_strictly_decreasing_past_r0() {
        let r0 = find_r0();
        let mut samples: Vec<f64> = Vec::new();
        let mut x = r0;
        while x <= 1e4 {
            samples.push(x);
            x *= 1.15;
        }
        for pair in samples.windows(2) {
            assert!(a_of_r(pair[0]).unwrap() > a_of_r(pair[1]).unwrap());
        }
    }

    #[test]
    fn remark_bound_chain() {
        // A(x) < 6/(6 - r0 + x) < 6/x for x > 6
        let r0 = find_r0();
        for &x in &[6.0 + 1e-6, 8.0, 20.0, 100.0, 1e4] {
            let a = a_of_r(x).unwrap();
            let mid = 6.0 / (6.0 - r0 + x);
            assert!(a < mid + 1e-12);
            assert!(mid < 6.0 / x + 1e-12);
            // order chain
            let alpha = 1.0 / (1.0 + a);
            assert!(alpha > (6.0 - r0 + x) / (12.0 - r0 + x) - 1e-12);
            assert!((6.0 - r0 + x) / (12.0 - r0 + x) > x / (6.0 + x) - 1e-12);
            let beta = std::f64::consts::FRAC_2_PI * a.asin();
            assert!(beta < std::f64::consts::FRAC_2_PI * (6.0 / (6.0 - r0 + x)).asin() + 1e-12);
        }
    }

    #[test]
    fn gamma_lower_bound_chain() {
        // gamma_r > (x - r0)/(12 - r0 + x) > (x - 6)/(x + 6) for x > 6
        let r0 = find_r0();
        for &x in &[6.5, 10.0, 100.0, 1e4] {
            let rep = orders(c(1.0, 0.0), x).unwrap();
            let mid = (x - r0) / (12.0 - r0 + x);
            assert!(rep.gamma_r > mid - 1e-12);
            assert!(mid > (x - 6.0) / (x + 6.0) - 1e-12);
        }
    }

    #[test]
    fn radii_for_the_unit_class() {
        let p = ClassParams::new(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        let rep = radii_general(&p).unwrap();
        assert_eq!(rep.branch, RadiiBranch::AboveThreeQuarters);
        assert!((rep.r_univ - 0.5).abs() <= 1e-12);
        assert!((rep.r1 - 1.0).abs() <= 1e-12);
        assert!((rep.r2 - 1.0 / (2.0 + 3.0f64.sqrt())).abs() <= 1e-12);
        assert!((rep.r2_alt - 1.0 / 3.0).abs() <= 1e-12);
        assert!(rep.r2 > 0.0 && rep.r2 <= rep.r1);
    }

    #[test]
    fn radii_second_branch() {
        let p = ClassParams::new(c(2.0, 0.0), c(1.0, 0.0)).unwrap();
        let rep = radii_general(&p).unwrap();
        assert_eq!(rep.branch, RadiiBranch::AtMostThreeQuarters);
        assert_relative_eq!(rep.m, 0.5, max_relative = 1e-15);
        assert_relative_eq!(
            rep.r_univ,
            2.0 * (1.0 - 0.5f64.sqrt()).powi(2),
            max_relative = 1e-14
        );
        assert_relative_eq!(rep.r1, 2.0f64.sqrt() - 1.0, max_relative = 1e-14);
        assert!(rep.r2 > 0.0 && rep.r2 <= rep.r1);
    }

    #[test]
    fn class_params_invariant() {
        assert!(ClassParams::new(c(1.0, 0.0), c(-1.0, 0.0)).is_err());
        assert!(ClassParams::new(c(0.0, 1.0), c(0.0, 1.0)).is_ok());
    }

    #[test]
    fn resolvent_radii_q1_r4() {
        let (rho, rho1, rho2, rho3) = radii_resolvent(c(1.0, 0.0), 4.0).unwrap();
        assert_relative_eq!(rho, 11.0 - 4.0 * 6.0f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(rho1, (8.0f64 / 3.0).sqrt() - 1.0, max_relative = 1e-14);
        assert_relative_eq!(rho2, rho / (5.0 + 22.0f64.sqrt()), max_relative = 1e-14);
        assert_relative_eq!(rho3, 1.0 / (5.0 + 24.0f64.sqrt()), max_relative = 1e-14);
    }

    #[test]
    fn rho_grows_with_r_and_tends_to_one_at_the_edge() {
        let q = c(1.0, 0.0);
        let rho10 = radii_resolvent(q, 10.0).unwrap().0;
        let rho100 = radii_resolvent(q, 100.0).unwrap().0;
        assert!(rho100 > rho10);
        // rho - 1 grows like (r Re q - 2)^2 / 8, so just past the edge the
        // excess sits below f64 resolution
        let rho_edge = radii_resolvent(q, 2.0 + 1e-9).unwrap().0;
        assert!((rho_edge - 1.0).abs() <= 1e-12);
        assert!(radii_resolvent(q, 2.001).unwrap().0 > 1.0);
        assert!(radii_resolvent(q, 2.0).is_err());
    }

    #[test]
    fn resolvent_radii_match_the_general_class() {
        // rho and rho1 agree exactly with the class radii at
        // (alpha, beta) = (2 r Re q, 1 + r q); the published rho2 replaces
        // rho^2/rho1^2 = (r Re q - 1) rho by its lower bound r Re q - 1,
        // so it is dominated by the class covering radius R2.
        for (q, r) in [(c(1.0, 0.0), 4.0), (c(1.0, 1.0), 7.0), (c(2.0, -1.0), 3.0)] {
            let (rho, rho1, rho2, _) = radii_resolvent(q, r).unwrap();
            let class = radii_general(&ClassParams::for_resolvent(q, r).unwrap()).unwrap();
            assert!((rho - class.r_univ).abs() <= 1e-12 * rho.max(1.0));
            assert!((rho1 - class.r1).abs() <= 1e-12);
            assert!(class.r2 >= rho2 - 1e-12);
            let x = r * q.re;
            assert_relative_eq!(
                rho * rho / (rho1 * rho1),
                (x - 1.0) * rho,
                max_relative = 1e-12
            );
            let beta = (1.0 + r * q).norm();
            let identity = rho / (beta + (beta * beta - (x - 1.0) * rho).sqrt());
            assert_relative_eq!(class.r2, identity, max_relative = 1e-12);
        }
    }

    #[test]
    fn orders_for_real_q() {
        let rep = orders(c(1.0, 0.0), 10.0).unwrap();
        assert_relative_eq!(rep.a, 660.0 / 1184.0, max_relative = 1e-15);
        assert_relative_eq!(rep.alpha_star, 1.0 / (1.0 + rep.a), max_relative = 1e-15);
        assert_relative_eq!(
            rep.beta_star,
            std::f64::consts::FRAC_2_PI * rep.a.asin(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            rep.gamma_r,
            (1.0 - rep.a) / (1.0 + rep.a),
            max_relative = 1e-15
        );
        assert_eq!(rep.k_qc, rep.a);
        // real q: kappa = 1 / (2^{1 - gamma} (1 + r q))
        let expected = 1.0 / (2f64.powf(1.0 - rep.gamma_r) * 11.0);
        assert_relative_eq!(rep.kappa.unwrap(), expected, max_relative = 1e-14);
        assert_eq!(rep.sector_center, 0.0);
    }

    #[test]
    fn orders_limits_for_large_r() {
        let rep = orders(c(1.0, 0.0), 1e8).unwrap();
        assert!(rep.a < 1e-7);
        assert!(rep.alpha_star > 1.0 - 1e-7);
        assert!(rep.beta_star < 1e-6);
        assert!(rep.gamma_r > 1.0 - 1e-6);
    }

    #[test]
    fn orders_sector_for_complex_q() {
        let rep = orders(c(1.0, 1.0), 10.0).unwrap();
        assert_relative_eq!(rep.sector_center, c(11.0, 10.0).arg(), max_relative = 1e-14);
        assert_relative_eq!(rep.sector_center, 0.737815, max_relative = 1e-5);
        assert_relative_eq!(rep.sector_half_angle, 0.446352, max_relative = 1e-4);
        // |arg(1 + r q)| exceeds the sector half-angle: no squeezing constant
        assert!(rep.kappa.is_none());
        // far enough out the sector recaptures the center
        let rep = orders(c(1.0, 1.0), 100.0).unwrap();
        assert!(rep.kappa.is_some());
        assert!(rep.kappa.unwrap() > 0.0);
    }

    #[test]
    fn orders_requires_x_above_r0() {
        assert!(orders(c(1.0, 0.0), 5.0).is_err());
        assert!(orders(c(1.0, 0.0), 0.9 * find_r0()).is_err());
    }

    #[test]
    fn spirallike_order_cases() {
        // theta = 0 reduces to the starlike order
        let (alpha, est) = spirallike_order(c(1.0, 0.0), 10.0, 0.0).unwrap();
        let rep = orders(c(1.0, 0.0), 10.0).unwrap();
        assert_relative_eq!(alpha, rep.alpha_star, max_relative = 1e-14);
        assert!(alpha >= est.unwrap() - 1e-12);

        // the widest admissible tilt at x = 10; frozen from exact fractions:
        // A = 165/296, alpha = (3/5 - A) / ((1 - A^2) 3/5) = 0.1029292...
        let theta = (0.6f64).acos();
        let (alpha, est) = spirallike_order(c(1.0, 0.0), 10.0, theta).unwrap();
        assert_relative_eq!(alpha, 0.1029292, max_relative = 1e-5);
        assert!(alpha >= est.unwrap() - 1e-12);

        // boundary x = 6: only theta = 0 is admissible, no estimate
        let (alpha, est) = spirallike_order(c(1.0, 0.0), 6.0, 0.0).unwrap();
        assert_relative_eq!(
            alpha,
            1.0 / (1.0 + a_of_r(6.0).unwrap()),
            max_relative = 1e-14
        );
        assert!(est.is_none());
        assert!(spirallike_order(c(1.0, 0.0), 6.0, 0.1).is_err());
        assert!(spirallike_order(c(1.0, 0.0), 5.0, 0.0).is_err());
    }

    #[test]
    fn starlike_functional_values() {
        let cfg = SolverConfig::default();
        // linear generator: S == 1
        let lin = linear(c(1.0, 0.0));
        for &w in &[c(0.3, 0.2), c(-0.8, 0.1)] {
            let s = starlike_functional(&lin, 10.0, w, &cfg).unwrap();
            assert!((s - 1.0).norm() <= 1e-12);
        }
        assert_eq!(
            starlike_functional(&lin, 10.0, c(0.0, 0.0), &cfg).unwrap(),
            c(1.0, 0.0)
        );
        // half-plane generator at w = 1/2, r = 1: S = 0.8 via both routes
        let hp = half_plane(c(1.0, 0.0));
        let s = starlike_functional(&hp, 1.0, c(0.5, 0.0), &cfg).unwrap();
        assert_relative_eq!(s.re, 0.8, max_relative = 1e-12);
        let direct = starlike_functional_direct(&hp, 1.0, c(0.5, 0.0), &cfg).unwrap();
        assert!((s - direct).norm() <= 1e-10);
    }

    #[test]
    fn starlike_disk_margin_at_origin() {
        // S(0) = 1, so the margin there is (A - A^2)/(1 - A^2)
        let rep = orders(c(1.0, 0.0), 10.0).unwrap();
        let (a, center, radius) = (
            rep.a,
            1.0 / (1.0 - rep.a * rep.a),
            rep.a / (1.0 - rep.a * rep.a),
        );
        let margin0 = radius - (1.0 - center).abs();
        assert_relative_eq!(margin0, (a - a * a) / (1.0 - a * a), max_relative = 1e-13);
    }

    #[test]
    fn starlike_disk_checks_pass() {
        let grid = SamplingGrid::new(16, 48, 0.999).unwrap();
        let cfg = SolverConfig::default();
        for g in [linear(c(1.0, 0.0)), half_plane(c(1.0, 0.0))] {
            let report = check_starlike_disk(&g, 10.0, &grid, &cfg).unwrap();
            assert!(report.pass, "margin {}", report.worst_margin);
            // disk geometry corollaries
            let rep = orders(c(1.0, 0.0), 10.0).unwrap();
            assert!(report.param_f64("min_re_s").unwrap() >= rep.alpha_star - 1e-9);
            assert!(report.param_f64("max_abs_arg_s").unwrap() <= rep.a.asin() + 1e-9);
        }
        assert!(check_starlike_disk(&linear(c(1.0, 0.0)), 0.9 * find_r0(), &grid, &cfg).is_err());
    }

    #[test]
    fn hyperbolic_convexity_linear_hand_formula() {
        let grid = SamplingGrid::new(8, 16, 0.9).unwrap();
        let cfg = SolverConfig::default();
        let g = linear(c(1.0, 0.0));
        let report = check_hyperbolic_convexity(&g, 1.0, &grid, &cfg).unwrap();
        assert!(report.pass);
        // functional = 1 + |w|^2 / (2 - |w|^2 / 2), minimized at the smallest radius
        let wmin: f64 = grid.radii()[0];
        let expected = 1.0 + wmin * wmin / (2.0 - wmin * wmin / 2.0);
        assert!(report.worst_margin >= 1.0);
        assert!(report.worst_margin <= expected + 1e-9);
    }

    #[test]
    fn lemma_bounds_single_atom_extremal() {
        let g = GeneratorSpec::vanishing_at_origin(
            HerglotzData::atomic(
                vec![Atom {
                    angle: 0.0,
                    mass: 1.0,
                }],
                0.0,
            )
            .unwrap(),
        )
        .unwrap();
        let grid = SamplingGrid::new(16, 32, 0.999).unwrap();
        let report = check_lemma_bounds(&g, 10.0, &grid).unwrap();
        assert!(report.pass);
        // the cutoff circle touches the extremal configuration exactly
        assert!(
            report.worst_margin.abs() <= 1e-10,
            "margin {}",
            report.worst_margin
        );
    }

    #[test]
    fn lemma_bounds_two_atoms() {
        let g = GeneratorSpec::vanishing_at_origin(
            HerglotzData::atomic(
                vec![
                    Atom {
                        angle: std::f64::consts::FRAC_PI_3,
                        mass: 0.5,
                    },
                    Atom {
                        angle: -std::f64::consts::FRAC_PI_3,
                        mass: 0.5,
                    },
                ],
                0.0,
            )
            .unwrap(),
        )
        .unwrap();
        let grid = SamplingGrid::new(16, 32, 0.999).unwrap();
        let report = check_lemma_bounds(&g, 10.0, &grid).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn lemma_bounds_rejects_rational_variant() {
        let g = half_plane(c(1.0, 0.0));
        let grid = SamplingGrid::new(4, 8, 0.9).unwrap();
        assert!(matches!(
            check_lemma_bounds(&g, 10.0, &grid),
            Err(Error::VariantUnsupported)
        ));
    }

    #[test]
    fn subordination_memberships() {
        let grid = SamplingGrid::new(24, 64, 0.999).unwrap();
        // the extremal function itself
        let p = ClassParams::new(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        let psi = |z: Complex64| z * (1.0 + z / (1.0 - z));
        let report = subordination_membership(&psi, &p, &grid);
        assert!(report.pass);
        assert!(report.worst_margin >= 0.0 && report.worst_margin < 1e-3);

        // F = beta z sits at margin 1/2
        let beta = c(2.0, 1.0);
        let p = ClassParams::new(c(1.0, 0.5), beta).unwrap();
        let report = subordination_membership(&move |z| beta * z, &p, &grid);
        assert!(report.pass);
        assert_relative_eq!(report.worst_margin, 0.5, max_relative = 1e-12);

        // Id + r f for the half-plane generator lies in the class with
        // alpha = 2 r, beta = 1 + r
        let r = 3.0;
        let g = half_plane(c(1.0, 0.0));
        let p = ClassParams::for_resolvent(c(1.0, 0.0), r).unwrap();
        let f_eval = move |z: Complex64| {
            let (f, _) = g.eval_raw(z);
            z + r * f
        };
        let report = subordination_membership(&f_eval, &p, &grid);
        assert!(report.pass);
    }
}
