//! Pointwise solution of the resolvent equation `G + r f(G) = Id`.
//!
//! For a generator `f` and `r > 0` the map `Id + r f` has a holomorphic
//! inverse `G_r` on the unit disk; when `r Re q > 2` (with `q = f'(0)`) the
//! inverse extends univalently to the larger disk of radius `rho(r)`. The
//! solver is a damped Newton iteration with an initial guess `w / (1 + r q)`
//! (exact for linear generators, asymptotically exact near the origin) and a
//! warm-started homotopy along the segment from the null point as a fallback.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::geometry;
use crate::report::{CheckReport, ParamValue};

/// Newton/homotopy budget.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Absolute residual target for `|z + r f(z) - w|`.
    pub tol: f64,
    /// Newton iterations per target point.
    pub max_iter: usize,
    /// Initial number of homotopy segments for continuation.
    pub continuation_steps: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        // Quadratic convergence makes 64 iterations generous.
        SolverConfig {
            tol: 1e-13,
            max_iter: 64,
            continuation_steps: 32,
        }
    }
}

impl SolverConfig {
    pub fn validated(self) -> Result<Self> {
        if !(self.tol > 0.0) || self.max_iter == 0 {
            return Err(Error::invalid(
                "SolverConfig",
                "tol must be positive and max_iter >= 1",
            ));
        }
        Ok(self)
    }
}

/// One pointwise resolvent evaluation with solver diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct ResolventEval {
    /// `G_r(w)`.
    pub value: Complex64,
    /// `G_r'(w) = 1 / (1 + r f'(G_r(w)))`.
    pub d1: Complex64,
    /// `G_r''(w) = -r f''(G_r(w)) G_r'(w)^3`.
    pub d2: Complex64,
    pub iterations: usize,
    /// `|z + r f(z) - w|` at the returned `z`.
    pub residual: f64,
}

fn functional(g: &GeneratorSpec, r: f64, z: Complex64, w: Complex64) -> (Complex64, Complex64) {
    let (f, fp) = g.eval_raw(z);
    (z + r * f - w, 1.0 + r * fp)
}

/// Damped Newton from `z0`; iterates are confined to `|z| <= radius_cap`.
fn newton(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    z0: Complex64,
    radius_cap: f64,
    cfg: &SolverConfig,
) -> Result<(Complex64, usize)> {
    let mut z = z0;
    let mut residual = f64::INFINITY;
    for it in 0..cfg.max_iter {
        let (fval, fder) = functional(g, r, z, w);
        residual = fval.norm();
        if residual <= cfg.tol {
            return Ok((z, it));
        }
        let mut step = -fval / fder;
        if !step.is_finite() {
            return Err(Error::NoConvergence {
                w,
                residual,
                iterations: it,
            });
        }
        // The solution is known a priori to lie inside the cap; halve any
        // step that would leave it, up to 40 times.
        let mut halvings = 0;
        while (z + step).norm() > radius_cap {
            step *= 0.5;
            halvings += 1;
            if halvings > 40 {
                return Err(Error::IterateEscaped { w });
            }
        }
        z += step;
    }
    let (fval, _) = functional(g, r, z, w);
    if fval.norm() <= cfg.tol {
        return Ok((z, cfg.max_iter));
    }
    Err(Error::NoConvergence {
        w,
        residual,
        iterations: cfg.max_iter,
    })
}

/// Warm-started homotopy along the segment from `start_w` (with known
/// solution `start_z`) to `w`. Segments are subdivided on failure.
fn homotopy(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    start_w: Complex64,
    start_z: Complex64,
    radius_cap: f64,
    cfg: &SolverConfig,
) -> Result<(Complex64, usize)> {
    let mut z = start_z;
    let mut total_iters = 0;
    let mut s = 0.0f64;
    let mut ds = 1.0 / cfg.continuation_steps.max(1) as f64;
    let mut depth = 0;
    let mut segments = 0usize;
    while s < 1.0 {
        segments += 1;
        if segments > 100_000 {
            return Err(Error::NoConvergence {
                w,
                residual: f64::NAN,
                iterations: total_iters,
            });
        }
        let s_next = (s + ds).min(1.0);
        let target = start_w + (w - start_w) * s_next;
        match newton(g, r, target, z, radius_cap, cfg) {
            Ok((zn, it)) => {
                z = zn;
                total_iters += it;
                s = s_next;
                depth = 0;
            }
            Err(_) if depth < 24 => {
                ds *= 0.5;
                depth += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Ok((z, total_iters))
}

fn finish(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    z: Complex64,
    iterations: usize,
) -> ResolventEval {
    let (fval, fder) = functional(g, r, z, w);
    let d1 = 1.0 / fder;
    let d2 = -r * g.f_second_raw(z) * d1 * d1 * d1;
    ResolventEval {
        value: z,
        d1,
        d2,
        iterations,
        residual: fval.norm(),
    }
}

/// Disk the Newton iterates are confined to: `rho_1(r)` once the distortion
/// theorem applies, the closed unit disk otherwise.
fn iterate_cap(g: &GeneratorSpec, r: f64) -> f64 {
    if g.tau().norm() == 0.0 {
        let x = r * g.q().re;
        if x > 2.0 {
            return geometry::radii_resolvent(g.q(), r)
                .map(|(_, rho1, _, _)| rho1)
                .unwrap_or(1.0);
        }
    }
    1.0
}

/// Solve `z + r f(z) = w` for `|w| < 1`.
///
/// Deterministic for fixed inputs. Support for `tau != 0` is experimental;
/// every theorem suite assumes `tau = 0`.
pub fn resolve(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    cfg: &SolverConfig,
) -> Result<ResolventEval> {
    if !(r > 0.0) {
        return Err(Error::out_of_range(
            "resolve",
            format!("r = {r} must be positive"),
        ));
    }
    if !(w.norm() < 1.0) {
        return Err(Error::OutsideDisk(w));
    }
    let cap = iterate_cap(g, r);
    let tau = g.tau();
    let guess = if tau.norm() == 0.0 {
        w / (1.0 + r * g.q())
    } else {
        w
    };
    let solved =
        newton(g, r, w, guess, cap, cfg).or_else(|_| homotopy(g, r, w, tau, tau, cap, cfg))?;
    Ok(finish(g, r, w, solved.0, solved.1))
}

/// Analytic continuation of `G_r` along the radius `[0, w]` for
/// `|w| < rho(r)`, available once `r Re q > 2`.
///
/// Targets with `|w| >= (1 - 1e-6) rho(r)` are rejected: the behavior on the
/// critical circle itself is not specified, so the solver stops strictly
/// inside.
pub fn resolve_continued(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    cfg: &SolverConfig,
) -> Result<ResolventEval> {
    if g.tau().norm() != 0.0 {
        return Err(Error::out_of_range(
            "resolve_continued",
            "continuation requires tau = 0",
        ));
    }
    let q = g.q();
    if !(r * q.re > 2.0) {
        return Err(Error::out_of_range(
            "resolve_continued",
            format!("r Re q = {} must exceed 2", r * q.re),
        ));
    }
    let (rho, rho1, _, _) = geometry::radii_resolvent(q, r)?;
    if w.norm() >= rho * (1.0 - 1e-6) {
        return Err(Error::RadiusExceeded {
            w_abs: w.norm(),
            rho,
        });
    }
    if w.norm() == 0.0 {
        return Ok(finish(g, r, w, Complex64::new(0.0, 0.0), 0));
    }
    let origin = Complex64::new(0.0, 0.0);
    let (z, iters) = homotopy(g, r, w, origin, origin, rho1, cfg)?;
    Ok(finish(g, r, w, z, iters))
}

/// Evaluate `G_r(w)` choosing the plain or continued solver by `|w|`.
pub(crate) fn resolve_auto(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    cfg: &SolverConfig,
) -> Result<ResolventEval> {
    if w.norm() < 1.0 {
        resolve(g, r, w, cfg)
    } else {
        resolve_continued(g, r, w, cfg)
    }
}

/// Warm-started pointwise solve used inside ODE right-hand sides, where the
/// target moves continuously. Trial states of the integrator may sit slightly
/// outside the unit circle; those are served by the continued solver.
pub(crate) fn resolve_from_guess(
    g: &GeneratorSpec,
    r: f64,
    w: Complex64,
    guess: Complex64,
    cfg: &SolverConfig,
) -> Result<ResolventEval> {
    let cap = iterate_cap(g, r);
    match newton(g, r, w, guess, cap, cfg) {
        Ok((z, it)) => Ok(finish(g, r, w, z, it)),
        Err(_) => resolve_auto(g, r, w, cfg),
    }
}

/// Brute-force injectivity probe: evaluates `G_r` on an `n x n` grid in the
/// disk of radius `R` and reports `min_{i != j} |G(w_i) - G(w_j)| / |w_i - w_j|`.
///
/// Passes iff the ratio is strictly positive; `n = 1` yields a vacuous pass
/// with a `+inf` sentinel.
pub fn univalence_probe(
    g: &GeneratorSpec,
    r: f64,
    radius: f64,
    n: usize,
    cfg: &SolverConfig,
) -> Result<CheckReport> {
    let q = g.q();
    let limit = if r * q.re > 2.0 {
        geometry::radii_resolvent(q, r)?.0
    } else {
        1.0
    };
    if radius > limit {
        return Err(Error::out_of_range(
            "univalence_probe",
            format!("radius {radius} exceeds the univalence radius {limit}"),
        ));
    }
    let mut points = Vec::with_capacity(n * n);
    for j in 0..n {
        let rad = radius * (1.0 - 1e-9) * (j + 1) as f64 / n as f64;
        for k in 0..n {
            let phi = std::f64::consts::TAU * k as f64 / n as f64;
            points.push(Complex64::from_polar(rad, phi));
        }
    }
    let values: Vec<Complex64> = points
        .iter()
        .map(|&w| resolve_auto(g, r, w, cfg).map(|e| e.value))
        .collect::<Result<_>>()?;
    let mut min_ratio = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let dw = (points[i] - points[j]).norm();
            if dw == 0.0 {
                continue;
            }
            let ratio = (values[i] - values[j]).norm() / dw;
            if ratio < min_ratio {
                min_ratio = ratio;
                witness = points[i];
            }
        }
    }
    let pass = min_ratio > 0.0;
    Ok(
        CheckReport::new("univalence_probe", pass, min_ratio, witness)
            .with_param("r", ParamValue::F(r))
            .with_param("radius", ParamValue::F(radius))
            .with_param("n", ParamValue::I(n as i64)),
    )
}
