//! Embedded Dormand-Prince 5(4) integration of scalar complex ODEs
//! `du/ds = rhs(u)` along a real parameter, with checkpoint landing and an
//! escape watchdog on the unit circle.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub(crate) struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// Accepted states with modulus at or above this value stop the run.
    pub escape_threshold: f64,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            rtol: 1e-10,
            atol: 1e-12,
            max_steps: 4_000_000,
            escape_threshold: 1.0 - 1e-12,
        }
    }
}

/// State recorded at a requested checkpoint.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Checkpoint {
    pub s: f64,
    pub u: Complex64,
    /// Embedded local error estimate of the accepting step.
    pub local_error: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct RayOutcome {
    pub checkpoints: Vec<Checkpoint>,
    /// Set when the trajectory reached the escape threshold before the final
    /// checkpoint; carries the parameter value and state at the stop.
    pub escaped: Option<(f64, Complex64)>,
}

// Dormand-Prince coefficients.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const ERR: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrate from `s = 0` through the sorted nonnegative `checkpoints`,
/// recording the state at each. Returns early (without error) when the
/// escape threshold is crossed.
pub(crate) fn integrate_ray<F>(
    mut rhs: F,
    u0: Complex64,
    checkpoints: &[f64],
    opts: &OdeOptions,
) -> Result<RayOutcome>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    let mut out = RayOutcome {
        checkpoints: Vec::with_capacity(checkpoints.len()),
        escaped: None,
    };
    let mut s = 0.0f64;
    let mut u = u0;
    let mut next = 0usize;
    // serve any checkpoints at s = 0
    while next < checkpoints.len() && checkpoints[next] <= 0.0 {
        out.checkpoints.push(Checkpoint {
            s: 0.0,
            u,
            local_error: 0.0,
        });
        next += 1;
    }
    if next >= checkpoints.len() {
        return Ok(out);
    }
    if u.norm() >= opts.escape_threshold {
        out.escaped = Some((s, u));
        return Ok(out);
    }

    let s_end = *checkpoints.last().expect("nonempty checkpoint list");
    let mut k = [Complex64::new(0.0, 0.0); 7];
    let mut h = (checkpoints[next] - s).clamp(1e-8, 1e-2);
    let mut steps = 0usize;
    while next < checkpoints.len() {
        if steps >= opts.max_steps {
            return Err(Error::StepLimit { s });
        }
        steps += 1;
        let target = checkpoints[next];
        let mut landing = false;
        if s + h >= target - 1e-14 * (1.0 + target) {
            h = target - s;
            landing = true;
        }
        k[0] = rhs(u)?;
        let mut reject = false;
        for stage in 0..6 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, kj) in k.iter().enumerate().take(stage + 1) {
                acc += A[stage][j] * kj;
            }
            let u_stage = u + h * acc;
            if u_stage.norm() > 2.0 {
                // the stage ran far outside the disk; shrink and retry
                reject = true;
                break;
            }
            k[stage + 1] = rhs(u_stage)?;
        }
        if reject {
            h *= 0.25;
            if h < 1e-15 * (1.0 + s.abs()) {
                return Err(Error::StepLimit { s });
            }
            continue;
        }
        let mut u_new = u;
        let mut err_est = Complex64::new(0.0, 0.0);
        for j in 0..7 {
            u_new += h * B5[j] * k[j];
            err_est += h * ERR[j] * k[j];
        }
        let scale = opts.atol + opts.rtol * u.norm().max(u_new.norm());
        let err = err_est.norm() / scale;
        if err <= 1.0 {
            s += h;
            u = u_new;
            if u.norm() >= opts.escape_threshold {
                out.escaped = Some((s, u));
                return Ok(out);
            }
            if landing {
                out.checkpoints.push(Checkpoint {
                    s: target,
                    u,
                    local_error: err_est.norm(),
                });
                next += 1;
                if next < checkpoints.len() {
                    h = ((checkpoints[next] - s) * 0.1).clamp(1e-8, 0.25);
                }
                continue;
            }
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h < 1e-15 * (1.0 + s_end) {
            return Err(Error::StepLimit { s });
        }
    }
    Ok(out)
}
