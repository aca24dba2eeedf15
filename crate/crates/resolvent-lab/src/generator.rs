//! Infinitesimal generators `f(z) = (z - tau)(1 - z conj(tau)) p(z)` and their
//! Herglotz parts `p`, with exact analytic derivatives.
//!
//! The Herglotz function `Re p >= 0` is represented either by a finite atomic
//! boundary measure plus an imaginary constant, or by a pair `(q, omega)` with
//! `p = (q + conj(q) omega) / (1 - omega)` for a Schwarz function `omega`.
//! Both representations make `Re p >= 0` structural rather than sampled.

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::grid::SamplingGrid;
use crate::report::{CheckReport, ParamValue};

/// Step used by the central difference that produces `f''` (second
/// derivatives feed only diagnostics and coarse bounds).
pub(crate) const SECOND_DERIVATIVE_STEP: f64 = 1e-6;

/// A point mass on the unit circle.
#[derive(Debug, Clone, Copy)]
pub struct Atom {
    /// Position `e^{i angle}` of the mass, radians in `[0, 2pi)`.
    pub angle: f64,
    /// Nonnegative mass.
    pub mass: f64,
}

/// A holomorphic self-map of the disk fixing the origin.
///
/// The Blaschke structure `rotation * z^power * prod (z - a_j)/(1 - conj(a_j) z)`
/// keeps `omega(0) = 0` and `|omega| < 1` exact by construction. The constant
/// `p == q` case needs `omega == 0`, which no Blaschke product represents, so
/// it is a distinguished variant.
#[derive(Debug, Clone)]
pub enum SchwarzFunction {
    /// `omega == 0` (encodes constant Herglotz functions).
    Zero,
    Blaschke {
        /// Unimodular factor `e^{i rotation_angle}`.
        rotation: Complex64,
        /// Leading power `m >= 1` of `z`.
        power: u32,
        /// Zeros `a_j` with `|a_j| < 1`.
        zeros: Vec<Complex64>,
    },
}

impl SchwarzFunction {
    pub fn zero() -> Self {
        SchwarzFunction::Zero
    }

    /// The identity map `omega(z) = z`.
    pub fn identity() -> Self {
        SchwarzFunction::Blaschke {
            rotation: Complex64::new(1.0, 0.0),
            power: 1,
            zeros: Vec::new(),
        }
    }

    pub fn blaschke(rotation_angle: f64, power: u32, zeros: Vec<Complex64>) -> Result<Self> {
        if power == 0 {
            return Err(Error::invalid(
                "SchwarzFunction",
                "leading power must be >= 1 so that omega(0) = 0",
            ));
        }
        if !rotation_angle.is_finite() {
            return Err(Error::invalid(
                "SchwarzFunction",
                "non-finite rotation angle",
            ));
        }
        for (j, a) in zeros.iter().enumerate() {
            if !(a.norm() < 1.0) {
                return Err(Error::invalid(
                    "SchwarzFunction",
                    format!("zero #{j} has |a| = {} >= 1", a.norm()),
                ));
            }
        }
        Ok(SchwarzFunction::Blaschke {
            rotation: Complex64::from_polar(1.0, rotation_angle),
            power,
            zeros,
        })
    }

    /// Value and derivative, by the product rule over the Blaschke factors.
    pub fn eval(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            SchwarzFunction::Zero => (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
            SchwarzFunction::Blaschke {
                rotation,
                power,
                zeros,
            } => {
                let m = *power;
                let mut value = rotation * z.powu(m);
                let mut deriv = rotation * (m as f64) * z.powu(m - 1);
                for a in zeros {
                    let den = 1.0 - a.conj() * z;
                    let b = (z - a) / den;
                    // (1 - |a|^2) / (1 - conj(a) z)^2
                    let db = (1.0 - a.norm_sqr()) / (den * den);
                    deriv = deriv * b + value * db;
                    value *= b;
                }
                (value, deriv)
            }
        }
    }
}

/// Boundary data defining a Herglotz function `p` with `Re p >= 0`.
#[derive(Debug, Clone)]
pub enum HerglotzData {
    /// `p(z) = sum m_k (1 + z e^{-i th_k})/(1 - z e^{-i th_k}) + i gamma`.
    Atomic { atoms: Vec<Atom>, gamma: f64 },
    /// `p(z) = (q + conj(q) omega(z)) / (1 - omega(z))`, `Re q > 0`.
    Rational {
        q: Complex64,
        omega: SchwarzFunction,
    },
}

impl HerglotzData {
    pub fn atomic(atoms: Vec<Atom>, gamma: f64) -> Result<Self> {
        if atoms
            .iter()
            .any(|a| !(a.mass >= 0.0) || !a.angle.is_finite())
        {
            return Err(Error::invalid(
                "HerglotzData",
                "atom masses must be nonnegative and angles finite",
            ));
        }
        let total: f64 = atoms.iter().map(|a| a.mass).sum();
        if total == 0.0 && gamma == 0.0 {
            return Err(Error::invalid(
                "HerglotzData",
                "measure must carry positive mass or gamma must be nonzero",
            ));
        }
        Ok(HerglotzData::Atomic { atoms, gamma })
    }

    pub fn rational(q: Complex64, omega: SchwarzFunction) -> Result<Self> {
        if !(q.re > 0.0) {
            return Err(Error::invalid(
                "HerglotzData",
                format!("Re q = {} must be positive", q.re),
            ));
        }
        Ok(HerglotzData::Rational { q, omega })
    }

    /// Constant `p == q`, canonically encoded with `omega == 0`.
    pub fn constant(q: Complex64) -> Result<Self> {
        Self::rational(q, SchwarzFunction::zero())
    }

    /// `p(0)`, exact in both representations.
    pub fn p0(&self) -> Complex64 {
        match self {
            HerglotzData::Atomic { atoms, gamma } => {
                let m: f64 = atoms.iter().map(|a| a.mass).sum();
                Complex64::new(m, *gamma)
            }
            HerglotzData::Rational { q, .. } => *q,
        }
    }

    /// `(p(z), p'(z))` without the domain guard; callers inside the crate may
    /// touch the closed disk during damped Newton steps.
    pub(crate) fn eval_raw(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            HerglotzData::Atomic { atoms, gamma } => {
                let mut p = Complex64::new(0.0, *gamma);
                let mut dp = Complex64::new(0.0, 0.0);
                for a in atoms {
                    let u = Complex64::from_polar(1.0, -a.angle);
                    let den = 1.0 - z * u;
                    p += a.mass * (1.0 + z * u) / den;
                    dp += a.mass * 2.0 * u / (den * den);
                }
                (p, dp)
            }
            HerglotzData::Rational { q, omega } => {
                let (w, dw) = omega.eval(z);
                let den = 1.0 - w;
                let p = (q + q.conj() * w) / den;
                // derivative collapses to 2 Re(q) w' / (1 - w)^2
                let dp = 2.0 * q.re * dw / (den * den);
                (p, dp)
            }
        }
    }
}

/// Evaluate the Herglotz function and its derivative at `z` in the open disk.
pub fn herglotz_eval(h: &HerglotzData, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(z.norm() < 1.0) {
        return Err(Error::OutsideDisk(z));
    }
    Ok(h.eval_raw(z))
}

/// Berkson-Porta data for an infinitesimal generator.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    tau: Complex64,
    herglotz: HerglotzData,
}

impl GeneratorSpec {
    pub fn new(tau: Complex64, herglotz: HerglotzData) -> Result<Self> {
        if !(tau.norm() <= 1.0) {
            return Err(Error::invalid(
                "GeneratorSpec",
                format!("|tau| = {} must be <= 1", tau.norm()),
            ));
        }
        Ok(GeneratorSpec { tau, herglotz })
    }

    /// Generator with Denjoy-Wolff point at the origin.
    pub fn vanishing_at_origin(herglotz: HerglotzData) -> Result<Self> {
        Self::new(Complex64::new(0.0, 0.0), herglotz)
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn herglotz(&self) -> &HerglotzData {
        &self.herglotz
    }

    pub fn is_interior_null_point(&self) -> bool {
        self.tau.norm() < 1.0
    }

    /// `f'(0)`; for `tau = 0` this is `q = p(0)`, the quantity every theorem
    /// suite is parameterized by.
    pub fn q(&self) -> Complex64 {
        if self.tau.norm() == 0.0 {
            return self.herglotz.p0();
        }
        let (p0, dp0) = self.herglotz.eval_raw(Complex64::new(0.0, 0.0));
        (1.0 + self.tau.norm_sqr()) * p0 - self.tau * dp0
    }

    /// `(f(z), f'(z))` without the domain guard.
    pub(crate) fn eval_raw(&self, z: Complex64) -> (Complex64, Complex64) {
        let (p, dp) = self.herglotz.eval_raw(z);
        if self.tau.norm() == 0.0 {
            return (z * p, p + z * dp);
        }
        let tc = self.tau.conj();
        let front = (z - self.tau) * (1.0 - z * tc);
        let dfront = 1.0 - 2.0 * tc * z + self.tau.norm_sqr();
        (front * p, dfront * p + front * dp)
    }

    /// `f''(z)` by central differencing of the analytic `f'`.
    pub(crate) fn f_second_raw(&self, z: Complex64) -> Complex64 {
        let h = SECOND_DERIVATIVE_STEP;
        let (_, fp_plus) = self.eval_raw(z + Complex64::new(h, 0.0));
        let (_, fp_minus) = self.eval_raw(z - Complex64::new(h, 0.0));
        (fp_plus - fp_minus) / (2.0 * h)
    }
}

/// Evaluate the generator and its derivative at `z` in the open disk.
pub fn generator_eval(g: &GeneratorSpec, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(z.norm() < 1.0) {
        return Err(Error::OutsideDisk(z));
    }
    Ok(g.eval_raw(z))
}

/// Report-only check: `min Re p` over the grid and `|f(tau)|`.
pub fn validate_generator(g: &GeneratorSpec, grid: &SamplingGrid) -> CheckReport {
    const TOL: f64 = 1e-12;
    let mut min_re_p = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    for z in grid.points() {
        let (p, _) = g.herglotz.eval_raw(z);
        if p.re < min_re_p {
            min_re_p = p.re;
            witness = z;
        }
    }
    let f_at_tau = if g.is_interior_null_point() {
        g.eval_raw(g.tau).0.norm()
    } else {
        0.0
    };
    let pass = min_re_p >= -TOL && f_at_tau <= TOL;
    CheckReport::new("validate_generator", pass, min_re_p, witness)
        .with_param("min_re_p", ParamValue::F(min_re_p))
        .with_param("f_at_tau_abs", ParamValue::F(f_at_tau))
        .with_param("tolerance", ParamValue::F(TOL))
}

// ---------------------------------------------------------------------------
// JSON ingestion
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct AtomJson {
    angle: f64,
    mass: f64,
}

#[derive(Deserialize)]
struct OmegaJson {
    rotation_angle: f64,
    power: u32,
    #[serde(default)]
    zeros: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HerglotzJson {
    Atomic {
        atoms: Vec<AtomJson>,
        #[serde(default)]
        gamma: f64,
    },
    Rational {
        q: [f64; 2],
        #[serde(default)]
        omega: Option<OmegaJson>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorJson {
    Tagged {
        #[serde(default)]
        tau: Option<[f64; 2]>,
        herglotz: HerglotzJson,
    },
    Bare(HerglotzJson),
}

fn herglotz_from_json(h: HerglotzJson) -> Result<HerglotzData> {
    match h {
        HerglotzJson::Atomic { atoms, gamma } => HerglotzData::atomic(
            atoms
                .into_iter()
                .map(|a| Atom {
                    angle: a.angle,
                    mass: a.mass,
                })
                .collect(),
            gamma,
        ),
        HerglotzJson::Rational { q, omega } => {
            let omega = match omega {
                None => SchwarzFunction::zero(),
                Some(o) => SchwarzFunction::blaschke(
                    o.rotation_angle,
                    o.power,
                    o.zeros
                        .into_iter()
                        .map(|z| Complex64::new(z[0], z[1]))
                        .collect(),
                )?,
            };
            HerglotzData::rational(Complex64::new(q[0], q[1]), omega)
        }
    }
}

impl GeneratorSpec {
    /// Parse a generator description. Accepted shapes:
    /// `{"tau": [re, im], "herglotz": {"atoms": [{"angle", "mass"}...], "gamma"}}`,
    /// `{"tau": ..., "herglotz": {"q": [re, im], "omega": {...}}}`, or the bare
    /// Herglotz object with `tau = 0`. A missing `omega` means `omega == 0`
    /// (constant `p == q`).
    pub fn from_json_str(s: &str) -> Result<Self> {
        let parsed: GeneratorJson = serde_json::from_str(s)?;
        let (tau, herglotz) = match parsed {
            GeneratorJson::Tagged { tau, herglotz } => (
                tau.map_or(Complex64::new(0.0, 0.0), |t| Complex64::new(t[0], t[1])),
                herglotz,
            ),
            GeneratorJson::Bare(h) => (Complex64::new(0.0, 0.0), h),
        };
        GeneratorSpec::new(tau, herglotz_from_json(herglotz)?)
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_atom_at_origin() {
        let h = HerglotzData::atomic(
            vec![Atom {
                angle: 0.0,
                mass: 1.0,
            }],
            0.0,
        )
        .unwrap();
        let (p, dp) = herglotz_eval(&h, c(0.0, 0.0)).unwrap();
        assert_relative_eq!(p.re, 1.0, max_relative = 1e-15);
        assert_relative_eq!(dp.re, 2.0, max_relative = 1e-15);
        assert_eq!(p.im, 0.0);
    }

    #[test]
    fn atom_mass_and_gamma_set_p0() {
        let h = HerglotzData::atomic(
            vec![Atom {
                angle: 0.0,
                mass: 2.0,
            }],
            3.0,
        )
        .unwrap();
        let (p, _) = herglotz_eval(&h, c(0.0, 0.0)).unwrap();
        assert_relative_eq!(p.re, 2.0, max_relative = 1e-15);
        assert_relative_eq!(p.im, 3.0, max_relative = 1e-15);
    }

    #[test]
    fn single_atom_at_half() {
        let h = HerglotzData::atomic(
            vec![Atom {
                angle: 0.0,
                mass: 1.0,
            }],
            0.0,
        )
        .unwrap();
        let (p, dp) = herglotz_eval(&h, c(0.5, 0.0)).unwrap();
        assert_relative_eq!(p.re, 3.0, max_relative = 1e-14);
        assert_relative_eq!(dp.re, 8.0, max_relative = 1e-14);
    }

    #[test]
    fn constant_p_is_exact() {
        let q = c(0.7, -0.3);
        let h = HerglotzData::constant(q).unwrap();
        for &z in &[c(0.0, 0.0), c(0.9, 0.0), c(-0.3, 0.8)] {
            let (p, dp) = h.eval_raw(z);
            assert_eq!(p, q);
            assert_eq!(dp, c(0.0, 0.0));
        }
    }

    #[test]
    fn linear_generator_from_constant_p() {
        let q = c(1.0, 0.0);
        let g = GeneratorSpec::vanishing_at_origin(HerglotzData::constant(q).unwrap()).unwrap();
        let (f, fp) = generator_eval(&g, c(0.3, 0.0)).unwrap();
        assert_relative_eq!(f.re, 0.3, max_relative = 1e-15);
        assert_eq!(fp, q);
        assert_eq!(g.q(), q);
    }

    #[test]
    fn half_plane_extremal_generator() {
        // p(z) = (1+z)/(1-z), f(z) = z p(z)
        let h = HerglotzData::rational(c(1.0, 0.0), SchwarzFunction::identity()).unwrap();
        let g = GeneratorSpec::vanishing_at_origin(h).unwrap();
        let (f, _) = generator_eval(&g, c(0.2, 0.0)).unwrap();
        assert_relative_eq!(f.re, 0.3, max_relative = 1e-14);
        assert_relative_eq!(f.im, 0.0, epsilon = 1e-16);
        let (f0, _) = generator_eval(&g, c(0.0, 0.0)).unwrap();
        assert_eq!(f0, c(0.0, 0.0));
    }

    #[test]
    fn domain_guard_rejects_boundary() {
        let h = HerglotzData::constant(c(1.0, 0.0)).unwrap();
        assert!(herglotz_eval(&h, c(1.0, 0.0)).is_err());
        let g = GeneratorSpec::vanishing_at_origin(h).unwrap();
        assert!(generator_eval(&g, c(0.0, 1.0)).is_err());
    }

    #[test]
    fn negative_mass_rejected_at_construction() {
        assert!(HerglotzData::atomic(
            vec![Atom {
                angle: 0.0,
                mass: -0.1
            }],
            0.0
        )
        .is_err());
    }

    #[test]
    fn nonpositive_re_q_rejected() {
        assert!(HerglotzData::rational(c(0.0, 1.0), SchwarzFunction::zero()).is_err());
        assert!(HerglotzData::rational(c(-1.0, 0.0), SchwarzFunction::identity()).is_err());
    }

    #[test]
    fn empty_measure_rejected() {
        assert!(HerglotzData::atomic(vec![], 0.0).is_err());
        // pure rotation flow p = i*gamma is allowed
        assert!(HerglotzData::atomic(vec![], 2.0).is_ok());
    }

    #[test]
    fn schwarz_requires_positive_power() {
        assert!(SchwarzFunction::blaschke(0.0, 0, vec![]).is_err());
        assert!(SchwarzFunction::blaschke(0.0, 1, vec![c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn generator_slope_at_origin() {
        // |f(z)/z - q| <= 1e-6 on |z| = 1e-4
        let gens = [
            GeneratorSpec::vanishing_at_origin(HerglotzData::constant(c(1.0, 0.5)).unwrap())
                .unwrap(),
            GeneratorSpec::vanishing_at_origin(
                HerglotzData::rational(c(1.0, 0.0), SchwarzFunction::identity()).unwrap(),
            )
            .unwrap(),
            GeneratorSpec::vanishing_at_origin(
                HerglotzData::atomic(
                    vec![
                        Atom {
                            angle: 0.4,
                            mass: 0.5,
                        },
                        Atom {
                            angle: 3.0,
                            mass: 0.7,
                        },
                    ],
                    -0.2,
                )
                .unwrap(),
            )
            .unwrap(),
        ];
        for g in &gens {
            let q = g.q();
            let (_, dp0) = g.herglotz().eval_raw(c(0.0, 0.0));
            for k in 0..8 {
                // first-order error is |p'(0)| |z|, so scale the tolerance
                let z = Complex64::from_polar(1e-4, k as f64 * std::f64::consts::FRAC_PI_4);
                let (f, _) = g.eval_raw(z);
                assert!((f / z - q).norm() <= 2.0 * dp0.norm() * 1e-4 + 1e-12);
                let z = Complex64::from_polar(1e-7, k as f64 * std::f64::consts::FRAC_PI_4);
                let (f, _) = g.eval_raw(z);
                assert!((f / z - q).norm() <= 1e-6);
            }
        }
    }

    #[test]
    fn general_tau_vanishes_at_tau() {
        let tau = c(0.3, -0.2);
        let g = GeneratorSpec::new(
            tau,
            HerglotzData::atomic(
                vec![Atom {
                    angle: 1.0,
                    mass: 1.0,
                }],
                0.0,
            )
            .unwrap(),
        )
        .unwrap();
        let (f, _) = g.eval_raw(tau);
        assert!(f.norm() < 1e-15);
    }

    #[test]
    fn derivative_matches_central_differences() {
        let grid = SamplingGrid::new(12, 24, 0.9).unwrap();
        let cases = [
            HerglotzData::atomic(
                vec![
                    Atom {
                        angle: 0.0,
                        mass: 0.5,
                    },
                    Atom {
                        angle: 2.4,
                        mass: 1.5,
                    },
                ],
                0.3,
            )
            .unwrap(),
            HerglotzData::rational(
                c(1.2, 0.4),
                SchwarzFunction::blaschke(0.7, 2, vec![c(0.3, 0.4)]).unwrap(),
            )
            .unwrap(),
        ];
        let h = 1e-5;
        for data in &cases {
            for z in grid.points() {
                let (_, dp) = data.eval_raw(z);
                let num = (data.eval_raw(z + c(h, 0.0)).0 - data.eval_raw(z - c(h, 0.0)).0)
                    / c(2.0 * h, 0.0);
                assert!(
                    (dp - num).norm() <= 1e-6 * dp.norm().max(1.0),
                    "p' mismatch at {z}: analytic {dp}, numeric {num}"
                );
            }
        }
    }

    #[test]
    fn validate_reports_positive_real_part() {
        let grid = SamplingGrid::new(16, 64, 0.999).unwrap();
        let linear =
            GeneratorSpec::vanishing_at_origin(HerglotzData::constant(c(1.0, 0.0)).unwrap())
                .unwrap();
        let report = validate_generator(&linear, &grid);
        assert!(report.pass);
        assert_relative_eq!(report.worst_margin, 1.0, max_relative = 1e-12);

        let extremal = GeneratorSpec::vanishing_at_origin(
            HerglotzData::rational(c(1.0, 0.0), SchwarzFunction::identity()).unwrap(),
        )
        .unwrap();
        let report = validate_generator(&extremal, &grid);
        assert!(report.pass);
        assert!(report.worst_margin >= 0.0);
    }

    #[test]
    fn json_roundtrip_shapes() {
        let g = GeneratorSpec::from_json_str(
            r#"{ "tau": [0.0, 0.0],
                 "herglotz": { "atoms": [{"angle": 0.0, "mass": 1.0}], "gamma": 0.5 } }"#,
        )
        .unwrap();
        assert_eq!(g.q(), c(1.0, 0.5));

        let g = GeneratorSpec::from_json_str(r#"{ "q": [2.0, -1.0] }"#).unwrap();
        assert_eq!(g.q(), c(2.0, -1.0));

        let g = GeneratorSpec::from_json_str(
            r#"{ "q": [1.0, 0.0],
                 "omega": { "rotation_angle": 0.0, "power": 1, "zeros": [] } }"#,
        )
        .unwrap();
        let (f, _) = g.eval_raw(c(0.2, 0.0));
        assert_relative_eq!(f.re, 0.3, max_relative = 1e-14);

        assert!(GeneratorSpec::from_json_str(r#"{ "q": [0.0, 1.0] }"#).is_err());
    }

    proptest! {
        #[test]
        fn herglotz_real_part_nonnegative(
            masses in proptest::collection::vec(0.0f64..2.0, 1..4),
            angles in proptest::collection::vec(0.0f64..std::f64::consts::TAU, 4),
            gamma in -2.0f64..2.0,
            zr in -0.999f64..0.999,
            zi in -0.999f64..0.999,
        ) {
            let z = c(zr, zi);
            prop_assume!(z.norm() < 0.999);
            let atoms: Vec<Atom> = masses
                .iter()
                .zip(angles.iter())
                .map(|(&mass, &angle)| Atom { angle, mass })
                .collect();
            prop_assume!(atoms.iter().map(|a| a.mass).sum::<f64>() > 0.0 || gamma != 0.0);
            let h = HerglotzData::atomic(atoms, gamma).unwrap();
            let (p, _) = h.eval_raw(z);
            prop_assert!(p.re >= -1e-12);
        }

        #[test]
        fn blaschke_is_a_self_map(
            rot in 0.0f64..std::f64::consts::TAU,
            power in 1u32..4,
            ar in -0.9f64..0.9,
            ai in -0.9f64..0.9,
            zr in -0.999f64..0.999,
            zi in -0.999f64..0.999,
        ) {
            let a = c(ar, ai);
            prop_assume!(a.norm() < 0.95);
            let z = c(zr, zi);
            prop_assume!(z.norm() < 0.999);
            let w = SchwarzFunction::blaschke(rot, power, vec![a]).unwrap();
            let (v, _) = w.eval(z);
            prop_assert!(v.norm() < 1.0);
        }
    }
}
