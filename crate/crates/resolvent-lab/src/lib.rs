//! Numerical laboratory for nonlinear resolvents of holomorphic semigroup
//! generators on the unit disk.
//!
//! A generator `f(z) = (z - tau)(1 - z conj(tau)) p(z)` with `Re p >= 0`
//! drives the flow `du/dt + f(u) = 0` of holomorphic self-maps of the disk.
//! For `r > 0` the resolvent `G_r = (Id + r f)^{-1}` is a univalent self-map
//! solving `G_r + r f(G_r) = Id`. This crate evaluates such generators and
//! resolvents with exact derivatives, and verifies their geometric features
//! numerically at desk scale:
//!
//! - **generator**: Berkson-Porta data (atomic Herglotz measures or Schwarz
//!   function pairs) with analytic derivatives and a JSON schema.
//! - **resolvent**: damped Newton pointwise inversion with warm-started
//!   homotopy continuation into the disk of radius `rho(r) > 1`, plus an
//!   injectivity probe.
//! - **geometry**: the closed-form radii (univalence, distortion, covering),
//!   orders of starlikeness and strong starlikeness, squeezing and sector
//!   constants, and grid checks for disk containment of `w G'/G`, hyperbolic
//!   convexity, measure bounds, and subordination membership.
//! - **semigroup**: adaptive Dormand-Prince integration of the flow along
//!   real and rotated time rays, the iterated-resolvent reconstruction,
//!   squeezing checks, and sector-survival probes for resolvent-generated
//!   semigroups.
//! - **suite / render**: a deterministic check registry with byte-stable
//!   JSON reports, and CSV/SVG emission of image curves.
//!
//! Runnable walkthroughs live in `examples/` (one per capability); the
//! `resolvent-lab` binary exposes the same machinery as subcommands
//! (`resolve`, `suite`, `render`, `r0`, `orders`).
//!
//! ```
//! use num_complex::Complex64;
//! use resolvent_lab::{presets, resolvent::{resolve, SolverConfig}};
//!
//! let g = presets::koebe_flow(); // f(z) = z (1+z)/(1-z)
//! let eval = resolve(&g, 1.0, Complex64::new(0.5, 0.0), &SolverConfig::default()).unwrap();
//! assert!((eval.value.re - 0.2).abs() < 1e-12);
//! ```

// validation guards use `!(x > 0.0)` on purpose: unlike `x <= 0.0` the
// negated form also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod generator;
pub mod geometry;
pub mod grid;
mod ode;
pub mod presets;
pub mod render;
pub mod report;
pub mod resolvent;
pub mod semigroup;
pub mod suite;

pub use error::{Error, Result};
pub use generator::{
    generator_eval, herglotz_eval, validate_generator, GeneratorSpec, HerglotzData, SchwarzFunction,
};
pub use geometry::{
    a_of_r, find_r0, orders, radii_general, radii_resolvent, ClassParams, OrderReport, RadiiReport,
};
pub use grid::SamplingGrid;
pub use report::{CheckReport, SuiteSummary};
pub use resolvent::{resolve, resolve_continued, univalence_probe, ResolventEval, SolverConfig};
pub use semigroup::{evolve_expo, evolve_ode, FlowPoint, SectorSpec};
pub use suite::{run_suite, SuiteConfig, REGISTERED_CHECKS};

/// Parse a complex number from CLI-style text: `0.3+0.1i`, `1`, `1+i`,
/// `-0.5i`, `2e-3-4i`.
pub fn parse_complex(s: &str) -> Result<num_complex::Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::invalid("complex literal", "empty string"));
    }
    let bad = || Error::invalid("complex literal", format!("cannot parse `{s}`"));
    // locate a +/- separating real and imaginary parts (not leading, not
    // following an exponent marker)
    let bytes = t.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i] as char;
        if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
            split = Some(i);
            break;
        }
    }
    let parse_imag_coeff = |part: &str| -> Result<f64> {
        match part {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => other.parse::<f64>().map_err(|_| bad()),
        }
    };
    if let Some(stripped) = t.strip_suffix(['i', 'j']) {
        match split {
            Some(i) => {
                let re: f64 = t[..i].parse().map_err(|_| bad())?;
                let im = parse_imag_coeff(&stripped[i..])?;
                Ok(num_complex::Complex64::new(re, im))
            }
            None => Ok(num_complex::Complex64::new(
                0.0,
                parse_imag_coeff(stripped)?,
            )),
        }
    } else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        Ok(num_complex::Complex64::new(re, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::parse_complex;
    use num_complex::Complex64;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.3+0.1i").unwrap(), Complex64::new(0.3, 0.1));
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("1+i").unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(parse_complex("2-i").unwrap(), Complex64::new(2.0, -1.0));
        assert_eq!(parse_complex("-0.5i").unwrap(), Complex64::new(0.0, -0.5));
        assert_eq!(
            parse_complex("1e-3-4i").unwrap(),
            Complex64::new(1e-3, -4.0)
        );
        assert_eq!(parse_complex(" 1 + 2i ").unwrap(), Complex64::new(1.0, 2.0));
        assert!(parse_complex("banana").is_err());
        assert!(parse_complex("").is_err());
    }
}
