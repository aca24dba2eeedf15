//! Bundled generators used by the default suite and the verification tests.

use num_complex::Complex64;

use crate::generator::{Atom, GeneratorSpec, HerglotzData, SchwarzFunction};

/// Linear generator `f(z) = q z` (constant Herglotz part `p == q`).
pub fn linear(q: Complex64) -> GeneratorSpec {
    GeneratorSpec::vanishing_at_origin(
        HerglotzData::constant(q).expect("Re q > 0 required for the linear preset"),
    )
    .expect("tau = 0 is valid")
}

/// The half-plane extremal generator `f(z) = z (q + conj(q) z)/(1 - z)`;
/// for `q = 1` this is `z (1+z)/(1-z)`, whose flow preserves the level sets
/// of the Koebe function.
pub fn koebe_flow_for(q: Complex64) -> GeneratorSpec {
    GeneratorSpec::vanishing_at_origin(
        HerglotzData::rational(q, SchwarzFunction::identity())
            .expect("Re q > 0 required for the half-plane preset"),
    )
    .expect("tau = 0 is valid")
}

/// `koebe_flow_for` with `q = 1`.
pub fn koebe_flow() -> GeneratorSpec {
    koebe_flow_for(Complex64::new(1.0, 0.0))
}

/// Three fixed atomic-measure generators (committed constants, so runs are
/// reproducible). Their `q = f'(0)` values are `1`, `1 + 0.2i`, `1 - 0.1i`.
pub fn atomic_fixtures() -> Vec<(&'static str, GeneratorSpec)> {
    let a = GeneratorSpec::vanishing_at_origin(
        HerglotzData::atomic(
            vec![
                Atom {
                    angle: 0.0,
                    mass: 0.6,
                },
                Atom {
                    angle: 2.0944,
                    mass: 0.25,
                },
                Atom {
                    angle: 4.5,
                    mass: 0.15,
                },
            ],
            0.0,
        )
        .expect("fixture a is valid"),
    )
    .expect("tau = 0");
    let b = GeneratorSpec::vanishing_at_origin(
        HerglotzData::atomic(
            vec![
                Atom {
                    angle: 1.0,
                    mass: 0.5,
                },
                Atom {
                    angle: 3.6,
                    mass: 0.5,
                },
            ],
            0.2,
        )
        .expect("fixture b is valid"),
    )
    .expect("tau = 0");
    let c = GeneratorSpec::vanishing_at_origin(
        HerglotzData::atomic(
            vec![
                Atom {
                    angle: 0.5,
                    mass: 0.3,
                },
                Atom {
                    angle: 2.5,
                    mass: 0.4,
                },
                Atom {
                    angle: 5.8,
                    mass: 0.3,
                },
            ],
            -0.1,
        )
        .expect("fixture c is valid"),
    )
    .expect("tau = 0");
    vec![("atomic_a", a), ("atomic_b", b), ("atomic_c", c)]
}
