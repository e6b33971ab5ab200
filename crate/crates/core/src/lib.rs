//! Smooth `(Z/nZ)²` Galois covers of the projective plane branched on a
//! complete quadrangle.
//!
//! The base surface `Y` is the plane blown up in four general points, a Del
//! Pezzo surface of degree 5. The branch divisor is the union of the six
//! strict transforms of the quadrangle lines and the four exceptional curves.
//! A cover is given by a six-tuple of loop images in `(Z/nZ)²`; from it this
//! crate derives
//!
//! * admissibility (smoothness, branching exactly on the ten curves) and the
//!   exhaustive list of admissible tuples ([`covers`]),
//! * the action of `GL(2, Z/n) × S₅` on tuples and its orbits ([`symmetry`]),
//! * eigensheaves, `h⁰`, `K²`, `χ`, `p_g`, `q` and the cover equations
//!   ([`sheaves`], [`interpolation`]),
//! * the canonical system of the regular surface: fixed part, base points and
//!   their infinitely near types, and the degree certificate ([`canonical`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod covers;
mod error;
pub mod field;
pub mod interpolation;
pub mod picard;
pub mod rational;
pub mod sheaves;
pub mod snf;
pub mod symmetry;

pub use error::Error;
pub use field::{FMat12, FMat2, FScalar, FVec2, Modulus};
pub use covers::SixTuple;
pub use picard::{CurveLabel, DivClass};

pub type Result<T, E = Error> = core::result::Result<T, E>;
