//! Exact engine for Clifford algebras of real and complex quadratic spaces.
//!
//! The crate is organised in four layers, each exact (no floating point):
//!
//! * [`bits`] — sign-valued binary digits, residues modulo 8 and the
//!   three-bit triples that drive the classification.
//! * [`blades`] — sparse multivectors over a [`blades::GeneratorSpec`],
//!   with Gaussian-rational coefficients, the Clifford product, complex
//!   conjugation and the dual antiautomorphism.
//! * [`involutions`] — the inner elements `omega`, `tau`, `rho`, `theta`
//!   of an even-dimensional algebra together with their squares and the
//!   conjugation signs `s`, `s1`, `s2`, `s3`.
//! * [`classify`] — division algebras from `nu mod 8`, the n-versus-nu
//!   classification table, signature recovery from involution data and
//!   the `nu_R + 2r - 4p` shift formula.
//!
//! Everything is a pure value type: multivectors are immutable, operations
//! allocate fresh results, and all types are `Send + Sync`, so sweeps over
//! independent generator specifications can run concurrently.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod blades;
pub mod classify;
pub mod error;
pub mod involutions;

pub use bits::{bit_triple, mod8, sign_bit, BitTriple, SignBit};
pub use blades::{Coeff, GeneratorSpec, Iota, Multivector, Rational, Signature};
pub use classify::{AlgebraClass, DivisionAlgebra};
pub use error::{Error, Result};
pub use involutions::InvolutionSet;
