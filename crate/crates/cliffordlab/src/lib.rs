//! Matrix layer, verification sweeps, file formats and report types for
//! the cliffordlab engine.
//!
//! The exact arithmetic lives in `cliffordlab-core`; this crate adds the
//! complex matrix representations with their intertwiners and
//! Majorana/quaternionic reductions ([`matrep`]), the sweep engine
//! behind the `verify` command ([`verify`]), renderings of the
//! classification tables ([`render`]) and the gamma-set interchange
//! format ([`gamma_json`]).

pub mod gamma_json;
pub mod matrep;
pub mod render;
pub mod report;
pub mod tol;
pub mod verify;

pub use report::Report;
pub use tol::Tolerances;
