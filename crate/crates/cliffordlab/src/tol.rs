//! Numerical tolerances for the matrix layer.

/// Base tolerance for construction and identity checks; matrices carry
/// exact `+/-1` and `+/-i` entries, so the slack is minimal.
pub const BASE_TOL: f64 = 1e-12;

/// Tolerance on reduction outputs: one nullspace solve plus a basis
/// change lose some precision.
pub const REDUCE_TOL: f64 = 1e-10;

/// Relative rank threshold: singular values below `RANK_REL_TOL` times
/// the largest are treated as zero.
pub const RANK_REL_TOL: f64 = 1e-9;

/// Environment variable overriding the base tolerance.
pub const TOL_ENV_VAR: &str = "CLIFFORDLAB_TOL";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub base: f64,
    pub reduce: f64,
    pub rank_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { base: BASE_TOL, reduce: REDUCE_TOL, rank_rel: RANK_REL_TOL }
    }
}

impl Tolerances {
    /// Default tolerances, with the base (and the derived reduction
    /// tolerance, kept at 100x base) overridden by `CLIFFORDLAB_TOL`
    /// when set to a positive float.
    pub fn from_env() -> Self {
        match std::env::var(TOL_ENV_VAR).ok().and_then(|v| v.parse::<f64>().ok()) {
            Some(base) if base > 0.0 => {
                Tolerances { base, reduce: base * 100.0, rank_rel: RANK_REL_TOL }
            }
            _ => Tolerances::default(),
        }
    }
}
