//! Bit-level classification of real Clifford algebras.
//!
//! The residue `nu mod 8` determines the division algebra of the
//! Wedderburn-Artin matrix form; together with `n` it fixes the matrix
//! size through the real-dimension bookkeeping `d * size^2 = 2^n`. The
//! module also recovers `nu` from involution data (`theta^2` and
//! `omega^2` or `s`), checks the real and complex bit-relation chains,
//! and evaluates the `nu_R + 2r - 4p` shift.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{bit_triple, mod8, sign_bit, BitTriple, SignBit};
use crate::blades::{GeneratorSpec, Signature};
use crate::error::{Error, Result};
use crate::involutions::InvolutionSet;

/// The five coefficient algebras of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisionAlgebra {
    R,
    C,
    H,
    /// `R + R`, written `2R`.
    DoubleR,
    /// `H + H`, written `2H`.
    DoubleH,
}

impl DivisionAlgebra {
    /// Real dimension: 1, 2, 4, 2, 8.
    pub const fn real_dim(self) -> u32 {
        match self {
            DivisionAlgebra::R => 1,
            DivisionAlgebra::C => 2,
            DivisionAlgebra::H => 4,
            DivisionAlgebra::DoubleR => 2,
            DivisionAlgebra::DoubleH => 8,
        }
    }

    pub const fn is_doubled(self) -> bool {
        matches!(self, DivisionAlgebra::DoubleR | DivisionAlgebra::DoubleH)
    }

    pub const fn label(self) -> &'static str {
        match self {
            DivisionAlgebra::R => "R",
            DivisionAlgebra::C => "C",
            DivisionAlgebra::H => "H",
            DivisionAlgebra::DoubleR => "2R",
            DivisionAlgebra::DoubleH => "2H",
        }
    }
}

impl fmt::Display for DivisionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A cell of the classification table: division algebra plus matrix size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraClass {
    pub division: DivisionAlgebra,
    /// Matrix size `s` (a power of two); for doubled algebras the size of
    /// each summand.
    pub size: u32,
    pub doubled: bool,
}

impl AlgebraClass {
    /// `d * s^2`, which must equal `2^n`.
    pub fn real_dim(&self) -> u64 {
        self.division.real_dim() as u64 * self.size as u64 * self.size as u64
    }

    /// Paper-style label: `R`, `2R`, `R(2)`, `C(4)`, ...
    pub fn grid_label(&self) -> alloc::string::String {
        if self.size == 1 {
            alloc::format!("{}", self.division)
        } else {
            alloc::format!("{}({})", self.division, self.size)
        }
    }

    /// Explicit label with the size always shown: `R(1)`, `H(2)`, ...
    pub fn label(&self) -> alloc::string::String {
        alloc::format!("{}({})", self.division, self.size)
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Division algebra from the three sign bits of `nu mod 8`.
///
/// With digit `nu_0 = 0` the algebra is central simple: `R` for
/// `bit2 = +1`, `H` otherwise. With `nu_0 = 1` and `bit1 = -1`
/// (`omega^2 = -1`) the center is complex: `C`; with `bit1 = +1` the
/// algebra doubles: `2R` for `bit2 = +1`, `2H` otherwise.
pub fn algebra_from_nu(nu: i64) -> DivisionAlgebra {
    let bits = bit_triple(nu);
    if bits.b0.is_plus() {
        if bits.b2.is_plus() {
            DivisionAlgebra::R
        } else {
            DivisionAlgebra::H
        }
    } else if !bits.b1.is_plus() {
        DivisionAlgebra::C
    } else if bits.b2.is_plus() {
        DivisionAlgebra::DoubleR
    } else {
        DivisionAlgebra::DoubleH
    }
}

/// Full classification of `Cl(k, l)`: division algebra from `nu mod 8`,
/// matrix size solved from `d * s^2 = 2^n`.
pub fn classify_signature(sig: Signature) -> AlgebraClass {
    let division = algebra_from_nu(sig.nu());
    let n = sig.n();
    let d_log2 = match division.real_dim() {
        1 => 0,
        2 => 1,
        4 => 2,
        8 => 3,
        _ => unreachable!(),
    };
    debug_assert!(n >= d_log2 && (n - d_log2).is_multiple_of(2), "bookkeeping broken for {sig}");
    let size = 1u32 << ((n - d_log2) / 2);
    AlgebraClass { division, size, doubled: division.is_doubled() }
}

/// Real-case bit relations for an even all-real spec:
/// `(nu_0, nu_1, nu_2) = (n_0, n_1 s_1, n_2 tau^2)`, checked against the
/// direct expansion of `nu`.
pub fn real_bit_relations(sig: Signature, inv: &InvolutionSet) -> Result<BitTriple> {
    if !sig.n().is_multiple_of(2) {
        return Err(Error::OddDimension(sig.n()));
    }
    let nb = bit_triple(sig.n() as i64);
    let computed = BitTriple::new(nb.b0, nb.b1 * inv.s1, nb.b2 * inv.tau_sq);
    if computed != bit_triple(sig.nu()) {
        return Err(Error::BitRelationMismatch("nu bits from (n, s1, tau^2)"));
    }
    Ok(computed)
}

/// Signature recovery: `nu_2 = n_2 theta^2`, `nu_1 = omega^2`,
/// `nu_0 = +1`, assembled to a residue modulo 8.
pub fn recover_signature(n: u32, theta_sq: SignBit, omega_sq: SignBit) -> Result<u8> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddDimension(n));
    }
    let n2 = sign_bit(n as u64, 2);
    Ok(BitTriple::new(SignBit::Plus, omega_sq, n2 * theta_sq).residue())
}

/// Signature recovery from the parity `s` instead of `omega^2`, through
/// `omega^2 = n_1 s`.
pub fn recover_signature_from_s(n: u32, theta_sq: SignBit, s: SignBit) -> Result<u8> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddDimension(n));
    }
    recover_signature(n, theta_sq, sign_bit(n as u64, 1) * s)
}

/// Complex-case bit relations. Verifies the whole chain
///
/// ```text
/// nu_2 = nu_R2 rho^2 = n_2 tau_R^2 rho^2
/// nu_1 = nu_R1 s_2   = n_1 s_1 s_2 = omega^2
/// nu_0 = nu_R0       = n_0         = +1
/// ```
///
/// against the direct expansion of the effective `nu`, and returns the
/// `nu` bits.
pub fn complex_bit_relations(spec: &GeneratorSpec, inv: &InvolutionSet) -> Result<BitTriple> {
    if !spec.n().is_multiple_of(2) {
        return Err(Error::OddDimension(spec.n()));
    }
    let nu = bit_triple(spec.effective_signature().nu());
    let nu_r = bit_triple(spec.base_signature().nu());
    let nb = bit_triple(spec.n() as i64);

    if nu.b2 != nu_r.b2 * inv.rho_sq {
        return Err(Error::BitRelationMismatch("nu2 = nu_R2 rho^2"));
    }
    if nu.b2 != nb.b2 * inv.tau_r_sq * inv.rho_sq {
        return Err(Error::BitRelationMismatch("nu2 = n2 tau_R^2 rho^2"));
    }
    if nu.b1 != nu_r.b1 * inv.s2 {
        return Err(Error::BitRelationMismatch("nu1 = nu_R1 s2"));
    }
    if nu.b1 != nb.b1 * inv.s1 * inv.s2 {
        return Err(Error::BitRelationMismatch("nu1 = n1 s1 s2"));
    }
    if nu.b1 != inv.omega_sq {
        return Err(Error::BitRelationMismatch("nu1 = omega^2"));
    }
    if !nu.b0.is_plus() || !nu_r.b0.is_plus() || !nb.b0.is_plus() {
        return Err(Error::BitRelationMismatch("nu0 = nu_R0 = n0 = +1"));
    }
    Ok(nu)
}

/// `nu = nu_R + 2r - 4p (mod 8)`.
pub fn nu_shift(nu_r: i64, r: u32, p: u32) -> Result<u8> {
    if p > r {
        return Err(Error::InvalidCounts { k: 0, l: 0, r, p });
    }
    Ok(mod8(nu_r + 2 * r as i64 - 4 * p as i64))
}

/// The triple `(a, b, c) = (n_1 n_2 nu_2, n_2 nu_2, nu_1)`.
pub fn varlamov_abc(n: u32, nu: i64) -> Result<(SignBit, SignBit, SignBit)> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddDimension(n));
    }
    let nb = bit_triple(n as i64);
    let nub = bit_triple(nu);
    Ok((nb.b1 * nb.b2 * nub.b2, nb.b2 * nub.b2, nub.b1))
}

/// One cell of the n-versus-nu table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChessboardEntry {
    pub n: u32,
    pub nu: i64,
    pub class: AlgebraClass,
}

/// The classification table for `n in [0, 7]` and every admissible `nu`
/// (36 entries); negative columns are derived through the residue rule
/// `-nu = 8 - nu` rather than stored.
pub fn chessboard() -> Vec<ChessboardEntry> {
    let mut entries = Vec::with_capacity(36);
    for n in 0..=7u32 {
        for k in 0..=n {
            let sig = Signature::new(k, n - k);
            entries.push(ChessboardEntry { n, nu: sig.nu(), class: classify_signature(sig) });
        }
    }
    entries
}

/// One vertex of the digit cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeVertex {
    pub residue: u8,
    /// Digits `(nu_2, nu_1, nu_0)`.
    pub digits: (u8, u8, u8),
    pub division: DivisionAlgebra,
}

/// The 8-vertex assignment of division algebras to `nu` digit triples.
pub fn cube() -> [CubeVertex; 8] {
    core::array::from_fn(|v| {
        let residue = v as u8;
        CubeVertex {
            residue,
            digits: (residue >> 2 & 1, residue >> 1 & 1, residue & 1),
            division: algebra_from_nu(residue as i64),
        }
    })
}
