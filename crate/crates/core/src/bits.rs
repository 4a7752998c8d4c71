//! Sign-valued binary expansion utilities and signed arithmetic modulo 8.
//!
//! Integers are expanded either with 0/1 digits or with signs
//! `(-1)^digit`; the sign form is the canonical currency everywhere else
//! in the crate, 0/1 digits appear only inside this module.

use core::fmt;
use core::ops::{Mul, Neg};

/// A sign in `{+1, -1}`; squares to `+1` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignBit {
    Plus,
    Minus,
}

impl SignBit {
    /// The sign as an integer, `+1` or `-1`.
    pub const fn value(self) -> i8 {
        match self {
            SignBit::Plus => 1,
            SignBit::Minus => -1,
        }
    }

    /// The 0/1 digit behind the sign: `Plus -> 0`, `Minus -> 1`.
    pub const fn digit(self) -> u8 {
        match self {
            SignBit::Plus => 0,
            SignBit::Minus => 1,
        }
    }

    /// `(-1)^count`.
    pub const fn from_parity(count: u32) -> Self {
        if count.is_multiple_of(2) {
            SignBit::Plus
        } else {
            SignBit::Minus
        }
    }

    /// Sign for a set (`true`) or clear (`false`) binary digit.
    pub const fn from_bit(set: bool) -> Self {
        if set {
            SignBit::Minus
        } else {
            SignBit::Plus
        }
    }

    /// Parses `+1` / `-1`; anything else is `None`.
    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(SignBit::Plus),
            -1 => Some(SignBit::Minus),
            _ => None,
        }
    }

    pub const fn is_plus(self) -> bool {
        matches!(self, SignBit::Plus)
    }
}

impl Mul for SignBit {
    type Output = SignBit;

    fn mul(self, rhs: SignBit) -> SignBit {
        if self == rhs {
            SignBit::Plus
        } else {
            SignBit::Minus
        }
    }
}

impl Neg for SignBit {
    type Output = SignBit;

    fn neg(self) -> SignBit {
        match self {
            SignBit::Plus => SignBit::Minus,
            SignBit::Minus => SignBit::Plus,
        }
    }
}

impl fmt::Display for SignBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignBit::Plus => write!(f, "+1"),
            SignBit::Minus => write!(f, "-1"),
        }
    }
}

/// The three least significant sign bits of a residue modulo 8.
///
/// Reconstructs its residue as
/// `(1 - b0)/2 + (1 - b1) + 2 (1 - b2) (mod 8)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitTriple {
    pub b0: SignBit,
    pub b1: SignBit,
    pub b2: SignBit,
}

impl BitTriple {
    pub const fn new(b0: SignBit, b1: SignBit, b2: SignBit) -> Self {
        BitTriple { b0, b1, b2 }
    }

    /// The residue in `[0, 8)` encoded by the three signs.
    pub const fn residue(self) -> u8 {
        self.b0.digit() + 2 * self.b1.digit() + 4 * self.b2.digit()
    }
}

impl fmt::Display for BitTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.b0, self.b1, self.b2)
    }
}

/// `(-1)^{n_i}` where `n_i` is binary digit `i` of `n`.
///
/// Equal to `(-1)^{binom(n, 2^i)}` by Lucas' theorem; the two forms most
/// common in Clifford algebra signs are `sign_bit(n, 0) = (-1)^n` and
/// `sign_bit(n, 1) = (-1)^{n(n-1)/2}`.
pub fn sign_bit(n: u64, i: u32) -> SignBit {
    if i >= u64::BITS {
        return SignBit::Plus;
    }
    SignBit::from_bit((n >> i) & 1 == 1)
}

/// Residue of `n` in `[0, 8)` with the two-complement convention:
/// `mod8(n) + mod8(-n) = 0 (mod 8)`.
pub fn mod8(n: i64) -> u8 {
    n.rem_euclid(8) as u8
}

/// The three least significant sign bits of `n mod 8`.
pub fn bit_triple(n: i64) -> BitTriple {
    let r = mod8(n) as u64;
    BitTriple::new(sign_bit(r, 0), sign_bit(r, 1), sign_bit(r, 2))
}
