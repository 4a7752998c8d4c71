//! Exact Clifford arithmetic on basis blades over a generator specification.
//!
//! A [`GeneratorSpec`] fixes, per generator `j`, the base square
//! `g_j^2 = +/-1` and a field coefficient `iota_j in {1, i}`; the working
//! generators are `f_j = iota_j g_j` with effective square
//! `f_j^2 = iota_j^2 g_j^2`. A [`Multivector`] maps basis blades (subsets
//! of generators, encoded as bitmasks) to exact Gaussian-rational
//! coefficients, so every identity in the crate is checked with no
//! tolerance at all.
//!
//! Squares of blades are always reported for the element exactly as
//! constructed from the frozen spec (their natural value); cosmetic
//! rescalings such as `i * omega` are never applied internally.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bits::SignBit;
use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Exact Gaussian-rational coefficient (real and imaginary rational parts).
pub type Coeff = Complex<Rational>;

/// Widest supported generator count (blades are `u32` bitmasks).
pub const MAX_GENERATORS: u32 = 30;

pub fn coeff_zero() -> Coeff {
    Coeff::zero()
}

pub fn coeff_one() -> Coeff {
    Coeff::one()
}

/// The imaginary unit `i`.
pub fn coeff_i() -> Coeff {
    Coeff::new(Rational::zero(), Rational::one())
}

pub fn coeff_from_int(v: i64) -> Coeff {
    Coeff::new(Rational::from_integer(BigInt::from(v)), Rational::zero())
}

pub fn coeff_from_sign(s: SignBit) -> Coeff {
    coeff_from_int(s.value() as i64)
}

/// Counts of generators squaring to `+1` (`k`, spacelike) and `-1`
/// (`l`, timelike); `n = k + l` and `nu = k - l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub k: u32,
    pub l: u32,
}

impl Signature {
    pub const fn new(k: u32, l: u32) -> Self {
        Signature { k, l }
    }

    pub const fn n(&self) -> u32 {
        self.k + self.l
    }

    pub const fn nu(&self) -> i64 {
        self.k as i64 - self.l as i64
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.l)
    }
}

/// Field coefficient attached to a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Iota {
    /// `iota_j = 1`: the generator keeps its base square.
    One,
    /// `iota_j = i`: the effective square is the negated base square.
    I,
}

/// One generator: base square sign plus field coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub base_square: SignBit,
    pub iota: Iota,
}

impl Generator {
    pub fn effective_square(&self) -> SignBit {
        match self.iota {
            Iota::One => self.base_square,
            Iota::I => -self.base_square,
        }
    }
}

/// A frozen choice of generators `f_j = iota_j g_j`.
///
/// Carries the derived counts `r` (generators with `iota = i`) and `p`
/// (those among them whose base square is `+1`), and both the base and
/// the effective signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    gens: Vec<Generator>,
}

impl GeneratorSpec {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        if gens.len() as u32 > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(gens.len() as u32));
        }
        Ok(GeneratorSpec { gens })
    }

    /// All-real spec for a base signature, spacelike generators first.
    pub fn all_real(sig: Signature) -> Result<Self> {
        Self::from_masks(sig.n(), ((1u32 << sig.l) - 1) << sig.k, 0)
    }

    /// Canonical `i`-placement for sweeps: the `p` spacelike coefficients
    /// go on the lowest-index spacelike generators, the remaining `r - p`
    /// on the lowest-index timelike ones.
    pub fn canonical(base: Signature, r: u32, p: u32) -> Result<Self> {
        let (k, l) = (base.k, base.l);
        if p > r || p > k || r - p > l {
            return Err(Error::InvalidCounts { k, l, r, p });
        }
        let spacelike = if p == 0 { 0 } else { (1u32 << p) - 1 };
        let timelike = if r == p { 0 } else { ((1u32 << (r - p)) - 1) << k };
        Self::from_masks(base.n(), ((1u32 << l) - 1) << k, spacelike | timelike)
    }

    /// Builds a spec from bitmasks: bit `j` of `timelike_base` means
    /// `g_j^2 = -1`, bit `j` of `imaginary` means `iota_j = i`.
    pub fn from_masks(n: u32, timelike_base: u32, imaginary: u32) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(n));
        }
        let gens = (0..n)
            .map(|j| Generator {
                base_square: if timelike_base >> j & 1 == 1 {
                    SignBit::Minus
                } else {
                    SignBit::Plus
                },
                iota: if imaginary >> j & 1 == 1 { Iota::I } else { Iota::One },
            })
            .collect();
        Ok(GeneratorSpec { gens })
    }

    pub fn n(&self) -> u32 {
        self.gens.len() as u32
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Count of generators with `iota = i`.
    pub fn r(&self) -> u32 {
        self.gens.iter().filter(|g| g.iota == Iota::I).count() as u32
    }

    /// Count of generators with `iota = i` on a `+1` base square.
    pub fn p(&self) -> u32 {
        self.gens
            .iter()
            .filter(|g| g.iota == Iota::I && g.base_square == SignBit::Plus)
            .count() as u32
    }

    /// Bitmask of generators with `iota = i`.
    pub fn iota_mask(&self) -> u32 {
        self.gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.iota == Iota::I)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    /// Bitmask of generators with base square `-1`.
    pub fn timelike_base_mask(&self) -> u32 {
        self.gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.base_square == SignBit::Minus)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    /// Bitmask of generators with effective square `-1`.
    pub fn timelike_effective_mask(&self) -> u32 {
        self.gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.effective_square() == SignBit::Minus)
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    /// Signature of the base squares `g_j^2`.
    pub fn base_signature(&self) -> Signature {
        let l = self.timelike_base_mask().count_ones();
        Signature::new(self.n() - l, l)
    }

    /// Signature of the effective squares `f_j^2`; its spacelike count is
    /// `k_R + r - 2p`.
    pub fn effective_signature(&self) -> Signature {
        let l = self.timelike_effective_mask().count_ones();
        Signature::new(self.n() - l, l)
    }

    pub fn effective_square(&self, j: u32) -> SignBit {
        self.gens[j as usize].effective_square()
    }

    /// The same base squares with every `iota_j` reset to `1`.
    pub fn real_variant(&self) -> Self {
        GeneratorSpec {
            gens: self
                .gens
                .iter()
                .map(|g| Generator { base_square: g.base_square, iota: Iota::One })
                .collect(),
        }
    }

    pub fn zero(&self) -> Multivector {
        Multivector::zero(self.n())
    }

    pub fn unit(&self) -> Multivector {
        Multivector::unit(self.n())
    }

    /// The generator `f_j` as a unit blade.
    pub fn generator(&self, j: u32) -> Multivector {
        debug_assert!(j < self.n());
        Multivector::blade(self.n(), 1 << j, coeff_one())
    }

    /// The volume element `omega = f_1 f_2 ... f_n`.
    pub fn volume_element(&self) -> Result<Multivector> {
        if self.n() == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Multivector::blade(self.n(), (1u32 << self.n()) - 1, coeff_one()))
    }

    /// Clifford product. Bilinear extension of blade multiplication; the
    /// sign is the transposition count between the two bit patterns times
    /// the effective squares of the contracted generators.
    pub fn product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        if a.n != self.n() {
            return Err(Error::MismatchedSpec { left: a.n, right: self.n() });
        }
        if b.n != self.n() {
            return Err(Error::MismatchedSpec { left: a.n, right: b.n });
        }
        let mut terms: BTreeMap<u32, Coeff> = BTreeMap::new();
        for (&ma, ca) in &a.terms {
            for (&mb, cb) in &b.terms {
                let (mask, sign) = self.blade_mul(ma, mb);
                let contrib = ca * cb * coeff_from_sign(sign);
                accumulate(&mut terms, mask, contrib);
            }
        }
        Ok(Multivector { n: self.n(), terms })
    }

    fn blade_mul(&self, a: u32, b: u32) -> (u32, SignBit) {
        let mut sign = transposition_sign(a, b);
        let mut common = a & b;
        while common != 0 {
            let j = common.trailing_zeros();
            sign = sign * self.effective_square(j);
            common &= common - 1;
        }
        (a ^ b, sign)
    }

    /// Coefficient-wise complex conjugation with the abstract `g_j` held
    /// fixed; on the working generators, `conj(f_j) = -f_j` exactly when
    /// `iota_j = i`.
    pub fn conjugate(&self, a: &Multivector) -> Multivector {
        debug_assert_eq!(a.n, self.n());
        let iota_mask = self.iota_mask();
        let mut terms = BTreeMap::new();
        for (&mask, c) in &a.terms {
            let flips = (mask & iota_mask).count_ones();
            let c = c.conj() * coeff_from_sign(SignBit::from_parity(flips));
            accumulate(&mut terms, mask, c);
        }
        Multivector { n: a.n, terms }
    }

    /// The linear antiautomorphism with `dual(g_j) = g_j^{-1}`;
    /// coefficients are unchanged. On a blade it is the reversal times
    /// the product of the base squares, so for a unit blade of the `g_j`
    /// it coincides with the inverse.
    pub fn dual(&self, a: &Multivector) -> Multivector {
        debug_assert_eq!(a.n, self.n());
        let neg_base = self.timelike_base_mask();
        let mut terms = BTreeMap::new();
        for (&mask, c) in &a.terms {
            let x = mask.count_ones();
            let reversal = SignBit::from_parity(x * x.saturating_sub(1) / 2);
            let bases = SignBit::from_parity((mask & neg_base).count_ones());
            let c = c * coeff_from_sign(reversal * bases);
            accumulate(&mut terms, mask, c);
        }
        Multivector { n: a.n, terms }
    }

    /// Natural sign of a blade square: the sign `s` with `a * a = s`.
    ///
    /// `a` must be a single blade whose square is exactly `+1` or `-1`
    /// (coefficient a fourth root of unity); rescaled variants such as
    /// `2 omega` are rejected.
    pub fn blade_square(&self, a: &Multivector) -> Result<SignBit> {
        if a.single_blade().is_none() {
            return Err(Error::NotSingleBlade);
        }
        let sq = self.product(a, a)?;
        let unit = self.unit();
        if sq == unit {
            Ok(SignBit::Plus)
        } else if sq == unit.neg() {
            Ok(SignBit::Minus)
        } else {
            Err(Error::NotUnitSquare)
        }
    }

    /// Inverse of a single blade with nonzero coefficient.
    pub fn invert_blade(&self, a: &Multivector) -> Result<Multivector> {
        if a.single_blade().is_none() {
            return Err(Error::NotSingleBlade);
        }
        let sq = self.product(a, a)?;
        let q = sq.scalar_part();
        if !sq.is_scalar() || q.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(a.scale(&(coeff_one() / q)))
    }
}

/// `(-1)^t` where `t` is the number of transpositions needed to merge the
/// ascending generator lists of `a` and `b` into one ascending list.
fn transposition_sign(a: u32, b: u32) -> SignBit {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        let pos = low.trailing_zeros();
        swaps += (a >> (pos + 1)).count_ones();
        rest &= !low;
    }
    SignBit::from_parity(swaps)
}

fn accumulate(terms: &mut BTreeMap<u32, Coeff>, mask: u32, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.remove(&mask) {
        None => {
            terms.insert(mask, c);
        }
        Some(prev) => {
            let sum = prev + c;
            if !sum.is_zero() {
                terms.insert(mask, sum);
            }
        }
    }
}

/// A sparse, canonical (no stored zero coefficients) exact multivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    n: u32,
    terms: BTreeMap<u32, Coeff>,
}

impl Multivector {
    pub fn zero(n: u32) -> Self {
        Multivector { n, terms: BTreeMap::new() }
    }

    /// The scalar `1`.
    pub fn unit(n: u32) -> Self {
        Multivector::scalar(n, coeff_one())
    }

    pub fn scalar(n: u32, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, 0, c);
        Multivector { n, terms }
    }

    /// A single blade: the ascending product of the generators in `mask`.
    pub fn blade(n: u32, mask: u32, c: Coeff) -> Self {
        debug_assert!(n <= MAX_GENERATORS && (mask >> n) == 0);
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, mask, c);
        Multivector { n, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Coeff)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: u32) -> Coeff {
        self.terms.get(&mask).cloned().unwrap_or_else(coeff_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&0))
    }

    pub fn scalar_part(&self) -> Coeff {
        self.coeff(0)
    }

    /// `Some((mask, coeff))` when the multivector is one nonzero blade.
    pub fn single_blade(&self) -> Option<(u32, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&m, c)| (m, c))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        assert_eq!(self.n, other.n, "mismatched generator counts");
        let mut terms = self.terms.clone();
        for (&mask, c) in &other.terms {
            accumulate(&mut terms, mask, c.clone());
        }
        Multivector { n: self.n, terms }
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&coeff_from_int(-1))
    }

    pub fn scale(&self, c: &Coeff) -> Multivector {
        let mut terms = BTreeMap::new();
        for (&mask, t) in &self.terms {
            accumulate(&mut terms, mask, t * c);
        }
        Multivector { n: self.n, terms }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&mask, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "({c})")?;
            } else {
                let ids: Vec<String> = (0..32)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| alloc::format!("{}", j + 1))
                    .collect();
                write!(f, "({c}) f{{{}}}", ids.join(","))?;
            }
        }
        Ok(())
    }
}
