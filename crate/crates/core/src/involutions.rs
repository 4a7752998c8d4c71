//! Inner elements of the fundamental involutions for even-dimensional
//! algebras.
//!
//! For an even number of generators the algebra is central simple and
//! the involutions induced by `f -> -f`, `f -> dual(f)`, `f -> conj(f)`
//! and `f -> f^{-1}` are all inner; this module constructs their
//! representatives `omega`, `tau`, `rho` and `theta = tau rho`, computes
//! their natural squares and the conjugation signs
//!
//! ```text
//! omega tau omega^-1 = s1 tau      omega rho omega^-1 = s2 rho
//! rho   tau rho^-1   = s3 tau      omega theta omega^-1 = s theta
//! ```
//!
//! Odd dimension is rejected outright: the inner elements need not exist
//! there.

use crate::bits::SignBit;
use crate::blades::{GeneratorSpec, Multivector};
use crate::error::{Error, Result};

/// The four involution elements of a spec with their squares and signs.
///
/// `tau_r_sq` is the square the dual element would have with every
/// `iota_j` reset to `1` (same base squares); the factorizations
/// `tau^2 = tau_r^2 s3` and `theta^2 = tau_r^2 rho^2` relate it to the
/// complex-case elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSet {
    pub omega: Multivector,
    pub tau: Multivector,
    pub rho: Multivector,
    pub theta: Multivector,
    pub omega_sq: SignBit,
    pub tau_sq: SignBit,
    pub rho_sq: SignBit,
    pub theta_sq: SignBit,
    pub s: SignBit,
    pub s1: SignBit,
    pub s2: SignBit,
    pub s3: SignBit,
    pub tau_r_sq: SignBit,
}

fn require_even(spec: &GeneratorSpec) -> Result<()> {
    if spec.n() == 0 {
        return Err(Error::ZeroDimension);
    }
    if !spec.n().is_multiple_of(2) {
        return Err(Error::OddDimension(spec.n()));
    }
    Ok(())
}

/// Blade with the generators of `mask` in ascending order, unit coefficient.
fn unit_blade(spec: &GeneratorSpec, mask: u32) -> Multivector {
    Multivector::blade(spec.n(), mask, crate::blades::coeff_one())
}

/// The element `tau` with `tau f_j tau^-1 = dual(f_j)`.
///
/// For base counts `k_R, l_R` both even it is the product of the timelike
/// base generators, for both odd the product of the spacelike ones; the
/// index set comes from the base squares and is then promoted to
/// `f`-blades.
pub fn build_tau(spec: &GeneratorSpec) -> Result<Multivector> {
    require_even(spec)?;
    let base = spec.base_signature();
    let mask = if base.l.is_multiple_of(2) {
        spec.timelike_base_mask()
    } else {
        !spec.timelike_base_mask() & ((1u32 << spec.n()) - 1)
    };
    Ok(unit_blade(spec, mask))
}

/// The element `rho` with `rho f_j rho^-1 = conj(f_j)`.
///
/// Product of the `iota = i` generators for `r` even, of the complementary
/// set for `r` odd; the empty product is the unit.
pub fn build_rho(spec: &GeneratorSpec) -> Result<Multivector> {
    require_even(spec)?;
    let mask = if spec.r().is_multiple_of(2) {
        spec.iota_mask()
    } else {
        !spec.iota_mask() & ((1u32 << spec.n()) - 1)
    };
    Ok(unit_blade(spec, mask))
}

/// The element `theta = tau rho` with `theta f_j theta^-1 = f_j^{-1}`.
///
/// For an all-real spec `rho` is the unit and `theta` coincides with
/// `tau`.
pub fn build_theta(spec: &GeneratorSpec) -> Result<Multivector> {
    let tau = build_tau(spec)?;
    let rho = build_rho(spec)?;
    spec.product(&tau, &rho)
}

/// The sign `s` with `u v u^-1 = s v` for blades `u`, `v`.
pub fn conjugation_sign(
    spec: &GeneratorSpec,
    u: &Multivector,
    v: &Multivector,
) -> Result<SignBit> {
    let u_inv = spec.invert_blade(u)?;
    let w = spec.product(&spec.product(u, v)?, &u_inv)?;
    if &w == v {
        Ok(SignBit::Plus)
    } else if w == v.neg() {
        Ok(SignBit::Minus)
    } else {
        Err(Error::NotProportional)
    }
}

/// Builds the full [`InvolutionSet`] and verifies the three defining
/// actions on every generator before returning.
pub fn analyze(spec: &GeneratorSpec) -> Result<InvolutionSet> {
    require_even(spec)?;
    let omega = spec.volume_element()?;
    let tau = build_tau(spec)?;
    let rho = build_rho(spec)?;
    let theta = spec.product(&tau, &rho)?;

    for j in 0..spec.n() {
        let f = spec.generator(j);
        let check = |u: &Multivector, expect: &Multivector, name: &'static str| -> Result<()> {
            let w = spec.product(&spec.product(u, &f)?, &spec.invert_blade(u)?)?;
            if &w == expect {
                Ok(())
            } else {
                Err(Error::ActionMismatch { involution: name, generator: j })
            }
        };
        check(&omega, &f.neg(), "omega")?;
        check(&tau, &spec.dual(&f), "tau")?;
        check(&rho, &spec.conjugate(&f), "rho")?;
        check(&theta, &spec.invert_blade(&f)?, "theta")?;
    }

    let real = spec.real_variant();
    let tau_r = build_tau(&real)?;

    Ok(InvolutionSet {
        omega_sq: spec.blade_square(&omega)?,
        tau_sq: spec.blade_square(&tau)?,
        rho_sq: spec.blade_square(&rho)?,
        theta_sq: spec.blade_square(&theta)?,
        s1: conjugation_sign(spec, &omega, &tau)?,
        s2: conjugation_sign(spec, &omega, &rho)?,
        s3: conjugation_sign(spec, &rho, &tau)?,
        s: conjugation_sign(spec, &omega, &theta)?,
        tau_r_sq: real.blade_square(&tau_r)?,
        omega,
        tau,
        rho,
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{bit_triple, mod8};
    use crate::blades::{coeff_one, Signature};

    /// The worked two-generator example: base (1,1) with `iota = (i, 1)`,
    /// effective signature (0,2).
    fn quaternion_example() -> GeneratorSpec {
        GeneratorSpec::from_masks(2, 0b10, 0b01).unwrap()
    }

    #[test]
    fn tau_examples() {
        let spec = GeneratorSpec::all_real(Signature::new(0, 2)).unwrap();
        let tau = build_tau(&spec).unwrap();
        assert_eq!(tau, Multivector::blade(2, 0b11, coeff_one()));
        assert_eq!(spec.blade_square(&tau).unwrap(), SignBit::Minus);

        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        let tau = build_tau(&spec).unwrap();
        assert_eq!(tau, Multivector::blade(2, 0b01, coeff_one()));
        assert_eq!(spec.blade_square(&tau).unwrap(), SignBit::Plus);

        let spec = GeneratorSpec::all_real(Signature::new(2, 2)).unwrap();
        let tau = build_tau(&spec).unwrap();
        assert_eq!(tau, Multivector::blade(4, 0b1100, coeff_one()));
    }

    #[test]
    fn rho_examples() {
        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        assert_eq!(build_rho(&spec).unwrap(), spec.unit());

        let spec = quaternion_example();
        assert_eq!(
            build_rho(&spec).unwrap(),
            Multivector::blade(2, 0b10, coeff_one())
        );

        let spec = GeneratorSpec::from_masks(2, 0, 0b11).unwrap();
        assert_eq!(
            build_rho(&spec).unwrap(),
            Multivector::blade(2, 0b11, coeff_one())
        );
    }

    #[test]
    fn theta_examples() {
        let spec = GeneratorSpec::all_real(Signature::new(2, 2)).unwrap();
        assert_eq!(build_theta(&spec).unwrap(), build_tau(&spec).unwrap());

        let spec = quaternion_example();
        let theta = build_theta(&spec).unwrap();
        assert_eq!(theta, Multivector::blade(2, 0b11, coeff_one()));
        assert_eq!(spec.blade_square(&theta).unwrap(), SignBit::Minus);

        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        let theta = build_theta(&spec).unwrap();
        assert_eq!(theta, Multivector::blade(2, 0b01, coeff_one()));
        assert_eq!(spec.blade_square(&theta).unwrap(), SignBit::Plus);
    }

    #[test]
    fn conjugation_sign_examples() {
        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        let omega = spec.volume_element().unwrap();
        assert_eq!(
            conjugation_sign(&spec, &omega, &omega).unwrap(),
            SignBit::Plus
        );
        let tau = build_tau(&spec).unwrap();
        assert_eq!(
            conjugation_sign(&spec, &omega, &tau).unwrap(),
            SignBit::Minus
        );

        let spec = quaternion_example();
        let tau = build_tau(&spec).unwrap();
        let rho = build_rho(&spec).unwrap();
        assert_eq!(
            conjugation_sign(&spec, &rho, &tau).unwrap(),
            SignBit::Minus
        );
    }

    #[test]
    fn conjugation_sign_rejects_non_blades() {
        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        let sum = spec.generator(0).add(&spec.unit());
        let omega = spec.volume_element().unwrap();
        assert!(conjugation_sign(&spec, &sum, &omega).is_err());
        assert_eq!(
            conjugation_sign(&spec, &omega, &sum),
            Err(Error::NotProportional)
        );
    }

    #[test]
    fn analyze_examples() {
        let spec = GeneratorSpec::all_real(Signature::new(1, 1)).unwrap();
        let inv = analyze(&spec).unwrap();
        assert_eq!(inv.s1, SignBit::Minus);
        assert_eq!(inv.tau_sq, SignBit::Plus);
        assert_eq!(inv.omega_sq, SignBit::Plus);

        let spec = quaternion_example();
        let inv = analyze(&spec).unwrap();
        assert_eq!(inv.s, SignBit::Plus);
        assert_eq!(inv.theta_sq, SignBit::Minus);
        assert_eq!(inv.omega_sq, SignBit::Minus);
        assert_eq!(inv.tau_sq, SignBit::Minus);
        assert_eq!(inv.rho_sq, SignBit::Minus);
        assert_eq!(inv.tau_r_sq, SignBit::Plus);
        assert_eq!(inv.s3, SignBit::Minus);

        let spec = GeneratorSpec::all_real(Signature::new(3, 1)).unwrap();
        let inv = analyze(&spec).unwrap();
        assert_eq!(inv.omega_sq, SignBit::Minus);
        assert_eq!(inv.tau_sq, SignBit::Minus);
    }

    #[test]
    fn odd_dimension_rejected() {
        let spec = GeneratorSpec::all_real(Signature::new(2, 1)).unwrap();
        assert_eq!(build_tau(&spec), Err(Error::OddDimension(3)));
        assert_eq!(build_rho(&spec), Err(Error::OddDimension(3)));
        assert!(analyze(&spec).is_err());
    }

    fn admissible(base: Signature) -> impl Iterator<Item = (u32, u32)> {
        let (k, l) = (base.k, base.l);
        (0..=k).flat_map(move |p| (0..=l).map(move |q| (p + q, p)))
    }

    #[test]
    fn appendix_identities_small_sweep() {
        for n in [2u32, 4] {
            for k in 0..=n {
                let base = Signature::new(k, n - k);
                for (r, p) in admissible(base) {
                    let spec = GeneratorSpec::canonical(base, r, p).unwrap();
                    let inv = analyze(&spec).unwrap();
                    let label = format!("base {base}, r = {r}, p = {p}");

                    assert_eq!(inv.s, inv.s1 * inv.s2, "s = s1 s2: {label}");
                    assert_eq!(inv.s2, SignBit::from_parity(r), "s2 = (-1)^r: {label}");
                    assert_eq!(inv.tau_sq, inv.tau_r_sq * inv.s3, "tau^2: {label}");
                    assert_eq!(inv.theta_sq, inv.tau_r_sq * inv.rho_sq, "theta^2: {label}");

                    // rho^2 = (bit 1 of t) * s3 with t = r or n - r.
                    let t = if r % 2 == 0 { r } else { n - r };
                    assert_eq!(
                        inv.rho_sq,
                        crate::bits::sign_bit(t as u64, 1) * inv.s3,
                        "rho^2: {label}"
                    );

                    // Mirror property for the (omega, tau, rho) pairs.
                    for (u, v, sign) in [
                        (&inv.omega, &inv.tau, inv.s1),
                        (&inv.omega, &inv.rho, inv.s2),
                        (&inv.rho, &inv.tau, inv.s3),
                    ] {
                        assert_eq!(conjugation_sign(&spec, v, u).unwrap(), sign, "{label}");
                    }

                    // Proposition bits: nu2 = n2 theta^2, nu1 = omega^2.
                    let nu = bit_triple(spec.effective_signature().nu());
                    let nb = bit_triple(n as i64);
                    assert_eq!(nu.b2, nb.b2 * inv.theta_sq, "{label}");
                    assert_eq!(nu.b1, inv.omega_sq, "{label}");
                    assert_eq!(nu.b1, nb.b1 * inv.s, "{label}");

                    // Shift formula against direct counting.
                    let nu_r = spec.base_signature().nu();
                    assert_eq!(
                        mod8(spec.effective_signature().nu()),
                        mod8(nu_r + 2 * r as i64 - 4 * p as i64),
                        "{label}"
                    );
                }
            }
        }
    }

    use proptest::prelude::*;

    proptest::proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        /// The sign identities hold for arbitrary `i`-placements, not
        /// just the canonical ones.
        #[test]
        fn identities_hold_for_random_placements(
            (n, base_mask, iota_mask) in (1u32..=4).prop_flat_map(|m| {
                let n = 2 * m;
                (Just(n), 0..1u32 << n, 0..1u32 << n)
            })
        ) {
            let spec = GeneratorSpec::from_masks(n, base_mask, iota_mask).unwrap();
            let inv = analyze(&spec).unwrap();
            prop_assert_eq!(inv.s, inv.s1 * inv.s2);
            prop_assert_eq!(inv.s2, SignBit::from_parity(spec.r()));
            prop_assert_eq!(inv.tau_sq, inv.tau_r_sq * inv.s3);
            prop_assert_eq!(inv.theta_sq, inv.tau_r_sq * inv.rho_sq);

            let nu = bit_triple(spec.effective_signature().nu());
            let nb = bit_triple(n as i64);
            prop_assert_eq!(nu.b2, nb.b2 * inv.theta_sq);
            prop_assert_eq!(nu.b1, inv.omega_sq);
            prop_assert_eq!(
                mod8(spec.effective_signature().nu()),
                mod8(spec.base_signature().nu() + 2 * spec.r() as i64 - 4 * spec.p() as i64)
            );
        }
    }
}
