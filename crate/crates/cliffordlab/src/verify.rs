//! Exhaustive verification sweeps over the exact blade layer, the
//! classification tables and (optionally) the matrix layer, producing a
//! [`Report`] with one named record per identity.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use cliffordlab_core::bits::{bit_triple, mod8, sign_bit, SignBit};
use cliffordlab_core::blades::{
    coeff_from_int, GeneratorSpec, Multivector, Rational, Signature,
};
use cliffordlab_core::classify::{
    algebra_from_nu, chessboard, classify_signature, complex_bit_relations, cube, nu_shift,
    real_bit_relations, recover_signature, recover_signature_from_s, varlamov_abc,
    DivisionAlgebra,
};
use cliffordlab_core::involutions::{analyze, conjugation_sign};
use cliffordlab_core::Coeff;

use crate::matrep::{
    antilinear_oracle, complex_split_demo, intertwiners, reduce, trautman_check, MatrixRep,
    ReductionKind,
};
use crate::render::table_csv;
use crate::report::Report;
use crate::tol::Tolerances;

/// Fixed default seed for the randomized placements and samples.
pub const DEFAULT_SEED: u64 = 0xC11F;

/// Widest blade-layer sweep; the matrix layer stops at 8.
pub const MAX_BLADE_N: u32 = 12;
pub const MAX_MATRIX_N: u32 = 8;

pub const GOLDEN_TABLE_CSV: &str = include_str!("data/table1_golden.csv");

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: u32,
    pub with_matrix: bool,
    pub seed: u64,
    pub tol: Tolerances,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 8,
            with_matrix: false,
            seed: DEFAULT_SEED,
            tol: Tolerances::default(),
        }
    }
}

struct Acc {
    anchor: &'static str,
    checked: u64,
    failures: u64,
    first_failure: Option<String>,
    worst: Option<f64>,
}

#[derive(Default)]
struct Sweep {
    accs: BTreeMap<&'static str, Acc>,
}

impl Sweep {
    fn hit(&mut self, name: &'static str, anchor: &'static str, ok: bool, detail: &dyn Fn() -> String) {
        self.hit_dev(name, anchor, ok, None, detail);
    }

    fn hit_dev(
        &mut self,
        name: &'static str,
        anchor: &'static str,
        ok: bool,
        value: Option<f64>,
        detail: &dyn Fn() -> String,
    ) {
        let acc = self.accs.entry(name).or_insert(Acc {
            anchor,
            checked: 0,
            failures: 0,
            first_failure: None,
            worst: None,
        });
        acc.checked += 1;
        if let Some(v) = value {
            acc.worst = Some(acc.worst.map_or(v, |w: f64| w.max(v)));
        }
        if !ok {
            acc.failures += 1;
            if acc.first_failure.is_none() {
                acc.first_failure = Some(detail());
            }
        }
    }

    fn into_report(self, report: &mut Report) {
        for (name, acc) in self.accs {
            let mut details = json!({
                "checked": acc.checked,
                "failures": acc.failures,
            });
            if let Some(worst) = acc.worst {
                details["worst_deviation"] = json!(worst);
            }
            if let Some(first) = &acc.first_failure {
                details["first_failure"] = json!(first);
            }
            report.push(name, acc.anchor, acc.failures == 0, details);
        }
    }
}

/// Base signatures with `k + l = n`.
fn base_signatures(n: u32) -> impl Iterator<Item = Signature> {
    (0..=n).map(move |k| Signature::new(k, n - k))
}

/// Admissible `(r, p)` for a base signature: `p <= k` and `r - p <= l`.
fn admissible_rp(base: Signature) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in 0..=base.k {
        for q in 0..=base.l {
            out.push((p + q, p));
        }
    }
    out
}

/// Canonical plus a couple of randomized `i`-placements for a config.
fn placements(
    base: Signature,
    r: u32,
    p: u32,
    rng: &mut ChaCha8Rng,
    extra: usize,
) -> Vec<GeneratorSpec> {
    let mut specs = vec![GeneratorSpec::canonical(base, r, p).expect("admissible config")];
    for _ in 0..extra {
        let spacelike = sample(rng, base.k as usize, p as usize);
        let timelike = sample(rng, base.l as usize, (r - p) as usize);
        let mut mask = 0u32;
        for idx in spacelike.iter() {
            mask |= 1 << idx;
        }
        for idx in timelike.iter() {
            mask |= 1 << (base.k as usize + idx);
        }
        let timelike_base = ((1u32 << base.l) - 1) << base.k;
        specs.push(
            GeneratorSpec::from_masks(base.n(), timelike_base, mask).expect("mask in range"),
        );
    }
    specs
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    let part = |rng: &mut ChaCha8Rng| {
        Rational::new(
            num_bigint::BigInt::from(rng.random_range(-5i64..=5)),
            num_bigint::BigInt::from(rng.random_range(1i64..=3)),
        )
    };
    Coeff::new(part(rng), part(rng))
}

fn random_mv(rng: &mut ChaCha8Rng, n: u32) -> Multivector {
    let mut mv = Multivector::zero(n);
    for _ in 0..3 {
        let mask = rng.random_range(0..1u32 << n);
        mv = mv.add(&Multivector::blade(n, mask, random_coeff(rng)));
    }
    mv
}

fn random_spec(rng: &mut ChaCha8Rng, n: u32) -> GeneratorSpec {
    GeneratorSpec::from_masks(
        n,
        rng.random_range(0..1u32 << n),
        rng.random_range(0..1u32 << n),
    )
    .expect("n in range")
}

/// Exact parities of `binom(n, 2^i)` for all `n < 2^16`, `i < 16`, by
/// rolling the Pascal triangle over GF(2), checked against the direct
/// binary digits.
fn pascal_parity_sweep(sweep: &mut Sweep) {
    const ANCHOR: &str = "(-1)^binom(n, 2^i) = (-1)^(digit i of n) for n < 2^16, i < 16";
    const N: usize = 1 << 16;
    const WORDS: usize = N / 64;
    let mut row = vec![0u64; WORDS];
    row[0] = 1;
    let mut checked = 0u64;
    let mut failures = 0u64;
    let mut first: Option<String> = None;
    for n in 0..N {
        for i in 0..16u32 {
            let k = 1usize << i;
            let odd = k < N && (row[k / 64] >> (k % 64)) & 1 == 1;
            let lucas = SignBit::from_parity(odd as u32);
            let digit = sign_bit(n as u64, i);
            checked += 1;
            if lucas != digit {
                failures += 1;
                first.get_or_insert_with(|| format!("n = {n}, i = {i}"));
            }
        }
        // row(n+1) = row(n) xor (row(n) shifted one position up).
        let mut carry = 0u64;
        for word in row.iter_mut() {
            let shifted = (*word << 1) | carry;
            carry = *word >> 63;
            *word ^= shifted;
        }
    }
    sweep.hit_dev("lucas_bits_pascal_parity", ANCHOR, failures == 0, None, &|| {
        format!("{failures} of {checked} pairs failed, first at {first:?}")
    });
}

fn exact_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

fn bits_checks(sweep: &mut Sweep) {
    pascal_parity_sweep(sweep);

    for n in 0..256u64 {
        for i in 0..8u32 {
            let odd = exact_binomial(n, 1 << i) % 2u8 == BigUint::one();
            sweep.hit(
                "lucas_bits_bigint_subrange",
                "same identity with literal big-integer binomials, n < 2^8",
                SignBit::from_parity(odd as u32) == sign_bit(n, i),
                &|| format!("n = {n}, i = {i}"),
            );
        }
    }

    for n in 0..=1000u64 {
        let ok0 = sign_bit(n, 0) == SignBit::from_parity((n % 2) as u32);
        let ok1 = sign_bit(n, 1) == SignBit::from_parity((n * n.saturating_sub(1) / 2 % 2) as u32);
        sweep.hit(
            "sign_bit_parity_formulas",
            "(-1)^n and (-1)^(n(n-1)/2) are the sign bits 0 and 1",
            ok0 && ok1,
            &|| format!("n = {n}"),
        );
    }

    for n in -1000i64..=1000 {
        sweep.hit(
            "mod8_two_complement",
            "mod8(n) + mod8(-n) = 0 (mod 8)",
            (mod8(n) + mod8(-n)).is_multiple_of(8),
            &|| format!("n = {n}"),
        );
        sweep.hit(
            "bit_triple_reconstruction",
            "x = (1-b0)/2 + (1-b1) + 2(1-b2) (mod 8)",
            bit_triple(n).residue() == mod8(n),
            &|| format!("n = {n}"),
        );
    }
}

fn blade_structure_checks(sweep: &mut Sweep, max_n: u32, rng: &mut ChaCha8Rng) {
    for n in (2..=max_n.min(6)).step_by(2) {
        for _ in 0..12 {
            let spec = random_spec(rng, n);
            let (a, b, c) = (random_mv(rng, n), random_mv(rng, n), random_mv(rng, n));
            let ab_c = spec.product(&spec.product(&a, &b).unwrap(), &c).unwrap();
            let a_bc = spec.product(&a, &spec.product(&b, &c).unwrap()).unwrap();
            sweep.hit(
                "product_associativity",
                "(a b) c = a (b c) on random exact multivectors",
                ab_c == a_bc,
                &|| format!("n = {n}"),
            );

            let dual_ab = spec.dual(&spec.product(&a, &b).unwrap());
            let dual_ba = spec.product(&spec.dual(&b), &spec.dual(&a)).unwrap();
            sweep.hit(
                "dual_antiautomorphism",
                "dual(a b) = dual(b) dual(a) and dual(dual(a)) = a",
                dual_ab == dual_ba && spec.dual(&spec.dual(&a)) == a,
                &|| format!("n = {n}"),
            );

            let conj_ab = spec.conjugate(&spec.product(&a, &b).unwrap());
            let conj_prod = spec
                .product(&spec.conjugate(&a), &spec.conjugate(&b))
                .unwrap();
            sweep.hit(
                "conjugate_ring_map",
                "conj(a b) = conj(a) conj(b) and conj(conj(a)) = a",
                conj_ab == conj_prod && spec.conjugate(&spec.conjugate(&a)) == a,
                &|| format!("n = {n}"),
            );
        }
    }
}

/// One involution-identity pass over a spec.
fn involution_checks(sweep: &mut Sweep, spec: &GeneratorSpec) {
    let n = spec.n();
    let base = spec.base_signature();
    let (r, p) = (spec.r(), spec.p());
    let label = || format!("base ({}, {}), r = {r}, p = {p}", base.k, base.l);

    let inv = match analyze(spec) {
        Ok(inv) => inv,
        Err(err) => {
            for name in [
                "omega_grade_involution",
                "tau_dual_action",
                "rho_conjugation_action",
                "theta_inverse_action",
            ] {
                sweep.hit(name, "defining involution actions", false, &|| {
                    format!("{}: {err}", label())
                });
            }
            return;
        }
    };

    // Defining actions, generator by generator.
    for j in 0..n {
        let f = spec.generator(j);
        let act = |u: &Multivector| {
            spec.product(
                &spec.product(u, &f).unwrap(),
                &spec.invert_blade(u).unwrap(),
            )
            .unwrap()
        };
        sweep.hit(
            "omega_grade_involution",
            "omega f omega^-1 = -f",
            act(&inv.omega) == f.neg(),
            &|| format!("{}, generator {j}", label()),
        );
        sweep.hit(
            "tau_dual_action",
            "tau f tau^-1 = dual(f)",
            act(&inv.tau) == spec.dual(&f),
            &|| format!("{}, generator {j}", label()),
        );
        sweep.hit(
            "rho_conjugation_action",
            "rho f rho^-1 = conj(f)",
            act(&inv.rho) == spec.conjugate(&f),
            &|| format!("{}, generator {j}", label()),
        );
        sweep.hit(
            "theta_inverse_action",
            "theta f theta^-1 = f^-1",
            act(&inv.theta) == spec.invert_blade(&f).unwrap(),
            &|| format!("{}, generator {j}", label()),
        );
    }

    let nu = spec.effective_signature().nu();
    let nu_bits = bit_triple(nu);
    let n_bits = bit_triple(n as i64);

    sweep.hit(
        "volume_square_nu_bit",
        "omega^2 = (-1)^binom(nu, 2)",
        inv.omega_sq == nu_bits.b1,
        &label,
    );
    sweep.hit("s_eq_s1_s2", "s = s1 s2", inv.s == inv.s1 * inv.s2, &label);
    sweep.hit(
        "s2_eq_minus1_pow_r",
        "s2 = (-1)^r",
        inv.s2 == SignBit::from_parity(r),
        &label,
    );
    sweep.hit(
        "tau_sq_factorization",
        "tau^2 = tau_R^2 s3",
        inv.tau_sq == inv.tau_r_sq * inv.s3,
        &label,
    );
    sweep.hit(
        "theta_sq_factorization",
        "theta^2 = tau_R^2 rho^2",
        inv.theta_sq == inv.tau_r_sq * inv.rho_sq,
        &label,
    );

    // Closed form for rho^2, both the t-form and the (r, p) case split.
    let t = if r % 2 == 0 { r } else { n - r };
    let t_form = sign_bit(t as u64, 1) * inv.s3;
    let nu_r_bits = bit_triple(base.nu());
    let case_form = if r % 2 == 0 {
        sign_bit(r as u64, 1) * sign_bit(p as u64, 0)
    } else {
        sign_bit(r as u64, 1) * sign_bit(p as u64, 0) * nu_r_bits.b1
    };
    sweep.hit(
        "rho_sq_closed_form",
        "rho^2 = (bit 1 of t) s3 = r1 p0 (r even) or r1 p0 nuR1 (r odd)",
        inv.rho_sq == t_form && inv.rho_sq == case_form,
        &label,
    );

    for (u, v, sign) in [
        (&inv.omega, &inv.tau, inv.s1),
        (&inv.omega, &inv.rho, inv.s2),
        (&inv.rho, &inv.tau, inv.s3),
    ] {
        sweep.hit(
            "mirror_conjugation_sign",
            "u v u^-1 = s v implies v u v^-1 = s u",
            conjugation_sign(spec, v, u) == Ok(sign),
            &label,
        );
    }

    if r == 0 {
        sweep.hit(
            "real_signature_bits",
            "(nu0, nu1, nu2) = (n0, n1 s1, n2 tau^2) for all-real specs",
            real_bit_relations(base, &inv).map(|b| b.residue()) == Ok(mod8(nu)),
            &label,
        );
        let (a, b, c) = varlamov_abc(n, nu).expect("even n");
        sweep.hit(
            "varlamov_triple",
            "(a, b, c) = (s1 omega^2 tau^2, tau^2, omega^2) = (n1 n2 nu2, n2 nu2, nu1)",
            a == inv.s1 * inv.omega_sq * inv.tau_sq && b == inv.tau_sq && c == inv.omega_sq,
            &label,
        );
    }

    sweep.hit(
        "complex_signature_bits",
        "nu2 = nuR2 rho^2 = n2 tauR^2 rho^2; nu1 = n1 s1 s2 = omega^2; nu0 = +1",
        complex_bit_relations(spec, &inv).map(|b| b.residue()) == Ok(mod8(nu)),
        &label,
    );
    sweep.hit(
        "signature_recovery",
        "nu2 = n2 theta^2, nu1 = omega^2, nu0 = +1 recover nu mod 8",
        recover_signature(n, inv.theta_sq, inv.omega_sq) == Ok(mod8(nu)),
        &label,
    );
    sweep.hit(
        "recovery_from_s_agreement",
        "omega^2 = n1 s gives the same recovery",
        recover_signature_from_s(n, inv.theta_sq, inv.s) == Ok(mod8(nu)),
        &label,
    );
    sweep.hit(
        "nu_shift_formula",
        "nu = nu_R + 2r - 4p (mod 8), matching direct generator counting",
        nu_shift(base.nu(), r, p) == Ok(mod8(nu))
            && spec.effective_signature().k == base.k + r - 2 * p,
        &label,
    );

    // Case tables for 2r - 4p mod 8 by the parities of r1 and p0.
    let delta = if r % 2 == 0 {
        if sign_bit(r as u64, 1) == sign_bit(p as u64, 0) { 0 } else { 4 }
    } else if sign_bit(r as u64, 1) == sign_bit(p as u64, 0) {
        2
    } else {
        6
    };
    sweep.hit(
        "nu_shift_case_tables",
        "2r - 4p mod 8 is 0/4 (r even) or 2/6 (r odd), split by p0 vs r1",
        mod8(nu) == mod8(base.nu() + delta) && mod8(2 * r as i64 - 4 * p as i64) == delta as u8,
        &label,
    );

    // n-bit consistency of the recovery inputs: nu1 = n1 s.
    sweep.hit(
        "omega_sq_vs_parity",
        "omega^2 = n1 s",
        inv.omega_sq == n_bits.b1 * inv.s,
        &label,
    );
}

fn classify_checks(sweep: &mut Sweep) {
    sweep.hit(
        "chessboard_golden_table",
        "the 36-entry n-versus-nu table matches the committed golden CSV",
        table_csv(7) == GOLDEN_TABLE_CSV,
        &|| "generated CSV differs from golden file".to_string(),
    );

    for entry in chessboard() {
        sweep.hit(
            "classification_dimension",
            "dim_R(D) * size^2 = 2^n for every table cell",
            entry.class.real_dim() == 1u64 << entry.n,
            &|| format!("entry (n = {}, nu = {})", entry.n, entry.nu),
        );
    }

    let expected = [
        DivisionAlgebra::R,
        DivisionAlgebra::DoubleR,
        DivisionAlgebra::R,
        DivisionAlgebra::C,
        DivisionAlgebra::H,
        DivisionAlgebra::DoubleH,
        DivisionAlgebra::H,
        DivisionAlgebra::C,
    ];
    for vertex in cube() {
        sweep.hit(
            "cube_vertex_map",
            "digit cube: 0,2 -> R; 4,6 -> H; 3,7 -> C; 1 -> 2R; 5 -> 2H",
            vertex.division == expected[vertex.residue as usize],
            &|| format!("vertex {}", vertex.residue),
        );
    }

    for n in 0..=8u32 {
        for k in 0..=n {
            let sig = Signature::new(k, n - k);
            sweep.hit(
                "classify_vs_nu_map",
                "the division algebra depends on nu mod 8 alone",
                classify_signature(sig).division == algebra_from_nu(sig.nu()),
                &|| format!("signature ({k}, {})", n - k),
            );
        }
    }
}

fn matrix_checks(sweep: &mut Sweep, max_n: u32, seed: u64, tol: &Tolerances) {
    for n in (2..=max_n.min(MAX_MATRIX_N)).step_by(2) {
        for sig in base_signatures(n) {
            let label = || format!("signature ({}, {})", sig.k, sig.l);

            let rep = match MatrixRep::build(sig) {
                Ok(rep) => rep,
                Err(err) => {
                    sweep.hit(
                        "rep_clifford_relations",
                        "gamma_i gamma_j + gamma_j gamma_i = 2 eta_ij to base tolerance",
                        false,
                        &|| format!("{}: {err}", label()),
                    );
                    continue;
                }
            };

            let defect = rep.validity_defect();
            sweep.hit_dev(
                "rep_clifford_relations",
                "gamma_i gamma_j + gamma_j gamma_i = 2 eta_ij to base tolerance",
                defect <= tol.base,
                Some(defect),
                &|| format!("{}: defect {defect:.3e}", label()),
            );
            sweep.hit(
                "rep_reality_discipline",
                "every gamma entrywise real or imaginary; effective signature matches request",
                rep.effective_signature() == sig,
                &label,
            );

            let nu = mod8(sig.nu());
            let nu2 = sign_bit(nu as u64, 2);
            let n2 = sign_bit(n as u64, 2);

            match intertwiners(&rep, tol) {
                Ok(iw) => {
                    sweep.hit_dev(
                        "intertwiner_dual_action",
                        "B gamma_j B^-1 = (g_j^2) gamma_j to base tolerance",
                        iw.b_action_dev <= tol.base,
                        Some(iw.b_action_dev),
                        &label,
                    );
                    sweep.hit_dev(
                        "intertwiner_conj_action",
                        "C gamma_j C^-1 = conj(gamma_j) to base tolerance",
                        iw.c_action_dev <= tol.base,
                        Some(iw.c_action_dev),
                        &label,
                    );
                }
                Err(err) => {
                    for name in ["intertwiner_dual_action", "intertwiner_conj_action"] {
                        sweep.hit(name, "intertwiner actions", false, &|| {
                            format!("{}: {err}", label())
                        });
                    }
                }
            }

            match trautman_check(&rep, tol) {
                Ok(tr) => {
                    sweep.hit_dev(
                        "b_transpose_sign",
                        "B^T = n2 B",
                        tr.b_transpose_dev <= tol.base && tr.n2 == n2,
                        Some(tr.b_transpose_dev),
                        &label,
                    );
                    sweep.hit_dev(
                        "c_conjugate_product",
                        "conj(C) C = nu2 I",
                        tr.c_conj_dev <= tol.base && tr.nu2 == nu2,
                        Some(tr.c_conj_dev),
                        &label,
                    );
                    sweep.hit_dev(
                        "bbar_c_hermitian",
                        "(conj(B) C)^dagger = n2 nu2 conj(B) C; Hermitian after phase normalization",
                        tr.adjoint_dev <= tol.base
                            && tr.hermitian_dev <= tol.base
                            && tr.adjoint_sign == n2 * nu2,
                        Some(tr.hermitian_dev.max(tr.adjoint_dev)),
                        &label,
                    );
                }
                Err(err) => {
                    for name in ["b_transpose_sign", "c_conjugate_product", "bbar_c_hermitian"] {
                        sweep.hit(name, "intertwiner sign identities", false, &|| {
                            format!("{}: {err}", label())
                        });
                    }
                }
            }

            match analyze(rep.spec()) {
                Ok(inv) => {
                    sweep.hit(
                        "tau_r_square_is_n_bit",
                        "tau_R^2 = n2 on matrix-effective specs",
                        inv.tau_r_sq == n2,
                        &label,
                    );
                }
                Err(err) => {
                    sweep.hit("tau_r_square_is_n_bit", "tau_R^2 = n2", false, &|| {
                        format!("{}: {err}", label())
                    });
                }
            }

            sweep.hit(
                "effective_base_bit",
                "matrix reps carry nu_R in {0, 2} mod 8 (bit 2 = +1)",
                matches!(mod8(rep.spec().base_signature().nu()), 0 | 2),
                &label,
            );

            let oracle = match antilinear_oracle(&rep, tol) {
                Ok(oracle) => {
                    sweep.hit_dev(
                        "antilinear_commutant_sign",
                        "K conj(gamma_j) = gamma_j K solvable; sign(K conj K) = nu2",
                        oracle.lambda_sign == nu2,
                        Some(oracle.max_residual),
                        &|| format!("{}: lambda = {}", label(), oracle.lambda),
                    );
                    Some(oracle)
                }
                Err(err) => {
                    sweep.hit("antilinear_commutant_sign", "commutant solve", false, &|| {
                        format!("{}: {err}", label())
                    });
                    None
                }
            };

            if let (Some(oracle), Ok(iw)) = (&oracle, intertwiners(&rep, tol)) {
                let cc = iw.c.map(|z| z.conj()) * &iw.c;
                let cc_sign = if cc[(0, 0)].re >= 0.0 { SignBit::Plus } else { SignBit::Minus };
                sweep.hit(
                    "antilinear_vs_intertwiner",
                    "sign(lambda) = sign(conj(C) C): two independent routes to nu2",
                    oracle.lambda_sign == cc_sign,
                    &label,
                );
            }

            match reduce(&rep, tol) {
                Ok(red) => {
                    let (name, anchor, want) = if matches!(nu, 0 | 2) {
                        (
                            "majorana_reduction",
                            "nu in {0, 2}: a basis change makes every gamma entrywise real",
                            ReductionKind::Real,
                        )
                    } else {
                        (
                            "quaternionic_reduction",
                            "nu in {4, 6}: gammas take the 2x2 cell form (a, -conj b; b, conj a)",
                            ReductionKind::Quaternionic,
                        )
                    };
                    sweep.hit_dev(
                        name,
                        anchor,
                        red.kind == want && red.max_defect <= tol.reduce,
                        Some(red.max_defect),
                        &|| format!("{}: kind {:?}, defect {:.3e}", label(), red.kind, red.max_defect),
                    );
                }
                Err(err) => {
                    let name = if matches!(nu, 0 | 2) {
                        "majorana_reduction"
                    } else {
                        "quaternionic_reduction"
                    };
                    sweep.hit(name, "reduction", false, &|| format!("{}: {err}", label()));
                }
            }
        }
    }

    for m in 1..=(max_n.min(MAX_MATRIX_N) / 2) as usize {
        let report = complex_split_demo(m, seed);
        sweep.hit(
            "complex_split_columns",
            "dim bookkeeping 2*4^m = 4^m + 4^m and the column split of the 2x2 algebra",
            report.dims_consistent && report.column_split_ok,
            &|| format!("m = {m}"),
        );
        sweep.hit(
            "c2_quaternion_bijection",
            "(z1, z2) -> z1 + j z2 is a real-linear bijection matching the 2x2 model",
            report.bijection_ok && report.model_multiplicative_ok,
            &|| format!("m = {m}"),
        );
        sweep.hit_dev(
            "block_form_closure",
            "the quaternionic cell pattern is closed under matrix products",
            report.closure_ok,
            Some(report.closure_defect),
            &|| format!("m = {m}"),
        );
    }
}

/// Runs every invariant suite and assembles the report.
pub fn run(opts: &VerifyOptions) -> Report {
    let start = Instant::now();
    let mut report = Report::new(
        "verify",
        json!({
            "max_n": opts.max_n,
            "with_matrix": opts.with_matrix,
            "seed": opts.seed,
            "tolerance_base": opts.tol.base,
        }),
    );
    let mut sweep = Sweep::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    bits_checks(&mut sweep);
    blade_structure_checks(&mut sweep, opts.max_n, &mut rng);

    for n in (2..=opts.max_n).step_by(2) {
        for base in base_signatures(n) {
            for (r, p) in admissible_rp(base) {
                let extra = if r > 0 { 2 } else { 0 };
                for spec in placements(base, r, p, &mut rng, extra) {
                    involution_checks(&mut sweep, &spec);

                    // Exhaustive generator structure on the canonical spec.
                    for i in 0..spec.n() {
                        for j in 0..spec.n() {
                            let fi = spec.generator(i);
                            let fj = spec.generator(j);
                            if i == j {
                                let sq = spec.product(&fi, &fi).unwrap();
                                sweep.hit(
                                    "generator_squares",
                                    "f_j^2 = iota_j^2 g_j^2",
                                    sq == Multivector::scalar(
                                        spec.n(),
                                        coeff_from_int(spec.effective_square(i).value() as i64),
                                    ),
                                    &|| format!("n = {n}, j = {i}"),
                                );
                            } else if i < j {
                                let anti = spec
                                    .product(&fi, &fj)
                                    .unwrap()
                                    .add(&spec.product(&fj, &fi).unwrap());
                                sweep.hit(
                                    "generator_anticommutation",
                                    "f_i f_j + f_j f_i = 0 for i != j",
                                    anti.is_zero(),
                                    &|| format!("n = {n}, i = {i}, j = {j}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    classify_checks(&mut sweep);

    if opts.with_matrix {
        matrix_checks(&mut sweep, opts.max_n, opts.seed, &opts.tol);
    }

    sweep.into_report(&mut report);
    report.finalize(start.elapsed().as_secs_f64() * 1000.0);
    report
}
