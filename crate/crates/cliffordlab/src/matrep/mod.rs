//! Concrete complex matrix representations of even-dimensional Clifford
//! algebras.
//!
//! Generators are built from an alternating tensor chain of one real
//! symmetric anticommuter and one imaginary anticommuter per tensor slot,
//! then multiplied by `i` where a `-1` square is requested. Every gamma
//! is therefore entrywise real or entrywise purely imaginary, which is
//! what gives entrywise complex conjugation an algebra meaning: the
//! effective [`GeneratorSpec`] is read off the matrices (imaginary
//! entries mean `iota = i` on a flipped base square), never assumed from
//! the requested signature.

mod reduction;
mod split;

pub use reduction::{quaternion_block_check, quaternion_block_defect, reduce, Reduction, ReductionKind};
pub use split::{complex_split_demo, Quaternion, SplitReport};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use cliffordlab_core::bits::{sign_bit, SignBit};
use cliffordlab_core::blades::{Generator, GeneratorSpec, Iota, Multivector, Signature};
use cliffordlab_core::involutions::{build_rho, build_tau};
use cliffordlab_core::mod8;

use crate::tol::Tolerances;

pub type CMat = DMatrix<Complex64>;

/// Largest supported half-dimension (n = 8 generators, 16x16 matrices).
pub const MAX_HALF_DIMENSION: usize = 4;

#[derive(Debug, Error)]
pub enum MatrepError {
    #[error("matrix layer needs an even generator count >= 2, got {0}")]
    OddOrZeroDimension(usize),
    #[error("half-dimension m = {0} unsupported (the matrix layer stops at m = 4, n = 8)")]
    UnsupportedSize(usize),
    #[error("{count} gamma matrices do not match m = {m} (expected {expected})")]
    WrongGammaCount { m: usize, count: usize, expected: usize },
    #[error("gamma[{index}] has shape {rows}x{cols}, expected {dim}x{dim}")]
    WrongShape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("anticommutator {{gamma[{i}], gamma[{j}]}} has max entry {dev:.3e}, expected 0")]
    NotAnticommuting { i: usize, j: usize, dev: f64 },
    #[error("gamma[{index}]^2 deviates from +/- identity by {dev:.3e}")]
    BadSquare { index: usize, dev: f64 },
    #[error("gamma[{index}] is neither entrywise real nor entrywise purely imaginary")]
    MixedReality { index: usize },
    #[error("involution construction failed: {0}")]
    Involutions(#[from] cliffordlab_core::Error),
    #[error("intertwiner {name} action failed on gamma[{index}], deviation {dev:.3e}")]
    IntertwinerAction { name: &'static str, index: usize, dev: f64 },
    #[error("intertwiner matrix is numerically singular")]
    SingularIntertwiner,
    #[error("no antilinear structure in the commutant (smallest relative singular value {ratio:.3e})")]
    EmptyCommutant { ratio: f64 },
    #[error("antilinear structure is degenerate: {0}")]
    DegenerateStructure(String),
    #[error("reduction basis construction failed: {0}")]
    StructureNotFound(String),
    #[error("matrix has odd size {0}")]
    OddSize(usize),
}

pub type Result<T> = std::result::Result<T, MatrepError>;

/// Entrywise reality class of one gamma matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reality {
    Real,
    Imaginary,
}

/// `n = 2m` anticommuting complex matrices of size `2^m` realizing a
/// signature, with their reality flags and the effective generator spec
/// they induce.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    m: usize,
    gammas: Vec<CMat>,
    reality: Vec<Reality>,
    spec: GeneratorSpec,
}

impl MatrixRep {
    /// Builds the standard representation for a signature with `n = k + l`
    /// even, spacelike generators first.
    pub fn build(sig: Signature) -> Result<Self> {
        let n = sig.n() as usize;
        if n == 0 || !n.is_multiple_of(2) {
            return Err(MatrepError::OddOrZeroDimension(n));
        }
        let m = n / 2;
        if m > MAX_HALF_DIMENSION {
            return Err(MatrepError::UnsupportedSize(m));
        }

        let sigma1 = CMat::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        let sigma2 = CMat::from_row_slice(
            2,
            2,
            &[c(0.0), Complex64::new(0.0, -1.0), Complex64::i(), c(0.0)],
        );
        let sigma3 = CMat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
        let id2 = CMat::identity(2, 2);

        let chain = |slot: usize, mid: &CMat| -> CMat {
            let mut acc = CMat::identity(1, 1);
            for t in 0..m {
                let factor = if t < slot {
                    &sigma3
                } else if t == slot {
                    mid
                } else {
                    &id2
                };
                acc = acc.kronecker(factor);
            }
            acc
        };

        let mut gammas = Vec::with_capacity(n);
        for slot in 0..m {
            gammas.push(chain(slot, &sigma1));
            gammas.push(chain(slot, &sigma2));
        }
        // All chain squares are +1; fix the requested timelike squares.
        for gamma in gammas.iter_mut().skip(sig.k as usize) {
            *gamma *= Complex64::i();
        }

        let rep = Self::from_gammas(m, gammas, &Tolerances::default())?;
        debug_assert_eq!(rep.spec.effective_signature(), sig);
        Ok(rep)
    }

    /// Validates externally supplied matrices and derives the effective
    /// spec from them.
    pub fn from_gammas(m: usize, gammas: Vec<CMat>, tol: &Tolerances) -> Result<Self> {
        if m == 0 || m > MAX_HALF_DIMENSION {
            return Err(MatrepError::UnsupportedSize(m));
        }
        let n = 2 * m;
        if gammas.len() != n {
            return Err(MatrepError::WrongGammaCount { m, count: gammas.len(), expected: n });
        }
        let dim = 1usize << m;
        for (index, g) in gammas.iter().enumerate() {
            if g.nrows() != dim || g.ncols() != dim {
                return Err(MatrepError::WrongShape {
                    index,
                    rows: g.nrows(),
                    cols: g.ncols(),
                    dim,
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let dev = max_abs(&(&gammas[i] * &gammas[j] + &gammas[j] * &gammas[i]));
                if dev > tol.base {
                    return Err(MatrepError::NotAnticommuting { i, j, dev });
                }
            }
        }

        let mut reality = Vec::with_capacity(n);
        let mut gens = Vec::with_capacity(n);
        for (index, g) in gammas.iter().enumerate() {
            let sq = g * g;
            let sign = if sq[(0, 0)].re >= 0.0 { 1.0 } else { -1.0 };
            let dev = max_abs(&(&sq - CMat::identity(dim, dim) * c(sign)));
            if dev > tol.base {
                return Err(MatrepError::BadSquare { index, dev });
            }
            let square = if sign > 0.0 { SignBit::Plus } else { SignBit::Minus };

            let max_im = g.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            let max_re = g.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
            let flag = if max_im <= tol.base {
                Reality::Real
            } else if max_re <= tol.base {
                Reality::Imaginary
            } else {
                return Err(MatrepError::MixedReality { index });
            };
            reality.push(flag);
            gens.push(match flag {
                Reality::Real => Generator { base_square: square, iota: Iota::One },
                Reality::Imaginary => Generator { base_square: -square, iota: Iota::I },
            });
        }

        let spec = GeneratorSpec::new(gens)?;
        Ok(MatrixRep { m, gammas, reality, spec })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Spinor space dimension `2^m`.
    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn n(&self) -> usize {
        2 * self.m
    }

    pub fn gammas(&self) -> &[CMat] {
        &self.gammas
    }

    pub fn reality(&self) -> &[Reality] {
        &self.reality
    }

    /// The effective generator spec read off the matrices.
    pub fn spec(&self) -> &GeneratorSpec {
        &self.spec
    }

    pub fn effective_signature(&self) -> Signature {
        self.spec.effective_signature()
    }

    /// Image of an exact multivector under the representation.
    pub fn image(&self, mv: &Multivector) -> CMat {
        let dim = self.dim();
        let mut acc = CMat::zeros(dim, dim);
        for (mask, coeff) in mv.terms() {
            let mut blade = CMat::identity(dim, dim);
            for j in 0..self.n() {
                if mask >> j & 1 == 1 {
                    blade = &blade * &self.gammas[j];
                }
            }
            acc += blade * coeff_to_c64(coeff);
        }
        acc
    }

    /// Largest deviation from the Clifford relations, for reporting.
    pub fn validity_defect(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i == j {
                    let sq = &self.gammas[i] * &self.gammas[i];
                    let want = CMat::identity(dim, dim)
                        * c(self.spec.effective_square(i as u32).value() as f64);
                    worst = worst.max(max_abs(&(sq - want)));
                } else if i < j {
                    let anti = &self.gammas[i] * &self.gammas[j] + &self.gammas[j] * &self.gammas[i];
                    worst = worst.max(max_abs(&anti));
                }
            }
        }
        worst
    }
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub(crate) fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn coeff_to_c64(coeff: &cliffordlab_core::Coeff) -> Complex64 {
    Complex64::new(
        coeff.re.to_f64().unwrap_or(f64::NAN),
        coeff.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// The matrix images `B` and `C` of the dual and conjugation elements.
#[derive(Debug, Clone)]
pub struct Intertwiners {
    pub b: CMat,
    pub c: CMat,
    /// Worst deviation of `B gamma B^-1` from the dual image.
    pub b_action_dev: f64,
    /// Worst deviation of `C gamma C^-1` from the entrywise conjugate.
    pub c_action_dev: f64,
}

/// Builds `B` and `C` as the images of the dual and conjugation elements
/// of the effective spec, and verifies their defining actions on every
/// generator.
pub fn intertwiners(rep: &MatrixRep, tol: &Tolerances) -> Result<Intertwiners> {
    let spec = rep.spec();
    let b = rep.image(&build_tau(spec)?);
    let c_mat = rep.image(&build_rho(spec)?);

    let b_inv = b.clone().try_inverse().ok_or(MatrepError::SingularIntertwiner)?;
    let c_inv = c_mat.clone().try_inverse().ok_or(MatrepError::SingularIntertwiner)?;

    let mut b_action_dev: f64 = 0.0;
    let mut c_action_dev: f64 = 0.0;
    for (index, gamma) in rep.gammas().iter().enumerate() {
        // dual(f_j) = g_j^2 f_j, so the dual image is the base square
        // times the generator.
        let base = spec.generators()[index].base_square.value() as f64;
        let dual_image = gamma * c(base);
        let dev = max_abs(&(&b * gamma * &b_inv - dual_image));
        if dev > tol.base {
            return Err(MatrepError::IntertwinerAction { name: "B", index, dev });
        }
        b_action_dev = b_action_dev.max(dev);

        let conj_image = gamma.map(|z| z.conj());
        let dev = max_abs(&(&c_mat * gamma * &c_inv - conj_image));
        if dev > tol.base {
            return Err(MatrepError::IntertwinerAction { name: "C", index, dev });
        }
        c_action_dev = c_action_dev.max(dev);
    }

    Ok(Intertwiners { b, c: c_mat, b_action_dev, c_action_dev })
}

/// Results of the three sign identities tying `B` and `C` to the bits of
/// `n` and the effective `nu`.
#[derive(Debug, Clone)]
pub struct TrautmanReport {
    /// Expected `B^T = n2 B` sign: bit 2 of `n`.
    pub n2: SignBit,
    /// Expected `conj(C) C = nu2 I` sign: bit 2 of the effective `nu`.
    pub nu2: SignBit,
    pub b_transpose_dev: f64,
    pub c_conj_dev: f64,
    /// Adjoint sign of `conj(B) C`: equals `n2 * nu2` (the square of the
    /// inverse-action element). The product is Hermitian in its natural
    /// phase exactly when this sign is `+1`; otherwise its Hermitian
    /// representative is `i` times it.
    pub adjoint_sign: SignBit,
    pub adjoint_dev: f64,
    /// Deviation of the phase-normalized map from Hermiticity.
    pub hermitian_dev: f64,
    pub pass: bool,
}

/// Verifies `B^T = n2 B`, `conj(C) C = nu2 I` and the Hermiticity of the
/// (phase-normalized) map `conj(B) C`.
pub fn trautman_check(rep: &MatrixRep, tol: &Tolerances) -> Result<TrautmanReport> {
    let iw = intertwiners(rep, tol)?;
    let dim = rep.dim();
    let n2 = sign_bit(rep.n() as u64, 2);
    let nu2 = sign_bit(mod8(rep.effective_signature().nu()) as u64, 2);

    let b_transpose_dev = max_abs(&(iw.b.transpose() - &iw.b * c(n2.value() as f64)));
    let c_conj_dev = max_abs(
        &(iw.c.map(|z| z.conj()) * &iw.c - CMat::identity(dim, dim) * c(nu2.value() as f64)),
    );

    let a = iw.b.map(|z| z.conj()) * &iw.c;
    let adjoint_sign = n2 * nu2;
    let adjoint_dev = max_abs(&(a.adjoint() - &a * c(adjoint_sign.value() as f64)));
    let h = if adjoint_sign.is_plus() { a.clone() } else { &a * Complex64::i() };
    let hermitian_dev = max_abs(&(h.adjoint() - &h));

    let pass = b_transpose_dev <= tol.base
        && c_conj_dev <= tol.base
        && adjoint_dev <= tol.base
        && hermitian_dev <= tol.base;

    Ok(TrautmanReport {
        n2,
        nu2,
        b_transpose_dev,
        c_conj_dev,
        adjoint_sign,
        adjoint_dev,
        hermitian_dev,
        pass,
    })
}

/// An antilinear map `v -> K conj(v)` commuting with every generator,
/// with the sign of `K conj(K) = lambda I`.
#[derive(Debug, Clone)]
pub struct AntilinearStructure {
    pub k: CMat,
    pub lambda_sign: SignBit,
    pub lambda: f64,
    /// Worst `||gamma K - K conj(gamma)||` over the generators.
    pub max_residual: f64,
}

/// Gram matrix of the stacked intertwining equations
/// `gamma_j K - K conj(gamma_j) = 0` in the column-stacked `vec(K)`
/// coordinates.
fn commutant_gram(rep: &MatrixRep) -> CMat {
    let d = rep.dim();
    let id = CMat::identity(d, d);
    let mut gram = CMat::zeros(d * d, d * d);
    for g in rep.gammas() {
        let g_bar_t = g.map(|z| z.conj()).transpose();
        // (A - B)^dagger (A - B) with A = I (x) g, B = g_bar^T (x) I.
        gram += id.kronecker(&(g.adjoint() * g));
        gram += (g * &g_bar_t).kronecker(&id);
        gram -= g_bar_t.kronecker(&g.adjoint());
        gram -= g.kronecker(g);
    }
    gram
}

/// Solves for the antilinear structure from the commutant equations,
/// without using the conjugation element.
///
/// The Gram matrix is Hermitian positive semidefinite with a unit-scale
/// spectral gap above its nullspace, so shifted inverse iteration
/// converges in a couple of LU solves; the Rayleigh quotient plays the
/// rank-revealing role, with values below `rank_rel` times the Gershgorin
/// bound treated as zero.
pub fn antilinear_oracle(rep: &MatrixRep, tol: &Tolerances) -> Result<AntilinearStructure> {
    let d = rep.dim();
    let d2 = d * d;
    let gram = commutant_gram(rep);

    let scale = (0..d2)
        .map(|i| (0..d2).map(|j| gram[(i, j)].norm()).sum::<f64>())
        .fold(f64::MIN_POSITIVE, f64::max);

    // Deterministic full-support start vector.
    let mut x = nalgebra::DVector::from_fn(d2, |i, _| {
        let t = (i as f64 + 1.0) * 0.7390851332151607;
        Complex64::new((t.sin() + 1.5) / 2.5, (t.cos() + 1.5) / 2.5)
    });
    x /= c(x.norm());

    let shifted = &gram + CMat::identity(d2, d2) * c(scale * 1e-14);
    let lu = shifted.lu();
    for _ in 0..3 {
        let solved = lu.solve(&x).ok_or(MatrepError::EmptyCommutant { ratio: 1.0 })?;
        x = &solved / c(solved.norm());
    }

    let rayleigh = x.dotc(&(&gram * &x)).re.abs();
    if rayleigh > tol.rank_rel * scale {
        return Err(MatrepError::EmptyCommutant { ratio: rayleigh / scale });
    }

    let mut k = CMat::from_column_slice(d, d, x.as_slice());
    let rescale = (d as f64).sqrt() / k.norm();
    k *= c(rescale);

    let max_residual = rep
        .gammas()
        .iter()
        .map(|g| max_abs(&(g * &k - &k * g.map(|z| z.conj()))))
        .fold(0.0, f64::max);
    if max_residual > tol.reduce {
        return Err(MatrepError::DegenerateStructure(format!(
            "commutant residual {max_residual:.3e} above {:.3e}",
            tol.reduce
        )));
    }

    let product = &k * k.map(|z| z.conj());
    let lambda = product.diagonal().iter().sum::<Complex64>() / c(d as f64);
    let off_dev = max_abs(&(product - CMat::identity(d, d) * lambda));
    if off_dev > tol.reduce * 10.0 {
        return Err(MatrepError::DegenerateStructure(format!(
            "K conj(K) deviates from a scalar by {off_dev:.3e}"
        )));
    }
    if lambda.im.abs() > tol.reduce * 10.0 || lambda.re.abs() < 1e-6 {
        return Err(MatrepError::DegenerateStructure(format!(
            "K conj(K) scalar {lambda} is not a clean real sign"
        )));
    }

    let lambda_sign = if lambda.re > 0.0 { SignBit::Plus } else { SignBit::Minus };
    Ok(AntilinearStructure { k, lambda_sign, lambda: lambda.re, max_residual })
}
