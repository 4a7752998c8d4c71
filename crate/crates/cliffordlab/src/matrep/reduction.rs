//! Reduction of a representation to its real (Majorana) or quaternionic
//! subalgebra.
//!
//! The antilinear structure `J: v -> K conj(v)` from the commutant solve
//! is rescaled so `J^2 = +1` or `J^2 = -1`. For `+1` the fixed points of
//! `J` span a real form; a real-orthonormal basis of that form makes
//! every gamma entrywise real. For `-1` a basis of pairs `(v, J v)`
//! (interleaved convention: columns `2a-1, 2a` host one quaternionic
//! coordinate) puts `J` in standard form and every gamma into 2x2 cells
//! `(a, -conj(b); b, conj(a))`.

use nalgebra::DVector;
use num_complex::Complex64;

use cliffordlab_core::bits::SignBit;

use super::{antilinear_oracle, c, AntilinearStructure, CMat, MatrepError, MatrixRep, Result};
use crate::tol::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Real,
    Quaternionic,
}

impl ReductionKind {
    pub fn label(self) -> &'static str {
        match self {
            ReductionKind::Real => "real",
            ReductionKind::Quaternionic => "quaternionic",
        }
    }
}

/// Outcome of a reduction: the basis change and the transformed gammas.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub basis_change: CMat,
    pub gammas: Vec<CMat>,
    pub structure: AntilinearStructure,
    /// Worst residual imaginary entry (real kind) or block-pattern
    /// defect (quaternionic kind) over the transformed gammas.
    pub max_defect: f64,
}

fn apply_j(k: &CMat, v: &DVector<Complex64>) -> DVector<Complex64> {
    k * v.map(|z| z.conj())
}

fn candidates(dim: usize) -> Vec<DVector<Complex64>> {
    let mut out = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        let mut e = DVector::zeros(dim);
        e[i] = c(1.0);
        out.push(e.clone());
        e[i] = Complex64::i();
        out.push(e);
    }
    out
}

fn stall(found: usize, dim: usize) -> MatrepError {
    MatrepError::StructureNotFound(format!("stalled after {found} of {dim} basis vectors"))
}

/// Real-orthonormal basis of the fixed points of `J` (inner product
/// `Re(a^dagger b)`), picked greedily from `u = w + J w` over the
/// standard candidates by largest residual.
fn real_form_basis(k_unit: &CMat, dim: usize) -> Result<Vec<DVector<Complex64>>> {
    let pool = candidates(dim);
    let mut chosen: Vec<DVector<Complex64>> = Vec::with_capacity(dim);
    while chosen.len() < dim {
        let best = pool
            .iter()
            .map(|w| {
                let mut u = w + apply_j(k_unit, w);
                for q in &chosen {
                    let coeff = q.dotc(&u).re;
                    u -= q * c(coeff);
                }
                u
            })
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .expect("candidate pool is nonempty");
        if best.norm() < 1e-6 {
            return Err(stall(chosen.len(), dim));
        }
        chosen.push(best.normalize());
    }
    Ok(chosen)
}

/// Basis of exact pairs `(v, J v)`; a unitary shadow of the chosen span
/// is kept for the projections, the raw pairs become the columns.
fn quaternion_pair_basis(k_unit: &CMat, dim: usize) -> Result<Vec<DVector<Complex64>>> {
    let pool = candidates(dim);
    let mut columns: Vec<DVector<Complex64>> = Vec::with_capacity(dim);
    let mut ortho: Vec<DVector<Complex64>> = Vec::with_capacity(dim);
    while columns.len() < dim {
        let best = pool
            .iter()
            .map(|w| {
                let mut v = w.clone();
                for q in &ortho {
                    let coeff = q.dotc(&v);
                    v -= q * coeff;
                }
                v
            })
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .expect("candidate pool is nonempty");
        if best.norm() < 1e-6 {
            return Err(stall(columns.len(), dim));
        }
        let v = best.normalize();
        let jv = apply_j(k_unit, &v);
        for u in [&v, &jv] {
            let mut q = u.clone();
            for prev in &ortho {
                let coeff = prev.dotc(&q);
                q -= prev * coeff;
            }
            let norm = q.norm();
            if norm < 1e-9 {
                return Err(stall(columns.len(), dim));
            }
            ortho.push(q / c(norm));
        }
        columns.push(v);
        columns.push(jv);
    }
    Ok(columns)
}

/// Reduces the representation according to the sign of the antilinear
/// structure.
pub fn reduce(rep: &MatrixRep, tol: &Tolerances) -> Result<Reduction> {
    let structure = antilinear_oracle(rep, tol)?;
    let dim = rep.dim();
    let k_unit = &structure.k * c(1.0 / structure.lambda.abs().sqrt());

    let columns = match structure.lambda_sign {
        SignBit::Plus => real_form_basis(&k_unit, dim)?,
        SignBit::Minus => quaternion_pair_basis(&k_unit, dim)?,
    };

    let mut basis = CMat::zeros(dim, dim);
    for (j, col) in columns.iter().enumerate() {
        basis.set_column(j, col);
    }
    let inverse = basis
        .clone()
        .try_inverse()
        .ok_or_else(|| MatrepError::StructureNotFound("basis change is singular".into()))?;

    let gammas: Vec<CMat> = rep.gammas().iter().map(|g| &inverse * g * &basis).collect();

    let (kind, max_defect) = match structure.lambda_sign {
        SignBit::Plus => {
            let defect = gammas
                .iter()
                .map(|g| g.iter().map(|z| z.im.abs()).fold(0.0, f64::max))
                .fold(0.0, f64::max);
            (ReductionKind::Real, defect)
        }
        SignBit::Minus => {
            let mut defect: f64 = 0.0;
            for g in &gammas {
                defect = defect.max(quaternion_block_defect(g)?);
            }
            (ReductionKind::Quaternionic, defect)
        }
    };
    if max_defect > tol.reduce {
        return Err(MatrepError::StructureNotFound(format!(
            "{} reduction defect {max_defect:.3e} above {:.3e}",
            kind.label(),
            tol.reduce
        )));
    }

    Ok(Reduction { kind, basis_change: basis, gammas, structure, max_defect })
}

/// Worst deviation of a matrix from the interleaved 2x2 cell pattern
/// `(a, -conj(b); b, conj(a))`.
pub fn quaternion_block_defect(m: &CMat) -> Result<f64> {
    if !m.nrows().is_multiple_of(2) || m.nrows() != m.ncols() {
        return Err(MatrepError::OddSize(m.nrows()));
    }
    let half = m.nrows() / 2;
    let mut defect: f64 = 0.0;
    for bi in 0..half {
        for bj in 0..half {
            let a = m[(2 * bi, 2 * bj)];
            let b = m[(2 * bi + 1, 2 * bj)];
            defect = defect.max((m[(2 * bi, 2 * bj + 1)] + b.conj()).norm());
            defect = defect.max((m[(2 * bi + 1, 2 * bj + 1)] - a.conj()).norm());
        }
    }
    Ok(defect)
}

/// Whether a matrix partitions into quaternionic 2x2 cells to tolerance.
pub fn quaternion_block_check(m: &CMat, tol: &Tolerances) -> Result<bool> {
    Ok(quaternion_block_defect(m)? <= tol.reduce)
}
