//! Gamma-set interchange format.
//!
//! A gamma set is a JSON object `{"m": int, "gammas": [[[re, im], ...], ...]}`
//! with each matrix stored row-major as rows of `[re, im]` pairs. The
//! `reduce` command emits this shape (with extra keys) and accepts it back
//! through `--input`; unknown keys are ignored on read.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::matrep::{CMat, MatrepError, MatrixRep};
use crate::tol::Tolerances;

/// Row-major complex matrix data: rows of `[re, im]` pairs.
pub type ComplexMatrixData = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaSetFile {
    pub m: usize,
    pub gammas: Vec<ComplexMatrixData>,
}

pub fn matrix_to_data(m: &CMat) -> ComplexMatrixData {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

pub fn data_to_matrix(data: &ComplexMatrixData) -> Option<CMat> {
    let rows = data.len();
    let cols = data.first()?.len();
    if data.iter().any(|r| r.len() != cols) {
        return None;
    }
    Some(DMatrix::from_fn(rows, cols, |i, j| {
        Complex64::new(data[i][j][0], data[i][j][1])
    }))
}

impl GammaSetFile {
    pub fn from_matrices(m: usize, gammas: &[CMat]) -> Self {
        GammaSetFile { m, gammas: gammas.iter().map(matrix_to_data).collect() }
    }

    pub fn from_rep(rep: &MatrixRep) -> Self {
        Self::from_matrices(rep.m(), rep.gammas())
    }

    /// Validates the matrices into a representation.
    pub fn into_rep(&self, tol: &Tolerances) -> Result<MatrixRep, MatrepError> {
        let dim = 1usize << self.m.min(30);
        let mats: Vec<CMat> = self
            .gammas
            .iter()
            .enumerate()
            .map(|(index, data)| {
                data_to_matrix(data).ok_or(MatrepError::WrongShape {
                    index,
                    rows: data.len(),
                    cols: data.first().map_or(0, |r| r.len()),
                    dim,
                })
            })
            .collect::<Result<_, _>>()?;
        MatrixRep::from_gammas(self.m, mats, tol)
    }
}
