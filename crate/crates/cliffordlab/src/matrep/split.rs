//! Real-vector-space bookkeeping behind the two complexification routes.
//!
//! Checks three concrete facts at a given half-dimension `m`: the real
//! dimension of the complex matrix algebra splits as a real summand plus
//! `i` times it; the column split of the 2x2 complex algebra lands on
//! quaternion coordinates through `(z1, z2) -> z1 + j z2`; and the
//! interleaved 2x2 cell pattern is closed under products (a genuine
//! subalgebra, not just a subspace).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{c, max_abs, quaternion_block_defect, CMat};
use std::ops::Mul;

/// Hamilton quaternion `w + x i + y j + z k`, only what the coordinate
/// bijection needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    /// `z1 + j z2`: with `z2 = c + d i`, `j z2 = c j - d k`.
    pub fn from_c2(z1: Complex64, z2: Complex64) -> Self {
        Quaternion { w: z1.re, x: z1.im, y: z2.re, z: -z2.im }
    }

    /// Inverse of [`Quaternion::from_c2`].
    pub fn to_c2(self) -> (Complex64, Complex64) {
        (Complex64::new(self.w, self.x), Complex64::new(self.y, -self.z))
    }

    /// The 2x2 complex model `(z1, -conj(z2); z2, conj(z1))`.
    pub fn to_matrix(self) -> CMat {
        let (z1, z2) = self.to_c2();
        CMat::from_row_slice(2, 2, &[z1, -z2.conj(), z2, z1.conj()])
    }

    #[cfg(test)]
    fn dist(self, o: Quaternion) -> f64 {
        (self.w - o.w)
            .abs()
            .max((self.x - o.x).abs())
            .max((self.y - o.y).abs())
            .max((self.z - o.z).abs())
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }
}

/// Outcome of the split demonstration.
#[derive(Debug, Clone)]
pub struct SplitReport {
    pub m: usize,
    /// Real dimension of the complex matrix algebra, `2 * 4^m`.
    pub complex_dim: u64,
    /// Real dimensions of the two summands, `4^m` each.
    pub summand_dims: (u64, u64),
    pub dims_consistent: bool,
    pub column_split_ok: bool,
    pub bijection_ok: bool,
    pub model_multiplicative_ok: bool,
    pub closure_ok: bool,
    pub closure_defect: f64,
    pub samples: usize,
}

impl SplitReport {
    pub fn all_ok(&self) -> bool {
        self.dims_consistent
            && self.column_split_ok
            && self.bijection_ok
            && self.model_multiplicative_ok
            && self.closure_ok
    }
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::from_c2(random_complex(rng), random_complex(rng))
}

/// A random matrix conforming to the interleaved 2x2 cell pattern.
fn random_block_matrix(half: usize, rng: &mut ChaCha8Rng) -> CMat {
    let mut m = CMat::zeros(2 * half, 2 * half);
    for bi in 0..half {
        for bj in 0..half {
            let a = random_complex(rng);
            let b = random_complex(rng);
            m[(2 * bi, 2 * bj)] = a;
            m[(2 * bi, 2 * bj + 1)] = -b.conj();
            m[(2 * bi + 1, 2 * bj)] = b;
            m[(2 * bi + 1, 2 * bj + 1)] = a.conj();
        }
    }
    m
}

/// Runs the demonstration for half-dimension `m >= 1` with a fixed seed.
pub fn complex_split_demo(m: usize, seed: u64) -> SplitReport {
    assert!(m >= 1, "half-dimension must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 20usize;

    let complex_dim = 2 * 4u64.pow(m as u32);
    let summand_dims = (4u64.pow(m as u32), 4u64.pow(m as u32));
    let dims_consistent = complex_dim == summand_dims.0 + summand_dims.1;

    // Column split of the 2x2 complex algebra: the two columns carry the
    // whole matrix and each is a copy of C^2.
    let mut column_split_ok = true;
    for _ in 0..samples {
        let mat = CMat::from_fn(2, 2, |_, _| random_complex(&mut rng));
        let col0 = mat.column(0).into_owned();
        let col1 = mat.column(1).into_owned();
        let mut rebuilt = CMat::zeros(2, 2);
        rebuilt.set_column(0, &col0);
        rebuilt.set_column(1, &col1);
        column_split_ok &= rebuilt == mat;
    }

    // (z1, z2) -> z1 + j z2 takes (1, 0) to the unit quaternion and
    // round-trips exactly, so it is a bijection of real vector spaces.
    let mut bijection_ok = Quaternion::from_c2(c(1.0), c(0.0)) == Quaternion::ONE;
    for _ in 0..samples {
        let (z1, z2) = (random_complex(&mut rng), random_complex(&mut rng));
        let q = Quaternion::from_c2(z1, z2);
        let (w1, w2) = q.to_c2();
        bijection_ok &= (w1 - z1).norm() == 0.0 && (w2 - z2).norm() == 0.0;
    }

    // The coordinate bijection intertwines the Hamilton product with the
    // 2x2 matrix model.
    let mut model_multiplicative_ok = max_abs(&(Quaternion::ONE.to_matrix() - CMat::identity(2, 2))) == 0.0;
    for _ in 0..samples {
        let (q1, q2) = (random_quaternion(&mut rng), random_quaternion(&mut rng));
        let lhs = (q1 * q2).to_matrix();
        let rhs = q1.to_matrix() * q2.to_matrix();
        model_multiplicative_ok &= max_abs(&(lhs - rhs)) <= 1e-12;
    }

    // The cell pattern is closed under multiplication at size 2^m.
    let half = 1usize << (m - 1);
    let mut closure_defect: f64 = 0.0;
    for _ in 0..samples {
        let prod = random_block_matrix(half, &mut rng) * random_block_matrix(half, &mut rng);
        closure_defect = closure_defect
            .max(quaternion_block_defect(&prod).expect("even size by construction"));
    }
    let closure_ok = closure_defect <= 1e-12 * (half as f64);

    SplitReport {
        m,
        complex_dim,
        summand_dims,
        dims_consistent,
        column_split_ok,
        bijection_ok,
        model_multiplicative_ok,
        closure_ok,
        closure_defect,
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_maps_to_unit() {
        assert_eq!(Quaternion::from_c2(c(1.0), c(0.0)), Quaternion::ONE);
    }

    #[test]
    fn dimension_bookkeeping_at_m1() {
        let report = complex_split_demo(1, 1);
        assert_eq!(report.complex_dim, 8);
        assert_eq!(report.summand_dims, (4, 4));
        assert!(report.all_ok(), "{report:?}");
    }

    #[test]
    fn closure_holds_up_to_m3() {
        for m in 1..=3 {
            let report = complex_split_demo(m, 99);
            assert!(report.all_ok(), "m = {m}: {report:?}");
        }
    }

    #[test]
    fn hamilton_product_against_model() {
        let i = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
        let j = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
        let k = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };
        assert_eq!(i * j, k);
        assert_eq!((j * i).dist(k), 2.0);
        assert!((i * i).dist(Quaternion { w: -1.0, ..Quaternion::ONE }) == 0.0);
    }
}
