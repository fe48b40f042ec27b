//! Dense real matrices and vectors sized for small generators (the crate
//! targets n up to a few dozen), plus the matrix exponential by scaling and
//! squaring with a diagonal Pade approximant.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// A square real matrix with row-major storage and finite entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Real> DenseMatrix<T> {
    /// Builds an n x n matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("matrix dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFinite("matrix entries must be finite".into()));
        }
        Ok(DenseMatrix { dim, entries })
    }

    /// Builds a matrix from rows, checking squareness.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Self::new(dim, rows.iter().flatten().copied().collect())
    }

    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn scale(&self, factor: T) -> Self {
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| e * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &StateVector<T>) -> Result<StateVector<T>> {
        if x.dim() != self.dim {
            return Err(Error::Dimension(format!(
                "cannot apply a {0}x{0} matrix to a vector of length {1}",
                self.dim,
                x.dim()
            )));
        }
        let n = self.dim;
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = T::zero();
            for j in 0..n {
                acc += self[(i, j)] * x[j];
            }
            out[i] = acc;
        }
        Ok(StateVector::from_raw(out))
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> T {
        let n = self.dim;
        let mut best = T::zero();
        for j in 0..n {
            let mut col = T::zero();
            for i in 0..n {
                col += self[(i, j)].abs();
            }
            best = best.max(col);
        }
        best
    }

    /// Frobenius norm.
    pub fn norm_frobenius(&self) -> T {
        self.entries
            .iter()
            .map(|&e| e * e)
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|e| e.is_finite())
    }
}

impl<T> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.dim + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for DenseMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.dim + j]
    }
}

/// A real column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    values: Vec<T>,
}

impl<T: Real> StateVector<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Dimension("state vector must be non-empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("state entries must be finite".into()));
        }
        Ok(StateVector { values })
    }

    pub(crate) fn from_raw(values: Vec<T>) -> Self {
        StateVector { values }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.values
            .iter()
            .map(|&v| v * v)
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        StateVector {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T> std::ops::Index<usize> for StateVector<T> {
    type Output = T;
    #[inline]
    fn index(&self, i: usize) -> &T {
        &self.values[i]
    }
}

/// Pade(13) numerator coefficients (Higham's scaling-and-squaring form).
const PADE13: [f64; 14] = [
    1.0,
    0.5,
    0.12,
    1.8333333333333333e-2,
    1.9927536231884058e-3,
    1.6304347826086957e-4,
    1.0351966873706004e-5,
    5.175983436853002e-7,
    2.0431513566525008e-8,
    6.306022705717595e-10,
    1.4837700484041396e-11,
    2.5291534915979653e-13,
    2.8101705462199623e-15,
    1.5440497506703088e-17,
];

/// Scale threshold: the argument is halved until its 1-norm is at most 0.5,
/// far inside the Pade(13) accuracy region, so the approximant error stays
/// below roundoff for every admissible input.
const SCALE_THRESHOLD: f64 = 0.5;

/// Matrix exponential by scaling and squaring with a fixed-order diagonal
/// Pade(13) approximant.
///
/// Returns `NonFinite` if the input (or the squared result) overflows the
/// scalar type, reporting the offending norm.
pub fn matrix_exponential<T: Real>(m: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    if !m.is_finite() {
        return Err(Error::NonFinite(format!(
            "matrix exponential of a non-finite matrix (1-norm {})",
            m.norm_one()
        )));
    }
    let norm = m.norm_one();
    let threshold = real::<T>(SCALE_THRESHOLD);
    let squarings = if norm > threshold {
        let ratio: f64 = num_traits::ToPrimitive::to_f64(&(norm / threshold)).unwrap_or(f64::MAX);
        ratio.log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale(T::one() / real::<T>((2.0f64).powi(squarings as i32)));
    let mut result = pade13(&scaled)?;
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    if !result.is_finite() {
        return Err(Error::NonFinite(format!(
            "matrix exponential overflowed (input 1-norm {norm})"
        )));
    }
    Ok(result)
}

fn pade13<T: Real>(m: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let n = m.dim();
    let eye = DenseMatrix::identity(n);
    let b: Vec<T> = PADE13.iter().map(|&c| real(c)).collect();
    let m2 = m.matmul(m);
    let m4 = m2.matmul(&m2);
    let m6 = m2.matmul(&m4);

    let w1 = m6.scale(b[13]).add(&m4.scale(b[11])).add(&m2.scale(b[9]));
    let w2 = w1
        .matmul(&m6)
        .add(&m6.scale(b[7]))
        .add(&m4.scale(b[5]))
        .add(&m2.scale(b[3]))
        .add(&eye.scale(b[1]));
    let odd = m.matmul(&w2);

    let v1 = m6.scale(b[12]).add(&m4.scale(b[10])).add(&m2.scale(b[8]));
    let even = v1
        .matmul(&m6)
        .add(&m6.scale(b[6]))
        .add(&m4.scale(b[4]))
        .add(&m2.scale(b[2]))
        .add(&eye.scale(b[0]));

    // exp(M) ~ (even - odd)^{-1} (even + odd)
    solve(&even.sub(&odd), &even.add(&odd))
}

/// Solves A X = B by Gaussian elimination with partial pivoting.
fn solve<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let n = a.dim();
    let mut lhs = a.clone();
    let mut rhs = b.clone();
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = lhs[(col, col)].abs();
        for row in col + 1..n {
            let mag = lhs[(row, col)].abs();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag == T::zero() || !pivot_mag.is_finite() {
            return Err(Error::NonFinite(
                "singular system in the Pade denominator".into(),
            ));
        }
        if pivot_row != col {
            for j in 0..n {
                lhs.entries.swap(col * n + j, pivot_row * n + j);
                rhs.entries.swap(col * n + j, pivot_row * n + j);
            }
        }
        let pivot = lhs[(col, col)];
        for row in col + 1..n {
            let factor = lhs[(row, col)] / pivot;
            if factor == T::zero() {
                continue;
            }
            for j in col..n {
                let v = lhs[(col, j)];
                lhs[(row, j)] -= factor * v;
            }
            for j in 0..n {
                let v = rhs[(col, j)];
                rhs[(row, j)] -= factor * v;
            }
        }
    }
    let mut x = DenseMatrix::zeros(n);
    for col in (0..n).rev() {
        for j in 0..n {
            let mut acc = rhs[(col, j)];
            for k in col + 1..n {
                acc -= lhs[(col, k)] * x[(k, j)];
            }
            x[(col, j)] = acc / lhs[(col, col)];
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &DenseMatrix<f64>, b: &DenseMatrix<f64>, tol: f64) {
        assert_eq!(a.dim(), b.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert!(
                    (a[(i, j)] - b[(i, j)]).abs() <= tol,
                    "entry ({i},{j}): {} vs {}",
                    a[(i, j)],
                    b[(i, j)]
                );
            }
        }
    }

    #[test]
    fn exponential_of_zero_is_identity_exactly() {
        let z = DenseMatrix::<f64>::zeros(2);
        let e = matrix_exponential(&z).unwrap();
        assert_eq!(e, DenseMatrix::identity(2));
    }

    #[test]
    fn exponential_of_rotation_generator() {
        // exp([[0, w], [-w, 0]]) = [[cos w, sin w], [-sin w, cos w]]
        let theta = std::f64::consts::FRAC_PI_2;
        let m = DenseMatrix::from_rows(&[vec![0.0, theta], vec![-theta, 0.0]]).unwrap();
        let e = matrix_exponential(&m).unwrap();
        let want = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        assert_close(&e, &want, 1e-14);
    }

    #[test]
    fn exponential_of_diagonal_matrix() {
        let m = DenseMatrix::diagonal(&[1.0, 2.0]);
        let e = matrix_exponential(&m).unwrap();
        let want = DenseMatrix::diagonal(&[1f64.exp(), 2f64.exp()]);
        assert_close(&e, &want, 1e-13);
    }

    #[test]
    fn exponential_handles_large_norms_by_scaling() {
        let m = DenseMatrix::diagonal(&[50.0, -50.0]);
        let e = matrix_exponential(&m).unwrap();
        assert!((e[(0, 0)] - 50f64.exp()).abs() / 50f64.exp() < 1e-11);
        assert!((e[(1, 1)] - (-50f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn exponential_reports_overflow() {
        let m = DenseMatrix::diagonal(&[1000.0]);
        assert!(matches!(matrix_exponential(&m), Err(Error::NonFinite(_))));
    }

    #[test]
    fn exponential_matches_series_on_nilpotent_matrix() {
        // exp(c N) = I + c N for N = [[0,1],[0,0]]
        let m = DenseMatrix::from_rows(&[vec![0.0, 0.37], vec![0.0, 0.0]]).unwrap();
        let e = matrix_exponential(&m).unwrap();
        let want = DenseMatrix::from_rows(&[vec![1.0, 0.37], vec![0.0, 1.0]]).unwrap();
        assert_close(&e, &want, 1e-15);
    }

    #[test]
    fn constructors_validate_shape_and_finiteness() {
        assert!(DenseMatrix::new(2, vec![1.0, 2.0, 3.0]).is_err());
        assert!(DenseMatrix::new(2, vec![1.0, f64::NAN, 0.0, 1.0]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
        assert!(StateVector::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(StateVector::<f64>::new(vec![]).is_err());
    }

    #[test]
    fn apply_checks_dimensions() {
        let m = DenseMatrix::<f64>::identity(2);
        let x = StateVector::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(m.apply(&x), Err(Error::Dimension(_))));
    }

    #[test]
    fn norms_agree_with_hand_computation() {
        let m = DenseMatrix::from_rows(&[vec![1.0, -2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(m.norm_one(), 6.0);
        assert!((m.norm_frobenius() - 30f64.sqrt()).abs() < 1e-15);
    }
}
