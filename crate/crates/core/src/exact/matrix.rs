use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, to_f64, Rational, Subspace};
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Sylvester inertia of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 3]", into = "[usize; 3]")]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Signature {
    pub fn is_definite(&self) -> bool {
        self.null == 0 && (self.positive == 0 || self.negative == 0)
    }

    pub fn is_indefinite(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

impl From<[usize; 3]> for Signature {
    fn from([positive, negative, null]: [usize; 3]) -> Self {
        Signature { positive, negative, null }
    }
}

impl From<Signature> for [usize; 3] {
    fn from(s: Signature) -> Self {
        [s.positive, s.negative, s.null]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.null)
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest absolute entry, zero for an empty matrix.
    pub fn max_abs(&self) -> Rational {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &factor * &m[(r, j)];
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    if m[(c, j)].is_zero() {
                        continue;
                    }
                    let v = &factor * &m[(c, j)];
                    m[(i, j)] -= v;
                }
            }
            det *= pivot;
        }
        Ok(det)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red[(i, n + j)].clone()))
    }

    /// Null space `{v : M v = 0}` in canonical form.
    pub fn kernel_basis(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free.iter().map(|&f| {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, f)].clone();
            }
            v
        });
        Subspace::span(self.cols, vectors)
    }

    /// Sylvester signature by exact symmetric congruence.
    ///
    /// A zero diagonal with a nonzero off-diagonal entry `a_ij` is handled by
    /// the congruence `e_i -> e_i + e_j`, which makes the new diagonal entry
    /// `2 a_ij`.
    pub fn signature(&self) -> Result<Signature> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sig = Signature { positive: 0, negative: 0, null: 0 };
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !a[(i, i)].is_zero()) {
                Some(p) => Some(p),
                None => {
                    let pair =
                        (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero());
                    pair.map(|(i, j)| {
                        a.add_congruent(i, j);
                        i
                    })
                }
            };
            let Some(p) = pivot else {
                sig.null += n - k;
                break;
            };
            a.swap_congruent(k, p);
            let d = a[(k, k)].clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let factor = &a[(i, k)] / &d;
                // row_i -= factor * row_k, then the same on columns
                for j in k..n {
                    let v = &factor * &a[(k, j)];
                    a[(i, j)] -= v;
                }
                for j in k..n {
                    let v = &factor * &a[(j, k)];
                    a[(j, i)] -= v;
                }
            }
            if d.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
        }
        Ok(sig)
    }

    fn swap_congruent(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Replaces basis vector `i` by `e_i + e_j` in the quadratic form.
    fn add_congruent(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = self[(j, c)].clone();
            self[(i, c)] += v;
        }
        for r in 0..self.rows {
            let v = self[(r, j)].clone();
            self[(r, i)] += v;
        }
    }

    /// One-way conversion into the float domain.
    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| to_f64(&self[(i, j)]))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on a shape mismatch; use [`Matrix::try_mul`] for untrusted shapes.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shapes must agree")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix shapes must agree")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix shapes must agree")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion along the first row; independent of elimination.
    fn cofactor_det(a: &Matrix) -> Rational {
        let n = a.rows();
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut acc = Rational::zero();
        for c in 0..n {
            if a[(0, c)].is_zero() {
                continue;
            }
            let minor = Matrix::from_fn(n - 1, n - 1, |i, j| a[(i + 1, if j < c { j } else { j + 1 })].clone());
            let term = &a[(0, c)] * cofactor_det(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_determinant() {
        assert_eq!(Matrix::identity(6).det().unwrap(), int(1));
    }

    #[test]
    fn zero_row_determinant() {
        let a = m(&[&[1, 2, 3], &[0, 0, 0], &[4, 5, 6]]);
        assert_eq!(a.det().unwrap(), int(0));
    }

    #[test]
    fn symplectic_g3_form_has_unit_determinant() {
        // e1^e6 - e2^e5 + e3^e4
        let mut w = Matrix::zeros(6, 6);
        for (i, j, v) in [(0, 5, 1), (1, 4, -1), (2, 3, 1)] {
            w[(i, j)] = int(v);
            w[(j, i)] = int(-v);
        }
        assert_eq!(cofactor_det(&w), int(1));
        assert_eq!(w.det().unwrap(), int(1));
    }

    #[test]
    fn determinant_requires_square() {
        assert_eq!(Matrix::zeros(2, 3).det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn inverse_of_diagonal() {
        let d = Matrix::diagonal(&[int(2), rat(1, 3)]);
        assert_eq!(d.inverse().unwrap(), Matrix::diagonal(&[rat(1, 2), int(3)]));
    }

    #[test]
    fn inverse_of_zero_is_singular() {
        assert_eq!(Matrix::zeros(3, 3).inverse(), Err(Error::Singular));
        assert!(matches!(Matrix::zeros(2, 3).inverse(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(Matrix::zeros(6, 6).kernel_basis().dim(), 6);
        assert_eq!(Matrix::identity(6).kernel_basis().dim(), 0);
    }

    #[test]
    fn signature_of_simple_forms() {
        let d = Matrix::diagonal(&[int(1), int(-1)]);
        assert_eq!(d.signature().unwrap(), Signature::from([1, 1, 0]));
        // hyperbolic pair only
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.signature().unwrap(), Signature::from([1, 1, 0]));
        let z = m(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, 0]]);
        assert_eq!(z.signature().unwrap(), Signature::from([1, 0, 2]));
        assert_eq!(m(&[&[0, 1], &[2, 0]]).signature(), Err(Error::NotSymmetric));
    }

    #[test]
    fn signature_of_g3_metric() {
        // Associated metric of G3 at psi11 = 0, psi12 = 1.
        let mut g = Matrix::zeros(6, 6);
        for (i, j) in [(0, 4), (4, 0), (1, 5), (5, 1), (2, 2), (3, 3)] {
            g[(i, j)] = int(-1);
        }
        // Oracle: the two hyperbolic pairs contribute (1,1) each, the
        // diagonal -1 entries contribute two negatives.
        assert_eq!(g.signature().unwrap(), Signature::from([2, 4, 0]));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-5i64..=5, 1i64..=3), n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(|(a, b)| rat(a, b)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_multiplies_back(a in small_matrix(4)) {
            if let Ok(inv) = a.inverse() {
                prop_assert_eq!(&inv * &a, Matrix::identity(4));
                prop_assert_eq!(&a * &inv, Matrix::identity(4));
            } else {
                prop_assert!(a.det().unwrap().is_zero());
            }
        }

        #[test]
        fn determinant_matches_cofactor_expansion(a in small_matrix(4)) {
            prop_assert_eq!(a.det().unwrap(), cofactor_det(&a));
        }

        #[test]
        fn rank_nullity(a in proptest::collection::vec(-3i64..=3, 15)) {
            let a = Matrix::new(3, 5, a.into_iter().map(int).collect()).unwrap();
            let ker = a.kernel_basis();
            prop_assert_eq!(a.rank() + ker.dim(), 5);
            for v in ker.vectors() {
                prop_assert!(a.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn signature_is_congruence_invariant(s in small_matrix(4), p in small_matrix(4)) {
            let sym = &s + &s.transpose();
            prop_assume!(!p.det().unwrap().is_zero());
            let congruent = &(&p.transpose() * &sym) * &p;
            prop_assert_eq!(sym.signature().unwrap(), congruent.signature().unwrap());
            let sig = sym.signature().unwrap();
            prop_assert_eq!(sig.positive + sig.negative, sym.rank());
        }
    }
}
