//! Almost complex structures, compatibility with a two-form, the associated
//! metric and the `J`-adapted ascending series.
//!
//! Matrices act on column vectors: `J(e_i) = Σ_k J[(k, i)] e_k`, so the
//! images of the basis vectors are the columns of `J`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{format_vector, Matrix, Rational, Signature, Subspace};
use crate::forms::TwoForm;
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

/// Exact almost complex structure. Construction through [`Acs::new`]
/// guarantees `J² = −I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acs {
    matrix: Matrix,
}

/// Symmetric nondegenerate bilinear form with its inverse and signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    matrix: Matrix,
    inverse: Matrix,
    signature: Signature,
}

/// Rank-3 array `N^k_ij` of the Nijenhuis tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nijenhuis {
    dim: usize,
    data: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcsClassification {
    /// The series `a_l(J)` reaches the whole algebra.
    pub nilpotent: bool,
    /// Dimensions of `a_1(J), a_2(J), …` up to stabilization.
    pub series_dims: Vec<usize>,
    /// Outcome of checking the supplied chain; `None` when no chain was given.
    pub almost_nilpotent: Option<bool>,
    /// Why the chain was rejected.
    pub chain_failure: Option<String>,
}

impl Acs {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let acs = Acs { matrix };
        if !check_acs(&acs).is_zero() {
            return Err(Error::NotAlmostComplex);
        }
        Ok(acs)
    }

    /// Wraps a square matrix without the `J² = −I` gate, for diagnostics.
    pub fn new_unchecked(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        Ok(Acs { matrix })
    }

    /// `e_{2k-1} -> e_{2k}`, `e_{2k} -> -e_{2k-1}`.
    pub fn standard(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for k in (0..dim).step_by(2) {
            m[(k + 1, k)] = Rational::from_integer(1.into());
            m[(k, k + 1)] = Rational::from_integer((-1).into());
        }
        Acs { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v).expect("vector length matches J")
    }

    /// One line per basis vector, e.g. `J(e1) = e2`.
    pub fn describe(&self) -> Vec<String> {
        (0..self.dim()).map(|i| format!("J(e{}) = {}", i + 1, format_vector(&self.matrix.column(i)))).collect()
    }
}

/// `J·J + I`; zero exactly when `J` is an almost complex structure.
pub fn check_acs(j: &Acs) -> Matrix {
    &(j.matrix() * j.matrix()) + &Matrix::identity(j.dim())
}

/// `Jᵀω + ωJ`, entry `(i, j)` being `ω(Je_i, e_j) + ω(e_i, Je_j)`.
pub fn check_compatible(w: &TwoForm, j: &Acs) -> Result<Matrix> {
    if w.dim() != j.dim() {
        return Err(Error::DimensionMismatch { expected: w.dim(), found: j.dim() });
    }
    let wj = w.matrix() * j.matrix();
    Ok(&(&j.matrix().transpose() * w.matrix()) + &wj)
}

/// `g(X, Y) = ω(X, JY)`, i.e. `g = ω·J`.
pub fn associated_metric(w: &TwoForm, j: &Acs) -> Result<Metric> {
    if w.dim() != j.dim() {
        return Err(Error::DimensionMismatch { expected: w.dim(), found: j.dim() });
    }
    let g = w.matrix() * j.matrix();
    if !g.is_symmetric() {
        return Err(Error::Incompatible);
    }
    Metric::new(g)
}

impl Metric {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let inverse = matrix.inverse().map_err(|_| Error::DegenerateMetric)?;
        let signature = matrix.signature()?;
        Ok(Metric { matrix, inverse, signature })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.matrix.mul_vec(y).expect("vector length matches metric");
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn orthogonal(&self, u: &Subspace, v: &Subspace) -> bool {
        u.basis().iter().all(|x| v.basis().iter().all(|y| self.eval(x, y).is_zero()))
    }

    /// `g(JX, JY) = g(X, Y)` for all `X, Y`.
    pub fn is_j_invariant(&self, j: &Acs) -> bool {
        &(&j.matrix().transpose() * &self.matrix) * j.matrix() == self.matrix
    }
}

/// `J(W) ⊆ W`.
pub fn j_invariant(j: &Acs, w: &Subspace) -> bool {
    w.contains(&w.image(j.matrix()))
}

/// `a_1(J) ⊆ a_2(J) ⊆ …` with
/// `a_l(J) = {X : [X, g] ⊆ a_{l−1}(J) and [JX, g] ⊆ a_{l−1}(J)}`, `a_0 = 0`.
///
/// Terms are listed until the series stops growing; the last entry is the
/// stable term, which may be `{0}` or a proper subspace.
pub fn acs_ascending_series(l: &LieAlgebra, j: &Acs) -> Vec<Subspace> {
    let mut series = Vec::new();
    let mut prev = Subspace::zero(l.dim());
    loop {
        let v = l.centralizer_mod(&prev);
        let next = v.intersection(&v.preimage(j.matrix()));
        if next == prev {
            if series.is_empty() {
                series.push(next);
            }
            return series;
        }
        let full = next.is_full();
        series.push(next.clone());
        if full {
            return series;
        }
        prev = next;
    }
}

/// Nilpotency of `J`, plus verification of a supplied chain of `J`-invariant
/// ideals of dimensions `2, 4, …, dim` ending in the whole algebra.
pub fn classify_acs(l: &LieAlgebra, j: &Acs, chain: Option<&[Subspace]>) -> AcsClassification {
    let series = acs_ascending_series(l, j);
    let nilpotent = series.last().is_some_and(Subspace::is_full);
    let (almost_nilpotent, chain_failure) = match chain {
        None => (None, None),
        Some(chain) => match check_chain(l, j, chain) {
            Ok(()) => (Some(true), None),
            Err(reason) => (Some(false), Some(reason)),
        },
    };
    AcsClassification {
        nilpotent,
        series_dims: series.iter().map(Subspace::dim).collect(),
        almost_nilpotent,
        chain_failure,
    }
}

fn check_chain(l: &LieAlgebra, j: &Acs, chain: &[Subspace]) -> std::result::Result<(), String> {
    let n = l.dim();
    let want: Vec<usize> = (1..=n / 2).map(|k| 2 * k).collect();
    let dims: Vec<usize> = chain.iter().map(Subspace::dim).collect();
    if dims != want {
        return Err(format!("chain dimensions {dims:?}, expected {want:?}"));
    }
    for (idx, b) in chain.iter().enumerate() {
        if b.ambient() != n {
            return Err(format!("term {} lives in dimension {}", idx + 1, b.ambient()));
        }
        if !l.is_ideal(b) {
            return Err(format!("term {} ({b}) is not an ideal", idx + 1));
        }
        if !j_invariant(j, b) {
            return Err(format!("term {} ({b}) is not J-invariant", idx + 1));
        }
        if idx > 0 && !b.contains(&chain[idx - 1]) {
            return Err(format!("term {} does not contain term {}", idx + 1, idx));
        }
    }
    Ok(())
}

impl Nijenhuis {
    /// `N^k_ij`, 0-based.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.data[(k * self.dim + i) * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|k| (0..n).all(|i| (0..n).all(|j| *self.get(k, i, j) == -self.get(k, j, i).clone())))
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> Rational {
        self.data.iter().map(num_traits::Signed::abs).max().unwrap_or_else(Rational::zero)
    }
}

/// `N(X,Y) = [JX,JY] − J[JX,Y] − J[X,JY] − [X,Y]` on basis pairs.
pub fn nijenhuis(l: &LieAlgebra, j: &Acs) -> Result<Nijenhuis> {
    let n = l.dim();
    if j.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: j.dim() });
    }
    let cols: Vec<Vec<Rational>> = (0..n).map(|i| j.matrix().column(i)).collect();
    let mut data = vec![Rational::zero(); n * n * n];
    for a in 0..n {
        let mut ea = vec![Rational::zero(); n];
        ea[a] = Rational::from_integer(1.into());
        for b in 0..n {
            let mut eb = vec![Rational::zero(); n];
            eb[b] = Rational::from_integer(1.into());
            let t1 = l.bracket(&cols[a], &cols[b])?;
            let inner: Vec<Rational> =
                l.bracket(&cols[a], &eb)?.iter().zip(l.bracket(&ea, &cols[b])?).map(|(p, q)| p + q).collect();
            let t2 = j.apply(&inner);
            let t4 = l.bracket_basis(a, b);
            for k in 0..n {
                data[(k * n + a) * n + b] = &t1[k] - &t2[k] - &t4[k];
            }
        }
    }
    Ok(Nijenhuis { dim: n, data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn g3() -> LieAlgebra {
        LieAlgebra::from_simple(6, &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1)]).unwrap()
    }

    fn g3_form() -> TwoForm {
        TwoForm::from_terms(6, &[(1, 6, int(1)), (2, 5, int(-1)), (3, 4, int(1))]).unwrap()
    }

    /// Canonical G3 structure at ψ11 = 0, ψ12 = 1, ψ34 = 1.
    fn g3_j() -> Matrix {
        let mut m = Matrix::zeros(6, 6);
        for (r, c, v) in [(0, 1, 1), (1, 0, -1), (2, 3, 1), (3, 2, -1), (4, 5, 1), (5, 4, -1)] {
            m[(r, c)] = int(v);
        }
        m
    }

    fn abelian_pair() -> (LieAlgebra, TwoForm, Acs) {
        let w = TwoForm::from_terms(6, &[(1, 2, int(1)), (3, 4, int(1)), (5, 6, int(1))]).unwrap();
        (LieAlgebra::abelian(6), w, Acs::standard(6))
    }

    #[test]
    fn acs_residuals() {
        assert!(check_acs(&Acs::standard(6)).is_zero());
        let id = Acs::new_unchecked(Matrix::identity(6)).unwrap();
        assert_eq!(check_acs(&id), Matrix::identity(6).scale(&int(2)));
        assert_eq!(Acs::new(Matrix::identity(6)), Err(Error::NotAlmostComplex));
    }

    #[test]
    fn compatibility() {
        let (_, w, j) = abelian_pair();
        assert!(check_compatible(&w, &j).unwrap().is_zero());
        let j3 = Acs::new(g3_j()).unwrap();
        assert!(check_compatible(&g3_form(), &j3).unwrap().is_zero());
        // Flipping the sign on the e5,e6 block keeps J² = −I, but that block
        // is paired with e1,e2 by ω. (The e3,e4 block alone would not do:
        // every rotation of a symplectic plane is compatible with it.)
        let mut flipped = g3_j();
        flipped[(4, 5)] = int(-1);
        flipped[(5, 4)] = int(1);
        let flipped = Acs::new(flipped).unwrap();
        assert!(!check_compatible(&g3_form(), &flipped).unwrap().is_zero());
        assert_eq!(associated_metric(&g3_form(), &flipped), Err(Error::Incompatible));
    }

    #[test]
    fn g3_metric_matches_display() {
        let g = associated_metric(&g3_form(), &Acs::new(g3_j()).unwrap()).unwrap();
        let mut want = Matrix::zeros(6, 6);
        for (r, c) in [(0, 4), (4, 0), (1, 5), (5, 1), (2, 2), (3, 3)] {
            want[(r, c)] = int(-1);
        }
        assert_eq!(g.matrix(), &want);
        assert_eq!(g.signature(), Signature::from([2, 4, 0]));
        assert_eq!(&(g.matrix() * g.inverse()), &Matrix::identity(6));
    }

    #[test]
    fn abelian_metric_is_positive() {
        let (_, w, j) = abelian_pair();
        let g = associated_metric(&w, &j).unwrap();
        assert_eq!(g.matrix(), &Matrix::identity(6));
    }

    #[test]
    fn riemannian_g1_variant_metric() {
        let t = rat(1, 2);
        let w = TwoForm::from_terms(6, &[(1, 6, int(1)), (2, 5, int(1) - &t), (3, 4, t.clone())]).unwrap();
        let mut m = Matrix::zeros(6, 6);
        for (a, b) in [(0, 5), (1, 4), (2, 3)] {
            m[(b, a)] = int(1);
            m[(a, b)] = int(-1);
        }
        let g = associated_metric(&w, &Acs::new(m).unwrap()).unwrap();
        let half = rat(1, 2);
        assert_eq!(g.matrix(), &Matrix::diagonal(&[int(1), half.clone(), half.clone(), half.clone(), half, int(1)]));
        assert_eq!(g.signature(), Signature::from([6, 0, 0]));
    }

    #[test]
    fn invariance_of_subspaces() {
        let j = Acs::new(g3_j()).unwrap();
        let l = g3();
        assert!(j_invariant(&j, &l.descending_series()[1]));
        assert!(j_invariant(&j, &Subspace::full(6)));
        assert!(!j_invariant(&j, &Subspace::coordinate(6, &[0])));
    }

    #[test]
    fn ascending_series_and_classification() {
        let (l, _, j) = abelian_pair();
        let c = classify_acs(&l, &j, None);
        assert!(c.nilpotent);
        assert_eq!(c.series_dims, vec![6]);

        let l = g3();
        let j = Acs::new(g3_j()).unwrap();
        let series = acs_ascending_series(&l, &j);
        let asc = l.ascending_series().unwrap();
        for (k, a) in series.iter().enumerate() {
            assert!(j_invariant(&j, a) && l.is_ideal(a));
            assert!(asc[k.min(asc.len() - 1)].contains(a));
        }
        let desc = l.descending_series();
        let chain = [desc[3].clone(), desc[1].clone(), Subspace::full(6)];
        assert_eq!(classify_acs(&l, &j, Some(&chain)).almost_nilpotent, Some(true));
        let bad = [Subspace::coordinate(6, &[0, 1]), desc[1].clone(), Subspace::full(6)];
        let c = classify_acs(&l, &j, Some(&bad));
        assert_eq!(c.almost_nilpotent, Some(false));
        assert!(c.chain_failure.unwrap().contains("not an ideal"));
        let short = [desc[1].clone(), Subspace::full(6)];
        assert!(classify_acs(&l, &j, Some(&short)).chain_failure.unwrap().contains("dimensions"));
    }

    #[test]
    fn nijenhuis_tensor() {
        let (l, _, j) = abelian_pair();
        assert!(nijenhuis(&l, &j).unwrap().is_zero());
        let n = nijenhuis(&g3(), &Acs::new(g3_j()).unwrap()).unwrap();
        assert!(!n.is_zero());
        assert!(n.is_antisymmetric());
    }

    fn compatible_j() -> impl Strategy<Value = Acs> {
        // Conjugating the standard structure by any invertible P keeps J² = −I.
        proptest::collection::vec(-2i64..=2, 36).prop_filter_map("singular", |v| {
            let p = Matrix::new(6, 6, v.into_iter().map(int).collect()).ok()?;
            let inv = p.inverse().ok()?;
            Acs::new(&(&p * Acs::standard(6).matrix()) * &inv).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn nijenhuis_is_antisymmetric(j in compatible_j()) {
            prop_assert!(nijenhuis(&g3(), &j).unwrap().is_antisymmetric());
        }

        #[test]
        fn compatible_pairs_give_hermitian_metrics(j in compatible_j()) {
            // g0 = I + JᵀJ is J-invariant, so ω = g0·J is compatible with J.
            let jm = j.matrix();
            let g0 = &Matrix::identity(6) + &(&jm.transpose() * jm);
            let w = TwoForm::new(&g0 * jm).unwrap();
            prop_assert!(check_compatible(&w, &j).unwrap().is_zero());
            let g = associated_metric(&w, &j).unwrap();
            prop_assert!(g.is_j_invariant(&j));
        }
    }
}
