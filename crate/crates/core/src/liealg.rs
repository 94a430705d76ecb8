//! Lie algebras given by structure constants, and their central series.
//!
//! Basis indices are 0-based in this API. The JSON fragment and every
//! human-facing string use 1-based indices `e1 … en`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{int, rational_map, Matrix, Rational, Subspace};
use crate::{Error, Result};

/// One nonzero bracket `[e_i, e_j] = Σ_k coeffs[k] e_k`, 1-based, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    #[serde(with = "rational_map")]
    pub coeffs: BTreeMap<usize, Rational>,
}

/// JSON form of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFragment {
    pub dim: usize,
    pub brackets: Vec<Bracket>,
}

/// Real Lie algebra with a fixed basis, stored as dense `C^k_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Rational>,
}

/// Summary of the central series of a nilpotent algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyData {
    /// Smallest `s` with `C^s g = 0`.
    pub class: usize,
    /// Dimensions of the ascending central series `g_1, g_2, …, g`.
    pub type_sequence: Vec<usize>,
    pub is_filiform: bool,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    /// Builds an algebra from `(i, j, k, c)` tuples meaning `[e_i, e_j] += c e_k`,
    /// 1-based, and validates it.
    pub fn from_simple(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut map: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for &(i, j, k, c) in brackets {
            *map.entry((i, j)).or_default().entry(k).or_insert_with(Rational::zero) += int(c);
        }
        let list: Vec<Bracket> = map.into_iter().map(|((i, j), coeffs)| Bracket { i, j, coeffs }).collect();
        Self::from_brackets(dim, &list)
    }

    /// Builds the algebra from its nonzero brackets, completing antisymmetrically.
    ///
    /// Each unordered pair may be listed once. A pair written as `i > j`
    /// is accepted and stored as `-[e_j, e_i]`.
    pub fn from_brackets(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        let mut alg = Self::abelian(dim);
        let mut seen = std::collections::BTreeSet::new();
        for b in brackets {
            for idx in [b.i, b.j].into_iter().chain(b.coeffs.keys().copied()) {
                if idx == 0 || idx > dim {
                    return Err(Error::Invalid(format!("basis index {idx} outside 1..={dim}")));
                }
            }
            if b.i == b.j {
                if b.coeffs.values().any(|v| !v.is_zero()) {
                    return Err(Error::NotAntisymmetric { i: b.i, j: b.j });
                }
                continue;
            }
            let (i, j) = (b.i - 1, b.j - 1);
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::Invalid(format!("bracket [e{}, e{}] listed twice", b.i, b.j)));
            }
            for (&k, v) in &b.coeffs {
                let k = k - 1;
                *alg.slot_mut(k, i, j) = v.clone();
                *alg.slot_mut(k, j, i) = -v.clone();
            }
        }
        alg.validate()?;
        Ok(alg)
    }

    /// Builds from a dense `C[k][i][j]` array and validates antisymmetry and Jacobi.
    pub fn from_constants(dim: usize, c: Vec<Rational>) -> Result<Self> {
        let alg = Self::from_constants_unchecked(dim, c)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Dense constructor that skips the antisymmetry and Jacobi gates.
    ///
    /// Meant for diagnostics on possibly broken input: [`LieAlgebra::jacobi_check`]
    /// and [`LieAlgebra::antisymmetry_violations`] still report the defects.
    pub fn from_constants_unchecked(dim: usize, c: Vec<Rational>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: c.len() });
        }
        Ok(LieAlgebra { dim, c })
    }

    fn validate(&self) -> Result<()> {
        if let Some(&(i, j)) = self.antisymmetry_violations().first() {
            return Err(Error::NotAntisymmetric { i, j });
        }
        let bad = self.jacobi_check();
        if !bad.is_empty() {
            return Err(Error::Jacobi(bad));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `C^k_ij`, 0-based.
    pub fn constant(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[(k * self.dim + i) * self.dim + j]
    }

    fn slot_mut(&mut self, k: usize, i: usize, j: usize) -> &mut Rational {
        &mut self.c[(k * self.dim + i) * self.dim + j]
    }

    /// Dense structure constants in `C[k][i][j]` order.
    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    /// Copy of the algebra with one structure constant overwritten; no validation.
    pub fn with_constant_unchecked(&self, k: usize, i: usize, j: usize, value: Rational) -> Self {
        let mut out = self.clone();
        *out.slot_mut(k, i, j) = value;
        out
    }

    /// 1-based pairs `(i, j)` with `C^k_ij != -C^k_ji` for some `k`, or `C^k_ii != 0`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if (0..n).any(|k| *self.constant(k, i, j) != -self.constant(k, j, i).clone()) {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.constant(k, i, j).clone()).collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(k, i, j);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_{e_i}` acting on column vectors: column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(k, i, j).clone())
    }

    /// Matrix of `ad_x`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.ad_basis(i).scale(xi);
            }
        }
        Ok(m)
    }

    /// Sorted 1-based triples `i < j < k` on which the Jacobi identity fails.
    ///
    /// For antisymmetric constants the Jacobiator is alternating, so the
    /// strictly increasing triples cover every case.
    pub fn jacobi_check(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobiator(i, j, k).iter().all(Zero::is_zero) {
                        bad.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        bad
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for p in 0..n {
                let ab = self.constant(p, a, b);
                if ab.is_zero() {
                    continue;
                }
                for (q, o) in out.iter_mut().enumerate() {
                    let pc = self.constant(q, p, c);
                    if !pc.is_zero() {
                        *o += ab * pc;
                    }
                }
            }
        }
        out
    }

    /// `[U, V]`, the span of brackets of basis vectors.
    pub fn bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                vecs.push(self.bracket(x, y).expect("ambient dimension matches"));
            }
        }
        Subspace::span(self.dim, vecs)
    }

    /// `{X : [X, g] ⊆ W}`.
    pub fn centralizer_mod(&self, w: &Subspace) -> Subspace {
        let ann = w.annihilator();
        if ann.is_zero() {
            return Subspace::full(self.dim);
        }
        let mut rows = Vec::new();
        for j in 0..self.dim {
            // X -> [X, e_j] has column i equal to [e_i, e_j]
            let m = Matrix::from_fn(self.dim, self.dim, |k, i| self.constant(k, i, j).clone());
            for a in ann.basis() {
                rows.push(Matrix::from_rows(vec![a.clone()]).expect("row").try_mul(&m).expect("shape").row(0).to_vec());
            }
        }
        Matrix::from_rows(rows).expect("uniform rows").kernel_basis()
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_mod(&Subspace::zero(self.dim))
    }

    /// `W` is an ideal when `[g, W] ⊆ W`.
    pub fn is_ideal(&self, w: &Subspace) -> bool {
        w.contains(&self.bracket_spaces(&Subspace::full(self.dim), w))
    }

    pub fn is_abelian_subspace(&self, w: &Subspace) -> bool {
        self.bracket_spaces(w, w).is_zero()
    }

    /// `[C^0 g, C^1 g, …]`, stopping at zero or at the first repeated term.
    pub fn descending_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_spaces(&full, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `[g_1, g_2, …, g]`; fails when the series stalls below `g`.
    pub fn ascending_series(&self) -> Result<Vec<Subspace>> {
        let mut series: Vec<Subspace> = Vec::new();
        let mut prev = Subspace::zero(self.dim);
        loop {
            let next = self.centralizer_mod(&prev);
            if next == prev {
                return Err(Error::NotNilpotent);
            }
            let done = next.is_full();
            series.push(next.clone());
            if done {
                return Ok(series);
            }
            prev = next;
        }
    }

    /// `[D^0 g, D^1 g, …]` with `D^{k+1} = [D^k, D^k]`, stopping when stable.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_spaces(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.descending_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn nilpotency_data(&self) -> Result<NilpotencyData> {
        let desc = self.descending_series();
        if !desc.last().is_some_and(Subspace::is_zero) {
            return Err(Error::NotNilpotent);
        }
        let asc = self.ascending_series()?;
        let type_sequence: Vec<usize> = asc.iter().map(Subspace::dim).collect();
        let n = self.dim;
        let filiform_type: Vec<usize> = if n >= 2 { (1..=n - 2).chain([n]).collect() } else { vec![n] };
        Ok(NilpotencyData {
            class: desc.len() - 1,
            is_filiform: n >= 3 && type_sequence == filiform_type,
            type_sequence,
        })
    }

    /// Sparse bracket list, 1-based with `i < j`.
    pub fn to_brackets(&self) -> Vec<Bracket> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: BTreeMap<usize, Rational> = (0..n)
                    .filter(|&k| !self.constant(k, i, j).is_zero())
                    .map(|k| (k + 1, self.constant(k, i, j).clone()))
                    .collect();
                if !coeffs.is_empty() {
                    out.push(Bracket { i: i + 1, j: j + 1, coeffs });
                }
            }
        }
        out
    }

    pub fn to_fragment(&self) -> AlgebraFragment {
        AlgebraFragment { dim: self.dim, brackets: self.to_brackets() }
    }

    pub fn from_fragment(f: &AlgebraFragment) -> Result<Self> {
        Self::from_brackets(f.dim, &f.brackets)
    }

    /// Human-readable bracket table, e.g. `[e1,e2] = e3`.
    pub fn describe(&self) -> Vec<String> {
        self.to_brackets()
            .into_iter()
            .map(|b| {
                let mut v = vec![Rational::zero(); self.dim];
                for (k, c) in b.coeffs {
                    v[k - 1] = c;
                }
                format!("[e{},e{}] = {}", b.i, b.j, crate::exact::format_vector(&v))
            })
            .collect()
    }
}
