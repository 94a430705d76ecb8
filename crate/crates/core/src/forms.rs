//! Two-forms on a Lie algebra and their Chevalley–Eilenberg differential.
//!
//! The differential uses
//! `dω(X,Y,Z) = ω([X,Y],Z) − ω([X,Z],Y) + ω([Y,Z],X)`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{format_rational, rational_str, Matrix, Rational, Subspace};
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

/// One coefficient `ω(e_i, e_j)`, 1-based, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub i: usize,
    pub j: usize,
    #[serde(with = "rational_str")]
    pub value: Rational,
}

/// Antisymmetric bilinear form with `matrix[(i, j)] = ω(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    matrix: Matrix,
}

/// Alternating trilinear form; only `i < j < k` values are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    dim: usize,
    values: Vec<((usize, usize, usize), Rational)>,
}

impl TwoForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in i..n {
                if matrix[(i, j)] != -matrix[(j, i)].clone() {
                    return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(TwoForm { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        TwoForm { matrix: Matrix::zeros(dim, dim) }
    }

    /// Sum of `value · e^i ∧ e^j`, 1-based.
    pub fn from_entries(dim: usize, entries: &[FormEntry]) -> Result<Self> {
        let mut m = Matrix::zeros(dim, dim);
        for e in entries {
            if e.i == 0 || e.j == 0 || e.i > dim || e.j > dim {
                return Err(Error::Invalid(format!("form index ({}, {}) outside 1..={dim}", e.i, e.j)));
            }
            if e.i == e.j {
                if !e.value.is_zero() {
                    return Err(Error::NotAntisymmetric { i: e.i, j: e.j });
                }
                continue;
            }
            let (i, j) = (e.i - 1, e.j - 1);
            m[(i, j)] += e.value.clone();
            m[(j, i)] -= e.value.clone();
        }
        Ok(TwoForm { matrix: m })
    }

    /// Shorthand for `from_entries` with rational coefficients.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, Rational)]) -> Result<Self> {
        let entries: Vec<FormEntry> =
            terms.iter().map(|(i, j, v)| FormEntry { i: *i, j: *j, value: v.clone() }).collect();
        Self::from_entries(dim, &entries)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn scale(&self, s: &Rational) -> TwoForm {
        TwoForm { matrix: self.matrix.scale(s) }
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let wy = self.matrix.mul_vec(y).expect("vector length matches form");
        x.iter().zip(&wy).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
    }

    pub fn entries(&self) -> Vec<FormEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.matrix[(i, j)].is_zero() {
                    out.push(FormEntry { i: i + 1, j: j + 1, value: self.matrix[(i, j)].clone() });
                }
            }
        }
        out
    }

    pub fn det(&self) -> Rational {
        self.matrix.det().expect("form matrix is square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    /// Gram matrix of the form restricted to `w`'s canonical basis.
    pub fn restricted(&self, w: &Subspace) -> Matrix {
        self.pairing(w, w)
    }

    /// `P[a][b] = ω(u_a, v_b)` over canonical bases.
    pub fn pairing(&self, u: &Subspace, v: &Subspace) -> Matrix {
        let ub = u.basis();
        let vb = v.basis();
        Matrix::from_fn(ub.len(), vb.len(), |a, b| self.eval(&ub[a], &vb[b]))
    }

    /// Human-readable sum, e.g. `e1^e6 - e2^e5 + e3^e4`.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for e in self.entries() {
            let neg = e.value.is_negative();
            let mag = e.value.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push('*');
            }
            out.push_str(&format!("e{}^e{}", e.i, e.j));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl ThreeForm {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Value on basis vectors, 0-based, any order.
    pub fn value(&self, i: usize, j: usize, k: usize) -> Rational {
        if i == j || j == k || i == k {
            return Rational::zero();
        }
        let mut idx = [i, j, k];
        let mut sign = 1;
        // bubble sort tracks the permutation parity
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    sign = -sign;
                }
            }
        }
        let key = (idx[0], idx[1], idx[2]);
        let v = self
            .values
            .binary_search_by(|(t, _)| t.cmp(&key))
            .map(|p| self.values[p].1.clone())
            .unwrap_or_else(|_| Rational::zero());
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|(_, v)| v.is_zero())
    }

    /// Nonzero values on increasing triples, 1-based.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize), Rational)> {
        self.values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j, k), v)| ((i + 1, j + 1, k + 1), v.clone()))
            .collect()
    }
}

pub fn ce_differential(l: &LieAlgebra, w: &TwoForm) -> Result<ThreeForm> {
    let n = l.dim();
    if w.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.dim() });
    }
    let m = w.matrix();
    // ω([e_a, e_b], e_c) = Σ_p C^p_ab ω_pc
    let wb = |a: usize, b: usize, c: usize| -> Rational {
        (0..n)
            .filter(|&p| !l.constant(p, a, b).is_zero() && !m[(p, c)].is_zero())
            .map(|p| l.constant(p, a, b) * &m[(p, c)])
            .sum()
    };
    let mut values = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = wb(i, j, k) - wb(i, k, j) + wb(j, k, i);
                values.push(((i, j, k), v));
            }
        }
    }
    Ok(ThreeForm { dim: n, values })
}

pub fn is_closed(l: &LieAlgebra, w: &TwoForm) -> bool {
    ce_differential(l, w).is_ok_and(|d| d.is_zero())
}

/// Closed and nondegenerate.
pub fn is_symplectic(l: &LieAlgebra, w: &TwoForm) -> bool {
    w.dim() == l.dim() && w.is_nondegenerate() && is_closed(l, w)
}

pub fn is_isotropic(w: &TwoForm, sub: &Subspace) -> bool {
    w.restricted(sub).is_zero()
}

/// The pairing `U × V → R` is perfect: it has no kernel on either side.
pub fn are_dual(w: &TwoForm, u: &Subspace, v: &Subspace) -> bool {
    let rank = w.pairing(u, v).rank();
    rank == u.dim() && rank == v.dim()
}

pub fn omega_orthogonal(w: &TwoForm, u: &Subspace, v: &Subspace) -> bool {
    w.pairing(u, v).is_zero()
}

/// The restriction of `ω` to `sub` is nondegenerate.
pub fn is_nondegenerate_on(w: &TwoForm, sub: &Subspace) -> bool {
    w.restricted(sub).rank() == sub.dim()
}
