use std::fmt;

use num_traits::{One, Zero};

use super::{format_rational, Matrix, Rational};

/// Linear subspace of `Q^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. Two spans of the same space therefore compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    /// Span of arbitrary vectors of length `ambient`.
    ///
    /// # Panics
    ///
    /// Panics if a vector has the wrong length.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length must match the ambient dimension");
        }
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(rows).expect("rows have equal length");
        let (red, pivots) = m.rref();
        Subspace { ambient, basis: (0..pivots.len()).map(|i| red.row(i).to_vec()).collect() }
    }

    /// Span of standard basis vectors, 0-based indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| unit(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical basis vectors.
    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.clone()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Annihilator in the dual, identified with `Q^n` by the standard pairing:
    /// `{w : <w, v> = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("basis rows").kernel_basis()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let constraints = self.annihilator().sum(&other.annihilator());
        if constraints.is_zero() {
            return Self::full(self.ambient);
        }
        Matrix::from_rows(constraints.basis).expect("basis rows").kernel_basis()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        self.sum(&Self::span(self.ambient, [v.to_vec()])).dim() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Image under the linear map whose matrix acts on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        Self::span(map.rows(), self.basis.iter().map(|v| map.mul_vec(v).expect("shape checked")))
    }

    /// Preimage `{v : map v in self}`.
    pub fn preimage(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.rows(), self.ambient);
        let ann = self.annihilator();
        if ann.is_zero() {
            return Self::full(map.cols());
        }
        let a = Matrix::from_rows(ann.basis).expect("basis rows");
        (&a * map).kernel_basis()
    }

    /// Names the standard basis vectors when the space is coordinate,
    /// otherwise prints the canonical basis.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "{0}".to_string();
        }
        let coordinate: Option<Vec<usize>> = self
            .basis
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
            })
            .collect();
        match coordinate {
            Some(idx) => {
                let names: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
                format!("span{{{}}}", names.join(", "))
            }
            None => {
                let vecs: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
                format!("span{{{}}}", vecs.join(", "))
            }
        }
    }
}

/// Linear combination written in the `e_i` basis, e.g. `e4 - e5`.
pub fn format_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
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
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {})", self.dim(), self.ambient, self.describe())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_form_identifies_spans() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 0])]);
        let b = Subspace::coordinate(3, &[0, 1]);
        assert_eq!(a, b);
        assert_eq!(a.describe(), "span{e1, e2}");
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(a.intersection(&b), Subspace::coordinate(3, &[1]));
        assert_eq!(a.intersection(&Subspace::zero(3)), Subspace::zero(3));
        assert_eq!(a.intersection(&Subspace::full(3)), a);
    }

    #[test]
    fn describe_noncoordinate() {
        let s = Subspace::span(6, [v(&[0, 0, 0, 1, -1, 0])]);
        assert_eq!(s.describe(), "span{e4 - e5}");
    }

    #[test]
    fn preimage_of_kernel() {
        let mut shift = Matrix::zeros(3, 3);
        shift[(0, 1)] = int(1);
        shift[(1, 2)] = int(1);
        let pre = Subspace::zero(3).preimage(&shift);
        assert_eq!(pre, Subspace::coordinate(3, &[0]));
        assert_eq!(Subspace::full(3).image(&shift), Subspace::coordinate(3, &[0, 1]));
    }

    fn vectors() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 0..4)
            .prop_map(|vs| vs.into_iter().map(|x| v(&x)).collect())
    }

    proptest! {
        #[test]
        fn dimension_formula(a in vectors(), b in vectors()) {
            let a = Subspace::span(4, a);
            let b = Subspace::span(4, b);
            let i = a.intersection(&b);
            prop_assert_eq!(a.sum(&b).dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(a.contains(&i) && b.contains(&i));
        }

        #[test]
        fn annihilator_is_an_involution(a in vectors()) {
            let a = Subspace::span(4, a);
            prop_assert_eq!(a.annihilator().dim(), 4 - a.dim());
            prop_assert_eq!(a.annihilator().annihilator(), a);
        }
    }
}
