//! Levi-Civita connection and curvature of left-invariant metrics.
//!
//! Conventions, with basis indices `i, j, k, …`:
//!
//! * `∇_{e_i} e_j = Σ_n Γ^n_ij e_n`
//! * `R(e_i, e_j) e_k = Σ_s R^s_ijk e_s`, where `R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]`
//! * `Ric_jk = Σ_s R^s_sjk`, `S = Σ g^jk Ric_jk`
//! * `g(R,R) = Σ R_ijkl R_abcd g^ia g^jb g^kc g^ld` with `R_ijkl = Σ_s g_ls R^s_ijk`

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::acs::{Acs, Metric};
use crate::exact::{rational_rows, rational_str, Matrix, Rational, Signature, Subspace};
use crate::forms::{self, TwoForm};
use crate::liealg::LieAlgebra;
use crate::{Error, Result};

/// Dense tensor kernels shared by the exact and float code paths.
///
/// Layouts: `c[(k·n + i)·n + j] = C^k_ij`, `g[i·n + j]`,
/// `gamma[(m·n + i)·n + j] = Γ^m_ij`, `r[((s·n + i)·n + j)·n + k] = R^s_ijk`.
pub mod kernel {
    use num_traits::Num;

    pub fn christoffel<T: Num + Clone>(n: usize, c: &[T], g: &[T], ginv: &[T]) -> Vec<T> {
        let cc = |k: usize, i: usize, j: usize| &c[(k * n + i) * n + j];
        // t[(k·n + i)·n + j] = 2 g(∇_i e_j, e_k)
        let mut t = vec![T::zero(); n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = T::zero();
                    for p in 0..n {
                        let a = cc(p, i, j);
                        if !a.is_zero() {
                            acc = acc + g[p * n + k].clone() * a.clone();
                        }
                        let b = cc(p, k, i);
                        if !b.is_zero() {
                            acc = acc + g[p * n + j].clone() * b.clone();
                        }
                        let d = cc(p, k, j);
                        if !d.is_zero() {
                            acc = acc + g[i * n + p].clone() * d.clone();
                        }
                    }
                    t[(k * n + i) * n + j] = acc;
                }
            }
        }
        let two = T::one() + T::one();
        let mut gamma = vec![T::zero(); n * n * n];
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut acc = T::zero();
                    for k in 0..n {
                        let gi = &ginv[k * n + m];
                        let tk = &t[(k * n + i) * n + j];
                        if !gi.is_zero() && !tk.is_zero() {
                            acc = acc + gi.clone() * tk.clone();
                        }
                    }
                    gamma[(m * n + i) * n + j] = acc / two.clone();
                }
            }
        }
        gamma
    }

    pub fn riemann<T: Num + Clone>(n: usize, c: &[T], gamma: &[T]) -> Vec<T> {
        let gm = |m: usize, i: usize, j: usize| &gamma[(m * n + i) * n + j];
        let mut r = vec![T::zero(); n * n * n * n];
        for s in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut acc = T::zero();
                        for p in 0..n {
                            let (a, b) = (gm(s, i, p), gm(p, j, k));
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc + a.clone() * b.clone();
                            }
                            let (a, b) = (gm(s, j, p), gm(p, i, k));
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc - a.clone() * b.clone();
                            }
                            let (a, b) = (&c[(p * n + i) * n + j], gm(s, p, k));
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc - a.clone() * b.clone();
                            }
                        }
                        r[((s * n + i) * n + j) * n + k] = acc;
                    }
                }
            }
        }
        r
    }
}

/// `Γ^n_ij` of a left-invariant connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    dim: usize,
    data: Vec<Rational>,
}

/// `R^s_ijk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Riemann {
    dim: usize,
    data: Vec<Rational>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ^n_ij`, 0-based.
    pub fn get(&self, n: usize, i: usize, j: usize) -> &Rational {
        &self.data[(n * self.dim + i) * self.dim + j]
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    /// `∇_X Y` for left-invariant fields with constant coordinates.
    pub fn nabla(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (m, o) in out.iter_mut().enumerate() {
                    let g = self.get(m, i, j);
                    if !g.is_zero() {
                        *o += &xy * g;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl Riemann {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `R^s_ijk`, 0-based.
    pub fn get(&self, s: usize, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[((s * self.dim + i) * self.dim + j) * self.dim + k]
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `R(X, Y) Z` for arbitrary vectors.
    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    if z[k].is_zero() {
                        continue;
                    }
                    let xyz = &xy * &z[k];
                    for (s, o) in out.iter_mut().enumerate() {
                        let r = self.get(s, i, j, k);
                        if !r.is_zero() {
                            *o += &xyz * r;
                        }
                    }
                }
            }
        }
        out
    }

    /// Nonzero components, 1-based.
    pub fn nonzero(&self) -> Vec<RiemannComponent> {
        let n = self.dim;
        let mut out = Vec::new();
        for s in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = self.get(s, i, j, k);
                        if !v.is_zero() {
                            out.push(RiemannComponent { s: s + 1, i: i + 1, j: j + 1, k: k + 1, value: v.clone() });
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChristoffelComponent {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    #[serde(with = "rational_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiemannComponent {
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[serde(with = "rational_str")]
    pub value: Rational,
}

fn check_dims(l: &LieAlgebra, g: &Metric) -> Result<()> {
    if g.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: g.dim() });
    }
    Ok(())
}

fn flat(m: &Matrix) -> Vec<Rational> {
    m.entries().map(|(_, _, v)| v.clone()).collect()
}

/// Christoffel symbols
/// `Γ^n_ij = ½ g^kn (g_pk C^p_ij + g_pj C^p_ki + g_ip C^p_kj)`.
pub fn levi_civita(l: &LieAlgebra, g: &Metric) -> Result<Connection> {
    check_dims(l, g)?;
    let n = l.dim();
    let data = kernel::christoffel(n, l.constants(), &flat(g.matrix()), &flat(g.inverse()));
    Ok(Connection { dim: n, data })
}

/// Independent evaluation of the Koszul formula
/// `2g(∇_X Y, Z) = g([X,Y],Z) + g([Z,X],Y) + g(X,[Z,Y])` on basis vectors,
/// solved for `∇_X Y` with the inverse metric.
pub fn koszul_connection(l: &LieAlgebra, g: &Metric) -> Result<Connection> {
    check_dims(l, g)?;
    let n = l.dim();
    let e = basis(n);
    let half = Rational::new(1.into(), 2.into());
    let mut data = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let lowered: Vec<Rational> = (0..n)
                .map(|k| {
                    let t1 = g.eval(&l.bracket(&e[i], &e[j])?, &e[k]);
                    let t2 = g.eval(&l.bracket(&e[k], &e[i])?, &e[j]);
                    let t3 = g.eval(&e[i], &l.bracket(&e[k], &e[j])?);
                    Ok((t1 + t2 + t3) * &half)
                })
                .collect::<Result<_>>()?;
            let up = g.inverse().mul_vec(&lowered)?;
            for (m, v) in up.into_iter().enumerate() {
                data[(m * n + i) * n + j] = v;
            }
        }
    }
    Ok(Connection { dim: n, data })
}

/// `R^s_ijk = Γ^s_ip Γ^p_jk − Γ^s_jp Γ^p_ik − C^p_ij Γ^s_pk`.
pub fn riemann(l: &LieAlgebra, conn: &Connection) -> Result<Riemann> {
    if conn.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: conn.dim() });
    }
    let n = l.dim();
    Ok(Riemann { dim: n, data: kernel::riemann(n, l.constants(), conn.data()) })
}

/// Curvature straight from `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z`
/// on all basis triples, without the index formula.
pub fn riemann_by_definition(l: &LieAlgebra, conn: &Connection) -> Result<Riemann> {
    if conn.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: conn.dim() });
    }
    let n = l.dim();
    let e = basis(n);
    let mut data = vec![Rational::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            let xy = l.bracket(&e[i], &e[j])?;
            for k in 0..n {
                let a = conn.nabla(&e[i], &conn.nabla(&e[j], &e[k]));
                let b = conn.nabla(&e[j], &conn.nabla(&e[i], &e[k]));
                let c = conn.nabla(&xy, &e[k]);
                for s in 0..n {
                    data[((s * n + i) * n + j) * n + k] = &a[s] - &b[s] - &c[s];
                }
            }
        }
    }
    Ok(Riemann { dim: n, data })
}

/// `Ric_jk = Σ_s R^s_sjk`.
pub fn ricci(r: &Riemann) -> Matrix {
    let n = r.dim();
    Matrix::from_fn(n, n, |j, k| (0..n).map(|s| r.get(s, s, j, k).clone()).sum())
}

pub fn scalar_curvature(g: &Metric, ric: &Matrix) -> Rational {
    let n = g.dim();
    let gi = g.inverse();
    let mut acc = Rational::zero();
    for j in 0..n {
        for k in 0..n {
            if !gi[(j, k)].is_zero() && !ric[(j, k)].is_zero() {
                acc += &gi[(j, k)] * &ric[(j, k)];
            }
        }
    }
    acc
}

/// Full contraction of the lowered curvature tensor with itself.
pub fn curvature_scalar_square(g: &Metric, r: &Riemann) -> Rational {
    let n = g.dim();
    let gm = g.matrix();
    let gi = g.inverse();
    let idx = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
    // lowered[i,j,k,l] = Σ_s g_ls R^s_ijk
    let mut lowered = vec![Rational::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut acc = Rational::zero();
                    for s in 0..n {
                        let v = r.get(s, i, j, k);
                        if !v.is_zero() && !gm[(l, s)].is_zero() {
                            acc += &gm[(l, s)] * v;
                        }
                    }
                    lowered[idx(i, j, k, l)] = acc;
                }
            }
        }
    }
    // raise one slot at a time
    let mut raised = lowered.clone();
    for slot in 0..4 {
        let mut next = vec![Rational::zero(); n * n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let pos = [a, b, c, d];
                        let mut acc = Rational::zero();
                        for m in 0..n {
                            let mut src = pos;
                            src[slot] = m;
                            let v = &raised[idx(src[0], src[1], src[2], src[3])];
                            let w = &gi[(pos[slot], m)];
                            if !v.is_zero() && !w.is_zero() {
                                acc += w * v;
                            }
                        }
                        next[idx(a, b, c, d)] = acc;
                    }
                }
            }
        }
        raised = next;
    }
    lowered.iter().zip(&raised).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

/// `Ric(JX, JY) = Ric(X, Y)`, i.e. `Jᵀ·Ric·J = Ric`.
pub fn ricci_hermitian(ric: &Matrix, j: &Acs) -> bool {
    hermitian_residual(ric, j).is_zero()
}

pub fn hermitian_residual(ric: &Matrix, j: &Acs) -> Matrix {
    &(&(&j.matrix().transpose() * ric) * j.matrix()) - ric
}

fn basis(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::from_integer(1.into());
            v
        })
        .collect()
}

fn max_abs<'a>(it: impl Iterator<Item = Rational> + 'a) -> Rational {
    it.map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
}

/// `max |Γ^k_ij − Γ^k_ji − C^k_ij|`.
pub fn torsion_residual(l: &LieAlgebra, conn: &Connection) -> Rational {
    let n = l.dim();
    max_abs((0..n).flat_map(|k| {
        (0..n).flat_map(move |i| (0..n).map(move |j| conn.get(k, i, j) - conn.get(k, j, i) - l.constant(k, i, j)))
    }))
}

/// `max |g(∇_i e_j, e_k) + g(e_j, ∇_i e_k)|`.
pub fn metric_compatibility_residual(g: &Metric, conn: &Connection) -> Rational {
    let n = g.dim();
    let gm = g.matrix();
    let lower = |i: usize, j: usize, k: usize| -> Rational { (0..n).map(|l| &gm[(l, k)] * conn.get(l, i, j)).sum() };
    max_abs((0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| lower(i, j, k) + lower(i, k, j)))))
}

/// `max |R^s_ijk + R^s_jik|`.
pub fn antisymmetry_residual(r: &Riemann) -> Rational {
    let n = r.dim();
    max_abs((0..n).flat_map(|s| {
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| r.get(s, i, j, k) + r.get(s, j, i, k))))
    }))
}

/// `max |R^s_ijk + R^s_jki + R^s_kij|`.
pub fn bianchi_residual(r: &Riemann) -> Rational {
    let n = r.dim();
    max_abs((0..n).flat_map(|s| {
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| (0..n).map(move |k| r.get(s, i, j, k) + r.get(s, j, k, i) + r.get(s, k, i, j)))
        })
    }))
}

pub fn symmetry_residual(m: &Matrix) -> Rational {
    max_abs(m.entries().map(|(i, j, v)| v - &m[(j, i)]))
}

/// `max |∇_X Y|, |∇_Y X|` over basis `X` of `sub` and all basis `Y`.
pub fn nabla_residual_on(conn: &Connection, sub: &Subspace) -> Rational {
    let e = basis(conn.dim());
    let mut out = Rational::zero();
    for x in sub.basis() {
        for y in &e {
            for v in conn.nabla(x, y).into_iter().chain(conn.nabla(y, x)) {
                out = out.max(v.abs());
            }
        }
    }
    out
}

/// Subspaces for the three-block decomposition `g = A ⊕ B ⊕ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: Subspace,
    pub b: Subspace,
    pub c: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Hypotheses and conclusions of the block-decomposition theorem, checked
/// separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub hypotheses: Vec<Clause>,
    pub conclusions: Vec<Clause>,
}

impl TheoremCheck {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.holds)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.hypotheses.iter().chain(&self.conclusions).filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }
}

fn clause(name: &str, holds: bool, detail: impl Into<String>) -> Clause {
    Clause { name: name.to_string(), holds, detail: detail.into() }
}

/// Evaluates the hypotheses of the decomposition theorem and then every
/// conclusion on basis vectors: the metric clause, the four covariant
/// derivative clauses, the three curvature clauses and the Ricci block.
pub fn nabla_subspace_checks(
    l: &LieAlgebra,
    w: &TwoForm,
    j: &Acs,
    g: &Metric,
    conn: &Connection,
    r: &Riemann,
    ric: &Matrix,
    d: &Decomposition,
) -> TheoremCheck {
    let n = l.dim();
    let (a, b, c) = (&d.a, &d.b, &d.c);
    let bc = b.sum(c);
    let c1 = l.descending_series().get(1).cloned().unwrap_or_else(|| Subspace::zero(n));
    let direct = a.dim() + b.dim() + c.dim() == n && a.sum(&bc).is_full();
    let hypotheses = vec![
        clause("direct_sum", direct, format!("dims {}+{}+{}", a.dim(), b.dim(), c.dim())),
        clause("bc_is_derived_algebra", bc == c1, format!("B+C = {bc}, C1g = {c1}")),
        clause(
            "bc_j_invariant_abelian_ideal",
            l.is_ideal(&bc) && l.is_abelian_subspace(&bc) && crate::acs::j_invariant(j, &bc),
            "",
        ),
        clause(
            "c_j_invariant_abelian_ideal",
            l.is_ideal(c) && l.is_abelian_subspace(c) && crate::acs::j_invariant(j, c),
            "",
        ),
        clause("a_isotropic", forms::is_isotropic(w, a), ""),
        clause("c_isotropic", forms::is_isotropic(w, c), ""),
        clause("a_c_dual", forms::are_dual(w, a, c), ""),
        clause("b_nondegenerate", forms::is_nondegenerate_on(w, b), ""),
        clause("b_c_orthogonal", forms::omega_orthogonal(w, b, c), ""),
    ];

    let e = basis(n);
    let all = &e;
    let bcv = bc.basis();
    let cv = c.basis();
    let first_bad = |vs: Vec<(String, bool)>| -> (bool, String) {
        match vs.into_iter().find(|(_, ok)| !ok) {
            Some((what, _)) => (false, what),
            None => (true, String::new()),
        }
    };
    let show = |v: &[Rational]| crate::exact::format_vector(v);

    let mut conclusions = Vec::new();
    conclusions.push(clause("g_bc_c_orthogonal", g.orthogonal(&bc, c), ""));

    let mut vs = Vec::new();
    for x in all {
        for y in bcv {
            let ok = bc.contains_vector(&conn.nabla(x, y)) && bc.contains_vector(&conn.nabla(y, x));
            vs.push((format!("X={}, Y={}", show(x), show(y)), ok));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("nabla_into_bc", ok, why));

    let mut vs = Vec::new();
    for x in all {
        for y in cv {
            let ok = c.contains_vector(&conn.nabla(x, y)) && c.contains_vector(&conn.nabla(y, x));
            vs.push((format!("X={}, Y={}", show(x), show(y)), ok));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("nabla_into_c", ok, why));

    let mut vs = Vec::new();
    for x in bcv {
        for y in bcv {
            let xy = conn.nabla(x, y);
            let ok = xy == conn.nabla(y, x) && c.contains_vector(&xy);
            vs.push((format!("X={}, Y={}", show(x), show(y)), ok));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("nabla_symmetric_into_c", ok, why));

    let mut vs = Vec::new();
    for x in bcv {
        for y in cv {
            let ok = conn.nabla(x, y).iter().all(Zero::is_zero) && conn.nabla(y, x).iter().all(Zero::is_zero);
            vs.push((format!("X={}, Y={}", show(x), show(y)), ok));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("nabla_vanishes_bc_c", ok, why));

    // Curvature clauses: place vectors from the subspace in the given slots
    // and run the others over the full basis.
    let triples = |slots: &[usize], sub: &[Vec<Rational>]| -> Vec<[Vec<Rational>; 3]> {
        let pick = |pos: usize| if slots.contains(&pos) { sub } else { all.as_slice() };
        let mut out = Vec::new();
        for x in pick(0) {
            for y in pick(1) {
                for z in pick(2) {
                    out.push([x.clone(), y.clone(), z.clone()]);
                }
            }
        }
        out
    };

    let mut vs = Vec::new();
    for slot in 0..3 {
        for [x, y, z] in triples(&[slot], bcv) {
            let v = r.apply(&x, &y, &z);
            vs.push((format!("R({}, {}){}", show(&x), show(&y), show(&z)), bc.contains_vector(&v)));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("r_one_in_bc", ok, why));

    let mut vs = Vec::new();
    for slots in [[0, 1], [0, 2], [1, 2]] {
        for [x, y, z] in triples(&slots, bcv) {
            let v = r.apply(&x, &y, &z);
            vs.push((format!("R({}, {}){}", show(&x), show(&y), show(&z)), c.contains_vector(&v)));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("r_two_in_bc", ok, why));

    let mut vs = Vec::new();
    for slot in 0..3 {
        for [x, y, z] in triples(&[slot], cv) {
            let v = r.apply(&x, &y, &z);
            vs.push((format!("R({}, {}){}", show(&x), show(&y), show(&z)), v.iter().all(Zero::is_zero)));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("r_one_in_c", ok, why));

    let mut vs = Vec::new();
    for x in bcv {
        for y in all {
            let rx = ric.mul_vec(y).expect("shape");
            let v: Rational = x.iter().zip(&rx).map(|(p, q)| p * q).sum();
            let ry = ric.mul_vec(x).expect("shape");
            let u: Rational = y.iter().zip(&ry).map(|(p, q)| p * q).sum();
            vs.push((format!("Ric({}, {})", show(x), show(y)), v.is_zero() && u.is_zero()));
        }
    }
    let (ok, why) = first_bad(vs);
    conclusions.push(clause("ricci_block", ok, why));

    TheoremCheck { hypotheses, conclusions }
}

/// Everything computed for one `(algebra, J, metric)` instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureReport {
    pub connection: Connection,
    pub riemann: Riemann,
    pub ricci: Matrix,
    pub scalar: Rational,
    pub rr: Rational,
    pub hermitian_ricci: bool,
    pub signature: Signature,
}

impl CurvatureReport {
    pub fn compute(l: &LieAlgebra, j: &Acs, g: &Metric) -> Result<Self> {
        let connection = levi_civita(l, g)?;
        let riemann = riemann(l, &connection)?;
        let ricci = ricci(&riemann);
        let scalar = scalar_curvature(g, &ricci);
        let rr = curvature_scalar_square(g, &riemann);
        let hermitian_ricci = ricci_hermitian(&ricci, j);
        Ok(CurvatureReport { connection, riemann, ricci, scalar, rr, hermitian_ricci, signature: g.signature() })
    }

    pub fn to_json(&self) -> CurvatureJson {
        let n = self.connection.dim();
        let mut gamma = Vec::new();
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let v = self.connection.get(m, i, j);
                    if !v.is_zero() {
                        gamma.push(ChristoffelComponent { n: m + 1, i: i + 1, j: j + 1, value: v.clone() });
                    }
                }
            }
        }
        CurvatureJson {
            format_version: crate::FORMAT_VERSION,
            gamma,
            riemann_nonzero: self.riemann.nonzero(),
            ricci: self.ricci.to_rows(),
            scalar: self.scalar.clone(),
            rr: self.rr.clone(),
            hermitian_ricci: self.hermitian_ricci,
            signature: self.signature,
        }
    }
}

/// Serialized curvature report; Christoffel symbols and curvature are listed
/// sparsely with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureJson {
    pub format_version: u32,
    pub gamma: Vec<ChristoffelComponent>,
    pub riemann_nonzero: Vec<RiemannComponent>,
    #[serde(with = "rational_rows")]
    pub ricci: Vec<Vec<Rational>>,
    #[serde(with = "rational_str")]
    pub scalar: Rational,
    #[serde(rename = "RR", with = "rational_str")]
    pub rr: Rational,
    pub hermitian_ricci: bool,
    pub signature: Signature,
}
