//! Built-in structures on six-dimensional nilpotent Lie algebras.
//!
//! Each entry fixes an algebra, a symplectic form family and a canonical
//! compatible almost complex structure depending on rational parameters,
//! together with the closed form of its Ricci tensor. Parameters named
//! `psiXY` refer to the entry in row X, column Y of J.
//!
//! Every entry also accepts an optional nonzero `lambda` that scales the
//! symplectic form. The Ricci tensor does not depend on it.

mod data;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::acs::{associated_metric, check_compatible, Acs, Metric};
use crate::curvature::Decomposition;
use crate::exact::{format_rational, int, rat, Matrix, Rational, Subspace};
use crate::forms::{is_closed, TwoForm};
use crate::liealg::LieAlgebra;
use crate::{Error, Result};
use num_traits::{One, Zero};

/// Parameter assignment, keyed by name.
pub type Params = BTreeMap<String, Rational>;

/// Name of the optional global scale of the symplectic form.
pub const SCALE: &str = "lambda";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Any,
    NonZero,
    /// Any value except 0 and 1.
    AvoidZeroOne,
    /// Strictly between 0 and 1.
    OpenUnit,
}

impl Domain {
    pub fn admits(self, v: &Rational) -> bool {
        match self {
            Domain::Any => true,
            Domain::NonZero => !v.is_zero(),
            Domain::AvoidZeroOne => !v.is_zero() && !v.is_one(),
            Domain::OpenUnit => v > &Rational::zero() && v < &Rational::one(),
        }
    }

    /// The constraint as a sentence about `name`.
    pub fn constraint(self, name: &str) -> String {
        match self {
            Domain::Any => format!("{name} is unconstrained"),
            Domain::NonZero => format!("{name} must be nonzero"),
            Domain::AvoidZeroOne => format!("{name} must avoid {{0,1}}"),
            Domain::OpenUnit => format!("{name} must lie in (0,1)"),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
}

/// How a derived parameter relates to the free ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Binding {
    /// Filled in when absent; may be overridden by the caller.
    Default,
    /// Structural; a supplied value must agree with the rule.
    Fixed,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DerivedParam {
    pub name: &'static str,
    pub binding: Binding,
    pub domain: Domain,
    pub rule: &'static str,
    #[serde(skip)]
    value: fn(&Params) -> Rational,
}

/// When the Ricci tensor is expected to satisfy Ric(JX, JY) = Ric(X, Y).
#[derive(Clone, Copy)]
pub enum Hermitian {
    Never,
    Always,
    When {
        rule: &'static str,
        holds: fn(&Params) -> bool,
    },
    /// No claim either way.
    Unstated,
}

impl Hermitian {
    /// Expected outcome at the given (resolved) parameters.
    pub fn expected(&self, params: &Params) -> Option<bool> {
        match self {
            Hermitian::Never => Some(false),
            Hermitian::Always => Some(true),
            Hermitian::When { holds, .. } => Some(holds(params)),
            Hermitian::Unstated => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Hermitian::Never => "never".into(),
            Hermitian::Always => "always".into(),
            Hermitian::When { rule, .. } => format!("iff {rule}"),
            Hermitian::Unstated => "not stated".into(),
        }
    }
}

/// Where the nonzero entries of the Ricci tensor may sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RicciSupport {
    /// Rows and columns 1, 2 only.
    UpperBlock,
    /// Only the (1,1) entry.
    FirstEntry,
    Unstated,
}

impl RicciSupport {
    /// Whether a nonzero Ric entry at 0-based (i, j) is allowed.
    pub fn allows(self, i: usize, j: usize) -> bool {
        match self {
            RicciSupport::UpperBlock => i < 2 && j < 2,
            RicciSupport::FirstEntry => i == 0 && j == 0,
            RicciSupport::Unstated => true,
        }
    }
}

/// Coordinate split g = A + B + C, 1-based indices.
#[derive(Clone, Copy, Debug)]
pub struct Split {
    pub a: &'static [usize],
    pub b: &'static [usize],
    pub c: &'static [usize],
    /// Whether the structure is stated to satisfy the subspace hypotheses.
    pub asserted: bool,
}

impl Split {
    pub fn decomposition(&self) -> Decomposition {
        let sub = |idx: &[usize]| Subspace::coordinate(6, &idx.iter().map(|i| i - 1).collect::<Vec<_>>());
        Decomposition { a: sub(self.a), b: sub(self.b), c: sub(self.c) }
    }
}

pub struct CatalogEntry {
    pub id: &'static str,
    pub group: &'static str,
    pub summary: &'static str,
    /// `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`, 1-based.
    pub brackets: &'static [(usize, usize, usize, i64)],
    pub params: &'static [ParamSpec],
    pub derived: &'static [DerivedParam],
    pub form_text: &'static str,
    pub acs_text: &'static [&'static str],
    pub hermitian: Hermitian,
    pub support: RicciSupport,
    pub riemannian: bool,
    /// Basis of the two-dimensional first term of the invariant chain; the
    /// chain continues with span{e3,...,e6} and g. Empty when no chain is
    /// recorded.
    pub chain_base: &'static [&'static [(usize, i64)]],
    pub decomposition: Option<Split>,
    /// A convenient admissible assignment of the free parameters.
    pub reference: &'static [(&'static str, i64, i64)],
    pub notes: &'static [&'static str],
    form: fn(&Params) -> Vec<(usize, usize, Rational)>,
    acs: fn(&Params) -> Matrix,
    /// Images J(e_k) as displayed for families given by three images only.
    shown: Option<fn(&Params) -> Vec<(usize, Vec<Rational>)>>,
    ricci: Option<fn(&Params) -> Matrix>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).finish_non_exhaustive()
    }
}

/// Unvalidated ingredients of a structure.
#[derive(Clone, Debug)]
pub struct Parts {
    pub params: Params,
    pub algebra: LieAlgebra,
    pub form: TwoForm,
    pub acs: Matrix,
}

/// A fully validated structure built from an entry.
#[derive(Clone, Debug)]
pub struct Instance {
    pub entry: &'static CatalogEntry,
    pub params: Params,
    pub algebra: LieAlgebra,
    pub form: TwoForm,
    pub acs: Acs,
    pub metric: Metric,
}

impl CatalogEntry {
    pub fn algebra(&self) -> LieAlgebra {
        LieAlgebra::from_simple(6, self.brackets).expect("catalog brackets are valid")
    }

    /// The invariant chain (dims 2, 4, 6), if recorded.
    pub fn chain(&self) -> Option<Vec<Subspace>> {
        if self.chain_base.is_empty() {
            return None;
        }
        let base = Subspace::span(
            6,
            self.chain_base.iter().map(|terms| {
                let mut v = vec![Rational::zero(); 6];
                for &(k, c) in terms.iter() {
                    v[k - 1] = int(c);
                }
                v
            }),
        );
        Some(vec![base, Subspace::coordinate(6, &[2, 3, 4, 5]), Subspace::full(6)])
    }

    pub fn has_ricci_closed_form(&self) -> bool {
        self.ricci.is_some()
    }

    pub fn reference_params(&self) -> Params {
        self.reference.iter().map(|&(name, n, d)| (name.to_string(), rat(n, d))).collect()
    }

    /// Checks domains, fills in derived parameters, and rejects unknown or
    /// missing names.
    pub fn resolve(&self, params: &Params) -> Result<Params> {
        let known = |name: &str| {
            name == SCALE || self.params.iter().any(|p| p.name == name) || self.derived.iter().any(|d| d.name == name)
        };
        if let Some(bad) = params.keys().find(|k| !known(k)) {
            return Err(Error::Constraint(format!("{}: unknown parameter {bad}", self.id)));
        }
        let mut out = Params::new();
        for spec in self.params {
            let v = params
                .get(spec.name)
                .ok_or_else(|| Error::Constraint(format!("{}: missing parameter {}", self.id, spec.name)))?;
            if !spec.domain.admits(v) {
                return Err(Error::Constraint(spec.domain.constraint(spec.name)));
            }
            out.insert(spec.name.to_string(), v.clone());
        }
        for d in self.derived {
            let rule = (d.value)(&out);
            let v = match (params.get(d.name), d.binding) {
                (None, _) => rule,
                (Some(v), Binding::Default) => v.clone(),
                (Some(v), Binding::Fixed) if *v == rule => rule,
                (Some(v), Binding::Fixed) => {
                    return Err(Error::Constraint(format!(
                        "{} is fixed to {} = {}, got {}",
                        d.name,
                        d.rule,
                        format_rational(&rule),
                        format_rational(v)
                    )))
                }
            };
            if !d.domain.admits(&v) {
                return Err(Error::Constraint(d.domain.constraint(d.name)));
            }
            out.insert(d.name.to_string(), v);
        }
        if let Some(l) = params.get(SCALE) {
            if l.is_zero() {
                return Err(Error::Constraint(format!("{SCALE} must be nonzero")));
            }
            out.insert(SCALE.to_string(), l.clone());
        }
        Ok(out)
    }

    /// The raw algebra, form and J matrix at resolved parameters, before
    /// any validation beyond parameter constraints.
    pub fn parts(&self, params: &Params) -> Result<Parts> {
        let params = self.resolve(params)?;
        let algebra = self.algebra();
        let mut form = TwoForm::from_terms(6, &(self.form)(&params))?;
        if let Some(l) = params.get(SCALE) {
            form = form.scale(l);
        }
        let acs = (self.acs)(&params);
        Ok(Parts { params, algebra, form, acs })
    }

    pub fn instantiate(&'static self, params: &Params) -> Result<Instance> {
        let Parts { params, algebra, form, acs } = self.parts(params)?;
        if !is_closed(&algebra, &form) {
            return Err(Error::NotClosed);
        }
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let acs = Acs::new(acs)?;
        if let Some(shown) = self.shown {
            for (k, image) in shown(&params) {
                if acs.matrix().column(k - 1) != image {
                    return Err(Error::Invalid(format!("{}: stored J(e{k}) disagrees with its display", self.id)));
                }
            }
        }
        if !check_compatible(&form, &acs)?.is_zero() {
            return Err(Error::Incompatible);
        }
        let metric = associated_metric(&form, &acs)?;
        Ok(Instance { entry: self, params, algebra, form, acs, metric })
    }

    /// The stated Ricci tensor at the given parameters.
    pub fn expected_ricci(&self, params: &Params) -> Result<Matrix> {
        let params = self.resolve(params)?;
        let f = self
            .ricci
            .ok_or_else(|| Error::Precondition(format!("{}: no closed form for the Ricci tensor", self.id)))?;
        Ok(f(&params))
    }

    /// Deterministic admissible samples with numerators and denominators
    /// bounded by 16. Derived parameters are filled in, never sampled.
    pub fn sample_params(&'static self, count: usize, seed: u64) -> Vec<Params> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(self.id));
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let mut draw = Params::new();
            for spec in self.params {
                draw.insert(spec.name.to_string(), draw_value(&mut rng, spec.domain));
            }
            if let Ok(inst) = self.instantiate(&draw) {
                out.push(inst.params);
            }
        }
        out
    }
}

fn draw_value(rng: &mut ChaCha8Rng, domain: Domain) -> Rational {
    loop {
        let v = match domain {
            Domain::OpenUnit => {
                let d = rng.random_range(2..=16i64);
                rat(rng.random_range(1..d), d)
            }
            _ => rat(rng.random_range(-16..=16i64), rng.random_range(1..=16i64)),
        };
        if domain.admits(&v) {
            return v;
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// All entries in catalog order.
pub fn entries() -> &'static [CatalogEntry] {
    &data::ENTRIES
}

pub fn list_entries() -> Vec<(&'static str, &'static str)> {
    entries().iter().map(|e| (e.id, e.summary)).collect()
}

pub fn get(id: &str) -> Result<&'static CatalogEntry> {
    entries().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

pub fn instantiate(id: &str, params: &Params) -> Result<Instance> {
    get(id)?.instantiate(params)
}

pub fn expected_ricci(id: &str, params: &Params) -> Result<Matrix> {
    get(id)?.expected_ricci(params)
}

pub fn sample_params(id: &str, count: usize, seed: u64) -> Result<Vec<Params>> {
    Ok(get(id)?.sample_params(count, seed))
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<'a>(pairs: impl IntoIterator<Item = (&'a str, Rational)>) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{classify_acs, nijenhuis};
    use crate::curvature::{ricci_hermitian, CurvatureReport};
    use crate::exact::{one, zero};

    #[test]
    fn seventeen_entries() {
        let ids: Vec<_> = list_entries().into_iter().map(|(id, _)| id).collect();
        assert_eq!(ids.len(), 17);
        assert!(ids.contains(&"G5.2"));
        assert!(ids.contains(&"G22"));
        assert!(ids.contains(&"G1.riem"));
    }

    #[test]
    fn reference_instances_are_valid() {
        for e in entries() {
            let inst = e.instantiate(&e.reference_params()).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert!(inst.algebra.jacobi_check().is_empty());
            assert!(inst.algebra.is_nilpotent());
            assert_eq!(inst.metric.signature().is_definite(), e.riemannian, "{}", e.id);
        }
    }

    #[test]
    fn g1_reference_point() {
        let p = params([("t", rat(1, 2)), ("psi11", one()), ("psi12", int(2))]);
        let inst = instantiate("G1", &p).unwrap();
        assert_eq!(inst.params["psi34"], int(-4));
        let rep = CurvatureReport::compute(&inst.algebra, &inst.acs, &inst.metric).unwrap();
        assert_eq!(rep.ricci, expected_ricci("G1", &p).unwrap());
        assert!(rep.hermitian_ricci);
    }

    #[test]
    fn constraint_messages() {
        let p = params([("t", zero()), ("psi11", one()), ("psi12", one())]);
        let err = instantiate("G1", &p).unwrap_err().to_string();
        assert!(err.contains("t must avoid {0,1}"), "{err}");
        let p = params([("psi11", one()), ("psi12", zero())]);
        assert!(instantiate("G3", &p).unwrap_err().to_string().contains("psi12 must be nonzero"));
        let p = params([("psi12", one()), ("psi11", one())]);
        assert!(instantiate("G5.2", &p).unwrap_err().to_string().contains("psi11 is fixed"));
        let p = params([("t", int(2))]);
        assert!(instantiate("G1.riem", &p).is_err());
        assert!(matches!(instantiate("G99", &Params::new()), Err(Error::UnknownEntry(_))));
        let p = params([("psi45", one()), ("x", one())]);
        assert!(instantiate("G19", &p).unwrap_err().to_string().contains("unknown parameter x"));
    }

    #[test]
    fn riemannian_variant() {
        let inst = instantiate("G1.riem", &params([("t", rat(1, 2))])).unwrap();
        assert_eq!(inst.metric.signature().to_string(), "(6,0,0)");
    }

    #[test]
    fn closed_form_reference_values() {
        let r = expected_ricci("G19", &params([("psi45", int(2))])).unwrap();
        assert_eq!(r[(0, 0)], int(-2));
        assert_eq!(r.entries().filter(|(_, _, v)| !v.is_zero()).count(), 1);
        let r = expected_ricci("G6", &params([("psi33", zero()), ("psi43", one())])).unwrap();
        assert_eq!(r[(0, 0)], rat(-1, 2));
        let r = expected_ricci("G5.2", &params([("psi12", one())])).unwrap();
        assert_eq!((r[(0, 0)].clone(), r[(1, 1)].clone()), (rat(-1, 4), rat(-1, 4)));
    }

    #[test]
    fn samples_are_deterministic_and_admissible() {
        let a = sample_params("G1", 3, 42).unwrap();
        assert_eq!(a, sample_params("G1", 3, 42).unwrap());
        assert_eq!(a.len(), 3);
        for p in &a {
            assert!(!p["t"].is_zero() && !p["t"].is_one() && !p["psi12"].is_zero());
        }
        let b = sample_params("G5.2", 1, 7).unwrap();
        let p12 = &b[0]["psi12"];
        assert!(b[0]["psi11"].is_zero());
        assert_eq!(b[0]["psi34"], (one() + p12 * p12) / (int(4) * p12));
    }

    #[test]
    fn every_entry_matches_its_closed_form() {
        for e in entries() {
            for p in e.sample_params(3, 5) {
                let inst = e.instantiate(&p).unwrap();
                let rep = CurvatureReport::compute(&inst.algebra, &inst.acs, &inst.metric).unwrap();
                if e.has_ricci_closed_form() {
                    assert_eq!(rep.ricci, e.expected_ricci(&p).unwrap(), "{} at {p:?}", e.id);
                    assert!(rep.scalar.is_zero() && rep.rr.is_zero(), "{}", e.id);
                }
                if let Some(h) = e.hermitian.expected(&inst.params) {
                    assert_eq!(ricci_hermitian(&rep.ricci, &inst.acs), h, "{} at {p:?}", e.id);
                }
                assert!(!nijenhuis(&inst.algebra, &inst.acs).unwrap().is_zero(), "{}", e.id);
                if let Some(chain) = e.chain() {
                    let cls = classify_acs(&inst.algebra, &inst.acs, Some(&chain));
                    assert_eq!(cls.almost_nilpotent, Some(true), "{}: {:?}", e.id, cls.chain_failure);
                }
            }
        }
    }

    #[test]
    fn hermitian_condition_is_sharp() {
        let p = params([("psi11", one()), ("psi12", int(2)), ("psi34", int(3))]);
        let inst = instantiate("G3", &p).unwrap();
        let rep = CurvatureReport::compute(&inst.algebra, &inst.acs, &inst.metric).unwrap();
        assert!(!rep.hermitian_ricci);
        assert_eq!(rep.ricci, expected_ricci("G3", &p).unwrap());
    }

    #[test]
    fn scale_leaves_ricci_unchanged() {
        let mut p = get("G9").unwrap().reference_params();
        let base = instantiate("G9", &p).unwrap();
        p.insert(SCALE.into(), int(-3));
        let scaled = instantiate("G9", &p).unwrap();
        assert_eq!(scaled.metric.matrix(), &base.metric.matrix().scale(&int(-3)));
        let r = |i: &Instance| CurvatureReport::compute(&i.algebra, &i.acs, &i.metric).unwrap().ricci;
        assert_eq!(r(&base), r(&scaled));
    }
}
