//! Verification suite over catalog entries.
//!
//! Every sample of every entry runs the same ordered list of named checks
//! ([`CHECK_NAMES`]). Exact checks pass only on an exact zero residual. A
//! check that cannot run, because an earlier check failed or because the
//! entry makes no claim, is reported as inconclusive with the reason.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::acs::{check_acs, check_compatible, classify_acs, nijenhuis, Acs, Metric};
use crate::catalog::{self, CatalogEntry, Params, Parts};
use crate::curvature::{
    antisymmetry_residual, bianchi_residual, hermitian_residual, metric_compatibility_residual, nabla_residual_on,
    nabla_subspace_checks, riemann_by_definition, symmetry_residual, torsion_residual, CurvatureReport,
};
use crate::exact::{format_rational, rational_map, Matrix, Rational, Subspace};
use crate::forms::{ce_differential, omega_orthogonal, TwoForm};
use crate::liealg::LieAlgebra;
use crate::{Result, FORMAT_VERSION};

/// Identifies the check list below; bump when it changes.
pub const SUITE_VERSION: &str = "nilgeo-suite-1";

/// Conclusions of the three-block subspace theorem, in report order.
pub const SPLIT_CLAUSES: [&str; 9] = [
    "g_bc_c_orthogonal",
    "nabla_into_bc",
    "nabla_into_c",
    "nabla_symmetric_into_c",
    "nabla_vanishes_bc_c",
    "r_one_in_bc",
    "r_two_in_bc",
    "r_one_in_c",
    "ricci_block",
];

pub const CHECK_NAMES: [&str; 34] = [
    "jacobi",
    "form_closed",
    "form_nondegenerate",
    "acs_square",
    "compatible",
    "metric_symmetric",
    "signature",
    "derived_center_orthogonal",
    "central_ideal_orthogonal",
    "central_nabla_vanishes",
    "torsion_free",
    "metric_compatible",
    "riemann_antisymmetric",
    "bianchi",
    "riemann_oracle",
    "ricci_symmetric",
    "ricci_closed_form",
    "ricci_support",
    "scalar_zero",
    "rr_zero",
    "ricci_hermitian",
    "nijenhuis_nonzero",
    "chain_invariant",
    "split_hypotheses",
    "split.g_bc_c_orthogonal",
    "split.nabla_into_bc",
    "split.nabla_into_c",
    "split.nabla_symmetric_into_c",
    "split.nabla_vanishes_bc_c",
    "split.r_one_in_bc",
    "split.r_two_in_bc",
    "split.r_one_in_c",
    "split.ricci_block",
    "split_conclusions",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entry: String,
    pub sample: usize,
    #[serde(with = "rational_map")]
    pub params: Params,
    pub checks: Vec<CheckResult>,
    /// Not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub format_version: u32,
    pub suite_version: String,
    pub check_names: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub entries: Vec<String>,
    pub counts: BTreeMap<String, Counts>,
    pub failures: usize,
    pub reports: Vec<Report>,
}

impl Summary {
    fn new(samples: usize, seed: u64, reports: Vec<Report>) -> Self {
        let mut counts: BTreeMap<String, Counts> =
            CHECK_NAMES.iter().map(|n| (n.to_string(), Counts::default())).collect();
        let mut entries: Vec<String> = Vec::new();
        for r in &reports {
            if entries.last() != Some(&r.entry) {
                entries.push(r.entry.clone());
            }
            for c in &r.checks {
                let slot = counts.entry(c.name.clone()).or_default();
                match c.status {
                    Status::Pass => slot.pass += 1,
                    Status::Fail => slot.fail += 1,
                    Status::Inconclusive => slot.inconclusive += 1,
                }
            }
        }
        let failures = counts.values().map(|c| c.fail).sum();
        Summary {
            format_version: FORMAT_VERSION,
            suite_version: SUITE_VERSION.to_string(),
            check_names: CHECK_NAMES.iter().map(|s| s.to_string()).collect(),
            samples,
            seed,
            entries,
            counts,
            failures,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Collects results in [`CHECK_NAMES`] order.
struct Sheet {
    checks: Vec<CheckResult>,
}

impl Sheet {
    fn push(&mut self, name: &str, status: Status, residual: Option<String>, detail: impl Into<String>) {
        debug_assert!(CHECK_NAMES.contains(&name), "unregistered check {name}");
        self.checks.push(CheckResult { name: name.to_string(), status, residual, detail: detail.into() });
    }

    /// Exact zero test on a residual.
    fn zero(&mut self, name: &str, residual: &Rational, detail: impl Into<String>) {
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        self.push(name, status, Some(format_rational(residual)), detail);
    }

    fn flag(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, None, detail);
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.push(name, Status::Inconclusive, None, reason);
    }

    fn skip_rest(&mut self, reason: &str) {
        let done = self.checks.len();
        for name in &CHECK_NAMES[done..] {
            self.skip(name, reason);
        }
    }

    fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.status == Status::Fail)
    }
}

fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |m, v| m.max(v.abs()))
}

fn matrix_max(m: &Matrix) -> Rational {
    max_abs(m.entries().map(|(_, _, v)| v))
}

fn first_nonzero(m: &Matrix) -> String {
    m.entries()
        .find(|(_, _, v)| !v.is_zero())
        .map(|(i, j, v)| format!("entry ({},{}) = {}", i + 1, j + 1, format_rational(v)))
        .unwrap_or_default()
}

/// Runs the full check list on one structure. `entry` supplies the claims
/// (closed forms, Hermitian rule, chain, split); the structure itself may be
/// arbitrary, which is how fault injection is tested.
pub fn check_structure(entry: &CatalogEntry, parts: &Parts) -> Vec<CheckResult> {
    let mut s = Sheet { checks: Vec::with_capacity(CHECK_NAMES.len()) };
    let Parts { params, algebra: l, form: w, acs: jm } = parts;

    let bad = l.jacobi_check();
    let jac = max_abs(bad.iter().flat_map(|&(i, j, k)| l.jacobiator(i - 1, j - 1, k - 1)).collect::<Vec<_>>().iter());
    let detail = bad.first().map(|t| format!("first failing triple {t:?}")).unwrap_or_default();
    s.zero("jacobi", &jac, detail);
    if s.failed("jacobi") {
        s.skip_rest("upstream check jacobi failed");
        return s.checks;
    }

    match ce_differential(l, w) {
        Ok(dw) => {
            let nz = dw.nonzero();
            let detail = nz.first().map(|(t, v)| format!("d omega{t:?} = {}", format_rational(v))).unwrap_or_default();
            s.zero("form_closed", &max_abs(nz.iter().map(|(_, v)| v)), detail);
        }
        Err(e) => s.flag("form_closed", false, e.to_string()),
    }
    let det = w.det();
    s.push(
        "form_nondegenerate",
        if det.is_zero() { Status::Fail } else { Status::Pass },
        Some(format_rational(&det)),
        "determinant of omega",
    );

    let acs = Acs::new_unchecked(jm.clone());
    let acs = match acs {
        Ok(a) => a,
        Err(e) => {
            s.flag("acs_square", false, e.to_string());
            s.skip_rest("upstream check acs_square failed");
            return s.checks;
        }
    };
    let sq = check_acs(&acs);
    s.zero("acs_square", &matrix_max(&sq), first_nonzero(&sq));
    match check_compatible(w, &acs) {
        Ok(m) => s.zero("compatible", &matrix_max(&m), first_nonzero(&m)),
        Err(e) => s.flag("compatible", false, e.to_string()),
    }
    let gm = w.matrix() * jm;
    let asym = symmetry_residual(&gm);
    s.zero("metric_symmetric", &asym, "");
    let upstream = ["form_closed", "form_nondegenerate", "acs_square", "compatible", "metric_symmetric"];
    if let Some(name) = upstream.iter().find(|n| s.failed(n)) {
        s.skip_rest(&format!("upstream check {name} failed"));
        return s.checks;
    }
    let g = match Metric::new(gm) {
        Ok(g) => g,
        Err(e) => {
            s.flag("signature", false, e.to_string());
            s.skip_rest("upstream check signature failed");
            return s.checks;
        }
    };
    let sig = g.signature();
    let want = if entry.riemannian { "positive definite" } else { "indefinite" };
    let ok = if entry.riemannian { sig.negative == 0 && sig.null == 0 } else { sig.is_indefinite() };
    s.push(
        "signature",
        if ok { Status::Pass } else { Status::Fail },
        Some(sig.to_string()),
        format!("expected {want}"),
    );

    structural_checks(&mut s, l, w, &acs, &g);
    if let Err(e) = curvature_checks(&mut s, entry, params, l, w, &acs, &g) {
        let reason = format!("curvature computation failed: {e}");
        s.skip_rest(&reason);
    }
    s.checks
}

fn structural_checks(s: &mut Sheet, l: &LieAlgebra, w: &TwoForm, acs: &Acs, g: &Metric) {
    let derived = l.descending_series().get(1).cloned().unwrap_or_else(|| Subspace::zero(l.dim()));
    let center = l.center();
    let pairing = w.pairing(&derived, &center);
    let ok = omega_orthogonal(w, &derived, &center);
    s.push(
        "derived_center_orthogonal",
        if ok { Status::Pass } else { Status::Fail },
        Some(format_rational(&matrix_max(&pairing))),
        format!("omega(C1g, Z) with C1g = {}, Z = {}", derived, center),
    );

    let b = center.intersection(&center.preimage(acs.matrix()));
    if b.is_zero() {
        s.skip("central_ideal_orthogonal", "center contains no J-invariant subspace");
    } else {
        let u = derived.sum(&derived.image(acs.matrix()));
        let mut worst = Rational::zero();
        for x in u.basis() {
            for y in b.basis() {
                worst = worst.max(g.eval(x, y).abs());
            }
        }
        s.zero("central_ideal_orthogonal", &worst, format!("g(C1g + J C1g, {b})"));
    }
}

fn curvature_checks(
    s: &mut Sheet,
    entry: &CatalogEntry,
    params: &Params,
    l: &LieAlgebra,
    w: &TwoForm,
    acs: &Acs,
    g: &Metric,
) -> Result<()> {
    let rep = CurvatureReport::compute(l, acs, g)?;
    let derived = l.descending_series().get(1).cloned().unwrap_or_else(|| Subspace::zero(l.dim()));
    if derived.image(acs.matrix()) == derived {
        let center = l.center();
        s.zero(
            "central_nabla_vanishes",
            &nabla_residual_on(&rep.connection, &center),
            format!("nabla on Z = {center}"),
        );
    } else {
        s.skip("central_nabla_vanishes", "C1g is not J-invariant");
    }

    s.zero("torsion_free", &torsion_residual(l, &rep.connection), "");
    s.zero("metric_compatible", &metric_compatibility_residual(g, &rep.connection), "");
    s.zero("riemann_antisymmetric", &antisymmetry_residual(&rep.riemann), "");
    s.zero("bianchi", &bianchi_residual(&rep.riemann), "");
    let oracle = riemann_by_definition(l, &rep.connection)?;
    let diff = max_abs(rep.riemann.data().iter().zip(oracle.data()).map(|(a, b)| a - b).collect::<Vec<_>>().iter());
    s.zero("riemann_oracle", &diff, "structure-constant formula against nabla composition");
    s.zero("ricci_symmetric", &symmetry_residual(&rep.ricci), "");

    let no_claim = |what: &str| format!("no {what} stated for {}", entry.id);
    if entry.has_ricci_closed_form() {
        let expected = entry.expected_ricci(params)?;
        let d = &rep.ricci - &expected;
        s.zero("ricci_closed_form", &matrix_max(&d), first_nonzero(&d));
    } else {
        s.skip("ricci_closed_form", no_claim("closed form"));
    }
    if entry.support == catalog::RicciSupport::Unstated {
        s.skip("ricci_support", no_claim("support"));
    } else {
        let outside = rep
            .ricci
            .entries()
            .filter(|(i, j, v)| !v.is_zero() && !entry.support.allows(*i, *j))
            .map(|(i, j, v)| format!("({},{}) = {}", i + 1, j + 1, format_rational(v)))
            .collect::<Vec<_>>();
        s.flag("ricci_support", outside.is_empty(), outside.join(", "));
    }
    if entry.has_ricci_closed_form() {
        s.zero("scalar_zero", &rep.scalar, "");
        s.zero("rr_zero", &rep.rr, "");
    } else {
        s.skip("scalar_zero", format!("{}; S = {}", no_claim("scalar curvature"), format_rational(&rep.scalar)));
        s.skip("rr_zero", format!("{}; g(R,R) = {}", no_claim("curvature square"), format_rational(&rep.rr)));
    }
    let herm = hermitian_residual(&rep.ricci, acs);
    match entry.hermitian.expected(params) {
        Some(want) => {
            let got = herm.is_zero();
            let detail = format!(
                "expected {}, {}",
                if want { "J-Hermitian" } else { "not J-Hermitian" },
                if got { "J-Hermitian".to_string() } else { format!("J^T Ric J - Ric has {}", first_nonzero(&herm)) }
            );
            s.push(
                "ricci_hermitian",
                if got == want { Status::Pass } else { Status::Fail },
                Some(format_rational(&matrix_max(&herm))),
                detail,
            );
        }
        None => s.skip("ricci_hermitian", no_claim("Hermitian property")),
    }

    let n = nijenhuis(l, acs)?;
    let m = n.max_abs();
    s.push(
        "nijenhuis_nonzero",
        if m.is_zero() { Status::Fail } else { Status::Pass },
        Some(format_rational(&m)),
        "max |N^k_ij|",
    );

    match entry.chain() {
        Some(chain) => {
            let cls = classify_acs(l, acs, Some(&chain));
            s.flag("chain_invariant", cls.almost_nilpotent == Some(true), cls.chain_failure.unwrap_or_default());
        }
        None => s.skip("chain_invariant", "no invariant chain recorded"),
    }

    let Some(split) = entry.decomposition else {
        s.skip_rest("no A + B + C split recorded");
        return Ok(());
    };
    let t = nabla_subspace_checks(l, w, acs, g, &rep.connection, &rep.riemann, &rep.ricci, &split.decomposition());
    let failed_h: Vec<&str> = t.hypotheses.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    let claim = |holds: bool, detail: String| match (split.asserted, holds) {
        (true, true) => (Status::Pass, detail),
        (true, false) => (Status::Fail, detail),
        (false, true) => (Status::Inconclusive, "not asserted; computed: holds".to_string()),
        (false, false) => (Status::Inconclusive, format!("not asserted; computed: fails ({detail})")),
    };
    let (st, d) = claim(failed_h.is_empty(), format!("failing: {}", failed_h.join(", ")));
    let d = if failed_h.is_empty() && split.asserted { String::new() } else { d };
    s.push("split_hypotheses", st, None, d);
    for (name, clause) in SPLIT_CLAUSES.iter().zip(&t.conclusions) {
        debug_assert_eq!(*name, clause.name);
        let (st, d) = claim(clause.holds, format!("nonzero or misplaced at {}", clause.detail));
        let d = if clause.holds && split.asserted { String::new() } else { d };
        s.push(&format!("split.{name}"), st, None, d);
    }
    let failed_c: Vec<&str> = t.conclusions.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    let (st, d) = claim(failed_c.is_empty(), format!("failing: {}", failed_c.join(", ")));
    let d = if failed_c.is_empty() && split.asserted { String::new() } else { d };
    s.push("split_conclusions", st, None, d);
    Ok(())
}

fn run_cell(entry: &'static CatalogEntry, sample: usize, params: Params) -> Report {
    let start = Instant::now();
    let checks = match entry.parts(&params) {
        Ok(parts) => check_structure(entry, &parts),
        Err(e) => {
            let mut s = Sheet { checks: Vec::new() };
            s.skip_rest(&format!("instantiation failed: {e}"));
            s.checks
        }
    };
    Report { entry: entry.id.to_string(), sample, params, checks, wall_time: start.elapsed() }
}

fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("NILGEO_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

fn run_cells(cells: Vec<(&'static CatalogEntry, usize, Params)>) -> Vec<Report> {
    thread_pool().install(|| cells.into_par_iter().map(|(e, i, p)| run_cell(e, i, p)).collect())
}

/// Reports for `samples` seeded parameter samples of one entry.
pub fn run_suite(id: &str, samples: usize, seed: u64) -> Result<Vec<Report>> {
    let entry = catalog::get(id)?;
    let cells = entry.sample_params(samples, seed).into_iter().enumerate().map(|(i, p)| (entry, i, p)).collect();
    Ok(run_cells(cells))
}

/// Every entry, `samples` samples each, in catalog order.
pub fn run_all(samples: usize, seed: u64) -> Summary {
    let cells = catalog::entries()
        .iter()
        .flat_map(|e| e.sample_params(samples, seed).into_iter().enumerate().map(move |(i, p)| (e, i, p)))
        .collect();
    Summary::new(samples, seed, run_cells(cells))
}

/// Summary restricted to one entry.
pub fn run_group(id: &str, samples: usize, seed: u64) -> Result<Summary> {
    Ok(Summary::new(samples, seed, run_suite(id, samples, seed)?))
}
