use proptest::prelude::*;

use nilgeo_core::acs::j_invariant;
use nilgeo_core::catalog::{self, CatalogEntry};
use nilgeo_core::curvature::{ricci, riemann_by_definition, CurvatureReport};
use nilgeo_core::exact::int;
use nilgeo_core::forms::TwoForm;
use nilgeo_core::io::InputDocument;
use nilgeo_core::solver::{residual_blocks, solve_compatible_acs, PatternSpec, SolveOptions};
use nilgeo_core::verify;

fn entry() -> impl Strategy<Value = &'static CatalogEntry> {
    (0..catalog::entries().len()).prop_map(|k| &catalog::entries()[k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ricci_matches_closed_form_at_any_seed(e in entry(), seed in any::<u64>()) {
        let params = e.sample_params(1, seed).remove(0);
        let inst = e.instantiate(&params).unwrap();
        let rep = CurvatureReport::compute(&inst.algebra, &inst.acs, &inst.metric).unwrap();
        if e.has_ricci_closed_form() {
            prop_assert_eq!(&rep.ricci, &e.expected_ricci(&params).unwrap());
            prop_assert!(num_traits::Zero::is_zero(&rep.scalar));
        }
        let oracle = riemann_by_definition(&inst.algebra, &rep.connection).unwrap();
        prop_assert_eq!(ricci(&oracle), rep.ricci);
    }

    #[test]
    fn chain_terms_are_invariant_ideals(e in entry(), seed in any::<u64>()) {
        let params = e.sample_params(1, seed).remove(0);
        let inst = e.instantiate(&params).unwrap();
        if let Some(chain) = e.chain() {
            for term in &chain {
                prop_assert!(inst.algebra.is_ideal(term), "{} not an ideal", term);
                prop_assert!(j_invariant(&inst.acs, term), "{} not J-invariant", term);
            }
        }
    }

    #[test]
    fn documents_round_trip(e in entry(), seed in any::<u64>()) {
        let params = e.sample_params(1, seed).remove(0);
        let inst = e.instantiate(&params).unwrap();
        let doc = InputDocument::from_instance(&inst);
        let back = InputDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        let s = back.structure().unwrap();
        prop_assert_eq!(s.metric.matrix(), inst.metric.matrix());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn converged_solutions_pass_independent_check(seed in any::<u64>(), tol_exp in 9i32..=12) {
        let omega = TwoForm::from_terms(4, &[(1, 3, int(1)), (2, 4, int(-2))]).unwrap().matrix().to_f64();
        let tol = 10f64.powi(-tol_exp);
        let opts = SolveOptions { seed, tolerance: tol, ..Default::default() };
        let res = solve_compatible_acs(&omega, &PatternSpec::free(4), &opts).unwrap();
        if res.converged {
            let (a, c) = residual_blocks(&omega, &res.j);
            prop_assert!(a <= tol && c <= tol, "residuals {a} {c} above {tol}");
        }
        let again = solve_compatible_acs(&omega, &PatternSpec::free(4), &opts).unwrap();
        prop_assert_eq!(again.j, res.j);
    }

    #[test]
    fn suite_reports_depend_only_on_inputs(e in entry(), seed in any::<u64>()) {
        let json = |rs: Vec<verify::Report>| serde_json::to_string(&rs).unwrap();
        let a = json(verify::run_suite(e.id, 2, seed).unwrap());
        let b = json(verify::run_suite(e.id, 2, seed).unwrap());
        prop_assert_eq!(a, b);
    }
}
