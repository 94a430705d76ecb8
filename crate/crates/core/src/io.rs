//! JSON input documents for user-supplied structures.
//!
//! A document carries an algebra, a symplectic form and optionally an almost
//! complex structure, all with 1-based indices and rationals written as
//! strings:
//!
//! ```json
//! {
//!   "dim": 4,
//!   "brackets": [{ "i": 1, "j": 2, "coeffs": { "3": "1" } }],
//!   "omega": [{ "i": 1, "j": 4, "value": "1" }, { "i": 2, "j": 3, "value": "-1" }],
//!   "J": [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "1", "0"]]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::acs::{associated_metric, check_compatible, Acs, Metric};
use crate::catalog::{Instance, Params};
use crate::curvature::{CurvatureJson, CurvatureReport};
use crate::exact::{opt_rational_rows, rational_map, Matrix, Rational};
use crate::forms::{is_closed, FormEntry, TwoForm};
use crate::liealg::{Bracket, LieAlgebra};
use crate::{Error, Result, FORMAT_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<Bracket>,
    pub omega: Vec<FormEntry>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none", with = "opt_rational_rows")]
    pub j: Option<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Params::is_empty", with = "rational_map")]
    pub params: Params,
}

fn format_version() -> u32 {
    FORMAT_VERSION
}

/// A validated almost pseudo-Kähler structure.
#[derive(Clone, Debug)]
pub struct Structure {
    pub algebra: LieAlgebra,
    pub form: TwoForm,
    pub acs: Acs,
    pub metric: Metric,
}

impl Structure {
    pub fn curvature(&self) -> Result<CurvatureReport> {
        CurvatureReport::compute(&self.algebra, &self.acs, &self.metric)
    }
}

impl InputDocument {
    /// Parses a document. Syntax and schema errors carry the line and column.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: InputDocument = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e))))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Invalid(format!(
                "format_version {} is not supported (expected {FORMAT_VERSION})",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn from_instance(inst: &Instance) -> Self {
        InputDocument {
            format_version: FORMAT_VERSION,
            dim: inst.algebra.dim(),
            brackets: inst.algebra.to_brackets(),
            omega: inst.form.entries(),
            j: Some(inst.acs.matrix().to_rows()),
            params: inst.params.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        for (n, b) in self.brackets.iter().enumerate() {
            for idx in [b.i, b.j].into_iter().chain(b.coeffs.keys().copied()) {
                if idx == 0 || idx > self.dim {
                    return Err(Error::Invalid(format!("brackets[{n}]: basis index {idx} outside 1..={}", self.dim)));
                }
            }
        }
        LieAlgebra::from_brackets(self.dim, &self.brackets)
    }

    pub fn form(&self) -> Result<TwoForm> {
        for (n, e) in self.omega.iter().enumerate() {
            if e.i == 0 || e.j == 0 || e.i > self.dim || e.j > self.dim {
                return Err(Error::Invalid(format!("omega[{n}]: index ({}, {}) outside 1..={}", e.i, e.j, self.dim)));
            }
        }
        TwoForm::from_entries(self.dim, &self.omega)
    }

    /// The `J` matrix, row `r` holding the coefficients of `e_r` in every `J(e_c)`.
    pub fn acs_matrix(&self) -> Result<Option<Matrix>> {
        let Some(rows) = &self.j else { return Ok(None) };
        if rows.len() != self.dim {
            return Err(Error::Invalid(format!("J: expected {} rows, found {}", self.dim, rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != self.dim {
                return Err(Error::Invalid(format!("J[{r}]: expected {} entries, found {}", self.dim, row.len())));
            }
        }
        Matrix::from_rows(rows.clone()).map(Some)
    }

    /// Validates algebra, closed nondegenerate form, `J² = −I`,
    /// compatibility and metric nondegeneracy, in that order.
    pub fn structure(&self) -> Result<Structure> {
        let algebra = self.algebra()?;
        let form = self.form()?;
        if !is_closed(&algebra, &form) {
            return Err(Error::NotClosed);
        }
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let matrix = self.acs_matrix()?.ok_or_else(|| Error::Invalid("missing field `J`".into()))?;
        let acs = Acs::new(matrix)?;
        if !check_compatible(&form, &acs)?.is_zero() {
            return Err(Error::Incompatible);
        }
        let metric = associated_metric(&form, &acs)?;
        Ok(Structure { algebra, form, acs, metric })
    }

    pub fn compute(&self) -> Result<CurvatureJson> {
        Ok(self.structure()?.curvature()?.to_json())
    }
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(k) => s[..k].to_string(),
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_traits::Zero;

    fn g3_doc() -> InputDocument {
        let e = catalog::get("G3").unwrap();
        InputDocument::from_instance(&e.instantiate(&e.reference_params()).unwrap())
    }

    #[test]
    fn round_trip() {
        let doc = g3_doc();
        let back = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn g3_document_has_zero_invariants() {
        let out = g3_doc().compute().unwrap();
        assert!(out.scalar.is_zero() && out.rr.is_zero());
        assert_eq!(out.format_version, FORMAT_VERSION);
    }

    #[test]
    fn syntax_error_has_position() {
        let err = InputDocument::parse("{\n  \"dim\": 4,\n  \"omega\": [,]\n}").unwrap_err();
        assert!(err.to_string().contains("line 3, column"), "{err}");
    }

    #[test]
    fn bad_rational_has_position() {
        let text = r#"{"dim": 2, "omega": [{"i": 1, "j": 2, "value": "1/0"}]}"#;
        let err = InputDocument::parse(text).unwrap_err();
        assert!(err.to_string().contains("line 1, column"), "{err}");
    }

    #[test]
    fn unknown_field_rejected() {
        let err = InputDocument::parse(r#"{"dim": 2, "omega": [], "extra": 1}"#).unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
    }

    #[test]
    fn abelian_standard_structure_is_flat() {
        let text = r#"{"dim": 2, "omega": [{"i": 1, "j": 2, "value": "1"}], "J": [["0", "-1"], ["1", "0"]]}"#;
        let out = InputDocument::parse(text).unwrap().compute().unwrap();
        assert!(out.gamma.is_empty() && out.riemann_nonzero.is_empty());
        assert!(out.ricci.iter().flatten().all(Zero::is_zero));
    }

    #[test]
    fn validation_errors_name_the_invariant() {
        let mut doc = g3_doc();
        let j = doc.j.as_mut().unwrap();
        j[0][0] += Rational::from_integer(1.into());
        assert_eq!(doc.compute().unwrap_err().invariant(), "acs_square");

        let mut doc = g3_doc();
        doc.brackets[0].i = 9;
        let err = doc.compute().unwrap_err();
        assert!(err.to_string().contains("brackets[0]"), "{err}");

        let mut doc = g3_doc();
        doc.j = None;
        assert_eq!(doc.compute().unwrap_err().invariant(), "well_formed");
    }
}
