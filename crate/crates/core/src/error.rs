use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("structure constants are not antisymmetric at [e{i}, e{j}]")]
    NotAntisymmetric { i: usize, j: usize },

    /// Violating basis triples, 1-based.
    #[error("Jacobi identity fails on {} basis triple(s), first {:?}", .0.len(), .0.first())]
    Jacobi(Vec<(usize, usize, usize)>),

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("two-form is not closed (d omega != 0)")]
    NotClosed,

    #[error("two-form is degenerate")]
    DegenerateForm,

    #[error("not an almost complex structure (J^2 + I != 0)")]
    NotAlmostComplex,

    #[error("almost complex structure is not compatible with the symplectic form")]
    Incompatible,

    #[error("associated metric is degenerate")]
    DegenerateMetric,

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("parameter constraint violated: {0}")]
    Constraint(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Short machine-readable name of the invariant an input violated.
    pub fn invariant(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "square_matrix",
            Error::Singular => "nonsingular",
            Error::DimensionMismatch { .. } => "dimension",
            Error::NotSymmetric => "symmetric",
            Error::NotAntisymmetric { .. } => "antisymmetry",
            Error::Jacobi(_) => "jacobi",
            Error::NotNilpotent => "nilpotent",
            Error::NotClosed => "closed_form",
            Error::DegenerateForm => "nondegenerate_form",
            Error::NotAlmostComplex => "acs_square",
            Error::Incompatible => "compatible",
            Error::DegenerateMetric => "nondegenerate_metric",
            Error::UnknownEntry(_) => "known_entry",
            Error::Constraint(_) => "parameter_constraint",
            Error::Precondition(_) => "precondition",
            Error::Invalid(_) => "well_formed",
        }
    }
}
