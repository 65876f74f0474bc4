use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} qubits vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit count {0} is outside the supported range 1..={max}", max = crate::pauli::MAX_QUBITS)]
    QubitCount(usize),

    #[error("site {site} is out of range for {n} qubits")]
    SiteOutOfRange { site: usize, n: usize },

    #[error("cannot parse Pauli string {text:?}: {reason}")]
    ParsePauli { text: String, reason: String },

    #[error("cannot parse amplitude {text:?}: {reason}")]
    ParseAmplitude { text: String, reason: String },

    #[error("cannot parse basis label {0:?}")]
    ParseLabel(String),

    #[error("operator {0} is not Hermitian")]
    NotHermitian(String),

    #[error("operators {0} and {1} do not commute")]
    NonCommuting(String, String),

    #[error("operator {op} derived with two different signs ({first} and {second})")]
    SignInconsistency {
        op: String,
        first: String,
        second: String,
    },

    #[error("vector is zero")]
    ZeroVector,

    #[error("spanning vectors {0} and {1} are not orthogonal")]
    NonOrthogonalSpan(usize, usize),

    #[error("squared norm {0} is not a power of two; exact normalization is unavailable")]
    NonDyadicNorm(String),

    #[error("{op} is not an eigenoperator of the state")]
    NotEigenoperator { op: String },

    #[error("{op} has eigenvalue {actual} on the state, but {declared} was declared")]
    EigenvalueMismatch {
        op: String,
        declared: String,
        actual: String,
    },

    #[error("malformed operator array: {0}")]
    MalformedArray(String),

    #[error("construction check failed: {0}")]
    Construction(String),

    #[error("search budget of {budget} nodes exhausted: {what}")]
    BudgetExhausted { what: String, budget: u64 },

    #[error("context set is not exhaustive; refusing to run the colorability search")]
    IncompleteContexts,

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::ks::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("search space of 2^{0} words exceeds the supported table size")]
    SearchSpaceTooLarge(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
