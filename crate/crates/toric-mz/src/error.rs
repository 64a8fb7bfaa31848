use thiserror::Error;

/// Errors reported by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("CNOT control and target must differ (both {0})")]
    DuplicateCnotTargets(usize),

    #[error("dense matrix for {n_qubits} qubits exceeds the cap of {cap} qubits")]
    DenseCapExceeded { n_qubits: usize, cap: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error(
        "density matrix lost positivity at t = {time}: min eigenvalue {min_eigenvalue:.3e} \
         (step size too large; rerun with a smaller rk4 step)"
    )]
    PositivityViolation { time: f64, min_eigenvalue: f64 },

    #[error("no step count n <= {n_max} reaches error threshold {threshold} (threshold unreachable)")]
    ThresholdUnreachable { threshold: f64, n_max: usize },

    #[error("malformed series data: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the CLI: 1 usage, 2 numerical, 3 i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::QubitOutOfRange { .. }
            | Error::DuplicateCnotTargets(_)
            | Error::Parse(_) => 1,
            Error::DenseCapExceeded { .. }
            | Error::DimensionMismatch(_)
            | Error::Eigen(_)
            | Error::PositivityViolation { .. }
            | Error::ThresholdUnreachable { .. } => 2,
            Error::Io { .. } => 3,
        }
    }
}
