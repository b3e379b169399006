use thiserror::Error;

/// Errors reported by the library.
///
/// Operations with mathematical preconditions (strip containment, size
/// agreement, enumeration caps) reject bad input with a descriptive variant
/// instead of panicking, so the CLI can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A sequence of parts that is not weakly decreasing and positive.
    #[error("invalid partition {0:?}: parts must be weakly decreasing and positive")]
    InvalidPartition(Vec<usize>),

    /// Two partitions were required to have equal size.
    #[error("size mismatch: |{0}| = {1} but |{2}| = {3}")]
    SizeMismatch(String, usize, String, usize),

    /// The pair λ/μ is not a horizontal strip (μ ⊄ λ or two cells share a column).
    #[error("{1}/{0} is not a horizontal strip")]
    NotAHorizontalStrip(String, String),

    /// A tableau filling that breaks shape or monotonicity rules.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// The tableau argument must be nonempty.
    #[error("empty tableau has no ascents")]
    EmptyTableau,

    /// A jeu-de-taquin slide was requested at a cell that is not addable.
    #[error("cell ({0},{1}) is not a valid slide target for this skew shape")]
    InvalidSlideCell(usize, usize),

    /// The forward bijection requires a desarrangement tableau.
    #[error("tableau is not a desarrangement tableau")]
    NotADesarrangement,

    /// An enumeration or matrix build exceeded its configured cap.
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        /// What was being bounded (cells, deck size, states, ...).
        what: &'static str,
        /// Requested magnitude.
        value: usize,
        /// Configured maximum.
        cap: usize,
    },

    /// A numeric routine received an argument outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The eigensolver was given a matrix that is not symmetric.
    #[error("matrix asymmetry {0:.3e} exceeds tolerance {1:.3e}")]
    NotSymmetric(f64, f64),

    /// The eigensolver did not reach the convergence threshold.
    #[error("Jacobi sweep limit reached before convergence (off-diagonal norm {0:.3e})")]
    NoConvergence(f64),
}
