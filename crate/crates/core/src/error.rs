use thiserror::Error;

use crate::algebra::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "table `{table}` has entry {value} at ({row}, {col}) outside the carrier of size {size}"
    )]
    TableOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    #[error("{what} exceeds the configured limit of {limit}")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("table `{table}` must be {size}x{size}")]
    TableShape { table: &'static str, size: usize },

    #[error("invalid element names: {0}")]
    InvalidNames(String),

    #[error("no residuum exists: {{z | {x} * z <= {y}}} has no greatest element")]
    NotResiduated { x: usize, y: usize },

    #[error("the filter is the whole carrier, expected a proper filter")]
    NotProper,

    #[error("the filter meets the join-closed set at element {0}")]
    Overlap(usize),

    #[error("the filter is not prime")]
    NotPrime,

    #[error("the base filter is not contained in the intersection of the collection")]
    BaseNotContained,

    #[error("collection member {0} is not a prime filter")]
    NotPrimeCollection(usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("filter lies under {} maximal filters", .0.len())]
    MultipleMaximal(Vec<crate::set::ElementSet>),

    #[error("prime filter #{witness} lies under more than one maximal filter")]
    NotPm { witness: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("tables do not form a residuated lattice ({} violations)", .0.violations.len())]
    ValidationFailed(Box<ValidationReport>),

    #[error("arrow table cell ({x}, {y}) is `{given}` but the residuum is `{derived}`")]
    ArrowMismatch {
        x: String,
        y: String,
        given: String,
        derived: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
