//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by callers that map failures to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad parameter or option value.
    Config,
    /// Malformed or inconsistent input data.
    Data,
    /// Numerical failure (non-convergence, degenerate matrix).
    Numeric,
}

#[derive(Debug, Error)]
pub enum Error {
    // ---- snapshot parsing and graph construction ----
    #[error("malformed snapshot document: {0}")]
    MalformedDocument(String),
    #[error("dangling endpoint: edge ({source} -> {target}) references undeclared node `{missing}`")]
    DanglingEndpoint {
        source: String,
        target: String,
        missing: String,
    },
    #[error("snapshot `{0}` declares an empty node set")]
    EmptyNodeSet(String),
    #[error("duplicate node id `{id}` in snapshot `{release}`")]
    DuplicateNode { release: String, id: String },
    #[error("self-loop on node `{id}` in snapshot `{release}`")]
    SelfLoop { release: String, id: String },
    #[error("node id must be non-empty in snapshot `{0}`")]
    EmptyNodeId(String),

    // ---- temporal network ----
    #[error("no snapshots supplied")]
    NoSnapshots,
    #[error("duplicate release tag `{0}`")]
    DuplicateRelease(String),
    #[error("node `{0}` changes kind between releases")]
    ConflictingNodeKind(String),
    #[error("prefix length {k} out of range 1..={len}")]
    PrefixOutOfRange { k: usize, len: usize },

    // ---- external-format adapters ----
    #[error("unrecognized schema in `{path}`: {detail}")]
    UnrecognizedSchema { path: PathBuf, detail: String },
    #[error("empty diagram in `{0}`")]
    EmptyDiagram(PathBuf),

    // ---- numerics ----
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("all-zero matrix has no dominant eigenpair")]
    ZeroMatrix,
    #[error("power iteration did not converge within {0} iterations")]
    NonConvergence(usize),

    // ---- metric ingestion ----
    #[error("failed to read `{path}`: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("failed to parse `{path}`: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("non-numeric cell for (package `{package}`, metric `{metric}`): `{value}`")]
    NonNumericCell {
        package: String,
        metric: String,
        value: String,
    },
    #[error("duplicate (package `{package}`, metric `{metric}`) pair")]
    DuplicateCell { package: String, metric: String },
    #[error("duplicate package key `{0}` in mapping")]
    DuplicateMappingKey(String),
    #[error("unmapped packages: {}", .0.join(", "))]
    UnmappedPackages(Vec<String>),
    #[error("metric `{name}` from `{source}` has no descriptor")]
    MissingDescriptor { source: String, name: String },
    #[error("duplicate descriptor for metric `{name}` from `{source}`")]
    DuplicateDescriptor { source: String, name: String },
    #[error("invalid descriptor field `{field}`: `{value}`")]
    InvalidDescriptorField { field: String, value: String },

    // ---- statistics ----
    #[error("sample lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{test} needs at least {needed} values, got {got}")]
    TooFewSamples {
        test: &'static str,
        needed: usize,
        got: usize,
    },
    #[error("zero variance in {0}")]
    ZeroVariance(&'static str),
    #[error("all paired differences are zero")]
    AllDifferencesZero,
    #[error("alpha {alpha} unsupported; table covers {supported}")]
    UnsupportedAlpha { alpha: f64, supported: &'static str },
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            NonPositiveEpsilon(_) | PrefixOutOfRange { .. } | UnsupportedAlpha { .. } => {
                ErrorClass::Config
            }
            ZeroMatrix | NonConvergence(_) => ErrorClass::Numeric,
            _ => ErrorClass::Data,
        }
    }
}
