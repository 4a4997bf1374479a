use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points {0} and {1} are topologically indistinguishable (space is not T0)")]
    NotT0(usize, usize),
    #[error("point index {index} out of range for a space with {n} points")]
    PointOutOfRange { index: usize, n: usize },
    #[error("open family is not a topology: {0}")]
    NotATopology(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("family member is not an irreducible closed set")]
    NotIrreducibleFamily,
    #[error("family is not irreducible in the Smyth power space")]
    FamilyNotIrreducible,
    #[error("premise violated: {0}")]
    PremiseViolated(String),
    #[error("map is not continuous: preimage of open {0:?} is not open")]
    NotContinuous(Vec<usize>),
    #[error("map table is malformed: {0}")]
    BadMap(String),
    #[error("target space is not omega-well-filtered")]
    NotOmegaWf,
    #[error("no generic point for closed set {0:?}")]
    NoGenericPoint(Vec<usize>),
    #[error("maps do not form a retraction")]
    NotRetraction,
    #[error("candidate base member {0} is not a Scott-open neighborhood of top")]
    NotNeighborhoodOfTop(usize),
    #[error("ill-formed ray family: {0}")]
    IllFormedFamily(String),
    #[error("intersection of the family is not contained in the open set")]
    NotCovered,
    #[error("set is not open")]
    NotOpen,
    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
    #[error("directed stream oracle is inconsistent at index {0}")]
    OracleInconsistent(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown catalog space {0:?}")]
    UnknownCatalogSpace(String),
    #[error("unknown check {check:?} for catalog space {space:?}")]
    UnknownCheck { space: String, check: String },
}
