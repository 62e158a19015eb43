use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance too large to {what}: {cells} cells exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        cells: u128,
        cap: u64,
    },
    #[error("binomial coefficient C({n}, {k}) overflows 64 bits")]
    Overflow { n: usize, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("edge {edge:?} has {len} vertices, expected {ell}")]
    WrongEdgeSize {
        edge: Vec<usize>,
        len: usize,
        ell: usize,
    },
    #[error("edge {edge:?} repeats a vertex")]
    RepeatedVertex { edge: Vec<usize> },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },
    #[error("link would be 1-uniform")]
    LinkTooSmall,
    #[error("vertex sets overlap")]
    Overlap,
    #[error("disperse is defined for ell >= 3 (got {ell})")]
    DisperseUndefined { ell: usize },
    #[error("not disperse: {witness:?} spans {count} edges")]
    NotDisperse { witness: VertexSet, count: usize },
    #[error("theorem violated: {0}")]
    TheoremViolated(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("instance too large for exact oracle: n = {n} exceeds {cap}")]
    OracleTooLarge { n: usize, cap: usize },
    #[error("link not split at vertex {vertex}")]
    LinkNotSplit { vertex: usize },
    #[error("bad-pair graph contains K4 {vertices:?}")]
    BadPairClique { vertices: [usize; 4] },
    #[error("equivalence violated on triple {triple:?}")]
    EquivalenceViolated { triple: [usize; 3] },
}

impl Error {
    /// True for refusals caused by the resource guards rather than by the input's content.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. } | Error::Overflow { .. } | Error::OracleTooLarge { .. }
        )
    }
}
