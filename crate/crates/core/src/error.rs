use crate::partition::Partition;
use thiserror::Error;

/// Errors shared across the crate.
///
/// Guard errors (`OracleSizeExceeded`, `LimitExceeded`, `OrderExceeded`) mark
/// computations that were refused or cut short, never silently truncated
/// results. The remaining variants are input rejections.
#[derive(Debug, Error)]
pub enum Error {
    /// The occupancy oracle was asked to materialize a cover larger than the
    /// configured bound on r*m.
    #[error("cover oracle refused: r*m = {rm} exceeds limit {limit}")]
    OracleSizeExceeded { rm: u64, limit: u64 },

    /// Enumeration hit the caller-supplied cap. The partitions found so far
    /// are carried along so callers can report a flagged partial result.
    #[error("enumeration limit of {limit} reached; partial result withheld from normal return")]
    LimitExceeded {
        limit: usize,
        partial: Vec<Partition>,
    },

    /// A coefficient beyond a series' truncation order was requested.
    #[error("coefficient {index} requested from a series truncated at order {order}")]
    OrderExceeded { index: usize, order: usize },

    /// The partition fails the prefix inequalities for the given parameters.
    #[error("partition is not an (e,r)-partition for the given parameters")]
    NotErPartition,

    /// Inverting a mu-vector produced a part <= 0.
    #[error("mu-vector inversion produced a nonpositive part at index {index}")]
    NonpositivePart { index: usize },

    /// The requested closed form does not exist at this level.
    #[error("no closed form at level n = {n} for r = {r}")]
    UnsupportedLevel { n: usize, r: u64 },

    /// Malformed partition literal or invalid part list.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A mu-vector violating its defining constraints.
    #[error("invalid mu-vector: {0}")]
    InvalidMuVector(String),

    /// Parameters outside the supported domain (r >= 1).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An intermediate value exceeded the machine integer range.
    #[error("intermediate value exceeds machine integer range")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
