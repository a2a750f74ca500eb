use crate::census::SearchStats;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("region is unbounded")]
    UnboundedRegion,

    #[error("fiber index {index} out of range for {kind} fibers at n={n} (limit {limit})")]
    FiberIndexOutOfRange {
        kind: &'static str,
        index: i64,
        n: u32,
        limit: i64,
    },

    #[error("point {point} lies outside region {region}")]
    PointOutsideRegion { point: String, region: &'static str },

    #[error("search budget exceeded after {} nodes (depth {})", stats.nodes, stats.max_depth)]
    BudgetExceeded {
        stats: SearchStats,
        /// Best lower bound found so far, for extremal searches.
        best_so_far: Option<u32>,
    },

    #[error("instance too large: {what} = {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index range mismatch: {0}")]
    RangeMismatch(String),

    #[error("graph is not of the expected two-diagonal shape: {0}")]
    NotHGraphShape(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            _ => 1,
        }
    }
}
