use thiserror::Error;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partial permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid ordered forest: {0}")]
    InvalidOrderedForest(String),

    #[error("invalid priority forest: {0}")]
    InvalidPriorityForest(String),

    #[error("invalid parking preference: {0}")]
    InvalidParkingFunction(String),

    #[error("relabeling image does not match the non-root set of the priority forest")]
    DomainMismatch,

    #[error("the parking process fails for this preference sequence")]
    NotAParkingFunction,

    #[error("the given pair of elements is not a cover relation")]
    NotACover,

    #[error("the chain contains the top element")]
    ContainsTop,

    #[error("the chain is not saturated")]
    NotSaturated,

    #[error("the label word is not a Jordan-Holder word of this interval")]
    InvalidLabelWord,

    #[error("the edge does not belong to the edge-set difference")]
    EdgeNotInDifference,

    #[error("elements are not comparable")]
    NotComparable,

    #[error("the second forest is not above the first")]
    NotAbove,

    #[error("size {requested} exceeds the configured cap {cap}")]
    ResourceLimit { requested: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
