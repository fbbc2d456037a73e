use alloc::string::String;

/// Failure modes shared by every operation in the crate.
///
/// [`Error::is_capacity`] separates "input too large for exact desk-scale
/// computation" from genuine domain errors, which front ends map to
/// distinct exit statuses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        got: u64,
        limit: u64,
    },
    #[error("set {0:#x} is not a member of the family")]
    NotInFamily(u64),
    #[error("set {set:#x} does not fit in a ground set of size {n}")]
    OutOfGround { set: u64, n: u32 },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover relations contain a cycle through `{0}`")]
    Cycle(String),
    #[error("cover ({lower}, {upper}) is implied by transitivity")]
    ImpliedCover { lower: String, upper: String },
    #[error("invalid cover ({0}, {1})")]
    InvalidCover(String, String),
    #[error("poset is not connected")]
    Disconnected,
    #[error("poset is not a tree poset")]
    NotATree,
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family is not free of the pattern")]
    NotPatternFree,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("fingerprint is inconsistent with every run: {0}")]
    InconsistentFingerprint(String),
    #[error("internal certificate check failed: {0}")]
    Certificate(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub(crate) fn capacity(what: &'static str, got: u64, limit: u64) -> Self {
        Error::Capacity { what, got, limit }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
