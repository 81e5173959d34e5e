use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("bad family parameters: {0}")]
    BadFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("set is not closed under multiplication: {0}")]
    NotClosed(String),

    #[error("quotient is not abelian")]
    NotAbelian,

    #[error("invalid N-series: {0}")]
    InvalidNSeries(String),

    #[error("invalid Tor triple: {0}")]
    InvalidTriple(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("enumeration cap exceeded: {0}")]
    Cap(String),

    #[error("abstract coefficient rings only support formula evaluation")]
    AbstractRing,

    #[error("coefficient ring or group mismatch: {0}")]
    Mismatch(String),

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("infinite group where a finite one is required: {0}")]
    Infinite(String),

    #[error("map is not well defined: {0}")]
    IllDefined(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
