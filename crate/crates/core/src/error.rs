use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown {kind} function `{name}`")]
    UnknownFunction { kind: &'static str, name: String },

    #[error("{function} is not defined at t = {t}")]
    Domain { function: String, t: f64 },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("point {0} is not in the carrier")]
    NotInCarrier(String),

    /// The self-map is undefined at a point or sends it outside the carrier.
    #[error("map leaves the carrier at {point} (iterate {index})")]
    LeavesCarrier { point: String, index: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("parse error: {0}")]
    Parse(String),
}
