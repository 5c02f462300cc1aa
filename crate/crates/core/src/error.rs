//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("state vector has dimension {actual}, model expects {expected}")]
    StateDim { expected: usize, actual: usize },

    #[error("control at step {index} has dimension {actual}, model expects {expected}")]
    ControlDim {
        index: usize,
        expected: usize,
        actual: usize,
    },

    #[error("profile has {actual} controls, horizon is {expected}")]
    ProfileLength { expected: usize, actual: usize },

    #[error(
        "control component {component} at step {index} is {value}, outside [{lower}, {upper}]"
    )]
    ControlBounds {
        index: usize,
        component: usize,
        value: f64,
        lower: f64,
        upper: f64,
    },

    #[error("unknown system `{name}`; available: {available}")]
    UnknownSystem { name: String, available: String },

    #[error("model `{name}` does not define a local controller")]
    NoLocalController { name: String },

    #[error("invalid model: {reason}")]
    InvalidModel { reason: String },

    #[error("invalid argument: {reason}")]
    InvalidArgument { reason: String },

    #[error("trajectory has {actual} stages, weight spec expects {expected}")]
    HorizonMismatch { expected: usize, actual: usize },

    #[error("non-finite cost while {context}")]
    NonFiniteCost { context: String },

    #[error("all {starts} solver starts failed: {last_failure}")]
    SolverFailed { starts: usize, last_failure: String },

    #[error("grid enumeration needs {count} cost evaluations, budget is {budget}")]
    EnumerationBudget { count: u128, budget: u128 },

    #[error("no state with stage cost <= {rho} found in {draws} draws")]
    LevelSetSampling { rho: f64, draws: usize },

    #[error(
        "no exponent up to {cap} satisfies eta*c^m <= rho_bar and c^m <= gamma/2 \
         (eta {eta}, gamma {gamma}, rho_bar {rho_bar})"
    )]
    ExponentSearchExhausted {
        cap: u32,
        eta: f64,
        gamma: f64,
        rho_bar: f64,
    },

    #[error("configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
