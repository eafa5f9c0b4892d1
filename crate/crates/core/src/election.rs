use thiserror::Error;

use crate::codec::CodecError;
use crate::tree_core::{LabeledBall, PathCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElectError {
    #[error("advice in the ball cannot be interpreted: {0}")]
    Malformed(String),
    #[error("the ball matches no position of the advertised map")]
    IdentificationFailure,
    #[error("the ball matches map positions with different root paths")]
    Ambiguous,
}

impl From<CodecError> for ElectError {
    fn from(e: CodecError) -> Self {
        ElectError::Malformed(e.to_string())
    }
}

/// The local decision every node runs on its own ball.
pub trait Elector: Sync {
    fn elect(&self, ball: &LabeledBall) -> Result<PathCode, ElectError>;
}

impl<F> Elector for F
where
    F: Fn(&LabeledBall) -> Result<PathCode, ElectError> + Sync,
{
    fn elect(&self, ball: &LabeledBall) -> Result<PathCode, ElectError> {
        self(ball)
    }
}
