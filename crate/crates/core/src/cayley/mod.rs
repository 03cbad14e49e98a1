//! Cayley graph balls, strips and their crossing labels.

mod ball;
mod cache;
mod key;
pub mod planes;
mod strip;

pub use ball::{planes_of, BallLimits, BallScope, DistanceMap};
pub use key::{decode, encode, Expander, NfKey};
pub use strip::{crossing_labels, CrossingLabels, Strip};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CayleyError {
    #[error("resource limit exceeded: more than {limit} {what}")]
    ResourceLimit { what: String, limit: usize },
    #[error("element outside the ball of radius {radius}")]
    OutsideBall { radius: u32 },
    #[error("ball was built for presentation {expected}, not {found}")]
    PresentationMismatch { expected: String, found: String },
    #[error("bad ball cache: {0}")]
    CacheFormat(String),
    #[error("unsupported presentation: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
