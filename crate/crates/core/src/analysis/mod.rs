//! Experiments over the Cayley graph: strip sequences, nonregularity,
//! fellow travelling, almost convexity and the base falsification check.
//! Each returns a serializable result that feeds a certificate.

pub mod certificate;
pub mod convex;
pub mod fellow;
pub mod fftp;
pub mod nonreg;
pub mod strips;

use crate::cayley::CayleyError;
use crate::patterns::PatternError;
use crate::presentation::PresentationError;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot encode certificate: {0}")]
    Json(#[from] serde_json::Error),
}
