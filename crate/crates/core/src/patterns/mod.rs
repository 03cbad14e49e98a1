//! Sequences of label differences along strips, the moves relating the
//! sequences of consecutive strips, and patterns describing families of
//! sequences.

mod enumerate;
pub mod moves;
mod notation;
mod pattern;
pub mod pattern_moves;
mod sequence;

pub use enumerate::{
    enumerate_patterns, enumerate_reachable, enumerate_sequences, EnumerateMode, EnumerateOptions, Reachable,
    Reached, MAX_PATTERN_DEPTH, MAX_SEQUENCE_DEPTH,
};
pub use moves::{apply_move, MoveSpec};
pub use notation::{format_group, format_pattern, format_sequence, format_word, parse_pattern, parse_sequence};
pub use pattern::{Group, Pattern};
pub use pattern_moves::{apply_move_pattern, Cut, PatternMove};
pub use sequence::{extract_sequence, ExtractedSequence, Sequence, Symbol};

#[derive(Debug, thiserror::Error)]
pub enum PatternError {
    #[error("cannot read `{text}` at {at}: {reason}")]
    Notation { text: String, at: usize, reason: String },
    #[error("labels jump by {0} between neighbouring crossings")]
    LabelJump(i64),
    #[error("no labels known on the strip")]
    NoLabels,
    #[error("not in conjectured form: {0}")]
    NotConjectured(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid cut {0}")]
    BadCut(String),
    #[error("depth {depth} exceeds the bound {max}")]
    DepthBound { depth: usize, max: usize },
}
