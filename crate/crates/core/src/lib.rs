//! Normal forms, Cayley balls, strip sequences and their patterns for
//! multiple HNN extensions of free abelian groups.

pub mod analysis;
pub mod cayley;
pub mod patterns;
pub mod presentation;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
