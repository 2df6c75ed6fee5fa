//! Exact verification engine for almost contact B-metric structures on Lie groups.
//!
//! Everything is computed over the rationals: structure constants, metrics,
//! connections, curvature, Einstein-like and Ricci-like soliton fits, and the
//! curvature predicates built on them. No floating point is involved, so every
//! identity is checked with exact equality.

pub mod description;
pub mod error;
pub mod examples;
pub mod lie;
pub mod predicates;
pub mod ratlin;
pub mod soliton;
pub mod report;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
