//! Recognition, exhaustive enumeration and counting of unlabeled interval
//! graphs, together with a three-colored family of interval graphs whose
//! members are told apart by their anchor degrees, and log-domain evaluation
//! of the counting bounds that family yields.
//!
//! Module map:
//!
//! - [`graph`]: bit-row graphs, interval realizations, colored graphs.
//! - [`canon`]: canonical codes (plain and color-respecting).
//! - [`graph6`]: graph6 text interchange.
//! - [`recognition`]: interval-graph recognition with certificates.
//! - [`enumeration`]: endpoint-matching sweep and the count `I_n`.
//! - [`construction`]: the anchored white-interval family and its decoder.
//! - [`bounds`]: exact and log-gamma evaluation of the bound formulas.

pub mod bounds;
pub mod canon;
pub mod construction;
pub mod enumeration;
mod error;
pub mod graph;
pub mod graph6;
pub mod recognition;

pub use canon::{canonical_form, colored_canonical_form, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, Graph, IntervalRealization};
pub use recognition::{recognize, verify_realization, RecognitionResult};
