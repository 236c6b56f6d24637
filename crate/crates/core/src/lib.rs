//! Extremal-graph tooling for edge blow-ups of lollipops.
//!
//! The lollipop `C_{k,l}` is a cycle of length `k` with a path of `l` edges
//! hanging off one cycle vertex. Its edge blow-up `C_{k,l}^{p+1}` replaces
//! each edge by a private `K_{p+1}`. This crate builds the candidate
//! extremal graphs for these patterns, decides containment exactly, and
//! provides small-order brute force to cross-check the structure.

pub mod bitset;
pub mod blowup;
pub mod canon;
pub mod constructions;
pub mod containment;
pub mod error;
pub mod family;
pub mod graph;
pub mod search;

pub use bitset::{VertexSet, MAX_ORDER};
pub use blowup::{blowup, vertex_split, BlowupResult, SplitMode};
pub use canon::{canonical_form, is_isomorphic, CanonicalCode};
pub use constructions::{ConstructionSpec, JoinLayout, LollipopParams};
pub use containment::{BlowupEmbedding, Embedding, Outcome, SearchLimits};
pub use error::{Error, Result};
pub use family::GraphFamily;
pub use graph::Graph;
