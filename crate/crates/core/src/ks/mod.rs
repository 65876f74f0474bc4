//! A Kochen-Specker set of 104 projectors in 32 dimensions and the
//! machinery to show it admits no KS1/KS2 colouring.

pub mod coloring;
pub mod contexts;
pub mod graph;
pub mod vertices;

/// Vertex sets are stored as `u128` bitmasks.
pub const MAX_VERTICES: usize = 128;

pub use coloring::{declared_colorability, is_valid_coloring, ks_colorability, SearchStats, Verdict};
pub use contexts::{canonical_contexts, enumerate_contexts, Context, ContextOrigin, ContextSet};
pub use graph::OrthogonalityGraph;
pub use vertices::{build_ks_set, KsVertex, Provenance, VertexRecord};
