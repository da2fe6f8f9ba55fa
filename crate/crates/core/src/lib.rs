//! Four-colored graphs (gems) as representations of compact 3-manifolds.
//!
//! * [`graph`]: the graph model, bicolored cycles, residues, isomorphism.
//! * [`code`]: the string code of bipartite graphs and its canonical form.
//! * [`topology`]: boundary surfaces, first homology and related invariants.
//! * [`covering`]: cyclic coverings from voltage assignments.
//! * [`census`]: exhaustive censuses of small orders and bundled-table checks.

pub mod census;
pub mod code;
pub mod corpus;
pub mod covering;
pub mod error;
pub mod graph;
pub mod snf;
pub mod topology;

pub use code::{canonical_code, emit_code, parse_code, GemCode};
pub use error::{Error, Result};
pub use graph::{are_isomorphic, ColoredGraph};
