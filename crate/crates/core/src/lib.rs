//! Square-free words and square-free walks on labelled graphs.
//!
//! The crate is `no_std` and needs only `alloc`. It provides
//!
//! - [`word`]: finite words over `A_n = {0, .., n-1}` and the square-freeness,
//!   factor, tournament and free-group predicates,
//! - [`morphism`]: morphisms, lazy fixed-point and image streams, the
//!   square-freeness preservation tests and the built-in morphisms,
//! - [`graph`]: simple undirected graphs and the subgraph detectors used by the
//!   classifier,
//! - [`walks`]: G-words, colourings, the classifier for infinite square-free
//!   walks and the colour number, and the witness walk generators,
//! - [`search`]: bounded exhaustive backtracking searches.
//!
//! IO, text file formats and the command-line front end live in the
//! `sqwalk-tool` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod graph;
pub mod morphism;
pub mod search;
pub mod walks;
pub mod word;

pub use graph::{ComponentShape, Graph, GraphError};
pub use morphism::{Alignment, Morphism, MorphismError, Preservation, WordStream};
pub use search::{Outcome, SearchError, SearchResult};
pub use walks::{Classification, Colouring, Pattern, WalkError};
pub use word::{Letter, Square, Word, WordError};
