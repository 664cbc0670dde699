//! Word-representability of co-bipartite graphs.
//!
//! The crate is organised around five pieces:
//!
//! * [`word`]: words over a vertex alphabet, alternation, restriction,
//!   uniformity and the graph a word represents.
//! * [`graph`]: simple graphs, co-bipartite decompositions, the cross
//!   adjacency matrix and instance generators.
//! * [`orient`]: orientations, shortcut detection and the exhaustive
//!   semi-transitive / transitive orientation searches used as oracles.
//! * [`ordering`]: vertex classes (A/B/C), the ordering conditions and the
//!   certificate search that recognises word-representable co-bipartite graphs.
//! * [`builder`]: 3-uniform word construction from a certificate and
//!   representation-number classification.
//!
//! [`io`] holds the text and JSON formats and [`census`] the corpus sweep that
//! cross-checks recognition against the orientation oracle.

pub mod builder;
pub mod census;
pub mod error;
pub mod graph;
pub mod io;
pub mod ordering;
pub mod orient;
pub mod word;

pub use builder::{construct_word, representation_number, InsertionPlan, RepresentationNumber};
pub use error::{Error, Result};
pub use graph::{BipartiteMatrix, CoBipartite, RowShape, SimpleGraph};
pub use ordering::{
    check_conditions, find_ordering, normalize_b_to_a, recognize, ConditionViolation,
    OrderingCertificate, VertexClass,
};
pub use orient::{Orientation, SearchLimits, ShortcutWitness};
pub use word::{Letter, Word};
