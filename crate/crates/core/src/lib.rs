//! 2-bisections of bridgeless claw-free cubic graphs.
//!
//! A k-bisection of a cubic graph is a 2-colouring of the vertices with
//! equal class sizes in which every monochromatic component has at most k
//! vertices. This crate builds 2-bisections constructively for bridgeless
//! claw-free cubic graphs, exhaustively searches k-bisections of arbitrary
//! small graphs as an independent oracle (the Petersen graph is the known
//! exception at k = 2), and ships the structure analysis, matchings,
//! generators and codecs the pipeline rests on.
//!
//! Modules:
//! - [`graph`]: edge-list multigraph and colouring types.
//! - [`codec`]: graph6, edge-list and colouring files, bit-exact.
//! - [`recognition`]: connectivity, cubicity, bridges, claws, diamonds.
//! - [`decomposition`]: the K4 / ring-of-diamonds / triangle-replacement
//!   structure and its re-expansion.
//! - [`matching`]: perfect matchings and 2-factor circuits.
//! - [`bisector`]: the constructive solver and the k-bisection verifier.
//! - [`oracle`]: exhaustive search and counting.
//! - [`generators`]: fixtures and seeded random instances.

pub mod bisector;
pub mod codec;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod oracle;
pub mod recognition;
pub mod rng;

pub use bisector::{solve, verify, SolveError, VerifyReport};
pub use graph::{Colour, Colouring, Multigraph};
pub use recognition::{recognize, RecognitionReport};
