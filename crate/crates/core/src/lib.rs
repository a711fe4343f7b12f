//! Exact solver and structural analysis for the Node Kayles game.
//!
//! Node Kayles is played on an undirected graph: players alternately pick a
//! vertex not adjacent to any previously picked vertex, the picked vertex and
//! its neighborhood leave the game, and the last player able to move wins.
//! This crate decides the winner through Sprague-Grundy nimbers computed by a
//! memoized dynamic program whose table is keyed by the connected game
//! positions (K-sets), computes the structural parameters that bound the
//! table size (vertex cover number, modular-width, neighborhood diversity),
//! and implements a nim-preserving kernelization driven by neighborhood
//! diversity.
//!
//! Everything operates on immutable bitset-backed graphs with at most 64
//! vertices; all algorithms here are exponential, so the cap is a feature.

pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod kset;
pub mod nimber;
pub mod params;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use nimber::Nimber;
