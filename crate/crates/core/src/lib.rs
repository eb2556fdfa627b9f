//! Separation profiles of graphs: balanced vertex cuts, vertex expansion,
//! expander families with growing girth, and cover-based separators.

pub mod asdim;
pub mod error;
pub mod expansion;
pub mod families;
pub mod graph;
pub mod rational;
pub mod separation;

pub use error::{Error, Result};
pub use graph::{Girth, Graph, GraphFamily, HostRef, SubgraphRef};
pub use rational::Rational;
