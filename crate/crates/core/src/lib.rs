//! Exact graph invariants and the first-Zagreb-index conditions for Hamiltonian and
//! traceable graphs, together with the Zagreb upper bound in terms of the independence
//! number and its equality characterization.
//!
//! All threshold arithmetic is exact: right-hand sides are [`ExactRational`] values and
//! every comparison with `M1(G)` is decided without floating point.

pub mod constructors;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod inequalities;
pub mod invariants;
pub mod rational;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, VertexSet};
pub use rational::ExactRational;
