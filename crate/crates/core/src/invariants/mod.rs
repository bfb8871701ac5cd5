//! Exact invariants used by the Zagreb-index conditions.

mod bipartite;
mod connectivity;
mod cycles;
mod independence;

pub use bipartite::{bipartition, is_bipartite};
pub use connectivity::{local_connectivity, vertex_connectivity};
pub use cycles::{
    circumference, is_hamiltonian, is_traceable, CIRCUMFERENCE_MAX_ORDER, HAMILTONIAN_MAX_ORDER,
};
pub use independence::independence_number;
pub(crate) use independence::independent_sets_of_size;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// First Zagreb index `M1(G) = Σ d(v)²`.
pub fn zagreb_m1(g: &Graph) -> u64 {
    (0..g.order()).map(|v| (g.degree(v) as u64).pow(2)).sum()
}

/// Every invariant of one graph that the theorems refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub n: usize,
    pub e: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub m1: u64,
    pub beta: usize,
    pub kappa: usize,
    pub hamiltonian: bool,
    pub traceable: bool,
    pub circumference: usize,
    pub bipartition: Option<(VertexSet, VertexSet)>,
}

/// Computes every field of [`InvariantBundle`]. Requires `2 ≤ n ≤ 16`.
pub fn full_bundle(g: &Graph) -> Result<InvariantBundle> {
    let profile = g.degree_profile();
    Ok(InvariantBundle {
        n: g.order(),
        e: profile.edges,
        min_degree: profile.min_degree,
        max_degree: profile.max_degree,
        m1: zagreb_m1(g),
        beta: independence_number(g),
        kappa: vertex_connectivity(g)?,
        hamiltonian: is_hamiltonian(g)?,
        traceable: is_traceable(g)?,
        circumference: circumference(g)?,
        bipartition: bipartition(g),
    })
}
