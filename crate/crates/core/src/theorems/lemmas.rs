//! The classical sufficient conditions behind the Zagreb-index theorems, as checkable
//! statements: Chvátal–Erdős for cycles and paths, Moon–Moser for balanced bipartite
//! graphs, and Jackson's long-cycle bound for 2-connected bipartite graphs.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    bipartition, circumference, independence_number, is_hamiltonian, is_traceable, vertex_connectivity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub applicable: bool,
    pub condition: bool,
    pub conclusion: bool,
    /// `¬applicable ∨ ¬condition ∨ conclusion`
    pub consistent: bool,
}

impl LemmaVerdict {
    fn new(applicable: bool, condition: bool, conclusion: bool) -> Self {
        LemmaVerdict {
            applicable,
            condition,
            conclusion,
            consistent: !applicable || !condition || conclusion,
        }
    }

    fn not_applicable() -> Self {
        LemmaVerdict::new(false, false, false)
    }
}

/// β(G) ≤ κ(G) forces a Hamiltonian cycle when n ≥ 3.
pub fn lemma1_chvatal_erdos(g: &Graph) -> Result<LemmaVerdict> {
    if g.order() < 3 {
        return Ok(LemmaVerdict::not_applicable());
    }
    let condition = independence_number(g) <= vertex_connectivity(g)?;
    Ok(LemmaVerdict::new(true, condition, is_hamiltonian(g)?))
}

/// β(G) ≤ κ(G) + 1 forces a Hamiltonian path. κ(K_1) is taken as 0.
pub fn lemma2_chvatal_erdos_traceable(g: &Graph) -> Result<LemmaVerdict> {
    if g.order() == 0 {
        return Ok(LemmaVerdict::not_applicable());
    }
    let kappa = if g.order() == 1 {
        0
    } else {
        vertex_connectivity(g)?
    };
    let condition = independence_number(g) <= kappa + 1;
    Ok(LemmaVerdict::new(true, condition, is_traceable(g)?))
}

/// Moon–Moser with the bipartition found by [`bipartition`].
pub fn lemma4_moon_moser(g: &Graph) -> Result<LemmaVerdict> {
    match bipartition(g) {
        Some((a, b)) => lemma4_moon_moser_with_parts(g, a, b),
        None => Ok(LemmaVerdict::not_applicable()),
    }
}

/// Moon–Moser for an explicit bipartition `(a, b)` with `|a| = |b| = h ≥ 2`: if
/// `d(x) + d(y) ≥ h + 1` for every nonadjacent `x ∈ a`, `y ∈ b`, the graph is Hamiltonian.
///
/// The lemma is stated for graphs of order `2h`; `h = 1` is excluded because `K_2`
/// satisfies the degree condition vacuously but has no cycle.
pub fn lemma4_moon_moser_with_parts(g: &Graph, a: VertexSet, b: VertexSet) -> Result<LemmaVerdict> {
    let h = a.len();
    let valid_parts =
        a.is_disjoint(b) && a.union(b) == g.vertices() && g.is_independent(a) && g.is_independent(b);
    if !valid_parts || b.len() != h || h < 2 {
        return Ok(LemmaVerdict::not_applicable());
    }
    let condition = a.iter().all(|x| {
        b.difference(g.neighbors(x))
            .iter()
            .all(|y| g.degree(x) + g.degree(y) > h)
    });
    Ok(LemmaVerdict::new(true, condition, is_hamiltonian(g)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacksonVerdict {
    pub applicable: bool,
    /// `2·min(|B|, s + t − 1, 2s − 2)` where `|A| ≥ |B|`, `s` is the minimum degree over
    /// `A` and `t` over `B`.
    pub promised_length: usize,
    pub actual: usize,
    pub consistent: bool,
}

/// Jackson's bound: a 2-connected bipartite graph with parts `|A| ≥ |B|`, minimum degree
/// `s` on `A` and `t` on `B`, has a cycle of length at least `2·min(|B|, s + t − 1, 2s − 2)`.
pub fn lemma5_jackson(g: &Graph) -> Result<JacksonVerdict> {
    let skip = JacksonVerdict {
        applicable: false,
        promised_length: 0,
        actual: 0,
        consistent: true,
    };
    if g.order() < 3 {
        return Ok(skip);
    }
    let Some((x, y)) = bipartition(g) else {
        return Ok(skip);
    };
    if vertex_connectivity(g)? < 2 {
        return Ok(skip);
    }
    let (a, b) = if x.len() >= y.len() { (x, y) } else { (y, x) };
    let min_deg = |set: VertexSet| set.iter().map(|v| g.degree(v)).min().unwrap_or(0);
    let (s, t) = (min_deg(a), min_deg(b));
    let promised_length = 2 * b.len().min(s + t - 1).min(2 * s - 2);
    let actual = circumference(g)?;
    Ok(JacksonVerdict {
        applicable: true,
        promised_length,
        actual,
        consistent: actual >= promised_length,
    })
}
