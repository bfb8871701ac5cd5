//! Exact Hamiltonicity, traceability and circumference by backtracking.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::bipartite::bipartition;

/// Largest order accepted by [`is_hamiltonian`] and [`is_traceable`].
pub const HAMILTONIAN_MAX_ORDER: usize = 24;

/// Largest order accepted by [`circumference`].
pub const CIRCUMFERENCE_MAX_ORDER: usize = 16;

fn check_order(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::UnsupportedOrder { n, min: 0, max })
    } else {
        Ok(())
    }
}

/// Whether `g` has a Hamiltonian cycle. Graphs with fewer than three vertices have none.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.order();
    check_order(n, HAMILTONIAN_MAX_ORDER)?;
    if n < 3 || g.degree_profile().min_degree < 2 || !g.is_connected() {
        return Ok(false);
    }
    let unvisited = g.vertices().difference(VertexSet::singleton(0));
    Ok(extend_cycle(g, 0, unvisited))
}

fn extend_cycle(g: &Graph, end: usize, unvisited: VertexSet) -> bool {
    if unvisited.is_empty() {
        return g.has_edge(end, 0);
    }
    for next in g.neighbors(end).intersection(unvisited) {
        let rest = unvisited.difference(VertexSet::singleton(next));
        if !rest.is_empty() && g.neighbors(0).is_disjoint(rest) {
            continue;
        }
        // Every remaining vertex still needs two usable neighbors: the unvisited ones
        // plus the two open ends of the path.
        let open = rest
            .union(VertexSet::singleton(next))
            .union(VertexSet::singleton(0));
        if rest.iter().any(|u| g.neighbors(u).intersection(open).len() < 2) {
            continue;
        }
        if extend_cycle(g, next, rest) {
            return true;
        }
    }
    false
}

/// Whether `g` has a Hamiltonian path. The single-vertex graph is traceable.
pub fn is_traceable(g: &Graph) -> Result<bool> {
    let n = g.order();
    check_order(n, HAMILTONIAN_MAX_ORDER)?;
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() > 2 {
        return Ok(false);
    }
    // A leaf must be an endpoint, so it is the only start worth trying.
    let starts = match leaves.first() {
        Some(leaf) => VertexSet::singleton(leaf),
        None => g.vertices(),
    };
    Ok(starts
        .iter()
        .any(|s| extend_path(g, s, g.vertices().difference(VertexSet::singleton(s)))))
}

fn extend_path(g: &Graph, end: usize, unvisited: VertexSet) -> bool {
    if unvisited.is_empty() {
        return true;
    }
    for next in g.neighbors(end).intersection(unvisited) {
        let rest = unvisited.difference(VertexSet::singleton(next));
        let open = rest.union(VertexSet::singleton(next));
        let mut forced_ends = 0;
        let mut dead = false;
        for u in rest {
            match g.neighbors(u).intersection(open).len() {
                0 => {
                    dead = true;
                    break;
                }
                1 => forced_ends += 1,
                _ => {}
            }
        }
        if dead || forced_ends > 1 {
            continue;
        }
        if extend_path(g, next, rest) {
            return true;
        }
    }
    false
}

/// Length of a longest cycle, 0 for forests.
pub fn circumference(g: &Graph) -> Result<usize> {
    let n = g.order();
    check_order(n, CIRCUMFERENCE_MAX_ORDER)?;
    let ceiling = match bipartition(g) {
        Some((a, b)) => 2 * a.len().min(b.len()),
        None => n,
    };
    let mut best = 0;
    for start in 0..n {
        // Cycles are found from their lowest vertex.
        let allowed = g.vertices().difference(VertexSet::full(start + 1));
        if best >= ceiling || allowed.len() < best {
            break;
        }
        longest_from(g, start, start, allowed, 1, ceiling, &mut best);
    }
    Ok(best)
}

fn longest_from(
    g: &Graph,
    start: usize,
    end: usize,
    unvisited: VertexSet,
    len: usize,
    ceiling: usize,
    best: &mut usize,
) {
    if len >= 3 && len > *best && g.has_edge(end, start) {
        *best = len;
    }
    if *best >= ceiling {
        return;
    }
    // Only vertices still reachable from the path end can lengthen the cycle.
    let reach = g
        .component_within(end, unvisited.union(VertexSet::singleton(end)))
        .difference(VertexSet::singleton(end));
    if len + reach.len() <= *best || g.neighbors(start).is_disjoint(reach) {
        return;
    }
    for next in g.neighbors(end).intersection(unvisited) {
        let rest = unvisited.difference(VertexSet::singleton(next));
        longest_from(g, start, next, rest, len + 1, ceiling, best);
        if *best >= ceiling {
            return;
        }
    }
}
