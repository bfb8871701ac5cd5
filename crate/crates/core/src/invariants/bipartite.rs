use crate::graph::{Graph, VertexSet};

/// Two-coloring of `g`, or `None` if `g` has an odd cycle.
///
/// Deterministic: the lowest-index vertex of each component is placed in the first part.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    let mut unseen = g.vertices();
    while let Some(root) = unseen.first() {
        let mut side = VertexSet::singleton(root);
        let mut other = VertexSet::EMPTY;
        let mut frontier = side;
        let mut frontier_is_a = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            let (same, opposite) = if frontier_is_a {
                (side, other)
            } else {
                (other, side)
            };
            if !next.is_disjoint(same) {
                return None;
            }
            let fresh = next.difference(opposite);
            if frontier_is_a {
                other = other.union(fresh);
            } else {
                side = side.union(fresh);
            }
            frontier = fresh;
            frontier_is_a = !frontier_is_a;
        }
        a = a.union(side);
        b = b.union(other);
        unseen = unseen.difference(side).difference(other);
    }
    Some((a, b))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}
