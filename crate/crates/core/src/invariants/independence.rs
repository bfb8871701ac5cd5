use crate::graph::{Graph, VertexSet};

/// Independence number β(G) by branch and bound over neighbor bitsets.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    branch(g, g.vertices(), 0, &mut best);
    best
}

fn branch(g: &Graph, mut cand: VertexSet, mut size: usize, best: &mut usize) {
    loop {
        if size + cand.len() <= *best {
            return;
        }
        let Some(first) = cand.first() else {
            *best = size;
            return;
        };
        let (mut low, mut low_deg) = (first, usize::MAX);
        let (mut high, mut high_deg) = (first, 0);
        for v in cand {
            let d = g.neighbors(v).intersection(cand).len();
            if d < low_deg {
                (low, low_deg) = (v, d);
            }
            if d > high_deg {
                (high, high_deg) = (v, d);
            }
        }
        // A vertex of degree at most one lies in some maximum independent set.
        if low_deg <= 1 {
            cand = cand
                .difference(g.neighbors(low))
                .difference(VertexSet::singleton(low));
            size += 1;
            continue;
        }
        let without_high = cand.difference(VertexSet::singleton(high));
        branch(g, without_high.difference(g.neighbors(high)), size + 1, best);
        cand = without_high;
    }
}

/// All independent sets of exactly `k` vertices, in lexicographic order.
pub(crate) fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn grow(g: &Graph, chosen: VertexSet, cand: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if chosen.len() == k {
            out.push(chosen);
            return;
        }
        if chosen.len() + cand.len() < k {
            return;
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            let mut next = chosen;
            next.insert(v);
            grow(g, next, rest.difference(g.neighbors(v)), k, out);
        }
    }
    let mut out = Vec::new();
    grow(g, VertexSet::EMPTY, g.vertices(), k, &mut out);
    out
}
