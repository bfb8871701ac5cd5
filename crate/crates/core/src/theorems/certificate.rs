use crate::graph::{Graph, VertexSet};
use crate::invariants::{bipartition, independent_sets_of_size};
use crate::rational::ExactRational;

use super::recognize_complete_bipartite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateBranch {
    /// The graph is `K_{β, n−β}`.
    CompleteBipartite,
    /// Bipartite with parts `I` (|I| = β) and `V − I`, every vertex of `V − I` of degree Δ,
    /// and `I` split into `P` (degree n − β) and `Q` (degree δ) of the forced sizes.
    PqFamily,
}

/// Structural witness that a graph attains the upper bound on `M1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityCertificate {
    pub branch: CertificateBranch,
    /// A maximum independent set.
    pub independent: VertexSet,
    /// Vertices of `I` with degree `n − β`.
    pub p: VertexSet,
    /// Vertices of `I` with degree `δ`.
    pub q: VertexSet,
    pub p_size: usize,
    pub q_size: usize,
    pub checks: Vec<(&'static str, bool)>,
}

impl EqualityCertificate {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Searches for a certificate that `g` lies in one of the two equality families, given its
/// independence number `beta`. The search is purely structural: it never evaluates the
/// bound.
pub fn find_equality_certificate(g: &Graph, beta: usize) -> Option<EqualityCertificate> {
    let n = g.order();
    let profile = g.degree_profile();
    let (delta, big_delta) = (profile.min_degree, profile.max_degree);
    if delta == 0 || beta == 0 || beta >= n {
        return None;
    }
    let outside = n - beta;
    let class =
        |set: VertexSet, d: usize| -> VertexSet { set.iter().filter(|&v| g.degree(v) == d).collect() };

    if recognize_complete_bipartite(g) == Some((outside, beta)) {
        let (a, b) = bipartition(g)?;
        let independent = if a.len() >= b.len() { a } else { b };
        let (p, q) = (class(independent, outside), class(independent, delta));
        return Some(EqualityCertificate {
            branch: CertificateBranch::CompleteBipartite,
            independent,
            p,
            q,
            p_size: p.len(),
            q_size: q.len(),
            checks: vec![("bipartite", true), ("complete", true)],
        });
    }

    if delta >= outside {
        return None;
    }
    let denom = (delta + outside) as i128;
    let p_target = ExactRational::new((delta * beta) as i128, denom).ok()?;
    let q_target = ExactRational::new((outside * beta) as i128, denom).ok()?;
    // Necessary for any choice of I: integral class sizes, and every edge leaves V − I,
    // whose vertices all have degree Δ.
    if !p_target.is_integer() || !q_target.is_integer() || profile.edges != outside * big_delta {
        return None;
    }

    independent_sets_of_size(g, beta)
        .into_iter()
        .find_map(|independent| {
            let rest = g.vertices().difference(independent);
            let (p, q) = (class(independent, outside), class(independent, delta));
            let checks = vec![
                ("bipartite", g.is_independent(rest)),
                (
                    "outside all degree max",
                    rest.iter().all(|v| g.degree(v) == big_delta),
                ),
                ("P and Q cover I", p.union(q) == independent),
                ("P all degree n - beta", p.iter().all(|v| g.degree(v) == outside)),
                ("Q all degree min", q.iter().all(|v| g.degree(v) == delta)),
                (
                    "|P| = min*beta/(min+n-beta)",
                    p_target.cmp_integer(p.len() as i128).is_eq(),
                ),
                (
                    "|Q| = (n-beta)*beta/(min+n-beta)",
                    q_target.cmp_integer(q.len() as i128).is_eq(),
                ),
            ];
            let cert = EqualityCertificate {
                branch: CertificateBranch::PqFamily,
                independent,
                p,
                q,
                p_size: p.len(),
                q_size: q.len(),
                checks,
            };
            cert.all_checks_pass().then_some(cert)
        })
}
