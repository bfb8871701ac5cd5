//! Named graphs, the equality family of the upper bound, and seeded random graphs.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::MAX_GRAPH6_ORDER;
use crate::invariants::independence_number;
use crate::rational::ExactRational;
use crate::theorems::{check_theorem3, CertificateBranch};

/// `K_{a,b}` with parts `{0..a}` and `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || a + b > MAX_GRAPH6_ORDER {
        return Err(Error::InvalidParameter(format!(
            "K_{{{a},{b}}} needs both parts nonempty and at most {MAX_GRAPH6_ORDER} vertices"
        )));
    }
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `C_n` on vertices `0..n` in ring order.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder {
            n,
            min: 3,
            max: MAX_ORDER,
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `P_n` on vertices `0..n` in line order.
pub fn path_graph(n: usize) -> Result<Graph> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Graph::from_edge_list(n, &edges)
}

/// Parameters of a member of the P/Q equality family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityFamilySpec {
    pub n: usize,
    pub beta: usize,
    pub delta: usize,
}

/// Derived sizes of an [`EqualityFamilySpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityFamilySizes {
    pub p: usize,
    pub q: usize,
    pub edges: usize,
    pub max_degree: usize,
}

impl EqualityFamilySpec {
    /// Checks `1 ≤ δ < n − β ≤ min(Δ, β)`, `Δ ≤ β` and the integrality of `|P|`, `|Q|`, `e`
    /// and `Δ`.
    pub fn sizes(&self) -> Result<EqualityFamilySizes> {
        let EqualityFamilySpec { n, beta, delta } = *self;
        if beta == 0 || beta >= n || n > MAX_GRAPH6_ORDER {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= beta < n <= {MAX_GRAPH6_ORDER}, got n = {n}, beta = {beta}"
            )));
        }
        let outside = n - beta;
        if delta == 0 || delta >= outside {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= delta < n - beta = {outside}, got delta = {delta}"
            )));
        }
        let denom = (delta + outside) as i128;
        let integral = |what: &str, num: usize| -> Result<usize> {
            let value = ExactRational::new(num as i128, denom)?;
            value.to_integer().map(|v| v as usize).ok_or_else(|| {
                Error::NotIntegral(format!(
                    "{what} = {value} for n = {n}, beta = {beta}, delta = {delta}"
                ))
            })
        };
        let p = integral("|P| = delta*beta/(delta+n-beta)", delta * beta)?;
        let q = integral("|Q| = (n-beta)*beta/(delta+n-beta)", outside * beta)?;
        let edges = p * outside + q * delta;
        if edges % outside != 0 {
            return Err(Error::NotIntegral(format!(
                "Delta = e/(n-beta) = {edges}/{outside}"
            )));
        }
        let max_degree = edges / outside;
        if max_degree > beta {
            return Err(Error::InvalidParameter(format!(
                "Delta = {max_degree} exceeds beta = {beta}"
            )));
        }
        // P-vertices have degree n − β, which must not exceed Δ; and V − I is itself
        // independent, so it cannot outnumber I.
        if outside > max_degree || outside > beta {
            return Err(Error::InvalidParameter(format!(
                "n - beta = {outside} exceeds Delta = {max_degree} or beta = {beta}"
            )));
        }
        Ok(EqualityFamilySizes {
            p,
            q,
            edges,
            max_degree,
        })
    }
}

/// Builds a bipartite graph attaining the upper bound through the P/Q branch.
///
/// Layout: `I = {0..β}` with `P = {0..|P|}` first, then `Q`; the other side is `{β..n}`.
/// `P` is joined to every outside vertex. The `i`-th vertex of `Q` is joined to the `δ`
/// outside vertices starting at offset `i·δ mod (n − β)`, cyclically. The result is
/// verified: its independence number must be `β` and the bound must be attained with a
/// P/Q certificate, otherwise construction fails.
pub fn t3_equality_graph(spec: EqualityFamilySpec) -> Result<Graph> {
    let sizes = spec.sizes()?;
    let EqualityFamilySpec { n, beta, delta } = spec;
    let outside = n - beta;
    let mut g = Graph::empty(n)?;
    for x in 0..sizes.p {
        for z in beta..n {
            g.add_edge(x, z)?;
        }
    }
    for i in 0..sizes.q {
        let y = sizes.p + i;
        for j in 0..delta {
            g.add_edge(y, beta + (i * delta + j) % outside)?;
        }
    }

    let found = independence_number(&g);
    if found != beta {
        return Err(Error::Construction(format!(
            "round-robin realization of {spec:?} has independence number {found}, not {beta}"
        )));
    }
    let verdict = check_theorem3(&g)?;
    let certified = verdict
        .certificate
        .as_ref()
        .is_some_and(|c| c.branch == CertificateBranch::PqFamily);
    if !(verdict.condition_met && certified && verdict.consistent) {
        return Err(Error::Construction(format!(
            "realization of {spec:?} does not attain the bound with a P/Q certificate"
        )));
    }
    Ok(g)
}

/// Each pair `(u, v)`, taken in graph6 column order, is an edge when the next `u64` drawn
/// from `ChaCha8Rng::seed_from_u64(seed)` is below `p · 2^64`.
pub fn random_graph(n: usize, p: ExactRational, seed: u64) -> Result<Graph> {
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            min: 0,
            max: MAX_GRAPH6_ORDER,
        });
    }
    if p < ExactRational::ZERO || p > ExactRational::ONE || p.denom() > u64::MAX as i128 {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let (num, den) = (p.numer() as u128, p.denom() as u128);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            let x = rng.next_u64() as u128;
            if x * den < num << 64 {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
