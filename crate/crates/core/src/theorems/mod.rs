//! Evaluators for the Zagreb-index Hamiltonicity, traceability and upper-bound theorems,
//! and for the classical lemmas they rest on.
//!
//! Every verdict records the exact left- and right-hand sides, whether the hypothesis was
//! met, whether the conclusion holds, and whether the graph is one of the named exceptions.
//! A verdict with `consistent == false` is a counterexample.

mod certificate;
mod lemmas;
mod thresholds;

use std::fmt;

pub use certificate::{find_equality_certificate, CertificateBranch, EqualityCertificate};
pub use lemmas::{
    lemma1_chvatal_erdos, lemma2_chvatal_erdos_traceable, lemma4_moon_moser, lemma4_moon_moser_with_parts,
    lemma5_jackson, JacksonVerdict, LemmaVerdict,
};
pub use thresholds::{independent_set_threshold, t1_rhs, t2_rhs, t3_bound};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    bipartition, independence_number, is_hamiltonian, is_traceable, vertex_connectivity, zagreb_m1,
    HAMILTONIAN_MAX_ORDER,
};
use crate::rational::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `M1` condition for Hamiltonicity of k-connected graphs, k ≥ 2, n ≥ 3.
    Hamiltonian,
    /// `M1` condition for traceability of k-connected graphs, k ≥ 1, n ≥ 9.
    Traceable,
    /// Upper bound on `M1` in terms of n, e, δ, Δ and β.
    UpperBound,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Hamiltonian => "t1",
            Theorem::Traceable => "t2",
            Theorem::UpperBound => "t3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    TooFewVertices { n: usize, min: usize },
    InsufficientConnectivity { kappa: usize, min: usize },
    ZeroMinimumDegree,
    TooManyVertices { n: usize, max: usize },
}

impl Applicability {
    pub fn is_applicable(&self) -> bool {
        matches!(self, Applicability::Applicable)
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Applicable => f.write_str("applicable"),
            Applicability::TooFewVertices { n, min } => write!(f, "n = {n} < {min}"),
            Applicability::InsufficientConnectivity { kappa, min } => {
                write!(f, "connectivity {kappa} < {min}")
            }
            Applicability::ZeroMinimumDegree => f.write_str("minimum degree 0"),
            Applicability::TooManyVertices { n, max } => {
                write!(f, "n = {n} above exact-search ceiling {max}")
            }
        }
    }
}

/// Named graphs allowed to meet a hypothesis without the conclusion, or the structural
/// families attaining the upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exception {
    /// `K_{k, k+1}`, the non-Hamiltonian exception.
    BalancedPlusOne { k: usize },
    /// `K_{k, k+2}`, the non-traceable exception.
    BalancedPlusTwo { k: usize },
    /// `K_{β, n−β}` attains the upper bound.
    EqualityCompleteBipartite,
    /// Bipartite graph with parts `I`, `V − I` whose independent side splits into the
    /// degree classes `P` and `Q`.
    EqualityPqFamily,
}

impl fmt::Display for Exception {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exception::BalancedPlusOne { k } => write!(f, "K_{{{k},{}}}", k + 1),
            Exception::BalancedPlusTwo { k } => write!(f, "K_{{{k},{}}}", k + 2),
            Exception::EqualityCompleteBipartite => f.write_str("t3-equality-branch-1"),
            Exception::EqualityPqFamily => f.write_str("t3-equality-branch-2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub applicability: Applicability,
    /// Smallest connectivity parameter whose condition is met (Hamiltonian/traceable only).
    pub k_used: Option<usize>,
    pub lhs_m1: u64,
    /// Threshold at `k_used` when the condition is met; otherwise the smallest threshold
    /// evaluated. For the upper bound, the bound itself.
    pub rhs: Option<ExactRational>,
    /// For the upper bound this is `M1 = bound`.
    pub condition_met: bool,
    /// Hamiltonian, traceable, or (upper bound) an equality certificate was found.
    pub conclusion_holds: bool,
    pub exception: Option<Exception>,
    pub consistent: bool,
    /// Upper bound only.
    pub certificate: Option<EqualityCertificate>,
}

impl TheoremVerdict {
    fn not_applicable(theorem: Theorem, applicability: Applicability, m1: u64) -> Self {
        TheoremVerdict {
            theorem,
            applicability,
            k_used: None,
            lhs_m1: m1,
            rhs: None,
            condition_met: false,
            conclusion_holds: false,
            exception: None,
            consistent: true,
            certificate: None,
        }
    }

    pub fn applicable(&self) -> bool {
        self.applicability.is_applicable()
    }
}

/// Part sizes `(a, b)` with `a ≤ b` if `g` is the complete bipartite graph `K_{a,b}`.
pub fn recognize_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let (a, b) = bipartition(g)?;
    let (a, b) = (a.len().min(b.len()), a.len().max(b.len()));
    (a >= 1 && g.edge_count() == a * b).then_some((a, b))
}

/// Shared driver for the two connectivity-parameterized conditions.
///
/// `extra` is 1 for Hamiltonicity (`k + 1` independent vertices, exception `K_{k,k+1}`)
/// and 2 for traceability.
fn check_connectivity_condition(
    g: &Graph,
    theorem: Theorem,
    min_order: usize,
    min_k: usize,
    extra: usize,
) -> Result<TheoremVerdict> {
    let n = g.order();
    let m1 = zagreb_m1(g);
    if n < min_order {
        let why = Applicability::TooFewVertices { n, min: min_order };
        return Ok(TheoremVerdict::not_applicable(theorem, why, m1));
    }
    if n > HAMILTONIAN_MAX_ORDER {
        let why = Applicability::TooManyVertices {
            n,
            max: HAMILTONIAN_MAX_ORDER,
        };
        return Ok(TheoremVerdict::not_applicable(theorem, why, m1));
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < min_k {
        let why = Applicability::InsufficientConnectivity { kappa, min: min_k };
        return Ok(TheoremVerdict::not_applicable(theorem, why, m1));
    }

    let profile = g.degree_profile();
    let conclusion = match theorem {
        Theorem::Hamiltonian => is_hamiltonian(g)?,
        _ => is_traceable(g)?,
    };
    let parts = recognize_complete_bipartite(g);
    let exceptional = |k: usize| parts == Some((k, k + extra));
    let tag = |k: usize| match extra {
        1 => Exception::BalancedPlusOne { k },
        _ => Exception::BalancedPlusTwo { k },
    };

    let mut k_used = None;
    let mut rhs_used = None;
    let mut smallest_rhs: Option<ExactRational> = None;
    let mut exception = None;
    let mut consistent = true;
    // Thresholds with k + extra ≥ n have a zero denominator and say nothing.
    for k in min_k..=kappa.min(n.saturating_sub(extra + 1)) {
        let rhs = thresholds::independent_set_threshold(
            n as u64,
            (k + extra) as u64,
            profile.edges as u64,
            profile.min_degree as u64,
            profile.max_degree as u64,
        )?;
        if smallest_rhs.is_none_or(|s| rhs < s) {
            smallest_rhs = Some(rhs);
        }
        if rhs.cmp_integer(m1 as i128).is_le() {
            if k_used.is_none() {
                k_used = Some(k);
                rhs_used = Some(rhs);
            }
            if exceptional(k) {
                exception = Some(tag(k));
            } else if !conclusion {
                consistent = false;
            }
        }
    }

    Ok(TheoremVerdict {
        theorem,
        applicability: Applicability::Applicable,
        k_used,
        lhs_m1: m1,
        rhs: rhs_used.or(smallest_rhs),
        condition_met: k_used.is_some(),
        conclusion_holds: conclusion,
        exception,
        consistent,
        certificate: None,
    })
}

/// Hamiltonicity condition: a k-connected graph (k ≥ 2) on n ≥ 3 vertices with
/// `M1 ≥ t1_rhs(n, k, e, δ, Δ)` is Hamiltonian or is `K_{k,k+1}`.
///
/// Every `k` from 2 to κ(G) is evaluated; each triggering `k` must yield the conclusion
/// or the matching exception. Graphs above the Hamiltonicity search ceiling are reported
/// as not applicable.
pub fn check_theorem1(g: &Graph) -> Result<TheoremVerdict> {
    check_connectivity_condition(g, Theorem::Hamiltonian, 3, 2, 1)
}

/// Traceability condition: a k-connected graph (k ≥ 1) on n ≥ 9 vertices with
/// `M1 ≥ t2_rhs(n, k, e, δ, Δ)` is traceable or is `K_{k,k+2}`.
pub fn check_theorem2(g: &Graph) -> Result<TheoremVerdict> {
    check_connectivity_condition(g, Theorem::Traceable, 9, 1, 2)
}

/// Upper bound `M1 ≤ t3_bound(n, e, δ, Δ, β)` for graphs with δ ≥ 1 (δ = 0 is an error),
/// with equality
/// exactly for `K_{β,n−β}` and the P/Q bipartite family.
///
/// The certificate search is structural and runs whether or not equality holds, so
/// `consistent` checks both directions of the characterization.
pub fn check_theorem3(g: &Graph) -> Result<TheoremVerdict> {
    let m1 = zagreb_m1(g);
    let profile = g.degree_profile();
    if g.order() == 0 || profile.min_degree == 0 {
        return Err(Error::ZeroMinimumDegree);
    }
    let beta = independence_number(g);
    let bound = t3_bound(
        g.order() as u64,
        profile.edges as u64,
        profile.min_degree as u64,
        profile.max_degree as u64,
        beta as u64,
    )?;
    let order = bound.cmp_integer(m1 as i128);
    let equality = order.is_eq();
    let certificate = find_equality_certificate(g, beta);
    let exception = certificate.as_ref().map(|c| match c.branch {
        CertificateBranch::CompleteBipartite => Exception::EqualityCompleteBipartite,
        CertificateBranch::PqFamily => Exception::EqualityPqFamily,
    });
    Ok(TheoremVerdict {
        theorem: Theorem::UpperBound,
        applicability: Applicability::Applicable,
        k_used: None,
        lhs_m1: m1,
        rhs: Some(bound),
        condition_met: equality,
        conclusion_holds: certificate.is_some(),
        exception,
        consistent: order.is_ge() && equality == certificate.is_some(),
        certificate,
    })
}
