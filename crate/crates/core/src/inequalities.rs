//! The Pólya–Szegő inequality over exact rationals, and the degree-sum sandwich of an
//! independent set.
//!
//! For sequences with `0 < m1 ≤ a_k ≤ M1` and `0 < m2 ≤ b_k ≤ M2`,
//!
//! ```text
//! Σ a_k² · Σ b_k²  ≤  (M1·M2 + m1·m2)² / (4·m1·m2·M1·M2) · (Σ a_k·b_k)²
//! ```
//!
//! When `M1·M2 > m1·m2`, equality holds exactly when `ν = M1·m2·s / (M1·m2 + m1·M2)` is an
//! integer and the pairs `(a_k, b_k)` are `ν` copies of `(m1, M2)` and `s − ν` copies of
//! `(M1, m2)`. When `M1·M2 = m1·m2` both sequences are constant and equality always holds.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::ExactRational as Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyaSzegoInstance {
    pub a: Vec<Q>,
    pub b: Vec<Q>,
    pub lower_a: Q,
    pub upper_a: Q,
    pub lower_b: Q,
    pub upper_b: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyaSzegoReport {
    /// `Σa² · Σb²`
    pub lhs: Q,
    /// `(M1M2 + m1m2)² / (4 m1 m2 M1 M2) · (Σab)²`
    pub rhs: Q,
    pub holds: bool,
    pub equality: bool,
    pub nu: Q,
    pub nu_integral: bool,
    /// Whether the pairs are `ν` copies of `(m1, M2)` and `s − ν` copies of `(M1, m2)`,
    /// ignoring order. Always false when `ν` is not an integer.
    pub extremal_pattern: bool,
    /// `M1·M2 = m1·m2`, the degenerate case in which equality is automatic.
    pub degenerate: bool,
}

impl PolyaSzegoInstance {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    fn validate(&self) -> Result<()> {
        if self.a.len() != self.b.len() || self.a.is_empty() {
            return Err(Error::LengthMismatch {
                a: self.a.len(),
                b: self.b.len(),
            });
        }
        for (name, bound) in [
            ("m1", self.lower_a),
            ("M1", self.upper_a),
            ("m2", self.lower_b),
            ("M2", self.upper_b),
        ] {
            if !bound.is_positive() {
                return Err(Error::BoundViolation(format!("{name} = {bound} is not positive")));
            }
        }
        let seqs = [
            ("a", &self.a, self.lower_a, self.upper_a),
            ("b", &self.b, self.lower_b, self.upper_b),
        ];
        for (name, seq, lo, hi) in seqs {
            if lo > hi {
                return Err(Error::BoundViolation(format!(
                    "{name}: lower bound {lo} exceeds upper bound {hi}"
                )));
            }
            if let Some((k, x)) = seq.iter().enumerate().find(|(_, x)| **x < lo || **x > hi) {
                return Err(Error::BoundViolation(format!(
                    "{name}[{k}] = {x} outside [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }

    /// `ν = M1·m2·s / (M1·m2 + m1·M2)`.
    pub fn nu(&self) -> Result<Q> {
        extremal_count(self.lower_a, self.upper_a, self.lower_b, self.upper_b, self.len())
    }
}

fn extremal_count(lower_a: Q, upper_a: Q, lower_b: Q, upper_b: Q, s: usize) -> Result<Q> {
    let cross = upper_a.checked_mul(lower_b)?;
    cross
        .checked_mul(Q::from(s))?
        .checked_div(cross.checked_add(lower_a.checked_mul(upper_b)?)?)
}

/// Evaluates both sides of the inequality exactly and classifies the equality case.
pub fn polya_szego_check(inst: &PolyaSzegoInstance) -> Result<PolyaSzegoReport> {
    inst.validate()?;
    let sum_sq = |xs: &[Q]| Q::checked_sum(xs.iter().map(|x| x.square()).collect::<Result<Vec<_>>>()?);
    let sum_a2 = sum_sq(&inst.a)?;
    let sum_b2 = sum_sq(&inst.b)?;
    let sum_ab = Q::checked_sum(
        inst.a
            .iter()
            .zip(&inst.b)
            .map(|(x, y)| x.checked_mul(*y))
            .collect::<Result<Vec<_>>>()?,
    )?;

    let big = inst.upper_a.checked_mul(inst.upper_b)?;
    let small = inst.lower_a.checked_mul(inst.lower_b)?;
    let factor = big
        .checked_add(small)?
        .square()?
        .checked_div(Q::from_integer(4).checked_mul(small)?.checked_mul(big)?)?;

    let lhs = sum_a2.checked_mul(sum_b2)?;
    let rhs = factor.checked_mul(sum_ab.square()?)?;
    let nu = inst.nu()?;
    let nu_integral = nu.is_integer();

    let extremal_pattern = match nu.to_integer() {
        Some(count) => {
            let mut expected: HashMap<(Q, Q), i128> = HashMap::new();
            *expected.entry((inst.lower_a, inst.upper_b)).or_default() += count;
            *expected.entry((inst.upper_a, inst.lower_b)).or_default() += inst.len() as i128 - count;
            let mut seen: HashMap<(Q, Q), i128> = HashMap::new();
            for pair in inst.a.iter().copied().zip(inst.b.iter().copied()) {
                *seen.entry(pair).or_default() += 1;
            }
            expected.retain(|_, c| *c != 0);
            seen == expected
        }
        None => false,
    };

    Ok(PolyaSzegoReport {
        holds: lhs <= rhs,
        equality: lhs == rhs,
        lhs,
        rhs,
        nu,
        nu_integral,
        extremal_pattern,
        degenerate: big == small,
    })
}

/// Builds a sequence pair attaining equality for the given bounds and length.
///
/// In the degenerate case `M1·M2 = m1·m2` the constant sequences are returned; otherwise
/// `ν` must be an integer and the instance holds `ν` pairs `(m1, M2)` followed by `s − ν`
/// pairs `(M1, m2)`.
pub fn equality_instance(
    lower_a: Q,
    upper_a: Q,
    lower_b: Q,
    upper_b: Q,
    s: usize,
) -> Result<PolyaSzegoInstance> {
    if s == 0 {
        return Err(Error::LengthMismatch { a: 0, b: 0 });
    }
    for bound in [lower_a, upper_a, lower_b, upper_b] {
        if !bound.is_positive() {
            return Err(Error::BoundViolation(format!("bound {bound} is not positive")));
        }
    }
    let (a, b) = if upper_a.checked_mul(upper_b)? == lower_a.checked_mul(lower_b)? {
        (vec![lower_a; s], vec![lower_b; s])
    } else {
        let nu = extremal_count(lower_a, upper_a, lower_b, upper_b, s)?;
        let count = nu.to_integer().ok_or_else(|| {
            Error::NotIntegral(format!(
                "nu = {nu} for bounds ({lower_a}, {upper_a}, {lower_b}, {upper_b}) and s = {s}"
            ))
        })? as usize;
        let a = std::iter::repeat_n(lower_a, count).chain(std::iter::repeat_n(upper_a, s - count));
        let b = std::iter::repeat_n(upper_b, count).chain(std::iter::repeat_n(lower_b, s - count));
        (a.collect(), b.collect())
    };
    Ok(PolyaSzegoInstance {
        a,
        b,
        lower_a,
        upper_a,
        lower_b,
        upper_b,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeSandwich {
    /// `Σ_{u ∈ I} d(u)`
    pub lower: usize,
    pub edges: usize,
    /// `Σ_{v ∉ I} d(v)`
    pub upper: usize,
    pub tight_lower: bool,
    pub tight_upper: bool,
}

/// For an independent set `I`, `Σ_{u∈I} d(u) = |E(I, V−I)| ≤ e ≤ Σ_{v∉I} d(v)`.
///
/// Both bounds are tight exactly when `V − I` is independent too, i.e. when the graph is
/// bipartite with parts `I` and `V − I`.
pub fn degree_sandwich(g: &Graph, independent: VertexSet) -> Result<DegreeSandwich> {
    if !independent.is_subset(g.vertices()) || !g.is_independent(independent) {
        return Err(Error::NotIndependent);
    }
    let lower: usize = independent.iter().map(|v| g.degree(v)).sum();
    let upper: usize = g
        .vertices()
        .difference(independent)
        .iter()
        .map(|v| g.degree(v))
        .sum();
    let edges = g.edge_count();
    Ok(DegreeSandwich {
        lower,
        edges,
        upper,
        tight_lower: lower == edges,
        tight_upper: upper == edges,
    })
}
