use std::str::FromStr;

use zagreb_core::constructors::{complete_bipartite, t3_equality_graph, EqualityFamilySpec};
use zagreb_core::graph6;

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalKind {
    /// `K_{k,k+1}`; params `k` or a range `k1,k2`.
    BalancedPlusOne,
    /// `K_{k,k+2}`; params `k` or a range `k1,k2`.
    BalancedPlusTwo,
    /// Equality-family member; params `n,beta,delta`.
    T3Family,
}

impl FromStr for ExtremalKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s {
            "kkp1" => Ok(ExtremalKind::BalancedPlusOne),
            "kkp2" => Ok(ExtremalKind::BalancedPlusTwo),
            "t3family" => Ok(ExtremalKind::T3Family),
            other => Err(HarnessError::Usage(format!("unknown extremal kind {other:?}"))),
        }
    }
}

pub fn parse_params(params: &str) -> Result<Vec<usize>, HarnessError> {
    params
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| HarnessError::Usage(format!("bad parameter {p:?} in {params:?}")))
        })
        .collect()
}

/// graph6 lines for the requested extremal graphs.
pub fn emit_extremal(kind: ExtremalKind, params: &[usize]) -> Result<Vec<String>, HarnessError> {
    let graphs = match kind {
        ExtremalKind::BalancedPlusOne | ExtremalKind::BalancedPlusTwo => {
            let extra = if kind == ExtremalKind::BalancedPlusOne {
                1
            } else {
                2
            };
            let (lo, hi) = match *params {
                [k] => (k, k),
                [lo, hi] if lo <= hi => (lo, hi),
                _ => {
                    return Err(HarnessError::Usage(format!(
                        "expected k or k1,k2 with k1 <= k2, got {params:?}"
                    )))
                }
            };
            (lo..=hi)
                .map(|k| complete_bipartite(k, k + extra))
                .collect::<Result<Vec<_>, _>>()?
        }
        ExtremalKind::T3Family => match *params {
            [n, beta, delta] => vec![t3_equality_graph(EqualityFamilySpec { n, beta, delta })?],
            _ => {
                return Err(HarnessError::Usage(format!(
                    "t3family expects n,beta,delta, got {params:?}"
                )))
            }
        },
    };
    Ok(graphs.iter().map(graph6::encode).collect::<Result<Vec<_>, _>>()?)
}
