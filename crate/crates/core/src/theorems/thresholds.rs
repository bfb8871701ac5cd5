use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// `(n − s)·Δ² + (e·(δ + n − s))² / (4·δ·(n − s)·s)`.
///
/// This is the bound on `M1` obtained from an independent set of `s` vertices: the
/// `n − s` outside vertices contribute at most `Δ²` each, and the Pólya–Szegő inequality
/// bounds the squared degrees inside the set by their sum, which is at most `e`.
pub fn independent_set_threshold(
    n: u64,
    s: u64,
    e: u64,
    min_degree: u64,
    max_degree: u64,
) -> Result<ExactRational> {
    if min_degree == 0 {
        return Err(Error::ZeroDenominator("threshold: minimum degree is zero"));
    }
    if s == 0 || s >= n {
        return Err(Error::ZeroDenominator(
            "threshold: independent set size outside 1..n",
        ));
    }
    let outside = (n - s) as i128;
    let (s, e) = (s as i128, e as i128);
    let (delta, big_delta) = (min_degree as i128, max_degree as i128);
    let head = outside * big_delta * big_delta;
    let num = (e * (delta + outside)).pow(2);
    let den = 4 * delta * outside * s;
    ExactRational::from_integer(head).checked_add(ExactRational::new(num, den)?)
}

/// Hamiltonicity threshold for connectivity parameter `k`, using `k + 1` independent
/// vertices.
pub fn t1_rhs(n: u64, k: u64, e: u64, min_degree: u64, max_degree: u64) -> Result<ExactRational> {
    independent_set_threshold(n, k + 1, e, min_degree, max_degree)
}

/// Traceability threshold for connectivity parameter `k`, using `k + 2` independent
/// vertices.
pub fn t2_rhs(n: u64, k: u64, e: u64, min_degree: u64, max_degree: u64) -> Result<ExactRational> {
    independent_set_threshold(n, k + 2, e, min_degree, max_degree)
}

/// Upper bound on `M1` in terms of the independence number `beta`.
pub fn t3_bound(n: u64, e: u64, min_degree: u64, max_degree: u64, beta: u64) -> Result<ExactRational> {
    if beta == 0 || beta >= n {
        return Err(Error::InvalidParameter(format!(
            "independence number {beta} must lie in 1..{n}"
        )));
    }
    independent_set_threshold(n, beta, e, min_degree, max_degree)
}
