//! Exact rationals over `i128` with checked arithmetic.
//!
//! Every value is kept normalized (`den > 0`, `gcd(|num|, den) = 1`). Arithmetic reports
//! overflow as an error instead of wrapping. Ordering never multiplies: it compares
//! continued-fraction expansions, so it is exact for any pair of representable values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn overflow() -> Error {
    Error::Overflow("rational arithmetic")
}

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1 };
    pub const ONE: ExactRational = ExactRational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator("rational"));
        }
        if num == i128::MIN || den == i128::MIN {
            return Err(overflow());
        }
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ok(ExactRational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub const fn from_integer(value: i128) -> Self {
        ExactRational { num: value, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let g = gcd(self.den, rhs.den);
        let (bd, dd) = (self.den / g, rhs.den / g);
        let num = self
            .num
            .checked_mul(dd)
            .and_then(|l| rhs.num.checked_mul(bd).and_then(|r| l.checked_add(r)))
            .ok_or_else(overflow)?;
        let den = self.den.checked_mul(dd).ok_or_else(overflow)?;
        ExactRational::new(num, den)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(ExactRational {
            num: self.num.checked_neg().ok_or_else(overflow)?,
            den: self.den,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let num = (self.num / g1).checked_mul(rhs.num / g2).ok_or_else(overflow)?;
        let den = (self.den / g2).checked_mul(rhs.den / g1).ok_or_else(overflow)?;
        ExactRational::new(num, den)
    }

    pub fn recip(self) -> Result<Self> {
        ExactRational::new(self.den, self.num)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.num == 0 {
            return Err(Error::ZeroDenominator("rational division"));
        }
        self.checked_mul(rhs.recip()?)
    }

    pub fn square(self) -> Result<Self> {
        self.checked_mul(self)
    }

    /// Sum of an iterator of rationals.
    pub fn checked_sum<I: IntoIterator<Item = Self>>(items: I) -> Result<Self> {
        items
            .into_iter()
            .try_fold(ExactRational::ZERO, ExactRational::checked_add)
    }

    /// Compares with an integer without forming any product.
    pub fn cmp_integer(&self, value: i128) -> Ordering {
        self.cmp(&ExactRational::from_integer(value))
    }

    /// Decimal rendering truncated toward zero to `places` digits.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let sign = if self.num < 0 { "-" } else { "" };
        let num = self.num.unsigned_abs();
        let den = self.den as u128;
        let mut out = format!("{sign}{}", num / den);
        if places > 0 {
            out.push('.');
            let mut rem = num % den;
            for _ in 0..places {
                // rem < den ≤ i128::MAX, so rem * 10 fits in u128.
                rem *= 10;
                out.push(char::from(b'0' + (rem / den) as u8));
                rem %= den;
            }
        }
        out
    }
}

/// Floor division with a positive divisor.
fn floor_divmod(a: i128, b: i128) -> (i128, i128) {
    let q = a.div_euclid(b);
    (q, a.rem_euclid(b))
}

/// Compares `a/b` with `c/d` (`b, d > 0`) through their continued-fraction expansions.
fn cmp_fractions(mut a: i128, mut b: i128, mut c: i128, mut d: i128) -> Ordering {
    let mut flipped = false;
    loop {
        let (qa, ra) = floor_divmod(a, b);
        let (qc, rc) = floor_divmod(c, d);
        let ord = qa.cmp(&qc);
        if ord != Ordering::Equal {
            return if flipped { ord.reverse() } else { ord };
        }
        let ord = match (ra == 0, rc == 0) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        };
        if let Some(ord) = ord {
            return if flipped { ord.reverse() } else { ord };
        }
        // ra/b vs rc/d with both in (0, 1): compare the reciprocals b/ra vs d/rc, reversed.
        (a, b, c, d) = (b, ra, d, rc);
        flipped = !flipped;
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_fractions(self.num, self.den, other.num, other.den)
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for ExactRational {
    fn from(value: i64) -> Self {
        ExactRational::from_integer(value as i128)
    }
}

impl From<usize> for ExactRational {
    fn from(value: usize) -> Self {
        ExactRational::from_integer(value as i128)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => ExactRational::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(ExactRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}
