//! p-adic valuations with an absorbing infinity.

use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// Valuation value: finite exponent or infinity (valuation of zero).
///
/// `Inf` compares greater than every finite value, so `>=` thresholds are
/// satisfied and `== finite` comparisons fail, matching how zero coefficients
/// behave in valuation patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    Fin(u64),
    Inf,
}

impl Val {
    pub fn is_finite(&self) -> bool {
        matches!(self, Val::Fin(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Val::Fin(v) => Some(*v),
            Val::Inf => None,
        }
    }

    /// `self >= num/den`, cleared of denominators.
    pub fn at_least(&self, num: u64, den: u64) -> bool {
        match self {
            Val::Inf => true,
            Val::Fin(v) => v * den >= num,
        }
    }

    /// `self == num/den` exactly.
    pub fn equals(&self, num: u64, den: u64) -> bool {
        match self {
            Val::Inf => false,
            Val::Fin(v) => v * den == num,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Inf, Val::Inf) => Ordering::Equal,
            (Val::Inf, Val::Fin(_)) => Ordering::Greater,
            (Val::Fin(_), Val::Inf) => Ordering::Less,
            (Val::Fin(a), Val::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(v) => write!(f, "{v}"),
            Val::Inf => write!(f, "inf"),
        }
    }
}

/// Exact p-adic valuation of an integer; `Inf` for zero.
pub fn vp(x: &BigInt, p: u64) -> Val {
    assert!(p >= 2);
    if x.is_zero() {
        return Val::Inf;
    }
    let p_big = BigInt::from(p);
    let mut v = 0u64;
    let mut cur = x.clone();
    // Square the divisor while it still divides, then fall back down.
    let mut powers = vec![p_big.clone()];
    loop {
        let last = powers.last().unwrap();
        let sq = last * last;
        if (&cur % &sq).is_zero() {
            powers.push(sq);
        } else {
            break;
        }
    }
    for (i, pw) in powers.iter().enumerate().rev() {
        if (&cur % pw).is_zero() {
            cur /= pw;
            v += 1u64 << i;
        }
    }
    Val::Fin(v)
}
