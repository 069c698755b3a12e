//! Quadratic surds `a + b*sqrt(q)` with exact sign determination.
//!
//! Every strict or non-strict inequality involving `sqrt(q)` in this crate is
//! decided through [`Surd::sign`], which reduces to integer comparisons of
//! `a^2` against `b^2 q`. Perfect-square radicands are folded into the rational
//! part at construction time, so a comparison never mixes a rational and an
//! irrational representation of the same number.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Exact value `a + b*sqrt(q)` with rational `a`, `b` and integer radicand `q >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    a: BigRational,
    b: BigRational,
    q: BigInt,
}

/// Floor of the integer square root, `None` for negative input.
pub fn int_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        None
    } else {
        Some(x.sqrt())
    }
}

/// Whether `x` is a perfect square, returning its root.
pub fn perfect_sqrt(x: &BigInt) -> Option<BigInt> {
    let r = int_sqrt(x)?;
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

impl Surd {
    /// Build `a + b*sqrt(q)`, folding `sqrt(q)` into `a` when `q` is a perfect square.
    ///
    /// # Panics
    /// Panics if `q < 1`.
    pub fn new(a: BigRational, b: BigRational, q: BigInt) -> Self {
        assert!(q >= BigInt::one(), "radicand must be >= 1");
        if let Some(w) = perfect_sqrt(&q) {
            Surd {
                a: a + &b * BigRational::from_integer(w),
                b: BigRational::zero(),
                q,
            }
        } else {
            Surd { a, b, q }
        }
    }

    /// Purely rational value, tagged with the radicand `q`.
    pub fn rational(a: BigRational, q: BigInt) -> Self {
        Surd::new(a, BigRational::zero(), q)
    }

    /// Convenience constructor from integer parts.
    pub fn from_ints(a: i64, b: i64, q: i64) -> Self {
        Surd::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigInt::from(q),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of `a + b*sqrt(q)`: `-1`, `0` or `1`.
    ///
    /// Case analysis on the signs of `a` and `b`; the mixed-sign case compares
    /// `a^2` with `b^2 q`. After constructor normalization `a^2 = b^2 q` with
    /// `b != 0` is impossible (it would force `sqrt(q)` rational).
    pub fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        if self.b.is_zero() {
            return sa;
        }
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // a and b have strictly opposite signs: compare magnitudes exactly.
        let a2 = &self.a * &self.a;
        let b2q = &self.b * &self.b * BigRational::from_integer(self.q.clone());
        match a2.cmp(&b2q) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => {
                unreachable!("a^2 = b^2 q with irrational sqrt(q) after normalization")
            }
        }
    }

    /// Compare two surds over the same radicand.
    pub fn try_cmp(&self, other: &Surd) -> Result<Ordering> {
        let diff = self.try_sub(other)?;
        Ok(match diff.sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    fn unify_radicand(&self, other: &Surd) -> Result<BigInt> {
        if self.q == other.q || other.b.is_zero() {
            Ok(self.q.clone())
        } else if self.b.is_zero() {
            Ok(other.q.clone())
        } else {
            Err(Error::RadicandMismatch(self.q.clone(), other.q.clone()))
        }
    }

    pub fn try_add(&self, other: &Surd) -> Result<Surd> {
        let q = self.unify_radicand(other)?;
        Ok(Surd::new(&self.a + &other.a, &self.b + &other.b, q))
    }

    pub fn try_sub(&self, other: &Surd) -> Result<Surd> {
        let q = self.unify_radicand(other)?;
        Ok(Surd::new(&self.a - &other.a, &self.b - &other.b, q))
    }

    /// Product in `Q(sqrt(q))`.
    pub fn try_mul(&self, other: &Surd) -> Result<Surd> {
        let q = self.unify_radicand(other)?;
        let qr = BigRational::from_integer(q.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &qr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Surd::new(a, b, q))
    }

    pub fn neg(&self) -> Surd {
        Surd {
            a: -&self.a,
            b: -&self.b,
            q: self.q.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Surd {
        Surd {
            a: &self.a * c,
            b: &self.b * c,
            q: self.q.clone(),
        }
    }

    /// Largest integer `m` with `m <= a + b*sqrt(q)`.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // Start from a float estimate, then correct with exact comparisons.
        let mut m = BigInt::from(self.to_f64().floor() as i64);
        while self.cmp_int(&m) == Ordering::Less {
            m -= 1;
        }
        loop {
            let next = &m + 1;
            if self.cmp_int(&next) != Ordering::Less {
                m = next;
            } else {
                break;
            }
        }
        m
    }

    /// Smallest integer `m` with `m >= a + b*sqrt(q)`.
    pub fn ceil(&self) -> BigInt {
        let f = self.floor();
        if self.cmp_int(&f) == Ordering::Equal {
            f
        } else {
            f + 1
        }
    }

    /// Exact comparison against an integer.
    pub fn cmp_int(&self, m: &BigInt) -> Ordering {
        let shifted = Surd {
            a: &self.a - BigRational::from_integer(m.clone()),
            b: self.b.clone(),
            q: self.q.clone(),
        };
        match shifted.sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Float approximation; diagnostics only.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * big_to_f64(&self.q).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.q)
        }
    }
}

pub(crate) fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    big_to_f64(x.numer()) / big_to_f64(x.denom())
}

pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_rational_case() {
        assert_eq!(Surd::from_ints(1, 0, 5).sign(), 1);
        assert_eq!(Surd::from_ints(-3, 0, 5).sign(), -1);
        assert_eq!(Surd::from_ints(0, 0, 7).sign(), 0);
    }

    #[test]
    fn sign_mixed_case() {
        // 4^2 = 16 < 17, so -4 + sqrt(17) > 0.
        assert_eq!(Surd::from_ints(-4, 1, 17).sign(), 1);
        // 5^2 = 25 > 17.
        assert_eq!(Surd::from_ints(-5, 1, 17).sign(), -1);
        assert_eq!(Surd::from_ints(4, -1, 17).sign(), -1);
    }

    #[test]
    fn perfect_square_normalizes() {
        // sqrt(16) = 4 folds into the rational part: -4 + sqrt(16) = 0.
        let s = Surd::from_ints(-4, 1, 16);
        assert!(s.is_rational());
        assert_eq!(s.sign(), 0);
    }

    #[test]
    fn arithmetic_in_quadratic_field() {
        // (1 + sqrt(2))(1 - sqrt(2)) = -1
        let x = Surd::from_ints(1, 1, 2);
        let y = Surd::from_ints(1, -1, 2);
        let p = x.try_mul(&y).unwrap();
        assert!(p.is_rational());
        assert_eq!(p.rational_part(), &rat(-1, 1));
    }

    #[test]
    fn radicand_mismatch_rejected() {
        let x = Surd::from_ints(0, 1, 2);
        let y = Surd::from_ints(0, 1, 3);
        assert!(x.try_add(&y).is_err());
        // A rational surd is compatible with any radicand.
        let z = Surd::from_ints(5, 0, 3);
        assert!(x.try_add(&z).is_ok());
    }

    #[test]
    fn floor_and_ceil() {
        // 8*sqrt(2) = 11.31...
        let s = Surd::from_ints(0, 8, 2);
        assert_eq!(s.floor(), BigInt::from(11));
        assert_eq!(s.ceil(), BigInt::from(12));
        let t = Surd::from_ints(-3, 8, 2);
        assert_eq!(t.floor(), BigInt::from(8));
        let exact = Surd::from_ints(7, 0, 2);
        assert_eq!(exact.floor(), BigInt::from(7));
        assert_eq!(exact.ceil(), BigInt::from(7));
        let neg = Surd::from_ints(0, -8, 2);
        assert_eq!(neg.floor(), BigInt::from(-12));
        assert_eq!(neg.ceil(), BigInt::from(-11));
    }

    #[test]
    fn sign_agrees_with_float_on_random_inputs() {
        // Deterministic LCG sweep; skip cases too close to zero for f64.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let mut checked = 0u32;
        for _ in 0..100_000 {
            let a = (next() % 2_000_001) as i64 - 1_000_000;
            let b = (next() % 2_000_001) as i64 - 1_000_000;
            let q = (next() % 1_000_000) as i64 + 1;
            let s = Surd::from_ints(a, b, q);
            let approx = s.to_f64();
            let scale = (a.abs().max(b.abs()) as f64).max(1.0) * (q as f64).sqrt();
            if approx.abs() > scale * 1e-9 {
                assert_eq!(
                    s.sign(),
                    if approx > 0.0 { 1 } else { -1 },
                    "a={a} b={b} q={q}"
                );
                checked += 1;
            } else {
                // Near-zero float values: only exact zero is permitted to disagree.
                let _ = s.sign();
            }
        }
        assert!(checked > 90_000);
    }
}
