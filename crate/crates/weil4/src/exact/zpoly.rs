//! Dense integer polynomials and the subresultant remainder sequence.
//!
//! Coefficients are stored in ascending degree order with the invariant that
//! the leading coefficient is nonzero (the zero polynomial has an empty
//! vector). Resultants and discriminants run over the integers via the
//! subresultant PRS, which keeps intermediate coefficient growth polynomial;
//! rational inputs are cleared to integers first (see `qpoly`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial, coefficients ascending, leading coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        ZPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        ZPoly::new(out)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division by an integer; panics if any coefficient is not divisible.
    pub fn div_exact_int(&self, c: &BigInt) -> ZPoly {
        assert!(!c.is_zero());
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division in polynomial");
                    q
                })
                .collect(),
        )
    }

    /// GCD of all coefficients, non-negative; zero only for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Strip content and normalize the leading coefficient to be positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        self.div_exact_int(&g)
    }

    /// Divide by the positive content, keeping the leading sign intact.
    pub fn strip_content(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        self.div_exact_int(&self.content())
    }

    /// Euclidean division when the divisor is monic: `self = q*d + r`, deg r < deg d.
    pub fn div_rem_monic(&self, d: &ZPoly) -> (ZPoly, ZPoly) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().clone();
            if !c.is_zero() {
                quo[k] = c.clone();
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k + i;
                    let t = dc * &c;
                    rem[idx] -= t;
                }
            }
            rem.pop();
        }
        (ZPoly::new(quo), ZPoly::new(rem))
    }

    /// Exact division (panics if the remainder is nonzero); divisor need not be monic.
    pub fn div_exact(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return ZPoly::zero();
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().clone();
            if !c.is_zero() {
                let (q, r) = c.div_rem(&lead);
                assert!(r.is_zero(), "inexact polynomial division (leading)");
                quo[k] = q.clone();
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &q;
                    rem[k + i] -= t;
                }
            }
            rem.pop();
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division (remainder)"
        );
        ZPoly::new(quo)
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("nonzero divisor");
        let sd = match self.degree() {
            Some(s) if s >= dd => s,
            _ => return self.clone(),
        };
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut shifts = sd - dd + 1;
        while rem.len() > dd {
            let c = rem.last().unwrap().clone();
            let k = rem.len() - 1 - dd;
            for x in rem.iter_mut() {
                *x *= &lead;
            }
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] -= t;
                }
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            shifts -= 1;
        }
        let mut out = ZPoly::new(rem);
        // Keep the classical normalization lc^(delta+1) even when the degree
        // drops by more than one per step.
        for _ in 0..shifts {
            out = out.scale(&lead);
        }
        out
    }

    /// Substitute `t -> t + c`.
    pub fn shift(&self, c: &BigInt) -> ZPoly {
        // Horner on the linear substitution.
        let mut out = ZPoly::zero();
        let lin = ZPoly::new(vec![c.clone(), BigInt::one()]);
        for coeff in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&ZPoly::constant(coeff.clone()));
        }
        out
    }

    /// Substitute `t -> c*t`.
    pub fn stretch(&self, c: &BigInt) -> ZPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut pow = BigInt::one();
        for coeff in &self.coeffs {
            out.push(coeff * &pow);
            pow *= c;
        }
        ZPoly::new(out)
    }

    /// Reverse coefficients: `t^deg * self(1/t)`.
    pub fn reversed(&self) -> ZPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        ZPoly::new(v)
    }

    /// Primitive-PRS GCD over Z, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let content = self.content().gcd(&other.content());
        loop {
            if b.is_zero() {
                return a.primitive().scale(&content);
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
        }
    }

    /// Squarefree part: `self / gcd(self, self')`, primitive.
    ///
    /// Both operands of the division are primitive, so by Gauss's lemma the
    /// quotient is an integer polynomial.
    pub fn squarefree_part(&self) -> ZPoly {
        if self.degree().map_or(true, |d| d == 0) {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.primitive()
        } else {
            self.primitive().div_exact(&g.primitive()).primitive()
        }
    }

    /// Resultant over Z via the subresultant PRS.
    pub fn resultant(&self, other: &ZPoly) -> BigInt {
        resultant_z(self, other)
    }

    /// Discriminant over Z: `(-1)^(m(m-1)/2) * res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let m = match self.degree() {
            None | Some(0) => return BigInt::zero(),
            Some(m) => m,
        };
        let res = resultant_z(self, &self.derivative());
        let lead = self.leading();
        let (q, r) = res.div_rem(&lead);
        assert!(r.is_zero(), "resultant not divisible by leading coefficient");
        if (m * (m - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }

    /// Squarefree over Z (equivalently over Q): `gcd(f, f')` constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i == 1 {
                write!(f, "t")?;
            } else if i > 1 {
                write!(f, "t^{i}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Subresultant-PRS resultant of two integer polynomials.
fn resultant_z(f: &ZPoly, g: &ZPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (fd, gd) = (f.degree().unwrap(), g.degree().unwrap());
    if fd == 0 {
        return f.leading().pow(gd as u32);
    }
    if gd == 0 {
        return g.leading().pow(fd as u32);
    }

    let ca = f.content();
    let cb = g.content();
    let mut a = f.div_exact_int(&ca);
    let mut b = g.div_exact_int(&cb);
    let mut sign = 1i32;
    let t = ca.pow(gd as u32) * cb.pow(fd as u32);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if fd % 2 == 1 && gd % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g_val = BigInt::one();
    let mut h_val = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            // Nontrivial common factor (db > 0), or b is the last nonzero entry.
            return if db > 0 {
                BigInt::zero()
            } else {
                unreachable!("pseudo_rem by a constant is never taken")
            };
        }
        a = b;
        let divisor = &g_val * h_val.pow(delta);
        b = r.div_exact_int(&divisor);
        g_val = a.leading();
        h_val = if delta == 0 {
            h_val
        } else {
            // h = h^(1-delta) * g^delta, exact in Z.
            let num = g_val.pow(delta);
            if delta == 1 {
                num
            } else {
                let den = h_val.pow(delta - 1);
                let (q, rr) = num.div_rem(&den);
                assert!(rr.is_zero(), "subresultant h-sequence division inexact");
                q
            }
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let num = b.leading().pow(da);
            let res = if da <= 1 {
                num
            } else {
                let den = h_val.pow(da - 1);
                let (q, rr) = num.div_rem(&den);
                assert!(rr.is_zero(), "subresultant final division inexact");
                q
            };
            return BigInt::from(sign) * t * res;
        }
    }
}
