//! Dense polynomials over the rationals.
//!
//! The rational layer carries Euclidean division, gcd (monic-normalized) and
//! evaluation at rationals or quadratic surds. Anything resultant-shaped is
//! delegated to the integer layer after clearing denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::surd::Surd;
use super::zpoly::ZPoly;
use crate::{Error, Result};

/// Rational-coefficient polynomial, coefficients ascending, leading nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_zpoly(z: &ZPoly) -> Self {
        QPoly::new(
            z.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in `Q(sqrt(q))`.
    pub fn eval_surd(&self, x: &Surd) -> Result<Surd> {
        let q = x.radicand().clone();
        let mut acc = Surd::rational(BigRational::zero(), q.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .try_mul(x)?
                .try_add(&Surd::rational(c.clone(), q.clone()))?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: `self = q*d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            if !c.is_zero() {
                quo[k] = c.clone();
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] -= t;
                }
            }
            rem.pop();
        }
        Ok((QPoly::new(quo), QPoly::new(rem)))
    }

    /// Exact division; panics on nonzero remainder.
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact rational polynomial division");
        q
    }

    /// Monic gcd; the zero polynomial for two zero inputs.
    ///
    /// Runs the Euclidean algorithm on primitive integer images to bound
    /// coefficient growth, then normalizes the result to be monic.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let a = self.clear_denominators().0;
        let b = other.clear_denominators().0;
        let g = a.gcd(&b);
        let gq = QPoly::from_zpoly(&g);
        gq.into_monic()
    }

    pub fn into_monic(self) -> QPoly {
        if self.is_zero() {
            return self;
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// Smallest positive integer multiple with integer coefficients, and the
    /// multiplier used: returns `(c*self, c)`.
    pub fn clear_denominators(&self) -> (ZPoly, BigInt) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let z = ZPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let scaled = c * BigRational::from_integer(lcm.clone());
                    assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect(),
        );
        (z, lcm)
    }

    /// Squarefree part, monic.
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().map_or(true, |d| d == 0) {
            return self.clone().into_monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone().into_monic()
        } else {
            self.div_exact(&g).into_monic()
        }
    }

    /// Yun squarefree decomposition: pairwise-coprime monic `g_i` with
    /// `self = lc * prod g_i^i`, listed as `(g_i, i)` for `deg g_i > 0`.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        let f = self.clone().into_monic();
        if f.degree().map_or(true, |d| d == 0) {
            return vec![];
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        if a.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut i = 1;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree().map_or(false, |deg| deg > 0) {
                    out.push((b.into_monic(), i));
                }
                break;
            }
            let g = b.gcd(&d);
            if g.degree().map_or(false, |deg| deg > 0) {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g);
            c = d.div_exact(&g);
            i += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// Resultant, via the integer subresultant PRS after clearing denominators:
    /// `res(f, g) = res(F, G) / (cf^deg(g) * cg^deg(f))`.
    pub fn resultant(&self, other: &QPoly) -> BigRational {
        if self.is_zero() || other.is_zero() {
            return BigRational::zero();
        }
        let (fz, cf) = self.clear_denominators();
        let (gz, cg) = other.clear_denominators();
        let rz = fz.resultant(&gz);
        let denom = cf.pow(other.degree().unwrap() as u32) * cg.pow(self.degree().unwrap() as u32);
        BigRational::new(rz, denom)
    }

    /// Discriminant: `(-1)^(m(m-1)/2) res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> BigRational {
        let m = match self.degree() {
            None | Some(0) => return BigRational::zero(),
            Some(m) => m,
        };
        let res = self.resultant(&self.derivative());
        let signed = if (m * (m - 1) / 2) % 2 == 1 { -res } else { res };
        signed / self.leading()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn eval_and_divide() {
        // t^2 + 1 at 2 -> 5
        assert_eq!(q(&[1, 0, 1]).eval(&rat(2, 1)), rat(5, 1));
        // (t^2 - 9) / (t - 3) = (t + 3, 0)
        let (quo, rem) = q(&[-9, 0, 1]).div_rem(&q(&[-3, 1])).unwrap();
        assert_eq!(quo, q(&[3, 1]));
        assert!(rem.is_zero());
        assert!(q(&[1]).div_rem(&QPoly::zero()).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let g = q(&[-1, 0, 1]).gcd(&q(&[1, -2, 1]));
        assert_eq!(g, q(&[-1, 1]));
        assert!(g.leading().is_one());
    }

    #[test]
    fn eval_at_surd() {
        // f = t^2 - 2 vanishes at sqrt(2)
        let f = q(&[-2, 0, 1]);
        let v = f.eval_surd(&Surd::from_ints(0, 1, 2)).unwrap();
        assert_eq!(v.sign(), 0);
        // f = t^2 - 3 at sqrt(2): -1
        let w = q(&[-3, 0, 1]).eval_surd(&Surd::from_ints(0, 1, 2)).unwrap();
        assert_eq!(w.sign(), -1);
    }

    #[test]
    fn discriminant_matches_quadratic_formula() {
        // t^2 + 3t + 1 -> 5
        assert_eq!(q(&[1, 3, 1]).discriminant(), rat(5, 1));
        // scaled coefficients: disc((t^2+3t+1)/2) = 5/4
        let half = q(&[1, 3, 1]).scale(&rat(1, 2));
        assert_eq!(half.discriminant(), rat(5, 4));
    }

    #[test]
    fn yun_decomposition() {
        // (t-1)^2 (t^2+1)
        let f = q(&[-1, 1]).mul(&q(&[-1, 1])).mul(&q(&[1, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (q(&[1, 0, 1]), 1));
        assert_eq!(dec[1], (q(&[-1, 1]), 2));
        // t^4
        let dec = q(&[0, 0, 0, 0, 1]).squarefree_decomposition();
        assert_eq!(dec, vec![(q(&[0, 1]), 4)]);
        // squarefree stays intact
        let dec = q(&[-2, 0, 1]).squarefree_decomposition();
        assert_eq!(dec, vec![(q(&[-2, 0, 1]), 1)]);
    }
}
