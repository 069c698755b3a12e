//! Weil-polynomial membership for degree-8 candidates.
//!
//! A candidate is a quadruple `(a1, a2, a3, a4)` with `q = p^n`, standing for
//!
//! ```text
//! p(t) = t^8 + a1 t^7 + a2 t^6 + a3 t^5 + a4 t^4 + q a3 t^3 + q^2 a2 t^2 + q^3 a1 t + q^4
//! ```
//!
//! Membership is decided twice, by structurally independent routes:
//!
//! * [`is_weil`] evaluates six explicit coefficient conditions with exact surd
//!   signs and an exact real-root count of the depressed quartic, falling back
//!   to extraction of real roots `+-sqrt(q)` of even multiplicity when the
//!   polynomial has any;
//! * [`is_weil_generic`] works for any even degree: it reconstructs the monic
//!   integer polynomial whose roots are `x_i = -(w_i + q/w_i)` and requires all
//!   of them to be real in `[-2 sqrt(q), 2 sqrt(q)]`, counted with multiplicity.
//!
//! The two agree everywhere; the census module exercises that exhaustively.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::surd::rational_to_f64;
use crate::exact::{
    count_real_roots_with_multiplicity, count_real_roots_with_multiplicity_closed, perfect_sqrt,
    QPoly, Surd, ZPoly,
};
use crate::{Error, Result};

/// Candidate coefficient quadruple with its verified prime-power field size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilCoefficients {
    p: u64,
    n: u32,
    q: BigInt,
    a: [BigInt; 4],
}

impl WeilCoefficients {
    /// Build from `p` and `n`; `q = p^n` is computed.
    pub fn new(p: u64, n: u32, a: [BigInt; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrimePower(BigInt::from(p)));
        }
        let q = BigInt::from(p).pow(n);
        Ok(WeilCoefficients { p, n, q, a })
    }

    /// Build from `q`, factored as a prime power by descending-exponent
    /// integer roots.
    pub fn from_q(q: &BigInt, a: [BigInt; 4]) -> Result<Self> {
        let (p, n) = factor_prime_power(q)?;
        Ok(WeilCoefficients {
            p,
            n,
            q: q.clone(),
            a,
        })
    }

    pub fn from_q_i64(q: i64, a: [i64; 4]) -> Result<Self> {
        Self::from_q(&BigInt::from(q), a.map(BigInt::from))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn a(&self) -> &[BigInt; 4] {
        &self.a
    }

    /// The represented degree-8 polynomial, ascending coefficients.
    pub fn polynomial(&self) -> ZPoly {
        let q = &self.q;
        let [a1, a2, a3, a4] = &self.a;
        ZPoly::new(vec![
            q.pow(4),
            q.pow(3) * a1,
            q.pow(2) * a2,
            q * a3,
            a4.clone(),
            a3.clone(),
            a2.clone(),
            a1.clone(),
            BigInt::one(),
        ])
    }
}

/// Elementary symmetric functions `s1..s4` of the `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricFunctions {
    pub s1: BigInt,
    pub s2: BigInt,
    pub s3: BigInt,
    pub s4: BigInt,
}

/// Coefficients of the depressed real-root-test quartic `t^4 + r2 t^2 + r3 t + r4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepressedQuartic {
    pub r2: BigRational,
    pub r3: BigRational,
    pub r4: BigRational,
}

impl DepressedQuartic {
    pub fn polynomial(&self) -> QPoly {
        QPoly::new(vec![
            self.r4.clone(),
            self.r3.clone(),
            self.r2.clone(),
            BigRational::zero(),
            BigRational::one(),
        ])
    }
}

/// Coefficients of the shifted quartics whose roots are `2 sqrt(q) +- x_i`.
#[derive(Debug, Clone)]
pub struct ShiftedQuartics {
    pub plus: [Surd; 4],
    pub minus: [Surd; 4],
}

/// Which route certified (or refuted) membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Branch {
    /// All six coefficient conditions hold; the polynomial has no real root.
    #[serde(rename = "no_real_root")]
    NoRealRoot,
    /// Real roots `+-sqrt(q)` of even multiplicity with a Weil residual.
    #[serde(rename = "real_root_factor")]
    RealRootFactor,
    #[serde(rename = "not_weil")]
    NotWeil,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Branch::NoRealRoot => "no_real_root",
            Branch::RealRootFactor => "real_root_factor",
            Branch::NotWeil => "not_weil",
        };
        write!(f, "{s}")
    }
}

/// Real roots of the candidate: multiplicities of the `+-sqrt(q)` factors and
/// the residual cofactor.
#[derive(Debug, Clone)]
pub struct RealRootFactor {
    /// Multiplicities of `t - sqrt(q)` and `t + sqrt(q)` when `q` is square;
    /// for non-square `q` both entries carry the multiplicity of `t^2 - q`.
    pub multiplicities: (usize, usize),
    pub square_radicand: bool,
    /// `p(t)` divided by the extracted real-root factors.
    pub residual: ZPoly,
}

/// Full membership verdict.
#[derive(Debug, Clone)]
pub struct WeilVerdict {
    pub is_weil: bool,
    pub branch: Branch,
    pub condition_flags: [bool; 6],
    pub real_root_data: Option<RealRootFactor>,
}

/// Derived quantities of a candidate: symmetric functions, depressed quartic,
/// shifted quartics.
pub fn derive(wc: &WeilCoefficients) -> (SymmetricFunctions, DepressedQuartic, ShiftedQuartics) {
    let q = &wc.q;
    let [a1, a2, a3, a4] = &wc.a;

    let s = SymmetricFunctions {
        s1: a1.clone(),
        s2: a2 - 4 * q,
        s3: a3 - 3 * q * a1,
        s4: a4 - 2 * q * a2 + 2 * q * q,
    };

    let rat = BigRational::from_integer;
    let frac = |num: BigInt, den: i64| BigRational::new(num, BigInt::from(den));

    let r2 = frac(-3 * a1 * a1, 8) + rat(a2 - 4 * q);
    let r3 = frac(a1 * a1 * a1, 8) - rat(q * a1) - frac(a1 * a2, 2) + rat(a3.clone());
    let r4 = frac(-3 * a1 * a1 * a1 * a1, 256)
        + frac(q * a1 * a1, 2)
        + frac(a1 * a1 * a2, 16)
        - frac(a1 * a3, 4)
        - rat(2 * q * a2)
        + rat(2 * q * q)
        + rat(a4.clone());
    let dq = DepressedQuartic { r2, r3, r4 };

    let surd = |a: BigInt, b: BigInt| {
        Surd::new(
            BigRational::from_integer(a),
            BigRational::from_integer(b),
            q.clone(),
        )
    };
    let shifted = ShiftedQuartics {
        plus: [
            surd(-a1.clone(), BigInt::from(-8)),
            surd(20 * q + a2, 6 * a1.clone()),
            surd(-9 * q * a1 - a3, -16 * q - 4 * a2),
            surd(2 * q * q + 2 * q * a2 + a4, 2 * q * a1 + 2 * a3),
        ],
        minus: [
            surd(a1.clone(), BigInt::from(-8)),
            surd(20 * q + a2, -6 * a1.clone()),
            surd(9 * q * a1 + a3, -16 * q - 4 * a2),
            surd(2 * q * q + 2 * q * a2 + a4, -2 * q * a1 - 2 * a3),
        ],
    };

    (s, dq, shifted)
}

/// The six membership conditions, each decided exactly.
///
/// (1), (2)-lower, (3) and (5) are strict surd inequalities; (2)-upper is a
/// rational comparison; (4) is the derivative-discriminant sign
/// `8 r2^3 + 27 r3^2 <= 0`; (6) asks the depressed quartic for four real roots
/// counted with multiplicity.
pub fn check_conditions(wc: &WeilCoefficients) -> [bool; 6] {
    let q = &wc.q;
    let [a1, a2, a3, a4] = &wc.a;
    let (_, dq, _) = derive(wc);

    let surd = |a: BigInt, b: BigInt| {
        Surd::new(
            BigRational::from_integer(a),
            BigRational::from_integer(b),
            q.clone(),
        )
    };

    // (1) |a1| < 8 sqrt(q)
    let c1 = surd(-a1.abs(), BigInt::from(8)).sign() > 0;

    // (2) 6 sqrt(q) |a1| - 20 q < a2 <= 3 a1^2 / 8 + 4 q
    let lower2 = surd(a2 + 20 * q, -6 * a1.abs()).sign() > 0;
    let upper2 = BigRational::from_integer(a2.clone())
        <= BigRational::new(3 * a1 * a1, BigInt::from(8)) + BigRational::from_integer(4 * q);
    let c2 = lower2 && upper2;

    // (3) |a3 + 9 q a1| < 4 sqrt(q) a2 + 16 q sqrt(q)
    let mid3: BigInt = a3 + 9 * q * a1;
    let c3 = surd(mid3.clone(), 16 * q + 4 * a2).sign() > 0
        && surd(-mid3, 16 * q + 4 * a2).sign() > 0;

    // (4) the derivative of the depressed quartic has all real roots:
    // 8 r2^3 + 27 r3^2 <= 0
    let eight = BigRational::from_integer(8.into());
    let twenty_seven = BigRational::from_integer(27.into());
    let c4 = eight * dq.r2.pow(3) + twenty_seven * dq.r3.pow(2) <= BigRational::zero();

    // (5) 2 sqrt(q) |q a1 + a3| - 2 q a2 - 2 q^2 < a4
    let c5 = surd(a4 + 2 * q * a2 + 2 * q * q, -2 * (q * a1 + a3).abs()).sign() > 0;

    // (6) the depressed quartic has four real roots with multiplicity
    let c6 = count_real_roots_with_multiplicity(&dq.polynomial()) == 4;

    [c1, c2, c3, c4, c5, c6]
}

/// Extract real-root factors `t -+ sqrt(q)` (square `q`) or `t^2 - q`
/// (non-square `q`) of maximal multiplicity.
///
/// Returns `None` when the candidate has no root at `+-sqrt(q)`. Multiplicity
/// parity is judged by the caller.
pub fn detect_real_root_factor(wc: &WeilCoefficients) -> Option<RealRootFactor> {
    let poly = wc.polynomial();
    if let Some(w) = perfect_sqrt(&wc.q) {
        let (mult_pos, after_pos) = extract_linear(&poly, &w);
        let (mult_neg, residual) = extract_linear(&after_pos, &-&w);
        if mult_pos == 0 && mult_neg == 0 {
            return None;
        }
        Some(RealRootFactor {
            multiplicities: (mult_pos, mult_neg),
            square_radicand: true,
            residual,
        })
    } else {
        let factor = ZPoly::new(vec![-wc.q.clone(), BigInt::zero(), BigInt::one()]);
        let mut mult = 0;
        let mut current = poly;
        loop {
            if current.degree().map_or(true, |d| d < 2) {
                break;
            }
            let (quo, rem) = current.div_rem_monic(&factor);
            if rem.is_zero() {
                mult += 1;
                current = quo;
            } else {
                break;
            }
        }
        if mult == 0 {
            return None;
        }
        Some(RealRootFactor {
            multiplicities: (mult, mult),
            square_radicand: false,
            residual: current,
        })
    }
}

fn extract_linear(poly: &ZPoly, root: &BigInt) -> (usize, ZPoly) {
    let factor = ZPoly::new(vec![-root.clone(), BigInt::one()]);
    let mut mult = 0;
    let mut current = poly.clone();
    loop {
        if current.degree().map_or(true, |d| d == 0) {
            break;
        }
        let (quo, rem) = current.div_rem_monic(&factor);
        if rem.is_zero() {
            mult += 1;
            current = quo;
        } else {
            break;
        }
    }
    (mult, current)
}

/// Monic integer polynomial of degree `g` whose roots are the
/// `x_i = -(w_i + q/w_i)`, from a q-weighted monic polynomial of degree `2g`.
///
/// Peels `f(t) = sum_j g_j t^(g-j) (t^2 + q)^j` from the top coefficient down;
/// a nonzero residual reports a weighting violation.
pub fn x_polynomial(f: &ZPoly, q: &BigInt) -> Result<ZPoly> {
    let deg = f.degree().ok_or(Error::WeightViolation(0))?;
    if deg % 2 != 0 || !f.is_monic() {
        return Err(Error::WeightViolation(deg));
    }
    let g = deg / 2;
    for k in 0..g {
        if f.coeff(k) != q.pow((g - k) as u32) * f.coeff(2 * g - k) {
            return Err(Error::WeightViolation(k));
        }
    }
    let base = ZPoly::new(vec![q.clone(), BigInt::zero(), BigInt::one()]); // t^2 + q
    let mut powers = vec![ZPoly::one()];
    for j in 1..=g {
        let prev = powers[j - 1].clone();
        powers.push(prev.mul(&base));
    }
    let mut h = f.clone();
    let mut g_coeffs = vec![BigInt::zero(); g + 1];
    for j in (0..=g).rev() {
        let c = h.coeff(g + j);
        if !c.is_zero() {
            let term = ZPoly::monomial(c.clone(), g - j).mul(&powers[j]);
            h = h.sub(&term);
            g_coeffs[j] = c;
        }
    }
    if !h.is_zero() {
        return Err(Error::WeightViolation(h.degree().unwrap_or(0)));
    }
    // G(y) = sum g_j y^j has roots -x_i; X(u) = (-1)^g G(-u).
    let x_coeffs: Vec<BigInt> = g_coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if (g + k) % 2 == 1 { -c } else { c.clone() })
        .collect();
    Ok(ZPoly::new(x_coeffs))
}

/// Generic membership oracle for any even degree `2g`: true iff the
/// x-polynomial has `g` real roots with multiplicity, all inside
/// `[-2 sqrt(q), 2 sqrt(q)]`.
pub fn is_weil_generic(f: &ZPoly, q: &BigInt) -> Result<bool> {
    let deg = f.degree().ok_or(Error::WeightViolation(0))?;
    if deg == 0 {
        return if f.is_monic() {
            Ok(true)
        } else {
            Err(Error::WeightViolation(0))
        };
    }
    let g = deg / 2;
    let x = x_polynomial(f, q)?;
    let bound = Surd::new(
        BigRational::zero(),
        BigRational::from_integer(2.into()),
        q.clone(),
    );
    let count = count_real_roots_with_multiplicity_closed(&QPoly::from_zpoly(&x), &bound)?;
    Ok(count == g)
}

/// Full membership decision: conditions branch first, real-root branch second.
pub fn is_weil(wc: &WeilCoefficients) -> WeilVerdict {
    let flags = check_conditions(wc);
    if flags.iter().all(|&b| b) {
        return WeilVerdict {
            is_weil: true,
            branch: Branch::NoRealRoot,
            condition_flags: flags,
            real_root_data: None,
        };
    }
    match detect_real_root_factor(wc) {
        Some(data) => {
            let (mp, mn) = data.multiplicities;
            let even = mp % 2 == 0 && mn % 2 == 0;
            let residual_ok = even && is_weil_generic(&data.residual, &wc.q).unwrap_or(false);
            WeilVerdict {
                is_weil: residual_ok,
                branch: if residual_ok {
                    Branch::RealRootFactor
                } else {
                    Branch::NotWeil
                },
                condition_flags: flags,
                real_root_data: Some(data),
            }
        }
        None => WeilVerdict {
            is_weil: false,
            branch: Branch::NotWeil,
            condition_flags: flags,
            real_root_data: None,
        },
    }
}

/// Float diagnostics for the admissible `r4` window.
#[derive(Debug, Clone)]
pub struct CardanoBounds {
    /// Roots of the discriminant cubic, sorted ascending; the quartic has all
    /// real roots iff `gamma[0] <= r4 <= gamma[1]`.
    pub gamma: [f64; 3],
    pub delta: f64,
    pub u2: f64,
    pub u3: f64,
    pub omega: Complex64,
}

/// Cube-root bounds for the `r4` window of the all-real-roots region.
///
/// Diagnostic only: the exact membership path counts real roots directly. The
/// window endpoints are roots of the discriminant of `t^4 + r2 t^2 + r3 t + r4`
/// viewed as a cubic in `r4`, obtained by the classical cube-root formula and
/// sorted numerically.
pub fn cardano_bounds(dq: &DepressedQuartic) -> Result<CardanoBounds> {
    let r2 = rational_to_f64(&dq.r2);
    let r3 = rational_to_f64(&dq.r3);
    let u2 = -r2.powi(4) / 48.0 + 9.0 * r2 * r3 * r3 / 16.0;
    let u3 = r2.powi(6) / 864.0 + 5.0 * r2.powi(3) * r3 * r3 / 64.0 - 27.0 * r3.powi(4) / 256.0;
    let mut delta = -u3 * u3 - 4.0 / 27.0 * u2.powi(3);
    let scale = (u3 * u3).max(u2.abs().powi(3)).max(1.0);
    if delta < -1e-9 * scale {
        return Err(Error::ComplexCardano);
    }
    if delta < 0.0 {
        delta = 0.0;
    }
    let inner = Complex64::new(-u3 / 2.0, delta.sqrt() / 2.0);
    // Branch: |w|^(1/3) * exp(i arg(w) / 3), arg in [0, pi].
    let omega = Complex64::from_polar(inner.norm().cbrt(), inner.arg() / 3.0);
    let j = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let offset = r2 * r2 / 6.0;
    let mut gamma = [
        2.0 * omega.re + offset,
        2.0 * (j * omega).re + offset,
        2.0 * (j * j * omega).re + offset,
    ];
    gamma.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(CardanoBounds {
        gamma,
        delta,
        u2,
        u3,
        omega,
    })
}

/// Factor `q` as `p^n` with `p` prime, maximizing `n`.
pub fn factor_prime_power(q: &BigInt) -> Result<(u64, u32)> {
    use num_traits::ToPrimitive;
    if q < &BigInt::from(2) {
        return Err(Error::NotPrimePower(q.clone()));
    }
    let max_n = q.bits() as u32;
    for n in (1..=max_n).rev() {
        let r = q.nth_root(n);
        if r.pow(n) == *q {
            if let Some(ru) = r.to_u64() {
                if is_prime_u64(ru) {
                    return Ok((ru, n));
                }
            }
        }
    }
    Err(Error::NotPrimePower(q.clone()))
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if x == p {
            return true;
        }
        if x % p == 0 {
            return false;
        }
    }
    let mut d = x - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % x as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= x;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut v = powmod(a, d);
        if v == 1 || v == x - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            v = mul(v, v);
            if v == x - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
