//! Exact real-root counting via Sturm sequences.
//!
//! Chains are computed over content-stripped integer polynomials (every scale
//! factor kept positive so signs survive), and evaluated at rational or surd
//! endpoints through [`Surd::sign`]. The interval convention is half-open
//! `(lo, hi]`: sign variations are taken as right-limits, which makes a root
//! sitting exactly on an endpoint count for `hi` and not for `lo`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::qpoly::QPoly;
use super::surd::Surd;
use super::zpoly::ZPoly;
use crate::{Error, Result};

/// Interval endpoint for root counting.
#[derive(Debug, Clone)]
pub enum Endpoint {
    NegInf,
    Value(Surd),
    PosInf,
}

impl Endpoint {
    pub fn from_surd(s: Surd) -> Self {
        Endpoint::Value(s)
    }

    fn check_below(&self, other: &Endpoint) -> Result<()> {
        match (self, other) {
            (Endpoint::NegInf, Endpoint::NegInf) | (Endpoint::PosInf, Endpoint::PosInf) => {
                Err(Error::EmptyInterval)
            }
            (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => Ok(()),
            (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => Err(Error::EmptyInterval),
            (Endpoint::Value(a), Endpoint::Value(b)) => {
                if a.try_cmp(b)? == std::cmp::Ordering::Less {
                    Ok(())
                } else {
                    Err(Error::EmptyInterval)
                }
            }
        }
    }
}

/// Sturm chain over the integers; every rescaling is by a positive constant,
/// so the sign pattern matches the rational chain exactly.
fn sturm_chain(f: &ZPoly) -> Vec<ZPoly> {
    // Normalizing f itself to a positive leading coefficient replaces the whole
    // chain by its negation, which leaves variation counts unchanged.
    let f0 = f.primitive();
    let d0 = f0.derivative().strip_content();
    let mut chain = vec![f0, d0];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().map_or(true, |d| d == 0) {
            break;
        }
        let a = &chain[n - 2];
        let b = &chain[n - 1];
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let mut r = a.pseudo_rem(b);
        // pseudo_rem scales by lc(b)^(delta+1); flip when that factor is
        // negative so r stays a positive multiple of (a mod b).
        if b.leading().is_negative() && delta % 2 == 0 {
            r = r.neg();
        }
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().strip_content());
    }
    chain
}

fn sign_at(poly: &ZPoly, at: &Endpoint) -> Result<i32> {
    Ok(match at {
        Endpoint::NegInf => {
            let d = match poly.degree() {
                None => return Ok(0),
                Some(d) => d,
            };
            let lead = if poly.leading().is_negative() { -1 } else { 1 };
            if d % 2 == 0 {
                lead
            } else {
                -lead
            }
        }
        Endpoint::PosInf => match poly.degree() {
            None => 0,
            Some(_) => {
                if poly.leading().is_negative() {
                    -1
                } else {
                    1
                }
            }
        },
        Endpoint::Value(s) => QPoly::from_zpoly(poly).eval_surd(s)?.sign(),
    })
}

/// Sign variations with zeros skipped; equals the right-limit variation count.
fn variations(signs: &[i32]) -> usize {
    let mut last = 0i32;
    let mut count = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `f` in the half-open interval `(lo, hi]`.
///
/// The squarefree part of `f` is taken first, so multiplicities do not matter.
pub fn sturm_count(f: &QPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroDivision);
    }
    lo.check_below(hi)?;
    let (fz, _) = f.squarefree_part().clear_denominators();
    if fz.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let chain = sturm_chain(&fz);
    let sl: Vec<i32> = chain
        .iter()
        .map(|p| sign_at(p, lo))
        .collect::<Result<_>>()?;
    let sh: Vec<i32> = chain
        .iter()
        .map(|p| sign_at(p, hi))
        .collect::<Result<_>>()?;
    let (vl, vh) = (variations(&sl), variations(&sh));
    Ok(vl.saturating_sub(vh))
}

/// Distinct real roots on the whole line.
pub fn count_distinct_real_roots(f: &QPoly) -> usize {
    sturm_count(f, &Endpoint::NegInf, &Endpoint::PosInf).expect("whole-line interval")
}

/// Real roots counted with multiplicity, via Yun layers.
pub fn count_real_roots_with_multiplicity(f: &QPoly) -> usize {
    f.squarefree_decomposition()
        .iter()
        .map(|(g, mult)| mult * count_distinct_real_roots(g))
        .sum()
}

/// Real roots with multiplicity inside the closed interval `[-bound, bound]`.
pub fn count_real_roots_with_multiplicity_closed(f: &QPoly, bound: &Surd) -> Result<usize> {
    let lo = Endpoint::Value(bound.neg());
    let hi = Endpoint::Value(bound.clone());
    let mut total = 0usize;
    for (g, mult) in f.squarefree_decomposition() {
        let inner = sturm_count(&g, &lo, &hi)?;
        // (lo, hi] + the left endpoint itself.
        let at_lo = usize::from(g.eval_surd(&bound.neg())?.sign() == 0);
        total += mult * (inner + at_lo);
    }
    Ok(total)
}

/// Exact sign of `a + b*sqrt(q)`; thin wrapper naming the kernel operation.
pub fn surd_sign(a: BigRational, b: BigRational, q: BigInt) -> i32 {
    Surd::new(a, b, q).sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64(coeffs)
    }

    #[test]
    fn whole_line_counts() {
        assert_eq!(count_distinct_real_roots(&q(&[-2, 0, 1])), 2); // t^2 - 2
        assert_eq!(count_distinct_real_roots(&q(&[1, -2, 1])), 1); // (t-1)^2, distinct
        assert_eq!(count_distinct_real_roots(&q(&[1, 0, 1])), 0); // t^2 + 1
        assert_eq!(count_distinct_real_roots(&q(&[4, 0, -5, 0, 1])), 4); // (t^2-1)(t^2-4)
    }

    #[test]
    fn half_open_interval() {
        // t^4 - 5t^2 + 4 has roots -2, -1, 1, 2; two of them in (0, +inf)
        let f = q(&[4, 0, -5, 0, 1]);
        let zero = Endpoint::Value(Surd::from_ints(0, 0, 2));
        assert_eq!(sturm_count(&f, &zero, &Endpoint::PosInf).unwrap(), 2);
        // (0, 1] picks up the root at 1, (1, 2] the root at 2, (0, 2] both
        let one = Endpoint::Value(Surd::from_ints(1, 0, 2));
        let two = Endpoint::Value(Surd::from_ints(2, 0, 2));
        assert_eq!(sturm_count(&f, &zero, &one).unwrap(), 1);
        assert_eq!(sturm_count(&f, &one, &two).unwrap(), 1);
        assert_eq!(sturm_count(&f, &zero, &two).unwrap(), 2);
        // left endpoint exactly on a root is excluded
        assert_eq!(sturm_count(&f, &one, &Endpoint::PosInf).unwrap(), 1);
    }

    #[test]
    fn surd_endpoints() {
        // t^2 - 2: one root in (0, sqrt(2)], none in (sqrt(2), +inf)
        let f = q(&[-2, 0, 1]);
        let zero = Endpoint::Value(Surd::from_ints(0, 0, 2));
        let sqrt2 = Endpoint::Value(Surd::from_ints(0, 1, 2));
        assert_eq!(sturm_count(&f, &zero, &sqrt2).unwrap(), 1);
        assert_eq!(sturm_count(&f, &sqrt2, &Endpoint::PosInf).unwrap(), 0);
    }

    #[test]
    fn mismatched_radicands_fail() {
        let f = q(&[-2, 0, 1]);
        let lo = Endpoint::Value(Surd::from_ints(0, -1, 2));
        let hi = Endpoint::Value(Surd::from_ints(0, 1, 3));
        assert!(sturm_count(&f, &lo, &hi).is_err());
    }

    #[test]
    fn empty_interval_rejected() {
        let f = q(&[-2, 0, 1]);
        let one = Endpoint::Value(Surd::from_ints(1, 0, 2));
        assert!(sturm_count(&f, &one, &one).is_err());
        assert!(sturm_count(&f, &Endpoint::PosInf, &Endpoint::NegInf).is_err());
    }

    #[test]
    fn multiplicity_counts() {
        // (t^2+1)(t-3)^2 -> 2
        let f = q(&[1, 0, 1]).mul(&q(&[-3, 1])).mul(&q(&[-3, 1]));
        assert_eq!(count_real_roots_with_multiplicity(&f), 2);
        // t^4 -> 4
        assert_eq!(count_real_roots_with_multiplicity(&q(&[0, 0, 0, 0, 1])), 4);
        // t^4 + t^2 + 1 -> 0
        assert_eq!(count_real_roots_with_multiplicity(&q(&[1, 0, 1, 0, 1])), 0);
    }

    #[test]
    fn closed_interval_with_multiplicity() {
        // (t-1)^2 (t+1) on [-1, 1]: 3 with multiplicity, both endpoints roots
        let f = q(&[-1, 1]).mul(&q(&[-1, 1])).mul(&q(&[1, 1]));
        let one = Surd::from_ints(1, 0, 2);
        assert_eq!(
            count_real_roots_with_multiplicity_closed(&f, &one).unwrap(),
            3
        );
        // t^2 - 2 on [-sqrt(2), sqrt(2)]: both endpoint roots counted
        let g = q(&[-2, 0, 1]);
        let sqrt2 = Surd::from_ints(0, 1, 2);
        assert_eq!(
            count_real_roots_with_multiplicity_closed(&g, &sqrt2).unwrap(),
            2
        );
        // and on [-1, 1]: none
        assert_eq!(
            count_real_roots_with_multiplicity_closed(&g, &one).unwrap(),
            0
        );
    }

    #[test]
    fn parity_property_on_random_squarefree_polys() {
        // deg f - #real roots is even for squarefree f (complex roots pair up).
        let mut state: u64 = 999;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let mut tested = 0;
        while tested < 300 {
            let d = (next() % 8 + 1) as usize;
            let coeffs: Vec<i64> = (0..=d).map(|_| (next() % 41) as i64 - 20).collect();
            if coeffs[d] == 0 {
                continue;
            }
            let f = q(&coeffs);
            let (fz, _) = f.clear_denominators();
            if !fz.is_squarefree() {
                continue;
            }
            let roots = count_distinct_real_roots(&f);
            assert_eq!((d - roots) % 2, 0, "f = {coeffs:?}");
            tested += 1;
        }
    }

    #[test]
    fn counts_match_descartes_bisection_oracle() {
        // Independent isolator: Descartes' rule on Moebius-transformed
        // coefficients, bisecting until each interval certifies 0 or 1 roots.
        fn sign_variations_of_coeffs(f: &ZPoly) -> usize {
            let mut last = 0i32;
            let mut var = 0;
            for c in f.coeffs() {
                let s = if c.is_negative() {
                    -1
                } else if c.is_zero() {
                    0
                } else {
                    1
                };
                if s != 0 {
                    if last != 0 && s != last {
                        var += 1;
                    }
                    last = s;
                }
            }
            var
        }
        // Descartes bound for roots in (a, b): positive-root bound of
        // (1+t)^deg f((a + b t)/(1 + t)). Requires f(a), f(b) nonzero.
        fn roots_in_open_interval(f: &ZPoly, a: &BigRational, b: &BigRational) -> usize {
            let fq = QPoly::from_zpoly(f);
            assert!(!fq.eval(a).is_zero() && !fq.eval(b).is_zero());
            let d = f.degree().unwrap();
            let qa = QPoly::new(vec![a.clone(), b.clone()]);
            let qb = QPoly::from_i64(&[1, 1]);
            let mut acc = QPoly::zero();
            for (k, c) in f.coeffs().iter().enumerate() {
                let mut term = QPoly::constant(BigRational::from_integer(c.clone()));
                for _ in 0..k {
                    term = term.mul(&qa);
                }
                for _ in 0..(d - k) {
                    term = term.mul(&qb);
                }
                acc = acc.add(&term);
            }
            let (z, _) = acc.clear_denominators();
            let bound = sign_variations_of_coeffs(&z);
            if bound <= 1 {
                return bound;
            }
            let mid = (a + b) / BigRational::from_integer(2.into());
            if fq.eval(&mid).is_zero() {
                // Split just around the hit; the offset intervals stay root-free
                // near mid because roots of a squarefree f are isolated and the
                // two evaluations verify it.
                let eps = (b - a) / BigRational::from_integer(1_000_000_000i64.into());
                let (lo, hi) = (&mid - &eps, &mid + &eps);
                let inner = roots_in_open_interval(f, &lo, &hi);
                assert_eq!(inner, 1, "eps window captured extra roots");
                1 + roots_in_open_interval(f, a, &lo) + roots_in_open_interval(f, &hi, b)
            } else {
                roots_in_open_interval(f, a, &mid) + roots_in_open_interval(f, &mid, b)
            }
        }
        fn isolator_count(f: &ZPoly) -> usize {
            let lead = f.leading();
            let mut m = BigRational::from_integer(1.into());
            for c in f.coeffs() {
                let r = BigRational::new(c.abs(), lead.abs());
                if r > m {
                    m = r;
                }
            }
            // Cauchy bound, nudged off any root.
            let fq = QPoly::from_zpoly(f);
            let mut bound = m + BigRational::from_integer(2.into());
            while fq.eval(&bound).is_zero() || fq.eval(&(-bound.clone())).is_zero() {
                bound += BigRational::from_integer(1.into());
            }
            // Split point c with f(c) != 0 (a root exactly at c would break the
            // Moebius transform); any root at 0 then falls inside (-bound, c).
            let mut c = BigRational::from_integer(0.into());
            let mut k = 2i64;
            while fq.eval(&c).is_zero() {
                c = BigRational::new(1.into(), k.into());
                k += 1;
            }
            roots_in_open_interval(f, &-bound.clone(), &c) + roots_in_open_interval(f, &c, &bound)
        }

        let mut state: u64 = 777;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let mut tested = 0;
        while tested < 60 {
            let d = (next() % 7 + 1) as usize;
            let coeffs: Vec<i64> = (0..=d).map(|_| (next() % 13) as i64 - 6).collect();
            if coeffs[d] == 0 {
                continue;
            }
            let z = ZPoly::from_i64(&coeffs);
            if !z.is_squarefree() {
                continue;
            }
            assert_eq!(
                count_distinct_real_roots(&QPoly::from_zpoly(&z)),
                isolator_count(&z),
                "f = {coeffs:?}"
            );
            tested += 1;
        }
    }
}
