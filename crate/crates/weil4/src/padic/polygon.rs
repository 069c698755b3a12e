//! Newton polygons: lower convex hulls of coefficient valuations.
//!
//! Points are `(i, v_p(c_i))` for the nonzero coefficients `c_i` of `f`. A
//! segment between hull vertices `(i, y_i)` and `(j, y_j)` with `i < j` is
//! stored with slope `(y_i - y_j)/(j - i)`: the common valuation of the roots
//! attached to it. Reading the hull from the constant term at the left down to
//! the leading term, those slopes strictly decrease.

use num_rational::Rational64;

use super::valuation::{vp, Val};
use crate::exact::ZPoly;
use crate::{Error, Result};

/// One edge of the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    /// Valuation of every root attached to this edge.
    pub slope: Rational64,
    /// Projection length onto the x-axis; equals the degree of the attached
    /// factor over Q_p.
    pub length: usize,
}

/// Lower convex hull of `(i, v_p(c_i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Hull vertices, by ascending coefficient index.
    pub vertices: Vec<(usize, u64)>,
    /// Edges ordered by ascending coefficient index; root valuations strictly
    /// decrease along the list.
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// Distinct integer slopes (candidate valuations of Q_p-rational roots).
    pub fn integral_slopes(&self) -> Vec<i64> {
        self.segments
            .iter()
            .filter(|s| *s.slope.denom() == 1)
            .map(|s| *s.slope.numer())
            .collect()
    }

    pub fn has_slope(&self, slope: Rational64) -> bool {
        self.segments.iter().any(|s| s.slope == slope)
    }

    /// Compact text form `(slope x length), ...` for diagnostics.
    pub fn shape(&self) -> String {
        self.segments
            .iter()
            .map(|s| format!("({} x {})", s.slope, s.length))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Newton polygon of `f` at `p`; requires a nonzero constant term.
pub fn newton_polygon(f: &ZPoly, p: u64) -> Result<NewtonPolygon> {
    let deg = f
        .degree()
        .filter(|&d| d > 0)
        .ok_or(Error::ZeroConstantTerm)?;
    if f.coeff(0) == num_bigint::BigInt::from(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let points: Vec<(i64, i64)> = (0..=deg)
        .filter_map(|i| match vp(&f.coeff(i), p) {
            Val::Fin(v) => Some((i as i64, v as i64)),
            Val::Inf => None,
        })
        .collect();
    // Andrew monotone chain, lower hull; collinear middle points dropped.
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 - o.0) * (pt.1 - o.1) - (a.1 - o.1) * (pt.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| Segment {
            slope: Rational64::new(w[0].1 - w[1].1, w[1].0 - w[0].0),
            length: (w[1].0 - w[0].0) as usize,
        })
        .collect();
    Ok(NewtonPolygon {
        vertices: hull.into_iter().map(|(x, y)| (x as usize, y as u64)).collect(),
        segments,
    })
}

/// Polygon slopes rescaled by `1/n`, with lengths: the shape patterns used by
/// the dimension-4 classification are expressed in these units.
pub fn slope_profile(f: &ZPoly, p: u64, n: u32) -> Result<Vec<(Rational64, usize)>> {
    let polygon = newton_polygon(f, p)?;
    Ok(polygon
        .segments
        .iter()
        .map(|s| (s.slope / Rational64::from_integer(n as i64), s.length))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    #[test]
    fn single_segment_shapes() {
        // t^8 + 16 at p = 2: hull (0,4) -> (8,0), slope 1/2, length 8
        let f = z(&[16, 0, 0, 0, 0, 0, 0, 0, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.vertices, vec![(0, 4), (8, 0)]);
        assert_eq!(
            np.segments,
            vec![Segment {
                slope: Rational64::new(1, 2),
                length: 8
            }]
        );
        // t^2 - 2 at p = 2
        let np = newton_polygon(&z(&[-2, 0, 1]), 2).unwrap();
        assert_eq!(
            np.segments,
            vec![Segment {
                slope: Rational64::new(1, 2),
                length: 2
            }]
        );
    }

    #[test]
    fn supersingular_shape_from_quadruple() {
        // q = 4 (p = 2, n = 2), a = (-2, 0, 8, -16): valuations of the
        // t^7..t^0 coefficients are (1, inf, 3, 4, 5, inf, 7, 8); the hull is a
        // single segment of slope 1 and length 8.
        let wc = crate::weil::WeilCoefficients::from_q_i64(4, [-2, 0, 8, -16]).unwrap();
        let f = wc.polynomial();
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.vertices, vec![(0, 8), (8, 0)]);
        assert_eq!(
            np.segments,
            vec![Segment {
                slope: Rational64::from_integer(1),
                length: 8
            }]
        );
        // Rescaled by n = 2: slope 1/2, the supersingular profile.
        let profile = slope_profile(&f, 2, 2).unwrap();
        assert_eq!(profile, vec![(Rational64::new(1, 2), 8)]);
    }

    #[test]
    fn ordinary_profile() {
        // a4 odd over q = 2: ordinary, slopes 1 and 0 each of length 4.
        let wc = crate::weil::WeilCoefficients::from_q_i64(2, [0, 0, 0, 1]).unwrap();
        let profile = slope_profile(&wc.polynomial(), 2, 1).unwrap();
        assert_eq!(
            profile,
            vec![
                (Rational64::from_integer(1), 4),
                (Rational64::from_integer(0), 4)
            ]
        );
    }

    #[test]
    fn collinear_points_merge() {
        // p-rank 2 shape: vertices (0,4),(2,2),(6,0),(8,0) with (4,1) on the
        // middle edge.
        let wc = crate::weil::WeilCoefficients::from_q_i64(2, [0, 1, 2, 2]).unwrap();
        let np = newton_polygon(&wc.polynomial(), 2).unwrap();
        assert_eq!(
            np.segments
                .iter()
                .map(|s| (s.slope, s.length))
                .collect::<Vec<_>>(),
            vec![
                (Rational64::from_integer(1), 2),
                (Rational64::new(1, 2), 4),
                (Rational64::from_integer(0), 2)
            ]
        );
    }

    #[test]
    fn zero_constant_rejected() {
        assert!(newton_polygon(&z(&[0, 1, 1]), 2).is_err());
    }

    #[test]
    fn convexity_property() {
        let mut state: u64 = 31337;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..200 {
            let d = (next() % 8 + 1) as usize;
            let coeffs: Vec<i64> = (0..=d)
                .map(|_| {
                    let v = (next() % 400) as i64 - 200;
                    if v == 0 {
                        1
                    } else {
                        v
                    }
                })
                .collect();
            let f = z(&coeffs);
            for p in [2u64, 3, 5] {
                let np = newton_polygon(&f, p).unwrap();
                assert_eq!(
                    np.segments.iter().map(|s| s.length).sum::<usize>(),
                    f.degree().unwrap()
                );
                for w in np.segments.windows(2) {
                    assert!(w[0].slope > w[1].slope, "{}", np.shape());
                }
            }
        }
    }
}
