//! Chern classes of ideal sheaves via Koszul resolutions.
//!
//! For a complete intersection the structure sheaf is resolved by line
//! bundles, so its class in the truncated ring is an explicit product of
//! `(1 - k t)^(±1)` factors and the ideal sheaf class is the inverse. The
//! supported shapes are the ones with genuinely computable resolutions:
//! reduced points, a line, and a codimension-2 complete intersection.

use num_bigint::BigInt;
use num_traits::One;

use crate::chern::ChernData;
use crate::rational::{binomial, binomial_big, rat_big};
use crate::series::TruncatedSeries;

use super::CatalogError;

/// Subvarieties whose ideal-sheaf Chern classes are computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subvariety {
    /// `m` reduced points in general position.
    Points(u32),
    /// A line (complete intersection of `N - 1` hyperplanes).
    Line,
    /// A complete intersection of hypersurfaces of the two given degrees.
    CompleteIntersection(u32, u32),
}

/// `(1 - k t)^e` in the truncated ring, via the binomial series
/// `sum_j C(e, j) (-k t)^j`; exact for any integer exponent, including the
/// large multiplicities a Koszul complex produces.
fn linear_power(cap: usize, k: i64, e: &BigInt) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(cap + 1);
    let mut k_pow = BigInt::one();
    for j in 0..=cap {
        coeffs.push(rat_big(binomial_big(e, j as u32) * &k_pow));
        k_pow *= BigInt::from(-k);
    }
    TruncatedSeries::from_coeffs(cap, coeffs)
}

/// Class of the structure sheaf of a complete intersection of hyperplane
/// degrees `degrees`, from the Koszul resolution: the alternating product
/// over subsets reduces to degree sums with binomial multiplicities when all
/// degrees agree, and is expanded subset-by-subset otherwise.
fn ci_structure_class(cap: usize, degrees: &[u32]) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(cap);
    let c = degrees.len();
    // all supported shapes have at most 2 distinct degrees; hyperplane
    // powers use the binomial shortcut
    if degrees.iter().all(|&d| d == 1) {
        for k in 0..=c {
            let mut mult = binomial(c as i64, k as u32);
            if k % 2 == 1 {
                mult = -mult;
            }
            acc = acc
                .mul(&linear_power(cap, k as i64, &mult))
                .expect("equal caps");
        }
        return acc;
    }
    let one = BigInt::one();
    for mask in 0..(1u32 << c) {
        let mut total = 0i64;
        let mut picked = 0;
        for (i, &d) in degrees.iter().enumerate() {
            if mask & (1 << i) != 0 {
                total += d as i64;
                picked += 1;
            }
        }
        let e = if picked % 2 == 0 { one.clone() } else { -&one };
        acc = acc.mul(&linear_power(cap, total, &e)).expect("equal caps");
    }
    acc
}

/// Chern data of the ideal sheaf of the subvariety in `P^N`, computed
/// exactly as the inverse of the structure-sheaf class. Requires
/// codimension at least 2.
pub fn chern_from_koszul(shape: &Subvariety, ambient: usize) -> Result<ChernData, CatalogError> {
    let unsupported = |reason: &str| CatalogError::UnsupportedShape {
        shape: format!("{shape:?}"),
        reason: reason.to_string(),
    };
    let structure = match shape {
        Subvariety::Points(m) => {
            if *m == 0 {
                return Err(unsupported("need at least one point"));
            }
            if ambient < 2 {
                return Err(unsupported("points have codimension >= 2 only for N >= 2"));
            }
            let degrees = vec![1u32; ambient];
            ci_structure_class(ambient, &degrees).pow(*m)
        }
        Subvariety::Line => {
            if ambient < 3 {
                return Err(unsupported("a line has codimension >= 2 only for N >= 3"));
            }
            let degrees = vec![1u32; ambient - 1];
            ci_structure_class(ambient, &degrees)
        }
        Subvariety::CompleteIntersection(d1, d2) => {
            if *d1 == 0 || *d2 == 0 {
                return Err(unsupported("degrees must be positive"));
            }
            if ambient < 2 {
                return Err(unsupported("codimension 2 needs N >= 2"));
            }
            ci_structure_class(ambient, &[*d1, *d2])
        }
    };
    let ideal = structure.inverse().expect("constant term 1");
    ChernData::from_series(&ideal, 1).map_err(|e| CatalogError::Validation {
        descriptor: format!("{shape:?}"),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{factorial, rat_big};
    use crate::riemann_roch::{euler_char, euler_char_poly};
    use crate::poly::binom_poly;
    use num_traits::{Signed, Zero};

    #[test]
    fn points_on_the_plane() {
        for m in 1..=6u32 {
            let data = chern_from_koszul(&Subvariety::Points(m), 2).unwrap();
            assert_eq!(data, ChernData::from_ints(2, 1, [0, m as i64]));
        }
    }

    #[test]
    fn line_in_p3() {
        let data = chern_from_koszul(&Subvariety::Line, 3).unwrap();
        assert_eq!(data, ChernData::from_ints(3, 1, [0, 1, 2]));
    }

    #[test]
    fn complete_intersection_r_1() {
        // (r, 1): degree-r curve in a hyperplane of P^3
        for r in 1..=5i64 {
            let data =
                chern_from_koszul(&Subvariety::CompleteIntersection(r as u32, 1), 3).unwrap();
            assert_eq!(
                data,
                ChernData::from_ints(3, 1, [0, r, r * (r + 1)]),
                "r={r}"
            );
        }
        // (1,1) is a line
        assert_eq!(
            chern_from_koszul(&Subvariety::CompleteIntersection(1, 1), 3).unwrap(),
            chern_from_koszul(&Subvariety::Line, 3).unwrap()
        );
    }

    #[test]
    fn point_class_magnitude_alternates() {
        // |c_N| = M (N-1)! with sign (-1)^N, pinned by chi(I_points) = 1 - M
        for ambient in 2..=4usize {
            for m in 1..=4u32 {
                let data = chern_from_koszul(&Subvariety::Points(m), ambient).unwrap();
                for i in 1..ambient {
                    assert!(data.class(i).is_zero(), "c_{i} nonzero for N={ambient}");
                }
                let sign = if ambient % 2 == 0 { 1 } else { -1 };
                let expected =
                    BigInt::from(sign * m as i64) * factorial(ambient as u32 - 1);
                assert_eq!(data.class(ambient), expected, "N={ambient} M={m}");
                assert_eq!(
                    euler_char(&data),
                    rat_big(BigInt::from(1 - m as i64)),
                    "chi(I) = 1 - M"
                );
            }
        }
    }

    #[test]
    fn ideal_characteristic_matches_point_count() {
        // chi(I_Y(t)) = chi(O(t)) - M as polynomials
        let data = chern_from_koszul(&Subvariety::Points(7), 3).unwrap();
        let expected = binom_poly(3).sub(&crate::poly::Polynomial::from_ints([7]));
        assert_eq!(euler_char_poly(&data), expected);
    }

    #[test]
    fn large_point_counts_and_ambients() {
        // exercises the binomial-series path for big Koszul multiplicities
        // and the binary-power path for big point counts
        let m = 1_000_000u32;
        let data = chern_from_koszul(&Subvariety::Points(m), 5).unwrap();
        for i in 1..5 {
            assert!(data.class(i).is_zero());
        }
        assert_eq!(data.class(5).abs(), BigInt::from(m) * factorial(4));
        assert_eq!(euler_char(&data), rat_big(BigInt::from(1i64 - m as i64)));
    }

    #[test]
    fn unsupported_shapes() {
        assert!(chern_from_koszul(&Subvariety::Line, 2).is_err());
        assert!(chern_from_koszul(&Subvariety::Points(0), 2).is_err());
        assert!(chern_from_koszul(&Subvariety::Points(1), 1).is_err());
        assert!(chern_from_koszul(&Subvariety::CompleteIntersection(0, 2), 3).is_err());
    }
}
