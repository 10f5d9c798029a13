//! Chern data of coherent sheaves on `P^N`.
//!
//! Classes are stored as integers `c_1..c_N` (the ambient dimension caps the
//! list; `c_0` is implicitly 1). Rank and ambient dimension are independent:
//! both `rank > N` and `rank < N` are legal, and classes above the rank are
//! NOT zeroed — for sheaves that are not vector bundles they are genuinely
//! nonzero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::{binomial, rat_big, to_integer, Rational};
use crate::series::TruncatedSeries;
use crate::splitting::SplittingType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChernError {
    /// Binary operation on data over different projective spaces.
    AmbientMismatch { left: usize, right: usize },
    /// Quotient rank would be non-positive.
    RankUnderflow,
    /// Operation needs a bigger ambient space (restriction from P^1,
    /// discriminant on P^1).
    AmbientTooSmall { ambient: usize, needed: usize },
    /// Chern polynomial division produced a non-integer class.
    NonIntegralClass { index: usize },
    /// Index `s` outside the range required by the operation.
    IndexOutOfRange { s: usize },
}

impl fmt::Display for ChernError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChernError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            ChernError::RankUnderflow => write!(f, "quotient rank must be positive"),
            ChernError::AmbientTooSmall { ambient, needed } => {
                write!(f, "ambient dimension {ambient} too small (need >= {needed})")
            }
            ChernError::NonIntegralClass { index } => {
                write!(f, "non-integer Chern class at index {index}")
            }
            ChernError::IndexOutOfRange { s } => write!(f, "class index {s} out of range"),
        }
    }
}

impl std::error::Error for ChernError {}

/// Integer Chern classes of a rank-n sheaf on `P^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct ChernData {
    ambient_dim: usize,
    rank: i64,
    classes: Vec<BigInt>, // c_1..c_N, exactly ambient_dim entries
}

impl ChernData {
    /// Build from explicit classes; the class list is padded with zeros or
    /// truncated to exactly `ambient_dim` entries.
    pub fn new(ambient_dim: usize, rank: i64, classes: impl IntoIterator<Item = BigInt>) -> Self {
        assert!(ambient_dim >= 1, "ambient dimension must be at least 1");
        assert!(rank >= 1, "rank must be at least 1");
        let mut cs: Vec<BigInt> = classes.into_iter().take(ambient_dim).collect();
        cs.resize(ambient_dim, BigInt::zero());
        ChernData {
            ambient_dim,
            rank,
            classes: cs,
        }
    }

    pub fn from_ints(ambient_dim: usize, rank: i64, classes: impl IntoIterator<Item = i64>) -> Self {
        Self::new(ambient_dim, rank, classes.into_iter().map(BigInt::from))
    }

    /// Trivial rank-n sheaf (all classes zero).
    pub fn trivial(ambient_dim: usize, rank: i64) -> Self {
        Self::new(ambient_dim, rank, std::iter::empty())
    }

    /// Line bundle `O(a)`.
    pub fn line_bundle(ambient_dim: usize, a: i64) -> Self {
        Self::from_ints(ambient_dim, 1, [a])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    /// `c_i` for `1 <= i <= N`; `c_0 = 1`; zero above `N`.
    pub fn class(&self, i: usize) -> BigInt {
        if i == 0 {
            return BigInt::one();
        }
        self.classes.get(i - 1).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The stored classes `c_1..c_N`.
    pub fn classes(&self) -> &[BigInt] {
        &self.classes
    }

    pub fn c1(&self) -> BigInt {
        self.class(1)
    }

    pub fn c2(&self) -> BigInt {
        self.class(2)
    }

    /// Chern polynomial `1 + c_1 t + ... + c_N t^N` in `Z[t]/(t^(N+1))`.
    pub fn chern_series(&self) -> TruncatedSeries {
        let coeffs = std::iter::once(Rational::one())
            .chain(self.classes.iter().map(|c| rat_big(c.clone())));
        TruncatedSeries::from_coeffs(self.ambient_dim, coeffs)
    }

    /// Rebuild Chern data from a series with constant term 1 and integer
    /// coefficients.
    pub fn from_series(series: &TruncatedSeries, rank: i64) -> Result<Self, ChernError> {
        let mut classes = Vec::with_capacity(series.cap());
        for k in 1..=series.cap() {
            let c = series.coeff(k);
            let v = to_integer(&c).ok_or(ChernError::NonIntegralClass { index: k })?;
            classes.push(v);
        }
        Ok(Self::new(series.cap(), rank, classes))
    }
}

impl fmt::Debug for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ChernData(P^{}, rank {}, c = {:?})",
            self.ambient_dim, self.rank, self.classes
        )
    }
}

/// Chern classes of a twist `F(t)` with the twist left symbolic: one
/// polynomial in `t` per class index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedChern {
    base: ChernData,
    symbolic_classes: Vec<Polynomial>, // index i-1 holds c_i(F(t))
}

impl TwistedChern {
    pub fn base(&self) -> &ChernData {
        &self.base
    }

    /// `c_s(F(t))` as a polynomial in `t`, for `1 <= s <= N`.
    pub fn class_poly(&self, s: usize) -> Result<&Polynomial, ChernError> {
        if s == 0 || s > self.symbolic_classes.len() {
            return Err(ChernError::IndexOutOfRange { s });
        }
        Ok(&self.symbolic_classes[s - 1])
    }

    /// Evaluate every class at an integer twist.
    pub fn eval(&self, l: i64) -> ChernData {
        twist_numeric(&self.base, l)
    }
}

/// Whitney product: Chern data of an extension of `quot` by `sub`.
pub fn whitney(sub: &ChernData, quot: &ChernData) -> Result<ChernData, ChernError> {
    if sub.ambient_dim != quot.ambient_dim {
        return Err(ChernError::AmbientMismatch {
            left: sub.ambient_dim,
            right: quot.ambient_dim,
        });
    }
    let series = sub
        .chern_series()
        .mul(&quot.chern_series())
        .expect("equal caps");
    ChernData::from_series(&series, sub.rank + quot.rank)
}

/// Solve the Whitney formula for the quotient factor:
/// `whitney(sub, result) == total`.
pub fn whitney_quotient(total: &ChernData, sub: &ChernData) -> Result<ChernData, ChernError> {
    if total.ambient_dim != sub.ambient_dim {
        return Err(ChernError::AmbientMismatch {
            left: total.ambient_dim,
            right: sub.ambient_dim,
        });
    }
    if total.rank <= sub.rank {
        return Err(ChernError::RankUnderflow);
    }
    let series = total
        .chern_series()
        .mul(&sub.chern_series().inverse().expect("constant term 1"))
        .expect("equal caps");
    ChernData::from_series(&series, total.rank - sub.rank)
}

/// Chern data of the split bundle `O(b_1) + ... + O(b_n)` on `P^N`:
/// `c_l` is the l-th elementary symmetric polynomial of the entries,
/// truncated at `min(N, n)` and zero above the rank.
pub fn split_chern(b: &SplittingType, ambient_dim: usize) -> ChernData {
    let n = b.len();
    let top = ambient_dim.min(n);
    // elementary symmetric recurrence e_l <- e_l + b_k e_{l-1}
    let mut e = vec![BigInt::zero(); top + 1];
    e[0] = BigInt::one();
    for &bk in b.entries() {
        for l in (1..=top).rev() {
            let add = &e[l - 1] * BigInt::from(bk);
            e[l] += add;
        }
    }
    ChernData::new(ambient_dim, n as i64, e.into_iter().skip(1))
}

/// Coefficient of `c_{i-k} l^k` in the twist formula for `c_i(F(l))`:
/// the generalized binomial `C(n-i+k, k)`.
fn twist_coeff(rank: i64, i: usize, k: usize) -> BigInt {
    binomial(rank - i as i64 + k as i64, k as u32)
}

/// Chern classes of the twist `F(l)`:
/// `c_i(F(l)) = sum_k C(n-i+k, k) l^k c_{i-k}`.
pub fn twist_numeric(data: &ChernData, l: i64) -> ChernData {
    let big_l = BigInt::from(l);
    let classes = (1..=data.ambient_dim).map(|i| {
        let mut acc = BigInt::zero();
        let mut l_pow = BigInt::one();
        for k in 0..=i {
            let coeff = twist_coeff(data.rank, i, k);
            if !coeff.is_zero() {
                acc += coeff * &l_pow * data.class(i - k);
            }
            l_pow *= &big_l;
        }
        acc
    });
    ChernData::new(data.ambient_dim, data.rank, classes)
}

/// The twist formula with the twist left symbolic.
pub fn twist_symbolic(data: &ChernData) -> TwistedChern {
    let symbolic_classes = (1..=data.ambient_dim)
        .map(|i| {
            let coeffs = (0..=i)
                .map(|k| rat_big(twist_coeff(data.rank, i, k) * data.class(i - k)))
                .collect();
            Polynomial::from_coeffs(coeffs)
        })
        .collect();
    TwistedChern {
        base: data.clone(),
        symbolic_classes,
    }
}

/// Dual sheaf classes: `c_i -> (-1)^i c_i`.
pub fn dual(data: &ChernData) -> ChernData {
    let classes = data.classes.iter().enumerate().map(|(idx, c)| {
        if idx % 2 == 0 {
            // idx 0 is c_1
            -c.clone()
        } else {
            c.clone()
        }
    });
    ChernData::new(data.ambient_dim, data.rank, classes)
}

/// Restriction to a general hyperplane: ambient drops by one, classes
/// `c_1..c_(N-1)` are preserved, rank is unchanged.
pub fn restrict_hyperplane(data: &ChernData) -> Result<ChernData, ChernError> {
    if data.ambient_dim < 2 {
        return Err(ChernError::AmbientTooSmall {
            ambient: data.ambient_dim,
            needed: 2,
        });
    }
    Ok(ChernData::new(
        data.ambient_dim - 1,
        data.rank,
        data.classes[..data.ambient_dim - 1].iter().cloned(),
    ))
}

/// Discriminant `2n c_2 - (n-1) c_1^2`, invariant under twist and dual.
pub fn discriminant(data: &ChernData) -> Result<BigInt, ChernError> {
    if data.ambient_dim < 2 {
        return Err(ChernError::AmbientTooSmall {
            ambient: data.ambient_dim,
            needed: 2,
        });
    }
    let n = BigInt::from(data.rank);
    let c1 = data.c1();
    let c2 = data.c2();
    Ok(BigInt::from(2) * &n * c2 - (n - BigInt::one()) * &c1 * &c1)
}

/// `c_s(F(t))` for a class index above the rank (`n < s <= N`), as a
/// polynomial in the twist. Only classes `c_j` with `j > n` contribute, so
/// the degree is at most `s - n - 1`, with coefficient of `t^(s-n-1)` equal
/// to `(-1)^(s-n-1) c_(n+1)`.
pub fn high_chern_tail(data: &ChernData, s: usize) -> Result<Polynomial, ChernError> {
    if data.rank < 0 || (s as i64) <= data.rank || s > data.ambient_dim {
        return Err(ChernError::IndexOutOfRange { s });
    }
    let twisted = twist_symbolic(data);
    Ok(twisted.class_poly(s)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::SplittingType;
    use proptest::prelude::*;

    fn st(entries: &[i64]) -> SplittingType {
        SplittingType::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn whitney_null_correlation() {
        // O(-1) and the twisted ideal of two disjoint lines assemble to the
        // null-correlation bundle on P^3.
        let sub = ChernData::from_ints(3, 1, [-1, 0, 0]);
        let quot = ChernData::from_ints(3, 1, [1, 2, 2]);
        let f = whitney(&sub, &quot).unwrap();
        assert_eq!(f, ChernData::from_ints(3, 2, [0, 1, 0]));
    }

    #[test]
    fn whitney_with_trivial_factor() {
        let sub = ChernData::trivial(3, 1);
        let quot = ChernData::from_ints(3, 3, [1, 2, 2]);
        let f = whitney(&sub, &quot).unwrap();
        assert_eq!(f.rank(), 4);
        assert_eq!(f.classes(), quot.classes());

        let trivials = ChernData::trivial(3, 2);
        let ideal = ChernData::from_ints(3, 1, [0, 1, 2]);
        let f = whitney(&trivials, &ideal).unwrap();
        assert_eq!(f, ChernData::from_ints(3, 3, [0, 1, 2]));
    }

    #[test]
    fn whitney_ambient_mismatch() {
        let a = ChernData::trivial(2, 1);
        let b = ChernData::trivial(3, 1);
        assert!(matches!(
            whitney(&a, &b),
            Err(ChernError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn quotient_by_series_division() {
        let total = split_chern(&st(&[1, -1]), 2);
        assert_eq!(total, ChernData::from_ints(2, 2, [0, -1]));
        let sub = ChernData::line_bundle(2, 1);
        let quot = whitney_quotient(&total, &sub).unwrap();
        assert_eq!(quot, ChernData::from_ints(2, 1, [-1, 0]));
    }

    #[test]
    fn quotient_of_null_correlation() {
        let total = ChernData::from_ints(3, 2, [0, 1, 0]);
        let sub = ChernData::line_bundle(3, -1);
        let quot = whitney_quotient(&total, &sub).unwrap();
        assert_eq!(quot, ChernData::from_ints(3, 1, [1, 2, 2]));
    }

    #[test]
    fn quotient_rank_underflow() {
        let total = ChernData::trivial(2, 1);
        let sub = ChernData::trivial(2, 1);
        assert_eq!(whitney_quotient(&total, &sub), Err(ChernError::RankUnderflow));
    }

    #[test]
    fn quotient_by_trivial_drops_rank_only() {
        let total = ChernData::from_ints(3, 4, [1, -2, 3]);
        let sub = ChernData::trivial(3, 1);
        let quot = whitney_quotient(&total, &sub).unwrap();
        assert_eq!(quot.rank(), 3);
        assert_eq!(quot.classes(), total.classes());
    }

    #[test]
    fn split_twist_classes_are_elementary_symmetric_polynomials() {
        // symbolic identity: c_i(O(b)(t)) = e_i(b_1 + t, ..., b_n + t)
        for entries in [vec![0, 0, 0], vec![2, 1, -1], vec![3, -2], vec![1, 1, 0, -3]] {
            let b = SplittingType::new(entries).unwrap();
            let ambient = 4;
            let sym = twist_symbolic(&split_chern(&b, ambient));
            // e_i of the linear polynomials b_j + t by the usual recurrence
            let mut e: Vec<Polynomial> = vec![Polynomial::zero(); ambient + 1];
            e[0] = Polynomial::from_ints([1]);
            for &bj in b.entries() {
                let lin = Polynomial::from_ints([bj, 1]);
                for l in (1..=ambient).rev() {
                    e[l] = e[l].add(&e[l - 1].mul(&lin));
                }
            }
            for (i, expected) in e.iter().enumerate().skip(1) {
                assert_eq!(sym.class_poly(i).unwrap(), expected, "b={b:?} i={i}");
            }
        }
    }

    #[test]
    fn split_chern_values() {
        assert_eq!(split_chern(&st(&[0, 0, 0]), 3), ChernData::trivial(3, 3));
        assert_eq!(split_chern(&st(&[1, -1]), 2), ChernData::from_ints(2, 2, [0, -1]));
        assert_eq!(
            split_chern(&st(&[1, 1, 1]), 3),
            ChernData::from_ints(3, 3, [3, 3, 1])
        );
        // truncation at the ambient dimension
        assert_eq!(
            split_chern(&st(&[2, 1, 1]), 2),
            ChernData::from_ints(2, 3, [4, 5])
        );
    }

    #[test]
    fn twist_window_quadratic() {
        // rank 2, c = (0, 1 - b^2) with b = 2: c2(F(t)) = t^2 - 3.
        let data = ChernData::from_ints(3, 2, [0, -3, 0]);
        assert_eq!(twist_numeric(&data, 1).class(2), BigInt::from(-2));
        let sym = twist_symbolic(&data);
        assert_eq!(
            sym.class_poly(2).unwrap(),
            &Polynomial::from_ints([-3, 0, 1])
        );
        for t in -4..=4 {
            let neg = sym.class_poly(2).unwrap().eval_int(t) <= crate::rational::zero();
            assert_eq!(neg, (-1..=1).contains(&t), "t={t}");
        }
    }

    #[test]
    fn twist_zero_is_identity() {
        let data = ChernData::from_ints(3, 2, [5, -7, 11]);
        assert_eq!(twist_numeric(&data, 0), data);
    }

    #[test]
    fn twist_rank_one_ideal_of_two_lines() {
        let data = ChernData::from_ints(3, 1, [0, 2, 4]);
        assert_eq!(twist_numeric(&data, 1), ChernData::from_ints(3, 1, [1, 2, 2]));
    }

    #[test]
    fn twist_symbolic_consistency_at_zero() {
        let data = ChernData::from_ints(3, 2, [0, 1, 0]);
        let sym = twist_symbolic(&data);
        assert_eq!(sym.eval(0), data);
        assert_eq!(
            sym.class_poly(2).unwrap(),
            &Polynomial::from_ints([1, 0, 1])
        );
        // rank-2 data has no cubic class contribution
        assert_eq!(sym.class_poly(3).unwrap(), &Polynomial::zero());
    }

    #[test]
    fn twist_symbolic_split_cube() {
        let data = split_chern(&st(&[0, 0, 0]), 3);
        let sym = twist_symbolic(&data);
        assert_eq!(
            sym.class_poly(3).unwrap(),
            &Polynomial::from_ints([0, 0, 0, 1])
        );
    }

    #[test]
    fn dual_signs() {
        let d = ChernData::from_ints(3, 2, [0, 1, 0]);
        assert_eq!(dual(&d), d);
        let d = ChernData::from_ints(3, 3, [2, 3, 4]);
        assert_eq!(dual(&d), ChernData::from_ints(3, 3, [-2, 3, -4]));
    }

    #[test]
    fn restriction_drops_top_class() {
        let d = ChernData::from_ints(3, 2, [0, 1, 0]);
        assert_eq!(restrict_hyperplane(&d).unwrap(), ChernData::from_ints(2, 2, [0, 1]));
        let p1 = ChernData::line_bundle(1, 3);
        assert!(matches!(
            restrict_hyperplane(&p1),
            Err(ChernError::AmbientTooSmall { .. })
        ));
    }

    #[test]
    fn discriminant_values() {
        let nc = ChernData::from_ints(3, 2, [0, 1, 0]);
        assert_eq!(discriminant(&nc).unwrap(), BigInt::from(4));
        for a in -3..=3 {
            let split = split_chern(&st(&[a, a]), 2);
            assert_eq!(discriminant(&split).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn high_tail_examples() {
        // ideal sheaf of M points on P^2: constant tail of degree 0
        let m = 7;
        let d = ChernData::from_ints(2, 1, [0, m]);
        let tail = high_chern_tail(&d, 2).unwrap();
        assert_eq!(tail, Polynomial::from_ints([m]));
        assert_eq!(tail.degree(), Some(0));

        // rank 1 on P^3 with c = (0, 0, 12): s = 3 gives the constant 12
        let d = ChernData::from_ints(3, 1, [0, 0, 12]);
        assert_eq!(high_chern_tail(&d, 3).unwrap(), Polynomial::from_ints([12]));

        // all classes above the rank zero: every tail is zero
        let d = ChernData::from_ints(3, 2, [1, 2, 0]);
        assert!(high_chern_tail(&d, 3).unwrap().is_zero());

        // range errors
        assert!(high_chern_tail(&d, 2).is_err());
        assert!(high_chern_tail(&d, 4).is_err());
    }

    #[test]
    fn high_tail_leading_coefficient() {
        // rank 1 on P^4, nonzero c_2: tails have degree s-2 with leading
        // coefficient (-1)^(s-2) c_2.
        let d = ChernData::from_ints(4, 1, [3, 5, 7, 11]);
        for s in 2..=4usize {
            let tail = high_chern_tail(&d, s).unwrap();
            assert_eq!(tail.degree(), Some(s - 2));
            let expected = if (s - 2) % 2 == 0 { 5 } else { -5 };
            assert_eq!(tail.leading().unwrap(), &crate::rational::rat_int(expected));
        }
    }

    fn arb_chern(ambient: usize) -> impl Strategy<Value = ChernData> {
        (
            1i64..5,
            proptest::collection::vec(-6i64..7, ambient),
        )
            .prop_map(move |(rank, cs)| ChernData::from_ints(ambient, rank, cs))
    }

    proptest! {
        #[test]
        fn whitney_quotient_round_trip(sub in arb_chern(4), quot in arb_chern(4)) {
            let total = whitney(&sub, &quot).unwrap();
            let back = whitney_quotient(&total, &sub).unwrap();
            prop_assert_eq!(back, quot);
        }

        #[test]
        fn split_matches_series_product(entries in proptest::collection::vec(-5i64..6, 1..6), ambient in 1usize..6) {
            let mut sorted = entries.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let b = SplittingType::new(sorted).unwrap();
            // independent oracle: product of (1 + b_i t) in the truncated ring
            let mut series = TruncatedSeries::one(ambient);
            for &e in b.entries() {
                series = series.mul(&TruncatedSeries::one_plus_ct(ambient, &BigInt::from(e))).unwrap();
            }
            let expected = ChernData::from_series(&series, b.len() as i64).unwrap();
            prop_assert_eq!(split_chern(&b, ambient), expected);
        }

        #[test]
        fn twist_composes(data in arb_chern(4), l in -6i64..7, m in -6i64..7) {
            let two_step = twist_numeric(&twist_numeric(&data, l), m);
            prop_assert_eq!(two_step, twist_numeric(&data, l + m));
        }

        #[test]
        fn symbolic_matches_numeric(data in arb_chern(4), l in -10i64..11) {
            prop_assert_eq!(twist_symbolic(&data).eval(l), twist_numeric(&data, l));
        }

        #[test]
        fn dual_involution(data in arb_chern(4)) {
            prop_assert_eq!(dual(&dual(&data)), data);
        }

        #[test]
        fn discriminant_invariance(data in arb_chern(4), l in -8i64..9) {
            let delta = discriminant(&data).unwrap();
            prop_assert_eq!(discriminant(&dual(&data)).unwrap(), delta.clone());
            prop_assert_eq!(discriminant(&twist_numeric(&data, l)).unwrap(), delta);
        }

        #[test]
        fn restriction_commutes_with_split(entries in proptest::collection::vec(-4i64..5, 1..5)) {
            let mut sorted = entries.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let b = SplittingType::new(sorted).unwrap();
            let on_p4 = split_chern(&b, 4);
            prop_assert_eq!(restrict_hyperplane(&on_p4).unwrap(), split_chern(&b, 3));
        }

        #[test]
        fn split_twist_is_shifted_elementary_symmetric(entries in proptest::collection::vec(-4i64..5, 1..5), l in -5i64..6) {
            let mut sorted = entries.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let b = SplittingType::new(sorted).unwrap();
            let shifted = SplittingType::new(b.entries().iter().map(|e| e + l).collect()).unwrap();
            let twisted = twist_numeric(&split_chern(&b, 4), l);
            prop_assert_eq!(twisted, split_chern(&shifted, 4));
        }
    }
}
