//! Euler characteristics on `P^N` via Chern character and Todd class.
//!
//! The chain is the standard one: Newton's identities turn the Chern classes
//! into power sums, the power sums give the Chern character, and the degree-N
//! coefficient of `ch(F) * td(P^N)` is the Euler characteristic. Everything
//! is exact; the Todd class is computed by series inversion rather than from
//! a table.


use crate::chern::{twist_symbolic, ChernData};
use crate::poly::Polynomial;
use crate::rational::{factorial, rat_big, rat_int, Rational};
use crate::series::TruncatedSeries;

/// The Chern character `ch(F)` as a truncated series in the hyperplane
/// class. The constant term is the rank; the degree-k coefficient is
/// `p_k / k!` with `p_k` the k-th Newton power sum of the Chern roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSeries {
    series: TruncatedSeries,
}

impl CharacterSeries {
    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn rank_term(&self) -> Rational {
        self.series.coeff(0)
    }
}

/// Newton power sums `p_1..p_N` of the Chern roots, from the recursion
/// `p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^(k-1) k c_k`, with the
/// classes supplied as polynomials (constants for numeric data, polynomials
/// in the twist for symbolic data).
fn power_sums(classes: &[Polynomial]) -> Vec<Polynomial> {
    let n = classes.len();
    let mut p: Vec<Polynomial> = Vec::with_capacity(n);
    for k in 1..=n {
        let c_k = &classes[k - 1];
        let mut acc = c_k.scale(&rat_int(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
        for j in 1..k {
            let term = classes[j - 1].mul(&p[k - j - 1]);
            acc = if j % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        p.push(acc);
    }
    p
}

fn constant_classes(data: &ChernData) -> Vec<Polynomial> {
    data.classes()
        .iter()
        .map(|c| Polynomial::constant(rat_big(c.clone())))
        .collect()
}

/// Chern character of the data, truncated at the ambient dimension.
pub fn chern_character(data: &ChernData) -> CharacterSeries {
    let n = data.ambient_dim();
    let p = power_sums(&constant_classes(data));
    let coeffs = std::iter::once(rat_int(data.rank())).chain((1..=n).map(|k| {
        p[k - 1].coeff(0) / rat_big(factorial(k as u32))
    }));
    CharacterSeries {
        series: TruncatedSeries::from_coeffs(n, coeffs),
    }
}

/// Todd class of `P^N`: `(t / (1 - e^(-t)))^(N+1)` truncated at degree N.
pub fn todd_class(ambient_dim: usize) -> TruncatedSeries {
    assert!(ambient_dim >= 1);
    // (1 - e^(-t)) / t = sum_{k>=0} (-1)^k t^k / (k+1)!
    let g = TruncatedSeries::from_coeffs(
        ambient_dim,
        (0..=ambient_dim).map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            rat_int(sign) / rat_big(factorial(k as u32 + 1))
        }),
    );
    g.inverse().expect("constant term 1").pow(ambient_dim as u32 + 1)
}

/// Euler characteristic `chi(F)`: the degree-N coefficient of
/// `ch(F) * td(P^N)`. Returns a rational because arbitrary integer tuples
/// need not be Chern classes of an actual sheaf; integrality holds for
/// genuine sheaf data.
pub fn euler_char(data: &ChernData) -> Rational {
    let n = data.ambient_dim();
    let product = chern_character(data)
        .series()
        .mul(&todd_class(n))
        .expect("equal caps");
    product.coeff(n)
}

/// `chi(F(t))` as an exact polynomial in the twist `t`, of degree N.
/// At every integer `l` it agrees with `euler_char(twist_numeric(data, l))`.
pub fn euler_char_poly(data: &ChernData) -> Polynomial {
    let n = data.ambient_dim();
    let twisted = twist_symbolic(data);
    let classes: Vec<Polynomial> = (1..=n)
        .map(|i| twisted.class_poly(i).expect("index in range").clone())
        .collect();
    let p = power_sums(&classes);
    let td = todd_class(n);
    let mut chi = Polynomial::constant(rat_int(data.rank()) * td.coeff(n));
    for k in 1..=n {
        let ch_k = p[k - 1].scale(&rat_big(factorial(k as u32)).recip());
        chi = chi.add(&ch_k.scale(&td.coeff(n - k)));
    }
    chi
}

/// The `N = 2` Euler characteristic in closed form:
/// `(c1^2 + 3 c1)/2 - c2 + n`.
pub fn euler_char_p2(rank: i64, c1: &num_bigint::BigInt, c2: &num_bigint::BigInt) -> Rational {
    let c1 = rat_big(c1.clone());
    let c2 = rat_big(c2.clone());
    (&c1 * &c1 + rat_int(3) * &c1) / rat_int(2) - c2 + rat_int(rank)
}
