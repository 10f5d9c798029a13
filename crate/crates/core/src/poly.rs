//! Univariate polynomials over the rationals, plus the dimension counts for
//! line bundles on projective space.
//!
//! Two readings of "binomial" coexist on purpose and must not be merged:
//! [`h0_line_bundle`] is a section count (zero for negative twists), while
//! [`binom_poly`] is the signed Euler-characteristic polynomial
//! `(t+1)(t+2)...(t+r)/r!`. Conflating them is the classic sign bug.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{binomial, factorial, rat_big, rat_int, to_integer, Rational};

/// Polynomial with exact rational coefficients, indexed by degree.
/// The coefficient vector carries no trailing zeros; the zero polynomial has
/// an empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `t` itself.
    pub fn variable() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: impl IntoIterator<Item = i64>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(rat_int).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&rat_int(t))
    }

    /// Evaluation at an integer point, requiring an integer value.
    pub fn eval_int_exact(&self, t: i64) -> Option<BigInt> {
        to_integer(&self.eval_int(t))
    }

    /// Substitute `t -> t + a` (Horner on the shifted variable).
    pub fn shift_variable(&self, a: i64) -> Self {
        let lin = Polynomial::from_ints([a, 1]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of degree-`a` forms on `P^r`: `C(a+r, r)` for `a >= 0`, zero for
/// negative `a`. This is `h^0(O_{P^r}(a))`, a count, never negative.
pub fn h0_line_bundle(a: i64, r: u32) -> BigInt {
    if a < 0 {
        return BigInt::zero();
    }
    binomial(a + r as i64, r)
}

/// The degree-`r` polynomial `(t+1)(t+2)...(t+r)/r!`, i.e. the Euler
/// characteristic of `O_{P^r}(t)` as a polynomial in the twist. At integers
/// `t >= 0` it agrees with [`h0_line_bundle`]; at `t` in `[-r, -1]` it
/// vanishes; below that it is signed.
pub fn binom_poly(r: u32) -> Polynomial {
    let mut p = Polynomial::constant(Rational::one());
    for i in 1..=r as i64 {
        p = p.mul(&Polynomial::from_ints([i, 1]));
    }
    p.scale(&rat_big(factorial(r)).recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn h0_counts() {
        assert_eq!(h0_line_bundle(2, 2), BigInt::from(6));
        assert_eq!(h0_line_bundle(-1, 5), BigInt::from(0));
        assert_eq!(h0_line_bundle(3, 1), BigInt::from(4));
        assert_eq!(h0_line_bundle(0, 7), BigInt::from(1));
    }

    #[test]
    fn binom_poly_small() {
        assert_eq!(binom_poly(0), Polynomial::from_ints([1]));
        // (t+1)(t+2)/2 = (t^2 + 3t + 2)/2
        assert_eq!(
            binom_poly(2),
            Polynomial::from_coeffs(vec![rat(1, 1), rat(3, 2), rat(1, 2)])
        );
        assert_eq!(binom_poly(3).eval_int(0), rat_int(1));
    }

    #[test]
    fn binom_poly_matches_section_count() {
        for r in 0..=6u32 {
            let p = binom_poly(r);
            for t in -(r as i64)..=20 {
                let v = p.eval_int(t);
                if t >= 0 {
                    assert_eq!(v, rat_big(h0_line_bundle(t, r)), "r={r} t={t}");
                } else {
                    assert!(v.is_zero(), "r={r} t={t}");
                }
            }
        }
    }

    #[test]
    fn shift_variable_is_substitution() {
        let p = binom_poly(3);
        let q = p.shift_variable(4);
        for t in -10..=10 {
            assert_eq!(q.eval_int(t), p.eval_int(t + 4));
        }
    }

    #[test]
    fn degree_and_leading() {
        let p = Polynomial::from_ints([2, 0, 5]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading(), Some(&rat_int(5)));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_ints([0, 0]).degree(), None);
    }
}
