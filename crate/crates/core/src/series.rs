//! Truncated power series over the rationals.
//!
//! A [`TruncatedSeries`] lives in `Q[t]/(t^(cap+1))`: every operation discards
//! degrees above the cap. The cap is carried on the value, not in global
//! state, so computations that mix ambient dimensions (e.g. restricting from
//! `P^N` to `P^(N-1)`) stay explicit.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{rat_big, Rational};

/// Arithmetic errors for series operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Binary operation on series with different caps.
    CapMismatch { left: usize, right: usize },
    /// Inversion of a series with zero constant term.
    NonInvertible,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::CapMismatch { left, right } => {
                write!(f, "series cap mismatch: {left} vs {right}")
            }
            SeriesError::NonInvertible => {
                write!(f, "series with zero constant term has no inverse")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Power series truncated at degree `cap` (inclusive), with exact rational
/// coefficients. Two series are equal iff caps and all coefficients agree.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: usize,
    coeffs: Vec<Rational>, // length cap + 1
}

impl TruncatedSeries {
    /// The zero series with the given cap.
    pub fn zero(cap: usize) -> Self {
        TruncatedSeries {
            cap,
            coeffs: vec![Rational::zero(); cap + 1],
        }
    }

    /// The constant-one series with the given cap.
    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Series from coefficients by ascending degree; extra coefficients above
    /// the cap are discarded, missing ones are zero.
    pub fn from_coeffs(cap: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(cap);
        for (k, c) in coeffs.into_iter().enumerate() {
            if k > cap {
                break;
            }
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with integer coefficients.
    pub fn from_ints(cap: usize, coeffs: impl IntoIterator<Item = i64>) -> Self {
        Self::from_coeffs(cap, coeffs.into_iter().map(crate::rational::rat_int))
    }

    /// `1 + c*t` with the given cap.
    pub fn one_plus_ct(cap: usize, c: &BigInt) -> Self {
        let mut s = Self::one(cap);
        if cap >= 1 {
            s.coeffs[1] = rat_big(c.clone());
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient of `t^k`; zero above the cap.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Sum; caps must agree.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries {
            cap: self.cap,
            coeffs,
        })
    }

    /// Cauchy product truncated at the cap; caps must agree.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let mut coeffs = vec![Rational::zero(); self.cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.cap {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries {
            cap: self.cap,
            coeffs,
        })
    }

    /// Multiplicative inverse mod `t^(cap+1)`. Requires a nonzero constant
    /// term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let lead_inv = self.coeffs[0].recip();
        let mut inv = vec![Rational::zero(); self.cap + 1];
        inv[0] = lead_inv.clone();
        for k in 1..=self.cap {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc * &lead_inv;
        }
        Ok(TruncatedSeries {
            cap: self.cap,
            coeffs: inv,
        })
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.cap);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("equal caps");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("equal caps");
            }
        }
        acc
    }

    /// Scale every coefficient.
    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Re-truncate to a lower cap.
    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap, "truncate can only lower the cap");
        TruncatedSeries {
            cap,
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }

    fn check_cap(&self, other: &Self) -> Result<(), SeriesError> {
        if self.cap != other.cap {
            return Err(SeriesError::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod t^{})", self.cap + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
