//! Recursive polynomial-type bounds for cohomology dimensions, the vanishing
//! threshold, Castelnuovo-Mumford regularity and higher Chern classes.
//!
//! The recursion works on the invariants `(rank, c2, b)` of a reflexive
//! sheaf; `c1` is the sum of the splitting type. In the plane the dimension
//! count closes up through the Euler characteristic; in higher dimension the
//! restriction sequence telescopes twisted bounds from the hyperplane down
//! to the sheaf itself:
//!
//! * `N = 2`: `P^0`, `P^2` are the split-bundle section counts,
//!   `P^1 = max(0, P^0 + P^2 - chi)`, and the vanishing threshold collects
//!   the positive-side bound `-b_n + P^1`, the dual-side bound
//!   `3 + b_1 + P^1(dual)`, and the trivial `h^0`/`h^2` cutoffs.
//! * `N >= 3`: with `Q'` the threshold one dimension down,
//!   `P^i = sum_{k=0..Q'} P^(i-1)(twist by k+1)` for middle indices,
//!   `P^1 = sum_{k=0..Q'} P^1(twist by -k)`, and `Q = Q' + P^1`.
//!
//! The Chern-class bounds `C_s` restrict to `P^s`, where the characteristic
//! is affine in `c_s` with coefficient `(-1)^(s-1)/(s-1)!`; the remaining
//! terms are bounded by running Newton's identities in absolute value with
//! every class replaced by its bound. Values grow super-exponentially in the
//! ambient dimension, hence arbitrary-precision integers throughout.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::{binomial, ceil_to_int, factorial, rat_big, rat_int, Rational};
use crate::riemann_roch::todd_class;
use crate::splitting::SplittingType;

use super::{h0_upper, hn_upper, BoundsError};

/// Enumeration guard for the vanishing threshold: recursion over twists up
/// to `Q'` is linear in `Q'`, so absurdly large inputs are rejected instead
/// of looping for hours.
const MAX_THRESHOLD: i64 = 200_000;

/// The computed bounds: `P^i` per cohomology index, the vanishing threshold
/// `Q`, and `C_s` for `3 <= s <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyBounds {
    ambient_dim: usize,
    rank: i64,
    per_index: Vec<BigInt>,
    vanishing_threshold: BigInt,
    chern_bounds: Vec<BigInt>,
}

impl CohomologyBounds {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    /// `P^i` for `0 <= i <= N`.
    pub fn per_index(&self) -> &[BigInt] {
        &self.per_index
    }

    pub fn p(&self, i: usize) -> &BigInt {
        &self.per_index[i]
    }

    /// The threshold `Q`: `h^i F(k) = h^1 F(-k) = h^0 F(-k) = 0` for all
    /// `k >= Q` and `1 <= i <= N`.
    pub fn vanishing_threshold(&self) -> &BigInt {
        &self.vanishing_threshold
    }

    /// `C_s` for `3 <= s <= N`.
    pub fn chern_bound(&self, s: usize) -> Option<&BigInt> {
        if s < 3 || s > self.ambient_dim {
            return None;
        }
        self.chern_bounds.get(s - 3)
    }

    pub fn chern_bounds(&self) -> &[BigInt] {
        &self.chern_bounds
    }
}

/// Regularity consequences of the threshold: the Castelnuovo-Mumford
/// regularity is below `Q`, and `F(k)` is generated by global sections for
/// `k >= Q + N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityBound {
    pub regularity: BigInt,
    pub global_generation: BigInt,
}

pub fn regularity_bound(bounds: &CohomologyBounds) -> RegularityBound {
    let q = bounds.vanishing_threshold.clone();
    RegularityBound {
        global_generation: &q + BigInt::from(bounds.ambient_dim as i64),
        regularity: q,
    }
}

#[derive(Debug)]
struct Pq {
    p: Vec<BigInt>, // P^0..P^N
    q: i64,
}

type Memo = HashMap<(usize, Vec<i64>, BigInt), Rc<Pq>>;

/// Integer Euler characteristic on the plane: `(c1^2 + 3 c1)/2 - c2 + n`.
fn chi_p2(rank: i64, c1: i64, c2: &BigInt) -> BigInt {
    let c1 = BigInt::from(c1);
    (&c1 * &c1 + BigInt::from(3) * &c1) / BigInt::from(2) - c2 + BigInt::from(rank)
}

/// Invariants of the twist by `l`: the splitting type shifts entrywise and
/// `c2` follows the twist formula.
fn twist_invariants(c2: &BigInt, b: &SplittingType, l: i64) -> (BigInt, SplittingType) {
    let n = b.len() as i64;
    let c1 = BigInt::from(b.sum());
    let l_big = BigInt::from(l);
    let c2t = c2 + BigInt::from(n - 1) * &l_big * c1 + binomial(n, 2) * &l_big * &l_big;
    (c2t, b.shift(l))
}

fn clamp_nonneg(v: BigInt) -> BigInt {
    if v.is_negative() {
        BigInt::zero()
    } else {
        v
    }
}

fn to_threshold(v: BigInt) -> Result<i64, BoundsError> {
    match v.to_i64() {
        Some(q) if q <= MAX_THRESHOLD => Ok(q.max(1)),
        _ => Err(BoundsError::ThresholdTooLarge),
    }
}

/// `P^1` on the plane: `max(0, P^0 + P^2 - chi)`, which is twist-invariant
/// (it equals `max(0, c2 - sum b_i b_j)`).
fn p1_plane(c2: &BigInt, b: &SplittingType) -> BigInt {
    let rank = b.len() as i64;
    let chi = chi_p2(rank, b.sum(), c2);
    clamp_nonneg(h0_upper(b, 2) + hn_upper(b, 2) - chi)
}

fn pq(ambient: usize, c2: &BigInt, b: &SplittingType, memo: &mut Memo) -> Result<Rc<Pq>, BoundsError> {
    let key = (ambient, b.entries().to_vec(), c2.clone());
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let result = if ambient == 2 {
        let p0 = h0_upper(b, 2);
        let p2 = hn_upper(b, 2);
        let p1 = p1_plane(c2, b);
        // dual-side data: entries reversed and negated, c1 negated, c2 kept
        let p1_dual = p1_plane(c2, &b.negate());
        let q_candidates = [
            BigInt::from(-b.last()) + &p1,
            BigInt::from(3 + b.first()) + &p1_dual,
            BigInt::from(b.first() + 1),
            BigInt::from(-b.last() - 2),
            BigInt::from(1),
        ];
        let q = to_threshold(q_candidates.into_iter().max().expect("non-empty"))?;
        Pq {
            p: vec![p0, p1, p2],
            q,
        }
    } else {
        let prev = pq(ambient - 1, c2, b, memo)?;
        let q_prev = prev.q;
        let mut p = vec![BigInt::zero(); ambient + 1];
        p[0] = h0_upper(b, ambient);
        p[ambient] = hn_upper(b, ambient);
        for k in 0..=q_prev {
            let (c2_up, b_up) = twist_invariants(c2, b, k + 1);
            let up = pq(ambient - 1, &c2_up, &b_up, memo)?;
            for (slot, hyperplane_bound) in p[2..ambient].iter_mut().zip(&up.p[1..]) {
                *slot += hyperplane_bound;
            }
            let (c2_down, b_down) = twist_invariants(c2, b, -k);
            let down = pq(ambient - 1, &c2_down, &b_down, memo)?;
            p[1] += &down.p[1];
        }
        let q = to_threshold(BigInt::from(q_prev) + &p[1])?;
        Pq { p, q }
    };
    let rc = Rc::new(result);
    memo.insert(key, rc.clone());
    Ok(rc)
}

/// Bound on the classes-only part of the characteristic on `P^s` (the
/// characteristic with the linear `c_s` contribution removed), by running
/// Newton's identities in absolute value with `|c_j| <= caps[j-1]`.
fn rr_remainder_bound(rank: i64, s: usize, caps: &[Rational]) -> Rational {
    // pbar[k-1] >= |p_k| for k = 1..s-1
    let mut pbar: Vec<Rational> = Vec::with_capacity(s - 1);
    for k in 1..s {
        let mut acc = caps[k - 1].clone() * rat_int(k as i64);
        for j in 1..k {
            acc += caps[j - 1].clone() * pbar[k - j - 1].clone();
        }
        pbar.push(acc);
    }
    // |p_s| with the s*c_s term dropped
    let mut ps_zeroed = Rational::zero();
    for j in 1..s {
        ps_zeroed += caps[j - 1].clone() * pbar[s - j - 1].clone();
    }
    let td = todd_class(s);
    let mut total = rat_int(rank) * td.coeff(s).abs();
    for k in 1..s {
        total += pbar[k - 1].clone() / rat_big(factorial(k as u32)) * td.coeff(s - k).abs();
    }
    total + ps_zeroed / rat_big(factorial(s as u32))
}

/// Compute the full bound set for reflexive data with the given invariants.
/// `rank` must equal the sequence length and `c1` its sum; the redundancy is
/// checked so that partial invariant sets converted upstream cannot drift.
pub fn cohomology_bounds(
    rank: i64,
    ambient: usize,
    c1: i64,
    c2: &BigInt,
    b: &SplittingType,
) -> Result<CohomologyBounds, BoundsError> {
    if ambient < 2 {
        return Err(BoundsError::AmbientTooSmall { ambient, needed: 2 });
    }
    if rank != b.len() as i64 {
        return Err(BoundsError::RankMismatch { rank, len: b.len() });
    }
    if c1 != b.sum() {
        return Err(BoundsError::SplittingMismatch);
    }
    let mut memo = Memo::new();
    let main = pq(ambient, c2, b, &mut memo)?;

    let mut chern_bounds = Vec::new();
    let mut caps: Vec<Rational> = vec![rat_int(c1.abs()), rat_big(c2.abs())];
    for s in 3..=ambient {
        let at_s = pq(s, c2, b, &mut memo)?;
        let chi_bound: BigInt = at_s.p.iter().sum();
        let remainder = rr_remainder_bound(rank, s, &caps);
        let c_s = ceil_to_int(
            &(rat_big(factorial(s as u32 - 1)) * (rat_big(chi_bound) + remainder)),
        );
        caps.push(rat_big(c_s.clone()));
        chern_bounds.push(c_s);
    }

    Ok(CohomologyBounds {
        ambient_dim: ambient,
        rank,
        per_index: main.p.clone(),
        vanishing_threshold: BigInt::from(main.q),
        chern_bounds,
    })
}
