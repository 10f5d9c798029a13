//! Evaluators for the section-count, second-Chern-class, discriminant and
//! higher-class inequalities, plus verdict-carrying reports.
//!
//! Every evaluator returns exact integers (or polynomials); nothing here is
//! approximate. The recursive cohomology/regularity/Chern bounds live in
//! the `pqc` submodule and are re-exported here.

mod pqc;

pub use pqc::{cohomology_bounds, regularity_bound, CohomologyBounds, RegularityBound};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chern::{split_chern, twist_symbolic, ChernData};
use crate::poly::{h0_line_bundle, Polynomial};
use crate::rational::{rat, rat_int, Rational};
use crate::splitting::{GstMatrix, SplitError, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    /// A gst row required by the evaluator is absent or malformed.
    Gst(SplitError),
    /// A stated precondition does not hold for the inputs.
    Precondition(String),
    /// The set of twists with non-positive c2 is infinite (rank-1 data with
    /// non-positive c2).
    WindowUnbounded,
    /// Class index outside `3 <= s <= min(n, N)`.
    SOutOfRange { s: usize },
    /// Sequence length does not match the rank of the Chern data.
    RankMismatch { rank: i64, len: usize },
    /// Sequence sum does not match the first Chern class.
    SplittingMismatch,
    /// Ambient dimension below the minimum for the bound.
    AmbientTooSmall { ambient: usize, needed: usize },
    /// A twist-enumeration threshold grew past the internal guard.
    ThresholdTooLarge,
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::Gst(e) => write!(f, "{e}"),
            BoundsError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            BoundsError::WindowUnbounded => {
                write!(f, "every twist has non-positive c2; the window is infinite")
            }
            BoundsError::SOutOfRange { s } => write!(f, "class index {s} out of range"),
            BoundsError::RankMismatch { rank, len } => {
                write!(f, "sequence length {len} does not match rank {rank}")
            }
            BoundsError::SplittingMismatch => {
                write!(f, "sequence does not sum to the first Chern class")
            }
            BoundsError::AmbientTooSmall { ambient, needed } => {
                write!(f, "ambient dimension {ambient} too small (need >= {needed})")
            }
            BoundsError::ThresholdTooLarge => {
                write!(f, "vanishing threshold exceeds the enumeration guard")
            }
        }
    }
}

impl std::error::Error for BoundsError {}

impl From<SplitError> for BoundsError {
    fn from(e: SplitError) -> Self {
        BoundsError::Gst(e)
    }
}

/// An evaluated bound together with the value it bounds, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Int(BigInt),
    Poly(Polynomial),
    Size(usize),
}

impl BoundValue {
    pub fn int(v: impl Into<BigInt>) -> Self {
        BoundValue::Int(v.into())
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Int(v) => write!(f, "{v}"),
            BoundValue::Poly(p) => write!(f, "{p}"),
            BoundValue::Size(s) => write!(f, "{s}"),
        }
    }
}

/// Outcome of comparing a bound with an oracle value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The oracle satisfies the bound strictly.
    Satisfied,
    /// The oracle meets the bound exactly (the bound is sharp here).
    Equality,
    /// The oracle contradicts the bound.
    Violated,
    /// No oracle value was available.
    NoOracle,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
            Verdict::NoOracle => "no-oracle",
        }
    }
}

/// One evaluated bound: its name, value, optional oracle and verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: String,
    pub bound: BoundValue,
    pub oracle: Option<BoundValue>,
    pub verdict: Verdict,
    pub detail: String,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, bound: BoundValue) -> Self {
        BoundReport {
            name: name.into(),
            bound,
            oracle: None,
            verdict: Verdict::NoOracle,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Attach an oracle that must be at most the bound.
    pub fn oracle_le(mut self, oracle: BigInt, bound: &BigInt) -> Self {
        self.verdict = if &oracle == bound {
            Verdict::Equality
        } else if &oracle < bound {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        };
        self.oracle = Some(BoundValue::Int(oracle));
        self
    }

    /// Attach an oracle that must be at least the bound.
    pub fn oracle_ge(mut self, oracle: BigInt, bound: &BigInt) -> Self {
        self.verdict = if &oracle == bound {
            Verdict::Equality
        } else if &oracle > bound {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        };
        self.oracle = Some(BoundValue::Int(oracle));
        self
    }
}

/// `h^0` of the split bundle: the sum of the section counts of the summands.
/// Bounds `h^0 F` for every torsion-free `F` with splitting type `b`.
pub fn h0_upper(b: &SplittingType, ambient: usize) -> BigInt {
    b.entries()
        .iter()
        .map(|&bi| h0_line_bundle(bi, ambient as u32))
        .sum()
}

/// Upper bound for the top cohomology: `h^0 O(-b - N - 1)` summed over the
/// summands.
pub fn hn_upper(b: &SplittingType, ambient: usize) -> BigInt {
    b.entries()
        .iter()
        .map(|&bi| h0_line_bundle(-bi - ambient as i64 - 1, ambient as u32))
        .sum()
}

/// Which projective space carries the first sum of the section-deficit
/// bound. The telescoping induction produces `P^(j-1)`; the displayed
/// inequality reads `P^N`. The two agree whenever the referenced entries are
/// 0 or -1, which covers every sharp example.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrossaReading {
    Telescoped,
    Literal,
}

fn grossa(matrix: &GstMatrix, reading: GrossaReading) -> Result<BigInt, BoundsError> {
    let ambient = matrix.ambient_dim();
    let width = matrix
        .width()
        .ok_or(BoundsError::Gst(SplitError::MissingRow { row: 1 }))?;
    for j in 1..=ambient {
        matrix.require_row(j)?;
    }
    let mut total = BigInt::zero();
    for i in 1..=width {
        for j in 2..=ambient {
            let a_ji = matrix.entry(j, i)?;
            let a_prev = matrix.entry(j - 1, i)?;
            if a_ji < 0 {
                let r = match reading {
                    GrossaReading::Telescoped => (j - 1) as u32,
                    GrossaReading::Literal => ambient as u32,
                };
                total += h0_line_bundle(a_prev, r);
            } else {
                for k in j..=ambient {
                    total += h0_line_bundle(a_ji, (ambient - k) as u32)
                        * h0_line_bundle(a_prev - a_ji - 1, k as u32);
                }
            }
        }
    }
    Ok(total)
}

/// Lower bound for the section deficit `h^0 O(b) - h^0 F` from the full gst
/// table (telescoped reading of the first sum).
pub fn grossa_rhs(matrix: &GstMatrix) -> Result<BigInt, BoundsError> {
    grossa(matrix, GrossaReading::Telescoped)
}

/// Same bound with the first sum counted on `P^N` as displayed.
pub fn grossa_rhs_literal(matrix: &GstMatrix) -> Result<BigInt, BoundsError> {
    grossa(matrix, GrossaReading::Literal)
}

/// Twisted section-deficit bound: lower bound for
/// `h^0 O(b + t) - h^0 F(t)` when every gst entry plus `t` is non-negative.
pub fn rigrossa_rhs(matrix: &GstMatrix, t: i64) -> Result<BigInt, BoundsError> {
    let ambient = matrix.ambient_dim();
    for j in 1..=ambient {
        let row = matrix.require_row(j)?;
        if row.last() + t < 0 {
            return Err(BoundsError::Precondition(format!(
                "gst entry {} + twist {} is negative in row {}",
                row.last(),
                t,
                j
            )));
        }
    }
    let width = matrix.width().expect("rows present");
    let mut total = BigInt::zero();
    for i in 1..=width {
        for j in 2..=ambient {
            let a_ji = matrix.entry(j, i)?;
            let a_prev = matrix.entry(j - 1, i)?;
            for k in j..=ambient {
                total += h0_line_bundle(a_ji + t, (ambient - k) as u32)
                    * h0_line_bundle(a_prev - a_ji - 1, k as u32);
            }
        }
    }
    Ok(total)
}

fn check_dominated(b: &SplittingType, a: &SplittingType) -> Result<(), BoundsError> {
    if a.len() != b.len() {
        return Err(BoundsError::Gst(SplitError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        }));
    }
    if !crate::splitting::leq(a, b)? {
        return Err(BoundsError::Precondition(
            "gst row must be componentwise at most the splitting type".into(),
        ));
    }
    Ok(())
}

/// Section-count upper bound from the plane gst row:
/// `h^0 O(b) - sum_i h^0_{P^(N-2)}(a_i) h^0_{P^2}(b_i - a_i - 1)`.
/// Requires non-negative plane entries (full rank by global sections).
pub fn menogrande2_rhs(
    b: &SplittingType,
    a_plane: &SplittingType,
    ambient: usize,
) -> Result<BigInt, BoundsError> {
    if ambient < 2 {
        return Err(BoundsError::AmbientTooSmall { ambient, needed: 2 });
    }
    check_dominated(b, a_plane)?;
    if a_plane.last() < 0 {
        return Err(BoundsError::Precondition(
            "plane gst entries must be non-negative".into(),
        ));
    }
    let mut deficit = BigInt::zero();
    for (&bi, &ai) in b.entries().iter().zip(a_plane.entries()) {
        deficit += h0_line_bundle(ai, (ambient - 2) as u32) * h0_line_bundle(bi - ai - 1, 2);
    }
    Ok(h0_upper(b, ambient) - deficit)
}

/// Coarser variant of [`menogrande2_rhs`] that drops the codimension factor:
/// `h^0 O(b) - sum_i h^0_{P^2}(b_i - a_i - 1)`.
pub fn menogrande_rhs(
    b: &SplittingType,
    a_plane: &SplittingType,
    ambient: usize,
) -> Result<BigInt, BoundsError> {
    if ambient < 2 {
        return Err(BoundsError::AmbientTooSmall { ambient, needed: 2 });
    }
    check_dominated(b, a_plane)?;
    if a_plane.last() < 0 {
        return Err(BoundsError::Precondition(
            "plane gst entries must be non-negative".into(),
        ));
    }
    let deficit: BigInt = b
        .entries()
        .iter()
        .zip(a_plane.entries())
        .map(|(&bi, &ai)| h0_line_bundle(bi - ai - 1, 2))
        .sum();
    Ok(h0_upper(b, ambient) - deficit)
}

/// Lower bound for the second Chern class from the plane gst row:
/// `sum_{i<j} b_i b_j + sum_i (b_i - a_i)(b_i - a_i + 1)/2`.
pub fn c2_lower(b: &SplittingType, a_plane: &SplittingType) -> Result<BigInt, BoundsError> {
    check_dominated(b, a_plane)?;
    let mut extra = BigInt::zero();
    for (&bi, &ai) in b.entries().iter().zip(a_plane.entries()) {
        let gap = BigInt::from(bi - ai);
        extra += &gap * (&gap + BigInt::one()) / BigInt::from(2);
    }
    Ok(b.pairwise_product_sum() + extra)
}

/// The set of twists with non-positive second Chern class, and the size
/// allowance `max(0, b_1 - b_n - 1)` it must respect for non-split data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeC2Window {
    pub twists: Vec<BigInt>,
    pub size_bound: i64,
}

/// Enumerate the integers `t` with `c2(F(t)) <= 0`. The quadratic
/// `c2 + (n-1) c1 t + C(n,2) t^2` has positive leading coefficient for
/// `n >= 2`; rank-1 data with `c2 <= 0` would make the set infinite and is
/// rejected.
pub fn negative_c2_window(
    data: &ChernData,
    b: &SplittingType,
) -> Result<NegativeC2Window, BoundsError> {
    if data.ambient_dim() < 2 {
        return Err(BoundsError::AmbientTooSmall {
            ambient: data.ambient_dim(),
            needed: 2,
        });
    }
    let n = data.rank();
    let size_bound = (b.diameter() - 1).max(0);
    let a = crate::rational::binomial(n, 2);
    let lin = BigInt::from(n - 1) * data.c1();
    let c = data.c2();
    if a.is_zero() {
        return if c.is_positive() {
            Ok(NegativeC2Window {
                twists: Vec::new(),
                size_bound,
            })
        } else {
            Err(BoundsError::WindowUnbounded)
        };
    }
    let disc = &lin * &lin - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return Ok(NegativeC2Window {
            twists: Vec::new(),
            size_bound,
        });
    }
    let sqrt = disc.sqrt();
    let two_a = BigInt::from(2) * &a;
    let lo = (-&lin - &sqrt).div_floor(&two_a) - BigInt::one();
    let hi = (-&lin + &sqrt).div_ceil(&two_a) + BigInt::one();
    let mut twists = Vec::new();
    let mut t = lo;
    while t <= hi {
        let value = &a * &t * &t + &lin * &t + &c;
        if !value.is_positive() {
            twists.push(t.clone());
        }
        t += BigInt::one();
    }
    Ok(NegativeC2Window { twists, size_bound })
}

/// Residue-refined discriminant floor for no-gap splitting types.
pub fn delta_lower_nogap(n: usize, c1: i64) -> BigInt {
    let cb = BigInt::from(crate::splitting::cbar(c1, n as i64));
    let n = BigInt::from(n as i64);
    let one = BigInt::one();
    if n.is_even() {
        // (n/2) C(n,3) = n^2 (n-1)(n-2) / 12
        let part: BigInt = &n * &n * (&n - &one) * (&n - BigInt::from(2)) / BigInt::from(12);
        -part - (&n - &one) * &cb * &cb
    } else {
        // (n/2) C(n+1,3) = n^2 (n^2 - 1) / 12
        let part: BigInt = &n * &n * (&n * &n - &one) / BigInt::from(12);
        -part + (&n - &one) * &cb * (&n - &cb)
    }
}

/// Uniform discriminant floor `-n^2 (n^2 - 1) / 12` (always an integer).
pub fn delta_lower_uniform(n: usize) -> BigInt {
    let n = BigInt::from(n as i64);
    let sq: BigInt = &n * &n;
    -(&sq * (&sq - BigInt::one())) / BigInt::from(12)
}

/// Discriminant floor under a semistability flag: `2n` for semistable,
/// `3 n^2 / 4` for stable.
pub fn semistable_delta_floor(n: usize, stable: bool) -> Rational {
    if stable {
        rat(3, 4) * rat_int((n * n) as i64)
    } else {
        rat_int(2 * n as i64)
    }
}

/// Difference of twisted class polynomials
/// `c_s(F(t)) - c_s(O(b)(t))` for `3 <= s <= min(n, N)`. For data whose
/// splitting type is `b` this has degree at most `s - 2`, with leading
/// coefficient `C(n-2, s-2) (c2 - sum b_i b_j)` when that is nonzero.
pub fn lambda_s(
    data: &ChernData,
    b: &SplittingType,
    s: usize,
) -> Result<Polynomial, BoundsError> {
    let n = data.rank();
    if b.len() as i64 != n {
        return Err(BoundsError::RankMismatch { rank: n, len: b.len() });
    }
    if BigInt::from(b.sum()) != data.c1() {
        return Err(BoundsError::SplittingMismatch);
    }
    let max_s = if n < 0 { 0 } else { (n as usize).min(data.ambient_dim()) };
    if s < 3 || s > max_s {
        return Err(BoundsError::SOutOfRange { s });
    }
    let twisted = twist_symbolic(data);
    let split_twisted = twist_symbolic(&split_chern(b, data.ambient_dim()));
    let diff = twisted
        .class_poly(s)
        .expect("s <= N")
        .sub(split_twisted.class_poly(s).expect("s <= N"));
    Ok(diff)
}

/// One sampled section count fed to [`split_predicates`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCountCheck {
    pub twist: i64,
    pub split_count: BigInt,
    pub oracle: BigInt,
    pub equal: bool,
    /// True when the twist is at least `-a_n`, where the equality criterion
    /// is decisive.
    pub decisive: bool,
}

/// Joint evaluation of the numeric splitting criteria: gst equals the
/// splitting type, and sampled section counts reach the split-bundle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPredicates {
    pub gst_equals_splitting: bool,
    pub checks: Vec<SectionCountCheck>,
    pub verdict: Verdict,
}

impl SplitPredicates {
    pub fn is_split(&self) -> bool {
        self.gst_equals_splitting
    }

    pub fn into_report(self) -> BoundReport {
        let detail = if self.gst_equals_splitting {
            "gst equals splitting type (split)".to_string()
        } else {
            format!(
                "gst below splitting type; {} sampled section counts, consistent: {}",
                self.checks.len(),
                self.verdict != Verdict::Violated
            )
        };
        BoundReport {
            name: "split_predicates".into(),
            bound: BoundValue::Size(usize::from(self.gst_equals_splitting)),
            oracle: None,
            verdict: self.verdict,
            detail,
        }
    }
}

/// Evaluate the equivalent numeric splitting conditions: `a == b`, and
/// (when sampled section counts are supplied) `h^0 F(t) = h^0 O(b + t)`.
/// A decisive sample (one with `t >= -a_n`) that disagrees with the gst
/// verdict makes the data inconsistent and yields [`Verdict::Violated`].
pub fn split_predicates(
    b: &SplittingType,
    a: &SplittingType,
    ambient: usize,
    samples: &[(i64, BigInt)],
) -> Result<SplitPredicates, BoundsError> {
    if a.len() != b.len() {
        return Err(BoundsError::Gst(SplitError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        }));
    }
    let gst_equals_splitting = a == b;
    let mut checks = Vec::with_capacity(samples.len());
    let mut violated = false;
    for &(t, ref oracle) in samples {
        let split_count = h0_upper(&b.shift(t), ambient);
        let equal = oracle == &split_count;
        let decisive = t >= -a.last();
        if oracle > &split_count {
            violated = true; // no torsion-free sheaf beats the split count
        }
        if gst_equals_splitting && !equal {
            violated = true;
        }
        if !gst_equals_splitting && equal && decisive {
            violated = true;
        }
        checks.push(SectionCountCheck {
            twist: t,
            split_count,
            oracle: oracle.clone(),
            equal,
            decisive,
        });
    }
    let verdict = if violated {
        Verdict::Violated
    } else if gst_equals_splitting {
        Verdict::Equality
    } else {
        Verdict::Satisfied
    };
    Ok(SplitPredicates {
        gst_equals_splitting,
        checks,
        verdict,
    })
}

/// `c1 >= sum a_i` for the global-section type; equality forces the split
/// bundle `O(a)`.
pub fn louso_check(a: &SplittingType, c1: i64) -> BoundReport {
    let bound = BigInt::from(a.sum());
    let c1 = BigInt::from(c1);
    let verdict = if c1 == bound {
        Verdict::Equality
    } else if c1 > bound {
        Verdict::Satisfied
    } else {
        Verdict::Violated
    };
    let detail = match verdict {
        Verdict::Equality => "equality forces the split bundle O(a)".to_string(),
        Verdict::Satisfied => "strict inequality".to_string(),
        Verdict::Violated => "no torsion-free sheaf realizes this".to_string(),
        Verdict::NoOracle => String::new(),
    };
    BoundReport {
        name: "louso".into(),
        bound: BoundValue::Int(bound),
        oracle: Some(BoundValue::Int(c1)),
        verdict,
        detail,
    }
}
