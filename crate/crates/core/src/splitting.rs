//! Splitting types, global-section types and the extremal no-gap sequence.
//!
//! A splitting type is a non-increasing integer sequence `b_1 >= ... >= b_n`.
//! The gst matrix collects the global-section types of restrictions to
//! general linear subspaces of each dimension: row `j` is the type on a
//! dimension-`j` subspace, row 1 being the splitting type itself. Rows may be
//! absent when no data is available; bound evaluators require only the rows
//! they consume.

use std::fmt;

use num_bigint::BigInt;

use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitError {
    EmptySequence,
    /// Entries not sorted non-increasing.
    NotSorted,
    /// Componentwise comparison of sequences with different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Brute-force enumeration guard (`n` too large).
    EnumerationTooLarge { n: usize, max: usize },
    /// Gst row with a different length than the first row.
    RowLengthMismatch { row: usize },
    /// Gst row not componentwise `<=` the previous-dimension row.
    RowNotMonotone { row: usize, index: usize },
    /// Gst matrix with no rows, or a row index outside `1..=N`.
    RowOutOfRange { row: usize },
    /// A row required by an evaluator is absent.
    MissingRow { row: usize },
    /// Conversion input outside the supported invariant sets.
    UnsupportedInvariantSet,
}

impl fmt::Display for SplitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitError::EmptySequence => write!(f, "sequence must have at least one entry"),
            SplitError::NotSorted => write!(f, "sequence entries must be non-increasing"),
            SplitError::LengthMismatch { left, right } => {
                write!(f, "sequence length mismatch: {left} vs {right}")
            }
            SplitError::EnumerationTooLarge { n, max } => {
                write!(f, "enumeration guard: n = {n} exceeds {max}")
            }
            SplitError::RowLengthMismatch { row } => {
                write!(f, "gst row {row} has a different length than row 1")
            }
            SplitError::RowNotMonotone { row, index } => {
                write!(f, "gst row {row} exceeds the lower-dimension row at index {index}")
            }
            SplitError::RowOutOfRange { row } => write!(f, "gst row {row} out of range"),
            SplitError::MissingRow { row } => write!(f, "gst row {row} is absent"),
            SplitError::UnsupportedInvariantSet => {
                write!(f, "unsupported invariant set")
            }
        }
    }
}

impl std::error::Error for SplitError {}

/// Non-increasing integer sequence `b_1 >= b_2 >= ... >= b_n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplittingType {
    entries: Vec<i64>,
}

impl SplittingType {
    pub fn new(entries: Vec<i64>) -> Result<Self, SplitError> {
        if entries.is_empty() {
            return Err(SplitError::EmptySequence);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(SplitError::NotSorted);
        }
        Ok(SplittingType { entries })
    }

    /// Sort the entries non-increasing and build the type.
    pub fn from_unsorted(mut entries: Vec<i64>) -> Result<Self, SplitError> {
        if entries.is_empty() {
            return Err(SplitError::EmptySequence);
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittingType { entries })
    }

    /// The constant-zero type of length `n`.
    pub fn zeros(n: usize) -> Self {
        SplittingType {
            entries: vec![0; n],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn first(&self) -> i64 {
        self.entries[0]
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().unwrap()
    }

    /// Sum of the entries (the first Chern class of the split bundle).
    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Diameter `b_1 - b_n`.
    pub fn diameter(&self) -> i64 {
        self.first() - self.last()
    }

    /// Sum of squares of the entries.
    pub fn sum_squares(&self) -> BigInt {
        self.entries
            .iter()
            .map(|&e| BigInt::from(e) * BigInt::from(e))
            .sum()
    }

    /// Second elementary symmetric polynomial of the entries.
    pub fn pairwise_product_sum(&self) -> BigInt {
        let s = BigInt::from(self.sum());
        (&s * &s - self.sum_squares()) / BigInt::from(2)
    }

    /// Shift every entry by `l`.
    pub fn shift(&self, l: i64) -> Self {
        SplittingType {
            entries: self.entries.iter().map(|e| e + l).collect(),
        }
    }

    /// Entries negated and re-sorted (the splitting type of the dual).
    pub fn negate(&self) -> Self {
        let entries = self.entries.iter().rev().map(|e| -e).collect();
        SplittingType { entries }
    }
}

impl fmt::Debug for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", strs.join(","))
    }
}

/// True iff consecutive differences are all at most 1.
pub fn no_gap(b: &SplittingType) -> bool {
    b.entries.windows(2).all(|w| w[0] - w[1] <= 1)
}

/// Componentwise comparison of equal-length sequences.
pub fn leq(a: &SplittingType, b: &SplittingType) -> Result<bool, SplitError> {
    if a.len() != b.len() {
        return Err(SplitError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y))
}

/// Table of global-section types across linear-section dimensions: row `j`
/// (for `j = 1..N`) is the type of the restriction to a general dimension-j
/// subspace. Row 1 is the splitting type. Present rows must be componentwise
/// non-increasing as the dimension grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GstMatrix {
    ambient_dim: usize,
    rows: Vec<Option<SplittingType>>, // index j-1 holds the dimension-j row
}

impl GstMatrix {
    pub fn new(ambient_dim: usize, rows: Vec<Option<SplittingType>>) -> Result<Self, SplitError> {
        if rows.len() != ambient_dim || ambient_dim == 0 {
            return Err(SplitError::RowOutOfRange { row: rows.len() });
        }
        let mut width = None;
        let mut prev: Option<(usize, &SplittingType)> = None;
        for (idx, row) in rows.iter().enumerate() {
            let Some(row) = row else { continue };
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(SplitError::RowLengthMismatch { row: idx + 1 })
                }
                _ => {}
            }
            if let Some((_, p)) = prev {
                // deeper sections can only lose sections: a_{j,i} <= a_{j-1,i}
                for (i, (hi, lo)) in p.entries().iter().zip(row.entries()).enumerate() {
                    if lo > hi {
                        return Err(SplitError::RowNotMonotone {
                            row: idx + 1,
                            index: i + 1,
                        });
                    }
                }
            }
            prev = Some((idx + 1, row));
        }
        Ok(GstMatrix { ambient_dim, rows })
    }

    /// Matrix with every row equal to `b` (the split-bundle table).
    pub fn constant(ambient_dim: usize, b: &SplittingType) -> Self {
        GstMatrix {
            ambient_dim,
            rows: vec![Some(b.clone()); ambient_dim],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of columns (the rank), if any row is present.
    pub fn width(&self) -> Option<usize> {
        self.rows.iter().flatten().next().map(|r| r.len())
    }

    /// Row for dimension `j` (`1..=N`), if present.
    pub fn row(&self, j: usize) -> Option<&SplittingType> {
        if j == 0 || j > self.ambient_dim {
            return None;
        }
        self.rows[j - 1].as_ref()
    }

    pub fn require_row(&self, j: usize) -> Result<&SplittingType, SplitError> {
        if j == 0 || j > self.ambient_dim {
            return Err(SplitError::RowOutOfRange { row: j });
        }
        self.rows[j - 1].as_ref().ok_or(SplitError::MissingRow { row: j })
    }

    pub fn rows(&self) -> &[Option<SplittingType>] {
        &self.rows
    }

    /// Entry `a_{j,i}` with 1-based `i`.
    pub fn entry(&self, j: usize, i: usize) -> Result<i64, SplitError> {
        Ok(self.require_row(j)?.entries()[i - 1])
    }
}

/// The unique integer with `0 <= cbar <= n/2` and `c1 = ±cbar (mod n)`.
pub fn cbar(c1: i64, n: i64) -> i64 {
    assert!(n >= 1, "rank must be positive");
    let r = c1.rem_euclid(n);
    r.min(n - r)
}

/// The no-gap sequence of length `n` with sum `c1` maximizing the sum of
/// squares: the centered run of consecutive integers plus one extra entry,
/// shifted so the sum matches, then re-sorted.
pub fn extremal_nogap_sequence(n: usize, c1: i64) -> SplittingType {
    assert!(n >= 1);
    let n_i = n as i64;
    let cb = cbar(c1, n_i);

    // base construction for sum = cb
    let mut base: Vec<i64> = if n_i % 2 == 0 {
        let half = (n_i - 2) / 2;
        let mut v: Vec<i64> = (-half..=half).collect();
        v.push(cb);
        v
    } else {
        let lo = -(n_i - 3) / 2;
        let hi = (n_i - 1) / 2;
        let mut v: Vec<i64> = (lo..=hi).collect();
        v.push(cb - (n_i - 1) / 2);
        v
    };
    debug_assert_eq!(base.iter().sum::<i64>(), cb);

    // c1 is congruent to cb or -cb mod n; negating the base flips the sum
    // and preserves both the no-gap property and the sum of squares.
    if (c1 - cb).rem_euclid(n_i) != 0 {
        for e in &mut base {
            *e = -*e;
        }
    }
    let base_sum: i64 = base.iter().sum();
    debug_assert_eq!((c1 - base_sum) % n_i, 0);
    let shift = (c1 - base_sum) / n_i;
    for e in &mut base {
        *e += shift;
    }
    SplittingType::from_unsorted(base).expect("n >= 1")
}

/// Exhaustive maximum of the sum of squares over all no-gap sequences of
/// length `n` with the given sum. A no-gap non-increasing sequence is
/// determined by its first entry and the set of positions where it steps
/// down by one, so the search space is `2^(n-1)` patterns.
pub fn brute_force_max_sumsq(n: usize, c1: i64) -> Result<BigInt, SplitError> {
    const MAX_N: usize = 10;
    if n == 0 {
        return Err(SplitError::EmptySequence);
    }
    if n > MAX_N {
        return Err(SplitError::EnumerationTooLarge { n, max: MAX_N });
    }
    let n_i = n as i64;
    let mut best: Option<BigInt> = None;
    for pattern in 0u32..(1 << (n - 1)) {
        // drops[i] = number of step-downs strictly before entry i+1
        let mut total_drop = 0i64;
        let mut drops = Vec::with_capacity(n);
        drops.push(0i64);
        for bit in 0..n - 1 {
            if pattern & (1 << bit) != 0 {
                total_drop += 1;
            }
            drops.push(total_drop);
        }
        let drop_sum: i64 = drops.iter().sum();
        // need n*b1 - drop_sum = c1
        if (c1 + drop_sum) % n_i != 0 {
            continue;
        }
        let b1 = (c1 + drop_sum) / n_i;
        let sumsq: BigInt = drops
            .iter()
            .map(|d| {
                let e = BigInt::from(b1 - d);
                &e * &e
            })
            .sum();
        if best.as_ref().is_none_or(|b| sumsq > *b) {
            best = Some(sumsq);
        }
    }
    Ok(best.expect("single-step patterns cover every residue"))
}

/// One of the invariant subsets that determine (or bound) the full set
/// `{c1, c2, b, d, delta2}`.
#[derive(Debug, Clone)]
pub enum InvariantInput {
    /// Splitting type plus `delta2 = c2 - sum b_i b_j`.
    SplittingDelta { b: SplittingType, delta2: BigInt },
    /// Splitting type plus the second Chern class.
    SplittingC2 { b: SplittingType, c2: BigInt },
    /// `c1`, `c2` and the diameter `d`, without the sequence itself.
    C1C2Diameter { n: usize, c1: i64, c2: BigInt, d: i64 },
    /// `c1`, the diameter and `delta2`, without the sequence itself.
    C1DiameterDelta { n: usize, c1: i64, d: i64, delta2: BigInt },
}

/// The full invariant set, with fields left `None` when the input does not
/// determine them exactly. `entry_lower`/`entry_upper` are the exact rational
/// bounds `c1/n - d <= b_n <= b_1 <= c1/n + d` on the sequence entries.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet {
    pub n: usize,
    pub c1: i64,
    pub d: i64,
    pub b: Option<SplittingType>,
    pub c2: Option<BigInt>,
    pub delta2: Option<BigInt>,
    pub pairwise_product_sum: Option<BigInt>,
    pub entry_lower: Rational,
    pub entry_upper: Rational,
}

/// Complete a partial invariant set. With the sequence given, everything is
/// exact; with only `(c1, d)` numerics, `c2` and `delta2` are carried through
/// unconverted and the entry interval is reported.
pub fn invariant_convert(input: &InvariantInput) -> InvariantSet {
    fn bounds(n: usize, c1: i64, d: i64) -> (Rational, Rational) {
        let center = crate::rational::rat(c1, n as i64);
        (&center - rat_int(d), center + rat_int(d))
    }

    match input {
        InvariantInput::SplittingDelta { b, delta2 } => {
            let e2 = b.pairwise_product_sum();
            let (lo, hi) = bounds(b.len(), b.sum(), b.diameter());
            InvariantSet {
                n: b.len(),
                c1: b.sum(),
                d: b.diameter(),
                c2: Some(&e2 + delta2),
                delta2: Some(delta2.clone()),
                pairwise_product_sum: Some(e2),
                b: Some(b.clone()),
                entry_lower: lo,
                entry_upper: hi,
            }
        }
        InvariantInput::SplittingC2 { b, c2 } => {
            let e2 = b.pairwise_product_sum();
            let (lo, hi) = bounds(b.len(), b.sum(), b.diameter());
            InvariantSet {
                n: b.len(),
                c1: b.sum(),
                d: b.diameter(),
                c2: Some(c2.clone()),
                delta2: Some(c2 - &e2),
                pairwise_product_sum: Some(e2),
                b: Some(b.clone()),
                entry_lower: lo,
                entry_upper: hi,
            }
        }
        InvariantInput::C1C2Diameter { n, c1, c2, d } => {
            let (lo, hi) = bounds(*n, *c1, *d);
            InvariantSet {
                n: *n,
                c1: *c1,
                d: *d,
                b: None,
                c2: Some(c2.clone()),
                delta2: None,
                pairwise_product_sum: None,
                entry_lower: lo,
                entry_upper: hi,
            }
        }
        InvariantInput::C1DiameterDelta { n, c1, d, delta2 } => {
            let (lo, hi) = bounds(*n, *c1, *d);
            InvariantSet {
                n: *n,
                c1: *c1,
                d: *d,
                b: None,
                c2: None,
                delta2: Some(delta2.clone()),
                pairwise_product_sum: None,
                entry_lower: lo,
                entry_upper: hi,
            }
        }
    }
}
