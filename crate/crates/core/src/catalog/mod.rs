//! Sheaf descriptors with ground-truth invariants, and the verifier that
//! runs every applicable bound against them.
//!
//! A descriptor records Chern data, splitting data, known section counts and
//! structural flags of a concretely constructed sheaf. The built-in catalog
//! collects the sharp examples (null-correlation bundle, extension families,
//! the wide-window rank-2 family, ideal sheaves of points, split bundles on
//! a grid) and ships as a JSON document embedded in the crate. [`verify`]
//! runs every bound for which the descriptor supplies data; missing data
//! yields `no-oracle` entries, never failures.

mod builtin;
mod format;
mod koszul;

pub use builtin::{builtin_catalog, builtin_document, construct_builtin};
pub use format::{document_from_json, document_to_json};
pub use koszul::{chern_from_koszul, Subvariety};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bounds::{
    c2_lower, cohomology_bounds, delta_lower_nogap, delta_lower_uniform, grossa_rhs, h0_upper,
    lambda_s, louso_check, menogrande2_rhs, negative_c2_window, regularity_bound, rigrossa_rhs,
    split_predicates, BoundReport, BoundValue, Verdict,
};
use crate::chern::{discriminant, split_chern, ChernData};
use crate::poly::{h0_line_bundle, Polynomial};
use crate::rational::{binomial, rat_big, rat_int};
use crate::riemann_roch::euler_char_poly;
use crate::splitting::{no_gap, GstMatrix, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// Descriptor data violates a structural invariant.
    Validation { descriptor: String, message: String },
    /// Malformed descriptor document.
    Format(String),
    /// Koszul computation requested for an unsupported subvariety.
    UnsupportedShape { shape: String, reason: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Validation { descriptor, message } => {
                write!(f, "descriptor '{descriptor}': {message}")
            }
            CatalogError::Format(msg) => write!(f, "descriptor document: {msg}"),
            CatalogError::UnsupportedShape { shape, reason } => {
                write!(f, "unsupported subvariety {shape}: {reason}")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

/// Structural flags. They are declared metadata, never computed:
/// `semistable`/`stable` assert that the hypotheses of the corresponding
/// discriminant floors hold (a general plane section with that stability
/// which is not itself split).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub reflexive: bool,
    pub torsion_free: bool,
    pub split: bool,
    pub semistable: bool,
    pub stable: bool,
}

/// One piece of a section-count function: the polynomial valid from
/// `min_t` up to the next piece (`min_t == None` means "from -infinity").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H0Piece {
    pub min_t: Option<i64>,
    pub poly: Polynomial,
}

/// Piecewise-polynomial exact section counts `t -> h^0 F(t)`. Section
/// counts of concrete sheaves are polynomial only beyond explicit
/// thresholds, so the pieces carry their own validity ranges; below the
/// first threshold the count is unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseH0 {
    pieces: Vec<H0Piece>,
}

impl PiecewiseH0 {
    pub fn new(pieces: Vec<H0Piece>) -> Result<Self, CatalogError> {
        if pieces.is_empty() {
            return Err(CatalogError::Format("empty section-count function".into()));
        }
        for (idx, w) in pieces.windows(2).enumerate() {
            let ordered = match (w[0].min_t, w[1].min_t) {
                (None, Some(_)) => true,
                (Some(a), Some(b)) => a < b,
                _ => false,
            };
            if !ordered {
                return Err(CatalogError::Format(format!(
                    "section-count pieces out of order at index {idx}"
                )));
            }
        }
        Ok(PiecewiseH0 { pieces })
    }

    pub fn pieces(&self) -> &[H0Piece] {
        &self.pieces
    }

    /// The polynomial governing all sufficiently large twists.
    pub fn last_poly(&self) -> &Polynomial {
        &self.pieces.last().expect("non-empty").poly
    }

    /// Exact count at `t`, or `None` below the first threshold.
    pub fn eval(&self, t: i64) -> Option<BigInt> {
        let piece = self
            .pieces
            .iter()
            .rev()
            .find(|p| p.min_t.is_none_or(|m| t >= m))?;
        piece.poly.eval_int_exact(t)
    }
}

/// A catalog record: exact invariants of one concretely constructed sheaf,
/// acting as the oracle for the bound evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct SheafDescriptor {
    pub name: String,
    pub ambient_dim: usize,
    pub rank: i64,
    pub chern: ChernData,
    pub splitting: SplittingType,
    pub gst: Option<GstMatrix>,
    pub h0_series: Option<PiecewiseH0>,
    pub flags: Flags,
    pub provenance: String,
}

impl SheafDescriptor {
    /// Check every structural invariant; loaded documents must pass before
    /// any bound is evaluated.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let fail = |message: String| {
            Err(CatalogError::Validation {
                descriptor: self.name.clone(),
                message,
            })
        };
        if self.chern.ambient_dim() != self.ambient_dim {
            return fail("chern data ambient dimension mismatch".into());
        }
        if self.chern.rank() != self.rank {
            return fail("chern data rank mismatch".into());
        }
        if self.splitting.len() as i64 != self.rank {
            return fail("splitting type length must equal the rank".into());
        }
        if BigInt::from(self.splitting.sum()) != self.chern.c1() {
            return fail("splitting type must sum to c1".into());
        }
        if let Some(gst) = &self.gst {
            if gst.ambient_dim() != self.ambient_dim {
                return fail("gst table ambient dimension mismatch".into());
            }
            if let Some(w) = gst.width() {
                if w as i64 != self.rank {
                    return fail("gst rows must have rank entries".into());
                }
            }
            if let Some(line_row) = gst.row(1) {
                if line_row != &self.splitting {
                    return fail("gst line row must equal the splitting type".into());
                }
            }
        }
        if let Some(h0) = &self.h0_series {
            if h0.last_poly() != &euler_char_poly(&self.chern) {
                return fail(
                    "section counts at large twists must match the characteristic polynomial"
                        .into(),
                );
            }
            for t in -6..=10 {
                if let Some(v) = h0.eval(t) {
                    if v.is_negative() {
                        return fail(format!("negative section count at twist {t}"));
                    }
                }
            }
        }
        if self.flags.split {
            if self.chern != split_chern(&self.splitting, self.ambient_dim) {
                return fail("split flag requires split-bundle Chern classes".into());
            }
            if let Some(gst) = &self.gst {
                for row in gst.rows().iter().flatten() {
                    if row != &self.splitting {
                        return fail("split flag requires constant gst rows".into());
                    }
                }
            }
        }
        Ok(())
    }

    fn c2(&self) -> BigInt {
        self.chern.c2()
    }

    /// `h^0 O(b + t) - h^0 F(t)` when the section count is known at `t`.
    fn section_deficit(&self, t: i64) -> Option<BigInt> {
        let h0 = self.h0_series.as_ref()?.eval(t)?;
        Some(h0_upper(&self.splitting.shift(t), self.ambient_dim) - h0)
    }
}

/// All bound evaluations for one descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub descriptor: String,
    pub reports: Vec<BoundReport>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn report(&self, name: &str) -> Option<&BoundReport> {
        self.reports.iter().find(|r| r.name == name)
    }
}

/// Twists sampled when a descriptor carries exact section counts.
const SAMPLE_TWISTS: std::ops::RangeInclusive<i64> = -4..=10;

/// Aggregate pointwise `oracle >= bound` checks into one report:
/// `violated` if any point fails, `equality` if every compared point is
/// sharp, `satisfied` otherwise.
fn aggregate_ge(name: &str, points: &[(i64, BigInt, BigInt)]) -> BoundReport {
    let mut verdict = Verdict::NoOracle;
    let mut sharp = true;
    for (_, oracle, bound) in points {
        if oracle < bound {
            verdict = Verdict::Violated;
            break;
        }
        sharp &= oracle == bound;
        verdict = Verdict::Satisfied;
    }
    if verdict == Verdict::Satisfied && sharp {
        verdict = Verdict::Equality;
    }
    let detail = match points.len() {
        0 => "no sample points".to_string(),
        len => format!(
            "{len} twists checked in [{}, {}]",
            points.first().unwrap().0,
            points.last().unwrap().0
        ),
    };
    let bound = points
        .last()
        .map(|(_, _, b)| BoundValue::Int(b.clone()))
        .unwrap_or(BoundValue::Size(0));
    let oracle = points.last().map(|(_, o, _)| BoundValue::Int(o.clone()));
    BoundReport {
        name: name.into(),
        bound,
        oracle,
        verdict,
        detail,
    }
}

fn check_section_counts(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    let Some(h0) = &d.h0_series else { return };
    let mut verdict = Verdict::NoOracle;
    let mut sharp = true;
    let mut last = None;
    let mut count = 0usize;
    for t in SAMPLE_TWISTS {
        let Some(sections) = h0.eval(t) else { continue };
        let bound = h0_upper(&d.splitting.shift(t), d.ambient_dim);
        if sections > bound {
            verdict = Verdict::Violated;
            break;
        }
        sharp &= sections == bound;
        verdict = Verdict::Satisfied;
        count += 1;
        last = Some((sections, bound));
    }
    if verdict == Verdict::Satisfied && sharp {
        verdict = Verdict::Equality;
    }
    let (oracle, bound) = match last {
        Some((o, b)) => (Some(BoundValue::Int(o)), BoundValue::Int(b)),
        None => (None, BoundValue::Size(0)),
    };
    reports.push(BoundReport {
        name: "h0_upper".into(),
        bound,
        oracle,
        verdict,
        detail: format!("{count} twists with known section counts"),
    });
}

fn check_gst_bounds(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    let Some(m) = &d.gst else { return };

    if let Ok(bound) = grossa_rhs(m) {
        if let Some(deficit) = d.section_deficit(0) {
            reports.push(
                BoundReport::new("grossa", BoundValue::Int(bound.clone()))
                    .oracle_ge(deficit, &bound)
                    .with_detail("section deficit at twist 0"),
            );
        }
        let mut points = Vec::new();
        for t in 1..=8 {
            if let (Ok(bound), Some(deficit)) = (rigrossa_rhs(m, t), d.section_deficit(t)) {
                points.push((t, deficit, bound));
            }
        }
        if !points.is_empty() {
            reports.push(aggregate_ge("rigrossa", &points));
        }
    }

    if let Ok(a_top) = m.require_row(d.ambient_dim) {
        reports.push(louso_check(a_top, d.splitting.sum()));
        let samples: Vec<(i64, BigInt)> = d
            .h0_series
            .iter()
            .flat_map(|h0| (-2..=6).filter_map(move |t| h0.eval(t).map(|v| (t, v))))
            .collect();
        if let Ok(p) = split_predicates(&d.splitting, a_top, d.ambient_dim, &samples) {
            if p.is_split() != d.flags.split {
                reports.push(BoundReport {
                    name: "split_predicates".into(),
                    bound: BoundValue::Size(usize::from(p.is_split())),
                    oracle: Some(BoundValue::Size(usize::from(d.flags.split))),
                    verdict: Verdict::Violated,
                    detail: "split predicate contradicts the split flag".into(),
                });
            } else {
                reports.push(p.into_report());
            }
        }
    }

    if let Ok(a_plane) = m.require_row(2) {
        if let Ok(bound) = c2_lower(&d.splitting, a_plane) {
            reports.push(
                BoundReport::new("c2_lower", BoundValue::Int(bound.clone()))
                    .oracle_ge(d.c2(), &bound),
            );
        }
        if let (Ok(bound), Some(h0)) = (
            menogrande2_rhs(&d.splitting, a_plane, d.ambient_dim),
            d.h0_series.as_ref().and_then(|h| h.eval(0)),
        ) {
            reports.push(
                BoundReport::new("menogrande2", BoundValue::Int(bound.clone()))
                    .oracle_le(h0, &bound),
            );
        }
    }
}

fn check_window(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    // The window count rests on the strict c2 floor for non-split sheaves,
    // which can fail for non-reflexive data differing from a split bundle
    // only in codimension >= 3 (ideal sheaves of points).
    if d.flags.split || !d.flags.reflexive {
        return;
    }
    let Ok(w) = negative_c2_window(&d.chern, &d.splitting) else {
        return;
    };
    let size = w.twists.len();
    let bound = w.size_bound;
    let verdict = if (size as i64) > bound {
        Verdict::Violated
    } else if size as i64 == bound {
        Verdict::Equality
    } else {
        Verdict::Satisfied
    };
    reports.push(BoundReport {
        name: "c2_window".into(),
        bound: BoundValue::Size(bound.max(0) as usize),
        oracle: Some(BoundValue::Size(size)),
        verdict,
        detail: format!("window {:?}", w.twists.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    });
}

fn check_discriminant(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    let Ok(delta) = discriminant(&d.chern) else {
        return;
    };
    let n = d.rank as usize;
    if no_gap(&d.splitting) {
        let bound = delta_lower_nogap(n, d.splitting.sum());
        reports.push(
            BoundReport::new("delta_nogap", BoundValue::Int(bound.clone()))
                .oracle_ge(delta.clone(), &bound),
        );
        let bound = delta_lower_uniform(n);
        reports.push(
            BoundReport::new("delta_uniform", BoundValue::Int(bound.clone()))
                .oracle_ge(delta.clone(), &bound),
        );
    }
    if d.flags.semistable {
        let bound = BigInt::from(2 * d.rank);
        reports.push(
            BoundReport::new("delta_semistable", BoundValue::Int(bound.clone()))
                .oracle_ge(delta.clone(), &bound),
        );
    }
    if d.flags.stable {
        // compare 4 delta >= 3 n^2 exactly
        let lhs = BigInt::from(4) * &delta;
        let rhs = BigInt::from(3 * d.rank * d.rank);
        let verdict = if lhs == rhs {
            Verdict::Equality
        } else if lhs > rhs {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        };
        reports.push(BoundReport {
            name: "delta_stable".into(),
            bound: BoundValue::Int(rhs),
            oracle: Some(BoundValue::Int(lhs)),
            verdict,
            detail: "4*delta against 3*n^2".into(),
        });
    }
}

fn check_lambda(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    let max_s = (d.rank.max(0) as usize).min(d.ambient_dim);
    if max_s < 3 {
        return;
    }
    let delta2 = d.c2() - d.splitting.pairwise_product_sum();
    let mut verdict = Verdict::Satisfied;
    let mut last = Polynomial::zero();
    for s in 3..=max_s {
        let Ok(lam) = lambda_s(&d.chern, &d.splitting, s) else {
            continue;
        };
        let ok = if delta2.is_zero() {
            lam.degree().is_none_or(|deg| deg < s.saturating_sub(2))
        } else {
            lam.degree() == Some(s - 2)
                && lam.leading()
                    == Some(&rat_big(
                        binomial(d.rank - 2, (s - 2) as u32) * &delta2,
                    ))
        };
        if !ok {
            verdict = Verdict::Violated;
        }
        if d.flags.split && !lam.is_zero() {
            verdict = Verdict::Violated;
        }
        last = lam;
    }
    if delta2.is_zero() && d.flags.split && verdict == Verdict::Satisfied {
        verdict = Verdict::Equality; // zero polynomial meets the split floor
    }
    reports.push(BoundReport {
        name: "lambda".into(),
        bound: BoundValue::Poly(last),
        oracle: None,
        verdict,
        detail: format!("class indices 3..={max_s}, delta2 = {delta2}"),
    });
}

fn split_true_h(b: &SplittingType, ambient: usize, i: usize, twist: i64) -> BigInt {
    if i == 0 {
        b.entries()
            .iter()
            .map(|&e| h0_line_bundle(e + twist, ambient as u32))
            .sum()
    } else if i == ambient {
        b.entries()
            .iter()
            .map(|&e| h0_line_bundle(-e - twist - ambient as i64 - 1, ambient as u32))
            .sum()
    } else {
        BigInt::zero()
    }
}

fn check_cohomology_bounds(d: &SheafDescriptor, reports: &mut Vec<BoundReport>) {
    if !d.flags.reflexive {
        return; // the polynomial bounds hold for reflexive sheaves only
    }
    let Ok(bounds) = cohomology_bounds(
        d.rank,
        d.ambient_dim,
        d.splitting.sum(),
        &d.c2(),
        &d.splitting,
    ) else {
        return;
    };
    let mut verdict = Verdict::Satisfied;
    let mut detail = Vec::new();

    if d.flags.split {
        // closed-form cohomology of the split bundle
        for i in 0..=d.ambient_dim {
            if bounds.p(i) < &split_true_h(&d.splitting, d.ambient_dim, i, 0) {
                verdict = Verdict::Violated;
                detail.push(format!("P^{i} below the true dimension"));
            }
        }
        let reg = regularity_bound(&bounds);
        if reg.regularity < BigInt::from(-d.splitting.last()) {
            verdict = Verdict::Violated;
            detail.push("regularity bound below the true regularity".into());
        }
    } else if let Some(h0) = d.h0_series.as_ref().and_then(|h| h.eval(0)) {
        if bounds.p(0) < &h0 {
            verdict = Verdict::Violated;
            detail.push("P^0 below the known section count".into());
        }
    }

    for s in 3..=d.ambient_dim {
        let cap = bounds.chern_bound(s).expect("s in range");
        if cap < &d.chern.class(s).abs() {
            verdict = Verdict::Violated;
            detail.push(format!("C_{s} below |c_{s}|"));
        }
    }

    reports.push(BoundReport {
        name: "pqc_soundness".into(),
        bound: BoundValue::Int(bounds.vanishing_threshold().clone()),
        oracle: None,
        verdict,
        detail: if detail.is_empty() {
            format!(
                "P = {:?}, Q = {}",
                bounds
                    .per_index()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>(),
                bounds.vanishing_threshold()
            )
        } else {
            detail.join("; ")
        },
    });
}

/// Run every applicable bound against the descriptor. Checks that lack data
/// are skipped or reported as `no-oracle`; the overall verdict is `pass` iff
/// nothing is violated.
pub fn verify(d: &SheafDescriptor) -> VerificationReport {
    let mut reports = Vec::new();
    check_section_counts(d, &mut reports);
    check_gst_bounds(d, &mut reports);
    check_window(d, &mut reports);
    check_discriminant(d, &mut reports);
    check_lambda(d, &mut reports);
    check_cohomology_bounds(d, &mut reports);
    let pass = reports.iter().all(|r| r.verdict != Verdict::Violated);
    VerificationReport {
        descriptor: d.name.clone(),
        reports,
        pass,
    }
}

/// Convenience: `h^0` of a split bundle piecewise in the twist, as stored in
/// split descriptors (used by the builders and by tests).
pub fn split_h0_series(b: &SplittingType, ambient: usize) -> PiecewiseH0 {
    let mut pieces = vec![H0Piece {
        min_t: None,
        poly: Polynomial::zero(),
    }];
    let mut acc = Polynomial::zero();
    let mut entries = b.entries().to_vec();
    entries.dedup(); // non-increasing, so equal values are adjacent
    for &e in &entries {
        let copies = b.entries().iter().filter(|&&x| x == e).count();
        let shifted = crate::poly::binom_poly(ambient as u32)
            .shift_variable(e)
            .scale(&rat_int(copies as i64));
        acc = acc.add(&shifted);
        pieces.push(H0Piece {
            min_t: Some(-e),
            poly: acc.clone(),
        });
    }
    PiecewiseH0::new(pieces).expect("thresholds increase")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(entries: &[i64]) -> SplittingType {
        SplittingType::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn split_h0_series_counts() {
        let b = st(&[2, 0, -1]);
        let h0 = split_h0_series(&b, 3);
        for t in -6..=6i64 {
            let expect: BigInt = b
                .entries()
                .iter()
                .map(|&e| h0_line_bundle(e + t, 3))
                .sum();
            assert_eq!(h0.eval(t), Some(expect), "t={t}");
        }
    }

    #[test]
    fn piecewise_ordering_enforced() {
        let bad = PiecewiseH0::new(vec![
            H0Piece { min_t: Some(3), poly: Polynomial::zero() },
            H0Piece { min_t: Some(1), poly: Polynomial::zero() },
        ]);
        assert!(bad.is_err());
        let bad = PiecewiseH0::new(vec![
            H0Piece { min_t: Some(1), poly: Polynomial::zero() },
            H0Piece { min_t: None, poly: Polynomial::zero() },
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn piecewise_eval_below_first_threshold() {
        let h0 = PiecewiseH0::new(vec![H0Piece {
            min_t: Some(1),
            poly: Polynomial::from_ints([2, 1]),
        }])
        .unwrap();
        assert_eq!(h0.eval(0), None);
        assert_eq!(h0.eval(1), Some(BigInt::from(3)));
    }
}
