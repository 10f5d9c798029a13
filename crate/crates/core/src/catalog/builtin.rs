//! Construction of the built-in catalog, and the embedded JSON document it
//! ships as.
//!
//! Every descriptor here is a concretely constructed sheaf with exactly
//! known invariants: the null-correlation bundle, the trivial-extension
//! family with its direct sums, the complete-intersection extension family,
//! the wide-negative-window rank-2 family, ideal sheaves of points (the
//! sheaves whose top Chern class escapes every bound), and split bundles
//! over a grid. The catalog is the master regression suite: every
//! descriptor must pass [`super::verify`].

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::chern::{split_chern, whitney, ChernData};
use crate::poly::{binom_poly, Polynomial};
use crate::rational::rat_int;
use crate::splitting::{GstMatrix, SplittingType};

use super::format::document_from_json;
#[cfg(test)]
use super::format::document_to_json;
use super::koszul::{chern_from_koszul, Subvariety};
use super::{split_h0_series, Flags, H0Piece, PiecewiseH0, SheafDescriptor};

/// The catalog document embedded in the crate.
pub fn builtin_document() -> &'static str {
    include_str!("../../data/builtin_catalog.json")
}

/// Parse (once) and return the built-in catalog.
pub fn builtin_catalog() -> Vec<SheafDescriptor> {
    static CACHE: OnceLock<Vec<SheafDescriptor>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            document_from_json(builtin_document())
                .expect("embedded catalog document is valid")
        })
        .clone()
}

fn st(entries: Vec<i64>) -> SplittingType {
    SplittingType::new(entries).expect("sorted entries")
}

fn pieces(parts: Vec<(Option<i64>, Polynomial)>) -> PiecewiseH0 {
    PiecewiseH0::new(
        parts
            .into_iter()
            .map(|(min_t, poly)| H0Piece { min_t, poly })
            .collect(),
    )
    .expect("ordered pieces")
}

fn null_correlation() -> SheafDescriptor {
    let two_binom = binom_poly(3).scale(&rat_int(2));
    SheafDescriptor {
        name: "null_correlation".into(),
        ambient_dim: 3,
        rank: 2,
        chern: ChernData::from_ints(3, 2, [0, 1, 0]),
        splitting: st(vec![0, 0]),
        gst: Some(
            GstMatrix::new(
                3,
                vec![
                    Some(st(vec![0, 0])),
                    Some(st(vec![0, -1])),
                    Some(st(vec![-1, -1])),
                ],
            )
            .expect("valid gst"),
        ),
        h0_series: Some(pieces(vec![
            (None, Polynomial::zero()),
            (Some(1), two_binom.sub(&Polynomial::from_ints([2, 1]))),
        ])),
        flags: Flags {
            reflexive: true,
            torsion_free: true,
            split: false,
            semistable: true,
            stable: true,
        },
        provenance: "normalized null-correlation bundle on P^3, linked to two disjoint lines \
                     by 0 -> O(-1) -> F -> I_Y(1) -> 0; section deficit t+2 for t >= 1"
            .into(),
    }
}

/// Direct sum of `k` copies of the rank-2 extension
/// `0 -> O -> F -> I_line -> 0`, optionally padded with trivial summands.
fn example2(k: usize, padding: usize) -> SheafDescriptor {
    let n = 2 * k + padding;
    let mut gst_row = vec![0i64; n];
    for e in gst_row.iter_mut().skip(n - k) {
        *e = -1;
    }
    let deeper = st(gst_row);
    let copies = rat_int(k as i64);
    // h^0 F(t) = k (2 C(t+3,3) - t - 1) + padding * C(t+3,3) for t >= 0
    let per_copy = binom_poly(3)
        .scale(&rat_int(2))
        .sub(&Polynomial::from_ints([1, 1]));
    let h0_poly = per_copy
        .scale(&copies)
        .add(&binom_poly(3).scale(&rat_int(padding as i64)));
    let name = if padding == 0 {
        format!("example2_k{k}")
    } else {
        format!("example2_k{k}_pad{padding}")
    };
    SheafDescriptor {
        name,
        ambient_dim: 3,
        rank: n as i64,
        chern: ChernData::new(
            3,
            n as i64,
            [
                BigInt::from(0),
                BigInt::from(k as i64),
                BigInt::from(2 * k as i64),
            ],
        ),
        splitting: SplittingType::zeros(n),
        gst: Some(
            GstMatrix::new(
                3,
                vec![
                    Some(SplittingType::zeros(n)),
                    Some(deeper.clone()),
                    Some(deeper),
                ],
            )
            .expect("valid gst"),
        ),
        h0_series: Some(pieces(vec![(None, Polynomial::zero()), (Some(0), h0_poly)])),
        flags: Flags {
            reflexive: true,
            torsion_free: true,
            split: false,
            semistable: false,
            stable: false,
        },
        provenance: format!(
            "direct sum of {k} copies of the reflexive extension \
             0 -> O -> F0 -> I_line -> 0 on P^3 (rank chosen so the sequence is \
             0 -> O^(n-1) -> F0 -> I_line -> 0 with rank n) plus {padding} trivial \
             summands; section deficit k(t+1) for t >= 1"
        ),
    }
}

/// Extension `0 -> O(b') -> F -> I_Y -> 0` with `Y` a complete intersection
/// `(r, 1)` in `P^3`.
fn estensione(r: u32, b_prime: &[i64]) -> SheafDescriptor {
    let ideal = chern_from_koszul(&Subvariety::CompleteIntersection(r, 1), 3)
        .expect("supported shape");
    let sub = split_chern(&st(b_prime.to_vec()), 3);
    let chern = whitney(&sub, &ideal).expect("same ambient");
    let mut entries = b_prime.to_vec();
    entries.push(0);
    let splitting = SplittingType::from_unsorted(entries).expect("non-empty");

    // h^0 F(t) = sum_i h^0 O(b'_i + t) + h^0 I_Y(t); the curve is
    // arithmetically Cohen-Macaulay, so h^0 I_Y(t) = C(t+3,3) - h^0 O_Y(t)
    // with h^0 O_Y(t) polynomial from t >= r - 2.
    let mut poly = binom_poly(3)
        .sub(&binom_poly(2))
        .add(&binom_poly(2).shift_variable(-(r as i64)));
    for &bi in b_prime {
        poly = poly.add(&binom_poly(3).shift_variable(bi));
    }
    let t0 = (r as i64 - 2).max(-1);
    let b_str: Vec<String> = b_prime.iter().map(|e| e.to_string()).collect();
    SheafDescriptor {
        name: format!("estensione_r{r}_b[{}]", b_str.join(",")),
        ambient_dim: 3,
        rank: splitting.len() as i64,
        chern,
        splitting,
        gst: None,
        h0_series: Some(pieces(vec![(Some(t0), poly)])),
        flags: Flags {
            reflexive: true,
            torsion_free: true,
            split: false,
            semistable: false,
            stable: false,
        },
        provenance: format!(
            "extension 0 -> O(b') -> F -> I_Y -> 0 on P^3 with Y a complete \
             intersection ({r}, 1); c2 exceeds the split floor by deg Y = {r}"
        ),
    }
}

/// Rank-2 extension `0 -> O(b) -> F -> I_line(-b) -> 0`: the family whose
/// twisted c2 is non-positive on the widest allowed window.
fn wide_window(b: i64) -> SheafDescriptor {
    let line = chern_from_koszul(&Subvariety::Line, 3).expect("supported shape");
    let twisted_ideal = crate::chern::twist_numeric(&line, -b);
    let sub = ChernData::line_bundle(3, b);
    let chern = whitney(&sub, &twisted_ideal).expect("same ambient");

    let first = binom_poly(3).shift_variable(b);
    let second = first
        .add(&binom_poly(3).shift_variable(-b))
        .sub(&Polynomial::from_ints([1 - b, 1]));
    SheafDescriptor {
        name: format!("wide_window_b{b}"),
        ambient_dim: 3,
        rank: 2,
        chern,
        splitting: st(vec![b, -b]),
        gst: Some(
            GstMatrix::new(
                3,
                vec![
                    Some(st(vec![b, -b])),
                    Some(st(vec![b, -b - 1])),
                    None,
                ],
            )
            .expect("valid gst"),
        ),
        h0_series: Some(pieces(vec![
            (None, Polynomial::zero()),
            (Some(-b), first),
            (Some(b - 1), second),
        ])),
        flags: Flags {
            reflexive: true,
            torsion_free: true,
            split: false,
            semistable: false,
            stable: false,
        },
        provenance: format!(
            "extension 0 -> O({b}) -> F -> I_line(-{b}) -> 0 on P^3; c2(F(t)) = \
             t^2 - {b}^2 + 1 is non-positive exactly for |t| <= {b} - 1; the plane \
             gst row [{b},-{b}-1] is inferred from sharpness of the c2 floor"
        ),
    }
}

/// Ideal sheaf of `m` general points, padded by trivial summands to the
/// requested rank. Not reflexive: the top Chern class grows with `m` while
/// every lower invariant stays fixed.
fn points(m: u32, ambient: usize, rank: usize) -> SheafDescriptor {
    let ideal = chern_from_koszul(&Subvariety::Points(m), ambient).expect("supported shape");
    let chern = if rank > 1 {
        whitney(&ChernData::trivial(ambient, rank as i64 - 1), &ideal).expect("same ambient")
    } else {
        ideal
    };

    // smallest twist with forms through the points (independent conditions
    // for general points once the count of monomials exceeds m)
    let mut t_pos = 0i64;
    while crate::poly::h0_line_bundle(t_pos, ambient as u32) <= BigInt::from(m) {
        t_pos += 1;
    }
    let pad = rat_int(rank as i64 - 1);
    let mut parts: Vec<(Option<i64>, Polynomial)> = vec![(None, Polynomial::zero())];
    if rank > 1 {
        parts.push((Some(0), binom_poly(ambient as u32).scale(&pad)));
    }
    parts.push((
        Some(t_pos),
        binom_poly(ambient as u32)
            .scale(&rat_int(rank as i64))
            .sub(&Polynomial::from_ints([m as i64])),
    ));

    // gst rows: general subspaces of dimension < N miss the points, the top
    // row sees the ideal itself
    let mut rows: Vec<Option<SplittingType>> = Vec::with_capacity(ambient);
    for _ in 1..ambient {
        rows.push(Some(SplittingType::zeros(rank)));
    }
    let mut top = vec![0i64; rank];
    top[rank - 1] = -t_pos;
    rows.push(Some(st(top)));

    SheafDescriptor {
        name: format!("points_M{m}_P{ambient}_rank{rank}"),
        ambient_dim: ambient,
        rank: rank as i64,
        chern,
        splitting: SplittingType::zeros(rank),
        gst: Some(GstMatrix::new(ambient, rows).expect("valid gst")),
        h0_series: Some(pieces(parts)),
        flags: Flags {
            reflexive: false,
            torsion_free: true,
            split: false,
            semistable: rank == 1,
            stable: rank == 1,
        },
        provenance: format!(
            "ideal sheaf of {m} general points in P^{ambient} plus {} trivial summands; \
             every class below the top vanishes while |c_N| = M (N-1)!, so no invariant \
             of (c1, c2, b) bounds the top class for torsion-free sheaves",
            rank - 1
        ),
    }
}

fn split_bundle(entries: Vec<i64>, ambient: usize) -> SheafDescriptor {
    let b = st(entries);
    let strs: Vec<String> = b.entries().iter().map(|e| e.to_string()).collect();
    SheafDescriptor {
        name: format!("split_[{}]_P{}", strs.join(","), ambient),
        ambient_dim: ambient,
        rank: b.len() as i64,
        chern: split_chern(&b, ambient),
        splitting: b.clone(),
        gst: Some(GstMatrix::constant(ambient, &b)),
        h0_series: Some(split_h0_series(&b, ambient)),
        flags: Flags {
            reflexive: true,
            torsion_free: true,
            split: true,
            semistable: false,
            stable: false,
        },
        provenance: "direct sum of line bundles".into(),
    }
}

fn non_increasing_sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, len: usize, lo: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let cap = *prefix.last().expect("non-empty prefix");
        for next in (lo..=cap).rev() {
            prefix.push(next);
            extend(prefix, len, lo, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for first in (lo..=hi).rev() {
        let mut prefix = vec![first];
        extend(&mut prefix, len, lo, &mut out);
    }
    out
}

/// Rebuild the catalog from its constructions, in the deterministic order
/// used by the embedded document. [`builtin_catalog`] parses the embedded
/// document instead; a test pins the two to each other.
pub fn construct_builtin() -> Vec<SheafDescriptor> {
    let mut out = vec![null_correlation()];
    for k in 1..=5 {
        out.push(example2(k, 0));
    }
    out.push(example2(1, 1));
    for r in 1..=3u32 {
        for b_prime in [vec![0i64], vec![1, 0]] {
            out.push(estensione(r, &b_prime));
        }
    }
    for b in 1..=5 {
        out.push(wide_window(b));
    }
    out.push(points(5, 2, 1));
    out.push(points(3, 3, 3));
    out.push(points(2, 4, 2));
    for ambient in 2..=4usize {
        for n in 1..=3usize {
            for entries in non_increasing_sequences(n, -3, 3) {
                out.push(split_bundle(entries, ambient));
            }
        }
    }
    out
}
