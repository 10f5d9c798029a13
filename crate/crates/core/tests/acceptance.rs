//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//! Each test prints a `criterion N PASS` line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use chern_bounds::bounds::{
    c2_lower, cohomology_bounds, delta_lower_nogap, delta_lower_uniform, h0_upper, lambda_s,
    negative_c2_window, regularity_bound, rigrossa_rhs,
};
use chern_bounds::catalog::{builtin_catalog, chern_from_koszul, SheafDescriptor, Subvariety};
use chern_bounds::chern::{
    discriminant, dual, restrict_hyperplane, split_chern, twist_numeric, twist_symbolic, whitney,
    whitney_quotient, ChernData,
};
use chern_bounds::poly::h0_line_bundle;
use chern_bounds::rational::{binomial, factorial, rat_big};
use chern_bounds::riemann_roch::{euler_char, euler_char_p2, euler_char_poly};
use chern_bounds::splitting::{brute_force_max_sumsq, extremal_nogap_sequence, SplittingType};

/// Deterministic xorshift generator so the "random" criteria are
/// reproducible run to run.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform-ish integer in `[lo, hi]`.
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

fn catalog_named(name: &str) -> SheafDescriptor {
    builtin_catalog()
        .into_iter()
        .find(|d| d.name == name)
        .unwrap_or_else(|| panic!("descriptor '{name}' missing from the catalog"))
}

fn sorted(mut entries: Vec<i64>) -> SplittingType {
    entries.sort_unstable_by(|a, b| b.cmp(a));
    SplittingType::new(entries).expect("non-empty")
}

/// All non-increasing integer sequences of the given length with entries in
/// `[lo, hi]`.
fn sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, len: usize, lo: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for next in (lo..=*prefix.last().unwrap()).rev() {
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

/// Criterion 1: the twisted section-deficit bound of the null-correlation
/// bundle equals t + 2 for t in [1, 20], and the catalog's exact section
/// counts meet it with equality.
#[test]
fn criterion_01_sharp_bound_null_correlation() {
    let d = catalog_named("null_correlation");
    let gst = d.gst.as_ref().expect("gst table present");
    let h0 = d.h0_series.as_ref().expect("section counts present");
    for t in 1..=20i64 {
        let bound = rigrossa_rhs(gst, t).expect("precondition holds for t >= 1");
        assert_eq!(bound, BigInt::from(t + 2), "bound at t={t}");
        let deficit = h0_upper(&d.splitting.shift(t), 3) - h0.eval(t).expect("defined");
        assert_eq!(deficit, bound, "oracle deficit at t={t}");
    }
    println!("criterion 1 PASS - null-correlation deficit bound is exactly t+2 on [1,20]");
}

/// Criterion 2: the extension family's bound and oracle difference both
/// equal k(t+1) for k in [1,5], t in [1,20].
#[test]
fn criterion_02_sharp_bound_extension_family() {
    for k in 1..=5i64 {
        let d = catalog_named(&format!("example2_k{k}"));
        let gst = d.gst.as_ref().expect("gst table present");
        let h0 = d.h0_series.as_ref().expect("section counts present");
        for t in 1..=20i64 {
            let bound = rigrossa_rhs(gst, t).expect("precondition holds");
            assert_eq!(bound, BigInt::from(k * (t + 1)), "bound k={k} t={t}");
            let deficit =
                h0_upper(&d.splitting.shift(t), 3) - h0.eval(t).expect("defined");
            assert_eq!(deficit, bound, "oracle k={k} t={t}");
        }
    }
    println!("criterion 2 PASS - extension family deficit is exactly k(t+1) on [1,20]");
}

/// Criterion 3: on the plane the characteristic equals
/// (c1^2 + 3 c1)/2 - c2 + n for 200 random triples.
#[test]
fn criterion_03_plane_characteristic_closed_form() {
    let mut rng = Rng::new(0x5eed_0003);
    for _ in 0..200 {
        let n = rng.range(1, 9);
        let c1 = rng.range(-25, 25);
        let c2 = rng.range(-25, 25);
        let data = ChernData::from_ints(2, n, [c1, c2]);
        assert_eq!(
            euler_char(&data),
            euler_char_p2(n, &BigInt::from(c1), &BigInt::from(c2)),
            "n={n} c1={c1} c2={c2}"
        );
    }
    println!("criterion 3 PASS - plane characteristic matches the closed form on 200 triples");
}

/// Criterion 4: the characteristic polynomial of a split bundle evaluated at
/// non-negative twists equals the direct section count.
#[test]
fn criterion_04_split_characteristic_vs_direct_count() {
    let mut cases = 0usize;
    for n in 1..=4usize {
        for entries in sequences(n, -3, 3) {
            let b = SplittingType::new(entries).unwrap();
            for ambient in 2..=5usize {
                let chi = euler_char_poly(&split_chern(&b, ambient));
                let t0 = -b.last(); // smallest twist making all summands non-negative
                for t in t0..=t0 + 4 {
                    let direct: BigInt = b
                        .entries()
                        .iter()
                        .map(|&e| h0_line_bundle(e + t, ambient as u32))
                        .sum();
                    assert_eq!(chi.eval_int(t), rat_big(direct), "b={b:?} N={ambient} t={t}");
                    cases += 1;
                }
            }
        }
    }
    println!("criterion 4 PASS - characteristic equals section count on {cases} split cases");
}

/// Criterion 5: the c2 floor is 1 for the null-correlation data (met with
/// equality) and exactly the split floor when the gst row equals b.
#[test]
fn criterion_05_c2_floor_sharpness() {
    let floor = c2_lower(
        &SplittingType::new(vec![0, 0]).unwrap(),
        &SplittingType::new(vec![0, -1]).unwrap(),
    )
    .unwrap();
    assert_eq!(floor, BigInt::from(1));
    assert_eq!(catalog_named("null_correlation").chern.c2(), floor);

    let mut rng = Rng::new(0x5eed_0005);
    for _ in 0..100 {
        let len = rng.range(1, 6) as usize;
        let b = sorted((0..len).map(|_| rng.range(-6, 6)).collect());
        assert_eq!(c2_lower(&b, &b).unwrap(), b.pairwise_product_sum(), "b={b:?}");
    }
    println!("criterion 5 PASS - c2 floor sharp at the null-correlation bundle and split data");
}

/// Criterion 6: the residue-refined discriminant floor, at its extremal
/// residue over c1 in [0, n], recovers the uniform floor.
#[test]
fn criterion_06_discriminant_floor_consistency() {
    for n in 2..=12usize {
        let extremal = (0..=n as i64)
            .map(|c1| delta_lower_nogap(n, c1))
            .min()
            .expect("non-empty range");
        assert_eq!(extremal, delta_lower_uniform(n), "n={n}");
    }
    println!("criterion 6 PASS - refined and uniform discriminant floors agree at the extremal residue");
}

/// Criterion 7: the extremal no-gap construction maximizes the sum of
/// squares, witnessed by exhaustive enumeration.
#[test]
fn criterion_07_extremal_nogap_oracle() {
    let mut cases = 0usize;
    for n in 1..=8usize {
        for c1 in -(2 * n as i64)..=2 * n as i64 {
            let built = extremal_nogap_sequence(n, c1);
            assert!(chern_bounds::splitting::no_gap(&built), "n={n} c1={c1}");
            assert_eq!(built.sum(), c1, "n={n} c1={c1}");
            assert_eq!(
                built.sum_squares(),
                brute_force_max_sumsq(n, c1).unwrap(),
                "n={n} c1={c1}"
            );
            cases += 1;
        }
    }
    println!("criterion 7 PASS - construction matches brute force on {cases} (n, c1) pairs");
}

/// Criterion 8: the twisted class-difference polynomial has degree at most
/// s-2, with leading coefficient C(n-2, s-2) (c2 - sum b_i b_j) whenever
/// that is nonzero.
#[test]
fn criterion_08_lambda_polynomial_law() {
    let mut rng = Rng::new(0x5eed_0008);
    let mut checked = 0usize;
    while checked < 300 {
        let n = rng.range(3, 6) as usize;
        let ambient = rng.range(3, 6) as usize;
        let b = sorted((0..n).map(|_| rng.range(-4, 4)).collect());
        // classes share c1 with the split bundle; higher classes are free
        let mut classes = split_chern(&b, ambient).classes().to_vec();
        for c in classes.iter_mut().skip(1) {
            *c += BigInt::from(rng.range(-9, 9));
        }
        let data = ChernData::new(ambient, n as i64, classes);
        let delta2 = data.c2() - b.pairwise_product_sum();
        for s in 3..=n.min(ambient) {
            let lam = lambda_s(&data, &b, s).expect("preconditions hold");
            if let Some(deg) = lam.degree() {
                assert!(deg <= s - 2, "degree {deg} too big: s={s} b={b:?}");
            }
            if !delta2.is_zero() {
                assert_eq!(lam.degree(), Some(s - 2), "s={s} b={b:?}");
                let expect = rat_big(binomial(n as i64 - 2, (s - 2) as u32) * &delta2);
                assert_eq!(lam.leading().unwrap(), &expect, "s={s} b={b:?}");
            }
            checked += 1;
        }
    }
    println!("criterion 8 PASS - class-difference law verified on {checked} random instances");
}

/// Criterion 9: ideal sheaves of points have vanishing lower classes and top
/// class of magnitude M (N-1)! — unbounded under fixed (c1, c2, b). The
/// exact Koszul value carries the sign (-1)^N (pinned independently by
/// chi(I_points) = 1 - M).
#[test]
fn criterion_09_points_counterexample() {
    for ambient in 2..=4usize {
        for m in 1..=10i64 {
            let data = chern_from_koszul(&Subvariety::Points(m as u32), ambient).unwrap();
            for i in 1..ambient {
                assert!(data.class(i).is_zero(), "c_{i} N={ambient} M={m}");
            }
            let magnitude = BigInt::from(m) * factorial(ambient as u32 - 1);
            assert_eq!(data.class(ambient).abs(), magnitude, "N={ambient} M={m}");
            let sign = if ambient % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                data.class(ambient),
                BigInt::from(sign) * &magnitude,
                "N={ambient} M={m}"
            );
            // the characteristic pins the sign: chi(I_points) = 1 - M
            assert_eq!(euler_char(&data), rat_big(BigInt::from(1 - m)));
        }
    }
    println!("criterion 9 PASS - top class of M points is (-1)^N M (N-1)! for N in 2..4, M in 1..10");
}

/// Criterion 10: the non-positive-c2 window of the wide-window family is
/// exactly [-b+1, b-1], of size 2b-1 = b_1 - b_n - 1.
#[test]
fn criterion_10_negative_c2_window() {
    for b in 1..=5i64 {
        let d = catalog_named(&format!("wide_window_b{b}"));
        let w = negative_c2_window(&d.chern, &d.splitting).unwrap();
        let expected: Vec<BigInt> = (-b + 1..=b - 1).map(BigInt::from).collect();
        assert_eq!(w.twists, expected, "b={b}");
        assert_eq!(w.twists.len() as i64, 2 * b - 1, "b={b}");
        assert_eq!(w.size_bound, d.splitting.diameter() - 1, "b={b}");
        assert_eq!(w.twists.len() as i64, w.size_bound, "b={b}");
    }
    println!("criterion 10 PASS - window is exactly [-b+1, b-1] for b in 1..5");
}

/// Criterion 11: the recursive bounds dominate true cohomology on every
/// catalog member with closed-form cohomology (split bundles with entries in
/// [-3,3], n <= 3, N <= 4 — line bundles included), and on the
/// plane-restricted null-correlation data; the regularity bound dominates
/// the true regularity -b_n of split bundles.
#[test]
fn criterion_11_pqc_soundness() {
    fn split_h(b: &SplittingType, ambient: usize, i: usize, twist: i64) -> BigInt {
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

    let mut cases = 0usize;
    for n in 1..=3usize {
        for entries in sequences(n, -3, 3) {
            let b = SplittingType::new(entries).unwrap();
            for ambient in 2..=4usize {
                let c2 = b.pairwise_product_sum();
                let bounds =
                    cohomology_bounds(n as i64, ambient, b.sum(), &c2, &b).unwrap();
                for i in 0..=ambient {
                    assert!(
                        bounds.p(i) >= &split_h(&b, ambient, i, 0),
                        "P^{i} vs true h^{i} for {b:?} on P^{ambient}"
                    );
                }
                // vanishing at the threshold, on both sides
                let q: i64 = bounds
                    .vanishing_threshold()
                    .try_into()
                    .expect("threshold fits");
                for k in q..q + 3 {
                    for i in 1..=ambient {
                        assert!(split_h(&b, ambient, i, k).is_zero(), "h^{i}({k}) {b:?}");
                    }
                    assert!(split_h(&b, ambient, 0, -k).is_zero(), "h^0(-{k}) {b:?}");
                }
                let reg = regularity_bound(&bounds);
                assert!(reg.regularity >= BigInt::from(-b.last()), "regularity {b:?}");
                cases += 1;
            }
        }
    }

    // plane restriction of the null-correlation bundle: true (h^0, h^1, h^2)
    // is (1, 0, 0)
    let b = SplittingType::new(vec![0, 0]).unwrap();
    let bounds = cohomology_bounds(2, 2, 0, &BigInt::from(1), &b).unwrap();
    assert!(bounds.p(0) >= &BigInt::from(1));
    assert!(bounds.p(1) >= &BigInt::zero());
    assert!(bounds.p(2) >= &BigInt::zero());

    println!("criterion 11 PASS - bounds dominate known cohomology on {cases} split cases");
}

/// Criterion 12: round-trip and composition laws of the Chern calculus on
/// 500 random instances.
#[test]
fn criterion_12_chern_algebra_round_trips() {
    let mut rng = Rng::new(0x5eed_0012);
    for case in 0..500 {
        let ambient = rng.range(2, 6) as usize;
        let rand_data = |rng: &mut Rng, rank_lo: i64| {
            let rank = rng.range(rank_lo, 4);
            let classes: Vec<i64> = (0..ambient).map(|_| rng.range(-7, 7)).collect();
            ChernData::from_ints(ambient, rank, classes)
        };

        // extension product then quotient recovers the factor
        let sub = rand_data(&mut rng, 1);
        let quot = rand_data(&mut rng, 1);
        let total = whitney(&sub, &quot).unwrap();
        assert_eq!(whitney_quotient(&total, &sub).unwrap(), quot, "case {case}");

        // twist composition, symbolic consistency, dual involution
        let data = rand_data(&mut rng, 1);
        let l = rng.range(-6, 6);
        let m = rng.range(-6, 6);
        assert_eq!(
            twist_numeric(&twist_numeric(&data, l), m),
            twist_numeric(&data, l + m),
            "case {case}"
        );
        assert_eq!(twist_symbolic(&data).eval(l), twist_numeric(&data, l), "case {case}");
        assert_eq!(dual(&dual(&data)), data, "case {case}");

        // discriminant invariance under twist and dual
        let delta = discriminant(&data).unwrap();
        assert_eq!(discriminant(&dual(&data)).unwrap(), delta, "case {case}");
        assert_eq!(
            discriminant(&twist_numeric(&data, l)).unwrap(),
            delta,
            "case {case}"
        );

        // restriction commutes with split construction
        let len = rng.range(1, 4) as usize;
        let b = sorted((0..len).map(|_| rng.range(-5, 5)).collect());
        assert_eq!(
            restrict_hyperplane(&split_chern(&b, ambient + 1)).unwrap(),
            split_chern(&b, ambient),
            "case {case}"
        );
    }
    println!("criterion 12 PASS - algebra laws hold on 500 random instances");
}
