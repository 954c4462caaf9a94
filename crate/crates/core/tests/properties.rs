//! Property tests: ring laws of the exact cyclotomic arithmetic, report
//! round-trips, and deeper enumeration checks that back the closed forms.

use proptest::prelude::*;

use num_bigint::BigInt;
use tracecodes::code::{CodeEvaluator, CodeSpec};
use tracecodes::cyclotomy::{self, CyclotomicInteger};
use tracecodes::gf::Field;
use tracecodes::ring::Ring;
use tracecodes::spectrum::{CodeParams, SpectrumReport, WeightDistribution};
use tracecodes::theory;

fn cyclo(p: u64, coords: &[i64]) -> CyclotomicInteger {
    let mut acc = CyclotomicInteger::zero(p);
    for (t, &c) in coords.iter().enumerate() {
        let root = CyclotomicInteger::root_of_unity(p, t as u64);
        let scaled = root.mul(&CyclotomicInteger::from_int(p, c));
        acc = acc.add(&scaled);
    }
    acc
}

proptest! {
    #[test]
    fn cyclotomic_ring_laws(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        a in prop::collection::vec(-20i64..=20, 6),
        b in prop::collection::vec(-20i64..=20, 6),
        c in prop::collection::vec(-20i64..=20, 6),
    ) {
        let (x, y, z) = (cyclo(p, &a), cyclo(p, &b), cyclo(p, &c));
        // commutativity and associativity of multiplication
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        // distributivity
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        // subtraction inverts addition
        prop_assert_eq!(x.add(&y).sub(&y), x);
    }

    #[test]
    fn spectrum_report_json_round_trip(
        weights in prop::collection::btree_map(0u64..10_000, 1u64..1_000_000, 1..8),
    ) {
        let dist = WeightDistribution::from_pairs(weights.into_iter());
        let params = CodeParams { p: 3, s: 1, m: 2, e: 2, q: 3, r: 9, n: 36, gcd_em: 2 };
        let report = SpectrumReport::new(params, 72, 4, &dist, 81);
        let parsed: SpectrumReport = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(parsed, report);
    }
}

/// Every nilpotent codeword of the gcd = 4 example, evaluated directly: the
/// weights are constant on each cyclotomic class and match the predictor.
#[test]
fn gcd4_nilpotent_stratum_exhaustive() {
    let spec = CodeSpec::new(5, 1, 4, 4).unwrap();
    let field = spec.build_field().unwrap();
    let ev = CodeEvaluator::new(&field, spec).unwrap();
    let ring = Ring::new(&field);
    let predicted = theory::predict_gcd4(&field, &spec).unwrap();
    for beta in field.nonzero_elements() {
        let class = cyclotomy::cyclotomic_class(&field, beta, 4).unwrap();
        let w = ev.codeword_lee_weight(ring.element(field.zero(), beta));
        assert_eq!(
            w,
            predicted.class_weights[class as usize],
            "class {class} weight drifted at beta = {}",
            beta.code()
        );
    }
}

/// The general predictor also covers orders past the dedicated theorems;
/// check shape invariants for a gcd = 6 specification.
#[test]
fn general_predictor_handles_larger_gcd() {
    let spec = CodeSpec::new(7, 1, 6, 6).unwrap(); // r = 7^6, N = 6
    let field = spec.build_field().unwrap();
    let predicted = theory::predict_general(&field, &spec).unwrap();
    let r = spec.r();
    assert_eq!(predicted.distribution.total(), r * r);
    assert!(predicted.distribution.num_nonzero_weights() as u64 <= 7);
    assert_eq!(predicted.class_weights.len(), 6);
    // periods of order 6 sum to -1
    let sum: i64 = predicted.provenance.periods.iter().sum();
    assert_eq!(sum, -1);
}

/// Exact periods stay rational for every valid specification (the prime field
/// always lands in class zero when gcd(e, m) divides m).
#[test]
fn periods_rational_across_specs() {
    for (p, s, m, e) in [
        (2u64, 1u32, 4u32, 1u64),
        (3, 1, 4, 2),
        (5, 1, 2, 4),
        (2, 2, 3, 3),
        (13, 1, 2, 2),
        (3, 2, 2, 4),
    ] {
        let spec = CodeSpec::new(p, s, m, e).unwrap();
        let field = spec.build_field().unwrap();
        for eta in cyclotomy::gaussian_periods(&field, spec.gcd_em()).unwrap() {
            assert!(eta.is_rational(), "irrational period at {:?}", (p, s, m, e));
        }
    }
}

/// Weight-zero pre-images are exactly the kernel of the evaluation map, so
/// the oracle's codeword count is r^2 on every desk-scale spec.
#[test]
fn evaluation_injectivity_via_oracle() {
    for (p, s, m, e) in [
        (2u64, 1u32, 2u32, 1u64),
        (3, 1, 2, 2),
        (5, 1, 2, 2),
        (2, 2, 2, 3),
    ] {
        let spec = CodeSpec::new(p, s, m, e).unwrap();
        let field = spec.build_field().unwrap();
        let ev = CodeEvaluator::new(&field, spec).unwrap();
        let out = ev.brute_force_spectrum(1_000_000_000, 2).unwrap();
        assert_eq!(out.codeword_count, spec.r() * spec.r());
        assert_eq!(out.distribution.frequency(0), 1);
        assert!(out.distribution.max_weight().unwrap() <= spec.gray_length());
    }
}

/// The closed-form period polynomial formulas produce integral coefficients
/// across a sweep of (r, N) pairs, and the exact expansion agrees.
#[test]
fn period_polynomial_integrality_sweep() {
    for (p, a) in [
        (2u64, 4u32),
        (2, 6),
        (3, 2),
        (3, 4),
        (5, 2),
        (5, 4),
        (7, 2),
        (11, 2),
    ] {
        let field = Field::build(p, a).unwrap();
        let rm1 = field.order();
        for n in [1u64, 2, 3, 4, 5, 6, 8, 12] {
            if !rm1.is_multiple_of(n) {
                continue;
            }
            let psi = cyclotomy::period_polynomial(&field, n).unwrap();
            assert_eq!(psi.coeffs().len() as u64, n + 1);
            assert_eq!(psi.coeffs().last().unwrap(), &BigInt::from(1));
            // every exact rational period is a root
            for eta in cyclotomy::gaussian_periods(&field, n).unwrap() {
                if let Some(v) = eta.rational_value() {
                    assert!(psi.is_root(&v));
                }
            }
        }
    }
}
