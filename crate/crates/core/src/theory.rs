//! Closed-form Lee weight distribution predictors and the Griesmer bound
//! check.
//!
//! Every codeword of `C_q(m, e)` has Lee weight `0` (the zero word),
//! `2 (q-1)/(eq) (r^2 - r)` (units), or
//! `2 (q-1)/(eq) (r^2 - r (1 + N eta_i))` where `a = u beta` with `beta` in the
//! cyclotomic class `i` of order `N = gcd(e, m)`. [`predict_general`] feeds the
//! exact Gaussian periods into that formula; the per-`N` predictors substitute
//! the classical closed forms of the periods instead and therefore constitute
//! an independent route, cross-checked against the exact one.
//!
//! Sign ambiguities (`d`, `d1`, `v1` are determined only up to sign) never
//! change the predicted distribution (flipping the sign permutes classes of
//! equal frequency), but they do change which class carries which weight. The
//! predictors resolve the assignment against the exact periods and report the
//! resolved sign.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::code::{CodeSpec, Stratum};
use crate::cyclotomy::{
    self, closed_form_periods, quadratic_period_class0, ClosedFormPeriods, DiophantineKind,
};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::spectrum::{Provenance, SpectrumReport, WeightDistribution};

/// A predicted distribution together with its per-stratum weights and
/// provenance.
#[derive(Clone, PartialEq, Debug)]
pub struct PredictedDistribution {
    pub spec: CodeSpec,
    pub distribution: WeightDistribution,
    pub unit_weight: u64,
    /// Weight of the stratum `u * C_i^((N,r))`, indexed by class.
    pub class_weights: Vec<u64>,
    pub provenance: Provenance,
    pub erratum: Option<String>,
}

impl PredictedDistribution {
    /// Full report with provenance and erratum attached; the codeword count is
    /// `r^2` since evaluation is injective.
    pub fn report(&self) -> SpectrumReport {
        let spec = &self.spec;
        let r = spec.r();
        let mut report = SpectrumReport::new(
            spec.params(),
            spec.gray_length(),
            spec.dimension(),
            &self.distribution,
            r * r,
        );
        report.provenance = Some(self.provenance.clone());
        report.erratum = self.erratum.clone();
        report
    }
}

/// `2 (q-1) arg / (e q)` with a hard integrality check.
fn stratum_weight(spec: &CodeSpec, arg: i128) -> Result<u64> {
    let num = 2 * (spec.q() - 1) as i128 * arg;
    let den = (spec.e() * spec.q()) as i128;
    if num % den != 0 {
        return Err(Error::Internal(format!(
            "stratum weight 2(q-1){arg}/(eq) is not an integer"
        )));
    }
    let w = num / den;
    if w < 0 || w as u128 > 2 * spec.n() as u128 {
        return Err(Error::Internal(format!("stratum weight {w} out of range")));
    }
    Ok(w as u64)
}

fn assemble(
    spec: &CodeSpec,
    unit_weight: u64,
    class_weights: Vec<u64>,
    provenance: Provenance,
) -> Result<PredictedDistribution> {
    let r = spec.r();
    let n_ord = spec.gcd_em();
    debug_assert_eq!(class_weights.len() as u64, n_ord);
    let mut distribution = WeightDistribution::new();
    distribution.add(0, 1);
    distribution.add(unit_weight, r * r - r);
    for &w in &class_weights {
        distribution.add(w, (r - 1) / n_ord);
    }
    if distribution.total() != r * r {
        return Err(Error::Internal(
            "predicted frequencies do not sum to r^2".into(),
        ));
    }
    if distribution.num_nonzero_weights() as u64 > n_ord + 1 {
        return Err(Error::Internal(
            "more than N + 1 nonzero weights predicted".into(),
        ));
    }
    Ok(PredictedDistribution {
        spec: *spec,
        distribution,
        unit_weight,
        class_weights,
        provenance,
        erratum: known_errata(spec),
    })
}

fn exact_periods(field: &Field, spec: &CodeSpec) -> Result<Vec<i64>> {
    let periods = cyclotomy::gaussian_periods(field, spec.gcd_em())?;
    periods
        .iter()
        .map(|eta| {
            eta.rational_value()
                .as_ref()
                .and_then(BigInt::to_i64)
                .ok_or_else(|| {
                    Error::Internal(
                        "irrational Gaussian period for a valid code specification".into(),
                    )
                })
        })
        .collect()
}

/// Exact-period predictor, valid for every `N = gcd(e, m)`.
pub fn predict_general(field: &Field, spec: &CodeSpec) -> Result<PredictedDistribution> {
    let periods = exact_periods(field, spec)?;
    let r = spec.r() as i128;
    let n_ord = spec.gcd_em() as i128;
    let unit_weight = stratum_weight(spec, r * r - r)?;
    let class_weights = periods
        .iter()
        .map(|&eta| stratum_weight(spec, r * r - r * (1 + n_ord * eta as i128)))
        .collect::<Result<Vec<u64>>>()?;
    let provenance = Provenance {
        theorem: "general".into(),
        case: format!("exact Gaussian periods of order {}", spec.gcd_em()),
        sign: None,
        periods,
    };
    assemble(spec, unit_weight, class_weights, provenance)
}

/// Two-weight predictor for `gcd(e, m) = 1`.
pub fn predict_gcd1(spec: &CodeSpec) -> Result<PredictedDistribution> {
    if spec.gcd_em() != 1 {
        return Err(Error::WrongGcd {
            expected: 1,
            actual: spec.gcd_em(),
        });
    }
    let r = spec.r() as i128;
    let unit_weight = stratum_weight(spec, r * r - r)?;
    let nilpotent_weight = stratum_weight(spec, r * r)?;
    let provenance = Provenance {
        theorem: "gcd=1".into(),
        case: "two-weight".into(),
        sign: None,
        periods: vec![-1],
    };
    assemble(spec, unit_weight, vec![nilpotent_weight], provenance)
}

/// Three-weight predictor for `gcd(e, m) = 2`; the class assignment follows
/// the sign rule of the quadratic-period closed form (`p mod 4` and the parity
/// of `sm/2`).
pub fn predict_gcd2(spec: &CodeSpec) -> Result<PredictedDistribution> {
    if spec.gcd_em() != 2 {
        return Err(Error::WrongGcd {
            expected: 2,
            actual: spec.gcd_em(),
        });
    }
    let a = spec.s() * spec.m();
    let eta0 = quadratic_period_class0(spec.p(), a)?;
    let eta1 = -1 - eta0;
    let r = spec.r() as i128;
    let unit_weight = stratum_weight(spec, r * r - r)?;
    let class_weights = vec![
        stratum_weight(spec, r * r - r * (1 + 2 * eta0 as i128))?,
        stratum_weight(spec, r * r - r * (1 + 2 * eta1 as i128))?,
    ];
    let provenance = Provenance {
        theorem: "gcd=2".into(),
        case: format!(
            "three-weight, p mod 4 = {}, sm/2 parity {}",
            spec.p() % 4,
            (a / 2) % 2
        ),
        sign: Some(format!("eta_0 = {eta0} fixed by the closed-form sign rule")),
        periods: vec![eta0, eta1],
    };
    assemble(spec, unit_weight, class_weights, provenance)
}

/// Expand closed-form roots into a sorted multiset.
fn expanded_roots(cf: &ClosedFormPeriods) -> Result<Vec<i64>> {
    let roots = cf.rational_roots().ok_or_else(|| {
        Error::NoClosedForm("irrational periods where a rational case was expected".into())
    })?;
    let mut out = Vec::new();
    for r in roots {
        for _ in 0..r.multiplicity {
            out.push(r.value);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn check_multiset(exact: &[i64], closed: &[i64]) -> Result<()> {
    let mut sorted = exact.to_vec();
    sorted.sort_unstable();
    if sorted != closed {
        return Err(Error::Internal(format!(
            "closed-form periods {closed:?} disagree with exact periods {sorted:?}"
        )));
    }
    Ok(())
}

/// Resolve which sign of the ambiguous component maps the formula-ordered
/// pair onto the class-ordered exact periods.
fn resolve_pair_sign(exact: &[i64], fixed: &[i64], pair_plus: (i64, i64)) -> i64 {
    // class indices not consumed by the sign-independent roots, in order
    let mut fixed_pool = fixed.to_vec();
    let mut free = Vec::new();
    for &eta in exact {
        if let Some(pos) = fixed_pool.iter().position(|&v| v == eta) {
            fixed_pool.swap_remove(pos);
        } else {
            free.push(eta);
        }
    }
    if free == [pair_plus.0, pair_plus.1] {
        1
    } else {
        -1
    }
}

/// Predictor for `gcd(e, m) = 3` from the cubic-period closed forms.
pub fn predict_gcd3(field: &Field, spec: &CodeSpec) -> Result<PredictedDistribution> {
    if spec.gcd_em() != 3 {
        return Err(Error::WrongGcd {
            expected: 3,
            actual: spec.gcd_em(),
        });
    }
    let a = spec.s() * spec.m();
    let cf = closed_form_periods(spec.p(), a, 3)?;
    let closed = expanded_roots(&cf)?;
    let exact = exact_periods(field, spec)?;
    check_multiset(&exact, &closed)?;

    let r = spec.r() as i128;
    let unit_weight = stratum_weight(spec, r * r - r)?;
    let class_weights = exact
        .iter()
        .map(|&eta| stratum_weight(spec, r * r - r * (1 + 3 * eta as i128)))
        .collect::<Result<Vec<u64>>>()?;

    let (case, sign) = match &cf {
        ClosedFormPeriods::Rational {
            case,
            diophantine,
            roots,
        } => {
            let sign = diophantine
                .iter()
                .find(|d| d.kind == DiophantineKind::CubicLifted)
                .map(|lifted| {
                    let (c1, d1) = (lifted.first, lifted.second as i64);
                    let rho = arith::checked_pow(spec.p(), a / 3).expect("cbrt fits") as i64;
                    let fixed = [(-1 + c1 * rho) / 3];
                    let plus = (
                        (-1 - (c1 + 9 * d1) / 2 * rho) / 3,
                        (-1 - (c1 - 9 * d1) / 2 * rho) / 3,
                    );
                    let sigma = resolve_pair_sign(&exact, &fixed, plus);
                    format!("d1 = {} (resolved by exact periods)", sigma * d1)
                });
            let _ = roots;
            (case.clone(), sign)
        }
        ClosedFormPeriods::NoRationalForm { case, .. } => (case.clone(), None),
    };
    let provenance = Provenance {
        theorem: "gcd=3".into(),
        case,
        sign,
        periods: exact,
    };
    assemble(spec, unit_weight, class_weights, provenance)
}

/// Predictor for `gcd(e, m) = 4` from the quartic-period closed forms.
///
/// The weights follow the period-polynomial factorization: the `u1` pair of
/// roots carries `-1 - sqrt(r)` and the `v1` pair `-1 + sqrt(r)`. Published
/// distribution tables for this case transpose that pairing; direct
/// enumeration confirms the factorization side, so the transposition is
/// reported as an erratum.
pub fn predict_gcd4(field: &Field, spec: &CodeSpec) -> Result<PredictedDistribution> {
    if spec.gcd_em() != 4 {
        return Err(Error::WrongGcd {
            expected: 4,
            actual: spec.gcd_em(),
        });
    }
    let a = spec.s() * spec.m();
    let cf = closed_form_periods(spec.p(), a, 4)?;
    let closed = expanded_roots(&cf)?;
    let exact = exact_periods(field, spec)?;
    check_multiset(&exact, &closed)?;

    let r = spec.r() as i128;
    let unit_weight = stratum_weight(spec, r * r - r)?;
    let class_weights = exact
        .iter()
        .map(|&eta| stratum_weight(spec, r * r - r * (1 + 4 * eta as i128)))
        .collect::<Result<Vec<u64>>>()?;

    let (case, sign) = match &cf {
        ClosedFormPeriods::Rational {
            case, diophantine, ..
        } => {
            let sign = diophantine
                .iter()
                .find(|d| d.kind == DiophantineKind::QuarticLifted)
                .map(|lifted| {
                    let (u1, v1) = (lifted.first, lifted.second as i64);
                    let sq = arith::checked_pow(spec.p(), a / 2).expect("sqrt fits") as i64;
                    let rho = arith::checked_pow(spec.p(), a / 4).expect("4th root fits") as i64;
                    let fixed = [(-1 - sq - 2 * u1 * rho) / 4, (-1 - sq + 2 * u1 * rho) / 4];
                    let plus = ((-1 + sq - 4 * v1 * rho) / 4, (-1 + sq + 4 * v1 * rho) / 4);
                    let sigma = resolve_pair_sign(&exact, &fixed, plus);
                    format!(
                        "u1 = {u1}, v1 = {} (v1 sign resolved by exact periods)",
                        sigma * v1
                    )
                });
            (case.clone(), sign)
        }
        ClosedFormPeriods::NoRationalForm { case, .. } => (case.clone(), None),
    };
    let mut predicted = assemble(
        spec,
        unit_weight,
        class_weights,
        Provenance {
            theorem: "gcd=4".into(),
            case,
            sign,
            periods: exact,
        },
    )?;
    let table_note = "published gcd=4 weight tables transpose the sqrt(r) pairing between the \
                      u1 and v1 rows; these weights follow the period-polynomial factorization"
        .to_string();
    predicted.erratum = Some(match predicted.erratum {
        Some(existing) => format!("{existing}; {table_note}"),
        None => table_note,
    });
    Ok(predicted)
}

/// Dispatch on `gcd(e, m)`: the dedicated predictor for `N <= 4`, the general
/// exact-period predictor otherwise.
pub fn predict_auto(field: &Field, spec: &CodeSpec) -> Result<PredictedDistribution> {
    match spec.gcd_em() {
        1 => predict_gcd1(spec),
        2 => predict_gcd2(spec),
        3 => predict_gcd3(field, spec),
        4 => predict_gcd4(field, spec),
        _ => predict_general(field, spec),
    }
}

/// Outcome of the Griesmer sum `sum over j < k of ceil(d / q^j)` against the
/// Gray length.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GriesmerVerdict {
    /// The sum equals the length: the code is length-optimal.
    Equality,
    /// The sum equals length minus one.
    NMinusOne,
    /// Any other slack `n - sum`.
    Slack(i64),
}

impl std::fmt::Display for GriesmerVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GriesmerVerdict::Equality => write!(f, "equality"),
            GriesmerVerdict::NMinusOne => write!(f, "n_minus_one"),
            GriesmerVerdict::Slack(t) => write!(f, "slack({t})"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GriesmerReport {
    pub gray_length: u64,
    pub dimension: u32,
    pub min_distance: u64,
    pub sum: u64,
    pub verdict: GriesmerVerdict,
}

/// Evaluate the Griesmer sum for the Gray image `[2n, 2m, d]_q` exactly.
pub fn griesmer_check(spec: &CodeSpec, min_distance: u64) -> GriesmerReport {
    let q = spec.q() as u128;
    let mut sum: u64 = 0;
    let mut qj: u128 = 1;
    for _ in 0..spec.dimension() {
        sum += ((min_distance as u128).div_ceil(qj)) as u64;
        qj *= q;
    }
    let n_gray = spec.gray_length();
    let verdict = if sum == n_gray {
        GriesmerVerdict::Equality
    } else if sum + 1 == n_gray {
        GriesmerVerdict::NMinusOne
    } else {
        GriesmerVerdict::Slack(n_gray as i64 - sum as i64)
    };
    GriesmerReport {
        gray_length: n_gray,
        dimension: spec.dimension(),
        min_distance,
        sum,
        verdict,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightMismatch {
    pub weight: u64,
    pub predicted: u64,
    pub observed: u64,
}

/// Exact equality verdict between a prediction and an observed distribution.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CompareReport {
    pub matches: bool,
    pub mismatches: Vec<WeightMismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

pub fn compare(predicted: &PredictedDistribution, observed: &WeightDistribution) -> CompareReport {
    let mut weights: Vec<u64> = predicted
        .distribution
        .iter()
        .map(|(w, _)| w)
        .chain(observed.iter().map(|(w, _)| w))
        .collect();
    weights.sort_unstable();
    weights.dedup();
    let mismatches: Vec<WeightMismatch> = weights
        .into_iter()
        .filter_map(|w| {
            let p = predicted.distribution.frequency(w);
            let o = observed.frequency(w);
            (p != o).then_some(WeightMismatch {
                weight: w,
                predicted: p,
                observed: o,
            })
        })
        .collect();
    CompareReport {
        matches: mismatches.is_empty(),
        mismatches,
        sign: predicted.provenance.sign.clone(),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StratumMismatch {
    pub stratum: String,
    pub predicted: u64,
    pub measured: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StrataCompareReport {
    pub matches: bool,
    pub mismatches: Vec<StratumMismatch>,
}

/// Per-stratum comparison for representative mode.
pub fn compare_strata(
    predicted: &PredictedDistribution,
    measured: &[(Stratum, u64)],
) -> StrataCompareReport {
    let mut mismatches = Vec::new();
    for &(stratum, w) in measured {
        let expected = match stratum {
            Stratum::Unit => predicted.unit_weight,
            Stratum::Nilpotent(i) => predicted.class_weights[i as usize],
        };
        if expected != w {
            mismatches.push(StratumMismatch {
                stratum: stratum.to_string(),
                predicted: expected,
                measured: w,
            });
        }
    }
    StrataCompareReport {
        matches: mismatches.is_empty(),
        mismatches,
    }
}

/// Verified corrections to published worked examples of this construction.
pub fn known_errata(spec: &CodeSpec) -> Option<String> {
    let key = (spec.p(), spec.s(), spec.m(), spec.e());
    match key {
        (7, 1, 3, 6) => Some(
            "published example prints 144z^329 and minimum distance 329; enumeration gives \
             frequency 114 = (r-1)/3, weight 32928 and minimum distance 30870"
                .into(),
        ),
        (2, 2, 3, 3) => Some(
            "published example prints frequencies 12 and 24; enumeration gives 21 = (r-1)/3 \
             and 42 = 2(r-1)/3"
                .into(),
        ),
        (5, 1, 4, 4) => Some(
            "published example prints nilpotent weights {142500, 157500, 152500, 172500}; \
             direct evaluation gives {140000, 155000, 160000, 170000}"
                .into(),
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{CodeEvaluator, DEFAULT_WORK_BUDGET};

    fn dist(pairs: &[(u64, u64)]) -> WeightDistribution {
        WeightDistribution::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn gcd1_published_rows() {
        let spec = CodeSpec::new(2, 1, 3, 1).unwrap();
        let p = predict_gcd1(&spec).unwrap();
        assert_eq!(p.distribution, dist(&[(0, 1), (56, 56), (64, 7)]));
        let spec = CodeSpec::new(7, 1, 1, 2).unwrap();
        let p = predict_gcd1(&spec).unwrap();
        assert_eq!(p.distribution, dist(&[(0, 1), (36, 42), (42, 6)]));
        let spec = CodeSpec::new(3, 2, 1, 2).unwrap();
        let p = predict_gcd1(&spec).unwrap();
        assert_eq!(p.distribution, dist(&[(0, 1), (64, 72), (72, 8)]));
    }

    #[test]
    fn gcd2_three_weight_example() {
        let spec = CodeSpec::new(3, 1, 2, 2).unwrap();
        let p = predict_gcd2(&spec).unwrap();
        assert_eq!(p.distribution, dist(&[(0, 1), (36, 4), (48, 72), (72, 4)]));
        assert_eq!(p.unit_weight, 48);
        assert_eq!(p.distribution.frequency(p.unit_weight), 72); // r^2 - r
        assert_eq!(p.class_weights, vec![36, 72]); // eta_0 = 1 puts class 0 low
    }

    #[test]
    fn gcd3_published_and_corrected() {
        // q = 7, m = 3, e = 6: corrected weights with c1 = d1 = 1
        let spec = CodeSpec::new(7, 1, 3, 6).unwrap();
        let field = spec.build_field().unwrap();
        let p = predict_gcd3(&field, &spec).unwrap();
        assert_eq!(p.unit_weight, 33516);
        let mut class = p.class_weights.clone();
        class.sort_unstable();
        assert_eq!(class, vec![30870, 32928, 37044]);
        assert_eq!(
            p.distribution,
            dist(&[
                (0, 1),
                (30870, 114),
                (32928, 114),
                (33516, 117306),
                (37044, 114)
            ])
        );
        assert!(p.erratum.is_some());
        // q = 4, m = 3, e = 3
        let spec = CodeSpec::new(2, 2, 3, 3).unwrap();
        let field = spec.build_field().unwrap();
        let p = predict_gcd3(&field, &spec).unwrap();
        assert_eq!(
            p.distribution,
            dist(&[(0, 1), (1536, 21), (2016, 4032), (2304, 42)])
        );
    }

    #[test]
    fn gcd4_verified_weights() {
        let spec = CodeSpec::new(5, 1, 4, 4).unwrap();
        let field = spec.build_field().unwrap();
        let p = predict_gcd4(&field, &spec).unwrap();
        assert_eq!(p.unit_weight, 156000);
        let mut class = p.class_weights.clone();
        class.sort_unstable();
        assert_eq!(class, vec![140000, 155000, 160000, 170000]);
        assert_eq!(
            p.distribution,
            dist(&[
                (0, 1),
                (140000, 156),
                (155000, 156),
                (156000, 390000),
                (160000, 156),
                (170000, 156)
            ])
        );
        assert!(p.erratum.as_deref().unwrap().contains("transpose"));
        assert!(p.provenance.sign.as_deref().unwrap().contains("u1 = -3"));
    }

    #[test]
    fn predictors_agree_with_general() {
        let battery = [
            (2u64, 1u32, 3u32, 1u64),
            (3, 1, 2, 1),
            (3, 1, 2, 2),
            (2, 2, 2, 3),
            (5, 1, 1, 1),
            (5, 1, 2, 2),
            (7, 1, 2, 2),
            (2, 2, 3, 3),
            (7, 1, 3, 6),
            (7, 1, 3, 3),
            (7, 2, 3, 3), // gcd = 3 with s > 1: lifted target 4 p^(sm/3)
            (5, 1, 4, 4),
            (5, 2, 4, 4), // gcd = 4 with s > 1: lifted target p^(sm/2)
            (3, 2, 4, 4), // gcd = 4 with p = 3 mod 4
        ];
        for (p, s, m, e) in battery {
            let spec = CodeSpec::new(p, s, m, e).unwrap();
            let field = spec.build_field().unwrap();
            let general = predict_general(&field, &spec).unwrap();
            let auto = predict_auto(&field, &spec).unwrap();
            assert_eq!(
                general.distribution,
                auto.distribution,
                "general vs dedicated predictor at {:?}",
                (p, s, m, e)
            );
            assert_eq!(general.unit_weight, auto.unit_weight);
            assert_eq!(general.class_weights, auto.class_weights);
        }
    }

    #[test]
    fn predictions_match_the_oracle() {
        let battery = [
            (2u64, 1u32, 1u32, 1u64),
            (2, 1, 3, 1),
            (3, 1, 2, 1),
            (3, 1, 2, 2),
            (2, 2, 2, 3),
            (5, 1, 1, 1),
            (5, 1, 1, 4),
            (7, 1, 1, 2),
            (3, 2, 1, 2),
            (3, 2, 1, 8),
            (5, 1, 2, 2),
            (2, 2, 3, 3),
            (3, 1, 4, 2),
        ];
        for (p, s, m, e) in battery {
            let spec = CodeSpec::new(p, s, m, e).unwrap();
            let field = spec.build_field().unwrap();
            let ev = CodeEvaluator::new(&field, spec).unwrap();
            let oracle = ev.brute_force_spectrum(DEFAULT_WORK_BUDGET, 4).unwrap();
            let predicted = predict_general(&field, &spec).unwrap();
            let report = compare(&predicted, &oracle.distribution);
            assert!(
                report.matches,
                "{:?}: {:?}",
                (p, s, m, e),
                report.mismatches
            );
            assert_eq!(oracle.codeword_count, spec.r() * spec.r());
        }
    }

    #[test]
    fn weight_arithmetic_invariants() {
        for (p, s, m, e) in [
            (3u64, 1u32, 2u32, 2u64),
            (7, 1, 3, 6),
            (5, 1, 4, 4),
            (2, 2, 3, 3),
        ] {
            let spec = CodeSpec::new(p, s, m, e).unwrap();
            let field = spec.build_field().unwrap();
            let pred = predict_general(&field, &spec).unwrap();
            let n_ord = spec.gcd_em();
            assert!(pred.distribution.num_nonzero_weights() as u64 <= n_ord + 1);
            // every weight is 2(q-1)/(eq) times an integer
            for (w, _) in pred.distribution.iter() {
                let lhs = (w as u128) * (spec.e() * spec.q()) as u128;
                assert_eq!(lhs % (2 * (spec.q() - 1)) as u128, 0);
            }
            assert_eq!(pred.distribution.total(), spec.r() * spec.r());
        }
    }

    #[test]
    fn griesmer_examples() {
        // q = 4, m = 2, e = 3: equality at sum 160
        let spec = CodeSpec::new(2, 2, 2, 3).unwrap();
        let report = griesmer_check(&spec, 120);
        assert_eq!(report.sum, 160);
        assert_eq!(report.verdict, GriesmerVerdict::Equality);
        // q = 2, m = 3, e = 1: sum 111 = n - 1
        let spec = CodeSpec::new(2, 1, 3, 1).unwrap();
        let report = griesmer_check(&spec, 56);
        assert_eq!(report.sum, 111);
        assert_eq!(report.verdict, GriesmerVerdict::NMinusOne);
        // q = 9, m = 1, e = 2: equality at 72
        let spec = CodeSpec::new(3, 2, 1, 2).unwrap();
        let report = griesmer_check(&spec, 64);
        assert_eq!(report.sum, 72);
        assert_eq!(report.verdict, GriesmerVerdict::Equality);
    }

    #[test]
    fn comparison_localizes_mismatches() {
        let spec = CodeSpec::new(3, 1, 2, 2).unwrap();
        let good = predict_gcd2(&spec).unwrap();
        let observed = good.distribution.clone();
        assert!(compare(&good, &observed).matches);
        // flip the two class weights: the mismatch localizes to those weights
        let mut bad = good.clone();
        bad.class_weights.swap(0, 1);
        let mut d = WeightDistribution::new();
        d.add(0, 1);
        d.add(bad.unit_weight, 72);
        d.add(30, 4); // deliberately wrong low weight
        d.add(72, 4);
        bad.distribution = d;
        let report = compare(&bad, &observed);
        assert!(!report.matches);
        let weights: Vec<u64> = report.mismatches.iter().map(|m| m.weight).collect();
        assert_eq!(weights, vec![30, 36]);
    }

    #[test]
    fn representative_comparison() {
        let spec = CodeSpec::new(7, 1, 3, 6).unwrap();
        let field = spec.build_field().unwrap();
        let ev = CodeEvaluator::new(&field, spec).unwrap();
        let measured = ev.representative_spectrum();
        let predicted = predict_gcd3(&field, &spec).unwrap();
        let report = compare_strata(&predicted, &measured);
        assert!(report.matches, "{:?}", report.mismatches);
    }
}
