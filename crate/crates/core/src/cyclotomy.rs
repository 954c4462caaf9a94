//! Characters, Gauss sums, cyclotomic classes and exact Gaussian periods.
//!
//! Periods are computed as exact elements of `Z[zeta_p]`: bucket the elements
//! of a cyclotomic class by absolute trace, then read the bucket counts as
//! coordinates over the power basis `{1, zeta, ..., zeta^(p-2)}` with
//! `zeta^(p-1)` rewritten as `-(1 + zeta + ... + zeta^(p-2))`. All period and
//! period-polynomial arithmetic is exact; floating point only appears in the
//! numeric Gauss-sum checks.
//!
//! For orders 2, 3 and 4 the period polynomial has classical closed forms
//! driven by the Diophantine normalizations `4r = c^2 + 27d^2` (with
//! `c = 1 mod 3`) and `r = u^2 + 4v^2` (with `u = 1 mod 4`), plus their lifted
//! variants for the factored cases. Note that the lifted targets scale with the
//! full extension degree over the prime field: for `r = p^a` they are
//! `4p^(a/3)` and `p^(a/2)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Fel, Field};

/// An element of `Z[zeta_p]` in the power basis `{zeta^0, ..., zeta^(p-2)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicInteger {
    p: u64,
    coords: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 2);
        CyclotomicInteger {
            p,
            coords: vec![BigInt::zero(); (p - 1) as usize],
        }
    }

    pub fn from_int(p: u64, v: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(p);
        out.coords[0] = v.into();
        out
    }

    /// `zeta_p^t`, canonicalized.
    pub fn root_of_unity(p: u64, t: u64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[(t % p) as usize] = 1;
        Self::from_root_counts(p, &counts)
    }

    /// `sum counts[t] * zeta_p^t` for `t` in `0..p`, canonicalized.
    pub fn from_root_counts(p: u64, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize);
        let top = counts[(p - 1) as usize];
        let mut out = Self::zero(p);
        for (i, slot) in out.coords.iter_mut().enumerate() {
            *slot = BigInt::from(counts[i] - top);
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicInteger { p: self.p, coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicInteger { p: self.p, coords }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger {
            p: self.p,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let pm1 = (self.p - 1) as usize;
        let mut raw = vec![BigInt::zero(); 2 * pm1 - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        // fold exponents >= p down by zeta^p = 1, then canonicalize zeta^(p-1)
        let mut folded = vec![BigInt::zero(); self.p as usize];
        for (e, v) in raw.into_iter().enumerate() {
            let idx = if e >= self.p as usize {
                e - self.p as usize
            } else {
                e
            };
            folded[idx] += v;
        }
        let top = folded.pop().expect("length p");
        let coords = folded.into_iter().map(|c| c - &top).collect();
        CyclotomicInteger { p: self.p, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Numeric value under `zeta_p -> e^(2 pi i / p)`.
    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, c) in self.coords.iter().enumerate() {
            let angle = 2.0 * PI * t as f64 / self.p as f64;
            acc += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Rational elements have all non-constant coordinates equal (to zero) in
    /// the canonical basis representation.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn rational_value(&self) -> Option<BigInt> {
        self.is_rational().then(|| self.coords[0].clone())
    }
}

/// Canonical additive character `x -> zeta_p^(Tr(x))`, exact.
pub fn additive_character(field: &Field, x: Fel) -> CyclotomicInteger {
    CyclotomicInteger::root_of_unity(field.p(), field.absolute_trace(x))
}

/// Canonical additive character as a complex number.
pub fn additive_character_numeric(field: &Field, x: Fel) -> Complex64 {
    let t = field.absolute_trace(x) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * t / field.p() as f64)
}

/// Multiplicative character `psi_j(g^k) = e^(2 pi i jk / (q-1))`.
pub fn multiplicative_character(field: &Field, j: u64, x: Fel) -> Result<Complex64> {
    let n = field.order();
    if j > n.saturating_sub(1) {
        return Err(Error::CharacterIndex { j, max: n - 1 });
    }
    let k = field.discrete_log(x).map_err(|_| Error::ZeroArgument)?;
    Ok(Complex64::from_polar(
        1.0,
        2.0 * PI * (j as f64) * (k as f64) / n as f64,
    ))
}

/// The quadratic character as `+1` / `-1`; requires an odd field.
pub fn quadratic_character(field: &Field, x: Fel) -> Result<i64> {
    if field.size().is_multiple_of(2) {
        return Err(Error::EvenField(field.size()));
    }
    let k = field.discrete_log(x).map_err(|_| Error::ZeroArgument)?;
    Ok(if k % 2 == 0 { 1 } else { -1 })
}

/// Gauss sum `G(psi_j, chi) = sum over nonzero c of psi_j(c) chi(c)`, numeric.
pub fn gauss_sum_numeric(field: &Field, j: u64) -> Result<Complex64> {
    let n = field.order();
    if j > n - 1 {
        return Err(Error::CharacterIndex { j, max: n - 1 });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for x in field.nonzero_elements() {
        sum += multiplicative_character(field, j, x)? * additive_character_numeric(field, x);
    }
    Ok(sum)
}

/// Closed form of the quadratic Gauss sum over `F_(p^s)`:
/// `(-1)^(s-1) sqrt(q)` when `p = 1 mod 4`, `(-1)^(s-1) i^s sqrt(q)` when
/// `p = 3 mod 4`.
pub fn quadratic_gauss_sum_closed_form(field: &Field) -> Result<Complex64> {
    let (p, s, q) = (field.p(), field.k(), field.size());
    if q % 2 == 0 {
        return Err(Error::EvenField(q));
    }
    let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
    let root_q = (q as f64).sqrt();
    let value = if p % 4 == 1 {
        Complex64::new(sign * root_q, 0.0)
    } else {
        i_pow(s) * sign * root_q
    };
    Ok(value)
}

fn i_pow(s: u32) -> Complex64 {
    match s % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Check the quadratic completion identity
/// `sum over c of chi(a2 c^2 + a1 c + a0) = chi(a0 - a1^2 (4 a2)^-1) eta(a2) G(eta, chi)`
/// by direct numeric summation of both sides (tolerance `1e-9`).
pub fn quadratic_sum_identity_check(field: &Field, a2: Fel, a1: Fel, a0: Fel) -> Result<bool> {
    if field.size().is_multiple_of(2) {
        return Err(Error::EvenField(field.size()));
    }
    if a2 == field.zero() {
        return Err(Error::ZeroArgument);
    }
    let mut lhs = Complex64::new(0.0, 0.0);
    for c in field.elements() {
        let fc = field.add(
            field.add(field.mul(a2, field.mul(c, c)), field.mul(a1, c)),
            a0,
        );
        lhs += additive_character_numeric(field, fc);
    }
    let four_a2 = field.mul(field.constant(4), a2);
    let shift = field.sub(a0, field.mul(field.mul(a1, a1), field.inv(four_a2)?));
    let eta_idx = field.order() / 2;
    let g = gauss_sum_numeric(field, eta_idx)?;
    let eta_a2 = quadratic_character(field, a2)? as f64;
    let rhs = additive_character_numeric(field, shift) * eta_a2 * g;
    Ok((lhs - rhs).norm() < 1e-9)
}

/// Index of the cyclotomic class of order `n` containing `x`.
pub fn cyclotomic_class(field: &Field, x: Fel, n: u64) -> Result<u64> {
    let rm1 = field.order();
    if n == 0 || !rm1.is_multiple_of(n) {
        return Err(Error::OrderDoesNotDivide { n, rm1 });
    }
    let l = field.discrete_log(x).map_err(|_| Error::ZeroArgument)?;
    Ok(l % n)
}

/// Size of every cyclotomic class of order `n`.
pub fn class_size(field: &Field, n: u64) -> Result<u64> {
    let rm1 = field.order();
    if n == 0 || !rm1.is_multiple_of(n) {
        return Err(Error::OrderDoesNotDivide { n, rm1 });
    }
    Ok(rm1 / n)
}

/// Check the multiset identity
/// `{xy : y in C_0^(e,r), x in F_q*} = ((q-1)/e) gcd(m,e) * C_0^((gcd(m,e)),r)`
/// by full enumeration. The field is `F_r` built as `F_(p^(s m))`.
pub fn multiset_product_check(field: &Field, s: u32, e: u64) -> Result<bool> {
    let k = field.k();
    if s == 0 || !k.is_multiple_of(s) {
        return Err(Error::BadTowerSplit { s, k });
    }
    let m = (k / s) as u64;
    let q = arith::checked_pow(field.p(), s).expect("subfield size fits");
    if e == 0 || !(q - 1).is_multiple_of(e) {
        return Err(Error::EMustDivideQMinus1 { e, qm1: q - 1 });
    }
    let rm1 = field.order();
    let g = arith::gcd(m, e);
    let step_q = rm1 / (q - 1); // F_q* = <alpha^step_q>

    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for i in 0..rm1 / e {
        let y = field.gen_pow(e * i);
        for j in 0..q - 1 {
            let x = field.gen_pow(step_q * j);
            *counts.entry(field.mul(x, y).code()).or_insert(0) += 1;
        }
    }

    let expected_mult = (q - 1) / e * g;
    let mut expected: BTreeMap<u32, u64> = BTreeMap::new();
    for i in 0..rm1 / g {
        expected.insert(field.gen_pow(g * i).code(), expected_mult);
    }
    Ok(counts == expected)
}

/// Exact Gaussian period `eta_i^((n,r))`: the additive character summed over
/// the class `C_i^((n,r))`.
pub fn gaussian_period(field: &Field, n: u64, class: u64) -> Result<CyclotomicInteger> {
    let rm1 = field.order();
    if n == 0 || !rm1.is_multiple_of(n) {
        return Err(Error::OrderDoesNotDivide { n, rm1 });
    }
    let p = field.p();
    let mut counts = vec![0i64; p as usize];
    let mut j = class % n;
    while j < rm1 {
        counts[field.absolute_trace(field.gen_pow(j)) as usize] += 1;
        j += n;
    }
    Ok(CyclotomicInteger::from_root_counts(p, &counts))
}

/// All periods of order `n`, indexed by class.
pub fn gaussian_periods(field: &Field, n: u64) -> Result<Vec<CyclotomicInteger>> {
    let rm1 = field.order();
    if n == 0 || !rm1.is_multiple_of(n) {
        return Err(Error::OrderDoesNotDivide { n, rm1 });
    }
    let p = field.p();
    let mut counts = vec![vec![0i64; p as usize]; n as usize];
    for j in 0..rm1 {
        counts[(j % n) as usize][field.absolute_trace(field.gen_pow(j)) as usize] += 1;
    }
    Ok(counts
        .iter()
        .map(|c| CyclotomicInteger::from_root_counts(p, c))
        .collect())
}

/// The monic integer polynomial whose roots are the periods of order `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeriodPolynomial {
    order: u64,
    r: u64,
    /// Ascending coefficients, length `order + 1`, leading coefficient 1.
    coeffs: Vec<BigInt>,
}

impl PeriodPolynomial {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_root(&self, x: &BigInt) -> bool {
        self.eval(x).is_zero()
    }

    /// Rational roots with multiplicities, by the rational root test over the
    /// divisors of the constant term (the polynomial is monic).
    pub fn rational_roots(&self) -> Vec<(i64, u32)> {
        let mut work = self.coeffs.clone();
        let mut roots: BTreeMap<i64, u32> = BTreeMap::new();
        while work.len() > 1 && work[0].is_zero() {
            *roots.entry(0).or_insert(0) += 1;
            work.remove(0);
        }
        if work.len() > 1 {
            let c0 = work[0]
                .abs()
                .to_u64()
                .expect("constant term fits u64 at this scale");
            for d in arith::divisors(c0) {
                for v in [d as i64, -(d as i64)] {
                    while work.len() > 1 && eval_big(&work, v).is_zero() {
                        *roots.entry(v).or_insert(0) += 1;
                        work = deflate(&work, v);
                    }
                }
            }
        }
        roots.into_iter().collect()
    }
}

fn eval_big(coeffs: &[BigInt], v: i64) -> BigInt {
    let x = BigInt::from(v);
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Synthetic division of a monic polynomial by `X - v`; the root must be exact.
fn deflate(coeffs: &[BigInt], v: i64) -> Vec<BigInt> {
    let x = BigInt::from(v);
    let n = coeffs.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        carry = coeffs[i + 1].clone() + &carry * &x;
        out[i] = carry.clone();
    }
    debug_assert!((coeffs[0].clone() + &carry * &x).is_zero());
    out
}

impl std::fmt::Display for PeriodPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = mag != BigInt::from(1) || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expand `prod (X - eta_i)` in exact cyclotomic-integer arithmetic and check
/// every coefficient is a rational integer.
pub fn period_polynomial(field: &Field, n: u64) -> Result<PeriodPolynomial> {
    let periods = gaussian_periods(field, n)?;
    let p = field.p();
    let mut coeffs = vec![CyclotomicInteger::from_int(p, 1)];
    for eta in &periods {
        let mut next = vec![CyclotomicInteger::zero(p); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(eta));
        }
        coeffs = next;
    }
    let ints = coeffs
        .iter()
        .map(|c| c.rational_value().ok_or(Error::NonIntegerCoefficient))
        .collect::<Result<Vec<BigInt>>>()?;
    Ok(PeriodPolynomial {
        order: n,
        r: field.size(),
        coeffs: ints,
    })
}

/// Which normalized two-square-like representation a solution satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiophantineKind {
    /// `4r = c^2 + 27d^2`, `c = 1 mod 3`, `gcd(c, p) = 1` when `p = 1 mod 3`.
    CubicFull,
    /// `4 r^(1/3) = c1^2 + 27 d1^2`, `c1 = 1 mod 3`, `gcd(c1, p) = 1`.
    CubicLifted,
    /// `r = u^2 + 4v^2`, `u = 1 mod 4`, `gcd(u, p) = 1` when `p = 1 mod 4`.
    QuarticFull,
    /// `r^(1/2) = u1^2 + 4 v1^2`, `u1 = 1 mod 4`, `gcd(u1, p) = 1`.
    QuarticLifted,
}

/// A normalized solution; the congruence fixes `first` uniquely (sign
/// included) while `second` is determined only up to sign and is stored
/// non-negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiophantineSolution {
    pub kind: DiophantineKind,
    pub target: u64,
    pub first: i64,
    pub second: u64,
    pub second_sign_free: bool,
}

/// Exhaustive search for the unique normalized solution of
/// `target = first^2 + w * second^2`.
pub fn solve_diophantine(
    kind: DiophantineKind,
    p: u64,
    target: u64,
) -> Result<DiophantineSolution> {
    let (w, c_mod, form, coprime) = match kind {
        DiophantineKind::CubicFull => (27u64, 3i64, "c^2 + 27 d^2", p % 3 == 1),
        DiophantineKind::CubicLifted => (27, 3, "c1^2 + 27 d1^2", true),
        DiophantineKind::QuarticFull => (4, 4, "u^2 + 4 v^2", p % 4 == 1),
        DiophantineKind::QuarticLifted => (4, 4, "u1^2 + 4 v1^2", true),
    };
    let mut found: Option<(i64, u64)> = None;
    for second in 0..=arith::isqrt(target / w) {
        let rem = target - w * second * second;
        let Some(z) = arith::exact_sqrt(rem) else {
            continue;
        };
        for cand in [z as i64, -(z as i64)] {
            if cand.rem_euclid(c_mod) != 1 {
                continue;
            }
            if coprime && arith::gcd(z, p) != 1 {
                continue;
            }
            match found {
                None => found = Some((cand, second)),
                Some(prev) if prev == (cand, second) => {}
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "ambiguous normalization of {target} = {form}"
                    )))
                }
            }
        }
    }
    let (first, second) = found.ok_or(Error::NoDiophantineSolution { target, form })?;
    Ok(DiophantineSolution {
        kind,
        target,
        first,
        second,
        second_sign_free: second != 0,
    })
}

/// A closed-form root with its multiplicity as read off the factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodRoot {
    pub value: i64,
    pub multiplicity: u32,
}

/// Closed-form description of the periods of order 2, 3 or 4 over `F_(p^a)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ClosedFormPeriods {
    /// The period polynomial splits into linear factors over `Q`.
    Rational {
        case: String,
        roots: Vec<PeriodRoot>,
        diophantine: Vec<DiophantineSolution>,
    },
    /// Irreducible or quadratic-factor cases: no rational roots at this level;
    /// the note carries the factor data.
    NoRationalForm {
        case: String,
        note: String,
        diophantine: Vec<DiophantineSolution>,
    },
}

impl ClosedFormPeriods {
    pub fn rational_roots(&self) -> Option<&[PeriodRoot]> {
        match self {
            ClosedFormPeriods::Rational { roots, .. } => Some(roots),
            ClosedFormPeriods::NoRationalForm { .. } => None,
        }
    }

    pub fn diophantine(&self) -> &[DiophantineSolution] {
        match self {
            ClosedFormPeriods::Rational { diophantine, .. }
            | ClosedFormPeriods::NoRationalForm { diophantine, .. } => diophantine,
        }
    }
}

fn div_exact(num: i128, den: i128) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::Internal(format!("{num} is not divisible by {den}")));
    }
    i64::try_from(num / den).map_err(|_| Error::Internal("closed-form root overflow".into()))
}

/// Closed-form periods of order `n` in `{1, 2, 3, 4}` over `F_(p^a)`.
pub fn closed_form_periods(p: u64, a: u32, n: u64) -> Result<ClosedFormPeriods> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 {
        return Err(Error::ZeroDegree);
    }
    let r_wide = arith::saturating_pow_u128(p, a);
    let r = u64::try_from(r_wide).map_err(|_| Error::SizeBound {
        size: r_wide,
        bound: u64::MAX,
    })?;
    if n == 0 || (r - 1) % n != 0 {
        return Err(Error::OrderDoesNotDivide { n, rm1: r - 1 });
    }
    match n {
        1 => Ok(ClosedFormPeriods::Rational {
            case: "N=1 (full multiplicative group)".into(),
            roots: vec![PeriodRoot {
                value: -1,
                multiplicity: 1,
            }],
            diophantine: vec![],
        }),
        2 => {
            if a.is_multiple_of(2) {
                let eta0 = quadratic_period_class0(p, a)?;
                Ok(ClosedFormPeriods::Rational {
                    case: format!("N=2, p mod 4 = {}, exponent even", p % 4),
                    roots: vec![
                        PeriodRoot {
                            value: eta0,
                            multiplicity: 1,
                        },
                        PeriodRoot {
                            value: -1 - eta0,
                            multiplicity: 1,
                        },
                    ],
                    diophantine: vec![],
                })
            } else {
                let note = if p % 4 == 1 {
                    "eta = (-1 +/- sqrt(r))/2, a real quadratic surd".to_string()
                } else {
                    "eta = (-1 +/- i sqrt(r))/2, a complex quadratic surd".to_string()
                };
                Ok(ClosedFormPeriods::NoRationalForm {
                    case: format!("N=2, p mod 4 = {}, exponent odd", p % 4),
                    note,
                    diophantine: vec![],
                })
            }
        }
        3 => {
            let full = solve_diophantine(DiophantineKind::CubicFull, p, 4 * r)?;
            if p % 3 == 2 {
                // here the exponent is forced even
                debug_assert_eq!(a % 2, 0);
                let sq = arith::checked_pow(p, a / 2).expect("sqrt(r) fits") as i128;
                let (single, double, parity) = if (a / 2).is_multiple_of(2) {
                    (div_exact(-1 - 2 * sq, 3)?, div_exact(-1 + sq, 3)?, "even")
                } else {
                    (div_exact(-1 + 2 * sq, 3)?, div_exact(-1 - sq, 3)?, "odd")
                };
                Ok(ClosedFormPeriods::Rational {
                    case: format!("N=3, p = 2 mod 3, half-exponent {parity}"),
                    roots: vec![
                        PeriodRoot {
                            value: single,
                            multiplicity: 1,
                        },
                        PeriodRoot {
                            value: double,
                            multiplicity: 2,
                        },
                    ],
                    diophantine: vec![full],
                })
            } else if !a.is_multiple_of(3) {
                Ok(ClosedFormPeriods::NoRationalForm {
                    case: "N=3, p = 1 mod 3, exponent not divisible by 3".into(),
                    note: "period polynomial is irreducible over the rationals".into(),
                    diophantine: vec![full],
                })
            } else {
                let lifted = solve_diophantine(
                    DiophantineKind::CubicLifted,
                    p,
                    4 * arith::checked_pow(p, a / 3).expect("cbrt target fits"),
                )?;
                let (c1, d1) = (lifted.first as i128, lifted.second as i128);
                let rho = arith::checked_pow(p, a / 3).expect("cbrt(r) fits") as i128;
                let roots = vec![
                    PeriodRoot {
                        value: div_exact(-1 + c1 * rho, 3)?,
                        multiplicity: 1,
                    },
                    PeriodRoot {
                        value: div_exact(-1 - (c1 + 9 * d1) / 2 * rho, 3)?,
                        multiplicity: 1,
                    },
                    PeriodRoot {
                        value: div_exact(-1 - (c1 - 9 * d1) / 2 * rho, 3)?,
                        multiplicity: 1,
                    },
                ];
                Ok(ClosedFormPeriods::Rational {
                    case: "N=3, p = 1 mod 3, exponent = 0 mod 3".into(),
                    roots,
                    diophantine: vec![full, lifted],
                })
            }
        }
        4 => {
            let full = solve_diophantine(DiophantineKind::QuarticFull, p, r)?;
            if p % 4 == 3 {
                debug_assert_eq!(a % 2, 0);
                let sq = arith::checked_pow(p, a / 2).expect("sqrt(r) fits") as i128;
                let (single, triple, parity) = if (a / 2).is_multiple_of(2) {
                    (div_exact(-1 - 3 * sq, 4)?, div_exact(-1 + sq, 4)?, "even")
                } else {
                    (div_exact(-1 + 3 * sq, 4)?, div_exact(-1 - sq, 4)?, "odd")
                };
                Ok(ClosedFormPeriods::Rational {
                    case: format!("N=4, p = 3 mod 4, half-exponent {parity}"),
                    roots: vec![
                        PeriodRoot {
                            value: single,
                            multiplicity: 1,
                        },
                        PeriodRoot {
                            value: triple,
                            multiplicity: 3,
                        },
                    ],
                    diophantine: vec![full],
                })
            } else if a % 2 == 1 {
                Ok(ClosedFormPeriods::NoRationalForm {
                    case: "N=4, p = 1 mod 4, exponent odd".into(),
                    note: "period polynomial is irreducible over the rationals".into(),
                    diophantine: vec![full],
                })
            } else if a % 4 == 2 {
                let u = full.first;
                Ok(ClosedFormPeriods::NoRationalForm {
                    case: "N=4, p = 1 mod 4, exponent = 2 mod 4".into(),
                    note: format!(
                        "splits into two irreducible quadratics \
                         (4X+1)^2 +/- 2 sqrt(r) (4X+1) - r -/+ 2u sqrt(r) with u = {u}"
                    ),
                    diophantine: vec![full],
                })
            } else {
                let lifted = solve_diophantine(
                    DiophantineKind::QuarticLifted,
                    p,
                    arith::checked_pow(p, a / 2).expect("sqrt target fits"),
                )?;
                let (u1, v1) = (lifted.first as i128, lifted.second as i128);
                let sq = arith::checked_pow(p, a / 2).expect("sqrt(r) fits") as i128;
                let rho = arith::checked_pow(p, a / 4).expect("r^(1/4) fits") as i128;
                let roots = vec![
                    PeriodRoot {
                        value: div_exact(-1 - sq - 2 * u1 * rho, 4)?,
                        multiplicity: 1,
                    },
                    PeriodRoot {
                        value: div_exact(-1 - sq + 2 * u1 * rho, 4)?,
                        multiplicity: 1,
                    },
                    PeriodRoot {
                        value: div_exact(-1 + sq - 4 * v1 * rho, 4)?,
                        multiplicity: 1,
                    },
                    PeriodRoot {
                        value: div_exact(-1 + sq + 4 * v1 * rho, 4)?,
                        multiplicity: 1,
                    },
                ];
                Ok(ClosedFormPeriods::Rational {
                    case: "N=4, p = 1 mod 4, exponent = 0 mod 4".into(),
                    roots,
                    diophantine: vec![full, lifted],
                })
            }
        }
        _ => Err(Error::NoClosedForm(format!(
            "no closed form implemented for N = {n}"
        ))),
    }
}

/// The class-0 quadratic period `eta_0^((2,r))` when it is rational
/// (even total exponent): `(-1 + tau sqrt(r))/2` with the sign `tau` fixed by
/// `p mod 4` and the exponent parity.
pub fn quadratic_period_class0(p: u64, a: u32) -> Result<i64> {
    if p == 2 {
        return Err(Error::EvenField(2));
    }
    if !a.is_multiple_of(2) {
        return Err(Error::NoClosedForm(
            "quadratic periods are irrational for odd total exponent".into(),
        ));
    }
    let sq = arith::checked_pow(p, a / 2).expect("sqrt(r) fits") as i128;
    // (-1)^(a-1) for p = 1 mod 4; additionally i^a = (-1)^(a/2) for p = 3 mod 4
    let mut tau: i128 = if (a - 1).is_multiple_of(2) { 1 } else { -1 };
    if p % 4 == 3 && (a / 2) % 2 == 1 {
        tau = -tau;
    }
    div_exact(-1 + tau * sq, 2)
}

/// The classical integer-coefficient formulas for the period polynomial of
/// order `n` in `{1, 2, 3, 4}` over `F_(p^a)`; ascending coefficients.
pub fn period_polynomial_formula(p: u64, a: u32, n: u64) -> Result<Vec<BigInt>> {
    let r_wide = arith::saturating_pow_u128(p, a);
    let r = u64::try_from(r_wide).map_err(|_| Error::SizeBound {
        size: r_wide,
        bound: u64::MAX,
    })?;
    if n == 0 || (r - 1) % n != 0 {
        return Err(Error::OrderDoesNotDivide { n, rm1: r - 1 });
    }
    let ri = r as i128;
    let coeffs_i128: Vec<i128> = match n {
        1 => vec![1, 1],
        2 => {
            let c0 = if r % 4 == 1 {
                (1 - ri) / 4
            } else {
                (1 + ri) / 4
            };
            vec![c0, 1, 1]
        }
        3 => {
            let c = solve_diophantine(DiophantineKind::CubicFull, p, 4 * r)?.first as i128;
            let c0 = -div_exact((c + 3) * ri - 1, 27)? as i128;
            let c1 = -div_exact(ri - 1, 3)? as i128;
            vec![c0, c1, 1, 1]
        }
        4 => {
            let u = solve_diophantine(DiophantineKind::QuarticFull, p, r)?.first as i128;
            if ((r - 1) / 4) % 2 == 0 {
                vec![
                    div_exact(ri * ri - (4 * u * u - 8 * u + 6) * ri + 1, 256)? as i128,
                    div_exact((2 * u - 3) * ri + 1, 16)? as i128,
                    -div_exact(3 * ri - 3, 8)? as i128,
                    1,
                    1,
                ]
            } else {
                vec![
                    div_exact(9 * ri * ri - (4 * u * u - 8 * u - 2) * ri + 1, 256)? as i128,
                    div_exact((2 * u + 1) * ri + 1, 16)? as i128,
                    div_exact(ri + 3, 8)? as i128,
                    1,
                    1,
                ]
            }
        }
        _ => {
            return Err(Error::NoClosedForm(format!(
                "no polynomial formula for N = {n}"
            )))
        }
    };
    Ok(coeffs_i128.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn cyclotomic_integer_basics() {
        // zeta_p^p = 1 and the full root sum vanishes
        for p in [2u64, 3, 5, 7] {
            let z = CyclotomicInteger::root_of_unity(p, 1);
            let mut pow = CyclotomicInteger::from_int(p, 1);
            let mut sum = CyclotomicInteger::zero(p);
            for _ in 0..p {
                sum = sum.add(&pow);
                pow = pow.mul(&z);
            }
            assert_eq!(pow, CyclotomicInteger::from_int(p, 1));
            assert!(sum.is_zero());
        }
        let one = CyclotomicInteger::from_int(5, 1);
        assert!(one.is_rational());
        assert_eq!(one.rational_value(), Some(BigInt::one()));
        assert!(!CyclotomicInteger::root_of_unity(5, 2).is_rational());
    }

    #[test]
    fn additive_character_orthogonality() {
        let f = Field::build(3, 2).unwrap();
        assert_eq!(
            additive_character(&f, f.zero()),
            CyclotomicInteger::from_int(3, 1)
        );
        let mut total = CyclotomicInteger::zero(3);
        for x in f.elements() {
            total = total.add(&additive_character(&f, x));
        }
        assert!(total.is_zero());
        let mut nonzero = CyclotomicInteger::zero(3);
        for x in f.nonzero_elements() {
            nonzero = nonzero.add(&additive_character(&f, x));
        }
        assert_eq!(nonzero, CyclotomicInteger::from_int(3, -1));
    }

    #[test]
    fn multiplicative_character_values() {
        let f = Field::build(3, 2).unwrap();
        for x in f.nonzero_elements() {
            let v = multiplicative_character(&f, 0, x).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
        // psi_4 is the quadratic character of F_9
        let g = f.generator();
        let vg = multiplicative_character(&f, 4, g).unwrap();
        assert!((vg - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let vg2 = multiplicative_character(&f, 4, f.mul(g, g)).unwrap();
        assert!((vg2 - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(multiplicative_character(&f, 4, f.zero()).is_err());
    }

    #[test]
    fn gauss_sums() {
        let f9 = Field::build(3, 2).unwrap();
        // trivial character: sum of chi over nonzero elements is -1
        let g0 = gauss_sum_numeric(&f9, 0).unwrap();
        assert!((g0 - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
        // quadratic Gauss sum of F_9: (-1)^1 i^2 * 3 = 3
        let g4 = gauss_sum_numeric(&f9, 4).unwrap();
        let closed = quadratic_gauss_sum_closed_form(&f9).unwrap();
        assert!((closed - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        assert!((g4 - closed).norm() < 1e-9);
        // F_5: sqrt(5)
        let f5 = Field::build(5, 1).unwrap();
        let g = gauss_sum_numeric(&f5, 2).unwrap();
        let closed5 = quadratic_gauss_sum_closed_form(&f5).unwrap();
        assert!((closed5 - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-9);
        assert!((g - closed5).norm() < 1e-9);
        // |G| = sqrt(q) for every nontrivial character
        for (p, k) in [(5u64, 1u32), (7, 1), (3, 2), (2, 3)] {
            let f = Field::build(p, k).unwrap();
            for j in 1..f.order() {
                let gs = gauss_sum_numeric(&f, j).unwrap();
                assert!(
                    (gs.norm() - (f.size() as f64).sqrt()).abs() < 1e-9,
                    "q={} j={}",
                    f.size(),
                    j
                );
            }
        }
    }

    #[test]
    fn quadratic_completion_identity() {
        let f3 = Field::build(3, 1).unwrap();
        assert!(quadratic_sum_identity_check(&f3, f3.one(), f3.zero(), f3.zero()).unwrap());
        let f5 = Field::build(5, 1).unwrap();
        assert!(quadratic_sum_identity_check(&f5, f5.one(), f5.zero(), f5.one()).unwrap());
        let f9 = Field::build(3, 2).unwrap();
        assert!(quadratic_sum_identity_check(&f9, f9.generator(), f9.one(), f9.zero()).unwrap());
        assert!(quadratic_sum_identity_check(&f9, f9.zero(), f9.one(), f9.zero()).is_err());
        let f4 = Field::build(2, 2).unwrap();
        assert!(quadratic_sum_identity_check(&f4, f4.one(), f4.zero(), f4.zero()).is_err());
    }

    #[test]
    fn cyclotomic_classes() {
        let f = Field::build(3, 2).unwrap();
        assert_eq!(cyclotomic_class(&f, f.one(), 2).unwrap(), 0);
        assert_eq!(cyclotomic_class(&f, f.gen_pow(3), 2).unwrap(), 1);
        assert_eq!(class_size(&f, 2).unwrap(), 4);
        assert!(cyclotomic_class(&f, f.zero(), 2).is_err());
        assert!(cyclotomic_class(&f, f.one(), 3).is_err());
    }

    #[test]
    fn multiset_lemma_examples() {
        // q = 3, m = 2, e = 2: eight products covering C_0^(2,9) twice
        let f9 = Field::build(3, 2).unwrap();
        assert!(multiset_product_check(&f9, 1, 2).unwrap());
        assert!(multiset_product_check(&f9, 1, 1).unwrap());
        // q = 4, m = 3, e = 3 over F_64
        let f64 = Field::build(2, 6).unwrap();
        assert!(multiset_product_check(&f64, 2, 3).unwrap());
        assert!(multiset_product_check(&f64, 2, 1).unwrap());
        assert!(multiset_product_check(&f64, 2, 2).is_err()); // 2 does not divide q-1=3
    }

    #[test]
    fn periods_of_small_orders() {
        // N = 1: the full character sum is -1
        let f9 = Field::build(3, 2).unwrap();
        let eta = gaussian_period(&f9, 1, 0).unwrap();
        assert_eq!(eta, CyclotomicInteger::from_int(3, -1));
        // r = 9, N = 2: {1, -2}, cross-checked against the closed form
        let periods = gaussian_periods(&f9, 2).unwrap();
        assert_eq!(periods[0], CyclotomicInteger::from_int(3, 1));
        assert_eq!(periods[1], CyclotomicInteger::from_int(3, -2));
        assert_eq!(quadratic_period_class0(3, 2).unwrap(), 1);
        // eta_1 = -1 - eta_0
        assert_eq!(
            periods[1],
            CyclotomicInteger::from_int(3, -1).sub(&periods[0])
        );
        // r = 64, N = 3: multiset {5, -3, -3}
        let f64 = Field::build(2, 6).unwrap();
        let periods = gaussian_periods(&f64, 3).unwrap();
        let mut vals: Vec<i64> = periods
            .iter()
            .map(|e| e.rational_value().unwrap().to_i64().unwrap())
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![-3, -3, 5]);
    }

    #[test]
    fn period_sums_are_minus_one() {
        for (p, k) in [
            (2u64, 3u32),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 6),
            (7, 3),
            (5, 4),
        ] {
            let f = Field::build(p, k).unwrap();
            for n in arith::divisors(f.order()) {
                if n > 12 {
                    continue;
                }
                let periods = gaussian_periods(&f, n).unwrap();
                let mut sum = CyclotomicInteger::zero(p);
                for e in &periods {
                    sum = sum.add(e);
                }
                assert_eq!(
                    sum,
                    CyclotomicInteger::from_int(p, -1),
                    "r={} N={}",
                    f.size(),
                    n
                );
            }
        }
    }

    #[test]
    fn period_is_independent_of_enumeration_order() {
        let f = Field::build(2, 6).unwrap();
        for class in 0..3 {
            let forward = gaussian_period(&f, 3, class).unwrap();
            // reversed enumeration of the class representatives
            let mut counts = vec![0i64; 2];
            for j in (0..f.order()).filter(|j| j % 3 == class).rev() {
                counts[f.absolute_trace(f.gen_pow(j)) as usize] += 1;
            }
            let backward = CyclotomicInteger::from_root_counts(2, &counts);
            assert_eq!(forward, backward);
        }
    }

    #[test]
    fn period_polynomials_match_frozen_expansions() {
        let f9 = Field::build(3, 2).unwrap();
        let psi = period_polynomial(&f9, 1).unwrap();
        assert_eq!(psi.coeffs(), &[BigInt::from(1), BigInt::from(1)]); // X + 1
        let psi = period_polynomial(&f9, 2).unwrap();
        // (X - 1)(X + 2) = X^2 + X - 2
        assert_eq!(
            psi.coeffs(),
            &[BigInt::from(-2), BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(psi.to_string(), "X^2 + X - 2");
        let f64 = Field::build(2, 6).unwrap();
        let psi = period_polynomial(&f64, 3).unwrap();
        // (X - 5)(X + 3)^2 = X^3 + X^2 - 21X - 45
        assert_eq!(
            psi.coeffs(),
            &[
                BigInt::from(-45),
                BigInt::from(-21),
                BigInt::from(1),
                BigInt::from(1)
            ]
        );
        assert_eq!(psi.to_string(), "X^3 + X^2 - 21X - 45");
        assert_eq!(psi.rational_roots(), vec![(-3, 2), (5, 1)]);
    }

    #[test]
    fn diophantine_normalizations() {
        let s = solve_diophantine(DiophantineKind::CubicFull, 2, 256).unwrap();
        assert_eq!((s.first, s.second, s.second_sign_free), (16, 0, false));
        let s = solve_diophantine(DiophantineKind::CubicLifted, 7, 28).unwrap();
        assert_eq!((s.first, s.second), (1, 1));
        assert!(s.second_sign_free);
        let s = solve_diophantine(DiophantineKind::QuarticLifted, 5, 25).unwrap();
        assert_eq!((s.first, s.second), (-3, 2));
        // p = 3: 3 = u^2 + 4v^2 has no solution at all
        assert!(matches!(
            solve_diophantine(DiophantineKind::QuarticLifted, 3, 3),
            Err(Error::NoDiophantineSolution { .. })
        ));
    }

    #[test]
    fn closed_forms_agree_with_exact_periods() {
        // r = 64, N = 3: case p = 2 mod 3 with odd half-exponent
        let cf = closed_form_periods(2, 6, 3).unwrap();
        let roots = cf.rational_roots().unwrap();
        assert_eq!(
            roots,
            &[
                PeriodRoot {
                    value: 5,
                    multiplicity: 1
                },
                PeriodRoot {
                    value: -3,
                    multiplicity: 2
                },
            ]
        );
        // r = 9, N = 2
        let cf = closed_form_periods(3, 2, 2).unwrap();
        let mut vals: Vec<i64> = cf
            .rational_roots()
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![-2, 1]);
        // r = 5^4, N = 4: case p = 1 mod 4 with exponent 0 mod 4
        let cf = closed_form_periods(5, 4, 4).unwrap();
        let mut vals: Vec<i64> = cf
            .rational_roots()
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![-14, -4, 1, 16]);
        let f = Field::build(5, 4).unwrap();
        let exact: Vec<i64> = gaussian_periods(&f, 4)
            .unwrap()
            .iter()
            .map(|e| e.rational_value().unwrap().to_i64().unwrap())
            .collect();
        let mut sorted = exact.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vals);
        // irreducible cases expose no rational roots
        assert!(closed_form_periods(7, 1, 3)
            .unwrap()
            .rational_roots()
            .is_none());
        assert!(closed_form_periods(13, 1, 4)
            .unwrap()
            .rational_roots()
            .is_none());
        assert!(closed_form_periods(5, 2, 4)
            .unwrap()
            .rational_roots()
            .is_none());
    }

    #[test]
    fn irreducible_cases_have_no_integer_roots() {
        // N = 3 over F_7 and N = 4 over F_13: the rational root test must be empty
        let f7 = Field::build(7, 1).unwrap();
        let psi = period_polynomial(&f7, 3).unwrap();
        assert_eq!(
            psi.coeffs(),
            &[
                BigInt::from(-1),
                BigInt::from(-2),
                BigInt::from(1),
                BigInt::from(1)
            ]
        );
        assert!(psi.rational_roots().is_empty());
        let f13 = Field::build(13, 1).unwrap();
        let psi = period_polynomial(&f13, 4).unwrap();
        assert!(psi.rational_roots().is_empty());
        // and matches the odd-branch coefficient formula
        assert_eq!(
            psi.coeffs(),
            period_polynomial_formula(13, 1, 4).unwrap().as_slice()
        );
        // N = 4 quadratic case over F_25 also has no rational roots
        let f25 = Field::build(5, 2).unwrap();
        let psi = period_polynomial(&f25, 4).unwrap();
        assert!(psi.rational_roots().is_empty());
    }

    #[test]
    fn polynomial_formulas_match_exact_expansion() {
        for (p, a, n) in [
            (3u64, 2u32, 2u64),
            (2, 6, 3),
            (7, 3, 3),
            (5, 4, 4),
            (3, 4, 4), // p = 3 mod 4 over F_81
            (13, 1, 4),
            (5, 2, 4),
            (7, 1, 3),
            (7, 6, 3), // lifted cubic target 4 p^2 at full exponent 6
            (5, 8, 4), // lifted quartic target p^4 at full exponent 8
        ] {
            let f = Field::build(p, a).unwrap();
            let exact = period_polynomial(&f, n).unwrap();
            let formula = period_polynomial_formula(p, a, n).unwrap();
            assert_eq!(
                exact.coeffs(),
                formula.as_slice(),
                "r = {} N = {}",
                f.size(),
                n
            );
        }
    }

    #[test]
    fn lifted_targets_scale_with_the_full_exponent() {
        // r = 7^6: the cubic closed form needs c1, d1 from 4 p^(a/3) = 196,
        // not 4 p^(m-derived) targets; the exact periods adjudicate
        let cf = closed_form_periods(7, 6, 3).unwrap();
        let mut vals: Vec<i64> = cf
            .rational_roots()
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![-180, -33, 212]);
        let lifted = cf
            .diophantine()
            .iter()
            .find(|d| d.kind == DiophantineKind::CubicLifted)
            .unwrap();
        assert_eq!((lifted.target, lifted.first, lifted.second), (196, 13, 1));
        let f = Field::build(7, 6).unwrap();
        let mut exact: Vec<i64> = gaussian_periods(&f, 3)
            .unwrap()
            .iter()
            .map(|e| e.rational_value().unwrap().to_i64().unwrap())
            .collect();
        exact.sort_unstable();
        assert_eq!(exact, vals);
        // r = 5^8: quartic closed form from p^(a/2) = 625 = 49 + 4 * 144
        let cf = closed_form_periods(5, 8, 4).unwrap();
        let lifted = cf
            .diophantine()
            .iter()
            .find(|d| d.kind == DiophantineKind::QuarticLifted)
            .unwrap();
        assert_eq!((lifted.target, lifted.first, lifted.second), (625, -7, 12));
        let mut vals: Vec<i64> = cf
            .rational_roots()
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![-244, -144, -69, 456]);
        let f = Field::build(5, 8).unwrap();
        let mut exact: Vec<i64> = gaussian_periods(&f, 4)
            .unwrap()
            .iter()
            .map(|e| e.rational_value().unwrap().to_i64().unwrap())
            .collect();
        exact.sort_unstable();
        assert_eq!(exact, vals);
    }

    #[test]
    fn surd_closed_forms_match_numerically() {
        // N = 2 with odd exponent: eta = (-1 +/- sqrt(r))/2 for p = 1 mod 4,
        // (-1 +/- i sqrt(r))/2 for p = 3 mod 4; residual below 1e-6
        for (p, a) in [(5u64, 1u32), (13, 1), (3, 3), (7, 1)] {
            let f = Field::build(p, a).unwrap();
            let r = f.size() as f64;
            let periods = gaussian_periods(&f, 2).unwrap();
            let candidates = if p % 4 == 1 {
                [
                    Complex64::new((-1.0 + r.sqrt()) / 2.0, 0.0),
                    Complex64::new((-1.0 - r.sqrt()) / 2.0, 0.0),
                ]
            } else {
                [
                    Complex64::new(-0.5, r.sqrt() / 2.0),
                    Complex64::new(-0.5, -r.sqrt() / 2.0),
                ]
            };
            for eta in &periods {
                let v = eta.to_complex();
                assert!(
                    candidates.iter().any(|c| (v - c).norm() < 1e-6),
                    "r = {} eta = {v}",
                    f.size()
                );
            }
        }
        // N = 4 over F_25 (p = 1 mod 4, exponent 2 mod 4): the two quadratics
        // (4X+1)^2 +/- 2 sqrt(r) (4X+1) - r -/+ 2u sqrt(r) vanish on the periods
        let f = Field::build(5, 2).unwrap();
        let u = solve_diophantine(DiophantineKind::QuarticFull, 5, 25)
            .unwrap()
            .first as f64;
        let sq = 5.0;
        for eta in gaussian_periods(&f, 4).unwrap() {
            let y = eta.to_complex() * 4.0 + 1.0;
            let plus = y * y + 2.0 * sq * y - 25.0 - 2.0 * u * sq;
            let minus = y * y - 2.0 * sq * y - 25.0 + 2.0 * u * sq;
            assert!(
                plus.norm() < 1e-6 || minus.norm() < 1e-6,
                "residual too large"
            );
        }
    }
}
