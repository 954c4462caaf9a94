//! The trace code `C_q(m, e)` and its exact Lee weight spectrum by brute
//! force.
//!
//! The defining set is `L = C_0^((e,r)) + uF_r`, ordered row-major by
//! `(i, j) -> alpha^(e i) + u elem(j)` with `elem(0) = 0` and
//! `elem(j) = alpha^(j-1)`, so codewords are bit-for-bit reproducible. The
//! oracle enumerates every `a` in `F_r + uF_r`, evaluates the ring trace on
//! every coordinate and histograms the Lee weights; it refuses to run past its
//! work budget rather than approximate.

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Fel, Field, DEFAULT_SIZE_BOUND};
use crate::ring::{Ring, RingElement};
use crate::spectrum::{CodeParams, WeightDistribution};

/// Default cap on `r^2 * n` coordinate evaluations for the oracle.
pub const DEFAULT_WORK_BUDGET: u64 = 1_000_000_000;

/// The parameter tuple `(p, s, m, e)` with `q = p^s`, `r = q^m`,
/// `e | q - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CodeSpec {
    p: u64,
    s: u32,
    m: u32,
    e: u64,
}

impl CodeSpec {
    pub fn new(p: u64, s: u32, m: u32, e: u64) -> Result<CodeSpec> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || m == 0 {
            return Err(Error::ZeroDegree);
        }
        if e == 0 {
            return Err(Error::ZeroParameter);
        }
        let k = s.saturating_mul(m);
        let r_wide = arith::saturating_pow_u128(p, k);
        if r_wide > DEFAULT_SIZE_BOUND as u128 {
            return Err(Error::SizeBound {
                size: r_wide,
                bound: DEFAULT_SIZE_BOUND,
            });
        }
        let q = arith::checked_pow(p, s).expect("q below the size bound");
        if !(q - 1).is_multiple_of(e) {
            return Err(Error::EMustDivideQMinus1 { e, qm1: q - 1 });
        }
        Ok(CodeSpec { p, s, m, e })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn q(&self) -> u64 {
        arith::checked_pow(self.p, self.s).expect("validated")
    }

    pub fn r(&self) -> u64 {
        arith::checked_pow(self.p, self.s * self.m).expect("validated")
    }

    /// `N = gcd(e, m)`: the order of the cyclotomic classes grading the
    /// nilpotent stratum.
    pub fn gcd_em(&self) -> u64 {
        arith::gcd(self.e, self.m as u64)
    }

    /// Code length `n = (r^2 - r)/e`.
    pub fn n(&self) -> u64 {
        let r = self.r();
        (r * r - r) / self.e
    }

    /// Length of the Gray image, `2n`.
    pub fn gray_length(&self) -> u64 {
        2 * self.n()
    }

    /// `F_q`-dimension of the Gray image, `2m`.
    pub fn dimension(&self) -> u32 {
        2 * self.m
    }

    /// Cost of the full oracle in coordinate evaluations, `r^2 * n`.
    pub fn work_units(&self) -> u128 {
        let r = self.r() as u128;
        r * r * self.n() as u128
    }

    pub fn params(&self) -> CodeParams {
        CodeParams {
            p: self.p,
            s: self.s,
            m: self.m,
            e: self.e,
            q: self.q(),
            r: self.r(),
            n: self.n(),
            gcd_em: self.gcd_em(),
        }
    }

    /// Build `F_r` as the single tower `F_(p^(s m))`.
    pub fn build_field(&self) -> Result<Field> {
        Field::build(self.p, self.s * self.m)
    }
}

/// Which orbit of the ring a codeword's pre-image lies in; Lee weight is
/// constant on each.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stratum {
    Unit,
    /// `a = u beta` with `beta` in the cyclotomic class of this index.
    Nilpotent(u64),
}

impl std::fmt::Display for Stratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Stratum::Unit => write!(f, "unit"),
            Stratum::Nilpotent(i) => write!(f, "class_{i}"),
        }
    }
}

/// Result of the full enumeration oracle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleSpectrum {
    pub distribution: WeightDistribution,
    /// Number of distinct codewords; equals `r^2` exactly when the evaluation
    /// map is injective.
    pub codeword_count: u64,
}

/// Evaluator for one code: the defining set in its canonical coordinate order
/// plus the trace table down to `F_q`.
pub struct CodeEvaluator<'f> {
    field: &'f Field,
    spec: CodeSpec,
    /// `alpha^(e i)` for `i = 0 .. (r-1)/e`.
    unit_parts: Vec<u32>,
    /// `elem(j)` for `j = 0 .. r`: zero first, then `alpha^(j-1)`.
    nilpotent_parts: Vec<u32>,
    /// `Tr_(r/q)` by element code.
    trace_q: Vec<u32>,
}

impl<'f> CodeEvaluator<'f> {
    pub fn new(field: &'f Field, spec: CodeSpec) -> Result<CodeEvaluator<'f>> {
        if field.p() != spec.p || field.k() != spec.s * spec.m {
            return Err(Error::Internal(format!(
                "field {:?} does not realize F_(p^(s m)) for p={} s={} m={}",
                field, spec.p, spec.s, spec.m
            )));
        }
        let r = field.size();
        let exp = field.exp_table();
        let unit_parts: Vec<u32> = (0..(r - 1) / spec.e)
            .map(|i| exp[(spec.e * i) as usize])
            .collect();
        let mut nilpotent_parts = Vec::with_capacity(r as usize);
        nilpotent_parts.push(0u32);
        nilpotent_parts.extend_from_slice(&exp[..(r - 1) as usize]);
        let trace_q = field.subfield_trace_table(spec.s)?;
        // the trace lands in F_q
        debug_assert!(trace_q
            .iter()
            .all(|&t| field.is_in_subfield(field_el(field, t), spec.s).unwrap()));
        Ok(CodeEvaluator {
            field,
            spec,
            unit_parts,
            nilpotent_parts,
            trace_q,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn n(&self) -> u64 {
        (self.unit_parts.len() * self.nilpotent_parts.len()) as u64
    }

    /// The defining set in coordinate order. Every element is a unit and the
    /// first one is `1 + u*0`.
    pub fn defining_set(&self) -> Vec<RingElement> {
        let ring = Ring::new(self.field);
        let mut out = Vec::with_capacity(self.n() as usize);
        for &t in &self.unit_parts {
            for &tp in &self.nilpotent_parts {
                out.push(ring.element(field_el(self.field, t), field_el(self.field, tp)));
            }
        }
        out
    }

    /// Whether `x` lies in `L`, i.e. its unit part is an `e`-th power.
    pub fn contains(&self, x: RingElement) -> bool {
        match self.field.discrete_log(x.a) {
            Ok(l) => l % self.spec.e == 0,
            Err(_) => false,
        }
    }

    /// `ev(a) = (Tr(ax))_(x in L)`; every coordinate lands in `F_q + uF_q`.
    pub fn evaluate(&self, a: RingElement) -> Vec<RingElement> {
        let ring = Ring::new(self.field);
        let mut out = Vec::with_capacity(self.n() as usize);
        for x in self.defining_set() {
            let t = ring
                .trace(ring.mul(a, x), self.spec.s)
                .expect("s divides k");
            debug_assert!(self.field.is_in_subfield(t.a, self.spec.s).unwrap());
            debug_assert!(self.field.is_in_subfield(t.b, self.spec.s).unwrap());
            out.push(t);
        }
        out
    }

    /// Lee weight of `ev(a)` by direct coordinate evaluation, using the
    /// additivity of the trace: for `a = x + uy` and `t + ut'` in `L` the
    /// coordinate is `Tr(xt) + u(Tr(xt') + Tr(yt))`.
    pub fn codeword_lee_weight(&self, a: RingElement) -> u64 {
        assert!(self.field.owns(a.a) && self.field.owns(a.b));
        self.weight_of_codes(a.a.code(), a.b.code())
    }

    fn weight_of_codes(&self, x: u32, y: u32) -> u64 {
        let f = self.field;
        let trq = &self.trace_q;
        let mut w = 0u64;
        for &t in &self.unit_parts {
            let a_comp = trq[f.mul_codes(x, t) as usize];
            let tr_yt = trq[f.mul_codes(y, t) as usize];
            for &tp in &self.nilpotent_parts {
                let b_comp = f.add_codes(trq[f.mul_codes(x, tp) as usize], tr_yt);
                if b_comp != 0 {
                    w += 1;
                }
                if f.add_codes(a_comp, b_comp) != 0 {
                    w += 1;
                }
            }
        }
        w
    }

    /// Exact Lee weight distribution over all `r^2` ring elements.
    ///
    /// Refuses (rather than truncates) when `r^2 * n` exceeds `budget`.
    /// Deterministic for every `workers` count: per-range histograms merge by
    /// addition.
    pub fn brute_force_spectrum(&self, budget: u64, workers: usize) -> Result<OracleSpectrum> {
        let required = self.spec.work_units();
        if required > budget as u128 {
            return Err(Error::WorkBudgetExceeded { required, budget });
        }
        let r = self.field.size();
        let total = r * r;
        let workers = workers.clamp(1, total.min(1024) as usize) as u64;
        let chunk = total.div_ceil(workers);

        let results: Vec<(WeightDistribution, u64)> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                handles.push(scope.spawn(move || {
                    let mut dist = WeightDistribution::new();
                    let mut zero_words = 0u64;
                    for idx in lo..hi {
                        let (ix, iy) = (idx / r, idx % r);
                        let x = self.nilpotent_parts[ix as usize];
                        let y = self.nilpotent_parts[iy as usize];
                        let weight = self.weight_of_codes(x, y);
                        if weight == 0 {
                            zero_words += 1;
                        }
                        dist.add(weight, 1);
                    }
                    (dist, zero_words)
                }));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });

        let mut distribution = WeightDistribution::new();
        let mut zero_words = 0u64;
        for (d, z) in &results {
            distribution.merge(d);
            zero_words += z;
        }
        // the zero-weight pre-images form the kernel of the evaluation map
        if zero_words == 0 || !total.is_multiple_of(zero_words) {
            return Err(Error::Internal(
                "kernel size does not divide the ring order".into(),
            ));
        }
        Ok(OracleSpectrum {
            distribution,
            codeword_count: total / zero_words,
        })
    }

    /// Lee weight of one representative per stratum: `a = 1` and
    /// `a = u alpha^i` for each class `i` of order `N = gcd(e, m)`.
    ///
    /// Costs `(N + 1) * n` coordinate evaluations.
    pub fn representative_spectrum(&self) -> Vec<(Stratum, u64)> {
        let mut out = vec![(Stratum::Unit, self.weight_of_codes(1, 0))];
        let exp = self.field.exp_table();
        for i in 0..self.spec.gcd_em() {
            out.push((
                Stratum::Nilpotent(i),
                self.weight_of_codes(0, exp[i as usize]),
            ));
        }
        out
    }
}

fn field_el(field: &Field, code: u32) -> Fel {
    field.el(code as u64)
}

/// Gray map `a + ub -> (b, a + b)`, extended blockwise: the first `n` symbols
/// are the `b` components, the last `n` the `a + b` components.
pub fn gray_map(field: &Field, word: &[RingElement]) -> Vec<Fel> {
    let mut out = Vec::with_capacity(2 * word.len());
    for c in word {
        out.push(c.b);
    }
    for c in word {
        out.push(field.add(c.a, c.b));
    }
    out
}

pub fn hamming_weight(word: &[Fel]) -> u64 {
    word.iter().filter(|x| x.code() != 0).count() as u64
}

/// Lee weight `w_H(b) + w_H(a + b)`, summed coordinatewise.
pub fn lee_weight(field: &Field, word: &[RingElement]) -> u64 {
    let mut w = 0u64;
    for c in word {
        if c.b.code() != 0 {
            w += 1;
        }
        if field.add(c.a, c.b).code() != 0 {
            w += 1;
        }
    }
    w
}
