//! Deterministic construction of prime-power finite fields `F_{p^k}` with exact
//! arithmetic, subfield traces and discrete logarithms.
//!
//! The field is realized as `F_p[x]/(f)` where `f` is the lexicographically
//! smallest monic irreducible polynomial of degree `k` over `F_p`, comparing the
//! coefficient tuples `(c_{k-1}, ..., c_0)` as integer sequences. Since an
//! element with coefficient vector `(c_0, ..., c_{k-1})` is encoded as the
//! base-`p` integer `sum c_i p^i`, that tuple order coincides with the integer
//! order of the codes, so "lexicographically smallest" always means "smallest
//! code". The generator is the primitive element with the smallest code. Both
//! searches are exhaustive, so the same `(p, k)` always yields the same field.
//!
//! Degree-1 fields run through the same path with modulus `x`, reducing
//! elements to constants mod `p`.
//!
//! Multiplication has two independent routes: discrete-log tables (the default)
//! and schoolbook polynomial reduction ([`Field::mul_poly`]); tests check that
//! they agree everywhere.

use crate::arith;
use crate::error::{Error, Result};

/// Default cap on `p^k`; log/antilog tables stay comfortably in memory.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 20;

/// An element of a [`Field`], tagged with the owning field so that elements of
/// different fields can never be mixed in one operation.
///
/// The code is the base-`p` encoding of the coefficient vector in the
/// polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fel {
    fid: u64,
    code: u32,
}

impl Fel {
    /// Base-`p` digit encoding of the coefficient vector.
    pub fn code(self) -> u32 {
        self.code
    }
}

/// A finite field `F_{p^k}`, immutable after construction and safe to share
/// across threads.
pub struct Field {
    fid: u64,
    p: u64,
    k: u32,
    size: u64,
    modulus: Vec<u64>,
    /// `exp[i]` = code of `g^i`, for `i` in `0..size-1`.
    exp: Vec<u32>,
    /// `log[code]` for nonzero codes; `log[0]` is a sentinel.
    log: Vec<u32>,
}

impl Field {
    /// Build `F_{p^k}` under the default size bound.
    pub fn build(p: u64, k: u32) -> Result<Field> {
        Self::build_bounded(p, k, DEFAULT_SIZE_BOUND)
    }

    /// Build `F_{p^k}` with an explicit bound on `p^k`.
    pub fn build_bounded(p: u64, k: u32, bound: u64) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let size_wide = arith::saturating_pow_u128(p, k);
        if size_wide > bound as u128 {
            return Err(Error::SizeBound {
                size: size_wide,
                bound,
            });
        }
        let size = size_wide as u64;

        let modulus = find_modulus(p, k, size);
        let generator = find_generator(p, k, size, &modulus);

        // exp/log tables from successive powers of the generator.
        let order = (size - 1) as usize;
        let mut exp = vec![0u32; order.max(1)];
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = vec![0u64; k as usize];
        cur[0] = 1;
        for (i, slot) in exp.iter_mut().enumerate().take(order) {
            let code = encode(&cur, p);
            *slot = code as u32;
            debug_assert_eq!(log[code as usize], u32::MAX, "generator order too small");
            log[code as usize] = i as u32;
            cur = pmulmod(&cur, &generator, &modulus, p);
        }
        // the cycle must close: g^(size-1) = 1
        debug_assert_eq!(encode(&cur, p), 1);

        Ok(Field {
            fid: (p << 6) | k as u64,
            p,
            k,
            size,
            modulus,
            exp,
            log,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of elements `p^k`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Order of the multiplicative group, `p^k - 1`.
    pub fn order(&self) -> u64 {
        self.size - 1
    }

    /// Coefficients of the modulus, ascending degree, length `k + 1`, monic.
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fel {
        self.el(0)
    }

    pub fn one(&self) -> Fel {
        self.el(1)
    }

    /// The distinguished primitive element.
    pub fn generator(&self) -> Fel {
        // g = g^1, except in F_2 where the group is trivial and g = 1 = g^0
        let idx = usize::from(self.size > 2);
        self.el(self.exp[idx] as u64)
    }

    /// The prime-subfield constant `c mod p`.
    pub fn constant(&self, c: u64) -> Fel {
        self.el(c % self.p)
    }

    /// Element with the given coefficient vector (entries reduced mod `p`,
    /// missing high coefficients taken as zero).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fel {
        assert!(
            coeffs.len() <= self.k as usize,
            "coefficient vector too long"
        );
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.p + c % self.p;
        }
        self.el(code)
    }

    /// Coefficient vector of `x`, ascending, length `k`.
    pub fn coeffs(&self, x: Fel) -> Vec<u64> {
        self.check(x);
        decode(x.code as u64, self.p, self.k)
    }

    /// Element with the given code; panics when out of range.
    pub fn element(&self, code: u64) -> Fel {
        assert!(code < self.size, "element code {code} out of range");
        self.el(code)
    }

    /// All elements in code order (zero first).
    pub fn elements(&self) -> impl Iterator<Item = Fel> + '_ {
        (0..self.size).map(move |c| self.el(c))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fel> + '_ {
        (1..self.size).map(move |c| self.el(c))
    }

    /// `generator^i`.
    pub fn gen_pow(&self, i: u64) -> Fel {
        self.el(self.exp[(i % self.order()) as usize] as u64)
    }

    pub fn add(&self, x: Fel, y: Fel) -> Fel {
        self.check(x);
        self.check(y);
        self.el(self.add_codes(x.code, y.code) as u64)
    }

    pub fn sub(&self, x: Fel, y: Fel) -> Fel {
        self.add(x, self.neg(y))
    }

    pub fn neg(&self, x: Fel) -> Fel {
        self.check(x);
        let mut out = 0u64;
        let mut a = x.code as u64;
        let mut mult = 1u64;
        for _ in 0..self.k {
            let d = a % self.p;
            if d != 0 {
                out += (self.p - d) * mult;
            }
            a /= self.p;
            mult *= self.p;
        }
        self.el(out)
    }

    /// Multiplication through the discrete-log tables.
    pub fn mul(&self, x: Fel, y: Fel) -> Fel {
        self.check(x);
        self.check(y);
        self.el(self.mul_codes(x.code, y.code) as u64)
    }

    /// Multiplication by schoolbook polynomial reduction; an independent route
    /// that must agree with [`Field::mul`] everywhere.
    pub fn mul_poly(&self, x: Fel, y: Fel) -> Fel {
        self.check(x);
        self.check(y);
        let a = decode(x.code as u64, self.p, self.k);
        let b = decode(y.code as u64, self.p, self.k);
        self.el(encode(&pmulmod(&a, &b, &self.modulus, self.p), self.p))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, x: Fel) -> Result<Fel> {
        self.check(x);
        if x.code == 0 {
            return Err(Error::ZeroInverse);
        }
        let l = self.log[x.code as usize] as u64;
        let n = self.order();
        Ok(self.el(self.exp[((n - l) % n) as usize] as u64))
    }

    /// `x^e` (with `0^0 = 1`).
    pub fn pow(&self, x: Fel, e: u64) -> Fel {
        self.check(x);
        if x.code == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let n = self.order();
        let l = self.log[x.code as usize] as u64;
        self.el(self.exp[((l * (e % n)) % n) as usize] as u64)
    }

    /// Index of `x` with respect to the distinguished generator, in `[0, p^k - 1)`.
    pub fn discrete_log(&self, x: Fel) -> Result<u64> {
        self.check(x);
        if x.code == 0 {
            return Err(Error::ZeroDiscreteLog);
        }
        Ok(self.log[x.code as usize] as u64)
    }

    /// Trace onto the subfield `F_{p^d}`: `sum of x^(p^d)^j` for `j = 0..k/d`.
    pub fn subfield_trace(&self, x: Fel, d: u32) -> Result<Fel> {
        self.check(x);
        if d == 0 || !self.k.is_multiple_of(d) {
            return Err(Error::NotSubfieldDegree { d, k: self.k });
        }
        let q = arith::checked_pow(self.p, d).expect("subfield size fits");
        let mut acc = x;
        let mut y = x;
        for _ in 1..(self.k / d) {
            y = self.pow(y, q);
            acc = self.add(acc, y);
        }
        debug_assert_eq!(self.pow(acc, q), acc, "trace must land in the subfield");
        Ok(acc)
    }

    /// Whether `x` lies in the subfield `F_{p^d}`, i.e. `x^(p^d) = x`.
    pub fn is_in_subfield(&self, x: Fel, d: u32) -> Result<bool> {
        self.check(x);
        if d == 0 || !self.k.is_multiple_of(d) {
            return Err(Error::NotSubfieldDegree { d, k: self.k });
        }
        let q = arith::checked_pow(self.p, d).expect("subfield size fits");
        Ok(self.pow(x, q) == x)
    }

    /// Full table of `subfield_trace(-, d)` indexed by element code.
    pub fn subfield_trace_table(&self, d: u32) -> Result<Vec<u32>> {
        if d == 0 || !self.k.is_multiple_of(d) {
            return Err(Error::NotSubfieldDegree { d, k: self.k });
        }
        let mut table = vec![0u32; self.size as usize];
        for c in 0..self.size {
            table[c as usize] = self.subfield_trace(self.el(c), d)?.code;
        }
        Ok(table)
    }

    /// Absolute trace of `x` down to the prime field, as an integer in `[0, p)`.
    pub fn absolute_trace(&self, x: Fel) -> u64 {
        let t = self.subfield_trace(x, 1).expect("1 divides k");
        t.code as u64
    }

    pub(crate) fn el(&self, code: u64) -> Fel {
        debug_assert!(code < self.size);
        Fel {
            fid: self.fid,
            code: code as u32,
        }
    }

    pub(crate) fn owns(&self, x: Fel) -> bool {
        x.fid == self.fid
    }

    #[inline]
    fn check(&self, x: Fel) {
        assert!(self.owns(x), "element belongs to a different field");
    }

    #[inline]
    pub(crate) fn add_codes(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p as u32;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut mult = 1u32;
        for _ in 0..self.k {
            let mut d = a % p + b % p;
            if d >= p {
                d -= p;
            }
            out += d * mult;
            a /= p;
            b /= p;
            mult = mult.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub(crate) fn mul_codes(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = (self.size - 1) as u32;
        let mut l = self.log[a as usize] + self.log[b as usize];
        if l >= n {
            l -= n;
        }
        self.exp[l as usize]
    }

    pub(crate) fn exp_table(&self) -> &[u32] {
        &self.exp
    }
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Field(p={}, k={}, size={})", self.p, self.k, self.size)
    }
}

fn decode(code: u64, p: u64, k: u32) -> Vec<u64> {
    let mut ds = Vec::with_capacity(k as usize);
    let mut c = code;
    for _ in 0..k {
        ds.push(c % p);
        c /= p;
    }
    ds
}

fn encode(coeffs: &[u64], p: u64) -> u64 {
    let mut code = 0u64;
    for &c in coeffs.iter().rev() {
        code = code * p + c;
    }
    code
}

/// Lexicographically smallest monic irreducible polynomial of degree `k`.
fn find_modulus(p: u64, k: u32, size: u64) -> Vec<u64> {
    for lower in 0..size {
        let mut f = decode(lower, p, k);
        f.push(1);
        if is_irreducible(&f, p, k) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

/// Smallest-code element of multiplicative order `p^k - 1`.
fn find_generator(p: u64, k: u32, size: u64, modulus: &[u64]) -> Vec<u64> {
    let n = size - 1;
    let primes = arith::prime_factors(n);
    let one: Vec<u64> = {
        let mut v = vec![0u64; k as usize];
        v[0] = 1;
        v
    };
    for code in 1..size {
        let el = decode(code, p, k);
        if primes
            .iter()
            .all(|&t| ppowmod(&el, n / t, modulus, p) != one)
        {
            return el;
        }
    }
    unreachable!("every finite field has a primitive element")
}

/// Rabin's irreducibility test for a monic polynomial of degree `k`.
fn is_irreducible(f: &[u64], p: u64, k: u32) -> bool {
    if k == 1 {
        return true; // every monic linear polynomial is irreducible
    }
    let x: Vec<u64> = {
        let mut v = vec![0u64; k as usize];
        v[1] = 1;
        v
    };
    let pk = arith::checked_pow(p, k).expect("size fits");
    if ppowmod(&x, pk, f, p) != x {
        return false;
    }
    for &t in &arith::prime_factors(k as u64) {
        let e = arith::checked_pow(p, k / t as u32).expect("size fits");
        let mut g = ppowmod(&x, e, f, p);
        // g = x^(p^(k/t)) - x
        for (gi, xi) in g.iter_mut().zip(&x) {
            *gi = (*gi + p - xi) % p;
        }
        if pdeg(&pgcd(f, &g, p)) > 0 {
            return false;
        }
    }
    true
}

fn pdeg(v: &[u64]) -> i64 {
    for (i, &c) in v.iter().enumerate().rev() {
        if c != 0 {
            return i as i64;
        }
    }
    -1
}

/// Product of two reduced polynomials, reduced mod the monic `modulus`.
fn pmulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for (j, &mj) in modulus.iter().enumerate().take(k) {
                let idx = i - k + j;
                prod[idx] = (prod[idx] + c * (p - mj) % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

fn ppowmod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut result = vec![0u64; k];
    result[0] = 1;
    let mut b = pmulmod(base, &result, modulus, p); // reduce base
    while e > 0 {
        if e & 1 == 1 {
            result = pmulmod(&result, &b, modulus, p);
        }
        b = pmulmod(&b, &b, modulus, p);
        e >>= 1;
    }
    result
}

/// Monic gcd of two polynomials over `F_p`.
fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while pdeg(&b) >= 0 {
        // a mod b
        let db = pdeg(&b) as usize;
        let lead_inv = mod_inv(b[db], p);
        while pdeg(&a) >= db as i64 {
            let da = pdeg(&a) as usize;
            let c = a[da] * lead_inv % p;
            for j in 0..=db {
                a[da - db + j] = (a[da - db + j] + c * (p - b[j]) % p) % p;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    // normalize monic
    let da = pdeg(&a);
    if da >= 0 {
        let inv = mod_inv(a[da as usize], p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}
