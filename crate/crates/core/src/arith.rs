//! Small integer helpers used throughout the crate.

/// Deterministic primality test by trial division; fine for the supported
/// range (p below the field size bound).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp` as `u64`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// `base^exp` saturating at `u128::MAX`; safe for validating absurd inputs.
pub fn saturating_pow_u128(base: u64, exp: u32) -> u128 {
    if base <= 1 {
        return base.max(u64::from(exp == 0)) as u128;
    }
    let mut acc: u128 = 1;
    // base >= 2 saturates within 128 steps
    for _ in 0..exp.min(128) {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Distinct prime factors, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64 + 2;
    while x * x > n {
        x -= 1;
    }
    x
}

/// `Some(s)` when `n = s^2` exactly.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let s = isqrt(n);
    (s * s == n).then_some(s)
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
