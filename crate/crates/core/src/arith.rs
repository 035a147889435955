//! Integer and modular arithmetic on machine words.
//!
//! Every modulus handled by the crate is small (a few hundred at most), so
//! plain trial division and linear scans are used throughout.

use crate::error::{Error, Result};

/// An element of `Z/nZ` with `n >= 2`, stored in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass {
    value: u64,
    modulus: u64,
}

impl ResidueClass {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Self { value: value % modulus, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn add(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        Self::new(self.value + other.value, self.modulus)
    }

    pub fn mul(self, other: Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        Self { value: mul_mod(self.value, other.value, self.modulus), modulus: self.modulus }
    }

    pub fn pow(self, exponent: u64) -> Self {
        Self { value: pow_mod(self.value, exponent, self.modulus), modulus: self.modulus }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(base: u64, mut exponent: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = base % n;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, base, n);
        }
        base = mul_mod(base, base, n);
        exponent >>= 1;
    }
    result
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn inv_mod(x: u64, n: u64) -> Result<u64> {
    let (mut old_r, mut r) = (x as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { x, n });
    }
    Ok(old_s.rem_euclid(n as i128) as u64)
}

/// Deterministic primality by trial division up to `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
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

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n`, increasing.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
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

pub fn euler_totient(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

/// Least `f >= 1` with `x^f = 1 (mod n)`.
pub fn mul_order(x: u64, n: u64) -> Result<u64> {
    if n < 2 || gcd(x % n, n) != 1 {
        return Err(Error::NotInvertible { x, n });
    }
    let x = x % n;
    // The order divides the size of the unit group.
    divisors(euler_totient(n))
        .into_iter()
        .find(|&f| pow_mod(x, f, n) == 1)
        .ok_or_else(|| Error::Internal(format!("no order found for {x} mod {n}")))
}

/// Least `k` in `[0, order)` with `base^k = target (mod modulus)`, or `None`
/// when `target` is outside the cyclic subgroup generated by `base`.
pub fn discrete_log_in_subgroup(base: u64, target: u64, modulus: u64, order: u64) -> Option<u64> {
    let target = target % modulus;
    let base = base % modulus;
    let mut acc = 1 % modulus;
    for k in 0..order {
        if acc == target {
            return Some(k);
        }
        acc = mul_mod(acc, base, modulus);
    }
    None
}

pub fn exact_integer_sqrt(n: u64) -> Option<u64> {
    let mut s = (n as f64).sqrt() as u64;
    // Correct any floating point drift in either direction.
    while s > 0 && s.checked_mul(s).is_none_or(|sq| sq > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= n) {
        s += 1;
    }
    (s * s == n).then_some(s)
}

/// The least primitive root modulo the prime `p`.
pub fn least_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or_else(|| Error::Internal(format!("no primitive root modulo {p}")))
}

/// All residues in `[1, p)` of multiplicative order exactly `m` modulo `p`.
pub fn elements_of_order(m: u64, p: u64) -> Vec<u64> {
    (1..p).filter(|&x| mul_order(x, p).ok() == Some(m)).collect()
}
