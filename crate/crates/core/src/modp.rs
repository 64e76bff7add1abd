//! Binomial coefficients modulo a prime and the alternating-sign congruences.
//!
//! `binom_mod` evaluates C(n, k) mod p by Lucas decomposition in base p, so
//! arguments up to p^4 cost a handful of digit binomials and nothing
//! overflows. `check_binomial_congruences` verifies, with the two sides
//! computed by independent routines,
//!
//! ```text
//!   C(p-1, h) ≡ (-1)^h         (mod p)   for 0 ≤ h ≤ p-1,
//!   C(p-2, h) ≡ (-1)^h (h+1)   (mod p)   for 0 ≤ h ≤ p-2.
//! ```
//!
//! These signs are what collapse the expansion of t^k α^{p-1} in the local
//! model to an all-ones antidiagonal sum; see [`crate::local_model`].

use std::fmt;

use crate::error::{Error, Result};

/// A prime characteristic, validated at construction by trial division.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeChar(u64);

impl PrimeChar {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeChar(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes up to and including `n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&m| is_prime(m)).collect()
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    let (a, b) = (a % p, b % p);
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    let a = a % p;
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue, by Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// C(n, k) mod p for digits n, k < p, by the multiplicative formula.
fn binom_digit(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1 % p;
    for i in 1..=k {
        acc = mul_mod(acc, (n - k + i) % p, p);
        acc = mul_mod(acc, inv_mod(i % p, p), p);
    }
    acc
}

/// C(n, k) mod p via Lucas decomposition; returns 0 when k > n.
pub fn binom_mod(n: u64, k: u64, p: PrimeChar) -> u64 {
    let q = p.get();
    let (mut n, mut k) = (n, k);
    let mut acc = 1 % q;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % q, k % q);
        if kd > nd {
            return 0;
        }
        acc = mul_mod(acc, binom_digit(nd, kd, q), q);
        n /= q;
        k /= q;
    }
    acc
}

/// Verifies both sign-congruence families for `p`, the left side through
/// [`binom_mod`] and the right side by direct modular arithmetic.
pub fn check_binomial_congruences(p: PrimeChar) -> bool {
    let q = p.get();
    for h in 0..q {
        let lhs = binom_mod(q - 1, h, p);
        let rhs = if h % 2 == 0 { 1 } else { q - 1 };
        if lhs != rhs {
            return false;
        }
    }
    for h in 0..q - 1 {
        let lhs = binom_mod(q - 2, h, p);
        let mut rhs = (h + 1) % q;
        if h % 2 == 1 {
            rhs = neg_mod(rhs, q);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}
