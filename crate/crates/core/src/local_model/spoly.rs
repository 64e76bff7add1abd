//! Coefficients of the local model: F_p[s] truncated at a fixed s-power.

use std::fmt;

use rand::Rng;

use crate::modp::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, PrimeChar};

/// Polynomial in the flat variable s, coefficients reduced mod p, degree
/// below the ambient truncation order. Trailing zeros are trimmed, so
/// equality and [`SPoly::is_zero`] are structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SPoly(Vec<u64>);

impl SPoly {
    pub fn zero() -> Self {
        SPoly(Vec::new())
    }

    pub fn one(p: PrimeChar) -> Self {
        Self::constant(1, p)
    }

    pub fn constant(c: u64, p: PrimeChar) -> Self {
        Self::normalize(vec![c % p.get()])
    }

    /// c·s^deg, truncated away entirely when deg ≥ trunc.
    pub fn s_power(c: u64, deg: usize, p: PrimeChar, trunc: usize) -> Self {
        let c = c % p.get();
        if c == 0 || deg >= trunc {
            return Self::zero();
        }
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        SPoly(v)
    }

    fn normalize(mut v: Vec<u64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        SPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Reduces arbitrary coefficient data into a valid element.
    pub(crate) fn reduced(v: &SPoly, p: PrimeChar, trunc: usize) -> Self {
        let vals = v
            .0
            .iter()
            .take(trunc)
            .map(|&c| c % p.get())
            .collect::<Vec<_>>();
        Self::normalize(vals)
    }

    pub(crate) fn add(&self, other: &Self, p: PrimeChar) -> Self {
        let q = p.get();
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|d| add_mod(self.coeff(d), other.coeff(d), q))
            .collect();
        Self::normalize(v)
    }

    pub(crate) fn sub(&self, other: &Self, p: PrimeChar) -> Self {
        let q = p.get();
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|d| sub_mod(self.coeff(d), other.coeff(d), q))
            .collect();
        Self::normalize(v)
    }

    pub(crate) fn neg(&self, p: PrimeChar) -> Self {
        let q = p.get();
        Self::normalize(self.0.iter().map(|&c| neg_mod(c, q)).collect())
    }

    pub(crate) fn scale(&self, c: u64, p: PrimeChar) -> Self {
        let q = p.get();
        let c = c % q;
        Self::normalize(self.0.iter().map(|&a| mul_mod(a, c, q)).collect())
    }

    pub(crate) fn mul(&self, other: &Self, p: PrimeChar, trunc: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let q = p.get();
        let len = (self.0.len() + other.0.len() - 1).min(trunc);
        let mut v = vec![0u64; len];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 || i >= trunc {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                if i + j >= trunc {
                    break;
                }
                v[i + j] = add_mod(v[i + j], mul_mod(a, b, q), q);
            }
        }
        Self::normalize(v)
    }

    /// Multiplication by s^e.
    pub(crate) fn shift_s(&self, e: usize, trunc: usize) -> Self {
        if self.is_zero() || e == 0 {
            return if e == 0 { self.clone() } else { Self::zero() };
        }
        let mut v = vec![0u64; e];
        v.extend_from_slice(&self.0);
        v.truncate(trunc);
        Self::normalize(v)
    }

    /// Inverse in F_p[s]/(s^trunc); `None` when the constant term vanishes.
    pub(crate) fn inverse(&self, p: PrimeChar, trunc: usize) -> Option<Self> {
        let c0 = self.constant_term();
        if c0 == 0 {
            return None;
        }
        let q = p.get();
        let inv0 = inv_mod(c0, q);
        let mut out = vec![0u64; trunc];
        out[0] = inv0;
        for d in 1..trunc {
            // coefficient of s^d in self·out must vanish:
            //   b_d = -inv0 · Σ_{i=1}^{d} a_i b_{d-i}
            let mut acc = 0;
            for i in 1..=d {
                acc = add_mod(acc, mul_mod(self.coeff(i), out[d - i], q), q);
            }
            out[d] = mul_mod(neg_mod(acc, q), inv0, q);
        }
        Some(Self::normalize(out))
    }

    pub(crate) fn random<R: Rng + ?Sized>(rng: &mut R, p: PrimeChar, trunc: usize) -> Self {
        let v = (0..trunc).map(|_| rng.gen_range(0..p.get())).collect();
        Self::normalize(v)
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "s")?,
                (1, c) => write!(f, "{c}*s")?,
                (d, 1) => write!(f, "s^{d}")?,
                (d, c) => write!(f, "{c}*s^{d}")?,
            }
        }
        Ok(())
    }
}
