//! Exact rank/degree bookkeeping for the bundle classes the verification
//! touches: Frobenius pushforward, tensor product, exterior square,
//! canonical-bundle twists, the exact-differentials class B_1, and the
//! degree profiles of the two filtrations of the pushforward tensor square.
//!
//! A class records only (rank, degree); semi-stability of an input is never
//! inferred from the pair, it enters the verdicts as a hypothesis. All
//! arithmetic is arbitrary precision and slopes compare exactly.

use std::fmt;

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};
use crate::modp::PrimeChar;

/// Numeric class (rank, degree) of a bundle on a fixed curve context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    rank: BigInt,
    degree: BigInt,
}

impl BundleClass {
    pub fn new(rank: impl Into<BigInt>, degree: impl Into<BigInt>) -> Result<Self> {
        let rank = rank.into();
        if rank < BigInt::one() {
            return Err(Error::RankTooSmall {
                required: 1,
                got: rank,
            });
        }
        Ok(BundleClass {
            rank,
            degree: degree.into(),
        })
    }

    /// Line-bundle class of the given degree.
    pub fn line(degree: impl Into<BigInt>) -> Self {
        BundleClass {
            rank: BigInt::one(),
            degree: degree.into(),
        }
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    /// μ = degree / rank, exact and in lowest terms.
    pub fn slope(&self) -> BigRational {
        BigRational::new(self.degree.clone(), self.rank.clone())
    }

    /// Tensor product class: rank r₁r₂, degree r₂d₁ + r₁d₂.
    pub fn tensor(&self, other: &Self) -> Self {
        BundleClass {
            rank: &self.rank * &other.rank,
            degree: &other.rank * &self.degree + &self.rank * &other.degree,
        }
    }

    /// Exterior-square class: rank r(r-1)/2, degree (r-1)d, so the slope
    /// doubles. Defined for rank ≥ 2.
    pub fn wedge2(&self) -> Result<Self> {
        if self.rank < BigInt::from(2) {
            return Err(Error::RankTooSmall {
                required: 2,
                got: self.rank.clone(),
            });
        }
        let rm1 = &self.rank - BigInt::one();
        Ok(BundleClass {
            rank: &self.rank * &rm1 / BigInt::from(2),
            degree: &rm1 * &self.degree,
        })
    }
}

impl fmt::Display for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rank {}, degree {})", self.rank, self.degree)
    }
}

/// The numeric curve data (p, g). Genus 1 is accepted here; destabilization
/// verdicts insist on g ≥ 2 at their own boundary.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CurveContext {
    p: PrimeChar,
    g: u64,
}

impl CurveContext {
    pub fn new(p: PrimeChar, g: u64) -> Result<Self> {
        if g < 1 {
            return Err(Error::GenusTooSmall { required: 1, got: g });
        }
        Ok(CurveContext { p, g })
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.p
    }

    pub fn genus(&self) -> u64 {
        self.g
    }

    /// p^n as an exact integer.
    pub fn char_power(&self, n: u32) -> BigInt {
        BigInt::from(self.p.get()).pow(n)
    }

    /// Class of the m-th tensor power of the canonical bundle: (1, m(2g-2)).
    pub fn omega_power(&self, m: impl Into<BigInt>) -> BundleClass {
        let deg = m.into() * BigInt::from(2 * self.g as i64 - 2);
        BundleClass::line(deg)
    }

    /// Class of the sheaf of locally exact differentials:
    /// (p-1, (p-1)(g-1)), slope g-1 regardless of p.
    pub fn b1_class(&self) -> BundleClass {
        let pm1 = BigInt::from(self.p.get() - 1);
        let gm1 = BigInt::from(self.g as i64 - 1);
        BundleClass {
            rank: pm1.clone(),
            degree: pm1 * gm1,
        }
    }

    /// Class of the n-th Frobenius pushforward: rank r·p^n, degree
    /// d + r(p^n - 1)(g - 1). n = 0 is the identity.
    pub fn frob_push(&self, b: &BundleClass, n: u32) -> BundleClass {
        let pn = self.char_power(n);
        let gm1 = BigInt::from(self.g as i64 - 1);
        BundleClass {
            rank: &b.rank * &pn,
            degree: &b.degree + &b.rank * (pn - BigInt::one()) * gm1,
        }
    }

    /// Degree profile of the canonical filtration of the pulled-back
    /// pushforward: graded pieces B ⊗ Ω^i for i = 0..p-1, totalling the
    /// pullback class (rp, p·deg F_*B).
    pub fn canonical_filtration_profile(&self, b: &BundleClass) -> FiltrationReport {
        let p = self.p.get();
        let quotients: Vec<BundleClass> = (0..p)
            .map(|i| b.tensor(&self.omega_power(i)))
            .collect();
        let pushed = self.frob_push(b, 1);
        let total = BundleClass {
            rank: &b.rank * BigInt::from(p),
            degree: BigInt::from(p) * &pushed.degree,
        };
        FiltrationReport::assemble(quotients, total)
    }

    /// Degree profile of the pushed filtration of F_*B ⊗ F_*B: graded
    /// pieces F_*(B ⊗ B ⊗ Ω^i) for i = 0..p-1.
    pub fn pushforward_tensor_profile(&self, b: &BundleClass) -> FiltrationReport {
        let p = self.p.get();
        let bb = b.tensor(b);
        let quotients: Vec<BundleClass> = (0..p)
            .map(|i| self.frob_push(&bb.tensor(&self.omega_power(i)), 1))
            .collect();
        let pushed = self.frob_push(b, 1);
        let total = pushed.tensor(&pushed);
        FiltrationReport::assemble(quotients, total)
    }
}

/// Ordered graded quotients with their slopes, the ambient total, and an
/// exact rank/degree conservation flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub quotients: Vec<BundleClass>,
    pub slopes: Vec<BigRational>,
    pub total: BundleClass,
    pub conserved: bool,
}

impl FiltrationReport {
    fn assemble(quotients: Vec<BundleClass>, total: BundleClass) -> Self {
        let rank_sum: BigInt = quotients.iter().map(|q| q.rank.clone()).sum();
        let degree_sum: BigInt = quotients.iter().map(|q| q.degree.clone()).sum();
        let conserved = rank_sum == total.rank && degree_sum == total.degree;
        let slopes = quotients.iter().map(BundleClass::slope).collect();
        FiltrationReport {
            quotients,
            slopes,
            total,
            conserved,
        }
    }
}
