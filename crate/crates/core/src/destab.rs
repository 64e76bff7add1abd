//! Destabilizing sub-bundle classes for the exterior square of an iterated
//! Frobenius pushforward, exact slope gaps, grid sweeps, and the degree
//! certificate behind the cohomological-stability counterexample.
//!
//! Three cases, determined by (rank, p) alone:
//!
//! * `HIGH_RANK` (r > 1): sub-class F_*^n(∧²E ⊗ Ω^{p^n-1}), gap
//!   (p^n-1)(g-1)/p^n — always positive for g ≥ 2.
//! * `LINE_ODD` (r = 1, p > 2): sub-class F_*^n(E⊗E ⊗ Ω^{p^n-2}), gap
//!   (p^n-3)(g-1)/p^n — positive exactly when p^n > 3.
//! * `LINE_CHAR2` (r = 1, p = 2): sub-class F_*^{n-1}(B_1⊗E ⊗ Ω^{2^{n-1}-1}),
//!   gap (2^{n-1}-1)(g-1)/2^{n-1} against the level-n exterior square —
//!   positive exactly when n > 1. The comparison against the level-(n-1)
//!   exterior square is reported alongside; it depends on deg E and is not
//!   part of the verdict.
//!
//! Together: the exterior square destabilizes iff r > 1 or p^n > 3, and the
//! two excluded boundary points (p, n, r) = (2, 1, 1), (3, 1, 1) are exactly
//! where the sub-class fills the whole ambient rank with gap 0.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp::{primes_up_to, PrimeChar};
use crate::slope::{BundleClass, CurveContext};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CaseTag {
    HighRank,
    LineOdd,
    LineChar2,
}

impl CaseTag {
    /// The case is a function of (rank, p) alone.
    pub fn for_class(rank: &BigInt, p: u64) -> CaseTag {
        if rank > &BigInt::one() {
            CaseTag::HighRank
        } else if p > 2 {
            CaseTag::LineOdd
        } else {
            CaseTag::LineChar2
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            CaseTag::HighRank => "HIGH_RANK",
            CaseTag::LineOdd => "LINE_ODD",
            CaseTag::LineChar2 => "LINE_CHAR2",
        };
        write!(f, "{tag}")
    }
}

/// The canonical destabilizing sub-bundle class of ∧²F_*^n(B).
///
/// Requires n ≥ 1. In the char-2 line case with n = 1 the construction
/// degenerates to B_1 ⊗ B (a zeroth pushforward), which is accepted.
pub fn subbundle_class(
    b: &BundleClass,
    n: u32,
    ctx: &CurveContext,
) -> Result<(CaseTag, BundleClass)> {
    if n < 1 {
        return Err(Error::PushLevelTooSmall { required: 1, got: n });
    }
    let p = ctx.characteristic().get();
    let case = CaseTag::for_class(b.rank(), p);
    let pn = ctx.char_power(n);
    let sub = match case {
        CaseTag::HighRank => {
            let twist = ctx.omega_power(pn - BigInt::one());
            ctx.frob_push(&b.wedge2()?.tensor(&twist), n)
        }
        CaseTag::LineOdd => {
            let twist = ctx.omega_power(pn - BigInt::from(2));
            ctx.frob_push(&b.tensor(b).tensor(&twist), n)
        }
        CaseTag::LineChar2 => {
            let twist = ctx.omega_power(ctx.char_power(n - 1) - BigInt::one());
            ctx.frob_push(&ctx.b1_class().tensor(b).tensor(&twist), n - 1)
        }
    };
    Ok((case, sub))
}

/// Verdict for one parameter point: the ambient exterior square, the
/// canonical sub-class, and their exact slope gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabilizationVerdict {
    pub case_tag: CaseTag,
    pub sub: BundleClass,
    pub ambient: BundleClass,
    /// μ(sub) − μ(ambient), exact.
    pub gap: BigRational,
    /// gap > 0
    pub destabilized: bool,
    /// `LINE_CHAR2` only: μ(sub) − 2μ(F_*^{n-1}B), the comparison one push
    /// level down. Unlike `gap` it depends on deg B.
    pub level_down_gap: Option<BigRational>,
}

pub fn verdict(b: &BundleClass, n: u32, ctx: &CurveContext) -> Result<DestabilizationVerdict> {
    if ctx.genus() < 2 {
        return Err(Error::GenusTooSmall {
            required: 2,
            got: ctx.genus(),
        });
    }
    let (case_tag, sub) = subbundle_class(b, n, ctx)?;
    let ambient = ctx.frob_push(b, n).wedge2()?;
    let gap = sub.slope() - ambient.slope();
    let destabilized = gap.is_positive();
    let level_down_gap = (case_tag == CaseTag::LineChar2).then(|| {
        let down = ctx.frob_push(b, n - 1);
        sub.slope() - down.slope() * BigInt::from(2)
    });
    Ok(DestabilizationVerdict {
        case_tag,
        sub,
        ambient,
        gap,
        destabilized,
        level_down_gap,
    })
}

/// The closed-form gap per case. Asserted against the direct slope
/// difference in sweeps and tests, never substituted for it.
pub fn closed_form_gap(case: CaseTag, p: u64, n: u32, g: u64) -> BigRational {
    let gm1 = BigInt::from(g as i64 - 1);
    let (num, den) = match case {
        CaseTag::HighRank => {
            let pn = BigInt::from(p).pow(n);
            ((&pn - BigInt::one()) * gm1, pn)
        }
        CaseTag::LineOdd => {
            let pn = BigInt::from(p).pow(n);
            ((&pn - BigInt::from(3)) * gm1, pn)
        }
        CaseTag::LineChar2 => {
            let ph = BigInt::from(2).pow(n - 1);
            ((&ph - BigInt::one()) * gm1, ph)
        }
    };
    BigRational::new(num, den)
}

/// Grid bounds for [`verdict_sweep`]: primes p ≤ pmax, 1 ≤ n ≤ nmax,
/// 1 ≤ r ≤ rmax, 2 ≤ g ≤ gmax, |d| ≤ dmax.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub pmax: u64,
    pub nmax: u32,
    pub rmax: u64,
    pub gmax: u64,
    pub dmax: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            pmax: 13,
            nmax: 4,
            rmax: 5,
            gmax: 6,
            dmax: 20,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub p: u64,
    pub n: u32,
    pub r: u64,
    pub g: u64,
    pub d: i64,
    pub verdict: DestabilizationVerdict,
}

#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub p: u64,
    pub n: u32,
    pub r: u64,
    pub g: u64,
    pub d: i64,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub bounds: SweepBounds,
    pub points: Vec<SweepPoint>,
    pub failures: Vec<SweepFailure>,
    /// Number of (p, r, g, d) points whose two filtration profiles were
    /// checked for rank/degree conservation.
    pub conservation_points: usize,
}

/// Sweeps the verdict over the whole grid in lexicographic (p, n, r, g, d)
/// order, asserting at every point:
///
/// * the direct gap equals the case's closed form;
/// * destabilized ⇔ (r > 1 ∨ p^n > 3);
/// * the gap does not depend on d and is linear in g − 1;
/// * the sub-class rank is strictly below the ambient rank except at the
///   r = 1, p^n ≤ 3 boundary, where the two are equal;
/// * (at n = 1) both filtration profiles conserve rank and degree.
///
/// Assertion failures are returned as data, not raised.
pub fn verdict_sweep(bounds: &SweepBounds) -> Result<SweepReport> {
    let mut points = Vec::new();
    let mut failures = Vec::new();
    let mut conservation_points = 0usize;
    for p in primes_up_to(bounds.pmax) {
        let pc = PrimeChar::new(p)?;
        for n in 1..=bounds.nmax {
            let pn = BigInt::from(p).pow(n);
            for r in 1..=bounds.rmax {
                // gaps at g = 2, indexed by the d offset, for the linearity check
                let mut gaps_at_g2: Vec<BigRational> = Vec::new();
                for g in 2..=bounds.gmax {
                    let ctx = CurveContext::new(pc, g)?;
                    let gap_at_d0 = verdict(&BundleClass::new(r, 0)?, n, &ctx)?.gap;
                    for (di, d) in (-bounds.dmax..=bounds.dmax).enumerate() {
                        let b = BundleClass::new(r, d)?;
                        let v = verdict(&b, n, &ctx)?;
                        let mut fail = |kind: &str, detail: String| {
                            failures.push(SweepFailure {
                                p,
                                n,
                                r,
                                g,
                                d,
                                kind: kind.to_string(),
                                detail,
                            });
                        };
                        let closed = closed_form_gap(v.case_tag, p, n, g);
                        if v.gap != closed {
                            fail(
                                "closed_form_gap",
                                format!("direct {} vs closed {}", v.gap, closed),
                            );
                        }
                        let expected = r > 1 || pn > BigInt::from(3);
                        if v.destabilized != expected {
                            fail(
                                "verdict_predicate",
                                format!("destabilized = {}, expected {}", v.destabilized, expected),
                            );
                        }
                        if v.gap != gap_at_d0 {
                            fail("gap_depends_on_degree", format!("gap {} at d = {d}", v.gap));
                        }
                        if g == 2 {
                            gaps_at_g2.push(v.gap.clone());
                        } else {
                            let scaled = gaps_at_g2[di].clone() * BigInt::from(g as i64 - 1);
                            if v.gap != scaled {
                                fail(
                                    "gap_not_linear_in_genus",
                                    format!("gap {} vs (g-1)-scaled {}", v.gap, scaled),
                                );
                            }
                        }
                        let boundary = r == 1 && pn <= BigInt::from(3);
                        let proper = v.sub.rank() < v.ambient.rank();
                        if boundary {
                            if v.sub.rank() != v.ambient.rank() {
                                fail(
                                    "boundary_rank",
                                    format!(
                                        "expected equal ranks, got {} vs {}",
                                        v.sub.rank(),
                                        v.ambient.rank()
                                    ),
                                );
                            }
                        } else if !proper {
                            fail(
                                "sub_rank_not_proper",
                                format!("{} vs {}", v.sub.rank(), v.ambient.rank()),
                            );
                        }
                        if n == 1 {
                            if !ctx.canonical_filtration_profile(&b).conserved {
                                fail("canonical_conservation", String::new());
                            }
                            if !ctx.pushforward_tensor_profile(&b).conserved {
                                fail("pushforward_conservation", String::new());
                            }
                            conservation_points += 1;
                        }
                        points.push(SweepPoint {
                            p,
                            n,
                            r,
                            g,
                            d,
                            verdict: v,
                        });
                    }
                }
            }
        }
    }
    Ok(SweepReport {
        bounds: *bounds,
        points,
        failures,
        conservation_points,
    })
}

/// Degree certificate for the cohomological-stability counterexample
/// E = F_*^n L, t = 2, with the minimal admissible deg L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomCertificate {
    pub p: u64,
    pub g: u64,
    pub n: u32,
    /// Minimal d ≥ 0 satisfying the divisibility condition.
    pub chosen_degree: BigInt,
    /// deg A = (divisible quantity) / modulus.
    pub deg_a: BigInt,
    /// Exterior-power index; always 2 here.
    pub t: u32,
    /// t · μ(F_*^n L).
    pub threshold: BigRational,
    pub divisibility_ok: bool,
    /// deg A ≥ threshold (the construction gives equality).
    pub degree_ok: bool,
    /// Degree of the twisted sub-bundle class minus modulus · deg A; zero
    /// certifies the trivial-twist witness with nonzero global sections.
    pub witness_twist_degree: BigInt,
    pub valid: bool,
}

/// Builds the certificate. Requires g ≥ 2 and n ≥ 2 (the construction
/// needs n > 1).
pub fn cohom_certificate(ctx: &CurveContext, n: u32) -> Result<CohomCertificate> {
    if ctx.genus() < 2 {
        return Err(Error::GenusTooSmall {
            required: 2,
            got: ctx.genus(),
        });
    }
    if n < 2 {
        return Err(Error::PushLevelTooSmall { required: 2, got: n });
    }
    let p = ctx.characteristic().get();
    let g = ctx.genus();
    let gm1 = BigInt::from(g as i64 - 1);
    let pn = ctx.char_power(n);
    // (p^n - 1)(g - 1); both cases pick the smallest d ≥ 0 with
    // modulus | d + base (for p = 2, modulus 2^{n-1}) respectively
    // p^n | 2d + 2·base (for p > 2, where 2 is a unit mod p^n).
    let base = (&pn - BigInt::one()) * &gm1;
    let modulus = if p == 2 { ctx.char_power(n - 1) } else { pn.clone() };
    let chosen_degree = (-&base).mod_floor(&modulus);
    let quantity = if p == 2 {
        &chosen_degree + &base
    } else {
        BigInt::from(2) * (&chosen_degree + &base)
    };
    let divisibility_ok = quantity.is_multiple_of(&modulus);
    let deg_a = &quantity / &modulus;
    let line = BundleClass::line(chosen_degree.clone());
    let threshold = ctx.frob_push(&line, n).slope() * BigInt::from(2);
    let degree_ok = BigRational::from(deg_a.clone()) >= threshold;
    let witness_class = if p == 2 {
        let twist = ctx.omega_power(ctx.char_power(n - 1) - BigInt::one());
        ctx.b1_class().tensor(&line).tensor(&twist)
    } else {
        let twist = ctx.omega_power(&pn - BigInt::one());
        line.tensor(&line).tensor(&twist)
    };
    let witness_twist_degree = witness_class.degree() - &modulus * &deg_a;
    let valid = divisibility_ok && degree_ok && witness_twist_degree.is_zero();
    Ok(CohomCertificate {
        p,
        g,
        n,
        chosen_degree,
        deg_a,
        t: 2,
        threshold,
        divisibility_ok,
        degree_ok,
        witness_twist_degree,
        valid,
    })
}
