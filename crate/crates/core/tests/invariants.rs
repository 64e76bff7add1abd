//! Cross-module algebraic invariants: exact slope laws under pushforward,
//! the binomial sign rules feeding the local expansions, and the seeded
//! local-model identities.

use frobwedge::{
    binom_mod, classify_symmetry, closed_form_gap, verdict, BiTensorElement, BundleClass,
    CurveContext, PrimeChar,
};
use num::{BigInt, BigRational, One};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pc(p: u64) -> PrimeChar {
    PrimeChar::new(p).unwrap()
}

fn ctx(p: u64, g: u64) -> CurveContext {
    CurveContext::new(pc(p), g).unwrap()
}

proptest! {
    /// μ(F_*^n B) − (g−1) = (μ(B) − (g−1))/p^n, the affine-contraction form
    /// of the pushforward slope rule.
    #[test]
    fn pushforward_contracts_slopes_affinely(
        pi in 0usize..6,
        g in 1u64..=6,
        n in 0u32..=4,
        r in 1i64..=40,
        d in -100i64..=100,
    ) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let c = ctx(p, g);
        let b = BundleClass::new(r, d).unwrap();
        let gm1 = BigRational::from(BigInt::from(g as i64 - 1));
        let pn = BigRational::from(BigInt::from(p).pow(n));
        let lhs = c.frob_push(&b, n).slope() - gm1.clone();
        let rhs = (b.slope() - gm1) / pn;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_square_slope_doubles(r in 2i64..=60, d in -200i64..=200) {
        let b = BundleClass::new(r, d).unwrap();
        let two = BigRational::from(BigInt::from(2));
        prop_assert_eq!(b.wedge2().unwrap().slope(), b.slope() * two);
    }

    #[test]
    fn pushforward_semigroup_law(
        pi in 0usize..4,
        g in 1u64..=5,
        n in 0u32..=2,
        m in 0u32..=2,
        d in -50i64..=50,
    ) {
        let p = [2u64, 3, 5, 7][pi];
        let c = ctx(p, g);
        let b = BundleClass::new(3, d).unwrap();
        prop_assert_eq!(c.frob_push(&c.frob_push(&b, n), m), c.frob_push(&b, n + m));
    }

    /// The binomial signs behind the all-ones antidiagonal expansion.
    #[test]
    fn top_row_binomials_alternate(pi in 0usize..6, h in 0u64..=96) {
        let p = [2u64, 3, 5, 7, 11, 97][pi];
        prop_assume!(h < p);
        let expect = if h % 2 == 0 { 1 } else { p - 1 };
        prop_assert_eq!(binom_mod(p - 1, h, pc(p)), expect);
    }

    /// Gaps never depend on the input degree and scale linearly in g − 1.
    #[test]
    fn gap_shape(pi in 0usize..4, n in 1u32..=3, r in 1u64..=4, g in 2u64..=6, d in -30i64..=30) {
        let p = [2u64, 3, 5, 7][pi];
        let v = verdict(&BundleClass::new(r, d).unwrap(), n, &ctx(p, g)).unwrap();
        let base = closed_form_gap(v.case_tag, p, n, 2);
        prop_assert_eq!(v.gap.clone(), base * BigInt::from(g as i64 - 1));
        prop_assert_eq!(v.gap, verdict(&BundleClass::new(r, 0).unwrap(), n, &ctx(p, g)).unwrap().gap);
    }
}

#[test]
fn alpha_is_nilpotent_through_thirteen() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        let a = BiTensorElement::alpha(pc(p), 2).unwrap();
        assert!(a.pow(p as u32).unwrap().is_zero(), "p = {p}");
    }
}

#[test]
fn seeded_swap_and_coordinate_invariants() {
    for p in [2u64, 3, 5, 7] {
        let prime = pc(p);
        let mut rng = ChaCha8Rng::seed_from_u64(2_000 + p);
        for _ in 0..50 {
            let x = BiTensorElement::random(prime, 2, &mut rng).unwrap();
            let y = BiTensorElement::random(prime, 2, &mut rng).unwrap();
            // involutive ring map commuting with the F_p[s]-structure
            assert_eq!(x.swap().swap(), x);
            assert_eq!(x.mul(&y).unwrap().swap(), x.swap().mul(&y.swap()).unwrap());
            // coordinates round-trip exactly
            assert_eq!(x.coordinates().unwrap().expand().unwrap(), x);
            // Leibniz rule
            let lhs = x.mul(&y).unwrap().connection();
            let rhs = x
                .connection()
                .mul(&y)
                .unwrap()
                .add(&x.mul(&y.connection()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn higher_truncation_orders_stay_consistent() {
    // Order 2 is exact for the shipped identities; the same identities hold
    // verbatim at higher orders.
    for trunc in [3usize, 4] {
        let prime = pc(5);
        let a = BiTensorElement::alpha(prime, trunc).unwrap();
        assert!(a.pow(5).unwrap().is_zero());
        assert!(classify_symmetry(prime, trunc).unwrap().matches_expected);
        let mut rng = ChaCha8Rng::seed_from_u64(31 + trunc as u64);
        for _ in 0..20 {
            let x = BiTensorElement::random(prime, trunc, &mut rng).unwrap();
            assert_eq!(x.coordinates().unwrap().expand().unwrap(), x);
        }
    }
}

#[test]
fn slope_comparisons_are_exact() {
    // A gap of 1/p^n at the largest grid point survives exact comparison.
    let c = ctx(13, 2);
    let v = verdict(&BundleClass::new(5, 20).unwrap(), 4, &c).unwrap();
    let pn = BigInt::from(13u64).pow(4);
    assert_eq!(
        v.gap,
        BigRational::new(pn.clone() - BigInt::one(), pn)
    );
    assert!(v.destabilized);
}
