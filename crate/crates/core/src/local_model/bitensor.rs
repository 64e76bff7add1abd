//! Elements of the truncated bi-tensor ring k[t] ⊗_{k[s]} k[t] with s = t^p.
//!
//! As an F_p[s]-module the ring is free on the p² monomials t^i ⊗ t^j,
//! 0 ≤ i, j < p; products reduce each tensor leg independently by t^p = s,
//! carrying the excess into the coefficient. The element α = 1⊗t − t⊗1
//! spans the kernel of the multiplication map down to k[t], satisfies
//! α^p = 0, and {t^k α^m : 0 ≤ k, m < p} is a second F_p[s]-basis,
//! unitriangular against the monomial basis when read by decreasing right
//! exponent (the only term of t^k α^m with right exponent m is t^k ⊗ t^m,
//! with coefficient 1). The filtration level of an element is the least
//! α-exponent in those coordinates.
//!
//! The canonical connection is realized as d/dt on the left leg, extended
//! F_p[s]-linearly: it is well defined because d(t^p)/dt = p t^{p-1} = 0,
//! and this orientation gives ∇(α^m) = -m α^{m-1}. It drops the filtration
//! level by exactly one step and acts on the level-l graded piece as
//! multiplication by the unit -l for 1 ≤ l ≤ p-1.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::modp::PrimeChar;

use super::spoly::SPoly;

/// Element of k[t] ⊗_{k[s]} k[t] over F_p, truncated in s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiTensorElement {
    p: PrimeChar,
    trunc: usize,
    /// Monomial coefficients, index i·p + j for t^i ⊗ t^j.
    coeffs: Vec<SPoly>,
}

impl BiTensorElement {
    pub fn zero(p: PrimeChar, trunc: usize) -> Result<Self> {
        if trunc < 2 {
            return Err(Error::TruncationTooSmall(trunc));
        }
        let q = p.get() as usize;
        Ok(BiTensorElement {
            p,
            trunc,
            coeffs: vec![SPoly::zero(); q * q],
        })
    }

    /// The unit 1 ⊗ 1.
    pub fn one(p: PrimeChar, trunc: usize) -> Result<Self> {
        Self::monomial(p, trunc, 0, 0)
    }

    /// The basis monomial t^i ⊗ t^j.
    pub fn monomial(p: PrimeChar, trunc: usize, i: usize, j: usize) -> Result<Self> {
        let mut out = Self::zero(p, trunc)?;
        let idx = out.index(i, j)?;
        out.coeffs[idx] = SPoly::one(p);
        Ok(out)
    }

    /// α = 1⊗t − t⊗1, the generator of the kernel of multiplication.
    pub fn alpha(p: PrimeChar, trunc: usize) -> Result<Self> {
        let mut out = Self::zero(p, trunc)?;
        let q = p.get() as usize;
        out.coeffs[1] = SPoly::one(p); // (0, 1)
        out.coeffs[q] = SPoly::constant(p.get() - 1, p); // (1, 0)
        Ok(out)
    }

    /// t^k α^m computed in the ring: the monomial t^k ⊗ 1 times the m-th
    /// power of α.
    pub fn filtration_basis_element(
        p: PrimeChar,
        trunc: usize,
        k: usize,
        m: usize,
    ) -> Result<Self> {
        let q = p.get() as usize;
        if m >= q {
            return Err(Error::IndexOutOfRange { i: k, j: m, p: p.get() });
        }
        let tk = Self::monomial(p, trunc, k, 0)?;
        tk.mul(&Self::alpha(p, trunc)?.pow(m as u32)?)
    }

    /// Uniformly random coefficient table, for seeded property checks.
    pub fn random<R: Rng + ?Sized>(p: PrimeChar, trunc: usize, rng: &mut R) -> Result<Self> {
        let mut out = Self::zero(p, trunc)?;
        for c in out.coeffs.iter_mut() {
            *c = SPoly::random(rng, p, trunc);
        }
        Ok(out)
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.p
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    fn index(&self, i: usize, j: usize) -> Result<usize> {
        let q = self.p.get() as usize;
        if i >= q || j >= q {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                p: self.p.get(),
            });
        }
        Ok(i * q + j)
    }

    /// Coefficient of the monomial t^i ⊗ t^j; panics on an out-of-range
    /// index, which is a programmer error.
    pub fn coeff(&self, i: usize, j: usize) -> &SPoly {
        let q = self.p.get() as usize;
        assert!(i < q && j < q, "monomial index ({i}, {j}) with p = {q}");
        &self.coeffs[i * q + j]
    }

    /// Overwrites one monomial coefficient, re-reducing the data mod p and
    /// the truncation so the representation invariants hold regardless of
    /// how the polynomial was assembled.
    pub fn set_coeff(&mut self, i: usize, j: usize, c: &SPoly) -> Result<()> {
        let idx = self.index(i, j)?;
        self.coeffs[idx] = SPoly::reduced(c, self.p, self.trunc);
        Ok(())
    }

    pub(crate) fn add_assign_term(&mut self, i: usize, j: usize, c: &SPoly) -> Result<()> {
        let idx = self.index(i, j)?;
        let reduced = SPoly::reduced(c, self.p, self.trunc);
        self.coeffs[idx] = self.coeffs[idx].add(&reduced, self.p);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SPoly::is_zero)
    }

    fn ensure_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::OperandMismatch {
                what: "characteristic",
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        if self.trunc != other.trunc {
            return Err(Error::OperandMismatch {
                what: "truncation order",
                left: self.trunc as u64,
                right: other.trunc as u64,
            });
        }
        Ok(())
    }

    fn zero_like(&self) -> Self {
        BiTensorElement {
            p: self.p,
            trunc: self.trunc,
            coeffs: vec![SPoly::zero(); self.coeffs.len()],
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let mut out = self.clone();
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c = c.add(o, self.p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let mut out = self.clone();
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c = c.sub(o, self.p);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.neg(self.p);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = a.scale(c, self.p);
        }
        out
    }

    pub fn scale_spoly(&self, c: &SPoly) -> Self {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = a.mul(c, self.p, self.trunc);
        }
        out
    }

    /// Ring product. Each tensor leg reduces by t^p = s on its own, so a
    /// monomial product carries s^(⌊(i+k)/p⌋ + ⌊(j+l)/p⌋) into the
    /// coefficient.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        let q = self.p.get() as usize;
        let mut out = self.zero_like();
        for i in 0..q {
            for j in 0..q {
                let a = &self.coeffs[i * q + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        let b = &other.coeffs[k * q + l];
                        if b.is_zero() {
                            continue;
                        }
                        let carry = (i + k) / q + (j + l) / q;
                        let term = a.mul(b, self.p, self.trunc).shift_s(carry, self.trunc);
                        if term.is_zero() {
                            continue;
                        }
                        let idx = ((i + k) % q) * q + (j + l) % q;
                        out.coeffs[idx] = out.coeffs[idx].add(&term, self.p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.p, self.trunc)?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// dt-component of the canonical connection: the derivation of the left
    /// tensor leg, F_p[s]-linear because s = t^p is flat.
    pub fn connection(&self) -> Self {
        let q = self.p.get() as usize;
        let mut out = self.zero_like();
        for i in 1..q {
            for j in 0..q {
                let c = &self.coeffs[i * q + j];
                if c.is_zero() {
                    continue;
                }
                let idx = (i - 1) * q + j;
                out.coeffs[idx] = out.coeffs[idx].add(&c.scale(i as u64, self.p), self.p);
            }
        }
        out
    }

    /// Exchanges the tensor legs; s is central, so coefficients carry over.
    pub fn swap(&self) -> Self {
        let q = self.p.get() as usize;
        let mut out = self.zero_like();
        for i in 0..q {
            for j in 0..q {
                out.coeffs[j * q + i] = self.coeffs[i * q + j].clone();
            }
        }
        out
    }

    /// Coordinates in the basis {t^k α^m}, solved by back-substitution in
    /// decreasing right exponent m. The change of basis is unitriangular
    /// there (the only term of t^k α^m with right exponent m is t^k ⊗ t^m,
    /// coefficient 1), so the solve never divides.
    pub fn coordinates(&self) -> Result<FiltrationCoordinates> {
        let q = self.p.get() as usize;
        let basis = filtration_basis_table(self.p, self.trunc)?;
        let mut residual = self.clone();
        let mut coeffs = vec![SPoly::zero(); q * q];
        for m in (0..q).rev() {
            for k in 0..q {
                let c = residual.coeffs[k * q + m].clone();
                if !c.is_zero() {
                    residual = residual.sub(&basis[k][m].scale_spoly(&c))?;
                    coeffs[k * q + m] = c;
                }
            }
        }
        if !residual.is_zero() {
            return Err(Error::Internal(
                "filtration basis failed to reduce the element".into(),
            ));
        }
        Ok(FiltrationCoordinates {
            p: self.p,
            trunc: self.trunc,
            coeffs,
        })
    }

    /// Largest l with the element inside the α^l-span; p for zero.
    pub fn filtration_level(&self) -> usize {
        let coords = self
            .coordinates()
            .expect("the t^k α^m basis is unitriangular over F_p[s]; the solve cannot fail");
        coords.min_level().unwrap_or(self.p.get() as usize)
    }
}

impl fmt::Display for BiTensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let q = self.p.get() as usize;
        let mut first = true;
        for i in 0..q {
            for j in 0..q {
                let c = &self.coeffs[i * q + j];
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                let mono = match (i, j) {
                    (0, 0) => "1⊗1".to_string(),
                    (0, j) => format!("1⊗t^{j}"),
                    (i, 0) => format!("t^{i}⊗1"),
                    (i, j) => format!("t^{i}⊗t^{j}"),
                };
                if *c == SPoly::one(self.p) {
                    write!(f, "{mono}")?;
                } else {
                    write!(f, "({c})·{mono}")?;
                }
            }
        }
        Ok(())
    }
}

/// Table of the basis elements t^k α^m, indexed [k][m].
pub(crate) fn filtration_basis_table(
    p: PrimeChar,
    trunc: usize,
) -> Result<Vec<Vec<BiTensorElement>>> {
    let q = p.get() as usize;
    let alpha = BiTensorElement::alpha(p, trunc)?;
    let mut alpha_pows = Vec::with_capacity(q);
    alpha_pows.push(BiTensorElement::one(p, trunc)?);
    for _ in 1..q {
        let next = alpha_pows.last().unwrap().mul(&alpha)?;
        alpha_pows.push(next);
    }
    let mut table = Vec::with_capacity(q);
    for k in 0..q {
        let tk = BiTensorElement::monomial(p, trunc, k, 0)?;
        let row = alpha_pows
            .iter()
            .map(|am| tk.mul(am))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(table)
}

/// Coordinates of an element in the filtration basis {t^k α^m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationCoordinates {
    p: PrimeChar,
    trunc: usize,
    /// F_p[s] coordinate at (k, m), index k·p + m.
    coeffs: Vec<SPoly>,
}

impl FiltrationCoordinates {
    pub fn characteristic(&self) -> PrimeChar {
        self.p
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize, m: usize) -> &SPoly {
        let q = self.p.get() as usize;
        assert!(k < q && m < q, "coordinate index ({k}, {m}) with p = {q}");
        &self.coeffs[k * q + m]
    }

    /// Least α-exponent carrying a nonzero coordinate.
    pub fn min_level(&self) -> Option<usize> {
        let q = self.p.get() as usize;
        (0..q).find(|&m| (0..q).any(|k| !self.coeffs[k * q + m].is_zero()))
    }

    /// Re-expands the coordinates into the monomial table; exact inverse of
    /// [`BiTensorElement::coordinates`].
    pub fn expand(&self) -> Result<BiTensorElement> {
        let q = self.p.get() as usize;
        let basis = filtration_basis_table(self.p, self.trunc)?;
        let mut out = BiTensorElement::zero(self.p, self.trunc)?;
        for k in 0..q {
            for m in 0..q {
                let c = &self.coeffs[k * q + m];
                if !c.is_zero() {
                    out = out.add(&basis[k][m].scale_spoly(c))?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::{binom_mod, neg_mod};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pc(p: u64) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    /// Independent expansion of t^k α^m straight from the binomial formula
    /// t^k α^m = Σ_h C(m,h) (-1)^h t^{k+h} ⊗ t^{m-h}, reducing t^p = s.
    fn basis_by_binomial(p: PrimeChar, trunc: usize, k: usize, m: usize) -> BiTensorElement {
        let q = p.get();
        let mut out = BiTensorElement::zero(p, trunc).unwrap();
        for h in 0..=m {
            let mut c = binom_mod(m as u64, h as u64, p);
            if h % 2 == 1 {
                c = neg_mod(c, q);
            }
            let (i, j) = (k + h, m - h);
            let carry = i / q as usize;
            let coeff = SPoly::s_power(c, carry, p, trunc);
            out.add_assign_term(i % q as usize, j, &coeff).unwrap();
        }
        out
    }

    #[test]
    fn alpha_tables() {
        for (p, neg_one) in [(2u64, 1u64), (3, 2), (5, 4)] {
            let a = BiTensorElement::alpha(pc(p), 2).unwrap();
            assert_eq!(*a.coeff(0, 1), SPoly::one(pc(p)));
            assert_eq!(*a.coeff(1, 0), SPoly::constant(neg_one, pc(p)));
        }
    }

    #[test]
    fn t_times_top_power_reduces_to_s() {
        for p in [2u64, 3, 5] {
            let pr = pc(p);
            let t = BiTensorElement::monomial(pr, 2, 1, 0).unwrap();
            let top = BiTensorElement::monomial(pr, 2, p as usize - 1, 0).unwrap();
            let prod = t.mul(&top).unwrap();
            let mut expect = BiTensorElement::zero(pr, 2).unwrap();
            expect
                .set_coeff(0, 0, &SPoly::s_power(1, 1, pr, 2))
                .unwrap();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn alpha_squared_at_three() {
        let pr = pc(3);
        let a = BiTensorElement::alpha(pr, 2).unwrap();
        let sq = a.mul(&a).unwrap();
        let mut expect = BiTensorElement::zero(pr, 2).unwrap();
        for (i, j) in [(0, 2), (1, 1), (2, 0)] {
            expect.set_coeff(i, j, &SPoly::one(pr)).unwrap();
        }
        assert_eq!(sq, expect);
    }

    #[test]
    fn alpha_is_nilpotent_of_order_p() {
        for p in [2u64, 3, 5, 7] {
            let a = BiTensorElement::alpha(pc(p), 2).unwrap();
            assert!(!a.pow(p as u32 - 1).unwrap().is_zero());
            assert!(a.pow(p as u32).unwrap().is_zero(), "p = {p}");
        }
    }

    #[test]
    fn mismatched_operands_error() {
        let a = BiTensorElement::alpha(pc(3), 2).unwrap();
        let b = BiTensorElement::alpha(pc(5), 2).unwrap();
        assert!(a.mul(&b).is_err());
        let c = BiTensorElement::alpha(pc(3), 3).unwrap();
        assert!(a.add(&c).is_err());
        assert!(BiTensorElement::zero(pc(3), 1).is_err());
    }

    #[test]
    fn connection_of_alpha_and_unit() {
        for p in [2u64, 3, 5] {
            let pr = pc(p);
            let a = BiTensorElement::alpha(pr, 2).unwrap();
            let mut expect = BiTensorElement::zero(pr, 2).unwrap();
            expect.set_coeff(0, 0, &SPoly::constant(p - 1, pr)).unwrap();
            assert_eq!(a.connection(), expect);
            assert!(BiTensorElement::one(pr, 2).unwrap().connection().is_zero());
        }
    }

    #[test]
    fn connection_power_rule() {
        // ∇(α^l) = -l α^{l-1}, the right side expanded independently from
        // the binomial formula.
        for p in [3u64, 5, 7] {
            let pr = pc(p);
            let a = BiTensorElement::alpha(pr, 2).unwrap();
            for l in 1..p as usize {
                let lhs = a.pow(l as u32).unwrap().connection();
                let rhs = basis_by_binomial(pr, 2, 0, l - 1).scale(neg_mod(l as u64, p));
                assert_eq!(lhs, rhs, "p = {p}, l = {l}");
            }
        }
    }

    #[test]
    fn swap_properties() {
        let pr = pc(5);
        let a = BiTensorElement::alpha(pr, 2).unwrap();
        assert_eq!(a.swap(), a.neg());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let x = BiTensorElement::random(pr, 2, &mut rng).unwrap();
            let y = BiTensorElement::random(pr, 2, &mut rng).unwrap();
            assert_eq!(x.swap().swap(), x);
            // swap is a ring map
            assert_eq!(
                x.mul(&y).unwrap().swap(),
                x.swap().mul(&y.swap()).unwrap()
            );
        }
    }

    #[test]
    fn swap_of_alpha_powers_alternates() {
        for p in [3u64, 5] {
            let pr = pc(p);
            for l in 0..p as usize {
                let al = basis_by_binomial(pr, 2, 0, l);
                let expect = if l % 2 == 0 { al.clone() } else { al.neg() };
                assert_eq!(al.swap(), expect, "p = {p}, l = {l}");
            }
        }
    }

    #[test]
    fn basis_routes_agree() {
        // Ring-multiplication route equals the direct binomial expansion.
        for p in [2u64, 3, 5, 7, 11, 13] {
            let pr = pc(p);
            for k in 0..p as usize {
                for m in 0..p as usize {
                    assert_eq!(
                        BiTensorElement::filtration_basis_element(pr, 2, k, m).unwrap(),
                        basis_by_binomial(pr, 2, k, m),
                        "p = {p}, k = {k}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn coordinates_of_basis_and_rearrangement() {
        let pr = pc(5);
        let a2 = BiTensorElement::alpha(pr, 2).unwrap().pow(2).unwrap();
        let coords = a2.coordinates().unwrap();
        for k in 0..5 {
            for m in 0..5 {
                let expect = if (k, m) == (0, 2) {
                    SPoly::one(pr)
                } else {
                    SPoly::zero()
                };
                assert_eq!(*coords.coeff(k, m), expect);
            }
        }
        // 1⊗t = t⊗1 + α
        let right_t = BiTensorElement::monomial(pr, 2, 0, 1).unwrap();
        let coords = right_t.coordinates().unwrap();
        assert_eq!(*coords.coeff(1, 0), SPoly::one(pr));
        assert_eq!(*coords.coeff(0, 1), SPoly::one(pr));
        assert_eq!(coords.expand().unwrap(), right_t);
    }

    #[test]
    fn coordinates_round_trip_on_random_elements() {
        for p in [2u64, 3, 5, 7] {
            let pr = pc(p);
            let mut rng = ChaCha8Rng::seed_from_u64(100 + p);
            for _ in 0..100 {
                let x = BiTensorElement::random(pr, 2, &mut rng).unwrap();
                assert_eq!(x.coordinates().unwrap().expand().unwrap(), x);
            }
        }
    }

    #[test]
    fn filtration_levels() {
        for p in [3u64, 5] {
            let pr = pc(p);
            let a = BiTensorElement::alpha(pr, 2).unwrap();
            assert_eq!(a.pow(p as u32 - 1).unwrap().filtration_level(), p as usize - 1);
            assert_eq!(BiTensorElement::one(pr, 2).unwrap().filtration_level(), 0);
            assert_eq!(
                BiTensorElement::zero(pr, 2).unwrap().filtration_level(),
                p as usize
            );
            for k in 0..p as usize {
                for m in 0..p as usize {
                    let e = BiTensorElement::filtration_basis_element(pr, 2, k, m).unwrap();
                    assert_eq!(e.filtration_level(), m, "p = {p}, k = {k}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn leibniz_rule_on_seeded_pairs() {
        for p in [2u64, 3, 5] {
            let pr = pc(p);
            let mut rng = ChaCha8Rng::seed_from_u64(7 * p);
            for _ in 0..20 {
                let x = BiTensorElement::random(pr, 2, &mut rng).unwrap();
                let y = BiTensorElement::random(pr, 2, &mut rng).unwrap();
                let lhs = x.mul(&y).unwrap().connection();
                let rhs = x
                    .connection()
                    .mul(&y)
                    .unwrap()
                    .add(&x.mul(&y.connection()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "p = {p}");
            }
        }
    }

    #[test]
    fn connection_shifts_filtration_and_acts_by_minus_l() {
        for p in [3u64, 5] {
            let pr = pc(p);
            for k in 0..p as usize {
                for m in 0..p as usize {
                    let e = BiTensorElement::filtration_basis_element(pr, 2, k, m).unwrap();
                    let de = e.connection();
                    assert!(de.filtration_level() + 1 >= m, "shift at p={p} k={k} m={m}");
                    if m >= 1 {
                        // ∇(t^k α^m) ≡ -m t^k α^{m-1} modulo level m
                        let lead = BiTensorElement::filtration_basis_element(pr, 2, k, m - 1)
                            .unwrap()
                            .scale(neg_mod(m as u64, p));
                        let diff = de.sub(&lead).unwrap();
                        assert!(
                            diff.filtration_level() >= m,
                            "graded action at p={p} k={k} m={m}"
                        );
                    }
                }
            }
        }
    }
}
