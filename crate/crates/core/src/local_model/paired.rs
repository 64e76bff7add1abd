//! The rank-r tensor square over the local ring: formal symbol pairs
//! e_a ⊗ e_b with bi-tensor coefficients. Flattened against the pushforward
//! basis {t^i e_a}, an element is a vector over F_p[s] of length (rp)²; the
//! factor swap exchanges both the symbol pair and the tensor legs.

use crate::error::{Error, Result};
use crate::modp::PrimeChar;

use super::bitensor::BiTensorElement;
use super::spoly::SPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedModuleElement {
    p: PrimeChar,
    trunc: usize,
    rank: usize,
    /// Index ((a·rank + b)·p + i)·p + j for (e_a ⊗ e_b)·(t^i ⊗ t^j).
    coeffs: Vec<SPoly>,
}

impl PairedModuleElement {
    pub fn zero(p: PrimeChar, trunc: usize, rank: usize) -> Result<Self> {
        if rank < 1 {
            return Err(Error::RankTooSmall {
                required: 1,
                got: rank.into(),
            });
        }
        if trunc < 2 {
            return Err(Error::TruncationTooSmall(trunc));
        }
        let q = p.get() as usize;
        Ok(PairedModuleElement {
            p,
            trunc,
            rank,
            coeffs: vec![SPoly::zero(); rank * rank * q * q],
        })
    }

    /// (e_a ⊗ e_b) · x for a bi-tensor element x.
    pub fn embed(rank: usize, a: usize, b: usize, x: &BiTensorElement) -> Result<Self> {
        if a >= rank {
            return Err(Error::SymbolOutOfRange { index: a, rank });
        }
        if b >= rank {
            return Err(Error::SymbolOutOfRange { index: b, rank });
        }
        let mut out = Self::zero(x.characteristic(), x.truncation(), rank)?;
        let q = out.p.get() as usize;
        for i in 0..q {
            for j in 0..q {
                let c = x.coeff(i, j);
                if !c.is_zero() {
                    let idx = out.index(a, b, i, j);
                    out.coeffs[idx] = c.clone();
                }
            }
        }
        Ok(out)
    }

    fn index(&self, a: usize, b: usize, i: usize, j: usize) -> usize {
        let q = self.p.get() as usize;
        ((a * self.rank + b) * q + i) * q + j
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.p
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, a: usize, b: usize, i: usize, j: usize) -> &SPoly {
        &self.coeffs[self.index(a, b, i, j)]
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
        if self.rank != other.rank {
            return Err(Error::OperandMismatch {
                what: "module rank",
                left: self.rank as u64,
                right: other.rank as u64,
            });
        }
        Ok(())
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

    /// Swap of both the symbol pair and the tensor legs:
    /// (a, b, i, j) ↦ (b, a, j, i).
    pub fn swap(&self) -> Self {
        let q = self.p.get() as usize;
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = SPoly::zero();
        }
        for a in 0..self.rank {
            for b in 0..self.rank {
                for i in 0..q {
                    for j in 0..q {
                        let c = &self.coeffs[self.index(a, b, i, j)];
                        if !c.is_zero() {
                            let idx = out.index(b, a, j, i);
                            out.coeffs[idx] = c.clone();
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_swap_symmetric(&self) -> bool {
        *self == self.swap()
    }

    /// Row vector over F_p[s] in the basis f_u ⊗ f_v of the tensor square
    /// of the pushforward, u = a·p + i, v = b·p + j.
    pub(crate) fn flatten(&self) -> Vec<SPoly> {
        let q = self.p.get() as usize;
        let n = self.rank * q;
        let mut row = vec![SPoly::zero(); n * n];
        for a in 0..self.rank {
            for b in 0..self.rank {
                for i in 0..q {
                    for j in 0..q {
                        let c = &self.coeffs[self.index(a, b, i, j)];
                        if !c.is_zero() {
                            let (u, v) = (a * q + i, b * q + j);
                            row[u * n + v] = c.clone();
                        }
                    }
                }
            }
        }
        row
    }

    /// Image in the exterior square of the pushforward: f_u ⊗ f_v ↦ f_u ∧ f_v,
    /// columns indexed by pairs u < v.
    pub(crate) fn wedge_flatten(&self) -> Vec<SPoly> {
        let q = self.p.get() as usize;
        let n = self.rank * q;
        let mut row = vec![SPoly::zero(); n * (n - 1) / 2];
        for a in 0..self.rank {
            for b in 0..self.rank {
                for i in 0..q {
                    for j in 0..q {
                        let c = &self.coeffs[self.index(a, b, i, j)];
                        if c.is_zero() {
                            continue;
                        }
                        let (u, v) = (a * q + i, b * q + j);
                        match u.cmp(&v) {
                            std::cmp::Ordering::Equal => {} // f ∧ f = 0
                            std::cmp::Ordering::Less => {
                                let idx = pair_index(u, v, n);
                                row[idx] = row[idx].add(c, self.p);
                            }
                            std::cmp::Ordering::Greater => {
                                let idx = pair_index(v, u, n);
                                row[idx] = row[idx].sub(c, self.p);
                            }
                        }
                    }
                }
            }
        }
        row
    }
}

/// Position of the pair (u, v), u < v, in lexicographic order.
fn pair_index(u: usize, v: usize, n: usize) -> usize {
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: u64) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    #[test]
    fn swap_is_an_involution() {
        let pr = pc(3);
        let alpha = BiTensorElement::alpha(pr, 2).unwrap();
        let e = PairedModuleElement::embed(2, 0, 1, &alpha).unwrap();
        assert_eq!(e.swap().swap(), e);
        assert!(!e.is_swap_symmetric());
        let sym = e
            .add(&PairedModuleElement::embed(2, 1, 0, &alpha.neg()).unwrap())
            .unwrap();
        // (e_0⊗e_1)·α − (e_1⊗e_0)·α is swap-fixed since swap(α) = −α.
        assert!(sym.is_swap_symmetric());
    }

    #[test]
    fn embed_validates_symbols() {
        let pr = pc(3);
        let x = BiTensorElement::one(pr, 2).unwrap();
        assert!(PairedModuleElement::embed(2, 2, 0, &x).is_err());
        assert!(PairedModuleElement::embed(2, 0, 5, &x).is_err());
    }

    #[test]
    fn pair_indices_are_dense() {
        let n = 6;
        let mut seen = vec![false; n * (n - 1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                let idx = pair_index(u, v, n);
                assert!(!seen[idx]);
                seen[idx] = true;
            }
        }
        assert!(seen.into_iter().all(|s| s));
    }
}
