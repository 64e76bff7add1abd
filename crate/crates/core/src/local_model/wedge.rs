//! Local certificate for the kernel of the wedge projection.
//!
//! For r ≥ 2 symbols, the p·r² elements (e_a ⊗ e_b)·t^k α^{p-1} span the
//! deepest filtration step of the tensor square of the pushforward. Since
//! every t^k α^{p-1} is swap-fixed, the diagonal elements and the
//! symmetrized pairs e_a ⊗ e_b + e_b ⊗ e_a are fixed by the full factor
//! swap; over a free module the swap-fixed part is exactly the kernel of
//! the projection to the exterior square, so those p·r(r+1)/2 elements
//! generate the kernel, and the p·r(r-1)/2 off-diagonal classes survive
//! into the exterior square of the pushforward. Certifying that the
//! off-diagonal classes are independent modulo the symmetric span (and
//! that their wedge images stay independent) is the local form of the
//! injection of the pushed-forward wedge into the wedge of pushforwards.
//!
//! In characteristic 2 the antisymmetrized elements e_a⊗e_b − e_b⊗e_a
//! coincide with the symmetrized generators, so the complement is
//! certified through the off-diagonal representatives e_a⊗e_b themselves;
//! for p > 2 the two differ by the unit 2 modulo the symmetric span.

use crate::error::{Error, Result};
use crate::modp::PrimeChar;

use super::bitensor::BiTensorElement;
use super::linalg::{Eliminator, Insert};
use super::paired::PairedModuleElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeKernelReport {
    pub p: u64,
    pub rank: usize,
    /// Diagonal plus symmetrized generators, p·r(r+1)/2 of them.
    pub symmetric_count: usize,
    /// Off-diagonal complement classes, p·r(r-1)/2 of them.
    pub antisymmetric_count: usize,
    /// Every listed generator is fixed by the factor swap.
    pub generators_symmetric: bool,
    /// The listed generators are F_p[s]-linearly independent.
    pub symmetric_independent: bool,
    /// The complement classes stay independent modulo the symmetric span.
    pub complement_independent: bool,
    /// Their images in the exterior square are F_p[s]-independent.
    pub wedge_images_independent: bool,
    pub ok: bool,
}

/// Builds the local generators at the deepest filtration level and runs the
/// full kernel/complement certificate for `rank ≥ 2` symbols.
pub fn wedge_kernel_check(p: PrimeChar, trunc: usize, rank: usize) -> Result<WedgeKernelReport> {
    if rank < 2 {
        return Err(Error::RankTooSmall {
            required: 2,
            got: rank.into(),
        });
    }
    let q = p.get() as usize;

    let mut tops = Vec::with_capacity(q);
    for k in 0..q {
        tops.push(BiTensorElement::filtration_basis_element(p, trunc, k, q - 1)?);
    }
    // generators[a][b][k] = (e_a ⊗ e_b) · t^k α^{p-1}
    let mut generators = Vec::with_capacity(rank);
    for a in 0..rank {
        let mut row = Vec::with_capacity(rank);
        for b in 0..rank {
            let mut per_k = Vec::with_capacity(q);
            for top in &tops {
                per_k.push(PairedModuleElement::embed(rank, a, b, top)?);
            }
            row.push(per_k);
        }
        generators.push(row);
    }

    let mut sym_gens = Vec::new();
    for a in 0..rank {
        for k in 0..q {
            sym_gens.push(generators[a][a][k].clone());
        }
    }
    for a in 0..rank {
        for b in a + 1..rank {
            for k in 0..q {
                sym_gens.push(generators[a][b][k].add(&generators[b][a][k])?);
            }
        }
    }
    let generators_symmetric = sym_gens.iter().all(PairedModuleElement::is_swap_symmetric);

    let width = (rank * q) * (rank * q);
    let mut elim = Eliminator::new(p, trunc, width);
    let mut symmetric_independent = true;
    for g in &sym_gens {
        if elim.insert(g.flatten()) != Insert::Pivot {
            symmetric_independent = false;
        }
    }
    let symmetric_rank = elim.rank();

    // Off-diagonal classes against the same pivot set: together with the
    // independence of the listed generators this certifies that the
    // swap-fixed part of the span is exactly their span.
    let mut complement_independent = true;
    let mut antisymmetric_count = 0;
    let wedge_width = rank * q * (rank * q - 1) / 2;
    let mut wedge_elim = Eliminator::new(p, trunc, wedge_width);
    let mut wedge_images_independent = true;
    for a in 0..rank {
        for b in a + 1..rank {
            for k in 0..q {
                antisymmetric_count += 1;
                if elim.insert(generators[a][b][k].flatten()) != Insert::Pivot {
                    complement_independent = false;
                }
                if wedge_elim.insert(generators[a][b][k].wedge_flatten()) != Insert::Pivot {
                    wedge_images_independent = false;
                }
            }
        }
    }

    let symmetric_count = sym_gens.len();
    let counts_ok = symmetric_count == q * rank * (rank + 1) / 2
        && symmetric_rank == symmetric_count
        && antisymmetric_count == q * rank * (rank - 1) / 2
        && wedge_elim.rank() == antisymmetric_count
        && elim.rank() == q * rank * rank;
    let ok = generators_symmetric
        && symmetric_independent
        && complement_independent
        && wedge_images_independent
        && counts_ok;
    Ok(WedgeKernelReport {
        p: p.get(),
        rank,
        symmetric_count,
        antisymmetric_count,
        generators_symmetric,
        symmetric_independent,
        complement_independent,
        wedge_images_independent,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: u64) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    #[test]
    fn rank_two_char_two() {
        let report = wedge_kernel_check(pc(2), 2, 2).unwrap();
        assert!(report.ok);
        assert_eq!(report.symmetric_count, 6);
        assert_eq!(report.antisymmetric_count, 2);
    }

    #[test]
    fn rank_two_char_three() {
        let report = wedge_kernel_check(pc(3), 2, 2).unwrap();
        assert!(report.ok);
        assert_eq!(report.symmetric_count, 9);
        assert_eq!(report.antisymmetric_count, 3);
    }

    #[test]
    fn rank_three_char_five() {
        let report = wedge_kernel_check(pc(5), 2, 3).unwrap();
        assert!(report.ok);
        assert_eq!(report.symmetric_count, 30);
        assert_eq!(report.antisymmetric_count, 15);
    }

    #[test]
    fn rank_below_two_is_rejected() {
        assert!(wedge_kernel_check(pc(3), 2, 1).is_err());
    }
}
