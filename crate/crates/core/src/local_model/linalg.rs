//! Unit-pivot Gauss–Jordan elimination over F_p[s]/(s^M).
//!
//! A pivot must be a unit, i.e. have a nonzero constant term. When every
//! inserted row acquires a unit pivot, the rows are linearly independent
//! over F_p[s] itself, not merely over the truncation: a dependence with
//! coefficients in F_p[s], divided by the largest common s-power and read
//! modulo s, would contradict the mod-s pivot structure. Rows that reduce
//! to zero are dependent; nonzero rows with no unit entry leave
//! independence uncertified and are reported as such.

use crate::modp::PrimeChar;

use super::spoly::SPoly;

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Insert {
    Pivot,
    Dependent,
    Uncertified,
}

pub(crate) struct Eliminator {
    p: PrimeChar,
    trunc: usize,
    width: usize,
    /// (pivot column, row normalized to 1 at the pivot, pivot column cleared
    /// in every other stored row).
    rows: Vec<(usize, Vec<SPoly>)>,
}

impl Eliminator {
    pub fn new(p: PrimeChar, trunc: usize, width: usize) -> Self {
        Eliminator {
            p,
            trunc,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_in_place(&self, row: &mut [SPoly]) {
        for (col, prow) in &self.rows {
            let c = row[*col].clone();
            if c.is_zero() {
                continue;
            }
            for (idx, pc) in prow.iter().enumerate() {
                if !pc.is_zero() {
                    row[idx] = row[idx].sub(&c.mul(pc, self.p, self.trunc), self.p);
                }
            }
        }
    }

    /// Reduces `row` against the stored pivots and, when possible, installs
    /// it as a new pivot row.
    pub fn insert(&mut self, mut row: Vec<SPoly>) -> Insert {
        assert_eq!(row.len(), self.width, "row width mismatch");
        self.reduce_in_place(&mut row);
        if row.iter().all(SPoly::is_zero) {
            return Insert::Dependent;
        }
        let Some(col) = row.iter().position(|c| c.constant_term() != 0) else {
            return Insert::Uncertified;
        };
        let inv = row[col]
            .inverse(self.p, self.trunc)
            .expect("constant term checked nonzero");
        for c in row.iter_mut() {
            *c = c.mul(&inv, self.p, self.trunc);
        }
        for (_, prow) in self.rows.iter_mut() {
            let c = prow[col].clone();
            if c.is_zero() {
                continue;
            }
            for (idx, rc) in row.iter().enumerate() {
                if !rc.is_zero() {
                    prow[idx] = prow[idx].sub(&c.mul(rc, self.p, self.trunc), self.p);
                }
            }
        }
        self.rows.push((col, row));
        Insert::Pivot
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: u64) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    fn row(vals: &[(usize, SPoly)], width: usize) -> Vec<SPoly> {
        let mut r = vec![SPoly::zero(); width];
        for (i, v) in vals {
            r[*i] = v.clone();
        }
        r
    }

    #[test]
    fn detects_dependence_and_certifies_rank() {
        let p = pc(5);
        let mut e = Eliminator::new(p, 2, 3);
        let one = SPoly::one(p);
        let s = SPoly::s_power(1, 1, p, 2);
        assert_eq!(e.insert(row(&[(0, one.clone()), (1, s.clone())], 3)), Insert::Pivot);
        // 2·(first row)
        assert_eq!(
            e.insert(row(
                &[(0, SPoly::constant(2, p)), (1, s.scale(2, p))],
                3
            )),
            Insert::Dependent
        );
        assert_eq!(e.insert(row(&[(2, SPoly::constant(3, p))], 3)), Insert::Pivot);
        assert_eq!(e.rank(), 2);
        // residual purely divisible by s: not certifiable with unit pivots
        assert_eq!(e.insert(row(&[(1, s)], 3)), Insert::Uncertified);
    }
}
