//! Smith normal form over the integers with unimodular certificates.
//!
//! For an `a x b` input `M` we produce `U` (`a x a`), `D` (`a x b`) and `V` (`b x b`) with
//! `U M V = D`, both transforms unimodular, and `D` diagonal with nonnegative entries
//! `d_1 | d_2 | ... | d_r` followed by zeros.
//!
//! Pivoting always takes the entry of smallest nonzero absolute value in the active block,
//! ties broken by lowest row and then lowest column, so the output is a deterministic
//! function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// The nonzero diagonal entries `d_1 | ... | d_r` (units included).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut calc = SnfCalc {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
    };
    calc.run();
    SmithDecomposition {
        u: calc.u,
        d: calc.d,
        v: calc.v,
    }
}

struct SnfCalc {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfCalc {
    fn run(&mut self) {
        let n = self.d.rows().min(self.d.cols());
        for t in 0..n {
            let Some((i, j)) = self.smallest_in_block(t) else {
                break;
            };
            self.move_to(t, i, j);
            self.eliminate(t);
            if self.d.get(t, t).is_negative() {
                self.d.negate_row(t);
                self.u.negate_row(t);
            }
        }
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = self.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn move_to(&mut self, t: usize, i: usize, j: usize) {
        self.d.swap_rows(t, i);
        self.u.swap_rows(t, i);
        self.d.swap_cols(t, j);
        self.v.swap_cols(t, j);
    }

    fn row_op(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.d.add_row_multiple(dst, src, factor);
        self.u.add_row_multiple(dst, src, factor);
    }

    fn col_op(&mut self, dst: usize, src: usize, factor: &BigInt) {
        self.d.add_col_multiple(dst, src, factor);
        self.v.add_col_multiple(dst, src, factor);
    }

    /// Clears row and column `t` and enforces that the pivot divides the rest of the block.
    fn eliminate(&mut self, t: usize) {
        let (rows, cols) = self.d.shape();
        loop {
            let pivot = self.d.get(t, t).clone();
            for i in t + 1..rows {
                let q = self.d.get(i, t).div_floor(&pivot);
                self.row_op(i, t, &-q);
            }
            for j in t + 1..cols {
                let q = self.d.get(t, j).div_floor(&pivot);
                self.col_op(j, t, &-q);
            }

            // remainders smaller than the pivot become the new pivot
            let mut smaller: Option<(usize, usize, BigInt)> = None;
            let candidates = (t + 1..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            for (i, j) in candidates {
                let x = self.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if smaller.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    smaller = Some((i, j, a));
                }
            }
            if let Some((i, j, _)) = smaller {
                self.move_to(t, i, j);
                continue;
            }

            // row and column are clear; fold in the first entry the pivot does not divide
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !self.d.get(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => self.row_op(t, i, &BigInt::from(1)),
                None => return,
            }
        }
    }
}
