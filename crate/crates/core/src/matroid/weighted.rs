//! Integer weight matrices with multiplicities, their k-sums and the odd
//! covering transformations that preserve the odd-minor condition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::sums::zero_sum_signs;
use super::{BinaryMatroid, Provenance};
use crate::error::{Error, Result};
use crate::exact::{det, kernel_lattice_basis, odd_determinant_check, rank_q, IntMatrix, OddDetVerdict, Rat};

/// Weight matrix `h` (d x n, columns are weights) with multiplicities summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedRep {
    h: IntMatrix,
    mult: Vec<Rat>,
}

impl WeightedRep {
    /// Checks rank and the odd-minor condition and normalises `mult`.
    pub fn new(h: IntMatrix, mult: Vec<Rat>) -> Result<WeightedRep> {
        if mult.len() != h.cols() {
            return Err(Error::Dimension(format!("{} multiplicities for {} weights", mult.len(), h.cols())));
        }
        if mult.iter().any(Rat::is_negative) {
            return Err(Error::Precondition("negative multiplicity".into()));
        }
        let total: Rat = mult.iter().sum();
        if total.is_zero() {
            return Err(Error::Precondition("multiplicities sum to zero".into()));
        }
        let rank = rank_q(&h);
        if rank != h.rows() {
            return Err(Error::RankDeficient { rank, expected: h.rows() });
        }
        if let OddDetVerdict::Violation { columns, determinant } = odd_determinant_check(&h)? {
            return Err(Error::Precondition(format!(
                "weight matrix has even minor {determinant} on columns {columns:?}"
            )));
        }
        let mult = mult.iter().map(|x| x / &total).collect();
        Ok(WeightedRep { h, mult })
    }

    pub fn uniform(h: IntMatrix) -> Result<WeightedRep> {
        let n = h.cols();
        WeightedRep::new(h, vec![Rat::one(); n])
    }

    pub fn from_matroid(m: &BinaryMatroid, mult: Vec<Rat>) -> Result<WeightedRep> {
        WeightedRep::new(m.lift_or_err()?.clone(), mult)
    }

    pub fn h(&self) -> &IntMatrix {
        &self.h
    }

    pub fn mult(&self) -> &[Rat] {
        &self.mult
    }

    pub fn rank(&self) -> usize {
        self.h.rows()
    }

    pub fn len(&self) -> usize {
        self.h.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Column masks of `h mod 2`.
    pub fn masks(&self) -> Vec<u64> {
        self.h.mod2().column_masks()
    }

    pub fn negate_column(&self, j: usize) -> WeightedRep {
        let mut h = self.h.clone();
        h.negate_col(j);
        WeightedRep { h, mult: self.mult.clone() }
    }

    pub fn to_matroid(&self) -> Result<BinaryMatroid> {
        let labels = (0..self.len()).map(|j| j.to_string()).collect();
        BinaryMatroid::trusted(labels, self.h.mod2(), Some(self.h.clone()), Provenance::Other)
    }

    /// Restriction of the weights to the sublattice on which the weights in
    /// `cols` vanish; those weights are dropped and the rest renormalised.
    pub fn contract(&self, cols: &[usize]) -> Result<WeightedRep> {
        let keep: Vec<usize> = (0..self.len()).filter(|j| !cols.contains(j)).collect();
        let b = kernel_lattice_basis(&self.h.select_columns(cols).transpose());
        let h = b.transpose().mul(&self.h.select_columns(&keep));
        WeightedRep::new(h, keep.iter().map(|&j| self.mult[j].clone()).collect())
    }
}

/// Whether glued weights survive a 2- or 3-sum. `Keep` retains them,
/// restricted to the glued lattice, with their multiplicities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KSumConvention {
    #[default]
    Remove,
    Keep,
}

/// k-sum of weighted representations. `left[j]` is glued to `right[j]`;
/// both are empty for k = 1, single for k = 2 and triangles for k = 3.
/// The glued lattice is the set of points where paired weights agree; its
/// Hermite basis gives the new coordinates.
pub fn ksum_rep(
    r1: &WeightedRep,
    r2: &WeightedRep,
    k: usize,
    left: &[usize],
    right: &[usize],
    convention: KSumConvention,
) -> Result<WeightedRep> {
    let need = match k {
        1 => 0,
        2 => 1,
        3 => 3,
        _ => return Err(Error::Precondition(format!("k-sum needs k in 1..=3, got {k}"))),
    };
    if left.len() != need || right.len() != need {
        return Err(Error::Precondition(format!("{k}-sum needs {need} glued weights on each side")));
    }
    for (r, sel) in [(r1, left), (r2, right)] {
        if sel.iter().any(|&j| j >= r.len() || super::is_zero_column(&r.h, j)) {
            return Err(Error::Precondition(format!("glued weights {sel:?} must exist and be nonzero")));
        }
        if k == 3 && zero_sum_signs(&r.h, sel).is_none_or(|s| s.iter().any(|&x| x != 1)) {
            return Err(Error::Precondition(format!("3-sum weights {sel:?} do not sum to zero")));
        }
    }
    let (d1, n1) = (r1.rank(), r1.len());
    let h = r1.h.block_diag(&r2.h);
    let mut g = IntMatrix::zeros(need, h.rows());
    for t in 0..need {
        for i in 0..d1 {
            g.set(t, i, r1.h.get(i, left[t]).clone());
        }
        for i in 0..r2.rank() {
            g.set(t, d1 + i, -r2.h.get(i, right[t]).clone());
        }
    }
    let b = if need == 0 { IntMatrix::identity(h.rows()) } else { kernel_lattice_basis(&g) };
    let keep: Vec<usize> = (0..n1)
        .filter(|j| convention == KSumConvention::Keep || !left.contains(j))
        .chain((0..r2.len()).filter(|j| convention == KSumConvention::Keep || !right.contains(j)).map(|j| n1 + j))
        .collect();
    let mult = keep.iter().map(|&j| if j < n1 { r1.mult[j].clone() } else { r2.mult[j - n1].clone() }).collect();
    WeightedRep::new(b.transpose().mul(&h.select_columns(&keep)), mult)
}

/// Operations that change weights by odd coverings or odd rescaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OddStep {
    /// `h -> A^T h` for `A` with odd determinant.
    Pullback(IntMatrix),
    /// Column `j` multiplied by the odd integer `s[j]`.
    Scale(Vec<i64>),
    /// `h -> (A^T)^-1 h`, which must be integral.
    Pushforward(IntMatrix),
    /// Column `j` divided exactly by the odd integer `s[j]`.
    Divide(Vec<i64>),
}

fn check_odd_det(a: &IntMatrix, d: usize) -> Result<()> {
    if a.rows() != d || a.cols() != d {
        return Err(Error::Dimension(format!("transform must be {d} x {d}")));
    }
    let dt = det(a)?;
    if dt.is_even() {
        return Err(Error::Precondition(format!("transform determinant {dt} is even")));
    }
    Ok(())
}

fn check_odd_scalars(s: &[i64], n: usize) -> Result<()> {
    if s.len() != n {
        return Err(Error::Dimension(format!("{} scalars for {n} weights", s.len())));
    }
    if let Some(x) = s.iter().find(|x| *x % 2 == 0) {
        return Err(Error::Precondition(format!("scalar {x} is even")));
    }
    Ok(())
}

pub fn odd_transform(r: &WeightedRep, step: &OddStep) -> Result<WeightedRep> {
    let (d, n) = (r.rank(), r.len());
    let h = match step {
        OddStep::Pullback(a) => {
            check_odd_det(a, d)?;
            a.transpose().mul(&r.h)
        }
        OddStep::Scale(s) => {
            check_odd_scalars(s, n)?;
            let mut h = r.h.clone();
            for (j, &x) in s.iter().enumerate() {
                for i in 0..d {
                    *h.get_mut(i, j) *= x;
                }
            }
            h
        }
        OddStep::Pushforward(a) => {
            check_odd_det(a, d)?;
            solve_integral(&a.transpose(), &r.h)?
        }
        OddStep::Divide(s) => {
            check_odd_scalars(s, n)?;
            let mut h = r.h.clone();
            for (j, &x) in s.iter().enumerate() {
                let x = BigInt::from(x);
                for i in 0..d {
                    let (q, rem) = h.get(i, j).div_rem(&x);
                    if !rem.is_zero() {
                        return Err(Error::Precondition(format!("weight column {j} is not divisible by {x}")));
                    }
                    h.set(i, j, q);
                }
            }
            h
        }
    };
    WeightedRep::new(h, r.mult.clone())
}

/// `x` with `a x = b` over the integers, if it exists.
fn solve_integral(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let d = a.rows();
    let mut m: Vec<Vec<Rat>> = a.to_rat_rows();
    let mut rhs: Vec<Vec<Rat>> = b.to_rat_rows();
    for c in 0..d {
        let p = (c..d).find(|&i| !m[i][c].is_zero()).ok_or_else(|| Error::Precondition("singular transform".into()))?;
        m.swap(c, p);
        rhs.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut().chain(rhs[c].iter_mut()) {
            *x *= &inv;
        }
        for i in 0..d {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (mc, rc) = (m[c].clone(), rhs[c].clone());
                for (x, y) in m[i].iter_mut().zip(&mc) {
                    *x -= &(&f * y);
                }
                for (x, y) in rhs[i].iter_mut().zip(&rc) {
                    *x -= &(&f * y);
                }
            }
        }
    }
    let mut out = IntMatrix::zeros(d, b.cols());
    for i in 0..d {
        for j in 0..b.cols() {
            let x = &rhs[i][j];
            if !x.is_integer() {
                return Err(Error::Precondition("pushforward weights are not integral".into()));
            }
            out.set(i, j, x.numer());
        }
    }
    Ok(out)
}
