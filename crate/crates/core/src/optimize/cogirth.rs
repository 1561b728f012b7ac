//! Cogirth of binary representations. A nonzero functional `v` on F2^d
//! charges every column it does not annihilate; the cogirth is the largest,
//! over probability weightings of the columns, of the smallest charge.

use serde::{Deserialize, Serialize};

use super::lp::lp_max;
use crate::error::{check_guard, Error, Result};
use crate::exact::{Rat, XorBasis};
use crate::matroid::{BinaryMatroid, WeightedRep};

pub const MAX_COGIRTH_RANK: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CogirthResult {
    pub value: Rat,
    pub weights: Vec<Rat>,
    /// Functional attaining the minimum, as a bit mask over the `d` coordinates.
    pub witness: u64,
}

fn odd(v: u64, col: u64) -> bool {
    (v & col).count_ones() % 2 == 1
}

/// `f_w(v)`: total weight of the columns on which `v` is nonzero.
pub fn functional_weight(cols: &[u64], w: &[Rat], v: u64) -> Rat {
    cols.iter().zip(w).filter(|(c, _)| odd(v, **c)).map(|(_, x)| x).sum()
}

fn check_rep(d: usize, cols: &[u64]) -> Result<()> {
    if d >= 64 {
        return Err(Error::Guard(format!("rank {d} does not fit a 64-bit functional")));
    }
    check_guard(d <= MAX_COGIRTH_RANK, || format!("rank {d} exceeds {MAX_COGIRTH_RANK} for functional enumeration"))?;
    let mut basis = XorBasis::new();
    for &c in cols {
        basis.insert(c);
    }
    if basis.len() != d {
        return Err(Error::RankDeficient { rank: basis.len(), expected: d });
    }
    Ok(())
}

/// Minimum of `f_w` over nonzero functionals, with the first minimiser.
pub fn min_functional(d: usize, cols: &[u64], w: &[Rat]) -> Result<(Rat, u64)> {
    check_rep(d, cols)?;
    if d == 0 {
        return Err(Error::Precondition("rank 0 has no nonzero functional".into()));
    }
    let mut best: Option<(Rat, u64)> = None;
    for v in 1..(1u64 << d) {
        let f = functional_weight(cols, w, v);
        if best.as_ref().is_none_or(|(b, _)| f < *b) {
            best = Some((f, v));
        }
    }
    Ok(best.expect("d >= 1"))
}

/// Cogirth of the column set `cols` spanning F2^d. Solved as the packing LP
/// over cocircuit supports with every functional priced at each round.
pub fn cogirth_masks(d: usize, cols: &[u64]) -> Result<CogirthResult> {
    check_rep(d, cols)?;
    if d == 0 {
        return Err(Error::Precondition("cogirth of a rank 0 matroid is undefined".into()));
    }
    let n = cols.len();
    let mut fns: Vec<u64> = (0..d).map(|j| 1u64 << j).collect();
    loop {
        let ineq: Vec<(Vec<Rat>, Rat)> = cols
            .iter()
            .map(|&c| (fns.iter().map(|&v| if odd(v, c) { Rat::one() } else { Rat::zero() }).collect(), Rat::one()))
            .collect();
        let sol = lp_max(&vec![Rat::one(); fns.len()], &[], &ineq)?;
        let (f, v) = min_functional(d, cols, &sol.dual)?;
        if f < Rat::one() && !fns.contains(&v) {
            fns.push(v);
            continue;
        }
        let inv = sol.value.recip();
        let weights: Vec<Rat> = sol.dual.iter().map(|x| x * &inv).collect();
        debug_assert_eq!(weights.len(), n);
        let (value, witness) = min_functional(d, cols, &weights)?;
        debug_assert_eq!(value, inv);
        return Ok(CogirthResult { value, weights, witness });
    }
}

pub fn cogirth(m: &BinaryMatroid) -> Result<CogirthResult> {
    cogirth_masks(m.rank(), &m.column_masks())
}

/// `c(H, mult)`: the smallest charge under the fixed multiplicities, with a
/// minimising functional.
pub fn c_of_rep(r: &WeightedRep) -> Result<(Rat, u64)> {
    min_functional(r.rank(), &r.masks(), r.mult())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::catalog;
    use crate::matroid::{cographic, graphic, r10};

    #[test]
    fn parallel_and_free() {
        // Three parallel copies of one vector: every functional hits all of them.
        assert_eq!(cogirth_masks(1, &[1, 1, 1]).unwrap().value, Rat::one());
        // Boolean basis of F2^2: best is 1/2 on each.
        assert_eq!(cogirth_masks(2, &[1, 2]).unwrap().value, rat(1, 2));
        // Uniform U(2,3) = graphic triangle: 2/3.
        assert_eq!(cogirth_masks(2, &[1, 2, 3]).unwrap().value, rat(2, 3));
        assert!(matches!(cogirth_masks(2, &[1, 1]), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn matroid_values() {
        let r = r10();
        assert_eq!(cogirth(&r).unwrap().value, rat(2, 5));
        let u = WeightedRep::uniform(r.lift().unwrap().clone()).unwrap();
        assert_eq!(c_of_rep(&u).unwrap().0, rat(2, 5));
        let k4 = graphic(&catalog("k4").unwrap(), 0).unwrap();
        let u = WeightedRep::uniform(k4.lift().unwrap().clone()).unwrap();
        assert_eq!(c_of_rep(&u).unwrap().0, rat(1, 2));
        let k33 = cographic(&catalog("k33").unwrap()).unwrap();
        assert_eq!(cogirth(&k33).unwrap().value, rat(4, 9));
    }
}
