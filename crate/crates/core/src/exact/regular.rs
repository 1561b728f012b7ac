//! Odd-determinant test: every maximal minor of an integer weight matrix is
//! zero or odd.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::bits::XorBasis;
use super::matrix::{det, rank_q, IntMatrix};
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OddDetVerdict {
    Ok,
    Violation {
        columns: Vec<usize>,
        #[serde(with = "bigint_str")]
        determinant: BigInt,
    },
}

impl OddDetVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, OddDetVerdict::Ok)
    }
}

mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Incremental rational row-echelon basis of column vectors.
#[derive(Clone)]
struct QBasis {
    // (pivot index, vector normalised to 1 at pivot)
    vecs: Vec<(usize, Vec<Rat>)>,
}

impl QBasis {
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (p, b) in &self.vecs {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        v
    }

    fn try_push(&mut self, v: &[Rat]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        let r: Vec<Rat> = r.iter().map(|x| x * &inv).collect();
        self.vecs.push((p, r));
        true
    }
}

/// Checks that every `d x d` column submatrix of the `d x (d+n)` matrix `h`
/// has determinant zero or odd. The first offending column set in
/// lexicographic order is reported with its determinant.
///
/// Subsets are explored depth first; a branch is cut as soon as its columns
/// are rationally dependent. At a full independent leaf the determinant is
/// odd exactly when the columns are also independent mod 2, so it is only
/// computed for violations.
pub fn odd_determinant_check(h: &IntMatrix) -> Result<OddDetVerdict> {
    let d = h.rows();
    let n = h.cols();
    let rank = rank_q(h);
    if rank != d {
        return Err(Error::RankDeficient { rank, expected: d });
    }
    if d > 64 {
        return Err(Error::Dimension(format!("odd_determinant_check supports at most 64 rows, got {d}")));
    }
    if d == 0 {
        return Ok(OddDetVerdict::Ok);
    }
    let cols: Vec<Vec<Rat>> = (0..n).map(|j| (0..d).map(|i| Rat::from_bigint(h.get(i, j).clone())).collect()).collect();
    let masks: Vec<u64> = h.mod2().column_masks();
    let mut chosen = Vec::with_capacity(d);
    let hit = search(&cols, &masks, d, 0, &mut chosen, &QBasis { vecs: Vec::new() }, &XorBasis::new());
    match hit {
        None => Ok(OddDetVerdict::Ok),
        Some(columns) => {
            let determinant = det(&h.select_columns(&columns))?;
            Ok(OddDetVerdict::Violation { columns, determinant })
        }
    }
}

fn search(
    cols: &[Vec<Rat>],
    masks: &[u64],
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    qb: &QBasis,
    fb: &XorBasis,
) -> Option<Vec<usize>> {
    if chosen.len() == d {
        return if fb.len() < d { Some(chosen.clone()) } else { None };
    }
    let need = d - chosen.len();
    for j in start..=cols.len() - need {
        let mut q = qb.clone();
        if !q.try_push(&cols[j]) {
            continue;
        }
        let mut f = fb.clone();
        f.insert(masks[j]);
        chosen.push(j);
        let r = search(cols, masks, d, j + 1, chosen, &q, &f);
        chosen.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Direct oracle: enumerate all maximal minors with Bareiss determinants.
pub fn odd_determinant_check_naive(h: &IntMatrix) -> Result<OddDetVerdict> {
    use num_integer::Integer;
    use num_traits::Zero;
    let d = h.rows();
    let rank = rank_q(h);
    if rank != d {
        return Err(Error::RankDeficient { rank, expected: d });
    }
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let dt = det(&h.select_columns(&idx))?;
        if !dt.is_zero() && dt.is_even() {
            return Ok(OddDetVerdict::Violation { columns: idx, determinant: dt });
        }
        if !next_combination(&mut idx, h.cols()) {
            return Ok(OddDetVerdict::Ok);
        }
    }
}

/// Advances `idx` to the next k-subset of 0..n in lexicographic order.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_lift_is_caught() {
        let h =
            IntMatrix::from_rows(&[vec![1, 0, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1]]);
        let v = odd_determinant_check(&h).unwrap();
        assert_eq!(v, odd_determinant_check_naive(&h).unwrap());
        let OddDetVerdict::Violation { columns, determinant } = v else { panic!("expected violation") };
        assert_eq!(columns, vec![3, 4, 5]);
        assert_eq!(determinant, BigInt::from(-2));
    }

    #[test]
    fn rank_deficient_is_error() {
        let h = IntMatrix::from_rows(&[vec![1, 1], vec![2, 2]]);
        assert!(matches!(odd_determinant_check(&h), Err(Error::RankDeficient { rank: 1, expected: 2 })));
    }

    #[test]
    fn combinations() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut idx, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(idx, vec![2, 3]);
    }
}
