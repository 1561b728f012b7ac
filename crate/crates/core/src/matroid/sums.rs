//! 1-, 2- and 3-sums of binary matroids. The ground sets are placed side by
//! side and the glued columns are identified by passing to the quotient by
//! the span of their differences.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{lift_if_matches, BinaryMatroid, Provenance};
use crate::error::{Error, Result};
use crate::exact::{kernel_lattice_basis, BitMatrix, IntMatrix};

fn stack(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    let mut s = BitMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            s.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            s.set(a.rows() + i, a.cols() + j, b.get(i, j));
        }
    }
    s
}

/// Signs making the integer columns sum to zero, first sign positive.
pub(crate) fn zero_sum_signs(h: &IntMatrix, cols: &[usize]) -> Option<Vec<i64>> {
    let k = cols.len();
    (0..1u32 << (k.saturating_sub(1))).find_map(|mask| {
        let signs: Vec<i64> = (0..k).map(|j| if j > 0 && mask >> (j - 1) & 1 == 1 { -1 } else { 1 }).collect();
        let zero = (0..h.rows()).all(|i| {
            let s: BigInt = cols.iter().zip(&signs).map(|(&c, &t)| h.get(i, c) * t).sum();
            s.is_zero()
        });
        zero.then_some(signs)
    })
}

fn glue(m1: &BinaryMatroid, m2: &BinaryMatroid, k: usize, left: &[usize], right: &[usize]) -> Result<BinaryMatroid> {
    let (n1, d1) = (m1.len(), m1.rank());
    let keep: Vec<usize> = (0..n1)
        .filter(|j| !left.contains(j))
        .chain((0..m2.len()).filter(|j| !right.contains(j)).map(|j| n1 + j))
        .collect();
    let labels: Vec<String> = keep
        .iter()
        .map(|&j| if j < n1 { format!("1.{}", m1.labels()[j]) } else { format!("2.{}", m2.labels()[j - n1]) })
        .collect();
    let s = stack(m1.rep(), m2.rep());
    let mut g = BitMatrix::zeros(left.len(), s.rows());
    for (t, (&a, &b)) in left.iter().zip(right).enumerate() {
        for i in 0..d1 {
            g.set(t, i, m1.rep().get(i, a));
        }
        for i in 0..m2.rank() {
            g.set(t, d1 + i, m2.rep().get(i, b));
        }
    }
    let q = if left.is_empty() { BitMatrix::identity(s.rows()) } else { g.kernel() };
    let rep = q.mul(&s.select_columns(&keep));
    let provenance = Provenance::Sum {
        k,
        left: Box::new(m1.clone()),
        right: Box::new(m2.clone()),
        glue_left: left.to_vec(),
        glue_right: right.to_vec(),
    };
    let out = BinaryMatroid::from_columns(labels, &rep)?.with_provenance(provenance);
    let lift = match (m1.lift(), m2.lift()) {
        (Some(l1), Some(l2)) => {
            let signs = if k == 3 {
                zero_sum_signs(l1, left).zip(zero_sum_signs(l2, right))
            } else {
                Some((vec![1; left.len()], vec![1; right.len()]))
            };
            signs.and_then(|(s1, s2)| {
                let l = l1.block_diag(l2);
                let mut gz = IntMatrix::zeros(left.len(), l.rows());
                for t in 0..left.len() {
                    for i in 0..d1 {
                        gz.set(t, i, l1.get(i, left[t]) * s1[t]);
                    }
                    for i in 0..m2.rank() {
                        gz.set(t, d1 + i, -(l2.get(i, right[t]) * s2[t]));
                    }
                }
                let b = if left.is_empty() { IntMatrix::identity(l.rows()) } else { kernel_lattice_basis(&gz) };
                lift_if_matches(&out, b.transpose().mul(&l.select_columns(&keep)))
            })
        }
        _ => None,
    };
    Ok(BinaryMatroid { lift, ..out })
}

pub fn sum1(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Result<BinaryMatroid> {
    glue(m1, m2, 1, &[], &[])
}

/// Identifies element `e1` of `m1` with `e2` of `m2` and drops both.
pub fn sum2(m1: &BinaryMatroid, e1: usize, m2: &BinaryMatroid, e2: usize) -> Result<BinaryMatroid> {
    for (m, e, side) in [(m1, e1, "left"), (m2, e2, "right")] {
        if e >= m.len() {
            return Err(Error::Precondition(format!("2-sum: {side} element {e} out of range")));
        }
        if m.len() < 2 {
            return Err(Error::Precondition(format!("2-sum: {side} matroid needs at least 2 elements")));
        }
        if m.column_masks()[e] == 0 {
            return Err(Error::Precondition(format!("2-sum: {side} element {e} is a loop")));
        }
    }
    glue(m1, m2, 2, &[e1], &[e2])
}

/// Glues the triangles `w1` and `w2`, matching `w1[j]` with `w2[pairing[j]]`.
pub fn sum3(
    m1: &BinaryMatroid,
    w1: [usize; 3],
    m2: &BinaryMatroid,
    w2: [usize; 3],
    pairing: [usize; 3],
) -> Result<BinaryMatroid> {
    let mut p = pairing;
    p.sort_unstable();
    if p != [0, 1, 2] {
        return Err(Error::Precondition(format!("3-sum: pairing {pairing:?} is not a permutation of 0,1,2")));
    }
    for (m, w, side) in [(m1, w1, "left"), (m2, w2, "right")] {
        if m.len() < 7 {
            return Err(Error::Precondition(format!("3-sum: {side} matroid needs at least 7 elements")));
        }
        if w.iter().any(|&e| e >= m.len()) {
            return Err(Error::Precondition(format!("3-sum: {side} triangle {w:?} out of range")));
        }
        let c = m.column_masks();
        let v = [c[w[0]], c[w[1]], c[w[2]]];
        if v.contains(&0) || v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
            return Err(Error::Precondition(format!(
                "3-sum: {side} triangle {w:?} must be three distinct nonzero columns"
            )));
        }
        if v[0] ^ v[1] ^ v[2] != 0 {
            return Err(Error::Precondition(format!("3-sum: {side} triangle {w:?} does not sum to zero")));
        }
    }
    let right = [w2[pairing[0]], w2[pairing[1]], w2[pairing[2]]];
    glue(m1, m2, 3, &w1, &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::odd_determinant_check;
    use crate::graph::{catalog, MultiGraph};
    use crate::matroid::{graphic, isomorphic};

    #[test]
    fn one_sum_ranks_add() {
        let k4 = graphic(&catalog("k4").unwrap(), 0).unwrap();
        let s = sum1(&k4, &k4).unwrap();
        assert_eq!((s.rank(), s.len()), (6, 12));
        assert!(odd_determinant_check(s.lift().unwrap()).unwrap().is_ok());
    }

    #[test]
    fn two_sum_of_graphic_is_clique_sum() {
        let g = catalog("k4").unwrap();
        let k4 = graphic(&g, 0).unwrap();
        // Glue edge 0 = (0,1) of both copies and delete it.
        let s = sum2(&k4, 0, &k4, 0).unwrap();
        assert_eq!((s.rank(), s.len()), (5, 10));
        let mut edges: Vec<(usize, usize)> = g.edges()[1..].to_vec();
        edges.extend(g.edges()[1..].iter().map(|&(u, v)| {
            let f = |x: usize| if x < 2 { x } else { x + 2 };
            (f(u), f(v))
        }));
        let glued = graphic(&MultiGraph::from_edges(6, &edges), 0).unwrap();
        let mut a = s.circuits().unwrap();
        let mut b = glued.circuits().unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert!(isomorphic(&s, &glued).unwrap().is_some());
        assert!(odd_determinant_check(s.lift().unwrap()).unwrap().is_ok());
    }

    #[test]
    fn preconditions() {
        let k4 = graphic(&catalog("k4").unwrap(), 0).unwrap();
        assert!(sum3(&k4, [0, 1, 3], &k4, [0, 1, 3], [0, 1, 2]).is_err());
        let k5 = graphic(&catalog("k5").unwrap(), 0).unwrap();
        assert!(sum3(&k5, [0, 1, 2], &k5, [0, 1, 2], [0, 0, 2]).is_err());
    }
}
