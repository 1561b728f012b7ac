//! Binary matroids with optional integer lifts.

mod io;
mod iso;
mod sums;
mod weighted;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{check_guard, Error, Result};
use crate::exact::{
    kernel_lattice_basis, odd_determinant_check, r10_matrix, BitMatrix, IntMatrix, OddDetVerdict, XorBasis,
};
use crate::graph::MultiGraph;

pub use io::{build_matroid, parse_matroid, write_matroid};
pub use iso::{isomorphic, simplify, MAX_ISO_ELEMENTS};
pub use sums::{sum1, sum2, sum3};
pub use weighted::{ksum_rep, odd_transform, KSumConvention, OddStep, WeightedRep};

/// Indices into the ground set.
pub type GroundSubset = Vec<usize>;

pub const MAX_ENUM_ELEMENTS: usize = 24;

/// How a matroid was built; the six-involutions search uses this in place of
/// recognising graphic or cographic structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Graphic {
        graph: MultiGraph,
        root: usize,
    },
    Cographic {
        graph: MultiGraph,
    },
    R10,
    /// Survivors of `left` come first, then those of `right`, in order.
    Sum {
        k: usize,
        left: Box<BinaryMatroid>,
        right: Box<BinaryMatroid>,
        glue_left: Vec<usize>,
        glue_right: Vec<usize>,
    },
    Other,
}

/// Column vectors over F2 spanning F2^d, stored in reduced row echelon form.
/// A lift is an integer matrix reducing to the representation mod 2 whose
/// maximal minors are all zero or odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatroid {
    labels: Vec<String>,
    rep: BitMatrix,
    lift: Option<IntMatrix>,
    provenance: Provenance,
}

/// Row reduces `rep` to RREF, mirroring each step on `lift` with the sign
/// that keeps entries small.
fn canonicalize(rep: &mut BitMatrix, lift: &mut Option<IntMatrix>) {
    let (rows, cols) = (rep.rows(), rep.cols());
    let mut r = 0;
    for j in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| rep.get(i, j)) else { continue };
        rep.swap_rows(r, p);
        if let Some(l) = lift.as_mut() {
            l.swap_rows(r, p);
        }
        for i in 0..rows {
            if i != r && rep.get(i, j) {
                rep.add_row(i, r);
                if let Some(l) = lift.as_mut() {
                    let same = l.get(i, j).is_positive() == l.get(r, j).is_positive();
                    let k = BigInt::from(if same { -1 } else { 1 });
                    l.add_row_multiple(i, r, &k);
                }
            }
        }
        r += 1;
    }
}

impl BinaryMatroid {
    /// Validates full row rank and, when given, the lift.
    pub fn new(labels: Vec<String>, rep: BitMatrix, lift: Option<IntMatrix>) -> Result<BinaryMatroid> {
        if let Some(l) = &lift {
            if let OddDetVerdict::Violation { columns, determinant } = odd_determinant_check(l)? {
                return Err(Error::Precondition(format!("lift has even minor {determinant} on columns {columns:?}")));
            }
        }
        BinaryMatroid::trusted(labels, rep, lift, Provenance::Other)
    }

    /// As `new` without the minor check, for lifts regular by construction.
    pub(crate) fn trusted(
        labels: Vec<String>,
        mut rep: BitMatrix,
        mut lift: Option<IntMatrix>,
        provenance: Provenance,
    ) -> Result<BinaryMatroid> {
        if labels.len() != rep.cols() {
            return Err(Error::Dimension(format!("{} labels for {} columns", labels.len(), rep.cols())));
        }
        let rank = rep.rank();
        if rank != rep.rows() {
            return Err(Error::RankDeficient { rank, expected: rep.rows() });
        }
        if let Some(l) = &lift {
            if l.rows() != rep.rows() || l.cols() != rep.cols() || l.mod2() != rep {
                return Err(Error::Precondition("lift does not reduce to the representation mod 2".into()));
            }
        }
        canonicalize(&mut rep, &mut lift);
        Ok(BinaryMatroid { labels, rep, lift, provenance })
    }

    /// Keeps only the rows of `rep` needed for full rank.
    pub fn from_columns(labels: Vec<String>, rep: &BitMatrix) -> Result<BinaryMatroid> {
        let (r, pivots) = rep.rref();
        let rep = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        BinaryMatroid::trusted(labels, rep, None, Provenance::Other)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownName(format!("no element labelled {label}")))
    }

    pub fn rep(&self) -> &BitMatrix {
        &self.rep
    }

    pub fn lift(&self) -> Option<&IntMatrix> {
        self.lift.as_ref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn with_provenance(mut self, p: Provenance) -> BinaryMatroid {
        self.provenance = p;
        self
    }

    pub fn rank(&self) -> usize {
        self.rep.rows()
    }

    pub fn len(&self) -> usize {
        self.rep.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Column `j` as a bit mask over the rows; needs rank at most 64.
    pub fn column_masks(&self) -> Vec<u64> {
        assert!(self.rank() <= 64, "column masks need rank <= 64");
        self.rep.column_masks()
    }

    pub fn rank_of(&self, subset: &[usize]) -> usize {
        let cols = self.column_masks();
        let mut b = XorBasis::new();
        for &j in subset {
            b.insert(cols[j]);
        }
        b.len()
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        self.rank_of(subset) == subset.len()
    }

    pub fn is_basis(&self, subset: &[usize]) -> bool {
        subset.len() == self.rank() && self.is_independent(subset)
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.rank()).map(|i| (0..self.len()).find(|&j| self.rep.get(i, j)).expect("full rank")).collect()
    }

    /// Functional `v` (bit mask over rows) with `<v, column j> = target[j]`
    /// for every `j`, if one exists.
    pub fn functional_for(&self, target: &[bool]) -> Option<u64> {
        let v = self.pivots().iter().enumerate().fold(0u64, |v, (i, &p)| if target[p] { v | 1 << i } else { v });
        let ok = self.column_masks().iter().zip(target).all(|(&c, &t)| ((c & v).count_ones() % 2 == 1) == t);
        ok.then_some(v)
    }

    /// Minimal dependent sets, sorted by size then lexicographically.
    pub fn circuits(&self) -> Result<Vec<GroundSubset>> {
        let n = self.len();
        check_guard(n <= MAX_ENUM_ELEMENTS, || {
            format!("circuit enumeration limited to {MAX_ENUM_ELEMENTS} elements, got {n}")
        })?;
        let kernel = self.rep.kernel();
        let basis: Vec<u64> =
            (0..kernel.rows()).map(|i| (0..n).filter(|&j| kernel.get(i, j)).fold(0u64, |m, j| m | 1 << j)).collect();
        let cols = self.column_masks();
        let mut out = Vec::new();
        let mut x = 0u64;
        for step in 1u64..(1u64 << basis.len()) {
            x ^= basis[step.trailing_zeros() as usize];
            let support: Vec<usize> = (0..n).filter(|&j| x >> j & 1 == 1).collect();
            let mut b = XorBasis::new();
            for &j in &support {
                b.insert(cols[j]);
            }
            if b.len() + 1 == support.len() {
                out.push(support);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn cocircuits(&self) -> Result<Vec<GroundSubset>> {
        dual(self).circuits()
    }

    /// Complements of cocircuits.
    pub fn hyperplanes(&self) -> Result<Vec<GroundSubset>> {
        let n = self.len();
        let mut h: Vec<GroundSubset> =
            self.cocircuits()?.into_iter().map(|c| (0..n).filter(|j| !c.contains(j)).collect()).collect();
        h.sort();
        Ok(h)
    }

    /// Quotient by the span of `elements`, which are dropped. The lift, if
    /// any, is carried through the quotient lattice.
    pub fn contract(&self, elements: &[usize]) -> Result<BinaryMatroid> {
        let keep: Vec<usize> = (0..self.len()).filter(|j| !elements.contains(j)).collect();
        let labels = keep.iter().map(|&j| self.labels[j].clone()).collect();
        let glue = self.rep.select_columns(elements);
        let q = glue.transpose().kernel();
        let rep = q.mul(&self.rep.select_columns(&keep));
        let m = BinaryMatroid::from_columns(labels, &rep)?;
        let lift = self.lift.as_ref().and_then(|l| {
            let b = kernel_lattice_basis(&l.select_columns(elements).transpose());
            let h = b.transpose().mul(&l.select_columns(&keep));
            lift_if_matches(&m, h)
        });
        Ok(BinaryMatroid { lift, ..m })
    }

    pub fn lift_or_err(&self) -> Result<&IntMatrix> {
        self.lift.as_ref().ok_or_else(|| Error::Precondition("matroid has no integer lift".into()))
    }
}

/// Accepts `h` as a lift of `m` when its rows reduce mod 2 to a basis of the
/// row space of `m`; returns it re-expressed to match `m`'s echelon form.
pub(crate) fn lift_if_matches(m: &BinaryMatroid, h: IntMatrix) -> Option<IntMatrix> {
    if h.rows() != m.rank() || h.cols() != m.len() {
        return None;
    }
    let mut rep = h.mod2();
    if rep.rank() != m.rank() {
        return None;
    }
    let mut lift = Some(h);
    canonicalize(&mut rep, &mut lift);
    (rep == m.rep).then_some(lift.expect("set"))
}

/// Signed incidence matrix with the root row deleted; loops give zero columns.
pub fn graphic(g: &MultiGraph, root: usize) -> Result<BinaryMatroid> {
    if !g.is_connected() {
        return Err(Error::Precondition("graphic matroid needs a connected graph".into()));
    }
    if root >= g.n().max(1) {
        return Err(Error::Precondition(format!("root {root} out of range")));
    }
    let rows: Vec<usize> = (0..g.n()).filter(|&v| v != root).collect();
    let mut lift = IntMatrix::zeros(rows.len(), g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            continue;
        }
        if let Some(i) = rows.iter().position(|&x| x == u) {
            lift.set(i, e, 1);
        }
        if let Some(i) = rows.iter().position(|&x| x == v) {
            lift.set(i, e, -1);
        }
    }
    let labels = (0..g.m()).map(|e| e.to_string()).collect();
    BinaryMatroid::trusted(labels, lift.mod2(), Some(lift), Provenance::Graphic { graph: g.clone(), root })
}

/// Dual of the graphic matroid; its circuits are the minimal edge cuts.
pub fn cographic(g: &MultiGraph) -> Result<BinaryMatroid> {
    Ok(dual(&graphic(g, 0)?).with_provenance(Provenance::Cographic { graph: g.clone() }))
}

pub fn r10() -> BinaryMatroid {
    let lift = r10_matrix();
    let labels = (1..=5).map(|i| format!("e{i}")).chain((1..=5).map(|i| format!("f{i}"))).collect();
    BinaryMatroid::trusted(labels, lift.mod2(), Some(lift), Provenance::R10).expect("R10 has rank 5")
}

/// Standard-form dual `[I | A] -> [A^T | I]`; the lift becomes the transposed
/// kernel lattice basis of the original lift.
pub fn dual(m: &BinaryMatroid) -> BinaryMatroid {
    let (d, n) = (m.rank(), m.len());
    let pivots = m.pivots();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut rep = BitMatrix::zeros(free.len(), n);
    for (k, &f) in free.iter().enumerate() {
        rep.set(k, f, true);
        for (i, &p) in pivots.iter().enumerate() {
            if m.rep.get(i, f) {
                rep.set(k, p, true);
            }
        }
    }
    debug_assert_eq!(free.len(), n - d);
    let provenance = match &m.provenance {
        Provenance::Graphic { graph, .. } => Provenance::Cographic { graph: graph.clone() },
        Provenance::Cographic { graph } => Provenance::Graphic { graph: graph.clone(), root: 0 },
        Provenance::R10 => Provenance::R10,
        _ => Provenance::Other,
    };
    let out = BinaryMatroid::trusted(m.labels.clone(), rep, None, provenance).expect("dual has full rank");
    let lift = m.lift.as_ref().and_then(|l| {
        let k = kernel_lattice_basis(l).transpose();
        lift_if_matches(&out, k)
    });
    BinaryMatroid { lift, ..out }
}

pub(crate) fn is_zero_column(m: &IntMatrix, j: usize) -> bool {
    (0..m.rows()).all(|i| m.get(i, j).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::next_combination;
    use crate::graph::{catalog, enumerate_cycles};

    #[test]
    fn graphic_k4_circuits_are_cycles() {
        let g = catalog("k4").unwrap();
        let m = graphic(&g, 0).unwrap();
        assert_eq!((m.rank(), m.len()), (3, 6));
        let cycles: Vec<Vec<usize>> = enumerate_cycles(&g).unwrap().iter().map(|c| c.edges().to_vec()).collect();
        let mut circ = m.circuits().unwrap();
        let mut cyc = cycles.clone();
        circ.sort();
        cyc.sort();
        assert_eq!(circ, cyc);
        assert_eq!(circ.len(), 7);
    }

    #[test]
    fn degenerate_graphic() {
        let loop1 = MultiGraph::from_edges(1, &[(0, 0)]);
        let m = graphic(&loop1, 0).unwrap();
        assert_eq!((m.rank(), m.len()), (0, 1));
        let t = graphic(&catalog("theta").unwrap(), 0).unwrap();
        assert_eq!(t.rank(), 1);
        assert_eq!(t.circuits().unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(graphic(&MultiGraph::empty(2), 0).is_err());
    }

    #[test]
    fn r10_self_dual_bases() {
        let m = r10();
        assert_eq!(m.rank(), 5);
        let mut idx: Vec<usize> = (0..5).collect();
        let (mut count, mut bases, mut literal_misses) = (0, 0, 0);
        loop {
            let comp: Vec<usize> = (0..10).filter(|j| !idx.contains(j)).collect();
            // Self-duality holds after swapping e_i and f_i.
            let swapped: Vec<usize> = comp.iter().map(|&j| (j + 5) % 10).collect();
            assert_eq!(m.is_basis(&idx), m.is_basis(&swapped));
            bases += usize::from(m.is_basis(&idx));
            literal_misses += usize::from(m.is_basis(&idx) != m.is_basis(&comp));
            count += 1;
            if !next_combination(&mut idx, 10) {
                break;
            }
        }
        assert_eq!((count, bases, literal_misses), (252, 162, 180));
        let c = m.circuits().unwrap();
        assert_eq!(c[0].len(), 4);
    }

    #[test]
    fn dual_lifts_stay_regular() {
        for g in ["k4", "k33", "petersen"] {
            let m = cographic(&catalog(g).unwrap()).unwrap();
            let l = m.lift().expect("lift carried");
            assert!(odd_determinant_check(l).unwrap().is_ok());
            assert_eq!(dual(&m).rank(), catalog(g).unwrap().n() - 1);
        }
        let d = dual(&r10());
        assert!(odd_determinant_check(d.lift().unwrap()).unwrap().is_ok());
    }

    #[test]
    fn vertex_functionals() {
        let g = catalog("k4").unwrap();
        let m = graphic(&g, 0).unwrap();
        for x in 0..4 {
            let target: Vec<bool> = g.edges().iter().map(|&(u, v)| (u == x) != (v == x)).collect();
            assert!(m.functional_for(&target).is_some());
        }
        assert!(m.functional_for(&[true, false, false, false, false, false]).is_none());
    }
}
