use std::fmt;

/// Dense matrix over F2, each row packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, bits: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> BitMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b & 1 == 1);
            }
        }
        m
    }

    /// Builds a matrix whose column `j` is the low `rows` bits of `cols[j]`.
    pub fn from_column_masks(rows: usize, cols: &[u64]) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.set(i, j, (c >> i) & 1 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.bits[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.bits[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// row `dst` += row `src`
    pub fn add_row(&mut self, dst: usize, src: usize) {
        for k in 0..self.words {
            let s = self.bits[src * self.words + k];
            self.bits[dst * self.words + k] ^= s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.bits.swap(a * self.words + k, b * self.words + k);
        }
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row_words(i).iter().all(|&w| w == 0)
    }

    /// Column `j` as a bitmask over rows; requires at most 64 rows.
    pub fn column_mask(&self, j: usize) -> u64 {
        assert!(self.rows <= 64, "column_mask needs at most 64 rows");
        (0..self.rows).fold(0, |acc, i| acc | ((self.get(i, j) as u64) << i))
    }

    pub fn column_masks(&self) -> Vec<u64> {
        (0..self.cols).map(|j| self.column_mask(j)).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            m.bits[k * m.words..(k + 1) * m.words].copy_from_slice(self.row_words(i));
        }
        m
    }

    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..m.words {
                        m.bits[i * m.words + w] ^= other.bits[k * other.words + w];
                    }
                }
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, j)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, j) {
                    self.add_row(i, r);
                }
            }
            pivots.push(j);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : self * x = 0}, one vector per row.
    pub fn kernel(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = BitMatrix::zeros(free.len(), self.cols);
        for (t, &f) in free.iter().enumerate() {
            k.set(t, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    k.set(t, p, true);
                }
            }
        }
        k
    }
}

/// Rank over F2.
pub fn rank_f2(m: &BitMatrix) -> usize {
    m.rank()
}

/// Incremental F2 basis of bitmask vectors with distinct leading bits.
#[derive(Clone, Debug, Default)]
pub struct XorBasis {
    vecs: Vec<u64>,
}

impl XorBasis {
    pub fn new() -> XorBasis {
        XorBasis::default()
    }

    pub fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.vecs {
            v = v.min(v ^ b);
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.vecs.push(r);
        self.vecs.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(BitMatrix::identity(6).rank(), 6);
        assert_eq!(BitMatrix::from_rows(&vec![vec![1, 1, 1]; 3]).rank(), 1);
        assert_eq!(BitMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn kernel_is_orthogonal() {
        let m = BitMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        assert!(m.mul(&k.transpose()).rank() == 0);
    }

    #[test]
    fn xor_basis() {
        let mut b = XorBasis::new();
        assert!(b.insert(0b011));
        assert!(b.insert(0b110));
        assert!(!b.insert(0b101));
        assert!(b.insert(0b100));
        assert_eq!(b.len(), 3);
        assert_eq!(b.reduce(0b111), 0);
    }

    #[test]
    fn wide_rows() {
        let mut m = BitMatrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 3, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().transpose(), m);
    }
}
