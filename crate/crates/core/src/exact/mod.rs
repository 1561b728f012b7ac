//! Exact arithmetic: rationals, integer and F2 matrices, lattices.

mod bits;
mod lattice;
mod matrix;
mod rat;
mod regular;

pub use bits::{rank_f2, BitMatrix, XorBasis};
pub use lattice::{column_lattice_basis, hermite_normal_form, kernel_lattice_basis, smith_normal_form};
pub use matrix::{det, rank_q, IntMatrix};
pub use rat::{rat, Rat};
pub use regular::{next_combination, odd_determinant_check, odd_determinant_check_naive, OddDetVerdict};

/// The 5x10 integer matrix of the sporadic matroid R10: identity block
/// followed by columns `e_{i-1} - e_i + e_{i+1}` (indices mod 5).
pub fn r10_matrix() -> IntMatrix {
    let mut m = IntMatrix::zeros(5, 10);
    for i in 0..5 {
        m.set(i, i, 1);
        m.set((i + 4) % 5, 5 + i, 1);
        m.set(i, 5 + i, -1);
        m.set((i + 1) % 5, 5 + i, 1);
    }
    m
}

/// Parses whitespace-separated rationals, one per line or token.
pub fn parse_rat_list(s: &str) -> crate::Result<Vec<Rat>> {
    s.split_whitespace().filter(|t| !t.starts_with('#')).map(str::parse).collect()
}
