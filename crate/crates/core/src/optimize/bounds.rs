//! Extremal tables and the recursive bounds on reciprocal systoles.
//! Tables are indexed from 1: `table[k - 1]` is the value at `k`.

use crate::error::{Error, Result};
use crate::exact::{rat, Rat};

/// Largest systole of a graph with Betti number `b`, for `b = 1..=9`.
pub fn s_table() -> Vec<Rat> {
    vec![rat(1, 1), rat(2, 3), rat(1, 2), rat(4, 9), rat(3, 8), rat(1, 3), rat(3, 10), rat(2, 7), rat(1, 4)]
}

/// Largest cogirth of a regular matroid of rank `d`, for `d = 1..=9`.
pub fn c_table() -> Vec<Rat> {
    vec![rat(1, 1), rat(2, 3), rat(1, 2), rat(4, 9), rat(2, 5), rat(1, 3), rat(3, 10), rat(2, 7), rat(1, 4)]
}

fn inv_at(table: &[Rat], k: usize) -> Result<Rat> {
    if k == 0 || k > table.len() {
        return Err(Error::Precondition(format!("table has no entry for {k}")));
    }
    Ok(table[k - 1].recip())
}

/// `h/g + s(b-h)^-1`, a lower bound on `sys(G)^-1` for 3-connected `G` with a
/// cycle of length `g`.
pub fn bound_small_cycle(b: usize, g: usize, h: usize, s: &[Rat]) -> Result<Rat> {
    if b < 2 || h < 1 || h > g.min(b - 1) {
        return Err(Error::Precondition(format!("need 1 <= h <= min(g, b-1), got b={b} g={g} h={h}")));
    }
    Ok(rat(h as i64, g as i64) + inv_at(s, b - h)?)
}

/// One of the three large girth estimates (`case` in 1..=3) for cubic `G` of
/// Betti number `b` whose cycles all have length at least `g`.
pub fn large_girth_case(b: usize, g: usize, case: usize, s: &[Rat]) -> Result<Rat> {
    let bi = b as i64;
    match case {
        1 if g >= 2 && b >= 3 => Ok(rat(bi - 1, bi - 2) * inv_at(s, b - 2)?),
        2 if g >= 3 && b >= 4 => Ok(rat(3 * bi - 3, 3 * bi - 8) * inv_at(s, b - 3)?),
        3 if g >= 4 && b >= 6 => Ok(rat(bi - 1, bi - 4) * inv_at(s, b - 5)?),
        _ => Err(Error::Precondition(format!("large girth case {case} does not apply to b={b} g={g}"))),
    }
}

/// Best applicable large girth estimate on `sys(G)^-1`.
pub fn bound_large_girth(b: usize, g: usize, s: &[Rat]) -> Result<Rat> {
    (1..=3)
        .filter_map(|case| large_girth_case(b, g, case, s).ok())
        .max()
        .ok_or_else(|| Error::Precondition(format!("no large girth estimate applies to b={b} g={g}")))
}

/// Lower bound on `c(M)^-1` for a decomposable regular matroid of rank `d`.
pub fn bound_decomposable(d: usize, c: &[Rat]) -> Result<Rat> {
    if d < 4 {
        return Err(Error::Precondition(format!("decomposable bound needs d >= 4, got {d}")));
    }
    let mut best: Option<Rat> = None;
    for d1 in 1..=d - 3 {
        let x = inv_at(c, d1)? + inv_at(c, d - 2 - d1)?;
        if best.as_ref().is_none_or(|b| x < *b) {
            best = Some(x);
        }
    }
    Ok(best.expect("d >= 4"))
}

/// Upper bound `2 / (b - 1 + chi)` on the systole of a graph embedded in a
/// surface of Euler characteristic `chi`.
pub fn embedding_systole_bound(b: usize, chi: i64) -> Result<Rat> {
    let den = b as i64 - 1 + chi;
    if den <= 0 {
        return Err(Error::Precondition(format!("b - 1 + chi = {den} is not positive")));
    }
    Ok(rat(2, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_chains() {
        let s = s_table();
        assert_eq!(bound_large_girth(4, 4, &s).unwrap(), rat(9, 4));
        assert_eq!(bound_large_girth(5, 2, &s).unwrap(), rat(8, 3));
        assert_eq!(bound_large_girth(6, 3, &s).unwrap(), rat(3, 1));
        assert_eq!(bound_large_girth(8, 3, &s).unwrap(), rat(7, 2));
        assert_eq!(large_girth_case(10, 4, 3, &s).unwrap(), rat(4, 1));
        // The second estimate is sharper here once s(7) is known.
        assert_eq!(bound_large_girth(10, 4, &s).unwrap(), rat(45, 11));
        assert!(bound_small_cycle(10, 3, 2, &s).unwrap() > rat(4, 1));
        assert_eq!(bound_small_cycle(3, 3, 1, &s).unwrap(), rat(1, 3) + rat(3, 2));
        assert!(bound_small_cycle(3, 3, 3, &s).is_err());
        assert!(bound_large_girth(2, 5, &s).is_err());
    }

    #[test]
    fn decomposable() {
        let c = c_table();
        assert_eq!(bound_decomposable(4, &c).unwrap(), rat(2, 1));
        assert_eq!(bound_decomposable(6, &c).unwrap(), rat(3, 1));
        assert_eq!(bound_decomposable(9, &c).unwrap(), rat(4, 1));
        assert!(bound_decomposable(3, &c).is_err());
    }

    #[test]
    fn embedding() {
        assert_eq!(embedding_systole_bound(8, 0).unwrap(), rat(2, 7));
        assert_eq!(embedding_systole_bound(9, 0).unwrap(), rat(1, 4));
        assert_eq!(embedding_systole_bound(7, 1).unwrap(), rat(2, 7));
        assert!(embedding_systole_bound(1, 0).is_err());
    }
}
