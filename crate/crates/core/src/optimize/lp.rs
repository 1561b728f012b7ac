//! Dense exact simplex with Bland's rule.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// `dual` lists equality rows first, then inequality rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpSolution {
    pub status: LpStatus,
    pub primal: Vec<Rat>,
    pub dual: Vec<Rat>,
    pub value: Rat,
}

/// A linear constraint `coeffs . x (= or <=) rhs`.
pub type Constraint = (Vec<Rat>, Rat);

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            self.rhs[i] -= &(&f * &prhs);
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_B B^-1 A_j - c_j`; an entering column has a negative one.
    fn reduced(&self, cost: &[Rat], j: usize) -> Rat {
        let mut z = -cost[j].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                z += &(&cost[b] * &self.rows[i][j]);
            }
        }
        z
    }

    /// Maximises `cost . x` over columns `allowed`; false when unbounded.
    fn optimize(&mut self, cost: &[Rat], allowed: &[bool]) -> bool {
        loop {
            let Some(c) = (0..cost.len()).find(|&j| allowed[j] && self.reduced(cost, j).is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Maximises `objective . x` subject to `x >= 0` and the given equality and
/// inequality rows.
pub fn lp_max(objective: &[Rat], eq: &[Constraint], ineq: &[Constraint]) -> Result<LpSolution> {
    let nv = objective.len();
    if let Some((c, _)) = eq.iter().chain(ineq).find(|(c, _)| c.len() != nv) {
        return Err(Error::Dimension(format!("constraint has {} coefficients, expected {nv}", c.len())));
    }
    let ne = eq.len();
    let nrows = ne + ineq.len();
    let nslack = ineq.len();
    // Columns: variables, slacks, one artificial per row.
    let ncols = nv + nslack + nrows;
    let mut rows = Vec::with_capacity(nrows);
    let mut rhs = Vec::with_capacity(nrows);
    let mut sign = Vec::with_capacity(nrows);
    for (i, (c, b)) in eq.iter().chain(ineq).enumerate() {
        let mut row = vec![Rat::zero(); ncols];
        row[..nv].clone_from_slice(c);
        if i >= ne {
            row[nv + i - ne] = Rat::one();
        }
        let s = if b.is_negative() { -1 } else { 1 };
        if s < 0 {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[nv + nslack + i] = Rat::one();
        rows.push(row);
        rhs.push(if s < 0 { -b.clone() } else { b.clone() });
        sign.push(s);
    }
    // Rows whose slack is a unit column start with it in the basis.
    let basis = (0..nrows).map(|i| if i >= ne && sign[i] > 0 { nv + i - ne } else { nv + nslack + i }).collect();
    let mut t = Tableau { rows, rhs, basis };
    let is_art = |j: usize| j >= nv + nslack;

    let mut phase1 = vec![Rat::zero(); ncols];
    for (i, &b) in t.basis.iter().enumerate() {
        if is_art(b) {
            phase1[nv + nslack + i] = -Rat::one();
        }
    }
    let all = vec![true; ncols];
    t.optimize(&phase1, &all);
    let infeasible = t.basis.iter().enumerate().any(|(i, &b)| is_art(b) && !t.rhs[i].is_zero());
    if infeasible {
        return Ok(LpSolution {
            status: LpStatus::Infeasible,
            primal: vec![Rat::zero(); nv],
            dual: vec![Rat::zero(); nrows],
            value: Rat::zero(),
        });
    }
    // Drive zero-level artificials out; rows that cannot be pivoted are redundant.
    let mut redundant = vec![false; nrows];
    for r in 0..nrows {
        if is_art(t.basis[r]) {
            match (0..nv + nslack).find(|&j| !t.rows[r][j].is_zero()) {
                Some(c) => t.pivot(r, c),
                None => redundant[r] = true,
            }
        }
    }
    let mut cost = vec![Rat::zero(); ncols];
    cost[..nv].clone_from_slice(objective);
    let allowed: Vec<bool> = (0..ncols).map(|j| !is_art(j)).collect();
    let (keep_rows, keep_rhs, keep_basis): (Vec<_>, Vec<_>, Vec<_>) = {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut c = Vec::new();
        for r in 0..nrows {
            if !redundant[r] {
                a.push(t.rows[r].clone());
                b.push(t.rhs[r].clone());
                c.push(t.basis[r]);
            }
        }
        (a, b, c)
    };
    let mut t = Tableau { rows: keep_rows, rhs: keep_rhs, basis: keep_basis };
    if !t.optimize(&cost, &allowed) {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            primal: vec![Rat::zero(); nv],
            dual: vec![Rat::zero(); nrows],
            value: Rat::zero(),
        });
    }
    let mut primal = vec![Rat::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            primal[b] = t.rhs[i].clone();
        }
    }
    // y_i = c_B B^-1 e_i, read off the artificial column of row i.
    let dual = (0..nrows)
        .map(|i| {
            if redundant[i] {
                return Rat::zero();
            }
            let y = t.reduced(&cost, nv + nslack + i);
            if sign[i] < 0 {
                -y
            } else {
                y
            }
        })
        .collect();
    let value = objective.iter().zip(&primal).map(|(c, x)| c * x).sum();
    Ok(LpSolution { status: LpStatus::Optimal, primal, dual, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    fn check_duality(obj: &[Rat], eq: &[Constraint], ineq: &[Constraint], s: &LpSolution) {
        let dual_value: Rat = eq.iter().chain(ineq).zip(&s.dual).map(|((_, b), y)| b * y).sum();
        assert_eq!(dual_value, s.value);
        for j in 0..obj.len() {
            let col: Rat = eq.iter().chain(ineq).zip(&s.dual).map(|((c, _), y)| &c[j] * y).sum();
            assert!(col >= obj[j]);
        }
        assert!(s.dual[eq.len()..].iter().all(|y| !y.is_negative()));
    }

    #[test]
    fn single_bound() {
        let s = lp_max(&r(&[1]), &[], &[(r(&[1]), Rat::one())]).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Rat::one());
        assert_eq!(s.dual, vec![Rat::one()]);
    }

    #[test]
    fn theta_systole_lp() {
        // variables l0 l1 l2 t; t <= l_i + l_j for the three 2-cycles.
        let obj = r(&[0, 0, 0, 1]);
        let eq = vec![(r(&[1, 1, 1, 0]), Rat::one())];
        let ineq = vec![
            (r(&[-1, -1, 0, 1]), Rat::zero()),
            (r(&[-1, 0, -1, 1]), Rat::zero()),
            (r(&[0, -1, -1, 1]), Rat::zero()),
        ];
        let s = lp_max(&obj, &eq, &ineq).unwrap();
        assert_eq!(s.value, rat(2, 3));
        check_duality(&obj, &eq, &ineq, &s);
    }

    #[test]
    fn redundant_equalities_and_statuses() {
        let obj = r(&[1, 1]);
        let eq = vec![(r(&[1, 1]), Rat::from_int(2)), (r(&[2, 2]), Rat::from_int(4))];
        let s = lp_max(&obj, &eq, &[(r(&[1, 0]), Rat::one())]).unwrap();
        assert_eq!(s.value, Rat::from_int(2));
        check_duality(&obj, &eq, &[(r(&[1, 0]), Rat::one())], &s);
        let inf = lp_max(&obj, &[], &[(r(&[1, 0]), Rat::from_int(-1))]).unwrap();
        assert_eq!(inf.status, LpStatus::Infeasible);
        let unb = lp_max(&obj, &[], &[(r(&[1, -1]), Rat::one())]).unwrap();
        assert_eq!(unb.status, LpStatus::Unbounded);
    }

    #[test]
    fn negative_rhs_rows() {
        // max -x - y with x + y >= 3 written as -x - y <= -3.
        let obj = r(&[-1, -1]);
        let ineq = vec![(r(&[-1, -1]), Rat::from_int(-3))];
        let s = lp_max(&obj, &[], &ineq).unwrap();
        assert_eq!(s.value, Rat::from_int(-3));
        check_duality(&obj, &[], &ineq, &s);
    }
}
