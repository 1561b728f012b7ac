//! Systole of a graph: the largest, over probability weightings of the
//! edges, of the minimum cycle weight.

use serde::{Deserialize, Serialize};

use super::lp::{lp_max, LpStatus};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::graph::{enumerate_cycles, min_weight_cycle, shortest_cycle_through, Cycle, EdgeWeights, MultiGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystoleResult {
    pub value: Rat,
    pub weights: EdgeWeights,
    pub tight_cycles: Vec<Cycle>,
    /// Probability distribution on cycles; every edge carries load at most `value`.
    pub dual_dist: Vec<(Cycle, Rat)>,
}

impl SystoleResult {
    /// Checks the two certificates: the weights reach `value` on every cycle
    /// and the cycle distribution shows no weighting does better.
    pub fn verify(&self, g: &MultiGraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(format!("systole certificate: {msg}")));
        if self.weights.len() != g.m() || !self.weights.total().is_one() {
            return fail("weights must have one entry per edge and sum to 1".into());
        }
        let (_, min) = min_weight_cycle(g, self.weights.as_slice())?;
        if min != self.value {
            return fail(format!("shortest cycle weighs {min}, claimed {}", self.value));
        }
        let total: Rat = self.dual_dist.iter().map(|(_, p)| p).sum();
        if !total.is_one() || self.dual_dist.iter().any(|(_, p)| p.is_negative()) {
            return fail("dual distribution is not a probability vector".into());
        }
        let mut load = vec![Rat::zero(); g.m()];
        for (c, p) in &self.dual_dist {
            Cycle::new(g, c.edges().to_vec())?;
            for &e in c.edges() {
                load[e] += p;
            }
        }
        if let Some(l) = load.iter().find(|l| **l > self.value) {
            return fail(format!("edge load {l} exceeds {}", self.value));
        }
        Ok(())
    }
}

/// Exact systole by cutting planes. The LP is solved in its packing form
/// (maximise the total mass on cycles with edge loads at most one); its
/// duals are the edge weights, and a cycle lighter than one under them is
/// a violated constraint.
pub fn systole(g: &MultiGraph) -> Result<SystoleResult> {
    if g.betti() == 0 {
        return Err(Error::Precondition("systole of a forest is undefined".into()));
    }
    let m = g.m();
    let ones = vec![Rat::one(); m];
    // Seeds: a girth cycle and a shortest cycle through each edge.
    let mut cycles = vec![min_weight_cycle(g, &ones)?.0];
    for e in 0..m {
        if let Some((c, _)) = shortest_cycle_through(g, &ones, e) {
            if !cycles.contains(&c) {
                cycles.push(c);
            }
        }
    }
    loop {
        let k = cycles.len();
        let ineq: Vec<(Vec<Rat>, Rat)> = (0..m)
            .map(|e| {
                (cycles.iter().map(|c| if c.contains(e) { Rat::one() } else { Rat::zero() }).collect(), Rat::one())
            })
            .collect();
        let sol = lp_max(&vec![Rat::one(); k], &[], &ineq)?;
        debug_assert_eq!(sol.status, LpStatus::Optimal);
        let lambda = sol.dual;
        let (c, w) = min_weight_cycle(g, &lambda)?;
        if w < Rat::one() && !cycles.contains(&c) {
            cycles.push(c);
            continue;
        }
        let opt = sol.value;
        let inv = opt.recip();
        let weights: Vec<Rat> = lambda.iter().map(|x| x * &inv).collect();
        let value = inv.clone();
        let tight_cycles = cycles.iter().filter(|c| c.weight(&weights) == value).cloned().collect();
        let dual_dist =
            cycles.iter().zip(&sol.primal).filter(|(_, y)| !y.is_zero()).map(|(c, y)| (c.clone(), y * &inv)).collect();
        return Ok(SystoleResult { value, weights: EdgeWeights::new(weights)?, tight_cycles, dual_dist });
    }
}

/// Normalised minimum cycle weight `min_C w(C) / w(G)` and a witness.
pub fn systole_weighted(g: &MultiGraph, w: &EdgeWeights) -> Result<(Rat, Cycle)> {
    if w.len() != g.m() {
        return Err(Error::Dimension(format!("{} weights for {} edges", w.len(), g.m())));
    }
    let total = w.total();
    if total.is_zero() {
        return Err(Error::Precondition("total edge weight is zero".into()));
    }
    let (c, x) = min_weight_cycle(g, w.as_slice())?;
    Ok((x / total, c))
}

/// Oracle: one LP with a constraint for every cycle of the graph.
pub fn systole_bruteforce(g: &MultiGraph) -> Result<(Rat, EdgeWeights)> {
    let cycles = enumerate_cycles(g)?;
    if cycles.is_empty() {
        return Err(Error::Precondition("systole of a forest is undefined".into()));
    }
    let m = g.m();
    // Variables: lambda_0..lambda_{m-1}, t.
    let mut obj = vec![Rat::zero(); m + 1];
    obj[m] = Rat::one();
    let mut sum = vec![Rat::one(); m + 1];
    sum[m] = Rat::zero();
    let ineq: Vec<(Vec<Rat>, Rat)> = cycles
        .iter()
        .map(|c| {
            let mut row = vec![Rat::zero(); m + 1];
            for &e in c.edges() {
                row[e] = -Rat::one();
            }
            row[m] = Rat::one();
            (row, Rat::zero())
        })
        .collect();
    let sol = lp_max(&obj, &[(sum, Rat::one())], &ineq)?;
    let weights = EdgeWeights::new(sol.primal[..m].to_vec())?;
    Ok((sol.value, weights))
}
