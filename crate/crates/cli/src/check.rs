//! `--check`: re-verifies a certificate by the cheap direction only.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde_json::Value;

use regma::exact::Rat;
use regma::graph::{is_three_edge_connected, min_weight_cycle, parse_graph, Cycle, EdgeWeights, MultiGraph};
use regma::involutions::{verify_involutions, InvolutionSet, Method, RANK};
use regma::matroid::{parse_matroid, BinaryMatroid, WeightedRep};
use regma::optimize::{functional_weight, min_functional, SystoleResult};
use regma::surface::EmbeddingCertificate;

use crate::commands::UsageError;

fn field<T: DeserializeOwned>(v: &Value, key: &str) -> Result<T> {
    let x = v.get(key).ok_or_else(|| anyhow!("certificate lacks {key:?}"))?;
    serde_json::from_value(x.clone()).with_context(|| format!("field {key:?}"))
}

fn graph(v: &Value, key: &str) -> Result<MultiGraph> {
    Ok(parse_graph(&field::<String>(v, key)?)?)
}

fn matroid(v: &Value) -> Result<BinaryMatroid> {
    Ok(parse_matroid(&field::<String>(v, "matroid")?)?)
}

fn mask(bits: &str, width: usize) -> Result<u64> {
    if bits.len() != width || !bits.chars().all(|c| c == '0' || c == '1') {
        bail!("bad functional {bits:?} for rank {width}");
    }
    Ok(bits.chars().enumerate().filter(|&(_, c)| c == '1').fold(0, |v, (i, _)| v | 1 << i))
}

/// Outcome of one check; the message goes to stderr either way.
fn verdict(ok: bool, msg: String) -> Result<bool> {
    eprintln!("{}: {msg}", if ok { "ok" } else { "FAIL" });
    Ok(ok)
}

pub fn run(path: &Path) -> Result<bool> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: not JSON: {e}", path.display())))?;
    let kind: String = field(&v, "kind")?;
    match kind.as_str() {
        "systole" => {
            let g = graph(&v, "graph")?;
            let s: SystoleResult = field(&v, "result")?;
            match s.verify(&g) {
                Ok(()) => verdict(true, format!("systole {} certified from both sides", s.value)),
                Err(e) => verdict(false, e.to_string()),
            }
        }
        "systole_weighted" => {
            let g = graph(&v, "graph")?;
            let w = EdgeWeights::new(field(&v, "weights")?)?;
            let value: Rat = field(&v, "value")?;
            let c = Cycle::new(&g, field(&v, "cycle")?)?;
            let (_, min) = min_weight_cycle(&g, w.as_slice())?;
            let ratio = c.weight(w.as_slice()) / w.total();
            verdict(
                ratio == value && min / w.total() == value,
                format!("weighted systole {value}, cycle ratio {ratio}"),
            )
        }
        "cogirth" => {
            let m = matroid(&v)?;
            let w: Vec<Rat> = field(&v, "weights")?;
            let value: Rat = field(&v, "value")?;
            let witness = mask(&field::<String>(&v, "witness")?, m.rank())?;
            let cols = m.column_masks();
            if w.len() != cols.len() || w.iter().any(Rat::is_negative) || !w.iter().sum::<Rat>().is_one() {
                return verdict(false, "weights must be a probability vector on the elements".into());
            }
            let (min, _) = min_functional(m.rank(), &cols, &w)?;
            let at = functional_weight(&cols, &w, witness);
            verdict(
                min == value && at == value,
                format!("weighting reaches {min}, witness charges {at}, claimed {value}"),
            )
        }
        "c_rep" => {
            let m = matroid(&v)?;
            let r = WeightedRep::from_matroid(&m, field(&v, "mult")?)?;
            let value: Rat = field(&v, "value")?;
            let witness = mask(&field::<String>(&v, "witness")?, r.rank())?;
            let (min, _) = min_functional(r.rank(), &r.masks(), r.mult())?;
            let at = functional_weight(&r.masks(), r.mult(), witness);
            verdict(
                min == value && at == value,
                format!("smallest charge {min}, witness charges {at}, claimed {value}"),
            )
        }
        "embedding" => {
            let g = graph(&v, "graph")?;
            let cert: Option<EmbeddingCertificate> = field(&v, "certificate")?;
            match cert {
                None => verdict(false, "no embedding recorded".into()),
                Some(c) => match c.verify(&g) {
                    Ok(()) => verdict(true, format!("faces re-traced, chi {}, orientable {}", c.chi, c.orientable)),
                    Err(e) => verdict(false, e.to_string()),
                },
            }
        }
        "involutions" => {
            let m = matroid(&v)?;
            let set = v.get("set").ok_or_else(|| anyhow!("certificate lacks \"set\""))?;
            let bits: Vec<String> = field(set, "vs")?;
            let vs = bits.iter().map(|b| mask(b, RANK)).collect::<Result<Vec<u64>>>()?;
            let cols = m.column_masks();
            let counts: Vec<usize> =
                cols.iter().map(|&c| vs.iter().filter(|&&x| (x & c).count_ones() % 2 == 0).count()).collect();
            let mut distinct = vs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let mut ok =
                vs.len() == RANK && distinct.len() == RANK && !vs.contains(&0) && counts.iter().all(|&k| k >= 4);
            ok &= field::<Vec<usize>>(set, "counts")? == counts;
            let mut msg = format!("smallest kernel count {}", counts.iter().min().copied().unwrap_or(RANK));
            if let Some(check) = v.get("check") {
                let mult: Vec<Rat> = field(check, "mult")?;
                let s = InvolutionSet { vs, counts, method: Method::Search };
                let r = verify_involutions(&m, &mult, &s)?;
                ok &= r.ok;
                msg.push_str(&format!(", codimension sum {} against {}", r.total_codim, r.bound));
            }
            verdict(ok, msg)
        }
        "reduction" => {
            let g = graph(&v, "graph")?;
            let h = graph(&v, "cubic")?;
            let ok = h.is_cubic() && h.is_connected() && is_three_edge_connected(&h) && h.betti() == g.betti();
            verdict(ok, format!("cubic on {} vertices with Betti number {}", h.n(), h.betti()))
        }
        other => Err(UsageError(format!("no check for certificates of kind {other:?}")).into()),
    }
}
