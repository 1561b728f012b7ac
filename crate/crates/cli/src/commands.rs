use std::fmt;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use regma::cubicgen::{generate_cubic, CubicFilter};
use regma::exact::parse_rat_list;
use regma::graph::{load_graph, parse_weights, reduce_to_cubic, write_graph, Cycle};
use regma::involutions::{six_involutions, verify_involutions};
use regma::matroid::{build_matroid, write_matroid, WeightedRep};
use regma::optimize::{c_of_rep, cogirth, systole, systole_weighted, verify_tables, MAX_TABLE_RANK};
use regma::surface::{embeds_in, embeds_with_face, max_euler_embedding};

use crate::Command;

/// Bad arguments that clap cannot see, such as an out-of-range value.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Pretty JSON with sorted keys, to `out` or stdout.
pub fn emit(value: &Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn bitstring(v: u64, width: usize) -> String {
    (0..width).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Runs one subcommand; `Ok(false)` signals a computational failure.
pub fn run(command: Command) -> Result<bool> {
    let start = Instant::now();
    match command {
        Command::Systole { graph, weights, certificate } => {
            let g = load_graph(&graph)?;
            let value = match weights {
                Some(path) => {
                    let w = parse_weights(&read(&path)?, g.m())?;
                    let (x, c) = systole_weighted(&g, &w)?;
                    eprintln!("weighted systole of {graph}: {x}");
                    json!({
                        "command": "systole",
                        "kind": "systole_weighted",
                        "input": graph,
                        "graph": write_graph(&g),
                        "weights": w,
                        "value": x,
                        "cycle": c,
                    })
                }
                None => {
                    let s = systole(&g)?;
                    eprintln!("systole of {graph}: {} ({} ms)", s.value, start.elapsed().as_millis());
                    json!({
                        "command": "systole",
                        "kind": "systole",
                        "input": graph,
                        "graph": write_graph(&g),
                        "result": s,
                    })
                }
            };
            emit(&value, None)?;
            if let Some(p) = certificate {
                emit(&value, Some(&p))?;
            }
            Ok(true)
        }
        Command::Cogirth { matroid, certificate } => {
            let m = build_matroid(&matroid)?;
            let c = cogirth(&m)?;
            eprintln!("cogirth of {matroid}: {}", c.value);
            let value = json!({
                "command": "cogirth",
                "kind": "cogirth",
                "input": matroid,
                "matroid": write_matroid(&m),
                "value": c.value,
                "weights": c.weights,
                "witness": bitstring(c.witness, m.rank()),
            });
            emit(&value, None)?;
            if let Some(p) = certificate {
                emit(&value, Some(&p))?;
            }
            Ok(true)
        }
        Command::CRep { matroid, mult, certificate } => {
            let m = build_matroid(&matroid)?;
            let mult = parse_rat_list(&read(&mult)?)?;
            let r = WeightedRep::from_matroid(&m, mult)?;
            let (x, v) = c_of_rep(&r)?;
            eprintln!("c(H, mult) for {matroid}: {x}");
            let value = json!({
                "command": "c-rep",
                "kind": "c_rep",
                "input": matroid,
                "matroid": write_matroid(&m),
                "mult": r.mult(),
                "value": x,
                "witness": bitstring(v, r.rank()),
            });
            emit(&value, None)?;
            if let Some(p) = certificate {
                emit(&value, Some(&p))?;
            }
            Ok(true)
        }
        Command::VerifyTables { max_b, exhaustive, jobs, out } => {
            if max_b == 0 || max_b > MAX_TABLE_RANK {
                return Err(usage(format!("--max-b must lie in 1..={MAX_TABLE_RANK}")));
            }
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if j == 0 {
                    return Err(usage("--jobs must be positive"));
                }
                pool = pool.num_threads(j);
            }
            let report = pool.build()?.install(|| verify_tables(max_b, exhaustive))?;
            let ok = report.all_ok();
            for row in &report.rows {
                let what = match (row.b, row.d) {
                    (Some(b), _) => format!("s({b})"),
                    (_, Some(d)) => format!("c({d})"),
                    _ => String::new(),
                };
                let got = row.computed.as_ref().map_or("-".to_string(), ToString::to_string);
                eprintln!(
                    "{what:6} {:10} expected {:6} computed {:6} {:?}",
                    row.mode,
                    row.expected.to_string(),
                    got,
                    row.status
                );
            }
            let value = json!({
                "command": "verify-tables",
                "kind": "tables",
                "max_b": max_b,
                "exhaustive": exhaustive,
                "rows": report.rows,
                "monotone": report.monotone,
                "status": if ok { "ok" } else { "fail" },
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            emit(&value, out.as_deref())?;
            Ok(ok)
        }
        Command::GenCubic { n, min_girth, three_connected } => {
            if n % 2 == 1 {
                return Err(usage(format!("cubic graphs need an even vertex count, got {n}")));
            }
            let filter = CubicFilter { min_girth, three_edge_connected: three_connected };
            let mut out = std::io::stdout().lock();
            let mut count = 0usize;
            for g in generate_cubic(n, filter)? {
                if count > 0 {
                    writeln!(out)?;
                }
                out.write_all(write_graph(&g).as_bytes())?;
                count += 1;
            }
            eprintln!("{count} cubic graphs on {n} vertices");
            Ok(true)
        }
        Command::Involutions6 { matroid, mult, out } => {
            let m = build_matroid(&matroid)?;
            let s = six_involutions(&m)?;
            let mut value = json!({
                "command": "involutions6",
                "kind": "involutions",
                "input": matroid,
                "matroid": write_matroid(&m),
                "set": s,
            });
            let mut ok = true;
            if let Some(p) = mult {
                let mult = parse_rat_list(&read(&p)?)?;
                let c = verify_involutions(&m, &mult, &s)?;
                ok = c.ok;
                value["check"] = json!({ "mult": mult, "result": c });
            }
            eprintln!(
                "six functionals for {matroid} by {:?}, smallest kernel count {}",
                s.method,
                s.counts.iter().min().unwrap_or(&6)
            );
            emit(&value, out.as_deref())?;
            Ok(ok)
        }
        Command::Embed { graph, chi, nonorientable, face, max, out } => {
            let g = load_graph(&graph)?;
            let orientable = !nonorientable;
            let cert = if max {
                Some(max_euler_embedding(&g, orientable)?)
            } else {
                let chi = chi.ok_or_else(|| usage("give --chi or --max"))?;
                match face {
                    Some(f) => {
                        let vs: Vec<usize> = f
                            .split(',')
                            .map(|t| t.trim().parse().map_err(|_| usage(format!("bad vertex {t:?} in --face"))))
                            .collect::<Result<_>>()?;
                        let c = Cycle::from_vertices(&g, &vs)?;
                        embeds_with_face(&g, chi, orientable, &c)?
                    }
                    None => embeds_in(&g, chi, orientable)?,
                }
            };
            let found = cert.is_some();
            match &cert {
                Some(c) => eprintln!(
                    "{graph}: embedding with chi {} ({}), {} faces",
                    c.chi,
                    if c.orientable { "orientable" } else { "nonorientable" },
                    c.faces.len()
                ),
                None => eprintln!("{graph}: no embedding found"),
            }
            let value = json!({
                "command": "embed",
                "kind": "embedding",
                "input": graph,
                "graph": write_graph(&g),
                "found": found,
                "certificate": cert,
            });
            emit(&value, out.as_deref())?;
            Ok(found)
        }
        Command::MatroidBuild { expr, out } => {
            let m = build_matroid(&expr)?;
            eprintln!(
                "{expr}: rank {}, {} elements, lift {}",
                m.rank(),
                m.len(),
                if m.lift().is_some() { "present" } else { "absent" }
            );
            write_text(&write_matroid(&m), out.as_deref())?;
            Ok(true)
        }
        Command::Reduce { graph, out } => {
            let g = load_graph(&graph)?;
            let (h, steps) = reduce_to_cubic(&g)?;
            eprintln!("{graph}: {} steps to a cubic graph on {} vertices", steps.len(), h.n());
            let steps: Vec<Value> =
                steps.iter().map(|(s, after)| json!({ "step": s, "graph": write_graph(after) })).collect();
            let value = json!({
                "command": "reduce",
                "kind": "reduction",
                "input": graph,
                "graph": write_graph(&g),
                "steps": steps,
                "cubic": write_graph(&h),
            });
            emit(&value, out.as_deref())?;
            Ok(true)
        }
    }
}
