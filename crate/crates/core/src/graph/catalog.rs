//! Named graphs. Every entry checks its documented invariants when built.

use super::cycles::{enumerate_cycles, girth, is_three_edge_connected, Cycle};
use super::MultiGraph;
use crate::error::{Error, Result};

pub fn catalog_names() -> &'static [&'static str] {
    &[
        "theta",
        "k(n)",
        "k33",
        "moebius_ladder(r)",
        "g53",
        "g54",
        "petersen",
        "heawood",
        "g1",
        "f11",
        "f12",
        "f13",
        "f14",
        "moebius_kantor",
        "bouquet(b)",
    ]
}

struct Expect {
    n: usize,
    m: usize,
    betti: usize,
    cubic: bool,
    girth: Option<usize>,
}

fn check(name: &str, g: MultiGraph, e: Expect) -> Result<MultiGraph> {
    let got = (g.n(), g.m(), g.betti(), g.is_cubic(), girth(&g));
    let want = (e.n, e.m, e.betti, e.cubic, e.girth);
    if got != want {
        return Err(Error::Precondition(format!(
            "catalog graph {name} failed self-check: (n, m, betti, cubic, girth) = {got:?}, expected {want:?}"
        )));
    }
    Ok(g)
}

fn parse_arg(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    rest.parse().ok()
}

pub fn catalog(name: &str) -> Result<MultiGraph> {
    let key = name.trim().to_ascii_lowercase();
    let key = key.strip_prefix("builtin:").unwrap_or(&key).to_string();
    match key.as_str() {
        "theta" => check(&key, theta(), Expect { n: 2, m: 3, betti: 2, cubic: true, girth: Some(2) }),
        "k33" | "k3,3" | "k_{3,3}" => check(&key, k33(), Expect { n: 6, m: 9, betti: 4, cubic: true, girth: Some(4) }),
        "g53" => check(&key, g53(), Expect { n: 8, m: 12, betti: 5, cubic: true, girth: Some(3) }),
        "g54" => catalog("moebius_ladder(4)"),
        "petersen" => check(&key, petersen(), Expect { n: 10, m: 15, betti: 6, cubic: true, girth: Some(5) }),
        "heawood" => check(&key, heawood(), Expect { n: 14, m: 21, betti: 8, cubic: true, girth: Some(6) }),
        "moebius_kantor" => {
            check(&key, moebius_kantor(), Expect { n: 16, m: 24, betti: 9, cubic: true, girth: Some(6) })
        }
        "g1" => {
            let g = check(&key, g1(), Expect { n: 10, m: 15, betti: 6, cubic: true, girth: Some(4) })?;
            require(&key, is_three_edge_connected(&g), "3-edge-connected")?;
            Ok(g)
        }
        "f11" => {
            let g = check(&key, f11(), Expect { n: 12, m: 18, betti: 7, cubic: true, girth: Some(4) })?;
            require(&key, !is_three_edge_connected(&g), "a 2-edge cut")?;
            Ok(g)
        }
        "f12" => f12_variant(0),
        "f13" => {
            let g = check(&key, f13(), Expect { n: 12, m: 18, betti: 7, cubic: true, girth: Some(5) })?;
            let on5 = five_cycle_counts(&g)?;
            require(
                &key,
                (0..9).all(|v| on5[v] == 4) && (9..12).all(|v| on5[v] != 4),
                "9-cycle of vertices on four 5-cycles",
            )?;
            Ok(g)
        }
        "f14" => {
            let g = check(&key, f14(), Expect { n: 12, m: 18, betti: 7, cubic: true, girth: Some(5) })?;
            let on5 = five_cycle_counts(&g)?;
            require(
                &key,
                (0..8).all(|v| on5[v] == 3) && (8..12).all(|v| on5[v] == 4),
                "8-cycle of vertices on three 5-cycles",
            )?;
            Ok(g)
        }
        _ => {
            if let Some(n) = parse_arg(&key, "k") {
                if n == 0 {
                    return Err(Error::UnknownName(name.into()));
                }
                let g = complete(n);
                let b = n * (n - 1) / 2 + 1 - n;
                let gi = match n {
                    0..=2 => None,
                    _ => Some(3),
                };
                return check(&key, g, Expect { n, m: n * (n - 1) / 2, betti: b, cubic: n == 4, girth: gi });
            }
            if let Some(r) = parse_arg(&key, "moebius_ladder") {
                if r < 2 {
                    return Err(Error::UnknownName(name.into()));
                }
                let gi = if r == 2 { Some(3) } else { Some(4) };
                return check(
                    &key,
                    moebius_ladder(r),
                    Expect { n: 2 * r, m: 3 * r, betti: r + 1, cubic: true, girth: gi },
                );
            }
            if let Some(b) = parse_arg(&key, "bouquet") {
                let g = MultiGraph::from_edges(1, &vec![(0, 0); b]);
                return check(&key, g, Expect { n: 1, m: b, betti: b, cubic: false, girth: (b > 0).then_some(1) });
            }
            Err(Error::UnknownName(name.into()))
        }
    }
}

fn require(name: &str, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("catalog graph {name} failed self-check: {what}")))
    }
}

fn five_cycle_counts(g: &MultiGraph) -> Result<Vec<usize>> {
    let mut on = vec![0; g.n()];
    for c in enumerate_cycles(g)?.iter().filter(|c| c.len() == 5) {
        for v in c.vertices(g) {
            on[v] += 1;
        }
    }
    Ok(on)
}

fn theta() -> MultiGraph {
    MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])
}

fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    MultiGraph::from_edges(n, &edges)
}

fn k33() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            edges.push((i, j));
        }
    }
    MultiGraph::from_edges(6, &edges)
}

/// Cycle 0..2r plus the r long diagonals.
fn moebius_ladder(r: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..2 * r).map(|i| (i, (i + 1) % (2 * r))).collect();
    edges.extend((0..r).map(|i| (i, i + r)));
    MultiGraph::from_edges(2 * r, &edges)
}

/// K_{2,3} on {0,1} x {2,3,4} and the triangle 5,6,7, matched 2-5, 3-6, 4-7.
fn g53() -> MultiGraph {
    MultiGraph::from_edges(
        8,
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (5, 6), (6, 7), (7, 5), (2, 5), (3, 6), (4, 7)],
    )
}

fn petersen() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    MultiGraph::from_edges(10, &edges)
}

/// LCF notation [5,-5]^7.
fn heawood() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    MultiGraph::from_edges(14, &edges)
}

/// Generalized Petersen graph GP(8,3).
fn moebius_kantor() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..8).map(|i| (i, i + 8)));
    edges.extend((0..8).map(|i| (8 + i, 8 + (i + 3) % 8)));
    MultiGraph::from_edges(16, &edges)
}

/// Two copies of K_{2,3}; their degree-two vertices are matched by f1, f2, f3
/// (the last three edges).
fn g1() -> MultiGraph {
    let mut edges = Vec::new();
    for off in [0, 5] {
        for a in 0..2 {
            for b in 2..5 {
                edges.push((off + a, off + b));
            }
        }
    }
    edges.extend([(2, 7), (3, 8), (4, 9)]);
    MultiGraph::from_edges(10, &edges)
}

/// Two copies of K_{3,3} minus an edge; the degree-two vertices are joined
/// by the last two edges, which form the only 2-edge cut.
fn f11() -> MultiGraph {
    let mut edges = Vec::new();
    for off in [0, 6] {
        for a in 0..3 {
            for b in 3..6 {
                if (a, b) != (0, 3) {
                    edges.push((off + a, off + b));
                }
            }
        }
    }
    edges.extend([(0, 6), (3, 9)]);
    MultiGraph::from_edges(12, &edges)
}

/// Two 4-cycles joined through two hub edges. Vertices 0..9 carry the
/// labels 1..9, then X, a, b. The 4-cycles are 1-2-3-4 and 7-8-a-b, the hub
/// edges 5-6 and 9-X, with spokes 5~{2,b} 6~{4,8} 9~{3,7} X~{1,a}.
/// Variant 1 swaps the spokes at a and b (5~a, X~b); it is kept only to show
/// that it fails the checks.
pub fn f12_variant(variant: usize) -> Result<MultiGraph> {
    let (five, x) = match variant {
        0 => (11, 10),
        1 => (10, 11),
        _ => return Err(Error::UnknownName(format!("f12 variant {variant}"))),
    };
    let g = MultiGraph::from_edges(
        12,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (6, 7),
            (7, 10),
            (10, 11),
            (11, 6),
            (4, 5),
            (8, 9),
            (4, 1),
            (4, five),
            (5, 3),
            (5, 7),
            (8, 2),
            (8, 6),
            (9, 0),
            (9, x),
        ],
    );
    let g = check("f12", g, Expect { n: 12, m: 18, betti: 7, cubic: true, girth: Some(4) })?;
    require("f12", is_three_edge_connected(&g), "3-edge-connected")?;
    Ok(g)
}

/// The 9-cycle 1..9 is 0..8; tripod vertices A, B, C are 9, 10, 11 with
/// A~{1,4,7}, B~{2,5,8}, C~{3,6,9}.
fn f13() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
    for (t, hub) in [9, 10, 11].into_iter().enumerate() {
        edges.extend((0..3).map(|k| (hub, t + 3 * k)));
    }
    MultiGraph::from_edges(12, &edges)
}

/// The 8-cycle 1..8 is 0..7; A1, A2, B1, B2 are 8..11 with A1~{1,5},
/// A2~{3,7}, B1~{2,6}, B2~{4,8}; h = A1A2 and h' = B1B2 are the last two edges.
fn f14() -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend([(8, 0), (8, 4), (9, 2), (9, 6), (10, 1), (10, 5), (11, 3), (11, 7), (8, 9), (10, 11)]);
    MultiGraph::from_edges(12, &edges)
}

/// Named cycles of catalog graphs, given by vertex sequences. For f13 and
/// f14, `c` is the long cycle of the construction and the other names are
/// cycles that bound a face in some embedding of Euler characteristic 0:
/// only in nonorientable ones for f13 `c8`, `c8p`, `c10` and f14 `c9`, `c7`;
/// in orientable ones for f13 `c9t` and f14 `c8`, `c10`.
pub fn catalog_cycle(graph: &str, name: &str) -> Result<Cycle> {
    let vs: &[usize] = match (graph, name) {
        ("f13", "c") => &[0, 1, 2, 3, 4, 5, 6, 7, 8],
        ("f13", "c8") => &[0, 1, 2, 3, 4, 5, 11, 8],
        ("f13", "c8p") => &[0, 1, 10, 4, 3, 2, 11, 8],
        ("f13", "c10") => &[0, 1, 10, 4, 3, 9, 6, 5, 11, 8],
        ("f13", "c9t") => &[0, 1, 2, 3, 9, 6, 5, 11, 8],
        ("f14", "c") => &[0, 1, 2, 3, 4, 5, 6, 7],
        ("f14", "c8") => &[0, 1, 10, 11, 3, 2, 9, 8],
        ("f14", "c9") => &[0, 1, 2, 9, 8, 4, 3, 11, 7],
        ("f14", "c10") => &[0, 1, 2, 9, 6, 5, 4, 3, 11, 7],
        ("f14", "c7") => &[0, 1, 10, 5, 6, 9, 8],
        ("heawood", "hexagon") => &[0, 1, 2, 3, 4, 5],
        _ => return Err(Error::UnknownName(format!("{graph}:{name}"))),
    };
    Cycle::from_vertices(&catalog(graph)?, vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_builds() {
        for name in [
            "theta",
            "k4",
            "k(5)",
            "k33",
            "moebius_ladder(4)",
            "g53",
            "g54",
            "petersen",
            "heawood",
            "g1",
            "f11",
            "f12",
            "f13",
            "f14",
            "moebius_kantor",
            "bouquet(3)",
            "builtin:k10",
        ] {
            catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(catalog("nonesuch").is_err());
    }

    #[test]
    fn moebius_ladder_three_is_k33() {
        let ml = catalog("moebius_ladder(3)").unwrap();
        assert_eq!((ml.n(), ml.m(), girth(&ml)), (6, 9, Some(4)));
    }
}
