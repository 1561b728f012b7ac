//! Instances shared by the property, involution and acceptance suites.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regma::cubicgen::{generate_cubic, CubicFilter};
use regma::exact::{r10_matrix, rat, Rat};
use regma::graph::{catalog, MultiGraph};
use regma::matroid::{cographic, graphic, r10, sum1, sum2, sum3, BinaryMatroid, WeightedRep};
use regma::surface::RotationSystem;

/// Connected multigraph with `n <= 7`, at most `max_m` edges and Betti number
/// between 1 and `max_betti`. Loops and parallel edges are allowed.
pub fn random_multigraph<R: Rng>(rng: &mut R, max_m: usize, max_betti: usize) -> MultiGraph {
    loop {
        let n = rng.gen_range(1..=7);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let extra = rng.gen_range(1..=max_betti.min(max_m + 1 - n.max(1)));
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = if rng.gen_bool(0.1) { u } else { rng.gen_range(0..n) };
            edges.push((u, v));
        }
        let g = MultiGraph::from_edges(n, &edges);
        if g.m() <= max_m && (1..=max_betti).contains(&g.betti()) {
            return g;
        }
    }
}

/// Positive rationals with small numerators and denominators.
pub fn random_weights<R: Rng>(rng: &mut R, m: usize) -> Vec<Rat> {
    (0..m).map(|_| rat(rng.gen_range(1..12), rng.gen_range(1..6))).collect()
}

/// A random connected subgraph of a grid (with some diagonals) together
/// with the rotation system read off from the drawing in the plane.
pub fn random_plane_graph<R: Rng>(rng: &mut R) -> (MultiGraph, RotationSystem) {
    loop {
        let (rows, cols) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols && rng.gen_bool(0.8) {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows && rng.gen_bool(0.8) {
                    edges.push((id(r, c), id(r + 1, c)));
                }
                if r + 1 < rows && c + 1 < cols && rng.gen_bool(0.3) {
                    edges.push((id(r, c), id(r + 1, c + 1)));
                }
            }
        }
        let g = MultiGraph::from_edges(rows * cols, &edges);
        // Drop isolated vertices by relabelling the used ones.
        let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        used.sort_unstable();
        used.dedup();
        let index = |v: usize| used.binary_search(&v).unwrap();
        let g2 = MultiGraph::from_edges(
            used.len(),
            &g.edges().iter().map(|&(u, v)| (index(u), index(v))).collect::<Vec<_>>(),
        );
        if !g2.is_connected() || g2.betti() == 0 {
            continue;
        }
        let pos = |v: usize| {
            let w = used[v];
            ((w % cols) as f64, (w / cols) as f64)
        };
        let mut rotations = vec![Vec::new(); g2.n()];
        for (e, &(u, v)) in g2.edges().iter().enumerate() {
            rotations[u].push(2 * e);
            rotations[v].push(2 * e + 1);
        }
        for (v, rot) in rotations.iter_mut().enumerate() {
            let (x, y) = pos(v);
            let angle = |end: usize| {
                let (a, b) = g2.edge(end / 2);
                let other = if end % 2 == 0 { b } else { a };
                let (ox, oy) = pos(other);
                (oy - y).atan2(ox - x)
            };
            rot.sort_by(|&p, &q| angle(p).total_cmp(&angle(q)));
        }
        let signs = vec![1; g2.m()];
        return (g2, RotationSystem { rotations, signs });
    }
}

/// Random graphic lift on 4 to 6 vertices with the directed triangle
/// 0 -> 1 -> 2 -> 0 on its first three edges, so the three weights sum to zero.
/// The next three edges join the triangle to vertex 3, so no edge among the
/// first six is a bridge and the graph minus the triangle stays connected.
pub fn triangle_piece<R: Rng>(rng: &mut R) -> WeightedRep {
    let n = rng.gen_range(4..=6);
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    for v in 4..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for _ in 0..rng.gen_range(1..=4) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    let g = MultiGraph::from_edges(n, &edges);
    let mult = random_weights(rng, g.m());
    WeightedRep::from_matroid(&graphic(&g, 0).unwrap(), mult).unwrap()
}

pub fn r10_piece<R: Rng>(rng: &mut R) -> WeightedRep {
    WeightedRep::new(r10_matrix(), random_weights(rng, 10)).unwrap()
}

/// Random spanning trees on seven vertices plus random further edges of K7.
fn random_seven_vertex_graphs(count: usize, rng: &mut ChaCha8Rng) -> Vec<MultiGraph> {
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for v in 1..7 {
                edges.push((rng.gen_range(0..v), v));
            }
            for u in 0..7 {
                for v in u + 1..7 {
                    if !edges.contains(&(u, v)) && rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            MultiGraph::from_edges(7, &edges)
        })
        .collect()
}

fn edge_index(g: &MultiGraph, u: usize, v: usize) -> usize {
    g.edges().iter().position(|&e| e == (u, v) || e == (v, u)).expect("edge present")
}

pub fn corpus() -> Vec<(String, BinaryMatroid)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    let cycle: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    let wheel: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).chain((0..6).map(|i| (i, 6))).collect();
    let k34: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..7).map(move |v| (u, v))).collect();
    let named = [
        ("k7", catalog("k(7)").unwrap()),
        ("c7", MultiGraph::from_edges(7, &cycle)),
        ("w6", MultiGraph::from_edges(7, &wheel)),
        ("k34", MultiGraph::from_edges(7, &k34)),
    ];
    for (name, g) in named {
        out.push((format!("graphic({name})"), graphic(&g, 0).unwrap()));
    }
    for (i, g) in random_seven_vertex_graphs(8, &mut rng).into_iter().enumerate() {
        out.push((format!("graphic(random {i})"), graphic(&g, 0).unwrap()));
    }
    for name in ["petersen", "g1"] {
        out.push((format!("cographic({name})"), cographic(&catalog(name).unwrap()).unwrap()));
    }
    for (i, g) in generate_cubic(10, CubicFilter::default()).unwrap().take(10).enumerate() {
        out.push((format!("cographic(cubic10 #{i})"), cographic(&g).unwrap()));
    }
    let k4 = catalog("k4").unwrap();
    let k5 = catalog("k(5)").unwrap();
    let (gk4, gk5) = (graphic(&k4, 0).unwrap(), graphic(&k5, 0).unwrap());
    let ck33 = cographic(&catalog("k33").unwrap()).unwrap();
    let triangle = |g: &MultiGraph| [edge_index(g, 0, 1), edge_index(g, 1, 2), edge_index(g, 0, 2)];
    out.push(("k4 (+)1 k4".into(), sum1(&gk4, &gk4).unwrap()));
    out.push(("k4 (+)1 cographic(k4)".into(), sum1(&gk4, &cographic(&k4).unwrap()).unwrap()));
    out.push(("k5 (+)2 k4".into(), sum2(&gk5, 0, &gk4, 3).unwrap()));
    out.push(("cographic(k33) (+)2 k4".into(), sum2(&ck33, 2, &gk4, 0).unwrap()));
    out.push(("r10 (+)2 k3".into(), sum2(&r10(), 0, &graphic(&catalog("k(3)").unwrap(), 0).unwrap(), 0).unwrap()));
    out.push(("k5 (+)3 k5".into(), sum3(&gk5, triangle(&k5), &gk5, triangle(&k5), [0, 1, 2]).unwrap()));
    out.push(("k5 (+)3 k5 twisted".into(), sum3(&gk5, triangle(&k5), &gk5, triangle(&k5), [1, 2, 0]).unwrap()));
    out.push(("r10 padded".into(), r10()));
    out
}

/// All automorphisms of a small connected graph, by extending a vertex map
/// along a BFS order.
pub fn automorphisms(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let adj: Vec<HashSet<usize>> = g.adjacency().iter().map(|a| a.iter().map(|&(_, w)| w).collect()).collect();
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let mut next: Vec<usize> = adj[order[i]].iter().copied().filter(|&w| !seen[w]).collect();
        next.sort_unstable();
        for w in next {
            seen[w] = true;
            order.push(w);
        }
        i += 1;
    }
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; n];
    fn extend(k: usize, order: &[usize], adj: &[HashSet<usize>], f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == order.len() {
            out.push(f.clone());
            return;
        }
        let v = order[k];
        for t in 0..adj.len() {
            if f.contains(&t) || adj[t].len() != adj[v].len() {
                continue;
            }
            let ok = order[..k].iter().all(|&u| adj[v].contains(&u) == adj[t].contains(&f[u]));
            if ok {
                f[v] = t;
                extend(k + 1, order, adj, f, out);
                f[v] = usize::MAX;
            }
        }
    }
    extend(0, &order, &adj, &mut f, &mut out);
    out
}
