//! Exhaustive rotation-system search. Signs on a spanning tree are fixed to
//! +1, which loses nothing: flipping the local orientation at a vertex
//! negates the signs of its edges without changing the embedding.

use super::{end_vertex, face_is_cycle, neighbours, trace_raw, EmbeddingCertificate, RotationSystem};
use crate::error::{check_guard, Error, Result};
use crate::graph::{Cycle, MultiGraph};

/// Largest number of (rotation, sign) configurations searched without an override.
pub const MAX_EMBED_SEARCH: f64 = 1e9;

/// `prod (deg v - 1)!`, times `2^betti` for nonorientable searches.
pub fn search_space(g: &MultiGraph, orientable: bool) -> f64 {
    let rotations: f64 = g.degrees().iter().map(|&d| (1..d.max(1)).map(|k| k as f64).product::<f64>()).product();
    if orientable {
        rotations
    } else {
        rotations * 2f64.powi(g.betti() as i32)
    }
}

/// Cyclic orders of `ends` with the first entry fixed, lexicographically.
fn cyclic_orders(ends: &[usize]) -> Vec<Vec<usize>> {
    let Some((&first, rest)) = ends.split_first() else { return vec![Vec::new()] };
    let mut rest = rest.to_vec();
    rest.sort_unstable();
    let mut out = Vec::new();
    loop {
        let mut r = vec![first];
        r.extend_from_slice(&rest);
        out.push(r);
        if !next_permutation(&mut rest) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Edges outside a BFS spanning tree, including loops.
fn cotree_edges(g: &MultiGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut in_tree = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::new();
    if g.n() > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(x) = queue.pop_front() {
        for &(e, y) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                in_tree[e] = true;
                queue.push_back(y);
            }
        }
    }
    (0..g.m()).filter(|&e| !in_tree[e]).collect()
}

enum Goal<'a> {
    /// Stop at the first configuration with at least this many faces that
    /// the predicate accepts.
    AtLeast(usize, &'a dyn Fn(&EmbeddingCertificate) -> bool),
    /// Search everything and keep the most faces.
    Maximum,
}

fn search(g: &MultiGraph, orientable: bool, goal: Goal) -> Result<Option<EmbeddingCertificate>> {
    if !g.is_connected() {
        return Err(Error::Precondition("embedding search needs a connected graph".into()));
    }
    let space = search_space(g, orientable);
    check_guard(space <= MAX_EMBED_SEARCH, || {
        format!("embedding search space {space:.3e} exceeds {MAX_EMBED_SEARCH:.0e}")
    })?;
    let (n, m) = (g.n(), g.m());
    let mut ends_at = vec![Vec::new(); n];
    for end in 0..2 * m {
        ends_at[end_vertex(g, end)].push(end);
    }
    let orders: Vec<Vec<Vec<usize>>> = ends_at.iter().map(|e| cyclic_orders(e)).collect();
    let free = if orientable { Vec::new() } else { cotree_edges(g) };
    let mut seen = vec![false; 4 * m];
    let max_faces_possible = (2 + m).saturating_sub(n);
    let mut best: Option<(usize, RotationSystem)> = None;
    for mask in 0u64..1u64 << free.len() {
        let mut signs = vec![1i8; m];
        for (k, &e) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                signs[e] = -1;
            }
        }
        let mut idx = vec![0usize; n];
        let mut rot = RotationSystem { rotations: orders.iter().map(|o| o[0].clone()).collect(), signs };
        let (mut succ, mut pred) = neighbours(&rot, m);
        loop {
            let faces = trace_raw(&succ, &pred, &rot.signs, &mut seen, None);
            match goal {
                Goal::AtLeast(need, accept) if faces >= need => {
                    let cert = EmbeddingCertificate::from_rotation(g, rot.clone())?;
                    if accept(&cert) {
                        return Ok(Some(cert));
                    }
                }
                Goal::Maximum if best.as_ref().is_none_or(|(f, _)| faces > *f) => {
                    best = Some((faces, rot.clone()));
                    if faces >= max_faces_possible {
                        return EmbeddingCertificate::from_rotation(g, rot).map(Some);
                    }
                }
                _ => {}
            }
            // Odometer with the last vertex varying fastest.
            let Some(v) = (0..n).rev().find(|&v| idx[v] + 1 < orders[v].len()) else { break };
            idx[v] += 1;
            for w in v + 1..n {
                idx[w] = 0;
            }
            for w in v..n {
                let r = &orders[w][idx[w]];
                rot.rotations[w].clone_from(r);
                for (i, &end) in r.iter().enumerate() {
                    let next = r[(i + 1) % r.len()];
                    succ[end] = next;
                    pred[next] = end;
                }
            }
        }
    }
    best.map(|(_, rot)| EmbeddingCertificate::from_rotation(g, rot)).transpose()
}

fn faces_needed(g: &MultiGraph, chi: i64) -> usize {
    (chi - g.n() as i64 + g.m() as i64).max(0) as usize
}

/// An embedding with Euler characteristic at least `chi`, if one exists.
/// A nonorientable search also covers orientable embeddings.
pub fn embeds_in(g: &MultiGraph, chi: i64, orientable: bool) -> Result<Option<EmbeddingCertificate>> {
    search(g, orientable, Goal::AtLeast(faces_needed(g, chi), &|_| true))
}

/// The first embedding, in search order, with Euler characteristic at least
/// `chi` that `accept` approves.
pub fn embeds_where(
    g: &MultiGraph,
    chi: i64,
    orientable: bool,
    accept: &dyn Fn(&EmbeddingCertificate) -> bool,
) -> Result<Option<EmbeddingCertificate>> {
    search(g, orientable, Goal::AtLeast(faces_needed(g, chi), accept))
}

/// As `embeds_in`, but `c` must bound a face.
pub fn embeds_with_face(g: &MultiGraph, chi: i64, orientable: bool, c: &Cycle) -> Result<Option<EmbeddingCertificate>> {
    if c.edges().iter().any(|&e| e >= g.m()) {
        return Err(Error::Precondition("cycle does not belong to the graph".into()));
    }
    let pinned = |cert: &EmbeddingCertificate| cert.faces.iter().any(|f| face_is_cycle(f, c));
    search(g, orientable, Goal::AtLeast(faces_needed(g, chi), &pinned))
}

/// An embedding of largest Euler characteristic.
pub fn max_euler_embedding(g: &MultiGraph, orientable: bool) -> Result<EmbeddingCertificate> {
    search(g, orientable, Goal::Maximum)?.ok_or_else(|| Error::NotFound("no rotation system".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn orders_and_space() {
        assert_eq!(cyclic_orders(&[4, 2, 0]), vec![vec![4, 0, 2], vec![4, 2, 0]]);
        assert_eq!(cyclic_orders(&[7]).len(), 1);
        let k4 = catalog("k4").unwrap();
        assert_eq!(search_space(&k4, true), 16.0);
        assert_eq!(search_space(&k4, false), 128.0);
    }

    #[test]
    fn kuratowski_graphs() {
        let k33 = catalog("k33").unwrap();
        assert!(embeds_in(&k33, 2, true).unwrap().is_none());
        assert!(embeds_in(&k33, 2, false).unwrap().is_none());
        let cert = embeds_in(&k33, 1, false).unwrap().unwrap();
        cert.verify(&k33).unwrap();
        assert!(!cert.orientable);
        assert_eq!(cert.chi, 1);
        assert_eq!(max_euler_embedding(&k33, true).unwrap().chi, 0);
        assert_eq!(max_euler_embedding(&catalog("k(5)").unwrap(), false).unwrap().chi, 1);
    }

    #[test]
    fn pinned_triangle() {
        let k4 = catalog("k4").unwrap();
        let c = Cycle::from_vertices(&k4, &[0, 1, 2]).unwrap();
        let cert = embeds_with_face(&k4, 2, true, &c).unwrap().unwrap();
        assert!(cert.face_of(&c).is_some());
    }

    #[test]
    fn disconnected_rejected() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(embeds_in(&g, 2, true).is_err());
    }
}
