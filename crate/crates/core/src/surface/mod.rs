//! Combinatorial surface embeddings. An embedding is a rotation system: a
//! cyclic order of edge-ends at every vertex plus a sign per edge, where a
//! negative sign flips the local orientation when crossing the edge.
//!
//! Edge `e = (u, v)` has the ends `2e` (at `u`) and `2e + 1` (at `v`).

mod search;

use serde::{Deserialize, Serialize};

pub use search::{embeds_in, embeds_where, embeds_with_face, max_euler_embedding, search_space, MAX_EMBED_SEARCH};

use crate::error::{Error, Result};
use crate::graph::{Cycle, MultiGraph};

pub fn end_vertex(g: &MultiGraph, end: usize) -> usize {
    let (u, v) = g.edge(end / 2);
    if end.is_multiple_of(2) {
        u
    } else {
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
}

impl RotationSystem {
    /// Ends in increasing order at each vertex, all signs positive.
    pub fn identity(g: &MultiGraph) -> RotationSystem {
        let mut rotations = vec![Vec::new(); g.n()];
        for end in 0..2 * g.m() {
            rotations[end_vertex(g, end)].push(end);
        }
        RotationSystem { rotations, signs: vec![1; g.m()] }
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        if self.rotations.len() != g.n() || self.signs.len() != g.m() {
            return Err(Error::Dimension(format!(
                "rotation system for {} vertices and {} edges, graph has {} and {}",
                self.rotations.len(),
                self.signs.len(),
                g.n(),
                g.m()
            )));
        }
        let mut seen = vec![false; 2 * g.m()];
        for (v, rot) in self.rotations.iter().enumerate() {
            for &end in rot {
                if end >= seen.len() || seen[end] || end_vertex(g, end) != v {
                    return Err(Error::Precondition(format!("edge-end {end} misplaced at vertex {v}")));
                }
                seen[end] = true;
            }
        }
        if let Some(end) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!("edge-end {end} missing from the rotation")));
        }
        if self.signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("signs must be +1 or -1".into()));
        }
        Ok(())
    }

    /// Whether some choice of local orientations at the vertices makes every
    /// sign positive.
    pub fn is_orientable(&self, g: &MultiGraph) -> bool {
        let mut side = vec![0i8; g.n()];
        let adj = g.adjacency();
        for s in 0..g.n() {
            if side[s] != 0 {
                continue;
            }
            side[s] = 1;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(e, y) in &adj[x] {
                    let want = side[x] * self.signs[e];
                    if side[y] == 0 {
                        side[y] = want;
                        stack.push(y);
                    } else if side[y] != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Successor and predecessor of every edge-end in its vertex rotation.
pub(crate) fn neighbours(rot: &RotationSystem, m: usize) -> (Vec<usize>, Vec<usize>) {
    let mut succ = vec![0; 2 * m];
    let mut pred = vec![0; 2 * m];
    for r in &rot.rotations {
        for (i, &end) in r.iter().enumerate() {
            let next = r[(i + 1) % r.len()];
            succ[end] = next;
            pred[next] = end;
        }
    }
    (succ, pred)
}

/// Traces face boundaries. Each face is the list of edge-ends through which
/// the walk leaves a vertex. Every face is recorded in one direction only.
pub(crate) fn trace_raw(
    succ: &[usize],
    pred: &[usize],
    signs: &[i8],
    seen: &mut [bool],
    mut out: Option<&mut Vec<Vec<usize>>>,
) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    // Flag index: 2 * end + (0 for positive orientation, 1 for negative).
    let flag = |end: usize, o: i8| 2 * end + usize::from(o < 0);
    let mut faces = 0;
    for start in 0..succ.len() {
        for o0 in [1i8, -1] {
            if seen[flag(start, o0)] {
                continue;
            }
            faces += 1;
            let mut face = Vec::new();
            let (mut end, mut o) = (start, o0);
            loop {
                let s = signs[end / 2];
                seen[flag(end, o)] = true;
                seen[flag(end ^ 1, -o * s)] = true;
                if out.is_some() {
                    face.push(end);
                }
                let arrive = end ^ 1;
                o *= s;
                end = if o > 0 { succ[arrive] } else { pred[arrive] };
                if (end, o) == (start, o0) {
                    break;
                }
            }
            if let Some(out) = out.as_deref_mut() {
                out.push(face);
            }
        }
    }
    faces
}

/// Boundary walks of the 2-cell embedding determined by `rot`.
pub fn trace_faces(g: &MultiGraph, rot: &RotationSystem) -> Result<Vec<Vec<usize>>> {
    rot.validate(g)?;
    let (succ, pred) = neighbours(rot, g.m());
    let mut seen = vec![false; 4 * g.m()];
    let mut faces = Vec::new();
    trace_raw(&succ, &pred, &rot.signs, &mut seen, Some(&mut faces));
    Ok(faces)
}

/// Edges along a face walk, in order.
pub fn face_edges(face: &[usize]) -> Vec<usize> {
    face.iter().map(|end| end / 2).collect()
}

/// Whether the face walk runs once around the cycle `c`.
pub fn face_is_cycle(face: &[usize], c: &Cycle) -> bool {
    let mut edges = face_edges(face);
    edges.sort_unstable();
    edges == c.edges()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCertificate {
    pub chi: i64,
    pub orientable: bool,
    pub rotations: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
    pub faces: Vec<Vec<usize>>,
}

impl EmbeddingCertificate {
    pub fn from_rotation(g: &MultiGraph, rot: RotationSystem) -> Result<EmbeddingCertificate> {
        let faces = trace_faces(g, &rot)?;
        let orientable = rot.is_orientable(g);
        let chi = g.n() as i64 - g.m() as i64 + faces.len() as i64;
        Ok(EmbeddingCertificate { chi, orientable, rotations: rot.rotations, signs: rot.signs, faces })
    }

    pub fn rotation(&self) -> RotationSystem {
        RotationSystem { rotations: self.rotations.clone(), signs: self.signs.clone() }
    }

    /// Re-traces the faces and checks every recorded field.
    pub fn verify(&self, g: &MultiGraph) -> Result<()> {
        if !g.is_connected() {
            return Err(Error::Precondition("embedded graph must be connected".into()));
        }
        let rot = self.rotation();
        let faces = trace_faces(g, &rot)?;
        if faces != self.faces {
            return Err(Error::Precondition("recorded faces differ from the traced faces".into()));
        }
        let mut sides = vec![0usize; g.m()];
        for face in &faces {
            for e in face_edges(face) {
                sides[e] += 1;
            }
        }
        if let Some(e) = sides.iter().position(|&k| k != 2) {
            return Err(Error::Precondition(format!("edge {e} is traversed {} times by the faces", sides[e])));
        }
        let chi = g.n() as i64 - g.m() as i64 + faces.len() as i64;
        if chi != self.chi {
            return Err(Error::Precondition(format!("recorded chi {} but n - m + f = {chi}", self.chi)));
        }
        if rot.is_orientable(g) != self.orientable {
            return Err(Error::Precondition("recorded orientability is wrong".into()));
        }
        Ok(())
    }

    /// Index of a face running once around `c`.
    pub fn face_of(&self, c: &Cycle) -> Option<usize> {
        self.faces.iter().position(|f| face_is_cycle(f, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn theta_and_k4_planar_rotations() {
        let theta = catalog("theta").unwrap();
        // Ends at vertex 0 are 0, 2, 4 and at vertex 1 are 1, 3, 5. Reversing
        // the order at one vertex gives the planar embedding.
        let rot = RotationSystem { rotations: vec![vec![0, 2, 4], vec![5, 3, 1]], signs: vec![1; 3] };
        let cert = EmbeddingCertificate::from_rotation(&theta, rot).unwrap();
        assert_eq!((cert.faces.len(), cert.chi), (3, 2));
        cert.verify(&theta).unwrap();
        let torus = EmbeddingCertificate::from_rotation(&theta, RotationSystem::identity(&theta)).unwrap();
        assert_eq!(torus.chi, 0);
    }

    #[test]
    fn negative_loop_is_a_crosscap() {
        let g = catalog("bouquet(1)").unwrap();
        let plain = EmbeddingCertificate::from_rotation(&g, RotationSystem::identity(&g)).unwrap();
        assert_eq!((plain.chi, plain.orientable), (2, true));
        let rot = RotationSystem { signs: vec![-1], ..RotationSystem::identity(&g) };
        let twisted = EmbeddingCertificate::from_rotation(&g, rot).unwrap();
        assert_eq!((twisted.chi, twisted.orientable), (1, false));
        twisted.verify(&g).unwrap();
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = catalog("k4").unwrap();
        let mut cert = embeds_in(&g, 2, true).unwrap().unwrap();
        assert_eq!(cert.faces.len(), 4);
        cert.chi = 1;
        assert!(cert.verify(&g).is_err());
        let bad = RotationSystem { rotations: vec![vec![0, 1], vec![], vec![], vec![]], signs: vec![1; 6] };
        assert!(trace_faces(&g, &bad).is_err());
    }
}
