//! Six distinct nonzero functionals on F2^6 such that every element of a
//! rank 6 regular matroid lies in the kernel of at least four of them.
//!
//! A "family" for a matroid is a list of distinct nonzero functionals (bit
//! masks over the rows of its representation) with every element outside
//! the kernel of at most two. Families are built from the provenance of the
//! matroid and glued through k-sums; an exhaustive search backs them up.

use serde::{Serialize, Serializer};

use crate::error::{check_guard, Error, Result};
use crate::exact::Rat;
use crate::graph::{enumerate_cycles, Cycle, MultiGraph};
use crate::matroid::{BinaryMatroid, Provenance};
use crate::surface::{embeds_where, face_edges, EmbeddingCertificate};

pub const RANK: usize = 6;

fn odd(v: u64, c: u64) -> bool {
    (v & c).count_ones() % 2 == 1
}

/// Per element, how many functionals it is outside the kernel of.
fn misses(cols: &[u64], vs: &[u64]) -> Vec<usize> {
    cols.iter().map(|&c| vs.iter().filter(|&&v| odd(v, c)).count()).collect()
}

fn is_family(cols: &[u64], vs: &[u64]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == vs.len() && !vs.contains(&0) && misses(cols, vs).iter().all(|&k| k <= 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Graphic,
    Cographic,
    Sporadic,
    Sum,
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSet {
    /// Functionals on F2^6, bit `i` the coefficient of coordinate `i`. The
    /// representation's rows are the first coordinates; any further ones
    /// are free padding.
    #[serde(serialize_with = "bitstrings")]
    pub vs: Vec<u64>,
    /// Per element, the number of `vs` whose kernel contains it.
    pub counts: Vec<usize>,
    pub method: Method,
}

fn bitstrings<S: Serializer>(vs: &[u64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<String> =
        vs.iter().map(|&v| (0..RANK).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()).collect();
    strs.serialize(s)
}

impl InvolutionSet {
    fn new(m: &BinaryMatroid, vs: Vec<u64>, method: Method) -> InvolutionSet {
        let cols = m.column_masks();
        let counts = misses(&cols, &vs).iter().map(|k| vs.len() - k).collect();
        InvolutionSet { vs, counts, method }
    }
}

/// Vertex functionals: each edge misses exactly the kernels at its ends.
fn graphic_family(m: &BinaryMatroid, g: &MultiGraph) -> Option<Vec<u64>> {
    (0..g.n())
        .map(|v| {
            let target: Vec<bool> = g.edges().iter().map(|&(a, b)| a != b && (a == v || b == v)).collect();
            m.functional_for(&target)
        })
        .collect()
}

fn cycle_family(m: &BinaryMatroid, cycles: &[Cycle]) -> Option<Vec<u64>> {
    cycles
        .iter()
        .map(|c| {
            let target: Vec<bool> = (0..m.len()).map(|e| c.contains(e)).collect();
            m.functional_for(&target)
        })
        .collect()
}

/// The functionals `e_i + e_{i+1}` of the standard coordinates; each charges
/// `e_i, e_{i+1}, f_{i-1}, f_{i+2}`. Located by labels.
fn sporadic_family(m: &BinaryMatroid) -> Option<Vec<u64>> {
    let cols = crate::exact::r10_matrix().mod2().column_masks();
    let index: Vec<usize> = m
        .labels()
        .iter()
        .map(|l| {
            let (kind, i) = l.split_at(1);
            let i: usize = i.parse().ok()?;
            (1..=5).contains(&i).then_some(())?;
            match kind {
                "e" => Some(i - 1),
                "f" => Some(4 + i),
                _ => None,
            }
        })
        .collect::<Option<_>>()?;
    let try_with = |swap: bool| {
        (0..5)
            .map(|i| {
                let v = 1u64 << i | 1u64 << ((i + 1) % 5);
                let target: Vec<bool> =
                    index.iter().map(|&j| odd(v, cols[if swap { (j + 5) % 10 } else { j }])).collect();
                m.functional_for(&target)
            })
            .collect::<Option<Vec<u64>>>()
    };
    try_with(false).or_else(|| try_with(true))
}

/// Functional on the sum given by `f` on the left piece and `g` on the
/// right, if it descends to the quotient.
fn descend(m: &BinaryMatroid, c1: &[u64], c2: &[u64], gl: &[usize], gr: &[usize], f: u64, g: u64) -> Option<u64> {
    if gl.iter().zip(gr).any(|(&a, &b)| odd(f, c1[a]) != odd(g, c2[b])) {
        return None;
    }
    let target: Vec<bool> = (0..c1.len())
        .filter(|j| !gl.contains(j))
        .map(|j| odd(f, c1[j]))
        .chain((0..c2.len()).filter(|j| !gr.contains(j)).map(|j| odd(g, c2[j])))
        .collect();
    m.functional_for(&target)
}

/// Restriction of `f` to the glued triangle, as the pair of values on its
/// first two elements (the third is their sum).
fn restriction(f: u64, cols: &[u64], w: &[usize]) -> u8 {
    u8::from(odd(f, cols[w[0]])) | u8::from(odd(f, cols[w[1]])) << 1
}

/// The pairs `(f, g)` added to the zero-restricted functionals of a 3-sum.
fn three_sum_extras(f: &[u64], rf: &[u8], g: &[u64], rg: &[u8]) -> Option<Vec<(u64, u64)>> {
    let nz = |r: &[u8]| r.iter().filter(|&&x| x != 0).count();
    let (n1, n2) = (nz(rf), nz(rg));
    // Cases with all three restrictions nonzero on one side.
    let full = |f: &[u64], rf: &[u8], g: &[u64], rg: &[u8]| -> Option<Vec<(u64, u64)>> {
        let partner = |r: u8| (0..3).find(|&j| rg[j] == r);
        let mut distinct: Vec<u8> = rf.iter().copied().filter(|&x| x != 0).collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == nz(rf) {
            (0..3).map(|i| if rf[i] == 0 { Some((f[i], 0)) } else { partner(rf[i]).map(|j| (f[i], g[j])) }).collect()
        } else {
            let i3 = (0..3).find(|&i| rf[i] == 0)?;
            let (i1, i2) = match i3 {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let j1 = partner(rf[i1])?;
            let others: Vec<usize> = (0..3).filter(|&j| j != j1).collect();
            Some(vec![(f[i3], 0), (f[i2], g[others[0]] ^ g[others[1]]), (f[i1], g[j1])])
        }
    };
    let swap = |v: Vec<(u64, u64)>| v.into_iter().map(|(a, b)| (b, a)).collect::<Vec<_>>();
    if n2 == 3 {
        return full(f, rf, g, rg);
    }
    if n1 == 3 {
        return full(g, rg, f, rf).map(swap);
    }
    // At most two nonzero restrictions on either side: order zeros last.
    let order = |r: &[u8]| {
        let mut idx = vec![0usize, 1, 2];
        idx.sort_by_key(|&i| r[i] == 0);
        idx
    };
    let (of, og) = (order(rf), order(rg));
    let (f1, f2, f3) = (f[of[0]], f[of[1]], f[of[2]]);
    let (g1, g2, g3) = (g[og[0]], g[og[1]], g[og[2]]);
    let (r1, r2) = (rf[of[0]], rf[of[1]]);
    let (s1, s2) = (rg[og[0]], rg[og[1]]);
    let mut out = vec![(f3, 0), (0, g3)];
    if n1 <= 1 {
        out.push((f2, 0));
    } else if n2 <= 1 {
        out.push((0, g2));
    } else if r1 == r2 && s1 == s2 {
        out.push((f1 ^ f2, g1 ^ g2));
    } else if s1 != s2 {
        let g = [(g1, s1), (g2, s2), (g1 ^ g2, s1 ^ s2)].into_iter().find(|&(_, s)| s == r2)?.0;
        out.push((f2, g));
    } else {
        let f = [(f1, r1), (f2, r2), (f1 ^ f2, r1 ^ r2)].into_iter().find(|&(_, r)| r == s2)?.0;
        out.push((f, g2));
    }
    Some(out)
}

fn sum_family(
    m: &BinaryMatroid,
    k: usize,
    left: &BinaryMatroid,
    right: &BinaryMatroid,
    gl: &[usize],
    gr: &[usize],
) -> Option<Vec<u64>> {
    let f = family(left)?;
    let g = family(right)?;
    let (c1, c2) = (left.column_masks(), right.column_masks());
    let pairs: Vec<(u64, u64)> = match k {
        1 => f.iter().map(|&x| (x, 0)).chain(g.iter().map(|&y| (0, y))).collect(),
        2 => {
            let (a, b) = (c1[gl[0]], c2[gr[0]]);
            let (z1, o1): (Vec<u64>, Vec<u64>) = f.iter().partition(|&&x| !odd(x, a));
            let (z2, o2): (Vec<u64>, Vec<u64>) = g.iter().partition(|&&y| !odd(y, b));
            let mut p: Vec<(u64, u64)> = z1.iter().map(|&x| (x, 0)).chain(z2.iter().map(|&y| (0, y))).collect();
            p.extend(o1.iter().zip(&o2).map(|(&x, &y)| (x, y)));
            p
        }
        3 => {
            if f.len() < 3 || g.len() < 3 {
                return None;
            }
            let rf: Vec<u8> = f.iter().map(|&x| restriction(x, &c1, gl)).collect();
            let rg: Vec<u8> = g.iter().map(|&y| restriction(y, &c2, gr)).collect();
            // Nonzero restrictions first; the first three of each side are special.
            let mut fi: Vec<usize> = (0..f.len()).collect();
            fi.sort_by_key(|&i| rf[i] == 0);
            let mut gi: Vec<usize> = (0..g.len()).collect();
            gi.sort_by_key(|&j| rg[j] == 0);
            if fi[3..].iter().any(|&i| rf[i] != 0) || gi[3..].iter().any(|&j| rg[j] != 0) {
                return None;
            }
            let pick = |v: &[u64], idx: &[usize]| idx[..3].iter().map(|&i| v[i]).collect::<Vec<_>>();
            let pick_r = |v: &[u8], idx: &[usize]| idx[..3].iter().map(|&i| v[i]).collect::<Vec<_>>();
            let mut p: Vec<(u64, u64)> =
                fi[3..].iter().map(|&i| (f[i], 0)).chain(gi[3..].iter().map(|&j| (0, g[j]))).collect();
            p.extend(three_sum_extras(&pick(&f, &fi), &pick_r(&rf, &fi), &pick(&g, &gi), &pick_r(&rg, &gi))?);
            p
        }
        _ => return None,
    };
    let vs: Vec<u64> = pairs.iter().map(|&(x, y)| descend(m, &c1, &c2, gl, gr, x, y)).collect::<Option<_>>()?;
    is_family(&m.column_masks(), &vs).then_some(vs)
}

/// A family for `m` from its provenance, if the constructions apply.
pub fn family(m: &BinaryMatroid) -> Option<Vec<u64>> {
    let vs = match m.provenance() {
        Provenance::Graphic { graph, .. } if m.rank() >= 2 => graphic_family(m, graph)?,
        Provenance::Cographic { graph } => cycle_family(m, &cographic_cycle_cover(graph).ok()?)?,
        Provenance::R10 => sporadic_family(m)?,
        Provenance::Sum { k, left, right, glue_left, glue_right } => {
            sum_family(m, *k, left, right, glue_left, glue_right)?
        }
        _ => return None,
    };
    is_family(&m.column_masks(), &vs).then_some(vs)
}

/// `count` distinct nonzero functionals on F2^d with every column outside
/// at most two kernels, first in lexicographic order. Columns with the
/// fewest admissible partners are checked first.
pub fn search_family(d: usize, cols: &[u64], count: usize) -> Option<Vec<u64>> {
    if d >= 64 {
        return None;
    }
    let mut distinct: Vec<u64> = cols.iter().copied().filter(|&c| c != 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    // Columns hit by many functionals are the most constraining.
    distinct.sort_by_key(|&c| std::cmp::Reverse(c.count_ones()));
    let mut hits = vec![0usize; distinct.len()];
    let mut chosen = Vec::with_capacity(count);
    fn go(next: u64, top: u64, count: usize, cols: &[u64], hits: &mut [usize], chosen: &mut Vec<u64>) -> bool {
        if chosen.len() == count {
            return true;
        }
        let mut v = next;
        while v < top && top - v >= (count - chosen.len()) as u64 {
            let hit: Vec<usize> = (0..cols.len()).filter(|&i| odd(v, cols[i])).collect();
            if hit.iter().all(|&i| hits[i] < 2) {
                hit.iter().for_each(|&i| hits[i] += 1);
                chosen.push(v);
                if go(v + 1, top, count, cols, hits, chosen) {
                    return true;
                }
                chosen.pop();
                hit.iter().for_each(|&i| hits[i] -= 1);
            }
            v += 1;
        }
        false
    }
    go(1, 1u64 << d, count, &distinct, &mut hits, &mut chosen).then_some(chosen)
}

/// Six functionals for a matroid of rank at most six, padded by free
/// coordinates when the rank is smaller.
pub fn six_involutions(m: &BinaryMatroid) -> Result<InvolutionSet> {
    let d = m.rank();
    if d > RANK {
        return Err(Error::Precondition(format!("rank {d} exceeds {RANK}")));
    }
    let cols = m.column_masks();
    if let Some(mut vs) = family(m) {
        vs.truncate(RANK);
        // Functionals on the padding coordinates alone contain every element.
        let mut pad = 1u64 << d;
        while vs.len() < RANK && pad < 1u64 << RANK {
            vs.push(pad);
            pad += 1u64 << d;
        }
        if vs.len() == RANK && is_family(&cols, &vs) {
            let method = match m.provenance() {
                Provenance::Graphic { .. } => Method::Graphic,
                Provenance::Cographic { .. } => Method::Cographic,
                Provenance::R10 => Method::Sporadic,
                _ => Method::Sum,
            };
            return Ok(InvolutionSet::new(m, vs, method));
        }
    }
    let vs = search_family(RANK, &cols, RANK)
        .ok_or_else(|| Error::NotFound("no six functionals exist; the input is not regular".into()))?;
    Ok(InvolutionSet::new(m, vs, Method::Search))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionCheck {
    pub ok: bool,
    /// `sum_i k_i` with `k_i` the multiplicity outside the kernel of `v_i`.
    pub total_codim: Rat,
    /// Twice the total multiplicity.
    pub bound: Rat,
}

pub fn verify_involutions(m: &BinaryMatroid, mult: &[Rat], s: &InvolutionSet) -> Result<InvolutionCheck> {
    if mult.len() != m.len() {
        return Err(Error::Dimension(format!("{} multiplicities for {} elements", mult.len(), m.len())));
    }
    if mult.iter().any(Rat::is_negative) {
        return Err(Error::Precondition("negative multiplicity".into()));
    }
    let cols = m.column_masks();
    let total_codim: Rat =
        s.vs.iter().map(|&v| cols.iter().zip(mult).filter(|(&c, _)| odd(v, c)).map(|(_, x)| x).sum::<Rat>()).sum();
    let bound = mult.iter().sum::<Rat>() * Rat::from_int(2);
    let valid = s.vs.len() == RANK && s.vs.iter().all(|&v| v != 0 && v < 1 << RANK) && is_family(&cols, &s.vs);
    Ok(InvolutionCheck { ok: valid && total_codim <= bound, total_codim, bound })
}

fn simple_faces(cert: &EmbeddingCertificate, g: &MultiGraph) -> Option<Vec<Cycle>> {
    cert.faces.iter().map(|f| Cycle::new(g, face_edges(f)).ok().filter(|c| c.len() == f.len())).collect()
}

/// `b` distinct cycles, every edge on at most two. Face boundaries of a
/// planar or projective-planar embedding when one has only simple faces,
/// otherwise a search over all cycles.
pub fn cographic_cycle_cover(g: &MultiGraph) -> Result<Vec<Cycle>> {
    let b = g.betti();
    check_guard(b <= RANK, || format!("cycle covers are built for Betti number at most {RANK}, got {b}"))?;
    if b == 0 {
        return Ok(Vec::new());
    }
    if g.is_connected() {
        for (chi, orientable) in [(2, true), (1, false)] {
            let accept = |c: &EmbeddingCertificate| simple_faces(c, g).is_some();
            let found = match embeds_where(g, chi, orientable, &accept) {
                Ok(found) => found,
                Err(Error::Guard(_)) => None,
                Err(e) => return Err(e),
            };
            if let Some(cert) = found {
                let mut faces = simple_faces(&cert, g).expect("accepted");
                faces.sort_by_key(Cycle::len);
                faces.dedup();
                if faces.len() >= b {
                    faces.truncate(b);
                    return Ok(faces);
                }
            }
        }
    }
    let cycles = enumerate_cycles(g)?;
    let mut load = vec![0usize; g.m()];
    let mut chosen = Vec::new();
    fn go(start: usize, b: usize, cycles: &[Cycle], load: &mut [usize], chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == b {
            return true;
        }
        for i in start..cycles.len() {
            let c = &cycles[i];
            if c.edges().iter().all(|&e| load[e] < 2) {
                c.edges().iter().for_each(|&e| load[e] += 1);
                chosen.push(i);
                if go(i + 1, b, cycles, load, chosen) {
                    return true;
                }
                chosen.pop();
                c.edges().iter().for_each(|&e| load[e] -= 1);
            }
        }
        false
    }
    if go(0, b, &cycles, &mut load, &mut chosen) {
        Ok(chosen.into_iter().map(|i| cycles[i].clone()).collect())
    } else {
        Err(Error::NotFound(format!("no {b} cycles with every edge on at most two")))
    }
}
