//! Matchings, admissibility, barriers and the matching covered test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::{check_cap, Config};

/// A set of edges, no two sharing an end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&id| match g.edge(id) {
            Some(e) => seen.insert(e.u) && seen.insert(e.v),
            None => false,
        })
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.is_valid(g) && 2 * self.len() == g.order()
    }

    /// Number of edges shared with `edges`.
    pub fn meet(&self, edges: &[EdgeId]) -> usize {
        edges.iter().filter(|&&e| self.contains(e)).count()
    }
}

/// A vertex set `B` with `o(G - B) = |B|`, with its odd components.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Barrier {
    pub vertices: Vec<VertexId>,
    pub odd_components: Vec<Vec<VertexId>>,
}

impl Barrier {
    /// Recomputes the odd components of `G - B` and checks the deficiency.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|v| !g.has_vertex(*v)) {
            return false;
        }
        let odd = odd_components(g, &self.vertices);
        odd.len() == self.vertices.len() && odd == self.odd_components
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn is_stable(&self, g: &Graph) -> bool {
        let b: BTreeSet<_> = self.vertices.iter().collect();
        !g.edges()
            .iter()
            .any(|e| b.contains(&e.u) && b.contains(&e.v))
    }
}

/// Odd components of `G - S`, each sorted, in order of smallest vertex.
pub fn odd_components(g: &Graph, s: &[VertexId]) -> Vec<Vec<VertexId>> {
    let drop: BTreeSet<_> = s.iter().copied().collect();
    let rest = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| !drop.contains(v))
        .collect();
    g.components_within(&rest)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect()
}

fn to_matching(d: &Dense, idx: &[usize]) -> Matching {
    Matching::new(idx.iter().map(|&i| d.eids[i]).collect())
}

/// A maximum-cardinality matching (blossom algorithm).
pub fn maximum_matching(g: &Graph) -> Matching {
    if g.order() > crate::MAX_ORDER {
        return large_maximum_matching(g);
    }
    let d = Dense::new(g);
    to_matching(&d, &d.maximum_matching(d.full_mask(), None))
}

fn large_maximum_matching(g: &Graph) -> Matching {
    let pairs = g.index_pairs();
    let mut adj = vec![Vec::new(); g.order()];
    for &(a, b) in &pairs {
        if !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mate = crate::dense::blossom(&adj);
    let mut out = Vec::new();
    for (a, m) in mate.iter().enumerate() {
        if let Some(b) = *m {
            if a < b {
                let i = pairs
                    .iter()
                    .position(|&p| p == (a, b) || p == (b, a))
                    .unwrap();
                out.push(g.edges()[i].id);
            }
        }
    }
    Matching::new(out)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && 2 * maximum_matching(g).len() == g.order()
}

/// Every perfect matching, sorted lexicographically by edge ids.
pub fn enumerate_perfect_matchings(g: &Graph, config: &Config) -> Result<Vec<Matching>> {
    config.check(g)?;
    let d = Dense::new(g);
    let mut all: Vec<Matching> = d
        .perfect_matchings(d.full_mask())
        .iter()
        .map(|s| Matching::new(d.edge_ids(s)))
        .collect();
    all.sort();
    Ok(all)
}

/// Witness for [`is_admissible`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Admissibility {
    /// A perfect matching containing the edge.
    Admissible(Matching),
    /// A barrier containing both ends of the edge.
    Inadmissible(Barrier),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible(_))
    }
}

pub fn is_admissible(g: &Graph, e: EdgeId) -> Result<Admissibility> {
    let edge = g.edge(e).ok_or(Error::UnknownEdge(e))?;
    check_cap(g, crate::MAX_ORDER)?;
    let d = Dense::new(g);
    let full = d.full_mask();
    if !d.has_perfect_matching(full, None) {
        return Err(Error::NoPerfectMatching);
    }
    let (a, b) = (
        g.vertex_index(edge.u).unwrap(),
        g.vertex_index(edge.v).unwrap(),
    );
    let rest = full & !(1 << a) & !(1 << b);
    let m = d.maximum_matching(rest, None);
    if 2 * m.len() == rest.count_ones() as usize {
        let mut idx = m;
        idx.push(d.edge_index(e));
        return Ok(Admissibility::Admissible(to_matching(&d, &idx)));
    }
    Ok(Admissibility::Inadmissible(barrier_through(
        g, &d, rest, a, b,
    )))
}

/// Gallai–Edmonds on `G - u - v`: with `D` the vertices missed by some
/// maximum matching and `A` their outside neighbours, `A ∪ {u, v}` is a
/// barrier of `G`.
fn barrier_through(g: &Graph, d: &Dense, rest: u64, a: usize, b: usize) -> Barrier {
    let nu = d.maximum_matching(rest, None).len();
    let mut dset = 0u64;
    for w in 0..d.n {
        if rest >> w & 1 == 1 && d.maximum_matching(rest & !(1 << w), None).len() == nu {
            dset |= 1 << w;
        }
    }
    let mut aset = 0u64;
    for w in 0..d.n {
        if dset >> w & 1 == 1 {
            for &(x, _) in &d.inc[w] {
                if rest >> x & 1 == 1 && dset >> x & 1 == 0 {
                    aset |= 1 << x;
                }
            }
        }
    }
    let bmask = aset | 1 << a | 1 << b;
    let vertices: Vec<VertexId> = (0..d.n)
        .filter(|&w| bmask >> w & 1 == 1)
        .map(|w| g.vertices()[w])
        .collect();
    let odd = odd_components(g, &vertices);
    Barrier {
        vertices,
        odd_components: odd,
    }
}

/// Connected, at least two vertices, every edge admissible.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.order() > crate::MAX_ORDER {
        return large_is_matching_covered(g);
    }
    let d = Dense::new(g);
    d.is_matching_covered(d.full_mask(), None)
}

fn large_is_matching_covered(g: &Graph) -> bool {
    if g.order() < 2 || !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    g.edges().iter().all(|e| {
        g.delete_vertices(&[e.u, e.v])
            .map(|h| has_perfect_matching(&h))
            .unwrap_or(false)
    })
}

/// The stable-barrier criterion: connected, a perfect matching exists and
/// every barrier is a stable set. Exhaustive over vertex subsets.
pub fn is_matching_covered_by_barriers(g: &Graph, config: &Config) -> Result<bool> {
    config.check(g)?;
    if g.order() < 2 || !g.is_connected() || !has_perfect_matching(g) {
        return Ok(false);
    }
    Ok(all_barriers(g, config)?.iter().all(|b| b.is_stable(g)))
}

/// Every nonempty barrier, by exhaustive subset scan.
pub fn all_barriers(g: &Graph, config: &Config) -> Result<Vec<Barrier>> {
    config.check(g)?;
    if !has_perfect_matching(g) {
        return Err(Error::NoPerfectMatching);
    }
    let d = Dense::new(g);
    let n = d.n;
    let full = d.full_mask();
    let mut out = Vec::new();
    for bmask in 1u64..(1u64 << n) {
        let k = bmask.count_ones() as usize;
        if 2 * k > n {
            continue;
        }
        let odd: Vec<u64> = d
            .components(full & !bmask)
            .into_iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .collect();
        if odd.len() == k {
            out.push(barrier_from_masks(g, bmask, &odd));
        }
    }
    out.sort();
    Ok(out)
}

fn barrier_from_masks(g: &Graph, bmask: u64, odd: &[u64]) -> Barrier {
    let verts = |m: u64| -> Vec<VertexId> {
        (0..g.order())
            .filter(|&w| m >> w & 1 == 1)
            .map(|w| g.vertices()[w])
            .collect()
    };
    let mut comps: Vec<Vec<VertexId>> = odd.iter().map(|&m| verts(m)).collect();
    comps.sort();
    Barrier {
        vertices: verts(bmask),
        odd_components: comps,
    }
}

/// Inclusion-maximal barriers (singletons included when maximal).
pub fn maximal_barriers(g: &Graph, config: &Config) -> Result<Vec<Barrier>> {
    let all = all_barriers(g, config)?;
    let sets: Vec<BTreeSet<VertexId>> = all
        .iter()
        .map(|b| b.vertices.iter().copied().collect())
        .collect();
    Ok(all
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, s)| j != *i && s.len() > sets[*i].len() && s.is_superset(&sets[*i]))
        })
        .map(|(_, b)| b.clone())
        .collect())
}

/// An edge set meeting every vertex other than `v0` exactly once and `v0` at
/// least twice.
pub fn find_v0_matching(g: &Graph, v0: VertexId) -> Result<Option<Matching>> {
    if !g.has_vertex(v0) {
        return Err(Error::UnknownVertex(v0));
    }
    check_cap(g, crate::MAX_ORDER)?;
    let d = Dense::new(g);
    let c = g.vertex_index(v0).unwrap();
    // one edge per distinct neighbour is enough: parallels give the same residual
    let mut star: Vec<(usize, usize)> = Vec::new();
    for &(w, e) in &d.inc[c] {
        if !star.iter().any(|&(x, _)| x == w) {
            star.push((w, e));
        }
    }
    let full = d.full_mask();
    let k = star.len();
    for size in 2..=k {
        if (g.order() - 1 - size) % 2 == 1 {
            continue;
        }
        let mut found = None;
        for_each_subset(k, size, &mut |pick: &[usize]| {
            let mut rest = full & !(1 << c);
            for &i in pick {
                rest &= !(1 << star[i].0);
            }
            let m = d.maximum_matching(rest, None);
            if 2 * m.len() == rest.count_ones() as usize {
                let mut idx = m;
                idx.extend(pick.iter().map(|&i| star[i].1));
                found = Some(to_matching(&d, &idx));
                return false;
            }
            true
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Calls `f` on every `size`-subset of `0..k` in lexicographic order until
/// it returns `false`.
pub(crate) fn for_each_subset(k: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(
        k: usize,
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..k {
            cur.push(i);
            if !rec(k, size, i + 1, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(k, size, 0, &mut Vec::new(), f);
}
