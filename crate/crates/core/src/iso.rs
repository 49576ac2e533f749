//! Multigraph isomorphism by colour refinement and backtracking.
//!
//! Vertices are first coloured by iterated degree/neighbourhood refinement,
//! computed jointly on both graphs so colours are comparable. A depth-first
//! search then maps vertices class by class, checking edge multiplicities
//! against every vertex already mapped. The search is exhaustive, which is
//! fine at the orders this crate targets.

use std::collections::{BTreeMap, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub mapping: BTreeMap<VertexId, VertexId>,
}

impl IsoCertificate {
    pub fn inverse(&self) -> IsoCertificate {
        IsoCertificate {
            mapping: self.mapping.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// Checks that the mapping is a bijection preserving every multiplicity.
    pub fn verify(&self, g1: &Graph, g2: &Graph, simplified: bool) -> bool {
        if g1.order() != g2.order() || self.mapping.len() != g1.order() {
            return false;
        }
        let mut image: Vec<_> = self.mapping.values().copied().collect();
        image.sort_unstable();
        if image != g2.vertices() {
            return false;
        }
        if !g1.vertices().iter().all(|v| self.mapping.contains_key(v)) {
            return false;
        }
        let m1 = Mult::new(g1, simplified);
        let m2 = Mult::new(g2, simplified);
        let idx = |g: &Graph, v: VertexId| g.vertex_index(v).unwrap();
        for (&a, &fa) in &self.mapping {
            for (&b, &fb) in &self.mapping {
                if m1.get(idx(g1, a), idx(g1, b)) != m2.get(idx(g2, fa), idx(g2, fb)) {
                    return false;
                }
            }
        }
        true
    }
}

struct Mult {
    n: usize,
    m: Vec<u16>,
}

impl Mult {
    fn new(g: &Graph, simplified: bool) -> Self {
        let n = g.order();
        let mut m = vec![0u16; n * n];
        for (a, b) in g.index_pairs() {
            if simplified {
                m[a * n + b] = 1;
                m[b * n + a] = 1;
            } else {
                m[a * n + b] += 1;
                m[b * n + a] += 1;
            }
        }
        Mult { n, m }
    }

    fn get(&self, a: usize, b: usize) -> u16 {
        self.m[a * self.n + b]
    }
}

/// Per vertex: degree and the number of closed walks of lengths 2 to 5.
fn closed_walks(m: &Mult) -> Vec<[u64; 5]> {
    let n = m.n;
    let a: Vec<u64> = m.m.iter().map(|&x| x as u64).collect();
    let mut p = a.clone();
    let mut out: Vec<[u64; 5]> = (0..n)
        .map(|i| [(0..n).map(|j| a[i * n + j]).sum(), 0, 0, 0, 0])
        .collect();
    for k in 1..5 {
        let mut q = vec![0u64; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = p[i * n + l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    q[i * n + j] = q[i * n + j].wrapping_add(x.wrapping_mul(a[l * n + j]));
                }
            }
        }
        p = q;
        for (i, row) in out.iter_mut().enumerate() {
            row[k] = p[i * n + i];
        }
    }
    out
}

/// Stable colouring of the disjoint union of `graphs`.
fn refine(mults: &[&Mult]) -> Vec<Vec<u32>> {
    // start from degree and closed-walk counts, which separate many regular graphs
    let walks: Vec<Vec<[u64; 5]>> = mults.iter().map(|m| closed_walks(m)).collect::<Vec<_>>();
    let mut start: Vec<&[u64; 5]> = walks.iter().flatten().collect();
    start.sort();
    start.dedup();
    let mut colours: Vec<Vec<u32>> = walks
        .iter()
        .map(|w| {
            w.iter()
                .map(|x| start.binary_search(&x).unwrap() as u32)
                .collect()
        })
        .collect();
    let mut classes = usize::MAX;
    loop {
        let mut sigs: Vec<Vec<(u32, Vec<(u32, u16)>)>> = Vec::new();
        for (gi, m) in mults.iter().enumerate() {
            let mut per = Vec::with_capacity(m.n);
            for a in 0..m.n {
                let mut nb: Vec<(u32, u16)> = (0..m.n)
                    .filter(|&b| m.get(a, b) > 0)
                    .map(|b| (colours[gi][b], m.get(a, b)))
                    .collect();
                nb.sort_unstable();
                per.push((colours[gi][a], nb));
            }
            sigs.push(per);
        }
        let mut all: Vec<&(u32, Vec<(u32, u16)>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        let ids: HashMap<&(u32, Vec<(u32, u16)>), u32> = all
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i as u32))
            .collect();
        let next: Vec<Vec<u32>> = sigs
            .iter()
            .map(|per| per.iter().map(|s| ids[s]).collect())
            .collect();
        let count = all.len();
        colours = next;
        if count == classes {
            return colours;
        }
        classes = count;
    }
}

struct Search<'a> {
    m1: &'a Mult,
    m2: &'a Mult,
    c1: &'a [u32],
    c2: &'a [u32],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Visits every complete mapping; `visit` returns `false` to stop.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let a = self.order[depth];
        for b in 0..self.m2.n {
            if self.used[b] || self.c2[b] != self.c1[a] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.m1.get(a, p) == self.m2.get(b, self.map[p]))
                && self.m1.get(a, a) == self.m2.get(b, b);
            if !consistent {
                continue;
            }
            self.used[b] = true;
            self.map[a] = b;
            let go_on = self.run(depth + 1, visit);
            self.used[b] = false;
            self.map[a] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Search order: smallest colour class first, then stay adjacent to
/// already-ordered vertices where possible.
fn search_order(m: &Mult, colours: &[u32]) -> Vec<usize> {
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in colours {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; m.n];
    let mut order = Vec::with_capacity(m.n);
    while order.len() < m.n {
        let next = (0..m.n)
            .filter(|&a| !placed[a])
            .min_by_key(|&a| {
                let links = order.iter().filter(|&&p| m.get(a, p) > 0).count();
                (
                    usize::from(links == 0 && !order.is_empty()),
                    class_size[&colours[a]],
                    std::cmp::Reverse(links),
                    a,
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn for_each_iso(g1: &Graph, g2: &Graph, simplified: bool, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if g1.order() != g2.order() {
        return;
    }
    let m1 = Mult::new(g1, simplified);
    let m2 = Mult::new(g2, simplified);
    let (e1, e2) = if simplified {
        (g1.simplify().size(), g2.simplify().size())
    } else {
        (g1.size(), g2.size())
    };
    if e1 != e2 {
        return;
    }
    let colours = refine(&[&m1, &m2]);
    let mut h1 = colours[0].clone();
    let mut h2 = colours[1].clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return;
    }
    let order = search_order(&m1, &colours[0]);
    let mut s = Search {
        m1: &m1,
        m2: &m2,
        c1: &colours[0],
        c2: &colours[1],
        order,
        map: vec![usize::MAX; g1.order()],
        used: vec![false; g1.order()],
    };
    s.run(0, visit);
}

fn certificate(g1: &Graph, g2: &Graph, map: &[usize]) -> IsoCertificate {
    IsoCertificate {
        mapping: map
            .iter()
            .enumerate()
            .map(|(a, &b)| (g1.vertices()[a], g2.vertices()[b]))
            .collect(),
    }
}

/// Isomorphism of multigraphs (edge multiplicities must agree).
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<IsoCertificate> {
    let mut found = None;
    for_each_iso(g1, g2, false, &mut |map| {
        found = Some(certificate(g1, g2, map));
        false
    });
    found
}

/// Isomorphism of the underlying simple graphs.
pub fn are_isomorphic_simplified(g1: &Graph, g2: &Graph) -> Option<IsoCertificate> {
    let mut found = None;
    for_each_iso(g1, g2, true, &mut |map| {
        found = Some(certificate(g1, g2, map));
        false
    });
    found
}

/// Every automorphism, as a permutation of vertex positions.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_iso(g, g, false, &mut |map| {
        out.push(map.to_vec());
        true
    });
    out
}

/// Orbits of the automorphism group, as sorted vertex lists.
pub fn orbits(g: &Graph) -> Vec<Vec<VertexId>> {
    let autos = automorphisms(g);
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut orbit: Vec<usize> = autos.iter().map(|p| p[a]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &b in &orbit {
            seen[b] = true;
        }
        out.push(orbit.into_iter().map(|b| g.vertices()[b]).collect());
    }
    out
}

/// Isomorphism-invariant fingerprint (equal for isomorphic graphs; unequal
/// fingerprints prove non-isomorphism).
pub fn fingerprint(g: &Graph, simplified: bool) -> u64 {
    let m = Mult::new(g, simplified);
    let colours = refine(&[&m]);
    // refinement colour ids depend only on the graph's own signatures
    let mut hist: Vec<(u32, Vec<(u32, u16)>)> = (0..m.n)
        .map(|a| {
            let mut nb: Vec<(u32, u16)> = (0..m.n)
                .filter(|&b| m.get(a, b) > 0)
                .map(|b| (colours[0][b], m.get(a, b)))
                .collect();
            nb.sort_unstable();
            (colours[0][a], nb)
        })
        .collect();
    hist.sort();
    let mut h = DefaultHasher::new();
    (
        g.order(),
        if simplified {
            g.simplify().size()
        } else {
            g.size()
        },
    )
        .hash(&mut h);
    hist.hash(&mut h);
    let mut walks = closed_walks(&m);
    walks.sort_unstable();
    walks.hash(&mut h);
    h.finish()
}
