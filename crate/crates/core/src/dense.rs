//! Index-based view of a [`Graph`] used by the exhaustive routines.
//!
//! Vertices become `0..n` (bit `i` of a `u64` mask) and edges `0..m`, both in
//! the order of the host graph's ids.

use std::collections::{HashMap, VecDeque};

use crate::graph::{EdgeId, Graph, VertexId};

/// Fixed-width bitset over edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct EdgeSet(Vec<u64>);

impl EdgeSet {
    pub fn new(m: usize) -> Self {
        EdgeSet(vec![0; m.div_ceil(64).max(1)])
    }

    pub fn full(m: usize) -> Self {
        let mut s = EdgeSet::new(m);
        for i in 0..m {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_count(&self, other: &EdgeSet) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

pub(crate) struct Dense {
    pub n: usize,
    pub vids: Vec<VertexId>,
    pub eids: Vec<EdgeId>,
    pub ends: Vec<(usize, usize)>,
    /// Per vertex: (neighbour, edge index), sorted by edge index.
    pub inc: Vec<Vec<(usize, usize)>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let ends = g.index_pairs();
        let mut inc = vec![Vec::new(); n];
        for (i, &(a, b)) in ends.iter().enumerate() {
            inc[a].push((b, i));
            inc[b].push((a, i));
        }
        Dense {
            n,
            vids: g.vertices().to_vec(),
            eids: g.edges().iter().map(|e| e.id).collect(),
            ends,
            inc,
        }
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertex_mask(&self, vs: impl IntoIterator<Item = VertexId>) -> u64 {
        vs.into_iter()
            .map(|v| 1u64 << self.vids.binary_search(&v).expect("vertex in graph"))
            .fold(0, |a, b| a | b)
    }

    pub fn edge_index(&self, e: EdgeId) -> usize {
        self.eids.binary_search(&e).expect("edge in graph")
    }

    /// Edges with exactly one end in `mask`.
    pub fn cut_edges(&self, mask: u64) -> EdgeSet {
        let mut s = EdgeSet::new(self.m());
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if (mask >> a & 1) != (mask >> b & 1) {
                s.insert(i);
            }
        }
        s
    }

    pub fn edge_ids(&self, s: &EdgeSet) -> Vec<EdgeId> {
        s.iter().map(|i| self.eids[i]).collect()
    }

    /// Maximum matching on the vertices of `alive` using only `allowed` edges,
    /// returned as edge indices.
    pub fn maximum_matching(&self, alive: u64, allowed: Option<&EdgeSet>) -> Vec<usize> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| alive >> v & 1 == 1).collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let k = verts.len();
        let mut adj = vec![Vec::new(); k];
        let mut best_edge: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if alive >> a & 1 == 0 || alive >> b & 1 == 0 {
                continue;
            }
            if allowed.is_some_and(|s| !s.contains(i)) {
                continue;
            }
            let (la, lb) = (local[a], local[b]);
            let key = (la.min(lb), la.max(lb));
            if let std::collections::hash_map::Entry::Vacant(slot) = best_edge.entry(key) {
                slot.insert(i);
                adj[la].push(lb);
                adj[lb].push(la);
            }
        }
        let mate = blossom(&adj);
        let mut out = Vec::new();
        for (a, &b) in mate.iter().enumerate() {
            if let Some(b) = b {
                if a < b {
                    out.push(best_edge[&(a, b)]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn has_perfect_matching(&self, alive: u64, allowed: Option<&EdgeSet>) -> bool {
        let k = alive.count_ones() as usize;
        k % 2 == 0 && self.maximum_matching(alive, allowed).len() * 2 == k
    }

    /// All perfect matchings of the subgraph on `alive`, as edge sets.
    pub fn perfect_matchings(&self, alive: u64) -> Vec<EdgeSet> {
        let mut out = Vec::new();
        let mut cur = EdgeSet::new(self.m());
        let mut dead = std::collections::HashSet::new();
        self.pm_rec(alive, &mut cur, &mut out, &mut dead);
        out
    }

    fn pm_rec(
        &self,
        alive: u64,
        cur: &mut EdgeSet,
        out: &mut Vec<EdgeSet>,
        dead: &mut std::collections::HashSet<u64>,
    ) -> bool {
        if alive == 0 {
            out.push(cur.clone());
            return true;
        }
        if dead.contains(&alive) {
            return false;
        }
        let v = alive.trailing_zeros() as usize;
        let mut found = false;
        for &(w, e) in &self.inc[v] {
            if alive >> w & 1 == 1 {
                cur.insert(e);
                found |= self.pm_rec(alive & !(1 << v) & !(1 << w), cur, out, dead);
                cur.remove(e);
            }
        }
        if !found {
            dead.insert(alive);
        }
        found
    }

    /// Number of odd components of the subgraph induced by `alive`.
    pub fn components(&self, alive: u64) -> Vec<u64> {
        let mut left = alive;
        let mut comps = Vec::new();
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u64 << s;
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                for &(b, _) in &self.inc[a] {
                    if alive >> b & 1 == 1 && comp >> b & 1 == 0 {
                        comp |= 1 << b;
                        queue.push_back(b);
                    }
                }
            }
            left &= !comp;
            comps.push(comp);
        }
        comps
    }

    /// Matching covered test restricted to the vertices of `alive` and the
    /// `allowed` edges.
    pub fn is_matching_covered(&self, alive: u64, allowed: Option<&EdgeSet>) -> bool {
        let k = alive.count_ones();
        if k < 2 || k % 2 == 1 {
            return false;
        }
        let comps = match allowed {
            None => self.components(alive),
            Some(s) => self.restricted(s).components(alive),
        };
        if comps.len() != 1 {
            return false;
        }
        let base = self.maximum_matching(alive, allowed);
        if base.len() * 2 != k as usize {
            return false;
        }
        let mut covered = EdgeSet::new(self.m());
        for &e in &base {
            covered.insert(e);
        }
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if alive >> a & 1 == 0 || alive >> b & 1 == 0 {
                continue;
            }
            if allowed.is_some_and(|s| !s.contains(i)) || covered.contains(i) {
                continue;
            }
            let rest = alive & !(1 << a) & !(1 << b);
            let m = self.maximum_matching(rest, allowed);
            if m.len() * 2 != rest.count_ones() as usize {
                return false;
            }
            covered.insert(i);
            for e in m {
                covered.insert(e);
            }
        }
        true
    }

    /// A copy keeping only the given edges (indices are preserved).
    pub fn restricted(&self, allowed: &EdgeSet) -> Dense {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if allowed.contains(i) {
                inc[a].push((b, i));
                inc[b].push((a, i));
            }
        }
        Dense {
            n: self.n,
            vids: self.vids.clone(),
            eids: self.eids.clone(),
            ends: self.ends.clone(),
            inc,
        }
    }
}

/// Edmonds' blossom algorithm on a simple graph given by adjacency lists.
/// Returns the mate of every vertex.
pub(crate) fn blossom(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let none = usize::MAX;
    let mut mate = vec![none; n];

    // greedy start
    for v in 0..n {
        if mate[v] == none {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == none) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }

    let mut parent = vec![none; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut in_blossom = vec![false; n];

    let lca = |mut a: usize, mut b: usize, mate: &[usize], base: &[usize], parent: &[usize]| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == none {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    for root in 0..n {
        if mate[root] != none {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = none);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used.iter_mut().for_each(|u| *u = false);
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut finish = none;
        'search: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != none && parent[mate[to]] != none) {
                    let cur = lca(v, to, &mate, &base, &parent);
                    in_blossom.iter_mut().for_each(|b| *b = false);
                    mark_path(v, cur, to, &mate, &base, &mut parent, &mut in_blossom);
                    mark_path(to, cur, v, &mate, &base, &mut parent, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == none {
                    parent[to] = v;
                    if mate[to] == none {
                        finish = to;
                        break 'search;
                    }
                    let m = mate[to];
                    used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        let mut v = finish;
        while v != none {
            let pv = parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
    mate.into_iter()
        .map(|m| if m == none { None } else { Some(m) })
        .collect()
}

fn mark_path(
    mut v: usize,
    b: usize,
    mut child: usize,
    mate: &[usize],
    base: &[usize],
    parent: &mut [usize],
    in_blossom: &mut [bool],
) {
    while base[v] != b {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}
