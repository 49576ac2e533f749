use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge with its two distinct ends, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

/// A loopless multigraph with stable vertex and edge identifiers.
///
/// Identifiers are never reused: deleting vertices or edges keeps the ids of
/// the survivors, and newly created vertices and edges (contraction vertices,
/// subdivision vertices) receive fresh ids past every id ever handed out.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    next_vertex: u32,
    next_edge: u32,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// A graph with vertices `0..n` and no edges.
    pub fn with_order(n: usize) -> Self {
        Graph {
            vertices: (0..n as u32).map(VertexId).collect(),
            edges: Vec::new(),
            next_vertex: n as u32,
            next_edge: 0,
        }
    }

    /// Builds a graph on vertices `0..n`; edge `i` of `pairs` gets id `i`.
    pub fn from_edges(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::with_order(n);
        for &(u, v) in pairs {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.push(v);
        v
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        if u == v {
            return Err(Error::Loop(u));
        }
        for w in [u, v] {
            if !self.has_vertex(w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    pub(crate) fn add_edge_with_id(&mut self, id: EdgeId, u: VertexId, v: VertexId) {
        debug_assert!(u != v);
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let at = self.edges.partition_point(|e| e.id < id);
        debug_assert!(self.edges.get(at).map_or(true, |e| e.id != id));
        self.edges.insert(at, Edge { id, u, v });
        self.next_edge = self.next_edge.max(id.0 + 1);
    }

    pub(crate) fn add_vertex_with_id(&mut self, v: VertexId) {
        let at = self.vertices.partition_point(|&w| w < v);
        if self.vertices.get(at) != Some(&v) {
            self.vertices.insert(at, v);
        }
        self.next_vertex = self.next_vertex.max(v.0 + 1);
    }

    /// Id that the next call to [`Graph::add_vertex`] would return.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.next_vertex)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_edge)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| self.edges[i])
    }

    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    /// Distinct neighbours of `v`, sorted.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<_> = self.incident(v).map(|e| e.other(v)).collect();
        set.into_iter().collect()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().filter(|e| e.u == a && e.v == b).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// Collapses parallel edges, keeping the lowest edge id of each class.
    pub fn simplify(&self) -> Graph {
        let mut seen = BTreeSet::new();
        let mut g = self.clone();
        g.edges.retain(|e| seen.insert((e.u, e.v)));
        g
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices.iter().all(|&v| self.degree(v) == d)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Degrees indexed like [`Graph::vertices`].
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for e in &self.edges {
            deg[self.vertex_index(e.u).unwrap()] += 1;
            deg[self.vertex_index(e.v).unwrap()] += 1;
        }
        deg
    }

    /// Connected components of the subgraph induced by `within`, each sorted.
    pub fn components_within(&self, within: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            if within.contains(&e.u) && within.contains(&e.v) {
                let (a, b) = (
                    self.vertex_index(e.u).unwrap(),
                    self.vertex_index(e.v).unwrap(),
                );
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            if seen[i] || !within.contains(&v) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([i]);
            seen[i] = true;
            while let Some(a) = queue.pop_front() {
                comp.push(self.vertices[a]);
                for &b in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_within(&self.vertices.iter().copied().collect())
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    /// A proper 2-colouring (indexed like [`Graph::vertices`]) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            let (a, b) = (
                self.vertex_index(e.u).unwrap(),
                self.vertex_index(e.v).unwrap(),
            );
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                let c = colour[a].unwrap();
                for &b in &adj[a] {
                    match colour[b] {
                        None => {
                            colour[b] = Some(!c);
                            queue.push_back(b);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether the graph is a single cycle (connected, 2-regular). A pair of
    /// parallel edges counts as a cycle of length two.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 2 && self.is_connected() && self.is_regular(2)
    }

    pub fn is_even_cycle(&self) -> bool {
        self.is_cycle() && self.order() % 2 == 0
    }

    /// Vertex connectivity at least `k`: more than `k` vertices and no
    /// separating set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.order();
        if n <= k {
            return false;
        }
        let all: Vec<VertexId> = self.vertices.clone();
        let mut removed = Vec::new();
        fn rec(
            g: &Graph,
            all: &[VertexId],
            start: usize,
            left: usize,
            removed: &mut Vec<VertexId>,
        ) -> bool {
            let rest: BTreeSet<_> = all
                .iter()
                .copied()
                .filter(|v| !removed.contains(v))
                .collect();
            if g.components_within(&rest).len() != 1 {
                return false;
            }
            if left == 0 {
                return true;
            }
            for i in start..all.len() {
                removed.push(all[i]);
                let ok = rec(g, all, i + 1, left - 1, removed);
                removed.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        rec(self, &all, 0, k - 1, &mut removed)
    }

    fn check_vertices(&self, vs: &[VertexId]) -> Result<()> {
        for &v in vs {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(())
    }

    pub fn delete_vertices(&self, vs: &[VertexId]) -> Result<Graph> {
        self.check_vertices(vs)?;
        let drop: BTreeSet<_> = vs.iter().copied().collect();
        let mut g = self.clone();
        g.vertices.retain(|v| !drop.contains(v));
        g.edges
            .retain(|e| !drop.contains(&e.u) && !drop.contains(&e.v));
        Ok(g)
    }

    pub fn delete_edges(&self, es: &[EdgeId]) -> Result<Graph> {
        for &e in es {
            if self.edge(e).is_none() {
                return Err(Error::UnknownEdge(e));
            }
        }
        let drop: BTreeSet<_> = es.iter().copied().collect();
        let mut g = self.clone();
        g.edges.retain(|e| !drop.contains(&e.id));
        Ok(g)
    }

    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<Graph> {
        self.check_vertices(vs)?;
        let keep: BTreeSet<_> = vs.iter().copied().collect();
        let drop: Vec<_> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !keep.contains(v))
            .collect();
        self.delete_vertices(&drop)
    }

    /// The subgraph formed by the given edges and their ends.
    pub fn edge_subgraph(&self, es: &[EdgeId]) -> Result<Graph> {
        let mut g = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            next_vertex: self.next_vertex,
            next_edge: self.next_edge,
        };
        for &id in es {
            let e = self.edge(id).ok_or(Error::UnknownEdge(id))?;
            g.add_vertex_with_id(e.u);
            g.add_vertex_with_id(e.v);
            if g.edge(id).is_none() {
                g.add_edge_with_id(id, e.u, e.v);
            }
        }
        Ok(g)
    }

    /// Whether `h` is a subgraph of `self` with the same identifiers.
    pub fn contains_subgraph(&self, h: &Graph) -> bool {
        h.vertices.iter().all(|&v| self.has_vertex(v))
            && h.edges.iter().all(|e| self.edge(e.id) == Some(*e))
    }

    /// Copy with vertices renumbered `0..n` and edges `0..m`, preserving the
    /// relative order of both.
    pub fn compact(&self) -> Graph {
        let pairs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.vertex_index(e.u).unwrap() as u32,
                    self.vertex_index(e.v).unwrap() as u32,
                )
            })
            .collect();
        Graph::from_edges(self.order(), &pairs).expect("compact relabelling is valid")
    }

    /// Endpoint index pairs (positions in [`Graph::vertices`]), in edge order.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| {
                (
                    self.vertex_index(e.u).unwrap(),
                    self.vertex_index(e.v).unwrap(),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_loops_and_unknown_vertices() {
        let mut g = Graph::with_order(2);
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(0)),
            Err(Error::Loop(VertexId(0)))
        );
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(5)),
            Err(Error::UnknownVertex(VertexId(5)))
        );
    }

    #[test]
    fn parallel_edges_keep_distinct_ids() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.multiplicity(VertexId(1), VertexId(0)), 3);
        assert!(!g.is_simple());
        assert_eq!(g.simplify().size(), 1);
        assert_eq!(g.simplify().edges()[0].id, EdgeId(0));
    }

    #[test]
    fn petersen_minus_vertex() {
        let p = families::petersen();
        let h = p.delete_vertices(&[VertexId(0)]).unwrap();
        assert_eq!((h.order(), h.size()), (9, 12));
    }

    #[test]
    fn k4_minus_edge() {
        let k4 = families::k4();
        let h = k4.delete_edges(&[EdgeId(0)]).unwrap();
        assert_eq!((h.order(), h.size()), (4, 5));
    }

    #[test]
    fn deleting_nothing_is_identity() {
        let p = families::petersen();
        assert_eq!(p.delete_vertices(&[]).unwrap(), p);
        assert_eq!(p.delete_edges(&[]).unwrap(), p);
        assert_eq!(p.induced_subgraph(p.vertices()).unwrap(), p);
    }

    #[test]
    fn deletion_rejects_unknown_ids() {
        let k4 = families::k4();
        assert_eq!(
            k4.delete_vertices(&[VertexId(9)]),
            Err(Error::UnknownVertex(VertexId(9)))
        );
        assert_eq!(
            k4.delete_edges(&[EdgeId(9)]),
            Err(Error::UnknownEdge(EdgeId(9)))
        );
    }

    #[test]
    fn survivors_keep_ids() {
        let p = families::petersen();
        let h = p.delete_vertices(&[VertexId(3)]).unwrap();
        for e in h.edges() {
            assert_eq!(p.edge(e.id), Some(*e));
        }
        let v = h.clone().add_vertex();
        assert_eq!(v, VertexId(10));
    }

    #[test]
    fn connectivity() {
        assert!(families::k4().is_k_connected(3));
        assert!(!families::cycle(6).unwrap().is_k_connected(3));
        assert!(families::cycle(6).unwrap().is_k_connected(2));
        assert!(families::petersen().is_k_connected(3));
    }

    #[test]
    fn bipartiteness() {
        assert!(families::cycle(6).unwrap().is_bipartite());
        assert!(!families::k4().is_bipartite());
        assert!(families::cycle(6).unwrap().is_even_cycle());
    }
}
