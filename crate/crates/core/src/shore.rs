//! Cuts, cut-contractions and splicing.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// The cut `∂(X)` of a shore `X`: every edge with exactly one end in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cut {
    shore: Vec<VertexId>,
    edges: Vec<EdgeId>,
    order: usize,
}

impl Cut {
    pub fn shore(&self) -> &[VertexId] {
        &self.shore
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Complementary shore in `g`.
    pub fn complement(&self, g: &Graph) -> Vec<VertexId> {
        let x: BTreeSet<_> = self.shore.iter().copied().collect();
        g.vertices()
            .iter()
            .copied()
            .filter(|v| !x.contains(v))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.shore.len() == 1 || self.order - self.shore.len() == 1
    }

    /// The shore of the pair `{X, X̄}` that contains the smallest vertex id.
    pub fn canonical_shore(&self, g: &Graph) -> Vec<VertexId> {
        let comp = self.complement(g);
        if self.shore.first() <= comp.first() {
            self.shore.clone()
        } else {
            comp
        }
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

fn validate_shore(g: &Graph, x: &[VertexId]) -> Result<Vec<VertexId>> {
    let set: BTreeSet<_> = x.iter().copied().collect();
    for &v in &set {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if set.is_empty() {
        return Err(Error::InvalidShore("shore is empty"));
    }
    if set.len() == g.order() {
        return Err(Error::InvalidShore("shore is the whole vertex set"));
    }
    Ok(set.into_iter().collect())
}

pub fn cut_of(g: &Graph, x: &[VertexId]) -> Result<Cut> {
    let shore = validate_shore(g, x)?;
    let edges = g
        .edges()
        .iter()
        .filter(|e| shore.binary_search(&e.u).is_ok() != shore.binary_search(&e.v).is_ok())
        .map(|e| e.id)
        .collect();
    Ok(Cut {
        shore,
        edges,
        order: g.order(),
    })
}

/// Result of shrinking a shore to a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub graph: Graph,
    /// The fresh contraction vertex.
    pub vertex: VertexId,
}

/// `G/X`: shrinks `x` to a fresh contraction vertex, deleting the edges inside
/// `x` and keeping parallel edges. Edges keep their ids.
pub fn contract_shore(g: &Graph, x: &[VertexId]) -> Result<Contraction> {
    let shore = validate_shore(g, x)?;
    let inside = |v: VertexId| shore.binary_search(&v).is_ok();
    let mut h = g.delete_vertices(&shore)?;
    let c = h.add_vertex();
    for e in g.edges() {
        match (inside(e.u), inside(e.v)) {
            (true, false) => h.add_edge_with_id(e.id, c, e.v),
            (false, true) => h.add_edge_with_id(e.id, e.u, c),
            _ => {}
        }
    }
    Ok(Contraction {
        graph: h,
        vertex: c,
    })
}

/// Both cut-contractions `(G/X, G/X̄)`.
pub fn cut_contractions(g: &Graph, x: &[VertexId]) -> Result<(Contraction, Contraction)> {
    let cut = cut_of(g, x)?;
    Ok((
        contract_shore(g, x)?,
        contract_shore(g, &cut.complement(g))?,
    ))
}

/// Output of [`splice`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splice {
    pub graph: Graph,
    /// Where each vertex of `G2 - v` went.
    pub right_vertices: BTreeMap<VertexId, VertexId>,
    /// The splicing cut, as the shore `V(G1) - u`.
    pub left_shore: Vec<VertexId>,
}

/// Splices `g1` at `u` with `g2` at `v` along the bijection `pi` from
/// `∂(u)` to `∂(v)`.
///
/// Vertices and edges of `g1 - u` keep their ids. Vertices and edges of
/// `g2 - v` are renumbered past them; each spliced edge keeps the id of its
/// `g1` edge.
pub fn splice(
    g1: &Graph,
    u: VertexId,
    g2: &Graph,
    v: VertexId,
    pi: &[(EdgeId, EdgeId)],
) -> Result<Splice> {
    if !g1.has_vertex(u) {
        return Err(Error::UnknownVertex(u));
    }
    if !g2.has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let left: BTreeSet<EdgeId> = g1.incident(u).map(|e| e.id).collect();
    let right: BTreeSet<EdgeId> = g2.incident(v).map(|e| e.id).collect();
    if left.len() != right.len() {
        return Err(Error::DegreeMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let dom: BTreeSet<EdgeId> = pi.iter().map(|p| p.0).collect();
    let img: BTreeSet<EdgeId> = pi.iter().map(|p| p.1).collect();
    if pi.len() != left.len() || dom != left || img != right {
        return Err(Error::InvalidBijection(format!(
            "expected {} pairs covering both incidence sets",
            left.len()
        )));
    }

    let mut h = g1.delete_vertices(&[u])?;
    let mut right_vertices = BTreeMap::new();
    for &w in g2.vertices() {
        if w != v {
            right_vertices.insert(w, h.add_vertex());
        }
    }
    let mut next_edge = h.next_edge_id().0;
    for e in g2.edges() {
        if e.touches(v) {
            continue;
        }
        h.add_edge_with_id(
            EdgeId(next_edge),
            right_vertices[&e.u],
            right_vertices[&e.v],
        );
        next_edge += 1;
    }
    for &(a, b) in pi {
        let ea = g1.edge(a).expect("checked");
        let eb = g2.edge(b).expect("checked");
        h.add_edge_with_id(a, ea.other(u), right_vertices[&eb.other(v)]);
    }
    let left_shore = g1.vertices().iter().copied().filter(|&w| w != u).collect();
    Ok(Splice {
        graph: h,
        right_vertices,
        left_shore,
    })
}

/// Splice using the bijection that pairs the incident edges of `u` and `v`
/// in increasing id order.
pub fn splice_default(g1: &Graph, u: VertexId, g2: &Graph, v: VertexId) -> Result<Splice> {
    let left: Vec<EdgeId> = g1.incident(u).map(|e| e.id).collect();
    let right: Vec<EdgeId> = g2.incident(v).map(|e| e.id).collect();
    if left.len() != right.len() {
        return Err(Error::DegreeMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let pi: Vec<_> = left.into_iter().zip(right).collect();
    splice(g1, u, g2, v, &pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::iso::are_isomorphic;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn k4_vertex_cut() {
        let c = cut_of(&families::k4(), &[v(1)]).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.is_trivial());
    }

    #[test]
    fn c6bar_triangle_cut() {
        let g = families::c6bar();
        let tri = triangle(&g);
        let c = cut_of(&g, &tri).unwrap();
        assert_eq!(c.len(), 3);
        assert!(!c.is_trivial());
    }

    fn triangle(g: &Graph) -> Vec<VertexId> {
        for a in g.vertices() {
            for b in g.neighbors(*a) {
                for c in g.neighbors(b) {
                    if c != *a && g.multiplicity(*a, c) > 0 {
                        return vec![*a, b, c];
                    }
                }
            }
        }
        panic!("no triangle")
    }

    #[test]
    fn cycle_boundary() {
        let c6 = families::cycle(6).unwrap();
        let c = cut_of(&c6, &[v(0), v(1), v(2)]).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn rejects_empty_and_full_shores() {
        let k4 = families::k4();
        assert!(matches!(cut_of(&k4, &[]), Err(Error::InvalidShore(_))));
        assert!(matches!(
            cut_of(&k4, k4.vertices()),
            Err(Error::InvalidShore(_))
        ));
        assert!(matches!(
            contract_shore(&k4, &[]),
            Err(Error::InvalidShore(_))
        ));
        assert!(matches!(
            contract_shore(&k4, k4.vertices()),
            Err(Error::InvalidShore(_))
        ));
    }

    #[test]
    fn contracting_c6bar_triangle_gives_k4() {
        let g = families::c6bar();
        let h = contract_shore(&g, &triangle(&g)).unwrap();
        assert_eq!(h.graph.order(), 4);
        assert!(h.graph.is_simple());
        assert!(are_isomorphic(&h.graph, &families::k4()).is_some());
        assert_eq!(h.graph.degree(h.vertex), 3);
    }

    #[test]
    fn contracting_singleton_is_isomorphism() {
        let p = families::petersen();
        let h = contract_shore(&p, &[v(4)]).unwrap();
        assert!(are_isomorphic(&h.graph, &p).is_some());
    }

    #[test]
    fn contracting_path_of_c6_gives_c4() {
        let c6 = families::cycle(6).unwrap();
        let h = contract_shore(&c6, &[v(0), v(1), v(2)]).unwrap();
        assert!(are_isomorphic(&h.graph, &families::cycle(4).unwrap()).is_some());
    }

    #[test]
    fn k4_splice_k4_is_c6bar() {
        let k4 = families::k4();
        let s = splice_default(&k4, v(0), &k4, v(0)).unwrap();
        assert!(are_isomorphic(&s.graph, &families::c6bar()).is_some());
    }

    #[test]
    fn k4_splice_c6bar_is_bicorn() {
        let s = splice_default(&families::k4(), v(0), &families::c6bar(), v(0)).unwrap();
        assert!(are_isomorphic(&s.graph, &families::bicorn()).is_some());
        assert!(are_isomorphic(&s.graph, &families::staircase(8).unwrap()).is_some());
    }

    #[test]
    fn splice_then_contract_recovers_factors() {
        let g1 = families::petersen();
        let g2 = families::k4();
        let s = splice_default(&g1, v(0), &g2, v(3)).unwrap();
        let left = contract_shore(&s.graph, &s.left_shore).unwrap();
        assert!(are_isomorphic(&left.graph, &g2).is_some());
        let right = contract_shore(
            &s.graph,
            &cut_of(&s.graph, &s.left_shore)
                .unwrap()
                .complement(&s.graph),
        )
        .unwrap();
        assert!(are_isomorphic(&right.graph, &g1).is_some());
    }

    #[test]
    fn splice_errors() {
        let k4 = families::k4();
        let w5 = families::odd_wheel(5).unwrap();
        let hub = *w5.vertices().last().unwrap();
        assert!(matches!(
            splice_default(&k4, v(0), &w5, hub),
            Err(Error::DegreeMismatch { .. })
        ));
        let bad = [
            (EdgeId(0), EdgeId(0)),
            (EdgeId(0), EdgeId(1)),
            (EdgeId(1), EdgeId(2)),
        ];
        assert!(matches!(
            splice(&k4, v(0), &k4, v(0), &bad),
            Err(Error::InvalidBijection(_))
        ));
    }

    #[test]
    fn cut_is_symmetric_in_shores() {
        let p = families::petersen();
        let x = [v(0), v(1), v(2)];
        let a = cut_of(&p, &x).unwrap();
        let b = cut_of(&p, &a.complement(&p)).unwrap();
        assert_eq!(a.edges(), b.edges());
    }
}
