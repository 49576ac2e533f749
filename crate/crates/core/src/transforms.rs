//! Bi-subdivision, bi-contraction, retracts, bi-splitting, the dependence
//! relation, removable classes and ear decompositions.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::IndexedRandom;
use serde::{Deserialize, Serialize};

use crate::dense::{Dense, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso::are_isomorphic;
use crate::matching::is_matching_covered;
use crate::shore::{contract_shore, Contraction};
use crate::{check_cap, Config, MAX_ORDER};

/// Replaces each planned edge by a path through `count` new vertices. The
/// first edge of each path keeps the original id.
pub fn bi_subdivide(g: &Graph, plan: &BTreeMap<EdgeId, usize>) -> Result<Graph> {
    for (&e, &count) in plan {
        if g.edge(e).is_none() {
            return Err(Error::UnknownEdge(e));
        }
        if count % 2 == 1 {
            return Err(Error::OddSubdivision { edge: e, count });
        }
    }
    let mut h = g.clone();
    for (&e, &count) in plan {
        if count == 0 {
            continue;
        }
        let edge = g.edge(e).unwrap();
        h = h.delete_edges(&[e])?;
        let inner: Vec<VertexId> = (0..count).map(|_| h.add_vertex()).collect();
        h.add_edge_with_id(e, edge.u, inner[0]);
        for w in inner.windows(2) {
            h.add_edge(w[0], w[1])?;
        }
        h.add_edge(inner[count - 1], edge.v)?;
    }
    Ok(h)
}

/// Shrinks a degree-two vertex together with its two neighbours.
pub fn bi_contract(g: &Graph, v0: VertexId) -> Result<Contraction> {
    if !g.has_vertex(v0) {
        return Err(Error::UnknownVertex(v0));
    }
    let degree = g.degree(v0);
    let nbrs = g.neighbors(v0);
    if degree != 2 || nbrs.len() != 2 {
        return Err(Error::NotBiContractible { vertex: v0, degree });
    }
    if g.order() < 4 {
        return Err(Error::OrderTooSmall(g.order()));
    }
    contract_shore(g, &[v0, nbrs[0], nbrs[1]])
}

fn bi_contractible(g: &Graph) -> Vec<VertexId> {
    g.vertices()
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 2 && g.neighbors(v).len() == 2)
        .collect()
}

fn check_retractable(g: &Graph) -> Result<()> {
    if g.order() < 4 {
        return Err(Error::OrderTooSmall(g.order()));
    }
    if g.is_even_cycle() {
        return Err(Error::EvenCycle);
    }
    Ok(())
}

/// Bi-contracts degree-two vertices, lowest id first, until none is left.
pub fn retract(g: &Graph) -> Result<Graph> {
    check_retractable(g)?;
    let mut h = g.clone();
    while h.order() >= 4 {
        match bi_contractible(&h).first() {
            Some(&v) => h = bi_contract(&h, v)?.graph,
            None => break,
        }
    }
    Ok(h)
}

/// As [`retract`], choosing each degree-two vertex uniformly at random.
pub fn retract_random<R: rand::Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Graph> {
    check_retractable(g)?;
    let mut h = g.clone();
    while h.order() >= 4 {
        match bi_contractible(&h).choose(rng) {
            Some(&v) => h = bi_contract(&h, v)?.graph,
            None => break,
        }
    }
    Ok(h)
}

/// Whether `h` is a bi-subdivision of `j`, for `j` of minimum degree three:
/// suppressing the degree-two threads of `h` (each of odd length) yields a
/// multigraph isomorphic to `j`.
pub fn is_bi_subdivision_of(h: &Graph, j: &Graph) -> bool {
    if j.vertices().iter().any(|&v| j.degree(v) < 3) {
        return false;
    }
    match suppress_threads(h) {
        Some(core) => are_isomorphic(&core, j).is_some(),
        None => false,
    }
}

/// Replaces each maximal thread through degree-two vertices by one edge.
/// `None` if some thread has even length, closes on itself, or a vertex has
/// degree below two.
fn suppress_threads(h: &Graph) -> Option<Graph> {
    if h.vertices().iter().any(|&v| h.degree(v) < 2) {
        return None;
    }
    let branch: BTreeSet<VertexId> = h
        .vertices()
        .iter()
        .copied()
        .filter(|&v| h.degree(v) != 2)
        .collect();
    if branch.is_empty() {
        return None;
    }
    let mut out = Graph::new();
    let mut map = BTreeMap::new();
    for &v in &branch {
        map.insert(v, out.add_vertex());
    }
    let mut used = BTreeSet::new();
    for &start in &branch {
        for e in h.incident(start) {
            if used.contains(&e.id) {
                continue;
            }
            let (mut cur, mut edge, mut len) = (e.other(start), *e, 1);
            used.insert(edge.id);
            while !branch.contains(&cur) {
                let next = h.incident(cur).find(|f| f.id != edge.id).copied()?;
                used.insert(next.id);
                cur = next.other(cur);
                edge = next;
                len += 1;
            }
            if len % 2 == 0 || cur == start {
                return None;
            }
            out.add_edge(map[&start], map[&cur]).ok()?;
        }
    }
    if used.len() != h.size() {
        return None;
    }
    Some(out)
}

/// Output of [`bi_split`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiSplit {
    pub graph: Graph,
    pub v1: VertexId,
    pub v0: VertexId,
    pub v2: VertexId,
}

/// Splits `v` into `v1` (taking `group`) and `v2` (taking the remaining
/// edges of `∂(v)`), joined through a new inner vertex `v0`.
pub fn bi_split(g: &Graph, v: VertexId, group: &[EdgeId]) -> Result<BiSplit> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let star: Vec<_> = g.incident(v).copied().collect();
    let first: BTreeSet<EdgeId> = group.iter().copied().collect();
    if first.iter().any(|e| !star.iter().any(|s| s.id == *e)) {
        return Err(Error::InvalidSplit("group is not a subset of the star"));
    }
    let distinct = |side: bool| -> usize {
        star.iter()
            .filter(|e| first.contains(&e.id) == side)
            .map(|e| e.other(v))
            .collect::<BTreeSet<_>>()
            .len()
    };
    if distinct(true) < 2 || distinct(false) < 2 {
        return Err(Error::InvalidSplit(
            "each side needs two distinct neighbours",
        ));
    }
    let mut h = g.delete_vertices(&[v])?;
    let v1 = h.add_vertex();
    let v0 = h.add_vertex();
    let v2 = h.add_vertex();
    for e in &star {
        let end = if first.contains(&e.id) { v1 } else { v2 };
        h.add_edge_with_id(e.id, end, e.other(v));
    }
    h.add_edge(v1, v0)?;
    h.add_edge(v0, v2)?;
    Ok(BiSplit {
        graph: h,
        v1,
        v0,
        v2,
    })
}

fn require_mc(g: &Graph) -> Result<()> {
    check_cap(g, MAX_ORDER)?;
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

fn depends(d: &Dense, e: usize, f: usize) -> bool {
    if e == f {
        return true;
    }
    let (a, b) = d.ends[e];
    let mut allowed = EdgeSet::full(d.m());
    allowed.remove(f);
    let rest = d.full_mask() & !(1 << a) & !(1 << b);
    !d.has_perfect_matching(rest, Some(&allowed))
}

/// `e ⇒ f`: every perfect matching containing `e` also contains `f`.
pub fn depends_on(g: &Graph, e: EdgeId, f: EdgeId) -> Result<bool> {
    for x in [e, f] {
        if g.edge(x).is_none() {
            return Err(Error::UnknownEdge(x));
        }
    }
    require_mc(g)?;
    let d = Dense::new(g);
    Ok(depends(&d, d.edge_index(e), d.edge_index(f)))
}

/// `m[i][j]` is `e_i ⇒ e_j`, edges indexed by position in `g.edges()`.
pub fn dependence_matrix(g: &Graph, config: &Config) -> Result<Vec<Vec<bool>>> {
    config.check(g)?;
    require_mc(g)?;
    let d = Dense::new(g);
    Ok((0..d.m())
        .map(|i| (0..d.m()).map(|j| depends(&d, i, j)).collect())
        .collect())
}

fn classes_from(g: &Graph, dep: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let m = g.size();
    let mut class = vec![usize::MAX; m];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        if class[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..m).filter(|&j| dep[i][j] && dep[j][i]).collect();
        for &j in &members {
            class[j] = out.len();
        }
        out.push(members);
    }
    out
}

fn ids(g: &Graph, idx: &[usize]) -> Vec<EdgeId> {
    idx.iter().map(|&i| g.edges()[i].id).collect()
}

/// Classes of mutual dependence, ordered by smallest edge id.
pub fn equivalence_classes(g: &Graph, config: &Config) -> Result<Vec<Vec<EdgeId>>> {
    let dep = dependence_matrix(g, config)?;
    Ok(classes_from(g, &dep).iter().map(|c| ids(g, c)).collect())
}

/// Sources of the condensed dependence digraph: classes `Q` such that no
/// edge outside `Q` depends on an edge of `Q`.
pub fn minimal_classes(g: &Graph, config: &Config) -> Result<Vec<Vec<EdgeId>>> {
    let dep = dependence_matrix(g, config)?;
    Ok(minimal_from(g, &dep))
}

fn minimal_from(g: &Graph, dep: &[Vec<bool>]) -> Vec<Vec<EdgeId>> {
    let classes = classes_from(g, dep);
    classes
        .iter()
        .filter(|c| {
            (0..g.size())
                .filter(|x| !c.contains(x))
                .all(|x| c.iter().all(|&q| !dep[x][q]))
        })
        .map(|c| ids(g, c))
        .collect()
}

/// Minimal classes induced by `e`: sources containing an edge that depends
/// on `e`.
pub fn minimal_classes_induced_by(
    g: &Graph,
    e: EdgeId,
    config: &Config,
) -> Result<Vec<Vec<EdgeId>>> {
    let dep = dependence_matrix(g, config)?;
    let ei = g.edge_index(e).ok_or(Error::UnknownEdge(e))?;
    Ok(minimal_from(g, &dep)
        .into_iter()
        .filter(|q| q.iter().any(|f| dep[g.edge_index(*f).unwrap()][ei]))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovableKind {
    Single,
    Doubleton,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RemovableClass {
    pub edges: Vec<EdgeId>,
    pub kind: RemovableKind,
}

/// Removable edges and removable doubletons, ordered by edge ids.
pub fn removable_classes(g: &Graph) -> Result<Vec<RemovableClass>> {
    require_mc(g)?;
    let d = Dense::new(g);
    let full = d.full_mask();
    let m = d.m();
    let without = |drop: &[usize]| {
        let mut s = EdgeSet::full(m);
        for &x in drop {
            s.remove(x);
        }
        d.is_matching_covered(full, Some(&s))
    };
    let removable: Vec<bool> = (0..m).map(|i| without(&[i])).collect();
    let mut out: Vec<RemovableClass> = (0..m)
        .filter(|&i| removable[i])
        .map(|i| RemovableClass {
            edges: vec![d.eids[i]],
            kind: RemovableKind::Single,
        })
        .collect();
    // a removable doubleton is a pair of mutually dependent edges
    for i in 0..m {
        if removable[i] {
            continue;
        }
        for j in i + 1..m {
            if !removable[j] && depends(&d, i, j) && depends(&d, j, i) && without(&[i, j]) {
                out.push(RemovableClass {
                    edges: vec![d.eids[i], d.eids[j]],
                    kind: RemovableKind::Doubleton,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn removable_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    Ok(removable_classes(g)?
        .into_iter()
        .filter(|c| c.kind == RemovableKind::Single)
        .map(|c| c.edges[0])
        .collect())
}

/// A path added in one ear step: its vertex sequence and its edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl EarPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn internal(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// `(G_1, …, G_r)` with `G_1 = K2` and `G_r = G`; `ears[i]` turns
/// `graphs[i]` into `graphs[i + 1]` and holds one path (single ear) or two
/// (double ear).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub graphs: Vec<Graph>,
    pub ears: Vec<Vec<EarPath>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalShape {
    /// The third graph is a bi-subdivision of `K4`.
    ThirdIsK4,
    /// The fourth graph is a bi-subdivision of `C6bar`.
    FourthIsC6bar,
}

impl EarDecomposition {
    pub fn double_ears(&self) -> usize {
        self.ears.iter().filter(|e| e.len() == 2).count()
    }

    pub fn shape(&self) -> Option<CanonicalShape> {
        use crate::families::{c6bar, k4};
        if self.graphs.len() > 2 && is_bi_subdivision_of(&self.graphs[2], &k4()) {
            return Some(CanonicalShape::ThirdIsK4);
        }
        if self.graphs.len() > 3 && is_bi_subdivision_of(&self.graphs[3], &c6bar()) {
            return Some(CanonicalShape::FourthIsC6bar);
        }
        None
    }

    /// Rechecks every step against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let (first, last) = match (self.graphs.first(), self.graphs.last()) {
            (Some(a), Some(b)) => (a, b),
            _ => return false,
        };
        if first.order() != 2 || first.size() != 1 || last != g {
            return false;
        }
        if self.ears.len() + 1 != self.graphs.len() {
            return false;
        }
        self.graphs
            .iter()
            .all(|h| g.contains_subgraph(h) && is_matching_covered(h))
            && self.ears.iter().enumerate().all(|(i, ear)| {
                let (small, big) = (&self.graphs[i], &self.graphs[i + 1]);
                removes_to(big, ear) == Some(small.clone())
                    && (1..=2).contains(&ear.len())
                    && ear.iter().all(|p| p.len() % 2 == 1 && is_path_in(big, p))
            })
    }
}

fn is_path_in(g: &Graph, p: &EarPath) -> bool {
    p.vertices.len() == p.edges.len() + 1
        && p.edges.iter().enumerate().all(|(k, &e)| match g.edge(e) {
            Some(edge) => {
                edge.touches(p.vertices[k]) && edge.other(p.vertices[k]) == p.vertices[k + 1]
            }
            None => false,
        })
        && p.internal().iter().all(|&v| g.degree(v) == 2)
}

fn removes_to(g: &Graph, ear: &[EarPath]) -> Option<Graph> {
    let edges: Vec<EdgeId> = ear.iter().flat_map(|p| p.edges.iter().copied()).collect();
    let inner: Vec<VertexId> = ear
        .iter()
        .flat_map(|p| p.internal().iter().copied())
        .collect();
    g.delete_edges(&edges).ok()?.delete_vertices(&inner).ok()
}

/// Maximal paths through degree-two vertices with distinct ends; single
/// edges between vertices of higher degree included.
fn threads(g: &Graph) -> Vec<EarPath> {
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for e in g.edges() {
        if used.contains(&e.id) {
            continue;
        }
        // walk back to a branch vertex, then forward
        let (mut start, mut edge) = (e.u, *e);
        let mut guard = 0;
        while g.degree(start) == 2 && guard <= g.size() {
            let prev = *g.incident(start).find(|f| f.id != edge.id).unwrap();
            start = prev.other(start);
            edge = prev;
            guard += 1;
        }
        if guard > g.size() {
            continue;
        }
        let mut vertices = vec![start];
        let mut edges = vec![edge.id];
        let mut cur = edge.other(start);
        vertices.push(cur);
        while g.degree(cur) == 2 {
            let next = *g.incident(cur).find(|f| f.id != edge.id).unwrap();
            edge = next;
            cur = next.other(cur);
            edges.push(edge.id);
            vertices.push(cur);
        }
        used.extend(edges.iter().copied());
        if vertices[0] != cur {
            out.push(EarPath { vertices, edges });
        }
    }
    out
}

/// Reverse greedy construction: repeatedly delete a removable single ear,
/// or failing that a removable double ear, down to `K2`.
pub fn ear_decomposition(g: &Graph, config: &Config) -> Result<EarDecomposition> {
    config.check(g)?;
    require_mc(g)?;
    let mut graphs = vec![g.clone()];
    let mut ears = Vec::new();
    let mut cur = g.clone();
    while cur.size() > 1 {
        let ear = next_ear(&cur).ok_or(Error::EarSearchStuck(cur.order()))?;
        cur = removes_to(&cur, &ear).expect("ear lies in the graph");
        graphs.push(cur.clone());
        ears.push(ear);
    }
    graphs.reverse();
    ears.reverse();
    Ok(EarDecomposition { graphs, ears })
}

fn next_ear(g: &Graph) -> Option<Vec<EarPath>> {
    if g.is_cycle() {
        // an even cycle is K2 plus one ear
        let e = g.edges()[0];
        let mut vertices = vec![e.v];
        let mut edges = Vec::new();
        let mut prev = e.id;
        let mut cur = e.v;
        while cur != e.u {
            let next = *g.incident(cur).find(|f| f.id != prev).unwrap();
            edges.push(next.id);
            prev = next.id;
            cur = next.other(cur);
            vertices.push(cur);
        }
        return Some(vec![EarPath { vertices, edges }]);
    }
    let cands: Vec<EarPath> = threads(g)
        .into_iter()
        .filter(|p| p.len() % 2 == 1)
        .collect();
    let ok = |ear: &[EarPath]| {
        removes_to(g, ear).is_some_and(|h| h.order() >= 2 && is_matching_covered(&h))
    };
    for p in &cands {
        if ok(std::slice::from_ref(p)) {
            return Some(vec![p.clone()]);
        }
    }
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            let pair = [cands[i].clone(), cands[j].clone()];
            let disjoint = pair[0]
                .internal()
                .iter()
                .all(|v| !pair[1].internal().contains(v));
            if disjoint && ok(&pair) {
                return Some(pair.to_vec());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::PmTable;
    use crate::families;
    use crate::iso::are_isomorphic_simplified;
    use crate::matching::enumerate_perfect_matchings;
    use rand::SeedableRng;

    fn cfg() -> Config {
        Config::default()
    }

    fn kinds(g: &Graph) -> (usize, usize) {
        let cs = removable_classes(g).unwrap();
        let singles = cs
            .iter()
            .filter(|c| c.kind == RemovableKind::Single)
            .count();
        (singles, cs.len() - singles)
    }

    #[test]
    fn bi_subdivision_arithmetic() {
        let k4 = families::k4();
        let h = bi_subdivide(&k4, &BTreeMap::from([(EdgeId(0), 2)])).unwrap();
        assert_eq!((h.order(), h.size()), (6, 8));
        let pm = |g: &Graph| enumerate_perfect_matchings(g, &cfg()).unwrap().len();
        assert_eq!(pm(&h), pm(&k4));
        assert_eq!(bi_subdivide(&k4, &BTreeMap::new()).unwrap(), k4);
        assert!(matches!(
            bi_subdivide(&k4, &BTreeMap::from([(EdgeId(1), 3)])),
            Err(Error::OddSubdivision { .. })
        ));
        assert!(is_bi_subdivision_of(&h, &k4));
        assert!(!is_bi_subdivision_of(&h, &families::c6bar()));
    }

    #[test]
    fn bi_contraction_examples() {
        let k4 = families::k4();
        let h = bi_subdivide(&k4, &BTreeMap::from([(EdgeId(2), 2)])).unwrap();
        let deg2: Vec<_> = bi_contractible(&h);
        assert_eq!(deg2.len(), 2);
        let once = bi_contract(&h, deg2[0]).unwrap().graph;
        assert!(are_isomorphic(&once, &k4).is_some());

        let c6 = families::cycle(6).unwrap();
        let c4 = bi_contract(&c6, VertexId(0)).unwrap().graph;
        assert!(are_isomorphic(&c4, &families::cycle(4).unwrap()).is_some());

        assert!(matches!(
            bi_contract(&k4, VertexId(0)),
            Err(Error::NotBiContractible { degree: 3, .. })
        ));
        let c2 = families::cycle(3).unwrap();
        assert!(bi_contract(&c2, VertexId(0)).is_err());
    }

    #[test]
    fn retract_examples() {
        let c6bar = families::c6bar();
        let plan = BTreeMap::from([(EdgeId(0), 2), (EdgeId(4), 4)]);
        let h = bi_subdivide(&c6bar, &plan).unwrap();
        assert!(are_isomorphic(&retract(&h).unwrap(), &c6bar).is_some());
        assert_eq!(
            retract(&families::petersen()).unwrap(),
            families::petersen()
        );
        assert_eq!(retract(&families::cycle(6).unwrap()), Err(Error::EvenCycle));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let a = retract_random(&h, &mut rng).unwrap();
        let b = retract_random(&h, &mut rng).unwrap();
        assert!(are_isomorphic(&a, &b).is_some());
    }

    #[test]
    fn bi_split_round_trip() {
        let w5 = families::odd_wheel(5).unwrap();
        let hub = *w5.vertices().last().unwrap();
        let star: Vec<EdgeId> = w5.incident(hub).map(|e| e.id).collect();
        let s = bi_split(&w5, hub, &star[..2]).unwrap();
        assert_eq!(
            (s.graph.order(), s.graph.size()),
            (w5.order() + 2, w5.size() + 2)
        );
        assert!(is_matching_covered(&s.graph));
        let back = bi_contract(&s.graph, s.v0).unwrap().graph;
        assert!(are_isomorphic(&back, &w5).is_some());
        assert!(matches!(
            bi_split(&w5, hub, &star[..1]),
            Err(Error::InvalidSplit(_))
        ));
    }

    #[test]
    fn dependence_matches_enumeration() {
        for g in [
            families::bicorn(),
            families::cycle(6).unwrap(),
            families::c6bar(),
        ] {
            let dep = dependence_matrix(&g, &cfg()).unwrap();
            let t = PmTable::new(&g, &cfg()).unwrap();
            for i in 0..g.size() {
                for j in 0..g.size() {
                    let brute = t
                        .pms
                        .iter()
                        .filter(|m| m.contains(i))
                        .all(|m| m.contains(j));
                    assert_eq!(dep[i][j], brute);
                }
            }
        }
    }

    #[test]
    fn even_cycle_has_two_classes() {
        for k in [2, 3, 4] {
            let c = families::cycle(2 * k).unwrap();
            let classes = equivalence_classes(&c, &cfg()).unwrap();
            assert_eq!(classes.len(), 2);
            assert!(classes.iter().all(|c| c.len() == k));
        }
    }

    #[test]
    fn removable_class_counts() {
        assert_eq!(kinds(&families::bicorn()), (1, 2));
        assert_eq!(kinds(&families::c6bar()), (0, 3));
        assert_eq!(kinds(&families::k4()), (0, 3));
        assert_eq!(kinds(&families::petersen()), (15, 0));
        assert_eq!(kinds(&families::tricorn()).0, 3);
    }

    #[test]
    fn doubletons_of_bricks_leave_bipartite_graphs() {
        for g in [families::k4(), families::c6bar(), families::bicorn()] {
            for c in removable_classes(&g).unwrap() {
                if c.kind == RemovableKind::Doubleton {
                    let h = g.delete_edges(&c.edges).unwrap();
                    let side = h.bipartition().unwrap();
                    let pos = |v| h.vertex_index(v).unwrap();
                    let (e, f) = (g.edge(c.edges[0]).unwrap(), g.edge(c.edges[1]).unwrap());
                    assert_eq!(side[pos(e.u)], side[pos(e.v)]);
                    assert_eq!(side[pos(f.u)], side[pos(f.v)]);
                    assert_ne!(side[pos(e.u)], side[pos(f.u)]);
                }
            }
        }
    }

    #[test]
    fn minimal_classes_of_brick_are_small() {
        for g in [
            families::bicorn(),
            families::tricorn(),
            families::odd_wheel(5).unwrap(),
        ] {
            for c in equivalence_classes(&g, &cfg()).unwrap() {
                assert!(c.len() <= 2);
            }
            let mins = minimal_classes(&g, &cfg()).unwrap();
            let rem: Vec<_> = removable_classes(&g)
                .unwrap()
                .into_iter()
                .map(|c| c.edges)
                .collect();
            for r in &rem {
                assert!(mins.contains(r));
            }
        }
    }

    #[test]
    fn ear_decompositions() {
        let c6 = families::cycle(6).unwrap();
        let d = ear_decomposition(&c6, &cfg()).unwrap();
        assert_eq!(d.graphs.len(), 2);
        assert!(d.verify(&c6));

        let k33 = families::complete_bipartite(6).unwrap();
        let d = ear_decomposition(&k33, &cfg()).unwrap();
        assert_eq!(d.double_ears(), 0);
        assert!(d.verify(&k33));

        let c6bar = families::c6bar();
        let d = ear_decomposition(&c6bar, &cfg()).unwrap();
        assert!(d.verify(&c6bar));
        assert!(d.double_ears() >= 1);
        assert!(d.shape().is_some());

        let k4 = families::k4();
        let d = ear_decomposition(&k4, &cfg()).unwrap();
        assert_eq!(d.shape(), Some(CanonicalShape::ThirdIsK4));

        for g in [
            families::petersen(),
            families::bicorn(),
            families::tricorn(),
        ] {
            let d = ear_decomposition(&g, &cfg()).unwrap();
            assert!(d.verify(&g));
            assert!(d.double_ears() >= 1);
        }
    }

    #[test]
    fn retract_of_bi_subdivided_brick() {
        let p = families::petersen();
        let plan = BTreeMap::from([(EdgeId(3), 2)]);
        let h = bi_subdivide(&p, &plan).unwrap();
        assert!(are_isomorphic_simplified(&retract(&h).unwrap(), &p).is_some());
    }
}
