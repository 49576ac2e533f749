//! Conformal subgraphs, conformal minors with embedding certificates, and
//! matching minors.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cuts::{tight_cut_decomposition, PieceKind};
use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso::{are_isomorphic, automorphisms, fingerprint};
use crate::matching::{has_perfect_matching, is_matching_covered, Matching};
use crate::transforms::{bi_contract, is_bi_subdivision_of, minimal_classes};
use crate::{check_cap, Config};

/// `h` is a matching covered subgraph of `g` and `g - V(h)` has a perfect
/// matching. A complement of odd order answers `false` before `h` itself is
/// checked.
pub fn is_conformal_subgraph(g: &Graph, h: &Graph) -> Result<bool> {
    if !g.contains_subgraph(h) {
        return Err(Error::NotSubgraph);
    }
    if (g.order() - h.order()) % 2 == 1 {
        return Ok(false);
    }
    if !is_matching_covered(h) {
        return Err(Error::NotMatchingCovered);
    }
    Ok(has_perfect_matching(&g.delete_vertices(h.vertices())?))
}

/// A bi-subdivision of `pattern` inside `G` plus a perfect matching of the
/// rest of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformalEmbedding {
    pub pattern: Graph,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// For each pattern edge, the vertices of its odd path in `G`, from the
    /// image of the lower end to the image of the higher end.
    pub path_vertices: BTreeMap<EdgeId, Vec<VertexId>>,
    pub edge_map: BTreeMap<EdgeId, Vec<EdgeId>>,
    pub residual_matching: Matching,
}

impl ConformalEmbedding {
    /// The image subgraph `H`.
    pub fn image(&self, g: &Graph) -> Result<Graph> {
        let edges: Vec<EdgeId> = self.edge_map.values().flatten().copied().collect();
        let mut h = g.edge_subgraph(&edges)?;
        for &v in self.vertex_map.values() {
            if !h.has_vertex(v) {
                h.add_vertex_with_id(v);
            }
        }
        Ok(h)
    }

    /// Rechecks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let j = &self.pattern;
        let images: BTreeSet<VertexId> = self.vertex_map.values().copied().collect();
        if self.vertex_map.len() != j.order()
            || images.len() != j.order()
            || !images.iter().all(|&v| g.has_vertex(v))
        {
            return false;
        }
        let mut inner_seen = BTreeSet::new();
        for e in j.edges() {
            let (Some(vs), Some(es)) = (self.path_vertices.get(&e.id), self.edge_map.get(&e.id))
            else {
                return false;
            };
            if es.len() % 2 == 0 || vs.len() != es.len() + 1 {
                return false;
            }
            if vs[0] != self.vertex_map[&e.u] || vs[vs.len() - 1] != self.vertex_map[&e.v] {
                return false;
            }
            for (k, &id) in es.iter().enumerate() {
                match g.edge(id) {
                    Some(f) if f.touches(vs[k]) && f.other(vs[k]) == vs[k + 1] => {}
                    _ => return false,
                }
            }
            for &w in &vs[1..vs.len() - 1] {
                if images.contains(&w) || !inner_seen.insert(w) {
                    return false;
                }
            }
        }
        let all_edges: Vec<EdgeId> = self.edge_map.values().flatten().copied().collect();
        if all_edges.iter().collect::<BTreeSet<_>>().len() != all_edges.len() {
            return false;
        }
        let Ok(h) = self.image(g) else { return false };
        if !is_matching_covered(&h) {
            return false;
        }
        if j.vertices().iter().all(|&v| j.degree(v) >= 3) && !is_bi_subdivision_of(&h, j) {
            return false;
        }
        match g.delete_vertices(h.vertices()) {
            Ok(rest) => self.residual_matching.is_perfect(&rest),
            Err(_) => false,
        }
    }
}

struct Search {
    d: Dense,
    /// Pattern vertex indices in assignment order.
    order: Vec<usize>,
    /// `exceed[t]`: earlier positions whose image must be below this one.
    exceed: Vec<Vec<usize>>,
    /// Pattern edges routed at step `t`: (edge position, earlier vertex index).
    routes: Vec<Vec<(usize, usize)>>,
    jdeg: Vec<usize>,
    /// Pattern adjacency by index: (neighbour, edge position).
    jinc: Vec<Vec<(usize, usize)>>,
    phi: Vec<Option<usize>>,
    used: u64,
    direct: Vec<usize>,
    paths: Vec<Option<(Vec<usize>, Vec<usize>)>>,
    failed: HashSet<(usize, Vec<Option<usize>>, u64, Vec<usize>)>,
}

impl Search {
    fn new(g: &Graph, j: &Graph, autos: &[Vec<usize>]) -> Self {
        let d = Dense::new(g);
        let k = j.order();
        let jpairs = j.index_pairs();
        let mut jinc = vec![Vec::new(); k];
        for (i, &(a, b)) in jpairs.iter().enumerate() {
            jinc[a].push((b, i));
            jinc[b].push((a, i));
        }
        let jdeg: Vec<usize> = jinc.iter().map(Vec::len).collect();

        let mut order: Vec<usize> = Vec::new();
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = jinc[v].iter().filter(|(w, _)| placed[*w]).count();
                    (links, jdeg[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let pos: Vec<usize> = {
            let mut p = vec![0; k];
            for (t, &v) in order.iter().enumerate() {
                p[v] = t;
            }
            p
        };

        // stabiliser chain constraints
        let mut exceed = vec![Vec::new(); k];
        let mut stab: Vec<&Vec<usize>> = autos.iter().collect();
        for t in 0..k {
            let v = order[t];
            let orbit: BTreeSet<usize> = stab.iter().map(|p| p[v]).collect();
            for &w in &orbit {
                if w != v {
                    exceed[pos[w]].push(t);
                }
            }
            stab.retain(|p| p[v] == v);
        }

        let mut routes = vec![Vec::new(); k];
        for (t, &v) in order.iter().enumerate() {
            for &(w, e) in &jinc[v] {
                if pos[w] < t {
                    routes[t].push((e, w));
                }
            }
            routes[t].sort();
        }
        Search {
            d,
            order,
            exceed,
            routes,
            jdeg,
            jinc,
            phi: vec![None; k],
            used: 0,
            direct: Vec::new(),
            paths: vec![None; jpairs.len()],
            failed: HashSet::new(),
        }
    }

    fn stage(&mut self, t: usize) -> Option<Vec<usize>> {
        if t == self.order.len() {
            let rest = self.d.full_mask() & !self.used;
            let m = self.d.maximum_matching(rest, None);
            return (2 * m.len() == rest.count_ones() as usize).then_some(m);
        }
        let key = (t, self.phi.clone(), self.used, self.direct.clone());
        if self.failed.contains(&key) {
            return None;
        }
        let v = self.order[t];
        for c in 0..self.d.n {
            if self.used >> c & 1 == 1 || self.d.inc[c].len() < self.jdeg[v] {
                continue;
            }
            if self.exceed[t]
                .iter()
                .any(|&s| self.phi[self.order[s]].unwrap() > c)
            {
                continue;
            }
            self.phi[v] = Some(c);
            self.used |= 1 << c;
            if let Some(m) = self.route(t, 0) {
                return Some(m);
            }
            self.used &= !(1 << c);
            self.phi[v] = None;
        }
        self.failed.insert(key);
        None
    }

    /// Whether every placed branch vertex still has room for its pending
    /// pattern edges.
    fn capacity_ok(&self) -> bool {
        let free = self.d.full_mask() & !self.used;
        for (v, &img) in self.phi.iter().enumerate() {
            let Some(b) = img else { continue };
            let pending = self.jinc[v]
                .iter()
                .filter(|(w, _)| self.phi[*w].is_none())
                .count();
            if pending == 0 {
                continue;
            }
            let room = self.d.inc[b]
                .iter()
                .map(|&(x, _)| x)
                .filter(|&x| free >> x & 1 == 1)
                .collect::<BTreeSet<_>>()
                .len();
            if room < pending {
                return false;
            }
        }
        true
    }

    fn route(&mut self, t: usize, k: usize) -> Option<Vec<usize>> {
        if k == self.routes[t].len() {
            if !self.capacity_ok() {
                return None;
            }
            return self.stage(t + 1);
        }
        let (e, w) = self.routes[t][k];
        let a = self.phi[self.order[t]].unwrap();
        let b = self.phi[w].unwrap();
        for (verts, edges) in self.odd_paths(a, b) {
            let inner: u64 = verts[1..verts.len() - 1].iter().fold(0, |m, &x| m | 1 << x);
            let is_direct = edges.len() == 1;
            self.used |= inner;
            if is_direct {
                self.direct.push(edges[0]);
            }
            self.paths[e] = Some((verts, edges));
            if let Some(m) = self.route(t, k + 1) {
                return Some(m);
            }
            self.paths[e] = None;
            if is_direct {
                self.direct.pop();
            }
            self.used &= !inner;
        }
        None
    }

    /// Odd paths from `a` to `b` through free vertices, one per set of
    /// inner vertices.
    fn odd_paths(&self, a: usize, b: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        if let Some(&(_, e)) = self.d.inc[a]
            .iter()
            .find(|&&(x, e)| x == b && !self.direct.contains(&e))
        {
            seen.insert(0u64);
            out.push((vec![a, b], vec![e]));
        }
        let mut verts = vec![a];
        let mut edges = Vec::new();
        self.extend(b, 0, &mut verts, &mut edges, &mut seen, &mut out);
        out
    }

    fn extend(
        &self,
        b: usize,
        inner: u64,
        verts: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        seen: &mut HashSet<u64>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        let c = *verts.last().unwrap();
        let mut tried = 0u64;
        for &(x, e) in &self.d.inc[c] {
            // parallel edges lead to the same vertex sets
            if tried >> x & 1 == 1 {
                continue;
            }
            tried |= 1 << x;
            if x == b {
                if !edges.is_empty() && edges.len() % 2 == 0 && seen.insert(inner) {
                    let mut vs = verts.clone();
                    vs.push(b);
                    let mut es = edges.clone();
                    es.push(e);
                    out.push((vs, es));
                }
                continue;
            }
            if self.used >> x & 1 == 1 || inner >> x & 1 == 1 {
                continue;
            }
            verts.push(x);
            edges.push(e);
            self.extend(b, inner | 1 << x, verts, edges, seen, out);
            verts.pop();
            edges.pop();
        }
    }
}

/// Searches for a bi-subdivision of `j` that is a conformal subgraph of
/// `g`. Exhaustive within the embedding cap.
pub fn find_conformal_minor(
    g: &Graph,
    j: &Graph,
    config: &Config,
) -> Result<Option<ConformalEmbedding>> {
    check_cap(g, config.embedding_cap)?;
    if !is_matching_covered(j) {
        return Err(Error::NotMatchingCovered);
    }
    if j.order() > g.order()
        || (g.order() - j.order()) % 2 == 1
        || j.size() > g.size()
        || (g.is_bipartite() && !j.is_bipartite())
    {
        return Ok(None);
    }
    let autos = pattern_automorphisms(j);
    let mut s = Search::new(g, j, &autos);
    let Some(residual) = s.stage(0) else {
        return Ok(None);
    };
    let d = &s.d;
    let jv = j.vertices();
    let vertex_map = (0..j.order())
        .map(|v| (jv[v], d.vids[s.phi[v].unwrap()]))
        .collect();
    let mut path_vertices = BTreeMap::new();
    let mut edge_map = BTreeMap::new();
    for (i, e) in j.edges().iter().enumerate() {
        let (mut vs, mut es) = s.paths[i].clone().expect("all pattern edges routed");
        if d.vids[vs[0]] != d.vids[s.phi[j.vertex_index(e.u).unwrap()].unwrap()] {
            vs.reverse();
            es.reverse();
        }
        path_vertices.insert(e.id, vs.iter().map(|&x| d.vids[x]).collect());
        edge_map.insert(e.id, es.iter().map(|&x| d.eids[x]).collect());
    }
    let residual_matching = Matching::new(residual.iter().map(|&x| d.eids[x]).collect());
    Ok(Some(ConformalEmbedding {
        pattern: j.clone(),
        vertex_map,
        path_vertices,
        edge_map,
        residual_matching,
    }))
}

pub fn is_j_free(g: &Graph, j: &Graph, config: &Config) -> Result<bool> {
    Ok(find_conformal_minor(g, j, config)?.is_none())
}

/// J-freeness through the bricks of the tight cut decomposition. Only valid
/// for cubic bricks `j`.
pub fn j_free_via_bricks(g: &Graph, j: &Graph, config: &Config) -> Result<bool> {
    if !j.is_regular(3) || !crate::cuts::is_brick(j, config).unwrap_or(false) {
        return Err(Error::NotCubicBrick);
    }
    let d = tight_cut_decomposition(g, config)?;
    for p in &d.pieces {
        if p.kind == PieceKind::Brick && find_conformal_minor(&p.graph, j, config)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The fixed patterns used in conformal-minor questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    K4,
    C6bar,
    Bicorn,
    Tricorn,
    Petersen,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::K4,
        Pattern::C6bar,
        Pattern::Bicorn,
        Pattern::Tricorn,
        Pattern::Petersen,
    ];

    /// The four basic nonsolid bricks.
    pub const BASIC_NONSOLID: [Pattern; 4] = [
        Pattern::C6bar,
        Pattern::Bicorn,
        Pattern::Tricorn,
        Pattern::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K4 => "k4",
            Pattern::C6bar => "c6bar",
            Pattern::Bicorn => "bicorn",
            Pattern::Tricorn => "tricorn",
            Pattern::Petersen => "petersen",
        }
    }

    pub fn graph(self) -> &'static Graph {
        static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
        let all = GRAPHS.get_or_init(|| {
            vec![
                families::k4(),
                families::c6bar(),
                families::bicorn(),
                families::tricorn(),
                families::petersen(),
            ]
        });
        &all[self as usize]
    }

    pub fn automorphisms(self) -> &'static [Vec<usize>] {
        static AUTS: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
        &AUTS.get_or_init(|| {
            Pattern::ALL
                .iter()
                .map(|p| automorphisms(p.graph()))
                .collect()
        })[self as usize]
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn pattern_automorphisms(j: &Graph) -> Vec<Vec<usize>> {
    for p in Pattern::ALL {
        if p.graph() == j {
            return p.automorphisms().to_vec();
        }
    }
    automorphisms(j)
}

/// Whether `j` arises from `g` by deleting removable classes and
/// bi-contracting degree-two vertices, in any order. Breadth-first over
/// isomorphism classes; exhaustive within the cap.
pub fn is_matching_minor(g: &Graph, j: &Graph, config: &Config) -> Result<bool> {
    config.check(g)?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let target = fingerprint(j, false);
    let mut seen: Vec<(u64, Graph)> = Vec::new();
    let mut queue = VecDeque::from([g.clone()]);
    let fresh = |h: &Graph, seen: &mut Vec<(u64, Graph)>| {
        let f = fingerprint(h, false);
        if seen
            .iter()
            .any(|(x, s)| *x == f && are_isomorphic(s, h).is_some())
        {
            return false;
        }
        seen.push((f, h.clone()));
        true
    };
    fresh(g, &mut seen);
    while let Some(h) = queue.pop_front() {
        if fingerprint(&h, false) == target && are_isomorphic(&h, j).is_some() {
            return Ok(true);
        }
        if h.order() < j.order() || h.size() < j.size() {
            continue;
        }
        let mut next = Vec::new();
        for class in minimal_classes(&h, config)? {
            let r = h.delete_edges(&class)?;
            if r.is_connected() && r.size() >= j.size() {
                next.push(r);
            }
        }
        if h.order() >= 4 && h.order() > j.order() {
            for &v in h.vertices() {
                if h.degree(v) == 2 && h.neighbors(v).len() == 2 {
                    next.push(bi_contract(&h, v)?.graph);
                }
            }
        }
        for r in next {
            if fresh(&r, &mut seen) {
                queue.push_back(r);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::bi_split;

    fn cfg() -> Config {
        Config::default()
    }

    fn petersen_plus(u: u32, v: u32) -> Graph {
        let mut p = families::petersen();
        p.add_edge(VertexId(u), VertexId(v)).unwrap();
        p
    }

    fn found(g: &Graph, j: &Graph, autos: &[Vec<usize>]) -> bool {
        Search::new(g, j, autos).stage(0).is_some()
    }

    #[test]
    fn symmetry_pruning_keeps_verdicts() {
        let hosts = [
            families::petersen(),
            petersen_plus(0, 2),
            families::tricorn(),
            families::bicorn(),
            families::prism(10).unwrap(),
            families::staircase(8).unwrap(),
            families::mobius(8).unwrap(),
            families::odd_wheel(7).unwrap(),
        ];
        for p in [Pattern::K4, Pattern::C6bar, Pattern::Bicorn] {
            let j = p.graph();
            let id = vec![(0..j.order()).collect::<Vec<_>>()];
            for g in &hosts {
                if (g.order() - j.order()) % 2 == 1 || j.order() > g.order() {
                    continue;
                }
                assert_eq!(found(g, j, p.automorphisms()), found(g, j, &id), "{p}");
            }
        }
    }

    #[test]
    fn conformal_subgraph_examples() {
        let k4 = families::k4();
        assert!(is_conformal_subgraph(&k4, &k4).unwrap());
        let uv = k4.edge_subgraph(&[EdgeId(0)]).unwrap();
        assert!(is_conformal_subgraph(&k4, &uv).unwrap());
        let p = families::petersen();
        let ring: Vec<EdgeId> = p
            .edges()
            .iter()
            .filter(|e| e.u.0 < 5 && e.v.0 < 5)
            .map(|e| e.id)
            .collect();
        let outer = p.edge_subgraph(&ring).unwrap();
        assert_eq!((outer.order(), outer.size()), (5, 5));
        assert!(!is_conformal_subgraph(&p, &outer).unwrap());
        let path = k4.edge_subgraph(&[EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(path.order(), 3);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(
            is_conformal_subgraph(&p4, &p4),
            Err(Error::NotMatchingCovered)
        ));
    }

    #[test]
    fn petersen_landmarks() {
        let p = families::petersen();
        let emb = find_conformal_minor(&p, Pattern::K4.graph(), &cfg())
            .unwrap()
            .unwrap();
        assert!(emb.verify(&p));
        assert!(is_j_free(&p, Pattern::C6bar.graph(), &cfg()).unwrap());
        let pe = petersen_plus(0, 2);
        let emb = find_conformal_minor(&pe, Pattern::C6bar.graph(), &cfg())
            .unwrap()
            .unwrap();
        assert!(emb.verify(&pe));
    }

    #[test]
    fn self_embedding() {
        for pat in Pattern::ALL {
            let g = pat.graph();
            let emb = find_conformal_minor(g, g, &cfg()).unwrap().unwrap();
            assert!(emb.verify(g));
            assert!(emb.residual_matching.is_empty());
        }
    }

    #[test]
    fn tricorn_is_c6bar_free() {
        assert!(is_j_free(&families::tricorn(), Pattern::C6bar.graph(), &cfg()).unwrap());
        let pentagonal = families::prism(10).unwrap();
        assert!(!is_j_free(&pentagonal, Pattern::C6bar.graph(), &cfg()).unwrap());
    }

    #[test]
    fn bipartite_hosts_are_free() {
        let k33 = families::complete_bipartite(6).unwrap();
        assert!(is_j_free(&k33, Pattern::K4.graph(), &cfg()).unwrap());
        assert!(j_free_via_bricks(&k33, Pattern::K4.graph(), &cfg()).unwrap());
    }

    #[test]
    fn via_bricks_rejects_non_bricks() {
        let k33 = families::complete_bipartite(6).unwrap();
        assert_eq!(
            j_free_via_bricks(&families::k4(), &k33, &cfg()),
            Err(Error::NotCubicBrick)
        );
    }

    #[test]
    fn w5_matching_minor_not_conformal() {
        let w5 = families::odd_wheel(5).unwrap();
        let hub = *w5.vertices().last().unwrap();
        let star: Vec<EdgeId> = w5.incident(hub).map(|e| e.id).collect();
        let g = bi_split(&w5, hub, &star[..2]).unwrap().graph;
        assert_eq!(g.max_degree(), 4);
        assert!(is_matching_minor(&g, &w5, &cfg()).unwrap());
        assert!(find_conformal_minor(&g, &w5, &cfg()).unwrap().is_none());
    }

    #[test]
    fn cubic_patterns_agree_with_matching_minors() {
        let k4 = Pattern::K4.graph();
        for g in [
            families::bicorn(),
            families::c6bar(),
            families::prism(6).unwrap(),
        ] {
            assert_eq!(
                is_matching_minor(&g, k4, &cfg()).unwrap(),
                find_conformal_minor(&g, k4, &cfg()).unwrap().is_some()
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let big = families::prism(16).unwrap();
        assert!(matches!(
            find_conformal_minor(&big, Pattern::K4.graph(), &cfg()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
