//! Tight and separating cuts, ELP cuts, the tight cut decomposition and the
//! brick/brace classification.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dense::{Dense, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso::are_isomorphic_simplified;
use crate::matching::{all_barriers, is_matching_covered, Matching};
use crate::shore::{contract_shore, cut_of, Cut};
use crate::Config;

/// The perfect matchings of a graph, as edge bitsets, for fast cut queries.
pub(crate) struct PmTable {
    pub d: Dense,
    pub pms: Vec<EdgeSet>,
}

impl PmTable {
    pub fn new(g: &Graph, config: &Config) -> Result<Self> {
        config.check(g)?;
        let d = Dense::new(g);
        let pms = d.perfect_matchings(d.full_mask());
        Ok(PmTable { d, pms })
    }

    pub fn shore_mask(&self, shore: &[VertexId]) -> u64 {
        self.d.vertex_mask(shore.iter().copied())
    }

    /// `|M ∩ ∂(X)|` for each perfect matching `M`.
    pub fn meets(&self, mask: u64) -> Vec<usize> {
        let cut = self.d.cut_edges(mask);
        self.pms
            .iter()
            .map(|m| m.intersection_count(&cut))
            .collect()
    }

    pub fn is_tight(&self, mask: u64) -> bool {
        let cut = self.d.cut_edges(mask);
        self.pms.iter().all(|m| m.intersection_count(&cut) == 1)
    }

    /// Separating test through per-edge matchings meeting the cut once.
    /// Only meaningful when the graph is matching covered.
    pub fn is_separating(&self, mask: u64) -> bool {
        let cut = self.d.cut_edges(mask);
        let mut covered = EdgeSet::new(self.d.m());
        for m in &self.pms {
            if m.intersection_count(&cut) == 1 {
                covered.union_with(m);
            }
        }
        covered.count() == self.d.m()
    }

    /// Smallest `|M ∩ C|` among perfect matchings meeting `C` at least thrice.
    pub fn characteristic(&self, mask: u64) -> Option<usize> {
        self.meets(mask).into_iter().filter(|&k| k >= 3).min()
    }

    pub fn matching(&self, i: usize) -> Matching {
        Matching::new(self.d.edge_ids(&self.pms[i]))
    }

    pub fn cut(&self, g: &Graph, mask: u64) -> Cut {
        let shore: Vec<VertexId> = (0..self.d.n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.d.vids[i])
            .collect();
        cut_of(g, &shore).expect("mask is a proper nonempty shore")
    }

    /// Odd shores containing vertex index 0, one per `{X, X̄}` pair, in
    /// increasing mask order.
    pub fn odd_shores(&self, nontrivial_only: bool) -> impl Iterator<Item = u64> + '_ {
        let n = self.d.n;
        let full = self.d.full_mask();
        let top = if n == 0 { 0 } else { 1u64 << (n - 1) };
        (0..top).filter_map(move |rest| {
            let mask = rest << 1 | 1;
            let k = mask.count_ones() as usize;
            if k % 2 == 0 || mask == full || k >= n {
                return None;
            }
            if nontrivial_only && (k == 1 || n - k == 1) {
                return None;
            }
            Some(mask)
        })
    }
}

fn require_mc(g: &Graph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// Whether every perfect matching meets `cut` exactly once. When not, the
/// witness meets it in three or more edges.
pub fn is_tight(g: &Graph, cut: &Cut, config: &Config) -> Result<(bool, Option<Matching>)> {
    let t = PmTable::new(g, config)?;
    let mask = t.shore_mask(cut.shore());
    let meets = t.meets(mask);
    match meets.iter().position(|&k| k != 1) {
        None => Ok((true, None)),
        Some(i) => {
            // the parity of |M ∩ C| equals that of |X|; odd shores give k >= 3
            Ok((false, Some(t.matching(i))))
        }
    }
}

/// Separating by definition: both cut-contractions are matching covered.
pub fn is_separating(g: &Graph, cut: &Cut) -> Result<bool> {
    let a = contract_shore(g, cut.shore())?;
    let b = contract_shore(g, &cut.complement(g))?;
    Ok(is_matching_covered(&a.graph) && is_matching_covered(&b.graph))
}

/// Separating through per-edge matchings: for every edge `e` a perfect
/// matching `M_e ∋ e` with `|C ∩ M_e| = 1`. Returns the witnesses, or `None`
/// when some edge has no such matching.
pub fn separating_witnesses(
    g: &Graph,
    cut: &Cut,
    config: &Config,
) -> Result<Option<Vec<(EdgeId, Matching)>>> {
    let t = PmTable::new(g, config)?;
    let meets = t.meets(t.shore_mask(cut.shore()));
    let mut out = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        match (0..t.pms.len()).find(|&j| meets[j] == 1 && t.pms[j].contains(i)) {
            Some(j) => out.push((e.id, t.matching(j))),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutClassification {
    pub cut: Cut,
    pub separating: bool,
    pub tight: bool,
    /// A perfect matching meeting the cut in three or more edges.
    pub non_tight_witness: Option<Matching>,
    /// Per-edge matchings meeting the cut once, when separating.
    pub separating_witnesses: Vec<(EdgeId, Matching)>,
}

impl CutClassification {
    /// Revalidates both witnesses against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let cut = self.cut.edges();
        let tight_ok = match &self.non_tight_witness {
            Some(m) => !self.tight && m.is_perfect(g) && m.meet(cut) >= 3,
            None => self.tight,
        };
        let sep_ok = !self.separating
            || (self.separating_witnesses.len() == g.size()
                && self
                    .separating_witnesses
                    .iter()
                    .all(|(e, m)| m.is_perfect(g) && m.contains(*e) && m.meet(cut) == 1));
        tight_ok && sep_ok && (!self.tight || self.separating)
    }
}

pub fn classify_cut(g: &Graph, cut: &Cut, config: &Config) -> Result<CutClassification> {
    require_mc(g)?;
    let (tight, witness) = is_tight(g, cut, config)?;
    let sep = separating_witnesses(g, cut, config)?;
    Ok(CutClassification {
        cut: cut.clone(),
        separating: sep.is_some(),
        tight,
        non_tight_witness: witness,
        separating_witnesses: sep.unwrap_or_default(),
    })
}

/// All separating cuts with odd shores, one shore per pair (the one holding
/// the smallest vertex), trivial cuts included.
pub fn enumerate_separating_cuts(g: &Graph, config: &Config) -> Result<Vec<Cut>> {
    require_mc(g)?;
    let t = PmTable::new(g, config)?;
    Ok(t.odd_shores(false)
        .filter(|&m| t.is_separating(m))
        .map(|m| t.cut(g, m))
        .collect())
}

/// Nontrivial tight cuts by exhaustive odd-shore scan.
pub fn nontrivial_tight_cuts(g: &Graph, config: &Config) -> Result<Vec<Cut>> {
    require_mc(g)?;
    let t = PmTable::new(g, config)?;
    Ok(t.odd_shores(true)
        .filter(|&m| t.is_tight(m))
        .map(|m| t.cut(g, m))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElpKind {
    BarrierCut,
    TwoSeparationCut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElpCut {
    pub cut: Cut,
    pub kind: ElpKind,
}

/// Barrier cuts of nontrivial barriers and 2-separation cuts, each checked
/// tight, deduplicated by shore pair and sorted by canonical shore.
pub fn elp_cuts(g: &Graph, config: &Config) -> Result<Vec<ElpCut>> {
    require_mc(g)?;
    let t = PmTable::new(g, config)?;
    let mut found: Vec<(Vec<VertexId>, ElpKind)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |shore: Vec<VertexId>, kind: ElpKind, found: &mut Vec<_>| {
        let cut = cut_of(g, &shore).expect("proper shore");
        let canon = cut.canonical_shore(g);
        if cut.is_trivial() || !seen.insert(canon.clone()) {
            return;
        }
        found.push((canon, kind));
    };

    for b in all_barriers(g, config)? {
        if b.vertices.len() < 2 {
            continue;
        }
        for k in &b.odd_components {
            push(k.clone(), ElpKind::BarrierCut, &mut found);
        }
    }

    let vs = g.vertices();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (u, v) = (vs[i], vs[j]);
            let rest: BTreeSet<VertexId> =
                vs.iter().copied().filter(|&w| w != u && w != v).collect();
            let comps = g.components_within(&rest);
            if comps.len() < 2 || comps.iter().any(|c| c.len() % 2 == 1) {
                continue;
            }
            // nonempty proper subsets of the components, one per complement pair
            let c = comps.len();
            for pick in 1u64..(1u64 << (c - 1)) {
                let s: Vec<VertexId> = (0..c)
                    .filter(|&k| pick >> k & 1 == 1)
                    .flat_map(|k| comps[k].iter().copied())
                    .collect();
                for end in [u, v] {
                    let mut shore = s.clone();
                    shore.push(end);
                    push(shore, ElpKind::TwoSeparationCut, &mut found);
                }
            }
        }
    }

    let mut out = Vec::new();
    for (shore, kind) in found {
        let mask = t.shore_mask(&shore);
        debug_assert!(t.is_tight(mask), "ELP cut must be tight");
        if t.is_tight(mask) {
            out.push(ElpCut {
                cut: cut_of(g, &shore)?,
                kind,
            });
        }
    }
    out.sort_by(|a, b| a.cut.shore().cmp(b.cut.shore()));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Brick,
    Brace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub graph: Graph,
    pub kind: PieceKind,
}

/// The cuts used by a decomposition, as a binary tree over the pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutTree {
    Piece(usize),
    Split {
        /// Shore `X` in the graph being split.
        shore: Vec<VertexId>,
        /// Decomposition of `G/X̄`, which keeps `X`.
        inner: Box<CutTree>,
        /// Decomposition of `G/X`.
        outer: Box<CutTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionResult {
    pub pieces: Vec<Piece>,
    pub cut_tree: CutTree,
    /// Number of bricks.
    pub b: usize,
}

impl DecompositionResult {
    pub fn bricks(&self) -> impl Iterator<Item = &Graph> {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::Brick)
            .map(|p| &p.graph)
    }

    /// Same multiset of pieces up to isomorphism of the underlying simple
    /// graphs.
    pub fn same_pieces(&self, other: &DecompositionResult) -> bool {
        if self.pieces.len() != other.pieces.len() {
            return false;
        }
        let mut used = vec![false; other.pieces.len()];
        self.pieces.iter().all(|p| {
            let hit = other.pieces.iter().enumerate().position(|(i, q)| {
                !used[i]
                    && p.kind == q.kind
                    && are_isomorphic_simplified(&p.graph, &q.graph).is_some()
            });
            match hit {
                Some(i) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// How the decomposition picks the next cut.
pub enum CutChoice<'a> {
    /// The ELP cut with lexicographically smallest canonical shore.
    FirstElp,
    /// A uniformly random nontrivial tight cut (exhaustive scan).
    Random(&'a mut dyn rand::RngCore),
}

pub fn tight_cut_decomposition(g: &Graph, config: &Config) -> Result<DecompositionResult> {
    tight_cut_decomposition_with(g, config, CutChoice::FirstElp)
}

pub fn tight_cut_decomposition_with(
    g: &Graph,
    config: &Config,
    mut choice: CutChoice<'_>,
) -> Result<DecompositionResult> {
    config.check(g)?;
    require_mc(g)?;
    let mut pieces = Vec::new();
    let cut_tree = decompose(g, config, &mut choice, &mut pieces)?;
    let b = pieces.iter().filter(|p| p.kind == PieceKind::Brick).count();
    Ok(DecompositionResult {
        pieces,
        cut_tree,
        b,
    })
}

fn decompose(
    g: &Graph,
    config: &Config,
    choice: &mut CutChoice<'_>,
    pieces: &mut Vec<Piece>,
) -> Result<CutTree> {
    let shore = match choice {
        CutChoice::FirstElp => elp_cuts(g, config)?
            .into_iter()
            .map(|c| c.cut.canonical_shore(g))
            .min(),
        CutChoice::Random(rng) => {
            let cuts = nontrivial_tight_cuts(g, config)?;
            cuts.choose(rng).map(|c| {
                if rng.random_bool(0.5) {
                    c.shore().to_vec()
                } else {
                    c.complement(g)
                }
            })
        }
    };
    match shore {
        None => {
            let kind = if g.is_bipartite() {
                PieceKind::Brace
            } else {
                PieceKind::Brick
            };
            pieces.push(Piece {
                graph: g.clone(),
                kind,
            });
            Ok(CutTree::Piece(pieces.len() - 1))
        }
        Some(x) => {
            let cut = cut_of(g, &x)?;
            let keep_x = contract_shore(g, &cut.complement(g))?;
            let keep_rest = contract_shore(g, &x)?;
            let inner = decompose(&keep_x.graph, config, choice, pieces)?;
            let outer = decompose(&keep_rest.graph, config, choice, pieces)?;
            Ok(CutTree::Split {
                shore: x,
                inner: Box::new(inner),
                outer: Box::new(outer),
            })
        }
    }
}

/// `b(G)`.
pub fn brick_count(g: &Graph, config: &Config) -> Result<usize> {
    Ok(tight_cut_decomposition(g, config)?.b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Brick,
    Brace,
    Neither,
}

/// Brick or brace by definition: free of nontrivial tight cuts (exhaustive
/// scan), split by bipartiteness.
pub fn classify(g: &Graph, config: &Config) -> Result<Classification> {
    config.check(g)?;
    require_mc(g)?;
    let t = PmTable::new(g, config)?;
    if t.odd_shores(true).any(|m| t.is_tight(m)) {
        return Ok(Classification::Neither);
    }
    Ok(if g.is_bipartite() {
        Classification::Brace
    } else {
        Classification::Brick
    })
}

pub fn is_brick(g: &Graph, config: &Config) -> Result<bool> {
    Ok(classify(g, config)? == Classification::Brick)
}

/// The ELP criterion: nonbipartite, 3-connected, no barrier of two or more
/// vertices.
pub fn is_brick_by_elp(g: &Graph, config: &Config) -> Result<bool> {
    config.check(g)?;
    require_mc(g)?;
    if g.is_bipartite() || !g.is_k_connected(3) {
        return Ok(false);
    }
    Ok(all_barriers(g, config)?
        .iter()
        .all(|b| b.vertices.len() < 2))
}

pub fn is_near_brick(g: &Graph, config: &Config) -> Result<bool> {
    Ok(brick_count(g, config)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::iso::are_isomorphic;
    use crate::transforms::bi_subdivide;
    use rand::SeedableRng;
    use std::collections::BTreeMap;

    fn cfg() -> Config {
        Config::default()
    }

    fn triangle_cut(g: &Graph) -> Cut {
        for a in g.vertices() {
            for b in g.neighbors(*a) {
                for c in g.neighbors(b) {
                    if c != *a && g.multiplicity(*a, c) > 0 {
                        return cut_of(g, &[*a, b, c]).unwrap();
                    }
                }
            }
        }
        unreachable!()
    }

    fn k4_bisubdivided() -> Graph {
        bi_subdivide(&families::k4(), &BTreeMap::from([(EdgeId(0), 2)])).unwrap()
    }

    #[test]
    fn tightness_examples() {
        let k4 = families::k4();
        let trivial = cut_of(&k4, &[VertexId(0)]).unwrap();
        assert_eq!(is_tight(&k4, &trivial, &cfg()).unwrap(), (true, None));

        let c6bar = families::c6bar();
        let tri = triangle_cut(&c6bar);
        let (tight, w) = is_tight(&c6bar, &tri, &cfg()).unwrap();
        assert!(!tight);
        assert_eq!(w.unwrap().meet(tri.edges()), 3);

        let c6 = families::cycle(6).unwrap();
        let x = cut_of(&c6, &[VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        assert!(is_tight(&c6, &x, &cfg()).unwrap().0);
    }

    #[test]
    fn separating_examples_agree_across_routes() {
        let c6bar = families::c6bar();
        let tri = triangle_cut(&c6bar);
        assert!(is_separating(&c6bar, &tri).unwrap());
        let cls = classify_cut(&c6bar, &tri, &cfg()).unwrap();
        assert!(cls.separating && !cls.tight && cls.verify(&c6bar));

        let bicorn = families::bicorn();
        for cut in enumerate_separating_cuts(&bicorn, &cfg()).unwrap() {
            assert!(is_separating(&bicorn, &cut).unwrap());
        }
        let p = families::petersen();
        for v in p.vertices() {
            let c = cut_of(&p, &[*v]).unwrap();
            assert!(is_separating(&p, &c).unwrap());
            assert!(classify_cut(&p, &c, &cfg()).unwrap().verify(&p));
        }
    }

    #[test]
    fn splicing_cut_of_bicorn_is_separating() {
        let s = crate::shore::splice_default(
            &families::k4(),
            VertexId(0),
            &families::c6bar(),
            VertexId(0),
        )
        .unwrap();
        let cut = cut_of(&s.graph, &s.left_shore).unwrap();
        assert!(is_separating(&s.graph, &cut).unwrap());
        assert!(separating_witnesses(&s.graph, &cut, &cfg())
            .unwrap()
            .is_some());
    }

    #[test]
    fn separating_cut_enumeration() {
        let k4 = families::k4();
        let cuts = enumerate_separating_cuts(&k4, &cfg()).unwrap();
        assert_eq!(cuts.len(), 4);
        assert!(cuts.iter().all(|c| c.is_trivial()));

        let c6bar = families::c6bar();
        let cuts = enumerate_separating_cuts(&c6bar, &cfg()).unwrap();
        let nontrivial: Vec<_> = cuts.iter().filter(|c| !c.is_trivial()).collect();
        assert_eq!(cuts.len() - nontrivial.len(), 6);
        assert_eq!(nontrivial.len(), 1);

        let c6 = families::cycle(6).unwrap();
        let sep = enumerate_separating_cuts(&c6, &cfg()).unwrap();
        let t = PmTable::new(&c6, &cfg()).unwrap();
        for c in &sep {
            assert!(t.is_tight(t.shore_mask(c.shore())));
        }
    }

    #[test]
    fn elp_examples() {
        let g = k4_bisubdivided();
        let cuts = elp_cuts(&g, &cfg()).unwrap();
        assert!(!cuts.is_empty());
        assert!(elp_cuts(&families::k4(), &cfg()).unwrap().is_empty());

        let k4k33 = crate::shore::splice_default(
            &families::k4(),
            VertexId(0),
            &families::complete_bipartite(6).unwrap(),
            VertexId(0),
        )
        .unwrap()
        .graph;
        let cuts = elp_cuts(&k4k33, &cfg()).unwrap();
        let all = nontrivial_tight_cuts(&k4k33, &cfg()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].cut.edges(), all[0].edges());
    }

    #[test]
    fn decomposition_examples() {
        let c6 = families::cycle(6).unwrap();
        let d = tight_cut_decomposition(&c6, &cfg()).unwrap();
        assert_eq!(d.b, 0);
        assert!(d.pieces.iter().all(|p| p.kind == PieceKind::Brace));

        let bicorn = families::bicorn();
        let d = tight_cut_decomposition(&bicorn, &cfg()).unwrap();
        assert_eq!(d.b, 1);
        assert_eq!(d.pieces.len(), 1);
        assert!(matches!(d.cut_tree, CutTree::Piece(0)));

        let d = tight_cut_decomposition(&k4_bisubdivided(), &cfg()).unwrap();
        assert_eq!(d.b, 1);
        assert_eq!(d.pieces.len(), 2);
        let brick = d.bricks().next().unwrap();
        assert!(are_isomorphic_simplified(brick, &families::k4()).is_some());
        assert!(d.pieces.iter().any(|p| p.kind == PieceKind::Brace));
    }

    #[test]
    fn random_orders_agree() {
        let g = crate::shore::splice_default(
            &families::c6bar(),
            VertexId(0),
            &k4_bisubdivided(),
            VertexId(1),
        )
        .unwrap()
        .graph;
        let base = tight_cut_decomposition(&g, &cfg()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let d = tight_cut_decomposition_with(&g, &cfg(), CutChoice::Random(&mut rng)).unwrap();
            assert!(base.same_pieces(&d));
        }
    }

    #[test]
    fn classification_examples() {
        for g in [
            families::k4(),
            families::c6bar(),
            families::bicorn(),
            families::tricorn(),
            families::petersen(),
        ] {
            assert_eq!(classify(&g, &cfg()).unwrap(), Classification::Brick);
            assert!(is_brick_by_elp(&g, &cfg()).unwrap());
            assert!(is_near_brick(&g, &cfg()).unwrap());
        }
        let cube = families::biwheel(8).unwrap();
        assert_eq!(classify(&cube, &cfg()).unwrap(), Classification::Brace);
        assert_eq!(
            classify(&k4_bisubdivided(), &cfg()).unwrap(),
            Classification::Neither
        );
        assert!(!is_brick_by_elp(&k4_bisubdivided(), &cfg()).unwrap());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(classify(&p4, &cfg()), Err(Error::NotMatchingCovered));
    }

    #[test]
    fn contraction_of_c6bar_triangle_is_k4() {
        let g = families::c6bar();
        let tri = triangle_cut(&g);
        let h = contract_shore(&g, tri.shore()).unwrap();
        assert!(are_isomorphic(&h.graph, &families::k4()).is_some());
    }
}
