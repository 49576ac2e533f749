//! Theorem-verification harness over a corpus.
//!
//! Each theorem maps to a pure per-instance check. Instances run in parallel
//! and the report lists outcomes in corpus order, so a report depends only on
//! the corpus parameters apart from `runtime_ms` and `timestamp`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use mcg_core::conformal::{
    find_conformal_minor, is_j_free, j_free_via_bricks, ConformalEmbedding, Pattern,
};
use mcg_core::cuts::{
    classify, is_brick_by_elp, is_separating, is_tight, tight_cut_decomposition,
    tight_cut_decomposition_with, CutChoice,
};
use mcg_core::families;
use mcg_core::iso::are_isomorphic;
use mcg_core::matching::find_v0_matching;
use mcg_core::matching::{enumerate_perfect_matchings, has_perfect_matching, maximum_matching};
use mcg_core::shore::cut_of;
use mcg_core::solidity::{is_odd_intercyclic, is_solid, robust_cuts, rw_certificate};
use mcg_core::thin::{
    is_norine_thomas, is_norine_thomas_plus, reduce_to_terminal, strictly_thin_edges, thin_edges,
};
use mcg_core::transforms::{
    bi_subdivide, dependence_matrix, minimal_classes, removable_edges, retract, retract_random,
};
use mcg_core::{Classification, Config, EdgeId, Graph, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{Corpus, CorpusEntry, CorpusSummary};
use crate::report::EdgeListJson;

/// Random decomposition orders per graph.
pub const DECOMPOSITION_ORDERS: usize = 10;
/// Random bi-contraction orders per graph.
pub const RETRACT_ORDERS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    MatchingOracle,
    DecompositionUniqueness,
    ElpConsistency,
    BipartiteSeparatingTight,
    RwEquivalence,
    MainTheorem,
    JFreeViaBricks,
    ReductionChains,
    RetractUniqueness,
    SolidC6barFree,
    CubicSolidOddIntercyclic,
    ThreeRobustCuts,
    ThinInheritance,
    CubicRetractIndexZero,
    SplitterChains,
    V0MatchingLemma,
    OddWheelLemma,
    BraceEdgesRemovable,
    SubdivisionRetract,
    K4OrC6barBased,
    SolidImplications,
}

impl Theorem {
    pub const ALL: [Theorem; 21] = [
        Theorem::MatchingOracle,
        Theorem::DecompositionUniqueness,
        Theorem::ElpConsistency,
        Theorem::BipartiteSeparatingTight,
        Theorem::RwEquivalence,
        Theorem::MainTheorem,
        Theorem::JFreeViaBricks,
        Theorem::ReductionChains,
        Theorem::RetractUniqueness,
        Theorem::SolidC6barFree,
        Theorem::CubicSolidOddIntercyclic,
        Theorem::ThreeRobustCuts,
        Theorem::ThinInheritance,
        Theorem::CubicRetractIndexZero,
        Theorem::SplitterChains,
        Theorem::V0MatchingLemma,
        Theorem::OddWheelLemma,
        Theorem::BraceEdgesRemovable,
        Theorem::SubdivisionRetract,
        Theorem::K4OrC6barBased,
        Theorem::SolidImplications,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::MatchingOracle => "matching-oracle",
            Theorem::DecompositionUniqueness => "decomposition-uniqueness",
            Theorem::ElpConsistency => "elp-consistency",
            Theorem::BipartiteSeparatingTight => "bipartite-separating-tight",
            Theorem::RwEquivalence => "rw-equivalence",
            Theorem::MainTheorem => "main-theorem",
            Theorem::JFreeViaBricks => "j-free-via-bricks",
            Theorem::ReductionChains => "reduction-chains",
            Theorem::RetractUniqueness => "retract-uniqueness",
            Theorem::SolidC6barFree => "solid-c6bar-free",
            Theorem::CubicSolidOddIntercyclic => "cubic-solid-odd-intercyclic",
            Theorem::ThreeRobustCuts => "three-robust-cuts",
            Theorem::ThinInheritance => "thin-inheritance",
            Theorem::CubicRetractIndexZero => "cubic-retract-index-zero",
            Theorem::SplitterChains => "splitter-chains",
            Theorem::V0MatchingLemma => "v0-matching-lemma",
            Theorem::OddWheelLemma => "odd-wheel-lemma",
            Theorem::BraceEdgesRemovable => "brace-edges-removable",
            Theorem::SubdivisionRetract => "subdivision-retract",
            Theorem::K4OrC6barBased => "k4-or-c6bar-based",
            Theorem::SolidImplications => "solid-implications",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::MatchingOracle => {
                "blossom perfect-matching verdicts equal exhaustive enumeration"
            }
            Theorem::DecompositionUniqueness => {
                "random tight cut decompositions give the same bricks and braces"
            }
            Theorem::ElpConsistency => "brick by definition iff brick by barrier criterion",
            Theorem::BipartiteSeparatingTight => {
                "in bipartite matching covered graphs separating cuts are tight"
            }
            Theorem::RwEquivalence => {
                "a brick is nonsolid iff it has two disjoint odd cycles with perfectly matchable complement"
            }
            Theorem::MainTheorem => {
                "every nonsolid matching covered graph has a basic nonsolid brick as a conformal minor"
            }
            Theorem::JFreeViaBricks => {
                "a graph is J-free iff its bricks are, for cubic bricks J"
            }
            Theorem::ReductionChains => {
                "strictly thin chains end in Norine-Thomas bricks, thin chains in K4, C6bar or Petersen"
            }
            Theorem::RetractUniqueness => "the retract does not depend on the bi-contraction order",
            Theorem::SolidC6barFree => {
                "a simple nonplanar brick other than Petersen is solid iff C6bar-free"
            }
            Theorem::CubicSolidOddIntercyclic => "cubic solid bricks are odd-intercyclic",
            Theorem::ThreeRobustCuts => {
                "nonsolid simple bricks other than Petersen have only 3-robust cuts, Petersen only 5-robust"
            }
            Theorem::ThinInheritance => {
                "if the retract of G - e is J-based for a thin edge e then G is J-based"
            }
            Theorem::CubicRetractIndexZero => {
                "a strictly thin edge with cubic retract has index 0 and G - e is that retract"
            }
            Theorem::SplitterChains => {
                "a simple brick outside NT+ reaches each of its bicorn, tricorn, Petersen minors by strictly thin deletions"
            }
            Theorem::V0MatchingLemma => {
                "each edge at v0 outside a v0-matching induces a singleton minimal class disjoint from it"
            }
            Theorem::OddWheelLemma => {
                "a simple solid brick is a v0-wheel or has a removable edge outside the v0-matching and the star of v0"
            }
            Theorem::BraceEdgesRemovable => "every edge of a brace of order six or more is removable",
            Theorem::SubdivisionRetract => "the retract of a bi-subdivision of a brick is the brick",
            Theorem::K4OrC6barBased => "every nonbipartite matching covered graph is K4-based or C6bar-based",
            Theorem::SolidImplications => "odd-intercyclic bricks are solid and solid graphs are C6bar-free",
        }
    }

    /// Findings-only theorems never fail.
    pub fn mode(self) -> Mode {
        match self {
            Theorem::CubicSolidOddIntercyclic | Theorem::SplitterChains => Mode::Findings,
            _ => Mode::Checked,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for Theorem {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Checked,
    Findings,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub instance: String,
    pub graph: EdgeListJson,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub statement: &'static str,
    pub mode: Mode,
    pub corpus: CorpusSummary,
    /// Instances the check applied to.
    pub checked: usize,
    pub failures: Vec<Record>,
    pub findings: Vec<Record>,
    pub runtime_ms: u128,
    pub timestamp: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Outcome {
    Skip,
    Pass,
    Finding(Value),
    Fail(Value),
}

fn fail(e: impl fmt::Display) -> Outcome {
    Outcome::Fail(json!({ "error": e.to_string() }))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Per-instance seed, so results do not depend on evaluation order.
fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn verify(theorem: Theorem, corpus: &Corpus, config: &Config) -> VerificationReport {
    let start = Instant::now();
    let seed = corpus.params.seed;
    let outcomes: Vec<Outcome> = corpus
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| check(theorem, e, i, seed, config))
        .collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    for (e, o) in corpus.entries.iter().zip(outcomes) {
        let record = |detail| Record {
            instance: e.id.clone(),
            graph: (&e.graph).into(),
            detail,
        };
        match o {
            Outcome::Skip => continue,
            Outcome::Pass => {}
            Outcome::Finding(d) => findings.push(record(d)),
            Outcome::Fail(d) if theorem.mode() == Mode::Findings => findings.push(record(d)),
            Outcome::Fail(d) => failures.push(record(d)),
        }
        checked += 1;
    }
    VerificationReport {
        theorem,
        statement: theorem.statement(),
        mode: theorem.mode(),
        corpus: corpus.summary(),
        checked,
        failures,
        findings,
        runtime_ms: start.elapsed().as_millis(),
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    }
}

fn check(t: Theorem, e: &CorpusEntry, index: usize, seed: u64, config: &Config) -> Outcome {
    let g = &e.graph;
    match t {
        Theorem::MatchingOracle => matching_oracle(g, index, config),
        Theorem::DecompositionUniqueness => decomposition_uniqueness(g, index, seed, config),
        Theorem::ElpConsistency => {
            let def = tri!(classify(g, config)) == Classification::Brick;
            let elp = tri!(is_brick_by_elp(g, config));
            if def == elp {
                Outcome::Pass
            } else {
                Outcome::Fail(json!({ "by_definition": def, "by_elp": elp }))
            }
        }
        Theorem::BipartiteSeparatingTight => bipartite_separating_tight(g, config),
        Theorem::RwEquivalence => rw_equivalence(g, config),
        Theorem::MainTheorem => main_theorem(g, config),
        Theorem::JFreeViaBricks => j_free_consistency(g, config),
        Theorem::ReductionChains => reduction_chains(g, config),
        Theorem::RetractUniqueness => retract_uniqueness(g, index, seed),
        Theorem::SolidC6barFree => solid_c6bar_free(g, config),
        Theorem::CubicSolidOddIntercyclic => cubic_solid_odd_intercyclic(g, config),
        Theorem::ThreeRobustCuts => three_robust_cuts(g, config),
        Theorem::ThinInheritance => thin_inheritance(g, config),
        Theorem::CubicRetractIndexZero => cubic_retract_index_zero(g, config),
        Theorem::SplitterChains => splitter_chains(g, config),
        Theorem::V0MatchingLemma => v0_matching_lemma(g, config),
        Theorem::OddWheelLemma => odd_wheel_lemma(g, config),
        Theorem::BraceEdgesRemovable => brace_edges_removable(g, config),
        Theorem::SubdivisionRetract => subdivision_retract(g, index, config),
        Theorem::K4OrC6barBased => k4_or_c6bar_based(g, config),
        Theorem::SolidImplications => solid_implications(g, config),
    }
}

/// Checks `g` and `g` minus one edge, so that graphs without a perfect
/// matching are exercised too.
fn matching_oracle(g: &Graph, index: usize, config: &Config) -> Outcome {
    let mut graphs = vec![g.clone()];
    if g.size() > 0 {
        let e = g.edges()[index * 7 % g.size()].id;
        graphs.push(tri!(g.delete_edges(&[e])));
    }
    for (k, h) in graphs.iter().enumerate() {
        let m = maximum_matching(h);
        let pms = tri!(enumerate_perfect_matchings(h, config));
        let blossom = m.is_perfect(h);
        if !m.is_valid(h) || blossom != !pms.is_empty() || has_perfect_matching(h) != blossom {
            return Outcome::Fail(json!({
                "variant": k,
                "blossom_perfect": blossom,
                "enumerated": pms.len(),
            }));
        }
    }
    Outcome::Pass
}

fn is_decomposable(g: &Graph, config: &Config) -> Result<bool, mcg_core::Error> {
    Ok(classify(g, config)? == Classification::Neither)
}

fn decomposition_uniqueness(g: &Graph, index: usize, seed: u64, config: &Config) -> Outcome {
    if !tri!(is_decomposable(g, config)) {
        return Outcome::Skip;
    }
    let base = tri!(tight_cut_decomposition(g, config));
    let mut rng = instance_rng(seed, index);
    for round in 0..DECOMPOSITION_ORDERS {
        let d = tri!(tight_cut_decomposition_with(
            g,
            config,
            CutChoice::Random(&mut rng)
        ));
        if d.b != base.b || !d.same_pieces(&base) {
            return Outcome::Fail(json!({
                "round": round,
                "b": [base.b, d.b],
                "pieces": [base.pieces.len(), d.pieces.len()],
            }));
        }
    }
    Outcome::Pass
}

fn bipartite_separating_tight(g: &Graph, config: &Config) -> Outcome {
    if !g.is_bipartite() {
        return Outcome::Skip;
    }
    let vs = g.vertices();
    let n = vs.len();
    // shores containing the first vertex cover every cut once
    for mask in (1u64..1 << n).step_by(2) {
        if mask.count_ones() % 2 == 0 || mask == (1 << n) - 1 {
            continue;
        }
        let x: Vec<VertexId> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i])
            .collect();
        let c = tri!(cut_of(g, &x));
        let sep = tri!(is_separating(g, &c));
        let (tight, _) = tri!(is_tight(g, &c, config));
        if sep != tight {
            return Outcome::Fail(json!({ "shore": x, "separating": sep, "tight": tight }));
        }
    }
    Outcome::Pass
}

fn is_brick(g: &Graph, config: &Config) -> Result<bool, mcg_core::Error> {
    Ok(classify(g, config)? == Classification::Brick)
}

fn rw_equivalence(g: &Graph, config: &Config) -> Outcome {
    if !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    let v = tri!(is_solid(g, config));
    let cert = tri!(rw_certificate(g, config));
    let cert_ok = cert.as_ref().is_none_or(|c| c.verify(g));
    let witness_ok = match &v.witness {
        None => true,
        Some(c) => tri!(is_separating(g, c)) && !tri!(is_tight(g, c, config)).0 && !c.is_trivial(),
    };
    if v.solid == cert.is_none() && cert_ok && witness_ok && v.solid == v.witness.is_none() {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "solid": v.solid,
            "certificate": cert.is_some(),
            "certificate_valid": cert_ok,
            "witness_valid": witness_ok,
        }))
    }
}

fn main_theorem(g: &Graph, config: &Config) -> Outcome {
    if tri!(is_solid(g, config)).solid {
        return Outcome::Skip;
    }
    for p in Pattern::BASIC_NONSOLID {
        if let Some(emb) = tri!(find_conformal_minor(g, p.graph(), config)) {
            if emb.verify(g) {
                return Outcome::Pass;
            }
            return Outcome::Fail(json!({ "pattern": p, "error": "embedding does not verify" }));
        }
    }
    Outcome::Fail(json!({ "error": "no basic nonsolid brick is a conformal minor" }))
}

fn j_free_consistency(g: &Graph, config: &Config) -> Outcome {
    if !tri!(is_decomposable(g, config)) {
        return Outcome::Skip;
    }
    for p in [Pattern::K4, Pattern::C6bar] {
        let via = tri!(j_free_via_bricks(g, p.graph(), config));
        let direct = tri!(is_j_free(g, p.graph(), config));
        if via != direct {
            return Outcome::Fail(json!({ "pattern": p, "via_bricks": via, "direct": direct }));
        }
    }
    Outcome::Pass
}

fn reduction_chains(g: &Graph, config: &Config) -> Outcome {
    if !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    let loose = tri!(reduce_to_terminal(g, false, config));
    if !loose.verify(config) {
        return Outcome::Fail(json!({ "strict": false, "error": "chain does not verify" }));
    }
    if g.is_simple() {
        let strict = tri!(reduce_to_terminal(g, true, config));
        let last = strict.bricks.last().unwrap();
        if !strict.verify(config) || is_norine_thomas(last).is_none() {
            return Outcome::Fail(json!({ "strict": true, "error": "chain does not verify" }));
        }
    }
    Outcome::Pass
}

fn retract_uniqueness(g: &Graph, index: usize, seed: u64) -> Outcome {
    let Ok(r) = retract(g) else {
        return Outcome::Skip;
    };
    if g.vertices().iter().all(|&v| g.degree(v) != 2) {
        return Outcome::Skip;
    }
    let mut rng = instance_rng(seed, index);
    for round in 0..RETRACT_ORDERS {
        let q = tri!(retract_random(g, &mut rng));
        if are_isomorphic(&r, &q).is_none() {
            return Outcome::Fail(json!({ "round": round, "orders": [r.order(), q.order()] }));
        }
    }
    Outcome::Pass
}

fn solid_c6bar_free(g: &Graph, config: &Config) -> Outcome {
    if !g.is_simple()
        || !tri!(is_brick(g, config))
        || are_isomorphic(g, &families::petersen()).is_some()
    {
        return Outcome::Skip;
    }
    let solid = tri!(is_solid(g, config)).solid;
    let free = tri!(is_j_free(g, Pattern::C6bar.graph(), config));
    match (solid, free) {
        (true, false) => Outcome::Fail(json!({ "solid": true, "c6bar_free": false })),
        (false, true) => {
            // more than 3n - 6 edges proves nonplanarity
            let nonplanar = g.size() + 6 > 3 * g.order();
            let detail = json!({
                "solid": false,
                "c6bar_free": true,
                "certainly_nonplanar": nonplanar,
            });
            if nonplanar {
                Outcome::Fail(detail)
            } else {
                Outcome::Finding(detail)
            }
        }
        _ => Outcome::Pass,
    }
}

fn cubic_solid_odd_intercyclic(g: &Graph, config: &Config) -> Outcome {
    if !g.is_regular(3) || !tri!(is_brick(g, config)) || !tri!(is_solid(g, config)).solid {
        return Outcome::Skip;
    }
    if tri!(is_odd_intercyclic(g, config)) {
        Outcome::Pass
    } else {
        Outcome::Finding(json!({ "odd_intercyclic": false }))
    }
}

fn three_robust_cuts(g: &Graph, config: &Config) -> Outcome {
    if !g.is_simple() || !tri!(is_brick(g, config)) || tri!(is_solid(g, config)).solid {
        return Outcome::Skip;
    }
    let cuts = tri!(robust_cuts(g, config));
    let chars: Vec<usize> = cuts.iter().map(|r| r.characteristic).collect();
    let want = if are_isomorphic(g, &families::petersen()).is_some() {
        5
    } else {
        3
    };
    if !chars.is_empty() && chars.iter().all(|&k| k == want) {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({ "expected": want, "characteristics": chars }))
    }
}

fn thin_inheritance(g: &Graph, config: &Config) -> Outcome {
    if !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    let reports = tri!(thin_edges(g, config));
    for p in [Pattern::K4, Pattern::C6bar] {
        if tri!(find_conformal_minor(g, p.graph(), config)).is_some() {
            continue;
        }
        // g is J-free, so every thin retract must be too
        for r in reports.iter().filter(|r| r.thin) {
            let h = r
                .retract_after
                .as_ref()
                .expect("thin edges carry their retract");
            if tri!(find_conformal_minor(h, p.graph(), config)).is_some() {
                return Outcome::Fail(json!({ "pattern": p, "edge": r.edge }));
            }
        }
    }
    Outcome::Pass
}

fn cubic_retract_index_zero(g: &Graph, config: &Config) -> Outcome {
    if !g.is_simple() || !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    for r in tri!(strictly_thin_edges(g, config)) {
        let h = r
            .retract_after
            .as_ref()
            .expect("thin edges carry their retract");
        if !h.is_regular(3) {
            continue;
        }
        let minus = tri!(g.delete_edges(&[r.edge]));
        if r.index != Some(0) || are_isomorphic(&minus, h).is_none() {
            return Outcome::Fail(json!({ "edge": r.edge, "index": r.index }));
        }
    }
    Outcome::Pass
}

/// Depth-first search for a strictly thin chain from `g` down to `j`,
/// keeping only J-based bricks. `emb` is an embedding of `j` in `g`; edges it
/// avoids are tried first, since deleting them usually keeps `j`. `seen`
/// holds visited isomorphism classes.
fn chain_to(
    g: &Graph,
    j: &Graph,
    emb: &ConformalEmbedding,
    seen: &mut Vec<Graph>,
    config: &Config,
) -> mcg_core::Result<bool> {
    if are_isomorphic(g, j).is_some() {
        return Ok(true);
    }
    if g.order() < j.order() || g.size() <= j.size() {
        return Ok(false);
    }
    let used: BTreeSet<EdgeId> = emb
        .edge_map
        .values()
        .flatten()
        .chain(&emb.residual_matching.edges)
        .copied()
        .collect();
    let mut thin = strictly_thin_edges(g, config)?;
    thin.sort_by_key(|r| used.contains(&r.edge));
    for r in thin {
        let h = r
            .retract_after
            .expect("thin edges carry their retract")
            .compact();
        if seen.iter().any(|s| are_isomorphic(s, &h).is_some()) {
            continue;
        }
        seen.push(h.clone());
        if let Some(next) = find_conformal_minor(&h, j, config)? {
            if chain_to(&h, j, &next, seen, config)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn splitter_chains(g: &Graph, config: &Config) -> Outcome {
    if !g.is_simple() || !tri!(is_brick(g, config)) || is_norine_thomas_plus(g).is_some() {
        return Outcome::Skip;
    }
    let mut missing = Vec::new();
    let mut based = 0;
    for p in [Pattern::Bicorn, Pattern::Tricorn, Pattern::Petersen] {
        let Some(emb) = tri!(find_conformal_minor(g, p.graph(), config)) else {
            continue;
        };
        based += 1;
        if !tri!(chain_to(g, p.graph(), &emb, &mut Vec::new(), config)) {
            missing.push(p);
        }
    }
    match (based, missing.is_empty()) {
        (0, _) => Outcome::Skip,
        (_, true) => Outcome::Pass,
        _ => Outcome::Finding(json!({ "no_chain_to": missing })),
    }
}

fn v0_matching_lemma(g: &Graph, config: &Config) -> Outcome {
    if !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    let dep = tri!(dependence_matrix(g, config));
    let minimal = tri!(minimal_classes(g, config));
    let idx = |e| g.edge_index(e).expect("edge of g");
    for &v0 in g.vertices() {
        let Some(m) = tri!(find_v0_matching(g, v0)) else {
            continue;
        };
        for e in g.incident(v0).filter(|e| !m.contains(e.id)) {
            let ok = minimal
                .iter()
                .any(|q| q.len() == 1 && !m.contains(q[0]) && dep[idx(q[0])][idx(e.id)]);
            if !ok {
                return Outcome::Fail(json!({ "v0": v0, "edge": e.id }));
            }
        }
    }
    Outcome::Pass
}

fn is_wheel_with_hub(g: &Graph, v0: VertexId) -> bool {
    g.degree(v0) == g.order() - 1
        && g.neighbors(v0).len() == g.order() - 1
        && g.delete_vertices(&[v0]).is_ok_and(|h| h.is_cycle())
}

fn odd_wheel_lemma(g: &Graph, config: &Config) -> Outcome {
    if !g.is_simple() || !tri!(is_brick(g, config)) || !tri!(is_solid(g, config)).solid {
        return Outcome::Skip;
    }
    let removable = tri!(removable_edges(g));
    for &v0 in g.vertices() {
        let Some(m0) = tri!(find_v0_matching(g, v0)) else {
            continue;
        };
        let outside = removable
            .iter()
            .any(|&e| !m0.contains(e) && !g.edge(e).expect("edge of g").touches(v0));
        if !outside && !is_wheel_with_hub(g, v0) {
            return Outcome::Fail(json!({ "v0": v0 }));
        }
    }
    Outcome::Pass
}

fn brace_edges_removable(g: &Graph, config: &Config) -> Outcome {
    if g.order() < 6 || tri!(classify(g, config)) != Classification::Brace {
        return Outcome::Skip;
    }
    let removable = tri!(removable_edges(g));
    if removable.len() == g.size() {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({ "removable": removable.len(), "edges": g.size() }))
    }
}

fn subdivision_retract(g: &Graph, index: usize, config: &Config) -> Outcome {
    if !tri!(is_brick(g, config)) {
        return Outcome::Skip;
    }
    let m = g.size();
    let a = g.edges()[index % m].id;
    let b = g.edges()[(index / 2 + 1) % m].id;
    let mut plan = BTreeMap::new();
    *plan.entry(a).or_insert(0) += 2;
    *plan.entry(b).or_insert(0) += 4;
    let h = tri!(bi_subdivide(g, &plan));
    let r = tri!(retract(&h));
    if are_isomorphic(&r, g).is_some() {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({ "plan": plan }))
    }
}

fn k4_or_c6bar_based(g: &Graph, config: &Config) -> Outcome {
    if g.is_bipartite() {
        return Outcome::Skip;
    }
    for p in [Pattern::K4, Pattern::C6bar] {
        if tri!(find_conformal_minor(g, p.graph(), config)).is_some() {
            return Outcome::Pass;
        }
    }
    Outcome::Fail(json!({ "error": "neither K4 nor C6bar is a conformal minor" }))
}

fn solid_implications(g: &Graph, config: &Config) -> Outcome {
    let solid = tri!(is_solid(g, config)).solid;
    if tri!(is_brick(g, config)) && !solid && tri!(is_odd_intercyclic(g, config)) {
        return Outcome::Fail(json!({ "odd_intercyclic": true, "solid": false }));
    }
    if solid && tri!(find_conformal_minor(g, Pattern::C6bar.graph(), config)).is_some() {
        return Outcome::Fail(json!({ "solid": true, "c6bar_free": false }));
    }
    Outcome::Pass
}
