//! Seeded corpus of matching covered graphs.
//!
//! Family members come first, then random cubic 2-connected graphs, random
//! `G(n, p)` graphs and unions of random perfect matchings, each kept only if
//! matching covered. Derived graphs (bi-subdivisions, edge additions,
//! splices and parallel edges) are built from what is already present.
//! Isomorphic duplicates are dropped, first occurrence wins.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use mcg_core::cuts::is_brick;
use mcg_core::families::FamilySpec;
use mcg_core::io::{parse_edge_list, write_edge_list};
use mcg_core::iso::{are_isomorphic, fingerprint};
use mcg_core::matching::is_matching_covered;
use mcg_core::shore::splice_default;
use mcg_core::transforms::bi_subdivide;
use mcg_core::{Config, EdgeId, Family, Graph, VertexId};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusParams {
    pub max_order: usize,
    pub seed: u64,
    /// Accepted samples per source, before deduplication.
    pub random_cubic: usize,
    pub random_gnp: usize,
    pub random_unions: usize,
    pub subdivisions: usize,
    pub additions: usize,
    pub splices: usize,
    pub parallels: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_order: 12,
            seed: 42,
            random_cubic: 120,
            random_gnp: 260,
            random_unions: 120,
            subdivisions: 90,
            additions: 90,
            splices: 90,
            parallels: 30,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Family,
    RandomCubic,
    RandomGnp,
    RandomUnion,
    BiSubdivision,
    EdgeAddition,
    Splice,
    ParallelEdge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub source: Source,
    pub family: Option<FamilySpec>,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<FamilySpec>,
    pub order: usize,
    pub size: usize,
    pub file: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub params: CorpusParams,
    pub entries: Vec<ManifestEntry>,
}

/// Short description recorded in verification reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub params: CorpusParams,
    pub graphs: usize,
    pub by_source: BTreeMap<Source, usize>,
}

pub struct Corpus {
    pub params: CorpusParams,
    pub entries: Vec<CorpusEntry>,
    index: BTreeMap<u64, Vec<usize>>,
}

impl Corpus {
    fn empty(params: CorpusParams) -> Self {
        Corpus {
            params,
            entries: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    /// A corpus holding exactly `entries`, without deduplication.
    pub fn from_entries(params: CorpusParams, entries: Vec<CorpusEntry>) -> Self {
        let mut index: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            index
                .entry(fingerprint(&e.graph, false))
                .or_default()
                .push(i);
        }
        Corpus {
            params,
            entries,
            index,
        }
    }

    /// Adds `g` unless an isomorphic graph is already present.
    fn push(&mut self, source: Source, family: Option<FamilySpec>, g: Graph) -> bool {
        let g = g.compact();
        let f = fingerprint(&g, false);
        let bucket = self.index.entry(f).or_default();
        if bucket
            .iter()
            .any(|&i| are_isomorphic(&self.entries[i].graph, &g).is_some())
        {
            return false;
        }
        bucket.push(self.entries.len());
        let id = match family {
            Some(s) => format!("{}-{}", s.family, s.param),
            None => format!("{}-{:04}", source_tag(source), self.entries.len()),
        };
        self.entries.push(CorpusEntry {
            id,
            source,
            family,
            graph: g,
        });
        true
    }

    pub fn summary(&self) -> CorpusSummary {
        let mut by_source = BTreeMap::new();
        for e in &self.entries {
            *by_source.entry(e.source).or_insert(0) += 1;
        }
        CorpusSummary {
            params: self.params.clone(),
            graphs: self.entries.len(),
            by_source,
        }
    }

    pub fn manifest(&self) -> Manifest {
        Manifest {
            params: self.params.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| ManifestEntry {
                    id: e.id.clone(),
                    source: e.source,
                    family: e.family,
                    order: e.graph.order(),
                    size: e.graph.size(),
                    file: format!("{}.txt", e.id),
                })
                .collect(),
        }
    }

    /// Writes one edge-list file per graph and `manifest.json`.
    pub fn write(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        let manifest = self.manifest();
        for (e, m) in self.entries.iter().zip(&manifest.entries) {
            fs::write(dir.join(&m.file), write_edge_list(&e.graph))?;
        }
        let json = serde_json::to_string_pretty(&manifest).map_err(io::Error::other)?;
        fs::write(dir.join("manifest.json"), json + "\n")
    }

    /// Reads a directory written by [`Corpus::write`].
    pub fn read(dir: &Path) -> io::Result<Corpus> {
        let text = fs::read_to_string(dir.join("manifest.json"))?;
        let manifest: Manifest = serde_json::from_str(&text).map_err(io::Error::other)?;
        let mut entries = Vec::new();
        for m in manifest.entries {
            let g = parse_edge_list(&fs::read_to_string(dir.join(&m.file))?).map_err(|e| {
                io::Error::new(io::ErrorKind::InvalidData, format!("{}: {e}", m.file))
            })?;
            entries.push(CorpusEntry {
                id: m.id,
                source: m.source,
                family: m.family,
                graph: g,
            });
        }
        Ok(Corpus::from_entries(manifest.params, entries))
    }
}

fn source_tag(s: Source) -> &'static str {
    match s {
        Source::Family => "family",
        Source::RandomCubic => "cubic",
        Source::RandomGnp => "gnp",
        Source::RandomUnion => "union",
        Source::BiSubdivision => "subdiv",
        Source::EdgeAddition => "plus",
        Source::Splice => "splice",
        Source::ParallelEdge => "parallel",
    }
}

fn even_orders(max: usize) -> Vec<usize> {
    (4..=max).step_by(2).collect()
}

/// Configuration-model cubic graph, or `None` if the pairing produced a loop
/// or a parallel edge.
fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<u32> = (0..3 * n as u32).map(|p| p / 3).collect();
    points.shuffle(rng);
    let mut g = Graph::with_order(n);
    for pair in points.chunks(2) {
        let (a, b) = (VertexId(pair[0]), VertexId(pair[1]));
        if a == b || g.multiplicity(a, b) > 0 {
            return None;
        }
        g.add_edge(a, b).ok()?;
    }
    Some(g)
}

fn random_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_order(n);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.random_bool(p) {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
        }
    }
    g
}

/// Union of `k` random perfect matchings; bipartite between the two halves
/// when asked.
fn random_union(n: usize, k: usize, bipartite: bool, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_order(n);
    let h = n as u32 / 2;
    let mut p: Vec<u32> = (0..n as u32).collect();
    for _ in 0..k {
        if bipartite {
            let mut right: Vec<u32> = (h..n as u32).collect();
            right.shuffle(rng);
            for (a, &b) in right.iter().enumerate() {
                g.add_edge(VertexId(a as u32), VertexId(b)).unwrap();
            }
        } else {
            p.shuffle(rng);
            for pair in p.chunks(2) {
                g.add_edge(VertexId(pair[0]), VertexId(pair[1])).unwrap();
            }
        }
    }
    g
}

/// Draws until `count` samples pass `accept`, giving up after `50 * count`
/// draws.
fn sample(
    c: &mut Corpus,
    rng: &mut ChaCha8Rng,
    count: usize,
    source: Source,
    mut draw: impl FnMut(&Corpus, &mut ChaCha8Rng) -> Option<Graph>,
) {
    let mut accepted = 0;
    let mut tries = 0;
    while accepted < count && tries < 50 * count.max(1) {
        tries += 1;
        if let Some(g) = draw(c, rng) {
            if g.order() <= c.params.max_order && is_matching_covered(&g) {
                accepted += 1;
                c.push(source, None, g);
            }
        }
    }
}

/// Generates the corpus; deterministic in `params`.
pub fn generate(params: &CorpusParams) -> Corpus {
    let mut c = Corpus::empty(params.clone());
    let max = params.max_order;
    for f in Family::ALL {
        for n in 2..=max {
            if let Some(p) = f.param_for_order(n) {
                let spec = FamilySpec::new(f, p);
                let g = spec.generate().expect("legal parameter");
                if is_matching_covered(&g) {
                    c.push(Source::Family, Some(spec), g);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let orders = even_orders(max);
    if orders.is_empty() {
        return c;
    }

    sample(
        &mut c,
        &mut rng,
        params.random_cubic,
        Source::RandomCubic,
        |_, rng| {
            let n = *orders.choose(rng).unwrap();
            random_cubic(n, rng).filter(|g| g.is_k_connected(2))
        },
    );
    sample(
        &mut c,
        &mut rng,
        params.random_gnp,
        Source::RandomGnp,
        |_, rng| {
            let n = *orders.choose(rng).unwrap();
            let p = rng.random_range(0.25..0.7);
            Some(random_gnp(n, p, rng))
        },
    );
    sample(
        &mut c,
        &mut rng,
        params.random_unions,
        Source::RandomUnion,
        |_, rng| {
            let n = *orders.choose(rng).unwrap();
            let k = rng.random_range(2..=4);
            let bipartite = rng.random_bool(0.5);
            Some(random_union(n, k, bipartite, rng)).filter(Graph::is_connected)
        },
    );

    let base = c.entries.len();
    sample(
        &mut c,
        &mut rng,
        params.subdivisions,
        Source::BiSubdivision,
        |c, rng| {
            let src = &c.entries[rng.random_range(0..base)].graph;
            let extra = if src.order() + 4 <= max && rng.random_bool(0.3) {
                2
            } else {
                1
            };
            if src.order() + 2 * extra > max {
                return None;
            }
            let mut plan = BTreeMap::new();
            for _ in 0..extra {
                let e: EdgeId = src.edges().choose(rng)?.id;
                *plan.entry(e).or_insert(0) += 2;
            }
            bi_subdivide(src, &plan).ok()
        },
    );
    sample(
        &mut c,
        &mut rng,
        params.additions,
        Source::EdgeAddition,
        |c, rng| {
            let mut g = c.entries[rng.random_range(0..base)].graph.clone();
            let vs = g.vertices().to_vec();
            let pair: Vec<VertexId> = vs.choose_multiple(rng, 2).copied().collect();
            if pair.len() < 2 || g.multiplicity(pair[0], pair[1]) > 0 {
                return None;
            }
            g.add_edge(pair[0], pair[1]).ok()?;
            Some(g)
        },
    );
    sample(
        &mut c,
        &mut rng,
        params.splices,
        Source::Splice,
        |c, rng| {
            let g1 = &c.entries[rng.random_range(0..base)].graph;
            let g2 = &c.entries[rng.random_range(0..base)].graph;
            if g1.order() + g2.order() - 2 > max {
                return None;
            }
            let u = *g1.vertices().choose(rng)?;
            let candidates: Vec<VertexId> = g2
                .vertices()
                .iter()
                .copied()
                .filter(|&v| g2.degree(v) == g1.degree(u))
                .collect();
            let v = *candidates.choose(rng)?;
            splice_default(g1, u, g2, v).ok().map(|s| s.graph)
        },
    );
    sample(
        &mut c,
        &mut rng,
        params.parallels,
        Source::ParallelEdge,
        |c, rng| {
            let mut g = c.entries[rng.random_range(0..base)].graph.clone();
            let e = *g.edges().choose(rng)?;
            g.add_edge(e.u, e.v).ok()?;
            Some(g)
        },
    );
    c
}

/// Indices of the corpus bricks, computed once per call.
pub fn brick_indices(c: &Corpus, config: &Config) -> Vec<usize> {
    c.entries
        .iter()
        .enumerate()
        .filter(|(_, e)| is_brick(&e.graph, config).unwrap_or(false))
        .map(|(i, _)| i)
        .collect()
}
