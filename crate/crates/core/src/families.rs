//! Generators and recognizers for named graphs and graph families.
//!
//! Size parameters are vertex counts, except for odd wheels where the
//! parameter is the rim length (`W_5` has six vertices).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::iso::are_isomorphic;
use crate::shore::splice_default;
use crate::transforms::removable_classes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    OddWheel,
    Biwheel,
    TruncatedBiwheel,
    TruncatedBiwheelPlus,
    Prism,
    Mobius,
    Staircase,
    K4,
    C6bar,
    Bicorn,
    Tricorn,
    Petersen,
    Cycle,
    CompleteBipartite,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::OddWheel,
        Family::Biwheel,
        Family::TruncatedBiwheel,
        Family::TruncatedBiwheelPlus,
        Family::Prism,
        Family::Mobius,
        Family::Staircase,
        Family::K4,
        Family::C6bar,
        Family::Bicorn,
        Family::Tricorn,
        Family::Petersen,
        Family::Cycle,
        Family::CompleteBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::OddWheel => "odd_wheel",
            Family::Biwheel => "biwheel",
            Family::TruncatedBiwheel => "truncated_biwheel",
            Family::TruncatedBiwheelPlus => "truncated_biwheel_plus",
            Family::Prism => "prism",
            Family::Mobius => "mobius",
            Family::Staircase => "staircase",
            Family::K4 => "k4",
            Family::C6bar => "c6bar",
            Family::Bicorn => "bicorn",
            Family::Tricorn => "tricorn",
            Family::Petersen => "petersen",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete_bipartite",
        }
    }

    /// Whether `param` is legal for this family.
    pub fn accepts(self, param: usize) -> bool {
        let even = param % 2 == 0;
        match self {
            Family::OddWheel => param >= 3 && !even,
            Family::Biwheel => even && param >= 8,
            Family::TruncatedBiwheel => even && param >= 6,
            Family::TruncatedBiwheelPlus => even && param >= 8,
            Family::Prism => even && param >= 6,
            Family::Mobius => even && param >= 4,
            Family::Staircase => even && param >= 6,
            Family::K4 => param == 4,
            Family::C6bar => param == 6,
            Family::Bicorn => param == 8,
            Family::Tricorn | Family::Petersen => param == 10,
            Family::Cycle => param >= 3,
            Family::CompleteBipartite => even && param >= 2,
        }
    }

    /// The parameter giving a member of order `n`, if one exists.
    pub fn param_for_order(self, n: usize) -> Option<usize> {
        let p = match self {
            Family::OddWheel => n.checked_sub(1)?,
            _ => n,
        };
        self.accepts(p).then_some(p)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub param: usize,
}

impl FamilySpec {
    pub fn new(family: Family, param: usize) -> Self {
        FamilySpec { family, param }
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::OddWheel => self.param + 1,
            _ => self.param,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        let p = self.param;
        if !self.family.accepts(p) {
            return Err(Error::IllegalParameter {
                family: self.family.name(),
                param: p,
            });
        }
        Ok(match self.family {
            Family::OddWheel => build_wheel(p),
            Family::Biwheel => build_biwheel(p),
            Family::TruncatedBiwheel => build_truncated_biwheel(p, false),
            Family::TruncatedBiwheelPlus => build_truncated_biwheel(p, true),
            Family::Prism => build_prism(p),
            Family::Mobius => build_mobius(p),
            Family::Staircase => build_staircase(p),
            Family::K4 => k4(),
            Family::C6bar => c6bar(),
            Family::Bicorn => bicorn(),
            Family::Tricorn => tricorn(),
            Family::Petersen => petersen(),
            Family::Cycle => build_cycle(p),
            Family::CompleteBipartite => build_complete_bipartite(p / 2),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.param)
    }
}

fn graph(n: usize, pairs: Vec<(u32, u32)>) -> Graph {
    Graph::from_edges(n, &pairs).expect("family constructions are loopless")
}

fn ring(vs: &[u32]) -> Vec<(u32, u32)> {
    (0..vs.len())
        .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
        .collect()
}

fn path(vs: &[u32]) -> Vec<(u32, u32)> {
    vs.windows(2).map(|w| (w[0], w[1])).collect()
}

fn build_cycle(n: usize) -> Graph {
    let vs: Vec<u32> = (0..n as u32).collect();
    graph(n, ring(&vs))
}

fn build_wheel(k: usize) -> Graph {
    let rim: Vec<u32> = (0..k as u32).collect();
    let mut e = ring(&rim);
    e.extend(rim.iter().map(|&v| (v, k as u32)));
    graph(k + 1, e)
}

fn build_biwheel(n: usize) -> Graph {
    let r = n - 2;
    let rim: Vec<u32> = (0..r as u32).collect();
    let (h, h2) = (r as u32, r as u32 + 1);
    let mut e = ring(&rim);
    for &v in &rim {
        e.push((v, if v % 2 == 0 { h } else { h2 }));
    }
    graph(n, e)
}

fn build_truncated_biwheel(n: usize, join_hubs: bool) -> Graph {
    let len = n - 2;
    let p: Vec<u32> = (0..len as u32).collect();
    let (h, h2) = (len as u32, len as u32 + 1);
    let mut e = path(&p);
    // h: v1, v3, ..., v_{2k-1} and v_{2k}; h': v1 and v2, v4, ..., v_{2k}
    for &v in &p {
        if v % 2 == 0 {
            e.push((v, h));
        }
    }
    e.push((len as u32 - 1, h));
    e.push((0, h2));
    for &v in &p {
        if v % 2 == 1 {
            e.push((v, h2));
        }
    }
    if join_hubs {
        e.push((h, h2));
    }
    graph(n, e)
}

fn build_prism(n: usize) -> Graph {
    let k = n / 2;
    let u: Vec<u32> = (0..k as u32).collect();
    let v: Vec<u32> = (k as u32..n as u32).collect();
    let mut e = ring(&u);
    e.extend(ring(&v));
    e.extend(u.iter().zip(&v).map(|(&a, &b)| (a, b)));
    graph(n, e)
}

fn build_mobius(n: usize) -> Graph {
    let k = n / 2;
    let u: Vec<u32> = (0..k as u32).collect();
    let v: Vec<u32> = (k as u32..n as u32).collect();
    let mut e = path(&u);
    e.extend(path(&v));
    e.extend(u.iter().zip(&v).map(|(&a, &b)| (a, b)));
    e.push((u[0], v[k - 1]));
    e.push((u[k - 1], v[0]));
    graph(n, e)
}

fn build_staircase(n: usize) -> Graph {
    let k = (n - 2) / 2;
    let u: Vec<u32> = (0..k as u32).collect();
    let v: Vec<u32> = (k as u32..2 * k as u32).collect();
    let (x, y) = (2 * k as u32, 2 * k as u32 + 1);
    let mut e = path(&u);
    e.extend(path(&v));
    e.extend(u.iter().zip(&v).map(|(&a, &b)| (a, b)));
    e.extend([(x, u[0]), (x, v[0]), (y, u[k - 1]), (y, v[k - 1]), (x, y)]);
    graph(n, e)
}

fn build_complete_bipartite(k: usize) -> Graph {
    let mut e = Vec::new();
    for a in 0..k as u32 {
        for b in 0..k as u32 {
            e.push((a, k as u32 + b));
        }
    }
    graph(2 * k, e)
}

pub fn k4() -> Graph {
    graph(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The triangular prism, built as the complement of the 6-cycle.
pub fn c6bar() -> Graph {
    let mut e = Vec::new();
    for a in 0..6u32 {
        for b in a + 1..6 {
            let d = b - a;
            if d != 1 && d != 5 {
                e.push((a, b));
            }
        }
    }
    graph(6, e)
}

/// `K4 ⊙ C6bar`; both are vertex-transitive so the splice is unique.
pub fn bicorn() -> Graph {
    splice_default(&k4(), VertexId(0), &c6bar(), VertexId(0))
        .expect("K4 and C6bar are cubic")
        .graph
        .compact()
}

/// `K4` spliced with the bicorn at an end of the bicorn's unique removable
/// edge. Should the two ends give different graphs, the one with exactly
/// three removable edges is taken.
pub fn tricorn() -> Graph {
    static TRICORN: OnceLock<Graph> = OnceLock::new();
    TRICORN
        .get_or_init(|| {
            let b = bicorn();
            let classes = removable_classes(&b).expect("the bicorn is matching covered");
            let edge = classes
                .iter()
                .find(|c| c.edges.len() == 1)
                .map(|c| b.edge(c.edges[0]).unwrap())
                .expect("the bicorn has a removable edge");
            let mut candidates = Vec::new();
            for end in [edge.u, edge.v] {
                let g = splice_default(&k4(), VertexId(0), &b, end)
                    .expect("cubic splice")
                    .graph
                    .compact();
                if candidates.iter().all(|c| are_isomorphic(c, &g).is_none()) {
                    candidates.push(g);
                }
            }
            if candidates.len() == 1 {
                return candidates.pop().unwrap();
            }
            candidates
                .into_iter()
                .find(|g| {
                    removable_classes(g)
                        .map(|cs| cs.iter().filter(|c| c.edges.len() == 1).count() == 3)
                        .unwrap_or(false)
                })
                .expect("one candidate splice has exactly three removable edges")
        })
        .clone()
}

/// Outer 5-cycle `0..5`, spokes `i — i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5u32 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, e)
}

pub fn odd_wheel(k: usize) -> Result<Graph> {
    FamilySpec::new(Family::OddWheel, k).generate()
}

pub fn biwheel(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::Biwheel, n).generate()
}

pub fn truncated_biwheel(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::TruncatedBiwheel, n).generate()
}

pub fn truncated_biwheel_plus(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::TruncatedBiwheelPlus, n).generate()
}

pub fn prism(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::Prism, n).generate()
}

pub fn mobius(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::Mobius, n).generate()
}

pub fn staircase(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::Staircase, n).generate()
}

pub fn cycle(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::Cycle, n).generate()
}

/// `K_{k,k}` given its order `2k`.
pub fn complete_bipartite(n: usize) -> Result<Graph> {
    FamilySpec::new(Family::CompleteBipartite, n).generate()
}

/// All family memberships of `g`, found by comparing against every family
/// member of the same order.
pub fn recognize(g: &Graph) -> Vec<FamilySpec> {
    Family::ALL
        .into_iter()
        .filter_map(|f| f.param_for_order(g.order()).map(|p| FamilySpec::new(f, p)))
        .filter(|spec| {
            spec.generate()
                .map(|h| h.size() == g.size() && are_isomorphic(&h, g).is_some())
                .unwrap_or(false)
        })
        .collect()
}
