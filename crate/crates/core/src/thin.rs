//! Thin and strictly thin edges, Norine–Thomas bricks and reduction chains.

use serde::{Deserialize, Serialize};

use crate::cuts::{classify, Classification};
use crate::error::{Error, Result};
use crate::families::{self, Family, FamilySpec};
use crate::graph::{EdgeId, Graph};
use crate::iso::are_isomorphic;
use crate::matching::is_matching_covered;
use crate::transforms::retract;
use crate::Config;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThinEdgeReport {
    pub edge: EdgeId,
    pub thin: bool,
    pub strictly_thin: bool,
    /// Set for thin edges only.
    pub index: Option<u8>,
    /// `retract(G - e)`, when `G - e` is matching covered and retractable.
    pub retract_after: Option<Graph>,
}

fn require_brick(g: &Graph, config: &Config) -> Result<()> {
    match classify(g, config) {
        Ok(Classification::Brick) => Ok(()),
        Ok(_) | Err(Error::NotMatchingCovered) => Err(Error::NotBrick),
        Err(e) => Err(e),
    }
}

/// The index of an edge from the degrees of its ends and triangles.
pub fn edge_index(g: &Graph, e: EdgeId) -> Result<u8> {
    let edge = g.edge(e).ok_or(Error::UnknownEdge(e))?;
    let (du, dv) = (g.degree(edge.u), g.degree(edge.v));
    Ok(match (du == 3, dv == 3) {
        (false, false) => 0,
        (true, false) | (false, true) => 1,
        (true, true) => {
            let nu = g.neighbors(edge.u);
            let triangle = g.neighbors(edge.v).iter().any(|w| nu.contains(w));
            if triangle {
                3
            } else {
                2
            }
        }
    })
}

fn evaluate(g: &Graph, e: EdgeId, config: &Config) -> Result<ThinEdgeReport> {
    let h = g.delete_edges(&[e])?;
    let r = if is_matching_covered(&h) {
        retract(&h).ok()
    } else {
        None
    };
    let thin = match &r {
        Some(r) => classify(r, config)? == Classification::Brick,
        None => false,
    };
    let strictly_thin = thin && g.is_simple() && r.as_ref().is_some_and(Graph::is_simple);
    Ok(ThinEdgeReport {
        edge: e,
        thin,
        strictly_thin,
        index: if thin { Some(edge_index(g, e)?) } else { None },
        retract_after: r,
    })
}

/// One report per edge of a brick.
pub fn thin_edges(g: &Graph, config: &Config) -> Result<Vec<ThinEdgeReport>> {
    require_brick(g, config)?;
    g.edges()
        .iter()
        .map(|e| evaluate(g, e.id, config))
        .collect()
}

/// The strictly thin edges of a simple brick.
pub fn strictly_thin_edges(g: &Graph, config: &Config) -> Result<Vec<ThinEdgeReport>> {
    if !g.is_simple() {
        return Err(Error::NotSimpleBrick);
    }
    require_brick(g, config).map_err(|_| Error::NotSimpleBrick)?;
    Ok(thin_edges(g, config)?
        .into_iter()
        .filter(|r| r.strictly_thin)
        .collect())
}

fn nt_member(spec: &FamilySpec, plus: bool) -> bool {
    let n = spec.param;
    match spec.family {
        Family::OddWheel
        | Family::Staircase
        | Family::TruncatedBiwheel
        | Family::Petersen
        | Family::K4
        | Family::C6bar => true,
        Family::Prism => n % 4 == 2,
        Family::Mobius => n % 4 == 0,
        Family::TruncatedBiwheelPlus => plus,
        _ => false,
    }
}

/// The Norine–Thomas family `g` belongs to, if any.
pub fn is_norine_thomas(g: &Graph) -> Option<FamilySpec> {
    nt_tag(g, false)
}

/// As [`is_norine_thomas`], also admitting `T⁺` graphs.
pub fn is_norine_thomas_plus(g: &Graph) -> Option<FamilySpec> {
    nt_tag(g, true)
}

fn nt_tag(g: &Graph, plus: bool) -> Option<FamilySpec> {
    if !g.is_simple() {
        return None;
    }
    families::recognize(g)
        .into_iter()
        .find(|s| nt_member(s, plus))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSequence {
    /// From the input down to the terminal brick.
    pub bricks: Vec<Graph>,
    /// `edges[i]` is the edge of `bricks[i]` whose deletion and retract give
    /// `bricks[i + 1]`.
    pub edges: Vec<EdgeId>,
    pub terminal: FamilySpec,
    pub strict: bool,
}

impl ReductionSequence {
    pub fn verify(&self, config: &Config) -> bool {
        if self.bricks.len() != self.edges.len() + 1 {
            return false;
        }
        let steps_ok = self.edges.iter().enumerate().all(|(i, &e)| {
            let g = &self.bricks[i];
            match evaluate(g, e, config) {
                Ok(r) => {
                    (if self.strict { r.strictly_thin } else { r.thin })
                        && r.retract_after
                            .is_some_and(|h| are_isomorphic(&h, &self.bricks[i + 1]).is_some())
                }
                Err(_) => false,
            }
        });
        let last = self.bricks.last().unwrap();
        let terminal_ok = if self.strict {
            is_norine_thomas(last).is_some()
        } else {
            terminal_basic(last).is_some()
        };
        steps_ok && terminal_ok
    }
}

fn terminal_basic(g: &Graph) -> Option<FamilySpec> {
    [
        (Family::K4, families::k4()),
        (Family::C6bar, families::c6bar()),
        (Family::Petersen, families::petersen()),
    ]
    .into_iter()
    .find(|(_, t)| are_isomorphic(g, t).is_some())
    .map(|(f, t)| FamilySpec::new(f, t.order()))
}

/// Deletes the first (strictly) thin edge and retracts, until the brick is
/// in the terminal set: Norine–Thomas bricks when `strict`, otherwise
/// `{K4, C6bar, Petersen}`.
pub fn reduce_to_terminal(g: &Graph, strict: bool, config: &Config) -> Result<ReductionSequence> {
    config.check(g)?;
    if strict {
        if !g.is_simple() {
            return Err(Error::NotSimpleBrick);
        }
        require_brick(g, config).map_err(|_| Error::NotSimpleBrick)?;
    } else {
        require_brick(g, config)?;
    }
    let mut bricks = vec![g.clone()];
    let mut edges = Vec::new();
    loop {
        let cur = bricks.last().unwrap();
        let done = if strict {
            is_norine_thomas(cur)
        } else {
            terminal_basic(cur)
        };
        if let Some(terminal) = done {
            return Ok(ReductionSequence {
                bricks,
                edges,
                terminal,
                strict,
            });
        }
        let mut next = None;
        for e in cur.edges() {
            let r = evaluate(cur, e.id, config)?;
            if (strict && r.strictly_thin) || (!strict && r.thin) {
                next = Some((e.id, r.retract_after.unwrap().compact()));
                break;
            }
        }
        let Some((e, h)) = next else {
            return Err(Error::NoThinEdge {
                order: cur.order(),
                kind: if strict { "strictly thin" } else { "thin" },
            });
        };
        edges.push(e);
        bricks.push(h);
    }
}
