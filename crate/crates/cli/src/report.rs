//! Typed JSON reports for the single-graph subcommands.

use mcg_core::conformal::{find_conformal_minor, ConformalEmbedding, Pattern};
use mcg_core::cuts::{classify, tight_cut_decomposition, CutTree};
use mcg_core::families::recognize;
use mcg_core::matching::is_matching_covered;
use mcg_core::solidity::{is_odd_intercyclic, is_solid, rw_certificate, NonSolidityCertificate};
use mcg_core::thin::reduce_to_terminal;
use mcg_core::transforms::{
    ear_decomposition, equivalence_classes, minimal_classes, removable_classes, CanonicalShape,
    EarPath, RemovableClass,
};
use mcg_core::{Classification, Config, Cut, EdgeId, FamilySpec, Graph, PieceKind, Result};
use serde::Serialize;

/// A graph as its order plus edges `(u, v)` in position indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeListJson {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for EdgeListJson {
    fn from(g: &Graph) -> Self {
        EdgeListJson {
            order: g.order(),
            edges: g.index_pairs(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub size: usize,
    pub simple: bool,
    pub bipartite: bool,
    pub matching_covered: bool,
    /// The remaining fields are set for matching covered graphs only.
    pub classification: Option<Classification>,
    pub b: Option<usize>,
    pub solid: Option<bool>,
    pub removable_classes: Option<Vec<RemovableClass>>,
    pub families: Vec<FamilySpec>,
}

pub fn analyze(g: &Graph, config: &Config) -> Result<AnalyzeReport> {
    let mc = is_matching_covered(g);
    let mut r = AnalyzeReport {
        order: g.order(),
        size: g.size(),
        simple: g.is_simple(),
        bipartite: g.is_bipartite(),
        matching_covered: mc,
        classification: None,
        b: None,
        solid: None,
        removable_classes: None,
        families: recognize(g),
    };
    if mc {
        r.classification = Some(classify(g, config)?);
        r.b = Some(tight_cut_decomposition(g, config)?.b);
        r.solid = Some(is_solid(g, config)?.solid);
        r.removable_classes = Some(removable_classes(g)?);
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceJson {
    pub kind: PieceKind,
    pub graph: EdgeListJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub b: usize,
    pub braces: usize,
    pub pieces: Vec<PieceJson>,
    pub cut_tree: CutTree,
}

pub fn decompose(g: &Graph, config: &Config) -> Result<DecomposeReport> {
    let d = tight_cut_decomposition(g, config)?;
    Ok(DecomposeReport {
        b: d.b,
        braces: d.pieces.len() - d.b,
        pieces: d
            .pieces
            .iter()
            .map(|p| PieceJson {
                kind: p.kind,
                graph: (&p.graph).into(),
            })
            .collect(),
        cut_tree: d.cut_tree,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SolidReport {
    pub solid: bool,
    /// A separating cut that is not tight.
    pub witness: Option<Cut>,
    pub brick: bool,
    /// Bricks only.
    pub odd_intercyclic: Option<bool>,
    pub certificate: Option<NonSolidityCertificate>,
}

pub fn solid(g: &Graph, config: &Config) -> Result<SolidReport> {
    let v = is_solid(g, config)?;
    let brick = classify(g, config)? == Classification::Brick;
    let (odd_intercyclic, certificate) = if brick {
        (
            Some(is_odd_intercyclic(g, config)?),
            rw_certificate(g, config)?,
        )
    } else {
        (None, None)
    };
    Ok(SolidReport {
        solid: v.solid,
        witness: v.witness,
        brick,
        odd_intercyclic,
        certificate,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConformalReport {
    pub pattern: Pattern,
    pub based: bool,
    pub embedding: Option<ConformalEmbedding>,
}

pub fn conformal(g: &Graph, pattern: Pattern, config: &Config) -> Result<ConformalReport> {
    let embedding = find_conformal_minor(g, pattern.graph(), config)?;
    Ok(ConformalReport {
        pattern,
        based: embedding.is_some(),
        embedding,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EarsReport {
    pub ears: Vec<Vec<EarPath>>,
    pub double_ears: usize,
    pub shape: Option<CanonicalShape>,
    pub steps: Vec<EdgeListJson>,
}

pub fn ears(g: &Graph, config: &Config) -> Result<EarsReport> {
    let d = ear_decomposition(g, config)?;
    Ok(EarsReport {
        double_ears: d.double_ears(),
        shape: d.shape(),
        steps: d.graphs.iter().map(Into::into).collect(),
        ears: d.ears,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassesReport {
    pub equivalence_classes: Vec<Vec<EdgeId>>,
    pub minimal_classes: Vec<Vec<EdgeId>>,
    pub removable_classes: Vec<RemovableClass>,
}

pub fn classes(g: &Graph, config: &Config) -> Result<ClassesReport> {
    Ok(ClassesReport {
        equivalence_classes: equivalence_classes(g, config)?,
        minimal_classes: minimal_classes(g, config)?,
        removable_classes: removable_classes(g)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReduceStep {
    /// Thin edge deleted from this brick; absent on the terminal brick.
    pub edge: Option<(usize, usize)>,
    pub brick: EdgeListJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReduceReport {
    pub strict: bool,
    pub terminal: FamilySpec,
    pub steps: Vec<ReduceStep>,
}

pub fn reduce(g: &Graph, strict: bool, config: &Config) -> Result<ReduceReport> {
    let s = reduce_to_terminal(g, strict, config)?;
    let steps = s
        .bricks
        .iter()
        .enumerate()
        .map(|(i, b)| ReduceStep {
            edge: s.edges.get(i).map(|&e| {
                let edge = b.edge(e).expect("edge of its brick");
                (
                    b.vertex_index(edge.u).unwrap(),
                    b.vertex_index(edge.v).unwrap(),
                )
            }),
            brick: b.into(),
        })
        .collect();
    Ok(ReduceReport {
        strict,
        terminal: s.terminal,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcg_core::families;
    use mcg_core::transforms::RemovableKind;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn analyze_c6bar() {
        let r = analyze(&families::c6bar(), &cfg()).unwrap();
        assert_eq!(r.classification, Some(Classification::Brick));
        assert_eq!(r.solid, Some(false));
        let cl = r.removable_classes.unwrap();
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.kind == RemovableKind::Doubleton));
    }

    #[test]
    fn analyze_even_cycle() {
        let r = analyze(&families::cycle(6).unwrap(), &cfg()).unwrap();
        assert!(r.bipartite);
        assert_eq!(r.b, Some(0));
        assert_ne!(r.classification, Some(Classification::Brick));
    }

    #[test]
    fn analyze_petersen() {
        let r = analyze(&families::petersen(), &cfg()).unwrap();
        assert_eq!(r.classification, Some(Classification::Brick));
        assert_eq!(r.solid, Some(false));
        let cl = r.removable_classes.unwrap();
        assert_eq!(cl.len(), 15);
        assert!(cl.iter().all(|c| c.kind == RemovableKind::Single));
    }

    #[test]
    fn analyze_non_matching_covered() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = analyze(&g, &cfg()).unwrap();
        assert!(!r.matching_covered);
        assert!(r.classification.is_none() && r.b.is_none());
    }

    #[test]
    fn reduce_report_names_edges_by_position() {
        let r = reduce(&families::tricorn(), true, &cfg()).unwrap();
        assert!(r.steps.len() >= 2);
        assert!(r.steps.last().unwrap().edge.is_none());
        assert!(r.steps[..r.steps.len() - 1]
            .iter()
            .all(|s| s.edge.is_some()));
    }

    #[test]
    fn solid_report_has_certificate_for_nonsolid_brick() {
        let r = solid(&families::bicorn(), &cfg()).unwrap();
        assert!(!r.solid && r.brick);
        assert!(r.certificate.unwrap().verify(&families::bicorn()));
        let r = solid(&families::odd_wheel(5).unwrap(), &cfg()).unwrap();
        assert!(r.solid && r.certificate.is_none());
    }
}
