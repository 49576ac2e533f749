//! Solidity, the disjoint odd cycle certificate, characteristic of a cut,
//! robust cuts and b-invariant edges.

use serde::{Deserialize, Serialize};

use crate::cuts::{brick_count, classify, Classification, PmTable};
use crate::dense::{Dense, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::{is_matching_covered, Matching};
use crate::shore::{contract_shore, Cut};
use crate::transforms::removable_edges;
use crate::Config;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolidityVerdict {
    pub solid: bool,
    /// A nontrivial separating cut that is not tight.
    pub witness: Option<Cut>,
}

fn require_mc(g: &Graph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

fn require_brick(g: &Graph, config: &Config) -> Result<()> {
    if classify(g, config)? == Classification::Brick {
        Ok(())
    } else {
        Err(Error::NotBrick)
    }
}

/// Every separating cut tight, by exhaustive odd-shore scan. The witness is
/// the first offending shore in mask order.
pub fn is_solid(g: &Graph, config: &Config) -> Result<SolidityVerdict> {
    config.check(g)?;
    require_mc(g)?;
    let t = PmTable::new(g, config)?;
    let bad = t
        .odd_shores(true)
        .find(|&m| !t.is_tight(m) && t.is_separating(m));
    Ok(SolidityVerdict {
        solid: bad.is_none(),
        witness: bad.map(|m| t.cut(g, m)),
    })
}

/// Two vertex-disjoint odd cycles whose removal leaves a perfectly
/// matchable graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSolidityCertificate {
    pub cycle1: Vec<VertexId>,
    pub cycle2: Vec<VertexId>,
    pub residual_matching: Matching,
}

impl NonSolidityCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        let ok_cycle = |c: &[VertexId]| {
            let mut s = c.to_vec();
            s.sort();
            s.dedup();
            c.len() >= 3
                && c.len() % 2 == 1
                && s.len() == c.len()
                && (0..c.len()).all(|i| g.multiplicity(c[i], c[(i + 1) % c.len()]) > 0)
        };
        if !ok_cycle(&self.cycle1) || !ok_cycle(&self.cycle2) {
            return false;
        }
        if self.cycle1.iter().any(|v| self.cycle2.contains(v)) {
            return false;
        }
        let mut both = self.cycle1.clone();
        both.extend(&self.cycle2);
        match g.delete_vertices(&both) {
            Ok(rest) => self.residual_matching.is_perfect(&rest),
            Err(_) => false,
        }
    }
}

/// Odd cycles of `g` grouped by vertex set, via a Hamiltonian-path table
/// over vertex subsets.
struct OddCycles<'a> {
    d: &'a Dense,
    adj: Vec<u64>,
    /// `reach[mask]`: ends `v` of paths from the lowest vertex of `mask`
    /// through exactly `mask`.
    reach: Vec<u64>,
    /// Vertex sets spanned by an odd cycle, increasing.
    sets: Vec<u64>,
}

impl<'a> OddCycles<'a> {
    fn new(d: &'a Dense) -> Self {
        let n = d.n;
        let mut adj = vec![0u64; n];
        for &(a, b) in &d.ends {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let size = 1usize << n;
        let mut reach = vec![0u64; size];
        for v in 0..n {
            reach[1 << v] = 1 << v;
        }
        for mask in 1..size as u64 {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let low = mask.trailing_zeros();
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                // extend only by vertices above the anchor
                let mut next = adj[v] & !mask & !((1u64 << (low + 1)) - 1);
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        let mut sets = Vec::new();
        for mask in 1..size as u64 {
            let k = mask.count_ones();
            if k >= 3 && k % 2 == 1 {
                let low = mask.trailing_zeros() as usize;
                if reach[mask as usize] & adj[low] != 0 {
                    sets.push(mask);
                }
            }
        }
        OddCycles {
            d,
            adj,
            reach,
            sets,
        }
    }

    /// A cyclic vertex order spanning `mask`.
    fn cycle(&self, mask: u64) -> Vec<VertexId> {
        let low = mask.trailing_zeros() as usize;
        let mut v = (self.reach[mask as usize] & self.adj[low]).trailing_zeros() as usize;
        let mut m = mask;
        let mut seq = vec![v];
        while m.count_ones() > 1 {
            let prev = m & !(1 << v);
            let u = (self.reach[prev as usize] & self.adj[v]).trailing_zeros() as usize;
            seq.push(u);
            m = prev;
            v = u;
        }
        seq.reverse();
        seq.into_iter().map(|i| self.d.vids[i]).collect()
    }

    /// `within[m]`: some odd cycle uses only vertices of `m`.
    fn within(&self) -> Vec<bool> {
        let n = self.d.n;
        let mut w = vec![false; 1 << n];
        for &s in &self.sets {
            w[s as usize] = true;
        }
        for bit in 0..n {
            for m in 0..1usize << n {
                if m >> bit & 1 == 1 && w[m ^ 1 << bit] {
                    w[m] = true;
                }
            }
        }
        w
    }
}

fn to_matching(d: &Dense, idx: &[usize]) -> Matching {
    let mut s = EdgeSet::new(d.m());
    for &i in idx {
        s.insert(i);
    }
    Matching::new(d.edge_ids(&s))
}

/// Exhaustive search for two disjoint odd cycles with a perfectly
/// matchable residue. Only defined for bricks.
pub fn rw_certificate(g: &Graph, config: &Config) -> Result<Option<NonSolidityCertificate>> {
    config.check(g)?;
    require_brick(g, config)?;
    let d = Dense::new(g);
    let oc = OddCycles::new(&d);
    let full = d.full_mask();
    for (i, &a) in oc.sets.iter().enumerate() {
        for &b in &oc.sets[i + 1..] {
            if a & b != 0 {
                continue;
            }
            let rest = full & !a & !b;
            let m = d.maximum_matching(rest, None);
            if 2 * m.len() == rest.count_ones() as usize {
                return Ok(Some(NonSolidityCertificate {
                    cycle1: oc.cycle(a),
                    cycle2: oc.cycle(b),
                    residual_matching: to_matching(&d, &m),
                }));
            }
        }
    }
    Ok(None)
}

/// No two vertex-disjoint odd cycles.
pub fn is_odd_intercyclic(g: &Graph, config: &Config) -> Result<bool> {
    config.check(g)?;
    let d = Dense::new(g);
    let oc = OddCycles::new(&d);
    let within = oc.within();
    let full = d.full_mask();
    Ok(oc.sets.iter().all(|&s| !within[(full & !s) as usize]))
}

/// Disjoint odd cycles as vertex sequences, if any.
pub fn disjoint_odd_cycles(
    g: &Graph,
    config: &Config,
) -> Result<Option<(Vec<VertexId>, Vec<VertexId>)>> {
    config.check(g)?;
    let d = Dense::new(g);
    let oc = OddCycles::new(&d);
    for (i, &a) in oc.sets.iter().enumerate() {
        if let Some(&b) = oc.sets[i + 1..].iter().find(|&&b| a & b == 0) {
            return Ok(Some((oc.cycle(a), oc.cycle(b))));
        }
    }
    Ok(None)
}

/// Smallest `|M ∩ C|` over perfect matchings meeting `C` at least thrice.
/// Defined for nontrivial separating cuts of bricks that are not tight.
pub fn characteristic(g: &Graph, cut: &Cut, config: &Config) -> Result<usize> {
    require_brick(g, config)?;
    if cut.is_trivial() {
        return Err(Error::TrivialCut);
    }
    let t = PmTable::new(g, config)?;
    let mask = t.shore_mask(cut.shore());
    if !t.is_separating(mask) {
        return Err(Error::NotSeparating);
    }
    t.characteristic(mask).ok_or(Error::CutIsTight)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustCutReport {
    pub cut: Cut,
    pub characteristic: usize,
    /// Both cut-contractions are near-bricks.
    pub robust: bool,
}

/// One report per nontrivial separating cut of a brick.
pub fn separating_cut_reports(g: &Graph, config: &Config) -> Result<Vec<RobustCutReport>> {
    require_brick(g, config)?;
    let t = PmTable::new(g, config)?;
    let mut out = Vec::new();
    for mask in t.odd_shores(true) {
        if !t.is_separating(mask) {
            continue;
        }
        let cut = t.cut(g, mask);
        let characteristic = t
            .characteristic(mask)
            .expect("a brick has no nontrivial tight cut");
        let a = contract_shore(g, cut.shore())?;
        let b = contract_shore(g, &cut.complement(g))?;
        let robust = brick_count(&a.graph, config)? == 1 && brick_count(&b.graph, config)? == 1;
        out.push(RobustCutReport {
            cut,
            characteristic,
            robust,
        });
    }
    Ok(out)
}

/// The robust cuts of a brick with their characteristics.
pub fn robust_cuts(g: &Graph, config: &Config) -> Result<Vec<RobustCutReport>> {
    Ok(separating_cut_reports(g, config)?
        .into_iter()
        .filter(|r| r.robust)
        .collect())
}

/// `e` is removable and `b(G - e) = 1`.
pub fn is_b_invariant(g: &Graph, e: EdgeId, config: &Config) -> Result<bool> {
    if g.edge(e).is_none() {
        return Err(Error::UnknownEdge(e));
    }
    require_brick(g, config)?;
    if !removable_edges(g)?.contains(&e) {
        return Ok(false);
    }
    Ok(brick_count(&g.delete_edges(&[e])?, config)? == 1)
}

pub fn b_invariant_edges(g: &Graph, config: &Config) -> Result<Vec<EdgeId>> {
    require_brick(g, config)?;
    let mut out = Vec::new();
    for e in removable_edges(g)? {
        if brick_count(&g.delete_edges(&[e])?, config)? == 1 {
            out.push(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn solidity_landmarks() {
        for g in [
            families::odd_wheel(5).unwrap(),
            families::k4(),
            families::odd_wheel(7).unwrap(),
        ] {
            assert!(is_solid(&g, &cfg()).unwrap().solid);
        }
        for g in [
            families::c6bar(),
            families::bicorn(),
            families::tricorn(),
            families::petersen(),
        ] {
            let v = is_solid(&g, &cfg()).unwrap();
            assert!(!v.solid);
            let c = v.witness.unwrap();
            assert!(!c.is_trivial());
        }
        let c6bar = families::c6bar();
        let w = is_solid(&c6bar, &cfg()).unwrap().witness.unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.shore().len() == 3);
    }

    #[test]
    fn certificates() {
        let c6bar = families::c6bar();
        let c = rw_certificate(&c6bar, &cfg()).unwrap().unwrap();
        assert!(c.verify(&c6bar));
        assert_eq!((c.cycle1.len(), c.cycle2.len()), (3, 3));
        assert!(c.residual_matching.is_empty());

        let p = families::petersen();
        let c = rw_certificate(&p, &cfg()).unwrap().unwrap();
        assert!(c.verify(&p));
        assert_eq!((c.cycle1.len(), c.cycle2.len()), (5, 5));

        assert!(rw_certificate(&families::odd_wheel(5).unwrap(), &cfg())
            .unwrap()
            .is_none());
        let c6 = families::cycle(6).unwrap();
        assert_eq!(rw_certificate(&c6, &cfg()), Err(Error::NotBrick));
    }

    #[test]
    fn odd_intercyclic_examples() {
        assert!(is_odd_intercyclic(&families::odd_wheel(5).unwrap(), &cfg()).unwrap());
        assert!(is_odd_intercyclic(&families::mobius(8).unwrap(), &cfg()).unwrap());
        assert!(!is_odd_intercyclic(&families::c6bar(), &cfg()).unwrap());
        assert!(is_odd_intercyclic(&families::cycle(6).unwrap(), &cfg()).unwrap());
    }

    #[test]
    fn characteristic_examples() {
        let c6bar = families::c6bar();
        let w = is_solid(&c6bar, &cfg()).unwrap().witness.unwrap();
        assert_eq!(characteristic(&c6bar, &w, &cfg()).unwrap(), 3);
        let k4 = families::k4();
        let trivial = crate::shore::cut_of(&k4, &[VertexId(0)]).unwrap();
        assert_eq!(
            characteristic(&k4, &trivial, &cfg()),
            Err(Error::TrivialCut)
        );
    }

    #[test]
    fn robust_cut_examples() {
        let p = families::petersen();
        let rs = robust_cuts(&p, &cfg()).unwrap();
        assert!(!rs.is_empty());
        assert!(rs.iter().all(|r| r.characteristic == 5));

        let bicorn = families::bicorn();
        assert!(robust_cuts(&bicorn, &cfg())
            .unwrap()
            .iter()
            .any(|r| r.characteristic == 3));

        let c6bar = families::c6bar();
        let rs = robust_cuts(&c6bar, &cfg()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].characteristic, 3);
    }

    #[test]
    fn b_invariance() {
        assert!(b_invariant_edges(&families::petersen(), &cfg())
            .unwrap()
            .is_empty());
        assert!(
            b_invariant_edges(&families::tricorn(), &cfg())
                .unwrap()
                .len()
                >= 2
        );
        let w5 = families::odd_wheel(5).unwrap();
        for e in removable_edges(&w5).unwrap() {
            assert!(is_b_invariant(&w5, e, &cfg()).unwrap());
        }
    }
}
