//! Algorithms for matching covered graphs.
//!
//! The crate works on loopless multigraphs with stable vertex and edge
//! identifiers ([`Graph`]). On top of that carrier it provides:
//!
//! * perfect matchings, admissibility, barriers ([`matching`]);
//! * cuts, cut-contractions and splicing ([`shore`]);
//! * tight and separating cuts, the tight cut decomposition and the
//!   brick/brace classification ([`cuts`]);
//! * solidity with certificates, characteristic and robust cuts ([`solidity`]);
//! * bi-subdivisions, retracts, removable classes and ear decompositions
//!   ([`transforms`]);
//! * conformal minors with embedding certificates ([`conformal`]);
//! * generators for the standard brick and brace families ([`families`]);
//! * thin and strictly thin edges and brick reduction chains ([`thin`]).
//!
//! Most exhaustive procedures are bounded by a vertex cap (see [`Config`]).

pub mod conformal;
pub mod cuts;
mod dense;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matching;
pub mod shore;
pub mod solidity;
pub mod thin;
pub mod transforms;

pub use cuts::{Classification, DecompositionResult, PieceKind};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graph::{Edge, EdgeId, Graph, VertexId};
pub use iso::IsoCertificate;
pub use matching::{Barrier, Matching};
pub use shore::{Contraction, Cut};

/// Largest order any bitmask-based routine accepts, whatever the configured cap.
pub const MAX_ORDER: usize = 64;

/// Default vertex cap for exhaustive procedures.
pub const DEFAULT_CAP: usize = 16;

/// Default vertex cap for the conformal-minor embedding search.
pub const DEFAULT_EMBEDDING_CAP: usize = 14;

/// Limits for exhaustive procedures.
///
/// Exceeding a cap is always reported as [`Error::CapExceeded`]; nothing is
/// silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub cap: usize,
    pub embedding_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cap: DEFAULT_CAP,
            embedding_cap: DEFAULT_EMBEDDING_CAP,
        }
    }
}

impl Config {
    pub fn with_cap(cap: usize) -> Self {
        Config {
            cap,
            embedding_cap: cap,
        }
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        check_cap(g, self.cap)
    }
}

pub(crate) fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ORDER);
    if g.order() > cap {
        Err(Error::CapExceeded {
            order: g.order(),
            cap,
        })
    } else {
        Ok(())
    }
}
