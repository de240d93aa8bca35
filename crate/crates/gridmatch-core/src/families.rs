//! The catalog of layered graph families and the pinning machinery that
//! ties each family's exact matching counts to its registered sequence.
//!
//! A family is a base graph, a layer rule (`n`, `2n`, or `2n+1` layers), and
//! a list of deleted vertices. Pinning a family means recounting its
//! matchings with the exhaustive oracle and comparing against the registered
//! sequence — the one check that does not trust the layered engine or the
//! recurrences. Candidate constructions are promoted by a clean pin, and a
//! pin that disagrees is reported rather than hidden.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::graph::{make_base, product_with_path, remove_vertices, BaseKind, Graph, GraphError, VertexLabel};
use crate::matching::{count_exhaustive, count_layered, MatchingError};
use crate::sequences::{Registry, SequenceError};

/// How many layers the product has at index `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerRule {
    N,
    TwoN,
    TwoNPlusOne,
}

impl LayerRule {
    pub fn layer_count(self, n: i64) -> Option<u32> {
        let layers = match self {
            LayerRule::N => n.checked_mul(1)?,
            LayerRule::TwoN => n.checked_mul(2)?,
            LayerRule::TwoNPlusOne => n.checked_mul(2)?.checked_add(1)?,
        };
        u32::try_from(layers).ok()
    }
}

impl fmt::Display for LayerRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayerRule::N => write!(f, "n"),
            LayerRule::TwoN => write!(f, "2n"),
            LayerRule::TwoNPlusOne => write!(f, "2n+1"),
        }
    }
}

/// Which layer a deleted vertex sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerPos {
    Abs(u32),
    Last,
}

/// A deleted vertex, positioned relative to the built product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectPos {
    pub base_index: u32,
    pub layer: LayerPos,
}

impl DefectPos {
    pub const fn at(base_index: u32, layer: u32) -> Self {
        DefectPos {
            base_index,
            layer: LayerPos::Abs(layer),
        }
    }

    pub const fn last(base_index: u32) -> Self {
        DefectPos {
            base_index,
            layer: LayerPos::Last,
        }
    }

    fn resolve(self, layers: u32) -> VertexLabel {
        let layer = match self.layer {
            LayerPos::Abs(l) => l,
            LayerPos::Last => layers - 1,
        };
        VertexLabel::new(self.base_index, layer)
    }
}

/// Confidence in a family's construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyStatus {
    /// The construction is settled; its counts define the sequence.
    Established,
    /// The construction is a working hypothesis. A clean pin promotes it;
    /// a disagreeing pin documents exactly where it breaks.
    Candidate,
}

/// One layered family.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: &'static str,
    pub description: &'static str,
    pub base: BaseKind,
    pub layers: LayerRule,
    pub defects: Vec<DefectPos>,
    /// Name of the registry sequence this family's counts should follow.
    pub sequence: &'static str,
    pub status: FamilyStatus,
    /// Smallest index at which the construction exists.
    pub min_n: i64,
    /// Largest index of the documented pin range: the span over which the
    /// exhaustive oracle stays comfortably fast for this construction.
    pub pin_max: i64,
}

/// Errors from family construction and counting.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyError {
    UnknownFamily(String),
    IndexTooSmall {
        family: String,
        n: i64,
        min_n: i64,
    },
    IndexTooLarge {
        family: String,
        n: i64,
    },
    Graph(GraphError),
    Matching(MatchingError),
    Sequence(SequenceError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::UnknownFamily(name) => write!(f, "unknown family {name:?}"),
            FamilyError::IndexTooSmall { family, n, min_n } => {
                write!(f, "family {family} starts at n = {min_n}; {n} is too small")
            }
            FamilyError::IndexTooLarge { family, n } => {
                write!(f, "index {n} overflows the layer count of family {family}")
            }
            FamilyError::Graph(e) => write!(f, "{e}"),
            FamilyError::Matching(e) => write!(f, "{e}"),
            FamilyError::Sequence(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> Self {
        FamilyError::Graph(e)
    }
}

impl From<MatchingError> for FamilyError {
    fn from(e: MatchingError) -> Self {
        FamilyError::Matching(e)
    }
}

impl From<SequenceError> for FamilyError {
    fn from(e: SequenceError) -> Self {
        FamilyError::Sequence(e)
    }
}

/// Verdict of a pin run.
#[derive(Clone, Debug, PartialEq)]
pub enum PinVerdict {
    Agrees,
    DisagreesAt {
        n: i64,
        count: BigInt,
        expected: BigInt,
    },
}

/// Result of pinning one family against its sequence with the oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct PinReport {
    pub family: &'static str,
    pub sequence: &'static str,
    pub status: FamilyStatus,
    /// `(n, exhaustive count)` for every checked index.
    pub values: Vec<(i64, BigInt)>,
    pub verdict: PinVerdict,
    /// True when a candidate construction was confirmed by this run.
    pub promoted: bool,
}

/// The family catalog, keyed by name.
pub struct Catalog {
    families: BTreeMap<&'static str, Family>,
}

impl Catalog {
    pub fn standard() -> Self {
        let mut families = BTreeMap::new();
        for family in standard_families() {
            families.insert(family.name, family);
        }
        Catalog { families }
    }

    pub fn get(&self, name: &str) -> Option<&Family> {
        self.families.get(name)
    }

    pub fn families(&self) -> impl Iterator<Item = &Family> {
        self.families.values()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }

    fn require(&self, name: &str) -> Result<&Family, FamilyError> {
        self.get(name)
            .ok_or_else(|| FamilyError::UnknownFamily(name.to_owned()))
    }

    fn layers_for(&self, family: &Family, n: i64) -> Result<u32, FamilyError> {
        if n < family.min_n {
            return Err(FamilyError::IndexTooSmall {
                family: family.name.to_owned(),
                n,
                min_n: family.min_n,
            });
        }
        family
            .layers
            .layer_count(n)
            .filter(|&l| l >= 1)
            .ok_or_else(|| FamilyError::IndexTooLarge {
                family: family.name.to_owned(),
                n,
            })
    }

    /// Builds the family's graph at index `n`.
    pub fn build_graph(&self, name: &str, n: i64) -> Result<Graph, FamilyError> {
        let family = self.require(name)?;
        let layers = self.layers_for(family, n)?;
        let base = make_base(family.base)?;
        let product = product_with_path(&base, layers)?;
        let defects: Vec<VertexLabel> = family
            .defects
            .iter()
            .map(|d| d.resolve(layers))
            .collect();
        Ok(remove_vertices(&product, &defects)?)
    }

    /// Counts the family's matchings with the layered engine.
    pub fn count_layered(&self, name: &str, n: i64) -> Result<BigInt, FamilyError> {
        let family = self.require(name)?;
        let layers = self.layers_for(family, n)?;
        let base = make_base(family.base)?;
        let defects: Vec<VertexLabel> = family
            .defects
            .iter()
            .map(|d| d.resolve(layers))
            .collect();
        Ok(count_layered(&base, layers, &defects)?)
    }

    /// Counts the family's matchings with the exhaustive oracle. Slow, but
    /// shares no logic with the layered engine.
    pub fn count_oracle(&self, name: &str, n: i64) -> Result<BigInt, FamilyError> {
        Ok(count_exhaustive(&self.build_graph(name, n)?))
    }

    /// Recounts `min_n ..= n_max` with the oracle and compares against the
    /// registered sequence.
    pub fn pin(
        &self,
        registry: &Registry,
        name: &str,
        n_max: i64,
    ) -> Result<PinReport, FamilyError> {
        let family = self.require(name)?;
        let mut values = Vec::new();
        let mut verdict = PinVerdict::Agrees;
        for n in family.min_n..=n_max {
            let count = self.count_oracle(name, n)?;
            values.push((n, count.clone()));
            let expected = registry.eval_recurrence(family.sequence, n)?;
            if count != expected {
                verdict = PinVerdict::DisagreesAt {
                    n,
                    count,
                    expected,
                };
                break;
            }
        }
        let promoted =
            family.status == FamilyStatus::Candidate && verdict == PinVerdict::Agrees;
        Ok(PinReport {
            family: family.name,
            sequence: family.sequence,
            status: family.status,
            values,
            verdict,
            promoted,
        })
    }

    /// Registry sequences no family accounts for.
    pub fn unresolved_sequences<'a>(&self, registry: &'a Registry) -> Vec<&'a str> {
        let covered: Vec<&str> = self.families().map(|f| f.sequence).collect();
        registry
            .names()
            .filter(|name| !covered.contains(name))
            .collect()
    }
}

fn standard_families() -> Vec<Family> {
    vec![
        Family {
            name: "fib",
            description: "The ladder P2 x P_n.",
            base: BaseKind::Path(2),
            layers: LayerRule::N,
            defects: vec![],
            sequence: "f",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "A",
            description: "The grid P3 x P_{2n}.",
            base: BaseKind::Path(3),
            layers: LayerRule::TwoN,
            defects: vec![],
            sequence: "A",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 4,
        },
        Family {
            name: "B",
            description: "P3 x P_{2n} minus a corner and the adjacent middle vertex of the first rank.",
            base: BaseKind::Path(3),
            layers: LayerRule::TwoN,
            defects: vec![DefectPos::at(0, 0), DefectPos::at(1, 0)],
            sequence: "B",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 4,
        },
        Family {
            name: "C",
            description: "P3 x P_{2n} minus the first two vertices of one outer row.",
            base: BaseKind::Path(3),
            layers: LayerRule::TwoN,
            defects: vec![DefectPos::at(0, 0), DefectPos::at(0, 1)],
            sequence: "C",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 4,
        },
        Family {
            name: "G",
            description: "The cycle grid C4 x P_n.",
            base: BaseKind::Cycle(4),
            layers: LayerRule::N,
            defects: vec![],
            sequence: "G",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "g",
            description: "C4 x P_n minus two adjacent vertices of the last rank.",
            base: BaseKind::Cycle(4),
            layers: LayerRule::N,
            defects: vec![DefectPos::last(0), DefectPos::last(1)],
            sequence: "g",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "V",
            description: "The near-complete grid W4 x P_n (K4 minus an edge).",
            base: BaseKind::CompleteMinusEdge(4),
            layers: LayerRule::N,
            defects: vec![],
            sequence: "V",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "R",
            description: "W4 x P_n minus one degree-2 vertex and an adjacent degree-3 vertex of the last rank.",
            base: BaseKind::CompleteMinusEdge(4),
            layers: LayerRule::N,
            defects: vec![DefectPos::last(0), DefectPos::last(2)],
            sequence: "R",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "S",
            description: "W4 x P_n minus the two degree-3 vertices of the last rank; working hypothesis whose counts deviate from the registered S from n = 2.",
            base: BaseKind::CompleteMinusEdge(4),
            layers: LayerRule::N,
            defects: vec![DefectPos::last(2), DefectPos::last(3)],
            sequence: "S",
            status: FamilyStatus::Candidate,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "T",
            description: "The triangle grid C3 x P_{2n}.",
            base: BaseKind::Cycle(3),
            layers: LayerRule::TwoN,
            defects: vec![],
            sequence: "T",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 4,
        },
        Family {
            name: "t",
            description: "C3 x P_{2n+1} minus one vertex of the last rank.",
            base: BaseKind::Cycle(3),
            layers: LayerRule::TwoNPlusOne,
            defects: vec![DefectPos::last(2)],
            sequence: "t",
            status: FamilyStatus::Established,
            min_n: 0,
            pin_max: 4,
        },
        Family {
            name: "Q",
            description: "The star grid K_{1,3} x P_{2n}.",
            base: BaseKind::Star(3),
            layers: LayerRule::TwoN,
            defects: vec![],
            sequence: "Q",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 4,
        },
        Family {
            name: "q",
            description: "K_{1,3} x P_{2n+1} minus two leaves of the last rank; a one-vertex deletion has odd order, so this two-leaf variant is the candidate construction.",
            base: BaseKind::Star(3),
            layers: LayerRule::TwoNPlusOne,
            defects: vec![DefectPos::last(2), DefectPos::last(3)],
            sequence: "q",
            status: FamilyStatus::Candidate,
            min_n: 0,
            pin_max: 4,
        },
        Family {
            name: "M",
            description: "The complete grid K4 x P_n.",
            base: BaseKind::Complete(4),
            layers: LayerRule::N,
            defects: vec![],
            sequence: "M",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
        Family {
            name: "N",
            description: "K4 x P_n minus two vertices of the last rank.",
            base: BaseKind::Complete(4),
            layers: LayerRule::N,
            defects: vec![DefectPos::last(0), DefectPos::last(1)],
            sequence: "N",
            status: FamilyStatus::Established,
            min_n: 1,
            pin_max: 6,
        },
    ]
}
