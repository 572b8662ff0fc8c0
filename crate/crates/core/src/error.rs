//! Error types shared by every structure in the crate.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// An algebraic law that a table-based structure is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Closure,
    Associativity,
    Commutativity,
    Identity,
    Inverse,
    MalcevLeft,
    MalcevRight,
    HeapAssociativity,
    HeapCommutativity,
    MulAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ActionAssociativity,
    ActionTrussDistributivity,
    ActionModuleDistributivity,
    ActionUnital,
    BraceLeftDistributivity,
    BraceRightDistributivity,
    SharedNeutral,
    RingLeftDistributivity,
    RingRightDistributivity,
    Absorber,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Closure => "closure",
            Law::Associativity => "associativity",
            Law::Commutativity => "commutativity",
            Law::Identity => "identity",
            Law::Inverse => "inverse",
            Law::MalcevLeft => "Mal'cev [b,b,a]=a",
            Law::MalcevRight => "Mal'cev [a,b,b]=a",
            Law::HeapAssociativity => "heap associativity",
            Law::HeapCommutativity => "heap commutativity",
            Law::MulAssociativity => "multiplicative associativity",
            Law::LeftDistributivity => "left distributivity",
            Law::RightDistributivity => "right distributivity",
            Law::ActionAssociativity => "action associativity",
            Law::ActionTrussDistributivity => "action distributes over truss bracket",
            Law::ActionModuleDistributivity => "action distributes over module bracket",
            Law::ActionUnital => "unital action",
            Law::BraceLeftDistributivity => "brace left law a(b+c)=ab-a+ac",
            Law::BraceRightDistributivity => "brace right law (b+c)a=ba-a+ca",
            Law::SharedNeutral => "shared neutral element",
            Law::RingLeftDistributivity => "ring left distributivity",
            Law::RingRightDistributivity => "ring right distributivity",
            Law::Absorber => "absorber",
        };
        f.write_str(s)
    }
}

/// A failed law together with the indices that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl LawViolation {
    pub fn new(law: Law, witness: impl Into<Vec<usize>>) -> Self {
        LawViolation {
            law,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("law violation: {0}")]
    Law(LawViolation),
    #[error("table entry out of range: {0}")]
    OutOfRange(String),
    #[error("table has wrong shape: {0}")]
    Shape(String),
    #[error("operation requires an element but the heap is empty")]
    EmptyHeap,
    #[error("quotient by empty sub-heap undefined")]
    EmptySubHeap,
    #[error("subset is not a sub-heap: [{0},{1},{2}] leaves it")]
    NotSubHeap(usize, usize, usize),
    #[error("subset is not a paragon: {0}")]
    NotParagon(String),
    #[error("truss has no identity")]
    NoIdentity,
    #[error("truss has no absorber")]
    NoAbsorber,
    #[error("not a multiplicative group; non-invertible elements {0:?}")]
    NotAGroup(Vec<usize>),
    #[error("group is not abelian: {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("left trusses are not supported here: {0}")]
    LeftTruss(&'static str),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("search exceeded {0} nodes")]
    SearchLimit(usize),
    #[error("module is not unital")]
    NotUnital,
    #[error("structures do not match: {0}")]
    Mismatch(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<LawViolation> for AlgebraError {
    fn from(v: LawViolation) -> Self {
        AlgebraError::Law(v)
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
