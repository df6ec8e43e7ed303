//! Crate-wide error type. Every fallible operation reports enough context to
//! reproduce the failure (offending element, witnessing basis pair, ...).

use crate::matroid::ElementSet;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {0} is out of range (need 1 <= n <= 64)")]
    GroundSetSize(usize),

    #[error("element {element} is outside the ground set {{1..{n}}}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("duplicate element {0}")]
    DuplicateElement(usize),

    #[error("a matroid needs at least one basis")]
    EmptyBasisCollection,

    #[error("bases {a} and {b} have different sizes")]
    UnequalBasisSizes { a: ElementSet, b: ElementSet },

    #[error("basis exchange fails for {b1}, {b2} at element {e}: no f in {b2} with ({b1} - {e}) + f a basis")]
    ExchangeAxiomFailure { b1: ElementSet, b2: ElementSet, e: usize },

    #[error("{0} is not a basis")]
    NotABasis(ElementSet),

    #[error("element {0} already lies in the basis")]
    ElementInBasis(usize),

    #[error("element {0} does not lie in the basis")]
    ElementNotInBasis(usize),

    #[error("cannot restrict to the empty set")]
    EmptyRestriction,

    #[error("{0:?} is not a permutation of the ground set")]
    InvalidOrder(Vec<usize>),

    #[error("upper set must be nonempty")]
    EmptyUpperSet,

    #[error("matroid has loops {loops} and coloops {coloops}; this operation needs both empty")]
    HasLoopsOrColoops { loops: ElementSet, coloops: ElementSet },

    #[error("unknown path step character {0:?} (expected E, N, or D)")]
    BadPathWord(char),

    #[error("path leaves the admissible region at step {step} ({word})")]
    PathLeavesRegion { step: usize, word: String },

    #[error("path {word} ends at ({x},{y}), expected ({ex},{ey})")]
    PathWrongEndpoint { word: String, x: usize, y: usize, ex: usize, ey: usize },

    #[error("uniform matroid U_{r},{n} has {kind}; its g-polynomial formula needs 1 <= r <= n-1")]
    UniformDegenerate { r: usize, n: usize, kind: &'static str },

    #[error("shift by {0} is not supported (only -1 and 1)")]
    ShiftOutOfRange(i64),

    #[error("constant term {0} is nonzero, polynomial is not divisible by t")]
    ConstantTermNotZero(String),

    #[error("coefficient {0} does not fit in a JSON integer")]
    CoefficientTooLarge(String),

    #[error("chain is not a member of this chain poset")]
    ChainNotInPoset,

    #[error("malformed cyclic-flat chain: {0}")]
    MalformedChain(String),

    #[error("matroid description does not match the input schema: {0}")]
    Schema(String),

    #[error("graph is not connected, so it has no spanning trees")]
    GraphNotConnected,

    #[error("unknown catalog name {name:?}; known names: {known}")]
    UnknownCatalogName { name: String, known: String },

    #[error("bad parameters for catalog entry {name:?}: {reason}")]
    BadCatalogParams { name: String, reason: String },
}
