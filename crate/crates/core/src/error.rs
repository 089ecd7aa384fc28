use std::fmt;

use thiserror::Error;

use crate::graph::StarWitness;
use crate::resampling::TimeoutReport;

/// A hypothesis of one of the coloring constructions that an input failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    /// The two sides of a bipartition must be disjoint and nonempty.
    DisjointNonempty,
    /// A vertex has more neighbors in X than the supplied bound.
    XNeighborBound {
        vertex: usize,
        found: usize,
        bound: usize,
    },
    /// A vertex of Y has no neighbor in X.
    YDominatedByX { vertex: usize },
    /// A vertex of X has more neighbors in Y than the supplied bound.
    YNeighborBound {
        vertex: usize,
        found: usize,
        bound: usize,
    },
    /// A source vertex has no neighbor among the targets.
    SourceHasTarget { vertex: usize },
    /// A hyperedge size lies outside `[floor, ratio * floor]`.
    EdgeSize {
        edge: usize,
        size: usize,
        min: usize,
        max: usize,
    },
    /// A vertex sees more than `k - 1` vertices of one color class.
    ClassDegree {
        vertex: usize,
        found: usize,
        bound: usize,
    },
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::DisjointNonempty => {
                write!(f, "condition (i): X and Y must be disjoint and nonempty")
            }
            Condition::XNeighborBound {
                vertex,
                found,
                bound,
            } => write!(
                f,
                "condition (ii): vertex {vertex} has {found} neighbors in X, bound is {bound}"
            ),
            Condition::YDominatedByX { vertex } => {
                write!(
                    f,
                    "condition (iii): vertex {vertex} of Y has no neighbor in X"
                )
            }
            Condition::YNeighborBound {
                vertex,
                found,
                bound,
            } => write!(
                f,
                "condition (iv): vertex {vertex} of X has {found} neighbors in Y, bound is {bound}"
            ),
            Condition::SourceHasTarget { vertex } => {
                write!(
                    f,
                    "source vertex {vertex} has no neighbor among the targets"
                )
            }
            Condition::EdgeSize {
                edge,
                size,
                min,
                max,
            } => {
                write!(
                    f,
                    "hyperedge {edge} has size {size}, outside [{min}, {max}]"
                )
            }
            Condition::ClassDegree {
                vertex,
                found,
                bound,
            } => write!(
                f,
                "vertex {vertex} has {found} neighbors in one color class, bound is {bound}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has no edges")]
    Edgeless,
    #[error("invalid hyperedge {edge}: {message}")]
    InvalidHyperedge { edge: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<usize>),
    #[error("graph is not K_1,{k}-free: center {} with leaves {:?}", .witness.center, .witness.leaves)]
    NotStarFree { k: usize, witness: StarWitness },
    #[error("{construction}: {condition}")]
    Precondition {
        construction: &'static str,
        condition: Condition,
    },
    #[error("resampling did not converge: {0}")]
    ResampleTimeout(TimeoutReport),
    #[error("instance with {n} vertices exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
