use core::fmt;

/// Everything that can go wrong across the crate.
///
/// Variants split into three rough families: malformed inputs (bad vertex
/// indices, duplicate arcs, walks that leave the graph), requests that are
/// well-formed but out of scope for an exact algorithm (`TooLarge`,
/// `BudgetExceeded`), and `ReductionViolation`, which signals that a
/// cross-check between two algorithms that must agree did not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is `>= n` for a graph on `n` vertices.
    VertexOutOfRange { vertex: usize, limit: usize },
    /// An arc or edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same arc was listed twice.
    DuplicateArc { u: usize, v: usize },
    /// Both `(u, v)` and `(v, u)` were listed; orientations of simple
    /// graphs carry at most one arc per vertex pair.
    OppositeArcs { u: usize, v: usize },
    /// The same undirected edge was listed twice.
    DuplicateEdge { u: usize, v: usize },
    /// A closed walk needs at least two vertices.
    WalkTooShort { len: usize },
    /// A walk step joins two vertices with no arc or edge between them.
    NotAdjacent { u: usize, v: usize },
    /// Balance is only defined for closed walks of even length.
    OddWalk { len: usize },
    /// Two graphs that must share a vertex count do not.
    VertexCountMismatch { left: usize, right: usize },
    /// Two graphs that must share an underlying graph do not.
    UnderlyingMismatch,
    /// A forest-only operation was handed a graph with a cycle.
    NotAForest,
    /// An operation that needs a connected graph got a disconnected one.
    NotConnected,
    /// A bipartition was required and none exists.
    NotBipartite,
    /// An edge has both endpoints on the same side of a claimed bipartition.
    PartitionMismatch { u: usize, v: usize },
    /// A vertex mapping has the wrong domain size.
    MappingSizeMismatch { expected: usize, found: usize },
    /// A constructor was handed a parameter outside its defined range.
    InvalidParameter { what: &'static str },
    /// The instance is beyond the hard cap of an exhaustive algorithm.
    TooLarge { what: &'static str, limit: usize },
    /// A backtracking search gave up after exploring `budget` nodes.
    BudgetExceeded { budget: u64 },
    /// Two computations that must agree by construction disagreed.
    ReductionViolation { detail: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::VertexOutOfRange { vertex, limit } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph on {limit} vertices"
                )
            }
            Error::SelfLoop { vertex } => write!(f, "loop at vertex {vertex} is not allowed"),
            Error::DuplicateArc { u, v } => write!(f, "arc ({u}, {v}) listed more than once"),
            Error::OppositeArcs { u, v } => {
                write!(f, "arcs ({u}, {v}) and ({v}, {u}) cannot coexist")
            }
            Error::DuplicateEdge { u, v } => write!(f, "edge {{{u}, {v}}} listed more than once"),
            Error::WalkTooShort { len } => {
                write!(f, "closed walk needs at least 2 vertices, got {len}")
            }
            Error::NotAdjacent { u, v } => {
                write!(f, "walk step {u}, {v} joins non-adjacent vertices")
            }
            Error::OddWalk { len } => {
                write!(
                    f,
                    "balance is undefined for odd closed walks (length {len})"
                )
            }
            Error::VertexCountMismatch { left, right } => {
                write!(f, "vertex counts differ: {left} vs {right}")
            }
            Error::UnderlyingMismatch => write!(f, "graphs have different underlying graphs"),
            Error::NotAForest => write!(f, "operation requires a forest, input has a cycle"),
            Error::NotConnected => write!(f, "operation requires a connected graph"),
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::PartitionMismatch { u, v } => {
                write!(
                    f,
                    "edge {{{u}, {v}}} lies inside one side of the bipartition"
                )
            }
            Error::MappingSizeMismatch { expected, found } => {
                write!(
                    f,
                    "vertex mapping covers {found} vertices, expected {expected}"
                )
            }
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::TooLarge { what, limit } => {
                write!(f, "{what} exceeds the exhaustive-search cap of {limit}")
            }
            Error::BudgetExceeded { budget } => {
                write!(f, "search budget of {budget} nodes exhausted")
            }
            Error::ReductionViolation { detail } => write!(f, "cross-check failed: {detail}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
