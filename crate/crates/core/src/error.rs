use core::fmt;

use crate::ovs::Infeasibility;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A tree needs at least one edge (use [`crate::Tree::singleton`] otherwise).
    EmptyEdgeList,
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    /// Adding `u`–`v` closes a cycle.
    CycleDetected { u: usize, v: usize },
    /// The vertex ids `0..vertex_count` do not form a single component.
    Disconnected { components: usize },
    InvalidVertex { vertex: usize, vertex_count: usize },
    /// A vertex id occurs twice in an outdegree-vertex sequence.
    DuplicateVertex { vertex: usize },
    /// An arc that would be a loop, a duplicate, or the reverse of an existing arc.
    InvalidArc { from: usize, to: usize },
    /// The outdegree-vertex sequence has no oriented realization.
    NotRealizable(Infeasibility),
    /// An oriented graph does not have the outdegrees a profile demands.
    ProfileMismatch { position: usize, expected: usize, found: usize },
    /// Colors `i` and `j` appear in each other's branch: a bi-colored path.
    NotStarColoring { i: usize, j: usize },
    /// An edge-to-color map does not have the expected shape.
    MalformedColoring(&'static str),
    /// Arguments outside the domain of a closed-form formula.
    Domain(&'static str),
    /// A profile lacks the shape a formula requires.
    ProfileShape(&'static str),
    NotCaterpillar,
    /// Coloring keys and tree edges differ.
    CoverageMismatch {
        missing: Option<(usize, usize)>,
        extra: Option<(usize, usize)>,
    },
    ColorOutOfPalette { edge: (usize, usize), color: usize, palette: usize },
    /// Input exceeds an exhaustive routine's tractability guard.
    TooLarge { size: usize, limit: usize },
    /// No coloring exists within the requested number of colors.
    Exceeded { max_colors: usize },
    /// An internal invariant failed. Always a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyEdgeList => write!(f, "edge list is empty"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            Error::CycleDetected { u, v } => write!(f, "edge {u}-{v} closes a cycle"),
            Error::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            Error::InvalidVertex { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (vertex count {vertex_count})")
            }
            Error::DuplicateVertex { vertex } => write!(f, "vertex {vertex} occurs twice"),
            Error::InvalidArc { from, to } => write!(f, "arc {from}->{to} is not allowed"),
            Error::NotRealizable(why) => write!(f, "sequence is not realizable: {why}"),
            Error::ProfileMismatch { position, expected, found } => write!(
                f,
                "profile position {position} expects outdegree {expected}, graph has {found}"
            ),
            Error::NotStarColoring { i, j } => {
                write!(f, "colors {i} and {j} appear in each other's branch")
            }
            Error::MalformedColoring(msg) => write!(f, "malformed coloring: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::ProfileShape(msg) => write!(f, "profile shape error: {msg}"),
            Error::NotCaterpillar => write!(f, "tree is not a caterpillar"),
            Error::CoverageMismatch { missing, extra } => {
                write!(f, "coloring does not match the edge set")?;
                if let Some((u, v)) = missing {
                    write!(f, "; edge {u}-{v} is uncolored")?;
                }
                if let Some((u, v)) = extra {
                    write!(f, "; {u}-{v} is not an edge")?;
                }
                Ok(())
            }
            Error::ColorOutOfPalette { edge, color, palette } => write!(
                f,
                "edge {}-{} has color {color} outside palette 1..={palette}",
                edge.0, edge.1
            ),
            Error::TooLarge { size, limit } => write!(f, "size {size} exceeds limit {limit}"),
            Error::Exceeded { max_colors } => {
                write!(f, "no star edge coloring with at most {max_colors} colors")
            }
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
