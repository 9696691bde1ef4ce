use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// The witness lists the cycle's vertices in order; the last one points back to the first.
    #[error("directed cycle detected: {}", format_cycle(.0))]
    CycleDetected(Vec<usize>),

    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("paths do not share endpoints")]
    EndpointMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("n = {n} exceeds the enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("degenerate interval [{lo}, {hi}]")]
    DegenerateInterval { lo: String, hi: String },
}

fn format_cycle(cycle: &[usize]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
    if let Some(first) = cycle.first() {
        parts.push(first.to_string());
    }
    parts.join(" -> ")
}
