use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("graph has {0} vertices, the cap is {cap}", cap = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("host graph is disconnected")]
    Disconnected,
    #[error("host graph is empty")]
    Empty,
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("input graph is not outerplanar")]
    NotOuterplanar,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("parameters out of domain: {0}")]
    Domain(String),
    #[error("triplet ({{{r},{m}}};{g}) admits no planar graph")]
    Infeasible { r: u32, m: u32, g: u32 },
    #[error("table mismatch: {0}")]
    Mismatch(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },
    #[error("unknown family or solid: {0}")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {0} exceeds the search cap")]
    SizeCap(usize),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("search was not exhaustive")]
    NotExhaustive,
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("checkpoint io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
