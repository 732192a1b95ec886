use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("negative extent {0}")]
    NegativeExtent(f64),
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has zero area or repeated vertices")]
    DegeneratePolygon,
    #[error("polygon edges intersect")]
    SelfIntersecting,
    #[error("rectangle min exceeds max")]
    InvertedRect,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContourError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("node at index {index} carries id {id}")]
    NodeIdMismatch { index: usize, id: usize },
    #[error("node {0} lies outside its clip rectangle")]
    OutsideClip(usize),
    #[error("connection {index} references missing node {node}")]
    DanglingConnection { index: usize, node: usize },
    #[error("connection {0} joins a node to itself")]
    SelfConnection(usize),
    #[error("node {0} is empty and cannot be moved individually")]
    EmptyNodeMove(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShapeError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Contour(#[from] ContourError),
    #[error("area {width}x{height} is smaller than min_size {min_size}")]
    BelowMinSize {
        width: f64,
        height: f64,
        min_size: f64,
    },
    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: f64 },
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("link joins ball {0} to itself")]
    SelfLink(usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown object type {0:?}")]
    UnknownTag(String),
    #[error("unsupported scene version {0}")]
    Version(u64),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid object {id}: {source}")]
    InvalidObject { id: u64, source: ShapeError },
}

impl SceneError {
    /// Line of the offending input, when known.
    pub fn line(&self) -> Option<usize> {
        match self {
            SceneError::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}
