use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=62")]
    OrderOutOfRange(usize),

    #[error("malformed graph6 record {record:?}: {reason}")]
    Graph6 { record: String, reason: String },

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("k = {k} is outside 2..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("terminal set needs at least 2 vertices, got {0}")]
    TooFewTerminals(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge { what: &'static str, max: usize, n: usize },

    #[error("{what} supports orders {min}..={max}, got {n}")]
    UnsupportedOrder { what: &'static str, min: usize, max: usize, n: usize },

    #[error("coloring has {got} entries for a graph of order {n}")]
    ColoringLength { got: usize, n: usize },

    #[error("color {color} at vertex {vertex} exceeds the palette of {palette}")]
    ColorOutOfPalette { vertex: usize, color: u8, palette: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cache {path}, line {line}: {reason}")]
    CacheRecord { path: String, line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
