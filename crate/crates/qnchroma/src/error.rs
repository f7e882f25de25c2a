use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Pure arithmetic on vertices never fails; errors come from boundary checks,
/// file parsing, and the size gates that keep exact enumeration feasible.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} out of range 1..=30")]
    DimOutOfRange(u32),
    #[error("vertex {v:#x} has bits above dimension n={n}")]
    VertexOutOfRange { v: u32, n: u32 },
    #[error("direction {dir} out of range for n={n}")]
    DirOutOfRange { dir: u32, n: u32 },
    #[error("edge id {id} out of range for n={n}")]
    EdgeOutOfRange { id: u64, n: u32 },
    #[error("neighbourhood radius {k} out of range 0..={n}")]
    RadiusOutOfRange { k: u32, n: u32 },

    #[error("colour count {0} out of range 2..=16")]
    ColourCountOutOfRange(u8),
    #[error("colour out of range")]
    ColourOutOfRange,
    #[error("operation requires a 2-colouring, got {0} colours")]
    TwoColoursRequired(u8),
    #[error("direction colouring needs r <= n, got r={r}, n={n}")]
    TooManyDirections { r: u8, n: u32 },
    #[error("Hamming colouring needs n = 2^k - 1, got n={0}")]
    NotHammingDimension(u32),
    #[error("antipodal- random colouring needs n >= 2")]
    AntipodalNeedsN2,
    #[error("sub-cube restriction: fixed values {values:#x} outside mask {mask:#x}")]
    InconsistentSubcube { mask: u32, values: u32 },
    #[error("colour file: {0}")]
    MalformedColourFile(String),

    #[error("vertex {y:#x} outside the table scope")]
    OutOfScope { y: u32 },
    #[error("distance {d} leaves the quantity undefined (needs {lo} <= d <= {hi})")]
    DistanceUndefined { d: u32, lo: u32, hi: u32 },
    #[error("k={k} out of range {lo}..={hi}")]
    KOutOfRange { k: u32, lo: u32, hi: u32 },
    #[error("{what} is gated at n <= {limit}, got n={n}")]
    GateExceeded {
        what: &'static str,
        limit: u32,
        n: u32,
    },
    #[error("hypergeometric moments need 0 <= k, r <= n and n >= 2 (k={k}, r={r}, n={n})")]
    MomentsOutOfRange { n: u64, k: u64, r: u64 },
    #[error("the n(n-1)(n-2) variance mode needs n >= 3, got n={0}")]
    PaperModeNeedsN3(u64),

    #[error("exhaustive colouring scan is only feasible for n <= 3, got n={0}")]
    ExhaustiveScanTooLarge(u32),
    #[error("malformed spanning tree: {0}")]
    MalformedTree(String),
    #[error("the Hamming component bound is implemented for n in {{3, 7}}, got n={0}")]
    UnsupportedHammingBound(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Usage(String),
}
