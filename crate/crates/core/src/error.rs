use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("braid syntax error at column {column}: unexpected token `{token}`")]
    BraidSyntax { column: usize, token: String },
    #[error("braid letter at column {column} is zero")]
    ZeroLetter { column: usize },
    #[error("braid letter {letter} needs at least {} strands, but strands={strands}", letter.unsigned_abs() + 1)]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count must be at least 1")]
    InvalidStrands,

    #[error("PD syntax error at column {column}: {message}")]
    PdSyntax { column: usize, message: String },
    #[error("arc {arc} appears {count} time(s); every arc must appear exactly twice")]
    ArcMultiplicity { arc: u32, count: usize },
    #[error("arc labels must be positive integers")]
    ZeroArc,
    #[error("no consistent orientation: component through arc {arc} passes under in both directions")]
    Unorientable { arc: u32 },
    #[error("inconsistent crossing data: {0}")]
    Inconsistent(String),
    #[error("diagram is not planar: traced {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },

    #[error("diagram is disconnected")]
    Disconnected,
    #[error("diagram has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("braid needs at least {needed} strands for this site, has {strands}")]
    TooFewStrands { needed: usize, strands: usize },
    #[error("offset {offset} is outside the word of length {len}")]
    OffsetOutOfRange { offset: usize, len: usize },
    #[error("invalid sharp site: {0}")]
    InvalidSite(String),
    #[error("crossings do not form a sharp tangle: {0}")]
    NotSharpPattern(String),

    #[error("diagram has {crossings} crossings, bracket budget is {budget}")]
    CrossingBudget { crossings: usize, budget: usize },

    #[error("s lower bound {0} is negative and not exact; mirror the diagram first")]
    NegativeSBound(i64),
    #[error("genus bound {genus} is below the Bennequin-type bound {half_bound}/2")]
    InvalidGenusBound { genus: i64, half_bound: i64 },
    #[error("witness of {witness} sharp moves contradicts the lower bound {lower}")]
    InconsistentWitness { witness: u64, lower: u64 },
    #[error("bounds are not pinned: {0}")]
    BoundsNotPinned(String),

    #[error("table row {row}: {source}")]
    TableRow { row: usize, source: Box<KnotError> },
    #[error("table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, KnotError>;
