use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} closes a cycle")]
    Cycle(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeSequenceError {
    #[error("empty degree sequence")]
    Empty,
    #[error("entry {index} is {value}; tree degrees must be positive")]
    NonPositive { index: usize, value: i64 },
    #[error("degree sum {sum} differs from 2(n-1) = {expected}")]
    BadSum { sum: i64, expected: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruferError {
    #[error("Prüfer encoding needs at least two vertices")]
    TooSmall,
    #[error("code of length {len} cannot describe a tree on {order} vertices")]
    LengthMismatch { len: usize, order: usize },
    #[error("code entry {entry} out of range for order {order}")]
    EntryOutOfRange { entry: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("a star needs at least one leaf")]
    NoLeaves,
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("caterpillar spine is empty")]
    EmptySpine,
    #[error("spine slot {index} has degree {degree}, below the {required} its spine neighbours need")]
    InfeasibleSpine {
        index: usize,
        degree: usize,
        required: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} outside the enumeration guard 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("degree sequence would need {codes} Prüfer codes, above the cap of {cap}")]
    StreamTooLarge { codes: u128, cap: u128 },
    #[error(transparent)]
    DegreeSequence(#[from] DegreeSequenceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelocationError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("vertex {donor} is not a leaf adjacent to {support}")]
    DonorNotLeaf { support: usize, donor: usize },
    #[error("vertex {recipient} is not adjacent to {support}")]
    RecipientNotNeighbor { support: usize, recipient: usize },
    #[error("recipient and donor are the same vertex {0}")]
    RecipientIsDonor(usize),
    #[error("lambda below 3: support vertex {support} has degree {degree}")]
    LambdaBelowThree { support: usize, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("unknown formula id `{0}`")]
    UnknownId(String),
    #[error("formula `{id}` takes {expected} values, got {found}")]
    Arity {
        id: &'static str,
        expected: String,
        found: usize,
    },
    #[error("formula `{id}` domain violation: {reason}")]
    Domain { id: &'static str, reason: String },
    #[error("formula `{0}` overflowed 64-bit range")]
    Overflow(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("class needs an order or a degree sequence")]
    Unbounded,
    #[error("order {order} disagrees with the degree sequence length {len}")]
    OrderMismatch { order: usize, len: usize },
    #[error("class is empty")]
    Empty,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermSearchError {
    #[error("tuple length {len} above the permutation guard {max}")]
    TooLong { len: usize, max: usize },
    #[error("empty tuple")]
    Empty,
    #[error("caterpillar interpretation needs every value >= 2, found {0}")]
    CaterpillarDegree(i64),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    PermSearch(#[from] PermSearchError),
    #[error("fixture error: {0}")]
    Fixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed entry `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: u64 },
    #[error("line {line}: duplicate edge {a}-{b}")]
    DuplicateEdge { line: usize, a: u64, b: u64 },
    #[error("line {line}: cycle closed by edge {a}-{b}")]
    Cycle { line: usize, a: u64, b: u64 },
    #[error("input is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("no edges found")]
    Empty,
    #[error(transparent)]
    DegreeSequence(#[from] DegreeSequenceError),
}
