//! Deciding the "fewer unordered sections" preorder on tuples of finite sets.
//!
//! An *unordered section* of an n-tuple of nonempty sets `(X_1, ..., X_n)` is
//! a multiset `[a_1, ..., a_n]` that can be matched against the tuple: some
//! permutation sigma places `a_i` into `X_{sigma(i)}` for every `i`. Writing
//! `Sec X` for the collection of all sections, the preorder decided here is
//!
//! ```text
//!     X ⊑ Y   iff   Sec X ⊆ Sec Y .
//! ```
//!
//! The crate provides two independent decision routes plus the surrounding
//! analysis toolkit:
//!
//! * [`order::naive_check`] enumerates the sections of `X` and tests each one
//!   against `Y` by bipartite matching; this is the brute-force oracle.
//! * [`order::fast_check`] builds the least monotone cover of the map
//!   `chi_Y(a) -> chi_X(a)` over the boolean lattice `B^n` and sweeps it by
//!   weight level: `X ⊑ Y` holds exactly when the cover never exceeds the
//!   weight of its argument.
//! * [`order::witness`] extracts that cover as an increasing, contractive
//!   truth table whenever the order holds, and [`order::lift`] replays any
//!   boolean function on `B^n` as a set operator.
//! * [`refute`] builds a strictly increasing function on wide words whose
//!   wire pairs can always be told apart under any small set of zero-pins;
//!   its report certifies that no finite cell basis generates the contractive
//!   increasing functions of that width.
//!
//! Families, truth tables, and reports all have JSON renderings in [`json`];
//! the `secord` binary exposes the whole toolkit on the command line.

pub mod bitword;
pub mod boolfn;
pub mod family;
pub mod json;
pub mod order;
pub mod perm;
pub mod random;
pub mod refute;

pub use bitword::BitWord;
pub use boolfn::BooleanFunction;
pub use family::{GroundSet, Section, SetFamily};
pub use order::CoverMap;
pub use perm::Permutation;
pub use refute::RefutationReport;

/// Widest word that fits the packed representation.
pub const MAX_WIDTH: usize = 62;

/// Resource limits for the enumeration- and sweep-based operations.
///
/// `product_cap` bounds the size of the cartesian product walked by the
/// brute-force section enumeration; `sweep_width` bounds the word width `n`
/// for anything that materializes or walks all `2^n` words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub product_cap: u64,
    pub sweep_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            product_cap: 1_000_000,
            sweep_width: 24,
        }
    }
}

/// Errors for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word width must be between 1 and {MAX_WIDTH}, got {0}")]
    InvalidWidth(usize),
    #[error("weight {weight} out of range for width {width}")]
    WeightOutOfRange { weight: usize, width: usize },
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("invalid word {0:?}: expected 1..={MAX_WIDTH} characters drawn from '0'/'1'")]
    InvalidWord(String),
    #[error("duplicate ground element {0:?}")]
    DuplicateLabel(String),
    #[error("unknown ground element {0:?}")]
    UnknownLabel(String),
    #[error("ground set must not be empty")]
    EmptyGround,
    #[error("family must have at least one component")]
    NoComponents,
    #[error("component {index} is empty; sections and order queries need nonempty components")]
    EmptyComponent { index: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("families are over different ground sets")]
    GroundMismatch,
    #[error("section has arity {section}, family has arity {family}")]
    SectionArityMismatch { section: usize, family: usize },
    #[error("division needs sections of arity at least 2, got {0}")]
    DivisionArityTooSmall(usize),
    #[error("division by an empty set is undefined")]
    EmptyDivisor,
    #[error("sections of mixed arities ({0} and {1}) in one collection")]
    MixedArities(usize, usize),
    #[error("component product {product} exceeds the enumeration cap {cap}")]
    ProductCapExceeded { product: u128, cap: u64 },
    #[error("width {width} exceeds the sweep cap {cap}")]
    SweepWidthExceeded { width: usize, cap: usize },
    #[error("not a permutation: images must be 1..=n, each exactly once")]
    InvalidPermutation,
    #[error("coordinates must satisfy 1 <= i < j <= {width}, got ({i}, {j})")]
    InvalidCellCoordinates { i: usize, j: usize, width: usize },
    #[error("truth table must list {expected} outputs, got {got}")]
    TableLengthMismatch { expected: usize, got: usize },
    #[error("operation requires an increasing contractive function")]
    NotContractiveIncreasing,
    #[error("separating function needs an even width of at least 8, got {0}")]
    InvalidSeparatingWidth(usize),
    #[error("cell arity must be at least 2, got {0}")]
    ArityBelowRange(usize),
    #[error("canonical family width must be between 1 and {max}, got {0}", max = family::CANONICAL_FAMILY_MAX_WIDTH)]
    CanonicalFamilyWidth(usize),
    #[error("pinned coordinates must be distinct, differ from the tested pair, and lie in 1..=n")]
    InvalidPlacement,
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
