use thiserror::Error;

/// Errors reported by fallible operations.
///
/// Violations of same-degree preconditions on hot-path group operations
/// (composition, dominance comparison) panic instead; everything a caller
/// can plausibly hit with well-typed but oversized or malformed input is
/// reported here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the cap {max}")]
    DegreeCap { degree: usize, max: usize },

    #[error("refusing {products} products (budget {budget})")]
    ProductBudget { products: u128, budget: u64 },

    #[error("integer overflow in {0}; exact 128-bit arithmetic exhausted")]
    Overflow(&'static str),

    #[error("two-row shape (n-m, m) requires 0 <= m <= n/2; got n={n}, m={m}")]
    InvalidTwoRowShape { n: usize, m: usize },

    #[error("invalid code query (n={n}, k={k}): {reason}")]
    InvalidQuery { n: usize, k: usize, reason: String },

    #[error("|X|*|Y_k| = {product} is not a multiple of |S_n| = {order}: not a code")]
    NotACode { product: u128, order: u128 },

    #[error("cycle-type criterion and character criterion disagree on {0}; this is a bug or a refutation")]
    CriteriaDisagree(String),

    #[error("connection set contains the identity")]
    IdentityInConnectionSet,

    #[error("connection set is not inverse-closed: {0} lacks its inverse")]
    NotInverseClosed(String),

    #[error("empty factor set {0}")]
    EmptySet(&'static str),

    #[error("factor set {0} contains duplicate elements")]
    DuplicateElements(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
