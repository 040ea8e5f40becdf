use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unexpected symbol {symbol:?} at position {position}")]
    BadSymbol { symbol: char, position: usize },
    #[error("word mixes the z and x alphabets")]
    MixedAlphabet,
    #[error("binary operation on words over different alphabets")]
    AlphabetMismatch,
    #[error("\"1\" denotes the identity and cannot be combined with letters")]
    IdentityMixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimitivityError {
    #[error("w(m, n) requires 1 <= m <= n, got m = {m}, n = {n}")]
    BadCounts { m: u64, n: u64 },
    #[error("word contains inverse letters; expected a positive word")]
    NotPositive,
    #[error("word must contain both generators")]
    MissingGenerator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("p must be at least 2, got {0}")]
    PTooSmall(u64),
    #[error("q must satisfy 0 < q < p, got p = {p}, q = {q}")]
    QOutOfRange { p: u64, q: u64 },
    #[error("gcd(p,q) must be 1, got gcd({p},{q}) = {gcd}")]
    NotCoprime { p: u64, q: u64, gcd: u64 },
    #[error("index j = {j} out of range 0..={p}")]
    IndexOutOfRange { p: u64, j: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplacementError {
    #[error("replacement tail n1 + n2 - q is negative ({n1} + {n2} < {q})")]
    NegativeTail { n1: u64, n2: u64, q: u64 },
    #[error("power forms have different block exponents ({0} vs {1})")]
    BlockMismatch(u64, u64),
    #[error("continued fraction requires coprime positive integers, got {0}/{1}")]
    BadFraction(u64, u64),
    #[error("P(V) is contractible; no witness exists")]
    ContractibleInput,
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("malformed record: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected schema {expected:?}, found {found:?}")]
    Schema { expected: String, found: String },
}
