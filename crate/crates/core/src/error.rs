use thiserror::Error;

use crate::config_graph::UndecidedViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong across the crate.
///
/// Parse errors carry a 1-based line number; `line == 0` means the input did
/// not come from a file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: unknown letter `{token}`")]
    UnknownLetter { line: usize, token: String },
    #[error("line {line}: empty image for `{token}`")]
    EmptyImage { line: usize, token: String },
    #[error("line {line}: duplicate rule for `{token}`")]
    DuplicateRule { line: usize, token: String },
    #[error("line {line}: duplicate vertex `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: unknown {side} vertex `{id}`")]
    UnknownVertex {
        line: usize,
        side: &'static str,
        id: String,
    },
    #[error("duplicate letter token `{0}`")]
    DuplicateToken(String),
    #[error("letter #{0} is outside the alphabet")]
    LetterOutsideAlphabet(u32),
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("{0} must be a nonempty word")]
    EmptyWord(&'static str),
    #[error("bound must be positive")]
    ZeroBound,
    #[error("window range is empty: lo = {lo}, hi = {hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("substitution is not primitive")]
    NotPrimitive,
    #[error("substitution is not prefix free: image of `{0}` is a prefix of image of `{1}`")]
    NotPrefixFree(String, String),
    #[error("substitution is not postfix free: image of `{0}` is a suffix of image of `{1}`")]
    NotPostfixFree(String, String),
    #[error("alphabet has a single letter; no aperiodic substitution exists")]
    DegenerateAlphabet,
    #[error("no {side} segregating number up to {bound}")]
    NotSegregating { side: &'static str, bound: usize },
    #[error("no power up to {0} makes all four letter graphs subfixed")]
    NoSubfixingPower(usize),
    #[error("images of the power {power} exceed {limit} letters")]
    PowerTooLarge { power: usize, limit: usize },
    #[error("segregating guarantee violated for pair ({0}, {1})")]
    SegregationViolated(String, String),
    #[error("equation fails: image of the center is not left wing · center · right wing")]
    EquationFails,
    #[error("center `{0}` is not in the language")]
    CenterNotInLanguage(String),
    #[error("generator is not a generator of the given substitution")]
    SubstitutionMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not undecided: {0}")]
    NotUndecided(UndecidedViolation),
}
