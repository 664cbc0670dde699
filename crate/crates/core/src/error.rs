use thiserror::Error;

use crate::ordering::ConditionViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letters must be distinct, got {0} twice")]
    SameLetter(u32),

    #[error("letter {0} does not occur in the word")]
    MissingLetter(u32),

    #[error("letter {0} is not part of the alphabet")]
    LetterOutsideAlphabet(u32),

    #[error("uniformity is undefined for the empty word")]
    EmptyWord,

    #[error("word alphabet does not match the vertex set: {0}")]
    AlphabetMismatch(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("invalid co-bipartite partition: {0}")]
    InvalidPartition(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("orientation is not acyclic")]
    NotAcyclic,

    #[error("clique side is not transitively oriented")]
    CliqueNotTransitive,

    #[error("graph is not co-bipartite")]
    NotCoBipartite,

    #[error("size cap exceeded: {what} = {value} > cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("certificate does not match the graph: {0}")]
    ClassMismatch(String),

    #[error("certificate violates ordering conditions: {0}")]
    InvalidCertificate(ConditionViolation),

    #[error("certificate contains Type B vertices; normalize first")]
    TypeBPresent,

    #[error("no placement for vertices without cross neighbours: {0}")]
    NoEmptyPlacement(String),

    #[error("constructed word fails verification on pair ({0}, {1})")]
    VerificationFailed(u32, u32),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
