use std::collections::BTreeSet;

use thiserror::Error;

/// Reasons an arc list does not form a dependency tree rooted at node 0.
#[derive(Clone, Debug, Eq, Error, PartialEq)]
pub enum TreeError {
    #[error("arc ({head}, {dep}) is out of range for a sentence of length {n}")]
    ArcOutOfRange { head: usize, dep: usize, n: usize },

    #[error("token {0} is its own head")]
    SelfLoop(usize),

    #[error("token {0} has more than one head")]
    MultipleHeads(usize),

    #[error("cycle among tokens {0:?}")]
    Cycle(BTreeSet<usize>),

    #[error("tokens {0:?} are not reachable from the root")]
    Disconnected(BTreeSet<usize>),
}

/// Errors raised while reading CoNLL-U or label files.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl FormatError {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        FormatError::Malformed {
            line,
            message: message.into(),
        }
    }
}

/// A label string that does not belong to the label language of an encoding.
#[derive(Clone, Debug, Eq, Error, PartialEq)]
#[error("invalid label {label:?}: {reason}")]
pub struct LabelError {
    pub label: String,
    pub reason: String,
}

impl LabelError {
    pub(crate) fn new(label: &str, reason: impl Into<String>) -> Self {
        LabelError {
            label: label.to_owned(),
            reason: reason.into(),
        }
    }
}

/// Errors of the encoding and decoding pipelines.
#[derive(Clone, Debug, Eq, Error, PartialEq)]
pub enum CodecError {
    #[error("partition covers {partition} arcs but the tree has {tree}")]
    PartitionMismatch { partition: usize, tree: usize },

    #[error("token {token}: {source}")]
    Label {
        token: usize,
        #[source]
        source: LabelError,
    },

    #[error("token {0} has no PoS tag")]
    MissingTag(usize),

    #[error("expected {expected} task columns, found {found}")]
    TaskArity { expected: usize, found: usize },

    #[error("{labels} label rows for a sentence of {tokens} tokens")]
    LengthMismatch { labels: usize, tokens: usize },
}

/// Errors of corpus-level metrics.
#[derive(Clone, Debug, Eq, Error, PartialEq)]
pub enum MetricsError {
    #[error("corpora have {gold} and {pred} sentences")]
    CorpusLength { gold: usize, pred: usize },

    #[error("sentence {sentence}: gold has {gold} tokens, prediction has {pred}")]
    SentenceLength {
        sentence: usize,
        gold: usize,
        pred: usize,
    },

    #[error("label files have {left} and {right} task columns")]
    TaskArity { left: usize, right: usize },
}
