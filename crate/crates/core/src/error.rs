use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("empty generator list")]
    NoGenerators,

    #[error("{what}: order {order} exceeds the enumeration cap {cap}")]
    Capacity {
        what: &'static str,
        order: String,
        cap: u64,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is soluble; the soluble graph is only defined for insoluble groups")]
    SolubleInput,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown group name {0:?}")]
    UnknownName(String),

    #[error("{name} expects {expected} argument(s), got {found}")]
    BadArity {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("generator file line {line}: {message}")]
    GeneratorFile { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("element {0} is not a vertex of the graph")]
    NotAVertex(String),

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("group has odd order and contains no involutions")]
    NoInvolutions,

    #[error("{0} is not a Sophie Germain prime of size at least 5")]
    NotSophieGermain(u64),

    #[error("certificate: {0}")]
    Certificate(String),

    #[error("predicate budget of {0} calls exhausted")]
    Budget(u64),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, order: impl ToString, cap: u64) -> Self {
        Error::Capacity {
            what,
            order: order.to_string(),
            cap,
        }
    }
}
