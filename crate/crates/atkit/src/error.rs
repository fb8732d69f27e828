use thiserror::Error;

/// Crate-wide error type. Witness-carrying variants store vertex *names*
/// so messages stay meaningful without a graph in hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    InvalidVertex(String),

    #[error("graph is disconnected; unreachable vertices: {unreachable:?}")]
    DisconnectedGraph { unreachable: Vec<String> },

    #[error("betweenness query requires three distinct vertices")]
    InvalidTriple,

    #[error("ordering is not a permutation of the vertex set")]
    PermutationMismatch,

    #[error("no convexity-preserving choice at step {step}; queue was {queue:?}")]
    ConvexChoiceUnavailable { step: usize, queue: Vec<String> },

    #[error("vertex `{0}` is not admissible")]
    NotAdmissible(String),

    #[error("graph contains a claw with base `{base}` and prongs {prongs:?}")]
    NotClawFree { base: String, prongs: [String; 3] },

    #[error("graph contains a bad claw with base `{base}` and prongs {prongs:?}")]
    BadClawPresent { base: String, prongs: [String; 3] },

    #[error("graph contains the asteroidal triple {triple:?}")]
    NotAtFree { triple: [String; 3] },

    #[error("`{0}` and `{1}` are not a dominating pair")]
    NotDominatingPair(String, String),

    #[error("graph has {n} vertices, exceeding the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("duplicate edge on line {line}: {edge}")]
    DuplicateEdge { line: usize, edge: String },

    #[error("self-loop on line {line}: {vertex}")]
    SelfLoop { line: usize, vertex: String },

    #[error("corpus filter accepted {accepted} of {attempts} candidates; rate below the configured floor")]
    FilterTooRestrictive { attempts: usize, accepted: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
