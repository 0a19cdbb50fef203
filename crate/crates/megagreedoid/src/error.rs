//! Error type shared by the whole crate.

use crate::megagreedoid::AxiomReport;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("ground set has {size} elements; at most 16 are supported")]
    GroundTooLarge { size: usize },

    #[error("bad ground labels: {reason}")]
    BadGroundLabels { reason: String },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("ground sets overlap on label `{label}`")]
    LabelCollision { label: String },

    #[error("malformed rank table: {reason}")]
    MalformedTable { reason: String },

    #[error("structure fails the defining axioms:\n{report}")]
    AxiomFailure { report: AxiomReport },

    #[error("set {set} is not in the feasible family")]
    InfeasibleSet { set: String },

    #[error("{lower} is not contained in {upper}")]
    NotNested { lower: String, upper: String },

    #[error("interval [{lower}, {upper}] is not boolean")]
    NotBooleanInterval { lower: String, upper: String },

    #[error("permutation is not feasible: prefix {prefix} is outside the family")]
    InfeasiblePermutation { prefix: String },

    #[error("function is not rank-feasible: level set {set} is outside the family")]
    InfeasibleFunction { set: String },

    #[error("expected {expected} function values, got {got}")]
    BadFunctionLength { expected: usize, got: usize },

    #[error("rooted graph is not connected: vertex `{vertex}` cannot reach the root")]
    DisconnectedGraph { vertex: String },

    #[error("root label `{label}` collides with a ground label")]
    RootLabelClash { label: String },

    #[error("self-loops are not supported")]
    SelfLoop,

    #[error("relation is not a partial order: {reason}")]
    InvalidPoset { reason: String },

    #[error("rank table is not a greedoid: {reason}")]
    InvalidGreedoid { reason: String },

    #[error("rank table is not a polymatroid: {reason}")]
    InvalidPolymatroid { reason: String },

    #[error("half-edges are not supported by this operation")]
    HalfEdgesUnsupported,

    #[error("chain is not a facet chain (must step by single elements from bottom to top)")]
    NotFacetChain,

    #[error("greedy order is not a shelling: facet {facet} contributes {count} minimal new faces")]
    ShellingFailure { facet: String, count: usize },

    #[error("cannot relabel: ground sets carry different label sets")]
    IncompatibleGround,

    #[error("invalid rational `{text}`")]
    BadRational { text: String },

    #[error("invalid document: {reason}")]
    BadDocument { reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
