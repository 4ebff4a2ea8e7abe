use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different variable universes")]
    UniverseMismatch,
    #[error("exponent overflow: result exceeds the cap of {cap}")]
    ExponentOverflow { cap: u32 },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("universe has {0} variables; at most {max} are supported", max = crate::varset::MAX_VARS)]
    TooManyVariables(usize),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("vertex `{0}` has weight 0; weights must be positive")]
    NonPositiveWeight(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge ({0}, {1}) appears twice")]
    DuplicateEdge(String, String),
    #[error("edges ({0}, {1}) and ({1}, {0}) are both present")]
    AntiParallelEdge(String, String),
    #[error("expected {expected} {what}, got {got}")]
    LengthMismatch { what: &'static str, expected: usize, got: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertex set is not a vertex cover")]
    NotACover,
    #[error(
        "graph has {vertices} vertices, above the enumeration cap of {cap} \
         (raise it with --max-vertices)"
    )]
    CoverCapExceeded { vertices: usize, cap: usize },
    #[error("power {s} exceeds the cap of {cap} (raise it with --max-power)")]
    PowerCapExceeded { s: u32, cap: u32 },
    #[error(
        "ideal has {count} generators, above the ceiling of {cap} \
         (raise it with --max-generators)"
    )]
    GeneratorCapExceeded { count: usize, cap: usize },
    #[error("intersection of irreducible components differs from the edge ideal")]
    DecompositionMismatch,
    #[error("invalid power range: {0}")]
    InvalidPowerRange(String),
    #[error("graph does not satisfy the {family} precondition: {clause}")]
    FamilyPrecondition { family: &'static str, clause: String },
}
