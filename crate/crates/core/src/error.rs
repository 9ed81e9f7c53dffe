use thiserror::Error;

/// Errors shared by every pipeline stage.
///
/// `Degenerate` covers genuinely mathematical failure modes (singular
/// curve, degenerate octad, non-generic contact); callers that
/// distinguish exit codes treat it separately from plain `Numeric`
/// failures, which mean the working precision was exhausted.
#[derive(Debug, Error)]
pub enum Error {
    #[error("nothing to eliminate: both inputs have degree 0 in the variable")]
    NothingToEliminate,

    #[error("root finding did not converge; best candidates attached")]
    NonConvergence { candidates: Vec<crate::num::Cplx> },

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("degenerate quartic or precision exhausted: found {found} bitangents")]
    BitangentCount { found: usize },

    #[error("non-generic contact: coincident contact points across distinct lines")]
    NonGenericContact,

    #[error("contact scheme degenerate: kernel dimension {dim}, expected 4")]
    ContactSchemeDegenerate { dim: usize },

    #[error("octad degenerate: {0}")]
    OctadDegenerate(String),

    #[error("seven points non-generic: zero denominator in the eighth-point formula")]
    SevenPointsNonGeneric,

    #[error("degenerate configuration: a 4x4 minor vanishes to tolerance")]
    DegenerateConfiguration,

    #[error("bitangent matrix does not match the bitangent set")]
    BitangentMatching,

    #[error("duplicate representation classes detected")]
    DuplicateClasses,

    #[error("orbit classification failed: {0}")]
    OrbitClassify(String),

    #[error("apply normalize_coordinates first: repeated eigenvalues")]
    RepeatedEigenvalues,

    #[error("coordinate normalization failed after {tries} random frames")]
    NormalizationFailed { tries: usize },

    #[error("non-generic contact conic system: {0}")]
    NonGenericConicSystem(String),

    #[error("Steiner span degenerate: {0}")]
    SteinerDegenerate(String),

    #[error("f not a sum of squares: semidefinite program infeasible")]
    SdpInfeasible,

    #[error("expected exactly 8 psd rank-3 Gram matrices, found {found}")]
    VertexCount { found: usize },

    #[error("discriminant of the net vanishes, classification undefined")]
    NetDiscriminantZero,

    #[error("inconsistent classification evidence: {0}")]
    InconsistentEvidence(String),

    #[error("linear solve failed: {0}")]
    LinearSolve(String),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
