use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("ideal is not admissible: paths of length {cap} do not all vanish")]
    NonAdmissible { cap: usize },
    #[error("representation violates {0}")]
    InvalidRep(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("characteristic {p} too small for dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("decomposition inconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("input is projective; the translate is undefined")]
    ProjectiveInput,
    #[error("input is injective; the inverse translate is undefined")]
    InjectiveInput,
    #[error("object is projective in the monomorphism category")]
    ProjectiveObject,
    #[error("object is injective in the monomorphism category")]
    InjectiveObject,
    #[error("object is not in S(C): {0}")]
    NotInS(String),
    #[error("object is not in F(C): {0}")]
    NotInF(String),
    #[error("membership failure: {0}")]
    MembershipFailure(String),
    #[error("no rel-injective embedding found for generator {0}")]
    NotEnoughInjectives(usize),
    #[error("no rel-projective deflation found for generator {0}")]
    NotEnoughProjectives(usize),
    #[error("backend cannot do this: {0}")]
    BackendUnsupported(String),
    #[error("backend validation failed: {0}")]
    BackendInvalid(String),
    #[error("subcategory is not Frobenius")]
    NotFrobenius,
    #[error("knitting exceeded the cap of {0} objects")]
    CapExceeded(usize),
    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
