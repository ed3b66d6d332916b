use thiserror::Error;

/// Errors raised anywhere in the library. Variant names are part of the
/// command-line contract: the CLI reports them verbatim.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("polygon too thin to measure (aspect ratio {0:.3e})")]
    TooThin(f64),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("formula singular at this parameter: {0}")]
    Singularity(String),
    #[error("polygon is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("requested rectangle area {requested} exceeds half the body area {limit}")]
    AreaTooLarge { requested: f64, limit: f64 },
    #[error("boundary sweep found no sign change of the rectangle skew")]
    NoSignChange,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("perturbation rejected {0} times in a row")]
    PerturbFailed(usize),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed polygon file: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::NonFinite => "NonFinite",
            Error::TooThin(_) => "TooThin",
            Error::BadParam(_) => "BadParam",
            Error::Singularity(_) => "Singularity",
            Error::NotCentrallySymmetric => "NotCentrallySymmetric",
            Error::AreaTooLarge { .. } => "AreaTooLarge",
            Error::NoSignChange => "NoSignChange",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::PerturbFailed(_) => "PerturbFailed",
            Error::Io(_) => "Io",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
