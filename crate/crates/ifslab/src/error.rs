use std::fmt;

/// CLI failure classes, keyed to exit codes: configuration and parse
/// problems exit 2, refused resource caps exit 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Resource(msg) => write!(f, "resource cap: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type Result<T> = std::result::Result<T, CliError>;

impl From<contfrac::CfError> for CliError {
    fn from(err: contfrac::CfError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<symbolic::SymbolicError> for CliError {
    fn from(err: symbolic::SymbolicError) -> Self {
        match err {
            symbolic::SymbolicError::GenerationCap { .. } => CliError::Resource(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<ifs_engine::IfsError> for CliError {
    fn from(err: ifs_engine::IfsError) -> Self {
        match err {
            ifs_engine::IfsError::Symbolic(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<separation::SeparationError> for CliError {
    fn from(err: separation::SeparationError) -> Self {
        match err {
            separation::SeparationError::Ifs(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<phit::PhitError> for CliError {
    fn from(err: phit::PhitError) -> Self {
        match err {
            phit::PhitError::LevelCap { .. } => CliError::Resource(err.to_string()),
            phit::PhitError::Cf(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<limsup_lab::LimsupError> for CliError {
    fn from(err: limsup_lab::LimsupError) -> Self {
        match err {
            limsup_lab::LimsupError::LevelCap { .. }
            | limsup_lab::LimsupError::GridTooFine { .. } => CliError::Resource(err.to_string()),
            limsup_lab::LimsupError::Ifs(inner) => inner.into(),
            limsup_lab::LimsupError::Symbolic(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<families::FamiliesError> for CliError {
    fn from(err: families::FamiliesError) -> Self {
        match err {
            families::FamiliesError::ScanDepthCap { .. } => CliError::Resource(err.to_string()),
            families::FamiliesError::Ifs(inner) => inner.into(),
            families::FamiliesError::Symbolic(inner) => inner.into(),
            families::FamiliesError::Separation(inner) => inner.into(),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Usage(format!("i/o failure: {err}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Usage(format!("csv failure: {err}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Usage(format!("json failure: {err}"))
    }
}
