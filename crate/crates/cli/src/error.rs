use std::io;

use serde_json::json;
use thiserror::Error;

/// Failures reported by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}")]
    Validation {
        parameter: Option<String>,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn validation(parameter: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Validation {
            parameter: Some(parameter.into()),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } => 2,
            CliError::Io { .. } => 3,
            CliError::Numerical(_) => 4,
        }
    }

    /// Machine-readable form written to standard error.
    pub fn to_json(&self) -> String {
        let value = match self {
            CliError::Validation { parameter, message } => json!({
                "error": "validation",
                "parameter": parameter,
                "message": message,
            }),
            CliError::Io { path, source } => json!({
                "error": "io",
                "path": path,
                "message": source.to_string(),
            }),
            CliError::Numerical(message) => json!({
                "error": "numerical",
                "message": message,
            }),
        };
        value.to_string()
    }
}

impl From<voidcrack::Error> for CliError {
    fn from(err: voidcrack::Error) -> Self {
        use voidcrack::Error as E;
        let message = err.to_string();
        match err {
            _ if err.is_numerical() => CliError::Numerical(message),
            E::Coupling { .. } => CliError::validation("N", message),
            E::Parameter { name, .. } => CliError::validation(name, message),
            _ => CliError::Validation {
                parameter: None,
                message,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
