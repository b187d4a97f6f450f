//! Error types shared across the registry.

use std::path::PathBuf;

/// One per-line diagnostic produced while parsing triple text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based line number in the parsed input.
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A token does not conform to the identifier, literal, or timestamp grammar.
    #[error("syntax error: {0}")]
    Syntax(String),

    /// Triple text failed to parse; carries every per-line diagnostic.
    #[error("parse failed: {}", format_diagnostics(.0))]
    Parse(Vec<Diagnostic>),

    /// A vocabulary identifier named no known vocabulary.
    #[error("vocabulary not found: {0}")]
    VocabularyNotFound(String),

    /// A resource required by the operation is absent from the graph.
    #[error("not found: {0}")]
    NotFound(String),

    /// The resource handed to a catalog-only operation is not typed as a catalog.
    #[error("not a catalog: {0}")]
    NotACatalog(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(Diagnostic::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
