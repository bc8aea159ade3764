//! Shared error type and line helpers for the plain-text formats.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the error is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Non-blank lines that are not `#` comments, with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, format!("expected a nonnegative integer, found `{tok}`")))
}
