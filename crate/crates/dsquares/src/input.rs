//! Reading words, one per line.

use std::io::BufRead;

use dsquares_core::{Error as CoreError, Word};

/// Default cap on the length of an analyzed word.
pub const DEFAULT_MAX_LEN: usize = 100_000;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: invalid character {symbol:?} at column {column}")]
    InvalidSymbol {
        line: usize,
        column: usize,
        symbol: char,
    },
    #[error("line {line}: word of length {len} exceeds the limit of {max}")]
    TooLong { line: usize, len: usize, max: usize },
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
}

/// A word and the 1-based line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputWord {
    pub line: usize,
    pub word: Word,
}

fn parse_line(line: usize, text: &str, max_len: usize) -> Result<Option<InputWord>, InputError> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(None);
    }
    let word = Word::new(t).map_err(|e| match e {
        CoreError::InvalidSymbol { position, symbol } => InputError::InvalidSymbol {
            line,
            column: position,
            symbol,
        },
        other => unreachable!("Word::new only rejects symbols, got {other}"),
    })?;
    if word.len() > max_len {
        return Err(InputError::TooLong {
            line,
            len: word.len(),
            max: max_len,
        });
    }
    Ok(Some(InputWord { line, word }))
}

/// Reads every non-blank line; stops at the first invalid one.
pub fn read_words(reader: impl BufRead, max_len: usize) -> Result<Vec<InputWord>, InputError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        if let Some(w) = parse_line(i + 1, &line?, max_len)? {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn parse_words(text: &str, max_len: usize) -> Result<Vec<InputWord>, InputError> {
    read_words(text.as_bytes(), max_len)
}
