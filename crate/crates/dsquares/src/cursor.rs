//! Append-only progress file for resumable runs.
//!
//! Each line reads `shard_prefix=<word> completed=<bool>` followed by any
//! number of `key=value` pairs. Values never contain whitespace. A later line
//! for the same prefix supersedes an earlier one.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug, thiserror::Error)]
pub enum CursorError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Entry {
    pub prefix: String,
    pub completed: bool,
    pub extra: BTreeMap<String, String>,
}

impl Entry {
    pub fn completed(prefix: &[u8]) -> Self {
        Entry {
            prefix: String::from_utf8_lossy(prefix).into_owned(),
            completed: true,
            extra: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.extra.get(key).map(String::as_str)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shard_prefix={} completed={}", self.prefix, self.completed)?;
        for (k, v) in &self.extra {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Entry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut fields = s.split_whitespace();
        let mut next = |want: &str| -> Result<String, String> {
            let field = fields.next().ok_or_else(|| format!("missing {want}"))?;
            match field.split_once('=') {
                Some((k, v)) if k == want => Ok(v.to_string()),
                _ => Err(format!("expected {want}=..., found {field:?}")),
            }
        };
        let prefix = next("shard_prefix")?;
        if !prefix.bytes().all(|b| b.is_ascii_lowercase()) {
            return Err(format!("bad shard prefix {prefix:?}"));
        }
        let completed = match next("completed")?.as_str() {
            "true" => true,
            "false" => false,
            other => return Err(format!("bad completed flag {other:?}")),
        };
        let mut extra = BTreeMap::new();
        for field in fields {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, found {field:?}"))?;
            extra.insert(k.to_string(), v.to_string());
        }
        Ok(Entry {
            prefix,
            completed,
            extra,
        })
    }
}

pub struct Cursor {
    path: PathBuf,
    file: File,
}

impl Cursor {
    /// Opens (creating if needed) the file at `path` and returns the latest
    /// entry for every prefix seen so far.
    pub fn open(path: &Path) -> Result<(Cursor, BTreeMap<String, Entry>), CursorError> {
        let io = |source| CursorError::Io {
            path: path.to_path_buf(),
            source,
        };
        let mut latest = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(io)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line.map_err(io)?;
                if line.trim().is_empty() {
                    continue;
                }
                let e: Entry = line.parse().map_err(|msg| CursorError::Parse {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg,
                })?;
                latest.insert(e.prefix.clone(), e);
            }
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(io)?;
        Ok((
            Cursor {
                path: path.to_path_buf(),
                file,
            },
            latest,
        ))
    }

    pub fn append(&mut self, e: &Entry) -> Result<(), CursorError> {
        writeln!(self.file, "{e}")
            .and_then(|_| self.file.flush())
            .map_err(|source| CursorError::Io {
                path: self.path.clone(),
                source,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let e = Entry::completed(b"aab").with("run", "x1").with("words", 12);
        let line = e.to_string();
        assert_eq!(line, "shard_prefix=aab completed=true run=x1 words=12");
        assert_eq!(line.parse::<Entry>().unwrap(), e);
        let empty = Entry::completed(b"");
        assert_eq!(empty.to_string().parse::<Entry>().unwrap(), empty);
    }

    #[test]
    fn rejects_garbage() {
        assert!("completed=true".parse::<Entry>().is_err());
        assert!("shard_prefix=ab completed=maybe".parse::<Entry>().is_err());
        assert!("shard_prefix=AB completed=true".parse::<Entry>().is_err());
        assert!("shard_prefix=ab completed=true junk".parse::<Entry>().is_err());
    }

    #[test]
    fn append_and_reopen() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cursor.txt");
        {
            let (mut c, seen) = Cursor::open(&path).unwrap();
            assert!(seen.is_empty());
            c.append(&Entry::completed(b"ab").with("words", 1)).unwrap();
            c.append(&Entry::completed(b"aa")).unwrap();
            c.append(&Entry::completed(b"ab").with("words", 2)).unwrap();
        }
        let (_, seen) = Cursor::open(&path).unwrap();
        assert_eq!(seen.len(), 2);
        assert_eq!(seen["ab"].get("words"), Some("2"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 3);
    }
}
