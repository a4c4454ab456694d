//! Words in canonical form: symbols first appear in alphabet order, so each
//! class of words equal up to renaming symbols has exactly one member.

use alloc::vec::Vec;

use crate::word::MAX_ALPHABET;
use crate::{Error, Result};

/// Which words an enumeration yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbols {
    /// At most `d` distinct symbols.
    AtMost(usize),
    /// Exactly `d` distinct symbols.
    Exactly(usize),
}

impl Symbols {
    pub fn d(&self) -> usize {
        match *self {
            Symbols::AtMost(d) | Symbols::Exactly(d) => d,
        }
    }

    pub fn check(&self) -> Result<()> {
        let d = self.d();
        if d == 0 || d > MAX_ALPHABET {
            return Err(Error::AlphabetSize { d, max: MAX_ALPHABET });
        }
        Ok(())
    }
}

/// Whether `w` is in canonical form over at most `d` symbols.
pub fn is_canonical(w: &[u8], d: usize) -> bool {
    let mut next = b'a';
    for &c in w {
        if c == next {
            if (next - b'a') as usize >= d {
                return false;
            }
            next += 1;
        } else if c > next || c < b'a' {
            return false;
        }
    }
    true
}

/// Number of distinct symbols in a canonical word.
pub fn symbols_used(w: &[u8]) -> usize {
    w.iter().max().map_or(0, |&m| (m - b'a') as usize + 1)
}

/// Calls `visit` on every canonical word of length `len` that extends `prefix`
/// (itself canonical), in lexicographic order.
pub fn for_each_extension(prefix: &[u8], len: usize, symbols: Symbols, mut visit: impl FnMut(&[u8])) {
    if prefix.len() > len || !is_canonical(prefix, symbols.d()) {
        return;
    }
    let mut buf = Vec::with_capacity(len);
    buf.extend_from_slice(prefix);
    let used = symbols_used(prefix);
    extend(&mut buf, used, len, symbols, &mut visit);
}

fn extend(buf: &mut Vec<u8>, used: usize, len: usize, symbols: Symbols, visit: &mut impl FnMut(&[u8])) {
    let d = symbols.d();
    if let Symbols::Exactly(_) = symbols {
        if d - used.min(d) > len - buf.len() {
            return;
        }
    }
    if buf.len() == len {
        if !matches!(symbols, Symbols::Exactly(_)) || used == d {
            visit(buf);
        }
        return;
    }
    let top = (used + 1).min(d);
    for s in 0..top {
        buf.push(b'a' + s as u8);
        extend(buf, used.max(s + 1), len, symbols, visit);
        buf.pop();
    }
}

/// Every canonical word of length `len`, in lexicographic order.
pub fn words(len: usize, symbols: Symbols) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for_each_extension(&[], len, symbols, |w| out.push(w.to_vec()));
    out
}

/// Every canonical word of length exactly `prefix_len` with at most `d`
/// symbols; these partition the canonical words of any length `≥ prefix_len`.
pub fn shard_prefixes(prefix_len: usize, d: usize) -> Vec<Vec<u8>> {
    words(prefix_len, Symbols::AtMost(d))
}
