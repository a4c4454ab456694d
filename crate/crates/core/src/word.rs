//! Words over the letters `a`..=`z` and the primitive operations on them.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::{Error, Result};

/// Largest alphabet a [`Word`] can use.
pub const MAX_ALPHABET: usize = 26;

/// An immutable word over `a`..=`z`.
///
/// Derefs to its symbols, so every operation in this crate that takes
/// `&[u8]` accepts `&Word` as well as borrowed factors of a host.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Box<[u8]>);

impl Word {
    /// Validates `symbols` and takes ownership of them.
    pub fn from_bytes(symbols: impl Into<Box<[u8]>>) -> Result<Self> {
        let symbols = symbols.into();
        if let Some(i) = symbols.iter().position(|b| !b.is_ascii_lowercase()) {
            return Err(Error::InvalidSymbol {
                position: i + 1,
                symbol: char::from(symbols[i]),
            });
        }
        Ok(Word(symbols))
    }

    pub fn new(s: &str) -> Result<Self> {
        if let Some((i, c)) = s.chars().enumerate().find(|(_, c)| !c.is_ascii_lowercase()) {
            return Err(Error::InvalidSymbol {
                position: i + 1,
                symbol: c,
            });
        }
        Ok(Word(s.as_bytes().into()))
    }

    /// Maps symbol indices `0..26` to letters. Used by the enumerators.
    pub fn from_indices(indices: &[u8]) -> Self {
        debug_assert!(indices.iter().all(|&s| (s as usize) < MAX_ALPHABET));
        Word(indices.iter().map(|&s| b'a' + s).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // only ASCII lowercase letters are ever stored
        core::str::from_utf8(&self.0).expect("word symbols are ASCII")
    }

    /// The factor `self[start..=end]` in 1-based inclusive coordinates.
    pub fn factor(&self, start: usize, end: usize) -> Result<Factor<'_>> {
        Factor::new(self, start, end)
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = 0u32;
        for &b in self.0.iter() {
            seen |= 1 << (b - b'a');
        }
        seen.count_ones() as usize
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.as_str())
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        String::from(w.as_str())
    }
}

/// `host[start..=end]`, 1-based and inclusive, borrowing the host.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Factor<'a> {
    host: &'a [u8],
    start: usize,
    end: usize,
}

impl<'a> Factor<'a> {
    pub fn new(host: &'a [u8], start: usize, end: usize) -> Result<Self> {
        if start == 0 || start > end || end > host.len() {
            return Err(Error::FactorRange {
                start,
                end,
                len: host.len(),
            });
        }
        Ok(Factor { host, start, end })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn host(&self) -> &'a [u8] {
        self.host
    }

    pub fn as_slice(&self) -> &'a [u8] {
        &self.host[self.start - 1..self.end]
    }
}

/// Smallest period of `w` that divides `|w|`, i.e. the length of its primitive root.
fn root_len(w: &[u8]) -> usize {
    let n = w.len();
    (1..=n)
        .filter(|&p| n.is_multiple_of(p))
        .find(|&p| w[..n - p] == w[p..])
        .unwrap_or(n)
}

/// The primitive root `y` and exponent `m` with `w == y^m`.
pub fn primitive_root(w: &[u8]) -> Result<(&[u8], usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = root_len(w);
    Ok((&w[..p], w.len() / p))
}

pub fn is_primitive(w: &[u8]) -> Result<bool> {
    primitive_root(w).map(|(_, e)| e == 1)
}

/// True iff `x = uv` and `y = vu` for some `u`, `v`.
pub fn are_conjugates(x: &[u8], y: &[u8]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    if x.is_empty() {
        return true;
    }
    let n = x.len();
    (0..n).any(|r| x[r..] == y[..n - r] && x[..r] == y[n - r..])
}

/// Length of the longest common prefix.
pub fn lcp(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

/// Length of the longest common suffix.
pub fn lcs(x: &[u8], y: &[u8]) -> usize {
    x.iter()
        .rev()
        .zip(y.iter().rev())
        .take_while(|(a, b)| a == b)
        .count()
}

/// Sorted 1-based starts of every (possibly overlapping) occurrence.
pub fn occurrences(pattern: &[u8], text: &[u8]) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if pattern.len() > text.len() {
        return Ok(Vec::new());
    }
    Ok(text
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i + 1)
        .collect())
}

/// `w` rotated left by `r`: `w[r..] w[..r]`.
pub fn rotate_left(w: &[u8], r: usize) -> Vec<u8> {
    if w.is_empty() {
        return Vec::new();
    }
    let r = r % w.len();
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[r..]);
    out.extend_from_slice(&w[..r]);
    out
}

/// `base^times`.
pub fn power(base: &[u8], times: usize) -> Vec<u8> {
    base.repeat(times)
}

/// True iff `w` is a factor of `period^∞` starting at phase 0, i.e. `w` has
/// period `|period|` and begins with `period`'s prefix.
pub(crate) fn is_prefix_of_power(w: &[u8], period: &[u8]) -> bool {
    !period.is_empty() && w.iter().enumerate().all(|(i, &c)| c == period[i % period.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> Word {
        Word::new(s).unwrap()
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(&w("abab")).unwrap(), (&b"ab"[..], 2));
        assert_eq!(primitive_root(&w("aab")).unwrap(), (&b"aab"[..], 1));
        assert_eq!(primitive_root(&w("aaa")).unwrap(), (&b"a"[..], 3));
        assert_eq!(primitive_root(b""), Err(Error::EmptyWord));
        assert_eq!(
            Error::EmptyWord.to_string(),
            "empty word has no primitive root"
        );
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(b"ab").unwrap());
        assert!(!is_primitive(b"abab").unwrap());
        assert!(is_primitive(b"aabaa").unwrap());
        assert!(is_primitive(b"a").unwrap());
        assert!(is_primitive(b"").is_err());
    }

    #[test]
    fn conjugates() {
        assert!(are_conjugates(b"ab", b"ba"));
        assert!(are_conjugates(b"aab", b"aba"));
        assert!(!are_conjugates(b"aab", b"abb"));
        assert!(!are_conjugates(b"ab", b"abc"));
        assert!(are_conjugates(b"", b""));
    }

    #[test]
    fn common_prefix_suffix() {
        assert_eq!(lcp(b"aaabaa", b"aaaaab"), 3);
        assert_eq!(lcp(b"x", b"x"), 1);
        assert_eq!(lcp(b"ab", b"ba"), 0);
        assert_eq!(lcs(b"aaabaa", b"aaaaab"), 0);
        assert_eq!(lcs(b"baa", b"aa"), 2);
        assert_eq!(lcs(b"", b"abc"), 0);
        assert_eq!(lcp(b"", b"abc"), 0);
    }

    #[test]
    fn occurrence_scan() {
        assert_eq!(occurrences(b"ab", b"ababab").unwrap(), vec![1, 3, 5]);
        assert_eq!(occurrences(b"aa", b"aaaa").unwrap(), vec![1, 2, 3]);
        assert_eq!(occurrences(b"abaaba", b"abaababaab").unwrap(), vec![1]);
        assert_eq!(occurrences(b"abc", b"ab").unwrap(), vec![]);
        assert_eq!(occurrences(b"", b"ab"), Err(Error::EmptyPattern));
    }

    #[test]
    fn word_validation() {
        assert!(Word::new("abc").is_ok());
        assert_eq!(
            Word::new("abç"),
            Err(Error::InvalidSymbol {
                position: 3,
                symbol: 'ç'
            })
        );
        assert!(Word::new("aB").is_err());
        assert!(Word::new("").unwrap().is_empty());
        assert_eq!(w("abca").alphabet_size(), 3);
    }

    #[test]
    fn factors_are_one_based() {
        let x = w("abaab");
        let f = x.factor(2, 4).unwrap();
        assert_eq!(f.as_slice(), b"baa");
        assert_eq!(f.len(), 3);
        assert!(x.factor(0, 1).is_err());
        assert!(x.factor(3, 2).is_err());
        assert!(x.factor(5, 6).is_err());
    }

    #[test]
    fn rotations() {
        assert_eq!(rotate_left(b"aaabaa", 4), b"aaaaab".to_vec());
        assert_eq!(rotate_left(b"ab", 0), b"ab".to_vec());
        assert!(is_prefix_of_power(b"abaab", b"aba"));
        assert!(!is_prefix_of_power(b"abab", b"aba"));
    }
}
