//! Square occurrences, rightmost occurrences and distinct-square counts.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::word::is_primitive;

/// One occurrence of a square `u u` in a host word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareOcc {
    /// 1-based start.
    pub start: usize,
    /// `|u|`.
    pub gen_len: usize,
}

impl SquareOcc {
    pub fn new(start: usize, gen_len: usize) -> Self {
        SquareOcc { start, gen_len }
    }

    /// 1-based inclusive end of the whole square.
    pub fn end(&self) -> usize {
        self.start + 2 * self.gen_len - 1
    }

    /// End of the first copy of the generator.
    pub fn end_of_first(&self) -> usize {
        self.start + self.gen_len - 1
    }

    pub fn generator<'a>(&self, host: &'a [u8]) -> &'a [u8] {
        &host[self.start - 1..self.start - 1 + self.gen_len]
    }

    pub fn square<'a>(&self, host: &'a [u8]) -> &'a [u8] {
        &host[self.start - 1..self.end()]
    }

    /// Whether the occurrence is really a square in `host`.
    pub fn holds_in(&self, host: &[u8]) -> bool {
        self.start >= 1 && self.gen_len >= 1 && is_square_at(host, self.start - 1, self.gen_len)
    }
}

/// `host[i..i+2l]` is a square (0-based `i`).
#[inline]
pub(crate) fn is_square_at(host: &[u8], i: usize, l: usize) -> bool {
    i + 2 * l <= host.len() && host[i..i + l] == host[i + l..i + 2 * l]
}

/// Every square occurrence, sorted by `(start, gen_len)`.
///
/// Direct three-loop scan; this is the reference every other counting path is
/// compared against.
pub fn enumerate_squares(w: &[u8]) -> Vec<SquareOcc> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for l in 1..=(n - i) / 2 {
            if is_square_at(w, i, l) {
                out.push(SquareOcc::new(i + 1, l));
            }
        }
    }
    out
}

/// Same result as [`enumerate_squares`] in `O(n²)`: for each period `l` keep the
/// length of the current run of positions with `w[i] == w[i+l]`; a run of
/// length at least `l` ending at `i` means a square of generator `l` there.
pub fn enumerate_squares_fast(w: &[u8]) -> Vec<SquareOcc> {
    let n = w.len();
    let mut out = Vec::new();
    for l in 1..=n / 2 {
        let mut run = 0;
        for i in 0..n - l {
            if w[i] == w[i + l] {
                run += 1;
                if run >= l {
                    out.push(SquareOcc::new(i + 2 - l, l));
                }
            } else {
                run = 0;
            }
        }
    }
    out.sort_unstable();
    out
}

/// Rightmost occurrence of every distinct square of a host.
#[derive(Clone, Debug)]
pub struct RightmostTable<'a> {
    host: &'a [u8],
    by_content: BTreeMap<&'a [u8], SquareOcc>,
    // sorted by (start, gen_len)
    ordered: Vec<SquareOcc>,
}

impl<'a> RightmostTable<'a> {
    /// Builds the table from an occurrence list sorted by `(start, gen_len)`.
    pub fn from_occurrences(host: &'a [u8], occs: &[SquareOcc]) -> Self {
        let mut by_content = BTreeMap::new();
        for occ in occs.iter().rev() {
            by_content.entry(occ.generator(host)).or_insert(*occ);
        }
        let mut ordered: Vec<SquareOcc> = by_content.values().copied().collect();
        ordered.sort_unstable();
        RightmostTable {
            host,
            by_content,
            ordered,
        }
    }

    pub fn host(&self) -> &'a [u8] {
        self.host
    }

    /// Number of distinct squares.
    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    /// Rightmost occurrence of the square with this generator.
    pub fn get(&self, generator: &[u8]) -> Option<SquareOcc> {
        self.by_content.get(generator).copied()
    }

    /// All rightmost occurrences sorted by `(start, gen_len)`.
    pub fn occurrences(&self) -> &[SquareOcc] {
        &self.ordered
    }

    /// Rightmost squares starting at `start`, shortest first.
    pub fn at(&self, start: usize) -> &[SquareOcc] {
        let lo = self.ordered.partition_point(|o| o.start < start);
        let hi = self.ordered.partition_point(|o| o.start <= start);
        &self.ordered[lo..hi]
    }

    /// Groups of rightmost squares sharing a start, in start order.
    pub fn groups(&self) -> impl Iterator<Item = &[SquareOcc]> + '_ {
        self.ordered.chunk_by(|a, b| a.start == b.start)
    }

    /// Starts holding more than two rightmost squares. Always empty unless the
    /// two-per-position theorem is false.
    pub fn overfull_positions(&self) -> Vec<usize> {
        self.groups()
            .filter(|g| g.len() > 2)
            .map(|g| g[0].start)
            .collect()
    }

    /// Distinct squares whose generator is not primitive.
    pub fn nonprimitive_count(&self) -> usize {
        self.ordered
            .iter()
            .filter(|o| !is_primitive(o.generator(self.host)).unwrap_or(true))
            .count()
    }
}

pub fn rightmost_table(w: &[u8]) -> RightmostTable<'_> {
    RightmostTable::from_occurrences(w, &enumerate_squares_fast(w))
}

pub fn distinct_square_count(w: &[u8]) -> usize {
    rightmost_table(w).len()
}

pub fn nonprimitive_rooted_count(w: &[u8]) -> usize {
    rightmost_table(w).nonprimitive_count()
}

/// Distinct squares with a primitive generator.
pub fn primitively_rooted_count(w: &[u8]) -> usize {
    let t = rightmost_table(w);
    t.len() - t.nonprimitive_count()
}
