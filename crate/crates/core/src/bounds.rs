//! δ(x), the counting bounds, and the exhaustive search for σ_d(n).

use alloc::vec::Vec;

use crate::canonical::shard_prefixes;
use crate::squares::{rightmost_table, RightmostTable};
use crate::word::{is_primitive, Word, MAX_ALPHABET};
use crate::{Error, Result};

/// Number of FS-double squares: starts holding at least two rightmost squares.
pub fn delta(w: &[u8]) -> usize {
    delta_of(&rightmost_table(w))
}

pub fn delta_of(table: &RightmostTable<'_>) -> usize {
    table.groups().filter(|g| g.len() >= 2).count()
}

/// One bound `observed ≤ bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundCheck {
    pub name: &'static str,
    pub bound: u64,
    pub observed: u64,
    pub pass: bool,
}

impl BoundCheck {
    fn new(name: &'static str, bound: u64, observed: u64) -> Self {
        BoundCheck {
            name,
            bound,
            observed,
            pass: observed <= bound,
        }
    }
}

pub const DELTA_BOUND: &str = "delta_5n_6";
pub const DISTINCT_BOUND: &str = "distinct_11n_6";
pub const DISTINCT_2N: &str = "distinct_2n";
pub const NONPRIMITIVE_BOUND: &str = "nonprimitive_half_n";
/// `6δ ≤ 5n − 2|u|`, present only when the word starts with an FS-double square.
pub const STRENGTHENED_BOUND: &str = "strengthened_delta_x6";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundReport {
    pub n: usize,
    pub delta: usize,
    pub distinct: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn check_bounds(w: &[u8]) -> BoundReport {
    bound_report(&rightmost_table(w))
}

pub fn bound_report(table: &RightmostTable<'_>) -> BoundReport {
    let n = table.host().len() as u64;
    let delta = delta_of(table);
    let distinct = table.len();
    let nonprimitive = table.nonprimitive_count() as u64;
    let mut checks = alloc::vec![
        BoundCheck::new(DELTA_BOUND, 5 * n / 6, delta as u64),
        BoundCheck::new(DISTINCT_BOUND, 11 * n / 6, distinct as u64),
        BoundCheck::new(DISTINCT_2N, 2 * n, distinct as u64),
        BoundCheck::new(NONPRIMITIVE_BOUND, (n / 2).saturating_sub(1), nonprimitive),
    ];
    if let [short, _] = table.at(1) {
        let rhs = (5 * n).saturating_sub(2 * short.gen_len as u64);
        checks.push(BoundCheck::new(STRENGTHENED_BOUND, rhs, 6 * delta as u64));
    }
    BoundReport {
        n: n as usize,
        delta,
        distinct,
        checks,
    }
}

/// Most witnesses kept by a σ search.
pub const MAX_WITNESSES: usize = 10;

/// Best value found in one shard at or above a floor, with the first
/// witnesses in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShardOutcome {
    pub best: Option<usize>,
    pub witnesses: Vec<Vec<u8>>,
}

impl ShardOutcome {
    fn record(&mut self, value: usize, word: &[u8]) {
        match self.best {
            Some(b) if value < b => {}
            Some(b) if value == b => {
                if self.witnesses.len() < MAX_WITNESSES {
                    self.witnesses.push(word.to_vec());
                }
            }
            _ => {
                self.best = Some(value);
                self.witnesses.clear();
                self.witnesses.push(word.to_vec());
            }
        }
    }

    /// Associative merge; `other` comes after `self` in shard order.
    pub fn merge(mut self, other: ShardOutcome) -> ShardOutcome {
        match (self.best, other.best) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if b > a => other,
            (Some(a), Some(b)) if b < a => self,
            _ => {
                let room = MAX_WITNESSES - self.witnesses.len();
                self.witnesses.extend(other.witnesses.into_iter().take(room));
                self
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchResult {
    pub d: usize,
    pub n: usize,
    pub sigma: usize,
    pub witnesses: Vec<Word>,
}

impl SearchResult {
    /// `σ_d(n) ≤ n − d`.
    pub fn conjecture_holds(&self) -> bool {
        self.sigma + self.d <= self.n
    }
}

/// Distinct squares with a primitive generator; the quantity maximized by σ.
pub fn sigma_count(w: &[u8]) -> usize {
    crate::squares::primitively_rooted_count(w)
}

struct SigmaDfs {
    n: usize,
    d: u8,
    floor: usize,
    buf: Vec<u8>,
    // runs[i * (n + 1) + l]: length of the streak of w[j] == w[j - l] ending at i
    runs: Vec<u8>,
    out: ShardOutcome,
}

impl SigmaDfs {
    fn new(n: usize, d: usize, floor: usize) -> Self {
        SigmaDfs {
            n,
            d: d as u8,
            floor,
            buf: Vec::with_capacity(n),
            runs: alloc::vec![0; n * (n + 1)],
            out: ShardOutcome::default(),
        }
    }

    /// Appends `s` and returns how many new primitively rooted squares end at it.
    fn push(&mut self, s: u8) -> usize {
        let i = self.buf.len();
        self.buf.push(s);
        let w = self.n + 1;
        let mut gain = 0;
        for l in 1..=i {
            let r = if self.buf[i] == self.buf[i - l] {
                let prev = if l < i { self.runs[(i - 1) * w + l] } else { 0 };
                prev + 1
            } else {
                0
            };
            self.runs[i * w + l] = r;
            if r as usize >= l && self.is_new_primitive(i, l) {
                gain += 1;
            }
        }
        gain
    }

    fn is_new_primitive(&self, i: usize, l: usize) -> bool {
        let sq = &self.buf[i + 1 - 2 * l..=i];
        if !is_primitive(&sq[..l]).unwrap_or(false) {
            return false;
        }
        !self.buf[..i].windows(2 * l).any(|win| win == sq)
    }

    fn run(&mut self, used: u8, count: usize) {
        let depth = self.buf.len();
        if depth == self.n {
            if used == self.d && count >= self.floor {
                let word: Vec<u8> = self.buf.iter().map(|&s| b'a' + s).collect();
                self.out.record(count, &word);
            }
            return;
        }
        let rem = self.n - depth;
        let missing = (self.d - used) as usize;
        if missing > rem {
            return;
        }
        let target = self.out.best.unwrap_or(self.floor);
        if count + 2 * (rem - missing) < target {
            return;
        }
        let top = (used + 1).min(self.d);
        for s in 0..top {
            let gain = self.push(s);
            self.run(used.max(s + 1), count + gain);
            self.buf.pop();
        }
    }
}

/// Exhaustive search below one canonical prefix, keeping only values `≥ floor`.
pub fn sigma_shard(prefix: &[u8], d: usize, n: usize, floor: usize) -> ShardOutcome {
    let mut dfs = SigmaDfs::new(n, d, floor);
    let mut used = 0u8;
    let mut count = 0;
    for &c in prefix {
        let s = c - b'a';
        count += dfs.push(s);
        used = used.max(s + 1);
    }
    dfs.run(used, count);
    dfs.out
}

fn check_search_args(d: usize, n: usize) -> Result<()> {
    if d == 0 || d > MAX_ALPHABET || d > n {
        return Err(Error::AlphabetSize {
            d,
            max: MAX_ALPHABET.min(n),
        });
    }
    Ok(())
}

/// Shard prefixes used by the σ search for `(d, n)`.
pub fn sigma_prefixes(d: usize, n: usize, prefix_len: usize) -> Vec<Vec<u8>> {
    shard_prefixes(prefix_len.min(n), d)
}

/// σ search driven by a caller-supplied shard runner, which must return one
/// outcome per prefix in prefix order. The floor starts at `n − d` and drops
/// until some word reaches it, so the result does not depend on how shards
/// are scheduled.
pub fn sigma_search_by<E, F>(d: usize, n: usize, prefix_len: usize, mut run: F) -> Result<SearchResult, E>
where
    E: From<Error>,
    F: FnMut(&[Vec<u8>], usize) -> Result<Vec<ShardOutcome>, E>,
{
    check_search_args(d, n)?;
    let prefixes = sigma_prefixes(d, n, prefix_len);
    let mut floor = n - d;
    loop {
        let merged = run(&prefixes, floor)?
            .into_iter()
            .fold(ShardOutcome::default(), ShardOutcome::merge);
        if let Some(sigma) = merged.best {
            return Ok(SearchResult {
                d,
                n,
                sigma,
                witnesses: merged
                    .witnesses
                    .into_iter()
                    .map(|w| Word::from_bytes(w).expect("canonical words are lowercase"))
                    .collect(),
            });
        }
        // floor 0 admits every word, and at least one word exists since d ≤ n
        floor -= 1;
    }
}

/// Serial σ search.
pub fn sigma_search(d: usize, n: usize) -> Result<SearchResult> {
    sigma_search_by(d, n, 0, |prefixes, floor| {
        Ok(prefixes
            .iter()
            .map(|p| sigma_shard(p, d, n, floor))
            .collect())
    })
}
