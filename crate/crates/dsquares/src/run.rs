//! Sharded, resumable drivers for exhaustive verification and the σ search.
//!
//! Shards are fixed by the run parameters alone, so the job count changes
//! only the schedule. Workers are pure; the calling thread merges results
//! and owns the cursor file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::mpsc;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use dsquares_core::bounds::{sigma_search_by, sigma_shard, SearchResult, ShardOutcome};
use dsquares_core::canonical::shard_prefixes;
use dsquares_core::properties::{check_word, shards, verify_shard, Certificate, Property, Shard};
use dsquares_core::Word;

use crate::cursor::{Cursor, CursorError, Entry};

/// Shard prefixes are lengthened until there are at least this many.
pub const TARGET_SHARDS: usize = 64;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Core(#[from] dsquares_core::Error),
    #[error(transparent)]
    Cursor(#[from] CursorError),
    #[error("{path}: resume file belongs to a different run")]
    ForeignCursor { path: PathBuf },
    #[error("{path}: bad value for {key} in shard {prefix:?}")]
    BadEntry {
        path: PathBuf,
        prefix: String,
        key: &'static str,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Shortest prefix length giving at least [`TARGET_SHARDS`] shards, capped at `max_len`.
pub fn prefix_len_for(max_len: usize, d: usize) -> usize {
    let mut k = 1;
    while k < max_len && shard_prefixes(k, d).len() < TARGET_SHARDS {
        k += 1;
    }
    k.min(max_len.max(1))
}

fn fingerprint(desc: &str) -> String {
    hex::encode(&Sha256::digest(desc.as_bytes())[..8])
}

/// Runs `work` on every index of `pending`, handing results to `done` on the
/// calling thread as they finish. `jobs ≤ 1` runs serially in order.
fn run_pending<T, W, D>(pending: &[usize], jobs: usize, work: W, mut done: D) -> Result<(), RunError>
where
    T: Send,
    W: Fn(usize) -> T + Sync,
    D: FnMut(usize, T) -> Result<(), RunError>,
{
    if jobs <= 1 {
        for &i in pending {
            done(i, work(i))?;
        }
        return Ok(());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let (tx, rx) = mpsc::channel();
    let (pool, work) = (&pool, &work);
    std::thread::scope(|s| {
        s.spawn(move || {
            pool.install(|| {
                pending.par_iter().for_each_with(tx, |tx, &i| {
                    let _ = tx.send((i, work(i)));
                })
            })
        });
        for (i, t) in rx {
            done(i, t)?;
        }
        Ok(())
    })
}

struct Resume {
    path: PathBuf,
    cursor: Cursor,
    seen: BTreeMap<String, Entry>,
    run: String,
}

impl Resume {
    fn open(path: Option<&Path>, run: String) -> Result<Option<Resume>, RunError> {
        let Some(path) = path else { return Ok(None) };
        let (cursor, seen) = Cursor::open(path)?;
        if seen.values().any(|e| e.get("run") != Some(run.as_str())) {
            return Err(RunError::ForeignCursor {
                path: path.to_path_buf(),
            });
        }
        Ok(Some(Resume {
            path: path.to_path_buf(),
            cursor,
            seen,
            run,
        }))
    }

    fn completed(&self, prefix: &[u8]) -> Option<&Entry> {
        self.seen
            .get(std::str::from_utf8(prefix).ok()?)
            .filter(|e| e.completed)
    }

    fn bad(&self, e: &Entry, key: &'static str) -> RunError {
        RunError::BadEntry {
            path: self.path.clone(),
            prefix: e.prefix.clone(),
            key,
        }
    }

    fn record(&mut self, e: Entry) -> Result<(), RunError> {
        let e = e.with("run", &self.run);
        self.cursor.append(&e)?;
        self.seen.insert(e.prefix.clone(), e);
        Ok(())
    }
}

fn join_words<'a>(ws: impl IntoIterator<Item = &'a [u8]>) -> String {
    ws.into_iter()
        .map(|w| String::from_utf8_lossy(w).into_owned())
        .collect::<Vec<_>>()
        .join(",")
}

fn split_words(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').filter(|w| !w.is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_len: usize,
    pub d: usize,
    pub suite: Vec<Property>,
    pub jobs: usize,
    pub resume: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub words: u64,
    pub shards: usize,
    /// Shards taken from the resume file instead of being run.
    pub resumed: usize,
    /// Counterexample count for every property of the suite, in suite order.
    pub failures: Vec<(Property, u64)>,
    /// In enumeration order, independent of the job count.
    pub certificates: Vec<Certificate>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.certificates.is_empty()
    }
}

pub fn verify(opts: &VerifyOptions) -> Result<VerifyOutcome, RunError> {
    dsquares_core::canonical::Symbols::AtMost(opts.d).check()?;
    if opts.suite.is_empty() {
        return Err(dsquares_core::Error::EmptySuite.into());
    }
    let k = prefix_len_for(opts.max_len, opts.d);
    let all: Vec<Shard> = if opts.max_len == 0 { Vec::new() } else { shards(opts.max_len, opts.d, k) };
    let names: Vec<&str> = opts.suite.iter().map(Property::name).collect();
    let run = fingerprint(&format!(
        "verify max_len={} alphabet={} suite={} prefix_len={k}",
        opts.max_len,
        opts.d,
        names.join(",")
    ));
    let mut resume = Resume::open(opts.resume.as_deref(), run)?;

    let mut results: Vec<Option<(u64, Vec<Certificate>)>> = vec![None; all.len()];
    let mut resumed = 0;
    if let Some(r) = &resume {
        for (i, shard) in all.iter().enumerate() {
            let Some(e) = r.completed(&shard.prefix) else { continue };
            let words = e
                .get("words")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| r.bad(e, "words"))?;
            let mut certs = Vec::new();
            for w in split_words(e.get("counterexamples").unwrap_or("")) {
                certs.extend(check_word(w.as_bytes(), &opts.suite));
            }
            results[i] = Some((words, certs));
            resumed += 1;
        }
    }

    let pending: Vec<usize> = (0..all.len()).filter(|&i| results[i].is_none()).collect();
    run_pending(
        &pending,
        opts.jobs,
        |i| verify_shard(&all[i], opts.d, &opts.suite),
        |i, rep| {
            if let Some(r) = resume.as_mut() {
                let mut bad: Vec<&[u8]> = rep.certificates.iter().map(|c| c.word.as_bytes()).collect();
                bad.dedup();
                r.record(
                    Entry::completed(&all[i].prefix)
                        .with("words", rep.words)
                        .with("counterexamples", join_words(bad)),
                )?;
            }
            results[i] = Some((rep.words, rep.certificates));
            Ok(())
        },
    )?;

    let mut words = 0;
    let mut certificates = Vec::new();
    for (w, c) in results.into_iter().flatten() {
        words += w;
        certificates.extend(c);
    }
    let failures = opts
        .suite
        .iter()
        .map(|&p| (p, certificates.iter().filter(|c| c.property == p).count() as u64))
        .collect();
    Ok(VerifyOutcome {
        words,
        shards: all.len(),
        resumed,
        failures,
        certificates,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub d: usize,
    pub n: usize,
    pub jobs: usize,
    pub resume: Option<PathBuf>,
    /// Overrides the default shard prefix length.
    pub prefix_len: Option<usize>,
}

pub fn search(opts: &SearchOptions) -> Result<SearchResult, RunError> {
    let (d, n) = (opts.d, opts.n);
    let k = opts.prefix_len.unwrap_or_else(|| prefix_len_for(n, d));
    if d == 0 || d > n || d > dsquares_core::word::MAX_ALPHABET {
        // let the core report the argument error before touching the cursor
        return Ok(dsquares_core::bounds::sigma_search(d, n)?);
    }
    let run = fingerprint(&format!("search d={d} n={n} prefix_len={k}"));
    let mut resume = Resume::open(opts.resume.as_deref(), run)?;

    sigma_search_by(d, n, k, |prefixes, floor| {
        let mut results: Vec<Option<ShardOutcome>> = vec![None; prefixes.len()];
        if let Some(r) = &resume {
            for (i, p) in prefixes.iter().enumerate() {
                let Some(e) = r.completed(p) else { continue };
                if e.get("floor") != Some(floor.to_string().as_str()) {
                    continue;
                }
                let best = match e.get("best") {
                    Some("none") => None,
                    Some(v) => Some(v.parse().map_err(|_| r.bad(e, "best"))?),
                    None => return Err(r.bad(e, "best")),
                };
                let mut witnesses = Vec::new();
                for w in split_words(e.get("witnesses").unwrap_or("")) {
                    Word::new(w).map_err(|_| r.bad(e, "witnesses"))?;
                    witnesses.push(w.as_bytes().to_vec());
                }
                results[i] = Some(ShardOutcome { best, witnesses });
            }
        }
        let pending: Vec<usize> = (0..prefixes.len()).filter(|&i| results[i].is_none()).collect();
        run_pending(
            &pending,
            opts.jobs,
            |i| sigma_shard(&prefixes[i], d, n, floor),
            |i, out| {
                if let Some(r) = resume.as_mut() {
                    let best = out.best.map_or("none".to_string(), |b| b.to_string());
                    r.record(
                        Entry::completed(&prefixes[i])
                            .with("floor", floor)
                            .with("best", best)
                            .with("witnesses", join_words(out.witnesses.iter().map(Vec::as_slice))),
                    )?;
                }
                results[i] = Some(out);
                Ok(())
            },
        )?;
        Ok(results.into_iter().map(|o| o.expect("every shard ran")).collect())
    })
}
