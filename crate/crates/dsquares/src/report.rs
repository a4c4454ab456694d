//! Per-word analysis reports and their JSON and text forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use dsquares_core::bounds::{bound_report, BoundReport, SearchResult};
use dsquares_core::doublesq::{fs_double_squares_in, FsDoubleSquare};
use dsquares_core::families::{family_at, family_size_bound, Family};
use dsquares_core::inversion::intervals;
use dsquares_core::mates::classify_mate;
use dsquares_core::squares::rightmost_table;
use dsquares_core::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Words longer than this are echoed as a digest.
pub const ECHO_LIMIT: usize = 4096;

/// `sha256:<hex>` for long words, the word itself otherwise.
pub fn echo_word(w: &[u8]) -> String {
    if w.len() > ECHO_LIMIT {
        format!("sha256:{}", hex::encode(Sha256::digest(w)))
    } else {
        String::from_utf8_lossy(w).into_owned()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsEntry {
    pub start: usize,
    pub u_len: usize,
    pub big_u_len: usize,
    pub u1: String,
    pub u2: String,
    pub e1: usize,
    pub e2: usize,
    pub n1: usize,
    pub n2: usize,
    pub l1: usize,
    pub r1: usize,
    pub l2: usize,
    pub r2: usize,
}

impl FsEntry {
    fn new(d: &FsDoubleSquare<'_>) -> Self {
        let f = &d.factorization;
        let iv = intervals(f).shifted(d.start());
        FsEntry {
            start: d.start(),
            u_len: f.short_len(),
            big_u_len: f.long_len(),
            u1: String::from_utf8_lossy(&f.u1).into_owned(),
            u2: String::from_utf8_lossy(&f.u2).into_owned(),
            e1: f.e1,
            e2: f.e2,
            n1: iv.n1,
            n2: iv.n2,
            l1: iv.l1,
            r1: iv.r1,
            l2: iv.l2,
            r2: iv.r2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateEntry {
    pub from_start: usize,
    pub to_start: usize,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentEntry {
    pub kind: String,
    pub type_pair: (usize, usize),
    pub starts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub kind: String,
    pub size: usize,
    pub size_bound: usize,
    pub segments: Vec<SegmentEntry>,
}

impl FamilyEntry {
    fn new(fam: &Family<'_>) -> Self {
        FamilyEntry {
            kind: fam.kind.name().to_string(),
            size: fam.len(),
            size_bound: family_size_bound(fam),
            segments: fam
                .segments
                .iter()
                .map(|s| SegmentEntry {
                    kind: s.kind.name().to_string(),
                    type_pair: s.type_pair,
                    starts: s.members.iter().map(|&i| fam.members[i].start()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub bound: u64,
    pub observed: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsEntry {
    pub n: usize,
    pub delta: usize,
    pub distinct: usize,
    pub checks: Vec<CheckEntry>,
}

impl From<&BoundReport> for BoundsEntry {
    fn from(r: &BoundReport) -> Self {
        BoundsEntry {
            n: r.n,
            delta: r.delta,
            distinct: r.distinct,
            checks: r
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name.to_string(),
                    bound: c.bound,
                    observed: c.observed,
                    pass: c.pass,
                })
                .collect(),
        }
    }
}

impl BoundsEntry {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub word: String,
    pub length: usize,
    pub delta: usize,
    pub distinct_squares: usize,
    pub fs_double_squares: Vec<FsEntry>,
    pub mates: Vec<MateEntry>,
    pub family: Option<FamilyEntry>,
    pub bounds: BoundsEntry,
}

/// Full analysis of one word. Fails only on a falsification (three rightmost
/// squares at one start, or an unfactorizable rightmost pair).
pub fn analyze(w: &[u8]) -> Result<AnalysisReport> {
    let table = rightmost_table(w);
    let fs = fs_double_squares_in(&table)?;
    let bounds = bound_report(&table);
    let mut mates = Vec::new();
    let mut family = None;
    if let Some(head) = fs.first() {
        for v in &fs[1..] {
            mates.push(MateEntry {
                from_start: head.start(),
                to_start: v.start(),
                kind: classify_mate(head, v)?.name().to_string(),
            });
        }
        family = Some(FamilyEntry::new(&family_at(&fs, 0)?));
    }
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        word: echo_word(w),
        length: w.len(),
        delta: bounds.delta,
        distinct_squares: bounds.distinct,
        fs_double_squares: fs.iter().map(FsEntry::new).collect(),
        mates,
        family,
        bounds: BoundsEntry::from(&bounds),
    })
}

pub fn to_json(r: &AnalysisReport) -> String {
    serde_json::to_string(r).expect("report serializes")
}

/// σ search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub d: usize,
    pub n: usize,
    pub sigma: usize,
    pub conjectured_bound: usize,
    pub conjecture_holds: bool,
    pub witnesses: Vec<String>,
}

impl From<&SearchResult> for SearchReport {
    fn from(r: &SearchResult) -> Self {
        SearchReport {
            schema_version: SCHEMA_VERSION,
            d: r.d,
            n: r.n,
            sigma: r.sigma,
            conjectured_bound: r.n - r.d,
            conjecture_holds: r.conjecture_holds(),
            witnesses: r.witnesses.iter().map(|w| w.as_str().to_string()).collect(),
        }
    }
}

/// ANSI styling, disabled by `NO_COLOR` or a non-terminal stdout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn bold(&self, s: &str) -> String {
        self.paint("1", s)
    }

    pub fn verdict(&self, pass: bool) -> String {
        if pass {
            self.paint("32", "ok")
        } else {
            self.paint("31", "FAIL")
        }
    }
}

pub fn render_text(r: &AnalysisReport, style: Style) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", style.bold("word"), r.word);
    let _ = writeln!(
        s,
        "  length {}  distinct squares {}  delta {}",
        r.length, r.distinct_squares, r.delta
    );
    for e in &r.fs_double_squares {
        let _ = writeln!(
            s,
            "  fs-double square at {}: |u| = {}, |U| = {}, u1 = {}, u2 = {}, e1 = {}, e2 = {}",
            e.start, e.u_len, e.big_u_len, e.u1, e.u2, e.e1, e.e2
        );
        let _ = writeln!(
            s,
            "    inversion factors: N1 = {}, N2 = {}, [{}..{}] and [{}..{}]",
            e.n1, e.n2, e.l1, e.r1, e.l2, e.r2
        );
    }
    for m in &r.mates {
        let _ = writeln!(s, "  mate {} -> {}: {}", m.from_start, m.to_start, m.kind);
    }
    if let Some(f) = &r.family {
        let _ = writeln!(s, "  family {}: size {} (bound {})", f.kind, f.size, f.size_bound);
        for seg in &f.segments {
            let _ = writeln!(
                s,
                "    {} type ({}, {}) starts {:?}",
                seg.kind, seg.type_pair.0, seg.type_pair.1, seg.starts
            );
        }
    }
    for c in &r.bounds.checks {
        let _ = writeln!(
            s,
            "  {:<22} {:>8} <= {:<8} {}",
            c.name,
            c.observed,
            c.bound,
            style.verdict(c.pass)
        );
    }
    s
}
