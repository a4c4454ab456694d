//! The four worked figure words, rendered as text and checked against the
//! published counts.

use std::fmt::Write as _;

use dsquares_core::construct::{FigureSpec, FIGURES};
use dsquares_core::doublesq::find_fs_double_squares;
use dsquares_core::families::{family_at, SegmentKind};
use dsquares_core::inversion::{find_inversion_factors, intervals, natural_inversion_factor};
use dsquares_core::squares::SquareOcc;
use dsquares_core::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureCheck {
    pub label: &'static str,
    pub expected: String,
    pub observed: String,
}

impl FigureCheck {
    fn new(label: &'static str, expected: impl ToString, observed: impl ToString) -> Self {
        FigureCheck {
            label,
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }

    pub fn pass(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureReport {
    pub number: u8,
    pub word: String,
    pub rendering: String,
    pub checks: Vec<FigureCheck>,
}

impl FigureReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(FigureCheck::pass)
    }
}

const LABEL: usize = 10;

fn row(out: &mut String, label: &str, cells: &[u8]) {
    let _ = writeln!(out, "{label:<LABEL$}{}", String::from_utf8_lossy(cells).trim_end());
}

fn mark_square(cells: &mut [u8], sq: SquareOcc) {
    for half in 0..2 {
        let s = sq.start - 1 + half * sq.gen_len;
        let e = s + sq.gen_len - 1;
        for c in &mut cells[s..=e] {
            *c = b'-';
        }
        cells[s] = b'[';
        cells[e] = b']';
    }
}

fn render(spec: &FigureSpec, x: &[u8]) -> Result<(String, Vec<FigureCheck>)> {
    let n = x.len();
    let f = spec.factorization();
    let fs = find_fs_double_squares(x)?;
    let head = fs.first().ok_or(dsquares_core::Error::NoDoubleSquare)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Figure {}: u1 = {}, u2 = {}, e1 = {}, e2 = {}, |u| = {}, |U| = {}, n = {}",
        spec.number,
        String::from_utf8_lossy(&f.u1),
        String::from_utf8_lossy(&f.u2),
        f.e1,
        f.e2,
        f.short_len(),
        f.long_len(),
        n
    );

    let ruler: Vec<u8> = (1..=n)
        .map(|p| match p % 10 {
            0 => b'0' + (p / 10 % 10) as u8,
            5 => b'+',
            _ => b' ',
        })
        .collect();
    row(&mut out, "", &ruler);
    row(&mut out, "x", x);

    let mut cells = vec![b' '; n];
    mark_square(&mut cells, head.square.long_square());
    row(&mut out, "U^2", &cells);
    let mut cells = vec![b' '; n];
    mark_square(&mut cells, head.square.short_square());
    row(&mut out, "u^2", &cells);

    // '=' under u2, '~' under its complement in u1
    let (b, c) = (f.u2_len(), f.u2_bar.len());
    let mut runs = Vec::with_capacity(2 * f.long_len());
    let block = |reps: usize, runs: &mut Vec<u8>| {
        for _ in 0..reps {
            runs.extend(std::iter::repeat_n(b'=', b));
            runs.extend(std::iter::repeat_n(b'~', c));
        }
    };
    for _ in 0..2 {
        block(f.e1, &mut runs);
        runs.extend(std::iter::repeat_n(b'=', b));
        block(f.e2, &mut runs);
    }
    let mut cells = vec![b' '; n];
    cells[head.start() - 1..head.start() - 1 + runs.len()].copy_from_slice(&runs);
    row(&mut out, "u2/u2bar", &cells);

    let hf = &head.factorization;
    let iv = intervals(hf);
    let scan = find_inversion_factors(hf);
    let mut cells = vec![b' '; n];
    for &p in &scan {
        cells[head.start() + p - 2] = b'^';
    }
    for p in [iv.n1, iv.n2] {
        cells[head.start() + p - 2] = b'N';
    }
    row(&mut out, "inversion", &cells);

    let fam = family_at(&fs, 0)?;
    let mut cells = vec![b' '; n];
    for m in &fam.members {
        cells[m.start() - 1] = match m.mate {
            None => b'H',
            Some(k) => k.name().as_bytes()[0],
        };
    }
    row(&mut out, "family", &cells);
    let _ = writeln!(out, "{:<LABEL$}{} family, {} members", "", fam.kind, fam.len());
    for seg in &fam.segments {
        let starts: Vec<usize> = seg.members.iter().map(|&i| fam.members[i].start()).collect();
        let _ = writeln!(
            out,
            "{:<LABEL$}{} ({}, {}) at {:?}",
            "",
            seg.kind.name(),
            seg.type_pair.0,
            seg.type_pair.1,
            starts
        );
    }

    let mut checks = Vec::new();
    match spec.number {
        1 => {
            let positions: Vec<usize> = (23..=26).chain(63..=66).collect();
            checks.push(FigureCheck::new("lcp(u1, u1_hat)", 3, hf.lcp()));
            checks.push(FigureCheck::new("lcs(u1, u1_hat)", 0, hf.lcs()));
            checks.push(FigureCheck::new(
                "natural inversion factor",
                "aaaaabaaabaa",
                String::from_utf8_lossy(&natural_inversion_factor(hf)),
            ));
            checks.push(FigureCheck::new("inversion factor count", 8, scan.len()));
            checks.push(FigureCheck::new(
                "inversion factor positions",
                format!("{positions:?}"),
                format!("{scan:?}"),
            ));
            checks.push(FigureCheck::new(
                "scan equals intervals",
                format!("{:?}", iv.positions()),
                format!("{scan:?}"),
            ));
        }
        2 => {
            checks.push(FigureCheck::new("family size", 4, fam.len()));
            checks.push(FigureCheck::new("family size equals |u2|", hf.u2_len(), fam.len()));
            checks.push(FigureCheck::new("delta", 4, fs.len()));
        }
        3 => {
            checks.push(FigureCheck::new("family size", 4, fam.len()));
            checks.push(FigureCheck::new("family size equals |u1| - 2", hf.u1_len() - 2, fam.len()));
        }
        _ => {
            checks.push(FigureCheck::new(
                "alpha segments",
                1,
                fam.segment_count(SegmentKind::Alpha),
            ));
            checks.push(FigureCheck::new("beta segments", 2, fam.segment_count(SegmentKind::Beta)));
            checks.push(FigureCheck::new("segments", 3, fam.segments.len()));
        }
    }
    Ok((out, checks))
}

pub fn figure(spec: &FigureSpec) -> Result<FigureReport> {
    let x = spec.word();
    let (rendering, checks) = render(spec, &x)?;
    Ok(FigureReport {
        number: spec.number,
        word: String::from_utf8_lossy(&x).into_owned(),
        rendering,
        checks,
    })
}

pub fn all_figures() -> Result<Vec<FigureReport>> {
    FIGURES.iter().map(figure).collect()
}
