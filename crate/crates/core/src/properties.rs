//! Named properties checked word by word over exhaustive corpora.
//!
//! Properties about "a word starting with an FS-double square `U`" are applied
//! with `U` the first FS-double square of the host: squares starting at or
//! after `s(U)` are rightmost in the host exactly when they are rightmost in
//! the suffix starting at `s(U)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::bounds::{bound_report, BoundReport, DELTA_BOUND, DISTINCT_2N, DISTINCT_BOUND, NONPRIMITIVE_BOUND, STRENGTHENED_BOUND};
use crate::canonical::{for_each_extension, shard_prefixes, Symbols};
use crate::doublesq::{
    factorization_candidates, fs_double_squares_in, periodic_decompositions, verify_nonprimitive_case,
    Candidate, FsDoubleSquare,
};
use crate::families::{family_at, family_size_bound, Family, FamilyKind, SegmentKind};
use crate::inversion::{find_inversion_factors, intervals, last_position};
use crate::mates::{
    classify_mate, classify_mate_detailed, gamma_type, gap_tail, r1_host, v_case, MateKind, VCase,
};
use crate::squares::{enumerate_squares_fast, RightmostTable, SquareOcc};
use crate::word::{is_prefix_of_power, is_primitive, lcp, Word};
use crate::{Error, Result};

macro_rules! properties {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Property {
            $($variant,)*
        }

        impl Property {
            pub const ALL: &'static [Property] = &[$(Property::$variant,)*];

            pub fn name(&self) -> &'static str {
                match self {
                    $(Property::$variant => $name,)*
                }
            }
        }

        impl FromStr for Property {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Property::$variant),)*
                    _ => Err(Error::UnknownProperty(String::from(s))),
                }
            }
        }
    };
}

properties! {
    TwoRightmostMax => "two_rightmost_max",
    CrFs => "cr_fs",
    Balanced => "balanced",
    MinFsLength => "min_fs_length",
    Factorization => "factorization",
    Canon1 => "canon1",
    NonprimitiveCase => "nonprimitive_case",
    ShiftBudget => "shift_budget",
    InversionFactorLemma => "inversion_factor_lemma",
    VCases => "v_cases",
    MateTotality => "mate_totality",
    GammaExponents => "gamma_exponents",
    EpsilonAfterGamma => "epsilon_after_gamma",
    SuperEpsilon => "super_epsilon",
    Rot1 => "rot1",
    FamilySize => "family_size",
    SegmentMonotonicity => "segment_monotonicity",
    GammaSegmentAlpha => "gamma_segment_alpha",
    BottomlessAlpha => "bottomless_alpha",
    DeltaBound => "delta_bound",
    DistinctBound => "distinct_bound",
    NonprimitiveBound => "nonprimitive_bound",
    StrengthenedBound => "strengthened_bound",
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated suite; `all` expands to every property.
pub fn parse_suite(spec: &str) -> Result<Vec<Property>> {
    let mut out = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend_from_slice(Property::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::EmptySuite);
    }
    Ok(out)
}

/// A word on which a property failed, with what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub word: Word,
    pub property: Property,
    pub witness: String,
}

type Check = core::result::Result<(), String>;
type GammaMate = (usize, (usize, usize));

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Ctx<'a> {
    w: &'a [u8],
    table: RightmostTable<'a>,
    occs: Vec<SquareOcc>,
    fs: core::result::Result<Vec<FsDoubleSquare<'a>>, Error>,
    family: Option<core::result::Result<Family<'a>, Error>>,
    report: Option<BoundReport>,
}

impl<'a> Ctx<'a> {
    fn new(w: &'a [u8]) -> Self {
        let occs = enumerate_squares_fast(w);
        let table = RightmostTable::from_occurrences(w, &occs);
        let fs = fs_double_squares_in(&table);
        Ctx {
            w,
            table,
            occs,
            fs,
            family: None,
            report: None,
        }
    }

    fn fs(&self) -> core::result::Result<&[FsDoubleSquare<'a>], String> {
        self.fs.as_deref().map_err(|e| format!("{e}"))
    }

    fn head(&self) -> core::result::Result<Option<&FsDoubleSquare<'a>>, String> {
        Ok(self.fs()?.first())
    }

    fn family(&mut self) -> core::result::Result<Option<&Family<'a>>, String> {
        if self.fs()?.is_empty() {
            return Ok(None);
        }
        if self.family.is_none() {
            let fs = self.fs.as_ref().expect("checked above");
            self.family = Some(family_at(fs, 0));
        }
        match self.family.as_ref().expect("just set") {
            Ok(f) => Ok(Some(f)),
            Err(e) => Err(format!("{e}")),
        }
    }

    fn report(&mut self) -> &BoundReport {
        self.report.get_or_insert_with(|| bound_report(&self.table))
    }

    fn bound(&mut self, name: &str) -> Check {
        match self.report().check(name) {
            Some(c) if !c.pass => Err(format!("{name}: observed {} > bound {}", c.observed, c.bound)),
            _ => Ok(()),
        }
    }

    fn check(&mut self, p: Property) -> Check {
        match p {
            Property::TwoRightmostMax => {
                let over = self.table.overfull_positions();
                ensure(over.is_empty(), || format!("three rightmost squares at {over:?}"))
            }
            Property::CrFs => self.cr_fs(),
            Property::Balanced => {
                for g in self.table.groups() {
                    if let [s, l] = g {
                        ensure(s.gen_len < l.gen_len && l.gen_len < 2 * s.gen_len, || {
                            format!("unbalanced pair at {}: {} {}", s.start, s.gen_len, l.gen_len)
                        })?;
                    }
                }
                Ok(())
            }
            Property::MinFsLength => {
                let fs = self.fs()?;
                ensure(fs.is_empty() || self.w.len() >= 10, || {
                    format!("FS-double square at {} in a word of length {}", fs[0].start(), self.w.len())
                })
            }
            Property::Factorization => self.factorization(),
            Property::Canon1 => self.canon1(),
            Property::NonprimitiveCase => {
                for d in self.fs()? {
                    let u = d.square.short();
                    if is_primitive(u).unwrap_or(true) {
                        continue;
                    }
                    let ok = verify_nonprimitive_case(u, d.square.long());
                    ensure(ok == Ok(true), || format!("start {}: {ok:?}", d.start()))?;
                }
                Ok(())
            }
            Property::ShiftBudget => {
                for d in self.fs()? {
                    let f = &d.factorization;
                    ensure(f.lcp() + f.lcs() + 2 <= f.u1_len(), || {
                        format!("start {}: lcp {} + lcs {} > |u1| - 2", d.start(), f.lcp(), f.lcs())
                    })?;
                }
                Ok(())
            }
            Property::InversionFactorLemma => self.inversion(),
            Property::VCases => self.v_cases(),
            Property::MateTotality => self.mate_totality(),
            Property::GammaExponents => self.gamma_exponents(),
            Property::EpsilonAfterGamma => self.epsilon_after_gamma(),
            Property::SuperEpsilon => self.super_epsilon(),
            Property::Rot1 => {
                let Some(u) = self.head()? else { return Ok(()) };
                let f = &u.factorization;
                if f.e1 != f.e2 {
                    return Ok(());
                }
                let y = &self.w[u.square.end()..];
                let l = lcp(u.square.short(), y);
                ensure(l < f.u2_len(), || format!("lcp(u, y) = {l} with |u2| = {}", f.u2_len()))
            }
            Property::FamilySize => self.family_size(),
            Property::SegmentMonotonicity => self.segment_monotonicity(),
            Property::GammaSegmentAlpha => self.gamma_segment_alpha(),
            Property::BottomlessAlpha => {
                let n = self.w.len();
                let total = self.fs()?.len();
                let Some(fam) = self.family()? else { return Ok(()) };
                if fam.kind != FamilyKind::Alpha || fam.len() != total {
                    return Ok(());
                }
                let u = fam.head();
                let len = n - u.start() + 1;
                let (lhs, rhs) = (6 * total, 5 * len - 2 * u.square.short_len());
                ensure(lhs <= rhs, || format!("6δ = {lhs} > 5|x| - 2|u| = {rhs}"))
            }
            Property::DeltaBound => self.bound(DELTA_BOUND),
            Property::DistinctBound => {
                self.bound(DISTINCT_BOUND)?;
                self.bound(DISTINCT_2N)
            }
            Property::NonprimitiveBound => self.bound(NONPRIMITIVE_BOUND),
            Property::StrengthenedBound => self.bound(STRENGTHENED_BOUND),
        }
    }

    fn cr_fs(&self) -> Check {
        for group in self.occs.chunk_by(|a, b| a.start == b.start) {
            for (i, u) in group.iter().enumerate() {
                if !is_primitive(u.generator(self.w)).unwrap_or(false) {
                    continue;
                }
                for (j, v) in group.iter().enumerate().skip(i + 1) {
                    if let Some(w) = group[j + 1..].iter().find(|w| w.gen_len < u.gen_len + v.gen_len) {
                        return Err(format!(
                            "start {}: lengths {} {} {}",
                            u.start, u.gen_len, v.gen_len, w.gen_len
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn factorization(&self) -> Check {
        for d in self.fs()? {
            let f = &d.factorization;
            let (u, big) = (d.square.short(), d.square.long());
            ensure(f.short() == u && f.long() == big, || format!("start {}: reassembly", d.start()))?;
            ensure(is_primitive(&f.u1) == Ok(true), || format!("start {}: u1 not primitive", d.start()))?;
            ensure(f.e1 >= f.e2 && f.e2 >= 1, || format!("start {}: exponents {:?}", d.start(), f.exponents()))?;
            ensure(2 * big.len() >= 10, || format!("start {}: |U²| < 10", d.start()))?;
            ensure(is_primitive(big) == Ok(true), || format!("start {}: U not primitive", d.start()))?;
            let canonical = Candidate {
                w1_len: f.u1_len(),
                f1: f.e1,
                w2_len: f.u2_len(),
                f2: f.e2,
            };
            let cands = factorization_candidates(u, big);
            ensure(cands == [canonical], || format!("start {}: candidates {cands:?}", d.start()))?;
        }
        Ok(())
    }

    fn canon1(&self) -> Check {
        for d in self.fs()? {
            let (u, big) = (d.square.short(), d.square.long());
            for (m, _) in periodic_decompositions(u, 1) {
                let v2_len = u.len() % m;
                let hit = big.len() % m == v2_len && is_prefix_of_power(big, &u[..m]);
                ensure(!hit, || format!("start {}: U = v1^j v2 with |v1| = {m}", d.start()))?;
            }
        }
        Ok(())
    }

    fn inversion(&self) -> Check {
        for d in self.fs()? {
            let f = &d.factorization;
            let iv = intervals(f);
            let scan = find_inversion_factors(f);
            ensure(scan == iv.positions(), || format!("start {}: scan {scan:?} vs {iv:?}", d.start()))?;
            let sq = f.long_square();
            let (b, c) = (f.u2_len(), f.u2_bar.len());
            for &i in &scan {
                let x = &sq[i - 1..i - 1 + 2 * f.u1_len()];
                let form = x[..c] == x[c + 2 * b..] && x[c..c + b] == x[c + b..c + 2 * b];
                ensure(form, || format!("start {}: inversion factor at {i} lacks the form", d.start()))?;
            }
            let lu = f.short_len();
            let ordered = iv.l1 <= iv.r1
                && iv.r1 < lu
                && lu + 1 < iv.l2
                && iv.l2 <= iv.r2
                && iv.r2 <= last_position(f)
                && iv.r1 - iv.l1 + 2 <= f.u1_len();
            ensure(ordered, || format!("start {}: interval order {iv:?}", d.start()))?;
            // the two intervals are |U| apart unless a clamp cut one of them
            let clamped_l = iv.l1 == 1 && iv.n1 <= f.lcs();
            let clamped_r = iv.r2 < iv.n2 + f.lcp();
            let ordered = (clamped_l || iv.l2 - iv.l1 == f.long_len())
                && (clamped_r || iv.r2 - iv.r1 == f.long_len());
            ensure(ordered, || format!("start {}: interval order {iv:?}", d.start()))?;
        }
        Ok(())
    }

    fn v_cases(&self) -> Check {
        let Some(u) = self.head()? else { return Ok(()) };
        let r1 = r1_host(u);
        let e_u = u.square.end_of_short_first();
        for &v in self.table.occurrences() {
            if v.start < u.start() {
                continue;
            }
            let case = v_case(u, v);
            if v.start < r1 {
                ensure(case.is_some(), || format!("square {v:?} before R1 = {r1} fits no case"))?;
            }
            if v.end_of_first() <= e_u {
                ensure(v.start < r1 && matches!(case, Some(VCase::A1 | VCase::A2)), || {
                    format!("square {v:?} ends its first half by {e_u} but has case {case:?}")
                })?;
            }
        }
        Ok(())
    }

    fn mate_totality(&self) -> Check {
        let fs = self.fs()?;
        let Some(u) = fs.first() else { return Ok(()) };
        let r1 = r1_host(u);
        let f = &u.factorization;
        for v in &fs[1..] {
            let kind = classify_mate(u, v).map_err(|e| format!("{e}"))?;
            let sv = v.start();
            ensure(kind != MateKind::Unclassified, || format!("start {sv} unclassified"))?;
            if sv < r1 {
                ensure(!kind.is_epsilon(), || format!("start {sv} before R1 = {r1} is {kind}"))?;
            } else {
                ensure(
                    kind.is_epsilon() && v.square.end_of_short_first() > u.square.end_of_short_first(),
                    || format!("start {sv} from R1 = {r1} is {kind}"),
                )?;
            }
            if kind == MateKind::Beta {
                ensure(f.e1 >= f.e2 + 2, || format!("beta mate at {sv} with exponents {:?}", f.exponents()))?;
            }
        }
        Ok(())
    }

    /// `(index, type)` of every γ-mate of the head.
    fn gamma_mates(&self) -> core::result::Result<Vec<GammaMate>, String> {
        let fs = self.fs()?;
        let mut out = Vec::new();
        if let Some(u) = fs.first() {
            for (i, v) in fs.iter().enumerate().skip(1) {
                if classify_mate(u, v).map_err(|e| format!("{e}"))? == MateKind::Gamma {
                    out.push((i, gamma_type(u, v).map_err(|e| format!("{e}"))?));
                }
            }
        }
        Ok(out)
    }

    fn gamma_exponents(&self) -> Check {
        let fs = self.fs()?;
        for (i, (p, q)) in self.gamma_mates()? {
            if p < 2 || q < 2 {
                continue;
            }
            let a = fs[0].factorization.u1_len();
            let fv = &fs[i].factorization;
            ensure(fv.e1 == fv.e2 && fv.u2_len() <= p.min(q) * a, || {
                format!("gamma mate at {} of type ({p},{q}) has {:?}, |v2| = {}", fs[i].start(), fv.exponents(), fv.u2_len())
            })?;
        }
        Ok(())
    }

    fn epsilon_after_gamma(&self) -> Check {
        let fs = self.fs()?;
        let u = match fs.first() {
            Some(u) => u,
            None => return Ok(()),
        };
        let f = &u.factorization;
        for (i, (p, q)) in self.gamma_mates()? {
            if p < 2 || q < 2 {
                continue;
            }
            let t = f.e1 - p;
            let v = &fs[i];
            for w in &fs[i + 1..] {
                if classify_mate(v, w).map_err(|e| format!("{e}"))? != MateKind::Epsilon {
                    continue;
                }
                let gt = gap_tail(u, w).map_err(|e| format!("{e}"))?;
                let a = f.u1_len();
                ensure(
                    gt.gap >= t * a && gt.tail >= ((f.e1 + f.e2) * a) as isize,
                    || format!("gamma at {}, epsilon at {}: {gt:?} with t = {t}", v.start(), w.start()),
                )?;
            }
        }
        Ok(())
    }

    fn super_epsilon(&self) -> Check {
        let fs = self.fs()?;
        let Some(u) = fs.first() else { return Ok(()) };
        let f = &u.factorization;
        let (a, b, p, q) = (f.u1_len(), f.u2_len(), f.e1, f.e2);
        for v in &fs[1..] {
            if classify_mate(u, v).map_err(|e| format!("{e}"))? != MateKind::SuperEpsilon {
                continue;
            }
            let gt = gap_tail(u, v).map_err(|e| format!("{e}"))?;
            let (g, t) = (gt.gap, gt.tail);
            let case_a = g + 3 * a >= (2 * p + q) * a + 2 * b && t + 2 * a as isize >= ((p + q) * a + b) as isize;
            let case_b = g >= p * a + b && t + a as isize >= ((p + q) * a + b) as isize;
            ensure(case_a || case_b, || format!("super-epsilon at {}: {gt:?}", v.start()))?;
        }
        Ok(())
    }

    fn family_size(&mut self) -> Check {
        let Some(fam) = self.family()? else { return Ok(()) };
        let bound = family_size_bound(fam);
        ensure(fam.len() <= bound, || format!("{} family of size {} > {bound}", fam.kind, fam.len()))?;
        let f = &fam.head().factorization;
        for s in &fam.segments {
            let cap = match s.kind {
                SegmentKind::Alpha => f.lcp() + 1,
                SegmentKind::Beta => f.u1_len() - 1,
                SegmentKind::Gamma => continue,
            };
            ensure(s.len() <= cap, || format!("{} of size {} > {cap}", s.kind.name(), s.len()))?;
        }
        Ok(())
    }

    fn segment_monotonicity(&mut self) -> Check {
        let Some(fam) = self.family()? else { return Ok(()) };
        let types: Vec<(usize, usize)> = fam
            .segments
            .iter()
            .filter(|s| s.kind != SegmentKind::Gamma)
            .map(|s| s.type_pair)
            .collect();
        for w in types.windows(2) {
            let ((p0, q0), (p1, q1)) = (w[0], w[1]);
            ensure(p1 < p0 && p0 + q0 == p1 + q1, || format!("segment types {:?} then {:?}", w[0], w[1]))?;
        }
        Ok(())
    }

    fn gamma_segment_alpha(&mut self) -> Check {
        let Some(fam) = self.family()? else { return Ok(()) };
        for s in fam.segments.iter().filter(|s| s.kind == SegmentKind::Gamma) {
            let g = &fam.members[s.members[0]].square;
            for &i in &s.members[1..] {
                let m = &fam.members[i].square;
                let k = classify_mate_detailed(g, m).map_err(|e| format!("{e}"))?;
                ensure(k.flags.alpha, || format!("gamma segment member {} is {} of {}", m.start(), k.kind, g.start()))?;
            }
        }
        Ok(())
    }
}

/// Checks every property of `suite` on `w`.
pub fn check_word(w: &[u8], suite: &[Property]) -> Vec<Certificate> {
    let mut ctx = Ctx::new(w);
    let mut out = Vec::new();
    for &p in suite {
        if let Err(witness) = ctx.check(p) {
            out.push(Certificate {
                word: Word::from_bytes(w).unwrap_or_default(),
                property: p,
                witness,
            });
        }
    }
    out
}

/// One independent unit of an exhaustive run: every canonical word extending
/// `prefix` whose length lies in `lengths`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub prefix: Vec<u8>,
    pub lengths: RangeInclusive<usize>,
}

/// Shards covering all canonical words of length `1..=max_len` over at most
/// `d` symbols: one empty-prefix shard for lengths below `prefix_len`, then one
/// shard per canonical prefix of length `prefix_len`.
pub fn shards(max_len: usize, d: usize, prefix_len: usize) -> Vec<Shard> {
    let k = prefix_len.clamp(1, max_len.max(1));
    let mut out = Vec::new();
    if k > 1 {
        out.push(Shard {
            prefix: Vec::new(),
            lengths: 1..=k - 1,
        });
    }
    if k <= max_len {
        for p in shard_prefixes(k, d) {
            out.push(Shard {
                prefix: p,
                lengths: k..=max_len,
            });
        }
    }
    out
}

/// Result of one shard: words checked and certificates in enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShardReport {
    pub words: u64,
    pub certificates: Vec<Certificate>,
}

pub fn verify_shard(shard: &Shard, d: usize, suite: &[Property]) -> ShardReport {
    let mut report = ShardReport::default();
    for len in shard.lengths.clone() {
        for_each_extension(&shard.prefix, len, Symbols::AtMost(d), |w| {
            report.words += 1;
            report.certificates.extend(check_word(w, suite));
        });
    }
    report
}

fn check_verify_args(max_len: usize, d: usize, suite: &[Property]) -> Result<()> {
    Symbols::AtMost(d).check()?;
    if suite.is_empty() {
        return Err(Error::EmptySuite);
    }
    let _ = max_len;
    Ok(())
}

/// Serial exhaustive run over all canonical words of length `1..=max_len`.
pub fn exhaustive_verify(max_len: usize, d: usize, suite: &[Property]) -> Result<Vec<Certificate>> {
    check_verify_args(max_len, d, suite)?;
    let mut out = Vec::new();
    for shard in shards(max_len, d, 0) {
        out.extend(verify_shard(&shard, d, suite).certificates);
    }
    Ok(out)
}
