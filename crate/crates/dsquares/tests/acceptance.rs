//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use dsquares::run::{default_jobs, search, verify, SearchOptions, VerifyOptions, VerifyOutcome};
use dsquares_core::bounds::{delta, sigma_count};
use dsquares_core::canonical::{for_each_extension, symbols_used, words, Symbols};
use dsquares_core::construct::{double_square_word, FIGURE_1, FIGURE_2, FIGURE_3, FIGURE_4};
use dsquares_core::doublesq::find_fs_double_squares;
use dsquares_core::families::{decompose_family, SegmentKind};
use dsquares_core::inversion::{find_inversion_factors, intervals, natural_inversion_factor};
use dsquares_core::mates::classify_mate;
use dsquares_core::properties::{check_word, Property};
use dsquares_core::squares::rightmost_table;
use dsquares_core::word::is_primitive;

const TWO_RIGHTMOST_BUDGET: Duration = Duration::from_secs(600);
const FIGURES_BUDGET: Duration = Duration::from_secs(1);
const SIGMA_BUDGET: Duration = Duration::from_secs(1800);

/// Binary words up to this length are added to the mate criterion.
const MATE_BINARY_LEN: usize = 22;

/// The exhaustive corpus: (alphabet bound, max length).
const CORPUS: [(usize, usize); 2] = [(3, 14), (2, 16)];

/// σ_d(n) and the lexicographically first extremal word, from an independent
/// brute-force count over all canonical words.
const SIGMA_ORACLE: &[(usize, usize, usize, &str)] = &[
    (1, 1, 0, "a"),
    (1, 2, 1, "aa"),
    (1, 12, 1, "aaaaaaaaaaaa"),
    (2, 2, 0, "ab"),
    (2, 3, 1, "aab"),
    (2, 4, 2, "aabb"),
    (2, 5, 2, "aaabb"),
    (2, 6, 3, "aababa"),
    (2, 7, 3, "aaababa"),
    (2, 8, 4, "aabaabaa"),
    (2, 9, 5, "aabaababa"),
    (2, 10, 6, "aababbabba"),
    (2, 11, 7, "aabbabbabab"),
    (2, 12, 7, "aaabbabbabab"),
    (2, 13, 8, "aabaababaabaa"),
    (2, 14, 9, "aabaababaababa"),
    (3, 3, 0, "abc"),
    (3, 4, 1, "aabc"),
    (3, 5, 2, "aabbc"),
    (3, 6, 3, "aabbcc"),
    (3, 7, 3, "aaabbcc"),
    (3, 8, 4, "aababacc"),
    (3, 9, 4, "aaababacc"),
    (3, 10, 5, "aabaabaacc"),
    (4, 4, 0, "abcd"),
    (4, 5, 1, "aabcd"),
    (4, 6, 2, "aabbcd"),
    (4, 7, 3, "aabbccd"),
    (4, 8, 4, "aabbccdd"),
    (4, 9, 4, "aaabbccdd"),
];

type Verdict = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Corpus {
    outcomes: Vec<VerifyOutcome>,
    words: u64,
    fs_squares: u64,
    fs_hosts: u64,
    starts_with_fs: u64,
    mate_pairs: u64,
    elapsed: Duration,
}

impl Corpus {
    fn failures(&self, p: Property) -> u64 {
        self.outcomes
            .iter()
            .flat_map(|o| &o.failures)
            .filter(|(q, _)| *q == p)
            .map(|(_, c)| c)
            .sum()
    }

    fn first_certificate(&self, p: Property) -> String {
        self.outcomes
            .iter()
            .flat_map(|o| &o.certificates)
            .find(|c| c.property == p)
            .map_or(String::new(), |c| format!("; first: {} {}", c.word, c.witness))
    }

    fn property(&self, p: Property) -> Result<(), String> {
        let n = self.failures(p);
        check(n == 0, || format!("{} counterexamples to {}{}", n, p.name(), self.first_certificate(p)))
    }
}

fn corpus() -> &'static Corpus {
    static CORPUS_RUN: OnceLock<Corpus> = OnceLock::new();
    CORPUS_RUN.get_or_init(|| {
        let t = Instant::now();
        let suite = vec![
            Property::TwoRightmostMax,
            Property::Factorization,
            Property::InversionFactorLemma,
            Property::MateTotality,
            Property::DeltaBound,
            Property::DistinctBound,
            Property::NonprimitiveBound,
            Property::StrengthenedBound,
        ];
        let outcomes: Vec<VerifyOutcome> = CORPUS
            .iter()
            .map(|&(d, max_len)| {
                verify(&VerifyOptions {
                    max_len,
                    d,
                    suite: suite.clone(),
                    jobs: default_jobs(),
                    resume: None,
                })
                .expect("valid parameters")
            })
            .collect();
        let elapsed = t.elapsed();

        let mut c = Corpus {
            words: outcomes.iter().map(|o| o.words).sum(),
            outcomes,
            fs_squares: 0,
            fs_hosts: 0,
            starts_with_fs: 0,
            mate_pairs: 0,
            elapsed,
        };
        for &(d, max_len) in &CORPUS {
            for n in 1..=max_len {
                for_each_extension(&[], n, Symbols::AtMost(d), |w| {
                    let Ok(fs) = find_fs_double_squares(w) else { return };
                    if fs.is_empty() {
                        return;
                    }
                    c.fs_hosts += 1;
                    c.fs_squares += fs.len() as u64;
                    c.mate_pairs += fs.len() as u64 - 1;
                    if fs[0].start() == 1 {
                        c.starts_with_fs += 1;
                    }
                });
            }
        }
        c
    })
}

fn corpus_label() -> String {
    let c = corpus();
    format!("{} words (alphabet ≤ 3 up to length 14, binary up to 16)", c.words)
}

fn two_rightmost() -> Verdict {
    let c = corpus();
    c.property(Property::TwoRightmostMax)?;
    check(c.elapsed <= TWO_RIGHTMOST_BUDGET, || {
        format!("corpus took {:.1}s, budget {}s", c.elapsed.as_secs_f64(), TWO_RIGHTMOST_BUDGET.as_secs())
    })?;
    Ok(format!(
        "no position holds three rightmost squares over {}; corpus run {:.1}s",
        corpus_label(),
        c.elapsed.as_secs_f64()
    ))
}

fn inversion_factor_lemma() -> Verdict {
    let c = corpus();
    c.property(Property::InversionFactorLemma)?;
    Ok(format!("scan equals [L1..R1] ∪ [L2..R2] for all {} FS-double squares", c.fs_squares))
}

fn figure_1() -> Verdict {
    let x = FIGURE_1.word();
    let fs = find_fs_double_squares(&x).map_err(|e| e.to_string())?;
    let head = fs.first().ok_or("no FS-double square")?;
    let f = &head.factorization;
    check(
        (f.u1.as_slice(), f.u2.as_slice(), f.e1, f.e2) == (&b"aaabaa"[..], &b"aaab"[..], 4, 2),
        || format!("factorization {f:?}"),
    )?;
    check((f.lcp(), f.lcs()) == (3, 0), || format!("lcp {} lcs {}", f.lcp(), f.lcs()))?;
    let nat = natural_inversion_factor(f);
    check(nat == b"aaaaabaaabaa", || format!("natural factor {}", String::from_utf8_lossy(&nat)))?;
    let scan = find_inversion_factors(f);
    let want: Vec<usize> = (23..=26).chain(63..=66).collect();
    check(scan == want, || format!("positions {scan:?}"))?;
    check(intervals(f).positions() == want, || "intervals differ from the scan".into())?;
    check(f.long_len() == 40 && scan[4] - scan[0] == 40, || "runs not |U| = 40 apart".into())?;
    Ok("lcp 3, lcs 0, natural factor aaaaabaaabaa, positions 23..26 and 63..66".into())
}

fn figures_2_to_4() -> Verdict {
    let t = Instant::now();
    let sizes: Vec<usize> = [FIGURE_2, FIGURE_3]
        .iter()
        .map(|fig| decompose_family(&fig.word()).map(|f| f.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    check(sizes == [4, 4], || format!("family sizes {sizes:?}"))?;
    let x = FIGURE_4.word();
    let fam = decompose_family(&x).map_err(|e| e.to_string())?;
    let (a, b) = (fam.segment_count(SegmentKind::Alpha), fam.segment_count(SegmentKind::Beta));
    check((a, b) == (1, 2), || format!("figure 4 has {a} alpha and {b} beta segments"))?;
    let elapsed = t.elapsed();
    check(elapsed < FIGURES_BUDGET, || format!("took {:.3}s", elapsed.as_secs_f64()))?;
    Ok(format!(
        "family sizes 4 and 4; figure 4: 1 alpha-segment, 2 beta-segments; {:.3}s",
        elapsed.as_secs_f64()
    ))
}

fn bound_suite() -> Verdict {
    let c = corpus();
    for p in [Property::DeltaBound, Property::DistinctBound, Property::NonprimitiveBound] {
        c.property(p)?;
    }
    Ok(format!("δ ≤ ⌊5n/6⌋, distinct ≤ ⌊11n/6⌋ and ≤ 2n, non-primitive ≤ ⌊n/2⌋−1 over {}", corpus_label()))
}

fn strengthened_invariant() -> Verdict {
    let c = corpus();
    c.property(Property::StrengthenedBound)?;
    check(c.starts_with_fs > 0, || "no corpus word starts with an FS-double square".into())?;
    Ok(format!("6δ ≤ 5n − 2|u| on all {} words starting with an FS-double square", c.starts_with_fs))
}

fn factorization_uniqueness() -> Verdict {
    let c = corpus();
    c.property(Property::Factorization)?;
    Ok(format!(
        "{} FS-double squares in {} hosts reassemble, have a single candidate, and U is primitive",
        c.fs_squares, c.fs_hosts
    ))
}

fn minimal_length() -> Verdict {
    let mut checked = 0u64;
    for n in 1..=9 {
        for w in words(n, Symbols::AtMost(n)) {
            checked += 1;
            check(delta(&w) == 0, || format!("{} has an FS-double square", String::from_utf8_lossy(&w)))?;
        }
    }
    let w = b"abaababaab";
    let fs = find_fs_double_squares(w).map_err(|e| e.to_string())?;
    check(fs.len() == 1 && delta(w) == 1, || format!("abaababaab has {} FS-double squares", fs.len()))?;
    check(rightmost_table(w).at(1).len() == 2, || "the pair is not at position 1".into())?;
    Ok(format!("none among {checked} canonical words of length ≤ 9 over any alphabet; abaababaab has δ = 1"))
}

fn sigma_conjecture() -> Verdict {
    let t = Instant::now();
    let opts = |d, n, jobs, prefix_len| SearchOptions {
        d,
        n,
        jobs,
        resume: None,
        prefix_len,
    };
    let mut cases = 0;
    let mut tightest = (usize::MAX, 0, 0);
    for d in 1..=4 {
        for n in d..=18 {
            let r = search(&opts(d, n, default_jobs(), None)).map_err(|e| e.to_string())?;
            cases += 1;
            check(r.conjecture_holds(), || format!("σ_{d}({n}) = {} > {}", r.sigma, n - d))?;
            check(!r.witnesses.is_empty(), || format!("no witness for ({d}, {n})"))?;
            for w in &r.witnesses {
                check(
                    w.len() == n && symbols_used(w) == d && sigma_count(w) == r.sigma,
                    || format!("bad witness {w} for ({d}, {n})"),
                )?;
            }
            if let Some(&(_, _, s, first)) = SIGMA_ORACLE.iter().find(|o| (o.0, o.1) == (d, n)) {
                check(r.sigma == s && r.witnesses[0].as_str() == first, || {
                    format!("({d}, {n}): σ {} first {} vs oracle {s} {first}", r.sigma, r.witnesses[0])
                })?;
            }
            if (d, n) == (2, 5) {
                check(r.sigma == 2 && r.witnesses.iter().any(|w| w.as_str() == "ababa"), || {
                    format!("σ_2(5) = {} with {:?}", r.sigma, r.witnesses)
                })?;
            }
            let slack = n - d - r.sigma;
            if slack < tightest.0 {
                tightest = (slack, d, n);
            }
        }
    }
    for (d, n) in [(2, 18), (3, 15), (4, 13)] {
        let base = search(&opts(d, n, 1, Some(1))).map_err(|e| e.to_string())?;
        for (jobs, k) in [(1, None), (default_jobs().max(2), None), (3, Some(4)), (2, Some(6))] {
            let other = search(&opts(d, n, jobs, k)).map_err(|e| e.to_string())?;
            check(other == base, || format!("({d}, {n}) differs with jobs {jobs} prefix {k:?}"))?;
        }
    }
    let elapsed = t.elapsed();
    check(elapsed <= SIGMA_BUDGET, || format!("took {:.1}s", elapsed.as_secs_f64()))?;
    Ok(format!(
        "σ_d(n) ≤ n − d for {cases} pairs (smallest slack {} at d = {}, n = {}); σ_2(5) = 2 via ababa; \
         identical across shard and job counts; {:.1}s",
        tightest.0,
        tightest.1,
        tightest.2,
        elapsed.as_secs_f64()
    ))
}

/// Hosts `(u1^e1 u2 u1^e2)²` followed by a prefix of `U^ω`, over primitive
/// binary `u1` of length ≤ 6.
fn constructed_hosts() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 2..=6 {
        for u1 in words(len, Symbols::AtMost(2)) {
            if is_primitive(&u1) != Ok(true) {
                continue;
            }
            for b in 1..len {
                for e1 in 1..=4 {
                    for e2 in 1..=e1 {
                        let big = (e1 + e2) * len + b;
                        for ext in 0..big {
                            out.push(double_square_word(&u1, b, e1, e2, ext));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Mate verdicts of every (head, later) pair in `hosts`, by kind name.
fn mate_census<'a>(hosts: impl Iterator<Item = &'a [u8]>) -> Result<BTreeMap<&'static str, u64>, String> {
    let mut kinds = BTreeMap::new();
    for w in hosts {
        let fs = find_fs_double_squares(w).map_err(|e| format!("{}: {e}", String::from_utf8_lossy(w)))?;
        let Some(head) = fs.first() else { continue };
        for v in &fs[1..] {
            let k = classify_mate(head, v).map_err(|e| e.to_string())?;
            *kinds.entry(k.name()).or_insert(0) += 1;
        }
    }
    Ok(kinds)
}

fn census_label(kinds: &BTreeMap<&'static str, u64>) -> String {
    let parts: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} {n}")).collect();
    format!("{} pairs ({})", kinds.values().sum::<u64>(), parts.join(", "))
}

fn mate_totality() -> Verdict {
    let c = corpus();
    c.property(Property::MateTotality)?;

    // the corpus hosts at most one FS-double square per word, so the pairs
    // come from longer binary words and constructed hosts
    let ext = verify(&VerifyOptions {
        max_len: MATE_BINARY_LEN,
        d: 2,
        suite: vec![Property::MateTotality],
        jobs: default_jobs(),
        resume: None,
    })
    .map_err(|e| e.to_string())?;
    check(ext.passed(), || format!("binary words up to {MATE_BINARY_LEN}: {:?}", ext.certificates.first()))?;
    let mut binary = Vec::new();
    for_each_extension(&[], MATE_BINARY_LEN, Symbols::AtMost(2), |w| {
        if delta(w) >= 2 {
            binary.push(w.to_vec());
        }
    });
    for n in 17..MATE_BINARY_LEN {
        for_each_extension(&[], n, Symbols::AtMost(2), |w| {
            if delta(w) >= 2 {
                binary.push(w.to_vec());
            }
        });
    }
    let binary_kinds = mate_census(binary.iter().map(Vec::as_slice))?;

    let hosts = constructed_hosts();
    let mut bad = 0;
    for w in &hosts {
        bad += check_word(w, &[Property::MateTotality]).len();
    }
    check(bad == 0, || format!("{bad} constructed hosts violate mate totality"))?;
    let built_kinds = mate_census(hosts.iter().map(Vec::as_slice))?;
    check(
        binary_kinds.values().sum::<u64>() > 0 && built_kinds.values().sum::<u64>() > 0,
        || "no FS-double-square pairs exercised".into(),
    )?;
    Ok(format!(
        "corpus: {} pairs; binary words up to length {MATE_BINARY_LEN}: {}; {} constructed hosts: {}",
        c.mate_pairs,
        census_label(&binary_kinds),
        hosts.len(),
        census_label(&built_kinds)
    ))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 10] = [
        ("two_rightmost_max", two_rightmost),
        ("inversion_factor_lemma", inversion_factor_lemma),
        ("figure_1", figure_1),
        ("figures_2_to_4", figures_2_to_4),
        ("bound_suite", bound_suite),
        ("strengthened_invariant", strengthened_invariant),
        ("factorization_uniqueness", factorization_uniqueness),
        ("minimal_length", minimal_length),
        ("sigma_conjecture", sigma_conjecture),
        ("mate_totality", mate_totality),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
