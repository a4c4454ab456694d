use std::fs::File;
use std::fmt::Write as _;
use std::io::{self, BufReader, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dsquares::input::{read_words, InputWord, DEFAULT_MAX_LEN};
use dsquares::report::{analyze, render_text, to_json, SearchReport, Style};
use dsquares::run::{default_jobs, search, verify, SearchOptions, VerifyOptions};
use dsquares::figures::all_figures;
use dsquares_core::properties::parse_suite;

const OK: u8 = 0;
const USAGE: u8 = 1;
const FALSIFIED: u8 = 2;

#[derive(Parser)]
#[command(name = "dsquares", version, about = "Double squares: analysis, exhaustive verification and extremal search")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze words read one per line from FILE or standard input
    Analyze {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Reject words longer than this
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        /// Input file, `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check properties on every canonical word up to a length
    Verify {
        #[arg(long)]
        max_len: usize,
        /// Number of letters
        #[arg(long)]
        alphabet: usize,
        /// Comma-separated property names, or `all`
        #[arg(long)]
        suite: String,
        /// Worker threads (default: logical processors)
        #[arg(long)]
        jobs: Option<usize>,
        /// Progress file to resume from and append to
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Compute the maximum number of distinct primitively rooted squares
    Search {
        /// Number of distinct letters
        #[arg(long)]
        d: usize,
        /// Word length
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Render the four figure words and check their published counts
    Figures,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("dsquares: {msg}");
    ExitCode::from(code)
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn style() -> Style {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    Style {
        color: !no_color && io::stdout().is_terminal(),
    }
}

fn jobs(j: Option<usize>) -> Result<usize, ExitCode> {
    match j {
        Some(0) => Err(fail(USAGE, "--jobs must be at least 1")),
        Some(j) => Ok(j),
        None => Ok(default_jobs()),
    }
}

fn cmd_analyze(format: Format, max_len: usize, input: &str) -> ExitCode {
    let words: Result<Vec<InputWord>, _> = if input == "-" {
        read_words(io::stdin().lock(), max_len)
    } else {
        match File::open(input) {
            Ok(f) => read_words(BufReader::new(f), max_len),
            Err(e) => return fail(USAGE, format!("{input}: {e}")),
        }
    };
    let words = match words {
        Ok(w) => w,
        Err(e) => return fail(USAGE, e),
    };
    let st = style();
    let mut code = OK;
    for iw in &words {
        let r = match analyze(&iw.word) {
            Ok(r) => r,
            Err(e) => {
                code = FALSIFIED;
                eprintln!("dsquares: line {}: {e}", iw.line);
                continue;
            }
        };
        if !r.bounds.all_pass() {
            code = FALSIFIED;
        }
        let text = match format {
            Format::Json => to_json(&r) + "\n",
            Format::Text => render_text(&r, st),
        };
        emit(&text);
    }
    ExitCode::from(code)
}

fn cmd_verify(opts: VerifyOptions) -> ExitCode {
    let st = style();
    let outcome = match verify(&opts) {
        Ok(o) => o,
        Err(e) => return fail(USAGE, e),
    };
    let mut out = format!(
        "verify: max length {}, alphabet {}, {} words in {} shards ({} resumed)\n",
        opts.max_len, opts.d, outcome.words, outcome.shards, outcome.resumed
    );
    for (p, count) in &outcome.failures {
        let _ = writeln!(out, "{:<22} {:>6} counterexamples  {}", p.name(), count, st.verdict(*count == 0));
    }
    for c in &outcome.certificates {
        let _ = writeln!(out, "counterexample {} {}: {}", c.property, c.word, c.witness);
    }
    emit(&out);
    ExitCode::from(if outcome.passed() { OK } else { FALSIFIED })
}

fn cmd_search(opts: SearchOptions) -> ExitCode {
    match search(&opts) {
        Ok(r) => {
            let report = SearchReport::from(&r);
            emit(&(serde_json::to_string(&report).expect("report serializes") + "\n"));
            ExitCode::from(OK)
        }
        Err(e) => fail(USAGE, e),
    }
}

fn cmd_figures() -> ExitCode {
    let st = style();
    let figs = match all_figures() {
        Ok(f) => f,
        Err(e) => return fail(FALSIFIED, e),
    };
    let mut ok = true;
    let mut out = String::new();
    for f in &figs {
        let _ = writeln!(out, "{}", f.rendering);
        for c in &f.checks {
            let _ = writeln!(
                out,
                "  {:<28} expected {:<14} observed {:<14} {}",
                c.label,
                c.expected,
                c.observed,
                st.verdict(c.pass())
            );
            ok &= c.pass();
        }
        out.push('\n');
    }
    emit(&out);
    ExitCode::from(if ok { OK } else { FALSIFIED })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match cli.cmd {
        Cmd::Analyze { format, max_len, input } => cmd_analyze(format, max_len, &input),
        Cmd::Verify {
            max_len,
            alphabet,
            suite,
            jobs: j,
            resume,
        } => {
            let suite = match parse_suite(&suite) {
                Ok(s) => s,
                Err(e) => return fail(USAGE, e),
            };
            let jobs = match jobs(j) {
                Ok(j) => j,
                Err(code) => return code,
            };
            cmd_verify(VerifyOptions {
                max_len,
                d: alphabet,
                suite,
                jobs,
                resume,
            })
        }
        Cmd::Search { d, n, jobs: j, resume } => {
            let jobs = match jobs(j) {
                Ok(j) => j,
                Err(code) => return code,
            };
            cmd_search(SearchOptions {
                d,
                n,
                jobs,
                resume,
                prefix_len: None,
            })
        }
        Cmd::Figures => cmd_figures(),
    }
}
