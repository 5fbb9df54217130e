//! The `gsq` command line. [`run`] takes the argument list and output sinks
//! and returns the process exit code, so tests can drive it in-process.
//!
//! Exit codes: 0 verdict true (or success), 1 verdict false, 2 usage or
//! parse error, 3 a completion limit was hit.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::basis::{hilbert, irr_words_weighted};
use crate::presentation::{parse_poly, parse_presentation, PresentationBundle};
use crate::report::{
    CensusRow, CensusSection, CompletionSection, GsSection, HilbertSection, InputSummary, IrrSection, ModeSection,
    NormalFormSection, RunReport, TriangularSection,
};
use crate::rewrite::{
    check_gs_basis, find_compositions, reduce, shirshov_complete, CompletionLimits, CompletionStatus, RewriteError,
    RewriteSystem,
};
use crate::uq::{
    cartan_an, full_uq_bundle, jimbo_bundle, lie_pbw_relations, proof_case_classify, serre_relations, sl2_table,
    triangular_check, CartanData, FullMode, LieTable, Sign,
};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Largest `--n` accepted by `replay` unless `--max-n` raises it.
pub const DEFAULT_REPLAY_MAX_N: usize = 5;

/// Length up to which `verify` checks the triangular shape of a verified
/// full `U_q(A_N)` relation set.
pub const TRIANGULAR_CAP: usize = 4;

/// Environment variable read when `--threads` is absent.
pub const THREADS_ENV: &str = "GSQ_THREADS";

#[derive(Parser, Debug)]
#[command(name = "gsq", version, about = "Gröbner–Shirshov bases over Q(q)")]
struct Cli {
    /// Worker threads for composition checking (default from GSQ_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Builtin {
    UqPlus,
    UqMinus,
    UqFull,
    Serre,
    Sl2,
    LiePbw,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    AsPrinted,
    Extended,
}

impl From<Mode> for FullMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::AsPrinted => FullMode::AsPrinted,
            Mode::Extended => FullMode::Extended,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Params {
    /// Rank N for uq-plus, uq-minus, uq-full, and serre without --cartan.
    #[arg(long)]
    n: Option<usize>,
    /// Reading of the full relation set; verify runs both when omitted.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Cartan matrix file for serre.
    #[arg(long)]
    cartan: Option<PathBuf>,
    /// Structure-constant table file for lie-pbw.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Presentation file.
    #[arg(conflicts_with = "builtin")]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Leave timings out, making reports byte-identical across runs.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide whether the relations form a Gröbner–Shirshov basis.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Include the reduction trace of every composition.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run bounded Shirshov completion.
    Complete {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = CompletionLimits::default().max_degree)]
        max_degree: usize,
        #[arg(long, default_value_t = CompletionLimits::default().max_rounds)]
        max_rounds: usize,
        /// Write the resulting presentation here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Reduce a polynomial to normal form.
    Nf {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Count (and with --list, print) normal words by weighted degree.
    Irr {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 6)]
        cap: u64,
        /// Either `w1,w2,...` in generator order or `name=w,...`.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Per-degree dimensions of the quotient, counted from normal words.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 6)]
        cap: u64,
        #[arg(long)]
        weights: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Print a generated presentation in the file format.
    Gen {
        #[arg(value_enum)]
        kind: Builtin,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every composition of the Jimbo relations of rank N into the
    /// case tables of the hand proof and check each one.
    Replay {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_REPLAY_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Failure that ends a command before a report exists.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CmdResult = Result<(RunReport, i32, Option<String>), Usage>;

fn read(path: &Path) -> Result<String, Usage> {
    std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn need_n(p: &Params) -> Result<usize, Usage> {
    p.n.ok_or_else(|| Usage("this builtin needs --n".into()))
}

fn builtin_bundle(kind: Builtin, p: &Params) -> Result<PresentationBundle, Usage> {
    Ok(match kind {
        Builtin::UqPlus => jimbo_bundle(need_n(p)?, Sign::Plus)?,
        Builtin::UqMinus => jimbo_bundle(need_n(p)?, Sign::Minus)?,
        Builtin::UqFull => full_uq_bundle(need_n(p)?, p.mode.unwrap_or(Mode::AsPrinted).into())?,
        Builtin::Serre => {
            let c = match &p.cartan {
                Some(path) => CartanData::parse(&read(path)?)?,
                None => cartan_an(need_n(p)?)?,
            };
            serre_relations(&c, Sign::Plus)?
        }
        Builtin::Sl2 => lie_pbw_relations(&sl2_table())?.renamed("sl2"),
        Builtin::LiePbw => {
            let path = p.table.as_ref().ok_or_else(|| Usage("lie-pbw needs --table".into()))?;
            lie_pbw_relations(&LieTable::parse(&read(path)?)?)?
        }
    })
}

fn load(src: &Source) -> Result<PresentationBundle, Usage> {
    match (&src.file, src.builtin) {
        (Some(path), None) => {
            let text = read(path)?;
            parse_presentation(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
        }
        (None, Some(kind)) => builtin_bundle(kind, &src.params),
        _ => Err(Usage("give a presentation file or --builtin".into())),
    }
}

fn system(b: &PresentationBundle) -> Result<RewriteSystem, Usage> {
    Ok(b.system()?)
}

fn parse_weights(raw: &str, b: &PresentationBundle) -> Result<Vec<u32>, Usage> {
    let a = &b.alphabet;
    let bad = |s: &str| Usage(format!("bad weight `{s}`"));
    if raw.contains('=') {
        let mut w = a.weights().to_vec();
        for item in raw.split(',') {
            let (name, v) = item.split_once('=').ok_or_else(|| bad(item))?;
            let l = a
                .letter(name.trim())
                .ok_or_else(|| Usage(format!("unknown generator `{}`", name.trim())))?;
            w[l as usize] = v.trim().parse().map_err(|_| bad(item))?;
        }
        Ok(w)
    } else {
        let w: Vec<u32> = raw
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| bad(s)))
            .collect::<Result<_, _>>()?;
        if w.len() != a.len() {
            return Err(Usage(format!("expected {} weights, found {}", a.len(), w.len())));
        }
        Ok(w)
    }
}

fn exit_for(v: bool) -> i32 {
    if v {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn verify_mode(n: usize, mode: FullMode, trace: bool, report: &mut RunReport) -> Result<bool, Usage> {
    let t = Instant::now();
    let b = full_uq_bundle(n, mode)?;
    report.time(format!("build {}", mode.as_str()), t.elapsed());
    let sys = system(&b)?;
    let t = Instant::now();
    let gs = check_gs_basis(&sys, trace);
    report.time(format!("verify {}", mode.as_str()), t.elapsed());
    let triangular = gs.verdict.then(|| {
        let tc = triangular_check(n, &sys, TRIANGULAR_CAP);
        TriangularSection::of(&tc, TRIANGULAR_CAP, sys.alphabet())
    });
    let verdict = gs.verdict && triangular.as_ref().is_none_or(|t| t.holds);
    report.modes.push(ModeSection {
        mode: mode.as_str().to_string(),
        input: InputSummary::of(&b),
        completion: b.metadata.get("completion").cloned(),
        gs: GsSection::of(&gs, sys.alphabet()),
        triangular,
    });
    Ok(verdict)
}

fn cmd_verify(src: &Source, trace: bool) -> CmdResult {
    let mut report = RunReport::new("verify");
    if src.builtin == Some(Builtin::UqFull) {
        let n = need_n(&src.params)?;
        let modes = match src.params.mode {
            Some(m) => vec![m.into()],
            None => vec![FullMode::AsPrinted, FullMode::Extended],
        };
        let mut all = true;
        for mode in modes {
            all &= verify_mode(n, mode, trace, &mut report)?;
        }
        report.verdict = Some(all);
        return Ok((report, exit_for(all), None));
    }
    let b = load(src)?;
    let sys = system(&b)?;
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let gs = check_gs_basis(&sys, trace);
    report.time("verify", t.elapsed());
    report.verdict = Some(gs.verdict);
    report.gs = Some(GsSection::of(&gs, sys.alphabet()));
    Ok((report, exit_for(gs.verdict), None))
}

fn cmd_complete(src: &Source, limits: CompletionLimits) -> CmdResult {
    let b = load(src)?;
    let sys = system(&b)?;
    let mut report = RunReport::new("complete");
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let result = shirshov_complete(&sys, limits);
    report.time("complete", t.elapsed());
    let (section, out_sys, code) = match result {
        Ok(c) => {
            let code = match c.status {
                CompletionStatus::Complete => EXIT_TRUE,
                CompletionStatus::Truncated => EXIT_LIMIT,
            };
            (CompletionSection::of(&c), c.system, code)
        }
        Err(RewriteError::LimitExceeded { rounds, partial }) => {
            (CompletionSection::round_limit(rounds, &partial), *partial, EXIT_LIMIT)
        }
        Err(e) => return Err(e.into()),
    };
    let bundle = PresentationBundle {
        relations: out_sys.polys(),
        ..b.clone()
    }
    .with_meta("completion", &section.status);
    report.completion = Some(section);
    Ok((report, code, Some(bundle.export())))
}

fn cmd_nf(src: &Source, poly: &str, trace: bool) -> CmdResult {
    let b = load(src)?;
    let sys = system(&b)?;
    let p = parse_poly(poly, &b.alphabet).map_err(|e| Usage(format!("--poly: {e}")))?;
    let mut report = RunReport::new("nf");
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let tr = reduce(&p, &sys);
    report.time("reduce", t.elapsed());
    report.normal_form = Some(NormalFormSection::of(&p, &tr, &b.alphabet, trace));
    Ok((report, EXIT_TRUE, None))
}

fn weights_for(b: &PresentationBundle, raw: &Option<String>) -> Result<Vec<u32>, Usage> {
    match raw {
        Some(s) => parse_weights(s, b),
        None => Ok(b.alphabet.weights().to_vec()),
    }
}

fn cmd_irr(src: &Source, cap: u64, weights: &Option<String>, list: bool) -> CmdResult {
    let b = load(src)?;
    let sys = system(&b)?;
    let w = weights_for(&b, weights)?;
    let mut report = RunReport::new("irr");
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let e = irr_words_weighted(&sys, &w, cap)?;
    report.time("enumerate", t.elapsed());
    report.irr = Some(IrrSection::of(&e, &b.alphabet, list));
    Ok((report, EXIT_TRUE, None))
}

fn cmd_hilbert(src: &Source, cap: u64, weights: &Option<String>) -> CmdResult {
    let b = load(src)?;
    let sys = system(&b)?;
    let w = weights_for(&b, weights)?;
    let mut report = RunReport::new("hilbert");
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let h = hilbert(&sys, &w, cap)?;
    report.time("count", t.elapsed());
    report.hilbert = Some(HilbertSection::of(&h, cap));
    Ok((report, EXIT_TRUE, None))
}

fn cmd_replay(n: usize, max_n: usize) -> CmdResult {
    if n == 0 || n > max_n {
        return Err(Usage(format!("--n must lie in 1..={max_n}")));
    }
    let b = jimbo_bundle(n, Sign::Plus)?;
    let sys = system(&b)?;
    let mut report = RunReport::new("replay");
    report.input = Some(InputSummary::of(&b));
    let t = Instant::now();
    let gs = check_gs_basis(&sys, false);
    report.time("verify", t.elapsed());
    let t = Instant::now();
    let classes: Vec<_> = find_compositions(&sys)
        .par_iter()
        .map(|c| proof_case_classify(c, &sys, n))
        .collect();
    report.time("classify", t.elapsed());
    let mut rows: BTreeMap<(u8, String), (usize, usize)> = BTreeMap::new();
    let mut unclassifiable = Vec::new();
    for (rec, class) in gs.records.iter().zip(&classes) {
        match class {
            Ok(pc) => {
                let e = rows.entry((pc.case, pc.subcase.clone())).or_default();
                e.0 += 1;
                e.1 += rec.is_trivial() as usize;
            }
            Err(err) => unclassifiable.push(format!("w = {}: {err}", b.alphabet.render(&rec.composition.w))),
        }
    }
    let cases: std::collections::BTreeSet<u8> = rows.keys().map(|k| k.0).collect();
    let census = CensusSection {
        n,
        compositions: gs.records.len(),
        all_trivial: gs.verdict,
        cases_covered: cases.len(),
        rows: rows
            .into_iter()
            .map(|((case, subcase), (count, trivial))| CensusRow {
                case,
                subcase,
                count,
                trivial,
            })
            .collect(),
        unclassifiable,
    };
    let verdict = census.all_trivial && census.unclassifiable.is_empty();
    report.verdict = Some(verdict);
    report.gs = Some(GsSection::of(&gs, sys.alphabet()));
    report.census = Some(census);
    Ok((report, exit_for(verdict), None))
}

fn write_file(path: &Path, text: &str) -> Result<(), Usage> {
    std::fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: &Cmd, out: &mut Vec<u8>) -> Result<i32, Usage> {
    let (output, result) = match cmd {
        Cmd::Gen { kind, params, out: path } => {
            let text = builtin_bundle(*kind, params)?.export();
            match path {
                Some(p) => write_file(p, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            return Ok(EXIT_TRUE);
        }
        Cmd::Verify { source, trace, output } => (output, cmd_verify(source, *trace)),
        Cmd::Complete {
            source,
            max_degree,
            max_rounds,
            out: _,
            output,
        } => (
            output,
            cmd_complete(
                source,
                CompletionLimits {
                    max_degree: *max_degree,
                    max_rounds: *max_rounds,
                },
            ),
        ),
        Cmd::Nf {
            source,
            poly,
            trace,
            output,
        } => (output, cmd_nf(source, poly, *trace)),
        Cmd::Irr {
            source,
            cap,
            weights,
            list,
            output,
        } => (output, cmd_irr(source, *cap, weights, *list)),
        Cmd::Hilbert {
            source,
            cap,
            weights,
            output,
        } => (output, cmd_hilbert(source, *cap, weights)),
        Cmd::Replay { n, max_n, output } => (output, cmd_replay(*n, *max_n)),
    };
    let (mut report, code, file) = result?;
    if let (Cmd::Complete { out: Some(p), .. }, Some(text)) = (cmd, &file) {
        write_file(p, text)?;
    }
    if output.no_timings {
        report.timings = None;
    }
    let rendered = if output.json {
        let mut s = report.to_json();
        s.push('\n');
        s
    } else {
        crate::report::render_text(&report)
    };
    out.write_all(rendered.as_bytes())?;
    Ok(code)
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Usage> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Usage(format!("{THREADS_ENV} must be a thread count, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_TRUE
            };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match thread_count(cli.threads) {
        Err(e) => Err(e),
        Ok(None) => dispatch(&cli.cmd, &mut buf),
        Ok(Some(k)) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.cmd, &mut buf)),
            Err(e) => Err(Usage(e.to_string())),
        },
    };
    if out.write_all(&buf).is_err() {
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
