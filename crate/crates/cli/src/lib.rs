//! Command-line surface over the `ascseq` library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::io::{self, BufRead, Write};

use ascseq::enumerate::{
    verify_equidistribution_with, AscentSequences, AvoidingPermutations, Caps, DistributionDelta,
    EquidistributionReport, JointDistribution, MapPair, Verdict,
};
use ascseq::seq::{format_values, parse_values};
use ascseq::{
    asc, avoids_word, catalan, pattern_021, pattern_132, rlm, special_max, AscentSequence,
    PermPattern, Permutation, WordPattern,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ascseq",
    version,
    about = "Ascent sequences, pattern avoidance and the (asc, rlm)-preserving bijection between A_n(021) and S_n(132)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub format: OutputFormat,

    /// Lift the length caps (20 for ascent sequences, 13 for permutations).
    #[arg(long, global = true)]
    pub max_n_override: bool,

    /// Worker threads for counting and distributions (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Print per-object progress on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ascent,
    Perm,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Ascent => "ascent",
            Kind::Perm => "perm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every object of length n, in lexicographic order.
    Enumerate {
        kind: Kind,
        n: usize,
        /// Pattern to avoid, e.g. "0 2 1" or "021"; may be repeated.
        #[arg(long)]
        avoid: Vec<String>,
    },
    /// Print the exact number of objects of length n.
    Count {
        kind: Kind,
        n: usize,
        #[arg(long)]
        avoid: Vec<String>,
    },
    /// Statistics of one object (or one per stdin line).
    Stats { kind: Kind, object: Option<String> },
    /// Apply the bijection (forward) or its inverse to one object, or to
    /// each stdin line.
    Map {
        direction: Direction,
        object: Option<String>,
    },
    /// Joint (asc, rlm) tables of A_n(021) and S_n(132) and their difference.
    Distribution { n: usize },
    /// Check equidistribution and the bijection for n = 1..=n_max.
    Verify { n_max: usize },
}

/// A failure that ends the command with a nonzero exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<i32, Failure>;

struct Context<'a> {
    format: OutputFormat,
    caps: Caps,
    threads: Option<usize>,
    verbose: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs a parsed command line against the given streams and returns the
/// process exit code.
pub fn run(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with_maps(cli, &MapPair::default(), stdin, out, err)
}

/// Like [`run`], with the bijection under test supplied by the caller.
pub fn run_with_maps(
    cli: Cli,
    maps: &MapPair<'_>,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let caps = if cli.max_n_override {
        Caps::unlimited()
    } else {
        Caps::default()
    };
    if cli.threads == Some(0) {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    let mut ctx = Context {
        format: cli.format,
        caps,
        threads: cli.threads,
        verbose: cli.verbose,
        out,
        err,
    };
    let result = match cli.command {
        Command::Enumerate { kind, n, avoid } => cmd_enumerate(&mut ctx, kind, n, &avoid),
        Command::Count { kind, n, avoid } => cmd_count(&mut ctx, kind, n, &avoid),
        Command::Stats { kind, object } => {
            for_each_input(object, stdin, |text| cmd_stats(&mut ctx, kind, text))
        }
        Command::Map { direction, object } => for_each_input(object, stdin, |text| {
            cmd_map(&mut ctx, maps, direction, text)
        }),
        Command::Distribution { n } => cmd_distribution(&mut ctx, n),
        Command::Verify { n_max } => cmd_verify(&mut ctx, maps, n_max),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.err, "error: {}", f.message);
            f.code
        }
    };
    let _ = ctx.out.flush();
    code
}

fn for_each_input(
    object: Option<String>,
    stdin: &mut dyn BufRead,
    mut handle: impl FnMut(&str) -> CmdResult,
) -> CmdResult {
    if let Some(text) = object {
        return handle(&text);
    }
    let mut any = false;
    for line in stdin.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        any = true;
        handle(&line)?;
    }
    if !any {
        return Err(Failure::usage("no input object given"));
    }
    Ok(EXIT_OK)
}

fn parse_word_patterns(avoid: &[String]) -> Result<Vec<WordPattern>, Failure> {
    avoid
        .iter()
        .map(|p| {
            p.parse::<WordPattern>()
                .map_err(|e| Failure::usage(format!("bad pattern {p:?}: {e}")))
        })
        .collect()
}

fn parse_perm_patterns(avoid: &[String]) -> Result<Vec<PermPattern>, Failure> {
    avoid
        .iter()
        .map(|p| {
            p.parse::<PermPattern>()
                .map_err(|e| Failure::usage(format!("bad pattern {p:?}: {e}")))
        })
        .collect()
}

fn ascent_stream(ctx: &Context, n: usize, avoid: &[String]) -> Result<AscentSequences, Failure> {
    let patterns = parse_word_patterns(avoid)?;
    AscentSequences::new(n, &patterns, ctx.caps.ascent)
        .map_err(|e| Failure::usage(format!("{e} (use --max-n-override to lift it)")))
}

fn perm_stream(ctx: &Context, n: usize, avoid: &[String]) -> Result<AvoidingPermutations, Failure> {
    let patterns = parse_perm_patterns(avoid)?;
    AvoidingPermutations::new(n, &patterns, ctx.caps.perm)
        .map_err(|e| Failure::usage(format!("{e} (use --max-n-override to lift it)")))
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn cmd_enumerate(ctx: &mut Context, kind: Kind, n: usize, avoid: &[String]) -> CmdResult {
    let emit = |ctx: &mut Context, index: usize, x: &[u32]| -> io::Result<()> {
        match ctx.format {
            OutputFormat::Plain => writeln!(ctx.out, "{}", format_values(x)),
            OutputFormat::Json => {
                let sep = if index == 0 { "" } else { "," };
                write!(ctx.out, "{sep}{}", json(x))
            }
            OutputFormat::Csv => {
                let row = if x.is_empty() {
                    String::new()
                } else {
                    format_values(x)
                };
                writeln!(ctx.out, "{n},{row}")
            }
        }
    };
    match ctx.format {
        OutputFormat::Json => write!(ctx.out, "[")?,
        OutputFormat::Csv => writeln!(ctx.out, "n,object")?,
        OutputFormat::Plain => {}
    }
    let mut index = 0;
    match kind {
        Kind::Ascent => {
            let mut it = ascent_stream(ctx, n, avoid)?;
            while let Some(x) = it.next_slice() {
                emit(ctx, index, x)?;
                index += 1;
            }
        }
        Kind::Perm => {
            let mut it = perm_stream(ctx, n, avoid)?;
            while let Some(x) = it.next_slice() {
                emit(ctx, index, x)?;
                index += 1;
            }
        }
    }
    if ctx.format == OutputFormat::Json {
        writeln!(ctx.out, "]")?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CountRecord<'a> {
    kind: &'a str,
    n: usize,
    avoid: Vec<String>,
    count: u128,
}

fn cmd_count(ctx: &mut Context, kind: Kind, n: usize, avoid: &[String]) -> CmdResult {
    let (count, avoid) = match kind {
        Kind::Ascent => {
            let patterns = parse_word_patterns(avoid)?;
            let count = ascent_stream(ctx, n, avoid)?.par_count(ctx.threads);
            (
                count,
                patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            )
        }
        Kind::Perm => {
            let patterns = parse_perm_patterns(avoid)?;
            let count = perm_stream(ctx, n, avoid)?.par_count(ctx.threads);
            (count, patterns.iter().map(|p| p.to_string()).collect())
        }
    };
    match ctx.format {
        OutputFormat::Plain => writeln!(ctx.out, "{count}")?,
        OutputFormat::Json => {
            let record = CountRecord {
                kind: kind.name(),
                n,
                avoid,
                count,
            };
            writeln!(ctx.out, "{}", json(&record))?
        }
        OutputFormat::Csv => {
            writeln!(ctx.out, "kind,n,avoid,count")?;
            writeln!(ctx.out, "{},{n},{},{count}", kind.name(), avoid.join(";"))?
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SpecialMaxRecord {
    value: u32,
    run: Option<(usize, usize)>,
    repeated: bool,
}

#[derive(Serialize)]
struct StatsRecord<'a> {
    kind: &'a str,
    object: &'a [u32],
    asc: usize,
    rlm: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    special_max: Option<SpecialMaxRecord>,
}

fn cmd_stats(ctx: &mut Context, kind: Kind, text: &str) -> CmdResult {
    let values = parse_values(text).map_err(|e| Failure::usage(format!("{text:?}: {e}")))?;
    let special = match kind {
        Kind::Ascent => {
            let x = AscentSequence::new(values.clone())
                .map_err(|e| Failure::usage(format!("{text:?} is not an ascent sequence: {e}")))?;
            let info = special_max(&x);
            Some(SpecialMaxRecord {
                value: info.value,
                run: info.run,
                repeated: info.repeated(),
            })
        }
        Kind::Perm => {
            Permutation::new(values.clone())
                .map_err(|e| Failure::usage(format!("{text:?} is not a permutation: {e}")))?;
            None
        }
    };
    let record = StatsRecord {
        kind: kind.name(),
        object: &values,
        asc: asc(&values),
        rlm: rlm(&values),
        special_max: special,
    };
    match ctx.format {
        OutputFormat::Plain => {
            writeln!(ctx.out, "object {}", format_values(&values))?;
            writeln!(ctx.out, "asc {}", record.asc)?;
            writeln!(ctx.out, "rlm {}", record.rlm)?;
            if let Some(s) = &record.special_max {
                writeln!(ctx.out, "special_max {}", s.value)?;
                match s.run {
                    Some((a, b)) => writeln!(ctx.out, "run {a}..{b}")?,
                    None => writeln!(ctx.out, "run none")?,
                }
                let label = if s.repeated { "repeated" } else { "unique" };
                writeln!(ctx.out, "{label}")?;
            }
        }
        OutputFormat::Json => writeln!(ctx.out, "{}", json(&record))?,
        OutputFormat::Csv => {
            writeln!(
                ctx.out,
                "kind,object,asc,rlm,special_max,run_start,run_end,repeated"
            )?;
            let (m, start, end, rep) = match &record.special_max {
                Some(s) => (
                    s.value.to_string(),
                    s.run.map(|r| r.0.to_string()).unwrap_or_default(),
                    s.run.map(|r| r.1.to_string()).unwrap_or_default(),
                    s.repeated.to_string(),
                ),
                None => Default::default(),
            };
            let obj = if values.is_empty() {
                String::new()
            } else {
                format_values(&values)
            };
            writeln!(
                ctx.out,
                "{},{obj},{},{},{m},{start},{end},{rep}",
                record.kind, record.asc, record.rlm
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// `132` as a word pattern; on words with distinct entries the two kinds of
/// matching coincide, so this also screens inputs that are not permutations.
fn p132_as_word() -> WordPattern {
    WordPattern::new(vec![0, 2, 1]).expect("valid pattern")
}

/// Names every reason `values` is outside a map's domain.
fn domain_failure(
    text: &str,
    invalid: Option<ascseq::Error>,
    values: &[u32],
    contains: impl Fn(&[u32]) -> bool,
    pattern: &str,
) -> Failure {
    let mut reasons = Vec::new();
    if let Some(e) = invalid {
        reasons.push(format!("invalid: {e}"));
    }
    if contains(values) {
        reasons.push(format!("contains {pattern}"));
    }
    Failure::usage(format!(
        "{text:?} is outside the domain: {}",
        reasons.join("; ")
    ))
}

#[derive(Serialize)]
struct MapRecord<'a> {
    input: &'a [u32],
    output: &'a [u32],
}

fn cmd_map(ctx: &mut Context, maps: &MapPair<'_>, direction: Direction, text: &str) -> CmdResult {
    let values = parse_values(text).map_err(|e| Failure::usage(format!("{text:?}: {e}")))?;
    let image = match direction {
        Direction::Forward => {
            let x = AscentSequence::new(values.clone());
            if x.is_err() || !avoids_word(&values, &pattern_021()) {
                return Err(domain_failure(
                    text,
                    x.err(),
                    &values,
                    |v| !avoids_word(v, &pattern_021()),
                    "021",
                ));
            }
            (maps.forward)(&x.expect("checked above"))
                .map_err(|e| Failure::usage(format!("{text:?} is outside the domain: {e}")))?
                .into_vec()
        }
        Direction::Inverse => {
            let pi = Permutation::new(values.clone());
            if pi.is_err() || !avoids_word(&values, &p132_as_word()) {
                return Err(domain_failure(
                    text,
                    pi.err(),
                    &values,
                    |v| !avoids_word(v, &p132_as_word()),
                    "132",
                ));
            }
            (maps.inverse)(&pi.expect("checked above"))
                .map_err(|e| Failure::usage(format!("{text:?} is outside the domain: {e}")))?
                .into_vec()
        }
    };
    match ctx.format {
        OutputFormat::Plain => writeln!(ctx.out, "{}", format_values(&image))?,
        OutputFormat::Json => writeln!(
            ctx.out,
            "{}",
            json(&MapRecord {
                input: &values,
                output: &image
            })
        )?,
        OutputFormat::Csv => writeln!(
            ctx.out,
            "{},{}",
            format_values(&values),
            format_values(&image)
        )?,
    }
    Ok(EXIT_OK)
}

const FAMILY_A: &str = "A021";
const FAMILY_S: &str = "S132";

#[derive(Serialize)]
struct Families {
    #[serde(rename = "A021")]
    ascent: Vec<(usize, usize, u128)>,
    #[serde(rename = "S132")]
    perm: Vec<(usize, usize, u128)>,
}

#[derive(Serialize)]
struct DistributionRecord {
    n: usize,
    families: Families,
    difference: Vec<(usize, usize, u128, u128)>,
    totals: (u128, u128),
    catalan: u128,
    verdict: Verdict,
}

fn delta_tuples(d: &[DistributionDelta]) -> Vec<(usize, usize, u128, u128)> {
    d.iter().map(|d| (d.asc, d.rlm, d.left, d.right)).collect()
}

fn write_table(out: &mut dyn Write, family: &str, dist: &JointDistribution) -> io::Result<()> {
    writeln!(out, "{family} total {}", dist.total())?;
    writeln!(out, "asc rlm count")?;
    for (a, r, c) in dist.triples() {
        writeln!(out, "{a} {r} {c}")?;
    }
    Ok(())
}

fn cmd_distribution(ctx: &mut Context, n: usize) -> CmdResult {
    let c = catalan(n).map_err(|e| Failure::usage(e.to_string()))?;
    let ascent = AscentSequences::new(n, &[pattern_021()], ctx.caps.ascent)
        .map_err(|e| Failure::usage(e.to_string()))?
        .par_distribution(ctx.threads);
    let perm = AvoidingPermutations::new(n, &[pattern_132()], ctx.caps.perm)
        .map_err(|e| Failure::usage(format!("{e} (use --max-n-override to lift it)")))?
        .par_distribution(ctx.threads);
    let difference = ascent.difference(&perm);
    let pass = difference.is_empty() && ascent.total() == c && perm.total() == c;
    let verdict = if pass { Verdict::Pass } else { Verdict::Fail };
    match ctx.format {
        OutputFormat::Plain => {
            writeln!(ctx.out, "n {n}")?;
            write_table(ctx.out, FAMILY_A, &ascent)?;
            write_table(ctx.out, FAMILY_S, &perm)?;
            writeln!(ctx.out, "catalan {c}")?;
            if difference.is_empty() {
                writeln!(ctx.out, "difference none")?;
            } else {
                writeln!(ctx.out, "difference asc rlm {FAMILY_A} {FAMILY_S}")?;
                for d in &difference {
                    writeln!(ctx.out, "{} {} {} {}", d.asc, d.rlm, d.left, d.right)?;
                }
            }
            writeln!(ctx.out, "verdict {verdict}")?;
        }
        OutputFormat::Json => {
            let record = DistributionRecord {
                n,
                families: Families {
                    ascent: ascent.triples(),
                    perm: perm.triples(),
                },
                difference: delta_tuples(&difference),
                totals: (ascent.total(), perm.total()),
                catalan: c,
                verdict,
            };
            writeln!(ctx.out, "{}", json(&record))?;
        }
        OutputFormat::Csv => {
            writeln!(ctx.out, "n,family,asc,rlm,count")?;
            for (family, dist) in [(FAMILY_A, &ascent), (FAMILY_S, &perm)] {
                for (a, r, count) in dist.triples() {
                    writeln!(ctx.out, "{n},{family},{a},{r},{count}")?;
                }
            }
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    verdict: Verdict,
    #[serde(rename = "A021")]
    ascent_total: u128,
    #[serde(rename = "S132")]
    perm_total: u128,
    catalan: u128,
    difference: Vec<(usize, usize, u128, u128)>,
    counterexample: Option<ascseq::enumerate::Counterexample>,
}

#[derive(Serialize)]
struct VerifyRecord {
    results: Vec<VerifyRow>,
    verdict: Verdict,
}

fn verify_row(r: &EquidistributionReport) -> VerifyRow {
    VerifyRow {
        n: r.n,
        verdict: r.verdict,
        ascent_total: r.ascent.total(),
        perm_total: r.perm.total(),
        catalan: r.catalan,
        difference: delta_tuples(&r.difference),
        counterexample: r.counterexample.clone(),
    }
}

fn cmd_verify(ctx: &mut Context, maps: &MapPair<'_>, n_max: usize) -> CmdResult {
    if n_max > ctx.caps.perm {
        return Err(Failure::usage(format!(
            "length {n_max} exceeds the enumeration cap of {} (use --max-n-override to lift it)",
            ctx.caps.perm
        )));
    }
    let mut rows = Vec::new();
    let mut verdict = Verdict::Pass;
    if ctx.format == OutputFormat::Csv {
        writeln!(ctx.out, "n,verdict,A021,S132,catalan,counterexample")?;
    }
    for n in 1..=n_max {
        if ctx.verbose {
            writeln!(ctx.err, "checking n = {n}")?;
        }
        let report = verify_equidistribution_with(n, maps, ctx.threads)
            .map_err(|e| Failure::usage(e.to_string()))?;
        if ctx.verbose {
            for x in AscentSequences::new(n, &[pattern_021()], usize::MAX).expect("uncapped") {
                if let Ok(pi) = (maps.forward)(&x) {
                    writeln!(ctx.err, "  {x} -> {pi}")?;
                }
            }
        }
        let row = verify_row(&report);
        let counterexample = report
            .counterexample
            .as_ref()
            .map(|c| c.to_string())
            .unwrap_or_default();
        match ctx.format {
            OutputFormat::Plain => {
                writeln!(
                    ctx.out,
                    "n {n} {} {FAMILY_A} {} {FAMILY_S} {} catalan {}",
                    report.verdict, row.ascent_total, row.perm_total, row.catalan
                )?;
                for d in &report.difference {
                    writeln!(
                        ctx.out,
                        "  difference at (asc {}, rlm {}): {} vs {}",
                        d.asc, d.rlm, d.left, d.right
                    )?;
                }
                if !counterexample.is_empty() {
                    writeln!(ctx.out, "  counterexample: {counterexample}")?;
                }
            }
            OutputFormat::Csv => writeln!(
                ctx.out,
                "{n},{},{},{},{},\"{}\"",
                report.verdict,
                row.ascent_total,
                row.perm_total,
                row.catalan,
                counterexample.replace('"', "\"\"")
            )?,
            OutputFormat::Json => {}
        }
        rows.push(row);
        if report.verdict == Verdict::Fail {
            verdict = Verdict::Fail;
            break;
        }
    }
    match ctx.format {
        OutputFormat::Json => writeln!(
            ctx.out,
            "{}",
            json(&VerifyRecord {
                results: rows,
                verdict
            })
        )?,
        OutputFormat::Plain => writeln!(ctx.out, "verdict {verdict}")?,
        OutputFormat::Csv => {}
    }
    Ok(match verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_VERIFY_FAILED,
    })
}

/// Parses `args` like a command line; clap's own exit codes (2 for usage
/// errors, 0 for help) are preserved through `Err`.
pub fn parse_args<I, T>(args: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args)
}
