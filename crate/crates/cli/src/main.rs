//! `rrmon` — check, stream, classify, witness, cross-check, and enumerate
//! request-response trace specifications from the command line.
//!
//! Exit codes: `0` for a positive result (satisfied, witness found, all
//! engines agree), `1` for a negative result (violated, no witness,
//! disagreement found), `2` for usage or parse errors. Malformed input is
//! reported, never panicked on.

use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rrmon_core::{
    build_correspondence, enumerate_words, member, parse_trace, project_nonempty, Answers,
    CorrespondenceKind, EventClass, EventMapping, Formalism, MonitorSession, SpecType, Symbol,
    TraceFormat, Word,
};

#[derive(Parser)]
#[command(
    name = "rrmon",
    version,
    about = "Monitor and analyze request-response trace specifications (RR1-RR6)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a trace against a specification type, in batch or streaming
    /// mode
    Check(CheckArgs),
    /// Map the three design answers to a specification type
    Classify(ClassifyArgs),
    /// Build the canonical request-response correspondence for a trace
    Witness(WitnessArgs),
    /// Cross-validate the membership engines against each other on every
    /// short word
    #[command(name = "cross-check")]
    CrossCheck(CrossCheckArgs),
    /// List every member of a specification type up to a length bound
    Enumerate(EnumerateArgs),
}

/// Where a trace comes from and how to read it.
#[derive(Args)]
struct InputArgs {
    /// Trace file; stdin when omitted or `-`
    input: Option<PathBuf>,
    /// Input format
    #[arg(long, default_value = "tokens", value_parser = ["tokens", "jsonl"])]
    format: String,
    /// JSONL field holding the event name
    #[arg(long, default_value = "event", value_name = "NAME")]
    field: String,
    /// Event name mapping entry, repeatable; identity (`req=req`,
    /// `resp=resp`) when omitted
    #[arg(long = "map", value_name = "NAME=CLASS")]
    map: Vec<String>,
}

impl InputArgs {
    fn trace_format(&self) -> TraceFormat {
        match self.format.as_str() {
            "jsonl" => TraceFormat::Jsonl {
                event_field: self.field.clone(),
            },
            _ => TraceFormat::Tokens,
        }
    }

    fn mapping(&self) -> Result<EventMapping> {
        if self.map.is_empty() {
            return Ok(EventMapping::identity());
        }
        let mut mapping = EventMapping::new();
        for entry in &self.map {
            let (name, class) = entry
                .split_once('=')
                .ok_or_else(|| anyhow!("--map expects NAME=CLASS, got '{entry}'"))?;
            let class: EventClass = class.trim().parse().map_err(|_| {
                anyhow!(
                    "unknown event class '{}' in --map (expected req, resp or other)",
                    class.trim()
                )
            })?;
            mapping.insert(name.trim(), class);
        }
        mapping.validate()?;
        Ok(mapping)
    }

    fn read_to_string(&self) -> Result<String> {
        match self.input.as_deref() {
            Some(p) if p != Path::new("-") => {
                fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
            }
            _ => {
                let mut text = String::new();
                io::stdin()
                    .read_to_string(&mut text)
                    .context("cannot read stdin")?;
                Ok(text)
            }
        }
    }

    fn open_lines(&self) -> Result<Box<dyn BufRead>> {
        match self.input.as_deref() {
            Some(p) if p != Path::new("-") => {
                let file =
                    fs::File::open(p).with_context(|| format!("cannot read {}", p.display()))?;
                Ok(Box::new(BufReader::new(file)))
            }
            _ => Ok(Box::new(BufReader::new(io::stdin()))),
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Specification type to check against
    #[arg(long, value_parser = parse_spec)]
    spec: SpecType,
    /// Membership engine
    #[arg(long, default_value = "automaton", value_parser = parse_formalism)]
    formalism: Formalism,
    /// Read events one per line and print a verdict after each
    #[arg(long)]
    stream: bool,
    /// One JSON object per result line
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Non-interactive answers, e.g. `y,y,n`; give two answers (`c1,c3`)
    /// when the first is `n`
    #[arg(long, value_name = "Y/N,...")]
    answers: Option<String>,
    /// One JSON object instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    /// RR3 (injective witness) or RR4 (bijective witness)
    #[arg(long, value_parser = parse_spec)]
    spec: SpecType,
    /// One JSON object instead of text
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct CrossCheckArgs {
    /// Restrict to one type (default: all six)
    #[arg(long, value_parser = parse_spec)]
    spec: Option<SpecType>,
    /// Engine to include, repeatable (default: every engine applicable to
    /// the type)
    #[arg(long = "formalism", value_parser = parse_formalism)]
    formalism: Vec<Formalism>,
    /// Check all words up to this length
    #[arg(long = "max-len", default_value_t = 10)]
    max_len: usize,
    /// One JSON object per type line
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Specification type to enumerate
    #[arg(long, value_parser = parse_spec)]
    spec: SpecType,
    /// List members up to this length
    #[arg(long = "max-len")]
    max_len: usize,
    /// One JSON object per word
    #[arg(long)]
    json: bool,
}

fn parse_spec(s: &str) -> Result<SpecType, String> {
    s.parse().map_err(|e: rrmon_core::SpecError| e.to_string())
}

fn parse_formalism(s: &str) -> Result<Formalism, String> {
    s.parse().map_err(|e: rrmon_core::SpecError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Witness(args) => cmd_witness(args),
        Command::CrossCheck(args) => cmd_crosscheck(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

fn negative() -> ExitCode {
    ExitCode::from(1)
}

// --- check ---------------------------------------------------------------

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    if args.stream {
        return cmd_check_stream(args);
    }
    let text = args.input.read_to_string()?;
    let mapping = args.input.mapping()?;
    let format = args.input.trace_format();
    // Tolerant parse: unmapped events become empty letters, which the
    // projection then drops.
    let trace = parse_trace(&text, &format, &mapping, false)?;
    let word = project_nonempty(&trace)?.to_word()?;

    let satisfied = member(args.spec, &word, args.formalism)?;
    if satisfied {
        if args.json {
            println!(
                "{}",
                json!({
                    "result": "satisfied",
                    "spec": args.spec.to_string(),
                    "formalism": args.formalism.to_string(),
                })
            );
        } else {
            println!("SATISFIED");
        }
        Ok(ExitCode::SUCCESS)
    } else {
        let diag = diagnostic(args.spec, &word);
        if args.json {
            println!(
                "{}",
                json!({
                    "result": "violated",
                    "spec": args.spec.to_string(),
                    "formalism": args.formalism.to_string(),
                    "diagnostic": diag,
                })
            );
        } else {
            match &diag {
                Some(d) => println!("VIOLATED: {d}"),
                None => println!("VIOLATED"),
            }
        }
        Ok(negative())
    }
}

/// The earliest human-readable reason a non-member fails its type.
fn diagnostic(s: SpecType, w: &Word) -> Option<String> {
    match s {
        SpecType::RR3 => {
            // First suffix (leftmost start) with more requests than
            // responses.
            for i in 0..w.len() {
                let reqs = w.symbols()[i..]
                    .iter()
                    .filter(|&&x| x == Symbol::Req)
                    .count();
                let resps = w.len() - i - reqs;
                if reqs > resps {
                    return Some(format!("suffix at {i} has #req={reqs} > #resp={resps}"));
                }
            }
            None
        }
        SpecType::RR4 => {
            let mut reqs = 0usize;
            let mut resps = 0usize;
            for (i, sym) in w.iter().enumerate() {
                match sym {
                    Symbol::Req => reqs += 1,
                    Symbol::Resp => resps += 1,
                }
                if resps > reqs {
                    return Some(format!(
                        "prefix ending at index {i} has #resp={resps} > #req={reqs}"
                    ));
                }
            }
            if reqs != resps {
                return Some(format!("totals differ: #req={reqs} != #resp={resps}"));
            }
            None
        }
        SpecType::RR1 | SpecType::RR2 | SpecType::RR5 | SpecType::RR6 => {
            let run = rrmon_core::machine_for(s)
                .run(w)
                .expect("counter bounded by word length");
            if let Some(i) = run.stuck_at {
                return Some(match w.symbols()[i] {
                    Symbol::Req => {
                        format!("request at index {i} arrived while another was pending")
                    }
                    Symbol::Resp => {
                        format!("response at index {i} arrived with no pending request")
                    }
                });
            }
            // Rejected without getting stuck: a trailing request is never
            // answered. The earliest such request sits after the last
            // response.
            let after = w
                .symbols()
                .iter()
                .rposition(|&x| x == Symbol::Resp)
                .map_or(0, |p| p + 1);
            (after..w.len())
                .find(|&i| w.symbols()[i] == Symbol::Req)
                .map(|i| format!("request at index {i} is never answered"))
        }
    }
}

fn cmd_check_stream(args: CheckArgs) -> Result<ExitCode> {
    ensure!(
        args.formalism == Formalism::Automaton,
        "streaming verdicts use the automaton engine; drop --formalism {}",
        args.formalism
    );
    let mapping = args.input.mapping()?;
    let format = args.input.trace_format();
    let reader = args.input.open_lines()?;

    let mut session = MonitorSession::new(args.spec);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut index = 0usize;
    for line in reader.lines() {
        let line = line.context("cannot read event line")?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let event = match &format {
            TraceFormat::Tokens => trimmed.to_string(),
            TraceFormat::Jsonl { event_field } => {
                let value: serde_json::Value = serde_json::from_str(trimmed)
                    .with_context(|| format!("event {index}: malformed JSON"))?;
                value
                    .get(event_field)
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| {
                        anyhow!("event {index}: no string field '{event_field}'")
                    })?
                    .to_string()
            }
        };
        // Events outside the mapping are bystanders: they do not advance
        // the monitor but still get a verdict line.
        let verdict = match mapping.classify(&event) {
            Some(EventClass::Req) => session.feed(Symbol::Req),
            Some(EventClass::Resp) => session.feed(Symbol::Resp),
            Some(EventClass::Other) | None => session.current(),
        };
        if args.json {
            writeln!(
                out,
                "{}",
                json!({
                    "index": index,
                    "event": event,
                    "in_language": verdict.in_language,
                    "doomed": verdict.doomed,
                })
            )?;
        } else {
            writeln!(
                out,
                "{index} {event} {} {}",
                verdict.in_language, verdict.doomed
            )?;
        }
        out.flush()?;
        index += 1;
    }
    if session.current().in_language {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(negative())
    }
}

// --- classify ------------------------------------------------------------

fn yn(token: &str) -> Result<bool> {
    match token.trim().to_ascii_lowercase().as_str() {
        "y" | "yes" => Ok(true),
        "n" | "no" => Ok(false),
        other => bail!("invalid answer '{other}' (expected y or n)"),
    }
}

fn parse_answers(text: &str) -> Result<Answers> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    ensure!(!tokens.is_empty() && !tokens[0].is_empty(), "no answers given");
    let c1 = yn(tokens[0])?;
    if c1 {
        ensure!(
            tokens.len() == 3,
            "the first answer is yes, so three answers are needed (c1,c2,c3)"
        );
        Ok(Answers {
            c1,
            c2: Some(yn(tokens[1])?),
            c3: yn(tokens[2])?,
        })
    } else {
        ensure!(
            tokens.len() == 2,
            "the first answer is no, so two answers are needed (c1,c3)"
        );
        Ok(Answers {
            c1,
            c2: None,
            c3: yn(tokens[1])?,
        })
    }
}

fn ask_answers() -> Result<Answers> {
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    let mut ask = |question: &str| -> Result<bool> {
        println!("{question} [y/n]");
        io::stdout().flush()?;
        let line = lines
            .next()
            .ok_or_else(|| anyhow!("no answer for: {question}"))??;
        yn(&line)
    };
    let c1 = ask("May several requests be pending at once?")?;
    let c2 = if c1 {
        Some(ask("Does one response resolve all pending requests?")?)
    } else {
        None
    };
    let c3 = ask("May a response occur while no request is pending?")?;
    Ok(Answers { c1, c2, c3 })
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let answers = match &args.answers {
        Some(text) => parse_answers(text)?,
        None => ask_answers()?,
    };
    let spec = rrmon_core::classify(&answers)?;
    if args.json {
        println!(
            "{}",
            json!({
                "spec": spec.to_string(),
                "description": spec.description(),
                "example": spec.example_name(),
            })
        );
    } else {
        println!("{spec}: {}", spec.description());
        println!("example: {}", spec.example_name());
    }
    Ok(ExitCode::SUCCESS)
}

// --- witness -------------------------------------------------------------

fn cmd_witness(args: WitnessArgs) -> Result<ExitCode> {
    let kind = match args.spec {
        SpecType::RR3 => CorrespondenceKind::Injective,
        SpecType::RR4 => CorrespondenceKind::Bijective,
        other => bail!("witness requires RR3 or RR4, got {other}"),
    };
    let text = args.input.read_to_string()?;
    let mapping = args.input.mapping()?;
    let format = args.input.trace_format();
    // Witnesses are defined on strict traces only: every event must map to
    // req or resp.
    let trace = parse_trace(&text, &format, &mapping, true)?;
    let word = trace.to_word()?;

    match build_correspondence(&word, kind) {
        Some(rho) => {
            let matched: std::collections::BTreeSet<usize> =
                rho.pairs().values().copied().collect();
            let unmatched_responses: Vec<usize> = (0..word.len())
                .filter(|&j| word.symbols()[j] == Symbol::Resp && !matched.contains(&j))
                .collect();
            if args.json {
                println!(
                    "{}",
                    json!({
                        "found": true,
                        "spec": args.spec.to_string(),
                        "pairs": rho.pairs_by_response(),
                        "unmatched_responses": unmatched_responses,
                        "unmatched_requests": Vec::<usize>::new(),
                    })
                );
            } else {
                println!("{rho}");
                if !unmatched_responses.is_empty() {
                    println!(
                        "unmatched responses (allowed): {}",
                        join_indices(&unmatched_responses)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            let (unmatched_responses, unmatched_requests) = diagnose_unmatched(&word);
            if args.json {
                println!(
                    "{}",
                    json!({
                        "found": false,
                        "spec": args.spec.to_string(),
                        "pairs": Vec::<(usize, usize)>::new(),
                        "unmatched_responses": if kind == CorrespondenceKind::Bijective {
                            unmatched_responses.clone()
                        } else {
                            Vec::new()
                        },
                        "unmatched_requests": unmatched_requests,
                    })
                );
            } else {
                println!("no {kind} correspondence");
                if kind == CorrespondenceKind::Bijective && !unmatched_responses.is_empty() {
                    println!("unmatched responses: {}", join_indices(&unmatched_responses));
                }
                if !unmatched_requests.is_empty() {
                    println!("unmatched requests: {}", join_indices(&unmatched_requests));
                }
            }
            Ok(negative())
        }
    }
}

/// Replays the stack construction to name the indices that break it:
/// responses that found nothing pending, and requests left pending at the
/// end.
fn diagnose_unmatched(w: &Word) -> (Vec<usize>, Vec<usize>) {
    let mut pending = Vec::new();
    let mut orphan_responses = Vec::new();
    for (i, sym) in w.iter().enumerate() {
        match sym {
            Symbol::Req => pending.push(i),
            Symbol::Resp => {
                if pending.pop().is_none() {
                    orphan_responses.push(i);
                }
            }
        }
    }
    (orphan_responses, pending)
}

fn join_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// --- cross-check ---------------------------------------------------------

fn cmd_crosscheck(args: CrossCheckArgs) -> Result<ExitCode> {
    let max_len = capped_max_len(args.max_len)?;
    let types: Vec<SpecType> = match args.spec {
        Some(s) => vec![s],
        None => SpecType::ALL.to_vec(),
    };

    let mut all_agree = true;
    for s in types {
        let counting = matches!(s, SpecType::RR3 | SpecType::RR4);
        let applicable: Vec<Formalism> = Formalism::ALL
            .into_iter()
            .filter(|f| *f != Formalism::Counting || counting)
            .collect();
        let engines: Vec<Formalism> = if args.formalism.is_empty() {
            applicable
        } else {
            applicable
                .into_iter()
                .filter(|f| args.formalism.contains(f))
                .collect()
        };
        ensure!(
            engines.len() >= 2,
            "cross-check needs at least two engines applicable to {s}"
        );

        let mut words = 0usize;
        let mut members = 0usize;
        let mut first_disagreement: Option<String> = None;
        for w in enumerate_words(&Symbol::ALPHABET, max_len)? {
            words += 1;
            let results: Vec<bool> = engines
                .iter()
                .map(|f| member(s, &w, *f))
                .collect::<Result<_, _>>()?;
            if results.iter().any(|&r| r != results[0]) {
                if first_disagreement.is_none() {
                    let detail: Vec<String> = engines
                        .iter()
                        .zip(&results)
                        .map(|(f, r)| format!("{f}={r}"))
                        .collect();
                    first_disagreement = Some(format!("{w}: {}", detail.join(", ")));
                }
            } else if results[0] {
                members += 1;
            }
        }

        if args.json {
            println!(
                "{}",
                json!({
                    "spec": s.to_string(),
                    "words": words,
                    "members": members,
                    "engines": engines.len(),
                    "disagreement": first_disagreement,
                })
            );
        } else {
            match &first_disagreement {
                None => println!(
                    "{s}: {members} members / {words} words, {} engines agree",
                    engines.len()
                ),
                Some(detail) => println!("{s}: DISAGREEMENT on {detail}"),
            }
        }
        if first_disagreement.is_some() {
            all_agree = false;
        }
    }
    if all_agree {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(negative())
    }
}

// --- enumerate -----------------------------------------------------------

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode> {
    let max_len = capped_max_len(args.max_len)?;
    for w in enumerate_words(&Symbol::ALPHABET, max_len)? {
        if member(args.spec, &w, Formalism::Automaton)? {
            if args.json {
                let tokens: Vec<&str> = w.iter().map(|s| s.name()).collect();
                println!(
                    "{}",
                    json!({ "word": tokens.join(" "), "length": w.len() })
                );
            } else {
                println!("{w}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Enforces the hard length ceiling and the optional `RRMON_MAX_LEN`
/// environment cap on enumeration commands.
fn capped_max_len(requested: usize) -> Result<usize> {
    const HARD_MAX: usize = 16;
    ensure!(
        requested <= HARD_MAX,
        "--max-len {requested} exceeds the maximum {HARD_MAX}"
    );
    if let Ok(raw) = std::env::var("RRMON_MAX_LEN") {
        let cap: usize = raw
            .trim()
            .parse()
            .context("RRMON_MAX_LEN must be a nonnegative integer")?;
        ensure!(
            requested <= cap,
            "--max-len {requested} exceeds the RRMON_MAX_LEN cap of {cap}"
        );
    }
    Ok(requested)
}
