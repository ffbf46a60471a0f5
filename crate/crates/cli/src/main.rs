use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use revsense::bwt::{bbwt, bwt, sorted_rotations};
use revsense::families::{generate, FamilyId, FamilySpec};
use revsense::format::{ascii_representable, parse_text, write_text, Format};
use revsense::harness::{default_grid, sweep, verify, write_csv, ParamRange, VerifyRow};
use revsense::lex::lex_parse;
use revsense::lyndon::lyndon_factorize;
use revsense::lz::{lz_end_greedy, lz_end_optimal, lz_no_overlap, lz_parse, DEFAULT_NODE_BUDGET};
use revsense::measures::{compute, MeasureId, MeasureOptions};
use revsense::parsing::{Parsing, Source};
use revsense::text::{reverse, Text};
use revsense::Error;

const SHOW_LIMIT: usize = 200;

#[derive(Parser, Debug)]
#[command(version, about = "Repetitiveness measures and their sensitivity to reversal")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family string
    Gen {
        #[command(flatten)]
        source: FamilyArgs,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long)]
        reverse: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compute measures on a family string or an input file
    Measure {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated measure ids
        #[arg(long)]
        measures: String,
        #[arg(long)]
        reverse: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Sweep a family over a parameter range and write CSV
    Sweep {
        #[arg(long)]
        family: String,
        /// start:end[:step], inclusive
        #[arg(long)]
        range: String,
        #[arg(long)]
        measures: String,
        /// Output file; standard output when absent
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Check closed-form predictions against computed values
    Verify {
        /// Family id or `all`
        #[arg(long)]
        family: String,
        #[arg(long)]
        range: Option<String>,
        /// Reduced parameter grid
        #[arg(long)]
        quick: bool,
        /// Print failing rows only
        #[arg(long)]
        failures_only: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Print a rotation matrix or a parsing
    Show {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        view: View,
        #[arg(long)]
        reverse: bool,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    param: Option<u64>,
}

#[derive(Args, Debug)]
struct SourceArgs {
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    param: Option<u64>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Input serialization; detected from the first line when absent
    #[arg(long, value_enum, requires = "input")]
    format: Option<FormatArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Ascii,
    Tokens,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Tokens => Format::Tokens,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum View {
    Bwt,
    Bbwt,
    Lz,
    #[value(name = "lz_no")]
    LzNo,
    #[value(name = "lz_e")]
    LzE,
    #[value(name = "lz_end")]
    LzEnd,
    Lex,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::UnknownMeasure(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn family_spec(family: &str, param: Option<u64>) -> CliResult<FamilySpec> {
    let family: FamilyId = family.parse()?;
    let param = match param {
        Some(p) => p,
        None if !family.takes_param() => 0,
        None => return Err(usage(format!("family {family} needs --param"))),
    };
    let spec = FamilySpec::new(family, param);
    spec.validate()?;
    Ok(spec)
}

fn load(source: &SourceArgs) -> CliResult<Text> {
    match (&source.family, &source.input) {
        (Some(f), None) => Ok(generate(&family_spec(f, source.param)?)?),
        (None, Some(path)) => {
            let raw = fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(parse_text(&raw, source.format.map(Format::from))?)
        }
        _ => Err(usage("give exactly one of --family and --input")),
    }
}

fn non_empty(w: Text) -> CliResult<Text> {
    if w.is_empty() {
        Err(Error::EmptyText.into())
    } else {
        Ok(w)
    }
}

fn emit(out: &mut impl Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_gen(
    source: &FamilyArgs,
    format: Option<FormatArg>,
    rev: bool,
    output: Option<&PathBuf>,
) -> CliResult<()> {
    let mut w = generate(&family_spec(&source.family, source.param)?)?;
    if rev {
        w = reverse(&w);
    }
    let format = match format {
        Some(f) => f.into(),
        None if ascii_representable(&w) => Format::Ascii,
        None => Format::Tokens,
    };
    let body = write_text(&w, format)?;
    match output {
        Some(path) => fs::write(path, body)?,
        None => emit(&mut io::stdout().lock(), &body)?,
    }
    Ok(())
}

fn cmd_measure(source: &SourceArgs, measures: &str, rev: bool, budget: u64) -> CliResult<()> {
    let measures = MeasureId::parse_list(measures)?;
    let mut w = non_empty(load(source)?)?;
    if rev {
        w = reverse(&w);
    }
    let opts = MeasureOptions {
        node_budget: budget,
    };
    let mut out = String::new();
    for m in measures {
        let got = compute(&w, m, opts)?;
        out.push_str(&format!("{m}={}", got.value));
        if !got.exact {
            out.push_str(" exact=false");
        }
        out.push('\n');
    }
    emit(&mut io::stdout().lock(), &out)
}

fn cmd_sweep(
    family: &str,
    range: &str,
    measures: &str,
    csv: Option<&PathBuf>,
    budget: u64,
) -> CliResult<()> {
    let measures = MeasureId::parse_list(measures)?;
    let family: FamilyId = family.parse()?;
    let range: ParamRange = range.parse()?;
    let rows = sweep(
        family,
        range,
        &measures,
        MeasureOptions {
            node_budget: budget,
        },
    )?;
    match csv {
        Some(path) => write_csv(&rows, fs::File::create(path)?)?,
        None => write_csv(&rows, io::stdout().lock())?,
    }
    Ok(())
}

fn cmd_verify(
    family: &str,
    range: Option<&str>,
    quick: bool,
    failures_only: bool,
    budget: u64,
) -> CliResult<()> {
    let grid = default_grid(quick);
    let jobs: Vec<(FamilyId, ParamRange)> = if family == "all" {
        if range.is_some() {
            return Err(usage("--range cannot be combined with --family all"));
        }
        grid
    } else {
        let family: FamilyId = family.parse()?;
        let range = match range {
            Some(r) => r.parse()?,
            None => grid
                .iter()
                .find(|(f, _)| *f == family)
                .map(|(_, r)| *r)
                .expect("every family has a grid entry"),
        };
        vec![(family, range)]
    };
    let opts = MeasureOptions {
        node_budget: budget,
    };
    let mut rows: Vec<VerifyRow> = Vec::new();
    for (family, range) in jobs {
        rows.extend(verify(family, range, opts)?);
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    let mut out = String::new();
    for row in rows.iter().filter(|r| !failures_only || !r.pass) {
        out.push_str(&format!("{row}\n"));
    }
    out.push_str(&format!(
        "{} of {} checks passed\n",
        rows.len() - failed,
        rows.len()
    ));
    emit(&mut io::stdout().lock(), &out)?;
    if failed > 0 {
        return Err(Failure {
            code: 4,
            message: format!("{failed} checks failed"),
        });
    }
    Ok(())
}

fn render_parsing(w: &Text, p: &Parsing) -> String {
    let mut out = String::new();
    for (k, ph) in p.phrases.iter().enumerate() {
        let source = match ph.source {
            Source::Literal(_) => "literal".to_string(),
            Source::Copy { from } => format!("copy from {from}"),
        };
        out.push_str(&format!(
            "{:>4} {:>6} {:>6}  {:<16} {}\n",
            k + 1,
            ph.start,
            ph.len,
            source,
            w.slice(ph.start..ph.end())
        ));
    }
    out.push_str(&format!("{}={}\n", p.variant.id(), p.len()));
    out
}

fn cmd_show(source: &SourceArgs, view: View, rev: bool) -> CliResult<()> {
    let mut w = non_empty(load(source)?)?;
    if rev {
        w = reverse(&w);
    }
    if w.len() > SHOW_LIMIT {
        return Err(usage(format!(
            "length {} exceeds the {SHOW_LIMIT}-symbol limit of show; use measure",
            w.len()
        )));
    }
    let out = match view {
        View::Bwt => {
            let mut out = String::new();
            let n = w.len();
            for (rank, (start, row)) in sorted_rotations(&w)?.iter().enumerate() {
                out.push_str(&format!(
                    "{:>4} {:>4}  {} | {}\n",
                    rank,
                    start,
                    row.slice(0..n - 1),
                    row.slice(n - 1..n)
                ));
            }
            let t = bwt(&w)?;
            out.push_str(&format!("bwt: {}\nr={}\n", t.output, t.run_count));
            out
        }
        View::Bbwt => {
            let mut out = String::new();
            for (k, f) in lyndon_factorize(&w)?.iter().enumerate() {
                out.push_str(&format!("factor {:>3}: {f}\n", k + 1));
            }
            let t = bbwt(&w)?;
            out.push_str(&format!("bbwt: {}\nr_b={}\n", t.output, t.run_count));
            out
        }
        View::Lz => render_parsing(&w, &lz_parse(&w)?),
        View::LzNo => render_parsing(&w, &lz_no_overlap(&w)?),
        View::LzE => render_parsing(&w, &lz_end_greedy(&w)?),
        View::LzEnd => {
            let (p, exact) = lz_end_optimal(&w, DEFAULT_NODE_BUDGET)?;
            let mut out = render_parsing(&w, &p);
            if !exact {
                out.push_str("exact=false\n");
            }
            out
        }
        View::Lex => render_parsing(&w, &lex_parse(&w)?),
    };
    emit(&mut io::stdout().lock(), &out)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen {
            source,
            format,
            reverse,
            output,
        } => cmd_gen(&source, format, reverse, output.as_ref()),
        Command::Measure {
            source,
            measures,
            reverse,
            node_budget,
        } => cmd_measure(&source, &measures, reverse, node_budget),
        Command::Sweep {
            family,
            range,
            measures,
            csv,
            node_budget,
        } => cmd_sweep(&family, &range, &measures, csv.as_ref(), node_budget),
        Command::Verify {
            family,
            range,
            quick,
            failures_only,
            node_budget,
        } => cmd_verify(&family, range.as_deref(), quick, failures_only, node_budget),
        Command::Show {
            source,
            view,
            reverse,
        } => cmd_show(&source, view, reverse),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
