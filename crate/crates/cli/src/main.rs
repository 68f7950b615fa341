use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use sccore::enumeration::{iter_paths, path_count, sc_tally, DEFAULT_PATH_BUDGET};
use sccore::identities::{check_identities, IdentityRow};
use sccore::oracle::{brute_force_all_cores, DEFAULT_ORACLE_BUDGET};
use sccore::verify::{sweep, verify_pair, VerifyReport};
use sccore::{
    CoreArray, CoreParams, CoreStats, EnumerationOptions, Error, LatticePath, Partition,
    VerifyOptions,
};

/// Self-conjugate (s,t)-cores through their lattice-path encoding.
///
/// All numbers are exact; averages are printed as numerator/denominator.
#[derive(Parser, Debug)]
#[command(name = "sccore", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// First parameter, at least 2
    #[arg(long, global = true)]
    s: Option<u64>,

    /// Second parameter, coprime to --s
    #[arg(long, global = true)]
    t: Option<u64>,

    /// Box rows (identities: upper bound).
    #[arg(long, global = true)]
    m: Option<usize>,

    /// Box columns (identities: upper bound).
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Lattice path as a JSON array mu, a JSON object {"m","n","mu"}, or a U/R word.
    #[arg(long, global = true)]
    path: Option<String>,

    /// Partition as a JSON array, e.g. [7,5,5,3,3,1,1].
    #[arg(long, global = true)]
    partition: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest t for `sweep`.
    #[arg(long, global = true)]
    max: Option<u64>,

    /// Path budget for enumeration (default 10000000) or node budget for
    /// `bruteforce` (default 5000000).
    #[arg(long, global = true)]
    budget: Option<u128>,

    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    parallel: Toggle,

    /// Write to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Count, total size, average and maximum size of SC(s,t).
    Stats,
    /// List every path with its core.
    Enumerate,
    /// Map a lattice path to its self-conjugate core.
    Map,
    /// Map a self-conjugate core back to its lattice path.
    Unmap,
    /// The largest (s,t)-core.
    Largest,
    /// Check every formula for one pair.
    Verify,
    /// Verify all coprime pairs 2 <= s < t <= --max.
    Sweep,
    /// Check the path-counting identities for all boxes up to --m x --n.
    Identities,
    /// Brute-force search for the cores from hook lengths.
    Bruteforce,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, cmd: Command) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{cmd:?} requires --{flag}").to_lowercase()))
}

impl Cli {
    fn params(&self) -> Result<CoreParams, Failure> {
        let s = need(self.s, "s", self.command)?;
        let t = need(self.t, "t", self.command)?;
        Ok(CoreParams::new(s, t)?)
    }

    fn enumeration(&self, m: usize, n: usize) -> Result<EnumerationOptions, Failure> {
        let budget = self.budget.unwrap_or(DEFAULT_PATH_BUDGET);
        if budget > DEFAULT_PATH_BUDGET {
            eprintln!("expected paths: {}", path_count(m, n));
        }
        Ok(EnumerationOptions {
            budget,
            parallel: self.parallel == Toggle::On,
        })
    }

    fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn run(cli: &Cli) -> Outcome {
    // flags are validated before any output file is created
    match cli.command {
        Command::Stats
        | Command::Enumerate
        | Command::Largest
        | Command::Verify
        | Command::Bruteforce => {
            cli.params()?;
        }
        Command::Map => {
            cli.params()?;
            need(cli.path.as_deref(), "path", cli.command)?;
        }
        Command::Unmap => {
            cli.params()?;
            need(cli.partition.as_deref(), "partition", cli.command)?;
        }
        Command::Sweep => {
            need(cli.max, "max", cli.command)?;
        }
        Command::Identities => {
            need(cli.m, "m", cli.command)?;
            need(cli.n, "n", cli.command)?;
        }
    }
    let mut out = cli.writer()?;
    let pass = match cli.command {
        Command::Stats => stats(cli, &mut out)?,
        Command::Enumerate => enumerate(cli, &mut out)?,
        Command::Map => map(cli, &mut out)?,
        Command::Unmap => unmap(cli, &mut out)?,
        Command::Largest => largest(cli, &mut out)?,
        Command::Verify => verify(cli, &mut out)?,
        Command::Sweep => sweep_pairs(cli, &mut out)?,
        Command::Identities => identities(cli, &mut out)?,
        Command::Bruteforce => bruteforce(cli, &mut out)?,
    };
    out.flush()?;
    Ok(pass)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct StatsOut<'a> {
    #[serde(flatten)]
    stats: &'a CoreStats,
    s: u64,
    t: u64,
}

fn stats(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let opts = cli.enumeration(params.m(), params.n())?;
    let stats = CoreStats::from(&sc_tally(&params, &opts)?);
    let avg = &stats.average_size;
    match cli.format {
        Format::Json => json_line(
            out,
            &StatsOut {
                stats: &stats,
                s: params.s(),
                t: params.t(),
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["s", "t", "count", "total", "avg_num", "avg_den", "max"])?;
            w.write_record([
                params.s().to_string(),
                params.t().to_string(),
                stats.count.to_string(),
                stats.total_size.to_string(),
                avg.numer().to_string(),
                avg.denom().to_string(),
                stats.max_size.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "SC({},{})", params.s(), params.t())?;
            writeln!(out, "count    {}", stats.count)?;
            writeln!(out, "total    {}", stats.total_size)?;
            writeln!(out, "average  {}/{}", avg.numer(), avg.denom())?;
            writeln!(out, "max      {}", stats.max_size)?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct PathImage {
    mu: Partition,
    word: String,
    partition: Partition,
    size: usize,
}

fn enumerate(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let opts = cli.enumeration(params.m(), params.n())?;
    let needed = path_count(params.m(), params.n());
    if needed > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded {
            what: "enumeration",
            required: format!("{needed} paths"),
            budget: opts.budget.to_string(),
        }
        .into());
    }
    let array = CoreArray::new(params);
    let images = iter_paths(params.m(), params.n())?.map(|path| {
        let partition = array.phi(&path).expect("box matches");
        PathImage {
            word: path.word(),
            size: partition.size(),
            mu: path.mu().clone(),
            partition,
        }
    });
    match cli.format {
        Format::Json => {
            let all: Vec<PathImage> = images.collect();
            json_line(out, &all)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mu", "word", "partition", "size"])?;
            for img in images {
                w.write_record([
                    serde_json::to_string(&img.mu)?,
                    img.word,
                    serde_json::to_string(&img.partition)?,
                    img.size.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for img in images {
                writeln!(
                    out,
                    "{}  mu={}  ->  {}  size {}",
                    img.word, img.mu, img.partition, img.size
                )?;
            }
        }
    }
    Ok(true)
}

fn parse_path(input: &str, params: &CoreParams) -> Result<LatticePath, Failure> {
    let (m, n) = (params.m(), params.n());
    let input = input.trim();
    let bad = |e: serde_json::Error| Failure::Usage(format!("malformed path {input:?}: {e}"));
    let path = if input.starts_with('[') {
        let mu: Partition = serde_json::from_str(input).map_err(bad)?;
        LatticePath::new(m, n, mu)?
    } else if input.starts_with('{') {
        serde_json::from_str(input).map_err(bad)?
    } else {
        LatticePath::from_word(input, m, n)?
    };
    if (path.m(), path.n()) != (m, n) {
        return Err(Error::BoxMismatch {
            m,
            n,
            found_m: path.m(),
            found_n: path.n(),
        }
        .into());
    }
    Ok(path)
}

fn parse_partition(input: &str) -> Result<Partition, Failure> {
    serde_json::from_str(input.trim())
        .map_err(|e| Failure::Usage(format!("malformed partition {input:?}: {e}")))
}

fn terminal_width() -> usize {
    std::env::var("COLUMNS")
        .ok()
        .and_then(|c| c.parse().ok())
        .unwrap_or(80)
}

/// The array with cells above the path marked `^` and entries of M_A marked `*`.
fn overlay(array: &CoreArray, path: &LatticePath) -> Option<String> {
    let width = array
        .entries()
        .map(|(_, _, v)| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut lines = Vec::new();
    for i in 1..=array.params().m() {
        let cells: Vec<String> = array
            .row(i)
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let above = if path.is_above(i, j + 1) { '^' } else { ' ' };
                let hook = if (v > 0) != path.is_above(i, j + 1) {
                    '*'
                } else {
                    ' '
                };
                format!("{above}{v:>width$}{hook}")
            })
            .collect();
        lines.push(cells.join(" "));
    }
    if lines.iter().any(|l| l.chars().count() > terminal_width()) {
        return None;
    }
    lines.push("(^ above the path, * diagonal hook)".to_string());
    Some(lines.join("\n"))
}

#[derive(Serialize)]
struct MapOut<'a> {
    path: &'a LatticePath,
    word: String,
    partition: &'a Partition,
    hooks: Vec<u64>,
    size: usize,
}

fn map(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let path = parse_path(cli.path.as_deref().unwrap_or_default(), &params)?;
    let array = CoreArray::new(params);
    let partition = array.phi(&path)?;
    let hooks = array.m_a(&path)?.hooks().to_vec();
    match cli.format {
        Format::Json => json_line(
            out,
            &MapOut {
                path: &path,
                word: path.word(),
                partition: &partition,
                hooks,
                size: partition.size(),
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mu", "word", "partition", "hooks", "size"])?;
            w.write_record([
                serde_json::to_string(path.mu())?,
                path.word(),
                serde_json::to_string(&partition)?,
                serde_json::to_string(&hooks)?,
                partition.size().to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "path       {}  ({})",
                serde_json::to_string(path.mu())?,
                path.word()
            )?;
            writeln!(out, "partition  {}", serde_json::to_string(&partition)?)?;
            writeln!(out, "hooks      {}", serde_json::to_string(&hooks)?)?;
            writeln!(out, "size       {}", partition.size())?;
            match overlay(&array, &path) {
                Some(grid) => writeln!(out, "\n{grid}")?,
                None => writeln!(
                    out,
                    "\narray rows {:?}",
                    (1..=params.m()).map(|i| array.row(i)).collect::<Vec<_>>()
                )?,
            }
            writeln!(out, "\n{}", partition.render_ferrers())?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct UnmapOut<'a> {
    path: &'a LatticePath,
    word: String,
}

fn unmap(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let partition = parse_partition(cli.partition.as_deref().unwrap_or_default())?;
    let path = CoreArray::new(params).phi_inverse(&partition)?;
    match cli.format {
        Format::Json => json_line(
            out,
            &UnmapOut {
                path: &path,
                word: path.word(),
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mu", "word"])?;
            w.write_record([serde_json::to_string(path.mu())?, path.word()])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{}", serde_json::to_string(path.mu())?)?;
            writeln!(out, "{}", path.word())?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct LargestOut<'a> {
    s: u64,
    t: u64,
    partition: &'a Partition,
    hooks: Vec<u64>,
    size: usize,
}

fn largest(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let core = CoreArray::new(params).largest_core();
    let hooks = core.diagonal_hooks()?.hooks().to_vec();
    match cli.format {
        Format::Json => json_line(
            out,
            &LargestOut {
                s: params.s(),
                t: params.t(),
                partition: &core,
                hooks,
                size: core.size(),
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["s", "t", "partition", "hooks", "size"])?;
            w.write_record([
                params.s().to_string(),
                params.t().to_string(),
                serde_json::to_string(&core)?,
                serde_json::to_string(&hooks)?,
                core.size().to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "partition  {}", serde_json::to_string(&core)?)?;
            writeln!(out, "hooks      {}", serde_json::to_string(&hooks)?)?;
            writeln!(out, "size       {}", core.size())?;
            writeln!(out, "\n{}", core.render_ferrers())?;
        }
    }
    Ok(true)
}

fn verify_options(cli: &Cli, m: usize, n: usize) -> Result<VerifyOptions, Failure> {
    Ok(VerifyOptions {
        enumeration: cli.enumeration(m, n)?,
        oracle_budget: Some(DEFAULT_ORACLE_BUDGET),
    })
}

fn write_reports(
    cli: &Cli,
    out: &mut dyn Write,
    reports: &[VerifyReport],
    single: bool,
) -> io::Result<()> {
    match cli.format {
        Format::Json if single => json_line(out, &reports[0])?,
        Format::Json => json_line(out, &reports)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(r.sweep_row())?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in reports {
                let avg = &r.average;
                writeln!(
                    out,
                    "({},{}) count {} total {} average {}/{} max {}",
                    r.s,
                    r.t,
                    r.count,
                    r.total,
                    avg.numer(),
                    avg.denom(),
                    r.max
                )?;
                for c in &r.checks {
                    let mark = if c.pass { "pass" } else { "FAIL" };
                    writeln!(out, "  {mark}  {}  {} = {}", c.name, c.lhs, c.rhs)?;
                }
                if r.oracle_skipped {
                    writeln!(out, "  skip  oracle_set_equality  (oracle budget exceeded)")?;
                }
            }
        }
    }
    Ok(())
}

fn verify(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let report = verify_pair(
        params.s(),
        params.t(),
        &verify_options(cli, params.m(), params.n())?,
    )?;
    if report.oracle_skipped {
        eprintln!("note: brute-force comparison skipped, oracle budget exceeded");
    }
    write_reports(cli, out, std::slice::from_ref(&report), true)?;
    Ok(report.all_pass())
}

fn sweep_pairs(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let max = need(cli.max, "max", cli.command)?;
    let bound = max as usize / 2;
    let reports = sweep(max, &verify_options(cli, bound, bound)?)?;
    write_reports(cli, out, &reports, false)?;
    Ok(reports.iter().all(VerifyReport::all_pass))
}

fn identities(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let (m_max, n_max) = (
        need(cli.m, "m", cli.command)?,
        need(cli.n, "n", cli.command)?,
    );
    let rows = (1..=m_max)
        .flat_map(|m| (1..=n_max).map(move |n| check_identities(m, n)))
        .collect::<Result<Vec<IdentityRow>, Error>>()?;
    match cli.format {
        Format::Json => json_line(out, &rows)?,
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(out);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
    }
    Ok(rows.iter().all(IdentityRow::all_ok))
}

#[derive(Serialize)]
struct BruteOut {
    s: u64,
    t: u64,
    all_cores: usize,
    sc_cores: Vec<Partition>,
}

fn bruteforce(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let params = cli.params()?;
    let budget = match cli.budget {
        Some(b) => u64::try_from(b).map_err(|_| Failure::Usage("--budget too large".into()))?,
        None => DEFAULT_ORACLE_BUDGET,
    };
    let all = brute_force_all_cores(params.s(), params.t(), budget)?;
    let all_cores = all.len();
    let sc_cores: Vec<Partition> = all
        .into_iter()
        .filter(Partition::is_self_conjugate)
        .collect();
    match cli.format {
        Format::Json => json_line(
            out,
            &BruteOut {
                s: params.s(),
                t: params.t(),
                all_cores,
                sc_cores,
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["partition", "size"])?;
            for p in &sc_cores {
                w.write_record([serde_json::to_string(p)?, p.size().to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "({},{})-cores: {all_cores}", params.s(), params.t())?;
            writeln!(out, "self-conjugate: {}", sc_cores.len())?;
            for p in &sc_cores {
                writeln!(out, "  {}  size {}", serde_json::to_string(p)?, p.size())?;
            }
        }
    }
    Ok(true)
}
