//! Command-line front end for `sgbrick`.
//!
//! [`run`] is the whole program minus process setup, so it can be driven from
//! tests with in-memory streams.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgbrick::balanced::{self, Classification};
use sgbrick::brickhunt::{self, IdealSizeCap, RecordFormat, SearchSummary};
use sgbrick::{brick_check, Error, NumericalSemigroup, RelativeIdeal, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "sgbrick",
    version,
    about = "Numerical semigroups, relative ideals and bricks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators, multiplicity, Frobenius number, n(S), symmetry and Apéry set.
    Analyze(Generators),
    /// Minimal generators of S-I and I+(S-I).
    Dual(Pair),
    /// Compare μ(I)·μ(S-I) with μ(I+(S-I)).
    Brick(Pair),
    /// Classify four generators as not balanced, balanced or unitary.
    Classify(Quadruple),
    /// The unitary family {2(2z+1), 5z, 5(z+1), 3(2z+1)} for 3 ≤ z ≤ Z.
    Family(Family),
    /// Lift a 2×2 brick (S,(0,n)) with dual (a1,a3) to <a1,a1+n,a3,a3+n>.
    Lift(Pair),
    /// Exhaustive brick search over ideals (0,u1,...) of bounded semigroups.
    Search(Search),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct Generators {
    /// Semigroup generators.
    #[arg(required = true, value_name = "GEN")]
    gens: Vec<i64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct Pair {
    /// Semigroup generators.
    #[arg(required = true, value_name = "GEN")]
    gens: Vec<i64>,
    /// Ideal generators, after `--`.
    #[arg(last = true, required = true, value_name = "IDEAL")]
    ideal: Vec<i64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct Quadruple {
    #[arg(num_args = 4, required = true, value_names = ["A1", "A2", "A3", "A4"])]
    values: Vec<i64>,
}

#[derive(Debug, Args)]
struct Family {
    #[arg(long, value_name = "Z")]
    z_max: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Line,
    Table,
}

#[derive(Debug, Args)]
struct Search {
    /// Smallest number of minimal generators.
    #[arg(long, default_value_t = 2)]
    t_min: usize,
    /// Largest number of minimal generators.
    #[arg(long, default_value_t = 5)]
    t_max: usize,
    /// Largest generator value.
    #[arg(long, default_value_t = 50)]
    gen_max: i64,
    /// Largest μ(I) tried; defaults to floor(1 + t/2).
    #[arg(long, value_name = "N")]
    ideal_cap: Option<usize>,
    /// Keep only perfect bricks.
    #[arg(long)]
    perfect_only: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Write reports here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and executes the command.
///
/// Returns the process exit status. Diagnostics, including one JSON error
/// line per failure, go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return match out.write_all(rendered.as_bytes()) {
                    Ok(()) => EXIT_OK,
                    Err(_) => EXIT_IO,
                };
            }
            let _ = err.write_all(rendered.as_bytes());
            // First paragraph of clap's message, on one line.
            let message = rendered
                .split("\n\n")
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .split_whitespace()
                .collect::<Vec<_>>()
                .join(" ");
            report(err, "Usage", &message);
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report(err, e.kind(), &e.to_string());
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_VALIDATION,
            }
        }
    }
}

fn report(err: &mut dyn Write, kind: &str, message: &str) {
    let line = serde_json::json!({ "error": kind, "message": message });
    let _ = writeln!(err, "{line}");
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> sgbrick::Result<()> {
    match command {
        Command::Analyze(g) => analyze(&g.gens, out),
        Command::Dual(p) => dual(&p, out),
        Command::Brick(p) => brick(&p, out),
        Command::Classify(q) => classify(&q.values, out),
        Command::Family(f) => family(f.z_max, out),
        Command::Lift(p) => lift(&p, out),
        Command::Search(s) => search(&s, out, err),
    }
}

fn set(values: &[i64]) -> String {
    let items: Vec<String> = values.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(gens: &[i64], out: &mut dyn Write) -> sgbrick::Result<()> {
    let s = NumericalSemigroup::new(gens)?;
    writeln!(out, "S = {s}")?;
    writeln!(out, "embedding dimension: {}", s.embedding_dimension())?;
    writeln!(out, "multiplicity: {}", s.multiplicity())?;
    writeln!(out, "frobenius: {}", s.frobenius())?;
    writeln!(out, "n: {}", s.n_count())?;
    writeln!(out, "genus: {}", s.genus())?;
    writeln!(out, "symmetric: {}", yes_no(s.is_symmetric()))?;
    writeln!(out, "apery: {}", set(&s.apery_set()))?;
    Ok(())
}

fn dual(p: &Pair, out: &mut dyn Write) -> sgbrick::Result<()> {
    let s = NumericalSemigroup::new(&p.gens)?;
    let i = RelativeIdeal::new(&s, &p.ideal)?;
    let j = i.dual()?;
    let sum = i.add(&j)?;
    writeln!(out, "S = {s}")?;
    writeln!(out, "I = {i}  mu = {}", i.mu())?;
    writeln!(out, "S-I = {j}  mu = {}", j.mu())?;
    writeln!(out, "I+(S-I) = {sum}  mu = {}", sum.mu())?;
    Ok(())
}

fn brick(p: &Pair, out: &mut dyn Write) -> sgbrick::Result<()> {
    let s = NumericalSemigroup::new(&p.gens)?;
    let i = RelativeIdeal::new(&s, &p.ideal)?;
    let check = brick_check(&s, &i)?;
    writeln!(out, "S = {s}")?;
    writeln!(out, "I = {i}")?;
    writeln!(out, "S-I = {}", RelativeIdeal::new(&s, &check.dual_gens)?)?;
    writeln!(
        out,
        "I+(S-I) = {}",
        RelativeIdeal::new(&s, &check.sum_gens)?
    )?;
    writeln!(out, "{check}")?;
    Ok(())
}

fn classify(values: &[i64], out: &mut dyn Write) -> sgbrick::Result<()> {
    let c = balanced::classify(values)?;
    let label = match &c {
        Classification::NotBalanced(reason) => {
            writeln!(out, "class: not balanced ({reason})")?;
            return Ok(());
        }
        Classification::Balanced(_) => "balanced",
        Classification::Unitary(_) => "unitary",
    };
    let p = c
        .profile()
        .expect("balanced classification carries a profile");
    let [a1, a2, a3, a4] = p.a;
    let [q1, q2, q3, q4] = p.q;
    writeln!(out, "S = <{a1},{a2},{a3},{a4}>")?;
    writeln!(out, "class: {label}")?;
    writeln!(out, "D = {}, E = {}", p.d, p.e)?;
    writeln!(out, "q = ({q1}, {q2}, {q3}, {q4})")?;
    writeln!(out, "CS = {}, CQ = {}", p.common_sum, p.common_quotient)?;
    writeln!(out, "n = {}", p.shift)?;
    if p.is_unitary() {
        let brick = balanced::canonical_brick(p)?;
        writeln!(out, "g(T) = {}", balanced::frobenius_t(p)?)?;
        writeln!(out, "g(S) = {}", balanced::frobenius_s(p)?)?;
        let [n0, n1] = brick.ideal_gens;
        let [d0, d1] = brick.dual_gens;
        writeln!(out, "canonical brick: I = ({n0},{n1}), S-I = ({d0},{d1})")?;
    }
    Ok(())
}

fn family(z_max: i64, out: &mut dyn Write) -> sgbrick::Result<()> {
    for z in 3..=z_max {
        let Some(quad) = balanced::unitary_family(z) else {
            continue;
        };
        let c = balanced::classify(&quad)?;
        let Classification::Unitary(p) = c else {
            // Members of the family are unitary; anything else is a defect.
            return Err(Error::NotUnitary);
        };
        let brick = balanced::canonical_brick(&p)?;
        let s = p.semigroup()?;
        let i = RelativeIdeal::new(&s, &brick.ideal_gens)?;
        let check = brick_check(&s, &i)?;
        writeln!(
            out,
            "z={z} S={s} I={i} S-I={} g(S)={} {}x{} {}",
            RelativeIdeal::new(&s, &check.dual_gens)?,
            s.frobenius(),
            check.mu_ideal,
            check.mu_dual,
            if check.is_perfect {
                "perfect"
            } else {
                "not perfect"
            },
        )?;
    }
    Ok(())
}

fn lift(p: &Pair, out: &mut dyn Write) -> sgbrick::Result<()> {
    let s = NumericalSemigroup::new(&p.gens)?;
    let i = RelativeIdeal::new(&s, &p.ideal)?;
    let outcome = brickhunt::lift(&s, &i)?;
    let lifted = NumericalSemigroup::new(&outcome.semigroup_gens)?;
    let [q1, q2, q3, q4] = outcome.quadruple;
    writeln!(out, "S = {s}")?;
    writeln!(out, "I = {i}")?;
    writeln!(out, "quadruple: <{q1},{q2},{q3},{q4}>")?;
    writeln!(out, "lifted S = {lifted}")?;
    writeln!(
        out,
        "lifted I = {}",
        RelativeIdeal::new(&lifted, &outcome.ideal_gens)?
    )?;
    writeln!(
        out,
        "lifted S-I = {}",
        RelativeIdeal::new(&lifted, &outcome.check.dual_gens)?
    )?;
    writeln!(out, "{}", outcome.check)?;
    let class = match &outcome.classification {
        Classification::NotBalanced(reason) => format!("not balanced ({reason})"),
        Classification::Balanced(_) => "balanced".to_owned(),
        Classification::Unitary(_) => "unitary".to_owned(),
    };
    writeln!(out, "class: {class}")?;
    Ok(())
}

fn search(args: &Search, out: &mut dyn Write, err: &mut dyn Write) -> sgbrick::Result<()> {
    let config = SearchConfig {
        t_min: args.t_min,
        t_max: args.t_max,
        gen_max: args.gen_max,
        ideal_cap: args
            .ideal_cap
            .map_or(IdealSizeCap::HalfPlusOne, IdealSizeCap::Fixed),
        perfect_only: args.perfect_only,
        worker_count: args.workers,
    };
    config.validate()?;
    // Open the destination first so a bad path fails before the search runs.
    let mut file = match &args.out {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let outcome = brickhunt::search_with_stats(&config)?;

    match file.as_mut() {
        Some(file) => {
            write_payload(&outcome.reports, args.format, file)?;
            file.flush()?;
        }
        None => write_payload(&outcome.reports, args.format, out)?,
    }

    let summary = SearchSummary::from_reports(&outcome.reports);
    writeln!(
        err,
        "searched {} semigroups, {} pairs ({} skipped)",
        outcome.semigroups, outcome.pairs, outcome.skipped_pairs
    )?;
    writeln!(err, "{summary}")?;
    Ok(())
}

fn write_payload(
    reports: &[sgbrick::BrickReport],
    format: OutputFormat,
    out: &mut dyn Write,
) -> sgbrick::Result<()> {
    match format {
        OutputFormat::Human => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            Ok(())
        }
        OutputFormat::Line => brickhunt::write_reports(reports, out, RecordFormat::Line),
        OutputFormat::Table => brickhunt::write_reports(reports, out, RecordFormat::Table),
    }
}

/// Runs against the real process streams.
pub fn main_with_env() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() {
        return EXIT_IO;
    }
    code
}
