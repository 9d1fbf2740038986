//! `kron`: Kronecker coefficient queries, tables and verification sweeps.
//!
//! Exit codes: 0 success, 1 verification mismatch (or another runtime
//! failure), 2 unparseable input, 3 partitions of different sizes.

use clap::{Parser, Subcommand, ValueEnum};
use kronecker_core::{
    compute, enumerate_partitions, sample_alphabets, sample_points, sigma_closed, sweep,
    verify_comultiplication, verify_sergeev_specializations, Error, Family, GammaSource,
    KroneckerResult, Method, Partition, Specialization, SweepReport,
};
use serde::Serialize;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "kron",
    version,
    about = "Exact Kronecker coefficients of the symmetric group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one coefficient γ^λ_{μν}.
    Compute {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        nu: Partition,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Every coefficient of one size within a family, in enumeration order.
    Table {
        #[arg(long = "n", visible_alias = "n-max")]
        n: u32,
        #[arg(long, default_value = "all", value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare the closed forms with the character oracle for all sizes up to n-max.
    Verify {
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value = "all", value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Quick end-to-end check of every component.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SIZE: u8 = 3;

fn exit_for(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(match err {
        Error::Parse(_) | Error::NegativePart(_) => EXIT_PARSE,
        Error::SizeMismatch(_) => EXIT_SIZE,
        _ => EXIT_MISMATCH,
    })
}

#[derive(Serialize)]
struct Record<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    gamma: String,
    provenance: &'static str,
    moves: Vec<String>,
    elapsed_ms: u128,
}

impl<'a> Record<'a> {
    fn new(t: &'a [Partition; 3], r: &KroneckerResult, elapsed_ms: u128) -> Self {
        Record {
            lambda: &t[0],
            mu: &t[1],
            nu: &t[2],
            gamma: r.gamma.to_string(),
            provenance: r.provenance.as_str(),
            moves: r.moves.iter().map(ToString::to_string).collect(),
            elapsed_ms,
        }
    }

    fn csv_row(&self) -> [String; 5] {
        [
            self.lambda.to_string(),
            self.mu.to_string(),
            self.nu.to_string(),
            self.gamma.clone(),
            self.provenance.to_string(),
        ]
    }
}

struct Emitter<W: Write> {
    format: Format,
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
}

impl<W: Write> Emitter<W> {
    fn new(format: Format, out: W) -> io::Result<Self> {
        if format == Format::Csv {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["lambda", "mu", "nu", "gamma", "provenance"])?;
            Ok(Emitter {
                format,
                csv: Some(w),
                out: None,
            })
        } else {
            Ok(Emitter {
                format,
                csv: None,
                out: Some(out),
            })
        }
    }

    fn emit(&mut self, rec: &Record) -> io::Result<()> {
        match (self.format, &mut self.csv, &mut self.out) {
            (Format::Csv, Some(w), _) => Ok(w.write_record(rec.csv_row())?),
            (Format::Json, _, Some(out)) => {
                serde_json::to_writer(&mut *out, rec)?;
                writeln!(out)
            }
            (_, _, Some(out)) => {
                let moves = if rec.moves.is_empty() {
                    "-".to_string()
                } else {
                    rec.moves.join(" ")
                };
                writeln!(
                    out,
                    "lambda={} mu={} nu={} gamma={} provenance={} moves={}",
                    rec.lambda, rec.mu, rec.nu, rec.gamma, rec.provenance, moves
                )
            }
            _ => unreachable!("emitter writer matches its format"),
        }
    }

    fn finish(self) -> io::Result<()> {
        match (self.csv, self.out) {
            (Some(mut w), _) => w.flush(),
            (_, Some(mut out)) => out.flush(),
            _ => Ok(()),
        }
    }
}

fn run_compute(triple: [Partition; 3], method: Method, format: Format) -> ExitCode {
    let start = Instant::now();
    let [l, m, n] = &triple;
    let r = match compute(l, m, n, method) {
        Ok(r) => r,
        Err(e) => return exit_for(&e),
    };
    let rec = Record::new(&triple, &r, start.elapsed().as_millis());
    let stdout = io::stdout().lock();
    let res = Emitter::new(format, stdout).and_then(|mut e| {
        e.emit(&rec)?;
        e.finish()
    });
    io_exit(res)
}

fn run_table(n: u32, family: Family, method: Method, format: Format) -> ExitCode {
    let stdout = io::stdout().lock();
    let mut em = match Emitter::new(format, io::BufWriter::new(stdout)) {
        Ok(e) => e,
        Err(e) => return io_exit(Err(e)),
    };
    for triple in family.triples(n) {
        let start = Instant::now();
        let [l, m, nu] = &triple;
        let r = match compute(l, m, nu, method) {
            Ok(r) => r,
            Err(e) => return exit_for(&e),
        };
        let rec = Record::new(&triple, &r, start.elapsed().as_millis());
        if let Err(e) = em.emit(&rec) {
            return io_exit(Err(e));
        }
    }
    io_exit(em.finish())
}

#[derive(Serialize)]
struct ReportRecord {
    n: u32,
    family: &'static str,
    triples_checked: usize,
    fallbacks: usize,
    mismatches: Vec<String>,
    max_gamma: String,
    elapsed_ms: u128,
}

impl From<&SweepReport> for ReportRecord {
    fn from(r: &SweepReport) -> Self {
        ReportRecord {
            n: r.n,
            family: r.family.as_str(),
            triples_checked: r.triples_checked,
            fallbacks: r.fallbacks,
            mismatches: r.mismatches.iter().map(ToString::to_string).collect(),
            max_gamma: r.max_closed_gamma.to_string(),
            elapsed_ms: r.elapsed_ms,
        }
    }
}

fn run_verify(n_max: u32, family: Family, jobs: usize, format: Format) -> ExitCode {
    if n_max == 0 {
        eprintln!("error: --n-max must be at least 1");
        return ExitCode::from(EXIT_PARSE);
    }
    let mut bad = 0;
    if format == Format::Csv {
        println!("n,family,triples_checked,fallbacks,mismatches,max_gamma,elapsed_ms");
    }
    for n in 1..=n_max {
        let report = match sweep(family, n, jobs) {
            Ok(r) => r,
            Err(e) => return exit_for(&e),
        };
        match format {
            Format::Plain => println!("{report}"),
            Format::Json => println!(
                "{}",
                serde_json::to_string(&ReportRecord::from(&report)).expect("plain data")
            ),
            Format::Csv => println!(
                "{},{},{},{},{},{},{}",
                report.n,
                report.family,
                report.triples_checked,
                report.fallbacks,
                report.mismatches.len(),
                report.max_closed_gamma,
                report.elapsed_ms
            ),
        }
        for m in &report.mismatches {
            eprintln!("mismatch: {m}");
        }
        bad += report.mismatches.len();
    }
    if bad > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn selftest_checks(seed: u64) -> Vec<(&'static str, Result<(), String>)> {
    let sigma = if (sigma_closed(9, 5, 4), sigma_closed(9, 5, 8)) == (9, 19) {
        Ok(())
    } else {
        Err("σ examples".to_string())
    };

    let sweeps = (|| {
        for family in [Family::TwoRowTwoRow, Family::HookHook, Family::HookTwoRow] {
            for n in 1..=8 {
                let r = sweep(family, n, 1).map_err(|e| e.to_string())?;
                if let Some(m) = r.mismatches.first() {
                    return Err(m.to_string());
                }
            }
        }
        Ok(())
    })();

    let comult = (|| {
        for n in 1..=4u32 {
            let x = &sample_alphabets(seed, 1, n as usize)[0];
            let y = &sample_alphabets(seed.wrapping_add(1), 1, n as usize)[0];
            for lambda in enumerate_partitions(n) {
                if !verify_comultiplication(&lambda, x, y, GammaSource::Auto)
                    .map_err(|e| e.to_string())?
                {
                    return Err(format!("comultiplication fails for {lambda:?}"));
                }
            }
        }
        Ok(())
    })();

    let sergeev = (|| {
        let pts = sample_points(seed, 3);
        for n in 2..=8 {
            for which in Specialization::ALL {
                for shape in which.shapes(n) {
                    if !verify_sergeev_specializations(which, &shape, &pts)
                        .map_err(|e| e.to_string())?
                    {
                        return Err(format!("{which} fails for {shape:?}"));
                    }
                }
            }
        }
        Ok(())
    })();

    vec![
        ("lattice counts", sigma),
        ("closed forms vs oracle, n <= 8", sweeps),
        ("comultiplication, n <= 4", comult),
        ("two-variable Schur identities, n <= 8", sergeev),
    ]
}

fn run_selftest(seed: u64) -> ExitCode {
    let mut failed = false;
    for (name, outcome) in selftest_checks(seed) {
        match outcome {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                failed = true;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn io_exit(res: io::Result<()>) -> ExitCode {
    match res {
        Ok(()) => ExitCode::SUCCESS,
        // A closed pipe downstream is not an error for a table stream.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            lambda,
            mu,
            nu,
            method,
            format,
        } => run_compute([lambda, mu, nu], method, format),
        Command::Table {
            n,
            family,
            method,
            format,
        } => run_table(n, family, method, format),
        Command::Verify {
            n_max,
            family,
            jobs,
            format,
        } => run_verify(n_max, family, jobs, format),
        Command::Selftest { seed } => run_selftest(seed),
    }
}
