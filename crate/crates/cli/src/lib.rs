//! Command-line front end: parses arguments, runs one command and writes a
//! JSON envelope (or a CSV table) to standard output.
//!
//! Exit codes: `0` success, `1` a verification found a genuine failure,
//! `2` usage or argument error.

mod args;
mod payload;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use phitilde::analysis::{self, PropertyId, ValueIndex};
use phitilde::bounds::{q_cardinality, verify_primorial_growth};
use phitilde::phitilde::{enumerate_coprime_nonprimes, phi_tilde, phi_tilde_primorial};
use phitilde::sieve::{build_sieve, SieveTables};
use phitilde::VerificationOutcome;

pub use args::{Cli, Command, Format};
use payload::{
    EnumeratePayload, PreimagePayload, PrimorialGrowthPayload, PrimorialRow, SmallestRow, Tabular,
    ValueListPayload,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Na,
}

#[derive(Debug, Serialize)]
pub struct OutputEnvelope<'a, T: Serialize> {
    pub command: &'a str,
    pub parameters: BTreeMap<&'static str, Value>,
    pub result: &'a T,
    pub status: Status,
}

/// What a command produced, before serialization.
struct Rendered {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    status: Status,
}

fn render<T: Serialize + Tabular>(payload: &T, status: Status) -> Rendered {
    Rendered {
        json: serde_json::to_value(payload).expect("payload serializes"),
        header: payload.header(),
        rows: payload.rows(),
        status,
    }
}

fn status_of(outcomes: &[VerificationOutcome]) -> Status {
    if outcomes.iter().all(|o| o.passed) {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_USAGE;
        }
    };
    let started = Instant::now();
    let computed = pool.install(|| compute(&cli));
    let (limit, rendered) = match computed {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if !cli.quiet {
        let _ = writeln!(
            err,
            "sieve limit {limit}, computed in {:.3}s",
            started.elapsed().as_secs_f64()
        );
    }

    let mut parameters = parameters_of(&cli.command);
    parameters.insert("sieve_limit", json!(cli.sieve_limit));
    let written = match cli.format {
        Format::Json => write_json(out, cli.command.name(), parameters, &rendered),
        Format::Csv => write_csv(out, &rendered),
    };
    match written {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            return EXIT_FAILED;
        }
        Ok(()) => {}
    }
    match rendered.status {
        Status::Fail => EXIT_FAILED,
        Status::Pass | Status::Na => EXIT_OK,
    }
}

fn compute(cli: &Cli) -> phitilde::Result<(u64, Rendered)> {
    let tables = build_sieve(cli.sieve_limit)?;
    Ok((tables.limit(), dispatch(&cli.command, &tables)?))
}

fn parameters_of(command: &Command) -> BTreeMap<&'static str, Value> {
    let mut p = BTreeMap::new();
    match command {
        Command::Value { n } | Command::Enumerate { n } => {
            p.insert("n", json!(n));
        }
        Command::Table { from, to } => {
            p.insert("from", json!(from));
            p.insert("to", json!(to));
        }
        Command::Preimage { k } => {
            p.insert("k", json!(k));
        }
        Command::Smallest { max_k }
        | Command::Missing { max_k }
        | Command::Singletons { max_k }
        | Command::ConjectureScan { max_k } => {
            p.insert("max_k", json!(max_k));
        }
        Command::VerifyPaper => {}
        Command::Props { id, limit } => {
            p.insert("id", json!(id));
            p.insert("limit", json!(limit));
        }
        Command::PrimorialGrowth { max_i } => {
            p.insert("max_i", json!(max_i));
        }
    }
    p
}

fn dispatch(command: &Command, tables: &SieveTables) -> phitilde::Result<Rendered> {
    Ok(match *command {
        Command::Value { n } => render(&phi_tilde(n, tables)?, Status::Na),
        Command::Enumerate { n } => {
            let set = enumerate_coprime_nonprimes(n, tables)?;
            let payload = EnumeratePayload {
                n,
                phi_tilde: set.len() as u64,
                elements: set.elements,
            };
            render(&payload, Status::Na)
        }
        Command::Table { from, to } => {
            if from == 0 || from > to {
                return Err(phitilde::Error::InvalidArgument(format!(
                    "table range must satisfy 1 <= from <= to, got {from}..{to}"
                )));
            }
            tables.check(to)?;
            let rows = (from..=to)
                .map(|n| phi_tilde(n, tables))
                .collect::<phitilde::Result<Vec<_>>>()?;
            render(&rows, Status::Na)
        }
        Command::Preimage { k } => {
            let payload = PreimagePayload::from(analysis::preimage(k, tables)?);
            render(&payload, Status::Na)
        }
        Command::Smallest { max_k } => {
            let index = ValueIndex::build(max_k, tables)?;
            let rows = (1..=max_k)
                .map(|k| {
                    Ok(SmallestRow {
                        k,
                        smallest: index.smallest(k)?,
                        bound: index.certificate(k)?.global_bound,
                    })
                })
                .collect::<phitilde::Result<Vec<_>>>()?;
            render(&rows, Status::Na)
        }
        Command::Missing { max_k } | Command::Singletons { max_k } => {
            let index = ValueIndex::build(max_k, tables)?;
            let values = if matches!(command, Command::Missing { .. }) {
                index.missing()
            } else {
                index.singletons()
            };
            let payload = ValueListPayload {
                max_k,
                scanned_bound: index.scanned_bound(),
                values,
            };
            render(&payload, Status::Na)
        }
        Command::VerifyPaper => {
            let outcomes = analysis::verify_paper_tables(tables)?;
            render(&outcomes, status_of(&outcomes))
        }
        Command::Props { ref id, limit } => {
            let ids: Vec<PropertyId> = if id == "all" {
                PropertyId::ALL.to_vec()
            } else {
                vec![id.parse()?]
            };
            let outcomes = ids
                .into_iter()
                .map(|id| analysis::check_property(id, limit, tables))
                .collect::<phitilde::Result<Vec<_>>>()?;
            render(&outcomes, status_of(&outcomes))
        }
        Command::PrimorialGrowth { max_i } => {
            let outcome = verify_primorial_growth(max_i, tables)?;
            let rows = (1..=max_i)
                .map(|i| {
                    let r = phi_tilde_primorial(i, tables)?;
                    Ok(PrimorialRow {
                        i,
                        primorial: r.n,
                        phi: r.phi,
                        pi: r.pi,
                        phi_tilde: r.phi_tilde,
                        q_cardinality: if i >= 4 {
                            Some(q_cardinality(i, tables)?)
                        } else {
                            None
                        },
                    })
                })
                .collect::<phitilde::Result<Vec<_>>>()?;
            let status = status_of(std::slice::from_ref(&outcome));
            render(
                &PrimorialGrowthPayload {
                    max_i,
                    rows,
                    outcome,
                },
                status,
            )
        }
        Command::ConjectureScan { max_k } => {
            render(&analysis::conjecture_scan(max_k, tables)?, Status::Na)
        }
    })
}

fn write_json(
    out: &mut dyn Write,
    command: &str,
    parameters: BTreeMap<&'static str, Value>,
    rendered: &Rendered,
) -> std::io::Result<()> {
    let envelope = OutputEnvelope {
        command,
        parameters,
        result: &rendered.json,
        status: rendered.status,
    };
    serde_json::to_writer_pretty(&mut *out, &envelope)?;
    writeln!(out)
}

fn write_csv(out: &mut dyn Write, rendered: &Rendered) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&rendered.header)?;
    for row in &rendered.rows {
        w.write_record(row)?;
    }
    w.flush()
}
