//! Command-line front end for `cubesum-core`.
//!
//! Every subcommand prints either plain text or, with `--json`, one JSON
//! object per line. Exit codes: 0 on success, 1 when the answer is a
//! mathematical negative (not representable, failed check, density
//! mismatch), 2 on usage or limit errors.

use std::io::Write;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use cubesum_core::classify::{self, table};
use cubesum_core::{
    verify, Error, Modulus, Oracle, RepresentPlan, Representation, DEFAULT_ORACLE_BOUND,
};
use rayon::prelude::*;

pub mod record;

use record::{DensityRecord, OutputRecord};

#[derive(Parser, Debug)]
#[command(name = "cubesum", version, about = "Sums of two cubes modulo N")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GlobalOpts {
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest modulus enumerated exhaustively.
    #[arg(long, global = true, env = "CUBESUM_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the residues mod N that are sums of two cubes.
    Residues {
        modulus: u64,
        /// Print the minimal witness (u,v) next to each residue.
        #[arg(long)]
        witness: bool,
    },
    /// Exact and predicted density of sums of two cubes mod N.
    Density { modulus: u64 },
    /// Find u, v with u³ + v³ ≡ n (mod N).
    Represent { residue: u64, modulus: u64 },
    /// Check whether u³ + v³ ≡ n (mod N).
    Check {
        residue: u64,
        u: u64,
        v: u64,
        modulus: u64,
    },
    /// Print the congruence table for base 7, 9 or 63.
    Table { base: u64 },
    /// Compare exact and predicted density for every N in [1, max].
    Scan {
        #[arg(long)]
        max: u64,
    },
}

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Negative = 1,
}

/// Runs one command, writing results to `out`. `Err` means a usage or
/// limit error (exit code 2).
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<Status> {
    let mut printer = Printer {
        json: cli.global.json,
        out,
    };
    let oracle = Oracle::new(cli.global.oracle_bound);
    match cli.command {
        Command::Residues { modulus, witness } => residues(&mut printer, &oracle, modulus, witness),
        Command::Density { modulus } => density(&mut printer, &oracle, modulus),
        Command::Represent { residue, modulus } => {
            represent(&mut printer, &oracle, residue, modulus)
        }
        Command::Check {
            residue,
            u,
            v,
            modulus,
        } => check(&mut printer, residue, u, v, modulus),
        Command::Table { base } => print_table(&mut printer, base),
        Command::Scan { max } => scan(&mut printer, &oracle, max),
    }
}

/// Confirms the compiled-in congruence tables against exhaustive search.
pub fn self_check() -> anyhow::Result<()> {
    classify::validate_tables(&Oracle::default()).context("startup table validation")
}

struct Printer<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Printer<'_> {
    fn emit(&mut self, record: &OutputRecord) -> anyhow::Result<()> {
        if self.json {
            serde_json::to_writer(&mut *self.out, record)?;
            writeln!(self.out)?;
        } else {
            writeln!(self.out, "{}", record.text())?;
        }
        Ok(())
    }
}

fn modulus(value: u64) -> anyhow::Result<Modulus> {
    Modulus::new(value).map_err(anyhow::Error::from)
}

fn residues(p: &mut Printer, oracle: &Oracle, n: u64, witness: bool) -> anyhow::Result<Status> {
    let set = oracle.representable_set(modulus(n)?)?;
    let witnesses = witness.then(|| set.iter().map(|(_, w)| w).collect());
    p.emit(&OutputRecord::Residues {
        modulus: n,
        members: set.members().to_vec(),
        witnesses,
    })?;
    Ok(Status::Success)
}

fn density(p: &mut Printer, oracle: &Oracle, n: u64) -> anyhow::Result<Status> {
    let report = oracle.exact_density(modulus(n)?)?;
    p.emit(&OutputRecord::Density(DensityRecord::from(report)))?;
    Ok(Status::Success)
}

fn represent(p: &mut Printer, oracle: &Oracle, residue: u64, n: u64) -> anyhow::Result<Status> {
    let n = modulus(n)?;
    n.residue(residue)?;
    let plan = RepresentPlan::new(n, oracle)?;
    match plan.represent(residue) {
        Ok(rep) => {
            if !verify(&rep) {
                bail!("internal error: witness {rep:?} does not verify");
            }
            p.emit(&OutputRecord::represented(rep))?;
            Ok(Status::Success)
        }
        Err(Error::NotRepresentable {
            residue: part_residue,
            modulus: part,
        }) => {
            let admissible = plan
                .part_sets()
                .find(|s| s.modulus().get() == part)
                .map(|s| s.members().to_vec())
                .unwrap_or_default();
            p.emit(&OutputRecord::NotRepresentable {
                modulus: n.get(),
                n: residue,
                representable: false,
                failing_modulus: part,
                failing_residue: part_residue,
                admissible,
            })?;
            Ok(Status::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn check(p: &mut Printer, residue: u64, u: u64, v: u64, n: u64) -> anyhow::Result<Status> {
    let rep = Representation::new(modulus(n)?, residue, u, v)?;
    let ok = verify(&rep);
    p.emit(&OutputRecord::Verification {
        modulus: n,
        n: residue,
        u,
        v,
        ok,
    })?;
    Ok(if ok {
        Status::Success
    } else {
        Status::Negative
    })
}

fn print_table(p: &mut Printer, base: u64) -> anyhow::Result<Status> {
    let Some(t) = table(base) else {
        bail!("no congruence table for base {base}; expected 7, 9 or 63");
    };
    p.emit(&OutputRecord::Table {
        base,
        admissible: t.admissible.to_vec(),
    })?;
    Ok(Status::Success)
}

fn scan(p: &mut Printer, oracle: &Oracle, max: u64) -> anyhow::Result<Status> {
    if max == 0 {
        bail!("--max must be at least 1");
    }
    oracle.check(modulus(max)?)?;
    let rows = (1..=max)
        .into_par_iter()
        .map(|n| {
            oracle
                .exact_density(modulus(n)?)
                .map_err(anyhow::Error::from)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut mismatches = 0;
    for report in rows {
        mismatches += u64::from(!report.matches);
        p.emit(&OutputRecord::ScanRow(DensityRecord::from(report)))?;
    }
    p.emit(&OutputRecord::ScanSummary {
        rows: max,
        mismatches,
    })?;
    Ok(if mismatches == 0 {
        Status::Success
    } else {
        Status::Negative
    })
}
