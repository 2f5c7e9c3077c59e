//! Runs of (system, algorithm, division) cells and their statistics tables.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::division::{DivisionKind, DivisionSpec};
use crate::engine::{inv_bas_with_stats, Basis, Diagnostics, EngineOptions, InvComp, Stats};
use crate::error::{Error, Result};
use crate::generators::builtin;
use crate::oracles::{is_groebner, is_involutive};
use crate::ordering::OrderKind;
use crate::system::{parse_system, SystemFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    InvComp,
    InvBas,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::InvComp => "invcomp",
            Algorithm::InvBas => "invbas",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "invcomp" => Ok(Algorithm::InvComp),
            "invbas" => Ok(Algorithm::InvBas),
            other => Err(Error::usage(format!("unknown algorithm '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CellResult {
    pub basis: Basis,
    pub stats: Stats,
    /// Present for the signature engine only.
    pub diagnostics: Option<Diagnostics>,
    pub verified: Option<bool>,
}

/// Computes one basis of `sys` and optionally checks it.
pub fn run_cell(
    sys: &SystemFile,
    algorithm: Algorithm,
    division: DivisionKind,
    opts: &EngineOptions,
    verify: bool,
) -> Result<CellResult> {
    let ord = &sys.ordering;
    let div = DivisionSpec::from_name(division.name(), ord.vars())?;
    let (basis, stats, diagnostics) = match algorithm {
        Algorithm::InvComp => {
            let run = InvComp::with_options(&sys.polynomials, &div, ord, opts.clone())?.run();
            (run.basis, run.stats, Some(run.diagnostics))
        }
        Algorithm::InvBas => {
            let (basis, stats) = inv_bas_with_stats(&sys.polynomials, &div, ord)?;
            (basis, stats, None)
        }
    };
    let verified = verify.then(|| is_groebner(&basis, ord) && is_involutive(&basis, &div, ord));
    Ok(CellResult {
        basis,
        stats,
        diagnostics,
        verified,
    })
}

/// Loads a built-in system by name, or a system file when `spec` names an
/// existing path.
pub fn resolve_system(spec: &str) -> Result<SystemFile> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        return parse_system(&text);
    }
    builtin(spec)
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub systems: Vec<String>,
    pub algorithms: Vec<Algorithm>,
    pub divisions: Vec<DivisionKind>,
    /// Overrides each system's own ordering.
    pub order: Option<OrderKind>,
    pub verify: bool,
    pub options: EngineOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            systems: Vec::new(),
            algorithms: vec![Algorithm::InvComp],
            divisions: vec![DivisionKind::Janet],
            order: Some(OrderKind::DegRevLex),
            verify: true,
            options: EngineOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub system: String,
    pub algorithm: String,
    pub division: String,
    pub time_ms: u64,
    pub reds: u64,
    pub c1: u64,
    pub c2: u64,
    pub f5: u64,
    #[serde(rename = "super")]
    pub super_: u64,
    pub polys_loop: u64,
    pub polys_min: u64,
    pub max_deg: u32,
    pub verified: bool,
}

impl BenchRow {
    pub fn new(system: &str, algorithm: Algorithm, division: DivisionKind, stats: &Stats, verified: bool) -> Self {
        BenchRow {
            system: system.to_string(),
            algorithm: algorithm.name().to_string(),
            division: division.name().to_string(),
            time_ms: stats.elapsed_ms,
            reds: stats.reds,
            c1: stats.c1,
            c2: stats.c2,
            f5: stats.f5,
            super_: stats.super_,
            polys_loop: stats.polys_loop,
            polys_min: stats.polys_min,
            max_deg: stats.max_deg,
            verified,
        }
    }
}

/// Runs every cell, in parallel, and returns rows in declaration order:
/// systems outermost, then algorithms, then divisions. All systems are
/// resolved before anything runs. Rows of unverified runs carry
/// `verified = false`.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let systems: Vec<(String, SystemFile)> = config
        .systems
        .iter()
        .map(|name| {
            let sys = resolve_system(name)?;
            let sys = match config.order {
                Some(kind) => sys.with_order(kind),
                None => sys,
            };
            Ok((name.clone(), sys))
        })
        .collect::<Result<_>>()?;
    let mut cells = Vec::new();
    for (name, sys) in &systems {
        for &alg in &config.algorithms {
            for &div in &config.divisions {
                cells.push((name.as_str(), sys, alg, div));
            }
        }
    }
    cells
        .into_par_iter()
        .map(|(name, sys, alg, div)| {
            let res = run_cell(sys, alg, div, &config.options, config.verify)?;
            Ok(BenchRow::new(name, alg, div, &res.stats, res.verified.unwrap_or(false)))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatsFormat {
    Tsv,
    Json,
}

impl FromStr for StatsFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(StatsFormat::Tsv),
            "json" => Ok(StatsFormat::Json),
            other => Err(Error::usage(format!("unknown stats format '{other}'"))),
        }
    }
}

pub const TSV_HEADER: &str =
    "system\talgorithm\tdivision\ttime_ms\treds\tc1\tc2\tf5\tsuper\tpolys_loop\tpolys_min\tmax_deg\tverified";

pub fn format_stats(rows: &[BenchRow], format: StatsFormat) -> String {
    match format {
        StatsFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        StatsFormat::Tsv => {
            let mut out = String::from(TSV_HEADER);
            out.push('\n');
            for r in rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.system,
                    r.algorithm,
                    r.division,
                    r.time_ms,
                    r.reds,
                    r.c1,
                    r.c2,
                    r.f5,
                    r.super_,
                    r.polys_loop,
                    r.polys_min,
                    r.max_deg,
                    r.verified
                )
                .unwrap();
            }
            out
        }
    }
}
