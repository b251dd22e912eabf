//! Command-line frontend for `z4lcd`: argument parsing, configuration, and
//! text / JSON rendering of every command.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use z4lcd::lcdenum::{count_nsrf, enumerate_lcd_in, lcd_census, DEFAULT_SWEEP_BUDGET};
use z4lcd::oracle::{sweep_verify, DEFAULT_BOUND};
use z4lcd::{CodeSpec, DivisorSet, FactorKind, FactorTable, PairKind, Z4Poly};

pub mod wire;

use wire::*;

/// Exit status for bad arguments or inputs the library rejects.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a consistency check finds a mismatch.
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "z4lcd", version, about = "Cyclic LCD codes over Z4 of odd length")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file with `max_bruteforce` and/or `sweep_budget`.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor X^N-1 over Z4 into basic irreducibles.
    Factor { n: u64 },
    /// Classify (n, 2) as good or bad for every divisor n of N.
    Classify { n: u64 },
    /// Hull size of C = (fg, 2f); h is the complement of f and g.
    Hull {
        n: u64,
        /// Coefficient string such as `3,1` or an id list such as `ids:1,2`.
        #[arg(long = "f", default_value = "1", allow_hyphen_values = true)]
        f: String,
        #[arg(long = "g", default_value = "1", allow_hyphen_values = true)]
        g: String,
    },
    /// List every cyclic LCD code of length N.
    EnumerateLcd { n: u64 },
    /// Count cyclic LCD codes of length N, cross-checked three ways.
    CountLcd { n: u64 },
    /// Check the hull formula against brute force on every partition.
    Verify {
        n: u64,
        /// Raise the brute-force length bound (capped at 13).
        #[arg(long)]
        max_bruteforce: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_bruteforce: Option<u64>,
    pub sweep_budget: Option<u64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] z4lcd::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Input(String),
}

/// Rendered command output and whether a consistency check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub mismatch: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, mismatch: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatch {
            EXIT_MISMATCH
        } else {
            0
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("wire types serialize");
    s.push('\n');
    s
}

fn id_list(d: &DivisorSet) -> String {
    let ids: Vec<String> = d.ids().map(|i| i.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

/// Parses `ids:0,2` or a coefficient string into a divisor set of the table.
pub fn parse_divisor(table: &FactorTable, arg: &str) -> Result<DivisorSet, CliError> {
    if let Some(rest) = arg.trim().strip_prefix("ids:") {
        let set = rest
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| CliError::Input(format!("bad factor id {s:?}"))))
            .collect::<Result<DivisorSet, _>>()?;
        table.check_set(&set)?;
        return Ok(set);
    }
    let poly = Z4Poly::parse(arg)?;
    Ok(table.factor_divisor(&poly)?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let mode = if cli.json { OutputMode::Json } else { OutputMode::Text };
    match &cli.command {
        Command::Factor { n } => cmd_factor(*n, mode),
        Command::Classify { n } => cmd_classify(*n, mode),
        Command::Hull { n, f, g } => cmd_hull(*n, f, g, mode),
        Command::EnumerateLcd { n } => cmd_enumerate_lcd(*n, mode),
        Command::CountLcd { n } => {
            cmd_count_lcd(*n, config.sweep_budget.unwrap_or(DEFAULT_SWEEP_BUDGET), mode)
        }
        Command::Verify { n, max_bruteforce } => {
            let bound = max_bruteforce.or(config.max_bruteforce).unwrap_or(DEFAULT_BOUND);
            cmd_verify(*n, bound, mode)
        }
    }
}

pub fn cmd_factor(n: u64, mode: OutputMode) -> Result<Outcome, CliError> {
    let table = FactorTable::build(n)?;
    if mode == OutputMode::Json {
        return Ok(Outcome::ok(to_json(&FactorTableWire::from(&table))));
    }
    let mut out = String::new();
    let product: String = table.records().iter().map(|r| format!("({})", r.poly)).collect();
    writeln!(out, "{} = {product}", Z4Poly::x_n_minus_one(n as usize)).unwrap();
    let width = table.records().iter().map(|r| r.label().len()).max().unwrap_or(0);
    let sym_width = table.records().iter().map(|r| r.poly.to_symbolic().len()).max().unwrap_or(0);
    for r in table.records() {
        let kind = match r.kind {
            FactorKind::SelfReciprocal => "self-reciprocal".to_string(),
            _ => format!("partner {}", table.records()[r.partner].label()),
        };
        let coset: Vec<String> = r.coset.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{:<width$} = {:<sym_width$}  [{}]  id={} n={} coset={{{}}} {kind}",
            r.label(),
            r.poly.to_symbolic(),
            r.poly.to_text(),
            r.id,
            r.n,
            coset.join(","),
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_classify(n: u64, mode: OutputMode) -> Result<Outcome, CliError> {
    let table = FactorTable::build(n)?;
    let classes = table.pair_classes();
    if mode == OutputMode::Json {
        let wire = ClassifyWire { length: n, divisors: classes.iter().map(PairClassWire::from).collect() };
        return Ok(Outcome::ok(to_json(&wire)));
    }
    let mut out = String::new();
    for c in &classes {
        let tail = match c.kind {
            PairKind::Good => format!("good  gamma={}", c.gamma().unwrap()),
            PairKind::Bad => format!("bad   beta={}", c.beta().unwrap()),
        };
        writeln!(out, "n={:<4} ord={:<4} phi={:<4} {tail}", c.n, c.order2, c.phi).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_hull(n: u64, f: &str, g: &str, mode: OutputMode) -> Result<Outcome, CliError> {
    let table = FactorTable::build(n)?;
    let f = parse_divisor(&table, f)?;
    let g = parse_divisor(&table, g)?;
    let spec = CodeSpec::from_f_g(&table, f, g)?;
    let report = spec.hull_report();
    if mode == OutputMode::Json {
        let wire = HullWire { code: CodeSpecWire::from(&spec), report: HullReportWire::from(&report) };
        return Ok(Outcome::ok(to_json(&wire)));
    }
    let size = report.hull_size().expect("supported lengths fit in u128");
    let mut out = String::new();
    writeln!(out, "N={n} f={} g={} h={}", id_list(spec.f()), id_list(spec.g()), id_list(spec.h())).unwrap();
    writeln!(out, "H = {}  deg {}  ids {}", table.divisor_poly(&report.h_set)?, report.deg_h, id_list(&report.h_set)).unwrap();
    writeln!(out, "G = {}  deg {}  ids {}", table.divisor_poly(&report.g_set)?, report.deg_g, id_list(&report.g_set)).unwrap();
    writeln!(out, "hullSize = 4^{} * 2^{} = {size}", report.deg_h, report.deg_g).unwrap();
    writeln!(out, "{}", if report.lcd { "LCD" } else { "not LCD" }).unwrap();
    Ok(Outcome::ok(out))
}

pub fn cmd_enumerate_lcd(n: u64, mode: OutputMode) -> Result<Outcome, CliError> {
    let table = FactorTable::build(n)?;
    let catalog = enumerate_lcd_in(&table);
    if mode == OutputMode::Json {
        return Ok(Outcome::ok(to_json(&CatalogWire::from(&catalog))));
    }
    let mut out = String::new();
    writeln!(out, "N={n} nsrf={} count={}", catalog.nsrf, catalog.entries.len()).unwrap();
    let width = catalog.entries.iter().map(|e| e.label.len()).max().unwrap_or(0);
    for e in &catalog.entries {
        writeln!(out, "{:<width$}  f={:<10} generator {}", e.label, id_list(&e.f), e.generator).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_count_lcd(n: u64, sweep_budget: u64, mode: OutputMode) -> Result<Outcome, CliError> {
    let nsrf = count_nsrf(n)?;
    let census = lcd_census(n, sweep_budget)?;
    let mismatch = !census.consistent();
    let stdout = if mode == OutputMode::Json {
        to_json(&CountWire::new(n, nsrf, &census))
    } else {
        let swept = census.swept.map_or_else(|| "skipped".to_string(), |s| s.to_string());
        format!(
            "{}\nnsrf={nsrf} enumerated={} swept={swept}\n",
            census.formula, census.enumerated
        )
    };
    Ok(Outcome { stdout, mismatch })
}

pub fn cmd_verify(n: u64, bound: u64, mode: OutputMode) -> Result<Outcome, CliError> {
    let report = sweep_verify(n, bound)?;
    let mismatch = !report.ok();
    let wire = SweepWire::from(&report);
    let stdout = if mode == OutputMode::Json {
        to_json(&wire)
    } else {
        let mut out = format!(
            "N={n}: {} partitions, {} mismatches, {} LCD\n",
            report.partitions,
            report.mismatches.len(),
            report.lcd_count
        );
        for m in &wire.mismatches {
            writeln!(
                out,
                "  mismatch {}: f={:?} g={:?} h={:?} brute force {} vs formula {}",
                m.check, m.spec.f, m.spec.g, m.spec.h, m.expected, m.got
            )
            .unwrap();
        }
        out
    };
    Ok(Outcome { stdout, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_arguments() {
        let t = FactorTable::build(7).unwrap();
        assert_eq!(parse_divisor(&t, "3,1").unwrap(), DivisorSet::from([0]));
        assert_eq!(parse_divisor(&t, "-1,1").unwrap(), DivisorSet::from([0]));
        assert_eq!(parse_divisor(&t, "1").unwrap(), DivisorSet::empty());
        assert_eq!(parse_divisor(&t, "ids:1,2").unwrap(), DivisorSet::from([1, 2]));
        assert_eq!(parse_divisor(&t, "ids:").unwrap(), DivisorSet::empty());
        assert!(matches!(parse_divisor(&t, "ids:7"), Err(CliError::Core(z4lcd::Error::UnknownFactor(7)))));
        assert!(matches!(parse_divisor(&t, "1,1"), Err(CliError::Core(z4lcd::Error::NotADivisor))));
        assert!(parse_divisor(&t, "").is_err());
    }

    #[test]
    fn config_parsing() {
        let c: Config = toml::from_str("max_bruteforce = 11\n").unwrap();
        assert_eq!(c.max_bruteforce, Some(11));
        assert!(toml::from_str::<Config>("other = 1\n").is_err());
    }

    #[test]
    fn overlapping_f_and_g_rejected() {
        let err = cmd_hull(7, "3,1", "3,1", OutputMode::Text).unwrap_err();
        assert!(matches!(err, CliError::Core(z4lcd::Error::InvalidPartition(_))));
    }
}
