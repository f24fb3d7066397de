//! `fragplay` command line: single plays, seeded batches, witness checks and
//! cover reports.
//!
//! Every artifact starts with a header holding the resolved configuration;
//! passing that artifact back through `--config` reproduces it.
//!
//! Exit codes: 0 legal outcome, 2 configuration error, 3 strategy or
//! emulation error, 4 witness or cover violations.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::cloud::{parse_vector, InitSpec};
use crate::error::Error;
use crate::game::{self, run_play, PlayConfig, TraceLine};
use crate::kadec::{self, cover_check_with, kadec_witness_with, verify_witness};
use crate::space::NormSpec;
use crate::strategies::{OmegaKind, SigmaKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_STRATEGY: i32 = 3;
pub const EXIT_VIOLATIONS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "fragplay", version, about = "Fragmentability game simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one play and write its trace.
    Play(PlayArgs),
    /// Run plays with seeds seed..seed+n-1 and write a CSV summary.
    Batch(BatchArgs),
    /// Build and sample-check a Kadec witness at a point.
    KadecWitness(WitnessArgs),
    /// Index points into the countable cover and check each group.
    Cover(CoverArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct PlayArgs {
    /// Key-value config file, or an artifact whose header to replay.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Norm exponent, a real >= 1 or `inf`.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub omega: Option<String>,
    #[arg(long)]
    pub sigma: Option<String>,
    /// Initial set: sphere:<dim>:<n>[:<sep>], ball:<dim>:<n>[:<sep>], face:<n>,
    /// asymptote:<n>, file:<path> or empty.
    #[arg(long)]
    pub init: Option<String>,
    #[arg(long)]
    pub max_rounds: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub stall_bound: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BatchArgs {
    #[command(flatten)]
    pub play: PlayArgs,
    /// Number of plays.
    #[arg(long)]
    pub plays: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct WitnessArgs {
    /// Key-value config file, or an artifact whose header to replay.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Point as `v0,v1,...` or `[[index, value], ...]`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Default 0.5.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Default 2.
    #[arg(long)]
    pub p: Option<String>,
    /// Default 10000.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Default 0.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    /// Key-value config file, or an artifact whose header to replay.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Point source, same syntax as `play --init`. Default ball:2:1000:0.
    #[arg(long)]
    pub points: Option<String>,
    /// Default 0.3.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Default 2.
    #[arg(long)]
    pub p: Option<String>,
    /// Default 0.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Default 1000000.
    #[arg(long)]
    pub k_max: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Play(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => EXIT_CONFIG,
            CliError::Play(_) => EXIT_STRATEGY,
        }
    }
}

fn config_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

/// Fully resolved settings for `play` and `batch`.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub spec: NormSpec,
    pub omega: OmegaKind,
    pub sigma: SigmaKind,
    pub init: InitSpec,
    pub max_rounds: usize,
    pub tol: f64,
    pub stall_bound: f64,
    pub seed: u64,
    pub plays: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            spec: NormSpec::euclidean(),
            omega: OmegaKind::Rotund,
            sigma: SigmaKind::Identity,
            init: InitSpec::Sphere {
                dim: 8,
                n: 32,
                sep: crate::cloud::DEFAULT_SEPARATION,
            },
            max_rounds: game::DEFAULT_MAX_ROUNDS,
            tol: game::DEFAULT_TOL,
            stall_bound: game::DEFAULT_STALL_BOUND,
            seed: 0,
            plays: 1,
        }
    }
}

const KEYS: [&str; 9] = [
    "p",
    "omega",
    "sigma",
    "init",
    "max_rounds",
    "tol",
    "stall_bound",
    "seed",
    "plays",
];

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        let num_err = |e: &dyn std::fmt::Display| CliError::Config(format!("{key} = {value}: {e}"));
        match key {
            "p" => self.spec = value.parse().map_err(config_err)?,
            "omega" => self.omega = value.parse().map_err(config_err)?,
            "sigma" => self.sigma = value.parse().map_err(config_err)?,
            "init" => self.init = value.parse().map_err(config_err)?,
            "max_rounds" => self.max_rounds = value.parse().map_err(|e| num_err(&e))?,
            "tol" => self.tol = value.parse().map_err(|e| num_err(&e))?,
            "stall_bound" => self.stall_bound = value.parse().map_err(|e| num_err(&e))?,
            "seed" => self.seed = value.parse().map_err(|e| num_err(&e))?,
            "plays" => self.plays = value.parse().map_err(|e| num_err(&e))?,
            other => return Err(CliError::Config(format!("unknown config key '{other}'"))),
        }
        Ok(())
    }

    /// Defaults, then the config file, then explicit flags.
    pub fn resolve(args: &PlayArgs, plays: Option<usize>) -> Result<Self, CliError> {
        let mut config = RunConfig::default();
        if let Some(path) = &args.config {
            for (k, v) in read_config_file(path, &KEYS)? {
                config.set(&k, &v)?;
            }
        }
        let flags: [(&str, Option<String>); 9] = [
            ("p", args.p.clone()),
            ("omega", args.omega.clone()),
            ("sigma", args.sigma.clone()),
            ("init", args.init.clone()),
            ("max_rounds", args.max_rounds.map(|v| v.to_string())),
            ("tol", args.tol.map(|v| v.to_string())),
            ("stall_bound", args.stall_bound.map(|v| v.to_string())),
            ("seed", args.seed.map(|v| v.to_string())),
            ("plays", plays.map(|v| v.to_string())),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                config.set(k, &v)?;
            }
        }
        Ok(config)
    }

    pub fn play_config(&self, seed: u64) -> PlayConfig {
        PlayConfig {
            spec: self.spec,
            omega: self.omega,
            sigma: self.sigma.clone(),
            max_rounds: self.max_rounds,
            tol: self.tol,
            stall_bound: self.stall_bound,
            rng_seed: seed,
        }
    }

    /// The header map; every value is the string that `set` parses back.
    pub fn header(&self, command: &str) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("command".into(), command.into());
        m.insert("p".into(), self.spec.to_string().into());
        m.insert("omega".into(), self.omega.to_string().into());
        m.insert("sigma".into(), self.sigma.to_string().into());
        m.insert("init".into(), self.init.to_string().into());
        m.insert("max_rounds".into(), self.max_rounds.to_string().into());
        m.insert("tol".into(), self.tol.to_string().into());
        m.insert("stall_bound".into(), self.stall_bound.to_string().into());
        m.insert("seed".into(), self.seed.to_string().into());
        if command == "batch" {
            m.insert("plays".into(), self.plays.to_string().into());
        }
        m
    }
}

/// Reads `key = value` lines, a play trace (JSON header on the first line),
/// or a batch summary (`# config: {...}` first line).
pub fn read_config_file(path: &Path, keys: &[&str]) -> Result<Vec<(String, String)>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let header = if first.starts_with('{') {
        Some(first)
    } else {
        first.strip_prefix("# config:").map(str::trim)
    };
    if let Some(json) = header {
        let map: Map<String, Value> = match serde_json::from_str::<TraceLine>(json) {
            Ok(TraceLine::Header { config }) => config,
            Ok(_) => return Err(CliError::Config("first trace line is not a header".into())),
            Err(_) => serde_json::from_str(json).map_err(config_err)?,
        };
        let mut pairs = Vec::new();
        for (k, v) in map.into_iter().filter(|(k, _)| k != "command") {
            if !keys.contains(&k.as_str()) {
                return Err(CliError::Config(format!("unknown config key '{k}'")));
            }
            let v = match v {
                Value::String(s) => s,
                other => other.to_string(),
            };
            pairs.push((k, v));
        }
        return Ok(pairs);
    }
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", lineno + 1)))?;
        let k = k.trim();
        if !keys.contains(&k) {
            return Err(CliError::Config(format!("unknown config key '{k}'")));
        }
        pairs.push((k.to_string(), v.trim().to_string()));
    }
    Ok(pairs)
}

/// Defaults, then the config file, then explicit flags.
fn layered(
    config: &Option<PathBuf>,
    defaults: &[(&str, &str)],
    flags: Vec<(&str, Option<String>)>,
) -> Result<BTreeMap<String, String>, CliError> {
    let keys: Vec<&str> = defaults.iter().map(|(k, _)| *k).collect();
    let mut m: BTreeMap<String, String> = defaults.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    if let Some(path) = config {
        m.extend(read_config_file(path, &keys)?);
    }
    m.extend(flags.into_iter().filter_map(|(k, v)| Some((k.to_string(), v?))));
    Ok(m)
}

fn field<T: std::str::FromStr>(m: &BTreeMap<String, String>, key: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    let raw = &m[key];
    if raw.is_empty() {
        return Err(CliError::Config(format!("missing value for {key}")));
    }
    raw.parse().map_err(|e| CliError::Config(format!("{key} = {raw}: {e}")))
}

fn header_line(command: &str, m: &BTreeMap<String, String>) -> Value {
    let mut config = Map::new();
    config.insert("command".into(), command.into());
    config.extend(m.iter().map(|(k, v)| (k.clone(), Value::from(v.as_str()))));
    json!({"kind": "header", "config": config})
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json_line<W: Write + ?Sized>(out: &mut W, value: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

pub fn cmd_play(args: &PlayArgs) -> Result<i32, CliError> {
    let config = RunConfig::resolve(args, None)?;
    let initial = config.init.generate(config.spec, config.seed).map_err(config_err)?;
    let result = run_play(&config.play_config(config.seed), &initial)?;
    let mut out = open_out(&args.out)?;
    game::write_trace(&mut out, &config.header("play"), &result)?;
    out.flush()?;
    Ok(EXIT_OK)
}

/// One CSV summary row per play.
#[derive(Clone, Debug, PartialEq)]
pub struct BatchRow {
    pub seed: u64,
    pub rounds: Option<usize>,
    pub outcome: Result<game::Outcome, String>,
    pub final_diameter: Option<f64>,
}

pub fn run_batch(config: &RunConfig) -> Vec<BatchRow> {
    (0..config.plays as u64)
        .map(|i| {
            let seed = config.seed.wrapping_add(i);
            let played = config
                .init
                .generate(config.spec, seed)
                .and_then(|initial| run_play(&config.play_config(seed), &initial));
            match played {
                Ok(r) => BatchRow {
                    seed,
                    rounds: Some(r.verdict.rounds_played),
                    outcome: Ok(r.verdict.outcome),
                    final_diameter: Some(r.verdict.final_diameter),
                },
                Err(e) => BatchRow {
                    seed,
                    rounds: None,
                    outcome: Err(e.to_string()),
                    final_diameter: None,
                },
            }
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn cmd_batch(args: &BatchArgs) -> Result<i32, CliError> {
    let config = RunConfig::resolve(&args.play, args.plays)?;
    let rows = run_batch(&config);
    let mut out = open_out(&args.play.out)?;
    writeln!(out, "# config: {}", Value::Object(config.header("batch")))?;
    writeln!(out, "seed,omega,sigma,rounds,outcome,final_diameter,error")?;
    let mut failed = false;
    for row in &rows {
        let (outcome, error) = match &row.outcome {
            Ok(o) => (format!("{o:?}"), String::new()),
            Err(e) => {
                failed = true;
                ("Error".to_string(), e.clone())
            }
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.seed,
            config.omega,
            csv_field(&config.sigma.to_string()),
            row.rounds.map(|r| r.to_string()).unwrap_or_default(),
            outcome,
            row.final_diameter.map(|d| d.to_string()).unwrap_or_default(),
            csv_field(&error)
        )?;
    }
    out.flush()?;
    Ok(if failed { EXIT_STRATEGY } else { EXIT_OK })
}

pub fn cmd_kadec_witness(args: &WitnessArgs) -> Result<i32, CliError> {
    let m = layered(
        &args.config,
        &[("x", ""), ("epsilon", "0.5"), ("p", "2"), ("samples", "10000"), ("seed", "0")],
        vec![
            ("x", args.x.clone()),
            ("epsilon", args.epsilon.map(|v| v.to_string())),
            ("p", args.p.clone()),
            ("samples", args.samples.map(|v| v.to_string())),
            ("seed", args.seed.map(|v| v.to_string())),
        ],
    )?;
    let spec: NormSpec = field(&m, "p")?;
    let x = parse_vector(&field::<String>(&m, "x")?).map_err(config_err)?;
    let epsilon: f64 = field(&m, "epsilon")?;
    let samples: usize = field(&m, "samples")?;
    let seed: u64 = field(&m, "seed")?;
    let header = header_line("kadec-witness", &m);
    let wit = kadec_witness_with(&x, epsilon, spec, kadec::DEFAULT_SLICE_SAMPLES, seed)?;
    let check = verify_witness(&wit, spec, samples, seed.wrapping_add(1));
    let mut out = open_out(&args.out)?;
    write_json_line(&mut out, &header)?;
    let mut wit_line = serde_json::to_value(&wit).map_err(io::Error::from)?;
    wit_line["kind"] = "witness".into();
    write_json_line(&mut out, &wit_line)?;
    let mut check_line = serde_json::to_value(&check).map_err(io::Error::from)?;
    check_line["kind"] = "verification".into();
    write_json_line(&mut out, &check_line)?;
    out.flush()?;
    Ok(if check.violations == 0 { EXIT_OK } else { EXIT_VIOLATIONS })
}

pub fn cmd_cover(args: &CoverArgs) -> Result<i32, CliError> {
    let k_max_default = kadec::DEFAULT_K_MAX.to_string();
    let m = layered(
        &args.config,
        &[
            ("points", "ball:2:1000:0"),
            ("epsilon", "0.3"),
            ("p", "2"),
            ("seed", "0"),
            ("k_max", &k_max_default),
        ],
        vec![
            ("points", args.points.clone()),
            ("epsilon", args.epsilon.map(|v| v.to_string())),
            ("p", args.p.clone()),
            ("seed", args.seed.map(|v| v.to_string())),
            ("k_max", args.k_max.map(|v| v.to_string())),
        ],
    )?;
    let spec: NormSpec = field(&m, "p")?;
    let source: InitSpec = field(&m, "points")?;
    let epsilon: f64 = field(&m, "epsilon")?;
    let seed: u64 = field(&m, "seed")?;
    let k_max: u64 = field(&m, "k_max")?;
    let points = source.generate(spec, seed).map_err(config_err)?.into_points();
    let report = cover_check_with(&points, epsilon, spec, k_max, seed);
    let mut out = open_out(&args.out)?;
    write_json_line(&mut out, &header_line("cover", &m))?;
    for (cell, size) in &report.groups {
        write_json_line(&mut out, &json!({"kind": "group", "k": cell.k, "n": cell.n, "size": size}))?;
    }
    for (i, reason) in &report.unindexed {
        write_json_line(&mut out, &json!({"kind": "unindexed", "point": i, "error": reason}))?;
    }
    let histogram: BTreeMap<usize, usize> = report.groups.values().fold(BTreeMap::new(), |mut h, &s| {
        *h.entry(s).or_default() += 1;
        h
    });
    write_json_line(
        &mut out,
        &json!({
            "kind": "summary",
            "points": points.len(),
            "groups": report.group_count(),
            "group_size_histogram": histogram,
            "pairs_checked": report.pairs_checked,
            "violations": report.violations,
            "implication_failures": report.implication_failures,
            "unindexed": report.unindexed.len(),
        }),
    )?;
    out.flush()?;
    Ok(if report.violations > 0 || report.implication_failures > 0 {
        EXIT_VIOLATIONS
    } else if !report.unindexed.is_empty() {
        EXIT_STRATEGY
    } else {
        EXIT_OK
    })
}

pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Play(a) => cmd_play(a),
        Command::Batch(a) => cmd_batch(a),
        Command::KadecWitness(a) => cmd_kadec_witness(a),
        Command::Cover(a) => cmd_cover(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    run(&Cli::parse())
}
