//! Command-line front end. [`run`] parses arguments, writes reports and
//! returns the process exit code:
//!
//! | code | meaning                          |
//! |------|----------------------------------|
//! | 0    | success, every verdict passed    |
//! | 1    | some identity failed its threshold |
//! | 2    | usage error                      |
//! | 3    | computation or cache error       |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::Float;
use serde::Serialize;

use crate::error::ZetaError;
use crate::identities::{verify_all, verify_identity, IdentityId, IdentityReport};
use crate::precision::{digits_agreement, AgreementCount, WorkingPrecision};
use crate::serde_float::to_decimal;
use crate::special::{ConstantName, NamedConstant};
use crate::spectral::secondary_zeta;
use crate::zeros::{
    cache_load, cache_store, compute_zeros_upto, extend_zeros, format_significant, ZeroCache,
};
use crate::zeta::{gram_series, gram_series_mobius};

pub const CACHE_ENV: &str = "ZETAMILL_CACHE";
pub const DEFAULT_CACHE: &str = "zeros.zc";
/// Working precision carries this many digits beyond the requested threshold.
pub const WORKING_EXTRA_DIGITS: u32 = 20;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "zetamill", version, about = "Logarithmic derivatives of ζ at 1/2 against closed forms and zero sums")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Significant digits requested.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,

    /// Number of zeros used by sums over zeros.
    #[arg(long, global = true, default_value_t = 1000)]
    pub zeros: usize,

    /// Zero cache file [default: $ZETAMILL_CACHE or zeros.zc]
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identities: 1..5, all, or general:N.
    Verify {
        #[arg(long, value_parser = parse_selector)]
        id: Selector,
    },
    /// Compute zero ordinates into the cache.
    Zeros(ZerosArgs),
    /// Sum of αₙ⁻ᵏ over zeros, with a density tail.
    Sum {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1e-5)]
        target_error: f64,
    },
    /// Print γ, Catalan's constant, π and log 2.
    Constants,
    /// The Gram series R(x) by two routes.
    Gram {
        #[arg(long)]
        x: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ZerosArgs {
    /// All zeros with ordinate up to T.
    #[arg(long)]
    pub upto: Option<f64>,
    /// The first N zeros.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    One(IdentityId),
    All,
}

fn parse_selector(s: &str) -> Result<Selector, String> {
    if s == "all" {
        return Ok(Selector::All);
    }
    s.parse::<IdentityId>()
        .map(Selector::One)
        .map_err(|e| e.to_string())
}

impl RunConfig {
    pub fn cache_path(&self) -> PathBuf {
        self.cache
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE))
    }

    pub fn working_precision(&self) -> WorkingPrecision {
        WorkingPrecision::new(self.digits + WORKING_EXTRA_DIGITS)
    }
}

/// Failure that maps to exit code 3.
struct Failure(String);

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(format!("output: {e}"))
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&config, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

fn load_cache(config: &RunConfig) -> Result<ZeroCache, Failure> {
    let path = config.cache_path();
    if !path.exists() {
        return Err(Failure(format!(
            "zero cache {} not found; run `zeros` first",
            path.display()
        )));
    }
    cache_load(&path).map_err(|e| Failure(format!("{e}; run `zeros` first to rebuild the cache")))
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    match &config.command {
        Command::Verify { id } => verify(config, *id, out),
        Command::Zeros(args) => zeros(config, args, out),
        Command::Sum { k, target_error } => sum(config, *k, *target_error, out),
        Command::Constants => constants(config, out),
        Command::Gram { x } => gram(config, x, out),
    }
}

fn verify(config: &RunConfig, selector: Selector, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = config.working_precision();
    let needs_cache = match selector {
        Selector::All => true,
        Selector::One(id) => id.needs_zeros(),
    };
    let cache = if needs_cache { Some(load_cache(config)?) } else { None };
    if let Some(c) = &cache {
        if c.len() < config.zeros {
            return Err(Failure(format!(
                "zero cache holds {} zeros, {} requested; run `zeros --count {}` first",
                c.len(),
                config.zeros,
                config.zeros + 1
            )));
        }
    }
    let reports: Vec<IdentityReport> = match selector {
        Selector::All => verify_all(config.digits, config.digits, config.zeros, cache.as_ref(), &p)?,
        Selector::One(id) => vec![verify_identity(id, config.digits, config.zeros, cache.as_ref(), &p)?],
    };
    for (i, r) in reports.iter().enumerate() {
        match config.format {
            Format::Json => writeln!(out, "{}", r.to_json())?,
            Format::Text => {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{r}")?;
            }
        }
    }
    Ok(if reports.iter().all(IdentityReport::passed) { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct ZerosSummary {
    schema: u32,
    command: &'static str,
    cache: String,
    count: usize,
    digits: u32,
    first: Option<String>,
    last: Option<String>,
}

fn zeros(config: &RunConfig, args: &ZerosArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = WorkingPrecision::new(config.digits);
    let path = config.cache_path();
    let cache = match (args.upto, args.count) {
        (Some(t), _) => compute_zeros_upto(t, &p)?,
        (None, Some(n)) => {
            let existing = if path.exists() { cache_load(&path).ok() } else { None };
            extend_zeros(&existing.unwrap_or_else(|| ZeroCache::new(0)), n, &p)?
        }
        (None, None) => unreachable!("clap requires one of --upto and --count"),
    };
    cache_store(&cache, &path).map_err(ZetaError::from)?;
    let show = |i: usize| format_significant(&cache.records[i].ordinate, cache.digits);
    let summary = ZerosSummary {
        schema: 1,
        command: "zeros",
        cache: path.display().to_string(),
        count: cache.len(),
        digits: cache.digits,
        first: (!cache.is_empty()).then(|| show(0)),
        last: (!cache.is_empty()).then(|| show(cache.len() - 1)),
    };
    match config.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&summary).expect("serializes"))?,
        Format::Text => {
            writeln!(out, "wrote {} zeros at {} digits to {}", summary.count, summary.digits, summary.cache)?;
            if let (Some(a), Some(b)) = (&summary.first, &summary.last) {
                writeln!(out, "  first {a}")?;
                writeln!(out, "  last  {b}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn sum(config: &RunConfig, k: u32, target_error: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    let cache = load_cache(config)?;
    let p = WorkingPrecision::new(config.digits);
    let v = secondary_zeta(k, target_error, &cache, &p)?;
    match config.format {
        Format::Json => {
            let mut obj = serde_json::to_value(&v).expect("serializes");
            let map = obj.as_object_mut().expect("object");
            map.insert("schema".into(), 1.into());
            map.insert("command".into(), "sum".into());
            writeln!(out, "{obj}")?;
        }
        Format::Text => {
            let d = Some(config.digits as usize);
            writeln!(out, "sum of alpha^-{k} over zeros")?;
            writeln!(out, "  value        {}", v.value.to_string_radix(10, d))?;
            writeln!(out, "  partial      {}", v.partial.to_string_radix(10, d))?;
            writeln!(out, "  tail         {}", v.tail.to_string_radix(10, Some(8)))?;
            writeln!(out, "  error bound  {}", v.error_bound.to_string_radix(10, Some(4)))?;
            writeln!(out, "  zeros used   {} (cutoff {:.6})", v.zeros_used, v.cutoff)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ConstantLine {
    schema: u32,
    command: &'static str,
    name: &'static str,
    digits: u32,
    value: String,
}

fn constants(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = WorkingPrecision::new(config.digits);
    for name in ConstantName::ALL {
        let c = NamedConstant::compute(name, &p);
        let value = c.value.to_string_radix(10, Some(config.digits as usize));
        match config.format {
            Format::Json => {
                let line = ConstantLine {
                    schema: 1,
                    command: "constants",
                    name: name.as_str(),
                    digits: config.digits,
                    value,
                };
                writeln!(out, "{}", serde_json::to_string(&line).expect("serializes"))?;
            }
            Format::Text => writeln!(out, "{:<12} {value}", name.as_str())?,
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GramLine {
    schema: u32,
    command: &'static str,
    x: String,
    series: String,
    mobius: String,
    digits_matched: AgreementCount,
}

fn gram(config: &RunConfig, x: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = WorkingPrecision::new(config.digits);
    let xv = Float::parse(x)
        .map(|v| Float::with_val(p.bits(), v))
        .map_err(|_| Failure(format!("cannot parse x = {x:?}")))?;
    let a = gram_series(&xv, &p)?;
    let b = gram_series_mobius(&xv, &p)?;
    let agree = digits_agreement(&a, &b)?;
    let d = Some(config.digits as usize);
    match config.format {
        Format::Json => {
            let line = GramLine {
                schema: 1,
                command: "gram",
                x: to_decimal(&xv),
                series: a.to_string_radix(10, d),
                mobius: b.to_string_radix(10, d),
                digits_matched: agree,
            };
            writeln!(out, "{}", serde_json::to_string(&line).expect("serializes"))?;
        }
        Format::Text => {
            writeln!(out, "R({x})")?;
            writeln!(out, "  series  {}", a.to_string_radix(10, d))?;
            writeln!(out, "  mobius  {}", b.to_string_radix(10, d))?;
            writeln!(out, "  digits matched {agree}")?;
        }
    }
    Ok(EXIT_OK)
}
