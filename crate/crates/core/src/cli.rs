//! Command-line front end.
//!
//! Every subcommand renders both a text and a JSON form of its result; the
//! JSON form is wrapped in `{"version", "command", "result"}` and described by
//! `schema/output.json`. Results go to stdout and diagnostics to stderr.
//!
//! Settings are resolved as flag, then `MACKEY_*` environment variable, then
//! the `key=value` config file, then the built-in default.
//!
//! Exit status: 0 on success, 1 on bad input, 2 when the degree cap or a size
//! guard refuses the query, 3 when `--verify` finds an oracle mismatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::combination::Combination;
use crate::config;
use crate::diagrams::Partition;
use crate::error::{Error, Result};
use crate::ext::{self, ExtAnswer};
use crate::grothendieck::{self, Decomposition, Generator, SimpleIndex};
use crate::oracle;
use crate::ospcat::{self, OspIndex, OspKind};
use crate::plethysm::{self, Power};
use crate::poset::{Order, QuadIndex};
use crate::symalg::{self, Flavor};
use crate::symfunc::{self, cache, SymFunc};
use crate::syntax;

/// Version of the JSON output format.
pub const OUTPUT_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mackey", version, about = "Combinatorics of the mixed tensor category of the Mackey Lie algebra")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "MACKEY_OUTPUT", value_enum)]
    pub output: Option<OutputFormat>,

    /// Largest number of boxes any intermediate object may have.
    #[arg(long, global = true, env = "MACKEY_DEGREE_CAP")]
    pub degree_cap: Option<usize>,

    /// Largest total number of boxes for explicit group-algebra computations.
    #[arg(long, global = true, env = "MACKEY_GROUP_GUARD")]
    pub group_guard: Option<usize>,

    /// Directory holding the coefficient cache.
    #[arg(long, global = true, env = "MACKEY_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Do not read or write the coefficient cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// `key=value` configuration file.
    #[arg(long, global = true, env = "MACKEY_CONFIG")]
    pub config: Option<PathBuf>,

    /// Re-check the result against the brute-force oracle.
    #[arg(long, global = true)]
    pub verify: bool,

    /// Partial order used by `defect`, `chains` and `covers`.
    #[arg(long, global = true, env = "MACKEY_ORDER", value_enum)]
    pub order: Option<OrderArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Compatible,
    Strict,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Compatible => Order::Compatible,
            OrderArg::Strict => Order::Strict,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OuterArg {
    Sym,
    Ext,
}

impl From<OuterArg> for Power {
    fn from(o: OuterArg) -> Power {
        match o {
            OuterArg::Sym => Power::Symmetric,
            OuterArg::Ext => Power::Exterior,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InnerArg {
    Sym2,
    Ext2,
    /// `W_* ⊗ W`, answered as pairs of diagrams.
    Tensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    O,
    Sp,
}

impl From<KindArg> for OspKind {
    fn from(k: KindArg) -> OspKind {
        match k {
            KindArg::O => OspKind::Orthogonal,
            KindArg::Sp => OspKind::Symplectic,
        }
    }
}

fn partition_arg(s: &str) -> std::result::Result<Partition, String> {
    syntax::parse_partition(s).map_err(|e| e.to_string())
}

fn quad_arg(s: &str) -> std::result::Result<QuadIndex, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn simple_arg(s: &str) -> std::result::Result<SimpleIndex, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn generator_arg(s: &str) -> std::result::Result<Generator, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn flavor_arg(s: &str) -> std::result::Result<Flavor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn pair_arg(s: &str) -> std::result::Result<(usize, usize), String> {
    let v = syntax::parse_integers(s, 2).map_err(|e| e.to_string())?;
    Ok((v[0] as usize, v[1] as usize))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood–Richardson coefficient c^LAM_{MU,NU}.
    Lr {
        #[arg(value_parser = partition_arg)]
        lam: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// Schur expansion of s_MU * s_NU.
    Product {
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// S^K or Λ^K of S², Λ² or of a tensor product W_* ⊗ W.
    Plethysm {
        #[arg(value_enum)]
        outer: OuterArg,
        #[arg(value_enum)]
        inner: InnerArg,
        k: usize,
    },
    /// Composition factors of J_Q, or of its truncated hull.
    Decompose {
        #[arg(value_parser = quad_arg)]
        q: QuadIndex,
        /// Keep only the socle layers 0..=K.
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Composition factors of L_INDEX ⊗ G1 ⊗ G2 ⊗ ...
    Tensor {
        #[arg(value_parser = simple_arg)]
        index: SimpleIndex,
        #[arg(value_parser = generator_arg, required = true)]
        generators: Vec<Generator>,
    },
    /// Socle of J_Q.
    Socle {
        #[arg(value_parser = quad_arg)]
        q: QuadIndex,
    },
    /// Socle layers 0..=KMAX of the injective hull of the unit.
    Layers { kmax: usize },
    /// Defect from A to B, or `incomparable`.
    Defect {
        #[arg(value_parser = quad_arg)]
        a: QuadIndex,
        #[arg(value_parser = quad_arg)]
        b: QuadIndex,
    },
    /// All maximal chains of covering relations from A to B.
    Chains {
        #[arg(value_parser = quad_arg)]
        a: QuadIndex,
        #[arg(value_parser = quad_arg)]
        b: QuadIndex,
    },
    /// Immediate successors of A, with entries at most BOUND.
    Covers {
        #[arg(value_parser = quad_arg)]
        a: QuadIndex,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// dim Ext^Q(L_S, L_T), where known.
    Ext {
        #[arg(value_parser = simple_arg)]
        s: SimpleIndex,
        #[arg(value_parser = simple_arg)]
        t: SimpleIndex,
        #[arg(long)]
        degree: usize,
    },
    /// dim Ext^DEGREE(L_X, ℂ).
    ExtTrivial {
        #[arg(value_parser = simple_arg)]
        x: SimpleIndex,
        #[arg(long)]
        degree: usize,
    },
    /// dim Ext^DEGREE(L_X, W_{*ALPHA} ⊗ W_BETA).
    ExtThick {
        #[arg(value_parser = simple_arg)]
        x: SimpleIndex,
        #[arg(value_parser = partition_arg)]
        alpha: Partition,
        #[arg(value_parser = partition_arg)]
        beta: Partition,
        #[arg(long)]
        degree: usize,
    },
    /// The J-th term of the injective resolution of the unit and its socle.
    Resolution { j: usize },
    /// Layer K of the kernel of the J-th differential.
    Kernel { j: usize, k: usize },
    /// dim End(I_Q), or dim Hom in degree one for a flavor.
    Homdim {
        #[arg(value_parser = quad_arg)]
        q: QuadIndex,
        /// contract, shift-left or shift-right.
        #[arg(long, value_parser = flavor_arg)]
        flavor: Option<Flavor>,
    },
    /// Dimension of the quadratic relation space for Q.
    Quadkernel {
        #[arg(value_parser = quad_arg)]
        q: QuadIndex,
    },
    /// Young symmetrizer scalar and idempotency check.
    Young {
        #[arg(value_parser = partition_arg)]
        lam: Partition,
        /// Also compute the corner algebra dimension for (LAM, PI).
        #[arg(long, value_parser = partition_arg)]
        corner: Option<Partition>,
    },
    /// Orthogonal and symplectic variant.
    Osp(OspArgs),
    /// Inspect or manage the coefficient cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Args, Debug)]
pub struct OspArgs {
    #[arg(long, value_enum, default_value = "o")]
    pub kind: KindArg,
    #[command(subcommand)]
    pub command: OspCommand,
}

#[derive(Subcommand, Debug)]
pub enum OspCommand {
    /// Defect between degree pairs `l,m`.
    Defect {
        #[arg(value_parser = pair_arg)]
        a: (usize, usize),
        #[arg(value_parser = pair_arg)]
        b: (usize, usize),
    },
    /// Socle layers 0..=KMAX of the injective hull of the unit.
    Layers { kmax: usize },
    /// Socle of the J-th resolution term.
    Resolution { j: usize },
    /// dim Ext^DEGREE(L_X, ℂ) for X = `lam,mu`.
    ExtTrivial {
        x: String,
        #[arg(long)]
        degree: usize,
    },
    /// The index in the other category obtained by conjugating.
    Conjugate { x: String },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    /// Print the cache file location.
    Path,
    /// Load the cache, report its state and rewrite it if corrupt.
    Check,
    /// Delete the cache file.
    Clear,
    /// Write every coefficient known to this process to FILE.
    Export { file: PathBuf },
}

/// A rendered result.
pub struct Report {
    pub command: &'static str,
    pub text: String,
    pub result: Value,
    pub checks: Vec<Check>,
}

/// Outcome of one oracle cross-check.
pub struct Check {
    pub name: String,
    pub outcome: CheckOutcome,
}

pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Report {
    fn new(command: &'static str, text: impl Into<String>, result: Value) -> Self {
        Report { command, text: text.into(), result, checks: Vec::new() }
    }

    fn check(&mut self, name: &str, run: impl FnOnce() -> Result<std::result::Result<(), String>>) {
        let outcome = match run() {
            Ok(Ok(())) => CheckOutcome::Pass,
            Ok(Err(why)) => CheckOutcome::Fail(why),
            Err(e) => CheckOutcome::Skipped(e.to_string()),
        };
        self.checks.push(Check { name: name.to_string(), outcome });
    }

    pub fn envelope(&self) -> Value {
        json!({ "version": OUTPUT_VERSION, "command": self.command, "result": self.result })
    }
}

/// Settings after flag, environment and config file have been merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub output: OutputFormat,
    pub degree_cap: usize,
    pub group_guard: usize,
    pub cache_file: Option<PathBuf>,
    pub order: Order,
    pub verify: bool,
}

/// Parses a `key=value` file. Blank lines and lines starting with `#` are ignored.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("config line {}: expected key=value", i + 1)))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn default_config_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CONFIG_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".config")))?;
    Some(base.join("mackey").join("config"))
}

fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("mackey"))
}

pub const CACHE_FILE: &str = "lr-cache.txt";

impl Settings {
    pub fn resolve(cli: &Cli) -> Result<Settings> {
        let file = match &cli.config {
            Some(p) => Some(fs::read_to_string(p).map_err(|e| Error::InvalidArgument(format!("config {}: {e}", p.display())))?),
            None => default_config_path().and_then(|p| fs::read_to_string(p).ok()),
        };
        let conf = match file {
            Some(text) => parse_config(&text)?,
            None => BTreeMap::new(),
        };
        let num = |key: &str| -> Result<Option<usize>> {
            conf.get(key)
                .map(|v| v.parse().map_err(|_| Error::InvalidArgument(format!("config {key}: `{v}` is not a number"))))
                .transpose()
        };
        let enum_val = |key: &str| -> Option<&String> { conf.get(key) };
        let output = match (cli.output, enum_val("output")) {
            (Some(o), _) => o,
            (None, Some(v)) => OutputFormat::from_str(v, true).map_err(|_| Error::InvalidArgument(format!("config output: `{v}`")))?,
            (None, None) => OutputFormat::Text,
        };
        let order = match (cli.order, enum_val("order")) {
            (Some(o), _) => o.into(),
            (None, Some(v)) => v.parse()?,
            (None, None) => Order::default(),
        };
        let degree_cap = cli.degree_cap.or(num("degree-cap")?).unwrap_or(config::DEFAULT_DEGREE_CAP);
        let group_guard = cli.group_guard.or(num("group-guard")?).unwrap_or(config::DEFAULT_GROUP_GUARD);
        let no_cache = cli.no_cache || conf.get("no-cache").is_some_and(|v| v == "true" || v == "1");
        let cache_file = if no_cache {
            None
        } else {
            cli.cache_dir.clone().or_else(|| conf.get("cache-dir").map(PathBuf::from)).or_else(default_cache_dir).map(|d| d.join(CACHE_FILE))
        };
        Ok(Settings { output, degree_cap, group_guard, cache_file, order, verify: cli.verify })
    }
}

fn mult_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn biguint_json(c: &BigUint) -> Value {
    match c.to_u64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn index_json(s: &SimpleIndex) -> Value {
    Value::Array(s.parts().iter().map(|p| partition_json(p)).collect())
}

fn quad_json(q: &QuadIndex) -> Value {
    json!([q.l, q.m, q.n, q.p])
}

fn lines<K: Ord + Clone>(c: &Combination<K>, show: impl Fn(&K) -> String) -> String {
    if c.is_empty() {
        return "0".to_string();
    }
    c.iter().map(|(k, m)| format!("{m}  {}", show(k))).collect::<Vec<_>>().join("\n")
}

/// `[{"index": [[..],[..],[..],[..]], "mult": n}, ...]` in canonical order.
pub fn decomposition_json(d: &Decomposition) -> Value {
    d.iter().map(|(s, c)| json!({ "index": index_json(s), "mult": mult_json(c) })).collect()
}

fn decomposition_report(command: &'static str, d: &Decomposition) -> Report {
    Report::new(command, lines(d, |s| s.to_string()), decomposition_json(d))
}

fn partition_terms(c: &Combination<Partition>) -> Value {
    c.iter().map(|(p, m)| json!({ "partition": partition_json(p), "mult": mult_json(m) })).collect()
}

fn symfunc_terms(f: &SymFunc) -> Value {
    f.terms().iter().map(|(p, m)| json!({ "partition": partition_json(p), "mult": mult_json(m) })).collect()
}

fn pair_terms(c: &Combination<(Partition, Partition)>) -> Value {
    c.iter().map(|((a, b), m)| json!({ "pair": [partition_json(a), partition_json(b)], "mult": mult_json(m) })).collect()
}

fn same<T: PartialEq + std::fmt::Debug>(engine: &T, oracle: &T) -> std::result::Result<(), String> {
    if engine == oracle {
        Ok(())
    } else {
        Err(format!("engine {engine:?} but oracle {oracle:?}"))
    }
}

/// The oracle product `s_mu * s_nu`, in enough variables to see every term.
fn oracle_product(mu: &Partition, nu: &Partition) -> Result<SymFunc> {
    let n = (mu.len() + nu.len()).max(1);
    let a = oracle::expand_schur(mu, n)?;
    let b = oracle::expand_schur(nu, n)?;
    if mu.degree() + nu.degree() > oracle::SCHUR_GUARD {
        return Err(Error::SizeGuard { what: "oracle product", size: mu.degree() + nu.degree(), guard: oracle::SCHUR_GUARD });
    }
    oracle::decompose_into_schur(&a.mul(&b))
}

/// Largest `m + n` for which `--verify` rebuilds `J_q` from characters.
const VERIFY_THIN_LIMIT: usize = 4;

fn run_command(cmd: &Command, settings: &Settings) -> Result<Report> {
    let verify = settings.verify;
    Ok(match cmd {
        Command::Lr { lam, mu, nu } => {
            config::check_degree(lam.degree())?;
            let c = symfunc::lr_coefficient(lam, mu, nu);
            let mut r = Report::new("lr", c.to_string(), json!(c));
            if verify {
                r.check("lr against Schur polynomials", || {
                    let prod = oracle_product(mu, nu)?;
                    Ok(same(&BigInt::from(c), &prod.coeff(lam)))
                });
            }
            r
        }
        Command::Product { mu, nu } => {
            let f = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone()))?;
            let mut r = Report::new("product", f.to_string(), symfunc_terms(&f));
            if verify {
                r.check("product against Schur polynomials", || Ok(same(&f, &oracle_product(mu, nu)?)));
            }
            r
        }
        Command::Plethysm { outer, inner, k } => {
            let power: Power = (*outer).into();
            match inner {
                InnerArg::Tensor => {
                    let d = plethysm::cauchy(power, *k)?;
                    let mut r = Report::new("plethysm", lines(&d, |(a, b)| format!("{a},{b}")), pair_terms(&d));
                    if verify {
                        r.check("Cauchy expansion against weights", || {
                            let o = oracle::brute_force_plethysm(power, *k, oracle::Inner::Tensor(*k, *k), 0)?;
                            Ok(same(&d, &o.map_keys(|v| (v[0].clone(), v[1].clone()))))
                        });
                    }
                    r
                }
                InnerArg::Sym2 | InnerArg::Ext2 => {
                    let (d, which) = if *inner == InnerArg::Sym2 {
                        (plethysm::power_of_sym2(*k, power)?, oracle::Inner::Sym2)
                    } else {
                        (plethysm::power_of_ext2(*k, power)?, oracle::Inner::Ext2)
                    };
                    let mut r = Report::new("plethysm", lines(&d, |p| p.to_string()), partition_terms(&d));
                    if verify {
                        r.check("plethysm against weights", || {
                            let n = 2 * k;
                            let o = oracle::single_block(&oracle::brute_force_plethysm(power, *k, which, n)?);
                            Ok(same(&d, &o))
                        });
                    }
                    r
                }
            }
        }
        Command::Decompose { q, truncate } => {
            let d = match truncate {
                Some(k) => grothendieck::truncated_hull(q, *k)?,
                None => grothendieck::decompose_j(q)?,
            };
            let mut r = decomposition_report("decompose", &d);
            if verify && truncate.is_none() {
                r.check("J against mixed-tensor characters", || {
                    if q.m + q.n > VERIFY_THIN_LIMIT {
                        return Err(Error::SizeGuard { what: "oracle mixed tensor", size: q.m + q.n, guard: VERIFY_THIN_LIMIT });
                    }
                    Ok(same(&d, &oracle::reconstruct_j(q)?))
                });
            }
            r
        }
        Command::Tensor { index, generators } => decomposition_report("tensor", &grothendieck::decompose_word(index, generators)?),
        Command::Socle { q } => decomposition_report("socle", &grothendieck::socle_of(q)?),
        Command::Layers { kmax } => {
            let layers = grothendieck::layers_of_i(*kmax)?;
            let text = layers
                .iter()
                .enumerate()
                .map(|(k, d)| format!("layer {k}\n{}", lines(d, |s| s.to_string())))
                .collect::<Vec<_>>()
                .join("\n");
            let result = layers.iter().map(|d| decomposition_report("layers", d).result).collect();
            Report::new("layers", text, Value::Array(result))
        }
        Command::Defect { a, b } => match settings.order.defect(a, b) {
            Some(d) => {
                let mut r = Report::new("defect", d.to_string(), json!(d));
                if verify {
                    r.check("defect against longest chain", || Ok(same(&Some(d), &settings.order.longest_chain(a, b))));
                }
                r
            }
            None => Report::new("defect", "incomparable", Value::Null),
        },
        Command::Chains { a, b } => {
            let chains = settings.order.chains(a, b);
            let text = if chains.is_empty() {
                "none".to_string()
            } else {
                chains.iter().map(|c| c.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" -> ")).collect::<Vec<_>>().join("\n")
            };
            let result: Vec<Value> = chains.iter().map(|c| Value::Array(c.iter().map(quad_json).collect())).collect();
            Report::new("chains", text, Value::Array(result))
        }
        Command::Covers { a, bound } => {
            let covers = settings.order.covers(a, *bound);
            let text = covers.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("\n");
            Report::new("covers", text, Value::Array(covers.iter().map(quad_json).collect()))
        }
        Command::Ext { s, t, degree } => {
            let answer = ext::ext_dimension(s, t, *degree);
            let result = match &answer {
                ExtAnswer::Dimension(d) => biguint_json(d),
                ExtAnswer::Vanishes => json!(0),
                ExtAnswer::Undetermined => json!("undetermined"),
            };
            Report::new("ext", answer.to_string(), result)
        }
        Command::ExtTrivial { x, degree } => {
            let d = ext::ext_to_trivial(x, *degree);
            let mut r = Report::new("ext-trivial", d.to_string(), json!(d));
            if verify {
                r.check("Ext to the unit against exterior-power characters", || {
                    let o = oracle::thick_ext_by_characters(&Partition::empty(), &Partition::empty(), *degree)?;
                    let want = if x.is_thick() { o.get(&(x.lam.clone(), x.pi.clone())) } else { BigInt::default() };
                    Ok(same(&BigInt::from(d), &want))
                });
            }
            r
        }
        Command::ExtThick { x, alpha, beta, degree } => {
            config::check_degree(x.degree())?;
            let d = ext::ext_to_thick(x, alpha, beta, *degree);
            let mut r = Report::new("ext-thick", d.to_string(), biguint_json(&d));
            if verify {
                r.check("Ext to a thick simple against characters", || {
                    if x.degree() > oracle::SCHUR_GUARD {
                        return Err(Error::SizeGuard { what: "oracle ext", size: x.degree(), guard: oracle::SCHUR_GUARD });
                    }
                    let o = oracle::thick_ext_by_characters(alpha, beta, *degree)?;
                    let want = if x.is_thick() { o.get(&(x.lam.clone(), x.pi.clone())) } else { BigInt::default() };
                    Ok(same(&BigInt::from(d), &want))
                });
            }
            r
        }
        Command::Resolution { j } => {
            let term = ext::resolution_term(*j)?;
            let text = format!("{}\nsocle\n{}", term.body(), lines(&term.socle, |s| s.to_string()));
            let socle = decomposition_report("resolution", &term.socle).result;
            Report::new("resolution", text, json!({ "degree": j, "socle": socle }))
        }
        Command::Kernel { j, k } => {
            let d = ext::kernel_layer(*j, *k)?;
            let mut r = decomposition_report("kernel", &d);
            if verify && *j >= 1 {
                r.check("kernel layer against the Schur functor character", || {
                    let hook = Partition::hook(k + 1, j - 1);
                    if hook.degree() > oracle::SCHUR_GUARD / 2 {
                        return Err(Error::SizeGuard { what: "oracle Schur functor", size: hook.degree(), guard: oracle::SCHUR_GUARD / 2 });
                    }
                    Ok(same(&d, &oracle::schur_functor_of_f(&hook, hook.degree())?))
                });
            }
            r
        }
        Command::Homdim { q, flavor } => match flavor {
            None => {
                let d = symalg::end_dimension(q);
                let mut r = Report::new("homdim", d.to_string(), biguint_json(&d));
                if verify {
                    r.check("End against explicit wirings", || Ok(same(&d, &BigUint::from(symalg::explicit_end_dimension(q)?))));
                }
                r
            }
            Some(f) => {
                let d = symalg::hom_dimension_deg1(q, *f)?;
                let mut r = Report::new("homdim", d.to_string(), biguint_json(&d));
                if verify {
                    r.check("Hom against explicit wirings", || {
                        Ok(same(&d, &BigUint::from(symalg::explicit_hom_dimension_deg1(q, *f)?)))
                    });
                }
                r
            }
        },
        Command::Quadkernel { q } => {
            let check = symalg::quadratic_kernel_check(q)?;
            let text = format!("computed {}\nexpected {}", check.computed, check.expected);
            let result = json!({ "computed": check.computed, "expected": biguint_json(&check.expected), "holds": check.holds() });
            let mut r = Report::new("quadkernel", text, result);
            if verify {
                r.check("kernel equals l!m!n!p!/2", || Ok(if check.holds() { Ok(()) } else { Err("mismatch".into()) }));
            }
            r
        }
        Command::Young { lam, corner } => {
            let scalar = symalg::young_scalar(lam);
            let idempotent = symalg::young_idempotency(lam)?;
            let corner_dim = corner.as_ref().map(|pi| symalg::corner_dimension(lam, pi)).transpose()?;
            let mut text = format!("scalar {scalar}\nidempotent {idempotent}");
            if let Some(c) = corner_dim {
                text.push_str(&format!("\ncorner {c}"));
            }
            let result = json!({ "scalar": biguint_json(&scalar), "idempotent": idempotent, "corner": corner_dim });
            Report::new("young", text, result)
        }
        Command::Osp(args) => osp_command(args)?,
        Command::Cache { .. } => unreachable!("handled before dispatch"),
    })
}

fn osp_command(args: &OspArgs) -> Result<Report> {
    let kind: OspKind = args.kind.into();
    Ok(match &args.command {
        OspCommand::Defect { a, b } => match ospcat::osp_defect(*a, *b) {
            Some(d) => Report::new("osp-defect", d.to_string(), json!(d)),
            None => Report::new("osp-defect", "incomparable", Value::Null),
        },
        OspCommand::Layers { kmax } => {
            let layers = ospcat::osp_layers_of_i(kind, *kmax)?;
            let text = layers
                .iter()
                .enumerate()
                .map(|(k, d)| format!("layer {k}\n{}", lines(d, |p| p.to_string())))
                .collect::<Vec<_>>()
                .join("\n");
            Report::new("osp-layers", text, Value::Array(layers.iter().map(partition_terms).collect()))
        }
        OspCommand::Resolution { j } => {
            let d = ospcat::osp_resolution_socle(kind, *j)?;
            Report::new("osp-resolution", lines(&d, |p| p.to_string()), partition_terms(&d))
        }
        OspCommand::ExtTrivial { x, degree } => {
            let x = OspIndex::parse(kind, x)?;
            let d = ospcat::osp_ext_to_trivial(&x, *degree);
            Report::new("osp-ext-trivial", d.to_string(), json!(d))
        }
        OspCommand::Conjugate { x } => {
            let y = ospcat::osp_conjugate(&OspIndex::parse(kind, x)?);
            let result = json!({ "kind": y.kind.to_string(), "index": [partition_json(&y.lam), partition_json(&y.mu)] });
            Report::new("osp-conjugate", y.to_string(), result)
        }
    })
}

fn cache_command(action: &CacheAction, settings: &Settings) -> Result<Report> {
    let path = settings.cache_file.clone();
    let need = || path.clone().ok_or_else(|| Error::Cache("the cache is disabled".into()));
    Ok(match action {
        CacheAction::Path => match &path {
            Some(p) => Report::new("cache-path", p.display().to_string(), json!(p.display().to_string())),
            None => Report::new("cache-path", "disabled", Value::Null),
        },
        CacheAction::Check => {
            let p = need()?;
            let report = cache::attach(&p)?;
            cache::detach()?;
            let text = format!("loaded {}\ndiscarded {}\nrebuilt {}", report.loaded, report.discarded, report.rebuilt);
            let result = json!({ "loaded": report.loaded, "discarded": report.discarded, "rebuilt": report.rebuilt });
            Report::new("cache-check", text, result)
        }
        CacheAction::Clear => {
            let p = need()?;
            let existed = p.exists();
            if existed {
                fs::remove_file(&p)?;
            }
            Report::new("cache-clear", if existed { "removed" } else { "absent" }, json!(existed))
        }
        CacheAction::Export { file } => {
            if let Some(p) = &path {
                cache::attach(p)?;
                cache::detach()?;
            }
            let n = cache::export(file)?;
            Report::new("cache-export", n.to_string(), json!(n))
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    if e.is_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USER
    }
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let settings = match Settings::resolve(&cli) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USER;
        }
    };
    config::set_degree_cap(settings.degree_cap);
    config::set_group_guard(settings.group_guard);
    let result = match &cli.command {
        Command::Cache { action } => cache_command(action, &settings),
        cmd => {
            if let Some(p) = &settings.cache_file {
                match cache::attach(p) {
                    Ok(r) if r.discarded > 0 => {
                        let _ = writeln!(err, "warning: discarded {} invalid cache records in {}", r.discarded, p.display());
                    }
                    Ok(_) => {}
                    Err(e) => {
                        let _ = writeln!(err, "warning: cache unavailable: {e}");
                    }
                }
            }
            let r = run_command(cmd, &settings);
            let _ = cache::detach();
            r
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let rendered = match settings.output {
        OutputFormat::Text => report.text.clone(),
        OutputFormat::Json => report.envelope().to_string(),
    };
    let _ = writeln!(out, "{rendered}");
    let mut code = EXIT_OK;
    if settings.verify {
        if report.checks.is_empty() {
            let _ = writeln!(err, "verify: no oracle check for `{}`", report.command);
        }
        for c in &report.checks {
            let _ = match &c.outcome {
                CheckOutcome::Pass => writeln!(err, "verify: {} ok", c.name),
                CheckOutcome::Skipped(why) => writeln!(err, "verify: {} skipped ({why})", c.name),
                CheckOutcome::Fail(why) => {
                    code = EXIT_VERIFY;
                    writeln!(err, "verify: {} FAILED: {why}", c.name)
                }
            };
        }
    }
    code
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["mackey", "--no-cache"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(run_args(&["lr", "[2,1]", "[1]", "[2]"]), (0, "1\n".into(), String::new()));
        assert_eq!(run_args(&["defect", "1,0,0,1", "0,1,1,0"]).1, "2\n");
        assert_eq!(run_args(&["ext-trivial", "[1],[],[],[1]", "--degree", "1"]).1, "1\n");
    }

    #[test]
    fn parse_errors_name_token() {
        let (code, _, err) = run_args(&["lr", "[2,x]", "[1]", "[2]"]);
        assert_eq!(code, EXIT_USER);
        assert!(err.contains("`x`") && err.contains("position 3"), "{err}");
    }

    #[test]
    fn config_file_format() {
        let c = parse_config("# comment\ndegree_cap = 9\n\norder=strict\n").unwrap();
        assert_eq!(c.get("degree-cap").map(String::as_str), Some("9"));
        assert_eq!(c.get("order").map(String::as_str), Some("strict"));
        assert!(parse_config("nonsense").is_err());
    }
}
