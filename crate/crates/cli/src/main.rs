use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use klr_core::grothendieck::{coeff_oracle, expand_in_schur_basis, multiply, product_expansion, schur_poly};
use klr_core::gtpatterns::{omega, omega_inverse, upsilon, upsilon_inverse, MarkedGtPattern};
use klr_core::lr::{coeff_buch, coeff_contra, gamma, gamma_inverse, CoefficientQuery};
use klr_core::shapes::{rotate, skew};
use klr_core::tableaux::{column_word, is_dominant, row_word, superstandard, SvtEnumerator};
use klr_core::verify::{self, Fault, VerifyConfig};
use klr_core::{Partition, SetValuedFilling, SkewShape, WeightVector};

const DEFAULT_MAX_CAP: usize = 64;

#[derive(Parser)]
#[command(name = "klr", version, about = "K-theoretic Littlewood-Richardson coefficients")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Buch,
    Contra,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Gamma,
    GammaInv,
    Upsilon,
    UpsilonInv,
    Omega,
    OmegaInv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Row,
    Column,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    G,
    S,
}

#[derive(clap::Args)]
struct Triple {
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    nu: Option<Partition>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute C^nu_{lambda,mu}.
    Coeff {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value = "all")]
        rule: Rule,
    },
    /// Stream set-valued fillings as JSON lines.
    Enumerate {
        /// "lambda", "lambda/mu" or "rotated lambda".
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_weight)]
        weight: Option<WeightVector>,
        /// Keep only fillings that are dominant for this partition.
        #[arg(long, value_parser = parse_partition)]
        dominant: Option<Partition>,
        #[arg(long, conflicts_with = "singleton")]
        set_valued: bool,
        #[arg(long)]
        singleton: bool,
    },
    /// Apply one of the bijections and print its certificate.
    Bijection {
        #[arg(long, value_enum)]
        direction: Direction,
        /// JSON input file; stdin when omitted or "-".
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        triple: Triple,
    },
    /// Expand G_lambda * G_mu (or s_lambda * s_mu) in its basis.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        n: Option<usize>,
        /// Degree cap; defaults to |lambda| + |mu| + 3.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "g")]
        basis: BasisArg,
    },
    /// Run the verification sweeps.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        extra_degree: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the reading word of a filling.
    Word {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "row")]
        kind: Kind,
        #[arg(long, value_parser = parse_partition)]
        dominant: Option<Partition>,
    },
}

enum Failure {
    Parse(String),
    Disagree,
    Domain(String),
}

impl From<klr_core::Error> for Failure {
    fn from(e: klr_core::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Res = Result<(), Failure>;

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"))).collect()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_list(s)?).map_err(|e| e.to_string())
}

fn parse_weight(s: &str) -> Result<WeightVector, String> {
    Ok(WeightVector::new(parse_list(s)?))
}

fn parse_shape(s: &str) -> Result<(SkewShape, Option<Partition>), Failure> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("rotated") {
        let lambda = parse_partition(rest).map_err(Failure::Parse)?;
        return Ok((rotate(lambda.clone()).skew(), Some(lambda)));
    }
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    let outer = parse_partition(outer).map_err(Failure::Parse)?;
    let inner = parse_partition(inner).map_err(Failure::Parse)?;
    Ok((skew(outer, inner)?, None))
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Parse(e.to_string()))?;
            Ok(s)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Parse(format!("bad input: {e}")))
}

fn emit<T: Serialize>(out: &mut impl Write, v: &T) -> Res {
    let s = serde_json::to_string(v).map_err(|e| Failure::Parse(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Failure::Parse(e.to_string()))
}

fn max_cap() -> usize {
    std::env::var("KLR_MAX_CAP").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_CAP)
}

fn guard_cap(cap: usize) -> Res {
    let limit = max_cap();
    if cap > limit {
        return Err(Failure::Parse(format!("degree cap {cap} exceeds KLR_MAX_CAP = {limit}")));
    }
    Ok(())
}

fn query(t: &Triple) -> Result<CoefficientQuery, Failure> {
    let get = |p: &Option<Partition>, name: &str| p.clone().ok_or_else(|| Failure::Parse(format!("--{name} is required")));
    Ok(CoefficientQuery::new(get(&t.lambda, "lambda")?, get(&t.mu, "mu")?, get(&t.nu, "nu")?, t.n)?)
}

fn cmd_coeff(t: &Triple, rule: Rule) -> Res {
    let q = query(t)?;
    let oracle = || -> Result<String, Failure> {
        guard_cap(q.nu.size())?;
        Ok(coeff_oracle(&q)?.to_string())
    };
    match rule {
        Rule::Buch => println!("{}", coeff_buch(&q)),
        Rule::Contra => println!("{}", coeff_contra(&q)),
        Rule::Oracle => println!("{}", oracle()?),
        Rule::All => {
            let (b, c, o) = (coeff_buch(&q).to_string(), coeff_contra(&q).to_string(), oracle()?);
            let agree = b == c && c == o;
            println!("buch={b} contra={c} oracle={o} {}", if agree { "AGREE" } else { "DISAGREE" });
            if !agree {
                return Err(Failure::Disagree);
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(
    shape: &str,
    n: u32,
    weight: Option<WeightVector>,
    dominant: Option<Partition>,
    singleton: bool,
) -> Res {
    let (shape, rotated) = parse_shape(shape)?;
    let mut e = SvtEnumerator::new(shape, n).singletons(singleton);
    if let Some(w) = weight {
        e = e.weight(w);
    }
    if let Some(l) = rotated {
        e = e.rotated_of(l);
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut count = 0usize;
    for f in e.iter() {
        if dominant.as_ref().is_some_and(|l| !klr_core::tableaux::is_lambda_dominant(&f, l)) {
            continue;
        }
        emit(&mut out, &f)?;
        count += 1;
    }
    emit(&mut out, &serde_json::json!({ "count": count }))
}

#[derive(Serialize)]
struct Pair<'a> {
    pattern: &'a MarkedGtPattern,
    tableau: &'a SetValuedFilling,
}

fn cmd_bijection(direction: Direction, input: &Option<PathBuf>, t: &Triple) -> Res {
    let text = read_input(input)?;
    let domain = |e: klr_core::Error| Failure::Domain(e.to_string());
    let n_of = |f: &SetValuedFilling| t.n.unwrap_or_else(|| (f.max_entry() as usize).max(f.rows().len()).max(1));
    let mut out = io::stdout().lock();
    match direction {
        Direction::Gamma => {
            let q = query(t)?;
            emit(&mut out, &gamma(&parse_json(&text)?, &q).map_err(domain)?)
        }
        Direction::GammaInv => {
            let q = query(t)?;
            emit(&mut out, &gamma_inverse(&parse_json(&text)?, &q).map_err(domain)?)
        }
        Direction::Upsilon | Direction::Omega => {
            let m: MarkedGtPattern = parse_json(&text)?;
            let f = if matches!(direction, Direction::Upsilon) { upsilon(&m) } else { omega(&m) }.map_err(domain)?;
            emit(&mut out, &Pair { pattern: &m, tableau: &f })
        }
        Direction::UpsilonInv | Direction::OmegaInv => {
            let f: SetValuedFilling = parse_json(&text)?;
            let n = n_of(&f);
            let m = if matches!(direction, Direction::UpsilonInv) { upsilon_inverse(&f, n) } else { omega_inverse(&f, n) }
                .map_err(domain)?;
            emit(&mut out, &Pair { pattern: &m, tableau: &f })
        }
    }
}

fn cmd_expand(lambda: &Partition, mu: &Partition, n: Option<usize>, cap: Option<usize>, basis: BasisArg) -> Res {
    let n = n.unwrap_or(lambda.len().max(mu.len()).max(1));
    if lambda.len() > n || mu.len() > n {
        return Err(Failure::Parse(format!("n = {n} is smaller than the partition lengths")));
    }
    let mut out = io::stdout().lock();
    match basis {
        BasisArg::G => {
            let cap = cap.unwrap_or(lambda.size() + mu.size() + 3);
            guard_cap(cap)?;
            emit(&mut out, &product_expansion(lambda, mu, n, cap)?)
        }
        BasisArg::S => {
            let d = lambda.size() + mu.size();
            guard_cap(d)?;
            let p = multiply(
                &schur_poly(&SkewShape::straight(lambda.clone()), n),
                &schur_poly(&SkewShape::straight(mu.clone()), n),
                d,
            )?;
            emit(&mut out, &expand_in_schur_basis(&p)?)
        }
    }
}

fn cmd_verify(cfg: VerifyConfig) -> Res {
    guard_cap(2 * cfg.max_size + cfg.extra_degree)?;
    let report = verify::run(&cfg)?;
    for c in &report.checks {
        println!("{}: passed={} failed={}", c.check, c.passed, c.failed);
        if let Some(f) = &c.minimal {
            println!("  minimal counterexample: {} ({})", f.instance, f.reason);
        }
    }
    if report.all_passed() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Failure::Disagree)
    }
}

fn cmd_word(input: &Option<PathBuf>, kind: Kind, dominant: Option<Partition>) -> Res {
    let f: SetValuedFilling = parse_json(&read_input(input)?)?;
    let w = match kind {
        Kind::Row => row_word(&f),
        Kind::Column => column_word(&f),
    };
    println!("{w}");
    if let Some(l) = dominant {
        let read = match kind {
            Kind::Row => row_word(&superstandard(&l)),
            Kind::Column => column_word(&superstandard(&l)),
        };
        println!("dominant: {}", is_dominant(&read.concat(&w)));
    }
    Ok(())
}

fn run(cli: Cli) -> Res {
    match cli.cmd {
        Cmd::Coeff { triple, rule } => cmd_coeff(&triple, rule),
        Cmd::Enumerate { shape, n, weight, dominant, set_valued: _, singleton } => {
            cmd_enumerate(&shape, n, weight, dominant, singleton)
        }
        Cmd::Bijection { direction, input, triple } => cmd_bijection(direction, &input, &triple),
        Cmd::Expand { lambda, mu, n, cap, basis } => cmd_expand(&lambda, &mu, n, cap, basis),
        Cmd::Verify { max_size, n, extra_degree, seed, jobs, inject_fault } => cmd_verify(VerifyConfig {
            max_size,
            n,
            extra_degree,
            seed,
            jobs,
            fault: inject_fault.then_some(Fault::FlipOracleSign),
            ..VerifyConfig::default()
        }),
        Cmd::Word { input, kind, dominant } => cmd_word(&input, kind, dominant),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Disagree) => ExitCode::from(2),
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
