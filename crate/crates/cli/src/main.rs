mod cert;
mod commands;
mod config;

use cert::{Certificate, CliError, Outcome};
use clap::{Args, Parser, Subcommand};
use config::{parse_exponents, parse_pair, CoidealConfig, FamilyConfig, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Exact verification of Taft-algebra comodule algebras, twists and biGalois objects.
#[derive(Parser)]
#[command(name = "bigal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// JSON or TOML run configuration; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Taft parameter (q is a primitive n-th root of unity)
    #[arg(long)]
    n: Option<u32>,
    /// conductor N of Q(ζ_N), a multiple of n
    #[arg(long)]
    conductor: Option<u32>,
    /// output directory (default: $BIGAL_OUT_DIR, then ./bigal-out)
    #[arg(long)]
    out: Option<PathBuf>,
    /// print the certificate instead of the summary
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf axioms for T_q, T_q^-1, H and optionally H_χ, and T_q^-1 ≅ T_q^cop
    VerifyHopf {
        #[command(flatten)]
        common: Common,
        /// χ1 at (g,1) and (1,g)
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        chi1: Option<Vec<String>>,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        chi2: Option<Vec<String>>,
    },
    /// Build a family member; check simplicity, coinvariants and lifting
    Family {
        #[command(flatten)]
        common: Common,
        /// L, K11, K01, K10 or TGA
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// trivial, diag, anti, whole or generators `i,j;i,j`
        #[arg(long)]
        subgroup: Option<String>,
        /// bicharacter exponents `a,b;c,d`
        #[arg(long)]
        psi: Option<String>,
        /// also check the g-twist by (g^i, g^j), given as `i,j`
        #[arg(long)]
        g_twist: Option<String>,
    },
    /// Build a homogeneous coideal subalgebra; with --psi, compare its twist with the family
    Coideal {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        /// `d1,d2` with entries 0 or 1
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        psi: Option<String>,
    },
    /// H^[σ_ψ] ≅ H_(χ1,χ2) for bicharacters ψ on Z_n × Z_n
    Twist {
        #[command(flatten)]
        common: Common,
        /// exponents `a,b;c,d`, repeatable
        #[arg(long)]
        psi: Vec<String>,
    },
    /// ℓ(ξ′,μ′) □ ℓ(ξ,μ) ≅ ℓ(ξ′ξ, ξⁿμ′+μ)
    Grouplaw {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["XI", "MU"], allow_hyphen_values = true)]
        lhs: Option<Vec<String>>,
        #[arg(long, num_args = 2, value_names = ["XI", "MU"], allow_hyphen_values = true)]
        rhs: Option<Vec<String>>,
        /// also check T_q ≅ ℓ(1,0)
        #[arg(long)]
        neutral: bool,
    },
    /// Enumerate coideal data and their liftings; writes CSV
    Atlas {
        #[command(flatten)]
        common: Common,
        /// ξ samples (default 1 q 2); pass none for only (δ1,δ2) rows
        #[arg(long, num_args = 0.., allow_hyphen_values = true)]
        xi: Option<Vec<String>>,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Decide ℓ(ξ,μ) ∼ ℓ(ξ′,μ′) with a witness
    BigalEquiv {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["XI", "MU"], allow_hyphen_values = true)]
        lhs: Option<Vec<String>>,
        #[arg(long, num_args = 2, value_names = ["XI", "MU"], allow_hyphen_values = true)]
        rhs: Option<Vec<String>>,
    },
}

fn pair_of(v: Option<Vec<String>>) -> Option<[String; 2]> {
    v.and_then(|v| v.try_into().ok())
}

fn base(common: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = match &common.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    cfg.n = common.n.or(cfg.n);
    cfg.conductor = common.conductor.or(cfg.conductor);
    Ok(cfg)
}

fn set<T>(slot: &mut Option<T>, v: Option<T>) {
    if v.is_some() {
        *slot = v;
    }
}

type Runner = fn(&config::Ctx, &RunConfig) -> Result<Outcome, CliError>;

fn prepare(command: Command) -> Result<(&'static str, Common, RunConfig, Runner), CliError> {
    Ok(match command {
        Command::VerifyHopf { common, chi1, chi2 } => {
            let mut cfg = base(&common)?;
            set(&mut cfg.chi1, pair_of(chi1));
            set(&mut cfg.chi2, pair_of(chi2));
            ("verify-hopf", common, cfg, commands::verify_hopf_cmd)
        }
        Command::Family { common, kind, xi, mu, a, b, subgroup, psi, g_twist } => {
            let mut cfg = base(&common)?;
            let f = cfg.family.get_or_insert_with(FamilyConfig::default);
            if let Some(k) = kind {
                f.kind = k;
            }
            set(&mut f.xi, xi);
            set(&mut f.mu, mu);
            set(&mut f.a, a);
            set(&mut f.b, b);
            set(&mut f.subgroup, subgroup);
            set(&mut f.psi, psi.as_deref().map(parse_exponents).transpose()?);
            set(&mut f.g_twist, g_twist.as_deref().map(parse_pair).transpose()?);
            if f.kind.is_empty() {
                return Err(CliError::Input("family needs --kind".into()));
            }
            ("family", common, cfg, commands::family_cmd)
        }
        Command::Coideal { common, xi, delta, subgroup, psi } => {
            let mut cfg = base(&common)?;
            let c = cfg.coideal.get_or_insert_with(CoidealConfig::default);
            set(&mut c.xi, xi);
            if let Some(d) = delta.as_deref() {
                let [a, b] = parse_pair(d)?;
                let bit = |x: i64| u8::try_from(x).map_err(|_| CliError::Input(format!("δ entry {x}")));
                c.delta = Some([bit(a)?, bit(b)?]);
            }
            set(&mut c.subgroup, subgroup);
            set(&mut c.psi, psi.as_deref().map(parse_exponents).transpose()?);
            ("coideal", common, cfg, commands::coideal_cmd)
        }
        Command::Twist { common, psi } => {
            let mut cfg = base(&common)?;
            if !psi.is_empty() {
                cfg.psi = psi.iter().map(|p| parse_exponents(p)).collect::<Result<_, _>>()?;
            }
            ("twist", common, cfg, commands::twist_cmd)
        }
        Command::Grouplaw { common, lhs, rhs, neutral } => {
            let mut cfg = base(&common)?;
            set(&mut cfg.lhs, pair_of(lhs));
            set(&mut cfg.rhs, pair_of(rhs));
            cfg.neutral |= neutral;
            ("grouplaw", common, cfg, commands::grouplaw_cmd)
        }
        Command::Atlas { common, xi, max_dim } => {
            let mut cfg = base(&common)?;
            set(&mut cfg.xi, xi);
            set(&mut cfg.max_dim, max_dim);
            ("atlas", common, cfg, commands::atlas_cmd)
        }
        Command::BigalEquiv { common, lhs, rhs } => {
            let mut cfg = base(&common)?;
            set(&mut cfg.lhs, pair_of(lhs));
            set(&mut cfg.rhs, pair_of(rhs));
            ("bigal-equiv", common, cfg, commands::bigal_equiv_cmd)
        }
    })
}

fn run(command: Command) -> Result<bool, CliError> {
    let (name, common, cfg, runner) = prepare(command)?;
    let ctx = config::Ctx::new(&cfg)?;
    let start = Instant::now();
    let outcome = runner(&ctx, &cfg)?;
    let cert = Certificate::new(name, cfg.clone(), &outcome, start.elapsed().as_millis());
    let dir = cert::out_dir(common.out.as_deref(), &cfg);
    let path = cert::write(&dir, &format!("{name}-n{}", ctx.n), &cert, outcome.csv.as_deref())?;
    if common.json {
        println!("{}", serde_json::to_string_pretty(&cert).map_err(|e| CliError::Io(e.to_string()))?);
    } else {
        for r in &outcome.reports {
            print!("{r}");
        }
        println!("{}: {} -> {}", name, if cert.passed { "PASS" } else { "FAIL" }, path.display());
    }
    Ok(cert.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
