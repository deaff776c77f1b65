mod config;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kschur::affine::{affine_stanley_monomials, from_word, parse_word, cylindric_skew_schur_monomials, CylindricShape};
use kschur::cores::{bounded_to_core, row_residue_sets};
use kschur::symfunc::{
    decompose_in_basis, dual_k_schur_monomials_with_budget, k_schur_monomials, schur_monomials_with_budget, support,
    Basis, MonExpansion,
};
use kschur::tableaux::{build_kssyt_traced, DEFAULT_BUDGET};
use kschur::Partition;
use serde_json::json;

use config::{Span, SweepConfig, SweepFormat};
use verify::{Check, Status};

#[derive(Parser)]
#[command(name = "kschur", version, about = "k-bounded partitions, cores, k-tableaux and their symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the (k+1)-core of a k-bounded partition.
    Core(CoreArgs),
    /// Construct a k-tableau of shape core(λ) and k-weight μ.
    Fill(FillArgs),
    /// Print the monomial expansion of a symmetric function.
    Expand(ExpandArgs),
    /// Run verification sweeps and emit one verdict per instance.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpandFormat {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct CoreArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Args)]
struct FillArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    k: usize,
    /// Print every row-filling stage.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Schur,
    DualKSchur,
    KSchur,
    AffineStanley,
    Cylindric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisName {
    Schur,
    DualKSchur,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(value_enum)]
    object: Object,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    k: Option<usize>,
    /// Reduced word such as `2,1,0,2`.
    #[arg(long)]
    word: Option<String>,
    /// Outer cylindric shape, `n,m:[a,b,...]`.
    #[arg(long)]
    outer: Option<CylindricShape>,
    #[arg(long)]
    inner: Option<CylindricShape>,
    /// Also rewrite the expansion in this basis.
    #[arg(long, value_enum)]
    basis: Option<BasisName>,
    /// Also count the support points in this many variables.
    #[arg(long, alias = "support")]
    vars: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: ExpandFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Flat TOML file with the sweep settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<Check>>,
    /// Inclusive range `a..b` or a single value.
    #[arg(long)]
    k: Option<Span>,
    #[arg(long)]
    size: Option<Span>,
    #[arg(long)]
    vars: Option<Span>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<SweepFormat>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Append an instance with a deliberately wrong support.
    #[arg(long)]
    self_test: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let run = match cli.command {
        Command::Core(a) => cmd_core(a, &mut out).map(|_| true),
        Command::Fill(a) => cmd_fill(a, &mut out).map(|_| true),
        Command::Expand(a) => cmd_expand(a, &mut out).map(|_| true),
        Command::Verify(a) => cmd_verify(a, &mut out),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_core(a: CoreArgs, out: &mut dyn Write) -> Result<()> {
    let cc = bounded_to_core(&a.lambda, a.k)?;
    let sets = row_residue_sets(&cc);
    match a.format {
        TextFormat::Json => {
            let v = json!({
                "lambda": cc.bounded, "k": a.k, "core": cc.core.shape(),
                "shifts": cc.shifts, "rho": cc.inner, "row_residues": sets,
            });
            writeln!(out, "{v}")?;
        }
        TextFormat::Text => {
            writeln!(out, "core: {}", cc.core.shape())?;
            let shifts: Vec<String> = cc.shifts.iter().map(usize::to_string).collect();
            writeln!(out, "shifts: [{}]", shifts.join(","))?;
            writeln!(out, "rho: {}", cc.inner)?;
            for (i, set) in sets.iter().enumerate() {
                let r: Vec<String> = set.iter().map(usize::to_string).collect();
                writeln!(out, "R({}): {{{}}}", i + 1, r.join(","))?;
            }
        }
    }
    Ok(())
}

fn cmd_fill(a: FillArgs, out: &mut dyn Write) -> Result<()> {
    let trace = build_kssyt_traced(&a.lambda, &a.mu, a.k)?;
    match a.format {
        TextFormat::Json => {
            let mut v = json!({"tableau": trace.result.tableau.to_string(), "k_weight": trace.result.k_weight});
            if a.trace {
                v["chain"] = json!(trace.chain);
            }
            writeln!(out, "{v}")?;
        }
        TextFormat::Text => {
            if a.trace {
                let top = trace.fills.len();
                for (i, fill) in trace.fills.iter().enumerate() {
                    writeln!(out, "letter {}:", top - i)?;
                    for (s, stage) in fill.stages.iter().enumerate() {
                        writeln!(out, "stage {}", s + 1)?;
                        write!(out, "{stage}")?;
                    }
                    writeln!(out, "remaining: {}", fill.remaining)?;
                    writeln!(out)?;
                }
            }
            writeln!(out, "{}", trace.result.tableau)?;
        }
    }
    Ok(())
}

fn need<T: Clone>(v: &Option<T>, flag: &str, object: &str) -> Result<T> {
    match v {
        Some(x) => Ok(x.clone()),
        None => bail!("{object} needs --{flag}"),
    }
}

fn expansion(a: &ExpandArgs) -> Result<MonExpansion> {
    Ok(match a.object {
        Object::Schur => schur_monomials_with_budget(&need(&a.lambda, "lambda", "schur")?, a.budget)?,
        Object::DualKSchur => dual_k_schur_monomials_with_budget(
            &need(&a.lambda, "lambda", "dual-k-schur")?,
            need(&a.k, "k", "dual-k-schur")?,
            a.budget,
        )?,
        Object::KSchur => k_schur_monomials(&need(&a.lambda, "lambda", "k-schur")?, need(&a.k, "k", "k-schur")?)?,
        Object::AffineStanley => {
            let word = parse_word(&need(&a.word, "word", "affine-stanley")?)?;
            let w = from_word(&word, need(&a.k, "k", "affine-stanley")?)?;
            affine_stanley_monomials(&w)?
        }
        Object::Cylindric => cylindric_skew_schur_monomials(
            &need(&a.outer, "outer", "cylindric")?,
            &need(&a.inner, "inner", "cylindric")?,
        )?,
    })
}

fn cmd_expand(a: ExpandArgs, out: &mut dyn Write) -> Result<()> {
    let f = expansion(&a)?;
    let coeffs = match a.basis {
        None => None,
        Some(BasisName::Schur) => Some(decompose_in_basis(&f, Basis::Schur)?),
        Some(BasisName::DualKSchur) => {
            let k = a.k.context("--basis dual-k-schur needs --k")?;
            Some(decompose_in_basis(&f, Basis::DualKSchur(k))?)
        }
    };
    let points = a.vars.map(|n| (n, support(&f, n).points.len()));
    match a.format {
        ExpandFormat::Json => {
            writeln!(out, "{}", serde_json::to_string(&f)?)?;
            if let Some(c) = &coeffs {
                writeln!(out, "{}", serde_json::to_string(c)?)?;
            }
            if let Some((n, count)) = points {
                writeln!(out, "{}", json!({"vars": n, "support_points": count}))?;
            }
        }
        ExpandFormat::Text => {
            writeln!(out, "{f}")?;
            if let Some(c) = &coeffs {
                writeln!(out, "{c}")?;
            }
            if let Some((n, count)) = points {
                writeln!(out, "support in {n} variables: {count} points")?;
            }
        }
        ExpandFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["basis", "partition", "coefficient"])?;
            for (mu, c) in f.terms() {
                w.write_record(["monomial".to_string(), mu.to_string(), c.to_string()])?;
            }
            if let Some(coeffs) = &coeffs {
                let name = coeffs_basis_name(a.basis);
                for (mu, c) in coeffs.terms() {
                    w.write_record([name.to_string(), mu.to_string(), c.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn coeffs_basis_name(b: Option<BasisName>) -> &'static str {
    match b {
        Some(BasisName::DualKSchur) => "dual-k-schur",
        _ => "schur",
    }
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let mut cfg = match &a.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => SweepConfig::default(),
    };
    if let Some(c) = a.checks {
        cfg.checks = c;
    }
    if let Some(k) = a.k {
        cfg.k_range = k;
    }
    if let Some(s) = a.size {
        cfg.size_range = s;
    }
    if let Some(n) = a.vars {
        cfg.n_range = n;
    }
    if let Some(b) = a.budget {
        cfg.budget = b;
    }
    if let Some(f) = a.format {
        cfg.format = f;
    }
    if a.output.is_some() {
        cfg.output = a.output;
    }
    cfg.self_test |= a.self_test;
    cfg.validate()?;

    let results = match &cfg.output {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            let r = verify::run_sweep(&cfg, &mut w)?;
            w.flush()?;
            r
        }
        None => verify::run_sweep(&cfg, out)?,
    };
    verify::write_summary(&results, &mut io::stderr().lock())?;
    Ok(results.iter().all(|(v, _)| v.result == Status::Pass))
}
