use std::collections::BTreeMap;
use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nilgeo_core::catalog::{self, CatalogEntry};
use nilgeo_core::io::InputDocument;
use nilgeo_core::liealg::LieAlgebra;
use nilgeo_core::solver::{
    self, param_independence_probe, parse_fix, parse_zero, solve_compatible_acs, zero_curvature_probe, PatternSpec,
    ProbeStatus, SolveOptions, CURVATURE_TOLERANCE, DEFAULT_TOLERANCE,
};
use nilgeo_core::verify;
use nilgeo_core::{Error, FORMAT_VERSION};

#[derive(Parser)]
#[command(name = "nilgeo", version, about = "Almost pseudo-Kähler geometry on six-dimensional nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List,
    /// Show one catalog entry.
    Show {
        id: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict to one entry.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute connection and curvature of a structure read from JSON.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search numerically for compatible almost complex structures.
    Solve(SolveArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Catalog entry supplying the algebra, the form and the zero pattern.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    group: Option<String>,
    /// Input document supplying the algebra and the form.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Pin entry r,c (1-based) to a value. Repeating an entry with
    /// `--probe` lists the values to compare.
    #[arg(long = "fix", value_name = "R,C=V")]
    fix: Vec<String>,
    /// Force entry r,c (1-based) to zero.
    #[arg(long = "zero", value_name = "R,C")]
    zero: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Compare curvature across the repeated `--fix` values, or on an
    /// abelian algebra check that random solutions are flat.
    #[arg(long)]
    probe: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Invalid(Error),
    Io(String),
    NoConvergence(String),
    /// Work completed but reported failures.
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks(_) => 1,
            Failure::Usage(_) | Failure::Invalid(_) => 2,
            Failure::Io(_) => 3,
            Failure::NoConvergence(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Invalid(e) => format!("error [{}]: {e}", e.invariant()),
            Failure::Usage(m) | Failure::Io(m) | Failure::NoConvergence(m) | Failure::Checks(m) => {
                format!("error: {m}")
            }
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => list(),
        Command::Show { id, json } => show(&id, json),
        Command::Verify { group, samples, seed, out } => {
            run_verify(group.as_deref(), samples as usize, seed, out.as_deref())
        }
        Command::Compute { input, out } => compute(&input, out.as_deref()),
        Command::Solve(args) => solve(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(Failure::Io(format!("stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn list() -> Outcome {
    let lines: Vec<String> = catalog::list_entries().iter().map(|(id, summary)| format!("{id:<8} {summary}")).collect();
    emit(&lines.join("\n"), None)
}

fn show(id: &str, as_json: bool) -> Outcome {
    let e = catalog::get(id)?;
    if as_json {
        let reference = InputDocument::from_instance(&e.instantiate(&e.reference_params())?);
        let doc = json!({
            "format_version": FORMAT_VERSION,
            "id": e.id,
            "group": e.group,
            "summary": e.summary,
            "brackets": e.algebra().describe(),
            "params": e.params,
            "derived": e.derived,
            "omega": e.form_text,
            "J": e.acs_text,
            "hermitian_ricci": e.hermitian.describe(),
            "ricci_support": e.support,
            "riemannian": e.riemannian,
            "notes": e.notes,
            "reference": serde_json::to_value(&reference).expect("document serializes"),
        });
        return emit(&serde_json::to_string_pretty(&doc).expect("json"), None);
    }
    emit(describe(e).trim_end(), None)
}

fn describe(e: &CatalogEntry) -> String {
    let mut s = format!("{}  (group {})\n\nbrackets:\n", e.id, e.group);
    for line in e.algebra().describe() {
        s += &format!("  {line}\n");
    }
    s += &format!("\nomega = {}\n\nJ:\n", e.form_text);
    for line in e.acs_text {
        s += &format!("  {line}\n");
    }
    s += "\nparameters:\n";
    for p in e.params {
        s += &format!("  {}\n", p.domain.constraint(p.name));
    }
    for d in e.derived {
        let how = match d.binding {
            catalog::Binding::Default => "defaults to",
            catalog::Binding::Fixed => "fixed to",
        };
        s += &format!("  {} {how} {}\n", d.name, d.rule);
    }
    s += &format!("  {} (optional) scales omega and must be nonzero\n", catalog::SCALE);
    s += &format!("\nRicci J-Hermitian: {}\n", e.hermitian.describe());
    s += &format!("metric: {}\n", if e.riemannian { "Riemannian" } else { "pseudo-Riemannian" });
    for n in e.notes {
        s += &format!("note: {n}\n");
    }
    s
}

fn run_verify(group: Option<&str>, samples: usize, seed: u64, out: Option<&Path>) -> Outcome {
    let summary = match group {
        Some(id) => verify::run_group(id, samples, seed)?,
        None => verify::run_all(samples, seed),
    };
    for (name, c) in &summary.counts {
        eprintln!("{name:<30} pass {:>4}  fail {:>4}  inconclusive {:>4}", c.pass, c.fail, c.inconclusive);
    }
    emit(&summary.to_json(), out)?;
    if summary.failures > 0 {
        let failed: Vec<&str> = summary.counts.iter().filter(|(_, c)| c.fail > 0).map(|(n, _)| n.as_str()).collect();
        return Err(Failure::Checks(format!("{} failed check(s): {}", summary.failures, failed.join(", "))));
    }
    Ok(())
}

fn compute(input: &Path, out: Option<&Path>) -> Outcome {
    let doc = InputDocument::parse(&read(input)?)?;
    let report = doc.compute()?;
    emit(&serde_json::to_string_pretty(&report).expect("json"), out)
}

/// Algebra, form and starting pattern for a solve.
fn solve_setup(
    args: &SolveArgs,
) -> std::result::Result<(LieAlgebra, nilgeo_core::exact::Matrix, PatternSpec), Failure> {
    if let Some(id) = &args.group {
        let inst = catalog::instantiate(id, &catalog::get(id)?.reference_params())?;
        let j = inst.acs.matrix();
        let pattern =
            if args.probe { PatternSpec::central_rows_free(&inst.algebra, j) } else { PatternSpec::zeros_of(j) };
        return Ok((inst.algebra, inst.form.matrix().clone(), pattern));
    }
    let path = args.input.as_ref().expect("clap requires --group or --input");
    let doc = InputDocument::parse(&read(path)?)?;
    let algebra = doc.algebra()?;
    let form = doc.form()?;
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm.into());
    }
    let pattern = PatternSpec::free(doc.dim);
    Ok((algebra, form.matrix().clone(), pattern))
}

fn solve(args: &SolveArgs) -> Outcome {
    let (algebra, omega, mut pattern) = solve_setup(args)?;
    let omega = omega.to_f64();
    for z in &args.zero {
        let (r, c) = parse_zero(z)?;
        pattern = pattern.with_zero(r, c)?;
    }
    let mut pins: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
    for f in &args.fix {
        let (r, c, v) = parse_fix(f)?;
        pins.entry((r, c)).or_default().push(v);
    }
    let mut vary = BTreeMap::new();
    for ((r, c), values) in pins {
        if values.len() == 1 {
            pattern = pattern.with_fixed(r, c, values[0])?;
        } else if args.probe {
            vary.insert((r, c), values);
        } else {
            return Err(Failure::Usage(format!(
                "entry {},{} fixed more than once; add --probe to compare values",
                r + 1,
                c + 1
            )));
        }
    }
    let opts = SolveOptions { seed: args.seed, tolerance: args.tol, ..Default::default() };

    if args.probe {
        let report = if !vary.is_empty() {
            param_independence_probe(&algebra, &omega, &pattern, &vary, &opts, CURVATURE_TOLERANCE)?
        } else if algebra.is_abelian() {
            zero_curvature_probe(&algebra, &omega, 20, args.seed)?
        } else {
            return Err(Failure::Usage(
                "--probe needs an entry fixed to two or more values, or an abelian algebra".into(),
            ));
        };
        emit(&serde_json::to_string_pretty(&report).expect("json"), args.out.as_deref())?;
        return match report.status {
            ProbeStatus::Pass => Ok(()),
            ProbeStatus::Fail => Err(Failure::Checks(report.detail)),
            ProbeStatus::Inconclusive => Err(Failure::NoConvergence(report.detail)),
        };
    }

    let result = solve_compatible_acs(&omega, &pattern, &opts)?;
    emit(&serde_json::to_string_pretty(&result).expect("json"), args.out.as_deref())?;
    if !result.converged {
        return Err(Failure::NoConvergence(format!(
            "no compatible J within tolerance after {} restarts; best residual {}",
            result.restarts,
            solver::float17::text(result.residual_norm)
        )));
    }
    Ok(())
}
