use std::f64::consts::FRAC_1_SQRT_2;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spa_lab::json::{ClosedFormJson, DossierJson, MatrixJson, SpaReportJson};
use spa_lab::parallel::Parallel;
use spa_lab::{parse, scan};
use spa_lab_core::catalog::{verify_counterexample_with, VerificationBudget};
use spa_lab_core::product::{EDGE_THRESHOLD, PPT_TOL};
use spa_lab_core::witness::spa_matrix_closed_form;
use spa_lab_core::{
    alpha_closed_form, beta_closed_form, build_witness, classify, classify_family, p_theta,
    solve_case_i, solve_case_ii, theta_for_p, BipartiteMatrix, CaseSolution, EdgeVerdict, SearchConfig,
    Searcher, VerificationDossier, WitnessParams,
};

const AGREEMENT_TOL: f64 = 1e-8;
const DEFAULT_GRID: [f64; 8] = [1.35, 1.4, 1.5, 1.6, 1.0 + FRAC_1_SQRT_2, 1.75, 1.8, 1.9];

/// Entanglement-witness toolkit: SPA classification, region scans and
/// counterexample verification.
#[derive(Debug, Parser)]
#[command(name = "spa-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distances to the positive and copositive cones, type and SPA.
    Classify(ClassifyArgs),
    /// SPA of a witness, optionally certified entangled by the edge criterion.
    Spa(SpaArgs),
    /// Region map of the plane a + b + c = p_θ as CSV.
    Scan(ScanArgs),
    /// Verification dossiers for the catalog of counterexamples.
    Verify(VerifyArgs),
}

/// Real numbers accept fractions such as `4/3`.
#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_parser = parse::real, required_unless_present = "matrix")]
    a: Option<f64>,
    #[arg(long, value_parser = parse::real, required_unless_present = "matrix")]
    b: Option<f64>,
    #[arg(long, value_parser = parse::real, required_unless_present = "matrix")]
    c: Option<f64>,
    #[arg(long, value_parser = parse::real, allow_hyphen_values = true, conflicts_with = "p_theta")]
    theta: Option<f64>,
    /// Resolved to θ = arccos(p/2).
    #[arg(long, value_parser = parse::real, alias = "p")]
    p_theta: Option<f64>,
    /// JSON matrix `{m, n, entries}` instead of family parameters.
    #[arg(long, conflicts_with_all = ["a", "b", "c", "theta", "p_theta"])]
    matrix: Option<PathBuf>,
}

enum Input {
    Family(WitnessParams),
    Matrix(BipartiteMatrix),
}

impl FamilyArgs {
    fn input(&self) -> Result<Input> {
        if let Some(path) = &self.matrix {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let m = MatrixJson::from_json(&text)?.to_matrix()?;
            return Ok(Input::Matrix(m));
        }
        let theta = match (self.theta, self.p_theta) {
            (Some(t), None) => t,
            (None, Some(p)) => theta_for_p(p)?,
            (None, None) => bail!("one of --theta or --p-theta is required"),
            (Some(_), Some(_)) => unreachable!("rejected by clap"),
        };
        let (a, b, c) = (self.a.unwrap_or_default(), self.b.unwrap_or_default(), self.c.unwrap_or_default());
        Ok(Input::Family(WitnessParams::new(a, b, c, theta)?))
    }
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: FamilyArgs,
    /// Family formulas only.
    #[arg(long, conflicts_with = "numeric")]
    closed_form: bool,
    /// Bisection only.
    #[arg(long)]
    numeric: bool,
}

#[derive(Debug, Args)]
struct SpaArgs {
    #[command(flatten)]
    input: FamilyArgs,
    #[arg(long)]
    certify_entangled: bool,
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_parser = parse::real, allow_hyphen_values = true, conflicts_with = "p", required_unless_present = "p")]
    theta: Option<f64>,
    #[arg(long, value_parser = parse::real, alias = "p-theta")]
    p: Option<f64>,
    #[arg(long, default_value_t = 200)]
    resolution: usize,
    /// Output CSV path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    I,
    Ii,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "all")]
    case: Option<CaseArg>,
    #[arg(long, value_parser = parse::real, alias = "p-theta", conflicts_with_all = ["theta", "all"])]
    p: Option<f64>,
    #[arg(long, value_parser = parse::real, allow_hyphen_values = true, conflicts_with = "all")]
    theta: Option<f64>,
    /// Sweep p over 1.35, 1.4, 1.5, 1.6, 1+1/√2, 1.75, 1.8, 1.9.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    spanning_restarts: usize,
    #[arg(long, default_value_t = 50)]
    oracle_restarts: usize,
    /// Also write the dossiers to this JSON file.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    serde_json::to_writer_pretty(&mut lock, value)?;
    writeln!(lock)?;
    Ok(())
}

fn closed_form_report(p: &WitnessParams) -> Result<(SpaReportJson, ClosedFormJson)> {
    let alpha = alpha_closed_form(p)?;
    let beta = beta_closed_form(p)?;
    let witness_type = classify_family(p).witness_type;
    let spa = if alpha < 1.0 { spa_matrix_closed_form(p)? } else { build_witness(p) };
    let spa_gamma = spa.partial_transpose().spectrum();
    let report = SpaReportJson {
        alpha,
        beta,
        witness_type: witness_type.as_str().to_owned(),
        rank: [
            spa.numerical_rank(spa_lab_core::hermitian::RANK_THRESHOLD),
            spa_gamma.numerical_rank(spa_lab_core::hermitian::RANK_THRESHOLD),
        ],
        spa: MatrixJson::from(&spa),
        spa_is_ppt: spa.min_eigenvalue() >= -PPT_TOL && spa_gamma.min() >= -PPT_TOL,
        closed_form: None,
    };
    let summary = ClosedFormJson { alpha, beta, witness_type: report.witness_type.clone() };
    Ok((report, summary))
}

fn cmd_classify(args: &ClassifyArgs) -> Result<u8> {
    let params = match args.input.input()? {
        Input::Matrix(m) => {
            if args.closed_form {
                bail!("--closed-form needs family parameters, not a matrix");
            }
            print_json(&SpaReportJson::from(&classify(&m)))?;
            return Ok(0);
        }
        Input::Family(p) => p,
    };
    if !classify_family(&params).is_block_positive {
        bail!("W[{}, {}, {}; {}] is not block-positive", params.a, params.b, params.c, params.theta);
    }
    if args.closed_form {
        print_json(&closed_form_report(&params)?.0)?;
        return Ok(0);
    }
    let numeric = SpaReportJson::from(&classify(&build_witness(&params)));
    if args.numeric {
        print_json(&numeric)?;
        return Ok(0);
    }
    let (_, closed) = closed_form_report(&params)?;
    let d_alpha = (closed.alpha - numeric.alpha).abs();
    let d_beta = (closed.beta - numeric.beta).abs();
    if d_alpha > AGREEMENT_TOL || d_beta > AGREEMENT_TOL {
        eprintln!("alpha: closed form {} numeric {} (diff {d_alpha:e})", closed.alpha, numeric.alpha);
        eprintln!("beta: closed form {} numeric {} (diff {d_beta:e})", closed.beta, numeric.beta);
        bail!("closed form and numeric distances differ by more than {AGREEMENT_TOL:e}");
    }
    print_json(&SpaReportJson { closed_form: Some(closed), ..numeric })?;
    Ok(0)
}

#[derive(Serialize)]
struct EdgeJson {
    verdict: &'static str,
    residual: f64,
    threshold: f64,
    restarts: usize,
    seed: u64,
}

#[derive(Serialize)]
struct SpaJson {
    alpha: f64,
    spa_is_ppt: bool,
    rank: [usize; 2],
    spa: MatrixJson,
    spa_state: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge: Option<EdgeJson>,
}

fn cmd_spa(args: &SpaArgs) -> Result<u8> {
    let report = match args.input.input()? {
        Input::Family(p) => {
            if !classify_family(&p).is_block_positive {
                bail!("W[{}, {}, {}; {}] is not block-positive", p.a, p.b, p.c, p.theta);
            }
            closed_form_report(&p)?.0
        }
        Input::Matrix(m) => SpaReportJson::from(&classify(&m)),
    };
    let spa = report.spa.to_matrix()?;
    let state = spa.normalized().context("SPA has zero trace")?;
    let mut code = 0;
    let edge = if args.certify_entangled {
        let executor = Parallel::from_env()?;
        let searcher = Searcher::new(SearchConfig::new(args.restarts, args.seed), &executor);
        let residual = searcher.edge_residual(&state)?;
        let verdict = if residual > EDGE_THRESHOLD { EdgeVerdict::EntangledEdge } else { EdgeVerdict::Inconclusive };
        if verdict == EdgeVerdict::Inconclusive {
            code = 2;
        }
        Some(EdgeJson {
            verdict: verdict.as_str(),
            residual,
            threshold: EDGE_THRESHOLD,
            restarts: args.restarts,
            seed: args.seed,
        })
    } else {
        None
    };
    print_json(&SpaJson {
        alpha: report.alpha,
        spa_is_ppt: report.spa_is_ppt,
        rank: report.rank,
        spa_state: MatrixJson::from(&state),
        spa: report.spa,
        edge,
    })?;
    Ok(code)
}

fn cmd_scan(args: &ScanArgs) -> Result<u8> {
    let theta = match (args.theta, args.p) {
        (Some(t), _) => t,
        (None, Some(p)) => theta_for_p(p)?,
        (None, None) => bail!("one of --theta or --p is required"),
    };
    let rows = scan::scan_plane(theta, args.resolution)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            scan::write_csv(&rows, BufWriter::new(file))?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => scan::write_csv(&rows, io::stdout().lock())?,
    }
    Ok(0)
}

fn solutions(case: Option<CaseArg>, p: f64) -> Result<Vec<CaseSolution>> {
    let mut out = Vec::new();
    if case != Some(CaseArg::Ii) {
        out.extend(solve_case_i(p)?);
    }
    if case != Some(CaseArg::I) {
        out.extend(solve_case_ii(p)?);
    }
    Ok(out)
}

/// Failures of the search-based stages are inconclusive rather than errors.
fn dossier_code(d: &VerificationDossier) -> u8 {
    let failed = d.failed_stages();
    if failed.is_empty() {
        0
    } else if failed.iter().all(|&i| i >= 5) {
        2
    } else {
        1
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let budget = VerificationBudget {
        restarts: args.restarts,
        oracle_restarts: args.oracle_restarts,
        spanning_restarts: args.spanning_restarts,
        seed: args.seed,
    };
    let cases = if args.all {
        let mut all = Vec::new();
        for p in DEFAULT_GRID {
            all.extend(solutions(args.case, p)?);
        }
        all
    } else {
        match (args.p, args.theta) {
            (Some(p), _) => solutions(args.case, p)?,
            (None, Some(theta)) => solutions(args.case, p_theta(theta))?
                .into_iter()
                .map(|s| s.at_theta(theta))
                .collect::<Result<_, _>>()?,
            (None, None) => bail!("one of --p, --theta or --all is required"),
        }
    };
    if cases.is_empty() {
        eprintln!("no solution in window");
        return Ok(2);
    }

    let executor = Parallel::from_env()?;
    let mut code = 0;
    let mut dossiers = Vec::with_capacity(cases.len());
    for s in &cases {
        let d = verify_counterexample_with(s, &budget, &executor);
        let c = dossier_code(&d);
        eprintln!(
            "case {} p={:.6} (a,b,c)=({:.6},{:.6},{:.6}): {}",
            s.case_tag.as_str(),
            s.p,
            s.params.a,
            s.params.b,
            s.params.c,
            if c == 0 { "PASS".to_owned() } else { format!("FAIL stages {:?}", d.failed_stages()) }
        );
        code = code.max(c);
        dossiers.push(DossierJson::from(&d));
    }
    if let Some(path) = &args.out {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        serde_json::to_writer_pretty(BufWriter::new(file), &dossiers)?;
    }
    print_json(&dossiers)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Spa(a) => cmd_spa(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
