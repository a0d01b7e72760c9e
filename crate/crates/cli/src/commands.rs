use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, bail, Context, Result};
use hoconvex::identities::{self, SuiteConfig, SuiteReport};
use hoconvex::report::RunInfo;
use hoconvex::{
    closed_form_jensen_delta, closed_form_wright_delta, counterexample_f, delta_iterated,
    delta_iterated_subset_sum, paper_witness, revalidate, verify_counterexample, AdditiveMap,
    CheckConfig, ConvexityKind, Execution, QuadElem, Radicand, Rational, ReportDocument,
    SamplerBounds, StepVector,
};
use serde::Serialize;

use crate::config::FileConfig;
use crate::funcspec::parse_function;
use crate::{Cli, Command, CommonArgs, EvalCommand, Format, IdentitiesArgs, VerifyArgs};

const THEOREM_MISMATCH: u8 = 2;

pub fn run(cli: Cli) -> Result<ExitCode> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let threads = cli.threads.or(file.threads);
    let execution = configure_threads(threads)?;
    match cli.command {
        Command::Verify(args) => verify(args, &file, execution),
        Command::Identities(args) => identities(args, &file, execution),
        Command::Eval(cmd) => eval(cmd).map(|()| ExitCode::SUCCESS),
        Command::CheckReport { path } => check_report(&path),
    }
}

fn configure_threads(threads: Option<usize>) -> Result<Execution> {
    match threads {
        None => Ok(Execution::Parallel),
        Some(0) => bail!("--threads must be at least 1"),
        Some(1) => Ok(Execution::Sequential),
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .context("cannot configure the worker pool")?;
            Ok(Execution::Parallel)
        }
    }
}

/// Campaign settings after merging flags over the config file over defaults.
struct Resolved {
    radicand: Radicand,
    samples: usize,
    seed: u64,
    bounds: SamplerBounds,
    format: Format,
    output: Option<String>,
    canonical: bool,
}

fn resolve(common: CommonArgs, file: &FileConfig) -> Result<Resolved> {
    let radicand = Radicand::new(common.d.or(file.d).unwrap_or(2))?;
    let samples = common.samples.or(file.samples).unwrap_or(200);
    if samples == 0 {
        bail!("invalid configuration: --samples must be positive");
    }
    let defaults = SamplerBounds::default();
    let bounds = SamplerBounds::new(
        common
            .num_bound
            .or(file.num_bound)
            .unwrap_or(defaults.num_bound),
        common
            .den_bound
            .or(file.den_bound)
            .unwrap_or(defaults.den_bound),
    )?;
    let format = match (common.format, file.format.as_deref()) {
        (Some(f), _) => f,
        (None, None | Some("json")) => Format::Json,
        (None, Some("text")) => Format::Text,
        (None, Some(other)) => bail!("invalid configuration: unknown format {other:?}"),
    };
    Ok(Resolved {
        radicand,
        samples,
        seed: common.seed.or(file.seed).unwrap_or(0),
        bounds,
        format,
        output: common
            .output
            .map(|p| p.to_string_lossy().into_owned())
            .or_else(|| file.output.clone()),
        canonical: common.canonical,
    })
}

fn run_info(started: Instant, execution: Execution) -> RunInfo {
    RunInfo {
        timestamp_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        duration_ms: started.elapsed().as_millis() as u64,
        threads: if execution.is_parallel() {
            rayon::current_num_threads()
        } else {
            1
        },
    }
}

fn emit(text: &str, output: Option<&str>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {path}")),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs, file: &FileConfig, execution: Execution) -> Result<ExitCode> {
    let kind_name = args
        .kind
        .or_else(|| file.kind.clone())
        .ok_or_else(|| anyhow!("invalid configuration: --kind is required"))?;
    let n = args
        .n
        .or(file.n)
        .ok_or_else(|| anyhow!("invalid configuration: --n is required"))?;
    let c = args
        .c
        .or_else(|| file.c.clone())
        .map(|text| text.parse::<Rational>())
        .transpose()?;
    let kind = ConvexityKind::from_parts(&kind_name, n, c)?;
    let resolved = resolve(args.common, file)?;

    let config = CheckConfig {
        samples: resolved.samples,
        bounds: resolved.bounds,
        radicand: resolved.radicand,
        prepend: Vec::new(),
        execution,
    };
    let started = Instant::now();
    let mut doc = verify_counterexample(&kind, &config, resolved.seed)?;
    if !resolved.canonical {
        doc.run = Some(run_info(started, execution));
    }

    let text = match resolved.format {
        Format::Json => doc.to_json(),
        Format::Text => render_verify_text(&doc),
    };
    emit(&text, resolved.output.as_deref())?;

    if doc.matches_theorem {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "error: outcome {} contradicts the proved prediction {} for {kind}",
            doc.verdict, doc.expected_verdict
        );
        Ok(ExitCode::from(THEOREM_MISMATCH))
    }
}

fn render_verify_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let c = doc
        .c
        .as_ref()
        .map(|c| format!(", c={c}"))
        .unwrap_or_default();
    let _ = writeln!(out, "kind: {}(n={}{c})", doc.kind, doc.n);
    let _ = writeln!(out, "function: {}", doc.descriptor);
    let _ = writeln!(
        out,
        "seed: {}  samples checked: {}  strict: {}  violations: {}",
        doc.seed, doc.samples_checked, doc.strict_count, doc.violation_count
    );
    let _ = writeln!(
        out,
        "verdict: {} (predicted {})",
        doc.verdict, doc.expected_verdict
    );
    for v in doc.violations.iter().take(10) {
        let steps: Vec<String> = v.steps.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "violation #{}: x = {}; steps = [{}]; lhs = {}; required >= {}; deficit = {}",
            v.index,
            v.x,
            steps.join(", "),
            v.lhs,
            v.required_rhs,
            v.deficit
        );
    }
    if doc.violations.len() > 10 {
        let _ = writeln!(out, "... {} more", doc.violations.len() - 10);
    }
    out
}

#[derive(Serialize)]
struct IdentitiesDocument {
    schema: &'static str,
    schema_version: u32,
    artifact_version: &'static str,
    n_max: u32,
    samples: usize,
    seed: u64,
    d: Radicand,
    sampler: SamplerBounds,
    passed: bool,
    #[serde(flatten)]
    report: SuiteReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    run: Option<RunInfo>,
}

fn identities(args: IdentitiesArgs, file: &FileConfig, execution: Execution) -> Result<ExitCode> {
    let n_max = args.n_max.or(file.n_max).unwrap_or(6);
    let resolved = resolve(args.common, file)?;
    let config = SuiteConfig {
        n_max,
        samples: resolved.samples,
        seed: resolved.seed,
        bounds: resolved.bounds,
        radicand: resolved.radicand,
        execution,
    };
    let started = Instant::now();
    let report = identities::run_all(&config)?;
    let passed = report.passed();
    let doc = IdentitiesDocument {
        schema: "hoconvex/identities-report",
        schema_version: 1,
        artifact_version: env!("CARGO_PKG_VERSION"),
        n_max,
        samples: resolved.samples,
        seed: resolved.seed,
        d: resolved.radicand,
        sampler: resolved.bounds,
        passed,
        report,
        run: (!resolved.canonical).then(|| run_info(started, execution)),
    };
    let text = match resolved.format {
        Format::Json => serde_json::to_string_pretty(&doc)?,
        Format::Text => {
            let mut out = String::new();
            for suite in &doc.report.suites {
                let status = if suite.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status} {}: {} instances, {} failures",
                    suite.name, suite.checked, suite.failure_count
                );
                for failure in &suite.failures {
                    let _ = writeln!(
                        out,
                        "    #{} {}: {} != {}",
                        failure.index, failure.detail, failure.lhs, failure.rhs
                    );
                }
            }
            out
        }
    };
    emit(&text, resolved.output.as_deref())?;
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: exact identity check failed");
        Ok(ExitCode::from(THEOREM_MISMATCH))
    }
}

fn parse_quad(text: &str, radicand: Radicand) -> Result<QuadElem> {
    let x: QuadElem = text.parse()?;
    if !x.is_rational() && x.radicand() != radicand {
        bail!(
            "{text:?} lives in Q(sqrt {}), expected Q(sqrt {radicand})",
            x.radicand()
        );
    }
    Ok(x)
}

fn parse_steps(text: &str, n: Option<u32>, radicand: Radicand) -> Result<StepVector> {
    if text == "witness" {
        let n = n.ok_or_else(|| anyhow!("--steps witness needs --n"))?;
        return Ok(paper_witness(n, radicand)?);
    }
    let steps = text
        .split(',')
        .map(|s| parse_quad(s, radicand))
        .collect::<Result<Vec<_>>>()?;
    Ok(StepVector::new(steps)?)
}

fn eval(cmd: EvalCommand) -> Result<()> {
    let value = match cmd {
        EvalCommand::Alpha { x, d } => {
            let d = Radicand::new(d)?;
            AdditiveMap::alpha(d).apply(&parse_quad(&x, d)?).to_string()
        }
        EvalCommand::Beta { x, d } => {
            let d = Radicand::new(d)?;
            AdditiveMap::beta(d).apply(&parse_quad(&x, d)?).to_string()
        }
        EvalCommand::Sign { x } => x.parse::<QuadElem>()?.sign().as_i8().to_string(),
        EvalCommand::F { n, x, d } => {
            let d = Radicand::new(d)?;
            counterexample_f(n, d)?
                .eval(&parse_quad(&x, d)?)
                .to_string()
        }
        EvalCommand::Delta {
            f,
            steps,
            x,
            n,
            subset_sum,
            d,
        } => {
            let d = Radicand::new(d)?;
            let f = parse_function(&f, d)?;
            let hs = parse_steps(&steps, n, d)?;
            let x = parse_quad(&x, d)?;
            if subset_sum {
                delta_iterated_subset_sum(&f, &hs, &x)?.to_string()
            } else {
                delta_iterated(&f, &hs, &x).to_string()
            }
        }
        EvalCommand::ClosedFormWright { n, steps, d } => {
            let d = Radicand::new(d)?;
            let hs = parse_steps(&steps, Some(n), d)?;
            closed_form_wright_delta(n, &hs, d)?.to_string()
        }
        EvalCommand::ClosedFormJensen { n, h, d } => {
            let d = Radicand::new(d)?;
            closed_form_jensen_delta(n, &parse_quad(&h, d)?, d)?.to_string()
        }
        EvalCommand::Witness { n, d } => {
            let hs = paper_witness(n, Radicand::new(d)?)?;
            let items: Vec<String> = hs.iter().map(ToString::to_string).collect();
            items.join(", ")
        }
    };
    println!("{value}");
    Ok(())
}

fn check_report(path: &Path) -> Result<ExitCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc = ReportDocument::from_json(&text)?;
    let outcome = revalidate(&doc)?;
    if outcome.ok() {
        println!(
            "ok: {} violation(s) re-checked exactly; verdict {} ({})",
            outcome.violations_checked,
            doc.verdict,
            if doc.matches_theorem {
                "as predicted"
            } else {
                "NOT as predicted"
            }
        );
        Ok(if doc.matches_theorem {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(THEOREM_MISMATCH)
        })
    } else {
        for problem in &outcome.problems {
            eprintln!("mismatch: {problem}");
        }
        Ok(ExitCode::from(THEOREM_MISMATCH))
    }
}
