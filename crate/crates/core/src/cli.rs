//! Command-line front end: job configs, presets, dispatch, report output.
//!
//! A job is described by a JSON document (or a named preset) giving the
//! action — `linear` matrices on affine space, `torus` monomial maps, or a
//! `findim` structure-constant algebra — plus degree bounds.  Flags can
//! override the numeric knobs.  Every command prints the human table to
//! stdout and optionally writes the same numbers as JSON; reports carry no
//! timestamps or timings unless asked, so outputs are byte-stable.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::exactla::{parse_rational, RationalMatrix};
use crate::groups::{close_group, FiniteGroup, GroupElement, DEFAULT_GROUP_LIMIT};
use crate::hochschild::bar::SparseVec;
use crate::hochschild::{findim_hh_dims, FinDimAlgebra, FinDimCrossed};
use crate::report::{ClassEntry, DimTable, Report, Timings, Totals};
use crate::{crossprod, selftest, weyl, Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "orbihom",
    version,
    about = "Exact twisted Hochschild, cyclic and periodic cyclic homology of crossed products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conjugacy classes, centralizer orders and fixed sets.
    Classes(JobArgs),
    /// Graded Hochschild homology per conjugacy class (linear and findim).
    Hh(JobArgs),
    /// Graded cyclic homology per conjugacy class (linear actions).
    Hc(JobArgs),
    /// Periodic cyclic homology totals (linear and torus actions).
    Hp(JobArgs),
    /// Closed-form periodic cyclic homology of O(T^n) crossed with S_n.
    Weyl {
        /// Rank of the torus (and of the symmetric group).
        #[arg(long)]
        n: usize,
        /// Recompute per class through the crossed-product machinery and
        /// compare (bounded; the default limit is n = 4).
        #[arg(long)]
        check: bool,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the built-in invariant suite; any failure exits nonzero.
    Selftest,
}

#[derive(Args, Debug, Default)]
pub struct JobArgs {
    /// Path to a JSON job description.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Named action preset; overrides nothing, conflicts are errors.
    #[arg(long)]
    pub preset: Option<String>,
    /// Largest homological degree to report (default 3).
    #[arg(long)]
    pub q_max: Option<usize>,
    /// Largest polynomial degree to report (default 4).
    #[arg(long)]
    pub d_max: Option<usize>,
    /// Re-derive Hochschild tables through the bar complex and compare.
    #[arg(long)]
    pub oracle: bool,
    /// Also write the report as JSON to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
}

/// On-disk job description.  Everything is optional; a preset fills the
/// action fields, flags fill the numeric ones, and whatever remains falls
/// back to the defaults `q_max = 3`, `d_max = 4`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ActionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    /// Finite matrix group on `Q[x_1..x_n]`.
    Linear,
    /// Finite group of monomial maps on `T^n`.
    Torus,
    /// Structure-constant algebra with automorphisms (presets only).
    Findim,
}

/// One generator, either a square matrix of rational strings or a monomial
/// torus map with a 1-based permutation and rational shifts.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Matrix(Vec<Vec<String>>),
    Monomial { perm: Vec<usize>, shift: Vec<String> },
}

/// A fully resolved job: preset applied, flags merged, defaults filled.
#[derive(Debug, Clone)]
pub struct Job {
    pub kind: ActionKind,
    pub n: usize,
    pub generators: Vec<GeneratorSpec>,
    pub preset: Option<String>,
    pub q_max: usize,
    pub d_max: usize,
    pub oracle: bool,
}

const PRESETS: &[&str] = &[
    "trivial-c1",
    "neg-c1",
    "s2-c2",
    "c3-cycle-c3",
    "diag-c2",
    "neg-c2",
    "s2-torus",
    "neg-torus",
    "s3-torus",
    "s4-torus",
    "m2",
    "m2-azumaya",
];

fn matrix_gen(rows: &[&[i64]]) -> GeneratorSpec {
    GeneratorSpec::Matrix(
        rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
    )
}

fn monomial_gen(perm: &[usize], shift: &[&str]) -> GeneratorSpec {
    GeneratorSpec::Monomial {
        perm: perm.to_vec(),
        shift: shift.iter().map(ToString::to_string).collect(),
    }
}

fn preset_action(name: &str) -> Result<(ActionKind, usize, Vec<GeneratorSpec>)> {
    let action = match name {
        "trivial-c1" => (ActionKind::Linear, 1, vec![matrix_gen(&[&[1]])]),
        "neg-c1" => (ActionKind::Linear, 1, vec![matrix_gen(&[&[-1]])]),
        "s2-c2" => (ActionKind::Linear, 2, vec![matrix_gen(&[&[0, 1], &[1, 0]])]),
        "c3-cycle-c3" => (
            ActionKind::Linear,
            3,
            vec![matrix_gen(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])],
        ),
        "diag-c2" => (ActionKind::Linear, 2, vec![matrix_gen(&[&[1, 0], &[0, -1]])]),
        "neg-c2" => (ActionKind::Linear, 2, vec![matrix_gen(&[&[-1, 0], &[0, -1]])]),
        "s2-torus" => (ActionKind::Torus, 2, vec![monomial_gen(&[2, 1], &["0", "0"])]),
        "neg-torus" => (ActionKind::Torus, 1, vec![monomial_gen(&[1], &["1/2"])]),
        "s3-torus" => (
            ActionKind::Torus,
            3,
            vec![
                monomial_gen(&[2, 1, 3], &["0", "0", "0"]),
                monomial_gen(&[2, 3, 1], &["0", "0", "0"]),
            ],
        ),
        "s4-torus" => (
            ActionKind::Torus,
            4,
            vec![
                monomial_gen(&[2, 1, 3, 4], &["0", "0", "0", "0"]),
                monomial_gen(&[2, 3, 4, 1], &["0", "0", "0", "0"]),
            ],
        ),
        "m2" => (ActionKind::Findim, 2, Vec::new()),
        "m2-azumaya" => (ActionKind::Findim, 2, Vec::new()),
        _ => {
            return Err(Error::Config(format!(
                "unknown preset `{name}`; known presets: {}",
                PRESETS.join(", ")
            )))
        }
    };
    Ok(action)
}

/// Merge a config file, an optional preset and the flag overrides into a
/// validated job.
pub fn resolve(args: &JobArgs) -> Result<Job> {
    let mut file: JobConfig = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("invalid config {}: {e}", path.display())))?
        }
        None => JobConfig::default(),
    };
    if args.preset.is_some() && file.preset.is_some() {
        return Err(Error::Config("preset given both on the command line and in the config".into()));
    }
    let preset = args.preset.clone().or(file.preset.take());

    let (kind, n, generators) = match &preset {
        Some(name) => {
            if file.kind.is_some() || file.n.is_some() || file.generators.is_some() {
                return Err(Error::Config(
                    "a preset fixes kind, n and generators; drop those fields".into(),
                ));
            }
            preset_action(name)?
        }
        None => {
            let kind = file.kind.ok_or_else(|| {
                Error::Config("config needs `kind` (or use a preset)".into())
            })?;
            let n = file.n.ok_or_else(|| Error::Config("config needs `n`".into()))?;
            let generators = file
                .generators
                .ok_or_else(|| Error::Config("config needs `generators`".into()))?;
            (kind, n, generators)
        }
    };

    if n == 0 {
        return Err(Error::Config("n must be at least 1".into()));
    }
    match kind {
        ActionKind::Findim => {
            if preset.is_none() {
                return Err(Error::Config(
                    "findim actions are available through presets only".into(),
                ));
            }
        }
        _ if generators.is_empty() => {
            return Err(Error::Config("at least one generator is required".into()));
        }
        _ => {}
    }

    Ok(Job {
        kind,
        n,
        generators,
        preset,
        q_max: args.q_max.or(file.q_max).unwrap_or(3),
        d_max: args.d_max.or(file.d_max).unwrap_or(4),
        oracle: args.oracle || file.oracle.unwrap_or(false),
    })
}

fn parse_matrix(rows: &[Vec<String>], n: usize) -> Result<RationalMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Config(format!("generator matrix must be {n}x{n}")));
    }
    let mut m = RationalMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            m.set(i, j, parse_rational(entry)?);
        }
    }
    Ok(m)
}

/// Close the configured generators into a finite group.
pub fn build_group(job: &Job) -> Result<FiniteGroup> {
    let mut gens = Vec::with_capacity(job.generators.len());
    for spec in &job.generators {
        let g = match (job.kind, spec) {
            (ActionKind::Linear, GeneratorSpec::Matrix(rows)) => {
                GroupElement::linear(parse_matrix(rows, job.n)?)?
            }
            (ActionKind::Torus, GeneratorSpec::Monomial { perm, shift }) => {
                if perm.len() != job.n || shift.len() != job.n {
                    return Err(Error::Config(format!(
                        "monomial generator must have {} coordinates",
                        job.n
                    )));
                }
                let perm0: Vec<usize> = perm
                    .iter()
                    .map(|&p| {
                        (1..=job.n)
                            .contains(&p)
                            .then(|| p - 1)
                            .ok_or_else(|| Error::Config("permutation entries are 1-based".into()))
                    })
                    .collect::<Result<_>>()?;
                let shifts = shift.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
                GroupElement::monomial(perm0, shifts)?
            }
            (ActionKind::Linear, _) => {
                return Err(Error::Config("linear actions take matrix generators".into()))
            }
            (ActionKind::Torus, _) => {
                return Err(Error::Config(
                    "torus actions take {perm, shift} generators".into(),
                ))
            }
            (ActionKind::Findim, _) => {
                return Err(Error::Config("findim actions take no generators".into()))
            }
        };
        gens.push(g);
    }
    close_group(&gens, DEFAULT_GROUP_LIMIT)
}

/// The automorphism group behind a findim preset.
fn findim_group(base: &FinDimAlgebra, preset: &str, n: usize) -> Result<FiniteGroup> {
    let gens = match preset {
        "m2" => vec![base.automorphism(&RationalMatrix::identity(n * n))?],
        "m2-azumaya" => {
            // Conjugations by the order-2 units X = e01 + e10 and
            // Z = e00 - e11; their adjoint actions commute, giving (Z/2)^2.
            let x: SparseVec = vec![(1, crate::exactla::rat(1)), (2, crate::exactla::rat(1))];
            let z: SparseVec = vec![(0, crate::exactla::rat(1)), (3, crate::exactla::rat(-1))];
            vec![
                base.automorphism(&base.conjugation(&x)?)?,
                base.automorphism(&base.conjugation(&z)?)?,
            ]
        }
        _ => return Err(Error::Config(format!("unknown findim preset `{preset}`"))),
    };
    close_group(&gens, DEFAULT_GROUP_LIMIT)
}

/// Hochschild report for a findim preset via the structure-constant bar
/// complex.  These algebras are ungraded, so the tables have `d_max = 0`.
fn findim_report(job: &Job) -> Result<Report> {
    let preset = job
        .preset
        .as_deref()
        .ok_or_else(|| Error::Config("findim jobs are preset-only".into()))?;
    let base = FinDimAlgebra::matrix_algebra(job.n);
    let group = findim_group(&base, preset, job.n)?;
    let classes = group.conjugacy_classes();
    let crossed = FinDimCrossed::new(base, group.clone())?;
    let homology = findim_hh_dims(&crossed, job.q_max)?;

    let mut per_class = Vec::with_capacity(classes.len());
    let mut totals_table = DimTable::new(job.q_max, 0);
    for (class, dims) in classes.iter().zip(&homology.per_class) {
        let rep = class.representative;
        let mut entry = ClassEntry::new(
            group.element(rep).to_string(),
            class.members.len(),
            group.centralizer(rep).len(),
        );
        let mut table = DimTable::new(job.q_max, 0);
        for (q, &dim) in dims.iter().enumerate() {
            table.set(q, 0, dim);
        }
        totals_table.accumulate(&table);
        entry.hh = Some(table);
        per_class.push(entry);
    }
    Ok(Report {
        command: "hh".into(),
        config: serde_json::Value::Null,
        totals: Totals {
            group_order: group.order(),
            class_count: per_class.len(),
            hh: Some(totals_table),
            ..Totals::default()
        },
        per_class,
        timings: None,
    })
}

fn config_echo(job: &Job) -> serde_json::Value {
    let echo = JobConfig {
        preset: job.preset.clone(),
        kind: Some(job.kind),
        n: Some(job.n),
        generators: (!job.generators.is_empty()).then(|| job.generators.clone()),
        q_max: Some(job.q_max),
        d_max: Some(job.d_max),
        oracle: Some(job.oracle),
    };
    serde_json::to_value(echo).expect("config serializes")
}

/// Run one of the per-action commands and return the finished report.
pub fn job_report(command: &str, job: &Job) -> Result<Report> {
    let mut report = match (command, job.kind) {
        ("classes", ActionKind::Findim) => {
            let base = FinDimAlgebra::matrix_algebra(job.n);
            let preset = job.preset.as_deref().unwrap_or_default();
            crossprod::classes_report(&findim_group(&base, preset, job.n)?)?
        }
        ("classes", _) => crossprod::classes_report(&build_group(job)?)?,
        ("hh", ActionKind::Linear) => {
            crossprod::hh_graded_report(&build_group(job)?, job.q_max, job.d_max, job.oracle)?
        }
        ("hh", ActionKind::Findim) => findim_report(job)?,
        ("hh", ActionKind::Torus) => {
            return Err(Error::Config(
                "graded Hochschild tables need a linear or findim action".into(),
            ))
        }
        ("hc", ActionKind::Linear) => {
            crossprod::hc_graded_report(&build_group(job)?, job.q_max, job.d_max)?
        }
        ("hc", _) => {
            return Err(Error::Config("graded cyclic tables need a linear action".into()))
        }
        ("hp", ActionKind::Findim) => {
            return Err(Error::Config(
                "periodic reports need a linear or torus action".into(),
            ))
        }
        ("hp", _) => crossprod::hp_report(&build_group(job)?)?,
        _ => return Err(Error::Internal(format!("unknown command `{command}`"))),
    };
    report.config = config_echo(job);
    Ok(report)
}

fn emit_job(command: &str, args: &JobArgs) -> Result<()> {
    let start = Instant::now();
    let job = resolve(args)?;
    let mut report = job_report(command, &job)?;
    if args.timings {
        report.timings = Some(Timings { total_ms: start.elapsed().as_millis() });
    }
    print!("{report}");
    if let Some(path) = &args.json {
        fs::write(path, report.to_json())
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn emit_weyl(n: usize, check: bool, json: Option<&PathBuf>) -> Result<()> {
    let mut report = weyl::hp_weyl_formula(n)?;
    if check {
        report.cross_check = Some(weyl::weyl_cross_check(n)?);
    }
    print!("{report}");
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.cross_check == Some(false) {
        return Err(Error::Internal("Weyl cross-check disagreed".into()));
    }
    Ok(())
}

/// Dispatch a parsed command line.
pub fn run_command(command: &Command) -> Result<()> {
    match command {
        Command::Classes(args) => emit_job("classes", args),
        Command::Hh(args) => emit_job("hh", args),
        Command::Hc(args) => emit_job("hc", args),
        Command::Hp(args) => emit_job("hp", args),
        Command::Weyl { n, check, json } => emit_weyl(*n, *check, json.as_ref()),
        Command::Selftest => selftest::run_selftest(|line| println!("{line}")),
    }
}

/// Parse the process arguments, run, and map errors onto exit codes.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run_command(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
