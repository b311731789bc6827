//! The `segre-lab` command line: instance generation, batch verification,
//! partition certificates and the fixed reproduction scenarios.
//!
//! Instances are JSON with every number written as a string, so exact
//! rationals and residues survive a round trip unchanged. Reports carry no
//! timestamps or timings unless asked for, so equal inputs give
//! byte-identical output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact::ScalarField;
use crate::fatpoints::{
    ctv_decomposition_check, veronese_inequality_check, FatPoint, FatPointScheme,
};
use crate::generate::{self, SchemeShape};
use crate::matroid::{fat_point_vector_matroid, RankOracle, VectorMatroid};
use crate::par::{map_ordered, Execution};
use crate::partition::{
    avoidance_partition, edmonds_partition, verify_partition_optimality_example, AvoidanceProblem,
    PartitionOutcome,
};
use crate::segre::{
    cardinality_estimate_check, modified_bound, rational_normal_curve_sharpness,
    reproduce_generic_example, segre_bound, verify_main_theorem,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

const TOOL: &str = "segre-lab";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "segre-lab",
    version,
    about = "Exact experiments on fat point schemes and the Segre bound"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Generic,
    CollinearCluster,
    RationalNormalCurve,
    #[value(name = "example-2.8")]
    Example28,
    #[value(name = "example-5.6-scaled")]
    Example56Scaled,
}

impl GenKind {
    fn name(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::Generic => "generic",
            GenKind::CollinearCluster => "collinear-cluster",
            GenKind::RationalNormalCurve => "rational-normal-curve",
            GenKind::Example28 => "example-2.8",
            GenKind::Example56Scaled => "example-5.6-scaled",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Main,
    Cardinality,
    Ctv,
    Veronese,
    Modified,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Cardinality => "cardinality",
            Check::Ctv => "ctv",
            Check::Veronese => "veronese",
            Check::Modified => "modified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionMode {
    Edmonds,
    Avoidance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    #[value(name = "2.8")]
    Optimality,
    #[value(name = "4.6-sharpness")]
    Sharpness,
    #[value(name = "5.4-veronese")]
    Veronese,
    #[value(name = "5.6-generic")]
    Generic,
}

impl Scenario {
    fn id(self) -> &'static str {
        match self {
            Scenario::Optimality => "2.8",
            Scenario::Sharpness => "4.6-sharpness",
            Scenario::Veronese => "5.4-veronese",
            Scenario::Generic => "5.6-generic",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Seed of the ChaCha8 generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `rational` or `prime:<p>`.
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance file (a JSON array when --count > 1).
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Ambient dimension n.
        #[arg(short = 'n', long, default_value_t = 2)]
        dim: usize,
        /// Number of support points.
        #[arg(short = 's', long, default_value_t = 4)]
        support: usize,
        /// Uniform multiplicity, or the maximum for `random`.
        #[arg(short = 'm', long, default_value_t = 1)]
        mult: u32,
        /// Explicit multiplicities for `rational-normal-curve`.
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<u32>>,
        #[arg(short = 'd', long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 4)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        /// Override the number of generic points of `example-5.6-scaled`.
        #[arg(long)]
        generic: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run checks on every instance of a file.
    Verify {
        instance: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        /// Degrees for the Veronese and modified-bound checks.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2])]
        degrees: Vec<usize>,
        #[arg(long)]
        sequential: bool,
        /// Record wall-clock times in the report.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Partition the columns of a matrix file or the matroid of an instance.
    Partition {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PartitionMode::Edmonds)]
        mode: PartitionMode,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
        /// Elements to partition; all by default.
        #[arg(long, value_delimiter = ',')]
        ground: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        pinned: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        tail: Vec<usize>,
        #[arg(long)]
        trust_hypothesis: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a fixed scenario end to end.
    Reproduce {
        #[arg(value_enum)]
        id: Scenario,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(short = 'd', long)]
        degree: Option<usize>,
        #[arg(short = 'm', long)]
        mult: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    pub coords: Vec<String>,
    pub mult: String,
}

/// A fat point scheme on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub field: String,
    pub ambient_dim: String,
    pub points: Vec<PointEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl InstanceFile {
    pub fn from_scheme(x: &FatPointScheme, seed: Option<u64>, generator: Option<&str>) -> Self {
        InstanceFile {
            field: x.field().to_string(),
            ambient_dim: x.ambient_dim().to_string(),
            points: x
                .points()
                .iter()
                .map(|p| PointEntry {
                    coords: p.coords.iter().map(|c| c.to_string()).collect(),
                    mult: p.mult.to_string(),
                })
                .collect(),
            seed: seed.map(|s| s.to_string()),
            generator: generator.map(str::to_string),
        }
    }

    pub fn to_scheme(&self) -> anyhow::Result<FatPointScheme> {
        let field: ScalarField = self.field.parse()?;
        let n: usize = self
            .ambient_dim
            .parse()
            .with_context(|| format!("ambient_dim {:?}", self.ambient_dim))?;
        let points = self
            .points
            .iter()
            .map(|p| {
                let coords = p
                    .coords
                    .iter()
                    .map(|c| field.parse(c))
                    .collect::<Result<Vec<_>, _>>()?;
                let mult: u32 = p
                    .mult
                    .parse()
                    .with_context(|| format!("multiplicity {:?}", p.mult))?;
                Ok(FatPoint::new(coords, mult))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(FatPointScheme::new(field, n, points)?)
    }
}

/// Column vectors on disk, for partition runs on arbitrary matroids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub field: String,
    pub vectors: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn to_matroid(&self) -> anyhow::Result<VectorMatroid> {
        let field: ScalarField = self.field.parse()?;
        let columns = self
            .vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| field.parse(c))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if columns.windows(2).any(|w| w[0].len() != w[1].len()) {
            bail!("all vectors must have the same length");
        }
        Ok(VectorMatroid::from_columns(field, &columns)?)
    }
}

/// Reads one instance or an array of instances.
pub fn read_instances(path: &Path) -> anyhow::Result<Vec<InstanceFile>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let files = if value.is_array() {
        serde_json::from_value(value)?
    } else {
        vec![serde_json::from_value(value)?]
    };
    Ok(files)
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(inner) if inner.is_guard() => EXIT_GUARD,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Gen {
            kind,
            dim,
            support,
            mult,
            mults,
            degree,
            t,
            k,
            p,
            generic,
            count,
            common,
        } => {
            let field: ScalarField = common.field.parse()?;
            let mut rng = generate::rng_from_seed(common.seed);
            let mut files = Vec::with_capacity(count);
            for _ in 0..count {
                let x = match kind {
                    GenKind::Random => generate::random_scheme(
                        &mut rng,
                        SchemeShape {
                            ambient_dim: dim,
                            support,
                            max_mult: mult,
                        },
                    )?,
                    GenKind::Generic => generate::generic_scheme(&mut rng, dim, support, mult)?,
                    GenKind::CollinearCluster => generate::collinear_cluster(dim, support, mult)?,
                    GenKind::RationalNormalCurve => {
                        let mults = mults.clone().unwrap_or_else(|| vec![mult; support]);
                        generate::rational_normal_curve(dim, &mults)?
                    }
                    GenKind::Example28 => generate::optimality_example_scheme(t, k, p)?,
                    GenKind::Example56Scaled => {
                        generate::generic_example_scheme(&mut rng, dim, degree, mult, 5, generic)?
                    }
                };
                let x = change_field(&x, field)?;
                if kind == GenKind::Generic && !generate::scheme_in_general_position(&x) {
                    bail!("points are not in general position over {field}");
                }
                files.push(InstanceFile::from_scheme(
                    &x,
                    Some(common.seed),
                    Some(kind.name()),
                ));
            }
            let text = if files.len() == 1 {
                serde_json::to_string_pretty(&files[0])?
            } else {
                serde_json::to_string_pretty(&files)?
            };
            emit(&common.out, &text)?;
            Ok(EXIT_PASS)
        }
        Command::Verify {
            instance,
            checks,
            degrees,
            sequential,
            timings,
            common,
        } => {
            let files = read_instances(&instance)?;
            let schemes = files
                .iter()
                .enumerate()
                .map(|(i, f)| f.to_scheme().with_context(|| format!("instance {i}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            if degrees.contains(&0) {
                bail!("degrees must be positive");
            }
            let checks = checks.unwrap_or_else(|| {
                vec![
                    Check::Main,
                    Check::Cardinality,
                    Check::Ctv,
                    Check::Veronese,
                    Check::Modified,
                ]
            });
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let reports = map_ordered(exec, &schemes, |x| {
                verify_instance(x, &checks, &degrees, timings)
            });
            let instances: Vec<Value> = reports
                .iter()
                .enumerate()
                .map(|(i, checks)| {
                    json!({
                        "index": i,
                        "seed": files[i].seed,
                        "generator": files[i].generator,
                        "checks": checks,
                    })
                })
                .collect();
            let outcomes: Vec<&CheckOutcome> = reports.iter().flatten().collect();
            let report = run_report(&common, "verify", instances, &outcomes);
            emit(&common.out, &render(&report, &outcomes, common.format))?;
            Ok(exit_code(&outcomes))
        }
        Command::Partition {
            input,
            mode,
            k,
            p,
            ground,
            pinned,
            tail,
            trust_hypothesis,
            common,
        } => run_partition(
            &input,
            mode,
            k,
            p,
            ground,
            pinned,
            tail,
            trust_hypothesis,
            &common,
        ),
        Command::Reproduce {
            id,
            t,
            k,
            p,
            degree,
            mult,
            common,
        } => {
            let outcomes = match id {
                Scenario::Optimality => {
                    reproduce_optimality(t.unwrap_or(4), k.unwrap_or(3), p.unwrap_or(1))
                }
                Scenario::Sharpness => reproduce_sharpness(),
                Scenario::Veronese => reproduce_veronese(degree.unwrap_or(2)),
                Scenario::Generic => {
                    reproduce_generic(common.seed, degree.unwrap_or(2), mult.unwrap_or(1))
                }
            };
            let refs: Vec<&CheckOutcome> = outcomes.iter().collect();
            let mut report = run_report(&common, "reproduce", vec![], &refs);
            report["scenario"] = json!(id.id());
            report["assertions"] = json!(outcomes);
            report
                .as_object_mut()
                .expect("report is an object")
                .remove("instances");
            emit(&common.out, &render(&report, &refs, common.format))?;
            Ok(exit_code(&refs))
        }
    }
}

fn change_field(x: &FatPointScheme, field: ScalarField) -> anyhow::Result<FatPointScheme> {
    if field == x.field() {
        return Ok(x.clone());
    }
    FatPointScheme::new(field, x.ambient_dim(), x.points().to_vec())
        .with_context(|| format!("instance does not survive reduction to {field}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: Value,
}

impl CheckOutcome {
    fn verdict(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        CheckOutcome {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn from_result(name: impl Into<String>, result: crate::error::Result<(bool, Value)>) -> Self {
        let name = name.into();
        match result {
            Ok((passed, detail)) => CheckOutcome::verdict(name, passed, detail),
            Err(e) if e.is_guard() => CheckOutcome {
                name,
                status: Status::Skipped,
                detail: json!({ "reason": e.to_string() }),
            },
            Err(e) => CheckOutcome {
                name,
                status: Status::Fail,
                detail: json!({ "error": e.to_string() }),
            },
        }
    }

    fn not_applicable(name: impl Into<String>, reason: &str) -> Self {
        CheckOutcome {
            name: name.into(),
            status: Status::NotApplicable,
            detail: json!({ "reason": reason }),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs the selected checks on one scheme.
pub fn verify_instance(
    x: &FatPointScheme,
    checks: &[Check],
    degrees: &[usize],
    timings: bool,
) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for &check in checks {
        let start = Instant::now();
        let mut outcomes = match check {
            Check::Main => vec![CheckOutcome::from_result(
                check.name(),
                verify_main_theorem(x).map(|r| (r.verdict, to_value(&r))),
            )],
            Check::Cardinality => vec![CheckOutcome::from_result(
                check.name(),
                cardinality_estimate_check(x).map(|r| (r.holds(), to_value(&r))),
            )],
            Check::Ctv => {
                if x.support_size() < 2 {
                    vec![CheckOutcome::not_applicable(
                        check.name(),
                        "needs two support points",
                    )]
                } else {
                    let last = x.points().last().expect("nonempty");
                    let mut mults = x.multiplicities();
                    *mults.last_mut().expect("nonempty") = 0;
                    let result = x.subscheme(&mults).and_then(|z| {
                        ctv_decomposition_check(&z, &last.coords, last.mult)
                            .map(|r| (r.holds, to_value(&r)))
                    });
                    vec![CheckOutcome::from_result(check.name(), result)]
                }
            }
            Check::Veronese => degrees
                .iter()
                .map(|&d| {
                    CheckOutcome::from_result(
                        format!("veronese-d{d}"),
                        veronese_inequality_check(x, d).map(|r| (r.passed(), to_value(&r))),
                    )
                })
                .collect(),
            Check::Modified => {
                if x.support_size() < 2 {
                    vec![CheckOutcome::not_applicable(
                        check.name(),
                        "needs two support points",
                    )]
                } else {
                    degrees
                        .iter()
                        .map(|&d| {
                            let result = (|| {
                                let r = x.regularity_index()?;
                                let bound = modified_bound(x, d)?;
                                let mut passed = r <= bound.value;
                                let mut detail = json!({ "reg_index": r, "bound": bound });
                                if d == 1 {
                                    let (seg, _) = segre_bound(x)?;
                                    passed &= bound.value == seg;
                                    detail["segre"] = json!(seg);
                                }
                                Ok((passed, detail))
                            })();
                            CheckOutcome::from_result(format!("modified-d{d}"), result)
                        })
                        .collect()
                }
            }
        };
        if timings {
            let ms = start.elapsed().as_millis() as u64;
            for o in &mut outcomes {
                o.detail["elapsed_ms"] = json!(ms);
            }
        }
        out.extend(outcomes);
    }
    out
}

fn run_report(
    common: &Common,
    command: &str,
    instances: Vec<Value>,
    outcomes: &[&CheckOutcome],
) -> Value {
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "seed": common.seed.to_string(),
        "field": common.field,
        "instances": instances,
        "totals": {
            "pass": count(Status::Pass),
            "fail": count(Status::Fail),
            "skipped": count(Status::Skipped),
            "not_applicable": count(Status::NotApplicable),
        },
    })
}

fn exit_code(outcomes: &[&CheckOutcome]) -> i32 {
    if outcomes.iter().any(|o| o.status == Status::Fail) {
        EXIT_FAIL
    } else if outcomes.iter().any(|o| o.status == Status::Skipped) {
        EXIT_GUARD
    } else {
        EXIT_PASS
    }
}

fn render(report: &Value, outcomes: &[&CheckOutcome], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("json value"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["row", "check", "status", "detail"])
                .expect("in-memory write");
            for (i, o) in outcomes.iter().enumerate() {
                w.write_record([
                    i.to_string(),
                    o.name.clone(),
                    o.status.as_str().into(),
                    o.detail.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Table => {
            let width = outcomes
                .iter()
                .map(|o| o.name.len())
                .max()
                .unwrap_or(5)
                .max(5);
            let mut s = String::new();
            let _ = writeln!(s, "{:<5} {:<width$} status", "row", "check");
            for (i, o) in outcomes.iter().enumerate() {
                let _ = writeln!(s, "{:<5} {:<width$} {}", i, o.name, o.status.as_str());
            }
            let totals = &report["totals"];
            let _ = writeln!(
                s,
                "pass {} / fail {} / skipped {} / n.a. {}",
                totals["pass"], totals["fail"], totals["skipped"], totals["not_applicable"]
            );
            s
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Either a matrix file or an instance file, whose matroid has `m_i`
/// parallel columns per point.
fn load_matroid(path: &Path) -> anyhow::Result<VectorMatroid> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("vectors").is_some() {
        let file: MatrixFile = serde_json::from_value(value)?;
        file.to_matroid()
    } else {
        let file: InstanceFile = serde_json::from_value(value)?;
        Ok(fat_point_vector_matroid(&file.to_scheme()?)?)
    }
}

#[allow(clippy::too_many_arguments)]
fn run_partition(
    input: &Path,
    mode: PartitionMode,
    k: usize,
    p: usize,
    ground: Option<Vec<usize>>,
    pinned: Vec<usize>,
    tail: Vec<usize>,
    trust_hypothesis: bool,
    common: &Common,
) -> anyhow::Result<i32> {
    let matroid = load_matroid(input)?;
    let mut report = json!({
        "tool": TOOL,
        "version": VERSION,
        "command": "partition",
        "mode": match mode { PartitionMode::Edmonds => "edmonds", PartitionMode::Avoidance => "avoidance" },
        "k": k,
        "p": p,
    });
    let result = match mode {
        PartitionMode::Edmonds => {
            if ground.is_some() || !pinned.is_empty() || !tail.is_empty() || p != 0 {
                bail!("edmonds mode takes only k");
            }
            edmonds_partition(&matroid, k)
        }
        PartitionMode::Avoidance => {
            let problem = AvoidanceProblem {
                ambient: &matroid,
                ground: ground.unwrap_or_else(|| matroid.ground().elements().collect()),
                k,
                p,
                pinned,
                tail,
                trust_hypothesis,
            };
            avoidance_partition(&problem).map(PartitionOutcome::Partition)
        }
    };
    let code = match result {
        Ok(PartitionOutcome::Partition(cert)) => {
            let copies: Vec<&dyn RankOracle> = vec![&matroid; cert.blocks.len().max(1)];
            let verified = cert.verify(&copies);
            report["outcome"] = json!("partition");
            report["certificate"] = to_value(&cert);
            report["verified"] = json!(verified.is_ok());
            if let Err(defect) = verified {
                report["defect"] = json!(defect.to_string());
                EXIT_FAIL
            } else {
                EXIT_PASS
            }
        }
        Ok(PartitionOutcome::Infeasible(witness)) => {
            report["outcome"] = json!("infeasible");
            report["witness"] = json!(witness);
            report["witness_rank"] = json!(matroid.rank(&witness));
            EXIT_INFEASIBLE
        }
        Err(Error::HypothesisViolated { witness }) => {
            report["outcome"] = json!("hypothesis-violated");
            report["witness"] = json!(witness);
            report["witness_rank"] = json!(matroid.rank(&witness));
            EXIT_INFEASIBLE
        }
        Err(e) => return Err(anyhow!(e)),
    };
    let text = match common.format {
        Format::Json => serde_json::to_string_pretty(&report)?,
        Format::Csv | Format::Table => partition_table(&report),
    };
    emit(&common.out, &text)?;
    Ok(code)
}

fn partition_table(report: &Value) -> String {
    let mut s = format!("outcome {}\n", report["outcome"].as_str().unwrap_or("?"));
    if let Some(blocks) = report["certificate"]["blocks"].as_array() {
        for (j, b) in blocks.iter().enumerate() {
            let _ = writeln!(s, "block {j}: {b}");
        }
    }
    if let Some(w) = report.get("witness") {
        let _ = writeln!(s, "witness: {w}");
    }
    s
}

fn reproduce_optimality(t: usize, k: usize, p: usize) -> Vec<CheckOutcome> {
    match verify_partition_optimality_example(t, k, p) {
        Ok(v) => vec![
            CheckOutcome::verdict(
                "hypothesis holds on every nonempty subset",
                v.hypothesis_holds,
                json!({ "witness": v.hypothesis_witness, "ground_size": v.ground_size, "rank": v.rank }),
            ),
            CheckOutcome::verdict(
                "no small independent set leaves a (k-1, p) remainder",
                v.qualifying_set.is_none(),
                json!({ "candidates_checked": v.candidates_checked, "found": v.qualifying_set }),
            ),
        ],
        Err(e) => vec![CheckOutcome::from_result("example parameters", Err(e))],
    }
}

/// Uniform multiplicities on rational normal curves in `P^1..P^3`.
pub fn sharpness_configurations() -> Vec<(usize, Vec<u32>)> {
    let mut configs = Vec::new();
    for n in 1..=3usize {
        for s in 1..=(n + 3) {
            for m in 1..=3u32 {
                if n == 3 && s * m as usize > 12 {
                    continue;
                }
                configs.push((n, vec![m; s]));
            }
        }
    }
    configs
}

fn reproduce_sharpness() -> Vec<CheckOutcome> {
    let configs = sharpness_configurations();
    map_ordered(Execution::Parallel, &configs, |(n, mults)| {
        let name = format!("n={n} mults={mults:?}");
        let result = rational_normal_curve_sharpness(mults, *n).map(|r| {
            let passed = r.bound.verdict && r.sharp != Some(false);
            (passed, to_value(&r))
        });
        CheckOutcome::from_result(name, result)
    })
}

fn reproduce_veronese(d: usize) -> Vec<CheckOutcome> {
    let cases: Vec<Vec<(Vec<i64>, u32)>> = vec![
        vec![(vec![1, 0], 1), (vec![1, 1], 1), (vec![1, 2], 1)],
        vec![(vec![1, 0], 2), (vec![1, 1], 2), (vec![1, 2], 1)],
        vec![
            (vec![1, 0], 3),
            (vec![0, 1], 2),
            (vec![1, 1], 2),
            (vec![1, 3], 1),
        ],
        vec![(vec![1, 0, 0], 2), (vec![0, 1, 0], 1), (vec![0, 0, 1], 2)],
    ];
    cases
        .iter()
        .map(|pts| {
            let n = pts[0].0.len() - 1;
            let refs: Vec<(&[i64], u32)> = pts.iter().map(|(c, m)| (c.as_slice(), *m)).collect();
            let name = format!(
                "n={n} d={d} mults={:?}",
                pts.iter().map(|p| p.1).collect::<Vec<_>>()
            );
            let result = FatPointScheme::from_integers(n, &refs)
                .and_then(|x| veronese_inequality_check(&x, d))
                .map(|r| (r.passed(), to_value(&r)));
            CheckOutcome::from_result(name, result)
        })
        .collect()
}

fn reproduce_generic(seed: u64, d: usize, m: u32) -> Vec<CheckOutcome> {
    let mut rng = generate::rng_from_seed(seed);
    let result = generate::generic_example_scheme(&mut rng, 2, d, m, 5, None)
        .and_then(|x| reproduce_generic_example(&x, d, 5));
    match result {
        Ok(r) => vec![
            CheckOutcome::verdict("r(X) <= seg X", r.regularity_below_segre, to_value(&r)),
            CheckOutcome::verdict(
                format!("r(X) <= modified bound at d={d}"),
                r.regularity_below_modified,
                json!({ "reg_index": r.reg_index, "modified": r.modified, "improves_on_segre": r.modified_improves }),
            ),
            CheckOutcome::verdict(
                "modified bound at d=1 equals seg X",
                r.modified_at_one == r.segre,
                json!({ "modified_at_one": r.modified_at_one, "segre": r.segre }),
            ),
        ],
        Err(e) => vec![CheckOutcome::from_result("generic example", Err(e))],
    }
}
