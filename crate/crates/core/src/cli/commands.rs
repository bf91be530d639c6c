use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::format::{nums, Num};
use super::geometry::GeometryBundle;
use super::spec::StateSpec;
use crate::bd::{classify, density_matrix, density_matrix_from_projectors, twirl_density, BdState, Region};
use crate::error::Error;
use crate::linalg::hermitian_eigenvalues;
use crate::measures::{concurrence, concurrence_wootters, mixing_residual, random_robustness, robustness};
use crate::oracle::{
    absolute_robustness_search, is_ppt, min_pt_eigenvalue, random_robustness_numeric, sample_state, Claim,
    OracleReport, SeparableMixer,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NUMERIC: u8 = 2;

/// Everything a command produced; `main` forwards it to the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_INPUT }
    }

    fn numeric_error(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_NUMERIC }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bellgeom", version, about = "Entanglement geometry of Bell-diagonal two-qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Region, concurrence, robustness and random robustness of a state.
    Measures {
        /// JSON state spec file, or `-` for standard input.
        #[arg(long)]
        state: PathBuf,
    },
    /// Certify the closed forms with the PPT-bisection oracle.
    Verify {
        #[arg(long)]
        state: PathBuf,
        /// Random product-state mixers to try.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Lattice points per axis for Bell-diagonal mixers.
        #[arg(long, default_value_t = 21)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bisection width and lower-bound slack.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Emit tetrahedron/octahedron geometry, plus a state's optimal segment.
    Geometry {
        #[arg(long)]
        state: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: GeometryFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the invariant suite over uniformly sampled states.
    Batch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Tolerance for eigenvalue-based checks.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Print a random state spec.
    Sample {
        #[arg(long)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome { stdout: String::new(), stderr: rendered, code: EXIT_INPUT },
            };
        }
    };
    match cli.command {
        Command::Measures { state } => with_state(&state, stdin, |s| cmd_measures(&s)),
        Command::Verify { state, samples, grid, seed, tol } => {
            with_state(&state, stdin, |s| cmd_verify(&s, samples, grid, seed, tol))
        }
        Command::Geometry { state, format, out } => {
            let spec = match state.as_deref().map(|p| StateSpec::load(p, stdin)).transpose() {
                Ok(spec) => spec,
                Err(msg) => return Outcome::input_error(msg),
            };
            cmd_geometry(spec.as_ref(), format, &out)
        }
        Command::Batch { n, seed, tol } => cmd_batch(n, seed, tol),
        Command::Sample { seed } => cmd_sample(seed),
    }
}

fn with_state(path: &Path, stdin: &mut dyn Read, f: impl FnOnce(StateSpec) -> Outcome) -> Outcome {
    match StateSpec::load(path, stdin) {
        Ok(spec) => f(spec),
        Err(msg) => Outcome::input_error(msg),
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable record");
    s.push('\n');
    s
}

fn region_label(r: Region) -> String {
    r.to_string()
}

#[derive(Serialize)]
struct MeasuresRecord {
    p: [Num; 4],
    t: [Num; 3],
    region: String,
    level: Num,
    concurrence: Num,
    robustness: Num,
    t_prime: [Num; 3],
    t_double_prime: [Num; 3],
    random_robustness: Num,
}

pub fn cmd_measures(spec: &StateSpec) -> Outcome {
    let s = match spec.to_state() {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    let cert = robustness(&s);
    Outcome::ok(to_json(&MeasuresRecord {
        p: nums(s.p()),
        t: nums(s.t()),
        region: region_label(cert.region),
        level: Num(cert.level),
        concurrence: Num(concurrence(&s)),
        robustness: Num(cert.s),
        t_prime: nums(cert.t_prime.components()),
        t_double_prime: nums(cert.t_double_prime.components()),
        random_robustness: Num(random_robustness(&s)),
    }))
}

#[derive(Serialize)]
struct TermRecord {
    weight: Num,
    a: [[Num; 2]; 2],
    b: [[Num; 2]; 2],
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum MixerRecord {
    BdPoint { t: [Num; 3] },
    ProductMixture { terms: Vec<TermRecord> },
}

impl From<&SeparableMixer<f64>> for MixerRecord {
    fn from(m: &SeparableMixer<f64>) -> Self {
        match m {
            SeparableMixer::BdPoint(t) => MixerRecord::BdPoint { t: nums(t.components()) },
            SeparableMixer::ProductMixture(terms) => MixerRecord::ProductMixture {
                terms: terms
                    .iter()
                    .map(|t| TermRecord {
                        weight: Num(t.weight),
                        a: t.a.map(|z| [Num(z.re), Num(z.im)]),
                        b: t.b.map(|z| [Num(z.re), Num(z.im)]),
                    })
                    .collect(),
            },
        }
    }
}

#[derive(Serialize)]
struct GridRecord {
    grid_n: usize,
    points: usize,
    best: Num,
    bound: Num,
}

#[derive(Serialize)]
struct ReportRecord {
    claim: &'static str,
    valid: bool,
    closed_form: Num,
    numeric_value: Num,
    gap: Num,
    samples_tried: usize,
    tolerance: Num,
    witness: Option<MixerRecord>,
    grid: Option<GridRecord>,
}

impl From<&OracleReport<f64>> for ReportRecord {
    fn from(r: &OracleReport<f64>) -> Self {
        Self {
            claim: match r.claim {
                Claim::Equality => "equality",
                Claim::LowerBound => "lower_bound",
            },
            valid: r.is_valid(),
            closed_form: Num(r.closed_form),
            numeric_value: Num(r.numeric_value),
            gap: Num(r.gap),
            samples_tried: r.samples_tried,
            tolerance: Num(r.tolerance),
            witness: r.witness.as_ref().map(MixerRecord::from),
            grid: r.grid.map(|g| GridRecord {
                grid_n: g.grid_n,
                points: g.points,
                best: Num(g.best),
                bound: Num(g.bound),
            }),
        }
    }
}

#[derive(Serialize)]
struct VerifyRecord {
    p: [Num; 4],
    t: [Num; 3],
    region: String,
    seed: u64,
    valid: bool,
    random_robustness: ReportRecord,
    absolute_robustness: Option<ReportRecord>,
}

pub fn cmd_verify(spec: &StateSpec, samples: usize, grid: usize, seed: u64, tol: f64) -> Outcome {
    if !(tol > 0.0 && tol.is_finite()) {
        return Outcome::input_error(format!("--tol must be positive and finite, got {tol}"));
    }
    if samples == 0 && grid == 0 {
        return Outcome::input_error("at least one of --samples and --grid must be nonzero");
    }
    let s = match spec.to_state() {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    let region = classify(&s);
    let random = match random_robustness_numeric(&s, tol) {
        Ok(r) => r,
        Err(e) => return Outcome::numeric_error(e.to_string()),
    };
    let absolute = match region {
        Region::Separable => None,
        Region::Entangled(_) => match absolute_robustness_search(&s, samples, grid, seed, tol) {
            Ok(r) => Some(r),
            Err(e) => return Outcome::numeric_error(e.to_string()),
        },
    };
    let first_failure = if !random.is_valid() {
        Some("random_robustness")
    } else if absolute.as_ref().is_some_and(|r| !r.is_valid()) {
        Some("absolute_robustness")
    } else {
        None
    };
    let record = VerifyRecord {
        p: nums(s.p()),
        t: nums(s.t()),
        region: region_label(region),
        seed,
        valid: first_failure.is_none(),
        random_robustness: ReportRecord::from(&random),
        absolute_robustness: absolute.as_ref().map(ReportRecord::from),
    };
    let stdout = to_json(&record);
    match first_failure {
        None => Outcome::ok(stdout),
        Some(name) => {
            let failing = if name == "random_robustness" { &random } else { absolute.as_ref().expect("present") };
            Outcome {
                stdout,
                stderr: format!(
                    "error: {name} certification failed: numeric {} vs closed form {} (gap {}, tolerance {})\n",
                    failing.numeric_value, failing.closed_form, failing.gap, failing.tolerance
                ),
                code: EXIT_NUMERIC,
            }
        }
    }
}

pub fn cmd_geometry(spec: Option<&StateSpec>, format: GeometryFormat, out: &Path) -> Outcome {
    let state = match spec.map(StateSpec::to_state).transpose() {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    let bundle = GeometryBundle::new(state.as_ref());
    let text = match format {
        GeometryFormat::Csv => bundle.to_csv(),
        GeometryFormat::Json => bundle.to_json(),
    };
    match std::fs::write(out, text) {
        Ok(()) => Outcome::ok(String::new()),
        Err(e) => Outcome::input_error(format!("cannot write {}: {e}", out.display())),
    }
}

/// Names of the per-state checks run by `batch`, in report order.
pub const BATCH_CHECKS: [&str; 8] = [
    "robustness_equals_concurrence",
    "wootters_agreement",
    "ppt_equivalence",
    "twirl_round_trip",
    "projector_construction",
    "mixing_identity",
    "boundary_saturation",
    "random_robustness_boundary",
];

fn run_checks(s: &BdState<f64>, tol: f64) -> Result<Vec<&'static str>, Error> {
    let mut failed = Vec::new();
    let mut check = |name: &'static str, ok: bool| {
        if !ok {
            failed.push(name);
        }
    };
    let rho = density_matrix(s);
    let cert = robustness(s);
    let c = concurrence(s);
    let region = classify(s);

    check(
        BATCH_CHECKS[0],
        cert.s == c && random_robustness(s) == 2.0 * cert.s,
    );
    check(BATCH_CHECKS[1], (concurrence_wootters(&rho)? - c).abs() <= tol);
    if (s.level() - 1.0).abs() > 1e-8 {
        check(BATCH_CHECKS[2], is_ppt(&rho, 1e-10)? == (region == Region::Separable));
    }
    let back = twirl_density(&rho)?;
    check(
        BATCH_CHECKS[3],
        back.t().iter().zip(s.t()).all(|(a, b)| (a - b).abs() <= 1e-13),
    );
    check(
        BATCH_CHECKS[4],
        rho.matrix().approx_eq(density_matrix_from_projectors(s).matrix(), 1e-13),
    );

    if region.is_entangled() {
        check(BATCH_CHECKS[5], mixing_residual(s, &cert) <= 1e-12);

        let prime = density_matrix(&cert.prime_state());
        let double_prime = density_matrix(&cert.double_prime_state());
        let pt_prime = min_pt_eigenvalue(prime.matrix())?;
        let pt_double = min_pt_eigenvalue(double_prime.matrix())?;
        let own_double = hermitian_eigenvalues(double_prime.matrix(), 1e-12)?[0];
        // t′ is PT-saturated; t″ sits on the state-space boundary of the octahedron
        let on_boundary = (cert.t_prime.l1_norm() - 1.0).abs() <= 1e-12
            && (cert.t_double_prime.l1_norm() - 1.0).abs() <= 1e-12
            && pt_prime.abs() <= tol
            && pt_double >= -tol
            && own_double >= -tol
            && pt_double.min(own_double).abs() <= tol;
        check(BATCH_CHECKS[6], on_boundary);

        let s0 = random_robustness(s);
        let mixed = rho.mix(&crate::linalg::DensityMatrix::maximally_mixed(), s0);
        check(BATCH_CHECKS[7], min_pt_eigenvalue(mixed.matrix())?.abs() <= tol);
    }
    Ok(failed)
}

#[derive(Serialize)]
struct Counterexample {
    t: [Num; 3],
    failed: Vec<&'static str>,
}

#[derive(Serialize)]
struct CheckCount {
    check: &'static str,
    failures: usize,
}

#[derive(Serialize)]
struct BatchRecord {
    n: usize,
    seed: u64,
    tol: Num,
    generator: &'static str,
    passed: usize,
    failed: usize,
    entangled: usize,
    check_failures: Vec<CheckCount>,
    counterexamples: Vec<Counterexample>,
}

/// Summary record and exit code of `batch`, without the I/O wrapper.
pub fn batch_report(n: usize, seed: u64, tol: f64) -> Result<(String, bool), String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(format!("--tol must be positive and finite, got {tol}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut record = BatchRecord {
        n,
        seed,
        tol: Num(tol),
        generator: "ChaCha8Rng, uniform on [-1,1]^3 rejected to the tetrahedron",
        passed: 0,
        failed: 0,
        entangled: 0,
        check_failures: BATCH_CHECKS.iter().map(|c| CheckCount { check: c, failures: 0 }).collect(),
        counterexamples: Vec::new(),
    };
    for _ in 0..n {
        let s: BdState<f64> = sample_state(&mut rng);
        if classify(&s).is_entangled() {
            record.entangled += 1;
        }
        let failed = run_checks(&s, tol).unwrap_or_else(|_| vec!["numerical_error"]);
        if failed.is_empty() {
            record.passed += 1;
            continue;
        }
        record.failed += 1;
        for name in &failed {
            if let Some(slot) = record.check_failures.iter_mut().find(|c| c.check == *name) {
                slot.failures += 1;
            }
        }
        if record.counterexamples.len() < 10 {
            record.counterexamples.push(Counterexample { t: nums(s.t()), failed });
        }
    }
    let ok = record.failed == 0;
    Ok((to_json(&record), ok))
}

pub fn cmd_batch(n: usize, seed: u64, tol: f64) -> Outcome {
    match batch_report(n, seed, tol) {
        Ok((stdout, true)) => Outcome::ok(stdout),
        Ok((stdout, false)) => Outcome {
            stdout,
            stderr: "error: invariant suite reported failures\n".into(),
            code: EXIT_NUMERIC,
        },
        Err(msg) => Outcome::input_error(msg),
    }
}

#[derive(Serialize)]
struct SampleRecord {
    t: [Num; 3],
}

/// A uniformly random state of the tetrahedron as a `{"t": [...]}` spec.
pub fn cmd_sample(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s: BdState<f64> = sample_state(&mut rng);
    Outcome::ok(to_json(&SampleRecord { t: nums(s.t()) }))
}
