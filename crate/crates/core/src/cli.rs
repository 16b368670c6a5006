//! The `chromalie` command-line front end.
//!
//! [`run`] is the whole program minus process exit: it parses arguments,
//! performs file IO and returns the exit code with the captured output.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::algebra::{check_evenness, is_even_map, EvenMap, Flavor, GradedAlgebra};
use crate::axioms::{check_morphism, SubgroupTag, Verifier};
use crate::constructions::{commutator_algebra, endo_twist_bracket, endo_twist_mult, sigma_twist, SigmaMode};
use crate::corpus::{self, CorpusId};
use crate::error::Error;
use crate::io;
use crate::report::ViolationReport;
use crate::Rational;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chromalie", version, about = "Verify and construct color and Hom-Lie color algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the identities required by the algebra's flavor.
    Verify {
        /// Algebra file, or a built-in example id.
        file: String,
        /// Run every available check instead of the flavor's suite.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Fill missing products from eps-skew symmetry before checking.
        #[arg(long)]
        skew_complete: bool,
        /// Worker threads used for the triple scans.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Twist by an even endomorphism: products become zeta o mu.
    TwistEndo {
        file: String,
        #[arg(long)]
        map: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist the products by a sigma form.
    TwistSigma {
        file: String,
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the color commutator algebra.
    Commutator {
        file: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a built-in example as an algebra file.
    Example {
        id: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a map is a morphism between two algebras.
    CheckHom {
        a: String,
        b: String,
        /// Map file, or `identity`.
        #[arg(long)]
        map: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symmetric,
    Multiplier,
}

/// Exit code plus everything the command would print.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_PASS, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Self { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Exit code for a library error: failed preconditions are violations,
/// everything else is bad input.
fn code_for(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) => EXIT_VIOLATION,
        _ => EXIT_MALFORMED,
    }
}

fn from_error(e: Error) -> Outcome {
    Outcome::fail(code_for(&e), e)
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_MALFORMED, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Verify { file, all, format, skew_complete, jobs } => cmd_verify(&file, all, format, skew_complete, jobs),
        Command::TwistEndo { file, map, output } => cmd_twist_endo(&file, &map, output.as_deref()),
        Command::TwistSigma { file, sigma, mode, output } => cmd_twist_sigma(&file, &sigma, mode, output.as_deref()),
        Command::Commutator { file, output } => cmd_commutator(&file, output.as_deref()),
        Command::Example { id, params, output } => cmd_example(&id, &params, output.as_deref()),
        Command::CheckHom { a, b, map } => cmd_check_hom(&a, &b, &map),
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_MALFORMED, format!("cannot read {}: {e}", path.display())))
}

/// Loads an algebra from a file, falling back to a built-in example id when
/// no such file exists.
fn load_algebra(arg: &str) -> Result<GradedAlgebra<Rational>, Outcome> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(id) = CorpusId::<Rational>::parse(arg, &[]) {
            return corpus::build(&id).map_err(from_error);
        }
    }
    let text = read(path)?;
    io::parse_algebra(&text).map_err(|e| Outcome::fail(EXIT_MALFORMED, format!("{}: {e}", path.display())))
}

fn load_map(arg: &str, a: &GradedAlgebra<Rational>, b: &GradedAlgebra<Rational>) -> Result<EvenMap<Rational>, Outcome> {
    if arg == "identity" {
        if a.dim() != b.dim() {
            return Err(Outcome::fail(EXIT_MALFORMED, "identity map needs equal dimensions"));
        }
        return Ok(EvenMap::identity(a.dim()));
    }
    let text = read(Path::new(arg))?;
    io::parse_map(a.basis(), b.basis(), &text).map_err(|e| Outcome::fail(EXIT_MALFORMED, format!("{arg}: {e}")))
}

fn emit(a: &GradedAlgebra<Rational>, output: Option<&Path>, warnings: &[String]) -> Outcome {
    let text = io::serialize_algebra(a);
    let mut stderr = String::new();
    for w in warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    match output {
        Some(p) => match fs::write(p, &text) {
            Ok(()) => Outcome { code: EXIT_PASS, stdout: String::new(), stderr },
            Err(e) => Outcome::fail(EXIT_MALFORMED, format!("cannot write {}: {e}", p.display())),
        },
        None => Outcome { code: EXIT_PASS, stdout: text, stderr },
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(o) => return o,
        }
    };
}

/// The checks `verify` knows, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Evenness,
    TwistEven,
    EpsSkew,
    EpsJacobi,
    HomEpsJacobi,
    HomAssociativity,
    Flexible,
    Admissible,
    SSymmetry,
    G(SubgroupTag),
}

fn suite(flavor: Flavor, all: bool) -> Vec<Check> {
    use Check::*;
    if all {
        let mut v = vec![Evenness, TwistEven, EpsSkew, EpsJacobi, HomEpsJacobi, HomAssociativity, Flexible, Admissible, SSymmetry];
        v.extend(SubgroupTag::ALL.iter().map(|&g| G(g)));
        return v;
    }
    match flavor {
        Flavor::Raw => vec![Evenness],
        Flavor::LieColor => vec![Evenness, EpsSkew, EpsJacobi],
        Flavor::HomLieColor => vec![Evenness, TwistEven, EpsSkew, HomEpsJacobi],
        Flavor::HomColor => vec![Evenness, TwistEven, HomAssociativity],
    }
}

fn run_check(v: &Verifier, a: &GradedAlgebra<Rational>, check: Check) -> ViolationReport<Rational> {
    let z = a.twist_or_identity();
    match check {
        Check::Evenness => check_evenness(a),
        Check::TwistEven => {
            let mut r = is_even_map(&z, a.basis(), a.basis());
            r.identity = "twist-even".into();
            for e in &mut r.entries {
                e.identity = "twist-even".into();
            }
            r
        }
        Check::EpsSkew => v.eps_skew(a),
        Check::EpsJacobi => v.eps_jacobi(a),
        Check::HomEpsJacobi => v.hom_eps_jacobi(a, &z),
        Check::HomAssociativity => v.hom_associativity(a, &z),
        Check::Flexible => v.flexible(a, &z),
        Check::Admissible => v.admissible(a, &z),
        Check::SSymmetry => v.s_symmetry(a, &z),
        Check::G(g) => v.g_hom_associative(a, &z, g),
    }
}

fn residual_value(a: &GradedAlgebra<Rational>, e: &crate::algebra::Element<Rational>) -> Value {
    Value::Object(e.terms().map(|(k, c)| (a.basis().name(k).to_owned(), Value::String(io::format_rational(c)))).collect())
}

fn report_json(a: &GradedAlgebra<Rational>, r: &ViolationReport<Rational>) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), Value::from(r.identity.clone()));
    m.insert("pass".into(), Value::from(r.passed()));
    m.insert("tested".into(), Value::from(r.tested));
    m.insert("unit".into(), Value::from(r.unit()));
    m.insert(
        "violations".into(),
        Value::Array(
            r.entries
                .iter()
                .map(|v| {
                    let mut o = Map::new();
                    o.insert("tuple".into(), Value::Array(v.tuple.iter().map(|&i| Value::from(a.basis().name(i))).collect()));
                    o.insert("residual".into(), residual_value(a, &v.residual));
                    Value::Object(o)
                })
                .collect(),
        ),
    );
    Value::Object(m)
}

fn cmd_verify(file: &str, all: bool, format: Format, skew: bool, jobs: usize) -> Outcome {
    let mut a = tri!(load_algebra(file));
    let mut notes = Vec::new();
    if skew {
        let (completed, info) = a.skew_complete();
        a = completed;
        notes.push(format!("skew completion filled {} products", info.filled.len()));
        for i in info.unforced_diagonals {
            let n = a.basis().name(i);
            notes.push(format!("({n},{n}) is not forced by skew symmetry and was left zero"));
        }
    }
    let verifier = Verifier::new(jobs);
    let reports: Vec<_> = suite(a.flavor(), all).into_iter().map(|c| run_check(&verifier, &a, c)).collect();
    let passed = reports.iter().all(|r| r.passed());
    let first = reports.iter().find_map(|r| r.first()).map(|v| v.render(a.basis()));

    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "flavor: {}", a.flavor());
            let _ = writeln!(s, "dimension: {}", a.dim());
            for n in &notes {
                let _ = writeln!(s, "note: {n}");
            }
            for r in &reports {
                if r.passed() {
                    let _ = writeln!(s, "{}: PASS ({} {})", r.identity, r.tested, r.unit());
                } else {
                    let _ = writeln!(s, "{}: FAIL ({} {}, {} violations)", r.identity, r.tested, r.unit(), r.entries.len());
                    for v in &r.entries {
                        let _ = writeln!(s, "  {}", v.render(a.basis()));
                    }
                }
            }
            let _ = writeln!(s, "result: {}", if passed { "PASS" } else { "FAIL" });
            if let Some(f) = &first {
                let _ = writeln!(s, "first violation: {f}");
            }
            s
        }
        Format::Json => {
            let mut m = Map::new();
            m.insert("flavor".into(), Value::from(a.flavor().to_string()));
            m.insert("dimension".into(), Value::from(a.dim()));
            m.insert("notes".into(), Value::Array(notes.into_iter().map(Value::from).collect()));
            m.insert("checks".into(), Value::Array(reports.iter().map(|r| report_json(&a, r)).collect()));
            m.insert("pass".into(), Value::from(passed));
            m.insert("first_violation".into(), first.map_or(Value::Null, Value::from));
            let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    Outcome { code: if passed { EXIT_PASS } else { EXIT_VIOLATION }, stdout, stderr: String::new() }
}

fn cmd_twist_endo(file: &str, map: &str, output: Option<&Path>) -> Outcome {
    let a = tri!(load_algebra(file));
    let zeta = tri!(load_map(map, &a, &a));
    let twisted = match a.flavor() {
        Flavor::LieColor | Flavor::HomLieColor => endo_twist_bracket(&a, &zeta),
        Flavor::Raw | Flavor::HomColor => endo_twist_mult(&a, &zeta),
    };
    match twisted {
        Ok(t) => emit(&t, output, &[]),
        Err(e) => from_error(e),
    }
}

fn cmd_twist_sigma(file: &str, sigma: &Path, mode: ModeArg, output: Option<&Path>) -> Outcome {
    let a = tri!(load_algebra(file));
    let text = tri!(read(sigma));
    let s = match io::parse_sigma(a.spec(), &text) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_MALFORMED, format!("{}: {e}", sigma.display())),
    };
    let mode = match mode {
        ModeArg::Symmetric => SigmaMode::Symmetric,
        ModeArg::Multiplier => SigmaMode::Multiplier,
    };
    match sigma_twist(&a, &s, mode) {
        Ok(t) => emit(&t, output, &[]),
        Err(e) => from_error(e),
    }
}

fn cmd_commutator(file: &str, output: Option<&Path>) -> Outcome {
    let a = tri!(load_algebra(file));
    let built = commutator_algebra(&a);
    emit(&built.algebra, output, &built.warnings)
}

fn cmd_example(id: &str, params: &[String], output: Option<&Path>) -> Outcome {
    let parsed: Result<Vec<Rational>, _> = params.iter().map(|p| io::parse_rational(p)).collect();
    let built = parsed.and_then(|ps| CorpusId::parse(id, &ps)).and_then(|id| corpus::build(&id));
    match built {
        Ok(a) => emit(&a, output, &[]),
        Err(e) => Outcome::fail(EXIT_MALFORMED, e),
    }
}

fn cmd_check_hom(a: &str, b: &str, map: &str) -> Outcome {
    let a = tri!(load_algebra(a));
    let b = tri!(load_algebra(b));
    let f = tri!(load_map(map, &a, &b));
    let r = match check_morphism(&a, &b, &f) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_MALFORMED, e),
    };
    let mut s = String::new();
    if r.passed() {
        let _ = writeln!(s, "morphism: PASS ({} conditions)", r.tested);
    } else {
        let _ = writeln!(s, "morphism: FAIL ({} conditions, {} violations)", r.tested, r.entries.len());
        for v in &r.entries {
            let _ = writeln!(s, "  {}", render_mixed(&a, &b, v));
        }
    }
    Outcome { code: if r.passed() { EXIT_PASS } else { EXIT_VIOLATION }, stdout: s, stderr: String::new() }
}

/// Tuples index the domain, residuals live in the codomain.
fn render_mixed(a: &GradedAlgebra<Rational>, b: &GradedAlgebra<Rational>, v: &crate::report::Violation<Rational>) -> String {
    let names: Vec<_> = v.tuple.iter().map(|&i| a.basis().name(i)).collect();
    format!("{} @ ({}) residual {}", v.identity, names.join(","), v.residual.render(b.basis()))
}
