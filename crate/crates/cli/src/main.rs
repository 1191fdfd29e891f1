mod text;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hlya::algebra::{check_deformation_type, check_hlya, HomLYAlgebra};
use hlya::cohomology::{self, CocyclePair, DEFAULT_MAX_SIZE};
use hlya::deformation::{self, LambdaAlgebra};
use hlya::extension::{self, AbelianExtension};
use hlya::io::{self, DocError};
use hlya::linalg::{Matrix, Poly};
use hlya::report::Report;
use hlya::representation::{self, Hr41Form, Representation};
use hlya::selftest;

#[derive(Parser)]
#[command(name = "hlya", version, about = "Exact checks and cohomology for Hom-Lie-Yamaguti algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    /// The Hom-Lie-Yamaguti axioms.
    Hlya,
    /// Axioms with the pure binary cyclic condition in place of HLY3.
    Deformation,
    /// A λ-algebra produced by `deform`.
    Lambda,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Hr41 {
    Composed,
    Bare,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra document against its axioms.
    Check {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckMode::Hlya)]
        mode: CheckMode,
    },
    /// Check a representation document.
    Rep {
        rep: PathBuf,
        #[arg(long, value_enum, default_value_t = Hr41::Composed)]
        hr41: Hr41,
    },
    /// Print the adjoint representation of an algebra.
    Adjoint { algebra: PathBuf },
    /// Print the semidirect product algebra of a representation.
    Semidirect { rep: PathBuf },
    /// Dimensions and representatives of the (2,3)-cohomology.
    Cohomology23 { rep: PathBuf },
    /// Dimensions of a higher cohomology group.
    Cohomology {
        rep: PathBuf,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: u128,
    },
    /// Check the (2,3)-cocycle conditions for a pair.
    Cocycle { rep: PathBuf, pair: PathBuf },
    /// Write a cocycle as a coboundary, if it is one, and give its class.
    Decompose { rep: PathBuf, pair: PathBuf },
    /// Basis of the twist-compatible derivations into the module.
    Derivations { rep: PathBuf },
    /// Check whether a matrix is a Nijenhuis operator.
    Nijenhuis { algebra: PathBuf, operator: PathBuf },
    /// Print the pair generated by a Nijenhuis operator.
    NijenhuisPair { algebra: PathBuf, operator: PathBuf },
    /// Print the λ-algebra deformed along a pair of adjoint cochains.
    Deform { algebra: PathBuf, pair: PathBuf },
    /// Check a pair as a cocycle and as a deformation-type structure.
    Split { algebra: PathBuf, pair: PathBuf },
    /// Check that the deformation from a Nijenhuis operator is trivial.
    Trivial {
        algebra: PathBuf,
        operator: PathBuf,
        pair: PathBuf,
    },
    /// Build the abelian extension of a representation by a cocycle.
    ExtBuild { rep: PathBuf, pair: PathBuf },
    /// Validate an extension document.
    ExtCheck { extension: PathBuf },
    /// Coordinates of an extension's class.
    ExtClassify { extension: PathBuf },
    /// Look for an equivalence between two extensions.
    ExtEquiv { first: PathBuf, second: PathBuf },
    /// Run the randomized property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Parse(String),
    Precondition(hlya::Error),
}

impl From<hlya::Error> for Failure {
    fn from(e: hlya::Error) -> Self {
        Failure::Precondition(e)
    }
}

type Outcome = Result<(Value, String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok((value, text, passed)) => {
            match cli.format {
                Format::Json => print!("{}", io::render(&value)),
                Format::Text => print!("{text}"),
            }
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| doc_failure(path, e))
}

fn doc_failure(path: &Path, e: DocError) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<HomLYAlgebra, Failure> {
    io::algebra_from_value(&read(path)?, "$").map_err(|e| doc_failure(path, e))
}

/// String-valued `algebra` fields name a file relative to the representation.
fn load_rep(path: &Path) -> Result<Representation, Failure> {
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |name: &str| -> io::DocResult<Value> {
        let target = dir.join(name);
        let text = fs::read_to_string(&target).map_err(|e| DocError::Field {
            path: "$.algebra".into(),
            msg: format!("cannot read {}: {e}", target.display()),
        })?;
        io::parse(&text)
    };
    io::rep_from_value(&read(path)?, "$", &resolve).map_err(|e| doc_failure(path, e))
}

fn load_pair(path: &Path, n: usize, m: usize) -> Result<CocyclePair, Failure> {
    io::pair_from_value(&read(path)?, n, m, "$").map_err(|e| doc_failure(path, e))
}

fn load_matrix(path: &Path, rows: usize, cols: usize) -> Result<Matrix, Failure> {
    io::matrix_from_value(&read(path)?, rows, cols, "$").map_err(|e| doc_failure(path, e))
}

fn load_extension(path: &Path) -> Result<AbelianExtension, Failure> {
    io::extension_from_value(&read(path)?, "$").map_err(|e| doc_failure(path, e))
}

fn report<S: Serialize + Display>(r: &Report<S>) -> Outcome {
    Ok((to_value(r), text::report(r), r.passed()))
}

fn document(v: Value) -> Outcome {
    let t = io::render(&v);
    Ok((v, t, true))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Check { algebra, mode } => match mode {
            CheckMode::Hlya => report(&check_hlya(&load_algebra(algebra)?)),
            CheckMode::Deformation => report(&check_deformation_type(&load_algebra(algebra)?)),
            CheckMode::Lambda => {
                let l: LambdaAlgebra =
                    io::algebra_from_value::<Poly>(&read(algebra)?, "$").map_err(|e| doc_failure(algebra, e))?;
                report(&deformation::check_lambda(&l))
            }
        },
        Command::Rep { rep, hr41 } => {
            let form = match hr41 {
                Hr41::Composed => Hr41Form::Composed,
                Hr41::Bare => Hr41Form::Bare,
            };
            report(&representation::check_representation_with(&load_rep(rep)?, form))
        }
        Command::Adjoint { algebra } => {
            document(io::rep_to_value(&representation::adjoint(&load_algebra(algebra)?)?))
        }
        Command::Semidirect { rep } => {
            document(io::algebra_to_value(&representation::semidirect(&load_rep(rep)?)))
        }
        Command::Cohomology23 { rep } => {
            let h = cohomology::cohomology23(&load_rep(rep)?)?;
            Ok((io::cohomology23_to_value(&h), text::cohomology23(&h), true))
        }
        Command::Cohomology { rep, level, max_size } => {
            let h = cohomology::cohomology_higher(&load_rep(rep)?, *level, *max_size)?;
            Ok((io::cohomology_higher_to_value(&h), text::cohomology_higher(&h), true))
        }
        Command::Cocycle { rep, pair } => {
            let r = load_rep(rep)?;
            let p = load_pair(pair, r.dim(), r.vdim)?;
            report(&cohomology::check_cocycle23(&r, &p)?)
        }
        Command::Decompose { rep, pair } => {
            let r = load_rep(rep)?;
            let p = load_pair(pair, r.dim(), r.vdim)?;
            let map = cohomology::decompose(&r, &p)?;
            let class = cohomology::class_coordinates(&r, &p)?;
            let v = json!({
                "coboundary": map.is_some(),
                "map": map.as_ref().map(io::matrix_to_value),
                "class": io::rationals_to_value(&class),
            });
            let t = text::decompose(map.as_ref(), &class);
            Ok((v, t, map.is_some()))
        }
        Command::Derivations { rep } => {
            let basis = cohomology::derivation_space(&load_rep(rep)?)?;
            let v = json!({
                "dim": basis.len(),
                "basis": basis.iter().map(io::matrix_to_value).collect::<Vec<_>>(),
            });
            Ok((v, text::matrices("derivations", &basis), true))
        }
        Command::Nijenhuis { algebra, operator } => {
            let a = load_algebra(algebra)?;
            let n = load_matrix(operator, a.dim, a.dim)?;
            let c = deformation::is_nijenhuis(&a, &n)?;
            let v = json!({ "report": to_value(&c.report), "commutes_with_alpha": c.commutes_with_alpha });
            let t = format!("{}commutes with alpha: {}\n", text::report(&c.report), c.commutes_with_alpha);
            Ok((v, t, c.passed() && c.commutes_with_alpha))
        }
        Command::NijenhuisPair { algebra, operator } => {
            let a = load_algebra(algebra)?;
            let n = load_matrix(operator, a.dim, a.dim)?;
            document(io::pair_to_value(&deformation::nijenhuis_deformation(&a, &n)?))
        }
        Command::Deform { algebra, pair } => {
            let a = load_algebra(algebra)?;
            let p = load_pair(pair, a.dim, a.dim)?;
            document(io::algebra_to_value(&deformation::deform(&a, &p)?))
        }
        Command::Split { algebra, pair } => {
            let a = load_algebra(algebra)?;
            let p = load_pair(pair, a.dim, a.dim)?;
            let s = deformation::deformation_split(&a, &p)?;
            let v = json!({
                "passed": s.passed(),
                "cocycle": to_value(&s.cocycle),
                "deformation_type": to_value(&s.deformation_type),
            });
            let t = format!(
                "cocycle conditions\n{}deformation-type axioms\n{}",
                text::report(&s.cocycle),
                text::report(&s.deformation_type)
            );
            Ok((v, t, s.passed()))
        }
        Command::Trivial { algebra, operator, pair } => {
            let a = load_algebra(algebra)?;
            let n = load_matrix(operator, a.dim, a.dim)?;
            let p = load_pair(pair, a.dim, a.dim)?;
            report(&deformation::check_trivial(&a, &n, &p)?)
        }
        Command::ExtBuild { rep, pair } => {
            let r = load_rep(rep)?;
            let p = load_pair(pair, r.dim(), r.vdim)?;
            document(io::extension_to_value(&extension::build_extension(&r.algebra, &r, &p)?))
        }
        Command::ExtCheck { extension: e } => report(&extension::validate_extension(&load_extension(e)?)?),
        Command::ExtClassify { extension: e } => {
            let c = extension::classify(&load_extension(e)?)?;
            let v = json!({ "coordinates": io::rationals_to_value(&c) });
            Ok((v, text::coordinates(&c), true))
        }
        Command::ExtEquiv { first, second } => {
            let f = extension::are_equivalent(&load_extension(first)?, &load_extension(second)?)?;
            let v = json!({ "equivalent": f.is_some(), "map": f.as_ref().map(io::matrix_to_value) });
            Ok((v, text::equivalence(f.as_ref()), f.is_some()))
        }
        Command::Selftest { seed } => {
            let res = selftest::run(*seed);
            let passed = res.iter().all(selftest::SuiteResult::passed);
            let v = json!({ "seed": seed, "passed": passed, "suites": to_value(&res) });
            Ok((v, text::selftest(&res), passed))
        }
    }
}
