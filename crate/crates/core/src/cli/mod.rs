//! The `braidcheck` command line.
//!
//! Every command prints a [`CheckReport`] on stdout and diagnostics on
//! stderr. Exit codes: 0 verdict true, 1 verdict false, 2 input error,
//! 3 internal inconsistency between routes that must agree.

mod build;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use build::example_file;
pub use report::{CheckReport, CriterionResult, InputDigest, SCHEMA_VERSION};

use crate::azumaya::{is_azumaya, verify_algebra};
use crate::coend::invertibility_report;
use crate::error::{Error, Result};
use crate::exact::CycloScalar;
use crate::format::{parse_field, parse_input, write_modular, HopfFile, Input};
use crate::hopf::{is_factorizable, verify_hopf, verify_quasitriangular};
use crate::modular::{
    deligne_product, double_modular_data_bounded, is_nondegenerate_modular, muger_center, reverse_data,
    verify_modular_data, ModularData, DEFAULT_MAX_GROUP_ORDER,
};
use crate::rep::verify_module;
use crate::axioms::AxiomReport;

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "braidcheck", version, about = "Exact invertibility checks for braided tensor categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Largest Hopf/algebra dimension or modular rank accepted.
    #[arg(long, global = true, env = "BRAIDCHECK_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
    pub max_dim: usize,
    /// Require every input scalar to lie in this field, written zeta(n).
    #[arg(long, global = true)]
    pub field: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of any input file; module files follow their Hopf file.
    Verify { input: PathBuf, modules: Vec<PathBuf> },
    /// Rank of the closed-form Drinfeld map.
    Factorizable { input: PathBuf },
    /// Drinfeld-map and pairing criteria computed on the canonical coend.
    InvertibilityReport { input: PathBuf },
    /// Modular data axioms and non-degeneracy.
    ModularCheck { input: PathBuf },
    /// Transparent labels; the verdict is true when only the unit is transparent.
    MugerCenter { input: PathBuf },
    /// Build new modular data from old.
    WittOp {
        #[command(subcommand)]
        op: WittOp,
    },
    /// Central-separable and sandwich-map tests for an algebra.
    Azumaya { input: PathBuf },
    /// Write a built-in example in the text format.
    BuildExample {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum WittOp {
    /// Deligne product of two modular data files.
    Product { a: PathBuf, b: PathBuf },
    /// Reverse braiding.
    Reverse { a: PathBuf },
    /// Modular data of the double of a group given as a group file.
    Double { group: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Factorizable { .. } => "factorizable",
            Command::InvertibilityReport { .. } => "invertibility-report",
            Command::ModularCheck { .. } => "modular-check",
            Command::MugerCenter { .. } => "muger-center",
            Command::WittOp { op: WittOp::Product { .. } } => "witt-op product",
            Command::WittOp { op: WittOp::Reverse { .. } } => "witt-op reverse",
            Command::WittOp { op: WittOp::Double { .. } } => "witt-op double",
            Command::Azumaya { .. } => "azumaya",
            Command::BuildExample { .. } => "build-example",
        }
    }
}

/// Exit code for an error: 3 when two independent routes disagreed, else 2.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InternalInconsistency(_) | Error::ConventionMismatch(_) | Error::DescentFailure(_) => 3,
        _ => 2,
    }
}

pub struct Outcome {
    pub report: CheckReport,
    pub code: i32,
}

struct Runner<'a> {
    cli: &'a Cli,
    report: CheckReport,
}

impl Runner<'_> {
    fn load(&mut self, path: &PathBuf) -> Result<Input> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| Error::Parse { line: 1, col: 1, message: "input is not UTF-8".into() })?;
        self.report.inputs.push(InputDigest::new(&path.display().to_string(), "unparsed", &bytes));
        let input = parse_input(&text).map_err(|e| with_path(path, e))?;
        if let Some(d) = self.report.inputs.last_mut() {
            d.kind = input.kind().to_string();
        }
        self.check_field(&input)?;
        self.check_size(&input)?;
        Ok(input)
    }

    fn check_size(&self, input: &Input) -> Result<()> {
        let size = match input {
            Input::Hopf(h) => h.presentation.dim(),
            Input::Module(m) => m.dim,
            Input::Modular(d) => d.rank(),
            Input::Algebra(a) => a.dim(),
            Input::Group(g) => g.order(),
        };
        self.cap(size)
    }

    fn cap(&self, size: usize) -> Result<()> {
        if size > self.cli.max_dim {
            Err(Error::UnsupportedParams(format!(
                "size {size} exceeds --max-dim {} (BRAIDCHECK_MAX_DIM)",
                self.cli.max_dim
            )))
        } else {
            Ok(())
        }
    }

    fn check_field(&self, input: &Input) -> Result<()> {
        let Some(f) = &self.cli.field else { return Ok(()) };
        let n = parse_field(f).ok_or_else(|| Error::UnsupportedParams(format!("bad --field '{f}'")))?;
        let scalars: Vec<CycloScalar> = match input {
            Input::Hopf(h) => {
                let t = h.presentation.to_tensors();
                let mut v: Vec<CycloScalar> = t.mult.into_iter().map(|e| e.3).collect();
                v.extend(t.comult.into_iter().map(|e| e.3));
                v.extend(t.unit.into_iter().map(|e| e.1));
                v.extend(t.counit.into_iter().map(|e| e.1));
                v.extend(t.antipode.into_iter().map(|e| e.2));
                v.extend(h.r.iter().flat_map(|r| r.entries()).map(|e| e.2));
                v
            }
            Input::Module(m) => m.action.iter().map(|e| e.3.clone()).collect(),
            Input::Modular(d) => d.s().entries().iter().chain(d.t_diagonal()).cloned().collect(),
            Input::Algebra(a) => {
                let t = a.to_tensors();
                t.mult.into_iter().map(|e| e.3).chain(t.unit.into_iter().map(|e| e.1)).collect()
            }
            Input::Group(_) => Vec::new(),
        };
        match scalars.iter().find(|x| !x.lies_in(n)) {
            Some(x) => Err(Error::Validation(format!("scalar {x} is not in zeta({n})"))),
            None => Ok(()),
        }
    }

    fn hopf(&mut self, path: &PathBuf) -> Result<HopfFile> {
        match self.load(path)? {
            Input::Hopf(h) => Ok(h),
            other => Err(wrong_kind(path, "hopf", other.kind())),
        }
    }

    fn modular(&mut self, path: &PathBuf) -> Result<ModularData> {
        match self.load(path)? {
            Input::Modular(d) => Ok(d),
            other => Err(wrong_kind(path, "modular", other.kind())),
        }
    }

    fn axioms(&mut self, prefix: &str, rep: &AxiomReport) {
        for a in &rep.axioms {
            let name = if prefix.is_empty() { a.name.clone() } else { format!("{prefix}: {}", a.name) };
            self.report.criteria.push(CriterionResult::new(name, a.passed));
        }
    }

    fn all_criteria(&mut self) {
        self.report.verdict = Some(self.report.criteria.iter().all(|c| c.verdict));
    }

    fn emit_modular(&mut self, d: &ModularData) -> Result<()> {
        self.cap(d.rank())?;
        let rep = verify_modular_data(d);
        self.axioms("", &rep);
        self.report.labels = d.labels().to_vec();
        self.report.output = Some(write_modular(d));
        self.all_criteria();
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        match &self.cli.command {
            Command::Verify { input, modules } => {
                match self.load(input)? {
                    Input::Hopf(h) => {
                        self.axioms("", &verify_hopf(&h.presentation));
                        if let Some(r) = &h.r {
                            let rep = verify_quasitriangular(&h.presentation, r)?;
                            self.axioms("", &rep);
                        }
                        let parent = Arc::new(h.presentation);
                        for m in modules {
                            let Input::Module(f) = self.load(m)? else {
                                return Err(wrong_kind(m, "module", "another"));
                            };
                            let ok = f.resolve(&parent).is_ok_and(|x| verify_module(&x));
                            self.report.criteria.push(CriterionResult::new(format!("module {}", m.display()), ok).dim(f.dim));
                        }
                    }
                    other if !modules.is_empty() => {
                        return Err(Error::UnsupportedParams(format!("module files need a hopf file, not {}", other.kind())));
                    }
                    Input::Modular(d) => self.axioms("", &verify_modular_data(&d)),
                    Input::Algebra(a) => self.axioms("", &verify_algebra(&a)),
                    Input::Group(g) => {
                        self.report.criteria.push(CriterionResult::new("group axioms", true).dim(g.order()));
                    }
                    Input::Module(_) => {
                        return Err(Error::UnsupportedParams("a module file is checked after its hopf file".into()));
                    }
                }
                self.all_criteria();
            }
            Command::Factorizable { input } => {
                let h = self.hopf(input)?;
                let r = require_r(&h)?;
                let f = is_factorizable(&h.presentation, r);
                self.report.criteria.push(
                    CriterionResult::new("drinfeld map bijective", f.factorizable).rank(f.rank, h.presentation.dim()),
                );
                self.report.verdict = Some(f.factorizable);
            }
            Command::InvertibilityReport { input } => {
                let h = self.hopf(input)?;
                let r = require_r(&h)?.clone();
                let rep = invertibility_report(&Arc::new(h.presentation), &r)?;
                self.report.criteria.push(
                    CriterionResult::new("drinfeld map bijective", rep.drinfeld_iso.holds)
                        .rank(rep.drinfeld_iso.rank, rep.dim),
                );
                self.report.criteria.push(
                    CriterionResult::new("pairing non-degenerate", rep.omega_nondegenerate.holds)
                        .rank(rep.omega_nondegenerate.rank, rep.dim),
                );
                self.report.conventions = rep.conventions;
                self.report.verdict = Some(rep.verdict);
            }
            Command::ModularCheck { input } => {
                let d = self.modular(input)?;
                self.axioms("", &verify_modular_data(&d));
                let nondeg = is_nondegenerate_modular(&d)?;
                self.report.criteria.push(CriterionResult::new("non-degenerate", nondeg).rank(d.s().rank(), d.rank()));
                self.all_criteria();
            }
            Command::MugerCenter { input } => {
                let d = self.modular(input)?;
                let center = muger_center(&d);
                let trivial = center == [0];
                self.report.criteria.push(CriterionResult::new("trivial Müger center", trivial).dim(center.len()));
                self.report.labels = center.iter().map(|&i| d.labels()[i].clone()).collect();
                self.report.verdict = Some(trivial);
            }
            Command::WittOp { op } => {
                let d = match op {
                    WittOp::Product { a, b } => {
                        let (a, b) = (self.modular(a)?, self.modular(b)?);
                        self.cap(a.rank() * b.rank())?;
                        deligne_product(&a, &b)
                    }
                    WittOp::Reverse { a } => reverse_data(&self.modular(a)?)?,
                    WittOp::Double { group } => {
                        let Input::Group(g) = self.load(group)? else {
                            return Err(wrong_kind(group, "group", "another"));
                        };
                        double_modular_data_bounded(&g, DEFAULT_MAX_GROUP_ORDER)?
                    }
                };
                self.emit_modular(&d)?;
            }
            Command::Azumaya { input } => {
                let Input::Algebra(a) = self.load(input)? else {
                    return Err(wrong_kind(input, "algebra", "another"));
                };
                let rep = is_azumaya(&a)?;
                let d = rep.dim;
                let c = &mut self.report.criteria;
                c.push(CriterionResult::new("central", rep.central).dim(rep.center_dim));
                c.push(CriterionResult::new("separable", rep.separable));
                c.push(CriterionResult::new("sandwich map bijective", rep.sandwich_iso).rank(rep.sandwich_rank, d * d));
                c.push(CriterionResult::new("faithful projective", rep.faithful_projective).dim(d));
                c.push(CriterionResult::new("route agreement", rep.route_agreement));
                self.report.verdict = Some(rep.verdict);
            }
            Command::BuildExample { name, output } => {
                let (text, kind) = example_file(name)?;
                let input = parse_input(&text)?;
                self.check_size(&input)?;
                if let Some(path) = output {
                    std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                }
                self.report.criteria.push(CriterionResult::new(format!("{kind} file parses back"), true));
                self.report.output = Some(text);
                self.report.verdict = Some(true);
            }
        }
        Ok(())
    }
}

/// Names the file in parse errors; other errors keep their type and text.
fn with_path(path: &std::path::Path, e: Error) -> Error {
    match e {
        Error::Parse { line, col, message } => {
            Error::Parse { line, col, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    }
}

fn wrong_kind(path: &std::path::Path, want: &str, got: &str) -> Error {
    Error::UnsupportedParams(format!("{}: expected a {want} file, found {got}", path.display()))
}

fn require_r(h: &HopfFile) -> Result<&crate::hopf::RMatrix> {
    h.r.as_ref().ok_or_else(|| Error::Validation("the hopf file has no rmatrix block".into()))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut runner = Runner { cli, report: CheckReport::new(cli.command.name()) };
    let code = match runner.run() {
        Ok(()) => match runner.report.verdict {
            Some(true) => 0,
            _ => 1,
        },
        Err(e) => {
            runner.report.error = Some(e.to_string());
            runner.report.verdict = None;
            exit_code_for(&e)
        }
    };
    let mut report = runner.report;
    report.duration_ms = start.elapsed().as_millis() as u64;
    Outcome { report, code }
}

/// Parses `args`, runs, and returns `(stdout, stderr, exit code)`.
pub fn main_with<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, code) };
        }
    };
    let out = run(&cli);
    let stdout = match cli.format {
        OutputFormat::Json => out.report.to_json(),
        OutputFormat::Text => out.report.to_text(),
    };
    let stderr = out.report.error.as_ref().map(|e| format!("braidcheck: {e}\n")).unwrap_or_default();
    (stdout, stderr, out.code)
}
