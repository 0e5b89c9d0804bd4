//! Command-line driver. `run` parses arguments, executes one command and
//! returns the exit code together with everything written to stdout, so the
//! binary and the integration tests share one code path.
//!
//! Exit codes: 0 all checks passed, 1 some check failed, 2 bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::composition::{Composition, Partition};
use crate::error::{QsymError, Result};
use crate::families::chromatic::{chromatic_psi, chromatic_x, k_balanced_psi, k_balanced_x};
use crate::families::eulerian::{
    cycle_eulerian_by_inversion, cycle_eulerian_closed_form, cycle_eulerian_q, eulerian_closed_form, eulerian_q,
    path_poset_sum, q_graded, SingleRowTerm,
};
use crate::families::llt::{llt_psi, llt_unicellular, llt_vertical, llt_vertical_psi, non_unimodal_witness};
use crate::families::matroid::{matroid_f, matroid_psi, uniform_closed_form, Matroid};
use crate::families::schur::{roichman_coeff, schur};
use crate::families::tutte::{b_polynomial, b_psi, specialization_checks, tutte_multivariate};
use crate::json::{
    equivalence_from_json, graph_from_json, matroid_from_json, param_poly_to_json, poset_from_json, poset_to_json,
    qsym_from_json, qsym_to_json, sym_from_json, sym_to_json,
};
use crate::posets::{DirectedGraph, LabeledPoset, Poset};
use crate::ppartitions::{kp_omega_strict, kp_psi, kpd_psi, kpe_psi, PartitionExpansionReport, Route};
use crate::qsym::{Basis, QSymElement};
use crate::report::{digest_inputs, RunReport};
use crate::search::{evaluate_combination, search_pool, Finding, KpPool};
use crate::sym::{to_sym, SymBasis, SymElement};
use crate::textfmt::{parse_qsym_text, parse_sym_text, qsym_to_text, sym_to_text};
use crate::verify::{run_suite, Check, Suite};

#[derive(Parser, Debug)]
#[command(name = "qsymkit", version, about = "Exact quasisymmetric power sum computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print an element, a K_P or a family member in a chosen basis.
    Expand(ExpandArgs),
    /// Psi expansion of a P-partition generating function with certificates.
    Kp(KpArgs),
    /// Compute one of the applied families.
    Family(FamilyArgs),
    /// Run a verification suite and print a PASS/FAIL table.
    Verify(VerifyArgs),
    /// Look for symmetric positive combinations of K_P that are not
    /// Schur- or h-positive.
    SearchPositivity(SearchArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputOpts {
    /// M, F, Psi (quasisymmetric) or p, h, e, s, m (symmetric).
    #[arg(long)]
    pub basis: Option<String>,
    /// Print Psi and p coefficients as they are instead of `c*z .../z`.
    #[arg(long)]
    pub raw: bool,
    /// Write the JSON report to this file; `-` prints it instead of the text.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Record wall time in the report (makes it nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyInputs {
    /// Directed graph file: {"n":N,"edges":[[i,j],...]}.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Edge subset file for llt-vstrip, same shape as a graph's edge list.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Matroid file: {"n":N,"bases":[[...],...]}.
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    /// Uniform matroid `n,r`.
    #[arg(long)]
    pub uniform: Option<String>,
    /// Partition for schur, e.g. `3,3`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// With --lambda: print the Roichman coefficient at this composition.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<u32>,
    /// LLT and B: print omega G(x;q+1) (or omega B(x;y+1,z+1)) in Psi.
    #[arg(long)]
    pub shift: bool,
    /// Chromatic, k-balanced, matroid: print the omega image in Psi.
    #[arg(long)]
    pub omega: bool,
    /// Cross-validate the routes and print certificates.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// Element file in the JSON element format.
    #[arg(long, group = "source")]
    pub element: Option<PathBuf>,
    /// Element in canonical text form, e.g. `Psi[2,1] - 1/2*F[3]`.
    #[arg(long, group = "source")]
    pub text: Option<String>,
    /// Poset file; expands K_P for its labeling.
    #[arg(long, group = "source")]
    pub kp: Option<PathBuf>,
    /// Family name, as for the `family` command.
    #[arg(long, group = "source")]
    pub family: Option<String>,
    #[command(flatten)]
    pub inputs: FamilyInputs,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Args, Debug)]
pub struct KpArgs {
    /// Poset file: {"n":N,"covers":[[i,j],...],"labels":[...]}.
    #[arg(long)]
    pub poset: PathBuf,
    /// Element weights d_1,...,d_n.
    #[arg(long, conflicts_with_all = ["equiv", "strict"])]
    pub weights: Option<String>,
    /// Equivalence file: {"blocks":[[...],...]}.
    #[arg(long, conflicts_with = "strict")]
    pub equiv: Option<PathBuf>,
    /// Order-reversing labeling: expand omega of the strict function.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value = "all")]
    pub route: String,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// chromatic|kbalanced|llt|llt-vstrip|bpoly|tutte|matroid|eulerian|cycle-eulerian|schur
    pub name: String,
    #[command(flatten)]
    pub inputs: FamilyInputs,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// unimodal|cons|bases|kp|kpe|families|counterexamples|all
    pub suite: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Evaluate this fixed combination instead of searching.
    #[arg(long = "poset")]
    pub posets: Vec<PathBuf>,
    /// Coefficients for --poset, e.g. `2,3,2,0`.
    #[arg(long)]
    pub coeffs: Option<String>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

/// Result of one command: exit code and the text meant for stdout.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command_line: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut ctx = Ctx { files: Vec::new(), args: command_line };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Expand(a) => cmd_expand(&mut ctx, a).map(|r| (r, out_of(&a.out))),
        Command::Kp(a) => cmd_kp(&mut ctx, a).map(|r| (r, out_of(&a.out))),
        Command::Family(a) => cmd_family(&mut ctx, &a.name, &a.inputs, &a.out).map(|r| (r, out_of(&a.out))),
        Command::Verify(a) => cmd_verify(a).map(|r| (r, (a.json.clone(), a.timing))),
        Command::SearchPositivity(a) => cmd_search(&mut ctx, a).map(|r| (r, (a.json.clone(), a.timing))),
    };
    let (mut done, (json_path, timing)) = match result {
        Ok(x) => x,
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", e) },
    };
    done.report.command = ctx.args.join(" ");
    done.report.inputs_digest = ctx.digest();
    if timing {
        done.report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    let code = if done.report.passed() { 0 } else { 1 };
    let json_text = serde_json::to_string_pretty(&done.report.to_json()).unwrap() + "\n";
    let stdout = match json_path.as_deref() {
        Some(p) if p == Path::new("-") => json_text,
        Some(p) => {
            if let Err(e) = std::fs::write(p, json_text) {
                return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {}\n", p.display(), e) };
            }
            done.text
        }
        None => done.text,
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn out_of(o: &OutputOpts) -> (Option<PathBuf>, bool) {
    (o.json.clone(), o.timing)
}

/// Caps the rayon pool from `QSYMKIT_THREADS`; ignored if unset or invalid.
pub fn init_threads() {
    if let Some(n) = std::env::var("QSYMKIT_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

struct Ctx {
    files: Vec<Vec<u8>>,
    args: Vec<String>,
}

impl Ctx {
    fn read_json(&mut self, path: &Path) -> Result<Value> {
        let bytes = std::fs::read(path).map_err(|e| QsymError::Input(format!("{}: {}", path.display(), e)))?;
        let v = serde_json::from_slice(&bytes).map_err(|e| QsymError::Input(format!("{}: {}", path.display(), e)))?;
        self.files.push(bytes);
        Ok(v)
    }

    fn digest(&self) -> String {
        let args = self.args.iter().map(|a| a.as_bytes());
        digest_inputs(args.chain(self.files.iter().map(|f| f.as_slice())))
    }
}

struct Done {
    report: RunReport,
    text: String,
}

impl Done {
    fn new() -> Done {
        Done { report: RunReport::default(), text: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn finish(mut self) -> Done {
        if !self.report.checks.is_empty() {
            let table = self.report.check_table();
            self.text.push_str(&table);
        }
        self
    }
}

/// An element of either ring.
#[derive(Clone, Debug)]
pub enum Elem {
    Q(QSymElement),
    S(SymElement),
}

enum Target {
    Q(Basis),
    S(SymBasis),
}

fn parse_target(s: &str) -> Result<Target> {
    match s {
        "M" | "F" | "Psi" => Ok(Target::Q(Basis::parse(s)?)),
        _ => match SymBasis::parse(s) {
            Ok(b) => Ok(Target::S(b)),
            Err(_) => Basis::parse(s)
                .map(Target::Q)
                .map_err(|_| QsymError::Input(format!("unknown basis '{}' (M|F|Psi|p|h|e|s|m)", s))),
        },
    }
}

impl Elem {
    pub fn in_basis(&self, basis: &str) -> Result<Elem> {
        Ok(match (parse_target(basis)?, self) {
            (Target::Q(b), Elem::Q(q)) => Elem::Q(q.convert(b)),
            (Target::Q(b), Elem::S(s)) => Elem::Q(s.to_qsym().convert(b)),
            (Target::S(b), Elem::Q(q)) => Elem::S(to_sym(q, b)?),
            (Target::S(b), Elem::S(s)) => Elem::S(s.convert(b)),
        })
    }

    pub fn to_text(&self, normalized: bool) -> String {
        match self {
            Elem::Q(q) => qsym_to_text(q, normalized),
            Elem::S(s) => sym_to_text(s, normalized),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Elem::Q(q) => qsym_to_json(q),
            Elem::S(s) => sym_to_json(s),
        }
    }

    pub fn from_json(v: &Value) -> Result<Elem> {
        match v.get("basis").and_then(Value::as_str) {
            Some("p" | "h" | "e" | "s" | "m") => sym_from_json(v).map(Elem::S),
            _ => qsym_from_json(v).map(Elem::Q),
        }
    }

    /// Quasisymmetric text first, then symmetric.
    pub fn from_text(s: &str) -> Result<Elem> {
        parse_qsym_text(s, None).map(Elem::Q).or_else(|qe| parse_sym_text(s, None).map(Elem::S).map_err(|_| qe))
    }
}

fn emit_element(done: &mut Done, e: &Elem, out: &OutputOpts, default_basis: &str) -> Result<()> {
    let e = e.in_basis(out.basis.as_deref().unwrap_or(default_basis))?;
    done.line(e.to_text(!out.raw));
    done.report.output("element", e.to_json());
    done.report.output("text", json!(e.to_text(!out.raw)));
    Ok(())
}

fn emit_certificates(done: &mut Done, r: &PartitionExpansionReport) {
    done.line("certificates (coefficient of Psi[alpha]/z_alpha):");
    let mut rows = Vec::new();
    for (a, c) in &r.certificates {
        done.line(format!("  {}  {}", a, c));
        rows.push(json!({"index": a.parts(), "c": param_poly_to_json(c)}));
    }
    done.report.output("certificates", Value::Array(rows));
    for w in &r.warnings {
        done.line(format!("warning: {}", w));
    }
    if !r.warnings.is_empty() {
        done.report.output("warnings", json!(r.warnings));
    }
    if let Some((p, e)) = &r.closure {
        done.line(format!("closed to a chain congruence: blocks {:?}", e.block_lists()));
        done.report
            .output("closure", json!({"poset": poset_to_json(p), "equivalence": crate::json::equivalence_to_json(e)}));
    }
}

/// Route checks of a report; the witness of a failure is the input itself.
fn route_checks(r: &PartitionExpansionReport, input: &str) -> Vec<Check> {
    r.checks.iter().map(|c| Check::holds(c.name.clone(), c.passed, || input.to_string())).collect()
}

fn parse_list(s: &str, what: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| QsymError::Input(format!("{}: '{}' is not a number", what, t))))
        .collect()
}

fn cmd_expand(ctx: &mut Ctx, a: &ExpandArgs) -> Result<Done> {
    if let Some(name) = &a.family {
        return cmd_family(ctx, name, &a.inputs, &a.out);
    }
    if let Some(path) = &a.kp {
        let p = poset_from_json(&ctx.read_json(path)?)?;
        return kp_report(&p, KpVariant::Plain, Route::All, &a.out, &poset_to_json(&p).to_string());
    }
    let e = if let Some(path) = &a.element {
        Elem::from_json(&ctx.read_json(path)?)?
    } else if let Some(t) = &a.text {
        Elem::from_text(t)?
    } else {
        return Err(QsymError::Input("expand needs --element, --text, --kp or --family".into()));
    };
    let default = match &e {
        Elem::Q(q) => q.basis().name(),
        Elem::S(s) => s.basis().name(),
    };
    let mut done = Done::new();
    emit_element(&mut done, &e, &a.out, default)?;
    Ok(done.finish())
}

enum KpVariant {
    Plain,
    Strict,
    Weights(Vec<u32>),
    Equiv(crate::posets::Equivalence),
}

fn kp_report(p: &LabeledPoset, v: KpVariant, route: Route, out: &OutputOpts, input: &str) -> Result<Done> {
    let r = match &v {
        KpVariant::Plain => kp_psi(p, route)?,
        KpVariant::Strict => kp_omega_strict(p, route)?,
        KpVariant::Weights(d) => kpd_psi(p, d, route)?,
        KpVariant::Equiv(e) => kpe_psi(p, e, route)?,
    };
    let mut done = Done::new();
    emit_element(&mut done, &Elem::Q(r.element.clone()), out, "Psi")?;
    emit_certificates(&mut done, &r);
    done.report.checks = route_checks(&r, input);
    Ok(done.finish())
}

fn cmd_kp(ctx: &mut Ctx, a: &KpArgs) -> Result<Done> {
    let route = Route::parse(&a.route)?;
    let p = poset_from_json(&ctx.read_json(&a.poset)?)?;
    let variant = if a.strict {
        KpVariant::Strict
    } else if let Some(w) = &a.weights {
        KpVariant::Weights(parse_list(w, "--weights")?)
    } else if let Some(path) = &a.equiv {
        KpVariant::Equiv(equivalence_from_json(&ctx.read_json(path)?, p.len())?)
    } else {
        KpVariant::Plain
    };
    kp_report(&p, variant, route, &a.out, &poset_to_json(&p).to_string())
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T> {
    v.clone().ok_or_else(|| QsymError::Input(format!("family {} needs {}", family, flag)))
}

/// Maps the edge list of an S file to a mask over the edges of `g`.
fn edge_mask(g: &DirectedGraph, v: &Value) -> Result<u64> {
    let s = graph_from_json(&json!({"n": g.n, "edges": v.get("edges").cloned().unwrap_or(Value::Null)}))?;
    let mut mask = 0u64;
    for e in &s.edges {
        let i =
            g.edges.iter().enumerate().position(|(i, f)| f == e && mask >> i & 1 == 0).ok_or_else(|| {
                QsymError::Input(format!("edge [{}, {}] is not an edge of the graph", e.0 + 1, e.1 + 1))
            })?;
        mask |= 1 << i;
    }
    Ok(mask)
}

fn cmd_family(ctx: &mut Ctx, name: &str, f: &FamilyInputs, out: &OutputOpts) -> Result<Done> {
    let mut done = Done::new();
    let graph = |ctx: &mut Ctx| -> Result<(DirectedGraph, String)> {
        let v = ctx.read_json(&need(&f.graph, "--graph", name)?)?;
        let g = graph_from_json(&v)?;
        Ok((g, v.to_string()))
    };
    // (element, default basis, Psi report to print, extra checks)
    let mut checks = Vec::new();
    let (elem, basis, report): (Elem, &str, Option<PartitionExpansionReport>) = match name {
        "chromatic" => {
            let (g, input) = graph(ctx)?;
            if f.omega || f.check {
                let r = chromatic_psi(&g, f.check)?;
                checks = route_checks(&r, &input);
                let e = if f.omega { Elem::Q(r.element.clone()) } else { Elem::Q(chromatic_x(&g)) };
                (e, if f.omega { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(chromatic_x(&g)), "M", None)
            }
        }
        "kbalanced" => {
            let (g, input) = graph(ctx)?;
            let k = need(&f.k, "--k", name)?;
            if f.omega || f.check {
                let r = k_balanced_psi(&g, k, f.check)?;
                checks = route_checks(&r, &input);
                let e = if f.omega { Elem::Q(r.element.clone()) } else { Elem::Q(k_balanced_x(&g, k)?) };
                (e, if f.omega { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(k_balanced_x(&g, k)?), "M", None)
            }
        }
        "llt" => {
            let (g, input) = graph(ctx)?;
            if f.shift || f.check {
                let r = llt_psi(&g, f.check)?;
                checks = route_checks(&r, &input);
                unimodality_note(&mut done, &r);
                let e = if f.shift { Elem::Q(r.element.clone()) } else { Elem::Q(llt_unicellular(&g)) };
                (e, if f.shift { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(llt_unicellular(&g)), "M", None)
            }
        }
        "llt-vstrip" => {
            let (g, input) = graph(ctx)?;
            let s = edge_mask(&g, &ctx.read_json(&need(&f.edges, "--edges", name)?)?)?;
            if f.shift || f.check {
                let r = llt_vertical_psi(&g, s, f.check)?;
                checks = route_checks(&r, &format!("{} S={:b}", input, s));
                unimodality_note(&mut done, &r);
                let e = if f.shift { Elem::Q(r.element.clone()) } else { Elem::Q(llt_vertical(&g, s)?) };
                (e, if f.shift { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(llt_vertical(&g, s)?), "M", None)
            }
        }
        "bpoly" => {
            let (g, input) = graph(ctx)?;
            if f.shift || f.check {
                let r = b_psi(&g, f.check)?;
                checks = route_checks(&r, &input);
                let e = if f.shift { Elem::Q(r.element.clone()) } else { Elem::Q(b_polynomial(&g)) };
                (e, if f.shift { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(b_polynomial(&g)), "M", None)
            }
        }
        "tutte" => {
            let (g, input) = graph(ctx)?;
            if f.check {
                checks = specialization_checks(&g)?
                    .into_iter()
                    .map(|(n, ok)| Check::holds(n, ok, || input.clone()))
                    .collect();
            }
            (Elem::S(tutte_multivariate(&g)?), "p", None)
        }
        "matroid" => {
            let (m, input, uniform) = match (&f.matroid, &f.uniform) {
                (Some(path), None) => {
                    let v = ctx.read_json(path)?;
                    (matroid_from_json(&v)?, v.to_string(), None)
                }
                (None, Some(u)) => {
                    let nr = parse_list(u, "--uniform")?;
                    if nr.len() != 2 {
                        return Err(QsymError::Input("--uniform takes n,r".into()));
                    }
                    let (n, r) = (nr[0] as usize, nr[1] as usize);
                    (Matroid::uniform(n, r)?, format!("U^{}_{}", r, n), Some((n, r)))
                }
                _ => return Err(QsymError::Input("family matroid needs exactly one of --matroid, --uniform".into())),
            };
            if f.omega || f.check {
                let r = matroid_psi(&m, f.check);
                checks = route_checks(&r, &input);
                if let (true, Some((n, k))) = (f.check, uniform) {
                    let ok = uniform_closed_form(n, k) == r.element;
                    checks.push(Check::holds("uniform closed form", ok, || input.clone()));
                }
                let e = if f.omega { Elem::Q(r.element.clone()) } else { Elem::Q(matroid_f(&m)) };
                (e, if f.omega { "Psi" } else { "M" }, Some(r))
            } else {
                (Elem::Q(matroid_f(&m)), "M", None)
            }
        }
        "eulerian" => {
            let n = need(&f.n, "--n", name)?;
            require_small(n)?;
            let e = q_graded(&eulerian_q(n));
            let r = f.check.then(|| path_poset_sum(n));
            if let Some(r) = &r {
                let input = format!("n={}", n);
                checks.push(Check::holds("permutations = zigzag paths", e == r.element, || input.clone()));
                let closed = eulerian_closed_form(n).to_qsym();
                checks.push(Check::holds("permutations = closed form", e == closed, || input.clone()));
            }
            (Elem::Q(e), "F", r)
        }
        "cycle-eulerian" => {
            let n = need(&f.n, "--n", name)?;
            require_small(n)?;
            let e = q_graded(&cycle_eulerian_q(n));
            if f.check {
                let input = format!("n={}", n);
                let inv = cycle_eulerian_by_inversion(n);
                checks.push(Check::holds("long cycles = Moebius inversion", e == inv, || input.clone()));
                let closed = cycle_eulerian_closed_form(n, SingleRowTerm::One).to_qsym();
                checks.push(Check::holds("long cycles = closed form", e == closed, || input.clone()));
            }
            (Elem::Q(e), "F", None)
        }
        "schur" => {
            let lambda = Partition::new(parse_list(&need(&f.lambda, "--lambda", name)?, "--lambda")?)?;
            if let Some(mu) = &f.mu {
                let mu = Composition::new(parse_list(mu, "--mu")?)?;
                let c = roichman_coeff(&lambda, &mu);
                done.line(format!("roichman({}, {}) = {}", lambda, mu, c));
                done.report.output("roichman", json!(c.to_string()));
            }
            (Elem::Q(schur(&lambda)), "F", None)
        }
        _ => {
            return Err(QsymError::Input(format!(
                "unknown family '{}' (chromatic|kbalanced|llt|llt-vstrip|bpoly|tutte|matroid|eulerian|cycle-eulerian|schur)",
                name
            )))
        }
    };
    emit_element(&mut done, &elem, out, basis)?;
    if let Some(r) = &report {
        emit_certificates(&mut done, r);
    }
    done.report.checks = checks;
    Ok(done.finish())
}

fn require_small(n: usize) -> Result<()> {
    if n == 0 || n > 9 {
        return Err(QsymError::Input("--n must be between 1 and 9 (permutation enumeration)".into()));
    }
    Ok(())
}

/// Reports a non-unimodal certificate; this is information, not a failure.
fn unimodality_note(done: &mut Done, r: &PartitionExpansionReport) {
    let w = non_unimodal_witness(r);
    if let Some(a) = &w {
        done.line(format!("non-unimodal certificate at {}", a));
    }
    done.report.output("non_unimodal", w.map_or(Value::Null, |a| json!(a.parts())));
}

fn cmd_verify(a: &VerifyArgs) -> Result<Done> {
    let suite = Suite::parse(&a.suite)?;
    let checks = run_suite(suite, a.n);
    let mut done = Done::new();
    done.report.output("suite", json!(suite.name()));
    done.report.output("n", a.n.map_or(Value::Null, |n| json!(n)));
    done.report.checks = checks;
    let failed = done.report.checks.iter().filter(|c| !c.passed).count();
    let mut done = done.finish();
    let _ = writeln!(done.text, "{} checks, {} failed", done.report.checks.len(), failed);
    Ok(done)
}

fn finding_json(posets: &[Poset], f: &Finding) -> Value {
    let picks: Vec<Value> = f
        .picks
        .iter()
        .map(|&(i, c)| json!({"poset": poset_to_json(&LabeledPoset::natural(posets[i].clone())), "coeff": c}))
        .collect();
    json!({
        "combination": picks,
        "s": sym_to_text(&f.report.schur, false),
        "h": sym_to_text(&f.report.complete, false),
    })
}

fn cmd_search(ctx: &mut Ctx, a: &SearchArgs) -> Result<Done> {
    let mut done = Done::new();
    if !a.posets.is_empty() {
        let mut posets = Vec::new();
        for p in &a.posets {
            posets.push(poset_from_json(&ctx.read_json(p)?)?.poset);
        }
        let coeffs: Vec<i64> = match &a.coeffs {
            Some(c) => parse_list(c, "--coeffs")?.into_iter().map(i64::from).collect(),
            None => vec![1; posets.len()],
        };
        if coeffs.len() != posets.len() {
            return Err(QsymError::Input("need one coefficient per --poset".into()));
        }
        match evaluate_combination(&posets, &coeffs) {
            Ok(r) => {
                let s = sym_to_text(&r.schur, false);
                let h = sym_to_text(&r.complete, false);
                done.line(format!("s: {}", s));
                done.line(format!("h: {}", h));
                let flag = |p: &Option<Partition>| p.as_ref().map_or(Value::Null, |l| json!(l.parts()));
                if let Some(l) = &r.schur_negative {
                    done.line(format!("not Schur-positive at s{}", l));
                }
                if let Some(l) = &r.h_negative {
                    done.line(format!("not h-positive at h{}", l));
                }
                done.report.output("s", json!(s));
                done.report.output("h", json!(h));
                done.report.output("schur_negative", flag(&r.schur_negative));
                done.report.output("h_negative", flag(&r.h_negative));
                done.report.checks.push(Check::pass_unless("combination is symmetric", None));
            }
            Err(QsymError::NotSymmetric(x, y)) => {
                let w = format!("coefficients of M{} and M{} differ", x, y);
                done.report.checks.push(Check::pass_unless("combination is symmetric", Some(w)));
            }
            Err(e) => return Err(e),
        }
        return Ok(done.finish());
    }
    let pool = KpPool::new(a.n)?;
    let o = search_pool(&pool, a.trials, a.seed);
    done.line(format!("n={} trials={} seed={} pool={} symmetric={}", o.n, o.trials, o.seed, o.pool_size, o.symmetric));
    for (label, f) in [("not Schur-positive", &o.not_schur_positive), ("not h-positive", &o.not_h_positive)] {
        match f {
            Some(f) => {
                let desc: Vec<String> = f
                    .picks
                    .iter()
                    .map(|&(i, c)| {
                        format!("{}*K{}", c, poset_to_json(&LabeledPoset::natural(pool.posets[i].clone()))["covers"])
                    })
                    .collect();
                done.line(format!("{}: {}", label, desc.join(" + ")));
                done.line(format!("  s: {}", sym_to_text(&f.report.schur, false)));
                done.line(format!("  h: {}", sym_to_text(&f.report.complete, false)));
            }
            None => done.line(format!("{}: none found", label)),
        }
    }
    done.report.output("n", json!(o.n));
    done.report.output("trials", json!(o.trials));
    done.report.output("seed", json!(o.seed));
    done.report.output("pool_size", json!(o.pool_size));
    done.report.output("symmetric", json!(o.symmetric));
    done.report.output(
        "not_schur_positive",
        o.not_schur_positive.as_ref().map_or(Value::Null, |f| finding_json(&pool.posets, f)),
    );
    done.report
        .output("not_h_positive", o.not_h_positive.as_ref().map_or(Value::Null, |f| finding_json(&pool.posets, f)));
    Ok(done.finish())
}
