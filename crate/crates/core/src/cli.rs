//! Command-line front end.
//!
//! Every run produces a [`RunReport`]: a human-readable table followed by
//! `key=value` lines. Rationals are always printed as `p/q`.
//!
//! Exit status: 0 when every asserted check passes, 1 on a failed check,
//! 2 on a usage error, 3 on an unreadable or malformed input file.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;

use crate::canon::{code_label, partition_classes};
use crate::certcheck::{
    classify_bounds, group_threshold, non_psd_blocks, orbit_bounds, parse_certificate,
    parse_group_order, PsdVerdict,
};
use crate::classify20::{build_base, classify_all, emit_representatives, MASKS};
use crate::error::{Error, Result};
use crate::f2core::{io, self_orthogonality, Code};
use crate::golay::{build_extended_golay, build_optimal_cw, build_shortened};
use crate::lpbound::{
    forbidden_distances, solve_lp, Constraint, LinearForm, LpProblem, Scheme, Sense, Status,
};
use crate::rational::{format_decimal, format_rational, parse_rational, Q};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

/// Worker-count override used when `--jobs` is absent.
pub const JOBS_ENV: &str = "CODECERT_JOBS";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    /// Human-readable lines printed before the machine section.
    pub table: Vec<String>,
    pub pass: bool,
}

impl RunReport {
    fn new(command: &str) -> RunReport {
        RunReport {
            command: command.to_string(),
            pass: true,
            ..RunReport::default()
        }
    }

    fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.push((key.to_string(), value.to_string()));
    }

    fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push((key.into(), value.to_string()));
    }

    /// Records an asserted check; any failure fails the run.
    fn check(&mut self, name: &str, ok: bool) {
        self.pass &= ok;
        self.result(format!("check.{name}"), ok);
    }

    fn line(&mut self, s: impl Into<String>) {
        self.table.push(s.into());
    }

    fn rows(&mut self, header: &[&str], rows: Vec<Vec<String>>) {
        self.table.extend(render_table(header, &rows));
    }

    /// First result value recorded under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.results
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.table {
            let _ = writeln!(s, "{l}");
        }
        if !self.table.is_empty() {
            s.push('\n');
        }
        let _ = writeln!(s, "command={}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input.{k}={v}");
        }
        for (k, v) in &self.results {
            let _ = writeln!(s, "{k}={v}");
        }
        let _ = writeln!(s, "pass={}", self.pass);
        s
    }
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            width[k] = width[k].max(c.chars().count());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![fmt_row(header.to_vec())];
    out.push("-".repeat(width.iter().sum::<usize>() + 2 * (width.len() - 1)));
    out.extend(
        rows.iter()
            .map(|r| fmt_row(r.iter().map(String::as_str).collect())),
    );
    out
}

#[derive(Parser, Debug)]
#[command(
    name = "codecert",
    version,
    about = "Exact verification runs for binary codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extended Golay code and its shortenings.
    Golay {
        #[command(subcommand)]
        action: GolayAction,
    },
    /// Statistics of a code file.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Optimal constant-weight codes.
    Cw {
        #[command(subcommand)]
        action: CwAction,
    },
    /// Delsarte linear-programming bounds.
    Lp {
        #[command(subcommand)]
        action: LpAction,
    },
    /// Equivalence test of two code files.
    Equiv { a: PathBuf, b: PathBuf },
    /// Equivalence classification.
    #[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
    Classify {
        #[command(subcommand)]
        target: Option<ClassifyTarget>,
        /// Code files to partition into equivalence classes.
        #[arg(long, num_args = 1.., required = true)]
        list: Vec<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Dual-certificate checking.
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
}

#[derive(Subcommand, Debug)]
enum GolayAction {
    Build {
        /// Number of shortenings, 0 for the extended code.
        #[arg(long, default_value_t = 0)]
        shorten: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CodeAction {
    Stats { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CwAction {
    Build {
        n: usize,
        d: usize,
        w: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemeKind {
    Hamming,
    Johnson,
}

#[derive(Args, Debug)]
struct LpArgs {
    #[arg(long, value_enum)]
    scheme: SchemeKind,
    #[arg(long)]
    n: usize,
    /// Weight, Johnson scheme only.
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    d: usize,
    /// Distances forced to zero, comma separated.
    #[arg(long, value_delimiter = ',')]
    force_zero: Vec<usize>,
    /// Force every distance not divisible by K to zero.
    #[arg(long, value_name = "K")]
    divisible_by: Option<usize>,
    /// Side constraint such as `a_14>=2/672` or `total=256`; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    bound: Vec<Constraint>,
}

#[derive(Subcommand, Debug)]
enum LpAction {
    Delsarte {
        #[command(flatten)]
        lp: LpArgs,
        /// Objective such as `a_12`; default is the code size.
        #[arg(long, allow_hyphen_values = true)]
        objective: Option<LinearForm>,
        #[arg(long)]
        minimize: bool,
    },
    Forbidden {
        #[command(flatten)]
        lp: LpArgs,
        #[arg(long)]
        target: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ClassifyTarget {
    /// The 2^16 coset-flip codes of length 20.
    Div4 {
        #[arg(long, value_name = "DIR")]
        emit_reps: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CertAction {
    Verify {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        dual: PathBuf,
        #[arg(long, value_parser = parse_target)]
        target: Q,
        /// Group order such as `23!` or `10626`.
        #[arg(long, value_parser = parse_group)]
        group: BigInt,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn parse_target(s: &str) -> std::result::Result<Q, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational: {s}"))
}

fn parse_group(s: &str) -> std::result::Result<BigInt, String> {
    parse_group_order(s).ok_or_else(|| format!("not a group order: {s}"))
}

/// Parses `argv` (program name first) and runs the selected command.
pub fn dispatch<I, T>(argv: I) -> (RunReport, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let mut r = RunReport::new("usage");
            r.line(e.render().to_string().trim_end());
            let code = if e.use_stderr() {
                r.pass = false;
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            return (r, code);
        }
    };
    let (mut r, outcome) = run(cli.command);
    match outcome {
        Ok(()) => {
            let code = r.exit_code();
            (r, code)
        }
        Err(e) => {
            r.pass = false;
            r.result("error", e.to_string().replace('\n', " "));
            let code = match e {
                Error::Parse { .. } | Error::Io(_) | Error::Misaligned(_) => EXIT_MALFORMED,
                _ => EXIT_FAIL,
            };
            (r, code)
        }
    }
}

fn run(cmd: Command) -> (RunReport, Result<()>) {
    let (name, jobs) = match &cmd {
        Command::Golay { .. } => ("golay build", None),
        Command::Code { .. } => ("code stats", None),
        Command::Cw { .. } => ("cw build", None),
        Command::Lp {
            action: LpAction::Delsarte { .. },
        } => ("lp delsarte", None),
        Command::Lp {
            action: LpAction::Forbidden { .. },
        } => ("lp forbidden", None),
        Command::Equiv { .. } => ("equiv", None),
        Command::Classify {
            target: Some(ClassifyTarget::Div4 { jobs, .. }),
            ..
        } => ("classify div4", *jobs),
        Command::Classify { jobs, .. } => ("classify", *jobs),
        Command::Cert {
            action: CertAction::Verify { jobs, .. },
        } => ("cert verify", *jobs),
    };
    let mut r = RunReport::new(name);
    let outcome = with_jobs(&mut r, jobs, |r| match cmd {
        Command::Golay {
            action: GolayAction::Build { shorten, out },
        } => golay_build(r, shorten, out),
        Command::Code {
            action: CodeAction::Stats { file },
        } => code_stats(r, file),
        Command::Cw {
            action: CwAction::Build { n, d, w, out },
        } => cw_build(r, n, d, w, out),
        Command::Lp {
            action:
                LpAction::Delsarte {
                    lp,
                    objective,
                    minimize,
                },
        } => lp_delsarte(r, lp, objective, minimize),
        Command::Lp {
            action: LpAction::Forbidden { lp, target },
        } => lp_forbidden(r, lp, target),
        Command::Equiv { a, b } => equiv(r, a, b),
        Command::Classify {
            target: Some(ClassifyTarget::Div4 { emit_reps, .. }),
            ..
        } => classify_div4(r, emit_reps),
        Command::Classify {
            target: None, list, ..
        } => classify_list(r, list),
        Command::Cert {
            action:
                CertAction::Verify {
                    problem,
                    dual,
                    target,
                    group,
                    ..
                },
        } => cert_verify(r, problem, dual, target, group),
    });
    (r, outcome)
}

fn worker_count(jobs: Option<usize>) -> Option<usize> {
    jobs.or_else(|| std::env::var(JOBS_ENV).ok()?.trim().parse().ok())
        .filter(|&k| k > 0)
}

fn with_jobs(
    r: &mut RunReport,
    jobs: Option<usize>,
    f: impl FnOnce(&mut RunReport) -> Result<()> + Send,
) -> Result<()> {
    match worker_count(jobs) {
        Some(k) => {
            r.line(format!("note: {k} worker threads"));
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::OutOfRange(e.to_string()))?;
            pool.install(|| f(r))
        }
        None => f(r),
    }
}

fn write_out(r: &mut RunReport, out: Option<PathBuf>, c: &Code) -> Result<()> {
    if let Some(path) = out {
        io::write_code(&path, c)?;
        r.result("written", path.display());
    }
    Ok(())
}

fn code_summary(r: &mut RunReport, c: &Code) {
    r.result("length", c.len());
    r.result("size", c.size());
    r.result(
        "min_distance",
        c.min_distance()
            .map_or("inf".to_string(), |d| d.to_string()),
    );
}

fn weight_rows(r: &mut RunReport, c: &Code) {
    let nonzero = c.weight_enumerator().nonzero();
    let rows = nonzero
        .iter()
        .map(|(w, k)| vec![w.to_string(), k.to_string()])
        .collect();
    r.rows(&["weight", "count"], rows);
    for (w, k) in nonzero {
        r.result(format!("A_{w}"), k);
    }
}

fn golay_build(r: &mut RunReport, shorten: usize, out: Option<PathBuf>) -> Result<()> {
    r.input("shorten", shorten);
    let lin = if shorten == 0 {
        build_extended_golay()
    } else {
        build_shortened(shorten)
    }?;
    let c = lin.to_code()?;
    r.line(format!(
        "[{}, {}] code, {} words",
        c.len(),
        lin.dimension(),
        c.size()
    ));
    r.result("dimension", lin.dimension());
    code_summary(r, &c);
    weight_rows(r, &c);
    r.check("size", c.size() == 1 << (12 - shorten));
    r.check("min_distance", c.min_distance() == Some(8));
    if shorten == 0 {
        r.check("self_dual", lin.is_self_dual());
        r.check("A_12", c.weight_enumerator().count(12) == 2576);
    }
    write_out(r, out, &c)?;
    Ok(())
}

fn code_stats(r: &mut RunReport, file: PathBuf) -> Result<()> {
    r.input("file", file.display());
    let c = io::read_code(&file)?;
    code_summary(r, &c);
    let md = c.min_distance().map_or("∞".to_string(), |d| d.to_string());
    r.line(format!(
        "length {}, size {}, minimum distance {md}",
        c.len(),
        c.size()
    ));
    let dist = c.distance_distribution()?;
    let support = dist.support();
    let rows = support
        .iter()
        .map(|&i| {
            vec![
                i.to_string(),
                format_rational(&dist.a(i)),
                dist.pair_count(i).to_string(),
            ]
        })
        .collect();
    r.rows(&["distance", "a_i", "ordered pairs"], rows);
    for &i in &support {
        r.result(format!("a_{i}"), format_rational(&dist.a(i)));
    }
    weight_rows(r, &c);
    let orth = self_orthogonality(&c);
    r.line(format!(
        "self-orthogonal: {} ({} odd pairs)",
        orth.self_orthogonal,
        orth.odd_pairs.len()
    ));
    r.result("self_orthogonal", orth.self_orthogonal);
    r.result("odd_pairs", orth.odd_pairs.len());
    r.check("distribution_invariants", dist.check_invariants().is_ok());
    Ok(())
}

fn cw_build(r: &mut RunReport, n: usize, d: usize, w: usize, out: Option<PathBuf>) -> Result<()> {
    r.input("n", n);
    r.input("d", d);
    r.input("w", w);
    let c = build_optimal_cw(n, d, w)?;
    r.line(format!("({n},{d},{w}) code with {} words", c.size()));
    code_summary(r, &c);
    r.check("constant_weight", c.is_constant_weight(w));
    r.check("min_distance", c.min_distance().is_none_or(|m| m >= d));
    write_out(r, out, &c)?;
    Ok(())
}

fn lp_problem(r: &mut RunReport, lp: &LpArgs) -> Result<LpProblem> {
    let scheme = match (lp.scheme, lp.w) {
        (SchemeKind::Hamming, None) => Scheme::hamming(lp.n)?,
        (SchemeKind::Hamming, Some(_)) => {
            return Err(Error::Unsupported(
                "--w applies to the Johnson scheme only".into(),
            ))
        }
        (SchemeKind::Johnson, Some(w)) => Scheme::johnson(lp.n, w)?,
        (SchemeKind::Johnson, None) => {
            return Err(Error::Unsupported("the Johnson scheme needs --w".into()))
        }
    };
    let mut extra = Vec::new();
    let mut zero = lp.force_zero.clone();
    if let Some(k) = lp.divisible_by {
        if k == 0 {
            return Err(Error::OutOfRange("--divisible-by must be positive".into()));
        }
        zero.extend(scheme.distances().into_iter().filter(|i| i % k != 0));
    }
    zero.sort_unstable();
    zero.dedup();
    extra.extend(zero.iter().map(|&i| Constraint::force_zero(i)));
    extra.extend(lp.bound.iter().cloned());
    r.input("scheme", scheme);
    r.input("d", lp.d);
    let listed: Vec<String> = extra.iter().map(Constraint::to_string).collect();
    r.input("constraints", listed.join(";"));
    Ok(LpProblem::delsarte(scheme, lp.d, extra))
}

fn floor_of(x: &Q) -> BigInt {
    x.numer().div_floor(x.denom())
}

fn lp_delsarte(
    r: &mut RunReport,
    lp: LpArgs,
    objective: Option<LinearForm>,
    minimize: bool,
) -> Result<()> {
    let mut problem = lp_problem(r, &lp)?;
    if objective.is_some() || minimize {
        let form = objective.unwrap_or_else(LinearForm::total);
        r.input("objective", &form);
        let sense = if minimize {
            Sense::Minimize
        } else {
            Sense::Maximize
        };
        r.input("sense", if minimize { "minimize" } else { "maximize" });
        problem = problem.with_objective(form, sense);
    }
    let res = solve_lp(&problem)?;
    let status = status_name(res.status);
    r.result("status", status);
    if !res.is_optimal() {
        r.line(format!("status: {status}"));
        r.check("optimal", false);
        return Ok(());
    }
    let dual = res.dual_objective(&problem)?;
    r.line(format!(
        "optimum {} = {}",
        format_rational(&res.optimum),
        format_decimal(&res.optimum, 30)
    ));
    r.result("optimum", format_rational(&res.optimum));
    r.result("optimum_decimal", format_decimal(&res.optimum, 30));
    r.result("floor", floor_of(&res.optimum));
    r.result("dual_objective", format_rational(&dual));
    let rows = res
        .primal
        .iter()
        .map(|(i, v)| vec![i.to_string(), format_rational(v), format_decimal(v, 12)])
        .collect();
    r.rows(&["distance", "a_i", "decimal"], rows);
    for (i, v) in &res.primal {
        r.result(format!("a_{i}"), format_rational(v));
    }
    r.check("certificate", res.verify(&problem).is_ok());
    r.check("zero_gap", dual == res.optimum);
    Ok(())
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Optimal => "optimal",
        Status::Infeasible => "infeasible",
    }
}

fn lp_forbidden(r: &mut RunReport, lp: LpArgs, target: u64) -> Result<()> {
    let problem = lp_problem(r, &lp)?;
    r.input("target", target);
    let found = forbidden_distances(problem.scheme, problem.d, target, &problem.extra)?;
    let m = Q::from_integer(BigInt::from(target));
    let mut rows = Vec::new();
    let mut sound = true;
    for f in &found {
        let (status, opt) = match f.proof.status {
            Status::Optimal => ("optimal", format_rational(&f.proof.optimum)),
            s => (status_name(s), "-".to_string()),
        };
        sound &=
            !f.proof.is_optimal() || (f.proof.optimum < m && f.proof.verify(&f.problem).is_ok());
        rows.push(vec![
            f.distance.to_string(),
            status.to_string(),
            opt.clone(),
        ]);
        r.result(
            format!("proof.a_{}", f.distance),
            if f.proof.is_optimal() {
                opt
            } else {
                status.to_string()
            },
        );
    }
    let list: Vec<String> = found.iter().map(|f| f.distance.to_string()).collect();
    r.line(format!(
        "forbidden distances for size {target}: {}",
        if list.is_empty() {
            "none".into()
        } else {
            list.join(", ")
        }
    ));
    r.rows(&["distance", "re-solve", "optimum"], rows);
    r.result("forbidden", list.join(","));
    r.check("proofs_below_target", sound);
    Ok(())
}

fn equiv(r: &mut RunReport, a: PathBuf, b: PathBuf) -> Result<()> {
    r.input("a", a.display());
    r.input("b", b.display());
    let ca = io::read_code(&a)?;
    let cb = io::read_code(&b)?;
    let la = code_label(&ca)?;
    let lb = code_label(&cb)?;
    let verdict = if la == lb {
        "equivalent"
    } else {
        "inequivalent"
    };
    r.line(verdict);
    r.line(format!("{}  {}", la.digest(), a.display()));
    r.line(format!("{}  {}", lb.digest(), b.display()));
    r.result("verdict", verdict);
    r.result("digest_a", la.digest());
    r.result("digest_b", lb.digest());
    Ok(())
}

fn classify_div4(r: &mut RunReport, emit: Option<PathBuf>) -> Result<()> {
    let base = build_base()?;
    let cls = classify_all(&base)?;
    r.line(format!("classes: {}", cls.classes.len()));
    let rows = cls
        .classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            vec![
                (k + 1).to_string(),
                format!("{:04x}", c.representative.0),
                c.size.to_string(),
            ]
        })
        .collect();
    r.rows(&["class", "mask", "size"], rows);
    r.result("classes", cls.classes.len());
    r.result("orbits", cls.orbits);
    r.result("verified", cls.verified);
    r.result("total", cls.total());
    for (k, c) in cls.classes.iter().enumerate() {
        r.result(
            format!("class.{:02}.mask", k + 1),
            format!("{:04x}", c.representative.0),
        );
        r.result(format!("class.{:02}.size", k + 1), c.size);
    }
    r.check("all_verified", cls.verified == MASKS);
    r.check("sizes_sum", cls.total() == MASKS);
    if let Some(dir) = emit {
        let paths = emit_representatives(&base, &cls.classes, &dir)?;
        r.result("emitted", paths.len());
    }
    Ok(())
}

fn classify_list(r: &mut RunReport, files: Vec<PathBuf>) -> Result<()> {
    r.input("files", files.len());
    let codes = files
        .iter()
        .map(io::read_code)
        .collect::<Result<Vec<_>>>()?;
    let classes = partition_classes(&codes)?;
    r.line(format!("classes: {}", classes.len()));
    let mut rows = Vec::new();
    for (k, c) in classes.iter().enumerate() {
        let names: Vec<String> = c
            .members
            .iter()
            .map(|&i| files[i].display().to_string())
            .collect();
        let digest = match &c.label {
            Some(l) => l.digest(),
            None => code_label(&codes[c.representative])?.digest(),
        };
        rows.push(vec![
            (k + 1).to_string(),
            c.count.to_string(),
            digest[..16].to_string(),
            names.join(" "),
        ]);
        r.result(format!("class.{:02}.count", k + 1), c.count);
        r.result(format!("class.{:02}.members", k + 1), names.join(","));
    }
    r.rows(&["class", "count", "label", "files"], rows);
    r.result("classes", classes.len());
    Ok(())
}

fn cert_verify(
    r: &mut RunReport,
    problem: PathBuf,
    dual: PathBuf,
    target: Q,
    group: BigInt,
) -> Result<()> {
    r.input("problem", problem.display());
    r.input("dual", dual.display());
    r.input("target", format_rational(&target));
    r.input("group", &group);
    let ptext = std::fs::read_to_string(&problem)?;
    let dtext = std::fs::read_to_string(&dual)?;
    let cert = parse_certificate(&ptext, &dtext)?;
    let bad = non_psd_blocks(&cert);
    for (label, verdict) in &bad {
        if let PsdVerdict::NotPsd { value, .. } = verdict {
            r.line(format!(
                "block {label} is not PSD: witness value {}",
                format_rational(value)
            ));
            r.result(format!("not_psd.{label}"), format_rational(value));
        }
    }
    r.check("psd", bad.is_empty());
    if !bad.is_empty() {
        return Ok(());
    }
    let report = orbit_bounds(&cert, &target)?;
    let threshold = group_threshold(&group);
    let verdict = classify_bounds(&report, &threshold);
    r.line(format!(
        "dual objective {} ({}), target {}",
        format_rational(&report.dual_objective),
        format_decimal(&report.dual_objective, 12),
        format_rational(&target)
    ));
    let mut rows = Vec::new();
    for o in &report.orbits {
        let mark = |v: &[String]| if v.contains(&o.label) { "yes" } else { "no" };
        let forbidden = mark(&verdict.forbidden);
        rows.push(vec![
            o.label.clone(),
            format_decimal(&o.epsilon, 12),
            format_decimal(&o.x, 12),
            format_decimal(&o.c_signed, 12),
            format_decimal(&o.c_conservative, 12),
            forbidden.to_string(),
            mark(&verdict.conservative).to_string(),
        ]);
        let key = |f: &str| format!("orbit.{}.{f}", o.label);
        r.result(key("epsilon"), format_rational(&o.epsilon));
        r.result(key("x"), format_rational(&o.x));
        r.result(key("c_signed"), format_rational(&o.c_signed));
        r.result(key("c_conservative"), format_rational(&o.c_conservative));
        r.result(key("forbidden"), forbidden == "yes");
    }
    r.rows(
        &[
            "orbit",
            "epsilon",
            "X",
            "c signed",
            "c conservative",
            "forbidden",
            "conservative",
        ],
        rows,
    );
    r.result("dual_objective", format_rational(&report.dual_objective));
    r.result("sum_epsilon", format_rational(&report.sum_epsilon));
    r.result("sum_abs_epsilon", format_rational(&report.sum_abs_epsilon));
    r.result("threshold", format_rational(&threshold));
    r.result("forbidden", verdict.forbidden.join(","));
    r.result("forbidden_conservative", verdict.conservative.join(","));
    r.result("disagreements", verdict.disagreements.join(","));
    if !verdict.disagreements.is_empty() {
        r.line(format!(
            "warning: signed and conservative bounds disagree on {}",
            verdict.disagreements.join(", ")
        ));
    }
    Ok(())
}
