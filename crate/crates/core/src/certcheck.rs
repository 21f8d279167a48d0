//! Exact verification of dual certificates for block-diagonal semidefinite
//! programs.
//!
//! The primal is `max Σ_ω b_ω y_ω` subject to `M = F_∅ - Σ_ω F_ω y_ω ⪰ 0`,
//! where every orbit `ω` owns a 1×1 slot block in which `M` equals `y_ω`.
//! For a dual `X ⪰ 0` with `⟨X, F_ω⟩ = b_ω + ε_ω`, deleting the slot of `ω`
//! from `M` and `X` gives
//!
//! ```text
//! 0 <= ⟨M', X'⟩ = ⟨F_∅, X⟩ - Σ y_ω b_ω - Σ y_ω ε_ω - X_ω y_ω
//! ```
//!
//! so with `Σ y_ω b_ω >= target` and `0 <= y_ω <= 1` one gets
//! `X_ω y_ω <= ⟨F_∅, X⟩ - target + Σ |ε_ω|`. The signed variant with `Σ ε_ω`
//! is reported alongside.
//!
//! # Text format
//!
//! ```text
//! PROBLEM
//! orbit <label> b=<rational> slot=<block>
//! matrix F0 | matrix <orbit label>
//! block <label> dim <d>
//! <i> <j> <value>
//! DUAL
//! block <label> dim <d>
//! <i> <j> <value>
//! ```
//!
//! Indices are 1-based; values are integers, `p/q`, or decimals (parsed
//! exactly). Only one triangle needs to be given; a mirrored entry must
//! agree. `#` starts a comment. Blocks absent from a matrix are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lpbound::{complementary_dual, LpProblem, LpResult, Relation, Sense};
use crate::rational::{factorial, format_rational, parse_rational, Q};

/// Sparse exact symmetric matrix; entries stored for `i <= j`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBlock {
    pub label: String,
    pub dim: usize,
    entries: BTreeMap<(usize, usize), Q>,
}

impl SymBlock {
    pub fn new(label: impl Into<String>, dim: usize) -> SymBlock {
        SymBlock {
            label: label.into(),
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(label: impl Into<String>, rows: &[Vec<Q>]) -> Result<SymBlock> {
        let mut b = SymBlock::new(label, rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rows.len() {
                return Err(Error::Misaligned("dense block is not square".into()));
            }
            for (j, v) in row.iter().enumerate() {
                b.set(i, j, v.clone())?;
            }
        }
        Ok(b)
    }

    /// Sets `(i, j)` and `(j, i)`; conflicting repeats are rejected.
    pub fn set(&mut self, i: usize, j: usize, v: Q) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::OutOfRange(format!(
                "entry ({}, {}) outside block {} of dim {}",
                i + 1,
                j + 1,
                self.label,
                self.dim
            )));
        }
        let key = (i.min(j), i.max(j));
        match self.entries.get(&key) {
            Some(old) if *old != v => Err(Error::Parse {
                line: 0,
                msg: format!(
                    "asymmetric or repeated entry ({}, {}) in block {}",
                    i + 1,
                    j + 1,
                    self.label
                ),
            }),
            _ => {
                if v.is_zero() {
                    self.entries.remove(&key);
                } else {
                    self.entries.insert(key, v);
                }
                Ok(())
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Stored upper-triangle entries, 0-based.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Frobenius inner product `Σ_{i,j} A_ij B_ij`.
    pub fn inner(&self, other: &SymBlock) -> Q {
        let (small, large) = if self.entries.len() <= other.entries.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.entries.iter().fold(Q::zero(), |acc, (&(i, j), v)| {
            match large.entries.get(&(i, j)) {
                Some(w) if i == j => acc + v * w,
                Some(w) => acc + v * w * Q::from_integer(BigInt::from(2)),
                None => acc,
            }
        })
    }

    /// `v^T A v`.
    pub fn quadratic_form(&self, v: &[Q]) -> Q {
        self.entries.iter().fold(Q::zero(), |acc, (&(i, j), a)| {
            if i == j {
                acc + a * &v[i] * &v[i]
            } else {
                acc + a * &v[i] * &v[j] * Q::from_integer(BigInt::from(2))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdVerdict {
    Psd,
    /// `witness^T A witness = value < 0`.
    NotPsd {
        witness: Vec<Q>,
        value: Q,
    },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd)
    }
}

/// Exact PSD decision by symmetric pivoted elimination.
///
/// Congruence steps keep `S = T^T A T`; a negative diagonal entry of `S`, or
/// a nonzero off-diagonal entry in an all-zero diagonal, yields a witness
/// through `T`.
pub fn check_psd(b: &SymBlock) -> PsdVerdict {
    let n = b.dim;
    let mut s = b.to_dense();
    let mut t: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let column = |t: &Vec<Vec<Q>>, coeffs: &[(usize, Q)]| -> Vec<Q> {
        (0..n)
            .map(|r| {
                coeffs
                    .iter()
                    .fold(Q::zero(), |acc, (c, k)| acc + &t[r][*c] * k)
            })
            .collect()
    };
    let verdict = |witness: Vec<Q>| {
        let value = b.quadratic_form(&witness);
        debug_assert!(value.is_negative());
        PsdVerdict::NotPsd { witness, value }
    };
    while !active.is_empty() {
        if let Some(&i) = active.iter().find(|&&i| s[i][i].is_negative()) {
            return verdict(column(&t, &[(i, Q::one())]));
        }
        let Some(pos) = active.iter().position(|&i| s[i][i].is_positive()) else {
            for (a, &i) in active.iter().enumerate() {
                for &j in &active[a + 1..] {
                    if !s[i][j].is_zero() {
                        let sign = if s[i][j].is_positive() {
                            -Q::one()
                        } else {
                            Q::one()
                        };
                        return verdict(column(&t, &[(i, Q::one()), (j, sign)]));
                    }
                }
            }
            return PsdVerdict::Psd;
        };
        let p = active.remove(pos);
        let pivot = s[p][p].clone();
        for &j in &active {
            if s[p][j].is_zero() {
                continue;
            }
            let f = &s[p][j] / &pivot;
            // column j -= f column p, then row j -= f row p
            for r in 0..n {
                let v = &s[r][p] * &f;
                s[r][j] -= v;
            }
            for c in 0..n {
                let v = &s[p][c] * &f;
                s[j][c] -= v;
            }
            for row in t.iter_mut() {
                let v = &row[p] * &f;
                row[j] -= v;
            }
        }
    }
    PsdVerdict::Psd
}

/// A block-diagonal symmetric matrix; missing blocks are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockMatrix {
    pub blocks: BTreeMap<String, SymBlock>,
}

impl BlockMatrix {
    pub fn block(&self, label: &str) -> Option<&SymBlock> {
        self.blocks.get(label)
    }

    pub fn inner(&self, other: &BlockMatrix) -> Q {
        self.blocks
            .iter()
            .filter_map(|(l, b)| other.blocks.get(l).map(|o| b.inner(o)))
            .fold(Q::zero(), |a, v| a + v)
    }

    /// Inner product skipping one block.
    pub fn inner_without(&self, other: &BlockMatrix, skip: &str) -> Q {
        self.blocks
            .iter()
            .filter(|(l, _)| l.as_str() != skip)
            .filter_map(|(l, b)| other.blocks.get(l).map(|o| b.inner(o)))
            .fold(Q::zero(), |a, v| a + v)
    }

    fn insert(&mut self, b: SymBlock) {
        self.blocks.insert(b.label.clone(), b);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub label: String,
    pub b: Q,
    /// 1×1 block where `M` equals `y_ω`.
    pub slot: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Problem {
    pub orbits: Vec<Orbit>,
    pub f0: BlockMatrix,
    pub f: BTreeMap<String, BlockMatrix>,
    pub dims: BTreeMap<String, usize>,
}

impl Problem {
    /// `M = F_∅ - Σ_ω F_ω y_ω` for the given primal values.
    pub fn primal_matrix(&self, y: &BTreeMap<String, Q>) -> Result<BlockMatrix> {
        let mut dense: BTreeMap<&str, Vec<Vec<Q>>> = self
            .dims
            .iter()
            .map(|(l, &d)| (l.as_str(), vec![vec![Q::zero(); d]; d]))
            .collect();
        let mut add = |m: &BlockMatrix, k: &Q| {
            for (l, b) in &m.blocks {
                let target = dense.get_mut(l.as_str()).expect("declared block");
                for (i, j, v) in b.entries() {
                    target[i][j] += v * k;
                    if i != j {
                        target[j][i] += v * k;
                    }
                }
            }
        };
        add(&self.f0, &Q::one());
        for o in &self.orbits {
            let yv = y.get(&o.label).ok_or_else(|| {
                Error::Misaligned(format!("no primal value for orbit {}", o.label))
            })?;
            if let Some(f) = self.f.get(&o.label) {
                add(f, &-yv.clone());
            }
        }
        let mut out = BlockMatrix::default();
        for (l, rows) in dense {
            out.insert(SymBlock::from_dense(l, &rows)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub problem: Problem,
    pub dual: BlockMatrix,
}

impl Certificate {
    /// Checks block labels, dimensions and orbit slots.
    pub fn new(problem: Problem, dual: BlockMatrix) -> Result<Certificate> {
        for (l, b) in &dual.blocks {
            match problem.dims.get(l) {
                None => {
                    return Err(Error::Misaligned(format!(
                        "dual block {l} is not in the problem"
                    )))
                }
                Some(&d) if d != b.dim => {
                    return Err(Error::Misaligned(format!(
                        "block {l} has dim {} in the dual, {d} in the problem",
                        b.dim
                    )))
                }
                _ => {}
            }
        }
        for o in &problem.orbits {
            if problem.dims.get(&o.slot) != Some(&1) {
                return Err(Error::Misaligned(format!(
                    "slot {} of orbit {} is not a 1x1 block",
                    o.slot, o.label
                )));
            }
        }
        Ok(Certificate { problem, dual })
    }

    pub fn dual_objective(&self) -> Q {
        self.problem.f0.inner(&self.dual)
    }

    /// `X_ω`, the dual entry in the orbit's slot.
    pub fn slot_value(&self, o: &Orbit) -> Q {
        self.dual
            .block(&o.slot)
            .map(|b| b.get(0, 0))
            .unwrap_or_else(Q::zero)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

#[derive(PartialEq)]
enum Section {
    None,
    Problem,
    Dual,
}

/// Parses a file holding a `PROBLEM` section, a `DUAL` section, or both.
pub fn parse_sections(text: &str) -> Result<(Option<Problem>, Option<BlockMatrix>)> {
    let mut section = Section::None;
    let mut problem: Option<Problem> = None;
    let mut dual: Option<BlockMatrix> = None;
    let mut matrix: Option<String> = None;
    let mut current: Option<SymBlock> = None;
    let mut dims: BTreeMap<String, usize> = BTreeMap::new();

    fn flush(
        current: &mut Option<SymBlock>,
        section: &Section,
        matrix: &Option<String>,
        problem: &mut Option<Problem>,
        dual: &mut Option<BlockMatrix>,
    ) {
        if let Some(b) = current.take().filter(|b| !b.entries.is_empty()) {
            match section {
                Section::Problem => {
                    let p = problem.as_mut().expect("problem open");
                    match matrix.as_deref() {
                        Some("F0") => p.f0.insert(b),
                        Some(name) => p.f.entry(name.to_string()).or_default().insert(b),
                        None => {}
                    }
                }
                Section::Dual => dual.as_mut().expect("dual open").insert(b),
                Section::None => {}
            }
        }
    }

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "PROBLEM" | "DUAL" => {
                flush(&mut current, &section, &matrix, &mut problem, &mut dual);
                matrix = None;
                if toks[0] == "PROBLEM" {
                    if problem.is_some() {
                        return Err(parse_err(line_no, "repeated PROBLEM section"));
                    }
                    section = Section::Problem;
                    problem = Some(Problem::default());
                } else {
                    if dual.is_some() {
                        return Err(parse_err(line_no, "repeated DUAL section"));
                    }
                    section = Section::Dual;
                    dual = Some(BlockMatrix::default());
                }
            }
            "orbit" => {
                if section != Section::Problem || toks.len() != 4 {
                    return Err(parse_err(
                        line_no,
                        "orbit line outside PROBLEM or malformed",
                    ));
                }
                let b = toks[2]
                    .strip_prefix("b=")
                    .and_then(parse_rational)
                    .ok_or_else(|| parse_err(line_no, "bad b= value"))?;
                let slot = toks[3]
                    .strip_prefix("slot=")
                    .ok_or_else(|| parse_err(line_no, "missing slot="))?;
                let p = problem.as_mut().expect("problem open");
                if p.orbits.iter().any(|o| o.label == toks[1]) || toks[1] == "F0" {
                    return Err(parse_err(
                        line_no,
                        format!("duplicate or reserved orbit label {}", toks[1]),
                    ));
                }
                p.orbits.push(Orbit {
                    label: toks[1].to_string(),
                    b,
                    slot: slot.to_string(),
                });
            }
            "matrix" => {
                if section != Section::Problem || toks.len() != 2 {
                    return Err(parse_err(
                        line_no,
                        "matrix line outside PROBLEM or malformed",
                    ));
                }
                flush(&mut current, &section, &matrix, &mut problem, &mut dual);
                matrix = Some(toks[1].to_string());
            }
            "block" => {
                if toks.len() != 4 || toks[2] != "dim" {
                    return Err(parse_err(line_no, "expected `block <label> dim <d>`"));
                }
                if section == Section::None || (section == Section::Problem && matrix.is_none()) {
                    return Err(parse_err(line_no, "block outside a matrix"));
                }
                flush(&mut current, &section, &matrix, &mut problem, &mut dual);
                let d: usize = toks[3]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad dimension"))?;
                if d == 0 {
                    return Err(parse_err(line_no, "zero dimension"));
                }
                if section == Section::Problem {
                    if let Some(&old) = dims.get(toks[1]) {
                        if old != d {
                            return Err(parse_err(
                                line_no,
                                format!("block {} redeclared with dim {d}", toks[1]),
                            ));
                        }
                    }
                    dims.insert(toks[1].to_string(), d);
                    let p = problem.as_ref().expect("problem open");
                    let m = matrix.as_deref().expect("matrix open");
                    let exists = if m == "F0" {
                        p.f0.blocks.contains_key(toks[1])
                    } else {
                        p.f.get(m).is_some_and(|x| x.blocks.contains_key(toks[1]))
                    };
                    if exists {
                        return Err(parse_err(
                            line_no,
                            format!("block {} repeated in matrix {m}", toks[1]),
                        ));
                    }
                } else if dual
                    .as_ref()
                    .expect("dual open")
                    .blocks
                    .contains_key(toks[1])
                {
                    return Err(parse_err(
                        line_no,
                        format!("block {} repeated in DUAL", toks[1]),
                    ));
                }
                current = Some(SymBlock::new(toks[1], d));
            }
            _ => {
                let b = current
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, format!("unexpected line {line:?}")))?;
                if toks.len() != 3 {
                    return Err(parse_err(line_no, "expected `<i> <j> <value>`"));
                }
                let i: usize = toks[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad row index"))?;
                let j: usize = toks[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad column index"))?;
                let v = parse_rational(toks[2]).ok_or_else(|| parse_err(line_no, "bad value"))?;
                if i == 0 || j == 0 {
                    return Err(parse_err(line_no, "indices are 1-based"));
                }
                b.set(i - 1, j - 1, v).map_err(|e| match e {
                    Error::Parse { msg, .. } => parse_err(line_no, msg),
                    other => parse_err(line_no, other.to_string()),
                })?;
            }
        }
    }
    flush(&mut current, &section, &matrix, &mut problem, &mut dual);
    if let Some(p) = problem.as_mut() {
        p.dims = dims;
        for name in p.f.keys() {
            if !p.orbits.iter().any(|o| &o.label == name) {
                return Err(parse_err(0, format!("matrix {name} names no orbit")));
            }
        }
    }
    Ok((problem, dual))
}

pub fn parse_certificate(problem_text: &str, dual_text: &str) -> Result<Certificate> {
    let (p, d1) = parse_sections(problem_text)?;
    let (p2, d2) = parse_sections(dual_text)?;
    let problem = p.or(p2).ok_or_else(|| parse_err(0, "no PROBLEM section"))?;
    let dual = d2.or(d1).ok_or_else(|| parse_err(0, "no DUAL section"))?;
    Certificate::new(problem, dual)
}

fn write_block(out: &mut String, b: &SymBlock) {
    let _ = writeln!(out, "block {} dim {}", b.label, b.dim);
    for (i, j, v) in b.entries() {
        let _ = writeln!(out, "{} {} {}", i + 1, j + 1, format_rational(v));
    }
}

pub fn format_problem(p: &Problem) -> String {
    let mut out = String::from("PROBLEM\n");
    for o in &p.orbits {
        let _ = writeln!(
            out,
            "orbit {} b={} slot={}",
            o.label,
            format_rational(&o.b),
            o.slot
        );
    }
    // declare every block once so that dimensions survive a round trip
    let mut declared: BTreeMap<&str, usize> =
        p.dims.iter().map(|(l, d)| (l.as_str(), *d)).collect();
    out.push_str("matrix F0\n");
    for b in p.f0.blocks.values() {
        declared.remove(b.label.as_str());
        write_block(&mut out, b);
    }
    for (l, d) in declared {
        let _ = writeln!(out, "block {l} dim {d}");
    }
    for o in &p.orbits {
        if let Some(m) = p.f.get(&o.label) {
            let _ = writeln!(out, "matrix {}", o.label);
            for b in m.blocks.values() {
                write_block(&mut out, b);
            }
        }
    }
    out
}

pub fn format_dual(d: &BlockMatrix) -> String {
    let mut out = String::from("DUAL\n");
    for b in d.blocks.values() {
        write_block(&mut out, b);
    }
    out
}

/// `ε_ω = ⟨X, F_ω⟩ - b_ω` per orbit.
pub fn compute_epsilons(c: &Certificate) -> BTreeMap<String, Q> {
    c.problem
        .orbits
        .iter()
        .map(|o| {
            let ip = c
                .problem
                .f
                .get(&o.label)
                .map(|f| f.inner(&c.dual))
                .unwrap_or_else(Q::zero);
            (o.label.clone(), ip - &o.b)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBound {
    pub label: String,
    pub epsilon: Q,
    pub x: Q,
    /// `⟨F_∅, X⟩ - target + Σ ε`
    pub c_signed: Q,
    /// `⟨F_∅, X⟩ - target + Σ |ε|`
    pub c_conservative: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBoundReport {
    pub dual_objective: Q,
    pub target: Q,
    pub sum_epsilon: Q,
    pub sum_abs_epsilon: Q,
    pub orbits: Vec<OrbitBound>,
}

/// Dual blocks that fail the PSD test, with their verdicts.
pub fn non_psd_blocks(c: &Certificate) -> Vec<(String, PsdVerdict)> {
    let blocks: Vec<&SymBlock> = c.dual.blocks.values().collect();
    blocks
        .par_iter()
        .map(|b| (b.label.clone(), check_psd(b)))
        .filter(|(_, v)| !v.is_psd())
        .collect()
}

pub fn orbit_bounds(c: &Certificate, target: &Q) -> Result<OrbitBoundReport> {
    if let Some((label, _)) = non_psd_blocks(c).into_iter().next() {
        return Err(Error::NotPsd(label));
    }
    let eps = compute_epsilons(c);
    let dual_objective = c.dual_objective();
    let sum_epsilon = eps.values().fold(Q::zero(), |a, e| a + e);
    let sum_abs_epsilon = eps.values().fold(Q::zero(), |a, e| a + e.abs());
    let base = &dual_objective - target;
    let orbits = c
        .problem
        .orbits
        .iter()
        .map(|o| OrbitBound {
            label: o.label.clone(),
            epsilon: eps[&o.label].clone(),
            x: c.slot_value(o),
            c_signed: &base + &sum_epsilon,
            c_conservative: &base + &sum_abs_epsilon,
        })
        .collect();
    Ok(OrbitBoundReport {
        dual_objective,
        target: target.clone(),
        sum_epsilon,
        sum_abs_epsilon,
        orbits,
    })
}

/// `X_ω > 0` and `c / X_ω < threshold`.
fn is_forbidden(c: &Q, x: &Q, threshold: &Q) -> bool {
    x.is_positive() && &(c / x) < threshold
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenOrbits {
    /// Decided with the signed bound.
    pub forbidden: Vec<String>,
    /// Decided with the `Σ |ε|` bound.
    pub conservative: Vec<String>,
    /// Orbits where the two bounds disagree.
    pub disagreements: Vec<String>,
}

/// Orbits `ω` with `X_ω > 0` and `c_ω / X_ω < threshold`; `threshold` is the
/// smallest positive value `y_ω` can take, e.g. `1/|G|`.
pub fn forbidden_orbits(c: &Certificate, target: &Q, threshold: &Q) -> Result<ForbiddenOrbits> {
    let report = orbit_bounds(c, target)?;
    Ok(classify_bounds(&report, threshold))
}

pub fn classify_bounds(report: &OrbitBoundReport, threshold: &Q) -> ForbiddenOrbits {
    let mut out = ForbiddenOrbits {
        forbidden: Vec::new(),
        conservative: Vec::new(),
        disagreements: Vec::new(),
    };
    for o in &report.orbits {
        let s = is_forbidden(&o.c_signed, &o.x, threshold);
        let k = is_forbidden(&o.c_conservative, &o.x, threshold);
        if s {
            out.forbidden.push(o.label.clone());
        }
        if k {
            out.conservative.push(o.label.clone());
        }
        if s != k {
            out.disagreements.push(o.label.clone());
        }
    }
    out
}

/// Parses a group order such as `23!` or `10626`.
pub fn parse_group_order(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let order = match s.strip_suffix('!') {
        Some(n) => factorial(n.parse().ok()?),
        None => s.parse().ok()?,
    };
    order.is_positive().then_some(order)
}

/// `1/|G|`.
pub fn group_threshold(order: &BigInt) -> Q {
    Q::new(BigInt::one(), order.clone())
}

/// Both sides of the slot-removal identity for one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotIdentity {
    pub orbit: String,
    /// `⟨M', X'⟩` computed block by block.
    pub direct: Q,
    /// `⟨F_∅, X⟩ - Σ y b - Σ y ε - X_ω y_ω`.
    pub expanded: Q,
}

/// Evaluates `⟨M', X'⟩` directly and through its expansion for every orbit,
/// given primal values `y`. Errors if the two ever differ.
pub fn slot_identity(c: &Certificate, y: &BTreeMap<String, Q>) -> Result<Vec<SlotIdentity>> {
    let m = c.problem.primal_matrix(y)?;
    let eps = compute_epsilons(c);
    let f0x = c.dual_objective();
    let yb = c
        .problem
        .orbits
        .iter()
        .fold(Q::zero(), |a, o| a + &y[&o.label] * &o.b);
    let ye = c
        .problem
        .orbits
        .iter()
        .fold(Q::zero(), |a, o| a + &y[&o.label] * &eps[&o.label]);
    let mut out = Vec::new();
    for o in &c.problem.orbits {
        let direct = m.inner_without(&c.dual, &o.slot);
        let expanded = &f0x - &yb - &ye - c.slot_value(o) * &y[&o.label];
        if direct != expanded {
            return Err(Error::Verification(format!(
                "slot identity fails for orbit {}: {} vs {}",
                o.label,
                format_rational(&direct),
                format_rational(&expanded)
            )));
        }
        out.push(SlotIdentity {
            orbit: o.label.clone(),
            direct,
            expanded,
        });
    }
    Ok(out)
}

/// Orbit label used for LP variable `a_i`.
pub fn lp_orbit_label(i: usize) -> String {
    format!("a_{i}")
}

/// Embeds an optimal Delsarte LP as a diagonal SDP certificate.
///
/// Each LP row becomes a 1×1 block (`<=` as is, `>=` negated, equalities as
/// both), each variable gets a nonnegativity slot, and the dual is replaced
/// by a strictly complementary one so that every variable vanishing on the
/// whole optimal face has a positive slot entry. Every variable becomes an
/// orbit labeled `a_<i>`; the returned map holds the labels of the
/// distances in `query`.
pub fn lp_as_certificate(
    problem: &LpProblem,
    result: &LpResult,
    query: &[usize],
) -> Result<(Certificate, BTreeMap<usize, String>)> {
    if !result.is_optimal() {
        return Err(Error::Unsupported("certificate of a non-optimal LP".into()));
    }
    if problem.sense != Sense::Maximize {
        return Err(Error::Unsupported("certificate of a minimization".into()));
    }
    let full = complementary_dual(problem, result)?;
    let (lp, labels) = problem.to_program()?;
    let distances = problem.scheme.distances();
    let mut p = Problem::default();
    let mut x = BlockMatrix::default();
    let mut rows: Vec<(String, Vec<Q>, Q, Q)> = Vec::new();
    for ((row, label), y) in lp.rows.iter().zip(&labels).zip(&full.dual) {
        let name = label.to_string();
        match row.relation {
            Relation::Le => rows.push((name, row.coeffs.clone(), row.rhs.clone(), y.clone())),
            Relation::Ge => rows.push((
                name,
                row.coeffs.iter().map(|c| -c.clone()).collect(),
                -row.rhs.clone(),
                -y.clone(),
            )),
            Relation::Eq => {
                let (pos, neg) = if y.is_negative() {
                    (Q::zero(), -y.clone())
                } else {
                    (y.clone(), Q::zero())
                };
                rows.push((
                    format!("{name}.le"),
                    row.coeffs.clone(),
                    row.rhs.clone(),
                    pos,
                ));
                rows.push((
                    format!("{name}.ge"),
                    row.coeffs.iter().map(|c| -c.clone()).collect(),
                    -row.rhs.clone(),
                    neg,
                ));
            }
        }
    }
    let mut mapping = BTreeMap::new();
    for (k, &i) in distances.iter().enumerate() {
        let label = lp_orbit_label(i);
        let slot = format!("nn.{label}");
        p.orbits.push(Orbit {
            label: label.clone(),
            b: lp.objective[k].clone(),
            slot: slot.clone(),
        });
        let mut f = BlockMatrix::default();
        let mut s = SymBlock::new(slot.clone(), 1);
        s.set(0, 0, -Q::one())?;
        f.insert(s);
        for (name, coeffs, _, _) in &rows {
            if !coeffs[k].is_zero() {
                let mut b = SymBlock::new(name.clone(), 1);
                b.set(0, 0, coeffs[k].clone())?;
                f.insert(b);
            }
        }
        p.f.insert(label.clone(), f);
        p.dims.insert(slot.clone(), 1);
        let mut xs = SymBlock::new(slot, 1);
        xs.set(0, 0, full.reduced_costs[k].1.clone())?;
        x.insert(xs);
        if query.contains(&i) {
            mapping.insert(i, label);
        }
    }
    for (name, _, rhs, y) in rows {
        p.dims.insert(name.clone(), 1);
        let mut b = SymBlock::new(name.clone(), 1);
        b.set(0, 0, rhs)?;
        p.f0.insert(b);
        let mut xb = SymBlock::new(name, 1);
        xb.set(0, 0, y)?;
        x.insert(xb);
    }
    Ok((Certificate::new(p, x)?, mapping))
}

/// Distances in `mapping` whose orbits the certificate pipeline forbids for
/// a code of size `target` (threshold `2/target`).
pub fn lp_forbidden_distances(
    c: &Certificate,
    mapping: &BTreeMap<usize, String>,
    target: u64,
) -> Result<Vec<usize>> {
    let m = Q::from_integer(BigInt::from(target));
    let threshold = Q::new(BigInt::from(2), BigInt::from(target));
    let f = forbidden_orbits(c, &m, &threshold)?;
    Ok(mapping
        .iter()
        .filter(|(_, l)| f.forbidden.contains(l))
        .map(|(&i, _)| i)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn dense(rows: &[&[i64]]) -> SymBlock {
        let rows: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        SymBlock::from_dense("A", &rows).unwrap()
    }

    #[test]
    fn psd_examples() {
        assert!(check_psd(&dense(&[&[1, 0], &[0, 1]])).is_psd());
        match check_psd(&dense(&[&[-1]])) {
            PsdVerdict::NotPsd { witness, value } => {
                assert_eq!(witness, vec![q(1)]);
                assert_eq!(value, q(-1));
            }
            PsdVerdict::Psd => panic!("-1 is not PSD"),
        }
        let a = dense(&[&[1, 2], &[2, 1]]);
        assert_eq!(a.quadratic_form(&[q(1), q(-1)]), q(-2));
        assert!(!check_psd(&a).is_psd());
        assert!(check_psd(&dense(&[&[0, 0], &[0, 0]])).is_psd());
        let b = dense(&[&[0, 1], &[1, 0]]);
        match check_psd(&b) {
            PsdVerdict::NotPsd { value, .. } => assert_eq!(value, q(-2)),
            PsdVerdict::Psd => panic!(),
        }
        assert!(check_psd(&dense(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]])).is_psd());
    }

    #[test]
    fn asymmetric_entries_rejected() {
        let mut b = SymBlock::new("A", 2);
        b.set(0, 1, q(1)).unwrap();
        b.set(1, 0, q(1)).unwrap();
        assert!(b.set(1, 0, q(2)).is_err());
        assert!(b.set(2, 0, q(2)).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(parse_group_order("5!"), Some(BigInt::from(120)));
        assert_eq!(parse_group_order("10626"), Some(BigInt::from(10626)));
        assert_eq!(parse_group_order("0"), None);
        assert_eq!(parse_group_order("x!"), None);
        let t = group_threshold(&factorial(23));
        assert!(t > Q::new(BigInt::one(), num_traits::pow(BigInt::from(10), 23)));
        assert!(Q::new(BigInt::one(), num_traits::pow(BigInt::from(10), 90)) < t);
    }

    const SMALL: &str = "PROBLEM
orbit w b=1 slot=s
matrix F0
block r dim 1
1 1 3
matrix w
block r dim 1
1 1 1
block s dim 1
1 1 -1
";

    #[test]
    fn tiny_certificate() {
        // max y s.t. y <= 3, y >= 0; X_r = 1 is the exact dual
        let c = parse_certificate(SMALL, "DUAL\nblock r dim 1\n1 1 1\n").unwrap();
        assert_eq!(compute_epsilons(&c)["w"], q(0));
        let r = orbit_bounds(&c, &q(3)).unwrap();
        assert_eq!(r.orbits[0].c_signed, q(0));
        let f = forbidden_orbits(&c, &q(3), &frac(1, 2)).unwrap();
        assert!(f.forbidden.is_empty(), "slot entry is zero");
        // a dual with positive slack is still feasible but has a gap
        let c =
            parse_certificate(SMALL, "DUAL\nblock r dim 1\n1 1 2\nblock s dim 1\n1 1 1\n").unwrap();
        let r = orbit_bounds(&c, &q(3)).unwrap();
        assert_eq!(r.orbits[0].c_signed, q(3));
        assert_eq!(r.orbits[0].x, q(1));
        let bad = parse_certificate(SMALL, "DUAL\nblock r dim 1\n1 1 -1\n").unwrap();
        assert!(matches!(orbit_bounds(&bad, &q(3)), Err(Error::NotPsd(_))));
    }

    #[test]
    fn misaligned_dual() {
        assert!(matches!(
            parse_certificate(SMALL, "DUAL\nblock q dim 1\n1 1 1\n"),
            Err(Error::Misaligned(_))
        ));
        assert!(matches!(
            parse_certificate(SMALL, "DUAL\nblock r dim 2\n1 1 1\n"),
            Err(Error::Misaligned(_))
        ));
    }

    #[test]
    fn round_trip_format() {
        let c = parse_certificate(SMALL, "DUAL\nblock r dim 1\n1 1 0.5\n").unwrap();
        let again = parse_certificate(&format_problem(&c.problem), &format_dual(&c.dual)).unwrap();
        assert_eq!(again, c);
    }
}
