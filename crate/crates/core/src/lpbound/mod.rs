//! Exact Delsarte linear programming bounds in the Hamming and Johnson schemes.
//!
//! Variables are the distance distribution `a_i`, normalized per codeword so
//! that `Σ_i a_i = |C|`. External interfaces always use true distances; the
//! Johnson scheme only has even classes `0, 2, ..., 2 min(w, n-w)`.

mod polynomials;
pub mod simplex;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, format_rational, parse_rational, Q};
pub use polynomials::{eberlein, krawtchouk};
pub use simplex::{LinearProgram, Relation, Solution, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Hamming { n: usize },
    Johnson { n: usize, w: usize },
}

impl Scheme {
    pub fn hamming(n: usize) -> Result<Scheme> {
        if n == 0 {
            return Err(Error::OutOfRange("Hamming scheme needs n >= 1".into()));
        }
        Ok(Scheme::Hamming { n })
    }

    pub fn johnson(n: usize, w: usize) -> Result<Scheme> {
        if w == 0 || w > n {
            return Err(Error::OutOfRange(format!(
                "Johnson scheme needs 0 < w <= n, got n={n}, w={w}"
            )));
        }
        Ok(Scheme::Johnson { n, w })
    }

    pub fn length(&self) -> usize {
        match *self {
            Scheme::Hamming { n } | Scheme::Johnson { n, .. } => n,
        }
    }

    /// Number of nontrivial eigenspaces / classes.
    fn rank(&self) -> usize {
        match *self {
            Scheme::Hamming { n } => n,
            Scheme::Johnson { n, w } => w.min(n - w),
        }
    }

    /// The distance classes, ascending.
    pub fn distances(&self) -> Vec<usize> {
        match self {
            Scheme::Hamming { n } => (0..=*n).collect(),
            Scheme::Johnson { .. } => (0..=self.rank()).map(|j| 2 * j).collect(),
        }
    }

    pub fn is_distance(&self, i: usize) -> bool {
        match self {
            Scheme::Hamming { n } => i <= *n,
            Scheme::Johnson { .. } => i.is_multiple_of(2) && i / 2 <= self.rank(),
        }
    }

    fn index_of(&self, i: usize) -> Option<usize> {
        if !self.is_distance(i) {
            return None;
        }
        Some(match self {
            Scheme::Hamming { .. } => i,
            Scheme::Johnson { .. } => i / 2,
        })
    }

    /// Delsarte inequalities `Σ_i a_i q_k(i) >= 0` for `k = 1..=rank`, one
    /// coefficient vector per `k` indexed like [`Scheme::distances`].
    pub fn delsarte_rows(&self) -> Vec<Vec<Q>> {
        match *self {
            Scheme::Hamming { n } => (1..=n)
                .map(|k| {
                    (0..=n)
                        .map(|i| Q::from_integer(krawtchouk(n, k, i).expect("in range")))
                        .collect()
                })
                .collect(),
            Scheme::Johnson { n, w } => {
                let w = w.min(n - w);
                (1..=w)
                    .map(|k| {
                        (0..=w)
                            .map(|j| {
                                let valency = binomial(w as i64, j as i64)
                                    * binomial((n - w) as i64, j as i64);
                                Q::new(eberlein(n, w, j, k).expect("in range"), valency)
                            })
                            .collect()
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Hamming { n } => write!(f, "hamming(n={n})"),
            Scheme::Johnson { n, w } => write!(f, "johnson(n={n}, w={w})"),
        }
    }
}

/// A linear form over the `a_i`, keyed by distance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub terms: BTreeMap<usize, Q>,
    /// Coefficient of `Σ_i a_i`, kept symbolic until the scheme is known.
    pub total: Q,
}

impl LinearForm {
    pub fn var(i: usize) -> LinearForm {
        let mut f = LinearForm::default();
        f.add_term(i, Q::one());
        f
    }

    /// `Σ_i a_i`, which is `|C|` under the per-codeword normalization.
    pub fn total() -> LinearForm {
        LinearForm {
            terms: BTreeMap::new(),
            total: Q::one(),
        }
    }

    pub fn sum_of(distances: &[usize]) -> LinearForm {
        let mut f = LinearForm::default();
        for &i in distances {
            f.add_term(i, Q::one());
        }
        f
    }

    pub fn add_term(&mut self, i: usize, c: Q) {
        let e = self.terms.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&i);
        }
    }

    fn dense(&self, scheme: &Scheme) -> Result<Vec<Q>> {
        let ds = scheme.distances();
        let mut v = vec![self.total.clone(); ds.len()];
        for (&i, c) in &self.terms {
            let k = scheme.index_of(i).ok_or_else(|| {
                Error::OutOfRange(format!("a_{i} is not a distance class of {scheme}"))
            })?;
            v[k] += c;
        }
        Ok(v)
    }

    /// The single distance this form pins, if it is `c·a_i` with `c > 0`.
    fn single(&self) -> Option<usize> {
        if self.total.is_zero() && self.terms.len() == 1 {
            let (&i, c) = self.terms.iter().next()?;
            if c.is_positive() {
                return Some(i);
            }
        }
        None
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(Q, String)> = self
            .terms
            .iter()
            .map(|(i, c)| (c.clone(), format!("a_{i}")))
            .collect();
        if !self.total.is_zero() {
            parts.push((self.total.clone(), "total".to_string()));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, name)) in parts.iter().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{}*{name}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// A side constraint such as `a_14>=2/672` or `a_10+a_14+a_18>=208/616`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub form: LinearForm,
    pub relation: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(form: LinearForm, relation: Relation, rhs: Q) -> Constraint {
        Constraint {
            form,
            relation,
            rhs,
        }
    }

    pub fn force_zero(i: usize) -> Constraint {
        Constraint::new(LinearForm::var(i), Relation::Eq, Q::zero())
    }

    pub fn at_least(i: usize, rhs: Q) -> Constraint {
        Constraint::new(LinearForm::var(i), Relation::Ge, rhs)
    }

    pub fn at_most(i: usize, rhs: Q) -> Constraint {
        Constraint::new(LinearForm::var(i), Relation::Le, rhs)
    }

    /// `Σ_i a_i = size`.
    pub fn total_size(size: u64) -> Constraint {
        Constraint::new(
            LinearForm::total(),
            Relation::Eq,
            Q::from_integer(BigInt::from(size)),
        )
    }

    /// Distance this constraint alone forces to zero.
    fn pins_zero(&self) -> Option<usize> {
        let i = self.form.single()?;
        match self.relation {
            Relation::Eq | Relation::Le if self.rhs.is_zero() => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        };
        write!(f, "{}{op}{}", self.form, format_rational(&self.rhs))
    }
}

fn parse_form(s: &str) -> Option<LinearForm> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut form = LinearForm::default();
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for k in 1..bytes.len() {
        // split before + or -, except inside an exponent like 1e-3
        if (bytes[k] == b'+' || bytes[k] == b'-')
            && !matches!(bytes[k - 1], b'e' | b'E' | b'*' | b'/')
        {
            terms.push(&s[start..k]);
            start = k;
        }
    }
    terms.push(&s[start..]);
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let split = body.find(['a', 't'])?;
        let (coef, name) = body.split_at(split);
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let mut c = if coef.is_empty() {
            Q::one()
        } else {
            parse_rational(coef)?
        };
        if neg {
            c = -c;
        }
        if name == "total" {
            form.total += c;
        } else {
            let idx = name.strip_prefix("a_").or_else(|| name.strip_prefix('a'))?;
            form.add_term(idx.parse().ok()?, c);
        }
    }
    Some(form)
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Constraint> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad constraint {s:?}"),
        };
        let (lhs, rel, rhs) = if let Some((l, r)) = s.split_once(">=") {
            (l, Relation::Ge, r)
        } else if let Some((l, r)) = s.split_once("<=") {
            (l, Relation::Le, r)
        } else if let Some((l, r)) = s.split_once('=') {
            (l, Relation::Eq, r)
        } else {
            return Err(bad());
        };
        let form = parse_form(lhs).ok_or_else(bad)?;
        let rhs = parse_rational(rhs).ok_or_else(bad)?;
        Ok(Constraint::new(form, rel, rhs))
    }
}

impl FromStr for LinearForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<LinearForm> {
        parse_form(s).ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("bad linear form {s:?}"),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// Origin of each LP row, for reports and certificate embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowLabel {
    /// `a_0 = 1`
    Normalization,
    /// `a_i = 0` for `0 < i < d`
    BelowMinDistance(usize),
    /// Delsarte inequality for eigenspace `k`
    Delsarte(usize),
    /// Caller-supplied side constraint (index into `extra`)
    Extra(usize),
    /// Objective cut used by auxiliary programs
    ObjectiveCut,
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Normalization => write!(f, "norm"),
            RowLabel::BelowMinDistance(i) => write!(f, "zero{i}"),
            RowLabel::Delsarte(k) => write!(f, "delsarte{k}"),
            RowLabel::Extra(e) => write!(f, "extra{e}"),
            RowLabel::ObjectiveCut => write!(f, "cut"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    pub scheme: Scheme,
    pub d: usize,
    pub objective: LinearForm,
    pub sense: Sense,
    pub extra: Vec<Constraint>,
}

impl LpProblem {
    /// The Delsarte program maximizing `|C| = Σ_i a_i`.
    pub fn delsarte(scheme: Scheme, d: usize, extra: Vec<Constraint>) -> LpProblem {
        LpProblem {
            scheme,
            d,
            objective: LinearForm::total(),
            sense: Sense::Maximize,
            extra,
        }
    }

    pub fn with_objective(mut self, objective: LinearForm, sense: Sense) -> LpProblem {
        self.objective = objective;
        self.sense = sense;
        self
    }

    pub fn with_constraint(mut self, c: Constraint) -> LpProblem {
        self.extra.push(c);
        self
    }

    /// Builds the maximization program over the scheme's distance classes.
    pub fn to_program(&self) -> Result<(LinearProgram, Vec<RowLabel>)> {
        if self.d == 0 {
            return Err(Error::OutOfRange(
                "minimum distance must be at least 1".into(),
            ));
        }
        let ds = self.scheme.distances();
        let nv = ds.len();
        let mut obj = self.objective.dense(&self.scheme)?;
        if self.sense == Sense::Minimize {
            obj.iter_mut().for_each(|c| *c = -c.clone());
        }
        let mut lp = LinearProgram::new(nv, obj);
        let mut labels = Vec::new();
        let unit = |k: usize| {
            let mut v = vec![Q::zero(); nv];
            v[k] = Q::one();
            v
        };
        lp.push(unit(0), Relation::Eq, Q::one());
        labels.push(RowLabel::Normalization);
        for (k, &i) in ds.iter().enumerate() {
            if i > 0 && i < self.d {
                lp.push(unit(k), Relation::Eq, Q::zero());
                labels.push(RowLabel::BelowMinDistance(i));
            }
        }
        for (k, row) in self.scheme.delsarte_rows().into_iter().enumerate() {
            lp.push(row, Relation::Ge, Q::zero());
            labels.push(RowLabel::Delsarte(k + 1));
        }
        for (e, c) in self.extra.iter().enumerate() {
            lp.push(c.form.dense(&self.scheme)?, c.relation, c.rhs.clone());
            labels.push(RowLabel::Extra(e));
        }
        Ok((lp, labels))
    }

    /// Distances pinned to zero by the problem itself (below `d` or by an
    /// extra constraint of the form `c·a_i = 0`).
    pub fn pinned_zero(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .scheme
            .distances()
            .into_iter()
            .filter(|&i| i > 0 && i < self.d)
            .chain(self.extra.iter().filter_map(Constraint::pins_zero))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpResult {
    pub status: Status,
    /// Optimum in the problem's own sense.
    pub optimum: Q,
    /// `(distance, a_i)` for every class.
    pub primal: Vec<(usize, Q)>,
    /// Multipliers of the maximization form, aligned with `rows`.
    pub dual: Vec<Q>,
    pub rows: Vec<RowLabel>,
    /// `(distance, reduced cost)`; positive entries certify `a_i = 0` in every optimum.
    pub reduced_costs: Vec<(usize, Q)>,
    pub(crate) solution: Solution,
}

impl LpResult {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    pub fn a(&self, i: usize) -> Option<&Q> {
        self.primal.iter().find(|(d, _)| *d == i).map(|(_, v)| v)
    }

    /// Re-derives primal feasibility, dual feasibility and the zero gap from
    /// scratch against the problem.
    pub fn verify(&self, problem: &LpProblem) -> std::result::Result<(), String> {
        let (lp, _) = problem.to_program().map_err(|e| e.to_string())?;
        lp.verify(&self.solution)?;
        let expected = match problem.sense {
            Sense::Maximize => self.solution.value.clone(),
            Sense::Minimize => -self.solution.value.clone(),
        };
        if expected != self.optimum {
            return Err("reported optimum disagrees with the solution".into());
        }
        Ok(())
    }

    /// Dual objective `b^T y`, recomputed, in the problem's own sense.
    pub fn dual_objective(&self, problem: &LpProblem) -> Result<Q> {
        let (lp, _) = problem.to_program()?;
        let v = lp
            .rows
            .iter()
            .zip(&self.dual)
            .fold(Q::zero(), |s, (r, y)| s + &r.rhs * y);
        Ok(match problem.sense {
            Sense::Maximize => v,
            Sense::Minimize => -v,
        })
    }
}

fn wrap(problem: &LpProblem, labels: Vec<RowLabel>, sol: Solution) -> LpResult {
    let ds = problem.scheme.distances();
    let optimum = match problem.sense {
        Sense::Maximize => sol.value.clone(),
        Sense::Minimize => -sol.value.clone(),
    };
    LpResult {
        status: sol.status,
        optimum,
        primal: ds.iter().copied().zip(sol.x.iter().cloned()).collect(),
        dual: sol.y.clone(),
        rows: labels,
        reduced_costs: ds
            .iter()
            .copied()
            .zip(sol.reduced_costs.iter().cloned())
            .collect(),
        solution: sol,
    }
}

/// Solves exactly and re-verifies the certificate before returning.
pub fn solve_lp(problem: &LpProblem) -> Result<LpResult> {
    let (lp, labels) = problem.to_program()?;
    let sol = lp.solve()?;
    if sol.status == Status::Optimal {
        lp.verify(&sol).map_err(Error::Verification)?;
    }
    Ok(wrap(problem, labels, sol))
}

pub fn delsarte_bound(scheme: Scheme, d: usize, extra: &[Constraint]) -> Result<LpResult> {
    solve_lp(&LpProblem::delsarte(scheme, d, extra.to_vec()))
}

/// A distance excluded from every code of the target size, with the
/// re-solved program as proof.
#[derive(Clone, Debug)]
pub struct ForbiddenDistance {
    pub distance: usize,
    /// Program with the added row `a_i >= 2/M`; optimum `< M` or infeasible.
    pub problem: LpProblem,
    pub proof: LpResult,
}

/// Distances `i >= d` that cannot occur in a code of size `target`.
///
/// For each candidate the program is re-solved with `a_i >= 2/target` (the
/// smallest positive value `a_i` can take); if the optimum drops below
/// `target` the distance is forbidden. Distances already pinned to zero by
/// the side constraints are not candidates.
pub fn forbidden_distances(
    scheme: Scheme,
    d: usize,
    target: u64,
    extra: &[Constraint],
) -> Result<Vec<ForbiddenDistance>> {
    let base_problem = LpProblem::delsarte(scheme, d, extra.to_vec());
    let base = solve_lp(&base_problem)?;
    let m = Q::from_integer(BigInt::from(target));
    if !base.is_optimal() || base.optimum < m {
        return Err(Error::BelowTarget {
            optimum: format_rational(&base.optimum),
            target: target.to_string(),
        });
    }
    let pinned = base_problem.pinned_zero();
    let step = Q::new(BigInt::from(2), BigInt::from(target));
    let mut out = Vec::new();
    for i in scheme.distances().into_iter().filter(|&i| i >= d && i > 0) {
        if pinned.contains(&i) {
            continue;
        }
        let problem = base_problem
            .clone()
            .with_constraint(Constraint::at_least(i, step.clone()));
        let proof = solve_lp(&problem)?;
        if !proof.is_optimal() || proof.optimum < m {
            out.push(ForbiddenDistance {
                distance: i,
                problem,
                proof,
            });
        }
    }
    Ok(out)
}

/// Orbit value of a distance-`t` pair under the scheme's symmetry group:
/// `|C| a_t / (2^n C(n,t))` (Hamming) or
/// `|C| a_t / (C(n,w) C(n-w,t/2) C(w,t/2))` (Johnson).
pub fn orbit_pair_value(scheme: Scheme, t: usize, size: u64, a_t: &Q) -> Result<Q> {
    if !scheme.is_distance(t) {
        return Err(Error::OutOfRange(format!(
            "{t} is not a distance class of {scheme}"
        )));
    }
    let denom = match scheme {
        Scheme::Hamming { n } => num_traits::pow(BigInt::from(2), n) * binomial(n as i64, t as i64),
        Scheme::Johnson { n, w } => {
            let h = (t / 2) as i64;
            let (n, w) = (n as i64, w as i64);
            binomial(n, w) * binomial(n - w, h) * binomial(w, h)
        }
    };
    Ok(Q::from_integer(BigInt::from(size)) * a_t / Q::from_integer(denom))
}

/// Replaces the dual of an optimal result by one that is strictly
/// complementary on the variables: every `a_i` that vanishes on the whole
/// optimal face gets a positive reduced cost.
///
/// For each candidate `i` the program `max a_i` over the optimal face is
/// solved; an optimum of zero yields an optimal dual with positive reduced
/// cost at `i`. The returned dual is the average of all of these.
pub fn complementary_dual(problem: &LpProblem, result: &LpResult) -> Result<LpResult> {
    if !result.is_optimal() {
        return Err(Error::Unsupported(
            "complementary dual of a non-optimal result".into(),
        ));
    }
    let (lp, labels) = problem.to_program()?;
    let opt = result.solution.value.clone();
    let nv = lp.num_vars;
    let mut duals: Vec<Vec<Q>> = vec![result.solution.y.clone()];
    for j in 0..nv {
        if result.solution.reduced_costs[j].is_positive() || result.solution.x[j].is_positive() {
            continue;
        }
        let mut obj = vec![Q::zero(); nv];
        obj[j] = Q::one();
        let mut aux = LinearProgram {
            num_vars: nv,
            objective: obj,
            rows: lp.rows.clone(),
        };
        aux.push(lp.objective.clone(), Relation::Ge, opt.clone());
        let s = aux.solve()?;
        if s.status != Status::Optimal || !s.value.is_zero() {
            continue;
        }
        let nu = -s.y[lp.rows.len()].clone();
        let y: Vec<Q> = if nu.is_positive() {
            s.y[..lp.rows.len()].iter().map(|v| v / &nu).collect()
        } else {
            s.y[..lp.rows.len()]
                .iter()
                .zip(&result.solution.y)
                .map(|(a, b)| a + b)
                .collect()
        };
        duals.push(y);
    }
    let k = Q::from_integer(BigInt::from(duals.len()));
    let y: Vec<Q> = (0..lp.rows.len())
        .map(|r| duals.iter().fold(Q::zero(), |s, d| s + &d[r]) / &k)
        .collect();
    let reduced: Vec<Q> = (0..nv)
        .map(|j| {
            lp.rows
                .iter()
                .zip(&y)
                .fold(Q::zero(), |s, (row, v)| s + &row.coeffs[j] * v)
                - &lp.objective[j]
        })
        .collect();
    let sol = Solution {
        status: Status::Optimal,
        value: opt,
        x: result.solution.x.clone(),
        y,
        reduced_costs: reduced,
    };
    lp.verify(&sol).map_err(Error::Verification)?;
    Ok(wrap(problem, labels, sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn scheme_classes() {
        assert_eq!(Scheme::johnson(24, 12).unwrap().distances().len(), 13);
        assert_eq!(
            Scheme::johnson(23, 11).unwrap().distances().last(),
            Some(&22)
        );
        assert!(Scheme::johnson(5, 6).is_err());
        assert!(!Scheme::johnson(24, 12).unwrap().is_distance(10 + 1));
    }

    #[test]
    fn constraint_parsing() {
        let c: Constraint = "a_14>=2/672".parse().unwrap();
        assert_eq!(c, Constraint::at_least(14, frac(2, 672)));
        let c: Constraint = "a_10 + a_14 + a_18 + a_22 >= 318/672".parse().unwrap();
        assert_eq!(c.form, LinearForm::sum_of(&[10, 14, 18, 22]));
        let c: Constraint = "a_8-a_12-3*a_16>=-5".parse().unwrap();
        assert_eq!(c.form.terms[&16], q(-3));
        assert_eq!(c.rhs, q(-5));
        let c: Constraint = "total=256".parse().unwrap();
        assert_eq!(c, Constraint::total_size(256));
        assert_eq!(c.to_string(), "total=256");
        assert!("a_x>=1".parse::<Constraint>().is_err());
        assert!("a_1".parse::<Constraint>().is_err());
    }

    #[test]
    fn trivial_bound() {
        // max a_1 subject to a_1 <= 3 in H(1) with d = 1
        let p = LpProblem::delsarte(
            Scheme::hamming(1).unwrap(),
            1,
            vec![Constraint::at_most(1, q(3))],
        )
        .with_objective(LinearForm::var(1), Sense::Maximize);
        let r = solve_lp(&p).unwrap();
        // the Delsarte row K_1: a_0 - a_1 >= 0 caps a_1 at 1
        assert_eq!(r.optimum, q(1));
        r.verify(&p).unwrap();
    }

    #[test]
    fn odd_distance_in_johnson_is_rejected() {
        let p = LpProblem::delsarte(
            Scheme::johnson(10, 4).unwrap(),
            4,
            vec![Constraint::force_zero(5)],
        );
        assert!(solve_lp(&p).is_err());
    }

    #[test]
    fn orbit_values() {
        let h = Scheme::hamming(20).unwrap();
        assert_eq!(orbit_pair_value(h, 16, 256, &Q::zero()).unwrap(), Q::zero());
        let v = orbit_pair_value(h, 16, 256, &q(5)).unwrap();
        assert_eq!(
            v,
            Q::new(
                BigInt::from(256 * 5),
                BigInt::from(1u64 << 20) * binomial(20, 16)
            )
        );
        let j = Scheme::johnson(22, 11).unwrap();
        assert_eq!(
            orbit_pair_value(j, 0, 672, &q(1)).unwrap(),
            Q::new(BigInt::from(672), binomial(22, 11))
        );
        assert!(orbit_pair_value(j, 3, 672, &q(1)).is_err());
    }
}
