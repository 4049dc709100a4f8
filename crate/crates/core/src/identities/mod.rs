//! Executable catalog of closed-form binomial Fibonacci/Lucas identities and
//! the engine that checks them exactly over finite parameter grids.

mod catalog_s2;
mod catalog_s2b;
mod catalog_s3;
mod catalog_s4;
pub mod terms;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{gaussian_tower, sqrt5_i_tower, sqrt5_tower, AlgebraError, Elem, Tower};
use crate::chebyshev::{Poly, MAX_COEFF_DEGREE};

/// Parameter names used across the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    M,
    P,
    Q,
    S,
    T,
    X,
}

impl Var {
    pub const ALL: [Var; 7] = [Var::N, Var::M, Var::P, Var::Q, Var::S, Var::T, Var::X];

    pub fn name(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::M => "m",
            Var::P => "p",
            Var::Q => "q",
            Var::S => "s",
            Var::T => "t",
            Var::X => "x",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub var: Var,
    /// Smallest admissible value, if the entry restricts it.
    pub min: Option<i64>,
}

/// One assignment of integer values to an entry's parameters, in the entry's
/// declared order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    vals: Vec<(Var, i64)>,
}

impl Point {
    pub fn new(vals: Vec<(Var, i64)>) -> Self {
        Point { vals }
    }

    pub fn values(&self) -> &[(Var, i64)] {
        &self.vals
    }

    pub fn try_get(&self, v: Var) -> Option<i64> {
        self.vals.iter().find(|(w, _)| *w == v).map(|&(_, x)| x)
    }

    pub fn get(&self, v: Var) -> i64 {
        self.try_get(v)
            .unwrap_or_else(|| panic!("parameter {v} not bound"))
    }

    pub fn n(&self) -> i64 {
        self.get(Var::N)
    }
    pub fn m(&self) -> i64 {
        self.get(Var::M)
    }
    pub fn p(&self) -> i64 {
        self.get(Var::P)
    }
    pub fn q(&self) -> i64 {
        self.get(Var::Q)
    }
    pub fn s(&self) -> i64 {
        self.get(Var::S)
    }
    pub fn t(&self) -> i64 {
        self.get(Var::T)
    }
    pub fn x(&self) -> i64 {
        self.get(Var::X)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vals.is_empty() {
            return f.write_str("-");
        }
        for (i, (v, x)) in self.vals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}={x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
pub struct Constraint {
    pub label: &'static str,
    pub check: fn(&Point) -> bool,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    VerifiedFamily,
    TypoSuspect,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::VerifiedFamily => "verified-family",
            Status::TypoSuspect => "typo-suspect",
        })
    }
}

/// The field both sides of an entry are compared in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerKind {
    Q,
    Q5,
    Gauss,
    Q5I,
}

impl TowerKind {
    pub fn tower(self) -> &'static Tower {
        static Q: OnceLock<Tower> = OnceLock::new();
        match self {
            TowerKind::Q => Q.get_or_init(Tower::rational),
            TowerKind::Q5 => sqrt5_tower(),
            TowerKind::Gauss => gaussian_tower(),
            TowerKind::Q5I => sqrt5_i_tower(),
        }
    }
}

pub type Eval = Arc<dyn Fn(&Point) -> Elem + Send + Sync>;

/// Coefficient-level forms of a generic-`x` entry, indexed by `n`.
#[derive(Clone, Copy)]
pub struct PolyForm {
    pub min_n: i64,
    pub lhs: fn(i64) -> Poly,
    pub rhs: fn(i64) -> Poly,
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// Short human-readable statement of the identity.
    pub anchor: &'static str,
    pub params: Vec<ParamSpec>,
    pub constraints: Vec<Constraint>,
    pub tower: TowerKind,
    pub lhs: Eval,
    /// The display as printed.
    pub rhs: Eval,
    pub status: Status,
    /// Replacement right-hand side for typo-suspect entries, when one is known.
    pub corrected: Option<Eval>,
    /// Replacement left-hand side, for the rare entries whose sum is malformed.
    pub corrected_lhs: Option<Eval>,
    pub note: Option<&'static str>,
    pub poly: Option<PolyForm>,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("status", &self.status)
            .finish_non_exhaustive()
    }
}

pub(crate) fn unset(_: &Point) -> Elem {
    panic!("evaluator not set")
}

impl IdentityRecord {
    pub(crate) fn new(id: &'static str, anchor: &'static str, tower: TowerKind, params: &[ParamSpec]) -> Self {
        IdentityRecord {
            id,
            anchor,
            params: params.to_vec(),
            constraints: Vec::new(),
            tower,
            lhs: Arc::new(unset),
            rhs: Arc::new(unset),
            status: Status::VerifiedFamily,
            corrected: None,
            corrected_lhs: None,
            note: None,
            poly: None,
        }
    }

    pub(crate) fn when(mut self, label: &'static str, check: fn(&Point) -> bool) -> Self {
        self.constraints.push(Constraint { label, check });
        self
    }

    pub(crate) fn lhs(mut self, g: impl Fn(&Point) -> Elem + Send + Sync + 'static) -> Self {
        self.lhs = Arc::new(g);
        self
    }

    pub(crate) fn rhs(mut self, g: impl Fn(&Point) -> Elem + Send + Sync + 'static) -> Self {
        self.rhs = Arc::new(g);
        self
    }

    pub(crate) fn typo(mut self, note: &'static str) -> Self {
        self.status = Status::TypoSuspect;
        self.note = Some(note);
        self
    }

    pub(crate) fn corrected(mut self, g: impl Fn(&Point) -> Elem + Send + Sync + 'static) -> Self {
        self.corrected = Some(Arc::new(g));
        self
    }

    pub(crate) fn corrected_lhs(mut self, g: impl Fn(&Point) -> Elem + Send + Sync + 'static) -> Self {
        self.corrected_lhs = Some(Arc::new(g));
        self
    }

    pub(crate) fn poly(mut self, min_n: i64, lhs: fn(i64) -> Poly, rhs: fn(i64) -> Poly) -> Self {
        self.poly = Some(PolyForm { min_n, lhs, rhs });
        self
    }

    /// First violated bound or constraint, if any.
    pub fn violation(&self, point: &Point) -> Option<String> {
        for spec in &self.params {
            let v = point.get(spec.var);
            if let Some(min) = spec.min {
                if v < min {
                    return Some(format!("{} >= {min}", spec.var));
                }
            }
        }
        self.constraints
            .iter()
            .find(|c| !(c.check)(point))
            .map(|c| c.label.to_string())
    }

    pub fn param_schema(&self) -> String {
        let parts: Vec<String> = self
            .params
            .iter()
            .map(|s| match s.min {
                Some(m) => format!("{}>={m}", s.var),
                None => s.var.to_string(),
            })
            .collect();
        if parts.is_empty() {
            "-".into()
        } else {
            parts.join(",")
        }
    }

    pub fn constraint_list(&self) -> String {
        if self.constraints.is_empty() {
            "-".into()
        } else {
            self.constraints.iter().map(|c| c.label).collect::<Vec<_>>().join("; ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("unknown grid profile `{0}`")]
    UnknownProfile(String),
    #[error("identity {id}: parameter {var} missing from point")]
    MissingParam { id: String, var: Var },
    #[error("identity {id}: point violates constraint `{label}`")]
    Constraint { id: String, label: String },
    #[error("identity {0} has no polynomial form")]
    NotPolynomial(String),
    #[error("identity {id}: polynomial check needs n in {min}..={max}, got {n}")]
    PolyDegree { id: String, n: i64, min: i64, max: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Finite ranges for every parameter name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridProfile {
    pub name: String,
    pub ranges: BTreeMap<Var, (i64, i64)>,
}

impl GridProfile {
    pub fn desk() -> Self {
        GridProfile::from_ranges(
            "desk",
            &[
                (Var::N, 0, 24),
                (Var::M, 0, 4),
                (Var::P, -6, 6),
                (Var::Q, -6, 6),
                (Var::S, -5, 5),
                (Var::T, -4, 4),
                (Var::X, -3, 3),
            ],
        )
    }

    /// Small grid for smoke runs.
    pub fn quick() -> Self {
        GridProfile::from_ranges(
            "quick",
            &[
                (Var::N, 0, 8),
                (Var::M, 0, 3),
                (Var::P, -3, 3),
                (Var::Q, -3, 3),
                (Var::S, -3, 3),
                (Var::T, -2, 2),
                (Var::X, -2, 2),
            ],
        )
    }

    pub fn by_name(name: &str) -> Result<Self, IdentityError> {
        match name {
            "desk" => Ok(GridProfile::desk()),
            "quick" => Ok(GridProfile::quick()),
            other => Err(IdentityError::UnknownProfile(other.to_string())),
        }
    }

    fn from_ranges(name: &str, r: &[(Var, i64, i64)]) -> Self {
        GridProfile {
            name: name.to_string(),
            ranges: r.iter().map(|&(v, lo, hi)| (v, (lo, hi))).collect(),
        }
    }

    pub fn with_range(mut self, var: Var, lo: i64, hi: i64) -> Self {
        self.ranges.insert(var, (lo, hi));
        self
    }

    /// All points for `params`, lexicographic in declared order.
    pub fn points(&self, params: &[ParamSpec]) -> Vec<Point> {
        let mut out = vec![Point::new(Vec::new())];
        for spec in params {
            let (lo, hi) = self.ranges.get(&spec.var).copied().unwrap_or((0, 0));
            let mut next = Vec::with_capacity(out.len() * (hi - lo + 1).max(0) as usize);
            for p in &out {
                for v in lo..=hi {
                    let mut vals = p.vals.clone();
                    vals.push((spec.var, v));
                    next.push(Point::new(vals));
                }
            }
            out = next;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    Printed,
    Corrected,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Printed => "printed",
            Form::Corrected => "corrected",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeStatus {
    Pass,
    Fail,
    SkippedConstraint,
}

impl fmt::Display for OutcomeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeStatus::Pass => "pass",
            OutcomeStatus::Fail => "fail",
            OutcomeStatus::SkippedConstraint => "skipped-constraint",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub id: &'static str,
    pub form: Form,
    pub point: Point,
    pub status: OutcomeStatus,
    /// Exact text of both sides; absent for skipped points.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    /// Violated constraint for skipped points.
    pub reason: Option<String>,
    pub elapsed_us: u64,
}

static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();

/// The full catalog, in a fixed order.
pub fn catalog() -> &'static [IdentityRecord] {
    CATALOG.get_or_init(|| {
        let mut v = catalog_s2::entries();
        v.extend(catalog_s2b::entries());
        v.extend(catalog_s3::entries());
        v.extend(catalog_s4::entries());
        v
    })
}

pub fn find(id: &str) -> Result<&'static IdentityRecord, IdentityError> {
    catalog()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| IdentityError::UnknownId(id.to_string()))
}

fn bind(rec: &IdentityRecord, point: &Point) -> Result<(), IdentityError> {
    for spec in &rec.params {
        if point.try_get(spec.var).is_none() {
            return Err(IdentityError::MissingParam { id: rec.id.to_string(), var: spec.var });
        }
    }
    Ok(())
}

fn sides(rec: &IdentityRecord, form: Form, point: &Point) -> Result<(Elem, Elem), IdentityError> {
    let tower = rec.tower.tower();
    let (lhs, rhs) = match form {
        Form::Printed => (&rec.lhs, &rec.rhs),
        Form::Corrected => (
            rec.corrected_lhs.as_ref().unwrap_or(&rec.lhs),
            rec.corrected.as_ref().expect("corrected form present"),
        ),
    };
    let a = tower.embed(&lhs(point))?;
    let b = tower.embed(&rhs(point))?;
    Ok((a, b))
}

/// Both sides of the printed display at `point`, lifted into the entry's tower.
pub fn evaluate(id: &str, point: &Point) -> Result<(Elem, Elem), IdentityError> {
    let rec = find(id)?;
    bind(rec, point)?;
    if let Some(label) = rec.violation(point) {
        return Err(IdentityError::Constraint { id: id.to_string(), label });
    }
    sides(rec, Form::Printed, point)
}

/// Like [`evaluate`] with the corrected right-hand side, if the entry has one.
pub fn evaluate_corrected(id: &str, point: &Point) -> Result<Option<(Elem, Elem)>, IdentityError> {
    let rec = find(id)?;
    bind(rec, point)?;
    if let Some(label) = rec.violation(point) {
        return Err(IdentityError::Constraint { id: id.to_string(), label });
    }
    match &rec.corrected {
        None => Ok(None),
        Some(_) => sides(rec, Form::Corrected, point).map(Some),
    }
}

fn check_point(rec: &'static IdentityRecord, form: Form, point: Point) -> VerificationOutcome {
    let start = Instant::now();
    if let Some(reason) = rec.violation(&point) {
        return VerificationOutcome {
            id: rec.id,
            form,
            point,
            status: OutcomeStatus::SkippedConstraint,
            lhs: None,
            rhs: None,
            reason: Some(reason),
            elapsed_us: start.elapsed().as_micros() as u64,
        };
    }
    let (a, b) = sides(rec, form, &point).unwrap_or_else(|e| panic!("{}: {e}", rec.id));
    let status = if a == b { OutcomeStatus::Pass } else { OutcomeStatus::Fail };
    VerificationOutcome {
        id: rec.id,
        form,
        point,
        status,
        lhs: Some(a.to_string()),
        rhs: Some(b.to_string()),
        reason: None,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn run_form(rec: &'static IdentityRecord, form: Form, grid: &GridProfile) -> Vec<VerificationOutcome> {
    grid.points(&rec.params)
        .into_par_iter()
        .map(|p| check_point(rec, form, p))
        .collect()
}

/// Checks the printed display at every grid point, followed by the corrected
/// form when the entry carries one. Order is deterministic.
pub fn verify(id: &str, grid: &GridProfile) -> Result<Vec<VerificationOutcome>, IdentityError> {
    let rec = find(id)?;
    Ok(verify_record(rec, grid))
}

pub fn verify_record(rec: &'static IdentityRecord, grid: &GridProfile) -> Vec<VerificationOutcome> {
    let mut out = run_form(rec, Form::Printed, grid);
    if rec.corrected.is_some() {
        out.extend(run_form(rec, Form::Corrected, grid));
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, s: OutcomeStatus) {
        match s {
            OutcomeStatus::Pass => self.pass += 1,
            OutcomeStatus::Fail => self.fail += 1,
            OutcomeStatus::SkippedConstraint => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntrySummary {
    pub id: &'static str,
    pub status: Status,
    pub printed: Counts,
    pub corrected: Option<Counts>,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub profile: String,
    pub entries: Vec<EntrySummary>,
    /// Every failing outcome of a verified-family entry, and every failing
    /// corrected form.
    pub failures: Vec<VerificationOutcome>,
    /// Up to [`DISCREPANCY_SAMPLES`] failing printed-form points per
    /// typo-suspect entry.
    pub discrepancies: Vec<VerificationOutcome>,
}

pub const DISCREPANCY_SAMPLES: usize = 3;

impl Summary {
    /// Failures that count against the build.
    pub fn verified_failures(&self) -> usize {
        self.failures.len()
    }

    pub fn typo_suspects(&self) -> impl Iterator<Item = &EntrySummary> {
        self.entries.iter().filter(|e| e.status == Status::TypoSuspect)
    }
}

fn summarize(rec: &'static IdentityRecord, outcomes: Vec<VerificationOutcome>) -> (EntrySummary, Vec<VerificationOutcome>, Vec<VerificationOutcome>) {
    let mut printed = Counts::default();
    let mut corrected = rec.corrected.as_ref().map(|_| Counts::default());
    let mut failures = Vec::new();
    let mut discrepancies = Vec::new();
    let mut elapsed = 0u64;
    for o in outcomes {
        elapsed += o.elapsed_us;
        match o.form {
            Form::Printed => printed.add(o.status),
            Form::Corrected => corrected.as_mut().unwrap().add(o.status),
        }
        if o.status != OutcomeStatus::Fail {
            continue;
        }
        match (rec.status, o.form) {
            (Status::TypoSuspect, Form::Printed) => {
                if discrepancies.len() < DISCREPANCY_SAMPLES {
                    discrepancies.push(o);
                }
            }
            _ => failures.push(o),
        }
    }
    let entry = EntrySummary { id: rec.id, status: rec.status, printed, corrected, elapsed_us: elapsed };
    (entry, failures, discrepancies)
}

/// Runs every catalog entry over `profile`.
pub fn verify_all(profile: &GridProfile) -> Summary {
    let per: Vec<_> = catalog()
        .par_iter()
        .map(|rec| summarize(rec, verify_record(rec, profile)))
        .collect();
    let mut summary = Summary {
        profile: profile.name.clone(),
        entries: Vec::new(),
        failures: Vec::new(),
        discrepancies: Vec::new(),
    };
    for (e, f, d) in per {
        summary.entries.push(e);
        summary.failures.extend(f);
        summary.discrepancies.extend(d);
    }
    summary
}

/// Compares both sides of a generic-`x` entry as polynomials over `Q`.
pub fn poly_identity_check(id: &str, n: i64) -> Result<bool, IdentityError> {
    let rec = find(id)?;
    let form = rec.poly.ok_or_else(|| IdentityError::NotPolynomial(id.to_string()))?;
    let max = MAX_COEFF_DEGREE / 2;
    if n < form.min_n || n > max {
        return Err(IdentityError::PolyDegree { id: id.to_string(), n, min: form.min_n, max });
    }
    Ok((form.lhs)(n) == (form.rhs)(n))
}

/// Tab-separated catalog index: id, status, tower, parameters, constraints,
/// statement.
pub fn export_catalog() -> String {
    let mut out = String::new();
    for r in catalog() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.id,
            r.status,
            r.tower.tower(),
            r.param_schema(),
            r.constraint_list(),
            r.anchor
        ));
    }
    out
}

// Shared parameter specs for the catalog files.
pub(crate) const N0: ParamSpec = ParamSpec { var: Var::N, min: Some(0) };
pub(crate) const N1: ParamSpec = ParamSpec { var: Var::N, min: Some(1) };
pub(crate) const M0: ParamSpec = ParamSpec { var: Var::M, min: Some(0) };
pub(crate) const M1: ParamSpec = ParamSpec { var: Var::M, min: Some(1) };
pub(crate) const P: ParamSpec = ParamSpec { var: Var::P, min: None };
pub(crate) const Q: ParamSpec = ParamSpec { var: Var::Q, min: None };
pub(crate) const S: ParamSpec = ParamSpec { var: Var::S, min: None };
pub(crate) const T: ParamSpec = ParamSpec { var: Var::T, min: None };
pub(crate) const X: ParamSpec = ParamSpec { var: Var::X, min: None };

#[cfg(test)]
mod tests {
    use super::terms::*;
    use super::*;
    use std::collections::HashSet;

    fn pt(vals: &[(Var, i64)]) -> Point {
        Point::new(vals.to_vec())
    }

    fn both(id: &str, vals: &[(Var, i64)]) -> (Elem, Elem) {
        evaluate(id, &pt(vals)).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(both("ex5.1", &[(Var::N, 3)]), (Elem::from(9), Elem::from(9)));
        let half = rat(fr(3, 2));
        assert_eq!(both("u.f2n.1", &[(Var::N, 2)]), (half.clone(), half));
        assert_eq!(both("t.main1.upper", &[(Var::N, 0), (Var::X, 7)]), (Elem::from(1), Elem::from(1)));
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert!(cat.len() >= 85, "{}", cat.len());
        let ids: HashSet<_> = cat.iter().map(|r| r.id).collect();
        assert_eq!(ids.len(), cat.len());
        assert!(cat.iter().all(|r| !r.anchor.is_empty()));
        for r in cat {
            assert_eq!(r.status == Status::TypoSuspect, r.note.is_some(), "{}", r.id);
            if r.corrected_lhs.is_some() {
                assert!(r.corrected.is_some(), "{}", r.id);
            }
        }
        for id in ["note.2", "lem5.3", "s4.thm3", "s4.thm2.2", "s4.thm2.4"] {
            assert_eq!(find(id).unwrap().status, Status::TypoSuspect, "{id}");
        }
    }

    #[test]
    fn a138573_values() {
        let grid = GridProfile::quick().with_range(Var::N, 0, 9);
        let out = verify("seq.a138573", &grid).unwrap();
        let rhs: Vec<String> = out.iter().map(|o| o.rhs.clone().unwrap()).collect();
        assert_eq!(rhs, ["0", "1", "2", "5", "16", "45", "130", "377", "1088", "3145"]);
        assert!(out.iter().all(|o| o.status == OutcomeStatus::Pass));
    }

    #[test]
    fn errors() {
        assert!(matches!(find("nope"), Err(IdentityError::UnknownId(_))));
        assert!(matches!(evaluate("ex5.1", &pt(&[])), Err(IdentityError::MissingParam { .. })));
        assert!(matches!(
            evaluate("thm13.lucas", &pt(&[(Var::N, 2), (Var::P, 0)])),
            Err(IdentityError::Constraint { .. })
        ));
        assert!(matches!(evaluate("ex5.1", &pt(&[(Var::N, -1)])), Err(IdentityError::Constraint { .. })));
        assert!(matches!(poly_identity_check("ex5.1", 2), Err(IdentityError::NotPolynomial(_))));
        assert!(matches!(poly_identity_check("lem8", 61), Err(IdentityError::PolyDegree { .. })));
        assert!(GridProfile::by_name("huge").is_err());
    }

    #[test]
    fn poly_examples() {
        assert!(poly_identity_check("t.main1.upper", 5).unwrap());
        assert!(poly_identity_check("lem8", 0).unwrap());
        assert!(poly_identity_check("t.main4", 3).unwrap());
        // The printed lower sign of the U analogue holds for even n only.
        assert!(poly_identity_check("u.main5.lower", 4).unwrap());
        assert!(!poly_identity_check("u.main5.lower", 3).unwrap());
    }

    #[test]
    fn grid_order_is_lexicographic() {
        let grid = GridProfile::quick().with_range(Var::N, 0, 2).with_range(Var::P, -1, 1);
        let pts = grid.points(&[N0, P]);
        let shown: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown[0], "n=0,p=-1");
        assert_eq!(shown[1], "n=0,p=0");
        assert_eq!(shown.len(), 9);
        // Points under a lower bound stay in the grid and are reported skipped.
        let n1 = grid.points(&[N1]);
        assert_eq!(n1.len(), 3);
        assert_eq!(find("ex5.1").unwrap().violation(&n1[0]), None);
        assert!(find("thm3.lucas").unwrap().violation(&pt(&[(Var::N, 0), (Var::P, 1)])).is_some());
    }

    #[test]
    fn typo_entry_fails_printed_and_passes_corrected() {
        let grid = GridProfile::quick();
        let out = verify("note.2", &grid).unwrap();
        assert!(out.iter().any(|o| o.form == Form::Printed && o.status == OutcomeStatus::Fail));
        assert!(out
            .iter()
            .filter(|o| o.form == Form::Corrected)
            .all(|o| o.status != OutcomeStatus::Fail));
    }

    /// The `c + d = C(n+k, n-k)` construction behind the plain-binomial sums.
    #[test]
    fn binomial_sums_are_c_plus_d_sums() {
        for n in 1..=10 {
            for p in -6i64..=6 {
                if p == 0 {
                    continue;
                }
                let at = [(Var::N, n), (Var::P, p)];
                let (a, _) = both("thm3.lucas", &at);
                let (b, _) = both("thm13.lucas", &at);
                let (s, srhs) = both("s4.thm1.1", &at);
                assert_eq!(s, a + b * l(p), "n={n} p={p}");
                assert_eq!(s, srhs);
                let (a, ar) = both("thm3.fib", &at);
                let (b, br) = both("thm13.fib", &at);
                let (s, srhs) = both("s4.thm1.2", &at);
                assert_eq!(s, a + b * (r(5) * f(p)));
                assert_eq!(srhs, ar + br * (r(5) * f(p)));
            }
        }
    }

    /// The stored parity-split entries agree with the single `(±1)^(n-k)`
    /// statement they come from.
    #[test]
    fn sign_variants_agree_with_braces_form() {
        for n in 1..=12 {
            for p in -6i64..=6 {
                if p == 0 {
                    continue;
                }
                let at = [(Var::N, n), (Var::P, p)];
                let pm = if odd(p) { 1 } else { -1 };
                let braces = rsum(0, n, |k| cw(n, k) * pw(&r(pm), n - k) * pw(&l(p), 2 * k));
                assert_eq!(both("thm3.lucas", &at).0, rat(braces.clone()));
                assert_eq!(both("thm3.lucas", &at).1, rat(braces));
                let braces = rsum(1, n, |k| dw(n, k) * pw(&r(pm), n - k) * pw(&l(p), 2 * k - 1));
                assert_eq!(both("thm13.lucas", &at).1, rat(braces));
                let braces = rsum(1, n, |k| dw(n, k) * pw(&r(-pm), n - k) * pwi(5, k - 1) * pw(&f(p), 2 * k - 1));
                assert_eq!(both("thm13.fib", &at).1, rat(braces));
            }
        }
    }

    /// What the unrepairable U-value actually is, with `e = p-q+1` and
    /// `ε = (-1)^(p-q)`.
    #[test]
    fn ormac9f_true_value() {
        for n in 1..=10i64 {
            for p in -5i64..=5 {
                for q in -5i64..=5 {
                    let e = p - q + 1;
                    let eps = neg1(p - q);
                    let den = pw(&f(p), 2) + &eps * pw(&f(q), 2);
                    if p == 0 || q == 0 || den == r(0) {
                        continue;
                    }
                    let (lhs, printed) = both("lem.ormac9f", &[(Var::N, n), (Var::P, p), (Var::Q, q)]);
                    let minus_eps = -eps.clone();
                    let top = &eps * pw(&f(q), 2 * n) - &eps * pw(&minus_eps, n) * pw(&f(p), 2 * n);
                    let val = top / (pw(&f(q), n - 1) * pw(&f(p), n - 1) * &den);
                    let expect = ip(-e * (n - 1)) * val;
                    assert_eq!(lhs, expect, "n={n} p={p} q={q}");
                    let _ = printed;
                }
            }
        }
    }

    #[test]
    fn export_lists_every_entry() {
        let text = export_catalog();
        assert_eq!(text.lines().count(), catalog().len());
        assert!(text.lines().all(|l| l.split('\t').count() == 6));
    }
}
