//! Python bindings. Exact values cross the boundary as `fractions.Fraction`
//! for rationals, `int` for integers and [`PyElem`] for tower elements.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use chebfib::algebra::{format_rational, parse_elem, parse_rational};
use chebfib::chebyshev::{cheb_eval as eval, cheb_poly, Kind};
use chebfib::combinatorial as comb;
use chebfib::identities::{self as ids, GridProfile, Point, Var};
use chebfib::{Elem, Integer, Rational};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.numer().clone(), q.denom().clone()))
}

/// Accepts an `int`, a `Fraction` or a string in the report grammar.
fn to_rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(n) = x.extract::<Integer>() {
        return Ok(Rational::from_integer(n));
    }
    if let Ok(s) = x.extract::<String>() {
        return parse_rational(&s).map_err(value_err);
    }
    let num: Integer = x.getattr("numerator")?.extract()?;
    let den: Integer = x.getattr("denominator")?.extract()?;
    Ok(Rational::new(num, den))
}

/// Lifts the shallower operand into the tower of the deeper one.
fn coerce(a: &Elem, b: &Elem) -> PyResult<(Elem, Elem)> {
    let (ta, tb) = (a.tower(), b.tower());
    if ta == tb {
        Ok((a.clone(), b.clone()))
    } else if ta.is_prefix_of(&tb) {
        Ok((tb.embed(a).map_err(value_err)?, b.clone()))
    } else {
        Ok((a.clone(), ta.embed(b).map_err(value_err)?))
    }
}

fn divide(a: &Elem, b: &Elem) -> PyResult<PyElem> {
    if b.is_zero() {
        return Err(PyZeroDivisionError::new_err("division by zero"));
    }
    a.checked_div(b).map(PyElem).map_err(value_err)
}

/// Strips trailing extensions with a zero radical part, so that equal values
/// from different towers hash alike.
fn reduced(e: &Elem) -> Elem {
    match e.components() {
        Some((a, b)) if b.is_zero() => reduced(a),
        _ => e.clone(),
    }
}

fn kind(k: &str) -> PyResult<Kind> {
    k.parse().map_err(value_err)
}

/// Exact element of a quadratic tower over the rationals.
#[pyclass(name = "Elem", module = "chebfib", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyElem(pub Elem);

#[pymethods]
impl PyElem {
    #[new]
    fn new(x: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(e) = x.extract::<PyElem>() {
            return Ok(e);
        }
        if let Ok(s) = x.extract::<String>() {
            return parse_elem(&s).map(PyElem).map_err(value_err);
        }
        Ok(PyElem(Elem::Rat(to_rational(x)?)))
    }

    /// `a + b*sqrt(5)`.
    #[staticmethod]
    fn q5(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyElem(chebfib::algebra::q5(to_rational(a)?, to_rational(b)?)))
    }

    #[staticmethod]
    fn golden() -> (Self, Self) {
        let (a, b) = chebfib::algebra::golden();
        (PyElem(a), PyElem(b))
    }

    fn is_rational(&self) -> bool {
        self.0.to_rational().is_some()
    }

    fn to_fraction<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match self.0.to_rational() {
            Some(q) => fraction(py, &q),
            None => Err(PyValueError::new_err(format!("{} is not rational", self.0))),
        }
    }

    fn conj(&self) -> Self {
        PyElem(self.0.conj())
    }

    fn norm(&self) -> Self {
        PyElem(self.0.norm())
    }

    fn __add__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&self.0, &PyElem::new(o)?.0)?;
        Ok(PyElem(&a + &b))
    }

    fn __radd__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(o)
    }

    fn __sub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&self.0, &PyElem::new(o)?.0)?;
        Ok(PyElem(&a - &b))
    }

    fn __rsub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&PyElem::new(o)?.0, &self.0)?;
        Ok(PyElem(&a - &b))
    }

    fn __mul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&self.0, &PyElem::new(o)?.0)?;
        Ok(PyElem(&a * &b))
    }

    fn __rmul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(o)
    }

    fn __truediv__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&self.0, &PyElem::new(o)?.0)?;
        divide(&a, &b)
    }

    fn __rtruediv__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (a, b) = coerce(&PyElem::new(o)?.0, &self.0)?;
        divide(&a, &b)
    }

    fn __eq__(&self, o: &Bound<'_, PyAny>) -> bool {
        match PyElem::new(o) {
            Ok(o) => matches!(coerce(&self.0, &o.0), Ok((a, b)) if a == b),
            Err(_) => false,
        }
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        reduced(&self.0).hash(&mut h);
        h.finish()
    }

    fn __neg__(&self) -> Self {
        PyElem(-&self.0)
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.checked_pow(e).map(PyElem).map_err(|_| PyZeroDivisionError::new_err("zero to a negative power"))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Elem('{}')", self.0)
    }
}

#[pyfunction]
fn fib(n: i64) -> Integer {
    chebfib::sequences::fib(n)
}

#[pyfunction]
fn lucas(n: i64) -> Integer {
    chebfib::sequences::lucas(n)
}

#[pyfunction]
fn binom(n: i64, k: i64) -> PyResult<Integer> {
    chebfib::sequences::binom(n, k).map_err(value_err)
}

#[pyfunction]
fn coeff_c<'py>(py: Python<'py>, n: i64, k: i64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &chebfib::sequences::coeff_c(n, k).map_err(value_err)?)
}

#[pyfunction]
fn coeff_d<'py>(py: Python<'py>, n: i64, k: i64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &chebfib::sequences::coeff_d(n, k).map_err(value_err)?)
}

#[pyfunction]
fn a138573(count: usize) -> Vec<Integer> {
    chebfib::sequences::a138573(count)
}

/// Coefficients of `T_n` or `U_n`, constant term first.
#[pyfunction]
fn cheb_coeffs<'py>(py: Python<'py>, kind_: &str, n: i64) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let p = cheb_poly(kind(kind_)?, n).map_err(value_err)?;
    p.coeffs().iter().map(|c| fraction(py, c)).collect()
}

#[pyfunction]
fn cheb_eval(kind_: &str, n: i64, x: &Bound<'_, PyAny>) -> PyResult<PyElem> {
    let x = PyElem::new(x)?;
    Ok(PyElem(eval(kind(kind_)?, n, &x.0)))
}

fn point(params: HashMap<String, i64>) -> PyResult<Point> {
    let mut vals = Vec::new();
    for (name, v) in params {
        let var = Var::from_name(&name).ok_or_else(|| value_err(format!("unknown parameter {name}")))?;
        vals.push((var, v));
    }
    vals.sort();
    Ok(Point::new(vals))
}

/// `(id, status, anchor)` for every catalog entry.
#[pyfunction]
fn catalog() -> Vec<(&'static str, String, &'static str)> {
    ids::catalog().iter().map(|r| (r.id, r.status.to_string(), r.anchor)).collect()
}

/// Both sides of the printed display at one point.
#[pyfunction]
fn evaluate(id: &str, params: HashMap<String, i64>) -> PyResult<(PyElem, PyElem)> {
    let (l, r) = ids::evaluate(id, &point(params)?).map_err(value_err)?;
    Ok((PyElem(l), PyElem(r)))
}

#[pyfunction]
fn poly_identity_check(id: &str, n: i64) -> PyResult<bool> {
    ids::poly_identity_check(id, n).map_err(value_err)
}

fn outcome_dict<'py>(py: Python<'py>, o: &ids::VerificationOutcome) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("id", o.id)?;
    d.set_item("form", o.form.to_string())?;
    let pt: HashMap<&str, i64> = o.point.values().iter().map(|&(v, x)| (v.name(), x)).collect();
    d.set_item("point", pt)?;
    d.set_item("status", o.status.to_string())?;
    d.set_item("lhs", o.lhs.clone())?;
    d.set_item("rhs", o.rhs.clone())?;
    d.set_item("reason", o.reason.clone())?;
    Ok(d)
}

/// Checks one entry. `ranges` overrides grid ranges, e.g. `{"n": (1, 30)}`.
#[pyfunction]
#[pyo3(signature = (id, profile = "quick", ranges = None))]
fn verify<'py>(py: Python<'py>, id: &str, profile: &str, ranges: Option<HashMap<String, (i64, i64)>>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let mut grid = GridProfile::by_name(profile).map_err(value_err)?;
    for (name, (lo, hi)) in ranges.unwrap_or_default() {
        let var = Var::from_name(&name).ok_or_else(|| value_err(format!("unknown parameter {name}")))?;
        grid = grid.with_range(var, lo, hi);
    }
    let id = id.to_string();
    let outcomes = py.detach(|| ids::verify(&id, &grid)).map_err(value_err)?;
    outcomes.iter().map(|o| outcome_dict(py, o)).collect()
}

/// Runs the whole catalog; returns per-entry counts and the failing points.
#[pyfunction]
#[pyo3(signature = (profile = "quick"))]
fn verify_all<'py>(py: Python<'py>, profile: &str) -> PyResult<Bound<'py, PyDict>> {
    let grid = GridProfile::by_name(profile).map_err(value_err)?;
    let s = py.detach(|| ids::verify_all(&grid));
    let d = PyDict::new(py);
    d.set_item("profile", &s.profile)?;
    let entries = PyDict::new(py);
    for e in &s.entries {
        let c = |c: &ids::Counts| (c.pass, c.fail, c.skipped);
        entries.set_item(e.id, (e.status.to_string(), c(&e.printed), e.corrected.as_ref().map(c)))?;
    }
    d.set_item("entries", entries)?;
    let f: PyResult<Vec<_>> = s.failures.iter().map(|o| outcome_dict(py, o)).collect();
    d.set_item("failures", f?)?;
    let ds: PyResult<Vec<_>> = s.discrepancies.iter().map(|o| outcome_dict(py, o)).collect();
    d.set_item("discrepancies", ds?)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (n, m, delta = 0))]
fn chu_guo_lhs<'py>(py: Python<'py>, n: i64, m: i64, delta: i64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &comb::chu_guo_lhs(n, m, delta).map_err(value_err)?)
}

#[pyfunction]
fn chu_guo_closed<'py>(py: Python<'py>, n: i64, m: i64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &comb::chu_guo_closed(n, m).map_err(value_err)?)
}

/// Per-family `(checked, failed)` counts of the combinatorial sweep.
#[pyfunction]
fn section5(py: Python<'_>, max_total: i64) -> HashMap<String, (usize, usize)> {
    let s = py.detach(|| comb::verify_section5(max_total));
    s.counts().into_iter().map(|f| (f.family, (f.checked, f.failed))).collect()
}

#[pyfunction]
fn format_fraction(x: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(format_rational(&to_rational(x)?))
}

#[pymodule]
#[pyo3(name = "chebfib")]
pub fn chebfib_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElem>()?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_c, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_d, m)?)?;
    m.add_function(wrap_pyfunction!(a138573, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_eval, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(poly_identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(chu_guo_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(chu_guo_closed, m)?)?;
    m.add_function(wrap_pyfunction!(section5, m)?)?;
    m.add_function(wrap_pyfunction!(format_fraction, m)?)?;
    Ok(())
}
