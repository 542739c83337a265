//! Python bindings: a `Group` wrapper plus functions mirroring the CLI
//! commands.  Reports come back as plain dicts/lists (the same shape as the
//! JSON the CLI writes), so the Python side needs no custom types.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use orbihom::exactla::{parse_rational, rat, Rational, RationalMatrix};
use orbihom::groups::{close_group, FiniteGroup, GroupElement, DEFAULT_GROUP_LIMIT};
use orbihom::hochschild::hh_twisted_dims;
use orbihom::{crossprod, selftest, weyl as weyl_mod, Error};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Config(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// A matrix entry or shift given either as an integer or as a rational
/// string like `"1/2"`.
#[derive(FromPyObject)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_rational(&self) -> Result<Rational, Error> {
        match self {
            Scalar::Int(v) => Ok(rat(*v)),
            Scalar::Text(s) => parse_rational(s),
        }
    }
}

fn parse_matrix(rows: &[Vec<Scalar>]) -> Result<RationalMatrix, Error> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Config("generator matrices must be square".into()));
    }
    let mut m = RationalMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            m.set(i, j, entry.to_rational()?);
        }
    }
    Ok(m)
}

fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use serde_json::Value;
    Ok(match value {
        Value::Null => py.None(),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any().unbind(),
        Value::Number(n) => {
            if let Some(v) = n.as_i64() {
                v.into_pyobject(py)?.into_any().unbind()
            } else if let Some(v) = n.as_u64() {
                v.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any().unbind(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

fn report_to_py<T: serde::Serialize>(py: Python<'_>, report: &T) -> PyResult<Py<PyAny>> {
    let value = serde_json::to_value(report)
        .map_err(|e| PyRuntimeError::new_err(format!("report serialization failed: {e}")))?;
    json_to_py(py, &value)
}

/// A finite group acting on affine space (matrices) or on a torus
/// (permutations with rational shifts), closed from its generators.
#[pyclass(frozen)]
struct Group {
    inner: FiniteGroup,
}

#[pymethods]
impl Group {
    /// Close a list of square rational matrices into a finite linear group.
    #[staticmethod]
    fn linear(generators: Vec<Vec<Vec<Scalar>>>) -> PyResult<Self> {
        let elems: Vec<GroupElement> = generators
            .iter()
            .map(|rows| GroupElement::linear(parse_matrix(rows)?))
            .collect::<Result<_, _>>()
            .map_err(to_py_err)?;
        let inner = close_group(&elems, DEFAULT_GROUP_LIMIT).map_err(to_py_err)?;
        Ok(Group { inner })
    }

    /// Close monomial torus maps, each a `(perm, shifts)` pair with a
    /// 1-based permutation and rational shifts.
    #[staticmethod]
    fn torus(generators: Vec<(Vec<usize>, Vec<Scalar>)>) -> PyResult<Self> {
        let mut elems = Vec::with_capacity(generators.len());
        for (perm, shifts) in &generators {
            let perm0: Vec<usize> = perm
                .iter()
                .map(|&p| {
                    p.checked_sub(1)
                        .ok_or_else(|| Error::Config("permutations are 1-based".into()))
                })
                .collect::<Result<_, _>>()
                .map_err(to_py_err)?;
            let shift = shifts
                .iter()
                .map(Scalar::to_rational)
                .collect::<Result<_, _>>()
                .map_err(to_py_err)?;
            elems.push(GroupElement::monomial(perm0, shift).map_err(to_py_err)?);
        }
        let inner = close_group(&elems, DEFAULT_GROUP_LIMIT).map_err(to_py_err)?;
        Ok(Group { inner })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn class_count(&self) -> usize {
        self.inner.conjugacy_classes().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Group(order={}, classes={})",
            self.inner.order(),
            self.inner.conjugacy_classes().len()
        )
    }
}

/// Conjugacy classes, centralizer orders and fixed sets.
#[pyfunction]
fn classes(py: Python<'_>, group: PyRef<'_, Group>) -> PyResult<Py<PyAny>> {
    let report = crossprod::classes_report(&group.inner).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Graded Hochschild homology per conjugacy class (linear actions).
#[pyfunction]
#[pyo3(signature = (group, q_max = 3, d_max = 4, oracle = false))]
fn hh(
    py: Python<'_>,
    group: PyRef<'_, Group>,
    q_max: usize,
    d_max: usize,
    oracle: bool,
) -> PyResult<Py<PyAny>> {
    let report =
        crossprod::hh_graded_report(&group.inner, q_max, d_max, oracle).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Graded cyclic homology per conjugacy class (linear actions).
#[pyfunction]
#[pyo3(signature = (group, n_max = 3, d_max = 4))]
fn hc(py: Python<'_>, group: PyRef<'_, Group>, n_max: usize, d_max: usize) -> PyResult<Py<PyAny>> {
    let report = crossprod::hc_graded_report(&group.inner, n_max, d_max).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Periodic cyclic homology totals (linear and torus actions).
#[pyfunction]
fn hp(py: Python<'_>, group: PyRef<'_, Group>) -> PyResult<Py<PyAny>> {
    let report = crossprod::hp_report(&group.inner).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Closed-form periodic cyclic homology of `O(T^n) ⋊ S_n`, optionally
/// cross-checked against the general machinery.
#[pyfunction]
#[pyo3(signature = (n, check = false))]
fn weyl(py: Python<'_>, n: usize, check: bool) -> PyResult<Py<PyAny>> {
    let mut report = weyl_mod::hp_weyl_formula(n).map_err(to_py_err)?;
    if check {
        report.cross_check = Some(weyl_mod::weyl_cross_check(n).map_err(to_py_err)?);
    }
    report_to_py(py, &report)
}

/// Dimension table of the `g`-twisted Hochschild homology of the
/// polynomial ring, computed through the bar complex.
#[pyfunction]
#[pyo3(signature = (g, q_max = 3, d_max = 4))]
fn twisted_hh(
    py: Python<'_>,
    g: Vec<Vec<Scalar>>,
    q_max: usize,
    d_max: usize,
) -> PyResult<Py<PyAny>> {
    let m = parse_matrix(&g).map_err(to_py_err)?;
    let table = hh_twisted_dims(&m, q_max, d_max).map_err(to_py_err)?;
    report_to_py(py, &table)
}

/// Run the built-in invariant suite; returns the log lines on success and
/// raises on any failure.
#[pyfunction]
fn run_selftest() -> PyResult<Vec<String>> {
    let mut lines = Vec::new();
    selftest::run_selftest(|line| lines.push(line.to_string()))
        .map_err(|e| PyRuntimeError::new_err(format!("{e}\n{}", lines.join("\n"))))?;
    Ok(lines)
}

#[pymodule]
fn orbihom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(classes, m)?)?;
    m.add_function(wrap_pyfunction!(hh, m)?)?;
    m.add_function(wrap_pyfunction!(hc, m)?)?;
    m.add_function(wrap_pyfunction!(hp, m)?)?;
    m.add_function(wrap_pyfunction!(weyl, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_hh, m)?)?;
    m.add_function(wrap_pyfunction!(run_selftest, m)?)?;
    Ok(())
}
