//! Python module `osx`: matroids, exterior algebra elements, and the JSON
//! reports of the command line tool.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use osx_core::criteria::DEFAULT_MAX_N;
use osx_core::exterior::{rational, ExtElement as CoreElement, Monomial};
use osx_core::matroid::{GroundSubset, Matroid as CoreMatroid, MAX_GROUND_SET};
use osx_core::report::{self, Criterion, Format, Outcome, PresentationOptions};
use osx_core::OsxError;

fn to_py(e: OsxError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subset(m: &CoreMatroid, points: &[usize]) -> PyResult<GroundSubset> {
    GroundSubset::try_from_points(points, m.n()).map_err(to_py)
}

fn indices(pts: &[usize]) -> PyResult<GroundSubset> {
    GroundSubset::try_from_points(pts, MAX_GROUND_SET).map_err(to_py)
}

fn json(outcome: Outcome) -> String {
    report::render(&outcome.report, Format::Json)
}

/// A simple matroid on `1..=n` given by its circuits.
#[pyclass(module = "osx", name = "Matroid", frozen)]
pub struct Matroid {
    inner: CoreMatroid,
}

#[pymethods]
impl Matroid {
    #[staticmethod]
    fn from_circuits(n: usize, circuits: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Matroid { inner: CoreMatroid::from_circuits(n, &circuits).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_lines(n: usize, lines: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Matroid { inner: CoreMatroid::from_lines(n, &lines).map_err(to_py)? })
    }

    /// Parses the JSON input format of the command line tool.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Matroid { inner: osx_core::io::parse_matroid(text).map_err(to_py)? })
    }

    /// `cross`, `nine32`, `k4` or `uniform(k,n)`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        Ok(Matroid { inner: osx_core::casestudies::fixture(name).map_err(to_py)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank_total()
    }

    #[getter]
    fn circuits(&self) -> Vec<Vec<usize>> {
        self.inner.circuits().iter().map(|c| c.to_vec()).collect()
    }

    fn rank_of(&self, s: Vec<usize>) -> PyResult<usize> {
        Ok(self.inner.rank(subset(&self.inner, &s)?))
    }

    fn closure(&self, s: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.inner.closure(subset(&self.inner, &s)?).to_vec())
    }

    fn is_independent(&self, s: Vec<usize>) -> PyResult<bool> {
        Ok(self.inner.is_independent(subset(&self.inner, &s)?))
    }

    fn nbc_sets(&self, p: usize) -> Vec<Vec<usize>> {
        self.inner.nbc_sets(p).iter().map(|s| s.to_vec()).collect()
    }

    fn hilbert_series(&self) -> Vec<usize> {
        osx_core::ideal::hilbert_series(&self.inner)
    }

    /// The normalized element `z(T)` of an nbc-set `T`.
    fn z(&self, t: Vec<usize>) -> PyResult<ExtElement> {
        let t = subset(&self.inner, &t)?;
        Ok(ExtElement { inner: osx_core::zelements::z_of_nbc(&self.inner, t).map_err(to_py)?.value })
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid(n={}, rank={}, circuits={})",
            self.inner.n(),
            self.inner.rank_total(),
            self.inner.circuits().len()
        )
    }
}

/// An element of the exterior algebra over the rationals.
#[pyclass(module = "osx", name = "ExtElement", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct ExtElement {
    inner: CoreElement,
}

#[pymethods]
impl ExtElement {
    /// Sum of `c * e_S` over `(c, S)` pairs with integer `c`.
    #[new]
    #[pyo3(signature = (terms = Vec::new()))]
    fn new(terms: Vec<(i64, Vec<usize>)>) -> PyResult<Self> {
        let mut inner = CoreElement::zero();
        for (c, s) in terms {
            let s = indices(&s)?;
            inner.add_term(Monomial::new(s), rational(c));
        }
        Ok(ExtElement { inner })
    }

    #[staticmethod]
    fn generator(i: usize) -> PyResult<Self> {
        if i == 0 || i > MAX_GROUND_SET {
            return Err(PyIndexError::new_err(format!("generator index {i} out of range")));
        }
        Ok(ExtElement { inner: CoreElement::generator(i) })
    }

    fn wedge(&self, other: &ExtElement) -> Self {
        ExtElement { inner: self.inner.wedge(&other.inner) }
    }

    fn boundary(&self) -> Self {
        ExtElement { inner: self.inner.boundary() }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_pure(&self, n: usize) -> PyResult<bool> {
        self.inner.is_pure(n).map_err(to_py)
    }

    fn leading_monomial(&self) -> PyResult<Vec<usize>> {
        Ok(self.inner.leading_monomial().map_err(to_py)?.indices())
    }

    /// `(coefficient, indices)` pairs, coefficients as exact strings.
    fn terms(&self) -> Vec<(String, Vec<usize>)> {
        self.inner.terms().map(|(m, c)| (c.to_string(), m.indices())).collect()
    }

    fn __add__(&self, other: &ExtElement) -> Self {
        ExtElement { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &ExtElement) -> Self {
        ExtElement { inner: &self.inner - &other.inner }
    }

    fn __neg__(&self) -> Self {
        ExtElement { inner: -self.inner.clone() }
    }

    fn __mul__(&self, other: &ExtElement) -> Self {
        self.wedge(other)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ExtElement({})", self.inner)
    }
}

#[pyfunction]
fn analyze(m: &Matroid) -> PyResult<String> {
    report::analyze(&m.inner).map(json).map_err(to_py)
}

/// Returns `(verdict, report)` for `lcl`, `pindep:<p>` or `quadratic`.
#[pyfunction]
#[pyo3(signature = (m, criterion, max_n = DEFAULT_MAX_N))]
fn check(m: &Matroid, criterion: &str, max_n: usize) -> PyResult<(bool, String)> {
    let c: Criterion = criterion.parse().map_err(to_py)?;
    let o = report::check(&m.inner, c, max_n).map_err(to_py)?;
    Ok((o.verdict, json(o)))
}

#[pyfunction]
fn annihilator(m: &Matroid, degree: usize) -> PyResult<String> {
    report::annihilator(&m.inner, degree).map(json).map_err(to_py)
}

#[pyfunction]
fn groebner_verify(m: &Matroid) -> PyResult<(bool, String)> {
    let o = report::groebner(&m.inner).map_err(to_py)?;
    Ok((o.verdict, json(o)))
}

#[pyfunction]
fn zbasis(m: &Matroid, degree: usize) -> PyResult<(bool, String)> {
    let o = report::zbasis(&m.inner, degree).map_err(to_py)?;
    Ok((o.verdict, json(o)))
}

#[pyfunction]
#[pyo3(signature = (m, trees = false, relations = false, verify_basis = false))]
fn presentation(m: &Matroid, trees: bool, relations: bool, verify_basis: bool) -> PyResult<(bool, String)> {
    let o = report::presentation(&m.inner, PresentationOptions { trees, relations, verify_basis }).map_err(to_py)?;
    Ok((o.verdict, json(o)))
}

/// Full report for `cross` or `nine32`.
#[pyfunction]
#[pyo3(signature = (name, max_n = DEFAULT_MAX_N))]
fn case_study(name: &str, max_n: usize) -> PyResult<(bool, String)> {
    let o = report::case_study(name, max_n).map_err(to_py)?;
    Ok((o.verdict, json(o)))
}

#[pymodule]
fn osx(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matroid>()?;
    m.add_class::<ExtElement>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_verify, m)?)?;
    m.add_function(wrap_pyfunction!(zbasis, m)?)?;
    m.add_function(wrap_pyfunction!(presentation, m)?)?;
    m.add_function(wrap_pyfunction!(case_study, m)?)?;
    Ok(())
}
