//! Python bindings: codes, Adinkras, their matrices and Smith normal forms.

use adinkra::adinkra::{hypercube_adinkra, prism, signature_classes};
use adinkra::analysis::{self, catalog_codes, profiles, Suite, SuiteOptions, DEFAULT_SEED};
use adinkra::codes::{standard_code, BinaryCode, BitVector};
use adinkra::exactmat::{adjacency_matrix, block_x, det_int, laplacian_matrix, FpPoly, FpPolyMatrix, IntMatrix, Matrix};
use adinkra::snf::{self, profile_int};
use adinkra::{Adinkra, Error};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyAssertionError, PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(adinkra_py, InfeasibleError, PyValueError, "No totally odd signature exists.");
create_exception!(adinkra_py, MismatchError, PyAssertionError, "Computed values differ from the published table.");

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Infeasible(_) => InfeasibleError::new_err(msg),
        Error::Mismatch(_) => MismatchError::new_err(msg),
        Error::Io(_) => PyOSError::new_err(msg),
        Error::Internal(_) | Error::Guard(_) => PyRuntimeError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for adinkra::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

type Rows = Vec<Vec<BigInt>>;

pub fn rows_to_matrix(rows: Vec<Vec<BigInt>>) -> adinkra::Result<IntMatrix> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::Dimension("rows have different lengths".into()));
    }
    Matrix::from_vec(r, c, rows.into_iter().flatten().collect())
}

pub fn matrix_to_rows<T: Clone>(m: &Matrix<T>) -> Vec<Vec<T>> {
    m.rows_iter().map(<[T]>::to_vec).collect()
}

fn json_to_py(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pyclass(name = "BinaryCode", module = "adinkra_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyBinaryCode {
    inner: BinaryCode,
}

#[pymethods]
impl PyBinaryCode {
    /// A code from generator rows such as `["1111"]`.
    #[new]
    fn new(length: usize, rows: Vec<String>) -> PyResult<Self> {
        let gens = rows.iter().map(|r| r.parse::<BitVector>()).collect::<adinkra::Result<Vec<_>>>().py_err()?;
        Ok(PyBinaryCode { inner: BinaryCode::new(length, gens).py_err()? })
    }

    /// A catalog code by name: `d4`, `e8`, `h8`, `t3`, `d4+t2`, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        Ok(PyBinaryCode { inner: standard_code(name).py_err()? })
    }

    /// Parses generator matrix text.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyBinaryCode { inner: BinaryCode::parse_generator_text(text).py_err()? })
    }

    fn to_text(&self) -> String {
        self.inner.to_generator_text()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(ToString::to_string).collect()
    }

    fn is_doubly_even(&self) -> PyResult<bool> {
        self.inner.is_doubly_even().py_err()
    }

    fn contains_all_ones(&self) -> bool {
        self.inner.contains_all_ones()
    }

    fn codewords(&self) -> PyResult<Vec<String>> {
        Ok(self.inner.codewords().py_err()?.iter().map(ToString::to_string).collect())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("BinaryCode({:?}, n={}, k={})", self.inner.name(), self.inner.length(), self.inner.dimension())
    }
}

#[pyclass(name = "Adinkra", module = "adinkra_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAdinkra {
    inner: Adinkra,
}

fn wrap(inner: Adinkra) -> PyAdinkra {
    PyAdinkra { inner }
}

#[pymethods]
impl PyAdinkra {
    /// The quotient of the cube by `code` with a solved totally odd signature.
    #[staticmethod]
    fn from_code(code: &PyBinaryCode) -> PyResult<Self> {
        Adinkra::from_code(&code.inner).map(wrap).py_err()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Adinkra::from_json(text).map(wrap).py_err()
    }

    /// The N-cube built from iterated prisms.
    #[staticmethod]
    fn hypercube(n: usize) -> PyResult<Self> {
        hypercube_adinkra(n).map(wrap).py_err()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn n_colors(&self) -> usize {
        self.inner.n_colors()
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    /// Vertex labels, bosons first.
    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.graph().labels().iter().map(ToString::to_string).collect()
    }

    /// `(u, v, color, sign)` with colors numbered from 1.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize, usize, i8)> {
        self.inner.graph().edges().iter().zip(self.inner.signs()).map(|(e, &s)| (e.u, e.v, e.color + 1, s)).collect()
    }

    fn is_valid(&self) -> bool {
        self.inner.validate().is_clean()
    }

    fn validation_report(&self) -> String {
        self.inner.validate().to_string()
    }

    fn vertex_switch(&self, vertices: Vec<usize>) -> PyResult<Self> {
        self.inner.vertex_switch(&vertices).map(wrap).py_err()
    }

    fn prism(&self) -> Self {
        wrap(prism(&self.inner))
    }

    /// One representative per switching class of totally odd signatures.
    fn signature_classes(&self) -> PyResult<Vec<Self>> {
        Ok(signature_classes(&self.inner).py_err()?.into_iter().map(wrap).collect())
    }

    fn adjacency(&self) -> Vec<Vec<BigInt>> {
        matrix_to_rows(&adjacency_matrix(&self.inner))
    }

    fn laplacian(&self) -> Vec<Vec<BigInt>> {
        matrix_to_rows(&laplacian_matrix(&self.inner))
    }

    /// The boson-by-fermion block of the adjacency matrix.
    fn block_x(&self) -> PyResult<Vec<Vec<BigInt>>> {
        Ok(matrix_to_rows(&block_x(&self.inner).py_err()?))
    }

    /// Laplacian and `X` invariant factor profiles, e.g. `("(1^2,2^2,6^2,12^2)", "(1,2^2,4)")`.
    fn profiles(&self, py: Python<'_>) -> PyResult<(String, String)> {
        let (l, x) = py.detach(|| profiles(&self.inner)).py_err()?;
        Ok((l.to_string(), x.to_string()))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Adinkra(n_colors={}, vertices={})", self.inner.n_colors(), self.inner.num_vertices())
    }
}

/// Invariant factors of an integer matrix, in divisibility order.
#[pyfunction]
fn snf_diagonal(py: Python<'_>, matrix: Vec<Vec<BigInt>>) -> PyResult<Vec<BigInt>> {
    let m = rows_to_matrix(matrix).py_err()?;
    Ok(py.detach(|| snf::snf_int(&m)).py_err()?.diag)
}

/// `(diagonal, B, C)` with `B M C` equal to the diagonal matrix.
#[pyfunction]
fn snf_with_witnesses(py: Python<'_>, matrix: Vec<Vec<BigInt>>) -> PyResult<(Vec<BigInt>, Rows, Rows)> {
    let m = rows_to_matrix(matrix).py_err()?;
    let r = py.detach(|| snf::snf_int(&m)).py_err()?;
    Ok((r.diag.clone(), matrix_to_rows(&r.b), matrix_to_rows(&r.c)))
}

/// The profile string of an integer matrix, e.g. `(1^2,2^6,28^6,56^2)`.
#[pyfunction]
fn snf_profile(py: Python<'_>, matrix: Vec<Vec<BigInt>>) -> PyResult<String> {
    let m = rows_to_matrix(matrix).py_err()?;
    Ok(py.detach(|| profile_int(&m)).py_err()?.to_string())
}

/// Smith form over `Fp[x]`. Entries are coefficient lists, constant term first.
/// Returns the diagonal as coefficient lists and the multiplicity of `x - 1`.
#[pyfunction]
fn snf_fpx(py: Python<'_>, matrix: Vec<Vec<Vec<u64>>>, p: u64) -> PyResult<(Vec<Vec<u64>>, usize)> {
    let r = matrix.len();
    let c = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|row| row.len() != c) {
        return Err(to_py(Error::Dimension("rows have different lengths".into())));
    }
    let f = adinkra::exactmat::Fp::new(p).py_err()?;
    let entries = matrix.into_iter().flatten().map(|cs| FpPoly::from_coeffs(cs.into_iter().map(|v| v % f.p()).collect()));
    let m: FpPolyMatrix = Matrix::from_vec(r, c, entries.collect()).py_err()?;
    let res = py.detach(|| snf::snf_fpx(&m, p)).py_err()?;
    let mult = snf::x_minus_one_multiplicity(&res, p).py_err()?;
    Ok((res.diag.iter().map(|d| d.coeffs().to_vec()).collect(), mult))
}

/// `min(rows, cols)` minus the rank modulo `p`.
#[pyfunction]
fn p_corank(matrix: Vec<Vec<BigInt>>, p: u64) -> PyResult<usize> {
    snf::p_corank(&rows_to_matrix(matrix).py_err()?, p).py_err()
}

#[pyfunction]
fn det(matrix: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    det_int(&rows_to_matrix(matrix).py_err()?).py_err()
}

/// The catalog codes with at most `max_n` coordinates.
#[pyfunction]
#[pyo3(signature = (max_n = 8))]
fn catalog(max_n: usize) -> PyResult<Vec<PyBinaryCode>> {
    Ok(catalog_codes(max_n).py_err()?.into_iter().map(|inner| PyBinaryCode { inner }).collect())
}

/// Computes the invariant factor table and checks it against the published
/// one. Raises `MismatchError` on any difference.
#[pyfunction]
#[pyo3(signature = (max_n = 8, max_k = 4))]
fn reproduce_table(py: Python<'_>, max_n: usize, max_k: usize) -> PyResult<Py<PyAny>> {
    let entries = py.detach(|| analysis::reproduce_table(max_n, max_k)).py_err()?;
    let text = serde_json::to_string(&entries).map_err(|e| to_py(e.into()))?;
    json_to_py(py, &text)
}

/// Runs a verification suite and returns its reports as dictionaries.
#[pyfunction]
#[pyo3(signature = (suite, codes = None, trials = 100, seed = DEFAULT_SEED))]
fn run_suite(py: Python<'_>, suite: &str, codes: Option<Vec<PyRef<'_, PyBinaryCode>>>, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let suite: Suite = suite.parse().py_err()?;
    let codes = match codes {
        Some(cs) => cs.iter().map(|c| c.inner.clone()).collect(),
        None => catalog_codes(8).py_err()?,
    };
    let reports = py.detach(|| analysis::run_suite(suite, &codes, SuiteOptions { trials, seed })).py_err()?;
    let docs: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
    json_to_py(py, &serde_json::Value::Array(docs).to_string())
}

#[pymodule]
fn adinkra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBinaryCode>()?;
    m.add_class::<PyAdinkra>()?;
    m.add_function(wrap_pyfunction!(snf_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(snf_with_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(snf_profile, m)?)?;
    m.add_function(wrap_pyfunction!(snf_fpx, m)?)?;
    m.add_function(wrap_pyfunction!(p_corank, m)?)?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("InfeasibleError", m.py().get_type::<InfeasibleError>())?;
    m.add("MismatchError", m.py().get_type::<MismatchError>())?;
    Ok(())
}
