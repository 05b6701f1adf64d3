//! Python bindings. Fields are given as a prime `p`, or `None` for Q.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use trimtor::classify;
use trimtor::dgproducts::{full_table, verify_leibniz, ProductTable};
use trimtor::families::{self, FamilyKind, FamilySpec, ScanConfig};
use trimtor::pfaffian::{self, check_identities};
use trimtor::resolution::{self, verify_diagrams, TrimSource, TrimmedData};
use trimtor::Field;

fn err(e: trimtor::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(p: Option<u32>) -> PyResult<Field> {
    match p {
        Some(p) => Field::prime(p).map_err(err),
        None => Ok(Field::Rational),
    }
}

fn modulus(f: Field) -> Option<u32> {
    match f {
        Field::Prime { p } => Some(p),
        Field::Rational => None,
    }
}

#[pyclass(name = "SkewMatrix", frozen)]
#[derive(Clone)]
struct PySkewMatrix {
    inner: pfaffian::SkewMatrix,
}

#[pymethods]
impl PySkewMatrix {
    /// Rows of polynomial strings; must be skew-symmetric with entries in (x, y, z).
    #[new]
    #[pyo3(signature = (rows, p=None))]
    fn new(rows: Vec<Vec<String>>, p: Option<u32>) -> PyResult<Self> {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        let inner = pfaffian::SkewMatrix::parse(field(p)?, &refs).map_err(err)?;
        Ok(PySkewMatrix { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PySkewMatrix { inner: trimtor::io::parse_matrix(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        trimtor::io::write_matrix(&self.inner)
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// The prime, or None over Q.
    #[getter]
    fn p(&self) -> Option<u32> {
        modulus(self.inner.field())
    }

    fn entry(&self, i: usize, j: usize) -> PyResult<String> {
        let m = self.inner.size();
        for k in [i, j] {
            if !(1..=m).contains(&k) {
                return Err(err(trimtor::Error::IndexOutOfRange { index: k, size: m }));
            }
        }
        Ok(self.inner.entry(i, j).to_string())
    }

    /// y_i = (-1)^(i+1) pf_drop{i}, for i = 1..m.
    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(ToString::to_string).collect()
    }

    fn pfaffian_drop(&self, removed: Vec<usize>) -> PyResult<String> {
        Ok(self.inner.pfaffian_drop(&removed).map_err(err)?.to_string())
    }

    /// (identity name, tuples checked, passed) for each pfaffian identity.
    fn check_identities(&self) -> Vec<(String, usize, bool)> {
        check_identities(&self.inner).results.iter().map(|r| (r.identity.to_string(), r.tuples_checked, r.passed())).collect()
    }

    /// Moves the chosen generators to the front; returns the matrix and the order.
    fn conjugate(&self, generators: Vec<usize>) -> PyResult<(PySkewMatrix, Vec<usize>)> {
        let (inner, order) = classify::conjugate_trim_set(&self.inner, &generators).map_err(err)?;
        Ok((PySkewMatrix { inner }, order))
    }

    fn __repr__(&self) -> String {
        format!("SkewMatrix(size={}, field={})", self.inner.size(), self.inner.field())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(name = "TorReport", frozen, get_all)]
#[derive(Clone)]
struct PyTorReport {
    m: usize,
    t: usize,
    rank_q1: usize,
    p: usize,
    format: (usize, usize, usize, usize),
    mu: usize,
    r: Option<usize>,
    /// "G(r)", "NotG" or "Undetermined".
    tor_class: String,
}

impl From<classify::TorReport> for PyTorReport {
    fn from(rep: classify::TorReport) -> Self {
        let [a, b, c, d] = rep.format;
        PyTorReport { m: rep.m, t: rep.t, rank_q1: rep.rank_q1, p: rep.p, format: (a, b, c, d), mu: rep.mu, r: rep.r, tor_class: rep.class.to_string() }
    }
}

#[pymethods]
impl PyTorReport {
    #[getter]
    fn is_g(&self) -> bool {
        self.r.is_some()
    }

    fn __repr__(&self) -> String {
        let (a, b, c, d) = self.format;
        format!("TorReport(m={}, t={}, format=({a}, {b}, {c}, {d}), class={})", self.m, self.t, self.tor_class)
    }
}

/// The trimmed resolution of the first t generators, with its DG products.
#[pyclass(name = "TrimmedResolution", frozen)]
struct PyTrimmedResolution {
    data: TrimmedData,
    table: std::sync::OnceLock<ProductTable>,
}

impl PyTrimmedResolution {
    fn table(&self) -> &ProductTable {
        self.table.get_or_init(|| full_table(&self.data))
    }
}

#[pymethods]
impl PyTrimmedResolution {
    #[new]
    fn new(matrix: &PySkewMatrix, t: usize) -> PyResult<Self> {
        let source: Arc<TrimSource> = TrimSource::new(&matrix.inner).map_err(err)?;
        let data = TrimmedData::new(source, t).map_err(err)?;
        Ok(PyTrimmedResolution { data, table: std::sync::OnceLock::new() })
    }

    #[getter]
    fn t(&self) -> usize {
        self.data.t()
    }

    fn ranks(&self) -> [usize; 4] {
        self.data.complex().ranks()
    }

    fn basis(&self, d: usize) -> PyResult<Vec<String>> {
        if d > 3 {
            return Err(PyValueError::new_err(format!("degree {d} outside 0..=3")));
        }
        Ok(self.data.complex().basis(d).iter().map(ToString::to_string).collect())
    }

    /// Rows of polynomial strings.
    fn differential(&self, d: usize) -> PyResult<Vec<Vec<String>>> {
        if !(1..=3).contains(&d) {
            return Err(PyValueError::new_err(format!("degree {d} outside 1..=3")));
        }
        Ok(self.data.complex().differential(d).to_strings())
    }

    fn q1(&self) -> Vec<Vec<String>> {
        self.data.q1().to_strings()
    }

    fn q2(&self) -> Vec<Vec<String>> {
        self.data.q2().to_strings()
    }

    fn is_complex(&self) -> bool {
        self.data.complex().is_complex()
    }

    fn diagrams_commute(&self) -> bool {
        verify_diagrams(&self.data).ok()
    }

    /// Ranks of the minimal resolution.
    fn minimal_ranks(&self) -> [usize; 4] {
        resolution::minimize(self.data.complex()).ranks()
    }

    /// Product of two basis labels as (label, coefficient) pairs.
    fn product(&self, x: &str, y: &str) -> PyResult<Vec<(String, String)>> {
        let parse = |s: &str| s.parse().map_err(|_| PyValueError::new_err(format!("unknown basis label '{s}'")));
        let (x, y) = (parse(x)?, parse(y)?);
        for b in [&x, &y] {
            if !self.data.complex().contains(b) {
                return Err(PyValueError::new_err(format!("{b} is not a basis element")));
            }
        }
        Ok(self.table().get(x, y).to_record())
    }

    /// Every nonzero product as (x, y, [(label, coefficient)]).
    fn products(&self) -> Vec<(String, String, Vec<(String, String)>)> {
        self.table().to_records().into_iter().filter(|r| !r.product.is_empty()).map(|r| (r.x, r.y, r.product)).collect()
    }

    /// (pairs checked, violations).
    fn verify_leibniz(&self) -> (usize, usize) {
        let rep = verify_leibniz(&self.data, self.table());
        (rep.pairs_checked, rep.violations.len())
    }

    /// Rank of the pairing Tor1 × Tor2 → Tor3 when the Tor algebra has no
    /// degree-one products, else None.
    fn tor_g_rank(&self) -> Option<usize> {
        classify::tor_products_with(&self.data, self.table()).g_rank()
    }

    fn tor_table(&self) -> String {
        classify::tor_products_with(&self.data, self.table()).to_string()
    }
}

#[pyfunction]
fn classify_trimming(matrix: &PySkewMatrix, t: usize) -> PyResult<PyTorReport> {
    Ok(classify::classify(&matrix.inner, t).map_err(err)?.into())
}

/// Member s of the "odd" or "even" family; returns the matrix and t.
#[pyfunction]
#[pyo3(signature = (kind, s, p=Some(2)))]
fn family(kind: &str, s: usize, p: Option<u32>) -> PyResult<(PySkewMatrix, usize)> {
    let kind = match kind {
        "odd" => FamilyKind::Odd,
        "even" => FamilyKind::Even,
        other => return Err(PyValueError::new_err(format!("family kind must be 'odd' or 'even', not '{other}'"))),
    };
    let (inner, t) = families::build_family(FamilySpec::new(kind, s).map_err(err)?, field(p)?).map_err(err)?;
    Ok((PySkewMatrix { inner }, t))
}

/// Scan records as dicts with the CSV column names.
#[pyfunction]
#[pyo3(signature = (p, m, trials, min_degree=1, max_degree=2, seed=0))]
fn scan(py: Python<'_>, p: u32, m: usize, trials: u64, min_degree: u32, max_degree: u32, seed: u64) -> PyResult<Vec<Py<pyo3::types::PyDict>>> {
    let config = ScanConfig { p, m, trials, min_degree, max_degree, seed };
    let out = py.detach(|| families::realizability_scan(&config)).map_err(err)?;
    out.records
        .iter()
        .map(|rec| {
            let d = pyo3::types::PyDict::new(py);
            d.set_item("seed", rec.seed)?;
            d.set_item("trial", rec.trial)?;
            d.set_item("p", rec.p)?;
            d.set_item("m", rec.m)?;
            d.set_item("t", rec.t)?;
            d.set_item("rank_q1", rec.rank_q1)?;
            d.set_item("pivots_tail", rec.pivots_tail)?;
            d.set_item("l", rec.l)?;
            d.set_item("n", rec.n)?;
            d.set_item("r", rec.r)?;
            d.set_item("class", rec.class.to_string())?;
            Ok(d.unbind())
        })
        .collect()
}

#[pyfunction]
fn sigma3(i: usize, j: usize, r: usize) -> i32 {
    pfaffian::sigma3(i, j, r).value()
}

#[pyfunction]
fn sigma5(i: usize, j: usize, r: usize, h: usize, k: usize) -> i32 {
    pfaffian::sigma5(i, j, r, h, k).value()
}

#[pymodule]
fn pytrimtor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySkewMatrix>()?;
    m.add_class::<PyTrimmedResolution>()?;
    m.add_class::<PyTorReport>()?;
    m.add_function(wrap_pyfunction!(classify_trimming, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(sigma3, m)?)?;
    m.add_function(wrap_pyfunction!(sigma5, m)?)?;
    Ok(())
}
