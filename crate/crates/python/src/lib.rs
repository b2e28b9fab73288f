//! Python bindings. Rationals come back as `fractions.Fraction`, polynomials
//! in `d` as `Polynomial`, classes in several variables as strings.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use num_bigint::BigInt;
use plucker_core::error::Error;
use plucker_core::exactpoly::{fmt_rational, Rational, UniPoly, Var};
use plucker_core::symfunc::Partition;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidPartition(_)
        | Error::DegreeTooSmall { .. }
        | Error::OutOfRange(_)
        | Error::MissingAmbient
        | Error::PoleAtD(_)
        | Error::Parse(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::crs(parts).map_err(to_py)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((r.numer().clone(), r.denom().clone()))
}

/// A polynomial in the degree `d` with rational coefficients.
#[pyclass(frozen, eq, skip_from_py_object, module = "plucker")]
#[derive(Clone, PartialEq)]
struct Polynomial {
    inner: UniPoly,
}

#[pymethods]
impl Polynomial {
    /// Coefficients ascending in `d`, as fractions.
    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .coeffs()
            .iter()
            .map(|c| fraction(py, c))
            .collect()
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    /// Value at an integer `d`.
    fn __call__<'py>(&self, py: Python<'py>, d: i64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.eval_int(d))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

fn poly(p: &UniPoly) -> Polynomial {
    Polynomial { inner: p.clone() }
}

/// The class of a coincident root stratum in the Schur basis.
#[pyclass(frozen, module = "plucker")]
struct CrsClass {
    inner: std::sync::Arc<plucker_core::crs::CrsClass>,
}

#[pymethods]
impl CrsClass {
    #[getter]
    fn partition(&self) -> Vec<u32> {
        self.inner.partition().parts().to_vec()
    }

    #[getter]
    fn codim(&self) -> u32 {
        self.inner.partition().codim()
    }

    /// Coefficient of `s_{k,l}`.
    fn coefficient(&self, k: u32, l: u32) -> PyResult<Polynomial> {
        if k < l {
            return Err(PyValueError::new_err("Schur index needs k >= l"));
        }
        Ok(poly(&self.inner.coefficient(k, l)))
    }

    /// `{(k, l): Polynomial}`.
    fn terms(&self) -> BTreeMap<(u32, u32), Polynomial> {
        self.inner
            .coefficients()
            .iter()
            .map(|(i, c)| ((i.k, i.l), poly(c)))
            .collect()
    }

    /// `{(k, l): Fraction}` at an integer degree.
    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        d: i64,
    ) -> PyResult<BTreeMap<(u32, u32), Bound<'py, PyAny>>> {
        self.inner
            .evaluate_d(d)
            .iter()
            .map(|(i, c)| Ok(((i.k, i.l), fraction(py, c)?)))
            .collect()
    }

    /// The class as a polynomial in the Chern roots `a, b` and `d`.
    fn roots(&self) -> String {
        self.inner.to_roots().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CrsClass{}: {}", self.inner.partition(), self.inner)
    }
}

#[pyfunction]
fn crs_class(parts: Vec<u32>) -> PyResult<CrsClass> {
    let inner = plucker_core::crs::crs_class(&partition(parts)?).map_err(to_py)?;
    Ok(CrsClass { inner })
}

/// The class at one integer degree, computed without symbolic `d`.
#[pyfunction]
fn crs_class_at<'py>(
    py: Python<'py>,
    parts: Vec<u32>,
    d: i64,
) -> PyResult<BTreeMap<(u32, u32), Bound<'py, PyAny>>> {
    let e = plucker_core::crs::crs_class_at(&partition(parts)?, d).map_err(to_py)?;
    e.iter()
        .map(|(i, c)| Ok(((i.k, i.l), fraction(py, c)?)))
        .collect()
}

/// `{i: Polynomial}` for every admissible `i`.
#[pyfunction]
fn plucker_table(parts: Vec<u32>) -> PyResult<BTreeMap<u32, Polynomial>> {
    let t = plucker_core::plucker::plucker_table(&partition(parts)?).map_err(to_py)?;
    Ok(t.entries().iter().map(|e| (e.i, poly(&e.poly))).collect())
}

#[pyfunction]
fn plucker_point(parts: Vec<u32>) -> PyResult<Polynomial> {
    plucker_core::plucker::plucker_point(&partition(parts)?)
        .map(|p| poly(&p))
        .map_err(to_py)
}

#[pyfunction]
fn asymptotic_plucker<'py>(
    py: Python<'py>,
    parts: Vec<u32>,
    j: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let r = plucker_core::plucker::asymptotic_plucker(&partition(parts)?, j).map_err(to_py)?;
    fraction(py, &r)
}

/// `[(j, predicted degree, actual degree)]`.
#[pyfunction]
fn degree_table(parts: Vec<u32>) -> PyResult<Vec<(u32, u32, Option<usize>)>> {
    let rows = plucker_core::plucker::degree_table(&partition(parts)?).map_err(to_py)?;
    Ok(rows.iter().map(|r| (r.j, r.expected, r.actual)).collect())
}

#[pyfunction]
fn hyperflex_count(n: u32) -> PyResult<BigInt> {
    plucker_core::plucker::hyperflex_count(n).map_err(to_py)
}

#[pyfunction]
fn lines_on_hypersurface(n: u32) -> PyResult<BigInt> {
    plucker_core::plucker::lines_on_hypersurface(n).map_err(to_py)
}

/// Coefficient of `s_{m-i-1,i}` in the single-part class, from the closed formula.
#[pyfunction]
fn mflex_polynomial(m: u32, i: u32) -> PyResult<Polynomial> {
    plucker_core::plucker::mflex_polynomial(m, i)
        .map(|p| poly(&p))
        .map_err(to_py)
}

/// Incidence class on the flag manifold as a polynomial in `zeta, eta, d`.
#[pyfunction]
#[pyo3(signature = (parts, m, sigma_basis = false))]
fn incidence_class(parts: Vec<u32>, m: u32, sigma_basis: bool) -> PyResult<String> {
    let f = plucker_core::flagcalc::incidence_class(&partition(parts)?, m).map_err(to_py)?;
    Ok(if sigma_basis {
        f.to_sigma_basis().to_string()
    } else {
        f.poly().to_string()
    })
}

fn proj_dict(p: &plucker_core::flagcalc::ProjClass) -> BTreeMap<u32, Polynomial> {
    (0..p.ambient_n())
        .filter_map(|k| {
            p.coefficient_d(k)
                .filter(|c| !c.is_zero())
                .map(|c| (k, poly(&c)))
        })
        .collect()
}

/// `{zeta power: Polynomial}` for the `m`-fold contact points in `P(C^n)`.
#[pyfunction]
fn flex_point_locus(parts: Vec<u32>, m: u32, n: u32) -> PyResult<BTreeMap<u32, Polynomial>> {
    let p =
        plucker_core::flagcalc::flex_point_locus_class(&partition(parts)?, m, n).map_err(to_py)?;
    Ok(proj_dict(&p))
}

/// The class over a linear system as a polynomial in `a, b, xi, d`.
#[pyfunction]
fn universal_class(parts: Vec<u32>) -> PyResult<String> {
    let u = plucker_core::universal::universal_class(&partition(parts)?).map_err(to_py)?;
    Ok(u.poly().to_string())
}

#[pyfunction]
fn hilbert_degree(parts: Vec<u32>) -> PyResult<Polynomial> {
    plucker_core::universal::hilbert_degree(&partition(parts)?)
        .map(|p| poly(&p))
        .map_err(to_py)
}

/// `{zeta power: Polynomial}` for the contact points along a generic pencil.
#[pyfunction]
fn pencil_locus(parts: Vec<u32>, m: u32, n: u32) -> PyResult<BTreeMap<u32, Polynomial>> {
    let p = plucker_core::universal::pencil_locus_class(&partition(parts)?, m, n).map_err(to_py)?;
    Ok(proj_dict(&p))
}

/// `[(name, passed, expected, actual)]` over the reference corpus.
#[pyfunction]
fn selftest(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyTuple>>> {
    plucker_core::golden::golden_corpus()
        .into_iter()
        .map(|c| {
            PyTuple::new(
                py,
                [
                    c.name.into_pyobject(py)?.into_any(),
                    pyo3::types::PyBool::new(py, c.passed).to_owned().into_any(),
                    c.expected.into_pyobject(py)?.into_any(),
                    c.actual.into_pyobject(py)?.into_any(),
                ],
            )
        })
        .collect()
}

/// Parses a polynomial in `d` such as `"d*(d-1)/2"`.
#[pyfunction]
fn parse_polynomial(s: &str) -> PyResult<Polynomial> {
    let p: plucker_core::exactpoly::MultiPoly = s.parse().map_err(to_py)?;
    p.to_unipoly(Var::D)
        .map(|u| poly(&u))
        .ok_or_else(|| PyValueError::new_err(format!("{s:?} is not a polynomial in d")))
}

#[pyfunction]
fn format_rational(numer: BigInt, denom: BigInt) -> PyResult<String> {
    if denom == BigInt::from(0) {
        return Err(PyValueError::new_err("zero denominator"));
    }
    Ok(fmt_rational(&Rational::new(numer, denom)))
}

#[pymodule]
fn plucker(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<CrsClass>()?;
    m.add_function(wrap_pyfunction!(crs_class, m)?)?;
    m.add_function(wrap_pyfunction!(crs_class_at, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_table, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_point, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_plucker, m)?)?;
    m.add_function(wrap_pyfunction!(degree_table, m)?)?;
    m.add_function(wrap_pyfunction!(hyperflex_count, m)?)?;
    m.add_function(wrap_pyfunction!(lines_on_hypersurface, m)?)?;
    m.add_function(wrap_pyfunction!(mflex_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_class, m)?)?;
    m.add_function(wrap_pyfunction!(flex_point_locus, m)?)?;
    m.add_function(wrap_pyfunction!(universal_class, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_degree, m)?)?;
    m.add_function(wrap_pyfunction!(pencil_locus, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    m.add_function(wrap_pyfunction!(parse_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(format_rational, m)?)?;
    Ok(())
}
