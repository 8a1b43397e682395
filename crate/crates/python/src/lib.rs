//! Python bindings for `khcurves`.
//!
//! Complexes and multicurves are wrapped as classes; reports come back as
//! plain Python dictionaries and lists.

use khcurves::complex::{cone_h, direct_sum, gauss_reduce, shift_complex, validate_complex, ComplexB};
use khcurves::curve::{
    classify_reduced_complex, compile, mcg_apply, CurveComponent, Family, Multicurve as CoreMulticurve, Slope,
};
use khcurves::detection::{agccc_report, detect_split, ecsc_scan, split_closure_analysis, Connectivity};
use khcurves::examples::{example_complex, example_multicurve, example_names};
use khcurves::pairing::{geometric_dim, mor_homology_with_cap, torsion_witness, BigradedDims};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

create_exception!(khcurves_py, KhcurvesError, PyException, "Raised for any khcurves domain error.");

fn err(e: khcurves::Error) -> PyErr {
    KhcurvesError::new_err(format!("{}: {}", e.kind(), e))
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| KhcurvesError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn dims_to_py<'py>(py: Python<'py>, dims: &BigradedDims) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for ((q, h), r) in dims.iter() {
        out.set_item((q, h), r)?;
    }
    Ok(out)
}

fn parse_slope(s: &str) -> PyResult<Slope> {
    s.parse().map_err(err)
}

/// A bigraded complex over the Bar-Natan algebra.
#[pyclass(module = "khcurves_py", name = "Complex", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Complex {
    inner: ComplexB,
}

#[pymethods]
impl Complex {
    /// Parses the JSON complex format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Complex> {
        Ok(Complex { inner: ComplexB::from_json_str(text).map_err(err)? })
    }

    /// Loads a bundled example by name, e.g. `"bn-q13"`.
    #[staticmethod]
    fn example(name: &str) -> PyResult<Complex> {
        Ok(Complex { inner: example_complex(name).map_err(err)? })
    }

    /// Compiles a named family, e.g. `"alpha-plus"`, `"e2"`, `"alpha-2n-m3"`.
    #[staticmethod]
    fn compile(family: &str) -> PyResult<Complex> {
        let f: Family = family.parse().map_err(err)?;
        Ok(Complex { inner: compile(f).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    /// Generators as `(id, vertex, q, h)` tuples.
    fn generators(&self) -> Vec<(String, String, i64, i64)> {
        self.inner.generators().iter().map(|g| (g.id.clone(), g.vertex.to_string(), g.q, g.h)).collect()
    }

    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &validate_complex(&self.inner))
    }

    fn is_valid(&self) -> bool {
        validate_complex(&self.inner).is_valid()
    }

    fn is_reduced(&self) -> bool {
        self.inner.is_reduced()
    }

    fn reduce(&self) -> Complex {
        Complex { inner: gauss_reduce(&self.inner) }
    }

    fn cone_h(&self) -> Complex {
        Complex { inner: cone_h(&self.inner) }
    }

    fn shift(&self, dq: i64, dh: i64) -> Complex {
        Complex { inner: shift_complex(&self.inner, dq, dh) }
    }

    fn direct_sum(&self, other: &Complex) -> Complex {
        Complex { inner: direct_sum(&self.inner, &other.inner) }
    }

    /// Recognized components of the reduced complex.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &classify_reduced_complex(&gauss_reduce(&self.inner)))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Complex({} generators, {} entries)", self.inner.len(), self.inner.entry_count())
    }
}

/// Multicurve metadata: a list of classified curve components.
#[pyclass(module = "khcurves_py", name = "Multicurve", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Multicurve {
    inner: CoreMulticurve,
}

#[pymethods]
impl Multicurve {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Multicurve> {
        Ok(Multicurve { inner: CoreMulticurve::from_json_str(text).map_err(err)? })
    }

    #[staticmethod]
    fn example(name: &str) -> PyResult<Multicurve> {
        Ok(Multicurve { inner: example_multicurve(name).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    /// Applies an `SL(2, Z)` matrix `[[a, b], [c, d]]` to every slope.
    fn mcg_apply(&self, m: [[i64; 2]; 2]) -> PyResult<Multicurve> {
        Ok(Multicurve { inner: mcg_apply(&m, &self.inner).map_err(err)? })
    }

    fn components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.components)
    }

    fn __len__(&self) -> usize {
        self.inner.components.len()
    }

    fn __repr__(&self) -> String {
        let parts: Vec<String> = self.inner.components.iter().map(|c| c.to_string()).collect();
        format!("Multicurve([{}])", parts.join(", "))
    }
}

/// Names of the bundled examples with their kind (`complex` or `multicurve`).
#[pyfunction]
fn examples() -> Vec<(String, String)> {
    example_names().into_iter().map(|(n, k)| (n.to_string(), k.to_string())).collect()
}

/// Distance `Δ` between two slopes given as strings like `"1/3"` or `"inf"`.
#[pyfunction]
fn delta(s: &str, r: &str) -> PyResult<u64> {
    Ok(khcurves::curve::delta(parse_slope(s)?, parse_slope(r)?))
}

/// Bigraded ranks `{(q, h): rank}` of the homology of `Mor(x, y)`.
#[pyfunction]
#[pyo3(signature = (x, y, cap=None))]
fn mor_homology<'py>(py: Python<'py>, x: &Complex, y: &Complex, cap: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let dims = mor_homology_with_cap(&x.inner, &y.inner, cap).map_err(err)?;
    dims_to_py(py, &dims)
}

/// Intersection count of the arc of slope `arc` with a multicurve.
#[pyfunction]
fn geometric_dim_total(arc: &str, curve: &Multicurve) -> PyResult<u64> {
    let a = CurveComponent::arc(parse_slope(arc)?);
    curve.inner.components.iter().map(|g| geometric_dim(&a, g)).sum::<khcurves::Result<u64>>().map_err(err)
}

/// Basepoint-action torsion search in `Mor(x, y)`.
#[pyfunction]
fn torsion<'py>(py: Python<'py>, x: &Complex, y: &Complex) -> PyResult<Bound<'py, PyDict>> {
    let r = torsion_witness(&x.inner, &y.inner).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("target_form", to_py(py, &r.target_form)?)?;
    out.set_item("dims", dims_to_py(py, &r.dims)?)?;
    out.set_item("dimension", r.dimension())?;
    out.set_item("action_rank", r.action_rank)?;
    out.set_item("free", r.is_free())?;
    out.set_item("action_squared_zero", r.action_squared_zero)?;
    out.set_item("certified", r.certified)?;
    match &r.witness {
        Some(w) => {
            let wd = PyDict::new(py);
            wd.set_item("class", w.class.render(&x.inner, &r.target))?;
            wd.set_item("nullhomotopy", w.nullhomotopy.render(&x.inner, &r.target))?;
            wd.set_item("q", w.q)?;
            wd.set_item("h", w.h)?;
            out.set_item("witness", wd)?;
        }
        None => out.set_item("witness", py.None())?,
    }
    Ok(out)
}

#[pyfunction(name = "detect_split")]
fn py_detect_split<'py>(py: Python<'py>, x: &Complex) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &detect_split(&x.inner))
}

#[pyfunction(name = "ecsc_scan")]
#[pyo3(signature = (curve, n_max=8))]
fn py_ecsc_scan<'py>(py: Python<'py>, curve: &Multicurve, n_max: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ecsc_scan(&curve.inner, n_max))
}

#[pyfunction(name = "agccc_report")]
#[pyo3(signature = (curve, n_max=8, conn="no", complex=None))]
fn py_agccc_report<'py>(
    py: Python<'py>,
    curve: &Multicurve,
    n_max: u64,
    conn: &str,
    complex: Option<&Complex>,
) -> PyResult<Bound<'py, PyAny>> {
    let conn: Connectivity = conn.parse().map_err(err)?;
    to_py(py, &agccc_report(&curve.inner, n_max, conn, complex.map(|c| &c.inner)))
}

#[pyfunction(name = "split_closure")]
fn py_split_closure<'py>(py: Python<'py>, curve: &Multicurve) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &split_closure_analysis(&curve.inner))
}

#[pymodule]
pub fn khcurves_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("KhcurvesError", m.py().get_type::<KhcurvesError>())?;
    m.add_class::<Complex>()?;
    m.add_class::<Multicurve>()?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(mor_homology, m)?)?;
    m.add_function(wrap_pyfunction!(geometric_dim_total, m)?)?;
    m.add_function(wrap_pyfunction!(torsion, m)?)?;
    m.add_function(wrap_pyfunction!(py_detect_split, m)?)?;
    m.add_function(wrap_pyfunction!(py_ecsc_scan, m)?)?;
    m.add_function(wrap_pyfunction!(py_agccc_report, m)?)?;
    m.add_function(wrap_pyfunction!(py_split_closure, m)?)?;
    Ok(())
}
