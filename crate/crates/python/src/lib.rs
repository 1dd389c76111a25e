//! Python bindings: grids, compatible pairs, the bijection, single moves and
//! Grothendieck polynomials.

use bumpless_core::bijection;
use bumpless_core::biword::enumerate_rcp;
use bumpless_core::enumerate::enumerate_mbpd;
use bumpless_core::groth::{self, Method};
use bumpless_core::moves;
use bumpless_core::{Biletter, Permutation};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: bumpless_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A marked bumpless pipedream.
#[pyclass(name = "Mbpd", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyMbpd(bumpless_core::Mbpd);

#[pymethods]
impl PyMbpd {
    /// Parses the newline or `/`-separated form.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.trim().parse().map(PyMbpd).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyMbpd(bumpless_core::Mbpd::identity(n))
    }

    /// The Rothe grid of a permutation in one-line notation.
    #[staticmethod]
    fn rothe(perm: Vec<usize>) -> PyResult<Self> {
        let w = Permutation::new(perm).map_err(err)?;
        Ok(PyMbpd(bumpless_core::Mbpd::rothe(&w)))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn rows(&self) -> Vec<String> {
        self.0.serialize().lines().map(str::to_string).collect()
    }

    fn compact(&self) -> String {
        self.0.to_compact()
    }

    fn weight(&self) -> Vec<usize> {
        self.0.weight().0
    }

    fn permutation(&self) -> Vec<usize> {
        self.0.permutation().one_line().to_vec()
    }

    fn heavy_count(&self) -> usize {
        self.0.heavy_count()
    }

    fn is_marked(&self) -> bool {
        self.0.is_marked()
    }

    fn is_reduced(&self) -> bool {
        bijection::is_reduced_mbpd(&self.0)
    }

    fn render(&self) -> String {
        self.0.render_ascii()
    }

    fn __str__(&self) -> String {
        self.0.serialize()
    }

    fn __repr__(&self) -> String {
        format!("Mbpd('{}')", self.0.to_compact())
    }
}

/// A reverse compatible pair.
#[pyclass(name = "Rcp", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRcp(bumpless_core::Rcp);

#[pymethods]
impl PyRcp {
    /// Parses `"(3,4),(3,5)"` or `"()"` for grid size `n`.
    #[new]
    fn new(n: usize, text: &str) -> PyResult<Self> {
        bumpless_core::Rcp::parse(n, text).map(PyRcp).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn letters(&self) -> Vec<(usize, usize)> {
        self.0.letters().iter().map(|b| (b.i, b.a)).collect()
    }

    fn weight(&self) -> Vec<usize> {
        self.0.weight().0
    }

    fn permutation(&self) -> Vec<usize> {
        self.0.permutation().one_line().to_vec()
    }

    fn is_reduced(&self) -> bool {
        self.0.is_reduced()
    }

    /// Crossing cells of the matching pipedream.
    fn crossings(&self) -> Vec<(usize, usize)> {
        self.0.to_pipedream().crossings().iter().copied().collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rcp({}, '{}')", self.0.n(), self.0)
    }
}

#[pyfunction]
fn phi(d: &PyMbpd) -> PyRcp {
    PyRcp(bijection::phi(&d.0))
}

/// `phi` with the case label of every move, grouped by pop.
#[pyfunction]
fn phi_trace(d: &PyMbpd) -> (PyRcp, Vec<Vec<String>>) {
    let (b, pops) = bijection::phi_traced(&d.0);
    let labels = pops
        .iter()
        .map(|p| p.iter().map(|r| r.label.clone()).collect())
        .collect();
    (PyRcp(b), labels)
}

#[pyfunction]
fn psi(b: &PyRcp) -> PyMbpd {
    PyMbpd(bijection::psi(&b.0))
}

/// Returns `((i, a), rest)`.
#[pyfunction]
fn row_pop(d: &PyMbpd) -> PyResult<((usize, usize), PyMbpd)> {
    let p = bijection::row_pop(&d.0).map_err(err)?;
    Ok(((p.biletter.i, p.biletter.a), PyMbpd(p.rest)))
}

#[pyfunction]
fn row_push(d: &PyMbpd, i: usize, a: usize) -> PyResult<PyMbpd> {
    bijection::row_push(&d.0, Biletter::new(i, a))
        .map(PyMbpd)
        .map_err(err)
}

/// F-move at row `r`; returns the new grid and the case label.
#[pyfunction]
fn f_move(d: &PyMbpd, r: usize) -> PyResult<(PyMbpd, String)> {
    let (g, t) = moves::f_move_traced(&d.0, r).map_err(err)?;
    Ok((PyMbpd(g), t.label()))
}

/// E-move at row `r`; returns the new grid and the case label.
#[pyfunction]
fn e_move(d: &PyMbpd, r: usize) -> PyResult<(PyMbpd, String)> {
    let (g, t) = moves::e_move_traced(&d.0, r).map_err(err)?;
    Ok((PyMbpd(g), t.label()))
}

#[pyfunction]
fn all_mbpds(n: usize) -> Vec<PyMbpd> {
    enumerate_mbpd(n).map(PyMbpd).collect()
}

#[pyfunction]
fn all_rcps(n: usize) -> Vec<PyRcp> {
    enumerate_rcp(n).map(PyRcp).collect()
}

fn groth_poly(perm: Vec<usize>, method: &str) -> PyResult<bumpless_core::Poly> {
    let w = Permutation::new(perm).map_err(err)?;
    let m: Method = method.parse().map_err(err)?;
    Ok(groth::groth(&w, m))
}

/// Canonical text of the β-Grothendieck polynomial, e.g. `"x1 + x2 + b*x1*x2"`.
#[pyfunction]
#[pyo3(signature = (perm, method = "recursion"))]
fn grothendieck(perm: Vec<usize>, method: &str) -> PyResult<String> {
    Ok(groth_poly(perm, method)?.to_string())
}

/// Terms as `(beta_exponent, x_exponents, coefficient)`.
#[pyfunction]
#[pyo3(signature = (perm, method = "recursion"))]
fn grothendieck_terms(perm: Vec<usize>, method: &str) -> PyResult<Vec<(u32, Vec<u32>, i128)>> {
    let g = groth_poly(perm, method)?;
    Ok(g.terms()
        .into_iter()
        .map(|(e, c)| (e[0], e[1..].to_vec(), c))
        .collect())
}

#[pymodule]
fn bumpless(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMbpd>()?;
    m.add_class::<PyRcp>()?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_trace, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(row_pop, m)?)?;
    m.add_function(wrap_pyfunction!(row_push, m)?)?;
    m.add_function(wrap_pyfunction!(f_move, m)?)?;
    m.add_function(wrap_pyfunction!(e_move, m)?)?;
    m.add_function(wrap_pyfunction!(all_mbpds, m)?)?;
    m.add_function(wrap_pyfunction!(all_rcps, m)?)?;
    m.add_function(wrap_pyfunction!(grothendieck, m)?)?;
    m.add_function(wrap_pyfunction!(grothendieck_terms, m)?)?;
    Ok(())
}
