//! Python bindings: algebras, elements, the center, Hochschild dimensions,
//! M_alpha, M_beta and the product table.

use preproj::hochschild::{self, Hochschild};
use preproj::linalg::Matrix;
use preproj::rational::display;
use preproj::{center, parse, products, report, verify, Algebra, Elem, QuiverId};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use std::sync::Arc;

fn value_err(e: preproj::Error) -> PyErr {
    match e {
        preproj::Error::Unsupported(_) | preproj::Error::Parse { .. } | preproj::Error::Incomposable(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn rows(m: &Matrix) -> Vec<Vec<String>> {
    m.data.iter().map(|r| r.iter().map(display).collect()).collect()
}

/// The preprojective algebra of a Dynkin quiver, e.g. Algebra("e6").
#[pyclass(name = "Algebra", module = "preproj_py", frozen)]
struct PyAlgebra {
    inner: Arc<Algebra>,
}

/// An element of an algebra, in the monomial normal form.
#[pyclass(name = "Element", module = "preproj_py", frozen)]
struct PyElement {
    alg: Arc<Algebra>,
    elem: Elem,
}

impl PyAlgebra {
    fn hochschild(&self) -> PyResult<Hochschild<'_>> {
        Hochschild::build(&self.inner).map_err(value_err)
    }
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(quiver: &str) -> PyResult<Self> {
        let id = QuiverId::parse(quiver).map_err(value_err)?;
        Ok(PyAlgebra { inner: Arc::new(Algebra::build(id).map_err(value_err)?) })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.id().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Coxeter number.
    #[getter]
    fn h(&self) -> usize {
        self.inner.h()
    }

    #[getter]
    fn top_degree(&self) -> usize {
        self.inner.top()
    }

    /// Parses text such as "a3* a3 - 1/2 e1" or "x4 x3".
    fn parse(&self, text: &str) -> PyResult<PyElement> {
        let elem = parse::parse_element(&self.inner, text).map_err(value_err)?;
        Ok(PyElement { alg: self.inner.clone(), elem })
    }

    /// Product of two parsed expressions, as normal-form text.
    fn multiply(&self, x: &str, y: &str) -> PyResult<String> {
        let a = parse::parse_element(&self.inner, x).map_err(value_err)?;
        let b = parse::parse_element(&self.inner, y).map_err(value_err)?;
        Ok(self.inner.display_elem(&self.inner.mul(&a, &b)))
    }

    /// H_A(t) as rows of polynomial strings.
    fn hilbert(&self) -> Vec<Vec<String>> {
        report::hilbert(&self.inner).rows
    }

    /// Center generators as (name, degree, element text).
    fn center(&self) -> PyResult<Vec<(String, usize, String)>> {
        let named = center::named_center(&self.inner).map_err(value_err)?;
        Ok(named.elements.iter().map(|e| (e.name.clone(), e.degree, self.inner.display_elem(&e.elem))).collect())
    }

    /// Degreewise dimensions of HH^index, as (degree, dim) pairs.
    fn hh_dims(&self, index: usize) -> PyResult<Vec<(i64, usize)>> {
        if index >= hochschild::MAX_INDEX {
            return Err(PyValueError::new_err(format!("HH^{index} is not built; use 0..{}", hochschild::MAX_INDEX - 1)));
        }
        Ok(self.hochschild()?.dims(index).into_iter().collect())
    }

    /// M_alpha as rows of "p/q"-style strings, or None when HH^2 = 0.
    fn m_alpha(&self) -> PyResult<Option<Vec<Vec<String>>>> {
        let hs = self.hochschild()?;
        if preproj::catalog::f_labels(self.inner.id()).is_empty() {
            return Ok(None);
        }
        Ok(Some(rows(&products::m_alpha(&hs).map_err(value_err)?)))
    }

    fn m_beta(&self) -> PyResult<Vec<Vec<String>>> {
        let hs = self.hochschild()?;
        Ok(rows(&products::m_beta(&hs).map_err(value_err)?))
    }

    /// Every computed product as (left, right, [(name, coeff)], provenance).
    fn product_table(&self) -> PyResult<Vec<(String, String, Vec<(String, String)>, String)>> {
        let hs = self.hochschild()?;
        let t = products::full_product_table(&hs).map_err(value_err)?;
        Ok(t.to_wire()
            .into_iter()
            .map(|e| {
                let prov = serde_json::to_value(e.provenance).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
                (e.left, e.right, e.result.into_iter().map(|w| (w.name, w.coeff)).collect(), prov)
            })
            .collect())
    }

    /// All verification checks as (criterion, name, pass, detail).
    fn verify(&self) -> Vec<(u8, String, bool, String)> {
        verify::verify(&self.inner, None).checks.into_iter().map(|c| (c.criterion, c.name, c.pass, c.detail)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Algebra('{}', dim={})", self.inner.id(), self.inner.dim())
    }
}

impl PyElement {
    fn same_algebra(&self, other: &PyElement) -> PyResult<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg.id() == other.alg.id() {
            Ok(())
        } else {
            Err(PyValueError::new_err("elements of different algebras"))
        }
    }

    fn wrap(&self, elem: Elem) -> PyElement {
        PyElement { alg: self.alg.clone(), elem }
    }
}

#[pymethods]
impl PyElement {
    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        Ok(self.wrap(self.alg.mul(&self.elem, &other.elem)))
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        Ok(self.wrap(self.elem.add(&other.elem)))
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.same_algebra(other)?;
        Ok(self.wrap(self.elem.sub(&other.elem)))
    }

    fn __neg__(&self) -> PyElement {
        self.wrap(self.elem.neg())
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.alg.id() == other.alg.id() && self.elem == other.elem
    }

    fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    fn is_central(&self) -> bool {
        self.alg.is_central(&self.elem)
    }

    /// Degree when homogeneous, else None.
    fn degree(&self) -> Option<usize> {
        self.alg.degree(&self.elem)
    }

    /// Image under the Nakayama automorphism.
    fn eta(&self) -> PyElement {
        self.wrap(self.alg.eta(&self.elem))
    }

    /// Image under the anti-automorphism a -> a^*.
    fn star(&self) -> PyElement {
        self.wrap(self.alg.star(&self.elem))
    }

    /// Frobenius pairing f(xy), as a "p/q" string.
    fn pair(&self, other: &PyElement) -> PyResult<String> {
        self.same_algebra(other)?;
        Ok(preproj::rational::to_wire(&self.alg.pair(&self.elem, &other.elem)))
    }

    fn __str__(&self) -> String {
        self.alg.display_elem(&self.elem)
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.alg.display_elem(&self.elem))
    }
}

#[pymodule]
fn preproj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyElement>()?;
    Ok(())
}
