//! Python bindings: a `Clutter` class wrapping the core operations, the
//! chordality recognizers, and the Betti-table engines.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use clutters::betti::{betti_table_hochster, betti_table_taylor_bounded, BettiTable, LinearIndex};
use clutters::clutter::Clutter as CoreClutter;
use clutters::complex::clique_complex;
use clutters::elimination::{
    chordality_check, complete_clutter_order, is_simplicial, simplicial_set, verify_certificate,
    ChordalityVerdict, Strategy,
};
use clutters::error::Error;
use clutters::format::{parse_clutter, serialize_clutter};
use clutters::linalg::FieldSpec;
use clutters::monomial::{circuit_ideal, has_linear_quotients, QuotientsOutcome};
use clutters::set::VertexSet;
use clutters::stability::{check_stability, random_clutter};
use clutters::variants::{
    is_e_chordal, is_resolution_l_chordal, is_vtv_chordal, is_w_chordal, Recognition,
};
use clutters::{fixtures, MinorOp};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_set(members: Vec<u32>) -> PyResult<VertexSet> {
    if let Some(&v) = members.iter().find(|&&v| v == 0 || v > 64) {
        return Err(PyValueError::new_err(format!(
            "vertex {v} out of range 1..=64"
        )));
    }
    Ok(VertexSet::from_members(members))
}

fn check_dims(n: u32, d: u32) -> PyResult<()> {
    if n == 0 || n > 64 || d == 0 {
        return Err(PyValueError::new_err(
            "need 1 <= n <= 64 and d >= 1".to_string(),
        ));
    }
    Ok(())
}

fn field_from(ch: u64) -> PyResult<FieldSpec> {
    FieldSpec::from_characteristic(ch).map_err(err)
}

fn table_to_py<'py>(py: Python<'py>, table: &BettiTable) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    for ((i, j), beta) in table.entries() {
        dict.set_item((i, j), beta)?;
    }
    Ok(dict)
}

/// A d-uniform clutter on vertices 1..n.
#[pyclass(name = "Clutter", from_py_object)]
#[derive(Clone)]
struct PyClutter {
    inner: CoreClutter,
}

#[pymethods]
impl PyClutter {
    #[new]
    #[pyo3(signature = (n, circuits, d=None))]
    fn new(n: u32, circuits: Vec<Vec<u32>>, d: Option<u32>) -> PyResult<Self> {
        let sets: Vec<VertexSet> = circuits
            .into_iter()
            .map(to_set)
            .collect::<PyResult<_>>()?;
        let inner = match d {
            Some(d) => CoreClutter::uniform(n, d, sets),
            None => CoreClutter::new(n, sets),
        }
        .map_err(err)?;
        Ok(PyClutter { inner })
    }

    #[staticmethod]
    fn complete(n: u32, d: u32) -> PyResult<PyClutter> {
        check_dims(n, d)?;
        Ok(PyClutter {
            inner: CoreClutter::complete(n, d),
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: parse_clutter(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn random(n: u32, d: u32, density: f64, seed: u64) -> PyResult<PyClutter> {
        check_dims(n, d)?;
        Ok(PyClutter {
            inner: random_clutter(n, d, density, seed),
        })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.num_vertices()
    }

    #[getter]
    fn d(&self) -> Option<u32> {
        self.inner.degree()
    }

    #[getter]
    fn circuits(&self) -> Vec<Vec<u32>> {
        self.inner.circuits().iter().map(|c| c.to_vec()).collect()
    }

    fn serialize(&self) -> PyResult<String> {
        serialize_clutter(&self.inner).map_err(err)
    }

    fn complement(&self) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: self.inner.complement().map_err(err)?,
        })
    }

    fn induced(&self, vertices: Vec<u32>) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: self.inner.induced(to_set(vertices)?),
        })
    }

    fn closed_neighborhood(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self
            .inner
            .closed_neighborhood(to_set(a)?)
            .map_err(err)?
            .to_vec())
    }

    fn is_clique(&self, vertices: Vec<u32>) -> PyResult<bool> {
        Ok(self.inner.is_clique(to_set(vertices)?))
    }

    fn delete_submaximal(&self, e: Vec<u32>) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: self.inner.delete_submaximal(to_set(e)?).map_err(err)?,
        })
    }

    fn submaximal_circuits(&self) -> Vec<Vec<u32>> {
        self.inner
            .submaximal_circuits()
            .iter()
            .map(|e| e.to_vec())
            .collect()
    }

    fn vertex_deletion(&self, v: u32) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: self.inner.vertex_deletion(v).map_err(err)?,
        })
    }

    fn vertex_contraction(&self, v: u32) -> PyResult<PyClutter> {
        Ok(PyClutter {
            inner: self.inner.vertex_contraction(v).map_err(err)?,
        })
    }

    /// Apply a minor path given as (vertex, "delete"|"contract") pairs.
    fn apply_minor(&self, path: Vec<(u32, String)>) -> PyResult<PyClutter> {
        let ops: Vec<MinorOp> = path
            .into_iter()
            .map(|(v, kind)| match kind.as_str() {
                "delete" => Ok(MinorOp::Delete(v)),
                "contract" => Ok(MinorOp::Contract(v)),
                other => Err(PyValueError::new_err(format!(
                    "unknown minor operation `{other}`"
                ))),
            })
            .collect::<PyResult<_>>()?;
        Ok(PyClutter {
            inner: self.inner.apply_minor(&ops).map_err(err)?,
        })
    }

    fn is_simplicial(&self, e: Vec<u32>) -> PyResult<bool> {
        is_simplicial(&self.inner, to_set(e)?).map_err(err)
    }

    fn simplicial_set(&self) -> Vec<Vec<u32>> {
        simplicial_set(&self.inner)
            .iter()
            .map(|e| e.to_vec())
            .collect()
    }

    /// Decide chordality; returns (verdict, certificate-or-None).
    #[pyo3(signature = (strategy="backtracking"))]
    fn chordality(&self, strategy: &str) -> PyResult<(String, Option<Vec<Vec<u32>>>)> {
        let strategy = match strategy {
            "greedy" => Strategy::Greedy,
            "backtracking" => Strategy::Backtracking,
            other => return Err(PyValueError::new_err(format!("unknown strategy `{other}`"))),
        };
        match chordality_check(&self.inner, strategy).map_err(err)? {
            ChordalityVerdict::Chordal(cert) => Ok((
                "chordal".into(),
                Some(cert.steps.iter().map(|e| e.to_vec()).collect()),
            )),
            ChordalityVerdict::NotChordal(_) => Ok(("not-chordal".into(), None)),
        }
    }

    fn verify_certificate(&self, order: Vec<Vec<u32>>) -> PyResult<bool> {
        let steps: Vec<VertexSet> = order
            .into_iter()
            .map(to_set)
            .collect::<PyResult<_>>()?;
        Ok(verify_certificate(&self.inner, &steps))
    }

    fn is_w_chordal(&self) -> bool {
        is_w_chordal(&self.inner)
    }

    fn is_vtv_chordal(&self) -> bool {
        is_vtv_chordal(&self.inner)
    }

    /// True/False, or None when the reverse search exhausts its budget.
    #[pyo3(signature = (budget=1_000_000))]
    fn is_e_chordal(&self, budget: usize) -> PyResult<Option<bool>> {
        Ok(match is_e_chordal(&self.inner, budget).map_err(err)? {
            Recognition::Yes => Some(true),
            Recognition::No => Some(false),
            Recognition::Unknown => None,
        })
    }

    #[pyo3(signature = (l, characteristic=2))]
    fn is_resolution_l_chordal(&self, l: i32, characteristic: u64) -> PyResult<bool> {
        let field = field_from(characteristic)?;
        Ok(is_resolution_l_chordal(
            &clique_complex(&self.inner),
            l,
            field,
        ))
    }

    /// Betti table of the circuit ideal as {(i, j): beta} with j the shift.
    #[pyo3(signature = (characteristic=2, engine="hochster"))]
    fn betti<'py>(
        &self,
        py: Python<'py>,
        characteristic: u64,
        engine: &str,
    ) -> PyResult<Bound<'py, PyDict>> {
        let field = field_from(characteristic)?;
        let table = match engine {
            "hochster" => betti_table_hochster(&self.inner, field).map_err(err)?,
            "taylor" => {
                let ideal = circuit_ideal(&self.inner).map_err(err)?;
                betti_table_taylor_bounded(&ideal, field, 20).map_err(err)?
            }
            other => return Err(PyValueError::new_err(format!("unknown engine `{other}`"))),
        };
        table_to_py(py, &table)
    }

    /// (regularity, index-or-None-for-infinity, projective dimension).
    #[pyo3(signature = (characteristic=2))]
    fn betti_summary(&self, characteristic: u64) -> PyResult<(u32, Option<u32>, u32)> {
        let field = field_from(characteristic)?;
        let table = betti_table_hochster(&self.inner, field).map_err(err)?;
        let index = match table.index() {
            LinearIndex::Finite(r) => Some(r),
            LinearIndex::Infinite => None,
        };
        Ok((table.regularity(), index, table.projdim()))
    }

    #[pyo3(signature = (characteristic=2))]
    fn has_linear_resolution(&self, characteristic: u64) -> PyResult<bool> {
        let field = field_from(characteristic)?;
        let d = self
            .inner
            .degree()
            .ok_or_else(|| PyValueError::new_err("clutter is not uniform"))?;
        Ok(betti_table_hochster(&self.inner, field)
            .map_err(err)?
            .has_linear_resolution(d))
    }

    /// "yes"/"no"/"unknown" for linear quotients of the circuit ideal.
    #[pyo3(signature = (budget=1_000_000))]
    fn linear_quotients(&self, budget: usize) -> PyResult<String> {
        let ideal = circuit_ideal(&self.inner).map_err(err)?;
        Ok(match has_linear_quotients(&ideal, budget).map_err(err)? {
            QuotientsOutcome::Yes(_) => "yes".into(),
            QuotientsOutcome::No => "no".into(),
            QuotientsOutcome::Unknown => "unknown".into(),
        })
    }

    /// JSON stability report for removing circuits `a` through element `e`.
    #[pyo3(signature = (e, a, characteristics=vec![2, 3]))]
    fn stability_report(
        &self,
        e: Vec<u32>,
        a: Vec<Vec<u32>>,
        characteristics: Vec<u64>,
    ) -> PyResult<String> {
        let fields: Vec<FieldSpec> = characteristics
            .into_iter()
            .map(field_from)
            .collect::<PyResult<_>>()?;
        let removed: Vec<VertexSet> = a
            .into_iter()
            .map(to_set)
            .collect::<PyResult<_>>()?;
        let report = check_stability(&self.inner, to_set(e)?, &removed, &fields).map_err(err)?;
        Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
    }

    fn __repr__(&self) -> String {
        format!(
            "Clutter(n={}, d={:?}, circuits={})",
            self.inner.num_vertices(),
            self.inner.degree(),
            self.inner.num_circuits()
        )
    }

    fn __eq__(&self, other: &PyClutter) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.num_circuits()
    }
}

#[pyfunction]
fn figure_one() -> PyClutter {
    PyClutter {
        inner: fixtures::figure_one(),
    }
}

#[pyfunction]
fn figure_two_c() -> PyClutter {
    PyClutter {
        inner: fixtures::figure_two_c(),
    }
}

#[pyfunction]
fn figure_two_d() -> PyClutter {
    PyClutter {
        inner: fixtures::figure_two_d(),
    }
}

#[pyfunction]
fn dunce_hat() -> PyClutter {
    PyClutter {
        inner: fixtures::dunce_hat_clutter(),
    }
}

#[pyfunction]
fn dunce_hat_order() -> Vec<Vec<u32>> {
    fixtures::dunce_hat_elimination_order()
        .iter()
        .map(|e| e.to_vec())
        .collect()
}

/// The ordered (d-1)-subsets through `v` that eliminate the complete clutter.
#[pyfunction]
fn complete_elimination_order(n: u32, d: u32, v: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(complete_clutter_order(n, d, v)
        .map_err(err)?
        .iter()
        .map(|e| e.to_vec())
        .collect())
}

#[pymodule]
fn pyclutters(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyClutter>()?;
    m.add_function(wrap_pyfunction!(figure_one, m)?)?;
    m.add_function(wrap_pyfunction!(figure_two_c, m)?)?;
    m.add_function(wrap_pyfunction!(figure_two_d, m)?)?;
    m.add_function(wrap_pyfunction!(dunce_hat, m)?)?;
    m.add_function(wrap_pyfunction!(dunce_hat_order, m)?)?;
    m.add_function(wrap_pyfunction!(complete_elimination_order, m)?)?;
    Ok(())
}
