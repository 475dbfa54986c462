use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use hatlab_core::altcycles::{alternating_cycle_system, hat_orientation};
use hatlab_core::autgraph::automorphism_group;
use hatlab_core::fpgroup::{amalgam_by_name, todd_coxeter, FpPresentation, DEFAULT_COSET_LIMIT};
use hatlab_core::graphcore::{Graph, VertexAction};
use hatlab_core::pairsearch::{maximal_half_arc_pairs, RealizedAmalgam, SearchOptions};
use hatlab_core::permgroup::parse_group;
use hatlab_core::reports::{run_example_41, run_example_42, run_example_43, run_example_44, Witness, STORED_WITNESS};
use hatlab_core::{Permutation, PermutationGroup};

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Permutation group given by generators in cycle notation.
#[pyclass(name = "PermGroup", module = "hatlab")]
struct PyPermGroup {
    inner: PermutationGroup,
}

#[pymethods]
impl PyPermGroup {
    #[new]
    fn new(degree: usize, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|g| Permutation::parse_cycles(degree, g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_err)?;
        let inner = PermutationGroup::new(degree, gens).map_err(value_err)?;
        Ok(PyPermGroup { inner })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Group order as a decimal string.
    fn order(&self) -> String {
        self.inner.order().to_string()
    }

    fn contains(&self, cycles: &str) -> PyResult<bool> {
        let p = Permutation::parse_cycles(self.inner.degree(), cycles).map_err(value_err)?;
        Ok(self.inner.contains(&p))
    }

    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(|g| g.to_cycle_string()).collect()
    }

    fn orbits(&self) -> Vec<Vec<u32>> {
        self.inner.orbits()
    }

    fn __repr__(&self) -> String {
        format!("PermGroup(degree={}, order={})", self.inner.degree(), self.inner.order())
    }
}

/// Number of cosets of the trivial subgroup of a finitely presented group.
#[pyfunction]
fn coset_count(presentation: &str) -> PyResult<usize> {
    let pres = FpPresentation::parse(presentation).map_err(value_err)?;
    let table = todd_coxeter(&pres, &[], DEFAULT_COSET_LIMIT).map_err(value_err)?;
    Ok(table.index())
}

/// Automorphism group of a graph in `n m` / `u v` text format.
#[pyfunction]
fn automorphisms(graph: &str) -> PyResult<PyPermGroup> {
    let g = Graph::parse(graph).map_err(value_err)?;
    let inner = automorphism_group(&g).map_err(value_err)?;
    Ok(PyPermGroup { inner })
}

/// Alternating cycle data of `group` acting half-arc-transitively, as JSON.
#[pyfunction]
fn alternating_cycles(graph: &str, group: &str) -> PyResult<String> {
    let g = Graph::parse(graph).map_err(value_err)?;
    let grp = parse_group(group).map_err(value_err)?;
    let action = VertexAction::new(grp, g).map_err(value_err)?;
    let orientation = hat_orientation(&action).map_err(value_err)?;
    let system = alternating_cycle_system(&orientation).map_err(value_err)?;
    serde_json::to_string(&system).map_err(value_err)
}

/// Report for a worked example (`"4.1"` to `"4.4"`) as JSON.
#[pyfunction]
fn run_example(py: Python<'_>, id: &str) -> PyResult<String> {
    let id = id.to_string();
    let report = py.detach(move || match id.as_str() {
        "4.1" => Ok(run_example_41()),
        "4.2" => {
            let w = Witness::parse(STORED_WITNESS)?;
            Ok(run_example_42(Some(&w), None))
        }
        "4.3" => Ok(run_example_43()),
        "4.4" => Ok(run_example_44()),
        other => Err(format!("unknown example {other:?}")),
    });
    let report = report.map_err(PyKeyError::new_err)?;
    serde_json::to_string(&report).map_err(value_err)
}

/// Result count, completeness and quadruples of a pair search.
#[pyfunction]
#[pyo3(signature = (amalgam, deep = false))]
fn pair_search(py: Python<'_>, amalgam: &str, deep: bool) -> PyResult<(usize, bool, Vec<Vec<String>>)> {
    let spec = amalgam_by_name(amalgam).ok_or_else(|| PyKeyError::new_err(amalgam.to_string()))?;
    let outcome = py.detach(move || {
        let am = RealizedAmalgam::new(&spec).map_err(|e| e.to_string())?;
        let opts = SearchOptions {
            deep,
            ..Default::default()
        };
        maximal_half_arc_pairs(&am, &opts).map_err(|e| e.to_string())
    });
    let outcome = outcome.map_err(PyValueError::new_err)?;
    let quads = outcome.results.iter().map(|r| r.quadruple.to_vec()).collect();
    Ok((outcome.results.len(), outcome.complete, quads))
}

#[pymodule]
fn hatlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermGroup>()?;
    m.add_function(wrap_pyfunction!(coset_count, m)?)?;
    m.add_function(wrap_pyfunction!(automorphisms, m)?)?;
    m.add_function(wrap_pyfunction!(alternating_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(run_example, m)?)?;
    m.add_function(wrap_pyfunction!(pair_search, m)?)?;
    Ok(())
}
