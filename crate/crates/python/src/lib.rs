//! Python module `defect_lab`: cubic graphs, colourings, defect, covers,
//! reductions and the census.

use defect_lab::census::{self, graph6_inputs, run_census, CensusOptions, GraphInput, Pass};
use defect_lab::clusters::five_clusters;
use defect_lab::colouring::{classify_snark, count_colourings, graph_is_colourable, kaszonyi, BoundaryCondition};
use defect_lab::constructions::{example_34, inflate_vertex};
use defect_lab::covers::perfect_matching_index;
use defect_lab::graph::{cyclic_edge_connectivity, girth, induced_cycles, parse_graph6, to_graph6, CubicGraph, Multipole};
use defect_lab::matching::{classify_hexagon, defect, oddness, perfect_matchings};
use defect_lab::reduction::{format_trace, normalize};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::time::Duration;

fn err(e: defect_lab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable")
}

/// A closed cubic multigraph.
#[pyclass(name = "Graph", frozen, skip_from_py_object, module = "defect_lab")]
#[derive(Clone)]
struct PyGraph {
    inner: CubicGraph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph6(s).map_err(err)? })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: CubicGraph::from_edges(n, &edges).map_err(err)? })
    }

    #[staticmethod]
    fn petersen() -> Self {
        PyGraph { inner: defect_lab::named::petersen() }
    }

    /// The 34-vertex heavy-cluster snark of defect 4.
    #[staticmethod]
    fn snark34() -> PyResult<Self> {
        Ok(PyGraph { inner: example_34().map_err(err)?.0.graph })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_list()
    }

    fn to_graph6(&self) -> PyResult<String> {
        to_graph6(&self.inner).map_err(err)
    }

    fn girth(&self) -> Option<usize> {
        girth(&self.inner)
    }

    /// None when every cycle-separating cut is larger than `cap`.
    #[pyo3(signature = (cap = 6))]
    fn cyclic_connectivity(&self, cap: usize) -> PyResult<Option<usize>> {
        Ok(cyclic_edge_connectivity(&self.inner, cap).map_err(err)?.value())
    }

    fn is_colourable(&self) -> bool {
        graph_is_colourable(&self.inner)
    }

    fn count_colourings(&self) -> PyResult<u64> {
        count_colourings(&Multipole::from(self.inner.clone()), &BoundaryCondition::empty()).map_err(err)
    }

    /// `{"snark": bool, "critical": bool, "bicritical": bool}`
    fn classify(&self) -> PyResult<String> {
        let c = classify_snark(&self.inner).map_err(err)?;
        Ok(format!(
            "{{\"snark\": {}, \"critical\": {}, \"bicritical\": {}}}",
            c.is_snark(),
            c.critical(),
            c.bicritical()
        ))
    }

    fn perfect_matchings(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(perfect_matchings(&self.inner).map_err(err)?.into_iter().map(|m| m.0.to_vec()).collect())
    }

    /// Defect and an optimal array as three edge lists.
    fn defect(&self) -> PyResult<(usize, Vec<Vec<usize>>)> {
        let d = defect(&self.inner).map_err(err)?;
        Ok((d.value, d.witness.members().iter().map(|m| m.to_vec()).collect()))
    }

    fn oddness(&self) -> PyResult<usize> {
        oddness(&self.inner).map_err(err)
    }

    /// None when more than `cap` matchings are needed.
    #[pyo3(signature = (cap = 6))]
    fn perfect_matching_index(&self, cap: usize) -> PyResult<Option<usize>> {
        Ok(perfect_matching_index(&self.inner, cap).map_err(err)?.value())
    }

    fn kaszonyi(&self, e: usize) -> PyResult<u64> {
        kaszonyi(&self.inner, e).map_err(err)
    }

    /// Induced 6-cycles as (vertices, class) pairs.
    fn hexagons(&self) -> PyResult<Vec<(Vec<usize>, String)>> {
        induced_cycles(&self.inner, 6)
            .into_iter()
            .map(|c| {
                let k = classify_hexagon(&self.inner, &c).map_err(err)?;
                Ok((c.vertices, format!("{k:?}")))
            })
            .collect()
    }

    /// 5-clusters as (vertices, heavy) pairs.
    fn five_clusters(&self) -> PyResult<Vec<(Vec<usize>, bool)>> {
        Ok(five_clusters(&self.inner).map_err(err)?.into_iter().map(|c| (c.vertices, c.heavy)).collect())
    }

    fn inflate(&self, v: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: inflate_vertex(&self.inner, v).map_err(err)? })
    }

    /// Reduces a defect-3 snark; returns (status, graph, trace lines).
    fn normalize(&self) -> PyResult<(String, PyGraph, Vec<String>)> {
        let nf = normalize(&self.inner).map_err(err)?;
        let status = to_json(&nf.status).trim_matches('"').to_string();
        let trace = format_trace(&nf.trace).lines().map(str::to_string).collect();
        Ok((status, PyGraph { inner: nf.graph }, trace))
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertices={}, edges={})", self.inner.vertex_count(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

fn parse_passes(passes: &[String]) -> PyResult<Vec<Pass>> {
    passes
        .iter()
        .map(|p| match p.as_str() {
            "defect" => Ok(Pass::Defect),
            "hexagons" => Ok(Pass::Hexagons),
            "pi" => Ok(Pass::Pi),
            "clusters" => Ok(Pass::Clusters),
            "reduce" => Ok(Pass::Reduce),
            other => Err(PyValueError::new_err(format!("unknown pass `{other}`"))),
        })
        .collect()
}

/// Runs the census on graph6 text; returns (jsonl, defect csv, hexagon csv).
#[pyfunction]
#[pyo3(signature = (text, passes = vec!["defect".to_string(), "hexagons".to_string()], jobs = 0, timeout = 10.0))]
fn census_text(py: Python<'_>, text: &str, passes: Vec<String>, jobs: usize, timeout: f64) -> PyResult<(String, String, String)> {
    let opts = CensusOptions { passes: parse_passes(&passes)?, jobs, timeout: Duration::from_secs_f64(timeout), ..Default::default() };
    let inputs = graph6_inputs("input", text);
    let (records, report) = py.detach(|| run_census(&inputs, &opts)).map_err(err)?;
    let mut jsonl = Vec::new();
    census::write_jsonl(&records, &mut jsonl).map_err(err)?;
    Ok((
        String::from_utf8(jsonl).expect("utf-8"),
        report.defect_csv().map_err(err)?,
        report.hexagon_csv().map_err(err)?,
    ))
}

/// Every pass on one graph6 string, as a JSON record.
#[pyfunction]
fn analyze(graph6: &str) -> String {
    let opts = CensusOptions {
        passes: vec![Pass::Defect, Pass::Hexagons, Pass::Pi, Pass::Clusters, Pass::Reduce],
        include_trivial: true,
        ..Default::default()
    };
    let input = GraphInput { id: "input:1".into(), graph6: graph6.to_string() };
    to_json(&census::analyze_input(&input, &opts))
}

#[pymodule]
#[pyo3(name = "defect_lab")]
fn defect_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(census_text, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
