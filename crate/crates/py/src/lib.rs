//! Python bindings. Structured results cross the boundary as plain
//! dicts and lists, converted through their JSON form.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyIOError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

use sepgraph_core::asdim::{self, GridPatch};
use sepgraph_core::expansion::{self, Budget};
use sepgraph_core::families::{self, IndexEncoding};
use sepgraph_core::graph::{self as core_graph, generators, Girth};
use sepgraph_core::separation::{self, SepHost, SeparationProfile, MAX_EXACT_HOST};
use sepgraph_core::{Error, Graph as CoreGraph, SubgraphRef};

create_exception!(sepgraph, SepgraphError, PyException);
create_exception!(sepgraph, ParseError, SepgraphError);
create_exception!(sepgraph, PreconditionError, SepgraphError);
create_exception!(sepgraph, BudgetExceededError, SepgraphError);
create_exception!(sepgraph, DegenerateError, SepgraphError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Parse { .. } => ParseError::new_err(msg),
        Error::Precondition(_) => PreconditionError::new_err(msg),
        Error::BudgetExceeded { .. } => BudgetExceededError::new_err(msg),
        Error::Degenerate(_) => DegenerateError::new_err(msg),
        Error::Io(_) => PyIOError::new_err(msg),
        Error::Json(_) | Error::Csv(_) => SepgraphError::new_err(msg),
    }
}

fn to_object<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| SepgraphError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn encoding(name: &str) -> PyResult<IndexEncoding> {
    match name {
        "membership" => Ok(IndexEncoding::Membership),
        "prefix" | "prefix-code" => Ok(IndexEncoding::PrefixCode),
        other => Err(PreconditionError::new_err(format!(
            "unknown encoding {other:?}; expected \"membership\" or \"prefix\""
        ))),
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[pyclass(module = "sepgraph", frozen)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        CoreGraph::from_edges(n, edges)
            .map(|inner| Graph { inner })
            .map_err(to_py)
    }

    /// Parse the `n m` header plus edge-line text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        CoreGraph::parse(text)
            .map(|inner| Graph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn read(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| PyIOError::new_err(e.to_string()))?;
        Self::parse(&text)
    }

    /// One of the bundled cages, e.g. `"petersen"` or `"balaban-11"`.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        families::builtin_graph(name)
            .map(|inner| Graph { inner })
            .map_err(to_py)
    }

    #[staticmethod]
    fn builtin_names() -> Vec<String> {
        families::builtin_names()
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[staticmethod]
    fn grid(dims: Vec<usize>) -> Self {
        Graph {
            inner: generators::grid(&dims),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Graph {
            inner: generators::cycle(n),
        }
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph {
            inner: generators::complete(n),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (n, d, seed = 0))]
    fn random_regular(n: usize, d: usize, seed: u64) -> PyResult<Self> {
        families::random_regular(n, d, seed)
            .map(|inner| Graph { inner })
            .map_err(to_py)
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
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PreconditionError::new_err(format!(
                "vertex {v} out of range"
            )));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn is_connected(&self) -> bool {
        core_graph::is_connected(&self.inner)
    }

    /// Shortest cycle length, or `None` for a forest.
    fn girth(&self) -> Option<usize> {
        match core_graph::girth(&self.inner) {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        SubgraphRef::of_graph(vertices)
            .induced(&self.inner)
            .map(|inner| Graph { inner })
            .map_err(to_py)
    }

    /// Exact minimum balanced vertex cut: dict with value, witness, method.
    #[pyo3(signature = (budget = 20))]
    fn cut<'py>(&self, py: Python<'py>, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        let r = py
            .detach(|| expansion::cut_exact(&self.inner, budget))
            .map_err(to_py)?;
        to_object(py, &r)
    }

    /// Certified lower and heuristic upper bounds on the cut.
    #[pyo3(signature = (budget = 20, seed = 0))]
    fn cut_bounds<'py>(
        &self,
        py: Python<'py>,
        budget: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let b = Budget {
            exhaustive_n: budget,
            seed,
            ..Budget::default()
        };
        let r = py.detach(|| expansion::cut_bounds(&self.inner, &b));
        to_object(py, &r)
    }

    /// Exact vertex Cheeger constant; the value is a `"p/q"` string.
    #[pyo3(signature = (budget = 20))]
    fn cheeger<'py>(&self, py: Python<'py>, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        let r = py
            .detach(|| expansion::cheeger_exact(&self.inner, budget))
            .map_err(to_py)?;
        to_object(py, &r)
    }

    fn cheeger_spectral<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = py
            .detach(|| expansion::cheeger_spectral_lower(&self.inner))
            .map_err(to_py)?;
        to_object(py, &r)
    }

    #[pyo3(signature = (budget = 20))]
    fn extract_expander<'py>(&self, py: Python<'py>, budget: usize) -> PyResult<Bound<'py, PyAny>> {
        let r = py
            .detach(|| expansion::extract_expander(&self.inner, budget))
            .map_err(to_py)?;
        to_object(py, &r)
    }

    /// Separation profile points at the requested sizes. Small hosts are
    /// solved exactly; larger ones get certified lower estimates.
    #[pyo3(signature = (sizes, seed = 0, budget = 20))]
    fn sep_profile<'py>(
        &self,
        py: Python<'py>,
        sizes: Vec<usize>,
        seed: u64,
        budget: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let g = &self.inner;
        let profile = py
            .detach(|| -> sepgraph_core::Result<SeparationProfile> {
                let mut profile = SeparationProfile::new("python").with_seed(seed);
                if g.vertex_count() <= MAX_EXACT_HOST {
                    let max_n = sizes.iter().copied().max().unwrap_or(0);
                    let all = separation::sep_exact_profile(g, max_n)?;
                    for &n in &sizes {
                        profile.insert(all[n].clone());
                    }
                } else {
                    let b = Budget {
                        exhaustive_n: budget,
                        seed,
                        ..Budget::default()
                    };
                    for &n in &sizes {
                        profile.insert(separation::sep_lower_estimate(SepHost::Graph(g), n, &b));
                    }
                }
                Ok(profile)
            })
            .map_err(to_py)?;
        to_object(py, &profile)
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Run the two-family comparison on the bundled cage sequence.
#[pyfunction]
#[pyo3(signature = (m_bits, n_bits, c, depth, encoding = "membership"))]
fn distinguish<'py>(
    py: Python<'py>,
    m_bits: &str,
    n_bits: &str,
    c: usize,
    depth: usize,
    encoding: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let enc = self::encoding(encoding)?;
    let report = py
        .detach(|| -> sepgraph_core::Result<_> {
            let base = families::sparsify_for_girth(families::builtin_cages()?)?;
            let m = families::index_set(m_bits, depth, enc)?;
            let n = families::index_set(n_bits, depth, enc)?;
            families::distinguish(&base, &m, &n, c)
        })
        .map_err(to_py)?;
    to_object(py, &report)
}

/// Names of the girth-sparsified cage chain.
#[pyfunction]
fn cage_chain() -> PyResult<Vec<String>> {
    let chain = families::builtin_cages()
        .and_then(families::sparsify_for_girth)
        .map_err(to_py)?;
    Ok(chain.records().iter().map(|r| r.name.clone()).collect())
}

/// Shell cut of a `side^dim` grid patch under the product cover at scale `r`.
/// Returns `(cut, trace)`.
#[pyfunction]
fn asdim_cut<'py>(
    py: Python<'py>,
    dim: usize,
    side: usize,
    r: usize,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (cut, trace) = py
        .detach(|| -> sepgraph_core::Result<_> {
            let patch = GridPatch::cube(dim, side)?;
            let cover = asdim::grid_cover(&patch, r)?;
            let all = SubgraphRef::of_graph((0..patch.vertex_count()).collect());
            asdim::asdim_cut(&all, &cover)
        })
        .map_err(to_py)?;
    Ok((to_object(py, &cut)?, to_object(py, &trace)?))
}

/// Cover-based upper bound on sep at `n` for the `d`-dimensional lattice.
#[pyfunction]
fn sep_upper_grid(dim: usize, m: usize, n: usize) -> PyResult<usize> {
    asdim::sep_upper_asdim(&asdim::GrowthModel::grid(dim), m, n).map_err(to_py)
}

#[pyfunction]
fn k_of_m(m: usize) -> PyResult<usize> {
    asdim::k_of_m(m).map_err(to_py)
}

#[pymodule]
fn sepgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(distinguish, m)?)?;
    m.add_function(wrap_pyfunction!(cage_chain, m)?)?;
    m.add_function(wrap_pyfunction!(asdim_cut, m)?)?;
    m.add_function(wrap_pyfunction!(sep_upper_grid, m)?)?;
    m.add_function(wrap_pyfunction!(k_of_m, m)?)?;
    m.add("SepgraphError", py.get_type::<SepgraphError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("BudgetExceededError", py.get_type::<BudgetExceededError>())?;
    m.add("DegenerateError", py.get_type::<DegenerateError>())?;
    Ok(())
}
