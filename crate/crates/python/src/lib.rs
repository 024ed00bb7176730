//! Python bindings. Vertices cross the boundary as `(x, y)` tuples and
//! family names as strings (`"T"`, `"ATdir"`, `"DTdir"`).

use arrowhead_core::cayley::{
    Directedness, Family, GraphSpec, TorusVertex, Variant, DEFAULT_MAX_LEVEL,
};
use arrowhead_core::{cayley, export, formulas, metrics, omega, verify, Error};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

pyo3::create_exception!(
    arrowhead,
    LevelCeilingError,
    PyValueError,
    "The requested level exceeds the vertex ceiling."
);

type Pair = (u32, u32);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::LevelCeiling { .. } => LevelCeilingError::new_err(e.to_string()),
        Error::InvalidArgument(_) => PyValueError::new_err(e.to_string()),
        Error::Oracle(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn vertex((x, y): Pair) -> TorusVertex {
    TorusVertex::new(x, y)
}

fn pair(v: TorusVertex) -> Pair {
    (v.x, v.y)
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(to_py)
}

/// Cayley graph on `Z_{2^n} x Z_{2^n}`.
#[pyclass(name = "Graph", module = "arrowhead", frozen)]
struct PyGraph {
    inner: GraphSpec,
}

impl PyGraph {
    fn checked(&self, v: Pair) -> PyResult<TorusVertex> {
        let v = vertex(v);
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(v)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, variant = "arrowhead", directed = false, max_level = DEFAULT_MAX_LEVEL))]
    fn new(n: u32, variant: &str, directed: bool, max_level: u32) -> PyResult<Self> {
        let d = if directed {
            Directedness::Directed
        } else {
            Directedness::Undirected
        };
        let inner =
            GraphSpec::with_ceiling(n, parse::<Variant>(variant)?, d, max_level).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// Graph for a family name: `T`, `ATdir` or `DTdir`.
    #[staticmethod]
    #[pyo3(signature = (family, n, max_level = DEFAULT_MAX_LEVEL))]
    fn family(family: &str, n: u32, max_level: u32) -> PyResult<Self> {
        let inner = GraphSpec::family(n, parse::<Family>(family)?, max_level).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.level()
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.inner.variant().as_str()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    #[getter]
    fn family_name(&self) -> &'static str {
        self.inner.as_family().as_str()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Generator offsets in canonical order.
    fn generators(&self) -> Vec<(i32, i32)> {
        self.inner.generators().as_slice().to_vec()
    }

    fn neighbors(&self, v: Pair) -> PyResult<Vec<Pair>> {
        Ok(self
            .inner
            .neighbors(self.checked(v)?)
            .into_iter()
            .map(pair)
            .collect())
    }

    fn is_adjacent(&self, u: Pair, v: Pair) -> PyResult<bool> {
        Ok(self.inner.is_adjacent(self.checked(u)?, self.checked(v)?))
    }

    /// Edge multiset as `((x1, y1), (x2, y2))` pairs; `simple` drops loops
    /// and repeats.
    #[pyo3(signature = (simple = false))]
    fn edges(&self, simple: bool) -> Vec<(Pair, Pair)> {
        let edges = if simple {
            self.inner.simple_edges()
        } else {
            self.inner.edges()
        };
        edges
            .into_iter()
            .map(|e| (pair(e.from), pair(e.to)))
            .collect()
    }

    /// BFS distances from `origin`, indexed by `x * 2^n + y`.
    #[pyo3(signature = (origin = (0, 0)))]
    fn distances(&self, py: Python<'_>, origin: Pair) -> PyResult<Vec<u32>> {
        let origin = self.checked(origin)?;
        let g = &self.inner;
        let field = py.detach(|| metrics::bfs_from(g, origin)).map_err(to_py)?;
        Ok(field.as_slice().to_vec())
    }

    fn distance(&self, py: Python<'_>, from: Pair, to: Pair) -> PyResult<u32> {
        let (from, to) = (self.checked(from)?, self.checked(to)?);
        let g = &self.inner;
        let field = py.detach(|| metrics::bfs_from(g, from)).map_err(to_py)?;
        Ok(field.get(to))
    }

    fn diameter(&self, py: Python<'_>) -> PyResult<u32> {
        let g = &self.inner;
        py.detach(|| metrics::diameter_oracle(g)).map_err(to_py)
    }

    /// Vertices at maximum distance from the origin, sorted.
    fn antipodals(&self, py: Python<'_>) -> PyResult<Vec<Pair>> {
        let g = &self.inner;
        let set = py.detach(|| metrics::antipodals_oracle(g)).map_err(to_py)?;
        Ok(set.into_iter().map(pair).collect())
    }

    /// Number of vertices at each distance from the origin.
    fn histogram(&self, py: Python<'_>) -> PyResult<Vec<u64>> {
        let g = &self.inner;
        let field = py
            .detach(|| metrics::bfs_from(g, TorusVertex::ORIGIN))
            .map_err(to_py)?;
        Ok(field.histogram().counts)
    }

    fn shortest_path(&self, py: Python<'_>, from: Pair, to: Pair) -> PyResult<Vec<Pair>> {
        let (from, to) = (self.checked(from)?, self.checked(to)?);
        let g = &self.inner;
        let path = py
            .detach(|| metrics::shortest_path(g, from, to))
            .map_err(to_py)?;
        Ok(path.into_iter().map(pair).collect())
    }

    /// Closed-form and oracle statistics as a JSON string.
    #[pyo3(signature = (max_level = DEFAULT_MAX_LEVEL))]
    fn stats_json(&self, py: Python<'_>, max_level: u32) -> PyResult<String> {
        let g = &self.inner;
        let mut buf = Vec::new();
        py.detach(|| export::write_json_stats(g, max_level, &mut buf))
            .map_err(to_py)?
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        String::from_utf8(buf).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, order={})", self.inner.name(), self.inner.order())
    }
}

/// Closed-form diameter of a family at level `n`.
#[pyfunction]
fn diameter_formula(family: &str, n: u32) -> PyResult<u64> {
    Ok(formulas::diameter(parse(family)?, n).map_err(to_py)?.value)
}

/// Closed-form number of antipodal vertices.
#[pyfunction]
fn antipodal_count(family: &str, n: u32) -> PyResult<u128> {
    formulas::antipodal_count(parse(family)?, n).map_err(to_py)
}

/// `(anchor, inverse)`: the vertices `(D_{n-1}, D_n)` and `(D_n, D_{n-1})`.
#[pyfunction]
fn antipodal_anchor(n: u32) -> PyResult<(Pair, Pair)> {
    let s = formulas::antipodal_anchor(n).map_err(to_py)?;
    Ok((pair(s.anchor), pair(s.anchor_inverse)))
}

/// Closed-form distance from the origin to `v` in the directed diamond graph.
#[pyfunction]
fn directed_diamond_distance(n: u32, v: Pair) -> PyResult<u32> {
    formulas::directed_diamond_distance(n, vertex(v)).map_err(to_py)
}

/// Named antipodal triples `(name, [A, B, C])` of the undirected graph.
#[pyfunction]
#[pyo3(signature = (n, max_level = DEFAULT_MAX_LEVEL))]
fn omega_subsets(n: u32, max_level: u32) -> PyResult<Vec<(String, [Pair; 3])>> {
    let triples = omega::omega_subsets_with_ceiling(n, max_level).map_err(to_py)?;
    Ok(triples
        .iter()
        .map(|t| (t.name(), t.members.map(pair)))
        .collect())
}

/// Vertices of the subgroup `2^k (Z_{2^n} x Z_{2^n})`, sorted.
#[pyfunction]
fn subgroup_vertices(n: u32, k: u32) -> PyResult<Vec<Pair>> {
    Ok(cayley::subgroup_vertices(n, k)
        .map_err(to_py)?
        .into_iter()
        .map(pair)
        .collect())
}

/// Image of a level `n - k` vertex under multiplication by `2^k`.
#[pyfunction]
fn embed_scaled(n: u32, k: u32, v: Pair) -> PyResult<Pair> {
    cayley::embed_scaled(n, k, vertex(v))
        .map(pair)
        .map_err(to_py)
}

/// Runs the verification sweep and returns `(success, report_text)`.
#[pyfunction]
#[pyo3(signature = (n_min, n_max, families = None, claims = None, seed = verify::DEFAULT_SEED, max_level = DEFAULT_MAX_LEVEL))]
fn run_verification(
    py: Python<'_>,
    n_min: u32,
    n_max: u32,
    families: Option<Vec<String>>,
    claims: Option<Vec<String>>,
    seed: u64,
    max_level: u32,
) -> PyResult<(bool, String)> {
    let mut cfg = verify::SweepConfig::new(n_min, n_max)
        .seed(seed)
        .ceiling(max_level);
    if let Some(fs) = families {
        cfg.families = fs.iter().map(|f| parse(f)).collect::<PyResult<_>>()?;
    }
    if let Some(cs) = claims {
        cfg.claims = cs.iter().map(|c| parse(c)).collect::<PyResult<_>>()?;
    }
    let report = py.detach(|| verify::run_sweep(&cfg)).map_err(to_py)?;
    Ok((report.is_success(), report.to_text(false)))
}

/// Arrowhead and diamond Cayley graphs on the triangular torus.
#[pymodule]
pub fn arrowhead(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LevelCeilingError", m.py().get_type::<LevelCeilingError>())?;
    m.add("DEFAULT_MAX_LEVEL", DEFAULT_MAX_LEVEL)?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(diameter_formula, m)?)?;
    m.add_function(wrap_pyfunction!(antipodal_count, m)?)?;
    m.add_function(wrap_pyfunction!(antipodal_anchor, m)?)?;
    m.add_function(wrap_pyfunction!(directed_diamond_distance, m)?)?;
    m.add_function(wrap_pyfunction!(omega_subsets, m)?)?;
    m.add_function(wrap_pyfunction!(subgroup_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(embed_scaled, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
