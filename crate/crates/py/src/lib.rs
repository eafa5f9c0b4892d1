//! Python access to trees, the advice schemes, and the election simulator.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treeadvice::bounded_advice::betas::solve_betas;
use treeadvice::bounded_advice::election_index::election_index as index_search;
use treeadvice::codec;
use treeadvice::harness::generate::{random_tree, random_tree_with_diameter};
use treeadvice::harness::run::{run_election, Scheme};
use treeadvice::harness::sweep::{advise as advise_tree, SchemeKind};
use treeadvice::tree_core::{diameter_and_center, format_advice, format_tree, parse_tree, AdviceAssignment, PortLabeledTree};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Tree", frozen)]
struct PyTree(PortLabeledTree);

#[pymethods]
impl PyTree {
    /// Uniform random tree, or one of the given diameter.
    #[staticmethod]
    #[pyo3(signature = (n, seed, diameter=None))]
    fn random(n: usize, seed: u64, diameter: Option<usize>) -> PyResult<Self> {
        if n == 0 || diameter.is_some_and(|d| d >= n || (n > 2 && d < 2)) {
            return Err(value_error(format!("no tree on {n} nodes with diameter {diameter:?}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(PyTree(match diameter {
            None => random_tree(n, &mut rng),
            Some(d) => random_tree_with_diameter(n, d, &mut rng),
        }))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_tree(text).map(PyTree).map_err(value_error)
    }

    fn to_text(&self) -> String {
        format_tree(&self.0)
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.0.node_count()
    }

    #[getter]
    fn diameter(&self) -> usize {
        diameter_and_center(&self.0).diameter
    }

    /// The node every correct election must pick.
    #[getter]
    fn root(&self) -> usize {
        diameter_and_center(&self.0).root
    }

    /// `(neighbor, port at neighbor)` for each port of `v`.
    fn neighbors(&self, v: usize) -> PyResult<Vec<(usize, usize)>> {
        if v >= self.0.node_count() {
            return Err(value_error(format!("node {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }
}

#[pyclass(name = "Advice", frozen)]
struct PyAdvice {
    assignment: AdviceAssignment,
    scheme: Scheme,
    tau: usize,
}

#[pymethods]
impl PyAdvice {
    #[getter]
    fn size(&self) -> usize {
        self.assignment.size()
    }

    #[getter]
    fn valency(&self) -> usize {
        self.assignment.valency()
    }

    #[getter]
    fn scheme(&self) -> &'static str {
        self.scheme.name()
    }

    /// Per-node strings as digit text.
    fn strings(&self) -> Vec<String> {
        self.assignment.strings().iter().map(|s| s.to_text()).collect()
    }

    fn to_text(&self) -> String {
        format_advice(&self.assignment)
    }
}

#[pyclass(name = "Outcome", frozen, get_all)]
struct PyOutcome {
    passed: bool,
    elected: Option<usize>,
    /// Port path per node, `None` where the node failed.
    outputs: Vec<Option<Vec<usize>>>,
    size: usize,
    valency: usize,
}

/// Advice for `tree` under `scheme` (`unbounded`, `bounded` or `colored-map`).
#[pyfunction]
#[pyo3(signature = (tree, scheme, tau, lam=2, c=0.5))]
fn advise(tree: &PyTree, scheme: &str, tau: usize, lam: usize, c: f64) -> PyResult<PyAdvice> {
    let kind: SchemeKind = scheme.parse().map_err(value_error)?;
    let (assignment, scheme) = advise_tree(&tree.0, kind, tau, lam, c).map_err(value_error)?;
    Ok(PyAdvice { assignment, scheme, tau })
}

/// Runs every node's election for the advice's τ and checks the outputs.
#[pyfunction]
fn elect(py: Python<'_>, tree: &PyTree, advice: &PyAdvice) -> PyResult<PyOutcome> {
    if advice.assignment.node_count() != tree.0.node_count() {
        return Err(value_error("advice and tree disagree on the node count"));
    }
    let out = py.detach(|| run_election(&tree.0, &advice.assignment, &advice.scheme, advice.tau));
    Ok(PyOutcome {
        passed: out.passed(),
        elected: out.elected,
        outputs: out.outputs.into_iter().map(Result::ok).collect(),
        size: out.size,
        valency: out.valency,
    })
}

#[pyfunction]
fn encode_sequence(values: Vec<usize>, lam: usize) -> PyResult<Vec<u8>> {
    codec::encode_sequence(&values, lam).map_err(value_error)
}

#[pyfunction]
fn decode_sequence(code: Vec<u8>, lam: usize) -> PyResult<Vec<usize>> {
    codec::decode_sequence(&code, lam).map_err(value_error)
}

/// `(β₁, β₂)` for diameter ratio `c` and `lam` advice strings.
#[pyfunction]
fn betas(c: f64, lam: usize) -> PyResult<(f64, f64)> {
    let p = solve_betas(c, lam).map_err(value_error)?;
    Ok((p.beta1, p.beta2))
}

/// Smallest election time under `lam`-valent one-symbol advice, with the
/// coloring and leader found.
#[pyfunction]
#[pyo3(signature = (tree, lam=2))]
fn election_index(py: Python<'_>, tree: &PyTree, lam: usize) -> PyResult<(usize, Vec<u8>, usize)> {
    let cert = py.detach(|| index_search(&tree.0, lam, None)).map_err(value_error)?;
    Ok((cert.tau, cert.colors, cert.leader))
}

#[pymodule]
fn treeadvice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_class::<PyAdvice>()?;
    m.add_class::<PyOutcome>()?;
    m.add_function(wrap_pyfunction!(advise, m)?)?;
    m.add_function(wrap_pyfunction!(elect, m)?)?;
    m.add_function(wrap_pyfunction!(encode_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(decode_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(betas, m)?)?;
    m.add_function(wrap_pyfunction!(election_index, m)?)?;
    Ok(())
}
