//! Python bindings: partitions, gap posets, lattice paths, counting formulas
//! and the verification suites.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use multicore::paths::{self, GdStep, LatticeDrawing};
use multicore::poset::DEFAULT_IDEAL_CAP;
use multicore::verify::{self, Suite, SuiteLimits};
use multicore::{HookSet, Integer, Orientation};

fn err(e: multicore::Error) -> PyErr {
    match e {
        multicore::Error::CapExceeded { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An integer partition with parts in weakly decreasing order.
#[pyclass(name = "Partition", module = "multicore", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(multicore::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = Vec::new()))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        multicore::Partition::new(parts).map(PyPartition).map_err(err)
    }

    /// The partition whose first-column hook lengths are `hooks`.
    #[staticmethod]
    fn from_hooks(hooks: Vec<usize>) -> PyResult<Self> {
        let set = HookSet::new(hooks).map_err(err)?;
        Ok(PyPartition(multicore::Partition::from_hooks(&set)))
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn contains(&self, other: &PyPartition) -> bool {
        self.0.contains(&other.0)
    }

    fn hook_length(&self, row: usize, col: usize) -> PyResult<usize> {
        self.0.hook_length(row, col).map_err(err)
    }

    /// `(row, col, hook)` for every cell, rows from the longest.
    fn hooks(&self) -> Vec<(usize, usize, usize)> {
        self.0.hooks()
    }

    fn first_column_hooks(&self) -> Vec<usize> {
        self.0.first_column_hooks().to_vec()
    }

    fn is_core(&self, s: usize) -> bool {
        self.0.is_core(s)
    }

    fn is_multicore(&self, gens: Vec<usize>) -> bool {
        self.0.is_multicore(&gens)
    }

    fn count_subpartitions(&self) -> Integer {
        self.0.count_subpartitions()
    }

    #[pyo3(signature = (cap = multicore::partition::DEFAULT_SUBPARTITION_CAP))]
    fn subpartitions(&self, cap: usize) -> PyResult<Vec<PyPartition>> {
        Ok(self.0.subpartitions(cap).map_err(err)?.into_iter().map(PyPartition).collect())
    }

    #[pyo3(signature = (english = false))]
    fn render_hooks(&self, english: bool) -> String {
        self.0.render_hooks(if english { Orientation::English } else { Orientation::French })
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// The poset of gaps of the numerical semigroup generated by `gens`.
#[pyclass(name = "GapPoset", module = "multicore", frozen)]
struct PyGapPoset(multicore::GapPoset);

#[pymethods]
impl PyGapPoset {
    #[new]
    fn new(gens: Vec<u64>) -> PyResult<Self> {
        multicore::GapPoset::from_generators(&gens).map(PyGapPoset).map_err(err)
    }

    /// `T_{s,p}`, generated by `s, s+1, ..., s+p`.
    #[staticmethod]
    fn consecutive(s: u64, p: u64) -> PyResult<Self> {
        multicore::GapPoset::consecutive(s, p).map(PyGapPoset).map_err(err)
    }

    #[getter]
    fn generators(&self) -> Vec<u64> {
        self.0.generators().as_slice().to_vec()
    }

    #[getter]
    fn gaps(&self) -> Vec<u64> {
        self.0.gaps().to_vec()
    }

    fn frobenius_number(&self) -> Option<u64> {
        self.0.frobenius_number()
    }

    /// Pairs `(a, b)` with `a - b` a generator.
    fn covers(&self) -> Vec<(u64, u64)> {
        self.0.covers()
    }

    fn hasse_covers(&self) -> Vec<(u64, u64)> {
        self.0.hasse_covers()
    }

    /// True if `b <= a` in the poset.
    fn le(&self, b: u64, a: u64) -> bool {
        self.0.le(b, a)
    }

    fn is_lower_ideal(&self, elements: Vec<u64>) -> bool {
        self.0.lower_ideal(elements).is_ok()
    }

    fn count_lower_ideals(&self) -> Integer {
        self.0.count_lower_ideals()
    }

    #[pyo3(signature = (cap = DEFAULT_IDEAL_CAP))]
    fn lower_ideals(&self, cap: usize) -> PyResult<Vec<Vec<u64>>> {
        let all = self.0.lower_ideals(cap).map_err(err)?;
        Ok(all.into_iter().map(|i| i.elements().to_vec()).collect())
    }

    #[pyo3(signature = (cap = DEFAULT_IDEAL_CAP))]
    fn cores(&self, cap: usize) -> PyResult<Vec<PyPartition>> {
        let all = self.0.lower_ideals(cap).map_err(err)?;
        Ok(all.iter().map(|i| PyPartition(self.0.ideal_to_core(i))).collect())
    }

    fn ideal_to_core(&self, elements: Vec<u64>) -> PyResult<PyPartition> {
        let ideal = self.0.lower_ideal(elements).map_err(err)?;
        Ok(PyPartition(self.0.ideal_to_core(&ideal)))
    }

    fn core_to_ideal(&self, core: &PyPartition) -> PyResult<Vec<u64>> {
        Ok(self.0.core_to_ideal(&core.0).map_err(err)?.elements().to_vec())
    }

    fn to_json(&self) -> String {
        let j = self.0.to_json();
        let covers: Vec<String> = j.covers.iter().map(|[a, b]| format!("[{a},{b}]")).collect();
        format!("{{\"generators\":{:?},\"gaps\":{:?},\"covers\":[{}]}}", j.generators, j.gaps, covers.join(","))
    }

    #[pyo3(signature = (reduce = false))]
    fn to_dot(&self, reduce: bool) -> String {
        self.0.to_dot(reduce)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("GapPoset({:?})", self.0.generators().as_slice())
    }
}

#[pyfunction]
fn binomial(n: i64, k: i64) -> PyResult<Integer> {
    multicore::binomial(n, k).map_err(err)
}

#[pyfunction]
fn catalan(n: u64) -> Integer {
    multicore::catalan(n)
}

/// Coefficients of the Gaussian binomial, constant term first.
#[pyfunction]
fn q_binomial(n: u64, k: i64) -> Vec<Integer> {
    multicore::q_binomial(n, k).coeffs().to_vec()
}

#[pyfunction]
fn multi_catalan(s: i64, p: u64) -> PyResult<Integer> {
    multicore::multi_catalan(s, p).map_err(err)
}

#[pyfunction]
fn count_rect_paths(s: u64, t: u64) -> PyResult<Integer> {
    paths::count_rect_paths(s, t).map_err(err)
}

#[pyfunction]
fn count_gd(n: i64, k: u64) -> PyResult<Integer> {
    paths::count_gd(n, k).map_err(err)
}

/// Every `(s,t)`-Dyck path as a string of `N` and `E`.
#[pyfunction]
#[pyo3(signature = (s, t, cap = paths::DEFAULT_PATH_CAP))]
fn rect_paths(s: u64, t: u64, cap: usize) -> PyResult<Vec<String>> {
    let all = paths::enumerate_rect_paths(s, t, cap).map_err(err)?;
    Ok(all
        .iter()
        .map(|p| p.steps().iter().map(|st| if *st == multicore::Step::N { 'N' } else { 'E' }).collect())
        .collect())
}

/// Every generalized Dyck path as a list of step names.
#[pyfunction]
#[pyo3(signature = (n, k, cap = paths::DEFAULT_PATH_CAP))]
fn gd_paths(n: u64, k: u64, cap: usize) -> PyResult<Vec<Vec<String>>> {
    let all = paths::enumerate_gd(n, k, cap).map_err(err)?;
    Ok(all.iter().map(|p| p.steps().iter().map(GdStep::to_string).collect()).collect())
}

fn parse_gd(n: u64, k: u64, steps: &[String]) -> PyResult<multicore::GeneralizedDyckPath> {
    let steps: Vec<GdStep> = steps.iter().map(|s| s.parse()).collect::<multicore::Result<_>>().map_err(err)?;
    multicore::GeneralizedDyckPath::new(n, k, steps).map_err(err)
}

/// The lower ideal of `T_{n,k}` corresponding to a generalized Dyck path.
#[pyfunction]
fn gd_path_to_ideal(n: u64, k: u64, steps: Vec<String>) -> PyResult<Vec<u64>> {
    let path = parse_gd(n, k, &steps)?;
    let poset = multicore::GapPoset::consecutive(n, k).map_err(err)?;
    Ok(path.to_ideal(&poset).map_err(err)?.elements().to_vec())
}

#[pyfunction]
#[pyo3(signature = (n, k, steps, labels = true))]
fn gd_path_svg(n: u64, k: u64, steps: Vec<String>, labels: bool) -> PyResult<String> {
    Ok(parse_gd(n, k, &steps)?.to_svg(labels))
}

#[pyfunction]
fn kreweras_count(shape: Vec<usize>) -> PyResult<Integer> {
    let lambda = multicore::Partition::new(shape).map_err(err)?;
    Ok(verify::kreweras_count(&lambda))
}

/// Coefficients of `sum_{mu <= lambda} q^|mu|` from the q-determinant.
#[pyfunction]
fn qdet_coarea(shape: Vec<usize>) -> PyResult<Vec<Integer>> {
    let lambda = multicore::Partition::new(shape).map_err(err)?;
    Ok(verify::qdet_coarea(&lambda).coeffs().to_vec())
}

#[pyfunction]
fn catalan_identity(n: u64) -> Integer {
    verify::catalan_identity(n)
}

#[pyfunction]
fn popoviciu(s: u64, t: u64, m: u64) -> PyResult<Integer> {
    verify::popoviciu(s, t, m).map_err(err)
}

#[pyfunction]
fn representation_count(s: u64, t: u64, m: u64) -> u64 {
    verify::representation_count(s, t, m)
}

#[pyfunction]
fn frobenius_pair(s: u64, t: u64) -> PyResult<u64> {
    verify::frobenius_pair(s, t).map_err(err)
}

#[pyfunction]
fn motzkin_sum(s: u64) -> Integer {
    verify::motzkin_sum(s)
}

/// The first `n_terms` coefficients of the multi-Catalan generating function.
#[pyfunction]
fn gf_coefficients(p: u64, n_terms: usize) -> PyResult<Vec<Integer>> {
    verify::gf_coefficients(p, n_terms).map_err(err)
}

/// `(total size of all (s,s+1,s+2)-cores, conjectured closed form)`.
#[pyfunction]
fn conjecture_total_size(s: u64) -> PyResult<(Integer, Integer)> {
    verify::conjecture_total_size(s).map_err(err)
}

/// `(passed, summary)` for one verification suite over its default range.
#[pyfunction]
#[pyo3(signature = (suite, jobs = 1))]
fn run_suite(py: Python<'_>, suite: &str, jobs: usize) -> PyResult<(bool, String)> {
    let suite = Suite::ALL
        .into_iter()
        .find(|s| s.id() == suite)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {suite:?}")))?;
    let report = py.detach(|| suite.run(&SuiteLimits::default(), jobs.max(1)));
    Ok((report.passed(), report.summary_line()))
}

#[pyfunction]
fn suite_ids() -> Vec<&'static str> {
    Suite::ALL.iter().map(|s| s.id()).collect()
}

#[pymodule]
#[pyo3(name = "multicore")]
fn multicore_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyGapPoset>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(multi_catalan, m)?)?;
    m.add_function(wrap_pyfunction!(count_rect_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_gd, m)?)?;
    m.add_function(wrap_pyfunction!(rect_paths, m)?)?;
    m.add_function(wrap_pyfunction!(gd_paths, m)?)?;
    m.add_function(wrap_pyfunction!(gd_path_to_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(gd_path_svg, m)?)?;
    m.add_function(wrap_pyfunction!(kreweras_count, m)?)?;
    m.add_function(wrap_pyfunction!(qdet_coarea, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_identity, m)?)?;
    m.add_function(wrap_pyfunction!(popoviciu, m)?)?;
    m.add_function(wrap_pyfunction!(representation_count, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_pair, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin_sum, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_total_size, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suite_ids, m)?)?;
    Ok(())
}
