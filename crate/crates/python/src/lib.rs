//! Python bindings: `import ascseq`.

use std::collections::BTreeMap;

use ascseq::enumerate::{AscentSequences, AvoidingPermutations, Caps, JointDistribution};
use ascseq::{PermPattern, WordPattern};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: ascseq::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "AscentSequence",
    module = "ascseq",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyAscentSequence(ascseq::AscentSequence);

#[pymethods]
impl PyAscentSequence {
    #[new]
    fn new(values: Vec<u32>) -> PyResult<Self> {
        ascseq::AscentSequence::new(values)
            .map(Self)
            .map_err(value_error)
    }

    /// Parses "0 1 0 1 2 2" or "010122".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn values(&self) -> Vec<u32> {
        self.0.to_vec()
    }

    fn asc(&self) -> usize {
        ascseq::asc(&self.0)
    }

    fn rlm(&self) -> usize {
        ascseq::rlm(&self.0)
    }

    /// `(M, run, repeated)` with `run` a 1-based `(start, end)` or None.
    fn special_max(&self) -> (u32, Option<(usize, usize)>, bool) {
        let info = ascseq::special_max(&self.0);
        (info.value, info.run, info.repeated())
    }

    fn avoids(&self, pattern: &str) -> PyResult<bool> {
        let p: WordPattern = pattern.parse().map_err(value_error)?;
        Ok(ascseq::avoids_word(&self.0, &p))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AscentSequence({:?})", self.0.as_slice())
    }
}

#[pyclass(
    name = "Permutation",
    module = "ascseq",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyPermutation(ascseq::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(values: Vec<u32>) -> PyResult<Self> {
        ascseq::Permutation::new(values)
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn values(&self) -> Vec<u32> {
        self.0.to_vec()
    }

    fn asc(&self) -> usize {
        ascseq::asc(&self.0)
    }

    fn rlm(&self) -> usize {
        ascseq::rlm(&self.0)
    }

    fn avoids(&self, pattern: &str) -> PyResult<bool> {
        let p: PermPattern = pattern.parse().map_err(value_error)?;
        Ok(ascseq::avoids_perm(&self.0, &p))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.as_slice())
    }
}

#[pyfunction]
fn asc(values: Vec<u32>) -> usize {
    ascseq::asc(&values)
}

#[pyfunction]
fn rlm(values: Vec<u32>) -> usize {
    ascseq::rlm(&values)
}

#[pyfunction]
fn standardize(word: Vec<u32>) -> PyResult<PyPermutation> {
    ascseq::standardize(&word)
        .map(PyPermutation)
        .map_err(value_error)
}

/// 1-based index tuples of every occurrence of a word pattern.
#[pyfunction]
fn occurrences(values: Vec<u32>, pattern: &str) -> PyResult<Vec<Vec<usize>>> {
    let p: WordPattern = pattern.parse().map_err(value_error)?;
    Ok(ascseq::occurrences_word(&values, &p)
        .into_iter()
        .map(|o| o.indices)
        .collect())
}

#[pyfunction]
fn phi(x: &PyAscentSequence) -> PyResult<PyPermutation> {
    ascseq::phi(&x.0).map(PyPermutation).map_err(value_error)
}

#[pyfunction]
fn phi_inv(pi: &PyPermutation) -> PyResult<PyAscentSequence> {
    ascseq::phi_inv(&pi.0)
        .map(PyAscentSequence)
        .map_err(value_error)
}

/// `(case, y, z)` with case "repeated" or "unique".
#[pyfunction]
fn f_decompose(
    x: &PyAscentSequence,
) -> PyResult<(&'static str, PyAscentSequence, PyAscentSequence)> {
    let d = ascseq::f_decompose(&x.0).map_err(value_error)?;
    let case = match d.case() {
        ascseq::AscCase::Repeated => "repeated",
        ascseq::AscCase::Unique => "unique",
    };
    let (y, z) = d.into_parts();
    Ok((case, PyAscentSequence(y), PyAscentSequence(z)))
}

#[pyfunction]
fn f_compose(y: &PyAscentSequence, z: &PyAscentSequence) -> PyResult<PyAscentSequence> {
    let d = ascseq::AscDecomp::new(y.0.clone(), z.0.clone()).map_err(value_error)?;
    Ok(PyAscentSequence(ascseq::f_compose(&d)))
}

#[pyfunction]
fn g_decompose(pi: &PyPermutation) -> PyResult<(PyPermutation, PyPermutation)> {
    let (rho, sigma) = ascseq::g_decompose(&pi.0)
        .map_err(value_error)?
        .into_parts();
    Ok((PyPermutation(rho), PyPermutation(sigma)))
}

#[pyfunction]
fn g_compose(rho: &PyPermutation, sigma: &PyPermutation) -> PyResult<PyPermutation> {
    let d = ascseq::PermDecomp::new(rho.0.clone(), sigma.0.clone()).map_err(value_error)?;
    Ok(PyPermutation(ascseq::g_compose(&d)))
}

fn caps(override_caps: bool) -> Caps {
    if override_caps {
        Caps::unlimited()
    } else {
        Caps::default()
    }
}

fn word_patterns(avoid: &[String]) -> PyResult<Vec<WordPattern>> {
    avoid
        .iter()
        .map(|p| p.parse().map_err(value_error))
        .collect()
}

fn perm_patterns(avoid: &[String]) -> PyResult<Vec<PermPattern>> {
    avoid
        .iter()
        .map(|p| p.parse().map_err(value_error))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (n, avoid = Vec::new(), max_n_override = false))]
fn ascent_sequences(
    n: usize,
    avoid: Vec<String>,
    max_n_override: bool,
) -> PyResult<Vec<PyAscentSequence>> {
    let it = AscentSequences::new(n, &word_patterns(&avoid)?, caps(max_n_override).ascent)
        .map_err(value_error)?;
    Ok(it.map(PyAscentSequence).collect())
}

#[pyfunction]
#[pyo3(signature = (n, avoid = Vec::new(), max_n_override = false))]
fn permutations(
    n: usize,
    avoid: Vec<String>,
    max_n_override: bool,
) -> PyResult<Vec<PyPermutation>> {
    let it = AvoidingPermutations::new(n, &perm_patterns(&avoid)?, caps(max_n_override).perm)
        .map_err(value_error)?;
    Ok(it.map(PyPermutation).collect())
}

#[pyfunction]
#[pyo3(signature = (n, avoid = Vec::new(), max_n_override = false))]
fn count_ascent(
    py: Python<'_>,
    n: usize,
    avoid: Vec<String>,
    max_n_override: bool,
) -> PyResult<u128> {
    let it = AscentSequences::new(n, &word_patterns(&avoid)?, caps(max_n_override).ascent)
        .map_err(value_error)?;
    Ok(py.detach(|| it.par_count(None)))
}

#[pyfunction]
#[pyo3(signature = (n, avoid = Vec::new(), max_n_override = false))]
fn count_perm(
    py: Python<'_>,
    n: usize,
    avoid: Vec<String>,
    max_n_override: bool,
) -> PyResult<u128> {
    let it = AvoidingPermutations::new(n, &perm_patterns(&avoid)?, caps(max_n_override).perm)
        .map_err(value_error)?;
    Ok(py.detach(|| it.par_count(None)))
}

#[pyfunction]
fn catalan(n: usize) -> PyResult<u128> {
    ascseq::catalan(n).map_err(value_error)
}

type Table = BTreeMap<(usize, usize), u128>;

fn as_table(d: &JointDistribution) -> Table {
    d.triples()
        .into_iter()
        .map(|(a, r, c)| ((a, r), c))
        .collect()
}

/// Joint `(asc, rlm)` tables of A_n(021) and S_n(132).
#[pyfunction]
fn joint_distributions(py: Python<'_>, n: usize) -> PyResult<(Table, Table)> {
    let a = AscentSequences::new(n, &[ascseq::pattern_021()], Caps::default().ascent)
        .map_err(value_error)?;
    let p = AvoidingPermutations::new(n, &[ascseq::pattern_132()], Caps::default().perm)
        .map_err(value_error)?;
    let (a, p) = py.detach(|| (a.par_distribution(None), p.par_distribution(None)));
    Ok((as_table(&a), as_table(&p)))
}

/// Runs the equidistribution and bijection check at length `n`.
/// Returns `(passed, counterexample or None)`.
#[pyfunction]
fn verify(py: Python<'_>, n: usize) -> PyResult<(bool, Option<String>)> {
    let report = py
        .detach(|| ascseq::verify_equidistribution(n))
        .map_err(value_error)?;
    Ok((
        report.verdict == ascseq::Verdict::Pass,
        report.counterexample.map(|c| c.to_string()),
    ))
}

#[pymodule(name = "ascseq")]
fn ascseq_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAscentSequence>()?;
    m.add_class::<PyPermutation>()?;
    m.add_function(wrap_pyfunction!(asc, m)?)?;
    m.add_function(wrap_pyfunction!(rlm, m)?)?;
    m.add_function(wrap_pyfunction!(standardize, m)?)?;
    m.add_function(wrap_pyfunction!(occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(f_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(f_compose, m)?)?;
    m.add_function(wrap_pyfunction!(g_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(g_compose, m)?)?;
    m.add_function(wrap_pyfunction!(ascent_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(permutations, m)?)?;
    m.add_function(wrap_pyfunction!(count_ascent, m)?)?;
    m.add_function(wrap_pyfunction!(count_perm, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(joint_distributions, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
