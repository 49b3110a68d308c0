//! Python bindings. Structured results come back as plain dicts and lists.

use depthlab::certificates::{check_by_name, sweep, transcription_report};
use depthlab::chars::{dixon_table, CharacterTable as CoreTable};
use depthlab::depth::{DepthReport, Inclusion as CoreInclusion, DEFAULT_MAX_LEVEL};
use depthlab::ngp_table::{build_table, depth_certificate, orthogonality_report, verify_decompositions, ReeParams};
use depthlab::perm::io::GroupFile;
use depthlab::perm::{PermGroup, Permutation, Subgroup as CoreSubgroup, DEFAULT_CAP};
use depthlab::ree3_model::{build_r3, r3_depth_survey, verify_structure};
use depthlab::ree_sylow::{verify_centralizers, verify_p_structure, PModel, ProductLaw, Triple};
use depthlab::Error;
use depthlab_cli::suite::{run_suite, SuiteOptions};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: Error) -> PyErr {
    match e {
        Error::Input(_) | Error::Json(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Converts through JSON so every report keeps the field names of the CLI output.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn perms(generators: Vec<Vec<u32>>) -> PyResult<Vec<Permutation>> {
    generators
        .into_iter()
        .map(|g| Permutation::from_images(g).map_err(err))
        .collect()
}

/// A permutation group on `0..degree`.
#[pyclass(frozen)]
struct Group(PermGroup);

#[pymethods]
impl Group {
    #[new]
    fn new(degree: usize, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(Group(PermGroup::new(degree, perms(generators)?).map_err(err)?))
    }

    /// Parses the group-file JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Group(GroupFile::parse(text).and_then(|f| f.to_group()).map_err(err)?))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn order(&self) -> PyResult<u128> {
        u128::try_from(&self.0.order()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn generators(&self) -> Vec<Vec<u32>> {
        self.0.generators().iter().map(|p| p.images().to_vec()).collect()
    }

    fn contains(&self, images: Vec<u32>) -> PyResult<bool> {
        Ok(self.0.contains(&Permutation::from_images(images).map_err(err)?))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&GroupFile::from_group(&self.0)).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[pyo3(signature = (cap=None))]
    fn character_table(&self, cap: Option<usize>) -> PyResult<CharacterTable> {
        Ok(CharacterTable(dixon_table(&self.0, cap.unwrap_or(DEFAULT_CAP)).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Group(degree={}, order={})", self.0.degree(), self.0.order())
    }
}

/// A subgroup of a materialized parent.
#[pyclass(frozen)]
struct Subgroup(CoreSubgroup);

#[pymethods]
impl Subgroup {
    #[new]
    #[pyo3(signature = (parent, generators, cap=None))]
    fn new(parent: &Group, generators: Vec<Vec<u32>>, cap: Option<usize>) -> PyResult<Self> {
        let s = CoreSubgroup::generated(&parent.0, perms(generators)?, cap.unwrap_or(DEFAULT_CAP)).map_err(err)?;
        Ok(Subgroup(s))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Subgroup(order={})", self.0.order())
    }
}

/// `H ≤ G` with both groups materialized.
#[pyclass(frozen)]
struct Inclusion(CoreInclusion);

#[pymethods]
impl Inclusion {
    #[new]
    #[pyo3(signature = (group, subgroup, cap=None))]
    fn new(group: &Group, subgroup: &Subgroup, cap: Option<usize>) -> PyResult<Self> {
        Ok(Inclusion(
            CoreInclusion::new(&group.0, &subgroup.0, cap.unwrap_or(DEFAULT_CAP)).map_err(err)?,
        ))
    }

    fn is_normal(&self) -> bool {
        self.0.is_normal()
    }

    /// Combinatorial depth, `None` if the level limit was reached.
    fn combinatorial_depth(&self) -> PyResult<Option<u32>> {
        Ok(self.0.comb_depth(DEFAULT_MAX_LEVEL).map_err(err)?.dc.value())
    }

    fn ordinary_depth(&self) -> PyResult<u32> {
        self.0.ord_depth().and_then(|r| r.exact()).map_err(err)
    }

    fn core_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.core_bound().map_err(err)?)
    }

    /// Both depths, distances, and the core bound, cross-checked.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &DepthReport::compute(&self.0, DEFAULT_MAX_LEVEL).map_err(err)?)
    }
}

/// An exact character table.
#[pyclass(frozen)]
struct CharacterTable(CoreTable);

#[pymethods]
impl CharacterTable {
    /// Parses and validates the character-table JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let t = CoreTable::from_json_str(text).map_err(err)?;
        t.validate().map_err(err)?;
        Ok(CharacterTable(t))
    }

    fn to_json(&self) -> String {
        self.0.to_json_string()
    }

    fn validate(&self) -> PyResult<()> {
        self.0.validate().map_err(err)
    }

    #[getter]
    fn num_classes(&self) -> usize {
        self.0.num_classes()
    }

    #[getter]
    fn degrees(&self) -> Vec<i128> {
        self.0.degrees()
    }
}

/// The Sylow 3-subgroup of `R(q)`, `q = 3^(2n+1)`, as triples.
#[pyclass(frozen)]
struct SylowModel(PModel);

type PyTriple = (u64, u64, u64);

#[pymethods]
impl SylowModel {
    #[new]
    #[pyo3(signature = (n, law="nominal"))]
    fn new(n: u32, law: &str) -> PyResult<Self> {
        let law: ProductLaw = law.parse().map_err(err)?;
        Ok(SylowModel(PModel::with_law(n, law).map_err(err)?))
    }

    #[getter]
    fn q(&self) -> u64 {
        self.0.q()
    }

    fn mul(&self, a: PyTriple, b: PyTriple) -> PyResult<PyTriple> {
        let (a, b) = (self.triple(a)?, self.triple(b)?);
        Ok(untriple(self.0.mul(&a, &b)))
    }

    fn inv(&self, a: PyTriple) -> PyResult<PyTriple> {
        Ok(untriple(self.0.inv(&self.triple(a)?)))
    }

    fn element_order(&self, a: PyTriple) -> PyResult<u64> {
        Ok(self.0.element_order(&self.triple(a)?))
    }

    /// Group laws and closed forms, then the centralizer check.
    #[pyo3(signature = (exhaustive=false, samples=100_000, seed=0))]
    fn verify<'py>(&self, py: Python<'py>, exhaustive: bool, samples: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let s = verify_p_structure(&self.0, exhaustive, samples, seed);
        let c = verify_centralizers(&self.0, exhaustive, 100, 10_000, seed);
        to_py(py, &serde_json::json!({"structure": s, "centralizer": c, "passed": s.passed() && c.passed()}))
    }
}

impl SylowModel {
    fn triple(&self, t: PyTriple) -> PyResult<Triple> {
        self.0.triple(t.0, t.1, t.2).map_err(err)
    }
}

fn untriple(t: Triple) -> PyTriple {
    (t.x.0, t.y.0, t.z.0)
}

#[pyfunction]
fn ngp_orthogonality<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let p = ReeParams::new(n).map_err(err)?;
    to_py(py, &orthogonality_report(&p).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, all_b=true))]
fn ngp_decompositions<'py>(py: Python<'py>, n: u32, all_b: bool) -> PyResult<Bound<'py, PyAny>> {
    let p = ReeParams::new(n).map_err(err)?;
    let t = build_table(&p).map_err(err)?;
    to_py(py, &verify_decompositions(&p, &t, all_b).map_err(err)?)
}

#[pyfunction]
fn ngp_depth<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let p = ReeParams::new(n).map_err(err)?;
    to_py(py, &depth_certificate(&p).map_err(err)?)
}

#[pyfunction]
fn r3_props<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &verify_structure(&build_r3().map_err(err)?))
}

#[pyfunction]
fn r3_depths<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &r3_depth_survey(&build_r3().map_err(err)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (name, q, q0=None))]
fn certificate<'py>(py: Python<'py>, name: &str, q: u128, q0: Option<u128>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &check_by_name(name, q, q0).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n_max=10))]
fn certificate_sweep<'py>(py: Python<'py>, n_max: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::json!({"sweep": sweep(n_max), "transcription": transcription_report()}))
}

#[pyfunction]
#[pyo3(signature = (seed=0, samples=100_000, full_decompositions=false))]
fn suite<'py>(py: Python<'py>, seed: u64, samples: u64, full_decompositions: bool) -> PyResult<Bound<'py, PyAny>> {
    let o = SuiteOptions {
        samples,
        seed,
        full_decompositions,
    };
    to_py(py, &run_suite(&o))
}

#[pymodule]
fn depthlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Subgroup>()?;
    m.add_class::<Inclusion>()?;
    m.add_class::<CharacterTable>()?;
    m.add_class::<SylowModel>()?;
    m.add_function(wrap_pyfunction!(ngp_orthogonality, m)?)?;
    m.add_function(wrap_pyfunction!(ngp_decompositions, m)?)?;
    m.add_function(wrap_pyfunction!(ngp_depth, m)?)?;
    m.add_function(wrap_pyfunction!(r3_props, m)?)?;
    m.add_function(wrap_pyfunction!(r3_depths, m)?)?;
    m.add_function(wrap_pyfunction!(certificate, m)?)?;
    m.add_function(wrap_pyfunction!(certificate_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}
