//! Python bindings. Rationals cross the boundary as strings (`"p"` or
//! `"p/q"`); inputs may be ints, strings or `fractions.Fraction`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict};

use spherical_core::catalog::{list_families as families, CatalogEntry};
use spherical_core::crosscheck::crosscheck;
use spherical_core::document::{GraphDocument, VerdictDocument, TOOL_VERSION};
use spherical_core::reflections::reflect_step;
use spherical_core::scalar::{format_scalar, parse_scalar};
use spherical_core::sphericity::{signed_box_len, signed_box_nth};
use spherical_core::{
    build_pair, decide_spherical, Base, PairSpec, Scalar, SphericityContext, Weight,
};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(v: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if v.is_instance_of::<PyBool>() {
        return Ok(Scalar::from_integer(i64::from(v.extract::<bool>()?)));
    }
    parse_scalar(&v.str()?.to_string()).map_err(err)
}

fn weight(v: &Bound<'_, PyAny>) -> PyResult<Weight> {
    if let Ok(s) = v.extract::<String>() {
        return Weight::parse_list(&s).map_err(err);
    }
    v.try_iter()?
        .map(|x| scalar(&x?))
        .collect::<PyResult<Vec<_>>>()
        .map(Weight)
}

fn strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_scalar).collect()
}

fn to_python<'py>(py: Python<'py>, json: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (json,))
}

/// A catalog system together with its default base.
#[pyclass(name = "Pair", module = "spherical", frozen)]
struct Pair {
    entry: CatalogEntry,
}

impl Pair {
    fn base(&self, base: Option<&Bound<'_, PyAny>>) -> PyResult<Base> {
        match base {
            None => Ok(self.entry.default_base.clone()),
            Some(b) => {
                let simples = b
                    .try_iter()?
                    .map(|x| weight(&x?))
                    .collect::<PyResult<Vec<_>>>()?;
                self.entry.system.validate_base(&simples).map_err(err)
            }
        }
    }

    fn weight(&self, v: &Bound<'_, PyAny>) -> PyResult<Weight> {
        let w = weight(v)?;
        if w.dim() != self.entry.system.dim() {
            return Err(err(format!(
                "expected {} coordinates, got {}",
                self.entry.system.dim(),
                w.dim()
            )));
        }
        Ok(w)
    }
}

#[pymethods]
impl Pair {
    #[new]
    #[pyo3(signature = (family, **params))]
    fn new(family: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let mut map = BTreeMap::new();
        if let Some(p) = params {
            for (k, v) in p.iter() {
                map.insert(k.extract::<String>()?, scalar(&v)?);
            }
        }
        let spec = PairSpec::from_params(family, &map).map_err(err)?;
        Ok(Pair {
            entry: build_pair(&spec).map_err(err)?,
        })
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.entry.spec.family_id()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.entry.system.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.entry.system.labels().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Pair('{}')", self.entry.spec)
    }

    /// Roots as dicts with `root`, `even`, `odd` and `singular`.
    fn roots<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let sys = &self.entry.system;
        sys.roots()
            .iter()
            .map(|r| {
                let d = PyDict::new(py);
                d.set_item("root", strings(&r.vector))?;
                d.set_item("even", r.mult.even)?;
                d.set_item("odd", r.mult.odd)?;
                d.set_item("singular", sys.is_singular(&r.vector).map_err(err)?)?;
                Ok(d)
            })
            .collect()
    }

    fn default_base(&self) -> Vec<Vec<String>> {
        self.entry
            .default_base
            .simples()
            .iter()
            .map(strings)
            .collect()
    }

    #[pyo3(signature = (base = None))]
    fn principal_roots(&self, base: Option<&Bound<'_, PyAny>>) -> PyResult<Vec<Vec<String>>> {
        Ok(self
            .entry
            .system
            .principal_roots(&self.base(base)?)
            .iter()
            .map(strings)
            .collect())
    }

    /// The verdict document for `weight` as a dict.
    #[pyo3(signature = (weight, base = None))]
    fn check<'py>(
        &self,
        py: Python<'py>,
        weight: &Bound<'py, PyAny>,
        base: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let base = self.base(base)?;
        let l = self.weight(weight)?;
        let v = decide_spherical(&self.entry.system, &base, &l).map_err(err)?;
        to_python(
            py,
            &VerdictDocument::new(&self.entry.spec, &base, &l, v).to_json(),
        )
    }

    /// `True` or `False`, or `None` when the procedure is undetermined.
    #[pyo3(signature = (weight, base = None))]
    fn is_spherical(
        &self,
        weight: &Bound<'_, PyAny>,
        base: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Option<bool>> {
        let base = self.base(base)?;
        let v = decide_spherical(&self.entry.system, &base, &self.weight(weight)?).map_err(err)?;
        Ok(match v.tag() {
            "undetermined" => None,
            _ => Some(v.is_spherical()),
        })
    }

    #[pyo3(signature = (root, weight = None, base = None))]
    fn reflect<'py>(
        &self,
        py: Python<'py>,
        root: &Bound<'py, PyAny>,
        weight: Option<&Bound<'py, PyAny>>,
        base: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let base = self.base(base)?;
        let alpha = self.weight(root)?;
        let l = weight.map(|w| self.weight(w)).transpose()?;
        let step = reflect_step(&self.entry.system, &base, &alpha, l.as_ref()).map_err(err)?;
        to_python(py, &serde_json::to_string(&step).map_err(err)?)
    }

    /// Spherical weights with coordinates in `[-max_coeff, max_coeff]`, sorted.
    #[pyo3(signature = (max_coeff, base = None))]
    fn enumerate(
        &self,
        max_coeff: i64,
        base: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Vec<Vec<String>>> {
        let base = self.base(base)?;
        let ctx = SphericityContext::new(&self.entry.system, &base).map_err(err)?;
        let dim = self.entry.system.dim();
        let mut out = Vec::new();
        for i in 0..signed_box_len(dim, -max_coeff, max_coeff) {
            let l = signed_box_nth(dim, -max_coeff, max_coeff, i);
            if ctx.passes_necessary(&l) && ctx.decide(&l).map_err(err)?.is_spherical() {
                out.push(strings(&l));
            }
        }
        Ok(out)
    }

    #[pyo3(signature = (max_coeff = 8))]
    fn crosscheck<'py>(&self, py: Python<'py>, max_coeff: i64) -> PyResult<Bound<'py, PyAny>> {
        let report = crosscheck(&self.entry.spec, max_coeff).map_err(err)?;
        to_python(py, &serde_json::to_string(&report).map_err(err)?)
    }

    #[pyo3(signature = (singular_only = false))]
    fn basegraph<'py>(&self, py: Python<'py>, singular_only: bool) -> PyResult<Bound<'py, PyAny>> {
        let doc = GraphDocument::build(&self.entry.spec, None, singular_only).map_err(err)?;
        to_python(py, &doc.to_json())
    }

    #[pyo3(signature = (singular_only = false))]
    fn to_dot(&self, singular_only: bool) -> PyResult<String> {
        let doc = GraphDocument::build(&self.entry.spec, None, singular_only).map_err(err)?;
        Ok(doc.graph.to_dot())
    }
}

/// Family descriptors as dicts.
#[pyfunction]
fn list_families(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_python(py, &serde_json::to_string(&families()).map_err(err)?)
}

#[pymodule]
fn spherical(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Pair>()?;
    m.add_function(wrap_pyfunction!(list_families, m)?)?;
    m.add("__version__", TOOL_VERSION)?;
    Ok(())
}
