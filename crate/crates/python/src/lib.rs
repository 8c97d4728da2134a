//! Python bindings: divisors, line arrangements, Gröbner bases and
//! resolutions over exact rationals, with polynomials passed as strings.

use freecurve::divisor::{
    analyze_freeness_with, jacobian_ideal, milnor_tjurina_seeded, near_pencil_detect, singular_locus, AnalysisOptions,
    DivisorError, LineArrangement, PlaneDivisor, SearchConfig,
};
use freecurve::groebner::{GroebnerBasis, MonomialOrder};
use freecurve::io::parse_polynomial;
use freecurve::poly::{Ctx, Polynomial, VariableContext};
use freecurve::syzygy::{first_syzygies, free_resolution};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn context(vars: Option<Vec<String>>, default_xyz: bool) -> PyResult<Ctx> {
    match vars {
        Some(v) => VariableContext::new(&v).map_err(|e| PyValueError::new_err(e.to_string())),
        None if default_xyz => Ok(VariableContext::xyz()),
        None => Err(PyValueError::new_err("variable names required")),
    }
}

fn parse(ctx: &Ctx, text: &str) -> PyResult<Polynomial> {
    parse_polynomial(text, ctx).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn divisor_err(e: DivisorError) -> PyErr {
    match e {
        DivisorError::NotHomogeneous | DivisorError::NotLinear { .. } | DivisorError::DuplicateLine { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn json_to_py(py: Python<'_>, v: serde_json::Result<String>) -> PyResult<PyObject> {
    let text = v.map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Reduced projective plane curve (or hypersurface) `V(F)`.
#[pyclass(frozen, module = "pyfreecurve")]
struct Divisor {
    inner: PlaneDivisor,
}

#[pymethods]
impl Divisor {
    #[new]
    #[pyo3(signature = (expr, vars=None))]
    fn new(expr: &str, vars: Option<Vec<String>>) -> PyResult<Self> {
        let ctx = context(vars, true)?;
        let inner = PlaneDivisor::new(parse(&ctx, expr)?).map_err(divisor_err)?;
        Ok(Divisor { inner })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    fn jacobian_ideal(&self) -> Vec<String> {
        strings(&jacobian_ideal(&self.inner))
    }

    /// Minimal syzygies on the partials, one list of entries per column.
    fn syzygies(&self) -> PyResult<Vec<Vec<String>>> {
        let m = first_syzygies(&jacobian_ideal(&self.inner)).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok(m.columns.iter().map(|c| strings(c.components())).collect())
    }

    /// `(tjurina_total, milnor_total)`.
    #[pyo3(signature = (seed=0))]
    fn milnor_tjurina(&self, seed: u64) -> PyResult<(u64, u64)> {
        let m = milnor_tjurina_seeded(&self.inner, seed).map_err(divisor_err)?;
        Ok((m.tjurina_total, m.milnor_total))
    }

    /// Full freeness report as a dict.
    #[pyo3(signature = (seed=0, budget=200))]
    fn analyze(&self, py: Python<'_>, seed: u64, budget: usize) -> PyResult<PyObject> {
        let opts = AnalysisOptions {
            search: SearchConfig { budget, seed },
            milnor_seed: seed,
            ..AnalysisOptions::default()
        };
        let r = analyze_freeness_with(&self.inner, &opts).map_err(divisor_err)?;
        json_to_py(py, serde_json::to_string(&r))
    }

    fn __repr__(&self) -> String {
        format!("Divisor('{}')", self.inner.defining_polynomial())
    }
}

/// Arrangement of distinct lines in the projective plane.
#[pyclass(frozen, module = "pyfreecurve")]
struct Arrangement {
    inner: LineArrangement,
}

#[pymethods]
impl Arrangement {
    #[new]
    #[pyo3(signature = (lines, vars=None))]
    fn new(lines: Vec<String>, vars: Option<Vec<String>>) -> PyResult<Self> {
        let ctx = context(vars, true)?;
        let forms = lines.iter().map(|l| parse(&ctx, l)).collect::<PyResult<Vec<_>>>()?;
        let inner = LineArrangement::new(forms).map_err(divisor_err)?;
        Ok(Arrangement { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn divisor(&self) -> PyResult<Divisor> {
        Ok(Divisor {
            inner: self.inner.divisor().map_err(divisor_err)?,
        })
    }

    /// Singular points as `(coordinates, multiplicity)` with coordinates
    /// as strings of normalized rationals.
    fn singular_points(&self) -> PyResult<Vec<(Vec<String>, usize)>> {
        let l = singular_locus(&self.inner).map_err(divisor_err)?;
        Ok(l.points
            .iter()
            .zip(&l.multiplicities)
            .map(|(p, m)| (p.coordinates().iter().map(|c| c.to_string()).collect(), *m))
            .collect())
    }

    fn is_near_pencil(&self) -> PyResult<bool> {
        Ok(near_pencil_detect(&self.inner).map_err(divisor_err)?.detected)
    }
}

/// Reduced Gröbner basis of `gens` under `order` ("grevlex" or "lex").
#[pyfunction]
#[pyo3(signature = (gens, vars, order="grevlex"))]
fn groebner_basis(gens: Vec<String>, vars: Vec<String>, order: &str) -> PyResult<Vec<String>> {
    let ctx = context(Some(vars), false)?;
    let order = match order {
        "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        other => return Err(PyValueError::new_err(format!("unknown order {other:?}"))),
    };
    let ps = gens.iter().map(|g| parse(&ctx, g)).collect::<PyResult<Vec<_>>>()?;
    let gb = GroebnerBasis::compute(&ctx, &ps, order).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(strings(gb.generators()))
}

/// Betti numbers of `R/I` as `(i, j, beta_ij)` triples.
#[pyfunction]
#[pyo3(signature = (gens, vars, cap=8))]
fn betti_table(gens: Vec<String>, vars: Vec<String>, cap: usize) -> PyResult<Vec<(usize, i64, usize)>> {
    let ctx = context(Some(vars), false)?;
    let ps = gens.iter().map(|g| parse(&ctx, g)).collect::<PyResult<Vec<_>>>()?;
    let res = free_resolution(&ps, cap).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(freecurve::syzygy::betti_table(&res).entries().collect())
}

/// Runs the command-line interface; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let out = freecurve::io::run_command(std::iter::once("freecurve".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn pyfreecurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Divisor>()?;
    m.add_class::<Arrangement>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(betti_table, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add("__version__", freecurve::io::ENGINE_VERSION)?;
    Ok(())
}
