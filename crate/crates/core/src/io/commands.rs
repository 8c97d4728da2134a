use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::document::{DocumentError, InputKind, ParsedInput};
use crate::divisor::{
    analyze_freeness_with, find_regular_syzygy, jacobian_ideal, singular_locus, AnalysisOptions, DivisorError,
    FreenessReport, LineArrangement, PlaneDivisor, SearchConfig,
};
use crate::groebner::{height, hilbert_data, GroebnerError};
use crate::poly::Polynomial;
use crate::syzygy::{first_syzygies, free_resolution, SyzygyError};

/// Failure classes, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    /// Unreadable or malformed input (exit 3).
    #[error("{0}")]
    Input(String),
    /// Well-formed input the analysis cannot accept (exit 2).
    #[error("{0}")]
    Precondition(String),
    /// Computed values disagree with expectations (exit 1).
    #[error("{0}")]
    Mismatch(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Input(_) => 3,
            CommandError::Precondition(_) => 2,
            CommandError::Mismatch(_) => 1,
        }
    }
}

impl From<DocumentError> for CommandError {
    fn from(e: DocumentError) -> Self {
        CommandError::Input(e.to_string())
    }
}

impl From<DivisorError> for CommandError {
    fn from(e: DivisorError) -> Self {
        CommandError::Precondition(e.to_string())
    }
}

impl From<SyzygyError> for CommandError {
    fn from(e: SyzygyError) -> Self {
        CommandError::Precondition(e.to_string())
    }
}

impl From<GroebnerError> for CommandError {
    fn from(e: GroebnerError) -> Self {
        CommandError::Precondition(e.to_string())
    }
}

/// JSON result plus its text rendering.
pub struct Outcome {
    pub result: Value,
    pub text: String,
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub(crate) fn divisor_of(input: &ParsedInput) -> Result<PlaneDivisor, CommandError> {
    match input.kind {
        InputKind::Ideal => Err(CommandError::Precondition(
            "command needs a divisor or a list of lines".into(),
        )),
        InputKind::Arrangement => {
            LineArrangement::new(input.polynomials.clone())?;
            Ok(PlaneDivisor::from_factors(input.polynomials.clone())?)
        }
        InputKind::Divisor => {
            let d = PlaneDivisor::new(input.polynomials[0].clone())?;
            match &input.factors {
                Some(f) => Ok(d.clone().with_factors(f.clone()).unwrap_or(d)),
                None => Ok(d),
            }
        }
    }
}

/// The ideal a command works on: generators for `ideal:`, partials otherwise.
fn working_ideal(input: &ParsedInput) -> Result<Vec<Polynomial>, CommandError> {
    match input.kind {
        InputKind::Ideal => Ok(input.polynomials.clone()),
        _ => Ok(jacobian_ideal(&divisor_of(input)?)),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Full freeness report with the singular locus fields lifted to the top.
pub fn freeness(input: &ParsedInput, opts: &AnalysisOptions) -> Result<Outcome, CommandError> {
    let d = divisor_of(input)?;
    let r = analyze_freeness_with(&d, opts)?;
    let scheme_degree = if r.smooth {
        0
    } else {
        hilbert_data(d.context(), &jacobian_ideal(&d))?.scheme_degree
    };
    let mut v = to_value(&r);
    let obj = v.as_object_mut().unwrap();
    let locus = obj.remove("singular_locus").unwrap_or(Value::Null);
    lift_locus(obj, &locus, r.smooth);
    obj.insert("jacobian_scheme_degree".into(), json!(scheme_degree));
    Ok(Outcome {
        text: freeness_text(&r, scheme_degree),
        result: v,
    })
}

fn lift_locus(obj: &mut Map<String, Value>, locus: &Value, smooth: bool) {
    let get = |k: &str| locus.get(k).cloned().unwrap_or(Value::Null);
    if smooth {
        obj.insert("singular_points".into(), json!([]));
        obj.insert("radical_degree".into(), json!(0));
    } else {
        obj.insert("singular_points".into(), get("points"));
        obj.insert("radical_degree".into(), get("degree"));
    }
    obj.insert("multiplicities".into(), get("multiplicities"));
    obj.insert("radical_ideal".into(), get("radical_ideal"));
    obj.insert("alpha".into(), get("alpha"));
}

fn freeness_text(r: &FreenessReport, scheme_degree: u64) -> String {
    let mut s = String::new();
    writeln!(s, "degree: {}", r.degree).unwrap();
    if r.smooth {
        writeln!(s, "smooth: yes (free by convention)").unwrap();
    }
    match &r.exponents {
        Some(e) => writeln!(s, "free: yes (exponents {})", join(e)).unwrap(),
        None => writeln!(s, "free: {}", yes_no(r.is_free)).unwrap(),
    }
    writeln!(s, "projective dimension: {}", r.projective_dimension).unwrap();
    writeln!(s, "jacobian height: {}", r.jacobian_height).unwrap();
    writeln!(s, "jacobian scheme degree: {scheme_degree}").unwrap();
    writeln!(s, "syzygy degrees: {}", join(&r.syzygy_matrix.column_degrees)).unwrap();
    for c in &r.syzygy_matrix.columns {
        writeln!(s, "  {c}").unwrap();
    }
    if let Some(search) = &r.regular_syzygy {
        writeln!(s, "regular syzygy: {}", search.status).unwrap();
        if let Some(w) = &search.witness {
            writeln!(s, "  degree {}: ({})", w.degree, join(&w.components)).unwrap();
        }
    }
    if let Some(m) = &r.milnor {
        writeln!(
            s,
            "tjurina total: {}, milnor total: {}, quasihomogeneous: {}",
            m.tjurina_total,
            m.milnor_total,
            yes_no(m.quasihomogeneous)
        )
        .unwrap();
    }
    if let Some(l) = &r.singular_locus {
        writeln!(s, "singular points: {} (alpha {})", l.degree, l.alpha).unwrap();
        for (p, m) in l.points.iter().zip(&l.multiplicities) {
            writeln!(s, "  {p} on {m} lines").unwrap();
        }
    }
    if let Some(np) = r.near_pencil {
        writeln!(s, "near-pencil: {}", yes_no(np)).unwrap();
    }
    if let Some(b) = &r.bounds {
        s.push_str(&bounds_text(b));
    }
    writeln!(s, "betti table:").unwrap();
    write!(s, "{}", r.betti).unwrap();
    s
}

fn bounds_text(b: &crate::divisor::Bounds) -> String {
    let mut s = String::new();
    match &b.point_bound {
        Some(p) => match p.bound {
            Some(bound) => writeln!(
                s,
                "point bound: {} <= {} (regular syzygy degree {}): {}",
                p.radical_degree,
                bound,
                p.syzygy_degree,
                yes_no(p.satisfied == Some(true))
            )
            .unwrap(),
            None => writeln!(
                s,
                "point bound: not applicable (regular syzygy degree {})",
                p.syzygy_degree
            )
            .unwrap(),
        },
        None => writeln!(s, "point bound: no regular syzygy").unwrap(),
    }
    let c = &b.non_free_threshold;
    writeln!(
        s,
        "non-freeness threshold: {} points vs n^2-5n+8 = {}: {}",
        c.radical_degree,
        c.threshold,
        if c.not_free {
            "triggered (not free)"
        } else if c.applicable {
            "silent"
        } else {
            "not applicable"
        }
    )
    .unwrap();
    if let Some(p) = &b.alpha_bound {
        writeln!(
            s,
            "alpha <= beta + 1: {} <= {} + 1: {}{}",
            p.alpha,
            p.beta,
            yes_no(p.satisfied),
            if p.attained { " (attained)" } else { "" }
        )
        .unwrap();
    }
    s
}

pub fn syzygies(input: &ParsedInput) -> Result<Outcome, CommandError> {
    let gens = working_ideal(input)?;
    let m = first_syzygies(&gens)?;
    let verified = m.verify();
    let reconstructs = m.maximal_minors().map(|_| m.minors_reconstruct_source());
    let mut v = to_value(&m);
    let obj = v.as_object_mut().unwrap();
    obj.insert("verified".into(), json!(verified));
    obj.insert("minors_reconstruct_source".into(), json!(reconstructs));
    let mut text = String::new();
    writeln!(text, "generators: {}", join(&m.source)).unwrap();
    writeln!(text, "minimal syzygies: {}", m.n_columns()).unwrap();
    for (c, d) in m.columns.iter().zip(&m.column_degrees) {
        writeln!(text, "  degree {d}: {c}").unwrap();
    }
    writeln!(text, "verified: {}", yes_no(verified)).unwrap();
    if let Some(r) = reconstructs {
        writeln!(text, "maximal minors reconstruct generators: {}", yes_no(r)).unwrap();
    }
    Ok(Outcome { result: v, text })
}

pub fn regular_syzygy(input: &ParsedInput, config: &SearchConfig) -> Result<Outcome, CommandError> {
    let d = divisor_of(input)?;
    let j = jacobian_ideal(&d);
    let h = height(d.context(), &j)?.unwrap_or(d.context().n_vars());
    if h < 2 {
        return Err(DivisorError::NonIsolated { height: h }.into());
    }
    let m = first_syzygies(&j)?;
    let r = find_regular_syzygy(&d, &m, config)?;
    let mut text = format!("status: {}\n", r.status);
    if let Some(w) = &r.witness {
        writeln!(text, "syzygy of degree {}: ({})", w.degree, join(&w.components)).unwrap();
    }
    writeln!(text, "trials: {}", r.trials).unwrap();
    let mut v = to_value(&r);
    v.as_object_mut()
        .unwrap()
        .insert("column_degrees".into(), json!(m.column_degrees));
    Ok(Outcome { result: v, text })
}

pub fn locus(input: &ParsedInput) -> Result<Outcome, CommandError> {
    let d = divisor_of(input)?;
    let ctx = d.context();
    let j = jacobian_ideal(&d);
    let h = height(ctx, &j)?.unwrap_or(ctx.n_vars());
    let smooth = h == ctx.n_vars();
    if h < 2 {
        return Err(DivisorError::NonIsolated { height: h }.into());
    }
    let scheme_degree = if smooth {
        0
    } else {
        hilbert_data(ctx, &j)?.scheme_degree
    };
    let mut obj = Map::new();
    obj.insert("jacobian_height".into(), json!(h));
    obj.insert("jacobian_scheme_degree".into(), json!(scheme_degree));
    obj.insert("smooth".into(), json!(smooth));
    let mut text = format!("jacobian height: {h}\njacobian scheme degree: {scheme_degree}\n");
    match d.as_line_arrangement() {
        Some(a) if a.len() >= 2 && !smooth => {
            let l = singular_locus(&a)?;
            lift_locus(&mut obj, &to_value(&l), false);
            writeln!(text, "singular points: {}", l.degree).unwrap();
            for (p, m) in l.points.iter().zip(&l.multiplicities) {
                writeln!(text, "  {p} on {m} lines").unwrap();
            }
            writeln!(text, "radical: {}", join(&l.radical_ideal)).unwrap();
            writeln!(text, "alpha: {}", l.alpha).unwrap();
        }
        _ => {
            lift_locus(&mut obj, &Value::Null, smooth);
            if smooth {
                writeln!(text, "singular points: 0").unwrap();
            } else {
                writeln!(text, "singular points: not computed (not a line arrangement)").unwrap();
            }
        }
    }
    Ok(Outcome {
        result: Value::Object(obj),
        text,
    })
}

pub fn bounds(input: &ParsedInput, config: &SearchConfig) -> Result<Outcome, CommandError> {
    let d = divisor_of(input)?;
    if d.as_line_arrangement().is_none_or(|a| a.len() < 3) {
        return Err(CommandError::Precondition(
            "bounds need an arrangement of at least 3 lines".into(),
        ));
    }
    let opts = AnalysisOptions {
        search: *config,
        compute_milnor: false,
        ..AnalysisOptions::default()
    };
    let r = analyze_freeness_with(&d, &opts)?;
    let b = r.bounds.clone().expect("arrangement bounds");
    let mut v = to_value(&b);
    let obj = v.as_object_mut().unwrap();
    obj.insert("is_free".into(), json!(r.is_free));
    obj.insert("exponents".into(), json!(r.exponents));
    obj.insert("near_pencil".into(), json!(r.near_pencil));
    let text = format!(
        "free: {}\nnear-pencil: {}\n{}",
        yes_no(r.is_free),
        yes_no(r.near_pencil == Some(true)),
        bounds_text(&b)
    );
    Ok(Outcome { result: v, text })
}

pub fn resolve(input: &ParsedInput, cap: usize) -> Result<Outcome, CommandError> {
    let gens = working_ideal(input)?;
    let res = free_resolution(&gens, cap)?;
    let exact = res.certify_exactness();
    let compositions = res.compositions_vanish();
    let maps: Vec<Value> = res
        .maps
        .iter()
        .map(|m| {
            json!({
                "source_shifts": m.source_shifts,
                "target_shifts": m.target_shifts,
                "columns": m.columns,
            })
        })
        .collect();
    let shifts: Vec<Vec<i64>> = (0..=res.length()).map(|i| res.shifts(i)).collect();
    let result = json!({
        "betti": res.betti,
        "shifts": shifts,
        "projective_dimension": res.projective_dimension(),
        "regularity": res.betti.regularity(),
        "minimal": res.minimal,
        "exact": exact,
        "compositions_vanish": compositions,
        "maps": maps,
    });
    let mut text = String::new();
    let terms: Vec<String> = shifts
        .iter()
        .map(|s| {
            let mut counts: Vec<(i64, usize)> = Vec::new();
            for &x in s {
                match counts.last_mut() {
                    Some((y, c)) if *y == x => *c += 1,
                    _ => counts.push((x, 1)),
                }
            }
            counts
                .iter()
                .map(|&(x, c)| match (x, c) {
                    (0, 1) => "R".to_string(),
                    (_, 1) => format!("R(-{x})"),
                    _ => format!("R^{c}(-{x})"),
                })
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect();
    writeln!(text, "{}", terms.join(" <- ")).unwrap();
    writeln!(text, "projective dimension: {}", res.projective_dimension()).unwrap();
    writeln!(
        text,
        "exact: {}, minimal: {}",
        yes_no(exact && compositions),
        yes_no(res.minimal)
    )
    .unwrap();
    write!(text, "{}", res.betti).unwrap();
    Ok(Outcome { result, text })
}
