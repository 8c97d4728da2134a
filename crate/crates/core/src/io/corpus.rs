//! Built-in example corpus with frozen expected values.

use std::fmt::Debug;

use serde::Serialize;

use super::commands::{divisor_of, CommandError};
use super::document::parse_document;
use crate::divisor::{
    analyze_freeness, i_abc, milnor_tjurina, singular_point_bound, syzygy_scheme_check, FreenessReport, PlaneDivisor,
    SearchStatus,
};
use crate::groebner::{height, hilbert_data};

pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            text: include_str!(concat!("../../corpus/", $name, ".div")),
        }
    };
}

pub const CORPUS: &[CorpusEntry] = &[
    entry!("braid"),
    entry!("tangent_conic"),
    entry!("lines_conic"),
    entry!("four_planes"),
    entry!("pencil4"),
    entry!("pencil5"),
    entry!("pencil6"),
    entry!("triangle"),
    entry!("conic"),
    entry!("deleted_braid"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: Debug + PartialEq>(&mut self, name: &str, expected: T, actual: T) {
        self.0.push(Check {
            name: name.to_string(),
            pass: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }
}

fn witness_degree(r: &FreenessReport) -> Option<u32> {
    r.regular_syzygy.as_ref()?.witness.as_ref().map(|w| w.degree)
}

fn radical_degree(r: &FreenessReport) -> Option<usize> {
    r.singular_locus.as_ref().map(|l| l.degree)
}

fn check_entry(name: &str, d: &PlaneDivisor, c: &mut Checks) -> Result<(), CommandError> {
    let r = analyze_freeness(d)?;
    match name {
        "braid" => {
            c.eq("free", true, r.is_free);
            c.eq("exponents", Some(vec![1, 2, 3]), r.exponents.clone());
            c.eq("regular syzygy degree", Some(3), witness_degree(&r));
            c.eq("radical degree", Some(7), radical_degree(&r));
            c.eq("alpha", Some(3), r.singular_locus.as_ref().map(|l| l.alpha));
            c.eq("near-pencil", Some(false), r.near_pencil);
            let b = r.bounds.as_ref().unwrap();
            c.eq("point bound", Some(13), b.point_bound.as_ref().and_then(|p| p.bound));
            c.eq(
                "alpha bound attained",
                Some(true),
                b.alpha_bound.as_ref().map(|p| p.attained),
            );
            c.eq("threshold", 14, b.non_free_threshold.threshold);
            c.eq("syzygy schemes meet in V(J)", true, syzygy_scheme_check(d)?.holds);
        }
        "tangent_conic" => {
            c.eq("free", true, r.is_free);
            c.eq("regular syzygy degree", Some(1), witness_degree(&r));
            c.eq("quasihomogeneous", Some(true), r.quasihomogeneous);
        }
        "lines_conic" => {
            c.eq("free", true, r.is_free);
            c.eq("first shifts", vec![5, 5, 5], r.betti.shifts(1));
            c.eq("second shifts", vec![7, 8], r.betti.shifts(2));
            let m = r.milnor.unwrap();
            c.eq("tjurina total", 19, m.tjurina_total);
            c.eq("milnor total", 20, m.milnor_total);
            c.eq("quasihomogeneous", false, m.quasihomogeneous);
            c.eq(
                "search status",
                Some(SearchStatus::Certificate { entry_ideal_height: 2 }),
                r.regular_syzygy.map(|s| s.status),
            );
        }
        "four_planes" => {
            c.eq("free", false, r.is_free);
            c.eq("jacobian height", 2, r.jacobian_height);
            c.eq("projective dimension", 4, r.projective_dimension);
            c.eq(
                "betti totals",
                vec![1, 4, 6, 4, 1],
                (0..=4).map(|i| r.betti.total(i)).collect::<Vec<_>>(),
            );
        }
        "pencil4" | "pencil5" | "pencil6" => {
            let n: usize = name[6..].parse().unwrap();
            c.eq("free", true, r.is_free);
            c.eq("exponents", Some(vec![1, 1, n as u32 - 2]), r.exponents.clone());
            c.eq("near-pencil", Some(true), r.near_pencil);
            c.eq("radical degree", Some(n), radical_degree(&r));
            c.eq("regular syzygy degree", Some(1), witness_degree(&r));
            c.eq("point bound refused", true, singular_point_bound(1).is_err());
            if n == 5 {
                c.eq("syzygy schemes meet in V(J)", true, syzygy_scheme_check(d)?.holds);
            }
        }
        "triangle" => {
            c.eq("exponents", Some(vec![1, 1, 1]), r.exponents.clone());
            c.eq("radical degree", Some(3), radical_degree(&r));
            c.eq("alpha", Some(2), r.singular_locus.as_ref().map(|l| l.alpha));
            c.eq("near-pencil", Some(true), r.near_pencil);
        }
        "conic" => {
            c.eq("smooth", true, r.smooth);
            let m = milnor_tjurina(d)?;
            c.eq("totals", (0, 0), (m.tjurina_total, m.milnor_total));
        }
        "deleted_braid" => {
            c.eq("exponents", Some(vec![1, 2, 2]), r.exponents.clone());
            let w = r.regular_syzygy.as_ref().and_then(|s| s.witness.clone());
            c.eq("regular syzygy degree", Some(2), w.as_ref().map(|w| w.degree));
            if let Some(w) = w {
                let i = i_abc(&w);
                c.eq("I(A,B,C) height", Some(2), height(d.context(), &i)?);
                c.eq("I(A,B,C) degree", 7, hilbert_data(d.context(), &i)?.scheme_degree);
            }
        }
        _ => {}
    }
    Ok(())
}

pub fn verify_corpus() -> Vec<EntryResult> {
    CORPUS
        .iter()
        .map(|e| {
            let mut checks = Checks::default();
            let outcome = parse_document(e.text, None)
                .map_err(CommandError::from)
                .and_then(|input| divisor_of(&input))
                .and_then(|d| check_entry(e.name, &d, &mut checks));
            EntryResult {
                name: e.name.to_string(),
                checks: checks.0,
                error: outcome.err().map(|e| e.to_string()),
            }
        })
        .collect()
}
