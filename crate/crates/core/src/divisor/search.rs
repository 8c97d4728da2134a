use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{require_planar, syzygy_is_regular, DivisorError, PlaneDivisor, Syzygy};
use crate::groebner::height;
use crate::poly::{monomials_of_degree, rat, Polynomial};
use crate::syzygy::{ModuleElement, SyzygyMatrix};

/// Budget and seed for the regular-syzygy search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub budget: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 200, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchStatus {
    /// A minimal generator is itself regular.
    Column {
        index: usize,
    },
    /// Found as `column₂ - f·column₁` (or a constant combination).
    Combination {
        trials: usize,
    },
    /// Every syzygy has its entries in an ideal of height ≤ 2.
    Certificate {
        entry_ideal_height: usize,
    },
    /// The syzygy module is not free of rank 2, so no syzygy is regular.
    NotFree,
    BudgetExhausted {
        budget: usize,
    },
}

impl SearchStatus {
    pub fn is_definitive_negative(&self) -> bool {
        matches!(self, SearchStatus::Certificate { .. } | SearchStatus::NotFree)
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStatus::Column { index } => write!(f, "found (minimal generator {index})"),
            SearchStatus::Combination { trials } => write!(f, "found (combination, {trials} trials)"),
            SearchStatus::Certificate { entry_ideal_height } => write!(
                f,
                "not found (certificate: all syzygy entries in ideal of height {entry_ideal_height})"
            ),
            SearchStatus::NotFree => write!(f, "not found (certificate: syzygy module is not free of rank 2)"),
            SearchStatus::BudgetExhausted { budget } => write!(f, "no regular syzygy found (budget {budget})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularSyzygySearch {
    pub witness: Option<Syzygy>,
    #[serde(serialize_with = "status_string")]
    pub status: SearchStatus,
    pub trials: usize,
    pub config: SearchConfig,
}

fn status_string<S: serde::Serializer>(st: &SearchStatus, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(st)
}

/// Looks for a syzygy `(A,B,C)` on the partials of `d` with `A, B, C` a
/// regular sequence, starting from the minimal generators in `matrix`.
///
/// With column degrees `d₁ ≤ d₂`, candidates are `column₂ - f·column₁` for
/// `f` of degree `d₂ - d₁` (or `a·column₁ + b·column₂` when `d₁ = d₂`), with
/// integer coefficient vectors drawn shell by shell in max-norm, shuffled
/// by `config.seed`.
pub fn find_regular_syzygy(
    d: &PlaneDivisor,
    matrix: &SyzygyMatrix,
    config: &SearchConfig,
) -> Result<RegularSyzygySearch, DivisorError> {
    require_planar(d.context())?;
    let done = |witness, status, trials| RegularSyzygySearch {
        witness,
        status,
        trials,
        config: *config,
    };
    if matrix.columns.len() != 2 {
        return Ok(done(None, SearchStatus::NotFree, 0));
    }
    for (index, c) in matrix.columns.iter().enumerate() {
        let s = Syzygy::new(c.components().to_vec())?;
        if s.regular {
            return Ok(done(Some(s), SearchStatus::Column { index }, 0));
        }
    }

    let ctx = d.context();
    let entries: Vec<Polynomial> = matrix
        .columns
        .iter()
        .flat_map(|c| c.components().iter().filter(|p| !p.is_zero()).cloned())
        .collect();
    if let Some(h) = height(ctx, &entries)? {
        if h <= 2 {
            return Ok(done(None, SearchStatus::Certificate { entry_ideal_height: h }, 0));
        }
    }

    let (c1, c2, d1, d2) = if matrix.column_degrees[0] <= matrix.column_degrees[1] {
        (
            &matrix.columns[0],
            &matrix.columns[1],
            matrix.column_degrees[0],
            matrix.column_degrees[1],
        )
    } else {
        (
            &matrix.columns[1],
            &matrix.columns[0],
            matrix.column_degrees[1],
            matrix.column_degrees[0],
        )
    };
    let monomials = monomials_of_degree(ctx.n_vars(), d2 - d1);
    let dim = if d1 == d2 { 2 } else { monomials.len() };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trials = 0;
    let mut shell = 1i64;
    while trials < config.budget {
        for coeffs in shell_vectors(dim, shell, config.budget - trials, &mut rng) {
            if d1 == d2 && !primitive_normalized(&coeffs) {
                continue;
            }
            trials += 1;
            let cand = if d1 == d2 {
                c1.scale(&rat(coeffs[0])).add(&c2.scale(&rat(coeffs[1])))
            } else {
                let f = Polynomial::from_terms(ctx, monomials.iter().zip(&coeffs).map(|(m, &c)| (m.clone(), rat(c))));
                c2.sub(&c1.mul_poly(&f))
            };
            if let Some(s) = regular_candidate(&cand)? {
                return Ok(done(Some(s), SearchStatus::Combination { trials }, trials));
            }
            if trials >= config.budget {
                break;
            }
        }
        shell += 1;
    }
    Ok(done(
        None,
        SearchStatus::BudgetExhausted { budget: config.budget },
        trials,
    ))
}

fn regular_candidate(e: &ModuleElement) -> Result<Option<Syzygy>, DivisorError> {
    if !syzygy_is_regular(e.components())? {
        return Ok(None);
    }
    Syzygy::new(e.components().to_vec()).map(Some)
}

fn primitive_normalized(v: &[i64]) -> bool {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    g == 1 && v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Integer vectors of length `dim` with max-norm exactly `k`, in a seeded
/// order. Small shells are enumerated and shuffled; large ones are sampled
/// without repetition, at most `want` of them.
fn shell_vectors(dim: usize, k: i64, want: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let side = (2 * k + 1) as f64;
    let size = side.powi(dim as i32) - (side - 2.0).powi(dim as i32);
    if size <= 20_000.0 {
        let mut all = Vec::new();
        let mut v = vec![-k; dim];
        loop {
            if v.iter().any(|x| x.abs() == k) {
                all.push(v.clone());
            }
            let mut i = 0;
            while i < dim {
                if v[i] < k {
                    v[i] += 1;
                    break;
                }
                v[i] = -k;
                i += 1;
            }
            if i == dim {
                break;
            }
        }
        all.shuffle(rng);
        return all;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < want {
        let mut v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-k..=k)).collect();
        let pin = rng.gen_range(0..dim);
        v[pin] = if rng.gen_bool(0.5) { k } else { -k };
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}
