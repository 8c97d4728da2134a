//! First syzygies, minimal generators, and minimal graded free resolutions.

mod module;
mod resolution;

use thiserror::Error;

use crate::groebner::{engine, GbProgress, ModuleOrder, MonomialOrder, Vector};
use crate::poly::{same_context, Ctx, PolyError, Polynomial};

pub use module::{span_dimension_in_degree, ModuleElement};
pub use resolution::{
    betti_table, free_resolution, free_resolution_with_hook, BettiTable, GradedResolution, ResolutionMap,
};

pub(crate) use module::{element_of, graded_order, multiples_matrix, vector_of};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyzygyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial in input")]
    ZeroPolynomial,
    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("Koszul syzygy needs two distinct indices")]
    RepeatedIndex,
    #[error("resolution did not terminate within length {cap}")]
    CapExceeded { cap: usize },
    #[error("cap must be at least 1")]
    InvalidCap,
    #[error("computation cancelled")]
    Cancelled,
}

/// Minimal generators of the first syzygy module of a polynomial tuple.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SyzygyMatrix {
    pub source: Vec<Polynomial>,
    pub columns: Vec<ModuleElement>,
    /// Cofactor degree of each column, `deg(column) - min deg(source)`.
    pub column_degrees: Vec<u32>,
}

impl SyzygyMatrix {
    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    /// Checks `Σ φᵢ·fᵢ = 0` for every column.
    pub fn verify(&self) -> bool {
        self.columns.iter().all(|c| c.apply(&self.source).is_zero())
    }

    /// `dim_Q` of the degree-`target` part of the syzygy module, counted
    /// from the span of the columns' multiples.
    pub fn dimension_in_degree(&self, target: u32) -> usize {
        let Some(first) = self.source.first() else { return 0 };
        let Some(shifts) = self.columns.first().map(|c| c.shifts().to_vec()) else {
            return 0;
        };
        let base = shifts.iter().copied().min().unwrap_or(0);
        span_dimension_in_degree(first.context(), &self.columns, &shifts, target as i64 + base)
    }

    /// Maximal minors of a 3×2 matrix `[(A₁,B₁,C₁) (A₂,B₂,C₂)]`:
    /// `(B₁C₂ - B₂C₁, A₁C₂ - A₂C₁, A₁B₂ - A₂B₁)`.
    pub fn maximal_minors(&self) -> Option<[Polynomial; 3]> {
        if self.columns.len() != 2 || self.source.len() != 3 {
            return None;
        }
        let a = self.columns[0].components();
        let b = self.columns[1].components();
        let m = |i: usize, j: usize| &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
        Some([m(1, 2), m(0, 2), m(0, 1)])
    }

    /// Whether `(f₁, -f₂, f₃)` equals the maximal minors up to one common
    /// nonzero scalar.
    pub fn minors_reconstruct_source(&self) -> bool {
        let Some(minors) = self.maximal_minors() else {
            return false;
        };
        let target = ModuleElement::new_unchecked(
            vec![self.source[0].clone(), -&self.source[1], self.source[2].clone()],
            vec![0; 3],
        );
        let got = ModuleElement::new_unchecked(minors.to_vec(), vec![0; 3]);
        !got.is_zero() && got.is_scalar_multiple_of(&target)
    }
}

/// Nonzero entries must be homogeneous in one context. Zero entries are
/// allowed only when all nonzero entries share a degree, which they inherit.
fn check_tuple(polys: &[Polynomial]) -> Result<Vec<i64>, SyzygyError> {
    let mut common = None;
    let mut uniform = true;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree().ok_or(SyzygyError::NotHomogeneous)? as i64;
        if !same_context(p.context(), polys[0].context()) {
            return Err(PolyError::ContextMismatch {
                left: polys[0].context().to_string(),
                right: p.context().to_string(),
            }
            .into());
        }
        match common {
            None => common = Some(d),
            Some(c) if c != d => uniform = false,
            _ => {}
        }
    }
    let has_zero = polys.iter().any(|p| p.is_zero());
    match common {
        None if has_zero => Err(SyzygyError::ZeroPolynomial),
        Some(_) if has_zero && !uniform => Err(SyzygyError::ZeroPolynomial),
        _ => Ok(polys
            .iter()
            .map(|p| p.homogeneous_degree().map_or(common.unwrap_or(0), |d| d as i64))
            .collect()),
    }
}

pub(crate) fn source_shifts(polys: &[Polynomial]) -> Vec<i64> {
    polys
        .iter()
        .map(|p| p.homogeneous_degree().unwrap_or(0) as i64)
        .collect()
}

fn base_degree(polys: &[Polynomial]) -> i64 {
    polys.iter().filter_map(|p| p.homogeneous_degree()).min().unwrap_or(0) as i64
}

/// Syzygies of `gens ⊂ ⊕R(-ambient_shifts)`, as elements of
/// `⊕R(-degrees)`. The output generates the syzygy module but is not minimal.
pub(crate) fn raw_syzygies(
    ctx: &Ctx,
    gens: &[ModuleElement],
    degrees: &[i64],
    ambient_shifts: &[i64],
    hook: Option<&mut dyn FnMut(&GbProgress) -> bool>,
) -> Result<Vec<ModuleElement>, SyzygyError> {
    let r = ambient_shifts.len();
    let src = degrees.to_vec();
    let mut shifts = ambient_shifts.to_vec();
    shifts.extend(&src);
    let order = ModuleOrder {
        mono: MonomialOrder::Grevlex,
        shifts,
        head: Some(r),
    };
    let vectors: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut terms = g.to_vector(&order, 0);
            terms.push((
                crate::groebner::Term {
                    mono: crate::poly::Monomial::one(ctx.n_vars()),
                    comp: r + j,
                },
                num_traits::One::one(),
            ));
            Vector::from_unsorted(terms, &order)
        })
        .collect();
    let gb = engine::groebner(&vectors, &order, hook).ok_or(SyzygyError::Cancelled)?;
    Ok(gb
        .iter()
        .filter(|v| v.lead().unwrap().comp >= r)
        .map(|v| element_of(ctx, v, &src, r))
        .collect())
}

/// Graded Nakayama pruning: scans by ascending degree (ties by input
/// position) and keeps an element only if it is not in the submodule
/// generated by those kept so far.
pub fn minimalize_generators(elements: &[ModuleElement]) -> Vec<ModuleElement> {
    let mut items: Vec<(usize, &ModuleElement)> = elements.iter().enumerate().filter(|(_, e)| !e.is_zero()).collect();
    items.sort_by_key(|(i, e)| (e.degree().unwrap(), *i));
    let Some((_, first)) = items.first() else {
        return Vec::new();
    };
    let order = graded_order(first.shifts());
    let mut kept: Vec<ModuleElement> = Vec::new();
    let mut basis: Vec<Vector> = Vec::new();
    let mut stale = false;
    for (_, e) in items {
        if stale {
            let vs: Vec<Vector> = kept.iter().map(|k| vector_of(k, &order)).collect();
            basis = engine::groebner(&vs, &order, None).expect("no hook installed");
            stale = false;
        }
        let v = vector_of(e, &order);
        let active: Vec<usize> = (0..basis.len()).collect();
        if !basis.is_empty() && engine::reduce(&v, &basis, &active, &order).is_zero() {
            continue;
        }
        kept.push(e.clone());
        stale = true;
    }
    kept
}

/// Minimal generators of the syzygy module of homogeneous `polys`.
pub fn first_syzygies(polys: &[Polynomial]) -> Result<SyzygyMatrix, SyzygyError> {
    let degrees = check_tuple(polys)?;
    let Some(first) = polys.first() else {
        return Ok(SyzygyMatrix {
            source: Vec::new(),
            columns: Vec::new(),
            column_degrees: Vec::new(),
        });
    };
    let ctx = first.context().clone();
    let gens: Vec<ModuleElement> = polys
        .iter()
        .map(|p| ModuleElement::new_unchecked(vec![p.clone()], vec![0]))
        .collect();
    let raw = raw_syzygies(&ctx, &gens, &degrees, &[0], None)?;
    let columns = minimalize_generators(&raw);
    let base = degrees.iter().copied().min().unwrap_or(0);
    let column_degrees = columns.iter().map(|c| (c.degree().unwrap() - base) as u32).collect();
    Ok(SyzygyMatrix {
        source: polys.to_vec(),
        columns,
        column_degrees,
    })
}

/// `polys[j]·e_i - polys[i]·e_j`.
pub fn koszul_syzygy(i: usize, j: usize, polys: &[Polynomial]) -> Result<ModuleElement, SyzygyError> {
    let len = polys.len();
    for index in [i, j] {
        if index >= len {
            return Err(SyzygyError::IndexOutOfRange { index, len });
        }
    }
    if i == j {
        return Err(SyzygyError::RepeatedIndex);
    }
    let ctx = polys[0].context();
    let mut comps = vec![Polynomial::zero(ctx); len];
    comps[i] = polys[j].clone();
    comps[j] = -&polys[i];
    Ok(ModuleElement::new_unchecked(comps, source_shifts(polys)))
}

/// Whether `e` lies in the module generated by the columns.
pub fn in_syzygy_module(e: &ModuleElement, m: &SyzygyMatrix) -> bool {
    if e.is_zero() {
        return true;
    }
    let order = graded_order(e.shifts());
    let vs: Vec<Vector> = m.columns.iter().map(|c| vector_of(c, &order)).collect();
    let basis = engine::groebner(&vs, &order, None).expect("no hook installed");
    let active: Vec<usize> = (0..basis.len()).collect();
    engine::reduce(&vector_of(e, &order), &basis, &active, &order).is_zero()
}

/// One degree of the brute-force syzygy oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct SyzygySlice {
    /// Cofactor degree relative to the lowest source degree.
    pub degree: u32,
    pub dimension: usize,
    pub tuples: Vec<Vec<Polynomial>>,
}

/// Syzygy spaces degree by degree from linear algebra alone, for cofactor
/// degrees `0..=max_degree`.
pub fn brute_force_syzygies(polys: &[Polynomial], max_degree: u32) -> Result<Vec<SyzygySlice>, SyzygyError> {
    for p in polys {
        if !p.is_zero() && !p.is_homogeneous() {
            return Err(SyzygyError::NotHomogeneous);
        }
    }
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let ctx = first.context();
    let base = base_degree(polys) as u32;
    let degrees: Vec<u32> = polys.iter().map(|p| p.homogeneous_degree().unwrap_or(base)).collect();
    Ok((0..=max_degree)
        .map(|d| {
            let k = crate::poly::graded_kernel(polys, &degrees, base + d);
            SyzygySlice {
                degree: d,
                dimension: k.dimension(),
                tuples: k.tuples(ctx),
            }
        })
        .collect())
}
