use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{minimalize_generators, multiples_matrix, raw_syzygies, ModuleElement, SyzygyError};
use crate::groebner::GbProgress;
use crate::poly::{Ctx, Polynomial};

/// `d: ⊕R(-source_shifts) → ⊕R(-target_shifts)`, one column per source generator.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionMap {
    pub source_shifts: Vec<i64>,
    pub target_shifts: Vec<i64>,
    pub columns: Vec<ModuleElement>,
}

impl ResolutionMap {
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.columns[col].components()[row]
    }

    pub fn has_constant_entry(&self) -> bool {
        self.columns
            .iter()
            .flat_map(|c| c.components())
            .any(|p| !p.is_zero() && p.is_constant())
    }
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, b)| b).sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Sorted shifts `j` of `F_i`, with multiplicity.
    pub fn shifts(&self, i: usize) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .flat_map(|(&(_, j), &b)| std::iter::repeat_n(j, b))
            .collect()
    }

    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap_or(0)
    }

    /// `Σᵢ (-1)ⁱ Σⱼ β_{i,j} tʲ`, the Hilbert series numerator over `(1-t)^n`.
    pub fn alternating_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|(_, j)| *j).max().unwrap_or(0).max(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += sign * b as i64;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Rows `j - i`, columns `i`, as in the usual Betti diagram.
    pub fn rows(&self) -> Vec<(i64, Vec<usize>)> {
        let pd = self.projective_dimension();
        let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
        let hi = self.regularity();
        (lo..=hi)
            .map(|r| (r, (0..=pd).map(|i| self.get(i, r + i as i64)).collect()))
            .collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &b) in &self.entries {
            seq.serialize_element(&[i as i64, j, b as i64])?;
        }
        seq.end()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>4}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, "{:>4}", self.total(i))?;
        }
        writeln!(f)?;
        for (r, row) in self.rows() {
            write!(f, "{r:>5}:")?;
            for b in row {
                if b == 0 {
                    write!(f, "{:>4}", "-")?;
                } else {
                    write!(f, "{b:>4}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Graded free resolution `0 ← R/I ← F₀ ← F₁ ← ⋯`; `maps[k]` is `F_{k+1} → F_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedResolution {
    pub ctx: Ctx,
    pub maps: Vec<ResolutionMap>,
    pub betti: BettiTable,
    pub minimal: bool,
}

impl GradedResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn projective_dimension(&self) -> usize {
        self.betti.projective_dimension()
    }

    /// Shifts of `F_i`.
    pub fn shifts(&self, i: usize) -> Vec<i64> {
        if i == 0 {
            vec![0]
        } else {
            self.maps
                .get(i - 1)
                .map(|m| m.source_shifts.clone())
                .unwrap_or_default()
        }
    }

    /// `d_k ∘ d_{k+1} = 0` for all consecutive maps, checked symbolically.
    pub fn compositions_vanish(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[1].columns
                .iter()
                .all(|c| c.apply_columns(&w[0].columns, &w[0].target_shifts).is_zero())
        })
    }

    /// Rank accounting `dim (F_i)_t = rank (d_i)_t + rank (d_{i+1})_t` for
    /// every `i ≥ 1` and every degree `t ≤ max_degree`. Returns the first
    /// failing `(i, t)`.
    pub fn exactness_failure(&self, max_degree: i64) -> Option<(usize, i64)> {
        let n = self.ctx.n_vars();
        let ranks = |k: usize, t: i64| -> usize {
            match self.maps.get(k) {
                None => 0,
                Some(m) => {
                    let mat = multiples_matrix(&self.ctx, &m.columns, &m.target_shifts, t);
                    if mat.rows() == 0 || mat.cols() == 0 {
                        0
                    } else {
                        mat.rank()
                    }
                }
            }
        };
        for t in 0..=max_degree {
            let mut below = ranks(0, t);
            for i in 1..=self.maps.len() {
                let dim: usize = self.shifts(i).iter().map(|s| slice_dim(n, t - s)).sum();
                let above = ranks(i, t);
                if dim != below + above {
                    return Some((i, t));
                }
                below = above;
            }
        }
        None
    }

    /// Default certification degree: the largest twist plus two.
    pub fn default_certification_degree(&self) -> i64 {
        self.maps
            .iter()
            .flat_map(|m| m.source_shifts.iter().copied())
            .max()
            .unwrap_or(0)
            + 2
    }

    pub fn certify_exactness(&self) -> bool {
        self.exactness_failure(self.default_certification_degree()).is_none()
    }
}

fn slice_dim(n: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    // C(d + n - 1, n - 1)
    let (d, k) = (d as u128, n as u128 - 1);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (d + k - i) / (i + 1);
    }
    r as usize
}

pub fn betti_table(res: &GradedResolution) -> &BettiTable {
    &res.betti
}

/// Minimal graded free resolution of `R/⟨i⟩`, of length at most `cap`.
pub fn free_resolution(i: &[Polynomial], cap: usize) -> Result<GradedResolution, SyzygyError> {
    free_resolution_with_hook(i, cap, &mut |_, _| true)
}

/// As [`free_resolution`], reporting `(step, progress)` during each
/// Gröbner computation; returning `false` cancels.
pub fn free_resolution_with_hook(
    i: &[Polynomial],
    cap: usize,
    hook: &mut dyn FnMut(usize, &GbProgress) -> bool,
) -> Result<GradedResolution, SyzygyError> {
    if cap == 0 {
        return Err(SyzygyError::InvalidCap);
    }
    let nonzero: Vec<Polynomial> = i.iter().filter(|p| !p.is_zero()).cloned().collect();
    for p in &nonzero {
        if !p.is_homogeneous() {
            return Err(SyzygyError::NotHomogeneous);
        }
    }
    let Some(first) = i.first() else {
        return Err(SyzygyError::ZeroPolynomial);
    };
    let ctx = first.context().clone();
    let gens: Vec<ModuleElement> = nonzero
        .iter()
        .map(|p| ModuleElement::new_unchecked(vec![p.clone()], vec![0]))
        .collect();
    let mut columns = minimalize_generators(&gens);
    let mut target_shifts = vec![0i64];
    let mut maps = Vec::new();
    let mut entries = BTreeMap::new();
    entries.insert((0usize, 0i64), 1usize);
    while !columns.is_empty() {
        if maps.len() == cap {
            return Err(SyzygyError::CapExceeded { cap });
        }
        let step = maps.len() + 1;
        let source_shifts: Vec<i64> = columns.iter().map(|c| c.degree().unwrap()).collect();
        for s in &source_shifts {
            *entries.entry((step, *s)).or_insert(0) += 1;
        }
        let mut step_hook = |p: &GbProgress| hook(step, p);
        let raw = raw_syzygies(&ctx, &columns, &source_shifts, &target_shifts, Some(&mut step_hook))?;
        let next = minimalize_generators(&raw);
        maps.push(ResolutionMap {
            source_shifts: source_shifts.clone(),
            target_shifts,
            columns,
        });
        target_shifts = source_shifts;
        columns = next;
    }
    let minimal = maps.iter().all(|m| !m.has_constant_entry());
    Ok(GradedResolution {
        ctx,
        maps,
        betti: BettiTable { entries },
        minimal,
    })
}
