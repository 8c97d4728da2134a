use std::fmt;

use num_traits::Zero;

use super::SyzygyError;
use crate::groebner::{from_vector, ModuleOrder, MonomialOrder, Term, Vector};
use crate::poly::{monomials_of_degree, Ctx, Monomial, Polynomial, Rational, RationalMatrix};

/// Homogeneous element of a graded free module `⊕ R(-shiftᵢ)`.
///
/// Component `i` is homogeneous of degree `degree - shifts[i]` or zero.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
    shifts: Vec<i64>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>, shifts: Vec<i64>) -> Result<Self, SyzygyError> {
        if components.len() != shifts.len() {
            return Err(SyzygyError::RankMismatch {
                expected: shifts.len(),
                found: components.len(),
            });
        }
        let e = ModuleElement { components, shifts };
        let mut degree = None;
        for (c, s) in e.components.iter().zip(&e.shifts) {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(SyzygyError::NotHomogeneous)? as i64 + s;
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(SyzygyError::NotHomogeneous),
                _ => {}
            }
        }
        Ok(e)
    }

    pub(crate) fn new_unchecked(components: Vec<Polynomial>, shifts: Vec<i64>) -> Self {
        ModuleElement { components, shifts }
    }

    /// Standard basis vector `e_i`.
    pub fn basis_vector(ctx: &Ctx, shifts: &[i64], i: usize) -> Self {
        let components = (0..shifts.len())
            .map(|k| {
                if k == i {
                    Polynomial::one(ctx)
                } else {
                    Polynomial::zero(ctx)
                }
            })
            .collect();
        ModuleElement {
            components,
            shifts: shifts.to_vec(),
        }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Twisted degree; `None` for the zero element.
    pub fn degree(&self) -> Option<i64> {
        self.components
            .iter()
            .zip(&self.shifts)
            .find(|(c, _)| !c.is_zero())
            .map(|(c, s)| c.homogeneous_degree().unwrap() as i64 + s)
    }

    /// `Σ componentᵢ · targetsᵢ`.
    pub fn apply(&self, targets: &[Polynomial]) -> Polynomial {
        let ctx = self.components[0].context().clone();
        self.components
            .iter()
            .zip(targets)
            .fold(Polynomial::zero(&ctx), |acc, (c, t)| &acc + &(c * t))
    }

    /// `Σ componentᵢ · columnsᵢ` for module-valued targets.
    pub fn apply_columns(&self, columns: &[ModuleElement], target_shifts: &[i64]) -> ModuleElement {
        let ctx = self.components[0].context().clone();
        let mut out = vec![Polynomial::zero(&ctx); target_shifts.len()];
        for (c, col) in self.components.iter().zip(columns) {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&col.components) {
                *o = &*o + &(c * v);
            }
        }
        ModuleElement::new_unchecked(out, target_shifts.to_vec())
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement::new_unchecked(
            self.components.iter().map(|p| p.scale(c)).collect(),
            self.shifts.clone(),
        )
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleElement {
        ModuleElement::new_unchecked(self.components.iter().map(|p| p * f).collect(), self.shifts.clone())
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement::new_unchecked(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
            self.shifts.clone(),
        )
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement::new_unchecked(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
            self.shifts.clone(),
        )
    }

    /// Whether one element is a nonzero rational multiple of the other.
    pub fn is_scalar_multiple_of(&self, other: &ModuleElement) -> bool {
        let Some((i, a)) = self.components.iter().enumerate().find(|(_, c)| !c.is_zero()) else {
            return false;
        };
        let b = &other.components[i];
        if b.is_zero() {
            return false;
        }
        let ratio = &a.leading().unwrap().1 / &b.leading().unwrap().1;
        other.scale(&ratio) == *self
    }

    pub(crate) fn to_vector(&self, order: &ModuleOrder, offset: usize) -> Vec<(Term, Rational)> {
        let _ = order;
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| {
                c.terms().iter().map(move |(m, a)| {
                    (
                        Term {
                            mono: m.clone(),
                            comp: i + offset,
                        },
                        a.clone(),
                    )
                })
            })
            .collect()
    }

    /// Coefficient vector of this element in its degree slice, indexed by
    /// `(component, monomial of degree d - shiftᵢ)`.
    pub(crate) fn slice_coordinates(&self, layout: &SliceLayout) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); layout.len()];
        for (i, c) in self.components.iter().enumerate() {
            for (m, a) in c.terms() {
                if let Some(k) = layout.index(i, m) {
                    v[k] = a.clone();
                }
            }
        }
        v
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Monomial basis of the degree-`d` slice of `⊕ R(-shiftᵢ)`.
pub(crate) struct SliceLayout {
    blocks: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
    index: std::collections::HashMap<(usize, Monomial), usize>,
}

impl SliceLayout {
    pub fn new(n_vars: usize, shifts: &[i64], degree: i64) -> Self {
        let mut blocks = Vec::new();
        let mut offsets = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut off = 0;
        for (i, s) in shifts.iter().enumerate() {
            let d = degree - s;
            let block = if d >= 0 {
                monomials_of_degree(n_vars, d as u32)
            } else {
                Vec::new()
            };
            offsets.push(off);
            for (k, m) in block.iter().enumerate() {
                index.insert((i, m.clone()), off + k);
            }
            off += block.len();
            blocks.push(block);
        }
        SliceLayout { blocks, offsets, index }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn index(&self, comp: usize, m: &Monomial) -> Option<usize> {
        self.index.get(&(comp, m.clone())).copied()
    }

    #[allow(dead_code)]
    pub fn offset(&self, comp: usize) -> usize {
        self.offsets[comp]
    }
}

/// Matrix whose columns are the degree-`degree` multiples `m·g` of the
/// generators, in the slice coordinates of the ambient module.
pub(crate) fn multiples_matrix(
    ctx: &Ctx,
    gens: &[ModuleElement],
    ambient_shifts: &[i64],
    degree: i64,
) -> RationalMatrix {
    let layout = SliceLayout::new(ctx.n_vars(), ambient_shifts, degree);
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for m in monomials_of_degree(ctx.n_vars(), (degree - dg) as u32) {
            let mp = Polynomial::monomial(ctx, m, num_traits::One::one());
            cols.push(g.mul_poly(&mp).slice_coordinates(&layout));
        }
    }
    let rows = layout.len();
    let mut mat = RationalMatrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            if !v.is_zero() {
                mat.set(i, j, v.clone());
            }
        }
    }
    mat
}

/// `dim_Q` of the degree-`degree` part of the submodule generated by `gens`.
pub fn span_dimension_in_degree(ctx: &Ctx, gens: &[ModuleElement], ambient_shifts: &[i64], degree: i64) -> usize {
    let m = multiples_matrix(ctx, gens, ambient_shifts, degree);
    if m.cols() == 0 || m.rows() == 0 {
        return 0;
    }
    m.rank()
}

/// Module order used for module Gröbner computations on `⊕ R(-shiftᵢ)`.
pub(crate) fn graded_order(shifts: &[i64]) -> ModuleOrder {
    ModuleOrder {
        mono: MonomialOrder::Grevlex,
        shifts: shifts.to_vec(),
        head: None,
    }
}

pub(crate) fn vector_of(e: &ModuleElement, order: &ModuleOrder) -> Vector {
    Vector::from_unsorted(e.to_vector(order, 0), order)
}

pub(crate) fn element_of(ctx: &Ctx, v: &Vector, shifts: &[i64], offset: usize) -> ModuleElement {
    let mut per: Vec<Vec<(Term, Rational)>> = vec![Vec::new(); shifts.len()];
    for (t, c) in &v.terms {
        per[t.comp - offset].push((t.clone(), c.clone()));
    }
    let components = per
        .into_iter()
        .map(|terms| from_vector(ctx, &Vector { terms }))
        .collect();
    ModuleElement::new_unchecked(components, shifts.to_vec())
}

impl serde::Serialize for ModuleElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.components.iter())
    }
}
