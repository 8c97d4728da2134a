use std::collections::HashMap;

use num_traits::Zero;

use super::context::{same_context, Ctx};
use super::matrix::RationalMatrix;
use super::monomial::{monomials_of_degree, Monomial};
use super::polynomial::Polynomial;
use super::{PolyError, Rational};

/// Largest cofactor degree a slice computation accepts by default.
pub const DEFAULT_SLICE_CAP: u32 = 12;

/// Kernel of `(c₁..c_k) ↦ Σ cᵢ·pᵢ` restricted to one target degree.
///
/// Coordinates are the concatenation of the coefficient vectors of the
/// cofactors `cᵢ`, each over `blocks[i]` (monomials of degree
/// `target - deg pᵢ`, descending grevlex).
#[derive(Debug, Clone)]
pub struct SliceKernel {
    pub target_degree: u32,
    pub blocks: Vec<Vec<Monomial>>,
    pub basis: Vec<Vec<Rational>>,
}

impl SliceKernel {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Kernel basis vectors re-expanded as cofactor tuples.
    pub fn tuples(&self, ctx: &Ctx) -> Vec<Vec<Polynomial>> {
        self.basis.iter().map(|v| self.vector_to_tuple(ctx, v)).collect()
    }

    pub fn vector_to_tuple(&self, ctx: &Ctx, v: &[Rational]) -> Vec<Polynomial> {
        let mut offset = 0;
        self.blocks
            .iter()
            .map(|block| {
                let terms = block
                    .iter()
                    .zip(&v[offset..offset + block.len()])
                    .map(|(m, c)| (m.clone(), c.clone()));
                offset += block.len();
                Polynomial::from_terms(ctx, terms)
            })
            .collect()
    }
}

/// Exact kernel of the degree-`target` multiplication map for homogeneous
/// `polys`. Rejects zero or inhomogeneous input and cofactor degrees above
/// [`DEFAULT_SLICE_CAP`].
pub fn degree_slice_kernel(polys: &[Polynomial], target: u32) -> Result<SliceKernel, PolyError> {
    degree_slice_kernel_capped(polys, target, DEFAULT_SLICE_CAP)
}

pub fn degree_slice_kernel_capped(polys: &[Polynomial], target: u32, cap: u32) -> Result<SliceKernel, PolyError> {
    let mut degrees = Vec::with_capacity(polys.len());
    for p in polys {
        degrees.push(p.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?);
    }
    if let Some(first) = polys.first() {
        for p in polys {
            if !same_context(first.context(), p.context()) {
                return Err(PolyError::ContextMismatch {
                    left: first.context().to_string(),
                    right: p.context().to_string(),
                });
            }
        }
    }
    let max_cofactor = degrees
        .iter()
        .filter(|&&d| d <= target)
        .map(|&d| target - d)
        .max()
        .unwrap_or(0);
    if max_cofactor > cap {
        return Err(PolyError::DegreeCapExceeded {
            degree: max_cofactor,
            cap,
        });
    }
    Ok(graded_kernel(polys, &degrees, target))
}

/// Same as [`degree_slice_kernel`] but with explicit degrees, so zero
/// entries are allowed.
pub(crate) fn graded_kernel(polys: &[Polynomial], degrees: &[u32], target: u32) -> SliceKernel {
    let n = polys.first().map_or(0, |p| p.n_vars());
    let rows = monomials_of_degree(n, target);
    let row_index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let blocks: Vec<Vec<Monomial>> = degrees
        .iter()
        .map(|&d| {
            if d <= target {
                monomials_of_degree(n, target - d)
            } else {
                Vec::new()
            }
        })
        .collect();
    let n_cols: usize = blocks.iter().map(|b| b.len()).sum();
    let mut mat = RationalMatrix::zeros(rows.len(), n_cols);
    let mut col = 0;
    for (p, block) in polys.iter().zip(&blocks) {
        for m in block {
            for (t, c) in p.terms() {
                let r = row_index[&t.mul(m)];
                mat.set(r, col, c.clone());
            }
            col += 1;
        }
    }
    let basis = if rows.is_empty() {
        // no constraints: every vector is in the kernel
        (0..n_cols)
            .map(|i| {
                let mut v = vec![Rational::zero(); n_cols];
                v[i] = num_traits::One::one();
                v
            })
            .collect()
    } else {
        mat.nullspace()
    };
    SliceKernel {
        target_degree: target,
        blocks,
        basis,
    }
}
