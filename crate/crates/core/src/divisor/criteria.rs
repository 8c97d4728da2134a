use serde::Serialize;

use super::{
    i_abc, jacobian_ideal, DivisorError, FreenessReport, PlaneDivisor, ProjectivePoint, SingularLocus, Syzygy,
};
use crate::groebner::radical_membership;
use crate::poly::Polynomial;
use crate::syzygy::first_syzygies;

/// `d² + d + 1`, the bound on the number of singular points of a free
/// arrangement with a regular syzygy of degree `d`. Needs `d ≥ 2`.
pub fn singular_point_bound(d: u32) -> Result<u64, DivisorError> {
    if d < 2 {
        return Err(DivisorError::DegreeOneBound);
    }
    let d = d as u64;
    Ok(d * d + d + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointBoundCheck {
    pub syzygy_degree: u32,
    pub radical_degree: usize,
    /// `None` when the syzygy degree is below 2 and the bound does not apply.
    pub bound: Option<u64>,
    pub satisfied: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdCheck {
    pub n_lines: usize,
    pub radical_degree: usize,
    /// `n² - 5n + 8`.
    pub threshold: i64,
    pub applicable: bool,
    pub triggered: bool,
    /// Set when the criterion proves the arrangement is not free.
    pub not_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub alpha: u32,
    pub beta: u32,
    pub satisfied: bool,
    pub attained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub point_bound: Option<PointBoundCheck>,
    pub non_free_threshold: ThresholdCheck,
    pub alpha_bound: Option<AlphaCheck>,
}

/// Evaluates the degree inequalities for a line arrangement.
pub fn bounds_and_criteria(report: &FreenessReport, locus: &SingularLocus, n_lines: usize) -> Bounds {
    let radical_degree = locus.degree;
    let point_bound = report
        .regular_syzygy
        .as_ref()
        .and_then(|r| r.witness.as_ref())
        .map(|w| {
            let bound = singular_point_bound(w.degree).ok();
            PointBoundCheck {
                syzygy_degree: w.degree,
                radical_degree,
                bound,
                satisfied: bound.map(|b| radical_degree as u64 <= b),
            }
        });
    let n = n_lines as i64;
    let threshold = n * n - 5 * n + 8;
    let applicable = report.near_pencil == Some(false);
    let triggered = radical_degree as i64 >= threshold;
    let non_free_threshold = ThresholdCheck {
        n_lines,
        radical_degree,
        threshold,
        applicable,
        triggered,
        not_free: applicable && triggered,
    };
    let alpha_bound = report
        .syzygy_matrix
        .column_degrees
        .iter()
        .min()
        .map(|&beta| AlphaCheck {
            alpha: locus.alpha,
            beta,
            satisfied: locus.alpha <= beta + 1,
            attained: locus.alpha == beta + 1,
        });
    Bounds {
        point_bound,
        non_free_threshold,
        alpha_bound,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchemeIntersection {
    pub holds: bool,
    /// Every generator of `I₁ + I₂` vanishes on `V(J_F)`.
    pub forward: bool,
    /// Every generator of `J_F` vanishes on `V(I₁ + I₂)`.
    pub backward: bool,
    pub i1: Vec<Polynomial>,
    pub i2: Vec<Polynomial>,
}

/// Checks `V(J_F) = V(I₁) ∩ V(I₂)` for the two basis syzygies of a free
/// divisor by radical membership in both directions.
pub fn syzygy_scheme_check(d: &PlaneDivisor) -> Result<SchemeIntersection, DivisorError> {
    super::require_planar(d.context())?;
    let j = jacobian_ideal(d);
    let m = first_syzygies(&j)?;
    if m.columns.len() != 2 {
        return Err(DivisorError::NotFree);
    }
    let cols: Vec<Syzygy> = m
        .columns
        .iter()
        .map(|c| Syzygy::new(c.components().to_vec()))
        .collect::<Result<_, _>>()?;
    let i1 = i_abc(&cols[0]);
    let i2 = i_abc(&cols[1]);
    let sum: Vec<Polynomial> = i1.iter().chain(&i2).filter(|p| !p.is_zero()).cloned().collect();
    let mut forward = true;
    for g in &sum {
        if !radical_membership(g, &j)? {
            forward = false;
            break;
        }
    }
    let mut backward = true;
    for g in &j {
        if !radical_membership(g, &sum)? {
            backward = false;
            break;
        }
    }
    Ok(SchemeIntersection {
        holds: forward && backward,
        forward,
        backward,
        i1,
        i2,
    })
}

/// Where the generators of `I^(A,B,C)` are tested.
#[derive(Debug, Clone, Copy)]
pub enum ContainmentTarget<'a> {
    Points(&'a [ProjectivePoint]),
    Jacobian(&'a PlaneDivisor),
}

/// Whether `V(J_F) ⊆ V(I^(A,B,C))`.
pub fn containment_check(s: &Syzygy, target: ContainmentTarget<'_>) -> Result<bool, DivisorError> {
    let gens = i_abc(s);
    match target {
        ContainmentTarget::Points(points) => Ok(gens.iter().all(|g| points.iter().all(|p| p.lies_on(g)))),
        ContainmentTarget::Jacobian(d) => {
            let j = jacobian_ideal(d);
            for g in &gens {
                if !radical_membership(g, &j)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
