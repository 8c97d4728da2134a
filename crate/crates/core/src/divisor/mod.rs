//! Plane divisors and line arrangements: Jacobian ideals, freeness,
//! regular syzygies, singular loci and the bounds tying them together.

mod arrangement;
mod criteria;
mod freeness;
mod milnor;
mod search;
#[cfg(test)]
mod tests;

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{is_regular_sequence, GroebnerError};
use crate::poly::{Ctx, PolyError, Polynomial, Rational};
use crate::syzygy::SyzygyError;

pub use arrangement::{
    near_pencil_detect, singular_locus, LineArrangement, NearPencil, ProjectivePoint, SingularLocus,
};
pub use criteria::{
    bounds_and_criteria, containment_check, singular_point_bound, syzygy_scheme_check, AlphaCheck, Bounds,
    ContainmentTarget, PointBoundCheck, SchemeIntersection, ThresholdCheck,
};
pub use freeness::{analyze_freeness, analyze_freeness_with, AnalysisOptions, FreenessReport};
pub use milnor::{milnor_tjurina, milnor_tjurina_seeded, MilnorTjurina};
pub use search::{find_regular_syzygy, RegularSyzygySearch, SearchConfig, SearchStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Syzygy(#[from] SyzygyError),
    #[error("defining polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("defining polynomial is constant or zero")]
    Degenerate,
    #[error("product of factors does not match the defining polynomial")]
    FactorMismatch,
    #[error("form {index} is not a nonzero linear form")]
    NotLinear { index: usize },
    #[error("forms {first} and {second} define the same line")]
    DuplicateLine { first: usize, second: usize },
    #[error("need at least {need} lines, found {found}")]
    TooFewLines { need: usize, found: usize },
    #[error("singular locus is not isolated (height {height} < 2)")]
    NonIsolated { height: usize },
    #[error("operation needs exactly 3 variables, found {found}")]
    NotPlanar { found: usize },
    #[error("θ(F) is not divisible by F")]
    NotLogarithmic,
    #[error("derivation needs {expected} homogeneous coefficients of one degree")]
    BadDerivation { expected: usize },
    #[error("divisor is not free")]
    NotFree,
    #[error("degree bound d²+d+1 needs d ≥ 2; a degree-1 regular syzygy (pencil plus a line) violates it")]
    DegreeOneBound,
    #[error("could not certify a coordinate change after {attempts} attempts")]
    CertificationFailed { attempts: usize },
}

/// A reduced plane curve `V(F)`, optionally with its factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneDivisor {
    defining_polynomial: Polynomial,
    factors: Option<Vec<Polynomial>>,
    degree: u32,
}

impl PlaneDivisor {
    pub fn new(f: Polynomial) -> Result<Self, DivisorError> {
        let degree = f.homogeneous_degree().ok_or(if f.is_zero() {
            DivisorError::Degenerate
        } else {
            DivisorError::NotHomogeneous
        })?;
        if degree == 0 {
            return Err(DivisorError::Degenerate);
        }
        Ok(PlaneDivisor {
            defining_polynomial: f,
            factors: None,
            degree,
        })
    }

    /// Divisor defined by the product of `factors`.
    pub fn from_factors(factors: Vec<Polynomial>) -> Result<Self, DivisorError> {
        let Some(first) = factors.first() else {
            return Err(DivisorError::Degenerate);
        };
        let f = crate::poly::product(first.context(), &factors);
        let mut d = PlaneDivisor::new(f)?;
        d.factors = Some(factors);
        Ok(d)
    }

    /// Attaches factors whose product must equal `F` up to a nonzero scalar.
    pub fn with_factors(mut self, factors: Vec<Polynomial>) -> Result<Self, DivisorError> {
        let prod = crate::poly::product(self.defining_polynomial.context(), &factors);
        if prod.is_zero() || prod.monic() != self.defining_polynomial.monic() {
            return Err(DivisorError::FactorMismatch);
        }
        self.factors = Some(factors);
        Ok(self)
    }

    pub fn defining_polynomial(&self) -> &Polynomial {
        &self.defining_polynomial
    }

    pub fn factors(&self) -> Option<&[Polynomial]> {
        self.factors.as_deref()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn context(&self) -> &Ctx {
        self.defining_polynomial.context()
    }

    /// The factors, when every one of them is linear.
    pub fn as_line_arrangement(&self) -> Option<LineArrangement> {
        let fs = self.factors.as_ref()?;
        LineArrangement::new(fs.clone()).ok()
    }
}

/// Relation `Σ cᵢ·∂ᵢF = 0` against a divisor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Syzygy {
    pub components: Vec<Polynomial>,
    pub degree: u32,
    pub regular: bool,
}

impl Syzygy {
    /// Wraps `components`, computing degree and regularity.
    pub fn new(components: Vec<Polynomial>) -> Result<Self, DivisorError> {
        let degree = components
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.homogeneous_degree().ok_or(DivisorError::NotHomogeneous))
            .transpose()?
            .unwrap_or(0);
        let regular = syzygy_is_regular(&components)?;
        Ok(Syzygy {
            components,
            degree,
            regular,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Whether `Σ cᵢ·∂ᵢF = 0` holds exactly.
    pub fn annihilates(&self, d: &PlaneDivisor) -> bool {
        let grad = jacobian_ideal(d);
        let ctx = d.context();
        self.components
            .iter()
            .zip(&grad)
            .fold(Polynomial::zero(ctx), |acc, (c, g)| &acc + &(c * g))
            .is_zero()
    }

    pub fn is_scalar_multiple_of(&self, other: &[Polynomial]) -> bool {
        let Some((i, a)) = self.components.iter().enumerate().find(|(_, c)| !c.is_zero()) else {
            return false;
        };
        if other.len() != self.components.len() || other[i].is_zero() {
            return false;
        }
        let r: Rational = &a.leading().unwrap().1 / &other[i].leading().unwrap().1;
        self.components.iter().zip(other).all(|(c, o)| *c == o.scale(&r))
    }
}

pub(crate) fn syzygy_is_regular(components: &[Polynomial]) -> Result<bool, DivisorError> {
    if components.iter().any(|c| c.is_zero() || c.is_constant()) {
        return Ok(false);
    }
    if components.iter().any(|c| !c.is_homogeneous()) {
        return Err(DivisorError::NotHomogeneous);
    }
    Ok(is_regular_sequence(components)?)
}

/// `(∂F/∂x₀, …, ∂F/∂x_{n-1})`.
pub fn jacobian_ideal(d: &PlaneDivisor) -> Vec<Polynomial> {
    d.defining_polynomial.gradient()
}

/// Special logarithmic derivation `θ - (D/n)·θ_E` from `θ` with `θ(F) = D·F`.
pub fn derivation_to_syzygy(coeffs: &[Polynomial], d: &PlaneDivisor) -> Result<Syzygy, DivisorError> {
    let ctx = d.context();
    let n_vars = ctx.n_vars();
    if coeffs.len() != n_vars {
        return Err(DivisorError::BadDerivation { expected: n_vars });
    }
    let f = &d.defining_polynomial;
    let theta_f = coeffs
        .iter()
        .zip(jacobian_ideal(d))
        .fold(Polynomial::zero(ctx), |acc, (c, g)| &acc + &(c * &g));
    let big_d = theta_f.exact_div(f)?.ok_or(DivisorError::NotLogarithmic)?;
    let scale = Rational::new(1.into(), (d.degree as i64).into());
    let dn = big_d.scale(&scale);
    let components: Vec<Polynomial> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c - &(&Polynomial::var(ctx, i) * &dn))
        .collect();
    let degree = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .and_then(|c| c.homogeneous_degree())
        .ok_or(DivisorError::BadDerivation { expected: n_vars })?;
    if coeffs
        .iter()
        .any(|c| !c.is_zero() && c.homogeneous_degree() != Some(degree))
    {
        return Err(DivisorError::BadDerivation { expected: n_vars });
    }
    let regular = syzygy_is_regular(&components)?;
    Ok(Syzygy {
        components,
        degree,
        regular,
    })
}

/// `⟨yA - xB, zA - xC, zB - yC⟩`, in that order.
pub fn i_abc(s: &Syzygy) -> Vec<Polynomial> {
    let [a, b, c] = [&s.components[0], &s.components[1], &s.components[2]];
    let ctx = a.context();
    let (x, y, z) = (
        Polynomial::var(ctx, 0),
        Polynomial::var(ctx, 1),
        Polynomial::var(ctx, 2),
    );
    vec![&(&y * a) - &(&x * b), &(&z * a) - &(&x * c), &(&z * b) - &(&y * c)]
}

pub(crate) fn require_planar(ctx: &Ctx) -> Result<(), DivisorError> {
    if ctx.n_vars() != 3 {
        return Err(DivisorError::NotPlanar { found: ctx.n_vars() });
    }
    Ok(())
}
