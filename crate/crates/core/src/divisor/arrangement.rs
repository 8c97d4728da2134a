use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{require_planar, DivisorError, PlaneDivisor, Syzygy};
use crate::groebner::intersect_many;
use crate::poly::{monomials_of_degree, Ctx, Monomial, Polynomial, Rational, RationalMatrix};
use crate::syzygy::brute_force_syzygies;

/// `V(L₁⋯L_n)` for pairwise non-proportional linear forms.
#[derive(Debug, Clone, PartialEq)]
pub struct LineArrangement {
    linear_forms: Vec<Polynomial>,
}

impl LineArrangement {
    pub fn new(forms: Vec<Polynomial>) -> Result<Self, DivisorError> {
        let mut seen: Vec<Vec<Rational>> = Vec::new();
        for (index, f) in forms.iter().enumerate() {
            if f.homogeneous_degree() != Some(1) {
                return Err(DivisorError::NotLinear { index });
            }
            let c = normalize(&coefficients(f));
            if let Some(first) = seen.iter().position(|s| *s == c) {
                return Err(DivisorError::DuplicateLine { first, second: index });
            }
            seen.push(c);
        }
        if forms.is_empty() {
            return Err(DivisorError::TooFewLines { need: 1, found: 0 });
        }
        Ok(LineArrangement { linear_forms: forms })
    }

    pub fn linear_forms(&self) -> &[Polynomial] {
        &self.linear_forms
    }

    pub fn len(&self) -> usize {
        self.linear_forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.linear_forms.is_empty()
    }

    pub fn context(&self) -> &Ctx {
        self.linear_forms[0].context()
    }

    pub fn divisor(&self) -> Result<PlaneDivisor, DivisorError> {
        PlaneDivisor::from_factors(self.linear_forms.clone())
    }

    /// Rank of the coefficient matrix equals the number of variables.
    pub fn is_essential(&self) -> bool {
        let rows: Vec<Vec<Rational>> = self.linear_forms.iter().map(coefficients).collect();
        RationalMatrix::from_rows(rows).rank() == self.context().n_vars()
    }
}

fn coefficients(f: &Polynomial) -> Vec<Rational> {
    let n = f.n_vars();
    (0..n).map(|i| f.coeff(&Monomial::var(n, i))).collect()
}

/// Scales so the first nonzero entry is 1.
fn normalize(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|c| c / &lead).collect()
        }
    }
}

/// Rational point of projective space, first nonzero coordinate 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(Vec<Rational>);

impl ProjectivePoint {
    /// `None` for the zero vector.
    pub fn new(coords: Vec<Rational>) -> Option<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(ProjectivePoint(normalize(&coords)))
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    pub fn lies_on(&self, f: &Polynomial) -> bool {
        f.evaluate(&self.0).is_zero()
    }

    /// Linear generators of the ideal of the point.
    pub fn ideal(&self, ctx: &Ctx) -> Vec<Polynomial> {
        let n = self.0.len();
        RationalMatrix::from_rows(vec![self.0.clone()])
            .nullspace()
            .into_iter()
            .map(|v| Polynomial::from_terms(ctx, v.into_iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c))))
            .collect()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

/// Reduced singular scheme of a line arrangement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularLocus {
    pub points: Vec<ProjectivePoint>,
    /// Number of lines through each point.
    pub multiplicities: Vec<usize>,
    pub radical_ideal: Vec<Polynomial>,
    pub degree: usize,
    pub alpha: u32,
}

pub fn singular_locus(a: &LineArrangement) -> Result<SingularLocus, DivisorError> {
    if a.len() < 2 {
        return Err(DivisorError::TooFewLines {
            need: 2,
            found: a.len(),
        });
    }
    let ctx = a.context().clone();
    require_planar(&ctx)?;
    let coeffs: Vec<Vec<Rational>> = a.linear_forms.iter().map(coefficients).collect();
    let mut found: BTreeMap<ProjectivePoint, usize> = BTreeMap::new();
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            let p = ProjectivePoint::new(cross(&coeffs[i], &coeffs[j])).expect("lines are distinct");
            found.entry(p).or_insert(0);
        }
    }
    for (p, m) in found.iter_mut() {
        *m = a.linear_forms.iter().filter(|l| p.lies_on(l)).count();
    }
    let (points, multiplicities): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    let ideals: Vec<Vec<Polynomial>> = points.iter().map(|p| p.ideal(&ctx)).collect();
    let radical_ideal = intersect_many(&ctx, &ideals)?;
    let alpha = least_vanishing_degree(&points);
    Ok(SingularLocus {
        degree: points.len(),
        points,
        multiplicities,
        radical_ideal,
        alpha,
    })
}

fn cross(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Least `e` such that some nonzero form of degree `e` vanishes on all
/// points, from the rank of the evaluation matrix.
fn least_vanishing_degree(points: &[ProjectivePoint]) -> u32 {
    let Some(first) = points.first() else { return 0 };
    let n = first.0.len();
    let mut e = 1;
    loop {
        let monos = monomials_of_degree(n, e);
        let rows: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| monos.iter().map(|m| eval_monomial(m, &p.0)).collect())
            .collect();
        if RationalMatrix::from_rows(rows).rank() < monos.len() {
            return e;
        }
        e += 1;
    }
}

fn eval_monomial(m: &Monomial, p: &[Rational]) -> Rational {
    m.exps().iter().zip(p).fold(Rational::one(), |acc, (&e, c)| {
        acc * num_traits::pow(c.clone(), e as usize)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearPencil {
    /// A degree-1 syzygy on the partials exists.
    pub detected: bool,
    /// Some point lies on at least `n - 1` of the lines.
    pub combinatorial: bool,
    pub essential: bool,
    pub linear_syzygy: Option<Syzygy>,
}

/// Near-pencil test from the degree-1 syzygies of the Jacobian ideal,
/// cross-checked against the incidence structure.
pub fn near_pencil_detect(a: &LineArrangement) -> Result<NearPencil, DivisorError> {
    if a.len() < 3 {
        return Err(DivisorError::TooFewLines {
            need: 3,
            found: a.len(),
        });
    }
    require_planar(a.context())?;
    let d = a.divisor()?;
    let grad = d.defining_polynomial().gradient();
    let slices = brute_force_syzygies(&grad, 1)?;
    let linear_syzygy = slices[1]
        .tuples
        .first()
        .map(|t| {
            let lead = t
                .iter()
                .find(|c| !c.is_zero())
                .and_then(|c| c.leading())
                .map(|(_, c)| c.clone());
            let inv = lead.map_or_else(Rational::one, |c| c.recip());
            Syzygy::new(t.iter().map(|c| c.scale(&inv)).collect())
        })
        .transpose()?;
    let locus = singular_locus(a)?;
    let combinatorial = locus.multiplicities.iter().any(|&m| m + 1 >= a.len());
    Ok(NearPencil {
        detected: linear_syzygy.is_some(),
        combinatorial,
        essential: a.is_essential(),
        linear_syzygy,
    })
}
