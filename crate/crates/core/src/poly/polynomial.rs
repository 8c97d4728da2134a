use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::context::{same_context, Ctx};
use super::matrix::RationalMatrix;
use super::monomial::Monomial;
use super::{PolyError, Rational};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending grevlex order with no zero
/// coefficients, so two equal polynomials are structurally equal.
#[derive(Clone)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        Self::from_terms(ctx, vec![(Monomial::one(ctx.n_vars()), c)])
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        Self::from_terms(ctx, vec![(Monomial::var(ctx.n_vars(), i), Rational::one())])
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ctx, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, collecting duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.n_vars(), ctx.n_vars());
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Ctx, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Trusts that `terms` are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(ctx: &Ctx, terms: Vec<(Monomial, Rational)>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n_vars(&self) -> usize {
        self.ctx.n_vars()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Coefficient of monomial `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp_grevlex(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Leading term in grevlex order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` when every term has total degree `d`; `None` for the zero
    /// polynomial or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Self::from_sorted_unchecked(&self.ctx, terms)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.ctx.to_string(),
                right: other.ctx.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp_grevlex(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self::from_sorted_unchecked(&self.ctx, out)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::from_map(&self.ctx, acc)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Self::from_sorted_unchecked(&self.ctx, terms)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        // multiplication by a monomial preserves grevlex order
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Self::from_sorted_unchecked(&self.ctx, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Scales so the grevlex-leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.n_vars() {
            return Err(PolyError::VariableOutOfRange {
                index: var,
                n_vars: self.n_vars(),
            });
        }
        let terms = self.terms.iter().filter(|(m, _)| m.exp(var) > 0).map(|(m, c)| {
            let e = m.exp(var);
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            (Monomial::new(exps), c * Rational::from_integer(e.into()))
        });
        Ok(Self::from_terms(&self.ctx, terms))
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.n_vars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Checks `deg(F)·F = Σ xᵢ·∂F/∂xᵢ` exactly.
    pub fn euler_check(&self) -> Result<bool, PolyError> {
        let d = self.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
        let mut rhs = Polynomial::zero(&self.ctx);
        for (i, g) in self.gradient().iter().enumerate() {
            rhs = rhs.merge(&Polynomial::var(&self.ctx, i).mul_unchecked(g), false);
        }
        Ok(self.scale(&Rational::from_integer(d.into())) == rhs)
    }

    /// Substitutes 1 for `var`; the result lives in the context without `var`.
    pub fn dehomogenize(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.n_vars() {
            return Err(PolyError::VariableOutOfRange {
                index: var,
                n_vars: self.n_vars(),
            });
        }
        let ctx = self.ctx.without(var)?;
        let terms = self.terms.iter().map(|(m, c)| (m.without(var), c.clone()));
        Ok(Self::from_terms(&ctx, terms))
    }

    /// Re-embeds into `ctx`, where `map[i]` gives the index in `ctx` of this
    /// polynomial's variable `i`.
    pub fn embed(&self, ctx: &Ctx, map: &[usize]) -> Polynomial {
        let n = ctx.n_vars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            for (i, e) in m.exps().iter().enumerate() {
                exps[map[i]] += e;
            }
            (Monomial::new(exps), c.clone())
        });
        Self::from_terms(ctx, terms)
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.n_vars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars(),
                found: images.len(),
            });
        }
        let target = images
            .first()
            .map(|p| p.ctx.clone())
            .unwrap_or_else(|| self.ctx.clone());
        for im in images {
            if !same_context(&im.ctx, &target) {
                return Err(PolyError::ContextMismatch {
                    left: target.to_string(),
                    right: im.ctx.to_string(),
                });
            }
        }
        // cache powers of each image
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul_unchecked(&powers[i][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Linear change of coordinates `xᵢ ↦ Σⱼ M[i][j]·xⱼ`.
    pub fn coordinate_change(&self, m: &RationalMatrix) -> Result<Polynomial, PolyError> {
        let n = self.n_vars();
        if m.rows() != n || m.cols() != n {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                found: m.rows(),
            });
        }
        if m.rank() != n {
            return Err(PolyError::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (Monomial::var(n, j), m.get(i, j).clone()));
                Polynomial::from_terms(&self.ctx, terms)
            })
            .collect();
        self.substitute(&images)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by `d`, if `d` divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.check_ctx(d)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ctx);
        let (lm, lc) = d.terms[0].clone();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(q) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let k = &c / &lc;
            quot = quot.merge(&Polynomial::monomial(&self.ctx, q.clone(), k.clone()), false);
            rem = rem.merge(&d.mul_monomial(&q, &k), true);
        }
        Ok(Some(quot))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ctx.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ctx.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

// Operator impls panic on a context mismatch; use the checked_* methods
// when the contexts are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Product of a sequence of polynomials (1 for an empty sequence).
pub fn product(ctx: &Ctx, factors: &[Polynomial]) -> Polynomial {
    factors.iter().fold(Polynomial::one(ctx), |acc, f| &acc * f)
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_in, VariableContext};

    fn p(s: &str) -> Polynomial {
        parse_in(&VariableContext::xyz(), s)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
    }

    #[test]
    fn tangent_conic_product() {
        assert_eq!(&p("y") * &p("x^2+y*z"), p("x^2*y+y^2*z"));
    }

    #[test]
    fn braid_expansion() {
        let q = p("x*y*z*(x-y)*(x-z)*(y-z)");
        assert_eq!(q.homogeneous_degree(), Some(6));
        let expected = p("x^3*y^2*z - x^3*y*z^2 - x^2*y^3*z + x^2*y*z^3 + x*y^3*z^2 - x*y^2*z^3");
        assert_eq!(q, expected);
        assert_eq!(q.len(), 6);
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x*y*z").partial_derivative(0).unwrap(), p("y*z"));
        assert!(matches!(
            p("x").partial_derivative(3),
            Err(PolyError::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x^2+y*z").homogeneous_degree(), Some(2));
        assert_eq!(p("x^2+y").homogeneous_degree(), None);
        assert_eq!(Polynomial::zero(&VariableContext::xyz()).homogeneous_degree(), None);
    }

    #[test]
    fn euler() {
        assert!(p("x*y").euler_check().unwrap());
        assert!(p("x*y*z*(x-y)*(x-z)*(y-z)").euler_check().unwrap());
        assert_eq!(p("x^2+y").euler_check(), Err(PolyError::NotHomogeneous));
    }

    #[test]
    fn dehomogenization() {
        let f = p("y*(x^2+y*z)").dehomogenize(2).unwrap();
        assert_eq!(f.context().names(), &["x", "y"]);
        assert_eq!(f, parse_in(f.context(), "x^2*y+y^2"));
        assert!(p("z^3").dehomogenize(2).unwrap().is_constant());
        assert_eq!(p("z^3").dehomogenize(2).unwrap().to_string(), "1");
    }

    #[test]
    fn coordinate_swap() {
        let id = RationalMatrix::identity(3);
        let f = p("x^2*y - 3*z^2");
        assert_eq!(f.coordinate_change(&id).unwrap(), f);
        let swap = RationalMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(p("x^2*y").coordinate_change(&swap).unwrap(), p("y^2*x"));
        let sing = RationalMatrix::from_i64(3, 3, &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(f.coordinate_change(&sing), Err(PolyError::SingularMatrix));
    }

    #[test]
    fn context_mismatch() {
        let a = p("x");
        let b = parse_in(&VariableContext::xyzw(), "w");
        assert!(matches!(a.checked_add(&b), Err(PolyError::ContextMismatch { .. })));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("3 - y*z/2 + x^2*y").to_string(), "x^2*y - 1/2*y*z + 3");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let f = p("x^2*y+y^2*z");
        assert_eq!(f.exact_div(&p("y")).unwrap(), Some(p("x^2+y*z")));
        assert_eq!(f.exact_div(&p("x")).unwrap(), None);
    }
}
