//! Reduced Gröbner bases and the ideal toolkit built on them: membership,
//! elimination, intersection, saturation, radical membership, dimension,
//! Hilbert series and the regular-sequence test.

pub(crate) mod engine;
mod hilbert;
mod order;

use thiserror::Error;

use crate::poly::{same_context, Ctx, Monomial, PolyError, Polynomial, Rational};

pub use engine::GbProgress;
pub use hilbert::HilbertData;
pub use order::MonomialOrder;

pub(crate) use engine::Vector;
pub(crate) use order::{ModuleOrder, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("input contains the zero polynomial")]
    ZeroPolynomial,
    #[error("generators must be homogeneous")]
    NotHomogeneous,
    #[error("computation cancelled")]
    Cancelled,
}

/// Reduced Gröbner basis of an ideal under a fixed monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: Ctx,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
    source: Vec<Polynomial>,
}

pub(crate) fn to_vector(p: &Polynomial, comp: usize, order: &ModuleOrder) -> Vector {
    Vector::from_unsorted(
        p.terms()
            .iter()
            .map(|(m, c)| (Term { mono: m.clone(), comp }, c.clone()))
            .collect(),
        order,
    )
}

pub(crate) fn from_vector(ctx: &Ctx, v: &Vector) -> Polynomial {
    Polynomial::from_terms(ctx, v.terms.iter().map(|(t, c)| (t.mono.clone(), c.clone())))
}

fn common_context(gens: &[Polynomial]) -> Result<Option<Ctx>, GroebnerError> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    for g in gens {
        if !same_context(first.context(), g.context()) {
            return Err(PolyError::ContextMismatch {
                left: first.context().to_string(),
                right: g.context().to_string(),
            }
            .into());
        }
    }
    Ok(Some(first.context().clone()))
}

impl GroebnerBasis {
    /// Computes the reduced basis of `⟨gens⟩` in `ctx`.
    pub fn compute(ctx: &Ctx, gens: &[Polynomial], order: MonomialOrder) -> Result<Self, GroebnerError> {
        if let Some(c) = common_context(gens)? {
            if !same_context(&c, ctx) {
                return Err(PolyError::ContextMismatch {
                    left: ctx.to_string(),
                    right: c.to_string(),
                }
                .into());
            }
        }
        let mo = ModuleOrder::for_ideal(order);
        let vecs: Vec<Vector> = gens.iter().map(|g| to_vector(g, 0, &mo)).collect();
        let gb = engine::groebner(&vecs, &mo, None).expect("no hook installed");
        Ok(Self::from_engine(ctx, order, &gb, gens.to_vec()))
    }

    fn from_engine(ctx: &Ctx, order: MonomialOrder, gb: &[Vector], source: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ctx: ctx.clone(),
            order,
            generators: gb.iter().map(|v| from_vector(ctx, v)).collect(),
            leading: gb.iter().map(|v| v.lead().unwrap().mono.clone()).collect(),
            source,
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements, monic under the basis order, ascending by leading term.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn source_generators(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    fn module_order(&self) -> ModuleOrder {
        ModuleOrder::for_ideal(self.order)
    }

    fn vectors(&self) -> Vec<Vector> {
        let mo = self.module_order();
        self.generators.iter().map(|g| to_vector(g, 0, &mo)).collect()
    }

    /// Complete reduction of `p`; zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mo = self.module_order();
        let basis = self.vectors();
        let all: Vec<usize> = (0..basis.len()).collect();
        from_vector(&self.ctx, &engine::reduce(&to_vector(p, 0, &mo), &basis, &all, &mo))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_all(&self, ps: &[Polynomial]) -> bool {
        ps.iter().all(|p| self.contains(p))
    }

    /// Direct Buchberger check: all S-polynomials reduce to zero.
    pub fn verify(&self) -> bool {
        engine::is_groebner(&self.vectors(), &self.module_order())
    }

    /// Krull dimension of `R/I`, or `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_unit_ideal() {
            return None;
        }
        Some(max_independent_set(&self.leading, self.ctx.n_vars()))
    }

    /// Hilbert data of `R/I` computed from the leading-term ideal. Meaningful
    /// for homogeneous ideals under a graded order.
    pub fn hilbert_data(&self) -> HilbertData {
        hilbert::hilbert_from_leading(&self.leading, self.ctx.n_vars())
    }

    /// `dim_Q R/I` when finite (counts standard monomials).
    pub fn quotient_dimension(&self) -> Option<u64> {
        if self.is_unit_ideal() {
            return Some(0);
        }
        let n = self.ctx.n_vars();
        let mut bounds = vec![None; n];
        for m in &self.leading {
            let support: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
            if support.len() == 1 {
                let v = support[0];
                let e = m.exp(v);
                bounds[v] = Some(bounds[v].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
        let mut count = 0u64;
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !self.leading.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == n {
                    return Some(count);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// True when both bases describe the same ideal.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.contains_all(&other.generators) && other.contains_all(&self.generators)
    }
}

/// Largest set of variables containing the support of no leading monomial.
fn max_independent_set(leading: &[Monomial], n: usize) -> usize {
    let supports: Vec<u64> = leading.iter().map(|m| m.support()).collect();
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

pub fn reduced_groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let ctx = common_context(gens)?.ok_or(GroebnerError::Poly(PolyError::EmptyContext))?;
    GroebnerBasis::compute(&ctx, gens, order)
}

/// Leading monomial and coefficient under `order`.
pub fn leading_term(p: &Polynomial, order: MonomialOrder) -> Option<(Monomial, Rational)> {
    p.terms().iter().max_by(|a, b| order.cmp(&a.0, &b.0)).cloned()
}

/// `S(f, g) = (L/lt(f))·f - (L/lt(g))·g` with `L = lcm(lm(f), lm(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (Some((mf, cf)), Some((mg, cg))) = (leading_term(f, order), leading_term(g, order)) else {
        return Polynomial::zero(f.context());
    };
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&mf.quotient_of(&l).unwrap(), &cf.recip());
    let b = g.mul_monomial(&mg.quotient_of(&l).unwrap(), &cg.recip());
    &a - &b
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// Generators of `⟨gens⟩ ∩ Q[x_k, …]` where `k = drop_count`, expressed in
/// the ring of the trailing variables.
pub fn eliminate(gens: &[Polynomial], drop_count: usize) -> Result<Vec<Polynomial>, GroebnerError> {
    let Some(ctx) = common_context(gens)? else {
        return Ok(Vec::new());
    };
    let n = ctx.n_vars();
    if drop_count >= n {
        return Err(PolyError::VariableOutOfRange {
            index: drop_count,
            n_vars: n,
        }
        .into());
    }
    let gb = GroebnerBasis::compute(&ctx, gens, MonomialOrder::Block(drop_count))?;
    let mut tail = ctx.clone();
    for _ in 0..drop_count {
        tail = tail.without(0)?;
    }
    let out = gb
        .generators
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exps()[..drop_count].iter().all(|&e| e == 0))
        })
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::new(m.exps()[drop_count..].to_vec()), c.clone()));
            Polynomial::from_terms(&tail, terms)
        })
        .collect();
    Ok(out)
}

/// Adjoins a fresh leading variable `t`, returning the extended context and
/// the embedding of the original polynomials.
fn adjoin(ctx: &Ctx, ps: &[Polynomial]) -> (Ctx, Vec<Polynomial>) {
    let ext = ctx.with_leading("t");
    let map: Vec<usize> = (1..=ctx.n_vars()).collect();
    let embedded = ps.iter().map(|p| p.embed(&ext, &map)).collect();
    (ext, embedded)
}

fn back_to(ctx: &Ctx, ps: Vec<Polynomial>) -> Vec<Polynomial> {
    let map: Vec<usize> = (0..ctx.n_vars()).collect();
    ps.into_iter().map(|p| p.embed(ctx, &map)).collect()
}

fn reduced_generators(ctx: &Ctx, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
    Ok(GroebnerBasis::compute(ctx, gens, MonomialOrder::Grevlex)?.generators)
}

/// `a ∩ b` via `t·a + (1-t)·b` and elimination of `t`.
pub fn intersect_ideals(a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
    let all: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    let Some(ctx) = common_context(&all)? else {
        return Ok(Vec::new());
    };
    if a.iter().all(|p| p.is_zero()) || b.iter().all(|p| p.is_zero()) {
        return Ok(Vec::new());
    }
    let (ext, ea) = adjoin(&ctx, a);
    let (_, eb) = adjoin(&ctx, b);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let gens: Vec<Polynomial> = ea
        .iter()
        .map(|p| &t * p)
        .chain(eb.iter().map(|p| &one_minus_t * p))
        .collect();
    let elim = eliminate(&gens, 1)?;
    reduced_generators(&ctx, &back_to(&ctx, elim))
}

/// Intersection of a list of ideals (the unit ideal for an empty list).
pub fn intersect_many(ctx: &Ctx, ideals: &[Vec<Polynomial>]) -> Result<Vec<Polynomial>, GroebnerError> {
    let mut iter = ideals.iter();
    let Some(first) = iter.next() else {
        return Ok(vec![Polynomial::one(ctx)]);
    };
    let mut acc = reduced_generators(ctx, first)?;
    for next in iter {
        acc = intersect_ideals(&acc, next)?;
    }
    Ok(acc)
}

/// `i : ⟨g⟩`, as `(i ∩ ⟨g⟩) / g`.
pub fn quotient_by_element(i: &[Polynomial], g: &Polynomial) -> Result<Vec<Polynomial>, GroebnerError> {
    let ctx = g.context().clone();
    if g.is_zero() {
        return Ok(vec![Polynomial::one(&ctx)]);
    }
    let meet = intersect_ideals(i, std::slice::from_ref(g))?;
    let mut out = Vec::with_capacity(meet.len());
    for h in meet {
        out.push(h.exact_div(g)?.expect("element of ⟨g⟩ is divisible by g"));
    }
    reduced_generators(&ctx, &out)
}

/// `i : j = ∩_{g ∈ j} (i : g)`.
pub fn ideal_quotient(i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
    let all: Vec<Polynomial> = i.iter().chain(j).cloned().collect();
    let Some(ctx) = common_context(&all)? else {
        return Ok(Vec::new());
    };
    let parts = j
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| quotient_by_element(i, g))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.is_empty() {
        return Ok(vec![Polynomial::one(&ctx)]);
    }
    intersect_many(&ctx, &parts)
}

/// `i : g^∞` by eliminating `t` from `i + ⟨1 - t·g⟩`.
pub fn saturate_by_element(i: &[Polynomial], g: &Polynomial) -> Result<Vec<Polynomial>, GroebnerError> {
    let ctx = g.context().clone();
    if g.is_zero() {
        return Ok(vec![Polynomial::one(&ctx)]);
    }
    let (ext, mut gens) = adjoin(&ctx, i);
    let (_, eg) = adjoin(&ctx, std::slice::from_ref(g));
    let t = Polynomial::var(&ext, 0);
    gens.push(&Polynomial::one(&ext) - &(&t * &eg[0]));
    let elim = eliminate(&gens, 1)?;
    reduced_generators(&ctx, &back_to(&ctx, elim))
}

/// `i : j^∞ = ∩_{g ∈ j} (i : g^∞)`.
pub fn saturate(i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
    let all: Vec<Polynomial> = i.iter().chain(j).cloned().collect();
    let Some(ctx) = common_context(&all)? else {
        return Ok(Vec::new());
    };
    let nonzero: Vec<&Polynomial> = j.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return reduced_generators(&ctx, i);
    }
    let parts = nonzero
        .iter()
        .map(|g| saturate_by_element(i, g))
        .collect::<Result<Vec<_>, _>>()?;
    intersect_many(&ctx, &parts)
}

/// The homogeneous maximal ideal `⟨x₀, …, x_{n-1}⟩`.
pub fn irrelevant_ideal(ctx: &Ctx) -> Vec<Polynomial> {
    (0..ctx.n_vars()).map(|v| Polynomial::var(ctx, v)).collect()
}

/// Whether `g` vanishes on `V(i)` over the algebraic closure (Rabinowitsch).
pub fn radical_membership(g: &Polynomial, i: &[Polynomial]) -> Result<bool, GroebnerError> {
    let ctx = g.context().clone();
    if let Some(c) = common_context(i)? {
        if !same_context(&c, &ctx) {
            return Err(PolyError::ContextMismatch {
                left: ctx.to_string(),
                right: c.to_string(),
            }
            .into());
        }
    }
    if g.is_zero() {
        return Ok(true);
    }
    let (ext, mut gens) = adjoin(&ctx, i);
    let (_, eg) = adjoin(&ctx, std::slice::from_ref(g));
    let t = Polynomial::var(&ext, 0);
    gens.push(&Polynomial::one(&ext) - &(&t * &eg[0]));
    Ok(GroebnerBasis::compute(&ext, &gens, MonomialOrder::Grevlex)?.is_unit_ideal())
}

/// Krull dimension of `R/⟨i⟩`; `None` for the unit ideal. An empty list is
/// the zero ideal.
pub fn krull_dimension(ctx: &Ctx, i: &[Polynomial]) -> Result<Option<usize>, GroebnerError> {
    Ok(GroebnerBasis::compute(ctx, i, MonomialOrder::Grevlex)?.krull_dimension())
}

/// `n_vars - krull_dimension`; `None` for the unit ideal.
pub fn height(ctx: &Ctx, i: &[Polynomial]) -> Result<Option<usize>, GroebnerError> {
    Ok(krull_dimension(ctx, i)?.map(|d| ctx.n_vars() - d))
}

/// Homogeneous `p₁..p_k` form a regular sequence iff `ht⟨p₁..p_k⟩ = k`.
pub fn is_regular_sequence(polys: &[Polynomial]) -> Result<bool, GroebnerError> {
    let Some(ctx) = common_context(polys)? else {
        return Ok(true);
    };
    for p in polys {
        if p.is_zero() {
            return Err(GroebnerError::ZeroPolynomial);
        }
        if p.homogeneous_degree().is_none() {
            return Err(GroebnerError::NotHomogeneous);
        }
    }
    Ok(height(&ctx, polys)? == Some(polys.len()))
}

/// Hilbert data of `R/⟨i⟩` for homogeneous generators.
pub fn hilbert_data(ctx: &Ctx, i: &[Polynomial]) -> Result<HilbertData, GroebnerError> {
    if i.iter().any(|p| !p.is_homogeneous()) {
        return Err(GroebnerError::NotHomogeneous);
    }
    Ok(GroebnerBasis::compute(ctx, i, MonomialOrder::Grevlex)?.hilbert_data())
}

/// Whether two generator lists describe the same ideal.
pub fn ideals_equal(ctx: &Ctx, a: &[Polynomial], b: &[Polynomial]) -> Result<bool, GroebnerError> {
    let ga = GroebnerBasis::compute(ctx, a, MonomialOrder::Grevlex)?;
    let gb = GroebnerBasis::compute(ctx, b, MonomialOrder::Grevlex)?;
    Ok(ga.generators == gb.generators)
}

#[cfg(test)]
mod tests;
