#![allow(dead_code)]

use freecurve::divisor::{analyze_freeness, milnor_tjurina, LineArrangement, PlaneDivisor, Syzygy};
use freecurve::groebner::{is_regular_sequence, normal_form, reduced_groebner_basis, s_polynomial, MonomialOrder};
use freecurve::io::{parse_document, parse_polynomial, CORPUS};
use freecurve::poly::{rat, Ctx, Monomial, Polynomial, RationalMatrix, VariableContext};
use freecurve::syzygy::{brute_force_syzygies, first_syzygies};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const CASES: u32 = 256;

pub fn runner(seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn p(ctx: &Ctx, s: &str) -> Polynomial {
    parse_polynomial(s, ctx).unwrap()
}

pub fn ps(ctx: &Ctx, list: &[&str]) -> Vec<Polynomial> {
    list.iter().map(|s| p(ctx, s)).collect()
}

/// Every corpus entry as a divisor, by name.
pub fn corpus_divisors() -> Vec<(&'static str, PlaneDivisor)> {
    CORPUS
        .iter()
        .map(|e| {
            let input = parse_document(e.text, None).unwrap();
            let d = PlaneDivisor::new(
                input
                    .polynomials
                    .iter()
                    .fold(Polynomial::one(&input.ctx), |a, b| &a * b),
            )
            .unwrap();
            let d = match input.factors {
                Some(f) => d.with_factors(f).unwrap(),
                None => d,
            };
            (e.name, d)
        })
        .collect()
}

pub fn corpus_divisor(name: &str) -> PlaneDivisor {
    corpus_divisors().into_iter().find(|(n, _)| *n == name).unwrap().1
}

/// Sparse polynomial in 3 variables with exponents below 4.
pub fn any_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..4, 0u32..4, 0u32..4, -9i64..=9), 0..6).prop_map(|terms| {
        let ctx = VariableContext::xyz();
        Polynomial::from_terms(
            &ctx,
            terms
                .into_iter()
                .map(|(a, b, c, k)| (Monomial::new(vec![a, b, c]), rat(k))),
        )
    })
}

/// Homogeneous polynomial in 3 variables of degree `lo..=hi`, possibly zero.
pub fn homogeneous_poly(lo: u32, hi: u32) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(|d| {
        let monos = freecurve::poly::monomials_of_degree(3, d);
        let n = monos.len();
        prop::collection::vec((0..n, -4i64..=4), 1..5).prop_map(move |picks| {
            let ctx = VariableContext::xyz();
            Polynomial::from_terms(&ctx, picks.into_iter().map(|(i, c)| (monos[i].clone(), rat(c))))
        })
    })
}

pub fn nonzero_homogeneous(lo: u32, hi: u32) -> impl Strategy<Value = Polynomial> {
    homogeneous_poly(lo, hi).prop_filter("nonzero", |p| !p.is_zero())
}

/// Lines with small integer coefficients; duplicates are dropped.
pub fn random_arrangement(min: usize, max: usize) -> impl Strategy<Value = Option<LineArrangement>> {
    prop::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), min..=max).prop_map(|coeffs| {
        let ctx = VariableContext::xyz();
        let forms: Vec<Polynomial> = coeffs
            .into_iter()
            .map(|(a, b, c)| {
                Polynomial::from_terms(
                    &ctx,
                    [(0, a), (1, b), (2, c)]
                        .into_iter()
                        .map(|(i, k)| (Monomial::var(3, i), rat(k))),
                )
            })
            .collect();
        LineArrangement::new(forms).ok()
    })
}

pub fn invertible_matrix() -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, 9)
        .prop_map(|e| RationalMatrix::from_i64(3, 3, &e))
        .prop_filter("invertible", |m| m.rank() == 3)
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

/// All S-polynomials of the reduced basis of a random ideal reduce to zero.
pub fn suite_s_polynomials() -> Result<usize, String> {
    let strat = (prop::collection::vec(nonzero_homogeneous(1, 3), 1..4), prop::bool::ANY);
    runner(11)
        .run(&strat, |(gens, lex)| {
            let order = if lex {
                MonomialOrder::Lex
            } else {
                MonomialOrder::Grevlex
            };
            let gb = reduced_groebner_basis(&gens, order).unwrap();
            let g = gb.generators();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    let s = s_polynomial(&g[i], &g[j], order);
                    if !normal_form(&s, &gb).is_zero() {
                        return Err(fail(format!("S({}, {}) does not reduce to 0", g[i], g[j])));
                    }
                }
            }
            for f in &gens {
                prop_assert!(normal_form(f, &gb).is_zero());
            }
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}

/// The reduced basis does not depend on generator order or on adding
/// combinations of the generators.
pub fn suite_basis_uniqueness() -> Result<usize, String> {
    let strat = (
        prop::collection::vec(nonzero_homogeneous(1, 3), 2..4),
        any::<prop::sample::Index>(),
        -3i64..=3,
    );
    runner(12)
        .run(&strat, |(gens, idx, k)| {
            let gb = reduced_groebner_basis(&gens, MonomialOrder::Grevlex).unwrap();
            let mut shuffled = gens.clone();
            shuffled.rotate_left(idx.index(gens.len()));
            shuffled.reverse();
            let last = shuffled.len() - 1;
            if shuffled[0].homogeneous_degree() == shuffled[last].homogeneous_degree() {
                shuffled[0] = &shuffled[0] + &shuffled[last].scale(&rat(k));
                if shuffled[0].is_zero() {
                    return Ok(());
                }
            }
            let other = reduced_groebner_basis(&shuffled, MonomialOrder::Grevlex).unwrap();
            prop_assert_eq!(gb.generators(), other.generators());
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}

/// Degree-slice dimensions of the syzygy module against the linear-algebra
/// oracle, on random triples of forms.
pub fn suite_syzygy_slices_random() -> Result<usize, String> {
    let strat = prop::collection::vec(nonzero_homogeneous(1, 2), 2..4);
    runner(13)
        .run(&strat, |gens| {
            let Ok(m) = first_syzygies(&gens) else {
                return Ok(());
            };
            for s in &brute_force_syzygies(&gens, 4).unwrap() {
                prop_assert_eq!(s.dimension, m.dimension_in_degree(s.degree), "degree {}", s.degree);
            }
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}

/// Same comparison on corpus Jacobian ideals and a few fixed ideals, up to
/// cofactor degree 8.
pub fn corpus_slice_ideals() -> Vec<(String, Vec<Polynomial>)> {
    let mut out: Vec<(String, Vec<Polynomial>)> = corpus_divisors()
        .into_iter()
        .map(|(n, d)| (n.to_string(), d.defining_polynomial().gradient()))
        .collect();
    let ctx = VariableContext::xyz();
    out.push(("maximal ideal".into(), ps(&ctx, &["x", "y", "z"])));
    out.push(("conic monomials".into(), ps(&ctx, &["x^2", "x*y", "y^2"])));
    out.push(("twisted cubic".into(), ps(&ctx, &["x*z-y^2", "x*y-z^2", "x^2-y*z"])));
    out
}

pub fn check_corpus_slices(max_degree: u32) -> Result<usize, String> {
    let ideals = corpus_slice_ideals();
    for (name, gens) in &ideals {
        let m = first_syzygies(gens).map_err(|e| format!("{name}: {e}"))?;
        let brute = brute_force_syzygies(gens, max_degree).map_err(|e| format!("{name}: {e}"))?;
        for s in &brute {
            let got = m.dimension_in_degree(s.degree);
            if got != s.dimension {
                return Err(format!(
                    "{name}: degree {} has {} vs oracle {}",
                    s.degree, got, s.dimension
                ));
            }
        }
    }
    Ok(ideals.len())
}

/// On free arrangements the maximal minors of the syzygy matrix give back
/// the partials up to one scalar.
pub fn suite_hilbert_burch() -> Result<usize, String> {
    let mut free_seen = 0usize;
    for (name, d) in corpus_divisors() {
        if d.context().n_vars() != 3 {
            continue;
        }
        let r = analyze_freeness(&d).map_err(|e| e.to_string())?;
        if r.is_free && !r.smooth {
            if !r.syzygy_matrix.minors_reconstruct_source() {
                return Err(format!("{name}: minors do not reconstruct the partials"));
            }
            free_seen += 1;
        }
    }
    runner(14)
        .run(&random_arrangement(3, 6), |a| {
            let Some(a) = a else { return Ok(()) };
            let d = a.divisor().unwrap();
            let m = first_syzygies(&d.defining_polynomial().gradient()).unwrap();
            if m.n_columns() == 2 {
                prop_assert!(m.minors_reconstruct_source(), "{}", d.defining_polynomial());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(free_seen)
}

/// `x·∂ₓp + y·∂ᵧp + z·∂_zp = deg(p)·p` for random forms.
pub fn suite_euler() -> Result<usize, String> {
    runner(15)
        .run(&nonzero_homogeneous(0, 6), |p| {
            prop_assert!(p.euler_check().unwrap());
            let ctx = p.context().clone();
            let lhs = (0..3).fold(Polynomial::zero(&ctx), |acc, i| {
                &acc + &(&Polynomial::var(&ctx, i) * &p.partial_derivative(i).unwrap())
            });
            let d = p.homogeneous_degree().unwrap() as i64;
            prop_assert_eq!(lhs, p.scale(&rat(d)));
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}

/// Milnor total at least the Tjurina total, on the corpus and on random
/// arrangements.
pub fn suite_milnor_tjurina() -> Result<usize, String> {
    for (name, d) in corpus_divisors() {
        if d.context().n_vars() != 3 {
            continue;
        }
        let m = milnor_tjurina(&d).map_err(|e| format!("{name}: {e}"))?;
        if m.milnor_total < m.tjurina_total {
            return Err(format!(
                "{name}: milnor {} < tjurina {}",
                m.milnor_total, m.tjurina_total
            ));
        }
    }
    runner(16)
        .run(&random_arrangement(3, 5), |a| {
            let Some(a) = a else { return Ok(()) };
            let d = a.divisor().unwrap();
            let m = milnor_tjurina(&d).map_err(|e| fail(format!("{}: {e}", d.defining_polynomial())))?;
            prop_assert!(m.milnor_total >= m.tjurina_total);
            // transverse lines: μ = τ = (m-1)² at every point
            prop_assert_eq!(m.milnor_total, m.tjurina_total);
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}

/// Transport of a regular syzygy under a constant change of generators.
pub fn suite_basis_change() -> Result<usize, String> {
    let witnesses: Vec<(Vec<Polynomial>, Syzygy)> = corpus_divisors()
        .into_iter()
        .filter(|(_, d)| d.context().n_vars() == 3)
        .filter_map(|(_, d)| {
            let r = analyze_freeness(&d).ok()?;
            let w = r.regular_syzygy?.witness?;
            Some((d.defining_polynomial().gradient(), w))
        })
        .collect();
    let n = witnesses.len();
    runner(17)
        .run(&(0..n, invertible_matrix()), |(k, m)| {
            let (f, s) = &witnesses[k];
            let ctx = f[0].context().clone();
            let combo = |row: &dyn Fn(usize, usize) -> freecurve::poly::Rational, v: &[Polynomial], j: usize| {
                (0..3).fold(Polynomial::zero(&ctx), |acc, i| &acc + &v[i].scale(&row(i, j)))
            };
            // g_j = Σ_i f_i M_ij, s'_j = Σ_k (M⁻¹)_jk s_k
            let inv = m.inverse().unwrap();
            let g: Vec<Polynomial> = (0..3).map(|j| combo(&|i, j| m.get(i, j).clone(), f, j)).collect();
            let s2: Vec<Polynomial> = (0..3)
                .map(|j| combo(&|kk, j| inv.get(j, kk).clone(), &s.components, j))
                .collect();
            let rel = (0..3).fold(Polynomial::zero(&ctx), |acc, j| &acc + &(&s2[j] * &g[j]));
            prop_assert!(rel.is_zero());
            let regular = s2.iter().all(|c| !c.is_zero()) && is_regular_sequence(&s2).unwrap();
            prop_assert_eq!(regular, s.regular);
            Ok(())
        })
        .map(|_| CASES as usize)
        .map_err(|e| e.to_string())
}
