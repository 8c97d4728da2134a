//! Buchberger's algorithm over free modules `R^r`.
//!
//! Ideals are the rank-one case. Pair handling follows the Gebauer–Möller
//! update; the product criterion is only applied in rank one, where it is
//! valid.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::{ModuleOrder, Term};
use crate::poly::{Monomial, Rational};

/// Module vector with terms sorted descending by the active order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<(Term, Rational)>,
}

impl Vector {
    pub fn from_unsorted(mut terms: Vec<(Term, Rational)>, order: &ModuleOrder) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        // collect duplicates
        let mut out: Vec<(Term, Rational)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first().map(|(t, _)| t)
    }

    pub fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for (_, a) in self.terms.iter_mut() {
                    *a *= &inv;
                }
            }
        }
        self
    }

    /// `self + other`.
    pub fn add(&self, other: &Vector, order: &ModuleOrder) -> Vector {
        Vector {
            terms: merge_sub(&self.terms, &other.terms, None, &-Rational::one(), order),
        }
    }

    /// `self - c·m·other`.
    pub fn sub_mul(&self, other: &Vector, m: &Monomial, c: &Rational, order: &ModuleOrder) -> Vector {
        Vector {
            terms: merge_sub(&self.terms, &other.terms, Some(m), c, order),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| {
                    (
                        Term {
                            mono: t.mono.mul(m),
                            comp: t.comp,
                        },
                        a * c,
                    )
                })
                .collect(),
        }
    }
}

/// Merges `a - c·m·b` where both inputs are sorted descending.
fn merge_sub(
    a: &[(Term, Rational)],
    b: &[(Term, Rational)],
    m: Option<&Monomial>,
    c: &Rational,
    order: &ModuleOrder,
) -> Vec<(Term, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let shifted = |t: &Term| match m {
        Some(m) => Term {
            mono: t.mono.mul(m),
            comp: t.comp,
        },
        None => t.clone(),
    };
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Term> = b.first().map(|(t, _)| shifted(t));
    while i < a.len() || j < b.len() {
        let ord = match (&bj, i < a.len()) {
            (None, _) => Ordering::Greater,
            (Some(_), false) => Ordering::Less,
            (Some(t), true) => order.cmp(&a[i].0, t),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), -(c * &b[j].1)));
                j += 1;
                bj = b.get(j).map(|(t, _)| shifted(t));
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|(t, _)| shifted(t));
            }
        }
    }
    out
}

fn divides(a: &Term, b: &Term) -> bool {
    a.comp == b.comp && a.mono.divides(&b.mono)
}

/// Fully reduces `v` by the monic elements `basis[idx]` for `idx` in `active`.
pub(crate) fn reduce(v: &Vector, basis: &[Vector], active: &[usize], order: &ModuleOrder) -> Vector {
    let mut rest = v.terms.clone();
    let mut start = 0;
    let mut done: Vec<(Term, Rational)> = Vec::new();
    while start < rest.len() {
        let (t, c) = &rest[start];
        let reducer = active.iter().find(|&&g| divides(basis[g].lead().unwrap(), t));
        match reducer {
            Some(&g) => {
                let q = basis[g].lead().unwrap().mono.quotient_of(&t.mono).unwrap();
                let c = c.clone();
                rest = merge_sub(&rest[start..], &basis[g].terms, Some(&q), &c, order);
                start = 0;
            }
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
        }
    }
    Vector { terms: done }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

/// Progress report handed to the cancellation hook.
#[derive(Debug, Clone, Copy)]
pub struct GbProgress {
    pub basis_size: usize,
    pub pending_pairs: usize,
    pub reductions: usize,
}

pub(crate) type Hook<'a> = Option<&'a mut dyn FnMut(&GbProgress) -> bool>;

/// Computes the reduced Gröbner basis of the module generated by `gens`.
/// Output is monic and sorted ascending by leading term. Returns `None` if
/// the hook asks to stop.
pub(crate) fn groebner(gens: &[Vector], order: &ModuleOrder, mut hook: Hook<'_>) -> Option<Vec<Vector>> {
    let rank_one = order.rank() == 1;
    let mut basis: Vec<Vector> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Vector> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .map(Vector::monic)
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lead().unwrap(), b.lead().unwrap()));
    for g in inputs {
        let h = reduce(&g, &basis, &active, order);
        if h.is_zero() {
            continue;
        }
        basis.push(h.monic());
        update(&mut pairs, &mut active, &basis, basis.len() - 1, rank_one);
    }

    let mut reductions = 0;
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let p = pairs.swap_remove(k);
        let s = s_vector(&basis[p.i], &basis[p.j], &p.lcm, order);
        let h = reduce(&s, &basis, &active, order);
        reductions += 1;
        if !h.is_zero() {
            basis.push(h.monic());
            update(&mut pairs, &mut active, &basis, basis.len() - 1, rank_one);
        }
        if let Some(f) = hook.as_mut() {
            let progress = GbProgress {
                basis_size: active.len(),
                pending_pairs: pairs.len(),
                reductions,
            };
            if !f(&progress) {
                return None;
            }
        }
    }

    Some(interreduce(&basis, &active, order))
}

pub(crate) fn s_vector(f: &Vector, g: &Vector, lcm: &Term, order: &ModuleOrder) -> Vector {
    let mf = f.lead().unwrap().mono.quotient_of(&lcm.mono).unwrap();
    let mg = g.lead().unwrap().mono.quotient_of(&lcm.mono).unwrap();
    let a = f.mul_monomial(&mf, &Rational::one());
    a.sub_mul(g, &mg, &Rational::one(), order)
}

fn update(pairs: &mut Vec<Pair>, active: &mut Vec<usize>, basis: &[Vector], h: usize, rank_one: bool) {
    let lh = basis[h].lead().unwrap().clone();
    let candidates: Vec<Pair> = active
        .iter()
        .filter(|&&g| basis[g].lead().unwrap().comp == lh.comp)
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: Term {
                mono: basis[g].lead().unwrap().mono.lcm(&lh.mono),
                comp: lh.comp,
            },
        })
        .collect();
    let coprime = |p: &Pair| rank_one && basis[p.i].lead().unwrap().mono.is_coprime(&lh.mono);

    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in candidates.iter().enumerate() {
        let dominated = candidates[k + 1..]
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.mono.divides(&p.lcm.mono));
        if coprime(p) || !dominated {
            kept.push(p.clone());
        }
    }
    kept.retain(|p| !coprime(p));

    pairs.retain(|p| {
        if p.lcm.comp != lh.comp || !lh.mono.divides(&p.lcm.mono) {
            return true;
        }
        let li = basis[p.i].lead().unwrap().mono.lcm(&lh.mono);
        let lj = basis[p.j].lead().unwrap().mono.lcm(&lh.mono);
        li == p.lcm.mono || lj == p.lcm.mono
    });
    pairs.extend(kept);

    active.retain(|&g| !divides(&lh, basis[g].lead().unwrap()));
    active.push(h);
}

fn interreduce(basis: &[Vector], active: &[usize], order: &ModuleOrder) -> Vec<Vector> {
    // minimal leading terms
    let mut minimal: Vec<usize> = Vec::new();
    for &g in active {
        let lg = basis[g].lead().unwrap();
        let redundant = active.iter().any(|&o| {
            o != g && {
                let lo = basis[o].lead().unwrap();
                divides(lo, lg) && (lo != lg || o < g)
            }
        });
        if !redundant {
            minimal.push(g);
        }
    }
    let mut out: Vec<Vector> = minimal
        .iter()
        .map(|&g| {
            let others: Vec<usize> = minimal.iter().copied().filter(|&o| o != g).collect();
            let lead = Vector {
                terms: vec![basis[g].terms[0].clone()],
            };
            let tail = Vector {
                terms: basis[g].terms[1..].to_vec(),
            };
            let tail = reduce(&tail, basis, &others, order);
            lead.add(&tail, order).monic()
        })
        .collect();
    out.sort_by(|a, b| order.cmp(a.lead().unwrap(), b.lead().unwrap()));
    out
}

/// Checks the Buchberger criterion directly: every S-vector of every pair
/// with leading terms in a common component reduces to zero.
pub(crate) fn is_groebner(basis: &[Vector], order: &ModuleOrder) -> bool {
    let all: Vec<usize> = (0..basis.len()).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (li, lj) = (basis[i].lead().unwrap(), basis[j].lead().unwrap());
            if li.comp != lj.comp {
                continue;
            }
            let lcm = Term {
                mono: li.mono.lcm(&lj.mono),
                comp: li.comp,
            };
            let s = s_vector(&basis[i], &basis[j], &lcm, order);
            if !reduce(&s, basis, &all, order).is_zero() {
                return false;
            }
        }
    }
    true
}
