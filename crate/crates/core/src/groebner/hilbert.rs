use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::{Monomial, Rational};

/// Hilbert series data of a graded quotient `R/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Numerator of the Hilbert series over `(1-t)^n_vars`, ascending powers.
    pub series_numerator: Vec<i64>,
    /// Numerator over `(1-t)^krull_dimension` after cancelling `(1-t)` factors.
    pub reduced_numerator: Vec<i64>,
    pub krull_dimension: usize,
    /// Hilbert polynomial coefficients, ascending powers of the degree variable.
    #[serde(serialize_with = "ser_rationals")]
    pub hilbert_polynomial: Vec<Rational>,
    /// Degree (multiplicity); for one-dimensional quotients this is the
    /// constant value of the Hilbert polynomial.
    pub scheme_degree: u64,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl HilbertData {
    /// Hilbert function value `dim (R/I)_k`, read off the series.
    pub fn hilbert_function(&self, n_vars: usize, k: u32) -> i64 {
        // coefficient of t^k in N(t) / (1-t)^n
        let k = k as i64;
        self.series_numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| (*i as i64) <= k)
            .map(|(i, &a)| a * binomial(k - i as i64 + n_vars as i64 - 1, n_vars as i64 - 1))
            .sum()
    }

    pub fn evaluate_polynomial(&self, k: i64) -> Rational {
        let kk = Rational::from_integer(k.into());
        self.hilbert_polynomial
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &kk + c)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if n < k || n < 0 {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `R/⟨gens⟩` over `(1-t)^n` for a
/// monomial ideal, by pivot splitting on a variable:
/// `N(I) = N(I + ⟨x⟩) + t·N(I : x)`.
pub(crate) fn series_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    numerator_rec(gens)
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return trim(gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        }));
    }
    // pivot on the variable occurring in the most generators
    let n = gens[0].n_vars();
    let var = (0..n)
        .max_by_key(|&v| (gens.iter().filter(|g| g.exp(v) > 0).count(), std::cmp::Reverse(v)))
        .unwrap();
    let x = Monomial::var(n, var);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(var) == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exp(var) > 0 {
                x.quotient_of(g).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();
    let a = numerator_rec(minimalize(plus));
    let b = numerator_rec(minimalize(colon));
    let shifted: Vec<i64> = std::iter::once(0).chain(b).collect();
    trim(poly_add(&a, &shifted))
}

pub(crate) fn hilbert_from_leading(leading: &[Monomial], n_vars: usize) -> HilbertData {
    let series = if leading.is_empty() {
        vec![1]
    } else {
        series_numerator(leading)
    };
    if series.iter().all(|c| *c == 0) {
        return HilbertData {
            series_numerator: vec![0],
            reduced_numerator: vec![0],
            krull_dimension: 0,
            hilbert_polynomial: Vec::new(),
            scheme_degree: 0,
        };
    }
    // divide by (1 - t) while t = 1 is a root
    let mut q = series.clone();
    let mut cancelled = 0;
    while q.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q = (1 - t)·r  ⇒  r_k = Σ_{i≤k} q_i
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = 0;
        for c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        cancelled += 1;
    }
    let dim = n_vars - cancelled;
    let degree: i64 = q.iter().sum();
    let hp = hilbert_polynomial(&q, dim);
    HilbertData {
        series_numerator: series,
        reduced_numerator: q,
        krull_dimension: dim,
        hilbert_polynomial: hp,
        scheme_degree: if dim == 0 { 0 } else { degree as u64 },
    }
}

/// `Σ qᵢ·C(k - i + D - 1, D - 1)` expanded as a polynomial in `k`.
fn hilbert_polynomial(q: &[i64], dim: usize) -> Vec<Rational> {
    if dim == 0 {
        return Vec::new();
    }
    let mut total = vec![Rational::zero(); dim];
    let mut fact = Rational::one();
    for j in 1..dim {
        fact *= Rational::from_integer((j as i64).into());
    }
    for (i, &qi) in q.iter().enumerate() {
        if qi == 0 {
            continue;
        }
        // Π_{j=1}^{D-1} (k - i + j)
        let mut p = vec![Rational::one()];
        for j in 1..dim {
            let c = Rational::from_integer((j as i64 - i as i64).into());
            let mut next = vec![Rational::zero(); p.len() + 1];
            for (e, a) in p.iter().enumerate() {
                next[e] += a * &c;
                next[e + 1] += a.clone();
            }
            p = next;
        }
        let scale = Rational::from_integer(qi.into()) / &fact;
        for (e, a) in p.into_iter().enumerate() {
            total[e] += a * &scale;
        }
    }
    while total.len() > 1 && total.last().unwrap().is_zero() {
        total.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn double_point() {
        let h = hilbert_from_leading(&[m(&[2, 0, 0]), m(&[0, 1, 0])], 3);
        assert_eq!(h.krull_dimension, 1);
        assert_eq!(h.scheme_degree, 2);
        assert_eq!(h.hilbert_polynomial, vec![Rational::from_integer(2.into())]);
    }

    #[test]
    fn three_coordinate_points() {
        let h = hilbert_from_leading(&[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])], 3);
        assert_eq!(h.series_numerator, vec![1, 0, -3, 2]);
        assert_eq!(h.scheme_degree, 3);
        assert_eq!(h.hilbert_function(3, 0), 1);
        assert_eq!(h.hilbert_function(3, 1), 3);
        assert_eq!(h.hilbert_function(3, 5), 3);
    }

    #[test]
    fn plane_curve_degree() {
        // R/(x^3) in 3 vars: a triple line, Hilbert polynomial 3k
        let h = hilbert_from_leading(&[m(&[3, 0, 0])], 3);
        assert_eq!(h.krull_dimension, 2);
        assert_eq!(h.scheme_degree, 3);
        assert_eq!(h.evaluate_polynomial(10), Rational::from_integer(30.into()));
    }

    #[test]
    fn artinian() {
        let h = hilbert_from_leading(&[m(&[1, 0]), m(&[0, 2])], 2);
        assert_eq!(h.krull_dimension, 0);
        assert_eq!(h.scheme_degree, 0);
        assert_eq!(h.reduced_numerator, vec![1, 1]);
    }
}
