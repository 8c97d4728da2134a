use std::cmp::Ordering;

use crate::poly::Monomial;

/// Term order on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Pure lexicographic with `x₀ > x₁ > …`.
    Lex,
    /// Elimination order: grevlex on the first `k` variables, ties broken by
    /// grevlex on the rest.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Block(k) => {
                let n = a.n_vars();
                let k = k.min(n);
                a.cmp_grevlex_range(b, 0, k).then_with(|| a.cmp_grevlex_range(b, k, n))
            }
        }
    }

    pub(crate) fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

/// A basis term `m·e_comp` of a free module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub comp: usize,
}

/// Order on terms of a free module `R^r`.
///
/// Terms are compared by block (components below `head` dominate), then by
/// shifted degree for graded orders, then by the monomial order, and finally
/// by component (lower index is larger).
#[derive(Debug, Clone)]
pub(crate) struct ModuleOrder {
    pub mono: MonomialOrder,
    pub shifts: Vec<i64>,
    pub head: Option<usize>,
}

impl ModuleOrder {
    pub fn for_ideal(mono: MonomialOrder) -> Self {
        ModuleOrder {
            mono,
            shifts: vec![0],
            head: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        if let Some(h) = self.head {
            let ba = a.comp < h;
            let bb = b.comp < h;
            if ba != bb {
                return if ba { Ordering::Greater } else { Ordering::Less };
            }
        }
        if self.mono.is_graded() {
            let da = a.mono.degree() as i64 + self.shifts[a.comp];
            let db = b.mono.degree() as i64 + self.shifts[b.comp];
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.mono.cmp(&a.mono, &b.mono).then_with(|| b.comp.cmp(&a.comp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_order_eliminates_leading_variable() {
        let t = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 5, 5]);
        assert_eq!(MonomialOrder::Block(1).cmp(&t, &big), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&t, &big), Ordering::Less);
    }

    #[test]
    fn lex_order() {
        let a = Monomial::new(vec![1, 0, 0]);
        let b = Monomial::new(vec![0, 3, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
    }
}
