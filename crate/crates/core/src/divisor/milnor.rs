use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{jacobian_ideal, require_planar, DivisorError, PlaneDivisor};
use crate::groebner::{height, krull_dimension, GroebnerBasis, MonomialOrder};
use crate::poly::{Polynomial, RationalMatrix};

const MAX_ATTEMPTS: usize = 5;
const MAX_POWER: u32 = 64;
/// Changes drawn per certification before giving up on a seed.
const MAX_DRAWS: usize = 16;

/// Total Milnor and Tjurina numbers over all singular points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MilnorTjurina {
    pub tjurina_total: u64,
    pub milnor_total: u64,
    pub quasihomogeneous: bool,
    /// Seed of the certified coordinate change.
    pub seed: u64,
}

pub fn milnor_tjurina(d: &PlaneDivisor) -> Result<MilnorTjurina, DivisorError> {
    milnor_tjurina_seeded(d, 0)
}

/// Totals computed in an affine chart after a seeded random change of
/// coordinates that moves every singular point off `z = 0`.
///
/// A change is accepted when `⟨∇G, z⟩` has only the trivial zero (no
/// singular point at infinity) and a second independent change gives the
/// same totals. The Milnor total counts `dim Q[x,y]/⟨f_x, f_y, fᴺ⟩` for `N`
/// large, which keeps only critical points lying on the curve.
pub fn milnor_tjurina_seeded(d: &PlaneDivisor, seed: u64) -> Result<MilnorTjurina, DivisorError> {
    let ctx = d.context();
    require_planar(ctx)?;
    let j = jacobian_ideal(d);
    match height(ctx, &j)? {
        None => return Ok(smooth(seed)),
        Some(h) if h >= 3 => return Ok(smooth(seed)),
        Some(h) if h < 2 => return Err(DivisorError::NonIsolated { height: h }),
        _ => {}
    }
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let Some(first) = certified_totals(d, &mut rng)? else {
            continue;
        };
        let Some(second) = certified_totals(d, &mut rng)? else {
            continue;
        };
        if first == second {
            let (tjurina_total, milnor_total) = first;
            return Ok(MilnorTjurina {
                tjurina_total,
                milnor_total,
                quasihomogeneous: tjurina_total == milnor_total,
                seed: s,
            });
        }
    }
    Err(DivisorError::CertificationFailed { attempts: MAX_ATTEMPTS })
}

fn smooth(seed: u64) -> MilnorTjurina {
    MilnorTjurina {
        tjurina_total: 0,
        milnor_total: 0,
        quasihomogeneous: true,
        seed,
    }
}

fn random_change(rng: &mut ChaCha8Rng) -> RationalMatrix {
    loop {
        let entries: Vec<i64> = (0..9).map(|_| rng.gen_range(-3..=3)).collect();
        let m = RationalMatrix::from_i64(3, 3, &entries);
        if m.rank() == 3 {
            return m;
        }
    }
}

fn certified_totals(d: &PlaneDivisor, rng: &mut ChaCha8Rng) -> Result<Option<(u64, u64)>, DivisorError> {
    let ctx = d.context();
    // small entries often leave a singular point on z = 0, so redraw
    let mut g = None;
    for _ in 0..MAX_DRAWS {
        let h = d.defining_polynomial().coordinate_change(&random_change(rng))?;
        let mut at_infinity = h.gradient();
        at_infinity.push(Polynomial::var(ctx, 2));
        if !krull_dimension(ctx, &at_infinity)?.is_some_and(|k| k > 0) {
            g = Some(h);
            break;
        }
    }
    let Some(g) = g else { return Ok(None) };
    let f = g.dehomogenize(2)?;
    let actx = f.context().clone();
    let fx = f.partial_derivative(0)?;
    let fy = f.partial_derivative(1)?;
    let tjurina = GroebnerBasis::compute(&actx, &[f.clone(), fx.clone(), fy.clone()], MonomialOrder::Grevlex)?;
    let Some(tau) = tjurina.quotient_dimension() else {
        return Ok(None);
    };
    let critical = GroebnerBasis::compute(&actx, &[fx.clone(), fy.clone()], MonomialOrder::Grevlex)?;
    let mut power = critical.normal_form(&f);
    let mut prev = tau;
    for _ in 1..MAX_POWER {
        power = critical.normal_form(&(&power * &f));
        let gb = GroebnerBasis::compute(&actx, &[fx.clone(), fy.clone(), power.clone()], MonomialOrder::Grevlex)?;
        let Some(dim) = gb.quotient_dimension() else {
            return Ok(None);
        };
        if dim == prev {
            return Ok(Some((tau, dim)));
        }
        prev = dim;
    }
    Ok(None)
}
