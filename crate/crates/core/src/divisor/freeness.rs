use serde::Serialize;

use super::{
    bounds_and_criteria, find_regular_syzygy, jacobian_ideal, milnor_tjurina_seeded, near_pencil_detect,
    singular_locus, Bounds, DivisorError, MilnorTjurina, PlaneDivisor, RegularSyzygySearch, SearchConfig,
    SingularLocus,
};
use crate::groebner::height;
use crate::syzygy::{first_syzygies, free_resolution, BettiTable, SyzygyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnalysisOptions {
    pub search: SearchConfig,
    pub milnor_seed: u64,
    pub compute_milnor: bool,
    pub resolution_cap: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            search: SearchConfig::default(),
            milnor_seed: 0,
            compute_milnor: true,
            resolution_cap: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FreenessReport {
    pub n_vars: usize,
    pub degree: u32,
    /// Empty singular scheme; such curves count as free by convention.
    pub smooth: bool,
    pub jacobian_height: usize,
    pub is_free: bool,
    /// `{1, a, b, …}`, sorted, when free.
    pub exponents: Option<Vec<u32>>,
    pub syzygy_matrix: SyzygyMatrix,
    pub betti: BettiTable,
    pub projective_dimension: usize,
    pub regular_syzygy: Option<RegularSyzygySearch>,
    pub milnor: Option<MilnorTjurina>,
    pub quasihomogeneous: Option<bool>,
    pub singular_locus: Option<SingularLocus>,
    pub near_pencil: Option<bool>,
    pub bounds: Option<Bounds>,
}

pub fn analyze_freeness(d: &PlaneDivisor) -> Result<FreenessReport, DivisorError> {
    analyze_freeness_with(d, &AnalysisOptions::default())
}

pub fn analyze_freeness_with(d: &PlaneDivisor, opts: &AnalysisOptions) -> Result<FreenessReport, DivisorError> {
    let ctx = d.context();
    let n_vars = ctx.n_vars();
    let j = jacobian_ideal(d);
    let h = height(ctx, &j)?.unwrap_or(n_vars);
    if h < 2 {
        return Err(DivisorError::NonIsolated { height: h });
    }
    let smooth = h == n_vars;
    let syzygy_matrix = first_syzygies(&j)?;
    let res = free_resolution(&j, opts.resolution_cap)?;
    let projective_dimension = res.projective_dimension();
    let is_free = smooth || projective_dimension == 2;
    let exponents = (is_free && !smooth).then(|| {
        let mut e = vec![1];
        e.extend(&syzygy_matrix.column_degrees);
        e.sort_unstable();
        e
    });

    let planar = n_vars == 3;
    let regular_syzygy = if planar && !smooth {
        Some(find_regular_syzygy(d, &syzygy_matrix, &opts.search)?)
    } else {
        None
    };
    let milnor = if planar && opts.compute_milnor {
        Some(milnor_tjurina_seeded(d, opts.milnor_seed)?)
    } else {
        None
    };
    let arrangement = if planar { d.as_line_arrangement() } else { None };
    let (locus, near_pencil) = match &arrangement {
        Some(a) if a.len() >= 3 => (Some(singular_locus(a)?), Some(near_pencil_detect(a)?.detected)),
        Some(a) if a.len() == 2 => (Some(singular_locus(a)?), None),
        _ => (None, None),
    };
    let mut report = FreenessReport {
        n_vars,
        degree: d.degree(),
        smooth,
        jacobian_height: h,
        is_free,
        exponents,
        syzygy_matrix,
        betti: res.betti,
        projective_dimension,
        regular_syzygy,
        quasihomogeneous: milnor.map(|m| m.quasihomogeneous),
        milnor,
        singular_locus: locus,
        near_pencil,
        bounds: None,
    };
    if let (Some(a), Some(l)) = (&arrangement, &report.singular_locus) {
        report.bounds = Some(bounds_and_criteria(&report, l, a.len()));
    }
    Ok(report)
}
