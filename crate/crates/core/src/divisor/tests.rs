use super::*;
use crate::groebner::{height, hilbert_data, ideals_equal, GroebnerBasis, MonomialOrder};
use crate::poly::{parse_in, ratio, VariableContext};

fn ps(ctx: &Ctx, list: &[&str]) -> Vec<Polynomial> {
    list.iter().map(|s| parse_in(ctx, s)).collect()
}

fn divisor(s: &str) -> PlaneDivisor {
    PlaneDivisor::new(parse_in(&VariableContext::xyz(), s)).unwrap()
}

fn lines(list: &[&str]) -> LineArrangement {
    LineArrangement::new(ps(&VariableContext::xyz(), list)).unwrap()
}

const BRAID: [&str; 6] = ["x", "y", "z", "x-y", "x-z", "y-z"];

fn pencil_lines(n: usize) -> Vec<&'static str> {
    let pencil = ["x", "y", "x-y", "x+y", "x+2*y"];
    let mut v = pencil[..n - 1].to_vec();
    v.push("z");
    v
}

#[test]
fn jacobian_examples() {
    let ctx = VariableContext::xyz();
    assert_eq!(jacobian_ideal(&divisor("x*y*z")), ps(&ctx, &["y*z", "x*z", "x*y"]));
    let j = jacobian_ideal(&divisor("y*(x^2+y*z)"));
    assert!(ideals_equal(&ctx, &j, &ps(&ctx, &["x*y", "x^2+2*y*z", "y^2"])).unwrap());

    let c4 = VariableContext::xyzw();
    let q = PlaneDivisor::new(parse_in(&c4, "x*y*z*w*(x+y+z+w)")).unwrap();
    let j = jacobian_ideal(&q);
    let g = ps(
        &c4,
        &[
            "x^2*y*z+x*y^2*z+x*y*z^2+2*x*y*z*w",
            "x^2*y*w+x*y^2*w+2*x*y*z*w+x*y*w^2",
            "x^2*z*w+2*x*y*z*w+x*z^2*w+x*z*w^2",
            "x*y*z*w+1/2*y^2*z*w+1/2*y*z^2*w+1/2*y*z*w^2",
        ],
    );
    assert_eq!(j[3], g[0]);
    assert_eq!(j[2], g[1]);
    assert_eq!(j[1], g[2]);
    assert_eq!(j[0].scale(&ratio(1, 2)), g[3]);
}

#[test]
fn braid_analysis() {
    let a = lines(&BRAID);
    let d = a.divisor().unwrap();
    let r = analyze_freeness(&d).unwrap();
    assert!(r.is_free);
    assert_eq!(r.exponents, Some(vec![1, 2, 3]));
    assert_eq!(r.syzygy_matrix.column_degrees, vec![2, 3]);

    let shown = Syzygy::new(ps(d.context(), &["-x^2+x*y+x*z", "x*y-y^2+y*z", "x*z+y*z-z^2"])).unwrap();
    assert!(shown.annihilates(&d));
    assert!(!shown.regular);
    let col = Syzygy::new(r.syzygy_matrix.columns[0].components().to_vec()).unwrap();
    assert!(col.is_scalar_multiple_of(&shown.components));

    let search = r.regular_syzygy.as_ref().unwrap();
    let w = search.witness.as_ref().unwrap();
    assert_eq!(w.degree, 3);
    assert!(w.regular && w.annihilates(&d));

    let locus = r.singular_locus.as_ref().unwrap();
    assert_eq!(locus.degree, 7);
    assert_eq!(locus.alpha, 3);
    assert_eq!(r.near_pencil, Some(false));
    let b = r.bounds.as_ref().unwrap();
    let pb = b.point_bound.as_ref().unwrap();
    assert_eq!((pb.radical_degree, pb.bound, pb.satisfied), (7, Some(13), Some(true)));
    let ab = b.alpha_bound.as_ref().unwrap();
    assert_eq!((ab.alpha, ab.beta, ab.satisfied, ab.attained), (3, 2, true, true));
    assert_eq!(b.non_free_threshold.threshold, 14);
    assert!(!b.non_free_threshold.triggered && !b.non_free_threshold.not_free);

    assert!(containment_check(&shown, ContainmentTarget::Points(&locus.points)).unwrap());
    assert!(containment_check(w, ContainmentTarget::Points(&locus.points)).unwrap());
    assert!(containment_check(w, ContainmentTarget::Jacobian(&d)).unwrap());
}

#[test]
fn tangent_conic() {
    let d = divisor("y*(x^2+y*z)");
    let r = analyze_freeness(&d).unwrap();
    assert!(r.is_free);
    let w = r.regular_syzygy.as_ref().unwrap().witness.clone().unwrap();
    assert_eq!(w.degree, 1);
    // partials are (2xy, x²+2yz, y²); move the witness onto (xy, x²+2yz, y²)
    let on_gens = Syzygy::new(vec![
        w.components[0].scale(&ratio(2, 1)),
        w.components[1].clone(),
        w.components[2].clone(),
    ])
    .unwrap();
    assert!(on_gens.is_scalar_multiple_of(&ps(d.context(), &["-x", "y", "-2*z"])));
    let m = r.milnor.unwrap();
    assert_eq!(m.milnor_total, m.tjurina_total);
    assert_eq!(r.quasihomogeneous, Some(true));
    // y(y + x²) is an A₃ point
    assert_eq!(m.tjurina_total, 3);
}

#[test]
fn lines_and_conic() {
    let d = divisor("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)");
    let r = analyze_freeness(&d).unwrap();
    assert!(r.is_free);
    assert_eq!(r.betti.shifts(1), vec![5, 5, 5]);
    assert_eq!(r.betti.shifts(2), vec![7, 8]);
    let m = r.milnor.unwrap();
    assert_eq!((m.tjurina_total, m.milnor_total, m.quasihomogeneous), (19, 20, false));
    let s = r.regular_syzygy.unwrap();
    assert_eq!(s.status, SearchStatus::Certificate { entry_ideal_height: 2 });
    assert!(s.status.is_definitive_negative());
    assert_eq!(
        s.status.to_string(),
        "not found (certificate: all syzygy entries in ideal of height 2)"
    );
}

#[test]
fn milnor_is_seed_independent() {
    let d = divisor("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)");
    for seed in [1, 7, 42] {
        let m = milnor_tjurina_seeded(&d, seed).unwrap();
        assert_eq!((m.tjurina_total, m.milnor_total), (19, 20));
    }
    let braid = lines(&BRAID).divisor().unwrap();
    let m = milnor_tjurina(&braid).unwrap();
    // 4 triple points (μ = τ = 4) and 3 double points
    assert_eq!((m.tjurina_total, m.milnor_total), (19, 19));
}

#[test]
fn smooth_conic() {
    let d = divisor("x^2+y*z");
    let r = analyze_freeness(&d).unwrap();
    assert!(r.smooth && r.is_free);
    assert_eq!(r.exponents, None);
    let m = milnor_tjurina(&d).unwrap();
    assert_eq!((m.tjurina_total, m.milnor_total, m.quasihomogeneous), (0, 0, true));
}

#[test]
fn non_isolated_is_rejected() {
    let d = divisor("x^2*y");
    assert!(matches!(
        analyze_freeness(&d),
        Err(DivisorError::NonIsolated { height: 1 })
    ));
}

#[test]
fn coordinate_triangle() {
    let a = lines(&["x", "y", "z"]);
    let d = a.divisor().unwrap();
    let r = analyze_freeness(&d).unwrap();
    assert!(r.is_free);
    assert_eq!(r.exponents, Some(vec![1, 1, 1]));
    let l = singular_locus(&a).unwrap();
    assert_eq!(l.degree, 3);
    assert_eq!(l.alpha, 2);
    assert!(ideals_equal(d.context(), &l.radical_ideal, &ps(d.context(), &["x*y", "x*z", "y*z"])).unwrap());
    assert!(near_pencil_detect(&a).unwrap().detected);
}

#[test]
fn derivations() {
    let ctx = VariableContext::xyz();
    let f = divisor("x^3+y^3+z^3");
    let euler = ps(&ctx, &["x", "y", "z"]);
    assert!(derivation_to_syzygy(&euler, &f).unwrap().is_zero());

    let xy = divisor("x*y");
    let s = derivation_to_syzygy(&ps(&ctx, &["x", "0", "0"]), &xy).unwrap();
    assert_eq!(s.components, ps(&ctx, &["1/2*x", "-1/2*y", "-1/2*z"]));
    assert!(s.annihilates(&xy));

    assert!(matches!(
        derivation_to_syzygy(&ps(&ctx, &["y", "0", "0"]), &xy),
        Err(DivisorError::NotLogarithmic)
    ));
}

#[test]
fn pencil_plus_line() {
    for n in 4..=6usize {
        let a = lines(&pencil_lines(n));
        let d = a.divisor().unwrap();
        let ctx = d.context().clone();
        let k = n as i64 - 1;
        let theta = ps(&ctx, &["x", "y", &format!("-{k}*z")]);
        let s = derivation_to_syzygy(&theta, &d).unwrap();
        assert_eq!(s.components, theta);
        assert!(s.regular && s.degree == 1);

        let i = i_abc(&s);
        assert!(i[0].is_zero());
        assert!(ideals_equal(&ctx, &i, &ps(&ctx, &["x*z", "y*z"])).unwrap());
        assert_eq!(height(&ctx, &i).unwrap(), Some(1));

        let l = singular_locus(&a).unwrap();
        assert_eq!(l.degree, n);
        let np = near_pencil_detect(&a).unwrap();
        assert!(np.detected && np.combinatorial && np.essential);
        assert_eq!(np.linear_syzygy.unwrap().components, theta);
        assert!(containment_check(&s, ContainmentTarget::Points(&l.points)).unwrap());

        assert_eq!(singular_point_bound(1), Err(DivisorError::DegreeOneBound));
        let r = analyze_freeness(&d).unwrap();
        assert_eq!(r.exponents, Some(vec![1, 1, n as u32 - 2]));
        let pb = r.bounds.unwrap().point_bound.unwrap();
        assert_eq!((pb.syzygy_degree, pb.bound, pb.satisfied), (1, None, None));
    }
}

#[test]
fn full_pencil_is_flagged_combinatorially() {
    let a = lines(&["x", "y", "x-y", "x+y"]);
    assert!(!a.is_essential());
    let np = near_pencil_detect(&a).unwrap();
    assert!(np.detected && np.combinatorial && !np.essential);
}

#[test]
fn braid_is_not_a_near_pencil() {
    let np = near_pencil_detect(&lines(&BRAID)).unwrap();
    assert!(!np.detected && !np.combinatorial && np.linear_syzygy.is_none());
}

#[test]
fn intersection_of_syzygy_schemes() {
    for a in [lines(&BRAID), lines(&["x", "y", "z"]), lines(&pencil_lines(5))] {
        let c = syzygy_scheme_check(&a.divisor().unwrap()).unwrap();
        assert!(c.holds && c.forward && c.backward);
    }
}

#[test]
fn pencil_second_basis_element() {
    let a = lines(&pencil_lines(5));
    let d = a.divisor().unwrap();
    let ctx = d.context().clone();
    let p = parse_in(&ctx, "x*y*(x-y)*(x+y)");
    let (px, py) = (p.partial_derivative(0).unwrap(), p.partial_derivative(1).unwrap());
    let s2 = Syzygy::new(vec![py.clone(), -&px, Polynomial::zero(&ctx)]).unwrap();
    assert!(s2.annihilates(&d));
    let i2 = i_abc(&s2);
    assert_eq!(i2[0], p.scale(&ratio(4, 1)));
    assert_eq!(i2[1], &Polynomial::var(&ctx, 2) * &py);
    assert_eq!(i2[2], -&(&Polynomial::var(&ctx, 2) * &px));
    let z = Polynomial::var(&ctx, 2);
    assert!(ideals_equal(&ctx, &i2, &[p.clone(), &z * &py, &z * &px]).unwrap());

    // (x, y, -4z) and s2 together generate the syzygy module
    let m = crate::syzygy::first_syzygies(&jacobian_ideal(&d)).unwrap();
    let s1 = ps(&ctx, &["x", "y", "-4*z"]);
    let gens = [
        crate::syzygy::ModuleElement::new(s1, vec![3; 3]).unwrap(),
        crate::syzygy::ModuleElement::new(s2.components.clone(), vec![3; 3]).unwrap(),
    ];
    for c in &m.columns {
        let mm = crate::syzygy::SyzygyMatrix {
            source: m.source.clone(),
            columns: gens.to_vec(),
            column_degrees: vec![1, 3],
        };
        assert!(crate::syzygy::in_syzygy_module(c, &mm));
    }
}

#[test]
fn regular_syzygy_degree_law() {
    // exponents {1,2,2} and {1,2,3}
    for a in [lines(&["x", "y", "z", "x-y", "x-z"]), lines(&BRAID)] {
        let d = a.divisor().unwrap();
        let r = analyze_freeness(&d).unwrap();
        let w = r.regular_syzygy.unwrap().witness.unwrap();
        let deg = w.degree as u64;
        let i = i_abc(&w);
        let ctx = d.context();
        assert_eq!(height(ctx, &i).unwrap(), Some(2));
        let min = crate::syzygy::minimalize_generators(
            &i.iter()
                .map(|g| crate::syzygy::ModuleElement::new(vec![g.clone()], vec![0]).unwrap())
                .collect::<Vec<_>>(),
        );
        assert_eq!(min.len(), 3);
        assert_eq!(hilbert_data(ctx, &i).unwrap().scheme_degree, deg * deg + deg + 1);
    }
}

#[test]
fn search_is_deterministic() {
    let d = lines(&BRAID).divisor().unwrap();
    let m = crate::syzygy::first_syzygies(&jacobian_ideal(&d)).unwrap();
    let cfg = SearchConfig { budget: 50, seed: 9 };
    let a = find_regular_syzygy(&d, &m, &cfg).unwrap();
    let b = find_regular_syzygy(&d, &m, &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn arrangement_validation() {
    let ctx = VariableContext::xyz();
    assert!(matches!(
        LineArrangement::new(ps(&ctx, &["x", "y", "2*x"])),
        Err(DivisorError::DuplicateLine { first: 0, second: 2 })
    ));
    assert!(matches!(
        LineArrangement::new(ps(&ctx, &["x", "y^2"])),
        Err(DivisorError::NotLinear { index: 1 })
    ));
    let d = PlaneDivisor::new(parse_in(&ctx, "x*y")).unwrap();
    assert!(d.clone().with_factors(ps(&ctx, &["-x", "-y"])).is_ok());
    assert!(matches!(
        d.with_factors(ps(&ctx, &["x", "z"])),
        Err(DivisorError::FactorMismatch)
    ));
}

#[test]
fn points_are_normalized() {
    let p = ProjectivePoint::new(vec![ratio(0, 1), ratio(2, 1), ratio(-4, 1)]).unwrap();
    assert_eq!(p.to_string(), "[0:1:-2]");
    assert!(ProjectivePoint::new(vec![ratio(0, 1); 3]).is_none());
    let ctx = VariableContext::xyz();
    let gb = GroebnerBasis::compute(&ctx, &p.ideal(&ctx), MonomialOrder::Grevlex).unwrap();
    assert!(gb.contains(&parse_in(&ctx, "2*y+z")));
}
