use super::*;
use crate::poly::{parse_in, VariableContext};

fn ps(ctx: &Ctx, list: &[&str]) -> Vec<Polynomial> {
    list.iter().map(|s| parse_in(ctx, s)).collect()
}

#[test]
fn coordinate_ideal_basis() {
    let ctx = VariableContext::xyz();
    let gb = GroebnerBasis::compute(&ctx, &ps(&ctx, &["x", "y"]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.generators(), &ps(&ctx, &["y", "x"])[..]);
    assert!(gb.verify());
}

#[test]
fn tangent_conic_jacobian_is_already_a_basis() {
    let ctx = VariableContext::xyz();
    let gens = ps(&ctx, &["x*y", "x^2+2*y*z", "y^2"]);
    let gb = GroebnerBasis::compute(&ctx, &gens, MonomialOrder::Grevlex).unwrap();
    let mut got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["x*y", "x^2 + 2*y*z", "y^2"]);
    // membership of F = y(x^2+yz): F = y·(x²+2yz) - z·y²
    assert!(gb.normal_form(&parse_in(&ctx, "y*(x^2+y*z)")).is_zero());
}

#[test]
fn normal_forms() {
    let ctx = VariableContext::xyz();
    let gx = GroebnerBasis::compute(&ctx, &ps(&ctx, &["x"]), MonomialOrder::Grevlex).unwrap();
    assert!(gx.normal_form(&parse_in(&ctx, "x^2")).is_zero());
    let gxy = GroebnerBasis::compute(&ctx, &ps(&ctx, &["x", "y"]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(gxy.normal_form(&parse_in(&ctx, "z^5")), parse_in(&ctx, "z^5"));
}

#[test]
fn empty_input_is_zero_ideal() {
    let ctx = VariableContext::xyz();
    let gb = GroebnerBasis::compute(&ctx, &[], MonomialOrder::Grevlex).unwrap();
    assert!(gb.is_zero_ideal());
    assert_eq!(gb.krull_dimension(), Some(3));
}

#[test]
fn elimination_gives_intersection() {
    let ctx = VariableContext::new(&["t", "x", "y"]).unwrap();
    let elim = eliminate(&ps(&ctx, &["t*x", "(1-t)*y"]), 1).unwrap();
    assert_eq!(elim.len(), 1);
    assert_eq!(elim[0].to_string(), "x*y");
    assert_eq!(elim[0].context().names(), &["x", "y"]);
}

#[test]
fn rabinowitsch_elimination_gives_unit() {
    let ctx = VariableContext::new(&["t", "x", "y"]).unwrap();
    let elim = eliminate(&ps(&ctx, &["x^2", "y", "1-t*x"]), 1).unwrap();
    assert_eq!(elim.len(), 1);
    assert_eq!(elim[0].to_string(), "1");
}

#[test]
fn intersections() {
    let ctx = VariableContext::xyz();
    let i = intersect_ideals(&ps(&ctx, &["x"]), &ps(&ctx, &["y"])).unwrap();
    assert_eq!(i, ps(&ctx, &["x*y"]));

    let pts = [ps(&ctx, &["y", "z"]), ps(&ctx, &["x", "z"]), ps(&ctx, &["x", "y"])];
    let i = intersect_many(&ctx, &pts).unwrap();
    let expected = ps(&ctx, &["x*y", "x*z", "y*z"]);
    assert!(ideals_equal(&ctx, &i, &expected).unwrap());
    // containments checked independently by normal forms
    for p in &pts {
        let gb = GroebnerBasis::compute(&ctx, p, MonomialOrder::Grevlex).unwrap();
        assert!(gb.contains_all(&i));
    }
    let gi = GroebnerBasis::compute(&ctx, &i, MonomialOrder::Grevlex).unwrap();
    assert_eq!(gi.hilbert_data().scheme_degree, 3);

    let sing_xyz = [ps(&ctx, &["x", "y"]), ps(&ctx, &["x", "z"]), ps(&ctx, &["y", "z"])];
    let i2 = intersect_many(&ctx, &sing_xyz).unwrap();
    assert!(ideals_equal(&ctx, &i2, &expected).unwrap());
}

#[test]
fn saturation_examples() {
    let ctx = VariableContext::xyz();
    let m = irrelevant_ideal(&ctx);
    // the embedded component of ⟨x², xy⟩ is ⟨x², y⟩, primary to ⟨x, y⟩ rather than m
    let s = saturate(&ps(&ctx, &["x^2", "x*y"]), &m).unwrap();
    assert!(ideals_equal(&ctx, &s, &ps(&ctx, &["x^2", "x*y"])).unwrap());
    let s = saturate(&ps(&ctx, &["x^2", "x*y"]), &ps(&ctx, &["x", "y"])).unwrap();
    assert_eq!(s, ps(&ctx, &["x"]));
    let s = saturate(&ps(&ctx, &["x^2", "x*y", "x*z"]), &m).unwrap();
    assert_eq!(s, ps(&ctx, &["x"]));
    let s = saturate(&ps(&ctx, &["x"]), &ps(&ctx, &["y"])).unwrap();
    assert_eq!(s, ps(&ctx, &["x"]));
    let twice = saturate(&s, &ps(&ctx, &["y"])).unwrap();
    assert_eq!(twice, s);
}

#[test]
fn radical_membership_examples() {
    let ctx = VariableContext::xyz();
    assert!(radical_membership(&parse_in(&ctx, "x"), &ps(&ctx, &["x^2"])).unwrap());
    assert!(radical_membership(&parse_in(&ctx, "x+y"), &ps(&ctx, &["x", "y"])).unwrap());
    assert!(!radical_membership(&parse_in(&ctx, "z"), &ps(&ctx, &["x", "y"])).unwrap());
    // V(xz, yz, x+y+z) = {[1,-1,0]}: z vanishes there, x does not
    let i = ps(&ctx, &["x*z", "y*z", "x+y+z"]);
    assert!(radical_membership(&parse_in(&ctx, "z"), &i).unwrap());
    assert!(!radical_membership(&parse_in(&ctx, "x"), &i).unwrap());
}

#[test]
fn dimensions_and_heights() {
    let ctx = VariableContext::xyz();
    assert_eq!(krull_dimension(&ctx, &ps(&ctx, &["x", "y", "z"])).unwrap(), Some(0));
    assert_eq!(height(&ctx, &ps(&ctx, &["x", "y", "z"])).unwrap(), Some(3));
    assert_eq!(height(&ctx, &ps(&ctx, &["x*z", "y*z"])).unwrap(), Some(1));
    assert_eq!(height(&ctx, &ps(&ctx, &["1", "x"])).unwrap(), None);

    let ctx4 = VariableContext::xyzw();
    let s = ps(
        &ctx4,
        &[
            "-8*x*w-4*z*w-3*w^2",
            "4*x*z+y*z+2*z^2+3*z*w",
            "-y^2-4*y*w",
            "4*x^2+2*x*y+14*x*w",
        ],
    );
    assert_eq!(height(&ctx4, &s).unwrap(), Some(4));
    assert!(is_regular_sequence(&s).unwrap());
}

#[test]
fn regular_sequence_examples() {
    let ctx = VariableContext::xyz();
    assert!(is_regular_sequence(&ps(&ctx, &["x", "y", "z"])).unwrap());
    assert!(is_regular_sequence(&ps(&ctx, &["-x", "y", "-2*z"])).unwrap());
    assert!(!is_regular_sequence(&ps(&ctx, &["-x^2+x*y+x*z", "x*y-y^2+y*z", "x*z+y*z-z^2"])).unwrap());
    assert_eq!(
        is_regular_sequence(&[parse_in(&ctx, "x"), Polynomial::zero(&ctx)]),
        Err(GroebnerError::ZeroPolynomial)
    );
    assert_eq!(
        is_regular_sequence(&ps(&ctx, &["x+y^2"])),
        Err(GroebnerError::NotHomogeneous)
    );
}

#[test]
fn hilbert_examples() {
    let ctx = VariableContext::xyz();
    let h = hilbert_data(&ctx, &ps(&ctx, &["x^2", "y"])).unwrap();
    assert_eq!(h.scheme_degree, 2);
    assert_eq!(h.krull_dimension, 1);
}

#[test]
fn lex_basis_of_points() {
    // two points (0,0) and (1,1) in the affine plane
    let ctx = VariableContext::new(&["x", "y"]).unwrap();
    let gb = GroebnerBasis::compute(&ctx, &ps(&ctx, &["x-y", "y^2-y"]), MonomialOrder::Lex).unwrap();
    assert!(gb.verify());
    assert_eq!(gb.quotient_dimension(), Some(2));
}

#[test]
fn affine_quotient_dimension() {
    let ctx = VariableContext::new(&["x", "y"]).unwrap();
    // A3 singularity x^2*y + y^2: Milnor ideal (2xy, x^2 + 2y)
    let gb = GroebnerBasis::compute(&ctx, &ps(&ctx, &["2*x*y", "x^2+2*y"]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.quotient_dimension(), Some(3));
    let gb = GroebnerBasis::compute(&ctx, &ps(&ctx, &["x*y"]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.quotient_dimension(), None);
}

#[test]
fn ideal_quotients() {
    let ctx = VariableContext::xyz();
    let q = ideal_quotient(&ps(&ctx, &["x^2", "x*y"]), &ps(&ctx, &["x"])).unwrap();
    assert_eq!(q, ps(&ctx, &["y", "x"]));
    let m = irrelevant_ideal(&ctx);
    let q = ideal_quotient(&ps(&ctx, &["x^2", "x*y", "x*z"]), &m).unwrap();
    assert!(ideals_equal(&ctx, &q, &ps(&ctx, &["x"])).unwrap());
    let q = ideal_quotient(&ps(&ctx, &["x*y"]), &m).unwrap();
    assert_eq!(q, ps(&ctx, &["x*y"]));
}
