use super::*;
use crate::poly::VariableContext;

#[test]
fn reads_divisor_and_lines() {
    let d = parse_document("vars: x,y,z\ndivisor: x*y*(x-y)\n", None).unwrap();
    assert_eq!(d.kind, InputKind::Divisor);
    assert_eq!(d.factors.as_ref().map(|f| f.len()), Some(3));

    let a = parse_document("# comment\nlines:\n  x\n\n  y  # second\nx+y\n", None).unwrap();
    assert_eq!(a.kind, InputKind::Arrangement);
    assert_eq!(a.polynomials.len(), 3);
    assert_eq!(a.ctx.names(), VariableContext::xyz().names());
}

#[test]
fn default_variables() {
    let d = parse_document("divisor: x*y*z*w*(x+y+z+w)", None).unwrap();
    assert_eq!(d.ctx.n_vars(), 4);
    let d = parse_document("divisor: a*b", Some(&["a".to_string(), "b".to_string()])).unwrap();
    assert_eq!(d.ctx.names(), ["a", "b"]);
}

#[test]
fn factor_split_ignores_sums() {
    let d = parse_document("divisor: x*y + z^2", None).unwrap();
    assert_eq!(d.factors, None);
    let d = parse_document("divisor: 2*x*(y-z)", None).unwrap();
    assert_eq!(d.factors.unwrap().len(), 2);
}

#[test]
fn errors_carry_positions() {
    let e = parse_document("vars: x,y,z\ndivisor: x^2 + + y\n", None).unwrap_err();
    match e {
        DocumentError::Parse(p) => assert_eq!((p.line, p.column), (2, 16)),
        other => panic!("{other:?}"),
    }
    let e = parse_document("lines:\nx\nq\n", None).unwrap_err();
    assert_eq!(e.line(), 3);
    assert!(matches!(
        read_document("x+y\n"),
        Err(DocumentError::Syntax { line: 1, .. })
    ));
    assert!(matches!(
        read_document("vars: x,,y\ndivisor: x"),
        Err(DocumentError::Syntax { .. })
    ));
    assert!(read_document("divisor: x\ny\n").is_err());
    assert!(read_document("vars: x\n").is_err());
}

#[test]
fn exit_codes() {
    let run = |args: &[&str]| run_command(std::iter::once("freecurve").chain(args.iter().copied()));
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/");
    assert_eq!(run(&["freeness", &format!("{dir}braid.div")]).code, 0);
    assert_eq!(run(&["freeness", "/nonexistent/file.div"]).code, 3);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn corpus_passes() {
    for r in verify_corpus() {
        assert!(r.passed(), "{r:?}");
    }
}
