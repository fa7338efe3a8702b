use ribbonpoly_web::{compute_text, transform_text, verify_text};

const TORUS: &str = "graph f3\nvertex v: a b a' b'\nedge e1: a a'\nedge e2: b b'\n";

#[test]
fn computes_each_graph() {
    let two = format!("{TORUS}\ngraph f2\nvertex v: a a'\nedge e1: a a'\n");
    assert_eq!(
        compute_text(&two, "br", None).unwrap(),
        "f3: 1 + 2*beta + 1*beta^2*gamma^2\nf2: 1 + 1*beta\n"
    );
    assert!(compute_text(TORUS, "jones-cp", None).is_err());
    assert!(compute_text(TORUS, "jones-cp", Some(-2)).is_ok());
    assert!(compute_text(TORUS, "homfly-full", None)
        .unwrap()
        .contains("t["));
    assert!(compute_text(TORUS, "nothing", None).is_err());
    assert!(compute_text("graph g\nvertex v: a\n", "br", None)
        .unwrap_err()
        .contains("line 2"));
}

#[test]
fn transforms_and_verifies() {
    let dual = transform_text(TORUS, "dual", 0).unwrap();
    assert!(dual.starts_with("graph f3\nvertex f1:"));
    assert!(transform_text(TORUS, "tensor", 3)
        .unwrap()
        .ends_with("tensor 3\n"));
    let report = verify_text(TORUS, 4).unwrap();
    assert!(report.starts_with("# seed=4\n"));
    assert!(report.lines().skip(1).all(|l| l.ends_with("result=pass")));
}
