use std::io::Write;
use std::process::Command;

use ribbonpoly::cli::run;
use ribbonpoly::format::parse;
use ribbonpoly::ribbon::isomorphic;
use ribbonpoly::ribbon::samples::planar_loop;

const LOOP: &str = "graph loop\nvertex v1: a a'\nedge e1: a a'\n";
const BRIDGE: &str = "graph f1\nvertex u: a\nvertex w: b\nedge e1: a b\n";
const TORUS: &str = "graph f3\nvertex v: a b a' b'\nedge e1: a a'\nedge e2: b b'\n";

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("ribbonpoly").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn compute_br_of_loop() {
    let f = file(LOOP);
    let path = f.path().to_str().unwrap();
    assert_eq!(
        cli(&["compute", "br", path]),
        (0, "1 + 1*beta\n".into(), String::new())
    );
}

#[test]
fn several_graphs_are_named() {
    let f = file(&format!("{LOOP}\n{BRIDGE}"));
    let path = f.path().to_str().unwrap();
    let (code, out, _) = cli(&["compute", "br", path]);
    assert_eq!(code, 0);
    assert_eq!(out, "loop: 1 + 1*beta\nf1: 1 + 1*alpha\n");
    let (_, out, _) = cli(&["compute", "tutte", path, "--graph", "f1"]);
    assert_eq!(out, "1*x_T\n");
    let (code, _, err) = cli(&["compute", "br", path, "--graph", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("nope"));
}

#[test]
fn verify_all_on_torus_loops() {
    let f = file(TORUS);
    let (code, out, _) = cli(&["verify", "all", f.path().to_str().unwrap(), "--seed", "7"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("# seed=7"));
    let passes = lines.filter(|l| l.ends_with("result=pass")).count();
    assert!(passes >= 7, "{out}");
}

#[test]
fn named_identities() {
    let f = file(TORUS);
    let path = f.path().to_str().unwrap();
    let (code, out, _) = cli(&["verify", "eq12", path]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "# seed=0\nidentity=br-rearranged graph=f3 mode=symbolic points=0 result=pass\n"
    );
    for which in [
        "duality",
        "determination",
        "tensor-c3",
        "jones-mirror",
        "thm32",
    ] {
        let (code, out, _) = cli(&["verify", which, path]);
        assert_eq!(code, 0, "{which}: {out}");
        assert_eq!(out.lines().count(), 2);
    }
    let (code, out, _) = cli(&["verify", "tensor-odd", "2", path]);
    assert_eq!(code, 0);
    assert!(out.contains("identity=tensor-odd-p2 graph=f3 mode=multipoint"));
    // 2 edges times 8 exceeds the budget for p = 3
    let (code, _, err) = cli(&["verify", "tensor-odd", "3", path]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"));
}

#[test]
fn dual_of_bridge_is_a_loop() {
    let f = file(BRIDGE);
    let (code, out, _) = cli(&["transform", "dual", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let gs = parse(&out).unwrap();
    assert_eq!(gs.len(), 1);
    assert_eq!(gs[0].num_vertices(), 1);
    assert!(isomorphic(&gs[0], &planar_loop()));
}

#[test]
fn jones_cp_writhe_rules() {
    let f = file(LOOP);
    let path = f.path().to_str().unwrap();
    let (code, _, err) = cli(&["compute", "jones-cp", path]);
    assert_eq!(code, 2);
    assert!(err.contains("--writhe"));
    let (code, out, _) = cli(&["compute", "jones-cp", path, "--writhe", "-1"]);
    assert_eq!((code, out.as_str()), (0, "1*t^(-3/2)\n"));

    let (_, subdivided, _) = cli(&["transform", "tensor", "3", path]);
    assert!(subdivided.contains("tensor 3"));
    let g = file(&subdivided);
    let (code, out, _) = cli(&["compute", "jones-cp", g.path().to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "-1*t^(-5/2) - 1*t^(-1/2)\n"));
}

#[test]
fn input_errors_exit_two() {
    let f = file("graph g\nvertex v: a b\nvertex w: a\nedge e: a b\n");
    let (code, out, err) = cli(&["compute", "br", f.path().to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("line 3, column 11"), "{err}");
    let (code, _, _) = cli(&["compute", "br", "/nonexistent/graph.rg"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["compute", "nothing", "x"]);
    assert_eq!(code, 2);
    let unweighted = file(LOOP);
    let (code, _, err) = cli(&[
        "compute",
        "homfly-full",
        unweighted.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("no weight"));
}

#[test]
fn binary_output_is_stable() {
    let f = file(&format!("{TORUS}\n{LOOP}"));
    let args = ["verify", "all", f.path().to_str().unwrap(), "--seed", "3"];
    let runs: Vec<_> = (0..2)
        .map(|_| {
            Command::new(env!("CARGO_BIN_EXE_ribbonpoly"))
                .args(args)
                .output()
                .unwrap()
        })
        .collect();
    assert!(runs[0].status.success());
    assert_eq!(runs[0].stdout, runs[1].stdout);
    assert_eq!(runs[0].stdout, cli(&args).1.into_bytes());
}
