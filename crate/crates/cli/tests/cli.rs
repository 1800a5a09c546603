use std::process::Command;

fn pvacl(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pvacl")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn monotone_listing() {
    let (out, code) = pvacl(&["monotone", "5", "3"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().map(|l| l.split("  ").next().unwrap()).collect();
    assert_eq!(
        rows,
        ["[3 2 1 4 5]", "[3 2 4 1 5]", "[3 2 4 5 1]", "[3 4 2 1 5]", "[3 4 2 5 1]", "[3 4 5 2 1]"]
    );
    assert_eq!(pvacl(&["monotone", "4", "1"]).0.lines().count(), 1);
    assert_eq!(pvacl(&["monotone", "8", "4"]).0.lines().count(), 35);
    assert_eq!(pvacl(&["monotone", "3", "5"]).1, 2);
}

#[test]
fn shuffles_listing() {
    let (out, _) = pvacl(&["shuffles", "2", "1"]);
    assert_eq!(out, "[1 2 3]\n[1 3 2]\n[2 3 1]\n");
    assert_eq!(pvacl(&["shuffles", "-1", "2"]).0, "");
}

#[test]
fn reduce_examples() {
    assert_eq!(pvacl(&["reduce", "n=2; edges: 2>1"]).0, "-1  1>2\n");
    let triangle = "[n=3; edges: 1>2, 2>3] + [n=3; edges: 2>3, 3>1] + [n=3; edges: 3>1, 1>2]";
    assert_eq!(pvacl(&["reduce", triangle]).0, "0\n");
    assert_eq!(pvacl(&["reduce", "n=2; edges: 1>1"]).1, 2);
}

#[test]
fn cocompose_and_bracket() {
    let (out, code) = pvacl(&["cocompose", "n=3; edges: 1>2, 2>3", "2,1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Δ0: n=2; edges: 1>2\n"));
    let (out, code) = pvacl(&["bracket", "u'", "u^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("λ^2"));
}

#[test]
fn verify_exit_codes() {
    let (out, code) = pvacl(&["verify", "pva-axioms", "--structure", "broken-skew"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL skewsymmetry"));
    assert!(out.contains(" ≠ "));
    let (out, code) = pvacl(&["verify", "line-identities", "--n", "5"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(pvacl(&["verify", "no-such-suite"]).1, 2);
    assert_eq!(pvacl(&["verify", "pva-axioms", "--structure", "/nonexistent"]).1, 2);
    assert_eq!(pvacl(&["verify", "pva-axioms", "--max-arity", "x"]).1, 2);
}

#[test]
fn verify_diagram_passes() {
    let (out, code) = pvacl(&["verify", "diagram", "--structure", "gfz", "--max-arity", "3"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn descriptor_files_are_accepted() {
    let path = std::env::temp_dir().join(format!("pvacl-cli-{}.pva", std::process::id()));
    std::fs::write(&path, "name heisenberg\ngenerators a b\na b : 1\nb a : -1\n").unwrap();
    let (out, code) = pvacl(&["verify", "master-square", "--structure", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS axioms hold ⟺ X□X = 0"));
}
