use pvacl::algebra::{parse_diffpoly, Expr};
use pvacl::pva::{build_master, build_master_unchecked, check_axioms, check_master_square, read_back, Pva};
use pvacl::sample::SampleSpec;

fn spec() -> SampleSpec {
    SampleSpec::default().with_limit(24)
}

#[test]
fn square_vanishes_iff_axioms_hold() {
    for name in Pva::builtin_names() {
        let p = Pva::builtin(name).unwrap();
        let axioms = check_axioms(&p, &spec()).unwrap();
        let x = build_master_unchecked(&p);
        let square = check_master_square(&x, p.names(), &spec()).unwrap();
        println!("{axioms}{square}");
        assert_eq!(axioms.passed(), square.passed(), "{name}");
    }
}

#[test]
fn broken_structures_fail_on_expected_lines() {
    let failing = |name: &str| -> Vec<String> {
        let p = Pva::builtin(name).unwrap();
        let x = build_master_unchecked(&p);
        check_master_square(&x, p.names(), &spec())
            .unwrap()
            .results
            .into_iter()
            .filter(|r| !r.passed)
            .map(|r| r.name)
            .collect()
    };
    let jacobi = failing("broken-jacobi");
    assert!(jacobi.iter().any(|n| n.contains("on 1 | 2 | 3")), "{jacobi:?}");
    assert!(jacobi.iter().all(|n| n.contains("Jacobi")), "{jacobi:?}");
    let leibniz = failing("broken-leibniz");
    assert!(leibniz.iter().any(|n| n.contains("Leibniz")), "{leibniz:?}");
    let skew = failing("broken-skew");
    assert!(skew.iter().any(|n| n == "X symmetric"), "{skew:?}");
}

#[test]
fn master_reads_back_product_and_bracket() {
    let p = Pva::builtin("affine").unwrap();
    let x = build_master(&p, &spec()).unwrap();
    for (a, b) in [("h", "e"), ("h'", "h*e"), ("e", "e'")] {
        let a = parse_diffpoly(a, p.names()).unwrap();
        let b = parse_diffpoly(b, p.names()).unwrap();
        let (prod, br) = read_back(&x, &a, &b).unwrap();
        assert_eq!(prod, &a * &b);
        assert_eq!(br, p.bracket(&a, &b).unwrap());
    }
}

#[test]
fn build_master_rejects_broken_structures() {
    let p = Pva::builtin("broken-jacobi").unwrap();
    assert!(build_master(&p, &spec()).is_err());
}

#[test]
fn gfz_bracket_examples() {
    let p = Pva::builtin("gfz").unwrap();
    let br = |a: &str, b: &str| {
        p.bracket(&parse_diffpoly(a, p.names()).unwrap(), &parse_diffpoly(b, p.names()).unwrap())
            .unwrap()
    };
    let lam = |e: &str| Expr::parse(e, p.names()).unwrap().eval(1, &[]).unwrap();
    assert_eq!(br("u", "u'"), lam("l^2"));
    assert_eq!(br("u'", "u"), lam("-l^2"));
    assert_eq!(br("u", "u^2"), lam("2*u*l"));
}
