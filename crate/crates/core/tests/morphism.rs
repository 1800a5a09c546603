use pvacl::algebra::{parse_diffpoly, DiffPoly, GenNames};
use pvacl::graph::Digraph;
use pvacl::hochschild::{check_harrison, samples, HCochain};
use pvacl::morphism::{check_chain_map, check_cocycle, check_diagram, lift_top, lift_top_unchecked, phi, trace_symmetry};
use pvacl::operad::{check_symmetry, random_symmetric, SymmetryGroup};
use pvacl::pva::{build_master, Pva};
use pvacl::sample::SampleSpec;

fn v(s: &str) -> DiffPoly {
    parse_diffpoly(s, &GenNames::default()).unwrap()
}

#[test]
fn phi_of_master_is_the_product() {
    let p = Pva::builtin("gfz").unwrap();
    let spec = SampleSpec::default().with_limit(12);
    let x = build_master(&p, &spec).unwrap();
    let f = phi(&x);
    let (a, b) = (v("u'"), v("u*u''"));
    assert_eq!(f.eval(&[a.clone(), b.clone()]).unwrap(), &a * &b);
}

#[test]
fn chain_map_at_arity_one() {
    // [X,Y]^Λ2(a⊗b) = aY(b) - Y(ab) + Y(a)b
    let p = Pva::builtin("gfz").unwrap();
    let spec = SampleSpec::default().with_limit(12);
    let x = build_master(&p, &spec).unwrap();
    let y = random_symmetric(1, 1, &mut spec.rng(5));
    let names = GenNames::default();
    let r = check_chain_map(&x, &y, &samples(2, 1, &spec, 1), &names).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn lift_of_product_vanishes_off_connected_lines() {
    let names = GenNames::default();
    let f = HCochain::parse(2, "s1*s2", &names).unwrap();
    let spec = SampleSpec::default().with_limit(12);
    let y = lift_top(&f, &samples(2, 1, &spec, 1), &names).unwrap();
    let (a, b) = (v("u'"), v("u^2"));
    let ab = [a.clone(), b.clone()];
    assert!(y.eval(&Digraph::empty(2), &ab).unwrap().is_zero());
    let rev: Digraph = "n=2; edges: 2>1".parse().unwrap();
    assert_eq!(y.eval(&rev, &ab).unwrap().as_scalar().unwrap(), -(&a * &b));
}

#[test]
fn lift_sign_on_a_permuted_line() {
    let names = GenNames::default();
    let f = HCochain::parse(3, "s1*s2'*s3''", &names).unwrap();
    let y = lift_top_unchecked(&f);
    let g: Digraph = "n=3; edges: 1>3, 3>2".parse().unwrap();
    let w = [v("u"), v("u^2"), v("u'")];
    let expected = -f.eval(&[w[0].clone(), w[2].clone(), w[1].clone()]).unwrap();
    assert_eq!(y.eval(&g, &w).unwrap().as_scalar().unwrap(), expected);
}

#[test]
fn lift_rejects_non_harrison() {
    let names = GenNames::default();
    let f = HCochain::parse(2, "s1*s2'", &names).unwrap();
    let spec = SampleSpec::default().with_limit(12);
    assert!(lift_top(&f, &samples(2, 1, &spec, 1), &names).is_err());
}

#[test]
fn trace_of_symmetry_argument() {
    let spec = SampleSpec::default().with_limit(8);
    let names = GenNames::default();
    let y = random_symmetric(3, 1, &mut spec.rng(6));
    let harrison = phi(&y);
    assert!(check_harrison(&harrison, &samples(3, 1, &spec, 2), &names).unwrap().passed());
    let plain = HCochain::parse(3, "s1*s2'*s3''", &names).unwrap();
    let w = [v("u'"), v("u^2"), v("u*u''")];
    for row in trace_symmetry(&harrison, &w).unwrap() {
        assert!(row.operator_step_holds() && row.symmetric(), "{row}");
    }
    let rows = trace_symmetry(&plain, &w).unwrap();
    assert!(rows.iter().all(|r| r.operator_step_holds()));
    assert!(rows.iter().any(|r| !r.symmetric()));
}

#[test]
fn lifted_harrison_cochain_is_symmetric() {
    let spec = SampleSpec::default().with_limit(8);
    let y = random_symmetric(3, 1, &mut spec.rng(7));
    let lifted = lift_top_unchecked(&phi(&y));
    let s = samples(3, 1, &spec, 3);
    assert!(check_symmetry(&lifted, SymmetryGroup::All, &s).unwrap().is_none());
}

#[test]
fn cocycle_from_bracket() {
    let p = Pva::builtin("gfz").unwrap();
    let spec = SampleSpec::default().with_limit(8);
    let x = build_master(&p, &spec).unwrap();
    let z = random_symmetric(1, 1, &mut spec.rng(8));
    let r = check_cocycle(&x, &z, &samples(3, 1, &spec, 4), &GenNames::default()).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn diagram_small() {
    let spec = SampleSpec::default().with_limit(6);
    for (name, n) in [("gfz", 2), ("zero", 3)] {
        let r = check_diagram(&Pva::builtin(name).unwrap(), n, &spec).unwrap();
        println!("{r}");
        assert!(r.passed(), "{r}");
    }
}
