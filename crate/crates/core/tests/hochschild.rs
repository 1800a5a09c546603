use pvacl::algebra::GenNames;
use pvacl::hochschild::{check_d_linear, check_d_squared, check_harrison, random_hcochain, samples};
use pvacl::morphism::phi;
use pvacl::operad::random_symmetric;
use pvacl::sample::SampleSpec;

#[test]
fn d_squared_vanishes() {
    let spec = SampleSpec::default().with_limit(8);
    let names = GenNames::default();
    let mut rng = spec.rng(40);
    for n in 1..=3 {
        for _ in 0..3 {
            let f = random_hcochain(n, 1, &mut rng);
            let r = check_d_squared(&f, &samples(n + 2, 1, &spec, n as u64), &names).unwrap();
            assert!(r.passed, "{}: {r}", f.describe());
        }
    }
}

#[test]
fn d_preserves_d_linearity() {
    let spec = SampleSpec::default().with_limit(8);
    let names = GenNames::default();
    let mut rng = spec.rng(41);
    for n in 1..=3 {
        let f = random_hcochain(n, 1, &mut rng);
        assert!(check_d_linear(&f, &samples(n, 1, &spec, 1), &names).unwrap().passed);
        let r = check_d_linear(&f.d(), &samples(n + 1, 1, &spec, 2), &names).unwrap();
        assert!(r.passed, "{}: {r}", f.describe());
    }
}

#[test]
fn symmetric_two_cochain_has_harrison_coboundary() {
    let spec = SampleSpec::default().with_limit(8);
    let names = GenNames::default();
    let mut rng = spec.rng(42);
    for _ in 0..3 {
        let f = random_hcochain(2, 1, &mut rng).symmetrize();
        let r = check_harrison(&f.d(), &samples(3, 1, &spec, 3), &names).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn harrison_closure_at_arity_three() {
    let spec = SampleSpec::default().with_limit(6);
    let names = GenNames::default();
    let y = random_symmetric(3, 1, &mut spec.rng(43)).cached();
    let f = phi(&y);
    assert!(check_harrison(&f, &samples(3, 1, &spec, 4), &names).unwrap().passed());
    let r = check_harrison(&f.d(), &samples(4, 1, &spec, 5), &names).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn generic_cochain_is_not_harrison() {
    let spec = SampleSpec::default().with_limit(8);
    let names = GenNames::default();
    let f = pvacl::hochschild::HCochain::parse(2, "s1*s2'", &names).unwrap();
    assert!(!check_harrison(&f, &samples(2, 1, &spec, 6), &names).unwrap().passed());
}
