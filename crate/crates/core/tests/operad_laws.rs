use pvacl::operad::{
    check_associativity, check_equivariance, check_sesquilinearity, check_symmetry, check_unit,
    random_cochain, ClCochain, SymmetryGroup,
};
use pvacl::perm::Perm;
use pvacl::sample::{monomial_basis, tuples, SampleSpec};

fn samples(n: usize, limit: usize, stream: u64) -> Vec<Vec<pvacl::algebra::DiffPoly>> {
    let spec = SampleSpec::default();
    let basis = monomial_basis(1, 2, 2);
    tuples(n, &basis, limit, &mut spec.rng(stream))
}

#[test]
fn random_cochains_are_sesquilinear() {
    let mut rng = SampleSpec::default().rng(100);
    for n in 1..=3 {
        for _ in 0..3 {
            let f = random_cochain(n, 1, &mut rng);
            let r = check_sesquilinearity(&f, &samples(n, 30, n as u64)).unwrap();
            assert!(r.is_none(), "{}", r.unwrap());
        }
    }
}

#[test]
fn unit_law() {
    let mut rng = SampleSpec::default().rng(101);
    for n in 1..=3 {
        let f = random_cochain(n, 1, &mut rng);
        let r = check_unit(&f, &samples(n, 20, 7)).unwrap();
        assert!(r.is_none(), "{}", r.unwrap());
    }
}

#[test]
fn associativity_small() {
    let mut rng = SampleSpec::default().rng(102);
    for (m1, m2, h_arity) in [(1, 2, 2), (2, 1, 2), (1, 1, 2), (2, 2, 1)] {
        let f = random_cochain(2, 1, &mut rng);
        let gs = vec![random_cochain(m1, 1, &mut rng), random_cochain(m2, 1, &mut rng)];
        let total = m1 + m2;
        let hs: Vec<ClCochain> = (0..total)
            .map(|j| {
                if j == 0 {
                    random_cochain(h_arity, 1, &mut rng)
                } else {
                    ClCochain::unit()
                }
            })
            .collect();
        let n = total + h_arity - 1;
        let r = check_associativity(&f, &gs, &hs, &samples(n, 6, 9)).unwrap();
        assert!(r.is_none(), "({m1},{m2}) {}", r.unwrap());
    }
}

#[test]
fn equivariance_small() {
    let mut rng = SampleSpec::default().rng(103);
    let f = random_cochain(2, 1, &mut rng);
    let gs = vec![random_cochain(2, 1, &mut rng), random_cochain(1, 1, &mut rng)];
    let sigma: Perm = "[2 1]".parse().unwrap();
    let taus = vec!["[2 1]".parse().unwrap(), Perm::identity(1)];
    let r = check_equivariance(&f, &sigma, &gs, &taus, &samples(3, 20, 11)).unwrap();
    assert!(r.is_none(), "{}", r.unwrap());
}

#[test]
fn symmetrized_is_symmetric_and_action_composes() {
    let mut rng = SampleSpec::default().rng(104);
    let z = random_cochain(3, 1, &mut rng);
    let s = z.symmetrize();
    let smp = samples(3, 10, 12);
    assert!(check_symmetry(&s, SymmetryGroup::All, &smp).unwrap().is_none());
    let a: Perm = "[2 3 1]".parse().unwrap();
    let b: Perm = "[2 1 3]".parse().unwrap();
    let lhs = z.act(&a).unwrap().act(&b).unwrap();
    let rhs = z.act(&a.compose(&b)).unwrap();
    for l in pvacl::graph::enumerate_lines(3) {
        for v in &smp {
            let g = l.to_digraph();
            assert_eq!(lhs.eval(&g, v).unwrap(), rhs.eval(&g, v).unwrap());
        }
    }
}
