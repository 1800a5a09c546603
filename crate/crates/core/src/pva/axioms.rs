//! Sampled checks of the PVA axioms.

use num_traits::One;
use rayon::prelude::*;

use super::Pva;
use crate::algebra::{Affine, DiffPoly, Rat, RatPoly, VPoly};
use crate::error::Result;
use crate::report::{CheckResult, Report};
use crate::sample::{monomial_basis, tuples, SampleSpec};

type Identity<'a> = dyn Fn(&[DiffPoly]) -> Result<Option<(VPoly, VPoly)>> + Sync + 'a;

fn run(p: &Pva, name: &str, inputs: &[Vec<DiffPoly>], vars: &[&str], f: &Identity) -> Result<CheckResult> {
    let outcomes: Vec<Option<(VPoly, VPoly)>> =
        inputs.par_iter().map(|v| f(v)).collect::<Result<_>>()?;
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    for (v, o) in inputs.iter().zip(outcomes) {
        if let Some((lhs, rhs)) = o {
            let args: Vec<String> = v.iter().map(|x| x.fmt_with(p.names())).collect();
            return Ok(CheckResult::fail(
                name,
                inputs.len(),
                format!(
                    "({}): {} ≠ {}",
                    args.join(", "),
                    lhs.fmt_with(p.names(), &vars),
                    rhs.fmt_with(p.names(), &vars)
                ),
            ));
        }
    }
    Ok(CheckResult::pass(name, inputs.len()))
}

fn differ(lhs: VPoly, rhs: VPoly) -> Option<(VPoly, VPoly)> {
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

/// Commutativity and associativity of the product, sesquilinearity,
/// skewsymmetry, Jacobi and the left Leibniz rule on sampled monomials.
pub fn check_axioms(p: &Pva, spec: &SampleSpec) -> Result<Report> {
    let basis = monomial_basis(p.ngens(), spec.max_degree, spec.max_order);
    let pairs = tuples(2, &basis, spec.limit, &mut spec.rng(1));
    let triples = tuples(3, &basis, spec.limit, &mut spec.rng(2));
    let one = [Rat::one()];
    let mut report = Report::new(format!("axioms of {}", p.name()));

    report.push(run(p, "commutativity", &pairs, &[], &|v| {
        let lhs = VPoly::from_diffpoly(1, p.product(&v[0], &v[1]));
        let rhs = VPoly::from_diffpoly(1, p.product(&v[1], &v[0]));
        Ok(differ(lhs, rhs))
    })?);

    report.push(run(p, "associativity", &triples, &[], &|v| {
        let lhs = p.product(&p.product(&v[0], &v[1]), &v[2]);
        let rhs = p.product(&v[0], &p.product(&v[1], &v[2]));
        Ok(differ(VPoly::from_diffpoly(1, lhs), VPoly::from_diffpoly(1, rhs)))
    })?);

    report.push(run(p, "sesquilinearity", &pairs, &["l"], &|v| {
        let ab = p.bracket(&v[0], &v[1])?;
        // [∂a_λ b] = -λ[a_λ b]
        let lhs = p.bracket(&v[0].derive(), &v[1])?;
        let rhs = ab.mul_ratpoly(&RatPoly::var(1, 0)).neg();
        if lhs != rhs {
            return Ok(Some((lhs, rhs)));
        }
        // [a_λ ∂b] = (λ+∂)[a_λ b]
        let lhs = p.bracket(&v[0], &v[1].derive())?;
        let rhs = ab.apply_shifted_d_power(&one, 1);
        Ok(differ(lhs, rhs))
    })?);

    report.push(run(p, "skewsymmetry", &pairs, &["l"], &|v| {
        // [a_λ b] = -[b_{-λ-∂} a]
        let lhs = p.bracket(&v[0], &v[1])?;
        let flip = [Affine::linear(vec![-Rat::one()]).with_d(-Rat::one())];
        let rhs = p.bracket(&v[1], &v[0])?.substitute(&flip, 1).neg();
        Ok(differ(lhs, rhs))
    })?);

    report.push(run(p, "jacobi", &triples, &["l", "m"], &|v| {
        // [a_λ [b_μ c]] - [b_μ [a_λ c]] = [[a_λ b]_{λ+μ} c]
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let bc = p.bracket(b, c)?.relabel(&[1], 2);
        let ac = p.bracket(a, c)?.relabel(&[0], 2);
        let lhs = p.bracket_into(a, &bc, 0)?.sub(&p.bracket_into(b, &ac, 1)?);
        let ab = p.bracket(a, b)?.relabel(&[0], 2);
        let rhs = p.bracket_from(&ab, c, &[Rat::one(), Rat::one()])?;
        Ok(differ(lhs, rhs))
    })?);

    report.push(run(p, "left-leibniz", &triples, &["l"], &|v| {
        // [a_λ b∗c] = [a_λ b]∗c + b∗[a_λ c]
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let lhs = p.bracket(a, &p.product(b, c))?;
        let mut rhs = p.product_right(&p.bracket(a, b)?, c);
        rhs.add_assign(&p.product_right(&p.bracket(a, c)?, b));
        Ok(differ(lhs, rhs))
    })?);

    Ok(report)
}
