//! Sampled checks on Hochschild cochains.

use rayon::prelude::*;

use super::HCochain;
use crate::algebra::{DiffPoly, GenNames};
use crate::error::Result;
use crate::report::{CheckResult, Report};
use crate::sample::{monomial_basis, tuples, SampleSpec};

/// Seeded monomial tuples of length `n`.
pub fn samples(n: usize, ngens: usize, spec: &SampleSpec, stream: u64) -> Vec<Vec<DiffPoly>> {
    let basis = monomial_basis(ngens, spec.max_degree, spec.max_order);
    tuples(n, &basis, spec.limit, &mut spec.rng(stream))
}

fn first_failure<F>(name: &str, inputs: &[Vec<DiffPoly>], names: &GenNames, f: F) -> Result<CheckResult>
where
    F: Fn(&[DiffPoly]) -> Result<Option<(DiffPoly, DiffPoly)>> + Sync,
{
    let outcomes: Vec<Option<(DiffPoly, DiffPoly)>> =
        inputs.par_iter().map(|v| f(v)).collect::<Result<_>>()?;
    for (v, o) in inputs.iter().zip(outcomes) {
        if let Some((lhs, rhs)) = o {
            let args: Vec<String> = v.iter().map(|a| a.fmt_with(names)).collect();
            return Ok(CheckResult::fail(
                name,
                inputs.len(),
                format!("({}): {} ≠ {}", args.join(" ⊗ "), lhs.fmt_with(names), rhs.fmt_with(names)),
            ));
        }
    }
    Ok(CheckResult::pass(name, inputs.len()))
}

fn differ(lhs: DiffPoly, rhs: DiffPoly) -> Option<(DiffPoly, DiffPoly)> {
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

/// `F(∂(a_1 ⊗ … ⊗ a_n)) = ∂F(a_1 ⊗ … ⊗ a_n)` with `∂` acting on the tensor
/// by the Leibniz rule.
pub fn check_d_linear(f: &HCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<CheckResult> {
    first_failure("∂-linearity", inputs, names, |a| {
        let mut lhs = DiffPoly::zero();
        for i in 0..a.len() {
            let mut b = a.to_vec();
            b[i] = b[i].derive();
            lhs += &f.eval(&b)?;
        }
        Ok(differ(lhs, f.eval(a)?.derive()))
    })
}

/// `∂`-linearity and `L_k F = F` for `2 ≤ k ≤ n`.
pub fn check_harrison(f: &HCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<Report> {
    let mut report = Report::new(format!("Harrison conditions for {}", f.describe()));
    report.push(check_d_linear(f, inputs, names)?);
    for k in 2..=f.arity() {
        let lk = f.harrison_l(k)?;
        report.push(first_failure(&format!("L_{k} F = F"), inputs, names, |a| {
            Ok(differ(lk.eval(a)?, f.eval(a)?))
        })?);
    }
    Ok(report)
}

/// `d(dF) = 0` on inputs of length `n + 2`.
pub fn check_d_squared(f: &HCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<CheckResult> {
    let dd = f.d().d();
    first_failure("d∘d = 0", inputs, names, |a| {
        let v = dd.eval(a)?;
        Ok(if v.is_zero() { None } else { Some((v, DiffPoly::zero())) })
    })
}
