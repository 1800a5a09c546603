//! The odd element `X ∈ W^1` attached to a λ-bracket structure and the check
//! of `X□X = 0`.

use std::sync::Arc;

use super::{check_axioms, Pva};
use crate::algebra::{DiffPoly, GenNames, LambdaPoly, VPoly};
use crate::error::{Error, Result};
use crate::graph::{enumerate_lines, Digraph, LineGraph};
use crate::operad::{box_product, check_symmetry, ClCochain, Cochain, SymmetryGroup};
use crate::report::{CheckResult, Report};
use crate::sample::{monomial_basis, tuples, SampleSpec};

/// `X^{1→2}(a⊗b) = a∗b` and `X^{1 2}_{λ_1,λ_2}(a⊗b) = [a_{λ_1} b]`.
pub struct Master {
    pva: Arc<Pva>,
}

impl Master {
    pub fn new(pva: Pva) -> Self {
        Master { pva: Arc::new(pva) }
    }
}

impl Cochain for Master {
    fn arity(&self) -> usize {
        2
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        if line.num_edges() == 1 {
            Ok(LambdaPoly::scalar(2, self.pva.product(&v[0], &v[1])))
        } else {
            let b = self.pva.bracket(&v[0], &v[1])?;
            Ok(LambdaPoly::normalize(&b.relabel(&[0], 2)))
        }
    }

    fn describe(&self) -> String {
        format!("X[{}]", self.pva.name())
    }
}

/// `X` for a structure that passes [`check_axioms`].
pub fn build_master(p: &Pva, spec: &SampleSpec) -> Result<ClCochain> {
    let report = check_axioms(p, spec)?;
    if let Some(bad) = report.results.iter().find(|r| !r.passed) {
        return Err(Error::CheckFailed(format!("{} fails {}", p.name(), bad)));
    }
    Ok(build_master_unchecked(p))
}

/// `X` without checking the axioms; used to exhibit the failures of `X□X`.
pub fn build_master_unchecked(p: &Pva) -> ClCochain {
    ClCochain::new(Master::new(p.clone()))
}

/// The product `X^{1→2}(a⊗b)` and bracket `X^{1 2}_{λ,-λ-∂}(a⊗b)` read back
/// from an arity-2 cochain.
pub fn read_back(x: &ClCochain, a: &DiffPoly, b: &DiffPoly) -> Result<(DiffPoly, VPoly)> {
    let v = [a.clone(), b.clone()];
    let edge: Digraph = "n=2; edges: 1>2".parse()?;
    let prod = x
        .eval(&edge, &v)?
        .as_scalar()
        .ok_or_else(|| Error::Invalid("product depends on λ".into()))?;
    let br = x.eval(&Digraph::empty(2), &v)?.into_vpoly();
    Ok((prod, br.relabel(&[0, 0], 1)))
}

fn axiom_of(line: &LineGraph) -> &'static str {
    match line.to_digraph().num_edges() {
        2 => "commutative associative product",
        1 => "left Leibniz rule",
        _ => "Jacobi identity",
    }
}

/// `X^{(12)} = X` on `𝓛(2)` and `X□X = 0` on every line of `𝓛(3)`.
pub fn check_master_square(x: &ClCochain, names: &GenNames, spec: &SampleSpec) -> Result<Report> {
    if x.arity() != 2 {
        return Err(Error::Arity(format!("X of arity {}", x.arity())));
    }
    let basis = monomial_basis(names.0.len(), spec.max_degree, spec.max_order);
    let mut report = Report::new(format!("X□X for {}", x.describe()));

    let pairs = tuples(2, &basis, spec.limit, &mut spec.rng(3));
    report.push(match check_symmetry(x, SymmetryGroup::All, &pairs)? {
        None => CheckResult::pass("X symmetric", pairs.len() * 2),
        Some(c) => CheckResult::fail("X symmetric", pairs.len() * 2, c.to_string()),
    });

    let square = box_product(x, x)?;
    let triples = tuples(3, &basis, spec.limit, &mut spec.rng(4));
    for line in enumerate_lines(3) {
        let g = line.to_digraph();
        let name = format!("X□X = 0 on {line} ({})", axiom_of(&line));
        let mut result = CheckResult::pass(&name, triples.len());
        for v in &triples {
            let val = square.eval(&g, v)?;
            if !val.is_zero() {
                let args: Vec<String> = v.iter().map(|a| a.fmt_with(names)).collect();
                let val = val.fmt_with(names);
                result = CheckResult::fail(&name, triples.len(), format!("({}) ↦ {val}", args.join(" ⊗ ")));
                break;
            }
        }
        report.push(result);
    }
    Ok(report)
}
