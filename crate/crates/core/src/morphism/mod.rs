//! The map `φ: W_cl(ΠV) → C_∂(V)`, `Y ↦ Y^{Λ_n}`, its inverse in top degree,
//! and the comparison of `ad X` with the Hochschild differential.

use std::fmt;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DiffPoly, GenNames, LambdaPoly, Rat};
use crate::error::{Error, Result};
use crate::graph::{enumerate_lines, Digraph, LineGraph};
use crate::hochschild::{check_harrison, samples, HCochain};
use crate::operad::{bracket, check_symmetry, random_symmetric, ClCochain, Cochain, SymmetryGroup};
use crate::perm::Perm;
use crate::pva::{build_master, Pva};
use crate::report::{CheckResult, Report};
use crate::sample::SampleSpec;

/// `φ(Y) = Y^{Λ_n}`, a cochain `V^{⊗n} → V`.
pub fn phi(y: &ClCochain) -> HCochain {
    let y = y.clone();
    let n = y.arity();
    let line = Digraph::standard_line(n);
    HCochain::from_fn(n, format!("φ({})", y.describe()), move |v| {
        y.eval(&line, v)?
            .as_scalar()
            .ok_or_else(|| Error::Invalid(format!("{} is not scalar on the standard line", y.describe())))
    })
}

/// `Y^Γ = 0` off connected lines and `Y^{τ(Λ_n)}(v) = sign(τ) F(v_{τ(1)}..v_{τ(n)})`.
struct Lifted {
    f: HCochain,
}

impl Cochain for Lifted {
    fn arity(&self) -> usize {
        self.f.arity()
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let n = self.arity();
        let tau = match LineGraph::from_digraph(line).and_then(|l| l.as_permuted_standard()) {
            Some(t) => t,
            None => return Ok(LambdaPoly::zero(n)),
        };
        let args: Vec<DiffPoly> = (0..n).map(|i| v[tau.apply(i)].clone()).collect();
        let val = self.f.eval(&args)?;
        Ok(LambdaPoly::scalar(n, if tau.sign() < 0 { -val } else { val }))
    }

    fn describe(&self) -> String {
        format!("lift({})", self.f.describe())
    }
}

/// The unique top-degree `Y` with `Y^{Λ_n} = F`; fails unless `F` passes the
/// Harrison conditions on `inputs`.
pub fn lift_top(f: &HCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<ClCochain> {
    if f.arity() == 0 {
        return Err(Error::Unsupported("lifting a 0-cochain".into()));
    }
    let report = check_harrison(f, inputs, names)?;
    if let Some(bad) = report.results.iter().find(|r| !r.passed) {
        return Err(Error::CheckFailed(format!("{} fails {bad}", f.describe())));
    }
    Ok(lift_top_unchecked(f))
}

pub fn lift_top_unchecked(f: &HCochain) -> ClCochain {
    ClCochain::new(Lifted { f: f.clone() })
}

fn sign_rat(negative: bool) -> Rat {
    if negative {
        -Rat::one()
    } else {
        Rat::one()
    }
}

/// `[X,Y]^{Λ_{n+1}} = (-1)^{n+1} d(Y^{Λ_n})` on `inputs` of length `n + 1`.
pub fn check_chain_map(x: &ClCochain, y: &ClCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<CheckResult> {
    let n = y.arity();
    let name = format!("[X,Y]^Λ{} = (-1)^{} d(φ(Y)) for Y of arity {n}", n + 1, n + 1);
    let xy = bracket(x, y)?;
    let line = Digraph::standard_line(n + 1);
    let dphi = phi(y).d();
    let s = sign_rat((n + 1) % 2 == 1);
    for v in inputs {
        let lhs = xy.eval(&line, v)?;
        let rhs = dphi.eval(v)?;
        let ok = match lhs.as_scalar() {
            Some(l) => l == rhs.scale(&s),
            None => false,
        };
        if !ok {
            let args: Vec<String> = v.iter().map(|a| a.fmt_with(names)).collect();
            return Ok(CheckResult::fail(
                name,
                inputs.len(),
                format!("({}): {} ≠ {}", args.join(" ⊗ "), lhs.fmt_with(names), rhs.scale(&s).fmt_with(names)),
            ));
        }
    }
    Ok(CheckResult::pass(name, inputs.len()))
}

/// Guards against vacuous checks: `F` is nonzero on at least one input.
pub fn check_nonvanishing(label: &str, f: &HCochain, inputs: &[Vec<DiffPoly>]) -> Result<CheckResult> {
    let name = format!("{label} ≠ 0 on some sample");
    for v in inputs {
        if !f.eval(v)?.is_zero() {
            return Ok(CheckResult::pass(name, inputs.len()));
        }
    }
    Ok(CheckResult::fail(name, inputs.len(), "vanishes on every sample"))
}

/// For `Y = [X,Z]`: `[X,Y]` vanishes on the standard line and `d(φ(Y)) = 0`.
pub fn check_cocycle(x: &ClCochain, z: &ClCochain, inputs: &[Vec<DiffPoly>], names: &GenNames) -> Result<Report> {
    let y = bracket(x, z)?;
    let n = y.arity();
    let mut report = Report::new(format!("cocycle from [X,Z], Z of arity {}", z.arity()));
    let xy = bracket(x, &y)?;
    let line = Digraph::standard_line(n + 1);
    let dphi = phi(&y).d();
    let mut ad = CheckResult::pass(format!("[X,[X,Z]]^Λ{} = 0", n + 1), inputs.len());
    let mut cocycle = CheckResult::pass(format!("d(φ([X,Z])) = 0 at arity {}", n + 1), inputs.len());
    for v in inputs {
        let args = || v.iter().map(|a| a.fmt_with(names)).collect::<Vec<_>>().join(" ⊗ ");
        let l = xy.eval(&line, v)?;
        if ad.passed && !l.is_zero() {
            ad = CheckResult::fail(&ad.name, inputs.len(), format!("({}) ↦ {}", args(), l.fmt_with(names)));
        }
        let d = dphi.eval(v)?;
        if cocycle.passed && !d.is_zero() {
            cocycle = CheckResult::fail(&cocycle.name, inputs.len(), format!("({}) ↦ {}", args(), d.fmt_with(names)));
        }
    }
    report.push(ad);
    report.push(cocycle);
    Ok(report)
}

/// One step of the symmetry argument for a lifted cochain: for `Γ = τ(Λ_n)`
/// and `k = τ^{-1}σ^{-1}(1)`,
/// `(Y^σ)^Γ(v) = sign(τ) (L_k F)(v_{τ(1)}..v_{τ(n)})`, which equals
/// `Y^Γ(v) = sign(τ) F(v_{τ(1)}..v_{τ(n)})` when `F` is Harrison.
#[derive(Clone, Debug)]
pub struct TraceRow {
    pub sigma: Perm,
    pub tau: Perm,
    pub k: usize,
    pub acted: DiffPoly,
    pub via_l: DiffPoly,
    pub lifted: DiffPoly,
}

impl TraceRow {
    pub fn operator_step_holds(&self) -> bool {
        self.acted == self.via_l
    }

    pub fn symmetric(&self) -> bool {
        self.acted == self.lifted
    }
}

impl fmt::Display for TraceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ={} τ={} k={}: (Y^σ)^Γ = {} | sign(τ)(L_k F)(v_τ) = {} | Y^Γ = {}",
            self.sigma, self.tau, self.k, self.acted, self.via_l, self.lifted
        )
    }
}

/// All rows `(σ, τ)` for `σ ∈ S_n` and connected lines `τ(Λ_n)`.
pub fn trace_symmetry(f: &HCochain, v: &[DiffPoly]) -> Result<Vec<TraceRow>> {
    let n = f.arity();
    let y = lift_top_unchecked(f);
    let mut rows = Vec::new();
    for sigma in Perm::all(n) {
        let ys = y.act(&sigma)?;
        for line in enumerate_lines(n) {
            let tau = match line.as_permuted_standard() {
                Some(t) => t,
                None => continue,
            };
            let g = line.to_digraph();
            let acted = ys
                .eval(&g, v)?
                .as_scalar()
                .ok_or_else(|| Error::Invalid("lifted value depends on λ".into()))?;
            let k = tau.inverse().apply(sigma.inverse().apply(0)) + 1;
            let vt: Vec<DiffPoly> = (0..n).map(|i| v[tau.apply(i)].clone()).collect();
            let s = sign_rat(tau.sign() < 0);
            let lk = if k == 1 { f.clone() } else { f.harrison_l(k)? };
            rows.push(TraceRow {
                sigma: sigma.clone(),
                tau: tau.clone(),
                k,
                acted,
                via_l: lk.eval(&vt)?.scale(&s),
                lifted: f.eval(&vt)?.scale(&s),
            });
        }
    }
    Ok(rows)
}

/// `φ` on `W^{n-1}` for a structure: Harrison values, the top-degree inverse,
/// the chain-map identity and the cocycle property of `[X,Z]`.
pub fn check_diagram(p: &Pva, n: usize, spec: &SampleSpec) -> Result<Report> {
    if n == 0 {
        return Err(Error::Unsupported("arity 0".into()));
    }
    let x = build_master(p, spec)?;
    let names = p.names();
    let ngens = p.ngens();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(0x5eed + n as u64));
    let y = random_symmetric(n, ngens, &mut rng).cached();
    let at_n = samples(n, ngens, spec, 10 + n as u64);
    let at_n1 = samples(n + 1, ngens, spec, 20 + n as u64);
    let mut report = Report::new(format!("diagram for {} at arity {n}", p.name()));

    let f = phi(&y);
    report.push(check_nonvanishing("φ(Y)", &f, &at_n)?);
    for r in check_harrison(&f, &at_n, names)?.results {
        report.push(CheckResult { name: format!("φ(Y): {}", r.name), ..r });
    }

    let lifted = lift_top_unchecked(&f);
    let mut round = CheckResult::pass("φ(lift(F)) = F", at_n.len());
    let mut top = CheckResult::pass("lift(φ(Y)) = top-degree part of Y", at_n.len() * enumerate_lines(n).len());
    let back = phi(&lifted);
    let graded = y.grade_component(n - 1);
    for v in &at_n {
        let (a, b) = (back.eval(v)?, f.eval(v)?);
        if round.passed && a != b {
            round = CheckResult::fail(&round.name, round.instances, format!("{a} ≠ {b}"));
        }
        for line in enumerate_lines(n) {
            let g = line.to_digraph();
            let (a, b) = (lifted.eval(&g, v)?, graded.eval(&g, v)?);
            if top.passed && a != b {
                top = CheckResult::fail(&top.name, top.instances, format!("on {line}: {a} ≠ {b}"));
            }
        }
    }
    report.push(round);
    report.push(top);
    report.push(match check_symmetry(&lifted, SymmetryGroup::All, &at_n)? {
        None => CheckResult::pass("lift(F) symmetric", at_n.len()),
        Some(c) => CheckResult::fail("lift(F) symmetric", at_n.len(), c.to_string()),
    });

    report.push(check_chain_map(&x, &y, &at_n1, names)?);
    if n >= 2 {
        let z = random_symmetric(n - 1, ngens, &mut rng).cached();
        for r in check_cocycle(&x, &z, &at_n1, names)?.results {
            report.push(r);
        }
    }
    Ok(report)
}
