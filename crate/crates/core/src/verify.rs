//! The named verification suites behind `pvacl verify`.
//!
//! Every suite is a pure function of its [`SuiteConfig`]: inputs come from
//! seeded streams and results are assembled in a fixed order, so equal
//! configurations give equal reports.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{DiffPoly, GenNames};
use crate::error::{Error, Result};
use crate::graph::{enumerate_lines, lemma_connected_lines, lemma_monotone_lines, reduce, RelationSpan, MAX_ORACLE_ARITY};
use crate::hochschild::{check_d_linear, check_d_squared, check_harrison, random_hcochain, samples};
use crate::morphism::{check_chain_map, check_cocycle, check_diagram, check_nonvanishing, phi};
use crate::operad::{
    check_associativity, check_equivariance, check_sesquilinearity, check_unit, random_cochain, random_symmetric, Outcome,
};
use crate::perm::{enumerate_monotone, Perm};
use crate::pva::{build_master, build_master_unchecked, check_axioms, check_master_square, Pva};
use crate::report::{CheckResult, Report};
use crate::sample::{monomial_basis, tuples, SampleSpec};

pub const SUITES: &[&str] = &[
    "monotone-lemmas",
    "line-identities",
    "operad-axioms",
    "pva-axioms",
    "master-square",
    "hochschild",
    "harrison-closure",
    "chain-map",
    "diagram",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub spec: SampleSpec,
    pub max_arity: usize,
    /// Bound for the combinatorial suites; `None` picks the suite default.
    pub n: Option<usize>,
    pub structure: Pva,
}

impl SuiteConfig {
    pub fn new(structure: Pva) -> Self {
        SuiteConfig {
            spec: SampleSpec::default(),
            max_arity: 3,
            n: None,
            structure,
        }
    }

    fn describe(&self) -> String {
        let mut s = format!(
            "seed {}, max-degree {}, max-order {}, samples {}, max-arity {}, structure {}",
            self.spec.seed,
            self.spec.max_degree,
            self.spec.max_order,
            self.spec.limit,
            self.max_arity,
            self.structure.name()
        );
        if let Some(n) = self.n {
            s.push_str(&format!(", n {n}"));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: String,
    pub sections: Vec<Report>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Report::passed)
    }

    pub fn results(&self) -> impl Iterator<Item = &CheckResult> {
        self.sections.iter().flat_map(|s| s.results.iter())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        writeln!(f, "config: {}", self.config)?;
        for s in &self.sections {
            writeln!(f)?;
            write!(f, "{s}")?;
        }
        let total = self.results().count();
        let failed = self.results().filter(|r| !r.passed).count();
        writeln!(f)?;
        if failed == 0 {
            writeln!(f, "PASS {total} checks")
        } else {
            writeln!(f, "FAIL {failed} of {total} checks")
        }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let sections = match name {
        "monotone-lemmas" => vec![monotone_lemmas(cfg.n.unwrap_or(7))?],
        "line-identities" => line_identities(cfg.n.unwrap_or(5))?,
        "operad-axioms" => vec![operad_axioms(cfg)?],
        "pva-axioms" => vec![check_axioms(&cfg.structure, &cfg.spec)?],
        "master-square" => master_square(cfg)?,
        "hochschild" => vec![hochschild(cfg)?],
        "harrison-closure" => vec![harrison_closure(cfg)?],
        "chain-map" => chain_map(cfg)?,
        "diagram" => (1..=cfg.max_arity)
            .map(|n| check_diagram(&cfg.structure, n, &cfg.spec))
            .collect::<Result<_>>()?,
        _ => {
            return Err(Error::Invalid(format!(
                "unknown suite '{name}' (expected one of: {})",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        config: cfg.describe(),
        sections,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn first_failure(name: impl Into<String>, instances: usize, failures: impl IntoIterator<Item = String>) -> CheckResult {
    match failures.into_iter().next() {
        None => CheckResult::pass(name, instances),
        Some(f) => CheckResult::fail(name, instances, f),
    }
}

/// Counts, the drop-sign law and both restriction bijections with their sign
/// laws, exhaustively for `n ≤ max_n`.
pub fn monotone_lemmas(max_n: usize) -> Result<Report> {
    let mut report = Report::new(format!("monotone permutations, n ≤ {max_n}"));
    let mut by_nk = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            by_nk.push((n, k, enumerate_monotone(n, k)?));
        }
    }
    let get = |n: usize, k: usize| -> &[crate::perm::MonotonePerm] {
        &by_nk.iter().find(|(a, b, _)| *a == n && *b == k).expect("enumerated").2
    };

    let mut bad = Vec::new();
    for (n, k, ms) in &by_nk {
        let distinct: BTreeSet<&Perm> = ms.iter().map(|m| m.perm()).collect();
        if ms.len() != binomial(n - 1, k - 1) || distinct.len() != ms.len() {
            bad.push(format!("|M_{n}^{k}| = {} (distinct {})", ms.len(), distinct.len()));
        }
    }
    report.push(first_failure("|M_n^k| = C(n-1,k-1)", by_nk.len(), bad));

    let total: usize = by_nk.iter().map(|(_, _, ms)| ms.len()).sum();
    let bad = by_nk.iter().flat_map(|(_, k, ms)| {
        ms.iter().filter_map(move |m| {
            let rhs = if (k - 1) % 2 == 0 { m.perm().sign() } else { -m.perm().sign() };
            (m.drop_sign() != rhs).then(|| format!("{}: (-1)^dr = {}", m.perm(), m.drop_sign()))
        })
    });
    report.push(first_failure("(-1)^dr(π) = (-1)^(k-1) sign(π)", total, bad.collect::<Vec<_>>()));

    // deleting the first entry: M_n^{k,k-1} ≅ M_{n-1}^{k-1}, M_n^{k,k+1} ≅ M_{n-1}^k
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=max_n {
        for k in 1..=n {
            for (second, target_k, shift) in [(k.wrapping_sub(1), k.wrapping_sub(1), k), (k + 1, k, k.wrapping_sub(1))] {
                if target_k < 1 || target_k > n - 1 {
                    continue;
                }
                let mut images = BTreeSet::new();
                for m in get(n, k).iter().filter(|m| m.perm().one_line()[1] == second) {
                    count += 1;
                    let r = m.restrict_second()?;
                    let law = if shift % 2 == 0 { m.drop_sign() } else { -m.drop_sign() };
                    if r.perm.start() != target_k || r.perm.drop_sign() != law {
                        bad.push(format!("{} ↦ {}", m.perm(), r.perm.perm()));
                    }
                    images.insert(r.perm.perm().clone());
                }
                let target: BTreeSet<Perm> = get(n - 1, target_k).iter().map(|m| m.perm().clone()).collect();
                if images != target {
                    bad.push(format!("M_{n}^({k},{second}) → M_{}^{target_k} is not a bijection", n - 1));
                }
            }
        }
    }
    report.push(first_failure("deleting the first entry is a bijection with its sign law", count, bad));

    // deleting the last entry: ¹M_n^k ≅ M_{n-1}^{k-1}, ⁿM_n^k ≅ M_{n-1}^k
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=max_n {
        for k in 1..=n {
            for (last, target_k, shift) in [(1, k.wrapping_sub(1), n), (n, k, 0)] {
                if target_k < 1 || target_k > n - 1 {
                    continue;
                }
                let mut images = BTreeSet::new();
                for m in get(n, k).iter().filter(|m| m.perm().one_line()[n - 1] == last) {
                    count += 1;
                    let r = m.restrict_last()?;
                    let law = if shift % 2 == 0 { m.drop_sign() } else { -m.drop_sign() };
                    if r.perm.start() != target_k || r.perm.drop_sign() != law {
                        bad.push(format!("{} ↦ {}", m.perm(), r.perm.perm()));
                    }
                    images.insert(r.perm.perm().clone());
                }
                let target: BTreeSet<Perm> = get(n - 1, target_k).iter().map(|m| m.perm().clone()).collect();
                if images != target {
                    bad.push(format!("M_{n}^{k} ending in {last} → M_{}^{target_k} is not a bijection", n - 1));
                }
            }
        }
    }
    report.push(first_failure("deleting the last entry is a bijection with its sign law", count, bad));
    Ok(report)
}

/// The line basis against the rank oracle, and the two line identities.
pub fn line_identities(max_n: usize) -> Result<Vec<Report>> {
    let mut basis = Report::new(format!("line basis, n ≤ {}", max_n.min(MAX_ORACLE_ARITY)));
    for n in 1..=max_n.min(MAX_ORACLE_ARITY) {
        let span = RelationSpan::build(n)?;
        let lines = enumerate_lines(n).len();
        let name = format!("dim F𝒢({n})/R({n}) = |𝓛({n})| = {lines}");
        basis.push(if span.quotient_dim() == lines {
            CheckResult::pass(name, span.total_graphs())
        } else {
            CheckResult::fail(name, span.total_graphs(), format!("rank oracle gives {}", span.quotient_dim()))
        });
    }

    let mut lemmas = Report::new(format!("line identities, n ≤ {max_n}"));
    for n in 2..=max_n {
        let v = lemma_connected_lines(n);
        let r = reduce(&v);
        let name = format!("vertex 1 inserted along 2→…→{n} sums to 0");
        lemmas.push(if r.is_zero() {
            CheckResult::pass(name, v.len())
        } else {
            CheckResult::fail(name, v.len(), r.to_string())
        });
    }
    for n in 2..=max_n {
        let mut bad = Vec::new();
        let mut count = 0;
        for k in 1..=n {
            let v = lemma_monotone_lines(n, k)?;
            count += v.len();
            let r = reduce(&v);
            if !r.is_zero() {
                bad.push(format!("k = {k}: {r}"));
            }
        }
        lemmas.push(first_failure(format!("Λ_{n} + (-1)^k Σ_(π∈M_{n}^k) π(Λ_{n}) = 0 for every k"), count, bad));
    }
    Ok(vec![basis, lemmas])
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn outcome(name: impl Into<String>, instances: usize, o: Outcome) -> Result<CheckResult> {
    Ok(match o? {
        None => CheckResult::pass(name, instances),
        Some(c) => CheckResult::fail(name, instances, c.to_string()),
    })
}

fn inputs(n: usize, ngens: usize, spec: &SampleSpec, stream: u64) -> Vec<Vec<DiffPoly>> {
    let basis = monomial_basis(ngens, spec.max_degree, spec.max_order);
    tuples(n, &basis, spec.limit, &mut spec.rng(stream))
}

/// Sesquilinearity, unit, associativity and equivariance for random cochains
/// whose composites have arity at most `max_arity`.
pub fn operad_axioms(cfg: &SuiteConfig) -> Result<Report> {
    let spec = &cfg.spec;
    let ngens = cfg.structure.ngens();
    let top = cfg.max_arity;
    let mut rng = spec.rng(200);
    let mut report = Report::new(format!("operad laws, arity ≤ {top}"));

    for n in 1..=top {
        let f = random_cochain(n, ngens, &mut rng);
        let v = inputs(n, ngens, spec, 210 + n as u64);
        report.push(outcome(format!("sesquilinearity, arity {n}"), v.len(), check_sesquilinearity(&f, &v))?);
        report.push(outcome(format!("unit, arity {n}"), v.len(), check_unit(&f, &v))?);
    }

    // f of arity k, g's of arities m (Σm = M), h's of arities ℓ (Σℓ = N ≤ top)
    for total in 1..=top {
        let v = inputs(total, ngens, spec, 220 + total as u64);
        let mut bad = Vec::new();
        let mut cases = 0;
        for big_m in 1..=total {
            for k in 1..=big_m {
                for ms in compositions(big_m, k) {
                    for ls in compositions(total, big_m) {
                        let f = random_cochain(k, ngens, &mut rng);
                        let gs: Vec<_> = ms.iter().map(|&m| random_cochain(m, ngens, &mut rng)).collect();
                        let hs: Vec<_> = ls.iter().map(|&l| random_cochain(l, ngens, &mut rng)).collect();
                        cases += 1;
                        if let Some(c) = check_associativity(&f, &gs, &hs, &v)? {
                            bad.push(format!("g arities {ms:?}, h arities {ls:?}: {c}"));
                        }
                    }
                }
            }
        }
        report.push(first_failure(format!("associativity, composite arity {total}"), cases * v.len(), bad));
    }

    for total in 1..=top {
        let v = inputs(total, ngens, spec, 230 + total as u64);
        let mut bad = Vec::new();
        let mut cases = 0;
        for k in 1..=total {
            for ms in compositions(total, k) {
                let f = random_cochain(k, ngens, &mut rng);
                let gs: Vec<_> = ms.iter().map(|&m| random_cochain(m, ngens, &mut rng)).collect();
                for sigma in Perm::all(k) {
                    let taus: Vec<Perm> = ms
                        .iter()
                        .map(|&m| {
                            let all = Perm::all(m);
                            all[rng.gen_range(0..all.len())].clone()
                        })
                        .collect();
                    cases += 1;
                    if let Some(c) = check_equivariance(&f, &sigma, &gs, &taus, &v)? {
                        bad.push(format!("σ = {sigma}, g arities {ms:?}: {c}"));
                    }
                }
            }
        }
        report.push(first_failure(format!("equivariance, composite arity {total}"), cases * v.len(), bad));
    }
    Ok(report)
}

/// The structure's axioms, `X□X` line by line, and whether the two verdicts
/// agree.
pub fn master_square(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let p = &cfg.structure;
    let axioms = check_axioms(p, &cfg.spec)?;
    let x = build_master_unchecked(p);
    let square = check_master_square(&x, p.names(), &cfg.spec)?;
    let mut agree = Report::new("equivalence");
    let name = "axioms hold ⟺ X□X = 0 with X symmetric";
    agree.push(if axioms.passed() == square.passed() {
        CheckResult::pass(name, 1)
    } else {
        CheckResult::fail(name, 1, format!("axioms {}, square {}", axioms.passed(), square.passed()))
    });
    Ok(vec![axioms, square, agree])
}

/// `d∘d = 0` and preservation of `∂`-linearity on random differential
/// cochains of arity `≤ max_arity`.
pub fn hochschild(cfg: &SuiteConfig) -> Result<Report> {
    let spec = &cfg.spec;
    let names = cfg.structure.names();
    let ngens = cfg.structure.ngens();
    let mut rng = spec.rng(300);
    let mut report = Report::new(format!("Hochschild differential, arity ≤ {}", cfg.max_arity));
    for n in 1..=cfg.max_arity {
        let at_n = samples(n, ngens, spec, 310 + n as u64);
        let at_n1 = samples(n + 1, ngens, spec, 320 + n as u64);
        let at_n2 = samples(n + 2, ngens, spec, 330 + n as u64);
        for i in 0..3 {
            let f = random_hcochain(n, ngens, &mut rng);
            let tag = format!("F{} = {}", i + 1, f.describe());
            let checks = [
                ("∂-linearity of F", check_d_linear(&f, &at_n, names)?),
                ("∂-linearity of dF", check_d_linear(&f.d(), &at_n1, names)?),
                ("d∘d = 0", check_d_squared(&f, &at_n2, names)?),
            ];
            for (what, r) in checks {
                report.push(CheckResult {
                    name: format!("{tag}: {what}"),
                    ..r
                });
            }
        }
    }
    Ok(report)
}

fn prefixed(report: Report, prefix: &str) -> impl Iterator<Item = CheckResult> + '_ {
    report.results.into_iter().map(move |r| CheckResult {
        name: format!("{prefix}: {}", r.name),
        ..r
    })
}

/// Harrison cochains from symmetric elements, and the closure of the Harrison
/// conditions under `d`.
pub fn harrison_closure(cfg: &SuiteConfig) -> Result<Report> {
    let spec = &cfg.spec;
    let names = cfg.structure.names();
    let ngens = cfg.structure.ngens();
    let mut rng = spec.rng(400);
    let mut report = Report::new(format!("Harrison subcomplex, arity ≤ {}", cfg.max_arity));
    for n in 1..=cfg.max_arity {
        let at_n = samples(n, ngens, spec, 410 + n as u64);
        let at_n1 = samples(n + 1, ngens, spec, 420 + n as u64);
        let y = random_symmetric(n, ngens, &mut rng).cached();
        let f = phi(&y);
        report.results.extend(prefixed(check_harrison(&f, &at_n, names)?, &format!("φ(Y), arity {n}")));
        report.results.extend(prefixed(check_harrison(&f.d(), &at_n1, names)?, &format!("d φ(Y), arity {}", n + 1)));
        if n <= 2 {
            let g = random_hcochain(n, ngens, &mut rng).symmetrize();
            report.results.extend(prefixed(check_harrison(&g, &at_n, names)?, &format!("symmetrized F, arity {n}")));
            report.results.extend(prefixed(check_harrison(&g.d(), &at_n1, names)?, &format!("d of symmetrized F, arity {}", n + 1)));
        }
    }
    Ok(report)
}

/// The chain-map identity for symmetric `Y` of arity `≤ max_arity` and the
/// cocycle `φ([X,Z])`.
pub fn chain_map(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let spec = &cfg.spec;
    let p = &cfg.structure;
    let names: &GenNames = p.names();
    let x = build_master(p, spec)?;
    let mut rng = spec.rng(500);
    let mut main = Report::new(format!("chain map for {}", p.name()));
    let mut out = Vec::new();
    for n in 1..=cfg.max_arity {
        let y = random_symmetric(n, p.ngens(), &mut rng).cached();
        main.push(check_nonvanishing(&format!("φ(Y) for Y of arity {n}"), &phi(&y), &samples(n, p.ngens(), spec, 530 + n as u64))?);
        main.push(check_chain_map(&x, &y, &samples(n + 1, p.ngens(), spec, 510 + n as u64), names)?);
    }
    out.push(main);
    for n in 1..cfg.max_arity {
        let z = random_symmetric(n, p.ngens(), &mut rng).cached();
        out.push(check_cocycle(&x, &z, &samples(n + 2, p.ngens(), spec, 520 + n as u64), names)?);
    }
    Ok(out)
}
