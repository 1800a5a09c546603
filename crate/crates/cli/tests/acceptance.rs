//! Acceptance criteria 1–10. Each criterion prints one PASS/FAIL line with its
//! wall time; the thresholds below are fixed.

use std::process::Command;
use std::time::{Duration, Instant};

use pvacl::algebra::GenNames;
use pvacl::graph::{enumerate_lines, lemma_connected_lines, lemma_monotone_lines, reduce, RelationSpan};
use pvacl::hochschild::{check_harrison, samples};
use pvacl::morphism::{check_chain_map, check_cocycle, check_nonvanishing, lift_top, phi};
use pvacl::operad::{check_symmetry, random_symmetric, SymmetryGroup};
use pvacl::perm::enumerate_monotone;
use pvacl::pva::{build_master, build_master_unchecked, check_axioms, check_master_square, Pva};
use pvacl::sample::SampleSpec;
use pvacl::verify::{harrison_closure, hochschild, monotone_lemmas, operad_axioms, SuiteConfig};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(5);
const LIMIT_3: Duration = Duration::from_secs(60);
const LIMIT_4: Duration = Duration::from_secs(30);
const LIMIT_5: Duration = Duration::from_secs(300);
const LIMIT_6: Duration = Duration::from_secs(300);
const LIMIT_7: Duration = Duration::from_secs(60);
const LIMIT_8: Duration = Duration::from_secs(300);
const LIMIT_9: Duration = Duration::from_secs(600);

/// Samples per identity for the sampled criteria.
const SAMPLES: usize = 16;

fn spec() -> SampleSpec {
    SampleSpec {
        max_degree: 2,
        max_order: 2,
        limit: SAMPLES,
        seed: 0,
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn monotone_counts() -> Outcome {
    for n in 1..=8 {
        for k in 1..=n {
            let got = enumerate_monotone(n, k).map(|v| v.len()).unwrap_or(usize::MAX);
            if got != binomial(n - 1, k - 1) {
                return outcome(false, format!("|M_{n}^{k}| = {got}"));
            }
        }
    }
    outcome(true, "|M_n^k| = C(n-1,k-1) for 1 ≤ k ≤ n ≤ 8")
}

fn sign_law_and_bijections() -> Outcome {
    let r = monotone_lemmas(7).unwrap();
    outcome(r.passed(), format!("{} checks for n ≤ 7", r.results.len()))
        .or_report(&r.to_string())
}

trait OrReport {
    fn or_report(self, report: &str) -> Outcome;
}

impl OrReport for Outcome {
    fn or_report(self, report: &str) -> Outcome {
        if self.ok {
            self
        } else {
            outcome(false, format!("{}\n{report}", self.detail))
        }
    }
}

fn line_basis_dimension() -> Outcome {
    let expected = [(2, 2), (3, 6), (4, enumerate_lines(4).len())];
    for (n, dim) in expected {
        let span = RelationSpan::build(n).unwrap();
        if span.quotient_dim() != dim || dim != enumerate_lines(n).len() {
            return outcome(false, format!("n = {n}: quotient {} vs |𝓛| {dim}", span.quotient_dim()));
        }
    }
    outcome(true, format!("dimensions 2, 6, {}", expected[2].1))
}

fn line_identities() -> Outcome {
    for n in 2..=5 {
        let r = reduce(&lemma_connected_lines(n));
        if !r.is_zero() {
            return outcome(false, format!("connected lines, n = {n}: {r}"));
        }
        for k in 1..=n {
            let r = reduce(&lemma_monotone_lines(n, k).unwrap());
            if !r.is_zero() {
                return outcome(false, format!("monotone lines, n = {n}, k = {k}: {r}"));
            }
        }
    }
    outcome(true, "both line identities reduce to 0 for n ≤ 5")
}

fn operad_laws() -> Outcome {
    let mut cfg = SuiteConfig::new(Pva::builtin("gfz").unwrap());
    cfg.spec = spec();
    cfg.max_arity = 3;
    let r = operad_axioms(&cfg).unwrap();
    outcome(r.passed(), format!("{} checks at arity ≤ 3", r.results.len())).or_report(&r.to_string())
}

fn master_equivalence() -> Outcome {
    let expected = [
        ("gfz", true),
        ("affine", true),
        ("zero", true),
        ("broken-skew", false),
        ("broken-jacobi", false),
        ("broken-leibniz", false),
    ];
    for (name, valid) in expected {
        let p = Pva::builtin(name).unwrap();
        let axioms = check_axioms(&p, &spec()).unwrap().passed();
        let square = check_master_square(&build_master_unchecked(&p), p.names(), &spec()).unwrap().passed();
        if axioms != valid || square != valid {
            return outcome(false, format!("{name}: axioms {axioms}, X□X = 0 {square}"));
        }
    }
    outcome(true, "axioms ⟺ X□X = 0 on 3 valid and 3 broken structures")
}

fn hochschild_closure() -> Outcome {
    let mut cfg = SuiteConfig::new(Pva::builtin("gfz").unwrap());
    cfg.spec = spec();
    cfg.max_arity = 3;
    let d = hochschild(&cfg).unwrap();
    let h = harrison_closure(&cfg).unwrap();
    outcome(d.passed() && h.passed(), format!("{} checks", d.results.len() + h.results.len()))
        .or_report(&format!("{d}{h}"))
}

fn top_degree_inverse() -> Outcome {
    let spec = spec();
    let names = GenNames::default();
    let mut rng = spec.rng(800);
    for n in 1..=4 {
        let at_n = samples(n, 1, &spec, 810 + n as u64);
        let y = random_symmetric(n, 1, &mut rng).cached();
        let f = phi(&y);
        let guard = check_nonvanishing("φ(Y)", &f, &at_n).unwrap();
        if !guard.passed {
            return outcome(false, format!("n = {n}: {guard}"));
        }
        let h = check_harrison(&f, &at_n, &names).unwrap();
        if !h.passed() {
            return outcome(false, format!("n = {n}: {h}"));
        }
        let lifted = match lift_top(&f, &at_n, &names) {
            Ok(l) => l,
            Err(e) => return outcome(false, format!("n = {n}: {e}")),
        };
        if let Some(c) = check_symmetry(&lifted, SymmetryGroup::All, &at_n).unwrap() {
            return outcome(false, format!("n = {n}: lift not symmetric: {c}"));
        }
        let back = phi(&lifted);
        for v in &at_n {
            if back.eval(v).unwrap() != f.eval(v).unwrap() {
                return outcome(false, format!("n = {n}: φ(lift(F)) ≠ F"));
            }
        }
    }
    outcome(true, "φ(Y) Harrison, lift symmetric, φ∘lift = id for n ≤ 4")
}

fn chain_map_identity() -> Outcome {
    let spec = spec();
    for name in ["gfz", "zero"] {
        let p = Pva::builtin(name).unwrap();
        let x = build_master(&p, &spec).unwrap();
        let mut rng = spec.rng(900);
        for n in [2, 3] {
            let y = random_symmetric(n, 1, &mut rng).cached();
            let guard = check_nonvanishing("φ(Y)", &phi(&y), &samples(n, 1, &spec, 905)).unwrap();
            let r = check_chain_map(&x, &y, &samples(n + 1, 1, &spec, 910 + n as u64), p.names()).unwrap();
            if !guard.passed || !r.passed {
                return outcome(false, format!("{name}, n = {n}: {guard} / {r}"));
            }
            let z = random_symmetric(n - 1, 1, &mut rng).cached();
            let c = check_cocycle(&x, &z, &samples(n + 1, 1, &spec, 920 + n as u64), p.names()).unwrap();
            if !c.passed() {
                return outcome(false, format!("{name}, n = {n}: {c}"));
            }
        }
    }
    outcome(true, "[X,Y]^Λ = (-1)^(n+1) d φ(Y) and d φ([X,Z]) = 0 for n = 2, 3, gfz and zero")
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pvacl")).args(args).output().unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("pvacl-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let runs: Vec<_> = (0..2)
        .map(|i| {
            let json = dir.join(format!("run{i}.json"));
            let (text, code) = run_cli(&[
                "verify", "diagram", "--structure", "gfz", "--max-arity", "2", "--seed", "7", "--json",
                json.to_str().unwrap(),
            ]);
            (text, code, std::fs::read(&json).unwrap_or_default())
        })
        .collect();
    std::fs::remove_dir_all(&dir).ok();
    let same = runs[0] == runs[1] && !runs[0].0.is_empty() && !runs[0].2.is_empty();
    outcome(same && runs[0].1 == 0, format!("two runs: identical text and JSON = {same}, exit {}", runs[0].1))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("monotone counts", LIMIT_1, monotone_counts),
        ("drop-sign law and restriction bijections", LIMIT_2, sign_law_and_bijections),
        ("line-basis dimension", LIMIT_3, line_basis_dimension),
        ("line identities", LIMIT_4, line_identities),
        ("operad laws", LIMIT_5, operad_laws),
        ("axioms vs master square", LIMIT_6, master_equivalence),
        ("Hochschild and Harrison closure", LIMIT_7, hochschild_closure),
        ("top-degree inverse", LIMIT_8, top_degree_inverse),
        ("chain map and corollary", LIMIT_9, chain_map_identity),
        ("determinism", Duration::MAX, determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let took = start.elapsed();
        let in_time = took <= *limit;
        let ok = o.ok && in_time;
        let budget = if *limit == Duration::MAX { String::new() } else { format!(", limit {limit:?}") };
        println!(
            "criterion {:>2} {}: {name} ({took:.2?}{budget}) {}{}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            if in_time { "" } else { " [over time limit]" }
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
