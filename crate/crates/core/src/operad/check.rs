//! Checkers for the defining laws of `𝒫_cl` on sampled inputs.
//!
//! Each checker returns `Ok(None)` when every sample passes, or the first
//! failing instance.

use std::fmt;

use num_traits::{One, Zero};

use super::{compose, ClCochain};
use crate::algebra::{DiffPoly, LambdaPoly, Rat, RatPoly};
use crate::error::{Error, Result};
use crate::graph::{enumerate_lines, Digraph};
use crate::perm::{block_compose, Perm};

/// A failing instance of an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub identity: String,
    pub graph: Option<String>,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(identity: impl Into<String>, graph: Option<&Digraph>, inputs: &[DiffPoly], lhs: String, rhs: String) -> Self {
        Counterexample {
            identity: identity.into(),
            graph: graph.map(|g| g.to_string()),
            inputs: inputs.iter().map(|v| v.to_string()).collect(),
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity)?;
        if let Some(g) = &self.graph {
            write!(f, " on [{g}]")?;
        }
        write!(f, " at ({})", self.inputs.join(" ⊗ "))?;
        write!(f, ": {} ≠ {}", self.lhs, self.rhs)
    }
}

pub type Outcome = Result<Option<Counterexample>>;

fn compare(
    identity: &str,
    g: &Digraph,
    v: &[DiffPoly],
    lhs: &LambdaPoly,
    rhs: &LambdaPoly,
) -> Option<Counterexample> {
    if lhs == rhs {
        None
    } else {
        Some(Counterexample::new(identity, Some(g), v, lhs.to_string(), rhs.to_string()))
    }
}

/// Both sesquilinearity conditions on every line and sample.
///
/// The first is read on the normal form (free of `λ_n`): within a component the
/// `λ_i`-derivatives agree, and they vanish on the component of vertex `n`.
pub fn check_sesquilinearity(f: &ClCochain, samples: &[Vec<DiffPoly>]) -> Outcome {
    let n = f.arity();
    for line in enumerate_lines(n) {
        let g = line.to_digraph();
        for v in samples {
            let val = f.eval(&g, v)?;
            for comp in line.components() {
                let mut lhs = LambdaPoly::zero(n);
                for &i in comp {
                    let mut w = v.clone();
                    w[i] = w[i].derive();
                    lhs = lhs.add(&f.eval(&g, &w)?);
                }
                let mut lam = vec![Rat::zero(); n];
                for &i in comp {
                    lam[i] = -Rat::one();
                }
                let rhs = val.mul_ratpoly(&RatPoly::linear(&lam));
                if let Some(c) = compare("f(∂_α v) = -λ_α f(v)", &g, v, &lhs, &rhs) {
                    return Ok(Some(c));
                }
                let ds: Vec<_> = comp.iter().map(|&i| val.d_lambda(i)).collect();
                let holds = if comp.contains(&(n - 1)) {
                    ds.iter().all(|d| d.is_zero())
                } else {
                    ds.windows(2).all(|w| w[0] == w[1])
                };
                if !holds {
                    return Ok(Some(Counterexample::new(
                        "∂f/∂λ_i constant on components",
                        Some(&g),
                        v,
                        val.to_string(),
                        format!("component {:?}", comp.iter().map(|i| i + 1).collect::<Vec<_>>()),
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Which permutations a symmetry check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryGroup {
    /// Adjacent transpositions, which generate `S_n`.
    Generators,
    All,
}

/// `f^σ = f` on every line and sample.
pub fn check_symmetry(f: &ClCochain, group: SymmetryGroup, samples: &[Vec<DiffPoly>]) -> Outcome {
    let n = f.arity();
    let perms: Vec<Perm> = match group {
        SymmetryGroup::Generators => (1..n).map(|i| Perm::transposition(n, i - 1, i)).collect(),
        SymmetryGroup::All => Perm::all(n).into_iter().filter(|p| !p.is_identity()).collect(),
    };
    let lines: Vec<Digraph> = enumerate_lines(n).iter().map(|l| l.to_digraph()).collect();
    for s in perms {
        let fs = f.act(&s)?;
        for g in &lines {
            for v in samples {
                let lhs = fs.eval(g, v)?;
                let rhs = f.eval(g, v)?;
                if let Some(c) = compare(&format!("f^{s} = f"), g, v, &lhs, &rhs) {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}

fn agree(identity: &str, a: &ClCochain, b: &ClCochain, samples: &[Vec<DiffPoly>]) -> Outcome {
    if a.arity() != b.arity() {
        return Err(Error::Arity(format!(
            "{identity}: sides have arities {} and {}",
            a.arity(),
            b.arity()
        )));
    }
    for line in enumerate_lines(a.arity()) {
        let g = line.to_digraph();
        for v in samples {
            let lhs = a.eval(&g, v)?;
            let rhs = b.eval(&g, v)?;
            if let Some(c) = compare(identity, &g, v, &lhs, &rhs) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// `f(1, …, 1) = 1(f) = f`.
pub fn check_unit(f: &ClCochain, samples: &[Vec<DiffPoly>]) -> Outcome {
    let ones = vec![ClCochain::unit(); f.arity()];
    let right = compose(f, &ones)?;
    if let Some(c) = agree("f(1,…,1) = f", &right, f, samples)? {
        return Ok(Some(c));
    }
    let left = compose(&ClCochain::unit(), std::slice::from_ref(f))?;
    agree("1(f) = f", &left, f, samples)
}

/// `f((g_1 ⊗ … ⊗ g_n)(h_1 ⊗ … ⊗ h_M)) = (f(g_1 ⊗ … ⊗ g_n))(h_1 ⊗ … ⊗ h_M)`,
/// where applying `g_1 ⊗ … ⊗ g_n` to the `h`'s carries the Koszul sign.
pub fn check_associativity(
    f: &ClCochain,
    gs: &[ClCochain],
    hs: &[ClCochain],
    samples: &[Vec<DiffPoly>],
) -> Outcome {
    let big_m: usize = gs.iter().map(|g| g.arity()).sum();
    if hs.len() != big_m {
        return Err(Error::Arity(format!("{} inner cochains for {big_m} slots", hs.len())));
    }
    let mut inner = Vec::with_capacity(gs.len());
    let mut off = 0;
    for g in gs {
        inner.push(compose(g, &hs[off..off + g.arity()])?);
        off += g.arity();
    }
    // moving h's past the later g's: Π_{i<j} (-1)^{p̄(g_j) Σ_{h ∈ block i} p̄(h)}
    let mut exponent = 0;
    let mut off = 0;
    let mut block_parity = Vec::with_capacity(gs.len());
    for g in gs {
        block_parity.push(hs[off..off + g.arity()].iter().filter(|h| h.is_odd()).count());
        off += g.arity();
    }
    for (j, g) in gs.iter().enumerate() {
        if g.is_odd() {
            exponent += block_parity[..j].iter().sum::<usize>();
        }
    }
    let mut lhs = compose(f, &inner)?;
    if exponent % 2 == 1 {
        lhs = lhs.scale(-Rat::one());
    }
    let rhs = compose(&compose(f, gs)?, hs)?;
    agree("associativity", &lhs, &rhs, samples)
}

/// `f^σ(g_1^{τ_1} ⊗ … ⊗ g_n^{τ_n}) = (f(σ(g_1 ⊗ … ⊗ g_n)))^{σ(τ_1, …, τ_n)}`.
pub fn check_equivariance(
    f: &ClCochain,
    sigma: &Perm,
    gs: &[ClCochain],
    taus: &[Perm],
    samples: &[Vec<DiffPoly>],
) -> Outcome {
    let n = f.arity();
    if gs.len() != n || taus.len() != n || sigma.len() != n {
        return Err(Error::Arity("equivariance needs n cochains and n permutations".into()));
    }
    let acted: Vec<ClCochain> = gs
        .iter()
        .zip(taus)
        .map(|(g, t)| g.act(t))
        .collect::<Result<_>>()?;
    let lhs = compose(&f.act(sigma)?, &acted)?;
    let odd: Vec<bool> = gs.iter().map(|g| g.is_odd()).collect();
    let permuted = sigma.act_on_tuple(gs);
    let mut inner = compose(f, &permuted)?;
    if sigma.koszul_sign(&odd) < 0 {
        inner = inner.scale(-Rat::one());
    }
    let rho = block_compose(sigma, taus)?;
    let rhs = inner.act(&rho)?;
    agree("equivariance", &lhs, &rhs, samples)
}
