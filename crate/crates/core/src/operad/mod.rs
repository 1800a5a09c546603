//! The operad `𝒫_cl(ΠV)` and the Lie superalgebra `W_cl(ΠV)`.
//!
//! A cochain is anything implementing [`Cochain`]: it only has to produce
//! values on the line basis. Values on other graphs go through
//! [`crate::graph::reduce`], so the cycle relations hold by construction.
//! Since `V` is purely even, every slot of `ΠV` is odd, the Koszul sign of a
//! permutation is its sign, and a cochain of arity `n` has parity `n - 1`.

mod check;
mod compose;
mod random;
mod tabulated;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{DiffPoly, LambdaPoly, Rat};
use crate::error::{Error, Result};
use crate::graph::{reduce, Digraph, GraphVector, LineGraph};
use crate::perm::Perm;

pub use check::{
    check_associativity, check_equivariance, check_sesquilinearity, check_symmetry,
    check_unit, Counterexample, Outcome, SymmetryGroup,
};
pub use compose::{bracket, box_product, circ, compose, Composite};
pub use random::{random_cochain, random_symmetric};
pub use tabulated::Tabulated;

/// A rule producing the value of a cochain on a line-basis graph.
pub trait Cochain: Send + Sync {
    fn arity(&self) -> usize;

    /// `f^Γ_{λ_1..λ_n}(v_1 ⊗ … ⊗ v_n)` for a normalized line `Γ`.
    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly>;

    /// Whether `eval_line` accepts any forest, not only normalized lines.
    fn evaluates_forests(&self) -> bool {
        false
    }

    fn describe(&self) -> String;
}

/// A shared handle on a cochain.
#[derive(Clone)]
pub struct ClCochain(Arc<dyn Cochain>);

impl fmt::Debug for ClCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClCochain({})", self.0.describe())
    }
}

impl ClCochain {
    pub fn new(c: impl Cochain + 'static) -> Self {
        ClCochain(Arc::new(c))
    }

    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    /// `p̄ = n - 1 mod 2`.
    pub fn is_odd(&self) -> bool {
        self.arity() % 2 == 0
    }

    pub fn describe(&self) -> String {
        self.0.describe()
    }

    /// The value on an arbitrary graph.
    pub fn eval(&self, g: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let n = self.arity();
        if g.n() != n || v.len() != n {
            return Err(Error::Arity(format!(
                "cochain of arity {n} evaluated on a {}-graph with {} inputs",
                g.n(),
                v.len()
            )));
        }
        if g.has_undirected_cycle() {
            return Ok(LambdaPoly::zero(n));
        }
        if self.0.evaluates_forests() || LineGraph::from_digraph(g).is_some() {
            return self.0.eval_line(g, v);
        }
        let mut acc = LambdaPoly::zero(n);
        for (line, c) in reduce(&GraphVector::single(g.clone())).terms() {
            acc.add_scaled(c, &self.0.eval_line(line, v)?);
        }
        Ok(acc)
    }

    /// The unit of `𝒫_cl(1)`: the identity on the one-vertex graph.
    pub fn unit() -> Self {
        ClCochain::new(Unit)
    }

    pub fn zero(arity: usize) -> Self {
        ClCochain::new(LinComb {
            arity,
            terms: Vec::new(),
        })
    }

    /// `f^σ`.
    pub fn act(&self, sigma: &Perm) -> Result<Self> {
        if sigma.len() != self.arity() {
            return Err(Error::Arity(format!(
                "S_{} acting on a cochain of arity {}",
                sigma.len(),
                self.arity()
            )));
        }
        Ok(ClCochain::new(Acted {
            f: self.clone(),
            sigma: sigma.clone(),
        }))
    }

    pub fn lincomb(arity: usize, terms: Vec<(Rat, ClCochain)>) -> Result<Self> {
        if let Some((_, f)) = terms.iter().find(|(_, f)| f.arity() != arity) {
            return Err(Error::Arity(format!(
                "arity {} term in a combination of arity {arity}",
                f.arity()
            )));
        }
        Ok(ClCochain::new(LinComb { arity, terms }))
    }

    pub fn scale(&self, c: Rat) -> Self {
        ClCochain::new(LinComb {
            arity: self.arity(),
            terms: vec![(c, self.clone())],
        })
    }

    pub fn add(&self, other: &ClCochain) -> Result<Self> {
        ClCochain::lincomb(
            self.arity(),
            vec![(Rat::one(), self.clone()), (Rat::one(), other.clone())],
        )
    }

    pub fn sub(&self, other: &ClCochain) -> Result<Self> {
        ClCochain::lincomb(
            self.arity(),
            vec![(Rat::one(), self.clone()), (-Rat::one(), other.clone())],
        )
    }

    /// The component vanishing on graphs with a number of edges other than `r`.
    pub fn grade_component(&self, r: usize) -> Self {
        ClCochain::new(Graded { f: self.clone(), r })
    }

    /// `(1/n!) Σ_σ f^σ`.
    pub fn symmetrize(&self) -> Self {
        let n = self.arity();
        let perms = Perm::all(n);
        let c = Rat::one() / Rat::from_integer(crate::algebra::rat::factorial(n));
        let terms = perms
            .iter()
            .map(|s| (c.clone(), self.act(s).expect("arity matches")))
            .collect();
        ClCochain::new(LinComb { arity: n, terms })
    }

    /// Memoizes values per graph and input tensor.
    pub fn cached(&self) -> Self {
        ClCochain::new(Memo {
            f: self.clone(),
            table: Mutex::new(HashMap::new()),
        })
    }
}

struct Unit;

impl Cochain for Unit {
    fn arity(&self) -> usize {
        1
    }

    fn eval_line(&self, _line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        Ok(LambdaPoly::scalar(1, v[0].clone()))
    }

    fn describe(&self) -> String {
        "1".into()
    }
}

struct LinComb {
    arity: usize,
    terms: Vec<(Rat, ClCochain)>,
}

impl Cochain for LinComb {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let mut acc = LambdaPoly::zero(self.arity);
        for (c, f) in &self.terms {
            if !c.is_zero() {
                acc.add_scaled(c, &f.eval(line, v)?);
            }
        }
        Ok(acc)
    }

    fn evaluates_forests(&self) -> bool {
        self.terms.iter().all(|(_, f)| f.0.evaluates_forests())
    }

    fn describe(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, f)| format!("{}·{}", crate::algebra::rat::fmt_rat(c), f.describe()))
            .collect();
        format!("({})", parts.join(" + "))
    }
}

/// `(f^σ)^Γ_λ(v) = f^{σΓ}_{σλ}(σ v)`, with `σ v` carrying the sign of `σ`.
struct Acted {
    f: ClCochain,
    sigma: Perm,
}

impl Cochain for Acted {
    fn arity(&self) -> usize {
        self.f.arity()
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let n = self.arity();
        let g = line.act(&self.sigma)?;
        let w = self.sigma.act_on_tuple(v);
        let val = self.f.eval(&g, &w)?;
        let inv = self.sigma.inverse();
        let images: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                let mut e = vec![Rat::zero(); n];
                e[inv.apply(j)] = Rat::one();
                e
            })
            .collect();
        let out = val.relabel_linear(&images);
        Ok(if self.sigma.sign() < 0 { out.neg() } else { out })
    }

    fn evaluates_forests(&self) -> bool {
        self.f.0.evaluates_forests()
    }

    fn describe(&self) -> String {
        format!("{}^{}", self.f.describe(), self.sigma)
    }
}

struct Graded {
    f: ClCochain,
    r: usize,
}

impl Cochain for Graded {
    fn arity(&self) -> usize {
        self.f.arity()
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        if line.num_edges() == self.r {
            self.f.eval(line, v)
        } else {
            Ok(LambdaPoly::zero(self.arity()))
        }
    }

    fn evaluates_forests(&self) -> bool {
        self.f.0.evaluates_forests()
    }

    fn describe(&self) -> String {
        format!("gr^{}({})", self.r, self.f.describe())
    }
}

type MemoKey = (Digraph, Vec<DiffPoly>);

struct Memo {
    f: ClCochain,
    table: Mutex<HashMap<MemoKey, LambdaPoly>>,
}

impl Cochain for Memo {
    fn arity(&self) -> usize {
        self.f.arity()
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let key = (line.clone(), v.to_vec());
        if let Some(hit) = self.table.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let val = self.f.eval(line, v)?;
        self.table
            .lock()
            .expect("memo lock")
            .insert(key, val.clone());
        Ok(val)
    }

    fn evaluates_forests(&self) -> bool {
        self.f.0.evaluates_forests()
    }

    fn describe(&self) -> String {
        self.f.describe()
    }
}
