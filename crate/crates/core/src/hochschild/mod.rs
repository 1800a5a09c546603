//! Differential Hochschild cochains `V^{⊗n} → V` with coefficients in `V`
//! itself, the Hochschild differential and Harrison's operators `L_k`.

mod check;
mod diffop;

pub use check::{check_d_linear, check_d_squared, check_harrison, samples};
pub use diffop::{evolutionary, random_hcochain, DiffOp, SlotOp, Term};

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{DiffPoly, Expr, GenNames, Rat};
use crate::error::{Error, Result};
use crate::perm::{enumerate_monotone, Perm};

/// A multilinear rule `V^{⊗n} → V`.
pub trait HRule: Send + Sync {
    fn arity(&self) -> usize;
    fn eval(&self, a: &[DiffPoly]) -> Result<DiffPoly>;
    fn describe(&self) -> String;
}

#[derive(Clone)]
pub struct HCochain(Arc<dyn HRule>);

impl fmt::Debug for HCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HCochain({})", self.0.describe())
    }
}

type EvalFn = dyn Fn(&[DiffPoly]) -> Result<DiffPoly> + Send + Sync;

struct FnRule {
    arity: usize,
    name: String,
    f: Box<EvalFn>,
}

impl HRule for FnRule {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, a: &[DiffPoly]) -> Result<DiffPoly> {
        (self.f)(a)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

struct ExprRule {
    arity: usize,
    rule: Expr,
    text: String,
}

impl HRule for ExprRule {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, a: &[DiffPoly]) -> Result<DiffPoly> {
        Ok(self.rule.eval(1, a)?.constant_term())
    }

    fn describe(&self) -> String {
        self.text.clone()
    }
}

impl HCochain {
    pub fn new(rule: impl HRule + 'static) -> Self {
        HCochain(Arc::new(rule))
    }

    pub fn from_fn<F>(arity: usize, name: impl Into<String>, f: F) -> Self
    where
        F: Fn(&[DiffPoly]) -> Result<DiffPoly> + Send + Sync + 'static,
    {
        HCochain::new(FnRule {
            arity,
            name: name.into(),
            f: Box::new(f),
        })
    }

    /// A rule in the slots `s1..sn` and their derivatives, e.g. `s1*s2'`.
    pub fn parse(arity: usize, rule: &str, names: &GenNames) -> Result<Self> {
        let e = Expr::parse(rule, names)?;
        e.check_multilinear(arity)?;
        if e.lambda_count() > 0 {
            return Err(Error::Invalid(format!("'{rule}' uses λ")));
        }
        Ok(HCochain::new(ExprRule {
            arity,
            rule: e,
            text: rule.to_string(),
        }))
    }

    /// The 0-cochain `m ∈ V`.
    pub fn constant(m: DiffPoly) -> Self {
        let name = m.to_string();
        HCochain::from_fn(0, name, move |_| Ok(m.clone()))
    }

    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    pub fn describe(&self) -> String {
        self.0.describe()
    }

    pub fn eval(&self, a: &[DiffPoly]) -> Result<DiffPoly> {
        if a.len() != self.arity() {
            return Err(Error::Arity(format!(
                "{}-cochain applied to {} arguments",
                self.arity(),
                a.len()
            )));
        }
        self.0.eval(a)
    }

    /// `(dF)(a_1..a_{n+1}) = a_1 F(a_2..) + Σ_i (-1)^i F(..a_i a_{i+1}..) + (-1)^{n+1} F(a_1..a_n) a_{n+1}`.
    pub fn d(&self) -> HCochain {
        let f = self.clone();
        let n = f.arity();
        HCochain::from_fn(n + 1, format!("d({})", f.describe()), move |a| {
            let mut out = &a[0] * &f.eval(&a[1..])?;
            for i in 0..n {
                let mut args = Vec::with_capacity(n);
                args.extend_from_slice(&a[..i]);
                args.push(&a[i] * &a[i + 1]);
                args.extend_from_slice(&a[i + 2..]);
                let t = f.eval(&args)?;
                if i % 2 == 0 {
                    out = &out - &t;
                } else {
                    out = &out + &t;
                }
            }
            let last = &f.eval(&a[..n])? * &a[n];
            if n % 2 == 0 {
                out = &out - &last;
            } else {
                out = &out + &last;
            }
            Ok(out)
        })
    }

    /// `(L_k F)(a_1..a_n) = Σ_{π ∈ M_n^k} (-1)^{dr(π)} F(a_{π(1)}..a_{π(n)})`.
    pub fn harrison_l(&self, k: usize) -> Result<HCochain> {
        let n = self.arity();
        if k < 2 || k > n {
            return Err(Error::Range(format!("L_{k} on a {n}-cochain")));
        }
        let perms: Vec<(Perm, Rat)> = enumerate_monotone(n, k)?
            .into_iter()
            .map(|m| (m.perm().clone(), Rat::from_integer(m.drop_sign().into())))
            .collect();
        let f = self.clone();
        Ok(HCochain::from_fn(n, format!("L_{k}({})", f.describe()), move |a| {
            let mut out = DiffPoly::zero();
            for (p, s) in &perms {
                let args: Vec<DiffPoly> = (0..n).map(|i| a[p.apply(i)].clone()).collect();
                out.add_scaled(s, &f.eval(&args)?);
            }
            Ok(out)
        }))
    }

    /// `a ↦ F(a_{σ(1)}..a_{σ(n)})`.
    pub fn permute(&self, sigma: &Perm) -> Result<HCochain> {
        let n = self.arity();
        if sigma.len() != n {
            return Err(Error::Arity(format!("S_{} on a {n}-cochain", sigma.len())));
        }
        let f = self.clone();
        let s = sigma.clone();
        Ok(HCochain::from_fn(n, format!("{}∘{}", f.describe(), s), move |a| {
            let args: Vec<DiffPoly> = (0..n).map(|i| a[s.apply(i)].clone()).collect();
            f.eval(&args)
        }))
    }

    /// `(1/n!) Σ_σ F(a_{σ(1)}..a_{σ(n)})`.
    pub fn symmetrize(&self) -> HCochain {
        let n = self.arity();
        let perms = Perm::all(n);
        let c = Rat::one() / Rat::from_integer(crate::algebra::rat::factorial(n));
        let f = self.clone();
        HCochain::from_fn(n, format!("sym({})", f.describe()), move |a| {
            let mut out = DiffPoly::zero();
            for p in &perms {
                let args: Vec<DiffPoly> = (0..n).map(|i| a[p.apply(i)].clone()).collect();
                out.add_scaled(&c, &f.eval(&args)?);
            }
            Ok(out)
        })
    }

    pub fn lincomb(arity: usize, terms: Vec<(Rat, HCochain)>) -> Result<HCochain> {
        if let Some((_, f)) = terms.iter().find(|(_, f)| f.arity() != arity) {
            return Err(Error::Arity(format!("{}-cochain in a sum of {arity}-cochains", f.arity())));
        }
        let name = terms
            .iter()
            .map(|(c, f)| format!("{}·{}", crate::algebra::rat::fmt_rat(c), f.describe()))
            .collect::<Vec<_>>()
            .join(" + ");
        Ok(HCochain::from_fn(arity, name, move |a| {
            let mut out = DiffPoly::zero();
            for (c, f) in &terms {
                out.add_scaled(c, &f.eval(a)?);
            }
            Ok(out)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_diffpoly;

    fn v(s: &str) -> DiffPoly {
        parse_diffpoly(s, &GenNames::default()).unwrap()
    }

    #[test]
    fn d_of_constant_vanishes() {
        let m = HCochain::constant(v("u'^2"));
        assert!(m.d().eval(&[v("u*u''")]).unwrap().is_zero());
    }

    #[test]
    fn d_of_multiplication_operator() {
        // F(a) = u·a: (dF)(a⊗b) = a·u·b
        let f = HCochain::from_fn(1, "u·", |a| Ok(&v("u") * &a[0]));
        let (a, b) = (v("u'"), v("u''^2"));
        assert_eq!(f.d().eval(&[a.clone(), b.clone()]).unwrap(), &(&a * &v("u")) * &b);
    }

    #[test]
    fn d_of_derivation_vanishes() {
        let f = HCochain::parse(1, "s1'", &GenNames::default()).unwrap();
        assert!(f.d().eval(&[v("u*u'"), v("u''")]).unwrap().is_zero());
    }

    #[test]
    fn harrison_operators_small() {
        let f = HCochain::parse(3, "s1*s2'*s3''", &GenNames::default()).unwrap();
        let a = [v("u"), v("u^2"), v("u'")];
        let f_at = |x: &DiffPoly, y: &DiffPoly, z: &DiffPoly| f.eval(&[x.clone(), y.clone(), z.clone()]).unwrap();
        let l2 = f.harrison_l(2).unwrap().eval(&a).unwrap();
        assert_eq!(l2, &f_at(&a[1], &a[0], &a[2]) - &f_at(&a[1], &a[2], &a[0]));
        let l3 = f.harrison_l(3).unwrap().eval(&a).unwrap();
        assert_eq!(l3, -f_at(&a[2], &a[1], &a[0]));
        let g = HCochain::parse(2, "s1*s2'", &GenNames::default()).unwrap();
        assert_eq!(
            g.harrison_l(2).unwrap().eval(&a[..2]).unwrap(),
            g.eval(&[a[1].clone(), a[0].clone()]).unwrap()
        );
        assert!(f.harrison_l(1).is_err());
        assert!(f.harrison_l(4).is_err());
    }
}
