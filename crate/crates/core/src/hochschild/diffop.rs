//! `𝔽[∂]`-linear cochains built from slot derivatives and evolutionary
//! vector fields.

use std::fmt;

use rand::Rng;

use super::{HCochain, HRule};
use crate::algebra::rat::fmt_rat;
use crate::algebra::{DiffPoly, GenNames, Rat};
use crate::error::Result;
use crate::sample::monomial_basis;

/// `X_P(a) = Σ_{g,m} ∂^m(P_g) ∂a/∂u_g^(m)`; commutes with `∂`.
pub fn evolutionary(a: &DiffPoly, ps: &[DiffPoly]) -> DiffPoly {
    let mut out = DiffPoly::zero();
    for v in a.vars() {
        if let Some(p) = ps.get(usize::from(v.gen)) {
            out += &(&p.derive_n(v.order) * &a.partial(v));
        }
    }
    out
}

/// `a ↦ X_P(∂^order a)`, or `∂^order a` without a field.
#[derive(Clone, Debug, PartialEq)]
pub struct SlotOp {
    pub order: u32,
    pub field: Option<Vec<DiffPoly>>,
}

impl SlotOp {
    fn apply(&self, a: &DiffPoly) -> DiffPoly {
        let b = a.derive_n(self.order);
        match &self.field {
            Some(ps) => evolutionary(&b, ps),
            None => b,
        }
    }
}

/// `c · ∂^outer(Π_j op_j(a_j))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Rat,
    pub ops: Vec<SlotOp>,
    pub outer: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiffOp {
    pub arity: usize,
    pub terms: Vec<Term>,
    pub names: GenNames,
}

impl HRule for DiffOp {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, a: &[DiffPoly]) -> Result<DiffPoly> {
        let mut out = DiffPoly::zero();
        for t in &self.terms {
            let mut prod = DiffPoly::one();
            for (op, x) in t.ops.iter().zip(a) {
                prod = &prod * &op.apply(x);
            }
            out.add_scaled(&t.coeff, &prod.derive_n(t.outer));
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let slots: Vec<String> = t
                    .ops
                    .iter()
                    .enumerate()
                    .map(|(j, op)| {
                        let s = format!("s{}{}", j + 1, "'".repeat(op.order as usize));
                        match &op.field {
                            Some(ps) => {
                                let ps: Vec<String> = ps.iter().map(|p| p.fmt_with(&self.names)).collect();
                                format!("X[{}]({s})", ps.join(","))
                            }
                            None => s,
                        }
                    })
                    .collect();
                let body = if slots.is_empty() { "1".to_string() } else { slots.join("*") };
                let body = if t.outer > 0 {
                    format!("∂^{}({body})", t.outer)
                } else {
                    body
                };
                format!("{}·{body}", fmt_rat(&t.coeff))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A random `𝔽[∂]`-linear cochain: one to three terms of slot derivatives,
/// evolutionary fields and an outer derivative.
pub fn random_hcochain<R: Rng>(arity: usize, ngens: usize, rng: &mut R) -> HCochain {
    let basis = monomial_basis(ngens, 2, 1);
    let nterms = rng.gen_range(1..=3);
    let terms = (0..nterms)
        .map(|_| {
            let coeff = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break Rat::from_integer(c.into());
                }
            };
            let ops = (0..arity)
                .map(|_| SlotOp {
                    order: rng.gen_range(0..=1),
                    field: if rng.gen_bool(0.3) {
                        Some((0..ngens).map(|_| basis[rng.gen_range(0..basis.len())].clone()).collect())
                    } else {
                        None
                    },
                })
                .collect();
            Term {
                coeff,
                ops,
                outer: rng.gen_range(0..=1),
            }
        })
        .collect();
    HCochain::new(DiffOp {
        arity,
        terms,
        names: GenNames::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_diffpoly;

    #[test]
    fn evolutionary_commutes_with_derivation() {
        let names = GenNames::default();
        let p = vec![parse_diffpoly("u*u''", &names).unwrap()];
        for a in ["u", "u'^2", "u*u'''"] {
            let a = parse_diffpoly(a, &names).unwrap();
            assert_eq!(evolutionary(&a.derive(), &p), evolutionary(&a, &p).derive());
        }
    }
}
