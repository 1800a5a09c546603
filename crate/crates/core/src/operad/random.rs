//! Seeded random cochains satisfying the sesquilinearity laws.
//!
//! On a line with components `α`, a rule has the shape
//! `K(λ_α, …) · w · Π_α S[u](P_α)`, where `P_α` is a constant-coefficient
//! differential polynomial in the slots of `α`, `S[u]` is the symbol operator
//! and `w ∈ V`. On connected lines the bare form `K(λ) · P` is also used.

use rand::Rng;

use super::{ClCochain, Tabulated};
use crate::algebra::{rat, Expr, GenNames, Var};
use crate::graph::enumerate_lines;

fn small<R: Rng>(rng: &mut R) -> Expr {
    let mut k = rng.gen_range(-3..=3);
    if k == 0 {
        k = 1;
    }
    Expr::Num(rat(k))
}

fn block<R: Rng>(comp: &[usize], rng: &mut R) -> Expr {
    let terms = rng.gen_range(1..=2);
    Expr::Add(
        (0..terms)
            .map(|_| {
                let mut f = vec![small(rng)];
                for &i in comp {
                    f.push(Expr::Slot {
                        slot: i,
                        order: rng.gen_range(0..=1),
                    });
                }
                Expr::Mul(f)
            })
            .collect(),
    )
}

fn lambda_sum(comp: &[usize]) -> Expr {
    Expr::Add(comp.iter().map(|&i| Expr::Lambda(i)).collect())
}

/// A random sesquilinear cochain of the given arity over `ngens` generators.
pub fn random_cochain<R: Rng>(arity: usize, ngens: usize, rng: &mut R) -> ClCochain {
    let names = GenNames::default();
    let mut t = Tabulated::new(arity, names);
    for line in enumerate_lines(arity) {
        if !line.is_connected() && rng.gen_bool(0.2) {
            continue;
        }
        let comps = line.components();
        let mut factors = vec![small(rng)];
        // K: constant plus a multiple of one component sum
        let pick = rng.gen_range(0..comps.len());
        factors.push(Expr::Add(vec![
            small(rng),
            Expr::Mul(vec![small(rng), lambda_sum(&comps[pick])]),
        ]));
        let bare = line.is_connected() && rng.gen_bool(0.5);
        if bare {
            factors.push(block(&comps[0], rng));
        } else {
            if rng.gen_bool(0.5) {
                let g = rng.gen_range(0..ngens) as u16;
                factors.push(Expr::Gen(Var::new(g, rng.gen_range(0..=1))));
            }
            for comp in comps {
                factors.push(Expr::Symbol {
                    gen: rng.gen_range(0..ngens) as u16,
                    inner: Box::new(block(comp, rng)),
                });
            }
        }
        t.set(&line, Expr::Mul(factors))
            .expect("generated rules are multilinear");
    }
    ClCochain::new(t)
}

/// The symmetrization of a random cochain, an element of `W^{arity-1}`.
pub fn random_symmetric<R: Rng>(arity: usize, ngens: usize, rng: &mut R) -> ClCochain {
    random_cochain(arity, ngens, rng).symmetrize()
}
