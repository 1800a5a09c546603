//! Operadic composition, `∘_i`, the `□`-product and the bracket.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{Cochain, ClCochain};
use crate::algebra::{pair_substitute, Affine, DiffPoly, LambdaPoly, Rat, RatPoly, VPoly};
use crate::error::{Error, Result};
use crate::graph::{Cocomposition, Digraph};
use crate::perm::enumerate_shuffles;

/// `f(g_1, …, g_n)`.
pub struct Composite {
    f: ClCochain,
    gs: Vec<ClCochain>,
    sizes: Vec<usize>,
    negative: bool,
}

impl Composite {
    pub fn new(f: &ClCochain, gs: &[ClCochain]) -> Result<Self> {
        if gs.len() != f.arity() {
            return Err(Error::Arity(format!(
                "cochain of arity {} composed with {} cochains",
                f.arity(),
                gs.len()
            )));
        }
        let sizes: Vec<usize> = gs.iter().map(|g| g.arity()).collect();
        if sizes.contains(&0) {
            return Err(Error::Unsupported("composition with arity 0 cochains".into()));
        }
        // Koszul sign of passing g_j past the inputs of the earlier blocks:
        // Σ_{i<j} p̄(g_j) · m_i with p̄(g_j) = m_j - 1 and every input odd.
        let mut exponent = 0;
        for j in 0..sizes.len() {
            for &mi in &sizes[..j] {
                exponent += (sizes[j] - 1) * mi;
            }
        }
        Ok(Composite {
            f: f.clone(),
            gs: gs.to_vec(),
            sizes,
            negative: exponent % 2 == 1,
        })
    }
}

impl Cochain for Composite {
    fn arity(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        let big_m = self.arity();
        let n = self.sizes.len();
        let coc = Cocomposition::new(line, &self.sizes)?;
        let outer = match coc.outer.to_simple() {
            Some(g) if !g.has_undirected_cycle() => g,
            _ => return Ok(LambdaPoly::zero(big_m)),
        };
        let total = big_m + n;
        let ext: Vec<BTreeSet<usize>> = (0..big_m)
            .map(|k| coc.externally_connected(k))
            .collect::<Result<_>>()?;

        let mut factors = Vec::with_capacity(n);
        for (i, g) in self.gs.iter().enumerate() {
            let m = self.sizes[i];
            let off = coc.offsets()[i];
            let val = g.eval(&coc.inner[i], &v[off..off + m])?;
            let images: Vec<Affine> = (0..m)
                .map(|t| {
                    let mut lin = vec![Rat::zero(); total];
                    lin[off + t] = Rat::one();
                    for &j in &ext[off + t] {
                        lin[big_m + j] += Rat::one();
                    }
                    Affine::linear(lin)
                })
                .collect();
            factors.push(val.substitute(&images, total));
        }

        let block_sums: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                let off = coc.offsets()[j];
                (0..big_m)
                    .map(|k| {
                        if k >= off && k < off + self.sizes[j] {
                            Rat::one()
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let targets: Vec<Vec<Rat>> = block_sums
            .iter()
            .map(|b| {
                let mut t = b.clone();
                t.resize(total, Rat::zero());
                t
            })
            .collect();
        let x_vars: Vec<usize> = (big_m..total).collect();
        let drop_x: Vec<usize> = (0..total).map(|k| if k < big_m { k } else { 0 }).collect();

        let mut grouped: BTreeMap<Vec<DiffPoly>, RatPoly> = BTreeMap::new();
        for (coeffs, weight) in pair_substitute(&factors, &x_vars, &targets)? {
            let w = weight.relabel(&drop_x, big_m);
            grouped
                .entry(coeffs)
                .or_insert_with(|| RatPoly::zero(big_m))
                .add_assign(&w);
        }
        let lift: Vec<Affine> = block_sums.into_iter().map(Affine::linear).collect();
        let grouped: Vec<(Vec<DiffPoly>, RatPoly)> =
            grouped.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        let parts: Vec<VPoly> = grouped
            .par_iter()
            .map(|(coeffs, w)| {
                let fv = self.f.eval(&outer, coeffs)?;
                Ok(fv.as_vpoly().substitute(&lift, big_m).mul_ratpoly(w))
            })
            .collect::<Result<_>>()?;
        let mut raw = VPoly::zero(big_m);
        for p in &parts {
            raw.add_assign(p);
        }
        let acc = LambdaPoly::normalize(&raw);
        Ok(if self.negative { acc.neg() } else { acc })
    }

    fn evaluates_forests(&self) -> bool {
        true
    }

    fn describe(&self) -> String {
        let inner: Vec<String> = self.gs.iter().map(|g| g.describe()).collect();
        format!("{}({})", self.f.describe(), inner.join(", "))
    }
}

pub fn compose(f: &ClCochain, gs: &[ClCochain]) -> Result<ClCochain> {
    Ok(ClCochain::new(Composite::new(f, gs)?))
}

/// `f ∘_i g` with `i` 1-based.
pub fn circ(f: &ClCochain, g: &ClCochain, i: usize) -> Result<ClCochain> {
    if i == 0 || i > f.arity() {
        return Err(Error::Range(format!(
            "insertion position {i} for a cochain of arity {}",
            f.arity()
        )));
    }
    let gs: Vec<ClCochain> = (1..=f.arity())
        .map(|j| if j == i { g.clone() } else { ClCochain::unit() })
        .collect();
    compose(f, &gs)
}

/// `f □ g = Σ_{σ ∈ S_{m+1,n}} (f ∘_1 g)^{σ^{-1}}` for `f ∈ W^n`, `g ∈ W^m`.
pub fn box_product(f: &ClCochain, g: &ClCochain) -> Result<ClCochain> {
    let n = f.arity() as i64 - 1;
    let m = g.arity() as i64 - 1;
    let inner = circ(f, g, 1)?.cached();
    let terms = enumerate_shuffles(m + 1, n)
        .iter()
        .map(|s| Ok((Rat::one(), inner.act(&s.inverse())?)))
        .collect::<Result<Vec<_>>>()?;
    ClCochain::lincomb(inner.arity(), terms)
}

/// `[f, g] = f □ g - (-1)^{p̄(f) p̄(g)} g □ f`.
pub fn bracket(f: &ClCochain, g: &ClCochain) -> Result<ClCochain> {
    let fg = box_product(f, g)?;
    let gf = box_product(g, f)?;
    let c = if f.is_odd() && g.is_odd() {
        Rat::one()
    } else {
        -Rat::one()
    };
    ClCochain::lincomb(fg.arity(), vec![(Rat::one(), fg), (c, gf)])
}

