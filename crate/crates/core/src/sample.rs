//! Seeded input sets for identity checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DiffPoly, Monomial, Var};

/// Bounds for sampled inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub max_degree: u32,
    pub max_order: u32,
    /// Exhaustive below this many tuples, otherwise a seeded subset of this size.
    pub limit: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            max_degree: 2,
            max_order: 2,
            limit: 64,
            seed: 0,
        }
    }
}

impl SampleSpec {
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    pub fn with_limit(&self, limit: usize) -> Self {
        SampleSpec {
            limit,
            ..self.clone()
        }
    }
}

/// All monomials in `ngens` generators of total degree `≤ max_degree` and
/// derivative order `≤ max_order`, including `1`.
pub fn monomial_basis(ngens: usize, max_degree: u32, max_order: u32) -> Vec<DiffPoly> {
    let vars: Vec<Var> = (0..ngens as u16)
        .flat_map(|g| (0..=max_order).map(move |m| Var::new(g, m)))
        .collect();
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(0);
            for i in start..vars.len() {
                let mut m2 = m.clone();
                m2.push(i);
                next.push(m2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter()
        .map(|idx| {
            let mut powers: Vec<(Var, u32)> = Vec::new();
            for i in idx {
                match powers.last_mut() {
                    Some((v, k)) if *v == vars[i] => *k += 1,
                    _ => powers.push((vars[i], 1)),
                }
            }
            DiffPoly::monomial(Monomial::from_powers(powers))
        })
        .collect()
}

/// `n`-tuples from `basis`: all of them when there are at most `limit`,
/// otherwise `limit` distinct tuples drawn with `rng`. Order is deterministic.
pub fn tuples<R: Rng>(n: usize, basis: &[DiffPoly], limit: usize, rng: &mut R) -> Vec<Vec<DiffPoly>> {
    let total = (basis.len() as f64).powi(n as i32);
    if total <= limit as f64 {
        let mut out: Vec<Vec<DiffPoly>> = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    basis.iter().map(move |b| {
                        let mut t2 = t.clone();
                        t2.push(b.clone());
                        t2
                    })
                })
                .collect();
        }
        return out;
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < limit {
        let idx: Vec<usize> = (0..n).map(|_| rng.gen_range(0..basis.len())).collect();
        if seen.insert(idx.clone()) {
            out.push(idx.iter().map(|&i| basis[i].clone()).collect());
        }
    }
    out
}

/// Picks up to `k` items, keeping their original order.
pub fn subset<T: Clone, R: Rng>(items: &[T], k: usize, rng: &mut R) -> Vec<T> {
    if items.len() <= k {
        return items.to_vec();
    }
    let mut idx: Vec<usize> = (0..items.len()).collect();
    idx.shuffle(rng);
    idx.truncate(k);
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(1, 2, 2).len(), 10);
        assert_eq!(monomial_basis(2, 2, 2).len(), 28);
        assert_eq!(monomial_basis(1, 1, 0).len(), 2);
    }

    #[test]
    fn tuples_exhaustive_or_sampled() {
        let b = monomial_basis(1, 1, 1);
        let mut rng = SampleSpec::default().rng(0);
        assert_eq!(tuples(2, &b, 100, &mut rng).len(), 9);
        let s = tuples(3, &b, 5, &mut rng);
        assert_eq!(s.len(), 5);
        let mut rng2 = SampleSpec::default().rng(0);
        let _ = tuples(2, &b, 100, &mut rng2);
        assert_eq!(tuples(3, &b, 5, &mut rng2), s);
    }
}
