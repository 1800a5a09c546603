use super::Perm;
use crate::error::{Error, Result};

/// All `(m,n)`-shuffles: `σ(1) < … < σ(m)` and `σ(m+1) < … < σ(m+n)`.
/// Negative arguments give the empty set.
pub fn enumerate_shuffles(m: i64, n: i64) -> Vec<Perm> {
    if m < 0 || n < 0 {
        return Vec::new();
    }
    let (m, n) = (m as usize, n as usize);
    let total = m + n;
    let mut out = Vec::new();
    // the image of the first m positions, as an increasing subset
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        let mut images = Vec::with_capacity(total);
        images.extend_from_slice(&subset);
        images.extend((0..total).filter(|i| !subset.contains(i)));
        out.push(Perm::from_images(images).expect("shuffle images form a permutation"));
        let Some(i) = (0..m).rev().find(|&i| subset[i] < total - (m - i)) else {
            return out;
        };
        subset[i] += 1;
        for j in i + 1..m {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// `σ(τ_1, …, τ_n) ∈ S_{M_n}`: each `τ_i` permutes its block of symbols, then
/// `σ` permutes the blocks.
pub fn block_compose(sigma: &Perm, taus: &[Perm]) -> Result<Perm> {
    if sigma.len() != taus.len() {
        return Err(Error::Arity(format!(
            "σ ∈ S_{} needs {} block permutations, got {}",
            sigma.len(),
            sigma.len(),
            taus.len()
        )));
    }
    let mut offsets = Vec::with_capacity(taus.len());
    let mut acc = 0;
    for t in taus {
        offsets.push(acc);
        acc += t.len();
    }
    // blocks after the inner permutations, as lists of input indices
    let blocks: Vec<Vec<usize>> = taus
        .iter()
        .zip(&offsets)
        .map(|(t, &off)| t.inverse().images().iter().map(|&i| off + i).collect())
        .collect();
    let sigma_inv = sigma.inverse();
    // position p of the output holds input symbol rho^{-1}(p)
    let rho_inv: Vec<usize> = (0..sigma.len())
        .flat_map(|j| blocks[sigma_inv.apply(j)].iter().copied())
        .collect();
    Ok(Perm::from_images(rho_inv)?.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_edge_cases() {
        assert_eq!(enumerate_shuffles(0, 5), vec![Perm::identity(5)]);
        assert_eq!(enumerate_shuffles(5, 0), vec![Perm::identity(5)]);
        assert!(enumerate_shuffles(-1, 3).is_empty());
        let s: Vec<Vec<usize>> = enumerate_shuffles(2, 1).iter().map(|p| p.one_line()).collect();
        assert_eq!(s, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn block_composition_example() {
        let sigma: Perm = "[2 1]".parse().unwrap();
        let t1: Perm = "[2 1]".parse().unwrap();
        let t2 = Perm::identity(1);
        let rho = block_compose(&sigma, &[t1, t2]).unwrap();
        assert_eq!(rho.act_on_tuple(&[1, 2, 3]), vec![3, 2, 1]);
        assert!(block_compose(&sigma, &[Perm::identity(1)]).is_err());
    }
}
