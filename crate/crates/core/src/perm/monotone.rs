use super::Perm;
use crate::error::{Error, Result};

/// A monotone permutation together with its start and drops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePerm {
    perm: Perm,
    start: usize,
    /// 1-based drop positions, increasing.
    drops: Vec<usize>,
}

/// Which branch of a restriction lemma applied, and the sign exponent shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub perm: MonotonePerm,
    /// `(-1)^{dr(restricted)} = (-1)^{dr(π) + shift}`.
    pub shift: usize,
}

impl MonotonePerm {
    /// Builds the monotone permutation of `S_n` starting at `k` with the given
    /// (1-based) drop positions.
    pub fn from_drops(n: usize, k: usize, drops: &[usize]) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::Range(format!("start {k} not in 1..={n}")));
        }
        let mut d = drops.to_vec();
        d.sort_unstable();
        d.dedup();
        if d.len() != k - 1 || d.iter().any(|&p| p < 2 || p > n) {
            return Err(Error::Invalid(format!(
                "need {} distinct drop positions in 2..={n}, got {drops:?}",
                k - 1
            )));
        }
        let mut values = vec![0; n];
        values[0] = k;
        let mut down = k - 1;
        let mut up = k + 1;
        let mut di = 0;
        for (pos, slot) in values.iter_mut().enumerate().skip(1) {
            if di < d.len() && d[di] == pos + 1 {
                *slot = down;
                down -= 1;
                di += 1;
            } else {
                *slot = up;
                up += 1;
            }
        }
        Ok(MonotonePerm {
            perm: Perm::from_one_line(&values)?,
            start: k,
            drops: d,
        })
    }

    pub fn from_perm(perm: &Perm) -> Result<Self> {
        if !is_monotone(perm) {
            return Err(Error::Invalid(format!("{perm} is not monotone")));
        }
        let values = perm.one_line();
        let drops = (1..values.len())
            .filter(|&i| values[..i].iter().all(|&v| v > values[i]))
            .map(|i| i + 1)
            .collect();
        Ok(MonotonePerm {
            perm: perm.clone(),
            start: values.first().copied().unwrap_or(1),
            drops,
        })
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn drops(&self) -> &[usize] {
        &self.drops
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `dr(π)`, the sum of the drop positions.
    pub fn drop_sum(&self) -> usize {
        self.drops.iter().sum()
    }

    /// `(-1)^{dr(π)}`.
    pub fn drop_sign(&self) -> i32 {
        if self.drop_sum() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The identification `M_n^{k,k∓1} ≅ M_{n-1}^{k-1}` resp. `M_{n-1}^k`
    /// obtained by deleting the first entry.
    pub fn restrict_second(&self) -> Result<Restriction> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Range("restriction needs n ≥ 2".into()));
        }
        let v = self.perm.one_line();
        let k = self.start;
        let (first, shift) = if v[1] + 1 == k {
            (k - 1, k)
        } else if v[1] == k + 1 {
            (k, k - 1)
        } else {
            return Err(Error::Invalid(format!(
                "{} has second entry {} ∉ {{k-1, k+1}}",
                self.perm, v[1]
            )));
        };
        let mut values = vec![first];
        for &x in &v[2..] {
            values.push(if x < k { x } else { x - 1 });
        }
        let perm = MonotonePerm::from_perm(&Perm::from_one_line(&values)?)?;
        Ok(Restriction { perm, shift })
    }

    /// The identification `¹M_n^k ≅ M_{n-1}^{k-1}` resp. `ⁿM_n^k ≅ M_{n-1}^k`
    /// obtained by deleting the last entry.
    pub fn restrict_last(&self) -> Result<Restriction> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Range("restriction needs n ≥ 2".into()));
        }
        let v = self.perm.one_line();
        let (values, shift): (Vec<usize>, usize) = if v[n - 1] == 1 {
            (v[..n - 1].iter().map(|x| x - 1).collect(), n)
        } else if v[n - 1] == n {
            (v[..n - 1].to_vec(), 0)
        } else {
            return Err(Error::Invalid(format!(
                "{} ends in {} ∉ {{1, n}}",
                self.perm,
                v[n - 1]
            )));
        };
        let perm = MonotonePerm::from_perm(&Perm::from_one_line(&values)?)?;
        Ok(Restriction { perm, shift })
    }
}

/// Each entry is either a new maximum or a new minimum of the prefix.
pub fn is_monotone(perm: &Perm) -> bool {
    let v = perm.images();
    let (mut lo, mut hi) = match v.first() {
        Some(&x) => (x, x),
        None => return true,
    };
    for &x in &v[1..] {
        if x > hi {
            hi = x;
        } else if x < lo {
            lo = x;
        } else {
            return false;
        }
    }
    true
}

/// All `π ∈ M_n^k`, generated from the `(k-1)`-subsets of `{2..n}` in
/// lexicographic order.
pub fn enumerate_monotone(n: usize, k: usize) -> Result<Vec<MonotonePerm>> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("start {k} not in 1..={n}")));
    }
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (2..k + 1).collect();
    loop {
        out.push(MonotonePerm::from_drops(n, k, &subset)?);
        // next (k-1)-subset of {2..n}
        let r = subset.len();
        let Some(i) = (0..r).rev().find(|&i| subset[i] < n - (r - 1 - i)) else {
            return Ok(out);
        };
        subset[i] += 1;
        for j in i + 1..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// `M_n^k` by filtering all of `S_n`.
pub fn enumerate_monotone_by_filter(n: usize, k: usize) -> Vec<Perm> {
    Perm::all(n)
        .into_iter()
        .filter(|p| p.images().first() == Some(&(k - 1)) && is_monotone(p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_lines(v: &[MonotonePerm]) -> Vec<Vec<usize>> {
        v.iter().map(|m| m.perm().one_line()).collect()
    }

    #[test]
    fn starting_at_three_in_s5() {
        let m = enumerate_monotone(5, 3).unwrap();
        assert_eq!(
            one_lines(&m),
            vec![
                vec![3, 2, 1, 4, 5],
                vec![3, 2, 4, 1, 5],
                vec![3, 2, 4, 5, 1],
                vec![3, 4, 2, 1, 5],
                vec![3, 4, 2, 5, 1],
                vec![3, 4, 5, 2, 1],
            ]
        );
    }

    #[test]
    fn extreme_starts() {
        for n in 1..7 {
            let id = enumerate_monotone(n, 1).unwrap();
            assert_eq!(id.len(), 1);
            assert!(id[0].perm().is_identity());
            let top = enumerate_monotone(n, n).unwrap();
            assert_eq!(top.len(), 1);
            assert_eq!(top[0].perm().one_line(), (1..=n).rev().collect::<Vec<_>>());
        }
        assert!(enumerate_monotone(3, 0).is_err());
        assert!(enumerate_monotone(3, 4).is_err());
    }

    #[test]
    fn drop_sign_examples() {
        let p = MonotonePerm::from_perm(&"[3 2 4 1 5]".parse().unwrap()).unwrap();
        assert_eq!(p.drops(), &[2, 4]);
        assert_eq!(p.drop_sign(), 1);
        assert_eq!(p.perm().sign(), 1);
        assert_eq!(MonotonePerm::from_drops(4, 1, &[]).unwrap().drop_sign(), 1);
        for n in 2..8 {
            let s = &enumerate_monotone(n, n).unwrap()[0];
            let closed = n * (n + 1) / 2 - 1;
            assert_eq!(s.drop_sum(), closed);
        }
    }

    #[test]
    fn restrictions_of_small_cases() {
        let p = MonotonePerm::from_drops(4, 2, &[2]).unwrap();
        assert_eq!(p.perm().one_line(), vec![2, 1, 3, 4]);
        let r = p.restrict_second().unwrap();
        assert!(r.perm.perm().is_identity());
        let id = MonotonePerm::from_drops(4, 1, &[]).unwrap();
        assert!(id.restrict_last().unwrap().perm.perm().is_identity());
        let s4 = MonotonePerm::from_drops(4, 4, &[2, 3, 4]).unwrap();
        let r = s4.restrict_last().unwrap();
        assert_eq!(r.perm.perm().one_line(), vec![3, 2, 1]);
        assert_eq!(r.shift, 4);
    }

    #[test]
    fn non_monotone_rejected() {
        assert!(MonotonePerm::from_perm(&"[2 4 1 3]".parse().unwrap()).is_err());
    }
}
