//! Permutations in one-line notation, the actions on tuples and tensors,
//! shuffles, block composition and monotone permutations.

mod monotone;
mod shuffle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use monotone::{
    enumerate_monotone, enumerate_monotone_by_filter, is_monotone, MonotonePerm, Restriction,
};
pub use shuffle::{block_compose, enumerate_shuffles};

/// A bijection of `{1..n}`, stored 0-based: `images[i] = π(i+1) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Invalid(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From 1-based one-line notation `[π(1), …, π(n)]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Invalid("one-line notation is 1-based".into()));
        }
        Self::from_images(values.iter().map(|v| v - 1).collect())
    }

    /// The 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// 0-based application.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The transposition of 0-based `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: cur.clone(),
            });
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }

    /// `σ(t_1, …, t_n) = (t_{σ⁻¹(1)}, …, t_{σ⁻¹(n)})`.
    pub fn act_on_tuple<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len());
        let inv = self.inverse();
        inv.images.iter().map(|&i| items[i].clone()).collect()
    }

    /// Koszul sign `Π_{i<j, σ(i)>σ(j)} (-1)^{p_i p_j}` for slot parities
    /// `odd[i]`.
    pub fn koszul_sign(&self, odd: &[bool]) -> i32 {
        assert_eq!(odd.len(), self.len());
        let n = self.len();
        let mut sign = 1;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] && odd[i] && odd[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// The action on `v_1 ⊗ … ⊗ v_n`: the new order of the factors (0-based
    /// indices into the input) and the Koszul sign.
    pub fn act_on_tensor(&self, odd: &[bool]) -> (Vec<usize>, i32) {
        (self.inverse().images, self.koszul_sign(odd))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses `"[3 2 4 1 5]"`; commas and missing brackets are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_one_line(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p: Perm = "[3 2 4 1 5]".parse().unwrap();
        assert_eq!(p.to_string(), "[3 2 4 1 5]");
        assert!("[1 1]".parse::<Perm>().is_err());
        assert!("[0 1]".parse::<Perm>().is_err());
    }

    #[test]
    fn composition_convention() {
        let s: Perm = "[2 3 1]".parse().unwrap();
        let t: Perm = "[2 1 3]".parse().unwrap();
        // (s t)(1) = s(t(1)) = s(2) = 3
        assert_eq!(s.compose(&t).one_line(), vec![3, 2, 1]);
        assert!(s.compose(&s.inverse()).is_identity());
    }

    #[test]
    fn tuple_action_uses_inverse_images() {
        let s: Perm = "[2 3 1]".parse().unwrap();
        assert_eq!(s.act_on_tuple(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    #[test]
    fn symmetric_group_size_and_signs() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
    }

    #[test]
    fn koszul_sign_cases() {
        let s: Perm = "[3 1 2]".parse().unwrap();
        assert_eq!(s.koszul_sign(&[false; 3]), 1);
        assert_eq!(s.koszul_sign(&[true; 3]), s.sign());
        assert_eq!(Perm::transposition(2, 0, 1).koszul_sign(&[true, true]), -1);
        // [odd, even, odd]: inversions (1,2) and (1,3); only (1,3) is odd-odd
        assert_eq!(s.koszul_sign(&[true, false, true]), -1);
    }
}
