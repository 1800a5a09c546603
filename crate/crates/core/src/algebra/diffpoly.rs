//! The differential polynomial algebra `V = F[u_a^(m)]` with its derivation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{fmt_rat, rat, Rat};

/// The variable `u_a^(m)`: generator `a`, derivative order `m`.
///
/// Ordered lexicographically on `(gen, order)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub gen: u16,
    pub order: u32,
}

impl Var {
    pub fn new(gen: u16, order: u32) -> Self {
        Var { gen, order }
    }

    pub fn derive(self) -> Var {
        Var {
            gen: self.gen,
            order: self.order + 1,
        }
    }
}

/// A commutative monomial in the variables `u_a^(m)`, stored as sorted
/// `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn max_order(&self) -> u32 {
        self.0.iter().map(|&(v, _)| v.order).max().unwrap_or(0)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Multiplies by `v^e`.
    fn times_power(&self, v: Var, e: u32) -> Monomial {
        self.mul(&Monomial(vec![(v, e)]))
    }

    /// Divides by `v` once; `None` if `v` does not occur.
    fn divide_var(&self, v: Var) -> Option<Monomial> {
        let idx = self.0.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let mut out = self.0.clone();
        if out[idx].1 == 1 {
            out.remove(idx);
        } else {
            out[idx].1 -= 1;
        }
        Some(Monomial(out))
    }

    /// `∂(self)` as a list of `(multiplicity, monomial)`.
    pub fn derive(&self) -> Vec<(u32, Monomial)> {
        self.0
            .iter()
            .map(|&(v, e)| {
                let rest = self.divide_var(v).expect("variable present");
                (e, rest.times_power(v.derive(), 1))
            })
            .collect()
    }

    /// `∂/∂v (self)` as `(exponent, monomial)`.
    pub fn partial(&self, v: Var) -> Option<(u32, Monomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        Some((e, self.divide_var(v).expect("variable present")))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn fmt_with(&self, names: &GenNames) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(v, e)| {
                let base = names.var_name(v);
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Display names for generators. Generator `0` defaults to `u`, generator
/// `a > 0` to `u_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenNames(pub Vec<String>);

impl GenNames {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        GenNames(names.into_iter().map(Into::into).collect())
    }

    pub fn name(&self, gen: u16) -> String {
        match self.0.get(gen as usize) {
            Some(n) => n.clone(),
            None if gen == 0 => "u".to_string(),
            None => format!("u_{gen}"),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<u16> {
        if let Some(i) = self.0.iter().position(|n| n == name) {
            return Some(i as u16);
        }
        if self.0.is_empty() {
            if name == "u" {
                return Some(0);
            }
            if let Some(rest) = name.strip_prefix("u_") {
                return rest.parse().ok();
            }
        }
        None
    }

    /// `u`, `u'`, `u''`, `u'''`, then `u[4]`, `u[5]`, ...
    pub fn var_name(&self, v: Var) -> String {
        let base = self.name(v.gen);
        match v.order {
            0..=3 => format!("{base}{}", "'".repeat(v.order as usize)),
            m => format!("{base}[{m}]"),
        }
    }
}

/// An element of `V`: a finite rational combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        DiffPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        DiffPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rat::one(), m)
    }

    /// The generator `u_gen^(order)` as a polynomial.
    pub fn var(gen: u16, order: u32) -> Self {
        Self::monomial(Monomial::var(Var::new(gen, order)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, c: Rat, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &DiffPoly) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(c * a, m.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> DiffPoly {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// The derivation `∂`: `∂u_a^(m) = u_a^(m+1)`, extended by Leibniz.
    pub fn derive(&self) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in &self.terms {
            for (k, dm) in m.derive() {
                out.add_term(c * rat(k as i64), dm);
            }
        }
        out
    }

    pub fn derive_n(&self, n: u32) -> DiffPoly {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.derive();
        }
        p
    }

    /// Partial derivative with respect to the variable `v`.
    pub fn partial(&self, v: Var) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.partial(v) {
                out.add_term(c * rat(e as i64), rest);
            }
        }
        out
    }

    /// All variables occurring in the polynomial.
    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn pow(&self, e: u32) -> DiffPoly {
        (0..e).fold(DiffPoly::one(), |acc, _| &acc * self)
    }

    pub fn fmt_with(&self, names: &GenNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&fmt_rat(&mag));
            } else if mag.is_one() {
                s.push_str(&m.fmt_with(names));
            } else {
                s.push_str(&format!("{}*{}", fmt_rat(&mag), m.fmt_with(names)));
            }
        }
        s
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&GenNames::default()))
    }
}

impl From<Monomial> for DiffPoly {
    fn from(m: Monomial) -> Self {
        DiffPoly::monomial(m)
    }
}

impl<'a> Add<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for DiffPoly {
    type Output = DiffPoly;
    fn add(mut self, rhs: DiffPoly) -> DiffPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a DiffPoly> for DiffPoly {
    fn add_assign(&mut self, rhs: &DiffPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl<'a> Sub<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), m.clone());
        }
        out
    }
}

impl Sub for DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: DiffPoly) -> DiffPoly {
        &self - &rhs
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        -&self
    }
}

impl<'a> Mul<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(c1 * c2, m1.mul(m2));
            }
        }
        out
    }
}

impl Mul for DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: DiffPoly) -> DiffPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(m: u32) -> DiffPoly {
        DiffPoly::var(0, m)
    }

    #[test]
    fn derive_constant_is_zero() {
        assert!(DiffPoly::one().derive().is_zero());
    }

    #[test]
    fn derive_square() {
        let p = &u(0) * &u(0);
        assert_eq!(p.derive(), (&u(0) * &u(1)).scale(&rat(2)));
    }

    #[test]
    fn derive_cube_of_first_derivative() {
        let p = u(1).pow(3);
        assert_eq!(p.derive(), (&u(1).pow(2) * &u(2)).scale(&rat(3)));
    }

    #[test]
    fn leibniz_on_mixed_generators() {
        let p = &u(0) + &DiffPoly::var(1, 2);
        let q = &(&u(1) * &u(1)) - &DiffPoly::var(1, 0).scale(&rat(3));
        let lhs = (&p * &q).derive();
        let rhs = &(&p.derive() * &q) + &(&p * &q.derive());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_uses_primes() {
        let p = &(&u(0) * &u(2)).scale(&rat(3)) - &u(1);
        assert_eq!(p.to_string(), "3*u*u'' - u'");
    }
}
