//! Polynomials in finitely many commuting variables, with coefficients either
//! in `F` ([`RatPoly`]) or in `V` ([`VPoly`]).
//!
//! The variables are anonymous and indexed `0..nvars`; callers decide what
//! they stand for (λ-variables, auxiliary `x`-variables, ...).

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{One, Zero};

use super::diffpoly::{DiffPoly, GenNames};
use super::rat::{binomial, fmt_rat, Rat};

/// Coefficient rings usable in [`Poly`].
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_coeff(&mut self, other: &Self);
    fn mul_coeff(&self, other: &Self) -> Self;
    fn scale_coeff(&self, c: &Rat) -> Self;
}

impl Coeff for Rat {
    fn zero_coeff() -> Self {
        Zero::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_coeff(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_coeff(&self, c: &Rat) -> Self {
        self * c
    }
}

impl Coeff for DiffPoly {
    fn zero_coeff() -> Self {
        DiffPoly::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        DiffPoly::is_zero(self)
    }
    fn add_coeff(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_coeff(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_coeff(&self, c: &Rat) -> Self {
        DiffPoly::scale(self, c)
    }
}

/// Exponent vector of a monomial in the anonymous variables.
pub type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exps, C>,
}

pub type RatPoly = Poly<Rat>;
pub type VPoly = Poly<DiffPoly>;

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    pub fn add_term(&mut self, exps: Exps, c: C) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero_coeff() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_coeff(&c);
                if e.get().is_zero_coeff() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, s: &Rat, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if s.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.scale_coeff(s));
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(s, self);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Rat::one(), other);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul_coeff(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32, one: C) -> Self {
        let mut acc = Self::constant(self.nvars, one);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree in the variables; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Re-embeds into a polynomial ring with more (or relabelled) variables:
    /// variable `i` becomes variable `map[i]` of the `nvars`-variable ring.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Formal partial derivative in variable `var`.
    pub fn d_var(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut ne = e.clone();
                ne[var] -= 1;
                out.add_term(ne, c.scale_coeff(&Rat::from_integer(e[var].into())));
            }
        }
        out
    }
}

impl RatPoly {
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    /// The linear form `Σ coeffs[i] * y_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Embeds as a polynomial with constant `V`-coefficients.
    pub fn to_vpoly(&self) -> VPoly {
        let mut out = VPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), DiffPoly::constant(c.clone()));
        }
        out
    }

    /// Substitutes variable `i` by the polynomial `images[i]`.
    pub fn compose(&self, images: &[RatPoly], nvars: usize) -> RatPoly {
        assert_eq!(images.len(), self.nvars);
        let mut cache = PowerCache::new(images);
        let mut out = RatPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut term = RatPoly::constant(nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(cache.power(i, k));
                }
            }
            out.add_assign(&term);
        }
        out
    }
}

struct PowerCache<'a> {
    bases: &'a [RatPoly],
    powers: Vec<Vec<RatPoly>>,
}

impl<'a> PowerCache<'a> {
    fn new(bases: &'a [RatPoly]) -> Self {
        PowerCache {
            bases,
            powers: bases
                .iter()
                .map(|b| vec![RatPoly::one(b.nvars())])
                .collect(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> &RatPoly {
        while self.powers[i].len() <= k as usize {
            let next = self.powers[i].last().unwrap().mul(&self.bases[i]);
            self.powers[i].push(next);
        }
        &self.powers[i][k as usize]
    }
}

/// An operator of the form `Σ lin[j] * y_j + d * ∂`, where `∂` acts on the
/// `V`-coefficient of the term it multiplies.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine {
    pub lin: Vec<Rat>,
    pub d: Rat,
}

impl Affine {
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut lin = vec![Rat::zero(); nvars];
        lin[i] = Rat::one();
        Affine { lin, d: Rat::zero() }
    }

    pub fn linear(lin: Vec<Rat>) -> Self {
        Affine { lin, d: Rat::zero() }
    }

    pub fn with_d(mut self, d: Rat) -> Self {
        self.d = d;
        self
    }

    /// As a rational polynomial in `lin.len() + 1` variables, the last one
    /// standing for `∂`.
    fn as_ratpoly(&self) -> RatPoly {
        let mut coeffs = self.lin.clone();
        coeffs.push(self.d.clone());
        RatPoly::linear(&coeffs)
    }
}

impl VPoly {
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, DiffPoly::one())
    }

    pub fn from_diffpoly(nvars: usize, p: DiffPoly) -> Self {
        Self::constant(nvars, p)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        RatPoly::var(nvars, i).to_vpoly()
    }

    /// Applies `∂` to every coefficient.
    pub fn derive_coeffs(&self) -> VPoly {
        let mut out = VPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.derive());
        }
        out
    }

    /// Multiplies every coefficient by `p` (from the left, `V` is commutative).
    pub fn mul_diffpoly(&self, p: &DiffPoly) -> VPoly {
        let mut out = VPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), p * c);
        }
        out
    }

    pub fn mul_ratpoly(&self, r: &RatPoly) -> VPoly {
        assert_eq!(self.nvars, r.nvars);
        let mut out = VPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &r.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.scale_coeff(c2));
            }
        }
        out
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> DiffPoly {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_default()
    }

    /// `Some(c)` when the polynomial has no variable dependence.
    pub fn as_scalar(&self) -> Option<DiffPoly> {
        if self.terms.keys().all(|e| e.iter().all(|&k| k == 0)) {
            Some(self.constant_term())
        } else {
            None
        }
    }

    /// Substitutes variable `i` by the operator `images[i]`, i.e. each term
    /// `c * Π y_i^{e_i}` becomes `Π (L_i + d_i ∂)^{e_i}` applied to `c`, with
    /// all `∂`s acting on `c`. Since these operators commute the result is
    /// independent of ordering.
    pub fn substitute(&self, images: &[Affine], nvars: usize) -> VPoly {
        assert_eq!(images.len(), self.nvars);
        let bases: Vec<RatPoly> = images
            .iter()
            .map(|a| {
                assert_eq!(a.lin.len(), nvars);
                a.as_ratpoly()
            })
            .collect();
        let mut cache = PowerCache::new(&bases);
        let mut out = VPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut op = RatPoly::one(nvars + 1);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    op = op.mul(cache.power(i, k));
                }
            }
            let mut derived: Vec<DiffPoly> = vec![c.clone()];
            for (oe, r) in op.terms() {
                let t = oe[nvars] as usize;
                while derived.len() <= t {
                    let next = derived.last().unwrap().derive();
                    derived.push(next);
                }
                out.add_term(oe[..nvars].to_vec(), derived[t].scale(r));
            }
        }
        out
    }

    /// Applies `(a + ∂)^k` where `a` is a linear form in the variables and
    /// `∂` acts on coefficients.
    pub fn apply_shifted_d_power(&self, shift: &[Rat], k: u32) -> VPoly {
        let mut out = VPoly::zero(self.nvars);
        let lin = RatPoly::linear(shift);
        let mut derived = self.clone();
        for t in 0..=k {
            let term = derived.mul_ratpoly(&lin.pow(k - t, Rat::one()));
            out.add_scaled(&binomial(k, t), &term);
            if t < k {
                derived = derived.derive_coeffs();
            }
        }
        out
    }

    pub fn fmt_with(&self, names: &GenNames, var_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        var_names[i].clone()
                    } else {
                        format!("{}^{}", var_names[i], k)
                    }
                })
                .collect();
            let coeff = c.fmt_with(names);
            if vars.is_empty() {
                parts.push(format!("({coeff})"));
            } else {
                parts.push(format!("({coeff})*{}", vars.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl RatPoly {
    pub fn fmt_with(&self, var_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = vec![fmt_rat(c)];
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(var_names[i].clone()),
                    _ => factors.push(format!("{}^{}", var_names[i], k)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}
