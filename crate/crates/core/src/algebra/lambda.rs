//! The quotient `V_n = V[λ_1,…,λ_n] / ⟨∂ + λ_1 + … + λ_n⟩` and its normal form.
//!
//! Every class has a unique representative free of `λ_n`: the relation
//! rewrites `λ_n c` as `-(λ_1 + … + λ_{n-1}) c - ∂c`, so `V_n` is a free
//! `V`-module on the monomials in `λ_1,…,λ_{n-1}`.

use std::fmt;

use num_traits::{One, Zero};

use super::diffpoly::{DiffPoly, GenNames};
use super::poly::{Affine, RatPoly, VPoly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// A normal-form element of `V_n` (`n ≥ 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPoly {
    arity: usize,
    /// Polynomial in `arity` variables whose last exponent is always zero.
    poly: VPoly,
}

impl LambdaPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "V_0 = V/∂V has no λ-normal form here");
        LambdaPoly {
            arity,
            poly: VPoly::zero(arity),
        }
    }

    /// The class of a pure `V` element.
    pub fn scalar(arity: usize, p: DiffPoly) -> Self {
        assert!(arity >= 1, "V_0 = V/∂V has no λ-normal form here");
        LambdaPoly {
            arity,
            poly: VPoly::from_diffpoly(arity, p),
        }
    }

    pub fn checked_arity(arity: usize) -> Result<()> {
        if arity == 0 {
            Err(Error::Unsupported(
                "arity 0 quotient V/∂V is not represented".into(),
            ))
        } else {
            Ok(())
        }
    }

    /// Reduces an arbitrary representative in `V[λ_1..λ_n]` to normal form.
    pub fn normalize(raw: &VPoly) -> Self {
        let n = raw.nvars();
        assert!(n >= 1, "V_0 = V/∂V has no λ-normal form here");
        if raw.degree_in(n - 1) == 0 {
            return LambdaPoly {
                arity: n,
                poly: raw.clone(),
            };
        }
        let mut images: Vec<Affine> = (0..n - 1).map(|i| Affine::var(n, i)).collect();
        let mut last = vec![-Rat::one(); n];
        last[n - 1] = Rat::zero();
        images.push(Affine::linear(last).with_d(-Rat::one()));
        LambdaPoly {
            arity: n,
            poly: raw.substitute(&images, n),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The normal-form representative.
    pub fn as_vpoly(&self) -> &VPoly {
        &self.poly
    }

    pub fn into_vpoly(self) -> VPoly {
        self.poly
    }

    /// `Some(v)` when the class is represented by a `λ`-free element.
    pub fn as_scalar(&self) -> Option<DiffPoly> {
        self.poly.as_scalar()
    }

    pub fn add(&self, other: &LambdaPoly) -> LambdaPoly {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut poly = self.poly.clone();
        poly.add_assign(&other.poly);
        LambdaPoly {
            arity: self.arity,
            poly,
        }
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &LambdaPoly) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        self.poly.add_scaled(c, &other.poly);
    }

    pub fn scale(&self, c: &Rat) -> LambdaPoly {
        LambdaPoly {
            arity: self.arity,
            poly: self.poly.scale(c),
        }
    }

    pub fn neg(&self) -> LambdaPoly {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &LambdaPoly) -> LambdaPoly {
        self.add(&other.neg())
    }

    /// `∂` on the class, i.e. `-(λ_1+…+λ_n)` times it.
    pub fn derive(&self) -> LambdaPoly {
        LambdaPoly {
            arity: self.arity,
            poly: self.poly.derive_coeffs(),
        }
    }

    /// Multiplication by a scalar polynomial in the λ's (any representative).
    pub fn mul_ratpoly(&self, r: &RatPoly) -> LambdaPoly {
        LambdaPoly::normalize(&self.poly.mul_ratpoly(r))
    }

    /// Substitutes `λ_i ↦ images[i]` in the normal-form representative,
    /// producing a polynomial in `nvars` new variables.
    ///
    /// Whether the result is meaningful depends on the caller: the images
    /// must respect the relation (e.g. `Σ images = Σ λ'` in the target) or the
    /// caller must account for representative dependence.
    pub fn substitute(&self, images: &[Affine], nvars: usize) -> VPoly {
        assert_eq!(images.len(), self.arity);
        self.poly.substitute(images, nvars)
    }

    /// Substitutes `λ_i ↦` linear forms in the target λ's and renormalizes in
    /// the target quotient. Requires `Σ_i images[i] = λ'_1 + … + λ'_m`.
    pub fn relabel_linear(&self, images: &[Vec<Rat>]) -> LambdaPoly {
        let m = images.first().map(|v| v.len()).unwrap_or(self.arity);
        debug_assert!({
            let mut sum = vec![Rat::zero(); m];
            for im in images {
                for (s, c) in sum.iter_mut().zip(im) {
                    *s += c;
                }
            }
            sum.iter().all(|s| s.is_one())
        });
        let affs: Vec<Affine> = images.iter().map(|v| Affine::linear(v.clone())).collect();
        LambdaPoly::normalize(&self.poly.substitute(&affs, m))
    }

    /// Coefficient extraction along `λ_i` (formal derivative of the normal
    /// form; `λ_n` has derivative zero by construction).
    pub fn d_lambda(&self, i: usize) -> VPoly {
        self.poly.d_var(i)
    }

    pub fn fmt_with(&self, names: &GenNames) -> String {
        let vars: Vec<String> = (1..=self.arity).map(|i| format!("l{i}")).collect();
        self.poly.fmt_with(names, &vars)
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&GenNames::default()))
    }
}

/// The exchange rule for tensor factors with auxiliary variables.
///
/// `factors[j]` is a polynomial with `V`-coefficients in a shared variable set.
/// Variable `x_vars[j]` attached to factor `j` stands for `targets[j] + ∂_j`,
/// where `∂_j` differentiates the coefficient of factor `j`. The result is the
/// expanded tensor: a list of `(coefficients, weight)` where `coefficients[j]`
/// is the (differentiated) coefficient of factor `j` and `weight` is a scalar
/// polynomial in the variables with the `x`s eliminated (their exponents are
/// zero).
pub fn pair_substitute(
    factors: &[VPoly],
    x_vars: &[usize],
    targets: &[Vec<Rat>],
) -> Result<Vec<(Vec<DiffPoly>, RatPoly)>> {
    let n = factors.len();
    if x_vars.len() != n || targets.len() != n {
        return Err(Error::Arity(format!(
            "{} factors but {} auxiliary variables and {} targets",
            n,
            x_vars.len(),
            targets.len()
        )));
    }
    let nvars = factors.first().map(|f| f.nvars()).unwrap_or(0);
    for f in factors {
        if f.nvars() != nvars {
            return Err(Error::Arity("factors over different variable sets".into()));
        }
    }
    for &x in x_vars {
        if x >= nvars {
            return Err(Error::Unbound(format!("auxiliary variable index {x}")));
        }
    }

    let mut out = Vec::new();
    // Depth-first over term choices, one per factor.
    let term_lists: Vec<Vec<(&Vec<u32>, &DiffPoly)>> =
        factors.iter().map(|f| f.terms().collect()).collect();
    if term_lists.iter().any(|t| t.is_empty()) {
        return Ok(out);
    }
    let mut choice = vec![0usize; n];
    loop {
        let mut exps = vec![0u32; nvars];
        for (j, &c) in choice.iter().enumerate() {
            for (e, k) in exps.iter_mut().zip(term_lists[j][c].0) {
                *e += k;
            }
        }
        let x_powers: Vec<u32> = x_vars.iter().map(|&x| exps[x]).collect();
        for &x in x_vars {
            exps[x] = 0;
        }
        let mut base = RatPoly::zero(nvars);
        base.add_term(exps, Rat::one());
        // Expand Π_j (Λ_j + ∂_j)^{k_j}.
        let mut partial: Vec<(Vec<u32>, RatPoly)> = vec![(Vec::new(), base)];
        for j in 0..n {
            let k = x_powers[j];
            let lin = RatPoly::linear(&targets[j]);
            let mut next = Vec::new();
            for (ts, w) in &partial {
                for t in 0..=k {
                    let coeff = super::rat::binomial(k, t);
                    let wt = w.mul(&lin.pow(k - t, Rat::one())).scale(&coeff);
                    if wt.is_zero() {
                        continue;
                    }
                    let mut ts2 = ts.clone();
                    ts2.push(t);
                    next.push((ts2, wt));
                }
            }
            partial = next;
        }
        for (ts, w) in partial {
            let coeffs: Vec<DiffPoly> = (0..n)
                .map(|j| term_lists[j][choice[j]].1.derive_n(ts[j]))
                .collect();
            if coeffs.iter().any(|c| c.is_zero()) {
                continue;
            }
            out.push((coeffs, w));
        }
        // advance
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < term_lists[j].len() {
                break;
            }
            choice[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn u(m: u32) -> DiffPoly {
        DiffPoly::var(0, m)
    }

    fn lam(n: usize, i: usize, c: DiffPoly) -> VPoly {
        let mut p = VPoly::zero(n);
        let mut e = vec![0; n];
        e[i] = 1;
        p.add_term(e, c);
        p
    }

    #[test]
    fn arity_one_lambda_is_minus_d() {
        let v = &u(0) * &u(1);
        let nf = LambdaPoly::normalize(&lam(1, 0, v.clone()));
        assert_eq!(nf, LambdaPoly::scalar(1, -v.derive()));
        let one = LambdaPoly::normalize(&lam(1, 0, DiffPoly::one()));
        assert!(one.is_zero());
    }

    #[test]
    fn arity_two_substitution() {
        let v = u(2);
        let nf = LambdaPoly::normalize(&lam(2, 1, v.clone()));
        let mut expected = lam(2, 0, -v.clone());
        expected.add_term(vec![0, 0], -v.derive());
        assert_eq!(nf.as_vpoly(), &expected);
    }

    #[test]
    fn total_sum_cancels_to_minus_d() {
        let v = &u(0) * &u(0);
        let mut raw = lam(2, 0, v.clone());
        raw.add_assign(&lam(2, 1, v.clone()));
        let nf = LambdaPoly::normalize(&raw);
        assert_eq!(nf, LambdaPoly::scalar(2, -v.derive()));
    }

    #[test]
    fn pair_substitute_without_aux_is_identity() {
        let mut p = VPoly::zero(3);
        p.add_term(vec![1, 0, 0], u(0));
        let out = pair_substitute(&[p.clone()], &[2], &[vec![rat(0); 3]]).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, vec![u(0)]);
        let mut w = RatPoly::zero(3);
        w.add_term(vec![1, 0, 0], rat(1));
        assert_eq!(out[0].1, w);
    }

    #[test]
    fn pair_substitute_rejects_unbound_variable() {
        let p = VPoly::zero(2);
        assert!(pair_substitute(&[p], &[5], &[vec![rat(0); 2]]).is_err());
    }
}
