//! λ-brackets on differential polynomial algebras.
//!
//! A structure is a table `[u_i λ u_j] ∈ V[λ]` on generators. The bracket of
//! arbitrary elements is given by the master formula
//!
//! ```text
//! [f_λ g] = Σ ∂g/∂u_j^(n) (λ+∂)^n H_ji(λ+∂) (-λ-∂)^m ∂f/∂u_i^(m),   H_ji(λ) = [u_i λ u_j]
//! ```
//!
//! where `∂` in `H_ji(λ+∂)` acts on the factor to its right. This is
//! sesquilinear and satisfies the left Leibniz rule for the ordinary product
//! by construction.
//!
//! Descriptor format:
//!
//! ```text
//! name gfz
//! generators u
//! product standard        # or: deformed  (a∗b = ab + a'b')
//! u u : l
//! ```

mod axioms;
mod master;

pub use axioms::check_axioms;
pub use master::{build_master, build_master_unchecked, check_master_square, read_back, Master};

use std::fmt;

use num_traits::One;

use crate::algebra::{Affine, DiffPoly, Expr, GenNames, Rat, RatPoly, VPoly};
use crate::error::{Error, Result};

/// The product of the underlying algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Standard,
    /// `a∗b = ab + a'b'`: commutative, neither associative nor compatible
    /// with the bracket.
    Deformed,
}

#[derive(Clone, Debug)]
pub struct Pva {
    name: String,
    names: GenNames,
    product: Product,
    table: Vec<Vec<VPoly>>,
}

impl Pva {
    /// All brackets of generators zero.
    pub fn new(name: impl Into<String>, names: GenNames) -> Self {
        let k = names.0.len();
        Pva {
            name: name.into(),
            names,
            product: Product::Standard,
            table: vec![vec![VPoly::zero(1); k]; k],
        }
    }

    pub fn with_product(mut self, product: Product) -> Self {
        self.product = product;
        self
    }

    /// Sets `[u_i λ u_j]`, written with `l` for `λ`.
    pub fn set(&mut self, a: &str, b: &str, value: &str) -> Result<()> {
        let i = self.gen(a)?;
        let j = self.gen(b)?;
        let e = Expr::parse(value, &self.names)?;
        if e.slot_count() > 0 || e.lambda_count() > 1 {
            return Err(Error::Invalid(format!(
                "bracket entry '{value}' may only use l and generators"
            )));
        }
        self.table[i][j] = e.eval(1, &[])?;
        Ok(())
    }

    fn gen(&self, name: &str) -> Result<usize> {
        self.names
            .lookup(name)
            .map(usize::from)
            .filter(|&g| g < self.ngens())
            .ok_or_else(|| Error::Unbound(format!("generator '{name}'")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &GenNames {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.0.len()
    }

    pub fn product_kind(&self) -> Product {
        self.product
    }

    pub fn entry(&self, i: usize, j: usize) -> &VPoly {
        &self.table[i][j]
    }

    fn check_declared(&self, p: &DiffPoly) -> Result<()> {
        match p.vars().into_iter().find(|v| usize::from(v.gen) >= self.ngens()) {
            Some(v) => Err(Error::Unbound(format!("generator index {}", v.gen))),
            None => Ok(()),
        }
    }

    pub fn product(&self, a: &DiffPoly, b: &DiffPoly) -> DiffPoly {
        match self.product {
            Product::Standard => a * b,
            Product::Deformed => &(a * b) + &(&a.derive() * &b.derive()),
        }
    }

    /// `[a_λ b]` as a polynomial in one variable `λ`.
    pub fn bracket(&self, a: &DiffPoly, b: &DiffPoly) -> Result<VPoly> {
        self.check_declared(a)?;
        self.check_declared(b)?;
        let shift = [Rat::one()];
        let mut out = VPoly::zero(1);
        for va in a.vars() {
            let da = a.partial(va);
            // (-λ-∂)^m ∂a/∂u_i^(m)
            let mut f = VPoly::from_diffpoly(1, da).apply_shifted_d_power(&shift, va.order);
            if va.order % 2 == 1 {
                f = f.neg();
            }
            for vb in b.vars() {
                let h = &self.table[usize::from(va.gen)][usize::from(vb.gen)];
                if h.is_zero() {
                    continue;
                }
                let mut g = VPoly::zero(1);
                for (e, hk) in h.terms() {
                    g.add_assign(&f.apply_shifted_d_power(&shift, e[0]).mul_diffpoly(hk));
                }
                let db = b.partial(vb);
                out.add_assign(&g.apply_shifted_d_power(&shift, vb.order).mul_diffpoly(&db));
            }
        }
        Ok(out)
    }

    /// `[a_{λ_var} x]` for `x` a polynomial in `nvars` parameters.
    pub fn bracket_into(&self, a: &DiffPoly, x: &VPoly, var: usize) -> Result<VPoly> {
        let n = x.nvars();
        let mut map = vec![0; 1];
        map[0] = var;
        let mut out = VPoly::zero(n);
        for (e, c) in x.terms() {
            let br = self.bracket(a, c)?.relabel(&map, n);
            out.add_assign(&br.mul_ratpoly(&monomial(n, e)));
        }
        Ok(out)
    }

    /// `[y_ν c]` at `ν = target` (a linear form), for `y` a polynomial in
    /// parameters.
    pub fn bracket_from(&self, y: &VPoly, c: &DiffPoly, target: &[Rat]) -> Result<VPoly> {
        let n = y.nvars();
        let image = [Affine::linear(target.to_vec())];
        let mut out = VPoly::zero(n);
        for (e, yk) in y.terms() {
            let br = self.bracket(yk, c)?.substitute(&image, n);
            out.add_assign(&br.mul_ratpoly(&monomial(n, e)));
        }
        Ok(out)
    }

    /// The product applied coefficientwise: `x ∗ c`.
    pub fn product_right(&self, x: &VPoly, c: &DiffPoly) -> VPoly {
        let mut out = VPoly::zero(x.nvars());
        for (e, xk) in x.terms() {
            out.add_term(e.clone(), self.product(xk, c));
        }
        out
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut name = String::from("unnamed");
        let mut names = None;
        let mut product = Product::Standard;
        let mut entries = Vec::new();
        for raw in src.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(n) = line.strip_prefix("name ") {
                name = n.trim().to_string();
            } else if let Some(g) = line.strip_prefix("generators") {
                names = Some(GenNames::new(
                    g.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty()),
                ));
            } else if let Some(p) = line.strip_prefix("product") {
                product = match p.trim() {
                    "standard" => Product::Standard,
                    "deformed" => Product::Deformed,
                    other => return Err(Error::Parse(format!("unknown product '{other}'"))),
                };
            } else {
                let (lhs, rhs) = line
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected 'a b : value', got '{line}'")))?;
                let pair: Vec<&str> = lhs.split_whitespace().collect();
                if pair.len() != 2 {
                    return Err(Error::Parse(format!("expected two generators in '{lhs}'")));
                }
                entries.push((pair[0].to_string(), pair[1].to_string(), rhs.trim().to_string()));
            }
        }
        let names = names.ok_or_else(|| Error::Parse("missing 'generators' header".into()))?;
        if names.0.is_empty() {
            return Err(Error::Parse("no generators".into()));
        }
        let mut p = Pva::new(name, names).with_product(product);
        for (a, b, v) in entries {
            p.set(&a, &b, &v)?;
        }
        Ok(p)
    }

    /// Shipped structures by name.
    pub fn builtin(name: &str) -> Result<Self> {
        let src = match name {
            "gfz" => GFZ,
            "affine" => AFFINE,
            "zero" => ZERO,
            "broken-skew" => BROKEN_SKEW,
            "broken-jacobi" => BROKEN_JACOBI,
            "broken-leibniz" => BROKEN_LEIBNIZ,
            _ => return Err(Error::Unbound(format!("structure '{name}'"))),
        };
        Pva::parse(src)
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["gfz", "affine", "zero", "broken-skew", "broken-jacobi", "broken-leibniz"]
    }
}

impl fmt::Display for Pva {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        writeln!(f, "generators {}", self.names.0.join(" "))?;
        if self.product == Product::Deformed {
            writeln!(f, "product deformed")?;
        }
        let l = ["l".to_string()];
        for i in 0..self.ngens() {
            for j in 0..self.ngens() {
                let h = &self.table[i][j];
                if !h.is_zero() {
                    let (a, b) = (&self.names.0[i], &self.names.0[j]);
                    writeln!(f, "{a} {b} : {}", h.fmt_with(&self.names, &l))?;
                }
            }
        }
        Ok(())
    }
}

fn monomial(n: usize, e: &[u32]) -> RatPoly {
    let mut m = RatPoly::zero(n);
    m.add_term(e.to_vec(), Rat::one());
    m
}

const GFZ: &str = "\
name gfz
generators u
u u : l
";

const AFFINE: &str = "\
name affine
generators h e
h h : l
h e : e
e h : -e
";

const ZERO: &str = "\
name zero
generators u
";

const BROKEN_SKEW: &str = "\
name broken-skew
generators u
u u : l^2
";

const BROKEN_JACOBI: &str = "\
name broken-jacobi
generators x y z
x y : z
y x : -z
y z : x
z y : -x
z x : x
x z : -x
";

const BROKEN_LEIBNIZ: &str = "\
name broken-leibniz
generators u
product deformed
u u : l
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_diffpoly;

    fn br(p: &Pva, a: &str, b: &str) -> VPoly {
        let a = parse_diffpoly(a, p.names()).unwrap();
        let b = parse_diffpoly(b, p.names()).unwrap();
        p.bracket(&a, &b).unwrap()
    }

    fn lam(p: &Pva, e: &str) -> VPoly {
        Expr::parse(e, p.names()).unwrap().eval(1, &[]).unwrap()
    }

    #[test]
    fn gfz_brackets() {
        let p = Pva::builtin("gfz").unwrap();
        assert_eq!(br(&p, "u", "u"), lam(&p, "l"));
        assert_eq!(br(&p, "u", "u'"), lam(&p, "l^2"));
        assert_eq!(br(&p, "u'", "u"), lam(&p, "-l^2"));
        assert_eq!(br(&p, "u", "u^2"), lam(&p, "2*u*l"));
    }

    #[test]
    fn undeclared_generator() {
        let p = Pva::builtin("gfz").unwrap();
        let v = DiffPoly::var(3, 0);
        assert!(matches!(p.bracket(&v, &v), Err(Error::Unbound(_))));
    }

    #[test]
    fn descriptor_round_trip() {
        for name in Pva::builtin_names() {
            let p = Pva::builtin(name).unwrap();
            let q = Pva::parse(&p.to_string()).unwrap();
            assert_eq!(p.to_string(), q.to_string());
        }
    }
}
