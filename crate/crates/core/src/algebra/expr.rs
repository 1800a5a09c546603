//! A small expression language for elements of `V`, `V[λ]` and multilinear
//! rules in input slots.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := number ('/' number)? | '(' expr ')' | S[gen](expr) | name primes
//! ```
//!
//! Names: `l1, l2, …` (also `l` for `l1`) are λ-variables, `s1, s2, …` are
//! input slots, anything else is a generator looked up in [`GenNames`].
//! A derivative order is written with primes (`u''`) or brackets (`u[3]`).
//! `S[u](e)` is the symbol operator `Σ_m (-λ_B-∂)^m ∂e/∂u^(m)` where `λ_B`
//! sums the λ's of the slots occurring in `e`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::diffpoly::{DiffPoly, GenNames, Var};
use super::poly::VPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    Gen(Var),
    Lambda(usize),
    Slot { slot: usize, order: u32 },
    Symbol { gen: u16, inner: Box<Expr> },
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a GenNames,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse(e.to_string()))
    }

    fn small_int(&mut self) -> Result<u32> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse("integer too large".into()))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(Expr::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Add(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let neg = self.eat('-');
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        let e = if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Mul(factors)
        };
        Ok(if neg { Expr::Neg(Box::new(e)) } else { e })
    }

    fn factor(&mut self) -> Result<Expr> {
        let a = self.atom()?;
        if self.eat('^') {
            let k = self.small_int()?;
            Ok(Expr::Pow(Box::new(a), k))
        } else {
            Ok(a)
        }
    }

    fn name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn order_suffix(&mut self) -> Result<u32> {
        let mut order = 0;
        while self.pos < self.chars.len() && self.chars[self.pos] == '\'' {
            order += 1;
            self.pos += 1;
        }
        if order == 0 && self.pos < self.chars.len() && self.chars[self.pos] == '[' {
            self.pos += 1;
            order = self.small_int()?;
            self.expect(']')?;
        }
        Ok(order)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.eat('/') {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    Ok(Expr::Num(Rat::new(n, d)))
                } else {
                    Ok(Expr::Num(Rat::from_integer(n)))
                }
            }
            Some(c) if c.is_alphabetic() || c == 'λ' => {
                let name = self.name();
                if name == "S" && self.peek() == Some('[') {
                    self.pos += 1;
                    let g = self.name();
                    let gen = self
                        .names
                        .lookup(&g)
                        .ok_or_else(|| Error::Unbound(format!("generator '{g}'")))?;
                    self.expect(']')?;
                    self.expect('(')?;
                    let inner = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::Symbol {
                        gen,
                        inner: Box::new(inner),
                    });
                }
                let order = self.order_suffix()?;
                if let Some(k) = indexed(&name, &["l", "λ"]) {
                    if order > 0 {
                        return self.err("λ-variables take no derivatives");
                    }
                    return Ok(Expr::Lambda(k));
                }
                if let Some(k) = indexed(&name, &["s"]) {
                    return Ok(Expr::Slot { slot: k, order });
                }
                match self.names.lookup(&name) {
                    Some(gen) => Ok(Expr::Gen(Var::new(gen, order))),
                    None => Err(Error::Unbound(format!("name '{name}'"))),
                }
            }
            Some(c) => self.err(&format!("unexpected character '{c}'")),
        }
    }
}

/// `l` → 0, `l3` → 2, otherwise `None`.
fn indexed(name: &str, prefixes: &[&str]) -> Option<usize> {
    for p in prefixes {
        if let Some(rest) = name.strip_prefix(p) {
            if rest.is_empty() && *p != "s" {
                return Some(0);
            }
            if let Ok(k) = rest.parse::<usize>() {
                if k >= 1 {
                    return Some(k - 1);
                }
            }
        }
    }
    None
}

impl Expr {
    pub fn parse(src: &str, names: &GenNames) -> Result<Expr> {
        let mut p = Parser {
            chars: src.chars().collect(),
            pos: 0,
            names,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }

    /// Largest λ index used plus one.
    pub fn lambda_count(&self) -> usize {
        let mut m = 0;
        self.visit(&mut |e| {
            if let Expr::Lambda(k) = e {
                m = m.max(k + 1);
            }
        });
        m
    }

    /// Largest slot index used plus one.
    pub fn slot_count(&self) -> usize {
        let mut m = 0;
        self.visit(&mut |e| {
            if let Expr::Slot { slot, .. } = e {
                m = m.max(slot + 1);
            }
        });
        m
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Symbol { inner, .. } | Expr::Neg(inner) | Expr::Pow(inner, _) => inner.visit(f),
            Expr::Add(v) | Expr::Mul(v) => v.iter().for_each(|e| e.visit(f)),
            _ => {}
        }
    }

    fn slots(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        self.visit(&mut |e| {
            if let Expr::Slot { slot, .. } = e {
                s.insert(*slot);
            }
        });
        s
    }

    /// The set of slot-degree vectors of the additive terms.
    fn degree_profile(&self, n: usize) -> BTreeSet<Vec<u32>> {
        let zero = || BTreeSet::from([vec![0; n]]);
        match self {
            Expr::Num(_) | Expr::Gen(_) | Expr::Lambda(_) => zero(),
            Expr::Slot { slot, .. } => {
                let mut v = vec![0; n];
                v[*slot] = 1;
                BTreeSet::from([v])
            }
            Expr::Symbol { inner, .. } | Expr::Neg(inner) => inner.degree_profile(n),
            Expr::Add(v) => v.iter().flat_map(|e| e.degree_profile(n)).collect(),
            Expr::Mul(v) => v.iter().fold(zero(), |acc, e| product(&acc, &e.degree_profile(n))),
            Expr::Pow(e, k) => {
                let p = e.degree_profile(n);
                (0..*k).fold(zero(), |acc, _| product(&acc, &p))
            }
        }
    }

    /// Checks that every additive term uses each of the `n` slots exactly once.
    pub fn check_multilinear(&self, n: usize) -> Result<()> {
        if self.slot_count() > n {
            return Err(Error::Arity(format!(
                "rule uses slot s{} but arity is {n}",
                self.slot_count()
            )));
        }
        let profile = self.degree_profile(n);
        let ones = vec![1; n];
        if profile.iter().all(|p| *p == ones) {
            Ok(())
        } else {
            Err(Error::Invalid(
                "rule is not multilinear in its slots".into(),
            ))
        }
    }

    /// Evaluates an expression free of λ's and slots.
    pub fn to_diffpoly(&self) -> Result<DiffPoly> {
        let v = self.eval(0, &[])?;
        v.as_scalar()
            .ok_or_else(|| Error::Invalid("expected an element of V".into()))
    }

    /// Evaluates to a polynomial in `nvars` λ-variables, slots bound to
    /// `slots`.
    pub fn eval(&self, nvars: usize, slots: &[DiffPoly]) -> Result<VPoly> {
        Ok(match self {
            Expr::Num(r) => VPoly::constant(nvars, DiffPoly::constant(r.clone())),
            Expr::Gen(v) => VPoly::constant(nvars, DiffPoly::var(v.gen, v.order)),
            Expr::Lambda(k) => {
                if *k >= nvars {
                    return Err(Error::Unbound(format!("l{}", k + 1)));
                }
                VPoly::var(nvars, *k)
            }
            Expr::Slot { slot, order } => {
                let v = slots
                    .get(*slot)
                    .ok_or_else(|| Error::Unbound(format!("s{}", slot + 1)))?;
                VPoly::constant(nvars, v.derive_n(*order))
            }
            Expr::Symbol { gen, inner } => {
                let p = inner.eval(nvars, slots)?.as_scalar().ok_or_else(|| {
                    Error::Invalid("symbol operator needs a λ-free argument".into())
                })?;
                let mut shift = vec![Rat::zero(); nvars];
                for s in inner.slots() {
                    if s >= nvars {
                        return Err(Error::Unbound(format!("l{}", s + 1)));
                    }
                    shift[s] = Rat::one();
                }
                symbol(&p, *gen, &shift, nvars)
            }
            Expr::Add(v) => {
                let mut acc = VPoly::zero(nvars);
                for e in v {
                    acc.add_assign(&e.eval(nvars, slots)?);
                }
                acc
            }
            Expr::Mul(v) => {
                let mut acc = VPoly::one(nvars);
                for e in v {
                    acc = acc.mul(&e.eval(nvars, slots)?);
                }
                acc
            }
            Expr::Neg(e) => e.eval(nvars, slots)?.neg(),
            Expr::Pow(e, k) => e.eval(nvars, slots)?.pow(*k, DiffPoly::one()),
        })
    }
}

fn product(a: &BTreeSet<Vec<u32>>, b: &BTreeSet<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            out.insert(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    out
}

/// `Σ_m (-μ-∂)^m ∂p/∂u_gen^(m)` with `μ = shift · λ`.
pub fn symbol(p: &DiffPoly, gen: u16, shift: &[Rat], nvars: usize) -> VPoly {
    let max_order = p
        .vars()
        .iter()
        .filter(|v| v.gen == gen)
        .map(|v| v.order)
        .max();
    let mut out = VPoly::zero(nvars);
    let Some(max_order) = max_order else {
        return out;
    };
    for m in 0..=max_order {
        let dp = p.partial(Var::new(gen, m));
        if dp.is_zero() {
            continue;
        }
        let t = VPoly::from_diffpoly(nvars, dp).apply_shifted_d_power(shift, m);
        let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
        out.add_scaled(&sign, &t);
    }
    out
}

/// Parses an element of `V`.
pub fn parse_diffpoly(src: &str, names: &GenNames) -> Result<DiffPoly> {
    Expr::parse(src, names)?.to_diffpoly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn names() -> GenNames {
        GenNames::default()
    }

    #[test]
    fn parses_and_prints_diffpoly() {
        let p = parse_diffpoly("3*u*u'' - u'", &names()).unwrap();
        assert_eq!(p.to_string(), "3*u*u'' - u'");
        let q = parse_diffpoly("(u + 1)^2 - 2*u - 1", &names()).unwrap();
        assert_eq!(q, DiffPoly::var(0, 0).pow(2));
        let r = parse_diffpoly("u[4]/2", &names());
        assert!(r.is_err());
        let r = parse_diffpoly("1/2*u[4]", &names()).unwrap();
        assert_eq!(r, DiffPoly::var(0, 4).scale(&crate::algebra::rat::ratio(1, 2)));
    }

    #[test]
    fn unknown_names_are_unbound() {
        assert!(matches!(
            parse_diffpoly("w + 1", &names()),
            Err(Error::Unbound(_))
        ));
    }

    #[test]
    fn multilinearity_check() {
        let n = names();
        assert!(Expr::parse("s1*s2' + l1*s1'*s2", &n)
            .unwrap()
            .check_multilinear(2)
            .is_ok());
        assert!(Expr::parse("s1*s1", &n).unwrap().check_multilinear(1).is_err());
        assert!(Expr::parse("s1 + s2", &n).unwrap().check_multilinear(2).is_err());
        assert!(Expr::parse("u*s1 + s1'", &n).unwrap().check_multilinear(1).is_ok());
    }

    #[test]
    fn slot_evaluation_derives_inputs() {
        let n = names();
        let e = Expr::parse("s1'*s2 + l1*s1*s2", &n).unwrap();
        let u = DiffPoly::var(0, 0);
        let v = e.eval(2, &[u.clone(), u.clone()]).unwrap();
        let mut expected = VPoly::zero(2);
        expected.add_term(vec![0, 0], &DiffPoly::var(0, 1) * &u);
        expected.add_term(vec![1, 0], &u * &u);
        assert_eq!(v, expected);
    }

    #[test]
    fn symbol_is_sesquilinear() {
        // S(∂p) = -μ S(p)
        let p = parse_diffpoly("u*u'^2 + u''", &names()).unwrap();
        let shift = vec![rat(1)];
        let lhs = symbol(&p.derive(), 0, &shift, 1);
        let rhs = symbol(&p, 0, &shift, 1).mul(&VPoly::var(1, 0)).neg();
        assert_eq!(lhs, rhs);
    }
}
