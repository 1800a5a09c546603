use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::Digraph;
use crate::algebra::{rat, Rat};
use crate::algebra::rat::fmt_rat;
use crate::error::{Error, Result};

/// A formal rational combination of `n`-graphs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GraphVector {
    n: usize,
    terms: BTreeMap<Digraph, Rat>,
}

impl GraphVector {
    pub fn zero(n: usize) -> Self {
        GraphVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(g: Digraph) -> Self {
        let mut v = GraphVector::zero(g.n());
        v.add_term(g, Rat::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Digraph, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &Digraph) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, g: Digraph, c: Rat) {
        assert_eq!(g.n(), self.n, "graph arity mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &GraphVector) {
        for (g, d) in &other.terms {
            self.add_term(g.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Rat) -> GraphVector {
        let mut out = GraphVector::zero(self.n);
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &GraphVector) -> GraphVector {
        let mut out = self.clone();
        out.add_scaled(&rat(-1), other);
        out
    }

    pub fn act(&self, sigma: &crate::perm::Perm) -> Result<GraphVector> {
        let mut out = GraphVector::zero(self.n);
        for (g, c) in &self.terms {
            out.add_term(g.act(sigma)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for GraphVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{} ", fmt_rat(&a))?;
            }
            write!(f, "[{g}]")?;
        }
        Ok(())
    }
}

impl FromStr for GraphVector {
    type Err = Error;

    /// Parses `"[n=2; edges: 1>2] - 3/2 [n=2; edges: 2>1]"`. A bare graph
    /// literal is accepted as a vector with coefficient 1.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if !t.contains('[') {
            return Ok(GraphVector::single(t.parse()?));
        }
        let mut out: Option<GraphVector> = None;
        let mut rest = t;
        while !rest.trim().is_empty() {
            let open = rest
                .find('[')
                .ok_or_else(|| Error::Parse(format!("expected '[' in '{rest}'")))?;
            let close = rest[open..]
                .find(']')
                .map(|c| c + open)
                .ok_or_else(|| Error::Parse("unclosed '['".into()))?;
            let coeff = parse_coeff(&rest[..open], out.is_none())?;
            let g: Digraph = rest[open + 1..close].parse()?;
            let v = out.get_or_insert_with(|| GraphVector::zero(g.n()));
            if g.n() != v.n {
                return Err(Error::Arity("graphs of different sizes in one vector".into()));
            }
            v.add_term(g, coeff);
            rest = &rest[close + 1..];
        }
        out.ok_or_else(|| Error::Parse("empty graph vector".into()))
    }
}

fn parse_coeff(s: &str, first: bool) -> Result<Rat> {
    let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let (neg, body) = if let Some(b) = s.strip_prefix('-') {
        (true, b)
    } else if let Some(b) = s.strip_prefix('+') {
        (false, b)
    } else if first {
        (false, s.as_str())
    } else {
        return Err(Error::Parse(format!("missing sign before '{s}'")));
    };
    let c = if body.is_empty() {
        Rat::one()
    } else {
        body.parse::<Rat>()
            .map_err(|_| Error::Parse(format!("bad coefficient '{body}'")))?
    };
    Ok(if neg { -c } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn parse_round_trip() {
        let v: GraphVector = "[n=2; edges: 1>2] - 3/2 [n=2; edges: 2>1]".parse().unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.coeff(&"n=2; edges: 2>1".parse().unwrap()), ratio(-3, 2));
        let again: GraphVector = v.to_string().parse().unwrap();
        assert_eq!(again, v);
        let bare: GraphVector = "n=2; edges: 2>1".parse().unwrap();
        assert_eq!(bare.len(), 1);
    }

    #[test]
    fn cancellation_removes_terms() {
        let v: GraphVector = "[n=2] - [n=2]".parse().unwrap();
        assert!(v.is_zero());
        assert!("[n=2] [n=3]".parse::<GraphVector>().is_err());
    }
}
