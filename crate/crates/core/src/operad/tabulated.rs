//! Cochains given by one symbolic rule per line-basis graph.
//!
//! Descriptor format, one entry per line, `#` starts a comment:
//!
//! ```text
//! arity 2
//! generators u
//! 1>2   : s1*s2
//! 1 | 2 : S[u](s1)*S[u](s2)
//! ```
//!
//! Lines not listed evaluate to zero.

use std::collections::BTreeMap;

use super::Cochain;
use crate::algebra::{DiffPoly, Expr, GenNames, LambdaPoly};
use crate::error::{Error, Result};
use crate::graph::{Digraph, LineGraph};

#[derive(Clone, Debug)]
pub struct Tabulated {
    arity: usize,
    names: GenNames,
    rules: BTreeMap<Digraph, Expr>,
}

impl Tabulated {
    pub fn new(arity: usize, names: GenNames) -> Self {
        Tabulated {
            arity,
            names,
            rules: BTreeMap::new(),
        }
    }

    /// Sets the rule on a line. The rule must be multilinear in `s1..sn` and
    /// use only `l1..ln`.
    pub fn set(&mut self, line: &LineGraph, rule: Expr) -> Result<()> {
        if line.n() != self.arity {
            return Err(Error::Arity(format!(
                "{}-line in a cochain of arity {}",
                line.n(),
                self.arity
            )));
        }
        rule.check_multilinear(self.arity)?;
        if rule.lambda_count() > self.arity {
            return Err(Error::Unbound(format!("l{}", rule.lambda_count())));
        }
        self.rules.insert(line.to_digraph(), rule);
        Ok(())
    }

    pub fn set_str(&mut self, line: &str, rule: &str) -> Result<()> {
        let l: LineGraph = line.parse()?;
        let e = Expr::parse(rule, &self.names)?;
        self.set(&l, e)
    }

    pub fn names(&self) -> &GenNames {
        &self.names
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Digraph, &Expr)> {
        self.rules.iter()
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut arity = None;
        let mut names = GenNames::default();
        let mut entries = Vec::new();
        for raw in src.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(a) = line.strip_prefix("arity") {
                arity = Some(
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad arity '{}'", a.trim())))?,
                );
            } else if let Some(g) = line.strip_prefix("generators") {
                names = GenNames::new(g.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()));
            } else {
                let (l, r) = line
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected 'line : rule', got '{line}'")))?;
                entries.push((l.trim().to_string(), r.trim().to_string()));
            }
        }
        let arity = arity.ok_or_else(|| Error::Parse("missing 'arity' header".into()))?;
        LambdaPoly::checked_arity(arity)?;
        let mut t = Tabulated::new(arity, names);
        for (l, r) in entries {
            t.set_str(&l, &r)?;
        }
        Ok(t)
    }
}

impl Cochain for Tabulated {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval_line(&self, line: &Digraph, v: &[DiffPoly]) -> Result<LambdaPoly> {
        match self.rules.get(line) {
            Some(rule) => Ok(LambdaPoly::normalize(&rule.eval(self.arity, v)?)),
            None => Ok(LambdaPoly::zero(self.arity)),
        }
    }

    fn describe(&self) -> String {
        format!("table[{}; {} rules]", self.arity, self.rules.len())
    }
}
