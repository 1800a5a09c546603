//! Labeled oriented `n`-graphs without tadpoles, the `S_n` action, the cycle
//! relations and the line basis of the quotient, and cocomposition.

mod cocompose;
mod lines;
mod relations;
mod vector;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub use cocompose::{Cocomposition, EdgeImage, MultiDigraph};
pub use lines::{enumerate_lines, lemma_connected_lines, lemma_monotone_lines, reduce, LineGraph};
pub use relations::{all_digraphs, RelationSpan, MAX_ORACLE_ARITY};
pub use vector::GraphVector;

/// An oriented graph on vertices `0..n` (printed 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// From 0-based edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::empty(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Range(format!("edge {}>{} on {n} vertices", a + 1, b + 1)));
            }
            if a == b {
                return Err(Error::Invalid(format!("tadpole at vertex {}", a + 1)));
            }
            g.edges.insert((a, b));
        }
        Ok(g)
    }

    /// The standard line `1 → 2 → … → n`.
    pub fn standard_line(n: usize) -> Self {
        Digraph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    /// The path visiting `vertices` (0-based) in order.
    pub fn path(n: usize, vertices: &[usize]) -> Result<Self> {
        Digraph::new(n, vertices.windows(2).map(|w| (w[0], w[1])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn without_edge(&self, e: (usize, usize)) -> Digraph {
        let mut g = self.clone();
        g.edges.remove(&e);
        g
    }

    pub fn with_edge(&self, e: (usize, usize)) -> Digraph {
        let mut g = self.clone();
        g.edges.insert(e);
        g
    }

    /// `σ(Γ)`: the vertex labeled `i` is relabeled `σ(i)`.
    pub fn act(&self, sigma: &Perm) -> Result<Digraph> {
        if sigma.len() != self.n {
            return Err(Error::Arity(format!(
                "permutation of {} acting on a {}-graph",
                sigma.len(),
                self.n
            )));
        }
        Ok(Digraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (sigma.apply(a), sigma.apply(b)))
                .collect(),
        })
    }

    /// Undirected connected components, each sorted, ordered by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[r]].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when the underlying undirected multigraph has a cycle
    /// (a pair `i→j`, `j→i` counts).
    pub fn has_undirected_cycle(&self) -> bool {
        self.edges.len() + self.components().len() > self.n
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n];
        for &(_, b) in &self.edges {
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(a, b) in self.edges.range((v, 0)..(v + 1, 0)) {
                debug_assert_eq!(a, v);
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
        seen == self.n
    }

    /// Every oriented cycle, as its edge set. Each cycle is reported once,
    /// starting from its smallest vertex.
    pub fn oriented_cycles(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for s in 0..self.n {
            let mut path = vec![s];
            self.extend_cycles(s, &mut path, &mut out);
        }
        out
    }

    fn extend_cycles(&self, s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) {
        let v = *path.last().unwrap();
        for &(_, w) in self.edges.range((v, 0)..(v + 1, 0)) {
            if w == s {
                let mut cyc: Vec<(usize, usize)> = path.windows(2).map(|p| (p[0], p[1])).collect();
                cyc.push((v, s));
                out.push(cyc);
            } else if w > s && !path.contains(&w) {
                path.push(w);
                self.extend_cycles(s, path, out);
                path.pop();
            }
        }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self
            .edges
            .iter()
            .map(|(a, b)| format!("{}>{}", a + 1, b + 1))
            .collect();
        if es.is_empty() {
            write!(f, "n={}; edges:", self.n)
        } else {
            write!(f, "n={}; edges: {}", self.n, es.join(", "))
        }
    }
}

impl FromStr for Digraph {
    type Err = Error;

    /// Parses `"n=4; edges: 1>2, 2>3"`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected 'n=<count>; edges: a>b, ...', got '{s}'"));
        let (head, tail) = match s.split_once(';') {
            Some((h, t)) => (h, t),
            None => (s.as_str(), ""),
        };
        let n: usize = head
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let list = if tail.is_empty() {
            ""
        } else {
            tail.strip_prefix("edges:").ok_or_else(bad)?
        };
        let mut edges = Vec::new();
        for item in list.split(',').filter(|t| !t.is_empty()) {
            let (a, b) = item.split_once('>').ok_or_else(bad)?;
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            if a == 0 || b == 0 {
                return Err(Error::Parse("vertices are numbered from 1".into()));
            }
            edges.push((a - 1, b - 1));
        }
        Digraph::new(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Digraph {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x = g("n=4; edges: 2>3, 1 > 2");
        assert_eq!(x.to_string(), "n=4; edges: 1>2, 2>3");
        assert_eq!(g("n=3; edges:").num_edges(), 0);
        assert_eq!(g("n=3").num_edges(), 0);
        assert!("n=2; edges: 1>1".parse::<Digraph>().is_err());
        assert!("n=2; edges: 1>3".parse::<Digraph>().is_err());
        assert!("edges: 1>2".parse::<Digraph>().is_err());
    }

    #[test]
    fn action_relabels() {
        let s: Perm = "[2 1]".parse().unwrap();
        assert_eq!(g("n=2; edges: 1>2").act(&s).unwrap(), g("n=2; edges: 2>1"));
        assert!(g("n=3").act(&s).is_err());
    }

    #[test]
    fn cycles() {
        assert!(Digraph::standard_line(5).is_acyclic());
        let two = g("n=2; edges: 1>2, 2>1");
        assert!(!two.is_acyclic());
        assert_eq!(two.oriented_cycles(), vec![vec![(0, 1), (1, 0)]]);
        let tri = g("n=3; edges: 1>2, 2>3, 3>1");
        assert_eq!(tri.oriented_cycles().len(), 1);
        assert_eq!(tri.oriented_cycles()[0].len(), 3);
        let undirected = g("n=3; edges: 1>2, 1>3, 2>3");
        assert!(undirected.is_acyclic());
        assert!(undirected.has_undirected_cycle());
        assert!(undirected.oriented_cycles().is_empty());
    }

    #[test]
    fn components_are_sorted() {
        let x = g("n=5; edges: 4>2, 3>5");
        assert_eq!(x.components(), vec![vec![0], vec![1, 3], vec![2, 4]]);
        assert!(!x.is_connected());
    }
}
