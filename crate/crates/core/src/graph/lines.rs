//! The line basis and the rewriting reduction onto it.
//!
//! Rewriting uses two consequences of the cycle relations:
//!
//! * reversing an edge changes the sign, so any graph whose underlying
//!   undirected graph has a cycle can be reoriented into an oriented cycle
//!   and vanishes;
//! * for a vertex `v` with two outgoing edges `v→a`, `v→b`, the triangle
//!   relation gives `{v→a, v→b} ≡ {v→a→b} + {v→b→a}`.
//!
//! A forest is first oriented away from the minimum of each tree, then the
//! second rule is applied until every vertex has out-degree at most one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{Digraph, GraphVector};
use crate::algebra::{rat, Rat};
use crate::error::{Error, Result};
use crate::perm::{enumerate_monotone, Perm};

/// A disjoint union of directed paths, normalized: each path starts at its
/// smallest vertex, paths ordered by length then first vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineGraph {
    n: usize,
    components: Vec<Vec<usize>>,
}

impl LineGraph {
    /// Recognizes a graph that is already a normalized line.
    pub fn from_digraph(g: &Digraph) -> Option<LineGraph> {
        let n = g.n();
        let mut out_deg = vec![0; n];
        let mut in_deg = vec![0; n];
        let mut next = vec![usize::MAX; n];
        for &(a, b) in g.edges() {
            out_deg[a] += 1;
            in_deg[b] += 1;
            next[a] = b;
        }
        if out_deg.iter().chain(&in_deg).any(|&d| d > 1) || g.has_undirected_cycle() {
            return None;
        }
        let mut components = Vec::new();
        for start in (0..n).filter(|&v| in_deg[v] == 0) {
            let mut path = vec![start];
            while next[*path.last().unwrap()] != usize::MAX {
                path.push(next[*path.last().unwrap()]);
            }
            if path.iter().any(|&v| v < start) {
                return None;
            }
            components.push(path);
        }
        components.sort_by_key(|c| (c.len(), c[0]));
        Some(LineGraph { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::new(
            self.n,
            self.components
                .iter()
                .flat_map(|c| c.windows(2).map(|w| (w[0], w[1]))),
        )
        .expect("line components are valid paths")
    }

    /// For a connected line `σ(Λ_n)`, the permutation `σ` (with `σ(1) = 1`).
    pub fn as_permuted_standard(&self) -> Option<Perm> {
        if !self.is_connected() {
            return None;
        }
        // vertex i of the standard line is relabeled to path[i]
        Perm::from_images(self.components[0].clone()).ok()
    }
}

impl fmt::Display for LineGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(">")
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl FromStr for LineGraph {
    type Err = Error;

    /// Parses `"1>3>2 | 4"`; the vertex count is the number of vertices
    /// mentioned. Components may be given in any order.
    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for part in s.split('|') {
            let verts = part
                .split('>')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v > 0)
                        .map(|v| v - 1)
                        .ok_or_else(|| Error::Parse(format!("bad vertex '{}'", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            comps.push(verts);
        }
        let n = comps.iter().map(|c| c.len()).sum();
        let g = Digraph::new(n, comps.iter().flat_map(|c| c.windows(2).map(|w| (w[0], w[1]))))?;
        let mut seen = vec![false; n];
        for &v in comps.iter().flatten() {
            if v >= n || seen[v] {
                return Err(Error::Parse(format!("'{s}' does not use each of 1..{n} once")));
            }
            seen[v] = true;
        }
        LineGraph::from_digraph(&g)
            .ok_or_else(|| Error::Invalid(format!("'{s}' is not a normalized line")))
    }
}

/// All set partitions of `0..n`, blocks sorted, blocks ordered by minimum.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for v in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                q[i].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        out = next;
    }
    out
}

fn arrangements(rest: &[usize]) -> Vec<Vec<usize>> {
    if rest.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..rest.len() {
        let mut r = rest.to_vec();
        let x = r.remove(i);
        for mut tail in arrangements(&r) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// `𝓛(n)`, sorted.
pub fn enumerate_lines(n: usize) -> Vec<LineGraph> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        let per_block: Vec<Vec<Vec<usize>>> = partition
            .iter()
            .map(|b| {
                arrangements(&b[1..])
                    .into_iter()
                    .map(|mut t| {
                        t.insert(0, b[0]);
                        t
                    })
                    .collect()
            })
            .collect();
        let mut choices: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for options in &per_block {
            let mut next = Vec::new();
            for c in &choices {
                for o in options {
                    let mut c2 = c.clone();
                    c2.push(o.clone());
                    next.push(c2);
                }
            }
            choices = next;
        }
        for mut comps in choices {
            comps.sort_by_key(|c| (c.len(), c[0]));
            out.push(LineGraph { n, components: comps });
        }
    }
    out.sort();
    out
}

/// Orients each tree of a forest away from its smallest vertex. Returns the
/// oriented edge set and the sign from the reversals, or `None` if the
/// underlying undirected graph has a cycle.
fn orient_forest(g: &Digraph) -> Option<(Vec<(usize, usize)>, bool)> {
    if g.has_undirected_cycle() {
        return None;
    }
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        adj[a].push((b, true));
        adj[b].push((a, false));
    }
    let mut seen = vec![false; n];
    let mut edges = Vec::new();
    let mut negative = false;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(w, forward) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    edges.push((v, w));
                    negative ^= !forward;
                    stack.push(w);
                }
            }
        }
    }
    Some((edges, negative))
}

/// Reduces a single graph to line coordinates.
fn reduce_graph(g: &Digraph, out: &mut BTreeMap<Digraph, Rat>, coeff: &Rat) {
    let Some((edges, negative)) = orient_forest(g) else {
        return;
    };
    let n = g.n();
    let start = if negative { -coeff.clone() } else { coeff.clone() };
    let mut work: Vec<(Vec<usize>, Rat)> = {
        let mut parent = vec![usize::MAX; n];
        for (a, b) in edges {
            parent[b] = a;
        }
        vec![(parent, start)]
    };
    while let Some((parent, c)) = work.pop() {
        // find a vertex with two children
        let mut first_child = vec![usize::MAX; n];
        let mut cherry = None;
        for w in 0..n {
            let p = parent[w];
            if p == usize::MAX {
                continue;
            }
            if first_child[p] == usize::MAX {
                first_child[p] = w;
            } else {
                cherry = Some((first_child[p], w));
                break;
            }
        }
        match cherry {
            None => {
                let g = Digraph::new(
                    n,
                    (0..n).filter(|&w| parent[w] != usize::MAX).map(|w| (parent[w], w)),
                )
                .expect("tree edges are valid");
                let slot = out.entry(g).or_insert_with(Rat::zero);
                *slot += &c;
            }
            Some((a, b)) => {
                let mut p1 = parent.clone();
                p1[b] = a;
                let mut p2 = parent;
                p2[a] = b;
                work.push((p1, c.clone()));
                work.push((p2, c));
            }
        }
    }
}

/// Coordinates of `v` modulo the cycle relations, in the line basis.
pub fn reduce(v: &GraphVector) -> GraphVector {
    let mut acc = BTreeMap::new();
    for (g, c) in v.terms() {
        reduce_graph(g, &mut acc, c);
    }
    let mut out = GraphVector::zero(v.n());
    for (g, c) in acc {
        debug_assert!(LineGraph::from_digraph(&g).is_some());
        out.add_term(g, c);
    }
    out
}

/// The left side of the connected-lines identity: vertex 1 inserted at every
/// position of the path `2 → 3 → … → n`.
pub fn lemma_connected_lines(n: usize) -> GraphVector {
    let mut v = GraphVector::zero(n);
    let tail: Vec<usize> = (1..n).collect();
    for pos in 0..n {
        let mut path = tail.clone();
        path.insert(pos, 0);
        v.add_term(Digraph::path(n, &path).unwrap(), Rat::one());
    }
    v
}

/// `Λ_n + (-1)^k Σ_{π ∈ M_n^k} π(Λ_n)`.
pub fn lemma_monotone_lines(n: usize, k: usize) -> Result<GraphVector> {
    let line = Digraph::standard_line(n);
    let mut v = GraphVector::single(line.clone());
    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
    for pi in enumerate_monotone(n, k)? {
        v.add_term(line.act(pi.perm())?, sign.clone());
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Digraph {
        s.parse().unwrap()
    }

    #[test]
    fn line_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_lines(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 120, 720]);
        for n in 1..=6 {
            let connected = enumerate_lines(n).iter().filter(|l| l.is_connected()).count();
            assert_eq!(connected, (1..n).product::<usize>());
        }
    }

    #[test]
    fn three_lines_listed() {
        let ls: Vec<String> = enumerate_lines(3).iter().map(|l| l.to_string()).collect();
        for expected in ["1 | 2 | 3", "1 | 2>3", "2 | 1>3", "3 | 1>2", "1>2>3", "1>3>2"] {
            assert!(ls.contains(&expected.to_string()), "{expected} missing from {ls:?}");
        }
    }

    #[test]
    fn reversal_and_cycles() {
        let r = reduce(&GraphVector::single(g("n=2; edges: 2>1")));
        assert_eq!(r.coeff(&g("n=2; edges: 1>2")), rat(-1));
        assert!(reduce(&GraphVector::single(g("n=2; edges: 1>2, 2>1"))).is_zero());
        assert!(reduce(&GraphVector::single(g("n=3; edges: 1>2, 1>3, 2>3"))).is_zero());
    }

    #[test]
    fn triangle_relation_vanishes() {
        let v: GraphVector = "[n=3; edges: 1>2, 2>3] + [n=3; edges: 2>3, 3>1] + [n=3; edges: 3>1, 1>2]"
            .parse()
            .unwrap();
        assert!(reduce(&v).is_zero());
    }

    #[test]
    fn lemmas_vanish_small() {
        for n in 2..=5 {
            assert!(reduce(&lemma_connected_lines(n)).is_zero(), "n = {n}");
            for k in 2..=n {
                assert!(reduce(&lemma_monotone_lines(n, k).unwrap()).is_zero(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn line_parse() {
        let l: LineGraph = "1>3>2 | 4".parse().unwrap();
        assert_eq!(l.to_string(), "4 | 1>3>2");
        assert!("2>1".parse::<LineGraph>().is_err());
        assert_eq!(l.to_digraph(), g("n=4; edges: 1>3, 3>2"));
    }
}
