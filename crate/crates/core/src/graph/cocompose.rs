//! Cocomposition `Δ^{m_1…m_n}(Γ) = (Δ_0, Δ_1, …, Δ_n)` and external
//! connectivity.

use std::collections::BTreeSet;

use super::Digraph;
use crate::error::{Error, Result};

/// An oriented graph that may carry parallel edges. Only produced as the
/// collapsed graph `Δ_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The simple graph, or `None` when two edges join the same pair of
    /// vertices (in either direction). Such a pair is a cycle.
    pub fn to_simple(&self) -> Option<Digraph> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.edges {
            if !seen.insert((a.min(b), a.max(b))) {
                return None;
            }
        }
        Some(Digraph::new(self.n, self.edges.iter().copied()).expect("collapsed edges are valid"))
    }
}

/// Where an edge of `Γ` lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeImage {
    /// Index into the edges of `Δ_0`.
    Outer(usize),
    /// Block `i` and the relabeled edge of `Δ_i`.
    Inner(usize, (usize, usize)),
}

#[derive(Clone, Debug)]
pub struct Cocomposition {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    block: Vec<usize>,
    pub outer: MultiDigraph,
    pub inner: Vec<Digraph>,
    /// `(edge of Γ, image)` in the order of `Γ`'s edges.
    pub edge_map: Vec<((usize, usize), EdgeImage)>,
}

impl Cocomposition {
    pub fn new(g: &Digraph, sizes: &[usize]) -> Result<Self> {
        let total: usize = sizes.iter().sum();
        if total != g.n() || sizes.contains(&0) {
            return Err(Error::Arity(format!(
                "block sizes {sizes:?} do not split {} vertices into nonempty blocks",
                g.n()
            )));
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut block = Vec::with_capacity(total);
        let mut acc = 0;
        for (i, &m) in sizes.iter().enumerate() {
            offsets.push(acc);
            block.extend(std::iter::repeat(i).take(m));
            acc += m;
        }
        let mut outer = Vec::new();
        let mut inner_edges = vec![Vec::new(); sizes.len()];
        let mut edge_map = Vec::new();
        for &(a, b) in g.edges() {
            let (ba, bb) = (block[a], block[b]);
            let image = if ba == bb {
                let e = (a - offsets[ba], b - offsets[ba]);
                inner_edges[ba].push(e);
                EdgeImage::Inner(ba, e)
            } else {
                outer.push((ba, bb));
                EdgeImage::Outer(outer.len() - 1)
            };
            edge_map.push(((a, b), image));
        }
        let inner = inner_edges
            .into_iter()
            .zip(sizes)
            .map(|(es, &m)| Digraph::new(m, es))
            .collect::<Result<Vec<_>>>()?;
        Ok(Cocomposition {
            sizes: sizes.to_vec(),
            offsets,
            block,
            outer: MultiDigraph {
                n: sizes.len(),
                edges: outer,
            },
            inner,
            edge_map,
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// The block containing vertex `k` of `Γ`.
    pub fn block_of(&self, k: usize) -> usize {
        self.block[k]
    }

    /// The blocks `j` externally connected to vertex `k` (all 0-based): `j`
    /// is reached from `block(k)` by an unoriented trail in `Δ_0` whose first
    /// edge is the image of an edge of `Γ` at `k`.
    pub fn externally_connected(&self, k: usize) -> Result<BTreeSet<usize>> {
        if k >= self.block.len() {
            return Err(Error::Range(format!(
                "vertex {} of a {}-graph",
                k + 1,
                self.block.len()
            )));
        }
        let start = self.block[k];
        let edges = &self.outer.edges;
        let mut reached = BTreeSet::new();
        let mut used = vec![false; edges.len()];
        for ((a, b), image) in &self.edge_map {
            if let EdgeImage::Outer(e) = image {
                if *a == k || *b == k {
                    used[*e] = true;
                    let other = far_end(edges[*e], start);
                    trails(edges, other, &mut used, &mut reached);
                    used[*e] = false;
                }
            }
        }
        Ok(reached)
    }
}

fn far_end((a, b): (usize, usize), v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

fn trails(edges: &[(usize, usize)], v: usize, used: &mut [bool], reached: &mut BTreeSet<usize>) {
    reached.insert(v);
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        if !used[i] && (a == v || b == v) {
            used[i] = true;
            trails(edges, far_end((a, b), v), used, reached);
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Cocomposition {
        let g: Digraph = "n=8; edges: 1>2, 1>3, 2>4, 2>5, 2>6, 7>8".parse().unwrap();
        Cocomposition::new(&g, &[3, 1, 4]).unwrap()
    }

    #[test]
    fn worked_example_blocks() {
        let c = example();
        assert_eq!(c.inner[0], "n=3; edges: 1>2, 1>3".parse().unwrap());
        assert_eq!(c.inner[1], Digraph::empty(1));
        assert_eq!(c.inner[2], "n=4; edges: 3>4".parse().unwrap());
        assert_eq!(c.outer.edges(), &[(0, 1), (0, 2), (0, 2)]);
        assert!(c.outer.to_simple().is_none());
    }

    #[test]
    fn worked_example_connectivity() {
        let c = example();
        let x: Vec<Vec<usize>> = (0..8)
            .map(|k| c.externally_connected(k).unwrap().into_iter().map(|j| j + 1).collect())
            .collect();
        assert_eq!(
            x,
            vec![
                vec![],
                vec![1, 2, 3],
                vec![],
                vec![1, 3],
                vec![1, 2, 3],
                vec![1, 2, 3],
                vec![],
                vec![]
            ]
        );
        assert!(c.externally_connected(8).is_err());
    }

    #[test]
    fn trivial_blocks() {
        let g: Digraph = "n=3; edges: 1>2, 3>2".parse().unwrap();
        let c = Cocomposition::new(&g, &[1, 1, 1]).unwrap();
        assert_eq!(c.outer.to_simple().unwrap(), g);
        let c = Cocomposition::new(&g, &[3]).unwrap();
        assert_eq!(c.inner[0], g);
        assert!(c.outer.edges().is_empty());
        assert!(Cocomposition::new(&g, &[2, 2]).is_err());
    }
}
