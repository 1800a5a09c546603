//! Brute-force span of the cycle relations, used as an oracle for the
//! rewriting reduction.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use super::{enumerate_lines, Digraph, GraphVector};
use crate::algebra::Rat;
use crate::error::{Error, Result};

/// Largest arity for which the full graph set is enumerated.
pub const MAX_ORACLE_ARITY: usize = 4;

/// Every graph in `𝒢(n)`: each unordered pair carries no edge, one of the two
/// orientations, or both.
pub fn all_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let total = 4usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut edges = Vec::new();
            for &(a, b) in &pairs {
                let s = code % 4;
                code /= 4;
                if s & 1 != 0 {
                    edges.push((a, b));
                }
                if s & 2 != 0 {
                    edges.push((b, a));
                }
            }
            Digraph::new(n, edges).expect("pairs are valid")
        })
        .collect()
}

type Row = BTreeMap<usize, Rat>;

/// `R(n)` in row-echelon form over the acyclic graphs. Graphs with an oriented
/// cycle are relations on their own and are counted separately.
#[derive(Clone, Debug)]
pub struct RelationSpan {
    n: usize,
    total: usize,
    cyclic: usize,
    columns: Vec<Digraph>,
    index: HashMap<Digraph, usize>,
    pivots: BTreeMap<usize, Row>,
}

impl RelationSpan {
    /// Columns are ordered with every non-line graph before every line, so
    /// that the non-pivot columns are the lines whenever the lines form a
    /// basis of the quotient.
    pub fn build(n: usize) -> Result<Self> {
        if n > MAX_ORACLE_ARITY {
            return Err(Error::Unsupported(format!(
                "relation span is enumerated only for n ≤ {MAX_ORACLE_ARITY}"
            )));
        }
        let graphs = all_digraphs(n);
        let lines: BTreeSet<Digraph> = enumerate_lines(n).iter().map(|l| l.to_digraph()).collect();
        let (acyclic, cyclic): (Vec<&Digraph>, Vec<&Digraph>) =
            graphs.iter().partition(|g| g.is_acyclic());
        let mut columns: Vec<Digraph> = acyclic
            .iter()
            .filter(|g| !lines.contains(*g))
            .map(|g| (*g).clone())
            .collect();
        columns.extend(lines.iter().cloned());
        let index: HashMap<Digraph, usize> =
            columns.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();

        let mut rows: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
        for g in &cyclic {
            for cycle in g.oriented_cycles() {
                let mut row: BTreeMap<usize, i64> = BTreeMap::new();
                for e in &cycle {
                    if let Some(&c) = index.get(&g.without_edge(*e)) {
                        *row.entry(c).or_insert(0) += 1;
                    }
                }
                let row: Vec<(usize, i64)> = row.into_iter().filter(|(_, c)| *c != 0).collect();
                if !row.is_empty() {
                    rows.insert(row);
                }
            }
        }
        let mut span = RelationSpan {
            n,
            total: graphs.len(),
            cyclic: cyclic.len(),
            columns,
            index,
            pivots: BTreeMap::new(),
        };
        for r in rows {
            let row: Row = r.into_iter().map(|(c, k)| (c, Rat::from_integer(k.into()))).collect();
            span.insert(row);
        }
        Ok(span)
    }

    fn insert(&mut self, mut row: Row) {
        while let Some((&lead, _)) = row.iter().next() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = row[&lead].clone();
                    subtract(&mut row, &c, p);
                }
                None => {
                    let inv = Rat::from_integer(1.into()) / row[&lead].clone();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|𝒢(n)|`.
    pub fn total_graphs(&self) -> usize {
        self.total
    }

    pub fn acyclic_graphs(&self) -> usize {
        self.columns.len()
    }

    /// Rank of `R(n)` inside `F𝒢(n)`.
    pub fn rank(&self) -> usize {
        self.cyclic + self.pivots.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.total - self.rank()
    }

    /// Graphs whose columns carry no pivot.
    pub fn free_columns(&self) -> Vec<Digraph> {
        (0..self.columns.len())
            .filter(|c| !self.pivots.contains_key(c))
            .map(|c| self.columns[c].clone())
            .collect()
    }

    /// Normal form of `v` modulo `R(n)`, supported on the free columns.
    pub fn reduce(&self, v: &GraphVector) -> Result<GraphVector> {
        if v.n() != self.n {
            return Err(Error::Arity(format!("{}-graphs reduced in R({})", v.n(), self.n)));
        }
        let mut row: Row = BTreeMap::new();
        for (g, c) in v.terms() {
            if let Some(&i) = self.index.get(g) {
                let slot = row.entry(i).or_insert_with(Rat::zero);
                *slot += c;
            }
        }
        row.retain(|_, c| !c.is_zero());
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .map(|(&k, _)| k)
                .find(|k| self.pivots.contains_key(k));
            let Some(col) = next else { break };
            let c = row[&col].clone();
            subtract(&mut row, &c, &self.pivots[&col]);
            cursor = col + 1;
        }
        let mut out = GraphVector::zero(self.n);
        for (i, c) in row {
            out.add_term(self.columns[i].clone(), c);
        }
        Ok(out)
    }
}

fn subtract(row: &mut Row, c: &Rat, pivot: &Row) {
    for (k, v) in pivot {
        let slot = row.entry(*k).or_insert_with(Rat::zero);
        *slot -= c * v;
        if slot.is_zero() {
            row.remove(k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(all_digraphs(2).len(), 4);
        let dags = all_digraphs(3).into_iter().filter(|g| g.is_acyclic()).count();
        assert_eq!(dags, 25);
    }

    #[test]
    fn small_quotient_dimensions() {
        for (n, dim) in [(1, 1), (2, 2), (3, 6)] {
            let span = RelationSpan::build(n).unwrap();
            assert_eq!(span.quotient_dim(), dim);
        }
        assert!(RelationSpan::build(5).is_err());
    }
}
