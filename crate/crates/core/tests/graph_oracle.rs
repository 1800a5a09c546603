use pvacl::graph::{enumerate_lines, reduce, GraphVector, RelationSpan};

#[test]
fn oracle_free_columns_are_the_lines() {
    for n in 1..=4 {
        let span = RelationSpan::build(n).unwrap();
        let lines: Vec<_> = enumerate_lines(n).iter().map(|l| l.to_digraph()).collect();
        assert_eq!(span.quotient_dim(), lines.len(), "n = {n}");
        let mut free = span.free_columns();
        free.sort();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(free, sorted, "n = {n}");
    }
}

#[test]
fn rewriting_agrees_with_oracle_on_every_graph() {
    for n in 1..=4 {
        let span = RelationSpan::build(n).unwrap();
        for g in pvacl::graph::all_digraphs(n) {
            let v = GraphVector::single(g.clone());
            assert_eq!(reduce(&v), span.reduce(&v).unwrap(), "graph {g}");
        }
    }
}
