//! Plain-text and JSON exports of posets and complexes.

use std::fmt::Write;

use super::{Poset, SimplicialComplex};

/// One `lower upper` cover pair per line, preceded by the element count.
pub fn cover_edge_list(p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "# elements {}", p.len()).unwrap();
    for (x, y) in p.cover_edges() {
        writeln!(out, "{x} {y}").unwrap();
    }
    out
}

/// Provenance sidecar: one tag per element, in identifier order.
pub fn tags_json(p: &Poset) -> serde_json::Value {
    serde_json::to_value(p.tags()).expect("tags serialize")
}

/// Per-dimension simplex lists.
pub fn complex_json(k: &SimplicialComplex) -> serde_json::Value {
    let dims: Vec<Vec<&[u32]>> = (0..k.counts().len())
        .map(|d| k.simplices(d).collect())
        .collect();
    serde_json::json!({ "vertices": k.vertex_count(), "simplices": dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::order_complex;

    #[test]
    fn exports() {
        let p = Poset::from_plain_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(cover_edge_list(&p), "# elements 2\n0 1\n");
        assert_eq!(tags_json(&p)[1]["kind"], "plain");
        let k = order_complex(&p, 10).unwrap();
        assert_eq!(
            complex_json(&k)["simplices"][1][0],
            serde_json::json!([0, 1])
        );
        let e = order_complex(&Poset::antichain(0), 10).unwrap();
        assert_eq!(complex_json(&e)["simplices"], serde_json::json!([]));
    }
}
