//! Chordality via maximum cardinality search and the perfect elimination
//! ordering check.

use crate::graph::{Graph, VertexSet};

/// True iff the graph has a perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    // maximum cardinality search; ties by lowest id
    let mut weight = vec![0usize; n];
    let mut remaining = VertexSet::full(n);
    let mut mcs_order = Vec::with_capacity(n);
    let mut position = vec![0usize; n];
    for i in 0..n {
        let v = remaining
            .iter()
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .expect("nonempty");
        mcs_order.push(v);
        position[v] = i;
        remaining.remove(v);
        for u in g.neighbors(v).intersection(&remaining).iter() {
            weight[u] += 1;
        }
    }
    // elimination order = reverse MCS; for each vertex, earlier-MCS neighbors
    // must form a clique with their max-position member as witness
    for &v in mcs_order.iter().rev() {
        let mut earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&u| position[u] < position[v])
            .collect();
        if earlier.len() <= 1 {
            continue;
        }
        earlier.sort_by_key(|&u| position[u]);
        let witness = *earlier.last().unwrap();
        for &u in &earlier[..earlier.len() - 1] {
            if !g.adjacent(u, witness) {
                return false;
            }
        }
    }
    true
}
