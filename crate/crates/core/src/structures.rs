//! The structural objects of the decomposition: covers, multicovers, ticks,
//! impressions, and h-cables with axioms (C1)-(C5), each with a verifier that
//! returns a structured verdict naming the violated clause and a witness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Ok,
    Violation(Violation),
}

impl Verdict {
    pub fn fail(clause: &str, witness: &[usize]) -> Verdict {
        Verdict::Violation(Violation {
            clause: clause.to_string(),
            witness: witness.to_vec(),
        })
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn clause(&self) -> Option<&str> {
        match self {
            Verdict::Ok => None,
            Verdict::Violation(v) => Some(&v.clause),
        }
    }
}

macro_rules! check {
    ($cond:expr, $clause:expr, $witness:expr) => {
        if !$cond {
            return Verdict::fail($clause, $witness);
        }
    };
}

/// A cover (x, N) of C: N is a set of neighbours of x, C is disjoint from
/// N and x, x is anticomplete to C, and N covers C.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub x: usize,
    pub n_set: VertexSet,
    pub c: VertexSet,
}

pub fn verify_cover(g: &Graph, cover: &Cover) -> Verdict {
    let x = cover.x;
    if x >= g.n() {
        return Verdict::fail("cover/x-out-of-range", &[x]);
    }
    for v in cover.n_set.iter() {
        check!(g.adjacent(x, v), "cover/N-not-neighbours-of-x", &[x, v]);
    }
    if cover.c.contains(x) {
        return Verdict::fail("cover/C-overlaps-N-or-x", &[x]);
    }
    if let Some(v) = cover.c.intersection(&cover.n_set).min() {
        return Verdict::fail("cover/C-overlaps-N-or-x", &[v]);
    }
    for v in cover.c.iter() {
        check!(!g.adjacent(x, v), "cover/x-not-anticomplete-to-C", &[x, v]);
    }
    for v in cover.c.iter() {
        check!(
            !g.neighbors(v).is_disjoint(&cover.n_set),
            "cover/N-does-not-cover-C",
            &[v]
        );
    }
    Verdict::Ok
}

/// A multicover (N_x : x in X) of C: X stable, each (x, N_x) a cover of C,
/// and distinct x' anticomplete to N_x (so the sets {x} u N_x are pairwise
/// disjoint).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multicover {
    pub x_set: VertexSet,
    pub n_sets: BTreeMap<usize, VertexSet>,
    pub c: VertexSet,
}

impl Multicover {
    pub fn cover_of(&self, x: usize) -> Option<Cover> {
        self.n_sets.get(&x).map(|n| Cover {
            x,
            n_set: n.clone(),
            c: self.c.clone(),
        })
    }

    pub fn union_of_n_sets(&self, n: usize) -> VertexSet {
        self.n_sets
            .values()
            .fold(VertexSet::empty(n), |acc, s| acc.union(s))
    }
}

pub fn verify_multicover(g: &Graph, mc: &Multicover, require_stable_n: bool) -> Verdict {
    let keys: Vec<usize> = mc.n_sets.keys().copied().collect();
    if keys != mc.x_set.to_vec() {
        return Verdict::fail("multicover/N-keys-differ-from-X", &keys);
    }
    if !g.is_stable(&mc.x_set) {
        let w = mc
            .x_set
            .iter()
            .find_map(|u| {
                g.neighbors(u)
                    .intersection(&mc.x_set)
                    .min()
                    .map(|v| [u, v])
            })
            .unwrap();
        return Verdict::fail("multicover/X-not-stable", &w);
    }
    for (&x, n_set) in &mc.n_sets {
        let v = verify_cover(
            g,
            &Cover {
                x,
                n_set: n_set.clone(),
                c: mc.c.clone(),
            },
        );
        if !v.is_ok() {
            return v;
        }
    }
    for (&x, n_set) in &mc.n_sets {
        for (&x2, n_set2) in &mc.n_sets {
            if x == x2 {
                continue;
            }
            if n_set2.contains(x) || !n_set.is_disjoint(n_set2) {
                let w = if n_set2.contains(x) {
                    x
                } else {
                    n_set.intersection(n_set2).min().unwrap()
                };
                return Verdict::fail("multicover/sets-not-disjoint", &[w]);
            }
            for v in n_set.iter() {
                check!(
                    !g.adjacent(x2, v),
                    "multicover/other-x-adjacent-to-Nx",
                    &[x2, v]
                );
            }
        }
    }
    if require_stable_n {
        for (&x, n_set) in &mc.n_sets {
            check!(g.is_stable(n_set), "multicover/Nx-not-stable", &[x]);
        }
    }
    Verdict::Ok
}

/// Containment: X' subset of X and N'_x subset of N_x for each x in X'.
pub fn verify_containment(outer: &Multicover, inner: &Multicover) -> Verdict {
    if !inner.x_set.is_subset(&outer.x_set) {
        let w = inner.x_set.difference(&outer.x_set).min().unwrap();
        return Verdict::fail("containment/X-not-subset", &[w]);
    }
    for (&x, n_inner) in &inner.n_sets {
        match outer.n_sets.get(&x) {
            Some(n_outer) if n_inner.is_subset(n_outer) => {}
            Some(n_outer) => {
                let w = n_inner.difference(n_outer).min().unwrap();
                return Verdict::fail("containment/Nx-not-subset", &[x, w]);
            }
            None => return Verdict::fail("containment/X-not-subset", &[x]),
        }
    }
    Verdict::Ok
}

/// A tick on a stable set X: apex `a` anticomplete to X, and per x a knee
/// `a_x` adjacent to both `a` and `x` and anticomplete to X minus x. Knees
/// may be adjacent to one another (the tick need not be induced).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tick {
    pub x_set: VertexSet,
    pub apex: usize,
    pub knees: BTreeMap<usize, usize>,
}

impl Tick {
    /// Apex plus knees: the tick vertices outside X.
    pub fn body(&self, n: usize) -> VertexSet {
        let mut b = VertexSet::singleton(n, self.apex);
        for &k in self.knees.values() {
            b.insert(k);
        }
        b
    }
}

pub fn verify_tick(g: &Graph, tick: &Tick) -> Verdict {
    let keys: Vec<usize> = tick.knees.keys().copied().collect();
    if keys != tick.x_set.to_vec() {
        return Verdict::fail("tick/knee-keys-differ-from-X", &keys);
    }
    let mut listed = vec![tick.apex];
    listed.extend(tick.knees.values().copied());
    for (i, &u) in listed.iter().enumerate() {
        if tick.x_set.contains(u) {
            return Verdict::fail("tick/vertex-inside-X", &[u]);
        }
        for &v in &listed[i + 1..] {
            check!(u != v, "tick/vertices-not-distinct", &[u]);
        }
    }
    for x in tick.x_set.iter() {
        check!(
            !g.adjacent(tick.apex, x),
            "tick/apex-adjacent-to-X",
            &[tick.apex, x]
        );
    }
    for (&x, &knee) in &tick.knees {
        check!(
            g.adjacent(knee, tick.apex),
            "tick/knee-not-adjacent-to-apex",
            &[knee, tick.apex]
        );
        check!(g.adjacent(knee, x), "tick/knee-not-adjacent-to-own-x", &[knee, x]);
        for x2 in tick.x_set.iter() {
            if x2 != x {
                check!(
                    !g.adjacent(knee, x2),
                    "tick/knee-adjacent-to-other-x",
                    &[knee, x2]
                );
            }
        }
    }
    Verdict::Ok
}

/// Tangency of a tick to a multicover on the same X: no vertex of
/// C u union(N_x) lies in, or has a neighbour in, the tick body.
pub fn verify_tick_tangent(g: &Graph, tick: &Tick, mc: &Multicover) -> Verdict {
    if tick.x_set != mc.x_set {
        return Verdict::fail("tangent/X-differs", &[]);
    }
    let v = verify_tick(g, tick);
    if !v.is_ok() {
        return v;
    }
    let body = tick.body(g.n());
    let protected = mc.c.union(&mc.union_of_n_sets(g.n()));
    if let Some(w) = protected.intersection(&body).min() {
        return Verdict::fail("tangent/overlap", &[w]);
    }
    for w in protected.iter() {
        if let Some(b) = g.neighbors(w).intersection(&body).min() {
            return Verdict::fail("tangent/contact", &[w, b]);
        }
    }
    Verdict::Ok
}

/// An impression of a pattern graph H: an injective map of V(H) onto a
/// stable set, and per edge a path of length >= 2 between the images of its
/// ends, with non-incident edge paths disjoint and anticomplete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Impression {
    pub pattern_n: usize,
    pub pattern_edges: Vec<(usize, usize)>,
    pub vertex_map: Vec<usize>,
    /// Parallel to `pattern_edges`; each path includes both endpoint images.
    pub edge_paths: Vec<Vec<usize>>,
    pub order: usize,
}

/// The complete bipartite pattern K_{n,n}: left side 0..n, right side n..2n.
pub fn k_nn_pattern(n: usize) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in n..2 * n {
            edges.push((u, v));
        }
    }
    (2 * n, edges)
}

pub fn verify_impression(g: &Graph, imp: &Impression) -> Verdict {
    if imp.vertex_map.len() != imp.pattern_n {
        return Verdict::fail("impression/vertex-map-wrong-length", &[]);
    }
    if imp.edge_paths.len() != imp.pattern_edges.len() {
        return Verdict::fail("impression/paths-wrong-length", &[]);
    }
    let image = VertexSet::from_iter(g.n(), imp.vertex_map.iter().copied());
    if image.len() != imp.pattern_n {
        return Verdict::fail("impression/vertex-map-not-injective", &[]);
    }
    if !g.is_stable(&image) {
        let w = image
            .iter()
            .find_map(|u| g.neighbors(u).intersection(&image).min().map(|v| [u, v]))
            .unwrap();
        return Verdict::fail("impression/image-not-stable", &w);
    }
    let mut max_len = 0;
    for (idx, path) in imp.edge_paths.iter().enumerate() {
        let (pu, pv) = imp.pattern_edges[idx];
        if pu >= imp.pattern_n || pv >= imp.pattern_n {
            return Verdict::fail("impression/pattern-edge-out-of-range", &[pu, pv]);
        }
        if path.len() < 3 {
            return Verdict::fail("impression/path-too-short", path);
        }
        max_len = max_len.max(path.len() - 1);
        if path[0] != imp.vertex_map[pu] || path[path.len() - 1] != imp.vertex_map[pv] {
            return Verdict::fail("impression/path-endpoints-mismatch", path);
        }
        let distinct = VertexSet::from_iter(g.n(), path.iter().copied());
        if distinct.len() != path.len() {
            return Verdict::fail("impression/path-repeats-vertex", path);
        }
        for w in path.windows(2) {
            check!(
                g.adjacent(w[0], w[1]),
                "impression/path-not-a-path",
                &[w[0], w[1]]
            );
        }
    }
    check!(imp.order == max_len, "impression/order-mismatch", &[imp.order, max_len]);
    for (i, (iu, iv)) in imp.pattern_edges.iter().enumerate() {
        for (j, (ju, jv)) in imp.pattern_edges.iter().enumerate().skip(i + 1) {
            if iu == ju || iu == jv || iv == ju || iv == jv {
                continue; // incident edges are unconstrained
            }
            let a = VertexSet::from_iter(g.n(), imp.edge_paths[i].iter().copied());
            let b = VertexSet::from_iter(g.n(), imp.edge_paths[j].iter().copied());
            if let Some(w) = a.intersection(&b).min() {
                return Verdict::fail("impression/nonincident-paths-intersect", &[w]);
            }
            for u in a.iter() {
                if let Some(v) = g.neighbors(u).intersection(&b).min() {
                    return Verdict::fail("impression/nonincident-paths-adjacent", &[u, v]);
                }
            }
        }
    }
    Verdict::Ok
}

/// An h-cable of length t: pairwise disjoint, anticomplete h-cliques
/// X_1..X_t, per-clique subsets N_i of N^1(X_i), distinguished disjoint
/// subsets Y_{i,t} and Z_{i,j} of N_i, and a base C, satisfying (C1)-(C5).
/// Indices are 0-based: pair (i, j) with 0 <= i < j < t names the cliques
/// X_{i+1} and X_{j+1} of the usual 1-based presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cable {
    pub h: usize,
    pub cliques: Vec<VertexSet>,
    pub n_sets: Vec<VertexSet>,
    pub y_sets: Vec<VertexSet>,
    pub z_sets: Vec<ZEntry>,
    pub base: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZEntry {
    pub i: usize,
    pub j: usize,
    pub set: VertexSet,
}

impl Cable {
    pub fn length(&self) -> usize {
        self.cliques.len()
    }

    /// Z_{i,j} for 0-based i < j; empty if not listed.
    pub fn z(&self, i: usize, j: usize, n: usize) -> VertexSet {
        self.z_sets
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map(|e| e.set.clone())
            .unwrap_or_else(|| VertexSet::empty(n))
    }

    /// A base-only cable of length 0.
    pub fn base_only(base: VertexSet, h: usize) -> Cable {
        Cable {
            h,
            cliques: vec![],
            n_sets: vec![],
            y_sets: vec![],
            z_sets: vec![],
            base,
        }
    }
}

/// Per-axiom report: field invariants plus (C1)-(C5).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableReport {
    pub items: Vec<(String, Verdict)>,
}

impl CableReport {
    pub fn is_ok(&self) -> bool {
        self.items.iter().all(|(_, v)| v.is_ok())
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.items.iter().find_map(|(_, v)| match v {
            Verdict::Ok => None,
            Verdict::Violation(viol) => Some(viol),
        })
    }

    pub fn verdict(&self) -> Verdict {
        match self.first_violation() {
            None => Verdict::Ok,
            Some(v) => Verdict::Violation(v.clone()),
        }
    }
}

pub fn verify_cable(g: &Graph, cable: &Cable) -> CableReport {
    let mut items = Vec::new();
    items.push(("fields".to_string(), cable_fields(g, cable)));
    if items[0].1.is_ok() {
        items.push(("C1".to_string(), axiom_c1(g, cable)));
        items.push(("C2".to_string(), axiom_c2(g, cable)));
        items.push(("C3".to_string(), axiom_c3(g, cable)));
        items.push(("C4".to_string(), axiom_c4(g, cable)));
        items.push(("C5".to_string(), axiom_c5(g, cable)));
    }
    CableReport { items }
}

fn cable_fields(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    if cable.h == 0 {
        return Verdict::fail("cable/h-must-be-positive", &[]);
    }
    if cable.n_sets.len() != t || cable.y_sets.len() != t {
        return Verdict::fail("cable/inconsistent-lengths", &[t]);
    }
    for e in &cable.z_sets {
        if !(e.i < e.j && e.j < t) {
            return Verdict::fail("cable/Z-index-out-of-range", &[e.i, e.j]);
        }
    }
    for (i, x) in cable.cliques.iter().enumerate() {
        if x.len() != cable.h {
            return Verdict::fail("cable/Xi-wrong-size", &[i]);
        }
        if g.is_clique(x).is_err() {
            return Verdict::fail("cable/Xi-not-a-clique", &[i]);
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            if !cable.cliques[i].is_disjoint(&cable.cliques[j]) {
                return Verdict::fail("cable/X-not-disjoint", &[i, j]);
            }
            if !g
                .is_anticomplete_between(&cable.cliques[i], &cable.cliques[j])
                .unwrap()
            {
                return Verdict::fail("cable/X-not-anticomplete", &[i, j]);
            }
        }
    }
    for (i, n_set) in cable.n_sets.iter().enumerate() {
        let n1 = g.n1(&cable.cliques[i]).expect("clique checked above");
        if !n_set.is_subset(&n1) {
            let w = n_set.difference(&n1).min().unwrap();
            return Verdict::fail("cable/Ni-not-in-N1-of-Xi", &[i, w]);
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            if !cable.n_sets[i].is_disjoint(&cable.n_sets[j]) {
                return Verdict::fail("cable/N-not-disjoint", &[i, j]);
            }
        }
    }
    for i in 0..t {
        let mut parts: Vec<&VertexSet> = vec![&cable.y_sets[i]];
        for e in &cable.z_sets {
            if e.i == i {
                parts.push(&e.set);
            }
        }
        for (a, pa) in parts.iter().enumerate() {
            if !pa.is_subset(&cable.n_sets[i]) {
                let w = pa.difference(&cable.n_sets[i]).min().unwrap();
                return Verdict::fail("cable/YZ-not-subset-of-Ni", &[i, w]);
            }
            for pb in &parts[a + 1..] {
                if !pa.is_disjoint(pb) {
                    let w = pa.intersection(pb).min().unwrap();
                    return Verdict::fail("cable/YZ-not-disjoint", &[i, w]);
                }
            }
        }
    }
    let mut occupied = VertexSet::empty(g.n());
    for i in 0..t {
        occupied = occupied.union(&cable.cliques[i]).union(&cable.n_sets[i]);
    }
    if let Some(w) = cable.base.intersection(&occupied).min() {
        return Verdict::fail("cable/base-overlaps", &[w]);
    }
    Verdict::Ok
}

fn axiom_c1(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    for i in 0..t {
        if !g.covers(&cable.y_sets[i], &cable.base).unwrap() {
            let w = cable
                .base
                .iter()
                .find(|&v| g.neighbors(v).is_disjoint(&cable.y_sets[i]))
                .unwrap();
            return Verdict::fail("C1/Y-does-not-cover-base", &[i, w]);
        }
        for j in i + 1..t {
            let z = cable.z(i, j, g.n());
            if !g.is_anticomplete_between(&cable.base, &z).unwrap() {
                return Verdict::fail("C1/base-not-anticomplete-to-Z", &[i, j]);
            }
        }
        if !g
            .is_anticomplete_between(&cable.base, &cable.cliques[i])
            .unwrap()
        {
            return Verdict::fail("C1/base-not-anticomplete-to-X", &[i]);
        }
    }
    Verdict::Ok
}

fn axiom_c2(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    for i in 0..t {
        for j in i + 1..t {
            if !g
                .is_anticomplete_between(&cable.cliques[i], &cable.n_sets[j])
                .unwrap()
            {
                return Verdict::fail("C2/Xi-not-anticomplete-to-Nj", &[i, j]);
            }
        }
    }
    Verdict::Ok
}

fn axiom_c3(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    for i in 0..t {
        for j in i + 1..t {
            for v in cable.z(i, j, g.n()).iter() {
                if cable.cliques[j].is_subset(g.neighbors(v)) {
                    return Verdict::fail("C3/Z-vertex-complete-to-Xj", &[i, j, v]);
                }
            }
        }
    }
    Verdict::Ok
}

fn axiom_c4(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    for i in 0..t {
        for j in i + 1..t {
            let z = cable.z(i, j, g.n());
            for k in j + 1..t {
                let xk_nk = cable.cliques[k].union(&cable.n_sets[k]);
                if !g.is_anticomplete_between(&z, &xk_nk).unwrap() {
                    return Verdict::fail("C4/Z-not-anticomplete-to-later", &[i, j, k]);
                }
            }
        }
    }
    Verdict::Ok
}

fn axiom_c5(g: &Graph, cable: &Cable) -> Verdict {
    let t = cable.length();
    for i in 0..t {
        for j in i + 1..t {
            if pair_type_unchecked(g, cable, i, j).is_none() {
                return Verdict::fail("C5/neither-alternative-holds", &[i, j]);
            }
        }
    }
    Verdict::Ok
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairType {
    Type1,
    Type2,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CableError {
    #[error("cable does not verify: {0:?}")]
    Invalid(Violation),
    #[error("pair ({0},{1}) satisfies neither (C5) alternative; internal error")]
    Neither(usize, usize),
    #[error("index out of range")]
    BadIndex,
}

fn pair_type_unchecked(g: &Graph, cable: &Cable, i: usize, j: usize) -> Option<PairType> {
    let y_i = &cable.y_sets[i];
    let x_j = &cable.cliques[j];
    let z_ij = cable.z(i, j, g.n());
    let some_anticomplete = x_j.iter().any(|x| g.neighbors(x).is_disjoint(y_i));
    if some_anticomplete && z_ij.is_empty() {
        return Some(PairType::Type1);
    }
    let complete = g.is_complete_between(x_j, y_i).unwrap_or(false);
    let covers = g.covers(&z_ij, &cable.n_sets[j]).unwrap_or(false);
    if complete && covers {
        return Some(PairType::Type2);
    }
    None
}

/// The (C5) alternative holding for pair (i, j), 0-based i < j. The cable is
/// re-verified first; "neither" on a verified cable signals an internal error.
pub fn cable_pair_type(g: &Graph, cable: &Cable, i: usize, j: usize) -> Result<PairType, CableError> {
    if !(i < j && j < cable.length()) {
        return Err(CableError::BadIndex);
    }
    let report = verify_cable(g, cable);
    if let Some(v) = report.first_violation() {
        return Err(CableError::Invalid(v.clone()));
    }
    pair_type_unchecked(g, cable, i, j).ok_or(CableError::Neither(i, j))
}

/// (C5) types of every pair i < j, with the cable verified once up front.
pub fn cable_pair_types(
    g: &Graph,
    cable: &Cable,
) -> Result<Vec<((usize, usize), PairType)>, CableError> {
    let report = verify_cable(g, cable);
    if let Some(v) = report.first_violation() {
        return Err(CableError::Invalid(v.clone()));
    }
    let t = cable.length();
    let mut out = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let ty = pair_type_unchecked(g, cable, i, j).ok_or(CableError::Neither(i, j))?;
            out.push(((i, j), ty));
        }
    }
    Ok(out)
}

/// The subcable on index subset `indices` (0-based, strictly increasing):
/// surviving cliques, N and Z sets renumbered, with Y'_{i,|I|} := Y_{i,t}.
pub fn subcable(g: &Graph, cable: &Cable, indices: &[usize]) -> Result<Cable, CableError> {
    if indices.windows(2).any(|w| w[0] >= w[1])
        || indices.iter().any(|&i| i >= cable.length())
    {
        return Err(CableError::BadIndex);
    }
    let report = verify_cable(g, cable);
    if let Some(v) = report.first_violation() {
        return Err(CableError::Invalid(v.clone()));
    }
    let mut z_sets = Vec::new();
    for (a, &i) in indices.iter().enumerate() {
        for (b, &j) in indices.iter().enumerate().skip(a + 1) {
            let z = cable.z(i, j, g.n());
            if !z.is_empty() {
                z_sets.push(ZEntry { i: a, j: b, set: z });
            }
        }
    }
    Ok(Cable {
        h: cable.h,
        cliques: indices.iter().map(|&i| cable.cliques[i].clone()).collect(),
        n_sets: indices.iter().map(|&i| cable.n_sets[i].clone()).collect(),
        y_sets: indices.iter().map(|&i| cable.y_sets[i].clone()).collect(),
        z_sets,
        base: cable.base.clone(),
    })
}
