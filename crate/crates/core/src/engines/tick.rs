//! The tick chain: extract a tangent tick from a stable multicover, stabilize
//! a general multicover, cluster ticks into an impression of K_{n,n} of order
//! two, and turn an impression into a long hole by restricted exact search.

use std::collections::BTreeMap;

use crate::bounds::{gettick_constants, BoundExpr};
use crate::engines::{EngineError, Transcript};
use crate::graph::{Graph, Hole, VertexSet};
use crate::solvers::{
    degeneracy_order_and_coloring, find_hole_at_least, find_k_clique_in_subset, omega, ChiSolver,
    SolveOutcome, SolverLimits,
};
use crate::structures::{
    k_nn_pattern, verify_containment, verify_impression, verify_multicover, verify_tick_tangent,
    Impression, Multicover, Tick, Verdict,
};

const CACHE_CAP: usize = 1 << 14;
const CONST_DIGITS: usize = 10_000;

#[derive(Debug, Clone, Copy)]
pub struct GrowTickParams {
    pub j: u32,
    pub k: u32,
    pub m: u32,
    pub c: u32,
    pub kappa: u32,
}

#[derive(Debug, Clone)]
pub struct GrowTickOutput {
    pub multicover: Multicover,
    pub tick: Tick,
    pub transcript: Transcript,
}

fn structure(v: Verdict) -> Result<(), EngineError> {
    match v {
        Verdict::Ok => Ok(()),
        Verdict::Violation(viol) => Err(EngineError::Structure(viol)),
    }
}

/// Most chromatic fiber of a grouping, ties broken by first key in order.
fn max_chi_fiber<K: Ord + Clone>(
    chi: &mut ChiSolver,
    fibers: &BTreeMap<K, VertexSet>,
) -> Result<Option<(K, VertexSet, u32)>, EngineError> {
    let mut best: Option<(K, VertexSet, u32)> = None;
    for (key, set) in fibers {
        let c = chi.chi_of_subset(set)?;
        if best.as_ref().map_or(true, |(_, _, b)| c > *b) {
            best = Some((key.clone(), set.clone(), c));
        }
    }
    Ok(best)
}

/// From a stable multicover with enough slack, a contained stable multicover
/// of a chromatic subset together with a tangent tick. Runs the proof's
/// pigeonholes on the actual sets; the astronomically large size thresholds
/// are recorded as verified or assumed rather than enforced, so planted
/// desk-scale instances can execute every step.
pub fn grow_tick(
    g: &Graph,
    mc: &Multicover,
    p: &GrowTickParams,
    limits: &SolverLimits,
) -> Result<GrowTickOutput, EngineError> {
    structure(verify_multicover(g, mc, true))?;
    if p.j == 0 {
        return Err(EngineError::Precondition(
            "m_0 = c_0 = 1 and the statement is vacuous at j = 0".into(),
        ));
    }
    if p.k < 2 {
        return Err(EngineError::Precondition("vacuous for k < 2".into()));
    }
    let mut tr = Transcript::default();
    let mut chi = ChiSolver::new(g, *limits, CACHE_CAP);

    match omega(g, limits) {
        SolveOutcome::Exact(w) if w.size as u32 > p.k => {
            return Err(EngineError::Precondition(format!(
                "omega(G) = {} exceeds k = {}",
                w.size, p.k
            )))
        }
        SolveOutcome::Exact(_) => tr.hypothesis("omega-at-most-k", true),
        SolveOutcome::Exhausted { .. } => tr.hypothesis("omega-at-most-k", false),
    }
    let union_n = mc.union_of_n_sets(g.n());
    let (un_sub, _) = g.induced_subgraph(&union_n).expect("valid subset");
    match omega(&un_sub, limits) {
        SolveOutcome::Exact(w) if w.size as u32 > p.j => {
            return Err(EngineError::Precondition(format!(
                "omega of the cover union is {} but j = {}",
                w.size, p.j
            )))
        }
        SolveOutcome::Exact(_) => tr.hypothesis("omega-union-at-most-j", true),
        SolveOutcome::Exhausted { .. } => tr.hypothesis("omega-union-at-most-j", false),
    }
    tr.hypothesis("kappa-bound-on-small-clique-subgraphs", false);

    let ints = |v: u32| BoundExpr::int(v as u64);
    let cur = gettick_constants(p.j, &ints(p.k), &ints(p.m), &ints(p.c), &ints(p.kappa));
    let prev = gettick_constants(p.j - 1, &ints(p.k), &ints(p.m), &ints(p.c), &ints(p.kappa));
    let eval_u64 = |e: &BoundExpr| e.eval(CONST_DIGITS).and_then(|v| u64::try_from(v).ok());
    let m_j_v = eval_u64(&cur.m_j);
    let c_j_v = eval_u64(&cur.c_j);
    let m_prev = eval_u64(&prev.m_j);
    let recursion_threshold = eval_u64(&BoundExpr::mul(vec![
        prev.c_j.clone(),
        BoundExpr::pow(BoundExpr::int(2), cur.m_j.clone()),
    ]));
    let chi_c = chi.chi_of_subset(&mc.c)?;
    let thresholds_hold = m_j_v.map_or(false, |mj| mc.x_set.len() as u64 >= mj)
        && c_j_v.map_or(false, |cj| chi_c as u64 >= cj);
    tr.hypothesis("size-and-chromatic-thresholds", thresholds_hold);

    // the k-clique A inside C, and C_0 = C minus A and its neighbourhood
    let a_clique = find_k_clique_in_subset(g, &mc.c, p.k as usize)
        .ok_or_else(|| EngineError::step("clique-A", "no k-clique inside C"))?;
    let mut c0 = mc.c.difference(&a_clique);
    for av in a_clique.iter() {
        c0 = c0.difference(g.neighbors(av));
    }
    tr.record("clique-A", &a_clique.to_vec(), &[c0.len()], &[]);

    // step (1): pigeonhole to an apex a, an index subset X_1 and fiber C_1
    let xs: Vec<usize> = mc.x_set.to_vec();
    let mut a_vx: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in c0.iter() {
        for &x in &xs {
            let n_x = &mc.n_sets[&x];
            let witness = a_clique.iter().find(|&ap| {
                n_x.iter()
                    .any(|n| g.adjacent(n, v) && !g.adjacent(n, ap))
            });
            match witness {
                Some(ap) => {
                    a_vx.insert((v, x), ap);
                }
                None => {
                    return Err(EngineError::step(
                        "step1-witness",
                        format!("every neighbour of {v} in N_{x} is complete to A"),
                    ))
                }
            }
        }
    }
    let mut by_apex: BTreeMap<usize, VertexSet> = BTreeMap::new();
    let mut x_v: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in c0.iter() {
        let mut counts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in &xs {
            counts.entry(a_vx[&(v, x)]).or_default().push(x);
        }
        let (&a_v, xv) = counts
            .iter()
            .max_by_key(|(&a, xv)| (xv.len(), usize::MAX - a))
            .expect("X is nonempty");
        by_apex
            .entry(a_v)
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
        x_v.insert(v, xv.clone());
    }
    let (apex, c_apex, chi_apex) = max_chi_fiber(&mut chi, &by_apex)?
        .ok_or_else(|| EngineError::step("step1-apex", "C_0 is empty"))?;
    let mut by_xset: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
    for v in c_apex.iter() {
        by_xset
            .entry(x_v[&v].clone())
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    let (x1, c1, chi_c1) = max_chi_fiber(&mut chi, &by_xset)?.expect("fiber nonempty");
    tr.record("step1-fiber", &[apex], &[x1.len(), c1.len()], &[chi_apex, chi_c1]);

    // the witnesses n_{x,v} and the knees a_x
    let mut n_xv: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in c1.iter() {
        for &x in &x1 {
            let n = mc.n_sets[&x]
                .iter()
                .find(|&n| g.adjacent(n, v) && !g.adjacent(n, apex))
                .ok_or_else(|| EngineError::step("witness-n", "step (1) fiber inconsistent"))?;
            n_xv.insert((x, v), n);
        }
    }
    let mut knees: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in &x1 {
        let knee = mc.n_sets[&x]
            .intersection(g.neighbors(apex))
            .min()
            .ok_or_else(|| EngineError::step("knee-exists", "N_x misses the apex"))?;
        knees.insert(x, knee);
    }

    // C_2: fiber vertices clear of every knee
    let mut c2 = c1.clone();
    for &knee in knees.values() {
        c2 = c2.difference(g.neighbors(knee));
    }
    tr.record("prune-knee-neighbours", &[], &[c2.len()], &[]);

    // step (2): vertices leaning on some knee too often force a recursion
    // with clique number one lower
    let mut c_union = VertexSet::empty(g.n());
    if let Some(mp) = m_prev {
        for &y in &x1 {
            let knee_y = knees[&y];
            let mut c_y = VertexSet::empty(g.n());
            for v in c2.iter() {
                let lean = x1
                    .iter()
                    .filter(|&&x| x != y && g.adjacent(n_xv[&(x, v)], knee_y))
                    .count() as u64;
                if lean >= mp {
                    c_y.insert(v);
                }
            }
            if let Some(thr) = recursion_threshold {
                let chi_cy = chi.chi_of_subset(&c_y)?;
                if chi_cy as u64 > thr {
                    tr.record("step2-recursion", &[y], &[c_y.len()], &[chi_cy]);
                    let mut by_lean: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
                    for v in c_y.iter() {
                        let leaners: Vec<usize> = x1
                            .iter()
                            .copied()
                            .filter(|&x| x != y && g.adjacent(n_xv[&(x, v)], knee_y))
                            .take(mp as usize)
                            .collect();
                        by_lean
                            .entry(leaners)
                            .or_insert_with(|| VertexSet::empty(g.n()))
                            .insert(v);
                    }
                    let (x_prime, c_prime, _) =
                        max_chi_fiber(&mut chi, &by_lean)?.expect("C_y nonempty");
                    let mut n_sets = BTreeMap::new();
                    for &x in &x_prime {
                        n_sets.insert(x, mc.n_sets[&x].intersection(g.neighbors(knee_y)));
                    }
                    let inner = Multicover {
                        x_set: VertexSet::from_iter(g.n(), x_prime.iter().copied()),
                        n_sets,
                        c: c_prime,
                    };
                    let mut out = grow_tick(
                        g,
                        &inner,
                        &GrowTickParams {
                            j: p.j - 1,
                            ..*p
                        },
                        limits,
                    )?;
                    let mut steps = tr.steps;
                    steps.append(&mut out.transcript.steps);
                    out.transcript.steps = steps;
                    return Ok(out);
                }
            }
            c_union = c_union.union(&c_y);
        }
    }

    // step (3): degeneracy coloring of the leaning digraph picks a stable
    // index set per vertex; pigeonhole to a common one
    let c_rest = c2.difference(&c_union);
    let mut by_stable: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
    for v in c_rest.iter() {
        // underlying undirected graph of the leaning digraph on X_1
        let mut edges = Vec::new();
        for (i, &x) in x1.iter().enumerate() {
            for (l, &y) in x1.iter().enumerate().skip(i + 1) {
                if g.adjacent(n_xv[&(x, v)], knees[&y]) || g.adjacent(n_xv[&(y, v)], knees[&x]) {
                    edges.push((i, l));
                }
            }
        }
        let local = Graph::from_edges(x1.len(), &edges).expect("sanitized edge list");
        let coloring = degeneracy_order_and_coloring(&local).coloring;
        let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, &col) in coloring.assignment.iter().enumerate() {
            classes.entry(col).or_default().push(x1[i]);
        }
        let class = classes
            .values()
            .max_by_key(|c| c.len())
            .cloned()
            .unwrap_or_default();
        by_stable
            .entry(class)
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    let (x3, c3, chi_c3) = max_chi_fiber(&mut chi, &by_stable)?
        .ok_or_else(|| EngineError::step("step3", "no vertices survive the leaning prune"))?;
    tr.record("step3-fiber", &x3, &[c3.len()], &[chi_c3]);

    // final covers: clear of the apex and of every knee, so the tick body
    // stays untouched by the multicover
    let mut n_final: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for &x in &x3 {
        let mut n_x = mc.n_sets[&x].difference(g.neighbors(apex));
        for &y in &x3 {
            n_x = n_x.difference(g.neighbors(knees[&y]));
        }
        n_final.insert(x, n_x);
    }
    let mut c_final = VertexSet::empty(g.n());
    for v in c3.iter() {
        if x3
            .iter()
            .all(|&x| !n_final[&x].is_disjoint(g.neighbors(v)))
        {
            c_final.insert(v);
        }
    }
    let mc_out = Multicover {
        x_set: VertexSet::from_iter(g.n(), x3.iter().copied()),
        n_sets: n_final,
        c: c_final,
    };
    let tick = Tick {
        x_set: mc_out.x_set.clone(),
        apex,
        knees: x3.iter().map(|&x| (x, knees[&x])).collect(),
    };
    let audit = |name: &str, v: Verdict| match v {
        Verdict::Ok => Ok(()),
        Verdict::Violation(viol) => Err(EngineError::Audit(format!(
            "{name} failed on engine output: {}",
            viol.clause
        ))),
    };
    audit("multicover", verify_multicover(g, &mc_out, true))?;
    audit("containment", verify_containment(mc, &mc_out))?;
    audit("tangency", verify_tick_tangent(g, &tick, &mc_out))?;
    let chi_final = chi.chi_of_subset(&mc_out.c)?;
    tr.record(
        "output",
        &[apex],
        &[mc_out.x_set.len(), mc_out.c.len()],
        &[chi_final],
    );
    Ok(GrowTickOutput {
        multicover: mc_out,
        tick,
        transcript: tr,
    })
}

/// Stabilize a multicover: color each N_x, fingerprint every base vertex by
/// the colors covering it, keep the most chromatic fiber, and restrict each
/// N_x to the fingerprint's color class.
pub fn stabilize_multicover(
    g: &Graph,
    mc: &Multicover,
    kappa: u32,
    limits: &SolverLimits,
) -> Result<(Multicover, Transcript), EngineError> {
    structure(verify_multicover(g, mc, false))?;
    let mut chi = ChiSolver::new(g, *limits, CACHE_CAP);
    let mut tr = Transcript::default();
    let xs: Vec<usize> = mc.x_set.to_vec();
    let mut color_of: BTreeMap<usize, BTreeMap<usize, u32>> = BTreeMap::new();
    for &x in &xs {
        let (chi_n, coloring) = chi.coloring_of_subset(&mc.n_sets[&x])?;
        if chi_n > kappa {
            return Err(EngineError::Precondition(format!(
                "chi(N_{x}) = {chi_n} exceeds kappa = {kappa}"
            )));
        }
        color_of.insert(x, coloring.into_iter().collect());
        tr.record("color-cover", &[x], &[mc.n_sets[&x].len()], &[chi_n]);
    }
    let mut fibers: BTreeMap<Vec<u32>, VertexSet> = BTreeMap::new();
    for v in mc.c.iter() {
        let fingerprint: Vec<u32> = xs
            .iter()
            .map(|&x| {
                let n = mc.n_sets[&x]
                    .intersection(g.neighbors(v))
                    .min()
                    .expect("covers C");
                color_of[&x][&n]
            })
            .collect();
        fibers
            .entry(fingerprint)
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    let chi_c = chi.chi_of_subset(&mc.c)?;
    let (fingerprint, c_prime, chi_fiber) = match max_chi_fiber(&mut chi, &fibers)? {
        Some(f) => f,
        None => (vec![0; xs.len()], VertexSet::empty(g.n()), 0),
    };
    tr.record(
        "fingerprint-fiber",
        &[],
        &[fibers.len(), c_prime.len()],
        &[chi_c, chi_fiber],
    );
    let n_sets: BTreeMap<usize, VertexSet> = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let class = VertexSet::from_iter(
                g.n(),
                color_of[&x]
                    .iter()
                    .filter(|&(_, &c)| c == fingerprint[i])
                    .map(|(&n, _)| n),
            );
            (x, class)
        })
        .collect();
    let out = Multicover {
        x_set: mc.x_set.clone(),
        n_sets,
        c: c_prime,
    };
    match verify_multicover(g, &out, true) {
        Verdict::Ok => Ok((out, tr)),
        Verdict::Violation(v) => Err(EngineError::Audit(format!(
            "stabilized multicover rejected: {}",
            v.clause
        ))),
    }
}

/// A cluster of n ticks on a common n-element stable set becomes an
/// impression of K_{n,n} of order two: one side the common set, the other the
/// apexes, each pattern edge realized by its length-2 knee path.
pub fn ticks_to_impression(
    g: &Graph,
    ticks: &[Tick],
    mc: &Multicover,
) -> Result<(Impression, Transcript), EngineError> {
    let n = ticks.len();
    if n == 0 {
        return Err(EngineError::Precondition("need at least one tick".into()));
    }
    if mc.x_set.len() != n {
        return Err(EngineError::Precondition(format!(
            "|X'| = {} but there are {} ticks",
            mc.x_set.len(),
            n
        )));
    }
    let mut tr = Transcript::default();
    for (i, tick) in ticks.iter().enumerate() {
        if tick.x_set != mc.x_set {
            return Err(EngineError::Precondition(format!(
                "tick {i} sits on a different set"
            )));
        }
        structure(verify_tick_tangent(g, tick, mc))?;
    }
    for (i, t1) in ticks.iter().enumerate() {
        let b1 = t1.body(g.n());
        for t2 in &ticks[i + 1..] {
            let b2 = t2.body(g.n());
            if !b1.is_disjoint(&b2) {
                return Err(EngineError::Precondition(format!(
                    "tick bodies overlap at {}",
                    b1.intersection(&b2).min().unwrap()
                )));
            }
            if !g.is_anticomplete_between(&b1, &b2).unwrap() {
                return Err(EngineError::Precondition(
                    "edges join distinct tick bodies outside X'".into(),
                ));
            }
        }
    }
    let xs = mc.x_set.to_vec();
    let (pattern_n, pattern_edges) = k_nn_pattern(n);
    let mut vertex_map = xs.clone();
    vertex_map.extend(ticks.iter().map(|t| t.apex));
    let edge_paths: Vec<Vec<usize>> = pattern_edges
        .iter()
        .map(|&(u, v)| {
            let x = xs[u];
            let tick = &ticks[v - n];
            vec![x, tick.knees[&x], tick.apex]
        })
        .collect();
    let imp = Impression {
        pattern_n,
        pattern_edges,
        vertex_map,
        edge_paths,
        order: 2,
    };
    match verify_impression(g, &imp) {
        Verdict::Ok => {
            tr.record("cluster-to-impression", &[], &[n], &[]);
            Ok((imp, tr))
        }
        Verdict::Violation(v) => Err(EngineError::Audit(format!(
            "clustered impression rejected: {}",
            v.clause
        ))),
    }
}

/// A hole of length >= 2n from an impression of K_{n,n}: exact hole search
/// restricted to the impression's vertex union. A miss is an audit case, not
/// a silent failure.
pub fn impression_to_hole(
    g: &Graph,
    imp: &Impression,
    limits: &SolverLimits,
) -> Result<(Hole, Transcript), EngineError> {
    structure(verify_impression(g, imp))?;
    if imp.pattern_n % 2 != 0 {
        return Err(EngineError::Precondition("pattern is not K_{n,n}".into()));
    }
    let n = imp.pattern_n / 2;
    let (_, expected_edges) = k_nn_pattern(n);
    let mut got = imp.pattern_edges.clone();
    got.sort_unstable();
    if got != expected_edges {
        return Err(EngineError::Precondition("pattern is not K_{n,n}".into()));
    }
    if n < 2 {
        return Err(EngineError::Precondition(
            "need n >= 2 for a hole of length 2n".into(),
        ));
    }
    let mut union = VertexSet::from_iter(g.n(), imp.vertex_map.iter().copied());
    for path in &imp.edge_paths {
        for &v in path {
            union.insert(v);
        }
    }
    let (sub, map) = g.induced_subgraph(&union).expect("valid subset");
    match find_hole_at_least(&sub, (2 * n).max(4), limits) {
        SolveOutcome::Exact(Some(h)) => {
            let hole = Hole {
                cycle: h.cycle.iter().map(|&v| map[v]).collect(),
            };
            let mut tr = Transcript::default();
            tr.record("restricted-hole-search", &[], &[union.len(), hole.len()], &[]);
            Ok((hole, tr))
        }
        SolveOutcome::Exact(None) => Err(EngineError::Audit(format!(
            "no hole of length at least {} inside the impression union; \
             falsification candidate",
            2 * n
        ))),
        SolveOutcome::Exhausted { nodes, .. } => {
            Err(EngineError::Budget(crate::solvers::Exhausted { nodes }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::EngineError;

    fn vs(n: usize, vals: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vals.iter().copied())
    }

    /// X = {0, 1}, N_0 = {2, 3}, N_1 = {4, 5}, C = {6, 7, 8}: C contains the
    /// 2-clique {6, 7}, vertex 8 survives its removal, and only the covers
    /// through 3 and 4 reach 8.
    fn grow_fixture() -> (Graph, Multicover) {
        let g = Graph::from_edges(
            9,
            &[
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (6, 7),
                (2, 6),
                (3, 7),
                (3, 8),
                (4, 6),
                (4, 8),
                (5, 7),
            ],
        )
        .unwrap();
        let mc = Multicover {
            x_set: vs(9, &[0, 1]),
            n_sets: [(0, vs(9, &[2, 3])), (1, vs(9, &[4, 5]))].into(),
            c: vs(9, &[6, 7, 8]),
        };
        (g, mc)
    }

    #[test]
    fn grow_tick_extracts_tangent_tick() {
        let (g, mc) = grow_fixture();
        let p = GrowTickParams {
            j: 1,
            k: 2,
            m: 2,
            c: 1,
            kappa: 1,
        };
        let out = grow_tick(&g, &mc, &p, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(out.tick.apex, 6);
        assert_eq!(out.tick.knees, [(0, 2)].into());
        assert_eq!(out.multicover.x_set.to_vec(), vec![0]);
        assert_eq!(out.multicover.n_sets[&0].to_vec(), vec![3]);
        assert_eq!(out.multicover.c.to_vec(), vec![8]);
        // the audits below re-run on the caller's side too
        assert!(verify_multicover(&g, &out.multicover, true).is_ok());
        assert!(verify_containment(&mc, &out.multicover).is_ok());
        assert!(verify_tick_tangent(&g, &out.tick, &out.multicover).is_ok());
        // the two clique-number hypotheses were checked outright
        let verified: Vec<_> = out
            .transcript
            .hypotheses
            .iter()
            .filter(|h| h.verified)
            .map(|h| h.name.as_str())
            .collect();
        assert!(verified.contains(&"omega-at-most-k"));
        assert!(verified.contains(&"omega-union-at-most-j"));
    }

    #[test]
    fn grow_tick_preconditions() {
        let (g, mc) = grow_fixture();
        let p = GrowTickParams {
            j: 0,
            k: 2,
            m: 2,
            c: 1,
            kappa: 1,
        };
        assert!(matches!(
            grow_tick(&g, &mc, &p, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        let p = GrowTickParams {
            j: 1,
            k: 1,
            m: 2,
            c: 1,
            kappa: 1,
        };
        assert!(matches!(
            grow_tick(&g, &mc, &p, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        // omega(G) above k is rejected, not silently absorbed
        let p = GrowTickParams {
            j: 1,
            k: 2,
            m: 2,
            c: 1,
            kappa: 1,
        };
        let mut edges = g.edges();
        edges.push((6, 8));
        edges.push((7, 8));
        let g2 = Graph::from_edges(9, &edges).unwrap();
        assert!(matches!(
            grow_tick(&g2, &mc, &p, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn stabilize_splits_a_nonstable_cover() {
        // x = 0 covered by the edge {1, 2}; base split between the two colors
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let mc = Multicover {
            x_set: vs(5, &[0]),
            n_sets: [(0, vs(5, &[1, 2]))].into(),
            c: vs(5, &[3, 4]),
        };
        let (out, _) = stabilize_multicover(&g, &mc, 2, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(out.x_set, mc.x_set);
        assert!(out.c.is_subset(&mc.c));
        assert_eq!(out.c.len(), 1);
        assert_eq!(out.n_sets[&0].len(), 1);
        assert!(verify_containment(&mc, &out).is_ok());
        // kappa below chi(N_x) is a precondition failure
        assert!(matches!(
            stabilize_multicover(&g, &mc, 1, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn stabilize_keeps_an_already_stable_cover_whole() {
        let (g, mc) = grow_fixture();
        let (out, _) = stabilize_multicover(&g, &mc, 1, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(out, mc);
    }

    /// X' = {0, 1} with covers N_0 = {9}, N_1 = {10} of C = {8}, plus two
    /// tangent ticks whose union with X' is an induced 8-cycle.
    fn cluster_fixture() -> (Graph, Multicover, Vec<Tick>) {
        let g = Graph::from_edges(
            11,
            &[
                (0, 9),
                (1, 10),
                (8, 9),
                (8, 10),
                (2, 3),
                (2, 4),
                (0, 3),
                (1, 4),
                (5, 6),
                (5, 7),
                (0, 6),
                (1, 7),
            ],
        )
        .unwrap();
        let mc = Multicover {
            x_set: vs(11, &[0, 1]),
            n_sets: [(0, vs(11, &[9])), (1, vs(11, &[10]))].into(),
            c: vs(11, &[8]),
        };
        let ticks = vec![
            Tick {
                x_set: vs(11, &[0, 1]),
                apex: 2,
                knees: [(0, 3), (1, 4)].into(),
            },
            Tick {
                x_set: vs(11, &[0, 1]),
                apex: 5,
                knees: [(0, 6), (1, 7)].into(),
            },
        ];
        (g, mc, ticks)
    }

    #[test]
    fn two_ticks_cluster_into_an_eight_hole() {
        let (g, mc, ticks) = cluster_fixture();
        let (imp, _) = ticks_to_impression(&g, &ticks, &mc).unwrap();
        assert_eq!(imp.vertex_map, vec![0, 1, 2, 5]);
        assert!(verify_impression(&g, &imp).is_ok());
        let (hole, _) = impression_to_hole(&g, &imp, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(hole.len(), 8);
        let mut cyc = hole.cycle.clone();
        cyc.sort_unstable();
        assert_eq!(cyc, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        crate::verify::check_hole(&g, &hole).unwrap();
    }

    #[test]
    fn single_tick_clusters_but_gives_no_hole() {
        let (g, _, ticks) = cluster_fixture();
        let mc1 = Multicover {
            x_set: vs(11, &[0]),
            n_sets: [(0, vs(11, &[9]))].into(),
            c: vs(11, &[8]),
        };
        let tick1 = Tick {
            x_set: vs(11, &[0]),
            apex: ticks[0].apex,
            knees: [(0, 3)].into(),
        };
        let (imp, _) = ticks_to_impression(&g, &[tick1], &mc1).unwrap();
        assert!(matches!(
            impression_to_hole(&g, &imp, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn cluster_rejects_touching_bodies() {
        let (g, mc, ticks) = cluster_fixture();
        let mut edges = g.edges();
        edges.push((3, 6));
        let g2 = Graph::from_edges(11, &edges).unwrap();
        assert!(matches!(
            ticks_to_impression(&g2, &ticks, &mc),
            Err(EngineError::Precondition(_))
        ));
        // and mismatched tick count
        assert!(matches!(
            ticks_to_impression(&g, &ticks[..1], &mc),
            Err(EngineError::Precondition(_))
        ));
    }
}
