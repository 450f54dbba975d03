//! The cable chain: the Ramsey witness search over pair colorings, the
//! type-1 extraction of a multicover from a cable, the type-2 construction of
//! a hole of length exactly ell, and the cable growth step that extends a
//! length-s cable to length s+1 under clique control.

use crate::bounds::{ramsey_upper, BoundExpr};
use crate::engines::{EngineError, Transcript};
use crate::graph::{Graph, Hole, VertexSet};
use crate::solvers::{find_clique_with_large_n2, ChiSolver, SolverLimits};
use crate::structures::{
    cable_pair_types, verify_multicover, Cable, CableError, Multicover, PairType, Verdict, ZEntry,
};
use crate::verify::check_hole;

const CACHE_CAP: usize = 1 << 14;
const CONST_DIGITS: usize = 10_000;

fn cable_error(e: CableError) -> EngineError {
    match e {
        CableError::Invalid(v) => EngineError::Structure(v),
        other => EngineError::Precondition(other.to_string()),
    }
}

/// Lexicographically first subset of {0..t-1} of size m whose pairs all get
/// the same color, or None (exhaustive) if no such subset exists.
pub fn monochromatic_subset(
    t: usize,
    m: usize,
    color: &mut dyn FnMut(usize, usize) -> u32,
) -> Option<Vec<usize>> {
    fn dfs(
        chosen: &mut Vec<usize>,
        start: usize,
        t: usize,
        m: usize,
        color: &mut dyn FnMut(usize, usize) -> u32,
        fixed: Option<u32>,
    ) -> bool {
        if chosen.len() == m {
            return true;
        }
        for v in start..t {
            let mut col = fixed;
            let mut ok = true;
            for &u in chosen.iter() {
                let cuv = color(u, v);
                match col {
                    None => col = Some(cuv),
                    Some(c) if c == cuv => {}
                    Some(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                chosen.push(v);
                if dfs(chosen, v + 1, t, m, color, col) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(m);
    if dfs(&mut chosen, 0, t, m, color, None) {
        Some(chosen)
    } else {
        None
    }
}

fn eval_u64(e: &BoundExpr) -> Option<u64> {
    e.eval(CONST_DIGITS).and_then(|v| u64::try_from(v).ok())
}

/// From an all-type-1 cable of Ramsey length, a multicover of the base:
/// color each pair (i, j) by the rank of the member of X_j without
/// neighbours in Y_i, take a monochromatic index subset of size m, and
/// collect the pairs (x_j, N_j). The collected family is verified as a
/// multicover; a verification failure is an audit case, since the cable
/// axioms alone do not force every clause.
pub fn type1_extract_multicover(
    g: &Graph,
    cable: &Cable,
    m: usize,
) -> Result<(Multicover, Transcript), EngineError> {
    let types = cable_pair_types(g, cable).map_err(cable_error)?;
    if let Some(((i, j), _)) = types.iter().find(|(_, ty)| *ty != PairType::Type1) {
        return Err(EngineError::Precondition(format!(
            "pair ({i},{j}) is not type 1"
        )));
    }
    let t = cable.length();
    let needed = eval_u64(&ramsey_upper(cable.h as u64, &BoundExpr::int(m as u64)));
    match needed {
        Some(n) if (t as u64) < n => {
            return Err(EngineError::Precondition(format!(
                "cable length {t} is below the Ramsey threshold {n}"
            )))
        }
        None => {
            return Err(EngineError::Precondition(
                "Ramsey threshold does not evaluate".into(),
            ))
        }
        _ => {}
    }
    let mut tr = Transcript::default();
    let orderings: Vec<Vec<usize>> = cable.cliques.iter().map(|x| x.to_vec()).collect();
    let mut f = |i: usize, j: usize| -> u32 {
        orderings[j]
            .iter()
            .position(|&x| g.neighbors(x).is_disjoint(&cable.y_sets[i]))
            .expect("type 1 pair has an anticomplete member") as u32
    };
    let idx = monochromatic_subset(t, m, &mut f)
        .ok_or_else(|| EngineError::step("ramsey", "no monochromatic index subset"))?;
    let rank = if m >= 2 { f(idx[0], idx[1]) as usize } else { 0 };
    tr.record("monochromatic-indices", &idx, &[rank], &[]);

    let mut n_sets = std::collections::BTreeMap::new();
    let mut x_set = VertexSet::empty(g.n());
    for &j in &idx {
        let x_j = orderings[j][rank];
        x_set.insert(x_j);
        n_sets.insert(x_j, cable.n_sets[j].clone());
    }
    let mc = Multicover {
        x_set,
        n_sets,
        c: cable.base.clone(),
    };
    match verify_multicover(g, &mc, false) {
        Verdict::Ok => {
            tr.record("extracted-multicover", &mc.x_set.to_vec(), &[mc.c.len()], &[]);
            Ok((mc, tr))
        }
        Verdict::Violation(v) => Err(EngineError::Audit(format!(
            "collected pairs (x_j, N_j) are not a multicover: {} at {:?}; \
             the cable axioms do not force this clause",
            v.clause, v.witness
        ))),
    }
}

/// From an all-type-2 cable of length ell-3 whose base beats (ell-3)*tau in
/// chromatic number, a hole of length exactly ell: descend the chain
/// z_t, z_{t-1}, ..., z_1, escape through a base vertex missed by every
/// C_i, and close through X_1 and X_t.
pub fn type2_construct_hole(
    g: &Graph,
    cable: &Cable,
    ell: usize,
    tau: u32,
    limits: &SolverLimits,
) -> Result<(Hole, Transcript), EngineError> {
    if ell < 5 {
        return Err(EngineError::Precondition("ell must be at least 5".into()));
    }
    let t = cable.length();
    if t != ell - 3 {
        return Err(EngineError::Precondition(format!(
            "cable length {t} differs from ell - 3 = {}",
            ell - 3
        )));
    }
    let types = cable_pair_types(g, cable).map_err(cable_error)?;
    if let Some(((i, j), _)) = types.iter().find(|(_, ty)| *ty != PairType::Type2) {
        return Err(EngineError::Precondition(format!(
            "pair ({i},{j}) is not type 2"
        )));
    }
    let mut chi = ChiSolver::new(g, *limits, CACHE_CAP);
    let mut tr = Transcript::default();
    let threshold = t as u32 * tau;
    let chi_c = chi.chi_of_subset(&cable.base)?;
    if chi_c <= threshold {
        return Err(EngineError::Precondition(format!(
            "chi(C) = {chi_c} does not exceed (ell-3)*tau = {threshold}"
        )));
    }
    tr.record("base", &[], &[cable.base.len()], &[chi_c]);

    // the chain z_t in Y_{t,t}, z_{t-1} in Z_{t-1,t}, ..., z_1 in Z_{1,2}
    // (1-based indices as in the argument; zs[i] holds z_{i+1})
    let mut zs = vec![0usize; t];
    zs[t - 1] = cable.y_sets[t - 1]
        .min()
        .ok_or_else(|| EngineError::step("choose-z_t", "Y_{t,t} is empty"))?;
    for i in (0..t - 1).rev() {
        let z_next = zs[i + 1];
        zs[i] = cable
            .z(i, i + 1, g.n())
            .intersection(g.neighbors(z_next))
            .min()
            .ok_or_else(|| {
                EngineError::step(
                    "chain-step",
                    format!("no vertex of Z_{{{},{}}} is adjacent to the chain", i + 1, i + 2),
                )
            })?;
    }
    let z_tm1 = if t >= 2 { zs[t - 2] } else { zs[t - 1] };
    let x_t = cable.cliques[t - 1]
        .difference(g.neighbors(z_tm1))
        .min()
        .ok_or_else(|| EngineError::step("choose-x_t", "z_{t-1} is complete to X_t"))?;
    tr.record("chain", &zs, &[], &[]);

    // C_i: base vertices sharing a Y_{1,t}-neighbour with z_i; each must have
    // chi at most tau, certified through the (h+1)-clique X_i + z_i
    let mut union_ci = VertexSet::empty(g.n());
    for i in 0..t {
        let mut c_i = VertexSet::empty(g.n());
        for v in cable.base.iter() {
            let common = cable.y_sets[0]
                .intersection(g.neighbors(v))
                .intersection(g.neighbors(zs[i]));
            if !common.is_empty() {
                c_i.insert(v);
            }
        }
        let mut clique = cable.cliques[i].clone();
        clique.insert(zs[i]);
        let clique_ok = g.is_clique(&clique).is_ok();
        tr.hypothesis("chain-vertex-completes-clique", clique_ok);
        if clique_ok {
            let n2 = g.n2(&clique).expect("verified clique");
            let chi_n2 = chi.chi_of_subset(&n2)?;
            tr.hypothesis("tau-bound-on-extended-clique", chi_n2 <= tau);
        }
        let chi_ci = chi.chi_of_subset(&c_i)?;
        if chi_ci > tau {
            return Err(EngineError::Precondition(format!(
                "chi(C_{}) = {chi_ci} exceeds tau = {tau}",
                i + 1
            )));
        }
        tr.record("chain-neighbourhood", &[zs[i]], &[c_i.len()], &[chi_ci]);
        union_ci = union_ci.union(&c_i);
    }

    let u = cable
        .base
        .difference(&union_ci)
        .min()
        .ok_or_else(|| EngineError::step("choose-u", "every base vertex lies in some C_i"))?;
    let v = cable.y_sets[0]
        .intersection(g.neighbors(u))
        .min()
        .ok_or_else(|| EngineError::step("choose-v", "Y_{1,t} misses u"))?;
    let x_1 = cable.cliques[0]
        .intersection(g.neighbors(v))
        .intersection(g.neighbors(zs[0]))
        .min()
        .ok_or_else(|| {
            EngineError::step("choose-x_1", "no member of X_1 sees both v and z_1")
        })?;
    tr.record("escape", &[u, v, x_1, x_t], &[], &[]);

    let mut cycle = vec![v, x_1];
    cycle.extend(zs.iter().copied());
    cycle.push(x_t);
    let hole = Hole { cycle };
    if hole.len() != ell {
        return Err(EngineError::Audit(format!(
            "constructed cycle has length {} instead of ell = {ell}",
            hole.len()
        )));
    }
    check_hole(g, &hole).map_err(|e| EngineError::Audit(format!("cycle not induced: {e}")))?;
    Ok((hole, tr))
}

#[derive(Debug, Clone, Copy)]
pub struct GrowCableParams {
    pub h: usize,
    pub kappa: u32,
    pub tau: u32,
    /// sigma_{s+1}: the chromatic target for the new base.
    pub sigma_next: u32,
}

/// One growth step of the cable-building induction: a cable of length s
/// becomes a cable of length s+1 whose base keeps chromatic number above
/// `sigma_next`. Clique control is treated operationally: the h-clique
/// search either succeeds or, when the chromatic slack proves it should
/// have, reports a falsification.
pub fn grow_cable(
    g: &Graph,
    cable: &Cable,
    p: &GrowCableParams,
    phi: &mut dyn FnMut(u64) -> Option<u64>,
    limits: &SolverLimits,
) -> Result<(Cable, Transcript), EngineError> {
    let _ = cable_pair_types(g, cable).map_err(cable_error)?;
    if p.h != cable.h {
        return Err(EngineError::Precondition(format!(
            "cable has h = {} but params say {}",
            cable.h, p.h
        )));
    }
    let s = cable.length();
    let mut chi = ChiSolver::new(g, *limits, CACHE_CAP);
    let mut tr = Transcript::default();
    let thr = p.tau as u64 + p.h as u64 * p.kappa as u64;
    // d_i = (h+1)^(s-i) * sigma_next for 0 <= i <= s
    let mut d = vec![0u64; s + 1];
    for i in 0..=s {
        d[i] = (p.h as u64 + 1)
            .checked_pow((s - i) as u32)
            .and_then(|pw| pw.checked_mul(p.sigma_next as u64))
            .ok_or_else(|| {
                EngineError::Precondition("chromatic targets overflow u64".into())
            })?;
    }

    // fingerprint the base by which chain neighbourhoods C_{i,v} are
    // chromatically heavy, and keep the heaviest fiber C_1
    let chi_c = chi.chi_of_subset(&cable.base)?;
    let mut fibers: std::collections::BTreeMap<Vec<bool>, VertexSet> =
        std::collections::BTreeMap::new();
    for v in cable.base.iter() {
        let mut f = Vec::with_capacity(s);
        for i in 0..s {
            let mut c_iv = VertexSet::empty(g.n());
            for u in cable.base.iter() {
                if u != v && !g.adjacent(u, v) {
                    let common = cable.y_sets[i]
                        .intersection(g.neighbors(u))
                        .intersection(g.neighbors(v));
                    if !common.is_empty() {
                        c_iv.insert(u);
                    }
                }
            }
            f.push(chi.chi_of_subset(&c_iv)? as u64 > thr);
        }
        fibers
            .entry(f)
            .or_insert_with(|| VertexSet::empty(g.n()))
            .insert(v);
    }
    let mut best: Option<(Vec<bool>, VertexSet, u32)> = None;
    for (key, set) in &fibers {
        let c = chi.chi_of_subset(set)?;
        if best.as_ref().map_or(true, |(_, _, b)| c > *b) {
            best = Some((key.clone(), set.clone(), c));
        }
    }
    let (_, c1, chi_c1) = best
        .ok_or_else(|| EngineError::step("fingerprint-fiber", "the base is empty"))?;
    tr.record("fingerprint-fiber", &[], &[fibers.len(), c1.len()], &[chi_c, chi_c1]);

    // clique control inside H = G[C_1]
    let d0_u32 = u32::try_from(d[0])
        .map_err(|_| EngineError::Precondition("d_0 exceeds u32".into()))?;
    let (h_sub, map) = g.induced_subgraph(&c1).expect("valid subset");
    let mut chi_sub = ChiSolver::new(&h_sub, *limits, CACHE_CAP);
    let clique_sub = match find_clique_with_large_n2(&h_sub, p.h, d0_u32, &mut chi_sub)? {
        Some(x) => x,
        None => {
            return match phi(d[0]) {
                Some(bound) if chi_c1 as u64 > bound => Err(EngineError::Audit(format!(
                    "clique control falsified: chi(C_1) = {chi_c1} exceeds phi(d_0) = {bound} \
                     but no {}-clique of G[C_1] has chi(N^2) > {}",
                    p.h, d[0]
                ))),
                _ => Err(EngineError::step(
                    "find-clique",
                    format!(
                        "no {}-clique of G[C_1] has chi(N^2) > {}, and chi(C_1) = {chi_c1} \
                         leaves clique control unfalsified",
                        p.h, d[0]
                    ),
                )),
            };
        }
    };
    let x_new = VertexSet::from_iter(g.n(), clique_sub.iter().map(|v| map[v]));
    let n_new = VertexSet::from_iter(
        g.n(),
        h_sub
            .n1(&clique_sub)
            .expect("clique")
            .iter()
            .map(|v| map[v]),
    );
    let d0_set = VertexSet::from_iter(
        g.n(),
        h_sub
            .n2(&clique_sub)
            .expect("clique")
            .iter()
            .map(|v| map[v]),
    );
    for x in x_new.iter() {
        let c_n1 = chi.chi_of_subset(g.neighbors(x))?;
        tr.hypothesis("kappa-bound-on-neighbourhood", c_n1 <= p.kappa);
    }
    tr.record(
        "controlled-clique",
        &x_new.to_vec(),
        &[n_new.len(), d0_set.len()],
        &[chi.chi_of_subset(&d0_set)?],
    );

    // per lower index: case 1 narrows to one U_x, case 2 keeps the vertices
    // leaning only on W and hands Z the rest
    let mut d_cur = d0_set;
    let mut y_new: Vec<VertexSet> = Vec::with_capacity(s + 1);
    let mut z_new: Vec<ZEntry> = Vec::new();
    for i in 0..s {
        let di = d[i + 1];
        let mut w = VertexSet::empty(g.n());
        for y in cable.y_sets[i].iter() {
            if x_new.iter().all(|x| g.adjacent(y, x)) {
                w.insert(y);
            }
        }
        let mut case1: Option<(usize, VertexSet, u32)> = None;
        let mut union_u = VertexSet::empty(g.n());
        for x in x_new.iter() {
            let mut u_x = VertexSet::empty(g.n());
            for u in d_cur.iter() {
                let witness = cable.y_sets[i]
                    .intersection(g.neighbors(u))
                    .difference(g.neighbors(x));
                if !witness.is_empty() {
                    u_x.insert(u);
                }
            }
            let chi_ux = chi.chi_of_subset(&u_x)?;
            if case1.is_none() && chi_ux as u64 > di {
                case1 = Some((x, u_x.clone(), chi_ux));
            }
            union_u = union_u.union(&u_x);
        }
        match case1 {
            Some((x, u_x, chi_ux)) => {
                tr.record("case1", &[x], &[u_x.len()], &[chi_ux]);
                d_cur = u_x;
                y_new.push(cable.y_sets[i].difference(g.neighbors(x)));
            }
            None => {
                d_cur = d_cur.difference(&union_u);
                let z = cable.y_sets[i].difference(&w);
                if !g.covers(&z, &n_new).unwrap_or(false) {
                    return Err(EngineError::Audit(format!(
                        "case 2 at index {i}: Z does not cover the new N; \
                         the covering argument fails on this instance"
                    )));
                }
                tr.record("case2", &[], &[w.len(), z.len(), d_cur.len()], &[]);
                y_new.push(w);
                z_new.push(ZEntry { i, j: s, set: z });
            }
        }
    }
    y_new.push(n_new.clone());

    let mut cliques = cable.cliques.clone();
    cliques.push(x_new);
    let mut n_sets = cable.n_sets.clone();
    n_sets.push(n_new);
    let mut z_sets = cable.z_sets.clone();
    z_sets.append(&mut z_new);
    let out = Cable {
        h: cable.h,
        cliques,
        n_sets,
        y_sets: y_new,
        z_sets,
        base: d_cur,
    };
    let report = crate::structures::verify_cable(g, &out);
    if let Some(v) = report.first_violation() {
        return Err(EngineError::Audit(format!(
            "grown cable rejected: {} at {:?}",
            v.clause, v.witness
        )));
    }
    let chi_base = chi.chi_of_subset(&out.base)?;
    if chi_base as u64 <= p.sigma_next as u64 {
        return Err(EngineError::Audit(format!(
            "new base has chi = {chi_base}, not above the target {}",
            p.sigma_next
        )));
    }
    tr.record("grown-cable", &[], &[out.length(), out.base.len()], &[chi_base]);
    Ok((out, tr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_planted_cable;
    use crate::structures::cable_pair_type;

    /// Reference implementation: lexicographically first monochromatic subset
    /// by scanning all sorted index subsets in lexicographic order.
    fn naive_mono(t: usize, m: usize, color: &mut dyn FnMut(usize, usize) -> u32) -> Option<Vec<usize>> {
        fn rec(
            chosen: &mut Vec<usize>,
            start: usize,
            t: usize,
            m: usize,
            color: &mut dyn FnMut(usize, usize) -> u32,
        ) -> bool {
            if chosen.len() == m {
                let ok = (0..chosen.len()).all(|a| {
                    (a + 1..chosen.len())
                        .all(|b| color(chosen[a], chosen[b]) == color(chosen[0], chosen[1]))
                });
                return ok;
            }
            for v in start..t {
                chosen.push(v);
                if rec(chosen, v + 1, t, m, color) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        if rec(&mut chosen, 0, t, m, color) {
            Some(chosen)
        } else {
            None
        }
    }

    #[test]
    fn monochromatic_subset_matches_naive_scan() {
        for t in 0..8 {
            for m in 1..5 {
                let mut col = |u: usize, v: usize| ((u * 7 + v * 13) % 3) as u32;
                assert_eq!(
                    monochromatic_subset(t, m, &mut col),
                    naive_mono(t, m, &mut col),
                    "t = {t}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn monochromatic_subset_sees_the_ramsey_threshold() {
        // pentagon coloring: pairs at circular distance 1 vs 2 on 5 points
        // have no monochromatic triangle, since R(3,3) = 6
        let mut pentagon = |u: usize, v: usize| {
            let d = (v - u) % 5;
            u32::from(d == 2 || d == 3)
        };
        assert_eq!(monochromatic_subset(5, 3, &mut pentagon), None);
        // on 6 points any 2-coloring has one
        let mut any = |u: usize, v: usize| ((u + v) % 2) as u32;
        let found = monochromatic_subset(6, 3, &mut any).unwrap();
        let c = any(found[0], found[1]);
        assert!(found.windows(2).all(|w| w[0] < w[1]));
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(any(found[a], found[b]), c);
            }
        }
    }

    #[test]
    fn type1_extraction_from_planted_cables() {
        use crate::structures::PairType;
        // h = 1: the Ramsey threshold for m = 3 is 3, met exactly
        let (g, cable) = gen_planted_cable(1, 3, &[PairType::Type1; 3], 2, 7).unwrap();
        let (mc, _) = type1_extract_multicover(&g, &cable, 3).unwrap();
        assert_eq!(mc.x_set.len(), 3);
        assert_eq!(mc.c, cable.base);
        assert!(verify_multicover(&g, &mc, false).is_ok());
        for x in mc.x_set.iter() {
            assert!(cable.cliques.iter().any(|cl| cl.contains(x)));
        }

        // h = 2 needs length 2^(2m+1) = 32 for m = 3
        let types = vec![PairType::Type1; 32 * 31 / 2];
        let (g, cable) = gen_planted_cable(2, 32, &types, 2, 11).unwrap();
        let (mc, tr) = type1_extract_multicover(&g, &cable, 3).unwrap();
        assert_eq!(mc.x_set.len(), 3);
        assert!(verify_multicover(&g, &mc, false).is_ok());
        let step = &tr.steps[0];
        assert_eq!(step.name, "monochromatic-indices");
        assert_eq!(step.witnesses.len(), 3);
        assert!(step.witnesses.windows(2).all(|w| w[0] < w[1]));

        // below the threshold the engine refuses to run
        let (g, cable) = gen_planted_cable(2, 3, &[PairType::Type1; 3], 2, 11).unwrap();
        assert!(matches!(
            type1_extract_multicover(&g, &cable, 3),
            Err(EngineError::Precondition(_))
        ));
        // and a type-2 pair disqualifies the cable
        let (g, cable) = gen_planted_cable(1, 2, &[PairType::Type2], 2, 11).unwrap();
        assert!(matches!(
            type1_extract_multicover(&g, &cable, 2),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn type2_cable_yields_a_hole_of_length_exactly_ell() {
        use crate::structures::PairType;
        // t = 2, ell = 5
        let (g, cable) = gen_planted_cable(1, 2, &[PairType::Type2], 3, 5).unwrap();
        let (hole, _) =
            type2_construct_hole(&g, &cable, 5, 1, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(hole.len(), 5);
        check_hole(&g, &hole).unwrap();

        // t = 3, ell = 6, with two cliques per rung
        let (g, cable) = gen_planted_cable(2, 3, &[PairType::Type2; 3], 4, 9).unwrap();
        let (hole, _) =
            type2_construct_hole(&g, &cable, 6, 1, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(hole.len(), 6);
        check_hole(&g, &hole).unwrap();
    }

    #[test]
    fn type2_preconditions() {
        use crate::structures::PairType;
        let (g, cable) = gen_planted_cable(1, 2, &[PairType::Type2], 3, 5).unwrap();
        // ell too small, wrong length, and chromatic slack exhausted
        assert!(matches!(
            type2_construct_hole(&g, &cable, 4, 1, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        assert!(matches!(
            type2_construct_hole(&g, &cable, 6, 1, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        assert!(matches!(
            type2_construct_hole(&g, &cable, 5, 2, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        // a type-1 pair disqualifies the cable
        let (g, cable) = gen_planted_cable(1, 2, &[PairType::Type1], 3, 5).unwrap();
        assert!(matches!(
            type2_construct_hole(&g, &cable, 5, 1, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
    }

    /// Apex 0 sees the two cover vertices 1 and 2; they in turn cover the
    /// triangle-free tail 3-4-5, with 4-5 completing a triangle through 1.
    fn two_level_fixture() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (3, 4),
                (4, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn grow_cable_twice_from_the_base() {
        let g = two_level_fixture();
        let mut phi = |_: u64| None;
        let start = Cable::base_only(g.vertices(), 1);
        let p = GrowCableParams {
            h: 1,
            kappa: 2,
            tau: 0,
            sigma_next: 1,
        };
        let (c1, _) = grow_cable(&g, &start, &p, &mut phi, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(c1.length(), 1);
        assert_eq!(c1.cliques[0].to_vec(), vec![0]);
        assert_eq!(c1.n_sets[0].to_vec(), vec![1, 2]);
        assert_eq!(c1.y_sets[0], c1.n_sets[0]);
        assert_eq!(c1.base.to_vec(), vec![3, 4, 5]);

        let p2 = GrowCableParams {
            h: 1,
            kappa: 2,
            tau: 0,
            sigma_next: 0,
        };
        let (c2, tr) = grow_cable(&g, &c1, &p2, &mut phi, &SolverLimits::UNLIMITED).unwrap();
        assert_eq!(c2.length(), 2);
        // the first rung survives untouched except for its Y set shrinking
        assert_eq!(c2.cliques[0], c1.cliques[0]);
        assert_eq!(c2.n_sets[0], c1.n_sets[0]);
        assert!(c2.y_sets[0].is_subset(&c1.y_sets[0]));
        assert_eq!(c2.cliques[1].to_vec(), vec![3]);
        assert_eq!(c2.n_sets[1].to_vec(), vec![4]);
        assert_eq!(c2.y_sets[0].to_vec(), vec![2]);
        assert_eq!(c2.base.to_vec(), vec![5]);
        assert_eq!(cable_pair_type(&g, &c2, 0, 1).unwrap(), PairType::Type1);
        assert!(tr.steps.iter().any(|s| s.name == "case1"));
    }

    #[test]
    fn grow_cable_preconditions_and_failures() {
        let g = two_level_fixture();
        let mut phi = |_: u64| None;
        let start = Cable::base_only(g.vertices(), 2);
        // h mismatch between cable and parameters
        let p = GrowCableParams {
            h: 1,
            kappa: 2,
            tau: 0,
            sigma_next: 1,
        };
        assert!(matches!(
            grow_cable(&g, &start, &p, &mut phi, &SolverLimits::UNLIMITED),
            Err(EngineError::Precondition(_))
        ));
        // an unreachable chromatic target makes the clique search miss; with
        // no evaluable control bound this is a step failure, not an audit
        let p = GrowCableParams {
            h: 1,
            kappa: 2,
            tau: 0,
            sigma_next: 100,
        };
        let start = Cable::base_only(g.vertices(), 1);
        assert!(matches!(
            grow_cable(&g, &start, &p, &mut phi, &SolverLimits::UNLIMITED),
            Err(EngineError::StepFailed { .. })
        ));
        // with a control bound below the observed chromatic number, the same
        // miss is flagged as a falsification candidate
        let mut tight_phi = |_: u64| Some(0u64);
        assert!(matches!(
            grow_cable(&g, &start, &p, &mut tight_phi, &SolverLimits::UNLIMITED),
            Err(EngineError::Audit(_))
        ));
    }
}
