//! Acceptance suite: one test per top-level acceptance criterion. Each test
//! writes a single "criterion N: pass|fail" line directly to the stdout
//! handle (bypassing libtest capture) and then asserts.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chibound_core::bounds::{gettick_constants, phi1, ramsey_upper, sigma_ladder, BoundExpr};
use chibound_core::engines::{
    longhole_decompose, monochromatic_subset, type2_construct_hole, DecomposeOutcome,
};
use chibound_core::gen::{gen_chordal, gen_gnp, gen_planted_cable};
use chibound_core::graph::{Graph, VertexSet};
use chibound_core::solvers::{
    chromatic_number, longest_hole, omega, ChiSolver, SolverLimits,
};
use chibound_core::structures::{
    verify_cable, verify_cover, verify_impression, verify_multicover, verify_tick, Cover,
    Impression, Multicover, PairType, Tick, Verdict,
};
use chibound_core::verify::{check_coloring, check_hole};

/// Print through the raw stdout handle so the line survives libtest capture.
fn emit_line(line: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").ok();
}

fn criterion(n: usize, result: Result<(), String>) {
    let ok = result.is_ok();
    emit_line(&format!(
        "criterion {n}: {}",
        if ok { "pass" } else { "fail" }
    ));
    if let Err(detail) = result {
        panic!("criterion {n} failed: {detail}");
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

// ---------------------------------------------------------------- criterion 1

fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() <= best {
            continue;
        }
        let clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)));
        if clique {
            best = verts.len();
        }
    }
    best
}

fn brute_chi(g: &Graph) -> u32 {
    fn colorable(g: &Graph, colors: &mut Vec<u32>, v: usize, k: u32) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.adjacent(u, v) || colors[u] != c) {
                colors[v] = c;
                if colorable(g, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    for k in 1..=g.n() as u32 {
        let mut colors = vec![0u32; g.n()];
        if colorable(g, &mut colors, 0, k) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Longest subset inducing a single cycle (every vertex of degree 2 within
/// the subset, connected), or None.
fn brute_longest_hole(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() < 4 || Some(verts.len()) <= best {
            continue;
        }
        let degrees_ok = verts
            .iter()
            .all(|&u| verts.iter().filter(|&&v| g.adjacent(u, v)).count() == 2);
        if !degrees_ok {
            continue;
        }
        // connected 2-regular graph = one cycle
        let mut seen = vec![verts[0]];
        let mut frontier = vec![verts[0]];
        while let Some(u) = frontier.pop() {
            for &v in &verts {
                if g.adjacent(u, v) && !seen.contains(&v) {
                    seen.push(v);
                    frontier.push(v);
                }
            }
        }
        if seen.len() == verts.len() {
            best = Some(verts.len());
        }
    }
    best
}

#[test]
fn criterion_1_solvers_match_brute_force_on_all_six_vertex_graphs() {
    criterion(1, (|| {
        let limits = SolverLimits::UNLIMITED;
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .collect();
        assert_eq!(pairs.len(), 15);
        for mask in 0u32..(1 << 15) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(6, &edges).map_err(|e| e.to_string())?;

            let w = omega(&g, &limits).expect_exact("omega").size;
            let bw = brute_omega(&g);
            ensure!(w == bw, "omega {w} != brute {bw} on mask {mask}");

            let chi = chromatic_number(&g, &limits).expect_exact("chi");
            let bchi = brute_chi(&g);
            ensure!(chi.chi == bchi, "chi {} != brute {bchi} on mask {mask}", chi.chi);
            check_coloring(&g, &chi.certificate)
                .map_err(|e| format!("certificate on mask {mask}: {e}"))?;

            let h = longest_hole(&g, &limits).expect_exact("longest hole");
            let hl = h.as_ref().map(|h| h.len());
            let bh = brute_longest_hole(&g);
            ensure!(hl == bh, "hole {hl:?} != brute {bh:?} on mask {mask}");
            if let Some(h) = &h {
                check_hole(&g, h).map_err(|e| format!("hole cert on mask {mask}: {e}"))?;
            }
        }
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 2

#[test]
fn criterion_2_chordal_generator_is_hole_free_and_perfect() {
    criterion(2, (|| {
        let limits = SolverLimits::UNLIMITED;
        let mut rng = ChaCha8Rng::seed_from_u64(0xc2);
        for i in 0..1000u64 {
            let n = rng.gen_range(4..=40);
            let width = rng.gen_range(2..=5.min(n));
            let g = gen_chordal(n, width, 0x5eed ^ i).map_err(|e| e.to_string())?;
            let h = longest_hole(&g, &limits).expect_exact("longest hole");
            ensure!(h.is_none(), "chordal sample {i} (n={n}) has a hole");
            let w = omega(&g, &limits).expect_exact("omega").size;
            let chi = chromatic_number(&g, &limits).expect_exact("chi").chi;
            ensure!(
                chi as usize == w,
                "chordal sample {i} (n={n}): chi {chi} != omega {w}"
            );
        }
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 3

#[test]
fn criterion_3_decomposition_always_returns_coloring_or_long_hole() {
    criterion(3, (|| {
        let limits = SolverLimits::UNLIMITED;
        let ell = 5usize;
        let mut rng = ChaCha8Rng::seed_from_u64(0xc3);
        let densities = [0.08, 0.15, 0.25];
        for i in 0..500u64 {
            let n = rng.gen_range(5..=25);
            let p = densities[rng.gen_range(0..densities.len())];
            let g = gen_gnp(n, p, gnp_seed(i));
            // derive the tightest kappa/tau the preconditions accept
            let mut chi = ChiSolver::new(&g, limits, 1 << 12);
            let mut kappa = 0u32;
            let mut tau = 0u32;
            for v in 0..g.n() {
                kappa = kappa.max(chi.chi_of_subset(g.neighbors(v)).map_err(|e| e.to_string())?);
                tau = tau.max(chi.chi_of_subset(&g.n2_vertex(v)).map_err(|e| e.to_string())?);
            }
            let (out, _tr) =
                longhole_decompose(&g, ell, kappa, tau, &limits).map_err(|e| {
                    format!("sample {i} (n={n}, p={p}, kappa={kappa}, tau={tau}): {e}")
                })?;
            match out {
                DecomposeOutcome::Coloring(c) => {
                    check_coloring(&g, &c).map_err(|e| format!("sample {i}: {e}"))?;
                    let cap = 2 * (ell as u32 - 3) * (kappa + tau) + 1;
                    ensure!(
                        c.num_colors <= cap,
                        "sample {i}: {} colors exceeds cap {cap}",
                        c.num_colors
                    );
                }
                DecomposeOutcome::Hole(h) => {
                    check_hole(&g, &h).map_err(|e| format!("sample {i}: {e}"))?;
                    ensure!(h.len() >= ell, "sample {i}: hole length {} < {ell}", h.len());
                }
            }
        }
        Ok(())
    })());
}

// seed spreading for gnp samples
fn gnp_seed(i: u64) -> u64 {
    i.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0xc3c3
}

// ---------------------------------------------------------------- criterion 4

#[test]
fn criterion_4_planted_type2_cables_yield_holes_of_exact_length() {
    criterion(4, (|| {
        let limits = SolverLimits::UNLIMITED;
        let mut count = 0;
        for &h in &[1usize, 2] {
            for &t in &[2usize, 3] {
                let types = vec![PairType::Type2; t * (t - 1) / 2];
                for seed in 0..25u64 {
                    let (g, cable) = gen_planted_cable(h, t, &types, t + 1, 0xcab1e ^ seed)
                        .map_err(|e| e.to_string())?;
                    let report = verify_cable(&g, &cable);
                    ensure!(
                        report.is_ok(),
                        "planted cable h={h} t={t} seed={seed} does not verify: {:?}",
                        report.first_violation()
                    );
                    let ell = t + 3;
                    let (hole, _tr) = type2_construct_hole(&g, &cable, ell, 1, &limits)
                        .map_err(|e| format!("h={h} t={t} seed={seed}: {e}"))?;
                    check_hole(&g, &hole).map_err(|e| format!("h={h} t={t} seed={seed}: {e}"))?;
                    ensure!(
                        hole.len() == ell,
                        "h={h} t={t} seed={seed}: hole length {} != {ell}",
                        hole.len()
                    );
                    count += 1;
                }
            }
        }
        ensure!(count == 100, "expected 100 cables, ran {count}");
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 5

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let mut es = g.edges();
    es.push((u, v));
    Graph::from_edges(g.n(), &es).unwrap()
}

fn without_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let es: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !((a == u && b == v) || (a == v && b == u)))
        .collect();
    Graph::from_edges(g.n(), &es).unwrap()
}

fn expect_clause(v: &Verdict, want: &str, what: &str) -> Result<(), String> {
    match v.clause() {
        Some(c) if c == want => Ok(()),
        Some(c) => Err(format!("{what}: clause {c}, expected {want}")),
        None => Err(format!("{what}: accepted, expected {want}")),
    }
}

/// A valid cover plus one spare isolated vertex at index n-1.
fn cover_instance(rng: &mut ChaCha8Rng) -> (Graph, Cover) {
    let a = rng.gen_range(2..5); // |N|
    let b = rng.gen_range(3..7); // |C|
    let n = 1 + a + b + 1;
    let mut edges: Vec<(usize, usize)> = (1..=a).map(|v| (0, v)).collect();
    for cvtx in a + 1..=a + b {
        let deg = rng.gen_range(1..=2.min(a));
        let mut picked = Vec::new();
        while picked.len() < deg {
            let nb = rng.gen_range(1..=a);
            if !picked.contains(&nb) {
                picked.push(nb);
                edges.push((cvtx, nb));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    let cover = Cover {
        x: 0,
        n_set: VertexSet::from_iter(n, 1..=a),
        c: VertexSet::from_iter(n, a + 1..=a + b),
    };
    (g, cover)
}

fn cover_mutations(rng: &mut ChaCha8Rng, kind: usize) -> Result<(), String> {
    let (g, cover) = cover_instance(rng);
    ensure!(verify_cover(&g, &cover).is_ok(), "valid cover rejected");
    let spare = g.n() - 1;
    let c0 = cover.c.min().unwrap();
    let (g2, bad, want) = match kind {
        0 => {
            let mut bad = cover.clone();
            bad.n_set.insert(spare);
            (g.clone(), bad, "cover/N-not-neighbours-of-x")
        }
        1 => {
            let mut bad = cover.clone();
            bad.c.insert(cover.x);
            (g.clone(), bad, "cover/C-overlaps-N-or-x")
        }
        2 => (with_edge(&g, cover.x, c0), cover.clone(), "cover/x-not-anticomplete-to-C"),
        _ => {
            let mut bad = cover.clone();
            bad.c.insert(spare);
            (g.clone(), bad, "cover/N-does-not-cover-C")
        }
    };
    expect_clause(&verify_cover(&g2, &bad), want, "cover mutation")
}

/// A valid two-part multicover with stable N-sets.
fn multicover_instance(rng: &mut ChaCha8Rng) -> (Graph, Multicover) {
    let a0 = rng.gen_range(2..4);
    let a1 = rng.gen_range(2..4);
    let b = rng.gen_range(3..6);
    let n0_start = 2;
    let n1_start = 2 + a0;
    let c_start = 2 + a0 + a1;
    let n = c_start + b;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in n0_start..n0_start + a0 {
        edges.push((0, v));
    }
    for v in n1_start..n1_start + a1 {
        edges.push((1, v));
    }
    for cvtx in c_start..n {
        edges.push((cvtx, n0_start + rng.gen_range(0..a0)));
        edges.push((cvtx, n1_start + rng.gen_range(0..a1)));
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    let mut n_sets = BTreeMap::new();
    n_sets.insert(0, VertexSet::from_iter(n, n0_start..n0_start + a0));
    n_sets.insert(1, VertexSet::from_iter(n, n1_start..n1_start + a1));
    let mc = Multicover {
        x_set: VertexSet::from_iter(n, [0, 1]),
        n_sets,
        c: VertexSet::from_iter(n, c_start..n),
    };
    (g, mc)
}

fn multicover_mutations(rng: &mut ChaCha8Rng, kind: usize) -> Result<(), String> {
    let (g, mc) = multicover_instance(rng);
    ensure!(
        verify_multicover(&g, &mc, true).is_ok(),
        "valid multicover rejected"
    );
    let n0: Vec<usize> = mc.n_sets[&0].to_vec();
    let (g2, bad, stable, want) = match kind {
        0 => (with_edge(&g, 0, 1), mc.clone(), false, "multicover/X-not-stable"),
        1 => (
            with_edge(&g, 1, n0[0]),
            mc.clone(),
            false,
            "multicover/other-x-adjacent-to-Nx",
        ),
        2 => {
            let mut bad = mc.clone();
            let moved = bad.n_sets.remove(&1).unwrap();
            bad.n_sets.insert(n0[0], moved);
            (g.clone(), bad, false, "multicover/N-keys-differ-from-X")
        }
        _ => (
            with_edge(&g, n0[0], n0[1]),
            mc.clone(),
            true,
            "multicover/Nx-not-stable",
        ),
    };
    expect_clause(&verify_multicover(&g2, &bad, stable), want, "multicover mutation")
}

/// A valid tick on X = {0..x-1}: knees x..2x-1, apex 2x, one spare vertex.
fn tick_instance(rng: &mut ChaCha8Rng) -> (Graph, Tick) {
    let x = rng.gen_range(2..4);
    let apex = 2 * x;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..x {
        edges.push((i, x + i));
        edges.push((x + i, apex));
    }
    if x >= 2 && rng.gen_bool(0.4) {
        edges.push((x, x + 1)); // knees may touch
    }
    let g = Graph::from_edges(apex + 2, &edges).unwrap();
    let tick = Tick {
        x_set: VertexSet::from_iter(apex + 2, 0..x),
        apex,
        knees: (0..x).map(|i| (i, x + i)).collect(),
    };
    (g, tick)
}

fn tick_mutations(rng: &mut ChaCha8Rng, kind: usize) -> Result<(), String> {
    let (g, tick) = tick_instance(rng);
    ensure!(verify_tick(&g, &tick).is_ok(), "valid tick rejected");
    let knee0 = tick.knees[&0];
    let (g2, bad, want) = match kind {
        0 => (with_edge(&g, tick.apex, 0), tick.clone(), "tick/apex-adjacent-to-X"),
        1 => (
            without_edge(&g, knee0, tick.apex),
            tick.clone(),
            "tick/knee-not-adjacent-to-apex",
        ),
        2 => (with_edge(&g, knee0, 1), tick.clone(), "tick/knee-adjacent-to-other-x"),
        _ => {
            let mut bad = tick.clone();
            bad.knees.insert(0, tick.apex);
            (g.clone(), bad, "tick/vertices-not-distinct")
        }
    };
    expect_clause(&verify_tick(&g2, &bad), want, "tick mutation")
}

/// A valid star impression: center image 0, middles 1..=L, leaves L+1..2L.
fn impression_instance(rng: &mut ChaCha8Rng) -> (Graph, Impression) {
    let l = rng.gen_range(2..4);
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut vmap = vec![0usize];
    for i in 0..l {
        let mid = 1 + i;
        let leaf = 1 + l + i;
        edges.push((0, mid));
        edges.push((mid, leaf));
        paths.push(vec![0, mid, leaf]);
        vmap.push(leaf);
    }
    let g = Graph::from_edges(1 + 2 * l, &edges).unwrap();
    let imp = Impression {
        pattern_n: l + 1,
        pattern_edges: (1..=l).map(|i| (0, i)).collect(),
        vertex_map: vmap,
        edge_paths: paths,
        order: 2,
    };
    (g, imp)
}

fn impression_mutations(rng: &mut ChaCha8Rng, kind: usize) -> Result<(), String> {
    let (g, imp) = impression_instance(rng);
    ensure!(verify_impression(&g, &imp).is_ok(), "valid impression rejected");
    let (g2, bad, want) = match kind {
        0 => {
            let mut bad = imp.clone();
            bad.order = 3;
            (g.clone(), bad, "impression/order-mismatch")
        }
        1 => {
            let mut bad = imp.clone();
            bad.vertex_map.pop();
            (g.clone(), bad, "impression/vertex-map-wrong-length")
        }
        2 => {
            let mut bad = imp.clone();
            bad.edge_paths[0] = vec![bad.vertex_map[0], bad.vertex_map[1]];
            (g.clone(), bad, "impression/path-too-short")
        }
        _ => (
            with_edge(&g, imp.vertex_map[1], imp.vertex_map[2]),
            imp.clone(),
            "impression/image-not-stable",
        ),
    };
    expect_clause(&verify_impression(&g2, &bad), want, "impression mutation")
}

fn cable_mutations(seed: u64, kind: usize) -> Result<(), String> {
    let (g, cable) = gen_planted_cable(2, 2, &[PairType::Type2], 2, 0xac ^ seed)
        .map_err(|e| e.to_string())?;
    ensure!(verify_cable(&g, &cable).is_ok(), "valid cable rejected");
    let n = g.n();
    let x0: Vec<usize> = cable.cliques[0].to_vec();
    let (g2, bad) = match kind {
        0 => (without_edge(&g, x0[0], x0[1]), cable.clone()),
        1 => (
            with_edge(&g, cable.base.min().unwrap(), x0[0]),
            cable.clone(),
        ),
        2 => {
            let z = cable.z(0, 1, n).min().unwrap();
            let mut g2 = g.clone();
            for xv in cable.cliques[1].iter() {
                if !g2.adjacent(z, xv) {
                    g2 = with_edge(&g2, z, xv);
                }
            }
            (g2, cable.clone())
        }
        _ => {
            let mut bad = cable.clone();
            bad.base.insert(cable.n_sets[0].min().unwrap());
            (g.clone(), bad)
        }
    };
    let want = [
        "cable/Xi-not-a-clique",
        "C1/base-not-anticomplete-to-X",
        "C3/Z-vertex-complete-to-Xj",
        "cable/base-overlaps",
    ][kind];
    let report = verify_cable(&g2, &bad);
    match report.first_violation() {
        Some(v) if v.clause == want => Ok(()),
        Some(v) => Err(format!("cable mutation {kind}: clause {}, expected {want}", v.clause)),
        None => Err(format!("cable mutation {kind}: accepted, expected {want}")),
    }
}

#[test]
fn criterion_5_seeded_mutations_are_rejected_with_the_right_clause() {
    criterion(5, (|| {
        for kind in 0..4 {
            for seed in 0..25u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 4 + kind as u64);
                cover_mutations(&mut rng, kind).map_err(|e| format!("seed {seed}: {e}"))?;
                let mut rng = ChaCha8Rng::seed_from_u64(0x100 + seed * 4 + kind as u64);
                multicover_mutations(&mut rng, kind).map_err(|e| format!("seed {seed}: {e}"))?;
                let mut rng = ChaCha8Rng::seed_from_u64(0x200 + seed * 4 + kind as u64);
                tick_mutations(&mut rng, kind).map_err(|e| format!("seed {seed}: {e}"))?;
                let mut rng = ChaCha8Rng::seed_from_u64(0x300 + seed * 4 + kind as u64);
                impression_mutations(&mut rng, kind).map_err(|e| format!("seed {seed}: {e}"))?;
                cable_mutations(seed, kind).map_err(|e| format!("seed {seed}: {e}"))?;
            }
        }
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 6

const BIG_DIGITS: usize = 20_000;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn tick_oracle(j: u32, k: u64, m: u64, c: u64, kappa: u64) -> (BigUint, BigUint) {
    let mut m_prev = big(1);
    let mut c_prev = big(1);
    for _ in 0..j {
        let m_j = big(2) * k * m * &m_prev;
        let bits = u64::try_from(&m_j).expect("small exponent");
        let two_pow = BigUint::from(1u32) << bits;
        let d_2 = &m_j * &two_pow * &c_prev + &two_pow * c;
        let d_1 = d_2 + &m_j * kappa;
        let d_0 = k * &two_pow * d_1;
        let c_j = d_0 + k * kappa;
        m_prev = m_j;
        c_prev = c_j;
    }
    (m_prev, c_prev)
}

fn phi1_oracle(x: u64, ell: u64, kappa: u64) -> BigUint {
    big(2) * (ell - 3) * (kappa + x) + 1u32
}

fn sigma_oracle(t: u64, c: u64, tau: u64, kappa: u64, h: u64, ell: u64) -> BigUint {
    let floor = big(tau + h * kappa);
    let mut sigma = big(c).max(floor.clone());
    for s in (0..t).rev() {
        let arg = big(h + 1).pow(s as u32) * &sigma;
        let arg_u = u64::try_from(&arg).expect("desk-scale sigma");
        let grown = (BigUint::from(1u32) << s) * phi1_oracle(arg_u, ell, kappa);
        sigma = grown.max(floor.clone());
    }
    sigma
}

#[test]
fn criterion_6_constant_recurrences_match_straight_line_oracles() {
    criterion(6, (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc6);
        for i in 0..50 {
            let j = rng.gen_range(1..=3u32);
            let k = rng.gen_range(1..=3u64);
            let m = rng.gen_range(1..=3u64);
            let c = rng.gen_range(1..=3u64);
            let kappa = rng.gen_range(1..=3u64);
            let got = gettick_constants(
                j,
                &BoundExpr::int(k),
                &BoundExpr::int(m),
                &BoundExpr::int(c),
                &BoundExpr::int(kappa),
            );
            let (m_j, c_j) = tick_oracle(j, k, m, c, kappa);
            ensure!(
                got.m_j.eval(BIG_DIGITS) == Some(m_j.clone()),
                "tick tuple {i}: m_j mismatch"
            );
            ensure!(
                got.c_j.eval(BIG_DIGITS) == Some(c_j.clone()),
                "tick tuple {i}: c_j mismatch"
            );
        }
        for i in 0..50 {
            let x = rng.gen_range(0..=20u64);
            let ell = rng.gen_range(4..=9u64);
            let kappa = rng.gen_range(1..=5u64);
            let got = phi1(&BoundExpr::int(x), ell, &BoundExpr::int(kappa)).eval(BIG_DIGITS);
            ensure!(
                got == Some(phi1_oracle(x, ell, kappa)),
                "phi1 tuple {i}: mismatch at x={x}, ell={ell}, kappa={kappa}"
            );
        }
        ensure!(
            phi1(&BoundExpr::int(0), 4, &BoundExpr::int(1)).eval(64) == Some(big(3)),
            "phi1(0) at ell=4, kappa=1 must be 3"
        );
        for i in 0..50 {
            let t = rng.gen_range(0..=4u64);
            let c = rng.gen_range(1..=4u64);
            let tau = rng.gen_range(1..=4u64);
            let kappa = rng.gen_range(1..=4u64);
            let h = rng.gen_range(1..=3u64);
            let ell = rng.gen_range(4..=8u64);
            let mut phi = |x: &BoundExpr| phi1(x, ell, &BoundExpr::int(kappa));
            let ladder = sigma_ladder(
                t,
                &BoundExpr::int(c),
                &BoundExpr::int(tau),
                &BoundExpr::int(kappa),
                h,
                &mut phi,
            );
            ensure!(
                ladder.c_prime.eval(BIG_DIGITS) == Some(sigma_oracle(t, c, tau, kappa, h, ell)),
                "sigma tuple {i}: mismatch at t={t}, c={c}, tau={tau}, kappa={kappa}, h={h}, ell={ell}"
            );
        }
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 7

/// Lexicographically first monochromatic m-subset by explicit enumeration.
fn naive_mono(t: usize, m: usize, color: &dyn Fn(usize, usize) -> u32) -> Option<Vec<usize>> {
    fn rec(
        chosen: &mut Vec<usize>,
        start: usize,
        t: usize,
        m: usize,
        color: &dyn Fn(usize, usize) -> u32,
    ) -> bool {
        if chosen.len() == m {
            let col = color(chosen[0], chosen[1]);
            return chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| color(u, v) == col));
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
    if m < 2 {
        return Some((0..m).collect());
    }
    let mut chosen = Vec::new();
    if rec(&mut chosen, 0, t, m, color) {
        Some(chosen)
    } else {
        None
    }
}

#[test]
fn criterion_7_ramsey_search_matches_enumeration_and_never_misses_at_threshold() {
    criterion(7, (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc7);
        // agreement with the naive scan on random colorings
        for i in 0..200 {
            let t = rng.gen_range(2..=8usize);
            let m = rng.gen_range(2..=4.min(t));
            let colors = rng.gen_range(2..=3u32);
            let mut table = vec![vec![0u32; t]; t];
            for u in 0..t {
                for v in u + 1..t {
                    let c = rng.gen_range(0..colors);
                    table[u][v] = c;
                    table[v][u] = c;
                }
            }
            let got = monochromatic_subset(t, m, &mut |u, v| table[u][v]);
            let want = naive_mono(t, m, &|u, v| table[u][v]);
            ensure!(got == want, "sample {i}: {got:?} != naive {want:?}");
        }
        // h = 1: any 1-coloring of ramsey_upper(1, m) = m vertices succeeds
        for m in 2..=5usize {
            let bound = ramsey_upper(1, &BoundExpr::int(m as u64))
                .eval(64)
                .and_then(|b| u64::try_from(&b).ok())
                .ok_or("h=1 bound not evaluable")? as usize;
            ensure!(bound == m, "ramsey_upper(1, {m}) != {m}");
            let got = monochromatic_subset(bound, m, &mut |_, _| 0);
            ensure!(got.is_some(), "h=1 threshold miss at m={m}");
        }
        // h = 2, m = 3: never fails on 2^(2*2+1) = 32 vertices
        let bound = ramsey_upper(2, &BoundExpr::int(3))
            .eval(64)
            .and_then(|b| u64::try_from(&b).ok())
            .ok_or("h=2 bound not evaluable")? as usize;
        ensure!(bound == 32, "ramsey_upper(2, 3) != 32");
        for i in 0..100 {
            let mut table = vec![vec![0u32; bound]; bound];
            for u in 0..bound {
                for v in u + 1..bound {
                    let c = rng.gen_range(0..2u32);
                    table[u][v] = c;
                    table[v][u] = c;
                }
            }
            let got = monochromatic_subset(bound, 3, &mut |u, v| table[u][v]);
            ensure!(got.is_some(), "2-coloring {i} has no monochromatic triangle found");
        }
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 8

fn bin() -> assert_cmd::Command {
    assert_cmd::Command::cargo_bin("chibound").unwrap()
}

#[test]
fn criterion_8_replays_are_byte_identical() {
    criterion(8, (|| {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        // sweep twice with the same seed, different output paths
        let cfg = |records: &str, summary: &str| {
            format!(
                "seed = 99\nsamples_per_cell = 6\nn_min = 5\nn_max = 12\n\
                 densities = [0.2, 0.35]\nchordal_width = 3\nk_values = [2, 3]\n\
                 ell_values = [4, 5]\nrecords = \"{records}\"\nsummary = \"{summary}\"\n"
            )
        };
        let c1 = dir.path().join("a.toml");
        let c2 = dir.path().join("b.toml");
        fs::write(&c1, cfg("r1.jsonl", "s1.csv")).map_err(|e| e.to_string())?;
        fs::write(&c2, cfg("r2.jsonl", "s2.csv")).map_err(|e| e.to_string())?;
        bin().args(["sweep", "--config"]).arg(&c1).assert().success();
        bin().args(["sweep", "--config"]).arg(&c2).assert().success();
        let r1 = fs::read(dir.path().join("r1.jsonl")).map_err(|e| e.to_string())?;
        let r2 = fs::read(dir.path().join("r2.jsonl")).map_err(|e| e.to_string())?;
        ensure!(r1 == r2, "sweep record streams differ between replays");
        let s1 = fs::read(dir.path().join("s1.csv")).map_err(|e| e.to_string())?;
        let s2 = fs::read(dir.path().join("s2.csv")).map_err(|e| e.to_string())?;
        ensure!(s1 == s2, "sweep summaries differ between replays");

        // an engine invocation twice on the same inputs
        let (g, cable) = gen_planted_cable(2, 3, &[PairType::Type2; 3], 4, 77)
            .map_err(|e| e.to_string())?;
        let gp = dir.path().join("g.col");
        fs::write(&gp, chibound_core::formats::to_dimacs(&g)).map_err(|e| e.to_string())?;
        let cp = dir.path().join("cable.json");
        fs::write(&cp, serde_json::to_string(&cable).unwrap()).map_err(|e| e.to_string())?;
        let o1 = dir.path().join("h1.json");
        let o2 = dir.path().join("h2.json");
        for out in [&o1, &o2] {
            bin()
                .args(["engine", "--name", "type2-hole", "--ell", "6", "--tau", "1"])
                .arg(&gp)
                .arg(&cp)
                .arg("--out")
                .arg(out)
                .assert()
                .success();
        }
        let h1 = fs::read(&o1).map_err(|e| e.to_string())?;
        let h2 = fs::read(&o2).map_err(|e| e.to_string())?;
        ensure!(h1 == h2, "engine outputs differ between replays");
        Ok(())
    })());
}

// ---------------------------------------------------------------- criterion 9

#[test]
fn criterion_9_sweep_table_has_finite_max_chi_in_every_cell() {
    criterion(9, (|| {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let cfg = dir.path().join("sweep.toml");
        fs::write(
            &cfg,
            "seed = 42\nsamples_per_cell = 6\nn_min = 5\nn_max = 20\n\
             densities = [0.15, 0.3]\nchordal_width = 3\nk_values = [1, 2, 3]\n\
             ell_values = [4, 5, 6]\nrecords = \"records.jsonl\"\nsummary = \"summary.csv\"\n",
        )
        .map_err(|e| e.to_string())?;
        bin().args(["sweep", "--config"]).arg(&cfg).assert().success();
        let csv = fs::read_to_string(dir.path().join("summary.csv")).map_err(|e| e.to_string())?;
        let mut rows = 0;
        for line in csv.lines().skip(1) {
            let cols: Vec<&str> = line.split(',').collect();
            ensure!(cols.len() == 6, "malformed summary row: {line}");
            let k: u32 = cols[0].parse().map_err(|_| format!("bad k in {line}"))?;
            let ell: usize = cols[1].parse().map_err(|_| format!("bad ell in {line}"))?;
            let included: usize = cols[3].parse().map_err(|_| format!("bad count in {line}"))?;
            ensure!(included > 0, "cell ({k},{ell}) has no included samples");
            let max_chi: u32 = cols[4]
                .parse()
                .map_err(|_| format!("cell ({k},{ell}) has no finite max_chi"))?;
            if k == 1 {
                ensure!(max_chi == 1, "cell (1,{ell}) has max_chi {max_chi}");
            }
            if ell == 4 {
                ensure!(max_chi == k, "cell ({k},4) has max_chi {max_chi}, expected {k}");
            }
            ensure!(
                cols[5] == "ok" || cols[5] == "unknown",
                "cell ({k},{ell}) reports bound check {}",
                cols[5]
            );
            rows += 1;
        }
        ensure!(rows == 9, "expected 9 cells, saw {rows}");
        Ok(())
    })());
}
