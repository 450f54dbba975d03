//! Exact arbitrary-precision evaluation, with symbolic fallback, of the
//! constant recurrences: the tick constants m_j/c_j with intermediates
//! d_2/d_1/d_0, Ramsey upper bounds, the sigma ladder, phi_1, the phi_h
//! recursion, and the final bound n(k, ell). Values beyond the digit budget
//! stay as expression trees; nothing is ever silently truncated.

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Default cap on evaluated magnitudes, in decimal digits.
pub const DEFAULT_DIGIT_BUDGET: usize = 1_000_000;

/// An exact nonnegative integer or a symbolic operator tree. `Tag` nodes name
/// quantities left unexpanded (e.g. a sigma ladder whose length is itself an
/// astronomically large bound); their arguments keep every factor auditable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundExpr {
    Exact(BigUint),
    Add(Vec<BoundExpr>),
    Mul(Vec<BoundExpr>),
    Pow(Box<BoundExpr>, Box<BoundExpr>),
    Max(Vec<BoundExpr>),
    Tag { label: String, args: Vec<BoundExpr> },
}

impl BoundExpr {
    pub fn int(v: u64) -> BoundExpr {
        BoundExpr::Exact(BigUint::from(v))
    }

    pub fn add(terms: Vec<BoundExpr>) -> BoundExpr {
        match terms.len() {
            1 => terms.into_iter().next().unwrap(),
            _ => BoundExpr::Add(terms),
        }
    }

    pub fn mul(factors: Vec<BoundExpr>) -> BoundExpr {
        match factors.len() {
            1 => factors.into_iter().next().unwrap(),
            _ => BoundExpr::Mul(factors),
        }
    }

    pub fn pow(base: BoundExpr, exp: BoundExpr) -> BoundExpr {
        BoundExpr::Pow(Box::new(base), Box::new(exp))
    }

    pub fn max(terms: Vec<BoundExpr>) -> BoundExpr {
        match terms.len() {
            1 => terms.into_iter().next().unwrap(),
            _ => BoundExpr::Max(terms),
        }
    }

    pub fn tag(label: &str, args: Vec<BoundExpr>) -> BoundExpr {
        BoundExpr::Tag {
            label: label.to_string(),
            args,
        }
    }

    /// Exact value if the whole tree evaluates within `digit_budget` decimal
    /// digits and contains no `Tag` node; `None` otherwise.
    pub fn eval(&self, digit_budget: usize) -> Option<BigUint> {
        // log2(10) ~ 3.32; generous slack so the budget is on digits
        let bit_budget = digit_budget.saturating_mul(10) / 3 + 64;
        self.eval_bits(bit_budget as u64)
    }

    fn eval_bits(&self, bit_budget: u64) -> Option<BigUint> {
        match self {
            BoundExpr::Exact(v) => Some(v.clone()),
            BoundExpr::Add(terms) => {
                let mut acc = BigUint::zero();
                for t in terms {
                    acc += t.eval_bits(bit_budget)?;
                    if acc.bits() > bit_budget {
                        return None;
                    }
                }
                Some(acc)
            }
            BoundExpr::Mul(factors) => {
                let mut acc = BigUint::one();
                for f in factors {
                    acc *= f.eval_bits(bit_budget)?;
                    if acc.bits() > bit_budget {
                        return None;
                    }
                }
                Some(acc)
            }
            BoundExpr::Pow(base, exp) => {
                let b = base.eval_bits(bit_budget)?;
                let e = exp.eval_bits(bit_budget)?;
                if b.is_zero() {
                    return Some(if e.is_zero() { BigUint::one() } else { b });
                }
                if b.is_one() {
                    return Some(b);
                }
                let e64 = e.to_u64()?;
                // b >= 2, so bits(b^e) >= e; reject before computing
                if b.bits().checked_mul(e64)? > bit_budget {
                    return None;
                }
                Some(Pow::pow(b, e64))
            }
            BoundExpr::Max(terms) => {
                let mut acc: Option<BigUint> = None;
                for t in terms {
                    let v = t.eval_bits(bit_budget)?;
                    acc = Some(match acc {
                        None => v,
                        Some(a) => a.max(v),
                    });
                }
                acc
            }
            BoundExpr::Tag { .. } => None,
        }
    }

    /// Collapses every subtree that evaluates within the budget to `Exact`.
    pub fn simplify(&self, digit_budget: usize) -> BoundExpr {
        if let Some(v) = self.eval(digit_budget) {
            return BoundExpr::Exact(v);
        }
        match self {
            BoundExpr::Exact(v) => BoundExpr::Exact(v.clone()),
            BoundExpr::Add(ts) => {
                BoundExpr::Add(ts.iter().map(|t| t.simplify(digit_budget)).collect())
            }
            BoundExpr::Mul(ts) => {
                BoundExpr::Mul(ts.iter().map(|t| t.simplify(digit_budget)).collect())
            }
            BoundExpr::Pow(b, e) => BoundExpr::pow(b.simplify(digit_budget), e.simplify(digit_budget)),
            BoundExpr::Max(ts) => {
                BoundExpr::Max(ts.iter().map(|t| t.simplify(digit_budget)).collect())
            }
            BoundExpr::Tag { label, args } => BoundExpr::Tag {
                label: label.clone(),
                args: args.iter().map(|t| t.simplify(digit_budget)).collect(),
            },
        }
    }

    pub fn node_count(&self) -> usize {
        1 + match self {
            BoundExpr::Exact(_) => 0,
            BoundExpr::Add(ts) | BoundExpr::Mul(ts) | BoundExpr::Max(ts) => {
                ts.iter().map(BoundExpr::node_count).sum()
            }
            BoundExpr::Pow(b, e) => b.node_count() + e.node_count(),
            BoundExpr::Tag { args, .. } => args.iter().map(BoundExpr::node_count).sum(),
        }
    }

    /// Number of `Tag` nodes with the given label, anywhere in the tree.
    pub fn count_tag(&self, label: &str) -> usize {
        let own = matches!(self, BoundExpr::Tag { label: l, .. } if l == label) as usize;
        own + match self {
            BoundExpr::Exact(_) => 0,
            BoundExpr::Add(ts) | BoundExpr::Mul(ts) | BoundExpr::Max(ts) => {
                ts.iter().map(|t| t.count_tag(label)).sum()
            }
            BoundExpr::Pow(b, e) => b.count_tag(label) + e.count_tag(label),
            BoundExpr::Tag { args, .. } => args.iter().map(|t| t.count_tag(label)).sum(),
        }
    }

    /// A cheap numeric lower bound on the value: `Tag` nodes floor to 1 and
    /// oversized powers saturate. Only meant for sanity comparisons.
    pub fn floor_value(&self) -> BigUint {
        const CAP_BITS: u64 = 256;
        let cap = BigUint::one() << CAP_BITS;
        let v = match self {
            BoundExpr::Exact(v) => v.clone(),
            BoundExpr::Add(ts) => ts.iter().map(BoundExpr::floor_value).sum(),
            BoundExpr::Mul(ts) => ts.iter().map(BoundExpr::floor_value).product(),
            BoundExpr::Pow(b, e) => {
                let bv = b.floor_value();
                let ev = e.floor_value();
                if bv <= BigUint::one() {
                    bv
                } else {
                    match ev.to_u64() {
                        Some(e64) if bv.bits().saturating_mul(e64) <= CAP_BITS => Pow::pow(bv, e64),
                        _ => cap.clone(),
                    }
                }
            }
            BoundExpr::Max(ts) => ts
                .iter()
                .map(BoundExpr::floor_value)
                .max()
                .unwrap_or_else(BigUint::zero),
            BoundExpr::Tag { .. } => BigUint::one(),
        };
        v.min(cap)
    }
}

impl std::fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundExpr::Exact(v) => {
                let s = v.to_string();
                if s.len() <= 40 {
                    write!(f, "{s}")
                } else {
                    write!(f, "[{}-digit integer]", s.len())
                }
            }
            BoundExpr::Add(ts) => join(f, ts, " + ", true),
            BoundExpr::Mul(ts) => join(f, ts, "*", true),
            BoundExpr::Pow(b, e) => write!(f, "({b})^({e})"),
            BoundExpr::Max(ts) => {
                write!(f, "max")?;
                join(f, ts, ", ", true)
            }
            BoundExpr::Tag { label, args } => {
                write!(f, "{label}")?;
                join(f, args, "; ", true)
            }
        }
    }
}

fn join(
    f: &mut std::fmt::Formatter<'_>,
    ts: &[BoundExpr],
    sep: &str,
    parens: bool,
) -> std::fmt::Result {
    if parens {
        write!(f, "(")?;
    }
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{t}")?;
    }
    if parens {
        write!(f, ")")?;
    }
    Ok(())
}

/// The tick-growing constants for level `j`: thresholds (m_j, c_j) with the
/// intermediate quantities (d_2, d_1, d_0) of the top level. Level 0 is the
/// base case m_0 = c_0 = 1 and carries no intermediates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TickConstants {
    pub m_j: BoundExpr,
    pub c_j: BoundExpr,
    pub d_2: Option<BoundExpr>,
    pub d_1: Option<BoundExpr>,
    pub d_0: Option<BoundExpr>,
}

/// The recurrence m_j = 2km*m_{j-1}, d_2 = m_j*2^{m_j}*c_{j-1} + 2^{m_j}*c,
/// d_1 = d_2 + m_j*kappa, d_0 = k*2^{m_j}*d_1, c_j = d_0 + k*kappa, from the
/// base m_0 = c_0 = 1.
pub fn gettick_constants(
    j: u32,
    k: &BoundExpr,
    m: &BoundExpr,
    c: &BoundExpr,
    kappa: &BoundExpr,
) -> TickConstants {
    let mut m_prev = BoundExpr::int(1);
    let mut c_prev = BoundExpr::int(1);
    let mut last = TickConstants {
        m_j: m_prev.clone(),
        c_j: c_prev.clone(),
        d_2: None,
        d_1: None,
        d_0: None,
    };
    for _ in 0..j {
        let m_j = BoundExpr::mul(vec![
            BoundExpr::int(2),
            k.clone(),
            m.clone(),
            m_prev.clone(),
        ]);
        let two_pow = BoundExpr::pow(BoundExpr::int(2), m_j.clone());
        let d_2 = BoundExpr::add(vec![
            BoundExpr::mul(vec![m_j.clone(), two_pow.clone(), c_prev.clone()]),
            BoundExpr::mul(vec![two_pow.clone(), c.clone()]),
        ]);
        let d_1 = BoundExpr::add(vec![
            d_2.clone(),
            BoundExpr::mul(vec![m_j.clone(), kappa.clone()]),
        ]);
        let d_0 = BoundExpr::mul(vec![k.clone(), two_pow, d_1.clone()]);
        let c_j = BoundExpr::add(vec![
            d_0.clone(),
            BoundExpr::mul(vec![k.clone(), kappa.clone()]),
        ]);
        last = TickConstants {
            m_j: m_j.clone(),
            c_j: c_j.clone(),
            d_2: Some(d_2),
            d_1: Some(d_1),
            d_0: Some(d_0),
        };
        m_prev = m_j;
        c_prev = c_j;
    }
    last
}

/// Multicolor Ramsey upper bound: any `h`-coloring of the pairs of a set of
/// this size has a monochromatic `m`-subset. h = 1 returns m itself; h >= 2
/// returns h^{h(m-1)+1}. When `m` is symbolic the exponent is rounded up to
/// h*m + 1, which only strengthens the guarantee.
pub fn ramsey_upper(h: u64, m: &BoundExpr) -> BoundExpr {
    assert!(h >= 1, "at least one color class");
    if h == 1 {
        return m.clone();
    }
    let exponent = match m.eval(64) {
        Some(mv) if mv >= BigUint::one() => {
            BoundExpr::Exact(BigUint::from(h) * (mv - 1u32) + 1u32)
        }
        _ => BoundExpr::add(vec![
            BoundExpr::mul(vec![BoundExpr::int(h), m.clone()]),
            BoundExpr::int(1),
        ]),
    };
    BoundExpr::pow(BoundExpr::int(h), exponent)
}

/// The descending ladder sigma_t = max(c, tau + h*kappa),
/// sigma_s = max(2^s * phi((h+1)^s * sigma_{s+1}), tau + h*kappa), with
/// c' = sigma_0. `sigmas[s]` is sigma_s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaLadder {
    pub sigmas: Vec<BoundExpr>,
    pub c_prime: BoundExpr,
}

pub fn sigma_ladder(
    t: u64,
    c: &BoundExpr,
    tau: &BoundExpr,
    kappa: &BoundExpr,
    h: u64,
    phi: &mut dyn FnMut(&BoundExpr) -> BoundExpr,
) -> SigmaLadder {
    let floor = BoundExpr::add(vec![
        tau.clone(),
        BoundExpr::mul(vec![BoundExpr::int(h), kappa.clone()]),
    ]);
    let mut sigmas = vec![BoundExpr::Exact(BigUint::zero()); t as usize + 1];
    sigmas[t as usize] = BoundExpr::max(vec![c.clone(), floor.clone()]);
    for s in (0..t).rev() {
        let arg = BoundExpr::mul(vec![
            BoundExpr::pow(BoundExpr::int(h + 1), BoundExpr::int(s)),
            sigmas[s as usize + 1].clone(),
        ]);
        let grown = BoundExpr::mul(vec![
            BoundExpr::pow(BoundExpr::int(2), BoundExpr::int(s)),
            phi(&arg),
        ]);
        sigmas[s as usize] = BoundExpr::max(vec![grown, floor.clone()]);
    }
    let c_prime = sigmas[0].clone();
    SigmaLadder { sigmas, c_prime }
}

/// phi_1(x) = 2(ell - 3)(kappa + x) + 1.
pub fn phi1(x: &BoundExpr, ell: u64, kappa: &BoundExpr) -> BoundExpr {
    assert!(ell >= 4);
    BoundExpr::add(vec![
        BoundExpr::mul(vec![
            BoundExpr::int(2 * (ell - 3)),
            BoundExpr::add(vec![kappa.clone(), x.clone()]),
        ]),
        BoundExpr::int(1),
    ])
}

/// The tower phi_1, ..., phi_{h_max} for fixed (k, ell, kappa): phi_1 is the
/// closed formula, and phi_{h+1}(n) = max over tau <= n of the cable-control
/// constant c(tau), each c(tau) recorded as one unexpanded sigma-ladder node
/// whose arguments carry the full constant assembly.
#[derive(Debug, Clone)]
pub struct PhiLadder {
    pub k: u64,
    pub ell: u64,
    pub kappa: BoundExpr,
    pub h_max: u64,
}

pub fn phi_ladder(k: u64, ell: u64, kappa: &BoundExpr, h_max: u64) -> PhiLadder {
    assert!(h_max <= k, "control levels never exceed the clique bound");
    assert!(ell >= 4);
    PhiLadder {
        k,
        ell,
        kappa: kappa.clone(),
        h_max,
    }
}

impl PhiLadder {
    pub fn phi(&self, h: u64, n: u64) -> BoundExpr {
        assert!(h >= 1 && h <= self.h_max);
        if h == 1 {
            return phi1(&BoundExpr::int(n), self.ell, &self.kappa);
        }
        // phi_{h}(n) with h = prev + 1: max over tau of c(tau) at level prev
        let prev = h - 1;
        let taus: Vec<BoundExpr> = (0..=n).map(|tau| self.cable_constant(prev, tau)).collect();
        BoundExpr::max(taus)
    }

    /// The constant c(tau) controlling chi of any graph admitting no long
    /// cable at level h: the impression/multicover thresholds feed a Ramsey
    /// bound on cable length and a chromatic ceiling, and both feed the sigma
    /// ladder, kept as a single tagged node because its length is itself an
    /// astronomical bound.
    fn cable_constant(&self, h: u64, tau: u64) -> BoundExpr {
        let ell = self.ell;
        // an impression of K_{n,n} of order two yields a hole of length >= 2n
        let n_imp = ell.div_ceil(2).max(2);
        let mut m_cur = BoundExpr::int(n_imp);
        let mut c_cur = BoundExpr::int(1);
        // stack n_imp ticks on a common set: fold the tick thresholds
        for _ in 0..n_imp {
            let tc = gettick_constants(
                self.k as u32,
                &BoundExpr::int(self.k),
                &m_cur,
                &c_cur,
                &self.kappa,
            );
            m_cur = tc.m_j;
            c_cur = tc.c_j;
        }
        // drop the stability hypothesis: c multiplies by kappa^m
        let m_imp = m_cur;
        let c_imp = BoundExpr::mul(vec![
            c_cur,
            BoundExpr::pow(self.kappa.clone(), m_imp.clone()),
        ]);
        let t1 = ramsey_upper(h, &m_imp);
        let t_cable = ramsey_upper(2, &BoundExpr::max(vec![t1, BoundExpr::int(ell - 3)]));
        let c_cable = BoundExpr::max(vec![
            c_imp,
            BoundExpr::mul(vec![BoundExpr::int(ell - 3), BoundExpr::int(tau)]),
        ]);
        BoundExpr::tag(
            "sigma_ladder",
            vec![
                t_cable,
                c_cable,
                BoundExpr::int(tau),
                self.kappa.clone(),
                BoundExpr::int(h),
                BoundExpr::tag("phi", vec![BoundExpr::int(h)]),
            ],
        )
    }
}

/// The headline bound n(k, ell): induction on k with kappa(1) = 1 and
/// kappa(k) the bound one level down, returning phi_k(0).
pub fn main_bound(k: u64, ell: u64) -> BoundExpr {
    assert!(k >= 1 && ell >= 1);
    let ell = ell.max(4);
    if k == 1 {
        return BoundExpr::int(1);
    }
    let kappa = main_bound(k - 1, ell);
    phi_ladder(k, ell, &kappa, k).phi(k, 0)
}
