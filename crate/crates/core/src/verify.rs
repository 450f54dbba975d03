//! Independent certificate verifiers. These share no code with the solvers:
//! each check is a direct scan of the definition it certifies.

use thiserror::Error;

use crate::graph::{Coloring, Graph, Hole, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("coloring has wrong length (expected {expected}, got {got})")]
    WrongLength { expected: usize, got: usize },
    #[error("edge {0}-{1} has both ends colored {2}")]
    ImproperEdge(usize, usize, u32),
    #[error("color {0} out of range (num_colors = {1})")]
    ColorOutOfRange(u32, u32),
    #[error("clique contains nonadjacent pair {0}, {1}")]
    NotAClique(usize, usize),
    #[error("hole too short (length {0})")]
    HoleTooShort(usize),
    #[error("hole repeats vertex {0}")]
    HoleRepeats(usize),
    #[error("hole: consecutive vertices {0}, {1} are nonadjacent")]
    HoleMissingEdge(usize, usize),
    #[error("hole: chord {0}-{1}")]
    HoleChord(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

/// Checks properness: no edge monochromatic, all colors below `num_colors`.
pub fn check_coloring(g: &Graph, c: &Coloring) -> Result<(), CertificateError> {
    if c.assignment.len() != g.n() {
        return Err(CertificateError::WrongLength {
            expected: g.n(),
            got: c.assignment.len(),
        });
    }
    for (v, &col) in c.assignment.iter().enumerate() {
        if col >= c.num_colors {
            return Err(CertificateError::ColorOutOfRange(col, c.num_colors));
        }
        for u in g.neighbors(v).iter() {
            if u > v && c.assignment[u] == col {
                return Err(CertificateError::ImproperEdge(v, u, col));
            }
        }
    }
    Ok(())
}

/// Checks that a coloring of `G[within]` (given in parent ids) is proper.
pub fn check_coloring_of_subset(
    g: &Graph,
    within: &VertexSet,
    assignment: &[(usize, u32)],
) -> Result<(), CertificateError> {
    let mut colors = vec![None; g.n()];
    for &(v, c) in assignment {
        if v >= g.n() || !within.contains(v) {
            return Err(CertificateError::OutOfRange(v));
        }
        colors[v] = Some(c);
    }
    for v in within.iter() {
        if colors[v].is_none() {
            return Err(CertificateError::WrongLength {
                expected: within.len(),
                got: assignment.len(),
            });
        }
        for u in g.neighbors(v).intersection(within).iter() {
            if u > v && colors[u] == colors[v] {
                return Err(CertificateError::ImproperEdge(v, u, colors[v].unwrap()));
            }
        }
    }
    Ok(())
}

pub fn check_clique(g: &Graph, x: &VertexSet) -> Result<(), CertificateError> {
    let vs = x.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        if u >= g.n() {
            return Err(CertificateError::OutOfRange(u));
        }
        for &v in &vs[i + 1..] {
            if !g.adjacent(u, v) {
                return Err(CertificateError::NotAClique(u, v));
            }
        }
    }
    Ok(())
}

/// Checks that `h` is an induced cycle of length >= 4.
pub fn check_hole(g: &Graph, h: &Hole) -> Result<(), CertificateError> {
    let cyc = &h.cycle;
    if cyc.len() < 4 {
        return Err(CertificateError::HoleTooShort(cyc.len()));
    }
    let mut seen = VertexSet::empty(g.n());
    for &v in cyc {
        if v >= g.n() {
            return Err(CertificateError::OutOfRange(v));
        }
        if seen.contains(v) {
            return Err(CertificateError::HoleRepeats(v));
        }
        seen.insert(v);
    }
    let k = cyc.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            let adj = g.adjacent(cyc[i], cyc[j]);
            if consecutive && !adj {
                return Err(CertificateError::HoleMissingEdge(cyc[i], cyc[j]));
            }
            if !consecutive && adj {
                return Err(CertificateError::HoleChord(cyc[i], cyc[j]));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn coloring_checks() {
        let c5 = Graph::cycle(5);
        let good = Coloring::new(vec![0, 1, 0, 1, 2]);
        assert!(check_coloring(&c5, &good).is_ok());
        let bad = Coloring::new(vec![0, 1, 0, 1, 0]);
        assert_eq!(
            check_coloring(&c5, &bad),
            Err(CertificateError::ImproperEdge(0, 4, 0))
        );
        let short = Coloring::new(vec![0, 1]);
        assert!(check_coloring(&c5, &short).is_err());
    }

    #[test]
    fn hole_checks() {
        let c5 = Graph::cycle(5);
        assert!(check_hole(
            &c5,
            &Hole {
                cycle: vec![0, 1, 2, 3, 4]
            }
        )
        .is_ok());
        // rotated/reversed still fine
        assert!(check_hole(
            &c5,
            &Hole {
                cycle: vec![2, 1, 0, 4, 3]
            }
        )
        .is_ok());
        let k4 = Graph::complete(4);
        assert_eq!(
            check_hole(
                &k4,
                &Hole {
                    cycle: vec![0, 1, 2, 3]
                }
            ),
            Err(CertificateError::HoleChord(0, 2))
        );
        assert_eq!(
            check_hole(
                &c5,
                &Hole {
                    cycle: vec![0, 1, 2]
                }
            ),
            Err(CertificateError::HoleTooShort(3))
        );
    }
}
