//! Spectral lower bound on the vertex Cheeger constant of a regular graph.
//!
//! For a connected d-regular graph with second adjacency eigenvalue λ₂,
//! the edge boundary of any A with |A| <= n/2 is at least (d - λ₂)|A|/2, and
//! each boundary vertex absorbs at most d boundary edges, so
//! h >= (d - λ₂) / (2d).

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::rational::{self, Rational};

pub const EIGEN_TOLERANCE: f64 = 1e-8;
pub const MAX_EIGEN_VERTICES: usize = 512;

/// λ₂ within this distance of an integer k is replaced by k when k is
/// verified to be an exact eigenvalue.
const SNAP_DISTANCE: f64 = 1e-9;
/// Exact singularity checks are affordable up to this size.
const SNAP_MAX_VERTICES: usize = 200;
const GRID_DENOMINATOR: i64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralBound {
    #[serde(with = "crate::rational::serde_ratio")]
    pub value: Rational,
    pub degree: usize,
    /// Second-largest adjacency eigenvalue as computed.
    pub lambda2: f64,
    /// Whether λ₂ was certified to be an exact integer eigenvalue.
    pub exact_lambda2: bool,
}

pub fn cheeger_spectral_lower(g: &Graph) -> Result<SpectralBound> {
    let n = g.vertex_count();
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::precondition("spectral bound needs a regular graph"))?;
    if n < 2 || !is_connected(g) {
        return Err(Error::precondition(
            "spectral bound needs a connected graph with at least 2 vertices",
        ));
    }
    if n > MAX_EIGEN_VERTICES {
        return Err(Error::BudgetExceeded {
            what: "dense eigensolve",
            needed: n,
            budget: MAX_EIGEN_VERTICES,
        });
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    let lambda2 = ev[1];
    let k = lambda2.round();
    let exact = (lambda2 - k).abs() <= SNAP_DISTANCE
        && n <= SNAP_MAX_VERTICES
        && shifted_is_singular(g, k as i64);
    let d_r = d as i64;
    let value = if exact {
        Rational::new(d_r - k as i64, 2 * d_r)
    } else {
        let upper = lambda2 + EIGEN_TOLERANCE;
        let raw = (d as f64 - upper) / (2.0 * d as f64);
        rational::floor_to_grid(raw.max(0.0), GRID_DENOMINATOR)
    };
    Ok(SpectralBound {
        value: value.max(Rational::zero()),
        degree: d,
        lambda2,
        exact_lambda2: exact,
    })
}

/// Exact test that `k` is an eigenvalue: `det(A - kI) = 0`, by fraction-free
/// Gaussian elimination over the integers.
fn shifted_is_singular(g: &Graph, k: i64) -> bool {
    let n = g.vertex_count();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut x = if g.has_edge(i, j) { 1 } else { 0 };
                    if i == j {
                        x -= k;
                    }
                    BigInt::from(x)
                })
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for p in 0..n {
        if m[p][p].is_zero() {
            match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                Some(r) => m.swap(p, r),
                None => return true,
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&m[i][j] * &m[p][p] - &m[i][p] * &m[p][j]) / &prev;
                m[i][j] = v;
            }
            m[i][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::cheeger_exact;
    use crate::graph::generators::*;

    #[test]
    fn textbook_spectra() {
        let k4 = cheeger_spectral_lower(&complete(4)).unwrap();
        assert!(k4.exact_lambda2);
        assert_eq!(k4.value, Rational::new(2, 3));
        let c6 = cheeger_spectral_lower(&cycle(6)).unwrap();
        assert_eq!(c6.value, Rational::new(1, 4));
        let p = cheeger_spectral_lower(&petersen()).unwrap();
        assert_eq!(p.value, Rational::new(1, 3));
        for (g, b) in [(complete(4), k4), (cycle(6), c6), (petersen(), p)] {
            assert!(b.value <= cheeger_exact(&g, 20).unwrap().value);
        }
    }

    #[test]
    fn irrational_lambda_is_rounded_down() {
        // C5: λ₂ = 2cos(2π/5) ≈ 0.618
        let b = cheeger_spectral_lower(&cycle(5)).unwrap();
        assert!(!b.exact_lambda2);
        let expected = (2.0 - 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos()) / 4.0;
        let got = rational::to_f64(&b.value);
        assert!(got <= expected && expected - got < 1e-7);
    }

    #[test]
    fn singularity_check() {
        assert!(shifted_is_singular(&complete(4), -1));
        assert!(!shifted_is_singular(&complete(4), 0));
        assert!(shifted_is_singular(&petersen(), 1));
        assert!(!shifted_is_singular(&petersen(), 2));
    }

    #[test]
    fn rejects_irregular_and_disconnected() {
        assert!(cheeger_spectral_lower(&path(4)).is_err());
        assert!(cheeger_spectral_lower(&cycle(3).disjoint_union(&cycle(3))).is_err());
    }
}
