//! Vertex expansion and balanced vertex cuts.
//!
//! Cut sets use the threshold "every remaining component has at most `n/2`
//! vertices" with `n` the vertex count of the graph handed in, so components
//! of exactly `n/2` vertices are allowed. Cheeger constants minimise
//! `|∂A| / |A|` over nonempty `A` with `|A| <= floor(n/2)`.

mod cheeger;
mod cut;
mod efficient;
mod heuristic;
mod search;
mod spectral;

pub use cheeger::cheeger_exact;
pub use cut::{cut_bounds, cut_exact, is_balanced_cut, largest_component_after, CutBounds};
pub use efficient::{
    efficient_cut_sequence, extract_expander, find_efficient_cut, EfficientCutSearch,
    EfficientCutSequence, EfficientCutStep, ExpanderCertificate, SequenceChecks,
};
pub use heuristic::{centroid_cut, heuristic_cut};
pub use spectral::{cheeger_spectral_lower, SpectralBound, EIGEN_TOLERANCE, MAX_EIGEN_VERTICES};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::Rational;

/// Default cap on the vertex count for exhaustive subset enumeration.
pub const DEFAULT_EXHAUSTIVE_N: usize = 20;

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertMethod {
    Exhaustive,
    Spectral,
}

impl std::fmt::Display for CertMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CertMethod::Exhaustive => "exhaustive",
            CertMethod::Spectral => "spectral",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMethod {
    Exhaustive,
    Heuristic,
    Centroid,
    Cover,
    Trivial,
}

/// A certified lower bound on a vertex Cheeger constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonCertificate {
    #[serde(with = "crate::rational::serde_ratio")]
    pub value: Rational,
    pub method: CertMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheegerResult {
    #[serde(with = "crate::rational::serde_ratio")]
    pub value: Rational,
    pub witness: Vec<usize>,
    pub method: CertMethod,
    pub budget_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub largest_component_size: usize,
    pub method: CutMethod,
    pub budget_used: usize,
}

/// Search limits shared by the exact and heuristic routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest vertex count handled by exhaustive enumeration.
    pub exhaustive_n: usize,
    /// Random restarts for the heuristic cut search.
    pub heuristic_iterations: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exhaustive_n: DEFAULT_EXHAUSTIVE_N,
            heuristic_iterations: 16,
            seed: 0,
        }
    }
}

/// Vertices outside `set` adjacent to some vertex of `set`, sorted.
pub fn vertex_boundary(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    g.check_vertices(set)?;
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut hit = vec![false; g.vertex_count()];
    for &v in set {
        for &w in g.neighbors(v) {
            if !inside[w] {
                hit[w] = true;
            }
        }
    }
    Ok((0..g.vertex_count()).filter(|&v| hit[v]).collect())
}

/// Upper bound `4 sep / n` on the Cheeger constant of any `n`-vertex subgraph
/// of a host whose separation profile at `n` is `sep`.
pub fn subgraph_cheeger_bound(sep: usize, n: usize) -> Rational {
    assert!(n >= 1, "subgraph size must be positive");
    Rational::new(4 * sep as i64, n as i64)
}

/// Certifies a Cheeger lower bound by the requested method.
pub fn certify_epsilon(g: &Graph, method: CertMethod) -> Result<EpsilonCertificate> {
    let value = match method {
        CertMethod::Exhaustive => cheeger_exact(g, DEFAULT_EXHAUSTIVE_N)?.value,
        CertMethod::Spectral => cheeger_spectral_lower(g)?.value,
    };
    Ok(EpsilonCertificate { value, method })
}

/// Exhaustive certification when the graph is small enough, spectral otherwise.
pub fn auto_certify(g: &Graph) -> Result<EpsilonCertificate> {
    if g.vertex_count() <= DEFAULT_EXHAUSTIVE_N {
        certify_epsilon(g, CertMethod::Exhaustive)
    } else {
        certify_epsilon(g, CertMethod::Spectral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn boundary_examples() {
        assert_eq!(vertex_boundary(&path(3), &[0]).unwrap(), vec![1]);
        assert!(vertex_boundary(&path(3), &[0, 1, 2]).unwrap().is_empty());
        assert!(vertex_boundary(&path(3), &[3]).is_err());

        // closed neighbourhood of a Petersen vertex: the rest are at distance 2
        let p = petersen();
        let mut ball = vec![0];
        ball.extend_from_slice(p.neighbors(0));
        let dist = crate::graph::bfs_distances(&p, &[0]).unwrap();
        let expected: Vec<usize> = (0..10).filter(|&v| dist[v] == Some(2)).collect();
        assert_eq!(expected.len(), 6);
        assert_eq!(vertex_boundary(&p, &ball).unwrap(), expected);
    }

    #[test]
    fn cheeger_ceiling() {
        assert_eq!(subgraph_cheeger_bound(0, 8), Rational::from_integer(0));
        assert_eq!(subgraph_cheeger_bound(2, 4), Rational::from_integer(2));
        let p = petersen();
        let cut = cut_exact(&p, DEFAULT_EXHAUSTIVE_N).unwrap().value;
        let h = cheeger_exact(&p, DEFAULT_EXHAUSTIVE_N).unwrap().value;
        assert!(h <= subgraph_cheeger_bound(cut, 10));
    }
}
