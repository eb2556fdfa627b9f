use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pairings tried before giving up.
pub const MAX_PAIRING_ATTEMPTS: usize = 10_000;

/// Simple `d`-regular graph on `n` vertices from the pairing model: shuffle
/// `n d` half-edges, pair them off, and retry whenever a loop or repeated
/// edge appears.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if (n * d) % 2 == 1 {
        return Err(Error::precondition(format!("n d = {} is odd", n * d)));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::precondition(format!(
            "degree {d} needs more than {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::Degenerate(format!(
        "no simple {d}-regular pairing on {n} vertices after {MAX_PAIRING_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn cubic_on_ten() {
        let g = random_regular(10, 3, 1).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g, random_regular(10, 3, 1).unwrap());
    }

    #[test]
    fn parity_and_degree_refused() {
        assert!(random_regular(5, 3, 0).is_err());
        assert!(random_regular(4, 4, 0).is_err());
    }

    #[test]
    fn fifty_vertices_connected() {
        let g = random_regular(50, 3, 7).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert!(is_connected(&g));
    }
}
