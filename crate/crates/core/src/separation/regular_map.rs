use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_from, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularMapCertificate {
    /// Largest image distance over edges; `None` when some edge lands in
    /// two different components of the target.
    pub lipschitz: Option<usize>,
    pub multiplicity: usize,
    pub valid: bool,
}

/// Checks a vertex map `x -> y` for the Lipschitz and bounded-fiber
/// properties. `map[v]` is the image of vertex `v`.
pub fn verify_regular_map(x: &Graph, y: &Graph, map: &[usize]) -> Result<RegularMapCertificate> {
    if map.len() != x.vertex_count() {
        return Err(Error::precondition(format!(
            "map has {} entries for {} vertices",
            map.len(),
            x.vertex_count()
        )));
    }
    if let Some((v, &img)) = map.iter().enumerate().find(|(_, &i)| i >= y.vertex_count()) {
        return Err(Error::precondition(format!(
            "vertex {v} maps to {img}, outside the target's {} vertices",
            y.vertex_count()
        )));
    }

    let mut fibers = vec![0usize; y.vertex_count()];
    for &img in map {
        fibers[img] += 1;
    }
    let multiplicity = fibers.into_iter().max().unwrap_or(0);

    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); y.vertex_count()];
    for &(u, v) in x.edges() {
        by_source[map[u]].push(map[v]);
    }
    let mut lipschitz = Some(0);
    for (s, targets) in by_source.iter().enumerate() {
        if targets.is_empty() {
            continue;
        }
        let dist = bfs_from(y, &[s], usize::MAX);
        for &t in targets {
            lipschitz = match (lipschitz, dist[t]) {
                (Some(l), Some(d)) => Some(l.max(d)),
                _ => None,
            };
        }
    }
    Ok(RegularMapCertificate {
        lipschitz,
        multiplicity,
        valid: lipschitz.is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn identity() {
        let g = petersen();
        let id: Vec<usize> = (0..10).collect();
        let c = verify_regular_map(&g, &g, &id).unwrap();
        assert_eq!(c.lipschitz, Some(1));
        assert_eq!(c.multiplicity, 1);
        assert!(c.valid);
    }

    #[test]
    fn antipodal_folding() {
        let map: Vec<usize> = (0..6).map(|v| v % 3).collect();
        let c = verify_regular_map(&cycle(6), &cycle(3), &map).unwrap();
        assert_eq!(c.lipschitz, Some(1));
        assert_eq!(c.multiplicity, 2);
    }

    #[test]
    fn inclusion_into_union() {
        let host = complete(4).disjoint_union(&petersen());
        let map: Vec<usize> = (4..14).collect();
        let c = verify_regular_map(&petersen(), &host, &map).unwrap();
        assert_eq!((c.lipschitz, c.multiplicity), (Some(1), 1));
    }

    #[test]
    fn across_components_is_invalid() {
        let host = path(2).disjoint_union(&path(2));
        let c = verify_regular_map(&path(2), &host, &[0, 2]).unwrap();
        assert_eq!(c.lipschitz, None);
        assert!(!c.valid);
    }

    #[test]
    fn partial_map_refused() {
        assert!(verify_regular_map(&path(3), &path(3), &[0, 1]).is_err());
        assert!(verify_regular_map(&path(3), &path(3), &[0, 1, 5]).is_err());
    }
}
