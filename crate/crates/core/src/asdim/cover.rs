use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::generators::grid;
use crate::graph::{bfs_from, Graph};

/// Pieces grouped into classes; pieces of one class are meant to be more
/// than `r` apart and each at most `diameter_bound` across.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cover {
    pub host: Graph,
    pub r: usize,
    pub classes: Vec<Vec<Vec<usize>>>,
    pub diameter_bound: usize,
}

impl Cover {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverViolation {
    OutOfRange {
        vertex: usize,
    },
    Uncovered {
        vertex: usize,
    },
    Repeated {
        vertex: usize,
    },
    TooClose {
        class: usize,
        pieces: (usize, usize),
        distance: usize,
    },
    TooWide {
        class: usize,
        piece: usize,
        diameter: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub valid: bool,
    pub violations: Vec<CoverViolation>,
}

/// Checks coverage, `r`-separation inside each class and piece diameters,
/// all in the host metric. A piece whose vertices are in different host
/// components has no finite diameter.
pub fn validate_cover(cover: &Cover) -> CoverReport {
    let n = cover.host.vertex_count();
    let mut v = Vec::new();
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; n];
    for (i, class) in cover.classes.iter().enumerate() {
        for (j, piece) in class.iter().enumerate() {
            for &x in piece {
                if x >= n {
                    v.push(CoverViolation::OutOfRange { vertex: x });
                } else if owner[x].is_some() {
                    v.push(CoverViolation::Repeated { vertex: x });
                } else {
                    owner[x] = Some((i, j));
                }
            }
        }
    }
    v.extend(
        (0..n)
            .filter(|&x| owner[x].is_none())
            .map(|vertex| CoverViolation::Uncovered { vertex }),
    );

    for (i, class) in cover.classes.iter().enumerate() {
        for (j, piece) in class.iter().enumerate() {
            let piece: Vec<usize> = piece.iter().copied().filter(|&x| x < n).collect();
            if piece.is_empty() {
                continue;
            }
            let near = bfs_from(&cover.host, &piece, cover.r);
            let mut closest: Vec<Option<usize>> = vec![None; class.len()];
            for x in 0..n {
                if let (Some(d), Some((ci, cj))) = (near[x], owner[x]) {
                    if ci == i && cj > j {
                        closest[cj] = Some(closest[cj].map_or(d, |c: usize| c.min(d)));
                    }
                }
            }
            for (cj, d) in closest.into_iter().enumerate() {
                if let Some(distance) = d {
                    v.push(CoverViolation::TooClose {
                        class: i,
                        pieces: (j, cj),
                        distance,
                    });
                }
            }

            let mut diameter = Some(0);
            for &x in &piece {
                let dist = bfs_from(&cover.host, &[x], cover.diameter_bound + 1);
                for &y in &piece {
                    diameter = match (diameter, dist[y]) {
                        (Some(a), Some(b)) => Some(a.max(b)),
                        _ => None,
                    };
                }
            }
            if diameter.is_none_or(|d| d > cover.diameter_bound) {
                v.push(CoverViolation::TooWide {
                    class: i,
                    piece: j,
                    diameter,
                });
            }
        }
    }
    CoverReport {
        valid: v.is_empty(),
        violations: v,
    }
}

/// An axis-aligned box `[0, dims[0]) x ... x [0, dims[d-1])` of the lattice
/// `Z^d`. Vertex ids put axis 0 fastest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPatch {
    pub dims: Vec<usize>,
}

impl GridPatch {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::precondition(format!("{dims:?} is not a box")));
        }
        Ok(GridPatch { dims })
    }

    /// A `d`-dimensional cube of side `s`.
    pub fn cube(d: usize, s: usize) -> Result<Self> {
        Self::new(vec![s; d])
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn graph(&self) -> Graph {
        grid(&self.dims)
    }

    pub fn coords(&self, mut v: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&s| {
                let c = v % s;
                v /= s;
                c
            })
            .collect()
    }
}

/// Product-of-intervals cover of a box: along each axis, blocks of `r`
/// consecutive coordinates alternate between two classes, giving `2^d`
/// classes whose pieces are `r`-blocks at distance at least `r + 1`.
pub fn grid_cover(patch: &GridPatch, r: usize) -> Result<Cover> {
    if r == 0 {
        return Err(Error::precondition("cover scale r must be positive"));
    }
    let d = patch.dimension();
    let mut classes: Vec<Vec<Vec<usize>>> = vec![Vec::new(); 1 << d];
    let mut slot: std::collections::HashMap<Vec<usize>, (usize, usize)> = Default::default();
    for v in 0..patch.vertex_count() {
        let block: Vec<usize> = patch.coords(v).iter().map(|&x| x / r).collect();
        let class = block
            .iter()
            .enumerate()
            .fold(0, |acc, (axis, q)| acc | ((q % 2) << axis));
        let (ci, pj) = *slot.entry(block).or_insert_with(|| {
            classes[class].push(Vec::new());
            (class, classes[class].len() - 1)
        });
        classes[ci][pj].push(v);
    }
    Ok(Cover {
        host: patch.graph(),
        r,
        classes,
        diameter_bound: d * r,
    })
}
