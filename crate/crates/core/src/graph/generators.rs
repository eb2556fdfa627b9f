//! Small deterministic graph constructors.

use super::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph edges are simple")
}

/// Star with centre `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are simple")
}

/// Axis-aligned box of the integer lattice with side lengths `dims`.
///
/// The vertex with coordinates `(x_0, .., x_{d-1})` has id
/// `x_0 + dims[0] * (x_1 + dims[1] * (..))`.
pub fn grid(dims: &[usize]) -> Graph {
    let n: usize = dims.iter().product();
    let mut edges = Vec::new();
    let mut stride = 1;
    for &len in dims {
        for v in 0..n {
            if (v / stride) % len + 1 < len {
                edges.push((v, v + stride));
            }
        }
        stride *= len;
    }
    Graph::from_edges(n, edges).expect("grid edges are simple")
}

/// Cubic Hamiltonian graph from LCF notation `[shifts]^repeats` on `n` vertices.
pub fn lcf(n: usize, shifts: &[i64], repeats: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let n_i = n as i64;
    for i in 0..shifts.len() * repeats {
        let u = i % n;
        let v = (((u as i64) + shifts[i % shifts.len()]).rem_euclid(n_i)) as usize;
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("LCF chords are simple")
}

/// Generalized Petersen graph GP(k, s): outer k-cycle, inner star polygon.
pub fn generalized_petersen(k: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + s) % k));
    }
    Graph::from_edges(2 * k, edges).expect("generalized Petersen edges are simple")
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// Two `clique`-cliques joined through a path of `bridge` extra vertices.
///
/// Vertices `0..clique` form the first clique, then the bridge, then the
/// second clique; the bridge attaches to vertex `clique - 1` and to the first
/// vertex of the second clique.
pub fn dumbbell(clique: usize, bridge: usize) -> Graph {
    let n = 2 * clique + bridge;
    let mut edges = Vec::new();
    for base in [0, clique + bridge] {
        for u in 0..clique {
            for v in u + 1..clique {
                edges.push((base + u, base + v));
            }
        }
    }
    let chain: Vec<usize> = std::iter::once(clique - 1)
        .chain(clique..clique + bridge)
        .chain(std::iter::once(clique + bridge))
        .collect();
    for w in chain.windows(2) {
        edges.push((w[0], w[1]));
    }
    Graph::from_edges(n, edges).expect("dumbbell edges are simple")
}
