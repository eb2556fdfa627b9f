//! Graph corpora and deliberately naive reference implementations shared by
//! the integration tests. Nothing here calls into the optimized searches.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepgraph_core::{Graph, Rational};

/// Graphs on up to 16 vertices as adjacency bitmasks.
#[derive(Clone, Debug)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u16>,
}

impl Small {
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).unwrap()
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u16;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if self.adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen.count_ones() as usize == self.n
    }
}

fn refine(g: &Small, mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..g.n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..g.n)
                    .filter(|&w| g.adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        let before = colors.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

fn key_of(g: &Small, colors: &[u32]) -> u128 {
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut key = 0u128;
    let mut bit = 0;
    for p in 0..g.n {
        for q in p + 1..g.n {
            if g.adj[order[p]] >> order[q] & 1 == 1 {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

fn search(g: &Small, colors: Vec<u32>) -> u128 {
    let colors = refine(g, colors);
    let mut counts = std::collections::BTreeMap::new();
    for &c in &colors {
        *counts.entry(c).or_insert(0) += 1;
    }
    let Some((&cell, _)) = counts.iter().find(|(_, &k)| k > 1) else {
        return key_of(g, &colors);
    };
    (0..g.n)
        .filter(|&v| colors[v] == cell)
        .map(|v| {
            let c: Vec<u32> = (0..g.n)
                .map(|w| {
                    if w == v {
                        2 * colors[w]
                    } else {
                        2 * colors[w] + 1
                    }
                })
                .collect();
            search(g, c)
        })
        .min()
        .unwrap()
}

/// Canonical form by colour refinement with individualisation.
pub fn canonical_key(g: &Small) -> u128 {
    search(g, vec![0; g.n])
}

/// One representative of every isomorphism class of graphs on `n <= 8`
/// vertices, grown one vertex at a time.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Small>> {
    let mut levels = vec![vec![Small { n: 0, adj: vec![] }]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for nb in 0u16..(1 << (n - 1)) {
                let mut adj = g.adj.clone();
                for (w, row) in adj.iter_mut().enumerate() {
                    if nb >> w & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                adj.push(nb);
                let h = Small { n, adj };
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .filter(Small::connected)
        .map(|g| g.to_graph())
        .collect()
}

/// Seeded Erdős–Rényi graphs, resampled until connected.
pub fn random_connected(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.15..0.7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if sepgraph_core::graph::is_connected(&g) {
            out.push(g);
        }
    }
    out
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Every Prüfer sequence of length `n - 2`, i.e. every labelled tree.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return vec![Graph::empty(n)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut k| {
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            prufer_tree(&code)
        })
        .collect()
}

fn components(g: &Graph, alive: &[bool]) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut sizes = Vec::new();
    for s in 0..g.vertex_count() {
        if !alive[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(v) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Largest component left after deleting `removed`.
pub fn largest_after(g: &Graph, removed: &[usize]) -> usize {
    let mut alive = vec![true; g.vertex_count()];
    for &v in removed {
        alive[v] = false;
    }
    components(g, &alive).into_iter().max().unwrap_or(0)
}

/// Minimum balanced cut by testing every subset.
pub fn naive_cut(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        if components(g, &alive).into_iter().all(|c| 2 * c <= n) {
            best = size;
        }
    }
    best
}

/// `|∂A| / |A|`.
pub fn boundary_ratio(g: &Graph, set: &[usize]) -> Rational {
    let inside: HashSet<usize> = set.iter().copied().collect();
    let boundary: HashSet<usize> = set
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|w| !inside.contains(w))
        .collect();
    Rational::new(boundary.len() as i64, set.len() as i64)
}

/// Vertex Cheeger constant by testing every subset of at most half the vertices.
pub fn naive_cheeger(g: &Graph) -> Rational {
    let n = g.vertex_count();
    let mut best: Option<Rational> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let r = boundary_ratio(g, &set);
        if best.is_none_or(|b| r < b) {
            best = Some(r);
        }
    }
    best.expect("graph has at least two vertices")
}

/// Connected vertex subsets of sizes `lo..=hi`.
pub fn connected_subsets(g: &Graph, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    (1u32..(1 << n))
        .filter(|m| (lo..=hi).contains(&(m.count_ones() as usize)))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|set| {
            let mut alive = vec![false; n];
            for &v in set {
                alive[v] = true;
            }
            components(g, &alive).len() == 1
        })
        .collect()
}
