//! Upper bounds on the cut size for graphs beyond exhaustive reach.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cut::is_balanced_cut;
use crate::graph::{bfs_distances, components_within, connected_components, is_forest, Graph};

/// Balanced cut of size at most 1 for a forest: the centroid of the one
/// tree (if any) with more than `n/2` vertices.
pub fn centroid_cut(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let Some(tree) = connected_components(g)
        .into_iter()
        .find(|c| 2 * c.len() > n)
    else {
        return Vec::new();
    };
    let size = tree.len();
    let root = tree[0];
    // iterative DFS order, then subtree sizes bottom-up
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(size);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut sub = vec![1usize; n];
    for &u in order.iter().rev() {
        if u != root {
            sub[parent[u]] += sub[u];
        }
    }
    let centroid = order
        .iter()
        .copied()
        .filter(|&v| {
            let above = size - sub[v];
            let below = g
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[w] == v && w != root)
                .map(|&w| sub[w])
                .max()
                .unwrap_or(0);
            2 * above.max(below) <= size
        })
        .min()
        .expect("every tree has a centroid");
    vec![centroid]
}

/// Best balanced cut found by greedy BFS-shell removal from several sources,
/// followed by pruning of redundant vertices. Always returns a valid cut.
pub fn heuristic_cut(g: &Graph, iterations: usize, seed: u64) -> Vec<usize> {
    if is_balanced_cut(g, &[]) {
        return Vec::new();
    }
    if is_forest(g) {
        return centroid_cut(g);
    }
    let big = connected_components(g)
        .into_iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("unbalanced graphs are nonempty");
    let a = farthest(g, big[0]);
    let b = farthest(g, a);
    let mut sources = vec![a, b, big[0]];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..iterations {
        sources.push(big[rng.gen_range(0..big.len())]);
    }
    let mut seen = std::collections::HashSet::new();
    sources.retain(|s| seen.insert(*s));

    let cuts: Vec<Vec<usize>> = sources
        .par_iter()
        .map(|&s| {
            let mut cut = shell_cut(g, s);
            prune(g, &mut cut);
            cut.sort_unstable();
            cut
        })
        .collect();
    cuts.into_iter()
        .min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)))
        .expect("at least one source")
}

fn farthest(g: &Graph, from: usize) -> usize {
    let d = bfs_distances(g, &[from]).expect("valid source");
    (0..g.vertex_count())
        .filter_map(|v| d[v].map(|x| (x, v)))
        .max_by(|p, q| p.0.cmp(&q.0).then(q.1.cmp(&p.1)))
        .map(|(_, v)| v)
        .unwrap_or(from)
}

/// Repeatedly removes one BFS layer of the oversized component: the smallest
/// layer that balances the graph if there is one, else the layer leaving the
/// smallest largest component.
fn shell_cut(g: &Graph, source: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let limit = n / 2;
    let mut alive = vec![true; n];
    let mut cut = Vec::new();
    loop {
        let comps = components_within(g, &alive);
        let Some(big) = comps.iter().find(|c| c.len() > limit) else {
            break;
        };
        let start = if big.binary_search(&source).is_ok() {
            source
        } else {
            farthest_within(g, &alive, big[0])
        };
        let layers = layers_within(g, &alive, start);
        // (feasible?, key1, key2, layer index)
        let mut choice: Option<(bool, usize, usize, usize)> = None;
        for (l, layer) in layers.iter().enumerate() {
            for &v in layer {
                alive[v] = false;
            }
            let worst = components_within(g, &alive)
                .iter()
                .map(Vec::len)
                .max()
                .unwrap_or(0);
            for &v in layer {
                alive[v] = true;
            }
            let cand = if worst <= limit {
                (true, layer.len(), worst, l)
            } else {
                (false, worst, layer.len(), l)
            };
            let better = match choice {
                None => true,
                Some(cur) => match (cand.0, cur.0) {
                    (true, false) => true,
                    (false, true) => false,
                    _ => (cand.1, cand.2) < (cur.1, cur.2),
                },
            };
            if better {
                choice = Some(cand);
            }
        }
        let (_, _, _, l) = choice.expect("a nonempty component has a layer");
        for &v in &layers[l] {
            alive[v] = false;
            cut.push(v);
        }
    }
    cut
}

fn layers_within(g: &Graph, alive: &[bool], start: usize) -> Vec<Vec<usize>> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[start] = 0;
    let mut layers = vec![vec![start]];
    loop {
        let mut next = Vec::new();
        for &u in layers.last().unwrap() {
            for &w in g.neighbors(u) {
                if alive[w] && dist[w] == usize::MAX {
                    dist[w] = layers.len();
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return layers;
        }
        next.sort_unstable();
        layers.push(next);
    }
}

fn farthest_within(g: &Graph, alive: &[bool], from: usize) -> usize {
    *layers_within(g, alive, from)
        .last()
        .and_then(|l| l.first())
        .unwrap_or(&from)
}

fn prune(g: &Graph, cut: &mut Vec<usize>) {
    let mut i = cut.len();
    while i > 0 {
        i -= 1;
        let v = cut.remove(i);
        if !is_balanced_cut(g, cut) {
            cut.insert(i, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::cut_exact;
    use crate::graph::generators::*;

    #[test]
    fn centroid_of_trees() {
        assert_eq!(centroid_cut(&star(5)), vec![0]);
        let p = path(7);
        assert_eq!(centroid_cut(&p), vec![3]);
        assert!(centroid_cut(&path(2).disjoint_union(&path(2))).is_empty());
        let tree = Graph::from_edges(15, (1..15).map(|i| ((i - 1) / 2, i))).unwrap();
        let c = centroid_cut(&tree);
        assert_eq!(c.len(), 1);
        assert!(is_balanced_cut(&tree, &c));
    }

    #[test]
    fn heuristic_is_valid_and_reasonable() {
        for s in [4usize, 8, 16] {
            let g = grid(&[s, s]);
            let cut = heuristic_cut(&g, 8, 1);
            assert!(is_balanced_cut(&g, &cut));
            assert!(cut.len() <= s, "side {s}: {}", cut.len());
        }
        let p = petersen();
        let cut = heuristic_cut(&p, 8, 3);
        assert!(is_balanced_cut(&p, &cut));
        assert!(cut.len() >= cut_exact(&p, 20).unwrap().value);
    }

    #[test]
    fn heuristic_is_deterministic() {
        let g = grid(&[9, 7]);
        assert_eq!(heuristic_cut(&g, 5, 42), heuristic_cut(&g, 5, 42));
    }
}
