use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

/// Girth of a graph: a cycle length, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// True when every cycle has more than `n` vertices.
    pub fn exceeds(self, n: usize) -> bool {
        match self {
            Girth::Finite(g) => g > n,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(usize),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(g) => Ok(Girth::Finite(g)),
            Repr::Text(s) if s == "inf" => Ok(Girth::Infinite),
            Repr::Text(s) => Err(serde::de::Error::custom(format!("bad girth {s:?}"))),
        }
    }
}

/// Shortest-path distance from the nearest source; `None` when unreachable.
pub fn bfs_distances(g: &Graph, sources: &[usize]) -> Result<Vec<Option<usize>>> {
    if sources.is_empty() {
        return Err(Error::precondition("BFS needs at least one source"));
    }
    g.check_vertices(sources)?;
    Ok(bfs_from(g, sources, usize::MAX))
}

/// Multi-source BFS that stops expanding beyond `max_depth`.
pub(crate) fn bfs_from(g: &Graph, sources: &[usize], max_depth: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        if du >= max_depth {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_within(g, &vec![true; g.vertex_count()])
}

/// Components of the subgraph induced by the `alive` vertices, each sorted,
/// ordered by least vertex id.
pub fn components_within(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A largest component among `alive` vertices (least vertex id on ties).
pub fn largest_component_within(g: &Graph, alive: &[bool]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for c in components_within(g, alive) {
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() <= 1 || connected_components(g).len() == 1
}

/// `|E| - |V| + #components`.
pub fn cycle_rank(g: &Graph) -> usize {
    g.edge_count() + connected_components(g).len() - g.vertex_count()
}

pub fn is_forest(g: &Graph) -> bool {
    cycle_rank(g) == 0
}

/// Length of a shortest cycle, by deleting each edge in turn and measuring the
/// distance between its endpoints.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for &(a, b) in g.edges() {
        if best == 3 {
            break;
        }
        // A cycle through (a, b) shorter than `best` needs a path of length < best - 1.
        let limit = best.saturating_sub(2);
        for &t in &touched {
            dist[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[a] = 0;
        touched.push(a);
        queue.push_back(a);
        'bfs: while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                break;
            }
            for &w in g.neighbors(u) {
                if u == a && w == b {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    if w == b {
                        best = best.min(dist[w] + 1);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Largest closed ball of the given radius.
pub fn growth_function(g: &Graph, radius: usize) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::precondition("growth function of the empty graph"));
    }
    Ok((0..g.vertex_count())
        .map(|v| bfs_from(g, &[v], radius).iter().flatten().count())
        .max()
        .unwrap_or(0))
}

/// Diameter of a connected graph; `None` if disconnected or empty.
pub fn diameter(g: &Graph) -> Option<usize> {
    if g.is_empty() || !is_connected(g) {
        return None;
    }
    (0..g.vertex_count())
        .map(|v| {
            bfs_from(g, &[v], usize::MAX)
                .into_iter()
                .flatten()
                .max()
                .unwrap_or(0)
        })
        .max()
}

#[cfg(test)]
mod tests {
    use super::super::generators::*;
    use super::*;

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&path(3)), vec![vec![0, 1, 2]]);
        let kk = complete(4).disjoint_union(&complete(4));
        let comps = connected_components(&kk);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 4));
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&complete(4)), Girth::Finite(3));
        assert_eq!(girth(&star(6)), Girth::Infinite);
        assert_eq!(girth(&path(7)), Girth::Infinite);
        assert_eq!(girth(&cycle(9)), Girth::Finite(9));
        assert_eq!(girth(&grid(&[3, 3])), Girth::Finite(4));
        assert_eq!(girth(&Graph::empty(0)), Girth::Infinite);
    }

    /// Independent oracle: the shortest closed walk found by BFS from every
    /// vertex (non-tree edge u-w closes a cycle of length <= d(u)+d(w)+1,
    /// equality attained at a minimum).
    fn girth_by_vertex_bfs(g: &Graph) -> Option<usize> {
        let n = g.vertex_count();
        let mut best = None::<usize>;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b: usize| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_girth_matches_oracle() {
        let p = petersen();
        assert_eq!(girth_by_vertex_bfs(&p), Some(5));
        assert_eq!(girth(&p), Girth::Finite(5));
        let heawood = lcf(14, &[5, -5], 7);
        assert_eq!(girth(&heawood).finite(), girth_by_vertex_bfs(&heawood));
    }

    #[test]
    fn growth_examples() {
        assert_eq!(growth_function(&path(5), 1).unwrap(), 3);
        assert_eq!(growth_function(&complete(4), 1).unwrap(), 4);
        assert_eq!(growth_function(&complete(4), 0).unwrap(), 1);
        // l1 ball of radius 2 in Z^2: enumerate |x|+|y| <= 2
        let ball = (-2i32..=2)
            .flat_map(|x| (-2i32..=2).map(move |y| (x, y)))
            .filter(|(x, y)| x.abs() + y.abs() <= 2)
            .count();
        assert_eq!(ball, 13);
        assert_eq!(growth_function(&grid(&[5, 5]), 2).unwrap(), ball);
        assert!(growth_function(&Graph::empty(0), 1).is_err());
    }

    #[test]
    fn bfs_examples() {
        let d = bfs_distances(&path(3), &[0]).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
        let d = bfs_distances(&complete(4), &[0]).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(1), Some(1)]);
        let two = path(2).disjoint_union(&path(2));
        let d = bfs_distances(&two, &[0]).unwrap();
        assert_eq!(d[2], None);
        assert_eq!(d[3], None);
        assert!(bfs_distances(&two, &[]).is_err());
        assert!(bfs_distances(&two, &[9]).is_err());
    }

    #[test]
    fn girth_serde() {
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"inf\"");
        assert_eq!(
            serde_json::from_str::<Girth>("7").unwrap(),
            Girth::Finite(7)
        );
        assert!(Girth::Infinite > Girth::Finite(1000));
    }
}
