use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{PointKind, ProfilePoint};
use crate::expansion::{cut_bounds, cut_exact, Budget};
use crate::graph::{bfs_from, connected_components, Graph, GraphFamily, HostRef, SubgraphRef};

/// Random connected subgraphs drawn per component and per point.
const RANDOM_SAMPLES: usize = 32;
/// Ball centers tried per component; larger components are subsampled evenly.
const MAX_CENTERS: usize = 256;
/// Probability that a frontier vertex is skipped while growing a random subgraph.
const PRUNE_PROBABILITY: f64 = 0.25;

/// A host whose subgraphs are searched.
#[derive(Clone, Copy, Debug)]
pub enum SepHost<'a> {
    Graph(&'a Graph),
    Family(&'a GraphFamily),
}

struct Candidate {
    host: HostRef,
    vertices: Vec<usize>,
}

/// Witnessed lower bound on `sep(n)`: the best cut over whole components,
/// BFS balls and seeded random connected subgraphs with at most `n`
/// vertices. Witnesses up to `budget.exhaustive_n` vertices are cut exactly;
/// larger ones contribute their certified lower cut bound.
pub fn sep_lower_estimate(host: SepHost<'_>, n: usize, budget: &Budget) -> ProfilePoint {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    rng.set_stream(n as u64);
    let small = n.min(budget.exhaustive_n);

    let units: Vec<(HostRef, &Graph)> = match host {
        SepHost::Graph(g) => vec![(HostRef::Graph, g)],
        SepHost::Family(f) => f
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| (HostRef::Component(i), &c.graph))
            .collect(),
    };

    let mut seen = HashSet::new();
    let mut cands = Vec::new();
    let mut push = |host: HostRef, mut vs: Vec<usize>| {
        vs.sort_unstable();
        if !vs.is_empty() && seen.insert((host, vs.clone())) {
            cands.push(Candidate { host, vertices: vs });
        }
    };
    for &(href, g) in &units {
        for comp in connected_components(g) {
            if comp.len() <= n {
                push(href, comp.clone());
            }
            let step = comp.len().div_ceil(MAX_CENTERS).max(1);
            for &c in comp.iter().step_by(step) {
                for size in [small, n] {
                    push(href, bfs_prefix(g, c, size));
                }
                push(href, ball_within(g, c, n));
            }
            for _ in 0..RANDOM_SAMPLES {
                let start = comp[rng.gen_range(0..comp.len())];
                for size in [small, n] {
                    push(href, random_connected(g, start, size, &mut rng));
                }
            }
        }
    }

    let scored: Vec<(usize, bool)> = cands
        .par_iter()
        .map(|cand| {
            let g = units
                .iter()
                .find(|(h, _)| *h == cand.host)
                .map(|(_, g)| *g)
                .expect("candidate host is a unit");
            let (sub, _) = g.induced(&cand.vertices);
            if sub.vertex_count() <= budget.exhaustive_n {
                let r = cut_exact(&sub, budget.exhaustive_n).expect("within budget");
                (r.value, true)
            } else {
                (cut_bounds(&sub, budget).lower, false)
            }
        })
        .collect();

    let mut best: Option<(usize, usize)> = None;
    for (i, &(value, _)) in scored.iter().enumerate() {
        let better = match best {
            None => true,
            Some((bv, bi)) => {
                value > bv || (value == bv && cands[i].vertices.len() < cands[bi].vertices.len())
            }
        };
        if better {
            best = Some((value, i));
        }
    }
    match best {
        Some((value, i)) => ProfilePoint {
            n,
            value,
            kind: PointKind::Lower,
            witness: Some(SubgraphRef::new(cands[i].host, cands[i].vertices.clone())),
            method: if scored[i].1 {
                "exhaustive-witness"
            } else {
                "certified-witness"
            }
            .into(),
        },
        None => ProfilePoint {
            n,
            value: 0,
            kind: PointKind::Lower,
            witness: Some(SubgraphRef::of_graph(Vec::new())),
            method: "empty".into(),
        },
    }
}

/// First `size` vertices in BFS order from `start`.
fn bfs_prefix(g: &Graph, start: usize, size: usize) -> Vec<usize> {
    let dist = bfs_from(g, &[start], usize::MAX);
    let mut order: Vec<(usize, usize)> = dist
        .iter()
        .enumerate()
        .filter_map(|(v, d)| d.map(|d| (d, v)))
        .collect();
    order.sort_unstable();
    order.into_iter().take(size).map(|(_, v)| v).collect()
}

/// Largest full ball around `start` with at most `size` vertices.
fn ball_within(g: &Graph, start: usize, size: usize) -> Vec<usize> {
    let dist = bfs_from(g, &[start], usize::MAX);
    let mut per_layer: Vec<usize> = Vec::new();
    for d in dist.iter().flatten() {
        if per_layer.len() <= *d {
            per_layer.resize(d + 1, 0);
        }
        per_layer[*d] += 1;
    }
    let mut total = 0;
    let mut radius = None;
    for (r, &c) in per_layer.iter().enumerate() {
        if total + c > size {
            break;
        }
        total += c;
        radius = Some(r);
    }
    match radius {
        None => Vec::new(),
        Some(r) => (0..g.vertex_count())
            .filter(|&v| matches!(dist[v], Some(d) if d <= r))
            .collect(),
    }
}

/// Grows a connected set from `start` by drawing frontier vertices at
/// random, skipping some of them.
fn random_connected(g: &Graph, start: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut inside = vec![false; g.vertex_count()];
    let mut set = Vec::new();
    let mut frontier = vec![start];
    while set.len() < size && !frontier.is_empty() {
        let v = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if inside[v] {
            continue;
        }
        if !set.is_empty() && rng.gen_bool(PRUNE_PROBABILITY) {
            continue;
        }
        inside[v] = true;
        set.push(v);
        frontier.extend(g.neighbors(v).iter().copied().filter(|&w| !inside[w]));
    }
    set
}
