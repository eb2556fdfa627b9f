use rayon::prelude::*;

use super::{PointKind, ProfilePoint};
use crate::error::{Error, Result};
use crate::graph::{mask_to_vec, BitGraph, Graph, SubgraphRef};

/// Largest host on which every induced subgraph is enumerated.
pub const MAX_EXACT_HOST: usize = 16;

/// Cut of the subgraph induced on `mask`: the least `k` such that deleting
/// some `k` of its vertices leaves components of at most `|mask|/2`
/// vertices, together with the lexicographically first such deletion set.
pub(crate) fn cut_of_mask(bits: &BitGraph, mask: u64) -> (usize, u64) {
    let w = mask.count_ones();
    let limit = w / 2;
    let members = mask_to_vec(mask);
    for k in 0..=members.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let removed = idx.iter().fold(0u64, |m, &i| m | (1 << members[i]));
            if bits.components_at_most(mask & !removed, limit) {
                return (k, removed);
            }
            // Advance to the next k-combination in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < members.len() - k + i) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    (members.len(), mask)
}

/// Cut of an explicit vertex subset of `g`, by exhaustive search.
pub fn cut_of_induced(g: &Graph, vertices: &[usize]) -> Result<usize> {
    g.check_vertices(vertices)?;
    let (sub, _) = g.induced(vertices);
    if sub.vertex_count() > BitGraph::MAX_VERTICES {
        return Err(Error::BudgetExceeded {
            what: "exhaustive subgraph cut",
            needed: sub.vertex_count(),
            budget: BitGraph::MAX_VERTICES,
        });
    }
    let bits = BitGraph::new(&sub).expect("size checked above");
    Ok(cut_of_mask(&bits, bits.full()).0)
}

/// Exact `sep_g(n)` by enumerating every induced subgraph with at most `n`
/// vertices. Restricting to induced subgraphs loses nothing, since deleting
/// edges from a subgraph never raises its cut.
pub fn sep_exact_small(g: &Graph, n: usize) -> Result<ProfilePoint> {
    Ok(sep_exact_profile(g, n)?
        .pop()
        .expect("profile covers 0..=n"))
}

/// Exact points for every `n` in `0..=max_n`, sharing one enumeration.
pub fn sep_exact_profile(g: &Graph, max_n: usize) -> Result<Vec<ProfilePoint>> {
    let v = g.vertex_count();
    if v > MAX_EXACT_HOST {
        return Err(Error::BudgetExceeded {
            what: "exact separation profile",
            needed: v,
            budget: MAX_EXACT_HOST,
        });
    }
    let bits = BitGraph::new(g).expect("host is small");
    let cap = max_n.min(v);

    // best[w] = (cut, least mask) over subsets of exactly w vertices.
    let best = (1u64..(1u64 << v))
        .into_par_iter()
        .filter(|m| m.count_ones() as usize <= cap)
        .fold(
            || vec![(0usize, 0u64); cap + 1],
            |mut acc, m| {
                let w = m.count_ones() as usize;
                let (c, _) = cut_of_mask(&bits, m);
                merge_best(&mut acc[w], (c, m));
                acc
            },
        )
        .reduce(
            || vec![(0usize, 0u64); cap + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    merge_best(x, y);
                }
                a
            },
        );

    let mut out = Vec::with_capacity(max_n + 1);
    let mut running = (0usize, 0u64);
    for n in 0..=max_n {
        if let Some(&b) = best.get(n).filter(|_| n <= cap) {
            if b.0 > running.0 {
                running = b;
            }
        }
        out.push(ProfilePoint {
            n,
            value: running.0,
            kind: PointKind::Exact,
            witness: Some(SubgraphRef::of_graph(mask_to_vec(running.1))),
            method: "exhaustive".into(),
        });
    }
    Ok(out)
}

/// Keeps the larger cut; among equal cuts, the numerically least mask.
/// A zero mask marks an empty slot.
fn merge_best(slot: &mut (usize, u64), cand: (usize, u64)) {
    if cand.1 == 0 {
        return;
    }
    if slot.1 == 0 || cand.0 > slot.0 || (cand.0 == slot.0 && cand.1 < slot.1) {
        *slot = cand;
    }
}
