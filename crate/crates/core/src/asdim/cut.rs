use serde::{Deserialize, Serialize};

use super::{k_of_m, validate_cover, Cover};
use crate::error::{Error, Result};
use crate::expansion::{CutMethod, CutResult};
use crate::graph::{bfs_from, components_within, largest_component_within, HostRef, SubgraphRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsdimIteration {
    /// Size of the working component at the start of the iteration.
    pub n_cur: usize,
    pub class: usize,
    /// Indices (within the class) of the pieces forming `U`.
    pub pieces: Vec<usize>,
    pub u: Vec<usize>,
    pub level: usize,
    pub shell: Vec<usize>,
    /// `|C_l|` for `l = 1..=r`.
    pub shell_sizes: Vec<usize>,
    /// Components left after deleting the shell, largest first.
    pub component_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsdimCutTrace {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub k_of_m: usize,
    pub iterations: Vec<AsdimIteration>,
    pub total_cut: Vec<usize>,
    pub final_largest: usize,
}

/// Cuts a subgraph of the cover's host by repeatedly removing the thinnest
/// distance shell around a union `U` of pieces from the most populated
/// class, then continuing on a largest remaining component.
///
/// Each round takes a class holding at least `n_cur/m` working vertices
/// and builds `U` with between `n_cur/4m` and `n_cur/2m` of them: a single
/// piece if one is big enough, otherwise consecutive pieces. Rounds stop
/// once every component has at most half of the original vertices.
pub fn asdim_cut(subgraph: &SubgraphRef, cover: &Cover) -> Result<(CutResult, AsdimCutTrace)> {
    let host = &cover.host;
    if subgraph.host != HostRef::Graph {
        return Err(Error::precondition(
            "the subgraph must live in the cover's host",
        ));
    }
    host.check_vertices(&subgraph.vertices)?;
    if subgraph.is_empty() {
        return Err(Error::precondition("empty subgraph"));
    }
    let report = validate_cover(cover);
    if !report.valid {
        return Err(Error::precondition(format!(
            "cover is invalid: {} violations, first {:?}",
            report.violations.len(),
            report.violations[0]
        )));
    }
    let m = cover.class_count();
    let r = cover.r;
    let k = k_of_m(m)?;
    let n0 = subgraph.len();
    let nv = host.vertex_count();

    let mut alive = vec![false; nv];
    for &v in &subgraph.vertices {
        alive[v] = true;
    }
    let mut cut = Vec::new();
    let mut iterations = Vec::new();
    let mut current = largest_component_within(host, &alive);

    while 2 * current.len() > n0 {
        if iterations.len() >= k {
            return Err(Error::Degenerate(format!(
                "still {} > {n0}/2 vertices after k(m) = {k} rounds",
                current.len()
            )));
        }
        let n_cur = current.len();
        let mut in_cur = vec![false; nv];
        for &v in &current {
            in_cur[v] = true;
        }
        let traces: Vec<Vec<Vec<usize>>> = cover
            .classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|p| p.iter().copied().filter(|&v| in_cur[v]).collect())
                    .collect()
            })
            .collect();
        let class = (0..m)
            .max_by(|&a, &b| {
                let size = |i: usize| traces[i].iter().map(Vec::len).sum::<usize>();
                size(a).cmp(&size(b)).then(b.cmp(&a))
            })
            .expect("cover has a class");
        let pieces = &traces[class];
        if let Some((j, p)) = pieces
            .iter()
            .enumerate()
            .find(|(_, p)| 2 * m * p.len() > n_cur)
        {
            return Err(Error::Degenerate(format!(
                "piece {j} of class {class} holds {} of {n_cur} working vertices, \
                 more than n/2m with m = {m}; r = {r} is too coarse at this size",
                p.len()
            )));
        }
        let reaches = |size: usize| 4 * m * size >= n_cur;
        let chosen: Vec<usize> = match pieces.iter().position(|p| reaches(p.len())) {
            Some(j) => vec![j],
            None => {
                let mut acc = Vec::new();
                let mut total = 0;
                for (j, p) in pieces.iter().enumerate() {
                    if p.is_empty() {
                        continue;
                    }
                    acc.push(j);
                    total += p.len();
                    if reaches(total) {
                        break;
                    }
                }
                acc
            }
        };
        let mut u: Vec<usize> = chosen
            .iter()
            .flat_map(|&j| pieces[j].iter().copied())
            .collect();
        u.sort_unstable();

        let dist = bfs_from(host, &u, r);
        let mut shells: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
        for &v in &current {
            if let Some(d) = dist[v] {
                if d >= 1 {
                    shells[d].push(v);
                }
            }
        }
        let level = (1..=r)
            .min_by_key(|&l| (shells[l].len(), l))
            .expect("r >= 1");
        let shell = std::mem::take(&mut shells[level]);
        let shell_sizes: Vec<usize> = (1..=r)
            .map(|l| {
                if l == level {
                    shell.len()
                } else {
                    shells[l].len()
                }
            })
            .collect();

        for &v in &shell {
            alive[v] = false;
            in_cur[v] = false;
        }
        cut.extend_from_slice(&shell);
        let mut comps = components_within(host, &in_cur);
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let component_sizes = comps.iter().map(Vec::len).collect();
        current = comps.into_iter().next().unwrap_or_default();

        iterations.push(AsdimIteration {
            n_cur,
            class,
            pieces: chosen,
            u,
            level,
            shell,
            shell_sizes,
            component_sizes,
        });
    }

    cut.sort_unstable();
    let final_largest = largest_component_within(host, &alive).len();
    debug_assert!(2 * final_largest <= n0);
    let result = CutResult {
        value: cut.len(),
        witness: cut.clone(),
        largest_component_size: final_largest,
        method: CutMethod::Cover,
        budget_used: 0,
    };
    let trace = AsdimCutTrace {
        n: n0,
        m,
        r,
        k_of_m: k,
        iterations,
        total_cut: cut,
        final_largest,
    };
    Ok((result, trace))
}
