//! k-efficient cuts and the maximal-sequence extraction of an expanding core.
//!
//! `Γ →_C Γ'` is k-efficient when `|Γ| - |Γ'| > k |C|`, with `Γ'` a largest
//! component of `Γ ∖ C`. Repeating such cuts with `k = 3c/2`, where
//! `c = |Γ| / cut(Γ)` is fixed from the original graph, ends in a subgraph of
//! more than half the vertices whose Cheeger constant is at least
//! `cut(Γ) / 2|Γ|`.

use serde::{Deserialize, Serialize};

use super::search::first_combination;
use super::{cheeger_exact, cut_exact, CertMethod, CheegerResult, CutResult};
use crate::error::{Error, Result};
use crate::graph::{
    components_within, is_connected, is_forest, vec_to_mask, BitGraph, Graph, SubgraphRef,
};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficientCutStep {
    pub removed: Vec<usize>,
    pub successor: SubgraphRef,
    pub size_drop: usize,
}

impl EfficientCutStep {
    pub fn is_efficient(&self, k: Rational) -> bool {
        Rational::from_integer(self.size_drop as i64)
            > k * Rational::from_integer(self.removed.len() as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficientCutSearch {
    pub step: Option<EfficientCutStep>,
    /// True when every candidate set that could be efficient was examined,
    /// so a `None` step is authoritative.
    pub complete: bool,
}

fn exceeds(drop: usize, k: Rational, size: usize) -> bool {
    let lhs = drop as i128 * *k.denom() as i128;
    let rhs = *k.numer() as i128 * size as i128;
    lhs > rhs
}

/// Looks for a k-efficient cut, exhaustively by increasing `|C|` up to
/// `max_size`, then among BFS layers if the exhaustive part was cut short.
pub fn find_efficient_cut(g: &Graph, k: Rational, max_size: usize) -> EfficientCutSearch {
    let n = g.vertex_count();
    if n < 2 {
        return EfficientCutSearch {
            step: None,
            complete: true,
        };
    }
    // drop <= n - 1, so |C| < (n - 1) / k
    let size_cap = if *k.numer() <= 0 {
        n - 1
    } else {
        let mut c = 0;
        while c < n - 1 && exceeds(n - 1, k, c + 1) {
            c += 1;
        }
        c
    };
    let bits = BitGraph::new(g);
    let exhaustive_to = size_cap.min(max_size);
    let complete = bits.is_some() && max_size >= size_cap;

    let largest_after = |removed: &[usize]| -> Vec<usize> {
        let mut alive = vec![true; n];
        for &v in removed {
            alive[v] = false;
        }
        let mut best: Vec<usize> = Vec::new();
        for comp in components_within(g, &alive) {
            if comp.len() > best.len() {
                best = comp;
            }
        }
        best
    };
    let make_step = |removed: Vec<usize>| {
        let succ = largest_after(&removed);
        EfficientCutStep {
            size_drop: n - succ.len(),
            removed,
            successor: SubgraphRef::of_graph(succ),
        }
    };

    for size in 0..=exhaustive_to {
        let hit = match &bits {
            Some(b) => {
                let full = b.full();
                first_combination(n, size, |c| {
                    let alive = full & !vec_to_mask(c);
                    let largest = b.largest_component(alive).count_ones() as usize;
                    exceeds(n - largest, k, c.len())
                })
            }
            None => first_combination(n, size, |c| exceeds(n - largest_after(c).len(), k, c.len())),
        };
        if let Some(c) = hit {
            return EfficientCutSearch {
                step: Some(make_step(c)),
                complete: true,
            };
        }
    }
    if complete {
        return EfficientCutSearch {
            step: None,
            complete: true,
        };
    }
    // fall back to BFS shells around every vertex, smallest shells first
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let dist = crate::graph::bfs_distances(g, &[s]).expect("valid source");
        let depth = dist.iter().flatten().max().copied().unwrap_or(0);
        for l in 1..=depth {
            let shell: Vec<usize> = (0..n).filter(|&v| dist[v] == Some(l)).collect();
            if shell.len() > size_cap || best.as_ref().is_some_and(|b| b.len() <= shell.len()) {
                continue;
            }
            if exceeds(n - largest_after(&shell).len(), k, shell.len()) {
                best = Some(shell);
            }
        }
    }
    EfficientCutSearch {
        step: best.map(make_step),
        complete: false,
    }
}

/// Outcome of rechecking the guarantees on a sequence's terminal subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceChecks {
    /// `2 |Γ_m| > n`.
    pub terminal_more_than_half: bool,
    /// `cut(Γ) / 2n`, the promised Cheeger lower bound.
    #[serde(with = "crate::rational::serde_ratio")]
    pub cheeger_floor: Rational,
    /// Exact Cheeger constant of the terminal, when small enough to compute.
    pub terminal_cheeger: Option<CheegerResult>,
    pub cheeger_floor_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficientCutSequence {
    pub origin: Graph,
    pub cut: CutResult,
    #[serde(with = "crate::rational::serde_ratio")]
    pub c_gamma: Rational,
    #[serde(with = "crate::rational::serde_ratio")]
    pub efficiency_k: Rational,
    /// Steps with vertex ids of the origin graph.
    pub steps: Vec<EfficientCutStep>,
    pub terminal: SubgraphRef,
    pub checks: SequenceChecks,
}

/// Greedy maximal chain of `3c/2`-efficient cuts starting from `g`.
pub fn efficient_cut_sequence(g: &Graph, budget: usize) -> Result<EfficientCutSequence> {
    let n = g.vertex_count();
    if n < 2 || !is_connected(g) {
        return Err(Error::precondition(
            "efficient cut sequences need a connected graph with at least 2 vertices",
        ));
    }
    let cut = cut_exact(g, budget)?;
    if cut.value == 0 {
        return Err(Error::precondition("cut(Γ) = 0 leaves c_Γ undefined"));
    }
    let c_gamma = Rational::new(n as i64, cut.value as i64);
    let k = c_gamma * Rational::new(3, 2);

    let mut steps = Vec::new();
    let mut current = g.clone();
    let mut to_origin: Vec<usize> = (0..n).collect();
    loop {
        let search = find_efficient_cut(&current, k, current.vertex_count());
        debug_assert!(search.complete);
        let Some(step) = search.step else { break };
        let removed = step.removed.iter().map(|&v| to_origin[v]).collect();
        let succ: Vec<usize> = step
            .successor
            .vertices
            .iter()
            .map(|&v| to_origin[v])
            .collect();
        let (next, map) = current.induced(&step.successor.vertices);
        to_origin = map.iter().map(|&v| to_origin[v]).collect();
        current = next;
        steps.push(EfficientCutStep {
            removed,
            successor: SubgraphRef::of_graph(succ),
            size_drop: step.size_drop,
        });
    }

    let terminal = SubgraphRef::of_graph(to_origin);
    let floor = Rational::new(cut.value as i64, 2 * n as i64);
    let terminal_cheeger = if current.vertex_count() <= budget && current.vertex_count() >= 2 {
        Some(cheeger_exact(&current, budget)?)
    } else {
        None
    };
    let checks = SequenceChecks {
        terminal_more_than_half: 2 * terminal.len() > n,
        cheeger_floor: floor,
        cheeger_floor_holds: terminal_cheeger.as_ref().map(|h| h.value >= floor),
        terminal_cheeger,
    };
    Ok(EfficientCutSequence {
        origin: g.clone(),
        cut,
        c_gamma,
        efficiency_k: k,
        steps,
        terminal,
        checks,
    })
}

/// An expanding subgraph with its certified Cheeger lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpanderCertificate {
    pub subgraph: SubgraphRef,
    #[serde(with = "crate::rational::serde_ratio")]
    pub epsilon: Rational,
    pub max_degree: usize,
    pub method: CertMethod,
    /// Exact Cheeger constant of the subgraph, when it was recomputed.
    #[serde(with = "crate::rational::serde_ratio_opt")]
    pub verified_cheeger: Option<Rational>,
}

/// Extracts the terminal of a maximal efficient-cut sequence: more than half
/// of the vertices, with Cheeger constant at least `cut / 2n`.
pub fn extract_expander(g: &Graph, budget: usize) -> Result<ExpanderCertificate> {
    if is_forest(g) {
        return Err(Error::precondition(
            "forests have cut size at most 1, so the certificate degenerates: not an expander",
        ));
    }
    let seq = efficient_cut_sequence(g, budget)?;
    let sub = seq.terminal.induced(g)?;
    if seq.checks.cheeger_floor_holds == Some(false) || !seq.checks.terminal_more_than_half {
        return Err(Error::precondition("terminal failed its recheck"));
    }
    Ok(ExpanderCertificate {
        max_degree: sub.max_degree(),
        epsilon: seq.checks.cheeger_floor,
        verified_cheeger: seq.checks.terminal_cheeger.as_ref().map(|h| h.value),
        method: CertMethod::Exhaustive,
        subgraph: seq.terminal,
    })
}
