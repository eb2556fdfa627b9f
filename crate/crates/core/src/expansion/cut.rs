use serde::{Deserialize, Serialize};

use super::search::first_combination;
use super::{cheeger_spectral_lower, heuristic_cut, Budget, CutMethod, CutResult};
use crate::error::{Error, Result};
use crate::graph::{
    is_connected, is_forest, largest_component_within, vec_to_mask, BitGraph, Graph,
};
use crate::rational::{self, Rational};

/// Size of a largest component left after deleting `removed`.
pub fn largest_component_after(g: &Graph, removed: &[usize]) -> usize {
    let mut alive = vec![true; g.vertex_count()];
    for &v in removed {
        alive[v] = false;
    }
    largest_component_within(g, &alive).len()
}

/// Whether deleting `removed` leaves every component with at most `n/2` vertices.
pub fn is_balanced_cut(g: &Graph, removed: &[usize]) -> bool {
    2 * largest_component_after(g, removed) <= g.vertex_count()
}

/// Minimum balanced cut by enumerating candidate sets in increasing size,
/// each size in lexicographic order.
pub fn cut_exact(g: &Graph, budget: usize) -> Result<CutResult> {
    let n = g.vertex_count();
    if n > budget || n > BitGraph::MAX_VERTICES {
        return Err(Error::BudgetExceeded {
            what: "exhaustive cut search",
            needed: n,
            budget: budget.min(BitGraph::MAX_VERTICES),
        });
    }
    let bits = BitGraph::new(g).expect("size checked above");
    let limit = (n / 2) as u32;
    let full = bits.full();
    for k in 0..=n {
        let hit = first_combination(n, k, |s| {
            bits.components_at_most(full & !vec_to_mask(s), limit)
        });
        if let Some(witness) = hit {
            let largest = bits
                .largest_component(full & !vec_to_mask(&witness))
                .count_ones() as usize;
            return Ok(CutResult {
                value: k,
                witness,
                largest_component_size: largest,
                method: CutMethod::Exhaustive,
                budget_used: budget,
            });
        }
    }
    unreachable!("deleting every vertex is always balanced")
}

/// Certified bracket on the cut size of a graph too large to search exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutBounds {
    pub lower: usize,
    pub lower_method: String,
    /// Cheeger lower bound used for the lower value, if any.
    #[serde(with = "crate::rational::serde_ratio_opt")]
    pub cheeger_lower: Option<Rational>,
    pub upper: usize,
    pub witness: Vec<usize>,
    pub upper_method: CutMethod,
}

/// Lower bound from `cut >= h n / 4` with any certified Cheeger lower bound
/// (at least 1 for an unbalanced graph); upper bound from the best witness found.
pub fn cut_bounds(g: &Graph, budget: &Budget) -> CutBounds {
    let n = g.vertex_count();
    if is_balanced_cut(g, &[]) {
        return CutBounds {
            lower: 0,
            lower_method: "balanced".into(),
            cheeger_lower: None,
            upper: 0,
            witness: Vec::new(),
            upper_method: CutMethod::Exhaustive,
        };
    }
    if n <= budget.exhaustive_n {
        if let Ok(exact) = cut_exact(g, budget.exhaustive_n) {
            return CutBounds {
                lower: exact.value,
                lower_method: "exhaustive".into(),
                cheeger_lower: None,
                upper: exact.value,
                witness: exact.witness,
                upper_method: CutMethod::Exhaustive,
            };
        }
    }
    let forest = is_forest(g);
    let (witness, upper_method) = if forest {
        (super::centroid_cut(g), CutMethod::Centroid)
    } else {
        (
            heuristic_cut(g, budget.heuristic_iterations, budget.seed),
            CutMethod::Heuristic,
        )
    };
    let mut lower = 1;
    let mut lower_method = String::from("unbalanced");
    let mut cheeger_lower = None;
    if !forest && is_connected(g) && g.regular_degree().is_some() {
        if let Ok(b) = cheeger_spectral_lower(g) {
            let from_cheeger = rational::ceil(&(b.value * Rational::new(n as i64, 4)));
            cheeger_lower = Some(b.value);
            if from_cheeger as usize > lower {
                lower = from_cheeger as usize;
                lower_method = "spectral".into();
            }
        }
    }
    CutBounds {
        lower,
        lower_method,
        cheeger_lower,
        upper: witness.len(),
        witness,
        upper_method,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn exact_examples() {
        let s = cut_exact(&star(5), 20).unwrap();
        assert_eq!((s.value, s.witness.clone()), (1, vec![0]));
        assert_eq!(cut_exact(&complete(4), 20).unwrap().value, 2);
        assert_eq!(cut_exact(&cycle(6), 20).unwrap().value, 2);
        let kk = complete(4).disjoint_union(&complete(4));
        let r = cut_exact(&kk, 20).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.largest_component_size, 4);
        assert_eq!(cut_exact(&Graph::empty(1), 20).unwrap().value, 1);
        assert_eq!(cut_exact(&Graph::empty(0), 20).unwrap().value, 0);
        assert_eq!(cut_exact(&petersen(), 20).unwrap().value, 4);
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // C6: {0,3} leaves two paths of length 2; {0,1} leaves P4 (too big); {0,2} leaves {1},{3,4,5}
        let r = cut_exact(&cycle(6), 20).unwrap();
        assert_eq!(r.witness, vec![0, 2]);
        assert!(is_balanced_cut(&cycle(6), &r.witness));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            cut_exact(&path(21), 20),
            Err(Error::BudgetExceeded { needed: 21, .. })
        ));
    }

    #[test]
    fn bounds_bracket_exact_values() {
        let p = petersen();
        let forced = Budget {
            exhaustive_n: 0,
            ..Budget::default()
        };
        let b = cut_bounds(&p, &forced);
        assert!(b.lower >= 1 && b.lower <= 4 && b.upper >= 4, "{b:?}");
        assert!(is_balanced_cut(&p, &b.witness));
        assert_eq!(b.cheeger_lower, Some(Rational::new(1, 3)));

        let exact = cut_bounds(&p, &Budget::default());
        assert_eq!((exact.lower, exact.upper), (4, 4));

        // a 15-vertex tree: the centroid cut has size 1
        let tree = Graph::from_edges(15, (1..15).map(|i| ((i - 1) / 2, i))).unwrap();
        let b = cut_bounds(&tree, &forced);
        assert_eq!((b.lower, b.upper), (1, 1));
        assert_eq!(b.upper_method, CutMethod::Centroid);
    }

    #[test]
    fn balaban_bounds() {
        let b11 = crate::families::builtin_graph("balaban-11").unwrap();
        let b = cut_bounds(&b11, &Budget::default());
        let h_lb = b.cheeger_lower.unwrap();
        assert_eq!(
            b.lower as i64,
            rational::ceil(&(h_lb * Rational::new(112, 4))).max(1)
        );
        assert!(b.lower <= b.upper);
        assert!(is_balanced_cut(&b11, &b.witness));
    }
}
