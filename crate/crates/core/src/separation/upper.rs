use serde::{Deserialize, Serialize};

use super::{sep_exact_small, PointKind, ProfilePoint, MAX_EXACT_HOST};
use crate::error::{Error, Result};
use crate::graph::GraphFamily;

/// Where the majority component of a subgraph sits relative to the target index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseRelation {
    Below,
    Target,
    Above,
    NoMajority,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperCase {
    /// Base index of the component holding the majority; absent for `NoMajority`.
    pub component_index: Option<usize>,
    pub relation: CaseRelation,
    pub bound: usize,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyUpperBound {
    pub point: ProfilePoint,
    pub cases: Vec<UpperCase>,
}

/// Upper bound on `sep_f(n)` for a family drawn from a girth-sparsified
/// sequence, by splitting on which component holds more than half of a
/// subgraph. Component indices are the base-sequence indices; `c` is the
/// target index the family is compared against.
pub fn sep_upper_family(f: &GraphFamily, c: usize, n: usize) -> Result<FamilyUpperBound> {
    upper(f, c, n, false)
}

/// As [`sep_upper_family`], but components of at most 16 vertices at or
/// below the target are bounded by their exact separation profile.
pub fn sep_upper_family_refined(f: &GraphFamily, c: usize, n: usize) -> Result<FamilyUpperBound> {
    upper(f, c, n, true)
}

fn upper(f: &GraphFamily, c: usize, n: usize, refine: bool) -> Result<FamilyUpperBound> {
    check_chain(f)?;
    let half_up = n.div_ceil(2);
    let mut cases = vec![UpperCase {
        component_index: None,
        relation: CaseRelation::NoMajority,
        bound: 0,
        method: "no-majority".into(),
    }];
    for comp in f.components() {
        let d = comp.index;
        let size = comp.size();
        let case = if d > c {
            if !comp.girth.exceeds(n) {
                return Err(Error::precondition(format!(
                    "component {} has girth {} <= {n}; its small subgraphs need not be forests",
                    comp.name, comp.girth
                )));
            }
            UpperCase {
                component_index: Some(d),
                relation: CaseRelation::Above,
                bound: n.min(1),
                method: "forest".into(),
            }
        } else {
            let relation = if d == c {
                CaseRelation::Target
            } else {
                CaseRelation::Below
            };
            let formula = if d == c {
                half_up
            } else {
                (2 * size).min(half_up)
            };
            if refine && size <= MAX_EXACT_HOST {
                let exact = sep_exact_small(&comp.graph, n.min(size))?.value;
                UpperCase {
                    component_index: Some(d),
                    relation,
                    bound: exact.min(formula),
                    method: "exact-component".into(),
                }
            } else {
                UpperCase {
                    component_index: Some(d),
                    relation,
                    bound: formula,
                    method: "formula".into(),
                }
            }
        };
        cases.push(case);
    }
    let value = cases.iter().map(|c| c.bound).max().unwrap_or(0);
    let method = if cases.iter().any(|c| c.method == "exact-component") {
        "case-analysis-refined"
    } else {
        "case-analysis"
    };
    Ok(FamilyUpperBound {
        point: ProfilePoint {
            n,
            value,
            kind: PointKind::Upper,
            witness: None,
            method: method.into(),
        },
        cases,
    })
}

fn check_chain(f: &GraphFamily) -> Result<()> {
    for w in f.components().windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.index >= b.index || a.size() >= b.size() {
            return Err(Error::precondition(format!(
                "components {} and {} are not strictly increasing",
                a.name, b.name
            )));
        }
        if !b.girth.exceeds(a.size()) {
            return Err(Error::precondition(format!(
                "girth chain broken: girth of {} is {}, not above |{}| = {}",
                b.name,
                b.girth,
                a.name,
                a.size()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin_graph;
    use crate::graph::generators::complete;
    use crate::graph::FamilyComponent;

    fn family(parts: &[(usize, &str)]) -> GraphFamily {
        let comps = parts
            .iter()
            .map(|&(i, name)| FamilyComponent::new(i, name, builtin_graph(name).unwrap()))
            .collect();
        GraphFamily::new(comps).unwrap()
    }

    #[test]
    fn k4_and_balaban_against_petersen() {
        let f = family(&[(1, "k4"), (3, "balaban-11")]);
        let plain = sep_upper_family(&f, 2, 10).unwrap();
        assert_eq!(plain.point.value, 5);
        assert_eq!(plain.point.kind, PointKind::Upper);
        let refined = sep_upper_family_refined(&f, 2, 10).unwrap();
        assert_eq!(refined.point.value, 2);
        let above = refined
            .cases
            .iter()
            .find(|c| c.relation == CaseRelation::Above)
            .unwrap();
        assert_eq!(above.bound, 1);
    }

    #[test]
    fn single_small_component() {
        let f = family(&[(1, "k4")]);
        assert_eq!(sep_upper_family(&f, 2, 4).unwrap().point.value, 2);
    }

    #[test]
    fn broken_chain_refused() {
        let comps = vec![
            FamilyComponent::new(1, "k4", complete(4)),
            FamilyComponent::new(2, "k5", complete(5)),
        ];
        let f = GraphFamily::new(comps).unwrap();
        assert!(matches!(
            sep_upper_family(&f, 1, 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn above_needs_girth_beyond_n() {
        let f = family(&[(1, "k4"), (2, "petersen")]);
        assert!(sep_upper_family(&f, 1, 4).is_ok());
        assert!(sep_upper_family(&f, 1, 5).is_err());
    }
}
