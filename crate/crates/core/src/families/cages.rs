use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{auto_certify, EpsilonCertificate};
use crate::graph::generators::{complete, lcf, petersen};
use crate::graph::{girth, FamilyComponent, Girth, Graph};

/// A certified component: everything here can be recomputed from `graph`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub name: String,
    pub graph: Graph,
    pub size: usize,
    pub girth: Girth,
    pub epsilon: EpsilonCertificate,
    pub degree: usize,
}

impl ComponentRecord {
    /// Computes girth and degree and certifies a Cheeger lower bound.
    pub fn certify(name: impl Into<String>, graph: Graph) -> Result<Self> {
        Ok(ComponentRecord {
            name: name.into(),
            size: graph.vertex_count(),
            girth: girth(&graph),
            epsilon: auto_certify(&graph)?,
            degree: graph.max_degree(),
            graph,
        })
    }

    /// The record as the `index`-th member of a family.
    pub fn to_component(&self, index: usize) -> FamilyComponent {
        let mut c = FamilyComponent::new(index, self.name.clone(), self.graph.clone())
            .with_epsilon(self.epsilon);
        c.max_degree = self.degree;
        c
    }
}

enum Table {
    Complete(usize),
    Petersen,
    Lcf {
        n: usize,
        shifts: &'static [i64],
        repeats: usize,
    },
}

struct CageSpec {
    name: &'static str,
    size: usize,
    girth: usize,
    table: Table,
}

const BALABAN_10: [i64; 70] = [
    -9, -25, -19, 29, 13, 35, -13, -29, 19, 25, 9, -29, 29, 17, 33, 21, 9, -13, -31, -9, 25, 17, 9,
    -31, 27, -9, 17, -19, -29, 27, -17, -9, -29, 33, -25, 25, -21, 17, -17, 29, 35, -29, 17, -17,
    21, -25, 25, -33, 29, 9, 17, -27, 29, 19, -17, 9, -27, 31, -9, -17, -25, 9, 31, 13, -9, -21,
    -33, -17, -29, 29,
];

const BALABAN_11: [i64; 112] = [
    44, 26, -47, -15, 35, -39, 11, -27, 38, -37, 43, 14, 28, 51, -29, -16, 41, -11, -26, 15, 22,
    -51, -35, 36, 52, -14, -33, -26, -46, 52, 26, 16, 43, 33, -15, 17, -53, 23, -42, -35, -28, 30,
    -22, 45, -44, 16, -38, -16, 50, -55, 20, 28, -17, -43, 47, 34, -26, -41, 11, -36, -23, -16, 41,
    17, -51, 26, -33, 47, 17, -11, -20, -30, 21, 29, 36, -43, -52, 10, 39, -28, -17, -52, 51, 26,
    37, -17, 10, -10, -45, -34, 17, -26, 27, -21, 46, 53, -10, 29, -50, 35, 15, -47, -29, -41, 26,
    33, 55, -17, 42, -26, -36, 16,
];

const TUTTE_12: [i64; 18] = [
    17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17,
];

const CAGES: [CageSpec; 8] = [
    CageSpec {
        name: "k4",
        size: 4,
        girth: 3,
        table: Table::Complete(4),
    },
    CageSpec {
        name: "petersen",
        size: 10,
        girth: 5,
        table: Table::Petersen,
    },
    CageSpec {
        name: "heawood",
        size: 14,
        girth: 6,
        table: Table::Lcf {
            n: 14,
            shifts: &[5, -5],
            repeats: 7,
        },
    },
    CageSpec {
        name: "mcgee",
        size: 24,
        girth: 7,
        table: Table::Lcf {
            n: 24,
            shifts: &[12, 7, -7],
            repeats: 8,
        },
    },
    CageSpec {
        name: "tutte-coxeter",
        size: 30,
        girth: 8,
        table: Table::Lcf {
            n: 30,
            shifts: &[-13, -9, 7, -7, 9, 13],
            repeats: 5,
        },
    },
    CageSpec {
        name: "balaban-10",
        size: 70,
        girth: 10,
        table: Table::Lcf {
            n: 70,
            shifts: &BALABAN_10,
            repeats: 1,
        },
    },
    CageSpec {
        name: "balaban-11",
        size: 112,
        girth: 11,
        table: Table::Lcf {
            n: 112,
            shifts: &BALABAN_11,
            repeats: 1,
        },
    },
    CageSpec {
        name: "tutte-12",
        size: 126,
        girth: 12,
        table: Table::Lcf {
            n: 126,
            shifts: &TUTTE_12,
            repeats: 7,
        },
    },
];

/// Names accepted by [`builtin_graph`], smallest first.
pub fn builtin_names() -> Vec<&'static str> {
    CAGES.iter().map(|c| c.name).collect()
}

fn build(spec: &CageSpec) -> Graph {
    match spec.table {
        Table::Complete(n) => complete(n),
        Table::Petersen => petersen(),
        Table::Lcf { n, shifts, repeats } => lcf(n, shifts, repeats),
    }
}

fn self_check(spec: &CageSpec, g: &Graph) -> Result<()> {
    let found = girth(g);
    if g.vertex_count() != spec.size
        || g.regular_degree() != Some(3)
        || found != Girth::Finite(spec.girth)
    {
        return Err(Error::precondition(format!(
            "embedded table for {} is corrupt: {} vertices, degree {:?}, girth {found} \
             (expected {} vertices, cubic, girth {})",
            spec.name,
            g.vertex_count(),
            g.regular_degree(),
            spec.size,
            spec.girth
        )));
    }
    Ok(())
}

/// An embedded graph by name; underscores and case are ignored.
pub fn builtin_graph(name: &str) -> Result<Graph> {
    let key = name.trim().to_ascii_lowercase().replace('_', "-");
    let spec = CAGES.iter().find(|c| c.name == key).ok_or_else(|| {
        Error::precondition(format!(
            "unknown builtin graph {name:?}; known: {}",
            builtin_names().join(", ")
        ))
    })?;
    let g = build(spec);
    self_check(spec, &g)?;
    Ok(g)
}

/// All embedded cages with recomputed girth and certified expansion,
/// ordered by size. The result is computed once per process.
pub fn builtin_cages() -> Result<Vec<ComponentRecord>> {
    static CACHE: OnceLock<std::result::Result<Vec<ComponentRecord>, String>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            CAGES
                .par_iter()
                .map(|spec| {
                    let g = build(spec);
                    self_check(spec, &g)?;
                    ComponentRecord::certify(spec.name, g)
                })
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())
        })
        .clone()
        .map_err(Error::Precondition)
}
