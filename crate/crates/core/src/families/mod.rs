//! Expander sequences with unbounded girth, and the families `X(M)` built
//! from them by index sets.

mod cages;
mod index;
mod random;
mod sparsify;

pub use cages::{builtin_cages, builtin_graph, builtin_names, ComponentRecord};
pub use index::{
    bits_from_seed, continuum_index_set, index_set, membership_index_set, IndexEncoding, IndexSet,
};
pub use random::{random_regular, MAX_PAIRING_ATTEMPTS};
pub use sparsify::{sparsify_for_girth, SparsifiedSequence};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{cut_bounds, cut_exact, Budget, CertMethod, DEFAULT_EXHAUSTIVE_N};
use crate::graph::{GraphFamily, HostRef, SubgraphRef};
use crate::rational::{self, Rational};
use crate::separation::{sep_upper_family_refined, UpperCase};

/// Indices of `m` that point past the end of `base`.
pub fn out_of_range(base: &SparsifiedSequence, m: &IndexSet) -> Vec<u64> {
    m.elements
        .iter()
        .copied()
        .filter(|&i| i == 0 || i > base.len() as u64)
        .collect()
}

/// `X(M)`: the components of `base` at the indices in `m`, in order.
/// Indices beyond the base are dropped with a warning.
pub fn build_family(base: &SparsifiedSequence, m: &IndexSet) -> Result<GraphFamily> {
    let dropped = out_of_range(base, m);
    if !dropped.is_empty() {
        log::warn!(
            "dropping indices {dropped:?}: the base sequence has {} terms",
            base.len()
        );
    }
    let comps: Vec<_> = m
        .elements
        .iter()
        .filter_map(|&i| {
            let i = usize::try_from(i).ok()?;
            base.get(i).map(|r| r.to_component(i))
        })
        .collect();
    if comps.is_empty() {
        return Err(Error::precondition(format!(
            "index set {:?} selects no term of a {}-term sequence",
            m.elements,
            base.len()
        )));
    }
    GraphFamily::new(comps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Gap,
    NoGapAtThisScale,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Gap => "gap",
            Verdict::NoGapAtThisScale => "no-gap-at-this-scale",
        })
    }
}

/// Separation of `X(M)` and `X(N)` at the scale `|Γ_c|`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistinguishReport {
    pub c: usize,
    pub component: String,
    pub component_size: usize,
    /// Cut of `Γ_c` (exact when small, otherwise a certified lower bound).
    pub cut_at_c: usize,
    pub cut_method: String,
    /// `ceil(ε_c |Γ_c| / 4)`.
    pub cheeger_bound_at_c: usize,
    pub lower_at_c: usize,
    pub upper_at_c: usize,
    pub upper_method: String,
    pub upper_cases: Vec<UpperCase>,
    #[serde(with = "crate::rational::serde_ratio")]
    pub epsilon_used: Rational,
    pub epsilon_method: CertMethod,
    pub verdict: Verdict,
    /// `Γ_c` as a subgraph of `X(M)`.
    pub witness: SubgraphRef,
    pub m: IndexSet,
    pub n: IndexSet,
    pub dropped_m: Vec<u64>,
    pub dropped_n: Vec<u64>,
}

/// Compares a witnessed lower bound on `sep_{X(M)}(|Γ_c|)` with the
/// case-analysis upper bound on `sep_{X(N)}(|Γ_c|)`.
pub fn distinguish(
    base: &SparsifiedSequence,
    m: &IndexSet,
    n: &IndexSet,
    c: usize,
) -> Result<DistinguishReport> {
    let ci = c as u64;
    if !m.contains(ci) || n.contains(ci) {
        return Err(Error::precondition(format!(
            "index {c} must lie in M = {:?} and not in N = {:?}",
            m.elements, n.elements
        )));
    }
    let record = base.get(c).ok_or_else(|| {
        Error::precondition(format!("index {c} is beyond the {}-term base", base.len()))
    })?;
    let xm = build_family(base, m)?;
    let xn = build_family(base, n)?;
    let size = record.size;

    let (cut_at_c, cut_method) = if size <= DEFAULT_EXHAUSTIVE_N {
        (
            cut_exact(&record.graph, DEFAULT_EXHAUSTIVE_N)?.value,
            "exhaustive".to_string(),
        )
    } else {
        let b = cut_bounds(&record.graph, &Budget::default());
        (b.lower, format!("lower-bound:{}", b.lower_method))
    };
    let eps = record.epsilon.value;
    let cheeger_bound_at_c =
        rational::ceil(&(eps * Rational::from_integer(size as i64) / Rational::from_integer(4)))
            as usize;
    let lower_at_c = cut_at_c.max(cheeger_bound_at_c);

    let upper = sep_upper_family_refined(&xn, c, size)?;
    let pos = xm
        .components()
        .iter()
        .position(|comp| comp.index == c)
        .expect("c is in M and in range");
    let verdict = if lower_at_c > upper.point.value {
        Verdict::Gap
    } else {
        Verdict::NoGapAtThisScale
    };
    Ok(DistinguishReport {
        c,
        component: record.name.clone(),
        component_size: size,
        cut_at_c,
        cut_method,
        cheeger_bound_at_c,
        lower_at_c,
        upper_at_c: upper.point.value,
        upper_method: upper.point.method,
        upper_cases: upper.cases,
        epsilon_used: eps,
        epsilon_method: record.epsilon.method,
        verdict,
        witness: SubgraphRef::new(HostRef::Component(pos), (0..size).collect()),
        m: m.clone(),
        n: n.clone(),
        dropped_m: out_of_range(base, m),
        dropped_n: out_of_range(base, n),
    })
}
