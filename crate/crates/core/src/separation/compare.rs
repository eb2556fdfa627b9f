use serde::{Deserialize, Serialize};

use super::{PointKind, SeparationProfile};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Dominated,
    NotDominatedOnRange,
    IncomparableOnRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub f: usize,
    pub f_kind: PointKind,
    pub g: usize,
    pub g_kind: PointKind,
    /// Least `C` with `f(n) <= C g(n) + C` at this `n`.
    pub required: usize,
}

impl ComparisonRow {
    /// Whether a gap here is backed by a lower bound on `f` and an upper bound on `g`.
    pub fn is_sound(&self) -> bool {
        self.f_kind != PointKind::Upper && self.g_kind != PointKind::Lower
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileComparison {
    pub relation: Relation,
    /// Least `C >= 1` with `f(n) <= C g(n) + C` at every common sample.
    pub constant: usize,
    pub evidence: Vec<ComparisonRow>,
    /// The sample demanding the largest constant.
    pub worst: ComparisonRow,
    /// Samples where `f` strictly exceeds `g` with sound point kinds.
    pub gaps: Vec<usize>,
}

/// Tests `f ≼ g` on the common sampled range.
///
/// Every sample demands some constant; the largest one is reported. Growth
/// of the demanded constant from the lower half of the range to the upper
/// half is read as evidence against domination. That evidence is only
/// called `NotDominatedOnRange` when every row pits a lower or exact value
/// of `f` against an upper or exact value of `g`.
pub fn compare_profiles(f: &SeparationProfile, g: &SeparationProfile) -> Result<ProfileComparison> {
    let mut rows = Vec::new();
    for n in f.sample_sizes() {
        let (Some((fv, fk)), Some((gv, gk))) = (pick(f, n, true), pick(g, n, false)) else {
            continue;
        };
        rows.push(ComparisonRow {
            n,
            f: fv,
            f_kind: fk,
            g: gv,
            g_kind: gk,
            required: fv.div_ceil(gv + 1),
        });
    }
    if rows.is_empty() {
        return Err(Error::precondition(
            "profiles share no sample sizes; nothing to compare",
        ));
    }
    let constant = rows.iter().map(|r| r.required).max().unwrap_or(0).max(1);
    let worst = rows
        .iter()
        .max_by(|a, b| a.required.cmp(&b.required).then(b.n.cmp(&a.n)))
        .cloned()
        .expect("rows nonempty");
    let half = rows.len() / 2;
    let growing = rows.len() >= 2 && {
        let lo = rows[..half].iter().map(|r| r.required).max().unwrap_or(0);
        let hi = rows[half..].iter().map(|r| r.required).max().unwrap_or(0);
        hi > lo
    };
    let relation = if !growing {
        Relation::Dominated
    } else if rows.iter().all(ComparisonRow::is_sound) {
        Relation::NotDominatedOnRange
    } else {
        Relation::IncomparableOnRange
    };
    let gaps = rows
        .iter()
        .filter(|r| r.is_sound() && r.f > r.g)
        .map(|r| r.n)
        .collect();
    Ok(ProfileComparison {
        relation,
        constant,
        evidence: rows,
        worst,
        gaps,
    })
}

/// The value of a profile at `n` in the role it plays: the largest lower
/// or exact value for the left side, the smallest upper or exact value for
/// the right side, falling back to the other kind if that is all there is.
fn pick(p: &SeparationProfile, n: usize, left: bool) -> Option<(usize, PointKind)> {
    let at: Vec<_> = p.points().iter().filter(|q| q.n == n).collect();
    let preferred = |k: PointKind| {
        if left {
            k != PointKind::Upper
        } else {
            k != PointKind::Lower
        }
    };
    let choose = |pool: Vec<&&super::ProfilePoint>| {
        if left {
            pool.into_iter().max_by_key(|q| q.value)
        } else {
            pool.into_iter().min_by_key(|q| q.value)
        }
        .map(|q| (q.value, q.kind))
    };
    choose(at.iter().filter(|q| preferred(q.kind)).collect())
        .or_else(|| choose(at.iter().collect()))
}
