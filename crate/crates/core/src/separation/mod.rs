//! Separation profiles: `sep_X(n)` is the largest cut size over subgraphs of
//! `X` with at most `n` vertices.
//!
//! Exact values are only reachable on tiny hosts, so a profile stores points
//! of three kinds (exact, lower, upper). Lower and exact points carry a
//! witness subgraph whose cut can be recomputed.

mod compare;
mod exact;
mod lower;
mod regular_map;
mod upper;

pub use compare::{compare_profiles, ComparisonRow, ProfileComparison, Relation};
pub use exact::{cut_of_induced, sep_exact_profile, sep_exact_small, MAX_EXACT_HOST};
pub use lower::{sep_lower_estimate, SepHost};
pub use regular_map::{verify_regular_map, RegularMapCertificate};
pub use upper::{
    sep_upper_family, sep_upper_family_refined, CaseRelation, FamilyUpperBound, UpperCase,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SubgraphRef;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Exact,
    Lower,
    Upper,
}

impl std::fmt::Display for PointKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PointKind::Exact => "exact",
            PointKind::Lower => "lower",
            PointKind::Upper => "upper",
        })
    }
}

impl std::str::FromStr for PointKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(PointKind::Exact),
            "lower" => Ok(PointKind::Lower),
            "upper" => Ok(PointKind::Upper),
            other => Err(Error::precondition(format!("unknown point kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub n: usize,
    pub value: usize,
    pub kind: PointKind,
    /// Absent for upper points.
    pub witness: Option<SubgraphRef>,
    /// How the value was obtained: exhaustive, heuristic, formula, ...
    pub method: String,
}

impl ProfilePoint {
    pub fn witness_size(&self) -> Option<usize> {
        self.witness.as_ref().map(SubgraphRef::len)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationProfile {
    pub source: String,
    #[serde(default)]
    pub seed: Option<u64>,
    points: Vec<ProfilePoint>,
}

impl SeparationProfile {
    pub fn new(source: impl Into<String>) -> Self {
        SeparationProfile {
            source: source.into(),
            seed: None,
            points: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Inserts a point, keeping the list ordered by `(n, kind)`; a point of
    /// the same `n` and kind is replaced.
    pub fn insert(&mut self, p: ProfilePoint) {
        match self
            .points
            .binary_search_by(|q| (q.n, q.kind).cmp(&(p.n, p.kind)))
        {
            Ok(i) => self.points[i] = p,
            Err(i) => self.points.insert(i, p),
        }
    }

    pub fn points(&self) -> &[ProfilePoint] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, n: usize, kind: PointKind) -> Option<&ProfilePoint> {
        self.points.iter().find(|p| p.n == n && p.kind == kind)
    }

    pub fn sample_sizes(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.points.iter().map(|p| p.n).collect();
        ns.dedup();
        ns
    }

    /// CSV with columns `n,value,kind,witness_size`, rows sorted by `n`.
    pub fn to_csv(&self) -> Result<String> {
        if self.points.is_empty() {
            return Err(Error::precondition("cannot emit an empty profile"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "value", "kind", "witness_size"])?;
        for p in &self.points {
            w.write_record([
                p.n.to_string(),
                p.value.to_string(),
                p.kind.to_string(),
                p.witness_size().map(|s| s.to_string()).unwrap_or_default(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(n: usize, value: usize, kind: PointKind, w: Option<usize>) -> ProfilePoint {
        ProfilePoint {
            n,
            value,
            kind,
            witness: w.map(|k| SubgraphRef::of_graph((0..k).collect())),
            method: "test".into(),
        }
    }

    #[test]
    fn csv_rows() {
        let mut p = SeparationProfile::new("x");
        p.insert(pt(10, 3, PointKind::Exact, Some(10)));
        assert_eq!(
            p.to_csv().unwrap(),
            "n,value,kind,witness_size\n10,3,exact,10\n"
        );
        p.insert(pt(4, 2, PointKind::Upper, None));
        p.insert(pt(4, 1, PointKind::Lower, Some(3)));
        assert_eq!(
            p.to_csv().unwrap(),
            "n,value,kind,witness_size\n4,1,lower,3\n4,2,upper,\n10,3,exact,10\n"
        );
        assert!(SeparationProfile::new("empty").to_csv().is_err());
    }

    #[test]
    fn insert_replaces_same_kind() {
        let mut p = SeparationProfile::new("x");
        p.insert(pt(4, 1, PointKind::Lower, Some(3)));
        p.insert(pt(4, 2, PointKind::Lower, Some(4)));
        assert_eq!(p.points().len(), 1);
        assert_eq!(p.point(4, PointKind::Lower).unwrap().value, 2);
        assert_eq!(p.sample_sizes(), vec![4]);
    }
}
