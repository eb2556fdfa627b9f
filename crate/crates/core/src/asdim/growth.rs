use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_from, Graph};

/// A ball-growth bound `γ` paired with a linear diameter control
/// `h(k) = coefficient · k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GrowthModel {
    /// Measured on a finite graph: `gamma[k]` is the largest ball of radius
    /// `k`, constant once it covers a component.
    Empirical {
        gamma: Vec<usize>,
        coefficient: usize,
    },
    /// `Z^dim` with the l1 metric.
    Grid { dim: usize, coefficient: usize },
    /// `γ(k) = base^k`.
    Exponential { base: u64, coefficient: usize },
}

impl GrowthModel {
    pub fn grid(dim: usize) -> Self {
        GrowthModel::Grid {
            dim,
            coefficient: dim,
        }
    }

    /// Largest ball sizes of `g` at every radius up to its diameter.
    pub fn empirical(g: &Graph, coefficient: usize) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::precondition("growth of the empty graph"));
        }
        let gamma = (0..g.vertex_count())
            .into_par_iter()
            .map(|v| {
                let mut layers: Vec<usize> = Vec::new();
                for d in bfs_from(g, &[v], usize::MAX).into_iter().flatten() {
                    if layers.len() <= d {
                        layers.resize(d + 1, 0);
                    }
                    layers[d] += 1;
                }
                layers
                    .iter()
                    .scan(0, |acc, &c| {
                        *acc += c;
                        Some(*acc)
                    })
                    .collect::<Vec<usize>>()
            })
            .reduce(Vec::new, |a, b| {
                let len = a.len().max(b.len());
                let at = |x: &Vec<usize>, i: usize| x.get(i).or(x.last()).copied().unwrap_or(0);
                (0..len).map(|i| at(&a, i).max(at(&b, i))).collect()
            });
        Ok(GrowthModel::Empirical { gamma, coefficient })
    }

    pub fn coefficient(&self) -> usize {
        match *self {
            GrowthModel::Empirical { coefficient, .. }
            | GrowthModel::Grid { coefficient, .. }
            | GrowthModel::Exponential { coefficient, .. } => coefficient,
        }
    }

    pub fn h(&self, k: usize) -> usize {
        self.coefficient().saturating_mul(k)
    }

    /// `γ(k)`, saturating at `u128::MAX`.
    pub fn gamma(&self, k: usize) -> u128 {
        match self {
            GrowthModel::Empirical { gamma, .. } => {
                gamma.get(k).or(gamma.last()).copied().unwrap_or(0) as u128
            }
            GrowthModel::Grid { dim, .. } => lattice_ball(*dim, k),
            GrowthModel::Exponential { base, .. } => {
                let mut acc: u128 = 1;
                for _ in 0..k {
                    acc = acc.saturating_mul(*base as u128);
                    if acc == u128::MAX {
                        break;
                    }
                }
                acc
            }
        }
    }

    fn saturation(&self) -> Option<usize> {
        match self {
            GrowthModel::Empirical { gamma, .. } => Some(gamma.len().saturating_sub(1)),
            _ => None,
        }
    }
}

/// Points of `Z^d` within l1 distance `k` of the origin:
/// `Σ_i 2^i C(d, i) C(k, i)`.
pub fn lattice_ball(d: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut cd: u128 = 1;
    let mut ck: u128 = 1;
    for i in 0..=d.min(k) {
        if i > 0 {
            cd = cd * (d - i + 1) as u128 / i as u128;
            ck = ck.saturating_mul((k - i + 1) as u128) / i as u128;
        }
        let term = (1u128 << i.min(127)).saturating_mul(cd).saturating_mul(ck);
        total = total.saturating_add(term);
    }
    total
}

/// `max { k : γ(h(k)) <= n }`, or 0 when `k = 1` already fails.
///
/// For an empirical model the ball sizes stop growing at the diameter, so
/// once `n` covers the whole graph every `k` qualifies; the first `k` with
/// `h(k)` past the saturation radius is returned instead.
pub fn f_h(model: &GrowthModel, n: u128) -> usize {
    let fits = |k: usize| model.gamma(model.h(k)) <= n;
    if !fits(1) {
        return 0;
    }
    if let Some(sat) = model.saturation() {
        let first_full = sat.div_ceil(model.coefficient().max(1)).max(1);
        if fits(first_full) {
            return first_full;
        }
    }
    let mut hi = 2usize;
    while fits(hi) {
        if hi == usize::MAX {
            return hi;
        }
        hi = hi.saturating_mul(2);
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `min { k : (1 - 1/4m)^k <= 1/2 }`, computed exactly as the least `k`
/// with `2 (4m - 1)^k <= (4m)^k`.
pub fn k_of_m(m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::precondition("cover needs at least one class"));
    }
    let a = BigUint::from(4 * m as u64 - 1);
    let b = BigUint::from(4 * m as u64);
    let mut num = BigUint::from(2u32);
    let mut den = BigUint::from(1u32);
    let mut k = 0;
    while num > den {
        num *= &a;
        den *= &b;
        k += 1;
    }
    Ok(k)
}

/// `ceil(k(m) n / f_h(floor(n / 2m)))`.
pub fn sep_upper_asdim(model: &GrowthModel, m: usize, n: usize) -> Result<usize> {
    let k = k_of_m(m)?;
    let f = f_h(model, (n / (2 * m)) as u128);
    if f == 0 {
        return Err(Error::Degenerate(format!(
            "f_h({}) = 0: n = {n} is below the scale of the cover",
            n / (2 * m)
        )));
    }
    Ok((k * n).div_ceil(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{grid, path};
    use crate::graph::growth_function;

    #[test]
    fn lattice_formula_matches_enumeration() {
        for d in 1..=3usize {
            let side = 11;
            let g = grid(&vec![side; d]);
            let center = (0..d).fold(0, |acc, _| acc * side + side / 2);
            let dist = bfs_from(&g, &[center], usize::MAX);
            for k in 0..=5 {
                let count = dist
                    .iter()
                    .filter(|x| matches!(x, Some(t) if *t <= k))
                    .count();
                assert_eq!(lattice_ball(d, k), count as u128, "d={d} k={k}");
            }
        }
        assert_eq!(lattice_ball(2, 6), 85);
        assert_eq!(lattice_ball(2, 8), 145);
    }

    #[test]
    fn f_h_examples() {
        let z2 = GrowthModel::grid(2);
        assert_eq!(f_h(&z2, 100), 3);
        assert_eq!(f_h(&z2, 512), 7);
        assert_eq!(f_h(&z2, 4), 0);
        let z1 = GrowthModel::Grid {
            dim: 1,
            coefficient: 2,
        };
        assert_eq!(f_h(&z1, 9), 2);
        assert_eq!(f_h(&z1, 8), 1);
    }

    #[test]
    fn logarithmic_regime() {
        let m = GrowthModel::Exponential {
            base: 2,
            coefficient: 1,
        };
        for n in 2u128..5000 {
            assert!(f_h(&m, n) >= (127 - n.leading_zeros()) as usize);
        }
        assert_eq!(f_h(&m, 1), 0);
    }

    #[test]
    fn k_values() {
        assert_eq!(k_of_m(4).unwrap(), 11);
        assert_eq!(k_of_m(2).unwrap(), 6);
        assert_eq!(k_of_m(1).unwrap(), 3);
        assert!(k_of_m(0).is_err());
    }

    #[test]
    fn asdim_upper_curve() {
        assert_eq!(
            sep_upper_asdim(&GrowthModel::grid(2), 4, 4096).unwrap(),
            6437
        );
        assert!(matches!(
            sep_upper_asdim(&GrowthModel::grid(2), 4, 16),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn empirical_growth() {
        let g = grid(&[5, 5]);
        let m = GrowthModel::empirical(&g, 2).unwrap();
        assert_eq!(m.gamma(2), 13);
        assert_eq!(m.gamma(2) as usize, growth_function(&g, 2).unwrap());
        assert_eq!(m.gamma(100), 25);
        assert_eq!(f_h(&m, 13), 1);
        // Path of 9: every ball of radius 8 is the whole path; k = 4 reaches it.
        let p = GrowthModel::empirical(&path(9), 2).unwrap();
        assert_eq!(f_h(&p, 1000), 4);
    }
}
