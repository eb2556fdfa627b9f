use std::cmp::Ordering;

use rayon::prelude::*;

use super::{CertMethod, CheegerResult};
use crate::error::{Error, Result};
use crate::graph::{is_connected, lex_cmp, mask_to_vec, Graph};
use crate::rational::Rational;

/// Number of top vertices whose membership is fixed per worker chunk.
const PREFIX_BITS: usize = 4;

#[derive(Clone, Copy, Debug)]
struct Best {
    boundary: u64,
    size: u64,
    set: u64,
}

impl Best {
    fn better_than(&self, other: &Best) -> bool {
        match (self.boundary * other.size).cmp(&(other.boundary * self.size)) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => lex_cmp(self.set, other.set) == Ordering::Less,
        }
    }
}

fn pick(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Exact vertex Cheeger constant by enumerating every vertex subset.
///
/// Subsets are visited in Gray-code order so each step adds or removes one
/// vertex and the boundary size is updated from per-vertex neighbour counts.
/// Ties are broken towards the lexicographically least witness.
pub fn cheeger_exact(g: &Graph, budget: usize) -> Result<CheegerResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::precondition(
            "Cheeger constant needs at least 2 vertices",
        ));
    }
    if n > budget || n > 63 {
        return Err(Error::BudgetExceeded {
            what: "exhaustive Cheeger search",
            needed: n,
            budget: budget.min(63),
        });
    }
    if !is_connected(g) {
        return Err(Error::precondition(
            "Cheeger constant of a disconnected graph is 0; pass a connected graph",
        ));
    }
    let prefix = if n > 12 { PREFIX_BITS } else { 0 };
    let low = n - prefix;
    let best = (0u64..1 << prefix)
        .into_par_iter()
        .map(|chunk| scan_chunk(g, low, chunk << low))
        .reduce(|| None, pick)
        .expect("some nonempty subset has at most n/2 vertices");
    Ok(CheegerResult {
        value: Rational::new(best.boundary as i64, best.size as i64),
        witness: mask_to_vec(best.set),
        method: CertMethod::Exhaustive,
        budget_used: budget,
    })
}

/// Scans all subsets whose high bits equal `fixed`, varying the low `low` bits.
fn scan_chunk(g: &Graph, low: usize, fixed: u64) -> Option<Best> {
    let n = g.vertex_count();
    let half = (n / 2) as u64;
    let mut in_set = vec![false; n];
    let mut count = vec![0u32; n];
    let mut size = 0u64;
    let mut boundary = 0u64;
    let mut set = 0u64;

    let add =
        |v: usize, in_set: &mut [bool], count: &mut [u32], size: &mut u64, boundary: &mut u64| {
            in_set[v] = true;
            *size += 1;
            if count[v] > 0 {
                *boundary -= 1;
            }
            for &w in g.neighbors(v) {
                count[w] += 1;
                if !in_set[w] && count[w] == 1 {
                    *boundary += 1;
                }
            }
        };
    let remove =
        |v: usize, in_set: &mut [bool], count: &mut [u32], size: &mut u64, boundary: &mut u64| {
            in_set[v] = false;
            *size -= 1;
            for &w in g.neighbors(v) {
                count[w] -= 1;
                if !in_set[w] && count[w] == 0 {
                    *boundary -= 1;
                }
            }
            if count[v] > 0 {
                *boundary += 1;
            }
        };

    let mut f = fixed;
    while f != 0 {
        let v = f.trailing_zeros() as usize;
        f &= f - 1;
        add(v, &mut in_set, &mut count, &mut size, &mut boundary);
        set |= 1 << v;
    }
    if size > half {
        return None;
    }

    let mut best: Option<Best> = None;
    let mut consider = |size: u64, boundary: u64, set: u64| {
        if size == 0 || size > half {
            return;
        }
        let cand = Best {
            boundary,
            size,
            set,
        };
        if best.is_none_or(|b| cand.better_than(&b)) {
            best = Some(cand);
        }
    };
    consider(size, boundary, set);
    for i in 1u64..1 << low {
        let v = i.trailing_zeros() as usize;
        if in_set[v] {
            remove(v, &mut in_set, &mut count, &mut size, &mut boundary);
        } else {
            add(v, &mut in_set, &mut count, &mut size, &mut boundary);
        }
        set ^= 1 << v;
        consider(size, boundary, set);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::vertex_boundary;
    use crate::graph::generators::*;

    /// Plain enumeration over all subsets with set arithmetic.
    fn naive(g: &Graph) -> Rational {
        let n = g.vertex_count();
        let mut best: Option<Rational> = None;
        for mask in 1u32..(1 << n) {
            let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if a.len() > n / 2 {
                continue;
            }
            let b = vertex_boundary(g, &a).unwrap().len();
            let r = Rational::new(b as i64, a.len() as i64);
            best = Some(best.map_or(r, |x| x.min(r)));
        }
        best.unwrap()
    }

    #[test]
    fn small_examples() {
        let k2 = cheeger_exact(&complete(2), 20).unwrap();
        assert_eq!(k2.value, Rational::from_integer(1));
        assert_eq!(k2.witness, vec![0]);

        let k4 = cheeger_exact(&complete(4), 20).unwrap();
        assert_eq!(k4.value, Rational::from_integer(1));
        assert_eq!(k4.witness, vec![0, 1]);
        assert_eq!(naive(&complete(4)), k4.value);

        let c6 = cheeger_exact(&cycle(6), 20).unwrap();
        assert_eq!(c6.value, Rational::new(2, 3));
        assert_eq!(c6.witness, vec![0, 1, 2]);
        assert_eq!(naive(&cycle(6)), c6.value);

        let p4 = cheeger_exact(&path(4), 20).unwrap();
        assert_eq!(p4.value, Rational::new(1, 2));
        assert_eq!(p4.witness, vec![0, 1]);
    }

    #[test]
    fn petersen_and_chunked_path_agree_with_naive() {
        let p = petersen();
        let h = cheeger_exact(&p, 20).unwrap();
        assert_eq!(h.value, naive(&p));
        assert_eq!(h.value, Rational::new(4, 5));
        // 14 vertices exercises the prefix-chunked scan
        let heawood = lcf(14, &[5, -5], 7);
        let h = cheeger_exact(&heawood, 20).unwrap();
        assert_eq!(h.value, naive(&heawood));
        let b = vertex_boundary(&heawood, &h.witness).unwrap().len();
        assert_eq!(Rational::new(b as i64, h.witness.len() as i64), h.value);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            cheeger_exact(&Graph::empty(4), 20),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            cheeger_exact(&path(30), 20),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(cheeger_exact(&complete(1), 20).is_err());
    }
}
