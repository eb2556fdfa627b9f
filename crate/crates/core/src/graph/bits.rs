//! Bitmask adjacency for graphs with at most 64 vertices; the workhorse of
//! the exhaustive searches.

use super::Graph;

#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    n: usize,
    adj: Vec<u64>,
}

impl BitGraph {
    pub const MAX_VERTICES: usize = 64;

    pub fn new(g: &Graph) -> Option<Self> {
        let n = g.vertex_count();
        if n > Self::MAX_VERTICES {
            return None;
        }
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        Some(BitGraph { n, adj })
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Open neighbourhood of a vertex set.
    pub fn neighborhood(&self, mut set: u64) -> u64 {
        let mut out = 0;
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Component of `alive` containing the lowest set bit of `seed`.
    pub fn flood(&self, seed: u64, alive: u64) -> u64 {
        let mut comp = seed & seed.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let next = self.neighborhood(frontier) & alive & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Largest component of `alive`, preferring the one with the least vertex.
    pub fn largest_component(&self, alive: u64) -> u64 {
        let mut rest = alive;
        let mut best = 0u64;
        while rest != 0 {
            if rest.count_ones() <= best.count_ones() {
                break;
            }
            let c = self.flood(rest, alive);
            rest &= !c;
            if c.count_ones() > best.count_ones() {
                best = c;
            }
        }
        best
    }

    /// Whether every component of `alive` has at most `limit` vertices.
    pub fn components_at_most(&self, alive: u64, limit: u32) -> bool {
        let mut rest = alive;
        while rest.count_ones() > limit {
            let c = self.flood(rest, alive);
            if c.count_ones() > limit {
                return false;
            }
            rest &= !c;
        }
        true
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn vec_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1u64 << v))
}

/// Lexicographic order of the sorted vertex lists of two sets.
pub(crate) fn lex_cmp(mut a: u64, mut b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Equal,
            (true, false) => return Less,
            (false, true) => return Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}
