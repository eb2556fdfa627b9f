use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a bit string is turned into a set of positive integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexEncoding {
    /// `{code(b1..bk) : 1 <= k <= depth}` with `code` reading `1 b1 .. bk`
    /// in binary. Two strings agreeing on exactly `j` leading bits share
    /// exactly `j` elements.
    PrefixCode,
    /// `{k <= depth : bk = 1}`: the string read as a characteristic
    /// vector, padded with zeros beyond its length.
    Membership,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSet {
    pub bits: String,
    pub depth: usize,
    pub encoding: IndexEncoding,
    pub elements: BTreeSet<u64>,
}

impl IndexSet {
    pub fn contains(&self, i: u64) -> bool {
        self.elements.contains(&i)
    }
}

fn check_bits(bits: &str) -> Result<()> {
    if bits.is_empty() {
        return Err(Error::precondition("empty bit string"));
    }
    if let Some(c) = bits.chars().find(|c| !matches!(c, '0' | '1')) {
        return Err(Error::precondition(format!("bit string contains {c:?}")));
    }
    Ok(())
}

/// Prefix-code index set of depth `depth`.
pub fn continuum_index_set(bits: &str, depth: usize) -> Result<IndexSet> {
    check_bits(bits)?;
    if depth > bits.len() {
        return Err(Error::precondition(format!(
            "depth {depth} exceeds the {} available bits",
            bits.len()
        )));
    }
    if depth > 63 {
        return Err(Error::precondition(
            "prefix codes deeper than 63 bits overflow",
        ));
    }
    let mut code = 1u64;
    let mut elements = BTreeSet::new();
    for b in bits.bytes().take(depth) {
        code = 2 * code + u64::from(b - b'0');
        elements.insert(code);
    }
    Ok(IndexSet {
        bits: bits.to_string(),
        depth,
        encoding: IndexEncoding::PrefixCode,
        elements,
    })
}

/// Characteristic-vector index set over `1..=depth`.
pub fn membership_index_set(bits: &str, depth: usize) -> Result<IndexSet> {
    check_bits(bits)?;
    let elements = bits
        .bytes()
        .take(depth)
        .enumerate()
        .filter(|&(_, b)| b == b'1')
        .map(|(i, _)| i as u64 + 1)
        .collect();
    Ok(IndexSet {
        bits: bits.to_string(),
        depth,
        encoding: IndexEncoding::Membership,
        elements,
    })
}

pub fn index_set(bits: &str, depth: usize, encoding: IndexEncoding) -> Result<IndexSet> {
    match encoding {
        IndexEncoding::PrefixCode => continuum_index_set(bits, depth),
        IndexEncoding::Membership => membership_index_set(bits, depth),
    }
}

/// A reproducible pseudo-random bit string standing in for a real number.
pub fn bits_from_seed(seed: u64, len: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| if rng.gen::<bool>() { '1' } else { '0' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(continuum_index_set("10", 2).unwrap().elements, set(&[3, 6]));
        assert_eq!(continuum_index_set("11", 2).unwrap().elements, set(&[3, 7]));
        assert_eq!(
            continuum_index_set("0101", 4).unwrap().elements,
            set(&[2, 5, 10, 21])
        );
        assert!(continuum_index_set("", 0).is_err());
        assert!(continuum_index_set("01", 3).is_err());
        assert!(continuum_index_set("0a", 1).is_err());
    }

    #[test]
    fn membership_examples() {
        assert_eq!(
            membership_index_set("1011", 8).unwrap().elements,
            set(&[1, 3, 4])
        );
        assert_eq!(
            membership_index_set("11", 2).unwrap().elements,
            set(&[1, 2])
        );
        assert_eq!(membership_index_set("101", 1).unwrap().elements, set(&[1]));
    }

    #[test]
    fn seeded_bits() {
        assert_eq!(bits_from_seed(4, 32), bits_from_seed(4, 32));
        assert_eq!(bits_from_seed(4, 32).len(), 32);
        assert_ne!(bits_from_seed(4, 64), bits_from_seed(5, 64));
    }

    proptest! {
        #[test]
        fn overlap_is_common_prefix(a in "[01]{16}", b in "[01]{16}", depth in 1usize..=16) {
            let x = continuum_index_set(&a, depth).unwrap();
            let y = continuum_index_set(&b, depth).unwrap();
            let common = a.bytes().zip(b.bytes()).take(depth).take_while(|(p, q)| p == q).count();
            prop_assert_eq!(x.elements.intersection(&y.elements).count(), common);
            prop_assert_eq!(x.elements.len(), depth);
        }
    }
}
