//! Lexicographic subset enumeration shared by the exhaustive searches.

use rayon::prelude::*;

/// First `k`-subset of `0..n`, in lexicographic order of sorted vertex lists,
/// satisfying `pred`. Work is split across threads by the first element and
/// merged so the answer does not depend on scheduling.
pub(crate) fn first_combination<F>(n: usize, k: usize, pred: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if k == 0 {
        return pred(&[]).then(Vec::new);
    }
    if k > n {
        return None;
    }
    (0..=n - k).into_par_iter().find_map_first(|first| {
        let mut combo = Vec::with_capacity(k);
        combo.push(first);
        extend(n, k, &mut combo, &pred).then_some(combo)
    })
}

fn extend<F: Fn(&[usize]) -> bool>(n: usize, k: usize, combo: &mut Vec<usize>, pred: &F) -> bool {
    if combo.len() == k {
        return pred(combo);
    }
    let start = combo.last().map_or(0, |&v| v + 1);
    let stop = n - (k - combo.len());
    for v in start..=stop {
        combo.push(v);
        if extend(n, k, combo, pred) {
            return true;
        }
        combo.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_lexicographically_first() {
        let hit = first_combination(6, 3, |c| c.iter().sum::<usize>() == 9);
        assert_eq!(hit, Some(vec![0, 4, 5]));
        assert_eq!(first_combination(4, 0, |c| c.is_empty()), Some(vec![]));
        assert_eq!(first_combination(3, 4, |_| true), None);
        assert_eq!(
            first_combination(5, 2, |c| c[1] == 4 && c[0] == 2),
            Some(vec![2, 4])
        );
    }
}
