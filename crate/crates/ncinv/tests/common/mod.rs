//! Brute-force oracles shared by the integration tests. None of these use
//! the library's enumeration routines.
#![allow(dead_code)]

use ncinv::partition::{PairPartition, SetPartition};

/// Every perfect matching of `[n]`, built by pairing the smallest free point.
pub fn all_pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        free: &mut Vec<usize>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if free.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = free.remove(0);
        for i in 0..free.len() {
            let partner = free.remove(i);
            acc.push((first, partner));
            rec(free, acc, out);
            acc.pop();
            free.insert(i, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// Every set partition of `[n]` via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        for l in 0..=max {
            labels.push(l);
            rec(n, labels, max.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Direct quadruple test on chords.
pub fn chords_cross(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().any(|&(a, b)| {
        pairs.iter().any(|&(c, e)| {
            let (a, b) = (a.min(b), a.max(b));
            let (c, e) = (c.min(e), c.max(e));
            a < c && c < b && b < e
        })
    })
}

pub fn same_interval(d: usize, p: usize, q: usize) -> bool {
    (p - 1) / d == (q - 1) / d
}

/// Brute-force filter: noncrossing m-partite pairings of `[md]`.
pub fn brute_m_partite_nc(m: usize, d: usize) -> Vec<PairPartition> {
    let mut out: Vec<PairPartition> = all_pairings(m * d)
        .into_iter()
        .filter(|pairs| !chords_cross(pairs))
        .filter(|pairs| pairs.iter().all(|&(p, q)| !same_interval(d, p, q)))
        .map(|pairs| PairPartition::from_pairs(m * d, &pairs).unwrap())
        .collect();
    out.sort();
    out
}

/// Brute-force count of noncrossing m-partite pairings.
pub fn brute_count(m: usize, d: usize) -> usize {
    if m * d % 2 == 1 {
        return 0;
    }
    all_pairings(m * d)
        .into_iter()
        .filter(|pairs| pairs.iter().all(|&(p, q)| !same_interval(d, p, q)) && !chords_cross(pairs))
        .count()
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> u64 {
    let mut binom: u128 = 1;
    for k in 0..n as u128 {
        binom = binom * (2 * n as u128 - k) / (k + 1);
    }
    (binom / (n as u128 + 1)) as u64
}
