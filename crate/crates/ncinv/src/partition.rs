//! Set partitions of `[n] = {1, ..., n}` and the noncrossing lattice `NC(n)`.
//!
//! Partitions are stored in canonical form: every block sorted ascending and
//! the block list ordered by block minimum. Derived `Ord` on the canonical
//! form is the enumeration order used throughout the crate.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::Deref;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition of `[n]` from arbitrary blocks, checking that they
    /// are nonempty, disjoint and cover `[n]`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "element {} not covered",
                missing + 1
            )));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { n, blocks }
    }

    /// Partition whose block labels are given per element (`labels[i]` is the
    /// label of element `i + 1`). Labels may be arbitrary.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Self {
        let mut index: HashMap<&T, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            let b = *index.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i + 1);
        }
        // first-appearance order already sorts blocks by minimum
        Self {
            n: labels.len(),
            blocks,
        }
    }

    /// The finest partition `0̂_n` (all singletons).
    pub fn minimal(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// The coarsest partition `1̂_n` (one block).
    pub fn maximal(n: usize) -> Self {
        let blocks = if n == 0 {
            Vec::new()
        } else {
            vec![(1..=n).collect()]
        };
        Self { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every element; `labels()[i]` belongs to element `i + 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x - 1] = b;
            }
        }
        labels
    }

    pub fn is_pairing(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    pub fn has_singleton(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

/// A set partition whose blocks all have exactly two elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PairPartition(SetPartition);

impl PairPartition {
    pub fn new(partition: SetPartition) -> Result<Self> {
        if !partition.is_pairing() {
            return Err(Error::NotPerfectMatching(format!(
                "{:?} has a block that is not a pair",
                partition.blocks
            )));
        }
        Ok(Self(partition))
    }

    /// Builds a pairing from unordered pairs; each pair is sorted.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let blocks = pairs.iter().map(|&(p, q)| vec![p, q]).collect();
        let partition =
            SetPartition::new(n, blocks).map_err(|e| Error::NotPerfectMatching(e.to_string()))?;
        Self::new(partition)
    }

    /// The chords `(p, q)` with `p < q`, ordered by `p`.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.blocks.iter().map(|b| (b[0], b[1]))
    }

    pub fn partition(&self) -> &SetPartition {
        &self.0
    }

    pub fn into_partition(self) -> SetPartition {
        self.0
    }
}

impl Deref for PairPartition {
    type Target = SetPartition;

    fn deref(&self) -> &SetPartition {
        &self.0
    }
}

impl<'de> Deserialize<'de> for PairPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let partition = SetPartition::deserialize(deserializer)?;
        PairPartition::new(partition).map_err(serde::de::Error::custom)
    }
}

/// The partition of `[k_1 + ... + k_m]` into consecutive intervals of the
/// given sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    sizes: Vec<usize>,
    partition: SetPartition,
}

impl IntervalPartition {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition(
                "interval sizes must be positive".into(),
            ));
        }
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut start = 1;
        for &k in sizes {
            blocks.push((start..start + k).collect());
            start += k;
        }
        Ok(Self {
            sizes: sizes.to_vec(),
            partition: SetPartition {
                n: start - 1,
                blocks,
            },
        })
    }

    /// `m` intervals of length `d` each.
    pub fn uniform(m: usize, d: usize) -> Result<Self> {
        Self::new(&vec![d; m])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }
}

/// Whether a quadruple `i < i' < j < j'` exists with `i ~ j`, `i' ~ j'` and
/// `i ≁ i'`.
pub fn is_noncrossing(p: &SetPartition) -> bool {
    let labels = p.labels();
    // for consecutive elements a < b of one block, no other block may have
    // elements both inside (a, b) and outside [a, b]
    for block in &p.blocks {
        for w in block.windows(2) {
            let (a, b) = (w[0], w[1]);
            for x in a + 1..b {
                let other = &p.blocks[labels[x - 1]];
                if other[0] < a || *other.last().unwrap() > b {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of quadruples `i < i' < j < j'` with `i ~ j`, `i' ~ j'`, `i ≁ i'`.
pub fn crossing_count(p: &SetPartition) -> usize {
    let labels = p.labels();
    let n = p.n;
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if labels[i - 1] != labels[j - 1] {
                continue;
            }
            for ip in i + 1..j {
                if labels[ip - 1] == labels[i - 1] {
                    continue;
                }
                count += (j + 1..=n)
                    .filter(|&jp| labels[jp - 1] == labels[ip - 1])
                    .count();
            }
        }
    }
    count
}

/// Crossing count specialised to pairings: number of chord pairs that cross.
pub(crate) fn chord_crossings(chords: &[(usize, usize)]) -> usize {
    let mut count = 0;
    for (a, &(p, q)) in chords.iter().enumerate() {
        for &(r, s) in &chords[a + 1..] {
            if (p < r && r < q && q < s) || (r < p && p < s && s < q) {
                count += 1;
            }
        }
    }
    count
}

/// Calls `f` with the restricted-growth labels of every noncrossing
/// partition of `[n]`. The visiting order is not canonical.
pub fn for_each_nc<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut labels = Vec::with_capacity(n);
    let mut maxima: Vec<usize> = Vec::new();
    let mut minima: Vec<usize> = Vec::new();
    nc_extend(n, &mut labels, &mut minima, &mut maxima, &mut f);
}

fn nc_extend<F: FnMut(&[usize])>(
    n: usize,
    labels: &mut Vec<usize>,
    minima: &mut Vec<usize>,
    maxima: &mut Vec<usize>,
    f: &mut F,
) {
    let t = labels.len() + 1;
    if t > n {
        f(labels);
        return;
    }
    for b in 0..minima.len() {
        let last = maxima[b];
        // every element strictly between `last` and `t` must sit in a block
        // opened after `last`
        let ok = (last + 1..t).all(|x| minima[labels[x - 1]] > last);
        if !ok {
            continue;
        }
        labels.push(b);
        maxima[b] = t;
        nc_extend(n, labels, minima, maxima, f);
        maxima[b] = last;
        labels.pop();
    }
    labels.push(minima.len());
    minima.push(t);
    maxima.push(t);
    nc_extend(n, labels, minima, maxima, f);
    minima.pop();
    maxima.pop();
    labels.pop();
}

/// All noncrossing partitions of `[n]` in canonical lexicographic order.
pub fn enumerate_nc(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_nc(n, |labels| out.push(SetPartition::from_labels(labels)));
    out.sort_unstable();
    out
}

/// All noncrossing perfect matchings of `[n]`.
pub fn enumerate_nc_pairings(n: usize) -> Vec<PairPartition> {
    let mut out = Vec::new();
    nc_pairings(n, |_, _| true, &mut |chords| {
        out.push(chords_to_pairing(n, chords))
    });
    out.sort_unstable();
    out
}

fn chords_to_pairing(n: usize, chords: &[(usize, usize)]) -> PairPartition {
    PairPartition(SetPartition::canonical(
        n,
        chords.iter().map(|&(p, q)| vec![p, q]).collect(),
    ))
}

/// Depth-first walk over noncrossing pairings of `[n]` as balanced
/// open/close sequences; a chord `(p, q)` is only closed if `allow(p, q)`.
fn nc_pairings<A, F>(n: usize, allow: A, f: &mut F)
where
    A: Fn(usize, usize) -> bool,
    F: FnMut(&[(usize, usize)]),
{
    if n % 2 == 1 {
        return;
    }
    let mut open = Vec::with_capacity(n / 2);
    let mut chords = Vec::with_capacity(n / 2);
    nc_pairings_rec(n, 1, &allow, &mut open, &mut chords, f);
}

fn nc_pairings_rec<A, F>(
    n: usize,
    t: usize,
    allow: &A,
    open: &mut Vec<usize>,
    chords: &mut Vec<(usize, usize)>,
    f: &mut F,
) where
    A: Fn(usize, usize) -> bool,
    F: FnMut(&[(usize, usize)]),
{
    if t > n {
        f(chords);
        return;
    }
    let remaining = n - t + 1;
    if remaining > open.len() {
        open.push(t);
        nc_pairings_rec(n, t + 1, allow, open, chords, f);
        open.pop();
    }
    if let Some(&p) = open.last() {
        if allow(p, t) {
            open.pop();
            chords.push((p, t));
            nc_pairings_rec(n, t + 1, allow, open, chords, f);
            chords.pop();
            open.push(p);
        }
    }
}

/// Whether every block meets each interval `{kd+1, ..., (k+1)d}` at most once.
pub fn is_m_partite(p: &SetPartition, d: usize) -> Result<bool> {
    if d == 0 || !p.n.is_multiple_of(d) {
        return Err(Error::NotDivisible { n: p.n, d });
    }
    Ok(p.blocks
        .iter()
        .all(|block| block.windows(2).all(|w| (w[0] - 1) / d != (w[1] - 1) / d)))
}

/// The `m`-partite noncrossing pair partitions of `[md]` for interval size `d`.
pub fn enumerate_m_partite_nc_pairings(m: usize, d: usize) -> Vec<PairPartition> {
    let n = m * d;
    let mut out = Vec::new();
    nc_pairings(n, |p, q| (p - 1) / d != (q - 1) / d, &mut |chords| {
        out.push(chords_to_pairing(n, chords))
    });
    out.sort_unstable();
    out
}

/// Same count as `enumerate_m_partite_nc_pairings(m, d).len()` without
/// materialising the pairings.
pub fn count_m_partite_nc_pairings(m: usize, d: usize) -> u64 {
    let mut count = 0u64;
    nc_pairings(m * d, |p, q| (p - 1) / d != (q - 1) / d, &mut |_| {
        count += 1
    });
    count
}

/// Common refinement of `p` and `q`.
pub fn meet(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    if p.n != q.n {
        return Err(Error::SizeMismatch(p.n, q.n));
    }
    let pairs: Vec<(usize, usize)> = p.labels().into_iter().zip(q.labels()).collect();
    Ok(SetPartition::from_labels(&pairs))
}

/// Refinement order: every block of `p` lies inside a block of `q`.
pub fn leq(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    if p.n != q.n {
        return Err(Error::SizeMismatch(p.n, q.n));
    }
    Ok(refines(p, &q.labels()))
}

fn refines(p: &SetPartition, q_labels: &[usize]) -> bool {
    p.blocks
        .iter()
        .all(|b| b.iter().all(|&x| q_labels[x - 1] == q_labels[b[0] - 1]))
}

/// Level-set partition of a function given by its values on `1..=n`.
pub fn kernel<T: Eq + Hash>(values: &[T]) -> SetPartition {
    SetPartition::from_labels(values)
}

/// Möbius function of the interval `[p, q]` in `NC(n)`, by the defining
/// recursion over the interval.
pub fn nc_moebius(p: &SetPartition, q: &SetPartition) -> Result<i64> {
    if !is_noncrossing(p) || !is_noncrossing(q) {
        return Err(Error::Crossing);
    }
    if !leq(p, q)? {
        return Err(Error::NotRefinement);
    }
    let q_labels = q.labels();
    let p_labels = p.labels();
    let mut interval: Vec<SetPartition> = Vec::new();
    for_each_nc(p.n, |labels| {
        let r = SetPartition::from_labels(labels);
        if refines(p, &r.labels()) && refines(&r, &q_labels) {
            interval.push(r);
        }
    });
    // refining chains strictly lose blocks, so sort by block count descending
    interval.sort_by_key(|r| std::cmp::Reverse(r.num_blocks()));
    let labels: Vec<Vec<usize>> = interval.iter().map(SetPartition::labels).collect();
    let mut mu = vec![0i64; interval.len()];
    for k in 0..interval.len() {
        if refines(&interval[k], &p_labels) {
            mu[k] = 1;
            continue;
        }
        let mut sum = 0;
        for s in 0..k {
            if interval[s].num_blocks() > interval[k].num_blocks()
                && refines(&interval[s], &labels[k])
            {
                sum += mu[s];
            }
        }
        mu[k] = -sum;
    }
    let top = interval
        .iter()
        .position(|r| refines(q, &r.labels()))
        .expect("q lies in its own interval");
    Ok(mu[top])
}

/// `μ(σ, 1̂_n)` for every `σ ∈ NC(n)`, in canonical order.
pub fn nc_moebius_to_top(n: usize) -> Vec<(SetPartition, i64)> {
    let mut all = enumerate_nc(n);
    all.sort_by_key(SetPartition::num_blocks);
    let labels: Vec<Vec<usize>> = all.iter().map(SetPartition::labels).collect();
    let mut mu = vec![0i64; all.len()];
    for k in 0..all.len() {
        if all[k].num_blocks() <= 1 {
            mu[k] = 1;
            continue;
        }
        let mut sum = 0;
        for s in 0..k {
            if all[s].num_blocks() < all[k].num_blocks() && refines(&all[k], &labels[s]) {
                sum += mu[s];
            }
        }
        mu[k] = -sum;
    }
    let mut out: Vec<(SetPartition, i64)> = all.into_iter().zip(mu).collect();
    out.sort_unstable();
    out
}

fn check_thick_shape(n: usize, m: usize, d: usize) -> Result<()> {
    if d % 2 == 1 {
        return Err(Error::OddDegree(d));
    }
    if n != m * d {
        return Err(Error::SizeMismatch(n, m * d));
    }
    Ok(())
}

/// Thickening: merge slots `2t-1, 2t` into point `t`; the blocks of the
/// result are the connected components of the chords.
pub fn thicken(p: &PairPartition, m: usize, d: usize) -> Result<SetPartition> {
    check_thick_shape(p.n(), m, d)?;
    if !is_noncrossing(p) {
        return Err(Error::Crossing);
    }
    if m > 0 && !is_m_partite(p, d)? {
        return Err(Error::NotMPartite { m, d });
    }
    let half = p.n() / 2;
    let mut parent: Vec<usize> = (0..half).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut x = x;
        while parent[x] != root {
            x = std::mem::replace(&mut parent[x], root);
        }
        root
    }
    for (a, b) in p.chords() {
        let (ra, rb) = (
            find(&mut parent, (a - 1) / 2),
            find(&mut parent, (b - 1) / 2),
        );
        parent[ra.max(rb)] = ra.min(rb);
    }
    let roots: Vec<usize> = (0..half).map(|x| find(&mut parent, x)).collect();
    Ok(SetPartition::from_labels(&roots))
}

/// Inverse of [`thicken`]: every point `t` splits into slots `2t-1, 2t`, and
/// for a block `b_1 < ... < b_k` the right slot of `b_i` is joined to the
/// left slot of `b_{i+1}` (cyclically).
pub fn unthicken(q: &SetPartition, m: usize, d: usize) -> Result<PairPartition> {
    check_thick_shape(2 * q.n(), m, d)?;
    if !is_noncrossing(q) {
        return Err(Error::Crossing);
    }
    if q.has_singleton() {
        return Err(Error::Singleton);
    }
    if m > 0 && !is_m_partite(q, d / 2)? {
        return Err(Error::NotMPartite { m, d: d / 2 });
    }
    let mut pairs = Vec::with_capacity(q.n());
    for block in q.blocks() {
        let k = block.len();
        for i in 0..k {
            let right = 2 * block[i];
            let left = 2 * block[(i + 1) % k] - 1;
            pairs.push((right.min(left), right.max(left)));
        }
    }
    PairPartition::from_pairs(2 * q.n(), &pairs)
}

pub fn catalan(n: usize) -> num_bigint::BigUint {
    use num_integer::binomial;
    binomial(
        num_bigint::BigUint::from(2 * n),
        num_bigint::BigUint::from(n),
    ) / (n + 1)
}
