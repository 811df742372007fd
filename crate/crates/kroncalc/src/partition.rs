//! Integer partitions and the partition arithmetic used everywhere else:
//! conjugate, sum, union, Durfee square, containment, and constrained
//! enumeration in a fixed deterministic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed and prints as the empty string.
///
/// Values are immutable after construction; all operations return new
/// partitions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest is sorted decreasingly.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Rectangle `(width^height)`.
    pub fn rectangle(width: u32, height: u32) -> Self {
        if width == 0 || height == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; height as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` with 1-based index; 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of rows ℓ(λ).
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part; 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Conjugate (transposed) partition: part `i` counts the rows of
    /// length at least `i`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.first() as usize);
        for col in 1..=self.first() {
            parts.push(self.parts.iter().take_while(|&&p| p >= col).count() as u32);
        }
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Componentwise sum λ + μ (shorter padded with zeros).
    pub fn add(&self, other: &Partition) -> Partition {
        let rows = self.parts.len().max(other.parts.len());
        let parts = (1..=rows)
            .map(|i| self.part(i) + other.part(i))
            .collect();
        Partition { parts }
    }

    /// Multiset union λ ∪ μ of the parts, equal to (λ' + μ')'.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Durfee square size d(λ) = max{k : λ_k ≥ k}.
    pub fn durfee(&self) -> u32 {
        let mut d = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p > i as u32 {
                d = i as u32 + 1;
            } else {
                break;
            }
        }
        d
    }

    /// μ ⊆ λ componentwise (zero-padded).
    pub fn contained_in(&self, outer: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= outer.part(i + 1))
    }

    /// Scales every part by `c`.
    pub fn scale(&self, c: u32) -> Partition {
        if c == 0 {
            return Self::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * c).collect(),
        }
    }

    /// Hook lengths cell by cell, row-major.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| row - j as u32 + conj.parts[j] - i as u32 - 1)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for p in &self.parts {
            write!(f, "{sep}{p}")?;
            sep = ",";
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the canonical form "4,3,1" and the exponent form "4,2^3".
/// The empty string is the empty partition. Input is normalized: parts are
/// re-sorted decreasingly after exponent expansion.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (base, count) = match piece.split_once('^') {
                Some((b, e)) => {
                    let count: u32 = e.trim().parse().map_err(|_| {
                        Error::InvalidPartition(format!("bad exponent in {piece:?}"))
                    })?;
                    (b.trim(), count)
                }
                None => (piece, 1),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {piece:?}")))?;
            if base == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            for _ in 0..count {
                parts.push(base);
            }
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// Total order matching the deterministic enumeration order: smaller size
/// first, then reverse-lexicographic within a size, so that sorting the
/// partitions of n reproduces `enumerate(n, ..)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Constraints for [`enumerate`]. All default to "no constraint".
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumFilter {
    pub max_length: Option<u32>,
    pub max_durfee: Option<u32>,
    pub max_part: Option<u32>,
    pub self_conjugate: bool,
}

impl EnumFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn max_length(k: u32) -> Self {
        EnumFilter {
            max_length: Some(k),
            ..Self::default()
        }
    }

    pub fn max_durfee(k: u32) -> Self {
        EnumFilter {
            max_durfee: Some(k),
            ..Self::default()
        }
    }

    pub fn self_conjugate() -> Self {
        EnumFilter {
            self_conjugate: true,
            ..Self::default()
        }
    }
}

/// All partitions of `n` satisfying the filter, in reverse-lexicographic
/// order: `enumerate(4, ..)` starts with (4) and ends with (1,1,1,1).
pub fn enumerate(n: u32, filter: EnumFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let max_len = filter.max_length.unwrap_or(n);
    let first_max = filter.max_part.unwrap_or(n).min(n);
    gen_rec(n, first_max, max_len, &filter, &mut current, &mut out);
    out
}

fn gen_rec(
    remaining: u32,
    max_part: u32,
    max_len: u32,
    filter: &EnumFilter,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let candidate = Partition {
            parts: current.clone(),
        };
        if !filter.self_conjugate || candidate.is_self_conjugate() {
            out.push(candidate);
        }
        return;
    }
    let rows_left = max_len.saturating_sub(current.len() as u32);
    if rows_left == 0 {
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 1 {
        // a row of length p at index current.len() pushes the Durfee square
        // past max_durfee once row index and length both exceed it
        if let Some(d) = filter.max_durfee {
            let row = current.len() as u32 + 1;
            if row > d && p > d {
                p = d.min(p - 1);
                continue;
            }
        }
        if remaining <= p * rows_left {
            current.push(p);
            gen_rec(remaining - p, p, max_len, filter, current, out);
            current.pop();
        }
        p -= 1;
    }
}

/// All partitions γ ⊆ λ (any size), in enumeration order.
pub fn contained_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    contained_rec(outer, 0, u32::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn contained_rec(
    outer: &Partition,
    row: usize,
    prev: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition {
        parts: current.clone(),
    });
    if row >= outer.parts.len() {
        return;
    }
    let cap = outer.parts[row].min(prev);
    for p in (1..=cap).rev() {
        current.push(p);
        contained_rec(outer, row + 1, p, current, out);
        current.pop();
    }
}

/// Weak compositions of `n` into exactly `k` parts, lexicographically from
/// (n,0,..,0) down to (0,..,0,n).
pub fn compositions(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k as usize);
    comp_rec(n, k, &mut current, &mut out);
    out
}

fn comp_rec(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    if slots == 1 {
        current.push(remaining);
        out.push(current.clone());
        current.pop();
        return;
    }
    for v in (0..=remaining).rev() {
        current.push(v);
        comp_rec(remaining - v, slots - 1, current, out);
        current.pop();
    }
}

/// A skew shape λ/μ with μ ⊆ λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("3,1").add(&p("2,2")), p("5,3"));
        assert_eq!(p("4,2").add(&Partition::empty()), p("4,2"));
        assert_eq!(p("2,1").add(&p("2,1")), p("4,2"));
    }

    #[test]
    fn union_examples() {
        assert_eq!(p("2,2").union(&p("3,1")), p("3,2,2,1"));
        assert_eq!(p("4,2").union(&Partition::empty()), p("4,2"));
        assert_eq!(p("8,6,4,4").union(&p("2,2,1,1")), p("8,6,4,4,2,2,1,1"));
        // the caret union, cross-checked via (λ' + μ')'
        let (a, b) = (p("8,6,4,4"), p("2,2,1,1"));
        assert_eq!(
            a.union(&b),
            a.conjugate().add(&b.conjugate()).conjugate()
        );
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p("4,3,1").durfee(), 2);
        assert_eq!(p("4,1,1,1").durfee(), 1); // hook (k,1^{n-k})
        assert_eq!(p("3,3,3").durfee(), 3); // square (k^k)
        assert_eq!(Partition::empty().durfee(), 0);
    }

    #[test]
    fn contains_examples() {
        assert!(p("1").contained_in(&p("2,1")));
        assert!(!p("3").contained_in(&p("2,2")));
        assert!(Partition::empty().contained_in(&p("2,1")));
        assert!(!p("2,1,1").contained_in(&p("2,1")));
    }

    #[test]
    fn enumerate_order_and_count() {
        let all = enumerate(4, EnumFilter::all());
        let expected: Vec<Partition> =
            ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"].iter().map(|s| p(s)).collect();
        assert_eq!(all, expected);

        let sc = enumerate(4, EnumFilter::self_conjugate());
        assert_eq!(sc, vec![p("2,2")]);

        assert_eq!(enumerate(0, EnumFilter::all()), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_with_constraints() {
        let len2 = enumerate(6, EnumFilter::max_length(2));
        assert_eq!(len2, vec![p("6"), p("5,1"), p("4,2"), p("3,3")]);

        for lam in enumerate(9, EnumFilter::max_durfee(2)) {
            assert!(lam.durfee() <= 2);
        }
        let d2 = enumerate(9, EnumFilter::max_durfee(2)).len();
        let d2_filtered = enumerate(9, EnumFilter::all())
            .into_iter()
            .filter(|l| l.durfee() <= 2)
            .count();
        assert_eq!(d2, d2_filtered);
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..12
        let pn = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &expected) in pn.iter().enumerate() {
            assert_eq!(enumerate(n as u32, EnumFilter::all()).len(), expected);
        }
    }

    #[test]
    fn counting_inequalities() {
        // #{λ ⊢ n : ℓ(λ) = k} ≤ C(n,k)
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for n in 1..=20u32 {
            let all = enumerate(n, EnumFilter::all());
            for k in 1..=n {
                let exact = all.iter().filter(|l| l.len() == k).count() as u64;
                assert!(exact <= binom(n as u64, k as u64), "n={n} k={k}");
            }
            // #{λ ⊢ n : ℓ(λ) ≤ k} ≤ C(n+k-1, k-1)
            for k in 1..=5u32.min(n) {
                let le = all.iter().filter(|l| l.len() <= k).count() as u64;
                assert!(le <= binom((n + k - 1) as u64, (k - 1) as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subset_count_bound() {
        // #{γ ⊆ λ} ≤ ((n+2)/2)^{2k} for λ ⊢ n ≤ 16 with d(λ) ≤ k ≤ 3,
        // compared exactly as count·2^{2k} ≤ (n+2)^{2k}. The +2 corrects a
        // lower-order slip in the lattice-path count: hooks like (11,1^5)
        // have 67 subpartitions, above (16/2)^2 = 64.
        for n in 1..=16u32 {
            for lam in enumerate(n, EnumFilter::all()) {
                let d = lam.durfee();
                if d > 3 {
                    continue;
                }
                let count = contained_partitions(&lam).len() as u128;
                for k in d.max(1)..=3 {
                    let lhs = count << (2 * k);
                    let rhs = ((n + 2) as u128).pow(2 * k);
                    assert!(lhs <= rhs, "λ={lam} k={k}: {count} vs ((n+2)/2)^{}", 2 * k);
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,2^3").parts(), &[4, 2, 2, 2]);
        assert_eq!(p("4,2^3").to_string(), "4,2,2,2");
        assert_eq!(p("").to_string(), "");
        assert_eq!(p(" 3 , 1 ").to_string(), "3,1");
        assert!("0".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn order_matches_enumeration() {
        let mut all = enumerate(6, EnumFilter::all());
        let sorted = {
            let mut v = all.clone();
            v.sort();
            v
        };
        assert_eq!(all, sorted);
        all.reverse();
        let mut v = all.clone();
        v.sort();
        v.reverse();
        assert_eq!(all, v);
    }

    #[test]
    fn compositions_enumeration() {
        let c = compositions(3, 2);
        assert_eq!(c, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(4, 1), vec![vec![4]]);
    }

    #[test]
    fn skew_shape_validation() {
        assert!(SkewShape::new(p("2,1"), p("3")).is_err());
        let s = SkewShape::new(p("3,2"), p("1")).unwrap();
        assert_eq!(s.size(), 4);
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in proptest::collection::vec(1u32..=9, 0..8)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn union_add_duality(
            a in proptest::collection::vec(1u32..=6, 0..5),
            b in proptest::collection::vec(1u32..=6, 0..5),
        ) {
            let (lam, mu) = (Partition::from_unsorted(a), Partition::from_unsorted(b));
            let direct = lam.union(&mu);
            let dual = lam.conjugate().add(&mu.conjugate()).conjugate();
            prop_assert_eq!(direct, dual);
            prop_assert_eq!(lam.union(&mu).size(), lam.size() + mu.size());
            prop_assert_eq!(lam.add(&mu).size(), lam.size() + mu.size());
        }

        #[test]
        fn conjugate_swaps_length_and_first(parts in proptest::collection::vec(1u32..=9, 0..8)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert_eq!(lam.conjugate().len(), lam.first());
            prop_assert_eq!(lam.conjugate().first(), lam.len());
        }

        #[test]
        fn display_round_trip(parts in proptest::collection::vec(1u32..=30, 0..10)) {
            let lam = Partition::from_unsorted(parts);
            let back: Partition = lam.to_string().parse().unwrap();
            prop_assert_eq!(back, lam);
        }

        #[test]
        fn durfee_bounds(parts in proptest::collection::vec(1u32..=9, 1..8)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert!(lam.durfee() <= lam.len());
            prop_assert!(lam.durfee() <= lam.first());
            prop_assert_eq!(lam.durfee(), lam.conjugate().durfee());
        }
    }
}
