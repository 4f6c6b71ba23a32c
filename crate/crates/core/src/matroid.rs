//! Simple matroids on `1..=n` given by their circuits.
//!
//! Subsets of the ground set are bitmasks ([`GroundSubset`]); the external
//! contract (JSON, Python, reports) is always 1-indexed sorted lists.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{OsxError, Result};

/// Largest supported ground set; subsets are stored in a `u32`.
pub const MAX_GROUND_SET: usize = 31;

/// A subset of `1..=n`, stored as a bitmask with point `i` at bit `i - 1`.
///
/// Ordered by size, then lexicographically on the increasing element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GroundSubset(u32);

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub fn from_bits(bits: u32) -> Self {
        GroundSubset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET);
        GroundSubset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(point: usize) -> Self {
        debug_assert!((1..=MAX_GROUND_SET).contains(&point));
        GroundSubset(1 << (point - 1))
    }

    /// Builds a subset from 1-indexed points, rejecting repeats and points outside `1..=n`.
    pub fn try_from_points(points: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &p in points {
            if p == 0 || p > n {
                return Err(OsxError::PointOutOfRange { point: p, n });
            }
            let b = 1u32 << (p - 1);
            if bits & b != 0 {
                return Err(OsxError::RepeatedPoint(p));
            }
            bits |= b;
        }
        Ok(GroundSubset(bits))
    }

    /// Builds a subset from points that are known to be valid. Repeats are merged.
    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        GroundSubset(points.into_iter().fold(0, |acc, p| acc | (1 << (p - 1))))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        (1..=32).contains(&point) && self.0 & (1 << (point - 1)) != 0
    }

    pub fn is_subset(self, other: GroundSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 & other.0)
    }

    pub fn difference(self, other: GroundSubset) -> Self {
        GroundSubset(self.0 & !other.0)
    }

    pub fn with(self, point: usize) -> Self {
        GroundSubset(self.0 | (1 << (point - 1)))
    }

    pub fn without(self, point: usize) -> Self {
        GroundSubset(self.0 & !(1 << (point - 1)))
    }

    pub fn min_point(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_point(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Increasing iterator over the points.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `1..=n` with exactly `k` points, in increasing bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = GroundSubset> {
        let limit = 1u64 << n;
        let mut next: Option<u64> = (k <= n).then(|| (1u64 << k) - 1);
        std::iter::from_fn(move || {
            let cur = next?;
            if cur >= limit {
                next = None;
                return None;
            }
            next = if cur == 0 {
                None
            } else {
                // Gosper's hack
                let c = cur & cur.wrapping_neg();
                let r = cur + c;
                Some((((r ^ cur) >> 2) / c) | r)
            };
            Some(GroundSubset(cur as u32))
        })
    }

    /// Every subset of `1..=n`.
    pub fn all(n: usize) -> impl Iterator<Item = GroundSubset> {
        (0..(1u64 << n)).map(|b| GroundSubset(b as u32))
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = GroundSubset> {
        let full = self.0;
        let mut cur = Some(0u32);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(c.wrapping_sub(full) & full) };
            Some(GroundSubset(c))
        })
    }
}

impl Ord for GroundSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // smallest differing point belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for GroundSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for GroundSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(d)?;
        GroundSubset::try_from_points(&points, MAX_GROUND_SET).map_err(serde::de::Error::custom)
    }
}

/// A chain of flats `X_0 = ∅ ⊂ X_1 ⊂ ... ⊂ X_k` with `rank(X_i) = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Flag {
    flats: Vec<GroundSubset>,
}

impl Flag {
    /// Wraps a chain of flats after checking it against `m`.
    pub fn new(m: &Matroid, flats: Vec<GroundSubset>) -> Result<Self> {
        if flats.first() != Some(&GroundSubset::EMPTY) {
            return Err(OsxError::NotMaximalFlag);
        }
        for (i, &x) in flats.iter().enumerate() {
            if m.closure(x) != x || m.rank(x) != i {
                return Err(OsxError::NotMaximalFlag);
            }
            if i > 0 && !flats[i - 1].is_subset(x) {
                return Err(OsxError::NotMaximalFlag);
            }
        }
        Ok(Flag { flats })
    }

    pub(crate) fn from_flats_unchecked(flats: Vec<GroundSubset>) -> Self {
        Flag { flats }
    }

    pub fn flats(&self) -> &[GroundSubset] {
        &self.flats
    }

    /// Number of non-empty flats, i.e. the rank of the top flat.
    pub fn len(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn top(&self) -> GroundSubset {
        *self.flats.last().expect("flag always holds the empty flat")
    }

    pub fn is_maximal(&self, m: &Matroid) -> bool {
        self.len() == m.rank_total() && self.top() == m.ground()
    }

    /// The successive differences `S_i = X_i \ X_{i-1}`.
    pub fn blocks(&self) -> Vec<GroundSubset> {
        self.flats.windows(2).map(|w| w[1].difference(w[0])).collect()
    }

    /// Replaces the flat of rank `i`.
    pub fn with_flat(&self, i: usize, y: GroundSubset) -> Flag {
        let mut flats = self.flats.clone();
        flats[i] = y;
        Flag { flats }
    }
}

/// A tuple of distinct points, used where order matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedBase(pub Vec<usize>);

impl OrderedBase {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn set(&self) -> GroundSubset {
        GroundSubset::from_points(self.0.iter().copied())
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for OrderedBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Disjoint nonempty blocks covering `1..=n`. Block order is kept; it matters for `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    n: usize,
    parts: Vec<GroundSubset>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<GroundSubset>) -> Result<Self> {
        let mut seen = GroundSubset::EMPTY;
        for &p in &parts {
            if p.is_empty() || !p.intersection(seen).is_empty() {
                return Err(OsxError::NotAPartition { n });
            }
            seen = seen.union(p);
        }
        if n > MAX_GROUND_SET || seen != GroundSubset::full(n) {
            return Err(OsxError::NotAPartition { n });
        }
        Ok(Partition { n, parts })
    }

    pub fn from_lists(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let parts = parts.iter().map(|p| GroundSubset::try_from_points(p, n)).collect::<Result<Vec<_>>>()?;
        Partition::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[GroundSubset] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Blocks sorted by their minima; used when the partition is treated as unordered.
    pub fn canonical(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p.min_point());
        Partition { n: self.n, parts }
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.to_vec()).collect()
    }
}

/// A simple matroid on `1..=n`, immutable after construction.
#[derive(Debug)]
pub struct Matroid {
    n: usize,
    circuits: Vec<GroundSubset>,
    rank: usize,
    broken: OnceLock<Vec<GroundSubset>>,
    nbc: OnceLock<Vec<Vec<GroundSubset>>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid::assemble(self.n, self.circuits.clone())
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Builds a matroid from its circuit list.
    ///
    /// Circuits must have at least three points and be pairwise incomparable.
    /// The circuit elimination axiom is not checked here; see
    /// [`Matroid::validate_axioms`].
    pub fn from_circuits(n: usize, circuits: &[Vec<usize>]) -> Result<Self> {
        check_ground(n)?;
        let sets = circuits.iter().map(|c| GroundSubset::try_from_points(c, n)).collect::<Result<Vec<_>>>()?;
        Matroid::from_subsets(n, sets)
    }

    pub fn from_subsets(n: usize, circuits: Vec<GroundSubset>) -> Result<Self> {
        check_ground(n)?;
        let set: BTreeSet<GroundSubset> = circuits.into_iter().collect();
        let circuits: Vec<GroundSubset> = set.into_iter().collect();
        for c in &circuits {
            if c.len() <= 2 {
                return Err(OsxError::NonSimple(c.to_vec()));
            }
            if c.max_point().is_some_and(|m| m > n) {
                return Err(OsxError::PointOutOfRange { point: c.max_point().unwrap(), n });
            }
        }
        for (i, a) in circuits.iter().enumerate() {
            for b in &circuits[i + 1..] {
                if a.is_subset(*b) {
                    return Err(OsxError::NestedCircuits { inner: a.to_vec(), outer: b.to_vec() });
                }
            }
        }
        Ok(Matroid::assemble(n, circuits))
    }

    fn assemble(n: usize, circuits: Vec<GroundSubset>) -> Self {
        let mut m = Matroid { n, circuits, rank: 0, broken: OnceLock::new(), nbc: OnceLock::new() };
        m.rank = m.rank(GroundSubset::full(n));
        m
    }

    /// Builds a matroid of rank at most 3 from a point-line configuration.
    ///
    /// Circuits are the 3-subsets of each line together with the 4-subsets that
    /// contain no collinear triple.
    pub fn from_lines(n: usize, lines: &[Vec<usize>]) -> Result<Self> {
        check_ground(n)?;
        let sets = lines.iter().map(|l| GroundSubset::try_from_points(l, n)).collect::<Result<Vec<_>>>()?;
        for l in &sets {
            if l.len() < 3 {
                return Err(OsxError::ShortLine(l.to_vec()));
            }
        }
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if a.intersection(*b).len() >= 2 {
                    return Err(OsxError::OverlappingLines(a.to_vec(), b.to_vec()));
                }
            }
        }
        let collinear = |t: GroundSubset| sets.iter().any(|l| t.is_subset(*l));
        let mut circuits: Vec<GroundSubset> = GroundSubset::all_of_size(n, 3).filter(|&t| collinear(t)).collect();
        circuits.extend(GroundSubset::all_of_size(n, 4).filter(|q| !q.iter().any(|p| collinear(q.without(p)))));
        Matroid::from_subsets(n, circuits)
    }

    /// The uniform matroid `U_{k,n}`; simple for `k >= 2`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k < 2 || k > n {
            return Err(OsxError::InvalidParameter(format!("uniform({k},{n}) is not a simple matroid")));
        }
        check_ground(n)?;
        Matroid::from_subsets(n, GroundSubset::all_of_size(n, k + 1).collect())
    }

    /// The free matroid on `n` points.
    pub fn boolean(n: usize) -> Result<Self> {
        Matroid::from_subsets(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> GroundSubset {
        GroundSubset::full(self.n)
    }

    /// Circuits sorted by size, then lexicographically.
    pub fn circuits(&self) -> &[GroundSubset] {
        &self.circuits
    }

    /// Rank of the whole matroid.
    pub fn rank_total(&self) -> usize {
        self.rank
    }

    pub fn is_independent(&self, s: GroundSubset) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    pub fn rank(&self, s: GroundSubset) -> usize {
        let mut basis = GroundSubset::EMPTY;
        for p in s.iter() {
            let t = basis.with(p);
            if self.is_independent(t) {
                basis = t;
            }
        }
        basis.len()
    }

    /// The smallest flat containing `s`.
    pub fn closure(&self, s: GroundSubset) -> GroundSubset {
        let mut cl = s;
        for c in &self.circuits {
            let outside = c.difference(s);
            if outside.len() == 1 {
                cl = cl.union(outside);
            }
        }
        // points spanned by `s` lie on a circuit inside `s` plus that point
        debug_assert_eq!(self.rank(cl), self.rank(s));
        cl
    }

    pub fn is_flat(&self, s: GroundSubset) -> bool {
        self.closure(s) == s
    }

    /// `C \ {min C}` for every circuit, deduplicated and sorted.
    pub fn broken_circuits(&self) -> &[GroundSubset] {
        self.broken.get_or_init(|| {
            let set: BTreeSet<GroundSubset> = self.circuits.iter().map(|c| c.without(c.min_point().unwrap())).collect();
            set.into_iter().collect()
        })
    }

    /// No broken circuit inside `t`.
    pub fn is_nbc(&self, t: GroundSubset) -> bool {
        !self.broken_circuits().iter().any(|b| b.is_subset(t))
    }

    /// `i_r = min cl({i_r, ..., i_p})` for every suffix of the increasing list.
    pub fn is_nbc_by_closure(&self, t: GroundSubset) -> bool {
        if !self.is_independent(t) {
            return false;
        }
        let pts = t.to_vec();
        (0..pts.len()).all(|r| {
            let suffix = GroundSubset::from_points(pts[r..].iter().copied());
            self.closure(suffix).min_point() == Some(pts[r])
        })
    }

    fn nbc_levels(&self) -> &[Vec<GroundSubset>] {
        self.nbc.get_or_init(|| {
            let mut levels = vec![vec![GroundSubset::EMPTY]];
            loop {
                let mut next = BTreeSet::new();
                for t in levels.last().unwrap() {
                    let start = t.max_point().unwrap_or(0) + 1;
                    for x in start..=self.n {
                        let u = t.with(x);
                        if self.is_nbc(u) {
                            next.insert(u);
                        }
                    }
                }
                if next.is_empty() {
                    break;
                }
                levels.push(next.into_iter().collect());
            }
            levels
        })
    }

    /// All nbc-sets with `p` points, sorted.
    pub fn nbc_sets(&self, p: usize) -> &[GroundSubset] {
        self.nbc_levels().get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Flag of closures of suffixes: `X_p = cl(last p entries of u)`.
    ///
    /// For an ordered base this is a maximal flag; shorter independent tuples
    /// give partial flags.
    pub fn flagify(&self, u: &[usize]) -> Result<Flag> {
        let set = GroundSubset::try_from_points(u, self.n)?;
        if !self.is_independent(set) {
            return Err(OsxError::Dependent(u.to_vec()));
        }
        let k = u.len();
        let mut flats = Vec::with_capacity(k + 1);
        flats.push(self.closure(GroundSubset::EMPTY));
        for p in 1..=k {
            flats.push(self.closure(GroundSubset::from_points(u[k - p..].iter().copied())));
        }
        Ok(Flag::from_flats_unchecked(flats))
    }

    /// The ordered base whose `j`-th entry is `min(X_{k-j+1} \ X_{k-j})`,
    /// so that `flagify(phi(F)) = F`.
    pub fn phi(&self, f: &Flag) -> OrderedBase {
        let blocks = f.blocks();
        OrderedBase(blocks.iter().rev().map(|b| b.min_point().expect("flag blocks are nonempty")).collect())
    }

    /// The ordered partition `(X_1 \ X_0, ..., X_l \ X_{l-1})` of a maximal flag.
    pub fn partition_of_flag(&self, f: &Flag) -> Result<Partition> {
        if !f.is_maximal(self) {
            return Err(OsxError::NotMaximalFlag);
        }
        Partition::new(self.n, f.blocks())
    }

    /// Flats covering `x` (rank + 1), obtained as closures of single-point extensions.
    pub fn covers_within(&self, x: GroundSubset, z: GroundSubset) -> Vec<GroundSubset> {
        let set: BTreeSet<GroundSubset> = z.difference(x).iter().map(|y| self.closure(x.with(y))).collect();
        set.into_iter().collect()
    }

    /// Flats `Y` with `X ⊂ Y ⊂ Z`, where `Z` has rank two more than `X`.
    pub fn flats_between(&self, x: GroundSubset, z: GroundSubset) -> Result<Vec<GroundSubset>> {
        let (rx, rz) = (self.rank(x), self.rank(z));
        if rz != rx + 2 || !x.is_subset(z) {
            return Err(OsxError::RankGap { lower: rx, upper: rz });
        }
        Ok(self.covers_within(x, z))
    }

    /// Every maximal chain in the lattice of flats.
    pub fn maximal_flags(&self) -> impl Iterator<Item = Flag> {
        let mut out = Vec::new();
        let mut chain = vec![self.closure(GroundSubset::EMPTY)];
        self.extend_flags(&mut chain, &mut out);
        out.into_iter()
    }

    fn extend_flags(&self, chain: &mut Vec<GroundSubset>, out: &mut Vec<Flag>) {
        let top = *chain.last().unwrap();
        if top == self.ground() {
            out.push(Flag::from_flats_unchecked(chain.clone()));
            return;
        }
        for y in self.covers_within(top, self.ground()) {
            chain.push(y);
            self.extend_flags(chain, out);
            chain.pop();
        }
    }

    /// All flats of the given rank.
    pub fn flats_of_rank(&self, r: usize) -> Vec<GroundSubset> {
        let mut level: BTreeSet<GroundSubset> = BTreeSet::from([self.closure(GroundSubset::EMPTY)]);
        for _ in 0..r {
            level = level.iter().flat_map(|&x| self.covers_within(x, self.ground())).collect();
        }
        level.into_iter().collect()
    }

    /// Rank-2 flats with at least three points.
    pub fn lines(&self) -> Vec<GroundSubset> {
        self.flats_of_rank(2).into_iter().filter(|l| l.len() >= 3).collect()
    }

    /// Brute-force check of the circuit elimination axiom.
    pub fn validate_axioms(&self) -> Result<()> {
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                for e in a.intersection(b).iter() {
                    let rest = a.union(b).without(e);
                    if !self.circuits.iter().any(|c| c.is_subset(rest)) {
                        return Err(OsxError::CircuitElimination(a.to_vec(), b.to_vec(), e));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        Err(OsxError::GroundSetSize(n))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> GroundSubset {
        GroundSubset::from_points(points.iter().copied())
    }

    fn cross() -> Matroid {
        Matroid::from_lines(8, &[vec![1, 2, 3, 4], vec![1, 6, 7], vec![2, 5, 8], vec![3, 7, 8], vec![4, 5, 6]]).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn smallest_circuit() {
        let m = Matroid::from_circuits(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(m.rank_total(), 2);
        assert_eq!(m.broken_circuits(), &[set(&[2, 3])]);
    }

    #[test]
    fn free_matroid() {
        let m = Matroid::from_circuits(4, &[]).unwrap();
        assert_eq!(m.rank_total(), 4);
        for p in 0..=4 {
            assert_eq!(m.nbc_sets(p).len(), binom(4, p));
        }
    }

    #[test]
    fn rejects_non_simple_and_nested() {
        assert_eq!(Matroid::from_circuits(3, &[vec![1, 2]]), Err(OsxError::NonSimple(vec![1, 2])));
        assert!(matches!(
            Matroid::from_circuits(4, &[vec![1, 2, 3], vec![1, 2, 3, 4]]),
            Err(OsxError::NestedCircuits { .. })
        ));
        assert!(matches!(
            Matroid::from_circuits(3, &[vec![1, 2, 5]]),
            Err(OsxError::PointOutOfRange { point: 5, n: 3 })
        ));
    }

    #[test]
    fn lines_reject_overlaps() {
        assert!(matches!(Matroid::from_lines(5, &[vec![1, 2, 3], vec![1, 2, 4]]), Err(OsxError::OverlappingLines(..))));
        assert!(matches!(Matroid::from_lines(5, &[vec![1, 2]]), Err(OsxError::ShortLine(_))));
    }

    #[test]
    fn single_line_is_u23() {
        let a = Matroid::from_lines(3, &[vec![1, 2, 3]]).unwrap();
        let b = Matroid::from_circuits(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cross_basics() {
        let m = cross();
        assert_eq!(m.rank_total(), 3);
        let triples = m.circuits().iter().filter(|c| c.len() == 3).count();
        // 4 triples on the 4-point line, one on each 3-point line
        assert_eq!(triples, 8);
        assert_eq!(m.closure(set(&[1, 2])), set(&[1, 2, 3, 4]));
        assert_eq!(m.closure(GroundSubset::EMPTY), GroundSubset::EMPTY);
        assert_eq!(m.nbc_sets(3).len(), 14);
        let bc: Vec<_> = m.broken_circuits().iter().filter(|b| b.len() == 2).collect();
        assert_eq!(bc.len(), 7);
        m.validate_axioms().unwrap();
    }

    #[test]
    fn cross_flags() {
        let m = cross();
        let f = m.flagify(&[1, 3, 5]).unwrap();
        assert_eq!(f.flats(), &[GroundSubset::EMPTY, set(&[5]), set(&[3, 5]), m.ground()]);
        let g = m.flagify(&[2, 1, 5]).unwrap();
        assert_eq!(g.flats()[2], m.closure(set(&[1, 5])));
        assert_eq!(m.phi(&g), OrderedBase(vec![2, 1, 5]));
        assert!(m.flagify(&[1, 2, 3]).is_err());

        let u = m.flagify(&[1, 5, 3]).unwrap();
        let phi = m.phi(&u);
        assert_eq!(m.flagify(phi.as_slice()).unwrap(), u);
    }

    #[test]
    fn cross_flats_between() {
        let m = cross();
        let full = m.ground();
        assert_eq!(
            m.flats_between(GroundSubset::EMPTY, set(&[1, 2, 3, 4])).unwrap(),
            vec![set(&[1]), set(&[2]), set(&[3]), set(&[4])]
        );
        let ys = m.flats_between(set(&[5]), full).unwrap();
        assert!(ys.contains(&set(&[2, 5, 8])));
        assert!(ys.contains(&set(&[4, 5, 6])));
        assert!(ys.contains(&set(&[1, 5])));
        assert!(ys.contains(&set(&[3, 5])));
        assert!(ys.contains(&set(&[5, 7])));
        assert_eq!(ys.len(), 5);
        // the intermediate flats partition Z \ X
        let covered = ys.iter().fold(GroundSubset::EMPTY, |acc, y| acc.union(y.without(5)));
        assert_eq!(covered, full.without(5));
        assert!(m.flats_between(GroundSubset::EMPTY, set(&[1])).is_err());
    }

    #[test]
    fn boolean_flags_are_suffix_sets() {
        let m = Matroid::boolean(4).unwrap();
        let f = m.flagify(&[3, 1, 4, 2]).unwrap();
        assert_eq!(f.flats(), &[GroundSubset::EMPTY, set(&[2]), set(&[2, 4]), set(&[1, 2, 4]), m.ground()]);
        let coord = m.flagify(&[1, 2, 3, 4]).unwrap();
        assert_eq!(m.phi(&coord), OrderedBase(vec![1, 2, 3, 4]));
        assert_eq!(m.maximal_flags().count(), 24);
    }

    #[test]
    fn partition_of_flag_orders_blocks() {
        let m = cross();
        let f = m.flagify(&[1, 3, 6]).unwrap();
        let p = m.partition_of_flag(&f).unwrap();
        assert_eq!(p.parts(), &[set(&[6]), set(&[3]), set(&[1, 2, 4, 5, 7, 8])]);
        let partial = m.flagify(&[3]).unwrap();
        assert_eq!(m.partition_of_flag(&partial), Err(OsxError::NotMaximalFlag));
    }

    #[test]
    fn subset_iterators() {
        assert_eq!(GroundSubset::all_of_size(5, 2).count(), 10);
        assert_eq!(GroundSubset::all_of_size(5, 0).count(), 1);
        assert_eq!(GroundSubset::all_of_size(3, 4).count(), 0);
        assert_eq!(set(&[1, 3, 4]).subsets().count(), 8);
        assert!(set(&[1, 2, 3]) < set(&[1, 2, 4]));
        assert!(set(&[1, 2, 4]) < set(&[1, 3, 4]));
        assert!(set(&[5]) < set(&[1, 2]));
    }
}
