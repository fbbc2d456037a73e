//! Ground-set arithmetic on the Boolean lattice `2^[n]`.
//!
//! A subset of `[n] = {1, …, n}` is an `n`-bit mask ([`Set`]); element `i`
//! is bit `i - 1`. Families are kept in the canonical total order: ascending
//! by size, then by the numeric value of the mask. Every deterministic
//! algorithm in the crate scans families in this order, so changing it is a
//! breaking change.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An `n`-bit subset of the ground set.
pub type Set = u64;

/// Largest ground set for which explicit families are supported.
pub const MAX_GROUND: u32 = 64;
/// Largest ground set for which all of `2^[n]` may be enumerated.
pub const FULL_LATTICE_CAP: u32 = 30;
/// Default cap for exact min-partition chain counting.
pub const MIN_PARTITION_CAP: u32 = 12;

/// Sort key realising the canonical order.
#[inline]
pub fn canonical_key(s: Set) -> (u32, Set) {
    (s.count_ones(), s)
}

#[inline]
pub fn canonical_cmp(a: &Set, b: &Set) -> Ordering {
    canonical_key(*a).cmp(&canonical_key(*b))
}

#[inline]
pub fn ground_mask(n: u32) -> Set {
    if n >= 64 {
        Set::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn is_subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

#[inline]
pub fn is_strict_subset(a: Set, b: Set) -> bool {
    a != b && a & !b == 0
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient in `u128`, `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(acc)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, ⌊n/2⌋)`.
pub fn central_binomial(n: u32) -> BigUint {
    binomial(n as u64, (n / 2) as u64)
}

/// The central binomial coefficient and the number of maximal chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeStats {
    pub n: u32,
    pub m: BigUint,
    pub chain_count: BigUint,
}

impl LatticeStats {
    pub fn new(n: u32) -> Self {
        LatticeStats {
            n,
            m: central_binomial(n),
            chain_count: factorial(n as u64),
        }
    }
}

/// A family of distinct subsets of `[n]` stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: u32,
    members: Vec<Set>,
}

impl SetFamily {
    /// Builds a family, sorting into canonical order and dropping repeats.
    pub fn new<I: IntoIterator<Item = Set>>(n: u32, sets: I) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::capacity("ground set size", n as u64, MAX_GROUND as u64));
        }
        let mask = ground_mask(n);
        let mut members: Vec<Set> = Vec::new();
        for s in sets {
            if s & !mask != 0 {
                return Err(Error::OutOfGround { set: s, n });
            }
            members.push(s);
        }
        members.sort_unstable_by(canonical_cmp);
        members.dedup();
        Ok(SetFamily { n, members })
    }

    pub fn empty(n: u32) -> Self {
        SetFamily {
            n,
            members: Vec::new(),
        }
    }

    /// Caller guarantees canonical order, no repeats, and fit in `[n]`.
    pub(crate) fn from_sorted(n: u32, members: Vec<Set>) -> Self {
        debug_assert!(members.windows(2).all(|w| canonical_cmp(&w[0], &w[1]) == Ordering::Less));
        SetFamily { n, members }
    }

    /// All of `2^[n]`.
    pub fn full(n: u32) -> Result<Self> {
        if n > FULL_LATTICE_CAP {
            return Err(Error::capacity("full lattice ground set", n as u64, FULL_LATTICE_CAP as u64));
        }
        Self::layers(n, 0, n)
    }

    /// Every subset whose size lies in `lo..=hi`.
    pub fn layers(n: u32, lo: u32, hi: u32) -> Result<Self> {
        if n > FULL_LATTICE_CAP {
            return Err(Error::capacity("full lattice ground set", n as u64, FULL_LATTICE_CAP as u64));
        }
        let mut members = Vec::new();
        for k in lo..=hi.min(n) {
            members.extend(layer_sets(n, k));
        }
        Ok(SetFamily { n, members })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[Set] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Set> + '_ {
        self.members.iter().copied()
    }

    pub fn into_members(self) -> Vec<Set> {
        self.members
    }

    /// Position of `s` in canonical order, if present.
    pub fn position(&self, s: Set) -> Option<usize> {
        self.members
            .binary_search_by(|m| canonical_cmp(m, &s))
            .ok()
    }

    pub fn contains(&self, s: Set) -> bool {
        self.position(s).is_some()
    }

    pub fn filter<F: FnMut(Set) -> bool>(&self, mut keep: F) -> SetFamily {
        SetFamily::from_sorted(self.n, self.members.iter().copied().filter(|&s| keep(s)).collect())
    }

    /// `{[n] \ F : F in family}`.
    pub fn complement(&self) -> SetFamily {
        let mask = ground_mask(self.n);
        let mut members: Vec<Set> = self.members.iter().map(|&s| !s & mask).collect();
        members.sort_unstable_by(canonical_cmp);
        SetFamily { n: self.n, members }
    }

    pub fn union(&self, other: &SetFamily) -> SetFamily {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable_by(canonical_cmp);
        members.dedup();
        SetFamily {
            n: self.n.max(other.n),
            members,
        }
    }

    pub fn difference(&self, other: &SetFamily) -> SetFamily {
        self.filter(|s| !other.contains(s))
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&s| other.contains(s))
    }

    pub fn is_disjoint_from(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&s| !other.contains(s))
    }

    /// The first `k` members in canonical order.
    pub fn truncate(&self, k: usize) -> SetFamily {
        SetFamily::from_sorted(self.n, self.members[..k.min(self.members.len())].to_vec())
    }

    /// Number of members of each size `0..=n`.
    pub fn layer_profile(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n as usize + 1];
        for &s in &self.members {
            counts[s.count_ones() as usize] += 1;
        }
        counts
    }
}

/// All `k`-subsets of `[n]` in increasing numeric order.
pub fn layer_sets(n: u32, k: u32) -> Vec<Set> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = ground_mask(n);
    let mut s: Set = (1u64 << k) - 1;
    loop {
        out.push(s);
        // Gosper's hack: next mask with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r & !limit != 0 {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s & !limit != 0 {
            break;
        }
    }
    out
}

/// `Σ 1 / C(n, |F|)` over the family, exactly.
pub fn lubell_mass(family: &SetFamily) -> BigRational {
    let n = family.n() as u64;
    let mut total = BigRational::zero();
    for (k, &count) in family.layer_profile().iter().enumerate() {
        if count > 0 {
            total += BigRational::new(BigUint::from(count).into(), binomial(n, k as u64).into());
        }
    }
    total
}

/// Number of members `G ⊇ base` with `|G| = |base| + j`.
pub fn upper_shadow_count(family: &SetFamily, base: Set, j: u32) -> Result<u64> {
    if !family.contains(base) {
        return Err(Error::NotInFamily(base));
    }
    let target = base.count_ones() + j;
    Ok(family
        .iter()
        .filter(|&g| g.count_ones() == target && is_subset(base, g))
        .count() as u64)
}

/// Number of members `G ⊆ base` with `|G| = |base| - j`.
pub fn lower_shadow_count(family: &SetFamily, base: Set, j: u32) -> Result<u64> {
    if !family.contains(base) {
        return Err(Error::NotInFamily(base));
    }
    let size = base.count_ones();
    if j > size {
        return Ok(0);
    }
    let target = size - j;
    Ok(family
        .iter()
        .filter(|&g| g.count_ones() == target && is_subset(g, base))
        .count() as u64)
}

/// Packs the bits of `s` lying outside `removed` into consecutive low bits.
pub fn compress_outside(s: Set, removed: Set, n: u32) -> Set {
    let mut out = 0;
    let mut pos = 0;
    for i in 0..n {
        let bit = 1u64 << i;
        if removed & bit == 0 {
            if s & bit != 0 {
                out |= 1u64 << pos;
            }
            pos += 1;
        }
    }
    out
}

/// `{G \ base : G in family, base ⊆ G}` relabelled onto `n - |base|` elements.
pub fn up_set_quotient(family: &SetFamily, base: Set) -> Result<SetFamily> {
    if !family.contains(base) {
        return Err(Error::NotInFamily(base));
    }
    let n = family.n();
    let sets: Vec<Set> = family
        .iter()
        .filter(|&g| is_subset(base, g))
        .map(|g| compress_outside(g & !base, base, n))
        .collect();
    SetFamily::new(n - base.count_ones(), sets)
}

/// Classification of maximal chains by the smallest member they meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPartition {
    /// `(F, number of maximal chains whose smallest family member is F)`.
    pub counts: Vec<(Set, u128)>,
    /// Chains meeting no member.
    pub empty_count: u128,
}

impl MinPartition {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&(_, c)| c).sum::<u128>() + self.empty_count
    }

    pub fn count_of(&self, s: Set) -> Option<u128> {
        self.counts.iter().find(|&&(f, _)| f == s).map(|&(_, c)| c)
    }
}

/// Min-partition with the default cap on `n`.
pub fn min_partition(family: &SetFamily) -> Result<MinPartition> {
    min_partition_capped(family, MIN_PARTITION_CAP)
}

/// Min-partition for `n <= cap` (`cap <= 24`).
///
/// Counts saturated chains from `∅` that avoid the family below their
/// endpoint, then multiplies by the number of ways to finish the chain.
pub fn min_partition_capped(family: &SetFamily, cap: u32) -> Result<MinPartition> {
    let n = family.n();
    let cap = cap.min(24);
    if n > cap {
        return Err(Error::capacity("min-partition ground set", n as u64, cap as u64));
    }
    let size = 1usize << n;
    let mut member = vec![false; size];
    for s in family.iter() {
        member[s as usize] = true;
    }
    // avoid[s]: chains ∅ = S_0 ⊂ … ⊂ S_k = s with no S_i (i < k) in the family.
    let mut avoid = vec![0u128; size];
    avoid[0] = 1;
    let mut order: Vec<Set> = (0..size as Set).collect();
    order.sort_unstable_by(canonical_cmp);
    for &s in order.iter().skip(1) {
        let mut acc = 0u128;
        let mut bits = s;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            bits ^= low;
            let prev = (s ^ low) as usize;
            if !member[prev] {
                acc += avoid[prev];
            }
        }
        avoid[s as usize] = acc;
    }
    let mut fact = vec![1u128; n as usize + 1];
    for i in 1..=n as usize {
        fact[i] = fact[i - 1] * i as u128;
    }
    let counts = family
        .iter()
        .map(|s| (s, avoid[s as usize] * fact[(n - s.count_ones()) as usize]))
        .collect();
    let top = ground_mask(n) as usize;
    let empty_count = if member[top] { 0 } else { avoid[top] };
    Ok(MinPartition { counts, empty_count })
}

/// Whether size `s` lies in `[n/2 - n^{2/3}, n/2 + n^{2/3}]`, decided exactly.
pub fn in_middle_band(n: u32, s: u32) -> bool {
    let gap = (n as i128 - 2 * s as i128).unsigned_abs();
    gap * gap * gap <= 8 * (n as u128) * (n as u128)
}

/// Inclusive range of sizes kept by [`middle_band`].
pub fn middle_band_sizes(n: u32) -> (u32, u32) {
    let lo = (0..=n).find(|&s| in_middle_band(n, s)).unwrap_or(0);
    let hi = (0..=n).rev().find(|&s| in_middle_band(n, s)).unwrap_or(n);
    (lo, hi)
}

/// Subfamily of members whose size lies in the middle band.
pub fn middle_band(family: &SetFamily) -> SetFamily {
    let n = family.n();
    family.filter(|s| in_middle_band(n, s.count_ones()))
}

/// Membership lookup: a dense table for small ground sets, binary search otherwise.
#[derive(Debug, Clone)]
pub struct MemberIndex {
    dense: Option<Vec<u32>>,
    sorted: Vec<(Set, u32)>,
}

const DENSE_INDEX_CAP: u32 = 22;

impl MemberIndex {
    pub fn new(family: &SetFamily) -> Self {
        if family.n() <= DENSE_INDEX_CAP {
            let mut table = vec![u32::MAX; 1usize << family.n()];
            for (i, s) in family.iter().enumerate() {
                table[s as usize] = i as u32;
            }
            MemberIndex {
                dense: Some(table),
                sorted: Vec::new(),
            }
        } else {
            let mut sorted: Vec<(Set, u32)> =
                family.iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
            sorted.sort_unstable();
            MemberIndex { dense: None, sorted }
        }
    }

    /// Canonical position of `s` in the indexed family.
    #[inline]
    pub fn get(&self, s: Set) -> Option<usize> {
        match &self.dense {
            Some(table) => match table.get(s as usize) {
                Some(&i) if i != u32::MAX => Some(i as usize),
                _ => None,
            },
            None => self
                .sorted
                .binary_search_by(|&(m, _)| m.cmp(&s))
                .ok()
                .map(|k| self.sorted[k].1 as usize),
        }
    }
}

/// Strict containment queries inside one family.
///
/// For each member it picks the cheaper of enumerating sub/supersets of the
/// mask and scanning the whole family.
#[derive(Debug, Clone)]
pub struct ShadowIndex<'a> {
    family: &'a SetFamily,
    index: MemberIndex,
}

impl<'a> ShadowIndex<'a> {
    pub fn new(family: &'a SetFamily) -> Self {
        ShadowIndex {
            family,
            index: MemberIndex::new(family),
        }
    }

    pub fn family(&self) -> &'a SetFamily {
        self.family
    }

    pub fn position(&self, s: Set) -> Option<usize> {
        self.index.get(s)
    }

    fn for_each_above<F: FnMut(Set)>(&self, s: Set, mut visit: F) {
        let free = ground_mask(self.family.n()) & !s;
        let free_bits = free.count_ones();
        if free_bits < 63 && (1u64 << free_bits) <= self.family.len() as u64 {
            let mut sub = free;
            while sub != 0 {
                if self.index.get(s | sub).is_some() {
                    visit(s | sub);
                }
                sub = (sub - 1) & free;
            }
        } else {
            for g in self.family.iter() {
                if is_strict_subset(s, g) {
                    visit(g);
                }
            }
        }
    }

    fn for_each_below<F: FnMut(Set)>(&self, s: Set, mut visit: F) {
        let bits = s.count_ones();
        if bits < 63 && (1u64 << bits) <= self.family.len() as u64 {
            let mut sub = (s.wrapping_sub(1)) & s;
            loop {
                if sub != s && self.index.get(sub).is_some() {
                    visit(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & s;
            }
        } else {
            for g in self.family.iter() {
                if is_strict_subset(g, s) {
                    visit(g);
                }
            }
        }
    }

    /// Strict supersets of `s` in the family, canonical order.
    pub fn above(&self, s: Set) -> Vec<Set> {
        let mut out = Vec::new();
        self.for_each_above(s, |g| out.push(g));
        out.sort_unstable_by(canonical_cmp);
        out
    }

    /// Strict subsets of `s` in the family, canonical order.
    pub fn below(&self, s: Set) -> Vec<Set> {
        let mut out = Vec::new();
        self.for_each_below(s, |g| out.push(g));
        out.sort_unstable_by(canonical_cmp);
        out
    }

    /// `profile[j]` = number of members `G ⊇ s` with `|G| = |s| + j`.
    pub fn up_profile(&self, s: Set) -> Vec<u32> {
        let base = s.count_ones();
        let mut profile = vec![0u32; (self.family.n() - base) as usize + 1];
        self.for_each_above(s, |g| profile[(g.count_ones() - base) as usize] += 1);
        profile
    }

    /// `profile[j]` = number of members `G ⊆ s` with `|G| = |s| - j`.
    pub fn down_profile(&self, s: Set) -> Vec<u32> {
        let base = s.count_ones();
        let mut profile = vec![0u32; base as usize + 1];
        self.for_each_below(s, |g| profile[(base - g.count_ones()) as usize] += 1);
        profile
    }

    /// Members above `s` at size distance exactly `j`.
    pub fn above_at(&self, s: Set, j: u32) -> Vec<Set> {
        let target = s.count_ones() + j;
        self.above(s).into_iter().filter(|g| g.count_ones() == target).collect()
    }

    /// Members below `s` at size distance exactly `j`.
    pub fn below_at(&self, s: Set, j: u32) -> Vec<Set> {
        let size = s.count_ones();
        self.below(s)
            .into_iter()
            .filter(|g| g.count_ones() + j == size)
            .collect()
    }
}

/// Strict containment lists by canonical position, built once per family.
///
/// `up[i]` lists the positions of strict supersets of member `i` and
/// `down[i]` those of strict subsets, both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub up: Vec<Vec<u32>>,
    pub down: Vec<Vec<u32>>,
}

impl Containment {
    pub fn new(family: &SetFamily) -> Containment {
        let shadows = ShadowIndex::new(family);
        let mut up: Vec<Vec<u32>> = vec![Vec::new(); family.len()];
        let mut down: Vec<Vec<u32>> = vec![Vec::new(); family.len()];
        for (i, s) in family.iter().enumerate() {
            shadows.for_each_above(s, |g| {
                let j = shadows.position(g).expect("member");
                up[i].push(j as u32);
                down[j].push(i as u32);
            });
        }
        for list in &mut up {
            list.sort_unstable();
        }
        Containment { up, down }
    }

    /// Number of comparable ordered pairs.
    pub fn pairs(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(elems: &[u32]) -> Set {
        elems.iter().fold(0, |acc, &e| acc | 1 << (e - 1))
    }

    #[test]
    fn canonical_order_is_size_then_value() {
        let fam = SetFamily::new(3, [0b110, 0b001, 0b000, 0b111, 0b010]).unwrap();
        assert_eq!(fam.members(), &[0b000, 0b001, 0b010, 0b110, 0b111]);
    }

    #[test]
    fn layer_sets_match_binomials() {
        for n in 0..=10 {
            for k in 0..=n {
                let layer = layer_sets(n, k);
                assert_eq!(BigUint::from(layer.len()), binomial(n as u64, k as u64));
                assert!(layer.iter().all(|s| s.count_ones() == k));
            }
        }
    }

    #[test]
    fn lubell_mass_examples() {
        let full = SetFamily::full(3).unwrap();
        assert_eq!(lubell_mass(&full), BigRational::from_integer(4.into()));
        let layer = SetFamily::new(3, [set(&[1]), set(&[2]), set(&[3])]).unwrap();
        assert_eq!(lubell_mass(&layer), BigRational::one());
        let bottom = SetFamily::new(4, [0]).unwrap();
        assert_eq!(lubell_mass(&bottom), BigRational::one());
        assert_eq!(lubell_mass(&SetFamily::empty(5)), BigRational::zero());
    }

    #[test]
    fn shadow_examples() {
        let full = SetFamily::full(3).unwrap();
        assert_eq!(upper_shadow_count(&full, set(&[1]), 1).unwrap(), 2);
        assert_eq!(upper_shadow_count(&full, set(&[1]), 2).unwrap(), 1);
        let layer = SetFamily::layers(4, 2, 2).unwrap();
        for s in layer.iter() {
            for j in 1..4 {
                assert_eq!(upper_shadow_count(&layer, s, j).unwrap(), 0);
                assert_eq!(lower_shadow_count(&layer, s, j).unwrap(), 0);
            }
        }
        assert_eq!(
            upper_shadow_count(&layer, set(&[1]), 1),
            Err(Error::NotInFamily(set(&[1])))
        );
    }

    #[test]
    fn up_set_quotient_examples() {
        let fam = SetFamily::new(3, [set(&[1]), set(&[1, 2]), set(&[1, 3])]).unwrap();
        let q = up_set_quotient(&fam, set(&[1])).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.members(), &[0, 0b01, 0b10]);

        let anti = SetFamily::layers(4, 2, 2).unwrap();
        let q = up_set_quotient(&anti, set(&[1, 2])).unwrap();
        assert_eq!(q.members(), &[0]);

        let full = SetFamily::full(2).unwrap();
        assert_eq!(up_set_quotient(&full, 0).unwrap(), full);
    }

    #[test]
    fn min_partition_examples() {
        let fam = SetFamily::new(2, [set(&[1])]).unwrap();
        let mp = min_partition(&fam).unwrap();
        assert_eq!(mp.count_of(set(&[1])), Some(1));
        assert_eq!(mp.empty_count, 1);

        let bottom = SetFamily::new(3, [0]).unwrap();
        let mp = min_partition(&bottom).unwrap();
        assert_eq!(mp.count_of(0), Some(6));
        assert_eq!(mp.empty_count, 0);

        let singles = SetFamily::layers(3, 1, 1).unwrap();
        let mp = min_partition(&singles).unwrap();
        assert!(mp.counts.iter().all(|&(_, c)| c == 2));
        assert_eq!(mp.empty_count, 0);

        let big = SetFamily::new(13, [0]).unwrap();
        assert!(min_partition(&big).unwrap_err().is_capacity());
    }

    #[test]
    fn middle_band_examples() {
        // 4^{2/3} ≈ 2.52, so the real band [-0.52, 4.52] keeps every size.
        assert_eq!(middle_band_sizes(4), (0, 4));
        assert_eq!(middle_band_sizes(27), (5, 22));
        assert_eq!(middle_band_sizes(16), (2, 14));
        let inside = SetFamily::layers(27, 13, 14).unwrap();
        assert_eq!(middle_band(&inside), inside);
        let mixed = SetFamily::new(27, [0, set(&[1, 2, 3, 4]), set(&[1, 2, 3, 4, 5])]).unwrap();
        assert_eq!(middle_band(&mixed).members(), &[set(&[1, 2, 3, 4, 5])]);
    }

    #[test]
    fn shadow_index_matches_scan() {
        let fam = SetFamily::new(
            5,
            [0, set(&[1]), set(&[2]), set(&[1, 2]), set(&[1, 2, 3]), set(&[4, 5]), 0b11111],
        )
        .unwrap();
        let idx = ShadowIndex::new(&fam);
        for s in fam.iter() {
            let above: Vec<Set> = fam.iter().filter(|&g| is_strict_subset(s, g)).collect();
            let below: Vec<Set> = fam.iter().filter(|&g| is_strict_subset(g, s)).collect();
            assert_eq!(idx.above(s), above);
            assert_eq!(idx.below(s), below);
            let up = idx.up_profile(s);
            for j in 1..up.len() as u32 {
                assert_eq!(up[j as usize] as u64, upper_shadow_count(&fam, s, j).unwrap());
            }
        }
        assert_eq!(idx.up_profile(0), vec![0, 2, 2, 1, 0, 1]);
    }

    #[test]
    fn member_index_sparse_and_dense_agree() {
        let fam = SetFamily::new(30, [5, 1 << 29, 3 << 20]).unwrap();
        let idx = MemberIndex::new(&fam);
        for (i, s) in fam.iter().enumerate() {
            assert_eq!(idx.get(s), Some(i));
        }
        assert_eq!(idx.get(7), None);
    }
}
