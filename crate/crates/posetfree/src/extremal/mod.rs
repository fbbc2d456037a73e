//! Exact extremal solvers at desk scale.
//!
//! `la_exact` and `count_pfree` search the whole lattice; the antichain and
//! `k`-antichain solvers go through matching and minimum-cost flow and scale
//! to families with tens of thousands of members. Every witness is re-checked
//! before it is returned.

pub mod flow;
pub mod matching;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::embed::{find_subposet, PatternProbe};
use crate::error::{Error, Result};
use crate::lattice::{is_strict_subset, Containment, Set, SetFamily};
use crate::poset::Poset;

/// Ground-set limit for exact search with an arbitrary pattern.
pub const LA_SEARCH_CAP: u32 = 5;
/// Ground-set limit for the chain route of [`la_exact`] through flow.
pub const LA_FLOW_CAP: u32 = 12;
/// Ground-set limit for [`count_pfree`] with an arbitrary pattern.
pub const COUNT_CAP: u32 = 4;
/// Ground-set limit for [`count_pfree`] with the two-element chain.
pub const COUNT_ANTICHAIN_CAP: u32 = 5;
/// Member limit for [`max_antichain`].
pub const MATCHING_CAP: usize = 1 << 17;
/// Member limit for [`max_ct_free`].
pub const FLOW_CAP: usize = 1 << 15;
/// Member limit for [`max_pfree_subfamily`].
pub const SUBFAMILY_CAP: usize = 40;
/// Largest ground set routed through the lattice-grid network.
const GRID_CAP: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    BranchAndBound,
    Matching,
    Flow,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::BranchAndBound => "branch-and-bound",
            Method::Matching => "matching",
            Method::Flow => "flow",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub value: usize,
    pub witness: SetFamily,
    pub method: Method,
}

/// Whether every pair of elements is comparable.
pub fn is_chain_pattern(pattern: &Poset) -> bool {
    pattern.height() == pattern.len()
}

/// Mirsky levels: `level[i]` is the number of members in a longest chain
/// ending at member `i` (from 1).
pub fn mirsky_levels(family: &SetFamily) -> Vec<u32> {
    let links = Containment::new(family);
    levels_from(&links)
}

fn levels_from(links: &Containment) -> Vec<u32> {
    let mut level = vec![1u32; links.down.len()];
    // Canonical order is a linear extension, so subsets come first.
    for i in 0..level.len() {
        level[i] = 1 + links.down[i].iter().map(|&j| level[j as usize]).max().unwrap_or(0);
    }
    level
}

/// Number of members in a longest chain of the family.
pub fn longest_chain(family: &SetFamily) -> usize {
    mirsky_levels(family).into_iter().max().unwrap_or(0) as usize
}

/// Partition into at most `k` antichains by Mirsky level, if the height allows.
pub fn mirsky_partition(family: &SetFamily, k: usize) -> Option<Vec<SetFamily>> {
    let level = mirsky_levels(family);
    let height = level.iter().copied().max().unwrap_or(0) as usize;
    if height > k {
        return None;
    }
    let mut parts = vec![Vec::new(); height];
    for (s, &l) in family.iter().zip(&level) {
        parts[l as usize - 1].push(s);
    }
    Some(
        parts
            .into_iter()
            .map(|p| SetFamily::new(family.n(), p).expect("members fit"))
            .collect(),
    )
}

pub fn is_antichain(family: &SetFamily) -> bool {
    let m = family.members();
    (0..m.len()).all(|i| (i + 1..m.len()).all(|j| !is_strict_subset(m[i], m[j]) && !is_strict_subset(m[j], m[i])))
}

/// Freeness test with a fast path for chains.
pub fn is_pattern_free(pattern: &Poset, family: &SetFamily) -> Result<bool> {
    if is_chain_pattern(pattern) {
        return Ok(longest_chain(family) < pattern.len());
    }
    Ok(find_subposet(pattern, family, false)?.is_none())
}

fn certify_free(pattern: &Poset, witness: &SetFamily) -> Result<()> {
    if find_subposet(pattern, witness, false)?.is_some() {
        return Err(Error::Certificate(String::from("witness contains the pattern")));
    }
    Ok(())
}

/// Largest antichain via Dilworth: a maximum matching on strict containment
/// gives a minimum chain cover, and König's theorem turns the alternating
/// reach into an antichain of the same size.
pub fn max_antichain(family: &SetFamily) -> Result<ExtremalResult> {
    if family.len() > MATCHING_CAP {
        return Err(Error::capacity("family size for matching", family.len() as u64, MATCHING_CAP as u64));
    }
    let links = Containment::new(family);
    let m = matching::hopcroft_karp(&links.up, family.len());
    let (zl, zr) = matching::alternating_reach(&links.up, &m);
    let members: Vec<Set> = family
        .iter()
        .enumerate()
        .filter(|&(i, _)| zl[i] && !zr[i])
        .map(|(_, s)| s)
        .collect();
    let value = family.len() - m.size;
    let witness = SetFamily::new(family.n(), members)?;
    if witness.len() != value || !antichain_by_links(&witness) {
        return Err(Error::Certificate(format!(
            "König antichain has {} members, expected {value}",
            witness.len()
        )));
    }
    Ok(ExtremalResult {
        value,
        witness,
        method: Method::Matching,
    })
}

fn antichain_by_links(family: &SetFamily) -> bool {
    Containment::new(family).pairs() == 0
}

/// Largest subfamily with no chain of `t` members (a union of `t − 1`
/// antichains, by Greene–Kleitman) through minimum-cost flow.
pub fn max_ct_free(family: &SetFamily, t: usize) -> Result<ExtremalResult> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("chain length must be at least 2, got {t}")));
    }
    if family.len() > FLOW_CAP {
        return Err(Error::capacity("family size for flow", family.len() as u64, FLOW_CAP as u64));
    }
    let k = t - 1;
    let n = family.n();
    let grid = n <= GRID_CAP && (1usize << n) <= 16 * family.len();
    let sol = if grid {
        flow::k_antichain_flow_grid(n, family.members(), k)
    } else {
        let links = Containment::new(family);
        if levels_from(&links).iter().all(|&l| l as usize <= k) {
            flow::KAntichainFlow {
                value: family.len(),
                members: (0..family.len()).collect(),
            }
        } else {
            flow::k_antichain_flow(&links, k)
        }
    };
    let value = sol.value;
    let members: Vec<Set> = sol.members.iter().map(|&i| family.members()[i]).collect();
    let witness = SetFamily::new(family.n(), members)?;
    if witness.len() != value || longest_chain(&witness) > k {
        return Err(Error::Certificate(format!(
            "flow witness has {} members and height {}, expected {value} and at most {k}",
            witness.len(),
            longest_chain(&witness)
        )));
    }
    Ok(ExtremalResult {
        value,
        witness,
        method: Method::Flow,
    })
}

/// Incremental freeness for families grown in canonical order.
enum Grower<'a> {
    /// Chain `C_t`: longest chain ending at each present set, by mask.
    Chain { t: u32, level: Vec<u8> },
    General { probe: PatternProbe<'a> },
}

impl<'a> Grower<'a> {
    fn new(pattern: &'a Poset, n: u32) -> Result<Self> {
        Ok(if is_chain_pattern(pattern) {
            Grower::Chain {
                t: pattern.len() as u32,
                level: vec![0; 1usize << n],
            }
        } else {
            Grower::General {
                probe: PatternProbe::new(pattern)?,
            }
        })
    }

    /// Admits `s` if the grown family stays free; returns whether it did.
    /// Callers undo with [`Grower::remove`].
    fn try_add(&mut self, current: &[Set], s: Set) -> bool {
        match self {
            Grower::Chain { t, level } => {
                let below = current
                    .iter()
                    .filter(|&&c| is_strict_subset(c, s))
                    .map(|&c| level[c as usize])
                    .max()
                    .unwrap_or(0);
                if below as u32 + 1 >= *t {
                    return false;
                }
                level[s as usize] = below + 1;
                true
            }
            Grower::General { probe } => !probe.copy_through(current, s),
        }
    }

    fn remove(&mut self, s: Set) {
        if let Grower::Chain { level, .. } = self {
            level[s as usize] = 0;
        }
    }
}

fn factorial_u64(k: u32) -> u64 {
    (1..=k as u64).product()
}

struct LaSearch<'a> {
    sets: Vec<Set>,
    /// `k!(n−k)!` for the size of each set: its share of `n!` maximal chains.
    weight: Vec<u64>,
    /// `remaining[i][k]`: sets of size `k` at positions `≥ i`.
    remaining: Vec<Vec<u64>>,
    /// Layer sizes ordered by weight, lightest first.
    layer_order: Vec<usize>,
    layer_weight: Vec<u64>,
    grower: Grower<'a>,
    current: Vec<Set>,
    best: Vec<Set>,
}

impl LaSearch<'_> {
    /// Fractional Lubell bound on what positions `≥ i` can still add.
    fn bound(&self, i: usize, budget: u64) -> usize {
        let mut budget = budget;
        let mut extra = 0u64;
        for &k in &self.layer_order {
            let avail = self.remaining[i][k];
            if avail == 0 {
                continue;
            }
            let w = self.layer_weight[k];
            let take = avail.min(budget / w);
            extra += take;
            budget -= take * w;
            if take < avail {
                // Fractional remainder only rounds down, so stop here.
                break;
            }
        }
        self.current.len() + extra as usize
    }

    fn go(&mut self, i: usize, budget: u64) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if i == self.sets.len() || self.bound(i, budget) <= self.best.len() {
            return;
        }
        let s = self.sets[i];
        let w = self.weight[i];
        if w <= budget && self.grower.try_add(&self.current, s) {
            self.current.push(s);
            self.go(i + 1, budget - w);
            self.current.pop();
            self.grower.remove(s);
        }
        self.go(i + 1, budget);
    }
}

/// `La(n, P)`: the largest `P`-free family in `2^[n]`, with a witness.
///
/// Small `n` uses branch-and-bound over canonical order, pruned by the
/// Lubell budget `|P| − 1` (a `P`-free family has no chain of `|P|` sets,
/// being free of every poset of that size). Chains with larger `n` go
/// through [`max_ct_free`] on the full lattice.
pub fn la_exact(n: u32, pattern: &Poset) -> Result<ExtremalResult> {
    la_exact_capped(n, pattern, LA_SEARCH_CAP)
}

/// [`la_exact`] with the branch-and-bound ground-set limit replaced by
/// `search_cap`; the search is exponential in `2^n`.
pub fn la_exact_capped(n: u32, pattern: &Poset, search_cap: u32) -> Result<ExtremalResult> {
    if pattern.is_empty() {
        return Err(Error::InvalidParameter(String::from("pattern must be non-empty")));
    }
    if pattern.len() == 1 {
        return Ok(ExtremalResult {
            value: 0,
            witness: SetFamily::empty(n),
            method: Method::Brute,
        });
    }
    let chain = is_chain_pattern(pattern);
    if n > search_cap {
        if chain && n <= LA_FLOW_CAP {
            return max_ct_free(&SetFamily::full(n)?, pattern.len());
        }
        let limit = if chain { LA_FLOW_CAP.max(search_cap) } else { search_cap };
        return Err(Error::capacity("ground set for exact La", n as u64, limit as u64));
    }
    let full = SetFamily::full(n)?;
    let sets = full.members().to_vec();
    let layer_weight: Vec<u64> = (0..=n).map(|k| factorial_u64(k) * factorial_u64(n - k)).collect();
    let weight = sets.iter().map(|s| layer_weight[s.count_ones() as usize]).collect();
    let mut remaining = vec![vec![0u64; n as usize + 1]; sets.len() + 1];
    for i in (0..sets.len()).rev() {
        remaining[i] = remaining[i + 1].clone();
        remaining[i][sets[i].count_ones() as usize] += 1;
    }
    let mut layer_order: Vec<usize> = (0..=n as usize).collect();
    layer_order.sort_by_key(|&k| (layer_weight[k], k));
    let budget = (pattern.len() as u64 - 1) * factorial_u64(n);
    let mut search = LaSearch {
        sets,
        weight,
        remaining,
        layer_order,
        layer_weight,
        grower: Grower::new(pattern, n)?,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.go(0, budget);
    let witness = SetFamily::new(n, search.best)?;
    certify_free(pattern, &witness)?;
    Ok(ExtremalResult {
        value: witness.len(),
        witness,
        method: Method::BranchAndBound,
    })
}

/// Largest `P`-free subfamily of an explicit small family, by
/// branch-and-bound over members in canonical order.
pub fn max_pfree_subfamily(family: &SetFamily, pattern: &Poset) -> Result<ExtremalResult> {
    if family.len() > SUBFAMILY_CAP {
        return Err(Error::capacity("family size for exact search", family.len() as u64, SUBFAMILY_CAP as u64));
    }
    if pattern.is_empty() {
        return Err(Error::InvalidParameter(String::from("pattern must be non-empty")));
    }
    let probe = PatternProbe::new(pattern)?;
    let sets = family.members();
    let mut current = Vec::new();
    let mut best = Vec::new();
    fn go(i: usize, sets: &[Set], probe: &PatternProbe<'_>, current: &mut Vec<Set>, best: &mut Vec<Set>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if i == sets.len() || current.len() + (sets.len() - i) <= best.len() {
            return;
        }
        if !probe.copy_through(current, sets[i]) {
            current.push(sets[i]);
            go(i + 1, sets, probe, current, best);
            current.pop();
        }
        go(i + 1, sets, probe, current, best);
    }
    if pattern.len() > 1 {
        go(0, sets, &probe, &mut current, &mut best);
    }
    let witness = SetFamily::new(family.n(), best)?;
    certify_free(pattern, &witness)?;
    Ok(ExtremalResult {
        value: witness.len(),
        witness,
        method: Method::BranchAndBound,
    })
}

/// Number of `P`-free families in `2^[n]`, the empty family included.
///
/// Freeness is inherited by subfamilies, so every free family is reached
/// exactly once by adding sets in increasing canonical position.
pub fn count_pfree(n: u32, pattern: &Poset) -> Result<u128> {
    let cap = if is_chain_pattern(pattern) && pattern.len() == 2 {
        COUNT_ANTICHAIN_CAP
    } else {
        COUNT_CAP
    };
    count_pfree_capped(n, pattern, cap)
}

/// [`count_pfree`] with the ground-set limit replaced by `cap`. The count
/// itself is the running time, so raising the limit is rarely useful.
pub fn count_pfree_capped(n: u32, pattern: &Poset, cap: u32) -> Result<u128> {
    let mut count = 0u128;
    for_each_pfree(n, pattern, cap, |_| count += 1)?;
    Ok(count)
}

/// Every `P`-free family in `2^[n]` (the empty family first), in the
/// depth-first order of the counting search.
pub fn pfree_families(n: u32, pattern: &Poset) -> Result<Vec<SetFamily>> {
    let mut out = Vec::new();
    for_each_pfree(n, pattern, COUNT_CAP, |f| out.push(SetFamily::from_sorted(n, f.to_vec())))?;
    Ok(out)
}

/// Calls `visit` on the members of every `P`-free family, each in canonical
/// order.
pub fn for_each_pfree<F: FnMut(&[Set])>(n: u32, pattern: &Poset, cap: u32, mut visit: F) -> Result<()> {
    if n > cap.min(crate::lattice::FULL_LATTICE_CAP) {
        return Err(Error::capacity("ground set for enumeration", n as u64, cap as u64));
    }
    if pattern.is_empty() {
        return Ok(());
    }
    let sets = SetFamily::full(n)?.into_members();
    let mut grower = Grower::new(pattern, n)?;
    let mut current = Vec::new();
    fn go<F: FnMut(&[Set])>(i: usize, sets: &[Set], grower: &mut Grower<'_>, current: &mut Vec<Set>, visit: &mut F) {
        visit(current);
        for j in i..sets.len() {
            let s = sets[j];
            if grower.try_add(current, s) {
                current.push(s);
                go(j + 1, sets, grower, current, visit);
                current.pop();
                grower.remove(s);
            }
        }
    }
    go(0, &sets, &mut grower, &mut current, &mut visit);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{binomial_u128, is_subset};
    use crate::poset::{catalog, CatalogName::*};
    use proptest::prelude::*;

    fn pat(name: crate::poset::CatalogName) -> Poset {
        catalog(name).unwrap().poset
    }

    /// Weak containment by trying all injective maps.
    fn brute_contains(p: &Poset, f: &[Set]) -> bool {
        fn go(p: &Poset, f: &[Set], img: &mut Vec<Set>) -> bool {
            let v = img.len();
            if v == p.len() {
                return true;
            }
            for &s in f {
                if img.contains(&s) {
                    continue;
                }
                if (0..v).all(|u| (!p.less(u, v) || is_subset(img[u], s)) && (!p.less(v, u) || is_subset(s, img[u]))) {
                    img.push(s);
                    if go(p, f, img) {
                        return true;
                    }
                    img.pop();
                }
            }
            false
        }
        go(p, f, &mut Vec::new())
    }

    /// All subfamilies of `2^[n]` by bitmask: (largest free size, count of free).
    fn brute_la_count(n: u32, p: &Poset) -> (usize, u128) {
        let sets = SetFamily::full(n).unwrap().into_members();
        let mut best = 0;
        let mut count = 0;
        for mask in 0u64..(1u64 << sets.len()) {
            let f: Vec<Set> = (0..sets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| sets[i]).collect();
            if !brute_contains(p, &f) {
                count += 1;
                best = best.max(f.len());
            }
        }
        (best, count)
    }

    fn top_binomials(n: u32, k: usize) -> usize {
        let mut b: Vec<u128> = (0..=n as u64).map(|j| binomial_u128(n as u64, j).unwrap()).collect();
        b.sort_unstable_by(|a, c| c.cmp(a));
        b.iter().take(k).sum::<u128>() as usize
    }

    #[test]
    fn la_examples() {
        assert_eq!(la_exact(4, &pat(Chain(2))).unwrap().value, 6);
        assert_eq!(la_exact(3, &pat(Chain(3))).unwrap().value, 6);
        assert_eq!(la_exact(1, &pat(Wedge)).unwrap().value, 2);
        assert_eq!(la_exact(1, &pat(Chain(2))).unwrap().value, 1);
        assert!(la_exact(6, &pat(Wedge)).unwrap_err().is_capacity());
        assert_eq!(la_exact(8, &pat(Chain(2))).unwrap().value, 70);
    }

    #[test]
    fn la_and_count_match_brute_force() {
        for n in 0..=3 {
            for name in [Chain(2), Chain(3), Wedge, Vee, N, Diamond(2)] {
                let p = pat(name);
                let (la, count) = brute_la_count(n, &p);
                assert_eq!(la_exact(n, &p).unwrap().value, la, "La({n}, {name:?})");
                assert_eq!(count_pfree(n, &p).unwrap(), count, "count({n}, {name:?})");
            }
        }
    }

    #[test]
    fn antichain_counts() {
        let c2 = pat(Chain(2));
        let got: Vec<u128> = (0..=5).map(|n| count_pfree(n, &c2).unwrap()).collect();
        assert_eq!(got, [2, 3, 6, 20, 168, 7581]);
        assert!(count_pfree(6, &c2).unwrap_err().is_capacity());
        assert!(count_pfree(5, &pat(Wedge)).unwrap_err().is_capacity());
    }

    #[test]
    fn chain_extremal_formula() {
        for n in 1..=5 {
            for t in 2..=4 {
                assert_eq!(la_exact(n, &pat(Chain(t))).unwrap().value, top_binomials(n, t - 1));
            }
        }
        for n in 1..=8 {
            let full = SetFamily::full(n).unwrap();
            for t in 2..=5 {
                let r = max_ct_free(&full, t).unwrap();
                assert_eq!(r.value, top_binomials(n, t - 1), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(max_antichain(&SetFamily::full(3).unwrap()).unwrap().value, 3);
        let chain = SetFamily::new(5, [0, 1, 3, 7, 15]).unwrap();
        assert_eq!(max_antichain(&chain).unwrap().value, 1);
        assert_eq!(max_ct_free(&chain, 3).unwrap().value, 2);
        let layer = SetFamily::layers(5, 2, 2).unwrap();
        assert_eq!(max_ct_free(&layer, 2).unwrap().value, 10);
        assert_eq!(max_ct_free(&SetFamily::full(4).unwrap(), 3).unwrap().value, 10);
    }

    #[test]
    fn subfamily_search_matches_brute_force() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for round in 0..40 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let f = SetFamily::new(4, (0..16u64).filter(|i| state >> i & 1 == 1)).unwrap();
            let name = [Chain(2), Wedge, Yd, N][round % 4];
            let p = pat(name);
            let m = f.members();
            let brute = (0u32..1 << m.len())
                .filter_map(|mask| {
                    let sub: Vec<Set> = (0..m.len()).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
                    (!brute_contains(&p, &sub)).then_some(sub.len())
                })
                .max()
                .unwrap();
            assert_eq!(max_pfree_subfamily(&f, &p).unwrap().value, brute, "{name:?} on {f:?}");
        }
    }

    #[test]
    fn mirsky_examples() {
        assert!(mirsky_partition(&SetFamily::full(3).unwrap(), 3).is_none());
        let layer = SetFamily::layers(4, 2, 2).unwrap();
        assert_eq!(mirsky_partition(&layer, 1).unwrap(), vec![layer.clone()]);
        let parts = mirsky_partition(&SetFamily::layers(4, 1, 3).unwrap(), 3).unwrap();
        assert!(parts.iter().all(is_antichain));
    }

    fn family_strategy(n: u32, max: usize) -> impl Strategy<Value = SetFamily> {
        proptest::collection::btree_set(0u64..(1 << n), 0..max)
            .prop_map(move |s| SetFamily::new(n, s).unwrap())
    }

    fn brute_max_ct_free(f: &SetFamily, t: usize) -> usize {
        let m = f.members();
        (0u32..1 << m.len())
            .filter_map(|mask| {
                let sub: Vec<Set> = (0..m.len()).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
                let sub = SetFamily::new(f.n(), sub).unwrap();
                (longest_chain(&sub) < t).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn ct_free_matches_brute_force(f in family_strategy(5, 14), t in 2usize..5) {
            let r = max_ct_free(&f, t).unwrap();
            prop_assert_eq!(r.value, brute_max_ct_free(&f, t));
        }

        #[test]
        fn grid_and_closure_networks_agree(f in family_strategy(5, 20), t in 2usize..5) {
            let links = Containment::new(&f);
            let a = flow::k_antichain_flow(&links, t - 1);
            let b = flow::k_antichain_flow_grid(f.n(), f.members(), t - 1);
            prop_assert_eq!(a.value, b.value);
            for sol in [a, b] {
                let w = SetFamily::new(f.n(), sol.members.iter().map(|&i| f.members()[i])).unwrap();
                prop_assert_eq!(w.len(), sol.value);
                prop_assert!(longest_chain(&w) < t);
            }
        }

        #[test]
        fn antichain_is_ct2(f in family_strategy(6, 40)) {
            let a = max_antichain(&f).unwrap();
            prop_assert!(is_antichain(&a.witness));
            prop_assert_eq!(a.value, max_ct_free(&f, 2).unwrap().value);
        }

        #[test]
        fn antichain_matches_brute_force(f in family_strategy(5, 16)) {
            prop_assert_eq!(max_antichain(&f).unwrap().value, brute_max_ct_free(&f, 2));
        }

        #[test]
        fn mirsky_levels_are_antichains(f in family_strategy(6, 50)) {
            let h = longest_chain(&f);
            let parts = mirsky_partition(&f, h).unwrap();
            prop_assert_eq!(parts.len(), h);
            prop_assert!(parts.iter().all(is_antichain));
            if h > 0 {
                prop_assert!(mirsky_partition(&f, h - 1).is_none());
            }
        }
    }
}
