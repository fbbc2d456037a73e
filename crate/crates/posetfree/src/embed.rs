//! Subposet search in set families and blow-up copies of maximal width.
//!
//! Both searches are plain backtracking with deterministic candidate order:
//! members are tried in canonical order, so the first copy found is a fixed
//! function of the inputs. Blow-up copies are searched replica by replica in
//! blow-up order (root, then breadth-first), which makes the returned copy
//! the lexicographically first one in that order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::blowup::{blow_up_size_u64, BlowupShape};
use crate::error::{Error, Result};
use crate::extremal::matching::hopcroft_karp;
use crate::lattice::{is_strict_subset, is_subset, Containment, Set, SetFamily};
use crate::poset::Poset;

/// Largest pattern accepted by [`find_subposet`].
pub const SUBPOSET_CAP: usize = 12;

/// Image of every pattern element, indexed like the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub sets: Vec<Set>,
}

/// Re-checks an embedding from scratch: membership, injectivity, every
/// relation, and for induced embeddings the absence of extra containments.
pub fn verify_embedding(pattern: &Poset, family: &SetFamily, emb: &Embedding, induced: bool) -> Result<()> {
    let fail = |msg: String| Err(Error::Certificate(msg));
    if emb.sets.len() != pattern.len() {
        return fail(format!("{} images for {} elements", emb.sets.len(), pattern.len()));
    }
    if let Some(&s) = emb.sets.iter().find(|&&s| !family.contains(s)) {
        return fail(format!("image {s:#x} is not a member"));
    }
    let mut sorted = emb.sets.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return fail(String::from("images are not distinct"));
    }
    for a in 0..pattern.len() {
        for b in 0..pattern.len() {
            if a == b {
                continue;
            }
            let contained = is_subset(emb.sets[a], emb.sets[b]);
            if pattern.less(a, b) && !contained {
                return fail(format!("{} < {} not preserved", pattern.label(a), pattern.label(b)));
            }
            if induced && contained && !pattern.less(a, b) {
                return fail(format!("{} ⊆ {} has no preimage", pattern.label(a), pattern.label(b)));
            }
        }
    }
    Ok(())
}

/// Re-checks a copy of a blow-up: membership, injectivity, and every cover.
pub fn verify_blowup_embedding(shape: &BlowupShape, family: &SetFamily, sets: &[Set]) -> Result<()> {
    let fail = |msg: String| Err(Error::Certificate(msg));
    if sets.len() != shape.len() {
        return fail(format!("{} images for {} replicas", sets.len(), shape.len()));
    }
    if let Some(&s) = sets.iter().find(|&&s| !family.contains(s)) {
        return fail(format!("image {s:#x} is not a member"));
    }
    let mut sorted = sets.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return fail(String::from("images are not distinct"));
    }
    for r in 1..shape.len() {
        let p = shape.parent[r];
        let ok = if shape.upward(r) {
            is_strict_subset(sets[p], sets[r])
        } else {
            is_strict_subset(sets[r], sets[p])
        };
        if !ok {
            return fail(format!("cover at replica {} not preserved", shape.label(r)));
        }
    }
    Ok(())
}

/// Order in which pattern elements are placed: each next element has the
/// most relations to those already placed, ties to the smaller index.
fn placement_order(pattern: &Poset, first: Option<usize>) -> Vec<usize> {
    let n = pattern.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if let Some(f) = first {
        placed[f] = true;
        order.push(f);
    }
    while order.len() < n {
        let score = |v: usize| {
            let rel = order.iter().filter(|&&u| pattern.comparable(u, v)).count();
            let total = (0..n).filter(|&u| pattern.comparable(u, v)).count();
            (rel, total)
        };
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
            .expect("unplaced element exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct SubposetSearch<'a> {
    pattern: &'a Poset,
    family: &'a SetFamily,
    links: &'a Containment,
    order: Vec<usize>,
    induced: bool,
    assign: Vec<Option<u32>>,
    used: Vec<bool>,
}

impl SubposetSearch<'_> {
    fn fits(&self, v: usize, c: u32) -> bool {
        let s = self.family.members()[c as usize];
        self.order.iter().all(|&w| match self.assign[w] {
            None => true,
            Some(a) => {
                let t = self.family.members()[a as usize];
                if self.pattern.less(w, v) {
                    is_strict_subset(t, s)
                } else if self.pattern.less(v, w) {
                    is_strict_subset(s, t)
                } else {
                    !self.induced || !(is_subset(s, t) || is_subset(t, s))
                }
            }
        })
    }

    fn go(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        // Candidates come from the containment list of some placed relative.
        let anchor = self.order[..k].iter().copied().find(|&w| self.pattern.comparable(v, w));
        let cands: Vec<u32> = match anchor {
            Some(w) => {
                let a = self.assign[w].expect("placed") as usize;
                if self.pattern.less(w, v) {
                    self.links.up[a].clone()
                } else {
                    self.links.down[a].clone()
                }
            }
            None => (0..self.family.len() as u32).collect(),
        };
        for c in cands {
            if self.used[c as usize] || !self.fits(v, c) {
                continue;
            }
            self.assign[v] = Some(c);
            self.used[c as usize] = true;
            if self.go(k + 1) {
                return true;
            }
            self.used[c as usize] = false;
            self.assign[v] = None;
        }
        false
    }

    fn result(&self) -> Embedding {
        Embedding {
            sets: self
                .assign
                .iter()
                .map(|a| self.family.members()[a.expect("complete") as usize])
                .collect(),
        }
    }
}

fn subposet_search(
    pattern: &Poset,
    family: &SetFamily,
    links: &Containment,
    induced: bool,
    pinned: Option<(usize, u32)>,
) -> Option<Embedding> {
    let mut search = SubposetSearch {
        pattern,
        family,
        links,
        order: placement_order(pattern, pinned.map(|p| p.0)),
        induced,
        assign: vec![None; pattern.len()],
        used: vec![false; family.len()],
    };
    match pinned {
        None => search.go(0).then(|| search.result()),
        Some((v, c)) => {
            search.assign[v] = Some(c);
            search.used[c as usize] = true;
            search.go(1).then(|| search.result())
        }
    }
}

fn check_cap(pattern: &Poset) -> Result<()> {
    if pattern.len() > SUBPOSET_CAP {
        return Err(Error::capacity("pattern size", pattern.len() as u64, SUBPOSET_CAP as u64));
    }
    Ok(())
}

/// A (weak or induced) copy of `pattern` in `family`, or `None` after an
/// exhaustive search.
pub fn find_subposet(pattern: &Poset, family: &SetFamily, induced: bool) -> Result<Option<Embedding>> {
    check_cap(pattern)?;
    if pattern.is_empty() {
        return Ok(Some(Embedding { sets: Vec::new() }));
    }
    if family.len() < pattern.len() {
        return Ok(None);
    }
    let links = Containment::new(family);
    Ok(subposet_search(pattern, family, &links, induced, None))
}

/// A weak copy of `pattern` in `family` that uses `member`.
///
/// If `family \ {member}` is pattern-free, this decides whether `family` is.
pub fn find_subposet_using(pattern: &Poset, family: &SetFamily, member: Set) -> Result<Option<Embedding>> {
    check_cap(pattern)?;
    let c = family.position(member).ok_or(Error::NotInFamily(member))? as u32;
    if family.len() < pattern.len() {
        return Ok(None);
    }
    let links = Containment::new(family);
    for v in 0..pattern.len() {
        if let Some(e) = subposet_search(pattern, family, &links, false, Some((v, c))) {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Whether `family` contains a weak copy of `pattern`.
pub fn contains_pattern(pattern: &Poset, family: &SetFamily) -> Result<bool> {
    Ok(find_subposet(pattern, family, false)?.is_some())
}

/// Repeated "does adding this set create a copy?" queries for one pattern,
/// over plain member slices. Used by searches that grow families one set at
/// a time, where building a [`SetFamily`] per query would dominate.
pub struct PatternProbe<'a> {
    pattern: &'a Poset,
    orders: Vec<Vec<usize>>,
}

impl<'a> PatternProbe<'a> {
    pub fn new(pattern: &'a Poset) -> Result<Self> {
        check_cap(pattern)?;
        let orders = (0..pattern.len()).map(|v| placement_order(pattern, Some(v))).collect();
        Ok(PatternProbe { pattern, orders })
    }

    /// Whether `members ∪ {s}` has a weak copy through `s`; `members` must
    /// not contain `s`.
    pub fn copy_through(&self, members: &[Set], s: Set) -> bool {
        if members.len() + 1 < self.pattern.len() {
            return false;
        }
        let mut img = vec![0 as Set; self.pattern.len()];
        let mut used = vec![false; members.len()];
        (0..self.pattern.len()).any(|v| {
            img[v] = s;
            self.extend(&self.orders[v], 1, members, &mut img, &mut used)
        })
    }

    fn extend(&self, order: &[usize], k: usize, members: &[Set], img: &mut [Set], used: &mut [bool]) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for (j, &c) in members.iter().enumerate() {
            if used[j] {
                continue;
            }
            let ok = order[..k].iter().all(|&w| {
                if self.pattern.less(w, v) {
                    is_strict_subset(img[w], c)
                } else if self.pattern.less(v, w) {
                    is_strict_subset(c, img[w])
                } else {
                    true
                }
            });
            if ok {
                img[v] = c;
                used[j] = true;
                if self.extend(order, k + 1, members, img, used) {
                    used[j] = false;
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
}

struct Plan {
    shape: BlowupShape,
    feasible: Vec<Vec<bool>>,
}

/// Reusable search for blow-up copies in one family.
///
/// Containment lists are built once, so repeated queries at different widths
/// (as in [`max_blowup_t`]) share them.
pub struct BlowupSearcher<'a> {
    pattern: &'a Poset,
    root: usize,
    family: &'a SetFamily,
    links: Containment,
}

impl<'a> BlowupSearcher<'a> {
    pub fn new(pattern: &'a Poset, root: usize, family: &'a SetFamily) -> Result<Self> {
        pattern.rooted(root)?;
        Ok(BlowupSearcher {
            pattern,
            root,
            family,
            links: Containment::new(family),
        })
    }

    /// `feasible[u][i]`: member `i` can host a replica of `u` together with
    /// its whole replicated subtree as far as counting goes.
    fn feasibility(&self, shape: &BlowupShape, t: usize) -> Vec<Vec<bool>> {
        let m = self.family.len();
        let tree = &shape.tree;
        let mut feasible = vec![vec![true; m]; self.pattern.len()];
        for &u in tree.order.iter().rev() {
            let kids = &tree.children[u];
            if kids.is_empty() {
                continue;
            }
            let ups: Vec<usize> = kids.iter().copied().filter(|&c| tree.upward[c]).collect();
            let downs: Vec<usize> = kids.iter().copied().filter(|&c| !tree.upward[c]).collect();
            let mut row = vec![false; m];
            for (i, slot) in row.iter_mut().enumerate() {
                let enough = |list: &[u32], group: &[usize]| {
                    if group.is_empty() {
                        return true;
                    }
                    let mut union = 0usize;
                    for &c in group {
                        let k = list.iter().filter(|&&j| feasible[c][j as usize]).count();
                        if k < t {
                            return false;
                        }
                    }
                    for &j in list {
                        if group.iter().any(|&c| feasible[c][j as usize]) {
                            union += 1;
                        }
                    }
                    union >= t * group.len()
                };
                *slot = enough(&self.links.up[i], &ups) && enough(&self.links.down[i], &downs);
            }
            feasible[u] = row;
        }
        feasible
    }

    /// Candidate members for replica `r` once its parent holds member `p`.
    fn candidates(&self, shape: &BlowupShape, feasible: &[Vec<bool>], r: usize, p: usize) -> Vec<u32> {
        let list = if shape.upward(r) { &self.links.up[p] } else { &self.links.down[p] };
        let u = shape.origin[r];
        list.iter().copied().filter(|&j| feasible[u][j as usize]).collect()
    }

    /// Matches every leaf replica whose parent is assigned to a distinct
    /// unused member; `None` when Hall's condition fails.
    fn match_leaves(
        &self,
        shape: &BlowupShape,
        feasible: &[Vec<bool>],
        leaves: &[usize],
        assign: &[u32],
        used: &[bool],
    ) -> Option<Vec<(usize, u32)>> {
        let ready: Vec<usize> = leaves.iter().copied().filter(|&r| assign[shape.parent[r]] != u32::MAX).collect();
        if ready.is_empty() {
            return Some(Vec::new());
        }
        let adj: Vec<Vec<u32>> = ready
            .iter()
            .map(|&r| {
                let mut c = self.candidates(shape, feasible, r, assign[shape.parent[r]] as usize);
                c.retain(|&j| !used[j as usize]);
                c
            })
            .collect();
        let m = hopcroft_karp(&adj, self.family.len());
        (m.size == ready.len()).then(|| ready.iter().zip(m.pair_left).map(|(&r, j)| (r, j)).collect())
    }

    /// The first copy of `P(x, t)` in blow-up order, if any.
    ///
    /// Replicas with children are placed by backtracking in blow-up order;
    /// leaf replicas are then assigned by bipartite matching, which also
    /// prunes every partial placement whose leaves cannot all be served.
    pub fn find(&self, t: usize) -> Result<Option<Vec<Set>>> {
        match self.prepare(t)? {
            None => Ok(None),
            Some(plan) => {
                let roots: Vec<u32> = (0..self.family.len() as u32)
                    .filter(|&i| plan.feasible[self.root][i as usize])
                    .collect();
                Ok(self.search(&plan, &roots))
            }
        }
    }

    /// The first copy of `P(x, t)` whose root replica is `root_set`.
    pub fn find_rooted(&self, t: usize, root_set: Set) -> Result<Option<Vec<Set>>> {
        let Some(i) = self.family.position(root_set) else {
            return Err(Error::NotInFamily(root_set));
        };
        match self.prepare(t)? {
            None => Ok(None),
            Some(plan) if !plan.feasible[self.root][i] => Ok(None),
            Some(plan) => Ok(self.search(&plan, &[i as u32])),
        }
    }

    /// For every member, whether it is the root of some copy of `P(x, t)`.
    pub fn roots(&self, t: usize) -> Result<Vec<bool>> {
        let m = self.family.len();
        let Some(plan) = self.prepare(t)? else {
            return Ok(vec![false; m]);
        };
        Ok((0..m as u32)
            .map(|i| plan.feasible[self.root][i as usize] && self.search(&plan, &[i]).is_some())
            .collect())
    }

    fn prepare(&self, t: usize) -> Result<Option<Plan>> {
        if t == 0 {
            return Err(Error::InvalidParameter(String::from("blow-up width must be at least 1")));
        }
        let size = blow_up_size_u64(self.pattern, self.root, t)?;
        if size > self.family.len() as u64 {
            return Ok(None);
        }
        let shape = BlowupShape::new(self.pattern, self.root, t)?;
        let feasible = self.feasibility(&shape, t);
        Ok(Some(Plan { shape, feasible }))
    }

    fn search(&self, plan: &Plan, root_cands: &[u32]) -> Option<Vec<Set>> {
        let (shape, feasible) = (&plan.shape, &plan.feasible);
        let m = self.family.len();
        let is_leaf = |r: usize| r > 0 && shape.tree.children[shape.origin[r]].is_empty();
        let inner: Vec<usize> = (0..shape.len()).filter(|&r| !is_leaf(r)).collect();
        let leaves: Vec<usize> = (0..shape.len()).filter(|&r| is_leaf(r)).collect();
        let k_len = inner.len();
        let mut cands: Vec<Vec<u32>> = vec![Vec::new(); k_len];
        let mut cursor = vec![0usize; k_len];
        let mut assign = vec![u32::MAX; shape.len()];
        let mut used = vec![false; m];
        let mut k = 0usize;
        let mut fresh = true;
        loop {
            if k == k_len {
                let leaf_sets = self
                    .match_leaves(shape, feasible, &leaves, &assign, &used)
                    .expect("checked at the last placement");
                for (r, j) in leaf_sets {
                    assign[r] = j;
                }
                // Siblings are interchangeable: list each leaf group increasing.
                let mut i = 0;
                while i < leaves.len() {
                    let mut e = i;
                    while e < leaves.len() && shape.parent[leaves[e]] == shape.parent[leaves[i]]
                        && shape.origin[leaves[e]] == shape.origin[leaves[i]]
                    {
                        e += 1;
                    }
                    let mut group: Vec<u32> = leaves[i..e].iter().map(|&r| assign[r]).collect();
                    group.sort_unstable();
                    for (&r, j) in leaves[i..e].iter().zip(group) {
                        assign[r] = j;
                    }
                    i = e;
                }
                let fam = self.family.members();
                return Some(assign.iter().map(|&i| fam[i as usize]).collect());
            }
            let r = inner[k];
            if fresh {
                cands[k] = if r == 0 {
                    root_cands.to_vec()
                } else {
                    self.candidates(shape, feasible, r, assign[shape.parent[r]] as usize)
                };
                cursor[k] = 0;
                // Siblings in a group are interchangeable: keep them increasing.
                if k > 0 && shape.parent[inner[k - 1]] == shape.parent[r] && shape.origin[inner[k - 1]] == shape.origin[r] {
                    let prev = assign[inner[k - 1]];
                    cursor[k] = cands[k].partition_point(|&j| j <= prev);
                }
                fresh = false;
            }
            // Slots of the group still to fill after this one.
            let left_in_group = if r == 0 {
                0
            } else {
                let idx = *shape.path[r].last().expect("non-root") as usize;
                shape.d - idx
            };
            let mut placed = false;
            while cursor[k] < cands[k].len() {
                if cands[k].len() - cursor[k] <= left_in_group {
                    cursor[k] = cands[k].len();
                    break;
                }
                let c = cands[k][cursor[k]];
                cursor[k] += 1;
                if used[c as usize] {
                    continue;
                }
                assign[r] = c;
                used[c as usize] = true;
                if self.match_leaves(shape, feasible, &leaves, &assign, &used).is_some() {
                    placed = true;
                    break;
                }
                used[c as usize] = false;
                assign[r] = u32::MAX;
            }
            if placed {
                k += 1;
                fresh = true;
            } else {
                if k == 0 {
                    return None;
                }
                k -= 1;
                let r = inner[k];
                used[assign[r] as usize] = false;
                assign[r] = u32::MAX;
            }
        }
    }

    /// Largest `t ≤ t_cap` admitting a copy, with the first copy at that `t`.
    ///
    /// Widths are tried upward and the search stops at the first failure;
    /// success is monotone in `t`, so this certifies maximality.
    pub fn max_t(&self, t_cap: usize) -> Result<(usize, Option<Vec<Set>>)> {
        let mut best = (0, None);
        for t in 1..=t_cap {
            match self.find(t)? {
                Some(copy) => best = (t, Some(copy)),
                None => break,
            }
        }
        Ok(best)
    }
}

/// The first copy of `P(x, t)` in `family`, or `None`.
pub fn find_blowup_copy(pattern: &Poset, root: usize, t: usize, family: &SetFamily) -> Result<Option<Vec<Set>>> {
    BlowupSearcher::new(pattern, root, family)?.find(t)
}

/// Largest `t ≤ t_cap` with a copy of `P(x, t)` in `family`; `(0, None)`
/// when not even the pattern itself embeds.
pub fn max_blowup_t(
    pattern: &Poset,
    root: usize,
    family: &SetFamily,
    t_cap: usize,
) -> Result<(usize, Option<Vec<Set>>)> {
    BlowupSearcher::new(pattern, root, family)?.max_t(t_cap)
}
