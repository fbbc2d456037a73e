//! Constructive supersaturation: large blow-ups inside families that exceed
//! the extremal size.
//!
//! Every finder follows the same outline. Restrict to the middle band and
//! trim to the exact size the argument starts from. Classify members by how
//! many related sets they see one level away or farther. Pick a hub of
//! maximum degree in the bipartite graph towards classified members, take
//! same-type neighbours as the first level of the blow-up and hang distinct
//! relatives from each. The asymptotic constants make `δn < 1` at any size a
//! desk can handle, so each finder runs the procedure for a requested width
//! and reports a shortfall instead of promising one.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::blowup::BlowupShape;
use crate::embed::{verify_blowup_embedding, BlowupSearcher};
use crate::error::{Error, Result};
use crate::extremal::matching::hopcroft_karp;
use crate::lattice::{binomial_u128, central_binomial, in_middle_band, is_strict_subset, middle_band, Set, SetFamily, ShadowIndex};
use crate::poset::{catalog, CatalogName, Poset};

/// Which relatives a classification counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Subsets, for patterns whose first level sits above the root.
    Down,
    /// Supersets.
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SetType {
    /// At least `εn/30` relatives one level away.
    Type1,
    /// At least `εn²/30` relatives at some distance `j ≥ 2`.
    Type2,
    Type3,
}

impl SetType {
    pub fn as_str(self) -> &'static str {
        match self {
            SetType::Type1 => "type1",
            SetType::Type2 => "type2",
            SetType::Type3 => "type3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeWitness {
    /// The relatives one level away.
    Near(Vec<Set>),
    /// The smallest qualifying distance and its relatives.
    Far { j: u32, sets: Vec<Set> },
    Neither,
}

impl TypeWitness {
    pub fn sets(&self) -> &[Set] {
        match self {
            TypeWitness::Near(s) | TypeWitness::Far { sets: s, .. } => s,
            TypeWitness::Neither => &[],
        }
    }
}

/// Tags for the band part of a family; Type1 wins when both apply.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeClassification {
    pub direction: Direction,
    pub epsilon: f64,
    /// The classified (band) family.
    pub family: SetFamily,
    /// Members dropped for lying outside the middle band.
    pub dropped: usize,
    /// Aligned with `family.members()`.
    pub tags: Vec<SetType>,
    pub witnesses: Vec<TypeWitness>,
}

impl TypeClassification {
    pub fn tag_of(&self, s: Set) -> Option<SetType> {
        self.family.position(s).map(|i| self.tags[i])
    }

    pub fn witness_of(&self, s: Set) -> Option<&TypeWitness> {
        self.family.position(s).map(|i| &self.witnesses[i])
    }

    pub fn members_of(&self, ty: SetType) -> Vec<Set> {
        self.family
            .iter()
            .zip(&self.tags)
            .filter(|&(_, &t)| t == ty)
            .map(|(s, _)| s)
            .collect()
    }

    /// Members tagged Type1 or Type2.
    pub fn classified(&self) -> SetFamily {
        self.family.filter(|s| self.tag_of(s) != Some(SetType::Type3))
    }
}

fn relatives(shadows: &ShadowIndex, s: Set, direction: Direction) -> BTreeMap<u32, Vec<Set>> {
    let list = match direction {
        Direction::Down => shadows.below(s),
        Direction::Up => shadows.above(s),
    };
    let size = s.count_ones();
    let mut by_j: BTreeMap<u32, Vec<Set>> = BTreeMap::new();
    for g in list {
        by_j.entry(g.count_ones().abs_diff(size)).or_default().push(g);
    }
    by_j
}

pub fn classify_types(family: &SetFamily, epsilon: f64, direction: Direction) -> TypeClassification {
    let band = middle_band(family);
    let n = family.n() as f64;
    let shadows = ShadowIndex::new(&band);
    let mut tags = Vec::with_capacity(band.len());
    let mut witnesses = Vec::with_capacity(band.len());
    for s in band.iter() {
        let by_j = relatives(&shadows, s, direction);
        let near = by_j.get(&1).map_or(0, Vec::len);
        if 30.0 * near as f64 >= epsilon * n {
            tags.push(SetType::Type1);
            witnesses.push(TypeWitness::Near(by_j[&1].clone()));
            continue;
        }
        match by_j.iter().find(|&(&j, v)| j >= 2 && 30.0 * v.len() as f64 >= epsilon * n * n) {
            Some((&j, v)) => {
                tags.push(SetType::Type2);
                witnesses.push(TypeWitness::Far { j, sets: v.clone() });
            }
            None => {
                tags.push(SetType::Type3);
                witnesses.push(TypeWitness::Neither);
            }
        }
    }
    TypeClassification {
        direction,
        epsilon,
        dropped: family.len() - band.len(),
        family: band,
        tags,
        witnesses,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForkVariant {
    /// `∇¹ ≤ εn`, `∇^j ≤ εn²` for `j ≥ 2`; bound `(1 + 15ε) m`.
    Fork,
    /// `∇^j ≤ εn⁴` for `j ≥ 4`; bound `(4 + 400ε) m`.
    ForkPlus,
}

/// Outcome of checking one family against a fork-type size bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ForkReport {
    pub variant: ForkVariant,
    pub epsilon: f64,
    pub size: usize,
    pub middle: f64,
    pub bound: f64,
    pub in_band: bool,
    pub hypotheses_hold: bool,
    /// First member breaking a hypothesis: the set, the distance, the count.
    pub first_failure: Option<(Set, u32, usize)>,
    /// Band membership and hypotheses both hold.
    pub applicable: bool,
    pub within_bound: bool,
    /// Applicable yet over the bound: a bug or a counterexample.
    pub violation: bool,
    pub lubell_mass: f64,
    /// `max_F Σ_j ∇^j(F) / C(n − |F|, j)`: the per-chain-class mass.
    pub max_local_mass: f64,
}

fn choose_f64(n: u32, k: u32) -> f64 {
    binomial_u128(n as u64, k as u64).map_or(f64::INFINITY, |v| v as f64)
}

fn fork_check(family: &SetFamily, epsilon: f64, variant: ForkVariant) -> ForkReport {
    let n = family.n();
    let nf = n as f64;
    let shadows = ShadowIndex::new(family);
    let in_band = family.iter().all(|s| in_middle_band(n, s.count_ones()));
    let mut first_failure = None;
    let mut max_local: f64 = 0.0;
    for s in family.iter() {
        let profile = shadows.up_profile(s);
        let rest = n - s.count_ones();
        let mut local = 0.0;
        for (j, &c) in profile.iter().enumerate() {
            let j32 = j as u32;
            let count = c as usize + usize::from(j == 0);
            if count > 0 {
                local += count as f64 / choose_f64(rest, j32);
            }
            let limit = match variant {
                ForkVariant::Fork if j == 1 => Some(epsilon * nf),
                ForkVariant::Fork if j >= 2 => Some(epsilon * nf * nf),
                ForkVariant::ForkPlus if j >= 4 => Some(epsilon * libm::pow(nf, 4.0)),
                _ => None,
            };
            if first_failure.is_none() && limit.is_some_and(|l| c as f64 > l) {
                first_failure = Some((s, j32, c as usize));
            }
        }
        max_local = max_local.max(local);
    }
    let middle = choose_f64(n, n / 2);
    let bound = match variant {
        ForkVariant::Fork => (1.0 + 15.0 * epsilon) * middle,
        ForkVariant::ForkPlus => (4.0 + 400.0 * epsilon) * middle,
    };
    let lubell_mass = family.iter().map(|s| 1.0 / choose_f64(n, s.count_ones())).sum();
    let hypotheses_hold = first_failure.is_none();
    let applicable = in_band && hypotheses_hold;
    let within_bound = family.len() as f64 <= bound;
    ForkReport {
        variant,
        epsilon,
        size: family.len(),
        middle,
        bound,
        in_band,
        hypotheses_hold,
        first_failure,
        applicable,
        within_bound,
        violation: applicable && !within_bound,
        lubell_mass,
        max_local_mass: max_local,
    }
}

/// Checks the hypotheses and conclusion of the fork bound on `family`.
pub fn check_fork_bound(family: &SetFamily, epsilon: f64) -> ForkReport {
    fork_check(family, epsilon, ForkVariant::Fork)
}

/// Checks the hypotheses and conclusion of the fork⁺ bound on `family`.
pub fn check_fork_plus_bound(family: &SetFamily, epsilon: f64) -> ForkReport {
    fork_check(family, epsilon, ForkVariant::ForkPlus)
}

/// How the distinct relatives were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// One pass in canonical order, as the counting argument allows.
    Greedy,
    /// Greedy ran short; a bipartite matching found a distinct choice.
    Matching,
}

/// A blow-up found by a finder, with the data the argument used.
#[derive(Debug, Clone, PartialEq)]
pub struct SupersatWitness {
    pub pattern: Poset,
    pub root: usize,
    /// Width reached; 0 when not even the pattern was assembled.
    pub t: usize,
    pub target_t: Option<usize>,
    /// The family after band restriction and trimming.
    pub family: SetFamily,
    pub hub: Set,
    pub hub_degree: usize,
    /// Degree needed for `t` same-type neighbours to be guaranteed.
    pub degree_threshold: usize,
    /// Members of the working family with positive degree, and that degree.
    pub degrees: Vec<(Set, usize)>,
    pub neighbour_type: SetType,
    /// The sets playing the first level of the blow-up.
    pub first_level: Vec<Set>,
    /// Images in the replica order of `P(x, t)`.
    pub embedding: Vec<Set>,
    pub selection: Selection,
    /// Role exchanges made to clear containments (Y^d only).
    pub swaps: usize,
    pub shortfall: Option<String>,
    pub log: Vec<String>,
}

impl SupersatWitness {
    pub fn shape(&self) -> Result<BlowupShape> {
        BlowupShape::new(&self.pattern, self.root, self.t)
    }

    /// Independent check of the embedding against `family`.
    pub fn verify(&self, family: &SetFamily) -> Result<()> {
        if self.t == 0 {
            return if self.embedding.is_empty() {
                Ok(())
            } else {
                Err(Error::Certificate(String::from("width 0 with images")))
            };
        }
        verify_blowup_embedding(&self.shape()?, family, &self.embedding)
    }
}

fn middle_f64(n: u32) -> f64 {
    let m = central_binomial(n);
    u128::try_from(&m).map_or(f64::INFINITY, |v| v as f64)
}

/// Band restriction and trimming to `⌈coef · m⌉` members, dropping the
/// last ones in canonical order.
fn working_family(family: &SetFamily, coef: f64, what: &str, log: &mut Vec<String>) -> Result<SetFamily> {
    if !(coef.is_finite() && coef > 0.0) {
        return Err(Error::InvalidParameter(String::from("epsilon must be a small positive number")));
    }
    let band = middle_band(family);
    let need_f = libm::ceil(coef * middle_f64(family.n()));
    if (band.len() as f64) < need_f {
        return Err(Error::Precondition(format!(
            "{what} needs {need_f} band members, family has {}",
            band.len()
        )));
    }
    let need = need_f as usize;
    log.push(format!(
        "band keeps {} of {} members; trimmed to {need}",
        band.len(),
        family.len()
    ));
    Ok(band.truncate(need))
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!("epsilon {epsilon} outside (0, 1)")));
    }
    Ok(())
}

/// Picks `t` relatives per list, all distinct and outside `taken`: greedily
/// in list order, then by matching if greedy runs short. Groups come back
/// in canonical order.
fn select_distinct(lists: &[Vec<Set>], t: usize, taken: &BTreeSet<Set>) -> Option<(Vec<Vec<Set>>, Selection)> {
    let mut used = taken.clone();
    let mut out = Vec::with_capacity(lists.len());
    let mut short = false;
    for list in lists {
        let pick: Vec<Set> = list.iter().copied().filter(|s| !used.contains(s)).take(t).collect();
        if pick.len() < t {
            short = true;
            break;
        }
        used.extend(pick.iter().copied());
        out.push(pick);
    }
    if !short {
        return Some((out, Selection::Greedy));
    }
    let mut ids: BTreeMap<Set, u32> = BTreeMap::new();
    let mut right: Vec<Set> = Vec::new();
    let mut adj = Vec::with_capacity(lists.len() * t);
    for list in lists {
        let row: Vec<u32> = list
            .iter()
            .filter(|s| !taken.contains(s))
            .map(|&s| {
                *ids.entry(s).or_insert_with(|| {
                    right.push(s);
                    right.len() as u32 - 1
                })
            })
            .collect();
        for _ in 0..t {
            adj.push(row.clone());
        }
    }
    let m = hopcroft_karp(&adj, right.len());
    if m.size < adj.len() {
        return None;
    }
    let mut groups: Vec<Vec<Set>> = m
        .pair_left
        .chunks(t)
        .map(|c| c.iter().map(|&j| right[j as usize]).collect())
        .collect();
    for g in &mut groups {
        g.sort_unstable_by(crate::lattice::canonical_cmp);
    }
    Some((groups, Selection::Matching))
}

/// Images of a depth-two blow-up from per-parent child lists keyed by the
/// parent's set and the child's label.
fn assemble(
    pattern: &Poset,
    root: usize,
    t: usize,
    hub: Set,
    kids: &BTreeMap<(Set, String), Vec<Set>>,
) -> Result<Vec<Set>> {
    let shape = BlowupShape::new(pattern, root, t)?;
    let mut img = vec![hub; shape.len()];
    for r in 1..shape.len() {
        let key = (img[shape.parent[r]], String::from(pattern.label(shape.origin[r])));
        let idx = *shape.path[r].last().expect("non-root") as usize - 1;
        img[r] = *kids
            .get(&key)
            .and_then(|v| v.get(idx))
            .ok_or_else(|| Error::Certificate(format!("no image for replica {}", shape.label(r))))?;
    }
    Ok(img)
}

struct WedgeContext {
    family: SetFamily,
    class: TypeClassification,
    degrees: Vec<(Set, usize)>,
    hub: Set,
    hub_degree: usize,
    /// Hub neighbours by type, canonical order.
    near: Vec<Set>,
    far: Vec<Set>,
}

/// Degrees of every member towards the strict supersets in `upper`.
fn degrees_towards(family: &SetFamily, upper: &[Set]) -> Vec<usize> {
    let shadows = ShadowIndex::new(family);
    let mut deg = vec![0usize; family.len()];
    for &f in upper {
        for g in shadows.below(f) {
            deg[shadows.position(g).expect("member")] += 1;
        }
    }
    deg
}

fn hub_of(family: &SetFamily, deg: &[usize]) -> (Set, usize) {
    let mut best = (0usize, 0usize);
    for (i, &d) in deg.iter().enumerate() {
        if d > best.1 {
            best = (i, d);
        }
    }
    (family.members().get(best.0).copied().unwrap_or(0), best.1)
}

fn wedge_context(family: SetFamily, epsilon: f64) -> WedgeContext {
    let class = classify_types(&family, epsilon, Direction::Down);
    let family = class.family.clone();
    let upper: Vec<Set> = class.classified().into_members();
    let deg = degrees_towards(&family, &upper);
    let (hub, hub_degree) = hub_of(&family, &deg);
    let (mut near, mut far) = (Vec::new(), Vec::new());
    if hub_degree > 0 {
        for &f in &upper {
            if is_strict_subset(hub, f) {
                match class.tag_of(f) {
                    Some(SetType::Type1) => near.push(f),
                    _ => far.push(f),
                }
            }
        }
    }
    let degrees = family.iter().zip(deg).filter(|&(_, d)| d > 0).collect();
    WedgeContext {
        family,
        class,
        degrees,
        hub,
        hub_degree,
        near,
        far,
    }
}

struct WedgeCopy {
    ty: SetType,
    first: Vec<Set>,
    legs: Vec<Vec<Set>>,
    selection: Selection,
}

/// `∧(x, t)` from the hub: `t` same-type neighbours, each with `t` distinct
/// relatives drawn from its own witness list.
fn wedge_attempt(ctx: &WedgeContext, t: usize) -> Option<WedgeCopy> {
    let (ty, group) = if ctx.near.len() >= ctx.far.len() {
        (SetType::Type1, &ctx.near)
    } else {
        (SetType::Type2, &ctx.far)
    };
    if t == 0 || group.len() < t {
        return None;
    }
    let first: Vec<Set> = group[..t].to_vec();
    let mut taken: BTreeSet<Set> = first.iter().copied().collect();
    taken.insert(ctx.hub);
    let lists: Vec<Vec<Set>> = first
        .iter()
        .map(|&c| ctx.class.witness_of(c).map_or(Vec::new(), |w| w.sets().to_vec()))
        .collect();
    let (legs, selection) = select_distinct(&lists, t, &taken)?;
    Some(WedgeCopy {
        ty,
        first,
        legs,
        selection,
    })
}

fn wedge_upper_bound(ctx: &WedgeContext) -> usize {
    ctx.near.len().max(ctx.far.len())
}

/// Largest attained width: the target if reached, else the best below it.
fn best_width<T>(target: Option<usize>, upper: usize, mut attempt: impl FnMut(usize) -> Option<T>) -> (usize, Option<T>) {
    if let Some(t) = target {
        if let Some(c) = attempt(t) {
            return (t, Some(c));
        }
    }
    let top = target.map_or(upper, |t| t.saturating_sub(1).min(upper));
    for t in (1..=top).rev() {
        if let Some(c) = attempt(t) {
            return (t, Some(c));
        }
    }
    (0, None)
}

fn shortfall(target: Option<usize>, t: usize) -> Option<String> {
    match target {
        Some(want) if t < want => Some(format!("reached width {t} of the requested {want}")),
        _ => None,
    }
}

fn catalog_root(name: CatalogName) -> Result<(Poset, usize)> {
    let e = catalog(name)?;
    let root = e.root.ok_or(Error::NotATree)?;
    Ok((e.poset, root))
}

/// `∧(x, t)` in a family of at least `(1 + ε) m` band members.
pub fn find_wedge_blowup(family: &SetFamily, epsilon: f64, target_t: Option<usize>) -> Result<SupersatWitness> {
    check_epsilon(epsilon)?;
    let mut log = Vec::new();
    let work = working_family(family, 1.0 + epsilon, "the wedge finder", &mut log)?;
    let ctx = wedge_context(work, epsilon);
    log.push(format!(
        "{} of {} members are type 1 or 2; hub {:#x} has degree {}",
        ctx.class.classified().len(),
        ctx.family.len(),
        ctx.hub,
        ctx.hub_degree
    ));
    let (t, copy) = best_width(target_t, wedge_upper_bound(&ctx), |t| wedge_attempt(&ctx, t));
    let (pattern, root) = catalog_root(CatalogName::Wedge)?;
    let mut w = SupersatWitness {
        pattern,
        root,
        t,
        target_t,
        family: ctx.family.clone(),
        hub: ctx.hub,
        hub_degree: ctx.hub_degree,
        degree_threshold: 2 * t,
        degrees: ctx.degrees.clone(),
        neighbour_type: SetType::Type3,
        first_level: Vec::new(),
        embedding: Vec::new(),
        selection: Selection::Greedy,
        swaps: 0,
        shortfall: shortfall(target_t, t),
        log,
    };
    if let Some(c) = copy {
        let mut kids = BTreeMap::new();
        kids.insert((ctx.hub, String::from("c")), c.first.clone());
        for (f, leg) in c.first.iter().zip(&c.legs) {
            kids.insert((*f, String::from("a")), leg.clone());
        }
        w.embedding = assemble(&w.pattern, root, t, ctx.hub, &kids)?;
        w.neighbour_type = c.ty;
        w.first_level = c.first;
        w.selection = c.selection;
        w.log.push(format!("{} neighbours of {} used at width {t}", w.first_level.len(), c.ty.as_str()));
    }
    w.verify(&w.family)?;
    Ok(w)
}

fn count_pairs(first: &[Set], legs: &[Vec<Set>]) -> usize {
    legs.iter()
        .flatten()
        .map(|&a| first.iter().filter(|&&c| is_strict_subset(c, a)).count())
        .sum()
}

/// Exchanges a leg `A` under one first-level set with a first-level set `C`
/// it contains, until no leg contains a first-level set. Each exchange keeps
/// a valid `∧(x, t)` and strictly lowers the number of such pairs. Returns
/// the number of exchanges.
pub fn disjointify_wedge(first: &mut [Set], legs: &mut [Vec<Set>]) -> Result<usize> {
    let mut pairs = count_pairs(first, legs);
    let budget = pairs;
    let mut swaps = 0;
    while pairs > 0 {
        let hit = (0..legs.len()).find_map(|i| {
            (0..legs[i].len()).find_map(|k| {
                let a = legs[i][k];
                (0..first.len()).find(|&j| is_strict_subset(first[j], a)).map(|j| (i, k, j))
            })
        });
        let (i, k, j) = hit.expect("a pair exists while the count is positive");
        let a = legs[i][k];
        legs[i][k] = first[j];
        first[j] = a;
        swaps += 1;
        let next = count_pairs(first, legs);
        if next >= pairs || swaps > budget {
            return Err(Error::Certificate(String::from("an exchange did not reduce the containments")));
        }
        pairs = next;
    }
    Ok(swaps)
}

/// `Y^d(x, t)` in a family of at least `(2 + ε) m` band members.
pub fn find_yd_blowup(family: &SetFamily, epsilon: f64, target_t: Option<usize>) -> Result<SupersatWitness> {
    check_epsilon(epsilon)?;
    let mut log = Vec::new();
    let work = working_family(family, 2.0 + epsilon, "the Y^d finder", &mut log)?;
    let up = classify_types(&work, epsilon, Direction::Up);
    let starred = up.classified();
    let need = (1.0 + epsilon / 2.0) * middle_f64(family.n());
    log.push(format!(
        "{} members have many supersets (the argument expects at least {need:.1})",
        starred.len()
    ));
    let ctx = wedge_context(starred, epsilon / 2.0);
    struct YdCopy {
        wedge_ty: SetType,
        first: Vec<Set>,
        legs: Vec<Vec<Set>>,
        tops: Vec<Vec<Set>>,
        swaps: usize,
        mixed: bool,
        selection: Selection,
    }
    let attempt = |t: usize| -> Option<YdCopy> {
        let w = wedge_attempt(&ctx, 2 * t)?;
        // Mono-type the first level by superset type before exchanging roles.
        let (mut ones, mut twos) = (Vec::new(), Vec::new());
        for i in 0..w.first.len() {
            match up.tag_of(w.first[i]) {
                Some(SetType::Type1) => ones.push(i),
                _ => twos.push(i),
            }
        }
        let keep = if ones.len() >= twos.len() { ones } else { twos };
        if keep.len() < t {
            return None;
        }
        let mut first: Vec<Set> = keep[..t].iter().map(|&i| w.first[i]).collect();
        let mut legs: Vec<Vec<Set>> = keep[..t].iter().map(|&i| w.legs[i][..t].to_vec()).collect();
        let swaps = disjointify_wedge(&mut first, &mut legs).ok()?;
        let types: BTreeSet<Option<SetType>> = first.iter().map(|&c| up.tag_of(c)).collect();
        let mut taken: BTreeSet<Set> = first.iter().copied().chain(legs.iter().flatten().copied()).collect();
        taken.insert(ctx.hub);
        let lists: Vec<Vec<Set>> = first
            .iter()
            .map(|&c| up.witness_of(c).map_or(Vec::new(), |w| w.sets().to_vec()))
            .collect();
        let (tops, selection) = select_distinct(&lists, t, &taken)?;
        Some(YdCopy {
            wedge_ty: w.ty,
            first,
            legs,
            tops,
            swaps,
            mixed: types.len() > 1,
            selection: if selection == Selection::Matching || w.selection == Selection::Matching {
                Selection::Matching
            } else {
                Selection::Greedy
            },
        })
    };
    let upper = wedge_upper_bound(&ctx) / 2;
    let (t, copy) = best_width(target_t, upper, attempt);
    let (pattern, root) = catalog_root(CatalogName::Yd)?;
    let mut w = SupersatWitness {
        pattern,
        root,
        t,
        target_t,
        family: work,
        hub: ctx.hub,
        hub_degree: ctx.hub_degree,
        degree_threshold: 4 * t,
        degrees: ctx.degrees.clone(),
        neighbour_type: SetType::Type3,
        first_level: Vec::new(),
        embedding: Vec::new(),
        selection: Selection::Greedy,
        swaps: 0,
        shortfall: shortfall(target_t, t),
        log,
    };
    if let Some(c) = copy {
        let mut kids = BTreeMap::new();
        kids.insert((ctx.hub, String::from("c")), c.first.clone());
        for i in 0..c.first.len() {
            kids.insert((c.first[i], String::from("a")), c.legs[i].clone());
            kids.insert((c.first[i], String::from("d")), c.tops[i].clone());
        }
        w.embedding = assemble(&w.pattern, root, t, ctx.hub, &kids)?;
        w.neighbour_type = c.wedge_ty;
        w.first_level = c.first;
        w.swaps = c.swaps;
        w.selection = c.selection;
        w.log.push(format!("wedge of width {} halved to {t}; {} exchanges", 2 * t, c.swaps));
        if c.mixed {
            w.log.push(String::from("exchanges mixed superset types; each set used its own type"));
        }
    }
    w.verify(&w.family)?;
    Ok(w)
}

/// Sizes after one filter step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterStep {
    pub name: &'static str,
    /// Sets removed from the two copies in this step.
    pub removed: Vec<Set>,
    pub b: usize,
    /// Smallest leg of the lower copy per first-level set.
    pub per_b: usize,
    pub d: usize,
    /// Smallest leg of the upper copy per first-level set.
    pub per_d: usize,
}

/// The counting behind the third step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestroyedCount {
    /// `|G_b|` entering the step.
    pub candidates: usize,
    /// `|E(G_b)|` per candidate entering the step.
    pub per_b: usize,
    /// `|G_e ∪ G_f|`.
    pub upper_legs: usize,
    /// `Σ_b |E(G_b) ∩ (G_e ∪ G_f)|`.
    pub overlap: usize,
    pub destroyed: usize,
    /// `|G_e ∪ G_f| < (99/100)² |G_b| |E(G_b)|`, under which at most
    /// `99 |G_b| / 100` candidates can be destroyed.
    pub premise: bool,
    /// `100 · destroyed ≤ 99 · |G_b|`.
    pub bound_holds: bool,
}

/// A radius-two blow-up assembled from a lower and an upper copy at a hub.
#[derive(Debug, Clone, PartialEq)]
pub struct SPlusAssembly {
    pub pattern: Poset,
    pub root: usize,
    pub t: usize,
    pub target_t: Option<usize>,
    pub family: SetFamily,
    /// Width of the two copies before filtering.
    pub working_width: usize,
    pub hub: Set,
    /// Members that root no lower copy at the working width.
    pub unusable_lower: usize,
    /// Members that root no upper copy at the working width.
    pub unusable_upper: usize,
    /// The lower and upper copies as found, in their replica orders.
    pub lower_copy: Vec<Set>,
    pub upper_copy: Vec<Set>,
    /// Final role families, keyed by label.
    pub roles: BTreeMap<String, Vec<Set>>,
    pub steps: Vec<FilterStep>,
    pub destroyed: Option<DestroyedCount>,
    pub embedding: Vec<Set>,
    pub shortfall: Option<String>,
    pub log: Vec<String>,
}

impl SPlusAssembly {
    pub fn verify(&self, family: &SetFamily) -> Result<()> {
        if self.t == 0 {
            return Ok(());
        }
        let shape = BlowupShape::new(&self.pattern, self.root, self.t)?;
        verify_blowup_embedding(&shape, family, &self.embedding)
    }

    /// Final lower and upper halves are disjoint and avoid the hub.
    pub fn halves_disjoint(&self) -> bool {
        let lower: BTreeSet<Set> = ["a", "b", "g"]
            .iter()
            .filter_map(|&l| self.roles.get(l))
            .flatten()
            .copied()
            .collect();
        let upper: BTreeSet<Set> = ["d", "e", "f"]
            .iter()
            .filter_map(|&l| self.roles.get(l))
            .flatten()
            .copied()
            .collect();
        lower.is_disjoint(&upper) && !lower.contains(&self.hub) && !upper.contains(&self.hub)
    }
}

/// First level plus labelled legs of a depth-two copy.
#[derive(Debug, Clone)]
struct Half {
    first: Vec<Set>,
    /// `legs[i][l]`: leg type `l` under `first[i]`.
    legs: Vec<Vec<Vec<Set>>>,
    leg_labels: Vec<&'static str>,
}

impl Half {
    fn from_copy(shape: &BlowupShape, copy: &[Set], first_label: &str, relabel: &[(&str, &'static str)]) -> Half {
        let base = &shape.base;
        let mut leg_labels: Vec<&'static str> = Vec::new();
        for &(from, to) in relabel {
            if base.index_of(from).is_some_and(|u| shape.tree.dist[u] == 2) {
                leg_labels.push(to);
            }
        }
        let mut first = Vec::new();
        let mut legs: Vec<Vec<Vec<Set>>> = Vec::new();
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        let name = |u: usize| relabel.iter().find(|&&(f, _)| f == base.label(u)).map(|&(_, t)| t);
        for r in 1..shape.len() {
            let u = shape.origin[r];
            if shape.tree.dist[u] == 1 {
                debug_assert_eq!(name(u), Some(first_label));
                slot.insert(r, first.len());
                first.push(copy[r]);
                legs.push(vec![Vec::new(); leg_labels.len()]);
            } else {
                let i = slot[&shape.parent[r]];
                let l = leg_labels.iter().position(|&x| Some(x) == name(u)).expect("labelled leg");
                legs[i][l].push(copy[r]);
            }
        }
        Half { first, legs, leg_labels }
    }

    fn truncate(&mut self, keep: usize) -> Vec<Set> {
        let mut removed = Vec::new();
        for i in keep..self.first.len() {
            removed.push(self.first[i]);
            removed.extend(self.legs[i].iter().flatten().copied());
        }
        self.first.truncate(keep);
        self.legs.truncate(keep);
        removed
    }

    /// Keeps `keep` sets of every leg, avoiding `avoid` first.
    fn thin_legs(&mut self, keep: usize, avoid: &BTreeSet<Set>) -> Option<Vec<Set>> {
        let mut removed = Vec::new();
        for branch in &mut self.legs {
            for leg in branch.iter_mut() {
                let clean: Vec<Set> = leg.iter().copied().filter(|s| !avoid.contains(s)).take(keep).collect();
                if clean.len() < keep {
                    return None;
                }
                removed.extend(leg.iter().copied().filter(|s| !clean.contains(s)));
                *leg = clean;
            }
        }
        Some(removed)
    }

    fn min_leg(&self) -> usize {
        self.legs.iter().flatten().map(Vec::len).min().unwrap_or(0)
    }

    fn all_sets(&self) -> BTreeSet<Set> {
        self.first.iter().copied().chain(self.legs.iter().flatten().flatten().copied()).collect()
    }

    fn leg_sets(&self) -> BTreeSet<Set> {
        self.legs.iter().flatten().flatten().copied().collect()
    }
}

struct FilterOutcome {
    lower: Half,
    upper: Half,
    steps: Vec<FilterStep>,
    destroyed: DestroyedCount,
    t: usize,
}

fn step_record(name: &'static str, removed: Vec<Set>, lower: &Half, upper: &Half) -> FilterStep {
    FilterStep {
        name,
        removed,
        b: lower.first.len(),
        per_b: lower.min_leg(),
        d: upper.first.len(),
        per_d: upper.min_leg(),
    }
}

/// The three filter steps on copies of even width `2s`.
///
/// Step one keeps half of `G_b` and, for each `G_d`, half of each leg,
/// removing first the sets lying in `G_b`. Step two keeps half of `G_d` and
/// half of each leg of each `G_b`, removing first the sets lying in `G_d`.
/// Step three drops every `G_b` whose legs lie at least 99/100 inside
/// `G_e ∪ G_f` and strips the overlaps from the rest.
fn filter(mut lower: Half, mut upper: Half) -> Result<FilterOutcome> {
    let s = lower.first.len() / 2;
    let fail = |m: &str| Error::Certificate(format!("filter step broke an invariant: {m}"));
    let mut steps = Vec::new();

    let mut removed = lower.truncate(s);
    let gb: BTreeSet<Set> = lower.first.iter().copied().collect();
    removed.extend(upper.thin_legs(s, &gb).ok_or_else(|| fail("upper legs meet G_b too often"))?);
    if !upper.all_sets().is_disjoint(&gb) {
        return Err(fail("G_b still meets the upper copy"));
    }
    steps.push(step_record("halve G_b", removed, &lower, &upper));

    let mut removed = upper.truncate(s);
    let gd: BTreeSet<Set> = upper.first.iter().copied().collect();
    removed.extend(lower.thin_legs(s, &gd).ok_or_else(|| fail("lower legs meet G_d too often"))?);
    if !lower.all_sets().is_disjoint(&gd) {
        return Err(fail("G_d still meets the lower copy"));
    }
    steps.push(step_record("halve G_d", removed, &lower, &upper));

    let gef = upper.leg_sets();
    let per_b = lower.legs.first().map_or(0, |b| b.iter().map(Vec::len).sum());
    let mut overlap = 0;
    let mut destroyed_idx = Vec::new();
    for (i, branch) in lower.legs.iter().enumerate() {
        let hit = branch.iter().flatten().filter(|s| gef.contains(s)).count();
        overlap += hit;
        if 100 * hit >= 99 * per_b {
            destroyed_idx.push(i);
        }
    }
    let candidates = lower.first.len();
    let premise = 10_000 * gef.len() < 99 * 99 * candidates * per_b;
    let bound_holds = 100 * destroyed_idx.len() <= 99 * candidates;
    if overlap > gef.len() {
        return Err(fail("leg families of G_b overlap"));
    }
    let need = (99 * per_b).div_ceil(100);
    if destroyed_idx.len() * need > overlap || (premise && !bound_holds) {
        return Err(fail("destroyed count exceeds the counting bound"));
    }
    let destroyed = DestroyedCount {
        candidates,
        per_b,
        upper_legs: gef.len(),
        overlap,
        destroyed: destroyed_idx.len(),
        premise,
        bound_holds,
    };
    let mut removed = Vec::new();
    let mut first = Vec::new();
    let mut legs = Vec::new();
    for i in 0..lower.first.len() {
        if destroyed_idx.contains(&i) {
            removed.push(lower.first[i]);
            removed.extend(lower.legs[i].iter().flatten().copied());
            continue;
        }
        let mut branch = lower.legs[i].clone();
        for leg in &mut branch {
            removed.extend(leg.iter().copied().filter(|s| gef.contains(s)));
            leg.retain(|s| !gef.contains(s));
        }
        first.push(lower.first[i]);
        legs.push(branch);
    }
    lower.first = first;
    lower.legs = legs;
    steps.push(step_record("drop destroyed G_b", removed, &lower, &upper));
    let t = lower.first.len().min(lower.min_leg()).min(upper.first.len()).min(upper.min_leg());
    Ok(FilterOutcome {
        lower,
        upper,
        steps,
        destroyed,
        t,
    })
}

/// `S(x, t)`, `S⁺(x, t)` or `S⁺⁺(x, t)` in a family of at least
/// `(h − 1 + ε) m` band members, from a lower and an upper copy sharing a hub.
///
/// The lower copy is a `∨` (a `Y` for `S⁺⁺`) and the upper a `Y^d` (a `∧`
/// for `S`). Copies are taken at even widths `2s` and filtered; step two
/// keeps half of `G_d` where the asymptotic argument keeps a hundredth.
pub fn find_radius2_blowup(
    name: CatalogName,
    family: &SetFamily,
    epsilon: f64,
    target_t: Option<usize>,
) -> Result<SPlusAssembly> {
    check_epsilon(epsilon)?;
    let (pattern, root) = catalog_root(name)?;
    let (lower_name, upper_name) = match name {
        CatalogName::S => (CatalogName::Vee, CatalogName::Wedge),
        CatalogName::SPlus => (CatalogName::Vee, CatalogName::Yd),
        CatalogName::SPlusPlus => (CatalogName::Y, CatalogName::Yd),
        _ => return Err(Error::InvalidParameter(String::from("radius-two finder takes S, S+ or S++"))),
    };
    // Labels of the halves renamed to the target's.
    let lower_map: &[(&str, &'static str)] = &[("c", "b"), ("a", "a"), ("d", "g")];
    let upper_map: &[(&str, &'static str)] = &[("c", "d"), ("a", "e"), ("d", "f")];
    let h = pattern.height();
    let mut log = Vec::new();
    let work = working_family(family, h as f64 - 1.0 + epsilon, "the radius-two finder", &mut log)?;
    let (lp, lr) = catalog_root(lower_name)?;
    let (up, ur) = catalog_root(upper_name)?;
    let low = BlowupSearcher::new(&lp, lr, &work)?;
    let high = BlowupSearcher::new(&up, ur, &work)?;
    struct Found {
        width: usize,
        hub: Set,
        unusable: (usize, usize),
        copies: (Vec<Set>, Vec<Set>),
        out: FilterOutcome,
    }
    let run = |width: usize| -> Result<Option<Found>> {
        let lo_roots = low.roots(width)?;
        let hi_roots = high.roots(width)?;
        let unusable = (
            lo_roots.iter().filter(|&&b| !b).count(),
            hi_roots.iter().filter(|&&b| !b).count(),
        );
        let Some(i) = (0..work.len()).find(|&i| lo_roots[i] && hi_roots[i]) else {
            return Ok(None);
        };
        let hub = work.members()[i];
        let g1 = low.find_rooted(width, hub)?.expect("root checked");
        let g2 = high.find_rooted(width, hub)?.expect("root checked");
        let l = Half::from_copy(&BlowupShape::new(&lp, lr, width)?, &g1, "b", lower_map);
        let u = Half::from_copy(&BlowupShape::new(&up, ur, width)?, &g2, "d", upper_map);
        let out = filter(l, u)?;
        Ok(Some(Found {
            width,
            hub,
            unusable,
            copies: (g1, g2),
            out,
        }))
    };
    // Widths ascend from twice the target; filtering roughly halves them.
    let mut best: Option<Found> = None;
    let mut width = 2 * target_t.unwrap_or(1).max(1);
    while width <= work.len() {
        let Some(f) = run(width)? else {
            log.push(format!("width {width}: no member roots both halves"));
            break;
        };
        log.push(format!("width {width}: hub {:#x}, filtered width {}", f.hub, f.out.t));
        let improved = best.as_ref().is_none_or(|b| f.out.t > b.out.t);
        let done = target_t.is_some_and(|t| f.out.t >= t);
        if improved {
            best = Some(f);
        }
        if done || !improved {
            break;
        }
        width += 2;
    }
    let mut a = SPlusAssembly {
        pattern,
        root,
        t: 0,
        target_t,
        family: work,
        working_width: 0,
        hub: 0,
        unusable_lower: 0,
        unusable_upper: 0,
        lower_copy: Vec::new(),
        upper_copy: Vec::new(),
        roles: BTreeMap::new(),
        steps: Vec::new(),
        destroyed: None,
        embedding: Vec::new(),
        shortfall: None,
        log,
    };
    if let Some(f) = best {
        let t = target_t.map_or(f.out.t, |want| want.min(f.out.t));
        let mut kids: BTreeMap<(Set, String), Vec<Set>> = BTreeMap::new();
        for (half, label) in [(&f.out.lower, "b"), (&f.out.upper, "d")] {
            let first: Vec<Set> = half.first[..t].to_vec();
            kids.insert((f.hub, String::from(label)), first.clone());
            a.roles.entry(String::from(label)).or_default().extend(first.iter().copied());
            for (i, &s) in first.iter().enumerate() {
                for (l, &leg_label) in half.leg_labels.iter().enumerate() {
                    let leg: Vec<Set> = half.legs[i][l][..t].to_vec();
                    a.roles.entry(String::from(leg_label)).or_default().extend(leg.iter().copied());
                    kids.insert((s, String::from(leg_label)), leg);
                }
            }
        }
        a.embedding = assemble(&a.pattern, root, t, f.hub, &kids)?;
        a.t = t;
        a.working_width = f.width;
        a.hub = f.hub;
        a.unusable_lower = f.unusable.0;
        a.unusable_upper = f.unusable.1;
        (a.lower_copy, a.upper_copy) = f.copies;
        a.steps = f.out.steps;
        a.destroyed = Some(f.out.destroyed);
        if !a.halves_disjoint() {
            return Err(Error::Certificate(String::from("filtered halves overlap")));
        }
    }
    a.shortfall = shortfall(target_t, a.t);
    a.verify(&a.family)?;
    Ok(a)
}

/// Exponents for the polynomial width target: asked for and constructed.
pub const SPECIAL_EXPONENTS: (f64, f64) = (1.9, 1.91);

/// Result of the dense finder together with its split.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialReport {
    pub witness: SupersatWitness,
    /// Members with at least `εn⁴/500` subsets at some distance `j ≥ 4`.
    pub dense: usize,
    pub sparse: usize,
    /// `ε² n⁴ / 1000`, the hub degree the argument guarantees.
    pub degree_target: f64,
    /// `n^{1.9}` and `n^{1.91}`.
    pub width_targets: (f64, f64),
}

/// `∧(x, t)` or `∨(x, t)` as large as the dense argument reaches, in a
/// family of at least `4(1 + ε) m` band members.
pub fn find_special_blowup(name: CatalogName, family: &SetFamily, epsilon: f64) -> Result<SpecialReport> {
    check_epsilon(epsilon)?;
    let flip = match name {
        CatalogName::Wedge => false,
        CatalogName::Vee => true,
        _ => return Err(Error::InvalidParameter(String::from("dense finder takes the wedge or the vee"))),
    };
    let input = if flip { family.complement() } else { family.clone() };
    let n = family.n();
    let nf = n as f64;
    let mut log = Vec::new();
    let work = working_family(&input, 4.0 * (1.0 + epsilon), "the dense finder", &mut log)?;
    let shadows = ShadowIndex::new(&work);
    let threshold = epsilon * libm::pow(nf, 4.0) / 500.0;
    let dense: Vec<Set> = work
        .iter()
        .filter(|&s| {
            shadows
                .down_profile(s)
                .iter()
                .enumerate()
                .any(|(j, &c)| j >= 4 && c as f64 >= threshold)
        })
        .collect();
    let deg = degrees_towards(&work, &dense);
    let (hub, hub_degree) = hub_of(&work, &deg);
    let neighbours: Vec<Set> = dense.iter().copied().filter(|&f| is_strict_subset(hub, f)).collect();
    log.push(format!(
        "{} dense members; hub {hub:#x} has {hub_degree} dense supersets",
        dense.len()
    ));
    let attempt = |t: usize| -> Option<(Vec<Set>, Vec<Vec<Set>>, Selection)> {
        if neighbours.len() < t {
            return None;
        }
        let first: Vec<Set> = neighbours[..t].to_vec();
        let mut taken: BTreeSet<Set> = first.iter().copied().collect();
        taken.insert(hub);
        let lists: Vec<Vec<Set>> = first.iter().map(|&c| shadows.below(c)).collect();
        let (legs, sel) = select_distinct(&lists, t, &taken)?;
        Some((first, legs, sel))
    };
    let mut t = 0;
    let mut found = None;
    while let Some(c) = attempt(t + 1) {
        t += 1;
        found = Some(c);
    }
    let (pattern, root) = catalog_root(name)?;
    let back = |s: Set| if flip { !s & crate::lattice::ground_mask(n) } else { s };
    let mut w = SupersatWitness {
        pattern,
        root,
        t,
        target_t: None,
        family: if flip { work.complement() } else { work.clone() },
        hub: back(hub),
        hub_degree,
        degree_threshold: t,
        degrees: work.iter().zip(deg).filter(|&(_, d)| d > 0).map(|(s, d)| (back(s), d)).collect(),
        neighbour_type: SetType::Type2,
        first_level: Vec::new(),
        embedding: Vec::new(),
        selection: Selection::Greedy,
        swaps: 0,
        shortfall: None,
        log,
    };
    if let Some((first, legs, sel)) = found {
        let (wedge, wroot) = catalog_root(CatalogName::Wedge)?;
        let mut kids = BTreeMap::new();
        kids.insert((hub, String::from("c")), first.clone());
        for (f, leg) in first.iter().zip(&legs) {
            kids.insert((*f, String::from("a")), leg.clone());
        }
        w.embedding = assemble(&wedge, wroot, t, hub, &kids)?.into_iter().map(back).collect();
        w.first_level = first.into_iter().map(back).collect();
        w.selection = sel;
    }
    let target = libm::pow(nf, SPECIAL_EXPONENTS.0);
    if (t as f64) < target {
        w.shortfall = Some(format!("reached width {t}; the asymptotic target n^1.9 is {target:.1}"));
    }
    w.verify(&w.family)?;
    Ok(SpecialReport {
        witness: w,
        dense: dense.len(),
        sparse: work.len() - dense.len(),
        degree_target: epsilon * epsilon * libm::pow(nf, 4.0) / 1000.0,
        width_targets: (target, libm::pow(nf, SPECIAL_EXPONENTS.1)),
    })
}

/// The asymptotic width constants of the finders, for reference output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    /// `ε² / (120 (1 + ε))` for the wedge.
    pub wedge: f64,
    /// `δ₁ / 2` with `δ₁ = ε² / (480 (1 + ε/2))` for `Y^d`.
    pub yd: f64,
    /// `min(wedge, yd)` at `ε/3`, over 200, for the radius-two posets.
    pub radius2: f64,
}

pub fn asymptotic_constants(epsilon: f64) -> AsymptoticConstants {
    let wedge = |e: f64| e * e / (120.0 * (1.0 + e));
    let yd = |e: f64| e * e / (480.0 * (1.0 + e / 2.0)) / 2.0;
    let e3 = epsilon / 3.0;
    AsymptoticConstants {
        wedge: wedge(epsilon),
        yd: yd(epsilon),
        radius2: wedge(e3).min(yd(e3)) / 200.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ground_mask;
    use proptest::prelude::*;

    #[test]
    fn antichain_is_all_type3() {
        let f = SetFamily::layers(10, 5, 5).unwrap();
        let c = classify_types(&f, 0.5, Direction::Down);
        assert!(c.tags.iter().all(|&t| t == SetType::Type3));
    }

    #[test]
    fn full_pair_of_layers_marks_upper_type1() {
        let f = SetFamily::layers(12, 5, 6).unwrap();
        let c = classify_types(&f, 0.5, Direction::Down);
        for s in f.iter().filter(|s| s.count_ones() == 6) {
            assert_eq!(c.tag_of(s), Some(SetType::Type1));
            assert_eq!(c.witness_of(s).unwrap().sets().len(), 6);
        }
        assert!(f.iter().filter(|s| s.count_ones() == 5).all(|s| c.tag_of(s) == Some(SetType::Type3)));
    }

    #[test]
    fn fork_examples() {
        let mid = SetFamily::layers(12, 6, 6).unwrap();
        let r = check_fork_bound(&mid, 0.01);
        assert!(r.applicable && r.within_bound && !r.violation);
        let thick = SetFamily::layers(12, 4, 7).unwrap();
        assert!(!check_fork_bound(&thick, 0.01).applicable);
        let four = SetFamily::layers(12, 5, 8).unwrap();
        let r = check_fork_plus_bound(&four, 0.01);
        assert!(r.applicable && r.within_bound);
        assert!(r.lubell_mass <= r.max_local_mass + 1e-9);
    }

    #[test]
    fn wedge_on_two_layers() {
        let f = SetFamily::layers(12, 5, 6).unwrap();
        let w = find_wedge_blowup(&f, 0.5, Some(3)).unwrap();
        assert_eq!(w.t, 3);
        assert!(w.hub_degree >= 6);
        w.verify(&f).unwrap();
        let free = find_wedge_blowup(&f, 0.5, None).unwrap();
        assert!(free.t >= 3);
        free.verify(&f).unwrap();
    }

    #[test]
    fn wedge_precondition() {
        let f = SetFamily::layers(10, 5, 5).unwrap();
        assert!(matches!(find_wedge_blowup(&f, 0.1, None), Err(Error::Precondition(_))));
    }

    #[test]
    fn yd_on_three_layers() {
        let f = SetFamily::layers(12, 5, 7).unwrap();
        let w = find_yd_blowup(&f, 0.5, Some(2)).unwrap();
        assert!(w.t >= 2, "{:?}", w.log);
        w.verify(&f).unwrap();
        let small = SetFamily::layers(12, 5, 6).unwrap();
        assert!(matches!(find_yd_blowup(&small, 0.5, None), Err(Error::Precondition(_))));
    }

    #[test]
    fn one_exchange_clears_a_containment() {
        // Hub ∅; first level {1,2} and {3}; leg {3,4} under a superset of it.
        let mut first = vec![0b0011, 0b0100];
        let mut legs = vec![vec![0b0001], vec![]];
        let mut first2 = vec![0b1111, 0b0100];
        let mut legs2 = vec![vec![0b1100], vec![0b0000]];
        assert_eq!(disjointify_wedge(&mut first, &mut legs).unwrap(), 0);
        assert_eq!(disjointify_wedge(&mut first2, &mut legs2).unwrap(), 1);
        assert_eq!(first2, vec![0b1111, 0b1100]);
        assert_eq!(legs2[0], vec![0b0100]);
        assert_eq!(count_pairs(&first2, &legs2), 0);
    }

    #[test]
    fn radius2_s_plus_on_four_layers() {
        let f = SetFamily::layers(14, 5, 8).unwrap();
        let a = find_radius2_blowup(CatalogName::SPlus, &f, 0.3, Some(2)).unwrap();
        assert_eq!(a.t, 2, "{:?}", a.log);
        a.verify(&f).unwrap();
        assert!(a.halves_disjoint());
        let d = a.destroyed.as_ref().unwrap();
        assert!(d.bound_holds);
    }

    #[test]
    fn radius2_s_finds_a_copy() {
        let f = SetFamily::layers(8, 3, 5).unwrap();
        let a = find_radius2_blowup(CatalogName::S, &f, 0.2, Some(1)).unwrap();
        assert!(a.t >= 1);
        a.verify(&f).unwrap();
    }

    #[test]
    fn special_on_seven_layers() {
        let f = SetFamily::layers(14, 4, 10).unwrap();
        let r = find_special_blowup(CatalogName::Wedge, &f, 0.1).unwrap();
        assert!(r.witness.t >= 4);
        r.witness.verify(&f).unwrap();
        let v = find_special_blowup(CatalogName::Vee, &f, 0.1).unwrap();
        assert!(v.witness.t >= 4);
        v.witness.verify(&f).unwrap();
        let five = SetFamily::layers(14, 5, 9).unwrap();
        assert!(matches!(find_special_blowup(CatalogName::Wedge, &five, 0.1), Err(Error::Precondition(_))));
    }

    fn permute(s: Set, perm: &[u32]) -> Set {
        (0..perm.len()).filter(|&i| s >> i & 1 == 1).fold(0, |acc, i| acc | 1 << perm[i])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn tags_survive_relabelling(bits in proptest::collection::vec(any::<bool>(), 256), seed in any::<u64>()) {
            let n = 8;
            let fam = SetFamily::new(n, (0..256u64).filter(|&s| bits[s as usize])).unwrap();
            let mut perm: Vec<u32> = (0..n).collect();
            let mut x = seed;
            for i in (1..perm.len()).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            let moved = SetFamily::new(n, fam.iter().map(|s| permute(s, &perm))).unwrap();
            for dir in [Direction::Down, Direction::Up] {
                let a = classify_types(&fam, 0.7, dir);
                let b = classify_types(&moved, 0.7, dir);
                for s in a.family.iter() {
                    prop_assert_eq!(a.tag_of(s), b.tag_of(permute(s, &perm)));
                }
            }
            prop_assert_eq!(ground_mask(n), 255);
        }

        #[test]
        fn type3_members_meet_fork_hypotheses(bits in proptest::collection::vec(any::<bool>(), 1024)) {
            let fam = SetFamily::new(10, (0..1024u64).filter(|&s| bits[s as usize])).unwrap();
            let eps = 0.9;
            let c = classify_types(&fam, eps, Direction::Up);
            let sparse = SetFamily::new(10, c.members_of(SetType::Type3)).unwrap();
            let r = check_fork_bound(&sparse, eps / 30.0);
            prop_assert!(r.hypotheses_hold);
        }
    }
}
