//! Fingerprints and containers for `P`-free families.
//!
//! Starting from the whole lattice `G`, each step takes the widest copy of
//! `P(x, t)` still in `G` (the first one found by the blow-up search). A
//! root outside `F` is deleted. A root in `F` with `t` at least the threshold
//! starts the subphases: walk the pattern in `O_P` order, scan the group of
//! `t` replicas under the already chosen parent in canonical order, move the
//! first member of `F` to the fingerprint `H` and delete everything scanned,
//! or delete the whole group and end the step. Below the threshold the run
//! stops and the remaining `G` becomes the container body `f(H)`.
//!
//! Every query "is this set in `F`?" concerns a set still in `G`, and such a
//! set is in `F` exactly when the run puts it into `H`. Replaying with `H`
//! as the oracle therefore repeats the run step for step.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::blowup::BlowupShape;
use crate::embed::{find_subposet, BlowupSearcher, SUBPOSET_CAP};
use crate::error::{Error, Result};
use crate::lattice::{binomial, canonical_key, central_binomial, Set, SetFamily};
use crate::poset::Poset;

/// Largest ground set for container runs over the full lattice.
pub const CONTAINER_CAP: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// The root was outside `F` and was deleted.
    RootDeleted,
    /// Subphases ran; `failed_subphase` names the group with no member of `F`.
    Subphases,
    /// Root in `F` below the threshold: it joins `H` and the run stops.
    Terminal,
    /// Root outside `F` below the threshold: the run stops with `G` intact.
    BelowThreshold,
    /// `G` holds no copy of the pattern at all.
    NoCopy,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::RootDeleted => "root-deleted",
            StepKind::Subphases => "subphases",
            StepKind::Terminal => "terminal",
            StepKind::BelowThreshold => "below-threshold",
            StepKind::NoCopy => "no-copy",
        }
    }
}

/// One step of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// 1 for a single-stage run or the first stage, 2 for the second.
    pub stage: u8,
    /// Width of the chosen copy (0 for [`StepKind::NoCopy`]).
    pub t: usize,
    /// The chosen copy in replica order.
    pub copy: Vec<Set>,
    pub kind: StepKind,
    /// Sets moved into the fingerprint, in order.
    pub added: Vec<Set>,
    /// Sets removed from `G`, in order (includes `added`).
    pub deleted: Vec<Set>,
    /// 1-based position in `O_P` of the subphase whose group missed `F`.
    pub failed_subphase: Option<usize>,
}

/// Outcome of a single- or two-stage run.
#[derive(Debug, Clone, PartialEq)]
pub struct ContainerRun {
    pub n: u32,
    pub pattern: Poset,
    pub root: usize,
    /// `[t*]`, or `[t1, t2]` for two stages.
    pub thresholds: Vec<usize>,
    /// `H`, or `H₁, H₂`.
    pub fingerprints: Vec<SetFamily>,
    /// `f(H)`, or `f(H₁), g(H₁ ∪ H₂)`.
    pub residues: Vec<SetFamily>,
    pub trace: Vec<Step>,
}

impl ContainerRun {
    /// `H ∪ f(H)`, or `H₁ ∪ H₂ ∪ g(H₁ ∪ H₂)`.
    pub fn container(&self) -> SetFamily {
        let mut out = self.residues.last().cloned().unwrap_or_else(|| SetFamily::empty(self.n));
        for h in &self.fingerprints {
            out = out.union(h);
        }
        out
    }

    /// Union of all fingerprints.
    pub fn fingerprint(&self) -> SetFamily {
        let mut out = SetFamily::empty(self.n);
        for h in &self.fingerprints {
            out = out.union(h);
        }
        out
    }
}

struct LoopOut {
    added: Vec<Set>,
    residue: SetFamily,
    steps: Vec<Step>,
}

fn check_inputs(pattern: &Poset, root: usize, n: u32) -> Result<()> {
    if n > CONTAINER_CAP {
        return Err(Error::capacity("ground set for containers", n as u64, CONTAINER_CAP as u64));
    }
    if pattern.len() > SUBPOSET_CAP {
        return Err(Error::capacity("pattern size", pattern.len() as u64, SUBPOSET_CAP as u64));
    }
    if root >= pattern.len() {
        return Err(Error::UnknownElement(format!("#{root}")));
    }
    pattern.rooted(root)?;
    Ok(())
}

fn check_free(family: &SetFamily, pattern: &Poset) -> Result<()> {
    if find_subposet(pattern, family, false)?.is_some() {
        return Err(Error::NotPatternFree);
    }
    Ok(())
}

/// The container loop on `start` with `in_f` answering membership queries.
fn run_loop(
    pattern: &Poset,
    root: usize,
    start: &SetFamily,
    threshold: usize,
    stage: u8,
    in_f: &dyn Fn(Set) -> bool,
) -> Result<LoopOut> {
    let n = start.n();
    let tree = pattern.rooted(root)?;
    let mut alive = vec![false; 1usize << n];
    for s in start.iter() {
        alive[s as usize] = true;
    }
    // `G` in canonical order; rebuilt after each step from `alive`.
    let mut g: Vec<Set> = start.members().to_vec();
    let mut added_all = Vec::new();
    let mut steps = Vec::new();
    // `G` only shrinks, so the widest copy never widens.
    let mut t_cap = start.len();
    loop {
        let fam = SetFamily::new(n, g.iter().copied())?;
        let searcher = BlowupSearcher::new(pattern, root, &fam)?;
        let (t, copy) = searcher.max_t(t_cap)?;
        t_cap = t;
        let Some(copy) = copy else {
            steps.push(Step {
                stage,
                t: 0,
                copy: Vec::new(),
                kind: StepKind::NoCopy,
                added: Vec::new(),
                deleted: Vec::new(),
                failed_subphase: None,
            });
            break;
        };
        let x1 = copy[0];
        let root_in = in_f(x1);
        let mut step = Step {
            stage,
            t,
            copy: Vec::new(),
            kind: StepKind::RootDeleted,
            added: Vec::new(),
            deleted: Vec::new(),
            failed_subphase: None,
        };
        if t < threshold {
            if root_in {
                step.kind = StepKind::Terminal;
                step.added.push(x1);
                step.deleted.push(x1);
            } else {
                step.kind = StepKind::BelowThreshold;
            }
        } else if !root_in {
            step.deleted.push(x1);
        } else {
            step.kind = StepKind::Subphases;
            step.added.push(x1);
            step.deleted.push(x1);
            let shape = BlowupShape::new(pattern, root, t)?;
            let mut chosen = vec![usize::MAX; pattern.len()];
            chosen[root] = 0;
            for (j, &y) in tree.order.iter().enumerate().skip(1) {
                let mut group: Vec<(Set, usize)> = shape
                    .group(chosen[tree.parent[y]], y)
                    .into_iter()
                    .map(|r| (copy[r], r))
                    .collect();
                group.sort_by_key(|&(s, _)| canonical_key(s));
                match group.iter().position(|&(s, _)| in_f(s)) {
                    None => {
                        step.deleted.extend(group.iter().map(|&(s, _)| s));
                        step.failed_subphase = Some(j + 1);
                        break;
                    }
                    Some(k) => {
                        step.deleted.extend(group[..=k].iter().map(|&(s, _)| s));
                        step.added.push(group[k].0);
                        chosen[y] = group[k].1;
                    }
                }
            }
        }
        step.copy = copy;
        for &s in &step.deleted {
            alive[s as usize] = false;
        }
        added_all.extend_from_slice(&step.added);
        let stop = matches!(step.kind, StepKind::Terminal | StepKind::BelowThreshold);
        steps.push(step);
        g.retain(|&s| alive[s as usize]);
        if stop {
            break;
        }
    }
    Ok(LoopOut {
        added: added_all,
        residue: SetFamily::new(n, g)?,
        steps,
    })
}

/// Fingerprint and container of a `P`-free family, one threshold.
pub fn run_single_stage(family: &SetFamily, pattern: &Poset, root: usize, t_star: usize) -> Result<ContainerRun> {
    let n = family.n();
    check_inputs(pattern, root, n)?;
    if t_star < 2 {
        return Err(Error::InvalidParameter(String::from("threshold must be at least 2")));
    }
    check_free(family, pattern)?;
    let out = run_loop(pattern, root, &SetFamily::full(n)?, t_star, 1, &|s| family.contains(s))?;
    Ok(ContainerRun {
        n,
        pattern: pattern.clone(),
        root,
        thresholds: vec![t_star],
        fingerprints: vec![SetFamily::new(n, out.added)?],
        residues: vec![out.residue],
        trace: out.steps,
    })
}

fn replay_stage(
    pattern: &Poset,
    root: usize,
    start: &SetFamily,
    h: &SetFamily,
    threshold: usize,
    stage: u8,
) -> Result<LoopOut> {
    let out = run_loop(pattern, root, start, threshold, stage, &|s| h.contains(s))?;
    if out.added.len() != h.len() {
        let missing: Vec<String> = h
            .iter()
            .filter(|s| !out.added.contains(s))
            .map(|s| format!("{s:#x}"))
            .collect();
        return Err(Error::InconsistentFingerprint(format!(
            "stage {stage} never selects {}",
            missing.join(", ")
        )));
    }
    Ok(out)
}

/// Rebuilds `f(H)` from the fingerprint alone.
pub fn replay_single_stage(h: &SetFamily, pattern: &Poset, root: usize, t_star: usize) -> Result<SetFamily> {
    let n = h.n();
    check_inputs(pattern, root, n)?;
    if t_star < 2 {
        return Err(Error::InvalidParameter(String::from("threshold must be at least 2")));
    }
    Ok(replay_stage(pattern, root, &SetFamily::full(n)?, h, t_star, 1)?.residue)
}

/// Two thresholds `t1 > t2`: the second stage restarts from `f(H₁)`.
pub fn run_two_stage(family: &SetFamily, pattern: &Poset, root: usize, t1: usize, t2: usize) -> Result<ContainerRun> {
    let n = family.n();
    check_inputs(pattern, root, n)?;
    if !(t1 > t2 && t2 >= 2) {
        return Err(Error::InvalidParameter(String::from("thresholds need t1 > t2 ≥ 2")));
    }
    check_free(family, pattern)?;
    let in_f = |s: Set| family.contains(s);
    let first = run_loop(pattern, root, &SetFamily::full(n)?, t1, 1, &in_f)?;
    let second = run_loop(pattern, root, &first.residue, t2, 2, &in_f)?;
    let mut trace = first.steps;
    trace.extend(second.steps);
    Ok(ContainerRun {
        n,
        pattern: pattern.clone(),
        root,
        thresholds: vec![t1, t2],
        fingerprints: vec![SetFamily::new(n, first.added)?, SetFamily::new(n, second.added)?],
        residues: vec![first.residue, second.residue],
        trace,
    })
}

/// Rebuilds `(f(H₁), g(H₁ ∪ H₂))` from the two fingerprints.
pub fn replay_two_stage(
    h1: &SetFamily,
    h2: &SetFamily,
    pattern: &Poset,
    root: usize,
    t1: usize,
    t2: usize,
) -> Result<(SetFamily, SetFamily)> {
    let n = h1.n();
    check_inputs(pattern, root, n)?;
    if h2.n() != n {
        return Err(Error::InvalidParameter(String::from("fingerprints over different ground sets")));
    }
    if !(t1 > t2 && t2 >= 2) {
        return Err(Error::InvalidParameter(String::from("thresholds need t1 > t2 ≥ 2")));
    }
    let first = replay_stage(pattern, root, &SetFamily::full(n)?, h1, t1, 1)?;
    let second = replay_stage(pattern, root, &first.residue, h2, t2, 2)?;
    Ok((first.residue, second.residue))
}

fn fail(what: String) -> Result<()> {
    Err(Error::Certificate(what))
}

fn no_copy_at(pattern: &Poset, root: usize, family: &SetFamily, t: usize) -> Result<bool> {
    Ok(BlowupSearcher::new(pattern, root, family)?.find(t)?.is_none())
}

/// `(|P| − 1) · total / t + 1`, the fingerprint size bound.
fn fingerprint_limit(pattern: &Poset, total: usize, t: usize) -> usize {
    (pattern.len() - 1) * total / t + 1
}

fn check_steps(run: &ContainerRun, family: &SetFamily) -> Result<()> {
    for (i, step) in run.trace.iter().enumerate() {
        if step.added.iter().any(|&s| !family.contains(s)) {
            return fail(format!("step {i} adds a set outside the family"));
        }
        if step.kind == StepKind::Subphases {
            if step.deleted.len() < step.t || step.added.len() + 1 > run.pattern.len() {
                return fail(format!(
                    "step {i} deletes {} and adds {} at width {}",
                    step.deleted.len(),
                    step.added.len(),
                    step.t
                ));
            }
            if step.failed_subphase.is_none() {
                return fail(format!("step {i} completed a copy of the pattern inside the family"));
            }
        }
    }
    Ok(())
}

/// Independent check of every invariant of a run against its input.
pub fn verify_run(run: &ContainerRun, family: &SetFamily) -> Result<()> {
    let total = 1usize << run.n;
    check_steps(run, family)?;
    let in_fp = run.fingerprint();
    if !in_fp.is_subfamily_of(family) {
        return fail(String::from("fingerprint is not inside the family"));
    }
    if !family.is_subfamily_of(&run.container()) {
        return fail(String::from("family is not inside its container"));
    }
    match run.thresholds[..] {
        [t_star] => {
            let (h, f) = (&run.fingerprints[0], &run.residues[0]);
            if !h.is_disjoint_from(f) {
                return fail(String::from("fingerprint meets f(H)"));
            }
            if h.len() > fingerprint_limit(&run.pattern, total, t_star) {
                return fail(format!("fingerprint has {} sets", h.len()));
            }
            if !no_copy_at(&run.pattern, run.root, f, t_star)? {
                return fail(format!("f(H) contains a blow-up of width {t_star}"));
            }
            if replay_single_stage(h, &run.pattern, run.root, t_star)? != *f {
                return fail(String::from("replay of H differs from f(H)"));
            }
        }
        [t1, t2] => {
            let (h1, h2) = (&run.fingerprints[0], &run.fingerprints[1]);
            let (f1, g) = (&run.residues[0], &run.residues[1]);
            if !h1.is_disjoint_from(h2) {
                return fail(String::from("H₁ meets H₂"));
            }
            if !h2.is_subfamily_of(f1) {
                return fail(String::from("H₂ is not inside f(H₁)"));
            }
            if !in_fp.is_disjoint_from(g) {
                return fail(String::from("fingerprints meet g"));
            }
            if !g.is_subfamily_of(f1) {
                return fail(String::from("g is not inside f(H₁)"));
            }
            if h1.len() > fingerprint_limit(&run.pattern, total, t1) {
                return fail(format!("H₁ has {} sets", h1.len()));
            }
            if h2.len() > fingerprint_limit(&run.pattern, f1.len(), t2) {
                return fail(format!("H₂ has {} sets", h2.len()));
            }
            if !no_copy_at(&run.pattern, run.root, f1, t1)? {
                return fail(format!("f(H₁) contains a blow-up of width {t1}"));
            }
            if !no_copy_at(&run.pattern, run.root, g, t2)? {
                return fail(format!("g contains a blow-up of width {t2}"));
            }
            let (rf, rg) = replay_two_stage(h1, h2, &run.pattern, run.root, t1, t2)?;
            if rf != *f1 || rg != *g {
                return fail(String::from("replay of H₁, H₂ differs from the run"));
            }
        }
        _ => return fail(String::from("a run has one or two thresholds")),
    }
    Ok(())
}

/// One distinct container in a census.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusEntry {
    pub fingerprint: SetFamily,
    pub container: SetFamily,
    /// Input families that produced this fingerprint.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContainerCensus {
    pub n: u32,
    pub t_star: usize,
    pub families: usize,
    /// Sorted by fingerprint.
    pub entries: Vec<CensusEntry>,
    pub max_container: usize,
    /// `C(n, ⌊n/2⌋)`.
    pub middle: BigUint,
    /// `Σ_{i ≤ |P| 2ⁿ / t*} C(2ⁿ, i)`: the number of possible fingerprints.
    pub fingerprint_bound: BigUint,
}

impl ContainerCensus {
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn within_bound(&self) -> bool {
        BigUint::from(self.entries.len()) <= self.fingerprint_bound
    }

    /// Whether some container holds `family`.
    pub fn covers(&self, family: &SetFamily) -> bool {
        self.entries.iter().any(|e| family.is_subfamily_of(&e.container))
    }
}

/// Runs the single-stage algorithm on every family of a stream and groups
/// the containers by fingerprint. Two families sharing a fingerprint with
/// different containers would contradict well-definedness and is reported
/// as a certificate failure.
pub fn container_census<I>(n: u32, pattern: &Poset, root: usize, t_star: usize, families: I) -> Result<ContainerCensus>
where
    I: IntoIterator<Item = SetFamily>,
{
    check_inputs(pattern, root, n)?;
    let mut by_fp: BTreeMap<Vec<Set>, CensusEntry> = BTreeMap::new();
    let mut count = 0usize;
    for family in families {
        if family.n() != n {
            return Err(Error::InvalidParameter(String::from("census family over a different ground set")));
        }
        let run = run_single_stage(&family, pattern, root, t_star)?;
        count += 1;
        let fp = run.fingerprints[0].clone();
        let container = run.container();
        match by_fp.get_mut(fp.members()) {
            Some(e) => {
                if e.container != container {
                    return Err(Error::Certificate(String::from("one fingerprint produced two containers")));
                }
                e.multiplicity += 1;
            }
            None => {
                by_fp.insert(
                    fp.members().to_vec(),
                    CensusEntry {
                        fingerprint: fp,
                        container,
                        multiplicity: 1,
                    },
                );
            }
        }
    }
    let entries: Vec<CensusEntry> = by_fp.into_values().collect();
    let total = 1u64 << n;
    let cap = (pattern.len() as u64 * total / t_star as u64).min(total);
    let mut bound = BigUint::zero();
    for i in 0..=cap {
        bound += binomial(total, i);
    }
    Ok(ContainerCensus {
        n,
        t_star,
        families: count,
        max_container: entries.iter().map(|e| e.container.len()).max().unwrap_or(0),
        entries,
        middle: central_binomial(n),
        fingerprint_bound: bound,
    })
}
