use posetfree::containers::{
    container_census, replay_single_stage, replay_two_stage, run_single_stage, run_two_stage, verify_run, ContainerRun,
    Step,
};
use posetfree::extremal::{la_exact, pfree_families};
use posetfree::lattice::SetFamily;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{ContainerShape, ContainersCensusArgs, ContainersReplayArgs, ContainersRunArgs, Format};
use crate::formats::{read_family, read_text, resolve_pattern, Pattern};
use crate::{json, CliError, CliResult, Ctx};

struct Resolved {
    pattern: Pattern,
    root: usize,
}

fn resolve(shape: &ContainerShape) -> CliResult<Resolved> {
    let pattern = resolve_pattern(&shape.pattern)?;
    let root = pattern.root(shape.root.as_deref())?;
    Ok(Resolved { pattern, root })
}

fn step_json(s: &Step) -> Value {
    json!({
        "stage": s.stage,
        "t": s.t,
        "kind": s.kind.as_str(),
        "copy": json::sets(&s.copy),
        "added": json::sets(&s.added),
        "deleted": json::sets(&s.deleted),
        "failed_subphase": s.failed_subphase,
    })
}

fn summary_json(run: &ContainerRun, r: &Resolved, family: &SetFamily) -> Value {
    json!({
        "summary": true,
        "n": run.n,
        "pattern": r.pattern.name,
        "root": r.pattern.poset.label(r.root),
        "thresholds": run.thresholds,
        "family_size": family.len(),
        "steps": run.trace.len(),
        "fingerprints": run.fingerprints.iter().map(json::family).collect::<Vec<_>>(),
        "residue": json::family(run.residues.last().expect("one residue per stage")),
        "container": json::family(&run.container()),
        "verified": true,
    })
}

fn one_run(shape: &ContainerShape, r: &Resolved, family: &SetFamily) -> CliResult<ContainerRun> {
    let run = match shape.t1 {
        Some(t1) => run_two_stage(family, &r.pattern.poset, r.root, t1, shape.t_star)?,
        None => run_single_stage(family, &r.pattern.poset, r.root, shape.t_star)?,
    };
    verify_run(&run, family)?;
    Ok(run)
}

pub fn run(ctx: &Ctx, a: &ContainersRunArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let r = resolve(&a.shape)?;
    if a.all_pfree {
        let n = a.n.expect("clap requires --n");
        let families = pfree_families(n, &r.pattern.poset)?;
        let lines: CliResult<Vec<String>> = ctx.pool(|| {
            families
                .par_iter()
                .map(|f| Ok(json::line(&summary_json(&one_run(&a.shape, &r, f)?, &r, f))))
                .collect()
        })?;
        return Ok(lines?.concat());
    }
    let path = a
        .family
        .as_ref()
        .ok_or_else(|| CliError::Usage(String::from("give --family or --all-pfree --n <k>")))?;
    let family = read_family(path)?;
    let run = one_run(&a.shape, &r, &family)?;
    let mut out: String = run.trace.iter().map(|s| json::line(&step_json(s))).collect();
    out.push_str(&json::line(&summary_json(&run, &r, &family)));
    Ok(out)
}

/// The `container` field of the last summary line of a saved trace.
fn traced_container(text: &str) -> CliResult<Value> {
    let mut found = None;
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let v: Value = serde_json::from_str(line).map_err(|e| CliError::Domain(format!("trace line {}: {e}", i + 1)))?;
        if v["summary"] == json!(true) {
            found = Some(v["container"].clone());
        }
    }
    found.ok_or_else(|| CliError::Domain(String::from("trace has no summary line")))
}

pub fn replay(ctx: &Ctx, a: &ContainersReplayArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let r = resolve(&a.shape)?;
    let h1 = read_family(&a.fingerprint)?;
    let (fingerprint, residue) = match (a.shape.t1, &a.fingerprint2) {
        (Some(t1), Some(p2)) => {
            let h2 = read_family(p2)?;
            let (_, g) = replay_two_stage(&h1, &h2, &r.pattern.poset, r.root, t1, a.shape.t_star)?;
            (h1.union(&h2), g)
        }
        (None, None) => {
            let g = replay_single_stage(&h1, &r.pattern.poset, r.root, a.shape.t_star)?;
            (h1, g)
        }
        _ => return Err(CliError::Usage(String::from("--t1 and --fingerprint2 go together"))),
    };
    let container = json::family(&residue.union(&fingerprint));
    let matches = match &a.check {
        Some(path) => {
            let traced = traced_container(&read_text(path)?)?;
            if traced != container {
                return Err(CliError::Domain(String::from("replayed container differs from the traced run")));
            }
            Some(true)
        }
        None => None,
    };
    Ok(json::pretty(&json!({
        "pattern": r.pattern.name,
        "root": r.pattern.poset.label(r.root),
        "fingerprint": json::family(&fingerprint),
        "residue": json::family(&residue),
        "container": container,
        "matches_trace": matches,
    })))
}

pub fn census(ctx: &Ctx, a: &ContainersCensusArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let pattern = resolve_pattern(&a.pattern)?;
    let root = pattern.root(a.root.as_deref())?;
    let families: Vec<SetFamily> = if a.all_pfree {
        pfree_families(a.n.expect("clap requires --n"), &pattern.poset)?
    } else {
        a.families.iter().map(|p| read_family(p)).collect::<CliResult<_>>()?
    };
    let n = match (a.n, families.first()) {
        (Some(n), _) => n,
        (None, Some(f)) => f.n(),
        (None, None) => return Err(CliError::Usage(String::from("give --family files or --all-pfree --n <k>"))),
    };
    let c = container_census(n, &pattern.poset, root, a.t_star, families.iter().cloned())?;
    let covers_all = families.iter().all(|f| c.covers(f));
    let la = match la_exact(n, &pattern.poset) {
        Ok(r) => Some(r.value),
        Err(e) if e.is_capacity() => None,
        Err(e) => return Err(e.into()),
    };
    let entries = a.entries.then(|| {
        c.entries
            .iter()
            .map(|e| {
                json!({
                    "fingerprint": json::family(&e.fingerprint),
                    "container_size": e.container.len(),
                    "multiplicity": e.multiplicity,
                })
            })
            .collect::<Vec<_>>()
    });
    Ok(json::pretty(&json!({
        "n": n,
        "pattern": pattern.name,
        "root": pattern.poset.label(root),
        "t_star": a.t_star,
        "families": c.families,
        "distinct_containers": c.distinct(),
        "max_container": c.max_container,
        "la": la,
        "slack": la.map(|v| c.max_container as i64 - v as i64),
        "middle": c.middle.to_string(),
        "fingerprint_bound": c.fingerprint_bound.to_string(),
        "within_bound": c.within_bound(),
        "covers_all": covers_all,
        "entries": entries,
        "runtime": ctx.runtime(),
    })))
}
