use posetfree::poset::CatalogName;
use posetfree::supersat::{
    check_fork_bound, check_fork_plus_bound, classify_types, find_radius2_blowup, find_special_blowup, find_wedge_blowup,
    find_yd_blowup, Direction, ForkReport, SPlusAssembly, Selection, SetType, SupersatWitness, TypeWitness,
};
use serde_json::{json, Map, Value};

use crate::args::{DensePattern, DirectionArg, Format, SuperCheckArgs, SuperClassifyArgs, SuperDenseArgs, SuperFindArgs, SuperPattern};
use crate::formats::read_family;
use crate::{json, CliResult, Ctx};

fn selection(s: Selection) -> &'static str {
    match s {
        Selection::Greedy => "greedy",
        Selection::Matching => "matching",
    }
}

fn embedding(pattern: &posetfree::Poset, root: usize, t: usize, sets: &[u64]) -> CliResult<Value> {
    if t == 0 {
        return Ok(Value::Array(Vec::new()));
    }
    let shape = posetfree::blowup::BlowupShape::new(pattern, root, t)?;
    Ok(json::assignment(sets.iter().enumerate().map(|(r, &s)| (shape.label(r), s))))
}

fn witness_json(w: &SupersatWitness, name: &str) -> CliResult<Value> {
    Ok(json!({
        "pattern": name,
        "t": w.t,
        "target_t": w.target_t,
        "working_size": w.family.len(),
        "hub": json::set(w.hub),
        "hub_degree": w.hub_degree,
        "degree_threshold": w.degree_threshold,
        "neighbour_type": w.neighbour_type.as_str(),
        "first_level": json::sets(&w.first_level),
        "selection": selection(w.selection),
        "swaps": w.swaps,
        "shortfall": w.shortfall,
        "verified": true,
        "embedding": embedding(&w.pattern, w.root, w.t, &w.embedding)?,
        "ledger": w.log,
    }))
}

fn assembly_ledger(a: &SPlusAssembly) -> Vec<String> {
    let mut out = a.log.clone();
    for s in &a.steps {
        out.push(format!(
            "{}: removed {}; |G_b| = {}, legs per b >= {}; |G_d| = {}, legs per d >= {}",
            s.name,
            s.removed.len(),
            s.b,
            s.per_b,
            s.d,
            s.per_d
        ));
    }
    if let Some(d) = &a.destroyed {
        out.push(format!(
            "destroyed {} of {} lower branches; overlap {} <= |G_e u G_f| = {}; premise {}, bound {}",
            d.destroyed,
            d.candidates,
            d.overlap,
            d.upper_legs,
            if d.premise { "holds" } else { "fails" },
            if d.bound_holds { "holds" } else { "fails" }
        ));
    }
    out
}

fn assembly_json(a: &SPlusAssembly, name: &str) -> CliResult<Value> {
    let roles: Map<String, Value> = a.roles.iter().map(|(k, v)| (k.clone(), json::sets(v))).collect();
    let steps: Vec<Value> = a
        .steps
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "removed": json::sets(&s.removed),
                "b": s.b,
                "per_b": s.per_b,
                "d": s.d,
                "per_d": s.per_d,
            })
        })
        .collect();
    let destroyed = a.destroyed.as_ref().map(|d| {
        json!({
            "candidates": d.candidates,
            "per_b": d.per_b,
            "upper_legs": d.upper_legs,
            "overlap": d.overlap,
            "destroyed": d.destroyed,
            "premise": d.premise,
            "bound_holds": d.bound_holds,
        })
    });
    Ok(json!({
        "pattern": name,
        "t": a.t,
        "target_t": a.target_t,
        "working_size": a.family.len(),
        "working_width": a.working_width,
        "hub": json::set(a.hub),
        "unusable_lower": a.unusable_lower,
        "unusable_upper": a.unusable_upper,
        "halves_disjoint": a.halves_disjoint(),
        "roles": roles,
        "steps": steps,
        "destroyed": destroyed,
        "shortfall": a.shortfall,
        "verified": true,
        "embedding": embedding(&a.pattern, a.root, a.t, &a.embedding)?,
        "ledger": assembly_ledger(a),
    }))
}

/// JSON, or the ledger followed by a one-line result.
fn render(ctx: &Ctx, v: &Value) -> CliResult<String> {
    match ctx.format(&[Format::Json, Format::Text], Format::Json)? {
        Format::Text => {
            let mut out = String::new();
            for line in v["ledger"].as_array().into_iter().flatten() {
                out.push_str(line.as_str().unwrap_or_default());
                out.push('\n');
            }
            out.push_str(&format!("{}: width {}", v["pattern"].as_str().unwrap_or("?"), v["t"]));
            if let Some(s) = v["shortfall"].as_str() {
                out.push_str(&format!(" ({s})"));
            }
            out.push('\n');
            Ok(out)
        }
        _ => Ok(json::pretty(v)),
    }
}

pub fn find(ctx: &Ctx, a: &SuperFindArgs) -> CliResult<String> {
    let family = read_family(&a.family)?;
    let v = match a.pattern {
        SuperPattern::Wedge => witness_json(&find_wedge_blowup(&family, a.epsilon, a.target_t)?, "wedge")?,
        SuperPattern::Yd => witness_json(&find_yd_blowup(&family, a.epsilon, a.target_t)?, "yd")?,
        SuperPattern::S | SuperPattern::Splus | SuperPattern::Spp => {
            let (name, label) = match a.pattern {
                SuperPattern::S => (CatalogName::S, "s"),
                SuperPattern::Splus => (CatalogName::SPlus, "splus"),
                _ => (CatalogName::SPlusPlus, "spp"),
            };
            assembly_json(&find_radius2_blowup(name, &family, a.epsilon, a.target_t)?, label)?
        }
    };
    render(ctx, &v)
}

pub fn dense(ctx: &Ctx, a: &SuperDenseArgs) -> CliResult<String> {
    let family = read_family(&a.family)?;
    let (name, label) = match a.pattern {
        DensePattern::Wedge => (CatalogName::Wedge, "wedge"),
        DensePattern::Vee => (CatalogName::Vee, "vee"),
    };
    let r = find_special_blowup(name, &family, a.epsilon)?;
    let mut v = witness_json(&r.witness, label)?;
    v["dense"] = json!(r.dense);
    v["sparse"] = json!(r.sparse);
    v["degree_target"] = json::real(r.degree_target);
    v["width_targets"] = json!([json::real(r.width_targets.0), json::real(r.width_targets.1)]);
    render(ctx, &v)
}

pub fn classify(ctx: &Ctx, a: &SuperClassifyArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let family = read_family(&a.family)?;
    let direction = match a.direction {
        DirectionArg::Down => Direction::Down,
        DirectionArg::Up => Direction::Up,
    };
    let c = classify_types(&family, a.epsilon, direction);
    let count = |t: SetType| c.tags.iter().filter(|&&x| x == t).count();
    let members: Vec<Value> = c
        .family
        .iter()
        .zip(c.tags.iter().zip(&c.witnesses))
        .map(|(s, (t, w))| {
            let distance = match w {
                TypeWitness::Near(_) => Some(1),
                TypeWitness::Far { j, .. } => Some(*j),
                TypeWitness::Neither => None,
            };
            json!({ "set": json::set(s), "type": t.as_str(), "distance": distance, "relatives": w.sets().len() })
        })
        .collect();
    Ok(json::pretty(&json!({
        "direction": match direction { Direction::Down => "down", Direction::Up => "up" },
        "epsilon": a.epsilon,
        "classified": c.family.len(),
        "dropped": c.dropped,
        "type1": count(SetType::Type1),
        "type2": count(SetType::Type2),
        "type3": count(SetType::Type3),
        "members": members,
    })))
}

fn fork_json(r: &ForkReport) -> Value {
    json!({
        "variant": match r.variant {
            posetfree::supersat::ForkVariant::Fork => "fork",
            posetfree::supersat::ForkVariant::ForkPlus => "fork-plus",
        },
        "epsilon": r.epsilon,
        "size": r.size,
        "middle": json::real(r.middle),
        "bound": json::real(r.bound),
        "in_band": r.in_band,
        "hypotheses_hold": r.hypotheses_hold,
        "first_failure": r.first_failure.map(|(s, j, c)| json!({ "set": json::set(s), "distance": j, "count": c })),
        "applicable": r.applicable,
        "within_bound": r.within_bound,
        "violation": r.violation,
        "lubell_mass": json::real(r.lubell_mass),
        "max_local_mass": json::real(r.max_local_mass),
    })
}

pub fn check_fork(ctx: &Ctx, a: &SuperCheckArgs, plus: bool) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let family = read_family(&a.family)?;
    let r = if plus {
        check_fork_plus_bound(&family, a.epsilon)
    } else {
        check_fork_bound(&family, a.epsilon)
    };
    Ok(json::pretty(&fork_json(&r)))
}
