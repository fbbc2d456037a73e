use posetfree::extremal::{
    count_pfree_capped, is_chain_pattern, la_exact_capped, max_antichain, max_ct_free, max_pfree_subfamily,
    ExtremalResult, COUNT_ANTICHAIN_CAP, COUNT_CAP, LA_SEARCH_CAP,
};
use serde_json::{json, Value};

use crate::args::{CountArgs, Format, LaArgs, MaxfreeArgs};
use crate::formats::{read_family, resolve_pattern};
use crate::{json, CliResult, Ctx};

fn report(ctx: &Ctx, value: Value, witness: Value, method: &str) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    Ok(json::pretty(&json!({
        "value": value,
        "witness": witness,
        "method": method,
        "runtime": ctx.runtime(),
    })))
}

fn extremal_report(ctx: &Ctx, r: &ExtremalResult) -> CliResult<String> {
    report(ctx, Value::from(r.value), json::family(&r.witness), r.method.as_str())
}

pub fn la(ctx: &Ctx, a: &LaArgs) -> CliResult<String> {
    let p = resolve_pattern(&a.pattern)?;
    let cap = ctx.cap(a.max_n, LA_SEARCH_CAP)?;
    extremal_report(ctx, &la_exact_capped(a.n, &p.poset, cap)?)
}

pub fn count(ctx: &Ctx, a: &CountArgs) -> CliResult<String> {
    let p = resolve_pattern(&a.pattern)?;
    let default = if is_chain_pattern(&p.poset) && p.poset.len() == 2 {
        COUNT_ANTICHAIN_CAP
    } else {
        COUNT_CAP
    };
    let cap = ctx.cap(a.max_n, default)?;
    let v = count_pfree_capped(a.n, &p.poset, cap)?;
    report(ctx, json::big(v), Value::Null, "depth-first enumeration")
}

pub fn maxfree(ctx: &Ctx, a: &MaxfreeArgs) -> CliResult<String> {
    let family = read_family(&a.family)?;
    let p = resolve_pattern(&a.pattern)?;
    let r = if is_chain_pattern(&p.poset) && p.poset.len() == 2 {
        max_antichain(&family)?
    } else if is_chain_pattern(&p.poset) {
        max_ct_free(&family, p.poset.len())?
    } else {
        max_pfree_subfamily(&family, &p.poset)?
    };
    extremal_report(ctx, &r)
}
