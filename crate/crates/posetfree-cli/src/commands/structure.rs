use posetfree::blowup::{blow_up, blow_up_size, BlowupShape};
use posetfree::embed::{find_blowup_copy, find_subposet, max_blowup_t};
use serde_json::json;

use crate::args::{BlowupArgs, EmbedArgs, Emit, Format};
use crate::formats::{read_family, resolve_pattern, PosetFile};
use crate::{json, CliError, CliResult, Ctx};

const NONE: &str = "NONE\n";

pub fn embed(ctx: &Ctx, a: &EmbedArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let p = resolve_pattern(&a.pattern)?;
    let family = read_family(&a.family)?;
    let Some(width) = &a.blowup else {
        let Some(e) = find_subposet(&p.poset, &family, a.induced)? else {
            return Ok(String::from(NONE));
        };
        let pairs = e.sets.iter().enumerate().map(|(v, &s)| (p.poset.label(v).to_string(), s));
        return Ok(json::pretty(&json!({
            "pattern": p.name,
            "induced": a.induced,
            "assignment": json::assignment(pairs),
            "runtime": ctx.runtime(),
        })));
    };
    if a.induced {
        return Err(CliError::Usage(String::from("--induced applies to plain pattern search, not --blowup")));
    }
    let root = p.root(a.root.as_deref())?;
    let (t, copy) = if width == "max" {
        max_blowup_t(&p.poset, root, &family, family.len())?
    } else {
        let t: usize = width
            .parse()
            .map_err(|_| CliError::Usage(format!("--blowup takes a width or `max`, not `{width}`")))?;
        (t, find_blowup_copy(&p.poset, root, t, &family)?)
    };
    let Some(copy) = copy else {
        return Ok(String::from(NONE));
    };
    let shape = BlowupShape::new(&p.poset, root, t)?;
    let pairs = copy.iter().enumerate().map(|(r, &s)| (shape.label(r), s));
    Ok(json::pretty(&json!({
        "pattern": p.name,
        "root": p.poset.label(root),
        "t": t,
        "assignment": json::assignment(pairs),
        "runtime": ctx.runtime(),
    })))
}

pub fn blowup(ctx: &Ctx, a: &BlowupArgs) -> CliResult<String> {
    ctx.format(&[Format::Json], Format::Json)?;
    let p = resolve_pattern(&a.poset)?;
    let root = p.root(a.root.as_deref())?;
    match a.emit {
        Emit::Size => {
            let size = blow_up_size(&p.poset, root, a.d)?;
            let value = match u64::try_from(&size) {
                Ok(v) => json!(v),
                Err(_) => json!(size.to_string()),
            };
            Ok(json::pretty(&json!({
                "pattern": p.name,
                "root": p.poset.label(root),
                "d": a.d,
                "size": value,
                "height": p.poset.height(),
            })))
        }
        Emit::Poset => {
            let bp = blow_up(&p.poset, root, a.d)?;
            let file = PosetFile::from_poset(&bp.poset, Some(0));
            Ok(json::pretty(&serde_json::to_value(file).expect("poset files serialize")))
        }
    }
}
