//! Text formats: family files, poset files and pattern arguments.
//!
//! A family file starts with `n=<k>`; every later line holds one set, either
//! as ascending elements of `[1..n]` separated by commas, as `0x` and the bit
//! encoding in hexadecimal, or as `{}` for the empty set. `#` starts a
//! comment and blank lines are skipped.
//!
//! A poset file is JSON: `{"elements": [...], "covers": [[lower, upper], ...],
//! "root": "x"}` with `root` optional.

use std::fmt::Write as _;
use std::path::Path;

use posetfree::lattice::{ground_mask, Set, SetFamily};
use posetfree::poset::{catalog, parse_catalog_name, Poset};
use serde::{Deserialize, Serialize};

use crate::CliError;

fn syntax(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Domain(format!("line {line}: {msg}"))
}

fn parse_set(token: &str, n: u32, line: usize) -> Result<Set, CliError> {
    if token == "{}" {
        return Ok(0);
    }
    if let Some(hex) = token.strip_prefix("0x").or_else(|| token.strip_prefix("0X")) {
        let s = u64::from_str_radix(hex, 16).map_err(|e| syntax(line, format!("bad hex set `{token}`: {e}")))?;
        if s & !ground_mask(n) != 0 {
            return Err(syntax(line, format!("set `{token}` does not fit in [1..{n}]")));
        }
        return Ok(s);
    }
    let mut s: Set = 0;
    let mut last = 0u32;
    for part in token.split(',') {
        let e: u32 = part
            .trim()
            .parse()
            .map_err(|_| syntax(line, format!("bad element `{}`", part.trim())))?;
        if e == 0 || e > n {
            return Err(syntax(line, format!("element {e} outside [1..{n}]")));
        }
        if e <= last {
            return Err(syntax(line, "elements must be strictly ascending"));
        }
        last = e;
        s |= 1 << (e - 1);
    }
    Ok(s)
}

pub fn parse_family(text: &str) -> Result<SetFamily, CliError> {
    let mut n = None;
    let mut sets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(k) = n else {
            let v = line
                .strip_prefix("n=")
                .ok_or_else(|| syntax(i + 1, "expected `n=<k>` header"))?;
            let k: u32 = v.trim().parse().map_err(|_| syntax(i + 1, format!("bad ground set size `{v}`")))?;
            if k > posetfree::lattice::MAX_GROUND {
                return Err(CliError::Capacity(format!("ground set size {k} exceeds 64")));
            }
            n = Some(k);
            continue;
        };
        let s = parse_set(line, k, i + 1)?;
        if sets.contains(&s) {
            return Err(syntax(i + 1, format!("repeated set `{line}`")));
        }
        sets.push(s);
    }
    let n = n.ok_or_else(|| CliError::Domain(String::from("empty family file: missing `n=<k>` header")))?;
    Ok(SetFamily::new(n, sets)?)
}

/// Elements of `s`, 1-based and ascending.
pub fn elements(s: Set) -> Vec<u32> {
    (0..64).filter(|&i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn set_token(s: Set) -> String {
    if s == 0 {
        return String::from("{}");
    }
    let e: Vec<String> = elements(s).iter().map(u32::to_string).collect();
    e.join(",")
}

/// Family file text, members in canonical order.
pub fn write_family(family: &SetFamily) -> String {
    let mut out = format!("n={}\n", family.n());
    for s in family.iter() {
        let _ = writeln!(out, "{}", set_token(s));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset, root: Option<usize>) -> PosetFile {
        PosetFile {
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .iter()
                .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
            root: root.map(|r| p.label(r).to_string()),
        }
    }
}

/// A resolved pattern and the root it brings along, if any.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub name: String,
    pub poset: Poset,
    pub root: Option<usize>,
}

impl Pattern {
    /// The root named on the command line, else the pattern's own.
    pub fn root(&self, flag: Option<&str>) -> Result<usize, CliError> {
        match flag {
            Some(label) => self
                .poset
                .index_of(label)
                .ok_or_else(|| CliError::Domain(format!("pattern {} has no element `{label}`", self.name))),
            None => self
                .root
                .ok_or_else(|| CliError::Domain(format!("pattern {} needs --root", self.name))),
        }
    }
}

pub fn parse_poset(text: &str) -> Result<(Poset, Option<usize>), CliError> {
    let file: PosetFile =
        serde_json::from_str(text).map_err(|e| CliError::Domain(format!("bad poset file: {e}")))?;
    let poset = Poset::build(&file.elements, &file.covers)?;
    let root = match &file.root {
        Some(r) => Some(
            poset
                .index_of(r)
                .ok_or_else(|| CliError::Domain(format!("root `{r}` is not an element")))?,
        ),
        None => None,
    };
    Ok((poset, root))
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_family(path: &Path) -> Result<SetFamily, CliError> {
    parse_family(&read_text(path)?)
}

/// A poset file when `arg` names an existing file, else a catalog shorthand
/// such as `chain:3`, `wedge` or `tree:2,3`.
pub fn resolve_pattern(arg: &str) -> Result<Pattern, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let (poset, root) = parse_poset(&read_text(path)?)?;
        return Ok(Pattern {
            name: arg.to_string(),
            poset,
            root,
        });
    }
    match parse_catalog_name(arg) {
        Ok(name) => {
            let e = catalog(name)?;
            Ok(Pattern {
                name: arg.to_string(),
                poset: e.poset,
                root: e.root,
            })
        }
        Err(_) if arg.ends_with(".json") || arg.contains('/') => Err(CliError::Io(format!("{arg}: no such file"))),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_round_trip() {
        let text = "# demo\nn=4\n1,3\n{}\n0x8\n\n2 # trailing\n";
        let f = parse_family(text).unwrap();
        assert_eq!(f.members(), &[0, 0b10, 0b1000, 0b101]);
        assert_eq!(parse_family(&write_family(&f)).unwrap(), f);
        assert_eq!(write_family(&f), "n=4\n{}\n2\n4\n1,3\n");
    }

    #[test]
    fn family_errors() {
        for bad in ["1,2\n", "n=3\n4\n", "n=3\n2,1\n", "n=3\n0x10\n", "n=3\n1\n1\n", "n=3\nx\n", ""] {
            assert!(matches!(parse_family(bad), Err(CliError::Domain(_))), "{bad:?}");
        }
        assert!(matches!(parse_family("n=65\n"), Err(CliError::Capacity(_))));
    }

    #[test]
    fn poset_round_trip() {
        let p = resolve_pattern("yd").unwrap();
        let file = PosetFile::from_poset(&p.poset, p.root);
        let text = serde_json::to_string(&file).unwrap();
        let (q, r) = parse_poset(&text).unwrap();
        assert_eq!(q, p.poset);
        assert_eq!(r, p.root);
        assert!(parse_poset(r#"{"elements":["a"],"covers":[["a","b"]]}"#).is_err());
        assert!(parse_poset(r#"{"elements":["a","b"],"covers":[["a","b"]],"extra":1}"#).is_err());
    }

    #[test]
    fn unknown_shorthand_is_domain_error() {
        assert!(matches!(resolve_pattern("hexagon"), Err(CliError::Domain(_))));
        assert!(matches!(resolve_pattern("missing/p.json"), Err(CliError::Io(_))));
    }
}
