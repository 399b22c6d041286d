use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use hullkit::fixtures::{fixture28, parse_gf4_rows};
use hullkit::{grs_code, parse_construction, LinearCode};

/// Comma-separated coordinate list, e.g. `0,1,5`. The empty string is the
/// empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexList(pub Vec<usize>);

impl FromStr for IndexList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(IndexList(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad index {t:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IndexList)
    }
}

impl fmt::Display for IndexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", v.join(","))
    }
}

/// Builds a construction string from a name plus `key=value` words, with
/// `--q/--k/--m` flags filling in missing keys.
pub fn construction_text(words: &[String], q: Option<u32>, k: Option<usize>, m: Option<usize>) -> String {
    let mut text = words.join(" ");
    for (key, val) in [("q", q.map(|v| v as usize)), ("k", k), ("m", m)] {
        if let Some(v) = val {
            if !words.iter().any(|w| w.starts_with(&format!("{key}="))) {
                text.push_str(&format!(" {key}={v}"));
            }
        }
    }
    text
}

pub fn construct(text: &str) -> Result<LinearCode> {
    let spec = parse_construction(text).with_context(|| format!("construction {text:?}"))?;
    Ok(grs_code(&spec)?)
}

/// Parses code text: the `code GF(p^m) n k` format, or `&`-separated GF(4)
/// rows written with `w`.
pub fn parse_code_text(text: &str) -> Result<LinearCode> {
    let code = if text.contains('&') { parse_gf4_rows(text)? } else { LinearCode::from_text(text)? };
    if code.k() == 0 {
        bail!(hullkit::Error::Parse("code has dimension 0".into()));
    }
    Ok(code)
}

/// A code argument: `fixture28`, a file, or a construction string such as
/// `"grscon3 q=4 k=3"`.
pub fn load_code(arg: &str) -> Result<LinearCode> {
    if arg == "fixture28" {
        return Ok(fixture28());
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return parse_code_text(&text).with_context(|| format!("parsing {arg}"));
    }
    if arg.starts_with("grs") {
        return construct(arg);
    }
    bail!("{arg:?} is neither a file, a construction, nor fixture28")
}
