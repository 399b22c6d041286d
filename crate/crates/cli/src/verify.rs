//! The shortened-hull counterexample on the [28,10,9] GF(4) fixture.

use anyhow::Result;
use hullkit::fixtures::fixture28;
use hullkit::{dual, hull, min_distance, puncture, shorten, Budget, InnerProduct, LinearCode};
use serde_json::json;

pub struct Report {
    pub lines: Vec<String>,
    pub mismatches: Vec<String>,
    pub json: serde_json::Value,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn distance(c: &LinearCode, budget: Budget) -> Result<Option<usize>> {
    if c.k() == 0 {
        return Ok(None);
    }
    Ok(Some(min_distance(c, budget)?))
}

fn show(n: usize, k: usize, d: Option<usize>) -> String {
    match d {
        Some(d) => format!("[{n},{k},{d}]_4"),
        None => format!("[{n},{k}]_4"),
    }
}

/// First generator entry where the reduced generators differ.
fn locate_difference(a: &LinearCode, b: &LinearCode) -> Option<String> {
    if (a.n(), a.k()) != (b.n(), b.k()) {
        return Some(format!("shape [{},{}] instead of [{},{}]", a.n(), a.k(), b.n(), b.k()));
    }
    if a.field() != b.field() {
        return Some(format!("field {} instead of {}", a.field().name(), b.field().name()));
    }
    for i in 0..a.k() {
        for j in 0..a.n() {
            let (x, y) = (a.gen().row(i)[j], b.gen().row(i)[j]);
            if x != y {
                return Some(format!("reduced generator row {i}, column {j}: {x} instead of {y}"));
            }
        }
    }
    None
}

/// Checks the stock expectations (hull `[28,1,20]`, hull dual `[28,27,1]`,
/// dimensions `(0,1,2)` on the first six coordinates). With a custom `s`
/// only the containment of the shortened hull in both derived hulls is
/// required, and for `s` empty all three must coincide.
pub fn run(code: &LinearCode, s: Option<&[usize]>, budget: Budget) -> Result<Report> {
    let stock_s: Vec<usize> = (0..6).collect();
    let custom = s.is_some();
    let s = s.unwrap_or(&stock_s);
    let mut lines = Vec::new();
    let mut mismatches = Vec::new();
    let mut expect = |what: &str, got: String, want: String| {
        if got != want {
            mismatches.push(format!("{what}: expected {want}, got {got}"));
        }
    };

    let stock = fixture28();
    if let Some(diff) = locate_difference(code, &stock) {
        lines.push(format!("input differs from the stock fixture: {diff}"));
    }
    let d = distance(code, budget)?;
    lines.push(format!("code {}", show(code.n(), code.k(), d)));
    let h = hull(code, InnerProduct::Hermitian)?;
    let dh = distance(&h.hull, budget)?;
    let hd = dual(&h.hull, InnerProduct::Hermitian)?;
    let dhd = distance(&hd, budget)?;
    lines.push(format!("hermitian hull {}", show(h.hull.n(), h.ell, dh)));
    lines.push(format!("hull dual {}", show(hd.n(), hd.k(), dhd)));
    let dims = (
        shorten(&h.hull, s)?.k(),
        hull(&shorten(code, s)?, InnerProduct::Hermitian)?.ell,
        hull(&puncture(code, s)?, InnerProduct::Hermitian)?.ell,
    );
    let list: Vec<String> = s.iter().map(usize::to_string).collect();
    lines.push(format!(
        "S = {{{}}}: dim (Hull)_S = {}, dim Hull(C_S) = {}, dim Hull(C^S) = {}",
        list.join(","),
        dims.0,
        dims.1,
        dims.2
    ));

    if custom {
        let sh = shorten(&h.hull, s)?;
        let short = hull(&shorten(code, s)?, InnerProduct::Hermitian)?.hull;
        let punct = hull(&puncture(code, s)?, InnerProduct::Hermitian)?.hull;
        expect("(Hull)_S inside Hull(C_S)", sh.is_subcode_of(&short).to_string(), "true".into());
        expect("(Hull)_S inside Hull(C^S)", sh.is_subcode_of(&punct).to_string(), "true".into());
        if s.is_empty() {
            let all = (h.ell, h.ell, h.ell);
            expect("dimensions", format!("{dims:?}"), format!("{all:?}"));
        }
    } else {
        expect("code", show(code.n(), code.k(), d), "[28,10,9]_4".into());
        expect("hull", show(h.hull.n(), h.ell, dh), "[28,1,20]_4".into());
        expect("hull dual", show(hd.n(), hd.k(), dhd), "[28,27,1]_4".into());
        expect("dimensions", format!("{dims:?}"), "(0, 1, 2)".into());
    }

    let json = json!({
        "code": {"n": code.n(), "k": code.k(), "d": d},
        "hull": {"n": h.hull.n(), "k": h.ell, "d": dh},
        "hull_dual": {"n": hd.n(), "k": hd.k(), "d": dhd},
        "s": s,
        "dims": [dims.0, dims.1, dims.2],
        "mismatches": mismatches,
        "pass": mismatches.is_empty(),
    });
    Ok(Report { lines, mismatches, json })
}
