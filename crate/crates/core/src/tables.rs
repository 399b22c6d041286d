//! Regeneration of the optimal EAQECC families (sixteen) and subsystem
//! families (eight) obtained from GRS codes with MDS Hermitian hulls.
//!
//! Families come in groups built on one classical source: group 0 uses
//! `grscon1(q)`, group 1 `grscon2(q, k)`, group 2 `grscon3(q, k)` and group 3
//! `grscon4(q, k, m)`. Within an EAQECC group the first two families start
//! from the Hermitian dual of the source, the last two from the source
//! itself; odd families puncture and even families shorten.

use rayon::prelude::*;
use serde::Serialize;

use crate::codekit::{dual, Budget, DeriveMode, InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::grslab::{gcd, grs_code, grscon1, grscon2, grscon3, grscon4};
use crate::qparams::{
    propagate_eaqecc, propagate_subsystem, EaqeccParams, ParamRecord, PropagateOptions, Purity, SubsystemParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Eaqecc,
    Subsystem,
}

impl TableKind {
    pub fn families(self) -> usize {
        match self {
            TableKind::Eaqecc => 16,
            TableKind::Subsystem => 8,
        }
    }

    fn per_group(self) -> usize {
        self.families() / 4
    }
}

/// Closed-form parameters `(n, kappa, delta, c)` or `(n, kappa, delta, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Closed {
    pub n: i64,
    pub kappa: i64,
    pub delta: i64,
    pub c_or_r: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowParams {
    Eaqecc(EaqeccParams),
    Subsystem(SubsystemParams),
}

impl RowParams {
    pub fn n(&self) -> usize {
        match self {
            RowParams::Eaqecc(p) => p.n,
            RowParams::Subsystem(p) => p.n,
        }
    }

    pub fn kappa(&self) -> usize {
        match self {
            RowParams::Eaqecc(p) => p.kappa,
            RowParams::Subsystem(p) => p.kappa,
        }
    }

    pub fn delta(&self) -> usize {
        match self {
            RowParams::Eaqecc(p) => p.delta(),
            RowParams::Subsystem(p) => p.delta(),
        }
    }

    pub fn delta_exact(&self) -> Option<usize> {
        match self {
            RowParams::Eaqecc(p) => p.delta_exact,
            RowParams::Subsystem(p) => p.delta_exact,
        }
    }

    pub fn c_or_r(&self) -> usize {
        match self {
            RowParams::Eaqecc(p) => p.c,
            RowParams::Subsystem(p) => p.r,
        }
    }

    pub fn pure(&self) -> Purity {
        match self {
            RowParams::Eaqecc(p) => p.pure,
            RowParams::Subsystem(p) => p.pure,
        }
    }

    pub fn optimal(&self) -> bool {
        match self {
            RowParams::Eaqecc(p) => p.optimal(),
            RowParams::Subsystem(p) => p.optimal(),
        }
    }

    /// Slack of the optimality bound (`2δ ≤ n+c−κ+2` or `κ+r ≤ n−2δ+2`).
    pub fn optimality_slack(&self) -> i64 {
        let (n, kappa, d, x) = (self.n() as i64, self.kappa() as i64, self.delta() as i64, self.c_or_r() as i64);
        match self {
            RowParams::Eaqecc(_) => n + x - kappa + 2 - 2 * d,
            RowParams::Subsystem(_) => n - 2 * d + 2 - kappa - x,
        }
    }

    pub fn record(&self) -> ParamRecord {
        match self {
            RowParams::Eaqecc(p) => p.record(),
            RowParams::Subsystem(p) => p.record(),
        }
    }

    fn closed(&self) -> Closed {
        Closed {
            n: self.n() as i64,
            kappa: self.kappa() as i64,
            delta: self.delta() as i64,
            c_or_r: self.c_or_r() as i64,
        }
    }
}

impl std::fmt::Display for RowParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RowParams::Eaqecc(p) => p.fmt(f),
            RowParams::Subsystem(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub table: TableKind,
    pub family: usize,
    pub q: u32,
    pub k: usize,
    pub m: Option<usize>,
    pub s: usize,
    pub params: RowParams,
    pub formula: Closed,
    /// Families 13–16 write `i` in the kappa and c columns; when `i != j`
    /// this holds the same row with `j` in those places.
    pub alt_formula: Option<Closed>,
    pub matches_formula: bool,
    /// Built from an actual code (as opposed to formula-only output).
    pub constructed: bool,
}

impl TableRow {
    /// Constructed, exact distance, and equal to the closed form.
    pub fn verified(&self) -> bool {
        self.constructed && self.params.delta_exact().is_some() && self.matches_formula
    }

    pub const CSV_HEADER: [&'static str; 10] =
        ["family", "q", "s", "n", "kappa", "delta", "c_or_r", "pure", "optimal", "verified"];

    pub fn csv_fields(&self) -> [String; 10] {
        let pure = match self.params.pure() {
            Purity::Yes => "true",
            Purity::No => "false",
            Purity::Unknown => "unknown",
        };
        [
            self.family.to_string(),
            self.q.to_string(),
            self.s.to_string(),
            self.params.n().to_string(),
            self.params.kappa().to_string(),
            self.params.delta().to_string(),
            self.params.c_or_r().to_string(),
            pure.to_string(),
            self.params.optimal().to_string(),
            self.verified().to_string(),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "table": self.table,
            "family": self.family,
            "q": self.q,
            "k": self.k,
            "m": self.m,
            "s": self.s,
            "params": self.params.record(),
            "formula": self.formula,
            "alt_formula": self.alt_formula,
            "matches_formula": self.matches_formula,
            "verified": self.verified(),
        })
    }
}

/// One table entry before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RowKey {
    pub family: usize,
    pub q: u32,
    pub k: usize,
    pub m: Option<usize>,
    pub s: usize,
}

fn group_of(kind: TableKind, family: usize) -> usize {
    (family - 1) / kind.per_group()
}

fn mode_of(family: usize) -> DeriveMode {
    if family % 2 == 1 {
        DeriveMode::Puncture
    } else {
        DeriveMode::Shorten
    }
}

/// Every legal `(family, k, m, s)` at `q`, with `k <= kmax` when given.
pub fn row_keys(kind: TableKind, q: u32, kmax: Option<usize>) -> Vec<RowKey> {
    let qu = q as usize;
    let kmax = kmax.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for family in 1..=kind.families() {
        let group = group_of(kind, family);
        let mut km: Vec<(usize, Option<usize>)> = Vec::new();
        match group {
            0 => km.push((qu, None)),
            1 | 2 => km.extend((2..qu).map(|k| (k, None))),
            _ => {
                for k in 2..qu {
                    km.extend((k..qu.saturating_sub(1)).map(|m| (k, Some(m))));
                }
            }
        }
        for (k, m) in km {
            if group > 0 && k > kmax {
                continue;
            }
            // s runs over [0, ell], with ell = k - 1 (q - 1 for group 0)
            for s in 0..k {
                out.push(RowKey { family, q, k, m, s });
            }
        }
    }
    out.sort();
    out
}

/// Closed-form row. `use_j` replaces the printed `i` by `j` in the
/// kappa and c columns of families 13–16.
pub fn closed_form(kind: TableKind, key: &RowKey, use_j: bool) -> Closed {
    let q = i64::from(key.q);
    let k = key.k as i64;
    let s = key.s as i64;
    let i = gcd(key.k as u64 - 1, u64::from(key.q) - 1) as i64;
    let j = key.m.map_or(0, |m| gcd((m - key.k + 1) as u64, u64::from(key.q) - 1) as i64);
    let q2 = q * q;
    let group = group_of(kind, key.family);
    match kind {
        TableKind::Eaqecc => {
            let printed_i = if use_j { j } else { i };
            // (length at s = 0, base kappa/c value, dual-source delta, source delta)
            let (n0, x, dd, dc) = match group {
                0 => (q2, q2 - 2 * q + 1, q2 - q + 1, q + 1),
                1 => (q2 - 1, q2 - 2 * k, q2 - k, k + 1),
                2 => {
                    let n0 = q2 - i * (q + 1);
                    (n0, n0 - 2 * k + 1, n0 - k + 1, k + 1)
                }
                _ => (q2 - j * (q + 1) - 1, q2 - printed_i * (q + 1) - 2 * k, q2 - j * (q + 1) - k, k + 1),
            };
            let (kappa, delta, c) = match (key.family - 1) % 4 {
                0 => (1, dd, x + s),
                1 => (1 + s, dd - s, x),
                2 => (x, dc, 1 + s),
                _ => (x + s, dc - s, 1),
            };
            Closed { n: n0 - s, kappa, delta, c_or_r: c }
        }
        TableKind::Subsystem => {
            let (n0, base, d0) = match group {
                0 => (q2, q2 - 2 * q + 1, q),
                1 => (q2 - 1, q2 - 2 * k, k),
                2 => {
                    let n0 = q2 - i * (q + 1);
                    (n0, n0 - 2 * k + 1, k)
                }
                _ => (q2 - j * (q + 1) - 1, q2 - j * (q + 1) - 2 * k, k),
            };
            let (kappa, r) = if key.family % 2 == 1 { (base, 1 + s) } else { (base + s, 1) };
            Closed { n: n0 - s, kappa, delta: d0 - s, c_or_r: r }
        }
    }
}

/// The classical code a row is derived from.
pub fn source_code(kind: TableKind, key: &RowKey) -> Result<LinearCode> {
    let group = group_of(kind, key.family);
    let spec = match group {
        0 => grscon1(key.q)?,
        1 => grscon2(key.q, key.k)?,
        2 => grscon3(key.q, key.k)?,
        _ => grscon4(key.q, key.k, key.m.ok_or_else(|| Error::ParameterOutOfRange("missing m".into()))?)?,
    };
    let code = grs_code(&spec)?;
    if kind == TableKind::Eaqecc && (key.family - 1) % 4 < 2 {
        dual(&code, InnerProduct::Hermitian)
    } else {
        Ok(code)
    }
}

fn source_label(kind: TableKind, key: &RowKey) -> String {
    let group = group_of(kind, key.family);
    let base = match (group, key.m) {
        (0, _) => format!("grscon1 q={}", key.q),
        (1, _) => format!("grscon2 q={} k={}", key.q, key.k),
        (2, _) => format!("grscon3 q={} k={}", key.q, key.k),
        (_, m) => format!("grscon4 q={} k={} m={}", key.q, key.k, m.unwrap_or(0)),
    };
    if kind == TableKind::Eaqecc && (key.family - 1) % 4 < 2 {
        format!("hermitian dual of {base}")
    } else {
        base
    }
}

fn alt_for(kind: TableKind, key: &RowKey) -> Option<Closed> {
    if kind != TableKind::Eaqecc || group_of(kind, key.family) != 3 {
        return None;
    }
    let alt = closed_form(kind, key, true);
    (alt != closed_form(kind, key, false)).then_some(alt)
}

/// Builds the source, applies the propagation rule and compares with the
/// closed form.
pub fn evaluate_row(kind: TableKind, key: &RowKey, budget: Budget) -> Result<TableRow> {
    let code = source_code(kind, key)?;
    let opts = PropagateOptions::default();
    let mode = mode_of(key.family);
    let label = source_label(kind, key);
    let params = match kind {
        TableKind::Eaqecc => {
            let mut p = propagate_eaqecc(&code, key.s, mode, budget, &opts)?;
            p.provenance.insert(0, label);
            RowParams::Eaqecc(p)
        }
        TableKind::Subsystem => {
            let mut p = propagate_subsystem(&code, key.s, mode, budget, &opts)?;
            p.provenance.insert(0, label);
            RowParams::Subsystem(p)
        }
    };
    let formula = closed_form(kind, key, false);
    Ok(TableRow {
        table: kind,
        family: key.family,
        q: key.q,
        k: key.k,
        m: key.m,
        s: key.s,
        matches_formula: params.closed() == formula,
        alt_formula: alt_for(kind, key),
        params,
        formula,
        constructed: true,
    })
}

/// Row carrying only the closed form, flagged unverified.
pub fn formula_row(kind: TableKind, key: &RowKey) -> TableRow {
    let formula = closed_form(kind, key, false);
    let us = |x: i64| x.max(0) as usize;
    let provenance = vec![source_label(kind, key), "closed form only, not constructed".to_string()];
    let params = match kind {
        TableKind::Eaqecc => RowParams::Eaqecc(EaqeccParams {
            q: key.q,
            n: us(formula.n),
            kappa: us(formula.kappa),
            c: us(formula.c_or_r),
            delta_lower: us(formula.delta),
            delta_exact: None,
            pure: Purity::Unknown,
            source_k: key.k,
            source_ell: key.k - 1,
            provenance,
        }),
        TableKind::Subsystem => RowParams::Subsystem(SubsystemParams {
            q: key.q,
            n: us(formula.n),
            kappa: us(formula.kappa),
            r: us(formula.c_or_r),
            delta_lower: us(formula.delta),
            delta_exact: None,
            pure: Purity::Unknown,
            source_k: key.k,
            source_ell: key.k - 1,
            provenance,
        }),
    };
    TableRow {
        table: kind,
        family: key.family,
        q: key.q,
        k: key.k,
        m: key.m,
        s: key.s,
        params,
        formula,
        alt_formula: alt_for(kind, key),
        matches_formula: false,
        constructed: false,
    }
}

/// Largest `q` for which rows are constructed rather than printed from the
/// closed forms.
pub const MAX_CONSTRUCTED_Q: u32 = 4;

/// All rows of a table at `q`, sorted by `(family, q, k, m, s)`.
pub fn table_rows(kind: TableKind, q: u32, kmax: Option<usize>, budget: Budget) -> Result<Vec<TableRow>> {
    if q < 2 {
        return Err(Error::ParameterOutOfRange(format!("q={q}")));
    }
    crate::galois::field_with_order(q)?;
    let keys = row_keys(kind, q, kmax);
    if q > MAX_CONSTRUCTED_Q {
        return Ok(keys.iter().map(|k| formula_row(kind, k)).collect());
    }
    let mut rows = keys.par_iter().map(|k| evaluate_row(kind, k, budget)).collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.family, r.q, r.k, r.m, r.s));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(family: usize, q: u32, k: usize, m: Option<usize>, s: usize) -> RowKey {
        RowKey { family, q, k, m, s }
    }

    #[test]
    fn key_counts() {
        // q = 2: only the grscon1 group, s in {0, 1}
        assert_eq!(row_keys(TableKind::Eaqecc, 2, None).len(), 4 * 2);
        assert_eq!(row_keys(TableKind::Subsystem, 2, None).len(), 2 * 2);
        // q = 3: grscon1 (s < 3) plus k = 2 for grscon2/3 (s < 2), no grscon4
        assert_eq!(row_keys(TableKind::Eaqecc, 3, None).len(), 4 * 3 + 8 * 2);
        // q = 4: grscon4 only at k = m = 2
        let k4 = row_keys(TableKind::Eaqecc, 4, None);
        assert_eq!(k4.iter().filter(|k| k.family > 12).count(), 4 * 2);
        assert_eq!(row_keys(TableKind::Eaqecc, 4, Some(2)).iter().filter(|k| k.family == 5).count(), 2);
    }

    #[test]
    fn closed_forms_by_hand() {
        let c = closed_form(TableKind::Eaqecc, &key(4, 2, 2, None, 0), false);
        assert_eq!((c.n, c.kappa, c.delta, c.c_or_r), (4, 1, 3, 1));
        let c = closed_form(TableKind::Eaqecc, &key(8, 3, 2, None, 0), false);
        assert_eq!((c.n, c.kappa, c.delta, c.c_or_r), (8, 5, 3, 1));
        let c = closed_form(TableKind::Eaqecc, &key(9, 4, 3, None, 1), false);
        // i = gcd(2, 3) = 1, n = 16 - 5 - 1
        assert_eq!((c.n, c.kappa, c.delta, c.c_or_r), (10, 1, 9, 7));
        let c = closed_form(TableKind::Subsystem, &key(1, 3, 3, None, 1), false);
        assert_eq!((c.n, c.kappa, c.c_or_r, c.delta), (8, 4, 2, 2));
        let c = closed_form(TableKind::Subsystem, &key(7, 4, 2, Some(2), 0), false);
        // j = gcd(1, 3) = 1, n = 16 - 5 - 1
        assert_eq!((c.n, c.kappa, c.c_or_r, c.delta), (10, 7, 1, 2));
    }

    #[test]
    fn q2_table1() {
        let rows = table_rows(TableKind::Eaqecc, 2, None, Budget::default()).unwrap();
        assert!(rows.iter().all(|r| r.verified() && r.params.optimal()));
        let shown: Vec<String> = rows.iter().map(|r| r.params.to_string()).collect();
        for want in ["[[4,1,3;1]]_2", "[[3,1,3;2]]_2", "[[3,2,2;1]]_2"] {
            assert!(shown.iter().any(|s| s == want), "{want} missing from {shown:?}");
        }
    }

    #[test]
    fn formula_only_rows_are_unverified() {
        let rows = table_rows(TableKind::Subsystem, 5, Some(2), Budget::default()).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| !r.verified() && !r.constructed));
        assert_eq!(rows[0].csv_fields()[9], "false");
    }
}
