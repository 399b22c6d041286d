//! Quantum code parameters derived from classical codes over GF(q^2),
//! together with the Singleton-type bounds and the puncture/shorten
//! propagation rules.
//!
//! An EAQECC `[[n, kappa, delta; c]]_q` comes from a code `C` with hull
//! dimension `ell` via `c = k - ell`, `kappa = n - 2k + c` and
//! `delta = wt(C^⊥H \ Hull(C))`. A subsystem code `[[n, kappa, r, delta]]_q`
//! comes from the same data via `kappa = n - k - ell`, `r = k - ell` and
//! `delta = wt(Hull(C)^⊥H \ C)`.

use serde::{Deserialize, Serialize};

use crate::codekit::{
    dual, hull, hull_of_derived, information_set, min_distance, relative_min_weight, within_information_set, Budget,
    DeriveMode, HullRegime, InnerProduct, LinearCode,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Purity {
    Yes,
    No,
    Unknown,
}

impl Purity {
    pub fn as_option(self) -> Option<bool> {
        match self {
            Purity::Yes => Some(true),
            Purity::No => Some(false),
            Purity::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EaqeccParams {
    pub q: u32,
    pub n: usize,
    pub kappa: usize,
    pub c: usize,
    /// Certified lower bound on the distance.
    pub delta_lower: usize,
    /// Exact distance when it has been established.
    pub delta_exact: Option<usize>,
    pub pure: Purity,
    /// Dimension and hull dimension of the classical code used.
    pub source_k: usize,
    pub source_ell: usize,
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemParams {
    pub q: u32,
    pub n: usize,
    pub kappa: usize,
    pub r: usize,
    pub delta_lower: usize,
    pub delta_exact: Option<usize>,
    pub pure: Purity,
    pub source_k: usize,
    pub source_ell: usize,
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundId {
    #[serde(rename = "EA-1")]
    Ea1,
    #[serde(rename = "EA-2")]
    Ea2,
    #[serde(rename = "EA-3")]
    Ea3,
    #[serde(rename = "EA-QMDS")]
    EaQmds,
    #[serde(rename = "SUB-SINGLETON")]
    SubSingleton,
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundId::Ea1 => "EA-1",
            BoundId::Ea2 => "EA-2",
            BoundId::Ea3 => "EA-3",
            BoundId::EaQmds => "EA-QMDS",
            BoundId::SubSingleton => "SUB-SINGLETON",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub bound_id: BoundId,
    pub satisfied: bool,
    /// `None` when the distance is only known from below.
    pub tight: Option<bool>,
    pub slack: i64,
}

fn verdict(bound_id: BoundId, slack: i64, exact: bool) -> BoundVerdict {
    BoundVerdict { bound_id, satisfied: slack >= 0, tight: exact.then_some(slack == 0), slack }
}

/// Bound checks on `[[n, kappa, delta; c]]` with `delta` the best known value.
pub fn eaqecc_bounds(n: usize, kappa: usize, delta: usize, c: usize, exact: bool) -> Vec<BoundVerdict> {
    let (n, kappa, d, c) = (n as i64, kappa as i64, delta as i64, c as i64);
    let mut out = vec![
        verdict(BoundId::Ea1, c + (n - 2 * d + 2).max(0) - kappa, exact),
        verdict(BoundId::Ea2, n - d + 1 - kappa, exact),
    ];
    if 2 * (d - 1) >= n {
        // kappa <= (n-d+1)(c+2d-2-n) / (3d-3-n), denominator positive here
        let slack = (n - d + 1) * (c + 2 * d - 2 - n) - kappa * (3 * d - 3 - n);
        out.push(verdict(BoundId::Ea3, slack, exact));
    }
    out.push(verdict(BoundId::EaQmds, n + c - kappa + 2 - 2 * d, exact));
    out
}

pub fn subsystem_bounds(n: usize, kappa: usize, r: usize, delta: usize, exact: bool) -> Vec<BoundVerdict> {
    let slack = n as i64 - 2 * delta as i64 + 2 - kappa as i64 - r as i64;
    vec![verdict(BoundId::SubSingleton, slack, exact)]
}

impl EaqeccParams {
    pub fn delta(&self) -> usize {
        self.delta_exact.unwrap_or(self.delta_lower)
    }

    pub fn check_bounds(&self) -> Vec<BoundVerdict> {
        eaqecc_bounds(self.n, self.kappa, self.delta(), self.c, self.delta_exact.is_some())
    }

    fn tight_on(&self, id: BoundId) -> bool {
        self.check_bounds().iter().any(|v| v.bound_id == id && v.tight == Some(true))
    }

    /// Equality in `2 delta <= n + c - kappa + 2`.
    pub fn optimal(&self) -> bool {
        self.tight_on(BoundId::EaQmds)
    }

    /// Equality in EA-1 when `delta <= n/2`, in EA-3 otherwise.
    pub fn qmds(&self) -> bool {
        if 2 * self.delta() <= self.n {
            self.tight_on(BoundId::Ea1)
        } else {
            self.tight_on(BoundId::Ea3)
        }
    }

    pub fn record(&self) -> ParamRecord {
        ParamRecord::Eaqecc {
            q: self.q,
            n: self.n,
            kappa: self.kappa,
            delta: self.delta(),
            delta_exact: self.delta_exact.is_some(),
            c: self.c,
            pure: self.pure.as_option(),
            optimal: self.optimal(),
            provenance: self.provenance.clone(),
        }
    }

    /// `delta >= lower` together with `2 delta <= n + c - kappa + 2` can
    /// leave exactly one value.
    fn settle_by_bound(&mut self) {
        if self.delta_exact.is_none() && 2 * self.delta_lower + self.kappa == self.n + self.c + 2 {
            self.delta_exact = Some(self.delta_lower);
            self.provenance.push("distance pinned by the 2δ ≤ n+c−κ+2 bound".into());
        }
    }
}

impl std::fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ge = if self.delta_exact.is_some() { "" } else { "≥" };
        write!(f, "[[{},{},{}{};{}]]_{}", self.n, self.kappa, ge, self.delta(), self.c, self.q)
    }
}

impl SubsystemParams {
    pub fn delta(&self) -> usize {
        self.delta_exact.unwrap_or(self.delta_lower)
    }

    pub fn check_bounds(&self) -> Vec<BoundVerdict> {
        subsystem_bounds(self.n, self.kappa, self.r, self.delta(), self.delta_exact.is_some())
    }

    /// Equality in `kappa + r <= n - 2 delta + 2`.
    pub fn optimal(&self) -> bool {
        self.check_bounds()[0].tight == Some(true)
    }

    /// A subsystem code with no gauge qudits is a stabilizer code.
    pub fn is_stabilizer(&self) -> bool {
        self.r == 0
    }

    pub fn record(&self) -> ParamRecord {
        ParamRecord::Subsystem {
            q: self.q,
            n: self.n,
            kappa: self.kappa,
            r: self.r,
            delta: self.delta(),
            delta_exact: self.delta_exact.is_some(),
            pure: self.pure.as_option(),
            optimal: self.optimal(),
            provenance: self.provenance.clone(),
        }
    }

    fn settle_by_bound(&mut self) {
        if self.delta_exact.is_none() && self.kappa + self.r + 2 * self.delta_lower == self.n + 2 {
            self.delta_exact = Some(self.delta_lower);
            self.provenance.push("distance pinned by the κ+r ≤ n−2δ+2 bound".into());
        }
    }
}

impl std::fmt::Display for SubsystemParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ge = if self.delta_exact.is_some() { "" } else { "≥" };
        write!(f, "[[{},{},{},{}{}]]_{}", self.n, self.kappa, self.r, ge, self.delta(), self.q)
    }
}

/// Serialized parameter record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ParamRecord {
    Eaqecc {
        q: u32,
        n: usize,
        kappa: usize,
        delta: usize,
        delta_exact: bool,
        c: usize,
        pure: Option<bool>,
        optimal: bool,
        provenance: Vec<String>,
    },
    Subsystem {
        q: u32,
        n: usize,
        kappa: usize,
        r: usize,
        delta: usize,
        delta_exact: bool,
        pure: Option<bool>,
        optimal: bool,
        provenance: Vec<String>,
    },
}

fn base_q(c: &LinearCode) -> Result<u32> {
    c.field().base_order().ok_or(Error::NotQuadraticExtension { order: c.field().order() })
}

/// Distance of `A \ B` as (lower bound, exact value if known).
fn relative_distance(a: &LinearCode, b: &LinearCode, budget: Budget) -> Result<(usize, Option<usize>)> {
    match relative_min_weight(a, b, budget) {
        Ok(Some(w)) => Ok((w, Some(w))),
        Ok(None) => Err(Error::NoLogicalQudits),
        Err(Error::BudgetExceeded { lower_bound, .. }) => Ok((lower_bound, None)),
        Err(e) => Err(e),
    }
}

fn purity_of(delta_exact: Option<usize>, ambient: &LinearCode, budget: Budget) -> Result<Purity> {
    let Some(d) = delta_exact else {
        return Ok(Purity::Unknown);
    };
    match min_distance(ambient, budget) {
        Ok(amb) => Ok(if amb == d { Purity::Yes } else { Purity::No }),
        Err(Error::BudgetExceeded { lower_bound, .. }) if lower_bound > d => Ok(Purity::No),
        Err(Error::BudgetExceeded { .. }) => Ok(Purity::Unknown),
        Err(e) => Err(e),
    }
}

/// EAQECC parameters of `c` taken exactly as the construction prescribes.
fn eaqecc_direct(code: &LinearCode, budget: Budget) -> Result<EaqeccParams> {
    let q = base_q(code)?;
    let (n, k) = (code.n(), code.k());
    if k == n {
        return Err(Error::NoDual);
    }
    let h = hull(code, InnerProduct::Hermitian)?;
    let d = dual(code, InnerProduct::Hermitian)?;
    let c = k - h.ell;
    let kappa = n + c - 2 * k;
    if kappa == 0 {
        return Err(Error::NoLogicalQudits);
    }
    let (delta_lower, delta_exact) = relative_distance(&d, &h.hull, budget)?;
    let mut p = EaqeccParams {
        q,
        n,
        kappa,
        c,
        delta_lower,
        delta_exact,
        pure: Purity::Unknown,
        source_k: k,
        source_ell: h.ell,
        provenance: vec![format!("eaqecc from [{n},{k}] code with hull dimension {}", h.ell)],
    };
    p.settle_by_bound();
    p.pure = purity_of(p.delta_exact, &d, budget)?;
    Ok(p)
}

/// EAQECC from a code over GF(q^2). When `C^⊥H ⊊ C` the construction
/// collapses to `kappa = 0`; the stabilizer code `[[n, 2k-n, wt(C \ C^⊥H)]]`
/// is then obtained from the dual instead.
pub fn eaqecc_from_code(code: &LinearCode, budget: Budget) -> Result<EaqeccParams> {
    match eaqecc_direct(code, budget) {
        Err(Error::NoLogicalQudits) => {
            let d = dual(code, InnerProduct::Hermitian)?;
            if d == *code {
                return Err(Error::NoLogicalQudits);
            }
            let mut p = eaqecc_direct(&d, budget)?;
            p.provenance.push("dual-containing source: parameters taken from the Hermitian dual".into());
            Ok(p)
        }
        other => other,
    }
}

/// The two EAQECCs coming from `C` and from `C^⊥H`.
pub fn eaqecc_pair(code: &LinearCode, budget: Budget) -> Result<(EaqeccParams, EaqeccParams)> {
    let d = dual(code, InnerProduct::Hermitian)?;
    Ok((eaqecc_direct(code, budget)?, eaqecc_direct(&d, budget)?))
}

pub fn subsystem_from_code(code: &LinearCode, budget: Budget) -> Result<SubsystemParams> {
    let q = base_q(code)?;
    let (n, k) = (code.n(), code.k());
    let h = hull(code, InnerProduct::Hermitian)?;
    if k + h.ell >= n {
        return Err(Error::DimensionConstraintViolated { k, ell: h.ell, n });
    }
    let hd = dual(&h.hull, InnerProduct::Hermitian)?;
    let (delta_lower, delta_exact) = relative_distance(&hd, code, budget)?;
    let mut p = SubsystemParams {
        q,
        n,
        kappa: n - k - h.ell,
        r: k - h.ell,
        delta_lower,
        delta_exact,
        pure: Purity::Unknown,
        source_k: k,
        source_ell: h.ell,
        provenance: vec![format!("subsystem from [{n},{k}] code with hull dimension {}", h.ell)],
    };
    p.settle_by_bound();
    p.pure = purity_of(p.delta_exact, &hd, budget)?;
    Ok(p)
}

#[derive(Debug, Clone, Default)]
pub struct PropagateOptions {
    /// Explicit index set; must lie in an information set of the hull.
    pub index_set: Option<Vec<usize>>,
    /// Lets the shortening rule run on an impure source. The distance
    /// guarantee is then dropped.
    pub allow_impure: bool,
}

/// Picks `S` for a propagation step: the first `s` hull pivots by default.
fn choose_s(code: &LinearCode, s: usize, opts: &PropagateOptions) -> Result<(usize, Vec<usize>)> {
    let h = hull(code, InnerProduct::Hermitian)?;
    if s < 1 || s > h.ell {
        return Err(Error::SOutOfRange { s, ell: h.ell });
    }
    if let Some(set) = &opts.index_set {
        let mut set = set.clone();
        set.sort_unstable();
        set.dedup();
        if set.len() != s {
            return Err(Error::ParameterOutOfRange(format!("index set has {} entries, s={s}", set.len())));
        }
        if !within_information_set(&h.hull, &set)? {
            return Err(Error::NotInHullInformationSet);
        }
        return Ok((h.ell, set));
    }
    Ok((h.ell, information_set(&h.hull)[..s].to_vec()))
}

fn derive(code: &LinearCode, set: &[usize], mode: DeriveMode) -> Result<LinearCode> {
    let out = hull_of_derived(code, set, mode, InnerProduct::Hermitian)?;
    debug_assert_eq!(out.regime, HullRegime::Exact);
    Ok(out.derived)
}

fn violation(what: &str, src: &dyn std::fmt::Display, got: &dyn std::fmt::Display) -> Error {
    Error::ContractViolation(format!("{what}: source {src}, derived {got}"))
}

/// Puncture (`[[n-s, kappa, >= delta; c+s]]`) or shorten
/// (`[[n-s, kappa+s, >= delta-s; c]]`, pure sources only) on `s` coordinates
/// of a hull information set, re-deriving the parameters from the new code.
pub fn propagate_eaqecc(
    code: &LinearCode,
    s: usize,
    mode: DeriveMode,
    budget: Budget,
    opts: &PropagateOptions,
) -> Result<EaqeccParams> {
    let src = eaqecc_direct(code, budget)?;
    if s == 0 {
        return Ok(src);
    }
    let (_, set) = choose_s(code, s, opts)?;
    let impure_override = mode == DeriveMode::Shorten && src.pure != Purity::Yes;
    if impure_override && !opts.allow_impure {
        return Err(Error::PurityRequired);
    }
    let derived = derive(code, &set, mode)?;
    let mut out = eaqecc_direct(&derived, budget)?;
    let (want_kappa, want_c, floor) = match mode {
        DeriveMode::Puncture => (src.kappa, src.c + s, src.delta_lower),
        DeriveMode::Shorten => (src.kappa + s, src.c, src.delta_lower.saturating_sub(s)),
    };
    if out.n != src.n - s || out.kappa != want_kappa || out.c != want_c {
        return Err(violation(&format!("{mode} s={s}"), &src, &out));
    }
    if impure_override {
        if out.delta_exact.is_none() {
            out.delta_lower = 0;
        }
        out.provenance.push("purity gate overridden; distance not guaranteed".into());
    } else if let Some(d) = out.delta_exact {
        if d < floor {
            return Err(violation(&format!("{mode} s={s} distance"), &src, &out));
        }
    } else {
        out.delta_lower = out.delta_lower.max(floor);
        out.settle_by_bound();
        out.pure = purity_of(out.delta_exact, &dual(&derived, InnerProduct::Hermitian)?, budget)?;
    }
    if src.optimal() && !impure_override && !out.optimal() {
        return Err(violation(&format!("{mode} s={s} optimality"), &src, &out));
    }
    let mut trail = src.provenance.clone();
    trail.push(format!("{mode} s={s} on {set:?}"));
    trail.extend(out.provenance.drain(1..));
    out.provenance = trail;
    Ok(out)
}

/// Puncture (`[[n-s, kappa, r+s, >= delta-s]]`) or shorten
/// (`[[n-s, kappa+s, r, >= delta-s]]`, pure sources only).
pub fn propagate_subsystem(
    code: &LinearCode,
    s: usize,
    mode: DeriveMode,
    budget: Budget,
    opts: &PropagateOptions,
) -> Result<SubsystemParams> {
    let src = subsystem_from_code(code, budget)?;
    if s == 0 {
        return Ok(src);
    }
    let (_, set) = choose_s(code, s, opts)?;
    let impure_override = mode == DeriveMode::Shorten && src.pure != Purity::Yes;
    if impure_override && !opts.allow_impure {
        return Err(Error::PurityRequired);
    }
    let derived = derive(code, &set, mode)?;
    let mut out = subsystem_from_code(&derived, budget)?;
    let (want_kappa, want_r) = match mode {
        DeriveMode::Puncture => (src.kappa, src.r + s),
        DeriveMode::Shorten => (src.kappa + s, src.r),
    };
    let floor = src.delta_lower.saturating_sub(s);
    if out.n != src.n - s || out.kappa != want_kappa || out.r != want_r {
        return Err(violation(&format!("{mode} s={s}"), &src, &out));
    }
    if impure_override {
        if out.delta_exact.is_none() {
            out.delta_lower = 0;
        }
        out.provenance.push("purity gate overridden; distance not guaranteed".into());
    } else if let Some(d) = out.delta_exact {
        if d < floor {
            return Err(violation(&format!("{mode} s={s} distance"), &src, &out));
        }
    } else {
        out.delta_lower = out.delta_lower.max(floor);
        out.settle_by_bound();
        let hd = dual(&hull(&derived, InnerProduct::Hermitian)?.hull, InnerProduct::Hermitian)?;
        out.pure = purity_of(out.delta_exact, &hd, budget)?;
    }
    if src.optimal() && !impure_override && s < src.delta() && !out.optimal() {
        return Err(violation(&format!("{mode} s={s} optimality"), &src, &out));
    }
    let mut trail = src.provenance.clone();
    trail.push(format!("{mode} s={s} on {set:?}"));
    trail.extend(out.provenance.drain(1..));
    out.provenance = trail;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grslab::{grs_code, grscon1, grscon2};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn grscon1_q2_gives_4_1_3_1() {
        let c = grs_code(&grscon1(2).unwrap()).unwrap();
        let p = eaqecc_from_code(&c, b()).unwrap();
        assert_eq!((p.n, p.kappa, p.delta_exact, p.c), (4, 1, Some(3), 1));
        assert_eq!(p.pure, Purity::Yes);
        assert!(p.optimal());
        let qmds = p.check_bounds().into_iter().find(|v| v.bound_id == BoundId::EaQmds).unwrap();
        assert_eq!(qmds.slack, 0);
        assert_eq!(2 * 3, 4 + 1 - 1 + 2);
    }

    #[test]
    fn self_orthogonal_code_gives_stabilizer_code() {
        // the constant code over GF(4) of length 4 is Hermitian self-orthogonal
        let hull_code = hull(&grs_code(&grscon1(2).unwrap()).unwrap(), InnerProduct::Hermitian).unwrap().hull;
        let p = eaqecc_from_code(&hull_code, b()).unwrap();
        assert_eq!(p.c, 0);
        assert_eq!(p.kappa, 2);
    }

    #[test]
    fn mds_pair() {
        let c = grs_code(&grscon2(3, 2).unwrap()).unwrap();
        let (a, d) = eaqecc_pair(&c, b()).unwrap();
        let (n, k, ell) = (8, 2, 1);
        assert_eq!((a.n, a.kappa, a.delta(), a.c), (n, n - k - ell, k + 1, k - ell));
        assert_eq!((d.n, d.kappa, d.delta(), d.c), (n, k - ell, n - k + 1, n - k - ell));
    }

    #[test]
    fn subsystem_examples() {
        let c = grs_code(&grscon1(3).unwrap()).unwrap();
        let p = subsystem_from_code(&c, b()).unwrap();
        assert_eq!((p.n, p.kappa, p.r, p.delta_exact), (9, 4, 1, Some(3)));
        assert_eq!(p.check_bounds()[0].slack, 0);
        assert!(p.optimal());
        let c = grs_code(&grscon2(3, 2).unwrap()).unwrap();
        let p = subsystem_from_code(&c, b()).unwrap();
        assert_eq!((p.n, p.kappa, p.r, p.delta_exact), (8, 5, 1, Some(2)));
    }

    #[test]
    fn lcd_source_has_no_hull() {
        let c = grs_code(&grscon1(2).unwrap()).unwrap();
        let lcd = crate::codekit::make_lcd(&c, DeriveMode::Puncture, InnerProduct::Hermitian).unwrap();
        let p = subsystem_from_code(&lcd, b()).unwrap();
        assert_eq!((p.r, p.kappa), (lcd.k(), lcd.n() - lcd.k()));
    }

    #[test]
    fn propagation_examples() {
        let c = grs_code(&grscon1(2).unwrap()).unwrap();
        let o = PropagateOptions::default();
        let p = propagate_eaqecc(&c, 1, DeriveMode::Puncture, b(), &o).unwrap();
        assert_eq!((p.n, p.kappa, p.delta(), p.c), (3, 1, 3, 2));
        let p = propagate_eaqecc(&c, 1, DeriveMode::Shorten, b(), &o).unwrap();
        assert_eq!((p.n, p.kappa, p.delta(), p.c), (3, 2, 2, 1));
        assert_eq!(propagate_eaqecc(&c, 0, DeriveMode::Shorten, b(), &o).unwrap(), eaqecc_from_code(&c, b()).unwrap());
        assert_eq!(
            propagate_eaqecc(&c, 2, DeriveMode::Puncture, b(), &o).unwrap_err(),
            Error::SOutOfRange { s: 2, ell: 1 }
        );
        let c3 = grs_code(&grscon1(3).unwrap()).unwrap();
        let p = propagate_subsystem(&c3, 1, DeriveMode::Puncture, b(), &o).unwrap();
        assert_eq!((p.n, p.kappa, p.r, p.delta()), (8, 4, 2, 2));
        let p = propagate_subsystem(&c3, 1, DeriveMode::Shorten, b(), &o).unwrap();
        assert_eq!((p.n, p.kappa, p.r, p.delta()), (8, 5, 1, 2));
    }

    #[test]
    fn bounds_arithmetic() {
        let v = eaqecc_bounds(9, 4, 1, 0, true);
        assert!(v.iter().all(|x| x.satisfied));
        let ea2 = v.iter().find(|x| x.bound_id == BoundId::Ea2).unwrap();
        assert_eq!(ea2.slack, 9 - 1 + 1 - 4);
        // EA-3 only applies once delta - 1 >= n/2
        assert!(eaqecc_bounds(4, 1, 3, 1, true).iter().any(|x| x.bound_id == BoundId::Ea3));
        assert!(!eaqecc_bounds(8, 5, 3, 1, true).iter().any(|x| x.bound_id == BoundId::Ea3));
        assert_eq!(subsystem_bounds(9, 4, 1, 3, true)[0].slack, 0);
        assert_eq!(subsystem_bounds(9, 4, 1, 3, false)[0].tight, None);
    }

    #[test]
    fn record_shape() {
        let c = grs_code(&grscon1(2).unwrap()).unwrap();
        let p = eaqecc_from_code(&c, b()).unwrap();
        let v = serde_json::to_value(p.record()).unwrap();
        assert_eq!(v["type"], "eaqecc");
        assert_eq!(v["q"], 2);
        assert_eq!(v["n"], 4);
        assert_eq!(v["kappa"], 1);
        assert_eq!(v["delta"], 3);
        assert_eq!(v["delta_exact"], true);
        assert_eq!(v["c"], 1);
        assert_eq!(v["pure"], true);
        assert_eq!(v["optimal"], true);
        let back: ParamRecord = serde_json::from_value(v).unwrap();
        assert_eq!(back, p.record());
    }
}
