//! Randomized property suites over GF(4) and GF(9), shared by the
//! property tests and the acceptance runner. Each suite returns the number
//! of trials run, or a description of the first failure.
#![allow(dead_code)]

use hullkit::{
    apply_monomial, dual, hull, hull_of_derived, puncture, quadratic_field, shorten, DeriveMode, HullRegime,
    InnerProduct, LinearCode, MonomialMap,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::common::*;

pub type SuiteResult = Result<usize, String>;
pub type Suite = fn(u32, usize, &mut rand_chacha::ChaCha8Rng) -> SuiteResult;

const IPS: [(InnerProduct, bool); 2] = [(InnerProduct::Euclidean, false), (InnerProduct::Hermitian, true)];

/// A random code of length 3..=12, half of the time with a nonzero
/// Hermitian hull.
fn some_code(rng: &mut ChaCha8Rng, q: u32, kmax: usize) -> LinearCode {
    let n = rng.gen_range(3..=12);
    if rng.gen_bool(0.5) {
        loop {
            let c = random_code_with_hull(rng, q, n);
            if c.k() <= kmax {
                return c;
            }
        }
    }
    let f = quadratic_field(q).unwrap();
    let k = rng.gen_range(1..n.min(kmax + 1));
    random_code(rng, &f, n, k)
}

fn any_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let all: Vec<usize> = (0..n).collect();
    let s = rng.gen_range(0..n);
    random_subset(rng, &all, s)
}

/// `(C^⊥)_S = (C^S)^⊥` and `(C^⊥)^S = (C_S)^⊥`, for both inner products.
pub fn duality(q: u32, trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    for t in 0..trials {
        let c = some_code(rng, q, 11);
        let s = any_subset(rng, c.n());
        for (ip, herm) in IPS {
            let d = dual(&c, ip).map_err(|e| e.to_string())?;
            let lhs1 = shorten(&d, &s).unwrap();
            let rhs1 = dual_oracle(&puncture_oracle(&c, &s), herm);
            let lhs2 = puncture(&d, &s).unwrap();
            let rhs2 = dual_oracle(&shorten_oracle(&c, &s), herm);
            if lhs1 != rhs1 || lhs2 != rhs2 {
                return Err(format!("trial {t}: {ip:?} duality fails for {c:?} S={s:?}"));
            }
        }
    }
    Ok(trials)
}

/// Shortened hull sits in both derived hulls for any `S`; equality with
/// dimension `ell - s` when `S` lies in a hull information set.
pub fn hull_of_derived_codes(q: u32, trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    for t in 0..trials {
        let c = some_code(rng, q, 11);
        for (ip, herm) in IPS {
            let h = hull_oracle(&c, herm);
            let s = any_subset(rng, c.n());
            let short_h = shorten_oracle(&h, &s);
            for derived in [puncture_oracle(&c, &s), shorten_oracle(&c, &s)] {
                if !short_h.is_subcode_of(&hull_oracle(&derived, herm)) {
                    return Err(format!("trial {t}: {ip:?} containment fails for {c:?} S={s:?}"));
                }
            }
            let lib = hull_of_derived(&c, &s, DeriveMode::Puncture, ip).map_err(|e| format!("trial {t}: {e}"))?;
            if !lib.shortened_hull.is_subcode_of(&lib.report.hull) {
                return Err(format!("trial {t}: library containment fails"));
            }

            let info = random_information_set(rng, &h);
            let size = rng.gen_range(0..=info.len());
            let s = random_subset(rng, &info, size);
            let short_h = shorten_oracle(&h, &s);
            for mode in [DeriveMode::Puncture, DeriveMode::Shorten] {
                let derived = match mode {
                    DeriveMode::Puncture => puncture_oracle(&c, &s),
                    DeriveMode::Shorten => shorten_oracle(&c, &s),
                };
                let dh = hull_oracle(&derived, herm);
                if dh != short_h || dh.k() != h.k() - s.len() {
                    return Err(format!("trial {t}: {ip:?} {mode} equality fails for {c:?} S={s:?}"));
                }
                let lib = hull_of_derived(&c, &s, mode, ip).map_err(|e| format!("trial {t}: {e}"))?;
                if lib.regime != HullRegime::Exact || lib.report.hull != dh {
                    return Err(format!("trial {t}: library disagrees on {mode} S={s:?}"));
                }
            }
        }
    }
    Ok(trials)
}

/// Hulls follow permutations, and monomial maps whose scalars satisfy
/// `a^(q+1) = 1` (Hermitian) or `a^2 = 1` (Euclidean).
pub fn permutation_equivariance(q: u32, trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    let f = quadratic_field(q).unwrap();
    let unit_norm: Vec<_> = f.nonzero_elements().filter(|&a| f.pow(a, u64::from(q) + 1) == f.one()).collect();
    let unit_square: Vec<_> = f.nonzero_elements().filter(|&a| f.mul(a, a) == f.one()).collect();
    for t in 0..trials {
        let c = some_code(rng, q, 11);
        let n = c.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        for (ip, herm) in IPS {
            let pool = if herm { &unit_norm } else { &unit_square };
            let scalars =
                if rng.gen_bool(0.5) { vec![f.one(); n] } else { (0..n).map(|_| *pool.choose(rng).unwrap()).collect() };
            let m = MonomialMap::new(perm.clone(), scalars).unwrap();
            let lhs = hull(&apply_monomial(&c, &m).unwrap(), ip).unwrap().hull;
            let mapped: Rows = rows_of(&hull_oracle(&c, herm)).iter().map(|r| m.apply_vec(&f, r)).collect();
            let rhs = code(&f, mapped, n);
            if lhs != rhs {
                return Err(format!("trial {t}: {ip:?} hull not equivariant for {c:?} perm={perm:?}"));
            }
        }
    }
    Ok(trials)
}

/// Lengths, dimensions and distance bounds of punctured and shortened codes.
pub fn derived_parameters(q: u32, trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    let kmax = if q == 2 { 6 } else { 4 };
    for t in 0..trials {
        let c = loop {
            let n = rng.gen_range(3..=12);
            let c = random_code_with_hull(rng, q, n);
            if c.k() <= kmax {
                break c;
            }
        };
        let (n, k) = (c.n(), c.k());
        let f = c.field().clone();
        let d = distance_oracle(&c).unwrap();
        let h = hull_oracle(&c, true);
        let d2 = min_dependent_columns(&f, &conj_rows(&f, &rows_of(&h)), n);
        let dist = |x: &LinearCode| distance_oracle(x).unwrap_or(usize::MAX);
        let fail = |what: &str, s: &[usize]| Err(format!("trial {t}: {what} for {c:?} (d={d}, d2={d2}) S={s:?}"));

        let info = random_information_set(rng, &h);
        let size = rng.gen_range(1..=info.len());
        let s = random_subset(rng, &info, size);
        let p = puncture(&c, &s).unwrap();
        let sh = shorten(&c, &s).unwrap();
        if p.n() != n - size || p.k() != k || dist(&p) + size < d {
            return fail("punctured code on a hull information set", &s);
        }
        if sh.n() != n - size || sh.k() != k - size || dist(&sh) < d {
            return fail("shortened code on a hull information set", &s);
        }

        if d2 > 1 {
            let all: Vec<usize> = (0..n).collect();
            let size = rng.gen_range(1..d2.min(n));
            let s = random_subset(rng, &all, size);
            let sh = shorten(&c, &s).unwrap();
            if sh.k() != k - size || dist(&sh) < d {
                return fail("shortened code with s < d2", &s);
            }
            if d2 <= d {
                let p = puncture(&c, &s).unwrap();
                if p.k() != k || dist(&p) + size < d {
                    return fail("punctured code with s < d2 <= d", &s);
                }
            }
        }
    }
    Ok(trials)
}

/// `ell = k - rank(G G'^T)` against the intersection `C ∩ C^⊥`.
pub fn hull_dimension(q: u32, trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    for t in 0..trials {
        let c = some_code(rng, q, 11);
        let f = c.field().clone();
        let g = rows_of(&c);
        for (ip, herm) in IPS {
            let g2 = if herm { conj_rows(&f, &g) } else { g.clone() };
            let gram: Rows = g
                .iter()
                .map(|u| {
                    g2.iter().map(|v| u.iter().zip(v).fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect()
                })
                .collect();
            let ell = c.k() - rank(&f, &gram, c.k());
            let inter = hull_oracle(&c, herm);
            let lib = hull(&c, ip).unwrap();
            if ell != inter.k() || lib.ell != ell || lib.hull != inter {
                return Err(format!(
                    "trial {t}: {ip:?} formula {ell}, intersection {}, library {}",
                    inter.k(),
                    lib.ell
                ));
            }
        }
    }
    Ok(trials)
}

/// Brute-force `[[n, kappa, delta; c]]` and purity of a code over GF(q^2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleEa {
    pub n: usize,
    pub kappa: usize,
    pub c: usize,
    pub delta: usize,
    pub pure: bool,
}

pub fn oracle_eaqecc(c: &LinearCode) -> Option<OracleEa> {
    let h = hull_oracle(c, true);
    let d = dual_oracle(c, true);
    let (n, k, ell) = (c.n(), c.k(), h.k());
    let kappa = (n + k - ell).checked_sub(2 * k)?;
    if kappa == 0 {
        return None;
    }
    let delta = relative_weight_oracle(&d, &h)?;
    Some(OracleEa { n, kappa, c: k - ell, delta, pure: distance_oracle(&d) == Some(delta) })
}

/// Source codes over GF(4) with `ell >= 1` and `kappa >= 1`.
fn propagation_source(rng: &mut ChaCha8Rng) -> (LinearCode, OracleEa, usize) {
    loop {
        let n = rng.gen_range(4..=9);
        let c = random_code_with_hull(rng, 2, n);
        let ell = hull_oracle(&c, true).k();
        if c.k() + ell < n {
            if let Some(o) = oracle_eaqecc(&c) {
                return (c, o, ell);
            }
        }
    }
}

/// Puncture and shorten rules against brute force. Returns the number of
/// trials; the count of impure shorten attempts goes to `gated`.
pub fn propagation_contracts(trials: usize, rng: &mut ChaCha8Rng, gated: &mut usize) -> SuiteResult {
    use hullkit::qparams::{propagate_eaqecc, PropagateOptions, Purity};
    use hullkit::{Budget, Error};
    for t in 0..trials {
        let (c, src, ell) = propagation_source(rng);
        let h = hull_oracle(&c, true);
        let s = rng.gen_range(1..=ell);
        let set = if rng.gen_bool(0.5) {
            h.pivots()[..s].to_vec()
        } else {
            let info = random_information_set(rng, &h);
            random_subset(rng, &info, s)
        };
        let opts = PropagateOptions { index_set: Some(set.clone()), allow_impure: false };
        let fail = |what: String| Err(format!("trial {t}: {what} for {c:?} S={set:?} source {src:?}"));

        let lib_src = propagate_eaqecc(&c, 0, DeriveMode::Puncture, Budget::default(), &opts);
        match lib_src {
            Ok(p)
                if (p.n, p.kappa, p.c, p.delta_exact) == (src.n, src.kappa, src.c, Some(src.delta))
                    && (p.pure == Purity::Yes) == src.pure => {}
            other => return fail(format!("source parameters {other:?}")),
        }

        let Some(p) = oracle_eaqecc(&puncture_oracle(&c, &set)) else {
            return fail("punctured code lost its logical qudits".into());
        };
        if (p.n, p.kappa, p.c) != (src.n - s, src.kappa, src.c + s) || p.delta < src.delta {
            return fail(format!("puncture gave {p:?}"));
        }
        match propagate_eaqecc(&c, s, DeriveMode::Puncture, Budget::default(), &opts) {
            Ok(l) if (l.n, l.kappa, l.c, l.delta_exact) == (p.n, p.kappa, p.c, Some(p.delta)) => {}
            other => return fail(format!("library puncture {other:?} vs {p:?}")),
        }

        let lib_short = propagate_eaqecc(&c, s, DeriveMode::Shorten, Budget::default(), &opts);
        if src.pure {
            let Some(p) = oracle_eaqecc(&shorten_oracle(&c, &set)) else {
                return fail("shortened code lost its logical qudits".into());
            };
            if (p.n, p.kappa, p.c) != (src.n - s, src.kappa + s, src.c) || p.delta + s < src.delta {
                return fail(format!("shorten gave {p:?}"));
            }
            match lib_short {
                Ok(l) if (l.n, l.kappa, l.c, l.delta_exact) == (p.n, p.kappa, p.c, Some(p.delta)) => {}
                other => return fail(format!("library shorten {other:?} vs {p:?}")),
            }
        } else {
            if lib_short != Err(Error::PurityRequired) {
                return fail(format!("impure shorten was not gated: {lib_short:?}"));
            }
            *gated += 1;
        }
    }
    Ok(trials)
}

/// `make_lcd` leaves no hull, for both inner products and both modes.
pub fn lcd_production(trials: usize, rng: &mut ChaCha8Rng) -> SuiteResult {
    use hullkit::make_lcd;
    for t in 0..trials {
        let q = if t % 2 == 0 { 2 } else { 3 };
        let c = some_code(rng, q, 11);
        for (ip, herm) in IPS {
            for mode in [DeriveMode::Puncture, DeriveMode::Shorten] {
                let lcd = make_lcd(&c, mode, ip).map_err(|e| format!("trial {t}: {e}"))?;
                let ell = hull_oracle(&c, herm).k();
                let expect_k = match mode {
                    DeriveMode::Puncture => c.k(),
                    DeriveMode::Shorten => c.k() - ell,
                };
                if hull_oracle(&lcd, herm).k() != 0 || lcd.n() != c.n() - ell || lcd.k() != expect_k {
                    return Err(format!("trial {t}: {ip:?} {mode} left {lcd:?} from {c:?}"));
                }
            }
        }
    }
    Ok(trials)
}
