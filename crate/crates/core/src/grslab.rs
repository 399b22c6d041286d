//! Generalized Reed-Solomon codes over GF(q^2) with MDS Hermitian hulls,
//! and the q-ary extended cyclic codes that control them.
//!
//! Throughout, `b = (a^0, ..., a^(q^2-2), 0)` is the standard list of
//! evaluation points and position `r < q^2 - 1` carries `a^r`.

use std::collections::{BTreeMap, BTreeSet};

use crate::codekit::{hull, InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::fmatrix::FMatrix;
use crate::galois::{field_with_order, quadratic_field, Felt, Field};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsSpec {
    pub field: Field,
    pub k: usize,
    pub b: Vec<Felt>,
    pub a: Vec<Felt>,
}

impl GrsSpec {
    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Same points and multipliers, different dimension.
    pub fn with_k(&self, k: usize) -> GrsSpec {
        GrsSpec { k, ..self.clone() }
    }

    /// Explicit text form `grs q=.. k=.. b=x,y,.. a=x,y,..`.
    pub fn to_text(&self) -> String {
        let list = |v: &[Felt]| v.iter().map(Felt::to_string).collect::<Vec<_>>().join(",");
        let q = self.field.base_order().unwrap_or(self.field.order());
        format!("grs q={q} k={} b={} a={}", self.k, list(&self.b), list(&self.a))
    }
}

/// Rows `(a_i b_i^t)` for `t < k`, with `0^0 = 1`.
pub fn grs_code(spec: &GrsSpec) -> Result<LinearCode> {
    let f = &spec.field;
    if spec.a.len() != spec.b.len() {
        return Err(Error::LengthMismatch(spec.a.len(), spec.b.len()));
    }
    if spec.k > spec.n() {
        return Err(Error::ParameterOutOfRange(format!("k={} exceeds n={}", spec.k, spec.n())));
    }
    if spec.b.iter().collect::<BTreeSet<_>>().len() != spec.n() {
        return Err(Error::DuplicateEvaluationPoints);
    }
    if spec.a.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroMultiplier);
    }
    let rows = (0..spec.k)
        .map(|t| spec.a.iter().zip(&spec.b).map(|(&a, &b)| f.mul(a, f.pow(b, t as u64))).collect())
        .collect();
    LinearCode::from_rows(f, rows, spec.n())
}

/// `(a^0, ..., a^(q^2-2), 0)`.
pub fn standard_points(f: &Field) -> Vec<Felt> {
    let mut b: Vec<Felt> = (0..f.order() - 1).map(|e| f.alpha_pow(i64::from(e))).collect();
    b.push(f.zero());
    b
}

/// Description of the q-ary code E(D_{k,ell}) of length q^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtCyclicSpec {
    pub q: u32,
    pub k: usize,
    pub ell: usize,
    /// Exponents modulo q^2 - 1, sorted.
    pub defining_set: Vec<u32>,
}

impl ExtCyclicSpec {
    pub fn new(q: u32, k: usize, ell: usize) -> Result<ExtCyclicSpec> {
        if ell > k || k > q as usize {
            return Err(Error::ParameterOutOfRange(format!("need ell <= k <= q, got ell={ell} k={k} q={q}")));
        }
        let n = q * q - 1;
        let pair = |i: usize, j: usize| (i as u32 + q * j as u32) % n;
        let mut d = BTreeSet::new();
        for i in 0..ell {
            for j in ell..k {
                d.insert(pair(i, j));
                d.insert(pair(j, i));
            }
            for j in 0..ell {
                if i + j > 0 {
                    d.insert(pair(i, j));
                }
            }
        }
        Ok(ExtCyclicSpec { q, k, ell, defining_set: d.into_iter().collect() })
    }

    pub fn length(&self) -> usize {
        (self.q * self.q) as usize
    }

    /// Parity checks over GF(q^2): the all-ones row, then `(a^(s u))_u, 0`.
    pub fn parity_check(&self) -> Result<FMatrix> {
        let f = quadratic_field(self.q)?;
        let n = self.length();
        let mut rows = vec![vec![f.one(); n]];
        for &s in &self.defining_set {
            let mut row: Vec<Felt> = (0..n - 1).map(|u| f.alpha_pow(i64::from(s) * u as i64)).collect();
            row.push(f.zero());
            rows.push(row);
        }
        FMatrix::from_rows(&f, rows, n)
    }
}

/// Subfield subcode over GF(q) of the kernel of `rows` (over GF(q^2)).
///
/// The conjugate of every row is appended, which makes the row space stable
/// under conjugation; the RREF of the kernel then has entries in GF(q).
fn subfield_kernel(rows: &FMatrix, q: u32) -> Result<LinearCode> {
    let big = rows.field().clone();
    let small = field_with_order(q)?;
    let stacked = rows.vstack(&rows.conjugate(q)?)?;
    let ker = stacked.nullspace();
    let mut out = Vec::with_capacity(ker.rows());
    for i in 0..ker.rows() {
        let row = ker.row(i).iter().map(|&x| big.restrict(&small, x)).collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    LinearCode::from_rows(&small, out, rows.cols())
}

pub fn build_ext_cyclic(spec: &ExtCyclicSpec) -> Result<LinearCode> {
    subfield_kernel(&spec.parity_check()?, spec.q)
}

/// Codewords `x` over GF(q) with `sum x_i u_i v_i^q = 0` for all `u` in
/// `inner` and `v` in `outer`.
pub fn rains_p_pair(inner: &LinearCode, outer: &LinearCode) -> Result<LinearCode> {
    if inner.n() != outer.n() {
        return Err(Error::LengthMismatch(inner.n(), outer.n()));
    }
    let f = inner.field().clone();
    let q = f.base_order().ok_or(Error::NotQuadraticExtension { order: f.order() })?;
    let n = inner.n();
    let mut rows = Vec::new();
    for i in 0..inner.k() {
        for j in 0..outer.k() {
            let u = inner.gen().row(i);
            let v = outer.gen().row(j);
            rows.push(u.iter().zip(v).map(|(&x, &y)| f.mul(x, f.conj(y))).collect());
        }
    }
    subfield_kernel(&FMatrix::from_rows(&f, rows, n)?, q)
}

pub fn rains_p(c: &LinearCode) -> Result<LinearCode> {
    rains_p_pair(c, c)
}

/// Largest `x + y` for which `{a + b i + c j : i <= x-2, j <= y}` lies in the
/// defining set with `b`, `c` units mod `n`. With `search = false` only the
/// BCH case `y = 0` is tried.
pub fn ht_bound(defining_set: &[u32], n: u32, search: bool) -> usize {
    let d: BTreeSet<u32> = defining_set.iter().map(|&x| x % n).collect();
    if d.is_empty() {
        return 1;
    }
    let units: Vec<u32> = (1..n).filter(|&b| gcd(u64::from(b), u64::from(n)) == 1).collect();
    // run(a, b): how many of a, a+b, a+2b, ... lie in D, capped at n
    let run = |a: u32, b: u32| {
        let mut len = 0;
        while len < n as usize && d.contains(&((a + b * len as u32) % n)) {
            len += 1;
        }
        len
    };
    let mut best = 1;
    for &a in &d {
        for &b in &units {
            let r0 = run(a, b);
            best = best.max(r0 + 1);
            if !search {
                continue;
            }
            for &c in &units {
                let mut width = r0;
                for y in 1..n as usize {
                    width = width.min(run((a + c * y as u32) % n, b));
                    if width == 0 {
                        break;
                    }
                    best = best.max(width + 1 + y);
                }
            }
        }
    }
    best
}

/// Coefficients `theta` of the trace description of E(D_{k,k-1}) \ E(D_{k,k}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceAssignment {
    /// `theta_{t,t}` for `t = k-1, ..., q-1`, in GF(q) (as GF(q^2) elements).
    pub theta_diag: Vec<Felt>,
    /// `theta_{i,j}` for `(i, j)` in `T`; missing pairs are zero.
    pub theta_off: BTreeMap<(usize, usize), Felt>,
}

impl TraceAssignment {
    /// `theta_{k-1,k-1} = 1`, everything else zero.
    pub fn leading(q: u32, k: usize) -> Result<TraceAssignment> {
        let f = quadratic_field(q)?;
        if k == 0 || k > q as usize {
            return Err(Error::ParameterOutOfRange(format!("k={k} for q={q}")));
        }
        let mut diag = vec![f.zero(); q as usize - k + 1];
        diag[0] = f.one();
        Ok(TraceAssignment { theta_diag: diag, theta_off: BTreeMap::new() })
    }

    /// The index set `T = {(i, j) : k <= i <= q-1, j < k or j > i}`.
    pub fn index_set(q: u32, k: usize) -> Vec<(usize, usize)> {
        let q = q as usize;
        (k..q).flat_map(|i| (0..k).chain(i + 1..q).map(move |j| (i, j))).collect()
    }
}

/// Evaluates the trace form: `c_r = sum_t theta_tt a^(-r t (q+1)) +
/// sum_T Tr(theta_ij a^(-r (i + q j)))`, followed by the overall parity
/// `-sum c_r`, which works out to `theta_{q-1,q-1}`.
pub fn trace_codeword(q: u32, k: usize, t: &TraceAssignment) -> Result<Vec<Felt>> {
    let f = quadratic_field(q)?;
    let small = field_with_order(q)?;
    if k < 2 || k >= q as usize {
        return Err(Error::InvalidAssignment(format!("need 2 <= k < q, got k={k} q={q}")));
    }
    let bad = |m: &str| Err(Error::InvalidAssignment(m.into()));
    if t.theta_diag.len() != q as usize - k + 1 {
        return bad("theta_diag must cover t = k-1, ..., q-1");
    }
    if t.theta_diag.iter().chain(t.theta_off.values()).any(|&x| !f.contains(x)) {
        return bad("coefficients must lie in GF(q^2)");
    }
    if t.theta_diag.iter().any(|&x| !f.in_subfield(x, q)) {
        return bad("diagonal coefficients must lie in GF(q)");
    }
    if t.theta_diag[0].is_zero() {
        return bad("theta_{k-1,k-1} must be nonzero");
    }
    let allowed: BTreeSet<(usize, usize)> = TraceAssignment::index_set(q, k).into_iter().collect();
    if let Some(key) = t.theta_off.keys().find(|key| !allowed.contains(key)) {
        return Err(Error::InvalidAssignment(format!("{key:?} is not in T")));
    }
    let nq = (q * q - 1) as i64;
    let q1 = i64::from(q) + 1;
    let mut out = Vec::with_capacity(nq as usize + 1);
    let mut total = f.zero();
    for r in 0..nq {
        let mut c = f.zero();
        for (off, &theta) in t.theta_diag.iter().enumerate() {
            let tt = (k - 1 + off) as i64;
            c = f.add(c, f.mul(theta, f.alpha_pow(-r * tt * q1)));
        }
        for (&(i, j), &theta) in &t.theta_off {
            let y = f.mul(theta, f.alpha_pow(-r * (i as i64 + i64::from(q) * j as i64)));
            c = f.add(c, f.add(y, f.conj(y)));
        }
        total = f.add(total, c);
        out.push(c);
    }
    out.push(f.neg(total));
    out.into_iter().map(|x| f.restrict(&small, x)).collect()
}

/// GRS spec on the support of `x`, with multipliers solving `a^(q+1) = x_i`.
pub fn hull_mds_from_codeword(q: u32, k: usize, x: &[Felt]) -> Result<GrsSpec> {
    hull_mds_with_choice(q, k, x, |_, _| 0)
}

/// As [`hull_mds_from_codeword`], with `pick(position, q + 1)` selecting which
/// norm preimage (in exponent order) to use.
pub fn hull_mds_with_choice(
    q: u32,
    k: usize,
    x: &[Felt],
    mut pick: impl FnMut(usize, usize) -> usize,
) -> Result<GrsSpec> {
    let f = quadratic_field(q)?;
    let small = field_with_order(q)?;
    if k < 1 || k > q as usize {
        return Err(Error::ParameterOutOfRange(format!("k={k} for q={q}")));
    }
    if x.len() != (q * q) as usize {
        return Err(Error::LengthMismatch(x.len(), (q * q) as usize));
    }
    let upper = build_ext_cyclic(&ExtCyclicSpec::new(q, k, k - 1)?)?;
    let lower = build_ext_cyclic(&ExtCyclicSpec::new(q, k, k)?)?;
    if !upper.contains(x) || lower.contains(x) {
        return Err(Error::NotInDifferenceSet);
    }
    let points = standard_points(&f);
    let mut b = Vec::new();
    let mut a = Vec::new();
    for (pos, &xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let target = f.embed(&small, xi)?;
        let pre = f.norm_preimages(target, q).map_err(|_| Error::NormUnsolvable)?;
        let choice = pick(pos, pre.len()).min(pre.len() - 1);
        b.push(points[pos]);
        a.push(pre[choice]);
    }
    if b.len() < k {
        return Err(Error::ParameterOutOfRange(format!("support {} is smaller than k={k}", b.len())));
    }
    let spec = GrsSpec { field: f, k, b, a };
    verify_hull_is_grs(&spec)?;
    Ok(spec)
}

/// Checks `Hull(GRS_k) = GRS_{k-1}` for `spec`.
pub fn verify_hull_is_grs(spec: &GrsSpec) -> Result<()> {
    let h = hull(&grs_code(spec)?, InnerProduct::Hermitian)?;
    if h.hull != grs_code(&spec.with_k(spec.k - 1))? {
        return Err(Error::ContractViolation(format!(
            "hull of the length-{} GRS code has dimension {}, not GRS_{}",
            spec.n(),
            h.ell,
            spec.k - 1
        )));
    }
    Ok(())
}

fn smallest_preimage(f: &Field, q: u32, x: Felt) -> Result<Felt> {
    Ok(f.norm_preimages(x, q).map_err(|_| Error::NormUnsolvable)?[0])
}

/// Exponents `i + ((q-1)/s) j` with `1 <= i < (q-1)/s`, `0 <= j < (q+1)s`,
/// i.e. the residues mod q^2-1 that are not multiples of `(q-1)/s`.
pub fn index_set_b(q: u32, s: u32) -> Vec<u32> {
    let step = (q - 1) / s;
    let mut v: Vec<u32> = (1..step).flat_map(|i| (0..(q + 1) * s).map(move |j| i + step * j)).collect();
    v.sort_unstable();
    v
}

/// `GRS_q(b, 1)` on all of GF(q^2).
pub fn grscon1(q: u32) -> Result<GrsSpec> {
    let f = quadratic_field(q)?;
    let b = standard_points(&f);
    Ok(GrsSpec { a: vec![f.one(); b.len()], b, k: q as usize, field: f })
}

/// Length q^2 - 1, `a_t = a^(-t(k-1))`; needs `1 < k < q`.
pub fn grscon2(q: u32, k: usize) -> Result<GrsSpec> {
    let f = quadratic_field(q)?;
    if !(1 < k && k < q as usize) {
        return Err(Error::ParameterOutOfRange(format!("grscon2 needs 1 < k < q, got k={k} q={q}")));
    }
    let n = i64::from(f.order() - 1);
    let b = (0..n).map(|t| f.alpha_pow(t)).collect();
    let a = (0..n).map(|t| f.alpha_pow(-t * (k as i64 - 1))).collect();
    Ok(GrsSpec { field: f, k, b, a })
}

/// Length q^2 - s(q+1) with `s = gcd(k-1, q-1)`; needs `k < q`.
pub fn grscon3(q: u32, k: usize) -> Result<GrsSpec> {
    let f = quadratic_field(q)?;
    if !(1 <= k && k < q as usize) {
        return Err(Error::ParameterOutOfRange(format!("grscon3 needs 1 <= k < q, got k={k} q={q}")));
    }
    let s = gcd(k as u64 - 1, u64::from(q) - 1) as u32;
    let q1 = i64::from(q) + 1;
    let mut b = Vec::new();
    let mut a = Vec::new();
    for l in index_set_b(q, s) {
        let l = i64::from(l);
        let x = f.sub(f.alpha_pow(-l * (k as i64 - 1) * q1), f.one());
        b.push(f.alpha_pow(l));
        a.push(smallest_preimage(&f, q, x)?);
    }
    // a^(q+1) = -1, which is 1 in characteristic 2
    b.push(f.zero());
    a.push(smallest_preimage(&f, q, f.minus_one())?);
    Ok(GrsSpec { field: f, k, b, a })
}

/// Length (q+1)(q-1-s) with `s = gcd(m-k+1, q-1)`; needs `k < q` and
/// `k-1 < m < q-1`. The multipliers solve
/// `a_l^(q+1) = a^(-l(k-1)(q+1)) - a^(-l m (q+1))`.
pub fn grscon4(q: u32, k: usize, m: usize) -> Result<GrsSpec> {
    grscon4_with(q, k, m, |f, l| f.alpha_pow(-l * m as i64 * (i64::from(q) + 1)))
}

/// GRScon4 with the subtracted term replaced by `sub(field, l)`.
pub fn grscon4_with(q: u32, k: usize, m: usize, sub: impl Fn(&Field, i64) -> Felt) -> Result<GrsSpec> {
    let f = quadratic_field(q)?;
    if !(1 <= k && k < q as usize && k <= m && m + 1 < q as usize) {
        return Err(Error::ParameterOutOfRange(format!(
            "grscon4 needs k < q and k-1 < m < q-1, got k={k} m={m} q={q}"
        )));
    }
    let s = gcd((m - k + 1) as u64, u64::from(q) - 1) as u32;
    if q - 1 == s {
        return Err(Error::EmptyConstruction);
    }
    let q1 = i64::from(q) + 1;
    let mut b = Vec::new();
    let mut a = Vec::new();
    for l in index_set_b(q, s) {
        let l = i64::from(l);
        let x = f.sub(f.alpha_pow(-l * (k as i64 - 1) * q1), sub(&f, l));
        b.push(f.alpha_pow(l));
        a.push(smallest_preimage(&f, q, x)?);
    }
    debug_assert_eq!(b.len() as u32, (q + 1) * (q - 1 - s));
    Ok(GrsSpec { field: f, k, b, a })
}

/// Parses `grscon1 q=..`, `grscon2 q=.. k=..`, `grscon3 q=.. k=..`,
/// `grscon4 q=.. k=.. m=..`, or `grs q=.. k=.. b=.. a=..`.
pub fn parse_construction(text: &str) -> Result<GrsSpec> {
    let mut words = text.split_whitespace();
    let name = words.next().ok_or_else(|| Error::Parse("empty construction".into()))?;
    let mut kv = BTreeMap::new();
    for w in words {
        let (key, val) = w.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {w:?}")))?;
        kv.insert(key, val);
    }
    let num = |key: &str| -> Result<u64> {
        kv.get(key)
            .ok_or_else(|| Error::Parse(format!("missing {key}=")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad value for {key}")))
    };
    let q = num("q")? as u32;
    match name {
        "grscon1" => grscon1(q),
        "grscon2" => grscon2(q, num("k")? as usize),
        "grscon3" => grscon3(q, num("k")? as usize),
        "grscon4" => grscon4(q, num("k")? as usize, num("m")? as usize),
        "grs" => {
            let f = quadratic_field(q)?;
            let list = |key: &str| -> Result<Vec<Felt>> {
                kv.get(key)
                    .ok_or_else(|| Error::Parse(format!("missing {key}=")))?
                    .split(',')
                    .map(|e| f.parse_elem(e))
                    .collect()
            };
            let spec = GrsSpec { k: num("k")? as usize, b: list("b")?, a: list("a")?, field: f.clone() };
            grs_code(&spec)?;
            Ok(spec)
        }
        other => Err(Error::Parse(format!("unknown construction {other:?}"))),
    }
}
