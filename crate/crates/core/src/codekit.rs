//! Linear codes, duals, hulls, puncturing and shortening.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmatrix::FMatrix;
use crate::galois::{parse_field_name, Felt, Field};
use crate::weights;

/// A linear code stored by its canonical RREF generator matrix, so two codes
/// are equal exactly when their generators are.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: FMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    pub fn from_generator(g: &FMatrix) -> LinearCode {
        let (gen, pivots) = g.rref();
        LinearCode { gen, pivots }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Felt>>, n: usize) -> Result<LinearCode> {
        Ok(LinearCode::from_generator(&FMatrix::from_rows(field, rows, n)?))
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_generator(&FMatrix::zeros(field, 0, n))
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_generator(&FMatrix::identity(field, n))
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn gen(&self) -> &FMatrix {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Message coordinates of `v`, or `None` if `v` is not a codeword.
    pub fn coordinates(&self, v: &[Felt]) -> Option<Vec<Felt>> {
        if v.len() != self.n() {
            return None;
        }
        let f = self.field();
        let coeffs: Vec<Felt> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (i, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, &g) in r.iter_mut().zip(self.gen.row(i)) {
                *x = f.sub(*x, f.mul(c, g));
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Felt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn encode(&self, msg: &[Felt]) -> Result<Vec<Felt>> {
        if msg.len() != self.k() {
            return Err(Error::LengthMismatch(msg.len(), self.k()));
        }
        let f = self.field();
        let mut out = vec![f.zero(); self.n()];
        for (i, &c) in msg.iter().enumerate() {
            for (x, &g) in out.iter_mut().zip(self.gen.row(i)) {
                *x = f.add(*x, f.mul(c, g));
            }
        }
        Ok(out)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field() == other.field() && self.n() == other.n() && (0..self.k()).all(|i| other.contains(self.gen.row(i)))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses `code GF(p^m) n k` followed by `k` generator rows.
    pub fn from_text(text: &str) -> Result<LinearCode> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty code text".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let ["code", name, n, k] = parts[..] else {
            return Err(Error::Parse(format!("bad code header {header:?}")));
        };
        let field = parse_field_name(name)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension {t:?}")));
        let (n, k) = (num(n)?, num(k)?);
        let body: Vec<&str> = lines.collect();
        let m = FMatrix::from_text(&format!("{} {k} {n}\n{}", field.name(), body.join("\n")))?;
        let code = LinearCode::from_generator(&m);
        if code.k() != k {
            return Err(Error::Parse(format!("generator has rank {}, header says {k}", code.k())));
        }
        Ok(code)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code {} {} {}", self.field().name(), self.n(), self.k())?;
        for i in 0..self.k() {
            let line: Vec<String> = self.gen.row(i).iter().map(Felt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.n(), self.k(), self.field().order())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
}

fn base_order(field: &Field) -> Result<u32> {
    field.base_order().ok_or(Error::NotQuadraticExtension { order: field.order() })
}

/// `<u, v>` under the chosen inner product.
pub fn inner(ip: InnerProduct, u: &[Felt], v: &[Felt]) -> Result<Felt> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let Some(first) = u.first() else {
        return Err(Error::ParameterOutOfRange("empty vectors".into()));
    };
    let f = crate::galois::field_with_order(first.field_order())?;
    let q = match ip {
        InnerProduct::Euclidean => None,
        InnerProduct::Hermitian => Some(base_order(&f)?),
    };
    let mut acc = f.zero();
    for (&a, &b) in u.iter().zip(v) {
        let b = q.map_or(b, |q| f.pow(b, u64::from(q)));
        acc = f.add(acc, f.try_mul(a, b)?);
    }
    Ok(acc)
}

/// Generator with conjugated entries for the Hermitian case.
fn paired_generator(c: &LinearCode, ip: InnerProduct) -> Result<FMatrix> {
    match ip {
        InnerProduct::Euclidean => Ok(c.gen.clone()),
        InnerProduct::Hermitian => c.gen.conjugate(base_order(c.field())?),
    }
}

pub fn dual(c: &LinearCode, ip: InnerProduct) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&paired_generator(c, ip)?.nullspace()))
}

#[derive(Debug, Clone)]
pub struct HullReport {
    pub hull: LinearCode,
    pub ell: usize,
    pub d2: Option<usize>,
    pub inner_product: InnerProduct,
}

impl HullReport {
    /// Minimum distance of the dual of the hull, cached after the first call.
    pub fn compute_d2(&mut self, budget: Budget) -> Result<usize> {
        if let Some(d) = self.d2 {
            return Ok(d);
        }
        let d = min_distance(&dual(&self.hull, self.inner_product)?, budget)?;
        self.d2 = Some(d);
        Ok(d)
    }
}

/// `C ∩ C^⊥`. The hull is `{uG : u G G'^T = 0}` where `G'` is `G` or its
/// conjugate, so `ell = k - rank(G G'^T)`.
pub fn hull(c: &LinearCode, ip: InnerProduct) -> Result<HullReport> {
    let g = &c.gen;
    let gram = g.mul(&paired_generator(c, ip)?.transpose())?;
    let u = gram.transpose().nullspace();
    let h = LinearCode::from_generator(&u.mul(g)?);
    debug_assert_eq!(h.k(), c.k() - gram.rank());
    Ok(HullReport { ell: h.k(), hull: h, d2: None, inner_product: ip })
}

fn check_indices(c: &LinearCode, s: &[usize]) -> Result<Vec<usize>> {
    if let Some(&bad) = s.iter().find(|&&i| i >= c.n()) {
        return Err(Error::IndexOutOfRange { index: bad, len: c.n() });
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Deletes the coordinates in `s`.
pub fn puncture(c: &LinearCode, s: &[usize]) -> Result<LinearCode> {
    let s = check_indices(c, s)?;
    Ok(LinearCode::from_generator(&c.gen.delete_columns(&s)?))
}

/// Keeps the codewords vanishing on `s`, then deletes `s`.
pub fn shorten(c: &LinearCode, s: &[usize]) -> Result<LinearCode> {
    let s = check_indices(c, s)?;
    let u = c.gen.select_columns(&s)?.transpose().nullspace();
    let sub = if u.rows() == 0 { FMatrix::zeros(c.field(), 0, c.n()) } else { u.mul(&c.gen)? };
    Ok(LinearCode::from_generator(&sub.delete_columns(&s)?))
}

/// Cap on the number of codewords visited by a weight search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 24)
    }
}

/// Euclidean parity-check matrix, whose column dependencies give the distance.
fn parity_check(c: &LinearCode) -> FMatrix {
    c.gen.nullspace()
}

pub fn min_distance(c: &LinearCode, budget: Budget) -> Result<usize> {
    if c.k() == 0 {
        return Err(Error::NoNonzeroCodewords);
    }
    let s = weights::min_weight(&c.gen, c.k(), budget.0);
    let upper = s.best.expect("k >= 1 yields a codeword");
    if s.complete {
        return Ok(upper);
    }
    // Column dependencies in H certify the distance from below.
    match weights::first_dependent_columns(&parity_check(c), upper - 1, budget.0) {
        Ok(Some(w)) => Ok(w),
        Ok(None) => Ok(upper),
        Err(lower) => Err(Error::BudgetExceeded { upper_bound: Some(upper), lower_bound: lower }),
    }
}

/// Rows of `a` completing a basis of `b` to one of `a`, followed by `b`'s rows.
/// Returns the stacked basis and the number of completing rows.
fn extended_basis(a: &LinearCode, b: &LinearCode) -> (FMatrix, usize) {
    let f = a.field();
    let mut basis = b.gen.clone();
    let mut extra = FMatrix::zeros(f, 0, a.n());
    for i in 0..a.k() {
        let row = FMatrix::from_rows(f, vec![a.gen.row(i).to_vec()], a.n()).expect("row shape");
        let trial = basis.vstack(&row).expect("same width");
        if trial.rank() > basis.rows() {
            basis = trial;
            extra = extra.vstack(&row).expect("same width");
        }
    }
    let t = extra.rows();
    (extra.vstack(&b.gen).expect("same width"), t)
}

/// Minimum weight of `A \ B` for a subcode `B ⊆ A`; `None` when `A = B`.
pub fn relative_min_weight(a: &LinearCode, b: &LinearCode, budget: Budget) -> Result<Option<usize>> {
    if !b.is_subcode_of(a) {
        return Err(Error::NotASubcode);
    }
    if a.k() == 0 {
        return Err(Error::NoNonzeroCodewords);
    }
    if a.k() == b.k() {
        return Ok(None);
    }
    let (basis, t) = extended_basis(a, b);
    let s = weights::min_weight(&basis, t, budget.0);
    let upper = s.best.expect("A \\ B is nonempty");
    if s.complete {
        return Ok(Some(upper));
    }
    // wt(A \ B) >= d(A); it is exact when the partial search already reached
    // d(A), or when d(A) < d(B) so that every minimum-weight word avoids B.
    let lower = match weights::first_dependent_columns(&parity_check(a), upper - 1, budget.0) {
        Ok(None) => return Ok(Some(upper)),
        Ok(Some(w)) => w,
        Err(w) => return Err(Error::BudgetExceeded { upper_bound: Some(upper), lower_bound: w }),
    };
    if b.k() == 0 {
        return Ok(Some(lower));
    }
    match min_distance(b, budget) {
        Ok(db) if lower < db => Ok(Some(lower)),
        Err(Error::BudgetExceeded { lower_bound, .. }) if lower < lower_bound => Ok(Some(lower)),
        _ => Err(Error::BudgetExceeded { upper_bound: Some(upper), lower_bound: lower }),
    }
}

/// Leftmost information set: the pivot columns of the canonical generator.
pub fn information_set(c: &LinearCode) -> Vec<usize> {
    c.pivots.clone()
}

/// True when `s` lies inside some information set of `c`.
pub fn within_information_set(c: &LinearCode, s: &[usize]) -> Result<bool> {
    let s = check_indices(c, s)?;
    Ok(c.gen.select_columns(&s)?.rank() == s.len())
}

/// New coordinate `i` is `scalars[i]` times old coordinate `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    perm: Vec<usize>,
    scalars: Vec<Felt>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, scalars: Vec<Felt>) -> Result<MonomialMap> {
        if perm.len() != scalars.len() {
            return Err(Error::LengthMismatch(perm.len(), scalars.len()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ParameterOutOfRange("perm is not a permutation".into()));
            }
        }
        if scalars.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroMultiplier);
        }
        Ok(MonomialMap { perm, scalars })
    }

    pub fn permutation(field: &Field, perm: Vec<usize>) -> Result<MonomialMap> {
        let n = perm.len();
        MonomialMap::new(perm, vec![field.one(); n])
    }

    pub fn identity(field: &Field, n: usize) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), scalars: vec![field.one(); n] }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[Felt] {
        &self.scalars
    }

    pub fn apply_vec(&self, field: &Field, v: &[Felt]) -> Vec<Felt> {
        self.perm.iter().zip(&self.scalars).map(|(&p, &a)| field.mul(a, v[p])).collect()
    }
}

pub fn apply_monomial(c: &LinearCode, m: &MonomialMap) -> Result<LinearCode> {
    if m.perm.len() != c.n() {
        return Err(Error::LengthMismatch(m.perm.len(), c.n()));
    }
    let f = c.field();
    let rows = (0..c.k()).map(|i| m.apply_vec(f, c.gen.row(i))).collect();
    LinearCode::from_rows(f, rows, c.n())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeriveMode {
    Puncture,
    Shorten,
}

impl DeriveMode {
    pub fn apply(self, c: &LinearCode, s: &[usize]) -> Result<LinearCode> {
        match self {
            DeriveMode::Puncture => puncture(c, s),
            DeriveMode::Shorten => shorten(c, s),
        }
    }
}

impl fmt::Display for DeriveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeriveMode::Puncture => "puncture",
            DeriveMode::Shorten => "shorten",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullRegime {
    /// `s` sits inside a hull information set: the derived hull equals the
    /// shortened hull and has dimension `ell - s`.
    Exact,
    /// Only the containment of the shortened hull is guaranteed.
    ContainmentOnly,
}

#[derive(Debug, Clone)]
pub struct DerivedHull {
    pub derived: LinearCode,
    pub report: HullReport,
    /// The source hull shortened on `s`.
    pub shortened_hull: LinearCode,
    pub regime: HullRegime,
}

/// Hull of `C^S` or `C_S`, checked against the shortened source hull.
pub fn hull_of_derived(c: &LinearCode, s: &[usize], mode: DeriveMode, ip: InnerProduct) -> Result<DerivedHull> {
    let s = check_indices(c, s)?;
    let base = hull(c, ip)?;
    let regime = if within_information_set(&base.hull, &s)? { HullRegime::Exact } else { HullRegime::ContainmentOnly };
    let derived = mode.apply(c, &s)?;
    let report = hull(&derived, ip)?;
    let shortened_hull = shorten(&base.hull, &s)?;
    match regime {
        HullRegime::Exact => {
            if report.hull != shortened_hull || report.ell != base.ell - s.len() {
                return Err(Error::ContractViolation(format!(
                    "{mode} on {s:?}: derived hull has dimension {}, expected {} and equal to the shortened hull",
                    report.ell,
                    base.ell - s.len()
                )));
            }
        }
        HullRegime::ContainmentOnly => {
            if !shortened_hull.is_subcode_of(&report.hull) {
                return Err(Error::ContractViolation(format!(
                    "{mode} on {s:?}: shortened hull is not contained in the derived hull"
                )));
            }
        }
    }
    Ok(DerivedHull { derived, report, shortened_hull, regime })
}

/// Removes the whole hull by deriving on a full hull information set.
pub fn make_lcd(c: &LinearCode, mode: DeriveMode, ip: InnerProduct) -> Result<LinearCode> {
    let h = hull(c, ip)?;
    let s = information_set(&h.hull);
    let out = hull_of_derived(c, &s, mode, ip)?;
    if out.report.ell != 0 {
        return Err(Error::ContractViolation(format!("derived code still has hull dimension {}", out.report.ell)));
    }
    Ok(out.derived)
}
