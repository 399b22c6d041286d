//! Finite fields GF(p^m) with p^m <= 1024.
//!
//! Elements are stored as discrete logarithms to the base of the Conway root
//! `a`, with a dedicated zero. Addition goes through a Zech-logarithm table
//! built once per field, so every operation is a handful of integer ops.
//!
//! Fields are interned: `make_field(p, m)` always hands back the same
//! [`Field`] for the same order, and an element only remembers the order of
//! the field it came from.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::conway::CONWAY_POLYNOMIALS;
use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 1024;

/// Shared handle to an immutable field description.
pub type Field = Arc<FieldSpec>;

/// A field element: zero, or `a^e` for `e` in `[0, order - 2]`.
///
/// Ordering puts zero first and then follows the exponent, which is the
/// order used for every enumeration in the crate.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Felt {
    field: u16,
    // 0 is zero, e + 1 is a^e
    rep: u16,
}

impl Felt {
    pub fn is_zero(self) -> bool {
        self.rep == 0
    }

    /// Discrete logarithm, `None` for zero.
    pub fn exponent(self) -> Option<u32> {
        (self.rep != 0).then(|| u32::from(self.rep) - 1)
    }

    /// Order of the field the element belongs to.
    pub fn field_order(self) -> u32 {
        u32::from(self.field)
    }

    /// Position in the canonical enumeration `0, a^0, a^1, ...`.
    pub fn index(self) -> u32 {
        u32::from(self.rep)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            None => f.write_str("0"),
            Some(e) => write!(f, "a^{e}"),
        }
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct FieldSpec {
    p: u32,
    m: u32,
    order: u32,
    prim_poly: Vec<u32>,
    // coefficient vector (base-p integer) -> exponent; entry 0 unused
    log: Vec<u32>,
    // exponent -> coefficient vector
    antilog: Vec<u32>,
    // zech[d] is the rep of 1 + a^d
    zech: Vec<u16>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn registry() -> &'static Mutex<HashMap<u32, Field>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Returns GF(p^m) built on the Conway polynomial for (p, m).
pub fn make_field(p: u32, m: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ParameterOutOfRange("extension degree must be positive".into()));
    }
    let order = p.checked_pow(m).filter(|&o| o <= MAX_ORDER).ok_or(Error::FieldTooLarge { p, m })?;
    let mut reg = registry().lock().expect("field registry poisoned");
    if let Some(f) = reg.get(&order) {
        return Ok(f.clone());
    }
    let field = Arc::new(FieldSpec::build(p, m)?);
    reg.insert(order, field.clone());
    Ok(field)
}

/// Returns the field with `order` elements, if `order` is a prime power <= 1024.
pub fn field_with_order(order: u32) -> Result<Field> {
    if order < 2 {
        return Err(Error::NotPrime(order));
    }
    let p = (2..=order).find(|d| order.is_multiple_of(*d)).unwrap_or(order);
    let mut rest = order;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrime(order));
    }
    make_field(p, m)
}

/// GF(q^2) for a base order q.
pub fn quadratic_field(q: u32) -> Result<Field> {
    let f = field_with_order(q)?;
    make_field(f.p, 2 * f.m)
}

/// Parses a field name such as `GF(3^2)` or `GF(9)`.
pub fn parse_field_name(s: &str) -> Result<Field> {
    let inner = s
        .trim()
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad field name {s:?}")))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad field name {s:?}")));
    match inner.split_once('^') {
        Some((p, m)) => make_field(num(p)?, num(m)?),
        None => field_with_order(num(inner)?),
    }
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lead_inv = mod_inv(g[dg], p);
    while r.len() > dg {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = r.len() - 1 - dg;
            for (i, &gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * gi % p) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&x| x == 0)
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue mod a prime")
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for d in 1..=m / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g: Vec<u32> = (0..d).map(|i| low / p.pow(i as u32) % p).collect();
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    fn build(p: u32, m: u32) -> Result<FieldSpec> {
        let prim_poly = CONWAY_POLYNOMIALS
            .iter()
            .find(|(pp, mm, _)| *pp == p && *mm == m)
            .map(|(_, _, c)| c.to_vec())
            .ok_or(Error::NoPolynomialListed { p, m })?;
        if prim_poly.len() != m as usize + 1 || prim_poly[m as usize] != 1 || !is_irreducible(&prim_poly, p) {
            return Err(Error::ContractViolation(format!("listed polynomial for GF({p}^{m}) is not irreducible")));
        }
        let order = p.pow(m);
        let n = (order - 1) as usize;
        let mut antilog = Vec::with_capacity(n);
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        let to_int = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        for _ in 0..n {
            antilog.push(to_int(&digits));
            // multiply by x modulo prim_poly
            let carry = digits[m as usize - 1];
            for i in (1..m as usize).rev() {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            for i in 0..m as usize {
                digits[i] = (digits[i] + p * p - carry * prim_poly[i] % p) % p;
            }
        }
        let mut log = vec![u32::MAX; order as usize];
        for (e, &v) in antilog.iter().enumerate() {
            if log[v as usize] != u32::MAX {
                return Err(Error::ContractViolation(format!("listed polynomial for GF({p}^{m}) is not primitive")));
            }
            log[v as usize] = e as u32;
        }
        let mut spec = FieldSpec { p, m, order, prim_poly, log, antilog, zech: Vec::new() };
        spec.zech = (0..n)
            .map(|d| {
                let v = spec.poly_int_add(1, spec.antilog[d]);
                if v == 0 {
                    0
                } else {
                    (spec.log[v as usize] + 1) as u16
                }
            })
            .collect();
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn prim_poly(&self) -> &[u32] {
        &self.prim_poly
    }

    pub fn name(&self) -> String {
        format!("GF({}^{})", self.p, self.m)
    }

    /// `q` when this field is GF(q^2).
    pub fn base_order(&self) -> Option<u32> {
        self.m.is_multiple_of(2).then(|| self.p.pow(self.m / 2))
    }

    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn antilog_table(&self) -> &[u32] {
        &self.antilog
    }

    fn tag(&self) -> u16 {
        self.order as u16
    }

    #[inline]
    fn mk(&self, rep: u32) -> Felt {
        Felt { field: self.tag(), rep: rep as u16 }
    }

    pub fn zero(&self) -> Felt {
        self.mk(0)
    }

    pub fn one(&self) -> Felt {
        self.mk(1)
    }

    /// `a^e` for any integer exponent.
    pub fn alpha_pow(&self, e: i64) -> Felt {
        let n = i64::from(self.order - 1);
        self.mk(e.rem_euclid(n) as u32 + 1)
    }

    /// Element at position `index` of the enumeration `0, a^0, a^1, ...`.
    pub fn from_index(&self, index: u32) -> Felt {
        assert!(index < self.order, "element index out of range");
        self.mk(index)
    }

    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.order).map(move |i| self.mk(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (1..self.order).map(move |i| self.mk(i))
    }

    pub fn contains(&self, x: Felt) -> bool {
        u32::from(x.field) == self.order
    }

    fn check(&self, x: Felt) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.order, right: x.field_order() })
        }
    }

    /// Coefficient vector of `x` in the polynomial basis, packed base p.
    pub fn poly_int(&self, x: Felt) -> u32 {
        match x.exponent() {
            None => 0,
            Some(e) => self.antilog[e as usize],
        }
    }

    pub fn from_poly_int(&self, v: u32) -> Felt {
        assert!(v < self.order, "coefficient vector out of range");
        if v == 0 {
            self.zero()
        } else {
            self.mk(self.log[v as usize] + 1)
        }
    }

    /// Digitwise addition of packed coefficient vectors.
    pub fn poly_int_add(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.rep == 0 {
            return b;
        }
        if b.rep == 0 {
            return a;
        }
        let n = self.order - 1;
        let ea = u32::from(a.rep) - 1;
        let eb = u32::from(b.rep) - 1;
        let d = if eb >= ea { eb - ea } else { eb + n - ea };
        let z = u32::from(self.zech[d as usize]);
        if z == 0 {
            return self.zero();
        }
        let e = ea + z - 1;
        self.mk(if e >= n { e - n } else { e } + 1)
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.rep == 0 || b.rep == 0 {
            return self.zero();
        }
        let n = self.order - 1;
        let e = u32::from(a.rep) + u32::from(b.rep) - 2;
        self.mk(if e >= n { e - n } else { e } + 1)
    }

    pub fn minus_one(&self) -> Felt {
        if self.p == 2 {
            self.one()
        } else {
            self.mk((self.order - 1) / 2 + 1)
        }
    }

    #[inline]
    pub fn neg(&self, a: Felt) -> Felt {
        self.mul(a, self.minus_one())
    }

    #[inline]
    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Felt) -> Result<Felt> {
        self.check(a)?;
        match a.exponent() {
            None => Err(Error::DivisionByZero),
            Some(e) => Ok(self.alpha_pow(-i64::from(e))),
        }
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt> {
        self.check(a)?;
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn try_add(&self, a: Felt, b: Felt) -> Result<Felt> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: Felt, b: Felt) -> Result<Felt> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_neg(&self, a: Felt) -> Result<Felt> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    /// `x^e`, with `0^0 = 1`.
    pub fn pow(&self, x: Felt, e: u64) -> Felt {
        match x.exponent() {
            None if e == 0 => self.one(),
            None => self.zero(),
            Some(ex) => {
                let n = u64::from(self.order - 1);
                self.mk(((u64::from(ex) * (e % n)) % n) as u32 + 1)
            }
        }
    }

    /// Conjugation `x -> x^q` on GF(q^2).
    pub fn frobenius_q(&self, x: Felt, q: u32) -> Result<Felt> {
        self.check(x)?;
        if q.checked_mul(q) != Some(self.order) {
            return Err(Error::NotQuadraticExtension { order: self.order });
        }
        Ok(self.pow(x, u64::from(q)))
    }

    /// Conjugation with the field's own base order. Panics off GF(q^2).
    #[inline]
    pub fn conj(&self, x: Felt) -> Felt {
        let q = self.base_order().expect("conjugation needs a quadratic extension");
        self.pow(x, u64::from(q))
    }

    /// All `q + 1` solutions of `a^(q+1) = x`, sorted by exponent.
    pub fn norm_preimages(&self, x: Felt, q: u32) -> Result<Vec<Felt>> {
        self.check(x)?;
        if q.checked_mul(q) != Some(self.order) {
            return Err(Error::NotQuadraticExtension { order: self.order });
        }
        let e = x.exponent().ok_or(Error::ZeroArgument)?;
        if e % (q + 1) != 0 {
            return Err(Error::NotInBaseField { q });
        }
        let u = e / (q + 1);
        let mut out: Vec<Felt> = (0..=q).map(|t| self.alpha_pow(i64::from(u + t * (q - 1)))).collect();
        out.sort();
        Ok(out)
    }

    /// True when `x` lies in the subfield with `sub_order` elements.
    pub fn in_subfield(&self, x: Felt, sub_order: u32) -> bool {
        match x.exponent() {
            None => true,
            Some(e) => (self.order - 1).is_multiple_of(sub_order - 1) && e % ((self.order - 1) / (sub_order - 1)) == 0,
        }
    }

    fn subfield_step(&self, sub: &FieldSpec) -> Result<u32> {
        if sub.p != self.p || !self.m.is_multiple_of(sub.m) {
            return Err(Error::DimensionMismatch(format!("{} is not a subfield of {}", sub.name(), self.name())));
        }
        Ok((self.order - 1) / (sub.order - 1))
    }

    /// Image of a subfield element. Conway compatibility makes
    /// `a_sub = a^((Q-1)/(q-1))`, so this is exponent scaling.
    pub fn embed(&self, sub: &FieldSpec, x: Felt) -> Result<Felt> {
        sub.check(x)?;
        let step = self.subfield_step(sub)?;
        Ok(match x.exponent() {
            None => self.zero(),
            Some(e) => self.mk(e * step + 1),
        })
    }

    /// Inverse of [`FieldSpec::embed`].
    pub fn restrict(&self, sub: &FieldSpec, x: Felt) -> Result<Felt> {
        self.check(x)?;
        let step = self.subfield_step(sub)?;
        match x.exponent() {
            None => Ok(sub.zero()),
            Some(e) if e % step == 0 => Ok(sub.mk(e / step + 1)),
            Some(_) => Err(Error::NotInBaseField { q: sub.order }),
        }
    }

    /// Parses `0`, `1`, `a`, or `a^k` (k taken modulo order - 1).
    pub fn parse_elem(&self, s: &str) -> Result<Felt> {
        let t = s.trim();
        match t {
            "0" => return Ok(self.zero()),
            "1" => return Ok(self.one()),
            "a" | "w" => return Ok(self.alpha_pow(1)),
            _ => {}
        }
        let exp = t
            .strip_prefix("a^")
            .or_else(|| t.strip_prefix("w^"))
            .and_then(|e| e.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("bad element {t:?}")))?;
        Ok(self.alpha_pow(exp))
    }
}
