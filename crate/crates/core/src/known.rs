//! Static reference families of known optimal EAQECCs (with `c = 1`) and
//! subsystem codes, used to annotate computed parameters.

use serde::Serialize;

use crate::grslab::gcd;
use crate::qparams::ParamRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownMatch {
    /// `"eaqecc"` or `"subsystem"`.
    pub kind: &'static str,
    pub row: usize,
    pub reference: &'static str,
    /// Closed form of the family.
    pub pattern: &'static str,
    /// Parameter values that realize the match.
    pub witness: String,
}

impl std::fmt::Display for KnownMatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "known {} family {} ({}): {} with {}",
            self.kind, self.row, self.reference, self.pattern, self.witness
        )
    }
}

fn prime_power(q: i64) -> Option<(i64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        m += 1;
    }
    (x == 1).then_some((p, m))
}

fn hit(kind: &'static str, row: usize, reference: &'static str, pattern: &'static str, witness: String) -> KnownMatch {
    KnownMatch { kind, row, reference, pattern, witness }
}

/// Known `[[n, kappa, delta; 1]]_q` families with `n > q + 1`.
pub fn match_eaqecc(q: u32, n: usize, kappa: usize, delta: usize, c: usize) -> Vec<KnownMatch> {
    let mut out = Vec::new();
    if c != 1 {
        return out;
    }
    let (q, n, kappa, delta) = (i64::from(q), n as i64, kappa as i64, delta as i64);
    let q2 = q * q;
    let ea = |row, r, p, w| hit("eaqecc", row, r, p, w);
    let k = delta;

    if q % 10 == 3 || q % 10 == 7 {
        let m = (q - q % 10) / 10;
        let fifth = (q2 + 1) / 5;
        if m % 2 == 0 && n == fifth && kappa == n - 2 * k + 3 && k >= 2 {
            if q % 10 == 3 && k <= 8 * m + 61 {
                out.push(ea(1, "Lu2018", "[[(q²+1)/5, (q²+1)/5−2k+3, k; 1]]", format!("m={m}, k={k}")));
            }
            if q % 10 == 7 {
                out.push(ea(2, "Lu2018", "[[(q²+1)/5, (q²+1)/5−2k+3, k; 1]]", format!("m={m}, k={k}")));
            }
        }
        if n == (q2 + 1) / 10 && kappa == fifth - 2 * k + 3 && k >= 2 {
            if q % 10 == 3 && k <= 6 * m + 2 {
                out.push(ea(7, "Lu2018a", "[[(q²+1)/10, (q²+1)/5−2k+3, k; 1]]", format!("m={m}, k={k}")));
            }
            if q % 10 == 7 && k <= 6 * m + 4 {
                out.push(ea(8, "Lu2018a", "[[(q²+1)/10, (q²+1)/5−2k+3, k; 1]]", format!("m={m}, k={k}")));
            }
        }
    }

    let k3 = delta - 1;
    if (1..=q - 1).contains(&k3) && n % (q - 1) == 0 && gcd(n as u64, q as u64) == 1 && kappa == n - 2 * k3 + 1 {
        let z = n / (q - 1);
        if (1..=q + 1).contains(&z) {
            out.push(ea(3, "Guenda2017", "[[z(q−1), z(q−1)−2k+1, k+1; 1]]", format!("z={z}, k={k3}")));
        }
    }

    if n == q2 + 1 && kappa == q2 - 2 * k + 4 && (2..=2 * q).contains(&k) && k % 2 == 0 {
        out.push(ea(4, "Fan2016", "[[q²+1, q²−2k+4, k; 1]]", format!("k={k}")));
    }
    if n == q2 && kappa == q2 - 2 * k + 3 && (q + 1..=2 * q - 1).contains(&k) {
        out.push(ea(5, "Fan2016", "[[q², q²−2k+3, k; 1]]", format!("k={k}")));
    }
    if n == q2 - 1 && kappa == q2 - 2 * k + 2 && (2..=2 * q - 2).contains(&k) {
        out.push(ea(6, "Fan2016", "[[q²−1, q²−2k+2, k; 1]]", format!("k={k}")));
    }

    for h in [3i64, 5, 7] {
        if (q + 1) % h == 0
            && (q2 + 1) % h == 0
            && n == (q2 + 1) / h
            && kappa == n - 2 * k + 3
            && k > (q + 1) / h
            && 2 * h * (k + 1) <= (q + 1) * (h + 3)
        {
            out.push(ea(9, "Lu2018a", "[[(q²+1)/h, (q²+1)/h−2k+3, k; 1]]", format!("h={h}, k={k}")));
        }
    }

    let k10 = delta - 1;
    if k10 >= 1 {
        if let Some((p, m)) = prime_power(q) {
            let mut seen = false;
            for e in (1..=m).filter(|e| m % e == 0) {
                let r = p.pow(e);
                for z in 1..=(2 * m / e) as i64 - 1 {
                    for t in 1..=r {
                        for s in 0..=1 {
                            let len = t * r.pow(z as u32) + s;
                            if !seen && len == n && kappa == t * r + s - 2 * k10 - 1 && k10 <= (n - 1 + q) / (q + 1) {
                                seen = true;
                                out.push(ea(
                                    10,
                                    "Fang2020",
                                    "[[tr^z+s, tr+s−2k−1, k+1; 1]]",
                                    format!("r={r}, t={t}, z={z}, s={s}, k={k10}"),
                                ));
                            }
                        }
                    }
                }
            }
        }
        let mut seen = false;
        for r in (1..=q2 - 1).filter(|r| (q2 - 1) % r == 0) {
            let a = r / gcd(r as u64, (q + 1) as u64) as i64;
            for t in 1..=(q - 1) / a {
                for s in 0..=1 {
                    if !seen && t * r + s == n && kappa == n - 2 * k10 - 1 && k10 <= (n + q) / (q + 1) {
                        seen = true;
                        out.push(ea(
                            11,
                            "Fang2020",
                            "[[tr+s, tr+s−2k−1, k+1; 1]]",
                            format!("r={r}, t={t}, s={s}, k={k10}"),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Known `[[n, kappa, r, delta]]_q` subsystem families.
pub fn match_subsystem(q: u32, n: usize, kappa: usize, r: usize, delta: usize) -> Vec<KnownMatch> {
    let mut out = Vec::new();
    let (q, n, kappa, ell, delta) = (i64::from(q), n as i64, kappa as i64, r as i64, delta as i64);
    let q2 = q * q;
    let ss = |row, rf, p, w| hit("subsystem", row, rf, p, w);

    let s = q2 - 1 - n;
    let k = delta - 1 + s;
    if s >= 0 && (0..q - 1).contains(&k) && s <= k && ell < q2 - 2 * k - 1 && kappa == q2 - 2 * k - 1 - ell + s {
        out.push(ss(1, "SALAHA.2009", "[[q²−1−s, q²−2k−1−ℓ+s, ℓ, k+1−s]]", format!("k={k}, s={s}, ℓ={ell}")));
    }
    let s = q2 - n;
    let k = delta - 2 + s;
    if s >= 0 && (0..q - 1).contains(&k) && s <= k + 1 && ell < q2 - 2 * k - 2 && kappa == q2 - 2 * k - 2 - ell + s {
        out.push(ss(2, "SALAHA.2009", "[[q²−s, q²−2k−2−ℓ+s, ℓ, k+2−s]]", format!("k={k}, s={s}, ℓ={ell}")));
    }
    if q.count_ones() == 1 && q >= 2 && n == q2 + 1 && kappa == (q - 1) * (q - 1) && ell == 4 && delta == q - 1 {
        out.push(ss(3, "Qian2013", "[[2^(2m)+1, (2^m−1)^2, 4, 2^m−1]]", format!("m={}", q.trailing_zeros())));
    }
    out
}

pub fn compare_known(record: &ParamRecord) -> Vec<KnownMatch> {
    match record {
        ParamRecord::Eaqecc { q, n, kappa, delta, c, .. } => match_eaqecc(*q, *n, *kappa, *delta, *c),
        ParamRecord::Subsystem { q, n, kappa, r, delta, .. } => match_subsystem(*q, *n, *kappa, *r, *delta),
    }
}
