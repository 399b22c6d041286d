//! Test oracles that avoid the library's own linear algebra and search:
//! plain Gaussian elimination on row vectors, conjugation through `pow`,
//! and exhaustive codeword walks.
#![allow(dead_code)]

use hullkit::{quadratic_field, Felt, Field, LinearCode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rows = Vec<Vec<Felt>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_elem(rng: &mut ChaCha8Rng, f: &Field) -> Felt {
    f.from_index(rng.gen_range(0..f.order()))
}

pub fn rand_nonzero(rng: &mut ChaCha8Rng, f: &Field) -> Felt {
    f.from_index(rng.gen_range(1..f.order()))
}

pub fn rand_vec(rng: &mut ChaCha8Rng, f: &Field, n: usize) -> Vec<Felt> {
    (0..n).map(|_| rand_elem(rng, f)).collect()
}

/// Row echelon form (fully reduced), zero rows dropped.
pub fn echelon(f: &Field, rows: &Rows, n: usize) -> (Rows, Vec<usize>) {
    let mut m: Rows = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][col]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: &Field, rows: &Rows, n: usize) -> usize {
    echelon(f, rows, n).0.len()
}

/// Basis of `{x : <x, row> = 0 for every row}` (Euclidean).
pub fn kernel(f: &Field, rows: &Rows, n: usize) -> Rows {
    let (e, pivots) = echelon(f, rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(e[i][fc]);
            }
            v
        })
        .collect()
}

pub fn conj_rows(f: &Field, rows: &Rows) -> Rows {
    let q = f.base_order().unwrap();
    rows.iter().map(|r| r.iter().map(|&x| f.pow(x, u64::from(q))).collect()).collect()
}

pub fn rows_of(c: &LinearCode) -> Rows {
    c.gen().row_vecs()
}

pub fn code(f: &Field, rows: Rows, n: usize) -> LinearCode {
    LinearCode::from_rows(f, rows, n).unwrap()
}

pub fn dual_oracle(c: &LinearCode, hermitian: bool) -> LinearCode {
    let f = c.field();
    let rows = if hermitian { conj_rows(f, &rows_of(c)) } else { rows_of(c) };
    code(f, kernel(f, &rows, c.n()), c.n())
}

/// `A ∩ B` from the relations `x G_A = y G_B`.
pub fn intersect(a: &LinearCode, b: &LinearCode) -> LinearCode {
    let f = a.field();
    let n = a.n();
    let (ka, kb) = (a.k(), b.k());
    // columns of the stacked generator, one row per coordinate
    let ga = rows_of(a);
    let gb = rows_of(b);
    let rel: Rows = (0..n).map(|j| ga.iter().map(|r| r[j]).chain(gb.iter().map(|r| f.neg(r[j]))).collect()).collect();
    let sols = kernel(f, &rel, ka + kb);
    let words: Rows = sols
        .iter()
        .map(|x| {
            let mut w = vec![f.zero(); n];
            for (i, row) in ga.iter().enumerate() {
                for j in 0..n {
                    w[j] = f.add(w[j], f.mul(x[i], row[j]));
                }
            }
            w
        })
        .collect();
    code(f, words, n)
}

pub fn hull_oracle(c: &LinearCode, hermitian: bool) -> LinearCode {
    intersect(c, &dual_oracle(c, hermitian))
}

pub fn delete_coords(v: &[Felt], s: &[usize]) -> Vec<Felt> {
    v.iter().enumerate().filter(|(i, _)| !s.contains(i)).map(|(_, &x)| x).collect()
}

pub fn puncture_oracle(c: &LinearCode, s: &[usize]) -> LinearCode {
    let rows = rows_of(c).iter().map(|r| delete_coords(r, s)).collect();
    code(c.field(), rows, c.n() - s.len())
}

/// Subcode vanishing on `s`, found as `A ∩ {x : x_S = 0}`, then punctured.
pub fn shorten_oracle(c: &LinearCode, s: &[usize]) -> LinearCode {
    let f = c.field();
    let n = c.n();
    let zero_on_s: Rows = (0..n)
        .filter(|i| !s.contains(i))
        .map(|i| {
            let mut v = vec![f.zero(); n];
            v[i] = f.one();
            v
        })
        .collect();
    let sub = intersect(c, &code(f, zero_on_s, n));
    puncture_oracle(&sub, s)
}

/// Calls `visit` on every codeword (including zero).
pub fn for_each_codeword(c: &LinearCode, mut visit: impl FnMut(&[Felt])) {
    let f = c.field();
    let g = rows_of(c);
    let k = g.len();
    let q = f.order();
    let mut digits = vec![0u32; k];
    let mut w = vec![f.zero(); c.n()];
    loop {
        w.iter_mut().for_each(|x| *x = f.zero());
        for (i, &d) in digits.iter().enumerate() {
            if d != 0 {
                let a = f.from_index(d);
                for (x, &y) in w.iter_mut().zip(&g[i]) {
                    *x = f.add(*x, f.mul(a, y));
                }
            }
        }
        visit(&w);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub fn weight(v: &[Felt]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Membership through a parity check of `b`.
pub fn member_test(b: &LinearCode) -> impl Fn(&[Felt]) -> bool {
    let f = b.field().clone();
    let h = kernel(&f, &rows_of(b), b.n());
    move |v| h.iter().all(|r| r.iter().zip(v).fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y))).is_zero())
}

/// Exhaustive `min wt(A \ B)`, `None` if `A ⊆ B`.
pub fn relative_weight_oracle(a: &LinearCode, b: &LinearCode) -> Option<usize> {
    let inside = member_test(b);
    let mut best = None;
    for_each_codeword(a, |w| {
        let wt = weight(w);
        if wt > 0 && best.is_none_or(|b| wt < b) && !inside(w) {
            best = Some(wt);
        }
    });
    best
}

pub fn distance_oracle(c: &LinearCode) -> Option<usize> {
    let mut best = None;
    for_each_codeword(c, |w| {
        let wt = weight(w);
        if wt > 0 && best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    });
    best
}

/// Smallest number of linearly dependent columns of `rows`.
pub fn min_dependent_columns(f: &Field, rows: &Rows, n: usize) -> usize {
    fn rec(f: &Field, cols: &Rows, start: usize, chosen: &mut Vec<usize>, want: usize) -> bool {
        if chosen.len() == want {
            let sel: Rows = chosen.iter().map(|&i| cols[i].clone()).collect();
            return rank(f, &sel, cols[0].len()) < want;
        }
        for i in start..cols.len() {
            chosen.push(i);
            if rec(f, cols, i + 1, chosen, want) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if rows.is_empty() {
        return 1;
    }
    let cols: Rows = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    for w in 1..=n {
        if rec(f, &cols, 0, &mut Vec::new(), w) {
            return w;
        }
    }
    n + 1
}

pub fn random_code(rng: &mut ChaCha8Rng, f: &Field, n: usize, k: usize) -> LinearCode {
    let rows = (0..k).map(|_| rand_vec(rng, f, n)).collect();
    code(f, rows, n)
}

fn herm(f: &Field, u: &[Felt], v: &[Felt]) -> Felt {
    let q = u64::from(f.base_order().unwrap());
    u.iter().zip(v).fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, f.pow(y, q))))
}

/// Random code over GF(q^2) of length `n` with Hermitian hull dimension
/// at least one: a nonzero isotropic vector plus random vectors orthogonal to it.
pub fn random_code_with_hull(rng: &mut ChaCha8Rng, q: u32, n: usize) -> LinearCode {
    let f = quadratic_field(q).unwrap();
    loop {
        let v = rand_vec(rng, &f, n);
        if weight(&v) == 0 || !herm(&f, &v, &v).is_zero() {
            continue;
        }
        let perp = kernel(&f, &conj_rows(&f, &vec![v.clone()]), n);
        let k = rng.gen_range(1..n);
        let mut rows = vec![v];
        for _ in 1..k {
            let mut w = vec![f.zero(); n];
            for b in &perp {
                let a = rand_elem(rng, &f);
                for (x, &y) in w.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(a, y));
                }
            }
            rows.push(w);
        }
        let c = code(&f, rows, n);
        if hull_oracle(&c, true).k() >= 1 {
            return c;
        }
    }
}

/// A random information set of `c`: columns scanned in random order.
pub fn random_information_set(rng: &mut ChaCha8Rng, c: &LinearCode) -> Vec<usize> {
    let f = c.field();
    let g = rows_of(c);
    let mut order: Vec<usize> = (0..c.n()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for j in order {
        let mut trial = chosen.clone();
        trial.push(j);
        let cols: Rows = trial.iter().map(|&i| g.iter().map(|r| r[i]).collect()).collect();
        if rank(f, &cols, g.len()) == trial.len() {
            chosen = trial;
        }
    }
    chosen.sort_unstable();
    chosen
}

pub fn random_subset(rng: &mut ChaCha8Rng, from: &[usize], size: usize) -> Vec<usize> {
    let mut v = from.to_vec();
    v.shuffle(rng);
    v.truncate(size);
    v.sort_unstable();
    v
}
