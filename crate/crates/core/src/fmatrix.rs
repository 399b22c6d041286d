//! Dense matrices over a [`Field`], with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{parse_field_name, Felt, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
}

impl FMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Felt>) -> Result<FMatrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(x) = data.iter().find(|x| !field.contains(**x)) {
            return Err(Error::FieldMismatch { left: field.order(), right: x.field_order() });
        }
        Ok(FMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FMatrix {
        FMatrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> FMatrix {
        let mut m = FMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is only consulted when `rows` is empty.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Felt>>, cols: usize) -> Result<FMatrix> {
        let cols = rows.first().map_or(cols, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch(r.len(), cols));
        }
        let n = rows.len();
        FMatrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Felt) {
        debug_assert!(self.field.contains(x));
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Felt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(Felt) -> Felt) -> FMatrix {
        FMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise `x -> x^q` on a matrix over GF(q^2).
    pub fn conjugate(&self, q: u32) -> Result<FMatrix> {
        if q.checked_mul(q) != Some(self.field.order()) {
            return Err(Error::NotQuadraticExtension { order: self.field.order() });
        }
        let f = self.field.clone();
        Ok(self.map(|x| f.pow(x, u64::from(q))))
    }

    /// `G†`, the conjugate transpose.
    pub fn hermitian_transpose(&self, q: u32) -> Result<FMatrix> {
        Ok(self.conjugate(q)?.transpose())
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.order(), right: other.field.order() });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = FMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = f.inv(m[r][c]).expect("pivot is nonzero");
            for x in m[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = f.neg(row[c]);
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x = f.add(*x, f.mul(factor, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        let out = FMatrix::from_rows(&f, m, self.cols).expect("shape preserved");
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x^T = 0}` in RREF.
    pub fn nullspace(&self) -> FMatrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FMatrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(i, fc)));
            }
        }
        basis.rref().0
    }

    pub fn vstack(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.order(), right: other.field.order() });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("stacking {} columns on {}", other.cols, self.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Splits into columns `[0, at)` and `[at, cols)`.
    pub fn hsplit(&self, at: usize) -> Result<(FMatrix, FMatrix)> {
        if at > self.cols {
            return Err(Error::IndexOutOfRange { index: at, len: self.cols });
        }
        let left: Vec<usize> = (0..at).collect();
        let right: Vec<usize> = (at..self.cols).collect();
        Ok((self.select_columns(&left)?, self.select_columns(&right)?))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Result<FMatrix> {
        if let Some(&bad) = idx.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.cols });
        }
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            data.extend(idx.iter().map(|&j| self.get(i, j)));
        }
        Ok(FMatrix { field: self.field.clone(), rows: self.rows, cols: idx.len(), data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Result<FMatrix> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.rows });
        }
        let mut data = Vec::with_capacity(self.cols * idx.len());
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Ok(FMatrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data })
    }

    /// Drops the columns in `s`, keeping the rest in their original order.
    pub fn delete_columns(&self, s: &[usize]) -> Result<FMatrix> {
        if let Some(&bad) = s.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.cols });
        }
        let keep: Vec<usize> = (0..self.cols).filter(|j| !s.contains(j)).collect();
        self.select_columns(&keep)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<FMatrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [name, r, c] = parts[..] else {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        };
        let field = parse_field_name(name)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension {t:?}")));
        let (rows, cols) = (num(r)?, num(c)?);
        let mut data = Vec::with_capacity(rows * cols);
        for line in lines {
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::Parse(format!("row has {} entries, expected {cols}", entries.len())));
            }
            for e in entries {
                data.push(field.parse_elem(e)?);
            }
        }
        if data.len() != rows * cols {
            return Err(Error::Parse(format!("expected {rows} rows, found {}", data.len() / cols.max(1))));
        }
        FMatrix::new(&field, rows, cols, data)
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.field.name(), self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(Felt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> FMatrix {
        let data = (0..rows * cols).map(|_| f.from_index(rng.gen_range(0..f.order()))).collect();
        FMatrix::new(f, rows, cols, data).unwrap()
    }

    #[test]
    fn identity_and_zero_rref() {
        let f = make_field(3, 2).unwrap();
        let id = FMatrix::identity(&f, 4);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2, 3]);
        let (z, p) = FMatrix::zeros(&f, 3, 5).rref();
        assert_eq!((z.rows(), z.cols()), (0, 5));
        assert!(p.is_empty());
        assert_eq!(id.nullspace().rows(), 0);
    }

    #[test]
    fn nullspace_of_all_ones_row() {
        let f = make_field(2, 2).unwrap();
        let m = FMatrix::from_rows(&f, vec![vec![f.one(), f.one()]], 2).unwrap();
        let ns = m.nullspace();
        // -1 = 1 in characteristic 2
        assert_eq!(ns.row_vecs(), vec![vec![f.one(), f.one()]]);
    }

    #[test]
    fn hermitian_transpose_examples() {
        let f = make_field(2, 2).unwrap();
        let w = f.alpha_pow(1);
        let g = FMatrix::from_rows(&f, vec![vec![w, f.one()]], 2).unwrap();
        let gh = g.hermitian_transpose(2).unwrap();
        assert_eq!(gh.row_vecs(), vec![vec![f.alpha_pow(2)], vec![f.one()]]);
        assert_eq!(gh.hermitian_transpose(2).unwrap(), g);
        let real = FMatrix::from_rows(&f, vec![vec![f.one(), f.zero(), f.one()]], 3).unwrap();
        assert_eq!(real.hermitian_transpose(2).unwrap(), real.transpose());
        let f8 = make_field(2, 3).unwrap();
        assert!(FMatrix::identity(&f8, 2).hermitian_transpose(2).is_err());
    }

    #[test]
    fn random_nullspace_multiplies_back_to_zero() {
        let f = make_field(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&f, 3, 6, &mut rng);
            let ns = m.nullspace();
            assert_eq!(ns.rows(), 6 - m.rank());
            assert!(m.mul(&ns.transpose()).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent_and_basis_independent() {
        let f = make_field(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..9);
            let m = random_matrix(&f, rows, cols, &mut rng);
            let (r, p) = m.rref();
            assert_eq!(r.rref(), (r.clone(), p.clone()));
            let mix = random_matrix(&f, rows, rows, &mut rng);
            if mix.rank() == rows {
                assert_eq!(mix.mul(&m).unwrap().rref().0, r);
            }
            assert_eq!(m.rank() + m.nullspace().rows(), cols);
        }
    }

    #[test]
    fn conjugate_transpose_reverses_products() {
        let f = make_field(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_matrix(&f, 3, 4, &mut rng);
            let b = random_matrix(&f, 4, 2, &mut rng);
            let lhs = a.mul(&b).unwrap().hermitian_transpose(3).unwrap();
            let rhs = b.hermitian_transpose(3).unwrap().mul(&a.hermitian_transpose(3).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(a.mul(&FMatrix::identity(&f, 4)).unwrap(), a);
        }
    }

    #[test]
    fn column_selection() {
        let f = make_field(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&f, 3, 5, &mut rng);
        assert_eq!(m.delete_columns(&[]).unwrap(), m);
        let d = m.delete_columns(&[1, 3]).unwrap();
        assert_eq!(d, m.select_columns(&[0, 2, 4]).unwrap());
        let (l, r) = m.hsplit(2).unwrap();
        assert_eq!((l.cols(), r.cols()), (2, 3));
        assert!(matches!(m.select_columns(&[5]), Err(Error::IndexOutOfRange { .. })));
        assert!(m.mul(&m).is_err());
        assert_eq!(m.vstack(&m).unwrap().rank(), m.rank());
    }

    #[test]
    fn text_round_trip() {
        let f = make_field(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = random_matrix(&f, 2, 4, &mut rng);
        let text = m.to_text();
        assert!(text.starts_with("GF(3^2) 2 4\n"));
        assert_eq!(FMatrix::from_text(&text).unwrap(), m);
        assert!(FMatrix::from_text("GF(3^2) 2 4\n0 0\n").is_err());
    }
}
