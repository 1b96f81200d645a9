//! Dense exact linear algebra over prime fields.
//!
//! Every module, map and functor in this crate is ultimately a matrix over
//! GF(p); this module supplies row reduction, kernels, solves and block
//! constructions on top of a plain row-major `Vec<u32>`.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported modulus. Products of two residues fit in 32 bits.
pub const MAX_PRIME: u32 = 65521;

/// A prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2).
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.p
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl FpMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.p()) {
            return Err(Error::Shape(format!(
                "entry {bad} is not reduced mod {}",
                field.p()
            )));
        }
        Ok(FpMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from signed integer rows, reducing mod p. All rows must have
    /// length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {} but {cols} columns were declared",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&v| field.reduce(v)));
        }
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Shorthand for small literal matrices; panics on ragged input.
    pub fn from_slices(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(field, cols, &owned).expect("ragged literal matrix")
    }

    pub fn column(field: FieldSpec, v: &[u32]) -> Self {
        FpMatrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn row_vector(field: FieldSpec, v: &[u32]) -> Self {
        FpMatrix {
            field,
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| rng.gen_range(0..field.p())).collect();
        FpMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.p());
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch in product");
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.field.p() as u64;
        let n = other.cols;
        let mut acc = vec![0u64; self.rows * n];
        for i in 0..self.rows {
            let out = &mut acc[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out.iter_mut().zip(brow) {
                    *o += a * b as u64;
                    if *o >= 1 << 62 {
                        *o %= p;
                    }
                }
            }
        }
        FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: n,
            data: acc.into_iter().map(|v| (v % p) as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| (a as u64 * b as u64) % p)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &FpMatrix, op: impl Fn(FieldSpec, u32, u32) -> u32) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| op(self.field, a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FpMatrix {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Adds `s * other` in place.
    pub fn axpy(&mut self, s: u32, other: &FpMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(s, b));
        }
    }

    /// Linear combination `sum coeffs[i] * mats[i]`; `mats` must be nonempty
    /// or `shape` must be given.
    pub fn combination(field: FieldSpec, shape: (usize, usize), coeffs: &[u32], mats: &[FpMatrix]) -> FpMatrix {
        let mut out = FpMatrix::zeros(field, shape.0, shape.1);
        for (&c, m) in coeffs.iter().zip(mats) {
            out.axpy(c, m);
        }
        out
    }

    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&FpMatrix]) -> FpMatrix {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = FpMatrix::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + m.cols].copy_from_slice(m.row(r));
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&FpMatrix]) -> FpMatrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        FpMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Place `self` into a larger zero matrix at (`r0`, `c0`).
    pub fn embed(&self, rows: usize, cols: usize, r0: usize, c0: usize) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.field, rows, cols);
        out.set_block(r0, c0, self);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> FpMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = FpMatrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            out.data[r * cols..(r + 1) * cols]
                .copy_from_slice(&self.data[(r0 + r) * self.cols + c0..(r0 + r) * self.cols + c0 + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        FpMatrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col));
            if inv != 1 {
                for c in col..m.cols {
                    let v = m.get(row, c);
                    m.set(row, c, f.mul(v, inv));
                }
            }
            let pivot_row: Vec<u32> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let cols = m.cols;
                let dst = &mut m.data[r * cols..(r + 1) * cols];
                for c in col..cols {
                    dst[c] = f.sub(dst[c], f.mul(factor, pivot_row[c]));
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivot_cols: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis (RREF rows) of the row space.
    pub fn row_space(&self) -> FpMatrix {
        let r = self.rref();
        r.reduced.block(0, r.rank, 0, self.cols)
    }

    /// Canonical basis of the column space, returned as rows.
    pub fn column_space(&self) -> FpMatrix {
        self.transpose().row_space()
    }

    /// Basis of the right null space `{x : self * x = 0}` as the rows of the
    /// result, in reduced echelon form.
    pub fn kernel_basis(&self) -> FpMatrix {
        let f = self.field;
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivot_cols.contains(c)).collect();
        let mut k = FpMatrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.set(i, fc, 1);
            for (pr, &pc) in r.pivot_cols.iter().enumerate() {
                k.set(i, pc, f.neg(r.reduced.get(pr, fc)));
            }
        }
        // Each row already has its leading 1 at a free column with zeros at
        // other free columns, but pivot-column entries may precede it.
        k.row_space()
    }

    /// Basis of the left null space `{y : y * self = 0}` as rows.
    pub fn left_kernel_basis(&self) -> FpMatrix {
        self.transpose().kernel_basis()
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = FpMatrix::hstack(self.field, n, &[self, &FpMatrix::identity(self.field, n)]);
        let r = aug.rref();
        if n > 0 && r.pivot_cols[n - 1] >= n {
            return None;
        }
        Some(r.reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Coordinates of the row vector `v` with respect to an RREF basis given
    /// by its pivot columns, or `None` when `v` is outside the span.
    pub fn coordinates_in(basis: &Rref, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = basis.pivot_cols.iter().map(|&c| v[c]).collect();
        let f = basis.reduced.field;
        let mut recon = vec![0u32; v.len()];
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, r) in recon.iter_mut().enumerate() {
                *r = f.add(*r, f.mul(c, basis.reduced.get(i, j)));
            }
        }
        (recon == v).then_some(coords)
    }

    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch in kron");
        let f = self.field;
        let (rb, cb) = (other.rows, other.cols);
        let mut out = FpMatrix::zeros(f, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.set(i * rb + k, j * cb + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch in direct sum");
        let mut out = FpMatrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn block_diag_all(field: FieldSpec, parts: &[&FpMatrix]) -> FpMatrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = FpMatrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }
}

/// Incrementally built echelon basis, used for spinning and span tests.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        EchelonBasis {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep existing rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    /// Canonical (RREF) basis as matrix rows.
    pub fn to_matrix(&self) -> FpMatrix {
        let data = self.rows.iter().flatten().copied().collect();
        FpMatrix::new(self.field, self.rows.len(), self.width, data)
            .expect("echelon rows are reduced")
            .row_space()
    }
}

/// Reduced row-echelon form, rank and pivot columns.
pub fn rref(m: &FpMatrix) -> Rref {
    m.rref()
}

pub fn kernel_basis(m: &FpMatrix) -> FpMatrix {
    m.kernel_basis()
}

/// Solve `a * x = b`. Free variables are set to zero, so the answer is
/// canonical. Returns `None` when the system is inconsistent.
pub fn solve(a: &FpMatrix, b: &FpMatrix) -> Option<FpMatrix> {
    assert_eq!(a.rows, b.rows, "solve: a has {} rows, b has {}", a.rows, b.rows);
    assert_eq!(a.field, b.field, "solve: field mismatch");
    let n = a.cols;
    let aug = FpMatrix::hstack(a.field, a.rows, &[a, b]);
    let r = aug.rref();
    if r.pivot_cols.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = FpMatrix::zeros(a.field, n, b.cols);
    for (pr, &pc) in r.pivot_cols.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, r.reduced.get(pr, n + j));
        }
    }
    Some(x)
}

/// Kronecker product. Row `i*rb + k`, column `j*cb + l` holds `a[i][j]*b[k][l]`.
pub fn kron(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.p(), b.field.p()));
    }
    Ok(a.kron(b))
}

/// Block-diagonal sum.
pub fn direct_sum(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.p(), b.field.p()));
    }
    Ok(a.block_diag(b))
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix<GF({})>{}x{}", self.field.p(), self.rows, self.cols)?;
        if self.rows == 0 || self.cols == 0 {
            return Ok(());
        }
        write!(f, " [")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites_and_range() {
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(65537).is_err());
        assert_eq!(FieldSpec::new(65521).unwrap().p(), 65521);
        let f = gf(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rref_identity_zero_and_rank_one() {
        let f = gf(2);
        let id = FpMatrix::identity(f, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!((r.rank, r.pivot_cols.clone()), (2, vec![0, 1]));

        let z = FpMatrix::zeros(gf(3), 3, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());

        let m = FpMatrix::from_slices(f, &[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.reduced, FpMatrix::from_slices(f, &[&[1, 1], &[0, 0]]));
        assert_eq!((r.rank, r.pivot_cols), (1, vec![0]));
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert_eq!(FpMatrix::identity(f, 4).kernel_basis().rows(), 0);
        let k = FpMatrix::zeros(f, 2, 3).kernel_basis();
        assert_eq!(k, FpMatrix::identity(f, 3));
        let k = FpMatrix::from_slices(gf(2), &[&[1, 1]]).kernel_basis();
        assert_eq!(k, FpMatrix::from_slices(gf(2), &[&[1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let f = gf(3);
        let b = FpMatrix::from_slices(f, &[&[1, 2], &[0, 1]]);
        assert_eq!(solve(&FpMatrix::identity(f, 2), &b), Some(b.clone()));
        let z = FpMatrix::zeros(f, 2, 2);
        assert_eq!(solve(&z, &z), Some(z.clone()));
        let g2 = gf(2);
        let a = FpMatrix::from_slices(g2, &[&[1, 1], &[0, 0]]);
        let b = FpMatrix::from_slices(g2, &[&[1], &[1]]);
        assert_eq!(solve(&a, &b), None);
    }

    #[test]
    fn kron_and_direct_sum_examples() {
        let f = gf(2);
        let i6 = kron(&FpMatrix::identity(f, 2), &FpMatrix::identity(f, 3)).unwrap();
        assert_eq!(i6, FpMatrix::identity(f, 6));
        let a = FpMatrix::from_slices(f, &[&[1, 1]]);
        assert!(kron(&a, &FpMatrix::zeros(f, 2, 2)).unwrap().is_zero());
        // (1x2) ⊗ (2x1) is 2x2; expand on e_i ⊗ e_j.
        let b = FpMatrix::from_slices(f, &[&[1], &[1]]);
        let k = kron(&a, &b).unwrap();
        assert_eq!(k, FpMatrix::from_slices(f, &[&[1, 1], &[1, 1]]));
        assert!(kron(&a, &FpMatrix::identity(gf(3), 1)).is_err());

        assert_eq!(
            direct_sum(&FpMatrix::identity(f, 1), &FpMatrix::identity(f, 1)).unwrap(),
            FpMatrix::identity(f, 2)
        );
        let a = FpMatrix::from_slices(gf(3), &[&[1, 2], &[0, 1]]);
        assert_eq!(direct_sum(&a, &FpMatrix::zeros(gf(3), 0, 0)).unwrap(), a);
        let d = direct_sum(
            &FpMatrix::from_slices(gf(3), &[&[1]]),
            &FpMatrix::from_slices(gf(3), &[&[2]]),
        )
        .unwrap();
        assert_eq!(d, FpMatrix::from_slices(gf(3), &[&[1, 0], &[0, 2]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(7);
        let a = FpMatrix::from_slices(f, &[&[2, 3], &[1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FpMatrix::identity(f, 2));
        assert!(FpMatrix::from_slices(f, &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(FpMatrix::zeros(f, 0, 0).inverse(), Some(FpMatrix::zeros(f, 0, 0)));
    }

    fn arb_matrix() -> impl Strategy<Value = FpMatrix> {
        (prop::sample::select(vec![2u32, 3, 5]), 0usize..=8, 0usize..=8, any::<u64>()).prop_map(
            |(p, r, c, seed)| {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                FpMatrix::random(gf(p), r, c, &mut rng)
            },
        )
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.rows(), m.cols());
            prop_assert!(m.mul(&k.transpose()).is_zero());
            prop_assert_eq!(k.rref().reduced, k.clone());
        }

        #[test]
        fn rref_idempotent(m in arb_matrix()) {
            let once = m.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once);
        }

        #[test]
        fn solve_is_sound(a in arb_matrix(), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let b = FpMatrix::random(a.field(), a.rows(), 2, &mut rng);
            if let Some(x) = solve(&a, &b) {
                prop_assert_eq!(a.mul(&x), b);
            }
            // A consistent right-hand side is always solved.
            let x0 = FpMatrix::random(a.field(), a.cols(), 1, &mut rng);
            let b0 = a.mul(&x0);
            let x = solve(&a, &b0).expect("consistent system");
            prop_assert_eq!(a.mul(&x), b0);
        }

        #[test]
        fn kron_rank_multiplicative(a in arb_matrix(), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let b = FpMatrix::random(a.field(), 3, 4, &mut rng);
            prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }
    }
}
