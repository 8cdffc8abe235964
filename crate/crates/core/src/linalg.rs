//! Small dense complex linear algebra: products, Hermitian transpose,
//! least squares, rank, and null spaces.
//!
//! Everything here targets matrices no larger than 16×16, so the kernels are
//! plain Gaussian elimination with partial pivoting — no decompositions, no
//! blocking. Rank decisions are made relative to the largest entry so the
//! routines are scale-free.

use std::fmt;
use std::ops::{Add, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const CZERO: Complex64 = Complex64::new(0.0, 0.0);
const CONE: Complex64 = Complex64::new(1.0, 0.0);

/// Default relative threshold for rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// Dense complex matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ComplexMatrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            entries: vec![CZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> ComplexMatrix {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ComplexMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    /// Single-column matrix from a vector.
    pub fn column_from(v: &[Complex64]) -> ComplexMatrix {
        ComplexMatrix {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Standard matrix product; fails on incompatible shapes.
    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == CZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![CZERO; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += self.get(i, j) * v[j];
            }
        }
        Ok(out)
    }

    /// Transpose with complex conjugated elements.
    pub fn hermitian_transpose(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> ComplexMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= factor;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`. Panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Numerical rank from row reduction with pivot threshold `tol` relative
    /// to the largest entry.
    pub fn rank(&self, tol: f64) -> usize {
        self.reduced_row_echelon(tol).1.len()
    }

    /// Full reduced row-echelon form with partial pivoting. Returns the
    /// reduced matrix and the pivot-column list; pivots smaller than
    /// `tol · max|entry|` count as zero.
    fn reduced_row_echelon(&self, tol: f64) -> (ComplexMatrix, Vec<usize>) {
        let mut m = self.clone();
        let scale = self.max_abs();
        let threshold = tol * scale;
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // largest remaining entry in this column
            let (mut best_row, mut best) = (row, m.get(row, col).norm());
            for r in row + 1..m.rows {
                let v = m.get(r, col).norm();
                if v > best {
                    best_row = r;
                    best = v;
                }
            }
            if best <= threshold {
                continue;
            }
            if best_row != row {
                for j in 0..m.cols {
                    let a = m.get(row, j);
                    let b = m.get(best_row, j);
                    m.set(row, j, b);
                    m.set(best_row, j, a);
                }
            }
            let pivot = m.get(row, col);
            for j in 0..m.cols {
                let v = m.get(row, j) / pivot;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == CZERO {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j) - factor * m.get(row, j);
                    m.set(r, j, v);
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        (m, pivot_cols)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o += r;
        }
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o -= r;
        }
        out
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                let c = self.get(i, j);
                if c.im >= 0.0 {
                    write!(f, "{}+{}i", c.re, c.im)?;
                } else {
                    write!(f, "{}-{}i", c.re, -c.im)?;
                }
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<[f64; 2]>,
        }
        Repr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.rows == 0 || repr.cols == 0 || repr.entries.len() != repr.rows * repr.cols {
            return Err(D::Error::custom("inconsistent matrix dimensions"));
        }
        Ok(ComplexMatrix {
            rows: repr.rows,
            cols: repr.cols,
            entries: repr
                .entries
                .iter()
                .map(|p| Complex64::new(p[0], p[1]))
                .collect(),
        })
    }
}

/// Four complex components; the ket image of an ideal element.
#[derive(Clone, Debug, PartialEq)]
pub struct KetVector([Complex64; 4]);

impl KetVector {
    pub fn new(components: [Complex64; 4]) -> KetVector {
        KetVector(components)
    }

    pub fn zero() -> KetVector {
        KetVector([CZERO; 4])
    }

    pub fn from_slice(v: &[Complex64]) -> Result<KetVector> {
        if v.len() != 4 {
            return Err(Error::ShapeMismatch(format!(
                "ket vector needs 4 components, got {}",
                v.len()
            )));
        }
        Ok(KetVector([v[0], v[1], v[2], v[3]]))
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.0
    }

    pub fn get(&self, k: usize) -> Complex64 {
        self.0[k]
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn sub(&self, other: &KetVector) -> KetVector {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(other.0.iter()) {
            *o -= r;
        }
        KetVector(out)
    }
}

impl Serialize for KetVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.0.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(serializer)
    }
}

/// Hermitian inner product Σ conj(u_i)·v_i.
pub fn dot_conj(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Minimizes ‖Ax − b‖₂ via the normal equations and returns the minimizer
/// together with the residual norm, so callers can decide membership
/// questions. Requires rows ≥ cols and full column rank.
pub fn solve_least_squares(a: &ComplexMatrix, b: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
    if a.rows() < a.cols() {
        return Err(Error::ShapeMismatch(format!(
            "least squares needs rows >= cols, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side length {} does not match {} rows",
            b.len(),
            a.rows()
        )));
    }
    let at = a.hermitian_transpose();
    let gram = at.matmul(a)?;
    let rhs = at.apply(b)?;
    let x = solve_square(&gram, &rhs)?;
    let mut residual = a.apply(&x)?;
    for (r, bi) in residual.iter_mut().zip(b.iter()) {
        *r -= bi;
    }
    Ok((x, vec_norm(&residual)))
}

/// Gaussian elimination with partial pivoting on a square system.
fn solve_square(m: &ComplexMatrix, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = m.rows();
    debug_assert_eq!(n, m.cols());
    let mut a = m.clone();
    let mut b = rhs.to_vec();
    let threshold = RANK_TOL * a.max_abs();

    for col in 0..n {
        let (mut best_row, mut best) = (col, a.get(col, col).norm());
        for r in col + 1..n {
            let v = a.get(r, col).norm();
            if v > best {
                best_row = r;
                best = v;
            }
        }
        if best <= threshold {
            return Err(Error::DegenerateBasis(format!(
                "pivot {:.3e} below threshold {:.3e} at column {}",
                best, threshold, col
            )));
        }
        if best_row != col {
            for j in 0..n {
                let x = a.get(col, j);
                let y = a.get(best_row, j);
                a.set(col, j, y);
                a.set(best_row, j, x);
            }
            b.swap(col, best_row);
        }
        let pivot = a.get(col, col);
        for r in col + 1..n {
            let factor = a.get(r, col) / pivot;
            if factor == CZERO {
                continue;
            }
            for j in col..n {
                let v = a.get(r, j) - factor * a.get(col, j);
                a.set(r, j, v);
            }
            let scaled = factor * b[col];
            b[r] -= scaled;
        }
    }
    // back substitution
    let mut x = vec![CZERO; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        for j in i + 1..n {
            acc -= a.get(i, j) * x[j];
        }
        x[i] = acc / a.get(i, i);
    }
    Ok(x)
}

/// Orthonormal basis of the numerical kernel {x : ‖Ax‖ ≲ tol·‖A‖}.
///
/// Row reduction with partial pivoting decides the rank at `tol`; one basis
/// vector per free column is then orthonormalized with modified Gram–Schmidt
/// (run twice for stability). Output order follows the free columns, so the
/// basis is deterministic.
pub fn null_space(a: &ComplexMatrix, tol: f64) -> Vec<Vec<Complex64>> {
    assert!(tol > 0.0, "null-space tolerance must be positive");
    let (rref, pivot_cols) = a.reduced_row_echelon(tol);
    let free_cols: Vec<usize> = (0..a.cols()).filter(|c| !pivot_cols.contains(c)).collect();

    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(free_cols.len());
    for &free in &free_cols {
        let mut v = vec![CZERO; a.cols()];
        v[free] = CONE;
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rref.get(row, free);
        }
        basis.push(v);
    }

    let mut ortho: Vec<Vec<Complex64>> = Vec::with_capacity(basis.len());
    for mut v in basis {
        for _ in 0..2 {
            for q in &ortho {
                let overlap = dot_conj(q, &v);
                for (vi, qi) in v.iter_mut().zip(q.iter()) {
                    *vi -= overlap * qi;
                }
            }
        }
        let n = vec_norm(&v);
        debug_assert!(n > 0.0, "free-column vector collapsed during GS");
        for vi in &mut v {
            *vi /= n;
        }
        ortho.push(v);
    }
    ortho
}
