//! Dense exact linear algebra over the rationals.
//!
//! This is the arithmetic substrate for every homology computation in the
//! crate: ranks, kernels, homology dimensions of two consecutive
//! differentials, and invariant dimensions of finite group representations.
//! Everything is a dense matrix of `BigRational`s and all elimination is
//! plain Gauss-Jordan with a deterministic pivot rule (first non-zero entry
//! in column order), so identical inputs always produce identical bases.

use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact scalar type used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parse a rational from a decimal integer or `p/q` string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Config(format!("cannot parse rational {s:?}: {e}")))
}

/// Dense matrix over `Rational`, stored row-major.  Zero-sized shapes are
/// legal and behave as the corresponding zero maps; graded complexes hit
/// empty blocks all the time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from explicit rows.  All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Config("ragged rows in matrix literal".into()));
        }
        Ok(RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer-entry convenience constructor, used heavily in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().map(|&n| rat(n))).collect();
        RationalMatrix { rows: rows.len(), cols: rows.first().map_or(0, |r| r.len()), data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Config("shape mismatch in matrix addition".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Config(format!(
                "shape mismatch in matrix product: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns in
    /// increasing order.  Pivot choice is the first row with a non-zero
    /// entry, which keeps the output deterministic.
    pub fn reduced_row_echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j) - &factor * self.get(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.reduced_row_echelon().len()
    }

    /// Basis of the right kernel in echelon form: one vector per free
    /// column, with a 1 in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.reduced_row_echelon();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse; errors if the matrix is singular or non-square.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Config("cannot invert a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let pivots = aug.reduced_row_echelon();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::Config("matrix is singular".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Solve `self * x = rhs` column by column.  Returns `None` if any
    /// column is inconsistent.  `self` need not be square.
    pub fn solve(&self, rhs: &RationalMatrix) -> Option<RationalMatrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let mut aug = Self::from_fn(self.rows, n + rhs.cols, |i, j| {
            if j < n { self.get(i, j).clone() } else { rhs.get(i, j - n).clone() }
        });
        let pivots = aug.reduced_row_echelon();
        // Any pivot in the right block means an inconsistent column.
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = RationalMatrix::zeros(n, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(r, n + j).clone());
            }
        }
        Some(x)
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Config("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !m.get(r, col).is_zero() {
                    let f = m.get(r, col) / &pivot;
                    for j in col..n {
                        let v = m.get(r, j) - &f * m.get(col, j);
                        m.set(r, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Exterior power `Λ^k`: the matrix of the induced map on `k`-vectors,
    /// indexed by `k`-subsets in lexicographic order.
    pub fn exterior_power(&self, k: usize) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Config("exterior power of a non-square matrix".into()));
        }
        let subs = crate::polyforms::subsets(self.rows, k);
        let mut out = Self::zeros(subs.len(), subs.len());
        for (a, rows) in subs.iter().enumerate() {
            for (b, cols) in subs.iter().enumerate() {
                let minor =
                    Self::from_fn(k, k, |i, j| self.get(rows[i], cols[j]).clone());
                out.set(a, b, minor.determinant()?);
            }
        }
        Ok(out)
    }
}

/// Dimension of homology at the middle of `C_in --d_in--> C --d_out--> C_out`,
/// i.e. `dim ker(d_out) - rank(d_in)`.  Requires `d_out ∘ d_in = 0`; the
/// composite is formed exactly and checked, since a silently non-zero
/// composition would make the subtraction meaningless.
pub fn homology_dim(d_in: &RationalMatrix, d_out: &RationalMatrix) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Config(format!(
            "homology_dim: middle dimensions disagree ({} vs {})",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositionNotZero(format!(
            "d_out ({}x{}) composed with d_in ({}x{})",
            d_out.rows(),
            d_out.cols(),
            d_in.rows(),
            d_in.cols()
        )));
    }
    let ker = d_out.cols() - d_out.rank();
    let im = d_in.rank();
    Ok(ker - im)
}

/// Dimension of the invariant subspace of a rational representation of a
/// finite group given by the full list of representing matrices.  Computed
/// as the trace of the averaging idempotent; errors if that trace is not a
/// non-negative integer, which would mean the input was not closed under
/// multiplication.
pub fn invariant_dimension(reps: &[RationalMatrix]) -> Result<usize> {
    if reps.is_empty() {
        return Err(Error::Config("invariant_dimension of an empty list".into()));
    }
    let n = reps[0].rows();
    for m in reps {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Config("representation matrices must be square of equal size".into()));
        }
    }
    let sum: Rational = reps.iter().map(RationalMatrix::trace).sum();
    let avg = sum / rat(reps.len() as i64);
    if !avg.is_integer() || avg.is_negative() {
        return Err(Error::NonIntegralTrace(format!(
            "averaged trace {avg} over {} matrices",
            reps.len()
        )));
    }
    Ok(avg.to_integer().try_into().expect("non-negative integer fits usize"))
}

/// Basis (echelon, deterministic) of the simultaneous fixed space
/// `∩ ker(m - 1)` of a list of square matrices.
pub fn joint_fixed_space(ops: &[RationalMatrix]) -> Vec<Vec<Rational>> {
    assert!(!ops.is_empty(), "joint_fixed_space of an empty list");
    let n = ops[0].cols();
    let stacked = RationalMatrix::from_fn(ops.len() * n, n, |i, j| {
        let (k, r) = (i / n, i % n);
        let m = &ops[k];
        let mut v = m.get(r, j).clone();
        if r == j {
            v -= Rational::one();
        }
        v
    });
    stacked.kernel_basis()
}

/// Express each column of `vectors` in the given spanning set, which must be
/// linearly independent.  Returns the coordinate matrix, or `None` if some
/// column lies outside the span.
pub fn coordinates_in_basis(
    basis: &[Vec<Rational>],
    vectors: &RationalMatrix,
) -> Option<RationalMatrix> {
    let rows = vectors.rows();
    let b = RationalMatrix::from_columns(basis, rows);
    b.solve(vectors)
}
