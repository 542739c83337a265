//! Sparse exact elimination for large structured differentials.
//!
//! The bar complex of a finite-dimensional crossed product has blocks with
//! tens of thousands of columns but only a handful of entries per column.
//! Dense `BigRational` elimination is hopeless there, so this module keeps
//! columns sparse and reduces them left-to-right against previously stored
//! pivot columns (left-looking echelon).
//!
//! Two instantiations of the same algorithm are provided: exact rational
//! arithmetic, and arithmetic modulo a large prime.  The modular one is
//! used only as a vanishing certificate: for a matrix with p-integral
//! entries, `rank mod p <= rank over Q`, and for the kernel side
//! `dim ker over Q <= dim ker mod p`.  So when an upper bound
//! `dim ker_p(d_out) - rank_p(d_in)` computed mod p is zero, and the exact
//! composition `d_out ∘ d_in = 0` has been verified, the rational homology
//! is exactly zero.  Whenever the certificate is inconclusive the caller
//! falls back to exact arithmetic, so reported dimensions are always exact.

use num_traits::Zero;

use crate::exactla::Rational;

/// A matrix stored as sparse columns of `(row, value)` pairs, rows strictly
/// increasing within each column.
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Append a column given as unsorted terms; duplicates are summed and
    /// zeros dropped.
    pub fn push_column(&mut self, mut terms: Vec<(usize, Rational)>) {
        terms.sort_by_key(|t| t.0);
        let mut col: Vec<(usize, Rational)> = Vec::with_capacity(terms.len());
        for (r, v) in terms {
            debug_assert!(r < self.rows);
            match col.last_mut() {
                Some(last) if last.0 == r => last.1 += v,
                _ => col.push((r, v)),
            }
        }
        col.retain(|(_, v)| !v.is_zero());
        self.cols.push(col);
    }

    /// Apply to a single sparse column vector: `self * v`.
    pub fn apply_sparse(&self, v: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (j, c) in v {
            for (r, a) in &self.cols[*j] {
                let e = acc.entry(*r).or_insert_with(Rational::zero);
                *e += a * c;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Check that `self ∘ inner = 0` exactly, column by column.
    pub fn composes_to_zero_with(&self, inner: &SparseMatrix) -> bool {
        assert_eq!(inner.rows, self.ncols(), "composition shape mismatch");
        inner.cols.iter().all(|c| self.apply_sparse(c).is_empty())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((j, v.clone()));
            }
        }
        SparseMatrix { rows: self.ncols(), cols }
    }

    /// Exact rank, eliminating on the transpose when that side is narrower.
    pub fn rank_exact_best(&self) -> usize {
        if self.ncols() > self.rows {
            self.transpose().rank_exact()
        } else {
            self.rank_exact()
        }
    }

    /// Rank mod `p`, eliminating on the narrower side.
    pub fn rank_mod_p_best(&self, p: u64) -> Option<usize> {
        if self.ncols() > self.rows {
            self.transpose().rank_mod_p(p)
        } else {
            self.rank_mod_p(p)
        }
    }

    /// Exact rank by left-looking sparse echelon.
    pub fn rank_exact(&self) -> usize {
        // Pivot columns, fully reduced at insertion time, keyed by leading row.
        let mut pivots: Vec<(usize, Vec<(usize, Rational)>)> = Vec::new();
        let mut acc: Vec<Rational> = vec![Rational::zero(); self.rows];
        let mut touched: Vec<usize> = Vec::new();
        for col in &self.cols {
            scatter(&mut acc, &mut touched, col);
            for (lead, pcol) in &pivots {
                let c = acc[*lead].clone();
                if c.is_zero() {
                    continue;
                }
                for (r, v) in pcol {
                    if acc[*r].is_zero() && !v.is_zero() {
                        touched.push(*r);
                    }
                    acc[*r] -= &c * v;
                }
            }
            let lead = collect_lead(&acc, &mut touched);
            if let Some(lead) = lead {
                let inv = acc[lead].recip();
                let mut stored: Vec<(usize, Rational)> = Vec::new();
                touched.sort_unstable();
                touched.dedup();
                for &r in touched.iter() {
                    if !acc[r].is_zero() {
                        stored.push((r, &acc[r] * &inv));
                    }
                }
                pivots.push((lead, stored));
            }
            clear(&mut acc, &mut touched);
        }
        pivots.len()
    }

    /// Rank of the reduction mod `p`.  Returns `None` when some denominator
    /// vanishes mod `p`, in which case the caller should pick another prime.
    pub fn rank_mod_p(&self, p: u64) -> Option<usize> {
        let mut pivots: Vec<(usize, Vec<(usize, u64)>)> = Vec::new();
        let mut acc: Vec<u64> = vec![0; self.rows];
        let mut touched: Vec<usize> = Vec::new();
        for col in &self.cols {
            for (r, v) in col {
                let m = mod_p(v, p)?;
                if acc[*r] == 0 && m != 0 {
                    touched.push(*r);
                }
                acc[*r] = add_mod(acc[*r], m, p);
            }
            for (lead, pcol) in &pivots {
                let c = acc[*lead];
                if c == 0 {
                    continue;
                }
                let neg = p - c;
                for (r, v) in pcol {
                    if acc[*r] == 0 {
                        touched.push(*r);
                    }
                    acc[*r] = add_mod(acc[*r], mul_mod(neg, *v, p), p);
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let lead = touched.iter().copied().find(|&r| acc[r] != 0);
            if let Some(lead) = lead {
                let inv = inv_mod(acc[lead], p);
                let stored: Vec<(usize, u64)> = touched
                    .iter()
                    .filter(|&&r| acc[r] != 0)
                    .map(|&r| (r, mul_mod(acc[r], inv, p)))
                    .collect();
                pivots.push((lead, stored));
            }
            for &r in &touched {
                acc[r] = 0;
            }
            touched.clear();
        }
        Some(pivots.len())
    }

    /// Densify, for small blocks that feed the dense routines.
    pub fn to_dense(&self) -> crate::exactla::RationalMatrix {
        let mut m = crate::exactla::RationalMatrix::zeros(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, j, v.clone());
            }
        }
        m
    }
}

fn scatter(acc: &mut [Rational], touched: &mut Vec<usize>, col: &[(usize, Rational)]) {
    for (r, v) in col {
        if acc[*r].is_zero() && !v.is_zero() {
            touched.push(*r);
        }
        acc[*r] += v;
    }
}

fn collect_lead(acc: &[Rational], touched: &mut Vec<usize>) -> Option<usize> {
    touched.sort_unstable();
    touched.dedup();
    touched.iter().copied().find(|&r| !acc[r].is_zero())
}

fn clear(acc: &mut [Rational], touched: &mut Vec<usize>) {
    for &r in touched.iter() {
        acc[r] = Rational::zero();
    }
    touched.clear();
}

/// Reduce a rational to `F_p`; `None` if the denominator is divisible by `p`.
fn mod_p(v: &Rational, p: u64) -> Option<u64> {
    let num = big_mod(v.numer(), p);
    let den = big_mod(v.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn big_mod(n: &num_bigint::BigInt, p: u64) -> u64 {
    use num_traits::{Signed, ToPrimitive};
    let m = (n.abs() % num_bigint::BigInt::from(p)).to_u64().expect("residue fits u64");
    if n.is_negative() && m != 0 {
        p - m
    } else {
        m
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Primes just under 2^31, used for rank certificates.
pub const CERT_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = SparseMatrix::new(r);
        for j in 0..c {
            let col: Vec<(usize, Rational)> = (0..r)
                .filter(|&i| rows[i][j] != 0)
                .map(|i| (i, rat(rows[i][j])))
                .collect();
            m.push_column(col);
        }
        m
    }

    #[test]
    fn exact_rank_matches_dense() {
        let m = from_dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.to_dense().rank(), 2);
    }

    #[test]
    fn modular_rank_agrees_on_small_integer_matrix() {
        let m = from_dense(&[&[1, 0, 5], &[0, 1, -7], &[1, 1, -2]]);
        let exact = m.rank_exact();
        for p in CERT_PRIMES {
            assert_eq!(m.rank_mod_p(p), Some(exact));
        }
    }

    #[test]
    fn modular_rank_handles_rationals() {
        let mut m = SparseMatrix::new(2);
        m.push_column(vec![(0, ratio(1, 2)), (1, ratio(1, 3))]);
        m.push_column(vec![(0, ratio(3, 2)), (1, rat(2))]);
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.rank_mod_p(CERT_PRIMES[0]), Some(2));
        // A dependent pair: the second column is three times the first.
        let mut s = SparseMatrix::new(2);
        s.push_column(vec![(0, ratio(1, 2)), (1, ratio(1, 3))]);
        s.push_column(vec![(0, ratio(3, 2)), (1, rat(1))]);
        assert_eq!(s.rank_exact(), 1);
        assert_eq!(s.rank_mod_p(CERT_PRIMES[0]), Some(1));
    }

    #[test]
    fn duplicate_terms_are_merged() {
        let mut m = SparseMatrix::new(2);
        m.push_column(vec![(1, rat(2)), (0, rat(1)), (1, rat(-2))]);
        assert_eq!(m.cols[0], vec![(0, rat(1))]);
    }

    #[test]
    fn composition_check() {
        // d_out = [1 1], d_in = [1, -1]^T: composes to zero.
        let mut d_in = SparseMatrix::new(2);
        d_in.push_column(vec![(0, rat(1)), (1, rat(-1))]);
        let mut d_out = SparseMatrix::new(1);
        d_out.push_column(vec![(0, rat(1))]);
        d_out.push_column(vec![(0, rat(1))]);
        assert!(d_out.composes_to_zero_with(&d_in));
    }
}
