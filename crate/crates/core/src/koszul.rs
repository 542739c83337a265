//! Koszul complexes `K_j = R ⊗ Λ^j E` over a polynomial ring, with exact
//! graded homology.
//!
//! The data is a polynomial ring `R = Q[x_1..x_n]`, an exterior space `E` of
//! dimension `e`, and a map `f : E -> R` landing in polynomials of degree at
//! most one, stored as an `e × (n+1)` matrix: column 0 holds the constant
//! coefficient, columns `1..=n` the linear part.  The differential is
//!
//! ```text
//! ∂(m ⊗ e_{i_1} ∧ … ∧ e_{i_j}) = Σ_k (-1)^{k-1} f(e_{i_k}) · m ⊗ (e_{i_1} ∧ … omit e_{i_k} … ∧ e_{i_j})
//! ```
//!
//! Exterior generators carry internal degree 1, so with `f` homogeneous
//! linear the differential preserves the internal degree `D` and each
//! `(j, D)` block is an exact-rational matrix.  A constant coefficient in
//! `f` adds a degree-dropping component `(j, D) -> (j-1, D-1)`; the square
//! of the full differential is still verified to vanish componentwise, but
//! graded homology tables are only defined in the homogeneous case.
//!
//! The main consumer is [`koszul_restriction_dims`]: for a finite-order
//! `g` with `g - 1` injective transverse to its fixed space, the complex
//! with `f = (g^* - 1)` composed with the inclusion `E^* -> R` has homology
//! the polynomial forms on `ker(g - 1)`, which is the closed-form side of
//! the twisted Hochschild computation.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exactla::{homology_dim, Rational, RationalMatrix};
use crate::polyforms::{form_space_dim, monomials_of_degree, subsets};
use crate::report::DimTable;
use crate::{Error, Result};

/// A Koszul complex with all graded blocks materialized up to `d_max`.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    ambient: usize,
    exterior: usize,
    f: RationalMatrix,
    d_max: usize,
    /// Degree-preserving component of `∂` on block `(j, d)`, keyed by the
    /// source block.
    linear_blocks: HashMap<(usize, usize), RationalMatrix>,
    /// Degree-dropping component coming from constant terms of `f`.
    const_blocks: HashMap<(usize, usize), RationalMatrix>,
}

fn mono_count(n: usize, d: usize) -> usize {
    if n == 0 {
        usize::from(d == 0)
    } else {
        crate::polyforms::binomial(n + d - 1, d)
    }
}

fn block_dim(n: usize, e: usize, j: usize, d: usize) -> usize {
    if j > e || d < j {
        return 0;
    }
    mono_count(n, d - j) * crate::polyforms::binomial(e, j)
}

/// Build the complex and verify `∂ ∘ ∂ = 0` on every graded component.
pub fn build_koszul(
    ambient: usize,
    exterior: usize,
    f: RationalMatrix,
    d_max: usize,
) -> Result<KoszulComplex> {
    if f.rows() != exterior || f.cols() != ambient + 1 {
        return Err(Error::Config(format!(
            "f must be {}x{}, got {}x{}",
            exterior,
            ambient + 1,
            f.rows(),
            f.cols()
        )));
    }
    let mut complex = KoszulComplex {
        ambient,
        exterior,
        f,
        d_max,
        linear_blocks: HashMap::new(),
        const_blocks: HashMap::new(),
    };
    for j in 1..=exterior {
        for d in 0..=d_max {
            let (lin, cst) = complex.assemble_block(j, d);
            complex.linear_blocks.insert((j, d), lin);
            complex.const_blocks.insert((j, d), cst);
        }
    }
    complex.verify_squares_to_zero()?;
    Ok(complex)
}

impl KoszulComplex {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn exterior(&self) -> usize {
        self.exterior
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn is_homogeneous(&self) -> bool {
        (0..self.exterior).all(|i| self.f.get(i, 0).is_zero())
    }

    /// Basis size of `K_{j}` in internal degree `d`.
    pub fn block_dim(&self, j: usize, d: usize) -> usize {
        block_dim(self.ambient, self.exterior, j, d)
    }

    /// Degree-preserving differential component `(j, d) -> (j-1, d)` for
    /// `j >= 1`.  Blocks outside the materialized range are zero maps of
    /// the right shape.
    pub fn linear_block(&self, j: usize, d: usize) -> RationalMatrix {
        assert!(j >= 1, "differential starts at j = 1");
        self.linear_blocks.get(&(j, d)).cloned().unwrap_or_else(|| {
            RationalMatrix::zeros(self.block_dim(j - 1, d), self.block_dim(j, d))
        })
    }

    fn assemble_block(&self, j: usize, d: usize) -> (RationalMatrix, RationalMatrix) {
        let n = self.ambient;
        if d < j {
            let lin = RationalMatrix::zeros(self.block_dim(j - 1, d), 0);
            let cst = RationalMatrix::zeros(
                if d == 0 { 0 } else { self.block_dim(j - 1, d - 1) },
                0,
            );
            return (lin, cst);
        }
        let src_monos = monomials_of_degree(n, d - j);
        let src_subs = subsets(self.exterior, j);
        let tgt_monos = monomials_of_degree(n, d - (j - 1));
        let tgt_subs = subsets(self.exterior, j - 1);
        let tgt_mono_idx: HashMap<&[u32], usize> =
            tgt_monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let tgt_sub_idx: HashMap<&[usize], usize> =
            tgt_subs.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut lin = RationalMatrix::zeros(tgt_monos.len() * tgt_subs.len(), src_monos.len() * src_subs.len());

        // Degree-dropping target: same monomial degree as source.
        let drop_monos = &src_monos;
        let drop_mono_idx: HashMap<&[u32], usize> =
            drop_monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let drop_rows = if d == 0 { 0 } else { drop_monos.len() * tgt_subs.len() };
        let mut cst = RationalMatrix::zeros(drop_rows, src_monos.len() * src_subs.len());

        for (mi, mono) in src_monos.iter().enumerate() {
            for (si, sub) in src_subs.iter().enumerate() {
                let col = mi * src_subs.len() + si;
                for (k, &gen) in sub.iter().enumerate() {
                    let sign = if k % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
                    let mut reduced = sub.clone();
                    reduced.remove(k);
                    let tsi = tgt_sub_idx[reduced.as_slice()];
                    // Linear part of f(e_gen).
                    for l in 0..n {
                        let c = self.f.get(gen, l + 1);
                        if c.is_zero() {
                            continue;
                        }
                        let mut bumped = mono.clone();
                        bumped[l] += 1;
                        let row = tgt_mono_idx[bumped.as_slice()] * tgt_subs.len() + tsi;
                        let v = lin.get(row, col) + &sign * c;
                        lin.set(row, col, v);
                    }
                    // Constant part.
                    let c0 = self.f.get(gen, 0);
                    if !c0.is_zero() && drop_rows > 0 {
                        let row = drop_mono_idx[mono.as_slice()] * tgt_subs.len() + tsi;
                        let v = cst.get(row, col) + &sign * c0;
                        cst.set(row, col, v);
                    }
                }
            }
        }
        (lin, cst)
    }

    fn const_block(&self, j: usize, d: usize) -> Option<&RationalMatrix> {
        self.const_blocks.get(&(j, d))
    }

    fn verify_squares_to_zero(&self) -> Result<()> {
        for j in 2..=self.exterior {
            for d in 0..=self.d_max {
                let l1 = self.linear_block(j, d);
                let l0 = self.linear_block(j - 1, d);
                if l1.cols() > 0 && !l0.mul(&l1)?.is_zero() {
                    return Err(Error::CompositionNotZero(format!(
                        "koszul linear component at (j={j}, d={d})"
                    )));
                }
                // Cross terms with the constant component.
                if !self.is_homogeneous() && d > 0 {
                    if let (Some(c1), Some(c0)) =
                        (self.const_block(j, d), self.const_block(j - 1, d))
                    {
                        let a = c0.mul(&self.linear_block(j, d))?;
                        let b = self.linear_block(j - 1, d - 1).mul(c1)?;
                        if !a.add(&b)?.is_zero() {
                            return Err(Error::CompositionNotZero(format!(
                                "koszul mixed component at (j={j}, d={d})"
                            )));
                        }
                    }
                    if d > 1 {
                        if let (Some(c1), Some(c0)) =
                            (self.const_block(j, d), self.const_block(j - 1, d - 1))
                        {
                            if c1.cols() > 0 && !c0.mul(c1)?.is_zero() {
                                return Err(Error::CompositionNotZero(format!(
                                    "koszul constant component at (j={j}, d={d})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Graded homology dimensions, one entry per `(j, D)` with `j <= e` and
/// `D <= d_max`.  Requires homogeneous `f`; a constant component mixes
/// internal degrees and the graded table would be meaningless.
pub fn koszul_homology_dims(complex: &KoszulComplex) -> Result<DimTable> {
    if !complex.is_homogeneous() {
        return Err(Error::Config(
            "graded Koszul homology requires f without constant terms".into(),
        ));
    }
    let mut table = DimTable::new(complex.exterior, complex.d_max);
    for j in 0..=complex.exterior {
        for d in 0..=complex.d_max {
            let d_in = complex.linear_block(j + 1, d);
            let d_out = if j == 0 {
                RationalMatrix::zeros(0, complex.block_dim(0, d))
            } else {
                complex.linear_block(j, d)
            };
            table.set(j, d, homology_dim(&d_in, &d_out)?);
        }
    }
    Ok(table)
}

/// Check the Künneth property: the graded homology of the direct-sum
/// complex equals the convolution of the two factors' tables.  Both inputs
/// must be homogeneous.
pub fn koszul_kunneth_check(a: &KoszulComplex, b: &KoszulComplex) -> Result<bool> {
    let d_max = a.d_max.min(b.d_max);
    let n = a.ambient + b.ambient;
    let e = a.exterior + b.exterior;
    let f = RationalMatrix::from_fn(e, n + 1, |i, j| {
        if i < a.exterior {
            if j == 0 {
                a.f.get(i, 0).clone()
            } else if j <= a.ambient {
                a.f.get(i, j).clone()
            } else {
                Rational::zero()
            }
        } else if j == 0 {
            b.f.get(i - a.exterior, 0).clone()
        } else if j > a.ambient {
            b.f.get(i - a.exterior, j - a.ambient).clone()
        } else {
            Rational::zero()
        }
    });
    let combined = build_koszul(n, e, f, d_max)?;
    let ta = koszul_homology_dims(a)?;
    let tb = koszul_homology_dims(b)?;
    let tc = koszul_homology_dims(&combined)?;
    for j in 0..=e {
        for d in 0..=d_max {
            let mut expect = 0usize;
            for j1 in 0..=j.min(a.exterior) {
                for d1 in 0..=d {
                    expect += ta.get(j1, d1) * tb.get(j - j1, d - d1);
                }
            }
            if tc.get(j, d) != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Graded homology of the Koszul complex attached to a finite-order linear
/// `g`: exterior space `E^*` of the ambient, `f(e_i) = Σ_j (g - 1)_{ij} x_j`.
///
/// Requires `g - 1` to be injective on a complement of its kernel
/// (equivalently `rank((g-1)^2) = rank(g-1)`); under that hypothesis the
/// homology is the space of polynomial forms on `ker(g - 1)` and the
/// computed table is cross-checked against that closed form.
pub fn koszul_restriction_dims(g: &RationalMatrix, d_max: usize) -> Result<DimTable> {
    let n = g.rows();
    if g.cols() != n {
        return Err(Error::Config("koszul_restriction_dims needs a square matrix".into()));
    }
    let h = g.sub(&RationalMatrix::identity(n))?;
    let rank_h = h.rank();
    if h.mul(&h)?.rank() != rank_h {
        return Err(Error::HypothesisViolated(
            "g - 1 is not injective transverse to its fixed space".into(),
        ));
    }
    let f = RationalMatrix::from_fn(n, n + 1, |i, j| {
        if j == 0 {
            Rational::zero()
        } else {
            h.get(i, j - 1).clone()
        }
    });
    let complex = build_koszul(n, n, f, d_max)?;
    let table = koszul_homology_dims(&complex)?;
    let fixed_dim = n - rank_h;
    for j in 0..=n {
        for d in 0..=d_max {
            let expect = if d >= j { form_space_dim(fixed_dim, d - j, j) } else { 0 };
            if table.get(j, d) != expect {
                return Err(Error::Internal(format!(
                    "koszul homology at (j={j}, d={d}) is {} but the closed form gives {expect}",
                    table.get(j, d)
                )));
            }
        }
    }
    Ok(table)
}

/// The Koszul resolution of the origin: `E = Q^n`, `f(e_i) = x_i`.  Its
/// homology is one-dimensional, concentrated at `(j, D) = (0, 0)`.
pub fn koszul_origin_complex(n: usize, d_max: usize) -> Result<KoszulComplex> {
    let f = RationalMatrix::from_fn(n, n + 1, |i, j| {
        if j == i + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::zero()
        }
    });
    build_koszul(n, n, f, d_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    #[test]
    fn origin_resolution_is_a_point() {
        for n in 1..=3usize {
            let k = koszul_origin_complex(n, 4).unwrap();
            let t = koszul_homology_dims(&k).unwrap();
            for j in 0..=n {
                for d in 0..=4usize {
                    let expect = usize::from(j == 0 && d == 0);
                    assert_eq!(t.get(j, d), expect, "n={n} j={j} d={d}");
                }
            }
        }
    }

    #[test]
    fn single_variable_multiplication() {
        // K(Q[x]; f(e) = x): homology Q at (0, 0) only.
        let k = koszul_origin_complex(1, 5).unwrap();
        let t = koszul_homology_dims(&k).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(0, 3), 0);
        assert_eq!(t.get(1, 3), 0);
    }

    #[test]
    fn zero_map_gives_full_exterior_algebra() {
        // f = 0: homology is the whole complex, R ⊗ Λ E.
        let f = RationalMatrix::zeros(2, 3);
        let k = build_koszul(2, 2, f, 3).unwrap();
        let t = koszul_homology_dims(&k).unwrap();
        for j in 0..=2usize {
            for d in 0..=3usize {
                assert_eq!(t.get(j, d), k.block_dim(j, d));
            }
        }
    }

    #[test]
    fn kunneth_for_two_origin_factors() {
        let a = koszul_origin_complex(1, 4).unwrap();
        let b = koszul_origin_complex(2, 4).unwrap();
        assert!(koszul_kunneth_check(&a, &b).unwrap());
    }

    #[test]
    fn kunneth_with_trivial_factor() {
        let a = koszul_origin_complex(2, 3).unwrap();
        let trivial = build_koszul(0, 0, RationalMatrix::zeros(0, 1), 3).unwrap();
        assert!(koszul_kunneth_check(&a, &trivial).unwrap());
        let ta = koszul_homology_dims(&a).unwrap();
        let tt = koszul_homology_dims(&trivial).unwrap();
        assert_eq!(tt.get(0, 0), 1);
        assert_eq!(ta.get(0, 0), 1);
    }

    #[test]
    fn affine_f_passes_square_check_but_refuses_grading() {
        // f(e) = 1 + x: invertible element, complex is exact, but graded
        // homology is undefined.
        let f = RationalMatrix::from_rows(vec![vec![rat(1), rat(1)]]).unwrap();
        let k = build_koszul(1, 1, f, 3).unwrap();
        match koszul_homology_dims(&k) {
            Err(crate::Error::Config(_)) => {}
            other => panic!("expected Config error, got {other:?}"),
        }
    }

    #[test]
    fn restriction_dims_for_minus_one() {
        let g = RationalMatrix::from_i64(&[&[-1]]);
        let t = koszul_restriction_dims(&g, 4).unwrap();
        assert_eq!(t.get(0, 0), 1);
        for d in 1..=4usize {
            assert_eq!(t.get(0, d), 0);
            assert_eq!(t.get(1, d), 0);
        }
    }

    #[test]
    fn restriction_dims_for_swap() {
        // Swap on C^2: fixed line, m = 1.
        let g = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let t = koszul_restriction_dims(&g, 4).unwrap();
        for d in 0..=4usize {
            assert_eq!(t.get(0, d), 1, "q=0 d={d}");
            assert_eq!(t.get(1, d), usize::from(d >= 1), "q=1 d={d}");
            assert_eq!(t.get(2, d), 0, "q=2 d={d}");
        }
    }

    #[test]
    fn restriction_rejects_unipotent() {
        let g = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        match koszul_restriction_dims(&g, 3) {
            Err(crate::Error::HypothesisViolated(_)) => {}
            other => panic!("expected HypothesisViolated, got {other:?}"),
        }
    }

    #[test]
    fn restriction_handles_rational_rotation_blocks() {
        // Order 2 diagonal with an honest fixed direction.
        let g = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(0), ratio(-1, 1)],
        ])
        .unwrap();
        let t = koszul_restriction_dims(&g, 3).unwrap();
        for d in 0..=3usize {
            assert_eq!(t.get(0, d), 1);
            assert_eq!(t.get(1, d), usize::from(d >= 1));
        }
    }
}
