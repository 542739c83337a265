//! Graded algebras fed to the bar engine: polynomial rings with a linear
//! twist, and crossed products `O[E] ⋊ Γ` for a finite linear group `Γ`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::bar::{GradedAlgebra, SparseVec};
use crate::exactla::{Rational, RationalMatrix};
use crate::groups::{FiniteGroup, GroupElement};
use crate::polyforms::{monomials_of_degree, substitute_monomial};
use crate::{Error, Result};

/// Table of basis monomials per degree with index lookup.
#[derive(Debug, Clone)]
pub struct MonoTable {
    pub vars: usize,
    pub by_degree: Vec<Vec<Vec<u32>>>,
    pub index: Vec<HashMap<Vec<u32>, usize>>,
}

impl MonoTable {
    pub fn new(vars: usize, d_max: usize) -> Self {
        let by_degree: Vec<Vec<Vec<u32>>> =
            (0..=d_max).map(|d| monomials_of_degree(vars, d)).collect();
        let index = by_degree
            .iter()
            .map(|ms| ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        MonoTable { vars, by_degree, index }
    }

    pub fn d_max(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn monomial(&self, degree: usize, idx: usize) -> &[u32] {
        &self.by_degree[degree][idx]
    }

    pub fn lookup(&self, mono: &[u32]) -> usize {
        let d: u32 = mono.iter().sum();
        self.index[d as usize][mono]
    }
}

/// Substitution tables: image of every basis monomial under `x_i ↦ Σ_j M_ij x_j`,
/// degree by degree, as sparse coordinate vectors.
pub(crate) fn substitution_tables_for(
    table: &MonoTable,
    m: &RationalMatrix,
) -> Vec<Vec<SparseVec>> {
    (0..=table.d_max())
        .map(|d| {
            table.by_degree[d]
                .iter()
                .map(|mono| {
                    substitute_monomial(mono, m)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// The polynomial ring on `vars` variables, twisted by an invertible matrix
/// acting by substitution: `g(a) = a(Gx)`.
pub struct PolyAlgebra {
    pub table: MonoTable,
    twist_fwd: Vec<Vec<SparseVec>>,
    twist_inv: Vec<Vec<SparseVec>>,
}

impl PolyAlgebra {
    /// Untwisted polynomial ring (twist is the identity).
    pub fn new(vars: usize, d_max: usize) -> Self {
        let g = RationalMatrix::identity(vars);
        Self::with_twist(vars, &g, d_max).expect("identity twist is always valid")
    }

    pub fn with_twist(vars: usize, g: &RationalMatrix, d_max: usize) -> Result<Self> {
        if g.rows() != vars || g.cols() != vars {
            return Err(Error::Config(format!(
                "twist matrix is {}x{}, expected {vars}x{vars}",
                g.rows(),
                g.cols()
            )));
        }
        let g_inv = g
            .inverse()
            .map_err(|_| Error::Config("twist matrix is not invertible".into()))?;
        let table = MonoTable::new(vars, d_max);
        let twist_fwd = substitution_tables_for(&table, g);
        let twist_inv = substitution_tables_for(&table, &g_inv);
        Ok(PolyAlgebra { table, twist_fwd, twist_inv })
    }

    pub fn vars(&self) -> usize {
        self.table.vars
    }
}

impl GradedAlgebra for PolyAlgebra {
    fn dim(&self, degree: usize) -> usize {
        if degree <= self.table.d_max() {
            self.table.by_degree[degree].len()
        } else {
            0
        }
    }

    fn unit(&self) -> SparseVec {
        vec![(0, Rational::one())]
    }

    fn product(&self, a_deg: usize, a_idx: usize, b_deg: usize, b_idx: usize) -> SparseVec {
        let a = self.table.monomial(a_deg, a_idx);
        let b = self.table.monomial(b_deg, b_idx);
        let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        vec![(self.table.lookup(&sum), Rational::one())]
    }

    fn twist(&self, degree: usize, index: usize) -> SparseVec {
        self.twist_fwd[degree][index].clone()
    }

    fn twist_inverse(&self, degree: usize, index: usize) -> SparseVec {
        self.twist_inv[degree][index].clone()
    }
}

/// Crossed product `O[E] ⋊ Γ` for a finite group of invertible linear
/// substitutions.  Basis elements are pairs (monomial, group element),
/// indexed as `mono_idx * |Γ| + elem_idx`, with multiplication
///
/// ```text
/// (a ⊗ γ)(b ⊗ δ) = a · γ(b) ⊗ γδ,      γ(b) = b(G_γ^{-1} x),
/// ```
///
/// where the action is by the inverse substitution so that it is a left
/// action and the product associative.  The twist is the identity: this
/// algebra is used for untwisted homology of the whole crossed product,
/// split into conjugacy-class sectors via `class_of_sectors`.
pub struct CrossedPolyAlgebra {
    pub table: MonoTable,
    pub group: FiniteGroup,
    /// Per group element: substitution table of its inverse matrix.
    action: Vec<Vec<Vec<SparseVec>>>,
    class_of: Vec<usize>,
}

impl CrossedPolyAlgebra {
    pub fn new(vars: usize, group: FiniteGroup, d_max: usize) -> Result<Self> {
        let table = MonoTable::new(vars, d_max);
        let mut action = Vec::with_capacity(group.order());
        for e in group.elements() {
            let m = match e {
                GroupElement::Linear(m) => m,
                _ => {
                    return Err(Error::Config(
                        "crossed polynomial algebra needs a linear group".into(),
                    ))
                }
            };
            if m.rows() != vars {
                return Err(Error::Config(format!(
                    "group acts on {} variables, algebra has {vars}",
                    m.rows()
                )));
            }
            let inv = m
                .inverse()
                .map_err(|_| Error::Internal("group element not invertible".into()))?;
            action.push(substitution_tables_for(&table, &inv));
        }
        let classes = group.conjugacy_classes();
        let mut class_of = vec![0usize; group.order()];
        for (ci, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = ci;
            }
        }
        Ok(CrossedPolyAlgebra { table, group, action, class_of })
    }

    pub fn class_count_internal(&self) -> usize {
        self.group.conjugacy_classes().len()
    }

    fn split(&self, index: usize) -> (usize, usize) {
        (index / self.group.order(), index % self.group.order())
    }

    fn fuse(&self, mono: usize, elem: usize) -> usize {
        mono * self.group.order() + elem
    }
}

impl GradedAlgebra for CrossedPolyAlgebra {
    fn dim(&self, degree: usize) -> usize {
        if degree <= self.table.d_max() {
            self.table.by_degree[degree].len() * self.group.order()
        } else {
            0
        }
    }

    fn unit(&self) -> SparseVec {
        vec![(self.fuse(0, self.group.identity()), Rational::one())]
    }

    fn product(&self, a_deg: usize, a_idx: usize, b_deg: usize, b_idx: usize) -> SparseVec {
        let (ma, ga) = self.split(a_idx);
        let (mb, gb) = self.split(b_idx);
        let gamma = self.group.product(ga, gb);
        let a_mono = self.table.monomial(a_deg, ma).to_vec();
        let mut out = SparseVec::new();
        for (mb_img, c) in &self.action[ga][b_deg][mb] {
            let b_mono = self.table.monomial(b_deg, *mb_img);
            let sum: Vec<u32> = a_mono.iter().zip(b_mono).map(|(x, y)| x + y).collect();
            out.push((self.fuse(self.table.lookup(&sum), gamma), c.clone()));
        }
        out
    }

    fn twist(&self, _degree: usize, index: usize) -> SparseVec {
        vec![(index, Rational::one())]
    }

    fn twist_inverse(&self, _degree: usize, index: usize) -> SparseVec {
        vec![(index, Rational::one())]
    }

    fn sector(&self, _degree: usize, index: usize) -> usize {
        self.split(index).1
    }

    fn class_count(&self) -> usize {
        self.class_of.iter().copied().max().unwrap_or(0) + 1
    }

    fn class_of_sectors(&self, sectors: &[usize]) -> usize {
        let mut g = self.group.identity();
        for &s in sectors {
            g = self.group.product(g, s);
        }
        self.class_of[g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn poly_product_and_twist() {
        // Q[x, y] with the swap twist.
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let a = PolyAlgebra::with_twist(2, &swap, 4).unwrap();
        // Monomials of degree 1 in lex ascending order: y = (0,1), x = (1,0).
        let y = a.table.lookup(&[0, 1]);
        let x = a.table.lookup(&[1, 0]);
        assert_eq!(a.twist(1, x), vec![(y, rat(1))]);
        assert_eq!(a.twist(1, y), vec![(x, rat(1))]);
        // x * y = xy.
        let xy = a.table.lookup(&[1, 1]);
        assert_eq!(a.product(1, x, 1, y), vec![(xy, rat(1))]);
    }

    #[test]
    fn crossed_product_is_associative_on_a_sample() {
        let group = crate::groups::symmetric_group_linear(2, 100).unwrap();
        let a = CrossedPolyAlgebra::new(2, group, 3).unwrap();
        // Exhaustively check (u v) w = u (v w) for degree-1 basis elements.
        let d = a.dim(1);
        for u in 0..d {
            for v in 0..d {
                for w in 0..d {
                    let mut left = SparseVec::new();
                    for (m, c) in a.product(1, u, 1, v) {
                        for (k, c2) in a.product(2, m, 1, w) {
                            left.push((k, &c * &c2));
                        }
                    }
                    let mut right = SparseVec::new();
                    for (m, c) in a.product(1, v, 1, w) {
                        for (k, c2) in a.product(1, u, 2, m) {
                            right.push((k, &c * &c2));
                        }
                    }
                    let norm = |mut v: SparseVec| {
                        v.sort_by_key(|(i, _)| *i);
                        let mut merged: SparseVec = Vec::new();
                        for (i, c) in v {
                            match merged.last_mut() {
                                Some((j, acc)) if *j == i => *acc += c,
                                _ => merged.push((i, c)),
                            }
                        }
                        merged.retain(|(_, c)| !c.is_zero());
                        merged
                    };
                    assert_eq!(norm(left), norm(right));
                }
            }
        }
    }

    #[test]
    fn crossed_unit_is_neutral() {
        let group = crate::groups::symmetric_group_linear(2, 100).unwrap();
        let a = CrossedPolyAlgebra::new(2, group, 3).unwrap();
        let (unit_idx, _) = a.unit()[0].clone();
        for i in 0..a.dim(2) {
            assert_eq!(a.product(0, unit_idx, 2, i), vec![(i, rat(1))]);
            assert_eq!(a.product(2, i, 0, unit_idx), vec![(i, rat(1))]);
        }
    }

    #[test]
    fn sector_labels_multiply() {
        let group = crate::groups::symmetric_group_linear(2, 100).unwrap();
        let a = CrossedPolyAlgebra::new(2, group, 2).unwrap();
        // Two transposition sectors multiply into the identity class.
        let swap = a
            .group
            .elements()
            .iter()
            .position(|e| !e.is_identity())
            .unwrap();
        let id_class = a.class_of_sectors(&[a.group.identity()]);
        assert_eq!(a.class_of_sectors(&[swap, swap]), id_class);
        assert_ne!(a.class_of_sectors(&[swap]), id_class);
    }
}
