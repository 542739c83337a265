//! Finite-dimensional algebras, their crossed products by finite groups of
//! algebra automorphisms, and brute-force Hochschild homology through the
//! bar complex.
//!
//! Everything lives in internal degree 0, so the bar blocks grow like
//! `dim * (dim - 1)^q` and a hard size guard applies.  Ranks of the largest
//! differentials are certified by modular arithmetic where possible: for a
//! homology group `ker b_q / im b_{q+1}` we always compute the kernel side
//! exactly; the image rank mod a large prime is a lower bound on the exact
//! rank, so when the resulting upper bound on the homology dimension is 0
//! the exact answer is 0 (homology dimensions are non-negative).  Any other
//! outcome falls back to exact sparse elimination.

use num_traits::{One, Zero};

use super::bar::{BarComplex, GradedAlgebra, SparseVec};
use crate::exactla::{Rational, RationalMatrix};
use crate::groups::{FiniteGroup, GroupElement};
use crate::sparse::{SparseMatrix, CERT_PRIMES};
use crate::{Error, Result};

/// Columns above this count are certified mod p before any exact fallback.
const EXACT_COLUMN_LIMIT: usize = 2_000;

/// An associative unital algebra given by structure constants on a basis.
pub struct FinDimAlgebra {
    dim: usize,
    /// `table[i][j]` = coordinates of `e_i e_j`.
    table: Vec<Vec<SparseVec>>,
    unit: SparseVec,
}

fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl FinDimAlgebra {
    /// Build and validate: associativity on all basis triples and the unit
    /// law on all basis elements.
    pub fn new(dim: usize, table: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        if table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::Config("structure constant table has wrong shape".into()));
        }
        let alg = FinDimAlgebra { dim, table, unit };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = alg.multiply(&alg.table[i][j], &basis_vec(k));
                    let right = alg.multiply(&basis_vec(i), &alg.table[j][k]);
                    if left != right {
                        return Err(Error::Config(format!(
                            "structure constants are not associative at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        for i in 0..dim {
            let e = basis_vec(i);
            if alg.multiply(&alg.unit.clone(), &e) != e || alg.multiply(&e, &alg.unit.clone()) != e
            {
                return Err(Error::Config(format!("unit law fails on basis element {i}")));
            }
        }
        Ok(alg)
    }

    /// The matrix algebra `M_n(Q)` on the matrix-unit basis `E_{rc}`,
    /// indexed row-major.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if b == c {
                            table[a * n + b][c * n + d] = vec![(a * n + d, Rational::one())];
                        }
                    }
                }
            }
        }
        let unit = (0..n).map(|k| (k * n + k, Rational::one())).collect();
        FinDimAlgebra { dim, table, unit }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn unit_vector(&self) -> SparseVec {
        self.unit.clone()
    }

    pub fn multiply(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in a {
            for (j, c2) in b {
                for (k, c3) in &self.table[*i][*j] {
                    out.push((*k, c * c2 * c3));
                }
            }
        }
        normalize(out)
    }

    /// Matrix of left multiplication by `u`.
    fn left_multiplication(&self, u: &SparseVec) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.multiply(u, &basis_vec(j)) {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Inverse of an element, if it exists.
    pub fn element_inverse(&self, u: &SparseVec) -> Result<SparseVec> {
        let lu = self.left_multiplication(u);
        let mut rhs = RationalMatrix::zeros(self.dim, 1);
        for (i, c) in &self.unit {
            rhs.set(*i, 0, c.clone());
        }
        let x = lu
            .solve(&rhs)
            .ok_or_else(|| Error::Config("element is not invertible".into()))?;
        let candidate: SparseVec = (0..self.dim)
            .map(|i| (i, x.get(i, 0).clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // A left inverse in a finite-dimensional unital algebra is two-sided,
        // but check anyway.
        if normalize(self.multiply(&candidate, u)) != normalize(self.unit.clone()) {
            return Err(Error::Config("element has no two-sided inverse".into()));
        }
        Ok(candidate)
    }

    /// Matrix of the inner automorphism `a ↦ u a u^{-1}`.
    pub fn conjugation(&self, u: &SparseVec) -> Result<RationalMatrix> {
        let u_inv = self.element_inverse(u)?;
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let image = self.multiply(&self.multiply(u, &basis_vec(j)), &u_inv);
            for (k, c) in image {
                m.set(k, j, c);
            }
        }
        Ok(m)
    }

    fn apply_matrix(&self, m: &RationalMatrix, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v {
            for i in 0..self.dim {
                let a = m.get(i, *j);
                if !a.is_zero() {
                    out.push((i, a * c));
                }
            }
        }
        normalize(out)
    }

    /// Validate that a matrix is an algebra automorphism (invertible,
    /// multiplicative, unital) and wrap it as a group element.
    pub fn automorphism(&self, m: &RationalMatrix) -> Result<GroupElement> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::NotAutomorphism(format!(
                "matrix is {}x{}, algebra has dimension {}",
                m.rows(),
                m.cols(),
                self.dim
            )));
        }
        if m.inverse().is_err() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        if self.apply_matrix(m, &self.unit) != normalize(self.unit.clone()) {
            return Err(Error::NotAutomorphism("unit is not fixed".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.apply_matrix(m, &self.table[i][j]);
                let rhs =
                    self.multiply(&self.apply_matrix(m, &basis_vec(i)), &self.apply_matrix(m, &basis_vec(j)));
                if lhs != rhs {
                    return Err(Error::NotAutomorphism(format!(
                        "multiplicativity fails on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        GroupElement::algebra_auto(m.clone())
    }
}

fn basis_vec(i: usize) -> SparseVec {
    vec![(i, Rational::one())]
}

impl GradedAlgebra for FinDimAlgebra {
    fn dim(&self, degree: usize) -> usize {
        if degree == 0 {
            self.dim
        } else {
            0
        }
    }

    fn unit(&self) -> SparseVec {
        self.unit.clone()
    }

    fn product(&self, _ad: usize, a_idx: usize, _bd: usize, b_idx: usize) -> SparseVec {
        self.table[a_idx][b_idx].clone()
    }

    fn twist(&self, _degree: usize, index: usize) -> SparseVec {
        basis_vec(index)
    }

    fn twist_inverse(&self, _degree: usize, index: usize) -> SparseVec {
        basis_vec(index)
    }
}

/// Crossed product `A ⋊ Γ` of a finite-dimensional algebra by a finite
/// group of algebra automorphisms, with basis `(e_i, γ)` indexed as
/// `i * |Γ| + γ` and product `(a ⊗ γ)(b ⊗ δ) = a γ(b) ⊗ γδ`.
pub struct FinDimCrossed {
    pub base: FinDimAlgebra,
    pub group: FiniteGroup,
    autos: Vec<RationalMatrix>,
    class_of: Vec<usize>,
}

impl FinDimCrossed {
    pub fn new(base: FinDimAlgebra, group: FiniteGroup) -> Result<Self> {
        let mut autos = Vec::with_capacity(group.order());
        for e in group.elements() {
            let m = e.as_algebra_auto().ok_or_else(|| {
                Error::Config("crossed product needs a group of algebra automorphisms".into())
            })?;
            // Revalidate against this algebra; group closure alone does not
            // guarantee the matrices respect the product.
            base.automorphism(m)?;
            autos.push(m.clone());
        }
        let classes = group.conjugacy_classes();
        let mut class_of = vec![0usize; group.order()];
        for (ci, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = ci;
            }
        }
        Ok(FinDimCrossed { base, group, autos, class_of })
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension() * self.group.order()
    }

    fn split(&self, index: usize) -> (usize, usize) {
        (index / self.group.order(), index % self.group.order())
    }

    fn fuse(&self, i: usize, g: usize) -> usize {
        i * self.group.order() + g
    }
}

impl GradedAlgebra for FinDimCrossed {
    fn dim(&self, degree: usize) -> usize {
        if degree == 0 {
            self.dimension()
        } else {
            0
        }
    }

    fn unit(&self) -> SparseVec {
        let e = self.group.identity();
        self.base
            .unit_vector()
            .into_iter()
            .map(|(i, c)| (self.fuse(i, e), c))
            .collect()
    }

    fn product(&self, _ad: usize, a_idx: usize, _bd: usize, b_idx: usize) -> SparseVec {
        let (i, ga) = self.split(a_idx);
        let (j, gb) = self.split(b_idx);
        let gamma = self.group.product(ga, gb);
        let moved = self.base.apply_matrix(&self.autos[ga], &basis_vec(j));
        self.base
            .multiply(&basis_vec(i), &moved)
            .into_iter()
            .map(|(k, c)| (self.fuse(k, gamma), c))
            .collect()
    }

    fn twist(&self, _degree: usize, index: usize) -> SparseVec {
        basis_vec(index)
    }

    fn twist_inverse(&self, _degree: usize, index: usize) -> SparseVec {
        basis_vec(index)
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

/// Hochschild homology dimensions of a degree-0 algebra, split by
/// conjugacy-class sector.
#[derive(Debug, Clone)]
pub struct FindimHomology {
    /// `per_class[c][q]`.
    pub per_class: Vec<Vec<usize>>,
    pub totals: Vec<usize>,
    /// True if every certified value came from the modular bound alone
    /// (purely informational; values are exact either way).
    pub used_certificate: bool,
}

/// Rank with the modular certificate: exact when the column count is small,
/// otherwise mod-p lower bounds first.  `kernel_dim` is the exact dimension
/// of the kernel this image must fill for homology to vanish.
fn image_rank(m: &SparseMatrix, kernel_dim: usize, used_cert: &mut bool) -> usize {
    if m.ncols() <= EXACT_COLUMN_LIMIT {
        return m.rank_exact_best();
    }
    for p in CERT_PRIMES {
        if let Some(r) = m.rank_mod_p_best(p) {
            if r == kernel_dim {
                // Mod-p rank is a lower bound and the kernel an upper bound,
                // so the exact rank equals kernel_dim and homology is 0.
                *used_cert = true;
                return r;
            }
        }
    }
    m.rank_exact_best()
}

/// Brute-force Hochschild homology of a degree-0 algebra via the reduced
/// bar complex, one dimension table per conjugacy-class sector.
pub fn findim_hh_dims<A: GradedAlgebra>(alg: &A, q_max: usize) -> Result<FindimHomology> {
    if alg.dim(1) != 0 {
        return Err(Error::Config("findim homology expects a degree-0 algebra".into()));
    }
    let bar = BarComplex::new(alg)?;
    let blocks: Vec<_> =
        (0..=q_max + 1).map(|q| bar.block(q, 0)).collect::<Result<Vec<_>>>()?;
    let classes = alg.class_count();
    let mut per_class = vec![Vec::with_capacity(q_max + 1); classes];
    let mut used_certificate = false;

    for c in 0..classes {
        // Class-restricted differentials b_1 .. b_{q_max + 1}.
        let mut diffs: Vec<SparseMatrix> = Vec::with_capacity(q_max + 1);
        for q in 1..=q_max + 1 {
            let full = bar.differential(&blocks[q], &blocks[q - 1], true);
            diffs.push(BarComplex::<A>::restrict_to_class(&full, &blocks[q], &blocks[q - 1], c));
        }
        for w in diffs.windows(2) {
            if !w[0].composes_to_zero_with(&w[1]) {
                return Err(Error::CompositionNotZero(format!(
                    "bar differential does not square to zero in class {c}"
                )));
            }
        }
        for q in 0..=q_max {
            let cols_q = blocks[q].class_members[c].len();
            let kernel = if q == 0 {
                cols_q
            } else {
                cols_q - diffs[q - 1].rank_exact_best()
            };
            let image = image_rank(&diffs[q], kernel, &mut used_certificate);
            if image > kernel {
                return Err(Error::Internal(format!(
                    "image rank exceeds kernel dimension at q={q}, class {c}"
                )));
            }
            per_class[c].push(kernel - image);
        }
    }

    let totals =
        (0..=q_max).map(|q| per_class.iter().map(|v| v[q]).sum()).collect();
    Ok(FindimHomology { per_class, totals, used_certificate })
}
