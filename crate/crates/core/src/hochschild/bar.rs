//! Generic reduced bar complexes over a graded algebra with a distinguished
//! basis.
//!
//! The engine works for any algebra presented degree by degree with sparse
//! structure constants: polynomial rings (one basis monomial per exponent),
//! finite-dimensional algebras (everything in degree 0), and crossed
//! products of either.  The chains in homological degree `q` and internal
//! degree `D` are spanned by tensors
//!
//! ```text
//! a_0 ⊗ ā_1 ⊗ … ⊗ ā_q,   deg a_0 + … + deg a_q = D,
//! ```
//!
//! where slot 0 runs over the full basis and slots `>= 1` over a fixed
//! complement of the unit line (the reduced, or normalized, complex).  For
//! connected graded algebras the complement is simply "degree >= 1"; in
//! degree 0 the complement drops the first basis vector carrying a non-zero
//! unit coordinate.
//!
//! Differential conventions, with `g` the twisting endomorphism:
//!
//! ```text
//! b'_g(a_0 ⊗ … ⊗ a_q) = a_0 g(a_1) ⊗ a_2 ⊗ … ⊗ a_q
//!                        + Σ_{i=1}^{q-1} (-1)^i a_0 ⊗ … ⊗ a_i a_{i+1} ⊗ … ⊗ a_q
//! b_g = b'_g + (-1)^q (a_q a_0) ⊗ a_1 ⊗ … ⊗ a_{q-1}
//! ```
//!
//! so the twist sits in the leading term only.  The compatible Connes
//! boundary twists every slot that passes the basepoint by `g^{-1}`:
//!
//! ```text
//! B_g(x) = Σ_{k=0}^{q} (-1)^{qk}
//!          1 ⊗ g^{-1}(a_{q-k+1}) ⊗ … ⊗ g^{-1}(a_q) ⊗ g^{-1}(a_0)
//!            ⊗ a_1 ⊗ … ⊗ a_{q-k},
//! ```
//!
//! projected back into the reduced complex.  At `g = id` this is the
//! classical `s ∘ (1 + t + … + t^q)`; the `g^{-1}` placement is forced by
//! the leading-term twist in `b'_g`: the change of basis
//! `a_0 ⊗ … ⊗ a_q ↦ a_0 ⊗ g(a_1) ⊗ … ⊗ g(a_q)` carries `b_g` to the
//! differential with the twist `g^{-1}` in the cyclic face instead, which
//! is cyclic in the standard sense, and transporting its Connes boundary
//! back produces the formula above.  With this pairing `b_g B_g + B_g b_g`
//! is `1 - (diagonal g^{-1})`, which vanishes on the twist-invariant
//! subcomplex.
//!
//! The acyclicity witness for `b'_g` is the twisted extra degeneracy
//! `s_g(a_0 ⊗ …) = 1 ⊗ g^{-1}(a_0) ⊗ …`, which satisfies
//! `s_g b'_g + b'_g s_g = id` exactly; the untwisted `s` satisfies this only
//! for `g = id` (the leading twisted term of `b'_g` breaks the usual
//! cancellation).  For `g = id` the two degeneracies coincide.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exactla::Rational;
use crate::sparse::SparseMatrix;
use crate::{Error, Result};

/// Sparse element of a fixed graded piece: `(basis index, coefficient)`.
pub type SparseVec = Vec<(usize, Rational)>;

/// An algebra with a chosen basis in every degree and sparse products.
pub trait GradedAlgebra {
    /// Number of basis elements in the given degree.
    fn dim(&self, degree: usize) -> usize;

    /// Coordinates of the unit in degree 0.
    fn unit(&self) -> SparseVec;

    /// Product of two basis elements; lands in `a_deg + b_deg`.
    fn product(&self, a_deg: usize, a_idx: usize, b_deg: usize, b_idx: usize) -> SparseVec;

    /// The twisting endomorphism on a basis element (degree-preserving).
    fn twist(&self, degree: usize, index: usize) -> SparseVec;

    /// Inverse of the twist, needed for the contraction.
    fn twist_inverse(&self, degree: usize, index: usize) -> SparseVec;

    /// Group sector of a basis element, for crossed products; plain
    /// algebras live in sector 0.
    fn sector(&self, _degree: usize, _index: usize) -> usize {
        0
    }

    /// Number of conjugacy classes used as block labels.
    fn class_count(&self) -> usize {
        1
    }

    /// Conjugation-invariant label of an ordered product of sectors.
    fn class_of_sectors(&self, _sectors: &[usize]) -> usize {
        0
    }
}

/// One basis tensor: degrees per slot, plus basis indices.  Slot 0 indexes
/// the full basis of its degree; slots `>= 1` index the reduced complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarTensor {
    pub degrees: Vec<u32>,
    pub indices: Vec<u32>,
}

/// A materialized `(q, D)` block of the reduced bar complex.
#[derive(Debug, Clone)]
pub struct BarBlock {
    pub q: usize,
    pub degree: usize,
    pub tensors: Vec<BarTensor>,
    pub index: HashMap<BarTensor, usize>,
    /// Class label per tensor (all zero for plain algebras).
    pub labels: Vec<usize>,
    /// Tensor positions per class, increasing.
    pub class_members: Vec<Vec<usize>>,
    /// Position of each tensor within its class.
    pub class_position: Vec<usize>,
}

impl BarBlock {
    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }
}

/// Bar complex machinery over a borrowed algebra.
pub struct BarComplex<'a, A: GradedAlgebra> {
    alg: &'a A,
    /// Complement pivot in degree 0 (the dropped basis index) and the
    /// expansion of that pivot in the reduced basis, modulo the unit.
    pivot: usize,
    pivot_expansion: SparseVec,
    size_limit: usize,
}

/// Default ceiling on the number of tensors in a single block.
pub const DEFAULT_BLOCK_LIMIT: usize = 200_000;

impl<'a, A: GradedAlgebra> BarComplex<'a, A> {
    pub fn new(alg: &'a A) -> Result<Self> {
        Self::with_limit(alg, DEFAULT_BLOCK_LIMIT)
    }

    pub fn with_limit(alg: &'a A, size_limit: usize) -> Result<Self> {
        let unit = alg.unit();
        let (pivot, pivot_coeff) = unit
            .iter()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.clone()))
            .ok_or_else(|| Error::Config("algebra unit is zero".into()))?;
        // e_pivot = (1/u_p) * unit - sum_{k != p} (u_k / u_p) e_k, so modulo
        // the unit line the pivot expands over the remaining basis vectors.
        let mut pivot_expansion = SparseVec::new();
        for (k, c) in &unit {
            if *k == pivot || c.is_zero() {
                continue;
            }
            let reduced = if *k < pivot { *k } else { *k - 1 };
            pivot_expansion.push((reduced, -(c / &pivot_coeff)));
        }
        Ok(BarComplex { alg, pivot, pivot_expansion, size_limit })
    }

    pub fn algebra(&self) -> &A {
        self.alg
    }

    /// Dimension of the reduced slot space in a degree.
    pub fn reduced_dim(&self, degree: usize) -> usize {
        if degree == 0 {
            self.alg.dim(0).saturating_sub(1)
        } else {
            self.alg.dim(degree)
        }
    }

    /// Full basis index of a reduced slot element.
    fn lift(&self, degree: usize, reduced: usize) -> usize {
        if degree == 0 && reduced >= self.pivot {
            reduced + 1
        } else {
            reduced
        }
    }

    /// Project a full basis element into the reduced complement.
    fn reduce(&self, degree: usize, full: usize) -> SparseVec {
        if degree != 0 {
            return vec![(full, Rational::one())];
        }
        if full == self.pivot {
            self.pivot_expansion.clone()
        } else {
            let reduced = if full < self.pivot { full } else { full - 1 };
            vec![(reduced, Rational::one())]
        }
    }

    fn reduce_all(&self, degree: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            for (r, c2) in self.reduce(degree, *i) {
                out.push((r, c * &c2));
            }
        }
        out
    }

    /// Enumerate the `(q, D)` block.  Deterministic order: compositions of
    /// `D` into `q + 1` parts lexicographically, then basis indices
    /// mixed-radix, slot 0 fastest last.
    pub fn block(&self, q: usize, degree: usize) -> Result<BarBlock> {
        let mut tensors = Vec::new();
        let mut comp = vec![0u32; q + 1];
        self.enumerate(0, degree, q, &mut comp, &mut tensors)?;
        let index: HashMap<BarTensor, usize> =
            tensors.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let labels: Vec<usize> = tensors.iter().map(|t| self.label_of(t)).collect();
        let mut class_members = vec![Vec::new(); self.alg.class_count()];
        let mut class_position = vec![0usize; tensors.len()];
        for (i, &l) in labels.iter().enumerate() {
            class_position[i] = class_members[l].len();
            class_members[l].push(i);
        }
        Ok(BarBlock { q, degree, tensors, index, labels, class_members, class_position })
    }

    fn enumerate(
        &self,
        slot: usize,
        remaining: usize,
        q: usize,
        comp: &mut Vec<u32>,
        out: &mut Vec<BarTensor>,
    ) -> Result<()> {
        if slot == q + 1 {
            if remaining != 0 {
                return Ok(());
            }
            // Emit all index tuples for this composition.
            let radices: Vec<usize> = (0..=q)
                .map(|i| {
                    let d = comp[i] as usize;
                    if i == 0 {
                        self.alg.dim(d)
                    } else {
                        self.reduced_dim(d)
                    }
                })
                .collect();
            if radices.iter().any(|&r| r == 0) {
                return Ok(());
            }
            let total: usize = radices.iter().product();
            if out.len() + total > self.size_limit {
                return Err(Error::SizeLimitExceeded(format!(
                    "bar block (q={q}) exceeds {} tensors",
                    self.size_limit
                )));
            }
            let mut idx = vec![0u32; q + 1];
            loop {
                out.push(BarTensor { degrees: comp.clone(), indices: idx.clone() });
                // Increment mixed-radix counter, last slot fastest.
                let mut pos = q + 1;
                loop {
                    if pos == 0 {
                        return Ok(());
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if (idx[pos] as usize) < radices[pos] {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        for d in 0..=remaining {
            comp[slot] = d as u32;
            self.enumerate(slot + 1, remaining - d, q, comp, out)?;
        }
        Ok(())
    }

    fn label_of(&self, t: &BarTensor) -> usize {
        if self.alg.class_count() == 1 {
            return 0;
        }
        let sectors: Vec<usize> = (0..t.degrees.len())
            .map(|i| {
                let d = t.degrees[i] as usize;
                let full =
                    if i == 0 { t.indices[i] as usize } else { self.lift(d, t.indices[i] as usize) };
                self.alg.sector(d, full)
            })
            .collect();
        self.alg.class_of_sectors(&sectors)
    }

    /// Push `coeff * (tensor)` into a column, where the tensor is given by
    /// per-slot sparse values (slot 0 over the full basis, slots `>= 1`
    /// reduced).  Expands the cartesian product of the slots.
    fn emit(
        &self,
        target: &BarBlock,
        coeff: &Rational,
        slots: &[SparseVec],
        degrees: &[u32],
        col: &mut Vec<(usize, Rational)>,
    ) {
        let mut stack: Vec<(usize, Rational, Vec<u32>)> =
            vec![(0, coeff.clone(), Vec::with_capacity(slots.len()))];
        while let Some((pos, c, chosen)) = stack.pop() {
            if pos == slots.len() {
                let t = BarTensor { degrees: degrees.to_vec(), indices: chosen };
                let row = *target
                    .index
                    .get(&t)
                    .unwrap_or_else(|| panic!("bar term escaped its block: {t:?}"));
                col.push((row, c));
                continue;
            }
            for (i, v) in &slots[pos] {
                if v.is_zero() {
                    continue;
                }
                let mut next = chosen.clone();
                next.push(*i as u32);
                stack.push((pos + 1, &c * v, next));
            }
        }
    }

    fn single(&self, idx: u32) -> SparseVec {
        vec![(idx as usize, Rational::one())]
    }

    /// The differential `b` or `b'` from `(q, D)` to `(q - 1, D)`.
    pub fn differential(
        &self,
        src: &BarBlock,
        tgt: &BarBlock,
        include_cyclic: bool,
    ) -> SparseMatrix {
        assert!(src.q >= 1 && tgt.q + 1 == src.q && tgt.degree == src.degree);
        let q = src.q;
        let mut m = SparseMatrix::new(tgt.len());
        for t in &src.tensors {
            let mut col: Vec<(usize, Rational)> = Vec::new();
            let ds: Vec<usize> = t.degrees.iter().map(|&d| d as usize).collect();
            let lifted: Vec<usize> = (0..=q)
                .map(|i| {
                    if i == 0 {
                        t.indices[0] as usize
                    } else {
                        self.lift(ds[i], t.indices[i] as usize)
                    }
                })
                .collect();

            // Leading twisted term a_0 g(a_1) ⊗ a_2 ⊗ … .
            {
                let mut slot0 = SparseVec::new();
                for (j, c) in self.alg.twist(ds[1], lifted[1]) {
                    for (k, c2) in self.alg.product(ds[0], lifted[0], ds[1], j) {
                        slot0.push((k, &c * &c2));
                    }
                }
                let mut degrees: Vec<u32> = Vec::with_capacity(q);
                degrees.push((ds[0] + ds[1]) as u32);
                degrees.extend_from_slice(&t.degrees[2..]);
                let mut slots: Vec<SparseVec> = vec![slot0];
                slots.extend(t.indices[2..].iter().map(|&i| self.single(i)));
                self.emit(tgt, &Rational::one(), &slots, &degrees, &mut col);
            }

            // Interior merges (-1)^i a_0 ⊗ … ⊗ a_i a_{i+1} ⊗ … .
            for i in 1..q {
                let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                let prod = self.alg.product(ds[i], lifted[i], ds[i + 1], lifted[i + 1]);
                let merged = self.reduce_all(ds[i] + ds[i + 1], &prod);
                let mut degrees: Vec<u32> = Vec::with_capacity(q);
                degrees.extend_from_slice(&t.degrees[..i]);
                degrees.push((ds[i] + ds[i + 1]) as u32);
                degrees.extend_from_slice(&t.degrees[i + 2..]);
                let mut slots: Vec<SparseVec> = Vec::with_capacity(q);
                slots.push(self.single(t.indices[0]));
                slots.extend(t.indices[1..i].iter().map(|&x| self.single(x)));
                slots.push(merged);
                slots.extend(t.indices[i + 2..].iter().map(|&x| self.single(x)));
                self.emit(tgt, &sign, &slots, &degrees, &mut col);
            }

            // Cyclic term (-1)^q (a_q a_0) ⊗ a_1 ⊗ … ⊗ a_{q-1}.
            if include_cyclic {
                let sign = if q % 2 == 0 { Rational::one() } else { -Rational::one() };
                let slot0 = self.alg.product(ds[q], lifted[q], ds[0], lifted[0]);
                let mut degrees: Vec<u32> = Vec::with_capacity(q);
                degrees.push((ds[q] + ds[0]) as u32);
                degrees.extend_from_slice(&t.degrees[1..q]);
                let mut slots: Vec<SparseVec> = vec![slot0];
                slots.extend(t.indices[1..q].iter().map(|&x| self.single(x)));
                self.emit(tgt, &sign, &slots, &degrees, &mut col);
            }

            m.push_column(col);
        }
        m
    }

    /// Twisted extra degeneracy `s_g(x) = 1 ⊗ g^{-1}(a_0) ⊗ a_1 ⊗ …`,
    /// the contraction witnessing acyclicity of `b'_g`.
    pub fn contraction(&self, src: &BarBlock, tgt: &BarBlock) -> SparseMatrix {
        assert!(tgt.q == src.q + 1 && tgt.degree == src.degree);
        let mut m = SparseMatrix::new(tgt.len());
        for t in &src.tensors {
            let mut col: Vec<(usize, Rational)> = Vec::new();
            let d0 = t.degrees[0] as usize;
            let twisted = self.alg.twist_inverse(d0, t.indices[0] as usize);
            let slot1 = self.reduce_all(d0, &twisted);
            let mut degrees: Vec<u32> = Vec::with_capacity(src.q + 2);
            degrees.push(0);
            degrees.push(t.degrees[0]);
            degrees.extend_from_slice(&t.degrees[1..]);
            let mut slots: Vec<SparseVec> = Vec::with_capacity(src.q + 2);
            slots.push(self.alg.unit());
            slots.push(slot1);
            slots.extend(t.indices[1..].iter().map(|&x| self.single(x)));
            self.emit(tgt, &Rational::one(), &slots, &degrees, &mut col);
            m.push_column(col);
        }
        m
    }

    /// Connes boundary from `(q, D)` to `(q + 1, D)`: the k-th cyclic term
    /// prepends the unit and twists the `k + 1` slots that passed the
    /// basepoint (`a_{q-k+1}, …, a_q, a_0`) by `g^{-1}`, leaving the rest
    /// alone.  This is the chain-level map; descending to the
    /// twist-coinvariant (or equivalently twist-invariant) subspace is the
    /// caller's business.
    pub fn connes(&self, src: &BarBlock, tgt: &BarBlock) -> SparseMatrix {
        assert!(tgt.q == src.q + 1 && tgt.degree == src.degree);
        let q = src.q;
        let mut m = SparseMatrix::new(tgt.len());
        for t in &src.tensors {
            let mut col: Vec<(usize, Rational)> = Vec::new();
            let ds: Vec<usize> = t.degrees.iter().map(|&d| d as usize).collect();
            let lifted: Vec<usize> = (0..=q)
                .map(|i| {
                    if i == 0 {
                        t.indices[0] as usize
                    } else {
                        self.lift(ds[i], t.indices[i] as usize)
                    }
                })
                .collect();
            for k in 0..=q {
                // (-1)^{qk} (g^{-1} a_{q-k+1}, …, g^{-1} a_q, g^{-1} a_0,
                //            a_1, …, a_{q-k}), then prepend the unit; the
                // element a_0 sits at position k of the rotation, so slots
                // up to and including it are the twisted ones.
                let sign = if (q * k) % 2 == 0 { Rational::one() } else { -Rational::one() };
                let mut order: Vec<usize> = Vec::with_capacity(q + 1);
                order.extend(q - k + 1..=q);
                order.extend(0..=q - k);
                let mut degrees: Vec<u32> = Vec::with_capacity(q + 2);
                degrees.push(0);
                degrees.extend(order.iter().map(|&i| t.degrees[i]));
                let mut slots: Vec<SparseVec> = Vec::with_capacity(q + 2);
                slots.push(self.alg.unit());
                for (pos, &i) in order.iter().enumerate() {
                    let v = if pos <= k {
                        self.reduce_all(ds[i], &self.alg.twist_inverse(ds[i], lifted[i]))
                    } else {
                        self.single(t.indices[i])
                    };
                    slots.push(v);
                }
                self.emit(tgt, &sign, &slots, &degrees, &mut col);
            }
            m.push_column(col);
        }
        m
    }

    /// Diagonal action of an algebra endomorphism on a block: apply `endo`
    /// to every slot, projecting slots `>= 1` back into the complement.
    /// `endo(degree, full_index)` must fix the unit for this to be
    /// well-defined on the reduced complex.
    pub fn diagonal(
        &self,
        blk: &BarBlock,
        endo: &dyn Fn(usize, usize) -> SparseVec,
    ) -> SparseMatrix {
        let mut m = SparseMatrix::new(blk.len());
        for t in &blk.tensors {
            let mut col: Vec<(usize, Rational)> = Vec::new();
            let mut slots: Vec<SparseVec> = Vec::with_capacity(t.degrees.len());
            for i in 0..t.degrees.len() {
                let d = t.degrees[i] as usize;
                if i == 0 {
                    slots.push(endo(d, t.indices[0] as usize));
                } else {
                    let full = self.lift(d, t.indices[i] as usize);
                    slots.push(self.reduce_all(d, &endo(d, full)));
                }
            }
            self.emit(blk, &Rational::one(), &slots, &t.degrees, &mut col);
            m.push_column(col);
        }
        m
    }

    /// Restrict a block matrix to one class label: columns and rows are
    /// renumbered to the class-internal positions.  Panics if a column mixes
    /// classes, which would mean the label is not conserved.
    pub fn restrict_to_class(
        m: &SparseMatrix,
        src: &BarBlock,
        tgt: &BarBlock,
        class: usize,
    ) -> SparseMatrix {
        let mut out = SparseMatrix::new(tgt.class_members[class].len());
        for (j, col) in m.cols.iter().enumerate() {
            if src.labels[j] != class {
                continue;
            }
            let renumbered: Vec<(usize, Rational)> = col
                .iter()
                .map(|(r, v)| {
                    assert_eq!(tgt.labels[*r], class, "class label not conserved");
                    (tgt.class_position[*r], v.clone())
                })
                .collect();
            out.push_column(renumbered);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    /// The polynomial ring Q[x] with the twist x -> -x, hand-rolled so the
    /// engine can be exercised without the full polynomial algebra type.
    struct SignLine;

    impl GradedAlgebra for SignLine {
        fn dim(&self, _degree: usize) -> usize {
            1
        }
        fn unit(&self) -> SparseVec {
            vec![(0, rat(1))]
        }
        fn product(&self, _ad: usize, _ai: usize, _bd: usize, _bi: usize) -> SparseVec {
            vec![(0, rat(1))]
        }
        fn twist(&self, degree: usize, _index: usize) -> SparseVec {
            vec![(0, if degree % 2 == 0 { rat(1) } else { rat(-1) })]
        }
        fn twist_inverse(&self, degree: usize, index: usize) -> SparseVec {
            self.twist(degree, index)
        }
    }

    #[test]
    fn block_sizes_for_one_variable() {
        let bar = BarComplex::new(&SignLine).unwrap();
        // (q=1, D=2): compositions (0,2) and (1,1); slot 1 needs degree >= 1.
        let blk = bar.block(1, 2).unwrap();
        assert_eq!(blk.len(), 2);
        // (q=2, D=2): only (0,1,1).
        assert_eq!(bar.block(2, 2).unwrap().len(), 1);
        // Degree 0 reduced slots are empty: (q=1, D=0) has no tensors.
        assert_eq!(bar.block(1, 0).unwrap().len(), 0);
    }

    #[test]
    fn twisted_b_on_x_tensor_x() {
        // b_g(x ⊗ x) = x g(x) - x x = -2 x^2 for g = -1.
        let bar = BarComplex::new(&SignLine).unwrap();
        let src = bar.block(1, 2).unwrap();
        let tgt = bar.block(0, 2).unwrap();
        let b = bar.differential(&src, &tgt, true);
        let x_tensor_x =
            src.index[&BarTensor { degrees: vec![1, 1], indices: vec![0, 0] }];
        assert_eq!(b.cols[x_tensor_x], vec![(0, rat(-2))]);
    }

    #[test]
    fn b_squared_vanishes() {
        let bar = BarComplex::new(&SignLine).unwrap();
        for d in 0..=4usize {
            for q in 2..=4usize {
                let b2 = bar.block(q, d).unwrap();
                let b1 = bar.block(q - 1, d).unwrap();
                let b0 = bar.block(q - 2, d).unwrap();
                let outer = bar.differential(&b1, &b0, true);
                let inner = bar.differential(&b2, &b1, true);
                assert!(outer.composes_to_zero_with(&inner), "b^2 != 0 at q={q} D={d}");
            }
        }
    }

    #[test]
    fn contraction_is_a_homotopy() {
        // s_g b' + b' s_g = id on every block of the sign line.
        let bar = BarComplex::new(&SignLine).unwrap();
        for d in 1..=4usize {
            for q in 1..=3usize {
                let cur = bar.block(q, d).unwrap();
                if cur.is_empty() {
                    continue;
                }
                let below = bar.block(q - 1, d).unwrap();
                let above = bar.block(q + 1, d).unwrap();
                let bp_out = bar.differential(&cur, &below, false).to_dense();
                let bp_in = bar.differential(&above, &cur, false).to_dense();
                let s_up = bar.contraction(&cur, &above).to_dense();
                let s_down = bar.contraction(&below, &cur).to_dense();
                let lhs = bp_in.mul(&s_up).unwrap().add(&s_down.mul(&bp_out).unwrap()).unwrap();
                assert_eq!(
                    lhs,
                    crate::exactla::RationalMatrix::identity(cur.len()),
                    "homotopy identity fails at q={q} D={d}"
                );
            }
        }
    }
}
