//! Finite groups of linear, monomial, and algebra automorphisms.
//!
//! Group elements come in three kinds, matching the three kinds of carrier
//! the homology engine accepts:
//!
//! * `Linear`: an invertible rational matrix acting on affine space.
//! * `Monomial`: an automorphism of the algebraic torus of the shape
//!   `(g · t)_i = ζ_i t_{π(i)}`, stored as the permutation `π` together with
//!   the exponents of the roots of unity `ζ_i = e(shift_i)` as rationals
//!   mod 1.  Note the type cannot express coordinate inversions
//!   `t_i -> t_i^{-1}`; only rotation-translation symmetries are supported.
//! * `AlgebraAuto`: an automorphism of a finite-dimensional algebra, stored
//!   as its matrix on the distinguished basis.  Construct these through
//!   `FinDimAlgebra::automorphism`, which verifies that the matrix preserves
//!   the product and the unit; the raw constructor here only checks
//!   invertibility.
//!
//! Composition convention: `compose(g, h)` is the map `t -> g(h(t))`.  For
//! monomial elements this works out to `π_{gh}(i) = π_h(π_g(i))` and
//! `shift_{gh}(i) = shift_g(i) + shift_h(π_g(i))`, which is what the rest of
//! the crate relies on when transporting group actions to fixed tori.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactla::{rat, Rational, RationalMatrix};
use crate::{Error, Result};

/// One element of a symmetry group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupElement {
    /// Invertible matrix acting on affine space.
    Linear(RationalMatrix),
    /// Monomial torus map `(g · t)_i = e(shift_i) t_{perm[i]}`.
    Monomial { perm: Vec<usize>, shift: Vec<Rational> },
    /// Automorphism of a finite-dimensional algebra, as a basis matrix.
    AlgebraAuto(RationalMatrix),
}

impl GroupElement {
    /// Linear element; the matrix must be square and invertible.
    pub fn linear(m: RationalMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Config("linear group element must be square".into()));
        }
        if m.rank() != m.rows() {
            return Err(Error::Config("linear group element must be invertible".into()));
        }
        Ok(GroupElement::Linear(m))
    }

    /// Algebra automorphism element; the matrix must be square and
    /// invertible.  Multiplicativity is checked by the finite-dimensional
    /// algebra it belongs to, not here.
    pub fn algebra_auto(m: RationalMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Config("algebra automorphism must be square".into()));
        }
        if m.rank() != m.rows() {
            return Err(Error::Config("algebra automorphism must be invertible".into()));
        }
        Ok(GroupElement::AlgebraAuto(m))
    }

    /// Monomial element from a permutation (0-based, `i -> perm[i]`) and
    /// rational shifts, which are reduced mod 1 at construction.
    pub fn monomial(perm: Vec<usize>, shift: Vec<Rational>) -> Result<Self> {
        let n = perm.len();
        if shift.len() != n {
            return Err(Error::Config("permutation and shift lengths differ".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Config("invalid permutation in monomial element".into()));
            }
            seen[p] = true;
        }
        Ok(GroupElement::Monomial { perm, shift: shift.into_iter().map(reduce_mod_1).collect() })
    }

    /// Ambient dimension (matrix size or number of torus coordinates).
    pub fn dimension(&self) -> usize {
        match self {
            GroupElement::Linear(m) | GroupElement::AlgebraAuto(m) => m.rows(),
            GroupElement::Monomial { perm, .. } => perm.len(),
        }
    }

    fn kind_tag(&self) -> &'static str {
        match self {
            GroupElement::Linear(_) => "linear",
            GroupElement::Monomial { .. } => "monomial",
            GroupElement::AlgebraAuto(_) => "algebra",
        }
    }

    /// Identity element of the same kind and dimension.
    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Linear(m) => GroupElement::Linear(RationalMatrix::identity(m.rows())),
            GroupElement::AlgebraAuto(m) => {
                GroupElement::AlgebraAuto(RationalMatrix::identity(m.rows()))
            }
            GroupElement::Monomial { perm, .. } => GroupElement::Monomial {
                perm: (0..perm.len()).collect(),
                shift: vec![Rational::zero(); perm.len()],
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        self == &self.identity_like()
    }

    /// `g ∘ h`, the map `t -> g(h(t))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::Linear(a), GroupElement::Linear(b)) => {
                Ok(GroupElement::Linear(a.mul(b)?))
            }
            (GroupElement::AlgebraAuto(a), GroupElement::AlgebraAuto(b)) => {
                Ok(GroupElement::AlgebraAuto(a.mul(b)?))
            }
            (
                GroupElement::Monomial { perm: pg, shift: sg },
                GroupElement::Monomial { perm: ph, shift: sh },
            ) => {
                if pg.len() != ph.len() {
                    return Err(Error::Config("monomial elements of different rank".into()));
                }
                let perm: Vec<usize> = (0..pg.len()).map(|i| ph[pg[i]]).collect();
                let shift: Vec<Rational> = (0..pg.len())
                    .map(|i| reduce_mod_1(&sg[i] + &sh[pg[i]]))
                    .collect();
                Ok(GroupElement::Monomial { perm, shift })
            }
            _ => Err(Error::Config(format!(
                "cannot compose a {} element with a {} element",
                self.kind_tag(),
                other.kind_tag()
            ))),
        }
    }

    /// Multiplicative order, by iterating composition.  Errors out past the
    /// limit, which catches infinite-order inputs.
    pub fn order(&self, limit: usize) -> Result<usize> {
        let id = self.identity_like();
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc == id {
                return Ok(k);
            }
            acc = acc.compose(self)?;
        }
        Err(Error::SizeLimitExceeded(format!("element order exceeds {limit}")))
    }

    /// Inverse element.
    pub fn inverse(&self) -> Result<Self> {
        match self {
            GroupElement::Linear(m) => Ok(GroupElement::Linear(m.inverse()?)),
            GroupElement::AlgebraAuto(m) => Ok(GroupElement::AlgebraAuto(m.inverse()?)),
            GroupElement::Monomial { perm, shift } => {
                let n = perm.len();
                let mut inv_perm = vec![0usize; n];
                for i in 0..n {
                    inv_perm[perm[i]] = i;
                }
                let shift = (0..n).map(|i| reduce_mod_1(-&shift[inv_perm[i]])).collect();
                Ok(GroupElement::Monomial { perm: inv_perm, shift })
            }
        }
    }

    /// The linear matrix, if this is a linear element.
    pub fn as_linear(&self) -> Option<&RationalMatrix> {
        match self {
            GroupElement::Linear(m) => Some(m),
            _ => None,
        }
    }

    /// The automorphism matrix, if this is an algebra element.
    pub fn as_algebra_auto(&self) -> Option<&RationalMatrix> {
        match self {
            GroupElement::AlgebraAuto(m) => Some(m),
            _ => None,
        }
    }

    /// Stable text key used for dedup during closure.
    fn canonical_key(&self) -> String {
        self.to_string()
    }
}

fn reduce_mod_1(x: Rational) -> Rational {
    let f = x.floor();
    let r = x - f;
    debug_assert!(!r.is_negative() && r < Rational::one());
    r
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Linear(m) => write!(f, "linear{}", matrix_text(m)),
            GroupElement::AlgebraAuto(m) => write!(f, "auto{}", matrix_text(m)),
            GroupElement::Monomial { perm, shift } => {
                write!(f, "monomial(perm {}", cycle_text(perm))?;
                if shift.iter().any(|s| !s.is_zero()) {
                    let parts: Vec<String> = shift.iter().map(ToString::to_string).collect();
                    write!(f, ", shift [{}]", parts.join(", "))?;
                }
                write!(f, ")")
            }
        }
    }
}

fn matrix_text(m: &RationalMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Cycle notation with 1-based coordinates; fixed points omitted.
pub fn cycle_text(perm: &[usize]) -> String {
    let cycles = permutation_cycles(perm);
    let nontrivial: Vec<String> = cycles
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let xs: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            format!("({})", xs.join(" "))
        })
        .collect();
    if nontrivial.is_empty() {
        "id".to_string()
    } else {
        nontrivial.concat()
    }
}

/// Cycles of a permutation, each starting at its least element, listed in
/// order of least element.  Cycles follow the map `i -> perm[i]`.
pub fn permutation_cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = perm[start];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = perm[cur];
        }
        cycles.push(cycle);
    }
    cycles
}

/// A finite group with a fixed element order: identity first, then the
/// breadth-first closure of the generators.  The multiplication table is
/// materialized for groups up to a fixed size; beyond that products are
/// computed on demand (the closure bound itself is the only hard limit).
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    index: HashMap<String, usize>,
    table: Option<Vec<u32>>,
    inverse: Vec<usize>,
}

const TABLE_LIMIT: usize = 2048;

/// Default bound on the closure size.
pub const DEFAULT_GROUP_LIMIT: usize = 20000;

/// Close a generating set under composition.  All generators must share a
/// kind and dimension.  Since any element of a finite group has finite
/// order, closing under products alone already yields the full subgroup;
/// exceeding `limit` aborts with a size error (this is also what catches
/// infinite-order generators).
pub fn close_group(generators: &[GroupElement], limit: usize) -> Result<FiniteGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Config("close_group needs at least one generator".into()))?;
    for g in generators {
        if g.kind_tag() != first.kind_tag() || g.dimension() != first.dimension() {
            return Err(Error::Config(
                "generators must all have the same kind and dimension".into(),
            ));
        }
    }
    let identity = first.identity_like();
    let mut elements = vec![identity];
    let mut index = HashMap::new();
    index.insert(elements[0].canonical_key(), 0usize);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in generators {
            let prod = elements[i].compose(g)?;
            let key = prod.canonical_key();
            if !index.contains_key(&key) {
                if elements.len() >= limit {
                    return Err(Error::SizeLimitExceeded(format!(
                        "group closure exceeds {limit} elements"
                    )));
                }
                index.insert(key, elements.len());
                frontier.push(elements.len());
                elements.push(prod);
            }
        }
    }

    let n = elements.len();
    let table = if n <= TABLE_LIMIT {
        let mut t = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = elements[i].compose(&elements[j])?;
                let k = *index
                    .get(&prod.canonical_key())
                    .ok_or_else(|| Error::Internal("closure is not closed".into()))?;
                t[i * n + j] = k as u32;
            }
        }
        Some(t)
    } else {
        None
    };

    let mut group = FiniteGroup { elements, index, table, inverse: Vec::new() };
    let mut inverse = vec![usize::MAX; n];
    for i in 0..n {
        let inv = group.elements[i].inverse()?;
        let k = group
            .index
            .get(&inv.canonical_key())
            .copied()
            .ok_or_else(|| Error::Internal("inverse escaped the closure".into()))?;
        inverse[i] = k;
    }
    group.inverse = inverse;
    debug_assert!(group.elements[0].is_identity());
    Ok(group)
}

/// A conjugacy class: deterministic representative (lowest element index)
/// plus all member indices in increasing order.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(&g.canonical_key()).copied()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        if let Some(t) = &self.table {
            return t[i * self.order() + j] as usize;
        }
        let prod = self.elements[i].compose(&self.elements[j]).expect("closed under product");
        self.index_of(&prod).expect("closed under product")
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Conjugacy classes ordered by representative index; the identity
    /// class always comes first.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for rep in 0..n {
            if assigned[rep] {
                continue;
            }
            let mut members = Vec::new();
            for a in 0..n {
                let conj = self.product(self.product(a, rep), self.inverse[a]);
                if !assigned[conj] {
                    assigned[conj] = true;
                    members.push(conj);
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: rep, members });
        }
        classes
    }

    /// Indices of all elements commuting with `g`, increasing.
    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&c| self.product(c, g) == self.product(g, c)).collect()
    }
}

/// The symmetric group `S_n` acting on the torus `T^n` by permuting
/// coordinates, generated by adjacent transpositions.
pub fn symmetric_group_on_torus(n: usize, limit: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Config("symmetric group needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n == 1 {
        gens.push(GroupElement::monomial(vec![0], vec![Rational::zero()])?);
    }
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(GroupElement::monomial(perm, vec![Rational::zero(); n])?);
    }
    close_group(&gens, limit)
}

/// The symmetric group `S_n` acting on affine n-space by permutation
/// matrices.
pub fn symmetric_group_linear(n: usize, limit: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Config("symmetric group needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n == 1 {
        gens.push(GroupElement::linear(RationalMatrix::identity(1))?);
    }
    for i in 0..n.saturating_sub(1) {
        let mut m = RationalMatrix::identity(n);
        m.set(i, i, rat(0));
        m.set(i + 1, i + 1, rat(0));
        m.set(i, i + 1, rat(1));
        m.set(i + 1, i, rat(1));
        gens.push(GroupElement::linear(m)?);
    }
    close_group(&gens, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ratio;

    #[test]
    fn s3_linear_closure_and_classes() {
        let g = symmetric_group_linear(3, 100).unwrap();
        assert_eq!(g.order(), 6);
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(classes[0].representative, 0);
    }

    #[test]
    fn orbit_stabilizer_on_s4_torus() {
        let g = symmetric_group_on_torus(4, 100).unwrap();
        assert_eq!(g.order(), 24);
        for i in 0..g.order() {
            let class_size = g
                .conjugacy_classes()
                .into_iter()
                .find(|c| c.members.contains(&i))
                .unwrap()
                .members
                .len();
            assert_eq!(class_size * g.centralizer(i).len(), g.order());
        }
    }

    #[test]
    fn centralizer_of_double_transposition_in_s4() {
        let g = symmetric_group_on_torus(4, 100).unwrap();
        let elt = GroupElement::monomial(vec![1, 0, 3, 2], vec![Rational::zero(); 4]).unwrap();
        let idx = g.index_of(&elt).unwrap();
        assert_eq!(g.centralizer(idx).len(), 8);
    }

    #[test]
    fn monomial_composition_convention() {
        // g: t -> (e(1/2) t_2, t_1) i.e. perm [1,0], shift [1/2, 0].
        // h: t -> (t_1, e(1/3) t_2).
        let g = GroupElement::monomial(vec![1, 0], vec![ratio(1, 2), rat(0)]).unwrap();
        let h = GroupElement::monomial(vec![0, 1], vec![rat(0), ratio(1, 3)]).unwrap();
        // (g∘h)(t)_1 = e(1/2) (h t)_2 = e(1/2) e(1/3) t_2.
        let gh = g.compose(&h).unwrap();
        assert_eq!(
            gh,
            GroupElement::monomial(vec![1, 0], vec![ratio(5, 6), rat(0)]).unwrap()
        );
    }

    #[test]
    fn monomial_inverse_and_order() {
        let g = GroupElement::monomial(vec![1, 0], vec![ratio(1, 2), rat(0)]).unwrap();
        let inv = g.inverse().unwrap();
        assert!(g.compose(&inv).unwrap().is_identity());
        // g^2 = shift by 1/2 on both coordinates; order is 4.
        assert_eq!(g.order(100).unwrap(), 4);
    }

    #[test]
    fn shifts_are_reduced_mod_1() {
        let g = GroupElement::monomial(vec![0], vec![ratio(7, 2)]).unwrap();
        let h = GroupElement::monomial(vec![0], vec![ratio(-1, 2)]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn closure_limit_is_enforced() {
        let g = symmetric_group_on_torus(4, 10);
        match g {
            Err(Error::SizeLimitExceeded(_)) => {}
            other => panic!("expected SizeLimitExceeded, got {other:?}"),
        }
    }

    #[test]
    fn infinite_order_generator_is_caught() {
        let m = GroupElement::linear(RationalMatrix::from_i64(&[&[2]])).unwrap();
        match close_group(&[m], 50) {
            Err(Error::SizeLimitExceeded(_)) => {}
            other => panic!("expected SizeLimitExceeded, got {other:?}"),
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        match GroupElement::linear(RationalMatrix::from_i64(&[&[1, 1], &[1, 1]])) {
            Err(Error::Config(_)) => {}
            other => panic!("expected Config error, got {other:?}"),
        }
    }

    #[test]
    fn mixed_kinds_rejected() {
        let a = GroupElement::linear(RationalMatrix::identity(1)).unwrap();
        let b = GroupElement::monomial(vec![0], vec![rat(0)]).unwrap();
        match close_group(&[a, b], 10) {
            Err(Error::Config(_)) => {}
            other => panic!("expected Config error, got {other:?}"),
        }
    }

    #[test]
    fn cycle_text_formatting() {
        assert_eq!(cycle_text(&[1, 0, 3, 2]), "(1 2)(3 4)");
        assert_eq!(cycle_text(&[0, 1]), "id");
    }
}
