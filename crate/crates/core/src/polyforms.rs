//! Polynomial differential forms on affine space, graded exactly.
//!
//! A form space is indexed by `(m, c, q)`: `m` variables, homogeneous
//! polynomial coefficients of degree `c`, and form degree `q`.  Its basis is
//! the set of pairs (monomial of degree `c`, `q`-element subset of the
//! variables), ordered lexicographically monomial-major.  The total internal
//! degree of such a basis form is `c + q`, matching the grading of the bar
//! and Koszul complexes where `dx_i` carries degree 1.
//!
//! The group action on forms here is pullback by the inverse,
//! `g · ω := (g^{-1})^* ω`, which makes [`action_on_forms`] a homomorphism.
//! This is the only place in the crate where an inverse is inserted; the
//! twisted bar complex acts on plain polynomials by precomposition, see the
//! discussion in [`crate::hochschild`].

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exactla::{rat, Rational, RationalMatrix};
use crate::{Error, Result};

/// Binomial coefficient as usize; saturates are impossible at the sizes the
/// crate handles, so overflow panics loudly instead.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.try_into().expect("binomial fits usize")
}

/// All exponent vectors of total degree `d` in `m` variables, ascending
/// lexicographic.  With no variables there is a single empty monomial in
/// degree 0 and nothing in positive degree.
pub fn monomials_of_degree(m: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    fn rec(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for e in 0..=remaining {
            cur[pos] = e;
            rec(pos + 1, remaining - e, cur, out);
        }
    }
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d as u32, &mut cur, &mut out);
    out
}

/// All `q`-element subsets of `{0, .., m-1}`, lexicographic.
pub fn subsets(m: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(start: usize, m: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, q, cur, out);
            cur.pop();
        }
    }
    rec(0, m, q, &mut cur, &mut out);
    out
}

/// Dimension of the space of `q`-forms with homogeneous degree-`c`
/// coefficients in `m` variables.
pub fn form_space_dim(m: usize, c: usize, q: usize) -> usize {
    if m == 0 {
        return usize::from(c == 0 && q == 0);
    }
    binomial(m + c - 1, c) * binomial(m, q)
}

/// Basis bookkeeping for one graded piece of the de Rham complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFormSpace {
    vars: usize,
    coeff_degree: usize,
    form_degree: usize,
    monomials: Vec<Vec<u32>>,
    subsets: Vec<Vec<usize>>,
    mono_index: HashMap<Vec<u32>, usize>,
    subset_index: HashMap<Vec<usize>, usize>,
}

impl GradedFormSpace {
    pub fn new(vars: usize, coeff_degree: usize, form_degree: usize) -> Self {
        let monomials = monomials_of_degree(vars, coeff_degree);
        let subsets = subsets(vars, form_degree);
        let mono_index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let subset_index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        GradedFormSpace {
            vars,
            coeff_degree,
            form_degree,
            monomials,
            subsets,
            mono_index,
            subset_index,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coeff_degree(&self) -> usize {
        self.coeff_degree
    }

    pub fn form_degree(&self) -> usize {
        self.form_degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len() * self.subsets.len()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn basis_index(&self, mono: &[u32], subset: &[usize]) -> usize {
        let mi = self.mono_index[mono];
        let si = self.subset_index[subset];
        mi * self.subsets.len() + si
    }

    pub fn zero_form(&self) -> PolyForm {
        PolyForm { space: self.clone(), coeffs: vec![Rational::zero(); self.dim()] }
    }

    /// Basis form number `i`.
    pub fn basis_form(&self, i: usize) -> PolyForm {
        let mut f = self.zero_form();
        f.coeffs[i] = Rational::one();
        f
    }
}

/// A polynomial differential form with exact rational coefficients, living
/// in a fixed graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyForm {
    pub space: GradedFormSpace,
    pub coeffs: Vec<Rational>,
}

impl PolyForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Exterior differential `(m, c, q) -> (m, c-1, q+1)`.  Constant
/// coefficients are killed; the result is then the zero form of coefficient
/// degree 0.
pub fn de_rham_d(form: &PolyForm) -> PolyForm {
    let s = &form.space;
    if s.coeff_degree == 0 {
        return GradedFormSpace::new(s.vars, 0, s.form_degree + 1).zero_form();
    }
    let target = GradedFormSpace::new(s.vars, s.coeff_degree - 1, s.form_degree + 1);
    let mut out = target.zero_form();
    for (mi, mono) in s.monomials.iter().enumerate() {
        for (si, sub) in s.subsets.iter().enumerate() {
            let c = &form.coeffs[mi * s.subsets.len() + si];
            if c.is_zero() {
                continue;
            }
            for i in 0..s.vars {
                if mono[i] == 0 {
                    continue;
                }
                let Some((sign, new_sub)) = wedge_insert(i, sub) else { continue };
                let mut new_mono = mono.clone();
                new_mono[i] -= 1;
                let idx = out.space.basis_index(&new_mono, &new_sub);
                out.coeffs[idx] += c * rat(i64::from(mono[i]) * i64::from(sign));
            }
        }
    }
    out
}

/// Insert index `i` into a sorted subset, returning the wedge sign
/// `(-1)^{#{s in sub : s < i}}`, or `None` if `i` is already present.
pub fn wedge_insert(i: usize, sub: &[usize]) -> Option<(i8, Vec<usize>)> {
    if sub.contains(&i) {
        return None;
    }
    let pos = sub.iter().take_while(|&&s| s < i).count();
    let mut new_sub = sub.to_vec();
    new_sub.insert(pos, i);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((sign, new_sub))
}

/// Substitute `x_i = sum_j M[i][j] u_j` into the monomial `x^alpha` and
/// return the dense coefficient vector over monomials of the same degree in
/// `k = M.cols()` variables, in `monomials_of_degree` order.
pub fn substitute_monomial(alpha: &[u32], m: &RationalMatrix) -> Vec<Rational> {
    let k = m.cols();
    // Iteratively multiply by linear forms; acc is dense over monomials of
    // the current degree.
    let mut deg = 0usize;
    let mut acc = vec![Rational::one()];
    for (i, &e) in alpha.iter().enumerate() {
        for _ in 0..e {
            let cur = monomials_of_degree(k, deg);
            let next = monomials_of_degree(k, deg + 1);
            let next_index: HashMap<&[u32], usize> =
                next.iter().enumerate().map(|(p, mm)| (mm.as_slice(), p)).collect();
            let mut new_acc = vec![Rational::zero(); next.len()];
            for (p, mono) in cur.iter().enumerate() {
                if acc[p].is_zero() {
                    continue;
                }
                for j in 0..k {
                    let c = m.get(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut bumped = mono.clone();
                    bumped[j] += 1;
                    let idx = next_index[bumped.as_slice()];
                    new_acc[idx] += &acc[p] * c;
                }
            }
            acc = new_acc;
            deg += 1;
        }
    }
    acc
}

/// Pullback of a form along the linear map with matrix `M` (meaning the
/// substitution `x_i = sum_j M[i][j] u_j`, `dx_i = sum_j M[i][j] du_j`).
/// `M` has `m` rows (ambient variables) and `k` columns (new variables).
pub fn pullback_linear(form: &PolyForm, m: &RationalMatrix) -> Result<PolyForm> {
    let s = &form.space;
    if m.rows() != s.vars {
        return Err(Error::Config(format!(
            "pullback matrix has {} rows but the form lives on {} variables",
            m.rows(),
            s.vars
        )));
    }
    let k = m.cols();
    let target = GradedFormSpace::new(k, s.coeff_degree, s.form_degree);
    let mut out = target.zero_form();
    if target.dim() == 0 {
        return Ok(out);
    }
    let target_subsets = subsets(k, s.form_degree);
    for (mi, mono) in s.monomials.iter().enumerate() {
        // Substituted coefficient polynomial, shared across subsets.
        let mut coeff_cache: Option<Vec<Rational>> = None;
        for (si, sub) in s.subsets.iter().enumerate() {
            let c = &form.coeffs[mi * s.subsets.len() + si];
            if c.is_zero() {
                continue;
            }
            let poly = coeff_cache
                .get_or_insert_with(|| substitute_monomial(mono, m))
                .clone();
            // dx_S pulls back to sum over target subsets T of det(M[S,T]) du_T.
            for t in &target_subsets {
                let minor = RationalMatrix::from_fn(sub.len(), sub.len(), |a, b| {
                    m.get(sub[a], t[b]).clone()
                });
                let det = minor.determinant()?;
                if det.is_zero() {
                    continue;
                }
                for (p, v) in poly.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let idx = out.space.basis_index(&out.space.monomials[p].clone(), t);
                    out.coeffs[idx] += c * v * &det;
                }
            }
        }
    }
    Ok(out)
}

/// Restrict a form on `Q^m` to the subspace spanned by `basis` (vectors of
/// length `m`), i.e. pull back along the inclusion.  The result lives on
/// `k = basis.len()` variables, the coordinates dual to the given basis.
pub fn restrict_form(form: &PolyForm, basis: &[Vec<Rational>]) -> Result<PolyForm> {
    let m = form.space.vars;
    let incl = RationalMatrix::from_columns(basis, m);
    pullback_linear(form, &incl)
}

/// Matrix of the action of `g` on the form space `(m, c, q)`, defined as
/// pullback by `g^{-1}` so that `action(g h) = action(g) · action(h)`.
pub fn action_on_forms(g: &RationalMatrix, c: usize, q: usize) -> Result<RationalMatrix> {
    let m = g.rows();
    let h = g.inverse()?;
    let space = GradedFormSpace::new(m, c, q);
    let mut out = RationalMatrix::zeros(space.dim(), space.dim());
    for i in 0..space.dim() {
        let img = pullback_linear(&space.basis_form(i), &h)?;
        for r in 0..space.dim() {
            out.set(r, i, img.coeffs[r].clone());
        }
    }
    Ok(out)
}

/// Matrix of `de_rham_d` from `(m, c, q)` to `(m, c-1, q+1)`.
pub fn de_rham_matrix(m: usize, c: usize, q: usize) -> RationalMatrix {
    let source = GradedFormSpace::new(m, c, q);
    let target_dim = if c == 0 {
        GradedFormSpace::new(m, 0, q + 1).dim()
    } else {
        GradedFormSpace::new(m, c - 1, q + 1).dim()
    };
    let mut out = RationalMatrix::zeros(target_dim, source.dim());
    if c == 0 {
        return out;
    }
    for i in 0..source.dim() {
        let img = de_rham_d(&source.basis_form(i));
        for r in 0..target_dim {
            out.set(r, i, img.coeffs[r].clone());
        }
    }
    out
}
